//! Graded law checks for the lemmas about compatibility, saturations and
//! reductions, and a runner that quantifies them over SAT(S) × RED(S).

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::galois::{
    aa, agreement, all_reductions, all_saturations, jj, join_reductions,
    meet_saturations, op_eq_degree, positivity_law, random_reduction, random_saturation,
    red_meet, sat_join, Reduction, Saturation,
};
use crate::heyting::Elem;
use crate::hset::Space;
use crate::optable::{classify, compat_degree, incl_degree, pointwise_join, Operator};
use crate::report::{Graded, Infimum, LawReport, Status, Witness};

fn graded_report(law: &str, space: &Space, g: Graded, components: Vec<(String, Elem)>) -> LawReport {
    let mut r = LawReport::from_degree(law, space.algebra(), g);
    r.components = components;
    r
}

fn implication(law: &str, space: &Space, premise: Elem, conclusion: Graded, names: (&str, &str)) -> LawReport {
    let h = space.algebra();
    let degree = h.imp(premise, conclusion.degree);
    let witness = if degree == h.top() { None } else { conclusion.witness };
    graded_report(
        law,
        space,
        Graded { degree, witness },
        vec![(names.0.to_string(), premise), (names.1.to_string(), conclusion.degree)],
    )
}

/// `⋀_i (O ⋉ O_i) ⇒ O ⋉ ⋁_i O_i`.
pub fn compat_union_left(o: &Operator, os: &[Operator]) -> Result<LawReport> {
    let space = o.space();
    let h = space.algebra();
    let premise = h.big_meet(os.iter().map(|oi| compat_degree(o, oi).map(|g| g.degree)).collect::<Result<Vec<_>>>()?);
    let join = pointwise_join(space, os)?;
    Ok(implication("compat-union-left", space, premise, compat_degree(o, &join)?, ("all O compat O_i", "O compat join")))
}

/// `⋀_i (O_i ⋉ O) ⇒ ⋁_i O_i ⋉ O`.
pub fn compat_union_right(os: &[Operator], o: &Operator) -> Result<LawReport> {
    let space = o.space();
    let h = space.algebra();
    let premise = h.big_meet(os.iter().map(|oi| compat_degree(oi, o).map(|g| g.degree)).collect::<Result<Vec<_>>>()?);
    let join = pointwise_join(space, os)?;
    Ok(implication("compat-union-right", space, premise, compat_degree(&join, o)?, ("all O_i compat O", "join compat O")))
}

/// The three down-closure properties of compatibility for arbitrary operators:
/// shrinking the left side, precomposing on the left, postcomposing on the right.
pub fn compat_closure_laws(o: &Operator, o1: &Operator, o2: &Operator) -> Result<LawReport> {
    let space = o.space();
    let h = space.algebra();
    let c = compat_degree(o, o1)?.degree;
    let sub = incl_degree(o2, o)?.degree;
    let item1 = h.imp(h.meet(sub, c), compat_degree(o2, o1)?.degree);
    let c2 = compat_degree(o2, o1)?.degree;
    let item2 = h.imp(h.meet(c, c2), compat_degree(&o.compose(o2)?, o1)?.degree);
    let item3 = h.imp(c, compat_degree(o, &o1.compose(o2)?)?.degree);
    let g = Graded {
        degree: h.big_meet([item1, item2, item3]),
        witness: None,
    };
    Ok(graded_report(
        "compat-closure",
        space,
        g,
        vec![
            ("shrink left".into(), item1),
            ("compose left".into(), item2),
            ("compose right".into(), item3),
        ],
    ))
}

/// Compatibility of a saturation with a reduction survives shrinking either.
pub fn compat_down_closed(
    a: &Saturation,
    a_small: &Saturation,
    j: &Reduction,
    j_small: &Reduction,
) -> Result<LawReport> {
    let space = a.space();
    let h = space.algebra();
    let c = compat_degree(a.op(), j.op())?.degree;
    let left = h.imp(
        h.meet(incl_degree(a_small.op(), a.op())?.degree, c),
        compat_degree(a_small.op(), j.op())?.degree,
    );
    let right = h.imp(
        h.meet(incl_degree(j_small.op(), j.op())?.degree, c),
        compat_degree(a.op(), j_small.op())?.degree,
    );
    Ok(graded_report(
        "compat-down-closed",
        space,
        Graded {
            degree: h.meet(left, right),
            witness: None,
        },
        vec![("smaller saturation".into(), left), ("smaller reduction".into(), right)],
    ))
}

/// Degree of `Fix(O1) ⊆ Fix(O2)`: `⋀_U ([O1 U = U] ⇒ [O2 U = U])`.
pub fn fix_incl_degree(o1: &Operator, o2: &Operator) -> Result<Graded> {
    let space = o1.space();
    let h = space.algebra();
    let mut inf = Infimum::new(h);
    for u in space.universe()? {
        let d = h.imp(space.eq_degree(&o1.eval(u), u), space.eq_degree(&o2.eval(u), u));
        inf.push(d, || Witness::subsets(vec![u.clone()]));
    }
    Ok(inf.finish())
}

/// `A1 ⊆ A2 ⇔ A2A1 = A2 ⇔ A1A2 = A2 ⇔ Fix(A2) ⊆ Fix(A1)`.
pub fn order_equivalences_sat(a1: &Saturation, a2: &Saturation) -> Result<LawReport> {
    let space = a1.space();
    let (o1, o2) = (a1.op(), a2.op());
    let ds = [
        ("A1 <= A2", incl_degree(o1, o2)?.degree),
        ("A2.A1 = A2", op_eq_degree(&o2.compose(o1)?, o2)?.degree),
        ("A1.A2 = A2", op_eq_degree(&o1.compose(o2)?, o2)?.degree),
        ("Fix(A2) <= Fix(A1)", fix_incl_degree(o2, o1)?.degree),
    ];
    Ok(agreement_report("order-lemma-sat", space, &ds))
}

/// `J1 ⊆ J2 ⇔ J1J2 = J1 ⇔ J2J1 = J1 ⇔ Fix(J1) ⊆ Fix(J2)`.
pub fn order_equivalences_red(j1: &Reduction, j2: &Reduction) -> Result<LawReport> {
    let space = j1.space();
    let (o1, o2) = (j1.op(), j2.op());
    let ds = [
        ("J1 <= J2", incl_degree(o1, o2)?.degree),
        ("J1.J2 = J1", op_eq_degree(&o1.compose(o2)?, o1)?.degree),
        ("J2.J1 = J1", op_eq_degree(&o2.compose(o1)?, o1)?.degree),
        ("Fix(J1) <= Fix(J2)", fix_incl_degree(o1, o2)?.degree),
    ];
    Ok(agreement_report("order-lemma-red", space, &ds))
}

fn agreement_report(law: &str, space: &Space, ds: &[(&str, Elem)]) -> LawReport {
    let degrees: Vec<Elem> = ds.iter().map(|(_, d)| *d).collect();
    graded_report(
        law,
        space,
        Graded {
            degree: agreement(space, &degrees),
            witness: None,
        },
        ds.iter().map(|(n, d)| (n.to_string(), *d)).collect(),
    )
}

/// Both composites are saturations exactly when the two commute.
pub fn composites_commute(a1: &Saturation, a2: &Saturation) -> Result<LawReport> {
    let space = a1.space();
    let h = space.algebra();
    let c12 = a1.op().compose(a2.op())?;
    let c21 = a2.op().compose(a1.op())?;
    let both = classify(&c12)?.is_saturation() && classify(&c21)?.is_saturation();
    let commute = crate::optable::operators_equal(&c12, &c21)?;
    let as_elem = |b: bool| if b { h.top() } else { h.bot() };
    Ok(agreement_report(
        "composites-commute",
        space,
        &[("both composites saturations", as_elem(both)), ("A1.A2 = A2.A1", as_elem(commute))],
    ))
}

/// `J1 ⊆ J2 ⇒ AA(J2) ⊆ AA(J1)`.
pub fn antitone_red(j1: &Reduction, j2: &Reduction) -> Result<LawReport> {
    let space = j1.space();
    let premise = incl_degree(j1.op(), j2.op())?.degree;
    let concl = incl_degree(aa(j2)?.op(), aa(j1)?.op())?;
    Ok(implication("antitone", space, premise, concl, ("J1 <= J2", "AA(J2) <= AA(J1)")))
}

/// `A1 ⊆ A2 ⇒ JJ(A2) ⊆ JJ(A1)`.
pub fn antitone_sat(a1: &Saturation, a2: &Saturation) -> Result<LawReport> {
    let space = a1.space();
    let premise = incl_degree(a1.op(), a2.op())?.degree;
    let concl = incl_degree(jj(a2)?.op(), jj(a1)?.op())?;
    Ok(implication("antitone", space, premise, concl, ("A1 <= A2", "JJ(A2) <= JJ(A1)")))
}

/// `A ⊆ AA(JJ(A))`.
pub fn unit_sat(a: &Saturation) -> Result<LawReport> {
    let g = incl_degree(a.op(), aa(&jj(a)?)?.op())?;
    Ok(LawReport::from_degree("unit", a.space().algebra(), g))
}

/// `J ⊆ JJ(AA(J))`.
pub fn unit_red(j: &Reduction) -> Result<LawReport> {
    let g = incl_degree(j.op(), jj(&aa(j)?)?.op())?;
    Ok(LawReport::from_degree("unit", j.space().algebra(), g))
}

/// `AA(JJ(AA(J))) = AA(J)`.
pub fn triangle_red(j: &Reduction) -> Result<LawReport> {
    let a = aa(j)?;
    let g = op_eq_degree(aa(&jj(&a)?)?.op(), a.op())?;
    Ok(LawReport::from_degree("triangle", j.space().algebra(), g))
}

/// `JJ(AA(JJ(A))) = JJ(A)`.
pub fn triangle_sat(a: &Saturation) -> Result<LawReport> {
    let j = jj(a)?;
    let g = op_eq_degree(jj(&aa(&j)?)?.op(), j.op())?;
    Ok(LawReport::from_degree("triangle", a.space().algebra(), g))
}

/// `AA(⋁ J_i) = ⋀ AA(J_i)`.
pub fn union_to_meet_red(space: &Arc<Space>, reds: &[Reduction]) -> Result<LawReport> {
    let lhs = aa(&join_reductions(space, reds)?)?;
    let rhs = meet_saturations(space, &reds.iter().map(aa).collect::<Result<Vec<_>>>()?)?;
    let g = op_eq_degree(lhs.op(), rhs.op())?;
    Ok(LawReport::from_degree("union-to-meet", space.algebra(), g))
}

/// `JJ(⋁ A_i) = ⋀ JJ(A_i)`, joins and meets taken in SAT(S) and RED(S).
pub fn union_to_meet_sat(space: &Arc<Space>, sats: &[Saturation]) -> Result<LawReport> {
    let lhs = jj(&sat_join(space, sats)?)?;
    let rhs = red_meet(space, &sats.iter().map(jj).collect::<Result<Vec<_>>>()?)?;
    let g = op_eq_degree(lhs.op(), rhs.op())?;
    Ok(LawReport::from_degree("union-to-meet", space.algebra(), g))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Galois,
    Positivity,
    Antitone,
    Unit,
    Triangle,
    UnionToMeet,
    OrderLemma,
    CompatDownClosed,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Galois,
        Suite::Positivity,
        Suite::Antitone,
        Suite::Unit,
        Suite::Triangle,
        Suite::UnionToMeet,
        Suite::OrderLemma,
        Suite::CompatDownClosed,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Suite::Galois => "galois",
            Suite::Positivity => "positivity",
            Suite::Antitone => "antitone",
            Suite::Unit => "unit",
            Suite::Triangle => "triangle",
            Suite::UnionToMeet => "union-to-meet",
            Suite::OrderLemma => "order-lemma",
            Suite::CompatDownClosed => "compat-down-closed",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.id() == s)
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

/// Saturations and reductions a suite quantifies over: all of them when the
/// families of subsets can be enumerated, otherwise a seeded random sample.
pub struct Population {
    pub sats: Vec<Saturation>,
    pub reds: Vec<Reduction>,
    pub exhaustive: bool,
    pub seed: Option<u64>,
    sample_count: usize,
}

impl Population {
    pub fn build(space: &Arc<Space>, sample_count: usize, seed: u64) -> Result<Self> {
        match (all_saturations(space), all_reductions(space)) {
            (Ok(sats), Ok(reds)) => Ok(Population {
                sats,
                reds,
                exhaustive: true,
                seed: None,
                sample_count,
            }),
            (Err(Error::CapExceeded { .. }), _) | (_, Err(Error::CapExceeded { .. })) => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let n = sample_count.max(1);
                let sats = (0..n)
                    .map(|i| random_saturation(space, &mut rng).map(|a| a.named(format!("sat~{i}"))))
                    .collect::<Result<_>>()?;
                let reds = (0..n)
                    .map(|i| random_reduction(space, &mut rng).map(|j| j.named(format!("red~{i}"))))
                    .collect::<Result<_>>()?;
                Ok(Population {
                    sats,
                    reds,
                    exhaustive: false,
                    seed: Some(seed),
                    sample_count,
                })
            }
            (Err(e), _) | (_, Err(e)) => Err(e),
        }
    }

    fn pairs<T: Clone, U: Clone>(&self, xs: &[T], ys: &[U], salt: u64) -> Vec<(T, U)> {
        if self.exhaustive {
            xs.iter()
                .flat_map(|x| ys.iter().map(move |y| (x.clone(), y.clone())))
                .collect()
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(self.seed.unwrap_or(0) ^ salt);
            (0..self.sample_count.max(1))
                .map(|_| {
                    (
                        xs.choose(&mut rng).expect("non-empty").clone(),
                        ys.choose(&mut rng).expect("non-empty").clone(),
                    )
                })
                .collect()
        }
    }
}

struct Aggregate<'a> {
    report: LawReport,
    space: &'a Space,
    degree: Elem,
    failed: bool,
}

impl<'a> Aggregate<'a> {
    fn new(suite: Suite, space: &'a Space) -> Self {
        Aggregate {
            report: LawReport::new(suite.id()),
            space,
            degree: space.algebra().top(),
            failed: false,
        }
    }

    fn add(&mut self, case: &str, r: LawReport) {
        self.report.cases += 1;
        if let Some(d) = r.degree {
            self.degree = self.space.algebra().meet(self.degree, d);
        }
        if !r.holds() && !self.failed {
            self.failed = true;
            self.report.components = vec![];
            self.report.components.push((format!("first failing case {case}"), r.degree.unwrap_or(self.space.algebra().bot())));
            self.report.components.extend(r.components);
            self.report.witness = r.witness;
        }
    }

    fn finish(mut self, pop: &Population, start: Instant) -> LawReport {
        self.report.status = if self.failed {
            Status::Fails
        } else if pop.exhaustive {
            Status::Holds
        } else {
            Status::NoCounterexampleFound
        };
        self.report.degree = pop.exhaustive.then_some(self.degree);
        self.report.seed = pop.seed;
        self.report.elapsed = start.elapsed();
        self.report
    }
}

/// Memoized `AA` and `JJ` over a population.
struct Companions {
    aa: HashMap<String, Saturation>,
    jj: HashMap<String, Reduction>,
}

impl Companions {
    fn new(pop: &Population) -> Result<Self> {
        let mut aa_map = HashMap::new();
        for j in &pop.reds {
            aa_map.insert(j.label().to_string(), aa(j)?);
        }
        let mut jj_map = HashMap::new();
        for a in &pop.sats {
            jj_map.insert(a.label().to_string(), jj(a)?);
        }
        Ok(Companions { aa: aa_map, jj: jj_map })
    }
}

fn galois_cached(c: &Companions, space: &Space, a: &Saturation, j: &Reduction) -> Result<LawReport> {
    let left = incl_degree(a.op(), c.aa[j.label()].op())?;
    let mid = compat_degree(a.op(), j.op())?;
    let right = incl_degree(j.op(), c.jj[a.label()].op())?;
    let degree = agreement(space, &[left.degree, mid.degree, right.degree]);
    let mut r = LawReport::from_degree(
        "galois",
        space.algebra(),
        Graded {
            degree,
            witness: mid.witness,
        },
    );
    r.components = vec![
        ("A <= AA(J)".into(), left.degree),
        ("A compat J".into(), mid.degree),
        ("J <= JJ(A)".into(), right.degree),
    ];
    Ok(r)
}

fn compat_down_closed_exhaustive(space: &Space, pop: &Population, agg: &mut Aggregate<'_>) -> Result<()> {
    let h = space.algebra();
    let compat: Vec<Vec<Elem>> = pop
        .sats
        .iter()
        .map(|a| pop.reds.iter().map(|j| compat_degree(a.op(), j.op()).map(|g| g.degree)).collect())
        .collect::<Result<_>>()?;
    let sat_incl: Vec<Vec<Elem>> = pop
        .sats
        .iter()
        .map(|x| pop.sats.iter().map(|y| incl_degree(x.op(), y.op()).map(|g| g.degree)).collect())
        .collect::<Result<_>>()?;
    let red_incl: Vec<Vec<Elem>> = pop
        .reds
        .iter()
        .map(|x| pop.reds.iter().map(|y| incl_degree(x.op(), y.op()).map(|g| g.degree)).collect())
        .collect::<Result<_>>()?;
    for (ia, a) in pop.sats.iter().enumerate() {
        for (ij, j) in pop.reds.iter().enumerate() {
            let c = compat[ia][ij];
            for (is, small) in pop.sats.iter().enumerate() {
                let d = h.imp(h.meet(sat_incl[is][ia], c), compat[is][ij]);
                let case = format!("({}, {}, {})", small.label(), a.label(), j.label());
                agg.add(&case, LawReport::from_degree("compat-down-closed", h, Graded { degree: d, witness: None }));
            }
            for (is, small) in pop.reds.iter().enumerate() {
                let d = h.imp(h.meet(red_incl[is][ij], c), compat[ia][is]);
                let case = format!("({}, {}, {})", a.label(), small.label(), j.label());
                agg.add(&case, LawReport::from_degree("compat-down-closed", h, Graded { degree: d, witness: None }));
            }
        }
    }
    Ok(())
}

pub fn run_suite(space: &Arc<Space>, suite: Suite, pop: &Population) -> Result<LawReport> {
    let start = Instant::now();
    let mut agg = Aggregate::new(suite, space);
    let case2 = |x: &str, y: &str| format!("({x}, {y})");
    match suite {
        Suite::Galois => {
            let comp = Companions::new(pop)?;
            for (a, j) in pop.pairs(&pop.sats, &pop.reds, 1) {
                agg.add(&case2(a.label(), j.label()), galois_cached(&comp, space, &a, &j)?);
            }
        }
        Suite::Positivity => {
            for j in &pop.reds {
                agg.add(j.label(), positivity_law(j)?);
            }
        }
        Suite::Antitone => {
            for (j1, j2) in pop.pairs(&pop.reds, &pop.reds, 2) {
                agg.add(&case2(j1.label(), j2.label()), antitone_red(&j1, &j2)?);
            }
            for (a1, a2) in pop.pairs(&pop.sats, &pop.sats, 3) {
                agg.add(&case2(a1.label(), a2.label()), antitone_sat(&a1, &a2)?);
            }
        }
        Suite::Unit => {
            for a in &pop.sats {
                agg.add(a.label(), unit_sat(a)?);
            }
            for j in &pop.reds {
                agg.add(j.label(), unit_red(j)?);
            }
        }
        Suite::Triangle => {
            for a in &pop.sats {
                agg.add(a.label(), triangle_sat(a)?);
            }
            for j in &pop.reds {
                agg.add(j.label(), triangle_red(j)?);
            }
        }
        Suite::UnionToMeet => {
            for (j1, j2) in pop.pairs(&pop.reds, &pop.reds, 4) {
                agg.add(&case2(j1.label(), j2.label()), union_to_meet_red(space, &[j1, j2])?);
            }
            for (a1, a2) in pop.pairs(&pop.sats, &pop.sats, 5) {
                agg.add(&case2(a1.label(), a2.label()), union_to_meet_sat(space, &[a1, a2])?);
            }
        }
        Suite::OrderLemma => {
            for (a1, a2) in pop.pairs(&pop.sats, &pop.sats, 6) {
                agg.add(&case2(a1.label(), a2.label()), order_equivalences_sat(&a1, &a2)?);
            }
            for (j1, j2) in pop.pairs(&pop.reds, &pop.reds, 7) {
                agg.add(&case2(j1.label(), j2.label()), order_equivalences_red(&j1, &j2)?);
            }
        }
        Suite::CompatDownClosed => {
            if pop.exhaustive {
                compat_down_closed_exhaustive(space, pop, &mut agg)?;
            } else {
                let quads: Vec<_> = pop
                    .pairs(&pop.sats, &pop.reds, 8)
                    .into_iter()
                    .zip(pop.pairs(&pop.sats, &pop.reds, 9))
                    .collect();
                for ((a, j), (a2, j2)) in quads {
                    let case = format!("({}, {}, {}, {})", a.label(), a2.label(), j.label(), j2.label());
                    agg.add(&case, compat_down_closed(&a, &a2, &j, &j2)?);
                }
            }
        }
    }
    Ok(agg.finish(pop, start))
}
