//! Saturations and reductions, their generation from families of subsets, and
//! the Galois connection between them.

use std::collections::HashSet;
use std::sync::Arc;
use std::time::Instant;

use rand::Rng;

use crate::error::{Error, Result};
use crate::heyting::Elem;
use crate::hset::{HSubset, Space};
use crate::optable::{
    self, classify, compat_degree, incl_degree, pointwise_join, pointwise_meet, splits_table,
    Flag, Operator,
};
use crate::report::{Graded, Infimum, LawReport, Status, Witness};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// All defining properties were checked over the full subset enumeration.
    Verified,
    /// The space is above the enumeration cap; the operator is a saturation
    /// (or reduction) because of how it was built.
    ByConstruction(&'static str),
}

fn refusal(op: &Operator, kind: &'static str, flags: &[(&'static str, &Flag)]) -> Error {
    let reasons: Vec<String> = flags
        .iter()
        .filter_map(|(name, f)| match f {
            Flag::Holds => None,
            Flag::Refuted(w) => Some(format!("not {name} ({})", w.render(op.space()))),
        })
        .collect();
    Error::NotCertified {
        name: op.label().to_string(),
        kind,
        reason: reasons.join("; "),
    }
}

/// A monotone, idempotent, expansive operator.
#[derive(Clone, Debug)]
pub struct Saturation {
    op: Operator,
    certificate: Certificate,
}

/// A monotone, idempotent, contractive operator.
#[derive(Clone, Debug)]
pub struct Reduction {
    op: Operator,
    certificate: Certificate,
}

impl Saturation {
    pub fn new(op: Operator) -> Result<Self> {
        let p = classify(&op)?;
        if !p.is_saturation() {
            let flags = [
                ("monotone", &p.monotone),
                ("idempotent", &p.idempotent),
                ("expansive", &p.expansive),
            ];
            return Err(refusal(&op, "saturation", &flags));
        }
        Ok(Saturation {
            op,
            certificate: Certificate::Verified,
        })
    }

    /// Verifies when the space is enumerable; otherwise trusts `reason`.
    pub(crate) fn by_construction(op: Operator, reason: &'static str) -> Result<Self> {
        if op.space().within_cap() {
            Self::new(op)
        } else {
            Ok(Saturation {
                op,
                certificate: Certificate::ByConstruction(reason),
            })
        }
    }

    pub fn id(space: &Arc<Space>) -> Self {
        Saturation {
            op: Operator::id(space),
            certificate: Certificate::ByConstruction("identity"),
        }
    }

    pub fn top(space: &Arc<Space>) -> Self {
        Saturation {
            op: Operator::top(space),
            certificate: Certificate::ByConstruction("top operator"),
        }
    }

    pub fn op(&self) -> &Operator {
        &self.op
    }

    pub fn certificate(&self) -> &Certificate {
        &self.certificate
    }

    pub fn space(&self) -> &Arc<Space> {
        self.op.space()
    }

    pub fn label(&self) -> &str {
        self.op.label()
    }

    pub fn named(&self, label: impl Into<String>) -> Self {
        Saturation {
            op: self.op.named(label),
            certificate: self.certificate.clone(),
        }
    }
}

impl Reduction {
    pub fn new(op: Operator) -> Result<Self> {
        let p = classify(&op)?;
        if !p.is_reduction() {
            let flags = [
                ("monotone", &p.monotone),
                ("idempotent", &p.idempotent),
                ("contractive", &p.contractive),
            ];
            return Err(refusal(&op, "reduction", &flags));
        }
        Ok(Reduction {
            op,
            certificate: Certificate::Verified,
        })
    }

    pub(crate) fn by_construction(op: Operator, reason: &'static str) -> Result<Self> {
        if op.space().within_cap() {
            Self::new(op)
        } else {
            Ok(Reduction {
                op,
                certificate: Certificate::ByConstruction(reason),
            })
        }
    }

    pub fn id(space: &Arc<Space>) -> Self {
        Reduction {
            op: Operator::id(space),
            certificate: Certificate::ByConstruction("identity"),
        }
    }

    pub fn bot(space: &Arc<Space>) -> Self {
        Reduction {
            op: Operator::bot(space),
            certificate: Certificate::ByConstruction("bottom operator"),
        }
    }

    pub fn op(&self) -> &Operator {
        &self.op
    }

    pub fn certificate(&self) -> &Certificate {
        &self.certificate
    }

    pub fn space(&self) -> &Arc<Space> {
        self.op.space()
    }

    pub fn label(&self) -> &str {
        self.op.label()
    }

    pub fn named(&self, label: impl Into<String>) -> Self {
        Reduction {
            op: self.op.named(label),
            certificate: self.certificate.clone(),
        }
    }
}

fn family_label(space: &Space, kind: &str, family: &[HSubset]) -> String {
    let parts: Vec<String> = family.iter().map(|v| space.format_subset(v)).collect();
    format!("{kind}[{}]", parts.join(" "))
}

/// `A_P(U) = ⋂{V ∈ P | U ⊆ V}`, the least saturation fixing every member.
pub fn from_family_sat(space: &Arc<Space>, family: &[HSubset]) -> Result<Saturation> {
    for v in family {
        space.check(v)?;
    }
    let h = space.algebra();
    let rows = space
        .universe()?
        .iter()
        .map(|u| {
            let incl: Vec<Elem> = family.iter().map(|v| space.incl(u, v)).collect();
            HSubset::from_degrees(
                (0..space.points())
                    .map(|a| h.big_meet(family.iter().zip(&incl).map(|(v, &d)| h.imp(d, v.at(a)))))
                    .collect(),
            )
        })
        .collect();
    Saturation::new(Operator::table(space, family_label(space, "sat", family), rows)?)
}

/// `J_P(U) = ⋃{V ∈ P | V ⊆ U}`, the reduction whose opens are generated by `P`.
pub fn from_family_red(space: &Arc<Space>, family: &[HSubset]) -> Result<Reduction> {
    for v in family {
        space.check(v)?;
    }
    let h = space.algebra();
    let rows = space
        .universe()?
        .iter()
        .map(|u| {
            let incl: Vec<Elem> = family.iter().map(|v| space.incl(v, u)).collect();
            HSubset::from_degrees(
                (0..space.points())
                    .map(|a| h.big_join(family.iter().zip(&incl).map(|(v, &d)| h.meet(d, v.at(a)))))
                    .collect(),
            )
        })
        .collect();
    Reduction::new(Operator::table(space, family_label(space, "red", family), rows)?)
}

/// The greatest saturation compatible with `J`, which is `LL(J)`.
pub fn aa(j: &Reduction) -> Result<Saturation> {
    let ll = optable::greatest_left_compatible(j.op())?;
    Saturation::new(ll.named(format!("AA({})", j.label())))
}

/// The greatest reduction compatible with `A`:
/// `JJ(A)(V)(a) = ⋁_Z (Z ⊆ V) ∧ (Z splits A) ∧ Z(a)`.
pub fn jj(a: &Saturation) -> Result<Reduction> {
    let space = a.space();
    let h = space.algebra();
    let all = space.universe()?;
    let splits = splits_table(a.op())?;
    let splitting: Vec<(&HSubset, Elem)> = all
        .iter()
        .zip(splits)
        .filter(|(_, d)| *d != h.bot())
        .collect();
    let rows = all
        .iter()
        .map(|v| {
            let weights: Vec<Elem> = splitting
                .iter()
                .map(|(z, d)| h.meet(*d, space.incl(z, v)))
                .collect();
            HSubset::from_degrees(
                (0..space.points())
                    .map(|p| {
                        h.big_join(
                            splitting
                                .iter()
                                .zip(&weights)
                                .map(|((z, _), &w)| h.meet(w, z.at(p))),
                        )
                    })
                    .collect(),
            )
        })
        .collect();
    Reduction::new(Operator::table(space, format!("JJ({})", a.label()), rows)?)
}

/// Pointwise meet; the empty meet is `top`.
pub fn meet_saturations(space: &Arc<Space>, sats: &[Saturation]) -> Result<Saturation> {
    let ops: Vec<Operator> = sats.iter().map(|a| a.op().clone()).collect();
    let op = pointwise_meet(space, &ops)?;
    Saturation::by_construction(op, "meet of saturations")
}

/// Pointwise join; the empty join is `bot`.
pub fn join_reductions(space: &Arc<Space>, reds: &[Reduction]) -> Result<Reduction> {
    let ops: Vec<Operator> = reds.iter().map(|j| j.op().clone()).collect();
    let op = pointwise_join(space, &ops)?;
    Reduction::by_construction(op, "join of reductions")
}

fn common_fixed_points(space: &Space, ops: &[&Operator]) -> Result<Vec<HSubset>> {
    Ok(space
        .universe()?
        .iter()
        .filter(|u| ops.iter().all(|o| &o.eval(u) == *u))
        .cloned()
        .collect())
}

/// Least saturation above every member: `A_P` for `P` the common fixed points.
pub fn sat_join(space: &Arc<Space>, sats: &[Saturation]) -> Result<Saturation> {
    let ops: Vec<&Operator> = sats.iter().map(|a| a.op()).collect();
    from_family_sat(space, &common_fixed_points(space, &ops)?)
}

/// Greatest reduction below every member: `J_P` for `P` the common fixed points.
pub fn red_meet(space: &Arc<Space>, reds: &[Reduction]) -> Result<Reduction> {
    let ops: Vec<&Operator> = reds.iter().map(|j| j.op()).collect();
    from_family_red(space, &common_fixed_points(space, &ops)?)
}

/// Every saturation on the space, found as `A_P` over all families `P`.
/// Requires `2^|subsets|` within the subset cap.
pub fn all_saturations(space: &Arc<Space>) -> Result<Vec<Saturation>> {
    all_closures(space, |s, fam| from_family_sat(s, fam).map(|a| a.op().clone()))?
        .into_iter()
        .map(Saturation::new)
        .collect()
}

/// Every reduction on the space; see [`all_saturations`].
pub fn all_reductions(space: &Arc<Space>) -> Result<Vec<Reduction>> {
    all_closures(space, |s, fam| from_family_red(s, fam).map(|j| j.op().clone()))?
        .into_iter()
        .map(Reduction::new)
        .collect()
}

fn all_closures(
    space: &Arc<Space>,
    build: impl Fn(&Arc<Space>, &[HSubset]) -> Result<Operator>,
) -> Result<Vec<Operator>> {
    let all = space.universe()?;
    let n = all.len();
    let families = 1usize
        .checked_shl(n as u32)
        .filter(|&f| n < usize::BITS as usize && f <= space.subset_cap())
        .ok_or_else(|| Error::CapExceeded {
            needed: format!("2^{n} families"),
            cap: space.subset_cap(),
        })?;
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for mask in 0..families {
        let fam: Vec<HSubset> = (0..n)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| all[i].clone())
            .collect();
        let op = build(space, &fam)?;
        let key: Vec<usize> = op.table_rows()?.iter().map(|r| space.index_of(r)).collect();
        if seen.insert(key) {
            out.push(op.named(format!("{}#{}", op.label().split('[').next().unwrap_or(""), out.len())));
        }
    }
    Ok(out)
}

fn random_family<R: Rng>(space: &Space, rng: &mut R) -> Result<Vec<HSubset>> {
    let all = space.universe()?;
    let density: f64 = rng.gen_range(0.05..0.6);
    Ok(all.iter().filter(|_| rng.gen_bool(density)).cloned().collect())
}

pub fn random_saturation<R: Rng>(space: &Arc<Space>, rng: &mut R) -> Result<Saturation> {
    from_family_sat(space, &random_family(space, rng)?)
}

pub fn random_reduction<R: Rng>(space: &Arc<Space>, rng: &mut R) -> Result<Reduction> {
    from_family_red(space, &random_family(space, rng)?)
}

/// Degree of `O1 = O2`.
pub fn op_eq_degree(o1: &Operator, o2: &Operator) -> Result<Graded> {
    let h = o1.space().algebra();
    let l = incl_degree(o1, o2)?;
    let r = incl_degree(o2, o1)?;
    let degree = h.meet(l.degree, r.degree);
    let witness = if l.degree == degree { l.witness } else { r.witness };
    Ok(Graded { degree, witness })
}

/// Degree to which all the given degrees coincide.
pub(crate) fn agreement(space: &Space, ds: &[Elem]) -> Elem {
    let h = space.algebra();
    h.big_meet(ds.windows(2).map(|w| h.iff(w[0], w[1])))
}

/// `A ⊆ AA(J)`, `A ⋉ J` and `J ⊆ JJ(A)`; the law holds when the three
/// degrees coincide.
pub fn galois_check(a: &Saturation, j: &Reduction) -> Result<LawReport> {
    let start = Instant::now();
    a.op().same_space(j.op())?;
    let space = a.space();
    let left = incl_degree(a.op(), aa(j)?.op())?;
    let mid = compat_degree(a.op(), j.op())?;
    let right = incl_degree(j.op(), jj(a)?.op())?;
    let degree = agreement(space, &[left.degree, mid.degree, right.degree]);
    let mut r = LawReport::new("galois");
    r.status = if degree == space.algebra().top() {
        Status::Holds
    } else {
        Status::Fails
    };
    r.degree = Some(degree);
    r.components = vec![
        (format!("{} <= AA({})", a.label(), j.label()), left.degree),
        (format!("{} compat {}", a.label(), j.label()), mid.degree),
        (format!("{} <= JJ({})", j.label(), a.label()), right.degree),
    ];
    r.witness = mid.witness.or(left.witness).or(right.witness);
    r.cases = 1;
    r.elapsed = start.elapsed();
    Ok(r)
}

/// `(a ∈ JS ⇒ a ∈ AA(J)U) ⇒ a ∈ AA(J)U` for all `a, U`.
pub fn positivity_law(j: &Reduction) -> Result<LawReport> {
    let start = Instant::now();
    let space = j.space();
    let h = space.algebra();
    let closure = aa(j)?;
    let js = j.op().eval(&space.full());
    let mut inf = Infimum::new(h);
    for u in space.universe()? {
        let au = closure.op().eval(u);
        for a in 0..space.points() {
            let d = h.imp(h.imp(js.at(a), au.at(a)), au.at(a));
            inf.push(d, || Witness::at(a, vec![u.clone()]));
        }
    }
    let mut r = LawReport::from_degree("positivity", h, inf.finish());
    r.elapsed = start.elapsed();
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::heyting::HeytingAlgebra;
    use crate::optable::operators_equal;

    fn bool_space(points: &[&str]) -> Arc<Space> {
        Space::over(HeytingAlgebra::boolean2(), points).unwrap()
    }

    fn chain_space(points: &[&str]) -> Arc<Space> {
        Space::over(HeytingAlgebra::chain(3).unwrap(), points).unwrap()
    }

    #[test]
    fn family_generation_extremes() {
        for s in [bool_space(&["a", "b"]), chain_space(&["a", "b"])] {
            let all = s.universe().unwrap().to_vec();
            let id = Operator::id(&s);
            assert!(operators_equal(from_family_sat(&s, &all).unwrap().op(), &id).unwrap());
            assert!(operators_equal(from_family_red(&s, &all).unwrap().op(), &id).unwrap());
            let top = Operator::top(&s);
            let bot = Operator::bot(&s);
            assert!(operators_equal(from_family_sat(&s, &[]).unwrap().op(), &top).unwrap());
            assert!(operators_equal(from_family_red(&s, &[]).unwrap().op(), &bot).unwrap());
        }
    }

    #[test]
    fn singleton_family_intersection_formula() {
        let s = bool_space(&["a", "b"]);
        let w = s.crisp(&["a"]).unwrap();
        let ap = from_family_sat(&s, std::slice::from_ref(&w)).unwrap();
        let jp = from_family_red(&s, std::slice::from_ref(&w)).unwrap();
        assert_eq!(ap.op().eval(&s.empty()), w);
        assert_eq!(ap.op().eval(&s.crisp(&["b"]).unwrap()), s.full());
        assert_eq!(jp.op().eval(&s.full()), w);
        let g = compat_degree(ap.op(), jp.op()).unwrap();
        assert_eq!(g.degree, s.algebra().bot());
        // first failing pair in enumeration order
        assert_eq!(g.witness.unwrap().subsets, vec![s.empty(), w.clone()]);
        // A_P ∅ = W = J_P S, so (∅, S) fails as well
        let h = s.algebra();
        let (a0, js) = (ap.op().eval(&s.empty()), jp.op().eval(&s.full()));
        assert_eq!(h.imp(s.overlap(&a0, &js), s.overlap(&s.empty(), &js)), h.bot());
    }

    #[test]
    fn certification_rejects_non_closures() {
        let s = chain_space(&["*"]);
        assert!(Saturation::new(Operator::double_negation(&s)).is_ok());
        assert!(Reduction::new(Operator::double_negation(&s)).is_err());
        let err = Saturation::new(Operator::pseudo_complement(&s)).unwrap_err();
        assert!(matches!(err, Error::NotCertified { .. }));
    }

    #[test]
    fn aa_and_jj_trivial_cases() {
        for s in [bool_space(&["a", "b"]), chain_space(&["a", "b"])] {
            let id = Operator::id(&s);
            let top = Operator::top(&s);
            let bot = Operator::bot(&s);
            assert!(operators_equal(aa(&Reduction::id(&s)).unwrap().op(), &id).unwrap());
            assert!(operators_equal(aa(&Reduction::bot(&s)).unwrap().op(), &top).unwrap());
            assert!(operators_equal(jj(&Saturation::id(&s)).unwrap().op(), &id).unwrap());
            assert!(operators_equal(jj(&Saturation::top(&s)).unwrap().op(), &bot).unwrap());
        }
    }

    #[test]
    fn classical_collapse_on_two_points() {
        let s = bool_space(&["a", "b"]);
        let neg = Operator::pseudo_complement(&s);
        for j in all_reductions(&s).unwrap() {
            let conj = optable::compose_all(&s, &[neg.clone(), j.op().clone(), neg.clone()]).unwrap();
            assert!(operators_equal(aa(&j).unwrap().op(), &conj).unwrap());
        }
        for a in all_saturations(&s).unwrap() {
            let conj = optable::compose_all(&s, &[neg.clone(), a.op().clone(), neg.clone()]).unwrap();
            assert!(operators_equal(jj(&a).unwrap().op(), &conj).unwrap());
        }
    }

    #[test]
    fn jj_fixed_points_are_the_splitting_subsets() {
        let s = chain_space(&["a", "b"]);
        let top = s.algebra().top();
        for a in all_saturations(&s).unwrap().iter().take(40) {
            let j = jj(a).unwrap();
            for z in s.universe().unwrap() {
                let splits = optable::splits_degree(z, a.op()).unwrap().degree == top;
                assert_eq!(splits, &j.op().eval(z) == z);
            }
        }
    }

    #[test]
    fn counts_of_closure_operators() {
        // Moore families on 2 and 3 points
        assert_eq!(all_saturations(&bool_space(&["a", "b"])).unwrap().len(), 7);
        assert_eq!(all_reductions(&bool_space(&["a", "b"])).unwrap().len(), 7);
        assert_eq!(all_saturations(&bool_space(&["a", "b", "c"])).unwrap().len(), 61);
    }

    #[test]
    fn meets_and_joins() {
        let s = bool_space(&["a", "b"]);
        assert!(operators_equal(meet_saturations(&s, &[]).unwrap().op(), &Operator::top(&s)).unwrap());
        assert!(operators_equal(join_reductions(&s, &[]).unwrap().op(), &Operator::bot(&s)).unwrap());
        let m = meet_saturations(&s, &[Saturation::id(&s), Saturation::top(&s)]).unwrap();
        assert!(operators_equal(m.op(), &Operator::id(&s)).unwrap());
    }

    #[test]
    fn galois_examples() {
        let s = bool_space(&["a", "b"]);
        let r = galois_check(&Saturation::id(&s), &Reduction::id(&s)).unwrap();
        assert!(r.holds());
        assert!(r.components.iter().all(|(_, d)| *d == s.algebra().top()));

        let c = chain_space(&["*"]);
        let dn = Saturation::new(Operator::double_negation(&c)).unwrap();
        let r = galois_check(&dn, &Reduction::id(&c)).unwrap();
        assert!(r.holds());
        assert_eq!(c.name(r.components[1].1), "u");
    }

    #[test]
    fn positivity_trivial_cases() {
        for s in [bool_space(&["a", "b"]), chain_space(&["a", "b"])] {
            assert!(positivity_law(&Reduction::id(&s)).unwrap().holds());
            assert!(positivity_law(&Reduction::bot(&s)).unwrap().holds());
        }
    }
}
