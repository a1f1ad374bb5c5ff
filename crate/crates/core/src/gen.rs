//! Saturations and reductions generated by an axiom-set: for each point `a`,
//! a list of covers `C(a, i)`.

use std::sync::Arc;

use crate::btop::BasicTopology;
use crate::error::{Error, Result};
use crate::galois::{Reduction, Saturation};
use crate::heyting::Elem;
use crate::hset::{HSubset, Space};
use crate::optable::Operator;

/// A cover `C(a, i)` with the strength at which it is asserted. Covers given
/// in a document have weight top.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cover {
    pub subset: HSubset,
    pub weight: Elem,
}

#[derive(Clone, Debug)]
pub struct AxiomSet {
    name: String,
    space: Arc<Space>,
    covers: Vec<Vec<Cover>>,
}

impl AxiomSet {
    pub fn new(space: &Arc<Space>, name: impl Into<String>) -> Self {
        AxiomSet {
            name: name.into(),
            space: space.clone(),
            covers: vec![Vec::new(); space.points()],
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn space(&self) -> &Arc<Space> {
        &self.space
    }

    pub fn add(&mut self, point: usize, subset: HSubset) -> Result<()> {
        let top = self.space.algebra().top();
        self.add_weighted(point, subset, top)
    }

    pub fn add_weighted(&mut self, point: usize, subset: HSubset, weight: Elem) -> Result<()> {
        self.space.check(&subset)?;
        let slot = self
            .covers
            .get_mut(point)
            .ok_or_else(|| Error::UnknownPoint(format!("#{point}")))?;
        slot.push(Cover { subset, weight });
        Ok(())
    }

    pub fn covers(&self, point: usize) -> &[Cover] {
        &self.covers[point]
    }

    pub fn len(&self) -> usize {
        self.covers.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn entries(&self) -> impl Iterator<Item = (usize, &Cover)> {
        self.covers
            .iter()
            .enumerate()
            .flat_map(|(a, cs)| cs.iter().map(move |c| (a, c)))
    }
}

/// `⋀_{a,i} ((w ∧ C(a,i) ⊆ P) ⇒ P(a))`.
pub fn fulfills_degree(p: &HSubset, ax: &AxiomSet) -> Result<Elem> {
    ax.space.check(p)?;
    Ok(fulfills(&ax.space, p, ax))
}

fn fulfills(space: &Space, p: &HSubset, ax: &AxiomSet) -> Elem {
    let h = space.algebra();
    h.big_meet(
        ax.entries()
            .map(|(a, c)| h.imp(h.meet(c.weight, space.incl(&c.subset, p)), p.at(a))),
    )
}

/// `⋀_{a,i} ((w ∧ Z(a)) ⇒ C(a,i) ≬ Z)`.
pub fn splits_axioms_degree(z: &HSubset, ax: &AxiomSet) -> Result<Elem> {
    ax.space.check(z)?;
    Ok(splits(&ax.space, z, ax))
}

fn splits(space: &Space, z: &HSubset, ax: &AxiomSet) -> Elem {
    let h = space.algebra();
    h.big_meet(
        ax.entries()
            .map(|(a, c)| h.imp(h.meet(c.weight, z.at(a)), space.overlap(&c.subset, z))),
    )
}

/// Crisp axioms `(a, C)` as point lists, dropping covers of weight bottom.
fn crisp_axioms(ax: &AxiomSet) -> Vec<(usize, Vec<usize>)> {
    let h = ax.space.algebra();
    ax.entries()
        .filter(|(_, c)| c.weight != h.bot())
        .map(|(a, c)| {
            let pts = (0..c.subset.len())
                .filter(|&p| c.subset.at(p) == h.top())
                .collect();
            (a, pts)
        })
        .collect()
}

fn watch_lists(n: usize, axioms: &[(usize, Vec<usize>)]) -> Vec<Vec<usize>> {
    let mut watch = vec![Vec::new(); n];
    for (k, (_, pts)) in axioms.iter().enumerate() {
        for &p in pts {
            watch[p].push(k);
        }
    }
    watch
}

/// Least `P ⊇ U` closed under the axioms, by counting missing cover points.
fn least_fixpoint(n: usize, axioms: &[(usize, Vec<usize>)], watch: &[Vec<usize>], start: &[bool]) -> Vec<bool> {
    let mut inside = start.to_vec();
    let mut missing: Vec<usize> = axioms
        .iter()
        .map(|(_, pts)| pts.iter().filter(|&&p| !inside[p]).count())
        .collect();
    let mut queue: Vec<usize> = Vec::new();
    let admit = |a: usize, inside: &mut Vec<bool>, queue: &mut Vec<usize>| {
        if !inside[a] {
            inside[a] = true;
            queue.push(a);
        }
    };
    for (k, (a, _)) in axioms.iter().enumerate() {
        if missing[k] == 0 {
            admit(*a, &mut inside, &mut queue);
        }
    }
    while let Some(p) = queue.pop() {
        for &k in &watch[p] {
            missing[k] -= 1;
            if missing[k] == 0 {
                admit(axioms[k].0, &mut inside, &mut queue);
            }
        }
    }
    debug_assert_eq!(inside.len(), n);
    inside
}

/// Greatest `Z ⊆ V` in which every cover of every member meets `Z`.
fn greatest_fixpoint(
    n: usize,
    axioms: &[(usize, Vec<usize>)],
    watch: &[Vec<usize>],
    by_point: &[Vec<usize>],
    start: &[bool],
) -> Vec<bool> {
    let mut inside = start.to_vec();
    let mut hits: Vec<usize> = axioms
        .iter()
        .map(|(_, pts)| pts.iter().filter(|&&p| inside[p]).count())
        .collect();
    let mut queue: Vec<usize> = Vec::new();
    for a in 0..n {
        if inside[a] && by_point[a].iter().any(|&k| hits[k] == 0) {
            inside[a] = false;
            queue.push(a);
        }
    }
    while let Some(p) = queue.pop() {
        for &k in &watch[p] {
            hits[k] -= 1;
            let a = axioms[k].0;
            if hits[k] == 0 && inside[a] {
                inside[a] = false;
                queue.push(a);
            }
        }
    }
    inside
}

fn to_bools(space: &Space, u: &HSubset) -> Vec<bool> {
    let top = space.algebra().top();
    u.degrees().iter().map(|&d| d == top).collect()
}

fn from_bools(space: &Space, bs: &[bool]) -> HSubset {
    let h = space.algebra();
    HSubset::from_degrees(bs.iter().map(|&b| if b { h.top() } else { h.bot() }).collect())
}

/// `A_{I,C}`: the least subset containing `U` that fulfills the axiom-set.
pub fn generate_sat(ax: &AxiomSet) -> Result<Saturation> {
    let space = &ax.space;
    let label = format!("gen-sat({})", ax.name);
    let op = if space.is_classical() {
        let axioms = crisp_axioms(ax);
        let n = space.points();
        let watch = watch_lists(n, &axioms);
        Operator::from_fn(space, label, move |s, u| {
            from_bools(s, &least_fixpoint(n, &axioms, &watch, &to_bools(s, u)))
        })
    } else {
        space.ensure_enumerable()?;
        let ax = ax.clone();
        let fulfilling: Arc<Vec<(HSubset, Elem)>> = Arc::new(
            space
                .universe()?
                .iter()
                .map(|p| (p.clone(), fulfills(space, p, &ax)))
                .collect(),
        );
        Operator::from_fn(space, label, move |s, u| {
            let h = s.algebra();
            let degrees = (0..s.points())
                .map(|a| {
                    h.big_meet(
                        fulfilling
                            .iter()
                            .map(|(p, f)| h.imp(h.meet(s.incl(u, p), *f), p.at(a))),
                    )
                })
                .collect();
            HSubset::from_degrees(degrees)
        })
    };
    Saturation::by_construction(op, "generated by an axiom-set")
}

/// `J_{I,C}`: the greatest subset of `V` that splits the axiom-set.
pub fn generate_red(ax: &AxiomSet) -> Result<Reduction> {
    let space = &ax.space;
    let label = format!("gen-red({})", ax.name);
    let op = if space.is_classical() {
        let axioms = crisp_axioms(ax);
        let n = space.points();
        let watch = watch_lists(n, &axioms);
        let mut by_point = vec![Vec::new(); n];
        for (k, (a, _)) in axioms.iter().enumerate() {
            by_point[*a].push(k);
        }
        Operator::from_fn(space, label, move |s, v| {
            from_bools(s, &greatest_fixpoint(n, &axioms, &watch, &by_point, &to_bools(s, v)))
        })
    } else {
        space.ensure_enumerable()?;
        let ax = ax.clone();
        let splitting: Arc<Vec<(HSubset, Elem)>> = Arc::new(
            space
                .universe()?
                .iter()
                .map(|z| (z.clone(), splits(space, z, &ax)))
                .collect(),
        );
        Operator::from_fn(space, label, move |s, v| {
            let h = s.algebra();
            let degrees = (0..s.points())
                .map(|a| {
                    h.big_join(
                        splitting
                            .iter()
                            .map(|(z, d)| h.meet(h.meet(s.incl(z, v), *d), z.at(a))),
                    )
                })
                .collect();
            HSubset::from_degrees(degrees)
        })
    };
    Reduction::by_construction(op, "generated by an axiom-set")
}

/// `[A_{I,C}, J_{I,C}]`.
pub fn generate(ax: &AxiomSet) -> Result<BasicTopology> {
    let sat = generate_sat(ax)?;
    let red = generate_red(ax)?;
    let space = ax.space();
    let t = if space.within_cap() {
        BasicTopology::make(sat, red)?
    } else {
        BasicTopology::make_unchecked(sat, red)
    };
    Ok(t.named(format!("gen({})", ax.name)))
}

/// `P ↦ U ∪ {a | some cover of a is included in P}`, iterated from `U`
/// until it stabilizes. The last entry is `A_{I,C}(U)`.
pub fn sat_iterates(ax: &AxiomSet, u: &HSubset) -> Result<Vec<HSubset>> {
    let space = &ax.space;
    space.check(u)?;
    let h = space.algebra();
    let mut out = vec![u.clone()];
    loop {
        let p = out.last().expect("non-empty");
        let next = HSubset::from_degrees(
            (0..space.points())
                .map(|a| {
                    let fired = h.big_join(
                        ax.covers(a)
                            .iter()
                            .map(|c| h.meet(c.weight, space.incl(&c.subset, p))),
                    );
                    h.join(p.at(a), fired)
                })
                .collect(),
        );
        if &next == p {
            return Ok(out);
        }
        out.push(next);
    }
}

/// `Z ↦ Z ∩ {a | every cover of a meets Z}`, iterated from `V` until it
/// stabilizes. The last entry is `J_{I,C}(V)`.
pub fn red_iterates(ax: &AxiomSet, v: &HSubset) -> Result<Vec<HSubset>> {
    let space = &ax.space;
    space.check(v)?;
    let h = space.algebra();
    let mut out = vec![v.clone()];
    loop {
        let z = out.last().expect("non-empty");
        let next = HSubset::from_degrees(
            (0..space.points())
                .map(|a| {
                    let ok = h.big_meet(
                        ax.covers(a)
                            .iter()
                            .map(|c| h.imp(c.weight, space.overlap(&c.subset, z))),
                    );
                    h.meet(z.at(a), ok)
                })
                .collect(),
        );
        if &next == z {
            return Ok(out);
        }
        out.push(next);
    }
}

/// One cover `(a, U)` per subset `U`, asserted at strength `A(U)(a)`;
/// covers of strength bottom are omitted.
pub fn axioms_from_saturation(a: &Saturation) -> Result<AxiomSet> {
    let space = a.space();
    let h = space.algebra();
    let mut ax = AxiomSet::new(space, format!("axioms({})", a.label()));
    for u in space.universe()? {
        let image = a.op().eval(u);
        for p in 0..space.points() {
            let w = image.at(p);
            if w != h.bot() {
                ax.add_weighted(p, u.clone(), w)?;
            }
        }
    }
    Ok(ax)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galois::{all_saturations, jj};
    use crate::heyting::HeytingAlgebra;
    use crate::optable::{compat_degree, operators_equal, splits_degree};

    fn boolean(n: usize) -> Arc<Space> {
        let pts: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        Space::over(HeytingAlgebra::boolean2(), &pts).unwrap()
    }

    fn single_axiom(s: &Arc<Space>) -> AxiomSet {
        let mut ax = AxiomSet::new(s, "c0");
        ax.add(0, s.crisp(&["1", "2"]).unwrap()).unwrap();
        ax
    }

    #[test]
    fn fulfills_and_splits_examples() {
        let s = boolean(3);
        let ax = single_axiom(&s);
        let h = s.algebra();
        assert_eq!(fulfills_degree(&s.full(), &ax).unwrap(), h.top());
        assert_eq!(fulfills_degree(&s.crisp(&["1", "2"]).unwrap(), &ax).unwrap(), h.bot());
        assert_eq!(fulfills_degree(&s.empty(), &AxiomSet::new(&s, "none")).unwrap(), h.top());
        assert_eq!(splits_axioms_degree(&s.empty(), &ax).unwrap(), h.top());
        assert_eq!(splits_axioms_degree(&s.crisp(&["0"]).unwrap(), &ax).unwrap(), h.bot());
        assert_eq!(splits_axioms_degree(&s.crisp(&["0", "1"]).unwrap(), &ax).unwrap(), h.top());
    }

    #[test]
    fn generated_examples() {
        let s = boolean(3);
        let ax = single_axiom(&s);
        let a = generate_sat(&ax).unwrap();
        let j = generate_red(&ax).unwrap();
        let f = |names: &[&str]| s.crisp(names).unwrap();
        assert_eq!(a.op().eval(&f(&["1", "2"])), s.full());
        assert_eq!(a.op().eval(&f(&["1"])), f(&["1"]));
        assert_eq!(j.op().eval(&f(&["0"])), s.empty());
        assert_eq!(j.op().eval(&f(&["0", "1"])), f(&["0", "1"]));
        let none = AxiomSet::new(&s, "none");
        assert!(operators_equal(generate_sat(&none).unwrap().op(), &Operator::id(&s)).unwrap());
        assert!(operators_equal(generate_red(&none).unwrap().op(), &Operator::id(&s)).unwrap());
    }

    /// Brute-force intersection and union formulas over all crisp subsets.
    fn oracle(s: &Arc<Space>, ax: &AxiomSet, u: &HSubset) -> (HSubset, HSubset) {
        let h = s.algebra();
        let all = s.universe().unwrap();
        let mut least = s.full();
        let mut greatest = s.empty();
        for p in all {
            if s.pointwise_leq(u, p) && fulfills(s, p, ax) == h.top() {
                least = s.intersection(&least, p);
            }
            if s.pointwise_leq(p, u) && splits(s, p, ax) == h.top() {
                greatest = s.union(&greatest, p);
            }
        }
        (least, greatest)
    }

    fn seeded_axioms(s: &Arc<Space>, seed: u64) -> AxiomSet {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut ax = AxiomSet::new(s, format!("rand{seed}"));
        let all = s.universe().unwrap();
        for a in 0..s.points() {
            for _ in 0..rng.gen_range(0..3) {
                ax.add(a, all[rng.gen_range(0..all.len())].clone()).unwrap();
            }
        }
        ax
    }

    #[test]
    fn boolean_fixpoints_match_formulas() {
        for n in 1..=5 {
            let s = boolean(n);
            for seed in 0..20 {
                let ax = seeded_axioms(&s, seed);
                let a = generate_sat(&ax).unwrap();
                let j = generate_red(&ax).unwrap();
                for u in s.universe().unwrap() {
                    let (least, greatest) = oracle(&s, &ax, u);
                    assert_eq!(a.op().eval(u), least);
                    assert_eq!(j.op().eval(u), greatest);
                    assert_eq!(sat_iterates(&ax, u).unwrap().last().unwrap(), &least);
                    assert_eq!(red_iterates(&ax, u).unwrap().last().unwrap(), &greatest);
                }
                assert_eq!(compat_degree(a.op(), j.op()).unwrap().degree, s.algebra().top());
                assert!(operators_equal(jj(&a).unwrap().op(), j.op()).unwrap());
                let t = generate(&ax).unwrap();
                assert!(t.is_saturated().unwrap().holds);
            }
        }
    }

    #[test]
    fn fixed_points_are_the_fulfilling_subsets() {
        let s = boolean(3);
        let ax = seeded_axioms(&s, 3);
        let a = generate_sat(&ax).unwrap();
        for p in s.universe().unwrap() {
            assert_eq!(a.op().eval(p) == *p, fulfills(&s, p, &ax) == s.algebra().top());
        }
    }

    #[test]
    fn fixpoint_is_independent_of_axiom_order() {
        let s = boolean(5);
        let ax = seeded_axioms(&s, 9);
        let mut rev = AxiomSet::new(&s, "rev");
        for a in (0..s.points()).rev() {
            for c in ax.covers(a).iter().rev() {
                rev.add(a, c.subset.clone()).unwrap();
            }
        }
        assert!(operators_equal(generate_sat(&ax).unwrap().op(), generate_sat(&rev).unwrap().op()).unwrap());
        assert!(operators_equal(generate_red(&ax).unwrap().op(), generate_red(&rev).unwrap().op()).unwrap());
    }

    #[test]
    fn large_sparse_carrier() {
        let n = 3000;
        let s = boolean(n);
        let mut ax = AxiomSet::new(&s, "chain");
        for i in 1..n {
            let prev = s.singleton(i - 1);
            ax.add(i, prev).unwrap();
        }
        let a = generate_sat(&ax).unwrap();
        let out = a.op().apply(&s.singleton(0)).unwrap();
        assert_eq!(out, s.full());
        let j = generate_red(&ax).unwrap();
        let mut v = s.full();
        v = HSubset::from_degrees({
            let mut d = v.degrees().to_vec();
            d[1500] = s.algebra().bot();
            d
        });
        let z = j.op().apply(&v).unwrap();
        assert_eq!(z.degrees().iter().filter(|&&d| d == s.algebra().top()).count(), 1500);
    }

    #[test]
    fn iterates_are_monotone_and_short() {
        let s = boolean(4);
        for seed in 0..10 {
            let ax = seeded_axioms(&s, seed);
            for u in s.universe().unwrap() {
                let up = sat_iterates(&ax, u).unwrap();
                assert!(up.windows(2).all(|w| s.pointwise_leq(&w[0], &w[1])));
                assert!(up.len() <= s.points() + 1);
                let down = red_iterates(&ax, u).unwrap();
                assert!(down.windows(2).all(|w| s.pointwise_leq(&w[1], &w[0])));
                assert!(down.len() <= s.points() + 1);
            }
        }
    }

    #[test]
    fn heyting_generation_agrees_with_iteration() {
        let s = Space::over(HeytingAlgebra::chain(3).unwrap(), &["a", "b"]).unwrap();
        let h = s.algebra();
        let all = s.universe().unwrap();
        for seed in 0..15 {
            let ax = seeded_axioms(&s, seed);
            let a = generate_sat(&ax).unwrap();
            let j = generate_red(&ax).unwrap();
            for u in all {
                let up = sat_iterates(&ax, u).unwrap();
                assert_eq!(up.last().unwrap(), &a.op().eval(u));
                assert!(up.len() <= h.len() * s.points() + 1);
                let down = red_iterates(&ax, u).unwrap();
                assert_eq!(down.last().unwrap(), &j.op().eval(u));
            }
            assert_eq!(compat_degree(a.op(), j.op()).unwrap().degree, h.top());
            assert!(operators_equal(jj(&a).unwrap().op(), j.op()).unwrap());
        }
    }

    #[test]
    fn axioms_from_saturation_round_trip() {
        for s in [
            boolean(2),
            Space::over(HeytingAlgebra::chain(3).unwrap(), &["a", "b"]).unwrap(),
        ] {
            for a in all_saturations(&s).unwrap() {
                let ax = axioms_from_saturation(&a).unwrap();
                let back = generate_sat(&ax).unwrap();
                assert!(operators_equal(back.op(), a.op()).unwrap(), "{}", a.label());
                for z in s.universe().unwrap() {
                    assert_eq!(
                        splits_axioms_degree(z, &ax).unwrap(),
                        splits_degree(z, a.op()).unwrap().degree
                    );
                }
            }
        }
        let s = boolean(2);
        let ax = axioms_from_saturation(&Saturation::id(&s)).unwrap();
        assert!(operators_equal(generate_sat(&ax).unwrap().op(), &Operator::id(&s)).unwrap());
    }
}
