//! Basic topologies represented by a relation `r ⊆ X × S`.

use std::sync::Arc;

use crate::btop::BasicTopology;
use crate::error::{Error, Result};
use crate::galois::{aa, Reduction, Saturation};
use crate::heyting::Elem;
use crate::hset::{Carrier, HSubset, Space};
use crate::optable::{operators_equal, Operator};
use crate::report::{Infimum, LawReport, Witness};

/// A relation between the points of `domain` (X) and of `codomain` (S),
/// valued in their common algebra.
#[derive(Clone, Debug)]
pub struct HRelation {
    name: String,
    domain: Arc<Space>,
    codomain: Arc<Space>,
    matrix: Vec<Elem>,
}

impl HRelation {
    pub fn new(name: impl Into<String>, domain: &Arc<Space>, codomain: &Arc<Space>) -> Result<Self> {
        if domain.algebra() != codomain.algebra() {
            return Err(Error::Mismatch("relation domain and codomain use different algebras".into()));
        }
        Ok(HRelation {
            name: name.into(),
            domain: domain.clone(),
            codomain: codomain.clone(),
            matrix: vec![domain.algebra().bot(); domain.points() * codomain.points()],
        })
    }

    pub fn identity(space: &Arc<Space>) -> Self {
        let mut r = HRelation::new("id", space, space).expect("same algebra");
        for x in 0..space.points() {
            r.set(x, x, space.algebra().top());
        }
        r
    }

    pub fn set(&mut self, x: usize, a: usize, degree: Elem) {
        let n = self.codomain.points();
        self.matrix[x * n + a] = degree;
    }

    pub fn degree(&self, x: usize, a: usize) -> Elem {
        self.matrix[x * self.codomain.points() + a]
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn domain(&self) -> &Arc<Space> {
        &self.domain
    }

    pub fn codomain(&self) -> &Arc<Space> {
        &self.codomain
    }

    /// Entries with degree above bottom, as `(x, a, degree)`.
    pub fn entries(&self) -> Vec<(usize, usize, Elem)> {
        let bot = self.domain.algebra().bot();
        let n = self.codomain.points();
        (0..self.domain.points())
            .flat_map(|x| (0..n).map(move |a| (x, a)))
            .map(|(x, a)| (x, a, self.degree(x, a)))
            .filter(|&(_, _, d)| d != bot)
            .collect()
    }

    fn pad(&self) -> (usize, usize) {
        (self.domain.points(), self.codomain.points())
    }

    /// `rD(a) = ⋁_x D(x) ∧ r(x, a)`.
    pub fn dir_image(&self, d: &HSubset) -> Result<HSubset> {
        self.domain.check(d)?;
        Ok(self.dir(d))
    }

    fn dir(&self, d: &HSubset) -> HSubset {
        let h = self.domain.algebra();
        let (nx, ns) = self.pad();
        HSubset::from_degrees(
            (0..ns)
                .map(|a| h.big_join((0..nx).map(|x| h.meet(d.at(x), self.degree(x, a)))))
                .collect(),
        )
    }

    /// `r⁻U(x) = ⋁_a r(x, a) ∧ U(a)`.
    pub fn inv_image(&self, u: &HSubset) -> Result<HSubset> {
        self.codomain.check(u)?;
        Ok(self.inv(u))
    }

    fn inv(&self, u: &HSubset) -> HSubset {
        let h = self.domain.algebra();
        let (nx, ns) = self.pad();
        HSubset::from_degrees(
            (0..nx)
                .map(|x| h.big_join((0..ns).map(|a| h.meet(self.degree(x, a), u.at(a)))))
                .collect(),
        )
    }

    /// `r*U(x) = ⋀_a (r(x, a) ⇒ U(a))`.
    pub fn right_adjoint(&self, u: &HSubset) -> Result<HSubset> {
        self.codomain.check(u)?;
        Ok(self.star(u))
    }

    fn star(&self, u: &HSubset) -> HSubset {
        let h = self.domain.algebra();
        let (nx, ns) = self.pad();
        HSubset::from_degrees(
            (0..nx)
                .map(|x| h.big_meet((0..ns).map(|a| h.imp(self.degree(x, a), u.at(a)))))
                .collect(),
        )
    }

    /// `r^{-*}D(a) = ⋀_x (r(x, a) ⇒ D(x))`.
    pub fn inv_right_adjoint(&self, d: &HSubset) -> Result<HSubset> {
        self.domain.check(d)?;
        Ok(self.inv_star(d))
    }

    fn inv_star(&self, d: &HSubset) -> HSubset {
        let h = self.domain.algebra();
        let (nx, ns) = self.pad();
        HSubset::from_degrees(
            (0..ns)
                .map(|a| h.big_meet((0..nx).map(|x| h.imp(self.degree(x, a), d.at(x)))))
                .collect(),
        )
    }

    /// `r ∘ r*` as an operator on S.
    pub fn interior(&self) -> Operator {
        let r = self.clone();
        Operator::from_fn(&self.codomain, format!("{}.{}*", self.name, self.name), move |_, u| {
            r.dir(&r.star(u))
        })
    }

    /// `r^{-*} ∘ r⁻` as an operator on S.
    pub fn closure(&self) -> Operator {
        let r = self.clone();
        Operator::from_fn(&self.codomain, format!("{}-*.{}-", self.name, self.name), move |_, u| {
            r.inv_star(&r.inv(u))
        })
    }
}

fn both_universes(r: &HRelation) -> Result<(&[HSubset], &[HSubset])> {
    Ok((r.domain.universe()?, r.codomain.universe()?))
}

/// `rD ⊆ U ⇔ D ⊆ r*U` and `r⁻U ⊆ D ⇔ U ⊆ r^{-*}D`, as equal degrees.
pub fn adjunction_check(r: &HRelation) -> Result<LawReport> {
    let (xs, ss) = both_universes(r)?;
    let (dx, ds) = (&r.domain, &r.codomain);
    let h = ds.algebra();
    let mut inf = Infimum::new(h);
    for d in xs {
        for u in ss {
            let e1 = h.iff(ds.incl(&r.dir(d), u), dx.incl(d, &r.star(u)));
            let e2 = h.iff(dx.incl(&r.inv(u), d), ds.incl(u, &r.inv_star(d)));
            inf.push(h.meet(e1, e2), || Witness::subsets(vec![d.clone(), u.clone()]));
        }
    }
    let mut report = LawReport::from_degree("relation-adjunctions", h, inf.finish());
    report.cases = xs.len() * ss.len();
    Ok(report)
}

/// `rD ≬ U = D ≬ r⁻U` for all `D`, `U`.
pub fn symmetry_check(r: &HRelation) -> Result<LawReport> {
    let (xs, ss) = both_universes(r)?;
    let (dx, ds) = (&r.domain, &r.codomain);
    let h = ds.algebra();
    let mut inf = Infimum::new(h);
    for d in xs {
        for u in ss {
            let e = h.iff(ds.overlap(&r.dir(d), u), dx.overlap(d, &r.inv(u)));
            inf.push(e, || Witness::subsets(vec![d.clone(), u.clone()]));
        }
    }
    let mut report = LawReport::from_degree("symmetry", h, inf.finish());
    report.cases = xs.len() * ss.len();
    Ok(report)
}

/// `r r* r = r` on every subset of X, or on the point rows above the cap.
pub fn triangular_check(r: &HRelation) -> Result<LawReport> {
    let dx = &r.domain;
    let h = dx.algebra();
    let inputs: Vec<HSubset> = match dx.universe() {
        Ok(all) => all.to_vec(),
        Err(Error::CapExceeded { .. }) => (0..dx.points()).map(|x| dx.singleton(x)).collect(),
        Err(e) => return Err(e),
    };
    let mut inf = Infimum::new(h);
    for d in &inputs {
        let once = r.dir(d);
        let thrice = r.dir(&r.star(&once));
        inf.push(r.codomain.eq_degree(&thrice, &once), || Witness::subsets(vec![d.clone()]));
    }
    let mut report = LawReport::from_degree("triangular", h, inf.finish());
    report.cases = inputs.len();
    Ok(report)
}

/// `[r^{-*} r⁻, r r*]`, checked compatible and reduced.
pub fn representable(r: &HRelation) -> Result<BasicTopology> {
    let sat = Saturation::by_construction(r.closure(), "image of a relation")?;
    let red = Reduction::by_construction(r.interior(), "image of a relation")?;
    let space = r.codomain.clone();
    let t = if space.within_cap() {
        let t = BasicTopology::make(sat, red)?;
        let check = t.is_reduced()?;
        if !check.holds {
            let at = check.witness.map(|w| space.format_subset(&w)).unwrap_or_default();
            return Err(Error::Validation {
                name: r.name.clone(),
                message: format!("represented topology is not reduced at {at}"),
            });
        }
        t
    } else {
        BasicTopology::make_unchecked(sat, red)
    };
    Ok(t.named(format!("rep({})", r.name)))
}

/// The relation `Z ∋ a` from the fixed points of `J` to S; each fixed point
/// is named by its subset literal.
pub fn represent_reduction(j: &Reduction) -> Result<HRelation> {
    let space = j.space();
    let fixed = j.op().fixed_points()?;
    let names: Vec<String> = fixed.iter().map(|z| space.format_subset(z)).collect();
    let domain = Space::with_cap(space.algebra().clone(), Carrier::new(&names)?, space.subset_cap());
    let mut r = HRelation::new(format!("rep({})", j.label()), &domain, space)?;
    for (x, z) in fixed.iter().enumerate() {
        for a in 0..space.points() {
            r.set(x, a, z.at(a));
        }
    }
    Ok(r)
}

/// `representable(represent_reduction(J))` gives back `J` and `AA(J)`.
pub fn round_trip_check(j: &Reduction) -> Result<LawReport> {
    let space = j.space();
    let h = space.algebra();
    let r = represent_reduction(j)?;
    let red_ok = operators_equal(&r.interior(), j.op())?;
    let sat_ok = operators_equal(&r.closure(), aa(j)?.op())?;
    let as_elem = |b: bool| if b { h.top() } else { h.bot() };
    let ds = [as_elem(red_ok), as_elem(sat_ok)];
    let mut report = LawReport::new("representation-round-trip");
    report.degree = Some(h.meet(ds[0], ds[1]));
    report.status = if red_ok && sat_ok {
        crate::report::Status::Holds
    } else {
        crate::report::Status::Fails
    };
    report.cases = 1;
    report.components = vec![("rr* = J".into(), ds[0]), ("r-*r- = AA(J)".into(), ds[1])];
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galois::{all_reductions, random_reduction};
    use crate::heyting::HeytingAlgebra;
    use rand::{Rng, SeedableRng};

    fn xa_relation() -> HRelation {
        let h = HeytingAlgebra::boolean2();
        let x = Space::over(h.clone(), &["x"]).unwrap();
        let s = Space::over(h, &["a", "b"]).unwrap();
        let mut r = HRelation::new("r", &x, &s).unwrap();
        r.set(0, 0, s.algebra().top());
        r
    }

    #[test]
    fn images_and_adjoints() {
        let r = xa_relation();
        let (x, s) = (r.domain().clone(), r.codomain().clone());
        assert_eq!(r.dir_image(&x.empty()).unwrap(), s.empty());
        assert_eq!(r.dir_image(&x.full()).unwrap(), s.crisp(&["a"]).unwrap());
        assert_eq!(r.inv_image(&s.crisp(&["b"]).unwrap()).unwrap(), x.empty());
        assert_eq!(r.right_adjoint(&s.full()).unwrap(), x.full());
        assert_eq!(r.right_adjoint(&s.crisp(&["a"]).unwrap()).unwrap(), x.full());
        assert_eq!(r.right_adjoint(&s.crisp(&["b"]).unwrap()).unwrap(), x.empty());
        assert!(adjunction_check(&r).unwrap().holds());
        assert!(symmetry_check(&r).unwrap().holds());
        assert!(triangular_check(&r).unwrap().holds());
    }

    #[test]
    fn xa_representable() {
        let r = xa_relation();
        let s = r.codomain().clone();
        let t = representable(&r).unwrap();
        let a_only = s.crisp(&["a"]).unwrap();
        for u in s.universe().unwrap() {
            assert_eq!(t.red().op().eval(u), s.intersection(u, &a_only));
            let expected = if u.at(0) == s.algebra().top() { s.full() } else { s.crisp(&["b"]).unwrap() };
            assert_eq!(t.sat().op().eval(u), expected);
        }
    }

    #[test]
    fn identity_relation_gives_id_id() {
        let s = Space::over(HeytingAlgebra::chain(3).unwrap(), &["a", "b"]).unwrap();
        let t = representable(&HRelation::identity(&s)).unwrap();
        assert!(operators_equal(t.sat().op(), &Operator::id(&s)).unwrap());
        assert!(operators_equal(t.red().op(), &Operator::id(&s)).unwrap());
    }

    #[test]
    fn empty_relation_is_symmetric() {
        let h = HeytingAlgebra::chain(3).unwrap();
        let x = Space::over(h.clone(), &["x", "y"]).unwrap();
        let s = Space::over(h, &["a"]).unwrap();
        let r = HRelation::new("e", &x, &s).unwrap();
        let rep = symmetry_check(&r).unwrap();
        assert!(rep.holds());
        for d in x.universe().unwrap() {
            assert_eq!(r.dir(d), s.empty());
        }
    }

    fn random_relation(seed: u64, h: HeytingAlgebra, nx: usize, ns: usize) -> HRelation {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let xs: Vec<String> = (0..nx).map(|i| format!("x{i}")).collect();
        let ss: Vec<String> = (0..ns).map(|i| format!("s{i}")).collect();
        let x = Space::over(h.clone(), &xs).unwrap();
        let s = Space::over(h, &ss).unwrap();
        let mut r = HRelation::new(format!("r{seed}"), &x, &s).unwrap();
        let elems: Vec<Elem> = s.algebra().elements().collect();
        for i in 0..nx {
            for a in 0..ns {
                r.set(i, a, elems[rng.gen_range(0..elems.len())]);
            }
        }
        r
    }

    #[test]
    fn random_relations_satisfy_all_laws() {
        for seed in 0..12 {
            for h in [HeytingAlgebra::boolean2(), HeytingAlgebra::chain(3).unwrap()] {
                let nx = 1 + (seed as usize % 3);
                let r = random_relation(seed, h, nx, 2);
                assert!(adjunction_check(&r).unwrap().holds());
                assert!(symmetry_check(&r).unwrap().holds());
                assert!(triangular_check(&r).unwrap().holds());
                let t = representable(&r).unwrap();
                assert!(t.is_reduced().unwrap().holds);
                let s = r.codomain();
                for (u, v) in s.universe().unwrap().iter().zip(s.universe().unwrap().iter().rev()) {
                    let ru = r.inv(&s.union(u, v));
                    assert_eq!(ru, r.domain().union(&r.inv(u), &r.inv(v)));
                }
            }
        }
    }

    #[test]
    fn every_reduction_is_representable() {
        for s in [
            Space::over(HeytingAlgebra::boolean2(), &["a", "b"]).unwrap(),
            Space::over(HeytingAlgebra::chain(3).unwrap(), &["a", "b"]).unwrap(),
        ] {
            for j in all_reductions(&s).unwrap() {
                let rep = round_trip_check(&j).unwrap();
                assert!(rep.holds(), "{}\n{}", j.label(), rep.render(&s));
            }
        }
    }

    #[test]
    fn bottom_and_identity_reductions() {
        let s = Space::over(HeytingAlgebra::boolean2(), &["a", "b"]).unwrap();
        let r = represent_reduction(&Reduction::bot(&s)).unwrap();
        assert_eq!(r.domain().carrier().points(), &["{}".to_string()]);
        let t = representable(&r).unwrap();
        assert!(operators_equal(t.red().op(), &Operator::bot(&s)).unwrap());
        assert!(operators_equal(t.sat().op(), &Operator::top(&s)).unwrap());
        let r = represent_reduction(&Reduction::id(&s)).unwrap();
        assert_eq!(r.domain().points(), 4);
        assert!(round_trip_check(&Reduction::id(&s)).unwrap().holds());
    }

    #[test]
    fn sampled_reductions_on_three_points() {
        let s = Space::over(HeytingAlgebra::chain(3).unwrap(), &["a", "b", "c"]).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..5 {
            let j = random_reduction(&s, &mut rng).unwrap();
            assert!(round_trip_check(&j).unwrap().holds());
        }
    }
}
