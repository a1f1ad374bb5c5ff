//! Truth-degree valued subsets of a finite carrier.

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::heyting::{Elem, HeytingAlgebra};

pub const DEFAULT_SUBSET_CAP: usize = 4096;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Carrier {
    points: Vec<String>,
}

impl Carrier {
    pub fn new<S: AsRef<str>>(points: &[S]) -> Result<Self> {
        let points: Vec<String> = points.iter().map(|p| p.as_ref().to_string()).collect();
        for (i, p) in points.iter().enumerate() {
            if points[..i].contains(p) {
                return Err(Error::DuplicateName(p.clone()));
            }
        }
        Ok(Carrier { points })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn name(&self, i: usize) -> &str {
        &self.points[i]
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.points.iter().position(|p| p == name)
    }
}

/// A subset of the carrier, valued in the algebra: one degree per point.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct HSubset(Box<[Elem]>);

impl HSubset {
    pub fn from_degrees(degrees: Vec<Elem>) -> Self {
        HSubset(degrees.into_boxed_slice())
    }

    pub fn degrees(&self) -> &[Elem] {
        &self.0
    }

    #[inline]
    pub fn at(&self, point: usize) -> Elem {
        self.0[point]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// An algebra together with a carrier: the context every subset, operator and
/// law check lives in.
pub struct Space {
    algebra: HeytingAlgebra,
    carrier: Carrier,
    subset_cap: usize,
    universe: OnceLock<Vec<HSubset>>,
}

impl fmt::Debug for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Space")
            .field("algebra", &self.algebra.names())
            .field("carrier", &self.carrier.points())
            .field("subset_cap", &self.subset_cap)
            .finish()
    }
}

impl PartialEq for Space {
    fn eq(&self, other: &Self) -> bool {
        self.algebra == other.algebra && self.carrier == other.carrier
    }
}

impl Space {
    pub fn new(algebra: HeytingAlgebra, carrier: Carrier) -> Arc<Self> {
        Self::with_cap(algebra, carrier, DEFAULT_SUBSET_CAP)
    }

    pub fn with_cap(algebra: HeytingAlgebra, carrier: Carrier, subset_cap: usize) -> Arc<Self> {
        Arc::new(Space {
            algebra,
            carrier,
            subset_cap,
            universe: OnceLock::new(),
        })
    }

    /// Convenience: a space over the named points.
    pub fn over<S: AsRef<str>>(algebra: HeytingAlgebra, points: &[S]) -> Result<Arc<Self>> {
        Ok(Self::new(algebra, Carrier::new(points)?))
    }

    pub fn algebra(&self) -> &HeytingAlgebra {
        &self.algebra
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    pub fn subset_cap(&self) -> usize {
        self.subset_cap
    }

    pub fn points(&self) -> usize {
        self.carrier.len()
    }

    pub fn is_boolean(&self) -> bool {
        self.algebra.is_boolean()
    }

    /// Whether every subset is crisp, i.e. the algebra is `{0, 1}`.
    pub fn is_classical(&self) -> bool {
        self.algebra.len() == 2
    }

    /// `|H|^|S|`, or `None` when it overflows.
    pub fn subset_count(&self) -> Option<usize> {
        let h = self.algebra.len();
        (0..self.points()).try_fold(1usize, |acc, _| acc.checked_mul(h))
    }

    pub fn within_cap(&self) -> bool {
        self.subset_count().is_some_and(|c| c <= self.subset_cap)
    }

    pub fn ensure_enumerable(&self) -> Result<usize> {
        match self.subset_count() {
            Some(c) if c <= self.subset_cap => Ok(c),
            other => Err(Error::CapExceeded {
                needed: other.map_or_else(
                    || format!("{}^{}", self.algebra.len(), self.points()),
                    |c| c.to_string(),
                ),
                cap: self.subset_cap,
            }),
        }
    }

    /// All subsets in lexicographic order of degree vectors (the first point is
    /// most significant, degrees ordered by element index).
    pub fn universe(&self) -> Result<&[HSubset]> {
        self.ensure_enumerable()?;
        Ok(self.universe.get_or_init(|| self.enumerate().collect()))
    }

    /// A fresh, restartable enumeration stream; see [`Space::universe`].
    pub fn subsets(&self) -> Result<impl Iterator<Item = HSubset> + '_> {
        self.ensure_enumerable()?;
        Ok(self.enumerate())
    }

    fn enumerate(&self) -> impl Iterator<Item = HSubset> + '_ {
        let h = self.algebra.len();
        let n = self.points();
        let total = self.subset_count().unwrap_or(0);
        (0..total).map(move |mut code| {
            let mut d = vec![Elem::from_index(0); n];
            for slot in d.iter_mut().rev() {
                *slot = Elem::from_index(code % h);
                code /= h;
            }
            HSubset::from_degrees(d)
        })
    }

    /// Position of `u` in the enumeration order.
    #[inline]
    pub fn index_of(&self, u: &HSubset) -> usize {
        let h = self.algebra.len();
        u.0.iter().fold(0usize, |acc, d| acc * h + d.index())
    }

    pub fn check(&self, u: &HSubset) -> Result<()> {
        if u.len() != self.points() || u.0.iter().any(|d| d.index() >= self.algebra.len()) {
            return Err(Error::Mismatch(format!(
                "subset of length {} does not live on a carrier of {} points",
                u.len(),
                self.points()
            )));
        }
        Ok(())
    }

    pub fn constant(&self, e: Elem) -> HSubset {
        HSubset::from_degrees(vec![e; self.points()])
    }

    pub fn empty(&self) -> HSubset {
        self.constant(self.algebra.bot())
    }

    pub fn full(&self) -> HSubset {
        self.constant(self.algebra.top())
    }

    pub fn singleton(&self, point: usize) -> HSubset {
        let mut d = vec![self.algebra.bot(); self.points()];
        d[point] = self.algebra.top();
        HSubset::from_degrees(d)
    }

    /// A subset from `(point, degree)` names; omitted points get bottom.
    pub fn subset<S: AsRef<str>>(&self, entries: &[(S, S)]) -> Result<HSubset> {
        let mut d = vec![self.algebra.bot(); self.points()];
        for (p, e) in entries {
            let i = self
                .carrier
                .index(p.as_ref())
                .ok_or_else(|| Error::UnknownPoint(p.as_ref().to_string()))?;
            d[i] = self
                .algebra
                .element(e.as_ref())
                .ok_or_else(|| Error::UnknownElement(e.as_ref().to_string()))?;
        }
        Ok(HSubset::from_degrees(d))
    }

    /// A crisp subset containing exactly the named points at top degree.
    pub fn crisp<S: AsRef<str>>(&self, points: &[S]) -> Result<HSubset> {
        let mut d = vec![self.algebra.bot(); self.points()];
        for p in points {
            let i = self
                .carrier
                .index(p.as_ref())
                .ok_or_else(|| Error::UnknownPoint(p.as_ref().to_string()))?;
            d[i] = self.algebra.top();
        }
        Ok(HSubset::from_degrees(d))
    }

    /// Parses a literal such as `{a, b:u}`; a bare point means top degree.
    pub fn parse_subset(&self, text: &str) -> Result<HSubset> {
        let bad = |m: &str| Error::Parse {
            line: 1,
            column: 1,
            message: format!("{m} in subset literal `{text}`"),
        };
        let inner = text
            .trim()
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .ok_or_else(|| bad("missing braces"))?;
        let mut d = vec![self.algebra.bot(); self.points()];
        for entry in inner.split(',').map(str::trim).filter(|e| !e.is_empty()) {
            let (p, e) = match entry.split_once(':') {
                Some((p, e)) => (p.trim(), e.trim()),
                None => (entry, self.algebra.name(self.algebra.top())),
            };
            let i = self
                .carrier
                .index(p)
                .ok_or_else(|| Error::UnknownPoint(p.to_string()))?;
            d[i] = self
                .algebra
                .element(e)
                .ok_or_else(|| Error::UnknownElement(e.to_string()))?;
        }
        Ok(HSubset::from_degrees(d))
    }

    /// Renders `u` as a literal that [`Space::parse_subset`] reads back.
    pub fn format_subset(&self, u: &HSubset) -> String {
        let h = &self.algebra;
        let parts: Vec<String> = u
            .0
            .iter()
            .enumerate()
            .filter(|(_, &d)| d != h.bot())
            .map(|(i, &d)| {
                if d == h.top() {
                    self.carrier.name(i).to_string()
                } else {
                    format!("{}:{}", self.carrier.name(i), h.name(d))
                }
            })
            .collect();
        format!("{{{}}}", parts.join(", "))
    }

    pub fn name(&self, e: Elem) -> &str {
        self.algebra.name(e)
    }

    fn zip(&self, u: &HSubset, v: &HSubset, f: impl Fn(Elem, Elem) -> Elem) -> HSubset {
        HSubset(u.0.iter().zip(v.0.iter()).map(|(&a, &b)| f(a, b)).collect())
    }

    /// `U ≬ V`: the degree to which some point lies in both.
    #[inline]
    pub fn overlap(&self, u: &HSubset, v: &HSubset) -> Elem {
        let h = &self.algebra;
        u.0.iter()
            .zip(v.0.iter())
            .fold(h.bot(), |acc, (&a, &b)| h.join(acc, h.meet(a, b)))
    }

    /// `U ⊆ V` as a degree.
    #[inline]
    pub fn incl(&self, u: &HSubset, v: &HSubset) -> Elem {
        let h = &self.algebra;
        u.0.iter()
            .zip(v.0.iter())
            .fold(h.top(), |acc, (&a, &b)| h.meet(acc, h.imp(a, b)))
    }

    pub fn eq_degree(&self, u: &HSubset, v: &HSubset) -> Elem {
        self.algebra.meet(self.incl(u, v), self.incl(v, u))
    }

    pub fn union(&self, u: &HSubset, v: &HSubset) -> HSubset {
        self.zip(u, v, |a, b| self.algebra.join(a, b))
    }

    pub fn intersection(&self, u: &HSubset, v: &HSubset) -> HSubset {
        self.zip(u, v, |a, b| self.algebra.meet(a, b))
    }

    pub fn pseudo_complement(&self, u: &HSubset) -> HSubset {
        HSubset(u.0.iter().map(|&a| self.algebra.neg(a)).collect())
    }

    pub fn pointwise_leq(&self, u: &HSubset, v: &HSubset) -> bool {
        u.0.iter().zip(v.0.iter()).all(|(&a, &b)| self.algebra.leq(a, b))
    }

    pub fn same_context(&self, other: &Space) -> bool {
        std::ptr::eq(self, other) || self == other
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn boolean_ab() -> Arc<Space> {
        Space::over(HeytingAlgebra::boolean2(), &["a", "b"]).unwrap()
    }

    fn chain3(points: &[&str]) -> Arc<Space> {
        Space::over(HeytingAlgebra::chain(3).unwrap(), points).unwrap()
    }

    #[test]
    fn boolean_overlap_and_inclusion() {
        let s = boolean_ab();
        let a = s.crisp(&["a"]).unwrap();
        let ab = s.crisp(&["a", "b"]).unwrap();
        let top = s.algebra().top();
        assert_eq!(s.overlap(&a, &ab), top);
        assert_eq!(s.overlap(&a, &s.empty()), s.algebra().bot());
        assert_eq!(s.incl(&s.empty(), &a), top);
        assert_eq!(s.incl(&ab, &a), s.algebra().bot());
        assert_eq!(s.pseudo_complement(&a), s.crisp(&["b"]).unwrap());
    }

    #[test]
    fn three_chain_single_point() {
        let s = chain3(&["*"]);
        let h = s.algebra();
        let u = s.parse_subset("{*:u}").unwrap();
        let full = s.full();
        assert_eq!(s.name(s.overlap(&u, &full)), "u");
        assert_eq!(s.name(s.incl(&full, &u)), "u");
        let neg = s.pseudo_complement(&u);
        assert_eq!(neg.at(0), h.bot());
        let negneg = s.pseudo_complement(&neg);
        assert_eq!(negneg.at(0), h.top());
        assert_ne!(negneg, u);
    }

    #[test]
    fn enumeration_sizes_and_order() {
        assert_eq!(boolean_ab().universe().unwrap().len(), 4);
        assert_eq!(chain3(&["a", "b"]).universe().unwrap().len(), 9);
        assert_eq!(chain3(&["*"]).universe().unwrap().len(), 3);
        let s = boolean_ab();
        let lits: Vec<String> = s
            .universe()
            .unwrap()
            .iter()
            .map(|u| s.format_subset(u))
            .collect();
        assert_eq!(lits, ["{}", "{b}", "{a}", "{a, b}"]);
        for (i, u) in s.universe().unwrap().iter().enumerate() {
            assert_eq!(s.index_of(u), i);
        }
    }

    #[test]
    fn cap_is_enforced() {
        let s = Space::with_cap(
            HeytingAlgebra::chain(3).unwrap(),
            Carrier::new(&["a", "b", "c"]).unwrap(),
            20,
        );
        assert!(matches!(s.universe(), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn literals_round_trip() {
        let s = chain3(&["a", "b"]);
        for u in s.universe().unwrap() {
            assert_eq!(&s.parse_subset(&s.format_subset(u)).unwrap(), u);
        }
        assert!(matches!(s.parse_subset("{c}"), Err(Error::UnknownPoint(_))));
    }

    #[test]
    fn negated_overlap_is_disjointness() {
        let s = chain3(&["a", "b"]);
        let h = s.algebra();
        let all = s.universe().unwrap();
        for u in all {
            for v in all {
                let disjoint = s.incl(&s.intersection(u, v), &s.empty());
                assert_eq!(h.neg(s.overlap(u, v)), disjoint);
                assert_eq!(s.overlap(u, v), s.overlap(v, u));
                for w in all {
                    assert!(h.leq(s.overlap(u, v), s.overlap(u, &s.union(v, w))));
                }
                let both = s.incl(u, v) == h.top() && s.incl(v, u) == h.top();
                assert_eq!(both, u == v);
            }
        }
    }
}
