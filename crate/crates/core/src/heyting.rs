//! Finite complete Heyting algebras.
//!
//! An algebra is given by its elements and an order; meet, join and
//! implication tables are derived from the order and checked, never supplied.

use std::fmt;

use crate::error::{Error, Result};

pub const DEFAULT_ELEMENT_CAP: usize = 16;

/// An element of a [`HeytingAlgebra`], by index.
///
/// The derived `Ord` compares indices, which is only the algebra order for
/// chains. Use [`HeytingAlgebra::leq`] for the lattice order.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Elem(u8);

impl Elem {
    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub(crate) fn from_index(i: usize) -> Self {
        Elem(i as u8)
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct HeytingAlgebra {
    names: Vec<String>,
    leq: Vec<bool>,
    meet: Vec<Elem>,
    join: Vec<Elem>,
    imp: Vec<Elem>,
    bot: Elem,
    top: Elem,
}

impl fmt::Debug for HeytingAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("HeytingAlgebra")
            .field("elements", &self.names)
            .field("bot", &self.name(self.bot))
            .field("top", &self.name(self.top))
            .finish()
    }
}

impl HeytingAlgebra {
    /// Builds an algebra from element names and `(lower, upper)` order pairs.
    /// The order is closed reflexively and transitively.
    pub fn build_from_order<S: AsRef<str>>(elements: &[S], pairs: &[(S, S)]) -> Result<Self> {
        Self::build_with_cap(elements, pairs, DEFAULT_ELEMENT_CAP)
    }

    pub fn build_with_cap<S: AsRef<str>>(
        elements: &[S],
        pairs: &[(S, S)],
        cap: usize,
    ) -> Result<Self> {
        let n = elements.len();
        if n == 0 {
            return Err(Error::EmptyAlgebra);
        }
        if n > cap || n > u8::MAX as usize {
            return Err(Error::TooManyElements { count: n, cap });
        }
        let names: Vec<String> = elements.iter().map(|e| e.as_ref().to_string()).collect();
        for (i, name) in names.iter().enumerate() {
            if names[..i].contains(name) {
                return Err(Error::DuplicateName(name.clone()));
            }
        }
        let lookup = |s: &str| {
            names
                .iter()
                .position(|n| n == s)
                .ok_or_else(|| Error::UnknownElement(s.to_string()))
        };

        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        for (lo, hi) in pairs {
            let (lo, hi) = (lookup(lo.as_ref())?, lookup(hi.as_ref())?);
            leq[lo * n + hi] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if leq[i * n + k] {
                    for j in 0..n {
                        if leq[k * n + j] {
                            leq[i * n + j] = true;
                        }
                    }
                }
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if leq[i * n + j] && leq[j * n + i] {
                    return Err(Error::NotAPartialOrder(names[i].clone(), names[j].clone()));
                }
            }
        }

        let le = |i: usize, j: usize| leq[i * n + j];
        // greatest element of `cands` w.r.t. `le`, if any
        let greatest = |cands: &[usize]| {
            cands
                .iter()
                .copied()
                .find(|&c| cands.iter().all(|&d| le(d, c)))
        };
        let least = |cands: &[usize]| {
            cands
                .iter()
                .copied()
                .find(|&c| cands.iter().all(|&d| le(c, d)))
        };

        let mut meet = vec![Elem(0); n * n];
        let mut join = vec![Elem(0); n * n];
        for a in 0..n {
            for b in 0..n {
                let lower: Vec<usize> = (0..n).filter(|&c| le(c, a) && le(c, b)).collect();
                let upper: Vec<usize> = (0..n).filter(|&c| le(a, c) && le(b, c)).collect();
                let m = greatest(&lower).ok_or_else(|| {
                    Error::NotALattice(names[a].clone(), names[b].clone(), "infimum")
                })?;
                let j = least(&upper).ok_or_else(|| {
                    Error::NotALattice(names[a].clone(), names[b].clone(), "supremum")
                })?;
                meet[a * n + b] = Elem(m as u8);
                join[a * n + b] = Elem(j as u8);
            }
        }
        let all: Vec<usize> = (0..n).collect();
        let bot = least(&all).expect("finite lattice has a bottom");
        let top = greatest(&all).expect("finite lattice has a top");

        // imp(a, b) is the join of all c with c ∧ a ≤ b; residuation is then
        // checked on every triple.
        let mut imp = vec![Elem(0); n * n];
        for a in 0..n {
            for b in 0..n {
                let mut acc = bot;
                for c in 0..n {
                    if le(meet[c * n + a].index(), b) {
                        acc = join[acc * n + c].index();
                    }
                }
                imp[a * n + b] = Elem(acc as u8);
            }
        }
        for a in 0..n {
            for b in 0..n {
                let i = imp[a * n + b].index();
                for c in 0..n {
                    if le(c, i) != le(meet[c * n + a].index(), b) {
                        return Err(Error::NotHeyting {
                            a: names[a].clone(),
                            b: names[b].clone(),
                            c: names[c].clone(),
                        });
                    }
                }
            }
        }

        Ok(HeytingAlgebra {
            names,
            leq,
            meet,
            join,
            imp,
            bot: Elem(bot as u8),
            top: Elem(top as u8),
        })
    }

    /// The two-element Boolean algebra `0 < 1`.
    pub fn boolean2() -> Self {
        Self::chain(2).expect("two-element chain")
    }

    /// The chain `0 < u1 < … < 1` with `n` elements; for `n = 3` the middle
    /// element is named `u`.
    pub fn chain(n: usize) -> Result<Self> {
        let names: Vec<String> = (0..n)
            .map(|i| match i {
                0 => "0".to_string(),
                i if i + 1 == n => "1".to_string(),
                _ if n == 3 => "u".to_string(),
                i => format!("u{i}"),
            })
            .collect();
        let pairs: Vec<(String, String)> = names.windows(2).map(|w| (w[0].clone(), w[1].clone())).collect();
        Self::build_from_order(&names, &pairs)
    }

    /// The algebra of downward-closed subsets of a finite poset, ordered by
    /// inclusion. These are the opens of the corresponding finite (Alexandrov)
    /// space. Elements are named by the maximal points of the downset joined
    /// with `+`; the empty downset is `0` and the full one `1`.
    pub fn downsets<S: AsRef<str>>(points: &[S], order: &[(S, S)]) -> Result<Self> {
        let pts: Vec<String> = points.iter().map(|p| p.as_ref().to_string()).collect();
        let n = pts.len();
        if n > 12 {
            return Err(Error::TooManyElements { count: 1 << n, cap: DEFAULT_ELEMENT_CAP });
        }
        let idx = |s: &str| {
            pts.iter()
                .position(|p| p == s)
                .ok_or_else(|| Error::UnknownPoint(s.to_string()))
        };
        let mut le = vec![false; n * n];
        for i in 0..n {
            le[i * n + i] = true;
        }
        for (lo, hi) in order {
            let (lo, hi) = (idx(lo.as_ref())?, idx(hi.as_ref())?);
            le[lo * n + hi] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if le[i * n + k] {
                    for j in 0..n {
                        if le[k * n + j] {
                            le[i * n + j] = true;
                        }
                    }
                }
            }
        }
        let downsets: Vec<u32> = (0u32..(1 << n))
            .filter(|&m| {
                (0..n).all(|j| {
                    m & (1 << j) == 0 || (0..n).all(|i| !le[i * n + j] || m & (1 << i) != 0)
                })
            })
            .collect();
        let full = (1u32 << n) - 1;
        let name_of = |m: u32| -> String {
            if m == 0 {
                return "0".into();
            }
            if m == full {
                return "1".into();
            }
            let maximal: Vec<&str> = (0..n)
                .filter(|&i| m & (1 << i) != 0)
                .filter(|&i| (0..n).all(|j| j == i || m & (1 << j) == 0 || !le[i * n + j]))
                .map(|i| pts[i].as_str())
                .collect();
            maximal.join("+")
        };
        let names: Vec<String> = downsets.iter().map(|&m| name_of(m)).collect();
        let mut pairs = Vec::new();
        for (i, &a) in downsets.iter().enumerate() {
            for (j, &b) in downsets.iter().enumerate() {
                if i != j && a & b == a {
                    pairs.push((names[i].clone(), names[j].clone()));
                }
            }
        }
        Self::build_from_order(&names, &pairs)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        (0..self.len()).map(Elem::from_index)
    }

    pub fn name(&self, x: Elem) -> &str {
        &self.names[x.index()]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn element(&self, name: &str) -> Option<Elem> {
        self.names.iter().position(|n| n == name).map(Elem::from_index)
    }

    pub fn bot(&self) -> Elem {
        self.bot
    }

    pub fn top(&self) -> Elem {
        self.top
    }

    pub fn is_boolean(&self) -> bool {
        self.elements().all(|x| self.neg(self.neg(x)) == x)
    }

    #[inline]
    pub fn leq(&self, a: Elem, b: Elem) -> bool {
        self.leq[a.index() * self.len() + b.index()]
    }

    #[inline]
    pub fn meet(&self, a: Elem, b: Elem) -> Elem {
        self.meet[a.index() * self.len() + b.index()]
    }

    #[inline]
    pub fn join(&self, a: Elem, b: Elem) -> Elem {
        self.join[a.index() * self.len() + b.index()]
    }

    #[inline]
    pub fn imp(&self, a: Elem, b: Elem) -> Elem {
        self.imp[a.index() * self.len() + b.index()]
    }

    /// Pseudo-complement `a → ⊥`.
    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.imp(a, self.bot)
    }

    pub fn iff(&self, a: Elem, b: Elem) -> Elem {
        self.meet(self.imp(a, b), self.imp(b, a))
    }

    pub fn big_meet<I: IntoIterator<Item = Elem>>(&self, xs: I) -> Elem {
        xs.into_iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    pub fn big_join<I: IntoIterator<Item = Elem>>(&self, xs: I) -> Elem {
        xs.into_iter().fold(self.bot, |acc, x| self.join(acc, x))
    }

    /// Covering pairs of the order, in index order.
    pub fn covers(&self) -> Vec<(Elem, Elem)> {
        let mut out = Vec::new();
        for a in self.elements() {
            for b in self.elements() {
                if a != b
                    && self.leq(a, b)
                    && !self
                        .elements()
                        .any(|c| c != a && c != b && self.leq(a, c) && self.leq(c, b))
                {
                    out.push((a, b));
                }
            }
        }
        out
    }
}
