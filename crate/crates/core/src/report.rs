use std::fmt::Write as _;
use std::time::Duration;

use crate::heyting::{Elem, HeytingAlgebra};
use crate::hset::{HSubset, Space};

/// Inputs at which a quantified degree is attained: an optional point and
/// the subsets bound by the quantifiers, in the order the law names them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub point: Option<usize>,
    pub subsets: Vec<HSubset>,
}

impl Witness {
    pub fn subsets(subsets: Vec<HSubset>) -> Self {
        Witness { point: None, subsets }
    }

    pub fn at(point: usize, subsets: Vec<HSubset>) -> Self {
        Witness {
            point: Some(point),
            subsets,
        }
    }

    pub fn render(&self, space: &Space) -> String {
        let mut parts = Vec::new();
        if let Some(a) = self.point {
            parts.push(format!("a={}", space.carrier().name(a)));
        }
        let labels = ["U", "V", "W", "Z"];
        for (i, u) in self.subsets.iter().enumerate() {
            let label = labels.get(i).copied().unwrap_or("X");
            parts.push(format!("{label}={}", space.format_subset(u)));
        }
        parts.join(" ")
    }
}

/// A truth degree, with the inputs attaining it when it is not top.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graded {
    pub degree: Elem,
    pub witness: Option<Witness>,
}

/// Running meet that remembers, for every value seen, the first input
/// producing it.
pub(crate) struct Infimum<'a> {
    h: &'a HeytingAlgebra,
    acc: Elem,
    first: Vec<Option<Witness>>,
    first_below_top: Option<Witness>,
}

impl<'a> Infimum<'a> {
    pub fn new(h: &'a HeytingAlgebra) -> Self {
        Infimum {
            h,
            acc: h.top(),
            first: vec![None; h.len()],
            first_below_top: None,
        }
    }

    #[inline]
    pub fn push(&mut self, value: Elem, witness: impl FnOnce() -> Witness) {
        if value == self.h.top() {
            return;
        }
        self.acc = self.h.meet(self.acc, value);
        if self.first[value.index()].is_none() {
            let w = witness();
            if self.first_below_top.is_none() {
                self.first_below_top = Some(w.clone());
            }
            self.first[value.index()] = Some(w);
        }
    }

    pub fn is_bottom(&self) -> bool {
        self.acc == self.h.bot()
    }

    pub fn finish(mut self) -> Graded {
        let witness = if self.acc == self.h.top() {
            None
        } else {
            self.first[self.acc.index()]
                .take()
                .or(self.first_below_top.take())
        };
        Graded {
            degree: self.acc,
            witness,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Holds,
    Fails,
    NoCounterexampleFound,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Holds => "holds",
            Status::Fails => "fails",
            Status::NoCounterexampleFound => "no counterexample found",
        }
    }
}

#[derive(Clone, Debug)]
pub struct LawReport {
    pub law: String,
    pub status: Status,
    /// Overall degree, when computed exactly.
    pub degree: Option<Elem>,
    /// Named component degrees, e.g. the three sides of the Galois law.
    pub components: Vec<(String, Elem)>,
    pub witness: Option<Witness>,
    pub cases: usize,
    pub seed: Option<u64>,
    pub elapsed: Duration,
}

impl LawReport {
    pub fn new(law: impl Into<String>) -> Self {
        LawReport {
            law: law.into(),
            status: Status::Holds,
            degree: None,
            components: Vec::new(),
            witness: None,
            cases: 0,
            seed: None,
            elapsed: Duration::ZERO,
        }
    }

    /// A report whose verdict is "degree is top".
    pub fn from_degree(law: impl Into<String>, h: &HeytingAlgebra, graded: Graded) -> Self {
        let mut r = LawReport::new(law);
        r.status = if graded.degree == h.top() {
            Status::Holds
        } else {
            Status::Fails
        };
        r.degree = Some(graded.degree);
        r.witness = graded.witness;
        r.cases = 1;
        r
    }

    pub fn holds(&self) -> bool {
        self.status != Status::Fails
    }

    /// Deterministic text; elapsed time is deliberately left out.
    pub fn render(&self, space: &Space) -> String {
        let mut out = String::new();
        let _ = write!(out, "law {}: {}", self.law, self.status.label());
        if let Some(d) = self.degree {
            let _ = write!(out, " (degree {})", space.name(d));
        }
        if self.cases > 1 {
            let _ = write!(out, " over {} cases", self.cases);
        }
        if let Some(seed) = self.seed {
            let _ = write!(out, ", seed {seed}");
        }
        out.push('\n');
        for (name, d) in &self.components {
            let _ = writeln!(out, "  {name} = {}", space.name(*d));
        }
        if let Some(w) = &self.witness {
            let _ = writeln!(out, "  witness: {}", w.render(space));
        }
        out
    }
}
