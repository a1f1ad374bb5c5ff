//! Replayable examples and counterexamples. Each entry builds its scenario
//! and a list of checks, each with the degree it is expected to produce.

use std::fmt::Write as _;
use std::sync::Arc;

use crate::btop::{five_node_diagram, BasicTopology};
use crate::error::{Error, Result};
use crate::galois::{aa, from_family_red, from_family_sat, jj, op_eq_degree, Reduction, Saturation};
use crate::heyting::{Elem, HeytingAlgebra};
use crate::hset::{HSubset, Space};
use crate::optable::{
    compat_degree, greatest_right_compatible, incl_degree, pointwise_meet, splits_degree, weak_compat_degree,
    Operator,
};
use crate::report::{Graded, Witness};

type CheckFn = dyn Fn() -> Result<Graded> + Send + Sync;

#[derive(Clone)]
pub struct Check {
    pub label: String,
    /// Name of the expected algebra element.
    pub expected: String,
    run: Arc<CheckFn>,
}

#[derive(Clone, Debug)]
pub struct CheckResult {
    pub label: String,
    pub expected: String,
    pub degree: Elem,
    pub witness: Option<Witness>,
    pub passed: bool,
}

#[derive(Clone)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub summary: &'static str,
    pub space: Arc<Space>,
    pub operators: Vec<Operator>,
    pub checks: Vec<Check>,
}

pub const NAMES: [&str; 8] = [
    "nonidempotent-meet",
    "weak-vs-strong-compat",
    "rr-converse-fails",
    "ap-jp-incompatible",
    "id-bot-topology",
    "sat-not-reduced",
    "red-not-saturated",
    "finite-line-meet-law",
];

pub fn load(name: &str) -> Result<CatalogEntry> {
    match name {
        "nonidempotent-meet" => nonidempotent_meet(),
        "weak-vs-strong-compat" => weak_vs_strong_compat(),
        "rr-converse-fails" => rr_converse_fails(),
        "ap-jp-incompatible" => ap_jp_incompatible(),
        "id-bot-topology" => id_bot_topology(),
        "sat-not-reduced" => sat_not_reduced(),
        "red-not-saturated" => red_not_saturated(),
        "finite-line-meet-law" => finite_line_meet_law(),
        _ => Err(Error::UnknownEntry(name.to_string())),
    }
}

impl CatalogEntry {
    fn new(name: &'static str, summary: &'static str, space: &Arc<Space>) -> Self {
        CatalogEntry {
            name,
            summary,
            space: space.clone(),
            operators: Vec::new(),
            checks: Vec::new(),
        }
    }

    fn check<F>(&mut self, label: impl Into<String>, expected: &str, run: F)
    where
        F: Fn() -> Result<Graded> + Send + Sync + 'static,
    {
        self.checks.push(Check {
            label: label.into(),
            expected: expected.to_string(),
            run: Arc::new(run),
        });
    }

    fn check_bool<F>(&mut self, label: impl Into<String>, expected: bool, run: F)
    where
        F: Fn() -> Result<bool> + Send + Sync + 'static,
    {
        let h = self.space.algebra().clone();
        let expected = if expected { h.name(h.top()) } else { h.name(h.bot()) }.to_string();
        self.checks.push(Check {
            label: label.into(),
            expected,
            run: Arc::new(move || {
                let b = run()?;
                Ok(Graded {
                    degree: if b { h.top() } else { h.bot() },
                    witness: None,
                })
            }),
        });
    }

    pub fn replay(&self) -> Result<Vec<CheckResult>> {
        self.checks
            .iter()
            .map(|c| {
                let g = (c.run)()?;
                Ok(CheckResult {
                    label: c.label.clone(),
                    expected: c.expected.clone(),
                    passed: self.space.name(g.degree) == c.expected,
                    degree: g.degree,
                    witness: g.witness,
                })
            })
            .collect()
    }

    pub fn render(&self, results: &[CheckResult]) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "entry {}: {}", self.name, self.summary);
        let h = self.space.algebra();
        let _ = writeln!(
            out,
            "  algebra {{{}}}, carrier {{{}}}",
            h.names().join(", "),
            self.space.carrier().points().join(", ")
        );
        for o in &self.operators {
            let _ = writeln!(out, "  operator {}", o.label());
        }
        for r in results {
            let _ = write!(
                out,
                "  {} {}: degree {} (expected {})",
                if r.passed { "PASS" } else { "FAIL" },
                r.label,
                self.space.name(r.degree),
                r.expected
            );
            if let Some(w) = &r.witness {
                let _ = write!(out, ", witness {}", w.render(&self.space));
            }
            out.push('\n');
        }
        out
    }
}

fn crisp(space: &Space, pts: &[&str]) -> HSubset {
    space.crisp(pts).expect("catalog points exist")
}

fn same(space: &Space, u: HSubset, v: HSubset) -> Graded {
    let d = space.eq_degree(&u, &v);
    let witness = (d != space.algebra().top()).then(|| Witness::subsets(vec![u, v]));
    Graded { degree: d, witness }
}

fn nonidempotent_meet() -> Result<CatalogEntry> {
    let s = Space::over(HeytingAlgebra::boolean2(), &["0", "1"])?;
    let opens = [s.empty(), crisp(&s, &["1"]), s.full()];
    let int = from_family_red(&s, &opens)?.named("int");
    let c0 = Operator::constant(&s, crisp(&s, &["0"]))?;
    let o = pointwise_meet(&s, &[int.op().clone(), c0])?.named("int meet const{0}");
    let mut e = CatalogEntry::new(
        "nonidempotent-meet",
        "Sierpinski interior met with a constant is not idempotent",
        &s,
    );
    e.operators = vec![int.op().clone(), o.clone()];
    let (o1, s1) = (o.clone(), s.clone());
    e.check("O(S) = {0}", "1", move || Ok(same(&s1, o1.eval(&s1.full()), crisp(&s1, &["0"]))));
    let (o1, s1) = (o.clone(), s.clone());
    e.check("O(O(S)) = {}", "1", move || {
        Ok(same(&s1, o1.eval(&o1.eval(&s1.full())), s1.empty()))
    });
    e.check("O.O = O", "0", move || op_eq_degree(&o.compose(&o)?, &o));
    Ok(e)
}

fn weak_vs_strong_compat() -> Result<CatalogEntry> {
    let s = Space::over(HeytingAlgebra::chain(3)?, &["*"])?;
    let dneg = Operator::double_negation(&s);
    let top = Operator::top(&s);
    let mut e = CatalogEntry::new(
        "weak-vs-strong-compat",
        "double negation is weakly but not strongly compatible with top",
        &s,
    );
    e.operators = vec![dneg.clone(), top.clone()];
    let (d1, t1) = (dneg.clone(), top.clone());
    e.check("weak compat(--, top)", "1", move || weak_compat_degree(&d1, &t1));
    e.check("compat(--, top)", "u", move || compat_degree(&dneg, &top));
    Ok(e)
}

fn rr_converse_fails() -> Result<CatalogEntry> {
    let s = Space::over(HeytingAlgebra::boolean2(), &["a", "b"])?;
    let o = Operator::inhabited(&s);
    let cb = Operator::constant(&s, crisp(&s, &["b"]))?;
    let mut e = CatalogEntry::new(
        "rr-converse-fails",
        "a constant below RR(O) need not be compatible with O",
        &s,
    );
    e.operators = vec![o.clone(), cb.clone()];
    let (o1, c1) = (o.clone(), cb.clone());
    e.check("const{b} <= RR(O)", "1", move || incl_degree(&c1, &greatest_right_compatible(&o1)?));
    let (o1, s1) = (o.clone(), s.clone());
    e.check("{b} splits O", "0", move || splits_degree(&crisp(&s1, &["b"]), &o1));
    e.check("compat(O, const{b})", "0", move || compat_degree(&o, &cb));
    Ok(e)
}

fn ap_jp_incompatible() -> Result<CatalogEntry> {
    let s = Space::over(HeytingAlgebra::boolean2(), &["a", "b"])?;
    let w = crisp(&s, &["a"]);
    let ap = from_family_sat(&s, std::slice::from_ref(&w))?.named("A_P");
    let jp = from_family_red(&s, std::slice::from_ref(&w))?.named("J_P");
    let mut e = CatalogEntry::new(
        "ap-jp-incompatible",
        "the saturation and reduction of the family {W}, W = {a}, are not compatible",
        &s,
    );
    e.operators = vec![ap.op().clone(), jp.op().clone()];
    let (a1, s1, w1) = (ap.clone(), s.clone(), w.clone());
    e.check("A_P({}) = W", "1", move || Ok(same(&s1, a1.op().eval(&s1.empty()), w1.clone())));
    let (j1, s1) = (jp.clone(), s.clone());
    e.check("J_P(S) = W", "1", move || Ok(same(&s1, j1.op().eval(&s1.full()), w.clone())));
    e.check("compat(A_P, J_P)", "0", move || compat_degree(ap.op(), jp.op()));
    Ok(e)
}

fn id_bot_topology() -> Result<CatalogEntry> {
    let s = Space::over(HeytingAlgebra::boolean2(), &["a", "b"])?;
    let t = BasicTopology::make(Saturation::id(&s), Reduction::bot(&s))?.named("id-bot");
    let mut e = CatalogEntry::new(
        "id-bot-topology",
        "[id, bot] is neither reduced nor saturated",
        &s,
    );
    e.operators = vec![t.sat().op().clone(), t.red().op().clone()];
    let t1 = t.clone();
    e.check_bool("[id,bot] reduced", false, move || Ok(t1.is_reduced()?.holds));
    let t1 = t.clone();
    e.check_bool("[id,bot] saturated", false, move || Ok(t1.is_saturated()?.holds));
    let (t1, s1) = (t.clone(), s.clone());
    e.check_bool("T^R = [top,bot]", true, move || t1.reduce()?.equals(&BasicTopology::trivial(&s1)));
    let (t1, s1) = (t.clone(), s.clone());
    e.check_bool("T^S = [id,id]", true, move || {
        t1.saturate()?
            .equals(&BasicTopology::make(Saturation::id(&s1), Reduction::id(&s1))?)
    });
    let t1 = t.clone();
    e.check_bool("diagram has 3 nodes", true, move || Ok(five_node_diagram(&t1)?.nodes.len() == 3));
    e.check("compat(AA(bot), JJ(id))", "0", move || {
        compat_degree(aa(t.red())?.op(), jj(t.sat())?.op())
    });
    Ok(e)
}

/// `A_p(U) = U ∪ {x | p}` on one point, with `p = u` in the 3-chain.
pub fn a_p(space: &Arc<Space>, p: Elem) -> Result<Saturation> {
    let op = Operator::from_fn(space, "A_p", move |s, u| s.union(u, &s.constant(p)));
    Saturation::new(op)
}

/// `J_p(U)(x) = U(x) ∧ (¬U(b) ⇒ p)`.
pub fn j_p(space: &Arc<Space>, p: Elem, b: usize) -> Result<Reduction> {
    space.carrier().name(b);
    let op = Operator::from_fn(space, "J_p", move |s, u| {
        let h = s.algebra();
        let b = u.at(b);
        let guard = h.imp(h.neg(b), p);
        HSubset::from_degrees(u.degrees().iter().map(|&d| h.meet(d, guard)).collect())
    });
    Reduction::new(op)
}

fn middle(space: &Space) -> Elem {
    space.algebra().element("u").expect("3-chain has u")
}

fn sat_not_reduced() -> Result<CatalogEntry> {
    let s = Space::over(HeytingAlgebra::chain(3)?, &["*"])?;
    let p = middle(&s);
    let ap = a_p(&s, p)?;
    let mut e = CatalogEntry::new(
        "sat-not-reduced",
        "A_p(U) = U with p added, p = u: AA(JJ(A_p)) = A_p only to degree u",
        &s,
    );
    e.operators = vec![ap.op().clone()];
    let (a1, s1) = (ap.clone(), s.clone());
    e.check("JJ(A_p) = bot", "1", move || op_eq_degree(jj(&a1)?.op(), &Operator::bot(&s1)));
    let (a1, s1) = (ap.clone(), s.clone());
    e.check("AA(JJ(A_p)) = top", "1", move || op_eq_degree(aa(&jj(&a1)?)?.op(), &Operator::top(&s1)));
    let a1 = ap.clone();
    e.check("AA(JJ(A_p)) <= A_p", "u", move || incl_degree(aa(&jj(&a1)?)?.op(), a1.op()));
    let s1 = s.clone();
    e.check("(-p -> p) -> p", "u", move || {
        let h = s1.algebra();
        Ok(Graded {
            degree: h.imp(h.imp(h.neg(p), p), p),
            witness: None,
        })
    });
    Ok(e)
}

fn red_not_saturated() -> Result<CatalogEntry> {
    let s = Space::over(HeytingAlgebra::chain(3)?, &["a", "b"])?;
    let p = middle(&s);
    let jp = j_p(&s, p, 1)?;
    let mut e = CatalogEntry::new(
        "red-not-saturated",
        "J_p(U)(x) = U(x) and (not U(b) -> p), p = u: JJ(AA(J_p)) = J_p only to degree u",
        &s,
    );
    e.operators = vec![jp.op().clone()];
    let (j1, s1) = (jp.clone(), s.clone());
    e.check("{a} = J_p{a}", "u", move || {
        let a = crisp(&s1, &["a"]);
        Ok(same(&s1, a.clone(), j1.op().eval(&a)))
    });
    let (j1, s1) = (jp.clone(), s.clone());
    e.check("{a} splits AA(J_p)", "1", move || splits_degree(&crisp(&s1, &["a"]), aa(&j1)?.op()));
    e.check("JJ(AA(J_p)) = J_p", "u", move || op_eq_degree(jj(&aa(&jp)?)?.op(), jp.op()));
    Ok(e)
}

fn finite_line_meet_law() -> Result<CatalogEntry> {
    let s = Space::over(HeytingAlgebra::boolean2(), &["-1", "0", "1", "2"])?;
    let opens: Vec<HSubset> = [
        &[][..],
        &["-1"],
        &["1"],
        &["-1", "1"],
        &["-1", "0", "1"],
        &["1", "2"],
        &["-1", "1", "2"],
        &["-1", "0", "1", "2"],
    ]
    .iter()
    .map(|pts| crisp(&s, pts))
    .collect();
    let closed: Vec<HSubset> = opens.iter().map(|u| s.pseudo_complement(u)).collect();
    let int = from_family_red(&s, &opens)?;
    let cl = from_family_sat(&s, &closed)?;
    let o = int.op().compose(cl.op())?.named("int.cl");
    let z1 = Operator::constant(&s, crisp(&s, &["-1", "0"]))?;
    let z2 = Operator::constant(&s, crisp(&s, &["0", "1", "2"]))?;
    let mut e = CatalogEntry::new(
        "finite-line-meet-law",
        "int.cl on a four-point line is compatible with two constants but not with their meet",
        &s,
    );
    e.operators = vec![o.clone(), z1.clone(), z2.clone()];
    let (o1, c1) = (o.clone(), z1.clone());
    e.check("compat(int.cl, const{-1,0})", "1", move || compat_degree(&o1, &c1));
    let (o1, c2) = (o.clone(), z2.clone());
    e.check("compat(int.cl, const{0,1,2})", "1", move || compat_degree(&o1, &c2));
    let s1 = s.clone();
    e.check("compat(int.cl, const{-1,0} meet const{0,1,2})", "0", move || {
        compat_degree(&o, &pointwise_meet(&s1, &[z1.clone(), z2.clone()])?)
    });
    Ok(e)
}
