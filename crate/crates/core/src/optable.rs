//! Operators on subsets, their pointwise lattice, compatibility, splitting
//! subsets and the greatest left/right compatible operators.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use crate::error::{Error, Result};
use crate::heyting::Elem;
use crate::hset::{HSubset, Space};
use crate::report::{Graded, Infimum, Witness};

pub type RuleFn = dyn Fn(&Space, &HSubset) -> HSubset + Send + Sync;

#[derive(Clone)]
pub enum Rule {
    Id,
    Bot,
    Top,
    Const(HSubset),
    PseudoComplement,
    DoubleNegation,
    /// `Compose([O1, O2, …])` maps `U` to `O1(O2(…U))`.
    Compose(Vec<Operator>),
    Meet(Vec<Operator>),
    Join(Vec<Operator>),
    /// One output per subset, in enumeration order.
    Table(Arc<[HSubset]>),
    Custom(Arc<RuleFn>),
}

impl fmt::Debug for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rule::Id => write!(f, "Id"),
            Rule::Bot => write!(f, "Bot"),
            Rule::Top => write!(f, "Top"),
            Rule::Const(u) => write!(f, "Const({:?})", u.degrees()),
            Rule::PseudoComplement => write!(f, "PseudoComplement"),
            Rule::DoubleNegation => write!(f, "DoubleNegation"),
            Rule::Compose(ops) => f.debug_tuple("Compose").field(ops).finish(),
            Rule::Meet(ops) => f.debug_tuple("Meet").field(ops).finish(),
            Rule::Join(ops) => f.debug_tuple("Join").field(ops).finish(),
            Rule::Table(t) => write!(f, "Table({} rows)", t.len()),
            Rule::Custom(_) => write!(f, "Custom"),
        }
    }
}

#[derive(Default)]
struct Cache {
    table: OnceLock<Arc<[HSubset]>>,
    memo: RwLock<HashMap<HSubset, HSubset>>,
}

/// A total map on the subsets of a space.
///
/// Within the space's subset cap the operator is tabulated on first use;
/// above it, results are memoized per input. Clones share the cache.
#[derive(Clone)]
pub struct Operator {
    space: Arc<Space>,
    label: String,
    rule: Rule,
    cache: Arc<Cache>,
}

impl fmt::Debug for Operator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Operator({})", self.label)
    }
}

impl Operator {
    pub fn new(space: &Arc<Space>, label: impl Into<String>, rule: Rule) -> Self {
        Operator {
            space: space.clone(),
            label: label.into(),
            rule,
            cache: Arc::default(),
        }
    }

    pub fn id(space: &Arc<Space>) -> Self {
        Self::new(space, "id", Rule::Id)
    }

    pub fn bot(space: &Arc<Space>) -> Self {
        Self::new(space, "bot", Rule::Bot)
    }

    pub fn top(space: &Arc<Space>) -> Self {
        Self::new(space, "top", Rule::Top)
    }

    pub fn constant(space: &Arc<Space>, value: HSubset) -> Result<Self> {
        space.check(&value)?;
        let label = format!("const {}", space.format_subset(&value));
        Ok(Self::new(space, label, Rule::Const(value)))
    }

    pub fn pseudo_complement(space: &Arc<Space>) -> Self {
        Self::new(space, "neg", Rule::PseudoComplement)
    }

    pub fn double_negation(space: &Arc<Space>) -> Self {
        Self::new(space, "dneg", Rule::DoubleNegation)
    }

    /// `O(U) = {a ∈ S | U inhabited}`: constant at the degree of `U ≬ S`.
    pub fn inhabited(space: &Arc<Space>) -> Self {
        Self::from_fn(space, "inhabited", |s, u| s.constant(s.overlap(u, &s.full())))
    }

    /// An explicit table, one output per subset in enumeration order.
    pub fn table(space: &Arc<Space>, label: impl Into<String>, rows: Vec<HSubset>) -> Result<Self> {
        let n = space.ensure_enumerable()?;
        if rows.len() != n {
            return Err(Error::Mismatch(format!(
                "operator table has {} rows, the space has {n} subsets",
                rows.len()
            )));
        }
        for r in &rows {
            space.check(r)?;
        }
        Ok(Self::new(space, label, Rule::Table(rows.into())))
    }

    pub fn from_fn<F>(space: &Arc<Space>, label: impl Into<String>, f: F) -> Self
    where
        F: Fn(&Space, &HSubset) -> HSubset + Send + Sync + 'static,
    {
        Self::new(space, label, Rule::Custom(Arc::new(f)))
    }

    /// Same map under another label; the cache is shared.
    pub fn named(&self, label: impl Into<String>) -> Self {
        Operator {
            label: label.into(),
            ..self.clone()
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn rule(&self) -> &Rule {
        &self.rule
    }

    pub fn space(&self) -> &Arc<Space> {
        &self.space
    }

    pub fn same_space(&self, other: &Operator) -> Result<()> {
        if self.space.same_context(&other.space) {
            Ok(())
        } else {
            Err(Error::Mismatch(format!(
                "`{}` and `{}` live on different spaces",
                self.label, other.label
            )))
        }
    }

    pub fn apply(&self, u: &HSubset) -> Result<HSubset> {
        self.space.check(u)?;
        Ok(self.eval(u))
    }

    /// Evaluates on a subset already known to live on this operator's space.
    pub fn eval(&self, u: &HSubset) -> HSubset {
        if self.space.within_cap() {
            let table = self.tabulated();
            return table[self.space.index_of(u)].clone();
        }
        if let Some(v) = self.cache.memo.read().expect("memo lock").get(u) {
            return v.clone();
        }
        let v = self.eval_rule(u);
        self.cache
            .memo
            .write()
            .expect("memo lock")
            .insert(u.clone(), v.clone());
        v
    }

    fn tabulated(&self) -> &Arc<[HSubset]> {
        self.cache.table.get_or_init(|| {
            if let Rule::Table(t) = &self.rule {
                return t.clone();
            }
            let universe = self.space.universe().expect("within cap");
            universe.iter().map(|u| self.eval_rule(u)).collect()
        })
    }

    /// The full table in enumeration order.
    pub fn table_rows(&self) -> Result<&[HSubset]> {
        self.space.ensure_enumerable()?;
        Ok(self.tabulated())
    }

    fn eval_rule(&self, u: &HSubset) -> HSubset {
        let s = &*self.space;
        match &self.rule {
            Rule::Id => u.clone(),
            Rule::Bot => s.empty(),
            Rule::Top => s.full(),
            Rule::Const(v) => v.clone(),
            Rule::PseudoComplement => s.pseudo_complement(u),
            Rule::DoubleNegation => s.pseudo_complement(&s.pseudo_complement(u)),
            Rule::Compose(ops) => ops.iter().rev().fold(u.clone(), |acc, o| o.eval(&acc)),
            Rule::Meet(ops) => ops
                .iter()
                .fold(s.full(), |acc, o| s.intersection(&acc, &o.eval(u))),
            Rule::Join(ops) => ops.iter().fold(s.empty(), |acc, o| s.union(&acc, &o.eval(u))),
            Rule::Table(t) => t[s.index_of(u)].clone(),
            Rule::Custom(f) => f(s, u),
        }
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &Operator) -> Result<Operator> {
        self.same_space(inner)?;
        let label = format!("{}.{}", self.label, inner.label);
        Ok(Operator::new(
            &self.space,
            label,
            Rule::Compose(vec![self.clone(), inner.clone()]),
        ))
    }

    /// Fixed points in enumeration order.
    pub fn fixed_points(&self) -> Result<Vec<HSubset>> {
        Ok(self
            .space
            .universe()?
            .iter()
            .filter(|u| &self.eval(u) == *u)
            .cloned()
            .collect())
    }
}

fn check_all(space: &Arc<Space>, ops: &[Operator]) -> Result<()> {
    for o in ops {
        if !o.space.same_context(space) {
            return Err(Error::Mismatch(format!(
                "`{}` does not live on the requested space",
                o.label
            )));
        }
    }
    Ok(())
}

fn list_label(kind: &str, ops: &[Operator]) -> String {
    let names: Vec<&str> = ops.iter().map(|o| o.label.as_str()).collect();
    format!("{kind}({})", names.join(", "))
}

/// Pointwise union; the empty join is `bot`.
pub fn pointwise_join(space: &Arc<Space>, ops: &[Operator]) -> Result<Operator> {
    check_all(space, ops)?;
    Ok(Operator::new(space, list_label("join", ops), Rule::Join(ops.to_vec())))
}

/// Pointwise intersection; the empty meet is `top`.
pub fn pointwise_meet(space: &Arc<Space>, ops: &[Operator]) -> Result<Operator> {
    check_all(space, ops)?;
    Ok(Operator::new(space, list_label("meet", ops), Rule::Meet(ops.to_vec())))
}

/// `O1 ∘ O2 ∘ …`, rightmost applied first.
pub fn compose_all(space: &Arc<Space>, ops: &[Operator]) -> Result<Operator> {
    check_all(space, ops)?;
    let names: Vec<&str> = ops.iter().map(|o| o.label.as_str()).collect();
    Ok(Operator::new(space, names.join("."), Rule::Compose(ops.to_vec())))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Flag {
    Holds,
    Refuted(Witness),
}

impl Flag {
    pub fn holds(&self) -> bool {
        matches!(self, Flag::Holds)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorProfile {
    pub monotone: Flag,
    pub idempotent: Flag,
    pub expansive: Flag,
    pub contractive: Flag,
}

impl OperatorProfile {
    pub fn is_saturation(&self) -> bool {
        self.monotone.holds() && self.idempotent.holds() && self.expansive.holds()
    }

    pub fn is_reduction(&self) -> bool {
        self.monotone.holds() && self.idempotent.holds() && self.contractive.holds()
    }

    pub fn flags(&self) -> [(&'static str, &Flag); 4] {
        [
            ("monotone", &self.monotone),
            ("idempotent", &self.idempotent),
            ("expansive", &self.expansive),
            ("contractive", &self.contractive),
        ]
    }
}

/// Checks the four classification flags exhaustively. Monotonicity is the
/// graded one: `U ⊆ V` must entail `OU ⊆ OV` at every degree.
pub fn classify(o: &Operator) -> Result<OperatorProfile> {
    let s = &*o.space;
    let h = s.algebra();
    let all = s.universe()?;
    let img = o.table_rows()?;

    let mut monotone = Flag::Holds;
    'outer: for (i, u) in all.iter().enumerate() {
        for (j, v) in all.iter().enumerate() {
            if h.imp(s.incl(u, v), s.incl(&img[i], &img[j])) != h.top() {
                monotone = Flag::Refuted(Witness::subsets(vec![u.clone(), v.clone()]));
                break 'outer;
            }
        }
    }
    let first = |bad: &dyn Fn(usize, &HSubset) -> bool| {
        all.iter()
            .enumerate()
            .find(|(i, u)| bad(*i, u))
            .map_or(Flag::Holds, |(_, u)| Flag::Refuted(Witness::subsets(vec![u.clone()])))
    };
    let idempotent = first(&|i, _| o.eval(&img[i]) != img[i]);
    let expansive = first(&|i, u| s.incl(u, &img[i]) != h.top());
    let contractive = first(&|i, u| s.incl(&img[i], u) != h.top());
    Ok(OperatorProfile {
        monotone,
        idempotent,
        expansive,
        contractive,
    })
}

/// Degree of `O ⋉ O'`: `OU ≬ O'V ⇒ U ≬ O'V` for all `U, V`.
pub fn compat_degree(o: &Operator, o2: &Operator) -> Result<Graded> {
    o.same_space(o2)?;
    let s = &*o.space;
    let h = s.algebra();
    let all = s.universe()?;
    let left = o.table_rows()?;
    let right = o2.table_rows()?;
    let mut inf = Infimum::new(h);
    'outer: for (i, u) in all.iter().enumerate() {
        for (j, v) in all.iter().enumerate() {
            let d = h.imp(s.overlap(&left[i], &right[j]), s.overlap(u, &right[j]));
            inf.push(d, || Witness::subsets(vec![u.clone(), v.clone()]));
            if inf.is_bottom() {
                break 'outer;
            }
        }
    }
    Ok(inf.finish())
}

/// Degree of `U ∩ O'V = ∅ ⇒ OU ∩ O'V = ∅` for all `U, V`.
pub fn weak_compat_degree(o: &Operator, o2: &Operator) -> Result<Graded> {
    o.same_space(o2)?;
    let s = &*o.space;
    let h = s.algebra();
    let all = s.universe()?;
    let left = o.table_rows()?;
    let right = o2.table_rows()?;
    let mut inf = Infimum::new(h);
    for (i, u) in all.iter().enumerate() {
        for (j, v) in all.iter().enumerate() {
            let d = h.imp(
                h.neg(s.overlap(u, &right[j])),
                h.neg(s.overlap(&left[i], &right[j])),
            );
            inf.push(d, || Witness::subsets(vec![u.clone(), v.clone()]));
        }
    }
    Ok(inf.finish())
}

/// Degree to which `Z` splits `O`: `OU ≬ Z ⇒ U ≬ Z` for all `U`.
pub fn splits_degree(z: &HSubset, o: &Operator) -> Result<Graded> {
    let s = &*o.space;
    s.check(z)?;
    let h = s.algebra();
    let all = s.universe()?;
    let img = o.table_rows()?;
    let mut inf = Infimum::new(h);
    for (i, u) in all.iter().enumerate() {
        let d = h.imp(s.overlap(&img[i], z), s.overlap(u, z));
        inf.push(d, || Witness::subsets(vec![u.clone()]));
    }
    Ok(inf.finish())
}

/// Splitting degree of every subset, in enumeration order.
pub(crate) fn splits_table(o: &Operator) -> Result<Vec<Elem>> {
    let s = &*o.space;
    let h = s.algebra();
    let all = s.universe()?;
    let img = o.table_rows()?;
    Ok(all
        .iter()
        .map(|z| {
            h.big_meet(
                all.iter()
                    .zip(img.iter())
                    .map(|(u, ou)| h.imp(s.overlap(ou, z), s.overlap(u, z))),
            )
        })
        .collect())
}

fn distinct_images(o: &Operator) -> Result<Vec<HSubset>> {
    let mut imgs: Vec<HSubset> = o.table_rows()?.to_vec();
    imgs.sort();
    imgs.dedup();
    Ok(imgs)
}

/// The greatest operator left-compatible with `O`:
/// `LL(O)(U)(a) = ⋀_V (a ∈ OV ⇒ U ≬ OV)`.
pub fn greatest_left_compatible(o: &Operator) -> Result<Operator> {
    let s = &*o.space;
    let h = s.algebra();
    let all = s.universe()?;
    let imgs = distinct_images(o)?;
    let rows: Vec<HSubset> = all
        .iter()
        .map(|u| {
            let overlaps: Vec<Elem> = imgs.iter().map(|ov| s.overlap(u, ov)).collect();
            let degrees = (0..s.points())
                .map(|a| {
                    h.big_meet(
                        imgs.iter()
                            .zip(overlaps.iter())
                            .map(|(ov, &d)| h.imp(ov.at(a), d)),
                    )
                })
                .collect();
            HSubset::from_degrees(degrees)
        })
        .collect();
    Operator::table(&o.space, format!("LL({})", o.label), rows)
}

/// The largest subset splitting `O`: `Z*(a) = ⋁_Z (Z splits O) ∧ Z(a)`.
pub fn largest_splitting_subset(o: &Operator) -> Result<HSubset> {
    let s = &*o.space;
    let h = s.algebra();
    let all = s.universe()?;
    let splits = splits_table(o)?;
    let degrees = (0..s.points())
        .map(|a| h.big_join(all.iter().zip(&splits).map(|(z, &d)| h.meet(d, z.at(a)))))
        .collect();
    Ok(HSubset::from_degrees(degrees))
}

/// The greatest operator right-compatible with `O`: constant at the largest
/// splitting subset.
pub fn greatest_right_compatible(o: &Operator) -> Result<Operator> {
    let z = largest_splitting_subset(o)?;
    Ok(Operator::constant(&o.space, z)?.named(format!("RR({})", o.label)))
}

/// `O1 ⊆ O2` as a degree; the witness names the point and input.
pub fn incl_degree(o1: &Operator, o2: &Operator) -> Result<Graded> {
    o1.same_space(o2)?;
    let s = &*o1.space;
    let h = s.algebra();
    let all = s.universe()?;
    let (l, r) = (o1.table_rows()?, o2.table_rows()?);
    let mut inf = Infimum::new(h);
    for (i, u) in all.iter().enumerate() {
        for a in 0..s.points() {
            inf.push(h.imp(l[i].at(a), r[i].at(a)), || Witness::at(a, vec![u.clone()]));
        }
    }
    Ok(inf.finish())
}

/// First input where the two operators differ, if any.
pub fn first_difference(o1: &Operator, o2: &Operator) -> Result<Option<HSubset>> {
    o1.same_space(o2)?;
    let all = o1.space.universe()?;
    let (l, r) = (o1.table_rows()?, o2.table_rows()?);
    Ok(all
        .iter()
        .zip(l.iter().zip(r.iter()))
        .find(|(_, (x, y))| x != y)
        .map(|(u, _)| u.clone()))
}

pub fn operators_equal(o1: &Operator, o2: &Operator) -> Result<bool> {
    Ok(first_difference(o1, o2)?.is_none())
}

/// The classical law `O ⋉ − iff O ⊆ id`, only meaningful in Boolean spaces.
pub fn neg_compat_iff_below_id(o: &Operator) -> Result<bool> {
    if !o.space.is_boolean() {
        return Err(Error::Mismatch(
            "`O ⋉ − iff O ⊆ id` is only claimed for Boolean algebras".into(),
        ));
    }
    let top = o.space.algebra().top();
    let neg = Operator::pseudo_complement(&o.space);
    let id = Operator::id(&o.space);
    Ok((compat_degree(o, &neg)?.degree == top) == (incl_degree(o, &id)?.degree == top))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::heyting::HeytingAlgebra;

    fn bool_space(points: &[&str]) -> Arc<Space> {
        Space::over(HeytingAlgebra::boolean2(), points).unwrap()
    }

    fn chain_space(points: &[&str]) -> Arc<Space> {
        Space::over(HeytingAlgebra::chain(3).unwrap(), points).unwrap()
    }

    /// All 256 operators on the Boolean two-point carrier.
    fn all_boolean_ops(s: &Arc<Space>) -> Vec<Operator> {
        let all = s.universe().unwrap().to_vec();
        (0..256usize)
            .map(|code| {
                let rows = (0..4).map(|k| all[(code >> (2 * k)) & 3].clone()).collect();
                Operator::table(s, format!("op{code}"), rows).unwrap()
            })
            .collect()
    }

    #[test]
    fn apply_basics() {
        let s = chain_space(&["*"]);
        let u = s.parse_subset("{*:u}").unwrap();
        let w = s.parse_subset("{*}").unwrap();
        assert_eq!(Operator::id(&s).apply(&u).unwrap(), u);
        assert_eq!(Operator::constant(&s, w.clone()).unwrap().apply(&u).unwrap(), w);
        assert_eq!(Operator::double_negation(&s).apply(&u).unwrap(), s.full());
        let other = bool_space(&["a", "b"]);
        assert!(Operator::id(&s).apply(&other.empty()).is_err());
    }

    #[test]
    fn pointwise_lattice() {
        let s = bool_space(&["a", "b"]);
        let w = s.crisp(&["a"]).unwrap();
        let join = pointwise_join(&s, &[]).unwrap();
        assert!(operators_equal(&join, &Operator::bot(&s)).unwrap());
        let meet = pointwise_meet(&s, &[Operator::id(&s), Operator::constant(&s, w.clone()).unwrap()])
            .unwrap();
        assert_eq!(meet.eval(&s.full()), w);
    }

    #[test]
    fn meet_with_constant_is_not_idempotent_on_sierpinski_space() {
        // opens ∅, {1}, S
        let s = bool_space(&["0", "1"]);
        let int = Operator::from_fn(&s, "int", |s, u| {
            let one = s.crisp(&["1"]).unwrap();
            if u == &s.full() {
                u.clone()
            } else if s.pointwise_leq(&one, u) {
                one
            } else {
                s.empty()
            }
        });
        let zero = s.crisp(&["0"]).unwrap();
        let m = pointwise_meet(&s, &[int, Operator::constant(&s, zero.clone()).unwrap()]).unwrap();
        let once = m.eval(&s.full());
        assert_eq!(once, zero);
        assert_eq!(m.eval(&once), s.empty());
        let profile = classify(&m).unwrap();
        assert!(!profile.idempotent.holds());
    }

    #[test]
    fn classify_examples() {
        let s = bool_space(&["a", "b"]);
        let p = classify(&Operator::id(&s)).unwrap();
        assert!(p.flags().iter().all(|(_, f)| f.holds()));
        let p = classify(&Operator::double_negation(&s)).unwrap();
        assert!(p.flags().iter().all(|(_, f)| f.holds()));

        let c = chain_space(&["*"]);
        let p = classify(&Operator::double_negation(&c)).unwrap();
        assert!(p.expansive.holds() && p.monotone.holds() && p.idempotent.holds());
        let Flag::Refuted(w) = p.contractive else {
            panic!("double negation is not contractive in the 3-chain")
        };
        assert_eq!(w.subsets, vec![c.parse_subset("{*:u}").unwrap()]);
        assert!(!classify(&Operator::pseudo_complement(&s)).unwrap().monotone.holds());
    }

    #[test]
    fn compatibility_examples() {
        let s = bool_space(&["a", "b"]);
        let top = s.algebra().top();
        let ops = all_boolean_ops(&s);
        let id = Operator::id(&s);
        let t = Operator::top(&s);
        let bot = Operator::bot(&s);
        for o in &ops {
            assert_eq!(compat_degree(&id, o).unwrap().degree, top);
            assert_eq!(
                compat_degree(&t, o).unwrap().degree == top,
                operators_equal(o, &bot).unwrap()
            );
            assert_eq!(weak_compat_degree(o, &bot).unwrap().degree, top);
        }
    }

    #[test]
    fn weak_and_strong_compatibility_separate_in_the_three_chain() {
        let s = chain_space(&["*"]);
        let dn = Operator::double_negation(&s);
        let t = Operator::top(&s);
        assert_eq!(s.name(compat_degree(&dn, &t).unwrap().degree), "u");
        assert_eq!(s.name(weak_compat_degree(&dn, &t).unwrap().degree), "1");
    }

    #[test]
    fn inhabitedness_operator_splitting() {
        let s = bool_space(&["a", "b"]);
        let o = Operator::inhabited(&s);
        assert_eq!(splits_degree(&s.full(), &o).unwrap().degree, s.algebra().top());
        let g = splits_degree(&s.crisp(&["b"]).unwrap(), &o).unwrap();
        assert_eq!(g.degree, s.algebra().bot());
        assert_eq!(g.witness.unwrap().subsets, vec![s.crisp(&["a"]).unwrap()]);
        assert_eq!(splits_degree(&s.empty(), &o).unwrap().degree, s.algebra().top());

        // RR(O) = top, const {b} ⊆ RR(O), yet O is not compatible with const {b}
        let rr = greatest_right_compatible(&o).unwrap();
        assert!(operators_equal(&rr, &Operator::top(&s)).unwrap());
        let cb = Operator::constant(&s, s.crisp(&["b"]).unwrap()).unwrap();
        assert_eq!(incl_degree(&cb, &rr).unwrap().degree, s.algebra().top());
        assert_eq!(compat_degree(&o, &cb).unwrap().degree, s.algebra().bot());
    }

    #[test]
    fn ll_rr_trivial_cases() {
        for s in [bool_space(&["a", "b"]), chain_space(&["a", "b"])] {
            let id = Operator::id(&s);
            let bot = Operator::bot(&s);
            let top = Operator::top(&s);
            assert!(operators_equal(&greatest_left_compatible(&id).unwrap(), &id).unwrap());
            assert!(operators_equal(&greatest_left_compatible(&bot).unwrap(), &top).unwrap());
            assert!(operators_equal(&greatest_right_compatible(&id).unwrap(), &top).unwrap());
            let neg = Operator::pseudo_complement(&s);
            assert!(operators_equal(&greatest_right_compatible(&neg).unwrap(), &bot).unwrap());
            for u in s.universe().unwrap() {
                let cu = Operator::constant(&s, u.clone()).unwrap();
                let want = Operator::constant(&s, s.pseudo_complement(u)).unwrap();
                assert!(operators_equal(&greatest_right_compatible(&cu).unwrap(), &want).unwrap());
            }
        }
    }

    #[test]
    fn semi_galois_for_all_boolean_operators() {
        let s = bool_space(&["a", "b"]);
        let ops = all_boolean_ops(&s);
        let lls: Vec<Operator> = ops.iter().map(|o| greatest_left_compatible(o).unwrap()).collect();
        for (o, ll) in ops.iter().zip(&lls) {
            for o2 in ops.iter().step_by(3) {
                assert_eq!(
                    compat_degree(o2, o).unwrap().degree,
                    incl_degree(o2, ll).unwrap().degree
                );
            }
        }
    }

    #[test]
    fn classical_negation_law() {
        let s = bool_space(&["a", "b"]);
        for o in all_boolean_ops(&s) {
            assert!(neg_compat_iff_below_id(&o).unwrap());
        }
        assert!(neg_compat_iff_below_id(&Operator::id(&chain_space(&["*"]))).is_err());
    }

    #[test]
    fn lazy_evaluation_above_cap() {
        let s = Space::with_cap(
            HeytingAlgebra::boolean2(),
            crate::hset::Carrier::new(&["a", "b", "c"]).unwrap(),
            4,
        );
        let dn = Operator::double_negation(&s);
        let u = s.crisp(&["a", "c"]).unwrap();
        assert_eq!(dn.apply(&u).unwrap(), u);
        assert_eq!(dn.apply(&u).unwrap(), u);
        assert!(matches!(classify(&dn), Err(Error::CapExceeded { .. })));
    }
}
