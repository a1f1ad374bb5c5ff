//! Workspace documents.
//!
//! ```text
//! # comments run to the end of the line
//! [algebra]
//! chain 3                 # or: boolean | elements 0 a b 1 | downsets p q
//! order 0 < a < 1         # only after `elements` or `downsets`
//!
//! [carrier]
//! a b
//!
//! [axiom_sets]
//! c0 =
//!   a -> {b} {a, b:u}
//!
//! [relations]
//! r = domain x y
//!   x a
//!   y b u
//!
//! [operators]
//! j = jp u b
//! t = table
//!   {} -> {}
//!   {a} -> {a}
//!
//! [topologies]
//! tj = a j                # a saturation and a reduction
//! ```
//!
//! Objects are built in the order axiom sets, relations, operators,
//! topologies; an operator may only refer to operators defined above it.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::sync::Arc;

use crate::btop::BasicTopology;
use crate::catalog::{a_p, j_p};
use crate::error::{Error, Result};
use crate::galois::{aa, from_family_red, from_family_sat, jj, Reduction, Saturation};
use crate::gen::{generate_red, generate_sat, AxiomSet};
use crate::heyting::HeytingAlgebra;
use crate::hset::{Carrier, HSubset, Space};
use crate::optable::{
    compose_all, greatest_left_compatible, greatest_right_compatible, pointwise_join, pointwise_meet, Operator,
};
use crate::rep::{representable, HRelation};

pub const DEFAULT_SUBSET_CAP: usize = 4096;

/// Operator names that resolve without a definition.
pub const BUILTIN_OPERATORS: [&str; 6] = ["id", "bot", "top", "neg", "dneg", "inhabited"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraSpec {
    Boolean,
    Chain(usize),
    Elements { names: Vec<String>, order: Vec<(String, String)> },
    Downsets { points: Vec<String>, order: Vec<(String, String)> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorSource {
    pub name: String,
    pub words: Vec<String>,
    pub rows: Vec<(String, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomSource {
    pub name: String,
    pub covers: Vec<(String, Vec<String>)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationSource {
    pub name: String,
    pub domain: Vec<String>,
    pub entries: Vec<(String, String, Option<String>)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TopologySource {
    pub name: String,
    pub sat: String,
    pub red: String,
}

/// The syntax of a document, with subset literals and degrees in canonical
/// form once it has been built into a [`Workspace`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Source {
    pub algebra: Option<AlgebraSpec>,
    pub carrier: Vec<String>,
    pub axiom_sets: Vec<AxiomSource>,
    pub relations: Vec<RelationSource>,
    pub operators: Vec<OperatorSource>,
    pub topologies: Vec<TopologySource>,
}

#[derive(Clone, Debug)]
struct Token {
    text: String,
    column: usize,
}

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn tokenize(line: &str, lineno: usize) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let chars: Vec<(usize, char)> = line.char_indices().collect();
    let mut i = 0;
    while i < chars.len() {
        let (_, c) = chars[i];
        let column = i + 1;
        if c == '#' {
            break;
        }
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c == '{' {
            let start = i;
            while i < chars.len() && chars[i].1 != '}' {
                i += 1;
            }
            if i == chars.len() {
                return Err(parse_error(lineno, column, "unclosed `{`"));
            }
            i += 1;
            out.push(Token {
                text: chars[start..i].iter().map(|&(_, c)| c).collect(),
                column,
            });
            continue;
        }
        if c == '=' || c == '<' {
            out.push(Token {
                text: c.to_string(),
                column,
            });
            i += 1;
            continue;
        }
        let start = i;
        while i < chars.len() {
            let c = chars[i].1;
            if c.is_whitespace() || c == '{' || c == '#' || c == '=' || c == '<' {
                break;
            }
            i += 1;
        }
        out.push(Token {
            text: chars[start..i].iter().map(|&(_, c)| c).collect(),
            column,
        });
    }
    Ok(out)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Section {
    Algebra,
    Carrier,
    Operators,
    AxiomSets,
    Relations,
    Topologies,
}

fn words(tokens: &[Token]) -> Vec<String> {
    tokens.iter().map(|t| t.text.clone()).collect()
}

impl Source {
    pub fn parse(text: &str) -> Result<Source> {
        let mut src = Source::default();
        let mut section: Option<Section> = None;
        let mut pending_order: Vec<(String, String)> = Vec::new();
        let mut open_entry = false;
        for (idx, raw) in text.lines().enumerate() {
            let lineno = idx + 1;
            let tokens = tokenize(raw, lineno)?;
            if tokens.is_empty() {
                continue;
            }
            let indented = raw.starts_with(char::is_whitespace);
            let first = &tokens[0];
            if first.text.starts_with('[') {
                let name = first.text.trim_start_matches('[').trim_end_matches(']');
                if !first.text.ends_with(']') || tokens.len() > 1 {
                    return Err(parse_error(lineno, first.column, "malformed section header"));
                }
                section = Some(match name {
                    "algebra" => Section::Algebra,
                    "carrier" => Section::Carrier,
                    "operators" => Section::Operators,
                    "axiom_sets" => Section::AxiomSets,
                    "relations" => Section::Relations,
                    "topologies" => Section::Topologies,
                    other => return Err(parse_error(lineno, first.column, format!("unknown section `{other}`"))),
                });
                open_entry = false;
                continue;
            }
            let Some(sec) = section else {
                return Err(parse_error(lineno, first.column, "content before the first section"));
            };
            match sec {
                Section::Algebra => src.parse_algebra_line(&tokens, lineno, &mut pending_order)?,
                Section::Carrier => src.carrier.extend(words(&tokens)),
                _ if indented => {
                    if !open_entry {
                        return Err(parse_error(lineno, first.column, "indented line without an entry"));
                    }
                    src.parse_continuation(sec, &tokens, lineno)?;
                }
                _ => {
                    src.parse_header(sec, &tokens, lineno)?;
                    open_entry = true;
                }
            }
        }
        match &mut src.algebra {
            Some(AlgebraSpec::Elements { order, .. }) | Some(AlgebraSpec::Downsets { order, .. }) => {
                *order = pending_order;
            }
            _ if !pending_order.is_empty() => {
                return Err(parse_error(0, 0, "`order` needs `elements` or `downsets`"));
            }
            _ => {}
        }
        Ok(src)
    }

    fn parse_algebra_line(&mut self, tokens: &[Token], lineno: usize, order: &mut Vec<(String, String)>) -> Result<()> {
        let head = &tokens[0];
        let rest = words(&tokens[1..]);
        if head.text == "order" {
            let items: Vec<&str> = rest.iter().map(String::as_str).collect();
            if items.len() < 3 || items.len().is_multiple_of(2) || items.iter().skip(1).step_by(2).any(|&t| t != "<") {
                return Err(parse_error(lineno, head.column, "expected `order x < y [< z ...]`"));
            }
            let chain: Vec<&str> = items.iter().step_by(2).copied().collect();
            for w in chain.windows(2) {
                order.push((w[0].to_string(), w[1].to_string()));
            }
            return Ok(());
        }
        if self.algebra.is_some() {
            return Err(parse_error(lineno, head.column, "algebra already given"));
        }
        self.algebra = Some(match head.text.as_str() {
            "boolean" if rest.is_empty() => AlgebraSpec::Boolean,
            "chain" if rest.len() == 1 => AlgebraSpec::Chain(
                rest[0]
                    .parse()
                    .map_err(|_| parse_error(lineno, tokens[1].column, "chain length must be a number"))?,
            ),
            "elements" if !rest.is_empty() => AlgebraSpec::Elements {
                names: rest,
                order: Vec::new(),
            },
            "downsets" => AlgebraSpec::Downsets {
                points: rest,
                order: Vec::new(),
            },
            other => return Err(parse_error(lineno, head.column, format!("unknown algebra form `{other}`"))),
        });
        Ok(())
    }

    fn parse_header(&mut self, sec: Section, tokens: &[Token], lineno: usize) -> Result<()> {
        if tokens.len() < 2 || tokens[1].text != "=" {
            return Err(parse_error(lineno, tokens[0].column, "expected `name = ...`"));
        }
        let name = tokens[0].text.clone();
        let rest = words(&tokens[2..]);
        let col = tokens.get(2).map_or(tokens[1].column, |t| t.column);
        match sec {
            Section::Operators => {
                if rest.is_empty() {
                    return Err(parse_error(lineno, col, "missing operator expression"));
                }
                self.operators.push(OperatorSource {
                    name,
                    words: rest,
                    rows: Vec::new(),
                });
            }
            Section::AxiomSets => {
                if !rest.is_empty() {
                    return Err(parse_error(lineno, col, "covers go on indented lines"));
                }
                self.axiom_sets.push(AxiomSource {
                    name,
                    covers: Vec::new(),
                });
            }
            Section::Relations => {
                if rest.first().map(String::as_str) != Some("domain") {
                    return Err(parse_error(lineno, col, "expected `name = domain x y ...`"));
                }
                self.relations.push(RelationSource {
                    name,
                    domain: rest[1..].to_vec(),
                    entries: Vec::new(),
                });
            }
            Section::Topologies => {
                if rest.len() != 2 {
                    return Err(parse_error(lineno, col, "expected `name = saturation reduction`"));
                }
                self.topologies.push(TopologySource {
                    name,
                    sat: rest[0].clone(),
                    red: rest[1].clone(),
                });
            }
            Section::Algebra | Section::Carrier => unreachable!(),
        }
        Ok(())
    }

    fn parse_continuation(&mut self, sec: Section, tokens: &[Token], lineno: usize) -> Result<()> {
        let w = words(tokens);
        let col = tokens[0].column;
        match sec {
            Section::Operators => {
                let op = self.operators.last_mut().expect("open entry");
                if op.words != ["table"] {
                    return Err(parse_error(lineno, col, "only `table` operators take indented rows"));
                }
                if w.len() != 3 || w[1] != "->" {
                    return Err(parse_error(lineno, col, "expected `{...} -> {...}`"));
                }
                op.rows.push((w[0].clone(), w[2].clone()));
            }
            Section::AxiomSets => {
                if w.len() < 2 || w[1] != "->" {
                    return Err(parse_error(lineno, col, "expected `point -> {...} ...`"));
                }
                let ax = self.axiom_sets.last_mut().expect("open entry");
                ax.covers.push((w[0].clone(), w[2..].to_vec()));
            }
            Section::Relations => {
                let rel = self.relations.last_mut().expect("open entry");
                match w.as_slice() {
                    [x, a] => rel.entries.push((x.clone(), a.clone(), None)),
                    [x, a, d] => rel.entries.push((x.clone(), a.clone(), Some(d.clone()))),
                    _ => return Err(parse_error(lineno, col, "expected `x a` or `x a degree`")),
                }
            }
            Section::Topologies => return Err(parse_error(lineno, col, "topologies take no indented lines")),
            Section::Algebra | Section::Carrier => unreachable!(),
        }
        Ok(())
    }

    /// Canonical text; parsing it gives back an equal `Source`.
    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str("[algebra]\n");
        match &self.algebra {
            Some(AlgebraSpec::Boolean) => out.push_str("boolean\n"),
            Some(AlgebraSpec::Chain(n)) => {
                let _ = writeln!(out, "chain {n}");
            }
            Some(AlgebraSpec::Elements { names, order }) => {
                let _ = writeln!(out, "elements {}", names.join(" "));
                for (lo, hi) in order {
                    let _ = writeln!(out, "order {lo} < {hi}");
                }
            }
            Some(AlgebraSpec::Downsets { points, order }) => {
                let _ = writeln!(out, "downsets {}", points.join(" "));
                for (lo, hi) in order {
                    let _ = writeln!(out, "order {lo} < {hi}");
                }
            }
            None => {}
        }
        let _ = writeln!(out, "\n[carrier]\n{}", self.carrier.join(" "));
        if !self.axiom_sets.is_empty() {
            out.push_str("\n[axiom_sets]\n");
            for ax in &self.axiom_sets {
                let _ = writeln!(out, "{} =", ax.name);
                for (p, cs) in &ax.covers {
                    let _ = writeln!(out, "  {p} -> {}", cs.join(" "));
                }
            }
        }
        if !self.relations.is_empty() {
            out.push_str("\n[relations]\n");
            for r in &self.relations {
                let _ = writeln!(out, "{} = domain {}", r.name, r.domain.join(" "));
                for (x, a, d) in &r.entries {
                    match d {
                        Some(d) => {
                            let _ = writeln!(out, "  {x} {a} {d}");
                        }
                        None => {
                            let _ = writeln!(out, "  {x} {a}");
                        }
                    }
                }
            }
        }
        if !self.operators.is_empty() {
            out.push_str("\n[operators]\n");
            for o in &self.operators {
                let _ = writeln!(out, "{} = {}", o.name, o.words.join(" "));
                for (u, v) in &o.rows {
                    let _ = writeln!(out, "  {u} -> {v}");
                }
            }
        }
        if !self.topologies.is_empty() {
            out.push_str("\n[topologies]\n");
            for t in &self.topologies {
                let _ = writeln!(out, "{} = {} {}", t.name, t.sat, t.red);
            }
        }
        out
    }
}

/// A validated document: the space and every named object built over it.
#[derive(Clone, Debug)]
pub struct Workspace {
    space: Arc<Space>,
    source: Source,
    operators: HashMap<String, Operator>,
    axiom_sets: HashMap<String, AxiomSet>,
    relations: HashMap<String, HRelation>,
    topologies: HashMap<String, BasicTopology>,
}

pub fn parse_document(text: &str) -> Result<Workspace> {
    parse_document_with(text, DEFAULT_SUBSET_CAP)
}

pub fn parse_document_with(text: &str, subset_cap: usize) -> Result<Workspace> {
    Workspace::build(Source::parse(text)?, subset_cap)
}

fn invalid(name: &str, e: impl std::fmt::Display) -> Error {
    Error::Validation {
        name: name.to_string(),
        message: e.to_string(),
    }
}

fn in_object(name: &str, e: Error) -> Error {
    match e {
        Error::Validation { .. } | Error::CapExceeded { .. } => e,
        other => invalid(name, other),
    }
}

fn check_unique<'a>(kind: &str, names: impl Iterator<Item = &'a String>) -> Result<()> {
    let mut seen = std::collections::HashSet::new();
    for n in names {
        if !seen.insert(n) {
            return Err(invalid(n, format!("duplicate {kind} name")));
        }
    }
    Ok(())
}

impl Workspace {
    pub fn build(mut source: Source, subset_cap: usize) -> Result<Workspace> {
        let algebra = match source.algebra.clone() {
            None => return Err(invalid("algebra", "missing [algebra] section")),
            Some(AlgebraSpec::Boolean) => HeytingAlgebra::boolean2(),
            Some(AlgebraSpec::Chain(n)) => HeytingAlgebra::chain(n)?,
            Some(AlgebraSpec::Elements { names, order }) => {
                HeytingAlgebra::build_from_order(&names, &order)?
            }
            Some(AlgebraSpec::Downsets { points, order }) => {
                HeytingAlgebra::downsets(&points, &order)?
            }
        };
        if source.carrier.is_empty() {
            return Err(invalid("carrier", "missing or empty [carrier] section"));
        }
        let carrier = Carrier::new(&source.carrier).map_err(|e| in_object("carrier", e))?;
        let space = Space::with_cap(algebra, carrier, subset_cap);

        check_unique("axiom set", source.axiom_sets.iter().map(|a| &a.name))?;
        check_unique("relation", source.relations.iter().map(|r| &r.name))?;
        check_unique("operator", source.operators.iter().map(|o| &o.name))?;
        check_unique("topology", source.topologies.iter().map(|t| &t.name))?;

        let mut ws = Workspace {
            space: space.clone(),
            source: Source::default(),
            operators: HashMap::new(),
            axiom_sets: HashMap::new(),
            relations: HashMap::new(),
            topologies: HashMap::new(),
        };
        let canon = |text: &str| -> Result<String> { Ok(space.format_subset(&space.parse_subset(text)?)) };

        for ax_src in &mut source.axiom_sets {
            let name = ax_src.name.clone();
            let mut ax = AxiomSet::new(&space, &name);
            for (p, covers) in &mut ax_src.covers {
                let point = space
                    .carrier()
                    .index(p)
                    .ok_or_else(|| invalid(&name, Error::UnknownPoint(p.clone())))?;
                for c in covers.iter_mut() {
                    *c = canon(c).map_err(|e| in_object(&name, e))?;
                    ax.add(point, space.parse_subset(c).expect("canonical")).map_err(|e| in_object(&name, e))?;
                }
            }
            ws.axiom_sets.insert(name, ax);
        }

        for r_src in &mut source.relations {
            let name = r_src.name.clone();
            let domain = Space::with_cap(
                space.algebra().clone(),
                Carrier::new(&r_src.domain).map_err(|e| in_object(&name, e))?,
                subset_cap,
            );
            let mut rel = HRelation::new(&name, &domain, &space).map_err(|e| in_object(&name, e))?;
            let h = space.algebra();
            for (x, a, d) in &mut r_src.entries {
                let xi = domain
                    .carrier()
                    .index(x)
                    .ok_or_else(|| invalid(&name, Error::UnknownPoint(x.clone())))?;
                let ai = space
                    .carrier()
                    .index(a)
                    .ok_or_else(|| invalid(&name, Error::UnknownPoint(a.clone())))?;
                let degree = match d.as_deref() {
                    None => h.top(),
                    Some(t) => h.element(t).ok_or_else(|| invalid(&name, Error::UnknownElement(t.to_string())))?,
                };
                if degree == h.top() {
                    *d = None;
                }
                rel.set(xi, ai, degree);
            }
            ws.relations.insert(name, rel);
        }

        for o_src in &mut source.operators {
            let name = o_src.name.clone();
            if BUILTIN_OPERATORS.contains(&name.as_str()) {
                return Err(invalid(&name, "name is reserved for a builtin operator"));
            }
            let op = ws.build_operator(o_src).map_err(|e| in_object(&name, e))?;
            ws.operators.insert(name.clone(), op.named(name));
        }

        for t_src in &source.topologies {
            let t = ws
                .topology_from(&t_src.sat, &t_src.red)
                .map_err(|e| in_object(&t_src.name, e))?
                .named(t_src.name.clone());
            ws.topologies.insert(t_src.name.clone(), t);
        }

        ws.source = source;
        Ok(ws)
    }

    fn build_operator(&self, src: &mut OperatorSource) -> Result<Operator> {
        let space = &self.space;
        let w: Vec<&str> = src.words.iter().map(String::as_str).collect();
        let (head, args) = (w[0], &w[1..]);
        let arity = |n: usize| -> Result<()> {
            if args.len() != n {
                Err(Error::Usage(format!("`{head}` takes {n} argument(s)")))
            } else {
                Ok(())
            }
        };
        let subsets = |args: &[&str]| -> Result<Vec<HSubset>> { args.iter().map(|a| space.parse_subset(a)).collect() };
        let ops = |args: &[&str]| -> Result<Vec<Operator>> { args.iter().map(|a| self.operator(a)).collect() };
        let op = match head {
            "id" | "bot" | "top" | "neg" | "dneg" | "inhabited" => {
                arity(0)?;
                self.operator(head)?
            }
            "const" => {
                arity(1)?;
                Operator::constant(space, space.parse_subset(args[0])?)?
            }
            "compose" => {
                if args.is_empty() {
                    return Err(Error::Usage("`compose` needs at least one operator".into()));
                }
                compose_all(space, &ops(args)?)?
            }
            "meet" => pointwise_meet(space, &ops(args)?)?,
            "join" => pointwise_join(space, &ops(args)?)?,
            "family-sat" => from_family_sat(space, &subsets(args)?)?.op().clone(),
            "family-red" => from_family_red(space, &subsets(args)?)?.op().clone(),
            "ll" => {
                arity(1)?;
                greatest_left_compatible(&self.operator(args[0])?)?
            }
            "rr" => {
                arity(1)?;
                greatest_right_compatible(&self.operator(args[0])?)?
            }
            "aa" => {
                arity(1)?;
                aa(&self.reduction(args[0])?)?.op().clone()
            }
            "jj" => {
                arity(1)?;
                jj(&self.saturation(args[0])?)?.op().clone()
            }
            "generate-sat" => {
                arity(1)?;
                generate_sat(self.axiom_set(args[0])?)?.op().clone()
            }
            "generate-red" => {
                arity(1)?;
                generate_red(self.axiom_set(args[0])?)?.op().clone()
            }
            "rep-sat" => {
                arity(1)?;
                representable(self.relation(args[0])?)?.sat().op().clone()
            }
            "rep-red" => {
                arity(1)?;
                representable(self.relation(args[0])?)?.red().op().clone()
            }
            "ap" => {
                arity(1)?;
                a_p(space, self.degree(args[0])?)?.op().clone()
            }
            "jp" => {
                arity(2)?;
                let b = space
                    .carrier()
                    .index(args[1])
                    .ok_or_else(|| Error::UnknownPoint(args[1].to_string()))?;
                j_p(space, self.degree(args[0])?, b)?.op().clone()
            }
            "table" => {
                arity(0)?;
                let all = space.universe()?;
                let mut rows: Vec<Option<HSubset>> = vec![None; all.len()];
                for (u, v) in &mut src.rows {
                    let (pu, pv) = (space.parse_subset(u)?, space.parse_subset(v)?);
                    let i = space.index_of(&pu);
                    if rows[i].is_some() {
                        return Err(Error::Usage(format!("table row for {} given twice", space.format_subset(&pu))));
                    }
                    *u = space.format_subset(&pu);
                    *v = space.format_subset(&pv);
                    rows[i] = Some(pv);
                }
                if let Some(i) = rows.iter().position(Option::is_none) {
                    return Err(Error::Usage(format!(
                        "table is not total: no row for {}",
                        space.format_subset(&all[i])
                    )));
                }
                src.rows.sort_by_key(|(u, _)| space.index_of(&space.parse_subset(u).expect("canonical")));
                Operator::table(space, &src.name, rows.into_iter().map(Option::unwrap).collect())?
            }
            other => return Err(Error::Usage(format!("unknown operator form `{other}`"))),
        };
        for word in src.words.iter_mut().skip(1) {
            if word.starts_with('{') {
                *word = space.format_subset(&space.parse_subset(word)?);
            }
        }
        Ok(op)
    }

    fn degree(&self, name: &str) -> Result<crate::heyting::Elem> {
        self.space
            .algebra()
            .element(name)
            .ok_or_else(|| Error::UnknownElement(name.to_string()))
    }

    pub fn space(&self) -> &Arc<Space> {
        &self.space
    }

    pub fn source(&self) -> &Source {
        &self.source
    }

    pub fn serialize(&self) -> String {
        self.source.render()
    }

    pub fn operator_names(&self) -> Vec<&str> {
        self.source.operators.iter().map(|o| o.name.as_str()).collect()
    }

    pub fn operator(&self, name: &str) -> Result<Operator> {
        let s = &self.space;
        Ok(match name {
            "id" => Operator::id(s),
            "bot" => Operator::bot(s),
            "top" => Operator::top(s),
            "neg" => Operator::pseudo_complement(s),
            "dneg" => Operator::double_negation(s),
            "inhabited" => Operator::inhabited(s),
            _ => self
                .operators
                .get(name)
                .cloned()
                .ok_or_else(|| Error::UnknownName(name.to_string()))?,
        })
    }

    pub fn saturation(&self, name: &str) -> Result<Saturation> {
        Saturation::new(self.operator(name)?)
    }

    pub fn reduction(&self, name: &str) -> Result<Reduction> {
        Reduction::new(self.operator(name)?)
    }

    pub fn axiom_set(&self, name: &str) -> Result<&AxiomSet> {
        self.axiom_sets
            .get(name)
            .ok_or_else(|| Error::UnknownName(name.to_string()))
    }

    pub fn relation(&self, name: &str) -> Result<&HRelation> {
        self.relations
            .get(name)
            .ok_or_else(|| Error::UnknownName(name.to_string()))
    }

    fn topology_from(&self, sat: &str, red: &str) -> Result<BasicTopology> {
        BasicTopology::make(self.saturation(sat)?, self.reduction(red)?)
    }

    /// A declared topology, or `X-Y` for the pair of operators `X` and `Y`.
    pub fn topology(&self, name: &str) -> Result<BasicTopology> {
        if let Some(t) = self.topologies.get(name) {
            return Ok(t.clone());
        }
        let unknown = || Error::UnknownName(name.to_string());
        let (sat, red) = name.split_once('-').ok_or_else(unknown)?;
        if self.operator(sat).is_err() || self.operator(red).is_err() {
            return Err(unknown());
        }
        Ok(self.topology_from(sat, red)?.named(name))
    }

    pub fn summary(&self) -> String {
        let h = self.space.algebra();
        let mut out = String::new();
        let _ = writeln!(out, "algebra {{{}}}", h.names().join(", "));
        let _ = writeln!(out, "carrier {{{}}}", self.space.carrier().points().join(", "));
        match self.space.subset_count() {
            Some(n) if self.space.within_cap() => {
                let _ = writeln!(out, "subsets {n}");
            }
            _ => {
                let _ = writeln!(out, "subsets above cap {}", self.space.subset_cap());
            }
        }
        let list = |names: Vec<&str>| if names.is_empty() { "-".to_string() } else { names.join(", ") };
        let _ = writeln!(out, "operators: {}", list(self.operator_names()));
        let _ = writeln!(
            out,
            "axiom sets: {}",
            list(self.source.axiom_sets.iter().map(|a| a.name.as_str()).collect())
        );
        let _ = writeln!(
            out,
            "relations: {}",
            list(self.source.relations.iter().map(|r| r.name.as_str()).collect())
        );
        let _ = writeln!(
            out,
            "topologies: {}",
            list(self.source.topologies.iter().map(|t| t.name.as_str()).collect())
        );
        out
    }
}
