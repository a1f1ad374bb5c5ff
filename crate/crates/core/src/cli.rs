//! Commands over a workspace document, rendered as text with an exit status:
//! 0 when every checked law holds, 1 on a failure, 2 on a usage or parse
//! error, 3 when the subset cap is exceeded.

use std::fmt::Write as _;

use clap::Subcommand;

use crate::btop::{five_node_diagram, BasicTopology};
use crate::catalog;
use crate::doc::{parse_document_with, Workspace, DEFAULT_SUBSET_CAP};
use crate::error::{Error, Result};
use crate::galois::{aa, galois_check, jj};
use crate::gen::generate;
use crate::hset::Space;
use crate::laws::{run_suite, Population, Suite};
use crate::optable::{
    classify, compat_degree, greatest_left_compatible, greatest_right_compatible, largest_splitting_subset, Flag,
    Operator,
};
use crate::rep::{adjunction_check, representable, symmetry_check, triangular_check};
use crate::report::LawReport;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Config {
    pub subset_cap: usize,
    pub sample_count: usize,
    pub seed: u64,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            subset_cap: DEFAULT_SUBSET_CAP,
            sample_count: 200,
            seed: 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Parse and validate the document, then list its objects.
    Validate,
    /// Monotone, idempotent, expansive and contractive flags of an operator.
    Classify { op: String },
    /// Degree of compatibility of two operators.
    Compat { left: String, right: String },
    /// The greatest operator left-compatible with the given one.
    Ll { op: String },
    /// The greatest operator right-compatible with the given one.
    Rr { op: String },
    /// The saturation AA(J) of a reduction.
    Aa { red: String },
    /// The reduction JJ(A) of a saturation.
    Jj { sat: String },
    /// The three sides of the Galois connection for a saturation and a reduction.
    Galois { sat: String, red: String },
    /// Run one law suite, or all of them.
    Laws { suite: Option<String> },
    /// The basic topology generated by an axiom set.
    Generate { axiom_set: String },
    /// The basic topology represented by a relation.
    Represent { relation: String },
    /// DOT for the diagram of T, T^R, T^S, T^RS and T^SR.
    Diagram { topology: String },
    /// Replay a catalog entry.
    Counterexample { name: String },
}

impl Command {
    pub fn needs_document(&self) -> bool {
        !matches!(self, Command::Counterexample { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub text: String,
    pub code: i32,
}

impl Outcome {
    fn new(text: String, ok: bool) -> Self {
        Outcome {
            text,
            code: if ok { EXIT_OK } else { EXIT_FAILED },
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::CapExceeded { .. } => EXIT_CAP,
        Error::Parse { .. }
        | Error::Validation { .. }
        | Error::Usage(_)
        | Error::UnknownCommand(_)
        | Error::UnknownName(_)
        | Error::UnknownEntry(_)
        | Error::UnknownPoint(_)
        | Error::UnknownElement(_)
        | Error::EmptyAlgebra
        | Error::TooManyElements { .. }
        | Error::DuplicateName(_)
        | Error::NotAPartialOrder(..)
        | Error::NotALattice(..)
        | Error::NotHeyting { .. } => EXIT_USAGE,
        _ => EXIT_FAILED,
    }
}

fn error_outcome(e: &Error) -> Outcome {
    Outcome {
        text: format!("error: {e}\n"),
        code: exit_code(e),
    }
}

/// Parses `document` (when the command needs one) and runs `command`.
pub fn run_text(document: Option<&str>, command: &Command, config: &Config) -> Outcome {
    let ws = match (command.needs_document(), document) {
        (false, _) => None,
        (true, None) => return error_outcome(&Error::Usage("this command needs a document (--doc PATH)".into())),
        (true, Some(text)) => match parse_document_with(text, config.subset_cap) {
            Ok(ws) => Some(ws),
            Err(e) => return error_outcome(&e),
        },
    };
    run(command, ws.as_ref(), config)
}

pub fn run(command: &Command, ws: Option<&Workspace>, config: &Config) -> Outcome {
    match dispatch(command, ws, config) {
        Ok(o) => o,
        Err(e) => error_outcome(&e),
    }
}

fn table(space: &Space, op: &Operator) -> Result<String> {
    let mut out = String::new();
    let rows = op.table_rows()?;
    for (u, v) in space.universe()?.iter().zip(rows) {
        let _ = writeln!(out, "  {} -> {}", space.format_subset(u), space.format_subset(v));
    }
    Ok(out)
}

fn reports(space: &Space, rs: &[LawReport]) -> Outcome {
    let text: String = rs.iter().map(|r| r.render(space)).collect();
    Outcome::new(text, rs.iter().all(LawReport::holds))
}

fn dispatch(command: &Command, ws: Option<&Workspace>, config: &Config) -> Result<Outcome> {
    if let Command::Counterexample { name } = command {
        let entry = catalog::load(name)?;
        let results = entry.replay()?;
        let ok = results.iter().all(|r| r.passed);
        return Ok(Outcome::new(entry.render(&results), ok));
    }
    let ws = ws.ok_or_else(|| Error::Usage("this command needs a document (--doc PATH)".into()))?;
    let space = ws.space();
    let h = space.algebra();
    match command {
        Command::Validate => Ok(Outcome::new(ws.summary(), true)),
        Command::Classify { op } => {
            let o = ws.operator(op)?;
            let p = classify(&o)?;
            let mut out = format!("operator {op}\n");
            for (name, flag) in p.flags() {
                match flag {
                    Flag::Holds => {
                        let _ = writeln!(out, "  {name}: yes");
                    }
                    Flag::Refuted(w) => {
                        let _ = writeln!(out, "  {name}: no, witness {}", w.render(space));
                    }
                }
            }
            let yn = |b: bool| if b { "yes" } else { "no" };
            let _ = writeln!(out, "  saturation: {}", yn(p.is_saturation()));
            let _ = writeln!(out, "  reduction: {}", yn(p.is_reduction()));
            Ok(Outcome::new(out, true))
        }
        Command::Compat { left, right } => {
            let g = compat_degree(&ws.operator(left)?, &ws.operator(right)?)?;
            let mut r = LawReport::from_degree(format!("compat({left}, {right})"), h, g);
            r.cases = 1;
            Ok(reports(space, &[r]))
        }
        Command::Ll { op } => {
            let o = ws.operator(op)?;
            let ll = greatest_left_compatible(&o)?;
            let mut out = format!("LL({op})\n{}", table(space, &ll)?);
            let check = LawReport::from_degree("LL(O) compat O", h, compat_degree(&ll, &o)?);
            out.push_str(&check.render(space));
            Ok(Outcome::new(out, check.holds()))
        }
        Command::Rr { op } => {
            let o = ws.operator(op)?;
            let z = largest_splitting_subset(&o)?;
            let rr = greatest_right_compatible(&o)?;
            let mut out = format!("RR({op}) = const {}\n", space.format_subset(&z));
            let check = LawReport::from_degree("O compat RR(O)", h, compat_degree(&o, &rr)?);
            out.push_str(&check.render(space));
            Ok(Outcome::new(out, check.holds()))
        }
        Command::Aa { red } => {
            let a = aa(&ws.reduction(red)?)?;
            Ok(Outcome::new(format!("AA({red})\n{}", table(space, a.op())?), true))
        }
        Command::Jj { sat } => {
            let j = jj(&ws.saturation(sat)?)?;
            Ok(Outcome::new(format!("JJ({sat})\n{}", table(space, j.op())?), true))
        }
        Command::Galois { sat, red } => {
            let r = galois_check(&ws.saturation(sat)?, &ws.reduction(red)?)?;
            Ok(reports(space, &[r]))
        }
        Command::Laws { suite } => {
            let suites: Vec<Suite> = match suite {
                Some(s) => vec![s.parse()?],
                None => Suite::ALL.to_vec(),
            };
            let pop = Population::build(space, config.sample_count, config.seed)?;
            let mut out = if pop.exhaustive {
                format!("{} saturations, {} reductions, exhaustive\n", pop.sats.len(), pop.reds.len())
            } else {
                format!(
                    "{} sampled saturations, {} sampled reductions, seed {}\n",
                    pop.sats.len(),
                    pop.reds.len(),
                    config.seed
                )
            };
            let rs = suites
                .into_iter()
                .map(|s| run_suite(space, s, &pop))
                .collect::<Result<Vec<_>>>()?;
            let o = reports(space, &rs);
            out.push_str(&o.text);
            Ok(Outcome { text: out, code: o.code })
        }
        Command::Generate { axiom_set } => {
            let t = generate(ws.axiom_set(axiom_set)?)?;
            topology_report(space, &t, &[])
        }
        Command::Represent { relation } => {
            let r = ws.relation(relation)?;
            let laws = vec![adjunction_check(r)?, symmetry_check(r)?, triangular_check(r)?];
            let t = representable(r)?;
            topology_report(space, &t, &laws)
        }
        Command::Diagram { topology } => {
            let t = ws.topology(topology)?;
            let d = five_node_diagram(&t)?;
            let mut out = d.to_dot();
            let mut ok = true;
            for (name, e) in &d.checks {
                ok &= *e == h.top();
                let _ = writeln!(out, "// {name}: {}", space.name(*e));
            }
            Ok(Outcome::new(out, ok))
        }
        Command::Counterexample { .. } => unreachable!(),
    }
}

fn topology_report(space: &Space, t: &BasicTopology, laws: &[LawReport]) -> Result<Outcome> {
    let mut out = format!("topology {}\nA = {}\n", t.name(), t.sat().label());
    out.push_str(&table(space, t.sat().op())?);
    let _ = writeln!(out, "J = {}", t.red().label());
    out.push_str(&table(space, t.red().op())?);
    let mut ok = laws.iter().all(LawReport::holds);
    for r in laws {
        out.push_str(&r.render(space));
    }
    let reduced = t.is_reduced()?.holds;
    let saturated = t.is_saturated()?.holds;
    let _ = writeln!(out, "reduced: {}", if reduced { "yes" } else { "no" });
    let _ = writeln!(out, "saturated: {}", if saturated { "yes" } else { "no" });
    ok &= reduced || saturated;
    Ok(Outcome::new(out, ok))
}

#[cfg(test)]
mod tests {
    use super::*;

    const DOC: &str = "[algebra]\nboolean\n[carrier]\na b\n";

    fn go(doc: Option<&str>, c: Command) -> Outcome {
        run_text(doc, &c, &Config::default())
    }

    #[test]
    fn galois_id_id() {
        let o = go(
            Some(DOC),
            Command::Galois {
                sat: "id".into(),
                red: "id".into(),
            },
        );
        assert_eq!(o.code, 0, "{}", o.text);
        assert_eq!(o.text.matches("= 1").count(), 3);
    }

    #[test]
    fn counterexample_without_document() {
        let o = go(None, Command::Counterexample { name: "red-not-saturated".into() });
        assert_eq!(o.code, 0, "{}", o.text);
        assert!(o.text.contains("degree u (expected u)"));
        assert!(o.text.contains("degree 1 (expected 1)"));
        let o = go(None, Command::Counterexample { name: "unknown".into() });
        assert_eq!(o.code, EXIT_USAGE);
    }

    #[test]
    fn diagram_id_bot() {
        let o = go(Some(DOC), Command::Diagram { topology: "id-bot".into() });
        assert_eq!(o.code, 0, "{}", o.text);
        assert_eq!(o.text.matches("[label=").count(), 3);
        assert_eq!(o.text, go(Some(DOC), Command::Diagram { topology: "id-bot".into() }).text);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(go(None, Command::Validate).code, EXIT_USAGE);
        assert_eq!(go(Some("[algebra]\n"), Command::Validate).code, EXIT_USAGE);
        assert_eq!(go(Some(DOC), Command::Classify { op: "nope".into() }).code, EXIT_USAGE);
        let fails = go(
            Some(DOC),
            Command::Compat {
                left: "top".into(),
                right: "id".into(),
            },
        );
        assert_eq!(fails.code, EXIT_FAILED);
        assert!(fails.text.contains("witness"));
        let big = "[algebra]\nchain 3\n[carrier]\na b c d e f g h\n";
        assert_eq!(go(Some(big), Command::Ll { op: "id".into() }).code, EXIT_CAP);
    }

    #[test]
    fn laws_sampled_print_seed() {
        let doc = "[algebra]\nboolean\n[carrier]\na b c d\n";
        let cfg = Config {
            sample_count: 10,
            seed: 42,
            ..Config::default()
        };
        let o = run_text(Some(doc), &Command::Laws { suite: Some("galois".into()) }, &cfg);
        assert_eq!(o.code, 0, "{}", o.text);
        assert!(o.text.contains("seed 42"));
        assert!(o.text.contains("no counterexample found"));
    }
}
