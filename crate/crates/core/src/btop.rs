//! Basic topologies `[A, J]` on a fixed space, their order, and the
//! reduced/saturated constructions.

use std::fmt::Write as _;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::galois::{aa, agreement, jj, join_reductions, meet_saturations, Reduction, Saturation};
use crate::heyting::Elem;
use crate::hset::{HSubset, Space};
use crate::optable::{compat_degree, first_difference, incl_degree, operators_equal};
use crate::report::{Graded, LawReport};

#[derive(Clone, Debug)]
pub struct BasicTopology {
    name: String,
    sat: Saturation,
    red: Reduction,
}

/// A yes/no answer together with a subset on which it is decided when "no".
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decision {
    pub holds: bool,
    pub witness: Option<HSubset>,
}

impl BasicTopology {
    pub fn make(sat: Saturation, red: Reduction) -> Result<Self> {
        sat.op().same_space(red.op())?;
        let g = compat_degree(sat.op(), red.op())?;
        let space = sat.space();
        if g.degree != space.algebra().top() {
            let (u, v) = match g.witness.as_ref().map(|w| w.subsets.as_slice()) {
                Some([u, v, ..]) => (space.format_subset(u), space.format_subset(v)),
                _ => (String::new(), String::new()),
            };
            return Err(Error::NotCompatible {
                degree: space.name(g.degree).to_string(),
                u,
                v,
            });
        }
        Ok(Self::make_unchecked(sat, red))
    }

    pub(crate) fn make_unchecked(sat: Saturation, red: Reduction) -> Self {
        BasicTopology {
            name: format!("[{}, {}]", sat.label(), red.label()),
            sat,
            red,
        }
    }

    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn sat(&self) -> &Saturation {
        &self.sat
    }

    pub fn red(&self) -> &Reduction {
        &self.red
    }

    pub fn space(&self) -> &Arc<Space> {
        self.sat.space()
    }

    /// `[⊤, ⊥]`, the coarsest basic topology.
    pub fn trivial(space: &Arc<Space>) -> Self {
        Self::make_unchecked(Saturation::top(space), Reduction::bot(space))
    }

    /// `T^R = [AA(J), J]`.
    pub fn reduce(&self) -> Result<Self> {
        Ok(Self::make_unchecked(aa(&self.red)?, self.red.clone()))
    }

    /// `T^S = [A, JJ(A)]`.
    pub fn saturate(&self) -> Result<Self> {
        Ok(Self::make_unchecked(self.sat.clone(), jj(&self.sat)?))
    }

    pub fn is_reduced(&self) -> Result<Decision> {
        let witness = first_difference(self.sat.op(), aa(&self.red)?.op())?;
        Ok(Decision {
            holds: witness.is_none(),
            witness,
        })
    }

    pub fn is_saturated(&self) -> Result<Decision> {
        let witness = first_difference(self.red.op(), jj(&self.sat)?.op())?;
        Ok(Decision {
            holds: witness.is_none(),
            witness,
        })
    }

    pub fn equals(&self, other: &BasicTopology) -> Result<bool> {
        Ok(operators_equal(self.sat.op(), other.sat.op())? && operators_equal(self.red.op(), other.red.op())?)
    }
}

/// Degree of `T1 ≤ T2`, i.e. `A2 ⊆ A1` and `J1 ⊆ J2`.
pub fn coarser(t1: &BasicTopology, t2: &BasicTopology) -> Result<Graded> {
    let space = t1.space();
    let a = incl_degree(t2.sat.op(), t1.sat.op())?;
    let j = incl_degree(t1.red.op(), t2.red.op())?;
    let degree = space.algebra().meet(a.degree, j.degree);
    let witness = if degree == space.algebra().top() {
        None
    } else if a.degree == degree {
        a.witness
    } else {
        j.witness
    };
    Ok(Graded { degree, witness })
}

/// `[⋀ A_i, ⋁ J_i]`; the empty family gives `[⊤, ⊥]`.
pub fn join_family(space: &Arc<Space>, ts: &[BasicTopology]) -> Result<BasicTopology> {
    if ts.len() == 1 {
        return Ok(ts[0].clone());
    }
    let sats: Vec<_> = ts.iter().map(|t| t.sat.clone()).collect();
    let reds: Vec<_> = ts.iter().map(|t| t.red.clone()).collect();
    let sat = meet_saturations(space, &sats)?;
    let red = join_reductions(space, &reds)?;
    if space.within_cap() {
        BasicTopology::make(sat, red)
    } else {
        Ok(BasicTopology::make_unchecked(sat, red))
    }
}

#[derive(Clone, Debug)]
pub struct DiagramNode {
    pub names: Vec<&'static str>,
    pub topology: BasicTopology,
}

/// `T`, `T^R`, `T^S`, `T^RS`, `T^SR` with equal nodes merged.
#[derive(Clone, Debug)]
pub struct Diagram {
    pub nodes: Vec<DiagramNode>,
    /// `(i, j)` whenever `nodes[i] ≤ nodes[j]` holds with degree top, `i != j`.
    pub order: Vec<(usize, usize)>,
    /// Covering pairs of `order`.
    pub edges: Vec<(usize, usize)>,
    pub checks: Vec<(String, Elem)>,
}

pub fn five_node_diagram(t: &BasicTopology) -> Result<Diagram> {
    let space = t.space();
    let h = space.algebra();
    let r = t.reduce()?;
    let s = t.saturate()?;
    let rs = r.saturate()?;
    let sr = s.reduce()?;

    let checks = vec![
        ("T^R <= T".to_string(), coarser(&r, t)?.degree),
        ("T <= T^S".to_string(), coarser(t, &s)?.degree),
        ("T^RS <= T^SR".to_string(), coarser(&rs, &sr)?.degree),
    ];

    let mut nodes: Vec<DiagramNode> = Vec::new();
    for (name, topo) in [("T", t), ("T^R", &r), ("T^S", &s), ("T^RS", &rs), ("T^SR", &sr)] {
        let mut merged = false;
        for node in nodes.iter_mut() {
            if node.topology.equals(topo)? {
                node.names.push(name);
                merged = true;
                break;
            }
        }
        if !merged {
            nodes.push(DiagramNode {
                names: vec![name],
                topology: topo.clone(),
            });
        }
    }

    let mut order = Vec::new();
    for i in 0..nodes.len() {
        for j in 0..nodes.len() {
            if i != j && coarser(&nodes[i].topology, &nodes[j].topology)?.degree == h.top() {
                order.push((i, j));
            }
        }
    }
    let edges = order
        .iter()
        .copied()
        .filter(|&(i, j)| !(0..nodes.len()).any(|k| order.contains(&(i, k)) && order.contains(&(k, j))))
        .collect();

    Ok(Diagram {
        nodes,
        order,
        edges,
        checks,
    })
}

impl Diagram {
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph basic_topologies {\n  rankdir=BT;\n");
        for (i, node) in self.nodes.iter().enumerate() {
            let t = &node.topology;
            let _ = writeln!(
                out,
                "  n{i} [label=\"{}\\nA: {}, J: {}\"];",
                node.names.join(" = "),
                t.sat().label(),
                t.red().label()
            );
        }
        for (i, j) in &self.edges {
            let _ = writeln!(out, "  n{i} -> n{j};");
        }
        out.push_str("}\n");
        out
    }
}

/// The argument on one side of an adjunction between basic topologies and
/// reductions or saturations.
#[derive(Clone, Debug)]
pub enum Side {
    Reduction(Reduction),
    Saturation(Saturation),
}

/// For a reduction `J`: `[AA(J), J] ≤ T ⇔ J ⊆ J'`.
/// For a saturation `A`: `A ⊆ A' ⇔ T ≤ [A, JJ(A)]`.
pub fn adjunction_check(side: &Side, t: &BasicTopology) -> Result<LawReport> {
    let space = t.space();
    let (law, ds) = match side {
        Side::Reduction(j) => {
            let free = BasicTopology::make_unchecked(aa(j)?, j.clone());
            (
                "adjunction-reduction",
                [
                    ("[AA(J),J] <= T", coarser(&free, t)?.degree),
                    ("J <= J'", incl_degree(j.op(), t.red.op())?.degree),
                ],
            )
        }
        Side::Saturation(a) => {
            let cofree = BasicTopology::make_unchecked(a.clone(), jj(a)?);
            (
                "adjunction-saturation",
                [
                    ("A <= A'", incl_degree(a.op(), t.sat.op())?.degree),
                    ("T <= [A,JJ(A)]", coarser(t, &cofree)?.degree),
                ],
            )
        }
    };
    let degree = agreement(space, &[ds[0].1, ds[1].1]);
    let mut r = LawReport::from_degree(law, space.algebra(), Graded { degree, witness: None });
    r.components = ds.iter().map(|(n, d)| (n.to_string(), *d)).collect();
    Ok(r)
}
