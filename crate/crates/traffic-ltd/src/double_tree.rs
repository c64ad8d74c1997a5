//! Colored double trees.

use std::collections::BTreeMap;
use std::fmt;

use traffic_graph::{TestGraph, VertexId};

/// Orientation of the two edges of a pad.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PadKind {
    Congruent,
    Opposing,
}

/// A twin-edge class of a colored double tree. For a congruent pad both
/// edges run from `src` to `tar`; for an opposing pad `src → tar` is the
/// orientation of its first edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pad {
    pub src: VertexId,
    pub tar: VertexId,
    pub label: String,
    pub kind: PadKind,
}

/// Why a test graph fails to be a colored double tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Loop(VertexId),
    Multiplicity {
        endpoints: (VertexId, VertexId),
        edges: usize,
    },
    MixedLabels {
        endpoints: (VertexId, VertexId),
    },
    SkeletonCycle,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Loop(v) => write!(f, "loop at vertex {v}"),
            Witness::Multiplicity {
                endpoints: (a, b),
                edges,
            } => {
                write!(f, "{edges} edges between {a} and {b}")
            }
            Witness::MixedLabels { endpoints: (a, b) } => {
                write!(f, "two labels between {a} and {b}")
            }
            Witness::SkeletonCycle => write!(f, "the skeleton has a cycle"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleTreeReport {
    pub is_double_tree: bool,
    /// `c_i(T)`: congruent pads per label.
    pub congruent: BTreeMap<String, usize>,
    /// `o_i(T)`: opposing pads per label.
    pub opposing: BTreeMap<String, usize>,
    pub pads: Vec<Pad>,
    pub witness: Option<Witness>,
}

impl DoubleTreeReport {
    fn rejected(witness: Witness) -> Self {
        DoubleTreeReport {
            is_double_tree: false,
            congruent: BTreeMap::new(),
            opposing: BTreeMap::new(),
            pads: Vec::new(),
            witness: Some(witness),
        }
    }
}

/// Decides whether `t` is a colored double tree. Edge directions are taken
/// as written: on self-adjoint matrices an adjoint mark changes nothing.
pub fn classify_double_tree(t: &TestGraph) -> DoubleTreeReport {
    if let Some(e) = t.edges().iter().find(|e| e.is_loop()) {
        return DoubleTreeReport::rejected(Witness::Loop(e.src));
    }
    let mut pads = Vec::new();
    for class in t.edge_classes() {
        if class.multiplicity() != 2 {
            return DoubleTreeReport::rejected(Witness::Multiplicity {
                endpoints: class.endpoints,
                edges: class.multiplicity(),
            });
        }
        let first = &t.edges()[class.members[0]];
        let second = &t.edges()[class.members[1]];
        if first.label != second.label {
            return DoubleTreeReport::rejected(Witness::MixedLabels {
                endpoints: class.endpoints,
            });
        }
        let kind = if first.src == second.src {
            PadKind::Congruent
        } else {
            PadKind::Opposing
        };
        pads.push(Pad {
            src: first.src,
            tar: first.tar,
            label: first.label.clone(),
            kind,
        });
    }
    if !t.skeleton_is_tree() {
        return DoubleTreeReport::rejected(Witness::SkeletonCycle);
    }
    let mut congruent = BTreeMap::new();
    let mut opposing = BTreeMap::new();
    for p in &pads {
        let slot = match p.kind {
            PadKind::Congruent => &mut congruent,
            PadKind::Opposing => &mut opposing,
        };
        *slot.entry(p.label.clone()).or_insert(0) += 1;
    }
    DoubleTreeReport {
        is_double_tree: true,
        congruent,
        opposing,
        pads,
        witness: None,
    }
}
