//! The bipartite graph of colored components and shared vertices.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;
use traffic_graph::graph::components;
use traffic_graph::{Edge, TestGraph, VertexId};

use crate::error::IndependenceError;

/// Family id of every label.
pub type Families = BTreeMap<String, String>;

/// A connected subgraph spanned by the edges of one family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Component {
    pub family: String,
    pub vertices: Vec<VertexId>,
    /// Positions in `T.edges()`.
    pub edges: Vec<usize>,
}

impl Component {
    /// The component as a test graph on its own vertices.
    pub fn graph(&self, t: &TestGraph) -> TestGraph {
        let edges: Vec<Edge> = self.edges.iter().map(|&i| t.edges()[i].clone()).collect();
        TestGraph::new(self.vertices.iter().copied(), edges)
            .expect("component edges stay inside it")
    }
}

/// A node of χ(T).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum ChiNode {
    Component(usize),
    Shared(VertexId),
}

/// χ(T): components on one side, vertices lying in two or more
/// components on the other, joined by containment.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChiGraph {
    pub components: Vec<Component>,
    /// Each shared vertex with the components containing it.
    pub shared: BTreeMap<VertexId, Vec<usize>>,
}

impl ChiGraph {
    pub fn node_count(&self) -> usize {
        self.components.len() + self.shared.len()
    }

    pub fn edge_count(&self) -> usize {
        self.shared.values().map(Vec::len).sum()
    }

    fn neighbors(&self, node: ChiNode) -> Vec<ChiNode> {
        match node {
            ChiNode::Shared(v) => self.shared[&v]
                .iter()
                .map(|&c| ChiNode::Component(c))
                .collect(),
            ChiNode::Component(c) => self.components[c]
                .vertices
                .iter()
                .filter(|v| self.shared.contains_key(v))
                .map(|&v| ChiNode::Shared(v))
                .collect(),
        }
    }

    /// A cycle of χ, as a closed walk without the repeated first node.
    pub fn find_cycle(&self) -> Option<Vec<ChiNode>> {
        let mut parent: BTreeMap<ChiNode, Option<ChiNode>> = BTreeMap::new();
        let starts = (0..self.components.len()).map(ChiNode::Component);
        for start in starts {
            if parent.contains_key(&start) {
                continue;
            }
            parent.insert(start, None);
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for w in self.neighbors(u) {
                    if parent[&u] == Some(w) {
                        continue;
                    }
                    if parent.contains_key(&w) {
                        return Some(self.close_cycle(&parent, u, w));
                    }
                    parent.insert(w, Some(u));
                    stack.push(w);
                }
            }
        }
        None
    }

    /// The cycle formed by the tree paths to `u` and `w` plus the edge `uw`.
    fn close_cycle(
        &self,
        parent: &BTreeMap<ChiNode, Option<ChiNode>>,
        u: ChiNode,
        w: ChiNode,
    ) -> Vec<ChiNode> {
        let path = |mut x: ChiNode| {
            let mut out = vec![x];
            while let Some(p) = parent[&x] {
                out.push(p);
                x = p;
            }
            out
        };
        let (pu, pw) = (path(u), path(w));
        let on_w: BTreeSet<ChiNode> = pw.iter().copied().collect();
        let meet = *pu
            .iter()
            .find(|x| on_w.contains(x))
            .expect("both paths reach the root");
        let mut cycle: Vec<ChiNode> = pu.iter().copied().take_while(|&x| x != meet).collect();
        cycle.push(meet);
        let back: Vec<ChiNode> = pw.iter().copied().take_while(|&x| x != meet).collect();
        cycle.extend(back.into_iter().rev());
        cycle
    }

    /// Connected with one edge fewer than nodes. The empty χ of an edgeless
    /// graph counts as a tree.
    pub fn is_tree(&self) -> bool {
        let nodes = self.node_count();
        nodes == 0 || (self.edge_count() + 1 == nodes && self.is_connected())
    }

    fn is_connected(&self) -> bool {
        let mut seen = BTreeSet::new();
        let mut stack = vec![ChiNode::Component(0)];
        while let Some(u) = stack.pop() {
            if seen.insert(u) {
                stack.extend(self.neighbors(u));
            }
        }
        seen.len() == self.node_count()
    }
}

/// Builds χ(T) for the given label families.
pub fn chi_graph(t: &TestGraph, families: &Families) -> Result<ChiGraph, IndependenceError> {
    let mut by_family: BTreeMap<&str, Vec<usize>> = BTreeMap::new();
    for (i, e) in t.edges().iter().enumerate() {
        let family = families
            .get(&e.label)
            .ok_or_else(|| IndependenceError::UnassignedLabel(e.label.clone()))?;
        by_family.entry(family).or_default().push(i);
    }
    let mut comps = Vec::new();
    for (family, ids) in by_family {
        let touched: BTreeSet<VertexId> = ids
            .iter()
            .flat_map(|&i| [t.edges()[i].src, t.edges()[i].tar])
            .collect();
        let touched: Vec<VertexId> = touched.into_iter().collect();
        for vertices in components(&touched, ids.iter().map(|&i| t.edges()[i].endpoints())) {
            let edges = ids
                .iter()
                .copied()
                .filter(|&i| vertices.binary_search(&t.edges()[i].src).is_ok())
                .collect();
            comps.push(Component {
                family: family.to_string(),
                vertices,
                edges,
            });
        }
    }
    let mut owners: BTreeMap<VertexId, Vec<usize>> = BTreeMap::new();
    for (c, comp) in comps.iter().enumerate() {
        for &v in &comp.vertices {
            owners.entry(v).or_default().push(c);
        }
    }
    owners.retain(|_, cs| cs.len() >= 2);
    Ok(ChiGraph {
        components: comps,
        shared: owners,
    })
}

/// Whether `T` is a free product in the families, with a cycle of χ(T) as
/// witness when it is not.
pub fn is_free_product(
    t: &TestGraph,
    families: &Families,
) -> Result<(bool, Option<Vec<ChiNode>>), IndependenceError> {
    let chi = chi_graph(t, families)?;
    if chi.is_tree() {
        return Ok((true, None));
    }
    Ok((false, chi.find_cycle()))
}

/// Every label in its own family.
pub fn singleton_families<'a>(labels: impl IntoIterator<Item = &'a str>) -> Families {
    labels
        .into_iter()
        .map(|l| (l.to_string(), l.to_string()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(pairs: &[(&str, &str)]) -> Families {
        pairs
            .iter()
            .map(|(l, f)| (l.to_string(), f.to_string()))
            .collect()
    }

    #[test]
    fn loops_on_a_shared_vertex() {
        let t = TestGraph::from_edges(vec![Edge::new(0, 0, "x"), Edge::new(0, 0, "y")]).unwrap();
        let f = fam(&[("x", "a"), ("y", "b")]);
        let chi = chi_graph(&t, &f).unwrap();
        assert_eq!((chi.components.len(), chi.shared.len()), (2, 1));
        assert_eq!(is_free_product(&t, &f).unwrap(), (true, None));
    }

    #[test]
    fn two_double_edges_make_a_square() {
        let t = TestGraph::from_edges(vec![
            Edge::new(0, 1, "x"),
            Edge::new(1, 0, "x"),
            Edge::new(0, 1, "y"),
            Edge::new(1, 0, "y"),
        ])
        .unwrap();
        let (free, witness) = is_free_product(&t, &fam(&[("x", "a"), ("y", "b")])).unwrap();
        assert!(!free);
        assert_eq!(witness.unwrap().len(), 4);
    }

    #[test]
    fn one_family_is_one_node() {
        let t = TestGraph::from_edges(vec![
            Edge::new(0, 1, "x"),
            Edge::new(1, 2, "y"),
            Edge::new(2, 0, "x"),
        ])
        .unwrap();
        let chi = chi_graph(&t, &fam(&[("x", "a"), ("y", "a")])).unwrap();
        assert_eq!((chi.components.len(), chi.shared.len()), (1, 0));
        assert!(chi.is_tree());
    }

    #[test]
    fn unassigned_label() {
        let t = TestGraph::from_edges(vec![Edge::new(0, 1, "z")]).unwrap();
        assert!(chi_graph(&t, &Families::new()).is_err());
    }
}
