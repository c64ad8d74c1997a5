//! Test graphs and twin-edge classes.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::GraphError;
use crate::partition::Partition;

/// Opaque vertex identifier. Equality of graphs up to isomorphism never
/// depends on these values.
pub type VertexId = u32;

/// A directed labeled edge. `star` marks the adjoint `x*` of the label.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub src: VertexId,
    pub tar: VertexId,
    pub label: String,
    pub star: bool,
}

impl Edge {
    pub fn new(src: VertexId, tar: VertexId, label: impl Into<String>) -> Self {
        Edge {
            src,
            tar,
            label: label.into(),
            star: false,
        }
    }

    pub fn starred(src: VertexId, tar: VertexId, label: impl Into<String>) -> Self {
        Edge {
            src,
            tar,
            label: label.into(),
            star: true,
        }
    }

    pub fn is_loop(&self) -> bool {
        self.src == self.tar
    }

    /// The same edge traversed backwards with the adjoint mark toggled.
    pub fn adjoint(&self) -> Self {
        Edge {
            src: self.tar,
            tar: self.src,
            label: self.label.clone(),
            star: !self.star,
        }
    }

    /// Unordered endpoint pair `(min, max)`.
    pub fn endpoints(&self) -> (VertexId, VertexId) {
        (self.src.min(self.tar), self.src.max(self.tar))
    }
}

/// A finite connected edge-labeled multidigraph.
///
/// Vertices are stored sorted and deduplicated; edges keep insertion order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TestGraph {
    vertices: Vec<VertexId>,
    edges: Vec<Edge>,
}

impl TestGraph {
    /// Builds a test graph, checking that the vertex set is non-empty, that
    /// every edge endpoint is listed, and that the graph is connected.
    pub fn new(
        vertices: impl IntoIterator<Item = VertexId>,
        edges: Vec<Edge>,
    ) -> Result<Self, GraphError> {
        let mut vs: Vec<VertexId> = vertices.into_iter().collect();
        vs.sort_unstable();
        vs.dedup();
        if vs.is_empty() {
            return Err(GraphError::EmptyVertexSet);
        }
        for e in &edges {
            for v in [e.src, e.tar] {
                if vs.binary_search(&v).is_err() {
                    return Err(GraphError::UnknownVertex(v));
                }
            }
        }
        let g = TestGraph {
            vertices: vs,
            edges,
        };
        if !g.is_connected() {
            return Err(GraphError::Disconnected);
        }
        Ok(g)
    }

    /// Builds a test graph whose vertex set is the set of edge endpoints.
    pub fn from_edges(edges: Vec<Edge>) -> Result<Self, GraphError> {
        let vs: Vec<VertexId> = edges.iter().flat_map(|e| [e.src, e.tar]).collect();
        Self::new(vs, edges)
    }

    /// The graph with one vertex and no edges.
    pub fn single_vertex() -> Self {
        TestGraph {
            vertices: vec![0],
            edges: Vec::new(),
        }
    }

    /// Assembles a graph from parts already known to be valid and connected.
    pub(crate) fn from_parts_unchecked(vertices: Vec<VertexId>, edges: Vec<Edge>) -> Self {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        TestGraph { vertices, edges }
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    /// Position of `v` in the sorted vertex list.
    pub fn index_of(&self, v: VertexId) -> Option<usize> {
        self.vertices.binary_search(&v).ok()
    }

    /// Distinct labels in sorted order.
    pub fn labels(&self) -> BTreeSet<&str> {
        self.edges.iter().map(|e| e.label.as_str()).collect()
    }

    /// Number of loop edges.
    pub fn loop_count(&self) -> usize {
        self.edges.iter().filter(|e| e.is_loop()).count()
    }

    /// True if some edge carries the adjoint mark.
    pub fn has_stars(&self) -> bool {
        self.edges.iter().any(|e| e.star)
    }

    fn is_connected(&self) -> bool {
        components(&self.vertices, self.edges.iter().map(|e| (e.src, e.tar))).len() <= 1
    }

    /// Edges reversed and adjoint marks toggled; vertex set unchanged.
    pub fn adjoint(&self) -> Self {
        TestGraph {
            vertices: self.vertices.clone(),
            edges: self.edges.iter().map(Edge::adjoint).collect(),
        }
    }

    /// Same graph with vertices renamed `0..k` in sorted order.
    pub fn compact(&self) -> Self {
        let edges = self
            .edges
            .iter()
            .map(|e| Edge {
                src: self.index_of(e.src).unwrap() as VertexId,
                tar: self.index_of(e.tar).unwrap() as VertexId,
                label: e.label.clone(),
                star: e.star,
            })
            .collect();
        TestGraph {
            vertices: (0..self.vertices.len() as VertexId).collect(),
            edges,
        }
    }

    /// The quotient `T^π`: vertices of a block are identified and edges are
    /// re-anchored. Each block is represented by its smallest vertex.
    pub fn quotient(&self, pi: &Partition) -> Result<TestGraph, GraphError> {
        if pi.ground() != self.vertices {
            return Err(GraphError::PartitionMismatch);
        }
        Ok(self.quotient_unchecked(pi))
    }

    pub(crate) fn quotient_unchecked(&self, pi: &Partition) -> TestGraph {
        let rep = |v: VertexId| pi.blocks()[pi.block_of(v).unwrap()][0];
        let vertices: Vec<VertexId> = pi.blocks().iter().map(|b| b[0]).collect();
        let mut vertices = vertices;
        vertices.sort_unstable();
        let edges = self
            .edges
            .iter()
            .map(|e| Edge {
                src: rep(e.src),
                tar: rep(e.tar),
                label: e.label.clone(),
                star: e.star,
            })
            .collect();
        TestGraph { vertices, edges }
    }

    /// Quotient by a block assignment given as one block index per vertex
    /// position (a restricted growth string). Vertices of the result are the
    /// block indices.
    pub fn quotient_by_rgs(&self, rgs: &[usize]) -> TestGraph {
        debug_assert_eq!(rgs.len(), self.vertices.len());
        let blocks = rgs.iter().copied().max().map_or(0, |m| m + 1);
        let edges = self
            .edges
            .iter()
            .map(|e| Edge {
                src: rgs[self.index_of(e.src).unwrap()] as VertexId,
                tar: rgs[self.index_of(e.tar).unwrap()] as VertexId,
                label: e.label.clone(),
                star: e.star,
            })
            .collect();
        TestGraph {
            vertices: (0..blocks as VertexId).collect(),
            edges,
        }
    }

    /// Twin-edge classes: edges grouped by unordered endpoint pair, in order
    /// of first appearance.
    pub fn edge_classes(&self) -> Vec<EdgeClass> {
        let mut order: Vec<(VertexId, VertexId)> = Vec::new();
        let mut by_pair: BTreeMap<(VertexId, VertexId), EdgeClass> = BTreeMap::new();
        for (idx, e) in self.edges.iter().enumerate() {
            let key = e.endpoints();
            let class = by_pair.entry(key).or_insert_with(|| {
                order.push(key);
                EdgeClass {
                    endpoints: key,
                    members: Vec::new(),
                    counts: BTreeMap::new(),
                }
            });
            class.members.push(idx);
            let count = class.counts.entry(e.label.clone()).or_default();
            if e.is_loop() || e.src == key.0 {
                count.forward += 1;
            } else {
                count.backward += 1;
            }
        }
        order
            .into_iter()
            .map(|k| by_pair.remove(&k).unwrap())
            .collect()
    }

    /// Undirected simple skeleton: distinct non-loop endpoint pairs.
    pub fn skeleton(&self) -> BTreeSet<(VertexId, VertexId)> {
        self.edges
            .iter()
            .filter(|e| !e.is_loop())
            .map(Edge::endpoints)
            .collect()
    }

    /// True if the undirected skeleton (loops ignored) is a tree.
    pub fn skeleton_is_tree(&self) -> bool {
        self.skeleton().len() + 1 == self.vertices.len()
    }
}

/// Per-label edge counts inside a twin-edge class. `forward` counts edges
/// oriented from the smaller endpoint to the larger one (and loops).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct LabelCount {
    pub forward: usize,
    pub backward: usize,
}

impl LabelCount {
    pub fn total(&self) -> usize {
        self.forward + self.backward
    }
}

/// Edges sharing an unordered endpoint pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeClass {
    /// `(u, v)` with `u <= v`; `u == v` for loop classes.
    pub endpoints: (VertexId, VertexId),
    /// Indices into [`TestGraph::edges`].
    pub members: Vec<usize>,
    /// Multiplicity per label with the orientation split.
    pub counts: BTreeMap<String, LabelCount>,
}

impl EdgeClass {
    pub fn is_loop(&self) -> bool {
        self.endpoints.0 == self.endpoints.1
    }

    pub fn multiplicity(&self) -> usize {
        self.members.len()
    }

    /// Multiplicity of one label in this class.
    pub fn label_multiplicity(&self, label: &str) -> usize {
        self.counts.get(label).map_or(0, LabelCount::total)
    }
}

/// Connected components of the undirected graph on `vertices` with the
/// given edges, each sorted, listed by smallest vertex.
pub fn components(
    vertices: &[VertexId],
    edges: impl IntoIterator<Item = (VertexId, VertexId)>,
) -> Vec<Vec<VertexId>> {
    let index: BTreeMap<VertexId, usize> =
        vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut parent: Vec<usize> = (0..vertices.len()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for (a, b) in edges {
        let (ia, ib) = (index[&a], index[&b]);
        let (ra, rb) = (find(&mut parent, ia), find(&mut parent, ib));
        if ra != rb {
            parent[ra.max(rb)] = ra.min(rb);
        }
    }
    let mut groups: BTreeMap<usize, Vec<VertexId>> = BTreeMap::new();
    for (i, &v) in vertices.iter().enumerate() {
        let r = find(&mut parent, i);
        groups.entry(r).or_default().push(v);
    }
    let mut out: Vec<Vec<VertexId>> = groups.into_values().collect();
    out.sort();
    out
}
