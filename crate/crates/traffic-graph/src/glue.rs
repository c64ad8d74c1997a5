//! Disjoint unions followed by vertex identifications.

use crate::graph::{Edge, TestGraph, VertexId};

/// Accumulates graph pieces on a fresh vertex range, records identifications,
/// and finally produces a compact graph on `0..k`.
pub(crate) struct Glue {
    parent: Vec<usize>,
    edges: Vec<(usize, usize, String, bool)>,
}

impl Glue {
    pub(crate) fn new() -> Self {
        Glue {
            parent: Vec::new(),
            edges: Vec::new(),
        }
    }

    /// Adds fresh vertices and returns the index of the first.
    pub(crate) fn add_vertices(&mut self, count: usize) -> usize {
        let start = self.parent.len();
        self.parent.extend(start..start + count);
        start
    }

    /// Copies `g` onto fresh vertices. Returns a map from positions in
    /// `g.vertices()` to glue indices.
    pub(crate) fn add_graph(&mut self, g: &TestGraph, adjoint: bool) -> Vec<usize> {
        let start = self.add_vertices(g.vertex_count());
        let map: Vec<usize> = (start..start + g.vertex_count()).collect();
        for e in g.edges() {
            let s = map[g.index_of(e.src).unwrap()];
            let t = map[g.index_of(e.tar).unwrap()];
            if adjoint {
                self.edges.push((t, s, e.label.clone(), !e.star));
            } else {
                self.edges.push((s, t, e.label.clone(), e.star));
            }
        }
        map
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn merge(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }

    /// Finishes the construction. Returns the glued graph (vertices `0..k`,
    /// numbered by smallest member) and the final id of every glue index.
    /// Connectivity is not checked.
    pub(crate) fn finish(mut self) -> (Vec<VertexId>, Vec<Edge>, Vec<VertexId>) {
        let n = self.parent.len();
        let roots: Vec<usize> = (0..n).map(|i| self.find(i)).collect();
        let mut id_of_root = vec![usize::MAX; n];
        let mut next = 0usize;
        for &r in &roots {
            if id_of_root[r] == usize::MAX {
                id_of_root[r] = next;
                next += 1;
            }
        }
        let ids: Vec<VertexId> = roots.iter().map(|&r| id_of_root[r] as VertexId).collect();
        let edges = self
            .edges
            .into_iter()
            .map(|(s, t, label, star)| Edge {
                src: ids[s],
                tar: ids[t],
                label,
                star,
            })
            .collect();
        ((0..next as VertexId).collect(), edges, ids)
    }

    /// Like [`Glue::finish`] but returns a [`TestGraph`], checking
    /// connectivity.
    pub(crate) fn finish_graph(self) -> Result<(TestGraph, Vec<VertexId>), crate::GraphError> {
        let (vs, edges, ids) = self.finish();
        let g = TestGraph::new(vs, edges)?;
        Ok((g, ids))
    }
}
