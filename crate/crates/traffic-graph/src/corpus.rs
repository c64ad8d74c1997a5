//! Exhaustive lists of small connected test graphs, one per isomorphism
//! class.

use std::collections::BTreeSet;

use crate::canon::{canonical_key, CanonKey};
use crate::graph::{Edge, TestGraph, VertexId};

/// Every connected test graph with at most `max_vertices` vertices and at
/// most `max_edges` edges over `labels`, up to isomorphism. With `stars`
/// each edge may also carry the adjoint mark. The single vertex without
/// edges is included.
pub fn connected_graphs(
    max_vertices: usize,
    max_edges: usize,
    labels: &[&str],
    stars: bool,
) -> Vec<TestGraph> {
    let mut seen: BTreeSet<CanonKey> = BTreeSet::new();
    let mut out = Vec::new();
    for k in 1..=max_vertices {
        let mut slots: Vec<Edge> = Vec::new();
        for s in 0..k as VertexId {
            for t in 0..k as VertexId {
                for l in labels {
                    slots.push(Edge::new(s, t, *l));
                    if stars {
                        slots.push(Edge::starred(s, t, *l));
                    }
                }
            }
        }
        let mut chosen: Vec<usize> = Vec::new();
        extend(&slots, 0, max_edges, &mut chosen, &mut |idx| {
            let edges: Vec<Edge> = idx.iter().map(|&i| slots[i].clone()).collect();
            if let Ok(g) = TestGraph::new(0..k as VertexId, edges) {
                let key = canonical_key(&g).expect("small graphs are under the cap");
                if seen.insert(key) {
                    out.push(g);
                }
            }
        });
    }
    out
}

/// Visits every multiset of slot indices (non-decreasing sequences) of size
/// at most `budget` extending `chosen`.
fn extend(
    slots: &[Edge],
    from: usize,
    budget: usize,
    chosen: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]),
) {
    visit(chosen);
    if budget == 0 {
        return;
    }
    for i in from..slots.len() {
        chosen.push(i);
        extend(slots, i, budget - 1, chosen, visit);
        chosen.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        // One vertex: 0, 1 or 2 loops. Two vertices joined by one edge.
        assert_eq!(connected_graphs(1, 2, &["x"], false).len(), 3);
        assert_eq!(connected_graphs(2, 1, &["x"], false).len(), 3);
    }
}
