// Shared random generators for the integration tests.
#![allow(dead_code)]

use rand::Rng;
use traffic_graph::{Edge, GraphMonomial, TestGraph, VertexId};

pub fn random_graph<R: Rng>(rng: &mut R, k: usize, extra: usize, labels: &[&str]) -> TestGraph {
    let mut edges = Vec::new();
    let mut push = |rng: &mut R, a: VertexId, b: VertexId| {
        let (s, t) = if rng.random_bool(0.5) { (a, b) } else { (b, a) };
        let l = labels[rng.random_range(0..labels.len())];
        let star = rng.random_bool(0.2);
        edges.push(Edge {
            src: s,
            tar: t,
            label: l.to_string(),
            star,
        });
    };
    for v in 1..k as VertexId {
        let parent = rng.random_range(0..v);
        push(rng, parent, v);
    }
    for _ in 0..extra {
        let a = rng.random_range(0..k as VertexId);
        let b = rng.random_range(0..k as VertexId);
        push(rng, a, b);
    }
    TestGraph::new(0..k as VertexId, edges).unwrap()
}

pub fn random_monomial<R: Rng>(
    rng: &mut R,
    k: usize,
    extra: usize,
    labels: &[&str],
) -> GraphMonomial {
    let g = random_graph(rng, k, extra, labels);
    let i = rng.random_range(0..k as VertexId);
    let o = rng.random_range(0..k as VertexId);
    GraphMonomial::new(g, i, o).unwrap()
}

/// Applies a vertex bijection `v ↦ perm[v] + offset` and shuffles the edge list.
pub fn relabel<R: Rng>(
    rng: &mut R,
    g: &TestGraph,
    perm: &[VertexId],
    offset: VertexId,
) -> TestGraph {
    use rand::seq::SliceRandom;
    let mut edges: Vec<Edge> = g
        .edges()
        .iter()
        .map(|e| Edge {
            src: perm[e.src as usize] + offset,
            tar: perm[e.tar as usize] + offset,
            label: e.label.clone(),
            star: e.star,
        })
        .collect();
    edges.shuffle(rng);
    TestGraph::new(
        g.vertices().iter().map(|&v| perm[v as usize] + offset),
        edges,
    )
    .unwrap()
}
