#![allow(dead_code)]

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use traffic_graph::{Edge, TestGraph};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random colored double tree on `k` vertices: random parent links, random
/// labels, orientations and pad kinds.
pub fn random_double_tree(rng: &mut impl Rng, k: usize, labels: &[&str]) -> TestGraph {
    if k == 1 {
        return TestGraph::single_vertex();
    }
    let mut edges = Vec::new();
    for v in 1..k as u32 {
        let p = rng.random_range(0..v);
        let label = labels[rng.random_range(0..labels.len())];
        let (s, t) = if rng.random_bool(0.5) { (p, v) } else { (v, p) };
        edges.push(Edge::new(s, t, label));
        if rng.random_bool(0.5) {
            edges.push(Edge::new(s, t, label));
        } else {
            edges.push(Edge::new(t, s, label));
        }
    }
    TestGraph::from_edges(edges).unwrap()
}

/// Path of pads `0 – 1 – … – k` with the given labels, opposing.
pub fn pad_path(labels: &[&str]) -> TestGraph {
    let mut edges = Vec::new();
    for (i, l) in labels.iter().enumerate() {
        edges.push(Edge::new(i as u32, i as u32 + 1, *l));
        edges.push(Edge::new(i as u32 + 1, i as u32, *l));
    }
    TestGraph::from_edges(edges).unwrap()
}

/// Star with the given pad labels around vertex 0, opposing.
pub fn pad_star(labels: &[&str]) -> TestGraph {
    let mut edges = Vec::new();
    for (i, l) in labels.iter().enumerate() {
        edges.push(Edge::new(0, i as u32 + 1, *l));
        edges.push(Edge::new(i as u32 + 1, 0, *l));
    }
    TestGraph::from_edges(edges).unwrap()
}

/// Every permutation of `0..k`.
pub fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, k - 1);
            out.push(q);
        }
    }
    out
}
