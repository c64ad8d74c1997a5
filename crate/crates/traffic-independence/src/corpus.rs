//! Audit corpora: colored double trees grown pad by pad, plus small graphs
//! that are not free products.
//!
//! Trees are stored as parent arrays and deduplicated by an AHU encoding
//! rooted at the tree's centers, so the corpus up to eight vertices (about
//! two million classes in two labels) can be streamed in little memory.

use std::collections::HashSet;

use traffic_graph::{Edge, TestGraph, VertexId};

/// How a pad joins a vertex to its parent.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Shape {
    /// Both edges point from the parent to the child.
    Down,
    /// Both edges point from the child to the parent.
    Up,
    Opposing,
}

impl Shape {
    const ALL: [Shape; 3] = [Shape::Down, Shape::Up, Shape::Opposing];

    fn flipped(self) -> Shape {
        match self {
            Shape::Down => Shape::Up,
            Shape::Up => Shape::Down,
            Shape::Opposing => Shape::Opposing,
        }
    }

    fn code(self) -> u8 {
        match self {
            Shape::Down => b'd',
            Shape::Up => b'u',
            Shape::Opposing => b'o',
        }
    }
}

/// Vertex `i > 0` hangs from `parent[i] < i` by a pad `pads[i]`.
#[derive(Clone, Debug)]
struct PadTree {
    parent: Vec<u8>,
    pads: Vec<(u8, Shape)>,
}

impl PadTree {
    fn root() -> Self {
        PadTree {
            parent: vec![0],
            pads: vec![(0, Shape::Opposing)],
        }
    }

    fn len(&self) -> usize {
        self.parent.len()
    }

    fn grown(&self, at: usize, label: u8, shape: Shape) -> Self {
        let mut t = self.clone();
        t.parent.push(at as u8);
        t.pads.push((label, shape));
        t
    }

    /// Neighbors with the pad read from the neighbor's side.
    fn adjacency(&self) -> Vec<Vec<(usize, u8, Shape)>> {
        let mut adj = vec![Vec::new(); self.len()];
        for v in 1..self.len() {
            let p = self.parent[v] as usize;
            let (label, shape) = self.pads[v];
            adj[p].push((v, label, shape));
            adj[v].push((p, label, shape.flipped()));
        }
        adj
    }

    fn encode(adj: &[Vec<(usize, u8, Shape)>], v: usize, from: usize, out: &mut Vec<u8>) {
        let mut parts: Vec<Vec<u8>> = adj[v]
            .iter()
            .filter(|&&(w, _, _)| w != from)
            .map(|&(w, label, shape)| {
                let mut s = vec![b'a' + label, shape.code()];
                Self::encode(adj, w, v, &mut s);
                s
            })
            .collect();
        parts.sort_unstable();
        out.push(b'(');
        for p in parts {
            out.extend(p);
        }
        out.push(b')');
    }

    /// Isomorphism-invariant key: the smallest rooted encoding over the
    /// one or two centers.
    fn key(&self) -> Vec<u8> {
        let adj = self.adjacency();
        let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
        let mut layer: Vec<usize> = (0..self.len()).filter(|&v| degree[v] <= 1).collect();
        let mut left = self.len();
        while left > 2 {
            left -= layer.len();
            let mut next = Vec::new();
            for &v in &layer {
                for &(w, _, _) in &adj[v] {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
            layer = next;
        }
        layer
            .iter()
            .map(|&c| {
                let mut s = Vec::new();
                Self::encode(&adj, c, usize::MAX, &mut s);
                s
            })
            .min()
            .expect("a tree has a center")
    }

    fn to_test_graph(&self, labels: &[&str]) -> TestGraph {
        let mut edges = Vec::with_capacity(2 * self.len());
        for v in 1..self.len() {
            let (p, c) = (self.parent[v] as VertexId, v as VertexId);
            let label = labels[self.pads[v].0 as usize];
            let pair = match self.pads[v].1 {
                Shape::Down => [Edge::new(p, c, label), Edge::new(p, c, label)],
                Shape::Up => [Edge::new(c, p, label), Edge::new(c, p, label)],
                Shape::Opposing => [Edge::new(p, c, label), Edge::new(c, p, label)],
            };
            edges.extend(pair);
        }
        TestGraph::new(0..self.len() as VertexId, edges).expect("pad trees are valid graphs")
    }
}

/// Calls `f` once per isomorphism class of colored double trees with at
/// most `max_vertices` vertices and pads in `labels`, starting with the
/// single vertex and continuing by vertex count.
pub fn for_each_double_tree(max_vertices: usize, labels: &[&str], mut f: impl FnMut(TestGraph)) {
    assert!(max_vertices <= 255 && labels.len() <= 26, "corpus bounds");
    let mut level = vec![PadTree::root()];
    f(level[0].to_test_graph(labels));
    for size in 2..=max_vertices {
        let last = size == max_vertices;
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for t in &level {
            for at in 0..t.len() {
                for label in 0..labels.len() as u8 {
                    for shape in Shape::ALL {
                        let g = t.grown(at, label, shape);
                        if seen.insert(g.key()) {
                            f(g.to_test_graph(labels));
                            if !last {
                                next.push(g);
                            }
                        }
                    }
                }
            }
        }
        level = next;
    }
}

/// The classes of [`for_each_double_tree`] collected in a vector.
pub fn double_tree_corpus(max_vertices: usize, labels: &[&str]) -> Vec<TestGraph> {
    let mut out = Vec::new();
    for_each_double_tree(max_vertices, labels, |g| out.push(g));
    out
}

/// Small graphs in two labels whose χ has a cycle under singleton
/// families: parallel pads, alternating cycles and a pad closed into a
/// triangle.
pub fn witness_graphs(x: &str, y: &str) -> Vec<TestGraph> {
    let g = |edges: &[(VertexId, VertexId, &str)]| {
        TestGraph::from_edges(edges.iter().map(|&(s, t, l)| Edge::new(s, t, l)).collect())
            .expect("fixed witnesses")
    };
    vec![
        g(&[(0, 1, x), (1, 0, x), (0, 1, y), (1, 0, y)]),
        g(&[(0, 1, x), (0, 1, x), (0, 1, y), (0, 1, y)]),
        g(&[(0, 1, x), (1, 2, y), (2, 3, x), (3, 0, y)]),
        g(&[
            (0, 1, x),
            (1, 0, x),
            (1, 2, y),
            (2, 1, y),
            (2, 0, x),
            (0, 2, x),
        ]),
        g(&[
            (0, 1, x),
            (1, 0, x),
            (1, 2, y),
            (2, 1, y),
            (2, 3, x),
            (3, 2, x),
            (3, 0, y),
            (0, 3, y),
        ]),
        g(&[(0, 0, x), (0, 1, y), (1, 0, y), (1, 1, x), (0, 1, x)]),
    ]
}
