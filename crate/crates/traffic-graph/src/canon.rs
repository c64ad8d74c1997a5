//! Canonical forms of (rooted) labeled multidigraphs.
//!
//! The search is individualization-refinement: vertices are colored by
//! root positions and incident edge descriptors, colors are refined until
//! stable, and a non-singleton color cell is split by trying each of its
//! vertices in turn. Vertices whose transposition is an automorphism lead to
//! identical leaves, so only one of them is tried. The smallest encoding
//! over all leaves is the canonical key.

use std::cmp::Ordering;

use crate::error::GraphError;
use crate::graph::{Edge, TestGraph, VertexId};
use crate::monomial::{GraphMonomial, NGraphMonomial};

/// Default bound on the number of vertices accepted by the search.
pub const DEFAULT_VERTEX_CAP: usize = 16;

/// Canonical key: equal keys mean isomorphic (rooted, labeled, star-marked)
/// multidigraphs. The key is itself a graph on vertices `0..vertex_count`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonKey {
    pub vertex_count: u32,
    pub roots: Vec<u32>,
    pub edges: Vec<(u32, u32, String, bool)>,
}

impl CanonKey {
    /// The representative graph stored in the key.
    pub fn to_test_graph(&self) -> TestGraph {
        let edges = self
            .edges
            .iter()
            .map(|(s, t, l, star)| Edge {
                src: *s,
                tar: *t,
                label: l.clone(),
                star: *star,
            })
            .collect();
        TestGraph::from_parts_unchecked((0..self.vertex_count).collect(), edges)
    }

    /// The representative with its roots.
    pub fn to_ngraph(&self) -> NGraphMonomial {
        NGraphMonomial::new(self.to_test_graph(), self.roots.clone()).unwrap()
    }

    /// The representative as a bi-rooted monomial, if it has two roots.
    pub fn to_monomial(&self) -> Option<GraphMonomial> {
        self.to_ngraph().to_monomial()
    }
}

/// Canonical key of an unrooted test graph.
pub fn canonical_key(g: &TestGraph) -> Result<CanonKey, GraphError> {
    canonical_key_with_cap(g, &[], DEFAULT_VERTEX_CAP)
}

/// Canonical key of a graph with an ordered list of roots.
pub fn canonical_key_rooted(g: &TestGraph, roots: &[VertexId]) -> Result<CanonKey, GraphError> {
    canonical_key_with_cap(g, roots, DEFAULT_VERTEX_CAP)
}

/// Canonical key with an explicit vertex cap.
pub fn canonical_key_with_cap(
    g: &TestGraph,
    roots: &[VertexId],
    cap: usize,
) -> Result<CanonKey, GraphError> {
    let k = g.vertex_count();
    if k > cap {
        return Err(GraphError::VertexCap { vertices: k, cap });
    }
    let mut root_idx = Vec::with_capacity(roots.len());
    for &r in roots {
        root_idx.push(g.index_of(r).ok_or(GraphError::UnknownVertex(r))?);
    }
    let labels: Vec<&str> = g.labels().into_iter().collect();
    let edges: Vec<(usize, usize, u32, bool)> = g
        .edges()
        .iter()
        .map(|e| {
            let l = labels.binary_search(&e.label.as_str()).unwrap() as u32;
            (
                g.index_of(e.src).unwrap(),
                g.index_of(e.tar).unwrap(),
                l,
                e.star,
            )
        })
        .collect();
    let search = Search::new(k, &root_idx, &edges);
    let best = search.run();
    Ok(CanonKey {
        vertex_count: k as u32,
        roots: best.roots,
        edges: best
            .edges
            .into_iter()
            .map(|(s, t, l, star)| (s, t, labels[l as usize].to_string(), star))
            .collect(),
    })
}

/// Incident-edge descriptor: label index, star, and kind (0 out, 1 in, 2 loop).
type Desc = (u32, bool, u8);

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Encoding {
    roots: Vec<u32>,
    edges: Vec<(u32, u32, u32, bool)>,
}

struct Search<'a> {
    k: usize,
    roots: &'a [usize],
    edges: &'a [(usize, usize, u32, bool)],
    adj: Vec<Vec<(Desc, usize)>>,
    sorted_edges: Vec<(usize, usize, u32, bool)>,
}

impl<'a> Search<'a> {
    fn new(k: usize, roots: &'a [usize], edges: &'a [(usize, usize, u32, bool)]) -> Self {
        let mut adj = vec![Vec::new(); k];
        for &(s, t, l, star) in edges {
            if s == t {
                adj[s].push(((l, star, 2), s));
            } else {
                adj[s].push(((l, star, 0), t));
                adj[t].push(((l, star, 1), s));
            }
        }
        let mut sorted_edges = edges.to_vec();
        sorted_edges.sort_unstable();
        Search {
            k,
            roots,
            edges,
            adj,
            sorted_edges,
        }
    }

    fn run(&self) -> Encoding {
        let mut init: Vec<(Vec<usize>, Vec<Desc>)> = (0..self.k)
            .map(|v| {
                let pos: Vec<usize> = self
                    .roots
                    .iter()
                    .enumerate()
                    .filter(|(_, &r)| r == v)
                    .map(|(i, _)| i)
                    .collect();
                let mut d: Vec<Desc> = self.adj[v].iter().map(|(d, _)| *d).collect();
                d.sort_unstable();
                (pos, d)
            })
            .collect();
        let colors = rank(&mut init);
        let colors = self.refine(colors);
        let mut best: Option<Encoding> = None;
        self.descend(colors, &mut best);
        best.expect("search visits at least one leaf")
    }

    fn refine(&self, mut colors: Vec<usize>) -> Vec<usize> {
        let mut count = distinct(&colors);
        loop {
            let mut sigs: Vec<(usize, Vec<(Desc, usize)>)> = (0..self.k)
                .map(|v| {
                    let mut nb: Vec<(Desc, usize)> =
                        self.adj[v].iter().map(|&(d, u)| (d, colors[u])).collect();
                    nb.sort_unstable();
                    (colors[v], nb)
                })
                .collect();
            let next = rank(&mut sigs);
            let next_count = distinct(&next);
            colors = next;
            if next_count == count {
                return colors;
            }
            count = next_count;
        }
    }

    fn descend(&self, colors: Vec<usize>, best: &mut Option<Encoding>) {
        let Some(cell) = self.target_cell(&colors) else {
            let enc = self.encode(&colors);
            if best.as_ref().is_none_or(|b| enc.cmp(b) == Ordering::Less) {
                *best = Some(enc);
            }
            return;
        };
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cell {
            if tried
                .iter()
                .any(|&u| self.transposition_is_automorphism(u, v))
            {
                continue;
            }
            tried.push(v);
            let mut sigs: Vec<(usize, u8)> =
                (0..self.k).map(|u| (colors[u], u8::from(u != v))).collect();
            let split = rank(&mut sigs);
            self.descend(self.refine(split), best);
        }
    }

    /// First smallest color cell with more than one vertex.
    fn target_cell(&self, colors: &[usize]) -> Option<Vec<usize>> {
        let mut cells: Vec<Vec<usize>> = vec![Vec::new(); self.k];
        for (v, &c) in colors.iter().enumerate() {
            cells[c].push(v);
        }
        cells
            .into_iter()
            .filter(|c| c.len() > 1)
            .min_by_key(|c| (c.len(), colors[c[0]]))
    }

    fn transposition_is_automorphism(&self, a: usize, b: usize) -> bool {
        let swap = |x: usize| {
            if x == a {
                b
            } else if x == b {
                a
            } else {
                x
            }
        };
        let mut mapped: Vec<(usize, usize, u32, bool)> = self
            .edges
            .iter()
            .map(|&(s, t, l, st)| (swap(s), swap(t), l, st))
            .collect();
        mapped.sort_unstable();
        mapped == self.sorted_edges
    }

    fn encode(&self, colors: &[usize]) -> Encoding {
        let mut edges: Vec<(u32, u32, u32, bool)> = self
            .edges
            .iter()
            .map(|&(s, t, l, st)| (colors[s] as u32, colors[t] as u32, l, st))
            .collect();
        edges.sort_unstable();
        Encoding {
            roots: self.roots.iter().map(|&r| colors[r] as u32).collect(),
            edges,
        }
    }
}

/// Replaces each signature by its rank among the distinct signatures.
fn rank<T: Ord + Clone>(sigs: &mut [T]) -> Vec<usize> {
    let mut sorted: Vec<T> = sigs.to_vec();
    sorted.sort();
    sorted.dedup();
    sigs.iter()
        .map(|s| sorted.binary_search(s).unwrap())
        .collect()
}

fn distinct(colors: &[usize]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(edges: &[(u32, u32, &str)]) -> TestGraph {
        TestGraph::from_edges(edges.iter().map(|&(s, t, l)| Edge::new(s, t, l)).collect()).unwrap()
    }

    #[test]
    fn relabeling_does_not_change_key() {
        let a = g(&[(1, 2, "x"), (2, 3, "y"), (3, 1, "x"), (3, 3, "y")]);
        let b = g(&[(7, 4, "x"), (4, 9, "y"), (9, 7, "x"), (9, 9, "y")]);
        assert_eq!(canonical_key(&a).unwrap(), canonical_key(&b).unwrap());
    }

    #[test]
    fn direction_matters() {
        let cycle = g(&[(1, 2, "x"), (2, 1, "x")]);
        let parallel = g(&[(1, 2, "x"), (1, 2, "x")]);
        assert_ne!(
            canonical_key(&cycle).unwrap(),
            canonical_key(&parallel).unwrap()
        );
    }

    #[test]
    fn roots_matter() {
        let p = g(&[(0, 1, "x")]);
        let k1 = canonical_key_rooted(&p, &[0, 1]).unwrap();
        let k2 = canonical_key_rooted(&p, &[1, 0]).unwrap();
        assert_ne!(k1, k2);
        let cycle = g(&[(0, 1, "x"), (1, 0, "x")]);
        assert_eq!(
            canonical_key_rooted(&cycle, &[0, 1]).unwrap(),
            canonical_key_rooted(&cycle, &[1, 0]).unwrap()
        );
    }

    #[test]
    fn large_star_is_fast() {
        let edges: Vec<(u32, u32, &str)> = (1..16).map(|i| (0, i, "x")).collect();
        let key = canonical_key(&g(&edges)).unwrap();
        assert_eq!(key.vertex_count, 16);
    }

    #[test]
    fn cap_is_enforced() {
        let edges: Vec<(u32, u32, &str)> = (1..17).map(|i| (0, i, "x")).collect();
        assert!(matches!(
            canonical_key(&g(&edges)),
            Err(GraphError::VertexCap { .. })
        ));
    }

    #[test]
    fn key_round_trips() {
        let a = g(&[(5, 6, "x"), (6, 7, "y"), (7, 5, "x")]);
        let key = canonical_key(&a).unwrap();
        assert_eq!(canonical_key(&key.to_test_graph()).unwrap(), key);
    }
}
