//! Haar orthogonal matrices: the limit is supported on orthogonal cacti.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use traffic_graph::TestGraph;

use crate::error::LtdError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CactusReport {
    /// Every edge lies on exactly one simple cycle.
    pub is_cactus: bool,
    /// Every cycle alternates in direction.
    pub anti_directed: bool,
    /// Cycle lengths, when `is_cactus`.
    pub cycles: Vec<usize>,
}

impl CactusReport {
    pub fn is_orthogonal_cactus(&self) -> bool {
        self.is_cactus && self.anti_directed
    }
}

/// `(src, tar)` positions with adjoint marks resolved by reversing the edge.
fn oriented(t: &TestGraph) -> Vec<(usize, usize)> {
    t.edges()
        .iter()
        .map(|e| {
            let (s, d) = (t.index_of(e.src).unwrap(), t.index_of(e.tar).unwrap());
            if e.star {
                (d, s)
            } else {
                (s, d)
            }
        })
        .collect()
}

/// Biconnected blocks as lists of edge indices. Loops are blocks of their own.
fn blocks(k: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); k];
    let mut out = Vec::new();
    for (id, &(s, d)) in edges.iter().enumerate() {
        if s == d {
            out.push(vec![id]);
        } else {
            adj[s].push((id, d));
            adj[d].push((id, s));
        }
    }
    struct State<'a> {
        adj: &'a [Vec<(usize, usize)>],
        disc: Vec<usize>,
        low: Vec<usize>,
        clock: usize,
        stack: Vec<usize>,
        out: Vec<Vec<usize>>,
    }
    fn visit(st: &mut State, u: usize, via: Option<usize>) {
        st.clock += 1;
        st.disc[u] = st.clock;
        st.low[u] = st.clock;
        for &(id, w) in &st.adj[u] {
            if Some(id) == via {
                continue;
            }
            if st.disc[w] == 0 {
                st.stack.push(id);
                visit(st, w, Some(id));
                st.low[u] = st.low[u].min(st.low[w]);
                if st.low[w] >= st.disc[u] {
                    let mut block = Vec::new();
                    while let Some(top) = st.stack.pop() {
                        block.push(top);
                        if top == id {
                            break;
                        }
                    }
                    st.out.push(block);
                }
            } else if st.disc[w] < st.disc[u] {
                st.stack.push(id);
                st.low[u] = st.low[u].min(st.disc[w]);
            }
        }
    }
    let mut st = State {
        adj: &adj,
        disc: vec![0; k],
        low: vec![0; k],
        clock: 0,
        stack: Vec::new(),
        out,
    };
    visit(&mut st, 0, None);
    st.out
}

/// Tests whether `t` is an orthogonal cactus. Adjoint marks are read as
/// reversed edges since `Oᵀ = O*` for real matrices.
pub fn classify_orthogonal_cactus(t: &TestGraph) -> CactusReport {
    let edges = oriented(t);
    let mut cycles = Vec::new();
    let mut anti_directed = true;
    for block in blocks(t.vertex_count(), &edges) {
        // Per vertex of the block: (incident block edges, of which incoming).
        let mut seen: Vec<(usize, usize, usize)> = Vec::new();
        for &id in &block {
            let (s, d) = edges[id];
            for (v, incoming) in [(s, 0), (d, 1)] {
                match seen.iter_mut().find(|x| x.0 == v) {
                    Some(x) => {
                        x.1 += 1;
                        x.2 += incoming;
                    }
                    None => seen.push((v, 1, incoming)),
                }
            }
        }
        let is_loop = block.len() == 1 && edges[block[0]].0 == edges[block[0]].1;
        let is_cycle = is_loop || (seen.len() == block.len() && seen.iter().all(|x| x.1 == 2));
        if !is_cycle {
            return CactusReport {
                is_cactus: false,
                anti_directed: false,
                cycles: Vec::new(),
            };
        }
        if is_loop || seen.iter().any(|x| x.2 == 1) {
            anti_directed = false;
        }
        cycles.push(block.len());
    }
    cycles.sort_unstable();
    CactusReport {
        is_cactus: true,
        anti_directed,
        cycles,
    }
}

fn catalan(k: usize) -> BigInt {
    let mut c = BigInt::one();
    for i in 0..k {
        c = c * BigInt::from(2 * (2 * i + 1)) / BigInt::from(i + 2);
    }
    c
}

/// `∏_cycles (−1)^{ℓ/2 − 1} Cat_{ℓ/2 − 1}` over the cycles of lengths `ℓ`
/// on orthogonal cacti, and `0` on every other single-label test graph.
/// Each factor is the Möbius value of the noncrossing partition lattice.
pub fn haar_ltd(t: &TestGraph) -> Result<BigRational, LtdError> {
    let labels = t.labels().len();
    if labels > 1 {
        return Err(LtdError::MultipleLabels(labels));
    }
    let report = classify_orthogonal_cactus(t);
    if !report.is_orthogonal_cactus() {
        return Ok(BigRational::zero());
    }
    let mut value = BigInt::one();
    for len in report.cycles {
        let half = len / 2;
        value *= catalan(half - 1);
        if half % 2 == 0 {
            value = -value;
        }
    }
    Ok(BigRational::from_integer(value))
}

#[cfg(test)]
mod tests {
    use super::*;
    use traffic_graph::Edge;

    fn graph(edges: &[(u32, u32)]) -> TestGraph {
        TestGraph::from_edges(edges.iter().map(|&(s, t)| Edge::new(s, t, "o")).collect()).unwrap()
    }

    fn int(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn catalan_numbers() {
        let c: Vec<BigInt> = (0..6).map(catalan).collect();
        assert_eq!(c, [1, 1, 2, 5, 14, 42].map(BigInt::from));
    }

    #[test]
    fn reference_values() {
        assert_eq!(haar_ltd(&graph(&[(0, 1), (0, 1)])).unwrap(), int(1));
        assert_eq!(
            haar_ltd(&graph(&[(0, 1), (2, 1), (2, 3), (0, 3)])).unwrap(),
            int(-1)
        );
        assert_eq!(haar_ltd(&graph(&[(0, 1), (1, 0)])).unwrap(), int(0));
        let both = graph(&[(0, 1), (0, 1), (0, 2), (3, 2), (3, 4), (0, 4)]);
        assert_eq!(haar_ltd(&both).unwrap(), int(-1));
        assert_eq!(haar_ltd(&TestGraph::single_vertex()).unwrap(), int(1));
        assert_eq!(haar_ltd(&graph(&[(0, 0)])).unwrap(), int(0));
    }

    #[test]
    fn star_reverses() {
        let g =
            TestGraph::from_edges(vec![Edge::new(0, 1, "o"), Edge::starred(1, 0, "o")]).unwrap();
        assert_eq!(haar_ltd(&g).unwrap(), int(1));
    }

    #[test]
    fn bridge_is_not_a_cactus() {
        let r = classify_orthogonal_cactus(&graph(&[(0, 1), (0, 1), (1, 2)]));
        assert!(!r.is_cactus);
    }
}
