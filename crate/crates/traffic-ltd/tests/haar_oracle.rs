//! Orthogonal cactus recognition against simple-cycle counting.

use num_traits::Zero;
use traffic_graph::corpus::connected_graphs;
use traffic_graph::partition::for_each_rgs;
use traffic_graph::{Edge, TestGraph};
use traffic_ltd::{classify_orthogonal_cactus, haar_ltd};

/// Simple cycles through each edge, counted as simple paths between its
/// endpoints that avoid it. Loops lie on exactly one cycle.
fn cycles_through(t: &TestGraph, id: usize) -> usize {
    let e = &t.edges()[id];
    if e.is_loop() {
        return 1;
    }
    fn walk(
        t: &TestGraph,
        at: u32,
        goal: u32,
        skip: usize,
        used: &mut Vec<bool>,
        seen: &mut Vec<u32>,
    ) -> usize {
        if at == goal {
            return 1;
        }
        let mut total = 0;
        for (j, f) in t.edges().iter().enumerate() {
            if j == skip || used[j] || f.is_loop() {
                continue;
            }
            let next = if f.src == at {
                f.tar
            } else if f.tar == at {
                f.src
            } else {
                continue;
            };
            if seen.contains(&next) {
                continue;
            }
            used[j] = true;
            seen.push(next);
            total += walk(t, next, goal, skip, used, seen);
            seen.pop();
            used[j] = false;
        }
        total
    }
    walk(
        t,
        e.src,
        e.tar,
        id,
        &mut vec![false; t.edge_count()],
        &mut vec![e.src],
    )
}

#[test]
fn cactus_test_matches_cycle_counts() {
    for t in connected_graphs(5, 6, &["o"], false) {
        let oracle = (0..t.edge_count()).all(|i| cycles_through(&t, i) == 1);
        assert_eq!(classify_orthogonal_cactus(&t).is_cactus, oracle, "{t:?}");
    }
}

#[test]
fn transpose_invariance() {
    for t in connected_graphs(4, 6, &["o"], false) {
        let reversed = TestGraph::new(
            t.vertices().to_vec(),
            t.edges()
                .iter()
                .map(|e| Edge::new(e.tar, e.src, "o"))
                .collect(),
        )
        .unwrap();
        assert_eq!(haar_ltd(&t).unwrap(), haar_ltd(&reversed).unwrap());
    }
}

#[test]
fn six_cycle_and_multiple_labels() {
    let six = TestGraph::from_edges(
        [(0, 1), (2, 1), (2, 3), (4, 3), (4, 5), (0, 5)]
            .iter()
            .map(|&(s, t)| Edge::new(s, t, "o"))
            .collect(),
    )
    .unwrap();
    assert_eq!(haar_ltd(&six).unwrap(), traffic_graph::coeff::rat(2));
    let two = TestGraph::from_edges(vec![Edge::new(0, 1, "o"), Edge::new(0, 1, "p")]).unwrap();
    assert!(haar_ltd(&two).is_err());
}

/// A Haar orthogonal matrix is asymptotically a Haar unitary, so the trace
/// of a word in `O` and `Oᵀ` tends to 1 when the exponents cancel and to 0
/// otherwise. Summing the limit over all quotients of the word's cycle
/// must reproduce that.
#[test]
fn words_in_o_and_its_transpose() {
    for m in 1..=7usize {
        for mask in 0..1u32 << m {
            let edges = (0..m as u32)
                .map(|i| {
                    let next = (i + 1) % m as u32;
                    if mask >> i & 1 == 1 {
                        Edge::starred(i, next, "o")
                    } else {
                        Edge::new(i, next, "o")
                    }
                })
                .collect();
            let t = TestGraph::from_edges(edges).unwrap();
            let mut total = num_rational::BigRational::zero();
            for_each_rgs(m, None, |rgs| {
                total += haar_ltd(&t.quotient_by_rgs(rgs)).unwrap()
            })
            .unwrap();
            let want = i64::from(2 * mask.count_ones() == m as u32);
            assert_eq!(
                total,
                traffic_graph::coeff::rat(want),
                "m={m} mask={mask:b}"
            );
        }
    }
}
