//! Band-constrained labeling counts against direct enumeration.

mod common;

use std::collections::BTreeMap;

use common::{pad_path, pad_star, permutations};
use traffic_graph::{Edge, TestGraph};
use traffic_ltd::{count_bound, fixed_band_count, fixed_band_ltd, EntryMoments};

fn widths(pairs: &[(&str, usize)]) -> BTreeMap<String, usize> {
    pairs.iter().map(|(l, b)| (l.to_string(), *b)).collect()
}

/// All maps `V → [n]`, keeping the injective ones inside every band.
fn direct(t: &TestGraph, w: &BTreeMap<String, usize>, n: usize, psi: Option<&[u32]>) -> u64 {
    let k = t.vertex_count();
    let mut phi = vec![0usize; k];
    let mut count = 0;
    loop {
        let injective = (0..k).all(|i| (0..i).all(|j| phi[i] != phi[j]));
        let banded = t.edges().iter().all(|e| {
            let (a, b) = (t.index_of(e.src).unwrap(), t.index_of(e.tar).unwrap());
            phi[a].abs_diff(phi[b]) <= w[&e.label]
        });
        let ordered = psi.is_none_or(|p| {
            p.windows(2)
                .all(|x| phi[t.index_of(x[0]).unwrap()] < phi[t.index_of(x[1]).unwrap()])
        });
        if injective && banded && ordered {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == k {
                return count;
            }
            phi[i] += 1;
            if phi[i] < n {
                break;
            }
            phi[i] = 0;
            i += 1;
        }
    }
}

fn graphs() -> Vec<TestGraph> {
    vec![
        pad_path(&["x"]),
        pad_path(&["x", "y"]),
        pad_star(&["x", "y", "x"]),
        TestGraph::from_edges(vec![
            Edge::new(0, 1, "x"),
            Edge::new(1, 2, "y"),
            Edge::new(2, 0, "x"),
        ])
        .unwrap(),
        TestGraph::from_edges(vec![
            Edge::new(0, 1, "x"),
            Edge::new(0, 1, "x"),
            Edge::new(1, 1, "y"),
            Edge::new(1, 2, "y"),
        ])
        .unwrap(),
    ]
}

#[test]
fn counts_match_direct_enumeration() {
    let w = widths(&[("x", 1), ("y", 2)]);
    for t in graphs() {
        for n in 1..=7 {
            assert_eq!(
                fixed_band_count(&t, &w, n, None).unwrap(),
                direct(&t, &w, n, None),
                "{t:?} n={n}"
            );
        }
    }
}

#[test]
fn orderings_partition_the_count() {
    let w = widths(&[("x", 2), ("y", 1)]);
    for t in graphs() {
        let n = 8;
        let vs = t.vertices().to_vec();
        let mut sum = 0;
        for perm in permutations(vs.len()) {
            let psi: Vec<u32> = perm.iter().map(|&i| vs[i]).collect();
            let a = fixed_band_count(&t, &w, n, Some(&psi)).unwrap();
            assert_eq!(a, direct(&t, &w, n, Some(&psi)));
            sum += a;
        }
        assert_eq!(sum, fixed_band_count(&t, &w, n, None).unwrap());
    }
}

#[test]
fn superadditive() {
    let w = widths(&[("x", 1), ("y", 2)]);
    for t in graphs() {
        let a: Vec<u64> = (0..=24)
            .map(|n| fixed_band_count(&t, &w, n, None).unwrap())
            .collect();
        for n in 1..=12 {
            for m in 1..=12 {
                assert!(
                    a[n + m] >= a[n] + a[m],
                    "{t:?}: a_{} < a_{n} + a_{m}",
                    n + m
                );
            }
        }
    }
}

#[test]
fn wide_star_has_no_labelings() {
    for b in 1..=2 {
        let k = 2 * b + 1;
        let star = pad_star(&vec!["x"; k]);
        for n in [1, 5, 10, 40] {
            assert_eq!(
                fixed_band_count(&star, &widths(&[("x", b)]), n, None).unwrap(),
                0
            );
        }
    }
}

#[test]
fn estimates_respect_the_bound() {
    let w = widths(&[("x", 1), ("y", 2)]);
    let laws = BTreeMap::from([
        ("x".to_string(), EntryMoments::gaussian(8)),
        ("y".to_string(), EntryMoments::gaussian(8)),
    ]);
    for t in graphs() {
        let est = fixed_band_ltd(&t, &w, &laws, &[50, 100, 200, 400]).unwrap();
        assert!(est.monotone);
        assert!(est.ltd.abs() <= est.bound + 1e-12);
        assert!(est.p_lower <= count_bound(&t, &w).unwrap());
    }
    // 2k congruent edges between two vertices: 2b·(2k − 1)!!/(2b + 1)^k.
    let two = TestGraph::from_edges(vec![Edge::new(0, 1, "x"); 4]).unwrap();
    let est = fixed_band_ltd(&two, &widths(&[("x", 1)]), &laws, &[10_000]).unwrap();
    assert!((est.ltd - 2.0 * 3.0 / 9.0).abs() < 1e-3);
}
