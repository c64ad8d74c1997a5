mod common;

use common::{random_graph, relabel};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use traffic_graph::{canonical_key, canonical_key_rooted, Edge, TestGraph, VertexId};

fn edge_multiset(g: &TestGraph, map: &[VertexId]) -> Vec<(VertexId, VertexId, String, bool)> {
    let mut v: Vec<_> = g
        .edges()
        .iter()
        .map(|e| {
            (
                map[e.src as usize],
                map[e.tar as usize],
                e.label.clone(),
                e.star,
            )
        })
        .collect();
    v.sort();
    v
}

fn next_permutation(p: &mut [VertexId]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Tries every bijection between the vertex sets (both `0..k`).
fn brute_isomorphic(a: &TestGraph, ra: &[VertexId], b: &TestGraph, rb: &[VertexId]) -> bool {
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return false;
    }
    let target = edge_multiset(b, &(0..b.vertex_count() as VertexId).collect::<Vec<_>>());
    let mut perm: Vec<VertexId> = (0..a.vertex_count() as VertexId).collect();
    loop {
        let roots_ok = ra.iter().zip(rb).all(|(&x, &y)| perm[x as usize] == y);
        if roots_ok && edge_multiset(a, &perm) == target {
            return true;
        }
        if !next_permutation(&mut perm) {
            return false;
        }
    }
}

fn perturb(rng: &mut ChaCha8Rng, g: &TestGraph) -> TestGraph {
    let mut edges = g.edges().to_vec();
    let i = rand::Rng::random_range(rng, 0..edges.len());
    let e = &mut edges[i];
    match rand::Rng::random_range(rng, 0..3) {
        0 => {
            *e = Edge {
                src: e.tar,
                tar: e.src,
                label: e.label.clone(),
                star: e.star,
            }
        }
        1 => {
            e.label = if e.label == "x" {
                "y".into()
            } else {
                "x".into()
            }
        }
        _ => e.star = !e.star,
    }
    TestGraph::new(g.vertices().iter().copied(), edges).unwrap()
}

#[test]
fn keys_agree_with_brute_force_isomorphism() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for trial in 0..400 {
        let k = 1 + trial % 7;
        let extra = trial % 4;
        let a = random_graph(&mut rng, k, extra, &["x", "y"]);
        let mut perm: Vec<VertexId> = (0..k as VertexId).collect();
        perm.shuffle(&mut rng);
        let b = if trial % 2 == 0 {
            relabel(&mut rng, &a, &perm, 0)
        } else {
            perturb(&mut rng, &a)
        };
        let same_key = canonical_key(&a).unwrap() == canonical_key(&b).unwrap();
        assert_eq!(
            same_key,
            brute_isomorphic(&a, &[], &b, &[]),
            "trial {trial}"
        );
    }
}

#[test]
fn rooted_keys_agree_with_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for trial in 0..300 {
        let k = 1 + trial % 6;
        let a = random_graph(&mut rng, k, 1 + trial % 3, &["x"]);
        let r1 = rand::Rng::random_range(&mut rng, 0..k as VertexId);
        let r2 = rand::Rng::random_range(&mut rng, 0..k as VertexId);
        let s1 = rand::Rng::random_range(&mut rng, 0..k as VertexId);
        let s2 = rand::Rng::random_range(&mut rng, 0..k as VertexId);
        let same_key = canonical_key_rooted(&a, &[r1, r2]).unwrap()
            == canonical_key_rooted(&a, &[s1, s2]).unwrap();
        assert_eq!(
            same_key,
            brute_isomorphic(&a, &[r1, r2], &a, &[s1, s2]),
            "trial {trial}"
        );
    }
}

#[test]
fn highly_symmetric_graphs() {
    // Two directed 3-cycles glued at a vertex versus a directed 6-cycle with a chord.
    let bowtie = TestGraph::from_edges(
        [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]
            .iter()
            .map(|&(s, t)| Edge::new(s, t, "x"))
            .collect(),
    )
    .unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let mut perm: Vec<VertexId> = (0..5).collect();
    for _ in 0..20 {
        perm.shuffle(&mut rng);
        let b = relabel(&mut rng, &bowtie, &perm, 100);
        assert_eq!(canonical_key(&bowtie).unwrap(), canonical_key(&b).unwrap());
    }
    let cube_like = TestGraph::from_edges(
        (0..8u32)
            .flat_map(|v| (0..3).map(move |bit| (v, v ^ (1 << bit))))
            .filter(|(a, b)| a < b)
            .map(|(a, b)| Edge::new(a, b, "x"))
            .collect(),
    )
    .unwrap();
    perm = (0..8).collect();
    for _ in 0..5 {
        perm.shuffle(&mut rng);
        let b = relabel(&mut rng, &cube_like, &perm, 0);
        assert_eq!(
            canonical_key(&cube_like).unwrap(),
            canonical_key(&b).unwrap()
        );
    }
}
