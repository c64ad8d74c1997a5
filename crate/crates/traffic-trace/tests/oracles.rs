use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use traffic_ensembles::{BandProfile, Ensemble, EntrySpec, Matrix, MatrixModel};
use traffic_graph::corpus::connected_graphs;
use traffic_graph::partition::enumerate_partitions;
use traffic_graph::{Edge, GraphMonomial, TestGraph};
use traffic_trace::{
    central_moment_estimate, estimate_traffic_state, eval_graph_matrix, trace_injective,
    trace_test_graph, Bindings, TraceSession,
};

type C = Complex64;

const REL_TOL: f64 = 1e-9;

fn close(a: C, b: C) -> bool {
    (a - b).norm() <= REL_TOL * (1.0 + a.norm().max(b.norm()))
}

fn random_matrix(rng: &mut ChaCha8Rng, n: usize, hermitian: bool) -> Matrix {
    let raw = Matrix::from_fn(n, |_, _| {
        C::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
    });
    if hermitian {
        raw.lin_comb(0.5, &raw.adjoint(), 0.5).unwrap()
    } else {
        raw
    }
}

fn factor(m: &Matrix, e: &Edge, phi: &[usize], g: &TestGraph) -> C {
    let s = phi[g.index_of(e.src).unwrap()];
    let t = phi[g.index_of(e.tar).unwrap()];
    if e.star {
        m.get(s, t).conj()
    } else {
        m.get(t, s)
    }
}

/// Visits every map from the vertex positions of `g` to `[n]`.
fn for_each_labeling(k: usize, n: usize, mut visit: impl FnMut(&[usize])) {
    let mut phi = vec![0usize; k];
    loop {
        visit(&phi);
        let mut i = 0;
        loop {
            if i == k {
                return;
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

fn brute_trace(g: &TestGraph, mats: &Bindings, injective: bool) -> C {
    let n = mats.values().next().unwrap().dim();
    let mut total = C::new(0.0, 0.0);
    for_each_labeling(g.vertex_count(), n, |phi| {
        if injective {
            let mut seen = phi.to_vec();
            seen.sort_unstable();
            if seen.windows(2).any(|w| w[0] == w[1]) {
                return;
            }
        }
        total += g
            .edges()
            .iter()
            .map(|e| factor(&mats[&e.label], e, phi, g))
            .product::<C>();
    });
    total
}

fn brute_eval(t: &GraphMonomial, mats: &Bindings) -> Matrix {
    let g = t.graph();
    let n = mats.values().next().unwrap().dim();
    let mut acc = vec![C::new(0.0, 0.0); n * n];
    let (o, i) = (
        g.index_of(t.output()).unwrap(),
        g.index_of(t.input()).unwrap(),
    );
    for_each_labeling(g.vertex_count(), n, |phi| {
        acc[phi[o] * n + phi[i]] += g
            .edges()
            .iter()
            .map(|e| factor(&mats[&e.label], e, phi, g))
            .product::<C>();
    });
    Matrix::from_fn(n, |r, c| acc[r * n + c])
}

fn matrices_close(a: &Matrix, b: &Matrix) -> bool {
    let n = a.dim();
    (0..n).all(|i| (0..n).all(|j| close(a.get(i, j), b.get(i, j))))
}

fn bindings(rng: &mut ChaCha8Rng, n: usize, labels: &[&str], hermitian: bool) -> Bindings {
    labels
        .iter()
        .map(|l| (l.to_string(), random_matrix(rng, n, hermitian)))
        .collect()
}

#[test]
fn contraction_matches_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    let corpora = [
        (connected_graphs(4, 4, &["x"], true), 5),
        (connected_graphs(4, 4, &["x", "y"], false), 4),
    ];
    for (graphs, n) in corpora {
        let mats = bindings(&mut rng, n, &["x", "y"], false);
        for g in &graphs {
            assert!(
                close(
                    trace_test_graph(g, &mats).unwrap(),
                    brute_trace(g, &mats, false)
                ),
                "{g:?}"
            );
            let k = g.vertex_count() as u32;
            let t = GraphMonomial::new(g.clone(), rng.random_range(0..k), rng.random_range(0..k))
                .unwrap();
            assert!(
                matrices_close(
                    &eval_graph_matrix(&t, &mats).unwrap(),
                    &brute_eval(&t, &mats)
                ),
                "{t:?}"
            );
        }
    }
}

#[test]
fn injective_trace_identities() {
    let mut rng = ChaCha8Rng::seed_from_u64(32);
    let graphs = connected_graphs(4, 4, &["x"], false);
    for _ in 0..3 {
        let mats = bindings(&mut rng, 6, &["x"], true);
        let mut session = TraceSession::new(&mats);
        for g in &graphs {
            let inj = session.trace_injective(g).unwrap();
            assert!(close(inj, brute_trace(g, &mats, true)), "{g:?}");
            let mut resum = C::new(0.0, 0.0);
            for pi in enumerate_partitions(g.vertices()).unwrap() {
                resum += session.trace_injective(&g.quotient(&pi).unwrap()).unwrap();
            }
            assert!(close(resum, session.trace(g).unwrap()));
        }
    }
}

#[test]
fn special_monomials() {
    let mut rng = ChaCha8Rng::seed_from_u64(33);
    let n = 7;
    let mats = bindings(&mut rng, n, &["x", "y"], false);
    let (a, b) = (&mats["x"], &mats["y"]);
    let word = eval_graph_matrix(&GraphMonomial::eta(&["x", "y", "x"]), &mats).unwrap();
    assert!(matrices_close(
        &word,
        &a.matmul(b).unwrap().matmul(a).unwrap()
    ));
    let had = GraphMonomial::edge("x").hadamard(&GraphMonomial::edge("y"));
    assert!(matrices_close(
        &eval_graph_matrix(&had, &mats).unwrap(),
        &a.hadamard(b).unwrap()
    ));
    let row = eval_graph_matrix(&GraphMonomial::row_op("x"), &mats).unwrap();
    assert!(matrices_close(&row, &Matrix::diagonal(&a.row_sums())));
    let col = eval_graph_matrix(&GraphMonomial::col_op("x"), &mats).unwrap();
    assert!(matrices_close(
        &col,
        &Matrix::diagonal(&a.transpose().row_sums())
    ));
    let tr = eval_graph_matrix(&GraphMonomial::edge("x").transpose(), &mats).unwrap();
    assert!(matrices_close(&tr, &a.transpose()));
}

#[test]
fn trace_of_monomial_is_trace_of_delta() {
    let mut rng = ChaCha8Rng::seed_from_u64(34);
    let mats = bindings(&mut rng, 5, &["x", "y"], false);
    for g in connected_graphs(3, 3, &["x", "y"], true) {
        let k = g.vertex_count() as u32;
        let t = GraphMonomial::new(g, rng.random_range(0..k), rng.random_range(0..k)).unwrap();
        let lhs = eval_graph_matrix(&t, &mats).unwrap().trace();
        assert!(close(lhs, trace_test_graph(&t.delta(), &mats).unwrap()));
    }
}

#[test]
fn conjugation_by_permutation_is_invisible() {
    let mut rng = ChaCha8Rng::seed_from_u64(35);
    let n = 6;
    let mats = bindings(&mut rng, n, &["x", "y"], true);
    let mut perm: Vec<usize> = (0..n).collect();
    perm.reverse();
    perm.swap(0, 2);
    let moved: Bindings = mats
        .iter()
        .map(|(l, m)| (l.clone(), m.permute(&perm)))
        .collect();
    for g in connected_graphs(4, 3, &["x", "y"], false) {
        assert!(close(
            trace_test_graph(&g, &mats).unwrap(),
            trace_test_graph(&g, &moved).unwrap()
        ));
        assert!(close(
            trace_injective(&g, &mats).unwrap(),
            trace_injective(&g, &moved).unwrap()
        ));
    }
}

#[test]
fn estimates_do_not_depend_on_thread_count() {
    let ens = Ensemble::new().with(
        "x",
        MatrixModel::Band {
            profile: BandProfile::Wigner,
            entries: EntrySpec::real_gaussian(),
        },
    );
    let cycle = GraphMonomial::eta(&["x", "x"]).delta();
    let run = |threads| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(|| estimate_traffic_state(&cycle, &ens, 30, 40, 9, true).unwrap())
    };
    assert_eq!(run(1), run(3));
}

#[test]
fn constant_statistic_has_zero_central_moment() {
    let ens = Ensemble::new().with(
        "x",
        MatrixModel::Band {
            profile: BandProfile::Wigner,
            entries: EntrySpec::real_gaussian(),
        },
    );
    let e = central_moment_estimate(&TestGraph::single_vertex(), &ens, 10, 20, 2, 1).unwrap();
    assert_eq!(e.mean, C::new(0.0, 0.0));
    assert!(central_moment_estimate(&TestGraph::single_vertex(), &ens, 10, 20, 3, 1).is_err());
}
