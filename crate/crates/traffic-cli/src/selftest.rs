//! Quick oracle-equivalence suites for checking an installation.

use std::collections::BTreeMap;

use num_complex::Complex64;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use traffic_ensembles::Matrix;
use traffic_graph::coeff::{ratio, real};
use traffic_graph::corpus::connected_graphs;
use traffic_graph::partition::for_each_rgs;
use traffic_graph::{Coeff, Edge, TestGraph};
use traffic_independence::double_tree_corpus;
use traffic_ltd::{
    ordering_sum_ltd, p_t, p_t_star_closed, wigner_ltd, LtdError, LtdEvaluator, WignerLtd,
};
use traffic_moments::QuotientSum;
use traffic_trace::{trace_injective, trace_test_graph, Bindings};

type C = Complex64;

const REL_TOL: f64 = 1e-9;

/// One suite outcome.
#[derive(Clone, Debug, PartialEq)]
pub struct SuiteResult {
    pub name: &'static str,
    pub cases: usize,
    pub failure: Option<String>,
}

impl std::fmt::Display for SuiteResult {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match &self.failure {
            None => write!(f, "PASS {} ({} cases)", self.name, self.cases),
            Some(why) => write!(f, "FAIL {} ({} cases): {why}", self.name, self.cases),
        }
    }
}

fn close(a: C, b: C) -> bool {
    (a - b).norm() <= REL_TOL * (1.0 + a.norm().max(b.norm()))
}

fn brute(g: &TestGraph, mats: &Bindings, injective: bool) -> C {
    let n = mats.values().next().expect("bindings are non-empty").dim();
    let k = g.vertex_count();
    let mut phi = vec![0usize; k];
    let mut total = C::new(0.0, 0.0);
    loop {
        let distinct = {
            let mut s = phi.clone();
            s.sort_unstable();
            s.windows(2).all(|w| w[0] != w[1])
        };
        if !injective || distinct {
            total += g
                .edges()
                .iter()
                .map(|e| {
                    let s = phi[g.index_of(e.src).unwrap()];
                    let t = phi[g.index_of(e.tar).unwrap()];
                    let m = &mats[&e.label];
                    if e.star {
                        m.get(s, t).conj()
                    } else {
                        m.get(t, s)
                    }
                })
                .product::<C>();
        }
        let mut i = 0;
        loop {
            if i == k {
                return total;
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

fn bindings(rng: &mut ChaCha8Rng, n: usize, labels: &[&str]) -> Bindings {
    labels
        .iter()
        .map(|l| {
            let raw = Matrix::from_fn(n, |_, _| {
                C::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
            });
            (l.to_string(), raw)
        })
        .collect()
}

fn suite(name: &'static str, run: impl FnOnce() -> Result<usize, String>) -> SuiteResult {
    match run() {
        Ok(cases) => SuiteResult {
            name,
            cases,
            failure: None,
        },
        Err(why) => SuiteResult {
            name,
            cases: 0,
            failure: Some(why),
        },
    }
}

fn trace_vs_enumeration(seed: u64) -> Result<usize, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let graphs = connected_graphs(3, 3, &["x", "y"], true);
    for g in &graphs {
        let mats = bindings(&mut rng, 4, &["x", "y"]);
        let fast = trace_test_graph(g, &mats).map_err(|e| e.to_string())?;
        if !close(fast, brute(g, &mats, false)) {
            return Err(format!("trace differs on\n{g:?}"));
        }
        let inj = trace_injective(g, &mats).map_err(|e| e.to_string())?;
        if !close(inj, brute(g, &mats, true)) {
            return Err(format!("injective trace differs on\n{g:?}"));
        }
    }
    Ok(graphs.len())
}

fn quotient_identity(seed: u64) -> Result<usize, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let graphs = connected_graphs(4, 3, &["x"], false);
    for g in &graphs {
        let mats = bindings(&mut rng, 5, &["x"]);
        let mut sum = C::new(0.0, 0.0);
        let mut err = None;
        for_each_rgs(g.vertex_count(), None, |rgs| {
            match trace_injective(&g.quotient_by_rgs(rgs), &mats) {
                Ok(v) => sum += v,
                Err(e) => err = Some(e.to_string()),
            }
        })
        .map_err(|e| e.to_string())?;
        if let Some(e) = err {
            return Err(e);
        }
        if !close(sum, brute(g, &mats, false)) {
            return Err(format!("partition sum differs on\n{g:?}"));
        }
    }
    Ok(graphs.len())
}

fn wigner_forms() -> Result<usize, String> {
    let betas: BTreeMap<String, Coeff> = [
        ("x".to_string(), real(ratio(1, 1))),
        ("y".to_string(), real(ratio(0, 1))),
    ]
    .into();
    let corpus = double_tree_corpus(5, &["x", "y"]);
    for t in &corpus {
        let a = wigner_ltd(t, &betas).map_err(|e| e.to_string())?;
        let b = ordering_sum_ltd(t, &betas).map_err(|e| e.to_string())?;
        if a != b {
            return Err(format!("closed form {a} and ordering sum {b} differ"));
        }
    }
    Ok(corpus.len())
}

struct Exhaustive<'a>(&'a dyn LtdEvaluator);

impl LtdEvaluator for Exhaustive<'_> {
    fn ltd(&self, t: &TestGraph) -> Result<Coeff, LtdError> {
        self.0.ltd(t)
    }

    fn supported_on_double_trees(&self) -> bool {
        false
    }
}

fn quotient_shortcut() -> Result<usize, String> {
    let ltd = WignerLtd {
        betas: [("x".to_string(), real(ratio(1, 1)))].into(),
    };
    let full = Exhaustive(&ltd);
    let graphs = connected_graphs(4, 4, &["x"], false);
    for g in &graphs {
        let a = QuotientSum::new(&ltd)
            .sum(g, &[])
            .map_err(|e| e.to_string())?;
        let b = QuotientSum::new(&full)
            .sum(g, &[])
            .map_err(|e| e.to_string())?;
        if a != b {
            return Err(format!("pairing sum {a} and full sum {b} differ"));
        }
    }
    Ok(graphs.len())
}

fn star_closed_form() -> Result<usize, String> {
    let star = TestGraph::from_edges(vec![
        Edge::new(0, 1, "x"),
        Edge::new(1, 0, "x"),
        Edge::new(0, 2, "x"),
        Edge::new(2, 0, "x"),
    ])
    .map_err(|e| e.to_string())?;
    let grid = [ratio(1, 4), ratio(1, 2), ratio(3, 4), ratio(1, 1)];
    for c in &grid {
        let props: BTreeMap<String, BigRational> = [("x".to_string(), c.clone())].into();
        let a = p_t(&star, &props).map_err(|e| e.to_string())?;
        let b = p_t_star_closed(c).map_err(|e| e.to_string())?;
        if a != b {
            return Err(format!("at c = {c}: integral {a}, closed form {b}"));
        }
    }
    Ok(grid.len())
}

/// Runs every suite with matrices drawn from `seed`.
pub fn run(seed: u64) -> Vec<SuiteResult> {
    vec![
        suite("contraction against enumeration", || {
            trace_vs_enumeration(seed)
        }),
        suite("trace as a sum of injective traces", || {
            quotient_identity(seed ^ 0x5eed)
        }),
        suite("wigner closed form against ordering sum", wigner_forms),
        suite("pairing quotients against all quotients", quotient_shortcut),
        suite("star cut integral against closed form", star_closed_form),
    ]
}
