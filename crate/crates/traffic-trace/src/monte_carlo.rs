//! Seeded Monte Carlo estimates of traffic states.

use num_complex::Complex64;
use rayon::prelude::*;
use traffic_ensembles::Ensemble;
use traffic_graph::TestGraph;

use crate::error::TraceError;
use crate::injective::TraceSession;

/// Sample mean with its standard error.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Estimate {
    pub mean: Complex64,
    /// Sample standard deviation over `√samples`, with real and imaginary
    /// variances added.
    pub stderr: f64,
    pub samples: usize,
    pub n: usize,
}

impl Estimate {
    pub fn from_values(values: &[Complex64], n: usize) -> Estimate {
        let count = values.len();
        let mean = pairwise_sum(values) / count as f64;
        let dev: Vec<Complex64> = values
            .iter()
            .map(|z| Complex64::new((z - mean).norm_sqr(), 0.0))
            .collect();
        let var = if count > 1 {
            pairwise_sum(&dev).re / (count - 1) as f64
        } else {
            0.0
        };
        Estimate {
            mean,
            stderr: (var / count as f64).sqrt(),
            samples: count,
            n,
        }
    }

    /// `|mean − target| / stderr`; zero when both vanish.
    pub fn z_score(&self, target: Complex64) -> f64 {
        let gap = (self.mean - target).norm();
        if gap == 0.0 {
            0.0
        } else {
            gap / self.stderr
        }
    }

    pub fn within(&self, target: Complex64, k: f64) -> bool {
        self.z_score(target) <= k
    }
}

/// Sum in a fixed binary-tree order.
pub fn pairwise_sum(xs: &[Complex64]) -> Complex64 {
    match xs.len() {
        0 => Complex64::new(0.0, 0.0),
        1 => xs[0],
        len => {
            let (a, b) = xs.split_at(len / 2);
            pairwise_sum(a) + pairwise_sum(b)
        }
    }
}

/// Evaluates `f` for every sample index in parallel and returns the results
/// in index order.
pub fn per_sample<T, F>(samples: usize, f: F) -> Result<Vec<T>, TraceError>
where
    T: Send,
    F: Fn(u64) -> Result<T, TraceError> + Sync + Send,
{
    (0..samples as u64).into_par_iter().map(f).collect()
}

/// Estimates of `E (1/n) tr[T]` (or `tr⁰` when `injective`) for several
/// graphs on the same samples.
pub fn estimate_many(
    graphs: &[TestGraph],
    ensemble: &Ensemble,
    n: usize,
    samples: usize,
    seed: u64,
    injective: bool,
) -> Result<Vec<Estimate>, TraceError> {
    let rows = per_sample(samples, |i| {
        let mats = ensemble.sample(n, seed, i)?;
        let mut session = TraceSession::new(&mats);
        graphs
            .iter()
            .map(|g| {
                let t = if injective {
                    session.trace_injective(g)?
                } else {
                    session.trace(g)?
                };
                Ok(t / n as f64)
            })
            .collect::<Result<Vec<_>, TraceError>>()
    })?;
    Ok((0..graphs.len())
        .map(|k| Estimate::from_values(&rows.iter().map(|r| r[k]).collect::<Vec<_>>(), n))
        .collect())
}

/// Estimate of `E (1/n) tr[T]`, or of `E (1/n) tr⁰[T]` when `injective`.
pub fn estimate_traffic_state(
    g: &TestGraph,
    ensemble: &Ensemble,
    n: usize,
    samples: usize,
    seed: u64,
    injective: bool,
) -> Result<Estimate, TraceError> {
    Ok(estimate_many(
        std::slice::from_ref(g),
        ensemble,
        n,
        samples,
        seed,
        injective,
    )?[0])
}

/// Estimate of `E |(1/n) tr[T] − E (1/n) tr[T]|^order`, with the inner
/// expectation replaced by the sample mean.
pub fn central_moment_estimate(
    g: &TestGraph,
    ensemble: &Ensemble,
    n: usize,
    samples: usize,
    order: u32,
    seed: u64,
) -> Result<Estimate, TraceError> {
    if order == 0 || order % 2 == 1 {
        return Err(TraceError::OddOrder(order));
    }
    let values = per_sample(samples, |i| {
        let mats = ensemble.sample(n, seed, i)?;
        Ok(TraceSession::new(&mats).trace(g)? / n as f64)
    })?;
    let mean = pairwise_sum(&values) / samples as f64;
    let powers: Vec<Complex64> = values
        .iter()
        .map(|z| Complex64::new((z - mean).norm().powi(order as i32), 0.0))
        .collect();
    Ok(Estimate::from_values(&powers, n))
}

/// Least-squares slope of `ln y` against `ln x`.
pub fn log_log_slope(points: &[(f64, f64)]) -> f64 {
    let pts: Vec<(f64, f64)> = points.iter().map(|&(x, y)| (x.ln(), y.ln())).collect();
    let k = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / k;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / k;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    sxy / sxx
}
