//! Mixed moments: free predictions, traffic predictions and Monte Carlo.

use std::collections::BTreeMap;

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;
use traffic_ensembles::Ensemble;
use traffic_graph::{Coeff, GraphMonomial, TrafficPolynomial};
use traffic_ltd::LtdEvaluator;
use traffic_moments::{
    free_cumulants, moment_sequence, noncrossing_partitions, MomentError, QuotientSum,
};
use traffic_trace::{per_sample, Estimate, TraceError};

use crate::error::IndependenceError;

type Q = BigRational;

/// Moments `0..=max` of the single matrix labeled `label` under `ltd`.
pub fn label_moments(
    label: &str,
    ltd: &dyn LtdEvaluator,
    max: usize,
) -> Result<Vec<Q>, IndependenceError> {
    let a = TrafficPolynomial::from_monomial(&GraphMonomial::edge(label))?;
    moment_sequence(&a, max, ltd)?
        .into_iter()
        .map(|c| {
            if c.im.is_zero() {
                Ok(c.re)
            } else {
                Err(MomentError::NotReal.into())
            }
        })
        .collect()
}

/// `φ(x_{w_1} ⋯ x_{w_k})` when the labels are free with the given
/// moments: the sum over noncrossing partitions with one label per block
/// of the products of free cumulants.
pub fn free_prediction(
    word: &[&str],
    moments: &BTreeMap<String, Vec<Q>>,
) -> Result<Q, IndependenceError> {
    if word.is_empty() {
        return Err(IndependenceError::EmptyWord);
    }
    let k = word.len();
    let mut cumulants = BTreeMap::new();
    for &label in word {
        let m = moments
            .get(label)
            .ok_or_else(|| IndependenceError::MissingMoments(label.to_string()))?;
        if m.len() <= k {
            return Err(IndependenceError::ShortMoments {
                label: label.to_string(),
                need: k,
            });
        }
        cumulants
            .entry(label)
            .or_insert_with(|| free_cumulants(&m[..=k]));
    }
    let mut total = Q::zero();
    for rgs in noncrossing_partitions(k) {
        let blocks = rgs.iter().max().map_or(0, |b| b + 1);
        let mut term = Q::one();
        for b in 0..blocks {
            let members: Vec<usize> = (0..k).filter(|&i| rgs[i] == b).collect();
            let label = word[members[0]];
            if members.iter().any(|&i| word[i] != label) {
                term = Q::zero();
                break;
            }
            term *= &cumulants[label][members.len()];
        }
        total += term;
    }
    Ok(total)
}

/// The limit of `E (1/n) tr(x_{w_1} ⋯ x_{w_k})` under a joint LTD.
pub fn traffic_prediction(
    word: &[&str],
    ltd: &dyn LtdEvaluator,
) -> Result<Coeff, IndependenceError> {
    if word.is_empty() {
        return Err(IndependenceError::EmptyWord);
    }
    let cycle = GraphMonomial::eta(word).delta();
    Ok(QuotientSum::new(ltd).sum(&cycle, &[])?)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FreenessReport {
    pub word: Vec<String>,
    pub n: usize,
    pub samples: usize,
    pub mean: [f64; 2],
    pub stderr: f64,
    pub free_prediction: f64,
    /// Distance from the free prediction in standard errors.
    pub z: f64,
}

/// Compares `E (1/n) tr(x_{w_1} ⋯ x_{w_k})` over `samples` draws of
/// `ensemble` with `free_prediction`.
pub fn freeness_moment_test(
    ensemble: &Ensemble,
    word: &[&str],
    n: usize,
    samples: usize,
    seed: u64,
    free_prediction: f64,
) -> Result<FreenessReport, IndependenceError> {
    if word.is_empty() {
        return Err(IndependenceError::EmptyWord);
    }
    if let Some(l) = word.iter().find(|l| !ensemble.models().contains_key(**l)) {
        return Err(TraceError::UnboundLabel(l.to_string()).into());
    }
    let values = per_sample(samples, |i| {
        let mats = ensemble.sample(n, seed, i)?;
        let mut product = mats[word[0]].clone();
        for l in &word[1..] {
            product = product.matmul(&mats[*l])?;
        }
        Ok::<Complex64, TraceError>(product.trace() / n as f64)
    })?;
    let est = Estimate::from_values(&values, n);
    Ok(FreenessReport {
        word: word.iter().map(|s| s.to_string()).collect(),
        n,
        samples,
        mean: [est.mean.re, est.mean.im],
        stderr: est.stderr,
        free_prediction,
        z: est.z_score(Complex64::new(free_prediction, 0.0)),
    })
}
