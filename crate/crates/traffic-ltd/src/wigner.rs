//! Wigner limits: `∏ β_i^{c_i(T)}` for real `β`, and the average over vertex
//! orderings when some `β` is complex.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;
use traffic_graph::coeff::{one, rat, zero};
use traffic_graph::graph::components;
use traffic_graph::{Coeff, TestGraph, VertexId};

use crate::double_tree::{classify_double_tree, Pad, PadKind};
use crate::error::LtdError;

/// Pseudo-variance `β_i = E X(j, k)²` per label.
pub type Betas = BTreeMap<String, Coeff>;

/// Largest component of complex congruent pads whose orderings are summed.
pub const ORDERING_CAP: usize = 10;

fn beta<'a>(betas: &'a Betas, label: &str) -> Result<&'a Coeff, LtdError> {
    betas
        .get(label)
        .ok_or_else(|| LtdError::MissingBeta(label.to_string()))
}

fn check_labels(t: &TestGraph, betas: &Betas) -> Result<(), LtdError> {
    t.labels()
        .into_iter()
        .try_for_each(|l| beta(betas, l).map(|_| ()))
}

fn pow(z: &Coeff, k: usize) -> Coeff {
    (0..k).fold(one(), |acc, _| acc * z)
}

/// `∏ β_i^{c_i(T)}` on colored double trees and `0` elsewhere. Every `β`
/// must be real.
pub fn wigner_ltd(t: &TestGraph, betas: &Betas) -> Result<Coeff, LtdError> {
    check_labels(t, betas)?;
    for l in t.labels() {
        if !betas[l].im.is_zero() {
            return Err(LtdError::NonRealBeta(l.to_string()));
        }
    }
    let report = classify_double_tree(t);
    if !report.is_double_tree {
        return Ok(zero());
    }
    Ok(report
        .congruent
        .iter()
        .fold(one(), |acc, (l, &c)| acc * pow(&betas[l], c)))
}

/// The limit for arbitrary complex `β`: the average over orderings `ψ` of
/// the vertices of `∏` over pads of `1` (opposing), `β` (congruent with
/// `ψ(tar) < ψ(src)`) or `β̄` (congruent otherwise).
///
/// Only congruent pads with non-real `β` depend on the ordering, so the
/// average factorizes over the components they span and each component is
/// summed by a dynamic program over subsets of its vertices.
pub fn ordering_sum_ltd(t: &TestGraph, betas: &Betas) -> Result<Coeff, LtdError> {
    check_labels(t, betas)?;
    let report = classify_double_tree(t);
    if !report.is_double_tree {
        return Ok(zero());
    }
    let mut value = one();
    let mut complex: Vec<&Pad> = Vec::new();
    for p in &report.pads {
        let b = &betas[&p.label];
        match p.kind {
            PadKind::Opposing => {}
            PadKind::Congruent if b.im.is_zero() => value *= b,
            PadKind::Congruent => complex.push(p),
        }
    }
    let touched: Vec<VertexId> = {
        let mut v: Vec<VertexId> = complex.iter().flat_map(|p| [p.src, p.tar]).collect();
        v.sort_unstable();
        v.dedup();
        v
    };
    for comp in components(&touched, complex.iter().map(|p| (p.src, p.tar))) {
        let pads: Vec<&Pad> = complex
            .iter()
            .copied()
            .filter(|p| comp.binary_search(&p.src).is_ok())
            .collect();
        value *= component_average(&comp, &pads, betas)?;
    }
    Ok(value)
}

fn component_average(
    vertices: &[VertexId],
    pads: &[&Pad],
    betas: &Betas,
) -> Result<Coeff, LtdError> {
    let k = vertices.len();
    if k > ORDERING_CAP {
        return Err(LtdError::OrderingCap {
            vertices: k,
            cap: ORDERING_CAP,
        });
    }
    let pos = |v: VertexId| vertices.binary_search(&v).unwrap();
    // dp[S]: sum over orderings of S placed first of the pads inside S.
    let mut dp = vec![zero(); 1 << k];
    dp[0] = one();
    for set in 0..(1usize << k) {
        if dp[set].is_zero() {
            continue;
        }
        let current = dp[set].clone();
        for v in (0..k).filter(|v| set & (1 << v) == 0) {
            let mut w = current.clone();
            for p in pads {
                let (s, t) = (pos(p.src), pos(p.tar));
                let b = &betas[&p.label];
                if s == v && set & (1 << t) != 0 {
                    w *= b;
                } else if t == v && set & (1 << s) != 0 {
                    w *= b.conj();
                }
            }
            dp[set | (1 << v)] += w;
        }
    }
    let factorial: i64 = (1..=k as i64).product();
    let total = dp.pop().unwrap();
    Ok(total / Coeff::new(rat(factorial), BigRational::zero()))
}
