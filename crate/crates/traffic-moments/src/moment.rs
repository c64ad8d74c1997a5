use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;
use traffic_graph::coeff::{one, ratio, real, zero};
use traffic_graph::poly::substitute_ngraph;
use traffic_graph::{Coeff, Edge, GraphMonomial, NGraphMonomial, TestGraph, TrafficPolynomial};
use traffic_ltd::{LtdEvaluator, WignerLtd};

use crate::error::MomentError;
use crate::quotient::QuotientSum;

/// Largest moment order accepted.
pub const MAX_ORDER: usize = 12;

const SLOT: &str = "slot";

fn bind(a: &TrafficPolynomial) -> BTreeMap<String, TrafficPolynomial> {
    BTreeMap::from([(SLOT.to_string(), a.clone())])
}

/// Sums `c · Σ_π ltd(T^π)` over the terms of `t` with every edge replaced
/// by `a`, keeping the roots of `t` in distinct blocks.
fn expand(
    t: &NGraphMonomial,
    a: &TrafficPolynomial,
    sums: &QuotientSum,
) -> Result<Coeff, MomentError> {
    let mut total = zero();
    for (g, c) in substitute_ngraph(t, &bind(a))? {
        let mut roots = g.roots().to_vec();
        roots.sort_unstable();
        if roots.windows(2).any(|w| w[0] == w[1]) {
            continue;
        }
        total += c * sums.sum(g.graph(), &roots)?;
    }
    Ok(total)
}

/// `lim E (1/n) tr a^m` for a graph polynomial `a`.
pub fn traffic_moment(
    a: &TrafficPolynomial,
    m: usize,
    ltd: &dyn LtdEvaluator,
) -> Result<Coeff, MomentError> {
    traffic_moment_with(a, m, &QuotientSum::new(ltd))
}

pub(crate) fn traffic_moment_with(
    a: &TrafficPolynomial,
    m: usize,
    sums: &QuotientSum,
) -> Result<Coeff, MomentError> {
    if m > MAX_ORDER {
        return Err(MomentError::OrderGuard {
            order: m,
            cap: MAX_ORDER,
        });
    }
    if m == 0 {
        return Ok(one());
    }
    let cycle = GraphMonomial::eta(&vec![SLOT; m]).delta();
    expand(&NGraphMonomial::new(cycle, Vec::new())?, a, sums)
}

/// Moments of orders `0..=max` sharing one evaluator cache.
pub fn moment_sequence(
    a: &TrafficPolynomial,
    max: usize,
    ltd: &dyn LtdEvaluator,
) -> Result<Vec<Coeff>, MomentError> {
    let sums = QuotientSum::new(ltd);
    (0..=max)
        .map(|m| traffic_moment_with(a, m, &sums))
        .collect()
}

/// The two parts `(α, 1 − α)·Var` of the variance of a centered `a`: the
/// injective state on the opposing double edge and on the double loop.
pub fn clt_alpha_split(
    a: &TrafficPolynomial,
    ltd: &dyn LtdEvaluator,
) -> Result<(Coeff, Coeff), MomentError> {
    let sums = QuotientSum::new(ltd);
    let mean = traffic_moment_with(a, 1, &sums)?;
    if !mean.is_zero() {
        return Err(MomentError::NotCentered(format!(
            "{} + {}i",
            mean.re, mean.im
        )));
    }
    let pair = TestGraph::from_edges(vec![Edge::new(0, 1, SLOT), Edge::new(1, 0, SLOT)])?;
    let loops = TestGraph::from_edges(vec![Edge::new(0, 0, SLOT), Edge::new(0, 0, SLOT)])?;
    let alpha = expand(&NGraphMonomial::new(pair, vec![0, 1])?, a, &sums)?;
    let rest = expand(&NGraphMonomial::new(loops, vec![0])?, a, &sums)?;
    Ok((alpha, rest))
}

/// `p·x + (q/2)·row(x) + (q/2)·col(x)`.
pub fn markov_polynomial(p: &BigRational, q: &BigRational, label: &str) -> TrafficPolynomial {
    let half = q * ratio(1, 2);
    let mut a = TrafficPolynomial::zero();
    a.add_term(&GraphMonomial::edge(label), real(p.clone()))
        .unwrap();
    a.add_term(&GraphMonomial::row_op(label), real(half.clone()))
        .unwrap();
    a.add_term(&GraphMonomial::col_op(label), real(half))
        .unwrap();
    a
}

/// `m`-th moment of the limit of `p·W + q·deg(W)` for a real Wigner `W`.
pub fn markov_moments(
    p: &BigRational,
    q: &BigRational,
    m: usize,
) -> Result<BigRational, MomentError> {
    let ltd = WignerLtd {
        betas: BTreeMap::from([("x".to_string(), one())]),
    };
    let v = traffic_moment(&markov_polynomial(p, q, "x"), m, &ltd)?;
    if !v.im.is_zero() {
        return Err(MomentError::NotReal);
    }
    Ok(v.re)
}
