//! Band matrices in the slow, full, periodic and proportional regimes.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};
use traffic_graph::graph::components;
use traffic_graph::{Coeff, Edge, TestGraph, VertexId};

use crate::double_tree::classify_double_tree;
use crate::error::LtdError;
use crate::piecewise::PiecewisePoly;
use crate::wigner::{wigner_ltd, Betas};

type Q = BigRational;

/// Growth regime of one band matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Regime {
    /// Periodic band with `b_n → ∞` and `b_n = o(n)`.
    PeriodicSlow,
    /// Periodic band with `b_n / n` converging to a positive proportion.
    PeriodicProportional,
    /// Band with `b_n → ∞` and `b_n = o(n)`.
    Slow,
    /// Band covering everything, i.e. a Wigner matrix.
    Full,
    /// Band `|i − j| ≤ cn` with `c ∈ (0, 1)`.
    Proportional(Q),
    /// Band `|i − j| ≤ b` with `b` fixed.
    Fixed(usize),
}

pub type RegimeAssignment = BTreeMap<String, Regime>;

fn regime<'a>(regimes: &'a RegimeAssignment, label: &str) -> Result<&'a Regime, LtdError> {
    let r = regimes
        .get(label)
        .ok_or_else(|| LtdError::MissingRegime(label.to_string()))?;
    match r {
        Regime::Fixed(_) => Err(LtdError::FixedRegime(label.to_string())),
        Regime::Proportional(c) if !(c > &Q::zero() && c < &Q::one()) => {
            Err(LtdError::InvalidProportion {
                label: label.to_string(),
                value: c.to_string(),
            })
        }
        _ => Ok(r),
    }
}

/// Contracts the pads of slow labels and deletes the pads of full and
/// periodic-proportional labels; the components of what remains are
/// returned, each keeping the vertex ids of `t`.
pub fn forest_transform(
    t: &TestGraph,
    regimes: &RegimeAssignment,
) -> Result<Vec<TestGraph>, LtdError> {
    let report = classify_double_tree(t);
    if let Some(w) = report.witness {
        return Err(LtdError::NotDoubleTree(w));
    }
    let mut contracted = Vec::new();
    let mut kept = Vec::new();
    for e in t.edges() {
        match regime(regimes, &e.label)? {
            Regime::Slow | Regime::PeriodicSlow => contracted.push((e.src, e.tar)),
            Regime::Full | Regime::PeriodicProportional => {}
            Regime::Proportional(_) => kept.push(e),
            Regime::Fixed(_) => unreachable!("rejected by regime()"),
        }
    }
    let merged = components(t.vertices(), contracted);
    let rep: BTreeMap<VertexId, VertexId> = merged
        .iter()
        .flat_map(|c| c.iter().map(move |&v| (v, c[0])))
        .collect();
    let reps: Vec<VertexId> = merged.iter().map(|c| c[0]).collect();
    let edges: Vec<Edge> = kept
        .iter()
        .map(|e| Edge {
            src: rep[&e.src],
            tar: rep[&e.tar],
            label: e.label.clone(),
            star: e.star,
        })
        .collect();
    let mut forest = Vec::new();
    for comp in components(&reps, edges.iter().map(|e| (e.src, e.tar))) {
        let own: Vec<Edge> = edges
            .iter()
            .filter(|e| comp.binary_search(&e.src).is_ok())
            .cloned()
            .collect();
        forest.push(TestGraph::new(comp, own)?);
    }
    Ok(forest)
}

fn proportion(proportions: &BTreeMap<String, Q>, label: &str) -> Result<Q, LtdError> {
    let c = proportions
        .get(label)
        .ok_or_else(|| LtdError::MissingProportion(label.to_string()))?;
    if c > &Q::zero() && c <= &Q::one() {
        Ok(c.clone())
    } else {
        Err(LtdError::InvalidProportion {
            label: label.to_string(),
            value: c.to_string(),
        })
    }
}

/// Non-loop twin-edge classes as `(u, v, c)` with `c` the smallest
/// proportion among the labels of the class.
fn class_proportions(
    t: &TestGraph,
    proportions: &BTreeMap<String, Q>,
) -> Result<Vec<(VertexId, VertexId, Q)>, LtdError> {
    let mut out = Vec::new();
    for class in t.edge_classes() {
        let mut c: Option<Q> = None;
        for label in class.counts.keys() {
            let p = proportion(proportions, label)?;
            c = Some(match c {
                Some(old) if old <= p => old,
                _ => p,
            });
        }
        if !class.is_loop() {
            out.push((
                class.endpoints.0,
                class.endpoints.1,
                c.expect("classes are non-empty"),
            ));
        }
    }
    Ok(out)
}

/// `Int_T(c) = ∫_{[0,1]^V} ∏_{[e]} 1{|x_u − x_v| ≤ c_[e]} dx`, computed by
/// peeling leaves off the skeleton tree.
pub fn cut_integral(t: &TestGraph, proportions: &BTreeMap<String, Q>) -> Result<Q, LtdError> {
    let classes = class_proportions(t, proportions)?;
    if classes.len() + 1 != t.vertex_count() {
        return Err(LtdError::SkeletonNotTree);
    }
    let idx = |v: VertexId| t.index_of(v).unwrap();
    let mut adj: Vec<Vec<(usize, Q)>> = vec![Vec::new(); t.vertex_count()];
    for (u, v, c) in classes {
        adj[idx(u)].push((idx(v), c.clone()));
        adj[idx(v)].push((idx(u), c));
    }
    fn profile(v: usize, parent: Option<usize>, adj: &[Vec<(usize, Q)>]) -> PiecewisePoly {
        let mut h = PiecewisePoly::constant(Q::one());
        for (u, c) in &adj[v] {
            if Some(*u) != parent {
                h = h.mul(&profile(*u, Some(v), adj).band_kernel(c));
            }
        }
        h
    }
    Ok(profile(0, None, &adj).integral())
}

/// `∏_{[e]} (2c − c²)` over non-loop twin-edge classes.
pub fn norm_factor(t: &TestGraph, proportions: &BTreeMap<String, Q>) -> Result<Q, LtdError> {
    let two = Q::from_integer(2.into());
    Ok(class_proportions(t, proportions)?
        .into_iter()
        .map(|(_, _, c)| &two * &c - &c * &c)
        .product())
}

/// `p_T(c) = Int_T(c) / Norm_T(c)`.
pub fn p_t(t: &TestGraph, proportions: &BTreeMap<String, Q>) -> Result<Q, LtdError> {
    Ok(cut_integral(t, proportions)? / norm_factor(t, proportions)?)
}

/// Limit for independent band matrices with real `β`: `p_F(c)·∏ β_i^{c_i(T)}`
/// on colored double trees, where `F` is the forest of [`forest_transform`].
pub fn rbm_ltd(
    t: &TestGraph,
    regimes: &RegimeAssignment,
    betas: &Betas,
) -> Result<Coeff, LtdError> {
    for l in t.labels() {
        regime(regimes, l)?;
    }
    let base = wigner_ltd(t, betas)?;
    if base.is_zero() {
        return Ok(base);
    }
    let proportions: BTreeMap<String, Q> = regimes
        .iter()
        .filter_map(|(l, r)| match r {
            Regime::Proportional(c) => Some((l.clone(), c.clone())),
            _ => None,
        })
        .collect();
    let mut p = Q::one();
    for tree in forest_transform(t, regimes)? {
        p *= p_t(&tree, &proportions)?;
    }
    Ok(base * Coeff::new(p, Q::zero()))
}
