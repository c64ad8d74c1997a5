//! Injective traces through Möbius inversion on the partition lattice.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_complex::Complex64;
use traffic_graph::partition::{for_each_rgs, mobius_rgs, BELL_GUARD};
use traffic_graph::{canonical_key, CanonKey, GraphError, TestGraph};

use crate::engine::{trace_test_graph, Bindings};
use crate::error::TraceError;

/// `tr⁰[T] = Σ_π μ(0, π) tr[T^π]` with isomorphic quotients merged: one
/// entry per quotient class with the summed Möbius weight. Classes whose
/// weights cancel are dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MobiusExpansion {
    pub terms: Vec<(CanonKey, TestGraph, i64)>,
}

fn cache() -> &'static Mutex<HashMap<CanonKey, Arc<MobiusExpansion>>> {
    static CACHE: OnceLock<Mutex<HashMap<CanonKey, Arc<MobiusExpansion>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// The expansion of `g`, computed once per isomorphism class.
pub fn mobius_expansion(g: &TestGraph) -> Result<Arc<MobiusExpansion>, TraceError> {
    let key = canonical_key(g)?;
    if let Some(hit) = cache().lock().unwrap().get(&key) {
        return Ok(hit.clone());
    }
    let k = g.vertex_count();
    if k > BELL_GUARD {
        return Err(GraphError::PartitionGuard {
            size: k,
            cap: BELL_GUARD,
        }
        .into());
    }
    let rep = key.to_test_graph();
    let mut acc: BTreeMap<CanonKey, i64> = BTreeMap::new();
    let mut failure = None;
    for_each_rgs(k, None, |rgs| {
        if failure.is_some() {
            return;
        }
        match canonical_key(&rep.quotient_by_rgs(rgs)) {
            Ok(q) => *acc.entry(q).or_insert(0) += mobius_rgs(rgs),
            Err(e) => failure = Some(e),
        }
    })?;
    if let Some(e) = failure {
        return Err(e.into());
    }
    let terms = acc
        .into_iter()
        .filter(|(_, w)| *w != 0)
        .map(|(q, w)| {
            let graph = q.to_test_graph();
            (q, graph, w)
        })
        .collect();
    let exp = Arc::new(MobiusExpansion { terms });
    cache().lock().unwrap().insert(key, exp.clone());
    Ok(exp)
}

/// Traces on one fixed set of matrices, memoized by isomorphism class.
pub struct TraceSession<'a> {
    mats: &'a Bindings,
    cache: HashMap<CanonKey, Complex64>,
}

impl<'a> TraceSession<'a> {
    pub fn new(mats: &'a Bindings) -> Self {
        TraceSession {
            mats,
            cache: HashMap::new(),
        }
    }

    fn trace_keyed(&mut self, key: &CanonKey, g: &TestGraph) -> Result<Complex64, TraceError> {
        if let Some(&z) = self.cache.get(key) {
            return Ok(z);
        }
        let z = trace_test_graph(g, self.mats)?;
        self.cache.insert(key.clone(), z);
        Ok(z)
    }

    pub fn trace(&mut self, g: &TestGraph) -> Result<Complex64, TraceError> {
        let key = canonical_key(g)?;
        self.trace_keyed(&key, g)
    }

    pub fn trace_injective(&mut self, g: &TestGraph) -> Result<Complex64, TraceError> {
        let exp = mobius_expansion(g)?;
        let mut total = Complex64::new(0.0, 0.0);
        for (key, rep, w) in &exp.terms {
            total += self.trace_keyed(key, rep)? * (*w as f64);
        }
        Ok(total)
    }
}

/// `tr⁰[T(A)]`, the sum over injective labelings.
pub fn trace_injective(g: &TestGraph, mats: &Bindings) -> Result<Complex64, TraceError> {
    TraceSession::new(mats).trace_injective(g)
}
