//! Graph polynomials: finite linear combinations of graph monomials.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::canon::{canonical_key, canonical_key_rooted, CanonKey};
use crate::coeff::{self, Coeff};
use crate::error::GraphError;
use crate::glue::Glue;
use crate::graph::{TestGraph, VertexId};
use crate::monomial::{GraphMonomial, NGraphMonomial};

/// Linear combination of bi-rooted monomials keyed by canonical form.
/// Isomorphic monomials merge and zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TrafficPolynomial {
    terms: BTreeMap<CanonKey, Coeff>,
}

impl TrafficPolynomial {
    pub fn zero() -> Self {
        TrafficPolynomial::default()
    }

    /// `c · t`.
    pub fn monomial(t: &GraphMonomial, c: Coeff) -> Result<Self, GraphError> {
        let mut p = Self::zero();
        p.add_term(t, c)?;
        Ok(p)
    }

    /// `1 · t`.
    pub fn from_monomial(t: &GraphMonomial) -> Result<Self, GraphError> {
        Self::monomial(t, coeff::one())
    }

    /// Adds `c · t` in place.
    pub fn add_term(&mut self, t: &GraphMonomial, c: Coeff) -> Result<(), GraphError> {
        let key = canonical_key_rooted(t.graph(), &[t.input(), t.output()])?;
        self.add_key(key, c);
        Ok(())
    }

    fn add_key(&mut self, key: CanonKey, c: Coeff) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(key.clone()).or_insert_with(coeff::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms as (canonical representative, coefficient), in key order.
    pub fn terms(&self) -> impl Iterator<Item = (GraphMonomial, &Coeff)> {
        self.terms
            .iter()
            .map(|(k, c)| (k.to_monomial().unwrap(), c))
    }

    /// Raw canonical keys with coefficients.
    pub fn keyed_terms(&self) -> &BTreeMap<CanonKey, Coeff> {
        &self.terms
    }

    /// Coefficient of the class of `t` (zero if absent).
    pub fn coefficient(&self, t: &GraphMonomial) -> Result<Coeff, GraphError> {
        let key = canonical_key_rooted(t.graph(), &[t.input(), t.output()])?;
        Ok(self.terms.get(&key).cloned().unwrap_or_else(coeff::zero))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_key(k.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        let mut out = Self::zero();
        for (k, v) in &self.terms {
            out.add_key(k.clone(), v * c);
        }
        out
    }

    fn bilinear(
        &self,
        other: &Self,
        op: impl Fn(&GraphMonomial, &GraphMonomial) -> GraphMonomial,
    ) -> Result<Self, GraphError> {
        let mut out = Self::zero();
        for (t1, c1) in self.terms() {
            for (t2, c2) in other.terms() {
                out.add_term(&op(&t1, &t2), c1 * c2)?;
            }
        }
        Ok(out)
    }

    /// Bilinear extension of [`GraphMonomial::concat`].
    pub fn mul(&self, other: &Self) -> Result<Self, GraphError> {
        self.bilinear(other, GraphMonomial::concat)
    }

    /// Bilinear extension of [`GraphMonomial::hadamard`].
    pub fn hadamard(&self, other: &Self) -> Result<Self, GraphError> {
        self.bilinear(other, GraphMonomial::hadamard)
    }

    /// Conjugate-linear extension of [`GraphMonomial::adjoint`].
    pub fn adjoint(&self) -> Result<Self, GraphError> {
        let mut out = Self::zero();
        for (t, c) in self.terms() {
            out.add_term(&t.adjoint(), c.conj())?;
        }
        Ok(out)
    }

    /// `Δ` applied termwise; isomorphic test graphs merge.
    pub fn delta(&self) -> Result<Vec<(TestGraph, Coeff)>, GraphError> {
        let mut acc: BTreeMap<CanonKey, Coeff> = BTreeMap::new();
        for (t, c) in self.terms() {
            let key = canonical_key(&t.delta())?;
            *acc.entry(key).or_insert_with(coeff::zero) += c;
        }
        Ok(acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k.to_test_graph(), c))
            .collect())
    }
}

/// Replaces every edge of `t` by its bound polynomial (adjoint first when the
/// edge is starred), gluing the source to the input and the target to the
/// output, and expands multilinearly.
pub fn substitute(
    t: &GraphMonomial,
    bindings: &BTreeMap<String, TrafficPolynomial>,
) -> Result<TrafficPolynomial, GraphError> {
    let mut out = TrafficPolynomial::zero();
    for (ng, c) in substitute_ngraph(&t.to_ngraph(), bindings)? {
        out.add_term(&ng.to_monomial().unwrap(), c)?;
    }
    Ok(out)
}

/// Substitution on an n-graph monomial. The roots of each result track the
/// roots of the input. Results are merged by rooted canonical form.
pub fn substitute_ngraph(
    t: &NGraphMonomial,
    bindings: &BTreeMap<String, TrafficPolynomial>,
) -> Result<Vec<(NGraphMonomial, Coeff)>, GraphError> {
    let g = t.graph();
    let mut options: Vec<Vec<(GraphMonomial, Coeff)>> = Vec::with_capacity(g.edge_count());
    for e in g.edges() {
        let p = bindings
            .get(&e.label)
            .ok_or_else(|| GraphError::UnboundLabel(e.label.clone()))?;
        let opts: Vec<(GraphMonomial, Coeff)> = p
            .terms()
            .map(|(m, c)| {
                if e.star {
                    (m.adjoint(), c.conj())
                } else {
                    (m, c.clone())
                }
            })
            .collect();
        options.push(opts);
    }
    let mut acc: BTreeMap<CanonKey, Coeff> = BTreeMap::new();
    if options.iter().any(Vec::is_empty) {
        return Ok(Vec::new());
    }
    let mut choice = vec![0usize; options.len()];
    loop {
        let mut glue = Glue::new();
        let base = glue.add_vertices(g.vertex_count());
        let mut c = coeff::one();
        for (ei, e) in g.edges().iter().enumerate() {
            let (m, mc) = &options[ei][choice[ei]];
            c *= mc;
            let map = glue.add_graph(m.graph(), false);
            glue.merge(
                base + g.index_of(e.src).unwrap(),
                map[m.graph().index_of(m.input()).unwrap()],
            );
            glue.merge(
                base + g.index_of(e.tar).unwrap(),
                map[m.graph().index_of(m.output()).unwrap()],
            );
        }
        let (graph, ids) = glue.finish_graph()?;
        let roots: Vec<VertexId> = t
            .roots()
            .iter()
            .map(|&r| ids[base + g.index_of(r).unwrap()])
            .collect();
        let key = canonical_key_rooted(&graph, &roots)?;
        *acc.entry(key).or_insert_with(coeff::zero) += c;
        if !advance(&mut choice, &options) {
            break;
        }
    }
    Ok(acc
        .into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (k.to_ngraph(), c))
        .collect())
}

fn advance<T>(choice: &mut [usize], options: &[Vec<T>]) -> bool {
    for i in (0..choice.len()).rev() {
        choice[i] += 1;
        if choice[i] < options[i].len() {
            return true;
        }
        choice[i] = 0;
    }
    false
}
