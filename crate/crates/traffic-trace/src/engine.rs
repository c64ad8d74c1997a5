//! Contraction of a test graph against matrices by vertex elimination.
//!
//! Each non-loop edge is a matrix factor on its two endpoints and each loop
//! a vector factor on its vertex. Parallel factors are merged entrywise.
//! A vertex with at most two neighbours is summed out: degree 0 sums a
//! vector, degree 1 is a matrix-vector product and degree 2 a matrix
//! product. When every remaining vertex has three or more neighbours, one of
//! them is fixed to each of its `n` values in turn and the slices are
//! summed.

use std::collections::BTreeMap;

use num_complex::Complex64;
use traffic_ensembles::Matrix;
use traffic_graph::{GraphMonomial, TestGraph};

use crate::error::TraceError;

/// Matrices keyed by edge label.
pub type Bindings = BTreeMap<String, Matrix>;

/// Upper bound on `n^(conditioned vertices + 2)` before giving up.
pub const CONDITIONING_BUDGET: f64 = 1e11;

type C = Complex64;

/// Common dimension of the bound matrices used by `g`.
pub(crate) fn dimension(g: &TestGraph, mats: &Bindings) -> Result<usize, TraceError> {
    let mut n = None;
    for m in mats.values() {
        match n {
            None => n = Some(m.dim()),
            Some(d) if d != m.dim() => return Err(TraceError::DimensionMismatch(d, m.dim())),
            _ => {}
        }
    }
    for l in g.labels() {
        if !mats.contains_key(l) {
            return Err(TraceError::UnboundLabel(l.to_string()));
        }
    }
    n.ok_or(TraceError::NoMatrices)
}

#[derive(Clone)]
struct Net {
    n: usize,
    alive: Vec<bool>,
    is_root: Vec<bool>,
    vecs: Vec<Option<Vec<C>>>,
    /// `(a, b, M)` with `a < b`; rows of `M` are indexed by `a`.
    mats: Vec<(usize, usize, Matrix)>,
    scalar: C,
}

enum Output {
    Scalar(C),
    Vector(Vec<C>),
    Full(Matrix),
}

impl Output {
    fn add(self, other: Output) -> Output {
        match (self, other) {
            (Output::Scalar(a), Output::Scalar(b)) => Output::Scalar(a + b),
            (Output::Vector(a), Output::Vector(b)) => {
                Output::Vector(a.iter().zip(&b).map(|(x, y)| x + y).collect())
            }
            (Output::Full(a), Output::Full(b)) => {
                Output::Full(a.lin_comb(1.0, &b, 1.0).expect("same dimension"))
            }
            _ => unreachable!("slices share a shape"),
        }
    }
}

impl Net {
    fn build(g: &TestGraph, mats: &Bindings, n: usize, roots: &[usize]) -> Net {
        let k = g.vertex_count();
        let mut net = Net {
            n,
            alive: vec![true; k],
            is_root: vec![false; k],
            vecs: vec![None; k],
            mats: Vec::new(),
            scalar: C::new(1.0, 0.0),
        };
        for &r in roots {
            net.is_root[r] = true;
        }
        for e in g.edges() {
            let a = &mats[&e.label];
            let s = g.index_of(e.src).unwrap();
            let t = g.index_of(e.tar).unwrap();
            if s == t {
                let mut d = a.diag();
                if e.star {
                    d.iter_mut().for_each(|z| *z = z.conj());
                }
                net.mul_vec(s, d);
            } else if e.star {
                // A*(φ(tar), φ(src)) = conj A(φ(src), φ(tar)).
                net.add_mat(s, t, a.conj());
            } else {
                net.add_mat(t, s, a.clone());
            }
        }
        net
    }

    fn mul_vec(&mut self, v: usize, w: Vec<C>) {
        self.vecs[v] = Some(match self.vecs[v].take() {
            None => w,
            Some(old) => old.iter().zip(&w).map(|(x, y)| x * y).collect(),
        });
    }

    /// Adds a factor `M[φ(rows), φ(cols)]`.
    fn add_mat(&mut self, rows: usize, cols: usize, m: Matrix) {
        let (a, b, m) = if rows < cols {
            (rows, cols, m)
        } else {
            (cols, rows, m.transpose())
        };
        if let Some(slot) = self.mats.iter_mut().find(|(x, y, _)| *x == a && *y == b) {
            slot.2 = slot.2.hadamard(&m).expect("same dimension");
        } else {
            self.mats.push((a, b, m));
        }
    }

    fn degree(&self, v: usize) -> usize {
        self.mats
            .iter()
            .filter(|(a, b, _)| *a == v || *b == v)
            .count()
    }

    /// Removes the factors touching `v`, each as (other endpoint, matrix with
    /// rows indexed by the other endpoint).
    fn take_incident(&mut self, v: usize) -> Vec<(usize, Matrix)> {
        let mut out = Vec::new();
        let mut keep = Vec::with_capacity(self.mats.len());
        for (a, b, m) in self.mats.drain(..) {
            if a == v {
                out.push((b, m.transpose()));
            } else if b == v {
                out.push((a, m));
            } else {
                keep.push((a, b, m));
            }
        }
        self.mats = keep;
        out
    }

    fn weight(&mut self, v: usize) -> Vec<C> {
        self.vecs[v]
            .take()
            .unwrap_or_else(|| vec![C::new(1.0, 0.0); self.n])
    }

    fn eliminate(&mut self, v: usize) {
        let w = self.weight(v);
        let inc = self.take_incident(v);
        self.alive[v] = false;
        match inc.len() {
            0 => self.scalar *= w.iter().sum::<C>(),
            1 => {
                let (u, m) = &inc[0];
                self.mul_vec(*u, m.mul_vec(&w));
            }
            2 => {
                let (u, m1) = &inc[0];
                let (x, m2) = &inc[1];
                let prod = m1
                    .scale_columns(&w)
                    .matmul(&m2.transpose())
                    .expect("same dimension");
                self.add_mat(*u, *x, prod);
            }
            _ => unreachable!("only vertices of degree at most two are eliminated"),
        }
    }

    /// Fixes vertex `v` to the value `k`.
    fn condition(&self, v: usize, k: usize) -> Net {
        let mut net = self.clone();
        let w = net.weight(v);
        net.scalar *= w[k];
        for (u, m) in net.take_incident(v) {
            net.mul_vec(u, m.column(k));
        }
        net.alive[v] = false;
        net
    }

    fn contract(mut self, roots: &[usize], depth: i32) -> Result<Output, TraceError> {
        loop {
            let candidate = (0..self.alive.len())
                .filter(|&v| self.alive[v] && !self.is_root[v])
                .map(|v| (self.degree(v), v))
                .min();
            match candidate {
                None => return Ok(self.assemble(roots)),
                Some((d, v)) if d <= 2 => self.eliminate(v),
                Some(_) => {
                    let cost = (self.n as f64).powi(depth + 3);
                    if cost > CONDITIONING_BUDGET {
                        return Err(TraceError::ContractionBudget {
                            n: self.n,
                            conditioned: depth as usize + 1,
                        });
                    }
                    let v = (0..self.alive.len())
                        .filter(|&v| self.alive[v] && !self.is_root[v])
                        .max_by_key(|&v| (self.degree(v), std::cmp::Reverse(v)))
                        .unwrap();
                    let mut total: Option<Output> = None;
                    for k in 0..self.n {
                        let part = self.condition(v, k).contract(roots, depth + 1)?;
                        total = Some(match total {
                            None => part,
                            Some(t) => t.add(part),
                        });
                    }
                    return Ok(total.unwrap());
                }
            }
        }
    }

    fn assemble(mut self, roots: &[usize]) -> Output {
        let mut distinct: Vec<usize> = Vec::new();
        for &r in roots {
            if !distinct.contains(&r) {
                distinct.push(r);
            }
        }
        match distinct[..] {
            [] => Output::Scalar(self.scalar),
            [r] => {
                let s = self.scalar;
                Output::Vector(self.weight(r).into_iter().map(|z| z * s).collect())
            }
            [r0, r1] => {
                let v0 = self.weight(r0);
                let v1 = self.weight(r1);
                let inc = self.take_incident(r1);
                let base = match inc.into_iter().next() {
                    Some((_, m)) => m,
                    None => Matrix::from_real(self.n, vec![1.0; self.n * self.n]),
                };
                let s = self.scalar;
                let scaled: Vec<C> = v0.iter().map(|z| z * s).collect();
                let m = base.scale_columns(&v1);
                Output::Full(m.transpose().scale_columns(&scaled).transpose())
            }
            _ => unreachable!("at most two roots"),
        }
    }
}

/// `tr[T(A)] = Σ_{φ: V → [n]} ∏_e A_e^{ε(e)}(φ(tar e), φ(src e))`.
pub fn trace_test_graph(g: &TestGraph, mats: &Bindings) -> Result<C, TraceError> {
    let n = dimension(g, mats)?;
    match Net::build(g, mats, n, &[]).contract(&[], 0)? {
        Output::Scalar(z) => Ok(z),
        _ => unreachable!("no roots"),
    }
}

/// The graph of matrices `t(A)`: entry `(i, j)` sums over labelings with
/// output at `i` and input at `j`.
pub fn eval_graph_matrix(t: &GraphMonomial, mats: &Bindings) -> Result<Matrix, TraceError> {
    let g = t.graph();
    let n = dimension(g, mats)?;
    let out = g.index_of(t.output()).unwrap();
    let inp = g.index_of(t.input()).unwrap();
    let roots = [out, inp];
    Ok(match Net::build(g, mats, n, &roots).contract(&roots, 0)? {
        Output::Vector(d) => Matrix::diagonal(&d),
        Output::Full(m) => m,
        Output::Scalar(_) => unreachable!("roots are kept"),
    })
}
