//! Piecewise polynomials on `[0, 1]` with exact rational coefficients.

use num_rational::BigRational;
use num_traits::{One, Zero};

type Q = BigRational;

/// Coefficients in increasing degree.
pub type Poly = Vec<Q>;

fn trim(mut p: Poly) -> Poly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

pub fn poly_eval(p: &[Q], x: &Q) -> Q {
    p.iter().rev().fold(Q::zero(), |acc, a| acc * x + a)
}

fn poly_add(p: &[Q], q: &[Q], sign: &Q) -> Poly {
    let mut out = vec![Q::zero(); p.len().max(q.len())];
    for (i, a) in p.iter().enumerate() {
        out[i] += a;
    }
    for (i, b) in q.iter().enumerate() {
        out[i] += sign * b;
    }
    trim(out)
}

fn poly_mul(p: &[Q], q: &[Q]) -> Poly {
    if p.is_empty() || q.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Q::zero(); p.len() + q.len() - 1];
    for (i, a) in p.iter().enumerate() {
        for (j, b) in q.iter().enumerate() {
            out[i + j] += a * b;
        }
    }
    trim(out)
}

/// Antiderivative vanishing at `0`.
fn poly_integrate(p: &[Q]) -> Poly {
    let mut out = vec![Q::zero()];
    for (i, a) in p.iter().enumerate() {
        out.push(a / Q::from_integer((i as i64 + 1).into()));
    }
    trim(out)
}

/// `x ↦ p(x + s)`.
fn poly_shift(p: &[Q], s: &Q) -> Poly {
    let mut out: Poly = Vec::new();
    for a in p.iter().rev() {
        // out ← out·(x + s) + a
        let mut next = vec![Q::zero(); out.len() + 1];
        for (i, c) in out.iter().enumerate() {
            next[i] += c * s;
            next[i + 1] += c;
        }
        next[0] += a;
        out = next;
    }
    trim(out)
}

/// A function on `[0, 1]` given by one polynomial per interval between
/// consecutive breakpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiecewisePoly {
    breaks: Vec<Q>,
    pieces: Vec<Poly>,
}

impl PiecewisePoly {
    pub fn constant(value: Q) -> Self {
        PiecewisePoly {
            breaks: vec![Q::zero(), Q::one()],
            pieces: vec![trim(vec![value])],
        }
    }

    /// Builds from `(start, end, poly)` segments that tile `[0, 1]` in order.
    /// Empty segments are dropped.
    fn from_segments(segments: Vec<(Q, Q, Poly)>) -> Self {
        let mut breaks = vec![Q::zero()];
        let mut pieces = Vec::new();
        for (a, b, p) in segments {
            debug_assert_eq!(&a, breaks.last().unwrap());
            if a < b {
                breaks.push(b);
                pieces.push(p);
            }
        }
        debug_assert!(breaks.last().unwrap().is_one());
        PiecewisePoly { breaks, pieces }.merged()
    }

    pub fn breakpoints(&self) -> &[Q] {
        &self.breaks
    }

    pub fn pieces(&self) -> &[Poly] {
        &self.pieces
    }

    fn merged(mut self) -> Self {
        let mut breaks = vec![self.breaks[0].clone()];
        let mut pieces: Vec<Poly> = Vec::new();
        for (p, b) in self.pieces.drain(..).zip(self.breaks.into_iter().skip(1)) {
            if pieces.last() == Some(&p) {
                *breaks.last_mut().unwrap() = b;
            } else {
                pieces.push(p);
                breaks.push(b);
            }
        }
        PiecewisePoly { breaks, pieces }
    }

    fn piece_at(&self, x: &Q) -> usize {
        let k = self.breaks.partition_point(|b| b <= x);
        k.saturating_sub(1).min(self.pieces.len() - 1)
    }

    pub fn eval(&self, x: &Q) -> Q {
        poly_eval(&self.pieces[self.piece_at(x)], x)
    }

    fn combine(&self, other: &Self, op: impl Fn(&[Q], &[Q]) -> Poly) -> Self {
        let mut breaks: Vec<Q> = self.breaks.iter().chain(&other.breaks).cloned().collect();
        breaks.sort();
        breaks.dedup();
        let two = Q::from_integer(2.into());
        let pieces = breaks
            .windows(2)
            .map(|w| {
                let mid = (&w[0] + &w[1]) / &two;
                op(
                    &self.pieces[self.piece_at(&mid)],
                    &other.pieces[other.piece_at(&mid)],
                )
            })
            .collect();
        PiecewisePoly { breaks, pieces }.merged()
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.combine(other, poly_mul)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, |p, q| poly_add(p, q, &-Q::one()))
    }

    /// The continuous antiderivative `H` with `H(0) = 0`.
    pub fn antiderivative(&self) -> Self {
        let mut pieces = Vec::with_capacity(self.pieces.len());
        let mut level = Q::zero();
        for (k, p) in self.pieces.iter().enumerate() {
            let a = &self.breaks[k];
            let mut prim = poly_integrate(p);
            let offset = &level - poly_eval(&prim, a);
            prim = poly_add(&prim, &[offset], &Q::one());
            level = poly_eval(&prim, &self.breaks[k + 1]);
            pieces.push(prim);
        }
        PiecewisePoly {
            breaks: self.breaks.clone(),
            pieces,
        }
    }

    /// `∫₀¹`.
    pub fn integral(&self) -> Q {
        let h = self.antiderivative();
        h.eval(&Q::one())
    }

    /// `x ↦ H(min(1, x + c))` for `self = H` and `c ≥ 0`.
    fn shift_up_clamped(&self, c: &Q) -> Self {
        let top = self.eval(&Q::one());
        if c >= &Q::one() {
            return Self::constant(top);
        }
        let mut segs = Vec::new();
        for (k, p) in self.pieces.iter().enumerate() {
            let (a, b) = (&self.breaks[k], &self.breaks[k + 1]);
            if b <= c {
                continue;
            }
            let start = if a > c { a - c } else { Q::zero() };
            segs.push((start, b - c, poly_shift(p, c)));
        }
        segs.push((Q::one() - c, Q::one(), trim(vec![top])));
        Self::from_segments(segs)
    }

    /// `x ↦ H(max(0, x − c))` for `self = H` and `c ≥ 0`.
    fn shift_down_clamped(&self, c: &Q) -> Self {
        let bottom = self.eval(&Q::zero());
        if c >= &Q::one() {
            return Self::constant(bottom);
        }
        let mut segs = vec![(Q::zero(), c.clone(), trim(vec![bottom]))];
        let limit = Q::one() - c;
        for (k, p) in self.pieces.iter().enumerate() {
            let (a, b) = (&self.breaks[k], &self.breaks[k + 1]);
            if a >= &limit {
                break;
            }
            let end = if b < &limit { b + c } else { Q::one() };
            segs.push((a + c, end, poly_shift(p, &-c.clone())));
        }
        Self::from_segments(segs)
    }

    /// `x ↦ ∫ 1{|x − y| ≤ c} f(y) dy` over `y ∈ [0, 1]`.
    pub fn band_kernel(&self, c: &Q) -> Self {
        let h = self.antiderivative();
        h.shift_up_clamped(c).sub(&h.shift_down_clamped(c))
    }
}
