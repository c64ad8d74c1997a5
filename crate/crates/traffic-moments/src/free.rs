//! Free cumulants and moments of `SC(0, p²) ⊞ N(0, q²)`.

use num_rational::BigRational;
use num_traits::{One, Zero};

type Q = BigRational;

/// Noncrossing partitions of `{0, …, n−1}` as restricted growth strings.
pub fn noncrossing_partitions(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut rgs = vec![0usize; n];
    fn crosses(rgs: &[usize]) -> bool {
        let n = rgs.len();
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    for d in c + 1..n {
                        if rgs[a] == rgs[c] && rgs[b] == rgs[d] && rgs[a] != rgs[b] {
                            return true;
                        }
                    }
                }
            }
        }
        false
    }
    fn rec(i: usize, used: usize, rgs: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == rgs.len() {
            if !crosses(rgs) {
                out.push(rgs.clone());
            }
            return;
        }
        for b in 0..=used {
            rgs[i] = b;
            rec(i + 1, used.max(b + 1), rgs, out);
        }
    }
    if n == 0 {
        return vec![Vec::new()];
    }
    rec(1, 1, &mut rgs, &mut out);
    out
}

/// Moments `m_0..=m_max` from free cumulants `κ_1..` (index 0 unused) via
/// `m_n = Σ_s κ_s Σ_{i_1 + … + i_s = n − s} m_{i_1} ⋯ m_{i_s}`.
pub fn moments_from_free_cumulants(kappa: &[Q], max: usize) -> Vec<Q> {
    let k = |s: usize| kappa.get(s).cloned().unwrap_or_else(Q::zero);
    let mut m = vec![Q::one()];
    for n in 1..=max {
        // After round s, conv[r] sums ∏ m over compositions of r into s parts.
        let mut total = Q::zero();
        let mut conv = vec![Q::zero(); n];
        conv[0] = Q::one();
        for s in 1..=n {
            let mut next = vec![Q::zero(); n];
            for r in 0..n {
                for i in 0..=r {
                    if !conv[r - i].is_zero() {
                        next[r] += &m[i] * &conv[r - i];
                    }
                }
            }
            conv = next;
            total += k(s) * &conv[n - s];
        }
        m.push(total);
    }
    m
}

/// Free cumulants `κ_0..=κ_max` (with `κ_0 = 0`) from moments `m_0..`.
pub fn free_cumulants(moments: &[Q]) -> Vec<Q> {
    let max = moments.len() - 1;
    let mut kappa = vec![Q::zero(); max + 1];
    for n in 1..=max {
        // m_n is affine in κ_n with unit slope.
        let without = moments_from_free_cumulants(&kappa, n);
        kappa[n] = &moments[n] - &without[n];
    }
    kappa
}

fn gaussian_moments(variance: &Q, max: usize) -> Vec<Q> {
    let mut out = vec![Q::one()];
    for n in 1..=max {
        out.push(if n % 2 == 1 {
            Q::zero()
        } else {
            &out[n - 2] * Q::from_integer((n as i64 - 1).into()) * variance
        });
    }
    out
}

/// Moments `0..=max` of `SC(0, s) ⊞ N(0, g)`.
pub fn semicircle_plus_gaussian(s: &Q, g: &Q, max: usize) -> Vec<Q> {
    let mut kappa = free_cumulants(&gaussian_moments(g, max));
    if max >= 2 {
        kappa[2] += s;
    }
    moments_from_free_cumulants(&kappa, max)
}

/// True when the Hankel matrix `(m_{i+j})` that fits in `moments` is
/// positive semidefinite.
pub fn hankel_psd(moments: &[Q]) -> bool {
    let k = moments.len().div_ceil(2);
    let mut a: Vec<Vec<Q>> = (0..k)
        .map(|i| (0..k).map(|j| moments[i + j].clone()).collect())
        .collect();
    // Symmetric elimination: a zero pivot needs a zero row.
    for p in 0..k {
        let pivot = a[p][p].clone();
        if pivot < Q::zero() {
            return false;
        }
        if pivot.is_zero() {
            if a[p][p + 1..].iter().any(|x| !x.is_zero()) {
                return false;
            }
            continue;
        }
        for r in p + 1..k {
            let f = &a[r][p] / &pivot;
            let (top, rest) = a.split_at_mut(r);
            for (dst, src) in rest[0][p..k].iter_mut().zip(&top[p][p..k]) {
                *dst -= &f * src;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use traffic_graph::coeff::rat;

    #[test]
    fn noncrossing_counts_are_catalan() {
        let counts: Vec<usize> = (0..=7).map(|n| noncrossing_partitions(n).len()).collect();
        assert_eq!(counts, [1, 1, 2, 5, 14, 42, 132, 429]);
    }

    #[test]
    fn semicircle_has_one_cumulant() {
        let m = semicircle_plus_gaussian(&rat(1), &rat(0), 8);
        assert_eq!(m, [1, 0, 1, 0, 2, 0, 5, 0, 14].map(rat));
        let k = free_cumulants(&m);
        assert_eq!(k, [0, 0, 1, 0, 0, 0, 0, 0, 0].map(rat));
    }

    #[test]
    fn hankel() {
        assert!(hankel_psd(&[1, 0, 1, 0, 3].map(rat)));
        assert!(!hankel_psd(&[
            rat(1),
            rat(0),
            rat(1),
            rat(0),
            rat(1) / rat(2)
        ]));
    }
}
