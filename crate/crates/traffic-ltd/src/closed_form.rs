//! Closed forms for the proportional regime and for degree matrices.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::LtdError;

type Q = BigRational;

fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

fn check_unit(name: &str, c: &Q) -> Result<(), LtdError> {
    if c > &Q::zero() && c <= &Q::one() {
        Ok(())
    } else {
        Err(LtdError::OutOfDomain(format!(
            "{name} = {c} is outside (0, 1]"
        )))
    }
}

fn norm(c: &Q) -> Q {
    q(2) * c - c * c
}

fn p_s_numerator_inner(ci: &Q, cj: &Q) -> Q {
    -Q::new(1.into(), 3.into()) * ci * ci * ci - ci * ci * cj - q(2) * ci * cj * cj + q(4) * ci * cj
}

fn p_s_numerator_outer(ci: &Q, cj: &Q) -> Q {
    Q::new(1.into(), 3.into()) * (cj * cj * cj - q(1)) - ci * cj * cj - ci * ci - cj * cj
        + q(2) * ci * cj
        + ci
        + cj
}

/// `p_S` for the path of two pads with proportions `a` and `b`.
pub fn p_s_closed(a: &Q, b: &Q) -> Result<Q, LtdError> {
    check_unit("c_i", a)?;
    check_unit("c_j", b)?;
    let (ci, cj) = if a <= b { (a, b) } else { (b, a) };
    let num = if ci + cj <= Q::one() || cj <= &Q::new(1.into(), 2.into()) {
        p_s_numerator_inner(ci, cj)
    } else {
        p_s_numerator_outer(ci, cj)
    };
    Ok(num / (norm(ci) * norm(cj)))
}

/// `p_T` for the star with two pads of the same proportion `c`.
pub fn p_t_star_closed(c: &Q) -> Result<Q, LtdError> {
    check_unit("c", c)?;
    let half = Q::new(1.into(), 2.into());
    let num = if c <= &half {
        q(8) * c * c * (&half - c) + Q::new(14.into(), 3.into()) * c * c * c
    } else {
        q(2) * c - q(1) + Q::new(2.into(), 3.into()) * (q(1) - c * c * c)
    };
    let d = norm(c);
    Ok(num / (&d * &d))
}

/// Limit of `E (1/n) tr D^m` for the degree matrix `D` of a proportional
/// band matrix with proportion `c`; odd orders vanish.
pub fn degree_moment(m: u32, c: &Q) -> Result<Q, LtdError> {
    check_unit("c", c)?;
    if m % 2 == 1 {
        return Ok(Q::zero());
    }
    let l = m / 2;
    let wide = (q(2) * c).min(Q::one());
    let pow = |x: &Q, k: u32| (0..k).fold(Q::one(), |acc, _| acc * x);
    let double_fact: Q = (1..m as i64).step_by(2).map(q).product();
    let spread = (q(2) * c - q(1)).abs();
    let body =
        q(2) / q(l as i64 + 1) * (pow(&wide, l + 1) - pow(c, l + 1)) + spread * pow(&wide, l);
    Ok(double_fact * body / pow(&norm(c), l))
}
