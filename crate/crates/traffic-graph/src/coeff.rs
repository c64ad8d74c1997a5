//! Exact complex-rational coefficients.

use num_bigint::BigInt;
use num_complex::{Complex, Complex64};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

/// Exact Gaussian-rational scalar used for polynomial coefficients and
/// exact limit values.
pub type Coeff = Complex<BigRational>;

/// Exact rational from an integer.
pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Exact rational `num / den`. Panics if `den` is zero.
pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Real coefficient from an exact rational.
pub fn real(r: BigRational) -> Coeff {
    Complex::new(r, BigRational::zero())
}

/// Coefficient from an integer.
pub fn from_int(n: i64) -> Coeff {
    real(rat(n))
}

/// The unit coefficient.
pub fn one() -> Coeff {
    Complex::new(BigRational::one(), BigRational::zero())
}

/// The zero coefficient.
pub fn zero() -> Coeff {
    Complex::new(BigRational::zero(), BigRational::zero())
}

/// Exact rational image of a finite float (every finite `f64` is a dyadic
/// rational). Returns `None` for NaN or infinities.
pub fn rational_from_f64(x: f64) -> Option<BigRational> {
    BigRational::from_float(x)
}

/// Exact coefficient from a finite complex float.
pub fn from_c64(z: Complex64) -> Option<Coeff> {
    Some(Complex::new(
        rational_from_f64(z.re)?,
        rational_from_f64(z.im)?,
    ))
}

/// Nearest floating value of an exact rational.
pub fn rational_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Nearest floating value of an exact coefficient.
pub fn to_c64(c: &Coeff) -> Complex64 {
    Complex64::new(rational_to_f64(&c.re), rational_to_f64(&c.im))
}

/// Largest decimal exponent accepted by [`parse_decimal`].
pub const MAX_EXPONENT: u32 = 4096;

/// Parses a decimal literal such as `-0.25`, `3`, or `1.5e-2` exactly.
pub fn parse_decimal(text: &str) -> Option<BigRational> {
    let t = text.trim();
    if t.is_empty() {
        return None;
    }
    let (mantissa, exponent) = match t.find(['e', 'E']) {
        Some(pos) => (&t[..pos], t[pos + 1..].parse::<i32>().ok()?),
        None => (t, 0),
    };
    if exponent.unsigned_abs() > MAX_EXPONENT {
        return None;
    }
    let (negative, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = match digits.split_once('.') {
        Some((a, b)) => (a, b),
        None => (digits, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part
        .chars()
        .chain(frac_part.chars())
        .all(|c| c.is_ascii_digit())
    {
        return None;
    }
    let joined = format!("{int_part}{frac_part}");
    let numer: BigInt = joined.parse().ok()?;
    let scale = exponent - frac_part.len() as i32;
    let ten = BigInt::from(10);
    let mut value = BigRational::from_integer(numer);
    if scale >= 0 {
        value *= BigRational::from_integer(num_traits::pow(ten, scale as usize));
    } else {
        value /= BigRational::from_integer(num_traits::pow(ten, (-scale) as usize));
    }
    Some(if negative { -value } else { value })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decimals_parse_exactly() {
        assert_eq!(parse_decimal("0.5"), Some(ratio(1, 2)));
        assert_eq!(parse_decimal("-1.25"), Some(ratio(-5, 4)));
        assert_eq!(parse_decimal("3"), Some(rat(3)));
        assert_eq!(parse_decimal("2.5e-1"), Some(ratio(1, 4)));
        assert_eq!(parse_decimal(".5"), Some(ratio(1, 2)));
        assert_eq!(parse_decimal("1e999999"), None);
        assert_eq!(parse_decimal("1e3"), Some(rat(1000)));
        assert_eq!(parse_decimal("abc"), None);
        assert_eq!(parse_decimal("-"), None);
        assert_eq!(parse_decimal(""), None);
    }

    #[test]
    fn float_round_trip() {
        let c = from_c64(Complex64::new(0.25, -3.0)).unwrap();
        assert_eq!(to_c64(&c), Complex64::new(0.25, -3.0));
        assert!(from_c64(Complex64::new(f64::NAN, 0.0)).is_none());
    }
}
