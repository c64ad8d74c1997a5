use std::fmt;
use std::str::FromStr;

use crate::error::EnsembleError;
use crate::matrix::Matrix;

/// Band width as a function of the dimension.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum BandWidth {
    Constant(usize),
    /// `⌊scale · n^exponent⌋`, at least 1.
    Power {
        scale: f64,
        exponent: f64,
    },
}

impl BandWidth {
    pub fn at(&self, n: usize) -> usize {
        match *self {
            BandWidth::Constant(b) => b,
            BandWidth::Power { scale, exponent } => {
                ((scale * (n as f64).powf(exponent)).floor() as usize).max(1)
            }
        }
    }
}

/// Band regimes and the matching normalization.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum BandProfile {
    /// No band; normalization `n^{-1/2}`.
    Wigner,
    /// Band covering the whole matrix; same as [`BandProfile::Wigner`].
    Full,
    /// Circular band `|i − j|_n ≤ b(n)`, normalization `(2b)^{-1/2}`.
    Periodic(BandWidth),
    /// Band `|i − j| ≤ b(n)` with `b → ∞` and `b = o(n)`, normalization `(2b)^{-1/2}`.
    Slow(BandWidth),
    /// Band `|i − j| ≤ ⌊cn⌋`, normalization `((2c − c²)n)^{-1/2}`.
    Proportional(f64),
    /// Band `|i − j| ≤ b`, normalization `(2b + 1)^{-1/2}`.
    Fixed(usize),
}

impl BandProfile {
    pub fn validate(&self) -> Result<(), EnsembleError> {
        let bad = |msg: &str| Err(EnsembleError::InvalidProfile(msg.to_string()));
        match *self {
            BandProfile::Proportional(c) if !(c > 0.0 && c < 1.0) => {
                bad("proportion must lie in (0, 1)")
            }
            BandProfile::Slow(BandWidth::Constant(_)) => {
                bad("slow growth needs a width that grows with n")
            }
            BandProfile::Slow(BandWidth::Power { scale, exponent })
                if !(scale > 0.0 && exponent > 0.0 && exponent < 1.0) =>
            {
                bad("slow growth needs scale > 0 and exponent in (0, 1)")
            }
            BandProfile::Periodic(BandWidth::Power { scale, exponent })
                if !(scale > 0.0 && exponent > 0.0 && exponent <= 1.0) =>
            {
                bad("periodic width needs scale > 0 and exponent in (0, 1]")
            }
            BandProfile::Periodic(BandWidth::Constant(0)) => bad("periodic width must be positive"),
            _ => Ok(()),
        }
    }

    /// Half band width at dimension `n`, or `None` when there is no band.
    pub fn width(&self, n: usize) -> Option<usize> {
        match self {
            BandProfile::Wigner | BandProfile::Full => None,
            BandProfile::Periodic(w) | BandProfile::Slow(w) => Some(w.at(n)),
            BandProfile::Proportional(c) => Some((c * n as f64).floor() as usize),
            BandProfile::Fixed(b) => Some(*b),
        }
    }

    /// Whether `(i, j)` lies in the band.
    pub fn contains(&self, n: usize, i: usize, j: usize) -> bool {
        let d = i.abs_diff(j);
        match (self, self.width(n)) {
            (_, None) => true,
            (BandProfile::Periodic(_), Some(b)) => d.min(n - d) <= b,
            (_, Some(b)) => d <= b,
        }
    }
}

/// 0/1 band matrix.
pub fn band_mask(n: usize, profile: &BandProfile) -> Result<Matrix, EnsembleError> {
    profile.validate()?;
    let mut re = vec![0.0; n * n];
    for i in 0..n {
        for j in 0..n {
            if profile.contains(n, i, j) {
                re[i * n + j] = 1.0;
            }
        }
    }
    Ok(Matrix::from_real(n, re))
}

/// Scalar multiplying the masked entries.
pub fn normalization(profile: &BandProfile, n: usize) -> Result<f64, EnsembleError> {
    profile.validate()?;
    let n_f = n as f64;
    Ok(match profile {
        BandProfile::Wigner | BandProfile::Full => n_f.powf(-0.5),
        BandProfile::Periodic(w) | BandProfile::Slow(w) => (2.0 * w.at(n) as f64).powf(-0.5),
        BandProfile::Proportional(c) => ((2.0 * c - c * c) * n_f).powf(-0.5),
        BandProfile::Fixed(b) => (2.0 * *b as f64 + 1.0).powf(-0.5),
    })
}

impl fmt::Display for BandProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = |w: &BandWidth| match w {
            BandWidth::Constant(b) => format!("{b}"),
            BandWidth::Power { scale, exponent } => format!("{scale}:{exponent}"),
        };
        match self {
            BandProfile::Wigner => write!(f, "wigner"),
            BandProfile::Full => write!(f, "full"),
            BandProfile::Periodic(w) => write!(f, "periodic:{}", width(w)),
            BandProfile::Slow(w) => write!(f, "slow:{}", width(w)),
            BandProfile::Proportional(c) => write!(f, "proportional:{c}"),
            BandProfile::Fixed(b) => write!(f, "fixed:{b}"),
        }
    }
}

/// Parses `wigner`, `full`, `fixed:B`, `proportional:C`, `slow:SCALE:EXP`
/// and `periodic:B` or `periodic:SCALE:EXP`.
impl FromStr for BandProfile {
    type Err = EnsembleError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || EnsembleError::InvalidProfile(format!("cannot parse `{s}`"));
        let parts: Vec<&str> = s.trim().split(':').collect();
        let num = |t: &str| t.parse::<f64>().map_err(|_| bad());
        let int = |t: &str| t.parse::<usize>().map_err(|_| bad());
        let profile = match parts.as_slice() {
            ["wigner"] => BandProfile::Wigner,
            ["full"] => BandProfile::Full,
            ["fixed", b] => BandProfile::Fixed(int(b)?),
            ["proportional", c] => BandProfile::Proportional(num(c)?),
            ["slow", sc, ex] => BandProfile::Slow(BandWidth::Power {
                scale: num(sc)?,
                exponent: num(ex)?,
            }),
            ["periodic", b] => BandProfile::Periodic(BandWidth::Constant(int(b)?)),
            ["periodic", sc, ex] => BandProfile::Periodic(BandWidth::Power {
                scale: num(sc)?,
                exponent: num(ex)?,
            }),
            _ => return Err(bad()),
        };
        profile.validate()?;
        Ok(profile)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixed_band_is_tridiagonal() {
        let m = band_mask(5, &BandProfile::Fixed(1)).unwrap();
        for i in 0..5 {
            for j in 0..5 {
                assert_eq!(m.get(i, j).re, if i.abs_diff(j) <= 1 { 1.0 } else { 0.0 });
            }
        }
        assert!(
            (normalization(&BandProfile::Fixed(1), 5).unwrap() - 3f64.powf(-0.5)).abs() < 1e-15
        );
    }

    #[test]
    fn periodic_band_wraps() {
        let m = band_mask(5, &BandProfile::Periodic(BandWidth::Constant(1))).unwrap();
        assert_eq!(m.get(0, 4).re, 1.0);
        assert_eq!(m.get(4, 0).re, 1.0);
        assert_eq!(m.get(0, 2).re, 0.0);
    }

    #[test]
    fn wigner_mask_is_full() {
        let m = band_mask(4, &BandProfile::Wigner).unwrap();
        assert!(m.re().iter().all(|&x| x == 1.0));
        assert_eq!(normalization(&BandProfile::Wigner, 4).unwrap(), 0.5);
    }

    #[test]
    fn parses_and_validates() {
        assert_eq!(
            "proportional:0.5".parse::<BandProfile>().unwrap(),
            BandProfile::Proportional(0.5)
        );
        assert!("proportional:1.5".parse::<BandProfile>().is_err());
        assert!("slow:1:1".parse::<BandProfile>().is_err());
        let p: BandProfile = "slow:2:0.5".parse().unwrap();
        assert_eq!(p.width(100), Some(20));
        assert_eq!(p.to_string().parse::<BandProfile>().unwrap(), p);
    }
}
