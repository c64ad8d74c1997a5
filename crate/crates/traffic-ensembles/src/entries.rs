use num_complex::Complex64;
use rand::Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::error::EnsembleError;

const MOMENT_TOLERANCE: f64 = 1e-9;

/// A real law with mean 0 and variance 1.
#[derive(Clone, Debug, PartialEq)]
pub enum EntryLaw {
    Gaussian,
    /// Uniform on {−1, 1}.
    Rademacher,
    /// Finite support with the given probabilities.
    Discrete {
        values: Vec<f64>,
        weights: Vec<f64>,
    },
}

impl EntryLaw {
    /// A discrete law, checked for positive weights summing to one.
    pub fn discrete(values: Vec<f64>, weights: Vec<f64>) -> Result<Self, EnsembleError> {
        if values.len() != weights.len() || values.is_empty() {
            return Err(EnsembleError::MalformedLaw(
                "values and weights differ in length".into(),
            ));
        }
        if weights
            .iter()
            .any(|&w| w.partial_cmp(&0.0).is_none_or(|o| o.is_lt()))
            || (weights.iter().sum::<f64>() - 1.0).abs() > MOMENT_TOLERANCE
        {
            return Err(EnsembleError::MalformedLaw(
                "weights must be non-negative and sum to 1".into(),
            ));
        }
        Ok(EntryLaw::Discrete { values, weights })
    }

    /// `E X^k`.
    pub fn moment(&self, k: u32) -> f64 {
        match self {
            EntryLaw::Gaussian => {
                if k % 2 == 1 {
                    0.0
                } else {
                    (1..k).step_by(2).map(f64::from).product()
                }
            }
            EntryLaw::Rademacher => f64::from(u8::from(k.is_multiple_of(2))),
            EntryLaw::Discrete { values, weights } => values
                .iter()
                .zip(weights)
                .map(|(v, w)| w * v.powi(k as i32))
                .sum(),
        }
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        match self {
            EntryLaw::Gaussian => StandardNormal.sample(rng),
            EntryLaw::Rademacher => {
                if rng.random_bool(0.5) {
                    1.0
                } else {
                    -1.0
                }
            }
            EntryLaw::Discrete { values, weights } => {
                let u: f64 = rng.random();
                let mut acc = 0.0;
                for (v, w) in values.iter().zip(weights) {
                    acc += w;
                    if u < acc {
                        return *v;
                    }
                }
                *values.last().unwrap()
            }
        }
    }

    fn check_standardized(&self) -> Result<(), EnsembleError> {
        let (mean, variance) = (self.moment(1), self.moment(2));
        if mean.abs() > MOMENT_TOLERANCE || (variance - 1.0).abs() > MOMENT_TOLERANCE {
            return Err(EnsembleError::NotStandardized { mean, variance });
        }
        Ok(())
    }
}

/// Entry distribution of a Wigner-type matrix.
///
/// An off-diagonal entry is `L·(Z₁, Z₂)` read as `Re + i·Im`, where `Z₁, Z₂`
/// are independent copies of `offdiag` and `L` is the Cholesky factor of the
/// real/imaginary covariance fixed by `beta`. With `beta = 1` the entry is
/// `Z₁` itself. Diagonal entries are real draws from `diag`.
#[derive(Clone, Debug, PartialEq)]
pub struct EntrySpec {
    offdiag: EntryLaw,
    diag: EntryLaw,
    beta: Complex64,
    chol: [f64; 3],
}

impl EntrySpec {
    pub fn new(offdiag: EntryLaw, diag: EntryLaw, beta: Complex64) -> Result<Self, EnsembleError> {
        if beta.norm() > 1.0 + 1e-12 {
            return Err(EnsembleError::InvalidBeta(beta));
        }
        offdiag.check_standardized()?;
        let var_re = (1.0 + beta.re) / 2.0;
        let var_im = (1.0 - beta.re) / 2.0;
        let cov = beta.im / 2.0;
        let l11 = var_re.sqrt();
        let l21 = if l11 > 0.0 { cov / l11 } else { 0.0 };
        let l22 = (var_im - l21 * l21).max(0.0).sqrt();
        Ok(EntrySpec {
            offdiag,
            diag,
            beta,
            chol: [l11, l21, l22],
        })
    }

    /// Off-diagonal and diagonal entries from the same law.
    pub fn with_law(law: EntryLaw, beta: Complex64) -> Result<Self, EnsembleError> {
        Self::new(law.clone(), law, beta)
    }

    pub fn real_gaussian() -> Self {
        Self::with_law(EntryLaw::Gaussian, Complex64::new(1.0, 0.0)).unwrap()
    }

    /// Complex Gaussian entries with pseudo-variance `beta`.
    pub fn gaussian(beta: Complex64) -> Result<Self, EnsembleError> {
        Self::with_law(EntryLaw::Gaussian, beta)
    }

    pub fn offdiag(&self) -> &EntryLaw {
        &self.offdiag
    }

    pub fn diag(&self) -> &EntryLaw {
        &self.diag
    }

    pub fn beta(&self) -> Complex64 {
        self.beta
    }

    pub fn is_real(&self) -> bool {
        self.beta == Complex64::new(1.0, 0.0)
    }

    pub fn sample_offdiag<R: Rng + ?Sized>(&self, rng: &mut R) -> Complex64 {
        let z1 = self.offdiag.sample(rng);
        if self.is_real() {
            return Complex64::new(z1, 0.0);
        }
        let z2 = self.offdiag.sample(rng);
        let [l11, l21, l22] = self.chol;
        Complex64::new(l11 * z1, l21 * z1 + l22 * z2)
    }

    pub fn sample_diag<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        self.diag.sample(rng)
    }
}
