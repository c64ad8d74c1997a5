use std::collections::BTreeMap;

use rand::Rng;

use crate::band::BandProfile;
use crate::entries::EntrySpec;
use crate::error::EnsembleError;
use crate::haar::sample_haar_orthogonal;
use crate::matrix::Matrix;
use crate::sample::{markov, sample_rbm, stream_rng};

/// How one labeled matrix is drawn.
#[derive(Clone, Debug, PartialEq)]
pub enum MatrixModel {
    /// A normalized band matrix.
    Band {
        profile: BandProfile,
        entries: EntrySpec,
    },
    /// `p·W + q·deg(W)` for a band matrix `W`; `p = 0, q = 1` is the degree matrix.
    Markov {
        p: f64,
        q: f64,
        profile: BandProfile,
        entries: EntrySpec,
    },
    HaarOrthogonal,
}

impl MatrixModel {
    pub fn sample<R: Rng + ?Sized>(&self, n: usize, rng: &mut R) -> Result<Matrix, EnsembleError> {
        match self {
            MatrixModel::Band { profile, entries } => sample_rbm(n, profile, entries, rng),
            MatrixModel::Markov {
                p,
                q,
                profile,
                entries,
            } => Ok(markov(*p, *q, &sample_rbm(n, profile, entries, rng)?)),
            MatrixModel::HaarOrthogonal => Ok(sample_haar_orthogonal(n, rng)),
        }
    }
}

/// Independent matrices, one per label.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Ensemble {
    models: BTreeMap<String, MatrixModel>,
}

impl Ensemble {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, label: &str, model: MatrixModel) -> Self {
        self.models.insert(label.to_string(), model);
        self
    }

    pub fn models(&self) -> &BTreeMap<String, MatrixModel> {
        &self.models
    }

    /// Sample `index` of a run: labels are drawn in sorted order from the
    /// stream for `(seed, index)`.
    pub fn sample(
        &self,
        n: usize,
        seed: u64,
        index: u64,
    ) -> Result<BTreeMap<String, Matrix>, EnsembleError> {
        let mut rng = stream_rng(seed, index);
        self.models
            .iter()
            .map(|(l, m)| Ok((l.clone(), m.sample(n, &mut rng)?)))
            .collect()
    }
}
