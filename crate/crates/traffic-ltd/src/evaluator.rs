use traffic_graph::coeff::real;
use traffic_graph::{Coeff, TestGraph};

use crate::error::LtdError;
use crate::haar::haar_ltd;
use crate::proportional::{rbm_ltd, RegimeAssignment};
use crate::wigner::{ordering_sum_ltd, Betas};

/// An exact limiting injective traffic state.
pub trait LtdEvaluator: Send + Sync {
    fn ltd(&self, t: &TestGraph) -> Result<Coeff, LtdError>;

    /// True when the limit vanishes off colored double trees, so that only
    /// quotients with at most `|E|/2 + 1` vertices contribute.
    fn supported_on_double_trees(&self) -> bool;
}

/// Independent Wigner matrices, any complex `β`.
#[derive(Clone, Debug)]
pub struct WignerLtd {
    pub betas: Betas,
}

impl LtdEvaluator for WignerLtd {
    fn ltd(&self, t: &TestGraph) -> Result<Coeff, LtdError> {
        ordering_sum_ltd(t, &self.betas)
    }

    fn supported_on_double_trees(&self) -> bool {
        true
    }
}

/// Independent band matrices in non-fixed regimes with real `β`.
#[derive(Clone, Debug)]
pub struct RbmLtd {
    pub regimes: RegimeAssignment,
    pub betas: Betas,
}

impl LtdEvaluator for RbmLtd {
    fn ltd(&self, t: &TestGraph) -> Result<Coeff, LtdError> {
        rbm_ltd(t, &self.regimes, &self.betas)
    }

    fn supported_on_double_trees(&self) -> bool {
        true
    }
}

/// A single Haar orthogonal matrix.
#[derive(Clone, Copy, Debug, Default)]
pub struct HaarLtd;

impl LtdEvaluator for HaarLtd {
    fn ltd(&self, t: &TestGraph) -> Result<Coeff, LtdError> {
        haar_ltd(t).map(real)
    }

    fn supported_on_double_trees(&self) -> bool {
        false
    }
}
