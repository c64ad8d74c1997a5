//! Random matrix ensembles with explicit seeds.
//!
//! Every sampler draws from a caller-supplied generator. [`stream_rng`]
//! derives one independent ChaCha stream per (seed, sample index), so
//! samples can be produced in any order or in parallel and still come out
//! identical.
//!
//! ```
//! use traffic_ensembles::{sample_rbm, stream_rng, BandProfile, EntrySpec};
//!
//! let spec = EntrySpec::real_gaussian();
//! let a = sample_rbm(50, &BandProfile::Fixed(2), &spec, &mut stream_rng(7, 0)).unwrap();
//! assert!(a.hermitian_defect() == 0.0);
//! assert_eq!(a.get(0, 10).re, 0.0);
//! ```

mod band;
mod entries;
mod error;
mod haar;
mod matrix;
mod model;
mod sample;

pub use band::{band_mask, normalization, BandProfile, BandWidth};
pub use entries::{EntryLaw, EntrySpec};
pub use error::EnsembleError;
pub use haar::sample_haar_orthogonal;
pub use matrix::Matrix;
pub use model::{Ensemble, MatrixModel};
pub use sample::{degree_matrix, markov, sample_rbm, sample_wigner, stream_rng};
