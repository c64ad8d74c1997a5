use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::band::{normalization, BandProfile};
use crate::entries::EntrySpec;
use crate::error::EnsembleError;
use crate::matrix::Matrix;

/// The generator for sample `index` of a run seeded with `seed`.
pub fn stream_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

fn fill_hermitian<R: Rng + ?Sized>(
    n: usize,
    spec: &EntrySpec,
    rng: &mut R,
    scale: f64,
    keep: impl Fn(usize, usize) -> bool,
) -> Matrix {
    let mut re = vec![0.0; n * n];
    let mut im = if spec.is_real() {
        None
    } else {
        Some(vec![0.0; n * n])
    };
    for i in 0..n {
        if keep(i, i) {
            re[i * n + i] = scale * spec.sample_diag(rng);
        }
        for j in i + 1..n {
            if !keep(i, j) {
                continue;
            }
            let x = spec.sample_offdiag(rng) * scale;
            re[i * n + j] = x.re;
            re[j * n + i] = x.re;
            if let Some(im) = im.as_mut() {
                im[i * n + j] = x.im;
                im[j * n + i] = -x.im;
            }
        }
    }
    match im {
        Some(im) => Matrix::from_parts(n, re, im),
        None => Matrix::from_real(n, re),
    }
}

/// Unnormalized Wigner matrix: independent entries on and above the
/// diagonal, filled in Hermitian.
pub fn sample_wigner<R: Rng + ?Sized>(n: usize, spec: &EntrySpec, rng: &mut R) -> Matrix {
    fill_hermitian(n, spec, rng, 1.0, |_, _| true)
}

/// Band matrix: Wigner entries inside the band, zero outside, multiplied by
/// the profile's normalization.
pub fn sample_rbm<R: Rng + ?Sized>(
    n: usize,
    profile: &BandProfile,
    spec: &EntrySpec,
    rng: &mut R,
) -> Result<Matrix, EnsembleError> {
    let scale = normalization(profile, n)?;
    Ok(fill_hermitian(n, spec, rng, scale, |i, j| {
        profile.contains(n, i, j)
    }))
}

/// Diagonal matrix of row sums.
pub fn degree_matrix(a: &Matrix) -> Matrix {
    Matrix::diagonal(&a.row_sums())
}

/// `p·W + q·deg(W)`.
pub fn markov(p: f64, q: f64, w: &Matrix) -> Matrix {
    w.lin_comb(p, &degree_matrix(w), q).expect("same dimension")
}
