use nalgebra::DMatrix;
use rand::Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::matrix::Matrix;

/// Haar-distributed orthogonal matrix: QR of a real Gaussian matrix, with
/// the columns of `Q` flipped so that `R` has a positive diagonal.
pub fn sample_haar_orthogonal<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Matrix {
    let g = DMatrix::<f64>::from_fn(n, n, |_, _| StandardNormal.sample(rng));
    let qr = g.qr();
    let r = qr.r();
    let mut q = qr.q();
    for j in 0..n {
        if r[(j, j)] < 0.0 {
            q.column_mut(j).neg_mut();
        }
    }
    let mut re = vec![0.0; n * n];
    for i in 0..n {
        for j in 0..n {
            re[i * n + j] = q[(i, j)];
        }
    }
    Matrix::from_real(n, re)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample::stream_rng;

    #[test]
    fn is_orthogonal() {
        let q = sample_haar_orthogonal(40, &mut stream_rng(9, 0));
        assert!(q.orthogonality_defect() < 1e-10);
    }
}
