use num_complex::Complex64;

use crate::error::EnsembleError;

/// Dense square matrix, row-major, with the imaginary part stored separately
/// and omitted when the matrix is real.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix {
    n: usize,
    re: Vec<f64>,
    im: Option<Vec<f64>>,
}

impl Matrix {
    pub fn zeros(n: usize) -> Self {
        Matrix {
            n,
            re: vec![0.0; n * n],
            im: None,
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.re[i * n + i] = 1.0;
        }
        m
    }

    pub fn from_real(n: usize, re: Vec<f64>) -> Self {
        assert_eq!(re.len(), n * n, "buffer length must be n²");
        Matrix { n, re, im: None }
    }

    /// Builds a complex matrix. An all-zero imaginary part is dropped.
    pub fn from_parts(n: usize, re: Vec<f64>, im: Vec<f64>) -> Self {
        assert_eq!(re.len(), n * n, "buffer length must be n²");
        assert_eq!(im.len(), n * n, "buffer length must be n²");
        let im = if im.iter().all(|&x| x == 0.0) {
            None
        } else {
            Some(im)
        };
        Matrix { n, re, im }
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut re = vec![0.0; n * n];
        let mut im = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                let z = f(i, j);
                re[i * n + j] = z.re;
                im[i * n + j] = z.im;
            }
        }
        Self::from_parts(n, re, im)
    }

    pub fn diagonal(d: &[Complex64]) -> Self {
        let n = d.len();
        Self::from_fn(n, |i, j| {
            if i == j {
                d[i]
            } else {
                Complex64::new(0.0, 0.0)
            }
        })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn is_real(&self) -> bool {
        self.im.is_none()
    }

    pub fn re(&self) -> &[f64] {
        &self.re
    }

    pub fn im(&self) -> Option<&[f64]> {
        self.im.as_deref()
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        let k = i * self.n + j;
        Complex64::new(self.re[k], self.im.as_ref().map_or(0.0, |v| v[k]))
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let t = |v: &[f64]| {
            let mut out = vec![0.0; n * n];
            for i in 0..n {
                for j in 0..n {
                    out[j * n + i] = v[i * n + j];
                }
            }
            out
        };
        Matrix {
            n,
            re: t(&self.re),
            im: self.im.as_deref().map(t),
        }
    }

    pub fn conj(&self) -> Self {
        Matrix {
            n: self.n,
            re: self.re.clone(),
            im: self.im.as_ref().map(|v| v.iter().map(|x| -x).collect()),
        }
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        self.transpose().conj()
    }

    pub fn scale(&self, s: f64) -> Self {
        Matrix {
            n: self.n,
            re: self.re.iter().map(|x| x * s).collect(),
            im: self.im.as_ref().map(|v| v.iter().map(|x| x * s).collect()),
        }
    }

    /// `a·self + b·other`.
    pub fn lin_comb(&self, a: f64, other: &Matrix, b: f64) -> Result<Self, EnsembleError> {
        self.check_dim(other)?;
        let re = self
            .re
            .iter()
            .zip(&other.re)
            .map(|(x, y)| a * x + b * y)
            .collect();
        let im = match (&self.im, &other.im) {
            (None, None) => None,
            (x, y) => {
                let z = vec![0.0; self.n * self.n];
                let x = x.as_deref().unwrap_or(&z);
                let y = y.as_deref().unwrap_or(&z);
                Some(x.iter().zip(y).map(|(x, y)| a * x + b * y).collect())
            }
        };
        Ok(Matrix { n: self.n, re, im })
    }

    /// Entrywise product.
    pub fn hadamard(&self, other: &Matrix) -> Result<Self, EnsembleError> {
        self.check_dim(other)?;
        let re_re: Vec<f64> = self.re.iter().zip(&other.re).map(|(a, b)| a * b).collect();
        Ok(match (&self.im, &other.im) {
            (None, None) => Matrix {
                n: self.n,
                re: re_re,
                im: None,
            },
            (Some(ai), None) => {
                let im = ai.iter().zip(&other.re).map(|(a, b)| a * b).collect();
                Matrix::from_parts(self.n, re_re, im)
            }
            (None, Some(bi)) => {
                let im = self.re.iter().zip(bi).map(|(a, b)| a * b).collect();
                Matrix::from_parts(self.n, re_re, im)
            }
            (Some(ai), Some(bi)) => {
                let mut re = re_re;
                let mut im = vec![0.0; re.len()];
                for k in 0..re.len() {
                    re[k] -= ai[k] * bi[k];
                    im[k] = self.re[k] * bi[k] + ai[k] * other.re[k];
                }
                Matrix::from_parts(self.n, re, im)
            }
        })
    }

    /// `A · diag(w)`.
    pub fn scale_columns(&self, w: &[Complex64]) -> Self {
        let n = self.n;
        let real_w = w.iter().all(|z| z.im == 0.0);
        if self.im.is_none() && real_w {
            let mut re = self.re.clone();
            for row in re.chunks_mut(n) {
                row.iter_mut().zip(w).for_each(|(x, z)| *x *= z.re);
            }
            return Matrix { n, re, im: None };
        }
        let mut re = vec![0.0; n * n];
        let mut im = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                let z = self.get(i, j) * w[j];
                re[i * n + j] = z.re;
                im[i * n + j] = z.im;
            }
        }
        Matrix::from_parts(n, re, im)
    }

    /// `A · w`.
    pub fn mul_vec(&self, w: &[Complex64]) -> Vec<Complex64> {
        let n = self.n;
        (0..n)
            .map(|i| {
                let row_re = &self.re[i * n..(i + 1) * n];
                let mut acc = Complex64::new(0.0, 0.0);
                match &self.im {
                    None => row_re.iter().zip(w).for_each(|(a, z)| acc += z * *a),
                    Some(im) => {
                        let row_im = &im[i * n..(i + 1) * n];
                        for j in 0..n {
                            acc += Complex64::new(row_re[j], row_im[j]) * w[j];
                        }
                    }
                }
                acc
            })
            .collect()
    }

    /// Column `j` as a vector.
    pub fn column(&self, j: usize) -> Vec<Complex64> {
        (0..self.n).map(|i| self.get(i, j)).collect()
    }

    /// The diagonal as a vector.
    pub fn diag(&self) -> Vec<Complex64> {
        (0..self.n).map(|i| self.get(i, i)).collect()
    }

    /// Sum of all entries.
    pub fn sum(&self) -> Complex64 {
        Complex64::new(
            self.re.iter().sum(),
            self.im.as_ref().map_or(0.0, |v| v.iter().sum()),
        )
    }

    /// Matrix product through a blocked real kernel; complex products use
    /// four real ones.
    pub fn matmul(&self, other: &Matrix) -> Result<Self, EnsembleError> {
        self.check_dim(other)?;
        let n = self.n;
        let re = gemm(n, &self.re, &other.re, None);
        match (&self.im, &other.im) {
            (None, None) => Ok(Matrix { n, re, im: None }),
            (Some(ai), None) => Ok(Self::from_parts(n, re, gemm(n, ai, &other.re, None))),
            (None, Some(bi)) => Ok(Self::from_parts(n, re, gemm(n, &self.re, bi, None))),
            (Some(ai), Some(bi)) => {
                let mut re = re;
                let sub = gemm(n, ai, bi, None);
                re.iter_mut().zip(&sub).for_each(|(r, s)| *r -= s);
                let im = gemm(n, &self.re, bi, None);
                let im = gemm(n, ai, &other.re, Some(im));
                Ok(Self::from_parts(n, re, im))
            }
        }
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    /// Row sums.
    pub fn row_sums(&self) -> Vec<Complex64> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j)).sum())
            .collect()
    }

    /// `P A Pᵀ` for the permutation matrix sending basis vector `i` to
    /// `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n);
        let n = self.n;
        let mut re = vec![0.0; n * n];
        let mut im = self.im.as_ref().map(|_| vec![0.0; n * n]);
        for i in 0..n {
            for j in 0..n {
                let k = perm[i] * n + perm[j];
                re[k] = self.re[i * n + j];
                if let (Some(dst), Some(src)) = (im.as_mut(), self.im.as_ref()) {
                    dst[k] = src[i * n + j];
                }
            }
        }
        Matrix { n, re, im }
    }

    /// Largest entry of `|A − A*|`.
    pub fn hermitian_defect(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..self.n {
            for j in 0..=i {
                worst = worst.max((self.get(i, j) - self.get(j, i).conj()).norm());
            }
        }
        worst
    }

    /// Largest entry of `|AᵀA − I|`.
    pub fn orthogonality_defect(&self) -> f64 {
        let p = self.transpose().matmul(self).expect("same dimension");
        let mut worst: f64 = 0.0;
        for i in 0..self.n {
            for j in 0..self.n {
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((p.get(i, j) - target).norm());
            }
        }
        worst
    }

    fn check_dim(&self, other: &Matrix) -> Result<(), EnsembleError> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(EnsembleError::DimensionMismatch(self.n, other.n))
        }
    }
}

/// `C (+)= A·B` for row-major `n×n` real buffers.
fn gemm(n: usize, a: &[f64], b: &[f64], acc: Option<Vec<f64>>) -> Vec<f64> {
    let (mut out, beta) = match acc {
        Some(c) => (c, 1.0),
        None => (vec![0.0; n * n], 0.0),
    };
    let s = n as isize;
    // SAFETY: all three buffers hold n*n elements laid out row-major with
    // row stride n and column stride 1.
    unsafe {
        matrixmultiply::dgemm(
            n,
            n,
            n,
            1.0,
            a.as_ptr(),
            s,
            1,
            b.as_ptr(),
            s,
            1,
            beta,
            out.as_mut_ptr(),
            s,
            1,
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive(a: &Matrix, b: &Matrix) -> Matrix {
        let n = a.dim();
        Matrix::from_fn(n, |i, j| (0..n).map(|k| a.get(i, k) * b.get(k, j)).sum())
    }

    #[test]
    fn complex_product_matches_naive() {
        let a = Matrix::from_fn(5, |i, j| {
            Complex64::new((i * 3 + j) as f64 * 0.1, (i as f64) - (j as f64))
        });
        let b = Matrix::from_fn(5, |i, j| Complex64::new((i + j * j) as f64, 0.5 * i as f64));
        let r = Matrix::from_fn(5, |i, j| Complex64::new((i + 2 * j) as f64, 0.0));
        for (x, y) in [(&a, &b), (&a, &r), (&r, &b), (&r, &r)] {
            let fast = x.matmul(y).unwrap();
            let slow = naive(x, y);
            for i in 0..5 {
                for j in 0..5 {
                    assert!((fast.get(i, j) - slow.get(i, j)).norm() < 1e-10);
                }
            }
        }
    }

    #[test]
    fn permutation_moves_entries() {
        let a = Matrix::from_fn(3, |i, j| Complex64::new((3 * i + j) as f64, 0.0));
        let p = a.permute(&[2, 0, 1]);
        assert_eq!(p.get(2, 0), a.get(0, 1));
        assert_eq!(p.trace(), a.trace());
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        assert_eq!(
            Matrix::zeros(2).matmul(&Matrix::zeros(3)),
            Err(EnsembleError::DimensionMismatch(2, 3))
        );
    }
}
