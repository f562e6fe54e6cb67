//! Dense complex linear algebra for the tiny systems this crate solves
//! (gluing systems have at most a handful of rows). Householder QR for
//! least-squares Newton steps, full-pivot elimination for kernel directions.

use num_complex::Complex;
use num_traits::Zero;

use crate::scalar::Scalar;

/// Row-major dense complex matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct CMat<T> {
    rows: usize,
    cols: usize,
    data: Vec<Complex<T>>,
}

impl<T: Scalar> CMat<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![Complex::zero(); rows * cols] }
    }

    pub fn from_rows(rows: &[Vec<Complex<T>>]) -> Self {
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        Self { rows: rows.len(), cols: ncols, data: rows.concat() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Complex<T> {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Complex<T>) {
        self.data[i * self.cols + j] = v;
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, x: &[Complex<T>]) -> Vec<Complex<T>> {
        assert_eq!(x.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = Complex::zero();
                for j in 0..self.cols {
                    acc = acc + self.get(i, j) * x[j];
                }
                acc
            })
            .collect()
    }
}

/// Least-squares solution of `A x = b` (`rows >= cols`) by Householder QR.
/// Rank deficiency up to roundoff is tolerated: negligible pivots yield a
/// zero component in that back-substitution slot.
pub fn lstsq<T: Scalar>(a: &CMat<T>, b: &[Complex<T>]) -> Vec<Complex<T>> {
    let (m, n) = (a.rows(), a.cols());
    assert!(m >= n, "least squares expects rows >= cols");
    assert_eq!(b.len(), m);
    let mut r = a.clone();
    let mut rhs = b.to_vec();

    for k in 0..n {
        // Householder vector for column k below the diagonal.
        let mut norm_sq = T::zero();
        for i in k..m {
            norm_sq = norm_sq + r.get(i, k).norm_sqr();
        }
        let norm = norm_sq.sqrt();
        if norm.is_zero() {
            continue;
        }
        let x_kk = r.get(k, k);
        let phase = if x_kk.norm().is_zero() {
            Complex::new(T::one(), T::zero())
        } else {
            x_kk / Complex::new(x_kk.norm(), T::zero())
        };
        let alpha = -phase * norm;
        let mut v: Vec<Complex<T>> = (k..m).map(|i| r.get(i, k)).collect();
        v[0] = v[0] - alpha;
        let v_norm_sq: T = v.iter().map(|c| c.norm_sqr()).fold(T::zero(), |s, t| s + t);
        if v_norm_sq.is_zero() {
            continue;
        }
        let scale = T::of(2.0) / v_norm_sq;
        // Apply reflector to remaining columns and the right-hand side.
        for j in k..n {
            let mut dot = Complex::zero();
            for (idx, i) in (k..m).enumerate() {
                dot = dot + v[idx].conj() * r.get(i, j);
            }
            let dot = dot * scale;
            for (idx, i) in (k..m).enumerate() {
                let val = r.get(i, j) - v[idx] * dot;
                r.set(i, j, val);
            }
        }
        let mut dot = Complex::zero();
        for (idx, i) in (k..m).enumerate() {
            dot = dot + v[idx].conj() * rhs[i];
        }
        let dot = dot * scale;
        for (idx, i) in (k..m).enumerate() {
            rhs[i] = rhs[i] - v[idx] * dot;
        }
    }

    // Back substitution on the upper-triangular block.
    let mut x = vec![Complex::zero(); n];
    let tiny = T::of(1e-300);
    for k in (0..n).rev() {
        let mut acc = rhs[k];
        for j in k + 1..n {
            acc = acc - r.get(k, j) * x[j];
        }
        let piv = r.get(k, k);
        x[k] = if piv.norm() > tiny { acc / piv } else { Complex::zero() };
    }
    x
}

/// One-dimensional kernel direction of a square matrix of rank `n - 1`,
/// found by full-pivot Gaussian elimination. Returns `None` when the
/// smallest pivot is not clearly separated (kernel not one-dimensional).
pub fn kernel_vector<T: Scalar>(a: &CMat<T>, rel_tol: T) -> Option<Vec<Complex<T>>> {
    let n = a.rows();
    assert_eq!(n, a.cols(), "kernel_vector expects a square matrix");
    let mut m = a.clone();
    let mut col_perm: Vec<usize> = (0..n).collect();
    let mut max_piv = T::zero();

    for k in 0..n {
        // Full pivot search over the trailing block.
        let (mut pi, mut pj, mut pv) = (k, k, T::zero());
        for i in k..n {
            for j in k..n {
                let mag = m.get(i, j).norm();
                if mag > pv {
                    (pi, pj, pv) = (i, j, mag);
                }
            }
        }
        if k == 0 {
            max_piv = pv;
        }
        if k == n - 1 {
            // Rank n-1 demands the last pivot be negligible.
            if pv > rel_tol * max_piv {
                return None;
            }
            break;
        }
        if pv.is_zero() {
            return None; // rank < n-1: kernel not one-dimensional
        }
        if pi != k {
            for j in 0..n {
                let (x, y) = (m.get(k, j), m.get(pi, j));
                m.set(k, j, y);
                m.set(pi, j, x);
            }
        }
        if pj != k {
            for i in 0..n {
                let (x, y) = (m.get(i, k), m.get(i, pj));
                m.set(i, k, y);
                m.set(i, pj, x);
            }
            col_perm.swap(k, pj);
        }
        for i in k + 1..n {
            let factor = m.get(i, k) / m.get(k, k);
            for j in k..n {
                let val = m.get(i, j) - factor * m.get(k, j);
                m.set(i, j, val);
            }
        }
    }

    // Back-substitute with the free variable pinned to 1.
    let mut y = vec![Complex::zero(); n];
    y[n - 1] = Complex::new(T::one(), T::zero());
    for k in (0..n - 1).rev() {
        let mut acc = Complex::zero();
        for j in k + 1..n {
            acc = acc + m.get(k, j) * y[j];
        }
        y[k] = -acc / m.get(k, k);
    }
    let mut out = vec![Complex::zero(); n];
    for (k, &orig) in col_perm.iter().enumerate() {
        out[orig] = y[k];
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Cplx;

    fn c(re: f64, im: f64) -> Cplx {
        Cplx::new(re, im)
    }

    #[test]
    fn lstsq_exact_square() {
        let a = CMat::from_rows(&[
            vec![c(2.0, 0.0), c(1.0, -1.0)],
            vec![c(0.0, 1.0), c(3.0, 0.5)],
        ]);
        let x_true = vec![c(1.0, 2.0), c(-0.5, 0.25)];
        let b = a.mul_vec(&x_true);
        let x = lstsq(&a, &b);
        for (got, want) in x.iter().zip(&x_true) {
            assert!((got - want).norm() < 1e-13);
        }
    }

    #[test]
    fn lstsq_overdetermined_consistent() {
        // Duplicate a row: consistent overdetermined system.
        let a = CMat::from_rows(&[
            vec![c(1.0, 0.0), c(2.0, 0.0)],
            vec![c(0.0, 1.0), c(1.0, 1.0)],
            vec![c(1.0, 0.0), c(2.0, 0.0)],
        ]);
        let x_true = vec![c(3.0, -1.0), c(0.5, 0.5)];
        let b = a.mul_vec(&x_true);
        let x = lstsq(&a, &b);
        for (got, want) in x.iter().zip(&x_true) {
            assert!((got - want).norm() < 1e-13);
        }
    }

    #[test]
    fn kernel_of_rank_deficient_matrix() {
        // Rows: (1, 2+i, 0), (0, 0, 1), and their sum -> rank 2.
        let r1 = vec![c(1.0, 0.0), c(2.0, 1.0), c(0.0, 0.0)];
        let r2 = vec![c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)];
        let r3: Vec<Cplx> = r1.iter().zip(&r2).map(|(a, b)| a + b).collect();
        let a = CMat::from_rows(&[r1, r2, r3]);
        let k = kernel_vector(&a, 1e-10).expect("one-dimensional kernel");
        let residual = a.mul_vec(&k);
        let norm: f64 = k.iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt();
        assert!(norm > 0.5);
        for r in residual {
            assert!(r.norm() < 1e-12 * norm);
        }
    }

    #[test]
    fn kernel_rejects_full_rank() {
        let a = CMat::from_rows(&[
            vec![c(1.0, 0.0), c(0.0, 0.0)],
            vec![c(0.0, 0.0), c(1.0, 0.0)],
        ]);
        assert!(kernel_vector(&a, 1e-10).is_none());
    }
}
