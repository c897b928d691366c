//! Symmetric tridiagonal matrices: Sturm counts and bisection eigenvalues.

use num_traits::Float;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct SymTridiagonal<T> {
    diag: Vec<T>,
    off: Vec<T>,
}

impl<T: Float> SymTridiagonal<T> {
    /// `off[i]` couples rows `i` and `i + 1`.
    pub fn new(diag: Vec<T>, off: Vec<T>) -> Result<Self> {
        if diag.is_empty() || off.len() + 1 != diag.len() {
            return Err(Error::InvalidParam(format!(
                "tridiagonal shape mismatch: {} diagonal, {} off-diagonal entries",
                diag.len(),
                off.len()
            )));
        }
        Ok(SymTridiagonal { diag, off })
    }

    pub fn dim(&self) -> usize {
        self.diag.len()
    }

    pub fn diag(&self) -> &[T] {
        &self.diag
    }

    pub fn off(&self) -> &[T] {
        &self.off
    }

    /// Gershgorin interval containing every eigenvalue.
    pub fn gershgorin(&self) -> (T, T) {
        let n = self.diag.len();
        let mut lo = T::infinity();
        let mut hi = T::neg_infinity();
        for i in 0..n {
            let mut r = T::zero();
            if i > 0 {
                r = r + self.off[i - 1].abs();
            }
            if i + 1 < n {
                r = r + self.off[i].abs();
            }
            lo = lo.min(self.diag[i] - r);
            hi = hi.max(self.diag[i] + r);
        }
        (lo, hi)
    }

    /// Number of eigenvalues strictly below `x` (negative pivots of `T - xI`).
    pub fn sturm_count(&self, x: T) -> usize {
        let pivmin = T::min_positive_value().sqrt();
        let mut count = 0;
        let mut q = T::one();
        for i in 0..self.diag.len() {
            q = if i == 0 {
                self.diag[0] - x
            } else {
                let e = self.off[i - 1];
                (self.diag[i] - x) - e * e / q
            };
            if q.abs() < pivmin {
                // zero pivot: treat as x nudged upward
                q = -pivmin;
            }
            if q < T::zero() {
                count += 1;
            }
        }
        count
    }

    /// The `k`-th smallest eigenvalue (0-based) by bisection to relative `rel_tol`.
    pub fn eigenvalue(&self, k: usize, rel_tol: T) -> T {
        assert!(k < self.dim(), "eigenvalue index out of range");
        let (mut lo, mut hi) = self.gershgorin();
        let two = T::one() + T::one();
        for _ in 0..2000 {
            let mid = (lo + hi) / two;
            if mid <= lo || mid >= hi {
                break;
            }
            if self.sturm_count(mid) > k {
                hi = mid;
            } else {
                lo = mid;
            }
            let scale = lo.abs().max(hi.abs());
            if hi - lo <= rel_tol * scale {
                break;
            }
        }
        (lo + hi) / two
    }

    /// The `count` smallest eigenvalues in increasing order.
    pub fn lowest_eigenvalues(&self, count: usize, rel_tol: T) -> Vec<T> {
        (0..count.min(self.dim()))
            .map(|k| self.eigenvalue(k, rel_tol))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonal_matrix_count() {
        let t = SymTridiagonal::new(vec![1.0, 2.0, 3.0], vec![0.0, 0.0]).unwrap();
        assert_eq!(t.sturm_count(2.5), 2);
        assert_eq!(t.sturm_count(0.0), 0);
        assert_eq!(t.sturm_count(3.5), 3);
    }

    #[test]
    fn below_gershgorin_is_zero() {
        let t = SymTridiagonal::new(vec![4.0, -1.0, 2.0, 7.0], vec![1.5, -2.0, 0.3]).unwrap();
        let (lo, hi) = t.gershgorin();
        assert_eq!(t.sturm_count(lo - 1e-9), 0);
        assert_eq!(t.sturm_count(hi + 1e-9), 4);
    }

    #[test]
    fn discrete_laplacian_first_eigenvalue() {
        // eigenvalues of tridiag(-1, 2, -1), n = 10: 4 sin^2(k pi / 22)
        let n = 10;
        let t = SymTridiagonal::new(vec![2.0f64; n], vec![-1.0; n - 1]).unwrap();
        let first = 4.0 * (std::f64::consts::PI / 22.0).sin().powi(2);
        assert_eq!(t.sturm_count(first * (1.0 - 1e-12)), 0);
        assert_eq!(t.sturm_count(first * (1.0 + 1e-12)), 1);
        for (k, ev) in t.lowest_eigenvalues(n, 1e-15).into_iter().enumerate() {
            let want = 4.0 * ((k + 1) as f64 * std::f64::consts::PI / 22.0).sin().powi(2);
            assert!((ev - want).abs() < 1e-13, "k={k}: {ev} vs {want}");
        }
    }

    #[test]
    fn works_in_single_precision() {
        let t = SymTridiagonal::new(vec![2.0f32; 5], vec![-1.0f32; 4]).unwrap();
        let ev = t.eigenvalue(0, 1e-6);
        let want = 4.0 * (std::f32::consts::PI / 12.0).sin().powi(2);
        assert!((ev - want).abs() < 1e-5);
    }

    #[test]
    fn shape_is_checked() {
        assert!(SymTridiagonal::new(vec![1.0], vec![1.0]).is_err());
        assert!(SymTridiagonal::<f64>::new(vec![], vec![]).is_err());
    }
}
