//! Finite-difference eigenvalues of the radial operator
//! `-Z'' - Z'/r + (B^2 r^2/4 + B l + l^2/r^2) Z = lambda Z`, `Z(R) = 0`.
//!
//! Independent of the Kummer path: flux-form differences on the staggered
//! grid `r_j = (j - 1/2) h`, `h = R/N`, symmetrised by `sqrt(r_j)`, Sturm
//! bisection for the eigenvalues and Richardson extrapolation in `h^2`.

use num_traits::Float;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::tridiag::SymTridiagonal;

pub const DEFAULT_GRID_POINTS: usize = 4000;
pub const MIN_GRID_POINTS: usize = 200;
pub const MAX_M: usize = 20;
const AGREEMENT: f64 = 1e-3;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleConfig {
    pub grid_points: usize,
    pub richardson_levels: u32,
    pub l: i64,
    pub b: f64,
    pub r: f64,
    pub m_max: usize,
}

impl OracleConfig {
    pub fn new(l: i64, b: f64, r: f64, m_max: usize) -> Self {
        OracleConfig {
            grid_points: DEFAULT_GRID_POINTS,
            richardson_levels: 2,
            l,
            b,
            r,
            m_max,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.grid_points < MIN_GRID_POINTS {
            return Err(Error::InvalidParam(format!(
                "grid_points {} below {MIN_GRID_POINTS}",
                self.grid_points
            )));
        }
        if !(1..=3).contains(&self.richardson_levels) {
            return Err(Error::InvalidParam(format!(
                "richardson_levels {} not in 1..=3",
                self.richardson_levels
            )));
        }
        if self.m_max == 0 || self.m_max > MAX_M {
            return Err(Error::InvalidParam(format!(
                "m_max {} not in 1..={MAX_M}",
                self.m_max
            )));
        }
        if !(self.b > 0.0) || !self.b.is_finite() {
            return Err(Error::InvalidParam(format!(
                "B = {} must be positive",
                self.b
            )));
        }
        if !(self.r > 0.0) || !self.r.is_finite() {
            return Err(Error::InvalidParam(format!(
                "R = {} must be positive",
                self.r
            )));
        }
        Ok(())
    }
}

/// Number of eigenvalues of `matrix` strictly below `lambda`.
pub fn sturm_count<T: Float>(matrix: &SymTridiagonal<T>, lambda: T) -> usize {
    matrix.sturm_count(lambda)
}

fn cast<T: Float>(x: f64) -> T {
    T::from(x).expect("representable constant")
}

/// The symmetric radial matrix on `n` cells.
pub fn radial_matrix<T: Float>(config: &OracleConfig, n: usize) -> Result<SymTridiagonal<T>> {
    let h = cast::<T>(config.r) / cast(n as f64);
    let b = cast::<T>(config.b);
    let l = cast::<T>(config.l as f64);
    let half = cast::<T>(0.5);
    let quarter = cast::<T>(0.25);
    let h2 = h * h;
    let node = |j: usize| (cast::<T>(j as f64) - half) * h;
    let face = |j: usize| cast::<T>(j as f64) * h;
    let mut diag = Vec::with_capacity(n);
    let mut off = Vec::with_capacity(n.saturating_sub(1));
    for j in 1..=n {
        let r = node(j);
        let outer = if j == n {
            // ghost value Z_{N+1} = -Z_N puts the zero on the face r = R
            face(j) + face(j)
        } else {
            face(j)
        };
        let kinetic = (outer + face(j - 1)) / (r * h2);
        let potential = quarter * b * b * r * r + b * l + l * l / (r * r);
        diag.push(kinetic + potential);
        if j < n {
            let r_next = node(j + 1);
            off.push(-face(j) / (h2 * (r * r_next).sqrt()));
        }
    }
    SymTridiagonal::new(diag, off)
}

fn level_eigenvalues<T: Float + Send + Sync>(config: &OracleConfig, n: usize) -> Result<Vec<T>> {
    let matrix = radial_matrix::<T>(config, n)?;
    let rel = T::epsilon() * cast(8.0);
    Ok(matrix.lowest_eigenvalues(config.m_max, rel))
}

/// Lowest `m_max` eigenvalues in the scalar type `T`.
pub fn radial_eigenvalues_fd_in<T: Float + Send + Sync>(config: &OracleConfig) -> Result<Vec<T>> {
    config.validate()?;
    let levels = config.richardson_levels as usize;
    let grids: Vec<usize> = (0..levels).map(|k| config.grid_points << k).collect();
    let raw: Vec<Vec<T>> = grids
        .par_iter()
        .map(|&n| level_eigenvalues::<T>(config, n))
        .collect::<Result<_>>()?;
    let four = cast::<T>(4.0);
    let three = cast::<T>(3.0);
    let sixteen = cast::<T>(16.0);
    let fifteen = cast::<T>(15.0);
    let mut out = Vec::with_capacity(config.m_max);
    #[allow(clippy::needless_range_loop)]
    for i in 0..config.m_max {
        let value = match levels {
            1 => raw[0][i],
            2 => (four * raw[1][i] - raw[0][i]) / three,
            _ => {
                let r1 = (four * raw[1][i] - raw[0][i]) / three;
                let r2 = (four * raw[2][i] - raw[1][i]) / three;
                (sixteen * r2 - r1) / fifteen
            }
        };
        if levels > 1 {
            let finest = raw[levels - 1][i];
            let gap = ((value - finest) / value).abs();
            if gap > cast(AGREEMENT) {
                return Err(Error::ConvergenceFailure {
                    operation: "finite-difference oracle".into(),
                    detail: format!(
                        "eigenvalue {} moved by relative {:e} under extrapolation",
                        i + 1,
                        gap.to_f64().unwrap_or(f64::NAN)
                    ),
                });
            }
        }
        out.push(value);
    }
    Ok(out)
}

/// Lowest `m_max` eigenvalues of the radial problem in sector `l`.
pub fn radial_eigenvalues_fd(config: &OracleConfig) -> Result<Vec<f64>> {
    radial_eigenvalues_fd_in::<f64>(config)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    // J0 power series and bisection, independent of everything else here
    fn bessel_j0(x: f64) -> f64 {
        let q = -0.25 * x * x;
        let mut term = 1.0;
        let mut sum = 1.0;
        for k in 1..80 {
            term *= q / (k * k) as f64;
            sum += term;
        }
        sum
    }

    fn j01() -> f64 {
        let (mut lo, mut hi) = (2.0, 3.0);
        for _ in 0..100 {
            let mid = 0.5 * (lo + hi);
            if bessel_j0(mid) > 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    }

    #[test]
    fn weak_field_bessel_limit() {
        let j = j01();
        assert!((j - 2.404_825_557_695_773).abs() < 1e-13);
        let cfg = OracleConfig::new(0, 1e-6, 1.0, 1);
        let ev = radial_eigenvalues_fd(&cfg).unwrap();
        assert_relative_eq!(ev[0], j * j, max_relative = 1e-6);
    }

    #[test]
    fn crossing_value() {
        let ev = radial_eigenvalues_fd(&OracleConfig::new(0, 2.0, 1.0, 1)).unwrap();
        assert_relative_eq!(ev[0], 6.0, max_relative = 1e-6);
    }

    #[test]
    fn config_validation() {
        let mut c = OracleConfig::new(0, 1.0, 1.0, 3);
        assert!(c.validate().is_ok());
        c.grid_points = 100;
        assert!(c.validate().is_err());
        let mut c = OracleConfig::new(0, 1.0, 1.0, 21);
        assert!(c.validate().is_err());
        c.m_max = 2;
        c.richardson_levels = 4;
        assert!(c.validate().is_err());
        assert!(OracleConfig::new(0, -1.0, 1.0, 1).validate().is_err());
    }

    #[test]
    fn sturm_count_monotone() {
        let cfg = OracleConfig::new(-2, 5.0, 1.0, 5);
        let m = radial_matrix::<f64>(&cfg, 300).unwrap();
        let mut prev = 0;
        for k in 0..200 {
            let c = sturm_count(&m, k as f64 * 2.0);
            assert!(c >= prev);
            prev = c;
        }
    }

    #[test]
    fn three_levels_and_single_precision() {
        let mut cfg = OracleConfig::new(1, 3.0, 1.0, 2);
        cfg.grid_points = 400;
        cfg.richardson_levels = 3;
        let e3 = radial_eigenvalues_fd(&cfg).unwrap();
        cfg.richardson_levels = 2;
        cfg.grid_points = 4000;
        let e2 = radial_eigenvalues_fd(&cfg).unwrap();
        assert_relative_eq!(e3[0], e2[0], max_relative = 1e-7);
        cfg.grid_points = 200;
        let e32 = radial_eigenvalues_fd_in::<f32>(&cfg).unwrap();
        assert!(((e32[0] as f64 - e2[0]) / e2[0]).abs() < 1e-3);
    }
}
