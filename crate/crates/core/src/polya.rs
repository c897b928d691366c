//! Pólya ratios `lambda_n |Omega| / (4 pi n)`, critical fields and Riesz-mean
//! ratios against the classical constants.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::spectrum::{
    enumerate_spectrum, first_eigenvalues, nth_eigenvalue, riesz_sum, DiskSystem, FieldStrength,
    SolveOptions, Spectrum,
};

pub const DEFAULT_SEARCH_MARGIN: f64 = 3.0;
const SEARCH_FLOOR: usize = 50;
const TAIL_GAP: f64 = 0.05;

/// `R_gamma`: 2 at `gamma = 0`, `2 (gamma/(gamma+1))^gamma` on `(0, 1)`, 1 from 1 on.
///
/// Negative `gamma` gives `NaN`.
pub fn excess_constant(gamma: f64) -> f64 {
    if !(gamma >= 0.0) {
        f64::NAN
    } else if gamma == 0.0 {
        2.0
    } else if gamma < 1.0 {
        2.0 * (gamma / (gamma + 1.0)).powf(gamma)
    } else {
        1.0
    }
}

/// `L^cl_{gamma,2} = 1 / (4 pi (1 + gamma))`.
pub fn classical_constant(gamma: f64) -> f64 {
    1.0 / (4.0 * PI * (1.0 + gamma))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolyaScan {
    pub b: f64,
    pub min_ratio: f64,
    pub argmin_n: usize,
    pub n_searched: usize,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CriticalField {
    pub b_crit: f64,
    pub n_crit: usize,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RieszRatioScan {
    pub gamma: f64,
    pub b: f64,
    pub best_lambda: f64,
    pub max_ratio: f64,
}

/// Uniform samples on `(B, lambda_max]`, refined between eigenvalues.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LambdaGrid {
    pub lambda_max: f64,
    pub samples: usize,
}

impl LambdaGrid {
    /// `lambda_max = factor * B`.
    pub fn multiple_of_field(field: FieldStrength, factor: f64, samples: usize) -> Self {
        LambdaGrid {
            lambda_max: factor * field.value(),
            samples,
        }
    }

    pub fn points(&self, field: FieldStrength) -> Vec<f64> {
        let lo = field.value();
        let n = self.samples.max(1);
        (1..=n)
            .map(|i| lo + (self.lambda_max - lo) * i as f64 / n as f64)
            .collect()
    }
}

/// `lambda_n |Omega| / (4 pi n)`.
pub fn polya_ratio(
    system: &DiskSystem,
    field: FieldStrength,
    n: usize,
    opts: &SolveOptions,
) -> Result<f64> {
    let (lambda, _, _) = nth_eigenvalue(system, field, n, opts)?;
    Ok(ratio_at(lambda, n, system.total_area()))
}

fn ratio_at(lambda: f64, n: usize, area: f64) -> f64 {
    lambda * area / (4.0 * PI * n as f64)
}

/// Pólya ratios of a sorted spectrum, index `n - 1` holding `lambda_n`.
pub fn polya_ratios(spectrum: &Spectrum, area: f64) -> Vec<f64> {
    spectrum
        .entries()
        .iter()
        .enumerate()
        .map(|(i, e)| ratio_at(e.lambda, i + 1, area))
        .collect()
}

/// Number of eigenvalues searched: `ceil(margin B |Omega| / (4 pi)) + 50`.
pub fn search_window(system: &DiskSystem, field: FieldStrength, search_margin: f64) -> usize {
    (search_margin * field.value() * system.total_area() / (4.0 * PI)).ceil() as usize
        + SEARCH_FLOOR
}

/// Minimum Pólya ratio over the search window.
///
/// The last decile of ratios must stay above `min(min_ratio + 0.05, 1)`,
/// otherwise the minimum may lie beyond the window and `TailUnsafe` is
/// returned.
pub fn min_polya_ratio(
    system: &DiskSystem,
    field: FieldStrength,
    search_margin: f64,
    opts: &SolveOptions,
) -> Result<PolyaScan> {
    if !(search_margin >= 2.0) || !search_margin.is_finite() {
        return Err(Error::InvalidParam(format!(
            "search margin {search_margin} must be at least 2"
        )));
    }
    let n_searched = search_window(system, field, search_margin);
    let spectrum = first_eigenvalues(system, field, n_searched, opts)?;
    if spectrum.len() < n_searched {
        return Err(Error::IndexOutOfRange {
            index: n_searched,
            available: spectrum.len(),
        });
    }
    let ratios = &polya_ratios(&spectrum, system.total_area())[..n_searched];
    let (mut argmin, mut min_ratio) = (0, f64::INFINITY);
    for (i, &r) in ratios.iter().enumerate() {
        if r < min_ratio {
            min_ratio = r;
            argmin = i;
        }
    }
    let tail_start = n_searched - n_searched.div_ceil(10);
    let tail_min = ratios[tail_start..]
        .iter()
        .copied()
        .fold(f64::INFINITY, f64::min);
    if tail_min <= (min_ratio + TAIL_GAP).min(1.0) {
        return Err(Error::TailUnsafe {
            field: field.value(),
            min_ratio,
            tail_min,
        });
    }
    Ok(PolyaScan {
        b: field.value(),
        min_ratio,
        argmin_n: argmin + 1,
        n_searched,
    })
}

/// First field in `[lo, hi]` at which the minimum Pólya ratio drops below 1.
pub fn critical_field(
    system: &DiskSystem,
    bracket_lo: f64,
    bracket_hi: f64,
    tol_b: f64,
    opts: &SolveOptions,
) -> Result<CriticalField> {
    critical_field_with_margin(
        system,
        bracket_lo,
        bracket_hi,
        tol_b,
        DEFAULT_SEARCH_MARGIN,
        opts,
    )
}

pub fn critical_field_with_margin(
    system: &DiskSystem,
    bracket_lo: f64,
    bracket_hi: f64,
    tol_b: f64,
    search_margin: f64,
    opts: &SolveOptions,
) -> Result<CriticalField> {
    if !(tol_b > 0.0) || !(bracket_lo < bracket_hi) {
        return Err(Error::BadBracket {
            lo: bracket_lo,
            hi: bracket_hi,
            detail: format!("need lo < hi and tol_b > 0 (tol_b = {tol_b})"),
        });
    }
    let scan = |b: f64| -> Result<PolyaScan> {
        min_polya_ratio(system, FieldStrength::new(b)?, search_margin, opts)
    };
    let lo_scan = scan(bracket_lo)?;
    if !(lo_scan.min_ratio > 1.0) {
        return Err(Error::BadBracket {
            lo: bracket_lo,
            hi: bracket_hi,
            detail: format!(
                "min ratio {} at lower end is not above 1",
                lo_scan.min_ratio
            ),
        });
    }
    let mut hi_scan = scan(bracket_hi)?;
    if !(hi_scan.min_ratio < 1.0) {
        return Err(Error::BadBracket {
            lo: bracket_lo,
            hi: bracket_hi,
            detail: format!(
                "min ratio {} at upper end is not below 1",
                hi_scan.min_ratio
            ),
        });
    }
    let (mut lo, mut hi) = (bracket_lo, bracket_hi);
    while hi - lo > tol_b {
        let mid = 0.5 * (lo + hi);
        let s = scan(mid)?;
        if s.min_ratio < 1.0 {
            hi = mid;
            hi_scan = s;
        } else {
            lo = mid;
        }
    }
    Ok(CriticalField {
        b_crit: 0.5 * (lo + hi),
        n_crit: hi_scan.argmin_n,
    })
}

/// `value / (L^cl_gamma |Omega| lambda^{1+gamma})`.
pub fn riesz_ratio(value: f64, gamma: f64, area: f64, lambda: f64) -> f64 {
    value / (classical_constant(gamma) * area * lambda.powf(1.0 + gamma))
}

/// One row of a Riesz table: `(lambda, riesz mean, ratio)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RieszPoint {
    pub lambda: f64,
    pub value: f64,
    pub ratio: f64,
}

/// Riesz means and ratios at the given points from an enumerated spectrum.
pub fn riesz_table(spectrum: &Spectrum, area: f64, gamma: f64, lambdas: &[f64]) -> Vec<RieszPoint> {
    lambdas
        .iter()
        .map(|&lambda| {
            let value = riesz_sum(spectrum.entries(), lambda, gamma);
            RieszPoint {
                lambda,
                value,
                ratio: riesz_ratio(value, gamma, area, lambda),
            }
        })
        .collect()
}

const GOLDEN_STEPS: usize = 60;

fn golden_max<F: Fn(f64) -> f64>(f: F, mut a: f64, mut b: f64) -> (f64, f64) {
    let g = 0.5 * (5f64.sqrt() - 1.0);
    let mut c = b - g * (b - a);
    let mut d = a + g * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    for _ in 0..GOLDEN_STEPS {
        if fc > fd {
            b = d;
            d = c;
            fd = fc;
            c = b - g * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + g * (b - a);
            fd = f(d);
        }
    }
    if fc > fd {
        (c, fc)
    } else {
        (d, fd)
    }
}

/// Largest Riesz ratio over `(B, lambda_max]`.
///
/// For `gamma = 0` the supremum on each gap is the left limit at an
/// eigenvalue, `#{lambda_k <= lambda_n} / (L |Omega| lambda_n)`. For
/// `gamma > 0` the grid is refined by golden-section search between
/// consecutive eigenvalues.
pub fn riesz_ratio_scan(
    system: &DiskSystem,
    field: FieldStrength,
    gamma: f64,
    grid: LambdaGrid,
    opts: &SolveOptions,
) -> Result<RieszRatioScan> {
    if !(gamma >= 0.0) || !gamma.is_finite() {
        return Err(Error::InvalidParam(format!(
            "gamma {gamma} must be non-negative"
        )));
    }
    let spectrum = enumerate_spectrum(system, field, grid.lambda_max, opts)?;
    Ok(riesz_ratio_scan_on(
        &spectrum,
        system.total_area(),
        field,
        gamma,
        grid,
    ))
}

/// [`riesz_ratio_scan`] over an already enumerated spectrum.
pub fn riesz_ratio_scan_on(
    spectrum: &Spectrum,
    area: f64,
    field: FieldStrength,
    gamma: f64,
    grid: LambdaGrid,
) -> RieszRatioScan {
    let lambdas = spectrum.lambdas();
    let ratio = |lambda: f64| {
        if lambda <= 0.0 {
            return 0.0;
        }
        riesz_ratio(
            riesz_sum(spectrum.entries(), lambda, gamma),
            gamma,
            area,
            lambda,
        )
    };
    let mut best = (field.value(), 0.0);
    let mut consider = |lambda: f64, r: f64| {
        if r > best.1 {
            best = (lambda, r);
        }
    };
    for lambda in grid.points(field) {
        consider(lambda, ratio(lambda));
    }
    if gamma == 0.0 {
        let l0 = classical_constant(0.0) * area;
        let mut i = 0;
        while i < lambdas.len() {
            let mut j = i;
            while j + 1 < lambdas.len() && lambdas[j + 1] == lambdas[i] {
                j += 1;
            }
            let lambda = lambdas[i];
            if lambda <= grid.lambda_max {
                consider(lambda, (j + 1) as f64 / (l0 * lambda));
            }
            i = j + 1;
        }
    } else {
        let mut edges: Vec<f64> = lambdas
            .iter()
            .copied()
            .filter(|&l| l < grid.lambda_max)
            .collect();
        edges.push(grid.lambda_max);
        for w in edges.windows(2) {
            if w[1] > w[0] {
                let (lambda, r) = golden_max(ratio, w[0], w[1]);
                consider(lambda, r);
                consider(w[1], ratio(w[1]));
            }
        }
    }
    RieszRatioScan {
        gamma,
        b: field.value(),
        best_lambda: best.0,
        max_ratio: best.1,
    }
}
