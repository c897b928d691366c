//! Roots of `M(a, b, z)`: negative roots in `a` (sorted decreasingly) and
//! positive roots in `z` (sorted increasingly).
//!
//! The `a`-roots are bracketed by certified signs at the integer checkpoints
//! `0, -1, -2, ...`. Each half-open cell `(-j-1, -j]` holds at most one root,
//! because the zeros of consecutive Laguerre polynomials interlace, so the
//! sign pattern at the checkpoints counts roots exactly.

use num_traits::Float;

use crate::error::{Error, Result};
use crate::kummer::{kummer_m_sign, CertifiedSign, KummerArgs, Sign, SplitParam};
use crate::precision::PrecisionPolicy;
use crate::tridiag::SymTridiagonal;

pub const DEFAULT_TOL: f64 = 1e-12;
/// Smallest `z` accepted by the `a`-root solver.
pub const MIN_Z: f64 = 1e-8;

const MAX_SCAN_DEPTH: i64 = 5_000_000;
const BISECTION_STEPS: usize = 10;
const MAX_REFINE_STEPS: usize = 500;

/// One root query: `fixed_arg` is `z` for `a`-roots and `a` for `z`-roots.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootRequest {
    pub m: usize,
    pub b: f64,
    pub fixed_arg: f64,
    pub tol: f64,
}

impl RootRequest {
    pub fn new(m: usize, b: f64, fixed_arg: f64) -> Self {
        RootRequest {
            m,
            b,
            fixed_arg,
            tol: DEFAULT_TOL,
        }
    }

    pub fn with_tol(self, tol: f64) -> Self {
        RootRequest { tol, ..self }
    }

    pub fn solve_a(&self, policy: &PrecisionPolicy) -> Result<SplitRoot> {
        root_a_split(self.m, self.b, self.fixed_arg, self.tol, policy)
    }

    pub fn solve_z(&self, policy: &PrecisionPolicy) -> Result<f64> {
        root_z_with(self.m, self.fixed_arg, self.b, self.tol, policy)
    }
}

/// A negative root `a = -cell + offset` with `offset` in `(-1, 0]`.
///
/// Keeping the integer part apart preserves the relative accuracy of the
/// offset, which is what the remainder `eps_m` is made of.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SplitRoot {
    pub cell: i64,
    pub offset: f64,
}

impl SplitRoot {
    pub fn value(&self) -> f64 {
        -(self.cell as f64) + self.offset
    }

    pub fn param(&self) -> SplitParam {
        SplitParam::shifted(-self.cell, self.offset)
    }

    /// `-(m-1) - a`, computed without cancellation when the root sits in the
    /// cell just below `-(m-1)`.
    pub fn distance_below(&self, m: usize) -> f64 {
        (self.cell - (m as i64 - 1)) as f64 - self.offset
    }
}

fn check_tol(tol: f64) -> Result<()> {
    if !(tol > 0.0 && tol <= 1e-6) {
        return Err(Error::InvalidParam(format!(
            "tol = {tol} outside (0, 1e-6]"
        )));
    }
    Ok(())
}

fn check_b(b: f64) -> Result<()> {
    if !(b > 0.0) || !b.is_finite() {
        return Err(Error::InvalidParam(format!("b = {b} must be positive")));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// bracket refinement

/// Refines a sign-change bracket: a few bisection steps, then Brent's method.
///
/// `f` must return values whose sign is trustworthy. `width(x)` is the
/// bracket width accepted near `x`.
pub fn refine_bracket<T, F, W>(
    mut f: F,
    mut lo: T,
    mut hi: T,
    mut f_lo: T,
    mut f_hi: T,
    width: W,
) -> Result<T>
where
    T: Float,
    F: FnMut(T) -> Result<T>,
    W: Fn(T) -> T,
{
    let zero = T::zero();
    let two = T::one() + T::one();
    if f_lo == zero {
        return Ok(lo);
    }
    if f_hi == zero {
        return Ok(hi);
    }
    if (f_lo > zero) == (f_hi > zero) {
        return Err(Error::ConvergenceFailure {
            operation: "bracket refinement".into(),
            detail: "endpoints do not change sign".into(),
        });
    }
    for _ in 0..BISECTION_STEPS {
        let mid = (lo + hi) / two;
        if hi - lo <= width(mid) {
            return Ok(mid);
        }
        let fm = f(mid)?;
        if fm == zero {
            return Ok(mid);
        }
        if (fm > zero) == (f_lo > zero) {
            lo = mid;
            f_lo = fm;
        } else {
            hi = mid;
            f_hi = fm;
        }
    }
    brent(&mut f, lo, hi, f_lo, f_hi, &width)
}

fn brent<T, F, W>(f: &mut F, lo: T, hi: T, f_lo: T, f_hi: T, width: &W) -> Result<T>
where
    T: Float,
    F: FnMut(T) -> Result<T>,
    W: Fn(T) -> T,
{
    let zero = T::zero();
    let one = T::one();
    let two = one + one;
    let three = two + one;
    let (mut a, mut fa) = (lo, f_lo);
    let (mut b, mut fb) = (hi, f_hi);
    let (mut c, mut fc) = (b, fb);
    let mut d = b - a;
    let mut e = d;
    for _ in 0..MAX_REFINE_STEPS {
        if (fb > zero) == (fc > zero) {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if fc.abs() < fb.abs() {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        let tol1 = width(b) / two;
        let xm = (c - b) / two;
        if xm.abs() <= tol1 || fb == zero {
            return Ok(b);
        }
        if e.abs() >= tol1 && fa.abs() > fb.abs() {
            let s = fb / fa;
            let (mut p, mut q);
            if a == c {
                p = two * xm * s;
                q = one - s;
            } else {
                let qa = fa / fc;
                let r = fb / fc;
                p = s * (two * xm * qa * (qa - r) - (b - a) * (r - one));
                q = (qa - one) * (r - one) * (s - one);
            }
            if p > zero {
                q = -q;
            } else {
                p = -p;
            }
            if two * p < (three * xm * q - (tol1 * q).abs()).min((e * q).abs()) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b = if d.abs() > tol1 {
            b + d
        } else if xm > zero {
            b + tol1
        } else {
            b - tol1
        };
        fb = f(b)?;
    }
    Err(Error::ConvergenceFailure {
        operation: "Brent refinement".into(),
        detail: format!("no convergence in {MAX_REFINE_STEPS} steps"),
    })
}

fn relative_width(tol: f64) -> impl Fn(f64) -> f64 {
    move |x: f64| {
        let ax = x.abs();
        (tol * ax)
            .max(4.0 * f64::EPSILON * ax)
            .max(f64::MIN_POSITIVE)
    }
}

// ---------------------------------------------------------------------------
// a-roots

/// Certified signs of `a -> M(a, b, z)` at split parameters.
#[derive(Debug, Clone, Copy)]
pub(crate) struct ASigns<'p> {
    pub b: f64,
    pub z: f64,
    pub policy: &'p PrecisionPolicy,
}

impl ASigns<'_> {
    fn at(&self, cell: i64, t: f64) -> Result<CertifiedSign> {
        let args = KummerArgs::split(SplitParam::shifted(-cell, t), self.b, self.z)?;
        kummer_m_sign(&args, self.policy)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) enum Found {
    /// Root exactly at the checkpoint `-cell` (polynomial case, exact arithmetic).
    Exact(i64),
    /// Root at `-cell + t` with `t` in `(t_lo, 0)`.
    Cell {
        cell: i64,
        t_lo: f64,
        f_lo: f64,
        f_hi: f64,
    },
}

#[derive(Debug, Clone, Copy)]
pub(crate) enum Stop {
    /// Stop after this many roots.
    Count(usize),
    /// Every root `a >= floor`.
    Floor(f64),
}

/// Depth down to which the `m`-th root is guaranteed to have appeared.
///
/// Besides `m + ceil(z) + 10` this uses a Dirichlet comparison: replacing the
/// potential by its maximum bounds the eigenvalue by a Bessel one, giving
/// `a_m >= (b - j^2 / (2z) - z/2) / 2` with `j_{nu,m} <= pi (m + nu/2 + 1/2)`
/// and `nu = b - 1`.
pub(crate) fn scan_depth(m: usize, b: f64, z: f64) -> i64 {
    let base = m as f64 + z.ceil() + 10.0;
    let nu = (b - 1.0).max(0.0);
    let j = std::f64::consts::PI * (m as f64 + 0.5 * nu + 0.5);
    let bessel = ((j * j / (2.0 * z) + 0.5 * z - b) / 2.0).ceil() + 2.0;
    let depth = base.max(bessel);
    if depth >= MAX_SCAN_DEPTH as f64 {
        MAX_SCAN_DEPTH
    } else {
        depth as i64
    }
}

pub(crate) fn scan_a(signs: &ASigns<'_>, stop: Stop) -> Result<Vec<Found>> {
    let depth = match stop {
        Stop::Count(m) => scan_depth(m, signs.b, signs.z),
        Stop::Floor(f) => {
            if f >= 0.0 {
                return Ok(Vec::new());
            }
            let d = (-f).floor();
            if d > MAX_SCAN_DEPTH as f64 {
                return Err(Error::BracketNotFound {
                    index: 0,
                    scanned_to: f,
                });
            }
            d as i64
        }
    };
    let mut out = Vec::new();
    // M(0, b, z) = 1
    let mut prev_sign = 1;
    let mut prev_val = 1.0;
    for j in 1..=depth {
        let s = signs.at(j, 0.0)?;
        push_transition(&mut out, &mut prev_sign, &mut prev_val, j - 1, -1.0, &s)?;
        if let Stop::Count(m) = stop {
            if out.len() >= m {
                return Ok(out);
            }
        }
    }
    match stop {
        Stop::Count(m) => Err(Error::BracketNotFound {
            index: m,
            scanned_to: -(depth as f64),
        }),
        Stop::Floor(f) => {
            let t = f + depth as f64;
            if t < 0.0 {
                let s = signs.at(depth, t)?;
                push_transition(&mut out, &mut prev_sign, &mut prev_val, depth, t, &s)?;
            }
            Ok(out)
        }
    }
}

fn push_transition(
    out: &mut Vec<Found>,
    prev_sign: &mut i32,
    prev_val: &mut f64,
    cell: i64,
    t: f64,
    s: &CertifiedSign,
) -> Result<()> {
    if s.sign == Sign::Zero {
        // only integer checkpoints can be exact zeros
        out.push(Found::Exact(cell + 1));
        *prev_sign = -*prev_sign;
        *prev_val = 0.0;
        return Ok(());
    }
    let sign = s.sign.as_i32();
    if sign != *prev_sign {
        if *prev_val == 0.0 {
            return Err(Error::ConvergenceFailure {
                operation: "a-root scan".into(),
                detail: format!("sign change next to an exact root near a = {}", -cell),
            });
        }
        out.push(Found::Cell {
            cell,
            t_lo: t,
            f_lo: s.value_estimate,
            f_hi: *prev_val,
        });
    }
    *prev_sign = sign;
    *prev_val = s.value_estimate;
    Ok(())
}

pub(crate) fn refine_found(signs: &ASigns<'_>, found: Found, tol: f64) -> Result<SplitRoot> {
    match found {
        Found::Exact(j) => Ok(SplitRoot {
            cell: j,
            offset: 0.0,
        }),
        Found::Cell {
            cell,
            t_lo,
            f_lo,
            f_hi,
        } => {
            let t = refine_bracket(
                |t| Ok(signs.at(cell, t)?.value_estimate),
                t_lo,
                0.0,
                f_lo,
                f_hi,
                relative_width(tol),
            )?;
            Ok(SplitRoot { cell, offset: t })
        }
    }
}

fn check_a_domain(b: f64, z: f64) -> Result<()> {
    check_b(b)?;
    if !z.is_finite() {
        return Err(Error::InvalidParam(format!("z = {z} is not finite")));
    }
    if z < MIN_Z {
        return Err(Error::DomainTooSmall { z });
    }
    Ok(())
}

/// The `m`-th largest negative root of `a -> M(a, b, z)` in split form.
pub fn root_a_split(
    m: usize,
    b: f64,
    z: f64,
    tol: f64,
    policy: &PrecisionPolicy,
) -> Result<SplitRoot> {
    if m == 0 {
        return Err(Error::InvalidParam("root index m starts at 1".into()));
    }
    check_tol(tol)?;
    check_a_domain(b, z)?;
    let signs = ASigns { b, z, policy };
    let found = scan_a(&signs, Stop::Count(m))?;
    refine_found(&signs, found[m - 1], tol)
}

/// `a_m(b, z)` with the precision policy taken from the environment.
pub fn root_a(m: usize, b: f64, z: f64, tol: f64) -> Result<f64> {
    root_a_with(m, b, z, tol, &PrecisionPolicy::from_env()?)
}

pub fn root_a_with(m: usize, b: f64, z: f64, tol: f64, policy: &PrecisionPolicy) -> Result<f64> {
    Ok(root_a_split(m, b, z, tol, policy)?.value())
}

/// Every root `a >= floor`, largest first.
pub fn roots_a_above(
    b: f64,
    z: f64,
    floor: f64,
    tol: f64,
    policy: &PrecisionPolicy,
) -> Result<Vec<SplitRoot>> {
    check_tol(tol)?;
    check_a_domain(b, z)?;
    let signs = ASigns { b, z, policy };
    scan_a(&signs, Stop::Floor(floor))?
        .into_iter()
        .map(|f| refine_found(&signs, f, tol))
        .collect()
}

/// Number of roots `a > floor` (or `a >= floor` when `inclusive`), from signs only.
pub fn count_roots_a_above(
    b: f64,
    z: f64,
    floor: f64,
    inclusive: bool,
    policy: &PrecisionPolicy,
) -> Result<usize> {
    check_a_domain(b, z)?;
    let signs = ASigns { b, z, policy };
    let found = scan_a(&signs, Stop::Floor(floor))?;
    Ok(found
        .iter()
        .filter(|f| inclusive || !matches!(f, Found::Exact(j) if -(*j as f64) == floor))
        .count())
}

// ---------------------------------------------------------------------------
// z-roots

/// Number of positive roots of `z -> M(a, b, z)`: `ceil(-a)` for `a < 0`.
pub fn count_roots_z(a: f64) -> usize {
    if a < 0.0 {
        (-a).ceil() as usize
    } else {
        0
    }
}

/// Zeros of the Laguerre polynomial `L_k^{(b-1)}` from its Jacobi matrix.
fn laguerre_zero_guesses(k: usize, b: f64) -> Result<Vec<f64>> {
    let alpha = b - 1.0;
    let diag = (0..k).map(|i| 2.0 * i as f64 + alpha + 1.0).collect();
    let off = (0..k.saturating_sub(1))
        .map(|i| (((i + 1) as f64) * (i as f64 + 1.0 + alpha)).sqrt())
        .collect();
    let jacobi = SymTridiagonal::new(diag, off)?;
    Ok(jacobi.lowest_eigenvalues(k, 1e-15))
}

fn z_value(a: SplitParam, b: f64, z: f64, policy: &PrecisionPolicy) -> Result<CertifiedSign> {
    kummer_m_sign(&KummerArgs::split(a, b, z)?, policy)
}

fn polynomial_root(k: u64, m: usize, b: f64, tol: f64, policy: &PrecisionPolicy) -> Result<f64> {
    let a = SplitParam::shifted(-(k as i64), 0.0);
    let guesses = laguerre_zero_guesses(k as usize, b)?;
    let x = guesses[m - 1];
    let at_x = z_value(a, b, x, policy)?;
    if at_x.sign == Sign::Zero {
        return Ok(x);
    }
    // neighbouring zeros bound how far the bracket may grow
    let gap_lo = if m >= 2 { x - guesses[m - 2] } else { x };
    let gap_hi = if m < guesses.len() { guesses[m] - x } else { x };
    let max_delta = 0.25 * gap_lo.min(gap_hi) / x;
    let mut delta = 1e-12f64.max(4.0 * f64::EPSILON);
    while delta <= max_delta {
        let lo = x * (1.0 - delta);
        let hi = x * (1.0 + delta);
        let f_lo = z_value(a, b, lo, policy)?;
        let f_hi = z_value(a, b, hi, policy)?;
        if f_lo.sign == Sign::Zero {
            return Ok(lo);
        }
        if f_hi.sign == Sign::Zero {
            return Ok(hi);
        }
        if f_lo.sign != f_hi.sign {
            return refine_bracket(
                |z| Ok(z_value(a, b, z, policy)?.value_estimate),
                lo,
                hi,
                f_lo.value_estimate,
                f_hi.value_estimate,
                relative_width(tol),
            );
        }
        delta *= 8.0;
    }
    Err(Error::BracketNotFound {
        index: m,
        scanned_to: x * (1.0 + delta),
    })
}

/// `z_m(a, b)` with the precision policy taken from the environment.
pub fn root_z(m: usize, a: f64, b: f64, tol: f64) -> Result<f64> {
    root_z_with(m, a, b, tol, &PrecisionPolicy::from_env()?)
}

/// The `m`-th smallest positive root of `z -> M(a, b, z)`.
pub fn root_z_with(m: usize, a: f64, b: f64, tol: f64, policy: &PrecisionPolicy) -> Result<f64> {
    check_tol(tol)?;
    check_b(b)?;
    if !(a < 0.0) || !a.is_finite() {
        return Err(Error::InvalidParam(format!("a = {a} must be negative")));
    }
    let available = count_roots_z(a);
    if m == 0 || m > available {
        return Err(Error::IndexOutOfRange {
            index: m,
            available,
        });
    }
    let ap = SplitParam::new(a);
    if let Some(k) = ap.non_positive_integer() {
        return polynomial_root(k, m, b, tol, policy);
    }
    // z_m(-k) < z_m(a) < z_m(-(k-1)) for -k < a < -(k-1)
    let k = available as u64;
    let bracket_tol = tol.min(1e-13);
    let lo = polynomial_root(k, m, b, bracket_tol, policy)?;
    let f_lo = z_value(ap, b, lo, policy)?;
    let (hi, f_hi) = if m < available {
        let hi = polynomial_root(k - 1, m, b, bracket_tol, policy)?;
        (hi, z_value(ap, b, hi, policy)?)
    } else {
        let mut hi = 2.0 * lo + b + 10.0;
        let mut f_hi = z_value(ap, b, hi, policy)?;
        let mut tries = 0;
        while f_hi.sign == f_lo.sign {
            tries += 1;
            if tries > 60 {
                return Err(Error::BracketNotFound {
                    index: m,
                    scanned_to: hi,
                });
            }
            hi *= 2.0;
            f_hi = z_value(ap, b, hi, policy)?;
        }
        (hi, f_hi)
    };
    if f_lo.sign == f_hi.sign || f_lo.sign == Sign::Zero || f_hi.sign == Sign::Zero {
        return Err(Error::BracketNotFound {
            index: m,
            scanned_to: hi,
        });
    }
    refine_bracket(
        |z| Ok(z_value(ap, b, z, policy)?.value_estimate),
        lo,
        hi,
        f_lo.value_estimate,
        f_hi.value_estimate,
        relative_width(tol),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn p() -> PrecisionPolicy {
        PrecisionPolicy::default()
    }

    #[test]
    fn first_root_at_b_equals_minus_one() {
        for b in [3.0, 5.0] {
            let r = root_a_split(1, b, b, DEFAULT_TOL, &p()).unwrap();
            assert_eq!(r.value(), -1.0);
        }
    }

    #[test]
    fn second_root_b1_z10() {
        // dense sign scan plus bisection at 60 digits
        let a = root_a_with(2, 1.0, 10.0, DEFAULT_TOL, &p()).unwrap();
        assert_relative_eq!(a, -1.023_798_468_249_625_8, max_relative = 1e-11);
        assert!(a < -1.0);
    }

    #[test]
    fn deep_root_small_z() {
        let a = root_a_with(2, 2.0, 0.5, DEFAULT_TOL, &p()).unwrap();
        assert_relative_eq!(a, -23.650_902_049_118_406, max_relative = 1e-11);
    }

    #[test]
    fn z_roots_of_quadratic() {
        let s3 = 3f64.sqrt();
        assert_relative_eq!(
            root_z(1, -2.0, 2.0, DEFAULT_TOL).unwrap(),
            3.0 - s3,
            max_relative = 1e-12
        );
        assert_relative_eq!(
            root_z(2, -2.0, 2.0, DEFAULT_TOL).unwrap(),
            3.0 + s3,
            max_relative = 1e-12
        );
        assert_eq!(root_z(1, -1.0, 4.0, DEFAULT_TOL).unwrap(), 4.0);
    }

    #[test]
    fn z_root_index_checked() {
        assert!(matches!(
            root_z(3, -2.0, 1.0, DEFAULT_TOL),
            Err(Error::IndexOutOfRange {
                index: 3,
                available: 2
            })
        ));
        assert!(root_z(1, 0.5, 1.0, DEFAULT_TOL).is_err());
    }

    #[test]
    fn z_roots_for_fractional_a() {
        let p = p();
        for &(a, b) in &[(-2.5, 1.0), (-0.3, 2.0), (-4.2, 3.5)] {
            let n = count_roots_z(a);
            let mut prev = 0.0;
            for m in 1..=n {
                let z = root_z_with(m, a, b, DEFAULT_TOL, &p).unwrap();
                assert!(z > prev);
                prev = z;
                // the root of z -> M is also a root of a -> M
                let back = root_a_with(m, b, z, 1e-12, &p).unwrap();
                assert_relative_eq!(back, a, max_relative = 1e-9);
            }
        }
    }

    #[test]
    fn ceiling_rule() {
        assert_eq!(count_roots_z(-2.5), 3);
        assert_eq!(count_roots_z(-1.0), 1);
        assert_eq!(count_roots_z(0.3), 0);
        assert_eq!(count_roots_z(0.0), 0);
    }

    #[test]
    fn refuses_tiny_z_and_bad_tol() {
        assert!(matches!(
            root_a(1, 1.0, 1e-9, DEFAULT_TOL),
            Err(Error::DomainTooSmall { .. })
        ));
        assert!(root_a(1, 1.0, 1.0, 1e-3).is_err());
        assert!(root_a(1, 1.0, 1.0, 0.0).is_err());
        assert!(root_a(0, 1.0, 1.0, DEFAULT_TOL).is_err());
    }

    #[test]
    fn integer_roots_split_neighbours() {
        // z = 2 is the root of M(-1, 2, z): a_1(2, 2) = -1 exactly
        let p = p();
        let all = roots_a_above(2.0, 2.0, -6.5, DEFAULT_TOL, &p).unwrap();
        assert_eq!(all[0].value(), -1.0);
        for w in all.windows(2) {
            assert!(w[1].value() < w[0].value());
        }
        for (m, r) in all.iter().enumerate() {
            let direct = root_a_with(m + 1, 2.0, 2.0, DEFAULT_TOL, &p).unwrap();
            assert_eq!(direct, r.value());
        }
        assert_eq!(count_roots_a_above(2.0, 2.0, -1.0, false, &p).unwrap(), 0);
        assert_eq!(count_roots_a_above(2.0, 2.0, -1.0, true, &p).unwrap(), 1);
        assert_eq!(
            count_roots_a_above(2.0, 2.0, -6.5, true, &p).unwrap(),
            all.len()
        );
    }

    #[test]
    fn split_root_keeps_tiny_remainder() {
        // a_1(1, 40) = -eps with eps ~ 40 e^-40, far below double resolution of 1 + a
        let r = root_a_split(1, 1.0, 40.0, DEFAULT_TOL, &p()).unwrap();
        assert_eq!(r.cell, 0);
        let eps = r.distance_below(1);
        assert_relative_eq!(eps, 1.655_706_369_657_855_3e-16, max_relative = 1e-10);
    }

    #[test]
    fn brent_on_cubic_generic() {
        let f = |x: f32| Ok(x * x * x - 2.0);
        let r = refine_bracket(f, 0.0f32, 2.0, -2.0, 6.0, |x: f32| 1e-6 * x.abs()).unwrap();
        assert!((r - 2f32.cbrt()).abs() < 1e-5);
    }

    #[test]
    fn scan_depth_has_bessel_floor() {
        assert_eq!(scan_depth(1, 1.0, 30.0), 41);
        assert!(scan_depth(1, 1.0, 0.01) > 500);
    }
}
