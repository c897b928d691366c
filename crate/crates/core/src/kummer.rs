//! Kummer's function `M(a, b, z)` and `2F2` for real arguments.
//!
//! One generic series engine runs on every [`SeriesScalar`]. Alongside the
//! value it carries a running bound on rounding and truncation error, so a
//! caller can tell whether the sign of the computed value is trustworthy and
//! escalate precision when it is not.

use num_rational::BigRational;

use crate::bigfloat::BigFloat;
use crate::error::{Error, Result};
use crate::precision::PrecisionPolicy;
use crate::scalar::SeriesScalar;

const MAX_TERMS: usize = 200_000;

/// A real parameter held as `int + frac`.
///
/// Pochhammer factors `(int + k) + frac` are then formed with a single
/// rounding, which keeps `a = -(m-1) - eps` resolvable for tiny `eps`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SplitParam {
    pub int: i64,
    pub frac: f64,
}

impl SplitParam {
    pub fn new(x: f64) -> Self {
        if x.fract() == 0.0 && x.abs() < 9.0e15 {
            SplitParam {
                int: x as i64,
                frac: 0.0,
            }
        } else {
            SplitParam { int: 0, frac: x }
        }
    }

    pub fn shifted(int: i64, frac: f64) -> Self {
        if frac.fract() == 0.0 && frac.abs() < 9.0e15 {
            SplitParam {
                int: int + frac as i64,
                frac: 0.0,
            }
        } else {
            SplitParam { int, frac }
        }
    }

    pub fn value(&self) -> f64 {
        self.int as f64 + self.frac
    }

    /// `Some(k)` when the parameter is exactly `-k` for an integer `k >= 0`.
    pub fn non_positive_integer(&self) -> Option<u64> {
        (self.frac == 0.0 && self.int <= 0).then(|| self.int.unsigned_abs())
    }

    fn plus<S: SeriesScalar>(&self, k: i64, ctx: S::Ctx) -> S {
        let head = self.int + k;
        if self.frac == 0.0 {
            S::from_i64(head, ctx)
        } else if head == 0 {
            S::from_f64(self.frac, ctx)
        } else {
            S::from_i64(head, ctx) + S::from_f64(self.frac, ctx)
        }
    }

    fn is_zero_at(&self, k: i64) -> bool {
        self.frac == 0.0 && self.int + k == 0
    }
}

/// Arguments of `M(a, b, z)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KummerArgs {
    pub a: SplitParam,
    pub b: f64,
    pub z: f64,
}

impl KummerArgs {
    pub fn new(a: f64, b: f64, z: f64) -> Result<Self> {
        Self::split(SplitParam::new(a), b, z)
    }

    /// Arguments with `a = int + frac` kept apart.
    pub fn split(a: SplitParam, b: f64, z: f64) -> Result<Self> {
        if !a.frac.is_finite() {
            return Err(Error::InvalidParam(format!("a = {a:?} is not finite")));
        }
        if !(b > 0.0) || !b.is_finite() {
            return Err(Error::InvalidParam(format!("b = {b} must be positive")));
        }
        if !z.is_finite() {
            return Err(Error::InvalidParam(format!("z = {z} is not finite")));
        }
        Ok(KummerArgs { a, b, z })
    }
}

/// Value of a series evaluation together with a bound on its total error.
#[derive(Debug, Clone)]
pub struct SeriesEval<S> {
    pub value: S,
    pub error_bound: f64,
    pub terms: usize,
}

fn gamma_n(n: f64, u: f64) -> f64 {
    let nu = n * u;
    if nu >= 0.5 {
        f64::INFINITY
    } else {
        nu / (1.0 - nu)
    }
}

/// Generic `pFp` series `sum_k prod (a_i)_k / prod (b_i)_k z^k / k!`.
///
/// Numerator and denominator parameters are paired for the tail estimate.
pub fn pfp_series<S: SeriesScalar>(
    num: &[SplitParam],
    den: &[f64],
    z: f64,
    ctx: S::Ctx,
) -> Result<SeriesEval<S>> {
    assert_eq!(num.len(), den.len(), "pFp needs paired parameters");
    let u = S::unit_roundoff(ctx);
    let exact = u == 0.0;
    let terminating = num.iter().any(|p| p.non_positive_integer().is_some());
    if exact && !terminating && z != 0.0 {
        return Err(Error::InvalidParam(
            "exact arithmetic needs a terminating series".into(),
        ));
    }
    for &b in den {
        if b <= 0.0 && b.fract() == 0.0 {
            return Err(Error::InvalidParam(format!(
                "denominator parameter {b} is a non-positive integer"
            )));
        }
    }
    let ops_per_term = (2 + 2 * (num.len() + den.len())) as f64;
    let zs = S::from_f64(z, ctx);
    let mut term = S::from_i64(1, ctx);
    let mut sum = term.clone();
    let mut err_terms = 0.0f64;
    let mut err_sum = 0.0f64;
    let mut tail = 0.0f64;
    let mut small_run = 0usize;
    let min_k = z.abs().ceil() as i64 + 10;
    let past_params = num
        .iter()
        .map(|p| (-p.value()).ceil() as i64)
        .chain(den.iter().map(|b| (-b).ceil() as i64))
        .max()
        .unwrap_or(0)
        .max(0);

    let mut k: i64 = 1;
    loop {
        if z == 0.0 || num.iter().any(|p| p.is_zero_at(k - 1)) {
            break;
        }
        if k as usize > MAX_TERMS {
            return Err(Error::ConvergenceFailure {
                operation: "hypergeometric series".into(),
                detail: format!("no convergence after {MAX_TERMS} terms at z = {z}"),
            });
        }
        let mut t = term * zs.clone();
        for p in num {
            t = t * p.plus::<S>(k - 1, ctx);
        }
        for &b in den {
            t = t / (S::from_f64(b, ctx) + S::from_i64(k - 1, ctx));
        }
        t = t / S::from_i64(k, ctx);
        sum = sum + t.clone();

        let t_abs = t.to_f64().abs();
        let s_abs = sum.to_f64().abs();
        err_terms += t_abs * gamma_n(ops_per_term * k as f64, u);
        err_sum += s_abs * u;

        if !exact && k >= min_k && k > past_params {
            if t_abs <= u * s_abs || t_abs == 0.0 {
                small_run += 1;
            } else {
                small_run = 0;
            }
            if small_run >= 3 {
                let kf = k as f64;
                let mut rho = z.abs() / (kf + 1.0);
                for (p, &b) in num.iter().zip(den) {
                    rho *= ((p.value() + kf).abs() / (b + kf)).max(1.0);
                }
                if rho < 1.0 {
                    tail = t_abs * rho / (1.0 - rho);
                    k += 1;
                    break;
                }
            }
        }
        term = t;
        k += 1;
    }
    let error_bound = if exact {
        0.0
    } else {
        1.01 * (err_terms + err_sum + tail)
    };
    Ok(SeriesEval {
        value: sum,
        error_bound,
        terms: k as usize,
    })
}

/// `M(a, b, z)` on an arbitrary scalar type.
pub fn kummer_series<S: SeriesScalar>(args: &KummerArgs, ctx: S::Ctx) -> Result<SeriesEval<S>> {
    pfp_series(&[args.a], &[args.b], args.z, ctx)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn from_i32(s: i32) -> Self {
        match s.signum() {
            -1 => Sign::Negative,
            0 => Sign::Zero,
            _ => Sign::Positive,
        }
    }

    pub fn as_i32(self) -> i32 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }
}

/// A sign whose correctness is backed by an error bound.
///
/// `Zero` is only ever reported from exact rational arithmetic.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CertifiedSign {
    pub sign: Sign,
    pub value_estimate: f64,
    pub error_bound: f64,
}

/// Fixed-precision estimate: `None` digits means hardware double precision.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub value: f64,
    pub error_bound: f64,
    pub digits: Option<u32>,
}

fn to_estimate<S: SeriesScalar>(eval: SeriesEval<S>, digits: Option<u32>) -> (Estimate, i32) {
    (
        Estimate {
            value: eval.value.to_f64(),
            error_bound: eval.error_bound,
            digits,
        },
        eval.value.signum_i32(),
    )
}

/// Evaluates `M(a, b, z)` once at a fixed precision.
pub fn kummer_m_estimate(args: &KummerArgs, digits: Option<u32>) -> Result<Estimate> {
    Ok(estimate_with_sign(args, digits)?.0)
}

fn estimate_with_sign(args: &KummerArgs, digits: Option<u32>) -> Result<(Estimate, i32)> {
    match digits {
        None => Ok(to_estimate(kummer_series::<f64>(args, ())?, None)),
        Some(d) => {
            let prec = BigFloat::bits_for_digits(d);
            Ok(to_estimate(kummer_series::<BigFloat>(args, prec)?, Some(d)))
        }
    }
}

fn exact_eval(args: &KummerArgs) -> Result<(Estimate, i32)> {
    let eval = kummer_series::<BigRational>(args, ())?;
    Ok(to_estimate(eval, Some(u32::MAX)))
}

fn certified(est: &Estimate, sign: i32) -> Option<CertifiedSign> {
    if sign != 0 && est.value.abs() > est.error_bound {
        Some(CertifiedSign {
            sign: Sign::from_i32(sign),
            value_estimate: est.value,
            error_bound: est.error_bound,
        })
    } else {
        None
    }
}

/// Certified sign of `M(a, b, z)`.
///
/// Tries double precision first, then walks the policy's precision ladder,
/// and for non-positive integer `a` finishes with exact rational arithmetic.
pub fn kummer_m_sign(args: &KummerArgs, policy: &PrecisionPolicy) -> Result<CertifiedSign> {
    let (est, s) = estimate_with_sign(args, None)?;
    if let Some(c) = certified(&est, s) {
        return Ok(c);
    }
    let polynomial = args.a.non_positive_integer().is_some();
    let ladder = match policy.ladder(args.z) {
        Ok(l) => l,
        Err(e) if !polynomial => return Err(e),
        Err(_) => Vec::new(),
    };
    for d in ladder {
        let (est, s) = estimate_with_sign(args, Some(d))?;
        if let Some(c) = certified(&est, s) {
            return Ok(c);
        }
    }
    if polynomial {
        let (est, s) = exact_eval(args)?;
        let mut value = est.value;
        if s != 0 && value == 0.0 {
            value = f64::MIN_POSITIVE * s as f64;
        }
        return Ok(CertifiedSign {
            sign: Sign::from_i32(s),
            value_estimate: value,
            error_bound: 0.0,
        });
    }
    Err(Error::PrecisionExceeded {
        max_digits: policy.max_digits,
        context: format!(
            "sign of M({}, {}, {}) unresolved",
            args.a.value(),
            args.b,
            args.z
        ),
    })
}

/// `M(a, b, z)` to 14 significant digits.
pub fn kummer_m(args: &KummerArgs, policy: &PrecisionPolicy) -> Result<f64> {
    kummer_m_digits(args, policy, 14)
}

/// `M(a, b, z)` with relative error at most `10^-digits`.
pub fn kummer_m_digits(args: &KummerArgs, policy: &PrecisionPolicy, digits: u32) -> Result<f64> {
    let target = 10f64.powi(-(digits as i32));
    let accept = |est: &Estimate| est.error_bound <= target * est.value.abs();
    let polynomial = args.a.non_positive_integer().is_some();
    let ladder = match policy.ladder(args.z) {
        Ok(l) => l,
        Err(e) if !polynomial => return Err(e),
        Err(_) => Vec::new(),
    };
    if policy.working_digits(args.z) <= 15 {
        let est = kummer_m_estimate(args, None)?;
        if accept(&est) {
            return Ok(est.value);
        }
    }
    for d in ladder {
        let est = kummer_m_estimate(args, Some(d))?;
        if accept(&est) {
            return Ok(est.value);
        }
    }
    if polynomial {
        return Ok(exact_eval(args)?.0.value);
    }
    Err(Error::PrecisionExceeded {
        max_digits: policy.max_digits,
        context: format!(
            "M({}, {}, {}) to {digits} digits",
            args.a.value(),
            args.b,
            args.z
        ),
    })
}

/// Generalised hypergeometric `2F2(a1, a2; b1, b2; z)` to relative `1e-12`.
pub fn hyp2f2(a1: f64, a2: f64, b1: f64, b2: f64, z: f64, policy: &PrecisionPolicy) -> Result<f64> {
    for (name, v) in [("a1", a1), ("a2", a2), ("b1", b1), ("b2", b2), ("z", z)] {
        if !v.is_finite() {
            return Err(Error::InvalidParam(format!("{name} = {v} is not finite")));
        }
    }
    let num = [SplitParam::new(a1), SplitParam::new(a2)];
    let den = [b1, b2];
    let accept = |v: f64, bound: f64| bound <= 1e-12 * v.abs();
    let eval = pfp_series::<f64>(&num, &den, z, ())?;
    if accept(eval.value, eval.error_bound) {
        return Ok(eval.value);
    }
    for d in policy.ladder(z)? {
        let prec = BigFloat::bits_for_digits(d);
        let eval = pfp_series::<BigFloat>(&num, &den, z, prec)?;
        let v = eval.value.to_f64();
        if accept(v, eval.error_bound) {
            return Ok(v);
        }
    }
    Err(Error::PrecisionExceeded {
        max_digits: policy.max_digits,
        context: format!("2F2({a1}, {a2}; {b1}, {b2}; {z})"),
    })
}
