//! Binary floating point with a run-time selectable mantissa width.
//!
//! Values are `(-1)^neg * mag * 2^exp` with `mag` truncated to at most `prec`
//! bits after every operation. Each of `+ - * /` is faithful: the relative
//! error of a single operation on exact inputs is below [`BigFloat::unit_roundoff`].

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigUint;
use num_traits::float::FloatCore;
use num_traits::{ToPrimitive, Zero};

const LOG2_10: f64 = std::f64::consts::LOG2_10;

#[derive(Clone)]
pub struct BigFloat {
    neg: bool,
    mag: BigUint,
    exp: i64,
    prec: u32,
}

impl BigFloat {
    /// Mantissa width needed for `digits` significant decimal digits.
    pub fn bits_for_digits(digits: u32) -> u32 {
        (digits as f64 * LOG2_10).ceil() as u32 + 4
    }

    pub fn zero(prec: u32) -> Self {
        BigFloat {
            neg: false,
            mag: BigUint::zero(),
            exp: 0,
            prec,
        }
    }

    /// Exact conversion. Panics on non-finite input.
    pub fn from_f64(x: f64, prec: u32) -> Self {
        assert!(x.is_finite(), "BigFloat::from_f64 on non-finite value");
        if x == 0.0 {
            return Self::zero(prec);
        }
        let (m, e, s) = FloatCore::integer_decode(x);
        Self::normalized(s < 0, BigUint::from(m), e as i64, prec.max(53))
    }

    pub fn from_i64(v: i64, prec: u32) -> Self {
        if v == 0 {
            return Self::zero(prec);
        }
        Self::normalized(v < 0, BigUint::from(v.unsigned_abs()), 0, prec.max(64))
    }

    fn normalized(neg: bool, mut mag: BigUint, mut exp: i64, prec: u32) -> Self {
        if mag.is_zero() {
            return Self::zero(prec);
        }
        let bits = mag.bits();
        if bits > prec as u64 {
            let shift = bits - prec as u64;
            mag >>= shift;
            exp += shift as i64;
        }
        BigFloat {
            neg,
            mag,
            exp,
            prec,
        }
    }

    pub fn precision(&self) -> u32 {
        self.prec
    }

    /// Bound on the relative error of one arithmetic operation.
    pub fn unit_roundoff(prec: u32) -> f64 {
        2f64.powi(2 - prec as i32)
    }

    pub fn is_zero(&self) -> bool {
        self.mag.is_zero()
    }

    pub fn signum(&self) -> i32 {
        if self.mag.is_zero() {
            0
        } else if self.neg {
            -1
        } else {
            1
        }
    }

    pub fn abs(&self) -> Self {
        let mut r = self.clone();
        r.neg = false;
        r
    }

    /// Position of the leading bit: `2^(top-1) <= |x| < 2^top`.
    fn top(&self) -> i64 {
        self.exp + self.mag.bits() as i64
    }

    /// Nearest-ish `f64`; saturates to `±inf` / `±0` outside the double range.
    pub fn to_f64(&self) -> f64 {
        if self.mag.is_zero() {
            return 0.0;
        }
        let bits = self.mag.bits();
        let (m, e) = if bits > 64 {
            let m = (&self.mag >> (bits - 64)).to_u64().unwrap_or(u64::MAX);
            (m, self.exp + (bits - 64) as i64)
        } else {
            (self.mag.to_u64().unwrap_or(u64::MAX), self.exp)
        };
        let v = ldexp(m as f64, e);
        if self.neg {
            -v
        } else {
            v
        }
    }

    fn add_signed(&self, other_neg: bool, other: &BigFloat) -> BigFloat {
        let prec = self.prec.max(other.prec);
        if other.mag.is_zero() {
            return Self::normalized(self.neg, self.mag.clone(), self.exp, prec);
        }
        if self.mag.is_zero() {
            return Self::normalized(other_neg, other.mag.clone(), other.exp, prec);
        }
        let (ta, tb) = (self.top(), other.top());
        let gap = prec as i64 + 2;
        if ta > tb + gap {
            return Self::normalized(self.neg, self.mag.clone(), self.exp, prec);
        }
        if tb > ta + gap {
            return Self::normalized(other_neg, other.mag.clone(), other.exp, prec);
        }
        let e = self.exp.min(other.exp);
        let ma = &self.mag << (self.exp - e) as u64;
        let mb = &other.mag << (other.exp - e) as u64;
        if self.neg == other_neg {
            Self::normalized(self.neg, ma + mb, e, prec)
        } else {
            match ma.cmp(&mb) {
                Ordering::Greater => Self::normalized(self.neg, ma - mb, e, prec),
                Ordering::Less => Self::normalized(other_neg, mb - ma, e, prec),
                Ordering::Equal => Self::zero(prec),
            }
        }
    }

    fn mul_ref(&self, other: &BigFloat) -> BigFloat {
        let prec = self.prec.max(other.prec);
        if self.mag.is_zero() || other.mag.is_zero() {
            return Self::zero(prec);
        }
        Self::normalized(
            self.neg != other.neg,
            &self.mag * &other.mag,
            self.exp + other.exp,
            prec,
        )
    }

    fn div_ref(&self, other: &BigFloat) -> BigFloat {
        assert!(!other.mag.is_zero(), "BigFloat division by zero");
        let prec = self.prec.max(other.prec);
        if self.mag.is_zero() {
            return Self::zero(prec);
        }
        let shift = (prec as i64 + 2 + other.mag.bits() as i64 - self.mag.bits() as i64).max(0);
        let q = (&self.mag << shift as u64) / &other.mag;
        Self::normalized(self.neg != other.neg, q, self.exp - other.exp - shift, prec)
    }
}

fn ldexp(mut x: f64, mut e: i64) -> f64 {
    if e > 2200 {
        return f64::INFINITY;
    }
    if e < -2300 {
        return 0.0;
    }
    let up = f64::from_bits(((1023 + 1000) as u64) << 52);
    let down = f64::from_bits(((1023 - 1000) as u64) << 52);
    while e > 1000 {
        x *= up;
        e -= 1000;
    }
    while e < -1000 {
        x *= down;
        e += 1000;
    }
    x * f64::from_bits(((1023 + e) as u64) << 52)
}

impl fmt::Debug for BigFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BigFloat({:e}, {} bits)", self.to_f64(), self.prec)
    }
}

impl fmt::Display for BigFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:e}", self.to_f64())
    }
}

impl PartialEq for BigFloat {
    fn eq(&self, other: &Self) -> bool {
        self.partial_cmp(other) == Some(Ordering::Equal)
    }
}

impl PartialOrd for BigFloat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.add_signed(!other.neg, other).signum().cmp(&0))
    }
}

impl Neg for BigFloat {
    type Output = BigFloat;
    fn neg(mut self) -> BigFloat {
        if !self.mag.is_zero() {
            self.neg = !self.neg;
        }
        self
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, |$a:ident, $b:ident| $body:expr) => {
        impl $trait<BigFloat> for BigFloat {
            type Output = BigFloat;
            fn $method(self, rhs: BigFloat) -> BigFloat {
                let ($a, $b) = (&self, &rhs);
                $body
            }
        }
        impl<'a> $trait<&'a BigFloat> for &'a BigFloat {
            type Output = BigFloat;
            fn $method(self, rhs: &'a BigFloat) -> BigFloat {
                let ($a, $b) = (self, rhs);
                $body
            }
        }
    };
}

forward_binop!(Add, add, |a, b| a.add_signed(b.neg, b));
forward_binop!(Sub, sub, |a, b| a.add_signed(!b.neg, b));
forward_binop!(Mul, mul, |a, b| a.mul_ref(b));
forward_binop!(Div, div, |a, b| a.div_ref(b));
