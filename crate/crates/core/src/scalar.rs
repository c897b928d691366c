//! Scalar types the hypergeometric series engine can run on.
//!
//! The engine is written once against [`SeriesScalar`]. Hardware floats give
//! the fast path, [`BigFloat`] the extended-precision path and
//! [`BigRational`] the exact path for terminating (polynomial) series.

use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::bigfloat::BigFloat;

pub trait SeriesScalar:
    Clone
    + PartialOrd
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    /// Whatever the type needs to create values (mantissa width for `BigFloat`).
    type Ctx: Copy + Send + Sync;

    fn from_f64(x: f64, ctx: Self::Ctx) -> Self;
    fn from_i64(v: i64, ctx: Self::Ctx) -> Self;
    fn to_f64(&self) -> f64;
    fn signum_i32(&self) -> i32;
    /// Per-operation relative error bound; zero for exact arithmetic.
    fn unit_roundoff(ctx: Self::Ctx) -> f64;
}

impl SeriesScalar for f64 {
    type Ctx = ();
    fn from_f64(x: f64, _: ()) -> Self {
        x
    }
    fn from_i64(v: i64, _: ()) -> Self {
        v as f64
    }
    fn to_f64(&self) -> f64 {
        *self
    }
    fn signum_i32(&self) -> i32 {
        if *self > 0.0 {
            1
        } else if *self < 0.0 {
            -1
        } else {
            0
        }
    }
    fn unit_roundoff(_: ()) -> f64 {
        f64::EPSILON / 2.0
    }
}

// Inputs are rounded to single precision on entry, so f32 results are never
// certified; the type exists for quick low-accuracy sweeps.
impl SeriesScalar for f32 {
    type Ctx = ();
    fn from_f64(x: f64, _: ()) -> Self {
        x as f32
    }
    fn from_i64(v: i64, _: ()) -> Self {
        v as f32
    }
    fn to_f64(&self) -> f64 {
        *self as f64
    }
    fn signum_i32(&self) -> i32 {
        (*self as f64).signum_i32()
    }
    fn unit_roundoff(_: ()) -> f64 {
        f32::EPSILON as f64 / 2.0
    }
}

impl Zero for BigFloat {
    fn zero() -> Self {
        BigFloat::zero(0)
    }
    fn is_zero(&self) -> bool {
        BigFloat::is_zero(self)
    }
}

impl One for BigFloat {
    fn one() -> Self {
        BigFloat::from_i64(1, 0)
    }
}

impl SeriesScalar for BigFloat {
    type Ctx = u32;
    fn from_f64(x: f64, prec: u32) -> Self {
        BigFloat::from_f64(x, prec)
    }
    fn from_i64(v: i64, prec: u32) -> Self {
        BigFloat::from_i64(v, prec)
    }
    fn to_f64(&self) -> f64 {
        BigFloat::to_f64(self)
    }
    fn signum_i32(&self) -> i32 {
        self.signum()
    }
    fn unit_roundoff(prec: u32) -> f64 {
        BigFloat::unit_roundoff(prec)
    }
}

impl SeriesScalar for BigRational {
    type Ctx = ();
    fn from_f64(x: f64, _: ()) -> Self {
        BigRational::from_float(x).expect("finite input")
    }
    fn from_i64(v: i64, _: ()) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or_else(|| {
            if self.is_negative() {
                f64::NEG_INFINITY
            } else {
                f64::INFINITY
            }
        })
    }
    fn signum_i32(&self) -> i32 {
        if self.is_positive() {
            1
        } else if self.is_negative() {
            -1
        } else {
            0
        }
    }
    fn unit_roundoff(_: ()) -> f64 {
        0.0
    }
}
