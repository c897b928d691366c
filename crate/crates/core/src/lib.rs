//! Eigenvalues of the magnetic Dirichlet Laplacian with constant field on
//! disks and disjoint unions of disks, computed from the negative roots of
//! Kummer's function `M(a, b, z)`.
//!
//! The series engine in [`kummer`] is generic over [`scalar::SeriesScalar`]
//! (`f32`, `f64`, [`BigFloat`] and exact [`Exact`] rationals); the
//! finite-difference [`oracle`], the tridiagonal solver and the bracket
//! refinement are generic over `num_traits::Float`.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod asymptotics;
pub mod bigfloat;
pub mod error;
pub mod gamma;
pub mod kummer;
pub mod oracle;
pub mod polya;
pub mod precision;
pub mod rootfind;
pub mod scalar;
pub mod spectrum;
pub mod tridiag;

pub use asymptotics::{
    epsilon_m, epsilon_m_with, limit_value, predicted_remainder, predicted_remainder_z,
    remainder_report, remainder_report_z, RemainderReport,
};
pub use bigfloat::BigFloat;
pub use error::{Error, Result};
pub use kummer::{
    hyp2f2, kummer_m, kummer_m_digits, kummer_m_sign, kummer_series, CertifiedSign, KummerArgs,
    SeriesEval, Sign, SplitParam,
};
pub use oracle::{radial_eigenvalues_fd, radial_eigenvalues_fd_in, sturm_count, OracleConfig};
pub use polya::{
    classical_constant, critical_field, excess_constant, min_polya_ratio, polya_ratio,
    riesz_ratio_scan, CriticalField, LambdaGrid, PolyaScan, RieszRatioScan,
};
pub use precision::{PrecisionPolicy, MAX_DIGITS_ENV};
pub use rootfind::{
    count_roots_z, root_a, root_a_with, root_z, root_z_with, RootRequest, SplitRoot, DEFAULT_TOL,
};
pub use spectrum::{
    branch_eigenvalue, counting_function, enumerate_spectrum, nth_eigenvalue, riesz_mean, BranchId,
    Disk, DiskSystem, FieldStrength, SolveOptions, Spectrum, SpectrumEntry,
};
pub use tridiag::SymTridiagonal;

/// Exact rationals for terminating (polynomial) series.
pub type Exact = num_rational::BigRational;

pub type KummerEval64 = SeriesEval<f64>;
pub type KummerEval32 = SeriesEval<f32>;
pub type KummerEvalBig = SeriesEval<BigFloat>;
pub type KummerEvalExact = SeriesEval<Exact>;

pub type Tridiagonal64 = SymTridiagonal<f64>;
pub type Tridiagonal32 = SymTridiagonal<f32>;
