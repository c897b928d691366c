//! Strong-field behaviour of the eigenvalue branches.
//!
//! `lambda_{m,l}(B) / B = level + 2 eps_m(z)` with `z = B R^2 / 2`, and
//! `2 eps_m(z) ~ 2 / (Gamma(|l|+m) Gamma(m)) z^{|l|+1+2(m-1)} e^{-z}`.

use crate::error::{Error, Result};
use crate::gamma::ln_gamma;
use crate::precision::PrecisionPolicy;
use crate::rootfind::root_a_split;
use crate::spectrum::{branch_root, BranchId, Disk, FieldStrength, SolveOptions};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RemainderReport {
    pub branch: BranchId,
    pub z: f64,
    /// `lambda / B - limit`.
    pub computed: f64,
    pub predicted: f64,
    pub ratio: f64,
}

/// `l + |l| + 1 + 2(m-1)`.
pub fn limit_value(branch: BranchId) -> f64 {
    branch.landau_level() as f64
}

fn remainder_power(branch: BranchId) -> f64 {
    (branch.l.unsigned_abs() + 1 + 2 * (branch.m as u64 - 1)) as f64
}

/// Leading remainder term as a function of `z`, evaluated in log space.
pub fn predicted_remainder_z(branch: BranchId, z: f64) -> f64 {
    let l_abs = branch.l.unsigned_abs() as f64;
    let m = branch.m as f64;
    let log = 2f64.ln() + remainder_power(branch) * z.ln() - z - ln_gamma(l_abs + m) - ln_gamma(m);
    log.exp()
}

/// `2 / (Gamma(|l|+m) Gamma(m)) z^{|l|+1+2(m-1)} e^{-z}` at `z = B R^2 / 2`.
pub fn predicted_remainder(branch: BranchId, field: FieldStrength, disk: Disk) -> f64 {
    predicted_remainder_z(branch, disk.kummer_z(field))
}

/// `eps_m(b, z) = -(m-1) - a_m(b, z)` with the environment's precision policy.
pub fn epsilon_m(m: usize, b: f64, z: f64, tol: f64) -> Result<f64> {
    epsilon_m_with(m, b, z, tol, &PrecisionPolicy::from_env()?)
}

pub fn epsilon_m_with(m: usize, b: f64, z: f64, tol: f64, policy: &PrecisionPolicy) -> Result<f64> {
    Ok(root_a_split(m, b, z, tol, policy)?.distance_below(m))
}

/// Computed against predicted remainder for one branch.
///
/// Refuses when `z` does not exceed the power `|l|+1+2(m-1)` (the leading
/// term is not yet dominant), when the precision policy cannot reach `z`, or
/// when the root tolerance is coarser than 1% of the predicted remainder.
pub fn remainder_report(
    branch: BranchId,
    field: FieldStrength,
    disk: Disk,
    opts: &SolveOptions,
) -> Result<RemainderReport> {
    let z = disk.kummer_z(field);
    let min_z = remainder_power(branch);
    if !(z > min_z) {
        return Err(Error::AsymptoticRegime { z, min_z });
    }
    opts.policy.admit(z)?;
    let predicted = predicted_remainder_z(branch, z);
    let root = branch_root(branch, field, disk, opts)?;
    let computed = 2.0 * root.distance_below(branch.m);
    // the root bracket is relative to the offset from its integer checkpoint
    let budget = 4.0 * opts.tol * root.offset.abs().max(computed.abs());
    if budget > 0.01 * predicted {
        return Err(Error::PrecisionExceeded {
            max_digits: opts.policy.max_digits,
            context: format!(
                "root tolerance {} cannot resolve remainder {predicted:e} at z = {z}",
                opts.tol
            ),
        });
    }
    Ok(RemainderReport {
        branch,
        z,
        computed,
        predicted,
        ratio: computed / predicted,
    })
}

/// [`remainder_report`] on the unit disk at `B = 2z`.
pub fn remainder_report_z(
    branch: BranchId,
    z: f64,
    opts: &SolveOptions,
) -> Result<RemainderReport> {
    let disk = Disk::new(1.0)?;
    remainder_report(branch, FieldStrength::new(2.0 * z)?, disk, opts)
}
