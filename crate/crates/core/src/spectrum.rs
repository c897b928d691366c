//! Eigenvalue branches of the magnetic Dirichlet Laplacian on disks and on
//! finite disjoint unions of disks.
//!
//! In the angular sector `l` the eigenvalues are
//! `lambda_{m,l}(B) = (l + |l| + 1 - 2 a_m(|l|+1, B R^2 / 2)) B`.

use std::cmp::Ordering;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::precision::PrecisionPolicy;
use crate::rootfind::{count_roots_a_above, root_a_split, roots_a_above, SplitRoot, DEFAULT_TOL};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BranchId {
    pub m: usize,
    pub l: i64,
}

impl BranchId {
    pub fn new(m: usize, l: i64) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidParam("radial index m starts at 1".into()));
        }
        Ok(BranchId { m, l })
    }

    /// `b = |l| + 1` in `M(a, b, z)`.
    pub fn kummer_b(&self) -> f64 {
        self.l.unsigned_abs() as f64 + 1.0
    }

    /// Landau level `l + |l| + 1 + 2(m-1)` that `lambda / B` tends to.
    pub fn landau_level(&self) -> i64 {
        self.l + self.l.abs() + 1 + 2 * (self.m as i64 - 1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Disk {
    radius: f64,
}

impl Disk {
    pub fn new(radius: f64) -> Result<Self> {
        if !(radius > 0.0) || !radius.is_finite() {
            return Err(Error::InvalidParam(format!(
                "radius {radius} must be positive"
            )));
        }
        Ok(Disk { radius })
    }

    /// The disk of area one, radius `1/sqrt(pi)`.
    pub fn unit_area() -> Self {
        Disk {
            radius: 1.0 / std::f64::consts::PI.sqrt(),
        }
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn area(&self) -> f64 {
        std::f64::consts::PI * self.radius * self.radius
    }

    /// `z = B R^2 / 2`.
    pub fn kummer_z(&self, field: FieldStrength) -> f64 {
        0.5 * field.value() * self.radius * self.radius
    }
}

/// Pairwise disjoint disks; positions do not affect the spectrum.
#[derive(Debug, Clone, PartialEq)]
pub struct DiskSystem {
    disks: Vec<Disk>,
}

impl DiskSystem {
    pub fn new(disks: Vec<Disk>) -> Result<Self> {
        if disks.is_empty() {
            return Err(Error::InvalidParam(
                "a disk system needs at least one disk".into(),
            ));
        }
        Ok(DiskSystem { disks })
    }

    pub fn single(disk: Disk) -> Self {
        DiskSystem { disks: vec![disk] }
    }

    pub fn from_radii(radii: &[f64]) -> Result<Self> {
        Self::new(radii.iter().map(|&r| Disk::new(r)).collect::<Result<_>>()?)
    }

    pub fn disks(&self) -> &[Disk] {
        &self.disks
    }

    pub fn total_area(&self) -> f64 {
        self.disks.iter().map(Disk::area).sum()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct FieldStrength(f64);

impl FieldStrength {
    /// A positive field. Use [`FieldStrength::normalize`] for signed input.
    pub fn new(b: f64) -> Result<Self> {
        if b == 0.0 {
            return Err(Error::NonMagneticUnsupported);
        }
        if !(b > 0.0) || !b.is_finite() {
            return Err(Error::InvalidParam(format!(
                "field strength {b} must be positive"
            )));
        }
        Ok(FieldStrength(b))
    }

    /// Maps `(B, l)` with `B < 0` to `(-B, -l)`.
    pub fn normalize(b: f64, branch: BranchId) -> Result<(Self, BranchId)> {
        if b < 0.0 {
            let flipped = BranchId {
                m: branch.m,
                l: -branch.l,
            };
            Ok((Self::new(-b)?, flipped))
        } else {
            Ok((Self::new(b)?, branch))
        }
    }

    /// `|B|`: the full spectrum is invariant under `B -> -B`.
    pub fn magnitude(b: f64) -> Result<Self> {
        Self::new(b.abs())
    }

    pub fn value(&self) -> f64 {
        self.0
    }
}

/// Root tolerance and precision policy shared by every solve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolveOptions {
    pub tol: f64,
    pub policy: PrecisionPolicy,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            tol: DEFAULT_TOL,
            policy: PrecisionPolicy::default(),
        }
    }
}

impl SolveOptions {
    pub fn from_env() -> Result<Self> {
        Ok(SolveOptions {
            tol: DEFAULT_TOL,
            policy: PrecisionPolicy::from_env()?,
        })
    }

    pub fn with_tol(self, tol: f64) -> Self {
        SolveOptions { tol, ..self }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectrumEntry {
    pub lambda: f64,
    pub disk_index: usize,
    pub branch: BranchId,
}

/// Sorted eigenvalues up to `threshold`, each with its branch.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    entries: Vec<SpectrumEntry>,
    threshold: f64,
    disk_count: usize,
}

fn entry_order(a: &SpectrumEntry, b: &SpectrumEntry) -> Ordering {
    a.lambda
        .total_cmp(&b.lambda)
        .then(a.disk_index.cmp(&b.disk_index))
        .then(a.branch.m.cmp(&b.branch.m))
        .then(a.branch.l.cmp(&b.branch.l))
}

impl Spectrum {
    /// Sorts by `(lambda, disk_index, m, l)`.
    pub fn from_entries(
        mut entries: Vec<SpectrumEntry>,
        threshold: f64,
        disk_count: usize,
    ) -> Self {
        entries.sort_by(entry_order);
        Spectrum {
            entries,
            threshold,
            disk_count,
        }
    }

    pub fn entries(&self) -> &[SpectrumEntry] {
        &self.entries
    }

    pub fn threshold(&self) -> f64 {
        self.threshold
    }

    pub fn disk_count(&self) -> usize {
        self.disk_count
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn lambdas(&self) -> Vec<f64> {
        self.entries.iter().map(|e| e.lambda).collect()
    }

    /// The union spectrum of several systems, disk indices offset in order.
    pub fn merge(parts: &[Spectrum]) -> Spectrum {
        let mut offset = 0;
        let mut entries = Vec::new();
        let mut threshold = f64::INFINITY;
        for part in parts {
            entries.extend(part.entries.iter().map(|e| SpectrumEntry {
                disk_index: e.disk_index + offset,
                ..*e
            }));
            offset += part.disk_count;
            threshold = threshold.min(part.threshold);
        }
        Spectrum::from_entries(entries, threshold, offset)
    }
}

fn z_for(disk: &Disk, field: FieldStrength) -> f64 {
    disk.kummer_z(field)
}

/// `lambda / B = level + 2 eps` with `eps = -(m-1) - a_m`.
fn lambda_from_root(branch: BranchId, field: FieldStrength, root: &SplitRoot) -> f64 {
    let eps = root.distance_below(branch.m);
    field.value() * (branch.landau_level() as f64 + 2.0 * eps)
}

/// The root `a_m(|l|+1, B R^2/2)` behind `lambda_{m,l}(B)`.
pub fn branch_root(
    branch: BranchId,
    field: FieldStrength,
    disk: Disk,
    opts: &SolveOptions,
) -> Result<SplitRoot> {
    root_a_split(
        branch.m,
        branch.kummer_b(),
        z_for(&disk, field),
        opts.tol,
        &opts.policy,
    )
}

/// `lambda_{m,l}(B)` on the disk.
pub fn branch_eigenvalue(
    branch: BranchId,
    field: FieldStrength,
    disk: Disk,
    opts: &SolveOptions,
) -> Result<f64> {
    let root = branch_root(branch, field, disk, opts)?;
    Ok(lambda_from_root(branch, field, &root))
}

/// Angular momenta that can carry an eigenvalue `<= threshold`.
///
/// For every `l`, `lambda >= l^2/R^2 + B l` (drop `B^2 r^2/4`, then use
/// `j_{|l|,m} >= |l|`); for `l >= 0` also `lambda > (2l+1) B`. Both bounds
/// are multiplied out by `scale >= 1`, which only ever widens the range.
pub fn sector_range(disk: &Disk, field: FieldStrength, threshold: f64, scale: f64) -> (i64, i64) {
    let b = field.value();
    let r2 = disk.radius * disk.radius;
    let t = threshold * scale;
    if threshold <= b {
        return (0, -1);
    }
    // l <= 0: l^2/R^2 - B|l| <= t
    let br2 = b * r2;
    let neg = 0.5 * (br2 + (br2 * br2 + 4.0 * t * r2).sqrt());
    let l_min = -(neg.floor() as i64);
    // l > 0: (2l + 1) B < t and l^2/R^2 + B l <= t
    let landau = 0.5 * (t / b - 1.0);
    let landau_max = if landau <= 0.0 {
        0
    } else {
        (landau.ceil() as i64 - 1).max(0)
    };
    let bessel_max = (0.5 * (-br2 + (br2 * br2 + 4.0 * t * r2).sqrt())).floor() as i64;
    let l_max = landau_max.min(bessel_max.max(0));
    (l_min, l_max)
}

fn a_floor(l: i64, field: FieldStrength, threshold: f64) -> f64 {
    0.5 * ((l + l.abs() + 1) as f64 - threshold / field.value())
}

fn sectors(
    system: &DiskSystem,
    field: FieldStrength,
    threshold: f64,
    scale: f64,
) -> Vec<(usize, i64)> {
    system
        .disks
        .iter()
        .enumerate()
        .flat_map(|(i, d)| {
            let (lo, hi) = sector_range(d, field, threshold, scale);
            (lo..=hi).map(move |l| (i, l))
        })
        .collect()
}

fn sector_entries(
    disk_index: usize,
    disk: &Disk,
    l: i64,
    field: FieldStrength,
    threshold: f64,
    opts: &SolveOptions,
) -> Result<Vec<SpectrumEntry>> {
    let b = l.unsigned_abs() as f64 + 1.0;
    let floor = a_floor(l, field, threshold);
    if floor >= 0.0 {
        return Ok(Vec::new());
    }
    let roots = roots_a_above(b, z_for(disk, field), floor, opts.tol, &opts.policy)?;
    Ok(roots
        .iter()
        .enumerate()
        .map(|(i, root)| {
            let branch = BranchId { m: i + 1, l };
            SpectrumEntry {
                lambda: lambda_from_root(branch, field, root),
                disk_index,
                branch,
            }
        })
        .collect())
}

/// Every eigenvalue `<= threshold`, over all disks and branches.
pub fn enumerate_spectrum(
    system: &DiskSystem,
    field: FieldStrength,
    threshold: f64,
    opts: &SolveOptions,
) -> Result<Spectrum> {
    enumerate_spectrum_scaled(system, field, threshold, opts, 1.0)
}

/// [`enumerate_spectrum`] with the sector truncation bounds widened by `scale`.
pub fn enumerate_spectrum_scaled(
    system: &DiskSystem,
    field: FieldStrength,
    threshold: f64,
    opts: &SolveOptions,
    scale: f64,
) -> Result<Spectrum> {
    if !threshold.is_finite() {
        return Err(Error::InvalidParam(format!(
            "threshold {threshold} is not finite"
        )));
    }
    if !(scale >= 1.0) {
        return Err(Error::InvalidParam(format!(
            "truncation scale {scale} below 1"
        )));
    }
    let parts: Vec<Vec<SpectrumEntry>> = sectors(system, field, threshold, scale)
        .into_par_iter()
        .map(|(i, l)| sector_entries(i, &system.disks[i], l, field, threshold, opts))
        .collect::<Result<_>>()?;
    Ok(Spectrum::from_entries(
        parts.into_iter().flatten().collect(),
        threshold,
        system.disks.len(),
    ))
}

fn count_with(
    system: &DiskSystem,
    field: FieldStrength,
    lambda: f64,
    inclusive: bool,
    policy: &PrecisionPolicy,
) -> Result<usize> {
    if !lambda.is_finite() {
        return Err(Error::InvalidParam(format!(
            "lambda {lambda} is not finite"
        )));
    }
    let counts: Vec<usize> = sectors(system, field, lambda, 1.0)
        .into_par_iter()
        .map(|(i, l)| {
            let floor = a_floor(l, field, lambda);
            if floor >= 0.0 {
                return Ok(0);
            }
            let b = l.unsigned_abs() as f64 + 1.0;
            let z = z_for(&system.disks[i], field);
            count_roots_a_above(b, z, floor, inclusive, policy)
        })
        .collect::<Result<_>>()?;
    Ok(counts.into_iter().sum())
}

/// `#{n : lambda_n < lambda}`, from certified signs only.
pub fn counting_function(
    system: &DiskSystem,
    field: FieldStrength,
    lambda: f64,
    opts: &SolveOptions,
) -> Result<usize> {
    count_with(system, field, lambda, false, &opts.policy)
}

/// `#{n : lambda_n <= lambda}`.
pub fn counting_function_inclusive(
    system: &DiskSystem,
    field: FieldStrength,
    lambda: f64,
    opts: &SolveOptions,
) -> Result<usize> {
    count_with(system, field, lambda, true, &opts.policy)
}

/// A threshold with at least `n` eigenvalues below or at it.
fn threshold_for(
    system: &DiskSystem,
    field: FieldStrength,
    n: usize,
    opts: &SolveOptions,
) -> Result<f64> {
    let weyl = 4.0 * std::f64::consts::PI * n as f64 / system.total_area();
    let mut lambda = 1.5 * field.value() + weyl;
    for _ in 0..200 {
        if counting_function_inclusive(system, field, lambda, opts)? >= n {
            return Ok(lambda);
        }
        lambda *= 1.5;
    }
    Err(Error::ConvergenceFailure {
        operation: "threshold search".into(),
        detail: format!("fewer than {n} eigenvalues below {lambda}"),
    })
}

/// The sorted spectrum up to the smallest threshold found that holds `n` eigenvalues.
pub fn first_eigenvalues(
    system: &DiskSystem,
    field: FieldStrength,
    n: usize,
    opts: &SolveOptions,
) -> Result<Spectrum> {
    let threshold = threshold_for(system, field, n, opts)?;
    enumerate_spectrum(system, field, threshold, opts)
}

/// `lambda_n` with its branch and disk.
pub fn nth_eigenvalue(
    system: &DiskSystem,
    field: FieldStrength,
    n: usize,
    opts: &SolveOptions,
) -> Result<(f64, BranchId, usize)> {
    if n == 0 {
        return Err(Error::InvalidParam("eigenvalue index n starts at 1".into()));
    }
    if let [disk] = system.disks() {
        let r2 = disk.radius * disk.radius;
        if field.value() >= 2.0 * n as f64 / r2 {
            let branch = BranchId {
                m: 1,
                l: -(n as i64 - 1),
            };
            return Ok((branch_eigenvalue(branch, field, *disk, opts)?, branch, 0));
        }
    }
    let spec = first_eigenvalues(system, field, n, opts)?;
    let e = spec.entries().get(n - 1).ok_or(Error::IndexOutOfRange {
        index: n,
        available: spec.len(),
    })?;
    Ok((e.lambda, e.branch, e.disk_index))
}

/// `sum over lambda_n < lambda of (lambda - lambda_n)^gamma`.
pub fn riesz_mean(
    system: &DiskSystem,
    field: FieldStrength,
    lambda: f64,
    gamma: f64,
    opts: &SolveOptions,
) -> Result<f64> {
    if !(gamma >= 0.0) || !gamma.is_finite() {
        return Err(Error::InvalidParam(format!(
            "gamma {gamma} must be non-negative"
        )));
    }
    if gamma == 0.0 {
        return Ok(counting_function(system, field, lambda, opts)? as f64);
    }
    let spec = enumerate_spectrum(system, field, lambda, opts)?;
    Ok(riesz_sum(spec.entries(), lambda, gamma))
}

/// Riesz sum over an already enumerated (sorted) spectrum.
pub fn riesz_sum(entries: &[SpectrumEntry], lambda: f64, gamma: f64) -> f64 {
    entries
        .iter()
        .take_while(|e| e.lambda < lambda)
        .map(|e| {
            if gamma == 0.0 {
                1.0
            } else {
                (lambda - e.lambda).powf(gamma)
            }
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn opts() -> SolveOptions {
        SolveOptions::default()
    }

    fn unit() -> Disk {
        Disk::new(1.0).unwrap()
    }

    fn field(b: f64) -> FieldStrength {
        FieldStrength::new(b).unwrap()
    }

    #[test]
    fn crossing_values() {
        let l0 = BranchId::new(1, 0).unwrap();
        assert_relative_eq!(
            branch_eigenvalue(l0, field(2.0), unit(), &opts()).unwrap(),
            6.0,
            max_relative = 1e-14
        );
        let l4 = BranchId::new(1, -4).unwrap();
        assert_relative_eq!(
            branch_eigenvalue(l4, field(10.0), unit(), &opts()).unwrap(),
            30.0,
            max_relative = 1e-14
        );
    }

    #[test]
    fn strong_field_branch_close_to_landau_level() {
        // a_1(1, 25) from a 80-digit root solve
        let eps = 3.326_734_313_343_991_5e-10;
        let lam =
            branch_eigenvalue(BranchId::new(1, 0).unwrap(), field(50.0), unit(), &opts()).unwrap();
        assert_relative_eq!(lam, 50.0 * (1.0 + 2.0 * eps), max_relative = 1e-14);
    }

    #[test]
    fn field_rejections_and_symmetry() {
        assert!(matches!(
            FieldStrength::new(0.0),
            Err(Error::NonMagneticUnsupported)
        ));
        assert!(FieldStrength::new(-1.0).is_err());
        let (f, br) = FieldStrength::normalize(-3.0, BranchId::new(2, 4).unwrap()).unwrap();
        assert_eq!(f.value(), 3.0);
        assert_eq!(br, BranchId { m: 2, l: -4 });
    }

    #[test]
    fn below_field_is_empty() {
        let sys = DiskSystem::single(unit());
        let s = enumerate_spectrum(&sys, field(10.0), 9.0, &opts()).unwrap();
        assert!(s.is_empty());
        assert_eq!(
            counting_function(&sys, field(10.0), 10.0, &opts()).unwrap(),
            0
        );
    }

    #[test]
    fn spectrum_is_sorted_and_bounded() {
        let sys = DiskSystem::single(unit());
        let s = enumerate_spectrum(&sys, field(3.0), 40.0, &opts()).unwrap();
        assert!(!s.is_empty());
        for w in s.entries().windows(2) {
            assert!(w[0].lambda <= w[1].lambda);
        }
        for e in s.entries() {
            assert!(e.lambda > 3.0 && e.lambda <= 40.0);
        }
        assert_eq!(
            counting_function_inclusive(&sys, field(3.0), 40.0, &opts()).unwrap(),
            s.len()
        );
    }

    #[test]
    fn nth_matches_enumeration_and_fast_path() {
        let sys = DiskSystem::single(unit());
        let (l1, _, _) = nth_eigenvalue(&sys, field(4.0), 1, &opts()).unwrap();
        let s = enumerate_spectrum(&sys, field(4.0), 30.0, &opts()).unwrap();
        assert_eq!(l1, s.entries()[0].lambda);

        // B = 2n / R^2 with n = 11: lambda_11 = lambda_{1,-10} = 3B
        let (l11, br, _) = nth_eigenvalue(&sys, field(22.0), 11, &opts()).unwrap();
        assert_eq!(br, BranchId { m: 1, l: -10 });
        assert_relative_eq!(l11, 66.0, max_relative = 1e-13);
        let spec = first_eigenvalues(&sys, field(22.0), 11, &opts()).unwrap();
        assert_relative_eq!(spec.entries()[10].lambda, l11, max_relative = 1e-13);
    }

    #[test]
    fn two_identical_disks_double_every_eigenvalue() {
        let two = DiskSystem::from_radii(&[1.0, 1.0]).unwrap();
        let one = DiskSystem::single(unit());
        let (a, _, _) = nth_eigenvalue(&two, field(5.0), 2, &opts()).unwrap();
        let (b, _, _) = nth_eigenvalue(&one, field(5.0), 1, &opts()).unwrap();
        assert_relative_eq!(a, b, max_relative = 1e-13);
    }

    #[test]
    fn weak_field_count() {
        // lambda < 30 at B = 0.01 on the unit disk: j01^2, 2 x j11^2, 2 x j21^2
        let sys = DiskSystem::single(unit());
        assert_eq!(
            counting_function(&sys, field(0.01), 30.0, &opts()).unwrap(),
            5
        );
    }

    #[test]
    fn riesz_mean_small_case() {
        let sys = DiskSystem::single(unit());
        let spec = enumerate_spectrum(&sys, field(5.0), 5.5, &opts()).unwrap();
        let want: f64 = spec.lambdas().iter().map(|l| 5.5 - l).sum();
        let got = riesz_mean(&sys, field(5.0), 5.5, 1.0, &opts()).unwrap();
        assert_eq!(got, want);
        assert_eq!(
            riesz_mean(&sys, field(5.0), 30.0, 0.0, &opts()).unwrap(),
            counting_function(&sys, field(5.0), 30.0, &opts()).unwrap() as f64
        );
    }

    #[test]
    fn sector_range_covers_landau_bound() {
        let (lo, hi) = sector_range(&unit(), field(10.0), 35.0, 1.0);
        assert_eq!(hi, 1);
        assert!(lo <= -10);
        assert_eq!(sector_range(&unit(), field(10.0), 9.0, 1.0), (0, -1));
    }
}
