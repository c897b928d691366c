use clap::{Args, Subcommand};

use maglap::polya::{critical_field_with_margin, riesz_table, DEFAULT_SEARCH_MARGIN};
use maglap::spectrum::first_eigenvalues;
use maglap::{
    branch_eigenvalue, enumerate_spectrum, excess_constant, min_polya_ratio, radial_eigenvalues_fd,
    remainder_report, BranchId, Disk, DiskSystem, FieldStrength, LambdaGrid, OracleConfig,
    SolveOptions,
};

use crate::output::{emit, RunManifest, Table};
use crate::{Failure, OutputArgs};

type CmdResult = Result<(), Failure>;

fn solve_options(out: &OutputArgs) -> Result<SolveOptions, Failure> {
    if !(out.tol > 0.0 && out.tol <= 1e-6) {
        return Err(Failure::usage(format!(
            "--tol {} must lie in (0, 1e-6]",
            out.tol
        )));
    }
    Ok(SolveOptions::from_env()?.with_tol(out.tol))
}

fn base_manifest(command: &str, opts: &SolveOptions) -> RunManifest {
    RunManifest::new(command)
        .tolerance("root_tol", opts.tol)
        .tolerance("max_digits", opts.policy.max_digits)
}

fn system_from(radii: &[f64]) -> Result<DiskSystem, Failure> {
    if radii.is_empty() {
        Ok(DiskSystem::single(Disk::unit_area()))
    } else {
        Ok(DiskSystem::from_radii(radii)?)
    }
}

fn radii_label(system: &DiskSystem) -> String {
    let r: Vec<String> = system
        .disks()
        .iter()
        .map(|d| d.radius().to_string())
        .collect();
    r.join(",")
}

fn write(table: Table, manifest: RunManifest, out: &OutputArgs) -> CmdResult {
    emit(&table, &manifest, out.format, out.out.as_deref())?;
    Ok(())
}

#[derive(Args, Debug)]
pub struct BranchArgs {
    #[arg(long)]
    m: usize,
    #[arg(long, allow_hyphen_values = true)]
    l: i64,
    #[arg(long, default_value_t = 1.0)]
    radius: f64,
    #[arg(long, allow_hyphen_values = true)]
    b_min: f64,
    #[arg(long, allow_hyphen_values = true)]
    b_max: f64,
    #[arg(long, default_value_t = 100)]
    b_steps: usize,
    #[command(flatten)]
    out: OutputArgs,
}

fn field_grid(lo: f64, hi: f64, steps: usize) -> Result<Vec<f64>, Failure> {
    if steps == 0 {
        return Err(Failure::usage("--b-steps must be at least 1"));
    }
    if !(lo > 0.0) || !(hi >= lo) || !hi.is_finite() {
        return Err(Failure::usage(format!(
            "field range [{lo}, {hi}] must satisfy 0 < b-min <= b-max"
        )));
    }
    if steps == 1 {
        return Ok(vec![lo]);
    }
    Ok((0..steps)
        .map(|i| lo + (hi - lo) * i as f64 / (steps - 1) as f64)
        .collect())
}

pub fn branch(a: BranchArgs) -> CmdResult {
    let opts = solve_options(&a.out)?;
    let branch = BranchId::new(a.m, a.l)?;
    let disk = Disk::new(a.radius)?;
    let fields = field_grid(a.b_min, a.b_max, a.b_steps)?;
    let mut table = Table::new(&["m", "l", "B", "R", "lambda", "lambda_over_B"]);
    for &b in &fields {
        let lambda = branch_eigenvalue(branch, FieldStrength::new(b)?, disk, &opts)?;
        table.push(vec![
            a.m.into(),
            a.l.into(),
            b.into(),
            a.radius.into(),
            lambda.into(),
            (lambda / b).into(),
        ]);
    }
    let manifest = base_manifest("branch", &opts)
        .param("m", a.m)
        .param("l", a.l)
        .param("radius", a.radius)
        .param("b_min", a.b_min)
        .param("b_max", a.b_max)
        .param("b_steps", a.b_steps);
    write(table, manifest, &a.out)
}

#[derive(Args, Debug)]
pub struct SpectrumArgs {
    /// Disk radius; repeat for a disjoint union (default: one unit-area disk)
    #[arg(long)]
    radius: Vec<f64>,
    #[arg(long, allow_hyphen_values = true)]
    field: f64,
    #[arg(long, conflicts_with = "count", required_unless_present = "count")]
    threshold: Option<f64>,
    #[arg(long)]
    count: Option<usize>,
    #[command(flatten)]
    out: OutputArgs,
}

pub fn spectrum(a: SpectrumArgs) -> CmdResult {
    let opts = solve_options(&a.out)?;
    let system = system_from(&a.radius)?;
    let field = FieldStrength::new(a.field)?;
    let mut manifest = base_manifest("spectrum", &opts)
        .param("radius", radii_label(&system))
        .param("field", a.field);
    let entries = match (a.threshold, a.count) {
        (Some(t), _) => {
            manifest = manifest.param("threshold", t);
            enumerate_spectrum(&system, field, t, &opts)?
                .entries()
                .to_vec()
        }
        (None, Some(n)) => {
            if n == 0 {
                return Err(Failure::usage("--count must be at least 1"));
            }
            manifest = manifest.param("count", n);
            let mut e = first_eigenvalues(&system, field, n, &opts)?
                .entries()
                .to_vec();
            e.truncate(n);
            e
        }
        (None, None) => return Err(Failure::usage("one of --threshold or --count is required")),
    };
    let area = system.total_area();
    let mut table = Table::new(&["n", "disk_index", "m", "l", "lambda", "polya_ratio"]);
    for (i, e) in entries.iter().enumerate() {
        let n = i + 1;
        table.push(vec![
            n.into(),
            e.disk_index.into(),
            e.branch.m.into(),
            e.branch.l.into(),
            e.lambda.into(),
            (e.lambda * area / (4.0 * std::f64::consts::PI * n as f64)).into(),
        ]);
    }
    write(table, manifest, &a.out)
}

#[derive(Subcommand, Debug)]
pub enum PolyaCommand {
    /// Minimum Pólya ratio at each field strength
    Scan {
        #[arg(long)]
        radius: Vec<f64>,
        /// Comma-separated field strengths
        #[arg(long, value_delimiter = ',', required = true)]
        b_grid: Vec<f64>,
        #[arg(long, default_value_t = DEFAULT_SEARCH_MARGIN)]
        search_margin: f64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// First field at which the minimum ratio drops below one
    Critical {
        #[arg(long)]
        radius: Vec<f64>,
        #[arg(long, num_args = 2, value_names = ["LO", "HI"], required = true)]
        bracket: Vec<f64>,
        #[arg(long, default_value_t = 1e-3)]
        tol_b: f64,
        #[arg(long, default_value_t = DEFAULT_SEARCH_MARGIN)]
        search_margin: f64,
        #[command(flatten)]
        out: OutputArgs,
    },
}

pub fn polya(cmd: PolyaCommand) -> CmdResult {
    match cmd {
        PolyaCommand::Scan {
            radius,
            b_grid,
            search_margin,
            out,
        } => {
            let opts = solve_options(&out)?;
            let system = system_from(&radius)?;
            let mut table = Table::new(&["B", "min_ratio", "argmin_n"]);
            for &b in &b_grid {
                let scan = min_polya_ratio(&system, FieldStrength::new(b)?, search_margin, &opts)?;
                table.push(vec![b.into(), scan.min_ratio.into(), scan.argmin_n.into()]);
            }
            let grid: Vec<String> = b_grid.iter().map(f64::to_string).collect();
            let manifest = base_manifest("polya scan", &opts)
                .param("radius", radii_label(&system))
                .param("b_grid", grid.join(","))
                .param("search_margin", search_margin);
            write(table, manifest, &out)
        }
        PolyaCommand::Critical {
            radius,
            bracket,
            tol_b,
            search_margin,
            out,
        } => {
            let opts = solve_options(&out)?;
            let system = system_from(&radius)?;
            let (lo, hi) = (bracket[0], bracket[1]);
            let c = critical_field_with_margin(&system, lo, hi, tol_b, search_margin, &opts)?;
            let mut table = Table::new(&["B_crit", "n_crit"]);
            table.push(vec![c.b_crit.into(), c.n_crit.into()]);
            let manifest = base_manifest("polya critical", &opts)
                .param("radius", radii_label(&system))
                .param("bracket", format!("{lo},{hi}"))
                .param("search_margin", search_margin)
                .tolerance("tol_b", tol_b);
            write(table, manifest, &out)
        }
    }
}

#[derive(Args, Debug)]
pub struct RieszArgs {
    #[arg(long)]
    radius: Vec<f64>,
    #[arg(long, allow_hyphen_values = true)]
    gamma: f64,
    #[arg(long, allow_hyphen_values = true)]
    field: f64,
    #[arg(long)]
    lambda_max: f64,
    #[arg(long, default_value_t = 200)]
    samples: usize,
    #[command(flatten)]
    out: OutputArgs,
}

pub fn riesz(a: RieszArgs) -> CmdResult {
    let opts = solve_options(&a.out)?;
    if !(a.gamma >= 0.0) || !a.gamma.is_finite() {
        return Err(Failure::usage(format!(
            "--gamma {} must be non-negative",
            a.gamma
        )));
    }
    if a.samples == 0 {
        return Err(Failure::usage("--samples must be at least 1"));
    }
    let system = system_from(&a.radius)?;
    let field = FieldStrength::new(a.field)?;
    if !(a.lambda_max > a.field) || !a.lambda_max.is_finite() {
        return Err(Failure::usage(format!(
            "--lambda-max {} must exceed the field",
            a.lambda_max
        )));
    }
    let grid = LambdaGrid {
        lambda_max: a.lambda_max,
        samples: a.samples,
    };
    let spectrum = enumerate_spectrum(&system, field, a.lambda_max, &opts)?;
    let area = system.total_area();
    let r_gamma = excess_constant(a.gamma);
    let mut table = Table::new(&["lambda", "value", "ratio", "R_gamma"]);
    for p in riesz_table(&spectrum, area, a.gamma, &grid.points(field)) {
        table.push(vec![
            p.lambda.into(),
            p.value.into(),
            p.ratio.into(),
            r_gamma.into(),
        ]);
    }
    let manifest = base_manifest("riesz", &opts)
        .param("radius", radii_label(&system))
        .param("gamma", a.gamma)
        .param("field", a.field)
        .param("lambda_max", a.lambda_max)
        .param("samples", a.samples);
    write(table, manifest, &a.out)
}

#[derive(Args, Debug)]
pub struct AsymptArgs {
    #[arg(long)]
    m: usize,
    #[arg(long, allow_hyphen_values = true)]
    l: i64,
    #[arg(long, default_value_t = 1.0)]
    radius: f64,
    /// Comma-separated values of z = B R^2 / 2
    #[arg(long, value_delimiter = ',', required = true)]
    z_list: Vec<f64>,
    #[command(flatten)]
    out: OutputArgs,
}

pub fn asympt(a: AsymptArgs) -> CmdResult {
    let opts = solve_options(&a.out)?;
    let branch = BranchId::new(a.m, a.l)?;
    let disk = Disk::new(a.radius)?;
    let mut table = Table::new(&["z", "computed", "predicted", "ratio"]);
    for &z in &a.z_list {
        let field = FieldStrength::new(2.0 * z / (a.radius * a.radius))?;
        let r = remainder_report(branch, field, disk, &opts)?;
        table.push(vec![
            r.z.into(),
            r.computed.into(),
            r.predicted.into(),
            r.ratio.into(),
        ]);
    }
    let zs: Vec<String> = a.z_list.iter().map(f64::to_string).collect();
    let manifest = base_manifest("asympt", &opts)
        .param("m", a.m)
        .param("l", a.l)
        .param("radius", a.radius)
        .param("z_list", zs.join(","));
    write(table, manifest, &a.out)
}

#[derive(Args, Debug)]
pub struct OracleArgs {
    /// Angular momentum (default suite: -4..=2)
    #[arg(long, allow_hyphen_values = true)]
    l: Option<i64>,
    /// Field strength (default suite: 2, 10, 30)
    #[arg(long)]
    field: Option<f64>,
    /// Disk radius (default suite: 0.5, 1)
    #[arg(long)]
    radius: Option<f64>,
    #[arg(long, default_value_t = 2)]
    m_max: usize,
    #[arg(long, default_value_t = maglap::oracle::DEFAULT_GRID_POINTS)]
    grid_points: usize,
    #[arg(long, default_value_t = 2)]
    richardson_levels: u32,
    #[command(flatten)]
    out: OutputArgs,
}

pub fn oracle_check(a: OracleArgs) -> CmdResult {
    let opts = solve_options(&a.out)?;
    let ls: Vec<i64> = a.l.map_or_else(|| (-4..=2).collect(), |l| vec![l]);
    let fields = a.field.map_or_else(|| vec![2.0, 10.0, 30.0], |b| vec![b]);
    let radii = a.radius.map_or_else(|| vec![0.5, 1.0], |r| vec![r]);
    let mut table = Table::new(&["m", "l", "B", "R", "kummer", "fd", "rel_dev"]);
    for &l in &ls {
        for &b in &fields {
            for &r in &radii {
                let field = FieldStrength::new(b)?;
                let disk = Disk::new(r)?;
                let cfg = OracleConfig {
                    grid_points: a.grid_points,
                    richardson_levels: a.richardson_levels,
                    ..OracleConfig::new(l, b, r, a.m_max)
                };
                let fd = radial_eigenvalues_fd(&cfg)?;
                for (i, &fd_value) in fd.iter().enumerate() {
                    let m = i + 1;
                    let kummer = branch_eigenvalue(BranchId::new(m, l)?, field, disk, &opts)?;
                    let dev = ((fd_value - kummer) / kummer).abs();
                    table.push(vec![
                        m.into(),
                        l.into(),
                        b.into(),
                        r.into(),
                        kummer.into(),
                        fd_value.into(),
                        dev.into(),
                    ]);
                }
            }
        }
    }
    let manifest = base_manifest("oracle-check", &opts)
        .param("l", a.l.map_or("-4..=2".to_string(), |l| l.to_string()))
        .param(
            "field",
            a.field.map_or("2,10,30".to_string(), |b| b.to_string()),
        )
        .param(
            "radius",
            a.radius.map_or("0.5,1".to_string(), |r| r.to_string()),
        )
        .param("m_max", a.m_max)
        .param("grid_points", a.grid_points)
        .param("richardson_levels", a.richardson_levels);
    write(table, manifest, &a.out)
}
