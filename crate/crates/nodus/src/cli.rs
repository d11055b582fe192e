//! Command-line definitions and the command implementations.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use nodus_core::aero::{solve_rigid, solve_tombo, ChordArms, CoefficientModel, OperatingPoint, SolverOptions};
use nodus_core::blurvision::{estimate_beta, PipelineOptions, RansacOptions};
use nodus_core::geometry::{
    fit_planform, section_properties, PlanformFunctions, PropellerGeometry, RepresentativeSection,
};
use nodus_core::material::{chamis_moduli, ElasticModuli};
use nodus_core::metrics::{force_per_thickness, normalize, summarize};
use nodus_core::reaction::{bounce_setpoint, simulate_recovery, RecoverySim};
use nodus_core::{rad_s_to_rpm, rpm_to_rad_s};

use crate::error::{CliError, Result};
use crate::io::config::{GridConfig, RunConfig};
use crate::io::results::{
    read_characteristics, write_beta, write_characteristics, write_solve_rows, write_trajectory, FitReport, ImpactOut,
    ImpactRow, RecoveryJson, SolveSummary, SweepSummary,
};
use crate::io::{frames, geometry, material, reaction, read_csv, write_csv, write_json};
use crate::parallel::{par_sweep, par_sweep_rigid};

#[derive(Debug, Parser)]
#[command(
    name = "nodus",
    version,
    about = "Deformable-joint propeller model: fitting, solving, sweeps, blur-image angles and collision recovery."
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalOpts {
    /// Run configuration (JSON).
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Output directory, created if missing.
    #[arg(long, global = true, default_value = ".")]
    pub out: PathBuf,
    /// Seed for randomized steps (RANSAC).
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Gauss–Legendre nodes per spanwise region.
    #[arg(long, global = true)]
    pub quad: Option<usize>,
    /// Solver tolerance on |ΔF_t| + |ΔF_d| (N).
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    #[arg(long, global = true)]
    pub max_iters: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Fit leading edge, trailing edge and pitch; writes fit.json.
    Fit(FitArgs),
    /// Forces and nodus angles at one speed; writes solve.csv and solve.json.
    Solve(SolveArgs),
    /// Speed sweep with critical points; writes sweep.csv and sweep.json.
    Sweep(SweepArgs),
    /// Bending angle from a blurred frame directory; writes beta.csv.
    Beta(BetaArgs),
    /// Bounce setpoint and recovery simulation; writes trajectory.csv and recovery.json.
    React(ReactArgs),
    /// Normalizes a characteristics table; writes normalized.csv and table.csv.
    Metrics(MetricsArgs),
}

#[derive(Debug, Args)]
pub struct FitArgs {
    /// Planform CSV; defaults to the one named in the config.
    #[arg(long)]
    pub geometry: Option<PathBuf>,
    /// Interior breakpoints (m), comma separated.
    #[arg(long, value_delimiter = ',', num_args = 1..)]
    pub breakpoints: Option<Vec<f64>>,
    /// Polynomial order of each segment, comma separated.
    #[arg(long, value_delimiter = ',', num_args = 1..)]
    pub orders: Option<Vec<usize>>,
}

#[derive(Debug, Args)]
pub struct StiffnessArgs {
    /// Material file; defaults to the one named in the config.
    #[arg(long)]
    pub material: Option<PathBuf>,
    /// Nodus Young's modulus (Pa), bypassing the material model.
    #[arg(long, requires = "g_pa")]
    pub e_pa: Option<f64>,
    /// Nodus shear modulus (Pa).
    #[arg(long, requires = "e_pa")]
    pub g_pa: Option<f64>,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[arg(long, conflicts_with = "tombo", required_unless_present = "tombo")]
    pub rigid: bool,
    /// Coupled solve with the elastic nodus.
    #[arg(long)]
    pub tombo: bool,
    #[arg(long)]
    pub rpm: f64,
    #[command(flatten)]
    pub stiffness: StiffnessArgs,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Rigid propeller instead of the elastic nodus.
    #[arg(long)]
    pub rigid: bool,
    #[arg(long)]
    pub start: Option<f64>,
    #[arg(long)]
    pub stop: Option<f64>,
    #[arg(long)]
    pub step: Option<f64>,
    #[command(flatten)]
    pub stiffness: StiffnessArgs,
}

#[derive(Debug, Args)]
pub struct BetaArgs {
    /// Directory of .png or .pgm frames.
    pub frames: PathBuf,
    /// Metadata file; defaults to metadata.txt in the frame directory.
    #[arg(long)]
    pub metadata: Option<PathBuf>,
    #[arg(long, default_value_t = 10)]
    pub combo_size: usize,
    /// Binarization threshold as a fraction of full scale.
    #[arg(long, default_value_t = 0.25)]
    pub threshold: f64,
    #[arg(long, default_value_t = 2)]
    pub blades: u32,
}

#[derive(Debug, Args)]
pub struct ReactArgs {
    /// Collision event (JSON).
    pub event: PathBuf,
    /// Controller gains (JSON); defaults to the built-in gains.
    #[arg(long)]
    pub gains: Option<PathBuf>,
    /// Simulated time after the collision (s).
    #[arg(long, default_value_t = 8.0)]
    pub duration: f64,
}

#[derive(Debug, Args)]
pub struct MetricsArgs {
    /// Characteristics CSV with a `config` column.
    pub table: PathBuf,
    /// Name of the reference configuration.
    #[arg(long, default_value = "0")]
    pub reference: String,
    /// Impact CSV `force_n,thickness_mm`; adds impact.csv.
    #[arg(long)]
    pub impact: Option<PathBuf>,
}

/// Everything the force commands need, loaded from the run configuration.
pub struct Model {
    pub config: RunConfig,
    pub geom: PropellerGeometry,
    pub pf: PlanformFunctions,
    pub cm: CoefficientModel,
    pub section: RepresentativeSection,
    pub opts: SolverOptions,
}

impl Model {
    pub fn load(g: &GlobalOpts) -> Result<Self> {
        let config = read_config(g)?;
        let layout = config.layout.into();
        let sections = geometry::read_sections(&config.resolve(&config.geometry_csv))?;
        let geom = PropellerGeometry::new(sections, layout).map_err(CliError::model)?;
        let pf = fit_planform(&geom, &config.fit_config(&layout)).map_err(CliError::model)?;
        let cm = config.coefficient_model()?;
        let camber = geometry::read_camber(&config.resolve(&config.section_csv))?;
        let section = section_properties(&camber).map_err(CliError::model)?;
        let opts = solver_options(config.solver.into(), g)?;
        Ok(Model { config, geom, pf, cm, section, opts })
    }

    pub fn moduli(&self, s: &StiffnessArgs) -> Result<ElasticModuli> {
        if let (Some(e), Some(g)) = (s.e_pa, s.g_pa) {
            if !(e > 0.0 && g > 0.0 && e.is_finite() && g.is_finite()) {
                return Err(CliError::Usage(format!("moduli must be positive, got E = {e}, G = {g}")));
            }
            return Ok(ElasticModuli { e, g });
        }
        let path = match &s.material {
            Some(p) => p.clone(),
            None => self.config.resolve(&self.config.material),
        };
        let spec = material::read_composite(&path, self.section.area)?;
        chamis_moduli(&spec).map_err(CliError::model)
    }

    fn arms(&self) -> ChordArms {
        ChordArms::of(&self.section)
    }
}

fn read_config(g: &GlobalOpts) -> Result<RunConfig> {
    let path = g.config.as_ref().ok_or_else(|| CliError::Usage("this command needs --config".into()))?;
    RunConfig::read(path)
}

fn solver_options(mut o: SolverOptions, g: &GlobalOpts) -> Result<SolverOptions> {
    if let Some(q) = g.quad {
        o.n_quad = q;
    }
    if let Some(t) = g.tol {
        o.tol = t;
    }
    if let Some(m) = g.max_iters {
        o.max_iters = m;
    }
    o.validate().map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(o)
}

fn out_file(g: &GlobalOpts, name: &str) -> Result<PathBuf> {
    std::fs::create_dir_all(&g.out).map_err(|e| CliError::io(&g.out, e))?;
    Ok(g.out.join(name))
}

/// Runs one command and returns the lines to print on stdout.
pub fn run(cli: &Cli) -> Result<Vec<String>> {
    let g = &cli.global;
    match &cli.command {
        Command::Fit(a) => cmd_fit(g, a),
        Command::Solve(a) => cmd_solve(g, a),
        Command::Sweep(a) => cmd_sweep(g, a),
        Command::Beta(a) => cmd_beta(g, a),
        Command::React(a) => cmd_react(g, a),
        Command::Metrics(a) => cmd_metrics(g, a),
    }
}

fn cmd_fit(g: &GlobalOpts, a: &FitArgs) -> Result<Vec<String>> {
    let config = read_config(g)?;
    let layout = config.layout.into();
    let path = a.geometry.clone().unwrap_or_else(|| config.resolve(&config.geometry_csv));
    let geom = PropellerGeometry::new(geometry::read_sections(&path)?, layout).map_err(CliError::model)?;
    let mut fc = config.fit_config(&layout);
    if let Some(b) = &a.breakpoints {
        fc.breakpoints = b.clone();
    }
    if let Some(o) = &a.orders {
        fc.orders = o.clone();
    }
    let pf = fit_planform(&geom, &fc).map_err(CliError::model)?;
    let report = FitReport::new(&pf);
    let out = out_file(g, "fit.json")?;
    write_json(&out, &report)?;
    let mut lines = vec![format!(
        "fit {} sections in {} segments -> {}",
        geom.sections().len(),
        report.segments.len(),
        out.display()
    )];
    for (i, s) in report.segments.iter().enumerate() {
        lines.push(format!(
            "segment {i}: order {} on {} points, max residual LE {:.3e} m, TE {:.3e} m, pitch {:.3e} deg",
            s.order, s.n_points, s.max_residual_le_m, s.max_residual_te_m, s.max_residual_theta_deg
        ));
    }
    Ok(lines)
}

fn cmd_solve(g: &GlobalOpts, a: &SolveArgs) -> Result<Vec<String>> {
    let m = Model::load(g)?;
    if !(a.rpm >= 0.0 && a.rpm.is_finite()) {
        return Err(CliError::Usage(format!("--rpm must be non-negative, got {}", a.rpm)));
    }
    let op = OperatingPoint::new(rpm_to_rad_s(a.rpm), m.config.rho_kg_m3).map_err(CliError::model)?;
    let (model, r) = if a.rigid {
        ("rigid", solve_rigid(&m.geom, &m.pf, &m.cm, Some(m.arms()), op, &m.opts).map_err(CliError::model)?)
    } else {
        let moduli = m.moduli(&a.stiffness)?;
        ("tombo", solve_tombo(&m.geom, &m.pf, &m.cm, &m.section, moduli, op, &m.opts).map_err(CliError::model)?)
    };
    let csv = out_file(g, "solve.csv")?;
    write_solve_rows(&csv, [&r])?;
    write_json(&out_file(g, "solve.json")?, &SolveSummary::new(model, &r))?;
    if !r.converged {
        eprintln!("warning: not converged after {} iterations (residual {:.3e} N)", r.iterations, r.residual);
    }
    Ok(vec![format!(
        "{model} at {} rpm: thrust {:.6} N, beta {:.3} deg, gamma {:.3} deg, {} iterations -> {}",
        a.rpm,
        r.forces.thrust(),
        r.deform.beta.to_degrees(),
        r.deform.gamma.to_degrees(),
        r.iterations,
        csv.display()
    )])
}

fn cmd_sweep(g: &GlobalOpts, a: &SweepArgs) -> Result<Vec<String>> {
    let m = Model::load(g)?;
    let c = m.config.sweep_rpm;
    let grid_cfg = GridConfig {
        start: a.start.unwrap_or(c.start),
        stop: a.stop.unwrap_or(c.stop),
        step: a.step.unwrap_or(c.step),
    };
    let grid: Vec<f64> = grid_cfg.rpm_values().map_err(CliError::Usage)?.into_iter().map(rpm_to_rad_s).collect();
    let rho = m.config.rho_kg_m3;
    let (model, sw) = if a.rigid {
        ("rigid", par_sweep_rigid(&m.geom, &m.pf, &m.cm, Some(m.arms()), rho, &grid, &m.opts).map_err(CliError::model)?)
    } else {
        let moduli = m.moduli(&a.stiffness)?;
        ("tombo", par_sweep(&m.geom, &m.pf, &m.cm, &m.section, moduli, rho, &grid, &m.opts).map_err(CliError::model)?)
    };
    let csv = out_file(g, "sweep.csv")?;
    write_solve_rows(&csv, &sw.points)?;
    let summary = SweepSummary::new(model, &sw);
    write_json(&out_file(g, "sweep.json")?, &summary)?;
    if !summary.all_converged {
        eprintln!("warning: some sweep points did not converge");
    }
    for (name, c) in [("thrust", sw.mtf), ("lift-over-drag", sw.mld)] {
        if c.at_boundary {
            eprintln!("warning: {name} maximum lies on the grid boundary; widen the rpm range");
        }
    }
    Ok(vec![format!(
        "{model} sweep of {} points: max thrust {:.6} N at {:.1} rpm, max lift/drag {:.4} at {:.1} rpm -> {}",
        sw.points.len(),
        sw.mtf.value,
        rad_s_to_rpm(sw.mtf.omega),
        sw.mld.value,
        rad_s_to_rpm(sw.mld.omega),
        csv.display()
    )])
}

fn cmd_beta(g: &GlobalOpts, a: &BetaArgs) -> Result<Vec<String>> {
    let stack = frames::read_stack(&a.frames, a.metadata.as_deref())?;
    let opts = PipelineOptions {
        combo_size: a.combo_size,
        threshold: a.threshold,
        ransac: RansacOptions { seed: g.seed, ..RansacOptions::default() },
        n_blades: a.blades,
        ..PipelineOptions::default()
    };
    let results = estimate_beta(&stack, &opts).map_err(CliError::model)?;
    let csv = out_file(g, "beta.csv")?;
    write_beta(&csv, &results)?;
    let mut lines = vec![format!("{} frames, {} combos -> {}", stack.frames().len(), results.len(), csv.display())];
    for r in &results {
        lines.push(format!(
            "combo {}: beta {:.3} deg, r_meas {:.3} mm, {:.1} rpm",
            r.combo_index,
            r.estimate.beta.to_degrees(),
            r.estimate.r_meas,
            rad_s_to_rpm(r.omega_est)
        ));
    }
    Ok(lines)
}

fn cmd_react(g: &GlobalOpts, a: &ReactArgs) -> Result<Vec<String>> {
    let ev_file = reaction::read_event(&a.event)?;
    let ev = ev_file.event();
    let mut sim = RecoverySim::default();
    if let Some(p) = &a.gains {
        sim.gains = reaction::read_gains(p)?;
    }
    let plan = bounce_setpoint(&ev, ev_file.d_r_m).map_err(CliError::model)?;
    let (traj, m) = simulate_recovery(&ev, &plan, &sim, a.duration).map_err(CliError::model)?;
    let csv = out_file(g, "trajectory.csv")?;
    write_trajectory(&csv, &traj)?;
    write_json(&out_file(g, "recovery.json")?, &RecoveryJson::new(&m, plan.x_r))?;
    let rec = m.dt_recovery.map(|t| format!("{t:.3} s")).unwrap_or_else(|| "not settled".into());
    Ok(vec![format!(
        "setpoint [{:.3}, {:.3}, {:.3}] m; fall {:.3} m; recovery {rec}; crashed {} -> {}",
        plan.x_r[0],
        plan.x_r[1],
        plan.x_r[2],
        m.dh_fall,
        m.crashed,
        csv.display()
    )])
}

fn cmd_metrics(g: &GlobalOpts, a: &MetricsArgs) -> Result<Vec<String>> {
    let table = read_characteristics(&a.table)?;
    let normalized = normalize(&table, &a.reference).map_err(CliError::model)?;
    let mut norm_rows = normalized.clone();
    norm_rows.push(summarize(&normalized, Some(&a.reference)).map_err(CliError::model)?);
    let norm_path = out_file(g, "normalized.csv")?;
    write_characteristics(&norm_path, &norm_rows)?;
    let mut with_mean = table.clone();
    with_mean.push(summarize(&table, Some(&a.reference)).map_err(CliError::model)?);
    write_characteristics(&out_file(g, "table.csv")?, &with_mean)?;
    let mut lines =
        vec![format!("{} configurations normalized against {:?} -> {}", table.len(), a.reference, norm_path.display())];
    if let Some(p) = &a.impact {
        let rows: Vec<ImpactRow> = read_csv(p)?;
        let out = rows
            .iter()
            .map(|r| {
                Ok(ImpactOut {
                    force_n: r.force_n,
                    thickness_mm: r.thickness_mm,
                    force_per_thickness_n_mm: force_per_thickness(r.force_n, r.thickness_mm)
                        .map_err(CliError::model)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let path = out_file(g, "impact.csv")?;
        write_csv(&path, &out)?;
        lines.push(format!("{} impact rows -> {}", out.len(), path.display()));
    }
    Ok(lines)
}
