//! Output tables and summaries.

use std::path::Path;

use nodus_core::aero::{CriticalPoint, SolveResult, SweepResult};
use nodus_core::blurvision::ComboResult;
use nodus_core::geometry::PlanformFunctions;
use nodus_core::metrics::{ConfigCharacteristics, Metric};
use nodus_core::rad_s_to_rpm;
use nodus_core::reaction::{RecoveryMetrics, TrajectorySample};
use serde::{Deserialize, Serialize};

use super::{write_bytes, write_csv};
use crate::error::{CliError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SolveRow {
    pub omega_rpm: f64,
    pub f_n: f64,
    pub f_t: f64,
    pub f_l: f64,
    pub f_d: f64,
    pub t_or: f64,
    pub alpha_deg: f64,
    pub beta_deg: f64,
    pub gamma_deg: f64,
    pub eps_lod: f64,
    pub converged: bool,
    pub iterations: usize,
}

impl From<&SolveResult> for SolveRow {
    fn from(r: &SolveResult) -> Self {
        let f = r.forces;
        SolveRow {
            omega_rpm: rad_s_to_rpm(r.omega),
            f_n: f.f_n,
            f_t: f.f_t,
            f_l: f.f_l,
            f_d: f.f_d,
            t_or: f.t_or,
            alpha_deg: r.deform.alpha.to_degrees(),
            beta_deg: r.deform.beta.to_degrees(),
            gamma_deg: r.deform.gamma.to_degrees(),
            eps_lod: f.eps_lod,
            converged: r.converged,
            iterations: r.iterations,
        }
    }
}

pub fn write_solve_rows<'a>(path: &Path, results: impl IntoIterator<Item = &'a SolveResult>) -> Result<()> {
    write_csv(path, results.into_iter().map(SolveRow::from))
}

/// Thrust of each spanwise region, for the solve summary.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RegionThrust {
    pub hub_n: f64,
    pub nodus_n: f64,
    pub wing_n: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SolveSummary {
    pub model: &'static str,
    #[serde(flatten)]
    pub row: SolveRow,
    pub residual_n: f64,
    pub thrust_by_region: RegionThrust,
}

impl SolveSummary {
    pub fn new(model: &'static str, r: &SolveResult) -> Self {
        SolveSummary {
            model,
            row: r.into(),
            residual_n: r.residual,
            thrust_by_region: RegionThrust {
                hub_n: r.split.hub.thrust(),
                nodus_n: r.split.nodus.thrust(),
                wing_n: r.split.wing.thrust(),
            },
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CriticalJson {
    pub omega_rpm: f64,
    pub value: f64,
    pub gamma_deg: f64,
    pub at_boundary: bool,
}

impl From<CriticalPoint> for CriticalJson {
    fn from(c: CriticalPoint) -> Self {
        CriticalJson {
            omega_rpm: rad_s_to_rpm(c.omega),
            value: c.value,
            gamma_deg: c.gamma.to_degrees(),
            at_boundary: c.at_boundary,
        }
    }
}

/// `max_thrust.value` is T_max in N; `max_lift_over_drag.value` is ε_mld.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SweepSummary {
    pub model: &'static str,
    pub n_points: usize,
    pub all_converged: bool,
    pub max_iterations: usize,
    pub max_thrust: CriticalJson,
    pub max_lift_over_drag: CriticalJson,
}

impl SweepSummary {
    pub fn new(model: &'static str, s: &SweepResult) -> Self {
        SweepSummary {
            model,
            n_points: s.points.len(),
            all_converged: s.points.iter().all(|p| p.converged),
            max_iterations: s.points.iter().map(|p| p.iterations).max().unwrap_or(0),
            max_thrust: s.mtf.into(),
            max_lift_over_drag: s.mld.into(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FitReport {
    pub breakpoints_m: Vec<f64>,
    pub segments: Vec<SegmentReport>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SegmentReport {
    pub start_m: f64,
    pub end_m: f64,
    pub order: usize,
    pub n_points: usize,
    pub max_residual_le_m: f64,
    pub max_residual_te_m: f64,
    pub max_residual_theta_deg: f64,
    /// Coefficients in the scaled variable `t = (x − center) / half_width`.
    pub leading: PolyReport,
    pub trailing: PolyReport,
    pub pitch_rad: PolyReport,
}

#[derive(Debug, Clone, Serialize)]
pub struct PolyReport {
    pub center_m: f64,
    pub half_width_m: f64,
    pub coeffs: Vec<f64>,
}

impl FitReport {
    pub fn new(pf: &PlanformFunctions) -> Self {
        let b = &pf.leading.breaks;
        let poly = |p: &nodus_core::geometry::Polynomial| PolyReport {
            center_m: p.center,
            half_width_m: p.half_width,
            coeffs: p.coeffs.clone(),
        };
        let segments = pf
            .segments
            .iter()
            .enumerate()
            .map(|(i, s)| SegmentReport {
                start_m: b[i],
                end_m: b[i + 1],
                order: s.order,
                n_points: s.n_points,
                max_residual_le_m: s.max_residual_le,
                max_residual_te_m: s.max_residual_te,
                max_residual_theta_deg: s.max_residual_theta.to_degrees(),
                leading: poly(&pf.leading.pieces[i]),
                trailing: poly(&pf.trailing.pieces[i]),
                pitch_rad: poly(&pf.pitch.pieces[i]),
            })
            .collect();
        FitReport { breakpoints_m: b[1..b.len() - 1].to_vec(), segments }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
struct BetaRow {
    combo_index: usize,
    omega_rpm_est: f64,
    r_meas_mm: f64,
    beta_deg: f64,
}

pub fn write_beta(path: &Path, results: &[ComboResult]) -> Result<()> {
    write_csv(
        path,
        results.iter().map(|r| BetaRow {
            combo_index: r.combo_index,
            omega_rpm_est: rad_s_to_rpm(r.omega_est),
            r_meas_mm: r.estimate.r_meas,
            beta_deg: r.estimate.beta.to_degrees(),
        }),
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
struct TrajectoryRow {
    t: f64,
    x: f64,
    y: f64,
    z: f64,
    vx: f64,
    vy: f64,
    vz: f64,
}

pub fn write_trajectory(path: &Path, traj: &[TrajectorySample]) -> Result<()> {
    write_csv(
        path,
        traj.iter().map(|s| TrajectoryRow {
            t: s.t,
            x: s.pos[0],
            y: s.pos[1],
            z: s.pos[2],
            vx: s.vel[0],
            vy: s.vel[1],
            vz: s.vel[2],
        }),
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RecoveryJson {
    pub dt_recovery_s: Option<f64>,
    pub dh_fall_m: f64,
    pub crashed: bool,
    pub setpoint_m: [f64; 3],
}

impl RecoveryJson {
    pub fn new(m: &RecoveryMetrics, setpoint: [f64; 3]) -> Self {
        RecoveryJson { dt_recovery_s: m.dt_recovery, dh_fall_m: m.dh_fall, crashed: m.crashed, setpoint_m: setpoint }
    }
}

const NAME_COLUMN: &str = "config";

/// Characteristics table: a `config` column plus any subset of the metric
/// columns; empty cells are absent values.
pub fn read_characteristics(path: &Path) -> Result<Vec<ConfigCharacteristics>> {
    let mut rd = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_path(path)
        .map_err(|e| csv_error(path, e))?;
    let header = rd.headers().map_err(|e| csv_error(path, e))?.clone();
    let mut name_col = None;
    let mut cols = Vec::new();
    for (i, h) in header.iter().enumerate() {
        if h == NAME_COLUMN {
            name_col = Some(i);
        } else {
            let m = Metric::from_key(h).ok_or_else(|| CliError::parse(path, format!("unknown column `{h}`")))?;
            cols.push((i, m));
        }
    }
    let name_col = name_col.ok_or_else(|| CliError::parse(path, "missing `config` column"))?;
    let mut rows = Vec::new();
    for (r, rec) in rd.records().enumerate() {
        let rec = rec.map_err(|e| csv_error(path, e))?;
        let mut row = ConfigCharacteristics::new(&rec[name_col]);
        for &(i, m) in &cols {
            let cell = &rec[i];
            if !cell.is_empty() {
                let v = cell.parse().map_err(|_| {
                    CliError::parse(path, format!("row {}: `{cell}` in {} is not a number", r + 1, m.key()))
                })?;
                row.set(m, Some(v));
            }
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(CliError::parse(path, "no data rows"));
    }
    Ok(rows)
}

pub fn write_characteristics(path: &Path, rows: &[ConfigCharacteristics]) -> Result<()> {
    let mut buf = Vec::new();
    {
        let mut wr = csv::Writer::from_writer(&mut buf);
        let header = std::iter::once(NAME_COLUMN).chain(Metric::ALL.iter().map(|m| m.key()));
        wr.write_record(header).map_err(|e| csv_error(path, e))?;
        for row in rows {
            let cells = std::iter::once(row.name.clone())
                .chain(Metric::ALL.iter().map(|&m| row.get(m).map(|v| v.to_string()).unwrap_or_default()));
            wr.write_record(cells).map_err(|e| csv_error(path, e))?;
        }
        wr.flush().map_err(|e| CliError::io(path, e))?;
    }
    write_bytes(path, &buf)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ImpactRow {
    pub force_n: f64,
    pub thickness_mm: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ImpactOut {
    pub force_n: f64,
    pub thickness_mm: f64,
    pub force_per_thickness_n_mm: f64,
}

fn csv_error(path: &Path, e: csv::Error) -> CliError {
    CliError::parse(path, e)
}
