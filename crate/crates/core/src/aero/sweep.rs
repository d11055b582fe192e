use alloc::vec::Vec;

use super::{
    solve_rigid, solve_tombo, AeroError, ChordArms, CoefficientModel, OperatingPoint, SolveResult, SolverOptions,
};
use crate::geometry::{PlanformFunctions, PropellerGeometry, RepresentativeSection};
use crate::material::ElasticModuli;

/// Location and value of a maximum over the speed grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CriticalPoint {
    /// rad/s
    pub omega: f64,
    pub value: f64,
    /// Twist at `omega` (rad).
    pub gamma: f64,
    /// The grid maximum sits on the first or last speed and was not refined.
    pub at_boundary: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepResult {
    /// Ordered by speed.
    pub points: Vec<SolveResult>,
    /// Maximum thrust.
    pub mtf: CriticalPoint,
    /// Maximum lift-over-drag.
    pub mld: CriticalPoint,
}

pub fn validate_grid(grid: &[f64]) -> Result<(), AeroError> {
    if grid.len() < 3 {
        return Err(AeroError::Grid("need at least three speeds"));
    }
    if grid.iter().any(|w| !(w.is_finite() && *w >= 0.0)) {
        return Err(AeroError::Grid("speeds must be finite and non-negative"));
    }
    if grid.windows(2).any(|w| w[1] <= w[0]) {
        return Err(AeroError::Grid("speeds must increase strictly"));
    }
    Ok(())
}

/// Vertex of the parabola through three points, or `None` when they are
/// collinear or the vertex falls outside `[x0, x2]`.
pub fn parabolic_vertex(x: [f64; 3], y: [f64; 3]) -> Option<(f64, f64)> {
    let d1 = (y[1] - y[0]) / (x[1] - x[0]);
    let d2 = (y[2] - y[1]) / (x[2] - x[1]);
    let a = (d2 - d1) / (x[2] - x[0]);
    if !(a < 0.0) {
        return None;
    }
    // y = y1 + b (x − x1) + a (x − x1)², with b the slope at x1
    let b = d1 + a * (x[1] - x[0]);
    let xv = x[1] - b / (2.0 * a);
    if !(xv >= x[0] && xv <= x[2]) {
        return None;
    }
    let yv = y[1] + b * (xv - x[1]) + a * (xv - x[1]) * (xv - x[1]);
    Some((xv, yv))
}

fn argmax(values: &[f64]) -> usize {
    let mut best = 0;
    for (i, v) in values.iter().enumerate() {
        if *v > values[best] {
            best = i;
        }
    }
    best
}

fn critical<F>(points: &[SolveResult], values: &[f64], resolve: &mut F) -> Result<CriticalPoint, AeroError>
where
    F: FnMut(f64) -> Result<SolveResult, AeroError>,
{
    let i = argmax(values);
    let p = &points[i];
    let grid_point =
        |at_boundary| CriticalPoint { omega: p.omega, value: values[i], gamma: p.deform.gamma, at_boundary };
    if i == 0 || i + 1 == points.len() {
        return Ok(grid_point(true));
    }
    let xs = [points[i - 1].omega, p.omega, points[i + 1].omega];
    let ys = [values[i - 1], values[i], values[i + 1]];
    match parabolic_vertex(xs, ys) {
        Some((omega, value)) if omega != p.omega => {
            let r = resolve(omega)?;
            Ok(CriticalPoint { omega, value, gamma: r.deform.gamma, at_boundary: false })
        }
        _ => Ok(grid_point(false)),
    }
}

/// Locates the thrust and lift-over-drag maxima of solved grid points.
/// `resolve` re-solves at a refined speed to report the twist there.
pub fn assemble_sweep<F>(points: Vec<SolveResult>, mut resolve: F) -> Result<SweepResult, AeroError>
where
    F: FnMut(f64) -> Result<SolveResult, AeroError>,
{
    let grid: Vec<f64> = points.iter().map(|p| p.omega).collect();
    validate_grid(&grid)?;
    let thrust: Vec<f64> = points.iter().map(|p| p.forces.thrust()).collect();
    let eps: Vec<f64> = points.iter().map(|p| p.forces.eps_lod).collect();
    let mtf = critical(&points, &thrust, &mut resolve)?;
    let mld = critical(&points, &eps, &mut resolve)?;
    Ok(SweepResult { points, mtf, mld })
}

/// Solves every grid speed, collecting all failing speeds into one error.
pub fn solve_grid<F>(grid: &[f64], mut solve: F) -> Result<Vec<SolveResult>, AeroError>
where
    F: FnMut(f64) -> Result<SolveResult, AeroError>,
{
    validate_grid(grid)?;
    let mut points = Vec::with_capacity(grid.len());
    let mut failed = Vec::new();
    for &w in grid {
        match solve(w) {
            Ok(r) => points.push(r),
            Err(AeroError::Divergence { .. }) => failed.push(w),
            Err(e) => return Err(e),
        }
    }
    if !failed.is_empty() {
        return Err(AeroError::SweepFailed(failed));
    }
    Ok(points)
}

#[allow(clippy::too_many_arguments)]
pub fn sweep(
    geom: &PropellerGeometry,
    pf: &PlanformFunctions,
    cm: &CoefficientModel,
    section: &RepresentativeSection,
    moduli: ElasticModuli,
    rho: f64,
    grid: &[f64],
    opts: &SolverOptions,
) -> Result<SweepResult, AeroError> {
    let solve = |w: f64| solve_tombo(geom, pf, cm, section, moduli, OperatingPoint::new(w, rho)?, opts);
    let points = solve_grid(grid, solve)?;
    assemble_sweep(points, solve)
}

pub fn sweep_rigid(
    geom: &PropellerGeometry,
    pf: &PlanformFunctions,
    cm: &CoefficientModel,
    arms: Option<ChordArms>,
    rho: f64,
    grid: &[f64],
    opts: &SolverOptions,
) -> Result<SweepResult, AeroError> {
    let solve = |w: f64| solve_rigid(geom, pf, cm, arms, OperatingPoint::new(w, rho)?, opts);
    let points = solve_grid(grid, solve)?;
    assemble_sweep(points, solve)
}
