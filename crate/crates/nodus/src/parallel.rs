//! Speed sweeps with the grid solved on the rayon pool. Each point is
//! independent and results are collected in grid order, so the output matches
//! the sequential sweep bit for bit.

use nodus_core::aero::{
    assemble_sweep, solve_rigid, solve_tombo, validate_grid, AeroError, ChordArms, CoefficientModel, OperatingPoint,
    SolveResult, SolverOptions, SweepResult,
};
use nodus_core::geometry::{PlanformFunctions, PropellerGeometry, RepresentativeSection};
use nodus_core::material::ElasticModuli;
use rayon::prelude::*;

fn par_grid<F>(grid: &[f64], solve: F) -> Result<Vec<SolveResult>, AeroError>
where
    F: Fn(f64) -> Result<SolveResult, AeroError> + Sync,
{
    validate_grid(grid)?;
    let results: Vec<Result<SolveResult, AeroError>> = grid.par_iter().map(|&w| solve(w)).collect();
    let mut points = Vec::with_capacity(grid.len());
    let mut failed = Vec::new();
    for (r, &w) in results.into_iter().zip(grid) {
        match r {
            Ok(p) => points.push(p),
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
pub fn par_sweep(
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
    assemble_sweep(par_grid(grid, solve)?, solve)
}

pub fn par_sweep_rigid(
    geom: &PropellerGeometry,
    pf: &PlanformFunctions,
    cm: &CoefficientModel,
    arms: Option<ChordArms>,
    rho: f64,
    grid: &[f64],
    opts: &SolverOptions,
) -> Result<SweepResult, AeroError> {
    let solve = |w: f64| solve_rigid(geom, pf, cm, arms, OperatingPoint::new(w, rho)?, opts);
    assemble_sweep(par_grid(grid, solve)?, solve)
}
