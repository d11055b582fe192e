//! Blade-element forces, nodus deformation and the coupled solver.

mod coefficients;
mod deform;
mod forces;
mod solver;
mod sweep;

pub use coefficients::{CoefficientModel, CoefficientTable, Coefficients, ParametricPolar, TableRow};
pub use deform::{bending_angles, twist_angle, wing_rotation, DeformationState};
pub use forces::{applied_torque, deformed_wing_forces, rigid_forces, BladeIntegrator, ChordArms};
pub use solver::{solve_rigid, solve_tombo, ForceSplit, NodusModel, SolveResult, SolverOptions};
pub use sweep::{
    assemble_sweep, parabolic_vertex, solve_grid, sweep, sweep_rigid, validate_grid, CriticalPoint, SweepResult,
};

use alloc::vec::Vec;
use core::ops::{Add, Mul};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AeroError {
    #[error("invalid coefficient model: {0}")]
    Coefficients(&'static str),
    #[error("invalid operating point: {0}")]
    OperatingPoint(&'static str),
    #[error("integration span [{a}, {b}] outside [0, {tip}] or empty")]
    Span { a: f64, b: f64, tip: f64 },
    #[error("pitch near 90 degrees at x = {x} (cos theta = {cos})")]
    SingularPitch { x: f64, cos: f64 },
    #[error("non-positive stiffness or length: {0}")]
    Stiffness(&'static str),
    #[error("representative section has zero torsion integral")]
    SingularSection,
    #[error("invalid solver options: {0}")]
    Options(&'static str),
    #[error("solver diverged at iteration {iteration}")]
    Divergence { iteration: usize },
    #[error("invalid speed grid: {0}")]
    Grid(&'static str),
    #[error("sweep failed at {} speed(s), first at {} rad/s", .0.len(), .0.first().copied().unwrap_or(f64::NAN))]
    SweepFailed(Vec<f64>),
}

/// Rotational speed and air density.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OperatingPoint {
    /// rad/s
    pub omega: f64,
    /// kg/m³
    pub rho: f64,
}

impl OperatingPoint {
    pub const SEA_LEVEL_RHO: f64 = 1.225;

    pub fn new(omega: f64, rho: f64) -> Result<Self, AeroError> {
        if !(omega >= 0.0 && omega.is_finite()) {
            return Err(AeroError::OperatingPoint("omega must be finite and non-negative"));
        }
        if !(rho > 0.0 && rho.is_finite()) {
            return Err(AeroError::OperatingPoint("air density must be positive"));
        }
        Ok(OperatingPoint { omega, rho })
    }
}

/// Force resultants (N), torque (N·m) and lift-over-drag.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct AeroForces {
    pub f_n: f64,
    pub f_t: f64,
    pub f_l: f64,
    pub f_d: f64,
    pub t_or: f64,
    pub eps_lod: f64,
}

impl AeroForces {
    pub const ZERO: AeroForces = AeroForces { f_n: 0.0, f_t: 0.0, f_l: 0.0, f_d: 0.0, t_or: 0.0, eps_lod: 0.0 };

    /// Builds resultants with `eps_lod = f_l / f_d` (zero when there is no drag).
    pub fn new(f_n: f64, f_t: f64, f_l: f64, f_d: f64, t_or: f64) -> Self {
        let eps_lod = if f_d != 0.0 { f_l / f_d } else { 0.0 };
        AeroForces { f_n, f_t, f_l, f_d, t_or, eps_lod }
    }

    /// Thrust, taken along the tangential direction.
    pub fn thrust(&self) -> f64 {
        self.f_t
    }

    pub fn with_torque(self, t_or: f64) -> Self {
        AeroForces { t_or, ..self }
    }

    pub fn is_finite(&self) -> bool {
        [self.f_n, self.f_t, self.f_l, self.f_d, self.t_or].iter().all(|v| v.is_finite())
    }
}

impl Add for AeroForces {
    type Output = AeroForces;

    fn add(self, o: AeroForces) -> AeroForces {
        AeroForces::new(self.f_n + o.f_n, self.f_t + o.f_t, self.f_l + o.f_l, self.f_d + o.f_d, self.t_or + o.t_or)
    }
}

impl Mul<f64> for AeroForces {
    type Output = AeroForces;

    fn mul(self, s: f64) -> AeroForces {
        AeroForces::new(self.f_n * s, self.f_t * s, self.f_l * s, self.f_d * s, self.t_or * s)
    }
}
