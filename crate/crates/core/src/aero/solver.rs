use super::forces::torque_from;
use super::{
    bending_angles, twist_angle, AeroError, AeroForces, BladeIntegrator, ChordArms, CoefficientModel, DeformationState,
    OperatingPoint,
};
use crate::geometry::{PlanformFunctions, PropellerGeometry, RepresentativeSection};
use crate::material::ElasticModuli;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverOptions {
    pub max_iters: usize,
    /// Convergence tolerance on `|ΔF_t| + |ΔF_d|` (N).
    pub tol: f64,
    /// Gauss–Legendre nodes per region.
    pub n_quad: usize,
    /// Initial under-relaxation factor in (0, 1].
    pub relaxation: f64,
    /// Adapt the relaxation factor between iterations (Aitken's Δ² rule).
    pub adaptive: bool,
    /// Largest change of any nodus angle allowed per iteration (rad).
    pub max_step_rad: f64,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions { max_iters: 100, tol: 1e-6, n_quad: 128, relaxation: 0.5, adaptive: true, max_step_rad: 0.05 }
    }
}

impl SolverOptions {
    pub fn validate(&self) -> Result<(), AeroError> {
        if self.max_iters < 1 {
            return Err(AeroError::Options("max_iters must be at least 1"));
        }
        if !(self.tol > 0.0) {
            return Err(AeroError::Options("tol must be positive"));
        }
        if self.n_quad < 8 {
            return Err(AeroError::Options("n_quad must be at least 8"));
        }
        if !(self.relaxation > 0.0 && self.relaxation <= 1.0) {
            return Err(AeroError::Options("relaxation must lie in (0, 1]"));
        }
        if !(self.max_step_rad > 0.0) {
            return Err(AeroError::Options("max_step_rad must be positive"));
        }
        Ok(())
    }
}

/// Contributions of the hub `[0, x_N]`, nodus `[x_N, r_N]` and wing `[r_N, R]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ForceSplit {
    pub hub: AeroForces,
    pub nodus: AeroForces,
    pub wing: AeroForces,
}

impl ForceSplit {
    pub fn total(&self) -> AeroForces {
        self.hub + self.nodus + self.wing
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolveResult {
    /// rad/s
    pub omega: f64,
    pub forces: AeroForces,
    pub deform: DeformationState,
    pub iterations: usize,
    pub converged: bool,
    /// `|ΔF_t| + |ΔF_d|` at the last iteration (N).
    pub residual: f64,
    pub split: ForceSplit,
}

/// Elastic nodus: representative section, effective moduli and length.
#[derive(Debug, Clone, Copy)]
pub struct NodusModel<'a> {
    pub section: &'a RepresentativeSection,
    pub moduli: ElasticModuli,
    pub length: f64,
    pub n_blades: u32,
}

impl NodusModel<'_> {
    /// Nodus angles produced by wing resultants summed over all blades.
    pub fn deformation(&self, f_t: f64, f_d: f64) -> Result<DeformationState, AeroError> {
        let nb = self.n_blades as f64;
        let (ft, fd) = (f_t / nb, f_d / nb);
        let s = self.section;
        let (alpha, beta) = bending_angles(fd, ft, self.moduli.e, s.i_z, s.i_y, self.length)?;
        let t_or = torque_from(ft, fd, ChordArms::of(s));
        let gamma = twist_angle(t_or, self.moduli.g, s, self.length)?;
        Ok(DeformationState { alpha, beta, gamma })
    }
}

fn rigid_split(
    geom: &PropellerGeometry,
    bi: &BladeIntegrator,
    op: OperatingPoint,
) -> Result<(AeroForces, AeroForces), AeroError> {
    let l = geom.layout();
    let hub = bi.rigid_forces(op, 0.0, l.x_nodus)?;
    let nodus = bi.rigid_forces(op, l.x_nodus, l.r_nodus())?;
    Ok((hub, nodus))
}

/// Rigid propeller: the three regions integrated with the undeformed planform.
/// The wing torque uses the chord arms when a section is given.
pub fn solve_rigid(
    geom: &PropellerGeometry,
    pf: &PlanformFunctions,
    cm: &CoefficientModel,
    arms: Option<ChordArms>,
    op: OperatingPoint,
    opts: &SolverOptions,
) -> Result<SolveResult, AeroError> {
    opts.validate()?;
    let bi = BladeIntegrator::new(pf, cm, geom.n_blades(), opts.n_quad);
    let (hub, nodus) = rigid_split(geom, &bi, op)?;
    let mut wing = bi.rigid_forces(op, geom.r_nodus(), geom.tip_radius())?;
    if let Some(arms) = arms {
        wing = wing.with_torque(torque_from(wing.f_t, wing.f_d, arms));
    }
    let split = ForceSplit { hub, nodus, wing };
    Ok(SolveResult {
        omega: op.omega,
        forces: split.total(),
        deform: DeformationState::RIGID,
        iterations: 1,
        converged: true,
        residual: 0.0,
        split,
    })
}

/// Coupled wing loads and nodus deformation.
///
/// The unknowns are the wing tangential and drag resultants that load the
/// nodus. Starting from zero load (so the first evaluation is the rigid
/// wing), each iteration deforms the nodus under the current load, integrates
/// the deformed wing and moves the load towards the result by a relaxed step.
/// The step is shrunk whenever it would rotate the nodus by more than
/// `max_step_rad`, which keeps the iteration on the physical branch near the
/// thrust fold.
pub fn solve_tombo(
    geom: &PropellerGeometry,
    pf: &PlanformFunctions,
    cm: &CoefficientModel,
    section: &RepresentativeSection,
    moduli: ElasticModuli,
    op: OperatingPoint,
    opts: &SolverOptions,
) -> Result<SolveResult, AeroError> {
    opts.validate()?;
    let nodus = NodusModel { section, moduli, length: geom.layout().nodus_length, n_blades: geom.n_blades() };
    let bi = BladeIntegrator::new(pf, cm, geom.n_blades(), opts.n_quad);
    let (hub, nodus_f) = rigid_split(geom, &bi, op)?;
    let (r_n, tip) = (geom.r_nodus(), geom.tip_radius());

    let mut load = [0.0f64; 2];
    let mut prev_r: Option<[f64; 2]> = None;
    let mut lambda = opts.relaxation;
    let mut result = None;
    for it in 1..=opts.max_iters {
        let d = nodus.deformation(load[0], load[1])?;
        let wing = bi.deformed_wing_forces(op, d, r_n, tip)?;
        if !wing.is_finite() || !d.max_abs().is_finite() {
            return Err(AeroError::Divergence { iteration: it });
        }
        let r = [wing.f_t - load[0], wing.f_d - load[1]];
        let residual = r[0].abs() + r[1].abs();
        result = Some((d, wing, it, residual));
        if residual < opts.tol {
            break;
        }
        if opts.adaptive {
            if let Some(p) = prev_r {
                let dr = [r[0] - p[0], r[1] - p[1]];
                let den = dr[0] * dr[0] + dr[1] * dr[1];
                if den > 0.0 {
                    lambda = (-lambda * (p[0] * dr[0] + p[1] * dr[1]) / den).clamp(0.01, 1.0);
                }
            }
        }
        let mut step = [lambda * r[0], lambda * r[1]];
        let ds = nodus.deformation(step[0], step[1])?.max_abs();
        if ds > opts.max_step_rad {
            let k = opts.max_step_rad / ds;
            step = [step[0] * k, step[1] * k];
        }
        load = [load[0] + step[0], load[1] + step[1]];
        prev_r = Some(r);
    }
    let (deform, wing, iterations, residual) = result.expect("max_iters >= 1");
    let wing = wing.with_torque(torque_from(wing.f_t, wing.f_d, ChordArms::of(section)));
    let split = ForceSplit { hub, nodus: nodus_f, wing };
    Ok(SolveResult {
        omega: op.omega,
        forces: split.total(),
        deform,
        iterations,
        converged: residual < opts.tol,
        residual,
        split,
    })
}
