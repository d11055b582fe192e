use super::{AeroError, AeroForces, CoefficientModel, DeformationState, OperatingPoint};
use crate::geometry::{PlanformFunctions, RepresentativeSection};
use crate::quadrature::GaussLegendre;

/// Quarter-chord moment arms of the tangential and drag loads (m).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChordArms {
    pub y: f64,
    pub z: f64,
}

impl ChordArms {
    pub fn of(section: &RepresentativeSection) -> Self {
        ChordArms { y: section.arm_y, z: section.arm_z }
    }
}

/// Blade-element integrals over spanwise intervals with a fixed quadrature rule.
#[derive(Debug, Clone)]
pub struct BladeIntegrator<'a> {
    pf: &'a PlanformFunctions,
    cm: &'a CoefficientModel,
    n_blades: u32,
    quad: GaussLegendre,
}

const MIN_COS_PITCH: f64 = 1e-6;

impl<'a> BladeIntegrator<'a> {
    pub fn new(pf: &'a PlanformFunctions, cm: &'a CoefficientModel, n_blades: u32, n_quad: usize) -> Self {
        BladeIntegrator { pf, cm, n_blades, quad: GaussLegendre::new(n_quad.max(1)) }
    }

    pub fn planform(&self) -> &PlanformFunctions {
        self.pf
    }

    pub fn n_blades(&self) -> u32 {
        self.n_blades
    }

    fn check_span(&self, a: f64, b: f64) -> Result<(), AeroError> {
        let tip = self.pf.tip_radius();
        if !(0.0 <= a && a < b && b <= tip) {
            return Err(AeroError::Span { a, b, tip });
        }
        Ok(())
    }

    /// Per-blade rigid integrand `C_i(θ) (L − T) x²` at span `x`, ordered
    /// `[n, t, l, d]`, without the `ρω²` factor.
    pub fn rigid_integrand(&self, x: f64) -> [f64; 4] {
        let p = self.pf.sample(x);
        let c = self.cm.eval(p.theta);
        let k = p.chord() * x * x;
        [k * c.c_n, k * c.c_t, k * c.c_l, k * c.c_d]
    }

    /// Deformed wing integrand: coefficients at `θ − γ`, projected area factor
    /// `cos α cos β cos(θ − γ) / cos θ`.
    pub fn deformed_integrand(&self, d: DeformationState, x: f64) -> Result<[f64; 4], AeroError> {
        let p = self.pf.sample(x);
        let cos_th = libm::cos(p.theta);
        if cos_th.abs() < MIN_COS_PITCH {
            return Err(AeroError::SingularPitch { x, cos: cos_th });
        }
        let th_de = p.theta - d.gamma;
        let c = self.cm.eval(th_de);
        let k = libm::cos(d.alpha) * libm::cos(d.beta) * libm::cos(th_de) / cos_th * p.chord() * x * x;
        Ok([k * c.c_n, k * c.c_t, k * c.c_l, k * c.c_d])
    }

    /// `ρω² ∫ C_i(θ) (L − T) x² dx` over `[a, b]`, summed over all blades.
    pub fn rigid_forces(&self, op: OperatingPoint, a: f64, b: f64) -> Result<AeroForces, AeroError> {
        self.check_span(a, b)?;
        let mut acc = [0.0; 4];
        for (x, w) in self.quad.mapped(a, b) {
            let f = self.rigid_integrand(x);
            for i in 0..4 {
                acc[i] += w * f[i];
            }
        }
        Ok(self.scale(op, acc, 0.0))
    }

    /// Wing integral of [`Self::deformed_integrand`] over `[a, b]`.
    pub fn deformed_wing_forces(
        &self,
        op: OperatingPoint,
        d: DeformationState,
        a: f64,
        b: f64,
    ) -> Result<AeroForces, AeroError> {
        self.check_span(a, b)?;
        let mut acc = [0.0; 4];
        for (x, w) in self.quad.mapped(a, b) {
            let f = self.deformed_integrand(d, x)?;
            for i in 0..4 {
                acc[i] += w * f[i];
            }
        }
        Ok(self.scale(op, acc, 0.0))
    }

    /// `∫ dF_t·arm_y/4 + dF_d·arm_z/4` over `[a, b]`, summed over all blades.
    pub fn applied_torque(&self, op: OperatingPoint, a: f64, b: f64, arms: ChordArms) -> Result<f64, AeroError> {
        if !(arms.y >= 0.0 && arms.z >= 0.0) {
            return Err(AeroError::Stiffness("chord arms must be non-negative"));
        }
        let f = self.rigid_forces(op, a, b)?;
        Ok(torque_from(f.f_t, f.f_d, arms))
    }

    fn scale(&self, op: OperatingPoint, acc: [f64; 4], t_or: f64) -> AeroForces {
        let s = op.rho * op.omega * op.omega * self.n_blades as f64;
        AeroForces::new(s * acc[0], s * acc[1], s * acc[2], s * acc[3], t_or)
    }
}

/// Constant arms factor out of the torque integral.
pub(crate) fn torque_from(f_t: f64, f_d: f64, arms: ChordArms) -> f64 {
    (f_t * arms.y + f_d * arms.z) / 4.0
}

pub fn rigid_forces(
    pf: &PlanformFunctions,
    cm: &CoefficientModel,
    op: OperatingPoint,
    span: (f64, f64),
    n_blades: u32,
    n_quad: usize,
) -> Result<AeroForces, AeroError> {
    BladeIntegrator::new(pf, cm, n_blades, n_quad).rigid_forces(op, span.0, span.1)
}

pub fn deformed_wing_forces(
    pf: &PlanformFunctions,
    cm: &CoefficientModel,
    op: OperatingPoint,
    d: DeformationState,
    span: (f64, f64),
    n_blades: u32,
    n_quad: usize,
) -> Result<AeroForces, AeroError> {
    BladeIntegrator::new(pf, cm, n_blades, n_quad).deformed_wing_forces(op, d, span.0, span.1)
}

pub fn applied_torque(
    pf: &PlanformFunctions,
    cm: &CoefficientModel,
    op: OperatingPoint,
    span: (f64, f64),
    arms: ChordArms,
    n_blades: u32,
    n_quad: usize,
) -> Result<f64, AeroError> {
    BladeIntegrator::new(pf, cm, n_blades, n_quad).applied_torque(op, span.0, span.1, arms)
}
