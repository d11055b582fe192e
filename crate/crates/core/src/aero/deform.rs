use super::AeroError;
use crate::geometry::RepresentativeSection;
use crate::linalg::Mat3;

/// Nodus angles (rad): in-plane bending α, out-of-plane bending β, twist γ.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct DeformationState {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
}

impl DeformationState {
    pub const RIGID: DeformationState = DeformationState { alpha: 0.0, beta: 0.0, gamma: 0.0 };

    pub fn max_abs(&self) -> f64 {
        self.alpha.abs().max(self.beta.abs()).max(self.gamma.abs())
    }
}

/// Tip-loaded cantilever slopes `α = F_y L²/(2 E I_z)`, `β = F_z L²/(2 E I_y)`.
pub fn bending_angles(f_y: f64, f_z: f64, e: f64, i_z: f64, i_y: f64, length: f64) -> Result<(f64, f64), AeroError> {
    if !(e > 0.0 && i_z > 0.0 && i_y > 0.0 && length > 0.0) {
        return Err(AeroError::Stiffness("E, I_y, I_z and nodus length must be positive"));
    }
    let l2 = length * length;
    Ok((f_y * l2 / (2.0 * e * i_z), f_z * l2 / (2.0 * e * i_y)))
}

/// Twist of an elongated open section:
/// `γ = 3 (1 + 4F/(3 A U²)) T L / (G F)` with `F = ∫ t³ dU`.
pub fn twist_angle(t_or: f64, g: f64, section: &RepresentativeSection, length: f64) -> Result<f64, AeroError> {
    if !(g > 0.0 && length > 0.0) {
        return Err(AeroError::Stiffness("G and nodus length must be positive"));
    }
    let f = section.torsion_integral;
    if !(f > 0.0) {
        return Err(AeroError::SingularSection);
    }
    let u = section.camber_length;
    let corr = 1.0 + 4.0 * f / (3.0 * section.area * u * u);
    Ok(3.0 * corr * t_or * length / (g * f))
}

/// `R_z(α) R_y(β) R_x(γ)`. With this `R_y`, a positive β tips x̂ towards −ẑ.
pub fn wing_rotation(d: DeformationState) -> Mat3 {
    Mat3::rot_z(d.alpha) * Mat3::rot_y(d.beta) * Mat3::rot_x(d.gamma)
}
