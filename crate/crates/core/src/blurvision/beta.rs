use super::VisionError;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BetaEstimate {
    /// rad, in `[0, π/2]`
    pub beta: f64,
    /// Measured projected radius (mm).
    pub r_meas: f64,
    pub combo_index: usize,
}

/// Relative slack allowed outside `[r_nodus, r_rest]` before clamping.
pub const RADIUS_TOLERANCE: f64 = 0.01;

/// `β = acos((r_meas − r_N) / (r_rest − r_N))`: the wing beyond the nodus
/// tilts out of the rotor plane and its projection shortens.
pub fn beta_from_radius(r_meas: f64, r_rest: f64, r_nodus: f64) -> Result<f64, VisionError> {
    if !(r_nodus >= 0.0 && r_nodus < r_rest && r_rest.is_finite()) {
        return Err(VisionError::Parameter("need 0 <= r_nodus < r_rest"));
    }
    if !r_meas.is_finite() || r_meas > r_rest * (1.0 + RADIUS_TOLERANCE) || r_meas < r_nodus * (1.0 - RADIUS_TOLERANCE)
    {
        return Err(VisionError::InconsistentRadius { r_meas, r_rest, r_nodus });
    }
    let c = ((r_meas - r_nodus) / (r_rest - r_nodus)).clamp(0.0, 1.0);
    Ok(libm::acos(c))
}

/// Forward projection of a tip bent by `beta` about the nodus start.
pub fn projected_tip_radius(beta: f64, r_rest: f64, r_nodus: f64) -> f64 {
    r_nodus + (r_rest - r_nodus) * libm::cos(beta)
}
