//! Fiber volume fraction and Chamis effective moduli of the nodus composite.

use core::f64::consts::PI;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum MaterialError {
    #[error("{0} must be positive and finite")]
    NonPositive(&'static str),
    #[error("fiber diameter and count must be non-negative")]
    NegativeFiber,
    #[error("fiber area exceeds the composite section (v_f = {0})")]
    InfeasibleGeometry(f64),
    #[error("fiber volume fraction {0} outside [0, 1]")]
    VolumeFraction(f64),
    #[error("Chamis denominator is not positive for {0}")]
    ModelDomain(&'static str),
    #[error("no matrix modulus in [{lo}, {hi}] Pa reproduces the target")]
    NoRoot { lo: f64, hi: f64 },
}

/// Matrix and fiber properties plus the fiber layout of the nodus.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CompositeSpec {
    pub e_matrix: f64,
    pub g_matrix: f64,
    pub e_fiber: f64,
    pub g_fiber: f64,
    pub n_fibers: u32,
    /// Fiber diameter (m).
    pub d_fiber: f64,
    /// Composite section area (m²).
    pub area: f64,
}

impl CompositeSpec {
    pub fn volume_fraction(&self) -> Result<f64, MaterialError> {
        fiber_volume_fraction(self.n_fibers, self.d_fiber, self.area)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ElasticModuli {
    /// Young's modulus (Pa).
    pub e: f64,
    /// Shear modulus (Pa).
    pub g: f64,
}

/// Poisson ratio of the silicone matrix. Informational; no model consumes it.
pub const POISSON_RATIO: f64 = 0.4;

/// `n π d² / 4 / A`.
pub fn fiber_volume_fraction(n_fibers: u32, d_fiber: f64, area: f64) -> Result<f64, MaterialError> {
    if !(area > 0.0 && area.is_finite()) {
        return Err(MaterialError::NonPositive("section area"));
    }
    if !(d_fiber >= 0.0 && d_fiber.is_finite()) {
        return Err(MaterialError::NegativeFiber);
    }
    let vf = n_fibers as f64 * PI * d_fiber * d_fiber / 4.0 / area;
    if vf > 1.0 {
        return Err(MaterialError::InfeasibleGeometry(vf));
    }
    Ok(vf)
}

/// Chamis rule for one modulus pair.
pub fn chamis(matrix: f64, fiber: f64, vf: f64) -> Result<f64, MaterialError> {
    if !(0.0..=1.0).contains(&vf) {
        return Err(MaterialError::VolumeFraction(vf));
    }
    // `1 − √v (1 − m/f)` rearranged so the pure-fiber limit does not cancel
    let sv = libm::sqrt(vf);
    let den = (1.0 - sv) + sv * (matrix / fiber);
    if !(den > 0.0) {
        return Err(MaterialError::ModelDomain("this modulus pair"));
    }
    Ok(matrix / den)
}

pub fn chamis_moduli(spec: &CompositeSpec) -> Result<ElasticModuli, MaterialError> {
    let moduli = [
        (spec.e_matrix, "matrix Young's modulus"),
        (spec.g_matrix, "matrix shear modulus"),
        (spec.e_fiber, "fiber Young's modulus"),
        (spec.g_fiber, "fiber shear modulus"),
    ];
    for (v, name) in moduli {
        if !(v > 0.0 && v.is_finite()) {
            return Err(MaterialError::NonPositive(name));
        }
    }
    let vf = spec.volume_fraction()?;
    let e = chamis(spec.e_matrix, spec.e_fiber, vf).map_err(|_| MaterialError::ModelDomain("Young's modulus"))?;
    let g = chamis(spec.g_matrix, spec.g_fiber, vf).map_err(|_| MaterialError::ModelDomain("shear modulus"))?;
    Ok(ElasticModuli { e, g })
}

/// Finds the matrix modulus that yields `target` through the Chamis rule by
/// bisection on `[lo, hi]`. The composite modulus is increasing in the matrix
/// modulus, so the bracket must straddle the target.
pub fn solve_matrix_modulus(target: f64, fiber: f64, vf: f64, lo: f64, hi: f64) -> Result<f64, MaterialError> {
    let f = |m: f64| chamis(m, fiber, vf).map(|c| c - target);
    let (mut a, mut b) = (lo, hi);
    let fa = f(a)?;
    let fb = f(b)?;
    if fa * fb > 0.0 {
        return Err(MaterialError::NoRoot { lo, hi });
    }
    let mut fa = fa;
    for _ in 0..200 {
        let m = 0.5 * (a + b);
        let fm = f(m)?;
        if fm == 0.0 || (b - a) <= 1e-14 * m.abs() {
            return Ok(m);
        }
        if (fm < 0.0) == (fa < 0.0) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    Ok(0.5 * (a + b))
}

/// Placeholder matrix and fiber moduli.
///
/// Fiber values are generic nylon figures. Matrix values were back-solved so
/// that six 0.94 mm fibers in the demo nodus section reproduce the measured
/// Young's and shear moduli of the three silicone grades.
pub mod presets {
    pub const E_FIBER: f64 = 2.5e9;
    pub const G_FIBER: f64 = 0.9e9;

    /// `(E_m, G_m)` in Pa.
    pub const DS10: (f64, f64) = (0.1139e6, 0.04070e6);
    pub const DS20: (f64, f64) = (0.4215e6, 0.1504e6);
    pub const DS30: (f64, f64) = (0.5816e6, 0.2075e6);

    pub fn by_name(name: &str) -> Option<(f64, f64)> {
        match name.to_ascii_uppercase().as_str() {
            "DS10" => Some(DS10),
            "DS20" => Some(DS20),
            "DS30" => Some(DS30),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn endpoints() {
        assert_eq!(chamis(3.0, 7.0, 0.0).unwrap(), 3.0);
        assert!((chamis(3.0, 7.0, 1.0).unwrap() - 7.0).abs() <= 2.0 * f64::EPSILON * 7.0);
        assert_eq!(fiber_volume_fraction(0, 1e-3, 1e-4).unwrap(), 0.0);
        let d = libm::sqrt(4.0 * 2e-5 / PI);
        assert!((fiber_volume_fraction(1, d, 2e-5).unwrap() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn hand_value() {
        let e = chamis(1e6, 100e6, 0.25).unwrap();
        assert!((e / 1e6 - 1.0 / (1.0 - 0.5 * 0.99)).abs() < 1e-12);
    }

    #[test]
    fn errors() {
        assert!(matches!(fiber_volume_fraction(10, 0.01, 1e-5), Err(MaterialError::InfeasibleGeometry(_))));
        assert!(fiber_volume_fraction(1, 0.001, 0.0).is_err());
        assert!(chamis(1.0, 1.0, 1.5).is_err());
        // only reachable with a non-physical fiber modulus
        assert!(matches!(chamis(1.0, -1.0, 0.5), Err(MaterialError::ModelDomain(_))));
        let spec = CompositeSpec {
            e_matrix: 0.0,
            g_matrix: 1.0,
            e_fiber: 1.0,
            g_fiber: 1.0,
            n_fibers: 0,
            d_fiber: 0.0,
            area: 1.0,
        };
        assert!(matches!(chamis_moduli(&spec), Err(MaterialError::NonPositive(_))));
    }

    #[test]
    fn bisection_inverts() {
        let m = solve_matrix_modulus(0.5e6, 2.5e9, 0.07, 1.0, 1e9).unwrap();
        assert!((chamis(m, 2.5e9, 0.07).unwrap() - 0.5e6).abs() < 1e-6);
        assert!(solve_matrix_modulus(-1.0, 2.5e9, 0.07, 1.0, 1e9).is_err());
    }
}
