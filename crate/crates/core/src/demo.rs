//! Synthetic blade, nodus section and materials. The real blade coordinates
//! are not available, so tests and the sample data use these.

use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::geometry::{
    section_properties, AirfoilSection, BladeLayout, CamberPoint, PropellerGeometry, RepresentativeSection,
};
use crate::material::{presets, CompositeSpec};

/// Chord `c0 + c1 x + c2 x²` and pitch `th0 + th1 x` (SI units).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlanformShape {
    pub c0: f64,
    pub c1: f64,
    pub c2: f64,
    pub th0: f64,
    pub th1: f64,
}

impl PlanformShape {
    pub const TOMBO: PlanformShape = PlanformShape { c0: 0.014, c1: 0.22, c2: -1.5, th0: 0.45, th1: -2.5 };

    pub fn chord(&self, x: f64) -> f64 {
        self.c0 + self.c1 * x + self.c2 * x * x
    }

    pub fn theta(&self, x: f64) -> f64 {
        self.th0 + self.th1 * x
    }
}

/// 9-inch two-blade layout: hub to 15 mm, nodus from 20 to 32 mm.
pub fn layout() -> BladeLayout {
    BladeLayout { r_hub: 0.015, x_nodus: 0.020, nodus_length: 0.012, tip_radius: 0.1143, n_blades: 2 }
}

/// `n` sections from 4 mm to the tip, chord split evenly about the pitch axis.
pub fn blade_with(shape: PlanformShape, layout: BladeLayout, n: usize) -> PropellerGeometry {
    let x0 = 0.004;
    let sections = (0..n)
        .map(|i| {
            let x = (x0 + (layout.tip_radius - x0) * i as f64 / (n - 1) as f64).min(layout.tip_radius);
            let c = shape.chord(x);
            let th = shape.theta(x);
            let dz = 0.5 * c * libm::tan(th);
            AirfoilSection { x, y_le: 0.5 * c, z_le: dz, y_te: -0.5 * c, z_te: -dz, theta: th }
        })
        .collect();
    PropellerGeometry::new(sections, layout).expect("synthetic blade is valid")
}

/// The default 24-section blade.
pub fn blade() -> PropellerGeometry {
    blade_with(PlanformShape::TOMBO, layout(), 24)
}

/// Three further planforms with different chord and pitch distributions.
pub fn blade_variants() -> [PropellerGeometry; 3] {
    let l = layout();
    [
        blade_with(PlanformShape { c0: 0.012, c1: 0.30, c2: -2.2, th0: 0.40, th1: -2.0 }, l, 24),
        blade_with(PlanformShape { c0: 0.018, c1: 0.10, c2: -0.8, th0: 0.50, th1: -3.0 }, l, 24),
        blade_with(PlanformShape { c0: 0.016, c1: 0.0, c2: 0.0, th0: 0.35, th1: -1.5 }, l, 24),
    ]
}

/// Inclined, arched strip with a thickened middle.
pub fn camber_with(length: f64, incline: f64, sag: f64, t_min: f64, t_max: f64, n: usize) -> Vec<CamberPoint> {
    let (si, ci) = (libm::sin(incline), libm::cos(incline));
    let mut out: Vec<CamberPoint> = Vec::with_capacity(n);
    for i in 0..n {
        let s = i as f64 / (n - 1) as f64;
        let yl = length * s - 0.5 * length;
        let zl = sag * 4.0 * s * (1.0 - s);
        let (y, z) = (yl * ci - zl * si, yl * si + zl * ci);
        let t = t_min + (t_max - t_min) * libm::sqrt(libm::sin(PI * s).max(0.0));
        let u = match out.last() {
            Some(p) => p.u + libm::hypot(y - p.y, z - p.z),
            None => 0.0,
        };
        out.push(CamberPoint { u, y, z, t });
    }
    out
}

/// Ten-point nodus camber line: 18 mm long, inclined 0.5 rad, 1 mm sag,
/// 1.6–4 mm thick.
pub fn nodus_camber() -> Vec<CamberPoint> {
    camber_with(0.018, 0.5, 0.001, 0.0016, 0.004, 10)
}

pub fn nodus_section() -> RepresentativeSection {
    section_properties(&nodus_camber()).expect("synthetic section is valid")
}

/// Silicone grade and fiber layout on the demo nodus section.
pub fn composite(matrix: (f64, f64), n_fibers: u32, d_fiber: f64) -> CompositeSpec {
    CompositeSpec {
        e_matrix: matrix.0,
        g_matrix: matrix.1,
        e_fiber: presets::E_FIBER,
        g_fiber: presets::G_FIBER,
        n_fibers,
        d_fiber,
        area: nodus_section().area,
    }
}

/// Six 0.94 mm fibers in DS10, DS20 and DS30 silicone.
pub fn soft_composites() -> [CompositeSpec; 3] {
    [presets::DS10, presets::DS20, presets::DS30].map(|m| composite(m, 6, 0.94e-3))
}
