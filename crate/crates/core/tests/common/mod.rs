#![allow(dead_code)]

use nodus_core::aero::{CoefficientModel, DeformationState, OperatingPoint};
use nodus_core::demo;
use nodus_core::geometry::{fit_planform, FitConfig, PlanformFunctions, PropellerGeometry};

pub struct Setup {
    pub geom: PropellerGeometry,
    pub pf: PlanformFunctions,
    pub cm: CoefficientModel,
}

pub fn setup_with(geom: PropellerGeometry) -> Setup {
    let pf = fit_planform(&geom, &FitConfig::default_for(&geom)).unwrap();
    Setup { geom, pf, cm: CoefficientModel::default() }
}

pub fn demo_setup() -> Setup {
    setup_with(demo::blade())
}

/// Composite trapezoid rule with `n` intervals of the deformed-wing integrand
/// written out from scratch; `d = 0` gives the rigid integrand. Returns
/// `[F_n, F_t, F_l, F_d]` summed over `n_blades`.
pub fn trapezoid_forces(s: &Setup, op: OperatingPoint, d: DeformationState, (a, b): (f64, f64), n: usize) -> [f64; 4] {
    let f = |x: f64| -> [f64; 4] {
        let p = s.pf.eval(x).unwrap();
        let th_de = p.theta - d.gamma;
        let c = s.cm.eval(th_de);
        let factor = d.alpha.cos() * d.beta.cos() * th_de.cos() / p.theta.cos();
        let k = factor * (p.leading - p.trailing) * x * x;
        [k * c.c_n, k * c.c_t, k * c.c_l, k * c.c_d]
    };
    let h = (b - a) / n as f64;
    let mut acc = [0.0f64; 4];
    // Kahan summation keeps the 10⁶-term sums at full precision
    let mut comp = [0.0f64; 4];
    for i in 0..=n {
        let w = if i == 0 || i == n { 0.5 } else { 1.0 };
        let v = f(a + h * i as f64);
        for j in 0..4 {
            let y = w * v[j] - comp[j];
            let t = acc[j] + y;
            comp[j] = (t - acc[j]) - y;
            acc[j] = t;
        }
    }
    let scale = op.rho * op.omega * op.omega * s.geom.n_blades() as f64 * h;
    acc.map(|v| v * scale)
}

pub fn rel(a: f64, b: f64) -> f64 {
    if a == b {
        0.0
    } else {
        (a - b).abs() / a.abs().max(b.abs())
    }
}

/// Measured characteristics of the rigid reference (`"0"`) and Conf. 5–13:
/// thrust, thrust deviation, collision force, recovery time, ε_LoD, noise.
pub const CHARACTERISTICS: [(&str, [Option<f64>; 6]); 10] = [
    ("0", [Some(0.658), Some(0.11), Some(269.3), None, Some(1.776), Some(49.4)]),
    ("5", [Some(0.656), Some(0.03), Some(147.3), Some(0.63), Some(2.0822), Some(49.1)]),
    ("6", [Some(0.537), Some(0.14), Some(93.7), Some(0.55), Some(2.0718), Some(51.0)]),
    ("7", [Some(0.631), Some(0.04), Some(81.5), Some(0.32), Some(2.0652), Some(49.6)]),
    ("8", [Some(0.589), Some(0.09), Some(80.4), Some(0.32), Some(1.9323), Some(48.7)]),
    ("9", [Some(0.622), Some(0.07), Some(159.6), Some(0.3), Some(1.9251), Some(49.2)]),
    ("10", [Some(0.656), Some(0.12), Some(123.7), Some(0.66), Some(1.9206), Some(50.2)]),
    ("11", [Some(0.666), Some(0.07), Some(123.0), Some(0.39), Some(1.9051), Some(49.5)]),
    ("12", [Some(0.624), Some(0.26), Some(189.9), Some(0.55), Some(1.899), Some(52.4)]),
    ("13", [Some(0.611), Some(0.06), Some(145.5), Some(0.42), Some(1.8952), Some(50.7)]),
];

pub fn characteristics_table() -> Vec<nodus_core::metrics::ConfigCharacteristics> {
    CHARACTERISTICS
        .iter()
        .map(|(name, values)| nodus_core::metrics::ConfigCharacteristics { name: (*name).into(), values: *values })
        .collect()
}

/// Collision force (N), blade thickness (mm) and printed force per thickness
/// for the six impact specimens.
pub const IMPACT: [(f64, f64, f64); 6] = [
    (206.5, 6.2, 33.2),
    (337.2, 6.2, 54.4),
    (331.2, 6.0, 55.2),
    (244.4, 5.3, 45.8),
    (225.3, 3.7, 61.4),
    (136.3, 2.8, 49.1),
];
