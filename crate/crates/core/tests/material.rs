use std::f64::consts::PI;

use nodus_core::demo;
use nodus_core::material::*;

/// Counts pixel centers inside `n` discs of diameter `d` laid side by side,
/// on a square grid of pitch `h`.
fn rasterized_fiber_area(n: u32, d: f64, h: f64) -> f64 {
    let r = 0.5 * d;
    let cells = (d / h).ceil() as i64 + 2;
    let mut inside = 0u64;
    for i in -cells..=cells {
        for j in -cells..=cells {
            let (x, y) = ((i as f64 + 0.5) * h, (j as f64 + 0.5) * h);
            if x * x + y * y <= r * r {
                inside += 1;
            }
        }
    }
    n as f64 * inside as f64 * h * h
}

#[test]
fn volume_fraction_matches_rasterized_fibers() {
    let area = demo::nodus_section().area;
    let vf = fiber_volume_fraction(6, 0.94e-3, area).unwrap();
    let raster = rasterized_fiber_area(6, 0.94e-3, 0.5e-6) / area;
    assert!((vf / raster - 1.0).abs() < 1e-3, "{vf} vs {raster}");
}

#[test]
fn trivial_volume_fractions() {
    assert_eq!(fiber_volume_fraction(0, 0.94e-3, 1e-5).unwrap(), 0.0);
    let a = 3e-6;
    let d = (4.0 * a / PI).sqrt();
    assert!((fiber_volume_fraction(1, d, a).unwrap() - 1.0).abs() < 1e-14);
    assert!(matches!(fiber_volume_fraction(40, 1e-3, 1e-5), Err(MaterialError::InfeasibleGeometry(_))));
}

#[test]
fn hand_evaluated_chamis() {
    // 1 / (1 − 0.5·0.99)
    let e = chamis(1e6, 100e6, 0.25).unwrap();
    assert!((e / 1e6 - 1.980_198_019_801_98).abs() < 1e-12);
}

#[test]
fn endpoints_exact() {
    for (m, f) in [(0.1e6, 2.5e9), (3.0, 7.0), (0.04e6, 0.9e9)] {
        assert_eq!(chamis(m, f, 0.0).unwrap(), m);
        let full = chamis(m, f, 1.0).unwrap();
        assert!((full - f).abs() <= 2.0 * f64::EPSILON * f, "{full} vs {f}");
    }
}

#[test]
fn strictly_increasing_in_volume_fraction() {
    let mut prev = f64::NEG_INFINITY;
    for k in 0..100 {
        let vf = k as f64 / 99.0;
        let e = chamis(0.5e6, 2.5e9, vf).unwrap();
        assert!(e > prev, "v_f = {vf}");
        prev = e;
    }
}

#[test]
fn thicker_fibers_stiffen_the_nodus() {
    for matrix in [presets::DS10, presets::DS20, presets::DS30] {
        let moduli: Vec<ElasticModuli> =
            [0.5e-3, 0.7e-3, 0.94e-3].iter().map(|&d| chamis_moduli(&demo::composite(matrix, 6, d)).unwrap()).collect();
        for w in moduli.windows(2) {
            assert!(w[1].e > w[0].e && w[1].g > w[0].g);
        }
        assert!(moduli[0].e > matrix.0 && moduli[0].g > matrix.1);
    }
}

#[test]
fn calibrated_presets_reproduce_measured_moduli() {
    // (E_N, G_N) in MPa for the three silicone grades with six 0.94 mm fibers
    let measured = [(0.1542, 0.0551), (0.5705, 0.2036), (0.7873, 0.2809)];
    for (spec, (e, g)) in demo::soft_composites().iter().zip(measured) {
        let m = chamis_moduli(spec).unwrap();
        assert!((m.e / 1e6 / e - 1.0).abs() < 0.05, "{} vs {e}", m.e / 1e6);
        assert!((m.g / 1e6 / g - 1.0).abs() < 0.05, "{} vs {g}", m.g / 1e6);
    }
}

#[test]
fn preset_lookup() {
    assert_eq!(presets::by_name("ds20"), Some(presets::DS20));
    assert_eq!(presets::by_name("DS30"), Some(presets::DS30));
    assert_eq!(presets::by_name("ecoflex"), None);
}

#[test]
fn matrix_modulus_root_inverts_chamis() {
    let vf = fiber_volume_fraction(6, 0.94e-3, demo::nodus_section().area).unwrap();
    let m = solve_matrix_modulus(0.1542e6, presets::E_FIBER, vf, 1.0, 1e8).unwrap();
    let e = chamis(m, presets::E_FIBER, vf).unwrap();
    assert!((e / 0.1542e6 - 1.0).abs() < 1e-10);
    assert!(matches!(solve_matrix_modulus(5e9, presets::E_FIBER, vf, 1.0, 1e8), Err(MaterialError::NoRoot { .. })));
}

#[test]
fn invalid_specs() {
    let mut s = demo::composite(presets::DS10, 6, 0.94e-3);
    s.g_fiber = 0.0;
    assert!(matches!(chamis_moduli(&s), Err(MaterialError::NonPositive(_))));
    let mut s = demo::composite(presets::DS10, 6, 0.94e-3);
    s.d_fiber = -1.0;
    assert!(matches!(chamis_moduli(&s), Err(MaterialError::NegativeFiber)));
    assert!(matches!(chamis(1.0, 2.0, -0.1), Err(MaterialError::VolumeFraction(_))));
}
