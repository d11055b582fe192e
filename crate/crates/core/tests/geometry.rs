use std::f64::consts::PI;

use nodus_core::demo;
use nodus_core::geometry::*;

fn layout() -> BladeLayout {
    BladeLayout { r_hub: 0.01, x_nodus: 0.02, nodus_length: 0.012, tip_radius: 0.1, n_blades: 2 }
}

fn blade_from<L, T, P>(n: usize, le: L, te: T, pitch: P) -> PropellerGeometry
where
    L: Fn(f64) -> f64,
    T: Fn(f64) -> f64,
    P: Fn(f64) -> f64,
{
    let sections = (0..n)
        .map(|i| {
            let x = 0.005 + 0.095 * i as f64 / (n - 1) as f64;
            AirfoilSection { x, y_le: le(x), z_le: 0.0, y_te: te(x), z_te: 0.0, theta: pitch(x) }
        })
        .collect();
    PropellerGeometry::new(sections, layout()).unwrap()
}

fn cubic_le(x: f64) -> f64 {
    0.01 + 0.1 * x - 0.8 * x * x + 3.0 * x * x * x
}

fn cubic_te(x: f64) -> f64 {
    -0.004 - 0.05 * x + 0.2 * x * x - 1.0 * x * x * x
}

fn cubic_pitch(x: f64) -> f64 {
    0.5 - 3.0 * x + 4.0 * x * x + 10.0 * x * x * x
}

#[test]
fn exact_cubic_is_recovered() {
    let g = blade_from(24, cubic_le, cubic_te, cubic_pitch);
    let pf = fit_planform(&g, &FitConfig::single(3)).unwrap();
    let s = &pf.segments[0];
    assert_eq!(s.n_points, 24);
    assert!(s.max_residual_le < 1e-12 * 0.02, "{s:?}");
    assert!(s.max_residual_te < 1e-12 * 0.02, "{s:?}");
    assert!(s.max_residual_theta < 1e-12, "{s:?}");
    for k in 0..=50 {
        let x = 0.1 * k as f64 / 50.0;
        let p = pf.eval(x).unwrap();
        assert!((p.leading - cubic_le(x)).abs() < 1e-12, "x = {x}");
        assert!((p.trailing - cubic_te(x)).abs() < 1e-12, "x = {x}");
        assert!((p.theta - cubic_pitch(x)).abs() < 1e-12, "x = {x}");
    }
}

#[test]
fn cubic_coefficients_match_taylor_expansion() {
    let g = blade_from(24, cubic_le, cubic_te, cubic_pitch);
    let pf = fit_planform(&g, &FitConfig::single(3)).unwrap();
    let p = &pf.leading.pieces[0];
    let (c, h) = (p.center, p.half_width);
    // L(c + h t) expanded in t
    let expected = [cubic_le(c), h * (0.1 - 1.6 * c + 9.0 * c * c), h * h * (-0.8 + 9.0 * c), h * h * h * 3.0];
    for (got, want) in p.coeffs.iter().zip(expected) {
        assert!((got - want).abs() < 1e-12, "{got} vs {want}");
    }
}

#[test]
fn constant_chord_gives_constant_edges() {
    let g = blade_from(12, |_| 0.008, |_| -0.008, |_| 0.3);
    let pf = fit_planform(&g, &FitConfig::default_for(&g)).unwrap();
    for k in 0..=20 {
        let p = pf.eval(0.1 * k as f64 / 20.0).unwrap();
        assert!((p.leading - 0.008).abs() < 1e-14);
        assert!((p.trailing + 0.008).abs() < 1e-14);
        assert!((p.theta - 0.3).abs() < 1e-14);
    }
}

#[test]
fn smooth_planform_two_segments_within_one_percent_of_chord() {
    let chord = |x: f64| 0.01 + 0.015 * (PI * x / 0.11).sin();
    let pitch = |x: f64| 0.5 * (-8.0 * x).exp();
    let g = blade_from(24, |x| 0.6 * chord(x), |x| -0.4 * chord(x), pitch);
    let pf = fit_planform(&g, &FitConfig::default_for(&g)).unwrap();
    let mean_chord = g.sections().iter().map(|s| s.chord()).sum::<f64>() / 24.0;
    for s in g.sections() {
        let p = pf.eval(s.x).unwrap();
        assert!((p.leading - s.y_le).abs() < 0.01 * mean_chord, "x = {}", s.x);
        assert!((p.trailing - s.y_te).abs() < 0.01 * mean_chord, "x = {}", s.x);
    }
    for seg in &pf.segments {
        assert!(seg.max_residual_le.max(seg.max_residual_te) < 0.01 * mean_chord);
    }
}

#[test]
fn breakpoint_belongs_to_right_segment() {
    let g = demo::blade();
    let pf = fit_planform(&g, &FitConfig::default_for(&g)).unwrap();
    let r_n = g.r_nodus();
    assert_eq!(pf.leading.segment_of(r_n), 1);
    assert_eq!(pf.leading.segment_of(r_n - 1e-12), 0);
    let p = pf.eval(r_n).unwrap();
    assert_eq!(p.leading, pf.leading.pieces[1].eval(r_n));
    assert_eq!(p.theta, pf.pitch.pieces[1].eval(r_n));
}

#[test]
fn domain_is_closed_span() {
    let g = demo::blade();
    let pf = fit_planform(&g, &FitConfig::default_for(&g)).unwrap();
    let tip = pf.eval(g.tip_radius()).unwrap();
    let last = g.sections().last().unwrap();
    assert!((tip.leading - last.y_le).abs() < 1e-12);
    assert!((tip.theta - last.theta).abs() < 1e-12);
    assert!(pf.eval(0.0).is_ok());
    assert!(matches!(pf.eval(g.tip_radius() + 1e-9), Err(GeometryError::OutOfDomain { .. })));
    assert!(matches!(pf.eval(-1e-9), Err(GeometryError::OutOfDomain { .. })));
}

#[test]
fn refitting_fitted_samples_is_idempotent() {
    let chord = |x: f64| 0.01 + 0.015 * (PI * x / 0.11).sin();
    let g = blade_from(24, |x| 0.5 * chord(x), |x| -0.5 * chord(x), |x| 0.4 - 2.0 * x);
    let cfg = FitConfig::default_for(&g);
    let pf = fit_planform(&g, &cfg).unwrap();
    let sections = g
        .sections()
        .iter()
        .map(|s| {
            let p = pf.eval(s.x).unwrap();
            AirfoilSection { x: s.x, y_le: p.leading, z_le: 0.0, y_te: p.trailing, z_te: 0.0, theta: p.theta }
        })
        .collect();
    let g2 = PropellerGeometry::new(sections, *g.layout()).unwrap();
    let pf2 = fit_planform(&g2, &cfg).unwrap();
    for (a, b) in [(&pf.leading, &pf2.leading), (&pf.trailing, &pf2.trailing), (&pf.pitch, &pf2.pitch)] {
        for (pa, pb) in a.pieces.iter().zip(&b.pieces) {
            let scale = pa.coeffs.iter().fold(0.0f64, |m, c| m.max(c.abs()));
            for (ca, cb) in pa.coeffs.iter().zip(&pb.coeffs) {
                assert!((ca - cb).abs() <= 1e-10 * scale, "{ca} vs {cb}");
            }
        }
    }
}

#[test]
fn scaling_covariance() {
    let g = demo::blade();
    let s = 1.7;
    let gs = g.scaled(s).unwrap();
    let pf = fit_planform(&g, &FitConfig::default_for(&g)).unwrap();
    let pfs = fit_planform(&gs, &FitConfig::default_for(&gs)).unwrap();
    for k in 0..=40 {
        let x = g.tip_radius() * k as f64 / 40.0;
        let a = pf.eval(x).unwrap();
        let b = pfs.eval(s * x).unwrap();
        assert!((b.leading - s * a.leading).abs() < 1e-12);
        assert!((b.trailing - s * a.trailing).abs() < 1e-12);
        assert!((b.theta - a.theta).abs() < 1e-12);
    }
}

#[test]
fn fit_errors() {
    let g = demo::blade();
    let cfg = FitConfig { breakpoints: vec![0.01], orders: vec![3, 2] };
    assert!(matches!(
        fit_planform(&g, &cfg),
        Err(GeometryError::UnderdeterminedSegment { segment: 0, points: 2, order: 3, needed: 4 })
    ));
    let cfg = FitConfig { breakpoints: vec![0.05], orders: vec![2] };
    assert!(matches!(fit_planform(&g, &cfg), Err(GeometryError::FitConfig(_))));
    let cfg = FitConfig { breakpoints: vec![0.2], orders: vec![2, 2] };
    assert!(matches!(fit_planform(&g, &cfg), Err(GeometryError::FitConfig(_))));
}

fn straight(n: usize, length: f64, t: f64) -> Vec<CamberPoint> {
    (0..n)
        .map(|i| {
            let u = length * i as f64 / (n - 1) as f64;
            CamberPoint { u, y: u, z: 0.0, t }
        })
        .collect()
}

#[test]
fn rectangle_strip() {
    let (u0, t0) = (0.02, 0.002);
    let p = section_properties(&straight(10, u0, t0)).unwrap();
    assert!((p.camber_length - u0).abs() < 1e-15);
    assert!((p.area - t0 * u0).abs() < 1e-18);
    assert!((p.torsion_integral - t0.powi(3) * u0).abs() < 1e-22);
    // bending about the strip's own axis
    assert!((p.i_y / (u0 * t0.powi(3) / 12.0) - 1.0).abs() < 1e-12);
    assert!((p.arm_y - u0).abs() < 1e-15 && p.arm_z == 0.0);
}

#[test]
fn thickness_scaling_law() {
    let c = demo::nodus_camber();
    let doubled: Vec<CamberPoint> = c.iter().map(|p| CamberPoint { t: 2.0 * p.t, ..*p }).collect();
    let a = section_properties(&c).unwrap();
    let b = section_properties(&doubled).unwrap();
    assert!((b.area / a.area - 2.0).abs() < 1e-12);
    assert!((b.torsion_integral / a.torsion_integral - 8.0).abs() < 1e-12);
    assert_eq!(a.camber_length, b.camber_length);
}

#[test]
fn ten_points_match_dense_resampling() {
    for c in [demo::nodus_camber(), arc(10)] {
        let coarse = section_properties(&c).unwrap();
        let dense = section_properties(&resample_camber(&c, 1000).unwrap()).unwrap();
        for (a, b) in [
            (coarse.area, dense.area),
            (coarse.camber_length, dense.camber_length),
            (coarse.torsion_integral, dense.torsion_integral),
            (coarse.i_y, dense.i_y),
            (coarse.i_z, dense.i_z),
        ] {
            assert!((a / b - 1.0).abs() < 0.005, "{a} vs {b}");
        }
    }
}

#[test]
fn rotation_preserves_scalars_and_trace() {
    let c = demo::nodus_camber();
    let p = section_properties(&c).unwrap();
    for phi in [0.3, 1.1, -2.4, PI / 2.0] {
        let (s, co) = phi.sin_cos();
        let rotated: Vec<CamberPoint> =
            c.iter().map(|q| CamberPoint { y: co * q.y - s * q.z, z: s * q.y + co * q.z, ..*q }).collect();
        let r = section_properties(&rotated).unwrap();
        assert!((r.area / p.area - 1.0).abs() < 1e-12);
        assert!((r.camber_length / p.camber_length - 1.0).abs() < 1e-12);
        assert!((r.torsion_integral / p.torsion_integral - 1.0).abs() < 1e-12);
        assert!(((r.i_y + r.i_z) / (p.i_y + p.i_z) - 1.0).abs() < 1e-12);
    }
}

/// Quarter-circle arc with smoothly varying thickness, `n` points.
fn arc(n: usize) -> Vec<CamberPoint> {
    let rad = 0.015;
    (0..n)
        .map(|i| {
            let s = i as f64 / (n - 1) as f64;
            let a = 0.5 * PI * s;
            CamberPoint { u: rad * a, y: rad * a.cos(), z: rad * a.sin(), t: 0.002 * (1.0 + 0.5 * (PI * s).sin()) }
        })
        .collect()
}

#[test]
fn refinement_is_second_order() {
    let props: Vec<RepresentativeSection> = [11, 21, 41].map(|n| section_properties(&arc(n)).unwrap()).into();
    for get in [|p: &RepresentativeSection| p.area, |p: &RepresentativeSection| p.torsion_integral] {
        let d1 = get(&props[0]) - get(&props[1]);
        let d2 = get(&props[1]) - get(&props[2]);
        let ratio = d1 / d2;
        assert!((ratio - 4.0).abs() < 0.2, "ratio {ratio}");
    }
}

#[test]
fn section_errors() {
    let c = demo::nodus_camber();
    assert!(matches!(section_properties(&c[..2]), Err(GeometryError::TooFewCamberPoints(2))));
    let mut bad = c.clone();
    bad[3].t = -1e-3;
    assert!(matches!(section_properties(&bad), Err(GeometryError::InvalidCamberPoint { index: 3, .. })));
    let zero: Vec<CamberPoint> = c.iter().map(|p| CamberPoint { t: 0.0, ..*p }).collect();
    assert!(matches!(section_properties(&zero), Err(GeometryError::DegenerateSection(_))));
}
