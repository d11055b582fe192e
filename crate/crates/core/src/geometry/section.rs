use alloc::vec::Vec;

use super::GeometryError;

/// Point on the camber line of the nodus cross-section with local thickness.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CamberPoint {
    /// Arc-length parameter (m).
    pub u: f64,
    pub y: f64,
    pub z: f64,
    /// Thickness (m).
    pub t: f64,
}

/// Thin-strip properties of the nodus cross-section.
#[derive(Debug, Clone, PartialEq)]
pub struct RepresentativeSection {
    pub camber: Vec<CamberPoint>,
    /// Camber arc length `U` (m).
    pub camber_length: f64,
    /// `A = ∫ t dU` (m²).
    pub area: f64,
    /// `F = ∫ t³ dU` (m⁴).
    pub torsion_integral: f64,
    /// Second moments about the centroidal y and z axes (m⁴).
    pub i_y: f64,
    pub i_z: f64,
    pub centroid: (f64, f64),
    /// Moment arms of the chordwise and normal loads about the nodus axis (m).
    pub arm_y: f64,
    pub arm_z: f64,
}

/// Thin-strip integrals of the camber polyline with thickness interpolated
/// linearly between points.
///
/// Each segment also contributes its own `t³ dU / 12` bending term, projected
/// onto the axis through the segment direction.
pub fn section_properties(camber: &[CamberPoint]) -> Result<RepresentativeSection, GeometryError> {
    if camber.len() < 3 {
        return Err(GeometryError::TooFewCamberPoints(camber.len()));
    }
    for (i, p) in camber.iter().enumerate() {
        if ![p.u, p.y, p.z, p.t].iter().all(|v| v.is_finite()) {
            return Err(GeometryError::InvalidCamberPoint { index: i, reason: "non-finite value" });
        }
        if p.t < 0.0 {
            return Err(GeometryError::InvalidCamberPoint { index: i, reason: "negative thickness" });
        }
        if i > 0 && p.u < camber[i - 1].u {
            return Err(GeometryError::InvalidCamberPoint { index: i, reason: "arc-length parameter decreases" });
        }
    }

    let segs: Vec<(f64, f64, f64)> = camber
        .windows(2)
        .map(|w| {
            let dy = w[1].y - w[0].y;
            let dz = w[1].z - w[0].z;
            (dy, dz, libm::hypot(dy, dz))
        })
        .collect();
    let length: f64 = segs.iter().map(|s| s.2).sum();
    if length <= 0.0 {
        return Err(GeometryError::DegenerateSection("camber length"));
    }
    // Simpson on each segment is exact for the cubic integrands of a
    // linearly interpolated strip.
    let simpson = |f: &dyn Fn(&CamberPoint) -> f64| -> f64 {
        camber
            .windows(2)
            .zip(&segs)
            .map(|(w, s)| {
                let mid = CamberPoint {
                    u: 0.5 * (w[0].u + w[1].u),
                    y: 0.5 * (w[0].y + w[1].y),
                    z: 0.5 * (w[0].z + w[1].z),
                    t: 0.5 * (w[0].t + w[1].t),
                };
                (f(&w[0]) + 4.0 * f(&mid) + f(&w[1])) * s.2 / 6.0
            })
            .sum()
    };
    let area = simpson(&|p| p.t);
    if area <= 0.0 {
        return Err(GeometryError::DegenerateSection("area"));
    }
    let torsion = simpson(&|p| p.t * p.t * p.t);
    let yc = simpson(&|p| p.t * p.y) / area;
    let zc = simpson(&|p| p.t * p.z) / area;

    let mut self_y = 0.0;
    let mut self_z = 0.0;
    for (w, &(dy, dz, ds)) in camber.windows(2).zip(&segs) {
        if ds == 0.0 {
            continue;
        }
        let (t0, t1) = (w[0].t, w[1].t);
        let t3 = 0.25 * (t0 + t1) * (t0 * t0 + t1 * t1) * ds / 12.0;
        self_y += t3 * (dy / ds) * (dy / ds);
        self_z += t3 * (dz / ds) * (dz / ds);
    }
    let i_y = simpson(&|p| p.t * (p.z - zc) * (p.z - zc)) + self_y;
    let i_z = simpson(&|p| p.t * (p.y - yc) * (p.y - yc)) + self_z;

    let first = camber[0];
    let last = camber[camber.len() - 1];
    Ok(RepresentativeSection {
        camber: camber.to_vec(),
        camber_length: length,
        area,
        torsion_integral: torsion,
        i_y,
        i_z,
        centroid: (yc, zc),
        arm_y: (first.y - last.y).abs(),
        arm_z: (first.z - last.z).abs(),
    })
}

/// Resamples the camber polyline at `n` points equally spaced in arc length,
/// interpolating position and thickness linearly.
pub fn resample_camber(camber: &[CamberPoint], n: usize) -> Result<Vec<CamberPoint>, GeometryError> {
    if camber.len() < 2 || n < 2 {
        return Err(GeometryError::TooFewCamberPoints(camber.len().min(n)));
    }
    let mut s = Vec::with_capacity(camber.len());
    s.push(0.0);
    for w in camber.windows(2) {
        let prev = *s.last().unwrap();
        s.push(prev + libm::hypot(w[1].y - w[0].y, w[1].z - w[0].z));
    }
    let total = *s.last().unwrap();
    if total <= 0.0 {
        return Err(GeometryError::DegenerateSection("camber length"));
    }
    let u0 = camber[0].u;
    let mut out = Vec::with_capacity(n);
    let mut j = 0;
    for k in 0..n {
        let target = total * k as f64 / (n - 1) as f64;
        while j + 2 < s.len() && s[j + 1] < target {
            j += 1;
        }
        let span = s[j + 1] - s[j];
        let f = if span > 0.0 { ((target - s[j]) / span).clamp(0.0, 1.0) } else { 0.0 };
        let (a, b) = (camber[j], camber[j + 1]);
        out.push(CamberPoint {
            u: u0 + target,
            y: a.y + f * (b.y - a.y),
            z: a.z + f * (b.z - a.z),
            t: a.t + f * (b.t - a.t),
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strip(n: usize, len: f64, t: f64, angle: f64) -> Vec<CamberPoint> {
        (0..n)
            .map(|i| {
                let s = len * i as f64 / (n - 1) as f64 - 0.5 * len;
                CamberPoint { u: s + 0.5 * len, y: s * libm::cos(angle), z: s * libm::sin(angle), t }
            })
            .collect()
    }

    #[test]
    fn flat_strip_closed_form() {
        let (u, t) = (0.02, 0.002);
        let p = section_properties(&strip(11, u, t, 0.0)).unwrap();
        assert!((p.area - u * t).abs() < 1e-15);
        assert!((p.torsion_integral - u * t.powi(3)).abs() < 1e-20);
        assert!((p.i_y - u * t.powi(3) / 12.0).abs() < 1e-20);
        let exact = t * u.powi(3) / 12.0;
        assert!((p.i_z / exact - 1.0).abs() < 1e-12);
        assert!((p.arm_y - u).abs() < 1e-15 && p.arm_z.abs() < 1e-15);
    }

    #[test]
    fn trace_is_rotation_invariant() {
        let a = section_properties(&strip(9, 0.015, 0.003, 0.0)).unwrap();
        let b = section_properties(&strip(9, 0.015, 0.003, 0.7)).unwrap();
        assert!(((a.i_y + a.i_z) - (b.i_y + b.i_z)).abs() < 1e-18);
        assert!((a.area - b.area).abs() < 1e-15);
    }

    #[test]
    fn invalid_input() {
        let mut pts = strip(5, 0.01, 0.001, 0.0);
        assert!(section_properties(&pts[..2]).is_err());
        pts[2].t = -1e-3;
        assert!(matches!(section_properties(&pts), Err(GeometryError::InvalidCamberPoint { index: 2, .. })));
        let zero = strip(5, 0.01, 0.0, 0.0);
        assert!(matches!(section_properties(&zero), Err(GeometryError::DegenerateSection(_))));
    }

    #[test]
    fn resample_preserves_endpoints() {
        let pts = strip(4, 0.01, 0.001, 0.3);
        let r = resample_camber(&pts, 50).unwrap();
        assert_eq!(r.len(), 50);
        assert!((r[0].y - pts[0].y).abs() < 1e-15);
        assert!((r[49].z - pts[3].z).abs() < 1e-15);
        let a = section_properties(&pts).unwrap();
        let b = section_properties(&r).unwrap();
        assert!((a.area - b.area).abs() < 1e-15);
    }
}
