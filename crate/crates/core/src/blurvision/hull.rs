use alloc::vec::Vec;

use super::{CenterEstimate, ComboImage, VisionError};

fn cross(o: (f64, f64), a: (f64, f64), b: (f64, f64)) -> f64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

/// Convex hull by Andrew's monotone chain, counter-clockwise without
/// collinear points.
pub fn convex_hull(points: &[(f64, f64)]) -> Vec<(f64, f64)> {
    let mut p: Vec<(f64, f64)> = points.to_vec();
    p.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.total_cmp(&b.1)));
    p.dedup();
    if p.len() < 3 {
        return p;
    }
    let mut hull: Vec<(f64, f64)> = Vec::with_capacity(2 * p.len());
    for &q in &p {
        while hull.len() >= 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], q) <= 0.0 {
            hull.pop();
        }
        hull.push(q);
    }
    let lower = hull.len() + 1;
    for &q in p.iter().rev().skip(1) {
        while hull.len() >= lower && cross(hull[hull.len() - 2], hull[hull.len() - 1], q) <= 0.0 {
            hull.pop();
        }
        hull.push(q);
    }
    hull.pop();
    hull
}

/// Largest distance from `(cx, cy)` to the hull of `points`, times the scale.
pub fn radius_from_points(points: &[(f64, f64)], cx: f64, cy: f64, mm_per_px: f64) -> Result<f64, VisionError> {
    if points.is_empty() {
        return Err(VisionError::EmptyCombo);
    }
    let hull = convex_hull(points);
    let r = hull.iter().map(|p| libm::hypot(p.0 - cx, p.1 - cy)).fold(0.0, f64::max);
    Ok(r * mm_per_px)
}

/// Projected tip radius of a combo (mm). Only the two extreme active pixels
/// of each row can be hull vertices, so only those are passed on.
pub fn projected_radius(combo: &ComboImage, center: &CenterEstimate, mm_per_px: f64) -> Result<f64, VisionError> {
    let mut ends = Vec::new();
    for r in 0..combo.height {
        let row = &combo.pixels[r * combo.width..(r + 1) * combo.width];
        if let Some(first) = row.iter().position(|v| *v > 0.0) {
            let last = row.iter().rposition(|v| *v > 0.0).unwrap_or(first);
            ends.push((first as f64, r as f64));
            if last != first {
                ends.push((last as f64, r as f64));
            }
        }
    }
    radius_from_points(&ends, center.cx, center.cy, mm_per_px)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn square_hull() {
        let pts = vec![(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0), (0.5, 0.5), (0.5, 0.0)];
        let h = convex_hull(&pts);
        assert_eq!(h.len(), 4);
        assert!(!h.contains(&(0.5, 0.5)));
    }

    #[test]
    fn single_pixel_radius() {
        assert_eq!(radius_from_points(&[(53.0, 14.0)], 50.0, 10.0, 1.0).unwrap(), 5.0);
        assert_eq!(radius_from_points(&[], 0.0, 0.0, 1.0), Err(VisionError::EmptyCombo));
    }
}
