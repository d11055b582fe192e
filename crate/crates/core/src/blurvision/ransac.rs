use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use super::VisionError;
use crate::linalg::lstsq;

/// Rotation center found by circle consensus.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CenterEstimate {
    pub cx: f64,
    pub cy: f64,
    /// Radius of the consensus circle (px).
    pub radius: f64,
    pub inliers: usize,
    /// RMS radial residual of the inliers (px).
    pub residual: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RansacOptions {
    pub iterations: usize,
    /// Inlier band half-width (px).
    pub inlier_tol: f64,
    pub seed: u64,
}

impl Default for RansacOptions {
    fn default() -> Self {
        RansacOptions { iterations: 2000, inlier_tol: 1.5, seed: 0 }
    }
}

/// Circle through three points, `None` when they are (nearly) collinear.
pub fn circumcircle(a: (f64, f64), b: (f64, f64), c: (f64, f64)) -> Option<(f64, f64, f64)> {
    let (bx, by) = (b.0 - a.0, b.1 - a.1);
    let (cx, cy) = (c.0 - a.0, c.1 - a.1);
    let d = 2.0 * (bx * cy - by * cx);
    let scale = (bx * bx + by * by).max(cx * cx + cy * cy);
    if !(d.abs() > 1e-12 * scale) {
        return None;
    }
    let b2 = bx * bx + by * by;
    let c2 = cx * cx + cy * cy;
    let ux = (cy * b2 - by * c2) / d;
    let uy = (bx * c2 - cx * b2) / d;
    Some((a.0 + ux, a.1 + uy, libm::hypot(ux, uy)))
}

/// Algebraic least-squares circle `x² + y² + Dx + Ey + F = 0`.
pub fn fit_circle(points: &[(f64, f64)]) -> Result<(f64, f64, f64), VisionError> {
    if points.len() < 3 {
        return Err(VisionError::TooFewPoints(points.len()));
    }
    // center the data for conditioning
    let n = points.len() as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / n;
    let my = points.iter().map(|p| p.1).sum::<f64>() / n;
    let mut a = Vec::with_capacity(points.len() * 3);
    let mut b = Vec::with_capacity(points.len());
    for &(x, y) in points {
        let (u, v) = (x - mx, y - my);
        a.extend_from_slice(&[u, v, 1.0]);
        b.push(-(u * u + v * v));
    }
    let sol = lstsq(&a, points.len(), 3, &b).map_err(|_| VisionError::Degenerate)?;
    let (d, e, f) = (sol.x[0], sol.x[1], sol.x[2]);
    let (ux, uy) = (-d / 2.0, -e / 2.0);
    let r2 = ux * ux + uy * uy - f;
    if !(r2 > 0.0) {
        return Err(VisionError::Degenerate);
    }
    Ok((ux + mx, uy + my, libm::sqrt(r2)))
}

fn uniform_index(rng: &mut ChaCha8Rng, n: usize) -> usize {
    ((rng.next_u64() as u128 * n as u128) >> 64) as usize
}

fn inliers_of(points: &[(f64, f64)], c: (f64, f64, f64), tol: f64) -> Vec<(f64, f64)> {
    points.iter().copied().filter(|p| (libm::hypot(p.0 - c.0, p.1 - c.1) - c.2).abs() <= tol).collect()
}

/// RANSAC over three-point circle hypotheses, then a least-squares refit on
/// the consensus set (repeated once with the refitted circle's inliers).
pub fn estimate_center(points: &[(f64, f64)], opts: &RansacOptions) -> Result<CenterEstimate, VisionError> {
    let n = points.len();
    if n < 3 {
        return Err(VisionError::TooFewPoints(n));
    }
    if opts.iterations == 0 || !(opts.inlier_tol > 0.0) {
        return Err(VisionError::Parameter("RANSAC needs iterations > 0 and a positive tolerance"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut best: Option<((f64, f64, f64), usize)> = None;
    for _ in 0..opts.iterations {
        let i = uniform_index(&mut rng, n);
        let mut j = uniform_index(&mut rng, n - 1);
        if j >= i {
            j += 1;
        }
        let mut k = uniform_index(&mut rng, n - 2);
        for m in [i.min(j), i.max(j)] {
            if k >= m {
                k += 1;
            }
        }
        let Some(c) = circumcircle(points[i], points[j], points[k]) else {
            continue;
        };
        let count =
            points.iter().filter(|p| (libm::hypot(p.0 - c.0, p.1 - c.1) - c.2).abs() <= opts.inlier_tol).count();
        if best.is_none_or(|(_, b)| count > b) {
            best = Some((c, count));
        }
    }
    let (mut circle, _) = best.ok_or(VisionError::Degenerate)?;
    let mut inl = inliers_of(points, circle, opts.inlier_tol);
    for _ in 0..2 {
        if inl.len() < 3 {
            break;
        }
        let refit = fit_circle(&inl)?;
        let next = inliers_of(points, refit, opts.inlier_tol);
        if next.len() < 3 {
            break;
        }
        circle = refit;
        inl = next;
    }
    let ss: f64 = inl
        .iter()
        .map(|p| {
            let e = libm::hypot(p.0 - circle.0, p.1 - circle.1) - circle.2;
            e * e
        })
        .sum();
    let residual = if inl.is_empty() { 0.0 } else { libm::sqrt(ss / inl.len() as f64) };
    Ok(CenterEstimate { cx: circle.0, cy: circle.1, radius: circle.2, inliers: inl.len(), residual })
}
