use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::TAU;

use super::{
    beta_from_radius, binarize, build_combos, estimate_center, projected_radius, BetaEstimate, CenterEstimate,
    ComboImage, FrameStack, RansacOptions, VisionError,
};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PipelineOptions {
    pub combo_size: usize,
    /// Binarization threshold as a fraction of full scale.
    pub threshold: f64,
    /// RANSAC settings; combo `i` uses seed `ransac.seed + i`.
    pub ransac: RansacOptions,
    pub n_blades: u32,
    /// Angular bins used for the sector-coverage speed estimate.
    pub coverage_bins: usize,
}

impl Default for PipelineOptions {
    fn default() -> Self {
        PipelineOptions {
            combo_size: 10,
            threshold: 0.25,
            ransac: RansacOptions::default(),
            n_blades: 2,
            coverage_bins: 1440,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComboResult {
    pub combo_index: usize,
    /// Speed estimated from the sector swept during the combo (rad/s).
    pub omega_est: f64,
    pub center: CenterEstimate,
    pub estimate: BetaEstimate,
}

/// Angle (rad) covered by active pixels within the annulus `[r_in, r_out]`
/// around `(cx, cy)`, measured on `bins` equal angular bins.
pub fn angular_coverage<F>(
    width: usize,
    height: usize,
    active: F,
    center: (f64, f64),
    r_in: f64,
    r_out: f64,
    bins: usize,
) -> f64
where
    F: Fn(usize) -> bool,
{
    let mut hit = vec![false; bins.max(1)];
    let (cx, cy) = center;
    let row_lo = libm::floor(cy - r_out).max(0.0) as usize;
    let row_hi = (libm::ceil(cy + r_out).max(0.0) as usize).min(height.saturating_sub(1));
    let col_lo = libm::floor(cx - r_out).max(0.0) as usize;
    let col_hi = (libm::ceil(cx + r_out).max(0.0) as usize).min(width.saturating_sub(1));
    for r in row_lo..=row_hi {
        for c in col_lo..=col_hi {
            let (dx, dy) = (c as f64 - cx, r as f64 - cy);
            let rho = libm::hypot(dx, dy);
            if rho < r_in || rho > r_out || !active(r * width + c) {
                continue;
            }
            let a = crate::rem_euclid(libm::atan2(dy, dx), TAU);
            let b = ((a / TAU * hit.len() as f64) as usize).min(hit.len() - 1);
            hit[b] = true;
        }
    }
    hit.iter().filter(|h| **h).count() as f64 * TAU / hit.len() as f64
}

/// Center, projected radius, β and speed for one combo. `first_frame` is the
/// binarized first frame of the combo.
pub fn estimate_combo(
    fs: &FrameStack,
    combo: &ComboImage,
    first_frame: &[bool],
    combo_index: usize,
    opts: &PipelineOptions,
) -> Result<ComboResult, VisionError> {
    let boundary = combo.boundary_points();
    if boundary.is_empty() {
        return Err(VisionError::EmptyCombo);
    }
    let ransac = RansacOptions { seed: opts.ransac.seed.wrapping_add(combo_index as u64), ..opts.ransac };
    let center = estimate_center(&boundary, &ransac)?;
    let (w, h) = (combo.width as f64, combo.height as f64);
    if !(center.cx >= 0.0 && center.cy >= 0.0 && center.cx <= w - 1.0 && center.cy <= h - 1.0) {
        return Err(VisionError::CenterOutside { cx: center.cx, cy: center.cy });
    }
    let r_meas = projected_radius(combo, &center, fs.mm_per_px)?;
    let beta = beta_from_radius(r_meas, fs.r_rest_mm, fs.r_nodus_mm)?;

    let r_px = r_meas / fs.mm_per_px;
    let (r_in, r_out) = (0.55 * r_px, 0.75 * r_px);
    let c = (center.cx, center.cy);
    let cov_combo =
        angular_coverage(combo.width, combo.height, |i| combo.pixels[i] > 0.0, c, r_in, r_out, opts.coverage_bins);
    let cov_frame = angular_coverage(combo.width, combo.height, |i| first_frame[i], c, r_in, r_out, opts.coverage_bins);
    let omega_est = if combo.combo_size > 1 {
        (cov_combo - cov_frame).max(0.0) / opts.n_blades as f64 * fs.fps / (combo.combo_size - 1) as f64
    } else {
        0.0
    };
    Ok(ComboResult { combo_index, omega_est, center, estimate: BetaEstimate { beta, r_meas, combo_index } })
}

/// Runs the whole pipeline on every combo of the stack, in order.
pub fn estimate_beta(fs: &FrameStack, opts: &PipelineOptions) -> Result<Vec<ComboResult>, VisionError> {
    if opts.n_blades == 0 || opts.coverage_bins == 0 {
        return Err(VisionError::Parameter("blade count and coverage bins must be positive"));
    }
    let combos = build_combos(fs, opts.combo_size, opts.threshold)?;
    combos
        .iter()
        .enumerate()
        .map(|(i, combo)| {
            let first = binarize(&fs.frames()[i * opts.combo_size], opts.threshold)?;
            estimate_combo(fs, combo, &first, i, opts)
        })
        .collect()
}
