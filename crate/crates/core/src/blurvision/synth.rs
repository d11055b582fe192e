use alloc::vec::Vec;
use core::f64::consts::{PI, TAU};

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use super::{projected_tip_radius, FrameStack, GrayImage, VisionError};

/// Rotating propeller seen from above: a bright hub disc and `n_blades`
/// sector-shaped blades on a dark background, motion-blurred over the
/// exposure and bent out of plane by `beta` beyond the nodus.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SynthConfig {
    pub width: usize,
    pub height: usize,
    /// Rotation center (px).
    pub center: (f64, f64),
    pub mm_per_px: f64,
    pub r_rest_mm: f64,
    pub r_nodus_mm: f64,
    pub r_hub_mm: f64,
    pub n_blades: u32,
    /// Angular width of one blade (rad).
    pub blade_width: f64,
    /// rad/s
    pub omega: f64,
    /// rad
    pub beta: f64,
    pub fps: f64,
    /// Shutter-open fraction of the frame period, in (0, 1].
    pub exposure: f64,
    pub n_frames: usize,
    /// Gaussian noise standard deviation (intensity levels).
    pub noise_sigma: f64,
    pub seed: u64,
    /// Blade angle at t = 0 (rad).
    pub phase: f64,
}

impl SynthConfig {
    /// A 9-inch blade filmed at 960 fps and 2500 rpm, 0.25 mm per pixel.
    pub fn example(beta: f64, noise_sigma: f64, seed: u64) -> Self {
        SynthConfig {
            width: 960,
            height: 960,
            center: (479.3, 481.6),
            mm_per_px: 0.25,
            r_rest_mm: 114.3,
            r_nodus_mm: 30.0,
            r_hub_mm: 15.0,
            n_blades: 2,
            blade_width: 0.25,
            omega: 2500.0 * PI / 30.0,
            beta,
            fps: 960.0,
            exposure: 0.5,
            n_frames: 20,
            noise_sigma,
            seed,
            phase: 0.3,
        }
    }
}

/// Ground truth of a rendered stack.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SynthTruth {
    pub cx: f64,
    pub cy: f64,
    /// Projected tip radius (mm).
    pub r_tip_mm: f64,
    pub beta: f64,
}

/// Fraction of the exposure during which a blade starting at `theta0` and
/// sweeping `sweep` rad covers the direction `phi`.
fn time_fraction(phi: f64, theta0: f64, sweep: f64, width: f64) -> f64 {
    if sweep <= 0.0 {
        return if crate::rem_euclid(phi - theta0, TAU) <= width { 1.0 } else { 0.0 };
    }
    // start angles in [phi − width, phi] cover phi
    let d = crate::rem_euclid(phi - width - theta0, TAU);
    let overlap = |shift: f64| -> f64 {
        let lo = shift.max(0.0);
        let hi = (shift + width).min(sweep);
        (hi - lo).max(0.0)
    };
    ((overlap(d) + overlap(d - TAU)) / sweep).min(1.0)
}

fn standard_normal(rng: &mut ChaCha8Rng) -> f64 {
    let u1 = ((rng.next_u64() >> 11) as f64 + 1.0) / (1u64 << 53) as f64;
    let u2 = (rng.next_u64() >> 11) as f64 / (1u64 << 53) as f64;
    libm::sqrt(-2.0 * libm::log(u1)) * libm::cos(TAU * u2)
}

pub fn synth_frames(cfg: &SynthConfig) -> Result<(FrameStack, SynthTruth), VisionError> {
    let vals = [cfg.mm_per_px, cfg.fps, cfg.exposure, cfg.r_rest_mm, cfg.blade_width];
    if !vals.iter().all(|v| *v > 0.0 && v.is_finite()) || cfg.exposure > 1.0 {
        return Err(VisionError::Parameter("scale, fps, exposure, radius and blade width must be positive"));
    }
    if !(cfg.r_hub_mm >= 0.0 && cfg.r_hub_mm <= cfg.r_nodus_mm && cfg.r_nodus_mm < cfg.r_rest_mm) {
        return Err(VisionError::Parameter("need r_hub <= r_nodus < r_rest"));
    }
    if !(cfg.noise_sigma >= 0.0 && cfg.omega >= 0.0 && cfg.beta.abs() <= core::f64::consts::FRAC_PI_2) {
        return Err(VisionError::Parameter("noise, speed and beta out of range"));
    }
    if cfg.n_blades == 0 || cfg.n_frames == 0 {
        return Err(VisionError::Parameter("need at least one blade and one frame"));
    }
    let sweep = cfg.omega * cfg.exposure / cfg.fps;
    if sweep + cfg.blade_width >= TAU / cfg.n_blades as f64 {
        return Err(VisionError::Parameter("blurred blades overlap; lower the speed or exposure"));
    }
    let r_tip_mm = projected_tip_radius(cfg.beta, cfg.r_rest_mm, cfg.r_nodus_mm);
    let r_tip = r_tip_mm / cfg.mm_per_px;
    let r_hub = cfg.r_hub_mm / cfg.mm_per_px;
    let (cx, cy) = cfg.center;
    let margin = r_tip + 2.0;
    if cx - margin < 0.0
        || cy - margin < 0.0
        || cx + margin > (cfg.width - 1) as f64
        || cy + margin > (cfg.height - 1) as f64
    {
        return Err(VisionError::Render { radius_px: r_tip, width: cfg.width, height: cfg.height });
    }

    // per-pixel polar coordinates and radial coverage, shared by all frames
    let n = cfg.width * cfg.height;
    let mut phi = Vec::with_capacity(n);
    let mut blade_cov = Vec::with_capacity(n);
    let mut hub_cov = Vec::with_capacity(n);
    for r in 0..cfg.height {
        for c in 0..cfg.width {
            let (dx, dy) = (c as f64 - cx, r as f64 - cy);
            let rho = libm::hypot(dx, dy);
            let p = libm::atan2(dy, dx);
            // half extent of a unit pixel along the radial direction
            let a = 0.5 * (libm::fabs(libm::cos(p)) + libm::fabs(libm::sin(p)));
            phi.push(p);
            blade_cov.push(((r_tip - rho + a) / (2.0 * a)).clamp(0.0, 1.0));
            hub_cov.push(((r_hub - rho + a) / (2.0 * a)).clamp(0.0, 1.0));
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut frames = Vec::with_capacity(cfg.n_frames);
    for k in 0..cfg.n_frames {
        let t0 = k as f64 / cfg.fps;
        let mut data = Vec::with_capacity(n);
        for i in 0..n {
            let mut cov = hub_cov[i];
            if blade_cov[i] > 0.0 {
                let mut ang = 0.0;
                for b in 0..cfg.n_blades {
                    let theta0 = cfg.phase + TAU * b as f64 / cfg.n_blades as f64 + cfg.omega * t0;
                    ang += time_fraction(phi[i], theta0, sweep, cfg.blade_width);
                }
                cov = cov.max(blade_cov[i] * ang.min(1.0));
            }
            let mut v = 255.0 * cov;
            if cfg.noise_sigma > 0.0 {
                v += cfg.noise_sigma * standard_normal(&mut rng);
            }
            data.push(libm::round(v).clamp(0.0, 255.0) as u8);
        }
        frames.push(GrayImage::from_raw(cfg.width, cfg.height, data)?);
    }
    let stack = FrameStack::new(frames, cfg.fps, cfg.mm_per_px, cfg.r_rest_mm, cfg.r_nodus_mm)?;
    Ok((stack, SynthTruth { cx, cy, r_tip_mm, beta: cfg.beta }))
}
