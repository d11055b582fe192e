use alloc::vec;
use alloc::vec::Vec;

use super::{FrameStack, GrayImage, VisionError};

/// Normalized accumulation of binarized frames; each pixel holds the
/// fraction of frames in which it was active.
#[derive(Debug, Clone, PartialEq)]
pub struct ComboImage {
    pub width: usize,
    pub height: usize,
    pub pixels: Vec<f64>,
    pub combo_size: usize,
}

impl ComboImage {
    pub fn get(&self, col: usize, row: usize) -> f64 {
        self.pixels[row * self.width + col]
    }

    pub fn is_active(&self, col: usize, row: usize) -> bool {
        self.get(col, row) > 0.0
    }

    /// Active pixels with at least one inactive 4-neighbour or on the border.
    pub fn boundary_points(&self) -> Vec<(f64, f64)> {
        let (w, h) = (self.width, self.height);
        let mut out = Vec::new();
        for r in 0..h {
            for c in 0..w {
                if !self.is_active(c, r) {
                    continue;
                }
                let edge = c == 0
                    || r == 0
                    || c + 1 == w
                    || r + 1 == h
                    || !self.is_active(c - 1, r)
                    || !self.is_active(c + 1, r)
                    || !self.is_active(c, r - 1)
                    || !self.is_active(c, r + 1);
                if edge {
                    out.push((c as f64, r as f64));
                }
            }
        }
        out
    }

    pub fn active_points(&self) -> Vec<(f64, f64)> {
        let w = self.width;
        self.pixels
            .iter()
            .enumerate()
            .filter(|(_, v)| **v > 0.0)
            .map(|(i, _)| ((i % w) as f64, (i / w) as f64))
            .collect()
    }
}

fn check_threshold(threshold: f64) -> Result<u8, VisionError> {
    if !(threshold > 0.0 && threshold < 1.0) {
        return Err(VisionError::Parameter("threshold must lie in (0, 1)"));
    }
    Ok(libm::floor(threshold * 255.0) as u8)
}

/// Pixels strictly brighter than `threshold × 255`.
pub fn binarize(frame: &GrayImage, threshold: f64) -> Result<Vec<bool>, VisionError> {
    let t = check_threshold(threshold)?;
    Ok(frame.as_raw().iter().map(|&v| v > t).collect())
}

/// Non-overlapping windows of `combo_size` frames; a trailing partial window
/// is dropped.
pub fn build_combos(fs: &FrameStack, combo_size: usize, threshold: f64) -> Result<Vec<ComboImage>, VisionError> {
    let t = check_threshold(threshold)?;
    if combo_size == 0 || combo_size > fs.frames().len() {
        return Err(VisionError::Parameter("combo size must lie in 1..=frame count"));
    }
    let (w, h) = (fs.width(), fs.height());
    let mut out = Vec::new();
    for chunk in fs.frames().chunks_exact(combo_size) {
        let mut counts = vec![0u32; w * h];
        for f in chunk {
            for (c, &v) in counts.iter_mut().zip(f.as_raw()) {
                if v > t {
                    *c += 1;
                }
            }
        }
        let n = combo_size as f64;
        out.push(ComboImage {
            width: w,
            height: h,
            pixels: counts.into_iter().map(|c| c as f64 / n).collect(),
            combo_size,
        });
    }
    Ok(out)
}
