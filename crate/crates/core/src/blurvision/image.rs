use alloc::vec;
use alloc::vec::Vec;

use super::VisionError;

/// 8-bit grayscale image, row-major. Pixel `(col, row)` has its center at
/// the real coordinate `(col, row)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrayImage {
    width: usize,
    height: usize,
    data: Vec<u8>,
}

impl GrayImage {
    pub fn new(width: usize, height: usize) -> Self {
        GrayImage { width, height, data: vec![0; width * height] }
    }

    pub fn from_raw(width: usize, height: usize, data: Vec<u8>) -> Result<Self, VisionError> {
        if data.len() != width * height {
            return Err(VisionError::Dimensions { expected: (width, height), got_len: data.len() });
        }
        Ok(GrayImage { width, height, data })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn as_raw(&self) -> &[u8] {
        &self.data
    }

    pub fn into_raw(self) -> Vec<u8> {
        self.data
    }

    pub fn get(&self, col: usize, row: usize) -> u8 {
        self.data[row * self.width + col]
    }

    pub fn set(&mut self, col: usize, row: usize, v: u8) {
        self.data[row * self.width + col] = v;
    }
}

/// Frames of one recording plus the camera scale and blade radii.
#[derive(Debug, Clone, PartialEq)]
pub struct FrameStack {
    frames: Vec<GrayImage>,
    pub fps: f64,
    pub mm_per_px: f64,
    /// Rest-state tip radius (mm).
    pub r_rest_mm: f64,
    /// Hub center to nodus start (mm).
    pub r_nodus_mm: f64,
}

impl FrameStack {
    pub fn new(
        frames: Vec<GrayImage>,
        fps: f64,
        mm_per_px: f64,
        r_rest_mm: f64,
        r_nodus_mm: f64,
    ) -> Result<Self, VisionError> {
        if frames.is_empty() {
            return Err(VisionError::NoFrames);
        }
        let (w, h) = (frames[0].width, frames[0].height);
        if let Some(f) = frames.iter().find(|f| f.width != w || f.height != h) {
            return Err(VisionError::Dimensions { expected: (w, h), got_len: f.data.len() });
        }
        if !(fps > 0.0 && fps.is_finite()) {
            return Err(VisionError::Parameter("fps must be positive"));
        }
        if !(mm_per_px > 0.0 && mm_per_px.is_finite()) {
            return Err(VisionError::Parameter("mm_per_px must be positive"));
        }
        if !(r_nodus_mm >= 0.0 && r_nodus_mm < r_rest_mm && r_rest_mm.is_finite()) {
            return Err(VisionError::Parameter("need 0 <= r_nodus < r_rest"));
        }
        Ok(FrameStack { frames, fps, mm_per_px, r_rest_mm, r_nodus_mm })
    }

    pub fn frames(&self) -> &[GrayImage] {
        &self.frames
    }

    pub fn width(&self) -> usize {
        self.frames[0].width
    }

    pub fn height(&self) -> usize {
        self.frames[0].height
    }
}
