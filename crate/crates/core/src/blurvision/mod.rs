//! Out-of-plane bending angle from motion-blurred frames of a spinning
//! propeller: combos of consecutive frames, RANSAC rotation center, convex
//! hull tip radius and the projected-radius relation for β.

mod beta;
mod combos;
mod hull;
mod image;
mod pipeline;
mod ransac;
mod synth;

pub use beta::{beta_from_radius, projected_tip_radius, BetaEstimate, RADIUS_TOLERANCE};
pub use combos::{binarize, build_combos, ComboImage};
pub use hull::{convex_hull, projected_radius, radius_from_points};
pub use image::{FrameStack, GrayImage};
pub use pipeline::{angular_coverage, estimate_beta, estimate_combo, ComboResult, PipelineOptions};
pub use ransac::{circumcircle, estimate_center, fit_circle, CenterEstimate, RansacOptions};
pub use synth::{synth_frames, SynthConfig, SynthTruth};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum VisionError {
    #[error("no frames")]
    NoFrames,
    #[error("expected {}x{} pixels, got buffer of {got_len}", .expected.0, .expected.1)]
    Dimensions { expected: (usize, usize), got_len: usize },
    #[error("invalid parameter: {0}")]
    Parameter(&'static str),
    #[error("need at least 3 points, got {0}")]
    TooFewPoints(usize),
    #[error("all circle hypotheses are degenerate (collinear points)")]
    Degenerate,
    #[error("combo has no active pixels")]
    EmptyCombo,
    #[error("estimated center ({cx:.2}, {cy:.2}) lies outside the image")]
    CenterOutside { cx: f64, cy: f64 },
    #[error("measured radius {r_meas} mm inconsistent with rest radius {r_rest} mm and nodus radius {r_nodus} mm")]
    InconsistentRadius { r_meas: f64, r_rest: f64, r_nodus: f64 },
    #[error("blade of radius {radius_px:.1} px does not fit a {width}x{height} frame")]
    Render { radius_px: f64, width: usize, height: usize },
}
