//! Propeller planform data, piecewise polynomial planform functions and the
//! representative nodus cross-section.

mod planform;
mod section;

pub use planform::{
    fit_planform, FitConfig, PiecewisePolynomial, PlanformFunctions, PlanformSample, Polynomial, SegmentFit,
};
pub use section::{resample_camber, section_properties, CamberPoint, RepresentativeSection};

use alloc::vec::Vec;
use core::f64::consts::FRAC_PI_2;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeometryError {
    #[error("section {index}: {reason}")]
    InvalidSection { index: usize, reason: &'static str },
    #[error("section {index}: span coordinate {x} does not increase (previous {previous})")]
    NonMonotone { index: usize, x: f64, previous: f64 },
    #[error("geometry needs at least one section")]
    NoSections,
    #[error("invalid blade layout: {0}")]
    Layout(&'static str),
    #[error("invalid fit configuration: {0}")]
    FitConfig(&'static str),
    #[error("segment {segment} has {points} sections but order {order} needs at least {needed}")]
    UnderdeterminedSegment { segment: usize, points: usize, order: usize, needed: usize },
    #[error("segment {segment} is ill-conditioned at order {order}; use a lower order")]
    IllConditioned { segment: usize, order: usize },
    #[error("span coordinate {x} outside [0, {tip}]")]
    OutOfDomain { x: f64, tip: f64 },
    #[error("representative section needs at least 3 camber points, got {0}")]
    TooFewCamberPoints(usize),
    #[error("camber point {index}: {reason}")]
    InvalidCamberPoint { index: usize, reason: &'static str },
    #[error("representative section has zero {0}")]
    DegenerateSection(&'static str),
}

/// One chordwise cut of the blade.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AirfoilSection {
    /// Span coordinate (m).
    pub x: f64,
    pub y_le: f64,
    pub z_le: f64,
    pub y_te: f64,
    pub z_te: f64,
    /// Pitch angle (rad).
    pub theta: f64,
}

impl AirfoilSection {
    /// In-plane chord `|y_LE − y_TE|`.
    pub fn chord(&self) -> f64 {
        (self.y_le - self.y_te).abs()
    }

    fn check(&self, index: usize) -> Result<(), GeometryError> {
        let fields = [self.x, self.y_le, self.z_le, self.y_te, self.z_te, self.theta];
        if fields.iter().any(|v| !v.is_finite()) {
            return Err(GeometryError::InvalidSection { index, reason: "non-finite value" });
        }
        if self.x < 0.0 {
            return Err(GeometryError::InvalidSection { index, reason: "negative span coordinate" });
        }
        if self.chord() <= 0.0 {
            return Err(GeometryError::InvalidSection { index, reason: "zero chord" });
        }
        if self.theta.abs() >= FRAC_PI_2 {
            return Err(GeometryError::InvalidSection { index, reason: "pitch outside (-90, 90) degrees" });
        }
        Ok(())
    }
}

/// Radial stations of the hub, nodus and wing.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BladeLayout {
    /// Hub outer radius (m).
    pub r_hub: f64,
    /// Span where the nodus starts (m).
    pub x_nodus: f64,
    /// Nodus length (m).
    pub nodus_length: f64,
    /// Tip radius (m).
    pub tip_radius: f64,
    pub n_blades: u32,
}

impl BladeLayout {
    /// Span where the rigid wing begins.
    pub fn r_nodus(&self) -> f64 {
        self.x_nodus + self.nodus_length
    }

    fn check(&self) -> Result<(), GeometryError> {
        let vals = [self.r_hub, self.x_nodus, self.nodus_length, self.tip_radius];
        if vals.iter().any(|v| !v.is_finite()) {
            return Err(GeometryError::Layout("non-finite station"));
        }
        if self.nodus_length <= 0.0 {
            return Err(GeometryError::Layout("nodus length must be positive"));
        }
        if !(0.0 < self.r_hub && self.r_hub <= self.x_nodus && self.r_nodus() < self.tip_radius) {
            return Err(GeometryError::Layout("need 0 < r_hub <= x_nodus < r_nodus < tip radius"));
        }
        if self.n_blades == 0 {
            return Err(GeometryError::Layout("blade count must be positive"));
        }
        Ok(())
    }
}

/// Validated planform table plus blade layout.
#[derive(Debug, Clone, PartialEq)]
pub struct PropellerGeometry {
    sections: Vec<AirfoilSection>,
    layout: BladeLayout,
}

impl PropellerGeometry {
    /// Sections must be strictly increasing in `x` and lie within the tip radius.
    pub fn new(sections: Vec<AirfoilSection>, layout: BladeLayout) -> Result<Self, GeometryError> {
        layout.check()?;
        if sections.is_empty() {
            return Err(GeometryError::NoSections);
        }
        for (i, s) in sections.iter().enumerate() {
            s.check(i)?;
            if s.x > layout.tip_radius {
                return Err(GeometryError::InvalidSection { index: i, reason: "beyond tip radius" });
            }
            if i > 0 && s.x <= sections[i - 1].x {
                return Err(GeometryError::NonMonotone { index: i, x: s.x, previous: sections[i - 1].x });
            }
        }
        Ok(PropellerGeometry { sections, layout })
    }

    pub fn sections(&self) -> &[AirfoilSection] {
        &self.sections
    }

    pub fn layout(&self) -> &BladeLayout {
        &self.layout
    }

    pub fn tip_radius(&self) -> f64 {
        self.layout.tip_radius
    }

    pub fn r_nodus(&self) -> f64 {
        self.layout.r_nodus()
    }

    pub fn n_blades(&self) -> u32 {
        self.layout.n_blades
    }

    /// Same layout with every coordinate multiplied by `s` (pitch unchanged).
    pub fn scaled(&self, s: f64) -> Result<Self, GeometryError> {
        let sections = self
            .sections
            .iter()
            .map(|c| AirfoilSection {
                x: c.x * s,
                y_le: c.y_le * s,
                z_le: c.z_le * s,
                y_te: c.y_te * s,
                z_te: c.z_te * s,
                theta: c.theta,
            })
            .collect();
        let l = self.layout;
        let layout = BladeLayout {
            r_hub: l.r_hub * s,
            x_nodus: l.x_nodus * s,
            nodus_length: l.nodus_length * s,
            tip_radius: l.tip_radius * s,
            n_blades: l.n_blades,
        };
        PropellerGeometry::new(sections, layout)
    }
}
