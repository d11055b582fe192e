//! Aeroelastic model of a propeller whose blades are joined to the hub by a
//! flexible composite hinge (the *nodus*).
//!
//! The crate is `no_std` (it needs `alloc`) and contains only the numerical
//! core; file formats, parallel sweeps and the command line live in the
//! `nodus` companion crate.
//!
//! Module map:
//!
//! * [`geometry`]: planform sections, piecewise least-squares fits of the
//!   leading/trailing edge and pitch functions, representative cross-section
//!   properties.
//! * [`material`]: fiber volume fraction and Chamis effective moduli.
//! * [`aero`]: rigid and deformed blade-element force integrals, nodus
//!   bending/twist kinematics, the coupled fixed-point solver and speed sweeps.
//! * [`blurvision`]: deformation angle estimation from motion-blurred frames.
//! * [`metrics`]: characteristic-table arithmetic and normalization.
//! * [`reaction`]: post-collision bounce setpoint and point-mass recovery.
//! * [`demo`]: synthetic blades, sections and materials used by tests and the
//!   shipped sample data.
#![no_std]
// `!(x > 0.0)` also rejects NaN
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod aero;
pub mod blurvision;
pub mod demo;
pub mod geometry;
pub mod linalg;
pub mod material;
pub mod metrics;
pub mod quadrature;
pub mod reaction;

mod error;

pub use error::Error;

/// Revolutions per minute to radians per second.
pub fn rpm_to_rad_s(rpm: f64) -> f64 {
    rpm * core::f64::consts::PI / 30.0
}

/// Radians per second to revolutions per minute.
pub fn rad_s_to_rpm(omega: f64) -> f64 {
    omega * 30.0 / core::f64::consts::PI
}

/// Euclidean remainder of `a / b` for `b > 0`, in `[0, b)`.
pub(crate) fn rem_euclid(a: f64, b: f64) -> f64 {
    let r = libm::fmod(a, b);
    if r < 0.0 {
        r + b
    } else {
        r
    }
}
