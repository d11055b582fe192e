use thiserror::Error;

use crate::aero::AeroError;
use crate::blurvision::VisionError;
use crate::geometry::GeometryError;
use crate::linalg::LinalgError;
use crate::material::MaterialError;
use crate::metrics::MetricsError;
use crate::reaction::ReactionError;

/// Any error produced by the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Material(#[from] MaterialError),
    #[error(transparent)]
    Aero(#[from] AeroError),
    #[error(transparent)]
    Vision(#[from] VisionError),
    #[error(transparent)]
    Metrics(#[from] MetricsError),
    #[error(transparent)]
    Reaction(#[from] ReactionError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}
