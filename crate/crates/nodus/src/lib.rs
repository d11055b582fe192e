//! File formats, parallel sweeps and the `nodus` command line on top of
//! [`nodus_core`].

// `!(x > 0.0)` also rejects NaN
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod error;
pub mod io;
pub mod parallel;

pub use error::{CliError, Result};
