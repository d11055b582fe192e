//! Composite description as key-value pairs in SI units.

use std::path::Path;

use nodus_core::material::CompositeSpec;

use super::kv::KeyValues;
use crate::error::Result;

const KEYS: [&str; 6] = ["e_matrix_pa", "g_matrix_pa", "e_fiber_pa", "g_fiber_pa", "n_fibers", "d_fiber_m"];

/// The section area is not part of the file; it comes from the representative
/// section.
pub fn read_composite(path: &Path, area: f64) -> Result<CompositeSpec> {
    let kv = KeyValues::read(path)?;
    kv.only(&KEYS)?;
    Ok(CompositeSpec {
        e_matrix: kv.get("e_matrix_pa")?,
        g_matrix: kv.get("g_matrix_pa")?,
        e_fiber: kv.get("e_fiber_pa")?,
        g_fiber: kv.get("g_fiber_pa")?,
        n_fibers: kv.get("n_fibers")?,
        d_fiber: kv.get("d_fiber_m")?,
        area,
    })
}

pub fn format_composite(spec: &CompositeSpec) -> String {
    format!(
        "e_matrix_pa = {}\ng_matrix_pa = {}\ne_fiber_pa = {}\ng_fiber_pa = {}\nn_fibers = {}\nd_fiber_m = {}\n",
        spec.e_matrix, spec.g_matrix, spec.e_fiber, spec.g_fiber, spec.n_fibers, spec.d_fiber
    )
}
