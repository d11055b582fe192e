//! Coefficient table `theta_deg,c_n,c_t,c_l,c_d`. Rows must already be
//! sorted by pitch.

use std::path::Path;

use nodus_core::aero::{CoefficientTable, Coefficients, TableRow};
use serde::{Deserialize, Serialize};

use super::{read_csv, write_csv};
use crate::error::{CliError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
struct Row {
    theta_deg: f64,
    c_n: f64,
    c_t: f64,
    c_l: f64,
    c_d: f64,
}

pub fn read_table(path: &Path) -> Result<CoefficientTable> {
    let rows: Vec<Row> = read_csv(path)?;
    let rows = rows
        .into_iter()
        .map(|r| TableRow {
            theta: r.theta_deg.to_radians(),
            coeffs: Coefficients { c_n: r.c_n, c_t: r.c_t, c_l: r.c_l, c_d: r.c_d },
        })
        .collect();
    CoefficientTable::new(rows).map_err(|e| CliError::parse(path, e))
}

pub fn write_table(path: &Path, table: &CoefficientTable) -> Result<()> {
    write_csv(
        path,
        table.rows().iter().map(|r| Row {
            theta_deg: r.theta.to_degrees(),
            c_n: r.coeffs.c_n,
            c_t: r.coeffs.c_t,
            c_l: r.coeffs.c_l,
            c_d: r.coeffs.c_d,
        }),
    )
}
