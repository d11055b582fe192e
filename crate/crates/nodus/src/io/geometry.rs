//! Planform table `x,y_le,z_le,y_te,z_te,theta_deg` and representative
//! section `u,y,z,t`, all lengths in metres.

use std::path::Path;

use nodus_core::geometry::{AirfoilSection, CamberPoint};
use serde::{Deserialize, Serialize};

use super::{read_csv, write_csv};
use crate::error::Result;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
struct SectionRow {
    x: f64,
    y_le: f64,
    z_le: f64,
    y_te: f64,
    z_te: f64,
    theta_deg: f64,
}

pub fn read_sections(path: &Path) -> Result<Vec<AirfoilSection>> {
    let rows: Vec<SectionRow> = read_csv(path)?;
    Ok(rows
        .into_iter()
        .map(|r| AirfoilSection {
            x: r.x,
            y_le: r.y_le,
            z_le: r.z_le,
            y_te: r.y_te,
            z_te: r.z_te,
            theta: r.theta_deg.to_radians(),
        })
        .collect())
}

pub fn write_sections(path: &Path, sections: &[AirfoilSection]) -> Result<()> {
    let rows = sections.iter().map(|s| SectionRow {
        x: s.x,
        y_le: s.y_le,
        z_le: s.z_le,
        y_te: s.y_te,
        z_te: s.z_te,
        theta_deg: s.theta.to_degrees(),
    });
    write_csv(path, rows)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
struct CamberRow {
    u: f64,
    y: f64,
    z: f64,
    t: f64,
}

pub fn read_camber(path: &Path) -> Result<Vec<CamberPoint>> {
    let rows: Vec<CamberRow> = read_csv(path)?;
    Ok(rows.into_iter().map(|r| CamberPoint { u: r.u, y: r.y, z: r.z, t: r.t }).collect())
}

pub fn write_camber(path: &Path, camber: &[CamberPoint]) -> Result<()> {
    write_csv(path, camber.iter().map(|p| CamberRow { u: p.u, y: p.y, z: p.z, t: p.t }))
}
