//! Collision event and controller gains as JSON.

use std::path::Path;

use nodus_core::reaction::{CollisionEvent, Gains};
use serde::{Deserialize, Serialize};

use super::read_json;
use crate::error::Result;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EventFile {
    pub x_c_m: [f64; 3],
    pub v_pre_m_s: [f64; 3],
    #[serde(default)]
    pub t_c_s: f64,
    #[serde(default = "default_outage")]
    pub outage_s: f64,
    pub d_r_m: f64,
}

fn default_outage() -> f64 {
    0.46
}

impl EventFile {
    pub fn event(&self) -> CollisionEvent {
        CollisionEvent { x_c: self.x_c_m, v_pre: self.v_pre_m_s, t_c: self.t_c_s, outage: self.outage_s }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GainsFile {
    pub kp_pos: f64,
    pub kp_vel: f64,
    pub ki_vel: f64,
    pub kd_vel: f64,
}

impl From<GainsFile> for Gains {
    fn from(g: GainsFile) -> Self {
        Gains { kp_pos: g.kp_pos, kp_vel: g.kp_vel, ki_vel: g.ki_vel, kd_vel: g.kd_vel }
    }
}

impl From<Gains> for GainsFile {
    fn from(g: Gains) -> Self {
        GainsFile { kp_pos: g.kp_pos, kp_vel: g.kp_vel, ki_vel: g.ki_vel, kd_vel: g.kd_vel }
    }
}

pub fn read_event(path: &Path) -> Result<EventFile> {
    read_json(path)
}

pub fn read_gains(path: &Path) -> Result<Gains> {
    read_json::<GainsFile>(path).map(Gains::from)
}
