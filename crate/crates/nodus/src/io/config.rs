//! Top-level run configuration. Data-file paths are relative to the config
//! file's directory.

use std::path::{Path, PathBuf};

use nodus_core::aero::{CoefficientModel, ParametricPolar, SolverOptions};
use nodus_core::geometry::{BladeLayout, FitConfig};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub geometry_csv: PathBuf,
    pub section_csv: PathBuf,
    pub material: PathBuf,
    pub layout: LayoutConfig,
    #[serde(default)]
    pub coefficients: CoefficientConfig,
    #[serde(default = "default_rho")]
    pub rho_kg_m3: f64,
    #[serde(default)]
    pub fit: Option<FitSection>,
    #[serde(default)]
    pub solver: SolverSection,
    #[serde(default)]
    pub sweep_rpm: GridConfig,
    #[serde(skip)]
    base: PathBuf,
}

fn default_rho() -> f64 {
    1.225
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LayoutConfig {
    pub r_hub_m: f64,
    pub x_nodus_m: f64,
    pub nodus_length_m: f64,
    pub tip_radius_m: f64,
    pub n_blades: u32,
}

impl From<LayoutConfig> for BladeLayout {
    fn from(l: LayoutConfig) -> Self {
        BladeLayout {
            r_hub: l.r_hub_m,
            x_nodus: l.x_nodus_m,
            nodus_length: l.nodus_length_m,
            tip_radius: l.tip_radius_m,
            n_blades: l.n_blades,
        }
    }
}

impl From<BladeLayout> for LayoutConfig {
    fn from(l: BladeLayout) -> Self {
        LayoutConfig {
            r_hub_m: l.r_hub,
            x_nodus_m: l.x_nodus,
            nodus_length_m: l.nodus_length,
            tip_radius_m: l.tip_radius,
            n_blades: l.n_blades,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum CoefficientConfig {
    Parametric { c_l0: f64, c_l_alpha: f64, c_d0: f64, k_induced: f64 },
    TableCsv(PathBuf),
}

impl Default for CoefficientConfig {
    fn default() -> Self {
        let p = ParametricPolar::default();
        CoefficientConfig::Parametric { c_l0: p.c_l0, c_l_alpha: p.c_l_alpha, c_d0: p.c_d0, k_induced: p.k_induced }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FitSection {
    pub breakpoints_m: Vec<f64>,
    pub orders: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SolverSection {
    pub max_iters: usize,
    pub tol_n: f64,
    pub n_quad: usize,
    pub relaxation: f64,
    pub adaptive: bool,
    pub max_step_rad: f64,
}

impl Default for SolverSection {
    fn default() -> Self {
        let o = SolverOptions::default();
        SolverSection {
            max_iters: o.max_iters,
            tol_n: o.tol,
            n_quad: o.n_quad,
            relaxation: o.relaxation,
            adaptive: o.adaptive,
            max_step_rad: o.max_step_rad,
        }
    }
}

impl From<SolverSection> for SolverOptions {
    fn from(s: SolverSection) -> Self {
        SolverOptions {
            max_iters: s.max_iters,
            tol: s.tol_n,
            n_quad: s.n_quad,
            relaxation: s.relaxation,
            adaptive: s.adaptive,
            max_step_rad: s.max_step_rad,
        }
    }
}

/// Inclusive rpm grid `start, start + step, …` up to `stop`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridConfig {
    pub start: f64,
    pub stop: f64,
    pub step: f64,
}

impl Default for GridConfig {
    fn default() -> Self {
        GridConfig { start: 500.0, stop: 12000.0, step: 100.0 }
    }
}

impl GridConfig {
    pub fn rpm_values(&self) -> std::result::Result<Vec<f64>, String> {
        let GridConfig { start, stop, step } = *self;
        if !(start >= 0.0 && stop > start && step > 0.0 && start.is_finite() && stop.is_finite()) {
            return Err(format!("invalid rpm grid {start}..{stop} step {step}"));
        }
        let n = ((stop - start) / step + 1e-9).floor() as usize + 1;
        if n < 3 {
            return Err("rpm grid needs at least three points".into());
        }
        // multiply rather than accumulate so the grid is reproducible exactly
        Ok((0..n).map(|k| start + step * k as f64).collect())
    }
}

impl RunConfig {
    pub fn read(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        let mut cfg: RunConfig = serde_json::from_str(&text).map_err(|e| CliError::parse(path, e))?;
        cfg.base = path.parent().map(Path::to_path_buf).unwrap_or_default();
        Ok(cfg)
    }

    /// Resolves a path from the config against the config's directory.
    pub fn resolve(&self, p: &Path) -> PathBuf {
        if p.is_absolute() {
            p.to_path_buf()
        } else {
            self.base.join(p)
        }
    }

    pub fn fit_config(&self, layout: &BladeLayout) -> FitConfig {
        match &self.fit {
            Some(f) => FitConfig { breakpoints: f.breakpoints_m.clone(), orders: f.orders.clone() },
            None => FitConfig { breakpoints: vec![layout.r_nodus()], orders: vec![2, 4] },
        }
    }

    pub fn coefficient_model(&self) -> Result<CoefficientModel> {
        match &self.coefficients {
            CoefficientConfig::Parametric { c_l0, c_l_alpha, c_d0, k_induced } => {
                let p = ParametricPolar { c_l0: *c_l0, c_l_alpha: *c_l_alpha, c_d0: *c_d0, k_induced: *k_induced };
                CoefficientModel::parametric(p).map_err(CliError::model)
            }
            CoefficientConfig::TableCsv(p) => {
                Ok(CoefficientModel::Table(super::coefficients::read_table(&self.resolve(p))?))
            }
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serializes") + "\n"
    }

    pub fn with_base(mut self, base: &Path) -> Self {
        self.base = base.to_path_buf();
        self
    }
}
