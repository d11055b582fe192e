//! Characteristic-table arithmetic: force per thickness, normalization
//! against a reference configuration, and mean rows.

use alloc::string::String;
use alloc::vec::Vec;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum MetricsError {
    #[error("blade thickness must be positive, got {0} mm")]
    Thickness(f64),
    #[error("reference configuration {0:?} not found")]
    UnknownReference(String),
    #[error("reference value of {0} is zero")]
    ZeroReference(&'static str),
    #[error("no configurations besides the reference")]
    Empty,
    #[error("configuration {config:?}: {metric} must be finite and non-negative")]
    InvalidValue { config: String, metric: &'static str },
}

/// Measured characteristics of one propeller configuration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Metric {
    Thrust,
    ThrustDev,
    CollisionForce,
    RecoveryTime,
    EpsLod,
    NoiseDb,
}

impl Metric {
    pub const ALL: [Metric; 6] = [
        Metric::Thrust,
        Metric::ThrustDev,
        Metric::CollisionForce,
        Metric::RecoveryTime,
        Metric::EpsLod,
        Metric::NoiseDb,
    ];

    /// Column name with unit suffix.
    pub fn key(self) -> &'static str {
        match self {
            Metric::Thrust => "thrust_n",
            Metric::ThrustDev => "thrust_dev_n",
            Metric::CollisionForce => "collision_force_n",
            Metric::RecoveryTime => "recovery_time_s",
            Metric::EpsLod => "eps_lod",
            Metric::NoiseDb => "noise_db",
        }
    }

    pub fn from_key(key: &str) -> Option<Metric> {
        Metric::ALL.into_iter().find(|m| m.key() == key)
    }

    fn index(self) -> usize {
        self as usize
    }
}

/// One table row. Absent metrics (e.g. recovery time of a rigid propeller)
/// are `None`. Normalized rows use the same type with ratios as values.
#[derive(Debug, Clone, PartialEq)]
pub struct ConfigCharacteristics {
    pub name: String,
    pub values: [Option<f64>; 6],
}

pub type NormalizedCharacteristics = ConfigCharacteristics;

impl ConfigCharacteristics {
    pub fn new(name: impl Into<String>) -> Self {
        ConfigCharacteristics { name: name.into(), values: [None; 6] }
    }

    pub fn with(mut self, m: Metric, v: f64) -> Self {
        self.values[m.index()] = Some(v);
        self
    }

    pub fn get(&self, m: Metric) -> Option<f64> {
        self.values[m.index()]
    }

    pub fn set(&mut self, m: Metric, v: Option<f64>) {
        self.values[m.index()] = v;
    }

    pub fn validate(&self) -> Result<(), MetricsError> {
        for m in Metric::ALL {
            if let Some(v) = self.get(m) {
                if !(v.is_finite() && v >= 0.0) {
                    return Err(MetricsError::InvalidValue { config: self.name.clone(), metric: m.key() });
                }
            }
        }
        Ok(())
    }
}

/// Collision force divided by blade thickness (N/mm).
pub fn force_per_thickness(force_n: f64, thickness_mm: f64) -> Result<f64, MetricsError> {
    if !(thickness_mm > 0.0) {
        return Err(MetricsError::Thickness(thickness_mm));
    }
    Ok(force_n / thickness_mm)
}

/// Divides every metric by the reference row's value.
pub fn normalize(
    table: &[ConfigCharacteristics],
    reference: &str,
) -> Result<Vec<NormalizedCharacteristics>, MetricsError> {
    for row in table {
        row.validate()?;
    }
    let r =
        table.iter().find(|c| c.name == reference).ok_or_else(|| MetricsError::UnknownReference(reference.into()))?;
    let mut out = Vec::with_capacity(table.len());
    for row in table {
        let mut n = ConfigCharacteristics::new(row.name.clone());
        for m in Metric::ALL {
            let v = match (row.get(m), r.get(m)) {
                (Some(v), Some(rv)) => {
                    if rv == 0.0 {
                        return Err(MetricsError::ZeroReference(m.key()));
                    }
                    Some(v / rv)
                }
                _ => None,
            };
            n.set(m, v);
        }
        out.push(n);
    }
    Ok(out)
}

/// Per-metric mean over all rows except the reference, named `"Mean"`.
pub fn summarize(
    table: &[ConfigCharacteristics],
    reference: Option<&str>,
) -> Result<ConfigCharacteristics, MetricsError> {
    let rows: Vec<&ConfigCharacteristics> = table.iter().filter(|c| Some(c.name.as_str()) != reference).collect();
    if rows.is_empty() {
        return Err(MetricsError::Empty);
    }
    let mut mean = ConfigCharacteristics::new("Mean");
    for m in Metric::ALL {
        let present: Vec<f64> = rows.iter().filter_map(|c| c.get(m)).collect();
        if !present.is_empty() {
            mean.set(m, Some(present.iter().sum::<f64>() / present.len() as f64));
        }
    }
    Ok(mean)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn thickness_domain() {
        assert_eq!(force_per_thickness(0.0, 3.0).unwrap(), 0.0);
        assert!(force_per_thickness(10.0, 0.0).is_err());
        assert!(force_per_thickness(10.0, -1.0).is_err());
    }

    #[test]
    fn reference_row_is_one() {
        let t = vec![
            ConfigCharacteristics::new("a").with(Metric::Thrust, 2.0).with(Metric::NoiseDb, 50.0),
            ConfigCharacteristics::new("b").with(Metric::Thrust, 1.0).with(Metric::RecoveryTime, 0.4),
        ];
        let n = normalize(&t, "a").unwrap();
        assert_eq!(n[0].get(Metric::Thrust), Some(1.0));
        assert_eq!(n[0].get(Metric::NoiseDb), Some(1.0));
        assert_eq!(n[1].get(Metric::Thrust), Some(0.5));
        assert_eq!(n[1].get(Metric::RecoveryTime), None);
        assert!(matches!(normalize(&t, "c"), Err(MetricsError::UnknownReference(_))));
    }

    #[test]
    fn zero_reference_named() {
        let t = vec![
            ConfigCharacteristics::new("a").with(Metric::CollisionForce, 0.0),
            ConfigCharacteristics::new("b").with(Metric::CollisionForce, 1.0),
        ];
        assert_eq!(normalize(&t, "a"), Err(MetricsError::ZeroReference("collision_force_n")));
    }

    #[test]
    fn mean_excludes_reference() {
        let t = vec![
            ConfigCharacteristics::new("0").with(Metric::Thrust, 10.0),
            ConfigCharacteristics::new("1").with(Metric::Thrust, 1.0),
            ConfigCharacteristics::new("2").with(Metric::Thrust, 2.0).with(Metric::RecoveryTime, 0.5),
        ];
        let m = summarize(&t, Some("0")).unwrap();
        assert_eq!(m.get(Metric::Thrust), Some(1.5));
        assert_eq!(m.get(Metric::RecoveryTime), Some(0.5));
        assert_eq!(summarize(&t[..1], Some("0")), Err(MetricsError::Empty));
    }
}
