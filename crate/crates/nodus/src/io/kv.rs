//! `key = value` files with `#` comments.

use std::collections::BTreeMap;
use std::path::Path;
use std::str::FromStr;

use crate::error::{CliError, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct KeyValues {
    path: std::path::PathBuf,
    map: BTreeMap<String, String>,
}

impl KeyValues {
    pub fn parse(path: &Path, text: &str) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| CliError::parse(path, format!("line {}: expected `key = value`", n + 1)))?;
            let k = k.trim();
            if map.insert(k.to_string(), v.trim().to_string()).is_some() {
                return Err(CliError::parse(path, format!("line {}: duplicate key `{k}`", n + 1)));
            }
        }
        Ok(KeyValues { path: path.to_path_buf(), map })
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        Self::parse(path, &text)
    }

    pub fn get<T: FromStr>(&self, key: &str) -> Result<T> {
        let v = self.map.get(key).ok_or_else(|| CliError::parse(&self.path, format!("missing key `{key}`")))?;
        v.parse().map_err(|_| CliError::parse(&self.path, format!("key `{key}`: cannot parse `{v}`")))
    }

    /// Fails on keys outside `known`, catching typos.
    pub fn only(&self, known: &[&str]) -> Result<()> {
        match self.map.keys().find(|k| !known.contains(&k.as_str())) {
            Some(k) => Err(CliError::parse(&self.path, format!("unknown key `{k}`"))),
            None => Ok(()),
        }
    }
}
