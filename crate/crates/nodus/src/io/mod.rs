//! File formats. CSV files carry a header row; JSON is pretty-printed with
//! a trailing newline.

pub mod coefficients;
pub mod config;
pub mod frames;
pub mod geometry;
pub mod kv;
pub mod material;
pub mod reaction;
pub mod results;

use std::fs::File;
use std::io::Write;
use std::path::Path;

use serde::de::DeserializeOwned;
use serde::Serialize;

use crate::error::{CliError, Result};

pub fn read_csv<T: DeserializeOwned>(path: &Path) -> Result<Vec<T>> {
    let file = File::open(path).map_err(|e| CliError::io(path, e))?;
    let mut rd = csv::ReaderBuilder::new().trim(csv::Trim::All).comment(Some(b'#')).from_reader(file);
    let mut rows = Vec::new();
    for (i, rec) in rd.deserialize().enumerate() {
        rows.push(rec.map_err(|e| CliError::parse(path, format!("row {}: {e}", i + 1)))?);
    }
    if rows.is_empty() {
        return Err(CliError::parse(path, "no data rows"));
    }
    Ok(rows)
}

pub fn write_csv<T: Serialize>(path: &Path, rows: impl IntoIterator<Item = T>) -> Result<()> {
    let mut buf = Vec::new();
    {
        let mut wr = csv::Writer::from_writer(&mut buf);
        for r in rows {
            wr.serialize(r).map_err(|e| CliError::parse(path, e))?;
        }
        wr.flush().map_err(|e| CliError::io(path, e))?;
    }
    write_bytes(path, &buf)
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value).map_err(|e| CliError::parse(path, e))?;
    text.push('\n');
    write_bytes(path, text.as_bytes())
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    serde_json::from_str(&text).map_err(|e| CliError::parse(path, e))
}

pub fn write_bytes(path: &Path, bytes: &[u8]) -> Result<()> {
    let mut f = File::create(path).map_err(|e| CliError::io(path, e))?;
    f.write_all(bytes).map_err(|e| CliError::io(path, e))
}
