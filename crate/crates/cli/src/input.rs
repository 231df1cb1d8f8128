use std::io::Read;

use anyhow::{Context, Result};
use ospkit_core::Partition;
use serde::de::DeserializeOwned;

/// Reads `--input`: inline JSON if it looks like JSON, standard input for
/// `-` or when absent, a file path otherwise.
pub fn read_raw(input: Option<&str>) -> Result<String> {
    match input {
        None | Some("-") => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).context("reading standard input")?;
            Ok(s)
        }
        Some(s) if s.trim_start().starts_with(['{', '[', '"']) => Ok(s.to_string()),
        Some(path) => std::fs::read_to_string(path).with_context(|| format!("reading {path}")),
    }
}

pub fn parse<T: DeserializeOwned>(input: Option<&str>, what: &str) -> Result<T> {
    let raw = read_raw(input)?;
    serde_json::from_str(&raw).with_context(|| format!("malformed {what} JSON"))
}

/// `"2,1"`, `"[2,1]"` or `""` for the empty shape.
pub fn parse_shape(s: &str) -> std::result::Result<Partition, String> {
    let inner = s.trim().trim_start_matches('[').trim_end_matches(']');
    let parts = inner
        .split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| p.parse::<usize>().map_err(|e| format!("bad part {p:?}: {e}")))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    Partition::new(parts).map_err(|e| e.to_string())
}
