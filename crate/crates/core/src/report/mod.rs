//! Report-producing commands behind the `epi` binary.
//!
//! Every command returns a [`Report`]: a JSON record for `--out` plus a
//! short human summary. Inputs are file paths; `@name` selects a shipped
//! fixture instead (an epigroup, lattice or chain file, depending on the
//! command).

mod commands;
mod scan;

use std::collections::BTreeMap;
use std::path::Path;

use serde::Serialize;
use sha2::{Digest, Sha256};
use thiserror::Error;

pub use commands::{cmd_check, cmd_inspect, cmd_lattice, cmd_verify, LatticeSource};
pub use scan::{cmd_scan, ScanOptions, DEFAULT_SEED, SL_SPOT_CHECKS};

/// Input or usage problem; maps to exit status 2.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{input}: {message}")]
pub struct CliError {
    pub input: String,
    pub message: String,
}

impl CliError {
    pub fn new(input: impl Into<String>, message: impl ToString) -> Self {
        CliError { input: input.into(), message: message.to_string() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InputDigest {
    pub input: String,
    pub sha256: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    /// Settings that influence the results. Worker counts are left out.
    pub settings: BTreeMap<String, String>,
    pub inputs: Vec<InputDigest>,
    pub passed: bool,
    pub results: serde_json::Value,
    pub witnesses: Vec<String>,
    pub timing_ms: u64,
    #[serde(skip)]
    pub summary: Vec<String>,
}

impl Report {
    fn new(command: &str) -> Self {
        Report {
            command: command.to_owned(),
            settings: BTreeMap::new(),
            inputs: Vec::new(),
            passed: true,
            results: serde_json::Value::Null,
            witnesses: Vec::new(),
            timing_ms: 0,
            summary: Vec::new(),
        }
    }

    pub fn exit_code(&self) -> u8 {
        if self.passed {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    /// JSON without the timing field, for comparing runs.
    pub fn stable_json(&self) -> String {
        let mut v = serde_json::to_value(self).expect("report serializes");
        v.as_object_mut().unwrap().remove("timing_ms");
        serde_json::to_string_pretty(&v).unwrap()
    }

    pub fn write_json(&self, path: &Path) -> Result<(), CliError> {
        std::fs::write(path, self.to_json()).map_err(|e| CliError::new(path.display().to_string(), e))
    }
}

pub(crate) fn digest(input: &str, text: &str) -> InputDigest {
    let hash = Sha256::digest(text.as_bytes());
    let sha256 = hash.iter().map(|b| format!("{b:02x}")).collect();
    InputDigest { input: input.to_owned(), sha256 }
}

/// Reads `spec` from disk, or asks `fixture` for it when it starts with `@`.
pub(crate) fn load(spec: &str, fixture: impl Fn(&str) -> Option<String>) -> Result<(String, InputDigest), CliError> {
    let text = match spec.strip_prefix('@') {
        Some(name) => fixture(name).ok_or_else(|| CliError::new(spec, "no such fixture"))?,
        None => std::fs::read_to_string(spec).map_err(|e| CliError::new(spec, e))?,
    };
    let d = digest(spec, &text);
    Ok((text, d))
}

pub(crate) fn elapsed_ms(start: std::time::Instant) -> u64 {
    start.elapsed().as_millis() as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digest_is_sha256_hex() {
        let d = digest("x", "abc");
        assert_eq!(d.sha256, "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    }

    #[test]
    fn stable_json_drops_timing() {
        let mut a = Report::new("t");
        let mut b = a.clone();
        a.timing_ms = 1;
        b.timing_ms = 2;
        assert_ne!(a.to_json(), b.to_json());
        assert_eq!(a.stable_json(), b.stable_json());
        assert!(!a.to_json().contains("summary"));
    }

    #[test]
    fn missing_inputs() {
        let e = load("/nonexistent/file", |_| None).unwrap_err();
        assert_eq!(e.input, "/nonexistent/file");
        assert_eq!(load("@nope", |_| None).unwrap_err().message, "no such fixture");
    }
}
