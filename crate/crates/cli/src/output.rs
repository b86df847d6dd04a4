use std::io::Write;
use std::path::{Path, PathBuf};

use num_rational::Ratio;
use serde::Serialize;
use serde_json::{Map, Value};
use sha2::{Digest, Sha256};

use crate::error::{CliError, CliResult};

/// Data produced by a command. `ok == false` means a check failed (exit 1);
/// the data is still printed.
pub struct Outcome {
    pub data: String,
    pub ok: bool,
}

impl Outcome {
    pub fn ok(data: String) -> Self {
        Self { data, ok: true }
    }

    pub fn failed(data: String) -> Self {
        Self { data, ok: false }
    }
}

pub fn read(path: &Path) -> CliResult<Vec<u8>> {
    std::fs::read(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

/// Writes through a temporary file in the same directory and renames it
/// into place, so a failed write leaves no partial file.
pub fn write_atomic(path: &Path, data: &str) -> CliResult<()> {
    let io = |source| CliError::Io { path: path.to_path_buf(), source };
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p.to_path_buf(),
        _ => PathBuf::from("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(&dir).map_err(io)?;
    tmp.write_all(data.as_bytes()).map_err(io)?;
    tmp.as_file().sync_all().map_err(io)?;
    tmp.persist(path).map_err(|e| io(e.error))?;
    Ok(())
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// Twelve digits after the decimal point.
pub fn fixed(x: f64) -> String {
    let s = format!("{x:.12}");
    if s.starts_with('-') && s[1..].chars().all(|c| c == '0' || c == '.') {
        s[1..].to_string()
    } else {
        s
    }
}

pub fn scientific(x: f64) -> String {
    format!("{x:.12e}")
}

/// Best rational approximation with denominator at most `max_den`, from
/// the continued-fraction convergents of `x`.
pub fn rational_approximation(x: f64, max_den: i64) -> Option<Ratio<i64>> {
    if !x.is_finite() || x.abs() > 1e12 {
        return None;
    }
    let (mut h0, mut h1) = (0i64, 1i64);
    let (mut k0, mut k1) = (1i64, 0i64);
    let mut rest = x;
    let mut best = None;
    for _ in 0..64 {
        let a = rest.floor();
        let ai = a as i64;
        let h2 = ai.checked_mul(h1)?.checked_add(h0)?;
        let k2 = ai.checked_mul(k1)?.checked_add(k0)?;
        if k2 > max_den {
            break;
        }
        best = Some(Ratio::new(h2, k2));
        (h0, h1, k0, k1) = (h1, h2, k1, k2);
        let frac = rest - a;
        if frac.abs() < 1e-15 {
            break;
        }
        rest = 1.0 / frac;
    }
    best
}

/// A fraction `p/q` (`q <= 1000`) within `1e-9` of `x`, if there is one.
pub fn certified_fraction(x: f64) -> Option<Ratio<i64>> {
    rational_approximation(x, 1000).filter(|r| (*r.numer() as f64 / *r.denom() as f64 - x).abs() <= 1e-9)
}

/// `"2/3 ≈ 0.666666666667"` when a small fraction matches, the integer for
/// integral values, and the plain decimal otherwise.
pub fn probability(x: f64) -> String {
    match certified_fraction(x) {
        Some(r) if r.is_integer() => r.numer().to_string(),
        Some(r) => format!("{}/{} ≈ {}", r.numer(), r.denom(), fixed(x)),
        None => fixed(x),
    }
}

pub fn quoted_word(word: &str) -> String {
    format!("{word:?}")
}

#[derive(Debug, Serialize)]
pub struct Input {
    pub name: String,
    pub sha256: String,
}

impl Input {
    pub fn file(path: &Path, bytes: &[u8]) -> Self {
        Self { name: path.display().to_string(), sha256: sha256_hex(bytes) }
    }

    /// Built-in machine, fingerprinted by its serialized form.
    pub fn generated(name: &str, serialized: &str) -> Self {
        Self { name: name.to_string(), sha256: sha256_hex(serialized.as_bytes()) }
    }
}

/// Machine-readable result.
#[derive(Debug, Serialize)]
pub struct Report {
    pub tool: &'static str,
    pub version: &'static str,
    pub kind: &'static str,
    pub inputs: Vec<Input>,
    pub parameters: Map<String, Value>,
    pub payload: Value,
}

impl Report {
    pub fn new(kind: &'static str, inputs: Vec<Input>, parameters: Value, payload: Value) -> Self {
        let parameters = match parameters {
            Value::Object(map) => map,
            Value::Null => Map::new(),
            other => Map::from_iter([("value".to_string(), other)]),
        };
        Self { tool: "aec", version: env!("CARGO_PKG_VERSION"), kind, inputs, parameters, payload }
    }

    pub fn render(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}
