//! Run configuration: command-line flags merged over an optional plain-text
//! `key = value` config file. Flags win; unknown file keys are rejected.

use std::collections::HashMap;
use std::path::{Path, PathBuf};

use af_core::operators::SchemeVariant;
use af_core::problems::ProblemId;
use af_core::time::RkScheme;

#[derive(Debug)]
pub struct ConfigError(pub String);

impl std::fmt::Display for ConfigError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for ConfigError {}

fn err<T>(msg: impl Into<String>) -> Result<T, ConfigError> {
    Err(ConfigError(msg.into()))
}

/// Key-value pairs from a config file, validated against a known-key list.
pub struct FileConfig {
    values: HashMap<String, String>,
}

impl FileConfig {
    pub fn empty() -> Self {
        FileConfig {
            values: HashMap::new(),
        }
    }

    pub fn load(path: &Path, known_keys: &[&str]) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| ConfigError(format!("cannot read config {}: {e}", path.display())))?;
        let mut values = HashMap::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return err(format!(
                    "config line {} is not `key = value`: {line:?}",
                    lineno + 1
                ));
            };
            let key = key.trim().to_string();
            if !known_keys.contains(&key.as_str()) {
                return err(format!("unknown config key {key:?} (line {})", lineno + 1));
            }
            values.insert(key, value.trim().to_string());
        }
        Ok(FileConfig { values })
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.values.get(key).map(|s| s.as_str())
    }
}

/// `flag.or(file value)` with parsing.
pub fn merge<T: std::str::FromStr>(
    flag: Option<T>,
    file: &FileConfig,
    key: &str,
) -> Result<Option<T>, ConfigError>
where
    T::Err: std::fmt::Display,
{
    if flag.is_some() {
        return Ok(flag);
    }
    match file.get(key) {
        None => Ok(None),
        Some(raw) => raw
            .parse::<T>()
            .map(Some)
            .map_err(|e| ConfigError(format!("config key {key:?}: {e}"))),
    }
}

pub fn parse_problem(name: &str, m: Option<u32>) -> Result<ProblemId, ConfigError> {
    let id = match name {
        "accuracy1d" => ProblemId::Accuracy1D,
        "accuracy2d" => ProblemId::Accuracy2D,
        "ring" => ProblemId::Ring,
        "barenblatt" => ProblemId::Barenblatt(m.unwrap_or(2)),
        "two-boxes-equal" => ProblemId::TwoBoxesEqual,
        "two-boxes-unequal" => ProblemId::TwoBoxesUnequal,
        "waiting-time" => ProblemId::WaitingTime,
        "two-hills" => ProblemId::TwoHills,
        other => {
            return err(format!(
                "unknown problem {other:?} (expected accuracy1d, accuracy2d, ring, barenblatt, \
                 two-boxes-equal, two-boxes-unequal, waiting-time, two-hills)"
            ))
        }
    };
    if m.is_some() && !matches!(id, ProblemId::Barenblatt(_)) {
        return err("--m only applies to the barenblatt problem");
    }
    Ok(id)
}

pub fn parse_variant(name: &str) -> Result<SchemeVariant, ConfigError> {
    match name {
        "central4" => Ok(SchemeVariant::Central4),
        "alternating4" => Ok(SchemeVariant::Alternating4),
        "central3" => Ok(SchemeVariant::Central3),
        "alternating3" => Ok(SchemeVariant::Alternating3),
        other => err(format!(
            "unknown variant {other:?} (expected central4, alternating4, central3, alternating3)"
        )),
    }
}

pub fn parse_rk(order: u32) -> Result<RkScheme, ConfigError> {
    match order {
        3 => Ok(RkScheme::SspRk3),
        4 => Ok(RkScheme::Rk4),
        other => err(format!("unsupported RK order {other} (expected 3 or 4)")),
    }
}

pub fn parse_on_off(value: &str) -> Result<bool, ConfigError> {
    match value {
        "on" | "true" | "1" => Ok(true),
        "off" | "false" | "0" => Ok(false),
        other => err(format!("expected on/off, got {other:?}")),
    }
}

/// Comma-separated list of numbers.
pub fn parse_list<T: std::str::FromStr>(raw: &str, what: &str) -> Result<Vec<T>, ConfigError>
where
    T::Err: std::fmt::Display,
{
    raw.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| {
            s.trim()
                .parse::<T>()
                .map_err(|e| ConfigError(format!("bad {what} entry {s:?}: {e}")))
        })
        .collect()
}

/// Rotation angles; accepts plain radians or `pi/12`-style fractions.
pub fn parse_thetas(raw: &str) -> Result<Vec<f64>, ConfigError> {
    raw.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| {
            let s = s.trim();
            if let Some(rest) = s.strip_prefix("pi/") {
                let denom: f64 = rest
                    .parse()
                    .map_err(|_| ConfigError(format!("bad angle {s:?}")))?;
                Ok(std::f64::consts::PI / denom)
            } else if s == "pi" {
                Ok(std::f64::consts::PI)
            } else if s == "0" {
                Ok(0.0)
            } else {
                s.parse::<f64>()
                    .map_err(|_| ConfigError(format!("bad angle {s:?}")))
            }
        })
        .collect()
}

/// Equally spaced CFL grid `0, step, 2 step, ..., <= max` for the region scan.
pub fn nu_grid(step: f64, max: f64) -> Vec<f64> {
    let mut out = Vec::new();
    let mut k = 0usize;
    loop {
        let v = k as f64 * step;
        if v > max + 1e-12 {
            return out;
        }
        out.push(v);
        k += 1;
    }
}

pub fn default_outdir() -> PathBuf {
    PathBuf::from("out")
}
