//! Settings files: one `key = value` pair per line, `#` starts a comment.
//! A key may repeat; list-valued settings collect every occurrence.
//!
//! ```text
//! # shared run settings
//! seed = 7
//! samples = 200
//! n = 100,200,400
//! ensemble = wigner
//! beta = x=0
//! ```

use std::collections::BTreeMap;
use std::str::FromStr;

use crate::error::CliError;

/// Recognized keys.
pub const KEYS: &[&str] = &[
    "seed", "samples", "n", "order", "threads", "ensemble", "regime", "beta", "labels",
];

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Config {
    values: BTreeMap<String, Vec<String>>,
}

impl Config {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut values: BTreeMap<String, Vec<String>> = BTreeMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                CliError::input(format!("config line {}: expected `key = value`", i + 1))
            })?;
            let key = key.trim();
            if !KEYS.contains(&key) {
                return Err(CliError::input(format!(
                    "config line {}: unknown key `{key}`",
                    i + 1
                )));
            }
            values
                .entry(key.to_string())
                .or_default()
                .push(value.trim().to_string());
        }
        Ok(Config { values })
    }

    /// The last value given for `key`.
    pub fn scalar<T: FromStr>(&self, key: &str) -> Result<Option<T>, CliError> {
        match self.values.get(key).and_then(|v| v.last()) {
            None => Ok(None),
            Some(s) => s
                .parse()
                .map(Some)
                .map_err(|_| CliError::input(format!("config key `{key}`: bad value `{s}`"))),
        }
    }

    pub fn raw(&self, key: &str) -> Option<&str> {
        self.values
            .get(key)
            .and_then(|v| v.last())
            .map(String::as_str)
    }

    pub fn list(&self, key: &str) -> Vec<String> {
        self.values.get(key).cloned().unwrap_or_default()
    }
}

/// `flag`, else the config value, else `default`.
pub fn pick<T: FromStr>(
    flag: Option<T>,
    config: &Config,
    key: &str,
    default: T,
) -> Result<T, CliError> {
    Ok(match flag {
        Some(v) => v,
        None => config.scalar(key)?.unwrap_or(default),
    })
}

/// Repeated flags, or the config entries when no flag was given.
pub fn pick_list(flags: &[String], config: &Config, key: &str) -> Vec<String> {
    if flags.is_empty() {
        config.list(key)
    } else {
        flags.to_vec()
    }
}

/// Thread count: flag, config, then `TRAFFIC_THREADS`. `None` leaves the
/// pool size to rayon.
pub fn threads(
    flag: Option<usize>,
    config: &Config,
    env: Option<String>,
) -> Result<Option<usize>, CliError> {
    if flag.is_some() {
        return Ok(flag);
    }
    if let Some(t) = config.scalar("threads")? {
        return Ok(Some(t));
    }
    match env {
        None => Ok(None),
        Some(s) => s
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| CliError::input(format!("TRAFFIC_THREADS: bad value `{s}`"))),
    }
}
