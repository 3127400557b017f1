//! Enumeration bounds, loadable from a simple `key=value` file.

use std::path::Path;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Config {
    /// Largest rank for full `IS_n` enumeration and sweeps.
    pub max_n: usize,
    /// Largest inner rank for wreath enumeration.
    pub max_wreath_m: usize,
    /// Largest outer rank for full wreath sweeps.
    pub max_wreath_n: usize,
    /// Largest outer rank allowed in spot (non-sweep) enumeration.
    pub max_wreath_n_spot: usize,
    /// Largest semigroup size for isomorphism search.
    pub max_iso: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            max_n: 4,
            max_wreath_m: 2,
            max_wreath_n: 2,
            max_wreath_n_spot: 3,
            max_iso: 64,
        }
    }
}

/// Environment variable naming an override config file.
pub const CONFIG_ENV: &str = "IW_CONFIG";

impl Config {
    pub fn parse(text: &str) -> Result<Self> {
        let mut cfg = Config::default();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                Error::Parse(format!("config line {}: expected key=value", lineno + 1))
            })?;
            let value: usize = value.trim().parse().map_err(|_| {
                Error::Parse(format!("config line {}: bad number '{}'", lineno + 1, value))
            })?;
            match key.trim() {
                "max_n" => cfg.max_n = value,
                "max_wreath_m" => cfg.max_wreath_m = value,
                "max_wreath_n" => cfg.max_wreath_n = value,
                "max_wreath_n_spot" => cfg.max_wreath_n_spot = value,
                "max_iso" => cfg.max_iso = value,
                other => {
                    return Err(Error::Parse(format!(
                        "config line {}: unknown key '{}'",
                        lineno + 1,
                        other
                    )))
                }
            }
        }
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    /// Resolution order: explicit path, then `IW_CONFIG`, then defaults.
    pub fn resolve(explicit: Option<&Path>) -> Result<Self> {
        if let Some(p) = explicit {
            return Self::load(p);
        }
        if let Ok(p) = std::env::var(CONFIG_ENV) {
            return Self::load(Path::new(&p));
        }
        Ok(Config::default())
    }
}
