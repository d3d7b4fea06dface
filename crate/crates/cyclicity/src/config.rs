//! Runtime configuration: caps, worker count, output format.
//!
//! Precedence is flags over environment over config file over defaults.
//! Environment keys mirror the config-file keys with a `CYCLICITY_` prefix:
//! `CYCLICITY_ORDER_CAP`, `CYCLICITY_PERM_CAP`, `CYCLICITY_ENUMERATION_CAP`,
//! `CYCLICITY_WORKERS`, `CYCLICITY_FORMAT`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Config {
    /// Maximum quotient-group order an oracle call may enumerate.
    pub order_cap: u64,
    /// Maximum size `d! * (d+1)` of the canonicalization search space;
    /// the default admits dimensions up to 9.
    pub perm_cap: u64,
    /// Maximum number of column subsets a census may enumerate.
    pub enumeration_cap: u64,
    /// Worker threads for censuses; 0 means all available.
    pub workers: usize,
    pub format: OutputFormat,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            order_cap: 10_000_000,
            perm_cap: 10_000_000,
            enumeration_cap: 10_000_000,
            workers: 0,
            format: OutputFormat::Text,
        }
    }
}

/// Subset of the config readable from a TOML file; missing keys keep their
/// previous values.
#[derive(Default, Deserialize)]
struct PartialConfig {
    order_cap: Option<u64>,
    perm_cap: Option<u64>,
    enumeration_cap: Option<u64>,
    workers: Option<usize>,
    format: Option<OutputFormat>,
}

impl Config {
    pub fn apply_file(&mut self, contents: &str) -> Result<()> {
        let partial: PartialConfig =
            toml::from_str(contents).map_err(|e| Error::Parse(format!("config file: {e}")))?;
        if let Some(v) = partial.order_cap {
            self.order_cap = v;
        }
        if let Some(v) = partial.perm_cap {
            self.perm_cap = v;
        }
        if let Some(v) = partial.enumeration_cap {
            self.enumeration_cap = v;
        }
        if let Some(v) = partial.workers {
            self.workers = v;
        }
        if let Some(v) = partial.format {
            self.format = v;
        }
        self.validate()
    }

    /// Apply environment overrides through a lookup function (injectable for
    /// tests; pass `|k| std::env::var(k).ok()` in production).
    pub fn apply_env<F>(&mut self, lookup: F) -> Result<()>
    where
        F: Fn(&str) -> Option<String>,
    {
        fn parse<T: std::str::FromStr>(key: &str, raw: &str) -> Result<T> {
            raw.parse().map_err(|_| Error::Parse(format!("invalid {key}: {raw:?}")))
        }
        if let Some(raw) = lookup("CYCLICITY_ORDER_CAP") {
            self.order_cap = parse("CYCLICITY_ORDER_CAP", &raw)?;
        }
        if let Some(raw) = lookup("CYCLICITY_PERM_CAP") {
            self.perm_cap = parse("CYCLICITY_PERM_CAP", &raw)?;
        }
        if let Some(raw) = lookup("CYCLICITY_ENUMERATION_CAP") {
            self.enumeration_cap = parse("CYCLICITY_ENUMERATION_CAP", &raw)?;
        }
        if let Some(raw) = lookup("CYCLICITY_WORKERS") {
            self.workers = parse("CYCLICITY_WORKERS", &raw)?;
        }
        if let Some(raw) = lookup("CYCLICITY_FORMAT") {
            self.format = match raw.as_str() {
                "text" => OutputFormat::Text,
                "json" => OutputFormat::Json,
                other => {
                    return Err(Error::Parse(format!("invalid CYCLICITY_FORMAT: {other:?}")))
                }
            };
        }
        self.validate()
    }

    pub fn validate(&self) -> Result<()> {
        if self.order_cap == 0 || self.perm_cap == 0 || self.enumeration_cap == 0 {
            return Err(Error::InvalidParams("caps must be positive".into()));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn file_then_env_layering() {
        let mut cfg = Config::default();
        cfg.apply_file("order_cap = 5000\nworkers = 2\n").unwrap();
        assert_eq!(cfg.order_cap, 5000);
        assert_eq!(cfg.workers, 2);
        assert_eq!(cfg.perm_cap, Config::default().perm_cap);
        cfg.apply_env(|k| (k == "CYCLICITY_ORDER_CAP").then(|| "7000".to_string())).unwrap();
        assert_eq!(cfg.order_cap, 7000);
        assert_eq!(cfg.workers, 2);
    }

    #[test]
    fn zero_caps_rejected() {
        let mut cfg = Config::default();
        assert!(cfg.apply_file("order_cap = 0\n").is_err());
    }

    #[test]
    fn bad_values_are_parse_errors() {
        let mut cfg = Config::default();
        assert!(matches!(cfg.apply_file("order_cap = -1\n"), Err(Error::Parse(_))));
        assert!(matches!(
            cfg.apply_env(|_| Some("not-a-number".into())),
            Err(Error::Parse(_))
        ));
    }
}
