//! Optional flat `key=value` config files.
//!
//! Keys mirror the long flag names (`space`, `dim`, `r1`, ...). Values given
//! on the command line win over config-file values. Lines starting with `#`
//! and blank lines are ignored.

use std::collections::HashMap;
use std::fmt::Display;
use std::path::Path;
use std::str::FromStr;

#[derive(Clone, Debug, Default)]
pub struct ConfigMap {
    entries: HashMap<String, String>,
}

impl ConfigMap {
    pub fn load(path: &Path) -> Result<Self, String> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read config file {}: {e}", path.display()))?;
        let mut entries = HashMap::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(format!(
                    "{}:{}: expected key=value, got {raw:?}",
                    path.display(),
                    lineno + 1
                ));
            };
            entries.insert(key.trim().to_string(), value.trim().to_string());
        }
        Ok(Self { entries })
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries.get(key).map(String::as_str)
    }
}

/// Command-line value if present, else parsed config value.
pub fn resolve<T>(cli: Option<T>, cfg: &ConfigMap, key: &str) -> Result<Option<T>, String>
where
    T: FromStr,
    T::Err: Display,
{
    if cli.is_some() {
        return Ok(cli);
    }
    match cfg.get(key) {
        None => Ok(None),
        Some(raw) => raw
            .parse::<T>()
            .map(Some)
            .map_err(|e| format!("config key {key}: cannot parse {raw:?}: {e}")),
    }
}

/// Like [`resolve`], but the value is mandatory.
pub fn require<T>(cli: Option<T>, cfg: &ConfigMap, key: &str) -> Result<T, String>
where
    T: FromStr,
    T::Err: Display,
{
    resolve(cli, cfg, key)?.ok_or_else(|| format!("missing required value for --{key}"))
}
