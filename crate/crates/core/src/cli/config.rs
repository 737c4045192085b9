//! Flat `key = value` configuration; command-line flags take precedence.

use std::collections::BTreeMap;

use num::{BigInt, BigRational, One, Zero};

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum ConfigError {
    #[error("{path}:{line}: expected 'key = value'")]
    Syntax { path: String, line: usize },
    #[error("unknown configuration key '{0}'")]
    UnknownKey(String),
    #[error("bad value for {key}: {value}")]
    BadValue { key: String, value: String },
    #[error("cannot read {path}: {msg}")]
    Io { path: String, msg: String },
}

pub const KEYS: [&str; 10] = ["q0", "L", "z", "seed", "samples", "format", "suite", "tol", "kmax", "eps"];

/// Raw values from a config file.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct ConfigFile {
    pub values: BTreeMap<String, String>,
}

impl ConfigFile {
    pub fn parse(text: &str, path: &str) -> Result<Self, ConfigError> {
        let mut values = BTreeMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line.split_once('=').ok_or(ConfigError::Syntax { path: path.to_string(), line: i + 1 })?;
            let (k, v) = (k.trim(), v.trim());
            let key = if k == "q" { "q0" } else { k };
            if !KEYS.contains(&key) {
                return Err(ConfigError::UnknownKey(k.to_string()));
            }
            values.insert(key.to_string(), v.to_string());
        }
        Ok(Self { values })
    }

    pub fn load(path: &str) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|e| ConfigError::Io { path: path.to_string(), msg: e.to_string() })?;
        Self::parse(&text, path)
    }

    pub fn get<T: std::str::FromStr>(&self, key: &str) -> Result<Option<T>, ConfigError> {
        match self.values.get(key) {
            None => Ok(None),
            Some(v) => v
                .parse()
                .map(Some)
                .map_err(|_| ConfigError::BadValue { key: key.to_string(), value: v.clone() }),
        }
    }
}

/// Parses `"1/2"` or a plain decimal such as `"0.3"` into an exact rational in (0, 1).
pub fn parse_q0(text: &str) -> Result<BigRational, ConfigError> {
    let bad = || ConfigError::BadValue { key: "q0".into(), value: text.to_string() };
    let t = text.trim();
    let value = if let Some((int, frac)) = t.split_once('.') {
        if !frac.chars().all(|c| c.is_ascii_digit()) || !int.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let digits: BigInt = format!("{int}{frac}").parse().map_err(|_| bad())?;
        BigRational::new(digits, num::pow(BigInt::from(10), frac.len()))
    } else {
        t.parse::<BigRational>().map_err(|_| bad())?
    };
    if value <= BigRational::zero() || value >= BigRational::one() {
        return Err(bad());
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q0_forms() {
        assert_eq!(parse_q0("1/2").unwrap(), BigRational::new(1.into(), 2.into()));
        assert_eq!(parse_q0("0.3").unwrap(), BigRational::new(3.into(), 10.into()));
        assert!(parse_q0("1").is_err());
        assert!(parse_q0("-0.5").is_err());
        assert!(parse_q0("x").is_err());
    }

    #[test]
    fn file_format() {
        let c = ConfigFile::parse("# run\nq = 0.7\nL = 12  # levels\n\nseed=3\n", "t").unwrap();
        assert_eq!(c.get::<u32>("L").unwrap(), Some(12));
        assert_eq!(c.values["q0"], "0.7");
        assert!(matches!(ConfigFile::parse("colour = red", "t"), Err(ConfigError::UnknownKey(_))));
        assert!(matches!(ConfigFile::parse("L 12", "t"), Err(ConfigError::Syntax { line: 1, .. })));
    }
}
