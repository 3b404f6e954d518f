//! Session configuration.
//!
//! Config files are either a JSON object or `key = value` lines (`#` starts a
//! comment). Every field is optional.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::angle::Angle;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Config {
    /// Degrees of wheel rotation per detent.
    pub rotation_resolution: f64,
    /// Minimum secondary-button hold, in ms, that toggles teleport.
    pub long_press_ms: u64,
    /// Pixels moved per detent at speed level 1.
    pub base_step: i32,
    pub default_speed: u32,
    pub max_speed: u32,
    /// When set, positive wheel-2 detents move the cursor down.
    pub invert_y: bool,
}

impl Default for Config {
    fn default() -> Self {
        Self {
            rotation_resolution: 20.0,
            long_press_ms: 300,
            base_step: 5,
            default_speed: 3,
            max_speed: 10,
            invert_y: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConfigError {
    #[error("config line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("malformed config object: {0}")]
    Json(String),
    #[error("unknown config key {0:?}")]
    UnknownKey(String),
    #[error("invalid value for {key}: {message}")]
    Invalid { key: &'static str, message: String },
}

impl Config {
    pub fn parse(text: &str) -> Result<Self, ConfigError> {
        let cfg = if text.trim_start().starts_with('{') {
            serde_json::from_str(text).map_err(|e| ConfigError::Json(e.to_string()))?
        } else {
            Self::parse_key_values(text)?
        };
        cfg.validate()?;
        Ok(cfg)
    }

    fn parse_key_values(text: &str) -> Result<Self, ConfigError> {
        let mut cfg = Config::default();
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| ConfigError::Syntax {
                line: line_no,
                message: format!("expected key=value, got {line:?}"),
            })?;
            let (key, value) = (key.trim(), value.trim());
            let bad = |e: &dyn std::fmt::Display| ConfigError::Syntax {
                line: line_no,
                message: format!("{key}: {e}"),
            };
            match key {
                "rotation_resolution" => {
                    cfg.rotation_resolution = value.parse().map_err(|e| bad(&e))?
                }
                "long_press_ms" => cfg.long_press_ms = value.parse().map_err(|e| bad(&e))?,
                "base_step" => cfg.base_step = value.parse().map_err(|e| bad(&e))?,
                "default_speed" => cfg.default_speed = value.parse().map_err(|e| bad(&e))?,
                "max_speed" => cfg.max_speed = value.parse().map_err(|e| bad(&e))?,
                "invert_y" => cfg.invert_y = value.parse().map_err(|e| bad(&e))?,
                other => return Err(ConfigError::UnknownKey(other.to_owned())),
            }
        }
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        let r = self.rotation_resolution;
        if !(Angle::is_representable(r) && Angle::from_degrees(r) > Angle::ZERO) {
            return Err(ConfigError::Invalid {
                key: "rotation_resolution",
                message: format!("must be a positive number of degrees, got {r}"),
            });
        }
        if self.long_press_ms == 0 {
            return Err(ConfigError::Invalid {
                key: "long_press_ms",
                message: "must be positive".into(),
            });
        }
        if self.base_step < 1 {
            return Err(ConfigError::Invalid {
                key: "base_step",
                message: "must be at least 1 pixel".into(),
            });
        }
        if self.max_speed < 1 {
            return Err(ConfigError::Invalid {
                key: "max_speed",
                message: "must be at least 1".into(),
            });
        }
        if !(1..=self.max_speed).contains(&self.default_speed) {
            return Err(ConfigError::Invalid {
                key: "default_speed",
                message: format!("must lie in 1..={}", self.max_speed),
            });
        }
        Ok(())
    }

    pub fn resolution(&self) -> Angle {
        Angle::from_degrees(self.rotation_resolution)
    }
}
