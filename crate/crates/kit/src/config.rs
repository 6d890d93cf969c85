use std::path::Path;

use serde::Deserialize;
use verlinde_core::Limits;

use crate::error::{KitError, KitResult};

/// Environment variable naming a TOML config file.
pub const CONFIG_ENV: &str = "VK_CONFIG";

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Csv,
}

#[derive(Clone, Debug, PartialEq, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Config {
    pub tolerance: f64,
    pub torus_cap: u64,
    pub weyl_cap: u64,
    pub rootspace_cap: u64,
    pub format: Format,
    pub parallel: usize,
}

impl Default for Config {
    fn default() -> Self {
        let l = Limits::default();
        Config {
            tolerance: l.tolerance,
            torus_cap: l.torus_cap,
            weyl_cap: l.weyl_cap,
            rootspace_cap: l.rootspace_cap,
            format: Format::Json,
            parallel: 1,
        }
    }
}

impl Config {
    pub fn from_file(path: &Path) -> KitResult<Self> {
        let text =
            std::fs::read_to_string(path).map_err(|source| KitError::Io { path: path.to_path_buf(), source })?;
        toml::from_str(&text).map_err(|source| KitError::Config { path: path.to_path_buf(), source })
    }

    /// Reads the file named by `VK_CONFIG`, or the defaults when unset.
    pub fn from_env() -> KitResult<Self> {
        match std::env::var_os(CONFIG_ENV) {
            Some(p) if !p.is_empty() => Config::from_file(Path::new(&p)),
            _ => Ok(Config::default()),
        }
    }

    pub fn limits(&self) -> KitResult<Limits> {
        let limits = Limits {
            tolerance: self.tolerance,
            torus_cap: self.torus_cap,
            weyl_cap: self.weyl_cap,
            rootspace_cap: self.rootspace_cap,
            ..Limits::default()
        };
        limits.validate()?;
        if self.parallel == 0 {
            return Err(KitError::Usage("parallel must be at least 1".into()));
        }
        Ok(limits)
    }
}
