use std::path::{Path, PathBuf};

use clap::{Args, ValueEnum};
use defect_oscillator::coherent::evolution_period;
use defect_oscillator::defect::{Component, DefectConfig, DefectKind, QuantumNumbers};
use num_complex::Complex64;
use serde::Deserialize;

#[derive(Debug, thiserror::Error)]
pub enum ConfigError {
    #[error("invalid configuration: {0}")]
    Invalid(String),
    #[error("cannot read config file {path}: {source}")]
    Read {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("cannot parse config file {path}: {source}")]
    Parse {
        path: PathBuf,
        source: toml::de::Error,
    },
    #[error(transparent)]
    Defect(#[from] defect_oscillator::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

/// Every setting as given on the command line or in a config file; unset
/// fields fall back to the file, then to the defaults.
#[derive(Debug, Clone, Default, Args, Deserialize)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
pub struct Settings {
    /// string | magnetic | dislocation
    #[arg(long)]
    pub defect: Option<String>,
    #[arg(long)]
    pub alpha: Option<f64>,
    #[arg(long)]
    pub mass: Option<f64>,
    #[arg(long)]
    pub omega: Option<f64>,
    #[arg(long)]
    pub flux_ratio: Option<f64>,
    #[arg(long)]
    pub torsion: Option<f64>,
    #[arg(long)]
    pub kz: Option<f64>,
    #[arg(long)]
    pub l_max: Option<u32>,
    #[arg(long)]
    pub nr_max: Option<u32>,
    /// upper | lower; both when omitted
    #[arg(long)]
    pub component: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub xi_re: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub xi_im: Option<f64>,
    /// defaults to one period πħ/(2mω)
    #[arg(long)]
    pub tau_max: Option<f64>,
    #[arg(long)]
    pub tau_steps: Option<usize>,
    #[arg(long)]
    pub rho_min: Option<f64>,
    #[arg(long)]
    pub rho_max: Option<f64>,
    #[arg(long)]
    pub rho_steps: Option<usize>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, hide = true, allow_hyphen_values = true)]
    #[serde(skip)]
    pub casimir_offset: Option<f64>,
}

impl Settings {
    pub fn from_file(path: &Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Read {
            path: path.to_owned(),
            source,
        })?;
        toml::from_str(&text).map_err(|source| ConfigError::Parse {
            path: path.to_owned(),
            source,
        })
    }

    /// Fields set here win over `fallback`.
    pub fn or(self, fallback: Settings) -> Settings {
        Settings {
            defect: self.defect.or(fallback.defect),
            alpha: self.alpha.or(fallback.alpha),
            mass: self.mass.or(fallback.mass),
            omega: self.omega.or(fallback.omega),
            flux_ratio: self.flux_ratio.or(fallback.flux_ratio),
            torsion: self.torsion.or(fallback.torsion),
            kz: self.kz.or(fallback.kz),
            l_max: self.l_max.or(fallback.l_max),
            nr_max: self.nr_max.or(fallback.nr_max),
            component: self.component.or(fallback.component),
            xi_re: self.xi_re.or(fallback.xi_re),
            xi_im: self.xi_im.or(fallback.xi_im),
            tau_max: self.tau_max.or(fallback.tau_max),
            tau_steps: self.tau_steps.or(fallback.tau_steps),
            rho_min: self.rho_min.or(fallback.rho_min),
            rho_max: self.rho_max.or(fallback.rho_max),
            rho_steps: self.rho_steps.or(fallback.rho_steps),
            format: self.format.or(fallback.format),
            out: self.out.or(fallback.out),
            seed: self.seed.or(fallback.seed),
            casimir_offset: self.casimir_offset.or(fallback.casimir_offset),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub defect: DefectConfig,
    pub k_z: f64,
    pub l_max: u32,
    pub nr_max: u32,
    pub components: Vec<Component>,
    pub xi: Complex64,
    pub tau_max: f64,
    pub tau_steps: usize,
    pub rho_min: f64,
    pub rho_max: f64,
    pub rho_steps: usize,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub seed: u64,
    /// Added to the expected Casimir eigenvalue by `verify`; a negative control.
    pub casimir_offset: f64,
}

fn invalid(msg: impl Into<String>) -> ConfigError {
    ConfigError::Invalid(msg.into())
}

fn parse_component(name: &str) -> Result<Component, ConfigError> {
    match name {
        "upper" => Ok(Component::Upper),
        "lower" => Ok(Component::Lower),
        other => Err(invalid(format!(
            "unknown component {other:?} (expected upper or lower)"
        ))),
    }
}

impl RunConfig {
    pub fn resolve(s: Settings) -> Result<Self, ConfigError> {
        let kind: DefectKind = match s.defect.as_deref() {
            None => DefectKind::CosmicString,
            Some(name) => name.parse()?,
        };
        let mut builder = DefectConfig::builder(kind);
        if let Some(v) = s.alpha {
            builder = builder.alpha(v);
        }
        if let Some(v) = s.mass {
            builder = builder.mass(v);
        }
        if let Some(v) = s.omega {
            builder = builder.omega(v);
        }
        if let Some(v) = s.flux_ratio {
            builder = builder.flux_ratio(v);
        }
        if let Some(v) = s.torsion {
            builder = builder.torsion(v);
        }
        let defect = builder.build()?;

        let components = match s.component.as_deref() {
            None => vec![Component::Upper, Component::Lower],
            Some(name) => vec![parse_component(name)?],
        };
        let k_z = s.kz.unwrap_or(0.0);
        if !k_z.is_finite() {
            return Err(invalid("kz must be finite"));
        }
        let xi = Complex64::new(s.xi_re.unwrap_or(0.4), s.xi_im.unwrap_or(0.0));
        if !(xi.norm() < 1.0) {
            return Err(invalid(format!("|xi| must be < 1, got {}", xi.norm())));
        }
        let tau_max = s
            .tau_max
            .unwrap_or_else(|| evolution_period(defect.m_omega(), defect.hbar()));
        if !(tau_max >= 0.0 && tau_max.is_finite()) {
            return Err(invalid(format!(
                "tau-max must be finite and >= 0, got {tau_max}"
            )));
        }
        let tau_steps = s.tau_steps.unwrap_or(8);
        if tau_steps == 0 {
            return Err(invalid("tau-steps must be >= 1"));
        }
        let rho_min = s.rho_min.unwrap_or(0.05);
        let rho_max = s.rho_max.unwrap_or(6.0);
        if !(rho_min > 0.0 && rho_max > rho_min && rho_max.is_finite()) {
            return Err(invalid(format!(
                "need 0 < rho-min < rho-max, got {rho_min} and {rho_max}"
            )));
        }
        let rho_steps = s.rho_steps.unwrap_or(60);
        if rho_steps < 2 {
            return Err(invalid("rho-steps must be >= 2"));
        }
        let casimir_offset = s.casimir_offset.unwrap_or(0.0);
        if !casimir_offset.is_finite() {
            return Err(invalid("casimir offset must be finite"));
        }
        Ok(Self {
            defect,
            k_z,
            l_max: s.l_max.unwrap_or(2),
            nr_max: s.nr_max.unwrap_or(2),
            components,
            xi,
            tau_max,
            tau_steps,
            rho_min,
            rho_max,
            rho_steps,
            format: s.format.unwrap_or(Format::Csv),
            out: s.out,
            seed: s.seed.unwrap_or(0),
            casimir_offset,
        })
    }

    /// Flags win over the config file.
    pub fn from_sources(flags: Settings, file: Option<&Path>) -> Result<Self, ConfigError> {
        let merged = match file {
            Some(path) => flags.or(Settings::from_file(path)?),
            None => flags,
        };
        Self::resolve(merged)
    }

    /// Ordered by component, then `n_r`, then `l`.
    pub fn quantum_numbers(&self) -> Vec<QuantumNumbers> {
        let mut out = Vec::new();
        for &component in &self.components {
            for n_r in 0..=self.nr_max {
                for l in 0..=self.l_max as i32 {
                    out.push(QuantumNumbers::new(n_r, l, self.k_z, component));
                }
            }
        }
        out
    }

    pub fn rho_grid(&self) -> Vec<f64> {
        let last = (self.rho_steps - 1) as f64;
        (0..self.rho_steps)
            .map(|i| self.rho_min + (self.rho_max - self.rho_min) * i as f64 / last)
            .collect()
    }

    /// `tau_steps + 1` points from 0 to `tau_max`.
    pub fn tau_grid(&self) -> Vec<f64> {
        (0..=self.tau_steps)
            .map(|i| self.tau_max * i as f64 / self.tau_steps as f64)
            .collect()
    }
}

impl Default for RunConfig {
    fn default() -> Self {
        Self::resolve(Settings::default()).expect("defaults are valid")
    }
}
