//! Flags and the JSON config file that mirrors them.

use std::path::{Path, PathBuf};

use clap::{Args, ValueEnum};
use serde::Deserialize;

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
    Svg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ViewpointSet {
    /// Fibonacci points on the unit sphere.
    Sphere,
    /// Grid on the plane given by `--plane`.
    Plane,
}

/// Every flag is optional so that values from `--config` can fill the gaps;
/// flags given on the command line win.
#[derive(Debug, Clone, Default, Args, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Params {
    /// JSON file with any of these options; keys use underscores.
    #[arg(long, value_name = "FILE")]
    #[serde(skip)]
    pub config: Option<PathBuf>,
    /// Planar body JSON file.
    #[arg(long, value_name = "FILE")]
    pub body: Option<PathBuf>,
    /// Quadric JSON file.
    #[arg(long, value_name = "FILE")]
    pub quadric: Option<PathBuf>,
    /// Interior point, `X,Y` or `X,Y,Z`.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, value_name = "X,Y[,Z]")]
    pub p: Option<Vec<f64>>,
    /// Polygon vertex count.
    #[arg(long)]
    pub k: Option<usize>,
    /// Sample count (tangent samples, viewpoints, or section viewpoints).
    #[arg(long)]
    pub samples: Option<usize>,
    #[arg(long)]
    pub tol: Option<f64>,
    /// Seed for randomized sampling.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Output directory.
    #[arg(long, value_name = "DIR")]
    pub out: Option<PathBuf>,
    /// Output formats to write; all by default.
    #[arg(long, value_enum, value_delimiter = ',')]
    pub format: Option<Vec<Format>>,
    /// Start angle on the unit circle, in radians.
    #[arg(long, allow_hyphen_values = true)]
    pub start: Option<f64>,
    #[arg(long)]
    pub max_steps: Option<usize>,
    /// Offset of the inner circle centre along the x-axis.
    #[arg(long, allow_hyphen_values = true)]
    pub offset: Option<f64>,
    /// Number of uniformly spaced starts for the closure check.
    #[arg(long)]
    pub starts: Option<usize>,
    #[arg(long, value_enum)]
    pub viewpoints: Option<ViewpointSet>,
    /// Plane `NX,NY,NZ,S` meaning `⟨n, y⟩ = s`.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, value_name = "NX,NY,NZ,S")]
    pub plane: Option<Vec<f64>>,
    /// Number of random section planes.
    #[arg(long)]
    pub sections: Option<usize>,
    /// Number of aspect ratios in a sweep.
    #[arg(long)]
    pub steps: Option<usize>,
}

macro_rules! fill {
    ($dst:ident, $src:ident; $($field:ident),*) => {
        $( if $dst.$field.is_none() { $dst.$field = $src.$field; } )*
    };
}

fn resolve(base: &Path, path: Option<PathBuf>) -> Option<PathBuf> {
    path.map(|p| if p.is_relative() { base.join(p) } else { p })
}

impl Params {
    /// Merges the config file named by `--config`, if any. Relative paths
    /// in the file are taken relative to the file's directory.
    pub fn resolve(mut self) -> Result<Self, CliError> {
        let Some(path) = self.config.clone() else {
            return Ok(self);
        };
        let text = std::fs::read_to_string(&path)
            .map_err(|e| CliError::Config(format!("cannot read config {}: {e}", path.display())))?;
        let file: Params = serde_json::from_str(&text)
            .map_err(|e| CliError::Config(format!("invalid config {}: {e}", path.display())))?;
        let base = path.parent().unwrap_or(Path::new("")).to_path_buf();
        let file = Params {
            body: resolve(&base, file.body),
            quadric: resolve(&base, file.quadric),
            out: resolve(&base, file.out),
            ..file
        };
        fill!(self, file; body, quadric, p, k, samples, tol, seed, out, format, start,
              max_steps, offset, starts, viewpoints, plane, sections, steps);
        Ok(self)
    }

    pub fn tol_or(&self, default: f64) -> Result<f64, CliError> {
        match self.tol {
            Some(t) if !(t > 0.0) || !t.is_finite() => Err(CliError::Config(format!("--tol must be positive, got {t}"))),
            Some(t) => Ok(t),
            None => Ok(default),
        }
    }

    pub fn count_or(value: Option<usize>, default: usize, min: usize, name: &str) -> Result<usize, CliError> {
        let n = value.unwrap_or(default);
        if n < min {
            return Err(CliError::Config(format!("--{name} must be at least {min}, got {n}")));
        }
        Ok(n)
    }

    pub fn require<'a, T>(value: &'a Option<T>, name: &str) -> Result<&'a T, CliError> {
        value.as_ref().ok_or_else(|| CliError::Config(format!("--{name} is required")))
    }
}
