//! Settings: command-line flags override the config file, which overrides
//! the library defaults.

use std::path::Path;

use fslp_core::spectrum::SpectrumOptions;
use fslp_core::{MLParams, QuadratureConfig};
use serde::Deserialize;

use crate::args::Format;
use crate::error::CliError;

/// Keys accepted in the config file.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub abs_tol: Option<f64>,
    pub rel_tol: Option<f64>,
    pub max_subdivisions: Option<usize>,
    pub series_terms_max: Option<usize>,
    pub asymptotic_terms: Option<usize>,
    pub switch_radius: Option<f64>,
    pub tol: Option<f64>,
    pub samples_per_unit_rho: Option<usize>,
    pub max_scan_samples: Option<usize>,
    pub precision: Option<usize>,
    pub format: Option<Format>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::usage(format!("cannot read config {}: {e}", path.display())))?;
        toml::from_str(&text).map_err(|e| CliError::usage(format!("bad config {}: {}", path.display(), e.message())))
    }

    pub fn quadrature(&self) -> Result<QuadratureConfig, CliError> {
        let mut q = QuadratureConfig::default();
        if let Some(v) = self.abs_tol {
            q.abs_tol = v;
        }
        if let Some(v) = self.rel_tol {
            q.rel_tol = v;
        }
        if let Some(v) = self.max_subdivisions {
            q.max_subdivisions = v;
        }
        q.validate()?;
        Ok(q)
    }

    pub fn ml_params(&self, delta: f64, theta: f64) -> Result<MLParams, CliError> {
        let mut p = MLParams::new(delta, theta)?;
        if let Some(n) = self.series_terms_max {
            p = p.with_series_terms_max(n)?;
        }
        if let Some(n) = self.asymptotic_terms {
            p = p.with_asymptotic_terms(n)?;
        }
        if let Some(r) = self.switch_radius {
            p = p.with_switch_radius(r)?;
        }
        Ok(p)
    }

    pub fn spectrum(&self, tol_flag: Option<f64>) -> SpectrumOptions {
        let mut o = SpectrumOptions::default();
        if let Some(t) = tol_flag.or(self.tol) {
            o.tol = t;
        }
        if let Some(n) = self.samples_per_unit_rho {
            o.samples_per_unit_rho = n;
        }
        if let Some(n) = self.max_scan_samples {
            o.max_scan_samples = n;
        }
        o
    }
}
