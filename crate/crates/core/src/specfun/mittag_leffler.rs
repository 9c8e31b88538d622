//! Two-parameter Mittag-Leffler function `E_{δ,θ}(z) = Σ z^k / Γ(δk + θ)`
//! for real `z`.

use std::f64::consts::PI;

use super::gamma::rgamma;
use super::Branch;
use crate::dd::DoubleDouble;
use crate::error::{Error, Result};

/// Largest δ for which [`ml_asymptotic`] is offered: the admissible sector
/// `(δπ/2, min(π, δπ))` collapses as δ → 2.
pub const ASYMPTOTIC_DELTA_MAX: f64 = 1.98;

/// Parameters and evaluation policy for `E_{δ,θ}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MLParams {
    pub delta: f64,
    pub theta: f64,
    /// Hard cap on the number of series terms.
    pub series_terms_max: usize,
    /// Truncation order N of the asymptotic sum `Σ_{k=1}^{N}`.
    pub asymptotic_terms: usize,
    /// `|z|` above which [`ml`] switches from the series to the asymptotic expansion.
    pub switch_radius: f64,
}

impl MLParams {
    pub const DEFAULT_SERIES_TERMS: usize = 400;
    pub const DEFAULT_ASYMPTOTIC_TERMS: usize = 8;
    pub const DEFAULT_SWITCH_RADIUS: f64 = 40.0;

    pub fn new(delta: f64, theta: f64) -> Result<Self> {
        let params = MLParams {
            delta,
            theta,
            series_terms_max: Self::DEFAULT_SERIES_TERMS,
            asymptotic_terms: Self::DEFAULT_ASYMPTOTIC_TERMS,
            switch_radius: Self::DEFAULT_SWITCH_RADIUS,
        };
        params.validate()?;
        Ok(params)
    }

    pub fn with_series_terms_max(mut self, n: usize) -> Result<Self> {
        self.series_terms_max = n;
        self.validate().map(|_| self)
    }

    pub fn with_asymptotic_terms(mut self, n: usize) -> Result<Self> {
        self.asymptotic_terms = n;
        self.validate().map(|_| self)
    }

    pub fn with_switch_radius(mut self, radius: f64) -> Result<Self> {
        self.switch_radius = radius;
        self.validate().map(|_| self)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.delta > 0.0 && self.delta <= 2.0) {
            return Err(Error::domain(format!("delta must lie in (0, 2], got {}", self.delta)));
        }
        if !self.theta.is_finite() {
            return Err(Error::domain(format!("theta must be finite, got {}", self.theta)));
        }
        if self.series_terms_max == 0 || self.asymptotic_terms == 0 {
            return Err(Error::domain("series and asymptotic term counts must be at least 1"));
        }
        if !(self.switch_radius > 0.0 && self.switch_radius.is_finite()) {
            return Err(Error::domain(format!(
                "switch radius must be positive, got {}",
                self.switch_radius
            )));
        }
        Ok(())
    }
}

/// Sector half-angle μ of the asymptotic expansion, `δπ/2 < μ < min(π, δπ)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SectorAngle {
    mu: f64,
}

impl SectorAngle {
    pub fn new(mu: f64, delta: f64) -> Result<Self> {
        let (lo, hi) = Self::bounds(delta);
        if mu > lo && mu < hi {
            Ok(SectorAngle { mu })
        } else {
            Err(Error::domain(format!(
                "sector angle {mu} outside ({lo}, {hi}) for delta = {delta}"
            )))
        }
    }

    /// Midpoint of the admissible interval.
    pub fn midpoint(delta: f64) -> Result<Self> {
        if !(delta > 0.0 && delta < 2.0) {
            return Err(Error::domain(format!("no sector angle exists for delta = {delta}")));
        }
        let (lo, hi) = Self::bounds(delta);
        Self::new(0.5 * (lo + hi), delta)
    }

    fn bounds(delta: f64) -> (f64, f64) {
        (delta * PI / 2.0, PI.min(delta * PI))
    }

    pub fn value(self) -> f64 {
        self.mu
    }
}

/// `z^k / Γ(x)` in double-double, with `ln|z|` precomputed. `None` at a pole of Γ.
fn series_term(k: usize, x: DoubleDouble, z_negative: bool, ln_abs_z: DoubleDouble) -> Option<DoubleDouble> {
    let (log_mag, mut sign) = if x.hi > 0.0 {
        (ln_abs_z.mul_f64(k as f64) - x.ln_gamma(), 1.0)
    } else {
        if x.lo == 0.0 && x.hi == x.hi.floor() {
            return None;
        }
        // 1/Γ(x) = x (x+1) ... (x+m-1) / Γ(x+m)
        let shift = (-x.hi).ceil() + 1.0;
        let mut prod = DoubleDouble::ONE;
        let mut y = x;
        for _ in 0..shift as usize {
            prod = prod * y;
            y = y + DoubleDouble::ONE;
        }
        let sign = prod.hi.signum();
        (ln_abs_z.mul_f64(k as f64) + prod.abs().ln() - y.ln_gamma(), sign)
    };
    if z_negative && k % 2 == 1 {
        sign = -sign;
    }
    let mag = log_mag.exp();
    Some(if sign < 0.0 { -mag } else { mag })
}

/// Power series `Σ_{k≥0} z^k / Γ(δk + θ)`, for `|z| ≤ switch_radius`.
///
/// Terms are formed and accumulated in double-double, so the result keeps
/// full f64 accuracy while the partial sums cancel (negative `z`) by up to
/// ~15 further decimal digits. Summation stops at the first term past the
/// peak whose magnitude is below `1e-16 (|sum| + 1)`.
pub fn ml_series(params: &MLParams, z: f64) -> Result<f64> {
    params.validate()?;
    if !z.is_finite() || z.abs() > params.switch_radius {
        return Err(Error::domain(format!(
            "series branch requires |z| <= {}, got {z}",
            params.switch_radius
        )));
    }
    if z == 0.0 {
        return Ok(rgamma(params.theta));
    }
    let ln_abs_z = DoubleDouble::from_f64(z.abs()).ln();
    // terms grow while (δk)^δ < |z|
    let peak = z.abs().powf(1.0 / params.delta) / params.delta;
    let mut sum = DoubleDouble::ZERO;
    let mut prev_mag = f64::INFINITY;
    let mut last_mag = f64::NAN;
    for k in 0..params.series_terms_max {
        let x = DoubleDouble::product(params.delta, k as f64) + DoubleDouble::from_f64(params.theta);
        let Some(term) = series_term(k, x, z < 0.0, ln_abs_z) else {
            continue;
        };
        if !term.is_finite() {
            return Err(Error::Range(format!(
                "E_{{{},{}}}({z}) overflows f64",
                params.delta, params.theta
            )));
        }
        sum = sum + term;
        let mag = term.hi.abs();
        last_mag = mag;
        if (k as f64) >= peak && mag <= prev_mag && mag < 1e-16 * (sum.hi.abs() + 1.0) {
            return Ok(sum.to_f64());
        }
        prev_mag = mag;
    }
    Err(Error::Accuracy {
        terms: params.series_terms_max,
        last_term: last_mag,
    })
}

/// Asymptotic expansion for `|z| > switch_radius`, `0 < δ ≤ 1.98`.
///
/// `z > 0` (`|arg z| = 0 ≤ μ`):
/// `(1/δ) z^{(1-θ)/δ} exp(z^{1/δ}) - Σ_{k=1}^{N} z^{-k} / Γ(θ - δk)`;
/// `z < 0` (`|arg z| = π ≥ μ`): the algebraic sum alone. On the negative axis
/// this drops contributions of size `exp(|z|^{1/δ} cos(π/δ))`, which are only
/// negligible once `|z|^{1/δ} |cos(π/δ)|` is large.
pub fn ml_asymptotic(params: &MLParams, mu: SectorAngle, z: f64) -> Result<f64> {
    params.validate()?;
    let delta = params.delta;
    if !(delta > 0.0 && delta < 2.0) {
        return Err(Error::domain(format!("asymptotic expansion requires 0 < delta < 2, got {delta}")));
    }
    if delta > ASYMPTOTIC_DELTA_MAX {
        return Err(Error::domain(format!(
            "asymptotic expansion is restricted to delta <= {ASYMPTOTIC_DELTA_MAX}, got {delta}"
        )));
    }
    // re-validate μ against this δ
    SectorAngle::new(mu.value(), delta)?;
    if !z.is_finite() || z.abs() <= params.switch_radius {
        return Err(Error::domain(format!(
            "asymptotic branch requires |z| > {}, got {z}",
            params.switch_radius
        )));
    }
    asymptotic_sum(params, z)
}

fn asymptotic_sum(params: &MLParams, z: f64) -> Result<f64> {
    let (delta, theta) = (params.delta, params.theta);
    let inv_z = 1.0 / z;
    let mut power = 1.0;
    let mut algebraic = 0.0;
    for k in 1..=params.asymptotic_terms {
        power *= inv_z;
        algebraic += power * rgamma(theta - delta * k as f64);
    }
    // arg z is exactly 0 or π on the real axis, and 0 <= μ < π
    if z > 0.0 {
        let root = z.powf(1.0 / delta);
        let leading = z.powf((1.0 - theta) / delta) * root.exp() / delta;
        if !leading.is_finite() {
            return Err(Error::Range(format!("E_{{{delta},{theta}}}({z}) overflows f64")));
        }
        Ok(leading - algebraic)
    } else {
        Ok(-algebraic)
    }
}

/// For negative `z` the series loses about `|z|^{1/δ} / ln 10` digits to
/// cancellation; past this value of `|z|^{1/δ}` double-double no longer
/// leaves a full f64 result.
pub const SERIES_ROOT_LIMIT: f64 = 40.0;

/// `E_{δ,θ}(z)` and the branch used: series for `|z| ≤ switch_radius`, the
/// asymptotic expansion (with the midpoint sector angle) beyond. For
/// negative `z` the series is also abandoned once `|z|^{1/δ}` exceeds
/// [`SERIES_ROOT_LIMIT`], which only matters for δ below 1.
pub fn ml_with_branch(params: &MLParams, z: f64) -> Result<(f64, Branch)> {
    let cancels = z < 0.0 && z.abs().powf(1.0 / params.delta) > SERIES_ROOT_LIMIT;
    if z.abs() <= params.switch_radius && !cancels {
        ml_series(params, z).map(|v| (v, Branch::Series))
    } else {
        if params.delta > ASYMPTOTIC_DELTA_MAX {
            return Err(Error::domain(format!(
                "no evaluation route for delta = {} at |z| = {}",
                params.delta,
                z.abs()
            )));
        }
        asymptotic_sum(params, z).map(|v| (v, Branch::Asymptotic))
    }
}

/// `E_{δ,θ}(z)`.
pub fn ml(params: &MLParams, z: f64) -> Result<f64> {
    ml_with_branch(params, z).map(|(v, _)| v)
}

/// One-parameter function `E_δ(z) = E_{δ,1}(z)`.
pub fn ml_classic(delta: f64, z: f64) -> Result<f64> {
    ml(&MLParams::new(delta, 1.0)?, z)
}
