//! The split `ρ E_{2α,2}(-λ) = f(λ) + g(λ)` with `ρ = λ^{1/(2α)}`, 1/2 < α < 1:
//!
//! ```text
//! f(λ) = ∫_0^∞ e^{-rρ} k(r) dr,
//! k(r) = (1/π) r^{2α-2} (-sin 2απ) / (r^{4α} + 2 r^{2α} cos 2απ + 1),
//! g(λ) = (1/α) e^{ρ cos φ} cos(ρ sin φ - φ),   φ = π/(2α).
//! ```
//!
//! `f` is positive and decreasing, `g` oscillates with an exponentially
//! decaying amplitude. Large λ are evaluated through this split because the
//! power series of `E_{2α,2}(-λ)` cancels catastrophically there.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::order::FractionalOrder;
use crate::quadrature::{integrate_finite, integrate_semi_infinite, QuadratureConfig};
use crate::specfun::{ml_series, ml_with_branch, Branch, MLParams};

/// ρ at which the characteristic function switches from the series to the
/// decomposition, i.e. the switch happens at `λ = 40^{2α}`.
pub const SERIES_RHO_MAX: f64 = 40.0;

/// `e^{-rρ}` is treated as zero past `rρ = 50` (`e^{-50} ≈ 2e-22`).
const DECAY_CUTOFF: f64 = 50.0;

/// Per-α constants and evaluation settings. Immutable once built.
#[derive(Debug, Clone)]
pub struct DecompositionContext {
    alpha: f64,
    /// φ = π/(2α)
    phi: f64,
    sin_phi: f64,
    cos_phi: f64,
    cot_phi: f64,
    sin_2ap: f64,
    cos_2ap: f64,
    quad: QuadratureConfig,
    ml: MLParams,
    execution: Execution,
}

impl DecompositionContext {
    /// Context for `1/2 < α < 1`.
    pub fn new(alpha: FractionalOrder) -> Result<Self> {
        let a = alpha.value();
        if !(a > 0.5 && a < 1.0) {
            return Err(Error::domain(format!("decomposition requires 1/2 < alpha < 1, got {a}")));
        }
        let phi = PI / (2.0 * a);
        let (sin_phi, cos_phi) = phi.sin_cos();
        let (sin_2ap, cos_2ap) = (2.0 * a * PI).sin_cos();
        assert!(sin_phi > 0.0 && cos_phi < 0.0 && sin_2ap < 0.0, "sign conditions fail for alpha = {a}");
        Ok(Self::assemble(a, phi, sin_phi, cos_phi, sin_2ap, cos_2ap))
    }

    /// α = 1 reference: `k ≡ 0`, `f ≡ 0`, `g(λ) = sin √λ`, so the
    /// characteristic function is `sin √λ / √λ`.
    pub fn classical() -> Self {
        Self::assemble(1.0, PI / 2.0, 1.0, 0.0, 0.0, 1.0)
    }

    fn assemble(alpha: f64, phi: f64, sin_phi: f64, cos_phi: f64, sin_2ap: f64, cos_2ap: f64) -> Self {
        let ml = MLParams::new(2.0 * alpha, 2.0)
            .and_then(|p| p.with_switch_radius(SERIES_RHO_MAX.powf(2.0 * alpha)))
            .expect("delta = 2 alpha lies in (1, 2]");
        DecompositionContext {
            alpha,
            phi,
            sin_phi,
            cos_phi,
            cot_phi: cos_phi / sin_phi,
            sin_2ap,
            cos_2ap,
            quad: QuadratureConfig::default(),
            ml,
            execution: Execution::default(),
        }
    }

    pub fn with_quadrature(mut self, cfg: QuadratureConfig) -> Result<Self> {
        cfg.validate()?;
        self.quad = cfg;
        Ok(self)
    }

    pub fn with_series_terms_max(mut self, n: usize) -> Result<Self> {
        self.ml = self.ml.with_series_terms_max(n)?;
        Ok(self)
    }

    pub fn with_execution(mut self, execution: Execution) -> Self {
        self.execution = execution;
        self
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn is_classical(&self) -> bool {
        self.alpha == 1.0
    }

    pub fn quadrature(&self) -> &QuadratureConfig {
        &self.quad
    }

    pub fn execution(&self) -> Execution {
        self.execution
    }

    pub fn sin_phi(&self) -> f64 {
        self.sin_phi
    }

    pub fn cot_phi(&self) -> f64 {
        self.cot_phi
    }

    /// `λ` up to which the characteristic function uses the series.
    pub fn series_threshold(&self) -> f64 {
        self.ml.switch_radius
    }

    /// `ρ = λ^{1/(2α)}`.
    pub fn rho(&self, lambda: f64) -> f64 {
        lambda.powf(0.5 / self.alpha)
    }

    /// `λ = ρ^{2α}`.
    pub fn lambda(&self, rho: f64) -> f64 {
        rho.powf(2.0 * self.alpha)
    }

    pub fn kernel_k(&self, r: f64) -> Result<f64> {
        if !(r > 0.0) {
            return Err(Error::domain(format!("kernel needs r > 0, got {r}")));
        }
        let q = r.powf(2.0 * self.alpha);
        Ok(r.powf(2.0 * self.alpha - 2.0) * (-self.sin_2ap) / (PI * (q * q + 2.0 * q * self.cos_2ap + 1.0)))
    }

    /// `f` as a function of ρ.
    pub fn f_of_rho(&self, rho: f64) -> Result<f64> {
        if !(rho >= 0.0) || rho.is_infinite() {
            return Err(Error::domain(format!("f needs finite rho >= 0, got {rho}")));
        }
        if self.sin_2ap == 0.0 {
            return Ok(0.0);
        }
        let a = self.alpha;
        let s = -self.sin_2ap / PI;
        let c = self.cos_2ap;
        // r = u^p on [0, 1] cancels r^{2α-2} against dr
        let p = 1.0 / (2.0 * a - 1.0);
        // beyond ρ u^p = DECAY_CUTOFF the integrand is below e^{-DECAY_CUTOFF} of its
        // peak; cutting there keeps a narrow peak at u = 0 visible to the rule
        let upper = (DECAY_CUTOFF / rho).powf(1.0 / p).min(1.0);
        let head = integrate_finite(
            |u: f64| {
                let q = u.powf(2.0 * a * p);
                p * s * (-rho * u.powf(p)).exp() / (q * q + 2.0 * c * q + 1.0)
            },
            0.0,
            upper,
            &self.quad,
        )?
        .into_value()?;
        if upper < 1.0 {
            return Ok(head);
        }
        // on [1, ∞): k(r) ≤ s / (2 + 2c), so the tail is below s e^{-ρ} / ((2 + 2c) ρ)
        let bound = s / (2.0 + 2.0 * c) * (-rho).exp() / rho;
        if bound < 1e-3 * self.quad.tolerance(head) {
            return Ok(head);
        }
        let tail = integrate_semi_infinite(
            |r: f64| {
                let q = r.powf(2.0 * a);
                (-rho * r).exp() * s * r.powf(2.0 * a - 2.0) / (q * q + 2.0 * c * q + 1.0)
            },
            1.0,
            &self.quad,
        )?
        .into_value()?;
        Ok(head + tail)
    }

    /// `f(λ) = ∫_0^∞ e^{-rρ} k(r) dr`.
    pub fn f_part(&self, lambda: f64) -> Result<f64> {
        if !(lambda >= 0.0) {
            return Err(Error::domain(format!("f needs lambda >= 0, got {lambda}")));
        }
        self.f_of_rho(self.rho(lambda))
    }

    /// `g` as a function of ρ.
    pub fn g_of_rho(&self, rho: f64) -> f64 {
        (rho * self.cos_phi).exp() * (rho * self.sin_phi - self.phi).cos() / self.alpha
    }

    /// `g(λ) = (1/α) e^{ρ cos φ} cos(ρ sin φ - φ)`.
    pub fn g_part(&self, lambda: f64) -> Result<f64> {
        if !(lambda >= 0.0) {
            return Err(Error::domain(format!("g needs lambda >= 0, got {lambda}")));
        }
        Ok(self.g_of_rho(self.rho(lambda)))
    }

    /// ρ of the k-th positive zero of g, `(k + 1/2 + 1/(2α)) π / sin φ`.
    pub fn g_zero_rho(&self, k: i64) -> Result<f64> {
        if k < -1 {
            return Err(Error::domain(format!("zeros of g are indexed from -1, got {k}")));
        }
        Ok((k as f64 + 0.5 + 0.5 / self.alpha) * PI / self.sin_phi)
    }

    /// `g_k = ((k + 1/2 + 1/(2α)) π / sin φ)^{2α}`, k ≥ -1.
    pub fn g_zeros(&self, k: i64) -> Result<f64> {
        self.g_zero_rho(k).map(|rho| self.lambda(rho))
    }

    /// ρ of the k-th extremum of g, `(k + 1/2) π / sin φ`.
    pub fn g_extremum_rho(&self, k: u64) -> f64 {
        (k as f64 + 0.5) * PI / self.sin_phi
    }

    /// `(z_k, g(z_k))` with `z_k = ((k + 1/2) π / sin φ)^{2α}` and
    /// `g(z_k) = (1/α) e^{(k + 1/2) π cot φ} (-1)^k sin φ`.
    pub fn g_extremum(&self, k: u64) -> (f64, f64) {
        let z = self.lambda(self.g_extremum_rho(k));
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        let value = sign * ((k as f64 + 0.5) * PI * self.cot_phi).exp() * self.sin_phi / self.alpha;
        (z, value)
    }

    /// `E_{2α,2}(-λ)` by the power series; requires `|λ| ≤ series_threshold`.
    pub fn char_fn_series(&self, lambda: f64) -> Result<f64> {
        ml_series(&self.ml, -lambda)
    }

    /// `E_{2α,2}(-λ) = (f + g) / ρ` for λ > 0.
    pub fn char_fn_decomposed(&self, lambda: f64) -> Result<f64> {
        if !(lambda > 0.0) || lambda.is_infinite() {
            return Err(Error::domain(format!("decomposition needs finite lambda > 0, got {lambda}")));
        }
        let rho = self.rho(lambda);
        Ok((self.f_of_rho(rho)? + self.g_of_rho(rho)) / rho)
    }

    /// `E_{2α,2}(-λ)` and the route used.
    ///
    /// Series for `λ ≤ 40^{2α}`, the decomposition above. Negative λ
    /// (positive argument) use the series and, beyond the threshold, the
    /// exponential asymptotic expansion.
    pub fn char_fn_with_branch(&self, lambda: f64) -> Result<(f64, Branch)> {
        if lambda.is_nan() {
            return Err(Error::domain("lambda is NaN"));
        }
        if lambda.abs() <= self.series_threshold() {
            return self.char_fn_series(lambda).map(|v| (v, Branch::Series));
        }
        if lambda < 0.0 {
            return ml_with_branch(&self.ml, -lambda);
        }
        self.char_fn_decomposed(lambda).map(|v| (v, Branch::Decomposition))
    }

    /// `E_{2α,2}(-λ)`, the characteristic function whose positive zeros are
    /// the eigenvalues.
    pub fn char_fn(&self, lambda: f64) -> Result<f64> {
        self.char_fn_with_branch(lambda).map(|(v, _)| v)
    }

    /// `|ρ E - f - g|` with `E` from the series, for validating the split.
    pub fn identity_residual(&self, lambda: f64) -> Result<f64> {
        let rho = self.rho(lambda);
        let e = self.char_fn_series(lambda)?;
        Ok((rho * e - self.f_of_rho(rho)? - self.g_of_rho(rho)).abs())
    }
}

/// `E_{δ,θ}(z)` with the decomposition used for `θ = 2`, `1 < δ < 2` and
/// `z < -switch_radius`; otherwise the series/asymptotic dispatch.
pub fn ml_with_decomposition(params: &MLParams, z: f64) -> Result<(f64, Branch)> {
    params.validate()?;
    let (delta, theta) = (params.delta, params.theta);
    if theta == 2.0 && delta > 1.0 && delta < 2.0 && z < -params.switch_radius {
        let ctx = DecompositionContext::new(FractionalOrder::new(delta / 2.0)?)?;
        return ctx.char_fn_decomposed(-z).map(|v| (v, Branch::Decomposition));
    }
    ml_with_branch(params, z)
}
