//! Fractional integrals and derivatives.
//!
//! On generalized power series the operators act exactly through the power
//! rules
//!
//! ```text
//! I^α (t-a)^{β-1} = Γ(β)/Γ(β+α) (t-a)^{β+α-1}
//! D^α (t-a)^{β-1} = Γ(β)/Γ(β-α) (t-a)^{β-α-1}
//! ```
//!
//! (and their mirror images in `b - t` for right-sided operators), with
//! `1/Γ` taken as exactly zero at its poles. [`rl_integral_numeric`] handles
//! arbitrary integrands by quadrature.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::order::FractionalOrder;
use crate::quadrature::{integrate_finite, QuadratureConfig};
use crate::specfun::{gamma_ratio, rgamma};

/// Which endpoint a series (and the operators acting on it) is anchored at.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// Powers of `t - origin`, acted on by left operators.
    Left,
    /// Powers of `origin - t`, acted on by right operators.
    Right,
}

/// `Σ_k c_k x^{μ + kν}` with `x = t - origin` (left) or `x = origin - t`
/// (right). An empty coefficient list is the zero series.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GenPowerSeries {
    pub base: f64,
    pub step: f64,
    pub coeffs: Vec<f64>,
    pub origin: f64,
    pub side: Side,
}

/// `1/Γ(x)` is treated as zero within this many ulps of a pole, so that
/// exponents assembled as `μ + kν` still annihilate exactly.
const POLE_ULPS: f64 = 64.0;

fn near_pole(x: f64) -> bool {
    let r = x.round();
    r <= 0.0 && (x - r).abs() <= POLE_ULPS * f64::EPSILON * x.abs().max(1.0)
}

impl GenPowerSeries {
    pub fn new(base: f64, step: f64, coeffs: Vec<f64>, origin: f64, side: Side) -> Result<Self> {
        if !(step > 0.0 && step.is_finite()) {
            return Err(Error::domain(format!("series step must be positive, got {step}")));
        }
        if !origin.is_finite() || !base.is_finite() {
            return Err(Error::domain("series base and origin must be finite"));
        }
        let s = GenPowerSeries {
            base,
            step,
            coeffs,
            origin,
            side,
        }
        .normalized();
        if !s.coeffs.is_empty() && s.base <= -1.0 {
            return Err(Error::domain(format!(
                "lowest exponent {} is not integrable at the origin",
                s.base
            )));
        }
        Ok(s)
    }

    /// The zero series.
    pub fn zero(origin: f64, side: Side) -> Self {
        GenPowerSeries {
            base: 0.0,
            step: 1.0,
            coeffs: Vec::new(),
            origin,
            side,
        }
    }

    /// Constant `c`.
    pub fn constant(c: f64, origin: f64, side: Side) -> Self {
        GenPowerSeries {
            base: 0.0,
            step: 1.0,
            coeffs: vec![c],
            origin,
            side,
        }
        .normalized()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0.0)
    }

    /// True for a constant (including zero).
    pub fn is_constant(&self) -> bool {
        self.is_zero() || (self.base == 0.0 && self.coeffs[1..].iter().all(|&c| c == 0.0))
    }

    pub fn exponent(&self, k: usize) -> f64 {
        self.base + k as f64 * self.step
    }

    /// Drops leading and trailing zero coefficients.
    pub fn normalized(mut self) -> Self {
        let lead = self.coeffs.iter().take_while(|&&c| c == 0.0).count();
        if lead == self.coeffs.len() {
            return GenPowerSeries::zero(self.origin, self.side);
        }
        if lead > 0 {
            self.base += lead as f64 * self.step;
            self.coeffs.drain(..lead);
        }
        while self.coeffs.last() == Some(&0.0) {
            self.coeffs.pop();
        }
        self
    }

    /// The same constant anchored at the other endpoint. Only constants
    /// are independent of the anchor.
    pub fn reanchor(&self, origin: f64, side: Side) -> Result<Self> {
        if self.is_zero() {
            return Ok(GenPowerSeries::zero(origin, side));
        }
        if !self.is_constant() {
            return Err(Error::domain("only a constant series can change its anchor"));
        }
        Ok(GenPowerSeries::constant(self.coeffs[0], origin, side))
    }

    /// Distance from the anchor, `t - origin` or `origin - t`.
    fn distance(&self, t: f64) -> f64 {
        match self.side {
            Side::Left => t - self.origin,
            Side::Right => self.origin - t,
        }
    }

    pub fn evaluate(&self, t: f64) -> Result<f64> {
        let x = self.distance(t);
        if !(x >= 0.0) {
            return Err(Error::domain(format!(
                "t = {t} lies on the wrong side of the origin {}",
                self.origin
            )));
        }
        if self.is_zero() {
            return Ok(0.0);
        }
        if x == 0.0 && self.base < 0.0 {
            return Err(Error::domain(format!("series with exponent {} is singular at its origin", self.base)));
        }
        Ok(self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, &c)| if c == 0.0 { 0.0 } else { c * x.powf(self.exponent(k)) })
            .sum())
    }

    /// `|c_last| x^{exponent_last}`, the size of the final retained term at `t`.
    pub fn last_term_magnitude(&self, t: f64) -> f64 {
        match self.coeffs.len() {
            0 => 0.0,
            n => self.coeffs[n - 1].abs() * self.distance(t).abs().powf(self.exponent(n - 1)),
        }
    }

    /// Applies `c_k x^{e_k} → c_k factor(e_k) x^{e_k + shift}` termwise.
    fn map_terms(&self, shift: f64, factor: impl Fn(f64) -> Result<f64>) -> Result<Self> {
        if self.is_zero() {
            return Ok(GenPowerSeries::zero(self.origin, self.side));
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, &c)| if c == 0.0 { Ok(0.0) } else { factor(self.exponent(k)).map(|f| c * f) })
            .collect::<Result<Vec<_>>>()?;
        Ok(GenPowerSeries {
            base: self.base + shift,
            step: self.step,
            coeffs,
            origin: self.origin,
            side: self.side,
        }
        .normalized())
    }

    /// Termwise `d/dt`. Constants vanish.
    pub fn classical_derivative(&self) -> Self {
        let sign = match self.side {
            Side::Left => 1.0,
            Side::Right => -1.0,
        };
        self.map_terms(-1.0, |e| Ok(if e == 0.0 { 0.0 } else { sign * e }))
            .expect("classical derivative of a power never fails")
    }
}

fn power_rule(e: f64, order: f64) -> Result<f64> {
    // Γ(e+1)/Γ(e+1+order)
    let den = e + 1.0 + order;
    if near_pole(den) {
        return Ok(0.0);
    }
    gamma_ratio(e + 1.0, den)
}

/// Fractional integral of order α on the series' own side.
pub fn rl_integral_series(s: &GenPowerSeries, alpha: FractionalOrder) -> Result<GenPowerSeries> {
    let a = alpha.value();
    s.map_terms(a, |e| power_rule(e, a))
}

/// Riemann-Liouville derivative of order α on the series' own side.
pub fn rl_derivative_series(s: &GenPowerSeries, alpha: FractionalOrder) -> Result<GenPowerSeries> {
    let a = alpha.value();
    let out = s.map_terms(-a, |e| power_rule(e, -a))?;
    if !out.is_zero() && out.base <= -1.0 {
        return Err(Error::domain(format!(
            "derivative has non-integrable leading power {}",
            out.base
        )));
    }
    Ok(out)
}

/// Caputo derivative of order α on the series' own side: the classical
/// derivative followed by the fractional integral of order `1 - α`.
pub fn caputo_derivative_series(s: &GenPowerSeries, alpha: FractionalOrder) -> Result<GenPowerSeries> {
    if !s.is_zero() && s.base < 0.0 {
        return Err(Error::domain(format!(
            "Caputo derivative needs non-negative powers, got leading power {}",
            s.base
        )));
    }
    let a = alpha.value();
    // derivative in the anchored variable x: d/dx = d/dt on the left and
    // -d/dt on the right, which absorbs the sign of the right Caputo operator
    let dx = s.map_terms(-1.0, |e| Ok(if e == 0.0 { 0.0 } else { e }))?;
    if a == 1.0 {
        return Ok(dx);
    }
    rl_integral_series(&dx, FractionalOrder::new(1.0 - a)?)
}

/// Left Riemann-Liouville integral `(1/Γ(α)) ∫_a^t f(s) (t-s)^{α-1} ds`.
///
/// The range is split at its midpoint. Near `s = t` the substitution
/// `s = t - u^{1/α}` removes the kernel singularity; near `s = a` the
/// substitution `s = a + w²` softens an integrable singularity of `f`.
pub fn rl_integral_numeric<F>(f: F, alpha: FractionalOrder, a: f64, t: f64, cfg: &QuadratureConfig) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    if !(t >= a) || !a.is_finite() || !t.is_finite() {
        return Err(Error::domain(format!("need finite t >= a, got t = {t}, a = {a}")));
    }
    if t == a {
        return Ok(0.0);
    }
    let al = alpha.value();
    let m = a + 0.5 * (t - a);
    let near_t = integrate_finite(|u: f64| f((t - u.powf(1.0 / al)).max(m)), 0.0, (t - m).powf(al), cfg)?;
    let near_a = integrate_finite(
        |w: f64| {
            let s = a + w * w;
            2.0 * w * f(s) * (t - s).powf(al - 1.0)
        },
        0.0,
        (m - a).sqrt(),
        cfg,
    )?;
    Ok(near_t.into_value()? * rgamma(al + 1.0) + near_a.into_value()? * rgamma(al))
}

/// Which member of the fundamental pair of `-ᶜD^α ∘ D^α y = λ y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Which {
    /// `t^{α-1} E_{2α,α}(-λ t^{2α})`
    Y1,
    /// `t^α E_{2α,α+1}(-λ t^{2α})`
    Y2,
}

/// First `terms` terms of the series of `y1` or `y2`, anchored at 0.
pub fn ml_solution_as_series(alpha: FractionalOrder, lambda: f64, which: Which, terms: usize) -> Result<GenPowerSeries> {
    if terms == 0 {
        return Err(Error::domain("series needs at least one term"));
    }
    if !lambda.is_finite() {
        return Err(Error::domain(format!("lambda must be finite, got {lambda}")));
    }
    let a = alpha.value();
    let (base, shift) = match which {
        Which::Y1 => (a - 1.0, a),
        Which::Y2 => (a, a + 1.0),
    };
    let step = 2.0 * a;
    let coeffs = (0..terms)
        .map(|k| {
            let power = if k == 0 { 1.0 } else { (-lambda).powi(k as i32) };
            power * rgamma(step * k as f64 + shift)
        })
        .collect();
    // built directly: normalizing would drop the k ≥ 1 terms when λ = 0
    Ok(GenPowerSeries {
        base,
        step,
        coeffs,
        origin: 0.0,
        side: Side::Left,
    })
}
