//! Closed-form solutions of the two-term equations
//!
//! ```text
//! (fe1)  ᶜD^α_{b-} ∘ D^α_{a+} y = 0
//! (fe2)  D^α_{b-} ∘ ᶜD^α_{a+} y = 0
//! (fe3)  -ᶜD^α_{0+} ∘ D^α_{0+} y = λ y
//! ```
//!
//! At α = 1 each reduces to its classical counterpart (`-y'' = 0` or
//! `-y'' = λ y`), which the evaluators reproduce.

use serde::{Deserialize, Serialize};

use crate::decomposition::DecompositionContext;
use crate::error::{Error, Result};
use crate::order::FractionalOrder;
use crate::specfun::{ml, psi_kernel_integral, rgamma, MLParams, SERIES_ROOT_LIMIT};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Interval {
    a: f64,
    b: f64,
}

impl Interval {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        if a.is_finite() && b.is_finite() && a < b {
            Ok(Interval { a, b })
        } else {
            Err(Error::domain(format!("interval needs a < b, got [{a}, {b}]")))
        }
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn len(&self) -> f64 {
        self.b - self.a
    }

    fn check_closed(&self, t: f64) -> Result<()> {
        if t >= self.a && t <= self.b {
            Ok(())
        } else {
            Err(Error::domain(format!("t = {t} outside [{}, {}]", self.a, self.b)))
        }
    }
}

/// `(y1, y2) = ((t-a)^{α-1}/Γ(α), (t-a)^α/Γ(α+1))` for `a < t ≤ b`.
pub fn fe1_fss(alpha: FractionalOrder, interval: Interval, t: f64) -> Result<(f64, f64)> {
    interval.check_closed(t)?;
    if t == interval.a {
        return Err(Error::domain(format!("y1 is singular at t = a = {t}")));
    }
    let a = alpha.value();
    let x = t - interval.a;
    Ok((x.powf(a - 1.0) * rgamma(a), x.powf(a) * rgamma(a + 1.0)))
}

/// `W(y1, y2)(t) = (1/α) (t-a)^{2α-2} / Γ(α)²` for `t > a`.
pub fn fe1_wronskian(alpha: FractionalOrder, interval: Interval, t: f64) -> Result<f64> {
    interval.check_closed(t)?;
    if t == interval.a {
        return Err(Error::domain("the Wronskian is singular at t = a"));
    }
    let a = alpha.value();
    let rg = rgamma(a);
    Ok((t - interval.a).powf(2.0 * a - 2.0) * rg * rg / a)
}

/// Value of ψ at `t = b` for α > 1/2: `(b-a)^{2α-1} / ((2α-1) Γ(α)²)`.
fn psi_at_b(a: f64, len: f64) -> f64 {
    let rg = rgamma(a);
    len.powf(2.0 * a - 1.0) * rg * rg / (2.0 * a - 1.0)
}

/// `ψ(t; a, b, α) = ((b-t)^{2α-1}/Γ(α)²) ∫_1^{(b-a)/(b-t)} (w-1)^{α-1} w^{α-1} dw`.
///
/// `ψ(a) = 0`. At `t = b` the limit is returned for α > 1/2; for α ≤ 1/2 ψ
/// has no finite limit there and `t = b` is a domain error.
pub fn psi(alpha: FractionalOrder, interval: Interval, t: f64) -> Result<f64> {
    interval.check_closed(t)?;
    let a = alpha.value();
    if t == interval.a {
        return Ok(0.0);
    }
    if t == interval.b {
        if !alpha.exceeds_half() {
            return Err(Error::domain(format!("psi diverges at t = b for alpha = {a} <= 1/2")));
        }
        return Ok(psi_at_b(a, interval.len()));
    }
    let rest = interval.b - t;
    let rg = rgamma(a);
    Ok(rest.powf(2.0 * a - 1.0) * rg * rg * psi_kernel_integral(alpha, interval.len() / rest)?)
}

/// Boundary data of the (fe2) problem: `y(a) = y_a`, `y(b) = y_b`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Fe2Solution {
    pub y_a: f64,
    pub y_b: f64,
    alpha: FractionalOrder,
    interval: Interval,
}

impl Fe2Solution {
    /// Requires α > 1/2, where ψ(b) is finite.
    pub fn new(y_a: f64, y_b: f64, alpha: FractionalOrder, interval: Interval) -> Result<Self> {
        if !alpha.exceeds_half() {
            return Err(Error::domain(format!(
                "the two-point (fe2) solution needs alpha > 1/2, got {alpha}"
            )));
        }
        Ok(Fe2Solution {
            y_a,
            y_b,
            alpha,
            interval,
        })
    }

    pub fn alpha(&self) -> FractionalOrder {
        self.alpha
    }

    pub fn interval(&self) -> Interval {
        self.interval
    }
}

/// `y(a) + (y(b) - y(a)) (2α-1) ((b-t)/(b-a))^{2α-1} ∫_1^{(b-a)/(b-t)} (w-1)^{α-1} w^{α-1} dw`.
pub fn fe2_general_solution(sol: &Fe2Solution, t: f64) -> Result<f64> {
    let iv = sol.interval;
    iv.check_closed(t)?;
    if t == iv.a {
        return Ok(sol.y_a);
    }
    if t == iv.b {
        return Ok(sol.y_b);
    }
    let a = sol.alpha.value();
    let x = iv.len() / (iv.b - t);
    let weight = (2.0 * a - 1.0) * x.powf(1.0 - 2.0 * a) * psi_kernel_integral(sol.alpha, x)?;
    Ok(sol.y_a + (sol.y_b - sol.y_a) * weight)
}

/// Parameters for the solution evaluators: the series is kept for as long
/// as it is accurate.
fn solution_params(delta: f64, theta: f64) -> Result<MLParams> {
    MLParams::new(delta, theta)?.with_switch_radius(SERIES_ROOT_LIMIT.powf(delta))
}

/// `(y1, y2) = (t^{α-1} E_{2α,α}(-λt^{2α}), t^α E_{2α,α+1}(-λt^{2α}))`.
///
/// `y1` is singular at `t = 0` for α < 1, so `t = 0` is only accepted at α = 1.
pub fn fe3_fss(alpha: FractionalOrder, lambda: f64, t: f64) -> Result<(f64, f64)> {
    let y1 = fe3_y1(alpha, lambda, t)?;
    let y2 = fe3_y2(alpha, lambda, t)?;
    Ok((y1, y2))
}

fn fe3_check(lambda: f64, t: f64) -> Result<()> {
    if !lambda.is_finite() {
        return Err(Error::domain(format!("lambda must be finite, got {lambda}")));
    }
    if !(t >= 0.0) || t.is_infinite() {
        return Err(Error::domain(format!("t must be finite and non-negative, got {t}")));
    }
    Ok(())
}

fn fe3_y1(alpha: FractionalOrder, lambda: f64, t: f64) -> Result<f64> {
    fe3_check(lambda, t)?;
    let a = alpha.value();
    if t == 0.0 {
        return if a == 1.0 {
            Ok(1.0)
        } else {
            Err(Error::domain("y1 is singular at t = 0"))
        };
    }
    let z = -lambda * t.powf(2.0 * a);
    Ok(t.powf(a - 1.0) * ml(&solution_params(2.0 * a, a)?, z)?)
}

fn fe3_y2(alpha: FractionalOrder, lambda: f64, t: f64) -> Result<f64> {
    fe3_check(lambda, t)?;
    if t == 0.0 {
        return Ok(0.0);
    }
    let a = alpha.value();
    let z = -lambda * t.powf(2.0 * a);
    Ok(t.powf(a) * ml(&solution_params(2.0 * a, a + 1.0)?, z)?)
}

/// `c1 y1(t) + c2 y2(t)`. With `c1 = 0` the singular `y1` is not evaluated.
pub fn fe3_general_solution(alpha: FractionalOrder, lambda: f64, c1: f64, c2: f64, t: f64) -> Result<f64> {
    let y1 = if c1 == 0.0 { 0.0 } else { c1 * fe3_y1(alpha, lambda, t)? };
    let y2 = if c2 == 0.0 { 0.0 } else { c2 * fe3_y2(alpha, lambda, t)? };
    Ok(y1 + y2)
}

/// `I^{1-α} y2 |_{t=1} = E_{2α,2}(-λ)`, the boundary value whose zeros are
/// the eigenvalues. α = 1 gives `sin√λ/√λ`.
pub fn bc_value(alpha: FractionalOrder, lambda: f64) -> Result<f64> {
    let ctx = if alpha.value() == 1.0 {
        DecompositionContext::classical()
    } else {
        DecompositionContext::new(FractionalOrder::spectral(alpha.value())?)?
    };
    ctx.char_fn(lambda)
}
