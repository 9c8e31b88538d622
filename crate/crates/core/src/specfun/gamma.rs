use crate::error::{Error, Result};

/// Γ(x) overflows f64 above this argument.
pub const GAMMA_OVERFLOW: f64 = 171.624_376_956_302_7;

/// True when x is a pole of Γ (zero or a negative integer).
#[inline]
pub(crate) fn is_pole(x: f64) -> bool {
    x <= 0.0 && x == x.floor()
}

/// Euler's Gamma function.
///
/// Relative error stays below 1e-13 on [-50, 170] (musl's `tgamma`, whose
/// reflection step uses an exact `sin(πx)` reduction).
pub fn gamma(x: f64) -> Result<f64> {
    if x.is_nan() {
        return Err(Error::domain("gamma of NaN"));
    }
    if is_pole(x) {
        return Err(Error::Pole(x));
    }
    if x > GAMMA_OVERFLOW {
        return Err(Error::Range(format!("gamma({x}) overflows f64")));
    }
    Ok(libm::tgamma(x))
}

/// Reciprocal Gamma 1/Γ(x), an entire function: exactly 0 at the poles of Γ.
pub fn rgamma(x: f64) -> f64 {
    if is_pole(x) {
        return 0.0;
    }
    if x > GAMMA_OVERFLOW {
        return (-libm::lgamma(x)).exp();
    }
    1.0 / libm::tgamma(x)
}

/// `(ln|Γ(x)|, sign Γ(x))`.
pub fn ln_gamma(x: f64) -> Result<(f64, f64)> {
    if is_pole(x) {
        return Err(Error::Pole(x));
    }
    let (lg, sign) = libm::lgamma_r(x);
    Ok((lg, f64::from(sign)))
}

/// Γ(num) / Γ(den). A pole in the denominator gives exactly 0.
pub(crate) fn gamma_ratio(num: f64, den: f64) -> Result<f64> {
    if is_pole(num) {
        return Err(Error::Pole(num));
    }
    if is_pole(den) {
        return Ok(0.0);
    }
    if num.abs() < 170.0 && den.abs() < 170.0 {
        return Ok(libm::tgamma(num) / libm::tgamma(den));
    }
    let (ln, sn) = ln_gamma(num)?;
    let (ld, sd) = ln_gamma(den)?;
    Ok(sn * sd * (ln - ld).exp())
}
