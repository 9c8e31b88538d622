use crate::error::{Error, Result};
use crate::order::FractionalOrder;
use crate::quadrature::{integrate_finite, QuadratureConfig};

/// `∫_1^x (w-1)^{α-1} w^{α-1} dw` for `x ≥ 1`.
///
/// With `w = 1 + u^{1/α}` the endpoint singularity disappears and the
/// integral becomes `(1/α) ∫_0^{(x-1)^α} (1 + u^{1/α})^{α-1} du`.
pub fn psi_kernel_integral(alpha: FractionalOrder, x: f64) -> Result<f64> {
    if !(x >= 1.0) || x.is_infinite() {
        return Err(Error::domain(format!("kernel integral needs finite x >= 1, got {x}")));
    }
    let a = alpha.value();
    if x == 1.0 {
        return Ok(0.0);
    }
    let upper = (x - 1.0).powf(a);
    let cfg = QuadratureConfig {
        abs_tol: 1e-13,
        rel_tol: 1e-13,
        ..QuadratureConfig::default()
    };
    let r = integrate_finite(|u: f64| (1.0 + u.powf(1.0 / a)).powf(a - 1.0), 0.0, upper, &cfg)?;
    r.into_value().map(|v| v / a)
}
