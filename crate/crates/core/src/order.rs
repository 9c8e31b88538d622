use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Lowest order accepted by spectrum computations (exclusive).
pub const SPECTRAL_ALPHA_MIN: f64 = 0.5 + 1e-9;
/// Highest order accepted by spectrum computations (exclusive).
pub const SPECTRAL_ALPHA_MAX: f64 = 1.0 - 1e-12;

/// Fractional order α.
///
/// [`FractionalOrder::new`] accepts `0 < α ≤ 1`; α = 1 is the classical
/// limit and is kept so that reductions to ordinary equations can be checked.
/// [`FractionalOrder::spectral`] enforces the narrower range on which the
/// real spectrum is finite.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FractionalOrder(f64);

impl FractionalOrder {
    pub fn new(alpha: f64) -> Result<Self> {
        if alpha.is_finite() && alpha > 0.0 && alpha <= 1.0 {
            Ok(FractionalOrder(alpha))
        } else {
            Err(Error::domain(format!("fractional order must lie in (0, 1], got {alpha}")))
        }
    }

    pub fn spectral(alpha: f64) -> Result<Self> {
        if alpha.is_finite() && alpha > SPECTRAL_ALPHA_MIN && alpha < SPECTRAL_ALPHA_MAX {
            Ok(FractionalOrder(alpha))
        } else {
            Err(Error::domain(format!(
                "spectrum requires 1/2 < alpha < 1 (with margins 1e-9 and 1e-12), got {alpha}"
            )))
        }
    }

    #[inline]
    pub fn value(self) -> f64 {
        self.0
    }

    /// True when α > 1/2, the range where ψ stays bounded at the right endpoint.
    pub fn exceeds_half(self) -> bool {
        self.0 > 0.5
    }
}

impl fmt::Display for FractionalOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}
