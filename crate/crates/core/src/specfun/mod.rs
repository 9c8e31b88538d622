//! Special functions: Euler Gamma, the two-parameter Mittag-Leffler function
//! on the real axis, and the kernel integral behind ψ.

mod gamma;
mod kernel;
mod mittag_leffler;

use serde::{Deserialize, Serialize};

pub use gamma::{gamma, ln_gamma, rgamma, GAMMA_OVERFLOW};
pub(crate) use gamma::gamma_ratio;
pub use kernel::psi_kernel_integral;
pub use mittag_leffler::{
    ml, ml_asymptotic, ml_classic, ml_series, ml_with_branch, MLParams, SectorAngle,
    ASYMPTOTIC_DELTA_MAX, SERIES_ROOT_LIMIT,
};

/// Which evaluation route produced a Mittag-Leffler value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Branch {
    Series,
    Asymptotic,
    Decomposition,
}

impl Branch {
    pub fn as_str(self) -> &'static str {
        match self {
            Branch::Series => "series",
            Branch::Asymptotic => "asymptotic",
            Branch::Decomposition => "decomposition",
        }
    }
}
