//! Numerics for the fractional Dirichlet Sturm-Liouville problem
//!
//! ```text
//! -ᶜD^α ∘ D^α y = λ y   on [0, 1],   I^{1-α} y |_{t=0} = I^{1-α} y |_{t=1} = 0
//! ```
//!
//! for `1/2 < α < 1`. Its real eigenvalues are the positive zeros of the
//! Mittag-Leffler function `E_{2α,2}(-λ)`. The crate is organised bottom-up:
//!
//! | module | contents |
//! |--------|----------|
//! | [`specfun`] | Gamma, two-parameter Mittag-Leffler `E_{δ,θ}`, the ψ kernel integral |
//! | [`quadrature`] | adaptive Gauss-Kronrod on finite and semi-infinite intervals |
//! | [`fracops`] | Riemann-Liouville / Caputo operators acting exactly on generalized power series |
//! | [`solutions`] | closed-form fundamental solutions of the three two-term equations |
//! | [`decomposition`] | the split `λ^{1/2α} E_{2α,2}(-λ) = f(λ) + g(λ)` and the characteristic function |
//! | [`spectrum`] | N*, the negative-g intervals, root refinement and the sign-scan oracle |
//!
//! Data-parallel loops (sign scans, per-bracket refinement, multi-α sweeps)
//! go through [`Execution`]; with the `parallel` feature disabled every
//! mode runs sequentially and produces identical output.

pub mod decomposition;
mod dd;
pub mod display;
pub mod error;
pub mod exec;
pub mod fracops;
pub mod order;
pub mod quadrature;
pub mod solutions;
pub mod specfun;
pub mod spectrum;

pub use decomposition::DecompositionContext;
pub use error::{Error, Result};
pub use exec::Execution;
pub use fracops::{GenPowerSeries, Side};
pub use order::FractionalOrder;
pub use quadrature::{QuadratureConfig, QuadratureResult};
pub use specfun::{Branch, MLParams, SectorAngle};
pub use spectrum::{EigenvalueBracket, SpectrumReport};
