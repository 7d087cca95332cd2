//! Vector-valued trigonometric polynomials on the unit circle `𝕋`, their
//! Hardy-space (nonnegative frequency) subspace, and the pointwise operations
//! between them.
//!
//! A series `f(z) = Σ_{k=kmin}^{kmax} c_k z^k` is stored by its coefficient
//! vectors `c_k ∈ ℂᵐ`. On `𝕋`, negative powers mean conjugate powers,
//! `z^{−n} = z̄ⁿ`. Products and wedges extend the support additively; nothing
//! is truncated unless [`VecTrigPoly::truncate`] is called.

mod json;
mod norms;
mod pointwise;
mod series;
mod symbol;

pub use json::{SeriesJson, SymbolJson};
pub use norms::{autocorrelation, is_inner, linf_upper_bound, lp_norm, min_samples, LpExponent};
pub use pointwise::{pointwise_wedge, WedgeSeries};
pub use series::{circle_point, VecTrigPoly, CIRCLE_TOL};
pub use symbol::{rank_one_symbol, MatSymbol};
