//! Exterior powers of `ℂᵈ`, pointwise wedge products of vector-valued
//! trigonometric polynomials, and finite matrix realizations of pointwise
//! creation operators and Toeplitz operators on truncated Hardy spaces.
//!
//! All function-space objects are finitely supported Fourier series, so the
//! identities between them (adjoint formulas, Toeplitz compressions, pointwise
//! orthogonality) hold as exact coefficient identities up to floating point
//! rounding.
//!
//! Inner products are linear in the first argument and conjugate-linear in the
//! second.

pub mod error;
pub mod families;
pub mod hardy;
pub mod operators;
pub mod wedge;

pub use num_complex::Complex64;

pub use error::{Error, Result};

/// Dense complex matrix used throughout the crate.
pub type CMatrix = nalgebra::DMatrix<Complex64>;

/// `⟨x, y⟩ = Σ xᵢ·conj(yᵢ)`.
pub fn inner(x: &[Complex64], y: &[Complex64]) -> Complex64 {
    x.iter().zip(y).map(|(a, b)| a * b.conj()).sum()
}

pub fn norm(x: &[Complex64]) -> f64 {
    x.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
}

/// Binomial coefficient `C(n, k)`; zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

pub(crate) fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// Largest entry modulus of a complex matrix.
pub fn max_abs(m: &CMatrix) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}
