use std::f64::consts::PI;

use super::series::{circle_point, VecTrigPoly};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LpExponent {
    One,
    Two,
    Infinity,
}

/// Fewest circle samples accepted by [`lp_norm`]: eight per stored frequency.
pub fn min_samples(f: &VecTrigPoly) -> usize {
    8 * f.bandwidth()
}

fn sampled_norms(f: &VecTrigPoly, samples: usize) -> Result<Vec<f64>> {
    if samples < min_samples(f) {
        return Err(Error::Precondition {
            what: format!(
                "{samples} samples for bandwidth {} (need at least {})",
                f.bandwidth(),
                min_samples(f)
            ),
            deviation: (min_samples(f) - samples) as f64,
        });
    }
    (0..samples)
        .map(|j| {
            let z = circle_point(2.0 * PI * j as f64 / samples as f64);
            f.eval(z).map(|v| crate::norm(&v))
        })
        .collect()
}

/// `‖f‖_{Lᵖ(𝕋)}` for `p ∈ {1, 2, ∞}`.
///
/// `p = 2` is exact (Parseval) and ignores `samples`. `p = 1` is the
/// trapezoid rule on `samples` equispaced points, which converges
/// geometrically while `‖f(z)‖` stays away from zero on `𝕋`. `p = ∞` is the
/// sampled maximum, a lower bound; [`linf_upper_bound`] gives the matching
/// upper bound.
pub fn lp_norm(f: &VecTrigPoly, p: LpExponent, samples: usize) -> Result<f64> {
    match p {
        LpExponent::Two => Ok(f.l2_norm()),
        LpExponent::One => {
            let norms = sampled_norms(f, samples)?;
            Ok(norms.iter().sum::<f64>() / samples as f64)
        }
        LpExponent::Infinity => Ok(sampled_norms(f, samples)?.into_iter().fold(0.0, f64::max)),
    }
}

/// Upper bound for `‖f‖_∞` from `samples` equispaced values.
///
/// `T(θ) = ‖f(e^{iθ})‖²` is a real trigonometric polynomial of degree
/// `D = kmax − kmin`, so Bernstein's inequality `‖T′‖_∞ ≤ D‖T‖_∞` gives
/// `‖T‖_∞ ≤ max_j T(θ_j) / (1 − πD/K)`.
pub fn linf_upper_bound(f: &VecTrigPoly, samples: usize) -> Result<f64> {
    let max = lp_norm(f, LpExponent::Infinity, samples)?;
    let degree = (f.kmax() - f.kmin()) as f64;
    let shrink = 1.0 - PI * degree / samples as f64;
    Ok(max / shrink.sqrt())
}

/// Coefficients of `z ↦ ‖ξ(z)‖²` on `𝕋`: `a_k = Σ_j ⟨ξ_{j+k}, ξ_j⟩`.
pub fn autocorrelation(xi: &VecTrigPoly) -> VecTrigPoly {
    xi.pointwise_inner(xi).expect("same valdim")
}

/// True iff `ξ` is analytic and its autocorrelation is the unit delta at
/// frequency 0 to within `tol` in every coefficient.
pub fn is_inner(xi: &VecTrigPoly, tol: f64) -> bool {
    if !xi.is_analytic() {
        return false;
    }
    autocorrelation(xi).iter().all(|(k, a)| {
        let target = if k == 0 { 1.0 } else { 0.0 };
        (a[0] - target).norm() <= tol
    })
}
