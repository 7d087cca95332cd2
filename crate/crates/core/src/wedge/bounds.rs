use num_complex::Complex64;

use super::{gram_matrix, wedge};
use crate::error::{dim_err, Error, Result};
use crate::CMatrix;

/// Both sides of `‖u₁∧···∧u_j∧x‖ = ‖x − Σ⟨x,uᵢ⟩uᵢ‖`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResidualNorms {
    pub wedge_norm: f64,
    pub residual_norm: f64,
}

const ORTHONORMAL_TOL: f64 = 1e-10;

/// Evaluates both sides of the residual identity for an orthonormal set `us`.
pub fn residual_norm_check<V: AsRef<[Complex64]>>(
    us: &[V],
    x: &[Complex64],
) -> Result<ResidualNorms> {
    if us.iter().any(|u| u.as_ref().len() != x.len()) {
        return Err(dim_err("orthonormal set and vector differ in length"));
    }
    if !us.is_empty() {
        let gram = gram_matrix(us, us)?;
        let deviation = (&gram - CMatrix::identity(us.len(), us.len()))
            .iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max);
        if deviation > ORTHONORMAL_TOL {
            return Err(Error::Precondition {
                what: "vectors are not orthonormal".into(),
                deviation,
            });
        }
    }
    let mut residual = x.to_vec();
    for u in us {
        let u = u.as_ref();
        let c = crate::inner(x, u);
        for (r, ui) in residual.iter_mut().zip(u) {
            *r -= c * ui;
        }
    }
    let mut factors: Vec<&[Complex64]> = us.iter().map(|u| u.as_ref()).collect();
    factors.push(x);
    Ok(ResidualNorms {
        wedge_norm: wedge(&factors)?.norm(),
        residual_norm: crate::norm(&residual),
    })
}

/// `|det A|` together with the column-norm and row-norm products bounding it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HadamardBounds {
    pub det_abs: f64,
    pub column_bound: f64,
    pub row_bound: f64,
}

impl HadamardBounds {
    pub fn holds(&self, slack: f64) -> bool {
        let ok = |bound: f64| self.det_abs <= bound + slack * bound.max(1.0);
        ok(self.column_bound) && ok(self.row_bound)
    }
}

pub fn hadamard_bounds(a: &CMatrix) -> Result<HadamardBounds> {
    if !a.is_square() {
        return Err(dim_err(format!(
            "{}×{} matrix is not square",
            a.nrows(),
            a.ncols()
        )));
    }
    let column_bound = a.column_iter().map(|c| c.norm()).product();
    let row_bound = a.row_iter().map(|r| r.norm()).product();
    Ok(HadamardBounds {
        det_abs: a.clone().determinant().norm(),
        column_bound,
        row_bound,
    })
}

/// Hadamard's inequality for both column and row norms, with `1e-12` relative slack.
pub fn hadamard_check(a: &CMatrix) -> Result<bool> {
    Ok(hadamard_bounds(a)?.holds(1e-12))
}

/// `‖x₁∧···∧x_p‖²` against two upper bounds.
///
/// `unit_ball_bound = Π‖x_j‖·(Σ‖xᵢ‖²)^{1/2}` is valid when every `‖x_j‖ ≤ 1`,
/// the regime used for boundedness of `Λ`. `homogeneous_bound =
/// Π‖x_j‖·(Σ‖xᵢ‖²)^{p/2}` follows from Hadamard plus Cauchy–Schwarz for all
/// inputs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LambdaBound {
    pub wedge_norm_sq: f64,
    pub unit_ball_bound: f64,
    pub homogeneous_bound: f64,
}

pub fn lambda_bound<V: AsRef<[Complex64]>>(xs: &[V]) -> Result<LambdaBound> {
    let norms: Vec<f64> = xs.iter().map(|x| crate::norm(x.as_ref())).collect();
    let prod: f64 = norms.iter().product();
    let total = norms.iter().map(|n| n * n).sum::<f64>().sqrt();
    let w = wedge(xs)?.norm();
    Ok(LambdaBound {
        wedge_norm_sq: w * w,
        unit_ball_bound: prod * total,
        homogeneous_bound: prod * total.powi(xs.len() as i32),
    })
}
