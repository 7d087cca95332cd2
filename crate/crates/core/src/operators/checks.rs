use num_complex::Complex64;
use rand::Rng;

use super::build::{
    backward_shift, componentwise, constant_projection, creation, multi_creation, shift, toeplitz,
};
use super::space::{OperatorMatrix, SpaceDescriptor};
use super::subspace::{poc_basis, Subspace, NULLSPACE_RTOL};
use crate::error::{dim_err, Error, Result};
use crate::families::{complex_normal, inner_example, random_series};
use crate::hardy::{autocorrelation, pointwise_wedge, rank_one_symbol, VecTrigPoly};

/// Tolerance for norm equalities and for the inner / orthonormality
/// preconditions.
pub const EQUALITY_TOL: f64 = 1e-10;

fn negative_part(xi: &VecTrigPoly) -> f64 {
    xi.iter()
        .filter(|(k, _)| *k < 0)
        .map(|(_, c)| crate::norm(c))
        .fold(0.0, f64::max)
}

/// Fails unless `ξ` is analytic with `‖ξ(z)‖ = 1` on `𝕋` to `tol`, reporting
/// the largest coefficient deviation.
pub fn require_inner(xi: &VecTrigPoly, tol: f64) -> Result<()> {
    let neg = negative_part(xi);
    let dev = autocorrelation(xi)
        .iter()
        .map(|(k, a)| (a[0] - if k == 0 { 1.0 } else { 0.0 }).norm())
        .fold(neg, f64::max);
    if dev > tol {
        return Err(Error::Precondition {
            what: "symbol is not inner".into(),
            deviation: dev,
        });
    }
    Ok(())
}

/// Largest coefficient deviation of the Gram series `⟨ξᵢ(z), ξ_k(z)⟩` from
/// `δ_{ik}`, together with any negative-frequency content.
pub fn pointwise_orthonormality_deviation(xis: &[VecTrigPoly]) -> Result<f64> {
    let mut dev = xis.iter().map(negative_part).fold(0.0, f64::max);
    for (i, a) in xis.iter().enumerate() {
        for (k, b) in xis.iter().enumerate() {
            for (m, g) in a.pointwise_inner(b)?.iter() {
                let target = if i == k && m == 0 { 1.0 } else { 0.0 };
                dev = dev.max((g[0] - target).norm());
            }
        }
    }
    Ok(dev)
}

/// `max |C_ξ*C_ξ − (I − T_{ξξ*})|` on `H²_N`.
pub fn verify_toeplitz_identity(xi: &VecTrigPoly, degree: usize) -> Result<f64> {
    require_inner(xi, EQUALITY_TOL)?;
    let c = creation(xi, degree)?;
    let lhs = c.adjoint().compose(&c)?;
    let t = toeplitz(&rank_one_symbol(xi, xi)?, degree)?;
    let rhs = OperatorMatrix::identity(t.domain()).sub(&t)?;
    lhs.max_abs_diff(&rhs)
}

/// `C_ξ*(f ∧̇ g)` in `H²_N` by the pointwise formula: the truncation to
/// degrees `0..=N` of `P₊α` with `α = ⟨f, ξ⟩g − ⟨g, ξ⟩f`.
pub fn adjoint_on_wedge(
    xi: &VecTrigPoly,
    f: &VecTrigPoly,
    g: &VecTrigPoly,
    degree: usize,
) -> Result<VecTrigPoly> {
    for (name, s) in [("ξ", xi), ("f", f), ("g", g)] {
        if !s.is_analytic() {
            return Err(Error::Domain(format!("{name} has negative frequencies")));
        }
    }
    if f.valdim() != xi.valdim() || g.valdim() != xi.valdim() {
        return Err(dim_err("ξ, f and g must share a coefficient space"));
    }
    let top = degree as i64 + xi.trimmed().kmax().max(0);
    let wedge_top = pointwise_wedge(&[f.clone(), g.clone()])?
        .series()
        .trimmed()
        .kmax();
    if wedge_top > top {
        return Err(dim_err(format!(
            "f ∧̇ g has degree {wedge_top}, beyond the codomain degree {top}"
        )));
    }
    let alpha = g
        .scalar_mul(&f.pointwise_inner(xi)?)?
        .sub(&f.scalar_mul(&g.pointwise_inner(xi)?)?)?;
    alpha.riesz_project().truncate(0, degree as i64)
}

fn random_unit_in<R: Rng + ?Sized>(rng: &mut R, poc: &Subspace) -> Result<VecTrigPoly> {
    let coeffs: Vec<Complex64> = (0..poc.dim()).map(|_| complex_normal(rng)).collect();
    let n = crate::norm(&coeffs);
    poc.combination(&coeffs.iter().map(|z| z / n).collect::<Vec<_>>())
}

fn random_unit_general<R: Rng + ?Sized>(rng: &mut R, space: &SpaceDescriptor) -> VecTrigPoly {
    let h = random_series(rng, space.valdim(), 0, space.degree() as i64);
    let n = h.l2_norm();
    h.scale(Complex64::new(1.0 / n, 0.0))
}

/// Outcome of [`isometry_set_check`].
#[derive(Debug, Clone, PartialEq)]
pub struct IsometryReport {
    pub poc_dimension: usize,
    pub trials: usize,
    /// Trials whose `h` satisfied the coefficient criterion for Poc.
    pub members: usize,
    /// `max |‖C_ξh‖ − ‖h‖|` over members.
    pub max_equality_deviation: f64,
    /// `min (‖h‖ − ‖C_ξh‖)` over non-members; `∞` if there were none.
    pub min_margin: f64,
    /// Trials where norm equality and Poc membership disagree.
    pub misclassified: usize,
}

/// Samples `h` alternately from the computed Poc and from all of `H²_N`, and
/// checks that `‖C_ξh‖ = ‖h‖` exactly for the former and strictly fails for
/// the latter. Membership is decided by the coefficients of `⟨h, ξ⟩`, not by
/// the computed basis.
pub fn isometry_set_check<R: Rng + ?Sized>(
    xi: &VecTrigPoly,
    degree: usize,
    trials: usize,
    rng: &mut R,
) -> Result<IsometryReport> {
    require_inner(xi, EQUALITY_TOL)?;
    let c = creation(xi, degree)?;
    let space = c.domain();
    let poc = poc_basis(&space, std::slice::from_ref(xi), NULLSPACE_RTOL)?;
    let mut report = IsometryReport {
        poc_dimension: poc.dim(),
        trials,
        members: 0,
        max_equality_deviation: 0.0,
        min_margin: f64::INFINITY,
        misclassified: 0,
    };
    for t in 0..trials {
        let h = if t % 2 == 0 && poc.dim() > 0 {
            random_unit_in(rng, &poc)?
        } else {
            random_unit_general(rng, &space)
        };
        let member = h
            .pointwise_inner(xi)?
            .iter()
            .all(|(_, a)| a[0].norm() <= EQUALITY_TOL);
        let hn = h.l2_norm();
        let cn = c.apply(&h)?.l2_norm();
        let equal = (cn - hn).abs() <= EQUALITY_TOL;
        if member {
            report.members += 1;
            report.max_equality_deviation = report.max_equality_deviation.max((cn - hn).abs());
        } else {
            report.min_margin = report.min_margin.min(hn - cn);
        }
        if member != equal || cn > hn + EQUALITY_TOL {
            report.misclassified += 1;
        }
    }
    Ok(report)
}

/// Outcome of [`multiwedge_isometry_check`].
#[derive(Debug, Clone, PartialEq)]
pub struct MultiwedgeReport {
    pub poc_dimension: usize,
    pub trials: usize,
    /// `max |‖Ξ ∧̇ f‖ − ‖f‖|` over `f` in the computed Poc.
    pub max_equality_deviation: f64,
    /// `max (‖Ξ ∧̇ f‖ − ‖f‖)` over general `f`; nonpositive when the map
    /// contracts.
    pub max_contraction_excess: f64,
}

/// For a pointwise-orthonormal family: `f ↦ ξ₀ ∧̇ ··· ∧̇ ξ_j ∧̇ f` preserves
/// norms on `Poc(xis, H²_N)` and contracts everywhere. Runs `trials` samples
/// of each kind.
pub fn multiwedge_isometry_check<R: Rng + ?Sized>(
    xis: &[VecTrigPoly],
    degree: usize,
    trials: usize,
    rng: &mut R,
) -> Result<MultiwedgeReport> {
    let dev = pointwise_orthonormality_deviation(xis)?;
    if dev > EQUALITY_TOL {
        return Err(Error::Precondition {
            what: "family is not pointwise orthonormal".into(),
            deviation: dev,
        });
    }
    let op = multi_creation(xis, degree)?;
    let space = op.domain();
    let poc = poc_basis(&space, xis, NULLSPACE_RTOL)?;
    let mut report = MultiwedgeReport {
        poc_dimension: poc.dim(),
        trials,
        max_equality_deviation: 0.0,
        max_contraction_excess: f64::NEG_INFINITY,
    };
    for _ in 0..trials {
        if poc.dim() > 0 {
            let f = random_unit_in(rng, &poc)?;
            let d = (op.apply(&f)?.l2_norm() - f.l2_norm()).abs();
            report.max_equality_deviation = report.max_equality_deviation.max(d);
        }
        let f = random_unit_general(rng, &space);
        let excess = op.apply(&f)?.l2_norm() - f.l2_norm();
        report.max_contraction_excess = report.max_contraction_excess.max(excess);
    }
    Ok(report)
}

/// Outcome of [`partial_isometry_counterexample`].
#[derive(Debug, Clone, PartialEq)]
pub struct ShiftReport {
    pub degree: usize,
    /// `A = C_ξ*C_ξ` against `½[[1, −S*], [−S, 1]]` on degrees `≤ N−1`.
    pub formula_deviation: f64,
    /// `A²` against `½[[1, −S*], [−S, 1 − ½P₀]]` on degrees `≤ N−1`.
    pub square_deviation: f64,
    /// `‖A² − A‖` on degrees `≤ N−1`.
    pub defect_norm: f64,
    pub self_adjoint_deviation: f64,
    pub min_eigenvalue: f64,
    pub max_eigenvalue: f64,
}

/// For `ξ = (1, z)/√2`, `A = C_ξ*C_ξ` is a positive contraction with
/// `A² ≠ A`, so `C_ξ` is not a partial isometry.
pub fn partial_isometry_counterexample(degree: usize) -> Result<ShiftReport> {
    if degree < 2 {
        return Err(Error::Invalid(format!("need N ≥ 2, got {degree}")));
    }
    let c = creation(&inner_example(), degree)?;
    let a = c.adjoint().compose(&c)?;
    let a2 = a.compose(&a)?;

    let half = Complex64::new(0.5, 0.0);
    let one = OperatorMatrix::identity(shift(degree).domain());
    let s = shift(degree);
    let s_adj = backward_shift(degree);
    let minus = |m: &OperatorMatrix| m.scale(Complex64::new(-1.0, 0.0));
    let b = componentwise(&[
        vec![one.clone(), minus(&s_adj)],
        vec![minus(&s), one.clone()],
    ])?
    .scale(half);
    let corner = one.sub(&constant_projection(degree).scale(half))?;
    let b2 = componentwise(&[vec![one, minus(&s_adj)], vec![minus(&s), corner]])?.scale(half);

    let low = degree - 1;
    let ar = a.restrict_domain(low)?;
    let eig = a.entries().clone().symmetric_eigenvalues();
    Ok(ShiftReport {
        degree,
        formula_deviation: ar.max_abs_diff(&b.restrict_domain(low)?)?,
        square_deviation: a2
            .restrict_domain(low)?
            .max_abs_diff(&b2.restrict_domain(low)?)?,
        defect_norm: a2.restrict_domain(low)?.sub(&ar)?.op_norm(),
        self_adjoint_deviation: a.max_abs_diff(&a.adjoint())?,
        min_eigenvalue: eig.iter().copied().fold(f64::INFINITY, f64::min),
        max_eigenvalue: eig.iter().copied().fold(f64::NEG_INFINITY, f64::max),
    })
}
