use num_complex::Complex64;

use super::space::{OperatorMatrix, SpaceDescriptor};
use crate::error::{dim_err, Error, Result};
use crate::hardy::{pointwise_wedge, MatSymbol, VecTrigPoly};
use crate::wedge::WedgeVector;
use crate::CMatrix;

const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// `T_G` compressed to `H²_N`: block `(r, c)` is `G_{r−c}`.
pub fn toeplitz(g: &MatSymbol, degree: usize) -> Result<OperatorMatrix> {
    let domain = SpaceDescriptor::hardy(g.cols(), degree)?;
    let codomain = SpaceDescriptor::hardy(g.rows(), degree)?;
    let mut m = CMatrix::zeros(codomain.dim(), domain.dim());
    for r in 0..=degree {
        for c in 0..=degree {
            if let Some(block) = g.coeff(r as i64 - c as i64) {
                m.view_mut(
                    (codomain.index(r, 0), domain.index(c, 0)),
                    (g.rows(), g.cols()),
                )
                .copy_from(block);
            }
        }
    }
    OperatorMatrix::new(domain, codomain, m)
}

/// `C_ξ : H²_N(ℂᵈ) → H²_{N+deg ξ}(∧²ℂᵈ)`, `f ↦ ξ ∧̇ f`. Nothing is truncated.
pub fn creation(xi: &VecTrigPoly, degree: usize) -> Result<OperatorMatrix> {
    multi_creation(std::slice::from_ref(xi), degree)
}

/// `f ↦ ξ₀ ∧̇ ··· ∧̇ ξ_j ∧̇ f` into `H²_{N+deg Ξ}(∧^{j+2}ℂᵈ)` where
/// `Ξ = ξ₀ ∧̇ ··· ∧̇ ξ_j`.
pub fn multi_creation(xis: &[VecTrigPoly], degree: usize) -> Result<OperatorMatrix> {
    if let Some(bad) = xis.iter().find(|x| !x.is_analytic()) {
        return Err(Error::Domain(format!(
            "creation symbol has negative frequencies down to {}",
            bad.kmin()
        )));
    }
    let big_xi = pointwise_wedge(xis)?;
    let dim = big_xi.dim();
    let q = big_xi.grade();
    let coeffs = big_xi.series().trimmed();
    let deg = coeffs.kmax().max(0) as usize;
    let domain = SpaceDescriptor::hardy(dim, degree)?;
    let codomain = SpaceDescriptor::wedge(dim, q + 1, degree + deg)?;
    let out = codomain.valdim();
    let mut m = CMatrix::zeros(codomain.dim(), domain.dim());
    let mut e = vec![Complex64::new(0.0, 0.0); dim];
    for (l, w) in coeffs.iter() {
        let w = WedgeVector::from_coords(dim, q, w.to_vec())?;
        for i in 0..dim {
            e[i] = ONE;
            let col = w.wedge_vector(&e)?;
            e[i] = Complex64::new(0.0, 0.0);
            for k in 0..=degree {
                let row = codomain.index(k + l as usize, 0);
                m.view_mut((row, domain.index(k, i)), (out, 1))
                    .iter_mut()
                    .zip(col.coords())
                    .for_each(|(a, b)| *a = *b);
            }
        }
    }
    OperatorMatrix::new(domain, codomain, m)
}

fn scalar_space(degree: usize) -> SpaceDescriptor {
    SpaceDescriptor::hardy(1, degree).expect("valdim 1")
}

/// `S` on scalar `H²_N`, truncated: `z^k ↦ z^{k+1}` for `k < N`, `z^N ↦ 0`.
pub fn shift(degree: usize) -> OperatorMatrix {
    let s = scalar_space(degree);
    let m = CMatrix::from_fn(s.dim(), s.dim(), |r, c| {
        if r == c + 1 {
            ONE
        } else {
            Complex64::new(0.0, 0.0)
        }
    });
    OperatorMatrix::new(s, s, m).expect("square")
}

/// `S*`: `z^k ↦ z^{k−1}`, `1 ↦ 0`.
pub fn backward_shift(degree: usize) -> OperatorMatrix {
    shift(degree).adjoint()
}

/// `P₀`: projection onto constants.
pub fn constant_projection(degree: usize) -> OperatorMatrix {
    let s = scalar_space(degree);
    let mut m = CMatrix::zeros(s.dim(), s.dim());
    m[(0, 0)] = ONE;
    OperatorMatrix::new(s, s, m).expect("square")
}

/// Operator on `H²(ℂⁿ)` acting on components: `blocks[a][b]` is the scalar
/// operator carrying component `b` into component `a`.
pub fn componentwise(blocks: &[Vec<OperatorMatrix>]) -> Result<OperatorMatrix> {
    let rows = blocks.len();
    let cols = blocks.first().map_or(0, Vec::len);
    if rows == 0 || cols == 0 || blocks.iter().any(|r| r.len() != cols) {
        return Err(dim_err(
            "componentwise operator needs a full rectangular block array",
        ));
    }
    let first = &blocks[0][0];
    let (nd, nc) = (first.domain().degree(), first.codomain().degree());
    for b in blocks.iter().flatten() {
        if b.domain() != scalar_space(nd) || b.codomain() != scalar_space(nc) {
            return Err(dim_err(
                "componentwise blocks must be scalar with a common degree",
            ));
        }
    }
    let domain = SpaceDescriptor::hardy(cols, nd)?;
    let codomain = SpaceDescriptor::hardy(rows, nc)?;
    let m = CMatrix::from_fn(codomain.dim(), domain.dim(), |r, c| {
        blocks[r % rows][c % cols].entries()[(r / rows, c / cols)]
    });
    OperatorMatrix::new(domain, codomain, m)
}
