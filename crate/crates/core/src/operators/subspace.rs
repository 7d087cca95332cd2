use num_complex::Complex64;

use super::build::creation;
use super::space::SpaceDescriptor;
use crate::error::{dim_err, Error, Result};
use crate::hardy::VecTrigPoly;
use crate::wedge::wedge;
use crate::CMatrix;

/// Singular values below this fraction of the largest count as zero.
pub const NULLSPACE_RTOL: f64 = 1e-10;

/// Subspace of a truncated Hardy space, held as an orthonormal basis.
#[derive(Debug, Clone, PartialEq)]
pub struct Subspace {
    space: SpaceDescriptor,
    basis: CMatrix,
    degenerate: bool,
}

impl Subspace {
    pub fn new(space: SpaceDescriptor, basis: CMatrix, degenerate: bool) -> Result<Self> {
        if basis.nrows() != space.dim() {
            return Err(dim_err(format!(
                "basis vectors of length {} in a space of dimension {}",
                basis.nrows(),
                space.dim()
            )));
        }
        Ok(Self {
            space,
            basis,
            degenerate,
        })
    }

    pub fn space(&self) -> SpaceDescriptor {
        self.space
    }

    pub fn dim(&self) -> usize {
        self.basis.ncols()
    }

    /// Orthonormal basis, one vector per column.
    pub fn basis(&self) -> &CMatrix {
        &self.basis
    }

    /// Set when an input made the question trivial (e.g. `ξ ≡ 0`).
    pub fn is_degenerate(&self) -> bool {
        self.degenerate
    }

    pub fn basis_series(&self) -> Vec<VecTrigPoly> {
        self.basis
            .column_iter()
            .map(|c| self.space.to_series(c.as_slice()).expect("matching length"))
            .collect()
    }

    /// `Σ cᵢ bᵢ`.
    pub fn combination(&self, coeffs: &[Complex64]) -> Result<VecTrigPoly> {
        if coeffs.len() != self.dim() {
            return Err(dim_err(format!(
                "{} coefficients for a subspace of dimension {}",
                coeffs.len(),
                self.dim()
            )));
        }
        let v = &self.basis * nalgebra::DVector::from_column_slice(coeffs);
        self.space.to_series(v.as_slice())
    }

    /// `‖h − Ph‖` for the orthogonal projection `P` onto the subspace.
    pub fn residual(&self, h: &VecTrigPoly) -> Result<f64> {
        let v = self.space.to_vector(h)?;
        let proj = &self.basis * (self.basis.adjoint() * &v);
        Ok((v - proj).norm())
    }

    pub fn contains(&self, h: &VecTrigPoly, tol: f64) -> Result<bool> {
        Ok(self.residual(h)? <= tol * h.l2_norm().max(1.0))
    }
}

/// Orthonormal basis of `ker m`, from the right singular vectors with
/// `σ < rtol·σ_max`. Wide matrices are padded with zero rows so that every
/// right singular vector is available. The flag is set when `m = 0`.
pub fn nullspace(m: &CMatrix, rtol: f64) -> (CMatrix, bool) {
    let (rows, cols) = m.shape();
    if cols == 0 {
        return (CMatrix::zeros(0, 0), false);
    }
    if rows == 0 || m.iter().all(|z| z.norm() == 0.0) {
        return (CMatrix::identity(cols, cols), true);
    }
    let padded;
    let a = if rows < cols {
        padded = m.clone().resize_vertically(cols, Complex64::new(0.0, 0.0));
        &padded
    } else {
        m
    };
    let svd = a.clone().svd(false, true);
    let v_t = svd.v_t.expect("requested");
    let smax = svd.singular_values.iter().copied().fold(0.0, f64::max);
    let keep: Vec<usize> = (0..cols)
        .filter(|&j| svd.singular_values[j] < rtol * smax)
        .collect();
    let basis = CMatrix::from_fn(cols, keep.len(), |r, c| v_t[(keep[c], r)].conj());
    (basis, false)
}

/// Matrix of `h ↦ (Fourier coefficients of z ↦ ⟨h(z), ξᵢ(z)⟩)ᵢ` on `space`.
///
/// For `h ∈ H²_N` the coefficient at frequency `m` is
/// `Σ_l ⟨h_{m+l}, ξ_l⟩`, so frequencies `−deg ξ ..= N` occur.
pub fn pointwise_inner_map(space: &SpaceDescriptor, xis: &[VecTrigPoly]) -> Result<CMatrix> {
    for xi in xis {
        if xi.valdim() != space.valdim() {
            return Err(dim_err(format!(
                "symbol of valdim {} for a space of valdim {}",
                xi.valdim(),
                space.valdim()
            )));
        }
        if !xi.is_analytic() {
            return Err(Error::Domain(format!(
                "symbol has negative frequencies down to {}",
                xi.kmin()
            )));
        }
    }
    let n = space.degree() as i64;
    let mut blocks = Vec::with_capacity(xis.len());
    for xi in xis {
        let xi = xi.trimmed();
        let deg = xi.kmax().max(0);
        let nfreq = (n + deg + 1) as usize;
        let mut m = CMatrix::zeros(nfreq, space.dim());
        for (l, c) in xi.iter() {
            for k in 0..=n {
                // row for frequency k − l, shifted so that −deg maps to 0
                let row = (k - l + deg) as usize;
                for (a, z) in c.iter().enumerate() {
                    m[(row, space.index(k as usize, a))] += z.conj();
                }
            }
        }
        blocks.push(m);
    }
    let rows: usize = blocks.iter().map(CMatrix::nrows).sum();
    let mut out = CMatrix::zeros(rows, space.dim());
    let mut r = 0;
    for b in blocks {
        out.view_mut((r, 0), b.shape()).copy_from(&b);
        r += b.nrows();
    }
    Ok(out)
}

/// `Poc(xis, H²_N)`: functions in `space` pointwise orthogonal on `𝕋` to every
/// `ξᵢ`. An empty list or an identically zero `ξᵢ` imposes no condition; the
/// latter is flagged degenerate.
pub fn poc_basis(space: &SpaceDescriptor, xis: &[VecTrigPoly], tol: f64) -> Result<Subspace> {
    let map = pointwise_inner_map(space, xis)?;
    let any_zero = xis.iter().any(VecTrigPoly::is_zero);
    let (basis, all_zero) = nullspace(&map, tol);
    Subspace::new(*space, basis, any_zero || (all_zero && !xis.is_empty()))
}

/// `ker C_ξ` in `H²_N`. Flagged degenerate when `ξ ≡ 0`, where the kernel is
/// everything.
pub fn kernel_creation(xi: &VecTrigPoly, degree: usize, tol: f64) -> Result<Subspace> {
    let op = creation(xi, degree)?;
    let (basis, degenerate) = nullspace(op.entries(), tol);
    Subspace::new(op.domain(), basis, degenerate || xi.is_zero())
}

/// `‖ξ(z) ∧ h(z)‖`, zero iff `h(z)` and `ξ(z)` are parallel.
pub fn parallel_deviation(xi: &VecTrigPoly, h: &VecTrigPoly, z: Complex64) -> Result<f64> {
    Ok(wedge(&[xi.eval(z)?, h.eval(z)?])?.norm())
}
