use num_complex::Complex64;

use super::series::{VecTrigPoly, CIRCLE_TOL};
use crate::error::{dim_err, Error, Result};
use crate::CMatrix;

/// Matrix-valued trigonometric polynomial `G(z) = Σ G_k z^k`, the symbol of
/// a Toeplitz operator.
#[derive(Debug, Clone, PartialEq)]
pub struct MatSymbol {
    rows: usize,
    cols: usize,
    kmin: i64,
    coeffs: Vec<CMatrix>,
}

impl MatSymbol {
    pub fn new(kmin: i64, coeffs: Vec<CMatrix>) -> Result<Self> {
        let first = coeffs
            .first()
            .ok_or_else(|| Error::Invalid("a symbol needs at least one coefficient".into()))?;
        let (rows, cols) = first.shape();
        if coeffs.iter().any(|g| g.shape() != (rows, cols)) {
            return Err(dim_err("symbol coefficients differ in shape"));
        }
        if coeffs.iter().flat_map(|g| g.iter()).any(|z| !z.is_finite()) {
            return Err(Error::Invalid("symbol coefficients must be finite".into()));
        }
        Ok(Self {
            rows,
            cols,
            kmin,
            coeffs,
        })
    }

    pub fn constant(m: CMatrix) -> Self {
        Self::new(0, vec![m]).expect("single finite coefficient")
    }

    pub fn identity(n: usize) -> Self {
        Self::constant(CMatrix::identity(n, n))
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Self::constant(CMatrix::zeros(rows, cols))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn kmin(&self) -> i64 {
        self.kmin
    }

    pub fn kmax(&self) -> i64 {
        self.kmin + self.coeffs.len() as i64 - 1
    }

    pub fn coeff(&self, k: i64) -> Option<&CMatrix> {
        if k < self.kmin || k > self.kmax() {
            return None;
        }
        self.coeffs.get((k - self.kmin) as usize)
    }

    pub fn coeff_or_zero(&self, k: i64) -> CMatrix {
        self.coeff(k)
            .cloned()
            .unwrap_or_else(|| CMatrix::zeros(self.rows, self.cols))
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, &CMatrix)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .map(move |(n, g)| (self.kmin + n as i64, g))
    }

    /// `G(z)` for `z ∈ 𝕋`, with `z^{−n} = z̄ⁿ`.
    pub fn eval(&self, z: Complex64) -> Result<CMatrix> {
        if (z.norm() - 1.0).abs() > CIRCLE_TOL {
            return Err(Error::Domain(format!(
                "symbol evaluated off 𝕋 at |z| = {}",
                z.norm()
            )));
        }
        let mut out = CMatrix::zeros(self.rows, self.cols);
        for (k, g) in self.iter() {
            let zk = if k >= 0 {
                z.powi(k as i32)
            } else {
                z.conj().powi((-k) as i32)
            };
            out += g * zk;
        }
        Ok(out)
    }

    /// `G*`, with coefficients `(G*)_k = (G_{−k})*`.
    pub fn adjoint(&self) -> Self {
        let coeffs = self.coeffs.iter().rev().map(|g| g.adjoint()).collect();
        Self {
            rows: self.cols,
            cols: self.rows,
            kmin: -self.kmax(),
            coeffs,
        }
    }

    fn zip_with(&self, other: &Self, sign: f64) -> Result<Self> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(dim_err(format!(
                "{}×{} versus {}×{} symbols",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let lo = self.kmin.min(other.kmin);
        let hi = self.kmax().max(other.kmax());
        let coeffs = (lo..=hi)
            .map(|k| self.coeff_or_zero(k) + other.coeff_or_zero(k) * Complex64::new(sign, 0.0))
            .collect();
        Self::new(lo, coeffs)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, 1.0)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, -1.0)
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|g| g * s).collect(),
            ..self.clone()
        }
    }

    pub fn max_abs_diff(&self, other: &Self) -> Result<f64> {
        Ok(self
            .sub(other)?
            .coeffs
            .iter()
            .flat_map(|g| g.iter())
            .map(|z| z.norm())
            .fold(0.0, f64::max))
    }

    /// Pointwise product `z ↦ G(z)h(z)`, as a coefficient convolution.
    pub fn apply(&self, h: &VecTrigPoly) -> Result<VecTrigPoly> {
        if h.valdim() != self.cols {
            return Err(dim_err(format!(
                "{}×{} symbol applied to valdim {}",
                self.rows,
                self.cols,
                h.valdim()
            )));
        }
        let lo = self.kmin + h.kmin();
        let hi = self.kmax() + h.kmax();
        let mut acc = vec![Complex64::new(0.0, 0.0); self.rows * (hi - lo + 1) as usize];
        for (j, g) in self.iter() {
            for (k, c) in h.iter() {
                let base = (j + k - lo) as usize * self.rows;
                for r in 0..self.rows {
                    acc[base + r] += (0..self.cols).map(|s| g[(r, s)] * c[s]).sum::<Complex64>();
                }
            }
        }
        VecTrigPoly::from_flat(self.rows, lo, (hi - lo + 1) as usize, acc)
    }
}

/// The symbol `ξη*`, `(ξη*)(z)x = ⟨x, η(z)⟩ξ(z)`, with coefficients
/// `G_k = Σ_j ξ_j (η_{j−k})*`.
pub fn rank_one_symbol(xi: &VecTrigPoly, eta: &VecTrigPoly) -> Result<MatSymbol> {
    if xi.valdim() != eta.valdim() {
        return Err(dim_err(format!(
            "ξ has valdim {}, η has valdim {}",
            xi.valdim(),
            eta.valdim()
        )));
    }
    let d = xi.valdim();
    let lo = xi.kmin() - eta.kmax();
    let hi = xi.kmax() - eta.kmin();
    let mut coeffs = vec![CMatrix::zeros(d, d); (hi - lo + 1) as usize];
    for (j, a) in xi.iter() {
        for (l, b) in eta.iter() {
            let g = &mut coeffs[(j - l - lo) as usize];
            for r in 0..d {
                for s in 0..d {
                    g[(r, s)] += a[r] * b[s].conj();
                }
            }
        }
    }
    MatSymbol::new(lo, coeffs)
}
