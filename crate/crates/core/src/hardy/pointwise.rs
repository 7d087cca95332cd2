use num_complex::Complex64;

use super::series::VecTrigPoly;
use crate::binomial;
use crate::error::{dim_err, Error, Result};
use crate::wedge::WedgeVector;

/// Series with values in `∧ᵖℂᵈ`, coordinates in the lexicographic
/// multi-index basis.
#[derive(Debug, Clone, PartialEq)]
pub struct WedgeSeries {
    dim: usize,
    grade: usize,
    series: VecTrigPoly,
}

impl WedgeSeries {
    pub fn new(dim: usize, grade: usize, series: VecTrigPoly) -> Result<Self> {
        if series.valdim() != binomial(dim, grade) {
            return Err(dim_err(format!(
                "series of valdim {} cannot take values in ∧^{grade}ℂ^{dim}",
                series.valdim()
            )));
        }
        Ok(Self { dim, grade, series })
    }

    /// The constant `1 ∈ ∧⁰ℂᵈ`.
    pub fn unit(dim: usize) -> Self {
        Self {
            dim,
            grade: 0,
            series: VecTrigPoly::constant(vec![Complex64::new(1.0, 0.0)]).expect("finite"),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn grade(&self) -> usize {
        self.grade
    }

    pub fn series(&self) -> &VecTrigPoly {
        &self.series
    }

    pub fn into_series(self) -> VecTrigPoly {
        self.series
    }

    /// Grade above the dimension: the exterior power is `{0}`.
    pub fn is_degenerate(&self) -> bool {
        self.grade > self.dim
    }

    pub fn eval(&self, z: Complex64) -> Result<WedgeVector> {
        WedgeVector::from_coords(self.dim, self.grade, self.series.eval(z)?)
    }

    /// `z ↦ self(z) ∧ f(z)`, a bilinear coefficient convolution.
    pub fn wedge_series(&self, f: &VecTrigPoly) -> Result<WedgeSeries> {
        if f.valdim() != self.dim {
            return Err(dim_err(format!(
                "factor of valdim {} in a pointwise wedge over ℂ^{}",
                f.valdim(),
                self.dim
            )));
        }
        let out_dim = binomial(self.dim, self.grade + 1);
        let lo = self.series.kmin() + f.kmin();
        let hi = self.series.kmax() + f.kmax();
        let len = (hi - lo + 1) as usize;
        let mut acc = vec![Complex64::new(0.0, 0.0); out_dim * len];
        if out_dim > 0 {
            for (j, w) in self.series.iter() {
                if w.iter().all(|z| *z == Complex64::new(0.0, 0.0)) {
                    continue;
                }
                let w = WedgeVector::from_coords(self.dim, self.grade, w.to_vec())?;
                for (k, x) in f.iter() {
                    let prod = w.wedge_vector(x)?;
                    let base = (j + k - lo) as usize * out_dim;
                    for (a, p) in acc[base..base + out_dim].iter_mut().zip(prod.coords()) {
                        *a += p;
                    }
                }
            }
        }
        Ok(WedgeSeries {
            dim: self.dim,
            grade: self.grade + 1,
            series: VecTrigPoly::from_flat(out_dim, lo, len, acc)?,
        })
    }
}

/// `f₁ ∧̇ ··· ∧̇ f_q`, the pointwise wedge product, computed exactly as a
/// multilinear convolution of coefficients. The support is the sum of the
/// factors' supports.
///
/// When `q > d` the result is the identically zero series in the zero space
/// and [`WedgeSeries::is_degenerate`] is set.
pub fn pointwise_wedge(fs: &[VecTrigPoly]) -> Result<WedgeSeries> {
    let dim = fs
        .first()
        .map(VecTrigPoly::valdim)
        .ok_or_else(|| Error::Invalid("pointwise wedge of an empty list".into()))?;
    fs.iter()
        .try_fold(WedgeSeries::unit(dim), |acc, f| acc.wedge_series(f))
}
