use nalgebra::DVector;
use num_complex::Complex64;

use crate::error::{dim_err, Error, Result};
use crate::hardy::VecTrigPoly;
use crate::{binomial, CMatrix};

/// `H²_N` with values in a `valdim`-dimensional space; `grade` records which
/// exterior power that space is (1 for `ℂᵈ` itself).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SpaceDescriptor {
    valdim: usize,
    grade: usize,
    degree: usize,
}

impl SpaceDescriptor {
    pub fn new(valdim: usize, grade: usize, degree: usize) -> Result<Self> {
        if valdim == 0 {
            return Err(dim_err("coefficient space of dimension 0"));
        }
        Ok(Self {
            valdim,
            grade,
            degree,
        })
    }

    /// `H²_N(ℂᵈ)`.
    pub fn hardy(dim: usize, degree: usize) -> Result<Self> {
        Self::new(dim, 1, degree)
    }

    /// `H²_N(∧ᵖℂᵈ)`.
    pub fn wedge(dim: usize, grade: usize, degree: usize) -> Result<Self> {
        let valdim = binomial(dim, grade);
        if valdim == 0 {
            return Err(Error::Capability(format!(
                "∧^{grade}ℂ^{dim} is the zero space"
            )));
        }
        Self::new(valdim, grade, degree)
    }

    pub fn valdim(&self) -> usize {
        self.valdim
    }

    pub fn grade(&self) -> usize {
        self.grade
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.valdim * (self.degree + 1)
    }

    /// Coordinate of `z^k e_i`.
    pub fn index(&self, k: usize, i: usize) -> usize {
        k * self.valdim + i
    }

    pub fn with_degree(&self, degree: usize) -> Self {
        Self { degree, ..*self }
    }

    /// Coefficient vector of an analytic series of degree at most `N`.
    /// Stored coefficients outside `0..=N` must be exactly zero.
    pub fn to_vector(&self, f: &VecTrigPoly) -> Result<DVector<Complex64>> {
        if f.valdim() != self.valdim {
            return Err(dim_err(format!(
                "series of valdim {} in a space of valdim {}",
                f.valdim(),
                self.valdim
            )));
        }
        let zero = Complex64::new(0.0, 0.0);
        for (k, c) in f.iter() {
            if (k < 0 || k > self.degree as i64) && c.iter().any(|z| *z != zero) {
                return Err(dim_err(format!(
                    "coefficient at frequency {k} outside degrees 0..={}",
                    self.degree
                )));
            }
        }
        let mut v = DVector::zeros(self.dim());
        for k in 0..=self.degree {
            if let Some(c) = f.coeff(k as i64) {
                for (i, z) in c.iter().enumerate() {
                    v[self.index(k, i)] = *z;
                }
            }
        }
        Ok(v)
    }

    pub fn to_series(&self, v: &[Complex64]) -> Result<VecTrigPoly> {
        if v.len() != self.dim() {
            return Err(dim_err(format!(
                "vector of length {} in a space of dimension {}",
                v.len(),
                self.dim()
            )));
        }
        VecTrigPoly::from_flat(self.valdim, 0, self.degree + 1, v.to_vec())
    }
}

/// Matrix of a linear map between two truncated Hardy spaces.
#[derive(Debug, Clone, PartialEq)]
pub struct OperatorMatrix {
    domain: SpaceDescriptor,
    codomain: SpaceDescriptor,
    entries: CMatrix,
}

impl OperatorMatrix {
    pub fn new(
        domain: SpaceDescriptor,
        codomain: SpaceDescriptor,
        entries: CMatrix,
    ) -> Result<Self> {
        if entries.shape() != (codomain.dim(), domain.dim()) {
            return Err(dim_err(format!(
                "{}×{} entries for a map from dimension {} to {}",
                entries.nrows(),
                entries.ncols(),
                domain.dim(),
                codomain.dim()
            )));
        }
        Ok(Self {
            domain,
            codomain,
            entries,
        })
    }

    pub fn zero(domain: SpaceDescriptor, codomain: SpaceDescriptor) -> Self {
        Self {
            domain,
            codomain,
            entries: CMatrix::zeros(codomain.dim(), domain.dim()),
        }
    }

    pub fn identity(space: SpaceDescriptor) -> Self {
        Self {
            domain: space,
            codomain: space,
            entries: CMatrix::identity(space.dim(), space.dim()),
        }
    }

    pub fn domain(&self) -> SpaceDescriptor {
        self.domain
    }

    pub fn codomain(&self) -> SpaceDescriptor {
        self.codomain
    }

    pub fn entries(&self) -> &CMatrix {
        &self.entries
    }

    pub fn into_entries(self) -> CMatrix {
        self.entries
    }

    pub fn adjoint(&self) -> Self {
        Self {
            domain: self.codomain,
            codomain: self.domain,
            entries: self.entries.adjoint(),
        }
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &Self) -> Result<Self> {
        if first.codomain != self.domain {
            return Err(dim_err(format!(
                "cannot compose: {:?} feeds into {:?}",
                first.codomain, self.domain
            )));
        }
        Ok(Self {
            domain: first.domain,
            codomain: self.codomain,
            entries: &self.entries * &first.entries,
        })
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.domain != other.domain || self.codomain != other.codomain {
            return Err(dim_err("operators between different spaces"));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(Self {
            entries: &self.entries + &other.entries,
            ..self.clone()
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(Self {
            entries: &self.entries - &other.entries,
            ..self.clone()
        })
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self {
            entries: self.entries.map(|z| z * s),
            ..self.clone()
        }
    }

    pub fn apply_vector(&self, v: &DVector<Complex64>) -> Result<DVector<Complex64>> {
        if v.len() != self.domain.dim() {
            return Err(dim_err(format!(
                "vector of length {} for domain dimension {}",
                v.len(),
                self.domain.dim()
            )));
        }
        Ok(&self.entries * v)
    }

    pub fn apply(&self, f: &VecTrigPoly) -> Result<VecTrigPoly> {
        let out = self.apply_vector(&self.domain.to_vector(f)?)?;
        self.codomain.to_series(out.as_slice())
    }

    pub fn max_abs(&self) -> f64 {
        crate::max_abs(&self.entries)
    }

    pub fn max_abs_diff(&self, other: &Self) -> Result<f64> {
        Ok(self.sub(other)?.max_abs())
    }

    /// Largest singular value.
    pub fn op_norm(&self) -> f64 {
        if self.entries.is_empty() {
            return 0.0;
        }
        self.entries
            .singular_values()
            .iter()
            .copied()
            .fold(0.0, f64::max)
    }

    /// Restriction to inputs of degree at most `degree`. With frequency-major
    /// coordinates this keeps a leading block of columns.
    pub fn restrict_domain(&self, degree: usize) -> Result<Self> {
        if degree > self.domain.degree {
            return Err(dim_err(format!(
                "degree {degree} exceeds domain degree {}",
                self.domain.degree
            )));
        }
        let domain = self.domain.with_degree(degree);
        Ok(Self {
            domain,
            codomain: self.codomain,
            entries: self.entries.columns(0, domain.dim()).into_owned(),
        })
    }

    /// Compression onto outputs of degree at most `degree`.
    pub fn restrict_codomain(&self, degree: usize) -> Result<Self> {
        if degree > self.codomain.degree {
            return Err(dim_err(format!(
                "degree {degree} exceeds codomain degree {}",
                self.codomain.degree
            )));
        }
        let codomain = self.codomain.with_degree(degree);
        Ok(Self {
            domain: self.domain,
            codomain,
            entries: self.entries.rows(0, codomain.dim()).into_owned(),
        })
    }
}
