use num_complex::Complex64;

use super::Permutation;
use crate::error::{dim_err, Error, Result};
use crate::{factorial, CMatrix};

/// Largest `dᵖ` a [`FullTensor`] may hold.
pub const MAX_TENSOR_ENTRIES: usize = 1_000_000;
/// Largest grade for which `p!` permutations are enumerated.
pub const MAX_TENSOR_GRADE: usize = 8;

/// Dense element of `⊗ᵖℂᵈ`.
///
/// Entries are stored row-major over index tuples `(i₁, …, i_p)`, with `i₁`
/// most significant.
#[derive(Debug, Clone, PartialEq)]
pub struct FullTensor {
    dim: usize,
    grade: usize,
    entries: Vec<Complex64>,
}

fn check_shape(dim: usize, grade: usize) -> Result<usize> {
    if dim == 0 || grade == 0 {
        return Err(Error::Invalid(
            "tensor dim and grade must be positive".into(),
        ));
    }
    if grade > MAX_TENSOR_GRADE {
        return Err(Error::Capability(format!(
            "grade {grade} exceeds the enumerable limit {MAX_TENSOR_GRADE}"
        )));
    }
    let count = (0..grade)
        .try_fold(1usize, |acc, _| acc.checked_mul(dim))
        .filter(|&c| c <= MAX_TENSOR_ENTRIES)
        .ok_or_else(|| {
            Error::Capability(format!("{dim}^{grade} entries exceed {MAX_TENSOR_ENTRIES}"))
        })?;
    Ok(count)
}

impl FullTensor {
    pub fn zeros(dim: usize, grade: usize) -> Result<Self> {
        let count = check_shape(dim, grade)?;
        Ok(Self {
            dim,
            grade,
            entries: vec![Complex64::new(0.0, 0.0); count],
        })
    }

    pub fn from_entries(dim: usize, grade: usize, entries: Vec<Complex64>) -> Result<Self> {
        let count = check_shape(dim, grade)?;
        if entries.len() != count {
            return Err(dim_err(format!(
                "expected {count} entries for {dim}^{grade}, got {}",
                entries.len()
            )));
        }
        if entries.iter().any(|z| !z.is_finite()) {
            return Err(Error::Invalid("tensor entries must be finite".into()));
        }
        Ok(Self {
            dim,
            grade,
            entries,
        })
    }

    /// `x₁ ⊗ ··· ⊗ x_p`.
    pub fn elementary<V: AsRef<[Complex64]>>(xs: &[V]) -> Result<Self> {
        let dim = xs
            .first()
            .map(|x| x.as_ref().len())
            .ok_or_else(|| Error::Invalid("empty factor list".into()))?;
        if xs.iter().any(|x| x.as_ref().len() != dim) {
            return Err(dim_err("factors of an elementary tensor differ in length"));
        }
        let mut out = Self::zeros(dim, xs.len())?;
        for (flat, entry) in out.entries.iter_mut().enumerate() {
            let mut rem = flat;
            let mut value = Complex64::new(1.0, 0.0);
            for x in xs.iter().rev() {
                value *= x.as_ref()[rem % dim];
                rem /= dim;
            }
            *entry = value;
        }
        Ok(out)
    }

    /// Elementary tensor of standard basis vectors `e_{i₁} ⊗ ··· ⊗ e_{i_p}` (zero-based).
    pub fn basis(dim: usize, indices: &[usize]) -> Result<Self> {
        let mut out = Self::zeros(dim, indices.len())?;
        if indices.iter().any(|&i| i >= dim) {
            return Err(dim_err(format!("index tuple {indices:?} outside 0..{dim}")));
        }
        let flat = out.flat_index(indices);
        out.entries[flat] = Complex64::new(1.0, 0.0);
        Ok(out)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn grade(&self) -> usize {
        self.grade
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    pub fn entry(&self, indices: &[usize]) -> Complex64 {
        self.entries[self.flat_index(indices)]
    }

    pub(crate) fn flat_index(&self, indices: &[usize]) -> usize {
        indices.iter().fold(0, |acc, &i| acc * self.dim + i)
    }

    pub(crate) fn tuple(&self, mut flat: usize) -> Vec<usize> {
        let mut out = vec![0; self.grade];
        for slot in out.iter_mut().rev() {
            *slot = flat % self.dim;
            flat /= self.dim;
        }
        out
    }

    fn same_shape(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim || self.grade != other.grade {
            return Err(dim_err(format!(
                "tensor shapes ({}, {}) and ({}, {}) differ",
                self.dim, self.grade, other.dim, other.grade
            )));
        }
        Ok(())
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self {
            entries: self.entries.iter().map(|z| z * s).collect(),
            ..self.clone()
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        Ok(Self {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
            ..self.clone()
        })
    }

    pub fn max_abs_diff(&self, other: &Self) -> Result<f64> {
        self.same_shape(other)?;
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }

    pub fn norm(&self) -> f64 {
        tensor_inner(self, self)
            .expect("same shape")
            .re
            .max(0.0)
            .sqrt()
    }
}

/// `⟨u, v⟩ = p!·Σ u_I·conj(v_I)`, the sesquilinear extension of
/// `p!·⟨x₁,y₁⟩···⟨x_p,y_p⟩`.
pub fn tensor_inner(u: &FullTensor, v: &FullTensor) -> Result<Complex64> {
    u.same_shape(v)?;
    let sum: Complex64 = crate::inner(&u.entries, &v.entries);
    Ok(sum * factorial(u.grade) as f64)
}

/// `S_σ(x₁⊗···⊗x_p) = x_{σ(1)}⊗···⊗x_{σ(p)}`, extended linearly.
///
/// With this action `S_σ S_τ = S_{τ∘σ}`.
pub fn permute(sigma: &Permutation, u: &FullTensor) -> Result<FullTensor> {
    if sigma.size() != u.grade {
        return Err(dim_err(format!(
            "permutation of size {} acting on grade {}",
            sigma.size(),
            u.grade
        )));
    }
    let mut out = FullTensor::zeros(u.dim, u.grade)?;
    let mut target = vec![0; u.grade];
    for (flat, &value) in u.entries.iter().enumerate() {
        if value == Complex64::new(0.0, 0.0) {
            continue;
        }
        let source = u.tuple(flat);
        for (k, slot) in target.iter_mut().enumerate() {
            *slot = source[sigma.apply(k)];
        }
        let idx = out.flat_index(&target);
        out.entries[idx] += value;
    }
    Ok(out)
}

fn signed_average(u: &FullTensor, signed: bool) -> Result<FullTensor> {
    let mut acc = FullTensor::zeros(u.dim, u.grade)?;
    for sigma in Permutation::all(u.grade) {
        let sign = if signed {
            sigma.signature() as f64
        } else {
            1.0
        };
        let term = permute(&sigma, u)?;
        for (a, t) in acc.entries.iter_mut().zip(&term.entries) {
            *a += t * sign;
        }
    }
    Ok(acc.scale(Complex64::new(1.0 / factorial(u.grade) as f64, 0.0)))
}

/// Orthogonal projection onto `∧ᵖE`: `(1/p!) Σ_σ ε_σ S_σ(u)`.
pub fn antisymmetrize(u: &FullTensor) -> Result<FullTensor> {
    signed_average(u, true)
}

/// Orthogonal projection onto the symmetric tensors: `(1/p!) Σ_σ S_σ(u)`.
pub fn symmetrize(u: &FullTensor) -> Result<FullTensor> {
    signed_average(u, false)
}

/// Matrix of [`antisymmetrize`] on the `dᵖ` standard basis (columns are images
/// of basis tensors).
pub fn antisymmetrizer_matrix(dim: usize, grade: usize) -> Result<CMatrix> {
    let n = check_shape(dim, grade)?;
    let mut m = CMatrix::zeros(n, n);
    let probe = FullTensor::zeros(dim, grade)?;
    for col in 0..n {
        let image = antisymmetrize(&FullTensor::basis(dim, &probe.tuple(col))?)?;
        for (row, z) in image.entries.iter().enumerate() {
            m[(row, col)] = *z;
        }
    }
    Ok(m)
}
