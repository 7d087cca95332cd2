use itertools::Itertools;
use num_complex::Complex64;

use super::{FullTensor, Permutation};
use crate::error::{dim_err, Error, Result};
use crate::{binomial, factorial, CMatrix};

/// Strictly increasing, zero-based index tuple labelling `e_{i₁}∧···∧e_{i_p}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiIndex {
    dim: usize,
    indices: Vec<usize>,
}

impl MultiIndex {
    pub fn new(dim: usize, indices: Vec<usize>) -> Result<Self> {
        if indices.windows(2).any(|w| w[0] >= w[1]) || indices.iter().any(|&i| i >= dim) {
            return Err(Error::Invalid(format!(
                "{indices:?} is not strictly increasing within 0..{dim}"
            )));
        }
        Ok(Self { dim, indices })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn grade(&self) -> usize {
        self.indices.len()
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    /// Position in the lexicographic enumeration of [`multi_indices`].
    pub fn position(&self) -> usize {
        multi_index_position(self.dim, &self.indices)
    }
}

/// All `C(d, p)` multi-indices in lexicographic order.
pub fn multi_indices(dim: usize, grade: usize) -> Vec<MultiIndex> {
    (0..dim)
        .combinations(grade)
        .map(|indices| MultiIndex { dim, indices })
        .collect()
}

/// Lexicographic rank of a strictly increasing index tuple.
pub fn multi_index_position(dim: usize, indices: &[usize]) -> usize {
    let p = indices.len();
    let mut rank = 0;
    let mut next = 0;
    for (r, &i) in indices.iter().enumerate() {
        for v in next..i {
            rank += binomial(dim - 1 - v, p - 1 - r);
        }
        next = i + 1;
    }
    rank
}

/// Element of `∧ᵖℂᵈ` in the orthonormal lexicographic multi-index basis.
#[derive(Debug, Clone, PartialEq)]
pub struct WedgeVector {
    dim: usize,
    grade: usize,
    coords: Vec<Complex64>,
}

impl WedgeVector {
    pub fn zero(dim: usize, grade: usize) -> Self {
        Self {
            dim,
            grade,
            coords: vec![Complex64::new(0.0, 0.0); binomial(dim, grade)],
        }
    }

    /// The grade-0 unit, `1 ∈ ∧⁰E = ℂ`.
    pub fn unit(dim: usize) -> Self {
        Self {
            dim,
            grade: 0,
            coords: vec![Complex64::new(1.0, 0.0)],
        }
    }

    pub fn from_coords(dim: usize, grade: usize, coords: Vec<Complex64>) -> Result<Self> {
        let n = binomial(dim, grade);
        if coords.len() != n {
            return Err(dim_err(format!(
                "∧^{grade}ℂ^{dim} has {n} coordinates, got {}",
                coords.len()
            )));
        }
        Ok(Self { dim, grade, coords })
    }

    pub fn basis(index: &MultiIndex) -> Self {
        let mut out = Self::zero(index.dim, index.grade());
        out.coords[index.position()] = Complex64::new(1.0, 0.0);
        out
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn grade(&self) -> usize {
        self.grade
    }

    pub fn coords(&self) -> &[Complex64] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Complex64> {
        self.coords
    }

    pub fn norm(&self) -> f64 {
        crate::norm(&self.coords)
    }

    pub fn inner(&self, other: &Self) -> Result<Complex64> {
        self.same_shape(other)?;
        Ok(crate::inner(&self.coords, &other.coords))
    }

    pub fn max_abs_diff(&self, other: &Self) -> Result<f64> {
        self.same_shape(other)?;
        Ok(self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }

    fn same_shape(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim || self.grade != other.grade {
            return Err(dim_err(format!(
                "∧^{}ℂ^{} versus ∧^{}ℂ^{}",
                self.grade, self.dim, other.grade, other.dim
            )));
        }
        Ok(())
    }

    /// Exterior product `self ∧ x`, raising the grade by one.
    ///
    /// `e_I ∧ e_j = (−1)^{#{i ∈ I : i > j}} e_{I∪{j}}` for `j ∉ I`.
    pub fn wedge_vector(&self, x: &[Complex64]) -> Result<WedgeVector> {
        if x.len() != self.dim {
            return Err(dim_err(format!(
                "vector of length {} wedged into ∧ℂ^{}",
                x.len(),
                self.dim
            )));
        }
        let mut out = WedgeVector::zero(self.dim, self.grade + 1);
        if out.coords.is_empty() {
            return Ok(out);
        }
        for index in multi_indices(self.dim, self.grade) {
            let a = self.coords[index.position()];
            if a == Complex64::new(0.0, 0.0) {
                continue;
            }
            for (j, &xj) in x.iter().enumerate() {
                if index.indices.contains(&j) {
                    continue;
                }
                let above = index.indices.iter().filter(|&&i| i > j).count();
                let mut merged = index.indices.clone();
                merged.push(j);
                merged.sort_unstable();
                let sign = if above % 2 == 0 { 1.0 } else { -1.0 };
                out.coords[multi_index_position(self.dim, &merged)] += a * xj * sign;
            }
        }
        Ok(out)
    }

    /// The antisymmetric tensor represented by these coordinates.
    ///
    /// `e_I` maps to `(1/p!) Σ_σ ε_σ S_σ(e_{i₁}⊗···⊗e_{i_p})`.
    pub fn to_tensor(&self) -> Result<FullTensor> {
        let mut out = FullTensor::zeros(self.dim, self.grade)?;
        let scale = 1.0 / factorial(self.grade) as f64;
        let mut entries = out.entries().to_vec();
        let mut target = vec![0; self.grade];
        for index in multi_indices(self.dim, self.grade) {
            let a = self.coords[index.position()];
            for sigma in Permutation::all(self.grade) {
                for (k, slot) in target.iter_mut().enumerate() {
                    *slot = index.indices[sigma.apply(k)];
                }
                entries[out.flat_index(&target)] += a * (sigma.signature() as f64 * scale);
            }
        }
        out = FullTensor::from_entries(self.dim, self.grade, entries)?;
        Ok(out)
    }

    /// Coordinates of an antisymmetric tensor: `p!` times its entries at
    /// increasing index tuples. Components outside `∧ᵖE` are discarded only if
    /// `u` is antisymmetric; callers project first otherwise.
    pub fn from_tensor(u: &FullTensor) -> Self {
        let scale = factorial(u.grade()) as f64;
        let coords = multi_indices(u.dim(), u.grade())
            .iter()
            .map(|index| u.entry(&index.indices) * scale)
            .collect();
        Self {
            dim: u.dim(),
            grade: u.grade(),
            coords,
        }
    }
}

fn column_matrix<V: AsRef<[Complex64]>>(xs: &[V]) -> Result<CMatrix> {
    let dim = xs
        .first()
        .map(|x| x.as_ref().len())
        .ok_or_else(|| Error::Invalid("empty vector list".into()))?;
    if xs.iter().any(|x| x.as_ref().len() != dim) {
        return Err(dim_err("vectors differ in length"));
    }
    Ok(CMatrix::from_fn(dim, xs.len(), |r, c| xs[c].as_ref()[r]))
}

/// `x₁ ∧ ··· ∧ x_p`: the coordinate at `I` is the determinant of the rows `I`
/// of the `d×p` column matrix `[x₁ … x_p]`.
///
/// For `p > d` the exterior power is `{0}` and the result has no coordinates.
pub fn wedge<V: AsRef<[Complex64]>>(xs: &[V]) -> Result<WedgeVector> {
    let cols = column_matrix(xs)?;
    let (dim, grade) = cols.shape();
    let coords = multi_indices(dim, grade)
        .iter()
        .map(|index| cols.select_rows(index.indices()).determinant())
        .collect();
    WedgeVector::from_coords(dim, grade, coords)
}

/// Matrix with entries `⟨xᵢ, y_j⟩`.
pub fn gram_matrix<V: AsRef<[Complex64]>, W: AsRef<[Complex64]>>(
    xs: &[V],
    ys: &[W],
) -> Result<CMatrix> {
    if xs.len() != ys.len() {
        return Err(dim_err(format!("{} versus {} vectors", xs.len(), ys.len())));
    }
    let x = column_matrix(xs)?;
    let y = column_matrix(ys)?;
    if x.nrows() != y.nrows() {
        return Err(dim_err("vectors of different lengths"));
    }
    Ok(x.transpose() * y.map(|z| z.conj()))
}

/// `⟨x₁∧···∧x_p, y₁∧···∧y_p⟩ = det[⟨xᵢ, y_j⟩]`.
pub fn gram_inner<V: AsRef<[Complex64]>, W: AsRef<[Complex64]>>(
    xs: &[V],
    ys: &[W],
) -> Result<Complex64> {
    Ok(gram_matrix(xs, ys)?.determinant())
}
