//! Exterior algebra of `E = ℂᵈ`.
//!
//! Two representations are provided. [`FullTensor`] stores all `dᵖ`
//! coordinates of an element of `⊗ᵖE` and carries the `p!`-scaled tensor inner
//! product; it exists as an oracle for small sizes. [`WedgeVector`] stores the
//! `C(d, p)` coordinates of an element of `∧ᵖE` in the lexicographic
//! multi-index basis `e_{i₁}∧···∧e_{i_p}`, which is orthonormal under that
//! scaling. Wedge coordinates are `p×p` minors, so the production path never
//! expands to `dᵖ` entries.
//!
//! Libraries that omit the `p!` factor in the tensor inner product differ from
//! this one by exactly that scalar.

mod bounds;
mod exterior;
mod permutation;
mod tensor;

pub use bounds::{
    hadamard_bounds, hadamard_check, lambda_bound, residual_norm_check, HadamardBounds,
    LambdaBound, ResidualNorms,
};
pub use exterior::{
    gram_inner, gram_matrix, multi_index_position, multi_indices, wedge, MultiIndex, WedgeVector,
};
pub use permutation::Permutation;
pub use tensor::{
    antisymmetrize, antisymmetrizer_matrix, permute, symmetrize, tensor_inner, FullTensor,
    MAX_TENSOR_ENTRIES, MAX_TENSOR_GRADE,
};
