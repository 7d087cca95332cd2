//! Dense matrices of Toeplitz and pointwise creation operators between
//! truncated Hardy spaces `H²_N(ℂᵐ)`, and the subspaces and identities built
//! from them.
//!
//! Coefficient vectors are laid out frequency-major: the coordinate of
//! `z^k e_i` is `k·m + i`. Every basis is orthonormal, so adjoints are
//! conjugate transposes.

mod build;
mod checks;
mod space;
mod subspace;

pub use build::{
    backward_shift, componentwise, constant_projection, creation, multi_creation, shift, toeplitz,
};
pub use checks::{
    adjoint_on_wedge, isometry_set_check, multiwedge_isometry_check,
    partial_isometry_counterexample, pointwise_orthonormality_deviation, require_inner,
    verify_toeplitz_identity, IsometryReport, MultiwedgeReport, ShiftReport, EQUALITY_TOL,
};
pub use space::{OperatorMatrix, SpaceDescriptor};
pub use subspace::{
    kernel_creation, nullspace, parallel_deviation, poc_basis, pointwise_inner_map, Subspace,
    NULLSPACE_RTOL,
};
