//! Seeded random inputs and the fixed example symbols.
//!
//! Pointwise-orthonormal families are built as `ξᵢ(z) = Σ_l c_{il} z^{k_{il}} u_l`
//! where every member draws from its own block of columns `u_l` of a random
//! unitary and `Σ_l |c_{il}|² = 1`. Disjoint column blocks make the members
//! pointwise orthogonal and the unit weights make each one inner, for any
//! choice of degrees. A single member is a random inner polynomial.

use std::f64::consts::FRAC_1_SQRT_2;

use num_complex::Complex64;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::hardy::VecTrigPoly;
use crate::CMatrix;

pub type SeededRng = ChaCha8Rng;

/// Independent stream per label, so adding a consumer never perturbs the
/// values another one sees.
pub fn seeded(seed: u64, label: &str) -> SeededRng {
    // FNV-1a
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in label.bytes() {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(h);
    rng
}

/// Standard complex Gaussian, `E|z|² = 1`.
pub fn complex_normal<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    Complex64::new(re, im) * FRAC_1_SQRT_2
}

pub fn random_vector<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> Vec<Complex64> {
    (0..dim).map(|_| complex_normal(rng)).collect()
}

pub fn random_unit_vector<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> Vec<Complex64> {
    loop {
        let v = random_vector(rng, dim);
        let n = crate::norm(&v);
        if n > 1e-3 {
            return v.into_iter().map(|z| z / n).collect();
        }
    }
}

pub fn random_matrix<R: Rng + ?Sized>(rng: &mut R, rows: usize, cols: usize) -> CMatrix {
    CMatrix::from_fn(rows, cols, |_, _| complex_normal(rng))
}

/// Haar-distributed unitary: QR of a Gaussian matrix with the phases of
/// `diag(R)` moved into `Q`.
pub fn random_unitary<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> CMatrix {
    let qr = random_matrix(rng, dim, dim).qr();
    let r = qr.r();
    let mut q = qr.q();
    for j in 0..dim {
        let d = r[(j, j)];
        if d.norm() > 0.0 {
            let phase = d / d.norm();
            for z in q.column_mut(j).iter_mut() {
                *z *= phase;
            }
        }
    }
    q
}

/// `count` orthonormal vectors in `ℂᵈ`.
pub fn random_orthonormal<R: Rng + ?Sized>(
    rng: &mut R,
    dim: usize,
    count: usize,
) -> Vec<Vec<Complex64>> {
    let u = random_unitary(rng, dim);
    (0..count.min(dim))
        .map(|j| u.column(j).iter().copied().collect())
        .collect()
}

/// Series with independent complex Gaussian coefficients on `kmin..=kmax`.
pub fn random_series<R: Rng + ?Sized>(
    rng: &mut R,
    valdim: usize,
    kmin: i64,
    kmax: i64,
) -> VecTrigPoly {
    VecTrigPoly::from_fn(valdim, kmin..=kmax, |_, _| complex_normal(rng)).expect("finite range")
}

fn blend<R: Rng + ?Sized>(rng: &mut R, columns: &[Vec<Complex64>], max_degree: i64) -> VecTrigPoly {
    let dim = columns[0].len();
    let weights = random_unit_vector(rng, columns.len());
    let mut out = VecTrigPoly::zero(dim);
    for (u, w) in columns.iter().zip(weights) {
        let k = rng.random_range(0..=max_degree);
        let term = VecTrigPoly::monomial(k, u.iter().map(|z| z * w).collect()).expect("finite");
        out = out.add(&term).expect("same valdim");
    }
    out.trimmed()
}

/// Random inner polynomial in `ℂᵈ` of degree at most `max_degree`.
pub fn random_inner<R: Rng + ?Sized>(rng: &mut R, dim: usize, max_degree: i64) -> VecTrigPoly {
    let terms = rng.random_range(1..=dim);
    let columns = random_orthonormal(rng, dim, terms);
    blend(rng, &columns, max_degree)
}

/// `count` analytic functions, pointwise orthonormal on `𝕋`.
pub fn random_pointwise_orthonormal<R: Rng + ?Sized>(
    rng: &mut R,
    dim: usize,
    count: usize,
    max_degree: i64,
) -> Result<Vec<VecTrigPoly>> {
    if count == 0 || count > dim {
        return Err(Error::Invalid(format!(
            "cannot build {count} pointwise orthonormal functions in ℂ^{dim}"
        )));
    }
    let mut columns = random_orthonormal(rng, dim, dim);
    columns.shuffle(rng);
    // each member takes one column, then spare columns go to random members
    let spare = rng.random_range(0..=dim - count);
    let mut blocks: Vec<Vec<Vec<Complex64>>> = columns.drain(..count).map(|c| vec![c]).collect();
    for c in columns.into_iter().take(spare) {
        let i = rng.random_range(0..count);
        blocks[i].push(c);
    }
    Ok(blocks.iter().map(|b| blend(rng, b, max_degree)).collect())
}

fn real(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// `ξ(z) = (1, z)/√2`.
pub fn inner_example() -> VecTrigPoly {
    let s = real(FRAC_1_SQRT_2);
    VecTrigPoly::from_components(0, &[vec![s], vec![real(0.0), s]]).expect("finite")
}

/// `h(z) = (1, 1)`.
pub fn constant_ones() -> VecTrigPoly {
    VecTrigPoly::constant(vec![real(1.0), real(1.0)]).expect("finite")
}

/// `ξ₀ = (1, z, 0, 0)/√2`, `ξ₁ = (0, 0, 1, z)/√2`.
pub fn block_family() -> [VecTrigPoly; 2] {
    let s = real(FRAC_1_SQRT_2);
    let o = real(0.0);
    [
        VecTrigPoly::from_components(0, &[vec![s], vec![o, s], vec![o], vec![o]]).expect("finite"),
        VecTrigPoly::from_components(0, &[vec![o], vec![o], vec![s], vec![o, s]]).expect("finite"),
    ]
}

/// `g(z) = (z, z²)`.
pub fn disc_counterexample_g() -> VecTrigPoly {
    VecTrigPoly::from_components(
        0,
        &[
            vec![real(0.0), real(1.0)],
            vec![real(0.0), real(0.0), real(1.0)],
        ],
    )
    .expect("finite")
}

/// `f(z) = (1, −z)`.
pub fn disc_counterexample_f() -> VecTrigPoly {
    VecTrigPoly::from_components(0, &[vec![real(1.0)], vec![real(0.0), real(-1.0)]])
        .expect("finite")
}
