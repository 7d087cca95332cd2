#![allow(dead_code)]

use proptest::prelude::*;
use wedgeops::families::{seeded, SeededRng};
use wedgeops::Complex64;

pub fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

pub fn complex() -> impl Strategy<Value = Complex64> {
    (-1.0f64..1.0, -1.0f64..1.0).prop_map(|(re, im)| Complex64::new(re, im))
}

pub fn cvec(len: usize) -> impl Strategy<Value = Vec<Complex64>> {
    prop::collection::vec(complex(), len)
}

/// `count` vectors of length `dim`.
pub fn cvecs(dim: usize, count: usize) -> impl Strategy<Value = Vec<Vec<Complex64>>> {
    prop::collection::vec(cvec(dim), count)
}

pub fn rng(seed: u64) -> SeededRng {
    seeded(seed, "property")
}

pub fn inner(x: &[Complex64], y: &[Complex64]) -> Complex64 {
    let mut s = c(0.0);
    for i in 0..x.len() {
        s += x[i] * y[i].conj();
    }
    s
}

/// All permutations of `0..n` with their signs, by insertion.
pub fn signed_permutations(n: usize) -> Vec<(Vec<usize>, f64)> {
    let mut out = vec![(Vec::new(), 1.0)];
    for k in 0..n {
        let mut next = Vec::new();
        for (p, s) in &out {
            // inserting k at position i creates (len − i) inversions
            for i in 0..=p.len() {
                let mut q: Vec<usize> = p.clone();
                q.insert(i, k);
                let flips = p.len() - i;
                next.push((q, if flips % 2 == 0 { *s } else { -*s }));
            }
        }
        out = next;
    }
    out
}

/// Leibniz expansion of `det[⟨xᵢ, yⱼ⟩]`.
pub fn leibniz_gram(xs: &[Vec<Complex64>], ys: &[Vec<Complex64>]) -> Complex64 {
    let p = xs.len();
    let mut total = c(0.0);
    for (perm, sign) in signed_permutations(p) {
        let mut prod = c(sign);
        for i in 0..p {
            prod *= inner(&xs[i], &ys[perm[i]]);
        }
        total += prod;
    }
    total
}

/// Evaluates `Σ c_k z^k` treating `z^{−n}` as `z̄ⁿ`, straight from the
/// coefficient list.
pub fn eval_on_circle(kmin: i64, coeffs: &[Vec<Complex64>], theta: f64) -> Vec<Complex64> {
    let m = coeffs.first().map_or(0, Vec::len);
    let mut out = vec![c(0.0); m];
    for (j, ck) in coeffs.iter().enumerate() {
        let k = kmin + j as i64;
        let w = Complex64::from_polar(1.0, k as f64 * theta);
        for i in 0..m {
            out[i] += ck[i] * w;
        }
    }
    out
}
