//! Acceptance criteria, one line each. Runs without the libtest harness so
//! the lines are always printed; exits nonzero if any criterion fails.

use std::f64::consts::SQRT_2;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use rand::Rng;
use wedgeops::families::*;
use wedgeops::hardy::{lp_norm, pointwise_wedge, LpExponent, VecTrigPoly};
use wedgeops::operators::*;
use wedgeops::wedge::{antisymmetrize, gram_inner, lambda_bound, tensor_inner, wedge, FullTensor};
use wedgeops::Complex64;
use wedgeops_cli::examples::{golden_adjoint, golden_adjoint_value, golden_pairing_deviation};

type Verdict = (bool, String);
type Criterion = (&'static str, fn() -> Verdict);

fn cinner(x: &[Complex64], y: &[Complex64]) -> Complex64 {
    x.iter().zip(y).map(|(a, b)| a * b.conj()).sum()
}

fn cnorm(x: &[Complex64]) -> f64 {
    cinner(x, x).re.sqrt()
}

/// Heap's algorithm, tracking the sign of each permutation.
fn permutations(n: usize) -> Vec<(Vec<usize>, f64)> {
    let mut a: Vec<usize> = (0..n).collect();
    let mut c = vec![0; n];
    let mut sign = 1.0;
    let mut out = vec![(a.clone(), sign)];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            sign = -sign;
            out.push((a.clone(), sign));
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

fn leibniz(xs: &[Vec<Complex64>], ys: &[Vec<Complex64>]) -> Complex64 {
    permutations(xs.len())
        .into_iter()
        .map(|(p, s)| {
            (0..xs.len()).fold(Complex64::new(s, 0.0), |acc, i| {
                acc * cinner(&xs[i], &ys[p[i]])
            })
        })
        .sum()
}

fn criterion_1() -> Verdict {
    let start = Instant::now();
    let expect = golden_adjoint_value();
    let (matrix, formula) = golden_adjoint(1).unwrap();
    let dev = matrix
        .max_abs_diff(&expect)
        .unwrap()
        .max(formula.max_abs_diff(&expect).unwrap());
    let elapsed = start.elapsed();
    (
        dev <= 1e-12 && elapsed < Duration::from_secs(1),
        format!("max deviation {dev:.2e} (≤ 1e-12), runtime {elapsed:?} (< 1 s)"),
    )
}

fn criterion_2() -> Verdict {
    let (value, _) = golden_adjoint(2).unwrap();
    let pairing = value.pointwise_inner(&inner_example()).unwrap();
    let nonzero: Vec<i64> = pairing
        .iter()
        .filter(|(_, a)| a[0].norm() > 1e-12)
        .map(|(k, _)| k)
        .collect();
    let c = pairing.coeff_or_zero(-1)[0];
    let dev = golden_pairing_deviation(2).unwrap();
    (
        nonzero == [-1] && (c - 1.0 / (2.0 * SQRT_2)).norm() <= 1e-12 && dev <= 1e-12,
        format!(
            "nonzero frequencies {nonzero:?}, c₋₁ = {:.15}, deviation {dev:.2e}",
            c.re
        ),
    )
}

fn criterion_3() -> Verdict {
    let mut formula: f64 = 0.0;
    let mut defect: f64 = 0.0;
    for n in 2..=10 {
        let r = partial_isometry_counterexample(n).unwrap();
        formula = formula.max(r.formula_deviation).max(r.square_deviation);
        defect = defect.max((r.defect_norm - 0.25).abs());
    }
    (
        formula <= 1e-12 && defect <= 1e-12,
        format!("N = 2..=10: formula deviation {formula:.2e}, |‖A²−A‖ − ¼| = {defect:.2e}"),
    )
}

/// Twenty inner symbols, cycling through monomials `zᵏu`, the fixed example,
/// members of pointwise-orthonormal families and general blends.
fn sweep_symbols() -> Vec<(VecTrigPoly, usize)> {
    let mut rng = seeded(2024, "acceptance.toeplitz_sweep");
    (0..20)
        .map(|i| {
            let d = 2 + i % 3;
            let n = [12, 3, 7, 10, 5][i % 5];
            let xi = match i % 4 {
                0 => {
                    let u = random_unit_vector(&mut rng, d);
                    VecTrigPoly::monomial(rng.random_range(0..=4), u).unwrap()
                }
                1 if d == 2 => inner_example(),
                1 | 2 => random_pointwise_orthonormal(&mut rng, d, 2, 4)
                    .unwrap()
                    .remove(0),
                _ => random_inner(&mut rng, d, 4),
            };
            (xi, n)
        })
        .collect()
}

fn criterion_4() -> Verdict {
    let start = Instant::now();
    let symbols = sweep_symbols();
    let mut dev: f64 = 0.0;
    for (xi, n) in &symbols {
        dev = dev.max(verify_toeplitz_identity(xi, *n).unwrap());
    }
    let elapsed = start.elapsed();
    (
        dev <= 1e-12 && elapsed < Duration::from_secs(10) && symbols.len() == 20,
        format!(
            "{} symbols, d ≤ 4, N ≤ 12: max deviation {dev:.2e}, runtime {elapsed:?} (< 10 s)",
            symbols.len()
        ),
    )
}

fn criterion_5() -> Verdict {
    let mut rng = seeded(5, "acceptance.gram");
    let mut dev: f64 = 0.0;
    for _ in 0..200 {
        let d = rng.random_range(1..=5);
        let p = rng.random_range(1..=4);
        let xs: Vec<_> = (0..p).map(|_| random_vector(&mut rng, d)).collect();
        let ys: Vec<_> = (0..p).map(|_| random_vector(&mut rng, d)).collect();
        let g = gram_inner(&xs, &ys).unwrap();
        let ax = antisymmetrize(&FullTensor::elementary(&xs).unwrap()).unwrap();
        let ay = antisymmetrize(&FullTensor::elementary(&ys).unwrap()).unwrap();
        let t = tensor_inner(&ax, &ay).unwrap();
        dev = dev.max((g - leibniz(&xs, &ys)).norm()).max((g - t).norm());
    }
    (
        dev <= 1e-10,
        format!("200 instances: max |Gram − Leibniz|, |Gram − tensor| = {dev:.2e}"),
    )
}

fn criterion_6() -> Verdict {
    let mut rng = seeded(6, "acceptance.orthonormal_wedge");
    let mut dev: f64 = 0.0;
    for _ in 0..200 {
        let d = rng.random_range(1..=6);
        let j = rng.random_range(0..=4usize.min(d));
        let us = random_orthonormal(&mut rng, d, j);
        let x = random_vector(&mut rng, d);
        let mut resid = x.clone();
        for u in &us {
            let a = cinner(&x, u);
            resid.iter_mut().zip(u).for_each(|(r, ui)| *r -= a * ui);
        }
        let mut all = us.clone();
        all.push(x);
        dev = dev.max((wedge(&all).unwrap().norm() - cnorm(&resid)).abs());
    }
    (
        dev <= 1e-10,
        format!("200 instances: max |‖u∧…∧x‖ − ‖x − Σ⟨x,uᵢ⟩uᵢ‖| = {dev:.2e}"),
    )
}

fn criterion_7() -> Verdict {
    let xi = inner_example();
    let n = 5;
    let op = creation(&xi, n).unwrap();
    let space = op.domain();
    let poc = poc_basis(&space, std::slice::from_ref(&xi), NULLSPACE_RTOL).unwrap();
    let mut rng = seeded(7, "acceptance.dichotomy");
    let (mut members, mut wrong) = (0, 0);
    let mut margin = f64::INFINITY;
    for t in 0..100 {
        let h = if t % 2 == 0 {
            let c: Vec<_> = (0..poc.dim()).map(|_| complex_normal(&mut rng)).collect();
            poc.combination(&c).unwrap()
        } else {
            random_series(&mut rng, 2, 0, n as i64)
        };
        let member = poc.residual(&h).unwrap() <= 1e-10 * h.l2_norm();
        let (hn, cn) = (h.l2_norm(), op.apply(&h).unwrap().l2_norm());
        if member {
            members += 1;
            if (cn - hn).abs() > 1e-10 * hn.max(1.0) {
                wrong += 1;
            }
        } else {
            margin = margin.min(hn - cn);
            if cn >= hn - 1e-10 {
                wrong += 1;
            }
        }
    }
    (
        wrong == 0 && members > 0 && members < 100,
        format!("100 h ({members} in Poc of dim {}): {wrong} misclassified, min strict margin {margin:.3e}", poc.dim()),
    )
}

fn criterion_8() -> Verdict {
    let (f, g) = (disc_counterexample_f(), disc_counterexample_g());
    let mut resid: f64 = 0.0;
    for n in 1..=6 {
        let poc = poc_basis(
            &SpaceDescriptor::hardy(2, n).unwrap(),
            std::slice::from_ref(&g),
            NULLSPACE_RTOL,
        )
        .unwrap();
        resid = resid.max(poc.residual(&f).unwrap() / f.l2_norm());
    }
    let half = Complex64::new(0.5, 0.0);
    let v = cinner(&f.eval(half).unwrap(), &g.eval(half).unwrap()).norm();
    (
        resid <= 1e-10 && (v - 0.375).abs() <= 1e-12,
        format!("residual from Poc({{g}}) {resid:.2e} for N = 1..=6; |⟨f(½), g(½)⟩| = {v}"),
    )
}

fn criterion_9() -> Verdict {
    let mut rng = seeded(9, "acceptance.inequalities");
    let mut hadamard = 0;
    for _ in 0..1000 {
        let a = random_matrix(&mut rng, 5, 5);
        let det = a.determinant().norm();
        let cols: f64 = a.column_iter().map(|c| c.norm()).product();
        let rows: f64 = a.row_iter().map(|r| r.norm()).product();
        if det > cols.min(rows) * (1.0 + 1e-12) {
            hadamard += 1;
        }
    }
    let mut l1 = 0;
    for _ in 0..200 {
        let d = rng.random_range(2..=4);
        let kx = rng.random_range(0..=4);
        let x = random_series(&mut rng, d, 0, kx);
        let ky = rng.random_range(0..=4);
        let y = random_series(&mut rng, d, 0, ky);
        let w = pointwise_wedge(&[x.clone(), y.clone()]).unwrap();
        if lp_norm(w.series(), LpExponent::One, 4096).unwrap() > x.l2_norm() * y.l2_norm() + 1e-8 {
            l1 += 1;
        }
    }
    let mut lambda = 0;
    for _ in 0..200 {
        let d = rng.random_range(1..=5);
        let p = rng.random_range(1..=5);
        let xs: Vec<Vec<Complex64>> = (0..p)
            .map(|_| {
                let r: f64 = rng.random_range(0.0..1.0);
                random_unit_vector(&mut rng, d)
                    .into_iter()
                    .map(|z| z * r)
                    .collect()
            })
            .collect();
        let b = lambda_bound(&xs).unwrap();
        let direct = wedge(&xs).unwrap().norm().powi(2);
        let norms: Vec<f64> = xs.iter().map(|x| cnorm(x)).collect();
        let bound = norms.iter().product::<f64>() * norms.iter().map(|n| n * n).sum::<f64>().sqrt();
        if direct > bound * (1.0 + 1e-12) || (b.wedge_norm_sq - direct).abs() > 1e-12 {
            lambda += 1;
        }
    }
    (
        hadamard + l1 + lambda == 0,
        format!("violations: Hadamard {hadamard}/1000, L¹ wedge {l1}/200, Λ bound {lambda}/200"),
    )
}

fn criterion_10() -> Verdict {
    let fam = block_family();
    let r = multiwedge_isometry_check(&fam, 5, 50, &mut seeded(10, "acceptance.block")).unwrap();
    (
        r.max_equality_deviation <= 1e-10 && r.max_contraction_excess <= 1e-12,
        format!(
            "50 f ∈ Poc (dim {}): max |‖Λf‖ − ‖f‖| = {:.2e}; 50 general f: max ‖Λf‖ − ‖f‖ = {:.3e}",
            r.poc_dimension, r.max_equality_deviation, r.max_contraction_excess
        ),
    )
}

fn suite_output(seed: &str) -> (Vec<u8>, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_wedgeops"))
        .args([
            "suite", "--dim", "3", "--degree", "4", "--grade", "2", "--trials", "3", "--seed", seed,
        ])
        .env_remove("WEDGEOPS_SEED")
        .output()
        .expect("binary runs");
    (out.stdout, out.status.code().unwrap_or(-1))
}

fn criterion_11() -> Verdict {
    let (a, code_a) = suite_output("41");
    let (b, code_b) = suite_output("41");
    let (other, _) = suite_output("42");
    let valid = serde_json::from_slice::<serde_json::Value>(&a).is_ok();
    (
        a == b && !a.is_empty() && valid && code_a == 0 && code_b == 0 && other != a,
        format!(
            "two runs: {} bytes each, identical = {}, exit codes {code_a}/{code_b}; another seed differs = {}",
            a.len(),
            a == b,
            other != a
        ),
    )
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("golden adjoint C*C(1,1) = ½(1, 1−z)", criterion_1),
        ("pairing has single coefficient 1/(2√2) at −1", criterion_2),
        ("shift formula and ‖A²−A‖ = ¼", criterion_3),
        ("Toeplitz identity sweep", criterion_4),
        ("Gram determinant oracles", criterion_5),
        ("orthonormal-set wedge norm", criterion_6),
        ("isometry dichotomy", criterion_7),
        ("Poc counterexample inside the disc", criterion_8),
        ("inequality suite", criterion_9),
        ("multi-wedge isometry, block family", criterion_10),
        ("determinism of suite reports", criterion_11),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let (ok, detail) = match catch_unwind(AssertUnwindSafe(f)) {
            Ok(v) => v,
            Err(_) => (false, "panicked".to_string()),
        };
        if !ok {
            failed += 1;
        }
        println!(
            "criterion {:>2} {} — {name}: {detail}",
            i + 1,
            if ok { "PASS" } else { "FAIL" }
        );
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
