//! Seeded randomized checks of every library invariant, parameterized by a
//! [`RunConfig`].

use std::f64::consts::PI;
use std::path::Path;

use rand::seq::SliceRandom;
use rand::Rng;
use wedgeops::families::*;
use wedgeops::hardy::*;
use wedgeops::operators::*;
use wedgeops::wedge::*;
use wedgeops::{binomial, CMatrix, Complex64, Result};

use crate::config::RunConfig;
use crate::error::CliError;
use crate::report::Report;
use crate::runner::{Outcome, Runner};

const QUADRATURE: usize = 4096;
/// `dᵖ·p!` above which the full-tensor oracles are skipped.
const TENSOR_BUDGET: usize = 50_000;
const RANK_BUDGET: usize = 1024;
const CIRCLE_SAMPLES: usize = 32;

fn max_over(trials: usize, mut f: impl FnMut() -> Result<f64>) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for _ in 0..trials {
        let v = f()?;
        // NaN must surface as a failure
        worst = if v.is_nan() { f64::NAN } else { worst.max(v) };
        if worst.is_nan() {
            break;
        }
    }
    Ok(worst)
}

fn rel(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / b.norm().max(1.0)
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

fn random_permutation(rng: &mut SeededRng, n: usize) -> Permutation {
    let mut v: Vec<usize> = (0..n).collect();
    v.shuffle(rng);
    Permutation::new(v).expect("shuffled identity")
}

fn random_tensor(rng: &mut SeededRng, d: usize, p: usize) -> Result<FullTensor> {
    FullTensor::from_entries(d, p, random_vector(rng, d.pow(p as u32)))
}

fn random_vectors(rng: &mut SeededRng, d: usize, count: usize) -> Vec<Vec<Complex64>> {
    (0..count).map(|_| random_vector(rng, d)).collect()
}

fn leibniz(xs: &[Vec<Complex64>], ys: &[Vec<Complex64>]) -> Complex64 {
    let p = xs.len();
    Permutation::all(p)
        .map(|s| {
            (0..p).fold(Complex64::new(s.signature() as f64, 0.0), |acc, i| {
                acc * wedgeops::inner(&xs[i], &ys[s.apply(i)])
            })
        })
        .sum()
}

pub fn property_suite(cfg: &RunConfig) -> std::result::Result<Report, CliError> {
    cfg.validate()?;
    let inputs = cfg
        .xi_files
        .iter()
        .map(|p| crate::load_series(p))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    for (path, xi) in cfg.xi_files.iter().zip(&inputs) {
        require_analytic(path, xi)?;
        if xi.valdim() != cfg.dim {
            return Err(CliError::Input(format!(
                "{}: symbol has valdim {}, but --dim is {}",
                path.display(),
                xi.valdim(),
                cfg.dim
            )));
        }
    }
    let mut run = Runner::new(cfg.seed, &cfg.tolerances);
    wedge_checks(&mut run, cfg);
    hardy_checks(&mut run, cfg);
    operator_checks(&mut run, cfg);
    for (i, xi) in inputs.iter().enumerate() {
        input_checks(&mut run, cfg, i, xi);
    }
    let unused = run.unused_overrides();
    if !unused.is_empty() {
        return Err(CliError::Config(format!(
            "tolerance given for unknown check(s): {}",
            unused.join(", ")
        )));
    }
    Ok(Report::new("suite", cfg.seed, run.finish()))
}

pub(crate) fn require_analytic(path: &Path, xi: &VecTrigPoly) -> std::result::Result<(), CliError> {
    if !xi.is_analytic() {
        return Err(CliError::Input(format!(
            "{}: symbol has nonzero coefficients at negative frequencies (kmin = {})",
            path.display(),
            xi.kmin()
        )));
    }
    Ok(())
}

fn wedge_checks(run: &mut Runner, cfg: &RunConfig) {
    let (d, p, trials) = (cfg.dim, cfg.grade, cfg.trials);
    let tensor_cost = d.pow(p as u32) * factorial(p);
    let tensor_ok = tensor_cost <= TENSOR_BUDGET;
    let over_budget = || {
        Outcome::degenerate(
            0.0,
            format!("dᵖ·p! = {tensor_cost} exceeds the tensor budget"),
        )
    };
    let zero_power = p > d;

    run.check("wedge.tensor_inner_oracle", 1e-12, |rng| {
        if !tensor_ok {
            return Ok(over_budget());
        }
        let dev = max_over(trials, || {
            let u = random_tensor(rng, d, p)?;
            let v = random_tensor(rng, d, p)?;
            let mut direct = Complex64::new(0.0, 0.0);
            for (a, b) in u.entries().iter().zip(v.entries()) {
                direct += a * b.conj();
            }
            direct *= factorial(p) as f64;
            Ok(rel(tensor_inner(&u, &v)?, direct))
        })?;
        Ok(Outcome::new(
            dev,
            "p!-scaled inner product against the entry sum",
        ))
    });

    run.check("wedge.permute_adjoint", 1e-12, |rng| {
        if !tensor_ok {
            return Ok(over_budget());
        }
        let dev = max_over(trials, || {
            let (u, v) = (random_tensor(rng, d, p)?, random_tensor(rng, d, p)?);
            let s = random_permutation(rng, p);
            let adj = rel(
                tensor_inner(&permute(&s, &u)?, &v)?,
                tensor_inner(&u, &permute(&s.inverse(), &v)?)?,
            );
            let iso = rel(
                tensor_inner(&permute(&s, &u)?, &permute(&s, &v)?)?,
                tensor_inner(&u, &v)?,
            );
            Ok(adj.max(iso))
        })?;
        Ok(Outcome::new(dev, "S_σ* = S_{σ⁻¹} and S_σ is unitary"))
    });

    run.check("wedge.permute_action", 1e-12, |rng| {
        if !tensor_ok {
            return Ok(over_budget());
        }
        let dev = max_over(trials, || {
            let u = random_tensor(rng, d, p)?;
            let (s, t) = (random_permutation(rng, p), random_permutation(rng, p));
            let composed = permute(&s.compose(&t)?, &u)?;
            let stepwise = permute(&t, &permute(&s, &u)?)?;
            let xs = random_vectors(rng, d, p);
            let reordered: Vec<_> = (0..p).map(|k| xs[s.apply(k)].clone()).collect();
            let elem = permute(&s, &FullTensor::elementary(&xs)?)?
                .max_abs_diff(&FullTensor::elementary(&reordered)?)?;
            Ok(composed.max_abs_diff(&stepwise)?.max(elem))
        })?;
        Ok(Outcome::new(dev, "S_σ reorders factors; S_{σ∘τ} = S_τ S_σ"))
    });

    run.check("wedge.antisymmetrizer_projection", 1e-12, |rng| {
        if !tensor_ok {
            return Ok(over_budget());
        }
        let dev = max_over(trials, || {
            let (u, v) = (random_tensor(rng, d, p)?, random_tensor(rng, d, p)?);
            let pu = antisymmetrize(&u)?;
            let idem = antisymmetrize(&pu)?.max_abs_diff(&pu)?;
            let sym = rel(
                tensor_inner(&pu, &v)?,
                tensor_inner(&u, &antisymmetrize(&v)?)?,
            );
            Ok(idem.max(sym))
        })?;
        Ok(Outcome::new(dev, "P² = P and P* = P"))
    });

    run.check("wedge.antisymmetrizer_rank", 0.0, |_| {
        if d.pow(p as u32) > RANK_BUDGET {
            return Ok(Outcome::degenerate(
                0.0,
                format!("dᵖ = {} exceeds the rank budget", d.pow(p as u32)),
            ));
        }
        let sv = antisymmetrizer_matrix(d, p)?.singular_values();
        let rank = sv.iter().filter(|s| **s > 1e-8).count();
        Ok(Outcome::new(
            rank.abs_diff(binomial(d, p)) as f64,
            format!("numeric rank {rank}, C({d},{p}) = {}", binomial(d, p)),
        ))
    });

    run.check("wedge.gram_routes", 1e-10, |rng| {
        let dev = max_over(trials, || {
            let (xs, ys) = (random_vectors(rng, d, p), random_vectors(rng, d, p));
            let g = gram_inner(&xs, &ys)?;
            let mut dev = rel(g, leibniz(&xs, &ys));
            if !zero_power {
                dev = dev.max(rel(g, wedge(&xs)?.inner(&wedge(&ys)?)?));
            }
            if tensor_ok {
                let ax = antisymmetrize(&FullTensor::elementary(&xs)?)?;
                let ay = antisymmetrize(&FullTensor::elementary(&ys)?)?;
                dev = dev.max(rel(g, tensor_inner(&ax, &ay)?));
            }
            if zero_power {
                dev = dev.max(g.norm());
            }
            Ok(dev)
        })?;
        let msg = "Gram determinant against Leibniz, minors and antisymmetrized tensors";
        Ok(if zero_power {
            Outcome::degenerate(
                dev,
                format!("grade {p} > dim {d}: all routes vanish; {msg}"),
            )
        } else {
            Outcome::new(dev, msg)
        })
    });

    run.check("wedge.alternating", 1e-12, |rng| {
        if p < 2 {
            return Ok(Outcome::degenerate(0.0, "grade 1 has no pairs to swap"));
        }
        let dev = max_over(trials, || {
            let xs = random_vectors(rng, d, p);
            let i = rng.random_range(0..p);
            let j = (i + rng.random_range(1..p)) % p;
            let w = wedge(&xs)?;
            let mut swapped = xs.clone();
            swapped.swap(i, j);
            let neg = WedgeVector::from_coords(d, p, w.coords().iter().map(|z| -z).collect())?;
            let mut repeated = xs.clone();
            repeated[j] = repeated[i].clone();
            Ok(wedge(&swapped)?
                .max_abs_diff(&neg)?
                .max(wedge(&repeated)?.norm()))
        })?;
        Ok(if zero_power {
            Outcome::degenerate(dev, format!("grade {p} > dim {d}: ∧ᵖ = 0"))
        } else {
            Outcome::new(dev, "swap negates, repetition vanishes")
        })
    });

    run.check("wedge.gram_nonnegative", 1e-12, |rng| {
        let dev = max_over(trials, || {
            let xs = random_vectors(rng, d, p);
            let g = gram_inner(&xs, &xs)?;
            let scale = g.norm().max(1.0);
            Ok((g.im.abs() / scale).max(-g.re / scale))
        })?;
        Ok(Outcome::new(dev, "det⟨xᵢ, xⱼ⟩ is real and nonnegative"))
    });

    run.check("wedge.two_vector_norm", 1e-12, |rng| {
        let dev = max_over(trials, || {
            let xs = random_vectors(rng, d, 2);
            let (nx, ny) = (wedgeops::norm(&xs[0]), wedgeops::norm(&xs[1]));
            let expect = nx * nx * ny * ny - wedgeops::inner(&xs[0], &xs[1]).norm_sqr();
            Ok((wedge(&xs)?.norm().powi(2) - expect).abs() / (nx * nx * ny * ny).max(1.0))
        })?;
        Ok(Outcome::new(dev, "‖x∧y‖² = ‖x‖²‖y‖² − |⟨x,y⟩|²"))
    });

    run.check("wedge.minor_consistency", 1e-12, |rng| {
        let dev = max_over(trials, || {
            let xs = random_vectors(rng, d, p);
            let head = if p == 1 {
                WedgeVector::unit(d)
            } else {
                wedge(&xs[..p - 1])?
            };
            head.wedge_vector(&xs[p - 1])?.max_abs_diff(&wedge(&xs)?)
        })?;
        Ok(if zero_power {
            Outcome::degenerate(dev, format!("grade {p} > dim {d}: ∧ᵖ = 0"))
        } else {
            Outcome::new(dev, "grade raising agrees with p×p minors")
        })
    });

    run.check("wedge.residual_norm", 1e-10, |rng| {
        let dev = max_over(trials, || {
            let j = rng.random_range(0..=p.min(d));
            let us = random_orthonormal(rng, d, j);
            let x = random_vector(rng, d);
            let r = residual_norm_check(&us, &x)?;
            Ok((r.wedge_norm - r.residual_norm).abs())
        })?;
        Ok(Outcome::new(dev, "‖u₁∧…∧u_j∧x‖ = ‖x − Σ⟨x,uᵢ⟩uᵢ‖"))
    });

    run.check("wedge.hadamard", 0.0, |rng| {
        let mut violations = 0;
        let mut ratio: f64 = 0.0;
        for _ in 0..trials {
            let a = random_matrix(rng, d, d);
            let b = hadamard_bounds(&a)?;
            ratio = ratio.max(b.det_abs / b.column_bound.min(b.row_bound));
            if !b.holds(1e-12) {
                violations += 1;
            }
        }
        Ok(Outcome::new(
            violations as f64,
            format!("violations; max |det| / bound = {ratio:.4}"),
        ))
    });

    run.check("wedge.lambda_bound", 0.0, |rng| {
        let mut violations = 0;
        for _ in 0..trials {
            let xs: Vec<Vec<Complex64>> = (0..p)
                .map(|_| {
                    let r: f64 = rng.random_range(0.0..1.0);
                    random_unit_vector(rng, d)
                        .into_iter()
                        .map(|z| z * r)
                        .collect()
                })
                .collect();
            let b = lambda_bound(&xs)?;
            let slack = 1.0 + 1e-12;
            if b.wedge_norm_sq > b.unit_ball_bound * slack
                || b.wedge_norm_sq > b.homogeneous_bound * slack
            {
                violations += 1;
            }
        }
        Ok(Outcome::new(
            violations as f64,
            "violations over tuples in the unit ball",
        ))
    });
}

fn hardy_checks(run: &mut Runner, cfg: &RunConfig) {
    let (d, n, p, trials) = (cfg.dim, cfg.degree as i64, cfg.grade, cfg.trials);

    run.check("hardy.parseval", 1e-8, |rng| {
        let dev = max_over(trials, || {
            let f = random_series(rng, d, -n, n);
            let quad: f64 = (0..QUADRATURE)
                .map(|j| {
                    let v = f.eval(circle_point(2.0 * PI * j as f64 / QUADRATURE as f64))?;
                    Ok(wedgeops::norm(&v).powi(2))
                })
                .sum::<Result<f64>>()?
                / QUADRATURE as f64;
            let coeff: f64 = f.flat_coeffs().iter().map(|z| z.norm_sqr()).sum();
            Ok((f.l2_norm().powi(2) - quad)
                .abs()
                .max((f.l2_norm().powi(2) - coeff).abs()))
        })?;
        Ok(Outcome::new(
            dev,
            format!("‖f‖² against {QUADRATURE}-point quadrature"),
        ))
    });

    run.check("hardy.riesz_projection", 1e-12, |rng| {
        let dev = max_over(trials, || {
            let f = random_series(rng, d, -n, n);
            let g = random_series(rng, d, -n - 1, n / 2);
            let pf = f.riesz_project();
            let idem = pf.riesz_project().max_abs_diff(&pf)?;
            let sym = rel(pf.l2_inner(&g)?, f.l2_inner(&g.riesz_project())?);
            Ok(idem.max(sym))
        })?;
        Ok(Outcome::new(dev, "P₊² = P₊ and P₊* = P₊"))
    });

    run.check("hardy.wedge_eval", 1e-12, |rng| {
        let dev = max_over(trials, || {
            let fs: Vec<_> = (0..p).map(|_| random_series(rng, d, 0, n.min(3))).collect();
            let w = pointwise_wedge(&fs)?;
            let z = circle_point(rng.random_range(0.0..2.0 * PI));
            let r: f64 = rng.random_range(0.0..1.0);
            let mut dev: f64 = 0.0;
            for z in [z, z * r] {
                let vals = fs.iter().map(|f| f.eval(z)).collect::<Result<Vec<_>>>()?;
                let direct = wedge(&vals)?;
                let scale = vals
                    .iter()
                    .map(|v| wedgeops::norm(v))
                    .product::<f64>()
                    .max(1.0);
                dev = dev.max(w.eval(z)?.max_abs_diff(&direct)? / scale);
            }
            Ok(dev)
        })?;
        Ok(if p > d {
            Outcome::degenerate(dev, format!("grade {p} > dim {d}: ∧ᵖ = 0"))
        } else {
            Outcome::new(dev, "(f₁∧̇…∧̇f_p)(z) = f₁(z)∧…∧f_p(z) on 𝕋 and in 𝔻")
        })
    });

    let pair_needs_two = || Outcome::degenerate(0.0, "∧²ℂ¹ = 0");

    run.check("hardy.h2_sup_bound", 1e-8, |rng| {
        if d < 2 {
            return Ok(pair_needs_two());
        }
        let dev = max_over(trials, || {
            let x = random_series(rng, d, 0, n);
            let y = random_series(rng, d, 0, 3);
            let w = pointwise_wedge(&[x.clone(), y.clone()])?;
            let sup = linf_upper_bound(&y, 64.max(min_samples(&y)))?;
            Ok((w.series().l2_norm() - sup * x.l2_norm()).max(0.0))
        })?;
        Ok(Outcome::new(dev, "‖x∧̇y‖₂ ≤ ‖y‖_∞‖x‖₂ (excess)"))
    });

    run.check("hardy.h1_bound", 1e-8, |rng| {
        if d < 2 {
            return Ok(pair_needs_two());
        }
        let dev = max_over(trials, || {
            let x = random_series(rng, d, 0, n);
            let y = random_series(rng, d, 0, n);
            let w = pointwise_wedge(&[x.clone(), y.clone()])?;
            let l1 = lp_norm(w.series(), LpExponent::One, QUADRATURE)?;
            Ok((l1 - x.l2_norm() * y.l2_norm()).max(0.0))
        })?;
        Ok(Outcome::new(dev, "‖x∧̇y‖₁ ≤ ‖x‖₂‖y‖₂ (excess)"))
    });

    run.check("hardy.multiwedge_contraction", 1e-10, |rng| {
        if d < 2 {
            return Ok(pair_needs_two());
        }
        let count = p.saturating_sub(1).clamp(1, d - 1);
        let dev = max_over(trials, || {
            let fam = random_pointwise_orthonormal(rng, d, count, 2)?;
            let x = random_series(rng, d, 0, n);
            let mut all = fam.clone();
            all.push(x.clone());
            let lhs = pointwise_wedge(&all)?.series().l2_norm();
            let mut defect = 0.0;
            for xi in &fam {
                defect += x.pointwise_inner(xi)?.l2_norm().powi(2);
            }
            let norm_sq = x.l2_norm().powi(2);
            let identity = (norm_sq - lhs * lhs - defect).abs() / norm_sq.max(1.0);
            Ok(identity.max(lhs - x.l2_norm()))
        })?;
        Ok(Outcome::new(
            dev,
            format!("‖ξ₀∧̇…∧̇ξ_{}∧̇x‖² = ‖x‖² − Σ‖⟨x,ξᵢ⟩‖²", count - 1),
        ))
    });

    run.check("hardy.json_round_trip", 0.0, |rng| {
        let mut mismatches = 0;
        for _ in 0..trials {
            let f = random_series(rng, d, -n, n);
            let back = VecTrigPoly::from_json(&f.to_json()?)?;
            let same = back.kmin() == f.kmin()
                && back.flat_coeffs().len() == f.flat_coeffs().len()
                && back
                    .flat_coeffs()
                    .iter()
                    .zip(f.flat_coeffs())
                    .all(|(a, b)| {
                        a.re.to_bits() == b.re.to_bits() && a.im.to_bits() == b.im.to_bits()
                    });
            let g = MatSymbol::new(-1, (0..3).map(|_| random_matrix(rng, d, d)).collect())?;
            let same_symbol = MatSymbol::from_json(&g.to_json()?)? == g;
            if !same || !same_symbol {
                mismatches += 1;
            }
        }
        Ok(Outcome::new(
            mismatches as f64,
            "bit-exact series and symbol round trips",
        ))
    });

    run.check("hardy.rank_one_pointwise", 1e-10, |rng| {
        let dev = max_over(trials, || {
            let xi = random_series(rng, d, -1, n.min(3));
            let eta = random_series(rng, d, 0, n.min(3));
            let x = random_vector(rng, d);
            let z = circle_point(rng.random_range(0.0..2.0 * PI));
            let gx =
                rank_one_symbol(&xi, &eta)?.eval(z)? * nalgebra::DVector::from_column_slice(&x);
            let a = wedgeops::inner(&x, &eta.eval(z)?);
            let xz = xi.eval(z)?;
            Ok(gx
                .iter()
                .zip(&xz)
                .map(|(g, v)| (g - a * v).norm())
                .fold(0.0, f64::max))
        })?;
        Ok(Outcome::new(dev, "(ξη*)(z)x = ⟨x, η(z)⟩ξ(z)"))
    });

    run.check("hardy.inner_detection", 0.0, |rng| {
        let mut wrong = 0;
        for _ in 0..trials {
            let xi = random_inner(rng, d, n.min(4));
            if !is_inner(&xi, 1e-12) || is_inner(&xi.scale(Complex64::new(1.1, 0.0)), 1e-3) {
                wrong += 1;
            }
        }
        Ok(Outcome::new(
            wrong as f64,
            "random inner polynomials detected; scaled copies rejected",
        ))
    });
}

/// `ξ = s·η` for scalar `s` of degree 1, so that `ker C_ξ ⊇ {q·η}` is large
/// enough to test.
fn structured_symbol(rng: &mut SeededRng, d: usize, deg: i64) -> Result<VecTrigPoly> {
    let s = random_series(rng, 1, 0, 1);
    random_series(rng, d, 0, deg).scalar_mul(&s)
}

fn operator_checks(run: &mut Runner, cfg: &RunConfig) {
    let (d, n, p, trials) = (cfg.dim, cfg.degree, cfg.grade, cfg.trials);
    let ni = n as i64;
    let small = || Outcome::degenerate(0.0, "creation needs dim ≥ 2 (∧²ℂ¹ = 0)");

    run.check("operators.toeplitz_oracle", 1e-12, |rng| {
        let dev = max_over(trials, || {
            let g = MatSymbol::new(-2, (0..5).map(|_| random_matrix(rng, d, d)).collect())?;
            let h = random_series(rng, d, 0, ni);
            let expect = g.apply(&h)?.riesz_project().truncate(0, ni)?;
            toeplitz(&g, n)?.apply(&h)?.max_abs_diff(&expect)
        })?;
        Ok(Outcome::new(dev, "T_G h = P₊(Gh) truncated"))
    });

    run.check("operators.toeplitz_linearity", 1e-13, |rng| {
        let dev = max_over(trials, || {
            let g = MatSymbol::new(-1, (0..3).map(|_| random_matrix(rng, d, d)).collect())?;
            let h = MatSymbol::new(0, (0..2).map(|_| random_matrix(rng, d, d)).collect())?;
            let sum = toeplitz(&g.add(&h)?, n)?;
            let parts = toeplitz(&g, n)?.add(&toeplitz(&h, n)?)?;
            let m = random_matrix(rng, d, d);
            let t = toeplitz(&MatSymbol::constant(m.clone()), n)?;
            let mut block_diag: f64 = 0.0;
            for r in 0..=n {
                for c in 0..=n {
                    let b = t.entries().view((r * d, c * d), (d, d)).into_owned();
                    let e = if r == c {
                        m.clone()
                    } else {
                        CMatrix::zeros(d, d)
                    };
                    block_diag = block_diag.max(wedgeops::max_abs(&(b - e)));
                }
            }
            Ok(sum.max_abs_diff(&parts)?.max(block_diag))
        })?;
        Ok(Outcome::new(
            dev,
            "T_{G+H} = T_G + T_H; constant symbols are block diagonal",
        ))
    });

    run.check("operators.creation_columns", 1e-13, |rng| {
        if d < 2 {
            return Ok(small());
        }
        let dev = max_over(trials, || {
            let xi = {
                let k = rng.random_range(0..=3);
                random_series(rng, d, 0, k)
            };
            let op = creation(&xi, n)?;
            let mut dev: f64 = 0.0;
            for k in 0..=n {
                for i in 0..d {
                    let mut e = vec![Complex64::new(0.0, 0.0); d];
                    e[i] = Complex64::new(1.0, 0.0);
                    let f = VecTrigPoly::monomial(k as i64, e)?;
                    let col = op.entries().column(op.domain().index(k, i)).into_owned();
                    let got = op.codomain().to_series(col.as_slice())?;
                    dev = dev.max(got.max_abs_diff(pointwise_wedge(&[xi.clone(), f])?.series())?);
                }
            }
            Ok(dev)
        })?;
        Ok(Outcome::new(dev, "column (k, i) of C_ξ is ξ ∧̇ zᵏeᵢ"))
    });

    run.check("operators.adjoint_consistency", 1e-13, |rng| {
        if d < 2 {
            return Ok(small());
        }
        let dev = max_over(trials, || {
            let xi = {
                let k = rng.random_range(0..=3);
                random_series(rng, d, 0, k)
            };
            let op = creation(&xi, n)?;
            let h = random_series(rng, d, 0, ni);
            let w = random_series(
                rng,
                op.codomain().valdim(),
                0,
                op.codomain().degree() as i64,
            );
            Ok(rel(
                op.apply(&h)?.l2_inner(&w)?,
                h.l2_inner(&op.adjoint().apply(&w)?)?,
            ))
        })?;
        Ok(Outcome::new(dev, "⟨C h, w⟩ = ⟨h, C* w⟩"))
    });

    run.check("operators.creation_norm_bound", 1e-12, |rng| {
        if d < 2 {
            return Ok(small());
        }
        let dev = max_over(trials, || {
            let xi = {
                let k = rng.random_range(0..=3);
                random_series(rng, d, 0, k)
            };
            let sup = linf_upper_bound(&xi, 64)?;
            Ok(((creation(&xi, n)?.op_norm() - sup) / sup.max(1.0)).max(0.0))
        })?;
        Ok(Outcome::new(dev, "‖C_ξ‖ ≤ ‖ξ‖_∞ (excess)"))
    });

    run.check("operators.compression_identity", 1e-12, |rng| {
        if d < 2 {
            return Ok(small());
        }
        let dev = max_over(trials, || {
            let xi = {
                let k = rng.random_range(0..=4);
                random_inner(rng, d, k)
            };
            verify_toeplitz_identity(&xi, n)
        })?;
        Ok(Outcome::new(dev, "C_ξ*C_ξ = I − T_{ξξ*} for inner ξ"))
    });

    run.check("operators.adjoint_on_wedge_routes", 1e-12, |rng| {
        if d < 2 {
            return Ok(small());
        }
        let dev = max_over(trials, || {
            let deg = rng.random_range(0..=3);
            let xi = random_series(rng, d, 0, deg);
            let f = random_series(rng, d, 0, ni);
            let g = random_series(rng, d, 0, deg);
            let formula = adjoint_on_wedge(&xi, &f, &g, n)?;
            let w = pointwise_wedge(&[f, g])?.into_series();
            let matrix = creation(&xi, n)?.adjoint().apply(&w)?;
            Ok(formula.max_abs_diff(&matrix)? / w.l2_norm().max(1.0))
        })?;
        Ok(Outcome::new(
            dev,
            "C*(f∧̇g) = P₊(⟨f,ξ⟩g − ⟨g,ξ⟩f) against the matrix adjoint",
        ))
    });

    run.check("operators.poc_orthogonality", 1e-10, |rng| {
        let space = SpaceDescriptor::hardy(d, n)?;
        let dev = max_over(trials, || {
            let count = rng.random_range(1..=d.min(2));
            let xis: Vec<_> = (0..count)
                .map(|_| {
                    let k = rng.random_range(0..=2);
                    random_series(rng, d, 0, k)
                })
                .collect();
            let poc = poc_basis(&space, &xis, NULLSPACE_RTOL)?;
            let mut dev: f64 = 0.0;
            for h in poc.basis_series() {
                for xi in &xis {
                    let worst = h
                        .pointwise_inner(xi)?
                        .iter()
                        .map(|(_, a)| a[0].norm())
                        .fold(0.0, f64::max);
                    dev = dev.max(worst);
                }
            }
            let gram = poc.basis().adjoint() * poc.basis();
            Ok(dev.max(wedgeops::max_abs(
                &(gram - CMatrix::identity(poc.dim(), poc.dim())),
            )))
        })?;
        Ok(Outcome::new(
            dev,
            "orthonormal Poc basis with ⟨h, ξᵢ⟩ ≡ 0 coefficientwise",
        ))
    });

    run.check("operators.poc_kernel_orthogonality", 1e-10, |rng| {
        if d < 2 {
            return Ok(small());
        }
        let space = SpaceDescriptor::hardy(d, n)?;
        let dev = max_over(trials, || {
            let xi = {
                let k = rng.random_range(0..=2);
                structured_symbol(rng, d, k)
            }?;
            let poc = poc_basis(&space, std::slice::from_ref(&xi), NULLSPACE_RTOL)?;
            let ker = kernel_creation(&xi, n, NULLSPACE_RTOL)?;
            Ok(wedgeops::max_abs(&(poc.basis().adjoint() * ker.basis())))
        })?;
        Ok(Outcome::new(dev, "Poc ⊥ ker C_ξ"))
    });

    for (id, inside) in [
        ("operators.kernel_parallel_circle", false),
        ("operators.kernel_parallel_disc", true),
    ] {
        run.check(id, 1e-8, |rng| {
            if d < 2 {
                return Ok(small());
            }
            let mut members = 0;
            let dev = max_over(trials, || {
                let xi = { let k = rng.random_range(0..=2); structured_symbol(rng, d, k) }?;
                let ker = kernel_creation(&xi, n, NULLSPACE_RTOL)?;
                members += ker.dim();
                let mut dev: f64 = 0.0;
                for h in ker.basis_series() {
                    for _ in 0..CIRCLE_SAMPLES {
                        let mut z = circle_point(rng.random_range(0.0..2.0 * PI));
                        if inside {
                            z *= rng.random_range(0.0..1.0);
                        }
                        dev = dev.max(parallel_deviation(&xi, &h, z)?);
                    }
                }
                Ok(dev)
            })?;
            let place = if inside { "inside 𝔻" } else { "on 𝕋" };
            Ok(Outcome::new(
                dev,
                format!("kernel vectors parallel to ξ at {CIRCLE_SAMPLES} points {place}; {members} vectors tested"),
            ))
        });
    }

    run.check("operators.isometry_dichotomy", 0.0, |rng| {
        if d < 2 {
            return Ok(small());
        }
        let xi = random_inner(rng, d, 2);
        let r = isometry_set_check(&xi, n, trials.max(2), rng)?;
        Ok(Outcome::new(
            r.misclassified as f64,
            format!(
                "misclassified of {} ({} in Poc of dim {}); min margin {:.3e}",
                r.trials,
                r.members,
                r.poc_dimension,
                r.min_margin.min(f64::MAX)
            ),
        ))
    });

    let count = p.saturating_sub(1).clamp(1, d.max(2) - 1);
    for (id, tol) in [
        ("operators.multiwedge_isometry", 1e-10),
        ("operators.multiwedge_contraction", 1e-10),
    ] {
        run.check(id, tol, |rng| {
            if d < 2 {
                return Ok(small());
            }
            let fam = random_pointwise_orthonormal(rng, d, count, 2)?;
            let r = multiwedge_isometry_check(&fam, n, trials, rng)?;
            Ok(if id.ends_with("isometry") {
                Outcome::new(
                    r.max_equality_deviation,
                    format!(
                        "{count} pointwise orthonormal symbols, Poc dim {}",
                        r.poc_dimension
                    ),
                )
            } else {
                Outcome::new(
                    r.max_contraction_excess.max(0.0),
                    format!("{count} pointwise orthonormal symbols"),
                )
            })
        });
    }

    run.check("operators.shift_formula", 1e-12, |_| {
        if n < 2 {
            return Ok(Outcome::degenerate(0.0, "needs degree ≥ 2"));
        }
        let r = partial_isometry_counterexample(n)?;
        Ok(Outcome::new(
            r.formula_deviation
                .max(r.square_deviation)
                .max((r.defect_norm - 0.25).abs()),
            format!("‖A² − A‖ = {:.15}", r.defect_norm),
        ))
    });

    run.check("operators.disc_counterexample", 1e-10, |_| {
        if n < 1 {
            return Ok(Outcome::degenerate(0.0, "needs degree ≥ 1"));
        }
        let (f, g) = (disc_counterexample_f(), disc_counterexample_g());
        let poc = poc_basis(
            &SpaceDescriptor::hardy(2, n)?,
            std::slice::from_ref(&g),
            NULLSPACE_RTOL,
        )?;
        let at_half = wedgeops::inner(
            &f.eval(Complex64::new(0.5, 0.0))?,
            &g.eval(Complex64::new(0.5, 0.0))?,
        );
        Ok(Outcome::new(
            (poc.residual(&f)? / f.l2_norm()).max((at_half.norm() - 0.375).abs()),
            "(1, −z) ∈ Poc({(z, z²)}) yet |⟨f(½), g(½)⟩| = 3/8",
        ))
    });
}

fn input_checks(run: &mut Runner, cfg: &RunConfig, index: usize, xi: &VecTrigPoly) {
    let n = cfg.degree;
    let prefix = format!("input.{index}");
    let d = xi.valdim();

    run.check(&format!("{prefix}.poc_orthogonality"), 1e-10, |_| {
        let poc = poc_basis(
            &SpaceDescriptor::hardy(d, n)?,
            std::slice::from_ref(xi),
            NULLSPACE_RTOL,
        )?;
        let mut dev: f64 = 0.0;
        for h in poc.basis_series() {
            dev = dev.max(
                h.pointwise_inner(xi)?
                    .iter()
                    .map(|(_, a)| a[0].norm())
                    .fold(0.0, f64::max),
            );
        }
        let msg = format!("Poc dimension {}", poc.dim());
        Ok(if poc.is_degenerate() {
            Outcome::degenerate(dev, msg)
        } else {
            Outcome::new(dev, msg)
        })
    });

    run.check(&format!("{prefix}.kernel_parallel"), 1e-8, |rng| {
        if d < 2 {
            return Ok(Outcome::degenerate(0.0, "creation needs dim ≥ 2"));
        }
        let ker = kernel_creation(xi, n, NULLSPACE_RTOL)?;
        let mut dev: f64 = 0.0;
        for h in ker.basis_series() {
            for _ in 0..CIRCLE_SAMPLES {
                let z = circle_point(rng.random_range(0.0..2.0 * PI)) * rng.random_range(0.0..=1.0);
                dev = dev.max(parallel_deviation(xi, &h, z)?);
            }
        }
        let msg = format!("kernel dimension {}", ker.dim());
        Ok(if ker.is_degenerate() {
            Outcome::degenerate(0.0, msg)
        } else {
            Outcome::new(dev, msg)
        })
    });

    run.check(&format!("{prefix}.toeplitz_identity"), 1e-12, |_| {
        if d < 2 {
            return Ok(Outcome::degenerate(0.0, "creation needs dim ≥ 2"));
        }
        if !is_inner(xi, EQUALITY_TOL) {
            return Ok(Outcome::degenerate(0.0, "symbol is not inner"));
        }
        Ok(Outcome::new(
            verify_toeplitz_identity(xi, n)?,
            "C_ξ*C_ξ = I − T_{ξξ*}",
        ))
    });
}
