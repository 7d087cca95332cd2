//! The fixed worked examples, compiled in so they run with no setup.

use std::collections::BTreeMap;
use std::f64::consts::SQRT_2;

use wedgeops::families::{
    block_family, constant_ones, disc_counterexample_f, disc_counterexample_g, inner_example,
};
use wedgeops::hardy::VecTrigPoly;
use wedgeops::operators::{
    adjoint_on_wedge, creation, isometry_set_check, multiwedge_isometry_check,
    partial_isometry_counterexample, poc_basis, SpaceDescriptor, NULLSPACE_RTOL,
};
use wedgeops::{Complex64, Result};

use crate::error::CliError;
use crate::report::Report;
use crate::runner::{Outcome, Runner};

pub const SHIFT_DEGREES: std::ops::RangeInclusive<usize> = 2..=10;
pub const DICHOTOMY_TRIALS: usize = 100;
pub const DICHOTOMY_DEGREE: usize = 5;
pub const BLOCK_TRIALS: usize = 50;
pub const BLOCK_DEGREE: usize = 4;

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// `½(1, 1 − z)`.
pub fn golden_adjoint_value() -> VecTrigPoly {
    VecTrigPoly::from_components(0, &[vec![c(0.5)], vec![c(0.5), c(-0.5)]]).expect("finite")
}

/// `C_ξ*C_ξ h` for `ξ = (1, z)/√2`, `h = (1, 1)`, by both the matrix and the
/// pointwise formula, returned as `(matrix, formula)`.
pub fn golden_adjoint(degree: usize) -> Result<(VecTrigPoly, VecTrigPoly)> {
    let xi = inner_example();
    let h = constant_ones();
    let op = creation(&xi, degree)?;
    let matrix = op.adjoint().compose(&op)?.apply(&h)?;
    let formula = adjoint_on_wedge(&xi, &xi, &h, degree)?;
    Ok((matrix, formula))
}

/// `max(|c₋₁ − 1/(2√2)|, max_{k≠−1} |c_k|)` for `z ↦ ⟨(C_ξ*C_ξh)(z), ξ(z)⟩`.
pub fn golden_pairing_deviation(degree: usize) -> Result<f64> {
    let (value, _) = golden_adjoint(degree)?;
    let pairing = value.pointwise_inner(&inner_example())?;
    let target = 1.0 / (2.0 * SQRT_2);
    Ok(pairing
        .iter()
        .map(|(k, a)| {
            if k == -1 {
                (a[0] - target).norm()
            } else {
                a[0].norm()
            }
        })
        .fold((pairing.coeff_or_zero(-1)[0] - target).norm(), f64::max))
}

pub fn paper_examples(
    seed: u64,
    overrides: &BTreeMap<String, f64>,
) -> std::result::Result<Report, CliError> {
    let mut run = Runner::new(seed, overrides);

    run.check("example.adjoint_golden", 1e-12, |_| {
        let expect = golden_adjoint_value();
        let mut dev: f64 = 0.0;
        for n in 1..=4 {
            let (m, f) = golden_adjoint(n)?;
            dev = dev
                .max(m.max_abs_diff(&expect)?)
                .max(f.max_abs_diff(&expect)?);
        }
        Ok(Outcome::new(
            dev,
            "C*C(1,1) = ½(1, 1−z); matrix and pointwise routes, N = 1..=4",
        ))
    });

    run.check("example.pairing_frequency", 1e-12, |_| {
        Ok(Outcome::new(
            golden_pairing_deviation(2)?,
            "⟨C*C h, ξ⟩ has the single coefficient 1/(2√2) at frequency −1",
        ))
    });

    run.check("example.poc_membership", 1e-10, |_| {
        let g = disc_counterexample_g();
        let f = disc_counterexample_f();
        let mut dev: f64 = 0.0;
        for n in 1..=4 {
            let space = SpaceDescriptor::hardy(2, n)?;
            let poc = poc_basis(&space, std::slice::from_ref(&g), NULLSPACE_RTOL)?;
            dev = dev.max(poc.residual(&f)? / f.l2_norm());
        }
        let pairing = f
            .pointwise_inner(&g)?
            .iter()
            .map(|(_, a)| a[0].norm())
            .fold(0.0, f64::max);
        Ok(Outcome::new(
            dev.max(pairing),
            "f = (1, −z) lies in Poc({(z, z²)}) for N = 1..=4",
        ))
    });

    run.check("example.disc_inner_product", 1e-12, |_| {
        let z = c(0.5);
        let v = wedgeops::inner(
            &disc_counterexample_f().eval(z)?,
            &disc_counterexample_g().eval(z)?,
        );
        Ok(Outcome::new(
            (v.norm() - 0.375).abs(),
            format!("|⟨f(½), g(½)⟩| = {}", v.norm()),
        ))
    });

    let shifts: Result<Vec<_>> = SHIFT_DEGREES.map(partial_isometry_counterexample).collect();
    let shifts = shifts.map_err(CliError::from)?;
    let worst = |f: &dyn Fn(&wedgeops::operators::ShiftReport) -> f64| {
        shifts.iter().map(f).fold(0.0, f64::max)
    };
    let span = format!("N = {}..={}", SHIFT_DEGREES.start(), SHIFT_DEGREES.end());
    let formula = worst(&|r| r.formula_deviation);
    let square = worst(&|r| r.square_deviation);
    let defect = worst(&|r| (r.defect_norm - 0.25).abs());
    let contraction = worst(&|r| {
        r.self_adjoint_deviation
            .max(-r.min_eigenvalue)
            .max(r.max_eigenvalue - 1.0)
    });
    run.check("example.shift_formula", 1e-12, |_| {
        Ok(Outcome::new(
            formula,
            format!("C*C = ½[[1,−S*],[−S,1]] on degree ≤ N−1, {span}"),
        ))
    });
    run.check("example.shift_square", 1e-12, |_| {
        Ok(Outcome::new(
            square,
            format!("(C*C)² = ½[[1,−S*],[−S,1−½P₀]] on degree ≤ N−1, {span}"),
        ))
    });
    run.check("example.shift_defect", 1e-12, |_| {
        Ok(Outcome::new(
            defect,
            format!("‖(C*C)² − C*C‖ = ¼ on degree ≤ N−1, {span}"),
        ))
    });
    run.check("example.shift_positive_contraction", 1e-12, |_| {
        Ok(Outcome::new(
            contraction.max(0.0),
            format!("C*C self-adjoint with spectrum in [0, 1], {span}"),
        ))
    });

    run.check("example.isometry_dichotomy", 0.0, |rng| {
        let r = isometry_set_check(&inner_example(), DICHOTOMY_DEGREE, DICHOTOMY_TRIALS, rng)?;
        Ok(Outcome::new(
            r.misclassified as f64,
            format!(
                "{} trials, {} in Poc (dim {}), max equality deviation {:.2e}, min margin {:.3e}",
                r.trials, r.members, r.poc_dimension, r.max_equality_deviation, r.min_margin
            ),
        ))
    });

    let family = block_family();
    let block = |rng: &mut _| multiwedge_isometry_check(&family, BLOCK_DEGREE, BLOCK_TRIALS, rng);
    run.check("example.block_family_isometry", 1e-10, |rng| {
        let r = block(rng)?;
        Ok(Outcome::new(
            r.max_equality_deviation,
            format!(
                "ξ₀∧̇ξ₁∧̇f on {} samples from Poc (dim {})",
                r.trials, r.poc_dimension
            ),
        ))
    });
    run.check("example.block_family_contraction", 1e-12, |rng| {
        let r = block(rng)?;
        Ok(Outcome::new(
            r.max_contraction_excess.max(0.0),
            format!(
                "max ‖ξ₀∧̇ξ₁∧̇f‖ − ‖f‖ = {:.3e} over {} general f",
                r.max_contraction_excess, r.trials
            ),
        ))
    });

    let unused = run.unused_overrides();
    if !unused.is_empty() {
        return Err(CliError::Config(format!(
            "tolerance given for unknown check(s): {}",
            unused.join(", ")
        )));
    }
    Ok(Report::new("paper-examples", seed, run.finish()))
}
