mod common;

use std::f64::consts::PI;

use common::*;
use proptest::prelude::*;
use wedgeops::families::{random_pointwise_orthonormal, random_series};
use wedgeops::hardy::*;
use wedgeops::operators::{poc_basis, SpaceDescriptor, NULLSPACE_RTOL};
use wedgeops::wedge::wedge;
use wedgeops::Complex64;

const QUADRATURE: usize = 4096;

/// `(valdim, kmin, coefficient lists)`.
fn series_parts() -> impl Strategy<Value = (usize, i64, Vec<Vec<Complex64>>)> {
    (1usize..=4, -4i64..=2, 1usize..=6)
        .prop_flat_map(|(m, kmin, len)| (Just(m), Just(kmin), cvecs(m, len)))
}

fn analytic(m: usize) -> impl Strategy<Value = VecTrigPoly> {
    (0usize..=5)
        .prop_flat_map(move |n| cvecs(m, n + 1))
        .prop_map(|c| VecTrigPoly::new(c[0].len(), 0, c).unwrap())
}

fn pair_analytic() -> impl Strategy<Value = (VecTrigPoly, VecTrigPoly)> {
    (2usize..=4).prop_flat_map(|m| (analytic(m), analytic(m)))
}

proptest! {
    #[test]
    fn parseval_matches_coefficients_and_quadrature((m, kmin, coeffs) in series_parts()) {
        let f = VecTrigPoly::new(m, kmin, coeffs.clone()).unwrap();
        let direct: f64 = coeffs.iter().flatten().map(|z| z.norm_sqr()).sum();
        let quad: f64 = (0..QUADRATURE)
            .map(|j| {
                let v = eval_on_circle(kmin, &coeffs, 2.0 * PI * j as f64 / QUADRATURE as f64);
                inner(&v, &v).re
            })
            .sum::<f64>()
            / QUADRATURE as f64;
        let l2 = f.l2_inner(&f).unwrap();
        prop_assert!((l2.re - direct).abs() <= 1e-12 * direct.max(1.0));
        prop_assert!(l2.im == 0.0);
        prop_assert!((l2.re - quad).abs() <= 1e-8);
    }

    #[test]
    fn eval_matches_direct_sum((m, kmin, coeffs) in series_parts(), theta in 0.0f64..(2.0 * PI)) {
        let f = VecTrigPoly::new(m, kmin, coeffs.clone()).unwrap();
        let got = f.eval(circle_point(theta)).unwrap();
        let expect = eval_on_circle(kmin, &coeffs, theta);
        for (a, b) in got.iter().zip(&expect) {
            prop_assert!((a - b).norm() <= 1e-12);
        }
    }

    #[test]
    fn riesz_projection_is_orthogonal(
        (f, g) in (1usize..=3, -4i64..=1, -3i64..=1, 1usize..=6, 1usize..=6)
            .prop_flat_map(|(m, a, b, la, lb)| (
                cvecs(m, la).prop_map(move |c| VecTrigPoly::new(m, a, c).unwrap()),
                cvecs(m, lb).prop_map(move |c| VecTrigPoly::new(m, b, c).unwrap()),
            ))
    ) {
        let pf = f.riesz_project();
        prop_assert!(pf.is_analytic());
        prop_assert!(pf.riesz_project().max_abs_diff(&pf).unwrap() == 0.0);
        let lhs = pf.l2_inner(&g).unwrap();
        let rhs = f.l2_inner(&g.riesz_project()).unwrap();
        prop_assert!((lhs - rhs).norm() <= 1e-12);
    }

    #[test]
    fn pointwise_wedge_commutes_with_eval(
        (f, g) in pair_analytic(),
        theta in 0.0f64..(2.0 * PI),
        r in 0.0f64..1.0,
    ) {
        let w = pointwise_wedge(&[f.clone(), g.clone()]).unwrap();
        for z in [circle_point(theta), circle_point(theta) * r] {
            let direct = wedge(&[f.eval(z).unwrap(), g.eval(z).unwrap()]).unwrap();
            prop_assert!(w.eval(z).unwrap().max_abs_diff(&direct).unwrap() <= 1e-12);
        }
    }

    #[test]
    fn pointwise_wedge_on_circle_with_negative_frequencies(
        (f, g) in (2usize..=3).prop_flat_map(|m| (
            cvecs(m, 3).prop_map(move |c| VecTrigPoly::new(m, -1, c).unwrap()),
            cvecs(m, 2).prop_map(move |c| VecTrigPoly::new(m, -2, c).unwrap()),
        )),
        theta in 0.0f64..(2.0 * PI),
    ) {
        let z = circle_point(theta);
        let w = pointwise_wedge(&[f.clone(), g.clone()]).unwrap();
        let direct = wedge(&[f.eval(z).unwrap(), g.eval(z).unwrap()]).unwrap();
        prop_assert!(w.eval(z).unwrap().max_abs_diff(&direct).unwrap() <= 1e-12);
    }

    #[test]
    fn wedge_h2_bound_by_sup_norm((x, y) in pair_analytic()) {
        let w = pointwise_wedge(&[x.clone(), y.clone()]).unwrap();
        let k = 8 * y.bandwidth().max(8);
        let sup = linf_upper_bound(&y, k).unwrap();
        prop_assert!(w.series().l2_norm() <= sup * x.l2_norm() + 1e-8);
    }

    #[test]
    fn wedge_h1_bound((x, y) in pair_analytic()) {
        let w = pointwise_wedge(&[x.clone(), y.clone()]).unwrap();
        let l1 = lp_norm(w.series(), LpExponent::One, QUADRATURE).unwrap();
        prop_assert!(l1 <= x.l2_norm() * y.l2_norm() + 1e-8);
    }

    #[test]
    fn multiwedge_contracts_with_exact_defect(seed in any::<u64>(), d in 2usize..=4, count in 1usize..=3, n in 0usize..=4) {
        let count = count.min(d - 1);
        let mut r = rng(seed);
        let fam = random_pointwise_orthonormal(&mut r, d, count, 2).unwrap();
        let x = random_series(&mut r, d, 0, n as i64);
        let mut all = fam.clone();
        all.push(x.clone());
        let lhs = pointwise_wedge(&all).unwrap().series().l2_norm();
        prop_assert!(lhs <= x.l2_norm() + 1e-10);
        // ‖x‖² − ‖Ξ∧̇x‖² = Σᵢ ‖⟨x, ξᵢ⟩‖²
        let defect: f64 = fam.iter().map(|xi| x.pointwise_inner(xi).unwrap().l2_norm().powi(2)).sum();
        prop_assert!((x.l2_norm().powi(2) - lhs.powi(2) - defect).abs() <= 1e-10 * x.l2_norm().powi(2).max(1.0));

        // equality on the computed complement
        let space = SpaceDescriptor::hardy(d, n).unwrap();
        let poc = poc_basis(&space, &fam, NULLSPACE_RTOL).unwrap();
        for h in poc.basis_series() {
            let mut all = fam.clone();
            all.push(h.clone());
            let n2 = pointwise_wedge(&all).unwrap().series().l2_norm();
            prop_assert!((n2 - h.l2_norm()).abs() <= 1e-10);
        }
    }

    #[test]
    fn series_json_round_trip_is_bit_exact(
        (m, kmin, raw) in (1usize..=3, -3i64..=3, 1usize..=4).prop_flat_map(|(m, k, len)| (
            Just(m),
            Just(k),
            prop::collection::vec((prop::num::f64::NORMAL | prop::num::f64::SUBNORMAL | prop::num::f64::ZERO,
                                   prop::num::f64::NORMAL | prop::num::f64::ZERO), m * len),
        ))
    ) {
        let flat: Vec<Complex64> = raw.iter().map(|(a, b)| Complex64::new(*a, *b)).collect();
        let len = flat.len() / m;
        let f = VecTrigPoly::from_flat(m, kmin, len, flat).unwrap();
        let back = VecTrigPoly::from_json(&f.to_json().unwrap()).unwrap();
        prop_assert_eq!(back.kmin(), f.kmin());
        for (a, b) in back.flat_coeffs().iter().zip(f.flat_coeffs()) {
            prop_assert_eq!(a.re.to_bits(), b.re.to_bits());
            prop_assert_eq!(a.im.to_bits(), b.im.to_bits());
        }
    }

    #[test]
    fn rank_one_symbol_is_pointwise_outer_product(seed in any::<u64>(), d in 1usize..=3, theta in 0.0f64..(2.0 * PI)) {
        let mut r = rng(seed);
        let xi = random_series(&mut r, d, -1, 2);
        let eta = random_series(&mut r, d, 0, 1);
        let x = wedgeops::families::random_vector(&mut r, d);
        let g = rank_one_symbol(&xi, &eta).unwrap();
        let z = circle_point(theta);
        let gx = g.eval(z).unwrap() * nalgebra::DVector::from_column_slice(&x);
        let a = inner(&x, &eta.eval(z).unwrap());
        for (got, xz) in gx.iter().zip(xi.eval(z).unwrap()) {
            prop_assert!((got - a * xz).norm() <= 1e-10);
        }
    }

    #[test]
    fn symbol_apply_matches_pointwise_product(
        seed in any::<u64>(), rows in 1usize..=3, cols in 1usize..=3, theta in 0.0f64..(2.0 * PI)
    ) {
        let mut r = rng(seed);
        let blocks = (0..3).map(|_| wedgeops::families::random_matrix(&mut r, rows, cols)).collect();
        let g = MatSymbol::new(-1, blocks).unwrap();
        let h = random_series(&mut r, cols, -2, 2);
        let z = circle_point(theta);
        let direct = g.eval(z).unwrap() * nalgebra::DVector::from_vec(h.eval(z).unwrap());
        let via = g.apply(&h).unwrap().eval(z).unwrap();
        for (a, b) in via.iter().zip(direct.iter()) {
            prop_assert!((a - b).norm() <= 1e-12);
        }
        let adj = g.adjoint().eval(z).unwrap();
        prop_assert!(wedgeops::max_abs(&(adj - g.eval(z).unwrap().adjoint())) <= 1e-12);
    }
}

#[test]
fn disc_counterexample_value() {
    let f = wedgeops::families::disc_counterexample_f();
    let g = wedgeops::families::disc_counterexample_g();
    let z = c(0.5);
    let v = inner(&f.eval(z).unwrap(), &g.eval(z).unwrap());
    assert!((v.norm() - 0.375).abs() <= 1e-12);
    // on the circle the same pair is orthogonal
    for j in 0..16 {
        let z = circle_point(2.0 * PI * j as f64 / 16.0);
        assert!(inner(&f.eval(z).unwrap(), &g.eval(z).unwrap()).norm() <= 1e-12);
    }
}
