mod common;

use common::*;
use proptest::prelude::*;
use wedgeops::wedge::*;
use wedgeops::{binomial, CMatrix, Complex64};

fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::new(v).unwrap())
}

fn tensor(dim: usize, grade: usize) -> impl Strategy<Value = FullTensor> {
    cvec(dim.pow(grade as u32)).prop_map(move |e| FullTensor::from_entries(dim, grade, e).unwrap())
}

/// `(d, p)` with `d^p` small enough for tensor oracles.
fn shape() -> impl Strategy<Value = (usize, usize)> {
    (1usize..=4, 1usize..=4)
}

fn tuples(dim: usize, grade: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..grade {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..dim).map(move |i| {
                    let mut t = t.clone();
                    t.push(i);
                    t
                })
            })
            .collect();
    }
    out
}

fn factorial(n: usize) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

fn inner_oracle(u: &FullTensor, v: &FullTensor) -> Complex64 {
    let mut s = c(0.0);
    for t in tuples(u.dim(), u.grade()) {
        s += u.entry(&t) * v.entry(&t).conj();
    }
    s * factorial(u.grade())
}

fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
    (a - b).norm() <= tol * b.norm().max(1.0)
}

proptest! {
    #[test]
    fn tensor_inner_matches_loop_oracle(
        (u, v) in shape().prop_flat_map(|(d, p)| (tensor(d, p), tensor(d, p)))
    ) {
        prop_assert!(close(tensor_inner(&u, &v).unwrap(), inner_oracle(&u, &v), 1e-12));
    }

    #[test]
    fn permute_reorders_elementary_factors(
        (xs, sigma) in shape().prop_flat_map(|(d, p)| (cvecs(d, p), permutation(p)))
    ) {
        let u = FullTensor::elementary(&xs).unwrap();
        let reordered: Vec<_> = (0..xs.len()).map(|k| xs[sigma.apply(k)].clone()).collect();
        let expect = FullTensor::elementary(&reordered).unwrap();
        prop_assert!(permute(&sigma, &u).unwrap().max_abs_diff(&expect).unwrap() < 1e-15);
    }

    #[test]
    fn permute_adjoint_is_inverse(
        (u, v, sigma) in shape().prop_flat_map(|(d, p)| (tensor(d, p), tensor(d, p), permutation(p)))
    ) {
        let lhs = tensor_inner(&permute(&sigma, &u).unwrap(), &v).unwrap();
        let rhs = tensor_inner(&u, &permute(&sigma.inverse(), &v).unwrap()).unwrap();
        prop_assert!(close(lhs, rhs, 1e-12));
        let iso = tensor_inner(&permute(&sigma, &u).unwrap(), &permute(&sigma, &v).unwrap()).unwrap();
        prop_assert!(close(iso, tensor_inner(&u, &v).unwrap(), 1e-12));
    }

    #[test]
    fn permute_is_a_right_action(
        (u, sigma, tau) in shape().prop_flat_map(|(d, p)| (tensor(d, p), permutation(p), permutation(p)))
    ) {
        let composed = permute(&sigma.compose(&tau).unwrap(), &u).unwrap();
        let stepwise = permute(&tau, &permute(&sigma, &u).unwrap()).unwrap();
        prop_assert!(composed.max_abs_diff(&stepwise).unwrap() < 1e-15);
    }

    #[test]
    fn signature_is_multiplicative(
        (sigma, tau) in (1usize..=6).prop_flat_map(|n| (permutation(n), permutation(n)))
    ) {
        let st = sigma.compose(&tau).unwrap();
        prop_assert_eq!(st.signature(), sigma.signature() * tau.signature());
        prop_assert_eq!(sigma.inverse().compose(&sigma).unwrap(), Permutation::identity(sigma.size()));
    }

    #[test]
    fn antisymmetrizer_is_an_orthogonal_projection(
        (u, v) in shape().prop_flat_map(|(d, p)| (tensor(d, p), tensor(d, p)))
    ) {
        let pu = antisymmetrize(&u).unwrap();
        prop_assert!(antisymmetrize(&pu).unwrap().max_abs_diff(&pu).unwrap() < 1e-12);
        let pv = antisymmetrize(&v).unwrap();
        let lhs = tensor_inner(&pu, &v).unwrap();
        let rhs = tensor_inner(&u, &pv).unwrap();
        prop_assert!(close(lhs, rhs, 1e-12));
    }

    #[test]
    fn gram_inner_three_routes(
        (xs, ys) in (1usize..=5, 1usize..=4)
            .prop_filter("tensor size", |(d, p)| d.pow(*p as u32) <= 625)
            .prop_flat_map(|(d, p)| (cvecs(d, p), cvecs(d, p)))
    ) {
        let g = gram_inner(&xs, &ys).unwrap();
        prop_assert!(close(g, leibniz_gram(&xs, &ys), 1e-10));
        let ax = antisymmetrize(&FullTensor::elementary(&xs).unwrap()).unwrap();
        let ay = antisymmetrize(&FullTensor::elementary(&ys).unwrap()).unwrap();
        prop_assert!(close(g, tensor_inner(&ax, &ay).unwrap(), 1e-10));
        // and through minors
        let wx = wedge(&xs).unwrap();
        let wy = wedge(&ys).unwrap();
        prop_assert!(close(g, wx.inner(&wy).unwrap(), 1e-10));
    }

    #[test]
    fn wedge_is_alternating(
        (xs, i, j) in (2usize..=5, 2usize..=4)
            .prop_flat_map(|(d, p)| (cvecs(d, p), 0..p, 0..p))
            .prop_filter("distinct slots", |(_, i, j)| i != j)
    ) {
        let w = wedge(&xs).unwrap();
        let mut swapped = xs.clone();
        swapped.swap(i, j);
        let ws = wedge(&swapped).unwrap();
        let neg: Vec<_> = w.coords().iter().map(|z| -z).collect();
        let neg = WedgeVector::from_coords(w.dim(), w.grade(), neg).unwrap();
        prop_assert!(ws.max_abs_diff(&neg).unwrap() < 1e-12);
        let mut repeated = xs.clone();
        repeated[j] = repeated[i].clone();
        prop_assert!(wedge(&repeated).unwrap().norm() < 1e-12);
    }

    #[test]
    fn gram_determinant_is_nonnegative(
        xs in (1usize..=5, 1usize..=5).prop_flat_map(|(d, p)| cvecs(d, p))
    ) {
        let g = gram_inner(&xs, &xs).unwrap();
        prop_assert!(g.im.abs() <= 1e-12 * g.norm().max(1.0));
        prop_assert!(g.re >= -1e-12);
        if xs.len() > xs[0].len() {
            prop_assert!(g.norm() < 1e-12);
        }
    }

    #[test]
    fn two_vector_wedge_norm((x, y) in (1usize..=6).prop_flat_map(|d| (cvec(d), cvec(d)))) {
        let w = wedge(&[x.clone(), y.clone()]).unwrap();
        let nx = inner(&x, &x).re;
        let ny = inner(&y, &y).re;
        let expect = nx * ny - inner(&x, &y).norm_sqr();
        prop_assert!((w.norm().powi(2) - expect).abs() <= 1e-12);
    }

    #[test]
    fn wedge_vector_matches_minors((xs, x) in (1usize..=5, 0usize..=4).prop_flat_map(|(d, p)| (cvecs(d, p), cvec(d)))) {
        let d = x.len();
        let start = if xs.is_empty() { WedgeVector::unit(d) } else { wedge(&xs).unwrap() };
        let raised = start.wedge_vector(&x).unwrap();
        let mut all = xs.clone();
        all.push(x);
        prop_assert!(raised.max_abs_diff(&wedge(&all).unwrap()).unwrap() < 1e-12);
        prop_assert_eq!(raised.coords().len(), binomial(d, all.len()));
    }

    #[test]
    fn tensor_embedding_round_trips(xs in shape().prop_flat_map(|(d, p)| cvecs(d, p))) {
        let w = wedge(&xs).unwrap();
        if w.grade() <= w.dim() {
            let t = w.to_tensor().unwrap();
            prop_assert!(WedgeVector::from_tensor(&t).max_abs_diff(&w).unwrap() < 1e-12);
            let direct = antisymmetrize(&FullTensor::elementary(&xs).unwrap()).unwrap();
            prop_assert!(t.max_abs_diff(&direct).unwrap() < 1e-12);
        }
    }

    #[test]
    fn residual_norm_identity(seed in any::<u64>(), d in 1usize..=6, j in 0usize..=4) {
        let j = j.min(d);
        let mut r = rng(seed);
        let us = wedgeops::families::random_orthonormal(&mut r, d, j);
        let x = wedgeops::families::random_vector(&mut r, d);
        let mut resid = x.clone();
        for u in &us {
            let a = inner(&x, u);
            for i in 0..d {
                resid[i] -= a * u[i];
            }
        }
        let expect = inner(&resid, &resid).re.sqrt();
        let got = residual_norm_check(&us, &x).unwrap();
        prop_assert!((got.wedge_norm - expect).abs() <= 1e-10);
        prop_assert!((got.residual_norm - expect).abs() <= 1e-10);
    }

    #[test]
    fn hadamard_inequality(entries in cvec(25)) {
        let a = CMatrix::from_row_slice(5, 5, &entries);
        let b = hadamard_bounds(&a).unwrap();
        let cols: f64 = (0..5).map(|j| (0..5).map(|i| a[(i, j)].norm_sqr()).sum::<f64>().sqrt()).product();
        let rows: f64 = (0..5).map(|i| (0..5).map(|j| a[(i, j)].norm_sqr()).sum::<f64>().sqrt()).product();
        prop_assert!((b.column_bound - cols).abs() <= 1e-12 * cols.max(1.0));
        prop_assert!((b.row_bound - rows).abs() <= 1e-12 * rows.max(1.0));
        prop_assert!(b.det_abs <= cols.min(rows) * (1.0 + 1e-12));
    }

    #[test]
    fn lambda_bound_holds(xs in (1usize..=5, 1usize..=5).prop_flat_map(|(d, p)| cvecs(d, p)), scale in 0.01f64..20.0) {
        let xs: Vec<Vec<Complex64>> = xs.iter().map(|x| x.iter().map(|z| z * scale).collect()).collect();
        let b = lambda_bound(&xs).unwrap();
        prop_assert!(b.wedge_norm_sq <= b.homogeneous_bound * (1.0 + 1e-12) + 1e-300);
        let in_ball = xs.iter().all(|x| inner(x, x).re <= 1.0);
        if in_ball {
            prop_assert!(b.wedge_norm_sq <= b.unit_ball_bound * (1.0 + 1e-12) + 1e-300);
        }
    }
}

#[test]
fn antisymmetrizer_rank_is_binomial() {
    for d in 1..=4 {
        for p in 1..=4 {
            let m = antisymmetrizer_matrix(d, p).unwrap();
            let sv = m.singular_values();
            let rank = sv.iter().filter(|s| **s > 1e-8).count();
            assert_eq!(rank, binomial(d, p), "d={d} p={p}");
        }
    }
}

#[test]
fn oversized_tensors_are_refused() {
    assert!(FullTensor::zeros(2, MAX_TENSOR_GRADE + 1).is_err());
    assert!(FullTensor::zeros(1001, 2).is_err());
}
