mod common;

use coronae::coronal::{coronal_complete_bipartite, coronal_direct, coronal_general};
use coronae::graph::named_graph;
use coronae::linalg::*;
use coronae::poly::{real_roots, Polynomial};
use common::*;
use proptest::prelude::*;
use rand::Rng;

fn al(a: f64) -> AlphaParam {
    AlphaParam::new(a).unwrap()
}

#[test]
fn incidence_identity() {
    let mut r = rng(3);
    for _ in 0..100 {
        let n = r.gen_range(1..=9);
        let g = random_graph(&mut r, n, 0.5);
        let b = g.incidence_matrix();
        let bbt = b.mul(&b.transpose()).unwrap();
        let d = degree_matrix(&g);
        for alpha in ALPHAS {
            let a = al(alpha);
            let rhs = alpha_matrix(&g, a)
                .as_matrix()
                .sub(&d.as_matrix().scale(2.0 * alpha - 1.0))
                .unwrap()
                .scale(1.0 / a.beta());
            assert!(bbt.max_abs_diff(&rhs) < 1e-12);
        }
    }
}

#[test]
fn special_alphas() {
    let mut r = rng(4);
    for _ in 0..50 {
        let n = r.gen_range(1..=10);
        let g = random_graph(&mut r, n, 0.4);
        let a0 = sym_eigen_default(&alpha_matrix(&g, al(0.0))).unwrap();
        let adj = sym_eigen_default(&adjacency_matrix(&g)).unwrap();
        assert!(spectra_equal(&a0, &adj, 1e-9));
        let half = sym_eigen_default(&alpha_matrix(&g, al(0.5))).unwrap();
        let q = sym_eigen_default(&signless_laplacian(&g)).unwrap().map(|x| x / 2.0);
        assert!(spectra_equal(&half, &q, 1e-9));
        let one = sym_eigen_default(&alpha_matrix(&g, al(1.0))).unwrap();
        let degrees: Vec<f64> = g.degree_sequence().0.iter().map(|&d| d as f64).collect();
        assert!(spectra_equal(&one, &Spectrum::from_values(degrees, 1e-9), 1e-9));
    }
}

#[test]
fn char_poly_vanishes_at_eigenvalues() {
    let mut r = rng(5);
    for _ in 0..30 {
        let n = r.gen_range(1..=10);
        let g = random_graph(&mut r, n, 0.5);
        let m = alpha_matrix(&g, al(r.gen_range(0.0..1.0)));
        let p = char_poly(&m).unwrap();
        assert_eq!(p.degree(), n);
        assert!((p.coeff(n - 1) + m.trace()).abs() < 1e-10);
        let spec = sym_eigen_default(&m).unwrap();
        let roots = real_roots(&p).unwrap();
        assert!(spectra_equal(&spec, &roots, 1e-6), "{spec:?} vs {roots:?}");
    }
}

#[test]
fn tridiagonal_and_jacobi_agree() {
    let g = named_graph("petersen", &[]).unwrap();
    let m = alpha_matrix(&g, al(0.3));
    let mut a = sym_eigenvalues_tridiagonal(&m).unwrap();
    a.sort_by(f64::total_cmp);
    let b = sym_eigen_default(&m).unwrap().flatten();
    for (x, y) in a.iter().zip(&b) {
        assert!((x - y).abs() < 1e-10);
    }
}

#[test]
fn regular_coronals_reduce_to_row_sum_form() {
    let mut r = rng(6);
    let regular = regular_graphs(6);
    for _ in 0..100 {
        let g = pick(&mut r, &regular);
        let k = g.is_regular().unwrap().unwrap() as f64;
        for alpha in ALPHAS {
            let red = coronal_general(&alpha_matrix(g, al(alpha))).unwrap().rf.reduce();
            assert!(red.num().relative_distance(&Polynomial::constant(g.n() as f64)) < 1e-9);
            assert!(red.den().relative_distance(&Polynomial::linear_root(k)) < 1e-9);
        }
    }
}

#[test]
fn bipartite_fast_path_everywhere() {
    for a in 1..8 {
        for b in 1..=8 - a {
            for alpha in ALPHAS {
                assert!(coronal_complete_bipartite(a, b, al(alpha)).is_ok(), "K_{a},{b} at {alpha}");
            }
        }
    }
}

proptest! {
    #[test]
    fn coronal_matches_linear_solve(n in 1usize..8, seed in any::<u64>(), alpha in 0.0f64..=1.0, shift in 0.5f64..5.0) {
        let mut r = rng(seed);
        let g = random_graph(&mut r, n, 0.5);
        let m = alpha_matrix(&g, al(alpha));
        let x = gershgorin_radius(&m) + shift;
        let c = coronal_general(&m).unwrap();
        let want = coronal_direct(&m, x).unwrap();
        prop_assert!((c.eval(x).unwrap() - want).abs() <= 1e-8 * want.abs().max(1.0));
    }

    #[test]
    fn trace_and_sum_of_eigenvalues(n in 1usize..10, seed in any::<u64>(), alpha in 0.0f64..=1.0) {
        let mut r = rng(seed);
        let g = random_graph(&mut r, n, 0.5);
        let spec = sym_eigen_default(&alpha_matrix(&g, al(alpha))).unwrap();
        prop_assert_eq!(spec.len(), n);
        prop_assert!((spec.trace() - 2.0 * alpha * g.m() as f64).abs() < 1e-9);
    }

    #[test]
    fn roots_of_products_of_linear_factors(halves in prop::collection::vec(-10i32..10, 1..7)) {
        let roots: Vec<f64> = halves.iter().map(|&h| h as f64 / 2.0).collect();
        let found = real_roots(&Polynomial::from_roots(&roots)).unwrap();
        let want = Spectrum::from_values(roots, 1e-9);
        prop_assert_eq!(found.pairs().len(), want.pairs().len());
        prop_assert!(found.max_deviation(&want).is_some_and(|d| d < 1e-4));
    }
}
