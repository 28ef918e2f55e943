mod common;

use coronae::graph::{named_graph, Graph};
use coronae::linalg::{alpha_matrix, char_poly, sym_eigen_default, AlphaParam};
use coronae::products::{corona, edge_corona, r_edge_corona, r_vertex_corona};
use coronae::theorems::*;
use common::*;

fn ng(name: &str, p: &[usize]) -> Graph {
    named_graph(name, p).unwrap()
}

fn al(a: f64) -> AlphaParam {
    AlphaParam::new(a).unwrap()
}

fn check(t: &TheoremResult, product: &Graph, alpha: AlphaParam, what: &str) {
    let oracle = sym_eigen_default(&alpha_matrix(product, alpha)).unwrap();
    assert_eq!(t.order(), product.n(), "{what}");
    assert_eq!(t.factored.degree(), product.n(), "{what}");
    let dev = t.spectrum.max_deviation(&oracle);
    assert!(dev.is_some_and(|d| d <= 1e-7), "{what}: deviation {dev:?}");
}

#[test]
fn random_inputs_match_direct_eigensolve() {
    let mut r = rng(7);
    let cases = CaseGen::new();
    for trial in 0..40 {
        let case = cases.sample(&mut r);
        for alpha in ALPHAS {
            for (name, op) in THEOREM_OPS {
                let (t, product) = op(&case, al(alpha)).unwrap_or_else(|e| panic!("{name} trial {trial}: {e}"));
                check(&t, &product, al(alpha), &format!("{name} trial {trial} alpha {alpha}"));
            }
        }
    }
}

#[test]
fn provenance_covers_every_eigenvalue() {
    let mut r = rng(11);
    let cases = CaseGen::new();
    for _ in 0..10 {
        let case = cases.sample(&mut r);
        for (name, op) in THEOREM_OPS {
            let (t, _) = op(&case, al(0.25)).unwrap();
            let total: usize = t.provenance.iter().flat_map(|(g, _)| g.iter().map(|p| p.1)).sum();
            assert_eq!(total, t.order(), "{name}");
        }
    }
}

#[test]
fn expanded_factorization_matches_char_poly() {
    let cases = [
        (corona_charpoly(&ng("cycle", &[4]), &ng("path", &[3]), al(0.25)).unwrap(), corona(&ng("cycle", &[4]), &ng("path", &[3])).unwrap().0),
        (edge_corona_charpoly(&ng("cycle", &[4]), &ng("complete", &[2]), al(0.25)).unwrap(), edge_corona(&ng("cycle", &[4]), &ng("complete", &[2])).unwrap().0),
        (r_vertex_charpoly(&ng("complete", &[3]), &ng("path", &[2]), al(0.6)).unwrap(), r_vertex_corona(&ng("complete", &[3]), &ng("path", &[2])).unwrap().0),
        (r_edge_charpoly(&ng("complete", &[3]), &ng("complete", &[1]), al(0.5)).unwrap(), r_edge_corona(&ng("complete", &[3]), &ng("complete", &[1])).unwrap().0),
    ];
    let alphas = [0.25, 0.25, 0.6, 0.5];
    for ((t, product), a) in cases.iter().zip(alphas) {
        assert!(product.n() <= 20);
        let direct = char_poly(&alpha_matrix(product, al(a))).unwrap();
        let d = t.factored.expand().relative_distance(&direct);
        assert!(d < 1e-6, "relative coefficient error {d}");
    }
}

#[test]
fn documented_examples() {
    // pole eigenvalue k2 + 2 alpha with multiplicity m1 - n1
    let t = edge_corona_spectrum_regular(&ng("complete", &[4]), &ng("complete", &[2]), al(0.5)).unwrap();
    let oracle = sym_eigen_default(&alpha_matrix(&edge_corona(&ng("complete", &[4]), &ng("complete", &[2])).unwrap().0, al(0.5))).unwrap();
    assert!(oracle.multiplicity_of(2.0, 1e-8) >= 2);
    assert!(t.spectrum.multiplicity_of(2.0, 1e-8) >= 2);

    let t = r_vertex_charpoly(&ng("complete", &[4]), &ng("complete", &[1]), al(0.5)).unwrap();
    assert!(t.spectrum.multiplicity_of(1.0, 1e-8) >= 2);

    let t = corona_spectrum_kab(&ng("complete", &[1]), 2, 3, al(0.0)).unwrap();
    assert_eq!(t.order(), 6);

    let t = r_edge_charpoly(&ng("complete", &[2]), &ng("complete", &[1]), al(0.0)).unwrap();
    check(&t, &r_edge_corona(&ng("complete", &[2]), &ng("complete", &[1])).unwrap().0, al(0.0), "r-edge K2 K1");

    for a in [0.0, 0.3, 1.0] {
        let t = corona_spectrum_regular(&ng("complete", &[1]), &ng("complete", &[1]), al(a)).unwrap();
        let want = coronae::Spectrum::from_values(vec![1.0, 2.0 * a - 1.0], 1e-9);
        assert!(coronae::linalg::spectra_equal(&t.spectrum, &want, 1e-10));
    }
}

#[test]
fn preconditions_are_enforced() {
    let p3 = ng("path", &[3]);
    let k2 = ng("complete", &[2]);
    assert!(matches!(edge_corona_charpoly(&p3, &k2, al(0.2)), Err(coronae::Error::NotRegular(_))));
    assert!(matches!(corona_spectrum_regular(&k2, &p3, al(0.2)), Err(coronae::Error::NotRegular(_))));
    assert!(matches!(edge_corona_spectrum_kab(&k2, 2, 2, al(0.2)), Err(coronae::Error::PartsEqual(_))));
    assert!(corona_spectrum_kab(&k2, 2, 2, al(0.2)).is_ok());
}
