mod common;

use coronae::graph::{named_graph, Graph};
use coronae::products::{build_product, BlockLabel, ProductOp};
use common::*;
use proptest::prelude::*;
use rand::Rng;

#[test]
fn counts_and_degrees_for_random_pairs() {
    let mut r = rng(1);
    for _ in 0..300 {
        let (n1, n2) = (r.gen_range(0..=7), r.gen_range(0..=7));
        let g1 = random_graph(&mut r, n1, 0.4);
        let g2 = random_graph(&mut r, n2, 0.4);
        for op in ProductOp::ALL {
            check_product_structure(op, &g1, &g2).unwrap();
        }
    }
}

#[test]
fn copies_are_induced_copies_of_g2() {
    let g1 = named_graph("path", &[4]).unwrap();
    let g2 = named_graph("path", &[3]).unwrap();
    for op in [ProductOp::Corona, ProductOp::EdgeCorona, ProductOp::RVertex, ProductOp::REdge] {
        let (g, layout) = build_product(op, &g1, &g2).unwrap();
        let per_vertex = matches!(op, ProductOp::Corona | ProductOp::RVertex);
        assert_eq!(layout.copies(), if per_vertex { g1.n() } else { g1.m() });
        for (label, range) in &layout.blocks {
            if let BlockLabel::Copy(_) = label {
                for u in 0..3 {
                    for v in 0..3 {
                        assert_eq!(g.has_edge(range.start + u, range.start + v), g2.has_edge(u, v));
                    }
                }
            }
        }
    }
}

#[test]
fn r_graph_is_edge_corona_with_single_vertex() {
    let g = named_graph("petersen", &[]).unwrap();
    assert_eq!(
        build_product(ProductOp::RGraph, &g, &Graph::empty(0)).unwrap().0,
        build_product(ProductOp::EdgeCorona, &g, &Graph::empty(1)).unwrap().0
    );
}

proptest! {
    #[test]
    fn structure_holds(n1 in 1usize..7, n2 in 0usize..6, seed in any::<u64>()) {
        let mut r = rng(seed);
        let g1 = random_graph(&mut r, n1, 0.5);
        let g2 = random_graph(&mut r, n2, 0.5);
        for op in ProductOp::ALL {
            prop_assert_eq!(check_product_structure(op, &g1, &g2), Ok(()));
        }
    }
}
