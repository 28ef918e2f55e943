#![allow(dead_code)]

use coronae::graph::Graph;
use coronae::linalg::AlphaParam;
use coronae::products::{
    build_product, corona, edge_corona, r_edge_corona, r_vertex_corona, BlockLabel, ProductLayout, ProductOp,
};
use coronae::theorems::*;
use coronae::Result;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub const ALPHAS: [f64; 4] = [0.0, 0.25, 0.5, 0.75];

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn random_graph(rng: &mut StdRng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &edges).unwrap()
}

/// Every labeled regular graph on `1..=max_n` vertices.
pub fn regular_graphs(max_n: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        for mask in 0u32..(1 << pairs.len()) {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::from_edge_list(n, &edges).unwrap();
            if g.is_regular().unwrap().is_some() {
                out.push(g);
            }
        }
    }
    out
}

pub fn pick<'a, T>(rng: &mut StdRng, items: &'a [T]) -> &'a T {
    &items[rng.gen_range(0..items.len())]
}

/// One random admissible input for every theorem operation.
pub struct Case {
    pub g1: Graph,
    pub g2: Graph,
    /// Regular with at least one edge.
    pub h1: Graph,
    /// Regular, at most five vertices.
    pub h2: Graph,
    pub a: usize,
    pub b: usize,
    pub kab: Graph,
}

pub struct CaseGen {
    regular_with_edges: Vec<Graph>,
    regular_small: Vec<Graph>,
}

impl CaseGen {
    pub fn new() -> Self {
        let regular = regular_graphs(6);
        CaseGen {
            regular_with_edges: regular.iter().filter(|g| g.m() > 0).cloned().collect(),
            regular_small: regular.into_iter().filter(|g| g.n() <= 5).collect(),
        }
    }

    pub fn sample(&self, r: &mut StdRng) -> Case {
        let (n1, n2) = (r.gen_range(1..=6), r.gen_range(1..=5));
        let g1 = random_graph(r, n1, 0.5);
        let g2 = random_graph(r, n2, 0.5);
        let h1 = pick(r, &self.regular_with_edges).clone();
        let h2 = pick(r, &self.regular_small).clone();
        let (a, b) = loop {
            let (a, b) = (r.gen_range(1..=4), r.gen_range(1..=4));
            if a != b && a + b <= 5 {
                break (a, b);
            }
        };
        let kab = coronae::named_graph("complete_bipartite", &[a, b]).unwrap();
        Case { g1, g2, h1, h2, a, b, kab }
    }
}

pub type OpRun = fn(&Case, AlphaParam) -> Result<(TheoremResult, Graph)>;

fn with_product(t: Result<TheoremResult>, p: Result<(Graph, ProductLayout)>) -> Result<(TheoremResult, Graph)> {
    Ok((t?, p?.0))
}

/// Every theorem operation paired with the product it describes.
pub const THEOREM_OPS: [(&str, OpRun); 9] = [
    ("corona_charpoly", |c, a| with_product(corona_charpoly(&c.g1, &c.g2, a), corona(&c.g1, &c.g2))),
    ("corona_spectrum_regular", |c, a| {
        with_product(corona_spectrum_regular(&c.g1, &c.h2, a), corona(&c.g1, &c.h2))
    }),
    ("corona_spectrum_kab", |c, a| {
        with_product(corona_spectrum_kab(&c.g1, c.a, c.b, a), corona(&c.g1, &c.kab))
    }),
    ("edge_corona_charpoly", |c, a| {
        with_product(edge_corona_charpoly(&c.h1, &c.g2, a), edge_corona(&c.h1, &c.g2))
    }),
    ("edge_corona_spectrum_regular", |c, a| {
        with_product(edge_corona_spectrum_regular(&c.h1, &c.h2, a), edge_corona(&c.h1, &c.h2))
    }),
    ("edge_corona_spectrum_kab", |c, a| {
        with_product(edge_corona_spectrum_kab(&c.h1, c.a, c.b, a), edge_corona(&c.h1, &c.kab))
    }),
    ("r_vertex_charpoly", |c, a| {
        with_product(r_vertex_charpoly(&c.h1, &c.g2, a), r_vertex_corona(&c.h1, &c.g2))
    }),
    ("r_vertex_spectrum_regular", |c, a| {
        with_product(r_vertex_spectrum_regular(&c.h1, &c.h2, a), r_vertex_corona(&c.h1, &c.h2))
    }),
    ("r_edge_charpoly", |c, a| {
        with_product(r_edge_charpoly(&c.h1, &c.g2, a), r_edge_corona(&c.h1, &c.g2))
    }),
];

/// Vertex and edge counts plus vertexwise degrees of a product, checked
/// against the closed forms for each construction.
pub fn check_product_structure(op: ProductOp, g1: &Graph, g2: &Graph) -> std::result::Result<(), String> {
    let (n1, m1, n2, m2) = (g1.n(), g1.m(), g2.n(), g2.m());
    let (g, layout) = match build_product(op, g1, g2) {
        Ok(x) => x,
        Err(e) if m1 == 0 && op != ProductOp::Corona => return expect_no_edges(e),
        Err(e) if n1 == 0 => return if e == coronae::Error::EmptyG1 { Ok(()) } else { Err(e.to_string()) },
        Err(e) => return Err(e.to_string()),
    };
    let (n, m) = match op {
        ProductOp::Corona => (n1 * (1 + n2), m1 + n1 * m2 + n1 * n2),
        ProductOp::EdgeCorona => (n1 + m1 * n2, m1 + m1 * m2 + 2 * m1 * n2),
        ProductOp::RGraph => (n1 + m1, 3 * m1),
        ProductOp::RVertex => (n1 + m1 + n1 * n2, 3 * m1 + n1 * m2 + n1 * n2),
        ProductOp::REdge => (n1 + m1 + m1 * n2, 3 * m1 + m1 * m2 + m1 * n2),
    };
    if (g.n(), g.m()) != (n, m) || layout.order() != n {
        return Err(format!("{op}: got ({}, {}), want ({n}, {m})", g.n(), g.m()));
    }
    let deg = g.degree_sequence().0;
    let d1 = g1.degree_sequence().0;
    let d2 = g2.degree_sequence().0;
    for (label, range) in &layout.blocks {
        for (i, v) in range.clone().enumerate() {
            let want = match (op, label) {
                (ProductOp::Corona, BlockLabel::G1) => d1[i] + n2,
                (ProductOp::EdgeCorona, BlockLabel::G1) => d1[i] * (1 + n2),
                (ProductOp::RGraph, BlockLabel::G1) => 2 * d1[i],
                (ProductOp::RVertex, BlockLabel::G1) => 2 * d1[i] + n2,
                (ProductOp::REdge, BlockLabel::G1) => 2 * d1[i],
                (ProductOp::REdge, BlockLabel::Incidence) => 2 + n2,
                (_, BlockLabel::Incidence) => 2,
                (ProductOp::EdgeCorona, BlockLabel::Copy(_)) => d2[i] + 2,
                (_, BlockLabel::Copy(_)) => d2[i] + 1,
            };
            if deg[v] != want {
                return Err(format!("{op}: vertex {v} in {label:?} has degree {}, want {want}", deg[v]));
            }
        }
    }
    Ok(())
}

fn expect_no_edges(e: coronae::Error) -> std::result::Result<(), String> {
    match e {
        coronae::Error::NoEdgesInG1 | coronae::Error::NoEdges => Ok(()),
        e => Err(e.to_string()),
    }
}
