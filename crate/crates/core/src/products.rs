//! Corona-type graph products with a fixed, documented vertex layout.
//!
//! Every product lists the vertices of `G1` first. R-constructions follow
//! with one subdivision vertex per edge of `G1`, in canonical edge order.
//! Copies of `G2` come last, each in a contiguous range that preserves the
//! vertex order of `G2`, ordered by the vertex or edge they attach to.

use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProductOp {
    Corona,
    EdgeCorona,
    RGraph,
    RVertex,
    REdge,
}

impl ProductOp {
    pub const ALL: [ProductOp; 5] = [
        ProductOp::Corona,
        ProductOp::EdgeCorona,
        ProductOp::RGraph,
        ProductOp::RVertex,
        ProductOp::REdge,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ProductOp::Corona => "corona",
            ProductOp::EdgeCorona => "edge-corona",
            ProductOp::RGraph => "r-graph",
            ProductOp::RVertex => "r-vertex",
            ProductOp::REdge => "r-edge",
        }
    }

    /// Whether the product takes a second factor.
    pub fn binary(self) -> bool {
        self != ProductOp::RGraph
    }
}

impl fmt::Display for ProductOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ProductOp {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ProductOp::ALL
            .into_iter()
            .find(|op| op.name() == s || op.name().replace('-', "_") == s)
            .ok_or_else(|| Error::BadParams(format!("unknown product `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlockLabel {
    G1,
    /// Subdivision vertices, one per edge of `G1`.
    Incidence,
    /// Copy of `G2` attached to vertex or edge `c` of `G1`.
    Copy(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductLayout {
    pub op: ProductOp,
    pub blocks: Vec<(BlockLabel, Range<usize>)>,
}

impl ProductLayout {
    fn build(op: ProductOp, n1: usize, incidence: usize, copies: usize, n2: usize) -> Self {
        let mut blocks = vec![(BlockLabel::G1, 0..n1)];
        let mut at = n1;
        if incidence > 0 {
            blocks.push((BlockLabel::Incidence, at..at + incidence));
            at += incidence;
        }
        for c in 0..copies {
            blocks.push((BlockLabel::Copy(c), at..at + n2));
            at += n2;
        }
        ProductLayout { op, blocks }
    }

    pub fn order(&self) -> usize {
        self.blocks.last().map_or(0, |b| b.1.end)
    }

    pub fn range(&self, label: BlockLabel) -> Option<Range<usize>> {
        self.blocks.iter().find(|b| b.0 == label).map(|b| b.1.clone())
    }

    pub fn copies(&self) -> usize {
        self.blocks
            .iter()
            .filter(|b| matches!(b.0, BlockLabel::Copy(_)))
            .count()
    }
}

/// Appends copy `c` of `g2` at `base` and joins it to each attachment vertex.
fn attach_copy(edges: &mut Vec<(usize, usize)>, g2: &Graph, base: usize, attach: &[usize]) {
    edges.extend(g2.edges().iter().map(|&(u, v)| (base + u, base + v)));
    for v in 0..g2.n() {
        for &a in attach {
            edges.push((a, base + v));
        }
    }
}

/// `G1 ∘ G2`: vertex `i` of `G1` joined to every vertex of copy `i`.
pub fn corona(g1: &Graph, g2: &Graph) -> Result<(Graph, ProductLayout)> {
    let (n1, n2) = (g1.n(), g2.n());
    if n1 == 0 {
        return Err(Error::EmptyG1);
    }
    let mut edges = g1.edges().to_vec();
    for i in 0..n1 {
        attach_copy(&mut edges, g2, n1 + i * n2, &[i]);
    }
    let g = Graph::from_edge_list(n1 * (n2 + 1), &edges)?;
    Ok((g, ProductLayout::build(ProductOp::Corona, n1, 0, n1, n2)))
}

/// `G1 ◊ G2`: both ends of edge `e` joined to every vertex of copy `e`.
pub fn edge_corona(g1: &Graph, g2: &Graph) -> Result<(Graph, ProductLayout)> {
    let (n1, m1, n2) = (g1.n(), g1.m(), g2.n());
    if m1 == 0 {
        return Err(Error::NoEdgesInG1);
    }
    let mut edges = g1.edges().to_vec();
    for (e, &(u, v)) in g1.edges().iter().enumerate() {
        attach_copy(&mut edges, g2, n1 + e * n2, &[u, v]);
    }
    let g = Graph::from_edge_list(n1 + m1 * n2, &edges)?;
    Ok((g, ProductLayout::build(ProductOp::EdgeCorona, n1, 0, m1, n2)))
}

/// `R(G)`: one new vertex per edge, joined to both ends.
pub fn r_graph(g: &Graph) -> Result<(Graph, ProductLayout)> {
    if g.m() == 0 {
        return Err(Error::NoEdges);
    }
    let (rg, _) = edge_corona(g, &Graph::empty(1))?;
    Ok((rg, ProductLayout::build(ProductOp::RGraph, g.n(), g.m(), 0, 0)))
}

fn r_graph_edges(g1: &Graph) -> Vec<(usize, usize)> {
    let n1 = g1.n();
    let mut edges = g1.edges().to_vec();
    for (e, &(u, v)) in g1.edges().iter().enumerate() {
        edges.push((u, n1 + e));
        edges.push((v, n1 + e));
    }
    edges
}

/// R-vertex corona: `R(G1)` with copy `i` of `G2` joined to vertex `i`.
pub fn r_vertex_corona(g1: &Graph, g2: &Graph) -> Result<(Graph, ProductLayout)> {
    let (n1, m1, n2) = (g1.n(), g1.m(), g2.n());
    if m1 == 0 {
        return Err(Error::NoEdgesInG1);
    }
    let mut edges = r_graph_edges(g1);
    for i in 0..n1 {
        attach_copy(&mut edges, g2, n1 + m1 + i * n2, &[i]);
    }
    let g = Graph::from_edge_list(n1 * (1 + n2) + m1, &edges)?;
    Ok((g, ProductLayout::build(ProductOp::RVertex, n1, m1, n1, n2)))
}

/// R-edge corona: `R(G1)` with copy `e` of `G2` joined to subdivision
/// vertex `e`.
pub fn r_edge_corona(g1: &Graph, g2: &Graph) -> Result<(Graph, ProductLayout)> {
    let (n1, m1, n2) = (g1.n(), g1.m(), g2.n());
    if m1 == 0 {
        return Err(Error::NoEdgesInG1);
    }
    let mut edges = r_graph_edges(g1);
    for e in 0..m1 {
        attach_copy(&mut edges, g2, n1 + m1 + e * n2, &[n1 + e]);
    }
    let g = Graph::from_edge_list(n1 + m1 * (1 + n2), &edges)?;
    Ok((g, ProductLayout::build(ProductOp::REdge, n1, m1, m1, n2)))
}

/// Dispatches on `op`; `g2` is ignored for [`ProductOp::RGraph`].
pub fn build_product(op: ProductOp, g1: &Graph, g2: &Graph) -> Result<(Graph, ProductLayout)> {
    match op {
        ProductOp::Corona => corona(g1, g2),
        ProductOp::EdgeCorona => edge_corona(g1, g2),
        ProductOp::RGraph => r_graph(g1),
        ProductOp::RVertex => r_vertex_corona(g1, g2),
        ProductOp::REdge => r_edge_corona(g1, g2),
    }
}
