//! A_alpha-isospectrality checks and construction of isospectral families.

use std::fmt;

use crate::coronal::coronal_direct;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::{
    alpha_matrix, gershgorin_radius, sym_eigen_default, sym_eigenvalues_tridiagonal, AlphaParam,
};
use crate::products::{build_product, ProductOp};

/// Orders above this use Householder/QL instead of Jacobi.
const JACOBI_MAX_ORDER: usize = 64;
const CORONAL_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum IsoMode {
    AtAlpha(f64),
    AllAlpha,
}

#[derive(Debug, Clone, PartialEq)]
pub struct IsoReport {
    pub verdict: bool,
    pub mode: IsoMode,
    /// `(alpha, max sorted-eigenvalue deviation)`; infinite when the orders differ.
    pub evidence: Vec<(f64, f64)>,
    pub witness_alpha: Option<f64>,
}

/// Sorted eigenvalues of `A_alpha(g)`, with multiplicity.
pub fn alpha_eigenvalues(g: &Graph, alpha: AlphaParam) -> Result<Vec<f64>> {
    let m = alpha_matrix(g, alpha);
    if g.n() <= JACOBI_MAX_ORDER {
        Ok(sym_eigen_default(&m)?.flatten())
    } else {
        sym_eigenvalues_tridiagonal(&m)
    }
}

fn deviation(g1: &Graph, g2: &Graph, alpha: AlphaParam) -> Result<f64> {
    if g1.n() != g2.n() {
        return Ok(f64::INFINITY);
    }
    let (s1, s2) = (alpha_eigenvalues(g1, alpha)?, alpha_eigenvalues(g2, alpha)?);
    Ok(s1.iter().zip(&s2).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max))
}

pub fn check_at_alpha(g1: &Graph, g2: &Graph, alpha: AlphaParam, tol: f64) -> Result<IsoReport> {
    let dev = deviation(g1, g2, alpha)?;
    let verdict = dev <= tol;
    Ok(IsoReport {
        verdict,
        mode: IsoMode::AtAlpha(alpha.alpha()),
        evidence: vec![(alpha.alpha(), dev)],
        witness_alpha: (!verdict).then_some(alpha.alpha()),
    })
}

/// `count` Chebyshev nodes mapped to `[0, 1]`, ascending.
pub fn chebyshev_alphas(count: usize) -> Vec<f64> {
    let mut xs: Vec<f64> = (0..count)
        .map(|k| {
            let t = ((2 * k + 1) as f64 * std::f64::consts::PI / (2 * count) as f64).cos();
            (1.0 + t) / 2.0
        })
        .collect();
    xs.sort_by(f64::total_cmp);
    xs
}

/// Isospectral for every alpha in `[0, 1]`.
///
/// Each coefficient of `det(xI - A_alpha)` is a polynomial of degree at most
/// `n` in alpha, so agreement of the spectra at `n + 1` distinct alphas
/// forces equal characteristic polynomials everywhere.
pub fn check_all_alpha(g1: &Graph, g2: &Graph, tol: f64) -> Result<IsoReport> {
    if g1.n() != g2.n() {
        return Err(Error::OrderMismatch(g1.n(), g2.n()));
    }
    let mut evidence = Vec::new();
    for a in chebyshev_alphas(g1.n() + 1) {
        evidence.push((a, deviation(g1, g2, AlphaParam::new(a)?)?));
    }
    let witness_alpha = evidence.iter().find(|e| e.1 > tol).map(|e| e.0);
    Ok(IsoReport {
        verdict: witness_alpha.is_none(),
        mode: IsoMode::AllAlpha,
        evidence,
        witness_alpha,
    })
}

/// Equal coronals of `A_alpha(g1)` and `A_alpha(g2)`.
///
/// Both are rational with denominator degree at most `n`, so agreement at
/// `2n + 1` points above the spectral radius proves equality.
pub fn coronal_equal(g1: &Graph, g2: &Graph, alpha: AlphaParam) -> Result<bool> {
    let (m1, m2) = (alpha_matrix(g1, alpha), alpha_matrix(g2, alpha));
    let n = g1.n().max(g2.n());
    if g1.n() == 0 || g2.n() == 0 {
        return Ok(g1.n() == g2.n());
    }
    let start = gershgorin_radius(&m1).max(gershgorin_radius(&m2)) + 1.0;
    for k in 0..2 * n + 1 {
        let x = start + k as f64;
        let (c1, c2) = (coronal_direct(&m1, x)?, coronal_direct(&m2, x)?);
        if (c1 - c2).abs() > CORONAL_TOL * c1.abs().max(c2.abs()).max(1.0) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Invariant {
    DegreeMultiset,
    TrianglesPerVertex,
    FourCycles,
    FourCliques,
}

impl fmt::Display for Invariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Invariant::DegreeMultiset => "degree multiset",
            Invariant::TrianglesPerVertex => "sorted triangles per vertex",
            Invariant::FourCycles => "4-cycle count",
            Invariant::FourCliques => "K4 count",
        })
    }
}

/// An invariant on which two graphs differ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub invariant: Invariant,
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} differs: {:?} vs {:?}", self.invariant, self.left, self.right)
    }
}

fn triangles_per_vertex(g: &Graph) -> Vec<usize> {
    let adj = g.adjacency_bits();
    let mut t = vec![0; g.n()];
    for &(u, v) in g.edges() {
        for w in v + 1..g.n() {
            if adj[u][w] && adj[v][w] {
                t[u] += 1;
                t[v] += 1;
                t[w] += 1;
            }
        }
    }
    t.sort_unstable();
    t
}

fn four_cycles(g: &Graph) -> usize {
    let adj = g.adjacency_bits();
    let n = g.n();
    let mut twice = 0;
    for u in 0..n {
        for v in u + 1..n {
            let c = (0..n).filter(|&w| adj[u][w] && adj[v][w]).count();
            twice += c * c.saturating_sub(1) / 2;
        }
    }
    twice / 2
}

fn four_cliques(g: &Graph) -> usize {
    let adj = g.adjacency_bits();
    let n = g.n();
    let mut count = 0;
    for &(u, v) in g.edges() {
        let common: Vec<usize> = (v + 1..n).filter(|&w| adj[u][w] && adj[v][w]).collect();
        for (i, &w) in common.iter().enumerate() {
            count += common[i + 1..].iter().filter(|&&x| adj[w][x]).count();
        }
    }
    count
}

/// First cheap invariant that tells the graphs apart, or `None` when all
/// agree (which proves nothing).
pub fn nonisomorphism_evidence(g1: &Graph, g2: &Graph) -> Option<Certificate> {
    let checks: [(Invariant, fn(&Graph) -> Vec<usize>); 4] = [
        (Invariant::DegreeMultiset, |g| g.degree_sequence().multiset()),
        (Invariant::TrianglesPerVertex, triangles_per_vertex),
        (Invariant::FourCycles, |g| vec![four_cycles(g)]),
        (Invariant::FourCliques, |g| vec![four_cliques(g)]),
    ];
    checks.into_iter().find_map(|(invariant, f)| {
        let (left, right) = (f(g1), f(g2));
        (left != right).then_some(Certificate { invariant, left, right })
    })
}

/// Whether the seed pair is the first factor (`left`) or the second
/// (`right`) of each product.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

impl std::str::FromStr for Side {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "left" => Ok(Side::Left),
            "right" => Ok(Side::Right),
            _ => Err(Error::BadParams(format!("side must be left or right, got `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FamilyRecipe {
    pub seed_pair: (Graph, Graph),
    pub partner: Graph,
    pub op: ProductOp,
    pub side: Side,
    pub depth: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FamilyPair {
    pub depth: usize,
    pub pair: (Graph, Graph),
    pub justification: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Family {
    pub pairs: Vec<FamilyPair>,
    /// Why iteration stopped before the requested depth.
    pub halted: Option<String>,
}

const ISO_TOL: f64 = 1e-7;

fn regular_degree(g: &Graph) -> Option<usize> {
    g.is_regular().ok().flatten()
}

/// Precondition check for one step; `Err` names the violated condition.
fn admissible(recipe: &FamilyRecipe, seeds: &(Graph, Graph), first: bool) -> std::result::Result<String, String> {
    let (s1, s2) = seeds;
    let op = recipe.op;
    if op == ProductOp::RGraph {
        return Err("r-graph has no second factor to vary".into());
    }
    if s1.n() != s2.n() {
        return Err(format!("seed graphs have different orders ({} vs {})", s1.n(), s2.n()));
    }
    if s1 == s2 {
        return Err("seed graphs are identical; a non-isomorphic pair is required".into());
    }
    let needs_regular_g1 = op != ProductOp::Corona;
    let iso_note = if first {
        let report = check_all_alpha(s1, s2, ISO_TOL).map_err(|e| e.to_string())?;
        if !report.verdict {
            return Err(format!(
                "seed graphs are not A_alpha-isospectral (differ at alpha = {})",
                report.witness_alpha.unwrap_or(f64::NAN)
            ));
        }
        "seeds verified isospectral for all alpha"
    } else {
        "seeds isospectral as outputs of the previous step"
    };
    match recipe.side {
        Side::Left => {
            if needs_regular_g1 {
                let (k1, k2) = (regular_degree(s1), regular_degree(s2));
                if k1.is_none() || k2.is_none() {
                    return Err(format!("{op} with the seed pair as first factor requires regular seeds"));
                }
                if s1.m() == 0 {
                    return Err(format!("{op} requires seeds with at least one edge"));
                }
                return Ok(format!(
                    "{op} spectrum depends only on the spectrum and degree of the regular first factor and on the fixed second factor; {iso_note}"
                ));
            }
            Ok(format!(
                "corona spectrum depends only on the spectrum of the first factor and on the fixed second factor; {iso_note}"
            ))
        }
        Side::Right => {
            if needs_regular_g1 && regular_degree(&recipe.partner).is_none_or(|k| k == 0) {
                return Err(format!("{op} with the seed pair as second factor requires a regular partner with edges"));
            }
            if recipe.partner.n() == 0 {
                return Err("partner graph has no vertices".into());
            }
            for a in chebyshev_alphas(2 * s1.n() + 1) {
                let alpha = AlphaParam::new(a).map_err(|e| e.to_string())?;
                if !coronal_equal(s1, s2, alpha).map_err(|e| e.to_string())? {
                    return Err(format!("seed coronals differ at alpha = {a}"));
                }
            }
            Ok(format!(
                "{op} spectrum depends only on the spectrum and coronal of the second factor, and the seeds share both for all alpha; {iso_note}"
            ))
        }
    }
}

/// Applies the recipe `depth` times, feeding each output pair back in as
/// seeds. Stops early with a reason when a precondition no longer holds;
/// fails outright when the first step is inadmissible.
pub fn build_family(recipe: &FamilyRecipe) -> Result<Family> {
    let mut seeds = recipe.seed_pair.clone();
    let mut pairs = Vec::new();
    for depth in 1..=recipe.depth {
        let justification = match admissible(recipe, &seeds, depth == 1) {
            Ok(j) => j,
            Err(reason) if depth == 1 => return Err(Error::InadmissibleRecipe(reason)),
            Err(reason) => {
                return Ok(Family {
                    pairs,
                    halted: Some(format!("stopped before depth {depth}: {reason}")),
                })
            }
        };
        let next = match recipe.side {
            Side::Left => (
                build_product(recipe.op, &seeds.0, &recipe.partner)?.0,
                build_product(recipe.op, &seeds.1, &recipe.partner)?.0,
            ),
            Side::Right => (
                build_product(recipe.op, &recipe.partner, &seeds.0)?.0,
                build_product(recipe.op, &recipe.partner, &seeds.1)?.0,
            ),
        };
        pairs.push(FamilyPair {
            depth,
            pair: next.clone(),
            justification,
        });
        seeds = next;
    }
    Ok(Family { pairs, halted: None })
}
