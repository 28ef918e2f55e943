//! Closed-form A_alpha spectra of corona-type products.
//!
//! Each product's characteristic polynomial is assembled from the spectrum
//! of `G1` and the coronal of `A_alpha(G2)`, following the block (Schur
//! complement) elimination of the copies of `G2` and, for R-constructions,
//! of the subdivision vertices. Write the reduced coronal as `Γ = N / d`
//! and `f_{G2} = g · d`, where the roots of `g` are the eigenvalues that
//! cancelled from the coronal. With `ν_i` the eigenvalues of `A_alpha(G1)`:
//!
//! * corona: `g(ν-α)^n1 · Π_i [(ν - α n2 - ν_i) d(ν-α) - β² N(ν-α)]`
//! * edge corona (G1 k1-regular, `q_i` the signless Laplacian eigenvalues):
//!   `g(ν-2α)^m1 · d(ν-2α)^(m1-n1) · Π_i [(ν - α k1 n2 - ν_i) d(ν-2α) - β² q_i N(ν-2α)]`
//! * R-vertex corona, `k' = α(k1 + n2)`:
//!   `g(ν-α)^n1 · (ν-2α)^(m1-n1) · Π_i ([(ν - k' - ν_i)(ν-2α) - β² q_i] d(ν-α) - β² (ν-2α) N(ν-α))`
//! * R-edge corona, `T = (ν - (n2+2)α) d(ν-α) - β² N(ν-α)`:
//!   `g(ν-α)^m1 · T^(m1-n1) · Π_i [(ν - α k1 - ν_i) T - β² q_i d(ν-α)]`
//!
//! When `q_i = 0` the bracket contains the pole factor exactly once; it is
//! divided out and the pole exponent raised by one, which keeps every
//! exponent nonnegative even when `m1 < n1`.

use std::fmt;

use crate::coronal::{coronal_complete_bipartite, coronal_general};
use crate::error::{Error, Result};
use crate::graph::{named_graph, Graph};
use crate::linalg::{adjacency_matrix, alpha_matrix, sym_eigen_default, AlphaParam, Spectrum, DEFAULT_MERGE_TOL};
use crate::poly::{real_roots, FactoredCharPoly, Polynomial};

/// Signless Laplacian eigenvalues below this are treated as exact zeros.
const ZERO_Q_TOL: f64 = 1e-8;

/// Where a group of eigenvalues comes from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Provenance {
    /// Eigenvalue of `A_alpha(G2)` invisible to the coronal, shifted.
    CopyShift,
    /// Root of a pole factor of the coronal (or of `ν - 2α`).
    Pole,
    Quadratic(f64),
    Cubic(f64),
    /// Per-eigenvalue factor of any other degree.
    Secular { nu: f64, degree: usize },
}

impl Provenance {
    fn for_factor(nu: f64, degree: usize) -> Self {
        match degree {
            2 => Provenance::Quadratic(nu),
            3 => Provenance::Cubic(nu),
            _ => Provenance::Secular { nu, degree },
        }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::CopyShift => write!(f, "copy-shift"),
            Provenance::Pole => write!(f, "pole"),
            Provenance::Quadratic(nu) => write!(f, "quadratic({nu})"),
            Provenance::Cubic(nu) => write!(f, "cubic({nu})"),
            Provenance::Secular { nu, degree } => write!(f, "degree-{degree}({nu})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TheoremResult {
    pub spectrum: Spectrum,
    pub factored: FactoredCharPoly,
    pub provenance: Vec<(Vec<(f64, usize)>, Provenance)>,
}

impl TheoremResult {
    pub fn order(&self) -> usize {
        self.spectrum.len()
    }
}

#[derive(Default)]
struct Assembly {
    factors: Vec<(Polynomial, usize)>,
    roots: Vec<(f64, usize)>,
    provenance: Vec<(Vec<(f64, usize)>, Provenance)>,
}

impl Assembly {
    fn root(&mut self, r: f64, mult: usize, tag: Provenance) {
        if mult == 0 {
            return;
        }
        self.factors.push((Polynomial::linear_root(r), mult));
        self.roots.push((r, mult));
        self.provenance.push((vec![(r, mult)], tag));
    }

    fn factor(&mut self, p: Polynomial, exp: usize, tag: Provenance) -> Result<()> {
        if exp == 0 || p.degree() == 0 {
            return Ok(());
        }
        let group: Vec<(f64, usize)> = real_roots(&p)?
            .pairs()
            .iter()
            .map(|&(r, m)| (r, m * exp))
            .collect();
        self.roots.extend(&group);
        self.provenance.push((group, tag));
        self.factors.push((p, exp));
        Ok(())
    }

    fn finish(self) -> TheoremResult {
        TheoremResult {
            spectrum: Spectrum::from_weighted(self.roots, DEFAULT_MERGE_TOL),
            factored: FactoredCharPoly { factors: self.factors },
            provenance: self.provenance,
        }
    }
}

/// `A_alpha(G2)` seen through its coronal: `Γ = num / den`,
/// `f_{G2} = Π (x - h)^m · den` over `hidden`.
struct SecondFactor {
    n2: usize,
    num: Polynomial,
    den: Polynomial,
    hidden: Vec<(f64, usize)>,
}

impl SecondFactor {
    fn general(g2: &Graph, alpha: AlphaParam) -> Result<Self> {
        if g2.n() == 0 {
            return Err(Error::EmptyGraph);
        }
        let c = coronal_general(&alpha_matrix(g2, alpha))?;
        let (rf, hidden) = c.rf.reduce_with_cancelled();
        Ok(SecondFactor {
            n2: g2.n(),
            num: rf.num().clone(),
            den: rf.den().clone(),
            hidden,
        })
    }

    fn regular(g2: &Graph, alpha: AlphaParam) -> Result<Self> {
        let k2 = g2.is_regular()?.ok_or(Error::NotRegular("G2"))? as f64;
        let spec = sym_eigen_default(&alpha_matrix(g2, alpha))?;
        let mut hidden: Vec<(f64, usize)> = spec.pairs().to_vec();
        let top = hidden
            .iter_mut()
            .min_by(|a, b| (a.0 - k2).abs().total_cmp(&(b.0 - k2).abs()))
            .expect("nonempty spectrum");
        top.1 -= 1;
        hidden.retain(|h| h.1 > 0);
        Ok(SecondFactor {
            n2: g2.n(),
            num: Polynomial::constant(g2.n() as f64),
            den: Polynomial::linear_root(k2),
            hidden,
        })
    }

    fn complete_bipartite(a: usize, b: usize, alpha: AlphaParam) -> Result<Self> {
        let c = coronal_complete_bipartite(a, b, alpha)?;
        let al = alpha.alpha();
        let hidden = vec![(al * a as f64, b - 1), (al * b as f64, a - 1)]
            .into_iter()
            .filter(|h| h.1 > 0)
            .collect();
        Ok(SecondFactor {
            n2: a + b,
            num: c.rf.num().clone(),
            den: c.rf.den().clone(),
            hidden,
        })
    }

    fn hidden_shifted(&self, asm: &mut Assembly, shift: f64, copies: usize) {
        for &(h, m) in &self.hidden {
            asm.root(h + shift, m * copies, Provenance::CopyShift);
        }
    }
}

fn eigen_pairs(m: &crate::linalg::SymMatrix) -> Result<Vec<(f64, usize)>> {
    Ok(sym_eigen_default(m)?.pairs().to_vec())
}

/// `(ν_i, q_i, multiplicity)` for a `k1`-regular `G1`, both derived from
/// the adjacency eigenvalues `μ_i`: `ν_i = α k1 + β μ_i`, `q_i = k1 + μ_i`.
fn regular_first_factor(g1: &Graph, alpha: AlphaParam) -> Result<(f64, Vec<(f64, f64, usize)>)> {
    if g1.m() == 0 {
        return Err(Error::NoEdgesInG1);
    }
    let k1 = g1.is_regular()?.ok_or(Error::NotRegular("G1"))? as f64;
    let groups = eigen_pairs(&adjacency_matrix(g1))?
        .into_iter()
        .map(|(mu, m)| (alpha.alpha() * k1 + alpha.beta() * mu, k1 + mu, m))
        .collect();
    Ok((k1, groups))
}

fn x_minus(c: f64) -> Polynomial {
    Polynomial::linear_root(c)
}

fn assemble_corona(g1: &Graph, f2: &SecondFactor, alpha: AlphaParam) -> Result<TheoremResult> {
    let (al, b2) = (alpha.alpha(), alpha.beta().powi(2));
    let n2 = f2.n2 as f64;
    let nus = eigen_pairs(&alpha_matrix(g1, alpha))?;
    let (d, num) = (f2.den.shift(al), f2.num.shift(al));
    let mut asm = Assembly::default();
    f2.hidden_shifted(&mut asm, al, g1.n());
    for (nu, mult) in nus {
        let p = x_minus(al * n2 + nu).mul(&d).sub(&num.scale(b2));
        let deg = p.degree();
        asm.factor(p, mult, Provenance::for_factor(nu, deg))?;
    }
    Ok(asm.finish())
}

fn assemble_edge_corona(g1: &Graph, f2: &SecondFactor, alpha: AlphaParam) -> Result<TheoremResult> {
    let (al, b2) = (alpha.alpha(), alpha.beta().powi(2));
    let n2 = f2.n2 as f64;
    let (k1, groups) = regular_first_factor(g1, alpha)?;
    let (d, num) = (f2.den.shift(2.0 * al), f2.num.shift(2.0 * al));
    let mut asm = Assembly::default();
    f2.hidden_shifted(&mut asm, 2.0 * al, g1.m());
    let mut zero = 0;
    for (nu, q, mult) in groups {
        let lin = x_minus(al * k1 * n2 + nu);
        if q.abs() <= ZERO_Q_TOL {
            zero += mult;
            asm.factor(lin, mult, Provenance::for_factor(nu, 1))?;
        } else {
            let p = lin.mul(&d).sub(&num.scale(b2 * q));
            let deg = p.degree();
            asm.factor(p, mult, Provenance::for_factor(nu, deg))?;
        }
    }
    asm.factor(d, g1.m() + zero - g1.n(), Provenance::Pole)?;
    Ok(asm.finish())
}

fn assemble_r_vertex(g1: &Graph, f2: &SecondFactor, alpha: AlphaParam) -> Result<TheoremResult> {
    let (al, b2) = (alpha.alpha(), alpha.beta().powi(2));
    let n2 = f2.n2 as f64;
    let (k1, groups) = regular_first_factor(g1, alpha)?;
    let kprime = al * (k1 + n2);
    let (d, num) = (f2.den.shift(al), f2.num.shift(al));
    let two_alpha = x_minus(2.0 * al);
    let mut asm = Assembly::default();
    f2.hidden_shifted(&mut asm, al, g1.n());
    let mut zero = 0;
    for (nu, q, mult) in groups {
        let lin = x_minus(kprime + nu);
        let p = if q.abs() <= ZERO_Q_TOL {
            zero += mult;
            lin.mul(&d).sub(&num.scale(b2))
        } else {
            let inner = lin.mul(&two_alpha).sub(&Polynomial::constant(b2 * q));
            inner.mul(&d).sub(&two_alpha.mul(&num).scale(b2))
        };
        let deg = p.degree();
        asm.factor(p, mult, Provenance::for_factor(nu, deg))?;
    }
    asm.root(2.0 * al, g1.m() + zero - g1.n(), Provenance::Pole);
    Ok(asm.finish())
}

fn assemble_r_edge(g1: &Graph, f2: &SecondFactor, alpha: AlphaParam) -> Result<TheoremResult> {
    let (al, b2) = (alpha.alpha(), alpha.beta().powi(2));
    let n2 = f2.n2 as f64;
    let (k1, groups) = regular_first_factor(g1, alpha)?;
    let (d, num) = (f2.den.shift(al), f2.num.shift(al));
    let t = x_minus((n2 + 2.0) * al).mul(&d).sub(&num.scale(b2));
    let mut asm = Assembly::default();
    f2.hidden_shifted(&mut asm, al, g1.m());
    let mut zero = 0;
    for (nu, q, mult) in groups {
        let lin = x_minus(al * k1 + nu);
        if q.abs() <= ZERO_Q_TOL {
            zero += mult;
            asm.factor(lin, mult, Provenance::for_factor(nu, 1))?;
        } else {
            let p = lin.mul(&t).sub(&d.scale(b2 * q));
            let deg = p.degree();
            asm.factor(p, mult, Provenance::for_factor(nu, deg))?;
        }
    }
    asm.factor(t, g1.m() + zero - g1.n(), Provenance::Pole)?;
    Ok(asm.finish())
}

fn require_g1(g1: &Graph) -> Result<()> {
    if g1.n() == 0 {
        return Err(Error::EmptyG1);
    }
    Ok(())
}

/// Spectrum of `A_alpha(G1 ∘ G2)` for arbitrary factors.
pub fn corona_charpoly(g1: &Graph, g2: &Graph, alpha: AlphaParam) -> Result<TheoremResult> {
    require_g1(g1)?;
    assemble_corona(g1, &SecondFactor::general(g2, alpha)?, alpha)
}

/// Corona with a regular `G2`: a quadratic per eigenvalue of `G1` and the
/// non-maximal eigenvalues of `G2` shifted by `alpha`.
pub fn corona_spectrum_regular(g1: &Graph, g2: &Graph, alpha: AlphaParam) -> Result<TheoremResult> {
    require_g1(g1)?;
    assemble_corona(g1, &SecondFactor::regular(g2, alpha)?, alpha)
}

/// Corona with `G2 = K_{a,b}`; equal parts fall back to the regular case.
pub fn corona_spectrum_kab(g1: &Graph, a: usize, b: usize, alpha: AlphaParam) -> Result<TheoremResult> {
    if a == b {
        return corona_spectrum_regular(g1, &named_graph("complete_bipartite", &[a, b])?, alpha);
    }
    require_g1(g1)?;
    assemble_corona(g1, &SecondFactor::complete_bipartite(a, b, alpha)?, alpha)
}

/// Edge corona with a regular `G1` and arbitrary `G2`.
pub fn edge_corona_charpoly(g1: &Graph, g2: &Graph, alpha: AlphaParam) -> Result<TheoremResult> {
    assemble_edge_corona(g1, &SecondFactor::general(g2, alpha)?, alpha)
}

pub fn edge_corona_spectrum_regular(g1: &Graph, g2: &Graph, alpha: AlphaParam) -> Result<TheoremResult> {
    assemble_edge_corona(g1, &SecondFactor::regular(g2, alpha)?, alpha)
}

pub fn edge_corona_spectrum_kab(g1: &Graph, a: usize, b: usize, alpha: AlphaParam) -> Result<TheoremResult> {
    if a == b {
        return Err(Error::PartsEqual(a));
    }
    assemble_edge_corona(g1, &SecondFactor::complete_bipartite(a, b, alpha)?, alpha)
}

/// R-vertex corona with a regular `G1` and arbitrary `G2`.
pub fn r_vertex_charpoly(g1: &Graph, g2: &Graph, alpha: AlphaParam) -> Result<TheoremResult> {
    assemble_r_vertex(g1, &SecondFactor::general(g2, alpha)?, alpha)
}

pub fn r_vertex_spectrum_regular(g1: &Graph, g2: &Graph, alpha: AlphaParam) -> Result<TheoremResult> {
    assemble_r_vertex(g1, &SecondFactor::regular(g2, alpha)?, alpha)
}

/// R-edge corona with a regular `G1` and arbitrary `G2`.
pub fn r_edge_charpoly(g1: &Graph, g2: &Graph, alpha: AlphaParam) -> Result<TheoremResult> {
    assemble_r_edge(g1, &SecondFactor::general(g2, alpha)?, alpha)
}
