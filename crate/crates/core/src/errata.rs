//! Known misprints in published closed forms for corona-type spectra, each
//! paired with the corrected form and a witness product whose oracle spectrum
//! separates the two.
//!
//! Evidence is the largest distance from a value produced by a form to the
//! nearest eigenvalue of the explicitly built product.

use std::fmt::Write as _;

use crate::coronal::coronal_general;
use crate::error::{Error, Result};
use crate::graph::{parse_named, Graph};
use crate::isospectral::alpha_eigenvalues;
use crate::linalg::{alpha_matrix, AlphaParam};
use crate::poly::{real_roots, Polynomial};
use crate::products::{build_product, ProductOp};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Witness {
    pub op: ProductOp,
    /// Named graph specs as accepted by [`parse_named`].
    pub g1: &'static str,
    pub g2: &'static str,
    pub alpha: f64,
}

impl Witness {
    pub fn describe(&self) -> String {
        format!("{} of `{}` with `{}` at alpha = {}", self.op, self.g1, self.g2, self.alpha)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Location {
    Statement,
    Proof,
}

/// Real values produced by a form and the number of non-real roots it
/// has; `None` when the form cannot be evaluated at all.
type Form = fn(&Context) -> Result<Option<Values>>;

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Values {
    pub real: Vec<f64>,
    pub nonreal: usize,
}

impl From<Vec<f64>> for Values {
    fn from(real: Vec<f64>) -> Self {
        Values { real, nonreal: 0 }
    }
}

#[derive(Clone, Copy)]
pub struct Erratum {
    pub id: &'static str,
    pub construction: &'static str,
    pub location: Location,
    pub printed: &'static str,
    pub corrected: &'static str,
    pub witness: Witness,
    printed_form: Form,
    corrected_form: Form,
}

impl std::fmt::Debug for Erratum {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Erratum").field("id", &self.id).field("witness", &self.witness).finish()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Evidence {
    pub oracle: Vec<f64>,
    pub printed: Option<Values>,
    pub printed_deviation: Option<f64>,
    pub corrected: Vec<f64>,
    pub corrected_deviation: f64,
}

impl Evidence {
    /// The printed form misses the oracle (or leaves the reals) while the
    /// corrected one hits it.
    pub fn separates(&self, tol: f64) -> bool {
        let printed_off = match (&self.printed, self.printed_deviation) {
            (Some(p), Some(d)) => p.nonreal > 0 || d > tol,
            _ => true,
        };
        self.corrected_deviation <= tol && printed_off
    }
}

/// Everything a form may need about the witness.
struct Context {
    alpha: f64,
    beta: f64,
    n2: f64,
    k1: f64,
    k2: f64,
    a: f64,
    b: f64,
    nu: Vec<f64>,
    eta: Vec<f64>,
    /// Reduced coronal of `A_alpha(G2)`.
    num: Polynomial,
    den: Polynomial,
}

impl Context {
    fn new(w: &Witness, g1: &Graph, g2: &Graph) -> Result<Self> {
        let alpha = AlphaParam::new(w.alpha)?;
        let m2 = alpha_matrix(g2, alpha);
        let rf = coronal_general(&m2)?.rf.reduce();
        let degree = |g: &Graph| g.is_regular().ok().flatten().unwrap_or(0) as f64;
        let (a, b) = bipartite_parts(w.g2);
        Ok(Context {
            alpha: alpha.alpha(),
            beta: alpha.beta(),
            n2: g2.n() as f64,
            k1: degree(g1),
            k2: degree(g2),
            a,
            b,
            nu: alpha_eigenvalues(g1, alpha)?,
            eta: alpha_eigenvalues(g2, alpha)?,
            num: rf.num().clone(),
            den: rf.den().clone(),
        })
    }

    /// Non-maximal eigenvalues of `A_alpha(G2)`.
    fn eta_lower(&self) -> &[f64] {
        &self.eta[..self.eta.len().saturating_sub(1)]
    }

    /// Roots of one polynomial per eigenvalue of `A_alpha(G1)`.
    fn per_nu(&self, f: impl Fn(f64) -> Polynomial) -> Result<Option<Values>> {
        let mut out = Values::default();
        for &nu in &self.nu {
            let p = f(nu);
            match real_roots(&p) {
                Ok(s) => out.real.extend(s.flatten()),
                Err(Error::ComplexRootsDetected { .. }) if p.degree() == 3 => {
                    out.real.push(odd_degree_root(&p));
                    out.nonreal += 2;
                }
                Err(Error::ComplexRootsDetected { .. }) => out.nonreal += p.degree(),
                Err(e) => return Err(e),
            }
        }
        Ok(Some(out))
    }
}

fn bipartite_parts(spec: &str) -> (f64, f64) {
    let parts: Vec<f64> = spec
        .strip_prefix("complete_bipartite:")
        .map(|p| p.split(',').filter_map(|s| s.trim().parse().ok()).collect())
        .unwrap_or_default();
    match parts[..] {
        [a, b] => (a, b),
        _ => (0.0, 0.0),
    }
}

/// A real root of an odd-degree polynomial, by bisection on a Cauchy bound.
fn odd_degree_root(p: &Polynomial) -> f64 {
    let lead = p.leading();
    let bound = 1.0 + p.coeffs().iter().map(|c| (c / lead).abs()).fold(0.0, f64::max);
    let (mut lo, mut hi) = (-bound, bound);
    let s_lo = p.eval(lo).signum();
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if p.eval(mid).signum() == s_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

fn poly(c: &[f64]) -> Polynomial {
    Polynomial::new(c.to_vec())
}

/// `x - c`.
fn lin(c: f64) -> Polynomial {
    Polynomial::linear_root(c)
}

fn max_distance(values: &[f64], oracle: &[f64]) -> f64 {
    values
        .iter()
        .map(|v| oracle.iter().map(|o| (v - o).abs()).fold(f64::INFINITY, f64::min))
        .fold(0.0, f64::max)
}

impl Erratum {
    pub fn evaluate(&self) -> Result<Evidence> {
        let w = &self.witness;
        let (g1, g2) = (parse_named(w.g1)?, parse_named(w.g2)?);
        let (product, _) = build_product(w.op, &g1, &g2)?;
        let oracle = alpha_eigenvalues(&product, AlphaParam::new(w.alpha)?)?;
        let ctx = Context::new(w, &g1, &g2)?;
        let printed = (self.printed_form)(&ctx)?;
        let corrected = match (self.corrected_form)(&ctx)? {
            Some(v) if v.nonreal == 0 => v.real,
            Some(v) => return Err(Error::ComplexRootsDetected { degree: v.real.len() + v.nonreal, missing: v.nonreal }),
            None => return Err(Error::ComplexRootsDetected { degree: 0, missing: 0 }),
        };
        Ok(Evidence {
            printed_deviation: printed.as_ref().map(|p| max_distance(&p.real, &oracle)),
            corrected_deviation: max_distance(&corrected, &oracle),
            oracle,
            printed,
            corrected,
        })
    }
}

fn unevaluable(_: &Context) -> Result<Option<Values>> {
    Ok(None)
}

fn corona_copy_printed(c: &Context) -> Result<Option<Values>> {
    Ok(Some(c.eta_lower().iter().map(|e| e + 1.0).collect::<Vec<_>>().into()))
}

fn corona_copy_corrected(c: &Context) -> Result<Option<Values>> {
    Ok(Some(c.eta_lower().iter().map(|e| e + c.alpha).collect::<Vec<_>>().into()))
}

fn corona_quadratic_printed(c: &Context) -> Result<Option<Values>> {
    let (al, n2, k) = (c.alpha, c.n2, c.k2);
    c.per_nu(|nu| {
        poly(&[
            al * n2 * (al + k + nu) - c.beta * c.beta * n2 + k * nu,
            -(al * (n2 + 1.0) + k + nu),
            1.0,
        ])
    })
}

/// The printed `±` radical, which agrees with the corrected quadratic.
fn corona_quadratic_radical(c: &Context) -> Result<Option<Values>> {
    let (al, n2, k) = (c.alpha, c.n2, c.k2);
    let mut out = Vec::new();
    for &nu in &c.nu {
        let disc = al * al * n2 * n2 + (k + al - nu).powi(2) + 2.0 * n2 * (2.0 + al * (nu + al - k - 4.0));
        if disc < 0.0 {
            return Ok(Some(Values { real: out, nonreal: 2 }));
        }
        let mid = nu + k + al * (n2 + 1.0);
        out.extend([(mid + disc.sqrt()) / 2.0, (mid - disc.sqrt()) / 2.0]);
    }
    Ok(Some(out.into()))
}

fn corona_cubic_printed(c: &Context) -> Result<Option<Values>> {
    let (al, n2, ab) = (c.alpha, c.n2, c.a * c.b);
    let roots = c.per_nu(|nu| {
        poly(&[
            -2.0 * ab + al * n2 * (ab * (1.0 - 2.0 * al) + n2) + ab * (1.0 - 2.0 * al) * nu,
            ab * (2.0 * al - 1.0) + n2 * (al * (nu + al * n2) - 1.0),
            -nu - 2.0 * al * n2,
            1.0,
        ])
    })?;
    Ok(roots.map(|mut r| {
        r.real.iter_mut().for_each(|e| *e += al);
        r
    }))
}

/// `(nu - alpha n2 - nu_i) d(nu - alpha) - w N(nu - alpha)`.
fn corona_condition(c: &Context, w: f64) -> Result<Option<Values>> {
    let (d, n) = (c.den.shift(c.alpha), c.num.shift(c.alpha));
    c.per_nu(|nu| lin(c.alpha * c.n2 + nu).mul(&d).sub(&n.scale(w)))
}

fn corona_cubic_corrected(c: &Context) -> Result<Option<Values>> {
    corona_condition(c, c.beta * c.beta)
}

fn corona_proof_printed(c: &Context) -> Result<Option<Values>> {
    corona_condition(c, 1.0)
}

/// `(nu - alpha k1 n2 - nu_i + s) d(nu - 2 alpha) + (t - beta nu_i) N(nu - 2 alpha)`.
fn edge_condition(c: &Context, s: f64, t: f64) -> Result<Option<Values>> {
    let shift = 2.0 * c.alpha;
    let (d, n) = (c.den.shift(shift), c.num.shift(shift));
    c.per_nu(|nu| {
        lin(c.alpha * c.k1 * c.n2 + nu - s)
            .mul(&d)
            .add(&n.scale(t - c.beta * nu))
    })
}

fn edge_statement_printed(c: &Context) -> Result<Option<Values>> {
    edge_condition(c, c.beta * c.k1 * (2.0 * c.alpha - 1.0), 0.0)
}

fn edge_proof_printed(c: &Context) -> Result<Option<Values>> {
    edge_condition(c, 0.0, c.beta * (2.0 * c.alpha - 1.0))
}

fn edge_corrected(c: &Context) -> Result<Option<Values>> {
    edge_condition(c, 0.0, c.beta * (2.0 * c.alpha - 1.0) * c.k1)
}

fn edge_quadratic_printed(c: &Context) -> Result<Option<Values>> {
    let (al, n2, k1, k2) = (c.alpha, c.n2, c.k1, c.k2);
    let s = 1.0 - 3.0 * al + 2.0 * al * al + al * n2;
    c.per_nu(|nu| {
        poly(&[
            k1 * (2.0 * al + k2) * s + (2.0 * al + k2 + (al - 1.0) * n2) * nu,
            -2.0 * al - k2 - k1 * s - nu,
            1.0,
        ])
    })
}

/// R-vertex condition with the coronal shifted by `shift` and the constant
/// `gamma0 - beta nu_i` beside `(nu - k' - nu_i)(nu - 2 alpha)`.
fn r_vertex_condition(c: &Context, shift: f64, printed: bool) -> Result<Option<Values>> {
    let (al, be) = (c.alpha, c.beta);
    let kp = al * (c.k1 + c.n2);
    let (d, n) = (c.den.shift(shift), c.num.shift(shift));
    c.per_nu(|nu| {
        let quad = if printed {
            poly(&[2.0 * al * kp + kp * be * (2.0 * al - 1.0) - be * nu, -(kp + 2.0 * al + nu), 1.0])
        } else {
            lin(kp + nu)
                .mul(&lin(2.0 * al))
                .add(&Polynomial::constant(be * (2.0 * al - 1.0) * c.k1 - be * nu))
        };
        quad.mul(&d).sub(&n.mul(&lin(2.0 * al)).scale(be * be))
    })
}

fn r_vertex_printed(c: &Context) -> Result<Option<Values>> {
    r_vertex_condition(c, c.alpha * (c.k1 + c.n2), true)
}

fn r_vertex_corrected(c: &Context) -> Result<Option<Values>> {
    r_vertex_condition(c, c.alpha, false)
}

/// R-edge quadratic `(nu - alpha k1 - nu_i)(nu - r) - q_w` cleared by
/// `d(nu - alpha)`, with `r = (n2 + 2) alpha + w_r Gamma(nu - alpha)` and
/// `q_w = w_q (nu_i - (2 alpha - 1) k1)`.
fn r_edge_condition(c: &Context, w_r: f64, w_q: f64) -> Result<Option<Values>> {
    let al = c.alpha;
    let (d, n) = (c.den.shift(al), c.num.shift(al));
    let t = lin(0.0).mul(&d).sub(&d.scale((c.n2 + 2.0) * al)).sub(&n.scale(w_r));
    c.per_nu(|nu| {
        lin(al * c.k1 + nu)
            .mul(&t)
            .sub(&d.scale(w_q * (nu - (2.0 * al - 1.0) * c.k1)))
    })
}

fn r_edge_weight_printed(c: &Context) -> Result<Option<Values>> {
    r_edge_condition(c, 1.0, c.beta)
}

fn r_edge_proof_printed(c: &Context) -> Result<Option<Values>> {
    r_edge_condition(c, c.beta * c.beta, 1.0)
}

fn r_edge_corrected(c: &Context) -> Result<Option<Values>> {
    r_edge_condition(c, c.beta * c.beta, c.beta)
}

/// Every recorded misprint, in the order the constructions are usually
/// presented.
pub fn errata() -> Vec<Erratum> {
    vec![
        Erratum {
            id: "corona-regular-copy-shift",
            construction: "corona G1 ∘ G2 with G2 k-regular",
            location: Location::Statement,
            printed: "copy eigenvalues η_j + 1 with multiplicity n1 for each non-maximal η_j of A_α(G2)",
            corrected: "η_j + α, forced by the factor f_{A_α(G2)}(ν − α)^{n1}",
            witness: Witness { op: ProductOp::Corona, g1: "complete:1", g2: "complete:2", alpha: 0.0 },
            printed_form: corona_copy_printed,
            corrected_form: corona_copy_corrected,
        },
        Erratum {
            id: "corona-regular-quadratic-constant",
            construction: "corona G1 ∘ G2 with G2 k-regular",
            location: Location::Proof,
            printed: "η² − (α(n2+1) + k + ν_i)η + αn2(α + k + ν_i) − β²n2 + kν_i = 0",
            corrected: "η² − (α(n2+1) + k + ν_i)η + (αn2 + ν_i)(α + k) − β²n2 = 0; the printed ± radical \
                        (ν_i + k + α(n2+1) ± √(α²n2² + (k+α−ν_i)² + 2n2(2 + α(ν_i+α−k−4))))/2 already solves this \
                        and is what the corrected values below use",
            witness: Witness { op: ProductOp::Corona, g1: "complete:2", g2: "complete:2", alpha: 0.25 },
            printed_form: corona_quadratic_printed,
            corrected_form: corona_quadratic_radical,
        },
        Erratum {
            id: "corona-bipartite-cubic",
            construction: "corona G1 ∘ K_{a,b}",
            location: Location::Statement,
            printed: "η³ + η²(−ν_i − 2αn2) + η(ab(2α−1) + n2(α(ν_i + αn2) − 1)) − 2ab + αn2(ab(1−2α) + n2) \
                      + ab(1−2α)ν_i = 0, eigenvalues η + α",
            corrected: "(η + α − αn2 − ν_i)(η² − αn2η + (2α−1)ab) − β²(n2η − αn2² + 2ab) = 0, eigenvalues η + α",
            witness: Witness { op: ProductOp::Corona, g1: "complete:1", g2: "complete_bipartite:1,2", alpha: 0.25 },
            printed_form: corona_cubic_printed,
            corrected_form: corona_cubic_corrected,
        },
        Erratum {
            id: "corona-bipartite-missing-beta-squared",
            construction: "corona G1 ∘ K_{a,b}",
            location: Location::Proof,
            printed: "η − αn2 − Γ_{A_α(G2)}(η − α) = ν_i",
            corrected: "η − αn2 − β²Γ_{A_α(G2)}(η − α) = ν_i",
            witness: Witness { op: ProductOp::Corona, g1: "complete:1", g2: "complete_bipartite:1,2", alpha: 0.25 },
            printed_form: corona_proof_printed,
            corrected_form: corona_cubic_corrected,
        },
        Erratum {
            id: "edge-corona-statement-drops-coronal",
            construction: "edge corona G1 ◊ G2 with G1 k1-regular",
            location: Location::Statement,
            printed: "f_{A_α(G1)}((ν − αk1n2 + βk1(2α−1)) / (1 + βΓ(ν−2α))) · (1 + βΓ(ν−2α))^{n1}",
            corrected: "f_{A_α(G1)}((ν − αk1n2 + βk1(2α−1)Γ(ν−2α)) / (1 + βΓ(ν−2α))) · (1 + βΓ(ν−2α))^{n1}",
            witness: Witness { op: ProductOp::EdgeCorona, g1: "complete:3", g2: "complete:1", alpha: 0.0 },
            printed_form: edge_statement_printed,
            corrected_form: edge_corrected,
        },
        Erratum {
            id: "edge-corona-proof-drops-degree",
            construction: "edge corona G1 ◊ G2 with G1 k1-regular",
            location: Location::Proof,
            printed: "S = (ν − αk1n2 + β(2α−1)Γ(ν−2α))I − (1 + βΓ(ν−2α))A_α(G1)",
            corrected: "S = (ν − αk1n2 + β(2α−1)k1Γ(ν−2α))I − (1 + βΓ(ν−2α))A_α(G1)",
            witness: Witness { op: ProductOp::EdgeCorona, g1: "complete:3", g2: "complete:1", alpha: 0.0 },
            printed_form: edge_proof_printed,
            corrected_form: edge_corrected,
        },
        Erratum {
            id: "edge-corona-regular-quadratic",
            construction: "edge corona G1 ◊ G2 with both factors regular",
            location: Location::Statement,
            printed: "η² + η(−2α − k2 − k1(1 − 3α + 2α² + αn2) − ν_i) + k1(2α + k2)(1 − 3α + 2α² + αn2) \
                      + (2α + k2 + (α−1)n2)ν_i = 0",
            corrected: "(η − αk1n2 − ν_i)(η − 2α − k2) + β(2α−1)k1n2 − βn2ν_i = 0",
            witness: Witness { op: ProductOp::EdgeCorona, g1: "cycle:4", g2: "complete:2", alpha: 0.25 },
            printed_form: edge_quadratic_printed,
            corrected_form: edge_corrected,
        },
        Erratum {
            id: "edge-corona-bipartite-cubic-symbols",
            construction: "edge corona G1 ◊ K_{a,b}",
            location: Location::Statement,
            printed: "cubic whose coefficients use the undefined symbols k and n alongside k1 and n2",
            corrected: "(η − αk1n2 − ν_i)d(η−2α) + β((2α−1)k1 − ν_i)N(η−2α) = 0 with Γ_{K_{a,b}} = N/d \
                        = (n2x − αn2² + 2ab)/(x² − αn2x + (2α−1)ab)",
            witness: Witness { op: ProductOp::EdgeCorona, g1: "cycle:4", g2: "complete_bipartite:1,2", alpha: 0.25 },
            printed_form: unevaluable,
            corrected_form: edge_corrected,
        },
        Erratum {
            id: "r-vertex-coronal-argument",
            construction: "R-vertex corona G1 ⊙ G2 with G1 k1-regular",
            location: Location::Statement,
            printed: "ν² − (k' + β²Γ(ν−k') + 2α + ν_i)ν + 2αk' + 2αβ²Γ(ν−k') + k'β(2α−1) − βν_i, k' = α(k1+n2)",
            corrected: "ν² − (k' + β²Γ(ν−α) + 2α + ν_i)ν + 2α(k' + ν_i) + 2αβ²Γ(ν−α) + k1β(2α−1) − βν_i; \
                        the copies sit on the diagonal block (ν−α)I − A_α(G2)",
            witness: Witness { op: ProductOp::RVertex, g1: "complete:3", g2: "complete:1", alpha: 0.25 },
            printed_form: r_vertex_printed,
            corrected_form: r_vertex_corrected,
        },
        Erratum {
            id: "r-vertex-regular-cubic-symbols",
            construction: "R-vertex corona G1 ⊙ G2 with both factors regular",
            location: Location::Statement,
            printed: "per-ν_i(G1) cubic whose coefficients contain ν_i(G2)",
            corrected: "the corrected R-vertex quadratic with Γ(ν−α) = n2/(ν − α − k2), cleared to a cubic",
            witness: Witness { op: ProductOp::RVertex, g1: "cycle:4", g2: "complete:2", alpha: 0.25 },
            printed_form: unevaluable,
            corrected_form: r_vertex_corrected,
        },
        Erratum {
            id: "r-edge-coronal-weight",
            construction: "R-edge corona G1 ⊖ G2 with G1 k1-regular",
            location: Location::Statement,
            printed: "r = (n2 + 2)α + Γ_{A_α(G2)}(ν − α)",
            corrected: "r = (n2 + 2)α + β²Γ_{A_α(G2)}(ν − α); the quadratic in ν is otherwise correct",
            witness: Witness { op: ProductOp::REdge, g1: "complete:3", g2: "complete:2", alpha: 0.25 },
            printed_form: r_edge_weight_printed,
            corrected_form: r_edge_corrected,
        },
        Erratum {
            id: "r-edge-schur-weight",
            construction: "R-edge corona G1 ⊖ G2 with G1 k1-regular",
            location: Location::Proof,
            printed: "det((ν − αk1)I − A_α(G1) − βB1B1ᵀ/(ν − r))",
            corrected: "det((ν − αk1)I − A_α(G1) − β²B1B1ᵀ/(ν − r))",
            witness: Witness { op: ProductOp::REdge, g1: "cycle:4", g2: "complete:1", alpha: 0.25 },
            printed_form: r_edge_proof_printed,
            corrected_form: r_edge_corrected,
        },
    ]
}

fn fmt_values(v: &[f64]) -> String {
    let mut v = v.to_vec();
    v.sort_by(f64::total_cmp);
    let parts: Vec<String> = v.iter().map(|&x| format!("{:.6}", if x.abs() < 5e-7 { 0.0 } else { x })).collect();
    format!("[{}]", parts.join(", "))
}

/// Markdown document listing every erratum with its evaluated evidence.
pub fn render_markdown(entries: &[Erratum]) -> Result<String> {
    let mut out = String::from(
        "# Discrepancies\n\n\
         Printed closed forms for A_α spectra of corona-type products that disagree with the \
         eigenvalues of the explicitly built product graph. Each entry gives the printed form, \
         the corrected form used by `coronae::theorems`, a witness, and the largest distance from \
         a value produced by each form to the nearest eigenvalue of the witness product.\n\n\
         This file is generated by `coronae errata`.\n",
    );
    for e in entries {
        let ev = e.evaluate()?;
        let loc = match e.location {
            Location::Statement => "statement",
            Location::Proof => "proof",
        };
        let printed = match (&ev.printed, ev.printed_deviation) {
            (Some(p), Some(d)) if p.nonreal > 0 => format!(
                "{} (max distance {:.3e}) plus {} non-real roots",
                fmt_values(&p.real),
                d,
                p.nonreal
            ),
            (Some(p), Some(d)) => format!("{} (max distance {:.3e})", fmt_values(&p.real), d),
            _ => "not evaluable (undefined symbols)".to_string(),
        };
        let _ = write!(
            out,
            "\n## `{}`\n\n\
             - Construction: {}\n\
             - Location: {}\n\
             - Printed: {}\n\
             - Corrected: {}\n\
             - Witness: {}\n\
             - Oracle spectrum: {}\n\
             - Printed form gives: {}\n\
             - Corrected form gives: {} (max distance {:.3e})\n",
            e.id,
            e.construction,
            loc,
            e.printed,
            e.corrected,
            e.witness.describe(),
            fmt_values(&ev.oracle),
            printed,
            fmt_values(&ev.corrected),
            ev.corrected_deviation,
        );
    }
    Ok(out)
}
