//! The coronal `Γ_M(x) = jᵀ (xI - M)⁻¹ j` of a square matrix, kept as an
//! exact rational function.

use crate::error::{Error, Result};
use crate::graph::named_graph;
use crate::linalg::{alpha_matrix, faddeev_leverrier, gershgorin_radius, AlphaParam, SymMatrix};
use crate::poly::{real_roots, Polynomial, RationalFunction};

/// Distance from a pole below which evaluation is refused.
pub const POLE_TOL: f64 = 1e-9;
const FAST_PATH_POINTS: usize = 10;
const FAST_PATH_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CoronalKind {
    General,
    /// Every row of the matrix sums to `t`.
    ConstantRowSum { n: usize, t: f64 },
    CompleteBipartite { a: usize, b: usize, alpha: f64 },
}

#[derive(Debug, Clone, PartialEq)]
pub struct Coronal {
    pub rf: RationalFunction,
    pub kind: CoronalKind,
}

impl Coronal {
    pub fn eval(&self, x: f64) -> Result<f64> {
        coronal_eval(self, x)
    }
}

/// Numerator from the adjugate terms of Faddeev–LeVerrier: the coefficient
/// of `x^(n-k)` is the sum of the entries of `M_k`.
pub fn coronal_general(m: &SymMatrix) -> Result<Coronal> {
    let n = m.order();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let (den, ms) = faddeev_leverrier(m.as_matrix())?;
    let mut coeffs = vec![0.0; n];
    for (k, mk) in ms.iter().enumerate() {
        coeffs[n - 1 - k] = mk.sum();
    }
    Ok(Coronal {
        rf: RationalFunction::new(Polynomial::new(coeffs), den)?,
        kind: CoronalKind::General,
    })
}

/// `n / (x - t)` for a matrix whose rows all sum to `t`.
pub fn coronal_constant_row_sum(n: usize, t: f64) -> Coronal {
    Coronal {
        rf: RationalFunction::new(Polynomial::constant(n as f64), Polynomial::linear_root(t))
            .expect("linear denominator"),
        kind: CoronalKind::ConstantRowSum { n, t },
    }
}

/// Closed form for `A_alpha(K_{a,b})`:
/// `(n x - alpha n^2 + 2ab) / (x^2 - alpha n x + (2 alpha - 1) ab)` with
/// `n = a + b`. Checked against the general coronal at ten points before it
/// is returned.
pub fn coronal_complete_bipartite(a: usize, b: usize, alpha: AlphaParam) -> Result<Coronal> {
    if a == 0 || b == 0 {
        return Err(Error::BadParams("complete bipartite parts must be positive".into()));
    }
    let al = alpha.alpha();
    let (n, ab) = ((a + b) as f64, (a * b) as f64);
    let num = Polynomial::new(vec![2.0 * ab - al * n * n, n]);
    let den = Polynomial::new(vec![(2.0 * al - 1.0) * ab, -al * n, 1.0]);
    let fast = Coronal {
        rf: RationalFunction::new(num, den)?,
        kind: CoronalKind::CompleteBipartite { a, b, alpha: al },
    };
    let m = alpha_matrix(&named_graph("complete_bipartite", &[a, b])?, alpha);
    let general = coronal_general(&m)?;
    let start = gershgorin_radius(&m) + 1.0;
    for k in 0..FAST_PATH_POINTS {
        let x = start + k as f64 * 0.75;
        let (f, g) = (fast.rf.eval(x), general.rf.eval(x));
        if (f - g).abs() > FAST_PATH_TOL * g.abs().max(f64::MIN_POSITIVE) {
            return Err(Error::FastPathMismatch { x });
        }
    }
    Ok(fast)
}

/// `num(x) / den(x)`, refusing points within [`POLE_TOL`] of a pole.
pub fn coronal_eval(c: &Coronal, x: f64) -> Result<f64> {
    let den = c.rf.den();
    match real_roots(den) {
        Ok(poles) => {
            if let Some(&(pole, _)) = poles.pairs().iter().find(|p| (p.0 - x).abs() <= POLE_TOL) {
                return Err(Error::PoleProximity { pole });
            }
        }
        Err(_) => {
            if den.eval(x).abs() <= POLE_TOL * den.eval_abs(x) {
                return Err(Error::PoleProximity { pole: x });
            }
        }
    }
    Ok(c.rf.eval(x))
}

/// Direct `jᵀ (xI - M)⁻¹ j` by a linear solve.
pub fn coronal_direct(m: &SymMatrix, x: f64) -> Result<f64> {
    let n = m.order();
    let shifted = m.shifted(-x).as_matrix().scale(-1.0);
    Ok(shifted.solve(&vec![1.0; n])?.iter().sum())
}
