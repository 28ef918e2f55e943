//! Real roots of polynomials that are known to be real-rooted.
//!
//! Degrees one and two use closed forms and degree three uses the
//! trigonometric form. Higher degrees recurse on the derivative: by Rolle's
//! theorem each interval between consecutive critical points holds at most
//! one simple root, found by bisection, and a critical point where `p`
//! itself vanishes is a multiple root. Multiplicities therefore come out
//! exactly instead of as a cloud of perturbed simple roots.

use super::Polynomial;
use crate::error::{Error, Result};
use crate::linalg::{Spectrum, DEFAULT_MERGE_TOL};

/// `|p(c)| <= ROOT_TOL * sum |a_k| max(|c|, 1)^k` counts `c` as a root.
const ROOT_TOL: f64 = 1e-12;
/// Relative imaginary part above which a quadratic pair is reported complex.
const IMAG_TOL: f64 = 1e-7;

/// All roots of `p` with multiplicity, merged at the spectrum tolerance.
///
/// Fails with [`Error::ComplexRootsDetected`] when some roots are not real.
/// Constant and zero polynomials have no roots.
pub fn real_roots(p: &Polynomial) -> Result<Spectrum> {
    let roots = roots_with_multiplicity(p)?;
    Ok(Spectrum::from_weighted(roots, DEFAULT_MERGE_TOL))
}

pub(crate) fn roots_with_multiplicity(p: &Polynomial) -> Result<Vec<(f64, usize)>> {
    if p.degree() == 0 {
        return Ok(Vec::new());
    }
    let p = p.monic();
    let mut roots = match p.degree() {
        1 => vec![(-p.coeff(0), 1)],
        2 => quadratic(&p)?,
        3 => cubic(&p)?,
        _ => by_critical_points(&p)?,
    };
    roots.sort_by(|a, b| a.0.total_cmp(&b.0));
    Ok(roots)
}

fn is_root(p: &Polynomial, x: f64) -> bool {
    p.eval(x).abs() <= ROOT_TOL * p.eval_abs(x.abs().max(1.0))
}

fn complex(p: &Polynomial, found: usize) -> Error {
    Error::ComplexRootsDetected {
        degree: p.degree(),
        missing: p.degree() - found,
    }
}

fn quadratic(p: &Polynomial) -> Result<Vec<(f64, usize)>> {
    let (c, b) = (p.coeff(0), p.coeff(1));
    let vertex = -b / 2.0;
    if is_root(p, vertex) {
        return Ok(vec![(vertex, 2)]);
    }
    let disc = b * b - 4.0 * c;
    if disc < 0.0 {
        let imag = (-disc).sqrt() / 2.0;
        if imag > IMAG_TOL * vertex.abs().max(1.0) {
            return Err(complex(p, 0));
        }
        return Ok(vec![(vertex, 2)]);
    }
    let q = -0.5 * (b + b.signum() * disc.sqrt());
    if q == 0.0 {
        return Ok(vec![(0.0, 2)]);
    }
    let (r1, r2) = (q, c / q);
    Ok(vec![(r1.min(r2), 1), (r1.max(r2), 1)])
}

fn cubic(p: &Polynomial) -> Result<Vec<(f64, usize)>> {
    let (c, b, a) = (p.coeff(0), p.coeff(1), p.coeff(2));
    let dp = p.derivative();
    let crit = quadratic(&dp.monic()).unwrap_or_default();
    match crit.as_slice() {
        [(x0, 2)] if is_root(p, *x0) => return Ok(vec![(*x0, 3)]),
        [(c1, 1), (c2, 1)] => {
            for x0 in [*c1, *c2] {
                if is_root(p, x0) {
                    // Vieta: r + 2 x0 = -a
                    let r = -a - 2.0 * x0;
                    return Ok(vec![(x0, 2), (polish(p, r), 1)]);
                }
            }
            let (v1, v2) = (p.eval(*c1), p.eval(*c2));
            if v1.signum() == v2.signum() {
                return Err(complex(p, 1));
            }
        }
        _ => return Err(complex(p, 1)),
    }
    // Three distinct real roots: x = t - a/3 with t^3 + pt + q = 0, p < 0.
    let shift = a / 3.0;
    let pp = b - a * a / 3.0;
    let qq = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;
    if pp >= 0.0 {
        return Err(complex(p, 1));
    }
    let m = 2.0 * (-pp / 3.0).sqrt();
    let arg = (3.0 * qq / (pp * m)).clamp(-1.0, 1.0);
    let theta = arg.acos() / 3.0;
    let roots = (0..3)
        .map(|k| {
            let t = m * (theta - 2.0 * std::f64::consts::PI * k as f64 / 3.0).cos();
            (polish(p, t - shift), 1)
        })
        .collect();
    Ok(roots)
}

/// Newton steps on a simple root, kept only while they reduce `|p|`.
fn polish(p: &Polynomial, mut x: f64) -> f64 {
    let dp = p.derivative();
    for _ in 0..4 {
        let (v, d) = (p.eval(x), dp.eval(x));
        if v == 0.0 || d == 0.0 {
            break;
        }
        let next = x - v / d;
        if p.eval(next).abs() >= v.abs() {
            break;
        }
        x = next;
    }
    x
}

fn cauchy_bound(p: &Polynomial) -> f64 {
    let lead = p.leading().abs();
    1.0 + p.coeffs()[..p.degree()]
        .iter()
        .fold(0.0f64, |m, c| m.max(c.abs() / lead))
}

fn bisect(p: &Polynomial, mut lo: f64, mut hi: f64) -> f64 {
    let mut flo = p.eval(lo);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let fm = p.eval(mid);
        if fm == 0.0 {
            return mid;
        }
        if fm.signum() == flo.signum() {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

fn by_critical_points(p: &Polynomial) -> Result<Vec<(f64, usize)>> {
    let crit = roots_with_multiplicity(&p.derivative()).map_err(|_| complex(p, 0))?;
    let bound = cauchy_bound(p);
    let mut roots: Vec<(f64, usize)> = Vec::new();
    let mut marks: Vec<(f64, bool)> = vec![(-bound, false)];
    for &(c, m) in &crit {
        let hit = is_root(p, c);
        if hit {
            roots.push((c, m + 1));
        }
        marks.push((c, hit));
    }
    marks.push((bound, false));
    for w in marks.windows(2) {
        let ((lo, lo_root), (hi, hi_root)) = (w[0], w[1]);
        if lo_root || hi_root || lo >= hi {
            continue;
        }
        let (flo, fhi) = (p.eval(lo), p.eval(hi));
        if flo.signum() != fhi.signum() {
            roots.push((bisect(p, lo, hi), 1));
        }
    }
    let found: usize = roots.iter().map(|r| r.1).sum();
    if found != p.degree() {
        return Err(complex(p, found.min(p.degree())));
    }
    Ok(roots)
}
