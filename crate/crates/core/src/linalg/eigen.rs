use super::{Spectrum, SymMatrix, DEFAULT_MERGE_TOL};
use crate::error::{Error, Result};

pub const DEFAULT_EIGEN_TOL: f64 = 1e-15;
const MAX_SWEEPS: usize = 100;

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations.
///
/// Sweeps stop once the largest off-diagonal magnitude falls below
/// `tol * ||M||_F`. The result is merged at [`DEFAULT_MERGE_TOL`].
pub fn sym_eigen(m: &SymMatrix, tol: f64) -> Result<Spectrum> {
    let n = m.order();
    let mut a = m.as_matrix().as_slice().to_vec();
    let threshold = tol * m.as_matrix().frobenius_norm();
    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        let mut off = 0.0f64;
        for i in 0..n {
            for j in i + 1..n {
                off = off.max(a[i * n + j].abs());
            }
        }
        if off <= threshold {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq.abs() <= threshold * 1e-3 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                let tau = s / (1.0 + c);
                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for r in 0..n {
                    if r == p || r == q {
                        continue;
                    }
                    let arp = a[r * n + p];
                    let arq = a[r * n + q];
                    let new_rp = arp - s * (arq + tau * arp);
                    let new_rq = arq + s * (arp - tau * arq);
                    a[r * n + p] = new_rp;
                    a[p * n + r] = new_rp;
                    a[r * n + q] = new_rq;
                    a[q * n + r] = new_rq;
                }
            }
        }
    }
    if !converged {
        return Err(Error::NoConvergence(MAX_SWEEPS));
    }
    let values: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    Ok(Spectrum::from_values(values, DEFAULT_MERGE_TOL))
}

pub fn sym_eigen_default(m: &SymMatrix) -> Result<Spectrum> {
    sym_eigen(m, DEFAULT_EIGEN_TOL)
}

/// Eigenvalues (ascending, unmerged) via Householder tridiagonalization and
/// implicit QL. Much cheaper than Jacobi for large orders; used for dense
/// sampling over alpha.
pub fn sym_eigenvalues_tridiagonal(m: &SymMatrix) -> Result<Vec<f64>> {
    let n = m.order();
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut a = m.as_matrix().as_slice().to_vec();
    let mut d = vec![0.0; n];
    let mut e = vec![0.0; n];
    // Householder reduction, eigenvalues only.
    for i in (1..n).rev() {
        let l = i - 1;
        let mut h = 0.0;
        if l > 0 {
            let scale: f64 = (0..=l).map(|k| a[i * n + k].abs()).sum();
            if scale == 0.0 {
                e[i] = a[i * n + l];
            } else {
                for k in 0..=l {
                    a[i * n + k] /= scale;
                    h += a[i * n + k] * a[i * n + k];
                }
                let f = a[i * n + l];
                let g = if f >= 0.0 { -h.sqrt() } else { h.sqrt() };
                e[i] = scale * g;
                h -= f * g;
                a[i * n + l] = f - g;
                let mut f = 0.0;
                for j in 0..=l {
                    let mut g = 0.0;
                    for k in 0..=j {
                        g += a[j * n + k] * a[i * n + k];
                    }
                    for k in j + 1..=l {
                        g += a[k * n + j] * a[i * n + k];
                    }
                    e[j] = g / h;
                    f += e[j] * a[i * n + j];
                }
                let hh = f / (h + h);
                for j in 0..=l {
                    let f = a[i * n + j];
                    let g = e[j] - hh * f;
                    e[j] = g;
                    for k in 0..=j {
                        a[j * n + k] -= f * e[k] + g * a[i * n + k];
                    }
                }
            }
        } else {
            e[i] = a[i * n + l];
        }
        d[i] = h;
    }
    for i in 0..n {
        d[i] = a[i * n + i];
    }
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = 0.0;
    // Implicit QL with Wilkinson shifts.
    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut mm = l;
            while mm + 1 < n {
                let dd = d[mm].abs() + d[mm + 1].abs();
                if e[mm].abs() <= f64::EPSILON * dd {
                    break;
                }
                mm += 1;
            }
            if mm == l {
                break;
            }
            iter += 1;
            if iter > 60 {
                return Err(Error::NoConvergence(iter));
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[mm] - d[l] + e[l] / (g + if g >= 0.0 { r.abs() } else { -r.abs() });
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut i = mm;
            let mut underflow = false;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[mm] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if underflow {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[mm] = 0.0;
        }
    }
    d.sort_by(f64::total_cmp);
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named_graph;
    use crate::linalg::{adjacency_matrix, alpha_matrix, spectra_equal, AlphaParam};

    #[test]
    fn diagonal_input() {
        let m = SymMatrix::from_diagonal(&[3.0, 1.0, 2.0]);
        let s = sym_eigen_default(&m).unwrap();
        assert_eq!(s.pairs(), &[(1.0, 1), (2.0, 1), (3.0, 1)]);
    }

    #[test]
    fn four_cycle_against_cosine_formula() {
        let a = adjacency_matrix(&named_graph("cycle", &[4]).unwrap());
        let s = sym_eigen_default(&a).unwrap();
        let oracle: Vec<f64> = (0..4)
            .map(|k| 2.0 * (2.0 * std::f64::consts::PI * k as f64 / 4.0).cos())
            .collect();
        assert!(spectra_equal(&s, &Spectrum::from_values(oracle, DEFAULT_MERGE_TOL), 1e-12));
        assert_eq!(s.pairs().len(), 3);
        assert_eq!(s.pairs()[1].1, 2);
    }

    #[test]
    fn complete_bipartite_alpha_spectrum() {
        let (a, b, alpha) = (1.0, 2.0, 0.25);
        let n = a + b;
        let g = named_graph("complete_bipartite", &[1, 2]).unwrap();
        let s = sym_eigen_default(&alpha_matrix(&g, AlphaParam::new(alpha).unwrap())).unwrap();
        let rad = (alpha * alpha * n * n + 4.0 * a * b * (1.0 - 2.0 * alpha)).sqrt();
        // alpha*b has multiplicity a - 1 = 0 here
        let want = vec![(alpha * n + rad) / 2.0, (alpha * n - rad) / 2.0, alpha * a];
        assert!(spectra_equal(&s, &Spectrum::from_values(want, DEFAULT_MERGE_TOL), 1e-12));
    }

    #[test]
    fn tridiagonal_matches_jacobi() {
        for name in ["petersen", "shrikhande", "rook44"] {
            let g = named_graph(name, &[]).unwrap();
            let m = alpha_matrix(&g, AlphaParam::new(0.3).unwrap());
            let jac = sym_eigen_default(&m).unwrap();
            let tri = Spectrum::from_values(sym_eigenvalues_tridiagonal(&m).unwrap(), DEFAULT_MERGE_TOL);
            assert!(spectra_equal(&jac, &tri, 1e-11), "{name}");
        }
        let p = named_graph("path", &[7]).unwrap();
        let m = adjacency_matrix(&p);
        let tri = sym_eigenvalues_tridiagonal(&m).unwrap();
        for (k, v) in tri.iter().rev().enumerate() {
            let want = 2.0 * (std::f64::consts::PI * (k + 1) as f64 / 8.0).cos();
            assert!((v - want).abs() < 1e-12);
        }
    }

    #[test]
    fn zero_and_trivial_orders() {
        let s = sym_eigen_default(&SymMatrix::zeros(3)).unwrap();
        assert_eq!(s.pairs(), &[(0.0, 3)]);
        assert!(sym_eigen_default(&SymMatrix::zeros(0)).unwrap().is_empty());
        assert_eq!(sym_eigenvalues_tridiagonal(&SymMatrix::from_diagonal(&[2.0])).unwrap(), vec![2.0]);
    }
}
