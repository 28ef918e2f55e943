//! Dense real matrices, the A_alpha family of graph matrices, and the
//! eigensolvers used as ground truth.

mod charpoly;
mod eigen;
mod spectrum;

use std::fmt;
use std::ops::{Index, IndexMut};

pub use charpoly::{char_poly, faddeev_leverrier, MAX_CHARPOLY_ORDER};
pub use eigen::{sym_eigen, sym_eigen_default, sym_eigenvalues_tridiagonal, DEFAULT_EIGEN_TOL};
pub use spectrum::{spectra_equal, Spectrum, DEFAULT_MERGE_TOL};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Row-major dense matrix.
#[derive(Clone, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        Ok(())
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = f64;
    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        &mut self.data[i * self.cols + j]
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1.0;
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> f64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Matrix {
            rows: rows.len(),
            cols,
            data: rows.concat(),
        }
    }

    /// Column vector of ones.
    pub fn ones_column(n: usize) -> Self {
        Matrix {
            rows: n,
            cols: 1,
            data: vec![1.0; n],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            let out_row = &mut out.data[i * other.cols..(i + 1) * other.cols];
            for (k, &a) in self.row(i).iter().enumerate() {
                if a == 0.0 {
                    continue;
                }
                for (o, &b) in out_row.iter_mut().zip(other.row(k)) {
                    *o += a * b;
                }
            }
        }
        Ok(out)
    }

    fn zip_with(&self, other: &Matrix, f: impl Fn(f64, f64) -> f64) -> Result<Matrix> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(&a, &b)| f(a, b)).collect(),
        })
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn scale(&self, c: f64) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| c * a).collect(),
        }
    }

    pub fn trace(&self) -> f64 {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).sum()
    }

    pub fn sum(&self) -> f64 {
        self.data.iter().sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|a| a * a).sum::<f64>().sqrt()
    }

    /// Largest absolute entrywise difference.
    pub fn max_abs_diff(&self, other: &Matrix) -> f64 {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    /// Kronecker product: block (i, j) equals `self[(i, j)] * other`.
    pub fn kronecker(&self, other: &Matrix) -> Matrix {
        let (p, q) = (other.rows, other.cols);
        Matrix::from_fn(self.rows * p, self.cols * q, |r, c| {
            self[(r / p, c / q)] * other[(r % p, c % q)]
        })
    }

    /// Copies `block` into `self` with its top-left corner at `(r0, c0)`.
    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Matrix) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                self[(r0 + i, c0 + j)] = block[(i, j)];
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix {
        Matrix::from_fn(rows, cols, |i, j| self[(r0 + i, c0 + j)])
    }

    fn lu(&self) -> Result<(Matrix, Vec<usize>, f64)> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("LU needs a square matrix".into()));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut sign = 1.0;
        for k in 0..n {
            let p = (k..n)
                .max_by(|&x, &y| a[(x, k)].abs().total_cmp(&a[(y, k)].abs()))
                .expect("nonempty pivot range");
            if a[(p, k)] == 0.0 {
                return Ok((a, perm, 0.0));
            }
            if p != k {
                for j in 0..n {
                    a.data.swap(k * n + j, p * n + j);
                }
                perm.swap(k, p);
                sign = -sign;
            }
            let pivot = a[(k, k)];
            for i in k + 1..n {
                let f = a[(i, k)] / pivot;
                a[(i, k)] = f;
                if f != 0.0 {
                    for j in k + 1..n {
                        a[(i, j)] -= f * a[(k, j)];
                    }
                }
            }
        }
        Ok((a, perm, sign))
    }

    /// Determinant by partial-pivot LU.
    pub fn determinant(&self) -> Result<f64> {
        let (lu, _, sign) = self.lu()?;
        if sign == 0.0 {
            return Ok(0.0);
        }
        Ok((0..self.rows).map(|i| lu[(i, i)]).product::<f64>() * sign)
    }

    /// Solves `self * x = b` for a square nonsingular `self`.
    pub fn solve(&self, b: &[f64]) -> Result<Vec<f64>> {
        let n = self.rows;
        if b.len() != n {
            return Err(Error::DimensionMismatch("right-hand side length".into()));
        }
        let (lu, perm, sign) = self.lu()?;
        if sign == 0.0 {
            return Err(Error::Singular);
        }
        let mut y: Vec<f64> = perm.iter().map(|&p| b[p]).collect();
        for i in 0..n {
            for k in 0..i {
                y[i] -= lu[(i, k)] * y[k];
            }
        }
        for i in (0..n).rev() {
            for k in i + 1..n {
                y[i] -= lu[(i, k)] * y[k];
            }
            y[i] /= lu[(i, i)];
        }
        Ok(y)
    }
}

/// Square matrix that is exactly symmetric. Every constructor writes both
/// triangles from a single value.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix(Matrix);

impl SymMatrix {
    pub fn zeros(n: usize) -> Self {
        SymMatrix(Matrix::zeros(n, n))
    }

    /// Builds from the lower triangle `f(i, j)` with `j <= i`.
    pub fn from_lower(n: usize, f: impl Fn(usize, usize) -> f64) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..=i {
                let v = f(i, j);
                m[(i, j)] = v;
                m[(j, i)] = v;
            }
        }
        SymMatrix(m)
    }

    pub fn from_diagonal(d: &[f64]) -> Self {
        let mut m = Matrix::zeros(d.len(), d.len());
        for (i, &x) in d.iter().enumerate() {
            m[(i, i)] = x;
        }
        SymMatrix(m)
    }

    pub fn order(&self) -> usize {
        self.0.rows
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.0[(i, j)]
    }

    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.0[(i, j)] = v;
        self.0[(j, i)] = v;
    }

    pub fn as_matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn into_matrix(self) -> Matrix {
        self.0
    }

    pub fn trace(&self) -> f64 {
        self.0.trace()
    }

    /// `c1 * self + c2 * other`; stays symmetric.
    pub fn combine(&self, c1: f64, other: &SymMatrix, c2: f64) -> Result<SymMatrix> {
        Ok(SymMatrix(self.0.scale(c1).add(&other.0.scale(c2))?))
    }

    pub fn shifted(&self, c: f64) -> SymMatrix {
        let mut m = self.clone();
        for i in 0..m.order() {
            m.0[(i, i)] += c;
        }
        m
    }
}

impl TryFrom<Matrix> for SymMatrix {
    type Error = Error;
    fn try_from(m: Matrix) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::DimensionMismatch("symmetric matrix must be square".into()));
        }
        for i in 0..m.rows {
            for j in 0..i {
                if m[(i, j)] != m[(j, i)] {
                    return Err(Error::NotSymmetric(i, j));
                }
            }
        }
        Ok(SymMatrix(m))
    }
}

/// Convex weight of the degree matrix; `beta = 1 - alpha` is derived.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct AlphaParam(f64);

impl AlphaParam {
    pub fn new(alpha: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&alpha) {
            return Err(Error::InvalidAlpha(alpha));
        }
        Ok(AlphaParam(alpha))
    }

    pub fn alpha(self) -> f64 {
        self.0
    }

    pub fn beta(self) -> f64 {
        1.0 - self.0
    }
}

impl fmt::Display for AlphaParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub fn adjacency_matrix(g: &Graph) -> SymMatrix {
    let mut a = SymMatrix::zeros(g.n());
    for &(u, v) in g.edges() {
        a.set(u, v, 1.0);
    }
    a
}

pub fn degree_matrix(g: &Graph) -> SymMatrix {
    let d: Vec<f64> = g.degree_sequence().0.iter().map(|&x| x as f64).collect();
    SymMatrix::from_diagonal(&d)
}

/// Q = D + A.
pub fn signless_laplacian(g: &Graph) -> SymMatrix {
    let mut q = degree_matrix(g);
    for &(u, v) in g.edges() {
        q.set(u, v, 1.0);
    }
    q
}

/// L = D - A.
pub fn laplacian(g: &Graph) -> SymMatrix {
    let mut l = degree_matrix(g);
    for &(u, v) in g.edges() {
        l.set(u, v, -1.0);
    }
    l
}

/// A_alpha(G) = alpha * D + (1 - alpha) * A.
pub fn alpha_matrix(g: &Graph, a: AlphaParam) -> SymMatrix {
    let mut m = SymMatrix::zeros(g.n());
    for (u, &d) in g.degree_sequence().0.iter().enumerate() {
        m.set(u, u, a.alpha() * d as f64);
    }
    for &(u, v) in g.edges() {
        m.set(u, v, a.beta());
    }
    m
}

/// Largest absolute row sum; bounds every eigenvalue in magnitude.
pub fn gershgorin_radius(m: &SymMatrix) -> f64 {
    (0..m.order())
        .map(|i| m.as_matrix().row(i).iter().map(|x| x.abs()).sum::<f64>())
        .fold(0.0, f64::max)
}
