use super::{Matrix, SymMatrix};
use crate::error::{Error, Result};
use crate::poly::Polynomial;

pub const MAX_CHARPOLY_ORDER: usize = 512;

/// Faddeev–LeVerrier recurrence for `det(xI - A)`.
///
/// Also returns the matrices `M_1..M_n` with
/// `adj(xI - A) = sum_k M_k x^(n-k)`, which the coronal numerator reuses.
pub fn faddeev_leverrier(a: &Matrix) -> Result<(Polynomial, Vec<Matrix>)> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch("characteristic polynomial needs a square matrix".into()));
    }
    let n = a.rows();
    if n > MAX_CHARPOLY_ORDER {
        return Err(Error::OrderTooLarge(n));
    }
    let mut c = vec![0.0; n + 1];
    c[n] = 1.0;
    let mut ms = Vec::with_capacity(n);
    let mut m = Matrix::identity(n);
    for k in 1..=n {
        if k > 1 {
            m = a.mul(&m)?;
            for i in 0..n {
                m[(i, i)] += c[n - k + 1];
            }
        }
        let am = a.mul(&m)?;
        c[n - k] = -am.trace() / k as f64;
        ms.push(m.clone());
    }
    Ok((Polynomial::new(c), ms))
}

/// Monic characteristic polynomial `det(xI - M)`.
pub fn char_poly(m: &SymMatrix) -> Result<Polynomial> {
    faddeev_leverrier(m.as_matrix()).map(|(p, _)| p)
}
