//! Univariate real polynomials, rational functions and real-root extraction.

mod rational;
mod roots;

use std::fmt;

pub use rational::RationalFunction;
pub use roots::real_roots;

/// Coefficients below this fraction of the operands' magnitude are treated
/// as exact cancellation in additive operations.
pub const CANCEL_TOL: f64 = 1e-12;

/// Real polynomial with coefficients in ascending degree. The zero
/// polynomial has no coefficients; otherwise the leading coefficient is
/// nonzero.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Polynomial {
    coeffs: Vec<f64>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<f64>) -> Self {
        while coeffs.last() == Some(&0.0) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(1.0)
    }

    pub fn constant(c: f64) -> Self {
        Polynomial::new(vec![c])
    }

    /// The identity polynomial `x`.
    pub fn x() -> Self {
        Polynomial::new(vec![0.0, 1.0])
    }

    /// `x - r`.
    pub fn linear_root(r: f64) -> Self {
        Polynomial::new(vec![-r, 1.0])
    }

    /// Monic polynomial with the given roots.
    pub fn from_roots(roots: &[f64]) -> Self {
        roots
            .iter()
            .fold(Polynomial::one(), |acc, &r| acc.mul(&Polynomial::linear_root(r)))
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// Degree, with the zero polynomial reported as degree 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> f64 {
        self.coeffs.last().copied().unwrap_or(0.0)
    }

    pub fn coeff(&self, k: usize) -> f64 {
        self.coeffs.get(k).copied().unwrap_or(0.0)
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    /// `sum |c_k| |x|^k`, the natural scale for judging `|p(x)|`.
    pub fn eval_abs(&self, x: f64) -> f64 {
        let ax = x.abs();
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * ax + c.abs())
    }

    pub fn max_abs_coeff(&self) -> f64 {
        self.coeffs.iter().fold(0.0, |m, c| m.max(c.abs()))
    }

    fn combine(&self, other: &Polynomial, sign: f64) -> Polynomial {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|k| {
                let (a, b) = (self.coeff(k), sign * other.coeff(k));
                let s = a + b;
                if s.abs() <= CANCEL_TOL * a.abs().max(b.abs()) {
                    0.0
                } else {
                    s
                }
            })
            .collect();
        Polynomial::new(coeffs)
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.combine(other, 1.0)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.combine(other, -1.0)
    }

    pub fn scale(&self, c: f64) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|&a| a * c).collect())
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![0.0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }

    pub fn pow(&self, e: usize) -> Polynomial {
        (0..e).fold(Polynomial::one(), |acc, _| acc.mul(self))
    }

    /// `p(x - c)`.
    pub fn shift(&self, c: f64) -> Polynomial {
        // Horner in the polynomial ring: p(x - c) = (...(a_n (x-c) + a_{n-1})(x-c) ...)
        let step = Polynomial::linear_root(c);
        let mut acc = Polynomial::zero();
        for &a in self.coeffs.iter().rev() {
            let mut next = acc.mul(&step).coeffs;
            if next.is_empty() {
                next.push(0.0);
            }
            next[0] += a;
            acc = Polynomial::new(next);
        }
        acc
    }

    pub fn derivative(&self) -> Polynomial {
        Polynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, &c)| k as f64 * c)
                .collect(),
        )
    }

    /// Scales so the leading coefficient is one. The zero polynomial is
    /// returned unchanged.
    pub fn monic(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(1.0 / self.leading())
    }

    /// Long division: `self = q * d + r` with `deg r < deg d`.
    ///
    /// Panics when `d` is the zero polynomial.
    pub fn div_rem(&self, d: &Polynomial) -> (Polynomial, Polynomial) {
        assert!(!d.is_zero(), "polynomial division by zero");
        if self.coeffs.len() < d.coeffs.len() {
            return (Polynomial::zero(), self.clone());
        }
        let mut r = self.coeffs.clone();
        let dn = d.coeffs.len() - 1;
        let lead = d.leading();
        let mut q = vec![0.0; r.len() - dn];
        for k in (0..q.len()).rev() {
            let f = r[k + dn] / lead;
            q[k] = f;
            for (j, &dc) in d.coeffs.iter().enumerate() {
                r[k + j] -= f * dc;
            }
            r[k + dn] = 0.0;
        }
        r.truncate(dn);
        (Polynomial::new(q), Polynomial::new(r))
    }

    /// Largest coefficient difference relative to the larger coefficient
    /// magnitude of the two polynomials.
    pub fn relative_distance(&self, other: &Polynomial) -> f64 {
        let scale = self.max_abs_coeff().max(other.max_abs_coeff()).max(f64::MIN_POSITIVE);
        let len = self.coeffs.len().max(other.coeffs.len());
        (0..len)
            .map(|k| (self.coeff(k) - other.coeff(k)).abs())
            .fold(0.0, f64::max)
            / scale
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0.0 {
                continue;
            }
            let sign = if c < 0.0 { "-" } else { "+" };
            if first {
                if c < 0.0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match k {
                0 => write!(f, "{a}")?,
                1 if a == 1.0 => write!(f, "x")?,
                1 => write!(f, "{a}x")?,
                _ if a == 1.0 => write!(f, "x^{k}")?,
                _ => write!(f, "{a}x^{k}")?,
            }
        }
        Ok(())
    }
}

/// Product of polynomial factors raised to positive exponents.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct FactoredCharPoly {
    pub factors: Vec<(Polynomial, usize)>,
}

impl FactoredCharPoly {
    /// Sum of degree times exponent.
    pub fn degree(&self) -> usize {
        self.factors.iter().map(|(p, e)| p.degree() * e).sum()
    }

    /// Monic product of every factor.
    pub fn expand(&self) -> Polynomial {
        self.factors
            .iter()
            .fold(Polynomial::one(), |acc, (p, e)| acc.mul(&p.monic().pow(*e)))
    }

    /// Evaluates the product without expanding it.
    pub fn eval(&self, x: f64) -> f64 {
        self.factors
            .iter()
            .map(|(p, e)| p.monic().eval(x).powi(*e as i32))
            .product()
    }
}
