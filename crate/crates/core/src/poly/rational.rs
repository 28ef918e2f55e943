use super::roots::roots_with_multiplicity;
use super::Polynomial;
use crate::error::{Error, Result};

/// Relative threshold for a derivative of the numerator to count as zero
/// at a root of the denominator.
const REDUCE_TOL: f64 = 1e-9;

/// Quotient `num / den` of real polynomials with a monic denominator.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZeroFunction);
        }
        let lead = den.leading();
        Ok(RationalFunction {
            num: num.scale(1.0 / lead),
            den: den.monic(),
        })
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        RationalFunction {
            num: p,
            den: Polynomial::one(),
        }
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn add(&self, other: &RationalFunction) -> RationalFunction {
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        RationalFunction {
            num,
            den: self.den.mul(&other.den),
        }
    }

    pub fn mul(&self, other: &RationalFunction) -> RationalFunction {
        RationalFunction {
            num: self.num.mul(&other.num),
            den: self.den.mul(&other.den),
        }
    }

    pub fn reciprocal(&self) -> Result<RationalFunction> {
        RationalFunction::new(self.den.clone(), self.num.clone())
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.num.eval(x) / self.den.eval(x)
    }

    /// Cancels common linear factors of numerator and denominator.
    pub fn reduce(&self) -> RationalFunction {
        self.reduce_with_cancelled().0
    }

    /// Like [`reduce`](Self::reduce), also returning each cancelled root with
    /// the number of times it was cancelled.
    pub fn reduce_with_cancelled(&self) -> (RationalFunction, Vec<(f64, usize)>) {
        if self.num.is_zero() {
            return (RationalFunction::from_polynomial(Polynomial::zero()), Vec::new());
        }
        let (candidates, other) = match roots_with_multiplicity(&self.den) {
            Ok(r) => (r, &self.num),
            Err(_) => match roots_with_multiplicity(&self.num) {
                Ok(r) => (r, &self.den),
                Err(_) => return self.reduce_by_gcd(),
            },
        };
        let mut num = self.num.clone();
        let mut den = self.den.clone();
        let mut cancelled = Vec::new();
        for (r, m) in candidates {
            let k = vanishing_order(other, r, m);
            if k == 0 {
                continue;
            }
            let factor = Polynomial::linear_root(r).pow(k);
            num = num.div_rem(&factor).0;
            den = den.div_rem(&factor).0;
            cancelled.push((r, k));
        }
        let lead = den.leading();
        (
            RationalFunction {
                num: num.scale(1.0 / lead),
                den: den.monic(),
            },
            cancelled,
        )
    }

    /// Fallback for factors without real roots: Euclid with a relative
    /// remainder threshold.
    fn reduce_by_gcd(&self) -> (RationalFunction, Vec<(f64, usize)>) {
        let g = approximate_gcd(&self.num, &self.den);
        if g.degree() == 0 {
            return (self.clone(), Vec::new());
        }
        let num = self.num.div_rem(&g).0;
        let den = self.den.div_rem(&g).0;
        let cancelled = roots_with_multiplicity(&g).unwrap_or_default();
        let lead = den.leading();
        (
            RationalFunction {
                num: num.scale(1.0 / lead),
                den: den.monic(),
            },
            cancelled,
        )
    }
}

fn approximate_gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
    let scale = a.max_abs_coeff().max(b.max_abs_coeff());
    let (mut a, mut b) = if a.degree() >= b.degree() {
        (a.monic(), b.monic())
    } else {
        (b.monic(), a.monic())
    };
    while !b.is_zero() {
        let r = a.div_rem(&b).1;
        if r.max_abs_coeff() <= REDUCE_TOL * scale {
            return b;
        }
        a = b;
        b = r.monic();
    }
    a
}

/// Number of leading derivatives of `p` (at most `cap`) vanishing at `r`.
fn vanishing_order(p: &Polynomial, r: f64, cap: usize) -> usize {
    let mut q = p.clone();
    let mut k = 0;
    while k < cap && !q.is_zero() && q.eval(r).abs() <= REDUCE_TOL * q.eval_abs(r.abs().max(1.0)) {
        q = q.derivative();
        k += 1;
    }
    k
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(num: &[f64], den: &[f64]) -> RationalFunction {
        RationalFunction::new(Polynomial::new(num.to_vec()), Polynomial::new(den.to_vec())).unwrap()
    }

    #[test]
    fn reduce_cancels_common_root() {
        let r = rf(&[2.0, 2.0], &[-1.0, 0.0, 1.0]);
        let (red, cancelled) = r.reduce_with_cancelled();
        assert!(red.num().relative_distance(&Polynomial::constant(2.0)) < 1e-14);
        assert!(red.den().relative_distance(&Polynomial::linear_root(1.0)) < 1e-14);
        assert_eq!(cancelled.len(), 1);
        assert!((cancelled[0].0 + 1.0).abs() < 1e-14);
    }

    #[test]
    fn arithmetic() {
        let inv_x = rf(&[1.0], &[0.0, 1.0]);
        let s = inv_x.add(&inv_x).reduce();
        assert!((s.eval(4.0) - 0.5).abs() < 1e-15);
        assert_eq!(s.den().degree(), 1);
        let p = rf(&[1.0, 2.0], &[3.0, 0.0, 1.0]);
        let q = p.reciprocal().unwrap();
        let one = p.mul(&q).reduce();
        assert_eq!(one.num().degree(), 0);
        assert_eq!(one.den().degree(), 0);
        assert!((one.eval(0.3) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn zero_denominator_rejected() {
        let r = RationalFunction::new(Polynomial::one(), Polynomial::zero());
        assert_eq!(r, Err(Error::DivisionByZeroFunction));
        let z = RationalFunction::from_polynomial(Polynomial::zero());
        assert_eq!(z.reciprocal(), Err(Error::DivisionByZeroFunction));
    }

    #[test]
    fn cancels_root_at_zero() {
        // x (x + 1)(5x^2 + 5x - 4) / (x^2 (x + 1)(x^2 - x - 4))
        let num = Polynomial::new(vec![0.0, -4.0, 1.0, 10.0, 5.0]);
        let den = Polynomial::new(vec![0.0, 0.0, -4.0, -5.0, 0.0, 1.0]);
        let (red, cancelled) = RationalFunction::new(num, den).unwrap().reduce_with_cancelled();
        assert_eq!(red.den().degree(), 3);
        assert_eq!(cancelled.len(), 2);
        assert!(red.num().coeff(0).abs() > 1.0);
    }

    #[test]
    fn repeated_cancellation() {
        // (x-1)^2 (x+3) / ((x-1)^3 (x-2))
        let num = Polynomial::from_roots(&[1.0, 1.0, -3.0]);
        let den = Polynomial::from_roots(&[1.0, 1.0, 1.0, 2.0]);
        let (red, cancelled) = RationalFunction::new(num, den).unwrap().reduce_with_cancelled();
        assert_eq!(red.den().degree(), 2);
        assert_eq!(red.num().degree(), 1);
        assert_eq!(cancelled, vec![(cancelled[0].0, 2)]);
        assert!((red.eval(5.0) - 8.0 / 12.0).abs() < 1e-10);
    }
}
