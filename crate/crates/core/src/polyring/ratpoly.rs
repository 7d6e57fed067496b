use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::intpoly::IntPoly;
use crate::error::{Error, Result};

/// Dense univariate polynomial with exact rational coefficients.
///
/// Used for intermediate values of formulas carrying `2^{-n}` factors before
/// integrality is asserted, and for polynomial division over the rationals.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        RatPoly {
            coeffs: vec![BigRational::one()],
        }
    }

    pub fn from_int(p: &IntPoly) -> Self {
        RatPoly {
            coeffs: p
                .coeffs()
                .iter()
                .map(|c| BigRational::from(c.clone()))
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Euclidean division: returns `(q, r)` with `self = q·g + r`, `deg r < deg g`.
    pub fn divrem(&self, g: &RatPoly) -> (RatPoly, RatPoly) {
        assert!(!g.is_zero(), "polynomial division by zero");
        let dg = g.coeffs.len();
        if self.coeffs.len() < dg {
            return (RatPoly::zero(), self.clone());
        }
        let lead = g.coeffs.last().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigRational::zero(); rem.len() - dg + 1];
        for i in (dg - 1..rem.len()).rev() {
            let c = &rem[i] / &lead;
            if c.is_zero() {
                continue;
            }
            let shift = i + 1 - dg;
            quot[shift] = c.clone();
            for (j, gj) in g.coeffs.iter().enumerate() {
                let delta = gj * &c;
                rem[shift + j] -= delta;
            }
        }
        (RatPoly::new(quot), RatPoly::new(rem))
    }

    /// Converts to an integer polynomial; every coefficient must be integral.
    pub fn to_intpoly(&self) -> Result<IntPoly> {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            if !c.is_integer() {
                return Err(Error::NonIntegralResult(format!(
                    "coefficient {c} is not an integer"
                )));
            }
            coeffs.push(c.to_integer());
        }
        Ok(IntPoly::new(coeffs))
    }

    /// Rescales a nonzero polynomial to a primitive integer polynomial with
    /// positive leading coefficient.
    pub fn to_primitive_int(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut denom_lcm = BigInt::one();
        for c in &self.coeffs {
            denom_lcm = num_integer::lcm(denom_lcm, c.denom().clone());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * BigRational::from(denom_lcm.clone())).to_integer())
            .collect();
        let p = IntPoly::new(ints);
        let mut content = p.content();
        if p.leading().map(Signed::is_negative).unwrap_or(false) {
            content = -content;
        }
        p.div_scalar_exact(&content)
            .expect("content divides all coefficients")
    }
}

impl std::fmt::Debug for RatPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "RatPoly({:?})", self.coeffs)
    }
}

impl Add for &RatPoly {
    type Output = RatPoly;
    fn add(self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RatPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &RatPoly {
    type Output = RatPoly;
    fn sub(self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RatPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &RatPoly {
    type Output = RatPoly;
    fn mul(self, rhs: &RatPoly) -> RatPoly {
        if self.is_zero() || rhs.is_zero() {
            return RatPoly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        RatPoly::new(coeffs)
    }
}

impl Neg for &RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        RatPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rp(coeffs: &[i64]) -> RatPoly {
        RatPoly::from_int(&IntPoly::from_i64(coeffs))
    }

    #[test]
    fn divrem_recovers_factors() {
        let f = rp(&[0, 0, 1, 0, -1]); // t^2 - t^4
        let g = rp(&[1, 0, -1]); // 1 - t^2
        let (q, r) = f.divrem(&g);
        assert!(r.is_zero());
        assert_eq!(q.to_intpoly().unwrap(), IntPoly::from_i64(&[0, 0, 1]));
    }

    #[test]
    fn divrem_with_remainder() {
        let f = rp(&[1, 1, 1]);
        let g = rp(&[1, 1]);
        let (q, r) = f.divrem(&g);
        assert_eq!(&(&q * &g) + &r, f);
        assert!(r.degree() < g.degree());
    }

    #[test]
    fn integrality_gate() {
        let half = RatPoly::new(vec![BigRational::new(BigInt::from(1), BigInt::from(2))]);
        assert!(half.to_intpoly().is_err());
        assert_eq!(half.to_primitive_int(), IntPoly::one());
    }
}
