use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::intpoly::IntPoly;
use super::ratpoly::RatPoly;
use crate::error::{Error, Result};

/// GCD of two integer polynomials: primitive, with positive leading
/// coefficient. Computed by Euclidean remainders over the rationals.
pub fn poly_gcd(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let mut r0 = RatPoly::from_int(a);
    let mut r1 = RatPoly::from_int(b);
    while !r1.is_zero() {
        let (_, r2) = r0.divrem(&r1);
        r0 = r1;
        r1 = r2;
    }
    r0.to_primitive_int()
}

/// Quotient of two integer polynomials in reduced, normalized form.
///
/// Invariants: `den(0) = 1` and `gcd(num, den)` is a unit. A zero numerator
/// is stored as `0/1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalFn {
    num: IntPoly,
    den: IntPoly,
}

impl RationalFn {
    /// Builds the reduced form of `num/den`.
    ///
    /// Fails with [`Error::ZeroConstantTerm`] when `den(0) = 0`, and with
    /// [`Error::NonUnitConstant`] when the fully reduced denominator has a
    /// constant term other than ±1 (normalizing would leave the integers).
    pub fn new(num: IntPoly, den: IntPoly) -> Result<Self> {
        if den.coeff(0).is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        if num.is_zero() {
            return Ok(RationalFn {
                num: IntPoly::zero(),
                den: IntPoly::one(),
            });
        }
        let g = poly_gcd(&num, &den);
        let (mut num, mut den) = if g.degree().unwrap_or(0) >= 1 {
            (num.div_exact(&g)?, den.div_exact(&g)?)
        } else {
            (num, den)
        };
        let shared = num_integer::gcd(num.content(), den.content());
        if !shared.is_one() {
            num = num.div_scalar_exact(&shared)?;
            den = den.div_scalar_exact(&shared)?;
        }
        let c0 = den.coeff(0);
        if c0 == BigInt::from(-1) {
            num = -&num;
            den = -&den;
        } else if !c0.is_one() {
            return Err(Error::NonUnitConstant(c0.to_string()));
        }
        Ok(RationalFn { num, den })
    }

    pub fn from_poly(p: IntPoly) -> Self {
        RationalFn {
            num: p,
            den: IntPoly::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_poly(IntPoly::zero())
    }

    pub fn num(&self) -> &IntPoly {
        &self.num
    }

    pub fn den(&self) -> &IntPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Equality as rational functions, by cross-multiplication. Independent
    /// of reduction.
    pub fn equivalent(&self, other: &RationalFn) -> bool {
        self.equivalent_pair(&other.num, &other.den)
    }

    /// Cross-multiplication test against an unreduced `num/den` pair.
    pub fn equivalent_pair(&self, num: &IntPoly, den: &IntPoly) -> bool {
        &self.num * den == num * &self.den
    }

    /// First `n_terms` Maclaurin coefficients, exactly.
    ///
    /// Uses the linear recurrence `c_k = num_k - Σ_{j≥1} den_j · c_{k-j}`,
    /// valid because the normalized denominator has constant term one.
    pub fn series(&self, n_terms: usize) -> Vec<BigInt> {
        let mut coeffs = Vec::with_capacity(n_terms);
        let den_deg = self.den.degree().unwrap_or(0);
        for k in 0..n_terms {
            let mut c = self.num.coeff(k);
            for j in 1..=den_deg.min(k) {
                c -= self.den.coeff(j) * &coeffs[k - j];
            }
            coeffs.push(c);
        }
        coeffs
    }
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}
