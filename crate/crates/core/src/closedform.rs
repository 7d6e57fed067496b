//! Closed forms for the invariant series, assembled from the Chebyshev
//! families and the catalog metadata, and checked against the general
//! determinant engine: the cyclic and binary dihedral theorems, the
//! exceptional-group constants, the exponent product form, and the
//! Lucas-number formulas for the even invariant multiplicities.

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::chebyshev::{dynkin_a, dynkin_d};
use crate::error::{Error, Result};
use crate::groups::{descriptor, GroupKind};
use crate::polyring::{IntPoly, RatPoly};
use crate::repgraph::{delete_affine, mckay_graph};

/// Which theorem produced a closed-form series.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    CyclicTheorem,
    DihedralTheorem,
    ExceptionalTable,
}

/// A closed-form invariant series as a numerator/denominator pair.
#[derive(Debug, Clone)]
pub struct ClosedFormSeries {
    pub kind: GroupKind,
    pub numerator: IntPoly,
    pub denominator: IntPoly,
    pub provenance: Provenance,
}

/// Denominator of the cyclic invariant series:
/// `2^{1-n} Σ_r C(n,2r)(1-4t²)^r - 2tⁿ`, computed in exact rationals with
/// integrality asserted. Equals the characteristic-style determinant of the
/// n-cycle.
pub fn cyclic_denominator(n: u32) -> Result<IntPoly> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "cyclic parameter must be at least 2, got {n}"
        )));
    }
    let base = RatPoly::from_int(&IntPoly::from_i64(&[1, 0, -4]));
    let mut acc = RatPoly::zero();
    let mut pow = RatPoly::one();
    for r in 0..=(n / 2) as usize {
        let c = BigRational::from(binomial(BigInt::from(n), BigInt::from(2 * r as u32)));
        acc = &acc + &pow.scale(&c);
        pow = &pow * &base;
    }
    let scale = BigRational::new(BigInt::one(), BigInt::from(2).pow(n - 1));
    let sum = acc.scale(&scale).to_intpoly()?;
    Ok(&sum - &IntPoly::monomial(BigInt::from(2), n as usize))
}

/// Cyclic invariant series: numerator `a_{n-1}`, denominator
/// [`cyclic_denominator`].
pub fn cyclic_closed(n: u32) -> Result<ClosedFormSeries> {
    let denominator = cyclic_denominator(n)?;
    Ok(ClosedFormSeries {
        kind: GroupKind::Cyclic(n),
        numerator: dynkin_a(n as usize - 1),
        denominator,
        provenance: Provenance::CyclicTheorem,
    })
}

/// Binary dihedral invariant series: numerator `d_n`, denominator
/// `(1-4t²)·a_{n-1}`.
pub fn dihedral_closed(n: u32) -> Result<ClosedFormSeries> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "dihedral parameter must be at least 2, got {n}"
        )));
    }
    Ok(ClosedFormSeries {
        kind: GroupKind::BinaryDihedral(n),
        numerator: dynkin_d(n as usize)?,
        denominator: &IntPoly::from_i64(&[1, 0, -4]) * &dynkin_a(n as usize - 1),
        provenance: Provenance::DihedralTheorem,
    })
}

/// Invariant-series pairs for the three exceptional groups, stored as
/// constants. They double as golden values: the verification suite
/// recomputes both polynomials from the graph and a mismatch fails the
/// build.
pub fn exceptional_closed(kind: GroupKind) -> Result<ClosedFormSeries> {
    let (num, den): (&[i64], &[i64]) = match kind {
        GroupKind::BinaryTetrahedral => (&[1, 0, -5, 0, 5, 0, -1], &[1, 0, -6, 0, 9, 0, -4]),
        GroupKind::BinaryOctahedral => (&[1, 0, -6, 0, 9, 0, -3], &[1, 0, -7, 0, 14, 0, -8]),
        GroupKind::BinaryIcosahedral => (
            &[1, 0, -7, 0, 14, 0, -8, 0, 1],
            &[1, 0, -8, 0, 20, 0, -17, 0, 4],
        ),
        other => {
            return Err(Error::InvalidKind(format!(
                "{} is not an exceptional group",
                other.name()
            )))
        }
    };
    Ok(ClosedFormSeries {
        kind,
        numerator: IntPoly::from_i64(num),
        denominator: IntPoly::from_i64(den),
        provenance: Provenance::ExceptionalTable,
    })
}

/// Report from [`exponent_product`]: numeric cosine products over the finite
/// and affine exponents against the exact determinants.
#[derive(Debug, Clone)]
pub struct ExponentReport {
    pub kind: GroupKind,
    pub finite_residual: f64,
    pub affine_residual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

/// Multiplies out `Π (1 - 2cos(πm/h)·t)` over the exponent multisets and
/// compares coefficientwise with `det(I - tÅ)` and `det(I - tA)`.
///
/// Odd cyclic groups are excluded: their affine diagram has no single
/// exponent description of the spectrum.
pub fn exponent_product(kind: GroupKind, n_terms: usize, tolerance: f64) -> Result<ExponentReport> {
    if let GroupKind::Cyclic(n) = kind {
        if n % 2 == 1 {
            return Err(Error::InvalidKind(format!(
                "the exponent product form excludes odd cyclic groups (got C{n})"
            )));
        }
    }
    let desc = descriptor(kind)?;
    let su2 = desc.su2()?;
    let graph = mckay_graph(&desc)?;
    let affine_det = crate::poincare::system_matrix(&graph).det();
    let finite_det = crate::poincare::system_matrix(&delete_affine(&graph)?).det();

    let finite = cosine_product(&su2.exponents_finite, su2.h);
    let affine = cosine_product(&su2.exponents_affine, su2.h_hat);
    let finite_residual = coefficient_residual(&finite, &finite_det, n_terms);
    let affine_residual = coefficient_residual(&affine, &affine_det, n_terms);
    Ok(ExponentReport {
        kind,
        finite_residual,
        affine_residual,
        tolerance,
        pass: finite_residual < tolerance && affine_residual < tolerance,
    })
}

fn cosine_product(exponents: &[u32], h: u32) -> Vec<f64> {
    let mut coeffs = vec![1.0f64];
    for &m in exponents {
        let root = 2.0 * (std::f64::consts::PI * f64::from(m) / f64::from(h)).cos();
        let mut next = vec![0.0; coeffs.len() + 1];
        for (i, c) in coeffs.iter().enumerate() {
            next[i] += c;
            next[i + 1] -= root * c;
        }
        coeffs = next;
    }
    coeffs
}

fn coefficient_residual(numeric: &[f64], exact: &IntPoly, n_terms: usize) -> f64 {
    let len = numeric.len().max(exact.degree().map_or(0, |d| d + 1));
    let mut worst = 0.0f64;
    for k in 0..len.min(n_terms.max(1)) {
        let a = numeric.get(k).copied().unwrap_or(0.0);
        let b = num_traits::ToPrimitive::to_f64(&exact.coeff(k)).unwrap_or(f64::NAN);
        worst = worst.max((a - b).abs());
    }
    worst
}

/// Lucas numbers: `L_0 = 2`, `L_1 = 1`, `L_{r+1} = L_r + L_{r-1}`.
pub fn lucas(r: usize) -> BigInt {
    let (mut prev, mut cur) = (BigInt::from(2), BigInt::one());
    if r == 0 {
        return prev;
    }
    for _ in 1..r {
        let next = &cur + &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Invariant multiplicity `m_{2n}^0` for the exceptional groups by the
/// closed formulas `(4ⁿ+8)/12`, `(4ⁿ+6·2ⁿ+8)/24`, `(4ⁿ+12·L_{2n}+20)/60`;
/// exact divisibility is asserted.
pub fn exceptional_m0(kind: GroupKind, n: usize) -> Result<BigInt> {
    if n < 1 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    let four_n = BigInt::from(4).pow(n as u32);
    let (numerator, divisor) = match kind {
        GroupKind::BinaryTetrahedral => (four_n + 8, 12),
        GroupKind::BinaryOctahedral => (four_n + 6 * BigInt::from(2).pow(n as u32) + 8, 24),
        GroupKind::BinaryIcosahedral => (four_n + 12 * lucas(2 * n) + 20, 60),
        other => {
            return Err(Error::InvalidKind(format!(
                "{} has no Lucas-form multiplicity formula",
                other.name()
            )))
        }
    };
    let (q, r) = num_integer::div_rem(numerator, BigInt::from(divisor));
    if !r.is_zero() {
        return Err(Error::NonIntegralResult(format!(
            "multiplicity formula for {} at n={n} is not divisible by {divisor}",
            kind.name()
        )));
    }
    Ok(q)
}

/// The denominator identity behind the cyclic theorem, realized as reversal
/// arithmetic: `cyclic_denominator(n) = a_n - t²·a_{n-2} - 2tⁿ`. Exposed for
/// the verification suite.
pub fn cyclic_denominator_by_reversal(n: u32) -> Result<IntPoly> {
    if n < 2 {
        return Err(Error::InvalidParameter("n must be at least 2".into()));
    }
    let n = n as usize;
    let t2 = IntPoly::from_i64(&[0, 0, 1]);
    let two_tn = IntPoly::monomial(BigInt::from(2), n);
    Ok(&(&dynkin_a(n) - &(&t2 * &dynkin_a(n - 2))) - &two_tn)
}

/// Exact product `Π_classes (1 - χ_V(g)·t)` for the kinds where the factors
/// pair into integer polynomials: assembled from the Chebyshev families for
/// cyclic and dihedral groups, `None` for the exceptional groups (their
/// product is checked numerically instead).
pub fn class_product_exact(kind: GroupKind) -> Result<Option<IntPoly>> {
    match kind {
        GroupKind::Cyclic(n) => Ok(Some(cyclic_denominator(n)?)),
        GroupKind::BinaryDihedral(n) => Ok(Some(
            &IntPoly::from_i64(&[1, 0, -4]) * &dynkin_a(n as usize - 1),
        )),
        _ => Ok(None),
    }
}

/// Numeric product `Π_classes (1 - χ_V(g)·t)` from the class data.
pub fn class_product_numeric(kind: GroupKind) -> Result<Vec<f64>> {
    let data = crate::groups::class_data(kind)?;
    let mut coeffs = vec![1.0f64];
    for class in &data.classes {
        let chi = class.chi_v.value();
        let mut next = vec![0.0; coeffs.len() + 1];
        for (i, c) in coeffs.iter().enumerate() {
            next[i] += c;
            next[i + 1] -= chi * c;
        }
        coeffs = next;
    }
    Ok(coeffs)
}
