//! The series engine: exact Poincaré series `m^μ(t)` for every node of a
//! representation graph, by two independent routes — per-node Cramer
//! determinants and one exact linear solve over the field of rational
//! functions — plus the symmetric-algebra invariant series and its Molien
//! cross-check.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::groups::{class_data, GroupDescriptor};
use crate::polyring::{poly_gcd, IntPoly, PolyMatrix, RationalFn};
use crate::repgraph::{delete_affine, RepGraph};

/// Series for one node, carrying the determinant pair it came from:
/// `series` is the reduced form of `numerator_det / denominator_det`.
#[derive(Debug, Clone)]
pub struct SeriesResult {
    pub node: String,
    pub series: RationalFn,
    pub numerator_det: IntPoly,
    pub denominator_det: IntPoly,
}

/// The matrix `I - t·A`.
pub fn system_matrix(g: &RepGraph) -> PolyMatrix {
    PolyMatrix::from_fn(g.node_count(), |i, j| {
        let mut p = IntPoly::monomial(BigInt::from(-(g.adj[i][j] as i64)), 1);
        if i == j {
            p = &p + &IntPoly::one();
        }
        p
    })
}

fn check_series_pre(g: &RepGraph) -> Result<()> {
    if !g.is_symmetric() {
        return Err(Error::AsymmetricAdjacency);
    }
    if !g.connected_from_trivial() {
        return Err(Error::DisconnectedGraph);
    }
    Ok(())
}

fn delta_column(n: usize) -> Vec<IntPoly> {
    let mut col = vec![IntPoly::zero(); n];
    col[0] = IntPoly::one();
    col
}

/// Series for node `mu` by Cramer's rule: the determinant of `I - tA` with
/// column `mu` replaced by the unit column, over the determinant of `I - tA`.
pub fn series_cramer(g: &RepGraph, mu: usize) -> Result<SeriesResult> {
    check_series_pre(g)?;
    let n = g.node_count();
    if mu >= n {
        return Err(Error::InvalidParameter(format!(
            "node index {mu} out of range"
        )));
    }
    let m = system_matrix(g);
    let den = m.det();
    let num = m.with_column(mu, &delta_column(n)).det();
    if num.is_zero() {
        return Err(Error::Internal(format!(
            "vanishing numerator at node `{}` despite connectivity",
            g.labels[mu]
        )));
    }
    Ok(SeriesResult {
        node: g.labels[mu].clone(),
        series: RationalFn::new(num.clone(), den.clone())?,
        numerator_det: num,
        denominator_det: den,
    })
}

/// Series for every node by one exact Gaussian elimination over the field of
/// rational functions, solving `(I - tA)·m = δ`.
///
/// Each result is cross-checked against the Cramer determinant pair, and the
/// full solution is checked against the edge recursion
/// `m^μ = δ_{μ,0} + t·Σ_λ a_{μλ} m^λ`; both hold for every valid input.
pub fn series_all(g: &RepGraph) -> Result<Vec<SeriesResult>> {
    check_series_pre(g)?;
    let n = g.node_count();
    let m = system_matrix(g);
    let den = m.det();

    let mut rows: Vec<Vec<PolyFrac>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| PolyFrac::from_poly(m.at(i, j).clone()))
                .collect()
        })
        .collect();
    let mut rhs: Vec<PolyFrac> = delta_column(n)
        .into_iter()
        .map(PolyFrac::from_poly)
        .collect();

    // forward elimination, pivoting on the lowest-degree nonzero numerator
    for col in 0..n {
        let pivot_row = (col..n)
            .filter(|&r| !rows[r][col].is_zero())
            .min_by_key(|&r| rows[r][col].num.degree().unwrap_or(0))
            .ok_or_else(|| Error::Internal("singular system matrix".into()))?;
        rows.swap(col, pivot_row);
        rhs.swap(col, pivot_row);
        let pivot = rows[col][col].clone();
        for r in col + 1..n {
            if rows[r][col].is_zero() {
                continue;
            }
            let factor = rows[r][col].div(&pivot);
            for c in col..n {
                let delta = rows[col][c].mul(&factor);
                rows[r][c] = rows[r][c].sub(&delta);
            }
            let delta = rhs[col].mul(&factor);
            rhs[r] = rhs[r].sub(&delta);
        }
    }

    // back substitution
    let mut solution = vec![PolyFrac::zero(); n];
    for row in (0..n).rev() {
        let mut acc = rhs[row].clone();
        for col in row + 1..n {
            let delta = rows[row][col].mul(&solution[col]);
            acc = acc.sub(&delta);
        }
        solution[row] = acc.div(&rows[row][row]);
    }

    // edge recursion check, cleared of denominators
    for mu in 0..n {
        let mut acc = if mu == 0 {
            PolyFrac::from_poly(IntPoly::one())
        } else {
            PolyFrac::zero()
        };
        for la in 0..n {
            if g.adj[mu][la] == 0 {
                continue;
            }
            let step = IntPoly::monomial(BigInt::from(g.adj[mu][la]), 1);
            let term = solution[la].scale(&step);
            acc = acc.add(&term);
        }
        if !solution[mu].sub(&acc).is_zero() {
            return Err(Error::Internal(format!(
                "edge recursion fails at node `{}`",
                g.labels[mu]
            )));
        }
    }

    let mut results = Vec::with_capacity(n);
    for (mu, frac) in solution.into_iter().enumerate() {
        let series = frac.into_rational_fn()?;
        let num_det = m.with_column(mu, &delta_column(n)).det();
        if !series.equivalent_pair(&num_det, &den) {
            return Err(Error::Internal(format!(
                "solve and Cramer disagree at node `{}`",
                g.labels[mu]
            )));
        }
        results.push(SeriesResult {
            node: g.labels[mu].clone(),
            series,
            numerator_det: num_det,
            denominator_det: den.clone(),
        });
    }
    Ok(results)
}

/// Invariant series `m^0(t)`. Beyond Cramer at node 0, this asserts the
/// affine-deletion identity: the numerator equals `det(I - tÅ)` for the
/// graph with node 0 removed.
pub fn invariants_series(g: &RepGraph) -> Result<SeriesResult> {
    let result = series_cramer(g, 0)?;
    if g.node_count() >= 2 {
        let deleted = delete_affine(g)?;
        let det = system_matrix(&deleted).det();
        if det != result.numerator_det {
            return Err(Error::Internal(
                "numerator at node 0 differs from the affine-deleted determinant".into(),
            ));
        }
    }
    Ok(result)
}

/// Poincaré series of the invariants in the symmetric algebra:
/// `(1 + t^h) / ((1 - t^a)(1 - t^b))`, in reduced form.
pub fn sym_invariants_series(desc: &GroupDescriptor) -> Result<RationalFn> {
    let su2 = desc.su2()?;
    let (num, den) = sym_invariants_pair(su2.h, su2.a_const, su2.b_const);
    RationalFn::new(num, den)
}

/// The unreduced numerator/denominator pair of the symmetric-invariant
/// series, for cross-multiplied comparisons.
pub fn sym_invariants_pair(h: u32, a: u32, b: u32) -> (IntPoly, IntPoly) {
    let num = &IntPoly::one() + &IntPoly::monomial(BigInt::one(), h as usize);
    let factor = |e: u32| &IntPoly::one() - &IntPoly::monomial(BigInt::one(), e as usize);
    (num, &factor(a) * &factor(b))
}

/// Molien sum for the invariants: the size-weighted average over conjugacy
/// classes of `1 / det_V(I - g·t)` with `det_V(I - g·t) = 1 - χ_V(g)·t + t²`
/// for a two-dimensional determinant-one action. Floating point by design:
/// the character values include irrational numbers, and the identity this
/// feeds is exact on the other side.
pub fn molien_invariants(desc: &GroupDescriptor, n_terms: usize) -> Result<Vec<f64>> {
    desc.su2()?;
    let classes = class_data(desc.kind)?;
    let order = classes.order() as f64;
    let mut coeffs = vec![0.0f64; n_terms];
    for class in &classes.classes {
        let chi = class.chi_v.value();
        let weight = class.size as f64;
        // 1/(1 - χt + t²) = Σ_k u_k t^k with u_k = χ·u_{k-1} - u_{k-2}
        let (mut prev, mut cur) = (0.0f64, 1.0f64);
        for c in coeffs.iter_mut() {
            *c += weight * cur;
            let next = chi * cur - prev;
            prev = cur;
            cur = next;
        }
    }
    for c in coeffs.iter_mut() {
        *c /= order;
    }
    Ok(coeffs)
}

/// Fraction of integer polynomials used inside the exact solver. Reduction
/// is deferred to arithmetic that would otherwise let degrees grow.
#[derive(Debug, Clone)]
struct PolyFrac {
    num: IntPoly,
    den: IntPoly,
}

impl PolyFrac {
    fn zero() -> Self {
        PolyFrac {
            num: IntPoly::zero(),
            den: IntPoly::one(),
        }
    }

    fn from_poly(p: IntPoly) -> Self {
        PolyFrac {
            num: p,
            den: IntPoly::one(),
        }
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn reduce(self) -> Self {
        if self.num.is_zero() {
            return Self::zero();
        }
        let g = poly_gcd(&self.num, &self.den);
        let (mut num, mut den) = if g.degree().unwrap_or(0) >= 1 {
            (
                self.num.div_exact(&g).expect("gcd divides"),
                self.den.div_exact(&g).expect("gcd divides"),
            )
        } else {
            (self.num, self.den)
        };
        let shared = num_integer::gcd(num.content(), den.content());
        if !shared.is_one() {
            num = num.div_scalar_exact(&shared).expect("content divides");
            den = den.div_scalar_exact(&shared).expect("content divides");
        }
        PolyFrac { num, den }
    }

    fn add(&self, rhs: &PolyFrac) -> Self {
        PolyFrac {
            num: &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            den: &self.den * &rhs.den,
        }
        .reduce()
    }

    fn sub(&self, rhs: &PolyFrac) -> Self {
        PolyFrac {
            num: &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            den: &self.den * &rhs.den,
        }
        .reduce()
    }

    fn mul(&self, rhs: &PolyFrac) -> Self {
        PolyFrac {
            num: &self.num * &rhs.num,
            den: &self.den * &rhs.den,
        }
        .reduce()
    }

    fn div(&self, rhs: &PolyFrac) -> Self {
        assert!(!rhs.is_zero(), "division by zero fraction");
        PolyFrac {
            num: &self.num * &rhs.den,
            den: &self.den * &rhs.num,
        }
        .reduce()
    }

    fn scale(&self, p: &IntPoly) -> Self {
        PolyFrac {
            num: &self.num * p,
            den: self.den.clone(),
        }
        .reduce()
    }

    fn into_rational_fn(self) -> Result<RationalFn> {
        let reduced = self.reduce();
        RationalFn::new(reduced.num, reduced.den)
    }
}
