//! Chebyshev polynomials of the first and second kind, the rescaled family
//! `p_n(t) = U_n(t/2)`, and the determinant families `a_n`, `d_n` attached to
//! the type-A and type-D Dynkin diagrams.
//!
//! Each family has two independent evaluation paths: the three-term
//! recurrence and a binomial closed form. Tests and the verification suite
//! hold them equal.

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::One;

use crate::error::Result;
use crate::polyring::{IntPoly, RatPoly};

/// First-kind Chebyshev polynomial `T_n`, by the recurrence
/// `T_{n+1} = 2t·T_n - T_{n-1}` with `T_0 = 1`, `T_1 = t`.
pub fn cheb_t(n: usize) -> IntPoly {
    three_term(n, IntPoly::one(), IntPoly::from_i64(&[0, 1]), 2)
}

/// Second-kind Chebyshev polynomial `U_n`: `U_{n+1} = 2t·U_n - U_{n-1}`,
/// `U_0 = 1`, `U_1 = 2t`.
pub fn cheb_u(n: usize) -> IntPoly {
    three_term(n, IntPoly::one(), IntPoly::from_i64(&[0, 2]), 2)
}

/// Rescaled second-kind polynomial `p_n(t) = U_n(t/2)`:
/// `p_{n+1} = t·p_n - p_{n-1}`, `p_0 = 1`, `p_1 = t`.
pub fn cheb_p(n: usize) -> IntPoly {
    three_term(n, IntPoly::one(), IntPoly::from_i64(&[0, 1]), 1)
}

fn three_term(n: usize, p0: IntPoly, p1: IntPoly, t_factor: i64) -> IntPoly {
    match n {
        0 => return p0,
        1 => return p1,
        _ => {}
    }
    let t = IntPoly::from_i64(&[0, t_factor]);
    let (mut prev, mut cur) = (p0, p1);
    for _ in 1..n {
        let next = &(&t * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Closed form `T_n(t) = Σ_r C(n,2r) t^{n-2r} (t²-1)^r`.
pub fn cheb_t_closed(n: usize) -> IntPoly {
    let t2m1 = IntPoly::from_i64(&[-1, 0, 1]);
    let mut acc = IntPoly::zero();
    for r in 0..=n / 2 {
        let c = binomial(BigInt::from(n), BigInt::from(2 * r));
        let term = IntPoly::monomial(c, n - 2 * r);
        acc = &acc + &(&term * &t2m1.pow(r as u32));
    }
    acc
}

/// Closed form `U_n(t) = Σ_r (-1)^r C(n-r,r) (2t)^{n-2r}`.
pub fn cheb_u_closed(n: usize) -> IntPoly {
    alternating_binomial_sum(n, 2)
}

/// Closed form `p_n(t) = Σ_r (-1)^r C(n-r,r) t^{n-2r}`.
pub fn cheb_p_closed(n: usize) -> IntPoly {
    alternating_binomial_sum(n, 1)
}

fn alternating_binomial_sum(n: usize, t_factor: i64) -> IntPoly {
    let mut acc = IntPoly::zero();
    for r in 0..=n / 2 {
        let mut c = binomial(BigInt::from(n - r), BigInt::from(r));
        c *= BigInt::from(t_factor).pow((n - 2 * r) as u32);
        if r % 2 == 1 {
            c = -c;
        }
        acc = &acc + &IntPoly::monomial(c, n - 2 * r);
    }
    acc
}

/// Type-A determinant polynomial: `a_n(t) = Σ_r (-1)^r C(n-r,r) t^{2r}`,
/// equal to the coefficient reversal `t^n p_n(1/t)`. It is the determinant
/// of `I - tÅ` for the path on `n` nodes, and satisfies
/// `a_{n+1} = a_n - t² a_{n-1}` with `a_0 = a_1 = 1`.
pub fn dynkin_a(n: usize) -> IntPoly {
    let mut acc = IntPoly::zero();
    for r in 0..=n / 2 {
        let mut c = binomial(BigInt::from(n - r), BigInt::from(r));
        if r % 2 == 1 {
            c = -c;
        }
        acc = &acc + &IntPoly::monomial(c, 2 * r);
    }
    acc
}

/// `a_n` by its recurrence; used as the independent path in tests.
pub fn dynkin_a_recurrence(n: usize) -> IntPoly {
    let t2 = IntPoly::from_i64(&[0, 0, 1]);
    let (mut prev, mut cur) = (IntPoly::one(), IntPoly::one());
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = &cur - &(&t2 * &prev);
        prev = cur;
        cur = next;
    }
    cur
}

/// Type-D determinant polynomial
/// `d_n(t) = 2^{-n} Σ_r C(n+1, 2r) (1-4t²)^r`,
/// the determinant of `I - tÅ` for the (n+2)-node D diagram. The `2^{-n}`
/// factor flows through rational coefficients and is discharged by an
/// integrality assertion, which can never fire.
pub fn dynkin_d(n: usize) -> Result<IntPoly> {
    let base = RatPoly::from_int(&IntPoly::from_i64(&[1, 0, -4]));
    let mut acc = RatPoly::zero();
    let mut pow = RatPoly::one();
    for r in 0..=n.div_ceil(2) {
        let c = BigRational::from(binomial(BigInt::from(n + 1), BigInt::from(2 * r)));
        acc = &acc + &pow.scale(&c);
        pow = &pow * &base;
    }
    let half_pow = BigRational::new(BigInt::one(), BigInt::from(2).pow(n as u32));
    acc.scale(&half_pow).to_intpoly()
}

/// `d_n` by its recurrence `d_{n+1} = d_n - t² d_{n-1}`, `d_0 = 1`,
/// `d_1 = 1 - 2t²`.
pub fn dynkin_d_recurrence(n: usize) -> IntPoly {
    let t2 = IntPoly::from_i64(&[0, 0, 1]);
    let (mut prev, mut cur) = (IntPoly::one(), IntPoly::from_i64(&[1, 0, -2]));
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = &cur - &(&t2 * &prev);
        prev = cur;
        cur = next;
    }
    cur
}

/// Memoized tables of `T_n`, `U_n`, `p_n`. Confine an instance to one thread
/// of control; the polynomials it hands out are immutable values.
#[derive(Default)]
pub struct ChebCache {
    t: Vec<IntPoly>,
    u: Vec<IntPoly>,
    p: Vec<IntPoly>,
}

impl ChebCache {
    pub fn new() -> Self {
        ChebCache {
            t: vec![IntPoly::one(), IntPoly::from_i64(&[0, 1])],
            u: vec![IntPoly::one(), IntPoly::from_i64(&[0, 2])],
            p: vec![IntPoly::one(), IntPoly::from_i64(&[0, 1])],
        }
    }

    pub fn t(&mut self, n: usize) -> &IntPoly {
        Self::extend(&mut self.t, n, 2);
        &self.t[n]
    }

    pub fn u(&mut self, n: usize) -> &IntPoly {
        Self::extend(&mut self.u, n, 2);
        &self.u[n]
    }

    pub fn p(&mut self, n: usize) -> &IntPoly {
        Self::extend(&mut self.p, n, 1);
        &self.p[n]
    }

    fn extend(list: &mut Vec<IntPoly>, n: usize, t_factor: i64) {
        let t = IntPoly::from_i64(&[0, t_factor]);
        while list.len() <= n {
            let k = list.len();
            let next = &(&t * &list[k - 1]) - &list[k - 2];
            list.push(next);
        }
    }
}

/// One line of a verification report.
#[derive(Debug, Clone)]
pub struct IdentityCheck {
    pub name: String,
    pub exact: bool,
    pub residual: f64,
    pub pass: bool,
}

/// Report from [`verify_identities`].
#[derive(Debug, Clone)]
pub struct IdentityReport {
    pub checks: Vec<IdentityCheck>,
    pub tolerance: f64,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn max_residual(&self) -> f64 {
        self.checks.iter().fold(0.0, |m, c| m.max(c.residual))
    }
}

/// Checks the cross-family identities:
/// `U_n - U_{n-2} = 2 T_n` exactly for `2 ≤ n ≤ n_max`; the roots
/// `2cos(πr/(n+1))` of `p_n` numerically; and the product form
/// `T_n = 2^{n-1} Π (t - cos((2r-1)π/2n))` at sampled points.
pub fn verify_identities(n_max: usize, tolerance: f64) -> IdentityReport {
    let mut checks = Vec::new();
    let mut cache = ChebCache::new();

    for n in 2..=n_max {
        let lhs = &cache.u(n).clone() - cache.u(n - 2);
        let rhs = cache.t(n).scale(&BigInt::from(2));
        checks.push(IdentityCheck {
            name: format!("U_{n} - U_{} = 2T_{n}", n - 2),
            exact: true,
            residual: 0.0,
            pass: lhs == rhs,
        });
    }

    for n in 1..=n_max.min(20) {
        let p = cache.p(n);
        let mut worst: f64 = 0.0;
        for r in 1..=n {
            let root = 2.0 * (std::f64::consts::PI * r as f64 / (n as f64 + 1.0)).cos();
            worst = worst.max(p.eval_f64(root).abs());
        }
        checks.push(IdentityCheck {
            name: format!("p_{n} vanishes at 2cos(πr/{})", n + 1),
            exact: false,
            residual: worst,
            pass: worst < tolerance,
        });
    }

    let samples = [-1.7, -0.6, 0.0, 0.3, 0.9, 1.4, 2.2];
    for n in 1..=n_max.min(20) {
        let t_poly = cache.t(n);
        let mut worst: f64 = 0.0;
        for &x in &samples {
            let mut prod = 2f64.powi(n as i32 - 1);
            for r in 1..=n {
                prod *= x - ((2 * r - 1) as f64 * std::f64::consts::PI / (2.0 * n as f64)).cos();
            }
            // relative to the magnitude of the values involved
            let scale = t_poly.eval_f64(x).abs().max(1.0);
            worst = worst.max((t_poly.eval_f64(x) - prod).abs() / scale);
        }
        checks.push(IdentityCheck {
            name: format!("T_{n} product form at sample points"),
            exact: false,
            residual: worst,
            pass: worst < tolerance,
        });
    }

    IdentityReport { checks, tolerance }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn p(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_i64(coeffs)
    }

    #[test]
    fn first_kind_values() {
        assert_eq!(cheb_t(0), IntPoly::one());
        assert_eq!(cheb_t(2), p(&[-1, 0, 2]));
        assert_eq!(cheb_t(6), p(&[-1, 0, 18, 0, -48, 0, 32]));
    }

    #[test]
    fn second_kind_values() {
        assert_eq!(cheb_u(0), IntPoly::one());
        assert_eq!(cheb_u(5), p(&[0, 6, 0, -32, 0, 32]));
        assert_eq!(cheb_u(6), p(&[-1, 0, 24, 0, -80, 0, 64]));
    }

    #[test]
    fn rescaled_family_values() {
        assert_eq!(cheb_p(4), p(&[1, 0, -3, 0, 1]));
        assert_eq!(cheb_p(6), p(&[-1, 0, 6, 0, -5, 0, 1]));
    }

    #[test]
    fn closed_forms_match_recurrences() {
        for n in 0..=50 {
            assert_eq!(cheb_t(n), cheb_t_closed(n), "T_{n}");
            assert_eq!(cheb_u(n), cheb_u_closed(n), "U_{n}");
            assert_eq!(cheb_p(n), cheb_p_closed(n), "p_{n}");
            assert_eq!(dynkin_a(n), dynkin_a_recurrence(n), "a_{n}");
            assert_eq!(dynkin_d(n).unwrap(), dynkin_d_recurrence(n), "d_{n}");
        }
    }

    #[test]
    fn type_a_values() {
        assert_eq!(dynkin_a(0), IntPoly::one());
        assert_eq!(dynkin_a(1), IntPoly::one());
        assert_eq!(dynkin_a(4), p(&[1, 0, -3, 0, 1]));
        assert_eq!(dynkin_a(6), p(&[1, 0, -5, 0, 6, 0, -1]));
    }

    #[test]
    fn type_a_is_reversal_of_p() {
        for n in 0..=30 {
            assert_eq!(dynkin_a(n), cheb_p(n).reversed(n).unwrap());
        }
    }

    #[test]
    fn type_d_values() {
        assert_eq!(dynkin_d(0).unwrap(), IntPoly::one());
        assert_eq!(dynkin_d(1).unwrap(), p(&[1, 0, -2]));
        assert_eq!(dynkin_d(4).unwrap(), p(&[1, 0, -5, 0, 5]));
        assert_eq!(dynkin_d(6).unwrap(), p(&[1, 0, -7, 0, 14, 0, -7]));
    }

    #[test]
    fn degrees_and_parity() {
        for n in 0..=30 {
            let a = dynkin_a(n);
            assert_eq!(a.degree().unwrap(), 2 * (n / 2));
            let d = dynkin_d(n).unwrap();
            assert_eq!(d.degree().unwrap(), 2 * n.div_ceil(2));
            for poly in [&a, &d] {
                for (i, c) in poly.coeffs().iter().enumerate() {
                    if i % 2 == 1 {
                        assert!(num_traits::Zero::is_zero(c));
                    }
                }
            }
        }
    }

    #[test]
    fn numeric_product_forms() {
        use std::f64::consts::PI;
        for n in 1..=20usize {
            // a_n(t) = Π (1 - 2cos(πr/(n+1)) t)
            let mut coeffs = vec![1.0f64];
            for r in 1..=n {
                let root = 2.0 * (PI * r as f64 / (n as f64 + 1.0)).cos();
                coeffs = convolve_linear(&coeffs, root);
            }
            let a = dynkin_a(n);
            for (k, c) in coeffs.iter().enumerate() {
                assert!((c - a.coeff(k).to_f64().unwrap()).abs() < 1e-9);
            }
            // d_n(t) = Π (1 - 2cos((2r-1)π/(2(n+1))) t)
            let mut coeffs = vec![1.0f64];
            for r in 1..=n + 1 {
                let root = 2.0 * ((2 * r - 1) as f64 * PI / (2.0 * (n as f64 + 1.0))).cos();
                coeffs = convolve_linear(&coeffs, root);
            }
            let d = dynkin_d(n).unwrap();
            for (k, c) in coeffs.iter().enumerate() {
                assert!((c - d.coeff(k).to_f64().unwrap()).abs() < 1e-9);
            }
        }
    }

    fn convolve_linear(coeffs: &[f64], root: f64) -> Vec<f64> {
        // multiply by (1 - root·t)
        let mut out = vec![0.0; coeffs.len() + 1];
        for (i, c) in coeffs.iter().enumerate() {
            out[i] += c;
            out[i + 1] -= root * c;
        }
        out
    }

    #[test]
    fn identity_report_passes() {
        let report = verify_identities(20, 1e-9);
        assert!(report.passed(), "max residual {}", report.max_residual());
    }

    #[test]
    fn cache_matches_direct() {
        let mut cache = ChebCache::new();
        assert_eq!(cache.t(12), &cheb_t(12));
        assert_eq!(cache.u(9), &cheb_u(9));
        assert_eq!(cache.p(17), &cheb_p(17));
    }
}
