//! Exact polynomial arithmetic over the integers and rationals, polynomial
//! matrices with exact determinants, and normalized rational functions with
//! power-series expansion.
//!
//! Everything here is an immutable value; all operations are pure.

mod intpoly;
mod matrix;
mod ratfn;
mod ratpoly;

pub use intpoly::IntPoly;
pub use matrix::PolyMatrix;
pub use ratfn::{poly_gcd, RationalFn};
pub use ratpoly::RatPoly;

#[cfg(test)]
mod proptests {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn arb_poly() -> impl Strategy<Value = IntPoly> {
        prop::collection::vec(-1_000_000i64..1_000_000, 0..=13).prop_map(|v| IntPoly::from_i64(&v))
    }

    fn arb_entry() -> impl Strategy<Value = IntPoly> {
        prop::collection::vec(-9i64..=9, 0..=2).prop_map(|v| IntPoly::from_i64(&v))
    }

    proptest! {
        #[test]
        fn addition_is_associative(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        }

        #[test]
        fn multiplication_commutes(a in arb_poly(), b in arb_poly()) {
            prop_assert_eq!(&a * &b, &b * &a);
        }

        #[test]
        fn multiplication_distributes(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn series_reconvolution_recovers_numerator(
            num in prop::collection::vec(-50i64..=50, 0..=6),
            den_tail in prop::collection::vec(-5i64..=5, 0..=5),
        ) {
            let num = IntPoly::from_i64(&num);
            let mut den = vec![1i64];
            den.extend(den_tail);
            let den = IntPoly::from_i64(&den);
            let f = RationalFn::new(num.clone(), den.clone()).unwrap();
            let n = 12usize;
            let series = f.series(n);
            // convolve the series back with the denominator
            for k in 0..n {
                let mut acc = BigInt::from(0);
                for j in 0..=k.min(den.degree().unwrap_or(0)) {
                    acc += den.coeff(j) * &series[k - j];
                }
                prop_assert_eq!(acc, num.coeff(k));
            }
        }

        #[test]
        fn bareiss_agrees_with_cofactor(
            n in 1usize..=5,
            entries in prop::collection::vec(arb_entry(), 25),
        ) {
            let rows: Vec<Vec<IntPoly>> =
                (0..n).map(|i| entries[i * n..i * n + n].to_vec()).collect();
            let m = PolyMatrix::from_rows(rows).unwrap();
            prop_assert_eq!(m.det_bareiss(), m.det_cofactor());
        }

        #[test]
        fn normalization_invariants(
            num in prop::collection::vec(-30i64..=30, 0..=6),
            den_tail in prop::collection::vec(-6i64..=6, 0..=5),
            negate in proptest::bool::ANY,
        ) {
            let num = IntPoly::from_i64(&num);
            let mut den = vec![if negate { -1i64 } else { 1 }];
            den.extend(den_tail);
            let den = IntPoly::from_i64(&den);
            let f = RationalFn::new(num.clone(), den.clone()).unwrap();
            prop_assert_eq!(f.den().coeff(0), BigInt::from(1));
            prop_assert!(f.equivalent_pair(&num, &den));
            // reduced form: the gcd of numerator and denominator is a unit
            if !f.is_zero() {
                let g = poly_gcd(f.num(), f.den());
                prop_assert_eq!(g.degree(), Some(0));
            }
        }
    }
}
