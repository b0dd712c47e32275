//! Arbitrary-precision scalars and the combinatorial primitives behind the
//! explicit coefficient formulas.
//!
//! Integers and rationals come from the `num` crate. `BigRational` is kept
//! canonical by construction (reduced, positive denominator, zero as `0/1`),
//! so structural equality is exact equality; every orthogonality check in
//! this crate bottoms out in that property.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Zero};

/// Double factorial `k (k-2) (k-4) ...` with the empty-product conventions
/// `0!! = 1` and `(-1)!! = 1`.
///
/// Panics for `k < -1`; no integer value extends the product below -1.
pub fn double_factorial(k: i64) -> BigInt {
    assert!(
        k >= -1,
        "double_factorial: k = {k} is out of domain (need k >= -1)"
    );
    let mut acc = BigInt::one();
    let mut i = k;
    while i >= 2 {
        acc *= i;
        i -= 2;
    }
    acc
}

/// Binomial coefficient `C(n, k)`, with `C(n, k) = 0` for `k < 0` or `k > n`.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    num::integer::binomial(BigInt::from(n), BigInt::from(k))
}

/// Factorial `n!`.
pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// Exact rational `numer/denom`. Panics on a zero denominator.
pub fn rational(numer: i64, denom: i64) -> BigRational {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn double_factorial_small_values() {
        assert_eq!(double_factorial(6), BigInt::from(48));
        assert_eq!(double_factorial(0), BigInt::one());
        assert_eq!(double_factorial(-1), BigInt::one());
        assert_eq!(double_factorial(1), BigInt::one());
        assert_eq!(double_factorial(7), BigInt::from(105));
    }

    #[test]
    #[should_panic(expected = "out of domain")]
    fn double_factorial_rejects_below_minus_one() {
        double_factorial(-2);
    }

    #[test]
    fn double_factorial_recurrence() {
        for k in 1..=60i64 {
            assert_eq!(
                double_factorial(k),
                BigInt::from(k) * double_factorial(k - 2)
            );
        }
    }

    #[test]
    fn binomial_small_values() {
        assert_eq!(binomial(4, 2), BigInt::from(6));
        for n in 0..20 {
            assert_eq!(binomial(n, 0), BigInt::one());
        }
        assert_eq!(binomial(5, 7), BigInt::zero());
        assert_eq!(binomial(5, -1), BigInt::zero());
    }

    #[test]
    fn binomial_squares_sum_to_central_binomial() {
        for n in 0..=40u64 {
            let total: BigInt = (0..=n)
                .map(|k| {
                    let c = binomial(n, k as i64);
                    &c * &c
                })
                .sum();
            assert_eq!(total, binomial(2 * n, n as i64));
        }
    }

    #[test]
    fn rational_is_canonical() {
        let r = rational(-6, -4);
        assert_eq!(r, rational(3, 2));
        assert!(r.denom() > &BigInt::zero());
        let z = rational(0, -7);
        assert_eq!(z.denom(), &BigInt::one());
    }

    proptest! {
        // Addition agrees with an independent cross-multiplication oracle
        // and the result is always in reduced canonical form.
        #[test]
        fn rational_addition_matches_cross_multiplication(
            a in -1000i64..1000, b in 1i64..1000,
            c in -1000i64..1000, d in 1i64..1000,
        ) {
            let sum = rational(a, b) + rational(c, d);
            let oracle = rational(a * d + c * b, b * d);
            prop_assert_eq!(&sum, &oracle);
            let g = num::integer::gcd(sum.numer().clone(), sum.denom().clone());
            prop_assert!(g.is_one() || sum.numer().is_zero());
            prop_assert!(sum.denom() > &BigInt::zero());
        }
    }
}
