//! Exact scalar arithmetic: arbitrary-precision rationals, factorials,
//! binomial coefficients and Bernoulli numbers.
//!
//! Every quantity in this crate is an exact rational in canonical lowest
//! terms (positive denominator, gcd(|numerator|, denominator) = 1); there is
//! no floating point anywhere. The scalar type is [`Rational`], re-exported
//! from `num-rational`, which canonicalizes after every operation and prints
//! as `p/q` (or bare `p` when the denominator is 1) with a leading `-` for
//! negative values and no whitespace.

use std::sync::{Mutex, OnceLock};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

/// The universal scalar: an arbitrary-precision rational in lowest terms.
pub type Rational = num_rational::BigRational;

/// Shorthand for a rational from a machine integer.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for the rational `p/q`. Panics if `q == 0`.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// `n!` as an unsigned big integer.
pub fn factorial(n: u64) -> BigUint {
    let mut acc = BigUint::one();
    for i in 2..=n {
        acc *= i;
    }
    acc
}

/// Binomial coefficient `C(n, k)`, with `C(n, k) = 0` whenever `k < 0` or
/// `k > n`. The out-of-range-is-zero convention lets summation formulas be
/// transcribed with their printed limits.
pub fn binomial(n: u64, k: i64) -> BigUint {
    if k < 0 || k as u64 > n {
        return BigUint::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigUint::one();
    for i in 1..=k {
        // The running product is always exactly divisible here.
        acc = acc * (n - k + i) / i;
    }
    acc
}

/// Binomial coefficient as a `Rational`, convenient inside rational formulas.
pub fn binomial_rat(n: u64, k: i64) -> Rational {
    Rational::from_integer(BigInt::from(binomial(n, k)))
}

/// `(-1)^(m+1)` as a rational: `+1` for odd `m`, `-1` for even `m`. This is
/// the sign the subset-sum polynomials carry on positive tuples and the
/// reflection sign of the partition polynomial part.
pub fn parity_sign(m: usize) -> Rational {
    if m.is_multiple_of(2) {
        -Rational::one()
    } else {
        Rational::one()
    }
}

static BERNOULLI: OnceLock<Mutex<Vec<Rational>>> = OnceLock::new();

/// The k-th Bernoulli number under the `B_1 = -1/2` convention.
///
/// Computed by the defining recurrence `sum_{j=0}^{k} C(k+1, j) B_j = 0`
/// with `B_0 = 1`, over exact rationals, memoized. The recurrence itself
/// forces `B_1 = -1/2` and `B_{2j+1} = 0` for `j >= 1`.
pub fn bernoulli(k: usize) -> Rational {
    let table = BERNOULLI.get_or_init(|| Mutex::new(vec![Rational::one()]));
    let mut table = table.lock().expect("bernoulli table poisoned");
    while table.len() <= k {
        let j = table.len() as u64;
        let mut acc = Rational::zero();
        for (i, b) in table.iter().enumerate() {
            acc += binomial_rat(j + 1, i as i64) * b;
        }
        let next = -acc / rat_int(j as i64 + 1);
        table.push(next);
    }
    table[k].clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn factorial_small_values() {
        assert_eq!(factorial(0), BigUint::one());
        assert_eq!(factorial(5), BigUint::from(120u32));
        assert_eq!(factorial(10), BigUint::from(3_628_800u32));
    }

    #[test]
    fn binomial_in_and_out_of_range() {
        assert_eq!(binomial(5, 2), BigUint::from(10u32));
        assert_eq!(binomial(5, 7), BigUint::zero());
        assert_eq!(binomial(5, -1), BigUint::zero());
        assert_eq!(binomial(0, 0), BigUint::one());
    }

    #[test]
    fn bernoulli_known_values() {
        assert_eq!(bernoulli(0), rat_int(1));
        assert_eq!(bernoulli(1), rat(-1, 2));
        assert_eq!(bernoulli(2), rat(1, 6));
        assert_eq!(bernoulli(4), rat(-1, 30));
        assert_eq!(bernoulli(6), rat(1, 42));
        assert_eq!(bernoulli(8), rat(-1, 30));
        assert_eq!(bernoulli(10), rat(5, 66));
        assert_eq!(bernoulli(12), rat(-691, 2730));
    }

    #[test]
    fn bernoulli_odd_indices_vanish() {
        for j in 1..=15 {
            assert_eq!(bernoulli(2 * j + 1), Rational::zero(), "B_{}", 2 * j + 1);
        }
    }

    #[test]
    fn bernoulli_satisfies_defining_recurrence() {
        for k in 1..=40u64 {
            let mut acc = Rational::zero();
            for j in 0..=k {
                acc += binomial_rat(k + 1, j as i64) * bernoulli(j as usize);
            }
            assert_eq!(acc, Rational::zero(), "recurrence fails at k={k}");
        }
    }

    #[test]
    fn rational_display_is_canonical() {
        assert_eq!(rat(2, 4).to_string(), "1/2");
        assert_eq!(rat(-2, 4).to_string(), "-1/2");
        assert_eq!(rat(3, -9).to_string(), "-1/3");
        assert_eq!(rat(8, 4).to_string(), "2");
        assert_eq!(rat_int(0).to_string(), "0");
    }

    proptest! {
        #[test]
        fn add_then_subtract_is_identity(
            an in -1000i64..1000, ad in 1i64..100,
            bn in -1000i64..1000, bd in 1i64..100,
        ) {
            let a = rat(an, ad);
            let b = rat(bn, bd);
            prop_assert_eq!(&(&a + &b) - &b, a);
        }

        #[test]
        fn multiply_then_divide_is_identity(
            an in -1000i64..1000, ad in 1i64..100,
            bn in -1000i64..1000, bd in 1i64..100,
        ) {
            prop_assume!(bn != 0);
            let a = rat(an, ad);
            let b = rat(bn, bd);
            prop_assert_eq!(&(&a * &b) / &b, a);
        }

        #[test]
        fn results_stay_in_lowest_terms(
            an in -1000i64..1000, ad in 1i64..100,
            bn in -1000i64..1000, bd in 1i64..100,
        ) {
            use num_integer::Integer;
            let c = rat(an, ad) + rat(bn, bd);
            prop_assert!(c.denom() > &BigInt::zero());
            prop_assert_eq!(c.numer().gcd(c.denom()), BigInt::one());
        }
    }
}
