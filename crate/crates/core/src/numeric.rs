//! Exact factorials, binomials and multinomials over big integers.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

/// `n!` by plain product; arguments here stay in the low hundreds.
pub fn factorial(n: u64) -> BigUint {
    let mut acc = BigUint::one();
    for i in 2..=n {
        acc *= i;
    }
    acc
}

/// `C(n, k)` for naturals, multiplicative form (exact at every step).
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Generalized `C(x, k)` via falling powers: `x(x-1)...(x-k+1) / k!`.
/// Defined for any integer top, matching the convention for negative tops.
pub fn binomial_falling(x: &BigInt, k: u64) -> BigInt {
    let mut num = BigInt::one();
    for i in 0..k {
        num *= x - BigInt::from(i);
    }
    num / BigInt::from(factorial(k))
}

/// Multinomial coefficient `(sum parts)! / prod parts!` as a product of
/// binomials.
pub fn multinomial(parts: &[u32]) -> BigUint {
    let mut acc = BigUint::one();
    let mut total: u64 = 0;
    for &p in parts {
        total += p as u64;
        acc *= binomial(total, p as u64);
    }
    acc
}

/// Exact quotient; panics when the division leaves a remainder. The closed
/// forms in this crate are integral by theorem, so a remainder means the
/// formula was transcribed wrong.
pub fn exact_div(num: BigUint, den: BigUint) -> BigUint {
    let (q, r) = num_integer::Integer::div_rem(&num, &den);
    assert!(r.is_zero(), "inexact division: {num} / {den}");
    q
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_factorials() {
        assert_eq!(factorial(0), BigUint::one());
        assert_eq!(factorial(5), BigUint::from(120u32));
        assert_eq!(factorial(10), BigUint::from(3628800u32));
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(4, 2), BigUint::from(6u32));
        assert_eq!(binomial(10, 5), BigUint::from(252u32));
        assert_eq!(binomial(3, 5), BigUint::zero());
        assert_eq!(binomial(503, 1), BigUint::from(503u32));
    }

    #[test]
    fn falling_binomial_matches_natural_tops_and_extends() {
        assert_eq!(binomial_falling(&BigInt::from(8), 3), BigInt::from(56));
        // C(-1, k) = (-1)^k
        assert_eq!(binomial_falling(&BigInt::from(-1), 4), BigInt::from(1));
        assert_eq!(binomial_falling(&BigInt::from(-1), 5), BigInt::from(-1));
        assert_eq!(binomial_falling(&BigInt::from(-2), 2), BigInt::from(3));
    }

    #[test]
    fn multinomial_values() {
        assert_eq!(multinomial(&[1, 1]), BigUint::from(2u32)); // binom(2;1,1)
        assert_eq!(multinomial(&[2, 1]), BigUint::from(3u32)); // binom(3;2,1)
        assert_eq!(multinomial(&[1, 1, 1]), BigUint::from(6u32));
        assert_eq!(multinomial(&[]), BigUint::one());
    }
}
