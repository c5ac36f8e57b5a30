//! Closed-form evaluation of hyper-Catalan numbers, multiparameter
//! Fuss-Catalan powers, Fuss numbers, and the two proven Geode closed forms.
//!
//! Everything here is a straight factorial quotient over big integers. Each
//! quotient is checked for exact divisibility and panics on violation, so a
//! transcription error in a formula cannot produce a silently wrong natural.

use num_bigint::BigUint;

use crate::numeric::{exact_div, factorial};
use crate::typevec::TypeVec;

/// The number of subdigons of type `m`:
/// `(2m2 + 3m3 + ...)! / [(1 + m2 + 2m3 + ...)! * m2! * m3! * ...]`.
pub fn hyper_catalan(m: &TypeVec) -> BigUint {
    fuss_catalan_power(m, 1)
}

/// `C_m^(r) = [t^m] S^r`, the multiparameter Fuss-Catalan number:
/// `r * (r - 1 + 2m2 + 3m3 + ...)! / [(r + m2 + 2m3 + ...)! * m2! * m3! * ...]`.
pub fn fuss_catalan_power(m: &TypeVec, r: u64) -> BigUint {
    assert!(r >= 1, "power must be at least 1");
    let weight = m.weight(); // 2m2 + 3m3 + ...
    let shifted: u64 = m.iter().map(|(k, mult)| (k as u64 - 1) * mult as u64).sum(); // m2 + 2m3 + ...
    let mut den = factorial(r + shifted);
    for (_, mult) in m.iter() {
        den *= factorial(mult as u64);
    }
    exact_div(BigUint::from(r) * factorial(r - 1 + weight), den)
}

/// Fuss number `C(m * kvec)`: subdivisions into `m` copies of a `(k+1)`-gon.
/// `k = 2` gives the Catalan numbers.
pub fn fuss_number(k: u32, m: u32) -> BigUint {
    hyper_catalan(&TypeVec::single(k, m))
}

/// Geode Bi-Tri closed form:
/// `H(m,n) = (2m+3n+3)! / [(2m+2n+3)(m+n+1) (m+2n+2)! m! n!]`, equal to
/// the Geode coefficient `G[m,n]`.
pub fn geode_bi_tri_closed(m: u64, n: u64) -> BigUint {
    let num = factorial(2 * m + 3 * n + 3);
    let den = BigUint::from(2 * m + 2 * n + 3)
        * BigUint::from(m + n + 1)
        * factorial(m + 2 * n + 2)
        * factorial(m)
        * factorial(n);
    exact_div(num, den)
}

/// Two-consecutive-shapes closed form:
/// `H(k,m,n) = (km + (k+1)(n+1))! / [(k(m+n+1)+1)(m+n+1) ((k-1)m + k(n+1))! m! n!]`,
/// equal to the Geode coefficient `G(m*kvec + n*(k+1)vec)`.
pub fn geode_consecutive_closed(k: u64, m: u64, n: u64) -> BigUint {
    assert!(k >= 2, "shape index must be at least 2");
    let num = factorial(k * m + (k + 1) * (n + 1));
    let den = BigUint::from(k * (m + n + 1) + 1)
        * BigUint::from(m + n + 1)
        * factorial((k - 1) * m + k * (n + 1))
        * factorial(m)
        * factorial(n);
    exact_div(num, den)
}
