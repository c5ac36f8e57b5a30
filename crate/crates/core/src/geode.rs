//! Construction of the Geode G and Gessel's auxiliary arrays U and H by
//! series operations, plus the alternating and zero-sum evaluation identities.
//!
//! G is the unique series with `S - 1 = S1 * G`; U is `1 - S^{-1}`; H is
//! `U / S1 = G / S`. All three have natural coefficients, and a negative
//! coefficient anywhere is treated as a fatal integrity failure rather than
//! an error value.

use num_bigint::{BigInt, Sign};
use num_traits::One;

use crate::error::{Error, Result};
use crate::series::{BuildMethod, MonomialRule, PolySeries, Truncation};
use crate::typevec::TypeVec;

/// The Geode: `(S - 1) / S1`, defined one face level below the truncation
/// used for S. A division failure would falsify the Geode factorization at
/// truncation scale, so it aborts.
pub fn build_g(trunc: Truncation) -> PolySeries {
    assert!(
        trunc.max_faces >= 1,
        "the Geode needs at least one face level"
    );
    let s = PolySeries::build_s(trunc, BuildMethod::ClosedForm);
    let numerator = s.sub(&PolySeries::one(trunc)).expect("same truncation");
    let g = numerator
        .divide_by_s1()
        .expect("S - 1 must be a multiple of S1 (Geode factorization)");
    assert_natural(&g, "G");
    g
}

/// Gessel's U: `1 - S^{-1}`, with natural coefficients.
pub fn build_u(trunc: Truncation) -> PolySeries {
    let s = PolySeries::build_s(trunc, BuildMethod::ClosedForm);
    let inv = s.inverse().expect("S has constant term 1");
    let u = PolySeries::one(trunc).sub(&inv).expect("same truncation");
    assert_natural(&u, "U");
    u
}

/// Gessel's H: `U / S1 = G / S`, with natural coefficients, defined one face
/// level below the truncation used for S.
pub fn build_h(trunc: Truncation) -> PolySeries {
    assert!(trunc.max_faces >= 1, "H needs at least one face level");
    let u = build_u(trunc);
    let h = u.divide_by_s1().expect("U must be a multiple of S1");
    assert_natural(&h, "H");
    h
}

fn assert_natural(series: &PolySeries, name: &str) {
    for (m, c) in series.terms() {
        assert!(
            c.sign() != Sign::Minus,
            "{name} has a negative coefficient {c} at {m}"
        );
    }
}

/// `1 - sum_{n=2..K} t_n (S + S^2 + ... + S^{n-1})`, the inverse of H under
/// the truncation (t2-start convention).
pub fn h_inverse_factor(s: &PolySeries) -> PolySeries {
    let trunc = s.truncation();
    let mut acc = PolySeries::one(trunc);
    let mut power = s.clone();
    let mut power_sum = s.clone();
    for n in 2..=trunc.max_gon {
        if n > 2 {
            power = power.mul(s).expect("same truncation");
            power_sum = power_sum.add(&power).expect("same truncation");
        }
        let shifted = power_sum.mul_monomial(&TypeVec::basis(n), &BigInt::one());
        acc = acc.sub(&shifted).expect("same truncation");
    }
    acc
}

/// Substitute `t_2 = -f, t_3 = +f, ..., t_{2k+1} = +f` (all higher variables
/// zero) into G and return the f-coefficients `c_0 ..= c_max_level`. Gessel's
/// theorem says `c_n = k^n`; the caller compares against
/// [`geometric_f_coefficients`] so both sides are computed.
pub fn alternating_geode_eval(k_pairs: u32, max_level: u32) -> Vec<BigInt> {
    assert!(k_pairs >= 1, "need at least one pair of parameters");
    let max_gon = 2 * k_pairs + 1;
    let g = build_g(Truncation::new(max_level + 1, max_gon));
    let substituted = g.substitute(|n| MonomialRule {
        // t_n -> (-1)^{n-1} f
        coeff: if n % 2 == 0 {
            BigInt::from(-1)
        } else {
            BigInt::one()
        },
        v_pow: 0,
        f_pow: 1,
        keep_t: false,
    });
    (0..=max_level)
        .map(|f| substituted.coefficient(0, f))
        .collect()
}

/// Substitute `t_k -> c_k * f` (weights summing to zero) into G and return
/// the f-coefficients `c_0 ..= c_max_level`. Gessel's zero-sum identity says
/// these match the expansion of `(1 - (sum_k k c_k) f)^{-1}`, graded by face
/// count.
pub fn zero_sum_geode_eval(weights: &[i64], max_level: u32) -> Result<Vec<BigInt>> {
    assert!(!weights.is_empty(), "need weights for t2 ..");
    if weights.iter().sum::<i64>() != 0 {
        return Err(Error::NonzeroWeightSum);
    }
    let max_gon = weights.len() as u32 + 1;
    let g = build_g(Truncation::new(max_level + 1, max_gon));
    let substituted = g.substitute(|k| MonomialRule {
        coeff: BigInt::from(weights[(k - 2) as usize]),
        v_pow: 0,
        f_pow: 1,
        keep_t: false,
    });
    Ok((0..=max_level)
        .map(|f| substituted.coefficient(0, f))
        .collect())
}

/// f-coefficients of `(1 - w f)^{-1}`, i.e. `w^n`: the closed-form side of
/// both Gessel evaluation identities.
pub fn geometric_f_coefficients(w: i64, max_level: u32) -> Vec<BigInt> {
    let w = BigInt::from(w);
    let mut out = Vec::with_capacity(max_level as usize + 1);
    let mut acc = BigInt::one();
    for _ in 0..=max_level {
        out.push(acc.clone());
        acc *= &w;
    }
    out
}

/// `sum_k k * c_k`, the weight appearing in the zero-sum identity.
pub fn weighted_gon_sum(weights: &[i64]) -> i64 {
    weights
        .iter()
        .enumerate()
        .map(|(i, &c)| (i as i64 + 2) * c)
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closedform::fuss_number;
    use crate::recurrence::{geode_recurrence_value, XStrategy};

    fn tv(dense: &[u32]) -> TypeVec {
        TypeVec::from_dense(dense)
    }

    fn int(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn g_constant_and_face_one() {
        let g = build_g(Truncation::new(3, 4));
        assert_eq!(g.coefficient(&TypeVec::empty()), int(1));
        assert_eq!(g.coefficient(&tv(&[1])), int(2));
        assert_eq!(g.coefficient(&tv(&[0, 1])), int(3));
        assert_eq!(g.coefficient(&tv(&[0, 0, 1])), int(4));
    }

    #[test]
    fn g_face_two_coefficients() {
        let g = build_g(Truncation::new(3, 4));
        assert_eq!(g.coefficient(&tv(&[2])), int(5));
        assert_eq!(g.coefficient(&tv(&[1, 1])), int(16));
        assert_eq!(g.coefficient(&tv(&[0, 0, 2])), int(22));
    }

    #[test]
    fn g_matches_recurrence() {
        let g = build_g(Truncation::new(5, 4));
        for m in g.truncation().all_types() {
            let via_recurrence =
                geode_recurrence_value(&m, XStrategy::LargestComponentSmallestIndex).unwrap();
            assert_eq!(g.coefficient(&m), BigInt::from(via_recurrence), "type {m}");
        }
    }

    #[test]
    fn g_single_shape_coefficients_are_fuss_numbers() {
        let g = build_g(Truncation::new(5, 5));
        for k in 2..=5u32 {
            for m in 0..=4u32 {
                let ty = TypeVec::single(k, m);
                assert_eq!(
                    g.coefficient(&ty),
                    BigInt::from(fuss_number(k, m + 1)),
                    "G({m}*vec{k})"
                );
            }
        }
    }

    #[test]
    fn u_starts_at_face_one_with_s_level_one() {
        let trunc = Truncation::new(4, 4);
        let u = build_u(trunc);
        assert_eq!(u.coefficient(&TypeVec::empty()), int(0));
        assert_eq!(u.coefficient(&tv(&[1])), int(1));
        // U * S = S - 1
        let s = PolySeries::build_s(trunc, BuildMethod::ClosedForm);
        let lhs = u.mul(&s).unwrap();
        let rhs = s.sub(&PolySeries::one(trunc)).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn h_identities_under_truncation() {
        let trunc = Truncation::new(5, 5);
        let inner = Truncation::new(4, 5);
        let h = build_h(trunc);
        let g = build_g(trunc);
        let u = build_u(trunc);
        let s = PolySeries::build_s(trunc, BuildMethod::ClosedForm).restrict(inner);
        assert_eq!(h.mul(&s).unwrap(), g);
        assert_eq!(h.mul(&PolySeries::s1(inner)).unwrap(), u.restrict(inner));
    }

    #[test]
    fn h_inverse_identity() {
        let inner = Truncation::new(4, 5);
        let h = build_h(Truncation::new(5, 5));
        let s = PolySeries::build_s(inner, BuildMethod::ClosedForm);
        let product = h.mul(&h_inverse_factor(&s)).unwrap();
        assert_eq!(product, PolySeries::one(inner));
    }

    #[test]
    fn h_vertex_layer_three() {
        // frozen from the vertex layering display: v^3 layer of H
        let h = build_h(Truncation::new(4, 5));
        let layered = h.substitute(|k| MonomialRule {
            coeff: BigInt::one(),
            v_pow: k - 1,
            f_pow: 0,
            keep_t: true,
        });
        let layers = layered.layers_by_v();
        let v3 = layers.get(&3).unwrap();
        assert_eq!(v3.get(&tv(&[3])), Some(&int(5)));
        assert_eq!(v3.get(&tv(&[1, 1])), Some(&int(8)));
        assert_eq!(v3.get(&tv(&[0, 0, 1])), Some(&int(3)));
        assert_eq!(v3.len(), 3);
    }

    #[test]
    fn alternating_eval_one_pair() {
        // hand check at level 1: -G[1] + G[0,1] = -2 + 3 = 1,
        // level 2: G[2] - G[1,1] + G[0,2] = 5 - 16 + 12 = 1
        assert_eq!(
            alternating_geode_eval(1, 3),
            vec![int(1), int(1), int(1), int(1)]
        );
    }

    #[test]
    fn alternating_eval_matches_powers() {
        for k in 1..=3u32 {
            let got = alternating_geode_eval(k, 4);
            assert_eq!(got, geometric_f_coefficients(k as i64, 4), "k={k}");
        }
    }

    #[test]
    fn zero_sum_eval_examples() {
        // weights (1,-1): sum k*c_k = 2 - 3 = -1, so coefficients (-1)^n
        assert_eq!(
            zero_sum_geode_eval(&[1, -1], 4).unwrap(),
            geometric_f_coefficients(-1, 4)
        );
        // weights (-1,1) is the one-pair alternating evaluation
        assert_eq!(
            zero_sum_geode_eval(&[-1, 1], 4).unwrap(),
            geometric_f_coefficients(1, 4)
        );
        // weights (2,-2): sum k*c_k = 4 - 6 = -2
        assert_eq!(
            zero_sum_geode_eval(&[2, -2], 4).unwrap(),
            geometric_f_coefficients(-2, 4)
        );
        assert_eq!(weighted_gon_sum(&[2, -2]), -2);
    }

    #[test]
    fn zero_sum_eval_rejects_unbalanced_weights() {
        assert!(matches!(
            zero_sum_geode_eval(&[1, 1], 3),
            Err(Error::NonzeroWeightSum)
        ));
    }
}
