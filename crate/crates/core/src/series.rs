//! Truncated sparse multivariate formal power series over big integers.
//!
//! A [`PolySeries`] is a finite map from type vectors to integer coefficients,
//! valid under a stated [`Truncation`] (a face bound and a gon bound). All
//! arithmetic is exact; terms that fall outside the truncation are dropped.
//! This is the computational stand-in for the unbounded generating series
//! `S = sum_m C_m t^m` and its relatives.
//!
//! Binary operations require *identical* truncations. There is no implicit
//! coercion; [`PolySeries::restrict`] shrinks a series explicitly.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::closedform::hyper_catalan;
use crate::error::{Error, Result};
use crate::typevec::TypeVec;

/// Grading bound: a type `m` is inside iff `faces(m) <= max_faces` and every
/// nonzero component has gon index `<= max_gon`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Truncation {
    pub max_faces: u32,
    pub max_gon: u32,
}

impl Truncation {
    pub fn new(max_faces: u32, max_gon: u32) -> Self {
        assert!(max_gon >= 2, "max_gon must be at least 2");
        Truncation { max_faces, max_gon }
    }

    pub fn contains(&self, m: &TypeVec) -> bool {
        m.faces() <= self.max_faces && m.max_gon().is_none_or(|k| k <= self.max_gon)
    }

    /// All types with exactly `faces` faces and gons within the bound,
    /// in descending lex order.
    pub fn types_at_level(&self, faces: u32) -> Vec<TypeVec> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        collect_types(2, self.max_gon, faces, &mut current, &mut out);
        out.sort_by(|a, b| b.lex_cmp(a));
        out
    }

    /// All inside types, level by level.
    pub fn all_types(&self) -> Vec<TypeVec> {
        (0..=self.max_faces)
            .flat_map(|d| self.types_at_level(d))
            .collect()
    }

    fn shrink_faces(&self, max_faces: u32) -> Truncation {
        Truncation {
            max_faces,
            max_gon: self.max_gon,
        }
    }
}

fn collect_types(
    k: u32,
    max_gon: u32,
    remaining: u32,
    current: &mut Vec<(u32, u32)>,
    out: &mut Vec<TypeVec>,
) {
    if remaining == 0 {
        out.push(current.iter().fold(TypeVec::empty(), |acc, &(gon, mult)| {
            acc.add(&TypeVec::single(gon, mult))
        }));
        return;
    }
    if k > max_gon {
        return;
    }
    for mult in (0..=remaining).rev() {
        if mult > 0 {
            current.push((k, mult));
        }
        collect_types(k + 1, max_gon, remaining - mult, current, out);
        if mult > 0 {
            current.pop();
        }
    }
}

/// How to construct the hyper-Catalan series S.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BuildMethod {
    /// Fill every inside type with its closed-form count.
    ClosedForm,
    /// Iterate `S <- 1 + sum_k t_k S^k` from `S = 1` until stable.
    FixedPoint,
}

/// Finite truncated series: map from type vectors to nonzero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolySeries {
    trunc: Truncation,
    terms: BTreeMap<TypeVec, BigInt>,
}

impl PolySeries {
    pub fn zero(trunc: Truncation) -> Self {
        PolySeries {
            trunc,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(trunc: Truncation) -> Self {
        PolySeries::monomial(trunc, TypeVec::empty(), BigInt::one())
    }

    /// Single term `c * t^m`; the zero series when `m` is outside or `c = 0`.
    pub fn monomial(trunc: Truncation, m: TypeVec, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if trunc.contains(&m) && !c.is_zero() {
            terms.insert(m, c);
        }
        PolySeries { trunc, terms }
    }

    /// The face-1 slice `S1 = t2 + t3 + ... + t_maxGon`.
    pub fn s1(trunc: Truncation) -> Self {
        let mut terms = BTreeMap::new();
        if trunc.max_faces >= 1 {
            for k in 2..=trunc.max_gon {
                terms.insert(TypeVec::basis(k), BigInt::one());
            }
        }
        PolySeries { trunc, terms }
    }

    pub fn truncation(&self) -> Truncation {
        self.trunc
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of `t^m` (zero when absent).
    pub fn coefficient(&self, m: &TypeVec) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TypeVec, &BigInt)> {
        self.terms.iter()
    }

    /// Face-homogeneous extraction: terms with exactly `faces` faces.
    pub fn level(&self, faces: u32) -> PolySeries {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.faces() == faces)
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        PolySeries {
            trunc: self.trunc,
            terms,
        }
    }

    /// Shrink to a smaller truncation (both bounds must be `<=` the current).
    pub fn restrict(&self, trunc: Truncation) -> PolySeries {
        assert!(
            trunc.max_faces <= self.trunc.max_faces && trunc.max_gon <= self.trunc.max_gon,
            "restrict only shrinks a truncation"
        );
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| trunc.contains(m))
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        PolySeries { trunc, terms }
    }

    pub fn add(&self, other: &PolySeries) -> Result<PolySeries> {
        if self.trunc != other.trunc {
            return Err(Error::TruncationMismatch);
        }
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            add_term(&mut terms, m.clone(), c.clone());
        }
        Ok(PolySeries {
            trunc: self.trunc,
            terms,
        })
    }

    pub fn sub(&self, other: &PolySeries) -> Result<PolySeries> {
        self.add(&other.scale(&BigInt::from(-1)))
    }

    pub fn scale(&self, c: &BigInt) -> PolySeries {
        if c.is_zero() {
            return PolySeries::zero(self.trunc);
        }
        let terms = self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect();
        PolySeries {
            trunc: self.trunc,
            terms,
        }
    }

    /// Multiply by a single monomial `c * t^m`, dropping out-of-truncation terms.
    pub fn mul_monomial(&self, m: &TypeVec, c: &BigInt) -> PolySeries {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            for (t, v) in &self.terms {
                let shifted = t.add(m);
                if self.trunc.contains(&shifted) {
                    terms.insert(shifted, v * c);
                }
            }
        }
        PolySeries {
            trunc: self.trunc,
            terms,
        }
    }

    /// Exact product truncated by face grade.
    pub fn mul(&self, other: &PolySeries) -> Result<PolySeries> {
        if self.trunc != other.trunc {
            return Err(Error::TruncationMismatch);
        }
        let a = self.levels();
        let b = other.levels();
        let max = self.trunc.max_faces as usize;
        let mut terms: BTreeMap<TypeVec, BigInt> = BTreeMap::new();
        for (da, la) in a.iter().enumerate() {
            if la.is_empty() {
                continue;
            }
            for (db, lb) in b.iter().enumerate() {
                if da + db > max || lb.is_empty() {
                    continue;
                }
                for (ma, ca) in la {
                    for (mb, cb) in lb {
                        add_term(&mut terms, ma.add(mb), ca * cb);
                    }
                }
            }
        }
        Ok(PolySeries {
            trunc: self.trunc,
            terms,
        })
    }

    /// `self^r` (`r = 0` gives the constant series 1).
    pub fn pow(&self, r: u32) -> PolySeries {
        let mut acc = PolySeries::one(self.trunc);
        for _ in 0..r {
            acc = acc.mul(self).expect("same truncation");
        }
        acc
    }

    fn levels(&self) -> Vec<Vec<(TypeVec, BigInt)>> {
        let mut buckets: Vec<Vec<(TypeVec, BigInt)>> =
            vec![Vec::new(); self.trunc.max_faces as usize + 1];
        for (m, c) in &self.terms {
            buckets[m.faces() as usize].push((m.clone(), c.clone()));
        }
        buckets
    }

    /// The hyper-Catalan series S under the given truncation. Both methods
    /// return identical series; their agreement is a test of the geometric
    /// polynomial formula at truncation scale.
    pub fn build_s(trunc: Truncation, method: BuildMethod) -> PolySeries {
        match method {
            BuildMethod::ClosedForm => {
                let terms = trunc
                    .all_types()
                    .into_iter()
                    .map(|m| {
                        let c = BigInt::from(hyper_catalan(&m));
                        (m, c)
                    })
                    .collect();
                PolySeries { trunc, terms }
            }
            BuildMethod::FixedPoint => {
                let mut s = PolySeries::one(trunc);
                // each iteration extends correctness one face level deeper
                for _ in 0..=trunc.max_faces {
                    let next = s.geometric_map();
                    if next == s {
                        break;
                    }
                    s = next;
                }
                s
            }
        }
    }

    /// `1 + sum_{k=2..K} t_k * self^k`, the map whose fixed point is S.
    fn geometric_map(&self) -> PolySeries {
        let mut acc = PolySeries::one(self.trunc);
        let mut power = self.clone();
        for k in 2..=self.trunc.max_gon {
            power = power.mul(self).expect("same truncation");
            let shifted = power.mul_monomial(&TypeVec::basis(k), &BigInt::one());
            acc = acc.add(&shifted).expect("same truncation");
        }
        acc
    }

    /// `1 - self + sum_{k=2..K} t_k * self^k`: the general geometric
    /// polynomial evaluated at this series. Zero exactly when the series
    /// solves it under the truncation.
    pub fn residual_geometric(&self) -> PolySeries {
        let geo = self.geometric_map();
        geo.sub(self).expect("same truncation")
    }

    /// Multiplicative inverse, computed level-by-level in face grade.
    /// Requires constant term 1 (which also makes every level integral).
    pub fn inverse(&self) -> Result<PolySeries> {
        if self.coefficient(&TypeVec::empty()) != BigInt::one() {
            return Err(Error::ConstantTermNotOne);
        }
        let a = self.levels();
        let max = self.trunc.max_faces as usize;
        let mut b: Vec<BTreeMap<TypeVec, BigInt>> = vec![BTreeMap::new(); max + 1];
        b[0].insert(TypeVec::empty(), BigInt::one());
        for d in 1..=max {
            let mut level: BTreeMap<TypeVec, BigInt> = BTreeMap::new();
            for i in 1..=d {
                for (ma, ca) in &a[i] {
                    for (mb, cb) in &b[d - i] {
                        add_term(&mut level, ma.add(mb), -(ca * cb));
                    }
                }
            }
            b[d] = level;
        }
        let mut terms = BTreeMap::new();
        for level in b {
            terms.extend(level);
        }
        Ok(PolySeries {
            trunc: self.trunc,
            terms,
        })
    }

    /// Exact division by `S1 = t2 + ... + t_maxGon`. The quotient is defined
    /// one face level lower than the input. Within each level the leading
    /// monomial (descending lex, t2 heaviest) is divided by t2 and the
    /// multiple of S1 subtracted; a leading monomial without a t2 factor
    /// means the input was not a multiple of S1 under this truncation.
    pub fn divide_by_s1(&self) -> Result<PolySeries> {
        if !self.coefficient(&TypeVec::empty()).is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let trunc = self.trunc;
        let mut quotient: BTreeMap<TypeVec, BigInt> = BTreeMap::new();
        for d in 1..=trunc.max_faces {
            let mut p: BTreeMap<TypeVec, BigInt> = self
                .terms
                .iter()
                .filter(|(m, _)| m.faces() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect();
            while let Some(lead) = p.keys().max_by(|a, b| a.lex_cmp(b)).cloned() {
                let c = p.remove(&lead).expect("lead term present");
                let q = match lead.sub_basis(2) {
                    Ok(q) => q,
                    Err(_) => return Err(Error::NotDivisible { face_level: d }),
                };
                for k in 3..=trunc.max_gon {
                    add_term(&mut p, q.add_basis(k), -&c);
                }
                add_term(&mut quotient, q, c);
            }
        }
        Ok(PolySeries {
            trunc: trunc.shrink_faces(trunc.max_faces.saturating_sub(1)),
            terms: quotient,
        })
    }

    /// Terms sorted by (face level ascending, descending lex): the canonical
    /// listing order used by every serialization.
    pub fn sorted_terms(&self) -> Vec<(TypeVec, BigInt)> {
        let mut out: Vec<(TypeVec, BigInt)> = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        out.sort_by(|(a, _), (b, _)| a.faces().cmp(&b.faces()).then_with(|| b.lex_cmp(a)));
        out
    }

    /// JSON list of `{"type": [m2,..], "coeff": "<decimal>"}` in canonical
    /// order. Coefficients are decimal strings so consumers never overflow.
    pub fn to_json(&self) -> String {
        let entries: Vec<String> = self
            .sorted_terms()
            .iter()
            .map(|(m, c)| format_term_json(m, c))
            .collect();
        format!("[{}]", entries.join(","))
    }
}

/// One `{"type": [...], "coeff": "<decimal>"}` JSON object, shared by every
/// serialization that lists typed coefficients.
pub fn format_term_json(m: &TypeVec, c: &BigInt) -> String {
    let dense: Vec<String> = m.dense().iter().map(|x| x.to_string()).collect();
    format!("{{\"type\":[{}],\"coeff\":\"{}\"}}", dense.join(","), c)
}

fn add_term(terms: &mut BTreeMap<TypeVec, BigInt>, m: TypeVec, c: BigInt) {
    use std::collections::btree_map::Entry;
    if c.is_zero() {
        return;
    }
    match terms.entry(m) {
        Entry::Vacant(e) => {
            e.insert(c);
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

impl fmt::Display for PolySeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .sorted_terms()
            .iter()
            .map(|(m, c)| {
                if m.is_empty() {
                    format!("{c}")
                } else {
                    let mono: Vec<String> = m
                        .iter()
                        .map(|(k, e)| {
                            if e == 1 {
                                format!("t{k}")
                            } else {
                                format!("t{k}^{e}")
                            }
                        })
                        .collect();
                    if c == &BigInt::one() {
                        mono.join("*")
                    } else if c == &BigInt::from(-1) {
                        format!("-{}", mono.join("*"))
                    } else {
                        format!("{c}*{}", mono.join("*"))
                    }
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Image of one variable under a monomial substitution: `t_k` maps to
/// `coeff * v^v_pow * f^f_pow * (t_k if keep_t)`.
#[derive(Debug, Clone)]
pub struct MonomialRule {
    pub coeff: BigInt,
    pub v_pow: u32,
    pub f_pow: u32,
    pub keep_t: bool,
}

/// Result of substituting monomials for the `t_k`: coefficients collected by
/// the two fresh variables and whatever part of the original monomial was kept.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Substituted {
    terms: BTreeMap<(u32, u32, TypeVec), BigInt>,
}

impl Substituted {
    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32, TypeVec), &BigInt)> {
        self.terms.iter()
    }

    /// Coefficient of `v^i f^j` with an empty kept part.
    pub fn coefficient(&self, v: u32, f: u32) -> BigInt {
        self.terms
            .get(&(v, f, TypeVec::empty()))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// Coefficients by v-degree, 0..=max. Valid when nothing was kept and no
    /// f powers were produced.
    pub fn univariate_v(&self) -> Vec<BigInt> {
        let max = self.terms.keys().map(|&(v, _, _)| v).max().unwrap_or(0);
        (0..=max).map(|v| self.coefficient(v, 0)).collect()
    }

    /// Rows by v-degree; each row lists f-coefficients ascending from f^0.
    pub fn rows_v_by_f(&self) -> Vec<Vec<BigInt>> {
        let max_v = self.terms.keys().map(|&(v, _, _)| v).max().unwrap_or(0);
        (0..=max_v)
            .map(|v| {
                let max_f = self
                    .terms
                    .keys()
                    .filter(|&&(tv, _, _)| tv == v)
                    .map(|&(_, f, _)| f)
                    .max()
                    .unwrap_or(0);
                (0..=max_f).map(|f| self.coefficient(v, f)).collect()
            })
            .collect()
    }

    /// Kept-monomial layers keyed by v-degree (vertex layerings).
    pub fn layers_by_v(&self) -> BTreeMap<u32, BTreeMap<TypeVec, BigInt>> {
        let mut out: BTreeMap<u32, BTreeMap<TypeVec, BigInt>> = BTreeMap::new();
        for (&(v, _, ref kept), c) in &self.terms {
            out.entry(v).or_default().insert(kept.clone(), c.clone());
        }
        out
    }

    /// Kept-monomial layers keyed by f-degree (face layerings).
    pub fn layers_by_f(&self) -> BTreeMap<u32, BTreeMap<TypeVec, BigInt>> {
        let mut out: BTreeMap<u32, BTreeMap<TypeVec, BigInt>> = BTreeMap::new();
        for (&(_, f, ref kept), c) in &self.terms {
            out.entry(f).or_default().insert(kept.clone(), c.clone());
        }
        out
    }
}

impl PolySeries {
    /// Replace each `t_k` by `rule(k)` and collect coefficients in the fresh
    /// variables, retaining the original monomial where the rule keeps it.
    pub fn substitute<F: Fn(u32) -> MonomialRule>(&self, rule: F) -> Substituted {
        let mut terms: BTreeMap<(u32, u32, TypeVec), BigInt> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut v: u32 = 0;
            let mut f: u32 = 0;
            let mut kept = TypeVec::empty();
            for (k, mult) in m.iter() {
                let r = rule(k);
                if r.coeff.is_zero() {
                    coeff = BigInt::zero();
                    break;
                }
                coeff *= r.coeff.pow(mult);
                v += r.v_pow * mult;
                f += r.f_pow * mult;
                if r.keep_t {
                    kept = kept.add(&TypeVec::single(k, mult));
                }
            }
            if coeff.is_zero() {
                continue;
            }
            use std::collections::btree_map::Entry;
            match terms.entry((v, f, kept)) {
                Entry::Vacant(e) => {
                    e.insert(coeff);
                }
                Entry::Occupied(mut e) => {
                    *e.get_mut() += coeff;
                    if e.get().is_zero() {
                        e.remove();
                    }
                }
            }
        }
        Substituted { terms }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tv(dense: &[u32]) -> TypeVec {
        TypeVec::from_dense(dense)
    }

    fn int(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn mul_binomial_square() {
        let tr = Truncation::new(2, 2);
        let one_plus_t2 = PolySeries::one(tr)
            .add(&PolySeries::monomial(tr, tv(&[1]), int(1)))
            .unwrap();
        let sq = one_plus_t2.mul(&one_plus_t2).unwrap();
        assert_eq!(sq.coefficient(&tv(&[])), int(1));
        assert_eq!(sq.coefficient(&tv(&[1])), int(2));
        assert_eq!(sq.coefficient(&tv(&[2])), int(1));
    }

    #[test]
    fn pow_one_is_identity() {
        let tr = Truncation::new(4, 4);
        let s = PolySeries::build_s(tr, BuildMethod::ClosedForm);
        assert_eq!(s.pow(1), s);
    }

    #[test]
    fn pow_three_reads_published_coefficient() {
        let tr = Truncation::new(3, 4);
        let s = PolySeries::build_s(tr, BuildMethod::ClosedForm);
        assert_eq!(s.pow(3).coefficient(&tv(&[1, 0, 2])), int(198));
    }

    #[test]
    fn truncation_mismatch_is_an_error() {
        let a = PolySeries::one(Truncation::new(2, 2));
        let b = PolySeries::one(Truncation::new(2, 3));
        assert!(matches!(a.add(&b), Err(Error::TruncationMismatch)));
        assert!(matches!(a.mul(&b), Err(Error::TruncationMismatch)));
    }

    #[test]
    fn build_s_level_one_is_s1() {
        let tr = Truncation::new(3, 5);
        let s = PolySeries::build_s(tr, BuildMethod::ClosedForm);
        assert_eq!(s.level(1), PolySeries::s1(tr).level(1));
        for k in 2..=5 {
            assert_eq!(s.coefficient(&TypeVec::basis(k)), int(1));
        }
    }

    #[test]
    fn build_s_level_two_matches_face_layering() {
        let tr = Truncation::new(2, 4);
        let s = PolySeries::build_s(tr, BuildMethod::ClosedForm);
        let expected = [
            (&[2][..], 2),
            (&[1, 1][..], 5),
            (&[0, 2][..], 3),
            (&[1, 0, 1][..], 6),
            (&[0, 1, 1][..], 7),
            (&[0, 0, 2][..], 4),
        ];
        for (dense, c) in expected {
            assert_eq!(s.coefficient(&tv(dense)), int(c), "t^{:?}", dense);
        }
        assert_eq!(s.level(2).num_terms(), 6);
    }

    #[test]
    fn build_s_trivial_truncation() {
        let tr = Truncation::new(0, 2);
        assert_eq!(
            PolySeries::build_s(tr, BuildMethod::ClosedForm),
            PolySeries::one(tr)
        );
        assert_eq!(
            PolySeries::build_s(tr, BuildMethod::FixedPoint),
            PolySeries::one(tr)
        );
    }

    #[test]
    fn both_build_methods_agree() {
        for (d, k) in [(3, 3), (4, 4), (5, 3), (4, 6)] {
            let tr = Truncation::new(d, k);
            assert_eq!(
                PolySeries::build_s(tr, BuildMethod::ClosedForm),
                PolySeries::build_s(tr, BuildMethod::FixedPoint),
                "D={d} K={k}"
            );
        }
    }

    #[test]
    fn residual_of_s_is_zero() {
        let tr = Truncation::new(5, 5);
        let s = PolySeries::build_s(tr, BuildMethod::ClosedForm);
        assert!(s.residual_geometric().is_zero());
    }

    #[test]
    fn residual_of_constant_one_is_s1() {
        let tr = Truncation::new(3, 4);
        let r = PolySeries::one(tr).residual_geometric();
        assert_eq!(r, PolySeries::s1(tr));
    }

    #[test]
    fn residual_of_one_plus_t2() {
        // frozen by hand: 1 - (1+t2) + t2*(1+t2)^2 = 2*t2^2 + t2^3,
        // truncated at two faces to 2*t2^2
        let tr = Truncation::new(2, 2);
        let s = PolySeries::one(tr)
            .add(&PolySeries::monomial(tr, tv(&[1]), int(1)))
            .unwrap();
        let r = s.residual_geometric();
        assert_eq!(r, PolySeries::monomial(tr, tv(&[2]), int(2)));
    }

    #[test]
    fn inverse_of_one() {
        let tr = Truncation::new(3, 3);
        let one = PolySeries::one(tr);
        assert_eq!(one.inverse().unwrap(), one);
    }

    #[test]
    fn inverse_of_one_minus_t2_is_geometric() {
        let tr = Truncation::new(4, 2);
        let a = PolySeries::one(tr)
            .add(&PolySeries::monomial(tr, tv(&[1]), int(-1)))
            .unwrap();
        let inv = a.inverse().unwrap();
        for d in 0..=4 {
            assert_eq!(inv.coefficient(&tv(&[d])), int(1));
        }
        assert_eq!(inv.num_terms(), 5);
    }

    #[test]
    fn inverse_is_a_ring_inverse() {
        let tr = Truncation::new(4, 4);
        let s = PolySeries::build_s(tr, BuildMethod::ClosedForm);
        let prod = s.mul(&s.inverse().unwrap()).unwrap();
        assert_eq!(prod, PolySeries::one(tr));
    }

    #[test]
    fn inverse_requires_constant_one() {
        let tr = Truncation::new(2, 2);
        let two = PolySeries::monomial(tr, tv(&[]), int(2));
        assert!(matches!(two.inverse(), Err(Error::ConstantTermNotOne)));
    }

    #[test]
    fn divide_s1_by_itself() {
        let tr = Truncation::new(3, 4);
        let q = PolySeries::s1(tr).divide_by_s1().unwrap();
        assert_eq!(q.coefficient(&tv(&[])), int(1));
        assert_eq!(q.num_terms(), 1);
        assert_eq!(q.truncation(), Truncation::new(2, 4));
    }

    #[test]
    fn divide_level_two_of_s_minus_one() {
        let tr = Truncation::new(2, 4);
        let s = PolySeries::build_s(tr, BuildMethod::ClosedForm);
        let q = s.level(2).divide_by_s1().unwrap();
        assert_eq!(q.coefficient(&tv(&[1])), int(2));
        assert_eq!(q.coefficient(&tv(&[0, 1])), int(3));
        assert_eq!(q.coefficient(&tv(&[0, 0, 1])), int(4));
        assert_eq!(q.num_terms(), 3);
    }

    #[test]
    fn divide_level_three_of_s_minus_one() {
        let tr = Truncation::new(3, 4);
        let s = PolySeries::build_s(tr, BuildMethod::ClosedForm);
        let q = s.level(3).divide_by_s1().unwrap();
        let expected = [
            (&[2][..], 5),
            (&[1, 1][..], 16),
            (&[0, 2][..], 12),
            (&[1, 0, 1][..], 23),
            (&[0, 1, 1][..], 33),
            (&[0, 0, 2][..], 22),
        ];
        for (dense, c) in expected {
            assert_eq!(q.coefficient(&tv(dense)), int(c), "t^{:?}", dense);
        }
        assert_eq!(q.num_terms(), 6);
    }

    #[test]
    fn division_rejects_non_multiples() {
        let tr = Truncation::new(2, 3);
        // t3^2 alone is not a multiple of t2 + t3
        let p = PolySeries::monomial(tr, tv(&[0, 2]), int(1));
        assert!(matches!(
            p.divide_by_s1(),
            Err(Error::NotDivisible { face_level: 2 })
        ));
    }

    #[test]
    fn division_requires_zero_constant() {
        let tr = Truncation::new(2, 2);
        let p = PolySeries::one(tr);
        assert!(matches!(p.divide_by_s1(), Err(Error::NonzeroConstantTerm)));
    }

    #[test]
    fn substitute_little_schroeder() {
        // t_k -> v^{k-1} on S projects to the Little Schroeder numbers
        let tr = Truncation::new(4, 5);
        let s = PolySeries::build_s(tr, BuildMethod::ClosedForm);
        let subst = s.substitute(|k| MonomialRule {
            coeff: BigInt::one(),
            v_pow: k - 1,
            f_pow: 0,
            keep_t: false,
        });
        let coeffs = subst.univariate_v();
        assert_eq!(&coeffs[0..5], &[int(1), int(1), int(3), int(11), int(45)]);
    }

    #[test]
    fn json_is_canonically_ordered() {
        let tr = Truncation::new(2, 3);
        let s = PolySeries::build_s(tr, BuildMethod::ClosedForm);
        assert_eq!(
            s.to_json(),
            "[{\"type\":[],\"coeff\":\"1\"},\
{\"type\":[1],\"coeff\":\"1\"},\
{\"type\":[0,1],\"coeff\":\"1\"},\
{\"type\":[2],\"coeff\":\"2\"},\
{\"type\":[1,1],\"coeff\":\"5\"},\
{\"type\":[0,2],\"coeff\":\"3\"}]"
        );
    }
}
