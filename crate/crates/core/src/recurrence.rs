//! Recurrences: hyper-Catalan numbers via vector partitions, the Geode
//! recurrence with pluggable index strategies, expansion of Geode
//! coefficients into signed hyper-Catalan combinations, and the classical
//! convolution and lesser-sum checks.
//!
//! Memoization tables live in per-computation sessions, so concurrent
//! computations never contend.

use std::collections::HashMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{CheckedSub, One, Zero};

use crate::closedform::{fuss_number, hyper_catalan};
use crate::error::{Error, Result};
use crate::numeric::multinomial;
use crate::typevec::TypeVec;

/// Default expansion budget for the Geode recurrence. The largest-component
/// strategy terminates long before this; constant-index strategies come with
/// no termination proof, so the guard converts a runaway into an error.
pub const DEFAULT_GEODE_BUDGET: u64 = 1_000_000;

/// A way of writing a target type as `sum k_n * n` with a prescribed number
/// of parts. The null part `[]` is allowed and carries `C_[] = 1` factors;
/// without it the hyper-Catalan recurrence would be wrong.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VectorPartition {
    /// Distinct parts with their multiplicities, descending lex, `[]` last.
    parts: Vec<(TypeVec, u32)>,
}

impl VectorPartition {
    pub fn parts(&self) -> &[(TypeVec, u32)] {
        &self.parts
    }

    pub fn part_count(&self) -> u32 {
        self.parts.iter().map(|&(_, k)| k).sum()
    }

    pub fn target(&self) -> TypeVec {
        self.parts
            .iter()
            .fold(TypeVec::empty(), |acc, (n, k)| acc.add(&n.scale(*k)))
    }

    /// `multinomial(j; k) * prod C_n^{k_n}`, this partition's contribution to
    /// the recurrence.
    pub fn recurrence_term(&self) -> BigUint {
        let counts: Vec<u32> = self.parts.iter().map(|&(_, k)| k).collect();
        let mut term = multinomial(&counts);
        for (n, k) in &self.parts {
            term *= hyper_catalan(n).pow(*k);
        }
        term
    }
}

impl fmt::Display for VectorPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .parts
            .iter()
            .map(|(n, k)| {
                if *k == 1 {
                    format!("{n}")
                } else {
                    format!("{k}*{n}")
                }
            })
            .collect();
        write!(f, "{{{}}}", parts.join(" + "))
    }
}

/// All ways to write `m = sum k_n * n` with exactly `parts` parts, the null
/// vector allowed as a part. Exhaustive, duplicate-free, deterministic order.
pub fn vector_partitions(m: &TypeVec, parts: u32) -> Vec<VectorPartition> {
    assert!(parts >= 1, "a partition needs at least one part");
    let mut candidates = sub_vectors(m);
    candidates.retain(|c| !c.is_empty());
    candidates.sort_by(|a, b| b.lex_cmp(a));
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    partition_rec(&candidates, 0, m.clone(), parts, &mut chosen, &mut out);
    out
}

/// All componentwise-dominated vectors `n <= m`, including the empty one.
fn sub_vectors(m: &TypeVec) -> Vec<TypeVec> {
    let support: Vec<(u32, u32)> = m.iter().collect();
    let mut out = vec![TypeVec::empty()];
    for (k, max_mult) in support {
        let mut next = Vec::with_capacity(out.len() * (max_mult as usize + 1));
        for base in &out {
            for mult in 0..=max_mult {
                next.push(base.add(&TypeVec::single(k, mult)));
            }
        }
        out = next;
    }
    out
}

fn partition_rec(
    candidates: &[TypeVec],
    idx: usize,
    remaining: TypeVec,
    parts_left: u32,
    chosen: &mut Vec<(TypeVec, u32)>,
    out: &mut Vec<VectorPartition>,
) {
    if remaining.is_empty() {
        let mut parts = chosen.clone();
        if parts_left > 0 {
            parts.push((TypeVec::empty(), parts_left));
        }
        out.push(VectorPartition { parts });
        return;
    }
    if parts_left == 0 || idx == candidates.len() {
        return;
    }
    let cand = &candidates[idx];
    let fit = cand
        .iter()
        .map(|(k, mult)| remaining.get(k) / mult)
        .min()
        .unwrap_or(0)
        .min(parts_left);
    for count in (0..=fit).rev() {
        let rest = remaining
            .checked_sub(&cand.scale(count))
            .expect("count fits componentwise");
        if count > 0 {
            chosen.push((cand.clone(), count));
        }
        partition_rec(candidates, idx + 1, rest, parts_left - count, chosen, out);
        if count > 0 {
            chosen.pop();
        }
    }
}

/// The per-partition terms of `[t^m] S^j`: each `j`-part vector partition of
/// `m` with its `multinomial * prod C_n^{k_n}` contribution.
pub fn partition_expansion(m: &TypeVec, parts: u32) -> Vec<(VectorPartition, BigUint)> {
    vector_partitions(m, parts)
        .into_iter()
        .map(|p| {
            let term = p.recurrence_term();
            (p, term)
        })
        .collect()
}

/// Memoized evaluation of the hyper-Catalan recurrence
/// `C_m = sum_{j>=2} sum_{partitions of m - jvec into j parts} multinomial * prod C_n^{k_n}`.
#[derive(Debug, Default)]
pub struct HyperCatalanSession {
    memo: HashMap<TypeVec, BigUint>,
}

impl HyperCatalanSession {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn value(&mut self, m: &TypeVec) -> BigUint {
        if let Some(v) = self.memo.get(m) {
            return v.clone();
        }
        let result = if m.is_empty() {
            BigUint::one()
        } else {
            // arguments strictly decrease in total weight sum k*m_k
            let mut total = BigUint::zero();
            for (j, target) in m.lessers() {
                for partition in vector_partitions(&target, j) {
                    let counts: Vec<u32> = partition.parts().iter().map(|&(_, k)| k).collect();
                    let mut term = multinomial(&counts);
                    for (n, k) in partition.parts() {
                        term *= self.value(n).pow(*k);
                    }
                    total += term;
                }
            }
            total
        };
        self.memo.insert(m.clone(), result.clone());
        result
    }
}

/// One-shot convenience wrapper around [`HyperCatalanSession`].
pub fn hyper_catalan_recurrence(m: &TypeVec) -> BigUint {
    HyperCatalanSession::new().value(m)
}

/// Verifies the Catalan convolution `Catalan_{m+1} = sum_n Catalan_n * Catalan_{m-n}`
/// for all `m <= max_m`, with Catalan numbers taken from the Fuss closed form.
pub fn catalan_convolution_check(max_m: u32) -> bool {
    for m in 0..=max_m {
        let lhs = fuss_number(2, m + 1);
        let rhs: BigUint = (0..=m)
            .map(|n| fuss_number(2, n) * fuss_number(2, m - n))
            .sum();
        if lhs != rhs {
            return false;
        }
    }
    true
}

/// Rule choosing the index `j` used to step the Geode recurrence at a type.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum XStrategy {
    /// Always pick the same index `k >= 2`.
    ConstantIndex(u32),
    /// Pick the index of the largest component, smallest index on ties. The
    /// strategy with a clear termination argument.
    LargestComponentSmallestIndex,
}

impl XStrategy {
    fn choose(&self, m: &TypeVec) -> u32 {
        match *self {
            XStrategy::ConstantIndex(k) => {
                assert!(k >= 2, "gon indices start at 2, got {k}");
                k
            }
            XStrategy::LargestComponentSmallestIndex => {
                debug_assert!(!m.is_empty());
                let mut best = (0u32, 0u32);
                for (k, mult) in m.iter() {
                    if mult > best.1 {
                        best = (k, mult);
                    }
                }
                best.0
            }
        }
    }
}

impl fmt::Display for XStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            XStrategy::ConstantIndex(k) => write!(f, "X{k}"),
            XStrategy::LargestComponentSmallestIndex => write!(f, "max"),
        }
    }
}

/// A signed integer combination of hyper-Catalan numbers, the fully unrolled
/// form of a Geode coefficient.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SignedCombination {
    terms: std::collections::BTreeMap<TypeVec, BigInt>,
}

impl SignedCombination {
    pub fn unit(m: TypeVec) -> Self {
        let mut terms = std::collections::BTreeMap::new();
        terms.insert(m, BigInt::one());
        SignedCombination { terms }
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &TypeVec) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    fn sub_assign(&mut self, other: &SignedCombination) {
        for (m, c) in &other.terms {
            let entry = self.terms.entry(m.clone()).or_insert_with(BigInt::zero);
            *entry -= c;
            if entry.is_zero() {
                self.terms.remove(m);
            }
        }
    }

    /// `sum coeff * C_type`, the value the combination stands for.
    pub fn evaluate(&self) -> BigInt {
        self.terms
            .iter()
            .map(|(m, c)| c * BigInt::from(hyper_catalan(m)))
            .sum()
    }

    /// Terms sorted by (face level descending, ascending lex), which puts the
    /// main positive term first the way the expansions are usually written.
    pub fn sorted_terms(&self) -> Vec<(TypeVec, BigInt)> {
        let mut out: Vec<(TypeVec, BigInt)> = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        out.sort_by(|(a, _), (b, _)| b.faces().cmp(&a.faces()).then_with(|| a.lex_cmp(b)));
        out
    }
}

impl fmt::Display for SignedCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.sorted_terms() {
            let (sign, mag) = if c.sign() == num_bigint::Sign::Minus {
                ("-", -&c)
            } else {
                ("+", c.clone())
            };
            if !first {
                write!(f, " ")?;
            }
            first = false;
            if mag == BigInt::one() {
                write!(f, "{sign}{m}")?;
            } else {
                write!(f, "{sign}{mag}{m}")?;
            }
        }
        Ok(())
    }
}

/// Memoized evaluation of the Geode recurrence
/// `G_m = C_{m + X(m)} - sum_{k in L(m + X(m)), k != m} G_k`, with a budget
/// guard standing in for a termination proof.
#[derive(Debug)]
pub struct GeodeSession {
    strategy: XStrategy,
    budget: u64,
    expansions: u64,
    values: HashMap<TypeVec, BigUint>,
    combinations: HashMap<TypeVec, SignedCombination>,
}

impl GeodeSession {
    pub fn new(strategy: XStrategy) -> Self {
        Self::with_budget(strategy, DEFAULT_GEODE_BUDGET)
    }

    pub fn with_budget(strategy: XStrategy, budget: u64) -> Self {
        GeodeSession {
            strategy,
            budget,
            expansions: 0,
            values: HashMap::new(),
            combinations: HashMap::new(),
        }
    }

    fn step(&mut self, m: &TypeVec) -> Result<(TypeVec, Vec<TypeVec>)> {
        self.expansions += 1;
        if self.expansions > self.budget {
            return Err(Error::NonTermination {
                budget: self.budget,
            });
        }
        let j = self.strategy.choose(m);
        let up = m.add_basis(j);
        let others = up
            .lessers()
            .into_iter()
            .map(|(_, lesser)| lesser)
            .filter(|lesser| lesser != m)
            .collect();
        Ok((up, others))
    }

    /// The Geode coefficient `G_m`.
    pub fn value(&mut self, m: &TypeVec) -> Result<BigUint> {
        if let Some(v) = self.values.get(m) {
            return Ok(v.clone());
        }
        let result = if m.is_empty() {
            // forced by C_{jvec} = 1 having the single lesser []
            BigUint::one()
        } else {
            let (up, others) = self.step(m)?;
            let c = hyper_catalan(&up);
            let mut sum_others = BigUint::zero();
            for lesser in &others {
                sum_others += self.value(lesser)?;
            }
            c.checked_sub(&sum_others).unwrap_or_else(|| {
                panic!("Geode naturality violated at {m}: C_{up} < sum of other lessers")
            })
        };
        self.values.insert(m.clone(), result.clone());
        Ok(result)
    }

    /// `G_m` fully unrolled into a signed combination of hyper-Catalans.
    pub fn expand(&mut self, m: &TypeVec) -> Result<SignedCombination> {
        if let Some(c) = self.combinations.get(m) {
            return Ok(c.clone());
        }
        let result = if m.is_empty() {
            SignedCombination::unit(TypeVec::empty())
        } else {
            let (up, others) = self.step(m)?;
            let mut comb = SignedCombination::unit(up);
            for lesser in &others {
                let sub = self.expand(lesser)?;
                comb.sub_assign(&sub);
            }
            comb
        };
        self.combinations.insert(m.clone(), result.clone());
        Ok(result)
    }
}

/// One-shot Geode coefficient with the default budget.
pub fn geode_recurrence_value(m: &TypeVec, strategy: XStrategy) -> Result<BigUint> {
    GeodeSession::new(strategy).value(m)
}

/// One-shot expansion with the default budget.
pub fn geode_expand(m: &TypeVec, strategy: XStrategy) -> Result<SignedCombination> {
    GeodeSession::new(strategy).expand(m)
}

/// Lesser Geode Sum check: `C_m = sum over lessers of m of G` for `m != []`,
/// against any Geode oracle (recurrence, series division, closed form).
pub fn lesser_sum_check<F>(m: &TypeVec, mut geode_oracle: F) -> bool
where
    F: FnMut(&TypeVec) -> BigUint,
{
    assert!(!m.is_empty(), "the lesser sum is stated for nonempty types");
    let sum: BigUint = m
        .lessers()
        .into_iter()
        .map(|(_, lesser)| geode_oracle(&lesser))
        .sum();
    hyper_catalan(m) == sum
}

/// Two-distinct-shapes alternating sum
/// `sum_{i=0}^n (-1)^i C((m+1+i) jvec + (n-i) kvec)`, equal to
/// `G(m jvec + n kvec)`.
pub fn two_shape_alternating_sum(j: u32, k: u32, m: u32, n: u32) -> Result<BigInt> {
    assert!(j >= 2 && k >= 2, "shape indices start at 2");
    if j == k {
        return Err(Error::EqualShapeIndices { index: j });
    }
    let mut total = BigInt::zero();
    for i in 0..=n {
        let ty = TypeVec::single(j, m + 1 + i).add(&TypeVec::single(k, n - i));
        let c = BigInt::from(hyper_catalan(&ty));
        if i % 2 == 0 {
            total += c;
        } else {
            total -= c;
        }
    }
    Ok(total)
}
