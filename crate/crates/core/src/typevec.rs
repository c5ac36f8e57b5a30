//! Canonical sparse type vectors and their combinatorial measures.
//!
//! A type vector `m = [m2, m3, m4, ...]` counts the triangles, quadrilaterals,
//! pentagons, ... of a subdivided roofed polygon. Trailing zeros are not part
//! of the type, so the canonical form stores only the nonzero components,
//! keyed by gon index. `[1,0]` and `[1]` are the same value.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Sparse exponent vector indexing subdigon types.
///
/// Keys are gon indices `k >= 2`; stored multiplicities are always `>= 1`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TypeVec {
    entries: BTreeMap<u32, u32>,
}

impl TypeVec {
    /// The empty type `[]` (the null subdigon).
    pub fn empty() -> Self {
        TypeVec::default()
    }

    /// The basis vector with a single `j`-gon component of multiplicity 1.
    ///
    /// Panics if `j < 2`; gon indices start at 2.
    pub fn basis(j: u32) -> Self {
        TypeVec::single(j, 1)
    }

    /// `m * kvec`: multiplicity `m` on component `k`, zero elsewhere.
    pub fn single(k: u32, m: u32) -> Self {
        assert!(k >= 2, "gon indices start at 2, got {k}");
        let mut entries = BTreeMap::new();
        if m > 0 {
            entries.insert(k, m);
        }
        TypeVec { entries }
    }

    /// Build from dense multiplicities starting at m2. Zeros are dropped.
    pub fn from_dense(dense: &[u32]) -> Self {
        let mut entries = BTreeMap::new();
        for (i, &m) in dense.iter().enumerate() {
            if m > 0 {
                entries.insert(i as u32 + 2, m);
            }
        }
        TypeVec { entries }
    }

    /// Nonzero components as `(gon index, multiplicity)` in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.entries.iter().map(|(&k, &m)| (k, m))
    }

    /// Multiplicity of the `k`-gon component (0 when absent).
    pub fn get(&self, k: u32) -> u32 {
        self.entries.get(&k).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Largest gon index with a nonzero component.
    pub fn max_gon(&self) -> Option<u32> {
        self.entries.keys().next_back().copied()
    }

    /// Total face count `sum_k m_k`.
    pub fn faces(&self) -> u32 {
        self.entries.values().sum()
    }

    /// Edge count `1 + sum_k k*m_k` of a subdigon of this type.
    pub fn edges(&self) -> u64 {
        1 + self.weight()
    }

    /// Vertex count `2 + sum_k (k-1)*m_k` of a subdigon of this type.
    pub fn vertices(&self) -> u64 {
        2 + self
            .entries
            .iter()
            .map(|(&k, &m)| (k as u64 - 1) * m as u64)
            .sum::<u64>()
    }

    /// `sum_k k*m_k`, the grading in which the recurrences descend.
    pub fn weight(&self) -> u64 {
        self.entries
            .iter()
            .map(|(&k, &m)| k as u64 * m as u64)
            .sum()
    }

    /// Number of distinct shapes (nonzero components).
    pub fn distinct_shapes(&self) -> u32 {
        self.entries.len() as u32
    }

    /// The lessers of this type: for each nonzero component `j`, the pair
    /// `(j, m - jvec)`, in ascending order of `j`.
    pub fn lessers(&self) -> Vec<(u32, TypeVec)> {
        self.entries
            .keys()
            .map(|&j| {
                let lesser = self.sub_basis(j).expect("component is nonzero");
                (j, lesser)
            })
            .collect()
    }

    /// Increment component `j` by 1.
    pub fn add_basis(&self, j: u32) -> TypeVec {
        assert!(j >= 2, "gon indices start at 2, got {j}");
        let mut entries = self.entries.clone();
        *entries.entry(j).or_insert(0) += 1;
        TypeVec { entries }
    }

    /// Decrement component `j` by 1. Errors when `m_j = 0`; callers must
    /// handle the missing-component case explicitly.
    pub fn sub_basis(&self, j: u32) -> Result<TypeVec> {
        let mut entries = self.entries.clone();
        match entries.get_mut(&j) {
            None | Some(0) => Err(Error::MissingComponent {
                ty: self.clone(),
                index: j,
            }),
            Some(m) => {
                *m -= 1;
                if *m == 0 {
                    entries.remove(&j);
                }
                Ok(TypeVec { entries })
            }
        }
    }

    /// Componentwise sum.
    pub fn add(&self, other: &TypeVec) -> TypeVec {
        let mut entries = self.entries.clone();
        for (&k, &m) in &other.entries {
            *entries.entry(k).or_insert(0) += m;
        }
        TypeVec { entries }
    }

    /// Componentwise scalar multiple (`0 * m = []`).
    pub fn scale(&self, c: u32) -> TypeVec {
        if c == 0 {
            return TypeVec::empty();
        }
        let entries = self.entries.iter().map(|(&k, &m)| (k, m * c)).collect();
        TypeVec { entries }
    }

    /// True when every component of `self` is `<=` the matching component of `other`.
    pub fn le_componentwise(&self, other: &TypeVec) -> bool {
        self.entries.iter().all(|(&k, &m)| m <= other.get(k))
    }

    /// Componentwise difference; `None` unless `other <= self`.
    pub fn checked_sub(&self, other: &TypeVec) -> Option<TypeVec> {
        if !other.le_componentwise(self) {
            return None;
        }
        let mut entries = self.entries.clone();
        for (&k, &m) in &other.entries {
            let cur = entries.get_mut(&k).unwrap();
            *cur -= m;
            if *cur == 0 {
                entries.remove(&k);
            }
        }
        Some(TypeVec { entries })
    }

    /// Lexicographic monomial order with t2 heaviest: the type with the larger
    /// multiplicity at the smallest differing gon index is the greater. This is
    /// a proper monomial order (compatible with componentwise addition), used
    /// for division by S1 and for deterministic term listings.
    pub fn lex_cmp(&self, other: &TypeVec) -> Ordering {
        let mut a = self.entries.iter();
        let mut b = other.entries.iter();
        let (mut na, mut nb) = (a.next(), b.next());
        loop {
            match (na, nb) {
                (None, None) => return Ordering::Equal,
                // the side that still has components has a nonzero entry at a
                // gon index where the other is zero
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some((&ka, &ma)), Some((&kb, &mb))) => match ka.cmp(&kb) {
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => match ma.cmp(&mb) {
                        Ordering::Equal => {
                            na = a.next();
                            nb = b.next();
                        }
                        ord => return ord,
                    },
                },
            }
        }
    }

    /// Dense multiplicities `[m2, m3, ..]` up to the largest nonzero component.
    pub fn dense(&self) -> Vec<u32> {
        match self.max_gon() {
            None => Vec::new(),
            Some(k) => (2..=k).map(|i| self.get(i)).collect(),
        }
    }

    /// Text form `m2,m3,...` (empty string for the empty type).
    pub fn to_text(&self) -> String {
        self.dense()
            .iter()
            .map(|m| m.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for TypeVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.to_text())
    }
}

impl FromStr for TypeVec {
    type Err = Error;

    /// Parses `m2,m3,...`, with optional surrounding brackets. `""` and `[]`
    /// are the empty type. Commas are required so multiplicities >= 10 stay
    /// unambiguous.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let s = s.strip_prefix('[').unwrap_or(s);
        let s = s.strip_suffix(']').unwrap_or(s);
        let s = s.trim();
        if s.is_empty() {
            return Ok(TypeVec::empty());
        }
        let dense: Vec<u32> = s
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad multiplicity {tok:?}")))
            })
            .collect::<Result<_>>()?;
        Ok(TypeVec::from_dense(&dense))
    }
}
