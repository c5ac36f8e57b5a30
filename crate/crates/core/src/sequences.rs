//! Named sequences and Geode slices in reproducible formats.
//!
//! A slice pattern is a type-vector template with one free index, e.g. `n,1`
//! or `1,0,n`; its sequence lists the Geode coefficients at the instantiated
//! types starting from `n = 0`. Projections substitute monomials in a single
//! fresh variable (or two, for the Cayley table) into S or G.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::One;

use crate::error::{Error, Result};
use crate::geode::build_g;
use crate::recurrence::{GeodeSession, XStrategy};
use crate::series::{BuildMethod, MonomialRule, PolySeries, Truncation};
use crate::typevec::TypeVec;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum SliceToken {
    Fixed(u32),
    Free,
}

/// Type-vector template with exactly one free index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlicePattern {
    tokens: Vec<SliceToken>,
}

impl SlicePattern {
    /// The type obtained by setting the free index to `i`.
    pub fn instantiate(&self, i: u32) -> TypeVec {
        let dense: Vec<u32> = self
            .tokens
            .iter()
            .map(|tok| match tok {
                SliceToken::Fixed(m) => *m,
                SliceToken::Free => i,
            })
            .collect();
        TypeVec::from_dense(&dense)
    }

    /// Largest face count over the first `count` instantiations.
    pub fn max_faces(&self, count: u32) -> u32 {
        (0..count)
            .map(|i| self.instantiate(i).faces())
            .max()
            .unwrap_or(0)
    }
}

impl FromStr for SlicePattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let s = s.strip_prefix('[').unwrap_or(s);
        let s = s.strip_suffix(']').unwrap_or(s);
        let tokens: Vec<SliceToken> = s
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                if tok == "n" {
                    Ok(SliceToken::Free)
                } else {
                    tok.parse::<u32>()
                        .map(SliceToken::Fixed)
                        .map_err(|_| Error::Parse(format!("bad slice token {tok:?}")))
                }
            })
            .collect::<Result<_>>()?;
        let free = tokens
            .iter()
            .filter(|t| matches!(t, SliceToken::Free))
            .count();
        if free != 1 {
            return Err(Error::Parse(format!(
                "slice pattern needs exactly one free index, found {free}"
            )));
        }
        Ok(SlicePattern { tokens })
    }
}

impl fmt::Display for SlicePattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .tokens
            .iter()
            .map(|tok| match tok {
                SliceToken::Fixed(m) => m.to_string(),
                SliceToken::Free => "n".to_string(),
            })
            .collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// The seven slice patterns listed in the sequence tables.
pub const STANDARD_SLICES: [&str; 7] = ["n,1", "1,n", "n,2", "1,0,n", "0,1,n", "n,0,1", "0,0,1,n"];

/// First `count` values of a Geode slice, starting at `n = 0`, computed with
/// the Geode recurrence (largest-component strategy).
pub fn geode_slice(pattern: &SlicePattern, count: u32) -> Result<Vec<BigUint>> {
    let mut session = GeodeSession::new(XStrategy::LargestComponentSmallestIndex);
    (0..count)
        .map(|i| session.value(&pattern.instantiate(i)))
        .collect()
}

/// The same slice read off a precomputed G series; errors when the series
/// truncation cannot hold a requested type.
pub fn geode_slice_from_series(
    g: &PolySeries,
    pattern: &SlicePattern,
    count: u32,
) -> Result<Vec<BigInt>> {
    (0..count)
        .map(|i| {
            let ty = pattern.instantiate(i);
            if !g.truncation().contains(&ty) {
                return Err(Error::InsufficientTruncation {
                    needed_faces: ty.faces(),
                    max_faces: g.truncation().max_faces,
                });
            }
            Ok(g.coefficient(&ty))
        })
        .collect()
}

/// One-dimensional (or two, for Cayley) projections of S and G.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProjectionFamily {
    /// `t_k -> v^{k-1}`; on S this produces the Little Schroeder numbers.
    LittleSchroeder,
    /// `t_k -> e^k`; on S this produces the Riordan numbers.
    Riordan,
    /// `t_k -> v^{k-1} f`; on S this produces the Cayley table.
    Cayley,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesTarget {
    S,
    G,
}

/// Projection output: a coefficient list for the univariate families, rows by
/// v-degree (each row's f-coefficients ascending from f^0) for Cayley.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProjectedTable {
    Coefficients(Vec<BigInt>),
    Rows(Vec<Vec<BigInt>>),
}

/// Project `count` degrees (or rows) of the chosen series. The truncation is
/// sized from `count` so every reported coefficient is complete.
pub fn projected_sequence(
    family: ProjectionFamily,
    target: SeriesTarget,
    count: u32,
) -> ProjectedTable {
    assert!(count >= 1);
    let max_degree = count - 1;
    let (needed_faces, needed_gons) = match family {
        // v-degree of t^m is sum (k-1) m_k >= faces(m)
        ProjectionFamily::LittleSchroeder | ProjectionFamily::Cayley => {
            (max_degree, (max_degree + 1).max(2))
        }
        // e-degree of t^m is sum k m_k >= 2 faces(m)
        ProjectionFamily::Riordan => (max_degree / 2, max_degree.max(2)),
    };
    let series = match target {
        SeriesTarget::S => PolySeries::build_s(
            Truncation::new(needed_faces, needed_gons),
            BuildMethod::ClosedForm,
        ),
        SeriesTarget::G => build_g(Truncation::new(needed_faces + 1, needed_gons)),
    };
    let substituted = series.substitute(|k| match family {
        ProjectionFamily::LittleSchroeder => MonomialRule {
            coeff: BigInt::one(),
            v_pow: k - 1,
            f_pow: 0,
            keep_t: false,
        },
        ProjectionFamily::Riordan => MonomialRule {
            coeff: BigInt::one(),
            v_pow: k,
            f_pow: 0,
            keep_t: false,
        },
        ProjectionFamily::Cayley => MonomialRule {
            coeff: BigInt::one(),
            v_pow: k - 1,
            f_pow: 1,
            keep_t: false,
        },
    });
    match family {
        ProjectionFamily::Cayley => {
            let mut rows = substituted.rows_v_by_f();
            rows.truncate(count as usize);
            while rows.len() < count as usize {
                rows.push(Vec::new());
            }
            ProjectedTable::Rows(rows)
        }
        _ => {
            let mut coeffs = substituted.univariate_v();
            coeffs.resize(count as usize, BigInt::from(0));
            ProjectedTable::Coefficients(coeffs)
        }
    }
}
