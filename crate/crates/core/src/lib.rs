//! Exact arithmetic for hyper-Catalan numbers and the Geode array.
//!
//! The hyper-Catalan number `C[m2,m3,...]` counts subdivisions of a roofed
//! polygon into `m2` triangles, `m3` quadrilaterals, and so on. Their
//! generating series S is a formal zero of the general geometric polynomial
//! `1 - a + t2 a^2 + t3 a^3 + ...`, and factors as `S - 1 = S1 * G` where
//! `S1 = t2 + t3 + ...` and G is the Geode array.
//!
//! This crate computes these arrays by four independent routes and checks
//! them against each other:
//!
//! - closed forms ([`closedform`]): factorial quotients over big integers;
//! - recurrences ([`recurrence`]): vector-partition recurrence for C, the
//!   index-strategy recurrence for G, signed hyper-Catalan expansions;
//! - truncated series ([`series`], [`geode`]): exact polyseries arithmetic,
//!   fixed-point construction of S, division by S1 for G and H;
//! - brute force ([`oracle`]): exhaustive subdigon enumeration.
//!
//! [`identities`] verifies the binomial-coefficient identity family over
//! exact rationals, [`sequences`] emits the named sequence tables, and
//! [`numroot`] evaluates the truncated series numerically as a root
//! approximator for geometric polynomials.

pub mod closedform;
pub mod error;
pub mod geode;
pub mod identities;
pub mod numeric;
pub mod numroot;
pub mod oracle;
pub mod recurrence;
pub mod sequences;
pub mod series;
pub mod typevec;

pub use error::{Error, Result};
pub use series::{BuildMethod, PolySeries, Truncation};
pub use typevec::TypeVec;
