//! Exact combinatorics of zero-sum sequences over finite Abelian groups.
//!
//! The crate computes, by complete search, the classical extremal
//! invariants of a group `G = C_{n_1} ⊕ ... ⊕ C_{n_r}`:
//!
//! * `D(G)` - every sequence of that length has a nonempty zero-sum
//!   subsequence (Davenport constant),
//! * `η(G)` - same with the subsequence length capped by `exp(G)`,
//! * `t(G)` - same with the cross number `Σ 1/ord(g)` capped by 1,
//! * `ρ(G)` - the largest cross number of a sequence avoiding such
//!   tiny zero-sum subsequences,
//! * `η_(d′,d)(G)` - a two-parameter refinement over the subgroup of
//!   elements of order dividing `d`.
//!
//! Around the searches sit closed-form bounds with exact rational
//! arithmetic ([`bounds`]), constructive extremal families
//! ([`construct`]), and subsequence finders including an
//! Erdős–Lemke-style extractor ([`finder`]).
//!
//! Searches are deterministic: results, witnesses, and node counts do
//! not depend on the worker count, and a node budget turns an
//! overrunning search into a flagged partial result instead of an error.

pub mod arith;
pub mod bounds;
pub mod construct;
pub mod error;
pub mod finder;
pub mod group;
pub mod search;
pub mod sequence;

pub use arith::Rational;
pub use error::{Error, Result};
pub use group::{parse_group, FiniteAbelianGroup, GroupElement};
