//! Exact-arithmetic analysis of complete indifference in finite two-player games.
//!
//! A player with an `n × m` payoff matrix can be made indifferent between all of
//! their pure strategies exactly when the half spaces induced by the columns of
//! the consecutive-row payoff difference matrix cover the whole space. This crate
//! decides both sides of that equivalence with an exact rational simplex, returns
//! verifiable certificates for either outcome, tests two-player games for
//! completely mixed equilibria, and classifies generic symmetric 3×3 games into
//! the six canonical classes with a unique, completely mixed symmetric
//! equilibrium. A brute-force support-enumeration oracle checks every result.
//!
//! All arithmetic is exact; there is no floating-point path.

pub mod classify;
pub mod cli;
mod error;
pub mod indifference;
pub mod lp;
pub mod model;
pub mod oracle;

pub use error::{Error, Result};
pub use model::{
    mat_vec, parse_rational, relabel, GameMatrix, MixedStrategy, Permutation, Rational,
};
