//! Scalars, payoff matrices, mixed strategies and strategy relabelings.

mod matrix;
mod permutation;
mod rational;
mod strategy;

pub use matrix::{mat_vec, relabel, GameMatrix};
pub use permutation::Permutation;
pub use rational::{dot, int, parse_rational, rat, Rational};
pub use strategy::MixedStrategy;
