//! Exact solvers for multicriteria zero-sum matrix games.
//!
//! All arithmetic is over arbitrary-precision rationals. Player I (rows)
//! minimizes and player II (columns) maximizes in every criterion.

pub mod axioms;
pub mod error;
pub mod game;
pub mod grid;
pub mod lp;
pub mod minimax;
pub mod payoff;
pub mod poss;
pub mod rational;
pub mod strategy;
pub mod transforms;

pub use error::{GameError, Result};
pub use game::{MultiGameD1, MultiGameD2, ScalarGame};
pub use lp::{game_value, GameValueResult, Side};
pub use payoff::{pareto_max, pareto_min, payoff_d1, payoff_d2, PayoffPoint, PayoffSet, PayoffVector};
pub use rational::{parse_rational, Rational};
pub use strategy::{MixedStrategy, StrategyTupleII, WeightVector};
