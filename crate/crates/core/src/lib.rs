//! Exact continuous t-norm algebra and a finite quantale-enriched category
//! engine.
//!
//! * [`tnorm`]: ordinal sums of Łukasiewicz and product t-norms over `min`,
//!   their residua, and the classifier deciding whether every completely
//!   distributive category over `([0,1], &, 1)` is continuous.
//! * [`interval`]: the continuity equation on `([0,1], d_L)` for the ideal
//!   weights `⋁_{r<c} y(r)`, and counterexample reports.
//! * [`quantale`]: finite commutative unital quantales.
//! * [`qcat`]: finite Q-categories, functors, distributors, presheaves.
//! * [`checkers`]: completeness, complete distributivity, forward Cauchy
//!   weights and continuity on finite instances, each with a brute-force arm.

#![allow(clippy::needless_range_loop)]

pub mod checkers;
pub mod error;
pub mod interval;
pub mod json;
pub mod qcat;
pub mod quantale;
pub mod rational;
pub mod tnorm;

pub use error::{Error, Result};
pub use rational::{rat, Rational};
