//! Exact scalar tower: big rationals, quadratic surds, binomials and dense
//! univariate polynomials. Nothing in here touches floating point except the
//! `to_f64` conversions used for display.

mod poly;
mod rational;
mod surd;

pub use poly::Polynomial;
pub use rational::{
    beta_int, binomial, binomial_rat, factorial, factorial_rat, parse_rational, rat, rat_pow,
    rational_to_f64, Rational,
};
pub use surd::Surd;
