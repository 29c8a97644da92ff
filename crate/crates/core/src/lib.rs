//! Exact computation of the power-sum polynomial
//! `p_d(n) = 0^d + 1^d + 2^d + ... + n^d`.
//!
//! Every quantity in this crate is an arbitrary-precision integer or
//! rational; there is no floating point anywhere. The polynomial is
//! computed by four independent routes and the results can be checked
//! against each other and against a brute-force summation oracle:
//!
//! * [`methods::power_sum_lhopital`] — differentiate the finite geometric
//!   series with the operator `x d/dx` and evaluate the limit at `x = 1`
//!   symbolically (the [`symbolic`] engine),
//! * [`methods::power_sum_matrix`] — interpolate through the values
//!   `p_d(1), ..., p_d(d+1)` by solving a Vandermonde system with
//!   Cramer's rule ([`linalg`]),
//! * [`methods::power_sum_stirling`] — change basis into falling powers
//!   with Stirling numbers of the second kind and sum those in closed
//!   form,
//! * [`methods::power_sum_euler_maclaurin`] — the Bernoulli-number
//!   boundary corrections to the integral of `x^d`.
//!
//! [`sequences`] carries the supporting material: finite geometric sums,
//! Fibonacci numbers (fast doubling and an exact Binet formula over
//! `a + b*sqrt(5)`), and the Fibonacci square-sum identity.

pub mod linalg;
pub mod methods;
pub mod poly;
pub mod rational;
pub mod sequences;
pub mod symbolic;

pub use poly::Polynomial;
pub use rational::{Integer, Rational};
