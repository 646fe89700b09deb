//! Exact scalars: rationals, Laurent polynomials, fractions and a fraction-free solver.

pub mod bareiss;
pub mod fraction;
pub mod laurent;
pub mod rational;

pub use bareiss::{bareiss_solve, bareiss_solve_multi, determinant, SharedSolution};
pub use fraction::RingFraction;
pub use laurent::{poly, LaurentMPoly, Var};
pub use rational::Rational;
