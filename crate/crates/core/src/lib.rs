//! Exact construction and certification of parametric solutions of
//! symmetric homogeneous Diophantine equations of odd degree.
//!
//! The pipeline: [`reduce`] halves the variable count of a symmetric form
//! with quadruple substitutions until a six-variable quintic-class equation
//! remains, [`pencil`] solves that by intersecting the line through two
//! primitive zeros, and [`verify`] certifies every emitted tuple. [`waring`]
//! runs the same machinery for `F(x) = q`.

pub mod error;
pub mod interp;
pub mod parse;
pub mod pencil;
pub mod poly;
pub mod rational;
pub mod reduce;
pub mod solution;
pub mod symfunc;
pub mod vars;
pub mod verify;
pub mod waring;

pub use error::{Error, Result};
pub use poly::{clear_denominators, Monomial, Poly};
pub use rational::Rational;
pub use solution::{Certificate, CertificateKind, CertificateMethod, ParametricSolution};
pub use symfunc::{PowerSumExpr, PrimitivePoint, SymmetricForm};
pub use vars::{Ambient, VarKind, VarTag};
