//! Exact computations with finite-dimensional Hopf *-algebras over ℚ(i).
//!
//! Algebras, coalgebras, pairings, actions and coactions are stored as
//! structure constants in sparse exact coordinates. Every identity the library
//! knows about is evaluated on basis elements and recorded in a
//! [`report::Report`], so a failed axiom yields a named counterexample instead
//! of a panic.

#![no_std]
#![forbid(unsafe_code)]
#![warn(missing_docs)]

extern crate alloc;

pub mod action;
pub mod algebra;
pub mod aqg;
pub mod catalog;
pub mod constructions;
pub mod groups;
pub mod heisenberg_double;
pub mod hopf;
pub mod linear;
pub mod pairing;
pub mod report;
pub mod scalar;
pub mod tensor;
pub mod transformation;
pub mod yd;

pub use action::{Action, Coaction, Side};
pub use algebra::{Algebra, AlgebraOps, Star, TensorAlgebra};
pub use groups::{FiniteGroup, GroupAction, ModelError};
pub use hopf::Hopf;
pub use linear::{LinearMap, SolveError, Vector};
pub use pairing::Pairing;
pub use report::{Check, Report};
pub use scalar::{Scalar, ScalarError};
pub use tensor::{Tensor, TensorError};
