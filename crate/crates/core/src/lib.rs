//! Coefficient problems for the hyperbola-subordinate classes `ST_hpl(s)` and
//! `CV_hpl(s)`: truncated series arithmetic, the extremal functions, the
//! coefficient functionals, their closed-form bounds, and a seeded numerical
//! search that checks every bound against the admissible Schwarz parameters.
//!
//! The numerical core is generic over [`Real`] (`f32` or `f64`); the aliases
//! below fix it to `f64`, which is what the search harness and CLI use.

#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::needless_range_loop)]

pub mod bounds;
pub mod classes;
pub mod error;
pub mod functionals;
pub mod scalar;
pub mod search;
pub mod series;

pub use bounds::{BoundResult, Regime, Target};
pub use classes::{ClassKind, ClassMember, ClassParams, HyperbolaPoint};
pub use error::{Error, Result};
pub use functionals::{FunctionalKind, FunctionalValue};
pub use scalar::Real;
pub use series::TruncatedSeries;

pub use num_complex::Complex64;

pub type Series = TruncatedSeries<f64>;
pub type Member = ClassMember<f64>;
pub type Params = ClassParams<f64>;
pub type Bound = BoundResult<f64>;
pub type Functional = FunctionalValue<f64>;
pub type Point = HyperbolaPoint<f64>;
