//! Topological complexity of hyperplane arrangement complements.
//!
//! The crate computes lower and upper bounds for the topological complexity
//! `TC` of the complement of a central complex hyperplane arrangement, and of
//! the configuration spaces `C_n(R^m)` whose cohomology is described by the
//! same matroid data. Lower bounds come from explicit nonzero products of
//! zero-divisors in the tensor square of the Orlik–Solomon algebra; upper
//! bounds come from rank, product decomposition, and dimension/connectivity
//! arguments. When the two meet the report carries an exactness certificate
//! that can be re-checked mechanically.
//!
//! The [`planner`] module is the other half: explicit collision-free motion
//! planners for two and three ordered points in the plane with the minimal
//! number of local domains, a non-optimal baseline for any `n`, path
//! verification, and a sampling estimator for the order of instability.
//!
//! ## Module guide
//!
//! - [`arrangement`]: exact rational arrangements and the matroid oracle
//!   (rank, closure, circuits, nbc sets, components).
//! - [`os_algebra`]: the Orlik–Solomon algebra in anticommutative (`Odd`) and
//!   commutative (`Even`) form with nbc normal forms, plus a brute-force
//!   quotient oracle used for verification.
//! - [`tensor_square`]: `A ⊗ A`, zero-divisors, products of zero-divisors,
//!   nonvanishing certificates and the zero-divisor cup-length search.
//! - [`tc_report`]: bound assembly and report rendering.
//! - [`planner`]: motion planners, sampling, verification, SVG output.
//! - [`cli`]: the `tcarrange` command-line front end.

pub mod arrangement;
pub mod cli;
mod error;
mod linalg;
pub mod os_algebra;
pub mod planner;
pub mod tc_report;
pub mod tensor_square;

pub use arrangement::{Arrangement, Flag, Flat, GroundSubset, Matroid, Rational};
pub use error::{Error, Result};
pub use os_algebra::{AlgebraElement, Monomial, OsAlgebra, Parity};
pub use tc_report::{Mode, TcReport};
pub use tensor_square::{NonvanishingCertificate, TensorElement, TensorSquare};
