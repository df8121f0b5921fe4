//! Exact arithmetic substrate: rationals, prime fields, sparse multivariate
//! polynomials, field and integer linear algebra, Smith normal form, and
//! truncated graded-ideal computations.

pub mod field;
pub mod fmat;
pub mod graded;
pub mod intmat;
pub mod local;
pub mod mpoly;

pub use field::{rat, rat_int, Field, PrimeField, Rationals, Ring};
pub use fmat::Mat;
pub use graded::{graded_piece, graded_piece_of_intersection, GradedPiece};
pub use intmat::{IntMatrix, SnfResult};
pub use local::local_algebra_dim;
pub use mpoly::{monomials_of_degree, monomials_up_to_degree, MPoly, Monomial};
