//! Exact computer algebra for Kuroda-type counterexamples to Hilbert's
//! fourteenth problem.
//!
//! The crate is organised bottom-up:
//!
//! - [`lattice`]: integer matrices, determinants, unit-row solving, Smith
//!   normal form and coset representatives of exponent subgroups.
//! - [`laurent`]: sparse Laurent polynomials over `Q` and `F_p`, with
//!   monomial substitution, supports, gradings and partial derivatives.
//! - [`monoid`]: cone membership, Hilbert bases of pointed cones, and
//!   generators of `K(M_1, …, M_t) ∩ K[X]` for Laurent monomials `M_i`.
//! - [`kuroda`]: the `π_i` families, conditions (*) and (**), and the
//!   certificate polynomials `f₀` and `G`.
//! - [`derivation`]: the derivation `E = Σ ∂/∂Y_i` and its kernel.
//! - [`intersect`]: degree-by-degree intersections of graded subalgebras.
//! - [`cli`]: the batch front end behind the `kuroda` binary.
//!
//! All arithmetic is exact. Nothing in the crate uses floating point.

pub mod cli;
pub mod derivation;
pub mod error;
pub mod intersect;
pub mod kuroda;
pub mod lattice;
pub mod laurent;
pub mod linalg;
pub mod monoid;

pub use error::{Error, Result};
pub use laurent::{ExponentVector, Field, LaurentPoly, Scalar};
