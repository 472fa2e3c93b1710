//! Exact computer algebra for Poincaré–Birkhoff–Witt algebras built from
//! Poisson bivectors and Lie structure constants.
//!
//! The crate provides, over exact rationals with a truncated deformation
//! parameter `h`:
//!
//! * free graded tensor algebras with Koszul signs ([`tensor`]),
//! * symmetric and exterior coalgebras with their coproducts ([`coalg`]),
//! * bar and cobar complexes, deformed differentials, truncated cohomology
//!   by exact rank computation ([`complexes`]),
//! * Hochschild cochains with the Gerstenhaber bracket and the projection
//!   of cochains to cobar derivations ([`hochschild`]),
//! * polyvector fields with the Schouten–Nijenhuis bracket and the
//!   coefficient/direction transpose between even and odd coordinates
//!   ([`polyvec`]),
//! * an h-adic rewriting engine that checks the PBW property by overlap
//!   confluence and graded dimension counts, and solves for higher-order
//!   relation corrections ([`pbw`]),
//! * enumeration of admissible two-ground-vertex graphs and their symbolic
//!   contraction operators ([`graphs`]).

pub mod coalg;
pub mod complexes;
pub mod error;
pub mod graphs;
pub mod hochschild;
pub mod linalg;
pub mod pbw;
pub mod polyvec;
pub mod scalar;
pub mod tensor;
pub mod truncated;

pub use error::AlgebraError;
pub use scalar::Scalar;
pub use tensor::{Context, Element, GenId, GenInfo, Monomial, Poly, Word};

/// Exact rational scalar used throughout the crate.
pub type Rat = num_rational::BigRational;

/// Convenience constructor for exact rationals from an integer pair.
pub fn rat(num: i64, den: i64) -> Rat {
    use num_bigint::BigInt;
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Exact rational from an integer.
pub fn rat_int(num: i64) -> Rat {
    rat(num, 1)
}
