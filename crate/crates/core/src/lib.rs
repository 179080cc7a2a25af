//! Exact computation with finite MV-algebras and the states between them.
//!
//! A finite MV-algebra is a product of finite chains `M_k = {0, 1/k, ..., 1}`.
//! This crate represents such algebras by their chain signatures, elements by
//! integer numerator vectors, and builds on that base:
//!
//! * [`algebra`] -- the algebras themselves: truncated addition, negation,
//!   terms, atoms, generated subalgebras, homomorphisms, and an exhaustive
//!   identity checker for small carriers.
//! * [`gamma_xi`] -- good sequences and the unit-interval / lattice-group
//!   translation, with `Z^n` as the canonical model for finite algebras.
//! * [`state`] -- state tables between finite algebras, the two equivalent
//!   state definitions, extension from atom values, and enumeration.
//! * [`geometry`] -- exact rational points, simplices, regularity, and affine
//!   maps with integer coefficients.
//! * [`universal`] -- universal states realized as affine functions on the
//!   simplex dual to the algebra, state/point factorization, and the
//!   injectivity analysis of induced maps.
//!
//! All arithmetic is exact; there are no floating-point values and no
//! tolerance parameters anywhere.

pub mod algebra;
pub mod error;
pub mod gamma_xi;
pub mod geometry;
pub mod state;
pub mod universal;

pub use algebra::{FiniteMvAlgebra, MvElement, MvHom, MvTerm};
pub use error::{Error, Result};
pub use gamma_xi::{GoodSequence, XiElement};
pub use geometry::{AffineZMap, Rat, RationalPoint, RationalSimplex};
pub use state::StateTable;
pub use universal::UniversalState;
