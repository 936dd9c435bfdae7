//! Substitution systems for regular tilings `{p,q}` of the Euclidean and
//! hyperbolic plane, together with exact spectral analysis of their
//! transition matrices and a geometric engine used to cross-validate the
//! combinatorics against independently constructed tessellation graphs.
//!
//! The combinatorial side lives in [`params`], [`letter`], [`subst`] and
//! [`spectral`]; supporting exact linear algebra is in [`matrix`], [`poly`],
//! [`scc`] and [`roots`]. The geometric side lives in [`geom`], and
//! [`verify`] runs the claim suite that ties the two together.

pub mod error;
pub mod geom;
pub mod letter;
pub mod matrix;
pub mod params;
pub mod poly;
pub mod roots;
pub mod scc;
pub mod spectral;
pub mod subst;
pub mod verify;

pub use error::Error;
pub use letter::{Letter, LetterKind};
pub use params::{Curvature, Family, TilingParams};
pub use subst::Substitution;

use num::{BigInt, BigRational};

/// Integer matrix used for exact transition-matrix work.
pub type IntMatrix = matrix::Matrix<BigInt>;
/// Integer polynomial, e.g. a characteristic polynomial.
pub type IntPolynomial = poly::Polynomial<BigInt>;
/// Rational polynomial, used by the certified root isolation.
pub type RatPolynomial = poly::Polynomial<BigRational>;
