//! Metaplectic ice for Cartan type C: exact partition functions of the
//! U-turn lattice model with Gauss-sum decorations, the Gelfand–Tsetlin
//! bijection, and machine checks of the Yang–Baxter equation and the local
//! relations (caduceus, fish, functional equations) that the model satisfies.
//!
//! The ring is generic over its coefficients; the aliases below fix
//! arbitrary-precision integers and rationals, which is what every check uses.

pub mod enumerate;
pub mod exactring;
pub mod expr;
pub mod model;
pub mod patterns;
pub mod relations;
pub mod weights;
pub mod ybe;

use num_bigint::BigInt;
use num_rational::BigRational;

pub use exactring::{Coeff, Field, Ring};
pub use model::{DecoratedSpin, Ice, LatticeSpec, Spin};
pub use weights::{BendKind, RIce, Variant, VertexKind};

/// Ring elements with arbitrary-precision integer coefficients.
pub type RingElem = exactring::Poly<BigInt>;
/// Exact quotients of ring elements.
pub type RingFrac = exactring::Fraction<BigInt>;
/// Rational specialization point.
pub type Specialization = exactring::Specialization<BigRational>;
pub type Rational = BigRational;

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Invalid parameters (odd `n`, bad partition, ...).
    #[error("{0}")]
    Config(String),
    #[error("{0}")]
    Parse(String),
    /// Structurally invalid input (inadmissible state, bad pattern, ...).
    #[error("{0}")]
    Invalid(String),
}
