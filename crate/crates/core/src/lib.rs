pub mod bridge;
pub mod catalog;
pub mod coeff;
pub mod error;
pub mod finite;
pub mod groebner;
pub mod homological;
pub mod ideal;
pub mod matrix;
pub mod module;
pub mod monomial;
pub mod poly;
pub mod ring;
pub mod scenario;
pub mod script;
pub mod syntax;

pub use coeff::{Coeff, Field};
pub use error::{Error, Result};
pub use groebner::{FreeVector, GroebnerBasis};
pub use ideal::Ideal;
pub use matrix::Matrix;
pub use module::{KDim, ModuleHomomorphism, PresentedModule};
pub use monomial::{Monomial, MonomialOrder, OrderKind};
pub use poly::{PolyRing, Polynomial};
pub use ring::QuotientRing;
