//! Exact polynomial arithmetic: the parameter ring ℚ[T, U, t], polynomials
//! in x over it, plain rational polynomials, and the text grammar.

mod param;
mod qpoly;
pub mod text;
mod tpoly;

use thiserror::Error;

use crate::exponent::Exponent;

pub use param::{extend_family, rational_marked, reduce, symbolic_marked, LeadingData, MarkedFamily, ParamPolynomial};
pub use qpoly::QPoly;
pub use tpoly::{q, qf, TMono, TPoly, TVar, Var, Q};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("the zero polynomial has no leading term")]
    ZeroPolynomial,
    #[error("{0} lies in the standard set")]
    InStandardSet(Exponent),
    #[error("no family member covers the corner {0}")]
    MissingCorner(Exponent),
    #[error("deriving the family member at {0} requires itself")]
    Cyclic(Exponent),
    #[error("family member at {0} is not monic on its mark")]
    NotMarked(Exponent),
    #[error("family member at {0} has the term {1} outside the standard set")]
    TailOutsideDelta(Exponent, Exponent),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}
