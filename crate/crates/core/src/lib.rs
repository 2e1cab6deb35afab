//! Explicit equations for the Hilbert scheme of points in affine space.
//!
//! A standard set `δ ⊂ ℕⁿ` of size `r` indexes an open chart of the
//! Hilbert scheme: ideals whose quotient is free on the monomials `x^δ`.
//! Its coordinates are the border coefficients `T_{α,β}` with
//! `x^α ≡ Σ_β T_{α,β} x^β` for `α` on the border. This crate
//!
//! - enumerates standard sets and their corners, borders and edge points
//!   ([`staircase`]),
//! - generates the structural equations of a chart, the reduced set built
//!   from edge points, Gröbner strata, minimal embeddings and universal
//!   families ([`equations`]),
//! - computes transition maps between charts ([`charts`]) and the
//!   one-parameter degeneration of a stratum to its monomial point
//!   ([`deform`]),
//! - checks all of it against independent computations: a Buchberger
//!   engine, vanishing ideals of rational point sets and exact linear
//!   algebra ([`oracle`], [`verify`]).
//!
//! All arithmetic is exact over ℚ.

pub mod charts;
pub mod deform;
pub mod equations;
pub mod exponent;
pub mod export;
pub mod linalg;
pub mod oracle;
pub mod order;
pub mod poly;
pub mod staircase;
pub mod verify;
