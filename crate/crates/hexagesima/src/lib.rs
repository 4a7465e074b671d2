//! Hexagonal disc-orbit packings and the arithmetic they suggest.
//!
//! Surrounding one disc with successive orbits of same-radius tangent discs
//! puts the multiples of six — 6, 12, 24, 30, 60, 360 — directly on the
//! lattice: orbit `k` holds `6k` discs, four orbits hold 60, and the figure
//! splits into six triangular wedges that witness the divisors of 60. This
//! crate builds those packings exactly ([`hexlattice`]), runs a base-60
//! token abacus on them ([`sexagesimal`]), divides the circle equally by
//! triangles and bisection and unequally by chord subdivision
//! ([`divisions`]), and draws the figures as deterministic SVG
//! ([`render`]).

pub mod divisions;
mod error;
pub mod hexlattice;
pub mod numfmt;
pub mod render;
pub mod sexagesimal;

pub use error::{Error, Result};

/// Version tag carried by every JSON document this crate emits.
pub const SCHEMA: &str = "hexagesima/v1";
