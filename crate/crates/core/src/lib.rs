//! Exact sizing of rectangle dissections and the resistor networks that
//! mirror them.
//!
//! The crate is organised bottom-up:
//!
//! * [`arith`]: exact scalars (ℚ, ℚ(√d), ℚ(t)) and polynomials,
//! * [`linsolve`]: Gauss–Jordan elimination over any of those fields,
//! * [`dissection`]: tilings, their cut structure and stitching equations,
//! * [`circuit`]: single-battery resistor networks and Kirchhoff's laws,
//! * [`correspondence`]: the tiling ↔ network bridge and ladder tilings,
//! * [`algcheck`]: conjugates, minimal polynomials and the right
//!   half-plane root test,
//! * [`batch`]: data-parallel drivers over many independent inputs.

pub mod algcheck;
pub mod arith;
pub mod batch;
pub mod circuit;
pub mod correspondence;
pub mod dissection;
pub mod fixtures;
pub mod linsolve;

pub use arith::{Field, OrderedField, Poly, QuadExt, QuadField, RatFunc, Rational};
