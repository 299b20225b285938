//! Skein-relation invariants of links and the algebras they generate.
//!
//! * [`poly`]: exact Laurent polynomials, the value type of every invariant.
//! * [`diagram`]: PD-code parsing and validated oriented link diagrams.
//! * [`bracket`]: Kauffman bracket (state sum and memoized skein recursion), Jones polynomial.
//! * [`tl`]: Temperley–Lieb algebra, tangle reduction and annular closure.
//! * [`skein_algebra`]: skein algebra of the once-punctured torus.
//! * [`homflypt`]: Homflypt and Conway polynomials, finite-type differences.
//! * [`colorings`]: Fox colorings and the 3-coloring/Jones identity.
//! * [`framed_perm`]: framed permutations and the type-A Hecke algebra.
//! * [`homology_skein`]: Smith normal form and the second skein module.
//! * [`moves`]: Reidemeister moves and braid closures for generating test diagrams.
//!
//! The `parallel` feature (on by default) evaluates exponential state sums
//! with rayon; without it the same code runs sequentially.

pub mod bracket;
pub mod colorings;
pub mod diagram;
pub mod framed_perm;
pub mod homflypt;
pub mod homology_skein;
pub mod moves;
mod planar;
pub mod poly;
pub mod skein_algebra;
pub mod tl;

pub use diagram::{parse_pd, validate, DiagramError, LinkDiagram, PdCode};
pub use poly::{CyclotomicValue, LaurentPoly, PolyError};
