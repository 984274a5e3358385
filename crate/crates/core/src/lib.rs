//! Exact computation of birational reparametrizations of rational surface
//! parametrizations.
//!
//! Given a non-birational projective parametrization `P : P^2 --> S ⊂ P^3`,
//! the library computes a birational parametrization `Q` of the same surface
//! and a dominant plane map `S` with `P = Q ∘ S`, working entirely over the
//! rationals. Two drivers are exposed: a general one that searches degrees
//! increasingly, and an accelerated one for transversal inputs whose surface
//! admits a birational parametrization with empty base locus.

pub mod vars;
pub mod poly;
pub mod fiber;
pub mod groebner;
pub mod linalg;
pub mod ratfrac;

pub use poly::{MPoly, PolyError};
pub use ratfrac::RatFrac;
pub use vars::{VarClass, VarTable};
