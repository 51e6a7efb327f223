//! Finite fields `GF(p^m)`, polynomials, matrices and residue rings over them.

mod field;
mod matrix;
mod poly;
mod residue;

pub use field::{Fe, Field, MAX_FIELD_ORDER};
pub use matrix::Matrix;
pub use poly::Poly;
pub use residue::{unit_group_size, ModulusKind, ResidueRing, UnitResidue};
