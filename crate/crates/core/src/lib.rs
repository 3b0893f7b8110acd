//! Exact computations around Stanley-Reisner rings: Groebner initial ideals,
//! simplicial homology, squarefree `Ext` duals, Lyubeznik tables and the
//! canonical Cohen-Macaulay property.

pub mod error;
pub mod field;
pub mod groebner;
pub mod linalg;
pub mod simplicial;
pub mod sqfree;
pub mod subset;
pub mod workbench;

pub use error::ParseError;
pub use field::{Field, FieldError, FieldSpec, PrimeField, Rationals};
pub use subset::Subset;

