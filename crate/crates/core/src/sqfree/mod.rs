//! Squarefree modules over `K[x_1, ..., x_n]` as representations of the Boolean
//! lattice, their minimal free resolutions, `Ext` duals into the canonical
//! module, Lyubeznik tables and the canonical Cohen-Macaulay test.

mod ext;
mod free;
mod lyubeznik;
mod module;

use thiserror::Error;

pub use ext::{ext_dual, ext_duals, ext_from_resolution};
pub use free::{depth, free_cover, free_resolution, kernel, minimal_generators, FreeResolution, FreeSquarefree};
pub use lyubeznik::{
    ccm_verdict, ccm_verdict_over, is_ccm, lyubeznik_consistency, lyubeznik_table, lyubeznik_table_over,
    sr_module, CcmVerdict, ConsistencyReport, LyubeznikTable,
};
pub use module::{Morphism, SquarefreeModule, MAX_MODULE_VARS};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SqfreeError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("x{i} and x{j} do not commute out of degree {face:?}")]
    NotFunctorial { face: Vec<usize>, i: usize, j: usize },
    #[error("morphism does not commute with x{j} out of degree {face:?}")]
    NotCommuting { face: Vec<usize>, j: usize },
    #[error("{0} variables exceed the supported limit of {MAX_MODULE_VARS}")]
    TooManyVariables(usize),
    #[error("the zero module has no depth")]
    ZeroModule,
    #[error("the void complex has no Stanley-Reisner module of positive rank")]
    VoidComplex,
    #[error("Ext index {index} outside 0..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("free resolution longer than {0} steps")]
    ResolutionTooLong(usize),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}
