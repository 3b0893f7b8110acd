//! Simplicial complexes, Stanley-Reisner translation, reduced homology over a
//! field, the Reisner and Buchsbaum criteria, and dual graphs.

mod complex;
mod dual_graph;
mod homology;
mod parse;

use thiserror::Error;

pub use complex::{complex_of_ideal, sr_ideal, SimplicialComplex};
pub use dual_graph::{dual_graph, DualGraph};
pub use homology::{
    buchsbaum_verdict, cohen_macaulay_witness, is_buchsbaum, is_cohen_macaulay, is_connected,
    reduced_homology, reduced_homology_over, BuchsbaumVerdict, HomologyResult,
};
pub use parse::parse_complex;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SimplicialError {
    #[error("the void complex has no reduced homology")]
    VoidComplex,
    #[error("the complex has no vertices")]
    NoVertices,
    #[error("{0:?} is not a face")]
    NotAFace(Vec<usize>),
    #[error("face {face:?} uses a vertex outside 1..{n}")]
    VertexOutOfRange { face: Vec<usize>, n: usize },
    #[error("{0} vertices exceed the supported ground set")]
    TooManyVertices(usize),
    #[error("monomial ideal is not radical: generator {0} is not squarefree")]
    NotRadical(String),
}
