use std::collections::HashMap;

use serde::Serialize;

use super::complex::SimplicialComplex;
use super::SimplicialError;
use crate::dispatch_field;
use crate::field::{Field, FieldSpec};
use crate::linalg::Matrix;
use crate::subset::Subset;

/// Reduced Betti numbers `dim H̃_i(Δ; K)` for `i = -1, ..., dim Δ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyResult {
    pub field: FieldSpec,
    pub dims: Vec<usize>,
}

impl HomologyResult {
    /// `dim H̃_i`, zero outside the stored range.
    pub fn reduced_betti(&self, i: isize) -> usize {
        if i < -1 {
            return 0;
        }
        self.dims.get((i + 1) as usize).copied().unwrap_or(0)
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.dims
            .iter()
            .enumerate()
            .map(|(k, &d)| if k % 2 == 1 { d as i64 } else { -(d as i64) })
            .sum()
    }

    pub fn is_acyclic(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }
}

/// Boundary matrix from faces of size `s` to faces of size `s - 1`, with
/// rows and columns in the given (lexicographic) face order.
pub(crate) fn boundary_matrix<F: Field>(field: F, lower: &[Subset], upper: &[Subset]) -> Matrix<F> {
    let index: HashMap<Subset, usize> = lower.iter().enumerate().map(|(i, f)| (*f, i)).collect();
    let mut m = Matrix::zero(field, lower.len(), upper.len());
    for (c, face) in upper.iter().enumerate() {
        for (k, v) in face.positions().enumerate() {
            let r = index[&face.without(v)];
            m[(r, c)] = if k % 2 == 0 { field.one() } else { field.neg(&field.one()) };
        }
    }
    m
}

pub fn reduced_homology_over<F: Field>(
    complex: &SimplicialComplex,
    field: F,
) -> Result<HomologyResult, SimplicialError> {
    if complex.is_void() {
        return Err(SimplicialError::VoidComplex);
    }
    let by_size = complex.faces_by_size();
    let top = by_size.len() - 1;
    // ranks[s] = rank of the boundary map out of faces of size s
    let mut ranks = vec![0usize; top + 2];
    for s in 1..=top {
        ranks[s] = boundary_matrix(field, &by_size[s - 1], &by_size[s]).rank();
    }
    let dims = (0..=top)
        .map(|s| by_size[s].len() - ranks[s] - ranks[s + 1])
        .collect();
    Ok(HomologyResult {
        field: field.spec(),
        dims,
    })
}

/// Reduced simplicial homology over the field named by `spec`.
pub fn reduced_homology(
    complex: &SimplicialComplex,
    spec: FieldSpec,
) -> Result<HomologyResult, SimplicialError> {
    dispatch_field!(spec, f => reduced_homology_over(complex, f))
}

/// Connectedness of a complex with at least one vertex: `H̃_0 = 0`.
pub fn is_connected(complex: &SimplicialComplex) -> Result<bool, SimplicialError> {
    if complex.is_void() {
        return Err(SimplicialError::VoidComplex);
    }
    if complex.used_vertices().is_empty() {
        return Err(SimplicialError::NoVertices);
    }
    Ok(reduced_homology(complex, FieldSpec::RATIONALS)?.reduced_betti(0) == 0)
}

fn link_is_acyclic_below_top<F: Field>(link: &SimplicialComplex, field: F) -> bool {
    let dim = link.dimension().expect("links of faces are non-void");
    let h = reduced_homology_over(link, field).expect("non-void");
    (-1..dim).all(|i| h.reduced_betti(i) == 0)
}

/// First face whose link has homology below its top dimension, if any.
pub fn cohen_macaulay_witness(complex: &SimplicialComplex, spec: FieldSpec) -> Option<Subset> {
    dispatch_field!(spec, f => {
        complex.faces().into_iter().find(|&sigma| {
            let link = complex.link(sigma).expect("face");
            !link_is_acyclic_below_top(&link, f)
        })
    })
}

/// Reisner's criterion. The void complex is not Cohen-Macaulay.
pub fn is_cohen_macaulay(complex: &SimplicialComplex, spec: FieldSpec) -> bool {
    !complex.is_void() && cohen_macaulay_witness(complex, spec).is_none()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BuchsbaumVerdict {
    Buchsbaum,
    Void,
    NotPure,
    /// A non-empty face with a non-Cohen-Macaulay link.
    FailingLink(Subset),
}

impl BuchsbaumVerdict {
    pub fn holds(&self) -> bool {
        *self == BuchsbaumVerdict::Buchsbaum
    }
}

/// Pure, and every non-empty face has a Cohen-Macaulay link.
pub fn buchsbaum_verdict(complex: &SimplicialComplex, spec: FieldSpec) -> BuchsbaumVerdict {
    if complex.is_void() {
        return BuchsbaumVerdict::Void;
    }
    if !complex.is_pure() {
        return BuchsbaumVerdict::NotPure;
    }
    for sigma in complex.faces().into_iter().filter(|s| !s.is_empty()) {
        let link = complex.link(sigma).expect("face");
        if cohen_macaulay_witness(&link, spec).is_some() {
            return BuchsbaumVerdict::FailingLink(sigma);
        }
    }
    BuchsbaumVerdict::Buchsbaum
}

pub fn is_buchsbaum(complex: &SimplicialComplex, spec: FieldSpec) -> bool {
    buchsbaum_verdict(complex, spec).holds()
}
