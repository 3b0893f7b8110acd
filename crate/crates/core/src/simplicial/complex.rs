use std::collections::BTreeSet;
use std::fmt;

use super::SimplicialError;
use crate::groebner::{Monomial, MonomialIdeal};
use crate::subset::{Subset, MAX_GROUND_SET};

/// A simplicial complex on the vertex set `[n]`, stored by its facets.
///
/// No facet contains another. The void complex has no facets at all; the
/// irrelevant complex `{∅}` has the empty set as its single facet.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<Subset>,
}

impl SimplicialComplex {
    /// Builds a complex from any generating faces; non-maximal ones are dropped.
    pub fn new(n: usize, generators: Vec<Subset>) -> Result<Self, SimplicialError> {
        if n >= MAX_GROUND_SET {
            return Err(SimplicialError::TooManyVertices(n));
        }
        let full = Subset::full(n);
        if let Some(bad) = generators.iter().find(|f| !f.is_subset_of(full)) {
            return Err(SimplicialError::VertexOutOfRange {
                face: bad.elements(),
                n,
            });
        }
        Ok(Self::from_generators_unchecked(n, generators))
    }

    /// Builds a complex from 1-based facet vertex lists.
    pub fn from_facets(n: usize, facets: &[&[usize]]) -> Result<Self, SimplicialError> {
        let mut gens = Vec::with_capacity(facets.len());
        for f in facets {
            if let Some(&v) = f.iter().find(|&&v| v == 0 || v > n) {
                return Err(SimplicialError::VertexOutOfRange {
                    face: vec![v],
                    n,
                });
            }
            gens.push(Subset::from_elements(f.iter().copied()));
        }
        Self::new(n, gens)
    }

    pub(crate) fn from_generators_unchecked(n: usize, generators: Vec<Subset>) -> Self {
        let mut gens = generators;
        gens.sort_by(|a, b| b.len().cmp(&a.len()).then(a.lex_cmp(*b)));
        gens.dedup();
        let mut facets: Vec<Subset> = Vec::new();
        for g in gens {
            if !facets.iter().any(|f| g.is_subset_of(*f)) {
                facets.push(g);
            }
        }
        facets.sort_by(|a, b| a.lex_cmp(*b));
        SimplicialComplex { n, facets }
    }

    /// The full simplex on `[n]`.
    pub fn simplex(n: usize) -> Self {
        Self::from_generators_unchecked(n, vec![Subset::full(n)])
    }

    /// The complex with no faces.
    pub fn void(n: usize) -> Self {
        SimplicialComplex { n, facets: Vec::new() }
    }

    /// The complex `{∅}`.
    pub fn irrelevant(n: usize) -> Self {
        SimplicialComplex {
            n,
            facets: vec![Subset::EMPTY],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[Subset] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn contains(&self, face: Subset) -> bool {
        self.facets.iter().any(|f| face.is_subset_of(*f))
    }

    /// Dimension (largest facet size minus one); `None` for the void complex.
    pub fn dimension(&self) -> Option<isize> {
        self.facets.iter().map(|f| f.len() as isize - 1).max()
    }

    /// Krull dimension of the Stanley-Reisner ring, `dim Δ + 1`.
    pub fn krull_dimension(&self) -> Option<usize> {
        self.dimension().map(|d| (d + 1) as usize)
    }

    pub fn is_pure(&self) -> bool {
        match self.facets.first() {
            None => true,
            Some(f) => self.facets.iter().all(|g| g.len() == f.len()),
        }
    }

    /// Vertices that lie in some face.
    pub fn used_vertices(&self) -> Subset {
        self.facets.iter().fold(Subset::EMPTY, |acc, f| acc.union(*f))
    }

    /// All faces in graded order (by size, then lexicographically).
    pub fn faces(&self) -> Vec<Subset> {
        let mut all = BTreeSet::new();
        for f in &self.facets {
            for s in f.subsets() {
                all.insert((s.len(), s.elements(), s));
            }
        }
        all.into_iter().map(|(_, _, s)| s).collect()
    }

    /// Faces grouped by dimension: entry `k` holds faces of dimension `k - 1`.
    pub fn faces_by_size(&self) -> Vec<Vec<Subset>> {
        let faces = self.faces();
        let top = faces.iter().map(|f| f.len()).max().unwrap_or(0);
        let mut out = vec![Vec::new(); if faces.is_empty() { 0 } else { top + 1 }];
        for f in faces {
            out[f.len()].push(f);
        }
        out
    }

    /// Face counts `f_{-1}, f_0, ..., f_{dim}`.
    pub fn f_vector(&self) -> Vec<usize> {
        self.faces_by_size().iter().map(Vec::len).collect()
    }

    /// `link_Δ(σ) = {τ : τ ∩ σ = ∅, τ ∪ σ ∈ Δ}`, on the same vertex labels.
    pub fn link(&self, sigma: Subset) -> Result<Self, SimplicialError> {
        if !self.contains(sigma) {
            return Err(SimplicialError::NotAFace(sigma.elements()));
        }
        let gens = self
            .facets
            .iter()
            .filter(|f| sigma.is_subset_of(**f))
            .map(|f| f.difference(sigma))
            .collect();
        Ok(Self::from_generators_unchecked(self.n, gens))
    }

    /// The subcomplex of faces contained in `w`.
    pub fn restriction(&self, w: Subset) -> Self {
        let gens = self.facets.iter().map(|f| f.intersection(w)).collect();
        Self::from_generators_unchecked(self.n, gens)
    }

    /// Minimal non-faces.
    pub fn minimal_nonfaces(&self) -> Vec<Subset> {
        let mut out = Vec::new();
        for s in Subset::all_graded(self.n) {
            if self.contains(s) {
                continue;
            }
            if s.positions().all(|i| self.contains(s.without(i))) {
                out.push(s);
            }
        }
        out
    }

    /// Faces of the Alexander dual are complements of non-faces of `self`.
    pub fn alexander_dual(&self) -> Self {
        // maximal faces of the dual are complements of minimal non-faces
        let gens = self
            .minimal_nonfaces()
            .into_iter()
            .map(|s| s.complement(self.n))
            .collect();
        Self::from_generators_unchecked(self.n, gens)
    }

    pub fn facet_lists(&self) -> Vec<Vec<usize>> {
        self.facets.iter().map(|f| f.elements()).collect()
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Δ[n={}]{:?}", self.n, self.facets)
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "vertices: {}", self.n)?;
        for facet in &self.facets {
            if facet.is_empty() {
                writeln!(f, "{{}}")?;
            } else {
                let labels: Vec<String> = facet.elements().iter().map(|v| v.to_string()).collect();
                writeln!(f, "{}", labels.join(" "))?;
            }
        }
        Ok(())
    }
}

/// Stanley-Reisner ideal: generated by the squarefree monomials of the minimal non-faces.
pub fn sr_ideal(complex: &SimplicialComplex) -> MonomialIdeal {
    let n = complex.vertex_count();
    MonomialIdeal::new(
        n,
        complex
            .minimal_nonfaces()
            .into_iter()
            .map(|s| Monomial::squarefree(n, s))
            .collect(),
    )
}

/// The complex whose Stanley-Reisner ideal is `ideal`.
pub fn complex_of_ideal(ideal: &MonomialIdeal) -> Result<SimplicialComplex, SimplicialError> {
    if let Some(g) = ideal.first_non_squarefree() {
        return Err(SimplicialError::NotRadical(g.to_string()));
    }
    let n = ideal.nvars();
    if n >= MAX_GROUND_SET {
        return Err(SimplicialError::TooManyVertices(n));
    }
    let supports: Vec<Subset> = ideal.generators().iter().map(Monomial::support).collect();
    let faces: Vec<Subset> = Subset::all_graded(n)
        .into_iter()
        .filter(|s| !supports.iter().any(|g| g.is_subset_of(*s)))
        .collect();
    Ok(SimplicialComplex::from_generators_unchecked(n, faces))
}
