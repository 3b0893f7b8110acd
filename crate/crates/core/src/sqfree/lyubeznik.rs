//! Stanley-Reisner modules, Lyubeznik tables and the canonical Cohen-Macaulay test.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::ext::ext_duals;
use super::module::SquarefreeModule;
use super::SqfreeError;
use crate::dispatch_field;
use crate::field::{Field, FieldSpec};
use crate::linalg::Matrix;
use crate::simplicial::{dual_graph, is_cohen_macaulay, SimplicialComplex};
use crate::subset::Subset;

/// `K[Δ]` in squarefree degrees: `K` on faces, `0` elsewhere, identity maps between faces.
pub fn sr_module<F: Field>(complex: &SimplicialComplex, field: F) -> SquarefreeModule<F> {
    let n = complex.vertex_count();
    let dims = (0..1u32 << n)
        .map(|b| usize::from(complex.contains(Subset::from_bits(b))))
        .collect::<Vec<_>>();
    SquarefreeModule::build(field, n, dims.clone(), |face, j| {
        let (r, c) = (dims[face.with(j).index()], dims[face.index()]);
        if r == 1 && c == 1 {
            Matrix::identity(field, 1)
        } else {
            Matrix::zero(field, r, c)
        }
    })
    .expect("Stanley-Reisner modules are functorial")
}

/// `Λ = (λ_{i,j})_{0 ≤ i,j ≤ d}`, row `i`, column `j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LyubeznikTable {
    pub d: usize,
    #[serde(rename = "lambda")]
    pub entries: Vec<Vec<usize>>,
}

impl LyubeznikTable {
    pub fn get(&self, i: usize, j: usize) -> usize {
        self.entries[i][j]
    }

    /// `λ_{d,d} = 1` and every other entry vanishes.
    pub fn is_trivial(&self) -> bool {
        self.entries.iter().enumerate().all(|(i, row)| {
            row.iter()
                .enumerate()
                .all(|(j, &v)| v == usize::from(i == self.d && j == self.d))
        })
    }

    pub fn is_upper_triangular(&self) -> bool {
        self.entries
            .iter()
            .enumerate()
            .all(|(i, row)| row.iter().take(i).all(|&v| v == 0))
    }

    pub fn trivial(d: usize) -> Self {
        let mut entries = vec![vec![0; d + 1]; d + 1];
        entries[d][d] = 1;
        LyubeznikTable { d, entries }
    }
}

impl fmt::Display for LyubeznikTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .entries
            .iter()
            .flatten()
            .map(|v| v.to_string().len())
            .max()
            .unwrap_or(1);
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(|v| format!("{v:>width$}")).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

fn require_nonvoid(complex: &SimplicialComplex) -> Result<usize, SqfreeError> {
    complex.krull_dimension().ok_or(SqfreeError::VoidComplex)
}

/// `λ_{i,j} = dim_K Ext^{n-i}(Ext^{n-j}(K[Δ], ω), ω)_∅`.
pub fn lyubeznik_table_over<F: Field>(complex: &SimplicialComplex, field: F) -> Result<LyubeznikTable, SqfreeError> {
    let d = require_nonvoid(complex)?;
    let n = complex.vertex_count();
    let inner = ext_duals(&sr_module(complex, field))?;
    let mut entries = vec![vec![0; d + 1]; d + 1];
    for j in 0..=d {
        let outer = ext_duals(&inner[n - j])?;
        for (i, row) in entries.iter_mut().enumerate() {
            row[j] = outer[n - i].dim(Subset::EMPTY);
        }
    }
    Ok(LyubeznikTable { d, entries })
}

pub fn lyubeznik_table(complex: &SimplicialComplex, spec: FieldSpec) -> Result<LyubeznikTable, SqfreeError> {
    dispatch_field!(spec, f => lyubeznik_table_over(complex, f))
}

/// Outcome of the canonical Cohen-Macaulay test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CcmVerdict {
    pub ccm: bool,
    /// Smallest `i < d` with `Ext^{n-i}(Ext^{n-d}(K[Δ], ω), ω) ≠ 0`.
    pub witness: Option<usize>,
    /// `λ_{2,3}`, reported for two-dimensional complexes.
    pub lambda_23: Option<usize>,
}

/// `K[Δ]` is CCM iff `Ext^{n-i}(E, ω) = 0` for all `i < d`, where `E = Ext^{n-d}(K[Δ], ω)`.
pub fn ccm_verdict_over<F: Field>(complex: &SimplicialComplex, field: F) -> Result<CcmVerdict, SqfreeError> {
    let d = require_nonvoid(complex)?;
    let n = complex.vertex_count();
    let canonical = super::ext::ext_dual(&sr_module(complex, field), n - d)?;
    let outer = ext_duals(&canonical)?;
    let witness = (0..d).find(|&i| !outer[n - i].is_zero());
    let ccm = witness.is_none();
    let lambda_23 = (d == 3).then(|| outer[n - 2].dim(Subset::EMPTY));
    if let Some(l) = lambda_23 {
        if (l == 0) != ccm {
            return Err(SqfreeError::Inconsistent(format!(
                "lambda_2,3 = {l} but the vanishing test says ccm = {ccm}"
            )));
        }
    }
    Ok(CcmVerdict {
        ccm,
        witness,
        lambda_23,
    })
}

pub fn ccm_verdict(complex: &SimplicialComplex, spec: FieldSpec) -> Result<CcmVerdict, SqfreeError> {
    dispatch_field!(spec, f => ccm_verdict_over(complex, f))
}

pub fn is_ccm(complex: &SimplicialComplex, spec: FieldSpec) -> Result<bool, SqfreeError> {
    Ok(ccm_verdict(complex, spec)?.ccm)
}

/// Cross-checks between a Lyubeznik table and the combinatorics of `Δ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConsistencyReport {
    pub table: LyubeznikTable,
    /// Components of the dual graph on the top-dimensional facets.
    pub top_components: usize,
    pub top_matches_components: bool,
    pub upper_triangular: bool,
    pub cohen_macaulay: bool,
    /// For Cohen-Macaulay complexes, whether the table is trivial; vacuously true otherwise.
    pub cm_implies_trivial: bool,
}

impl ConsistencyReport {
    pub fn consistent(&self) -> bool {
        self.top_matches_components && self.upper_triangular && self.cm_implies_trivial
    }
}

pub fn lyubeznik_consistency(complex: &SimplicialComplex, spec: FieldSpec) -> Result<ConsistencyReport, SqfreeError> {
    let table = lyubeznik_table(complex, spec)?;
    let graph = dual_graph(complex);
    let top = complex.dimension().expect("non-void") + 1;
    let lower = complex.facets().iter().filter(|f| (f.len() as isize) < top).count();
    // lower-dimensional facets meet no facet in a set of size dim Δ, so each is its own component
    let top_components = graph.components - lower;
    let cohen_macaulay = is_cohen_macaulay(complex, spec);
    Ok(ConsistencyReport {
        top_matches_components: table.get(table.d, table.d) == top_components,
        upper_triangular: table.is_upper_triangular(),
        cm_implies_trivial: !cohen_macaulay || table.is_trivial(),
        cohen_macaulay,
        top_components,
        table,
    })
}
