//! Squarefree modules as representations of the Boolean lattice `2^[n]`.
//!
//! A squarefree module is determined by its components `M_F` in squarefree
//! degrees `F ⊆ [n]` and the multiplication maps `x_j : M_F → M_{F ∪ j}` for
//! `j ∉ F`. Components carry a fixed ordered basis; maps are matrices.

use super::SqfreeError;
use crate::field::Field;
use crate::linalg::Matrix;
use crate::subset::Subset;

/// Largest ambient variable count for squarefree modules (`2^n` components).
pub const MAX_MODULE_VARS: usize = 16;

#[derive(Clone, Debug, PartialEq)]
pub struct SquarefreeModule<F: Field> {
    field: F,
    n: usize,
    dims: Vec<usize>,
    // maps[F * n + j] for j ∉ F; None for j ∈ F
    maps: Vec<Option<Matrix<F>>>,
}

impl<F: Field> SquarefreeModule<F> {
    /// Assembles a module from component dimensions and a map constructor, then
    /// validates matrix shapes and commuting squares.
    pub fn build(
        field: F,
        n: usize,
        dims: Vec<usize>,
        mut map: impl FnMut(Subset, usize) -> Matrix<F>,
    ) -> Result<Self, SqfreeError> {
        if n > MAX_MODULE_VARS {
            return Err(SqfreeError::TooManyVariables(n));
        }
        if dims.len() != 1 << n {
            return Err(SqfreeError::Shape(format!(
                "{} component dimensions for n = {n}",
                dims.len()
            )));
        }
        let mut maps = Vec::with_capacity((1 << n) * n);
        for bits in 0..(1u32 << n) {
            let face = Subset::from_bits(bits);
            for j in 0..n {
                if face.contains(j) {
                    maps.push(None);
                    continue;
                }
                let m = map(face, j);
                let (rows, cols) = (dims[face.with(j).index()], dims[face.index()]);
                if m.rows() != rows || m.cols() != cols {
                    return Err(SqfreeError::Shape(format!(
                        "map {face} -> {} is {}x{}, expected {rows}x{cols}",
                        face.with(j),
                        m.rows(),
                        m.cols()
                    )));
                }
                maps.push(Some(m));
            }
        }
        let module = SquarefreeModule { field, n, dims, maps };
        module.check_functorial()?;
        Ok(module)
    }

    pub fn zero(field: F, n: usize) -> Self {
        Self::build(field, n, vec![0; 1 << n], |_, _| Matrix::zero(field, 0, 0))
            .expect("zero module is well formed")
    }

    pub fn field(&self) -> F {
        self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self, face: Subset) -> usize {
        self.dims[face.index()]
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    /// The multiplication map `x_j : M_F → M_{F ∪ j}` for `j ∉ F` (0-based `j`).
    pub fn map(&self, face: Subset, j: usize) -> &Matrix<F> {
        self.maps[face.index() * self.n + j]
            .as_ref()
            .expect("j lies outside the face")
    }

    /// Composite map `M_from → M_to` for `from ⊆ to`.
    pub fn transition(&self, from: Subset, to: Subset) -> Matrix<F> {
        assert!(from.is_subset_of(to), "transition needs from ⊆ to");
        let mut acc = Matrix::identity(self.field, self.dim(from));
        let mut cur = from;
        for j in to.difference(from).positions() {
            acc = self.map(cur, j).mul(&acc);
            cur = cur.with(j);
        }
        acc
    }

    /// Checks that `x_i x_j = x_j x_i` on every component.
    pub fn check_functorial(&self) -> Result<(), SqfreeError> {
        for bits in 0..(1u32 << self.n) {
            let face = Subset::from_bits(bits);
            if self.dim(face) == 0 {
                continue;
            }
            let outside: Vec<usize> = (0..self.n).filter(|&j| !face.contains(j)).collect();
            for (a, &i) in outside.iter().enumerate() {
                for &j in &outside[a + 1..] {
                    let via_i = self.map(face.with(i), j).mul(self.map(face, i));
                    let via_j = self.map(face.with(j), i).mul(self.map(face, j));
                    if via_i != via_j {
                        return Err(SqfreeError::NotFunctorial {
                            face: face.elements(),
                            i: i + 1,
                            j: j + 1,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// No nonzero component outside degree `∅`.
    pub fn is_finite_length(&self) -> bool {
        self.dims.iter().skip(1).all(|&d| d == 0)
    }

    /// The module obtained by renaming variable `i` to `perm[i]`.
    pub fn permute_variables(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n);
        let mut inverse = vec![0; self.n];
        for (i, &p) in perm.iter().enumerate() {
            inverse[p] = i;
        }
        let preimage = |s: Subset| Subset::from_bits(s.positions().fold(0, |acc, i| acc | 1 << inverse[i]));
        let dims = (0..1u32 << self.n)
            .map(|b| self.dim(preimage(Subset::from_bits(b))))
            .collect();
        Self::build(self.field, self.n, dims, |face, j| {
            self.map(preimage(face), inverse[j]).clone()
        })
        .expect("relabelling preserves functoriality")
    }
}

/// A degree-preserving map of squarefree modules, one matrix per component.
#[derive(Clone, Debug, PartialEq)]
pub struct Morphism<F: Field> {
    components: Vec<Matrix<F>>,
}

impl<F: Field> Morphism<F> {
    pub fn new(components: Vec<Matrix<F>>) -> Self {
        Morphism { components }
    }

    pub fn identity(module: &SquarefreeModule<F>) -> Self {
        Morphism {
            components: module
                .dims()
                .iter()
                .map(|&d| Matrix::identity(module.field(), d))
                .collect(),
        }
    }

    pub fn zero(source: &SquarefreeModule<F>, target: &SquarefreeModule<F>) -> Self {
        Morphism {
            components: source
                .dims()
                .iter()
                .zip(target.dims())
                .map(|(&s, &t)| Matrix::zero(source.field(), t, s))
                .collect(),
        }
    }

    pub fn component(&self, face: Subset) -> &Matrix<F> {
        &self.components[face.index()]
    }

    /// Shapes agree with the modules and every square with the transition maps commutes.
    pub fn check(
        &self,
        source: &SquarefreeModule<F>,
        target: &SquarefreeModule<F>,
    ) -> Result<(), SqfreeError> {
        let n = source.n();
        if target.n() != n || self.components.len() != 1 << n {
            return Err(SqfreeError::Shape("morphism between different lattices".into()));
        }
        for bits in 0..(1u32 << n) {
            let face = Subset::from_bits(bits);
            let m = self.component(face);
            if m.rows() != target.dim(face) || m.cols() != source.dim(face) {
                return Err(SqfreeError::Shape(format!("morphism component at {face}")));
            }
        }
        for bits in 0..(1u32 << n) {
            let face = Subset::from_bits(bits);
            for j in (0..n).filter(|&j| !face.contains(j)) {
                let up = face.with(j);
                let left = self.component(up).mul(source.map(face, j));
                let right = target.map(face, j).mul(self.component(face));
                if left != right {
                    return Err(SqfreeError::NotCommuting {
                        face: face.elements(),
                        j: j + 1,
                    });
                }
            }
        }
        Ok(())
    }
}
