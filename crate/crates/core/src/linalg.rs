//! Dense matrices over a [`Field`] with exact row reduction.
//!
//! Subspaces are kept as reduced row-echelon bases ([`Subspace`]), which makes
//! coordinates a lookup at the pivot columns and quotient representatives a
//! read-off at the non-pivot columns. All choices are deterministic.

use std::fmt;

use crate::field::Field;

#[derive(Clone, PartialEq)]
pub struct Matrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

impl<F: Field> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field.spec())?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|e| e.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl<F: Field> Matrix<F> {
    pub fn zero(field: F, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: F, n: usize) -> Self {
        let mut m = Self::zero(field, n, n);
        for i in 0..n {
            m[(i, i)] = field.one();
        }
        m
    }

    /// Builds a matrix from row vectors of equal length `cols`.
    pub fn from_rows(field: F, cols: usize, rows: Vec<Vec<F::Elem>>) -> Self {
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged rows");
            data.extend(row);
        }
        Matrix {
            field,
            rows: nrows,
            cols,
            data,
        }
    }

    /// Builds a matrix whose columns are the given vectors of length `rows`.
    pub fn from_columns(field: F, rows: usize, columns: &[Vec<F::Elem>]) -> Self {
        let mut m = Self::zero(field, rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "ragged columns");
            for (r, v) in col.iter().enumerate() {
                m[(r, c)] = v.clone();
            }
        }
        m
    }

    pub fn field(&self) -> F {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[F::Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<F::Elem> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| self.field.is_zero(e))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zero(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let f = self.field;
        let mut out = Self::zero(f, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if f.is_zero(a) {
                    continue;
                }
                for c in 0..other.cols {
                    let b = &other[(k, c)];
                    if !f.is_zero(b) {
                        let idx = r * out.cols + c;
                        out.data[idx] = f.add(&out.data[idx], &f.mul(a, b));
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in product");
        let f = self.field;
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !f.is_zero(a) && !f.is_zero(b))
                    .fold(f.zero(), |acc, (a, b)| f.add(&acc, &f.mul(a, b)))
            })
            .collect()
    }

    /// Submatrix on the given row and column index lists (in that order).
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Matrix<F> {
        let mut m = Self::zero(self.field, rows.len(), cols.len());
        for (i, &r) in rows.iter().enumerate() {
            for (j, &c) in cols.iter().enumerate() {
                m[(i, j)] = self[(r, c)].clone();
            }
        }
        m
    }

    /// Reduces `self` in place to reduced row-echelon form and returns the pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let f = self.field;
        let mut pivots = Vec::new();
        let mut lead = 0;
        for c in 0..self.cols {
            if lead == self.rows {
                break;
            }
            let Some(p) = (lead..self.rows).find(|&r| !f.is_zero(&self[(r, c)])) else {
                continue;
            };
            self.swap_rows(lead, p);
            let inv = f.inv(&self[(lead, c)]);
            for k in c..self.cols {
                let idx = lead * self.cols + k;
                self.data[idx] = f.mul(&self.data[idx], &inv);
            }
            for r in 0..self.rows {
                if r == lead {
                    continue;
                }
                let factor = self[(r, c)].clone();
                if f.is_zero(&factor) {
                    continue;
                }
                for k in c..self.cols {
                    let pivot_entry = self.data[lead * self.cols + k].clone();
                    if f.is_zero(&pivot_entry) {
                        continue;
                    }
                    let idx = r * self.cols + k;
                    self.data[idx] = f.sub_mul(&self.data[idx], &factor, &pivot_entry);
                }
            }
            pivots.push(c);
            lead += 1;
        }
        pivots
    }

    pub fn rref(&self) -> (Matrix<F>, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        self.rref().1.len()
    }

    /// Basis of the null space `{v : self * v = 0}`, one vector per free column.
    pub fn kernel(&self) -> Vec<Vec<F::Elem>> {
        let f = self.field;
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![f.zero(); self.cols];
                v[free] = f.one();
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = f.neg(&r[(i, free)]);
                }
                v
            })
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for k in 0..self.cols {
            self.data.swap(a * self.cols + k, b * self.cols + k);
        }
    }
}

impl<F: Field> std::ops::Index<(usize, usize)> for Matrix<F> {
    type Output = F::Elem;
    fn index(&self, (r, c): (usize, usize)) -> &F::Elem {
        &self.data[r * self.cols + c]
    }
}

impl<F: Field> std::ops::IndexMut<(usize, usize)> for Matrix<F> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut F::Elem {
        &mut self.data[r * self.cols + c]
    }
}

/// A subspace of `F^ambient` held as a reduced row-echelon basis.
#[derive(Clone, Debug)]
pub struct Subspace<F: Field> {
    ambient: usize,
    basis: Matrix<F>,
    pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    pub fn zero(field: F, ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zero(field, 0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn span(field: F, ambient: usize, vectors: Vec<Vec<F::Elem>>) -> Self {
        let mut m = Matrix::from_rows(field, ambient, vectors);
        let pivots = m.rref_in_place();
        let rank = pivots.len();
        m.rows = rank;
        m.data.truncate(rank * ambient);
        Subspace {
            ambient,
            basis: m,
            pivots,
        }
    }

    /// Column span of `m`.
    pub fn column_span(m: &Matrix<F>) -> Self {
        Self::span(m.field, m.rows, m.transpose().into_rows())
    }

    pub fn kernel_of(m: &Matrix<F>) -> Self {
        Self::span(m.field, m.cols, m.kernel())
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_vector(&self, i: usize) -> &[F::Elem] {
        self.basis.row(i)
    }

    /// Subtracts from `v` its combination of basis rows so that `v` vanishes at every pivot.
    pub fn reduce(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        let f = self.basis.field;
        let mut out = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            let factor = out[p].clone();
            if f.is_zero(&factor) {
                continue;
            }
            for (k, b) in self.basis.row(i).iter().enumerate() {
                if !f.is_zero(b) {
                    out[k] = f.sub_mul(&out[k], &factor, b);
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[F::Elem]) -> bool {
        let f = self.basis.field;
        self.reduce(v).iter().all(|e| f.is_zero(e))
    }

    /// Coordinates of `v` in the echelon basis. `v` must lie in the subspace.
    pub fn coordinates(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        debug_assert!(self.contains(v), "vector outside subspace");
        self.pivots.iter().map(|&p| v[p].clone()).collect()
    }

    /// Ambient indices that are not pivots; their unit vectors span a complement.
    pub fn complement_indices(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&c| !is_pivot[c]).collect()
    }

    /// Coordinates of the class of `v` in `F^ambient / self`, in the basis of
    /// complement unit vectors.
    pub fn quotient_coordinates(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        let reduced = self.reduce(v);
        self.complement_indices()
            .into_iter()
            .map(|c| reduced[c].clone())
            .collect()
    }
}

impl<F: Field> Matrix<F> {
    fn into_rows(self) -> Vec<Vec<F::Elem>> {
        if self.cols == 0 {
            return vec![Vec::new(); self.rows];
        }
        self.data.chunks(self.cols).map(|c| c.to_vec()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use num_rational::BigRational;

    fn q(v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }

    #[test]
    fn rank_and_kernel_over_rationals() {
        let f = Rationals;
        let m = Matrix::from_rows(
            f,
            3,
            vec![vec![q(1), q(2), q(3)], vec![q(2), q(4), q(6)], vec![q(1), q(0), q(1)]],
        );
        assert_eq!(m.rank(), 2);
        let ker = m.kernel();
        assert_eq!(ker.len(), 1);
        assert!(m.mul_vec(&ker[0]).iter().all(|e| f.is_zero(e)));
    }

    #[test]
    fn rank_depends_on_characteristic() {
        // [[1,1],[1,-1]] has determinant -2.
        let rows = |f: PrimeField| {
            Matrix::from_rows(f, 2, vec![vec![1, 1], vec![1, f.neg(&1)]])
        };
        assert_eq!(rows(PrimeField::new(2).unwrap()).rank(), 1);
        assert_eq!(rows(PrimeField::new(3).unwrap()).rank(), 2);
    }

    #[test]
    fn empty_shapes() {
        let f = PrimeField::new(5).unwrap();
        assert_eq!(Matrix::zero(f, 0, 3).rank(), 0);
        assert_eq!(Matrix::zero(f, 0, 3).kernel().len(), 3);
        assert_eq!(Matrix::zero(f, 3, 0).kernel().len(), 0);
        let s = Subspace::column_span(&Matrix::zero(f, 4, 0));
        assert_eq!(s.dim(), 0);
        assert_eq!(s.complement_indices(), vec![0, 1, 2, 3]);
    }

    #[test]
    fn subspace_coordinates_and_quotient() {
        let f = PrimeField::new(7).unwrap();
        let s = Subspace::span(f, 3, vec![vec![1, 2, 0], vec![2, 4, 0], vec![0, 1, 1]]);
        assert_eq!(s.dim(), 2);
        let v = vec![3, 6, 0];
        assert!(s.contains(&v));
        let coords = s.coordinates(&v);
        let rebuilt: Vec<u32> = (0..3)
            .map(|k| {
                (0..s.dim()).fold(0, |acc, i| f.add(&acc, &f.mul(&coords[i], &s.basis_vector(i)[k])))
            })
            .collect();
        assert_eq!(rebuilt, v);
        assert_eq!(s.complement_indices().len(), 1);
        assert_eq!(s.quotient_coordinates(&v), vec![0]);
        assert!(!s.contains(&[0, 0, 1]));
    }
}
