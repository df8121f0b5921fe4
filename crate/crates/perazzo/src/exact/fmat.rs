//! Dense matrices over an exact field: reduced row echelon form, rank,
//! kernels, solving, and row-space operations.
//!
//! Row operations skip zero multipliers, so the 0/1 incidence-style matrices
//! this crate mostly produces reduce without fill-in cost.

use crate::exact::field::Field;

#[derive(Clone, PartialEq, Debug)]
pub struct Mat<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elt>,
}

impl<F: Field> Mat<F> {
    pub fn zero(field: F, rows: usize, cols: usize) -> Self {
        let data = vec![field.zero(); rows * cols];
        Mat {
            field,
            rows,
            cols,
            data,
        }
    }

    pub fn identity(field: F, n: usize) -> Self {
        let mut m = Mat::zero(field, n, n);
        for i in 0..n {
            let one = m.field.one();
            *m.at_mut(i, i) = one;
        }
        m
    }

    pub fn from_rows(field: F, rows: Vec<Vec<F::Elt>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Mat {
            field,
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(field: F, rows: usize, cols: usize, f: impl Fn(usize, usize) -> F::Elt) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat {
            field,
            rows,
            cols,
            data,
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &F::Elt {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut F::Elt {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[F::Elt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn push_row(&mut self, row: Vec<F::Elt>) {
        assert_eq!(row.len(), self.cols);
        self.data.extend(row);
        self.rows += 1;
    }

    pub fn transpose(&self) -> Self {
        Mat::from_fn(self.field.clone(), self.cols, self.rows, |i, j| {
            self.at(j, i).clone()
        })
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        Mat::from_fn(self.field.clone(), self.rows, other.cols, |i, j| {
            let mut acc = self.field.zero();
            for k in 0..self.cols {
                if self.field.is_zero(self.at(i, k)) {
                    continue;
                }
                acc = self
                    .field
                    .add(&acc, &self.field.mul(self.at(i, k), other.at(k, j)));
            }
            acc
        })
    }

    pub fn mul_vec(&self, v: &[F::Elt]) -> Vec<F::Elt> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for k in 0..self.cols {
                    if self.field.is_zero(self.at(i, k)) {
                        continue;
                    }
                    acc = self.field.add(&acc, &self.field.mul(self.at(i, k), &v[k]));
                }
                acc
            })
            .collect()
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            // find a pivot in column c at or below row r
            let Some(pr) = (r..self.rows).find(|&i| !self.field.is_zero(self.at(i, c))) else {
                continue;
            };
            if pr != r {
                for j in 0..self.cols {
                    self.data.swap(pr * self.cols + j, r * self.cols + j);
                }
            }
            let inv = self
                .field
                .inv(self.at(r, c))
                .expect("pivot is nonzero by construction");
            for j in c..self.cols {
                let v = self.field.mul(self.at(r, j), &inv);
                *self.at_mut(r, j) = v;
            }
            for i in 0..self.rows {
                if i == r || self.field.is_zero(self.at(i, c)) {
                    continue;
                }
                let f = self.at(i, c).clone();
                for j in c..self.cols {
                    let v = self
                        .field
                        .sub(self.at(i, j), &self.field.mul(&f, self.at(r, j)));
                    *self.at_mut(i, j) = v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Basis of the right kernel `{x : A x = 0}`.
    pub fn kernel_basis(&self) -> Vec<Vec<F::Elt>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = vec![self.field.zero(); self.cols];
            v[free] = self.field.one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = self.field.neg(m.at(r, free));
            }
            basis.push(v);
        }
        basis
    }

    /// Solve `A x = b`; `None` when inconsistent.
    pub fn solve(&self, b: &[F::Elt]) -> Option<Vec<F::Elt>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Mat::from_fn(self.field.clone(), self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self.at(i, j).clone()
            } else {
                b[i].clone()
            }
        });
        let pivots = aug.rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = aug.at(r, self.cols).clone();
        }
        Some(x)
    }

    /// Canonical basis (RREF rows) of the row space.
    pub fn row_space_basis(&self) -> Mat<F> {
        let mut m = self.clone();
        let pivots = m.rref();
        let rank = pivots.len();
        Mat::from_fn(self.field.clone(), rank, self.cols, |i, j| {
            m.at(i, j).clone()
        })
    }

    /// Whether `v` lies in the row space.
    pub fn row_space_contains(&self, v: &[F::Elt]) -> bool {
        let mut m = self.clone();
        m.push_row(v.to_vec());
        m.rank() == self.rank()
    }

    /// Row spaces compared as subspaces.
    pub fn same_row_space(&self, other: &Self) -> bool {
        self.row_space_basis() == other.row_space_basis()
    }

    /// Intersection of the row spaces, by the Zassenhaus block trick.
    pub fn row_space_intersection(&self, other: &Self) -> Mat<F> {
        assert_eq!(self.cols, other.cols);
        let n = self.cols;
        let f = self.field.clone();
        let mut block = Mat::zero(f.clone(), self.rows + other.rows, 2 * n);
        for i in 0..self.rows {
            for j in 0..n {
                *block.at_mut(i, j) = self.at(i, j).clone();
                *block.at_mut(i, n + j) = self.at(i, j).clone();
            }
        }
        for i in 0..other.rows {
            for j in 0..n {
                *block.at_mut(self.rows + i, j) = other.at(i, j).clone();
            }
        }
        block.rref();
        // rows whose left half vanished carry the intersection in the right half
        let mut rows: Vec<F::Elt> = Vec::new();
        for i in 0..block.rows {
            let left_zero = (0..n).all(|j| f.is_zero(block.at(i, j)));
            let right_nonzero = (n..2 * n).any(|j| !f.is_zero(block.at(i, j)));
            if left_zero && right_nonzero {
                rows.extend((n..2 * n).map(|j| block.at(i, j).clone()));
            }
        }
        let nrows = rows.len() / n;
        Mat {
            field: f,
            rows: nrows,
            cols: n,
            data: rows,
        }
        .row_space_basis()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::field::{rat_int, PrimeField, Rationals};

    fn qmat(rows: Vec<Vec<i64>>) -> Mat<Rationals> {
        Mat::from_rows(
            Rationals,
            rows.into_iter()
                .map(|r| r.into_iter().map(rat_int).collect())
                .collect(),
        )
    }

    #[test]
    fn kernel_of_identity_is_empty() {
        let m = Mat::identity(Rationals, 3);
        assert!(m.kernel_basis().is_empty());
    }

    #[test]
    fn kernel_of_zero_map_is_everything() {
        let m = Mat::zero(Rationals, 2, 3);
        assert_eq!(m.kernel_basis().len(), 3);
    }

    #[test]
    fn rank_and_solve() {
        let m = qmat(vec![vec![2, 4], vec![6, 8]]);
        assert_eq!(m.rank(), 2);
        let x = m.solve(&[rat_int(2), rat_int(10)]).unwrap();
        assert_eq!(m.mul_vec(&x), vec![rat_int(2), rat_int(10)]);
        let sing = qmat(vec![vec![1, 2], vec![2, 4]]);
        assert!(sing.solve(&[rat_int(0), rat_int(1)]).is_none());
    }

    #[test]
    fn kernel_vectors_annihilate() {
        let m = qmat(vec![vec![1, 2, 3], vec![4, 5, 6]]);
        let ker = m.kernel_basis();
        assert_eq!(ker.len(), 1);
        for v in &ker {
            assert!(m.mul_vec(v).iter().all(|x| x == &rat_int(0)));
        }
        assert_eq!(m.rank() + ker.len(), m.cols());
    }

    #[test]
    fn row_space_intersection_of_planes() {
        // span{e1,e2} meet span{e2,e3} = span{e2}
        let a = qmat(vec![vec![1, 0, 0], vec![0, 1, 0]]);
        let b = qmat(vec![vec![0, 1, 0], vec![0, 0, 1]]);
        let i = a.row_space_intersection(&b);
        assert_eq!(i.rows(), 1);
        assert!(i.row_space_contains(&[rat_int(0), rat_int(1), rat_int(0)]));
    }

    #[test]
    fn rref_over_prime_field() {
        let f = PrimeField::new(5);
        let m = Mat::from_rows(f, vec![vec![2u64, 4], vec![1, 2]]);
        assert_eq!(m.rank(), 1);
        assert_eq!(m.kernel_basis().len(), 1);
    }
}
