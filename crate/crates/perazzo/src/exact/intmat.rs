//! Arbitrary-precision integer matrices and Smith normal form.
//!
//! The SNF driver keeps all four transforms (`U`, `U^-1`, `V`, `V^-1`) so
//! that kernels, images and quotient presentations of lattices come out of
//! one decomposition.  Pivoting is deterministic: smallest absolute value,
//! ties broken in row-major order.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::exact::field::Rationals;
use crate::exact::fmat::Mat;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = BigInt::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> i64) -> Self {
        let mut m = IntMatrix::zero(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                *m.at_mut(i, j) = BigInt::from(f(i, j));
            }
        }
        m
    }

    pub fn from_rows_i64(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        IntMatrix::from_fn(r, c, |i, j| rows[i][j])
    }

    pub fn from_rows_big(rows: Vec<Vec<BigInt>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        IntMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut m = IntMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *m.at_mut(j, i) = self.at(i, j).clone();
            }
        }
        m
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        let mut m = IntMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self.at(i, k).is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = self.at(i, k) * other.at(k, j);
                    *m.at_mut(i, j) += prod;
                }
            }
        }
        m
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.at(i, j) * &v[j]).sum())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn to_rational(&self) -> Mat<Rationals> {
        Mat::from_fn(Rationals, self.rows, self.cols, |i, j| {
            BigRational::from_integer(self.at(i, j).clone())
        })
    }

    pub fn rank(&self) -> usize {
        self.to_rational().rank()
    }

    /// Smith normal form `U * A * V = D`.
    pub fn snf(&self) -> SnfResult {
        assert!(self.rows > 0 && self.cols > 0, "SNF of an empty matrix");
        SnfCalc::new(self.clone()).run()
    }

    /// Basis of the saturated kernel lattice `{x in Z^cols : A x = 0}`,
    /// one column vector per basis element.
    pub fn kernel_lattice(&self) -> Vec<Vec<BigInt>> {
        let s = self.snf();
        (s.rank..self.cols).map(|j| s.v.col(j)).collect()
    }

    /// Basis of the lattice spanned by the columns of `A`.
    pub fn column_lattice_basis(&self) -> Vec<Vec<BigInt>> {
        let s = self.snf();
        (0..s.rank)
            .map(|j| {
                let mut c = s.u_inv.col(j);
                for x in &mut c {
                    *x = &*x * s.d.at(j, j);
                }
                c
            })
            .collect()
    }

    /// Solve `A x = b` over the integers.
    pub fn solve_integer(&self, b: &[BigInt]) -> Option<Vec<BigInt>> {
        self.snf().solve_integer(b)
    }

    /// Whether `b` lies in the lattice spanned by the columns of `A`.
    pub fn column_lattice_contains(&self, b: &[BigInt]) -> bool {
        self.solve_integer(b).is_some()
    }

    /// Saturated kernel lattice through a rational kernel plus one small SNF,
    /// which is much faster than `kernel_lattice` when the matrix is tall.
    pub fn kernel_lattice_fast(&self) -> Vec<Vec<BigInt>> {
        let ker = self.to_rational().kernel_basis();
        if ker.is_empty() {
            return Vec::new();
        }
        let rows: Vec<Vec<BigInt>> = ker.iter().map(|v| primitive_integer_vector(v)).collect();
        let b = IntMatrix::from_rows_big(rows);
        // saturation of the row space: first `rank` rows of V^-1
        let s = b.snf();
        (0..s.rank)
            .map(|i| s.v_inv.row(i).to_vec())
            .collect()
    }
}

/// Clear denominators and content; the result is a primitive integer vector
/// spanning the same line.
pub fn primitive_integer_vector(v: &[BigRational]) -> Vec<BigInt> {
    use num_integer::Integer;
    let mut lcm = BigInt::one();
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let mut gcd = BigInt::zero();
    for x in &ints {
        gcd = gcd.gcd(x);
    }
    if gcd.is_zero() || gcd.is_one() {
        return ints;
    }
    ints.into_iter().map(|x| x / &gcd).collect()
}

/// Result of a Smith normal form computation: `U * A * V = D` with `U`, `V`
/// unimodular, `D` diagonal with a positive divisibility chain.
#[derive(Clone, Debug)]
pub struct SnfResult {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
    pub u_inv: IntMatrix,
    pub v_inv: IntMatrix,
    pub rank: usize,
}

impl SnfResult {
    /// Nonzero diagonal entries `d_1 | d_2 | ...`.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.rank).map(|i| self.d.at(i, i).clone()).collect()
    }

    /// Invariant factors different from one, i.e. the torsion of the cokernel
    /// restricted to the image rank.
    pub fn nontrivial_factors(&self) -> Vec<BigInt> {
        self.invariant_factors()
            .into_iter()
            .filter(|d| !d.is_one())
            .collect()
    }

    /// Solve `A x = b` for the decomposed matrix.
    pub fn solve_integer(&self, b: &[BigInt]) -> Option<Vec<BigInt>> {
        assert_eq!(b.len(), self.d.rows());
        let ub = self.u.mul_vec(b);
        let mut y = vec![BigInt::zero(); self.d.cols()];
        for (j, ubj) in ub.iter().enumerate() {
            if j < self.rank {
                let d = self.d.at(j, j);
                if (ubj % d).is_zero() {
                    y[j] = ubj / d;
                } else {
                    return None;
                }
            } else if !ubj.is_zero() {
                return None;
            }
        }
        Some(self.v.mul_vec(&y))
    }
}

struct SnfCalc {
    m: IntMatrix,
    u: IntMatrix,
    u_inv: IntMatrix,
    v: IntMatrix,
    v_inv: IntMatrix,
}

impl SnfCalc {
    fn new(m: IntMatrix) -> Self {
        let (r, c) = (m.rows, m.cols);
        SnfCalc {
            m,
            u: IntMatrix::identity(r),
            u_inv: IntMatrix::identity(r),
            v: IntMatrix::identity(c),
            v_inv: IntMatrix::identity(c),
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.m.cols {
            self.m.data.swap(a * self.m.cols + j, b * self.m.cols + j);
        }
        for j in 0..self.u.cols {
            self.u.data.swap(a * self.u.cols + j, b * self.u.cols + j);
        }
        for i in 0..self.u_inv.rows {
            self.u_inv.data.swap(i * self.u_inv.cols + a, i * self.u_inv.cols + b);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.m.rows {
            self.m.data.swap(i * self.m.cols + a, i * self.m.cols + b);
        }
        for i in 0..self.v.rows {
            self.v.data.swap(i * self.v.cols + a, i * self.v.cols + b);
        }
        for j in 0..self.v_inv.cols {
            self.v_inv.data.swap(a * self.v_inv.cols + j, b * self.v_inv.cols + j);
        }
    }

    /// row a += c * row b
    fn add_row(&mut self, a: usize, b: usize, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        for j in 0..self.m.cols {
            let delta = c * self.m.at(b, j);
            *self.m.at_mut(a, j) += delta;
        }
        for j in 0..self.u.cols {
            let delta = c * self.u.at(b, j);
            *self.u.at_mut(a, j) += delta;
        }
        for i in 0..self.u_inv.rows {
            let delta = c * self.u_inv.at(i, a);
            *self.u_inv.at_mut(i, b) -= delta;
        }
    }

    /// col a += c * col b
    fn add_col(&mut self, a: usize, b: usize, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        for i in 0..self.m.rows {
            let delta = c * self.m.at(i, b);
            *self.m.at_mut(i, a) += delta;
        }
        for i in 0..self.v.rows {
            let delta = c * self.v.at(i, b);
            *self.v.at_mut(i, a) += delta;
        }
        for j in 0..self.v_inv.cols {
            let delta = c * self.v_inv.at(a, j);
            *self.v_inv.at_mut(b, j) -= delta;
        }
    }

    fn negate_row(&mut self, a: usize) {
        for j in 0..self.m.cols {
            let v = -self.m.at(a, j).clone();
            *self.m.at_mut(a, j) = v;
        }
        for j in 0..self.u.cols {
            let v = -self.u.at(a, j).clone();
            *self.u.at_mut(a, j) = v;
        }
        for i in 0..self.u_inv.rows {
            let v = -self.u_inv.at(i, a).clone();
            *self.u_inv.at_mut(i, a) = v;
        }
    }

    /// Smallest-absolute-value nonzero entry of the trailing submatrix,
    /// row-major on ties.
    fn find_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.m.rows {
            for j in t..self.m.cols {
                let x = self.m.at(i, j);
                if x.is_zero() {
                    continue;
                }
                match best {
                    None => best = Some((i, j)),
                    Some((bi, bj)) => {
                        if x.abs() < self.m.at(bi, bj).abs() {
                            best = Some((i, j));
                        }
                    }
                }
            }
        }
        best
    }

    fn run(mut self) -> SnfResult {
        let steps = self.m.rows.min(self.m.cols);
        let mut rank = 0;
        for t in 0..steps {
            'pivot: loop {
                let Some((pi, pj)) = self.find_pivot(t) else {
                    break;
                };
                self.swap_rows(t, pi);
                self.swap_cols(t, pj);
                if self.m.at(t, t).is_negative() {
                    self.negate_row(t);
                }
                let mut dirty = false;
                for i in t + 1..self.m.rows {
                    if self.m.at(i, t).is_zero() {
                        continue;
                    }
                    let q = -(self.m.at(i, t) / self.m.at(t, t));
                    self.add_row(i, t, &q);
                    if !self.m.at(i, t).is_zero() {
                        dirty = true;
                    }
                }
                for j in t + 1..self.m.cols {
                    if self.m.at(t, j).is_zero() {
                        continue;
                    }
                    let q = -(self.m.at(t, j) / self.m.at(t, t));
                    self.add_col(j, t, &q);
                    if !self.m.at(t, j).is_zero() {
                        dirty = true;
                    }
                }
                if dirty {
                    continue;
                }
                // enforce that the pivot divides the rest of the submatrix
                let d = self.m.at(t, t).clone();
                for i in t + 1..self.m.rows {
                    for j in t + 1..self.m.cols {
                        if !(self.m.at(i, j) % &d).is_zero() {
                            self.add_row(t, i, &BigInt::one());
                            continue 'pivot;
                        }
                    }
                }
                break;
            }
            if self.m.at(t, t).is_zero() {
                break;
            }
            rank = t + 1;
        }
        SnfResult {
            d: self.m,
            u: self.u,
            v: self.v,
            u_inv: self.u_inv,
            v_inv: self.v_inv,
            rank,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_decomposition(a: &IntMatrix) {
        let s = a.snf();
        assert_eq!(s.u.mul(a).mul(&s.v), s.d, "U*A*V != D");
        assert_eq!(s.u.mul(&s.u_inv), IntMatrix::identity(a.rows()));
        assert_eq!(s.v.mul(&s.v_inv), IntMatrix::identity(a.cols()));
        // diagonal, positive, divisibility chain
        for i in 0..s.d.rows() {
            for j in 0..s.d.cols() {
                if i != j {
                    assert!(s.d.at(i, j).is_zero());
                }
            }
        }
        let f = s.invariant_factors();
        assert!(f.iter().all(|d| d.is_positive()));
        for w in f.windows(2) {
            assert!((&w[1] % &w[0]).is_zero(), "divisibility chain broken");
        }
        assert_eq!(s.rank, a.rank());
    }

    #[test]
    fn one_by_one() {
        let a = IntMatrix::from_rows_i64(&[vec![6]]);
        let s = a.snf();
        assert_eq!(s.invariant_factors(), vec![BigInt::from(6)]);
        assert_eq!(s.rank, 1);
        check_decomposition(&a);
    }

    #[test]
    fn two_by_two_hand_elimination() {
        // [[2,4],[6,8]]: row2 -= 3*row1 gives [[2,4],[0,-4]]; col2 -= 2*col1
        // gives diag(2,-4); sign fix gives invariant factors (2,4).
        let a = IntMatrix::from_rows_i64(&[vec![2, 4], vec![6, 8]]);
        let s = a.snf();
        assert_eq!(
            s.invariant_factors(),
            vec![BigInt::from(2), BigInt::from(4)]
        );
        check_decomposition(&a);
    }

    #[test]
    fn kernel_and_image_lattices() {
        // A = [[1,2,3],[2,4,6]] has rank 1; kernel lattice has rank 2
        let a = IntMatrix::from_rows_i64(&[vec![1, 2, 3], vec![2, 4, 6]]);
        let ker = a.kernel_lattice();
        assert_eq!(ker.len(), 2);
        for v in &ker {
            assert!(a.mul_vec(v).iter().all(|x| x.is_zero()));
        }
        let img = a.column_lattice_basis();
        assert_eq!(img.len(), 1);
        // (1,2) generates the image lattice: every column is a multiple
        assert!(a.column_lattice_contains(&[BigInt::from(3), BigInt::from(6)]));
        assert!(!a.column_lattice_contains(&[BigInt::from(1), BigInt::from(1)]));
    }

    #[test]
    fn solve_integer_divisibility() {
        let a = IntMatrix::from_rows_i64(&[vec![2, 0], vec![0, 3]]);
        assert_eq!(
            a.solve_integer(&[BigInt::from(4), BigInt::from(9)]),
            Some(vec![BigInt::from(2), BigInt::from(3)])
        );
        assert_eq!(a.solve_integer(&[BigInt::from(1), BigInt::from(3)]), None);
    }

    #[test]
    fn fast_kernel_agrees_with_snf_kernel() {
        let mut state = 0xDEADBEEFu64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..30 {
            let rows = 1 + (next() % 5) as usize;
            let cols = 1 + (next() % 5) as usize;
            let a = IntMatrix::from_fn(rows, cols, |_, _| (next() % 9) as i64 - 4);
            let k1 = a.kernel_lattice();
            let k2 = a.kernel_lattice_fast();
            assert_eq!(k1.len(), k2.len());
            // same lattice: each basis solves over the other integrally
            if k1.is_empty() {
                continue;
            }
            let m1 = IntMatrix::from_rows_big(k1.clone()).transpose();
            let m2 = IntMatrix::from_rows_big(k2.clone()).transpose();
            for v in &k2 {
                assert!(m1.solve_integer(v).is_some());
            }
            for v in &k1 {
                assert!(m2.solve_integer(v).is_some());
            }
        }
    }

    #[test]
    fn random_round_trips() {
        // small deterministic pseudo-random matrices with entries in [-9, 9]
        let mut state = 0x9E3779B97F4A7C15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for trial in 0..40 {
            let rows = 1 + (next() % 6) as usize;
            let cols = 1 + (next() % 6) as usize;
            let a = IntMatrix::from_fn(rows, cols, |_, _| (next() % 19) as i64 - 9);
            check_decomposition(&a);
            let _ = trial;
        }
    }
}
