//! Dense exact linear algebra: elimination over fields and fraction-free
//! determinants over integral domains.

use crate::scalar::{Field, Ring};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::fmt;

#[derive(Clone, PartialEq)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Ring> Matrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![S::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, S::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged matrix");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    /// Like [`Matrix::from_rows`] but keeps the column count when there
    /// are no rows.
    pub fn from_rows_sized(rows: Vec<Vec<S>>, cols: usize) -> Self {
        assert!(rows.iter().all(|x| x.len() == cols), "ragged matrix");
        Matrix { rows: rows.len(), cols, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: S) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<S>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn map<T: Ring>(&self, f: impl Fn(&S) -> T) -> Matrix<T> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    /// Submatrix on the given row and column index lists.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        Matrix::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn mul_vec(&self, v: &[S]) -> Vec<S> {
        (0..self.rows)
            .map(|i| dot(self.row(i), v))
            .collect()
    }
}

pub fn dot<S: Ring>(a: &[S], b: &[S]) -> S {
    a.iter().zip(b).fold(S::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

impl<S: Ring> fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{}]", self.rows, self.cols)?;
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Reduced row echelon form; returns the reduced matrix and pivot columns.
pub fn rref<F: Field>(m: &Matrix<F>) -> (Matrix<F>, Vec<usize>) {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..a.cols {
        if r == a.rows {
            break;
        }
        let Some(p) = (r..a.rows).find(|&i| !a.get(i, c).is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..a.cols {
                a.data.swap(p * a.cols + j, r * a.cols + j);
            }
        }
        let inv = a.get(r, c).inv().expect("nonzero pivot");
        for j in c..a.cols {
            let v = a.get(r, j).clone() * inv.clone();
            a.set(r, j, v);
        }
        for i in 0..a.rows {
            if i == r || a.get(i, c).is_zero() {
                continue;
            }
            let f = a.get(i, c).clone();
            for j in c..a.cols {
                let v = a.get(i, j).clone() - f.clone() * a.get(r, j).clone();
                a.set(i, j, v);
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

pub fn rank<F: Field>(m: &Matrix<F>) -> usize {
    if m.rows > m.cols {
        return rref(&m.transpose()).1.len();
    }
    rref(m).1.len()
}

/// Rank and a basis of the right kernel `{v : M v = 0}`.
pub fn rank_kernel<F: Field>(m: &Matrix<F>) -> (usize, Vec<Vec<F>>) {
    let (r, pivots) = rref(m);
    let mut kernel = Vec::new();
    let free: Vec<usize> = (0..m.cols).filter(|c| !pivots.contains(c)).collect();
    for &f in &free {
        let mut v = vec![F::zero(); m.cols];
        v[f] = F::one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -r.get(row, f).clone();
        }
        kernel.push(v);
    }
    (pivots.len(), kernel)
}

/// Indices of the first maximal linearly independent subset of rows, in order.
pub fn independent_rows<F: Field>(m: &Matrix<F>) -> Vec<usize> {
    let mut basis = EchelonSpan::new(m.cols);
    (0..m.rows).filter(|&i| basis.insert(m.row(i).to_vec())).collect()
}

/// Coefficients `c` with `Σ c_i · vectors[i] = target`, if `target` is in the span.
/// The vectors must be linearly independent.
pub fn express<F: Field>(vectors: &[Vec<F>], target: &[F]) -> Option<Vec<F>> {
    let n = vectors.len();
    let len = target.len();
    // columns: the vectors, then the target
    let m = Matrix::from_fn(len, n + 1, |i, j| if j < n { vectors[j][i].clone() } else { target[i].clone() });
    let (r, pivots) = rref(&m);
    if pivots.contains(&n) {
        return None;
    }
    let mut coeffs = vec![F::zero(); n];
    for (row, &pc) in pivots.iter().enumerate() {
        coeffs[pc] = r.get(row, n).clone();
    }
    Some(coeffs)
}

/// Incrementally maintained row-echelon span used for independence tests.
#[derive(Clone, Debug)]
pub struct EchelonSpan<F> {
    width: usize,
    rows: Vec<(usize, Vec<F>)>,
}

impl<F: Field> EchelonSpan<F> {
    pub fn new(width: usize) -> Self {
        EchelonSpan { width, rows: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, mut v: Vec<F>) -> Vec<F> {
        assert_eq!(v.len(), self.width);
        for (p, row) in &self.rows {
            if !v[*p].is_zero() {
                let f = v[*p].clone();
                for j in 0..self.width {
                    v[j] = v[j].clone() - f.clone() * row[j].clone();
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.reduce(v.to_vec()).iter().all(|x| x.is_zero())
    }

    /// Adds `v`; returns false if it was already in the span.
    pub fn insert(&mut self, v: Vec<F>) -> bool {
        let v = self.reduce(v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].inv().expect("nonzero");
        let v: Vec<F> = v.into_iter().map(|x| x * inv.clone()).collect();
        for (_, row) in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let f = row[p].clone();
                for j in 0..self.width {
                    row[j] = row[j].clone() - f.clone() * v[j].clone();
                }
            }
        }
        self.rows.push((p, v));
        true
    }
}

/// Fraction-free (Bareiss) determinant over an integral domain.
pub fn bareiss_det<R: Ring>(m: &Matrix<R>) -> R {
    assert!(m.is_square(), "determinant of a non-square matrix");
    let n = m.rows;
    if n == 0 {
        return R::one();
    }
    let mut a = m.to_rows();
    let mut sign = R::one();
    let mut prev = R::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return R::zero();
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[i][j].clone() * a[k][k].clone() - a[i][k].clone() * a[k][j].clone();
                a[i][j] = num.div_exact(&prev).expect("Bareiss division must be exact");
            }
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}

/// Fraction-free elimination specialised to integer matrices.
pub fn bareiss_det_int(rows: &[Vec<BigInt>]) -> BigInt {
    let n = rows.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = rows.to_vec();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, p);
            negate = !negate;
        }
        let (top, rest) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        for row in rest.iter_mut() {
            for j in k + 1..n {
                let num = &row[j] * &pivot_row[k] - &row[k] * &pivot_row[j];
                row[j] = num / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Determinant over a field by Gaussian elimination.
pub fn gauss_det<F: Field>(m: &Matrix<F>) -> F {
    assert!(m.is_square(), "determinant of a non-square matrix");
    let n = m.rows;
    let mut a = m.to_rows();
    let mut det = F::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return F::zero();
        };
        if p != k {
            a.swap(k, p);
            det = -det;
        }
        let inv = a[k][k].inv().expect("nonzero pivot");
        det = det * a[k][k].clone();
        let (top, rest) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        for row in rest.iter_mut() {
            if row[k].is_zero() {
                continue;
            }
            let f = row[k].clone() * inv.clone();
            for j in k + 1..n {
                row[j] = row[j].clone() - f.clone() * pivot_row[j].clone();
            }
        }
    }
    det
}

/// Cofactor expansion; exponential, used as a test oracle for tiny matrices.
pub fn cofactor_det<R: Ring>(m: &Matrix<R>) -> R {
    assert!(m.is_square());
    let n = m.rows;
    if n == 0 {
        return R::one();
    }
    if n == 1 {
        return m.get(0, 0).clone();
    }
    let mut acc = R::zero();
    for j in 0..n {
        let rows: Vec<usize> = (1..n).collect();
        let cols: Vec<usize> = (0..n).filter(|&c| c != j).collect();
        let minor = cofactor_det(&m.select(&rows, &cols));
        let term = m.get(0, j).clone() * minor;
        acc = if j % 2 == 0 { acc + term } else { acc - term };
    }
    acc
}
