//! Dense exact matrices, Gaussian elimination, and a column-sparse companion
//! used where the exponential makes spaces too large to store densely.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Dense row-major matrix over ℚ.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch { expected: rows * cols, found: entries.len() });
        }
        Ok(Matrix { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, entries: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = Scalar::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix { rows, cols, entries }
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::DimensionMismatch { expected: c, found: row.len() });
            }
            entries.extend(row);
        }
        Ok(Matrix { rows: r, cols: c, entries })
    }

    /// Matrix with the given vectors as columns; all must have length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<Scalar>]) -> Result<Self> {
        for c in columns {
            if c.len() != rows {
                return Err(Error::DimensionMismatch { expected: rows, found: c.len() });
            }
        }
        Ok(Matrix::from_fn(rows, columns.len(), |i, j| columns[j][i].clone()))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let e = self.get(i, j);
                    if i == j {
                        e.is_one()
                    } else {
                        e.is_zero()
                    }
                })
            })
    }

    /// `self · rhs`. Zero entries of `self` are skipped, which matters for the
    /// mostly-sparse structure maps of the exponential.
    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch { expected: self.cols, found: rhs.rows });
        }
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * rhs.cols + j] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, found: v.len() });
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect())
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Kronecker product, rows and columns ordered lexicographically on index
    /// pairs `(i, j) ↦ i·n + j`.
    pub fn kron(&self, rhs: &Matrix) -> Matrix {
        let (r2, c2) = (rhs.rows, rhs.cols);
        Matrix::from_fn(self.rows * r2, self.cols * c2, |i, j| {
            let a = self.get(i / r2, j / c2);
            if a.is_zero() {
                Scalar::zero()
            } else {
                a * rhs.get(i % r2, j % c2)
            }
        })
    }

    pub fn add(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows * self.cols,
                found: rhs.rows * rhs.cols,
            });
        }
        let entries = self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, entries })
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(|a| a * s).collect() }
    }

    /// Reduced row echelon form and pivot columns. Pivots are chosen as the
    /// first nonzero entry in each column.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).recip().expect("pivot is nonzero");
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let v = m.get(i, j) - &(&f * m.get(r, j));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if self.rows != self.cols {
            return Err(Error::Singular);
        }
        let n = self.rows;
        let aug = Matrix::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else if j - n == i {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        });
        let (red, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(Error::Singular);
        }
        Ok(Matrix::from_fn(n, n, |i, j| red.get(i, n + j).clone()))
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  {}", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Exact basis of the null space of `m`, one vector per free column of its
/// reduced row echelon form. Empty when `m` is injective.
pub fn kernel_basis(m: &Matrix) -> Vec<Vec<Scalar>> {
    let (red, pivots) = m.rref();
    let free: Vec<usize> = (0..m.cols()).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Scalar::zero(); m.cols()];
            v[f] = Scalar::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -red.get(r, f);
            }
            v
        })
        .collect()
}

/// Coefficients expressing `target` as a combination of `generators`, or
/// `None` when it lies outside their span.
pub fn solve_membership(target: &[Scalar], generators: &[Vec<Scalar>]) -> Result<Option<Vec<Scalar>>> {
    let n = target.len();
    for g in generators {
        if g.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: g.len() });
        }
    }
    let k = generators.len();
    let aug = Matrix::from_fn(n, k + 1, |i, j| if j < k { generators[j][i].clone() } else { target[i].clone() });
    let (red, pivots) = aug.rref();
    if pivots.last() == Some(&k) {
        return Ok(None);
    }
    let mut coeffs = vec![Scalar::zero(); k];
    for (r, &p) in pivots.iter().enumerate() {
        coeffs[p] = red.get(r, k).clone();
    }
    Ok(Some(coeffs))
}

/// Decides `⋂ₖ Ker(lₖ) ⊆ Ker(l)` (via a kernel basis) and `l ∈ span(lₖ)` (via
/// [`solve_membership`]) independently. The two answers always agree.
pub fn kernel_containment_iff_span(l: &[Scalar], ls: &[Vec<Scalar>]) -> Result<(bool, bool)> {
    let n = l.len();
    for f in ls {
        if f.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: f.len() });
        }
    }
    let joint = Matrix::from_fn(ls.len(), n, |i, j| ls[i][j].clone());
    let contained = kernel_basis(&joint)
        .iter()
        .all(|v| l.iter().zip(v).map(|(a, b)| a * b).sum::<Scalar>().is_zero());
    let in_span = solve_membership(l, ls)?.is_some();
    Ok((contained, in_span))
}

/// Sparse vector keyed by basis index; never stores explicit zeros.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct SparseVec(BTreeMap<usize, Scalar>);

impl SparseVec {
    pub fn new() -> Self {
        SparseVec(BTreeMap::new())
    }

    pub fn unit(i: usize) -> Self {
        let mut v = SparseVec::new();
        v.0.insert(i, Scalar::one());
        v
    }

    pub fn from_dense(v: &[Scalar]) -> Self {
        SparseVec(v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect())
    }

    pub fn to_dense(&self, len: usize) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); len];
        for (&i, x) in &self.0 {
            out[i] = x.clone();
        }
        out
    }

    pub fn get(&self, i: usize) -> Scalar {
        self.0.get(&i).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add_at(&mut self, i: usize, x: &Scalar) {
        if x.is_zero() {
            return;
        }
        let e = self.0.entry(i).or_insert_with(Scalar::zero);
        *e += x;
        if e.is_zero() {
            self.0.remove(&i);
        }
    }

    /// `self += s · other`
    pub fn add_scaled(&mut self, s: &Scalar, other: &SparseVec) {
        if s.is_zero() {
            return;
        }
        for (&i, x) in &other.0 {
            self.add_at(i, &(s * x));
        }
    }

    pub fn scale(&self, s: &Scalar) -> SparseVec {
        let mut out = SparseVec::new();
        out.add_scaled(s, self);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.0.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.0.iter().map(|(&i, x)| (i, x))
    }

    pub fn max_index(&self) -> Option<usize> {
        self.0.keys().next_back().copied()
    }
}

impl fmt::Debug for SparseVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.0.iter().map(|(i, x)| (i, x.to_string()))).finish()
    }
}

impl FromIterator<(usize, Scalar)> for SparseVec {
    fn from_iter<I: IntoIterator<Item = (usize, Scalar)>>(iter: I) -> Self {
        let mut v = SparseVec::new();
        for (i, x) in iter {
            v.add_at(i, &x);
        }
        v
    }
}

/// Column-sparse matrix: column `j` is the image of basis vector `j`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SparseMatrix {
    rows: usize,
    columns: Vec<SparseVec>,
}

impl SparseMatrix {
    pub fn from_columns(rows: usize, columns: Vec<SparseVec>) -> Self {
        debug_assert!(columns.iter().all(|c| c.max_index().is_none_or(|m| m < rows)));
        SparseMatrix { rows, columns }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, columns: vec![SparseVec::new(); cols] }
    }

    pub fn identity(n: usize) -> Self {
        SparseMatrix { rows: n, columns: (0..n).map(SparseVec::unit).collect() }
    }

    /// Matrix sending basis vector `j` to basis vector `perm[j]`.
    pub fn permutation(rows: usize, perm: impl IntoIterator<Item = usize>) -> Self {
        SparseMatrix { rows, columns: perm.into_iter().map(SparseVec::unit).collect() }
    }

    pub fn from_dense(m: &Matrix) -> Self {
        SparseMatrix { rows: m.rows(), columns: (0..m.cols()).map(|j| SparseVec::from_dense(&m.column(j))).collect() }
    }

    pub fn to_dense(&self) -> Matrix {
        let mut m = Matrix::zeros(self.rows, self.cols());
        for (j, c) in self.columns.iter().enumerate() {
            for (i, x) in c.iter() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn column(&self, j: usize) -> &SparseVec {
        &self.columns[j]
    }

    pub fn columns(&self) -> &[SparseVec] {
        &self.columns
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(SparseVec::nnz).sum()
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (j, x) in v.iter() {
            out.add_scaled(x, &self.columns[j]);
        }
        out
    }

    /// `self ∘ rhs`
    pub fn compose(&self, rhs: &SparseMatrix) -> Result<SparseMatrix> {
        if self.cols() != rhs.rows {
            return Err(Error::DimensionMismatch { expected: self.cols(), found: rhs.rows });
        }
        Ok(SparseMatrix { rows: self.rows, columns: rhs.columns.iter().map(|c| self.apply(c)).collect() })
    }

    pub fn kron(&self, rhs: &SparseMatrix) -> SparseMatrix {
        let mut columns = Vec::with_capacity(self.cols() * rhs.cols());
        for a in &self.columns {
            for b in &rhs.columns {
                let mut c = SparseVec::new();
                for (i, x) in a.iter() {
                    for (k, y) in b.iter() {
                        c.add_at(i * rhs.rows + k, &(x * y));
                    }
                }
                columns.push(c);
            }
        }
        SparseMatrix { rows: self.rows * rhs.rows, columns }
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut columns = vec![SparseVec::new(); self.rows];
        for (j, c) in self.columns.iter().enumerate() {
            for (i, x) in c.iter() {
                columns[i].add_at(j, x);
            }
        }
        SparseMatrix { rows: self.cols(), columns }
    }

    pub fn add(&self, rhs: &SparseMatrix) -> Result<SparseMatrix> {
        if self.rows != rhs.rows || self.cols() != rhs.cols() {
            return Err(Error::DimensionMismatch { expected: self.cols(), found: rhs.cols() });
        }
        let columns = self
            .columns
            .iter()
            .zip(&rhs.columns)
            .map(|(a, b)| {
                let mut c = a.clone();
                c.add_scaled(&Scalar::one(), b);
                c
            })
            .collect();
        Ok(SparseMatrix { rows: self.rows, columns })
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols() && self.columns.iter().enumerate().all(|(j, c)| *c == SparseVec::unit(j))
    }

    /// First column index where the two matrices differ, if any.
    pub fn first_difference(&self, rhs: &SparseMatrix) -> Option<usize> {
        self.first_difference_where(rhs, |_| true)
    }

    /// As [`first_difference`](Self::first_difference), restricted to the
    /// columns selected by `keep`.
    pub fn first_difference_where(&self, rhs: &SparseMatrix, keep: impl Fn(usize) -> bool) -> Option<usize> {
        if self.rows != rhs.rows || self.cols() != rhs.cols() {
            return Some(0);
        }
        (0..self.cols()).find(|&j| keep(j) && self.columns[j] != rhs.columns[j])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| Scalar::from_int(x)).collect()
    }

    #[test]
    fn membership_examples() {
        let c = solve_membership(&v(&[2, 2]), &[v(&[1, 0]), v(&[0, 1])]).unwrap();
        assert_eq!(c, Some(v(&[2, 2])));
        assert_eq!(solve_membership(&v(&[1, 0]), &[v(&[0, 1])]).unwrap(), None);
        let c = solve_membership(&v(&[3, 5, 7]), &[v(&[1, 1, 1]), v(&[0, 1, 2])]).unwrap().unwrap();
        // 3·(1,1,1) + 2·(0,1,2) = (3,5,7)
        assert_eq!(c, v(&[3, 2]));
    }

    #[test]
    fn membership_dimension_mismatch() {
        assert!(matches!(
            solve_membership(&v(&[1, 2]), &[v(&[1, 2, 3])]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn empty_generators() {
        assert_eq!(solve_membership(&v(&[0, 0]), &[]).unwrap(), Some(vec![]));
        assert_eq!(solve_membership(&v(&[0, 1]), &[]).unwrap(), None);
    }

    #[test]
    fn kernel_examples() {
        assert!(kernel_basis(&Matrix::identity(2)).is_empty());
        let m = Matrix::from_rows(vec![v(&[1, 1])]).unwrap();
        let k = kernel_basis(&m);
        assert_eq!(k.len(), 1);
        assert_eq!(k[0][0], -k[0][1].clone());
        assert!(!k[0][0].is_zero());
    }

    #[test]
    fn kernel_of_rank_two_3x5_is_annihilated() {
        // third row = first + second, so rank 2
        let m = Matrix::from_rows(vec![v(&[1, 2, 0, -1, 3]), v(&[0, 1, 4, 2, -2]), v(&[1, 3, 4, 1, 1])]).unwrap();
        assert_eq!(m.rank(), 2);
        let k = kernel_basis(&m);
        assert_eq!(k.len(), 3);
        for vec in &k {
            assert!(m.mul_vec(vec).unwrap().iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn kernel_containment_small_cases() {
        assert_eq!(kernel_containment_iff_span(&v(&[1, 1]), &[v(&[1, 0]), v(&[0, 1])]).unwrap(), (true, true));
        assert_eq!(kernel_containment_iff_span(&v(&[1, 0]), &[v(&[0, 1])]).unwrap(), (false, false));
        assert_eq!(kernel_containment_iff_span(&v(&[0, 0]), &[]).unwrap(), (true, true));
    }

    #[test]
    fn inverse_and_singular() {
        let m = Matrix::from_rows(vec![v(&[2, 1]), v(&[1, 1])]).unwrap();
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).unwrap().is_identity());
        let s = Matrix::from_rows(vec![v(&[1, 2]), v(&[2, 4])]).unwrap();
        assert_eq!(s.inverse(), Err(Error::Singular));
    }

    #[test]
    fn sparse_dense_agree() {
        let a = Matrix::from_rows(vec![v(&[1, 0, 2]), v(&[0, -1, 3])]).unwrap();
        let b = Matrix::from_rows(vec![v(&[1, 1]), v(&[0, 2]), v(&[5, 0])]).unwrap();
        let sa = SparseMatrix::from_dense(&a);
        let sb = SparseMatrix::from_dense(&b);
        assert_eq!(sa.compose(&sb).unwrap().to_dense(), a.mul(&b).unwrap());
        assert_eq!(sa.kron(&sb).to_dense(), a.kron(&b));
        assert_eq!(sa.transpose().to_dense(), a.transpose());
    }
}
