//! Exact rational linear algebra: dense matrices, reduced row echelon form,
//! and the subspace lattice (span, sum, intersection, membership).

use crate::error::{Error, Result};
use num::{BigInt, BigRational, One, Signed, Zero};

/// The scalar field: arbitrary-precision rationals, always in lowest terms.
pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    BigRational::from_integer(BigInt::from(n))
}

pub fn qr(num: i64, den: i64) -> Q {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Dense row-major matrix over `Q`.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    entries: Vec<Q>,
}

impl std::fmt::Debug for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self[(r, c)].to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Q;
    fn index(&self, (r, c): (usize, usize)) -> &Q {
        &self.entries[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Q {
        &mut self.entries[r * self.cols + c]
    }
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, entries: vec![Q::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Q::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Q>>, cols: usize) -> Self {
        for r in &rows {
            assert_eq!(r.len(), cols, "row length mismatch");
        }
        let n = rows.len();
        Matrix { rows: n, cols, entries: rows.into_iter().flatten().collect() }
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Q) -> Self {
        let mut m = Matrix::zero(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m[(r, c)] = f(r, c);
            }
        }
        m
    }

    pub fn row(&self, r: usize) -> &[Q] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn rows_vec(&self) -> Vec<Vec<Q>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn col(&self, c: usize) -> Vec<Q> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut m = Matrix::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                if self[(r, k)].is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let p = &self[(r, k)] * &other[(k, c)];
                    m[(r, c)] += p;
                }
            }
        }
        m
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.rows, self.cols, |r, c| &self[(r, c)] + &other[(r, c)])
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.rows, self.cols, |r, c| &self[(r, c)] - &other[(r, c)])
    }

    pub fn scale(&self, s: &Q) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, |r, c| s * &self[(r, c)])
    }

    pub fn neg(&self) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, |r, c| -self[(r, c)].clone())
    }

    pub fn apply(&self, v: &[Q]) -> Vec<Q> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        (0..self.rows)
            .map(|r| {
                let mut acc = Q::zero();
                for c in 0..self.cols {
                    if !v[c].is_zero() {
                        acc += &self[(r, c)] * &v[c];
                    }
                }
                acc
            })
            .collect()
    }

    /// Flatten into a single coordinate row (row-major), used when matrices
    /// are treated as vectors of an ambient space.
    pub fn flatten(&self) -> Vec<Q> {
        self.entries.clone()
    }

    pub fn from_flat(rows: usize, cols: usize, flat: Vec<Q>) -> Self {
        assert_eq!(flat.len(), rows * cols);
        Matrix { rows, cols, entries: flat }
    }
}

/// Reduced row echelon form. Returns the RREF (same shape), the rank, and the
/// pivot column indices.
pub fn rref(m: &Matrix) -> (Matrix, usize, Vec<usize>) {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut lead = 0usize;
    for col in 0..a.cols {
        if lead >= a.rows {
            break;
        }
        // find a pivot row
        let mut pivot = None;
        for r in lead..a.rows {
            if !a[(r, col)].is_zero() {
                pivot = Some(r);
                break;
            }
        }
        let Some(p) = pivot else { continue };
        // swap into place
        if p != lead {
            for c in 0..a.cols {
                let tmp = a[(p, c)].clone();
                a[(p, c)] = a[(lead, c)].clone();
                a[(lead, c)] = tmp;
            }
        }
        let inv = a[(lead, col)].recip();
        for c in 0..a.cols {
            let v = &a[(lead, c)] * &inv;
            a[(lead, c)] = v;
        }
        for r in 0..a.rows {
            if r != lead && !a[(r, col)].is_zero() {
                let factor = a[(r, col)].clone();
                for c in 0..a.cols {
                    let v = &a[(r, c)] - &factor * &a[(lead, c)];
                    a[(r, c)] = v;
                }
            }
        }
        pivots.push(col);
        lead += 1;
    }
    let rank = pivots.len();
    // drop nothing: the caller may want the full shape; zero rows sit at the bottom
    (a, rank, pivots)
}

/// A linear subspace of `Q^ambient_dim`, canonically represented by an RREF
/// basis with no zero rows. Equality of subspaces is entry-wise equality of
/// the bases.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    pub ambient_dim: usize,
    basis: Matrix, // RREF, rank rows, no zero rows
    pivots: Vec<usize>,
}

impl std::fmt::Debug for Subspace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subspace(dim {} of {}) {:?}", self.dim(), self.ambient_dim, self.basis)
    }
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: Matrix::zero(0, ambient_dim), pivots: vec![] }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Matrix::identity(ambient_dim),
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// Smallest subspace containing all the given rows.
    pub fn span(vectors: &[Vec<Q>], ambient_dim: usize) -> Result<Self> {
        for v in vectors {
            if v.len() != ambient_dim {
                return Err(Error::DimensionMismatch { expected: ambient_dim, got: v.len() });
            }
        }
        let m = Matrix::from_rows(vectors.to_vec(), ambient_dim);
        let (r, rank, pivots) = rref(&m);
        let rows = (0..rank).map(|i| r.row(i).to_vec()).collect();
        Ok(Subspace { ambient_dim, basis: Matrix::from_rows(rows, ambient_dim), pivots })
    }

    pub fn dim(&self) -> usize {
        self.basis.rows
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_rows(&self) -> Vec<Vec<Q>> {
        self.basis.rows_vec()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates that are not pivot columns; they index a complement basis.
    pub fn non_pivots(&self) -> Vec<usize> {
        (0..self.ambient_dim).filter(|c| !self.pivots.contains(c)).collect()
    }

    /// Reduce `v` modulo this subspace (eliminate all pivot coordinates).
    pub fn reduce(&self, v: &[Q]) -> Result<Vec<Q>> {
        if v.len() != self.ambient_dim {
            return Err(Error::DimensionMismatch { expected: self.ambient_dim, got: v.len() });
        }
        let mut w = v.to_vec();
        for (row, &p) in self.pivots.iter().enumerate() {
            if !w[p].is_zero() {
                let factor = w[p].clone();
                for c in 0..self.ambient_dim {
                    let x = &w[c] - &factor * &self.basis[(row, c)];
                    w[c] = x;
                }
            }
        }
        Ok(w)
    }

    pub fn contains(&self, v: &[Q]) -> Result<bool> {
        Ok(self.reduce(v)?.iter().all(|x| x.is_zero()))
    }

    pub fn contains_subspace(&self, other: &Subspace) -> Result<bool> {
        for row in other.basis_rows() {
            if !self.contains(&row)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Coordinates of `v` in this subspace's basis, if `v` lies in it.
    pub fn coordinates(&self, v: &[Q]) -> Result<Option<Vec<Q>>> {
        if v.len() != self.ambient_dim {
            return Err(Error::DimensionMismatch { expected: self.ambient_dim, got: v.len() });
        }
        let mut w = v.to_vec();
        let mut coords = Vec::with_capacity(self.dim());
        for (row, &p) in self.pivots.iter().enumerate() {
            let factor = w[p].clone();
            coords.push(factor.clone());
            if !factor.is_zero() {
                for c in 0..self.ambient_dim {
                    let x = &w[c] - &factor * &self.basis[(row, c)];
                    w[c] = x;
                }
            }
        }
        if w.iter().all(|x| x.is_zero()) {
            Ok(Some(coords))
        } else {
            Ok(None)
        }
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                got: other.ambient_dim,
            });
        }
        let mut rows = self.basis_rows();
        rows.extend(other.basis_rows());
        Subspace::span(&rows, self.ambient_dim)
    }

    /// Intersection via the Zassenhaus block trick: row-reduce [S|S; T|0]
    /// and read the intersection from right blocks of rows whose left block
    /// vanished.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                got: other.ambient_dim,
            });
        }
        let n = self.ambient_dim;
        let mut rows = Vec::new();
        for r in self.basis_rows() {
            let mut row = r.clone();
            row.extend(r);
            rows.push(row);
        }
        for r in other.basis_rows() {
            let mut row = r;
            row.extend(vec![Q::zero(); n]);
            rows.push(row);
        }
        let m = Matrix::from_rows(rows, 2 * n);
        let (red, rank, _) = rref(&m);
        let mut inter_rows = Vec::new();
        for i in 0..rank {
            let left_zero = (0..n).all(|c| red[(i, c)].is_zero());
            if left_zero {
                inter_rows.push(red.row(i)[n..].to_vec());
            }
        }
        Subspace::span(&inter_rows, n)
    }
}

/// Basis of the null space of `m` (solutions of m x = 0), as rows.
pub fn kernel_basis(m: &Matrix) -> Vec<Vec<Q>> {
    let (r, _rank, pivots) = rref(m);
    let free: Vec<usize> = (0..m.cols).filter(|c| !pivots.contains(c)).collect();
    let mut out = Vec::new();
    for &f in &free {
        let mut v = vec![Q::zero(); m.cols];
        v[f] = Q::one();
        for (row, &p) in pivots.iter().enumerate() {
            v[p] = -r[(row, f)].clone();
        }
        out.push(v);
    }
    out
}

/// One exact solution of `m x = b`, if the system is consistent.
pub fn solve(m: &Matrix, b: &[Q]) -> Option<Vec<Q>> {
    assert_eq!(m.rows, b.len());
    let mut aug = Matrix::zero(m.rows, m.cols + 1);
    for r in 0..m.rows {
        for c in 0..m.cols {
            aug[(r, c)] = m[(r, c)].clone();
        }
        aug[(r, m.cols)] = b[r].clone();
    }
    let (red, rank, pivots) = rref(&aug);
    if pivots.contains(&m.cols) {
        return None; // inconsistent
    }
    let mut x = vec![Q::zero(); m.cols];
    for (row, &p) in pivots.iter().enumerate().take(rank) {
        x[p] = red[(row, m.cols)].clone();
    }
    Some(x)
}

pub fn vec_add(a: &[Q], b: &[Q]) -> Vec<Q> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[Q], b: &[Q]) -> Vec<Q> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_scale(s: &Q, a: &[Q]) -> Vec<Q> {
    a.iter().map(|x| s * x).collect()
}

pub fn vec_is_zero(a: &[Q]) -> bool {
    a.iter().all(|x| x.is_zero())
}

/// Binomial coefficient as an exact rational.
pub fn binomial(n: usize, k: usize) -> Q {
    if k > n {
        return Q::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= BigInt::from(n - i);
    }
    let mut den = BigInt::one();
    for i in 1..=k {
        den *= BigInt::from(i);
    }
    let r = BigRational::new(acc, den);
    debug_assert!(r.is_integer() && !r.is_negative() || r.is_zero());
    r
}
