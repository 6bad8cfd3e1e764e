//! Dense exact matrices over a single [`Ring`].
//!
//! Matrices are immutable values: every row or column operation returns a new
//! matrix. Public indices are 1-based, matching the `e_ij` matrix-unit
//! convention used throughout the factorization routes.

mod linalg;
mod special;

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

pub(crate) use special::transposition_elementaries;
pub use special::{
    block_pad, classify_quasi, classify_quasi_elementary, classify_quasi_permutation, elementary,
    permutation_matrix, transposition_as_elementary_diagonal, Elementary, Permutation, QuasiKind,
};

use crate::error::{Error, Result};
use crate::ring::{Elem, Ring, RingElement};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    ring: Ring,
    rows: usize,
    cols: usize,
    entries: Vec<Elem>,
}

impl Matrix {
    /// Row-major constructor; validates dimensions and ring membership.
    pub fn new(ring: &Ring, rows: usize, cols: usize, entries: Vec<Elem>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::DimensionMismatch("matrices need at least one row and column".into()));
        }
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(alloc::format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        if !entries.iter().all(|e| ring.contains(e)) {
            return Err(Error::RingMismatch);
        }
        Ok(Matrix {
            ring: ring.clone(),
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(ring: &Ring, rows: Vec<Vec<Elem>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Self::new(ring, nrows, ncols, rows.into_iter().flatten().collect())
    }

    /// Parses every entry with the ring's text syntax.
    pub fn parse<R, S>(ring: &Ring, rows: &[R]) -> Result<Self>
    where
        R: AsRef<[S]>,
        S: AsRef<str>,
    {
        let rows = rows
            .iter()
            .map(|r| r.as_ref().iter().map(|s| ring.parse(s.as_ref())).collect())
            .collect::<Result<Vec<Vec<Elem>>>>()?;
        Self::from_rows(ring, rows)
    }

    pub fn from_ints<R: AsRef<[i64]>>(ring: &Ring, rows: &[R]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| r.as_ref().iter().map(|&v| ring.from_int(v)).collect())
            .collect();
        Self::from_rows(ring, rows)
    }

    /// Entries produced by `f(row, col)` with 0-based indices; `f` must return
    /// values of `ring`.
    pub(crate) fn from_fn(ring: &Ring, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Elem) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        debug_assert!(entries.iter().all(|e| ring.contains(e)));
        Matrix {
            ring: ring.clone(),
            rows,
            cols,
            entries,
        }
    }

    pub fn zero(ring: &Ring, rows: usize, cols: usize) -> Self {
        let z = ring.zero();
        Self::from_fn(ring, rows, cols, |_, _| z.clone())
    }

    pub fn identity(ring: &Ring, n: usize) -> Self {
        let (z, o) = (ring.zero(), ring.one());
        Self::from_fn(ring, n, n, |r, c| if r == c { o.clone() } else { z.clone() })
    }

    /// Matrix unit `e_ij` of size `n`.
    pub fn unit(ring: &Ring, n: usize, i: usize, j: usize) -> Result<Self> {
        check_index(i, n)?;
        check_index(j, n)?;
        let (z, o) = (ring.zero(), ring.one());
        Ok(Self::from_fn(ring, n, n, |r, c| if r + 1 == i && c + 1 == j { o.clone() } else { z.clone() }))
    }

    /// Diagonal matrix with the given entries.
    pub fn diagonal(ring: &Ring, diag: &[Elem]) -> Self {
        let z = ring.zero();
        Self::from_fn(ring, diag.len(), diag.len(), |r, c| if r == c { diag[r].clone() } else { z.clone() })
    }

    /// Standard column `e_i` of length `n`.
    pub fn basis_column(ring: &Ring, n: usize, i: usize) -> Result<Self> {
        check_index(i, n)?;
        let (z, o) = (ring.zero(), ring.one());
        Ok(Self::from_fn(ring, n, 1, |r, _| if r + 1 == i { o.clone() } else { z.clone() }))
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
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

    /// Side length of a square matrix.
    pub fn size(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare)
        }
    }

    pub fn entries(&self) -> &[Elem] {
        &self.entries
    }

    /// Entry `(i, j)`, 1-based.
    pub fn get(&self, i: usize, j: usize) -> Option<&Elem> {
        (1..=self.rows)
            .contains(&i)
            .then_some(())
            .filter(|_| (1..=self.cols).contains(&j))
            .map(|_| self.at(i - 1, j - 1))
    }

    pub fn element(&self, i: usize, j: usize) -> Option<RingElement> {
        self.get(i, j)
            .map(|e| RingElement::new(self.ring.clone(), e.clone()).expect("matrix entries belong to the ring"))
    }

    pub(crate) fn at(&self, r: usize, c: usize) -> &Elem {
        &self.entries[r * self.cols + c]
    }

    /// Rows as vectors of entries.
    pub fn row_vecs(&self) -> Vec<Vec<Elem>> {
        self.entries.chunks(self.cols).map(<[Elem]>::to_vec).collect()
    }

    /// Copy with entry `(i, j)` (1-based) replaced.
    pub fn with_entry(&self, i: usize, j: usize, value: Elem) -> Result<Self> {
        check_index(i, self.rows)?;
        check_index(j, self.cols)?;
        if !self.ring.contains(&value) {
            return Err(Error::RingMismatch);
        }
        let mut out = self.clone();
        out.entries[(i - 1) * self.cols + (j - 1)] = value;
        Ok(out)
    }

    fn same_ring(&self, other: &Matrix) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    /// Exact product; fails on ring or dimension mismatch.
    pub fn try_mul(&self, other: &Matrix) -> Result<Matrix> {
        self.same_ring(other)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(alloc::format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let ring = &self.ring;
        Ok(Self::from_fn(ring, self.rows, other.cols, |r, c| {
            let mut acc = ring.zero();
            for k in 0..self.cols {
                let a = self.at(r, k);
                if ring.is_zero(a) {
                    continue;
                }
                let b = other.at(k, c);
                if ring.is_zero(b) {
                    continue;
                }
                acc = ring.add(&acc, &ring.mul(a, b));
            }
            acc
        }))
    }

    fn zip_with(&self, other: &Matrix, f: impl Fn(&Ring, &Elem, &Elem) -> Elem) -> Result<Matrix> {
        self.same_ring(other)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch("shapes differ".into()));
        }
        Ok(Self::from_fn(&self.ring, self.rows, self.cols, |r, c| {
            f(&self.ring, self.at(r, c), other.at(r, c))
        }))
    }

    pub fn try_add(&self, other: &Matrix) -> Result<Matrix> {
        self.zip_with(other, Ring::add)
    }

    pub fn try_sub(&self, other: &Matrix) -> Result<Matrix> {
        self.zip_with(other, Ring::sub)
    }

    pub fn scale(&self, s: &Elem) -> Matrix {
        Self::from_fn(&self.ring, self.rows, self.cols, |r, c| self.ring.mul(s, self.at(r, c)))
    }

    pub fn transpose(&self) -> Matrix {
        Self::from_fn(&self.ring, self.cols, self.rows, |r, c| self.at(c, r).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| self.ring.is_zero(e))
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    let e = self.at(r, c);
                    if r == c {
                        self.ring.is_one(e)
                    } else {
                        self.ring.is_zero(e)
                    }
                })
            })
    }

    /// `E * E == E`, exactly.
    pub fn is_idempotent(&self) -> Result<bool> {
        if !self.is_square() {
            return Err(Error::NotSquare);
        }
        Ok(&(self * self) == self)
    }

    pub fn row_is_zero(&self, i: usize) -> bool {
        (0..self.cols).all(|c| self.ring.is_zero(self.at(i - 1, c)))
    }

    pub fn col_is_zero(&self, j: usize) -> bool {
        (0..self.rows).all(|r| self.ring.is_zero(self.at(r, j - 1)))
    }

    /// Indices (1-based) of zero rows.
    pub fn zero_rows(&self) -> Vec<usize> {
        (1..=self.rows).filter(|&i| self.row_is_zero(i)).collect()
    }

    /// `(1 - e_ii) A`: the copy with row `i` replaced by zeros.
    pub fn with_row_zeroed(&self, i: usize) -> Result<Matrix> {
        check_index(i, self.rows)?;
        let z = self.ring.zero();
        Ok(Self::from_fn(&self.ring, self.rows, self.cols, |r, c| {
            if r + 1 == i { z.clone() } else { self.at(r, c).clone() }
        }))
    }

    /// `A (1 - e_jj)`: the copy with column `j` replaced by zeros.
    pub fn with_col_zeroed(&self, j: usize) -> Result<Matrix> {
        check_index(j, self.cols)?;
        let z = self.ring.zero();
        Ok(Self::from_fn(&self.ring, self.rows, self.cols, |r, c| {
            if c + 1 == j { z.clone() } else { self.at(r, c).clone() }
        }))
    }

    /// Row `i` (1-based) as a `1 x cols` matrix.
    pub fn row(&self, i: usize) -> Result<Matrix> {
        self.block(i, 1, 1, self.cols)
    }

    /// Column `j` (1-based) as a `rows x 1` matrix.
    pub fn col(&self, j: usize) -> Result<Matrix> {
        self.block(1, j, self.rows, 1)
    }

    /// The `height x width` block whose top-left corner is `(i, j)`, 1-based.
    pub fn block(&self, i: usize, j: usize, height: usize, width: usize) -> Result<Matrix> {
        if i == 0 || j == 0 || height == 0 || width == 0 || i + height - 1 > self.rows || j + width - 1 > self.cols {
            return Err(Error::DimensionMismatch("block out of range".into()));
        }
        Ok(Self::from_fn(&self.ring, height, width, |r, c| self.at(r + i - 1, c + j - 1).clone()))
    }

    /// Submatrix on the given 1-based row and column index lists.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Result<Matrix> {
        for &i in rows {
            check_index(i, self.rows)?;
        }
        for &j in cols {
            check_index(j, self.cols)?;
        }
        if rows.is_empty() || cols.is_empty() {
            return Err(Error::DimensionMismatch("empty submatrix".into()));
        }
        Ok(Self::from_fn(&self.ring, rows.len(), cols.len(), |r, c| {
            self.at(rows[r] - 1, cols[c] - 1).clone()
        }))
    }

    /// Assembles `[[tl, tr], [bl, br]]`; all four blocks must be present and
    /// conformable.
    pub fn from_blocks(tl: &Matrix, tr: &Matrix, bl: &Matrix, br: &Matrix) -> Result<Matrix> {
        for m in [tr, bl, br] {
            tl.same_ring(m)?;
        }
        if tl.rows != tr.rows || bl.rows != br.rows || tl.cols != bl.cols || tr.cols != br.cols {
            return Err(Error::DimensionMismatch("blocks are not conformable".into()));
        }
        let (top, left) = (tl.rows, tl.cols);
        Ok(Self::from_fn(&tl.ring, top + bl.rows, left + tr.cols, |r, c| {
            match (r < top, c < left) {
                (true, true) => tl.at(r, c).clone(),
                (true, false) => tr.at(r, c - left).clone(),
                (false, true) => bl.at(r - top, c).clone(),
                (false, false) => br.at(r - top, c - left).clone(),
            }
        }))
    }

    /// Block-diagonal sum `self ⊕ other`.
    pub fn direct_sum(&self, other: &Matrix) -> Result<Matrix> {
        Self::from_blocks(
            self,
            &Matrix::zero(&self.ring, self.rows, other.cols),
            &Matrix::zero(&self.ring, other.rows, self.cols),
            other,
        )
    }

    /// `self ⊕ I_r`.
    pub fn extend_identity(&self, r: usize) -> Result<Matrix> {
        if r == 0 {
            return Ok(self.clone());
        }
        self.direct_sum(&Matrix::identity(&self.ring, r))
    }

    pub fn is_upper_triangular(&self) -> bool {
        self.is_square() && (0..self.rows).all(|r| (0..r).all(|c| self.ring.is_zero(self.at(r, c))))
    }

    pub fn is_lower_triangular(&self) -> bool {
        self.is_square() && (0..self.rows).all(|r| (r + 1..self.cols).all(|c| self.ring.is_zero(self.at(r, c))))
    }

    pub fn is_diagonal(&self) -> bool {
        self.is_upper_triangular() && self.is_lower_triangular()
    }

    /// `P * self * P_inv`.
    pub fn conjugate(&self, p: &Matrix, p_inv: &Matrix) -> Result<Matrix> {
        p.try_mul(self)?.try_mul(p_inv)
    }

    /// Entry strings in the ring's canonical syntax, row by row.
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        self.entries
            .chunks(self.cols)
            .map(|row| row.iter().map(|e| self.ring.format(e)).collect())
            .collect()
    }
}

pub(crate) fn check_index(i: usize, n: usize) -> Result<()> {
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange { index: i, size: n });
    }
    Ok(())
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (r, row) in self.to_strings().iter().enumerate() {
            if r > 0 {
                f.write_str("; ")?;
            }
            f.write_str(&row.join(", "))?;
        }
        f.write_str("]")
    }
}

/// Panics on ring or dimension mismatch; use [`Matrix::try_mul`] for a
/// checked product.
impl Mul for &Matrix {
    type Output = Matrix;

    fn mul(self, rhs: &Matrix) -> Matrix {
        self.try_mul(rhs).expect("matrix product shapes")
    }
}

impl Add for &Matrix {
    type Output = Matrix;

    fn add(self, rhs: &Matrix) -> Matrix {
        self.try_add(rhs).expect("matrix sum shapes")
    }
}

impl Sub for &Matrix {
    type Output = Matrix;

    fn sub(self, rhs: &Matrix) -> Matrix {
        self.try_sub(rhs).expect("matrix difference shapes")
    }
}

impl Neg for &Matrix {
    type Output = Matrix;

    fn neg(self) -> Matrix {
        Matrix::from_fn(&self.ring, self.rows, self.cols, |r, c| self.ring.neg(self.at(r, c)))
    }
}

/// Product of a list of square matrices of size `n`; the empty product is `I_n`.
pub fn product(ring: &Ring, n: usize, factors: &[Matrix]) -> Result<Matrix> {
    let mut acc = Matrix::identity(ring, n);
    for f in factors {
        acc = acc.try_mul(f)?;
    }
    Ok(acc)
}
