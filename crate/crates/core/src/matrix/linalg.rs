//! Determinants, inverses and field elimination.

use alloc::vec;
use alloc::vec::Vec;

use super::Matrix;
use crate::error::{Error, Result};
use crate::ring::Elem;

/// Sizes up to this bound always use division-free cofactor expansion.
const COFACTOR_LIMIT: usize = 8;

impl Matrix {
    /// Exact determinant.
    ///
    /// Division-free cofactor expansion is used for `n <= 8` and for every
    /// ring with zero divisors; larger matrices over integral domains use
    /// fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<Elem> {
        let n = self.size()?;
        if n <= COFACTOR_LIMIT || !self.ring.is_integral_domain() {
            Ok(self.determinant_cofactor())
        } else {
            self.determinant_bareiss()
        }
    }

    /// Laplace expansion along rows, memoized over column subsets: `O(n 2^n)`.
    pub fn determinant_cofactor(&self) -> Elem {
        let ring = &self.ring;
        let n = self.rows;
        assert!(n == self.cols && n < usize::BITS as usize, "square matrix of modest size");
        let mut dp: Vec<Elem> = vec![ring.zero(); 1 << n];
        dp[0] = ring.one();
        for mask in 1usize..(1 << n) {
            let k = mask.count_ones() as usize;
            let row = k - 1;
            let mut acc = ring.zero();
            let mut pos = 0;
            for c in 0..n {
                if mask & (1 << c) == 0 {
                    continue;
                }
                let a = self.at(row, c);
                if !ring.is_zero(a) {
                    let term = ring.mul(a, &dp[mask & !(1 << c)]);
                    acc = if (row + pos) % 2 == 0 {
                        ring.add(&acc, &term)
                    } else {
                        ring.sub(&acc, &term)
                    };
                }
                pos += 1;
            }
            dp[mask] = acc;
        }
        dp[(1 << n) - 1].clone()
    }

    /// Fraction-free elimination; requires an integral domain.
    pub fn determinant_bareiss(&self) -> Result<Elem> {
        let ring = &self.ring;
        let n = self.size()?;
        if !ring.is_integral_domain() {
            return Err(Error::UnsupportedRing("fraction-free elimination needs an integral domain"));
        }
        let mut a = self.row_vecs();
        let mut negate = false;
        let mut prev = ring.one();
        for k in 0..n {
            if ring.is_zero(&a[k][k]) {
                match (k + 1..n).find(|&r| !ring.is_zero(&a[r][k])) {
                    Some(r) => {
                        a.swap(k, r);
                        negate = !negate;
                    }
                    None => return Ok(ring.zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = ring.sub(&ring.mul(&a[i][j], &a[k][k]), &ring.mul(&a[i][k], &a[k][j]));
                    a[i][j] = ring
                        .exact_div(&num, &prev)
                        .expect("Bareiss quotients are exact over integral domains");
                }
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        Ok(if negate { ring.neg(&d) } else { d })
    }

    pub fn is_invertible(&self) -> Result<bool> {
        Ok(self.ring.is_unit(&self.determinant()?))
    }

    /// Exact inverse. Gauss-Jordan over fields, adjugate over other rings.
    pub fn inverse(&self) -> Result<Matrix> {
        let n = self.size()?;
        if self.ring.is_field() {
            let aug = self.try_hstack(&Matrix::identity(&self.ring, n))?;
            let (red, pivots) = aug.rref()?;
            if pivots.len() < n || pivots[n - 1] >= n {
                return Err(Error::NotInvertible);
            }
            return red.block(1, n + 1, n, n);
        }
        let det = self.determinant()?;
        let det_inv = self.ring.inv(&det).ok_or(Error::NotInvertible)?;
        if n == 1 {
            return Ok(Matrix::diagonal(&self.ring, &[det_inv]));
        }
        let ring = &self.ring;
        let idx: Vec<usize> = (1..=n).collect();
        let mut cof = vec![vec![ring.zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let rows: Vec<usize> = idx.iter().copied().filter(|&r| r != i + 1).collect();
                let cols: Vec<usize> = idx.iter().copied().filter(|&c| c != j + 1).collect();
                let minor = self.submatrix(&rows, &cols)?.determinant()?;
                let signed = if (i + j) % 2 == 0 { minor } else { ring.neg(&minor) };
                // adjugate is the transposed cofactor matrix
                cof[j][i] = ring.mul(&signed, &det_inv);
            }
        }
        Matrix::from_rows(ring, cof)
    }

    pub(crate) fn try_hstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.rows != other.rows || self.ring != other.ring {
            return Err(Error::DimensionMismatch("hstack".into()));
        }
        Ok(Matrix::from_fn(&self.ring, self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self.at(r, c).clone()
            } else {
                other.at(r, c - self.cols).clone()
            }
        }))
    }

    /// Reduced row echelon form over a field, with 0-based pivot columns.
    pub fn rref(&self) -> Result<(Matrix, Vec<usize>)> {
        let ring = &self.ring;
        if !ring.is_field() {
            return Err(Error::NotAField);
        }
        let mut a = self.row_vecs();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !ring.is_zero(&a[i][c])) else {
                continue;
            };
            a.swap(r, p);
            let inv = ring.inv(&a[r][c]).expect("nonzero field element");
            for x in a[r].iter_mut() {
                *x = ring.mul(x, &inv);
            }
            let pivot_row = a[r].clone();
            for (i, row) in a.iter_mut().enumerate() {
                if i == r || ring.is_zero(&row[c]) {
                    continue;
                }
                let f = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x = ring.sub(x, &ring.mul(&f, p));
                }
            }
            pivots.push(c);
            r += 1;
        }
        Ok((Matrix::from_rows(ring, a)?, pivots))
    }

    pub fn rank(&self) -> Result<usize> {
        Ok(self.rref()?.1.len())
    }

    /// Basis of `{x : A x = 0}` over a field, as column vectors.
    pub fn kernel_basis(&self) -> Result<Vec<Matrix>> {
        let (red, pivots) = self.rref()?;
        let ring = &self.ring;
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![ring.zero(); self.cols];
            v[free] = ring.one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = ring.neg(red.at(row, free));
            }
            basis.push(Matrix::from_rows(ring, v.into_iter().map(|e| vec![e]).collect())?);
        }
        Ok(basis)
    }

    /// Basis of `{y : y A = 0}` over a field, as row vectors.
    pub fn left_kernel_basis(&self) -> Result<Vec<Matrix>> {
        Ok(self.transpose().kernel_basis()?.iter().map(Matrix::transpose).collect())
    }
}
