//! Padded matrices `[[B, 0], [0, 0]]`: triangular, elimination, double
//! padding and zero-row routes, plus the dispatcher.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::lift::{lift_column_combination_raw, shift_rank_r_raw};
use super::quasi::permutation_left;
use super::transfer::{transfer_left_raw, transfer_right_raw};
use super::{Factorization, Route, RouteTag};
use crate::error::{Error, Result};
use crate::matrix::{block_pad, transposition_elementaries, Elementary, Matrix, Permutation};
use crate::ring::{Elem, Ring, RingElement};

/// The three factors of `[[b, 0], [0, 0]] = [[1, b], [0, 0]] · [[0, 0], [1, 1]] · [[1, 0], [0, 0]]`.
pub fn base_case_display(ring: &Ring, b: &Elem) -> Result<[Matrix; 3]> {
    if !ring.contains(b) {
        return Err(Error::RingMismatch);
    }
    let (z, o) = (ring.zero(), ring.one());
    Ok([
        Matrix::from_rows(ring, vec![vec![o.clone(), b.clone()], vec![z.clone(), z.clone()]])?,
        Matrix::from_rows(ring, vec![vec![z.clone(), z.clone()], vec![o.clone(), o.clone()]])?,
        Matrix::from_rows(ring, vec![vec![o, z.clone()], vec![z.clone(), z]])?,
    ])
}

fn check_pad(b: &Matrix, r: usize) -> Result<usize> {
    let n = b.size()?;
    if r == 0 {
        return Err(Error::ZeroPadding);
    }
    Ok(n)
}

fn zero_factorization(ring: &Ring, size: usize, route: Route) -> Factorization {
    let z = Matrix::zero(ring, size, size);
    Factorization::raw(z.clone(), vec![z], route)
}

/// Factorization of `block_pad(B, r)` for triangular `B`.
///
/// Upper triangular `B` is handled by induction on its size: the padded
/// top-left block gives `B (1 - e_nn)`, and a rank-one shift by the last
/// column restores `B`. Lower triangular `B` goes through the transpose.
pub fn factor_triangular_padded(b: &Matrix, r: usize) -> Result<Factorization> {
    triangular_raw(b, r)?
        .with_route(Route::new(RouteTag::TriangularPadded).with("r", r))
        .certified()
}

pub(crate) fn triangular_raw(b: &Matrix, r: usize) -> Result<Factorization> {
    let n = check_pad(b, r)?;
    let route = Route::new(RouteTag::TriangularPadded).with("r", r);
    if b.is_zero() {
        return Ok(zero_factorization(b.ring(), n + r, route));
    }
    if r > 1 {
        return triangular_raw(b, 1)?.pad(r - 1);
    }
    if !b.is_upper_triangular() {
        if b.is_lower_triangular() {
            return Ok(triangular_raw(&b.transpose(), 1)?.transpose());
        }
        return Err(Error::NotTriangular);
    }
    let ring = b.ring();
    if n == 1 {
        let factors = base_case_display(ring, b.at(0, 0))?;
        return Ok(Factorization::raw(block_pad(b, 1)?, factors.to_vec(), route));
    }
    let head = triangular_raw(&b.block(1, 1, n - 1, n - 1)?, 1)?;
    let last_col = -&b.col(n)?;
    let e_n = Matrix::basis_column(ring, n, n)?.transpose();
    shift_rank_r_raw(&head, &last_col, &e_n)
}

/// `B = (∏ left) · diagonal · (∏ right)` with elementary `left` and `right`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaussianDiagonalization {
    pub left: Vec<Elementary>,
    pub diagonal: Matrix,
    pub right: Vec<Elementary>,
}

impl GaussianDiagonalization {
    pub fn left_matrices(&self) -> Vec<Matrix> {
        self.left.iter().map(|e| e.matrix(self.diagonal.ring())).collect()
    }

    pub fn right_matrices(&self) -> Vec<Matrix> {
        self.right.iter().map(|e| e.matrix(self.diagonal.ring())).collect()
    }

    /// Reassembled product.
    pub fn product(&self) -> Matrix {
        let mut acc = Matrix::identity(self.diagonal.ring(), self.diagonal.rows());
        for m in self.left_matrices() {
            acc = &acc * &m;
        }
        acc = &acc * &self.diagonal;
        for m in self.right_matrices() {
            acc = &acc * &m;
        }
        acc
    }
}

fn signed(ring: &Ring, e: &Elementary, signs: &[Elem]) -> Elementary {
    let s = ring.mul(&signs[e.i - 1], &signs[e.j - 1]);
    Elementary {
        coeff: ring.mul(&s, &e.coeff),
        ..e.clone()
    }
}

/// Gaussian elimination to elementary × diagonal × elementary form over a
/// field.
///
/// The pivot is the first nonzero entry in column order. Row and column
/// swaps are expanded as three elementary matrices and a `±1` diagonal,
/// and the signs are carried into the diagonal factor.
pub fn gaussian_diagonalize(b: &Matrix) -> Result<GaussianDiagonalization> {
    let ring = b.ring();
    let n = b.size()?;
    if !ring.is_field() {
        return Err(Error::NotAField);
    }
    let mut m = b.row_vecs();
    // B = left · diag(sl) · M · diag(sr) · right
    let mut left = Vec::new();
    let mut right_rev = Vec::new();
    let mut sl = vec![ring.one(); n];
    let mut sr = vec![ring.one(); n];
    for k in 0..n {
        let Some((pr, pc)) = (k..n).flat_map(|c| (k..n).map(move |r| (r, c))).find(|&(r, c)| !ring.is_zero(&m[r][c]))
        else {
            break;
        };
        if pr != k {
            for e in transposition_elementaries(ring, n, k + 1, pr + 1)? {
                left.push(signed(ring, &e, &sl));
            }
            sl[k] = ring.neg(&sl[k]);
            m.swap(k, pr);
        }
        if pc != k {
            sr[k] = ring.neg(&sr[k]);
            for e in transposition_elementaries(ring, n, k + 1, pc + 1)?.iter().rev() {
                right_rev.push(signed(ring, e, &sr));
            }
            for row in m.iter_mut() {
                row.swap(k, pc);
            }
        }
        let inv = ring.inv(&m[k][k]).expect("nonzero pivot in a field");
        for r in k + 1..n {
            if ring.is_zero(&m[r][k]) {
                continue;
            }
            let f = ring.mul(&m[r][k], &inv);
            for c in k..n {
                let t = ring.mul(&f, &m[k][c]);
                m[r][c] = ring.sub(&m[r][c], &t);
            }
            left.push(signed(ring, &Elementary::new(n, r + 1, k + 1, f)?, &sl));
        }
        for c in k + 1..n {
            if ring.is_zero(&m[k][c]) {
                continue;
            }
            let g = ring.mul(&m[k][c], &inv);
            m[k][c] = ring.zero();
            right_rev.push(signed(ring, &Elementary::new(n, k + 1, c + 1, g)?, &sr));
        }
    }
    let diag: Vec<Elem> = (0..n)
        .map(|k| ring.mul(&ring.mul(&sl[k], &m[k][k]), &sr[k]))
        .collect();
    right_rev.reverse();
    Ok(GaussianDiagonalization {
        left,
        diagonal: Matrix::diagonal(ring, &diag),
        right: right_rev,
    })
}

/// Factorization of `block_pad((∏ left) · D · (∏ right), 1)` from the padded
/// diagonal, transferring each elementary factor across the zero last row
/// or column.
pub(crate) fn padded_from_generators(left: &[Elementary], d: &Matrix, right: &[Elementary]) -> Result<Factorization> {
    let ring = d.ring();
    let n = d.size()?;
    let lift = |e: &Elementary| Elementary { size: n + 1, ..e.clone() }.matrix(ring);
    let mut f = triangular_raw(d, 1)?;
    for e in right {
        f = transfer_right_raw(&lift(e), &f, n + 1)?;
    }
    for e in left.iter().rev() {
        f = transfer_left_raw(&lift(e), &f, n + 1)?;
    }
    Ok(f)
}

/// Evidence that `(1 - e_ii) B` is a product of idempotents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ZeroRowEvidence {
    /// A factorization of `(1 - e_ii) B` itself.
    Factorization(Factorization),
    /// Coefficients `q_j`, `j ≠ i`, with column `i` of `(1 - e_ii) B` equal
    /// to `Σ q_j` times column `j`; the remaining block is factored
    /// recursively.
    ColumnCombination(Vec<RingElement>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroRowWitness {
    pub row: usize,
    pub evidence: ZeroRowEvidence,
}

/// Factorization of `block_pad(B, r)`, trying in order: triangular `B`, a
/// permutation matrix `B`, elimination over a field, `r >= n`.
pub fn factor_padded(b: &Matrix, r: usize) -> Result<Factorization> {
    factor_padded_with(b, r, None)
}

/// As [`factor_padded`], with a caller-supplied zero-row witness tried last.
pub fn factor_padded_with(b: &Matrix, r: usize, witness: Option<&ZeroRowWitness>) -> Result<Factorization> {
    padded_raw(b, r, witness)?.certified()
}

fn padded_raw(b: &Matrix, r: usize, witness: Option<&ZeroRowWitness>) -> Result<Factorization> {
    let n = check_pad(b, r)?;
    let ring = b.ring();
    if b.is_upper_triangular() || b.is_lower_triangular() {
        return Ok(triangular_raw(b, r)?.with_route(Route::new(RouteTag::TriangularPadded).with("r", r)));
    }
    if let Some(p) = Permutation::from_matrix(b) {
        let mut ext = p.images();
        ext.push(n + 1);
        let factors = permutation_left(ring, n + 1, &Permutation::from_images(&ext)?)?;
        let f = Factorization::raw(block_pad(b, 1)?, factors, Route::new(RouteTag::QuasiPermutation));
        return Ok(f.pad(r - 1)?.with_route(Route::new(RouteTag::QuasiPermutation).with("r", r)));
    }
    if ring.is_field() {
        let g = gaussian_diagonalize(b)?;
        let f = padded_from_generators(&g.left, &g.diagonal, &g.right)?;
        return Ok(f.pad(r - 1)?.with_route(Route::new(RouteTag::GePadded).with("r", r)));
    }
    if r >= n {
        return double_raw(b, n + r);
    }
    if let Some(w) = witness {
        return zero_row_raw(b, r, w);
    }
    Err(Error::RouteNotFound(format!(
        "{n}x{n} matrix over {ring} is not triangular or a permutation, the ring is not a field, padding {r} < {n}, and no zero-row witness was given"
    )))
}

fn zero_row_raw(b: &Matrix, r: usize, w: &ZeroRowWitness) -> Result<Factorization> {
    let n = b.size()?;
    let i = w.row;
    crate::matrix::check_index(i, n)?;
    let ring = b.ring();
    let zeroed = b.with_row_zeroed(i)?;
    let f = match &w.evidence {
        ZeroRowEvidence::Factorization(f) => {
            if f.target() != &zeroed {
                return Err(Error::Precondition(format!("witness does not factor B with row {i} zeroed")));
            }
            f.clone()
        }
        ZeroRowEvidence::ColumnCombination(q) => {
            if n < 2 || q.len() + 1 != n {
                return Err(Error::DimensionMismatch(format!("expected {} column coefficients", n.saturating_sub(1))));
            }
            if q.iter().any(|c| c.ring() != ring) {
                return Err(Error::RingMismatch);
            }
            // move index i to the end, keeping the others in order
            let images: Vec<usize> = (1..=n)
                .map(|k| match k.cmp(&i) {
                    core::cmp::Ordering::Less => k,
                    core::cmp::Ordering::Equal => n,
                    core::cmp::Ordering::Greater => k - 1,
                })
                .collect();
            let p = Permutation::from_images(&images)?;
            let (pm, pm_inv) = (p.matrix(ring), p.inverse().matrix(ring));
            let moved = zeroed.conjugate(&pm, &pm_inv)?;
            let inner = moved.block(1, 1, n - 1, n - 1)?;
            let qcol = Matrix::from_rows(ring, q.iter().map(|c| vec![c.value().clone()]).collect())?;
            if inner.try_mul(&qcol)? != moved.block(1, n, n - 1, 1)? {
                return Err(Error::Precondition(format!(
                    "column {i} is not the stated combination of the other columns"
                )));
            }
            let head = padded_raw(&inner, 1, None)?;
            lift_column_combination_raw(&head, &qcol)?.conjugate(&pm_inv, &pm)?
        }
    };
    let c = -&Matrix::basis_column(ring, n, i)?;
    let d = b.row(i)?;
    let shifted = shift_rank_r_raw(&f, &c, &d)?;
    Ok(shifted.pad(r - 1)?.with_route(Route::new(RouteTag::RankShift).with("r", r).with("zero-row", i)))
}

/// Factorization of the `l × l` matrix `block_pad(B, l - n)` for `l >= 2n`:
/// `[[0, B], [0, 0]] = [[I, B], [0, 0]] · [[0, 0], [0, I]]`, followed by
/// column transpositions moving `B` into the corner.
pub fn factor_double_padded(b: &Matrix, l: usize) -> Result<Factorization> {
    double_raw(b, l)?.certified()
}

fn double_raw(b: &Matrix, l: usize) -> Result<Factorization> {
    let n = b.size()?;
    let route = Route::new(RouteTag::DoublePadded).with("l", l);
    if n == 0 || l < 2 * n {
        return Err(Error::Precondition(format!("double padding needs l >= {}, got {l}", 2 * n)));
    }
    let ring = b.ring();
    if b.is_zero() {
        return Ok(zero_factorization(ring, l, route));
    }
    let (i, z) = (Matrix::identity(ring, n), Matrix::zero(ring, n, n));
    let first = Matrix::from_blocks(&i, b, &z, &z)?;
    let second = Matrix::from_blocks(&z, &z, &z, &i)?;
    let corner = Matrix::from_blocks(&z, b, &z, &z)?;
    let mut f = Factorization::raw(corner, vec![first, second], route.clone());
    for k in 1..=n {
        let t = Permutation::transposition(2 * n, k, n + k)?.matrix(ring);
        f = transfer_right_raw(&t, &f, k)?;
    }
    Ok(f.pad(l - 2 * n)?.with_route(route))
}
