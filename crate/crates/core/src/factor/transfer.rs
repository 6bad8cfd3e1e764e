//! Multiplying a zero-row (zero-column) factorization by an elementary or
//! permutation matrix.

use alloc::vec::Vec;

use super::quasi::{elementary_left, permutation_left, transposed};
use super::{Factorization, Route, RouteTag};
use crate::error::{Error, Result};
use crate::matrix::{check_index, Elementary, Matrix, Permutation};

enum Generator {
    Elementary(Elementary),
    Permutation(Permutation),
}

fn recognize(q: &Matrix, n: usize) -> Result<Option<Generator>> {
    if q.rows() != n || q.cols() != n {
        return Err(Error::DimensionMismatch("transfer matrix size".into()));
    }
    if q.is_identity() {
        return Ok(None);
    }
    if let Some(e) = Elementary::from_matrix(q) {
        return Ok(Some(Generator::Elementary(e)));
    }
    if let Some(p) = Permutation::from_matrix(q) {
        return Ok(Some(Generator::Permutation(p)));
    }
    Err(Error::NotElementaryOrPermutation)
}

/// Factorization of `Q · target` from one of `target`, whose row `i` is zero.
///
/// Since `Q T = Q (1 - e_ii) T`, the factors of the quasi matrix
/// `Q (1 - e_ii)` are prepended. If `Q T = T` the input is returned as is.
pub fn transfer_left(q: &Matrix, f: &Factorization, i: usize) -> Result<Factorization> {
    transfer_left_raw(q, f, i)?
        .with_route(Route::new(RouteTag::TransferLeft).with("index", i))
        .certified()
}

/// Factorization of `target · Q` from one of `target`, whose column `i` is
/// zero, by transpose duality.
pub fn transfer_right(q: &Matrix, f: &Factorization, i: usize) -> Result<Factorization> {
    transfer_right_raw(q, f, i)?
        .with_route(Route::new(RouteTag::TransferRight).with("index", i))
        .certified()
}

/// Factorization of `Q⁻¹ · target`; the inverse of an elementary or
/// permutation matrix is again one.
pub fn transfer_left_inverse(q: &Matrix, f: &Factorization, i: usize) -> Result<Factorization> {
    let ring = f.ring();
    let inv = match recognize(q, f.size())? {
        None => return Ok(f.clone()),
        Some(Generator::Elementary(e)) => e.inverse(ring).matrix(ring),
        Some(Generator::Permutation(p)) => p.inverse().matrix(ring),
    };
    transfer_left(&inv, f, i)
}

pub(crate) fn transfer_left_raw(q: &Matrix, f: &Factorization, i: usize) -> Result<Factorization> {
    let n = f.size();
    check_index(i, n)?;
    if q.ring() != f.ring() {
        return Err(Error::RingMismatch);
    }
    if !f.target().row_is_zero(i) {
        return Err(Error::RowNotZero(i));
    }
    let Some(generator) = recognize(q, n)? else {
        return Ok(f.clone());
    };
    let target = q.try_mul(f.target())?;
    if &target == f.target() {
        return Ok(f.clone());
    }
    let ring = f.ring();
    // Q (1 - e_ii) is a right quasi matrix; factor its transpose
    let prefix = match generator {
        Generator::Elementary(e) => transposed(elementary_left(ring, i, &e.transpose())),
        Generator::Permutation(p) => transposed(permutation_left(ring, i, &p.inverse())?),
    };
    let mut factors: Vec<Matrix> = prefix;
    factors.extend(f.factors().iter().cloned());
    Ok(Factorization::raw(target, factors, f.route().clone()))
}

pub(crate) fn transfer_right_raw(q: &Matrix, f: &Factorization, i: usize) -> Result<Factorization> {
    check_index(i, f.size())?;
    if !f.target().col_is_zero(i) {
        return Err(Error::ColumnNotZero(i));
    }
    Ok(transfer_left_raw(&q.transpose(), &f.transpose(), i)?.transpose())
}
