use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::matrix::Matrix;

/// `(P, P⁻¹)` with `P E P⁻¹ = diag(1, ..., 1, 0, ..., 0)` for an idempotent
/// `E` over a field.
///
/// The columns of `P⁻¹` are a basis of the column space of `E` followed by a
/// basis of its kernel.
pub fn diagonalize_idempotent(e: &Matrix) -> Result<(Matrix, Matrix)> {
    let n = e.size()?;
    if !e.ring().is_field() {
        return Err(Error::NotAField);
    }
    if !e.is_idempotent()? {
        return Err(Error::NotIdempotent);
    }
    let ring = e.ring();
    let (_, pivots) = e.rref()?;
    let mut columns: Vec<Matrix> = pivots.iter().map(|&c| e.col(c + 1)).collect::<Result<_>>()?;
    columns.extend(e.kernel_basis()?);
    let m = Matrix::from_rows(
        ring,
        (0..n).map(|r| columns.iter().map(|c| c.at(r, 0).clone()).collect()).collect(),
    )?;
    Ok((m.inverse()?, m))
}
