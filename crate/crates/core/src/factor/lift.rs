//! Block lifts, rank shifts and row relations.

use alloc::format;
use alloc::vec::Vec;

use super::{Factorization, Route, RouteTag};
use crate::error::{Error, Result};
use crate::matrix::{block_pad, Matrix};
use crate::ring::RingElement;

fn check_ring(a: &Matrix, b: &Matrix) -> Result<()> {
    if a.ring() != b.ring() {
        return Err(Error::RingMismatch);
    }
    Ok(())
}

/// `[[I, C], [0, 0]]` or, with `lower`, `[[I, 0], [C, 0]]`.
fn bordered_projector(c: &Matrix, lower: bool) -> Result<Matrix> {
    let ring = c.ring();
    if lower {
        let (r, n) = (c.rows(), c.cols());
        Matrix::from_blocks(&Matrix::identity(ring, n), &Matrix::zero(ring, n, r), c, &Matrix::zero(ring, r, r))
    } else {
        let (n, r) = (c.rows(), c.cols());
        Matrix::from_blocks(&Matrix::identity(ring, n), c, &Matrix::zero(ring, r, n), &Matrix::zero(ring, r, r))
    }
}

/// From `B = E_1 ⋯ E_l` to `[[B, C], [0, 0]] = [[I, C], [0, 0]] · (E_1 ⊕ I) ⋯ (E_l ⊕ I)`.
pub fn lift_block_row(f: &Factorization, c: &Matrix) -> Result<Factorization> {
    lift_block_row_raw(f, c)?.certified()
}

pub(crate) fn lift_block_row_raw(f: &Factorization, c: &Matrix) -> Result<Factorization> {
    check_ring(f.target(), c)?;
    let n = f.size();
    if c.rows() != n || c.cols() == 0 {
        return Err(Error::DimensionMismatch(format!("C must be {n}x r with r >= 1")));
    }
    let r = c.cols();
    let b = f.target();
    let ring = b.ring();
    let target = Matrix::from_blocks(b, c, &Matrix::zero(ring, r, n), &Matrix::zero(ring, r, r))?;
    let mut factors = Vec::with_capacity(f.factors().len() + 1);
    factors.push(bordered_projector(c, false)?);
    for e in f.factors() {
        factors.push(e.extend_identity(r)?);
    }
    Ok(Factorization::raw(target, factors, Route::new(RouteTag::LiftBlockRow).with("r", r)))
}

/// Conjugators `([[I, -B⁻¹C], [0, I]], [[I, B⁻¹C], [0, I]])` taking
/// `block_pad(B, r)` to `[[B, C], [0, 0]]`.
pub fn similarity_reduce(b: &Matrix, c: &Matrix) -> Result<(Matrix, Matrix)> {
    check_ring(b, c)?;
    let n = b.size()?;
    if c.rows() != n || c.cols() == 0 {
        return Err(Error::DimensionMismatch(format!("C must be {n}x r with r >= 1")));
    }
    let r = c.cols();
    let ring = b.ring();
    let k = b.inverse()?.try_mul(c)?;
    let make = |corner: &Matrix| {
        Matrix::from_blocks(&Matrix::identity(ring, n), corner, &Matrix::zero(ring, r, n), &Matrix::identity(ring, r))
    };
    let p = make(&-&k)?;
    let p_inv = make(&k)?;
    let lifted = Matrix::from_blocks(b, c, &Matrix::zero(ring, r, n), &Matrix::zero(ring, r, r))?;
    if block_pad(b, r)?.conjugate(&p, &p_inv)? != lifted {
        return Err(Error::Precondition("similarity does not reproduce [B C; 0 0]".into()));
    }
    Ok((p, p_inv))
}

/// From a factorization of `block_pad(B, r)` to one of `[[B, BQ], [0, 0]]`,
/// appending `[[I, Q], [0, 0]]`.
pub fn lift_column_combination(f: &Factorization, q: &Matrix) -> Result<Factorization> {
    lift_column_combination_raw(f, q)?.certified()
}

pub(crate) fn lift_column_combination_raw(f: &Factorization, q: &Matrix) -> Result<Factorization> {
    check_ring(f.target(), q)?;
    let (n, r) = (q.rows(), q.cols());
    if n == 0 || r == 0 || f.size() != n + r {
        return Err(Error::DimensionMismatch(format!("Q is {n}x{r} but target has size {}", f.size())));
    }
    let t = f.target();
    let b = t.block(1, 1, n, n)?;
    if block_pad(&b, r)? != *t {
        return Err(Error::NotPadded);
    }
    let ring = t.ring();
    let bq = b.try_mul(q)?;
    let target = Matrix::from_blocks(&b, &bq, &Matrix::zero(ring, r, n), &Matrix::zero(ring, r, r))?;
    let mut factors = f.factors().to_vec();
    factors.push(bordered_projector(q, false)?);
    Ok(Factorization::raw(target, factors, Route::new(RouteTag::ColumnCombination).with("r", r)))
}

/// From a factorization of `B + CD` to one of `block_pad(B, r)`:
/// `[[I, -C], [0, 0]] · (E_k ⊕ I_r) · [[I, 0], [D, 0]]`.
pub fn shift_rank_r(f: &Factorization, c: &Matrix, d: &Matrix) -> Result<Factorization> {
    shift_rank_r_raw(f, c, d)?.certified()
}

pub(crate) fn shift_rank_r_raw(f: &Factorization, c: &Matrix, d: &Matrix) -> Result<Factorization> {
    check_ring(f.target(), c)?;
    check_ring(f.target(), d)?;
    let n = f.size();
    let r = c.cols();
    if c.rows() != n || r == 0 || d.rows() != r || d.cols() != n {
        return Err(Error::DimensionMismatch(format!(
            "C must be {n}x r and D r x {n}, got {}x{} and {}x{}",
            c.rows(),
            c.cols(),
            d.rows(),
            d.cols()
        )));
    }
    let b = f.target().try_sub(&c.try_mul(d)?)?;
    let mut factors = Vec::with_capacity(f.factors().len() + 2);
    factors.push(bordered_projector(&-c, false)?);
    for e in f.factors() {
        factors.push(e.extend_identity(r)?);
    }
    factors.push(bordered_projector(d, true)?);
    Ok(Factorization::raw(block_pad(&b, r)?, factors, Route::new(RouteTag::RankShift).with("r", r)))
}

/// From a factorization of `A_i = (1 - e_ii) A` to one of `A`, when row `i`
/// of `A` is `Σ_{j≠i} α_j` times row `j`.
///
/// `coefficients` lists `α_j` for `j = 1..n` skipping `i`. The single
/// idempotent `I - e_ii + Σ α_j e_ij` is prepended, since it maps `A_i` to `A`.
pub fn row_relation_reduce(
    a: &Matrix,
    i: usize,
    coefficients: &[RingElement],
    f_i: &Factorization,
) -> Result<Factorization> {
    let n = a.size()?;
    crate::matrix::check_index(i, n)?;
    let ring = a.ring();
    if coefficients.len() + 1 != n {
        return Err(Error::DimensionMismatch(format!("expected {} coefficients", n - 1)));
    }
    if coefficients.iter().any(|c| c.ring() != ring) || f_i.ring() != ring {
        return Err(Error::RingMismatch);
    }
    let a_i = a.with_row_zeroed(i)?;
    if f_i.target() != &a_i {
        return Err(Error::Precondition(format!("factorization target is not A with row {i} zeroed")));
    }
    let others: Vec<usize> = (1..=n).filter(|&j| j != i).collect();
    let mut v = Matrix::identity(ring, n).with_entry(i, i, ring.zero())?;
    for (&j, alpha) in others.iter().zip(coefficients) {
        v = v.with_entry(i, j, alpha.value().clone())?;
    }
    if v.try_mul(&a_i)? != *a {
        return Err(Error::Precondition(format!("row {i} is not the stated combination of the other rows")));
    }
    if coefficients.iter().all(RingElement::is_zero) {
        return Ok(f_i.clone());
    }
    let mut factors = alloc::vec![v];
    factors.extend(f_i.factors().iter().cloned());
    Factorization::raw(a.clone(), factors, Route::new(RouteTag::RowRelation).with("row", i)).certified()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Ring;

    fn single(m: Matrix) -> Factorization {
        Factorization::manual(m.clone(), alloc::vec![m]).unwrap()
    }

    #[test]
    fn block_row_examples() {
        let q = Ring::rationals();
        let f = single(Matrix::from_ints(&q, &[[1, 0], [0, 0]]).unwrap());
        let c = Matrix::parse(&q, &[["5/2"], ["0"]]).unwrap();
        let g = lift_block_row(&f, &c).unwrap();
        assert_eq!(g.factors().len(), 2);
        assert_eq!(g.target(), &Matrix::parse(&q, &[["1", "0", "5/2"], ["0", "0", "0"], ["0", "0", "0"]]).unwrap());
        let z = Matrix::zero(&q, 2, 2);
        let g = lift_block_row(&f, &z).unwrap();
        assert_eq!(g.target(), &block_pad(f.target(), 2).unwrap());
    }

    #[test]
    fn similarity_examples() {
        let q = Ring::rationals();
        let (p, p_inv) = similarity_reduce(&Matrix::from_ints(&q, &[[2]]).unwrap(), &Matrix::from_ints(&q, &[[3]]).unwrap()).unwrap();
        assert_eq!(p, Matrix::parse(&q, &[["1", "-3/2"], ["0", "1"]]).unwrap());
        assert_eq!(p_inv, Matrix::parse(&q, &[["1", "3/2"], ["0", "1"]]).unwrap());
        let (p, _) = similarity_reduce(&Matrix::identity(&q, 2), &Matrix::zero(&q, 2, 1)).unwrap();
        assert!(p.is_identity());
        assert_eq!(
            similarity_reduce(&Matrix::zero(&q, 1, 1), &Matrix::from_ints(&q, &[[1]]).unwrap()),
            Err(Error::NotInvertible)
        );
    }

    #[test]
    fn column_combination_examples() {
        let q = Ring::rationals();
        let f = super::super::factor_triangular_padded(&Matrix::from_ints(&q, &[[1, 0], [0, 0]]).unwrap(), 1).unwrap();
        let g = lift_column_combination(&f, &Matrix::from_ints(&q, &[[1], [1]]).unwrap()).unwrap();
        assert_eq!(g.target(), &Matrix::from_ints(&q, &[[1, 0, 1], [0, 0, 0], [0, 0, 0]]).unwrap());

        let b = q.parse("-4/9").unwrap();
        let f = super::super::factor_triangular_padded(&Matrix::from_rows(&q, alloc::vec![alloc::vec![b.clone()]]).unwrap(), 1).unwrap();
        let g = lift_column_combination(&f, &Matrix::from_ints(&q, &[[1]]).unwrap()).unwrap();
        assert_eq!(g.target(), &Matrix::from_rows(&q, alloc::vec![alloc::vec![b.clone(), b], alloc::vec![q.zero(), q.zero()]]).unwrap());

        let not_padded = single(Matrix::from_ints(&q, &[[1, 1], [0, 0]]).unwrap());
        assert_eq!(
            lift_column_combination(&not_padded, &Matrix::from_ints(&q, &[[1]]).unwrap()),
            Err(Error::NotPadded)
        );
    }

    #[test]
    fn rank_shift_scalar() {
        let q = Ring::rationals();
        let zero = single(Matrix::zero(&q, 1, 1));
        let b = q.parse("7/3").unwrap();
        let d = Matrix::from_rows(&q, alloc::vec![alloc::vec![q.neg(&b)]]).unwrap();
        let g = shift_rank_r(&zero, &Matrix::from_ints(&q, &[[1]]).unwrap(), &d).unwrap();
        assert_eq!(g.target(), &Matrix::from_rows(&q, alloc::vec![alloc::vec![b, q.zero()], alloc::vec![q.zero(), q.zero()]]).unwrap());
    }

    #[test]
    fn row_relation_examples() {
        let q = Ring::rationals();
        let a = Matrix::from_ints(&q, &[[1, 1], [1, 1]]).unwrap();
        let f = single(a.with_row_zeroed(2).unwrap());
        let one = RingElement::new(q.clone(), q.one()).unwrap();
        let g = row_relation_reduce(&a, 2, &[one], &f).unwrap();
        assert_eq!(g.target(), &a);

        let a = Matrix::from_ints(&q, &[[2, 4], [1, 2]]).unwrap();
        // [0 0; 1 2] is the swap-conjugate of [2 1; 0 0] = [B, BQ; 0 0] with Q = 1/2
        let swap = Matrix::from_ints(&q, &[[0, 1], [1, 0]]).unwrap();
        let padded = super::super::factor_padded(&Matrix::from_ints(&q, &[[2]]).unwrap(), 1).unwrap();
        let half = Matrix::parse(&q, &[["1/2"]]).unwrap();
        let f = lift_column_combination(&padded, &half).unwrap().conjugate(&swap, &swap).unwrap();
        assert_eq!(f.target(), &a.with_row_zeroed(1).unwrap());
        let two = RingElement::new(q.clone(), q.from_int(2)).unwrap();
        let g = row_relation_reduce(&a, 1, &[two], &f).unwrap();
        assert!(g.is_valid());
        assert_eq!(g.target(), &a);
    }

    #[test]
    fn zero_coefficients_return_input() {
        let q = Ring::rationals();
        let a = Matrix::from_ints(&q, &[[1, 0], [0, 0]]).unwrap();
        let f = single(a.clone());
        let zero = RingElement::new(q.clone(), q.zero()).unwrap();
        assert_eq!(row_relation_reduce(&a, 2, &[zero], &f).unwrap(), f);
    }

    #[test]
    fn row_relation_must_hold() {
        let q = Ring::rationals();
        let a = Matrix::from_ints(&q, &[[1, 0], [1, 1]]).unwrap();
        let f = single(a.with_row_zeroed(2).unwrap());
        let one = RingElement::new(q.clone(), q.one()).unwrap();
        assert!(matches!(row_relation_reduce(&a, 2, &[one], &f), Err(Error::Precondition(_))));
    }
}
