//! Quasi elementary and quasi permutation matrices.

use alloc::vec;
use alloc::vec::Vec;

use super::padded::padded_from_generators;
use super::{Factorization, Route, RouteTag};
use crate::error::{Error, Result};
use crate::matrix::{
    classify_quasi_elementary, classify_quasi_permutation, transposition_elementaries, Elementary, Matrix, Permutation,
    QuasiKind,
};
use crate::ring::Ring;

/// Factors `(1 - e_ii) Q` or `Q (1 - e_ii)` for an elementary `Q`.
///
/// When the result is not already idempotent, the zeroed index is moved to
/// the last position and the matrix is written as
/// `diag(I, 0) · [[I + b e_kl, e_k], [-b e_lᵀ, 0]] · diag(I, 0)`.
pub fn factor_quasi_elementary(a: &Matrix) -> Result<Factorization> {
    let ring = a.ring();
    let (factors, route) = match classify_quasi_elementary(a) {
        QuasiKind::ElementaryLeft { zeroed, core } => (
            elementary_left(ring, zeroed, &core),
            Route::new(RouteTag::QuasiElementary).with("side", "left").with("zeroed", zeroed),
        ),
        QuasiKind::ElementaryRight { zeroed, core } => (
            transposed(elementary_left(ring, zeroed, &core.transpose())),
            Route::new(RouteTag::QuasiElementary).with("side", "right").with("zeroed", zeroed),
        ),
        _ => return Err(Error::NotQuasi("elementary")),
    };
    Factorization::new(a.clone(), factors, route)
}

/// Factors `(1 - e_ii) P` or `P (1 - e_ii)` for a permutation matrix `P`.
pub fn factor_quasi_permutation(a: &Matrix) -> Result<Factorization> {
    let ring = a.ring();
    let (factors, route) = match classify_quasi_permutation(a) {
        QuasiKind::PermutationLeft { zeroed, perm } => (
            permutation_left(ring, zeroed, &perm)?,
            Route::new(RouteTag::QuasiPermutation).with("side", "left").with("zeroed", zeroed),
        ),
        QuasiKind::PermutationRight { zeroed, perm } => (
            transposed(permutation_left(ring, zeroed, &perm.inverse())?),
            Route::new(RouteTag::QuasiPermutation).with("side", "right").with("zeroed", zeroed),
        ),
        _ => return Err(Error::NotQuasi("permutation")),
    };
    Factorization::new(a.clone(), factors, route)
}

pub(crate) fn transposed(factors: Vec<Matrix>) -> Vec<Matrix> {
    factors.iter().rev().map(Matrix::transpose).collect()
}

fn swap_matrix(ring: &Ring, n: usize, i: usize) -> Matrix {
    if i == n {
        Matrix::identity(ring, n)
    } else {
        Permutation::transposition(n, i, n).expect("valid indices").matrix(ring)
    }
}

/// Factors of `(1 - e_ii) Q`.
pub(crate) fn elementary_left(ring: &Ring, i: usize, core: &Elementary) -> Vec<Matrix> {
    let n = core.size;
    let a = core.matrix(ring).with_row_zeroed(i).expect("index in range");
    if &a * &a == a {
        return vec![a];
    }
    // here k, l and i are pairwise distinct, so n >= 3
    let swap = |x: usize| {
        if x == i {
            n
        } else if x == n {
            i
        } else {
            x
        }
    };
    let (k, l) = (swap(core.i) - 1, swap(core.j) - 1);
    let b = &core.coeff;
    let (z, o) = (ring.zero(), ring.one());
    let mut corner = vec![o.clone(); n];
    corner[n - 1] = z.clone();
    let outer = Matrix::diagonal(ring, &corner);
    let middle = Matrix::from_fn(ring, n, n, |r, c| match (r, c) {
        _ if r == n - 1 && c == n - 1 => z.clone(),
        _ if r == n - 1 => {
            if c == l {
                ring.neg(b)
            } else {
                z.clone()
            }
        }
        _ if c == n - 1 => {
            if r == k {
                o.clone()
            } else {
                z.clone()
            }
        }
        _ if r == c => o.clone(),
        _ if r == k && c == l => b.clone(),
        _ => z.clone(),
    });
    let t = swap_matrix(ring, n, i);
    [outer.clone(), middle, outer]
        .iter()
        .map(|f| &(&t * f) * &t)
        .collect()
}

/// Factors of `(1 - e_ii) P_σ`.
///
/// If `j = σ⁻¹(i) ≠ i`, the matrix equals
/// `(1 - e_ii) · (I + e_ji - e_jj) · (1 - e_jj) P_ρ` with `ρ = (i j) ∘ σ`,
/// and `ρ` fixes `j`. A fixed zeroed index is moved to the last position,
/// leaving a padded permutation block.
pub(crate) fn permutation_left(ring: &Ring, i: usize, sigma: &Permutation) -> Result<Vec<Matrix>> {
    let n = sigma.len();
    let a = sigma.matrix(ring).with_row_zeroed(i)?;
    if &a * &a == a {
        return Ok(vec![a]);
    }
    let j = sigma.preimage(i);
    if j != i {
        let g1 = Matrix::identity(ring, n).with_entry(i, i, ring.zero())?;
        let g2 = Matrix::identity(ring, n)
            .with_entry(j, j, ring.zero())?
            .with_entry(j, i, ring.one())?;
        let rho = Permutation::transposition(n, i, j)?.compose(sigma);
        let mut out = vec![g1, g2];
        if !rho.is_identity() {
            out.extend(permutation_left(ring, j, &rho)?);
        }
        return Ok(out);
    }
    let t_perm = if i == n {
        Permutation::identity(n)
    } else {
        Permutation::transposition(n, i, n)?
    };
    let moved = t_perm.compose(sigma).compose(&t_perm);
    let inner = Permutation::from_images(&moved.images()[..n - 1])?;
    let (left, signs) = permutation_generators(ring, &inner);
    let padded = padded_from_generators(&left, &Matrix::diagonal(ring, &signs), &[])?;
    let t = t_perm.matrix(ring);
    Ok(padded.factors().iter().map(|f| &(&t * f) * &t).collect())
}

/// `P = E_1 ⋯ E_m · D` with elementary `E_k` and a `±1` diagonal `D`,
/// obtained by expanding each transposition and pushing its sign to the right.
pub(crate) fn permutation_generators(ring: &Ring, p: &Permutation) -> (Vec<Elementary>, Vec<crate::ring::Elem>) {
    let m = p.len();
    let mut signs = vec![ring.one(); m];
    let mut left = Vec::new();
    for (a, b) in p.transpositions() {
        for e in transposition_elementaries(ring, m, a, b).expect("distinct indices") {
            let s = ring.mul(&signs[e.i - 1], &signs[e.j - 1]);
            left.push(Elementary {
                coeff: ring.mul(&s, &e.coeff),
                ..e
            });
        }
        signs[a - 1] = ring.neg(&signs[a - 1]);
    }
    (left, signs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::elementary;

    #[test]
    fn single_factor_case() {
        let q = Ring::rationals();
        let b = q.parse("-2/7").unwrap();
        let a = elementary(&q, 2, 1, 2, b.clone()).unwrap().with_row_zeroed(2).unwrap();
        let f = factor_quasi_elementary(&a).unwrap();
        assert_eq!(f.factors(), &[Matrix::from_rows(&q, vec![vec![q.one(), b], vec![q.zero(), q.zero()]]).unwrap()]);
    }

    #[test]
    fn three_factor_display() {
        let q = Ring::rationals();
        let b = q.from_int(5);
        let a = elementary(&q, 3, 1, 2, b).unwrap().with_row_zeroed(3).unwrap();
        let f = factor_quasi_elementary(&a).unwrap();
        let outer = Matrix::from_ints(&q, &[[1, 0, 0], [0, 1, 0], [0, 0, 0]]).unwrap();
        let middle = Matrix::from_ints(&q, &[[1, 5, 1], [0, 1, 0], [0, -5, 0]]).unwrap();
        assert_eq!(f.factors(), &[outer.clone(), middle, outer]);
    }

    #[test]
    fn zero_coefficient_is_a_projection() {
        let q = Ring::rationals();
        let a = Matrix::from_ints(&q, &[[1, 0], [0, 0]]).unwrap();
        assert_eq!(factor_quasi_elementary(&a).unwrap().factors(), &[a]);
    }

    #[test]
    fn quasi_permutation_examples() {
        let q = Ring::rationals();
        let a = Matrix::from_ints(&q, &[[0, 0], [1, 0]]).unwrap();
        let f = factor_quasi_permutation(&a).unwrap();
        assert_eq!(
            f.factors(),
            &[
                Matrix::from_ints(&q, &[[0, 0], [0, 1]]).unwrap(),
                Matrix::from_ints(&q, &[[1, 0], [1, 0]]).unwrap()
            ]
        );

        let d = Matrix::from_ints(&q, &[[0, 0], [0, 1]]).unwrap();
        assert_eq!(factor_quasi_permutation(&d).unwrap().factors(), &[d]);

        let c = Permutation::cycle(3, &[1, 2, 3]).unwrap().matrix(&q).with_row_zeroed(1).unwrap();
        assert!(factor_quasi_permutation(&c).unwrap().is_valid());
    }

    #[test]
    fn fixed_index_with_nontrivial_block() {
        for ring in [Ring::rationals(), Ring::integers_mod(2u32).unwrap(), Ring::integers_mod(6u32).unwrap()] {
            let p = Permutation::from_images(&[3, 2, 1, 4]).unwrap();
            for i in [2, 4] {
                let a = p.matrix(&ring).with_row_zeroed(i).unwrap();
                assert!(factor_quasi_permutation(&a).unwrap().is_valid());
                let right = p.matrix(&ring).with_col_zeroed(i).unwrap();
                assert!(factor_quasi_permutation(&right).unwrap().is_valid());
            }
        }
    }

    #[test]
    fn generators_rebuild_the_permutation() {
        let q = Ring::rationals();
        let p = Permutation::from_images(&[2, 4, 1, 3]).unwrap();
        let (left, signs) = permutation_generators(&q, &p);
        let mut acc = Matrix::identity(&q, 4);
        for e in &left {
            acc = &acc * &e.matrix(&q);
        }
        acc = &acc * &Matrix::diagonal(&q, &signs);
        assert_eq!(acc, p.matrix(&q));
    }

    #[test]
    fn rejects_other_matrices() {
        let q = Ring::rationals();
        let m = Matrix::from_ints(&q, &[[1, 2], [3, 4]]).unwrap();
        assert_eq!(factor_quasi_elementary(&m), Err(Error::NotQuasi("elementary")));
        assert_eq!(factor_quasi_permutation(&m), Err(Error::NotQuasi("permutation")));
    }
}
