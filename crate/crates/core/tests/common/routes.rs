//! Random instances for every factorization route.

use super::*;
use idemprod_core::factor::{
    factor_double_padded, factor_padded, factor_padded_with, factor_quasi_elementary, factor_quasi_permutation,
    factor_triangular_padded, lift_block_row, lift_column_combination, row_relation_reduce, shift_rank_r,
    transfer_left, transfer_right, ZeroRowEvidence, ZeroRowWitness,
};
use idemprod_core::matrix::Elementary;
use idemprod_core::{Factorization, Result, RingElement};

pub const ROUTES: [&str; 12] = [
    "quasi-elementary",
    "quasi-permutation",
    "transfer-left",
    "transfer-right",
    "lift-block-row",
    "column-combination",
    "rank-shift",
    "row-relation",
    "triangular-padded",
    "ge-padded",
    "double-padded",
    "zero-row",
];

/// Routes that need a field.
pub fn needs_field(route: &str) -> bool {
    route == "ge-padded"
}

/// Routes only reachable over rings that are not fields.
pub fn needs_non_field(route: &str) -> bool {
    route == "zero-row"
}

/// An instance of `route`: the matrix that should be factored and the
/// route's answer.
pub struct Instance {
    pub expected: Matrix,
    pub result: Result<Factorization>,
}

fn distinct_pair(g: &mut ChaCha8Rng, n: usize) -> (usize, usize) {
    loop {
        let (a, b) = (g.gen_range(1..=n), g.gen_range(1..=n));
        if a != b {
            return (a, b);
        }
    }
}

pub fn elementary_matrix(g: &mut ChaCha8Rng, ring: &Ring, n: usize) -> Matrix {
    let (a, b) = distinct_pair(g, n);
    Elementary::new(n, a, b, nonzero(g, ring)).unwrap().matrix(ring)
}

/// An elementary or permutation matrix.
pub fn generator(g: &mut ChaCha8Rng, ring: &Ring, n: usize) -> Matrix {
    if g.gen_bool(0.5) {
        elementary_matrix(g, ring, n)
    } else {
        permutation(g, n).matrix(ring)
    }
}

fn quasi_core(g: &mut ChaCha8Rng, ring: &Ring, n: usize, elementary: bool) -> Matrix {
    if elementary {
        elementary_matrix(g, ring, n)
    } else {
        permutation(g, n).matrix(ring)
    }
}

/// A factorization of a size `n` matrix whose row `i` is zero: a left
/// quasi matrix, or over a field a padded matrix moved into place.
fn zero_row_base(g: &mut ChaCha8Rng, ring: &Ring, n: usize, i: usize) -> Factorization {
    if ring.is_field() && n >= 2 && g.gen_bool(0.5) {
        let b = matrix(g, ring, n - 1, n - 1);
        let f = factor_padded(&b, 1).unwrap();
        let p = idemprod_core::Permutation::transposition(n, i, n)
            .map(|t| t.matrix(ring))
            .unwrap_or_else(|_| Matrix::identity(ring, n));
        return f.conjugate(&p, &p).unwrap();
    }
    let elementary = g.gen_bool(0.5);
    let m = quasi_core(g, ring, n, elementary).with_row_zeroed(i).unwrap();
    factor_quasi_permutation(&m).or_else(|_| factor_quasi_elementary(&m)).unwrap()
}

/// A factorization of some square matrix of size `n`.
fn any_base(g: &mut ChaCha8Rng, ring: &Ring, n: usize) -> Factorization {
    let i = g.gen_range(1..=n);
    zero_row_base(g, ring, n, i)
}

fn elements(ring: &Ring, m: &Matrix) -> Vec<RingElement> {
    m.entries().iter().map(|e| RingElement::new(ring.clone(), e.clone()).unwrap()).collect()
}

pub fn instance(route: &str, g: &mut ChaCha8Rng, ring: &Ring) -> Instance {
    match route {
        "quasi-elementary" | "quasi-permutation" => {
            let n = g.gen_range(2..=5);
            let i = g.gen_range(1..=n);
            let elementary = route == "quasi-elementary";
            let core = quasi_core(g, ring, n, elementary);
            let m = if g.gen_bool(0.5) { core.with_row_zeroed(i) } else { core.with_col_zeroed(i) }.unwrap();
            let result = if elementary { factor_quasi_elementary(&m) } else { factor_quasi_permutation(&m) };
            Instance { expected: m, result }
        }
        "transfer-left" => {
            let n = g.gen_range(2..=5);
            let i = g.gen_range(1..=n);
            let f = zero_row_base(g, ring, n, i);
            let q = generator(g, ring, n);
            Instance { expected: &q * f.target(), result: transfer_left(&q, &f, i) }
        }
        "transfer-right" => {
            let n = g.gen_range(2..=5);
            let i = g.gen_range(1..=n);
            let f = zero_row_base(g, ring, n, i).transpose();
            let q = generator(g, ring, n);
            Instance { expected: f.target() * &q, result: transfer_right(&q, &f, i) }
        }
        "lift-block-row" => {
            let n = g.gen_range(2..=4);
            let r = g.gen_range(1..=5 - n);
            let f = any_base(g, ring, n);
            let c = matrix(g, ring, n, r);
            let expected =
                Matrix::from_blocks(f.target(), &c, &Matrix::zero(ring, r, n), &Matrix::zero(ring, r, r)).unwrap();
            Instance { expected, result: lift_block_row(&f, &c) }
        }
        "column-combination" => {
            let n = g.gen_range(1..=3);
            let r = g.gen_range(1..=5 - n);
            let b = upper_triangular(g, ring, n);
            let f = factor_triangular_padded(&b, r).unwrap();
            let qm = matrix(g, ring, n, r);
            let expected =
                Matrix::from_blocks(&b, &(&b * &qm), &Matrix::zero(ring, r, n), &Matrix::zero(ring, r, r)).unwrap();
            Instance { expected, result: lift_column_combination(&f, &qm) }
        }
        "rank-shift" => {
            let n = g.gen_range(2..=4);
            let r = g.gen_range(1..=5 - n);
            let f = any_base(g, ring, n);
            let c = matrix(g, ring, n, r);
            let d = matrix(g, ring, r, n);
            let expected = padded(&(f.target() - &(&c * &d)), r);
            Instance { expected, result: shift_rank_r(&f, &c, &d) }
        }
        "row-relation" => {
            let n = g.gen_range(2..=5);
            let i = g.gen_range(1..=n);
            let f = zero_row_base(g, ring, n, i);
            let alphas: Vec<Elem> = (1..n).map(|_| elem(g, ring)).collect();
            let mut v = Matrix::identity(ring, n).with_entry(i, i, ring.zero()).unwrap();
            for (j, a) in (1..=n).filter(|&j| j != i).zip(&alphas) {
                v = v.with_entry(i, j, a.clone()).unwrap();
            }
            let a = &v * f.target();
            let coeffs: Vec<RingElement> =
                alphas.into_iter().map(|e| RingElement::new(ring.clone(), e).unwrap()).collect();
            Instance { result: row_relation_reduce(&a, i, &coeffs, &f), expected: a }
        }
        "triangular-padded" => {
            let n = g.gen_range(1..=4);
            let r = g.gen_range(1..=5 - n);
            let b = upper_triangular(g, ring, n);
            let b = if g.gen_bool(0.5) { b } else { b.transpose() };
            Instance { expected: padded(&b, r), result: factor_triangular_padded(&b, r) }
        }
        "ge-padded" => {
            let n = g.gen_range(1..=4);
            let r = g.gen_range(1..=5 - n);
            let b = if g.gen_bool(0.5) { invertible(g, ring, n) } else { sparse(g, ring, n, n) };
            Instance { expected: padded(&b, r), result: factor_padded(&b, r) }
        }
        "double-padded" => {
            let n = g.gen_range(1..=2);
            let l = g.gen_range(2 * n..=5);
            let b = matrix(g, ring, n, n);
            Instance { expected: padded(&b, l - n), result: factor_double_padded(&b, l) }
        }
        "zero-row" => {
            let n = g.gen_range(2..=4);
            let r = g.gen_range(1..n);
            let i = g.gen_range(1..=n);
            let inner = upper_triangular(g, ring, n - 1);
            let qv = matrix(g, ring, n - 1, 1);
            let col = &inner * &qv;
            let row = matrix(g, ring, 1, n);
            let others: Vec<usize> = (1..=n).filter(|&k| k != i).collect();
            let mut b = Matrix::zero(ring, n, n);
            for (a, &ra) in others.iter().enumerate() {
                for (c, &rc) in others.iter().enumerate() {
                    b = b.with_entry(ra, rc, inner.get(a + 1, c + 1).unwrap().clone()).unwrap();
                }
                b = b.with_entry(ra, i, col.get(a + 1, 1).unwrap().clone()).unwrap();
            }
            for c in 1..=n {
                b = b.with_entry(i, c, row.get(1, c).unwrap().clone()).unwrap();
            }
            let witness = ZeroRowWitness { row: i, evidence: ZeroRowEvidence::ColumnCombination(elements(ring, &qv)) };
            Instance { expected: padded(&b, r), result: factor_padded_with(&b, r, Some(&witness)) }
        }
        other => panic!("unknown route {other}"),
    }
}
