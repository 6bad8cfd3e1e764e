mod common;

use common::*;
use idemprod_core::factor::{factor_padded, verify_factorization};
use idemprod_core::matrix::block_pad;
use idemprod_core::oracle::{
    annihilators_by_determinant, annihilators_by_scan, annihilators_nonzero, check_omeara, enumerate_idempotents,
    product_closure, FiniteMatrixSpace, MatrixSet, DEFAULT_BUDGET,
};
use idemprod_core::Matrix;
use proptest::prelude::*;
use rand::Rng as _;

fn singular_or_identity(space: &FiniteMatrixSpace) -> usize {
    space
        .codes()
        .filter(|c| {
            let m = space.matrix(c);
            m.is_identity() || !m.ring().is_unit(&m.determinant().unwrap())
        })
        .count()
}

#[test]
fn closure_is_singular_plus_identity() {
    for (m, expected) in [(2u32, 11usize), (3, 34)] {
        let space = FiniteMatrixSpace::new(&zmod(m), 2).unwrap();
        let closure = product_closure(&space);
        assert_eq!(closure.len(), expected);
        assert_eq!(singular_or_identity(&space), expected);
        for c in closure.codes() {
            let a = space.matrix(c);
            assert!(a.is_identity() || a.determinant().unwrap() == a.ring().zero());
        }
    }
}

#[test]
fn closure_of_three_by_three_over_z2() {
    let space = FiniteMatrixSpace::new(&zmod(2), 3).unwrap();
    let closure = product_closure(&space);
    // |M_3(Z/2)| = 512 and |GL_3(Z/2)| = 168
    assert_eq!(closure.len(), 512 - 168 + 1);
    assert_eq!(singular_or_identity(&space), closure.len());
}

fn closure_contains_idempotents(space: &FiniteMatrixSpace, closure: &MatrixSet) {
    for c in enumerate_idempotents(space).codes() {
        assert!(closure.contains_code(c));
    }
}

/// Every padded matrix over a small prime field is factored, and the
/// factorization agrees with the brute-force closure.
#[test]
fn padded_factorizations_agree_with_closure() {
    for (p, n, r) in [(2u32, 1usize, 1usize), (2, 1, 2), (2, 2, 1), (3, 1, 1)] {
        let ring = zmod(p);
        let big = FiniteMatrixSpace::new(&ring, n + r).unwrap();
        let closure = product_closure(&big);
        let idempotents = enumerate_idempotents(&big);
        closure_contains_idempotents(&big, &closure);
        let small = FiniteMatrixSpace::new(&ring, n).unwrap();
        for c in small.codes() {
            let b = small.matrix(&c);
            let f = factor_padded(&b, r).unwrap();
            assert!(verify_factorization(&f));
            assert!(closure.contains(f.target()));
            for e in f.factors() {
                assert!(idempotents.contains(e));
            }
        }
    }
}

#[test]
fn closure_members_have_both_annihilators() {
    for m in [2u32, 3, 4, 6] {
        let space = FiniteMatrixSpace::new(&zmod(m), 2).unwrap();
        for c in product_closure(&space).codes() {
            let a = space.matrix(c);
            if a.is_identity() {
                continue;
            }
            assert_eq!(annihilators_nonzero(&a).unwrap(), (true, true), "{a:?}");
        }
    }
}

#[test]
fn annihilator_routes_agree() {
    for m in [2u32, 4, 6, 9] {
        let space = FiniteMatrixSpace::new(&zmod(m), 2).unwrap();
        for c in space.codes() {
            let a = space.matrix(&c);
            let scan = annihilators_by_scan(&a, DEFAULT_BUDGET).unwrap();
            assert_eq!(scan, annihilators_by_determinant(&a).unwrap());
            assert_eq!(scan.0, scan.1);
        }
    }
}

#[test]
fn omeara_on_padded_z2() {
    let ring = zmod(2);
    for (n, r) in [(1usize, 1usize), (1, 2), (2, 1)] {
        let space = FiniteMatrixSpace::new(&ring, n).unwrap();
        for c in space.codes() {
            let b = space.matrix(&c);
            let report = check_omeara(&b, r).unwrap();
            assert_eq!(report.triple(), (true, true, true), "{b:?}");
            assert!(report.equal);
        }
    }
}

#[test]
fn units_have_trivial_annihilator_ideals() {
    let ring = zmod(3);
    // I - A is a nonzero matrix over a field, so it generates S
    let a = Matrix::from_ints(&ring, &[[1, 1], [0, 1]]).unwrap();
    let report = idemprod_core::oracle::omeara_equalities(&a).unwrap();
    assert_eq!(report.triple(), (false, false, true));
    assert!(!report.equal);
    assert_eq!((report.lann_size, report.rann_size), (1, 1));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn closure_is_closed(seed in any::<u64>()) {
        let mut g = rng(seed);
        let m = [2u32, 3][g.gen_range(0..2)];
        let space = FiniteMatrixSpace::new(&zmod(m), 2).unwrap();
        let closure = product_closure(&space);
        let codes = closure.codes();
        for _ in 0..50 {
            let a = &codes[g.gen_range(0..codes.len())];
            let b = &codes[g.gen_range(0..codes.len())];
            prop_assert!(closure.contains_code(&space.mul(a, b)));
        }
    }

    #[test]
    fn code_round_trip(seed in any::<u64>()) {
        let mut g = rng(seed);
        let m = g.gen_range(2..=9);
        let ring = zmod(m);
        let n = g.gen_range(1..=3);
        let a = matrix(&mut g, &ring, n, n);
        let b = matrix(&mut g, &ring, n, n);
        let space = FiniteMatrixSpace::with_budget(&ring, n, u64::MAX).unwrap();
        let (ca, cb) = (space.code(&a).unwrap(), space.code(&b).unwrap());
        prop_assert_eq!(space.matrix(&ca), a.clone());
        prop_assert_eq!(space.matrix(&space.mul(&ca, &cb)), &a * &b);
        prop_assert_eq!(space.matrix(&space.add(&ca, &cb)), &a + &b);
    }

    #[test]
    fn factored_padded_matrices_are_singular(seed in any::<u64>()) {
        let mut g = rng(seed);
        let ring = zmod(7);
        let n = g.gen_range(1..=3);
        let b = matrix(&mut g, &ring, n, n);
        let a = block_pad(&b, 1).unwrap();
        prop_assert_eq!(annihilators_nonzero(&a).unwrap(), (true, true));
        prop_assert!(factor_padded(&b, 1).unwrap().is_valid());
    }
}
