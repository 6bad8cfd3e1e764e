mod common;

use common::*;
use idemprod_core::ring::Ring;
use idemprod_core::tnn::{
    counterexample_matrix, counterexample_report, first_negative_minor, is_totally_nonnegative,
    left_stabilizer_nonneg, StabilizerStatus,
};
use idemprod_core::{Matrix, RingElement};
use proptest::prelude::*;
use rand::Rng as _;

fn alpha(ring: &Ring, num: i64, den: i64) -> RingElement {
    RingElement::parse(ring, &format!("{num}/{den}")).unwrap()
}

fn the_matrix(num: i64, den: i64) -> Matrix {
    let ring = q();
    counterexample_matrix(&alpha(&ring, num, den)).unwrap()
}

fn assert_row_forced(row: usize) {
    for (num, den) in [(1, 1), (2, 1), (1, 3)] {
        let a = the_matrix(num, den);
        let s = left_stabilizer_nonneg(&a).unwrap();
        let sol = &s.rows[row - 1];
        assert_eq!(sol.row, row);
        assert!(sol.forced, "row {row} not forced for alpha {num}/{den}");
        assert!(sol.escape.is_none());
        assert_eq!(sol.particular, Matrix::basis_column(&q(), 4, row).unwrap().transpose());
    }
}

#[test]
fn row_1_is_forced() {
    assert_row_forced(1);
}

#[test]
fn row_2_is_forced() {
    assert_row_forced(2);
}

#[test]
fn row_3_is_forced() {
    assert_row_forced(3);
}

#[test]
fn row_4_is_forced() {
    assert_row_forced(4);
}

/// `x A = row_1(A)` with `x = (x1, y1, z1, t1)` is the system
/// `x1 + z1 = 1, x1 + t1 = 1, y1 + z1 = 0` (column 3 of A is zero).
#[test]
fn row_1_constraints() {
    let ring = q();
    let a = the_matrix(1, 1);
    let system = Matrix::from_ints(&ring, &[[1, 0, 1, 0], [1, 0, 0, 1], [0, 1, 1, 0]]).unwrap();
    // the columns of A, scaled by 1/alpha, give the same equations
    let nonzero_cols = [1usize, 2, 4];
    let cols = a.submatrix(&[1, 2, 3, 4], &nonzero_cols).unwrap().transpose();
    assert_eq!(cols, system);
    assert!(a.col(3).unwrap().is_zero());
    // solution set e_1 + t (1, 1, -1, -1): nonnegativity of y1 and z1
    // together with y1 + z1 = 0 forces t = 0
    let directions = a.left_kernel_basis().unwrap();
    assert_eq!(directions.len(), 1);
    let d = &directions[0];
    let ratio = ring.inv(d.get(1, 1).unwrap()).unwrap();
    assert_eq!(d.scale(&ratio), Matrix::from_ints(&ring, &[[1, 1, -1, -1]]).unwrap());
    assert!((&(&Matrix::basis_column(&ring, 4, 1).unwrap().transpose() + d) * &a) == a.row(1).unwrap());
}

#[test]
fn determinant_vanishes() {
    for (num, den) in [(1, 1), (2, 1), (1, 3), (7, 5)] {
        assert_eq!(the_matrix(num, den).determinant().unwrap(), q().zero());
    }
}

#[test]
fn report_records_negative_minor() {
    let ring = q();
    let report = counterexample_report(&alpha(&ring, 1, 1)).unwrap();
    assert_eq!(report.stabilizer.status, StabilizerStatus::OnlyIdentity);
    assert_eq!(report.totally_nonnegative, report.first_negative_minor.is_none());
    if let Some(m) = &report.first_negative_minor {
        let sub = report.matrix.submatrix(&m.rows, &m.cols).unwrap();
        assert_eq!(sub.determinant().unwrap(), m.value);
        assert_eq!(ring.sign(&m.value), Some(std::cmp::Ordering::Less));
    }
}

/// No `{0, 1}` idempotent `E ≠ I` stabilizes the matrix from the left.
#[test]
fn grid_search_finds_no_stabilizer() {
    let ring = q();
    let a = the_matrix(1, 1);
    let mut found = 0;
    for bits in 0u32..1 << 16 {
        let entries = (0..16).map(|k| ring.from_int(((bits >> k) & 1) as i64)).collect();
        let e = Matrix::new(&ring, 4, 4, entries).unwrap();
        if !e.is_identity() && &e * &a == a && &e * &e == e {
            found += 1;
        }
    }
    assert_eq!(found, 0);
}

/// Nonnegative combination of bidiagonal factors, which is always totally
/// nonnegative.
fn random_tnn(g: &mut rand_chacha::ChaCha8Rng, ring: &Ring, n: usize) -> Matrix {
    let mut m = Matrix::diagonal(ring, &(0..n).map(|_| ring.from_int(g.gen_range(0..=3))).collect::<Vec<_>>());
    for _ in 0..g.gen_range(0..=4) {
        let i = g.gen_range(1..n.max(2));
        if i >= n {
            break;
        }
        let t = ring.from_int(g.gen_range(0..=3));
        let e = if g.gen_bool(0.5) {
            Matrix::identity(ring, n).with_entry(i, i + 1, t).unwrap()
        } else {
            Matrix::identity(ring, n).with_entry(i + 1, i, t).unwrap()
        };
        m = if g.gen_bool(0.5) { &e * &m } else { &m * &e };
    }
    m
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn tnn_is_closed_under_products(seed in any::<u64>()) {
        let mut g = rng(seed);
        let ring = q();
        let n = g.gen_range(1..=4);
        let a = random_tnn(&mut g, &ring, n);
        let b = random_tnn(&mut g, &ring, n);
        prop_assert!(is_totally_nonnegative(&a).unwrap());
        prop_assert!(is_totally_nonnegative(&b).unwrap());
        prop_assert!(is_totally_nonnegative(&(&a * &b)).unwrap());
    }

    #[test]
    fn tnn_agrees_with_filtered_random_pairs(seed in any::<u64>()) {
        let mut g = rng(seed);
        let ring = q();
        let n = g.gen_range(1..=3);
        let nonneg = |g: &mut rand_chacha::ChaCha8Rng| {
            let entries = (0..n * n).map(|_| ring.from_int(g.gen_range(0..=2))).collect();
            Matrix::new(&ring, n, n, entries).unwrap()
        };
        let (a, b) = (nonneg(&mut g), nonneg(&mut g));
        if is_totally_nonnegative(&a).unwrap() && is_totally_nonnegative(&b).unwrap() {
            prop_assert!(first_negative_minor(&(&a * &b)).unwrap().is_none());
        }
    }

    #[test]
    fn stabilizer_witnesses_are_sound(seed in any::<u64>()) {
        let mut g = rng(seed);
        let ring = q();
        let n = g.gen_range(1..=4);
        let entries = (0..n * n).map(|_| ring.from_int(if g.gen_bool(0.4) { 0 } else { g.gen_range(0..=3) })).collect();
        let a = Matrix::new(&ring, n, n, entries).unwrap();
        let s = left_stabilizer_nonneg(&a).unwrap();
        match s.status {
            StabilizerStatus::OnlyIdentity => {
                prop_assert!(s.witness.is_none());
                prop_assert!(s.rows.iter().all(|r| r.forced));
            }
            StabilizerStatus::Nontrivial => {
                let w = s.witness.clone().unwrap();
                prop_assert!(!w.is_identity());
                prop_assert!(is_nonnegative(&ring, &w));
                prop_assert_eq!(&w * &a, a.clone());
            }
        }
        for r in &s.rows {
            if let Some(x) = &r.escape {
                prop_assert!(is_nonnegative(&ring, x));
                prop_assert_eq!(x * &a, a.row(r.row).unwrap());
                prop_assert!(x != &r.particular);
            }
        }
        // invertible matrices are only stabilized by I
        if a.rank().unwrap() == n {
            prop_assert_eq!(s.status, StabilizerStatus::OnlyIdentity);
        }
    }

    /// Brute force over a small grid of candidate rows: any grid point other
    /// than `e_i` solving `x A = row_i(A)` means the row is not forced.
    #[test]
    fn forcing_agrees_with_grid(seed in any::<u64>()) {
        let mut g = rng(seed);
        let ring = q();
        let n = g.gen_range(1..=3);
        let entries = (0..n * n).map(|_| ring.from_int(if g.gen_bool(0.5) { 0 } else { g.gen_range(1..=2) })).collect();
        let a = Matrix::new(&ring, n, n, entries).unwrap();
        let s = left_stabilizer_nonneg(&a).unwrap();
        let grid: Vec<_> = ["0", "1/2", "1", "2"].iter().map(|t| ring.parse(t).unwrap()).collect();
        let points = grid.len().pow(n as u32);
        for row in 1..=n {
            let target = a.row(row).unwrap();
            let unit = Matrix::basis_column(&ring, n, row).unwrap().transpose();
            let escapes = (0..points).any(|mut k| {
                let x: Vec<_> = (0..n).map(|_| { let e = grid[k % grid.len()].clone(); k /= grid.len(); e }).collect();
                let x = Matrix::new(&ring, 1, n, x).unwrap();
                x != unit && &x * &a == target
            });
            if escapes {
                prop_assert!(!s.rows[row - 1].forced, "row {} of {:?}", row, a);
            }
        }
    }
}
