//! Total nonnegativity and nonnegative left stabilizers over the rationals.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::ring::{Elem, Ring, RingElement};

fn require_rationals(a: &Matrix) -> Result<()> {
    if !a.ring().is_rationals() {
        return Err(Error::UnsupportedRing("sign conditions need the rationals"));
    }
    Ok(())
}

fn is_negative(ring: &Ring, e: &Elem) -> bool {
    ring.sign(e) == Some(Ordering::Less)
}

/// Calls `f` on every `k`-subset of `0..n` in lexicographic order until it
/// returns `false`.
fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(&[usize]) -> bool) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if !f(&idx) {
            return;
        }
        let Some(p) = (0..k).rev().find(|&p| idx[p] != p + n - k) else {
            return;
        };
        idx[p] += 1;
        for q in p + 1..k {
            idx[q] = idx[q - 1] + 1;
        }
    }
}

/// A minor given by 1-based row and column indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Minor {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub value: Elem,
}

/// The first negative minor, scanning orders `1, 2, ...` and index sets
/// lexicographically.
pub fn first_negative_minor(a: &Matrix) -> Result<Option<Minor>> {
    require_rationals(a)?;
    let ring = a.ring();
    for k in 1..=a.rows().min(a.cols()) {
        let mut found = None;
        for_each_subset(a.rows(), k, |rows| {
            let rows: Vec<usize> = rows.iter().map(|r| r + 1).collect();
            for_each_subset(a.cols(), k, |cols| {
                let cols: Vec<usize> = cols.iter().map(|c| c + 1).collect();
                let value = a.submatrix(&rows, &cols).expect("indices in range").determinant_cofactor();
                if is_negative(ring, &value) {
                    found = Some(Minor {
                        rows: rows.clone(),
                        cols,
                        value,
                    });
                }
                found.is_none()
            });
            found.is_none()
        });
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}

/// True iff every minor of every order is nonnegative.
pub fn is_totally_nonnegative(a: &Matrix) -> Result<bool> {
    Ok(first_negative_minor(a)?.is_none())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StabilizerStatus {
    OnlyIdentity,
    Nontrivial,
}

impl StabilizerStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            StabilizerStatus::OnlyIdentity => "only-identity",
            StabilizerStatus::Nontrivial => "nontrivial",
        }
    }
}

/// The nonnegative solutions `x` of `x A = row_i(A)`: the affine set
/// `e_i + span(directions)` meets the orthant in `e_i` alone iff `forced`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowSolution {
    /// 1-based row index.
    pub row: usize,
    pub particular: Matrix,
    /// Basis of the left null space of `A`, as row vectors.
    pub directions: Vec<Matrix>,
    pub forced: bool,
    /// A nonnegative solution other than `e_i`, when one exists.
    pub escape: Option<Matrix>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilizerResult {
    pub status: StabilizerStatus,
    /// A nonnegative `E ≠ I` with `E A = A`, when one exists.
    pub witness: Option<Matrix>,
    pub rows: Vec<RowSolution>,
}

impl StabilizerResult {
    pub fn forced_rows(&self) -> Vec<usize> {
        self.rows.iter().filter(|r| r.forced).map(|r| r.row).collect()
    }
}

/// Describes `{E >= 0 : E A = A}` row by row.
///
/// Row `i` of `E` ranges over `e_i + L` with `L` the left null space of `A`.
/// It is forced to `e_i` iff no nonzero `y ∈ L` has `y_j >= 0` for all
/// `j ≠ i`. That cone is decided exactly: a line in it means `e_i ∈ L`;
/// otherwise it is pointed and nonzero iff one of its candidate extreme
/// rays, cut out by `dim L - 1` independent tight constraints, satisfies
/// every constraint.
pub fn left_stabilizer_nonneg(a: &Matrix) -> Result<StabilizerResult> {
    require_rationals(a)?;
    let ring = a.ring();
    if a.entries().iter().any(|e| is_negative(ring, e)) {
        return Err(Error::NegativeEntry);
    }
    let n = a.rows();
    let directions = a.left_kernel_basis()?;
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        let escape = escape_direction(ring, &directions, i)?.map(|y| {
            // e_i + ε y with 1 + ε y_i >= 0
            let yi = y.at(0, i).clone();
            let eps = if is_negative(ring, &ring.add(&ring.one(), &yi)) {
                ring.inv(&ring.neg(&yi)).expect("nonzero")
            } else {
                ring.one()
            };
            let e_i = unit_row(ring, n, i);
            e_i.try_add(&y.scale(&eps)).expect("same shape")
        });
        rows.push(RowSolution {
            row: i + 1,
            particular: unit_row(ring, n, i),
            directions: directions.clone(),
            forced: escape.is_none(),
            escape,
        });
    }
    let nontrivial = rows.iter().any(|r| !r.forced);
    let witness = nontrivial.then(|| {
        let mut w = Matrix::identity(ring, n);
        for r in rows.iter() {
            if let Some(x) = &r.escape {
                for c in 0..n {
                    w = w.with_entry(r.row, c + 1, x.at(0, c).clone()).expect("in range");
                }
            }
        }
        w
    });
    Ok(StabilizerResult {
        status: if nontrivial {
            StabilizerStatus::Nontrivial
        } else {
            StabilizerStatus::OnlyIdentity
        },
        witness,
        rows,
    })
}

fn unit_row(ring: &Ring, n: usize, i: usize) -> Matrix {
    Matrix::basis_column(ring, n, i + 1).expect("in range").transpose()
}

/// A nonzero `y` in the span of `basis` with `y_j >= 0` for `j ≠ i`.
fn escape_direction(ring: &Ring, basis: &[Matrix], i: usize) -> Result<Option<Matrix>> {
    let d = basis.len();
    if d == 0 {
        return Ok(None);
    }
    let n = basis[0].cols();
    let others: Vec<usize> = (0..n).filter(|&j| j != i).collect();
    // d x n matrix of basis rows
    let nb = Matrix::from_rows(ring, basis.iter().map(|b| b.row_vecs().remove(0)).collect())?;
    let combine = |t: &Matrix| t.try_mul(&nb).expect("shapes");
    let admissible = |y: &Matrix| others.iter().all(|&j| !is_negative(ring, y.at(0, j))) && !y.is_zero();

    if others.is_empty() {
        return Ok(Some(-&basis[0]));
    }
    let constraints = nb.submatrix(&(1..=d).collect::<Vec<_>>(), &others.iter().map(|j| j + 1).collect::<Vec<_>>())?;
    // lineality: t with t · constraints = 0, so y is a multiple of e_i
    if let Some(t) = constraints.left_kernel_basis()?.into_iter().next() {
        let y = combine(&t);
        let y = if is_negative(ring, y.at(0, i)) { y } else { -&y };
        return Ok(Some(y));
    }
    let mut found = None;
    for_each_subset(others.len(), d - 1, |tight| {
        let t = if tight.is_empty() {
            Matrix::from_rows(ring, vec![vec![ring.one()]]).expect("1x1")
        } else {
            let cols: Vec<usize> = tight.iter().map(|&k| k + 1).collect();
            let sub = constraints.submatrix(&(1..=d).collect::<Vec<_>>(), &cols).expect("in range");
            let kernel = sub.left_kernel_basis().expect("field");
            if kernel.len() != 1 {
                return true;
            }
            kernel.into_iter().next().expect("one vector")
        };
        for cand in [t.clone(), -&t] {
            let y = combine(&cand);
            if admissible(&y) {
                found = Some(y);
                return false;
            }
        }
        true
    });
    Ok(found)
}

/// The 4 × 4 singular matrix
/// `[[α, α, 0, 0], [0, 0, 0, α], [α, 0, 0, α], [0, α, 0, 0]]`.
pub fn counterexample_matrix(alpha: &RingElement) -> Result<Matrix> {
    let ring = alpha.ring();
    if !ring.is_rationals() {
        return Err(Error::UnsupportedRing("the parameter must be rational"));
    }
    if ring.sign(alpha.value()) != Some(Ordering::Greater) {
        return Err(Error::Precondition("the parameter must be positive".into()));
    }
    let (a, z) = (alpha.value().clone(), ring.zero());
    Matrix::from_rows(
        ring,
        vec![
            vec![a.clone(), a.clone(), z.clone(), z.clone()],
            vec![z.clone(), z.clone(), z.clone(), a.clone()],
            vec![a.clone(), z.clone(), z.clone(), a.clone()],
            vec![z.clone(), a, z.clone(), z],
        ],
    )
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CounterexampleReport {
    pub matrix: Matrix,
    pub totally_nonnegative: bool,
    pub first_negative_minor: Option<Minor>,
    pub determinant: Elem,
    pub stabilizer: StabilizerResult,
}

impl CounterexampleReport {
    /// All three conditions: total nonnegativity, singularity, and a
    /// stabilizer reduced to the identity.
    pub fn verified(&self) -> bool {
        self.totally_nonnegative
            && self.matrix.ring().is_zero(&self.determinant)
            && self.stabilizer.status == StabilizerStatus::OnlyIdentity
    }
}

pub fn counterexample_report(alpha: &RingElement) -> Result<CounterexampleReport> {
    let matrix = counterexample_matrix(alpha)?;
    let first_negative_minor = first_negative_minor(&matrix)?;
    Ok(CounterexampleReport {
        totally_nonnegative: first_negative_minor.is_none(),
        first_negative_minor,
        determinant: matrix.determinant()?,
        stabilizer: left_stabilizer_nonneg(&matrix)?,
        matrix,
    })
}

pub fn verify_counterexample(alpha: &RingElement) -> Result<bool> {
    Ok(counterexample_report(alpha)?.verified())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Ring {
        Ring::rationals()
    }

    #[test]
    fn subsets_in_order() {
        let mut seen = Vec::new();
        for_each_subset(4, 2, |s| {
            seen.push(s.to_vec());
            true
        });
        assert_eq!(seen.len(), 6);
        assert_eq!(seen[0], vec![0, 1]);
        assert_eq!(seen[5], vec![2, 3]);
        let mut empty = 0;
        for_each_subset(3, 0, |_| {
            empty += 1;
            true
        });
        assert_eq!(empty, 1);
    }

    #[test]
    fn tnn_examples() {
        let q = q();
        assert!(is_totally_nonnegative(&Matrix::identity(&q, 4)).unwrap());
        let m = Matrix::from_ints(&q, &[[1, 2], [3, 4]]).unwrap();
        let minor = first_negative_minor(&m).unwrap().unwrap();
        assert_eq!((minor.rows, minor.cols, minor.value), (vec![1, 2], vec![1, 2], q.from_int(-2)));
        let z3 = Ring::integers_mod(3u32).unwrap();
        assert!(is_totally_nonnegative(&Matrix::identity(&z3, 2)).is_err());
    }

    #[test]
    fn stabilizer_examples() {
        let q = q();
        let s = left_stabilizer_nonneg(&Matrix::identity(&q, 3)).unwrap();
        assert_eq!(s.status, StabilizerStatus::OnlyIdentity);
        assert_eq!(s.forced_rows(), vec![1, 2, 3]);

        let s = left_stabilizer_nonneg(&Matrix::zero(&q, 3, 3)).unwrap();
        assert_eq!(s.status, StabilizerStatus::Nontrivial);
        assert!(s.witness.unwrap().is_zero());

        let neg = Matrix::from_ints(&q, &[[1, -1], [0, 1]]).unwrap();
        assert_eq!(left_stabilizer_nonneg(&neg), Err(Error::NegativeEntry));
    }

    #[test]
    fn witness_stabilizes() {
        let q = q();
        // rows 1 and 2 equal, so E = [[0, 1, 0], ...] style mixing is allowed
        let a = Matrix::from_ints(&q, &[[1, 2, 0], [1, 2, 0], [0, 0, 3]]).unwrap();
        let s = left_stabilizer_nonneg(&a).unwrap();
        assert_eq!(s.status, StabilizerStatus::Nontrivial);
        assert_eq!(s.forced_rows(), vec![3]);
        let w = s.witness.unwrap();
        assert_eq!(&w * &a, a);
        assert!(!w.is_identity());
        assert!(w.entries().iter().all(|e| !is_negative(&q, e)));
    }

    #[test]
    fn counterexample_rows_are_forced() {
        let q = q();
        let alpha = RingElement::new(q.clone(), q.one()).unwrap();
        let a = counterexample_matrix(&alpha).unwrap();
        let s = left_stabilizer_nonneg(&a).unwrap();
        assert_eq!(s.status, StabilizerStatus::OnlyIdentity);
        for r in &s.rows {
            assert!(r.forced, "row {}", r.row);
        }
        assert!(a.determinant().unwrap() == q.zero());
    }

    #[test]
    fn parameter_must_be_positive() {
        let q = q();
        let zero = RingElement::new(q.clone(), q.zero()).unwrap();
        assert!(verify_counterexample(&zero).is_err());
        let neg = RingElement::new(q.clone(), q.from_int(-2)).unwrap();
        assert!(counterexample_matrix(&neg).is_err());
    }
}
