//! Elementary, permutation and quasi matrices.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::{check_index, Matrix};
use crate::error::{Error, Result};
use crate::ring::{Elem, Ring};

/// A permutation of `{1, ..., n}`.
///
/// Its matrix sends `e_k` to `e_σ(k)`, so column `k` has its single 1 in row
/// `σ(k)`, and `P_{σ∘τ} = P_σ P_τ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    // 0-based images
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// From 1-based images `σ(1), ..., σ(n)`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &k in images {
            if k == 0 || k > n || seen[k - 1] {
                return Err(Error::NotAPermutation(format!("{images:?} is not a bijection on 1..={n}")));
            }
            seen[k - 1] = true;
        }
        Ok(Permutation {
            images: images.iter().map(|k| k - 1).collect(),
        })
    }

    pub fn transposition(n: usize, i: usize, j: usize) -> Result<Self> {
        check_index(i, n)?;
        check_index(j, n)?;
        if i == j {
            return Err(Error::EqualIndices);
        }
        let mut p = Self::identity(n);
        p.images.swap(i - 1, j - 1);
        Ok(p)
    }

    /// The cycle `(c_1 c_2 ... c_k)` on `{1..n}`: `c_1 -> c_2 -> ... -> c_1`.
    pub fn cycle(n: usize, cycle: &[usize]) -> Result<Self> {
        let mut images: Vec<usize> = (1..=n).collect();
        for (k, &c) in cycle.iter().enumerate() {
            check_index(c, n)?;
            images[c - 1] = cycle[(k + 1) % cycle.len()];
        }
        Self::from_images(&images)
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// `σ(k)`, 1-based.
    pub fn image(&self, k: usize) -> usize {
        self.images[k - 1] + 1
    }

    /// `σ⁻¹(k)`, 1-based.
    pub fn preimage(&self, k: usize) -> usize {
        self.images.iter().position(|&x| x == k - 1).expect("bijection") + 1
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|k| k + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &v)| k == v)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (k, &v) in self.images.iter().enumerate() {
            inv[v] = k;
        }
        Permutation { images: inv }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Self {
        Permutation {
            images: other.images.iter().map(|&k| self.images[k]).collect(),
        }
    }

    /// Transpositions `(a_1 b_1), ..., (a_m b_m)` with `σ = τ_1 ∘ ... ∘ τ_m`,
    /// hence `P_σ = T_1 ⋯ T_m`.
    pub fn transpositions(&self) -> Vec<(usize, usize)> {
        let mut cur = self.clone();
        let mut out = Vec::new();
        for k in 0..self.len() {
            let target = cur.images[k];
            if target != k {
                out.push((k + 1, target + 1));
                let t = Permutation::transposition(self.len(), k + 1, target + 1).expect("distinct indices");
                cur = t.compose(&cur);
            }
        }
        out
    }

    pub fn matrix(&self, ring: &Ring) -> Matrix {
        let (z, o) = (ring.zero(), ring.one());
        Matrix::from_fn(ring, self.len(), self.len(), |r, c| if self.images[c] == r { o.clone() } else { z.clone() })
    }

    /// Recognizes a permutation matrix.
    pub fn from_matrix(m: &Matrix) -> Option<Self> {
        if !m.is_square() {
            return None;
        }
        let ring = m.ring();
        let n = m.rows();
        let mut images = vec![usize::MAX; n];
        let mut row_used = vec![false; n];
        for c in 0..n {
            for r in 0..n {
                let e = m.at(r, c);
                if ring.is_zero(e) {
                    continue;
                }
                if !ring.is_one(e) || images[c] != usize::MAX || row_used[r] {
                    return None;
                }
                images[c] = r;
                row_used[r] = true;
            }
            if images[c] == usize::MAX {
                return None;
            }
        }
        Some(Permutation { images })
    }
}

/// `I_n + a e_ij` with `i != j` (1-based).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Elementary {
    pub size: usize,
    pub i: usize,
    pub j: usize,
    pub coeff: Elem,
}

impl Elementary {
    pub fn new(size: usize, i: usize, j: usize, coeff: Elem) -> Result<Self> {
        check_index(i, size)?;
        check_index(j, size)?;
        if i == j {
            return Err(Error::EqualIndices);
        }
        Ok(Elementary { size, i, j, coeff })
    }

    pub fn matrix(&self, ring: &Ring) -> Matrix {
        let (z, o) = (ring.zero(), ring.one());
        Matrix::from_fn(ring, self.size, self.size, |r, c| {
            if r == c {
                o.clone()
            } else if r + 1 == self.i && c + 1 == self.j {
                self.coeff.clone()
            } else {
                z.clone()
            }
        })
    }

    pub fn inverse(&self, ring: &Ring) -> Self {
        Elementary {
            coeff: ring.neg(&self.coeff),
            ..self.clone()
        }
    }

    pub fn transpose(&self) -> Self {
        Elementary {
            i: self.j,
            j: self.i,
            ..self.clone()
        }
    }

    /// Recognizes `I + a e_ij` with exactly one nonzero off-diagonal entry.
    /// The identity is not recognized.
    pub fn from_matrix(m: &Matrix) -> Option<Self> {
        if !m.is_square() {
            return None;
        }
        let ring = m.ring();
        let n = m.rows();
        let mut found = None;
        for r in 0..n {
            for c in 0..n {
                let e = m.at(r, c);
                if r == c {
                    if !ring.is_one(e) {
                        return None;
                    }
                } else if !ring.is_zero(e) {
                    if found.is_some() {
                        return None;
                    }
                    found = Some((r + 1, c + 1, e.clone()));
                }
            }
        }
        found.map(|(i, j, coeff)| Elementary { size: n, i, j, coeff })
    }
}

/// `I_n + a e_ij`.
pub fn elementary(ring: &Ring, n: usize, i: usize, j: usize, a: Elem) -> Result<Matrix> {
    if !ring.contains(&a) {
        return Err(Error::RingMismatch);
    }
    Ok(Elementary::new(n, i, j, a)?.matrix(ring))
}

pub fn permutation_matrix(ring: &Ring, perm: &Permutation) -> Matrix {
    perm.matrix(ring)
}

/// Writes the transposition matrix `T_ij` as `E_1 E_2 E_3 D`: three
/// elementary matrices followed by the diagonal matrix with `-1` in position
/// `i` and `1` elsewhere.
pub fn transposition_as_elementary_diagonal(ring: &Ring, n: usize, i: usize, j: usize) -> Result<[Matrix; 4]> {
    let [e1, e2, e3] = transposition_elementaries(ring, n, i, j)?;
    Ok([e1.matrix(ring), e2.matrix(ring), e3.matrix(ring), transposition_sign(ring, n, i)])
}

pub(crate) fn transposition_elementaries(ring: &Ring, n: usize, i: usize, j: usize) -> Result<[Elementary; 3]> {
    Ok([
        Elementary::new(n, i, j, ring.one())?,
        Elementary::new(n, j, i, ring.from_int(-1))?,
        Elementary::new(n, i, j, ring.one())?,
    ])
}

pub(crate) fn transposition_sign(ring: &Ring, n: usize, i: usize) -> Matrix {
    let diag: Vec<Elem> = (1..=n).map(|k| if k == i { ring.from_int(-1) } else { ring.one() }).collect();
    Matrix::diagonal(ring, &diag)
}

/// `[[B, 0], [0, 0]]` of size `n + r`.
pub fn block_pad(b: &Matrix, r: usize) -> Result<Matrix> {
    let n = b.size()?;
    if r == 0 {
        return Err(Error::ZeroPadding);
    }
    let ring = b.ring();
    Matrix::from_blocks(b, &Matrix::zero(ring, n, r), &Matrix::zero(ring, r, n), &Matrix::zero(ring, r, r))
}

/// Recognition witness for quasi permutation and quasi elementary matrices.
///
/// `Left` variants are `(1 - e_ii) C`, `Right` variants are `C (1 - e_ii)`,
/// where `C` is the core permutation or elementary matrix and `i` the zeroed
/// index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QuasiKind {
    PermutationLeft { zeroed: usize, perm: Permutation },
    PermutationRight { zeroed: usize, perm: Permutation },
    ElementaryLeft { zeroed: usize, core: Elementary },
    ElementaryRight { zeroed: usize, core: Elementary },
    None,
}

impl QuasiKind {
    pub fn is_none(&self) -> bool {
        matches!(self, QuasiKind::None)
    }

    pub fn zeroed(&self) -> Option<usize> {
        match self {
            QuasiKind::PermutationLeft { zeroed, .. }
            | QuasiKind::PermutationRight { zeroed, .. }
            | QuasiKind::ElementaryLeft { zeroed, .. }
            | QuasiKind::ElementaryRight { zeroed, .. } => Some(*zeroed),
            QuasiKind::None => None,
        }
    }

    pub fn core(&self, ring: &Ring) -> Option<Matrix> {
        match self {
            QuasiKind::PermutationLeft { perm, .. } | QuasiKind::PermutationRight { perm, .. } => Some(perm.matrix(ring)),
            QuasiKind::ElementaryLeft { core, .. } | QuasiKind::ElementaryRight { core, .. } => Some(core.matrix(ring)),
            QuasiKind::None => None,
        }
    }

    /// Rebuilds the classified matrix from the witness.
    pub fn reconstruct(&self, ring: &Ring) -> Option<Matrix> {
        let core = self.core(ring)?;
        let i = self.zeroed()?;
        match self {
            QuasiKind::PermutationLeft { .. } | QuasiKind::ElementaryLeft { .. } => core.with_row_zeroed(i).ok(),
            _ => core.with_col_zeroed(i).ok(),
        }
    }
}

/// Classifies a square matrix, trying in order: quasi permutation (left,
/// right), quasi elementary (left, right).
pub fn classify_quasi(a: &Matrix) -> QuasiKind {
    match classify_quasi_permutation(a) {
        QuasiKind::None => classify_quasi_elementary(a),
        k => k,
    }
}

pub fn classify_quasi_permutation(a: &Matrix) -> QuasiKind {
    if !a.is_square() {
        return QuasiKind::None;
    }
    if let Some((zeroed, perm)) = permutation_left(a) {
        return QuasiKind::PermutationLeft { zeroed, perm };
    }
    if let Some((zeroed, perm)) = permutation_left(&a.transpose()) {
        // A^T = (1 - e_ii) P^T  <=>  A = P (1 - e_ii)
        return QuasiKind::PermutationRight {
            zeroed,
            perm: perm.inverse(),
        };
    }
    QuasiKind::None
}

pub fn classify_quasi_elementary(a: &Matrix) -> QuasiKind {
    if !a.is_square() || a.rows() < 2 {
        return QuasiKind::None;
    }
    if let Some((zeroed, core)) = elementary_left(a) {
        return QuasiKind::ElementaryLeft { zeroed, core };
    }
    if let Some((zeroed, core)) = elementary_left(&a.transpose()) {
        return QuasiKind::ElementaryRight {
            zeroed,
            core: core.transpose(),
        };
    }
    QuasiKind::None
}

fn permutation_left(a: &Matrix) -> Option<(usize, Permutation)> {
    let zero_rows = a.zero_rows();
    let [i] = zero_rows[..] else {
        return None;
    };
    let n = a.rows();
    let missing = (1..=n).find(|&c| a.col_is_zero(c))?;
    let p = a.with_entry(i, missing, a.ring().one()).ok()?;
    Permutation::from_matrix(&p).map(|perm| (i, perm))
}

fn elementary_left(a: &Matrix) -> Option<(usize, Elementary)> {
    let n = a.rows();
    let ring = a.ring();
    for i in a.zero_rows() {
        let restored = a.with_entry(i, i, ring.one()).ok()?;
        if restored.is_identity() {
            let j = if i == 1 { 2 } else { 1 };
            return Some((i, Elementary { size: n, i, j, coeff: ring.zero() }));
        }
        if let Some(core) = Elementary::from_matrix(&restored) {
            return Some((i, core));
        }
    }
    None
}
