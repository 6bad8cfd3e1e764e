//! Brute-force ground truth over small matrix rings `M_n(Z/m)`.

use alloc::boxed::Box;
use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use hashbrown::HashSet;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::ring::{Elem, Ring};

pub const DEFAULT_BUDGET: u64 = 1 << 20;

/// Row-major residues of a matrix.
pub type Code = Box<[u32]>;

/// `M_n(Z/m)` as an enumerable set of at most `budget` matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteMatrixSpace {
    ring: Ring,
    modulus: u32,
    n: usize,
    cardinality: u128,
}

fn small_modulus(ring: &Ring) -> Result<u32> {
    ring.modulus()
        .and_then(|m| m.to_u32())
        .filter(|&m| m <= 1 << 16)
        .ok_or(Error::UnsupportedRing("exhaustive scans need Z/m with a small modulus"))
}

fn power(base: u32, exp: usize, budget: u64) -> Result<u128> {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base as u128);
        if acc > budget as u128 {
            return Err(Error::BudgetExceeded {
                cardinality: acc,
                budget,
            });
        }
    }
    Ok(acc)
}

impl FiniteMatrixSpace {
    pub fn new(ring: &Ring, n: usize) -> Result<Self> {
        Self::with_budget(ring, n, DEFAULT_BUDGET)
    }

    pub fn with_budget(ring: &Ring, n: usize, budget: u64) -> Result<Self> {
        let modulus = small_modulus(ring)?;
        if n == 0 {
            return Err(Error::DimensionMismatch("matrix size must be positive".into()));
        }
        let cardinality = power(modulus, n * n, budget).map_err(|_| Error::BudgetExceeded {
            cardinality: (modulus as u128).checked_pow((n * n) as u32).unwrap_or(u128::MAX),
            budget,
        })?;
        Ok(FiniteMatrixSpace {
            ring: ring.clone(),
            modulus,
            n,
            cardinality,
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn cardinality(&self) -> u128 {
        self.cardinality
    }

    pub fn code(&self, m: &Matrix) -> Result<Code> {
        if m.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        if m.rows() != self.n || m.cols() != self.n {
            return Err(Error::DimensionMismatch("matrix is not in this space".into()));
        }
        Ok(m.entries()
            .iter()
            .map(|e| match e {
                Elem::Residue(r) => r.to_u32().expect("residue below modulus"),
                _ => unreachable!("ring checked"),
            })
            .collect())
    }

    pub fn matrix(&self, code: &[u32]) -> Matrix {
        let entries = code.iter().map(|&k| self.ring.from_int(k as i64)).collect();
        Matrix::new(&self.ring, self.n, self.n, entries).expect("code length n^2")
    }

    pub fn zero_code(&self) -> Code {
        vec![0; self.n * self.n].into_boxed_slice()
    }

    pub fn identity_code(&self) -> Code {
        let mut c = self.zero_code();
        for k in 0..self.n {
            c[k * self.n + k] = 1 % self.modulus;
        }
        c
    }

    pub fn mul(&self, a: &[u32], b: &[u32]) -> Code {
        let (n, m) = (self.n, self.modulus as u64);
        let mut out = vec![0u32; n * n];
        for r in 0..n {
            for c in 0..n {
                let mut acc = 0u64;
                for k in 0..n {
                    acc += a[r * n + k] as u64 * b[k * n + c] as u64;
                }
                out[r * n + c] = (acc % m) as u32;
            }
        }
        out.into_boxed_slice()
    }

    pub fn add(&self, a: &[u32], b: &[u32]) -> Code {
        let m = self.modulus as u64;
        a.iter().zip(b).map(|(&x, &y)| ((x as u64 + y as u64) % m) as u32).collect()
    }

    /// All codes in lexicographic order of their row-major entries.
    pub fn codes(&self) -> impl Iterator<Item = Code> + '_ {
        let len = self.n * self.n;
        let mut next = Some(vec![0u32; len]);
        core::iter::from_fn(move || {
            let cur = next.take()?;
            let mut succ = cur.clone();
            let mut k = len;
            loop {
                if k == 0 {
                    break;
                }
                k -= 1;
                succ[k] += 1;
                if succ[k] < self.modulus {
                    next = Some(succ);
                    break;
                }
                succ[k] = 0;
            }
            Some(cur.into_boxed_slice())
        })
    }

    /// Matrix units `e_ij`.
    pub fn units(&self) -> Vec<Code> {
        let mut out = Vec::with_capacity(self.n * self.n);
        for k in 0..self.n * self.n {
            let mut c = self.zero_code();
            c[k] = 1 % self.modulus;
            out.push(c);
        }
        out
    }
}

/// A deduplicated, insertion-ordered set of matrices in one space.
#[derive(Clone, Debug)]
pub struct MatrixSet {
    space: FiniteMatrixSpace,
    order: Vec<Code>,
    index: HashSet<Code>,
}

impl MatrixSet {
    pub fn new(space: &FiniteMatrixSpace) -> Self {
        MatrixSet {
            space: space.clone(),
            order: Vec::new(),
            index: HashSet::new(),
        }
    }

    pub fn space(&self) -> &FiniteMatrixSpace {
        &self.space
    }

    /// Returns whether the code was new.
    pub fn insert(&mut self, code: Code) -> bool {
        if self.index.contains(&code) {
            return false;
        }
        self.index.insert(code.clone());
        self.order.push(code);
        true
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn contains_code(&self, code: &[u32]) -> bool {
        self.index.contains(code)
    }

    pub fn contains(&self, m: &Matrix) -> bool {
        self.space.code(m).is_ok_and(|c| self.contains_code(&c))
    }

    pub fn codes(&self) -> &[Code] {
        &self.order
    }

    pub fn matrices(&self) -> Vec<Matrix> {
        self.order.iter().map(|c| self.space.matrix(c)).collect()
    }
}

impl PartialEq for MatrixSet {
    fn eq(&self, other: &Self) -> bool {
        self.space == other.space && self.index == other.index
    }
}

impl Eq for MatrixSet {}

/// `{E : E² = E}` by exhaustive scan.
pub fn enumerate_idempotents(space: &FiniteMatrixSpace) -> MatrixSet {
    let mut set = MatrixSet::new(space);
    for c in space.codes() {
        if space.mul(&c, &c) == c {
            set.insert(c);
        }
    }
    set
}

/// The identity together with every finite product of idempotents, by
/// breadth-first right multiplication.
pub fn product_closure(space: &FiniteMatrixSpace) -> MatrixSet {
    let idempotents = enumerate_idempotents(space);
    close_under_right_products(space, idempotents.codes(), idempotents.codes())
}

/// Smallest set containing `I` and `seeds`, closed under right
/// multiplication by `generators`.
pub fn close_under_right_products(space: &FiniteMatrixSpace, seeds: &[Code], generators: &[Code]) -> MatrixSet {
    let mut set = MatrixSet::new(space);
    let mut queue = VecDeque::new();
    for c in core::iter::once(space.identity_code()).chain(seeds.iter().cloned()) {
        if set.insert(c.clone()) {
            queue.push_back(c);
        }
    }
    while let Some(x) = queue.pop_front() {
        for g in generators {
            let y = space.mul(&x, g);
            if set.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    set
}

/// Whether `A` has a nonzero left and a nonzero right annihilator in
/// `M_n(R)`.
///
/// Over `Z/m` this scans all vectors when `m^n` is within the default budget
/// and otherwise uses the determinant criterion; over the rationals it is a
/// rank test.
pub fn annihilators_nonzero(a: &Matrix) -> Result<(bool, bool)> {
    let ring = a.ring();
    let n = a.size()?;
    if ring.is_rationals() {
        let singular = a.rank()? < n;
        return Ok((singular, singular));
    }
    if ring.modulus().is_none() {
        return Err(Error::UnsupportedRing("annihilators are computed over Q and Z/m only"));
    }
    match annihilators_by_scan(a, DEFAULT_BUDGET) {
        Err(Error::BudgetExceeded { .. }) | Err(Error::UnsupportedRing(_)) => annihilators_by_determinant(a),
        r => r,
    }
}

/// Exhaustive search for nonzero `x` with `xA = 0` and `Ax = 0`. A nonzero
/// matrix annihilator exists iff a nonzero vector one does.
pub fn annihilators_by_scan(a: &Matrix, budget: u64) -> Result<(bool, bool)> {
    let n = a.size()?;
    let m = small_modulus(a.ring())?;
    power(m, n, budget)?;
    let entries: Vec<u64> = a
        .entries()
        .iter()
        .map(|e| match e {
            Elem::Residue(r) => r.to_u64().expect("residue below modulus"),
            _ => unreachable!("ring checked"),
        })
        .collect();
    let m64 = m as u64;
    let (mut left, mut right) = (false, false);
    let mut x = vec![0u64; n];
    loop {
        // advance to the next nonzero vector
        let mut k = n;
        loop {
            if k == 0 {
                return Ok((left, right));
            }
            k -= 1;
            x[k] += 1;
            if x[k] < m64 {
                break;
            }
            x[k] = 0;
        }
        if !left && (0..n).all(|c| (0..n).map(|r| x[r] * entries[r * n + c]).sum::<u64>() % m64 == 0) {
            left = true;
        }
        if !right && (0..n).all(|r| (0..n).map(|c| entries[r * n + c] * x[c]).sum::<u64>() % m64 == 0) {
            right = true;
        }
        if left && right {
            return Ok((true, true));
        }
    }
}

/// Determinant criterion for finite commutative rings: `A` is a zero divisor
/// on either side iff `det A` is not a unit.
pub fn annihilators_by_determinant(a: &Matrix) -> Result<(bool, bool)> {
    let ring = a.ring();
    if !ring.is_finite() {
        return Err(Error::UnsupportedRing("determinant criterion needs a finite ring"));
    }
    let zd = !ring.is_unit(&a.determinant()?);
    Ok((zd, zd))
}

/// Which ideals of `S = M_N(Z/m)` are all of `S`, for the annihilator
/// ideals of `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmearaReport {
    /// `lann(A) · S = S`.
    pub left_ideal_full: bool,
    /// `S · rann(A) = S`.
    pub right_ideal_full: bool,
    /// `S (I - A) S = S`.
    pub unit_ideal: bool,
    /// The three ideals coincide as sets.
    pub equal: bool,
    pub lann_size: usize,
    pub rann_size: usize,
    pub left_ideal_size: usize,
    pub right_ideal_size: usize,
    pub unit_ideal_size: usize,
    pub space_size: u128,
}

impl OmearaReport {
    pub fn triple(&self) -> (bool, bool, bool) {
        (self.left_ideal_full, self.right_ideal_full, self.unit_ideal)
    }
}

/// The annihilator ideal comparison for `A = block_pad(B, r)`.
pub fn check_omeara(b: &Matrix, r: usize) -> Result<OmearaReport> {
    omeara_equalities(&crate::matrix::block_pad(b, r)?)
}

/// The annihilator ideal comparison for an arbitrary square `A`.
pub fn omeara_equalities(a: &Matrix) -> Result<OmearaReport> {
    let space = FiniteMatrixSpace::new(a.ring(), a.size()?)?;
    let ac = space.code(a)?;
    let zero = space.zero_code();
    let mut lann = Vec::new();
    let mut rann = Vec::new();
    for x in space.codes() {
        if space.mul(&x, &ac) == zero {
            lann.push(x.clone());
        }
        if space.mul(&ac, &x) == zero {
            rann.push(x);
        }
    }
    let i_minus_a = space.add(&space.identity_code(), &negate(&space, &ac));
    let left = ideal_closure(&space, &lann, Side::Right);
    let right = ideal_closure(&space, &rann, Side::Left);
    let unit = ideal_closure(&space, &[i_minus_a], Side::Both);
    let full = |s: &MatrixSet| s.len() as u128 == space.cardinality();
    Ok(OmearaReport {
        left_ideal_full: full(&left),
        right_ideal_full: full(&right),
        unit_ideal: full(&unit),
        equal: left == right && right == unit,
        lann_size: lann.len(),
        rann_size: rann.len(),
        left_ideal_size: left.len(),
        right_ideal_size: right.len(),
        unit_ideal_size: unit.len(),
        space_size: space.cardinality(),
    })
}

fn negate(space: &FiniteMatrixSpace, a: &[u32]) -> Code {
    let m = space.modulus();
    a.iter().map(|&x| (m - x) % m).collect()
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Side {
    Left,
    Right,
    Both,
}

/// Additive subgroup generated by `generators`, closed under multiplication
/// by matrix units on the given side(s).
fn ideal_closure(space: &FiniteMatrixSpace, generators: &[Code], side: Side) -> MatrixSet {
    let mut set = MatrixSet::new(space);
    let mut queue = VecDeque::new();
    set.insert(space.zero_code());
    let units = space.units();
    let add_generator = |set: &mut MatrixSet, queue: &mut VecDeque<Code>, g: Code| {
        if set.contains_code(&g) {
            return;
        }
        let base: Vec<Code> = set.codes().to_vec();
        let mut c = g.clone();
        while !set.contains_code(&c) {
            for h in &base {
                let x = space.add(h, &c);
                if set.insert(x.clone()) {
                    queue.push_back(x);
                }
            }
            c = space.add(&c, &g);
        }
    };
    for g in generators {
        add_generator(&mut set, &mut queue, g.clone());
    }
    while let Some(x) = queue.pop_front() {
        for u in &units {
            if side != Side::Left {
                add_generator(&mut set, &mut queue, space.mul(&x, u));
            }
            if side != Side::Right {
                add_generator(&mut set, &mut queue, space.mul(u, &x));
            }
        }
    }
    set
}
