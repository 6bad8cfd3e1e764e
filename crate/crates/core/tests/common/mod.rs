#![allow(dead_code)]

use idemprod_core::matrix::{block_pad, Permutation};
use idemprod_core::ring::{Elem, Ring};
use idemprod_core::Matrix;
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub mod routes;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn q() -> Ring {
    Ring::rationals()
}

pub fn zmod(n: u32) -> Ring {
    Ring::integers_mod(n).unwrap()
}

pub fn qxy() -> Ring {
    Ring::polynomial(&["X", "Y"]).unwrap()
}

pub fn rational(rng: &mut ChaCha8Rng, bound: i64) -> BigRational {
    let num = rng.gen_range(-bound..=bound);
    let den = rng.gen_range(1..=bound.max(1));
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Small random element; polynomials have at most three terms of degree <= 2.
pub fn elem(rng: &mut ChaCha8Rng, ring: &Ring) -> Elem {
    if let Some(m) = ring.small_modulus() {
        return ring.from_int(rng.gen_range(0..m as i64));
    }
    if ring.is_rationals() {
        return ring.from_rational(&rational(rng, 6)).unwrap();
    }
    let vars: Vec<Elem> = (0..ring.variables().len()).map(|k| ring.variable(k).unwrap()).collect();
    let mut acc = ring.zero();
    for _ in 0..rng.gen_range(0..=3) {
        let mut term = ring.from_rational(&rational(rng, 4)).unwrap();
        for _ in 0..rng.gen_range(0..=2) {
            term = ring.mul(&term, vars.choose(rng).unwrap());
        }
        acc = ring.add(&acc, &term);
    }
    acc
}

pub fn nonzero(rng: &mut ChaCha8Rng, ring: &Ring) -> Elem {
    loop {
        let e = elem(rng, ring);
        if !ring.is_zero(&e) {
            return e;
        }
    }
}

pub fn unit(rng: &mut ChaCha8Rng, ring: &Ring) -> Elem {
    loop {
        let e = elem(rng, ring);
        if ring.is_unit(&e) {
            return e;
        }
    }
}

pub fn matrix(rng: &mut ChaCha8Rng, ring: &Ring, rows: usize, cols: usize) -> Matrix {
    let entries = (0..rows * cols).map(|_| elem(rng, ring)).collect();
    Matrix::new(ring, rows, cols, entries).unwrap()
}

/// Random matrix where each entry is zero with probability 1/3.
pub fn sparse(rng: &mut ChaCha8Rng, ring: &Ring, rows: usize, cols: usize) -> Matrix {
    let entries = (0..rows * cols)
        .map(|_| if rng.gen_ratio(1, 3) { ring.zero() } else { elem(rng, ring) })
        .collect();
    Matrix::new(ring, rows, cols, entries).unwrap()
}

pub fn upper_triangular(rng: &mut ChaCha8Rng, ring: &Ring, n: usize) -> Matrix {
    let mut m = sparse(rng, ring, n, n);
    for i in 1..=n {
        for j in 1..i {
            m = m.with_entry(i, j, ring.zero()).unwrap();
        }
    }
    m
}

pub fn permutation(rng: &mut ChaCha8Rng, n: usize) -> Permutation {
    let mut images: Vec<usize> = (1..=n).collect();
    images.shuffle(rng);
    Permutation::from_images(&images).unwrap()
}

/// Product of a random permutation matrix with unit upper and lower
/// triangular matrices and a diagonal of units.
pub fn invertible(rng: &mut ChaCha8Rng, ring: &Ring, n: usize) -> Matrix {
    let mut u = Matrix::identity(ring, n);
    let mut l = Matrix::identity(ring, n);
    for i in 1..=n {
        for j in i + 1..=n {
            u = u.with_entry(i, j, elem(rng, ring)).unwrap();
            l = l.with_entry(j, i, elem(rng, ring)).unwrap();
        }
    }
    let d: Vec<Elem> = (0..n).map(|_| unit(rng, ring)).collect();
    let p = permutation(rng, n).matrix(ring);
    &(&(&p * &l) * &Matrix::diagonal(ring, &d)) * &u
}

pub fn padded(b: &Matrix, r: usize) -> Matrix {
    block_pad(b, r).unwrap()
}

pub fn is_nonnegative(ring: &Ring, m: &Matrix) -> bool {
    m.entries().iter().all(|e| ring.sign(e) != Some(std::cmp::Ordering::Less))
}
