//! Exact commutative coefficient rings.
//!
//! A [`Ring`] is a cheap, shareable handle on a [`RingDescriptor`]. Raw values
//! are stored as [`Elem`]s, which only make sense together with the ring that
//! produced them; [`RingElement`] pairs the two for checked arithmetic.

mod poly;
mod text;

use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;
use core::hash::{Hash, Hasher};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub use poly::{Monomial, Poly};

use crate::error::{Error, Result};

/// Which coefficient ring a matrix lives over.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RingDescriptor {
    Rationals,
    IntegersMod { modulus: BigUint },
    Polynomial { variables: Vec<String> },
}

/// Shared handle on a validated [`RingDescriptor`].
#[derive(Clone, Debug)]
pub struct Ring(Arc<RingDescriptor>);

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || *self.0 == *other.0
    }
}

impl Eq for Ring {}

impl Hash for Ring {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.hash(state)
    }
}

/// Raw canonical value of a ring element.
///
/// Rationals are reduced with a positive denominator, residues lie in
/// `[0, n)`, and polynomials carry no zero coefficients, so structural
/// equality is ring equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Elem {
    Rational(BigRational),
    Residue(BigUint),
    Poly(Poly),
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Ring {
    pub fn new(descriptor: RingDescriptor) -> Result<Self> {
        match &descriptor {
            RingDescriptor::Rationals => {}
            RingDescriptor::IntegersMod { modulus } => {
                if *modulus < BigUint::from(2u32) {
                    return Err(Error::InvalidRing("modulus must be at least 2".into()));
                }
            }
            RingDescriptor::Polynomial { variables } => {
                if variables.is_empty() {
                    return Err(Error::InvalidRing("polynomial ring needs a variable".into()));
                }
                for (k, v) in variables.iter().enumerate() {
                    if !is_identifier(v) || v == "mod" {
                        return Err(Error::InvalidRing(alloc::format!("bad variable name {v:?}")));
                    }
                    if variables[..k].contains(v) {
                        return Err(Error::InvalidRing(alloc::format!("duplicate variable {v:?}")));
                    }
                }
            }
        }
        Ok(Ring(Arc::new(descriptor)))
    }

    pub fn rationals() -> Self {
        Ring(Arc::new(RingDescriptor::Rationals))
    }

    pub fn integers_mod(modulus: impl Into<BigUint>) -> Result<Self> {
        Self::new(RingDescriptor::IntegersMod {
            modulus: modulus.into(),
        })
    }

    pub fn polynomial<S: AsRef<str>>(variables: &[S]) -> Result<Self> {
        Self::new(RingDescriptor::Polynomial {
            variables: variables.iter().map(|v| v.as_ref().to_string()).collect(),
        })
    }

    pub fn descriptor(&self) -> &RingDescriptor {
        &self.0
    }

    pub fn modulus(&self) -> Option<&BigUint> {
        match &*self.0 {
            RingDescriptor::IntegersMod { modulus } => Some(modulus),
            _ => None,
        }
    }

    /// Modulus as a machine word, when the ring is `Z/n` and `n` fits.
    pub fn small_modulus(&self) -> Option<u64> {
        self.modulus().and_then(|m| m.to_u64())
    }

    pub fn variables(&self) -> &[String] {
        match &*self.0 {
            RingDescriptor::Polynomial { variables } => variables,
            _ => &[],
        }
    }

    pub fn is_rationals(&self) -> bool {
        matches!(&*self.0, RingDescriptor::Rationals)
    }

    pub fn is_field(&self) -> bool {
        match &*self.0 {
            RingDescriptor::Rationals => true,
            RingDescriptor::IntegersMod { modulus } => is_prime(modulus),
            RingDescriptor::Polynomial { .. } => false,
        }
    }

    pub fn is_integral_domain(&self) -> bool {
        match &*self.0 {
            RingDescriptor::IntegersMod { modulus } => is_prime(modulus),
            _ => true,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(&*self.0, RingDescriptor::IntegersMod { .. })
    }

    fn nvars(&self) -> usize {
        self.variables().len()
    }

    pub fn zero(&self) -> Elem {
        match &*self.0 {
            RingDescriptor::Rationals => Elem::Rational(BigRational::zero()),
            RingDescriptor::IntegersMod { .. } => Elem::Residue(BigUint::zero()),
            RingDescriptor::Polynomial { variables } => Elem::Poly(Poly::zero(variables.len())),
        }
    }

    pub fn one(&self) -> Elem {
        self.from_int(1)
    }

    pub fn from_int(&self, n: i64) -> Elem {
        self.from_bigint(&BigInt::from(n))
    }

    pub fn from_bigint(&self, n: &BigInt) -> Elem {
        match &*self.0 {
            RingDescriptor::Rationals => Elem::Rational(BigRational::from_integer(n.clone())),
            RingDescriptor::IntegersMod { modulus } => Elem::Residue(reduce(n, modulus)),
            RingDescriptor::Polynomial { variables } => Elem::Poly(Poly::constant(
                variables.len(),
                BigRational::from_integer(n.clone()),
            )),
        }
    }

    /// Embeds a rational. Fails in `Z/n` when the denominator is not a unit.
    pub fn from_rational(&self, q: &BigRational) -> Result<Elem> {
        match &*self.0 {
            RingDescriptor::Rationals => Ok(Elem::Rational(q.clone())),
            RingDescriptor::IntegersMod { .. } => {
                let num = self.from_bigint(q.numer());
                let den = self.inv(&self.from_bigint(q.denom())).ok_or(Error::NotAUnit)?;
                Ok(self.mul(&num, &den))
            }
            RingDescriptor::Polynomial { variables } => {
                Ok(Elem::Poly(Poly::constant(variables.len(), q.clone())))
            }
        }
    }

    /// The `index`-th variable (0-based) of a polynomial ring.
    pub fn variable(&self, index: usize) -> Option<Elem> {
        (index < self.nvars()).then(|| {
            Elem::Poly(Poly::monomial(
                self.nvars(),
                Monomial::var(self.nvars(), index, 1),
                BigRational::one(),
            ))
        })
    }

    /// Whether `e` is a canonical value of this ring.
    pub fn contains(&self, e: &Elem) -> bool {
        match (&*self.0, e) {
            (RingDescriptor::Rationals, Elem::Rational(q)) => q.denom().is_positive() && q.numer().gcd(q.denom()).is_one(),
            (RingDescriptor::IntegersMod { modulus }, Elem::Residue(r)) => r < modulus,
            (RingDescriptor::Polynomial { variables }, Elem::Poly(p)) => {
                p.nvars() == variables.len() && p.is_canonical()
            }
            _ => false,
        }
    }

    pub fn add(&self, a: &Elem, b: &Elem) -> Elem {
        match (a, b) {
            (Elem::Rational(x), Elem::Rational(y)) => Elem::Rational(x + y),
            (Elem::Residue(x), Elem::Residue(y)) => Elem::Residue((x + y) % self.modulus_unchecked()),
            (Elem::Poly(x), Elem::Poly(y)) => Elem::Poly(x.add(y)),
            _ => mismatch(),
        }
    }

    pub fn neg(&self, a: &Elem) -> Elem {
        match a {
            Elem::Rational(x) => Elem::Rational(-x),
            Elem::Residue(x) => {
                let m = self.modulus_unchecked();
                Elem::Residue((m - x) % m)
            }
            Elem::Poly(x) => Elem::Poly(x.neg()),
        }
    }

    pub fn sub(&self, a: &Elem, b: &Elem) -> Elem {
        match (a, b) {
            (Elem::Rational(x), Elem::Rational(y)) => Elem::Rational(x - y),
            (Elem::Residue(x), Elem::Residue(y)) => {
                let m = self.modulus_unchecked();
                Elem::Residue((x + m - y) % m)
            }
            (Elem::Poly(x), Elem::Poly(y)) => Elem::Poly(x.sub(y)),
            _ => mismatch(),
        }
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        match (a, b) {
            (Elem::Rational(x), Elem::Rational(y)) => Elem::Rational(x * y),
            (Elem::Residue(x), Elem::Residue(y)) => Elem::Residue((x * y) % self.modulus_unchecked()),
            (Elem::Poly(x), Elem::Poly(y)) => Elem::Poly(x.mul(y)),
            _ => mismatch(),
        }
    }

    pub fn is_zero(&self, a: &Elem) -> bool {
        match a {
            Elem::Rational(x) => x.is_zero(),
            Elem::Residue(x) => x.is_zero(),
            Elem::Poly(x) => x.is_zero(),
        }
    }

    pub fn is_one(&self, a: &Elem) -> bool {
        *a == self.one()
    }

    pub fn is_unit(&self, a: &Elem) -> bool {
        match a {
            Elem::Rational(x) => !x.is_zero(),
            Elem::Residue(x) => x.gcd(self.modulus_unchecked()).is_one(),
            Elem::Poly(p) => matches!(p.constant_value(), Some(c) if !c.is_zero()),
        }
    }

    pub fn inv(&self, a: &Elem) -> Option<Elem> {
        match a {
            Elem::Rational(x) => (!x.is_zero()).then(|| Elem::Rational(x.recip())),
            Elem::Residue(x) => {
                let m = BigInt::from(self.modulus_unchecked().clone());
                let g = BigInt::from(x.clone()).extended_gcd(&m);
                g.gcd.is_one().then(|| Elem::Residue(reduce(&g.x, self.modulus_unchecked())))
            }
            Elem::Poly(p) => match p.constant_value() {
                Some(c) if !c.is_zero() => Some(Elem::Poly(Poly::constant(p.nvars(), c.recip()))),
                _ => None,
            },
        }
    }

    /// `a / b` when `b` divides `a` exactly.
    ///
    /// Over `Z/n` this only succeeds for unit divisors.
    pub fn exact_div(&self, a: &Elem, b: &Elem) -> Option<Elem> {
        match (a, b) {
            (Elem::Poly(x), Elem::Poly(y)) => x.exact_div(y).map(Elem::Poly),
            _ => self.inv(b).map(|bi| self.mul(a, &bi)),
        }
    }

    /// Sign of a rational value; `None` outside the rationals.
    pub fn sign(&self, a: &Elem) -> Option<core::cmp::Ordering> {
        match a {
            Elem::Rational(x) => Some(x.cmp(&BigRational::zero())),
            _ => None,
        }
    }

    fn modulus_unchecked(&self) -> &BigUint {
        self.modulus().unwrap_or_else(|| mismatch())
    }

    /// Canonical text form of `e` (see the module docs of the text syntax).
    pub fn format(&self, e: &Elem) -> String {
        text::format(self, e)
    }

    pub fn parse(&self, s: &str) -> Result<Elem> {
        text::parse(self, s)
    }

    pub fn element(&self, value: Elem) -> Result<RingElement> {
        RingElement::new(self.clone(), value)
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &*self.0 {
            RingDescriptor::Rationals => f.write_str("Q"),
            RingDescriptor::IntegersMod { modulus } => write!(f, "Z/{modulus}"),
            RingDescriptor::Polynomial { variables } => write!(f, "Q[{}]", variables.join(",")),
        }
    }
}

#[cold]
fn mismatch() -> ! {
    panic!("ring element does not belong to this ring")
}

fn reduce(n: &BigInt, modulus: &BigUint) -> BigUint {
    let m = BigInt::from(modulus.clone());
    let r = n.mod_floor(&m);
    r.to_biguint().unwrap_or_default()
}

/// Miller-Rabin with the first twelve prime bases: deterministic below 3.3e24,
/// a strong probable-prime test beyond.
pub(crate) fn is_prime(n: &BigUint) -> bool {
    const BASES: [u32; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    let two = BigUint::from(2u32);
    if *n < two {
        return false;
    }
    for b in BASES {
        let b = BigUint::from(b);
        if *n == b {
            return true;
        }
        if (n % &b).is_zero() {
            return false;
        }
    }
    let n_minus_one = n - 1u32;
    let s = n_minus_one.trailing_zeros().unwrap_or(0);
    let d = &n_minus_one >> s;
    'witness: for b in BASES {
        let mut x = BigUint::from(b).modpow(&d, n);
        if x.is_one() || x == n_minus_one {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n_minus_one {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// A value together with the ring it belongs to.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingElement {
    ring: Ring,
    value: Elem,
}

impl RingElement {
    pub fn new(ring: Ring, value: Elem) -> Result<Self> {
        if !ring.contains(&value) {
            return Err(Error::RingMismatch);
        }
        Ok(RingElement { ring, value })
    }

    pub fn parse(ring: &Ring, s: &str) -> Result<Self> {
        Ok(RingElement {
            value: ring.parse(s)?,
            ring: ring.clone(),
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn value(&self) -> &Elem {
        &self.value
    }

    pub fn into_value(self) -> Elem {
        self.value
    }

    fn same_ring(&self, other: &RingElement) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &RingElement) -> Result<RingElement> {
        self.same_ring(other)?;
        Ok(RingElement {
            value: self.ring.add(&self.value, &other.value),
            ring: self.ring.clone(),
        })
    }

    pub fn mul(&self, other: &RingElement) -> Result<RingElement> {
        self.same_ring(other)?;
        Ok(RingElement {
            value: self.ring.mul(&self.value, &other.value),
            ring: self.ring.clone(),
        })
    }

    pub fn neg(&self) -> RingElement {
        RingElement {
            value: self.ring.neg(&self.value),
            ring: self.ring.clone(),
        }
    }

    pub fn is_unit(&self) -> bool {
        self.ring.is_unit(&self.value)
    }

    pub fn inv(&self) -> Result<RingElement> {
        let value = self.ring.inv(&self.value).ok_or(Error::NotAUnit)?;
        Ok(RingElement {
            value,
            ring: self.ring.clone(),
        })
    }

    pub fn is_zero(&self) -> bool {
        self.ring.is_zero(&self.value)
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.ring.format(&self.value))
    }
}
