//! Arithmetic in the prime field `Z_p`.
//!
//! Elements are stored as their canonical representative in `[0, p)`. The
//! modulus is bounded by `u32::MAX` so that a product of two representatives
//! always fits in a `u64`.
//!
//! Every arithmetic call made through [`PrimeField`] bumps a thread-local
//! counter, which the complexity reports read through [`count_ops`].

use std::cell::Cell;
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

thread_local! {
    static FIELD_OPS: Cell<u64> = const { Cell::new(0) };
}

#[inline]
fn tick() {
    FIELD_OPS.with(|c| c.set(c.get() + 1));
}

/// Total field operations performed on this thread so far.
pub fn field_ops() -> u64 {
    FIELD_OPS.with(|c| c.get())
}

/// Runs `f` and returns its result together with the number of field
/// operations it performed on this thread.
pub fn count_ops<R>(f: impl FnOnce() -> R) -> (R, u64) {
    let before = field_ops();
    let out = f();
    (out, field_ops() - before)
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p.is_multiple_of(2) {
        return p == 2;
    }
    let mut d = 3u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct PrimeField {
    p: u64,
}

impl TryFrom<u64> for PrimeField {
    type Error = Error;

    fn try_from(p: u64) -> Result<Self> {
        PrimeField::new(p)
    }
}

impl From<PrimeField> for u64 {
    fn from(f: PrimeField) -> u64 {
        f.p
    }
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p > u32::MAX as u64 {
            return Err(Error::ModulusOutOfRange(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    #[inline]
    pub fn modulus(&self) -> u64 {
        self.p
    }

    /// Canonical representative of an arbitrary integer.
    pub fn reduce(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }

    pub fn elem(&self, v: i64) -> FieldElement {
        FieldElement {
            value: self.reduce(v),
            modulus: self.p,
        }
    }

    /// Iterates over all field elements in their natural order.
    pub fn elements(&self) -> impl Iterator<Item = u64> {
        0..self.p
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        tick();
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        tick();
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        tick();
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        tick();
        (a * b) % self.p
    }

    /// Multiplicative inverse by the extended Euclidean algorithm.
    pub fn inv(&self, a: u64) -> Result<u64> {
        if a.is_multiple_of(self.p) {
            return Err(Error::DivisionByZero);
        }
        tick();
        let (mut r0, mut r1) = (self.p as i64, a as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        Ok(t0.rem_euclid(self.p as i64) as u64)
    }

    pub fn div(&self, a: u64, b: u64) -> Result<u64> {
        let bi = self.inv(b)?;
        Ok(self.mul(a, bi))
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }
}

impl fmt::Display for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z_{}", self.p)
    }
}

/// A single element of `Z_p` that remembers its modulus.
///
/// The operator impls panic on mismatched moduli; the `try_*` methods report
/// [`Error::FieldMismatch`] instead. Ordering follows the canonical
/// representatives `0 < 1 < ... < p-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElement {
    value: u64,
    modulus: u64,
}

impl FieldElement {
    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn field(&self) -> PrimeField {
        PrimeField { p: self.modulus }
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn check(&self, other: &Self) -> Result<PrimeField> {
        if self.modulus != other.modulus {
            return Err(Error::FieldMismatch {
                left: self.modulus,
                right: other.modulus,
            });
        }
        Ok(self.field())
    }

    fn with(&self, value: u64) -> Self {
        FieldElement {
            value,
            modulus: self.modulus,
        }
    }

    pub fn try_add(self, other: Self) -> Result<Self> {
        let f = self.check(&other)?;
        Ok(self.with(f.add(self.value, other.value)))
    }

    pub fn try_sub(self, other: Self) -> Result<Self> {
        let f = self.check(&other)?;
        Ok(self.with(f.sub(self.value, other.value)))
    }

    pub fn try_mul(self, other: Self) -> Result<Self> {
        let f = self.check(&other)?;
        Ok(self.with(f.mul(self.value, other.value)))
    }

    pub fn inv(self) -> Result<Self> {
        Ok(self.with(self.field().inv(self.value)?))
    }
}

impl Add for FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: Self) -> Self {
        self.try_add(rhs).expect("field mismatch")
    }
}

impl Sub for FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: Self) -> Self {
        self.try_sub(rhs).expect("field mismatch")
    }
}

impl Mul for FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: Self) -> Self {
        self.try_mul(rhs).expect("field mismatch")
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> Self {
        self.with(self.field().neg(self.value))
    }
}

impl PartialOrd for FieldElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        (self.modulus == other.modulus).then(|| self.value.cmp(&other.value))
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructs_example_fields() {
        assert_eq!(PrimeField::new(43).unwrap().modulus(), 43);
        assert_eq!(PrimeField::new(3).unwrap().modulus(), 3);
        assert_eq!(PrimeField::new(4), Err(Error::NotPrime(4)));
        assert_eq!(PrimeField::new(1), Err(Error::NotPrime(1)));
        assert!(PrimeField::new(4294967291).is_ok());
    }

    #[test]
    fn arith_examples() {
        let z43 = PrimeField::new(43).unwrap();
        assert_eq!((z43.elem(1) - z43.elem(2)).value(), 42);
        assert_eq!((z43.elem(2) * z43.elem(22)).value(), 1);
        let z3 = PrimeField::new(3).unwrap();
        assert_eq!((z3.elem(0) + z3.elem(0)).value(), 0);
        assert_eq!(z3.elem(-4).value(), 2);
    }

    #[test]
    fn mismatched_fields_are_rejected() {
        let a = PrimeField::new(5).unwrap().elem(1);
        let b = PrimeField::new(7).unwrap().elem(1);
        assert_eq!(
            a.try_add(b),
            Err(Error::FieldMismatch { left: 5, right: 7 })
        );
        assert!(a.partial_cmp(&b).is_none());
    }

    #[test]
    fn inverse_examples() {
        let z43 = PrimeField::new(43).unwrap();
        assert_eq!(z43.inv(2).unwrap(), 22);
        assert_eq!(z43.inv(1).unwrap(), 1);
        let z3 = PrimeField::new(3).unwrap();
        assert_eq!(z3.inv(2).unwrap(), 2);
        assert_eq!(z3.inv(0), Err(Error::DivisionByZero));
    }

    #[test]
    fn inverse_exhaustive_small_primes() {
        for p in (2..=101u64).filter(|&p| is_prime(p)) {
            let f = PrimeField::new(p).unwrap();
            for a in 1..p {
                let ai = f.inv(a).unwrap();
                assert!(ai < p);
                assert_eq!(f.mul(a, ai), 1, "p={p} a={a}");
            }
        }
    }

    #[test]
    fn results_stay_canonical() {
        let f = PrimeField::new(13).unwrap();
        for a in 0..13 {
            for b in 0..13 {
                for v in [f.add(a, b), f.sub(a, b), f.mul(a, b), f.neg(a)] {
                    assert!(v < 13);
                }
            }
        }
    }

    #[test]
    fn counts_operations() {
        let f = PrimeField::new(7).unwrap();
        let (_, ops) = count_ops(|| {
            let x = f.add(3, 5);
            f.mul(x, 2)
        });
        assert_eq!(ops, 2);
    }
}
