//! Coefficient fields: the rationals and prime fields of word-sized characteristic.
//!
//! Every computation in the crate is generic over [`Field`]. A field object is a
//! small `Copy` value that carries the arithmetic, while elements are plain
//! values of the associated type [`Field::Elem`]. Runtime selection from a
//! [`FieldSpec`] goes through [`dispatch_field!`](crate::dispatch_field).

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest admissible prime characteristic (exclusive).
pub const MAX_CHARACTERISTIC: u64 = 1 << 31;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("characteristic {0} is not a prime")]
    NotPrime(u64),
    #[error("characteristic {0} exceeds 2^31")]
    TooLarge(u64),
}

/// Characteristic of a coefficient field: `0` is the rationals, a prime `p` is `F_p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct FieldSpec {
    characteristic: u32,
}

impl FieldSpec {
    pub const RATIONALS: FieldSpec = FieldSpec { characteristic: 0 };

    pub fn new(characteristic: u64) -> Result<Self, FieldError> {
        if characteristic == 0 {
            return Ok(Self::RATIONALS);
        }
        if characteristic >= MAX_CHARACTERISTIC {
            return Err(FieldError::TooLarge(characteristic));
        }
        if !is_prime(characteristic) {
            return Err(FieldError::NotPrime(characteristic));
        }
        Ok(FieldSpec {
            characteristic: characteristic as u32,
        })
    }

    pub fn characteristic(self) -> u32 {
        self.characteristic
    }

    pub fn is_rationals(self) -> bool {
        self.characteristic == 0
    }
}

impl Default for FieldSpec {
    fn default() -> Self {
        Self::RATIONALS
    }
}

impl TryFrom<u64> for FieldSpec {
    type Error = FieldError;
    fn try_from(value: u64) -> Result<Self, Self::Error> {
        FieldSpec::new(value)
    }
}

impl From<FieldSpec> for u64 {
    fn from(spec: FieldSpec) -> u64 {
        spec.characteristic as u64
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.characteristic == 0 {
            write!(f, "QQ")
        } else {
            write!(f, "GF({})", self.characteristic)
        }
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Arithmetic of a commutative field.
#[allow(clippy::wrong_self_convention)]
pub trait Field: Copy + fmt::Debug + PartialEq + Send + Sync + 'static {
    type Elem: Clone + PartialEq + Eq + fmt::Debug + fmt::Display + Send + Sync;

    fn spec(&self) -> FieldSpec;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse. Panics on zero.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn from_integer(&self, v: &BigInt) -> Self::Elem;

    fn from_i64(&self, v: i64) -> Self::Elem {
        self.from_integer(&BigInt::from(v))
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.mul(a, &self.inv(b))
    }

    /// `a - b * c`, the elimination kernel.
    fn sub_mul(&self, a: &Self::Elem, b: &Self::Elem, c: &Self::Elem) -> Self::Elem {
        self.sub(a, &self.mul(b, c))
    }

    /// Sign and magnitude split used by pretty printers: `(negative, |a|)`.
    /// Prime fields always report non-negative representatives.
    fn split_sign(&self, a: &Self::Elem) -> (bool, Self::Elem) {
        (false, a.clone())
    }
}

/// The field of rational numbers with arbitrary precision.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn spec(&self) -> FieldSpec {
        FieldSpec::RATIONALS
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        assert!(!a.is_zero(), "inverse of zero");
        a.recip()
    }
    fn from_integer(&self, v: &BigInt) -> BigRational {
        BigRational::from_integer(v.clone())
    }
    fn is_one(&self, a: &BigRational) -> bool {
        a.is_one()
    }
    fn split_sign(&self, a: &BigRational) -> (bool, BigRational) {
        (a.is_negative(), a.abs())
    }
}

/// The prime field `F_p` for `p < 2^31`, elements stored as canonical residues.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self, FieldError> {
        let spec = FieldSpec::new(p as u64)?;
        if spec.is_rationals() {
            return Err(FieldError::NotPrime(0));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    /// Residue of `numerator / denominator`, or `None` when `p` divides the denominator.
    pub fn from_ratio(&self, numerator: &BigInt, denominator: &BigInt) -> Option<u32> {
        let den = self.from_integer(denominator);
        if den == 0 {
            return None;
        }
        Some(self.div(&self.from_integer(numerator), &den))
    }
}

impl Field for PrimeField {
    type Elem = u32;

    fn spec(&self) -> FieldSpec {
        FieldSpec {
            characteristic: self.p,
        }
    }
    fn zero(&self) -> u32 {
        0
    }
    fn one(&self) -> u32 {
        1
    }
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    fn add(&self, a: &u32, b: &u32) -> u32 {
        let s = *a as u64 + *b as u64;
        (s % self.p as u64) as u32
    }
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        let s = *a as u64 + self.p as u64 - *b as u64;
        (s % self.p as u64) as u32
    }
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 * *b as u64) % self.p as u64) as u32
    }
    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            self.p - *a
        }
    }
    fn inv(&self, a: &u32) -> u32 {
        assert!(*a != 0, "inverse of zero");
        let e = (*a as i64).extended_gcd(&(self.p as i64));
        debug_assert_eq!(e.gcd, 1);
        e.x.rem_euclid(self.p as i64) as u32
    }
    fn from_integer(&self, v: &BigInt) -> u32 {
        let r = v.mod_floor(&BigInt::from(self.p));
        r.to_u32().expect("residue fits in u32")
    }
    fn sub_mul(&self, a: &u32, b: &u32, c: &u32) -> u32 {
        let prod = (*b as u64 * *c as u64) % self.p as u64;
        ((*a as u64 + self.p as u64 - prod) % self.p as u64) as u32
    }
}

/// Runs `$body` with `$field` bound to the concrete [`Field`] named by a [`FieldSpec`].
#[macro_export]
macro_rules! dispatch_field {
    ($spec:expr, $field:ident => $body:expr) => {{
        let spec: $crate::field::FieldSpec = $spec;
        if spec.is_rationals() {
            let $field = $crate::field::Rationals;
            $body
        } else {
            let $field = $crate::field::PrimeField::new(spec.characteristic())
                .expect("FieldSpec holds a validated prime");
            $body
        }
    }};
}
