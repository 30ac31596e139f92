//! Exact coefficient fields.
//!
//! Everything in the engine is generic over [`Field`]. Two families are
//! provided: the rationals (arbitrary precision, via `num-rational`) and the
//! prime fields `GF(p)`. A prime field's modulus comes from a [`Modulus`]
//! type, either fixed at compile time ([`ConstPrime`]) or chosen once per
//! process ([`RuntimePrime`]).

use std::fmt::{self, Debug, Display};
use std::hash::{Hash, Hasher};
use std::marker::PhantomData;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::atomic::{AtomicU64, Ordering};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Which field a value lives in, for reports and presentation files.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldKind {
    Rational,
    Prime(u64),
}

impl Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldKind::Rational => write!(f, "Q"),
            FieldKind::Prime(p) => write!(f, "GF {p}"),
        }
    }
}

/// An exact field. Equality is decidable and arithmetic never rounds.
pub trait Field:
    Clone
    + Eq
    + Hash
    + Debug
    + Display
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
    + Send
    + Sync
    + 'static
{
    /// Multiplicative inverse. Panics on zero.
    fn inv(&self) -> Self;

    fn from_i64(v: i64) -> Self;

    /// Image of `num/den`, or `None` when `den` vanishes in the field.
    fn from_fraction(num: &BigInt, den: &BigInt) -> Option<Self>;

    /// Whether the value prints with a leading minus sign.
    fn is_negative(&self) -> bool;

    fn kind() -> FieldKind;
}

/// Arbitrary-precision rationals.
pub type Rational = BigRational;

impl Field for BigRational {
    fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        self.recip()
    }

    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn from_fraction(num: &BigInt, den: &BigInt) -> Option<Self> {
        if den.is_zero() {
            None
        } else {
            Some(BigRational::new(num.clone(), den.clone()))
        }
    }

    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }

    fn kind() -> FieldKind {
        FieldKind::Rational
    }
}

/// Source of a prime modulus.
pub trait Modulus: Send + Sync + 'static {
    fn modulus() -> u64;
}

/// Compile-time prime modulus.
pub struct ConstPrime<const P: u64>;

impl<const P: u64> Modulus for ConstPrime<P> {
    #[inline]
    fn modulus() -> u64 {
        P
    }
}

static RUNTIME_MODULUS: AtomicU64 = AtomicU64::new(101);

/// Process-wide modulus chosen at run time (the CLI sets it from the
/// presentation file before any arithmetic happens).
pub struct RuntimePrime;

impl RuntimePrime {
    pub fn set(p: u64) -> Result<()> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p >= 1 << 62 {
            return Err(Error::ModulusTooLarge(p));
        }
        RUNTIME_MODULUS.store(p, Ordering::SeqCst);
        Ok(())
    }
}

impl Modulus for RuntimePrime {
    #[inline]
    fn modulus() -> u64 {
        RUNTIME_MODULUS.load(Ordering::Relaxed)
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Residue class modulo the prime `M::modulus()`, stored in `[0, p)`.
pub struct Fp<M: Modulus> {
    value: u64,
    _modulus: PhantomData<M>,
}

pub type Gf101 = Fp<ConstPrime<101>>;
pub type Gf2 = Fp<ConstPrime<2>>;
pub type GfRuntime = Fp<RuntimePrime>;

impl<M: Modulus> Fp<M> {
    #[inline]
    pub fn new(v: u64) -> Self {
        Fp {
            value: v % M::modulus(),
            _modulus: PhantomData,
        }
    }

    #[inline]
    pub fn value(&self) -> u64 {
        self.value
    }

    fn pow(&self, mut e: u64) -> Self {
        let p = M::modulus() as u128;
        let mut base = self.value as u128;
        let mut acc = 1u128 % p;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        Fp::new(acc as u64)
    }
}

impl<M: Modulus> Clone for Fp<M> {
    #[inline]
    fn clone(&self) -> Self {
        *self
    }
}

impl<M: Modulus> Copy for Fp<M> {}

impl<M: Modulus> PartialEq for Fp<M> {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value
    }
}

impl<M: Modulus> Eq for Fp<M> {}

impl<M: Modulus> Hash for Fp<M> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.value.hash(state);
    }
}

impl<M: Modulus> Debug for Fp<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Symmetric representative: residues above p/2 print as negatives.
impl<M: Modulus> Display for Fp<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = M::modulus();
        if self.value > p / 2 {
            write!(f, "-{}", p - self.value)
        } else {
            write!(f, "{}", self.value)
        }
    }
}

impl<M: Modulus> Zero for Fp<M> {
    fn zero() -> Self {
        Fp {
            value: 0,
            _modulus: PhantomData,
        }
    }
    fn is_zero(&self) -> bool {
        self.value == 0
    }
}

impl<M: Modulus> One for Fp<M> {
    fn one() -> Self {
        Fp::new(1)
    }
}

impl<M: Modulus> Add for Fp<M> {
    type Output = Self;
    #[inline]
    fn add(self, rhs: Self) -> Self {
        let p = M::modulus();
        let s = self.value + rhs.value;
        Fp {
            value: if s >= p { s - p } else { s },
            _modulus: PhantomData,
        }
    }
}

impl<M: Modulus> Sub for Fp<M> {
    type Output = Self;
    #[inline]
    fn sub(self, rhs: Self) -> Self {
        let p = M::modulus();
        Fp {
            value: if self.value >= rhs.value {
                self.value - rhs.value
            } else {
                self.value + p - rhs.value
            },
            _modulus: PhantomData,
        }
    }
}

impl<M: Modulus> Mul for Fp<M> {
    type Output = Self;
    #[inline]
    fn mul(self, rhs: Self) -> Self {
        let p = M::modulus() as u128;
        Fp {
            value: ((self.value as u128 * rhs.value as u128) % p) as u64,
            _modulus: PhantomData,
        }
    }
}

impl<M: Modulus> Div for Fp<M> {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Self) -> Self {
        self * rhs.inv()
    }
}

impl<M: Modulus> Neg for Fp<M> {
    type Output = Self;
    #[inline]
    fn neg(self) -> Self {
        Fp::zero() - self
    }
}

impl<M: Modulus> AddAssign for Fp<M> {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl<M: Modulus> SubAssign for Fp<M> {
    fn sub_assign(&mut self, rhs: Self) {
        *self = *self - rhs;
    }
}

impl<M: Modulus> MulAssign for Fp<M> {
    fn mul_assign(&mut self, rhs: Self) {
        *self = *self * rhs;
    }
}

impl<M: Modulus> Field for Fp<M> {
    fn inv(&self) -> Self {
        assert!(self.value != 0, "inverse of zero");
        // Fermat: a^(p-2)
        self.pow(M::modulus() - 2)
    }

    fn from_i64(v: i64) -> Self {
        let p = M::modulus() as i128;
        Fp::new((v as i128).rem_euclid(p) as u64)
    }

    fn from_fraction(num: &BigInt, den: &BigInt) -> Option<Self> {
        let p = BigInt::from(M::modulus());
        let n = num.mod_floor(&p).to_u64()?;
        let d = den.mod_floor(&p).to_u64()?;
        if d == 0 {
            return None;
        }
        Some(Fp::new(n) / Fp::new(d))
    }

    fn is_negative(&self) -> bool {
        self.value > M::modulus() / 2
    }

    fn kind() -> FieldKind {
        FieldKind::Prime(M::modulus())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_inverse() {
        for v in 1..101u64 {
            let a = Gf101::new(v);
            assert_eq!(a * a.inv(), Gf101::one());
        }
    }

    #[test]
    fn symmetric_printing() {
        assert_eq!(Gf101::from_i64(-1).to_string(), "-1");
        assert_eq!(Gf101::from_i64(50).to_string(), "50");
        assert_eq!(Gf101::from_i64(51).to_string(), "-50");
        assert!(Gf101::from_i64(-3).is_negative());
    }

    #[test]
    fn fractions() {
        let half = Gf101::from_fraction(&BigInt::from(1), &BigInt::from(2)).unwrap();
        assert_eq!(half * Gf101::from_i64(2), Gf101::one());
        assert!(Gf101::from_fraction(&BigInt::from(1), &BigInt::from(202)).is_none());
        let q = Rational::from_fraction(&BigInt::from(-6), &BigInt::from(4)).unwrap();
        assert_eq!(q.to_string(), "-3/2");
    }

    #[test]
    fn runtime_modulus_rejects_composites() {
        assert!(RuntimePrime::set(91).is_err());
        assert!(is_prime(32003));
    }
}
