//! Exact coefficient fields for the syzygy engine.
//!
//! Rationals are the default: every certificate is then unconditional.
//! A word-sized prime field is available for speed; the acceptance suite
//! cross-checks the two on the same inputs.

use num::BigRational;
use num::{One, Signed, Zero};

/// Default modulus for prime-field mode: the Mersenne prime 2^61 − 1.
pub const DEFAULT_PRIME: u64 = (1 << 61) - 1;

/// Exact field operations as used by the elimination kernels.
pub trait Scalar: Clone + PartialEq + std::fmt::Debug + Send + Sync {
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Self;
    /// Numerator/denominator view for reporting (residue over 1 for Fp).
    fn to_fraction(&self) -> (i64, i64);
}

/// Arbitrary-precision rational coefficient.
#[derive(Clone, PartialEq, Debug)]
pub struct Rat(pub BigRational);

impl Rat {
    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }
    pub fn one() -> Self {
        Rat(BigRational::one())
    }
    pub fn from_fraction(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Rat(BigRational::new(num.into(), den.into()))
    }
}

impl Scalar for Rat {
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn is_one(&self) -> bool {
        self.0.is_one()
    }
    fn add(&self, other: &Self) -> Self {
        Rat(&self.0 + &other.0)
    }
    fn sub(&self, other: &Self) -> Self {
        Rat(&self.0 - &other.0)
    }
    fn mul(&self, other: &Self) -> Self {
        Rat(&self.0 * &other.0)
    }
    fn neg(&self) -> Self {
        Rat(-self.0.clone())
    }
    fn inv(&self) -> Self {
        assert!(!self.0.is_zero(), "inverse of zero");
        Rat(self.0.recip())
    }
    fn to_fraction(&self) -> (i64, i64) {
        use num::ToPrimitive;
        let num = self.0.numer().to_i64().expect("coefficient numerator exceeds i64");
        let den = self.0.denom().to_i64().expect("coefficient denominator exceeds i64");
        if den < 0 {
            (-num, -den)
        } else {
            (num, den)
        }
    }
}

impl From<i64> for Rat {
    fn from(v: i64) -> Self {
        Rat(BigRational::from_integer(v.into()))
    }
}

/// Signed magnitude helper used when normalizing report fractions.
pub fn rat_is_negative(r: &Rat) -> bool {
    r.0.is_negative()
}

/// Constructs coefficients for one of the supported fields; threads the
/// modulus through prime-field computations.
pub(crate) trait FieldCtx: Clone + Send + Sync {
    type K: Scalar;
    fn one(&self) -> Self::K;
    fn from_fraction(&self, num: i64, den: i64) -> Self::K;
}

#[derive(Clone, Copy, Debug)]
pub(crate) struct RatCtx;

impl FieldCtx for RatCtx {
    type K = Rat;
    fn one(&self) -> Rat {
        Rat::one()
    }
    fn from_fraction(&self, num: i64, den: i64) -> Rat {
        Rat::from_fraction(num, den)
    }
}

#[derive(Clone, Copy, Debug)]
pub(crate) struct FpCtx {
    pub modulus: u64,
}

impl FieldCtx for FpCtx {
    type K = Fp;
    fn one(&self) -> Fp {
        Fp::one(self.modulus)
    }
    fn from_fraction(&self, num: i64, den: i64) -> Fp {
        Fp::new(num, self.modulus).mul(&Fp::new(den, self.modulus).inv())
    }
}

/// Prime-field coefficient with runtime modulus.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct Fp {
    pub value: u64,
    pub modulus: u64,
}

impl Fp {
    pub fn new(value: i64, modulus: u64) -> Self {
        let m = modulus as i128;
        let v = ((value as i128 % m) + m) % m;
        Fp { value: v as u64, modulus }
    }
    pub fn zero(modulus: u64) -> Self {
        Fp { value: 0, modulus }
    }
    pub fn one(modulus: u64) -> Self {
        Fp { value: 1 % modulus, modulus }
    }
    fn pow(&self, mut e: u64) -> Self {
        let mut base = *self;
        let mut acc = Fp::one(self.modulus);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }
}

impl Scalar for Fp {
    fn is_zero(&self) -> bool {
        self.value == 0
    }
    fn is_one(&self) -> bool {
        self.value == 1
    }
    fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.modulus, other.modulus);
        let s = self.value as u128 + other.value as u128;
        Fp { value: (s % self.modulus as u128) as u64, modulus: self.modulus }
    }
    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
    fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.modulus, other.modulus);
        let p = self.value as u128 * other.value as u128;
        Fp { value: (p % self.modulus as u128) as u64, modulus: self.modulus }
    }
    fn neg(&self) -> Self {
        Fp { value: if self.value == 0 { 0 } else { self.modulus - self.value }, modulus: self.modulus }
    }
    fn inv(&self) -> Self {
        assert!(self.value != 0, "inverse of zero");
        self.pow(self.modulus - 2)
    }
    fn to_fraction(&self) -> (i64, i64) {
        // report small symmetric residues as signed integers
        let half = self.modulus / 2;
        if self.value > half {
            (-((self.modulus - self.value) as i64), 1)
        } else {
            (self.value as i64, 1)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_field_ops() {
        let a = Rat::from_fraction(2, 3);
        let b = Rat::from_fraction(-1, 6);
        assert_eq!(a.add(&b).to_fraction(), (1, 2));
        assert_eq!(a.mul(&b).to_fraction(), (-1, 9));
        assert_eq!(a.inv().to_fraction(), (3, 2));
        assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn prime_field_ops() {
        let p = DEFAULT_PRIME;
        let a = Fp::new(7, p);
        assert!(a.mul(&a.inv()).is_one());
        assert_eq!(Fp::new(-3, p).to_fraction(), (-3, 1));
        assert!(Fp::new(5, p).sub(&Fp::new(5, p)).is_zero());
    }
}
