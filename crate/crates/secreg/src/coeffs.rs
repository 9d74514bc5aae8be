//! Coefficient fields: prime fields of word size and the rationals.
//!
//! Heavy code is generic over [`Field`], which carries the field context
//! (the modulus for 𝔽_p) and stores elements in their natural machine form.
//! [`FieldElement`] is the tagged, self-describing form used at API
//! boundaries where values from different fields may meet.
//!
//! All pseudo-randomness in the crate comes from [`Rng`], ChaCha8 seeded with
//! `seed_from_u64`. Independent sub-streams are derived with [`derive_rng`].

use std::fmt::{self, Debug, Display};
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

pub type Rng = ChaCha8Rng;

/// Default characteristic for all heavy computations.
pub const DEFAULT_PRIME: u32 = 32003;

/// Integers drawn for ℚ lie in `[-QQ_RANDOM_BOUND, QQ_RANDOM_BOUND]`.
pub const QQ_RANDOM_BOUND: i64 = 100;

pub fn rng_from_seed(seed: u64) -> Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A reproducible generator for sub-task `stream` of a run seeded with `seed`.
pub fn derive_rng(seed: u64, stream: u64) -> Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

pub trait Field: Clone + Debug + Send + Sync + 'static {
    type Elem: Clone + PartialEq + Eq + Hash + Debug + Send + Sync;

    /// 0 for ℚ.
    fn characteristic(&self) -> u64;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn from_i64(&self, n: i64) -> Self::Elem;
    fn from_bigint(&self, n: &BigInt) -> Self::Elem;
    /// Uniform element of 𝔽_p, or an integer in the documented range for ℚ.
    fn random(&self, rng: &mut Rng) -> Self::Elem;
    fn to_element(&self, a: &Self::Elem) -> FieldElement;
    fn from_element(&self, a: &FieldElement) -> Result<Self::Elem>;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn random_nonzero(&self, rng: &mut Rng) -> Self::Elem {
        loop {
            let x = self.random(rng);
            if !self.is_zero(&x) {
                return x;
            }
        }
    }

    /// Small signed integer value, if the element has one (symmetric residue in 𝔽_p).
    fn to_small_int(&self, a: &Self::Elem) -> Option<i64>;
}

/// 𝔽_p for a prime `p < 2^31`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        if p < 2 || p >= (1 << 31) || !is_prime(p as u64) {
            return Err(Error::Precondition(format!(
                "characteristic {p} is not a prime below 2^31"
            )));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn reduce_u64(&self, x: u64) -> u32 {
        (x % self.p as u64) as u32
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Field for PrimeField {
    type Elem = u32;

    fn characteristic(&self) -> u64 {
        self.p as u64
    }
    #[inline]
    fn zero(&self) -> u32 {
        0
    }
    #[inline]
    fn one(&self) -> u32 {
        1
    }
    #[inline]
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    #[inline]
    fn add(&self, a: &u32, b: &u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    #[inline]
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    #[inline]
    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    #[inline]
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 * *b as u64) % self.p as u64) as u32
    }
    fn inv(&self, a: &u32) -> Option<u32> {
        if *a == 0 {
            return None;
        }
        let (mut t, mut new_t) = (0i64, 1i64);
        let (mut r, mut new_r) = (self.p as i64, *a as i64);
        while new_r != 0 {
            let q = r / new_r;
            (t, new_t) = (new_t, t - q * new_t);
            (r, new_r) = (new_r, r - q * new_r);
        }
        Some(t.rem_euclid(self.p as i64) as u32)
    }
    fn from_i64(&self, n: i64) -> u32 {
        n.rem_euclid(self.p as i64) as u32
    }
    fn from_bigint(&self, n: &BigInt) -> u32 {
        let r = n.mod_floor(&BigInt::from(self.p));
        r.to_u32().expect("residue fits")
    }
    fn random(&self, rng: &mut Rng) -> u32 {
        rng.random_range(0..self.p)
    }
    fn to_element(&self, a: &u32) -> FieldElement {
        FieldElement::Fp { value: *a, p: self.p }
    }
    fn from_element(&self, a: &FieldElement) -> Result<u32> {
        match a {
            FieldElement::Fp { value, p } if *p == self.p => Ok(*value),
            other => Err(Error::FieldMismatch(
                FieldId::Prime(self.p).to_string(),
                other.field_id().to_string(),
            )),
        }
    }
    fn to_small_int(&self, a: &u32) -> Option<i64> {
        let v = *a as i64;
        let p = self.p as i64;
        Some(if v > p / 2 { v - p } else { v })
    }
}

/// The rational numbers, for small cross-checks.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn characteristic(&self) -> u64 {
        0
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
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }
    fn from_bigint(&self, n: &BigInt) -> BigRational {
        BigRational::from_integer(n.clone())
    }
    fn random(&self, rng: &mut Rng) -> BigRational {
        self.from_i64(rng.random_range(-QQ_RANDOM_BOUND..=QQ_RANDOM_BOUND))
    }
    fn to_element(&self, a: &BigRational) -> FieldElement {
        FieldElement::Q(a.clone())
    }
    fn from_element(&self, a: &FieldElement) -> Result<BigRational> {
        match a {
            FieldElement::Q(q) => Ok(q.clone()),
            other => Err(Error::FieldMismatch(
                FieldId::Rational.to_string(),
                other.field_id().to_string(),
            )),
        }
    }
    fn to_small_int(&self, a: &BigRational) -> Option<i64> {
        if a.is_integer() {
            a.to_integer().to_i64()
        } else {
            None
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldId {
    Prime(u32),
    Rational,
}

impl Display for FieldId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldId::Prime(p) => write!(f, "GF({p})"),
            FieldId::Rational => write!(f, "QQ"),
        }
    }
}

/// A field element tagged with its field, in canonical form: residues lie in
/// `[0, p)`, fractions are reduced with positive denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldElement {
    Fp { value: u32, p: u32 },
    Q(BigRational),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl FieldElement {
    pub fn field_id(&self) -> FieldId {
        match self {
            FieldElement::Fp { p, .. } => FieldId::Prime(*p),
            FieldElement::Q(_) => FieldId::Rational,
        }
    }

    pub fn fp(value: i64, p: u32) -> Result<Self> {
        let f = PrimeField::new(p)?;
        Ok(FieldElement::Fp { value: f.from_i64(value), p })
    }

    pub fn rational(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(FieldElement::Q(BigRational::new(num.into(), den.into())))
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElement::Fp { value, .. } => *value == 0,
            FieldElement::Q(q) => q.is_zero(),
        }
    }
}

impl Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElement::Fp { value, .. } => write!(f, "{value}"),
            FieldElement::Q(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
        }
    }
}

pub fn field_arith(a: &FieldElement, b: &FieldElement, op: ArithOp) -> Result<FieldElement> {
    match (a, b) {
        (FieldElement::Fp { value: x, p }, FieldElement::Fp { value: y, p: q }) if p == q => {
            let f = PrimeField { p: *p };
            let v = match op {
                ArithOp::Add => f.add(x, y),
                ArithOp::Sub => f.sub(x, y),
                ArithOp::Mul => f.mul(x, y),
                ArithOp::Div => f.mul(x, &f.inv(y).ok_or(Error::DivisionByZero)?),
            };
            Ok(FieldElement::Fp { value: v, p: *p })
        }
        (FieldElement::Q(x), FieldElement::Q(y)) => Ok(FieldElement::Q(match op {
            ArithOp::Add => x + y,
            ArithOp::Sub => x - y,
            ArithOp::Mul => x * y,
            ArithOp::Div => {
                if y.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                x / y
            }
        })),
        _ => Err(Error::FieldMismatch(
            a.field_id().to_string(),
            b.field_id().to_string(),
        )),
    }
}

pub fn random_element(rng: &mut Rng, field: FieldId) -> Result<FieldElement> {
    match field {
        FieldId::Prime(p) => {
            let f = PrimeField::new(p)?;
            Ok(f.to_element(&f.random(rng)))
        }
        FieldId::Rational => Ok(FieldElement::Q(Rationals.random(rng))),
    }
}

/// Formats a coefficient for the polynomial printer; `None` when it is not a
/// plain (possibly signed) integer, in which case the printer falls back to
/// a parenthesized fraction.
pub(crate) fn coeff_repr<F: Field>(field: &F, c: &F::Elem) -> CoeffRepr {
    if let Some(n) = field.to_small_int(c) {
        return CoeffRepr::Int(n);
    }
    match field.to_element(c) {
        FieldElement::Q(q) => CoeffRepr::Frac(q.numer().clone(), q.denom().clone()),
        FieldElement::Fp { value, .. } => CoeffRepr::Int(value as i64),
    }
}

pub(crate) enum CoeffRepr {
    Int(i64),
    Frac(BigInt, BigInt),
}

impl CoeffRepr {
    pub(crate) fn is_negative(&self) -> bool {
        match self {
            CoeffRepr::Int(n) => *n < 0,
            CoeffRepr::Frac(n, _) => n.is_negative(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_examples() {
        let a = FieldElement::fp(3, 7).unwrap();
        let b = FieldElement::fp(5, 7).unwrap();
        assert_eq!(field_arith(&a, &b, ArithOp::Mul).unwrap(), FieldElement::fp(1, 7).unwrap());
        let h = FieldElement::rational(1, 2).unwrap();
        let t = FieldElement::rational(1, 3).unwrap();
        assert_eq!(
            field_arith(&h, &t, ArithOp::Add).unwrap(),
            FieldElement::rational(5, 6).unwrap()
        );
        let f = PrimeField::new(32003).unwrap();
        assert_eq!(f.inv(&2), Some(16002));
    }

    #[test]
    fn errors() {
        let a = FieldElement::fp(3, 7).unwrap();
        let z = FieldElement::fp(0, 7).unwrap();
        assert!(matches!(field_arith(&a, &z, ArithOp::Div), Err(Error::DivisionByZero)));
        let q = FieldElement::rational(1, 2).unwrap();
        assert!(matches!(field_arith(&a, &q, ArithOp::Add), Err(Error::FieldMismatch(..))));
        let b = FieldElement::fp(3, 11).unwrap();
        assert!(field_arith(&a, &b, ArithOp::Add).is_err());
        assert!(PrimeField::new(32004).is_err());
    }

    #[test]
    fn canonical_rationals() {
        let x = FieldElement::rational(2, -4).unwrap();
        let y = FieldElement::rational(-1, 2).unwrap();
        assert_eq!(x, y);
        if let FieldElement::Q(q) = x {
            assert!(q.denom().is_positive());
        }
    }
}
