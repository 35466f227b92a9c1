//! Coefficient fields: the rationals and prime fields GF(p).
//!
//! A [`Field`] is a small `Copy` context; elements are [`FieldElement`]
//! values that are only meaningful together with the field that made them.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest modulus accepted for GF(p). Residue products must fit in a `u64`.
pub const MAX_MODULUS: u64 = u32::MAX as u64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldKind {
    Rationals,
    PrimeField,
}

/// Textual description of a field, `Q` or `GF(p)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldDescriptor {
    pub kind: FieldKind,
    pub p: Option<BigUint>,
}

impl FieldDescriptor {
    pub fn rationals() -> Self {
        FieldDescriptor {
            kind: FieldKind::Rationals,
            p: None,
        }
    }

    pub fn prime(p: u64) -> Self {
        FieldDescriptor {
            kind: FieldKind::PrimeField,
            p: Some(BigUint::from(p)),
        }
    }
}

impl FromStr for FieldDescriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t == "Q" {
            return Ok(FieldDescriptor::rationals());
        }
        let inner = t
            .strip_prefix("GF(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::InvalidDescriptor(format!("expected `Q` or `GF(p)`, got `{t}`")))?;
        let inner = inner.trim();
        if inner.is_empty() || !inner.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::InvalidDescriptor(format!(
                "modulus `{inner}` is not a decimal integer"
            )));
        }
        let p: BigUint = inner
            .parse()
            .map_err(|_| Error::InvalidDescriptor(format!("bad modulus `{inner}`")))?;
        Ok(FieldDescriptor {
            kind: FieldKind::PrimeField,
            p: Some(p),
        })
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.kind, &self.p) {
            (FieldKind::Rationals, _) => write!(f, "Q"),
            (FieldKind::PrimeField, Some(p)) => write!(f, "GF({p})"),
            (FieldKind::PrimeField, None) => write!(f, "GF(?)"),
        }
    }
}

/// Deterministic primality by trial division.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n % 2 == 0 {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Deterministic primality for arbitrary-precision integers (trial division).
pub fn is_prime_big(n: &BigInt) -> bool {
    if let Some(v) = n.to_u64() {
        return is_prime_u64(v);
    }
    if n.is_negative() || n.is_even() {
        return false;
    }
    let mut d = BigInt::from(3);
    while &d * &d <= *n {
        if (n % &d).is_zero() {
            return false;
        }
        d += 2;
    }
    true
}

/// The coefficient field context.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Field {
    Rationals,
    Prime(u64),
}

/// An element of a [`Field`], always in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FieldElement {
    Rational(BigRational),
    Residue(u64),
}

impl FieldElement {
    pub fn is_zero(&self) -> bool {
        match self {
            FieldElement::Rational(r) => r.is_zero(),
            FieldElement::Residue(v) => *v == 0,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            FieldElement::Rational(r) => Some(r),
            FieldElement::Residue(_) => None,
        }
    }

    pub fn as_residue(&self) -> Option<u64> {
        match self {
            FieldElement::Residue(v) => Some(*v),
            FieldElement::Rational(_) => None,
        }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElement::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            FieldElement::Residue(v) => write!(f, "{v}"),
        }
    }
}

impl Field {
    /// Builds a context from a descriptor, verifying primality of `p`.
    pub fn new(desc: &FieldDescriptor) -> Result<Field> {
        match desc.kind {
            FieldKind::Rationals => {
                if desc.p.is_some() {
                    return Err(Error::InvalidDescriptor("Q takes no modulus".into()));
                }
                Ok(Field::Rationals)
            }
            FieldKind::PrimeField => {
                let p = desc
                    .p
                    .as_ref()
                    .ok_or_else(|| Error::InvalidDescriptor("GF(p) needs a modulus".into()))?;
                let small = p.to_u64().filter(|v| *v <= MAX_MODULUS).ok_or_else(|| {
                    Error::InvalidDescriptor(format!("modulus {p} exceeds {MAX_MODULUS}"))
                })?;
                if small < 2 {
                    return Err(Error::InvalidDescriptor(format!("modulus {small} < 2")));
                }
                if !is_prime_u64(small) {
                    return Err(Error::CompositeModulus(small.to_string()));
                }
                Ok(Field::Prime(small))
            }
        }
    }

    /// Shorthand for `GF(p)`; errors as [`Field::new`].
    pub fn prime(p: u64) -> Result<Field> {
        Field::new(&FieldDescriptor::prime(p))
    }

    pub fn descriptor(&self) -> FieldDescriptor {
        match self {
            Field::Rationals => FieldDescriptor::rationals(),
            Field::Prime(p) => FieldDescriptor::prime(*p),
        }
    }

    /// 0 for the rationals.
    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => *p,
        }
    }

    pub fn is_prime_field(&self) -> bool {
        matches!(self, Field::Prime(_))
    }

    pub fn zero(&self) -> FieldElement {
        match self {
            Field::Rationals => FieldElement::Rational(BigRational::zero()),
            Field::Prime(_) => FieldElement::Residue(0),
        }
    }

    pub fn one(&self) -> FieldElement {
        match self {
            Field::Rationals => FieldElement::Rational(BigRational::one()),
            Field::Prime(_) => FieldElement::Residue(1),
        }
    }

    pub fn from_i64(&self, v: i64) -> FieldElement {
        self.from_bigint(&BigInt::from(v))
    }

    pub fn from_bigint(&self, v: &BigInt) -> FieldElement {
        match self {
            Field::Rationals => FieldElement::Rational(BigRational::from_integer(v.clone())),
            Field::Prime(p) => {
                let r = v.mod_floor(&BigInt::from(*p));
                FieldElement::Residue(r.to_u64().expect("residue fits"))
            }
        }
    }

    /// `num/den` as a field element; `den` must be nonzero in the field.
    pub fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<FieldElement> {
        match self {
            Field::Rationals => {
                if den.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                Ok(FieldElement::Rational(BigRational::new(num.clone(), den.clone())))
            }
            Field::Prime(_) => {
                let d = self.from_bigint(den);
                let inv = self.inv(&d)?;
                Ok(self.mul(&self.from_bigint(num), &inv))
            }
        }
    }

    /// Rejects elements that belong to the other kind of field or are out of range.
    pub fn contains(&self, a: &FieldElement) -> bool {
        match (self, a) {
            (Field::Rationals, FieldElement::Rational(_)) => true,
            (Field::Prime(p), FieldElement::Residue(v)) => v < p,
            _ => false,
        }
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        match (self, a, b) {
            (Field::Rationals, FieldElement::Rational(x), FieldElement::Rational(y)) => {
                FieldElement::Rational(x + y)
            }
            (Field::Prime(p), FieldElement::Residue(x), FieldElement::Residue(y)) => {
                FieldElement::Residue((x + y) % p)
            }
            _ => panic!("field element does not belong to {self:?}"),
        }
    }

    pub fn neg(&self, a: &FieldElement) -> FieldElement {
        match (self, a) {
            (Field::Rationals, FieldElement::Rational(x)) => FieldElement::Rational(-x),
            (Field::Prime(p), FieldElement::Residue(x)) => {
                FieldElement::Residue(if *x == 0 { 0 } else { p - x })
            }
            _ => panic!("field element does not belong to {self:?}"),
        }
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        match (self, a, b) {
            (Field::Rationals, FieldElement::Rational(x), FieldElement::Rational(y)) => {
                FieldElement::Rational(x * y)
            }
            (Field::Prime(p), FieldElement::Residue(x), FieldElement::Residue(y)) => {
                FieldElement::Residue(x * y % p)
            }
            _ => panic!("field element does not belong to {self:?}"),
        }
    }

    pub fn inv(&self, a: &FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match (self, a) {
            (Field::Rationals, FieldElement::Rational(x)) => FieldElement::Rational(x.recip()),
            (Field::Prime(p), FieldElement::Residue(x)) => {
                FieldElement::Residue(pow_mod_u64(*x, p - 2, *p))
            }
            _ => panic!("field element does not belong to {self:?}"),
        })
    }

    pub fn div(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    pub fn pow(&self, a: &FieldElement, mut e: u64) -> FieldElement {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// All elements of a prime field in residue order; `None` for the rationals.
    pub fn elements(&self) -> Option<impl Iterator<Item = FieldElement>> {
        match self {
            Field::Rationals => None,
            Field::Prime(p) => Some((0..*p).map(FieldElement::Residue)),
        }
    }

    /// Symmetric representative in `(-p/2, p/2]` for residues, the value itself
    /// for rationals.
    pub fn symmetric(&self, a: &FieldElement) -> BigRational {
        match (self, a) {
            (Field::Rationals, FieldElement::Rational(x)) => x.clone(),
            (Field::Prime(p), FieldElement::Residue(x)) => {
                let v = if *x > p / 2 {
                    -((p - x) as i64)
                } else {
                    *x as i64
                };
                BigRational::from_integer(BigInt::from(v))
            }
            _ => panic!("field element does not belong to {self:?}"),
        }
    }

    /// Total order used for canonical sorting: residues by value, rationals numerically.
    pub fn cmp_elements(&self, a: &FieldElement, b: &FieldElement) -> Ordering {
        match (a, b) {
            (FieldElement::Rational(x), FieldElement::Rational(y)) => x.cmp(y),
            (FieldElement::Residue(x), FieldElement::Residue(y)) => x.cmp(y),
            _ => panic!("mixed field elements"),
        }
    }

    /// Parses `n` or `n/d` (the latter only over Q).
    pub fn parse_element(&self, s: &str) -> Result<FieldElement> {
        let t = s.trim();
        let bad = || Error::InvalidDescriptor(format!("bad field element `{t}`"));
        let (num, den) = match t.split_once('/') {
            Some((n, d)) => {
                if self.is_prime_field() {
                    return Err(bad());
                }
                (n.trim().parse::<BigInt>().map_err(|_| bad())?, d.trim().parse::<BigInt>().map_err(|_| bad())?)
            }
            None => (t.parse::<BigInt>().map_err(|_| bad())?, BigInt::one()),
        };
        if den.sign() == Sign::Minus {
            return Err(bad());
        }
        self.from_ratio(&num, &den)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

pub(crate) fn pow_mod_u64(mut base: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        e >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> FieldElement {
        FieldElement::Rational(BigRational::new(n.into(), d.into()))
    }

    #[test]
    fn make_contexts() {
        assert_eq!(Field::prime(5).unwrap(), Field::Prime(5));
        assert_eq!(Field::prime(6), Err(Error::CompositeModulus("6".into())));
        assert!(matches!(Field::prime(1), Err(Error::InvalidDescriptor(_))));
        assert_eq!(Field::new(&FieldDescriptor::rationals()).unwrap(), Field::Rationals);
    }

    #[test]
    fn descriptor_text() {
        let d: FieldDescriptor = "GF(7)".parse().unwrap();
        assert_eq!(Field::new(&d).unwrap(), Field::Prime(7));
        assert_eq!(d.to_string(), "GF(7)");
        assert_eq!("Q".parse::<FieldDescriptor>().unwrap().to_string(), "Q");
        assert!("GF(x)".parse::<FieldDescriptor>().is_err());
        assert!("R".parse::<FieldDescriptor>().is_err());
        let huge: FieldDescriptor = "GF(18446744073709551629)".parse().unwrap();
        assert!(matches!(Field::new(&huge), Err(Error::InvalidDescriptor(_))));
    }

    #[test]
    fn small_field_arith() {
        let f = Field::prime(5).unwrap();
        let r = FieldElement::Residue;
        assert_eq!(f.add(&r(3), &r(4)), r(2));
        assert_eq!(f.inv(&r(2)).unwrap(), r(3));
        assert_eq!(f.inv(&r(0)), Err(Error::DivisionByZero));
        assert_eq!(f.neg(&r(0)), r(0));
        let qf = Field::Rationals;
        assert_eq!(qf.add(&q(1, 2), &q(1, 3)), q(5, 6));
        assert_eq!(qf.inv(&q(-2, 3)).unwrap(), q(-3, 2));
    }

    #[test]
    fn canonical_rationals() {
        let qf = Field::Rationals;
        let a = qf.from_ratio(&BigInt::from(4), &BigInt::from(-6)).unwrap();
        let r = a.as_rational().unwrap();
        assert_eq!(r.numer(), &BigInt::from(-2));
        assert_eq!(r.denom(), &BigInt::from(3));
        let z = qf.sub(&q(1, 7), &q(1, 7));
        assert_eq!(z.as_rational().unwrap().denom(), &BigInt::one());
    }

    #[test]
    fn primality() {
        let primes: Vec<u64> = (0..50).filter(|&n| is_prime_u64(n)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]);
        assert!(is_prime_u64(999_983));
        assert!(!is_prime_u64(999_981));
        assert!(is_prime_big(&BigInt::from(1_000_000_007u64)));
    }

    fn arb_field() -> impl Strategy<Value = Field> {
        prop_oneof![
            Just(Field::Rationals),
            Just(Field::Prime(2)),
            Just(Field::Prime(3)),
            Just(Field::Prime(101)),
            Just(Field::Prime(4_294_967_291)),
        ]
    }

    fn elem(f: Field, n: i64, d: i64) -> FieldElement {
        match f {
            Field::Rationals => q(n, d),
            Field::Prime(_) => f.from_i64(n),
        }
    }

    proptest! {
        #[test]
        fn field_axioms(f in arb_field(), a in -50i64..50, ad in 1i64..9, b in -50i64..50, bd in 1i64..9, c in -50i64..50) {
            let (a, b, c) = (elem(f, a, ad), elem(f, b, bd), elem(f, c, 1));
            prop_assert_eq!(f.add(&f.add(&a, &b), &c), f.add(&a, &f.add(&b, &c)));
            prop_assert_eq!(f.mul(&f.mul(&a, &b), &c), f.mul(&a, &f.mul(&b, &c)));
            prop_assert_eq!(f.add(&a, &b), f.add(&b, &a));
            prop_assert_eq!(f.mul(&a, &b), f.mul(&b, &a));
            prop_assert_eq!(f.mul(&a, &f.add(&b, &c)), f.add(&f.mul(&a, &b), &f.mul(&a, &c)));
            prop_assert!(f.add(&a, &f.neg(&a)).is_zero());
            if !a.is_zero() {
                prop_assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), f.one());
            }
        }

        #[test]
        fn element_text_round_trip(f in arb_field(), n in -1000i64..1000, d in 1i64..50) {
            let a = elem(f, n, d);
            prop_assert_eq!(f.parse_element(&a.to_string()).unwrap(), a);
        }
    }
}
