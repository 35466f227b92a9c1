//! Dense univariate polynomials over a [`Field`].

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::field::{is_prime_big, Field, FieldElement};

/// Polynomial degree; the zero polynomial has degree `MinusInfinity`, which
/// orders below every finite degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    MinusInfinity,
    Finite(u64),
}

impl Degree {
    pub fn finite(self) -> Option<u64> {
        match self {
            Degree::Finite(d) => Some(d),
            Degree::MinusInfinity => None,
        }
    }

    pub fn as_i64(self) -> Option<i64> {
        self.finite().map(|d| d as i64)
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Degree::Finite(_))
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::MinusInfinity => write!(f, "-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// Degree valuation `|num/den| = rho^(-exponent)` with `exponent = deg num - deg den`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Valuation {
    MinusInfinity,
    Exponent(i64),
}

/// `deg num - deg den`, or `MinusInfinity` when `num` is zero.
pub fn degree_valuation(num: &UniPoly, den: &UniPoly) -> Result<Valuation> {
    let d = den.degree().finite().ok_or(Error::DivisionByZero)?;
    if num.field != den.field {
        return Err(Error::MixedFields);
    }
    Ok(match num.degree() {
        Degree::MinusInfinity => Valuation::MinusInfinity,
        Degree::Finite(n) => Valuation::Exponent(n as i64 - d as i64),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UniPoly {
    field: Field,
    coeffs: Vec<FieldElement>,
}

impl UniPoly {
    pub fn zero(field: Field) -> Self {
        UniPoly {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: Field) -> Self {
        Self::constant(field, field.one())
    }

    pub fn x(field: Field) -> Self {
        Self::monomial(field, field.one(), 1)
    }

    pub fn constant(field: Field, c: FieldElement) -> Self {
        Self::from_coeffs(field, vec![c])
    }

    pub fn monomial(field: Field, c: FieldElement, deg: usize) -> Self {
        let mut coeffs = vec![field.zero(); deg + 1];
        coeffs[deg] = c;
        Self::from_coeffs(field, coeffs)
    }

    /// Coefficients lowest degree first; trailing zeros are dropped.
    pub fn from_coeffs(field: Field, coeffs: Vec<FieldElement>) -> Self {
        debug_assert!(coeffs.iter().all(|c| field.contains(c)));
        let mut p = UniPoly { field, coeffs };
        p.normalize();
        p
    }

    pub fn from_i64s(field: Field, coeffs: &[i64]) -> Self {
        Self::from_coeffs(field, coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::MinusInfinity,
            n => Degree::Finite(n as u64 - 1),
        }
    }

    /// Degree as `usize`; `None` for zero.
    pub fn deg(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lc(&self) -> FieldElement {
        self.coeffs.last().cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == self.field.one()
    }

    /// True for constants, including zero.
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_monic(&self) -> bool {
        self.lc() == self.field.one()
    }

    fn same_field(&self, other: &UniPoly) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::MixedFields)
        }
    }

    pub fn checked_add(&self, other: &UniPoly) -> Result<UniPoly> {
        self.same_field(other)?;
        Ok(self + other)
    }

    pub fn checked_sub(&self, other: &UniPoly) -> Result<UniPoly> {
        self.same_field(other)?;
        Ok(self - other)
    }

    pub fn checked_mul(&self, other: &UniPoly) -> Result<UniPoly> {
        self.same_field(other)?;
        Ok(self * other)
    }

    pub fn scale(&self, c: &FieldElement) -> UniPoly {
        if c.is_zero() {
            return UniPoly::zero(self.field);
        }
        let f = self.field;
        UniPoly {
            field: f,
            coeffs: self.coeffs.iter().map(|a| f.mul(a, c)).collect(),
        }
    }

    /// Multiplies by `X^k`.
    pub fn shift(&self, k: usize) -> UniPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![self.field.zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UniPoly {
            field: self.field,
            coeffs,
        }
    }

    /// Monic associate; zero stays zero.
    pub fn monic(&self) -> UniPoly {
        if self.is_zero() || self.is_monic() {
            return self.clone();
        }
        let inv = self.field.inv(&self.lc()).expect("nonzero leading coefficient");
        self.scale(&inv)
    }

    pub fn pow(&self, mut e: u64) -> UniPoly {
        let mut acc = UniPoly::one(self.field);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn eval(&self, x: &FieldElement) -> FieldElement {
        let f = self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(f.zero(), |acc, c| f.add(&f.mul(&acc, x), c))
    }

    pub fn derivative(&self) -> UniPoly {
        let f = self.field;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| f.mul(c, &f.from_i64(i as i64)))
            .collect();
        UniPoly::from_coeffs(f, coeffs)
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn divmod(&self, divisor: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        self.same_field(divisor)?;
        let dd = divisor.deg().ok_or(Error::DivisionByZero)?;
        let f = self.field;
        let mut rem = self.coeffs.clone();
        let n = match self.deg() {
            Some(n) if n >= dd => n,
            _ => return Ok((UniPoly::zero(f), self.clone())),
        };
        let inv_lc = f.inv(&divisor.lc())?;
        let mut quot = vec![f.zero(); n - dd + 1];
        for i in (0..=n - dd).rev() {
            let c = f.mul(&rem[i + dd], &inv_lc);
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = f.sub(&rem[i + j], &f.mul(&c, dc));
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        Ok((UniPoly::from_coeffs(f, quot), UniPoly::from_coeffs(f, rem)))
    }

    pub fn rem(&self, divisor: &UniPoly) -> Result<UniPoly> {
        Ok(self.divmod(divisor)?.1)
    }

    /// Quotient when `divisor` divides `self` exactly.
    pub fn div_exact(&self, divisor: &UniPoly) -> Option<UniPoly> {
        match self.divmod(divisor) {
            Ok((q, r)) if r.is_zero() => Some(q),
            _ => None,
        }
    }

    pub fn divides(&self, other: &UniPoly) -> bool {
        !self.is_zero() && other.div_exact(self).is_some()
    }

    /// Monic gcd by the Euclidean algorithm.
    pub fn gcd(&self, other: &UniPoly) -> Result<UniPoly> {
        self.same_field(other)?;
        if self.is_zero() && other.is_zero() {
            return Err(Error::BothZero);
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// Returns `(g, s, t)` with `g = s*self + t*other` and `g` monic.
    pub fn ext_gcd(&self, other: &UniPoly) -> Result<(UniPoly, UniPoly, UniPoly)> {
        self.same_field(other)?;
        if self.is_zero() && other.is_zero() {
            return Err(Error::BothZero);
        }
        let f = self.field;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (UniPoly::one(f), UniPoly::zero(f));
        let (mut t0, mut t1) = (UniPoly::zero(f), UniPoly::one(f));
        while !r1.is_zero() {
            let (q, r) = r0.divmod(&r1)?;
            let s2 = &s0 - &(&q * &s1);
            let t2 = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        let inv = f.inv(&r0.lc())?;
        Ok((r0.scale(&inv), s0.scale(&inv), t0.scale(&inv)))
    }

    pub fn mul_mod(&self, other: &UniPoly, modulus: &UniPoly) -> UniPoly {
        (self * other).rem(modulus).expect("nonzero modulus")
    }

    /// `self^e mod modulus` for an arbitrary-precision exponent.
    pub fn pow_mod(&self, e: &BigUint, modulus: &UniPoly) -> UniPoly {
        let mut acc = UniPoly::one(self.field).rem(modulus).expect("nonzero modulus");
        let base = self.rem(modulus).expect("nonzero modulus");
        for i in (0..e.bits()).rev() {
            acc = acc.mul_mod(&acc, modulus);
            if e.bit(i) {
                acc = acc.mul_mod(&base, modulus);
            }
        }
        acc
    }

    /// Canonical order: degree first, then coefficients from the top down.
    pub fn canonical_cmp(&self, other: &UniPoly) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            for (a, b) in self.coeffs.iter().rev().zip(other.coeffs.iter().rev()) {
                match self.field.cmp_elements(a, b) {
                    Ordering::Equal => continue,
                    o => return o,
                }
            }
            Ordering::Equal
        })
    }

    /// Over Q: the primitive integer polynomial associated to `self` together
    /// with the rational `c` such that `self = c * primitive`. The primitive
    /// part has positive leading coefficient.
    pub fn to_primitive_integer(&self) -> Result<(num_rational::BigRational, Vec<BigInt>)> {
        if self.field != Field::Rationals {
            return Err(Error::WrongField { expected: "the rationals" });
        }
        if self.is_zero() {
            return Err(Error::ZeroInput);
        }
        let rats: Vec<_> = self.coeffs.iter().map(|c| c.as_rational().unwrap().clone()).collect();
        let lcm = rats.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
        let ints: Vec<BigInt> = rats.iter().map(|r| r.numer() * (&lcm / r.denom())).collect();
        let mut content = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
        if ints.last().unwrap().is_negative() {
            content = -content;
        }
        let prim = ints.iter().map(|v| v / &content).collect();
        Ok((num_rational::BigRational::new(content, lcm), prim))
    }

    /// Over Q: the polynomial with the given integer coefficients.
    pub fn from_integers(coeffs: &[BigInt]) -> UniPoly {
        let f = Field::Rationals;
        UniPoly::from_coeffs(f, coeffs.iter().map(|c| f.from_bigint(c)).collect())
    }

    /// Text form in the variable `var`, highest degree first.
    pub fn to_text(&self, var: &str) -> String {
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (c.clone(), vec![(var.to_string(), i as u64)]));
        format_terms(self.field, terms)
    }
}

/// Formats a sum of terms `coeff * var1^e1 * ...`, in the given order.
pub(crate) fn format_terms(
    field: Field,
    terms: impl Iterator<Item = (FieldElement, Vec<(String, u64)>)>,
) -> String {
    let mut out = String::new();
    for (c, vars) in terms {
        let monomial: Vec<String> = vars
            .iter()
            .filter(|(_, e)| *e > 0)
            .map(|(v, e)| if *e == 1 { v.clone() } else { format!("{v}^{e}") })
            .collect();
        let (negative, mag) = match &c {
            FieldElement::Rational(r) if r.is_negative() => (true, FieldElement::Rational(-r)),
            _ => (false, c.clone()),
        };
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let unit = mag == field.one();
        if monomial.is_empty() {
            out.push_str(&mag.to_string());
        } else if unit {
            out.push_str(&monomial.join("*"));
        } else {
            out.push_str(&format!("{mag}*{}", monomial.join("*")));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text("X"))
    }
}

fn zip_with(a: &UniPoly, b: &UniPoly, op: impl Fn(&FieldElement, &FieldElement) -> FieldElement) -> UniPoly {
    assert_eq!(a.field, b.field, "mixed fields");
    let f = a.field;
    let zero = f.zero();
    let n = a.coeffs.len().max(b.coeffs.len());
    let coeffs = (0..n)
        .map(|i| op(a.coeffs.get(i).unwrap_or(&zero), b.coeffs.get(i).unwrap_or(&zero)))
        .collect();
    UniPoly::from_coeffs(f, coeffs)
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let f = self.field;
        zip_with(self, rhs, |x, y| f.add(x, y))
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let f = self.field;
        zip_with(self, rhs, |x, y| f.sub(x, y))
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        let f = self.field;
        UniPoly {
            field: f,
            coeffs: self.coeffs.iter().map(|c| f.neg(c)).collect(),
        }
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        assert_eq!(self.field, rhs.field, "mixed fields");
        let f = self.field;
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero(f);
        }
        if let Field::Prime(p) = f {
            let mut acc = vec![0u64; self.coeffs.len() + rhs.coeffs.len() - 1];
            for (i, a) in self.coeffs.iter().enumerate() {
                let a = a.as_residue().unwrap();
                if a == 0 {
                    continue;
                }
                for (j, b) in rhs.coeffs.iter().enumerate() {
                    acc[i + j] = (acc[i + j] + a * b.as_residue().unwrap()) % p;
                }
            }
            return UniPoly::from_coeffs(f, acc.into_iter().map(FieldElement::Residue).collect());
        }
        let mut acc = vec![f.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                acc[i + j] = f.add(&acc[i + j], &f.mul(a, b));
            }
        }
        UniPoly::from_coeffs(f, acc)
    }
}

impl Add for UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: UniPoly) -> UniPoly {
        &self + &rhs
    }
}

impl Sub for UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: UniPoly) -> UniPoly {
        &self - &rhs
    }
}

impl Mul for UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: UniPoly) -> UniPoly {
        &self * &rhs
    }
}

/// Eisenstein's criterion at `prime`, applied to the primitive integer
/// polynomial obtained from `f` by clearing denominators.
pub fn eisenstein_check(f: &UniPoly, prime: &BigInt) -> Result<bool> {
    if f.field() != Field::Rationals {
        return Err(Error::WrongField { expected: "the rationals" });
    }
    if !is_prime_big(prime) {
        return Err(Error::NotPrime(prime.to_string()));
    }
    if f.is_constant() {
        return Err(Error::ConstantInput);
    }
    let (_, ints) = f.to_primitive_integer()?;
    let (lead, rest) = ints.split_last().unwrap();
    let divides = |v: &BigInt| (v % prime).is_zero();
    let p2 = prime * prime;
    Ok(!divides(lead) && rest.iter().all(divides) && !(&ints[0] % &p2).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const Q: Field = Field::Rationals;

    fn qp(c: &[i64]) -> UniPoly {
        UniPoly::from_i64s(Q, c)
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(&qp(&[1, 1]) * &qp(&[1, 1]), qp(&[1, 2, 1]));
        let (q, r) = qp(&[-1, 0, 1]).divmod(&qp(&[-1, 1])).unwrap();
        assert_eq!((q, r), (qp(&[1, 1]), UniPoly::zero(Q)));
        let gf2 = Field::Prime(2);
        let x1 = UniPoly::from_i64s(gf2, &[1, 1]);
        assert_eq!(&x1 * &x1, UniPoly::from_i64s(gf2, &[1, 0, 1]));
    }

    #[test]
    fn arithmetic_errors() {
        assert_eq!(qp(&[1, 1]).divmod(&UniPoly::zero(Q)), Err(Error::DivisionByZero));
        let other = UniPoly::from_i64s(Field::Prime(3), &[1, 1]);
        assert_eq!(qp(&[1]).checked_add(&other), Err(Error::MixedFields));
        assert_eq!(qp(&[1]).divmod(&other), Err(Error::MixedFields));
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(qp(&[-1, 0, 1]).gcd(&qp(&[0, -1, 1])).unwrap(), qp(&[-1, 1]));
        let f = qp(&[4, 0, 2]);
        assert_eq!(f.gcd(&UniPoly::zero(Q)).unwrap(), qp(&[2, 0, 1]));
        assert_eq!(qp(&[1, 0, 1]).gcd(&qp(&[1, 1])).unwrap(), qp(&[1]));
        assert_eq!(UniPoly::zero(Q).gcd(&UniPoly::zero(Q)), Err(Error::BothZero));
    }

    #[test]
    fn ext_gcd_identity() {
        let a = qp(&[-1, 0, 0, 1]);
        let b = qp(&[-1, 0, 1]);
        let (g, s, t) = a.ext_gcd(&b).unwrap();
        assert_eq!(g, qp(&[-1, 1]));
        assert_eq!(&(&s * &a) + &(&t * &b), g);
    }

    #[test]
    fn eisenstein_examples() {
        let five = BigInt::from(5);
        assert!(eisenstein_check(&qp(&[5, 5, 0, 0, 1]), &five).unwrap());
        assert!(!eisenstein_check(&qp(&[1, 0, 1]), &five).unwrap());
        assert!(eisenstein_check(&qp(&[2, 4, 1]), &BigInt::from(2)).unwrap());
        // content is removed before testing: 3X^2 + 6X + 6 = 3(X^2 + 2X + 2)
        assert!(eisenstein_check(&qp(&[6, 6, 3]), &BigInt::from(2)).unwrap());
        // 4 | constant term
        assert!(!eisenstein_check(&qp(&[4, 2, 1]), &BigInt::from(2)).unwrap());
        assert_eq!(eisenstein_check(&qp(&[2, 4, 1]), &BigInt::from(4)), Err(Error::NotPrime("4".into())));
        assert_eq!(eisenstein_check(&qp(&[3]), &five), Err(Error::ConstantInput));
        let half = UniPoly::from_coeffs(
            Q,
            vec![Q.parse_element("5/2").unwrap(), Q.parse_element("5/2").unwrap(), Q.parse_element("1/2").unwrap()],
        );
        assert!(eisenstein_check(&half, &five).unwrap());
    }

    #[test]
    fn valuation_examples() {
        let one = qp(&[1]);
        assert_eq!(degree_valuation(&qp(&[1, 0, 1]), &one).unwrap(), Valuation::Exponent(2));
        assert_eq!(degree_valuation(&qp(&[7]), &one).unwrap(), Valuation::Exponent(0));
        assert_eq!(degree_valuation(&qp(&[0, 1, 0, 1]), &qp(&[-1, 1])).unwrap(), Valuation::Exponent(2));
        assert_eq!(degree_valuation(&UniPoly::zero(Q), &one).unwrap(), Valuation::MinusInfinity);
        assert_eq!(degree_valuation(&one, &UniPoly::zero(Q)), Err(Error::DivisionByZero));
    }

    #[test]
    fn degree_ordering() {
        assert!(Degree::MinusInfinity < Degree::Finite(0));
        assert_eq!(UniPoly::zero(Q).degree(), Degree::MinusInfinity);
        assert_eq!(qp(&[3]).degree(), Degree::Finite(0));
    }

    #[test]
    fn text_form() {
        assert_eq!(qp(&[5, 5, 0, 0, 1]).to_string(), "X^4 + 5*X + 5");
        assert_eq!(qp(&[-6, -5, -1]).to_string(), "-X^2 - 5*X - 6");
        assert_eq!(UniPoly::zero(Q).to_string(), "0");
        let r = UniPoly::from_coeffs(Q, vec![Q.one(), Q.zero(), Q.parse_element("-2/3").unwrap()]);
        assert_eq!(r.to_string(), "-2/3*X^2 + 1");
    }

    fn arb_poly(field: Field) -> impl Strategy<Value = UniPoly> {
        prop::collection::vec(-20i64..20, 0..7).prop_map(move |c| UniPoly::from_i64s(field, &c))
    }

    fn arb_pair() -> impl Strategy<Value = (UniPoly, UniPoly, UniPoly, UniPoly)> {
        prop_oneof![Just(Q), Just(Field::Prime(2)), Just(Field::Prime(7))]
            .prop_flat_map(|f| (arb_poly(f), arb_poly(f), arb_poly(f), arb_poly(f)))
    }

    proptest! {
        #[test]
        fn degree_is_additive((a, b, _, _) in arb_pair()) {
            if !a.is_zero() && !b.is_zero() {
                let prod = &a * &b;
                prop_assert_eq!(prod.deg().unwrap(), a.deg().unwrap() + b.deg().unwrap());
            }
        }

        #[test]
        fn divmod_reconstructs((a, b, _, _) in arb_pair()) {
            if !b.is_zero() {
                let (q, r) = a.divmod(&b).unwrap();
                prop_assert_eq!(&(&q * &b) + &r, a);
                prop_assert!(r.degree() < b.degree());
            }
        }

        #[test]
        fn gcd_divides_both((a, b, c, _) in arb_pair()) {
            let (a, b) = (&a * &c, &b * &c);
            if !(a.is_zero() && b.is_zero()) {
                let g = a.gcd(&b).unwrap();
                prop_assert!(g.is_monic());
                prop_assert!(g.divides(&a) || a.is_zero());
                prop_assert!(g.divides(&b) || b.is_zero());
                if !c.is_zero() {
                    prop_assert!(c.divides(&g));
                }
            }
        }

        #[test]
        fn valuation_is_multiplicative((a, b, c, d) in arb_pair()) {
            if !b.is_zero() && !d.is_zero() && !a.is_zero() && !c.is_zero() {
                let lhs = degree_valuation(&(&a * &c), &(&b * &d)).unwrap();
                let (Valuation::Exponent(x), Valuation::Exponent(y)) =
                    (degree_valuation(&a, &b).unwrap(), degree_valuation(&c, &d).unwrap()) else { unreachable!() };
                prop_assert_eq!(lhs, Valuation::Exponent(x + y));
            }
        }

        #[test]
        fn valuation_is_ultrametric((a, b, _, _) in arb_pair()) {
            let one = UniPoly::one(a.field());
            let va = degree_valuation(&a, &one).unwrap();
            let vb = degree_valuation(&b, &one).unwrap();
            let vs = degree_valuation(&(&a + &b), &one).unwrap();
            prop_assert!(vs <= va.max(vb));
            if va != vb {
                prop_assert_eq!(vs, va.max(vb));
            }
            if !a.is_zero() {
                prop_assert!(va >= Valuation::Exponent(0));
            }
        }
    }
}
