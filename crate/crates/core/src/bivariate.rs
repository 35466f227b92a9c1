//! Polynomials in `Y` with coefficients in `K[X]`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::uni::{format_terms, Degree, UniPoly};

/// `a_0(X) + a_1(X) Y + ... + a_d(X) Y^d`, stored as `[a_0, ..., a_d]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BiPoly {
    field: Field,
    ycoeffs: Vec<UniPoly>,
}

impl BiPoly {
    pub fn zero(field: Field) -> Self {
        BiPoly {
            field,
            ycoeffs: Vec::new(),
        }
    }

    pub fn one(field: Field) -> Self {
        Self::from_uni(UniPoly::one(field))
    }

    /// The polynomial `Y`.
    pub fn y(field: Field) -> Self {
        Self::from_ycoeffs(field, vec![UniPoly::zero(field), UniPoly::one(field)])
    }

    pub fn from_uni(c: UniPoly) -> Self {
        let field = c.field();
        Self::from_ycoeffs(field, vec![c])
    }

    pub fn from_ycoeffs(field: Field, ycoeffs: Vec<UniPoly>) -> Self {
        assert!(ycoeffs.iter().all(|c| c.field() == field), "mixed fields");
        let mut p = BiPoly { field, ycoeffs };
        while p.ycoeffs.last().is_some_and(|c| c.is_zero()) {
            p.ycoeffs.pop();
        }
        p
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ycoeffs(&self) -> &[UniPoly] {
        &self.ycoeffs
    }

    pub fn coeff(&self, i: usize) -> UniPoly {
        self.ycoeffs.get(i).cloned().unwrap_or_else(|| UniPoly::zero(self.field))
    }

    pub fn deg_y(&self) -> Degree {
        match self.ycoeffs.len() {
            0 => Degree::MinusInfinity,
            n => Degree::Finite(n as u64 - 1),
        }
    }

    pub fn dy(&self) -> Option<usize> {
        self.ycoeffs.len().checked_sub(1)
    }

    /// Maximum X-degree over all coefficients.
    pub fn deg_x(&self) -> Degree {
        self.ycoeffs.iter().map(|c| c.degree()).max().unwrap_or(Degree::MinusInfinity)
    }

    /// Leading coefficient in `Y`.
    pub fn lc_y(&self) -> UniPoly {
        self.ycoeffs.last().cloned().unwrap_or_else(|| UniPoly::zero(self.field))
    }

    pub fn is_zero(&self) -> bool {
        self.ycoeffs.is_empty()
    }

    pub fn scale(&self, c: &UniPoly) -> BiPoly {
        BiPoly::from_ycoeffs(self.field, self.ycoeffs.iter().map(|a| a * c).collect())
    }

    pub fn scale_elem(&self, c: &FieldElement) -> BiPoly {
        BiPoly::from_ycoeffs(self.field, self.ycoeffs.iter().map(|a| a.scale(c)).collect())
    }

    pub fn pow(&self, mut e: u64) -> BiPoly {
        let mut acc = BiPoly::one(self.field);
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

    /// Specializes `Y` to a field element.
    pub fn eval_y(&self, y: &FieldElement) -> UniPoly {
        let f = self.field;
        self.ycoeffs
            .iter()
            .rev()
            .fold(UniPoly::zero(f), |acc, c| &acc.scale(y) + c)
    }

    /// Substitutes `Y = c(X)`.
    pub fn eval_y_poly(&self, c: &UniPoly) -> UniPoly {
        self.ycoeffs
            .iter()
            .rev()
            .fold(UniPoly::zero(self.field), |acc, a| &(&acc * c) + a)
    }

    /// `H_1`: maximum X-degree of the non-leading Y-coefficients.
    pub fn h1_norm(&self) -> Result<Degree> {
        let d = self.dy().filter(|&d| d >= 1).ok_or(Error::ConstantInY)?;
        Ok(self.ycoeffs[..d]
            .iter()
            .map(|c| c.degree())
            .max()
            .unwrap_or(Degree::MinusInfinity))
    }

    /// `f(X, g(X, Y))`, expanded by Horner's scheme in `g`.
    pub fn compose(&self, g: &BiPoly) -> Result<BiPoly> {
        if self.field != g.field {
            return Err(Error::MixedFields);
        }
        let mut acc = BiPoly::zero(self.field);
        for a in self.ycoeffs.iter().rev() {
            acc = &(&acc * g) + &BiPoly::from_uni(a.clone());
        }
        Ok(acc)
    }

    /// Splits off the Y-content: `self = b * gbar` with `b` the monic gcd of
    /// the Y-coefficients.
    pub fn content_y(&self) -> Result<(UniPoly, BiPoly)> {
        if self.is_zero() {
            return Err(Error::ZeroInput);
        }
        let mut b = UniPoly::zero(self.field);
        for c in &self.ycoeffs {
            b = b.gcd(c).or_else(|_| Ok::<_, Error>(c.monic()))?;
            if b.is_one() {
                break;
            }
        }
        let gbar = BiPoly::from_ycoeffs(
            self.field,
            self.ycoeffs
                .iter()
                .map(|c| c.div_exact(&b).expect("content divides every coefficient"))
                .collect(),
        );
        Ok((b, gbar))
    }

    pub fn is_primitive(&self) -> bool {
        self.content_y().map(|(b, _)| b.is_one()).unwrap_or(false)
    }

    /// Exact quotient in `K[X][Y]`, or `None` if `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &BiPoly) -> Option<BiPoly> {
        let dd = divisor.dy()?;
        if self.field != divisor.field {
            return None;
        }
        let lc = divisor.lc_y();
        let mut rem = self.ycoeffs.clone();
        let n = match self.dy() {
            None => return Some(BiPoly::zero(self.field)),
            Some(n) if n < dd => return None,
            Some(n) => n,
        };
        let mut quot = vec![UniPoly::zero(self.field); n - dd + 1];
        for i in (0..=n - dd).rev() {
            if rem[i + dd].is_zero() {
                continue;
            }
            let c = rem[i + dd].div_exact(&lc)?;
            for (j, dc) in divisor.ycoeffs.iter().enumerate() {
                rem[i + j] = &rem[i + j] - &(&c * dc);
            }
            quot[i] = c;
        }
        if rem.iter().any(|r| !r.is_zero()) {
            return None;
        }
        Some(BiPoly::from_ycoeffs(self.field, quot))
    }

    /// Division with remainder by a divisor whose leading Y-coefficient is a
    /// nonzero constant: `self = q * divisor + r` with `deg_Y r < deg_Y divisor`.
    pub fn divmod_y(&self, divisor: &BiPoly) -> Result<(BiPoly, BiPoly)> {
        if self.field != divisor.field {
            return Err(Error::MixedFields);
        }
        let dd = divisor.dy().ok_or(Error::DivisionByZero)?;
        let lc = divisor.lc_y();
        if !lc.is_constant() {
            return Err(Error::PreconditionViolated(
                "divisor must have a constant leading Y-coefficient".into(),
            ));
        }
        let inv = self.field.inv(&lc.coeff(0))?;
        let mut rem = self.ycoeffs.clone();
        let Some(n) = self.dy().filter(|&n| n >= dd) else {
            return Ok((BiPoly::zero(self.field), self.clone()));
        };
        let mut quot = vec![UniPoly::zero(self.field); n - dd + 1];
        for i in (0..=n - dd).rev() {
            let c = rem[i + dd].scale(&inv);
            for (j, dc) in divisor.ycoeffs.iter().enumerate() {
                rem[i + j] = &rem[i + j] - &(&c * dc);
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        Ok((BiPoly::from_ycoeffs(self.field, quot), BiPoly::from_ycoeffs(self.field, rem)))
    }

    /// Canonical order: Y-degree, X-degree, then all coefficients from the
    /// top (Y-degree, then X-degree, descending) compared by symmetric
    /// representative.
    pub fn canonical_cmp(&self, other: &BiPoly) -> Ordering {
        self.deg_y()
            .cmp(&other.deg_y())
            .then_with(|| self.deg_x().cmp(&other.deg_x()))
            .then_with(|| {
                let width = self.deg_x().finite().unwrap_or(0) as usize + 1;
                let f = self.field;
                for (a, b) in self.ycoeffs.iter().rev().zip(other.ycoeffs.iter().rev()) {
                    for k in (0..width).rev() {
                        match f.symmetric(&a.coeff(k)).cmp(&f.symmetric(&b.coeff(k))) {
                            Ordering::Equal => continue,
                            o => return o,
                        }
                    }
                }
                Ordering::Equal
            })
    }

    /// Text form in `X` and `Y`, ordered by Y-degree then X-degree, descending.
    pub fn to_text(&self) -> String {
        self.to_text_vars("X", "Y")
    }

    pub(crate) fn to_text_vars(&self, x: &str, y: &str) -> String {
        let terms = self.ycoeffs.iter().enumerate().rev().flat_map(|(j, c)| {
            c.coeffs()
                .iter()
                .enumerate()
                .rev()
                .filter(|(_, a)| !a.is_zero())
                .map(move |(i, a)| (a.clone(), vec![(x.to_string(), i as u64), (y.to_string(), j as u64)]))
                .collect::<Vec<_>>()
        });
        format_terms(self.field, terms)
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Resultant with respect to `Y`, by fraction-free (Bareiss) elimination of
/// the Sylvester matrix over `K[X]`.
pub fn resultant_y(a: &BiPoly, b: &BiPoly) -> Result<UniPoly> {
    if a.field != b.field {
        return Err(Error::MixedFields);
    }
    let (Some(m), Some(n)) = (a.dy(), b.dy()) else {
        return Err(Error::ZeroInput);
    };
    let field = a.field;
    if m == 0 {
        return Ok(a.coeff(0).pow(n as u64));
    }
    if n == 0 {
        return Ok(b.coeff(0).pow(m as u64));
    }
    let size = m + n;
    let mut rows: Vec<Vec<UniPoly>> = Vec::with_capacity(size);
    for (poly, deg, shifts) in [(a, m, n), (b, n, m)] {
        for i in 0..shifts {
            let mut row = vec![UniPoly::zero(field); size];
            for k in 0..=deg {
                row[i + k] = poly.coeff(deg - k);
            }
            rows.push(row);
        }
    }
    let mut negate = false;
    let mut prev = UniPoly::one(field);
    for k in 0..size - 1 {
        if rows[k][k].is_zero() {
            match (k + 1..size).find(|&i| !rows[i][k].is_zero()) {
                Some(i) => {
                    rows.swap(k, i);
                    negate = !negate;
                }
                None => return Ok(UniPoly::zero(field)),
            }
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let num = &(&rows[i][j] * &rows[k][k]) - &(&rows[i][k] * &rows[k][j]);
                rows[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
            rows[i][k] = UniPoly::zero(field);
        }
        prev = rows[k][k].clone();
    }
    let det = rows[size - 1][size - 1].clone();
    Ok(if negate { -&det } else { det })
}

fn zip_with(a: &BiPoly, b: &BiPoly, op: impl Fn(&UniPoly, &UniPoly) -> UniPoly) -> BiPoly {
    assert_eq!(a.field, b.field, "mixed fields");
    let zero = UniPoly::zero(a.field);
    let n = a.ycoeffs.len().max(b.ycoeffs.len());
    let ycoeffs = (0..n)
        .map(|i| op(a.ycoeffs.get(i).unwrap_or(&zero), b.ycoeffs.get(i).unwrap_or(&zero)))
        .collect();
    BiPoly::from_ycoeffs(a.field, ycoeffs)
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        zip_with(self, rhs, |x, y| x + y)
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        zip_with(self, rhs, |x, y| x - y)
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly::from_ycoeffs(self.field, self.ycoeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        assert_eq!(self.field, rhs.field, "mixed fields");
        if self.is_zero() || rhs.is_zero() {
            return BiPoly::zero(self.field);
        }
        let mut acc = vec![UniPoly::zero(self.field); self.ycoeffs.len() + rhs.ycoeffs.len() - 1];
        for (i, a) in self.ycoeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.ycoeffs.iter().enumerate() {
                acc[i + j] = &acc[i + j] + &(a * b);
            }
        }
        BiPoly::from_ycoeffs(self.field, acc)
    }
}
