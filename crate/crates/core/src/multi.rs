//! Sparse polynomials in `X_1, ..., X_r`.
//!
//! Only what degree bookkeeping needs: ring operations, exact division,
//! coefficient extraction in the last variable and conversion to [`BiPoly`].

use std::collections::BTreeMap;
use std::fmt;

use crate::bivariate::BiPoly;
use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::uni::{format_terms, Degree, UniPoly};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    field: Field,
    nvars: usize,
    terms: BTreeMap<Vec<u32>, FieldElement>,
}

impl MultiPoly {
    /// Builds a polynomial in `r >= 2` variables; zero coefficients are dropped.
    pub fn new(field: Field, r: usize, terms: impl IntoIterator<Item = (Vec<u32>, FieldElement)>) -> Result<Self> {
        if r < 2 {
            return Err(Error::MixedArity(format!("multivariate polynomials need r >= 2, got {r}")));
        }
        let mut p = MultiPoly::zero_any(field, r);
        for (exps, c) in terms {
            if exps.len() != r {
                return Err(Error::MixedArity(format!("exponent vector of length {} for r = {r}", exps.len())));
            }
            p.add_term(exps, c);
        }
        Ok(p)
    }

    /// Internal constructor allowing any arity, used by the parser.
    pub(crate) fn zero_any(field: Field, nvars: usize) -> Self {
        MultiPoly {
            field,
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub(crate) fn constant_any(field: Field, nvars: usize, c: FieldElement) -> Self {
        let mut p = Self::zero_any(field, nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub(crate) fn var_any(field: Field, nvars: usize, index: usize) -> Self {
        let mut e = vec![0; nvars];
        e[index] = 1;
        let mut p = Self::zero_any(field, nvars);
        p.add_term(e, field.one());
        p
    }

    fn add_term(&mut self, exps: Vec<u32>, c: FieldElement) {
        let f = self.field;
        let entry = self.terms.entry(exps);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                if !c.is_zero() {
                    v.insert(c);
                }
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = f.add(o.get(), &c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// Number of variables `r`.
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, FieldElement> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn check_index(&self, j: usize) -> Result<()> {
        if j == 0 || j > self.nvars {
            Err(Error::IndexOutOfRange {
                index: j,
                max: self.nvars,
            })
        } else {
            Ok(())
        }
    }

    /// `deg_{X_j}`, with `j` one-based.
    pub fn deg(&self, j: usize) -> Result<Degree> {
        self.check_index(j)?;
        Ok(self
            .terms
            .keys()
            .map(|e| Degree::Finite(e[j - 1] as u64))
            .max()
            .unwrap_or(Degree::MinusInfinity))
    }

    /// Coefficients in the last variable: `self = sum_i a_i * X_r^i`. Each
    /// `a_i` keeps arity `r` with zero exponent in `X_r`.
    pub fn coeffs_in_last(&self) -> Vec<MultiPoly> {
        let last = self.nvars - 1;
        let d = self.terms.keys().map(|e| e[last] as usize).max();
        let Some(d) = d else { return Vec::new() };
        let mut out = vec![MultiPoly::zero_any(self.field, self.nvars); d + 1];
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            let i = e2[last] as usize;
            e2[last] = 0;
            out[i].add_term(e2, c.clone());
        }
        out
    }

    /// `H_j`: maximum `X_j`-degree of the non-leading `X_r`-coefficients.
    pub fn hj_norm(&self, j: usize) -> Result<Degree> {
        if j == 0 || j >= self.nvars {
            return Err(Error::IndexOutOfRange {
                index: j,
                max: self.nvars - 1,
            });
        }
        let coeffs = self.coeffs_in_last();
        if coeffs.len() < 2 {
            return Err(Error::ConstantInLastVariable);
        }
        let d = coeffs.len() - 1;
        coeffs[..d]
            .iter()
            .map(|a| a.deg(j))
            .try_fold(Degree::MinusInfinity, |acc, x| Ok(acc.max(x?)))
    }

    pub fn checked_mul(&self, other: &MultiPoly) -> Result<MultiPoly> {
        if self.field != other.field {
            return Err(Error::MixedFields);
        }
        if self.nvars != other.nvars {
            return Err(Error::MixedArity(format!("{} vs {} variables", self.nvars, other.nvars)));
        }
        let f = self.field;
        let mut out = MultiPoly::zero_any(f, self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, f.mul(ca, cb));
            }
        }
        Ok(out)
    }

    pub fn checked_add(&self, other: &MultiPoly) -> Result<MultiPoly> {
        if self.field != other.field {
            return Err(Error::MixedFields);
        }
        if self.nvars != other.nvars {
            return Err(Error::MixedArity(format!("{} vs {} variables", self.nvars, other.nvars)));
        }
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> MultiPoly {
        let f = self.field;
        MultiPoly {
            field: f,
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), f.neg(c))).collect(),
        }
    }

    pub fn checked_sub(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.checked_add(&other.neg())
    }

    pub fn pow(&self, e: u64) -> MultiPoly {
        let mut acc = MultiPoly::constant_any(self.field, self.nvars, self.field.one());
        for _ in 0..e {
            acc = acc.checked_mul(self).expect("same ring");
        }
        acc
    }

    /// Leading term in lexicographic order `X_1 > X_2 > ... > X_r`.
    fn leading_term(&self) -> Option<(&Vec<u32>, &FieldElement)> {
        self.terms.iter().next_back()
    }

    /// Exact quotient, or `None` when `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &MultiPoly) -> Option<MultiPoly> {
        if self.field != divisor.field || self.nvars != divisor.nvars {
            return None;
        }
        let (dlead_e, dlead_c) = divisor.leading_term()?;
        let f = self.field;
        let inv = f.inv(dlead_c).ok()?;
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero_any(f, self.nvars);
        while let Some((e, c)) = rem.leading_term() {
            if e.iter().zip(dlead_e).any(|(a, b)| a < b) {
                return None;
            }
            let qe: Vec<u32> = e.iter().zip(dlead_e).map(|(a, b)| a - b).collect();
            let qc = f.mul(c, &inv);
            let mut mono = MultiPoly::zero_any(f, self.nvars);
            mono.add_term(qe.clone(), qc.clone());
            rem = rem.checked_sub(&mono.checked_mul(divisor).ok()?).ok()?;
            quot.add_term(qe, qc);
        }
        Some(quot)
    }

    /// Reads a polynomial in `X, Y` as one in `X_1, X_2`.
    pub fn from_bipoly(b: &BiPoly) -> MultiPoly {
        let mut p = MultiPoly::zero_any(b.field(), 2);
        for (j, c) in b.ycoeffs().iter().enumerate() {
            for (i, a) in c.coeffs().iter().enumerate() {
                p.add_term(vec![i as u32, j as u32], a.clone());
            }
        }
        p
    }

    /// Renames `X_j -> X` and `X_r -> Y`; every other variable must be absent.
    pub fn to_bipoly(&self, j: usize) -> Result<BiPoly> {
        self.check_index(j)?;
        if j == self.nvars {
            return Err(Error::IndexOutOfRange {
                index: j,
                max: self.nvars - 1,
            });
        }
        let (xj, last) = (j - 1, self.nvars - 1);
        let f = self.field;
        let mut rows: Vec<Vec<FieldElement>> = Vec::new();
        for (e, c) in &self.terms {
            if e.iter().enumerate().any(|(k, &x)| k != xj && k != last && x != 0) {
                return Err(Error::MixedArity(format!(
                    "polynomial involves variables other than X{j} and X{}",
                    self.nvars
                )));
            }
            let (i, y) = (e[xj] as usize, e[last] as usize);
            if rows.len() <= y {
                rows.resize(y + 1, Vec::new());
            }
            if rows[y].len() <= i {
                rows[y].resize(i + 1, f.zero());
            }
            rows[y][i] = c.clone();
        }
        Ok(BiPoly::from_ycoeffs(f, rows.into_iter().map(|c| UniPoly::from_coeffs(f, c)).collect()))
    }

    /// Reads a polynomial in `X_1` only as a univariate polynomial in `X`.
    pub(crate) fn to_uni_any(&self) -> Result<UniPoly> {
        let f = self.field;
        let mut coeffs = Vec::new();
        for (e, c) in &self.terms {
            if e.iter().skip(1).any(|&x| x != 0) {
                return Err(Error::MixedArity("expected a polynomial in X only".into()));
            }
            let i = e.first().copied().unwrap_or(0) as usize;
            if coeffs.len() <= i {
                coeffs.resize(i + 1, f.zero());
            }
            coeffs[i] = c.clone();
        }
        Ok(UniPoly::from_coeffs(f, coeffs))
    }

    /// Text form in `X1..Xr`, terms in descending lexicographic order.
    pub fn to_text(&self) -> String {
        let names: Vec<String> = (1..=self.nvars).map(|i| format!("X{i}")).collect();
        let terms = self.terms.iter().rev().map(|(e, c)| {
            (
                c.clone(),
                e.iter().enumerate().map(|(k, &x)| (names[k].clone(), x as u64)).collect(),
            )
        });
        format_terms(self.field, terms)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}
