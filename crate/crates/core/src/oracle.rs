//! Exhaustive bivariate factorization over GF(p)(X).
//!
//! Answers are exact whenever the search fits the budget; otherwise the
//! search stops with [`Error::BudgetExceeded`] and nothing is claimed.

use std::fmt;

use crate::bivariate::BiPoly;
use crate::error::{Error, Result};
use crate::factor::{divisor_exponents, divisor_from_exponents, factor_gf, FactorList, DEFAULT_SEED};
use crate::field::{Field, FieldElement};
use crate::uni::UniPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBudget {
    /// Total candidate divisors generated over all Y-degrees of one search.
    pub max_candidates: u64,
    pub max_py_degree: usize,
    pub max_px_degree: usize,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_candidates: 1 << 24,
            max_py_degree: 16,
            max_px_degree: 64,
        }
    }
}

impl OracleBudget {
    pub fn new(max_candidates: u64, max_py_degree: usize, max_px_degree: usize) -> Result<Self> {
        if max_candidates == 0 || max_py_degree == 0 || max_px_degree == 0 {
            return Err(Error::PreconditionViolated("oracle budget fields must be positive".into()));
        }
        Ok(OracleBudget {
            max_candidates,
            max_py_degree,
            max_px_degree,
        })
    }

    pub fn with_candidates(max_candidates: u64) -> Result<Self> {
        let d = Self::default();
        Self::new(max_candidates, d.max_py_degree, d.max_px_degree)
    }
}

/// `content * prod yfactors^mult`, with `yfactors` primitive, irreducible
/// over K(X), normalized and sorted canonically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiFactorization {
    pub content: FactorList,
    pub yfactors: Vec<(BiPoly, u32)>,
    pub omega_bi: u64,
}

impl BiFactorization {
    pub fn product(&self) -> BiPoly {
        self.yfactors
            .iter()
            .fold(BiPoly::from_uni(self.content.product()), |acc, (g, e)| &acc * &g.pow(*e as u64))
    }
}

impl fmt::Display for BiFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.content)?;
        for (g, e) in &self.yfactors {
            if *e == 1 {
                write!(f, " * ({g})")?;
            } else {
                write!(f, " * ({g})^{e}")?;
            }
        }
        Ok(())
    }
}

/// Scales so that the leading X-coefficient of the leading Y-coefficient is 1.
pub fn normalize(g: &BiPoly) -> BiPoly {
    if g.is_zero() {
        return g.clone();
    }
    let lc = g.lc_y().lc();
    let inv = g.field().inv(&lc).expect("nonzero");
    g.scale_elem(&inv)
}

fn check_field(f: &BiPoly) -> Result<u64> {
    match f.field() {
        Field::Prime(p) => Ok(p),
        Field::Rationals => Err(Error::WrongField { expected: "GF(p)" }),
    }
}

/// Choices for one coefficient of a candidate divisor.
enum Slot {
    List(Vec<UniPoly>),
    /// Every polynomial of degree below `width`.
    All { field: Field, p: u64, width: usize },
}

impl Slot {
    fn len(&self) -> u128 {
        match self {
            Slot::List(v) => v.len() as u128,
            Slot::All { p, width, .. } => (*p as u128).saturating_pow(*width as u32),
        }
    }

    fn get(&self, mut i: u128) -> UniPoly {
        match self {
            Slot::List(v) => v[i as usize].clone(),
            Slot::All { field, p, width } => {
                let p = *p as u128;
                let coeffs = (0..*width)
                    .map(|_| {
                        let d = (i % p) as u64;
                        i /= p;
                        FieldElement::Residue(d)
                    })
                    .collect();
                UniPoly::from_coeffs(*field, coeffs)
            }
        }
    }
}

fn monic_divisors(v: &UniPoly) -> Vec<UniPoly> {
    let fl = factor_gf(v, DEFAULT_SEED).expect("nonzero over GF(p)");
    divisor_exponents(&fl)
        .iter()
        .map(|e| divisor_from_exponents(&fl, e))
        .collect()
}

fn unit_divisors(v: &UniPoly, p: u64) -> Vec<UniPoly> {
    let monic = monic_divisors(v);
    (1..p)
        .flat_map(|u| {
            let u = FieldElement::Residue(u);
            monic.iter().map(move |d| d.scale(&u))
        })
        .collect()
}

/// Candidate space of one Y-degree level.
struct Level {
    k: usize,
    /// `coeffs[i]` is taken from `slots[slot_of[i]]`, or solved from the
    /// value at `Y = 1` when `slot_of[i]` is `None`.
    slot_of: Vec<Option<usize>>,
    slots: Vec<Slot>,
    /// Slot holding `G(X, 1)` when one coefficient is solved for.
    v1_slot: Option<usize>,
    /// `F(X, 1)` when it must be checked directly (nothing solved for).
    filter1: Option<UniPoly>,
}

impl Level {
    fn build(f: &BiPoly, k: usize, p: u64, dx: usize) -> Level {
        let field = f.field();
        let f0 = f.eval_y(&field.zero());
        let f1 = f.eval_y(&field.one());
        let mut slots = Vec::new();
        let mut slot_of = vec![None; k + 1];
        slots.push(Slot::List(monic_divisors(&f.lc_y())));
        slot_of[k] = Some(0);
        if !f0.is_zero() {
            slots.push(Slot::List(unit_divisors(&f0, p)));
            slot_of[0] = Some(slots.len() - 1);
        }
        let open: Vec<usize> = (0..k).filter(|&i| slot_of[i].is_none()).collect();
        let solved = if f1.is_zero() { None } else { open.first().copied() };
        let mut v1_slot = None;
        let mut filter1 = None;
        match solved {
            Some(_) => {
                slots.push(Slot::List(unit_divisors(&f1, p)));
                v1_slot = Some(slots.len() - 1);
            }
            None if !f1.is_zero() => filter1 = Some(f1),
            None => {}
        }
        for &i in &open {
            if Some(i) != solved {
                slots.push(Slot::All { field, p, width: dx + 1 });
                slot_of[i] = Some(slots.len() - 1);
            }
        }
        Level {
            k,
            slot_of,
            slots,
            v1_slot,
            filter1,
        }
    }

    fn size(&self) -> u128 {
        self.slots.iter().fold(1u128, |acc, s| acc.saturating_mul(s.len()))
    }

    fn candidate(&self, field: Field, mut index: u128, dx: usize) -> Option<BiPoly> {
        let picked: Vec<UniPoly> = self
            .slots
            .iter()
            .map(|s| {
                let n = s.len();
                let v = s.get(index % n);
                index /= n;
                v
            })
            .collect();
        let mut coeffs: Vec<UniPoly> = self
            .slot_of
            .iter()
            .map(|s| s.map(|i| picked[i].clone()).unwrap_or_else(|| UniPoly::zero(field)))
            .collect();
        if let Some(vs) = self.v1_slot {
            let s = self.slot_of.iter().position(|x| x.is_none()).expect("a solved coefficient");
            let others = coeffs.iter().fold(UniPoly::zero(field), |acc, c| &acc + c);
            coeffs[s] = &picked[vs] - &others;
        }
        if coeffs.iter().any(|c| c.deg().is_some_and(|d| d > dx)) {
            return None;
        }
        if let Some(f1) = &self.filter1 {
            let at1 = coeffs.iter().fold(UniPoly::zero(field), |acc, c| &acc + c);
            if at1.is_zero() || !at1.divides(f1) {
                return None;
            }
        }
        debug_assert_eq!(coeffs.len(), self.k + 1);
        Some(BiPoly::from_ycoeffs(field, coeffs))
    }
}

/// Canonically first normalized divisor of the primitive part of `f` with
/// `1 <= deg_Y <= deg_Y / 2`, or `None` when the full search space holds no
/// such divisor (so the primitive part is irreducible over K(X)).
pub fn find_bifactor(f: &BiPoly, budget: &OracleBudget) -> Result<Option<BiPoly>> {
    let p = check_field(f)?;
    let (_, prim) = f.content_y()?;
    let d = prim.dy().unwrap_or(0);
    if d < 2 {
        return Err(Error::PreconditionViolated(
            "Y-degree of the primitive part must be at least 2".into(),
        ));
    }
    let dx = prim.deg_x().finite().unwrap_or(0) as usize;
    if d > budget.max_py_degree {
        return Err(Error::BudgetExceeded(format!(
            "Y-degree {d} exceeds the limit {}",
            budget.max_py_degree
        )));
    }
    if dx > budget.max_px_degree {
        return Err(Error::BudgetExceeded(format!(
            "X-degree {dx} exceeds the limit {}",
            budget.max_px_degree
        )));
    }
    let field = prim.field();
    let mut used: u128 = 0;
    for k in 1..=d / 2 {
        let level = Level::build(&prim, k, p, dx);
        let size = level.size();
        if used.saturating_add(size) > budget.max_candidates as u128 {
            return Err(Error::BudgetExceeded(format!(
                "Y-degree {k} needs {size} candidates after {used} of {} were spent",
                budget.max_candidates
            )));
        }
        used += size;
        let mut best: Option<BiPoly> = None;
        for i in 0..size {
            let Some(g) = level.candidate(field, i, dx) else {
                continue;
            };
            if prim.div_exact(&g).is_some() {
                let better = best.as_ref().is_none_or(|b| g.canonical_cmp(b).is_lt());
                if better {
                    best = Some(g);
                }
            }
        }
        if best.is_some() {
            return Ok(best);
        }
    }
    Ok(None)
}

/// Complete factorization into Y-content and irreducible primitive factors.
pub fn bifactor_all(f: &BiPoly, budget: &OracleBudget) -> Result<BiFactorization> {
    check_field(f)?;
    let (_, prim) = f.content_y()?;
    let field = f.field();
    let mut rest = normalize(&prim);
    let mut yfactors: Vec<(BiPoly, u32)> = Vec::new();
    while rest.dy().is_some_and(|d| d >= 1) {
        let factor = if rest.dy() == Some(1) {
            rest.clone()
        } else {
            match find_bifactor(&rest, budget)? {
                Some(g) => g,
                None => rest.clone(),
            }
        };
        let mut mult = 0;
        while let Some(q) = rest.div_exact(&factor) {
            rest = q;
            mult += 1;
        }
        yfactors.push((normalize(&factor), mult));
    }
    yfactors.sort_by(|(a, _), (b, _)| a.canonical_cmp(b));
    let divisor = yfactors
        .iter()
        .fold(BiPoly::one(field), |acc, (g, e)| &acc * &g.pow(*e as u64));
    let content = f.div_exact(&divisor).expect("product of factors divides f");
    debug_assert!(content.dy() == Some(0));
    let content = factor_gf(&content.coeff(0), DEFAULT_SEED)?;
    let omega_bi = yfactors.iter().map(|(_, e)| *e as u64).sum();
    Ok(BiFactorization {
        content,
        yfactors,
        omega_bi,
    })
}

/// Irreducibility over K(X) for `deg_Y f >= 1`: constant Y-content and no
/// proper divisor in the fully searched space.
pub fn is_irreducible_bi(f: &BiPoly, budget: &OracleBudget) -> Result<bool> {
    check_field(f)?;
    if f.dy().is_none_or(|d| d == 0) {
        return Err(Error::ConstantInY);
    }
    let (content, prim) = f.content_y()?;
    if !content.is_constant() {
        return Ok(false);
    }
    if prim.dy() == Some(1) {
        return Ok(true);
    }
    Ok(find_bifactor(&prim, budget)?.is_none())
}

/// Size of the search [`find_bifactor`] would run, for reporting.
pub fn search_size(f: &BiPoly) -> Result<u128> {
    let p = check_field(f)?;
    let (_, prim) = f.content_y()?;
    let d = prim.dy().unwrap_or(0);
    let dx = prim.deg_x().finite().unwrap_or(0) as usize;
    Ok((1..=d / 2).fold(0u128, |acc, k| acc.saturating_add(Level::build(&prim, k, p, dx).size())))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(f: Field, c: &[i64]) -> UniPoly {
        UniPoly::from_i64s(f, c)
    }

    fn bi(f: Field, c: &[&[i64]]) -> BiPoly {
        BiPoly::from_ycoeffs(f, c.iter().map(|x| u(f, x)).collect())
    }

    #[test]
    fn y_squared_minus_one() {
        let gf3 = Field::Prime(3);
        let f = bi(gf3, &[&[-1], &[], &[1]]);
        let g = find_bifactor(&f, &OracleBudget::default()).unwrap().unwrap();
        assert_eq!(g, bi(gf3, &[&[-1], &[1]]));
        assert!(!is_irreducible_bi(&f, &OracleBudget::default()).unwrap());
    }

    #[test]
    fn constant_coefficient_quadratic() {
        let gf2 = Field::Prime(2);
        let f = bi(gf2, &[&[1], &[1], &[1]]);
        assert_eq!(find_bifactor(&f, &OracleBudget::default()).unwrap(), None);
        let f = bi(gf2, &[&[0, 1], &[], &[1]]);
        assert!(is_irreducible_bi(&f, &OracleBudget::default()).unwrap());
    }

    #[test]
    fn recovers_product() {
        let gf3 = Field::Prime(3);
        let a = bi(gf3, &[&[-1], &[1]]);
        let b = bi(gf3, &[&[0, -1], &[], &[1]]);
        let fz = bifactor_all(&(&a * &b), &OracleBudget::default()).unwrap();
        assert_eq!(fz.yfactors, vec![(a, 1), (b, 1)]);
        assert_eq!(fz.omega_bi, 2);
    }

    #[test]
    fn pure_power_of_y() {
        let gf3 = Field::Prime(3);
        let f = bi(gf3, &[&[], &[], &[], &[], &[1]]);
        let fz = bifactor_all(&f, &OracleBudget::default()).unwrap();
        assert_eq!(fz.yfactors, vec![(BiPoly::y(gf3), 4)]);
        assert_eq!(fz.omega_bi, 4);
        assert_eq!(fz.product(), f);
    }

    #[test]
    fn content_is_factored() {
        let gf2 = Field::Prime(2);
        // (X^2 + X)(Y + X)
        let f = bi(gf2, &[&[0, 0, 1, 1], &[0, 1, 1]]);
        let fz = bifactor_all(&f, &OracleBudget::default()).unwrap();
        assert_eq!(fz.content.omega(), 2);
        assert_eq!(fz.omega_bi, 1);
        assert_eq!(fz.product(), f);
    }

    #[test]
    fn y_free_input() {
        let gf3 = Field::Prime(3);
        let f = bi(gf3, &[&[1, 0, 1]]);
        let fz = bifactor_all(&f, &OracleBudget::default()).unwrap();
        assert_eq!(fz.omega_bi, 0);
        assert_eq!(fz.content.omega(), 1);
    }

    #[test]
    fn budget_and_field_errors() {
        let gf3 = Field::Prime(3);
        let f = bi(gf3, &[&[-1], &[], &[1]]);
        let tiny = OracleBudget::with_candidates(1).unwrap();
        assert!(matches!(find_bifactor(&f, &tiny), Err(Error::BudgetExceeded(_))));
        let q = bi(Field::Rationals, &[&[-1], &[], &[1]]);
        assert!(matches!(find_bifactor(&q, &OracleBudget::default()), Err(Error::WrongField { .. })));
        assert!(OracleBudget::new(0, 1, 1).is_err());
    }
}
