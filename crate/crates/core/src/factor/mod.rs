//! Univariate factorization over GF(p) and Q, and the factor count Ω.

mod finite;
mod rational;

pub use finite::{distinct_degree, equal_degree, factor_gf};
pub use rational::{factor_q, MAX_DEGREE_Q, MAX_MODULAR_FACTORS};

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::uni::UniPoly;

/// Seed used when a factorization is needed only for its multiset (Ω,
/// divisor lattices); the canonical output does not depend on it.
pub const DEFAULT_SEED: u64 = 0;

/// `unit * prod factor^multiplicity`, factors monic irreducible and sorted
/// canonically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorList {
    pub field: Field,
    pub unit: FieldElement,
    pub factors: Vec<(UniPoly, u32)>,
}

impl FactorList {
    pub(crate) fn new(field: Field, unit: FieldElement, mut factors: Vec<(UniPoly, u32)>) -> Self {
        factors.sort_by(|(a, ea), (b, eb)| a.canonical_cmp(b).then(ea.cmp(eb)));
        // merge repeated factors (possible when parts are factored separately)
        let mut merged: Vec<(UniPoly, u32)> = Vec::with_capacity(factors.len());
        for (f, e) in factors {
            match merged.last_mut() {
                Some((g, eg)) if *g == f => *eg += e,
                _ => merged.push((f, e)),
            }
        }
        FactorList {
            field,
            unit,
            factors: merged,
        }
    }

    /// Number of irreducible factors counted with multiplicity.
    pub fn omega(&self) -> u64 {
        self.factors.iter().map(|(_, e)| *e as u64).sum()
    }

    pub fn product(&self) -> UniPoly {
        self.factors
            .iter()
            .fold(UniPoly::constant(self.field, self.unit.clone()), |acc, (f, e)| {
                &acc * &f.pow(*e as u64)
            })
    }
}

impl fmt::Display for FactorList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.unit)?;
        for (p, e) in &self.factors {
            if *e == 1 {
                write!(f, " * ({p})")?;
            } else {
                write!(f, " * ({p})^{e}")?;
            }
        }
        Ok(())
    }
}

/// Squarefree decomposition of `monic(u)`: pairwise coprime squarefree parts
/// `s_i` with `prod s_i^{e_i} = monic(u)`, sorted by multiplicity.
pub fn squarefree_decompose(u: &UniPoly) -> Result<Vec<(UniPoly, u32)>> {
    if u.is_zero() {
        return Err(Error::ZeroInput);
    }
    let mut out = Vec::new();
    squarefree_rec(&u.monic(), 1, &mut out);
    out.sort_by(|(a, ea), (b, eb)| ea.cmp(eb).then_with(|| a.canonical_cmp(b)));
    Ok(out)
}

fn squarefree_rec(f: &UniPoly, scale: u32, out: &mut Vec<(UniPoly, u32)>) {
    if f.is_constant() {
        return;
    }
    let field = f.field();
    let deriv = f.derivative();
    let mut c = f.gcd(&deriv).expect("f nonzero");
    let mut w = f.div_exact(&c).expect("gcd divides");
    let mut i = 1;
    while !w.is_constant() {
        let y = w.gcd(&c).expect("w nonzero");
        let z = w.div_exact(&y).expect("gcd divides");
        if !z.is_constant() {
            out.push((z, i * scale));
        }
        i += 1;
        c = c.div_exact(&y).expect("gcd divides");
        w = y;
    }
    if !c.is_constant() {
        // only reachable in characteristic p: c is a polynomial in X^p
        let p = field.characteristic() as usize;
        debug_assert!(p > 0);
        let root: Vec<FieldElement> = c.coeffs().iter().step_by(p).cloned().collect();
        squarefree_rec(&UniPoly::from_coeffs(field, root), scale * p as u32, out);
    }
}

/// Complete factorization over the polynomial's own field.
pub fn factor(u: &UniPoly, seed: u64) -> Result<FactorList> {
    match u.field() {
        Field::Rationals => factor_q(u),
        Field::Prime(_) => factor_gf(u, seed),
    }
}

/// Ω(u): irreducible factors counted with multiplicity; 0 for nonzero constants.
pub fn omega(u: &UniPoly) -> Result<u64> {
    Ok(factor(u, DEFAULT_SEED)?.omega())
}

pub fn is_irreducible_uni(u: &UniPoly) -> Result<bool> {
    if u.is_constant() {
        return Err(Error::ConstantInput);
    }
    Ok(omega(u)? == 1)
}

/// All monic divisors of the polynomial described by `fl`, as exponent
/// vectors over its distinct factors, in lexicographic exponent order.
pub fn divisor_exponents(fl: &FactorList) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for (_, e) in &fl.factors {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..=*e).map(move |k| {
                    let mut v = prefix.clone();
                    v.push(k);
                    v
                })
            })
            .collect();
    }
    out
}

/// Monic divisor for an exponent vector from [`divisor_exponents`].
pub fn divisor_from_exponents(fl: &FactorList, exps: &[u32]) -> UniPoly {
    fl.factors
        .iter()
        .zip(exps)
        .fold(UniPoly::one(fl.field), |acc, ((f, _), &k)| &acc * &f.pow(k as u64))
}

/// Number of monic divisors of the polynomial described by `fl`.
pub fn divisor_count(fl: &FactorList) -> u128 {
    fl.factors.iter().map(|(_, e)| *e as u128 + 1).product()
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rationals;

    fn u(f: Field, c: &[i64]) -> UniPoly {
        UniPoly::from_i64s(f, c)
    }

    #[test]
    fn squarefree_examples() {
        // (X-1)^2 (X+1) = X^3 - X^2 - X + 1
        let p = u(Q, &[1, -1, -1, 1]);
        assert_eq!(
            squarefree_decompose(&p).unwrap(),
            vec![(u(Q, &[1, 1]), 1), (u(Q, &[-1, 1]), 2)]
        );
        let gf2 = Field::Prime(2);
        assert_eq!(squarefree_decompose(&u(gf2, &[1, 0, 1])).unwrap(), vec![(u(gf2, &[1, 1]), 2)]);
        let sf = u(Q, &[2, 0, 4]);
        assert_eq!(squarefree_decompose(&sf).unwrap(), vec![(sf.monic(), 1)]);
        assert_eq!(squarefree_decompose(&UniPoly::zero(Q)), Err(Error::ZeroInput));
    }

    #[test]
    fn squarefree_char_p_mixed() {
        // over GF(3): (X+1)^3 (X+2)^2 X^4
        let gf3 = Field::Prime(3);
        let p = &(&u(gf3, &[1, 1]).pow(3) * &u(gf3, &[2, 1]).pow(2)) * &u(gf3, &[0, 1]).pow(4);
        let parts = squarefree_decompose(&p).unwrap();
        let rebuilt = parts.iter().fold(UniPoly::one(gf3), |acc, (s, e)| &acc * &s.pow(*e as u64));
        assert_eq!(rebuilt, p);
        let mults: Vec<u32> = parts.iter().map(|(_, e)| *e).collect();
        assert_eq!(mults, vec![2, 3, 4]);
    }

    #[test]
    fn omega_examples() {
        assert_eq!(omega(&u(Q, &[7])).unwrap(), 0);
        assert_eq!(omega(&u(Q, &[1, -1, -1, 1])).unwrap(), 3);
        assert_eq!(omega(&u(Field::Prime(2), &[0, 1, 0, 0, 1])).unwrap(), 3);
        assert_eq!(omega(&UniPoly::zero(Q)), Err(Error::ZeroInput));
    }

    #[test]
    fn irreducibility_examples() {
        assert!(is_irreducible_uni(&u(Q, &[5, 5, 0, 0, 1])).unwrap());
        assert!(!is_irreducible_uni(&u(Field::Prime(5), &[1, 0, 1])).unwrap());
        assert!(is_irreducible_uni(&u(Field::Prime(3), &[1, 0, 1])).unwrap());
        assert_eq!(is_irreducible_uni(&u(Q, &[3])), Err(Error::ConstantInput));
    }

    #[test]
    fn divisor_lattice() {
        let gf3 = Field::Prime(3);
        let fl = factor(&u(gf3, &[1, 0, 1]).pow(3), 0).unwrap();
        let divs = divisor_exponents(&fl);
        assert_eq!(divs.len(), 4);
        assert_eq!(divisor_count(&fl), 4);
        assert_eq!(divisor_from_exponents(&fl, &divs[2]), u(gf3, &[1, 0, 1]).pow(2));
    }
}
