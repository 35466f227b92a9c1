use num_bigint::BigUint;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{squarefree_decompose, FactorList};
use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::uni::UniPoly;

/// Complete factorization over GF(p): squarefree, distinct-degree, then
/// equal-degree splitting driven by a seeded generator.
pub fn factor_gf(u: &UniPoly, seed: u64) -> Result<FactorList> {
    let field = u.field();
    if !field.is_prime_field() {
        return Err(Error::WrongField { expected: "a prime field" });
    }
    if u.is_zero() {
        return Err(Error::ZeroInput);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut factors = Vec::new();
    for (part, mult) in squarefree_decompose(u)? {
        for (block, d) in distinct_degree(&part) {
            for irr in equal_degree(&block, d, &mut rng) {
                factors.push((irr, mult));
            }
        }
    }
    Ok(FactorList::new(field, u.lc(), factors))
}

/// Splits a monic squarefree polynomial into `(product of all irreducible
/// factors of degree d, d)` blocks.
pub fn distinct_degree(f: &UniPoly) -> Vec<(UniPoly, usize)> {
    let field = f.field();
    let p = BigUint::from(field.characteristic());
    let x = UniPoly::x(field);
    let mut rest = f.clone();
    let mut h = x.rem(&rest).expect("nonconstant");
    let mut out = Vec::new();
    let mut d = 0;
    while rest.deg().is_some_and(|n| n >= 2 * (d + 1)) {
        d += 1;
        h = h.pow_mod(&p, &rest);
        let g = rest.gcd(&(&h - &x)).expect("rest nonzero");
        if !g.is_one() {
            rest = rest.div_exact(&g).expect("gcd divides");
            h = h.rem(&rest).expect("nonzero");
            out.push((g, d));
        }
    }
    if let Some(n) = rest.deg().filter(|&n| n > 0) {
        out.push((rest, n));
    }
    out
}

fn random_poly(field: Field, below: usize, rng: &mut ChaCha8Rng) -> UniPoly {
    let p = field.characteristic();
    UniPoly::from_coeffs(field, (0..below).map(|_| FieldElement::Residue(rng.gen_range(0..p))).collect())
}

/// Splits a monic product of distinct irreducibles of degree `d` into its
/// factors. Odd `p` uses the `(p^d - 1)/2` power map; `p = 2` uses the trace.
pub fn equal_degree(f: &UniPoly, d: usize, rng: &mut ChaCha8Rng) -> Vec<UniPoly> {
    let n = f.deg().expect("nonzero");
    if n == d {
        return vec![f.monic()];
    }
    let field = f.field();
    let p = field.characteristic();
    let exponent = if p == 2 {
        None
    } else {
        Some((BigUint::from(p).pow(d as u32) - BigUint::one()) >> 1)
    };
    loop {
        let a = random_poly(field, n, rng);
        if a.is_constant() {
            continue;
        }
        let b = match &exponent {
            Some(e) => &a.pow_mod(e, f) - &UniPoly::one(field),
            None => {
                let mut term = a.clone();
                let mut acc = a.clone();
                for _ in 1..d {
                    term = term.mul_mod(&term, f);
                    acc = &acc + &term;
                }
                acc
            }
        };
        let g = f.gcd(&b).expect("f nonzero");
        if g.deg().is_some_and(|k| k > 0 && k < n) {
            let h = f.div_exact(&g).expect("gcd divides");
            let mut out = equal_degree(&g, d, rng);
            out.extend(equal_degree(&h, d, rng));
            return out;
        }
    }
}
