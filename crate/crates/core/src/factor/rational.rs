use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{factor_gf, squarefree_decompose, FactorList, DEFAULT_SEED};
use crate::error::{Error, Result};
use crate::field::{is_prime_u64, Field};
use crate::uni::UniPoly;

/// Largest squarefree part degree accepted by [`factor_q`].
pub const MAX_DEGREE_Q: usize = 30;
/// Largest number of modular factors recombined by subset search.
pub const MAX_MODULAR_FACTORS: usize = 10;
/// How many good primes are tried; the one with fewest modular factors wins.
const PRIME_CANDIDATES: usize = 5;

type ZPoly = Vec<BigInt>;

/// Complete factorization over Q: squarefree decomposition, then Zassenhaus
/// (modular factorization, Hensel lifting, subset recombination) per part.
pub fn factor_q(u: &UniPoly) -> Result<FactorList> {
    if u.field() != Field::Rationals {
        return Err(Error::WrongField { expected: "the rationals" });
    }
    if u.is_zero() {
        return Err(Error::ZeroInput);
    }
    let mut factors = Vec::new();
    for (part, mult) in squarefree_decompose(u)? {
        for irr in factor_squarefree(&part)? {
            factors.push((irr, mult));
        }
    }
    Ok(FactorList::new(Field::Rationals, u.lc(), factors))
}

/// Monic irreducible factors of a monic squarefree rational polynomial.
fn factor_squarefree(s: &UniPoly) -> Result<Vec<UniPoly>> {
    let n = s.deg().expect("nonzero");
    if n <= 1 {
        return Ok(vec![s.monic()]);
    }
    if n > MAX_DEGREE_Q {
        return Err(Error::BudgetExceeded(format!(
            "squarefree part of degree {n} exceeds the cap of {MAX_DEGREE_Q}"
        )));
    }
    let (_, f) = s.to_primitive_integer()?;
    let factors = zassenhaus(&f)?;
    Ok(factors.iter().map(|g| UniPoly::from_integers(g).monic()).collect())
}

fn zassenhaus(f: &ZPoly) -> Result<Vec<ZPoly>> {
    let lc = f.last().unwrap().clone();
    let (p, modular) = choose_prime(f, &lc)?;
    if modular.len() == 1 {
        return Ok(vec![f.clone()]);
    }
    if modular.len() > MAX_MODULAR_FACTORS {
        return Err(Error::BudgetExceeded(format!(
            "{} modular factors mod {p} exceed the cap of {MAX_MODULAR_FACTORS}",
            modular.len()
        )));
    }
    let bound = coefficient_bound(f);
    let pb = BigInt::from(p);
    let mut e = 1u32;
    let mut modulus = pb.clone();
    while modulus <= bound {
        modulus *= &pb;
        e += 1;
    }
    let inv_lc = mod_inverse(&lc, &modulus);
    let monic_f: ZPoly = f.iter().map(|c| (c * &inv_lc).mod_floor(&modulus)).collect();
    let lifted = lift_all(&monic_f, &modular, p, e);
    Ok(recombine(f, lifted, &modulus))
}

/// Smallest primes >= 3 that do not divide `lc` and keep `f` squarefree;
/// the first one with the fewest modular factors is used.
fn choose_prime(f: &ZPoly, lc: &BigInt) -> Result<(u64, Vec<UniPoly>)> {
    let mut best: Option<(u64, Vec<UniPoly>)> = None;
    let mut tried = 0;
    let mut p = 3u64;
    while tried < PRIME_CANDIDATES {
        if is_prime_u64(p) && !(lc % p).is_zero() {
            let field = Field::Prime(p);
            let image = reduce(f, field);
            if image.gcd(&image.derivative()).expect("nonzero").is_one() {
                tried += 1;
                let fl = factor_gf(&image, DEFAULT_SEED)?;
                let mods: Vec<UniPoly> = fl.factors.into_iter().map(|(g, _)| g).collect();
                if best.as_ref().is_none_or(|(_, b)| mods.len() < b.len()) {
                    best = Some((p, mods));
                }
                if best.as_ref().is_some_and(|(_, b)| b.len() == 1) {
                    break;
                }
            }
        }
        p += 2;
    }
    Ok(best.expect("some prime is good for a squarefree polynomial"))
}

fn reduce(f: &ZPoly, field: Field) -> UniPoly {
    UniPoly::from_coeffs(field, f.iter().map(|c| field.from_bigint(c)).collect())
}

fn residues(g: &UniPoly) -> ZPoly {
    g.coeffs().iter().map(|c| BigInt::from(c.as_residue().unwrap())).collect()
}

/// `2 * |lc| * 2^n * ceil(||f||_2)`: twice the largest coefficient of
/// `lc * h / lc(h)` for any factor `h` of `f` (Mignotte).
fn coefficient_bound(f: &ZPoly) -> BigInt {
    let n = f.len() - 1;
    let sq: BigInt = f.iter().map(|c| c * c).sum();
    let norm = sq.sqrt() + 1;
    let lc = f.last().unwrap().abs();
    BigInt::from(2) * lc * (BigInt::one() << n) * norm
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    let g = a.mod_floor(m).extended_gcd(m);
    debug_assert!(g.gcd.is_one());
    g.x.mod_floor(m)
}

fn zmul(a: &ZPoly, b: &ZPoly) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn zmod(a: &ZPoly, m: &BigInt) -> ZPoly {
    a.iter().map(|c| c.mod_floor(m)).collect()
}

/// Lifts `f = prod factors (mod p)` to a factorization modulo `p^e`; `f` is
/// monic modulo `p^e` and the factors are monic, pairwise coprime.
fn lift_all(f: &ZPoly, factors: &[UniPoly], p: u64, e: u32) -> Vec<ZPoly> {
    let modulus = BigInt::from(p).pow(e);
    if factors.len() == 1 {
        return vec![zmod(f, &modulus)];
    }
    let (left, right) = factors.split_at(factors.len() / 2);
    let field = Field::Prime(p);
    let prod = |fs: &[UniPoly]| fs.iter().fold(UniPoly::one(field), |acc, g| &acc * g);
    let (a, b) = hensel_pair(f, &prod(left), &prod(right), p, e);
    let mut out = lift_all(&a, left, p, e);
    out.extend(lift_all(&b, right, p, e));
    out
}

/// Linear Hensel lifting of `f = a0 * b0 (mod p)` to `f = A * B (mod p^e)`
/// with `A`, `B` monic.
fn hensel_pair(f: &ZPoly, a0: &UniPoly, b0: &UniPoly, p: u64, e: u32) -> (ZPoly, ZPoly) {
    let field = Field::Prime(p);
    let (g, s, t) = a0.ext_gcd(b0).expect("nonzero");
    debug_assert!(g.is_one());
    let (mut a, mut b) = (residues(a0), residues(b0));
    let pb = BigInt::from(p);
    let mut pk = pb.clone();
    for _ in 1..e {
        let next = &pk * &pb;
        let prod = zmul(&a, &b);
        let len = f.len().max(prod.len());
        let err: ZPoly = (0..len)
            .map(|i| {
                let d = f.get(i).cloned().unwrap_or_default() - prod.get(i).cloned().unwrap_or_default();
                d.mod_floor(&next) / &pk
            })
            .collect();
        let err = reduce(&err, field);
        let (q, r) = (&err * &t).divmod(a0).expect("a0 nonzero");
        let sigma = r;
        let tau = &(&err * &s) + &(&q * b0);
        for (i, c) in residues(&sigma).into_iter().enumerate() {
            a[i] += c * &pk;
        }
        for (i, c) in residues(&tau).into_iter().enumerate() {
            b[i] += c * &pk;
        }
        pk = next;
    }
    (a, b)
}

fn symmetric(a: &ZPoly, m: &BigInt) -> ZPoly {
    let half = m / 2;
    let mut out: ZPoly = a
        .iter()
        .map(|c| {
            let r = c.mod_floor(m);
            if r > half {
                r - m
            } else {
                r
            }
        })
        .collect();
    while out.last().is_some_and(|c| c.is_zero()) {
        out.pop();
    }
    out
}

fn primitive(a: &ZPoly) -> ZPoly {
    let g = a.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let sign = if a.last().unwrap().is_negative() { -BigInt::one() } else { BigInt::one() };
    let g = g * sign;
    a.iter().map(|c| c / &g).collect()
}

/// Exact quotient over Z, if `d` divides `f`.
fn zdiv_exact(f: &ZPoly, d: &ZPoly) -> Option<ZPoly> {
    let (fd, dd) = (f.len() - 1, d.len() - 1);
    if fd < dd {
        return None;
    }
    let mut rem = f.clone();
    let lc = d.last().unwrap();
    let mut quot = vec![BigInt::zero(); fd - dd + 1];
    for i in (0..=fd - dd).rev() {
        let (q, r) = rem[i + dd].div_rem(lc);
        if !r.is_zero() {
            return None;
        }
        if q.is_zero() {
            continue;
        }
        for (j, c) in d.iter().enumerate() {
            rem[i + j] -= &q * c;
        }
        quot[i] = q;
    }
    rem.iter().all(|c| c.is_zero()).then_some(quot)
}

/// Subset recombination of lifted modular factors with a constant-term
/// divisibility filter.
fn recombine(f: &ZPoly, mut lifted: Vec<ZPoly>, modulus: &BigInt) -> Vec<ZPoly> {
    let mut found = Vec::new();
    let mut rest = f.clone();
    let mut size = 1;
    while 2 * size <= lifted.len() {
        let lc = rest.last().unwrap().clone();
        let mut hit = None;
        for subset in (0..lifted.len()).combinations(size) {
            let mut cand: ZPoly = vec![lc.clone()];
            for &i in &subset {
                cand = zmod(&zmul(&cand, &lifted[i]), modulus);
            }
            let cand = symmetric(&cand, modulus);
            if cand.is_empty() {
                continue;
            }
            let cand = primitive(&cand);
            if !cand[0].is_zero() && !rest[0].is_zero() && !(&rest[0] % &cand[0]).is_zero() {
                continue;
            }
            if let Some(q) = zdiv_exact(&rest, &cand) {
                hit = Some((subset, cand, q));
                break;
            }
        }
        match hit {
            Some((subset, cand, q)) => {
                for &i in subset.iter().rev() {
                    lifted.remove(i);
                }
                found.push(cand);
                rest = q;
            }
            None => size += 1,
        }
    }
    if rest.len() > 1 {
        found.push(rest);
    }
    found
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rationals;

    fn u(c: &[i64]) -> UniPoly {
        UniPoly::from_i64s(Q, c)
    }

    #[test]
    fn cyclotomic_split() {
        let fl = factor_q(&u(&[-1, 0, 0, 0, 0, 0, 1])).unwrap();
        assert_eq!(
            fl.factors,
            vec![(u(&[-1, 1]), 1), (u(&[1, 1]), 1), (u(&[1, -1, 1]), 1), (u(&[1, 1, 1]), 1)]
        );
        assert_eq!(fl.omega(), 4);
    }

    #[test]
    fn small_examples() {
        assert_eq!(factor_q(&u(&[-2, 0, 1])).unwrap().omega(), 1);
        let fl = factor_q(&u(&[-2, 0, 2])).unwrap();
        assert_eq!(fl.unit, Q.from_i64(2));
        assert_eq!(fl.factors, vec![(u(&[-1, 1]), 1), (u(&[1, 1]), 1)]);
        assert_eq!(factor_q(&UniPoly::zero(Q)), Err(Error::ZeroInput));
        assert_eq!(
            factor_q(&UniPoly::from_i64s(Field::Prime(3), &[1, 1])),
            Err(Error::WrongField { expected: "the rationals" })
        );
    }

    #[test]
    fn non_monic_and_rational_inputs() {
        // (2X + 3)(3X^2 - 5)(X^2 + X + 7)^2 / 7
        let p = &(&u(&[3, 2]) * &u(&[-5, 0, 3])) * &u(&[7, 1, 1]).pow(2);
        let p = p.scale(&Q.parse_element("1/7").unwrap());
        let fl = factor_q(&p).unwrap();
        assert_eq!(fl.omega(), 4);
        assert_eq!(fl.product(), p);
    }

    #[test]
    fn swinnerton_dyer_like_false_splits() {
        // X^4 + 1 is irreducible over Q but splits modulo every prime
        let fl = factor_q(&u(&[1, 0, 0, 0, 1])).unwrap();
        assert_eq!(fl.factors, vec![(u(&[1, 0, 0, 0, 1]), 1)]);
        // X^4 - 10X^2 + 1 likewise
        let fl = factor_q(&u(&[1, 0, -10, 0, 1])).unwrap();
        assert_eq!(fl.omega(), 1);
    }

    #[test]
    fn large_coefficients_need_lifting() {
        let a = u(&[1234567, -890, 1]);
        let b = u(&[-999331, 0, 0, 17]);
        let fl = factor_q(&(&a * &b)).unwrap();
        assert_eq!(fl.omega(), 2);
        assert_eq!(fl.product(), &a * &b);
    }

    #[test]
    fn degree_cap() {
        let mut c = vec![0i64; 33];
        c[0] = 2;
        c[32] = 1;
        assert!(matches!(factor_q(&u(&c)), Err(Error::BudgetExceeded(_))));
    }
}
