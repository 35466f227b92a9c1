//! Seeded example families: Eisenstein leading coefficients, their sharpness
//! counterparts, and the same constructions moved to GF(2) and GF(3).

use rand::Rng;

use crate::bivariate::BiPoly;
use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::uni::UniPoly;

/// Random polynomial of degree at most `max_deg`: integers in `[-5, 5]`
/// over Q, uniform residues over GF(p).
pub fn random_uni<R: Rng>(field: Field, max_deg: usize, rng: &mut R) -> UniPoly {
    let coeffs = (0..=max_deg)
        .map(|_| match field {
            Field::Rationals => field.from_i64(rng.gen_range(-5..=5)),
            Field::Prime(p) => FieldElement::Residue(rng.gen_range(0..p)),
        })
        .collect();
    UniPoly::from_coeffs(field, coeffs)
}

/// Like [`random_uni`] but never zero.
pub fn random_nonzero_uni<R: Rng>(field: Field, max_deg: usize, rng: &mut R) -> UniPoly {
    loop {
        let u = random_uni(field, max_deg, rng);
        if !u.is_zero() {
            return u;
        }
    }
}

/// `X^d + 5X + 5`.
pub fn eisenstein_poly(d: usize) -> UniPoly {
    let q = Field::Rationals;
    &UniPoly::monomial(q, q.one(), d) + &UniPoly::from_i64s(q, &[5, 5])
}

/// `X^2 + 1`, irreducible over GF(3).
pub fn gf3_quadratic() -> UniPoly {
    UniPoly::from_i64s(Field::Prime(3), &[1, 0, 1])
}

fn check_sizes(m: usize, d: usize) -> Result<()> {
    if m < 2 || d < 2 {
        return Err(Error::PreconditionViolated("need m, d >= 2".into()));
    }
    Ok(())
}

/// `f = a_0 + ... + a_{m-1} Y^{m-1} + lead * Y^m` with random `a_i` of
/// degree at most `max_deg` and `a_0 != 0`.
pub fn random_with_lead<R: Rng>(lead: &UniPoly, m: usize, max_deg: usize, rng: &mut R) -> BiPoly {
    let field = lead.field();
    let mut coeffs: Vec<UniPoly> = (0..m)
        .map(|i| {
            if i == 0 {
                random_nonzero_uni(field, max_deg, rng)
            } else {
                random_uni(field, max_deg, rng)
            }
        })
        .collect();
    coeffs.push(lead.clone());
    BiPoly::from_ycoeffs(field, coeffs)
}

/// Over Q: `a_m = X^d + 5X + 5` and random `a_i` of degree at most `d - 1`,
/// so every member is irreducible over Q(X).
pub fn eisenstein_family<R: Rng>(m: usize, d: usize, rng: &mut R) -> Result<BiPoly> {
    check_sizes(m, d)?;
    Ok(random_with_lead(&eisenstein_poly(d), m, d - 1, rng))
}

/// `a_{m-1} = -lead - (a_0 + ... + a_{m-2})`, making `f(X, 1) = 0`.
fn close_at_one(lead: &UniPoly, lower: &[UniPoly]) -> Result<BiPoly> {
    let field = lead.field();
    if lower.first().is_none_or(|a| a.is_zero()) {
        return Err(Error::PreconditionViolated("a_0 must be given and nonzero".into()));
    }
    let sum = lower.iter().fold(UniPoly::zero(field), |acc, a| &acc + a);
    let mut coeffs = lower.to_vec();
    coeffs.push(&(-lead) - &sum);
    coeffs.push(lead.clone());
    Ok(BiPoly::from_ycoeffs(field, coeffs))
}

/// Over Q with `a_m = X^d + 5X + 5`, given `a_0..a_{m-2}`: divisible by `Y - 1`.
pub fn sharpness_one_with(d: usize, lower: &[UniPoly]) -> Result<BiPoly> {
    check_sizes(lower.len() + 1, d)?;
    close_at_one(&eisenstein_poly(d), lower)
}

/// [`sharpness_one_with`] with `a_0 = ... = a_{m-2} = 1`. For `m = d = 2`
/// this is `1 + (-X^2 - 5X - 6) Y + (X^2 + 5X + 5) Y^2`.
pub fn sharpness_one(m: usize, d: usize) -> Result<BiPoly> {
    check_sizes(m, d)?;
    let q = Field::Rationals;
    sharpness_one_with(d, &vec![UniPoly::one(q); m - 1])
}

/// `g = b_0 + ... + b_{n-1} Y^{n-1} + Y^n` with random `b_i` of degree at most `max_deg`.
pub fn random_monic_g<R: Rng>(field: Field, n: usize, max_deg: usize, rng: &mut R) -> BiPoly {
    let mut coeffs: Vec<UniPoly> = (0..n).map(|_| random_uni(field, max_deg, rng)).collect();
    coeffs.push(UniPoly::one(field));
    BiPoly::from_ycoeffs(field, coeffs)
}

/// Leading coefficient of the two-factor family: `(X^n + 5X + 5)^2` over
/// Q, `(X^2 + 1)^2` over GF(3).
pub fn two_factor_lead(field: Field, n: usize) -> Result<UniPoly> {
    match field {
        Field::Rationals => Ok(eisenstein_poly(n).pow(2)),
        Field::Prime(3) => Ok(gf3_quadratic().pow(2)),
        _ => Err(Error::WrongField { expected: "Q or GF(3)" }),
    }
}

/// `(f, g)` with `a_m` from [`two_factor_lead`], `deg a_i <= deg a_m - 1`
/// and monic `g` of Y-degree `n`. Over GF(3) the root `X^2 + 1` plays the
/// part of the Eisenstein polynomial, so `n` only sets the degree of `g`.
pub fn two_factor_family<R: Rng>(field: Field, m: usize, n: usize, rng: &mut R) -> Result<(BiPoly, BiPoly)> {
    if m < 1 || n < 1 {
        return Err(Error::PreconditionViolated("need m, n >= 1".into()));
    }
    let lead = two_factor_lead(field, n)?;
    let h = lead.deg().expect("nonzero") - 1;
    let f = random_with_lead(&lead, m, h, rng);
    let g = random_monic_g(field, n, 2, rng);
    Ok((f, g))
}

/// `(f, Y^2)` with `a_{m-1}` closing `f(X, 1) = 0`, so `f(X, Y^2)` is
/// divisible by `Y^2 - 1`. The lower coefficients are random of degree at
/// most `deg a_m`.
pub fn sharpness_two<R: Rng>(field: Field, m: usize, rng: &mut R) -> Result<(BiPoly, BiPoly)> {
    if m < 2 {
        return Err(Error::PreconditionViolated("need m >= 2".into()));
    }
    let lead = two_factor_lead(field, 2)?;
    let top = lead.deg().expect("nonzero");
    let lower: Vec<UniPoly> = (0..m - 1)
        .map(|i| {
            if i == 0 {
                random_nonzero_uni(field, top, rng)
            } else {
                random_uni(field, top, rng)
            }
        })
        .collect();
    let f = close_at_one(&lead, &lower)?;
    let g = BiPoly::from_ycoeffs(field, vec![UniPoly::zero(field), UniPoly::zero(field), UniPoly::one(field)]);
    Ok((f, g))
}

/// Over GF(2): `f = 1 + Y + (X^5 + X^2 + 1) Y^2`, `g = X + Y^2`, and the
/// split `p = X^5 + X^2 + 1`, `q = 1`.
pub fn gf2_composition() -> (BiPoly, BiPoly, UniPoly, UniPoly) {
    let gf2 = Field::Prime(2);
    let p = UniPoly::from_i64s(gf2, &[1, 0, 1, 0, 0, 1]);
    let f = BiPoly::from_ycoeffs(gf2, vec![UniPoly::one(gf2), UniPoly::one(gf2), p.clone()]);
    let g = BiPoly::from_ycoeffs(
        gf2,
        vec![UniPoly::x(gf2), UniPoly::zero(gf2), UniPoly::one(gf2)],
    );
    (f, g, p, UniPoly::one(gf2))
}

#[cfg(test)]
mod tests {
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use super::*;

    #[test]
    fn sharpness_one_small_case() {
        let q = Field::Rationals;
        let f = sharpness_one(2, 2).unwrap();
        let expected = BiPoly::from_ycoeffs(
            q,
            vec![
                UniPoly::one(q),
                UniPoly::from_i64s(q, &[-6, -5, -1]),
                UniPoly::from_i64s(q, &[5, 5, 1]),
            ],
        );
        assert_eq!(f, expected);
        assert!(f.eval_y(&q.one()).is_zero());
    }

    #[test]
    fn sharpness_two_vanishes_at_one() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let (f, g) = sharpness_two(Field::Prime(3), 3, &mut rng).unwrap();
        assert!(f.eval_y(&Field::Prime(3).one()).is_zero());
        assert_eq!(g.dy(), Some(2));
        assert!(!f.coeff(0).is_zero());
    }

    #[test]
    fn family_degrees() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let f = eisenstein_family(3, 4, &mut rng).unwrap();
        assert_eq!(f.dy(), Some(3));
        assert!(f.ycoeffs()[..3].iter().all(|a| a.deg().is_none_or(|d| d <= 3)));
        let (f, g) = two_factor_family(Field::Prime(3), 2, 2, &mut rng).unwrap();
        assert_eq!(f.lc_y().deg(), Some(4));
        assert!(g.lc_y().is_one());
        assert!(two_factor_family(Field::Prime(5), 2, 2, &mut rng).is_err());
    }
}
