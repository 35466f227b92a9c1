use std::cmp::Ordering;

use super::rules::{check_cor2, check_theorem1, lin, DivisorChoice};
use super::{Assumption, Claim, Outcome, Provenance};
use crate::bivariate::BiPoly;
use crate::error::{Error, Result};
use crate::factor::{divisor_count, divisor_exponents, divisor_from_exponents, factor, FactorList, DEFAULT_SEED};
use crate::field::Field;
use crate::oracle::{is_irreducible_bi, OracleBudget};
use crate::uni::{Degree, UniPoly};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    /// Largest divisor lattice `|div(a_m)| * |div(b_n)|` that will be enumerated.
    pub budget: u128,
    /// Budget for the oracle when it is asked for evidence.
    pub oracle_budget: OracleBudget,
    /// Caller assertion that f is irreducible over K(X), used last.
    pub asserted_f_irreducible: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            budget: 1 << 16,
            oracle_budget: OracleBudget::default(),
            asserted_f_irreducible: false,
        }
    }
}

struct Candidate {
    bound: u64,
    degree_sum: u64,
    d1: UniPoly,
    d2: UniPoly,
    strong: bool,
    wider: bool,
}

impl Candidate {
    fn cmp_key(&self, other: &Candidate) -> Ordering {
        self.bound
            .cmp(&other.bound)
            .then(self.degree_sum.cmp(&other.degree_sum))
            .then_with(|| self.d1.canonical_cmp(&other.d1))
            .then_with(|| self.d2.canonical_cmp(&other.d2))
    }
}

fn degree_of(fl: &FactorList, exps: &[u32]) -> u64 {
    fl.factors
        .iter()
        .zip(exps)
        .map(|((f, _), &e)| f.deg().unwrap_or(0) as u64 * e as u64)
        .sum()
}

/// Evidence that f is irreducible over K(X), in order of preference:
/// a Cor2 certificate from a factor of `a_m`, the oracle, the caller.
fn wider_evidence(f: &BiPoly, fa: &FactorList, opts: &SearchOptions) -> Result<Option<Assumption>> {
    let am = f.lc_y();
    for (p, _) in &fa.factors {
        let q = am.div_exact(p).expect("factor divides a_m");
        if check_cor2(f, p, &q)?.is_certified() {
            return Ok(Some(Assumption::new(Claim::FIrreducibleOverKX, Provenance::CertifiedByCor2)));
        }
    }
    if let Field::Prime(_) = f.field() {
        match is_irreducible_bi(f, &opts.oracle_budget) {
            Ok(true) => return Ok(Some(Assumption::new(Claim::FIrreducibleOverKX, Provenance::VerifiedByOracle))),
            // f is reducible, so no assertion can be honoured
            Ok(false) => return Ok(None),
            Err(Error::BudgetExceeded(_)) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(opts
        .asserted_f_irreducible
        .then(|| Assumption::new(Claim::FIrreducibleOverKX, Provenance::CallerAsserted)))
}

/// Searches all monic `d1 | a_m`, `d2 | b_n` for the smallest bound, tie
/// broken by `deg d1 + deg d2` and then canonical divisor order.
pub fn best_certificate(f: &BiPoly, g: &BiPoly, opts: &SearchOptions) -> Result<Outcome> {
    let field = f.field();
    let trivial = DivisorChoice::new(UniPoly::one(field), UniPoly::one(field));
    // surfaces precondition errors in the same form as the single check
    let baseline = check_theorem1(f, g, &trivial, None)?;
    let (am, bn) = (f.lc_y(), g.lc_y());
    let (m, n) = (f.dy().expect("checked") as u64, g.dy().expect("checked") as u64);
    let fa = factor(&am, DEFAULT_SEED)?;
    let fb = factor(&bn, DEFAULT_SEED)?;
    let size = divisor_count(&fa).saturating_mul(divisor_count(&fb));
    if size > opts.budget {
        return Err(Error::BudgetExceeded(format!(
            "divisor lattice has {size} pairs, budget is {}",
            opts.budget
        )));
    }
    let h = f.h1_norm()?;
    let deg_am = am.degree();
    let (oa, ob) = (fa.omega(), fb.omega());
    let exps_b = divisor_exponents(&fb);
    let mut best_strong: Option<Candidate> = None;
    let mut best_wider: Option<Candidate> = None;
    for e1 in divisor_exponents(&fa) {
        let dd1 = Degree::Finite(degree_of(&fa, &e1));
        let om1 = oa - e1.iter().map(|&e| e as u64).sum::<u64>();
        for e2 in &exps_b {
            let dd2 = Degree::Finite(degree_of(&fb, e2));
            let om2 = ob - e2.iter().map(|&e| e as u64).sum::<u64>();
            let strong = deg_am > lin(&[(m * n, dd1), (m * m * n, dd2), (1, h)]);
            let wider = deg_am > lin(&[(n, dd1), (m * n, dd2), (1, h)]);
            if !wider {
                continue;
            }
            let c = Candidate {
                bound: om1 + m * om2,
                degree_sum: dd1.finite().unwrap_or(0) + dd2.finite().unwrap_or(0),
                d1: divisor_from_exponents(&fa, &e1),
                d2: divisor_from_exponents(&fb, e2),
                strong,
                wider,
            };
            let slot = if strong { &mut best_strong } else { &mut best_wider };
            if slot.as_ref().is_none_or(|b| c.cmp_key(b).is_lt()) {
                *slot = Some(c);
            }
        }
    }
    let improves = match (&best_wider, &best_strong) {
        (Some(w), Some(s)) => w.cmp_key(s).is_lt(),
        (Some(_), None) => true,
        _ => false,
    };
    if improves {
        if let Some(ev) = wider_evidence(f, &fa, opts)? {
            let w = best_wider.expect("present");
            debug_assert!(w.wider && !w.strong);
            return check_theorem1(f, g, &DivisorChoice::new(w.d1, w.d2), Some(&ev));
        }
    }
    match best_strong {
        Some(s) => check_theorem1(f, g, &DivisorChoice::new(s.d1, s.d2), None),
        None => Ok(baseline),
    }
}
