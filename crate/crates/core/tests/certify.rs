use irrcert::certify::*;
use irrcert::fixtures::gf2_composition;
use irrcert::oracle::{bifactor_all, is_irreducible_bi, OracleBudget};
use irrcert::{parse_bi, parse_multi, parse_uni, BiPoly, Degree, Error, Field, MultiPoly, UniPoly};

const Q: Field = Field::Rationals;
const GF2: Field = Field::Prime(2);
const GF3: Field = Field::Prime(3);

fn bi(t: &str, f: Field) -> BiPoly {
    parse_bi(t, f).unwrap()
}

fn uni(t: &str, f: Field) -> UniPoly {
    parse_uni(t, f).unwrap()
}

fn ones(f: Field) -> DivisorChoice {
    DivisorChoice::new(UniPoly::one(f), UniPoly::one(f))
}

fn oracle_count(f: &BiPoly, g: &BiPoly) -> u64 {
    bifactor_all(&f.compose(g).unwrap(), &OracleBudget::default()).unwrap().omega_bi
}

#[test]
fn theorem1_two_factor_case() {
    let f = bi("2*X^3 + X + 1 + (X^3 + 2)*Y + (X^2+1)^2*Y^2", GF3);
    let g = bi("Y^2", GF3);
    let out = check_theorem1(&f, &g, &ones(GF3), None).unwrap();
    let c = out.certificate().expect("certified");
    assert_eq!(c.rule, Rule::Thm1Strong);
    assert_eq!(c.verdict, Verdict::FactorBound(2));
    assert!(c.validate().is_ok());
    assert!(oracle_count(&f, &g) <= 2);
}

#[test]
fn theorem1_full_divisors_never_apply() {
    let f = bi("1 + X*Y + (X^2+1)^2*Y^2", GF3);
    let g = bi("Y + X^2*Y^2", GF3);
    let choice = DivisorChoice::new(f.lc_y(), g.lc_y());
    let out = check_theorem1(&f, &g, &choice, None).unwrap();
    assert!(!out.is_certified());
}

#[test]
fn theorem1_sparse_f() {
    let f = bi("1 + (X^2+1)^2*Y^2", GF3);
    let g = bi("Y + X^5", GF3);
    let c = check_theorem1(&f, &g, &ones(GF3), None).unwrap();
    let c = c.certificate().unwrap();
    assert_eq!(c.verdict, Verdict::FactorBound(2));
    assert_eq!(c.trace[0].lhs, Degree::Finite(4));
    assert_eq!(c.trace[0].rhs, Degree::Finite(0));
    assert!(oracle_count(&f, &g) <= 2);
}

#[test]
fn theorem1_wider_range_needs_evidence() {
    // the ranges coincide for m = 1, so take m = 2
    let f = bi("1 + Y + (X^2+1)^2*Y^2", GF3);
    let g = bi("Y", GF3);
    let d1 = uni("X^2 + 1", GF3);
    let choice = DivisorChoice::new(d1, UniPoly::one(GF3));
    // strong: 4 > 2*2 + 0 fails; wider: 4 > 1*2 + 0 holds
    let out = check_theorem1(&f, &g, &choice, None).unwrap();
    let r = out.rejection().unwrap();
    assert_eq!(r.rule, Rule::Thm1Strong);
    assert!(r.trace[1].holds());
    let ev = Assumption::new(Claim::FIrreducibleOverKX, Provenance::CallerAsserted);
    let out = check_theorem1(&f, &g, &choice, Some(&ev)).unwrap();
    let c = out.certificate().unwrap();
    assert_eq!(c.rule, Rule::Thm1Wider);
    assert_eq!(c.verdict, Verdict::FactorBound(1));
    assert_eq!(c.caller_asserted().count(), 1);
}

#[test]
fn theorem1_errors() {
    let g = bi("Y", Q);
    let f0 = bi("X*Y + Y^2", Q);
    assert!(matches!(check_theorem1(&f0, &g, &ones(Q), None), Err(Error::PreconditionViolated(_))));
    let fc = bi("X + 1", Q);
    assert!(matches!(check_theorem1(&fc, &g, &ones(Q), None), Err(Error::PreconditionViolated(_))));
    let f = bi("1 + X^2*Y", Q);
    let bad = DivisorChoice::new(uni("X + 1", Q), UniPoly::one(Q));
    assert!(matches!(check_theorem1(&f, &g, &bad, None), Err(Error::NotADivisor { .. })));
    assert!(matches!(
        check_theorem1(&f, &bi("1", Q), &ones(Q), None),
        Err(Error::PreconditionViolated(_))
    ));
}

#[test]
fn cor1_examples() {
    let f = bi("1 + X*Y + (X^4 + 5*X + 5)*Y^2", Q);
    let out = check_cor1(&f, &uni("X^4 + 5*X + 5", Q)).unwrap();
    let r = out.rejection().unwrap();
    assert_eq!(r.rule, Rule::Cor1);
    assert_eq!((r.trace[0].lhs, r.trace[0].rhs), (Degree::Finite(4), Degree::Finite(9)));
    let out = check_cor1(&f, &UniPoly::one(Q)).unwrap();
    let c = out.certificate().unwrap();
    assert_eq!(c.rule, Rule::Cor1);
    assert_eq!(c.verdict, Verdict::FactorBound(1));
    let flat = bi("X + 1 + 3*Y^2", Q);
    assert!(!check_cor1(&flat, &UniPoly::one(Q)).unwrap().is_certified());
}

#[test]
fn cor2_examples() {
    let f = bi("1 + X*Y + X^2*Y^2 + (X^4+5*X+5)*Y^3", Q);
    let out = check_cor2(&f, &uni("X^4+5*X+5", Q), &UniPoly::one(Q)).unwrap();
    let c = out.certificate().unwrap();
    assert_eq!((c.rule, c.verdict), (Rule::Cor2, Verdict::Irreducible));

    let s = bi("1 + (-X^2-5*X-6)*Y + (X^2+5*X+5)*Y^2", Q);
    let out = check_cor2(&s, &uni("X^2+5*X+5", Q), &UniPoly::one(Q)).unwrap();
    let e = out.rejection().unwrap().failing().unwrap().clone();
    assert_eq!((e.lhs, e.rhs), (Degree::Finite(2), Degree::Finite(2)));

    // q nonconstant over GF(2), cross-checked with the oracle
    let f = bi("1 + Y + (X^3+X+1)*(X+1)*Y^2", GF2);
    let out = check_cor2(&f, &uni("X^3+X+1", GF2), &uni("X+1", GF2)).unwrap();
    assert_eq!(out.certificate().unwrap().verdict, Verdict::Irreducible);
    assert!(is_irreducible_bi(&f, &OracleBudget::default()).unwrap());
}

#[test]
fn cor2_errors() {
    let f = bi("1 + X*Y + (X^4+5*X+5)*Y^2", Q);
    assert_eq!(check_cor2(&f, &uni("X^4+5*X+5", Q), &uni("2", Q)), Err(Error::FactorizationMismatch));
    let f = bi("1 + (X^2-1)*Y^2", Q);
    assert_eq!(check_cor2(&f, &uni("X^2-1", Q), &UniPoly::one(Q)), Err(Error::PNotIrreducible));
}

#[test]
fn cor3_examples() {
    let (f, g, p, q) = gf2_composition();
    assert!(is_irreducible_bi(&f, &OracleBudget::default()).unwrap());
    let ev = Assumption::new(Claim::FIrreducibleOverKX, Provenance::VerifiedByOracle);
    for g in [g.clone(), bi("Y^2", GF2)] {
        let out = check_cor3(&f, &g, &p, &q, Some(&ev)).unwrap();
        let c = out.certificate().unwrap();
        assert_eq!(c.verdict, Verdict::Irreducible);
        assert_eq!(c.assumptions, vec![ev.clone()]);
        assert_eq!(oracle_count(&f, &g), 1);
    }
    let g3 = bi("X^3*Y^2 + Y + 1", GF2);
    let out = check_cor3(&f, &g3, &p, &q, Some(&ev)).unwrap();
    let e = out.rejection().unwrap().failing().unwrap().clone();
    assert_eq!((e.lhs, e.rhs), (Degree::Finite(5), Degree::Finite(12)));
    assert!(matches!(check_cor3(&f, &g, &p, &q, None), Err(Error::MissingEvidence(_))));
}

#[test]
fn cor4_examples() {
    let (f, g, p, q) = gf2_composition();
    let out = check_cor4(&f, &g, &p, &q).unwrap();
    let c = out.certificate().unwrap();
    assert_eq!(c.verdict, Verdict::Irreducible);
    assert_eq!(c.trace.len(), 2);
    assert_eq!(
        c.assumptions,
        vec![Assumption::new(Claim::FIrreducibleOverKX, Provenance::CertifiedByCor2)]
    );
    assert_eq!(oracle_count(&f, &g), 1);

    // sharpness family: H1(f) = 2n
    let s = bi("1 + (-(X^2+5*X+5)^2 - 1)*Y + (X^2+5*X+5)^2*Y^2", Q);
    let p = uni("X^2+5*X+5", Q);
    assert!(!check_cor4(&s, &bi("Y^2", Q), &p, &p).unwrap().is_certified());

    let f = bi("1 + Y + (X^3+X+1)*Y^2", GF2);
    let g = bi("X*Y^3 + 1", GF2);
    let out = check_cor4(&f, &g, &uni("X^3+X+1", GF2), &UniPoly::one(GF2)).unwrap();
    let r = out.rejection().unwrap();
    assert_eq!((r.trace[1].lhs, r.trace[1].rhs), (Degree::Finite(3), Degree::Finite(6)));
}

fn m3(t: &str) -> MultiPoly {
    parse_multi(t, Q, 3).unwrap()
}

#[test]
fn cor5_two_variables_matches_theorem1() {
    let f = bi("1 + X*Y + (X^4 + 5*X + 5)*Y^2", Q);
    let g = bi("X + Y^2", Q);
    let fm = MultiPoly::from_bipoly(&f);
    let gm = MultiPoly::from_bipoly(&g);
    let one = MultiPoly::from_bipoly(&BiPoly::one(Q));
    let choice = MultiDivisorChoice {
        d1: one.clone(),
        d2: one,
    };
    let c5 = check_cor5(&fm, &gm, 1, &choice, None, None).unwrap();
    let c1 = check_theorem1(&f, &g, &ones(Q), None).unwrap();
    let (a, b) = (c5.certificate().unwrap(), c1.certificate().unwrap());
    assert_eq!(a.rule, Rule::Cor5Strong);
    assert_eq!((a.verdict, &a.trace), (b.verdict, &b.trace));
}

#[test]
fn cor5_three_variables() {
    let f = m3("1 + X1^3*X3 + X1*X2^5*X3^2");
    let g = m3("X3 + X2");
    let one = m3("1");
    let choice = MultiDivisorChoice {
        d1: one.clone(),
        d2: one,
    };
    assert_eq!(check_cor5(&f, &g, 1, &choice, None, None), Err(Error::MissingOmega));
    let j1 = check_cor5(&f, &g, 1, &choice, Some((6, 0)), None).unwrap();
    assert!(!j1.is_certified());
    let j2 = check_cor5(&f, &g, 2, &choice, Some((6, 0)), None).unwrap();
    let c = j2.certificate().unwrap();
    assert_eq!(c.verdict, Verdict::FactorBound(6));
    assert_eq!(c.caller_asserted().count(), 1);
    assert_eq!(c.assumptions[0].claim, Claim::OmegaValues);
    assert!(matches!(
        check_cor5(&f, &g, 3, &choice, Some((1, 0)), None),
        Err(Error::IndexOutOfRange { .. })
    ));
    let bad = MultiDivisorChoice {
        d1: m3("X1 + 1"),
        d2: m3("1"),
    };
    assert!(matches!(check_cor5(&f, &g, 2, &bad, Some((1, 0)), None), Err(Error::NotADivisor { .. })));
}

#[test]
fn cor6_examples() {
    let (f, g, p, q) = gf2_composition();
    let fm = MultiPoly::from_bipoly(&f);
    let gm = MultiPoly::from_bipoly(&g);
    let pm = MultiPoly::from_bipoly(&BiPoly::from_uni(p.clone()));
    let qm = MultiPoly::from_bipoly(&BiPoly::from_uni(q.clone()));
    let c6 = check_cor6(&fm, &gm, 1, &pm, &qm, None).unwrap();
    let c4 = check_cor4(&f, &g, &p, &q).unwrap();
    let (a, b) = (c6.certificate().unwrap(), c4.certificate().unwrap());
    assert_eq!((a.rule, a.verdict, &a.trace), (Rule::Cor6, b.verdict, &b.trace));

    let f = m3("X2 + X1*X3 + (X1^5 + X2)*X3^2");
    let g = m3("X3^2 + X1");
    let (p, q) = (m3("X1^5 + X2"), m3("1"));
    assert!(matches!(check_cor6(&f, &g, 1, &p, &q, None), Err(Error::MissingEvidence(_))));
    let ev = Assumption::new(Claim::PPrimeElement, Provenance::CallerAsserted);
    let out = check_cor6(&f, &g, 1, &p, &q, Some(&ev)).unwrap();
    let c = out.certificate().unwrap();
    assert_eq!(c.verdict, Verdict::Irreducible);
    assert_eq!(c.trace[0].rhs, Degree::Finite(1));
    assert_eq!(c.caller_asserted().count(), 1);
    assert_eq!(check_cor6(&f, &g, 1, &m3("X1^5"), &q, Some(&ev)), Err(Error::FactorizationMismatch));
}

#[test]
fn best_certificate_examples() {
    let opts = SearchOptions::default();
    let f = bi("1 + (X^4+5*X+5)*Y", Q);
    let c = best_certificate(&f, &bi("Y + X", Q), &opts).unwrap();
    let c = c.certificate().unwrap();
    assert_eq!(c.verdict, Verdict::FactorBound(1));
    assert_eq!(c.inputs["d1"], "1");

    let f = bi("X^3 + 2*X + 1 + X*Y + (X^2+1)^2*Y^2", GF3);
    let g = bi("Y^2 + X*Y + 2", GF3);
    let c = best_certificate(&f, &g, &opts).unwrap();
    let c = c.certificate().unwrap();
    assert_eq!(c.verdict, Verdict::FactorBound(2));
    assert_eq!((c.inputs["d1"].as_str(), c.inputs["d2"].as_str()), ("1", "1"));

    let f = bi("1 + (X^2+1)^3*Y", GF3);
    let c = best_certificate(&f, &bi("Y + X", GF3), &opts).unwrap();
    let c = c.certificate().unwrap();
    assert_eq!(c.verdict, Verdict::FactorBound(1));
    assert_eq!(c.inputs["d1"], "X^4 + 2*X^2 + 1");
}

#[test]
fn best_certificate_uses_wider_range_with_evidence() {
    let f = bi("1 + Y + (X^2+1)^2*Y^2", GF3);
    let g = bi("Y + X", GF3);
    let out = best_certificate(&f, &g, &SearchOptions::default()).unwrap();
    let c = out.certificate().unwrap();
    assert_eq!(c.rule, Rule::Thm1Wider);
    assert_eq!(c.verdict, Verdict::FactorBound(1));
    assert_eq!(c.assumptions[0].provenance, Provenance::VerifiedByOracle);
    assert!(oracle_count(&f, &g) <= 1);
}

#[test]
fn best_certificate_budget() {
    let f = bi("1 + (X^2+1)^3*Y", GF3);
    let opts = SearchOptions {
        budget: 2,
        ..SearchOptions::default()
    };
    assert!(matches!(best_certificate(&f, &bi("Y", GF3), &opts), Err(Error::BudgetExceeded(_))));
}

#[test]
fn issued_certificates_round_trip() {
    let (f, g, p, q) = gf2_composition();
    let out = check_cor4(&f, &g, &p, &q).unwrap();
    let c = out.certificate().unwrap();
    assert_eq!(Certificate::from_json(&c.to_json()).unwrap(), *c);
    let s = bi("1 + (-X^2-5*X-6)*Y + (X^2+5*X+5)*Y^2", Q);
    let out = check_cor2(&s, &uni("X^2+5*X+5", Q), &UniPoly::one(Q)).unwrap();
    let text = out.to_json();
    assert!(text.contains(r#""verdict":"NotApplicable""#));
    let back: Rejection = serde_json::from_str(&text).unwrap();
    assert_eq!(&back, out.rejection().unwrap());
}
