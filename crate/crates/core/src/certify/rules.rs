use std::collections::BTreeMap;

use super::{Assumption, Certificate, Claim, Outcome, Provenance, Rejection, Rule, TraceEntry, Verdict};
use crate::bivariate::BiPoly;
use crate::error::{Error, Result};
use crate::factor::{is_irreducible_uni, omega};
use crate::multi::MultiPoly;
use crate::uni::{Degree, UniPoly};

/// `d1 | a_m` and `d2 | b_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorChoice {
    pub d1: UniPoly,
    pub d2: UniPoly,
}

impl DivisorChoice {
    pub fn new(d1: UniPoly, d2: UniPoly) -> Self {
        DivisorChoice { d1, d2 }
    }
}

/// Divisors over `K[X_1..X_{r-1}]`, stored with arity `r` and no `X_r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiDivisorChoice {
    pub d1: MultiPoly,
    pub d2: MultiPoly,
}

/// `sum c_i * d_i`, where any `MinusInfinity` term with `c_i > 0` absorbs the sum.
pub(crate) fn lin(terms: &[(u64, Degree)]) -> Degree {
    let mut acc = 0u64;
    for &(c, d) in terms {
        match d {
            Degree::Finite(v) => acc += c * v,
            Degree::MinusInfinity if c > 0 => return Degree::MinusInfinity,
            Degree::MinusInfinity => {}
        }
    }
    Degree::Finite(acc)
}

fn deg(d: &UniPoly) -> Degree {
    d.degree()
}

/// Checks `m, n >= 1` and `a_0 != 0`; `a_m` and `b_n` are nonzero by definition.
fn bi_shape(f: &BiPoly, g: &BiPoly) -> Result<(u64, u64)> {
    if f.field() != g.field() {
        return Err(Error::MixedFields);
    }
    let m = f_shape(f)?;
    let n = match g.dy() {
        Some(n) if n >= 1 => n as u64,
        _ => return Err(Error::PreconditionViolated("deg_Y g must be at least 1 (b_n vanishes)".into())),
    };
    Ok((m, n))
}

fn f_shape(f: &BiPoly) -> Result<u64> {
    let m = match f.dy() {
        Some(m) if m >= 1 => m as u64,
        _ => return Err(Error::PreconditionViolated("deg_Y f must be at least 1 (a_m vanishes)".into())),
    };
    if f.coeff(0).is_zero() {
        return Err(Error::PreconditionViolated("a_0 vanishes".into()));
    }
    Ok(m)
}

fn divide(target: &UniPoly, divisor: &UniPoly, tname: &str, dname: &str) -> Result<UniPoly> {
    if divisor.field() != target.field() {
        return Err(Error::MixedFields);
    }
    if divisor.is_zero() {
        return Err(Error::NotADivisor {
            divisor: format!("{dname} = 0"),
            target: tname.into(),
        });
    }
    target.div_exact(divisor).ok_or_else(|| Error::NotADivisor {
        divisor: format!("{dname} = {divisor}"),
        target: format!("{tname} = {target}"),
    })
}

fn inputs(f: &BiPoly, entries: &[(&str, String)]) -> BTreeMap<String, String> {
    let mut map = BTreeMap::new();
    map.insert("field".to_string(), f.field().descriptor().to_string());
    for (k, v) in entries {
        map.insert(k.to_string(), v.clone());
    }
    map
}

fn certified(rule: Rule, verdict: Verdict, trace: Vec<TraceEntry>, assumptions: Vec<Assumption>, inputs: BTreeMap<String, String>) -> Outcome {
    Outcome::Certified(Certificate {
        rule,
        verdict,
        trace,
        assumptions,
        inputs,
    })
}

fn rejected(rule: Rule, reason: impl Into<String>, trace: Vec<TraceEntry>) -> Outcome {
    Outcome::NotApplicable(Rejection {
        rule,
        reason: reason.into(),
        trace,
    })
}

fn require_claim(evidence: Option<&Assumption>, claim: Claim) -> Result<Option<&Assumption>> {
    match evidence {
        Some(a) if a.claim != claim => Err(Error::PreconditionViolated(format!(
            "evidence claims {:?}, expected {claim:?}",
            a.claim
        ))),
        e => Ok(e),
    }
}

/// Ranges of the main bound, on degree data in one chosen variable.
struct RangeData {
    m: u64,
    n: u64,
    deg_am: Degree,
    deg_d1: Degree,
    deg_d2: Degree,
    h: Degree,
}

impl RangeData {
    fn strong(&self, dv: &str, h: &str) -> TraceEntry {
        let (m, n) = (self.m, self.n);
        TraceEntry::new(
            format!("{dv} a_m > mn*{dv} d1 + m^2*n*{dv} d2 + {h}"),
            self.deg_am,
            lin(&[(m * n, self.deg_d1), (m * m * n, self.deg_d2), (1, self.h)]),
        )
    }

    fn wider(&self, dv: &str, h: &str) -> TraceEntry {
        let (m, n) = (self.m, self.n);
        TraceEntry::new(
            format!("{dv} a_m > n*{dv} d1 + mn*{dv} d2 + {h}"),
            self.deg_am,
            lin(&[(n, self.deg_d1), (m * n, self.deg_d2), (1, self.h)]),
        )
    }
}

/// Decides between the strong and wider ranges. `bound` is only evaluated
/// when a certificate is issued.
fn decide_ranges(
    data: &RangeData,
    names: (&str, &str),
    rules: (Rule, Rule),
    evidence: Option<&Assumption>,
    mut base_assumptions: Vec<Assumption>,
    bound: impl FnOnce() -> Result<u64>,
    inputs: BTreeMap<String, String>,
) -> Result<Outcome> {
    let strong = data.strong(names.0, names.1);
    if strong.holds() {
        let b = bound()?;
        return Ok(certified(rules.0, Verdict::FactorBound(b), vec![strong], base_assumptions, inputs));
    }
    let wider = data.wider(names.0, names.1);
    match evidence {
        Some(ev) if wider.holds() => {
            let b = bound()?;
            base_assumptions.push(ev.clone());
            Ok(certified(rules.1, Verdict::FactorBound(b), vec![wider], base_assumptions, inputs))
        }
        Some(_) => Ok(rejected(rules.1, "neither range inequality holds", vec![strong, wider])),
        None if wider.holds() => Ok(rejected(
            rules.0,
            "strong range fails; the wider range holds but needs evidence that f is irreducible",
            vec![strong, wider],
        )),
        None => Ok(rejected(rules.0, "neither range inequality holds", vec![strong, wider])),
    }
}

/// Bound on the number of irreducible factors of `f(X, g(X, Y))` over K(X).
/// The wider range is used only with `evidence` that f is irreducible over K(X).
pub fn check_theorem1(f: &BiPoly, g: &BiPoly, choice: &DivisorChoice, evidence: Option<&Assumption>) -> Result<Outcome> {
    let (m, n) = bi_shape(f, g)?;
    let evidence = require_claim(evidence, Claim::FIrreducibleOverKX)?;
    let (am, bn) = (f.lc_y(), g.lc_y());
    let q1 = divide(&am, &choice.d1, "a_m", "d1")?;
    let q2 = divide(&bn, &choice.d2, "b_n", "d2")?;
    let data = RangeData {
        m,
        n,
        deg_am: deg(&am),
        deg_d1: deg(&choice.d1),
        deg_d2: deg(&choice.d2),
        h: f.h1_norm()?,
    };
    let inputs = inputs(
        f,
        &[
            ("f", f.to_text()),
            ("g", g.to_text()),
            ("d1", choice.d1.to_text("X")),
            ("d2", choice.d2.to_text("X")),
        ],
    );
    decide_ranges(
        &data,
        ("deg", "H1(f)"),
        (Rule::Thm1Strong, Rule::Thm1Wider),
        evidence,
        Vec::new(),
        || Ok(omega(&q1)? + m * omega(&q2)?),
        inputs,
    )
}

/// The case `g = Y`, `d2 = 1`; identical to [`check_theorem1`] up to the rule label.
pub fn check_cor1(f: &BiPoly, d: &UniPoly) -> Result<Outcome> {
    let field = f.field();
    let choice = DivisorChoice::new(d.clone(), UniPoly::one(field));
    Ok(check_theorem1(f, &BiPoly::y(field), &choice, None)?.relabel(|_| Rule::Cor1))
}

/// `a_m = p*q` with `p` irreducible.
fn check_split(f: &BiPoly, p: &UniPoly, q: &UniPoly) -> Result<()> {
    if p.field() != f.field() || q.field() != f.field() {
        return Err(Error::MixedFields);
    }
    if &(p * q) != &f.lc_y() {
        return Err(Error::FactorizationMismatch);
    }
    if p.is_constant() || !is_irreducible_uni(p)? {
        return Err(Error::PNotIrreducible);
    }
    Ok(())
}

fn cor2_entry(m: u64, deg_p: Degree, deg_q: Degree, h: Degree, dv: &str, hname: &str) -> TraceEntry {
    TraceEntry::new(
        format!("{dv} p > (m-1)*{dv} q + {hname}"),
        deg_p,
        lin(&[(m - 1, deg_q), (1, h)]),
    )
}

fn cor3_entry(m: u64, n: u64, deg_p: Degree, deg_q: Degree, deg_bn: Degree, h: Degree, dv: &str, hname: &str) -> TraceEntry {
    TraceEntry::new(
        format!("{dv} p > (n-1)*{dv} q + mn*{dv} b_n + {hname}"),
        deg_p,
        lin(&[(n - 1, deg_q), (m * n, deg_bn), (1, h)]),
    )
}

/// Irreducibility of `f` over K(X) from a split `a_m = p*q` with `p` irreducible.
pub fn check_cor2(f: &BiPoly, p: &UniPoly, q: &UniPoly) -> Result<Outcome> {
    let m = f_shape(f)?;
    check_split(f, p, q)?;
    let e = cor2_entry(m, deg(p), deg(q), f.h1_norm()?, "deg", "H1(f)");
    let inputs = inputs(f, &[("f", f.to_text()), ("p", p.to_text("X")), ("q", q.to_text("X"))]);
    if e.holds() {
        Ok(certified(Rule::Cor2, Verdict::Irreducible, vec![e], Vec::new(), inputs))
    } else {
        Ok(rejected(Rule::Cor2, "the inequality fails", vec![e]))
    }
}

/// Irreducibility of `f(X, g(X, Y))` given evidence that `f` is irreducible over K(X).
pub fn check_cor3(f: &BiPoly, g: &BiPoly, p: &UniPoly, q: &UniPoly, evidence: Option<&Assumption>) -> Result<Outcome> {
    let (m, n) = bi_shape(f, g)?;
    check_split(f, p, q)?;
    let ev = match require_claim(evidence, Claim::FIrreducibleOverKX) {
        Ok(Some(ev)) => ev,
        _ => return Err(Error::MissingEvidence("f irreducible over K(X)".into())),
    };
    let e = cor3_entry(m, n, deg(p), deg(q), deg(&g.lc_y()), f.h1_norm()?, "deg", "H1(f)");
    let inputs = inputs(
        f,
        &[("f", f.to_text()), ("g", g.to_text()), ("p", p.to_text("X")), ("q", q.to_text("X"))],
    );
    if e.holds() {
        Ok(certified(Rule::Cor3, Verdict::Irreducible, vec![e], vec![ev.clone()], inputs))
    } else {
        Ok(rejected(Rule::Cor3, "the inequality fails", vec![e]))
    }
}

/// Irreducibility of `f(X, g(X, Y))`; the first inequality makes `f`
/// irreducible, so no outside evidence is needed.
pub fn check_cor4(f: &BiPoly, g: &BiPoly, p: &UniPoly, q: &UniPoly) -> Result<Outcome> {
    let (m, n) = bi_shape(f, g)?;
    check_split(f, p, q)?;
    let h = f.h1_norm()?;
    let e2 = cor2_entry(m, deg(p), deg(q), h, "deg", "H1(f)");
    let e3 = cor3_entry(m, n, deg(p), deg(q), deg(&g.lc_y()), h, "deg", "H1(f)");
    let inputs = inputs(
        f,
        &[("f", f.to_text()), ("g", g.to_text()), ("p", p.to_text("X")), ("q", q.to_text("X"))],
    );
    if e2.holds() && e3.holds() {
        let a = Assumption::new(Claim::FIrreducibleOverKX, Provenance::CertifiedByCor2);
        Ok(certified(Rule::Cor4, Verdict::Irreducible, vec![e2, e3], vec![a], inputs))
    } else {
        Ok(rejected(Rule::Cor4, "the max inequality fails", vec![e2, e3]))
    }
}

struct MultiShape {
    r: usize,
    m: u64,
    n: u64,
    am: MultiPoly,
    bn: MultiPoly,
}

fn multi_shape(f: &MultiPoly, g: &MultiPoly, j: usize) -> Result<MultiShape> {
    if f.field() != g.field() {
        return Err(Error::MixedFields);
    }
    let r = f.nvars();
    if g.nvars() != r {
        return Err(Error::MixedArity(format!("f has {r} variables, g has {}", g.nvars())));
    }
    if j == 0 || j >= r {
        return Err(Error::IndexOutOfRange { index: j, max: r - 1 });
    }
    let a = f.coeffs_in_last();
    let b = g.coeffs_in_last();
    if a.len() < 2 {
        return Err(Error::PreconditionViolated("deg_{X_r} f must be at least 1 (a_m vanishes)".into()));
    }
    if b.len() < 2 {
        return Err(Error::PreconditionViolated("deg_{X_r} g must be at least 1 (b_n vanishes)".into()));
    }
    if a[0].is_zero() {
        return Err(Error::PreconditionViolated("a_0 vanishes".into()));
    }
    Ok(MultiShape {
        r,
        m: (a.len() - 1) as u64,
        n: (b.len() - 1) as u64,
        am: a.last().cloned().expect("nonempty"),
        bn: b.last().cloned().expect("nonempty"),
    })
}

fn same_arity(r: usize, polys: &[(&str, &MultiPoly)]) -> Result<()> {
    for (name, p) in polys {
        if p.nvars() != r {
            return Err(Error::MixedArity(format!("{name} has {} variables, expected {r}", p.nvars())));
        }
        if !p.deg(r)?.finite().is_none_or(|d| d == 0) {
            return Err(Error::PreconditionViolated(format!("{name} must not involve X{r}")));
        }
    }
    Ok(())
}

fn as_uni(p: &MultiPoly, name: &str) -> Result<UniPoly> {
    let b = p.to_bipoly(1)?;
    if b.dy().is_some_and(|d| d > 0) {
        return Err(Error::PreconditionViolated(format!("{name} must not involve X2")));
    }
    Ok(b.coeff(0))
}

fn multi_inputs(f: &MultiPoly, j: usize, entries: &[(&str, String)]) -> BTreeMap<String, String> {
    let mut map = BTreeMap::new();
    map.insert("field".to_string(), f.field().descriptor().to_string());
    map.insert("j".to_string(), j.to_string());
    for (k, v) in entries {
        map.insert(k.to_string(), v.clone());
    }
    map
}

/// The bound in `r` variables, read in `X_j`. For `r = 2` the Ω values are
/// computed here; for `r > 2` they must be supplied and are recorded as
/// caller-asserted.
pub fn check_cor5(
    f: &MultiPoly,
    g: &MultiPoly,
    j: usize,
    choice: &MultiDivisorChoice,
    omega_values: Option<(u64, u64)>,
    evidence: Option<&Assumption>,
) -> Result<Outcome> {
    let s = multi_shape(f, g, j)?;
    same_arity(s.r, &[("d1", &choice.d1), ("d2", &choice.d2)])?;
    let evidence = require_claim(evidence, Claim::FIrreducibleOverKX)?;
    let map = |r: Rule| match r {
        Rule::Thm1Wider => Rule::Cor5Wider,
        _ => Rule::Cor5Strong,
    };
    if s.r == 2 {
        let (fb, gb) = (f.to_bipoly(1)?, g.to_bipoly(1)?);
        let c = DivisorChoice::new(as_uni(&choice.d1, "d1")?, as_uni(&choice.d2, "d2")?);
        let mut out = check_theorem1(&fb, &gb, &c, evidence)?.relabel(map);
        if let Outcome::Certified(cert) = &mut out {
            cert.inputs.insert("j".into(), j.to_string());
        }
        return Ok(out);
    }
    for (name, d, target) in [("d1", &choice.d1, &s.am), ("d2", &choice.d2, &s.bn)] {
        if d.is_zero() || target.div_exact(d).is_none() {
            return Err(Error::NotADivisor {
                divisor: format!("{name} = {d}"),
                target: target.to_string(),
            });
        }
    }
    let (o1, o2) = omega_values.ok_or(Error::MissingOmega)?;
    let data = RangeData {
        m: s.m,
        n: s.n,
        deg_am: s.am.deg(j)?,
        deg_d1: choice.d1.deg(j)?,
        deg_d2: choice.d2.deg(j)?,
        h: f.hj_norm(j)?,
    };
    let inputs = multi_inputs(
        f,
        j,
        &[
            ("f", f.to_text()),
            ("g", g.to_text()),
            ("d1", choice.d1.to_text()),
            ("d2", choice.d2.to_text()),
            ("omega1", o1.to_string()),
            ("omega2", o2.to_string()),
        ],
    );
    let dv = format!("deg_X{j}");
    let hn = format!("H{j}(f)");
    decide_ranges(
        &data,
        (&dv, &hn),
        (Rule::Cor5Strong, Rule::Cor5Wider),
        evidence,
        vec![Assumption::new(Claim::OmegaValues, Provenance::CallerAsserted)],
        || Ok(o1 + s.m * o2),
        inputs,
    )
}

/// Irreducibility in `r` variables from `a_m = p*q` with `p` prime in
/// `K[X_1..X_{r-1}]`. For `r = 2` primality is verified here; for `r > 2`
/// it must come with the evidence.
pub fn check_cor6(
    f: &MultiPoly,
    g: &MultiPoly,
    j: usize,
    p: &MultiPoly,
    q: &MultiPoly,
    evidence: Option<&Assumption>,
) -> Result<Outcome> {
    let s = multi_shape(f, g, j)?;
    same_arity(s.r, &[("p", p), ("q", q)])?;
    if p.checked_mul(q)? != s.am {
        return Err(Error::FactorizationMismatch);
    }
    if s.r == 2 {
        let (fb, gb) = (f.to_bipoly(1)?, g.to_bipoly(1)?);
        let (pu, qu) = (as_uni(p, "p")?, as_uni(q, "q")?);
        let mut out = check_cor4(&fb, &gb, &pu, &qu)?.relabel(|_| Rule::Cor6);
        if let Outcome::Certified(cert) = &mut out {
            cert.assumptions
                .insert(0, Assumption::new(Claim::PPrimeElement, Provenance::VerifiedByFactorization));
            cert.inputs.insert("j".into(), j.to_string());
        }
        return Ok(out);
    }
    let ev = match require_claim(evidence, Claim::PPrimeElement) {
        Ok(Some(ev)) => ev.clone(),
        _ => return Err(Error::MissingEvidence("p prime in K[X_1..X_{r-1}]".into())),
    };
    let h = f.hj_norm(j)?;
    let (dp, dq, dbn) = (p.deg(j)?, q.deg(j)?, s.bn.deg(j)?);
    let dv = format!("deg_X{j}");
    let hn = format!("H{j}(f)");
    let e2 = cor2_entry(s.m, dp, dq, h, &dv, &hn);
    let e3 = cor3_entry(s.m, s.n, dp, dq, dbn, h, &dv, &hn);
    let inputs = multi_inputs(
        f,
        j,
        &[("f", f.to_text()), ("g", g.to_text()), ("p", p.to_text()), ("q", q.to_text())],
    );
    if e2.holds() && e3.holds() {
        let a = Assumption::new(Claim::FIrreducibleOverKX, Provenance::CertifiedByCor2);
        Ok(certified(Rule::Cor6, Verdict::Irreducible, vec![e2, e3], vec![ev, a], inputs))
    } else {
        Ok(rejected(Rule::Cor6, "the max inequality fails", vec![e2, e3]))
    }
}
