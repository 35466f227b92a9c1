//! `irrcert`: certify factor-count bounds for `f(X, g(X, Y))` from the
//! command line.
//!
//! Results go to standard output as canonical JSON, a short summary goes to
//! standard error. Exit codes: 0 success, 1 failure or unsound
//! certificate, 2 usage or parse error, 3 not applicable under `--strict`,
//! 4 budget exceeded.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use irrcert::fixtures::{eisenstein_family, eisenstein_poly, gf2_composition, sharpness_one, sharpness_two, two_factor_family};
use irrcert::{
    best_certificate, bifactor_all, check_cor1, check_cor2, check_cor3, check_cor4, check_cor5, check_cor6,
    check_theorem1, factor, parse_bi, parse_multi, parse_uni, Assumption, BiFactorization, BiPoly, Claim,
    DivisorChoice, Error, FactorList, Field, FieldDescriptor, MultiDivisorChoice, MultiPoly, OracleBudget, Outcome,
    Provenance, SearchOptions, UniPoly, Verdict,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::value::RawValue;

#[derive(Parser)]
#[command(name = "irrcert", version, about = "Irreducibility and factor-count certificates for f(X, g(X, Y))")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check one rule, or search all divisor choices with `--rule auto`.
    Certify(CertifyArgs),
    /// The factor bound for explicit divisors `d1 | a_m`, `d2 | b_n`.
    Bound(BoundArgs),
    /// Factor a univariate polynomial.
    Factor(FactorArgs),
    /// Exhaustive factorization of a bivariate polynomial over GF(p)(X).
    Oracle(OracleArgs),
    /// Best certificate for `f(X, g)` checked against the oracle.
    Verify(VerifyArgs),
    /// Reproduce one of the built-in example families.
    Examples(ExamplesArgs),
}

#[derive(Args)]
struct Common {
    /// `Q` or `GF(p)`.
    #[arg(long, default_value = "Q")]
    field: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum RuleArg {
    Thm1,
    Cor1,
    Cor2,
    Cor3,
    Cor4,
    Cor5,
    Cor6,
    Auto,
}

#[derive(Args)]
struct CertifyArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long, value_enum)]
    rule: RuleArg,
    #[arg(long)]
    f: String,
    #[arg(long)]
    g: Option<String>,
    #[arg(long)]
    p: Option<String>,
    #[arg(long)]
    q: Option<String>,
    #[arg(long)]
    d1: Option<String>,
    #[arg(long)]
    d2: Option<String>,
    /// Index of the variable the degrees are read in (cor5, cor6).
    #[arg(long, default_value_t = 1)]
    j: usize,
    /// Number of variables of f and g (cor5, cor6).
    #[arg(long, default_value_t = 2)]
    vars: usize,
    /// Ω(a_m/d1) when there are more than two variables (cor5).
    #[arg(long)]
    omega1: Option<u64>,
    /// Ω(b_n/d2) when there are more than two variables (cor5).
    #[arg(long)]
    omega2: Option<u64>,
    /// Largest divisor lattice searched by `--rule auto`.
    #[arg(long)]
    budget: Option<u128>,
    #[arg(long)]
    strict: bool,
    #[arg(long)]
    assert_f_irreducible: bool,
    #[arg(long)]
    assert_p_prime: bool,
}

#[derive(Args)]
struct BoundArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long)]
    f: String,
    #[arg(long)]
    g: String,
    #[arg(long)]
    d1: String,
    #[arg(long)]
    d2: String,
    #[arg(long)]
    strict: bool,
    #[arg(long)]
    assert_f_irreducible: bool,
}

#[derive(Args)]
struct FactorArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long, required_unless_present = "from_file", conflicts_with = "from_file")]
    poly: Option<String>,
    /// One polynomial per line; blank lines and `#` comments are skipped.
    #[arg(long)]
    from_file: Option<PathBuf>,
}

#[derive(Args)]
struct OracleArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long)]
    f: String,
    /// Candidate divisors the search may generate.
    #[arg(long)]
    budget: Option<u64>,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long)]
    f: String,
    #[arg(long)]
    g: String,
    /// Candidate divisors the oracle may generate.
    #[arg(long)]
    budget: Option<u64>,
    #[arg(long)]
    assert_f_irreducible: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExampleName {
    /// Eisenstein leading coefficient over Q; irreducible by cor2.
    Eisenstein,
    /// Divisible by Y - 1 once the low coefficients are as large as a_m.
    #[value(name = "sharpness-1")]
    SharpnessOne,
    /// Leading coefficient with two prime factors (Q or GF(3)).
    TwoFactor,
    /// f(X, Y^2) with at least three factors over GF(3).
    #[value(name = "sharpness-2")]
    SharpnessTwo,
    /// A GF(2) composition irreducible by cor4.
    Gf2Composition,
}

#[derive(Args)]
struct ExamplesArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long, value_enum)]
    name: ExampleName,
    #[arg(long, default_value_t = 2)]
    m: usize,
    #[arg(long, default_value_t = 2)]
    d: usize,
    #[arg(long, default_value_t = 2)]
    n: usize,
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Syntax { .. }
            | Error::UnknownVariable { .. }
            | Error::MixedArity(_)
            | Error::InvalidDescriptor(_)
            | Error::CompositeModulus(_) => 2,
            Error::BudgetExceeded(_) => 4,
            _ => 1,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

type Run = Result<u8, Failure>;

fn field_of(c: &Common) -> Result<Field, Failure> {
    let desc: FieldDescriptor = c.field.parse()?;
    Ok(Field::new(&desc)?)
}

fn need<'a>(flag: &str, v: &'a Option<String>) -> Result<&'a str, Failure> {
    v.as_deref().ok_or_else(|| usage(format!("--{flag} is required for this rule")))
}

fn uni_or_one(v: &Option<String>, field: Field) -> Result<UniPoly, Failure> {
    match v {
        Some(t) => Ok(parse_uni(t, field)?),
        None => Ok(UniPoly::one(field)),
    }
}

fn raw(json: String) -> Box<RawValue> {
    RawValue::from_string(json).expect("library emits valid JSON")
}

fn summarize(out: &Outcome) {
    match out {
        Outcome::Certified(c) => {
            let claim = match c.verdict {
                Verdict::Irreducible => "f(X, g) is irreducible over K(X)".to_string(),
                Verdict::FactorBound(b) => format!("f(X, g) has at most {b} irreducible factors over K(X)"),
            };
            eprintln!("{}: {claim}", c.rule);
            for a in c.caller_asserted() {
                eprintln!("  relies on caller assertion {:?}", a.claim);
            }
        }
        Outcome::NotApplicable(r) => {
            eprintln!("{}: not applicable: {}", r.rule, r.reason);
            if let Some(t) = r.failing() {
                eprintln!("  failing: {t}");
            }
        }
    }
}

fn emit_outcome(out: &Outcome, strict: bool) -> u8 {
    println!("{}", out.to_json());
    summarize(out);
    if strict && !out.is_certified() {
        3
    } else {
        0
    }
}

fn asserted(flag: bool, claim: Claim) -> Option<Assumption> {
    flag.then(|| Assumption::new(claim, Provenance::CallerAsserted))
}

fn certify(a: &CertifyArgs) -> Run {
    let field = field_of(&a.common)?;
    let f_irr = asserted(a.assert_f_irreducible, Claim::FIrreducibleOverKX);
    let out = match a.rule {
        RuleArg::Cor5 | RuleArg::Cor6 => {
            let multi = |t: &str| -> Result<MultiPoly, Failure> { Ok(parse_multi(t, field, a.vars)?) };
            let (f, g) = (multi(&a.f)?, multi(need("g", &a.g)?)?);
            let opt = |v: &Option<String>| multi(v.as_deref().unwrap_or("1"));
            if let RuleArg::Cor5 = a.rule {
                let choice = MultiDivisorChoice {
                    d1: opt(&a.d1)?,
                    d2: opt(&a.d2)?,
                };
                let omegas = match (a.omega1, a.omega2) {
                    (Some(x), Some(y)) => Some((x, y)),
                    (None, None) => None,
                    _ => return Err(usage("--omega1 and --omega2 go together")),
                };
                check_cor5(&f, &g, a.j, &choice, omegas, f_irr.as_ref())?
            } else {
                let (p, q) = (multi(need("p", &a.p)?)?, opt(&a.q)?);
                let p_prime = asserted(a.assert_p_prime, Claim::PPrimeElement);
                check_cor6(&f, &g, a.j, &p, &q, p_prime.as_ref())?
            }
        }
        RuleArg::Cor1 | RuleArg::Cor2 => {
            let f = parse_bi(&a.f, field)?;
            if let RuleArg::Cor1 = a.rule {
                check_cor1(&f, &uni_or_one(&a.d1, field)?)?
            } else {
                let p = parse_uni(need("p", &a.p)?, field)?;
                check_cor2(&f, &p, &uni_or_one(&a.q, field)?)?
            }
        }
        rule => {
            let f = parse_bi(&a.f, field)?;
            let g = parse_bi(need("g", &a.g)?, field)?;
            match rule {
                RuleArg::Thm1 => {
                    let choice = DivisorChoice::new(uni_or_one(&a.d1, field)?, uni_or_one(&a.d2, field)?);
                    check_theorem1(&f, &g, &choice, f_irr.as_ref())?
                }
                RuleArg::Cor3 | RuleArg::Cor4 => {
                    let p = parse_uni(need("p", &a.p)?, field)?;
                    let q = uni_or_one(&a.q, field)?;
                    if let RuleArg::Cor3 = rule {
                        check_cor3(&f, &g, &p, &q, f_irr.as_ref())?
                    } else {
                        check_cor4(&f, &g, &p, &q)?
                    }
                }
                _ => {
                    let mut opts = SearchOptions {
                        asserted_f_irreducible: a.assert_f_irreducible,
                        ..SearchOptions::default()
                    };
                    if let Some(b) = a.budget {
                        opts.budget = b;
                    }
                    best_certificate(&f, &g, &opts)?
                }
            }
        }
    };
    Ok(emit_outcome(&out, a.strict))
}

fn bound(a: &BoundArgs) -> Run {
    let field = field_of(&a.common)?;
    let (f, g) = (parse_bi(&a.f, field)?, parse_bi(&a.g, field)?);
    let choice = DivisorChoice::new(parse_uni(&a.d1, field)?, parse_uni(&a.d2, field)?);
    let f_irr = asserted(a.assert_f_irreducible, Claim::FIrreducibleOverKX);
    let out = check_theorem1(&f, &g, &choice, f_irr.as_ref())?;
    Ok(emit_outcome(&out, a.strict))
}

#[derive(Serialize)]
struct FactorEntry {
    factor: String,
    multiplicity: String,
}

#[derive(Serialize)]
struct FactorReport {
    field: String,
    input: String,
    unit: String,
    factors: Vec<FactorEntry>,
    omega: String,
}

fn uni_entries(fl: &FactorList) -> Vec<FactorEntry> {
    fl.factors
        .iter()
        .map(|(p, e)| FactorEntry {
            factor: p.to_string(),
            multiplicity: e.to_string(),
        })
        .collect()
}

fn factor_cmd(a: &FactorArgs) -> Run {
    let field = field_of(&a.common)?;
    let lines: Vec<String> = match (&a.poly, &a.from_file) {
        (Some(p), _) => vec![p.clone()],
        (None, Some(path)) => fs::read_to_string(path)
            .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(String::from)
            .collect(),
        (None, None) => return Err(usage("--poly or --from-file is required")),
    };
    for line in lines {
        let u = parse_uni(&line, field)?;
        let fl = factor(&u, a.common.seed)?;
        let report = FactorReport {
            field: field.to_string(),
            input: u.to_string(),
            unit: fl.unit.to_string(),
            factors: uni_entries(&fl),
            omega: fl.omega().to_string(),
        };
        println!("{}", serde_json::to_string(&report).expect("serializable"));
        eprintln!("{u} = {fl}  (omega {})", fl.omega());
    }
    Ok(0)
}

#[derive(Serialize)]
struct BiReport {
    field: String,
    input: String,
    content_unit: String,
    content: Vec<FactorEntry>,
    yfactors: Vec<FactorEntry>,
    omega_bi: String,
}

fn bi_report(field: Field, f: &BiPoly, fz: &BiFactorization) -> BiReport {
    BiReport {
        field: field.to_string(),
        input: f.to_string(),
        content_unit: fz.content.unit.to_string(),
        content: uni_entries(&fz.content),
        yfactors: fz
            .yfactors
            .iter()
            .map(|(h, e)| FactorEntry {
                factor: h.to_string(),
                multiplicity: e.to_string(),
            })
            .collect(),
        omega_bi: fz.omega_bi.to_string(),
    }
}

fn oracle_budget(b: Option<u64>) -> Result<OracleBudget, Failure> {
    match b {
        Some(n) => Ok(OracleBudget::with_candidates(n).map_err(|e| usage(e.to_string()))?),
        None => Ok(OracleBudget::default()),
    }
}

fn oracle(a: &OracleArgs) -> Run {
    let field = field_of(&a.common)?;
    let f = parse_bi(&a.f, field)?;
    let fz = bifactor_all(&f, &oracle_budget(a.budget)?)?;
    println!("{}", serde_json::to_string(&bi_report(field, &f, &fz)).expect("serializable"));
    eprintln!("{fz}  (omega_bi {})", fz.omega_bi);
    Ok(0)
}

#[derive(Serialize)]
struct VerifyReport {
    bound: Option<String>,
    count: String,
    sound: bool,
    outcome: Box<RawValue>,
    composition: BiReport,
}

fn verify(a: &VerifyArgs) -> Run {
    let field = field_of(&a.common)?;
    let (f, g) = (parse_bi(&a.f, field)?, parse_bi(&a.g, field)?);
    let ob = oracle_budget(a.budget)?;
    let opts = SearchOptions {
        oracle_budget: ob,
        asserted_f_irreducible: a.assert_f_irreducible,
        ..SearchOptions::default()
    };
    let out = best_certificate(&f, &g, &opts)?;
    let h = f.compose(&g)?;
    let fz = bifactor_all(&h, &ob)?;
    let bound = out.certificate().map(|c| c.bound());
    let sound = bound.is_none_or(|b| fz.omega_bi <= b);
    let report = VerifyReport {
        bound: bound.map(|b| b.to_string()),
        count: fz.omega_bi.to_string(),
        sound,
        outcome: raw(out.to_json()),
        composition: bi_report(field, &h, &fz),
    };
    println!("{}", serde_json::to_string(&report).expect("serializable"));
    summarize(&out);
    match bound {
        Some(b) => eprintln!("bound {b}, exact count {}: {}", fz.omega_bi, if sound { "sound" } else { "VIOLATED" }),
        None => eprintln!("no bound issued, exact count {}", fz.omega_bi),
    }
    if sound {
        Ok(0)
    } else {
        Err(Failure {
            code: 1,
            message: format!("certificate claims at most {} factors, oracle found {}", bound.unwrap_or(0), fz.omega_bi),
        })
    }
}

#[derive(Serialize)]
struct CheckLine {
    name: String,
    holds: bool,
}

#[derive(Serialize)]
struct ExampleReport {
    name: String,
    field: String,
    f: String,
    g: Option<String>,
    checks: Vec<CheckLine>,
    outcome: Box<RawValue>,
}

fn check(name: &str, holds: bool) -> CheckLine {
    CheckLine {
        name: name.into(),
        holds,
    }
}

fn divides(f: &BiPoly, t: &str) -> Result<bool, Failure> {
    let d = parse_bi(t, f.field())?;
    Ok(f.divmod_y(&d)?.1.is_zero())
}

fn examples(a: &ExamplesArgs) -> Run {
    let field = field_of(&a.common)?;
    let mut rng = ChaCha8Rng::seed_from_u64(a.common.seed);
    let one = UniPoly::one(field);
    let (name, f, g, checks, out) = match a.name {
        ExampleName::Eisenstein => {
            let f = eisenstein_family(a.m, a.d, &mut rng)?;
            let out = check_cor2(&f, &eisenstein_poly(a.d), &UniPoly::one(f.field()))?;
            ("eisenstein", f, None, vec![], out)
        }
        ExampleName::SharpnessOne => {
            let f = sharpness_one(a.m, a.d)?;
            let checks = vec![check("divisible by Y - 1", divides(&f, "Y - 1")?)];
            let out = check_cor2(&f, &eisenstein_poly(a.d), &UniPoly::one(f.field()))?;
            ("sharpness-1", f, None, checks, out)
        }
        ExampleName::TwoFactor => {
            let (f, g) = two_factor_family(field, a.m, a.n, &mut rng)?;
            let out = check_theorem1(&f, &g, &DivisorChoice::new(one.clone(), one), None)?;
            ("two-factor", f, Some(g), vec![], out)
        }
        ExampleName::SharpnessTwo => {
            let (f, g) = sharpness_two(field, a.m, &mut rng)?;
            let h = f.compose(&g)?;
            let checks = vec![
                check("f(X, 1) = 0", f.eval_y(&field.one()).is_zero()),
                check("f(X, g) divisible by Y - 1", divides(&h, "Y - 1")?),
                check("f(X, g) divisible by Y + 1", divides(&h, "Y + 1")?),
            ];
            let out = check_theorem1(&f, &g, &DivisorChoice::new(one.clone(), one), None)?;
            ("sharpness-2", f, Some(g), checks, out)
        }
        ExampleName::Gf2Composition => {
            let (f, g, p, q) = gf2_composition();
            let out = check_cor4(&f, &g, &p, &q)?;
            ("gf2-composition", f, Some(g), vec![], out)
        }
    };
    let report = ExampleReport {
        name: name.into(),
        field: f.field().to_string(),
        f: f.to_string(),
        g: g.as_ref().map(BiPoly::to_string),
        checks,
        outcome: raw(out.to_json()),
    };
    println!("{}", serde_json::to_string(&report).expect("serializable"));
    eprintln!("f = {f}");
    if let Some(g) = &g {
        eprintln!("g = {g}");
    }
    for c in &report.checks {
        eprintln!("{}: {}", c.name, if c.holds { "yes" } else { "NO" });
    }
    summarize(&out);
    Ok(if report.checks.iter().all(|c| c.holds) { 0 } else { 1 })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let result = match &cli.command {
        Command::Certify(a) => certify(a),
        Command::Bound(a) => bound(a),
        Command::Factor(a) => factor_cmd(a),
        Command::Oracle(a) => oracle(a),
        Command::Verify(a) => verify(a),
        Command::Examples(a) => examples(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
