//! Exact certification of factor-count bounds and irreducibility for
//! compositions `f(X, g(X, Y))` of polynomials over `Q` or `GF(p)`.
//!
//! The pieces, bottom up:
//!
//! * [`field`]: the coefficient fields and their elements.
//! * [`uni`], [`bivariate`], [`multi`]: polynomial arithmetic, H-norms,
//!   Y-content, resultants, composition.
//! * [`factor`]: univariate factorization and the factor count Ω.
//! * [`oracle`]: exhaustive bivariate factorization over `GF(p)(X)`, the
//!   ground truth used to validate certificates.
//! * [`certify`]: the hypothesis checks, divisor search and certificates.
//! * [`parse`] and [`fixtures`]: the text grammar and reproducible families
//!   of instances.

pub mod bivariate;
pub mod certify;
pub mod error;
pub mod factor;
pub mod field;
pub mod fixtures;
pub mod multi;
pub mod oracle;
pub mod parse;
pub mod uni;

pub use bivariate::{resultant_y, BiPoly};
pub use error::{Error, Result};
pub use factor::{factor, factor_gf, factor_q, is_irreducible_uni, omega, squarefree_decompose, FactorList};
pub use field::{Field, FieldDescriptor, FieldElement, FieldKind};
pub use multi::MultiPoly;
pub use uni::{degree_valuation, eisenstein_check, Degree, UniPoly, Valuation};
pub use certify::{
    best_certificate, check_cor1, check_cor2, check_cor3, check_cor4, check_cor5, check_cor6, check_theorem1,
    Assumption, Certificate, Claim, DivisorChoice, MultiDivisorChoice, Outcome, Provenance, Rejection, Rule,
    SearchOptions, TraceEntry, Verdict,
};
pub use oracle::{bifactor_all, find_bifactor, is_irreducible_bi, BiFactorization, OracleBudget};
pub use parse::{parse_bi, parse_multi, parse_poly, parse_uni, Parsed};
