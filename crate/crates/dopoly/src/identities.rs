//! Exact verification engine for the sum-of-squares identities.
//!
//! Every identity handled here has the shape
//! `sum of weighted squares = 1 - weighted square`, with both sides
//! polynomials in `x` of degree at most `2n + 2`. The engine therefore
//! evaluates the left-minus-right residual at the `2n + 3` half-integer
//! points `0, 1/2, 1, ..., (2n+2)/2`; an all-zero residual proves the
//! identity exactly (a nonzero polynomial of degree `2n + 2` cannot vanish
//! at `2n + 3` distinct points), and any nonzero value is returned as a
//! witness.
//!
//! Square roots never appear: wherever an orthonormal polynomial carries a
//! square-root prefactor, the engine works with the squared factor, which is
//! rational.
//!
//! Each identity is assembled as a list of `(coefficient, base)` pairs
//! contributing `coefficient * base^2`, with the right-hand square moved to
//! the left, so the residual evaluator is a single shared loop and any
//! transcription error stays localized in one term table.

use crate::exact::{gen_binomial, int, pochhammer, rat, to_f64, Rational};
use crate::moments::{
    bordered_hankel, dual_even_ratio_gap, dual_measure, dual_odd_ratio_gap, dual_top_prefactor_sq,
    hankel_lower, hankel_upper, modified_dets, moments_of, plain_hankel, DiscreteMeasure,
    MomentError,
};
use crate::polys::{
    dual_hahn_eval, hahn_series, krawtchouk_series, HahnParams, KrawtchoukParams, PolyError, Regime,
};
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;
use thiserror::Error;

/// Catalog of the verifiable identities. The tags are stable identifiers,
/// used verbatim on the command line:
///
/// * `T31a`-`T31d` - the four Hahn sum-of-squares identities;
/// * `C36a` - the discrete Chebyshev specialization (first/second kind);
/// * `T41a`-`T41d` - the four Krawtchouk sum-of-squares identities;
/// * `I24`  - the generic identity for an arbitrary measure on `[0, R]`;
/// * `I314` - the dual Hahn identity on the spectral interval.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[allow(clippy::upper_case_acronyms)]
pub enum IdentityId {
    T31a,
    T31b,
    T31c,
    T31d,
    C36a,
    T41a,
    T41b,
    T41c,
    T41d,
    I24,
    I314,
}

impl IdentityId {
    pub const ALL: [IdentityId; 11] = [
        IdentityId::T31a,
        IdentityId::T31b,
        IdentityId::T31c,
        IdentityId::T31d,
        IdentityId::C36a,
        IdentityId::T41a,
        IdentityId::T41b,
        IdentityId::T41c,
        IdentityId::T41d,
        IdentityId::I24,
        IdentityId::I314,
    ];

    /// Valid degree range of the tag for family size `N`. An empty range
    /// (start > end) means no valid degree at this `N`.
    ///
    /// The top-square tags (`T31c`, `C36a`, `T41c`) stop at `N - 2`: their
    /// first sums run over the twice-shifted family, and the identity is
    /// false at `n = N - 1` (exact counterexample: `C36a` with `N = 3`,
    /// `n = 2` has residual -20 at `x = 1/2`). `T31a`/`T41a` start at 1:
    /// at `n = 0` their middle square would need a binomial of lower index
    /// -1 and an order--1 rising factorial, and no convention makes the
    /// identity hold.
    #[allow(clippy::reversed_empty_ranges)]
    pub fn degree_range(&self, n: u32) -> RangeInclusive<u32> {
        match self {
            IdentityId::T31a | IdentityId::T41a | IdentityId::I24 => 1..=n.saturating_sub(1),
            IdentityId::T31b
            | IdentityId::T31d
            | IdentityId::T41b
            | IdentityId::T41d
            | IdentityId::I314 => 0..=n.saturating_sub(1),
            IdentityId::T31c | IdentityId::C36a | IdentityId::T41c => {
                if n < 2 {
                    1..=0
                } else {
                    0..=n - 2
                }
            }
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            IdentityId::T31a => "T31a",
            IdentityId::T31b => "T31b",
            IdentityId::T31c => "T31c",
            IdentityId::T31d => "T31d",
            IdentityId::C36a => "C36a",
            IdentityId::T41a => "T41a",
            IdentityId::T41b => "T41b",
            IdentityId::T41c => "T41c",
            IdentityId::T41d => "T41d",
            IdentityId::I24 => "I24",
            IdentityId::I314 => "I314",
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for IdentityId {
    type Err = IdentityError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lowered = s.to_ascii_lowercase();
        IdentityId::ALL
            .into_iter()
            .find(|id| id.as_str().to_ascii_lowercase() == lowered)
            .ok_or_else(|| IdentityError::UnknownTag(s.to_string()))
    }
}

/// Parameter bundle accepted by [`residual`] and [`verify`]; which variant a
/// tag needs follows from its family (`C36a` needs only the support size).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IdentityParams {
    Hahn(HahnParams),
    Krawtchouk(KrawtchoukParams),
    Chebyshev { n: u32 },
}

impl IdentityParams {
    pub fn support_size(&self) -> u32 {
        match self {
            IdentityParams::Hahn(p) => p.n,
            IdentityParams::Krawtchouk(p) => p.n,
            IdentityParams::Chebyshev { n } => *n,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdentityError {
    #[error("unknown identity tag `{0}`")]
    UnknownTag(String),
    #[error("degree {degree} outside the valid range {lo}..={hi} of {tag}")]
    DegreeOutOfRange {
        tag: IdentityId,
        degree: u32,
        lo: u32,
        hi: u32,
    },
    #[error("{tag} expects {expected} parameters")]
    WrongParams {
        tag: IdentityId,
        expected: &'static str,
    },
    #[error("identity verification requires the classical regime")]
    ClassicalOnly,
    #[error("measure has {have} support points, need at least {need}")]
    InsufficientSupport { have: usize, need: usize },
    #[error(transparent)]
    Moment(#[from] MomentError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Outcome of a polynomial-identity verification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationResult {
    pub identity: IdentityId,
    pub degree: u32,
    pub status: VerifyStatus,
    pub points_checked: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VerifyStatus {
    /// Residual vanished at enough points to force the zero polynomial.
    ProvedZero,
    /// First nonzero residual found.
    NonzeroResidual {
        witness: Rational,
        residual: Rational,
    },
}

impl VerifyStatus {
    pub fn is_proved(&self) -> bool {
        matches!(self, VerifyStatus::ProvedZero)
    }
}

/// One squared term: contributes `coeff * base^2`.
struct Sq {
    coeff: Rational,
    base: Rational,
}

fn sum_squares(terms: &[Sq]) -> Rational {
    let mut acc = Rational::zero();
    for t in terms {
        if !t.coeff.is_zero() {
            acc += &t.coeff * &t.base * &t.base;
        }
    }
    acc
}

/// `((alpha+1)_l / (beta+1)_l) Q_l(x)` - the skewed Hahn evaluation used all
/// over the Hahn identities.
fn skewed_hahn(l: u32, x: &Rational, alpha: &Rational, beta: &Rational, n: u32) -> Rational {
    pochhammer(&(alpha + int(1)), l) / pochhammer(&(beta + int(1)), l)
        * hahn_series(l, x, alpha, beta, n)
}

/// `C(N, l) (p/q)^l k_l(x)` - the scaled Krawtchouk evaluation.
fn scaled_krawtchouk(l: u32, x: &Rational, p: &Rational, q: &Rational, n: u32) -> Rational {
    gen_binomial(&int(n as i64), l) * (p / q).pow(l as i32) * krawtchouk_series(l, x, p, n)
}

/// Left-minus-right residual of the identity at a single rational point,
/// fully exact. `LHS = 1 - w(x) * top^2` identities are rearranged to
/// `LHS + w(x) * top^2 - 1`, so zero means the identity holds at `x`.
pub fn residual(
    id: IdentityId,
    params: &IdentityParams,
    degree: u32,
    x: &Rational,
) -> Result<Rational, IdentityError> {
    let range = id.degree_range(params.support_size());
    if !range.contains(&degree) {
        return Err(IdentityError::DegreeOutOfRange {
            tag: id,
            degree,
            lo: *range.start(),
            hi: *range.end(),
        });
    }
    let terms = match (id, params) {
        (IdentityId::T31a, IdentityParams::Hahn(p)) => hahn_terms_a(p, degree, x)?,
        (IdentityId::T31b, IdentityParams::Hahn(p)) => hahn_terms_b(p, degree, x)?,
        (IdentityId::T31c, IdentityParams::Hahn(p)) => hahn_terms_c(p, degree, x)?,
        (IdentityId::T31d, IdentityParams::Hahn(p)) => hahn_terms_d(p, degree, x)?,
        (IdentityId::C36a, IdentityParams::Chebyshev { n }) => chebyshev_terms(*n, degree, x),
        (IdentityId::T41a, IdentityParams::Krawtchouk(p)) => krawtchouk_terms_a(p, degree, x),
        (IdentityId::T41b, IdentityParams::Krawtchouk(p)) => krawtchouk_terms_b(p, degree, x),
        (IdentityId::T41c, IdentityParams::Krawtchouk(p)) => krawtchouk_terms_c(p, degree, x),
        (IdentityId::T41d, IdentityParams::Krawtchouk(p)) => krawtchouk_terms_d(p, degree, x),
        (IdentityId::I24, IdentityParams::Hahn(p)) => {
            let measure = crate::moments::hahn_measure(p)?;
            return generic_residual(&measure, degree, x);
        }
        (IdentityId::I314, IdentityParams::Hahn(p)) => return dual_residual(p, degree, x),
        (IdentityId::T31a | IdentityId::T31b | IdentityId::T31c | IdentityId::T31d, _) => {
            return Err(IdentityError::WrongParams {
                tag: id,
                expected: "Hahn",
            })
        }
        (IdentityId::C36a, _) => {
            return Err(IdentityError::WrongParams {
                tag: id,
                expected: "Chebyshev (N only)",
            })
        }
        (IdentityId::T41a | IdentityId::T41b | IdentityId::T41c | IdentityId::T41d, _) => {
            return Err(IdentityError::WrongParams {
                tag: id,
                expected: "Krawtchouk",
            })
        }
        (IdentityId::I24 | IdentityId::I314, _) => {
            return Err(IdentityError::WrongParams {
                tag: id,
                expected: "Hahn",
            })
        }
    };
    Ok(sum_squares(&terms) - int(1))
}

fn require_classical(p: &HahnParams) -> Result<(), IdentityError> {
    if p.regime != Regime::Classical {
        return Err(IdentityError::ClassicalOnly);
    }
    Ok(())
}

fn hahn_terms_a(p: &HahnParams, n: u32, x: &Rational) -> Result<Vec<Sq>, IdentityError> {
    require_classical(p)?;
    let (al, be, nn) = (&p.alpha, &p.beta, p.n);
    let s = p.s();
    let big_n = int(nn as i64);
    let mut terms = Vec::new();
    for l in 1..n {
        let coeff = (int(2 * l as i64 + 1) + &s) / &big_n
            * ((&s + int(1)) * int(2 * l as i64 - nn as i64) + int(2 * (l as i64) * (l as i64)));
        if coeff.is_zero() {
            continue;
        }
        let base = pochhammer(&(&s + int(2)), l - 1) / pochhammer(&(&big_n + &s + int(2)), l)
            * gen_binomial(&big_n, l)
            * skewed_hahn(l, x, al, be, nn);
        terms.push(Sq { coeff, base });
    }
    terms.push(Sq {
        coeff: Rational::one(),
        base: gen_binomial(&(&big_n - int(1)), n - 1) * pochhammer(&(&s + int(2)), n - 1)
            / pochhammer(&(&big_n + &s + int(2)), n - 1)
            * skewed_hahn(n, x, al, be, nn),
    });
    let be_plus = be + int(1);
    let one_minus = int(1) - x / &big_n;
    for l in 0..n {
        let coeff = (be - al) * &one_minus * (int(2 * l as i64 + 2) + &s) / (&be_plus * &be_plus);
        if coeff.is_zero() {
            continue;
        }
        let base = gen_binomial(&(&big_n - int(1)), l) * pochhammer(&(&s + int(2)), l)
            / pochhammer(&(&s + &big_n + int(2)), l)
            * skewed_hahn(l, x, al, &be_plus, nn - 1);
        terms.push(Sq { coeff, base });
    }
    // right-hand square moved over
    let coeff = x / &big_n * &one_minus;
    if !coeff.is_zero() {
        let base = pochhammer(&(&s + int(2)), n) / pochhammer(&(&s + &big_n + int(2)), n - 1)
            * gen_binomial(&(&big_n - int(2)), n - 1)
            * skewed_hahn(n - 1, &(x - int(1)), &(al + int(1)), &be_plus, nn - 2)
            / &be_plus;
        terms.push(Sq { coeff, base });
    }
    Ok(terms)
}

fn hahn_terms_b(p: &HahnParams, n: u32, x: &Rational) -> Result<Vec<Sq>, IdentityError> {
    require_classical(p)?;
    let (al, be, nn) = (&p.alpha, &p.beta, p.n);
    let s = p.s();
    let big_n = int(nn as i64);
    let al_plus = al + int(1);
    let mut terms = Vec::new();
    for l in 1..=n {
        let coeff = (int(2 * l as i64 + 1) + &s) / &big_n
            * ((&s + int(1)) * int(2 * l as i64 - nn as i64) + int(2 * (l as i64) * (l as i64)));
        if coeff.is_zero() {
            continue;
        }
        let base = gen_binomial(&big_n, l) * pochhammer(&(&s + int(2)), l - 1)
            / pochhammer(&(&s + &big_n + int(2)), l)
            * hahn_series(l, x, al, be, nn);
        terms.push(Sq { coeff, base });
    }
    let coeff = x / &big_n;
    if !coeff.is_zero() {
        let base = gen_binomial(&(&big_n - int(1)), n) * pochhammer(&(&s + int(2)), n)
            / pochhammer(&(&s + &big_n + int(2)), n)
            * (&al_plus + int(n as i64))
            / &al_plus
            * hahn_series(n, &(x - int(1)), &al_plus, be, nn - 1);
        terms.push(Sq { coeff, base });
    }
    for l in 0..n {
        let coeff = (al - be) * x / &big_n * (int(2 * l as i64 + 2) + &s);
        if coeff.is_zero() {
            continue;
        }
        let base = gen_binomial(&(&big_n - int(1)), l) * pochhammer(&(&s + int(2)), l)
            / pochhammer(&(&s + &big_n + int(2)), l)
            * hahn_series(l, &(x - int(1)), &al_plus, be, nn - 1)
            / &al_plus;
        terms.push(Sq { coeff, base });
    }
    let coeff = int(1) - x / &big_n;
    if !coeff.is_zero() {
        let base = gen_binomial(&(&big_n - int(1)), n) * pochhammer(&(&s + int(2)), n)
            / pochhammer(&(&s + &big_n + int(2)), n)
            * hahn_series(n, x, al, &(be + int(1)), nn - 1);
        terms.push(Sq { coeff, base });
    }
    Ok(terms)
}

fn hahn_terms_c(p: &HahnParams, n: u32, x: &Rational) -> Result<Vec<Sq>, IdentityError> {
    require_classical(p)?;
    let (al, be, nn) = (&p.alpha, &p.beta, p.n);
    let s = p.s();
    let big_n = int(nn as i64);
    let be_plus = be + int(1);
    let al_plus = al + int(1);
    let one_minus = int(1) - x / &big_n;
    let denom = &be_plus * (&big_n - int(1));
    let mut terms = Vec::new();
    for l in 0..n {
        // inner factor reads (N - 2l - 2): the unique reading under which the
        // residual vanishes identically (and the one the Krawtchouk analogue
        // carries verbatim)
        let coeff = x
            * &one_minus
            * ((&s + int(l as i64 + 2)) * int(nn as i64 - 2 * l as i64 - 2)
                - int((l as i64 + 1) * nn as i64))
            * (int(2 * l as i64 + 3) + &s);
        if coeff.is_zero() {
            continue;
        }
        let base = skewed_hahn(l, &(x - int(1)), &al_plus, &be_plus, nn - 2) / &denom;
        terms.push(Sq { coeff, base });
    }
    let coeff = x / &big_n * &one_minus;
    if !coeff.is_zero() {
        let base = (&s + int(n as i64 + 2)) * int(nn as i64 - n as i64 - 1) / &denom
            * skewed_hahn(n, &(x - int(1)), &al_plus, &be_plus, nn - 2);
        terms.push(Sq { coeff, base });
    }
    for l in 0..=n {
        let coeff = (be - al) * &one_minus * (int(2 * l as i64 + 2) + &s);
        if coeff.is_zero() {
            continue;
        }
        let base = skewed_hahn(l, x, al, &be_plus, nn - 1) / &be_plus;
        terms.push(Sq { coeff, base });
    }
    terms.push(Sq {
        coeff: Rational::one(),
        base: skewed_hahn(n + 1, x, al, be, nn),
    });
    Ok(terms)
}

fn hahn_terms_d(p: &HahnParams, n: u32, x: &Rational) -> Result<Vec<Sq>, IdentityError> {
    require_classical(p)?;
    let (al, be, nn) = (&p.alpha, &p.beta, p.n);
    let s = p.s();
    let big_n = int(nn as i64);
    let be_plus = be + int(1);
    let one_minus = int(1) - x / &big_n;
    let mut terms = Vec::new();
    for l in 1..=n {
        let coeff = (int(2 * l as i64 + 1) + &s) / &big_n
            * ((&s + int(1)) * int(2 * l as i64 - nn as i64) + int(2 * (l as i64) * (l as i64)));
        if coeff.is_zero() {
            continue;
        }
        let base = pochhammer(&(&s + int(2)), l - 1) / pochhammer(&(&s + &big_n + int(2)), l)
            * gen_binomial(&big_n, l)
            * skewed_hahn(l, x, al, be, nn);
        terms.push(Sq { coeff, base });
    }
    for l in 0..n {
        let coeff = (be - al) * &one_minus * (int(2 * l as i64 + 2) + &s);
        if coeff.is_zero() {
            continue;
        }
        let base = gen_binomial(&(&big_n - int(1)), l) * pochhammer(&(&s + int(2)), l)
            / pochhammer(&(&s + &big_n + int(2)), l)
            * skewed_hahn(l, x, al, &be_plus, nn - 1)
            / &be_plus;
        terms.push(Sq { coeff, base });
    }
    if !one_minus.is_zero() {
        let base = gen_binomial(&(&big_n - int(1)), n) * (&be_plus + int(n as i64)) / &be_plus
            * pochhammer(&(&s + int(2)), n)
            / pochhammer(&(&s + &big_n + int(2)), n)
            * skewed_hahn(n, x, al, &be_plus, nn - 1);
        terms.push(Sq {
            coeff: one_minus.clone(),
            base,
        });
    }
    let coeff = x / &big_n;
    if !coeff.is_zero() {
        let base = gen_binomial(&(&big_n - int(1)), n) * pochhammer(&(&s + int(2)), n)
            / pochhammer(&(&s + &big_n + int(2)), n)
            * skewed_hahn(n, &(x - int(1)), &(al + int(1)), be, nn - 1);
        terms.push(Sq { coeff, base });
    }
    Ok(terms)
}

fn chebyshev_terms(nn: u32, n: u32, x: &Rational) -> Vec<Sq> {
    // T = Hahn at alpha = beta = -1/2, U at +1/2; everything here is their
    // specialization, kept as an independent term table so the two code
    // paths cross-check each other.
    let half = rat(1, 2);
    let neg_half = rat(-1, 2);
    let big_n = int(nn as i64);
    let one_minus = int(1) - x / &big_n;
    let mut terms = Vec::new();
    for l in 0..n {
        // leading weight is x (1 - x/N): the printed form `x (x - x/N)` fails
        // the residual test already at n = 1
        let coeff = -(x * &one_minus) * int(l as i64 + 1);
        if coeff.is_zero() {
            continue;
        }
        let base = int(4 * (l as i64 + 1)) / (&big_n - int(1))
            * hahn_series(l, &(x - int(1)), &half, &half, nn - 2);
        terms.push(Sq { coeff, base });
    }
    let coeff = x / &big_n * &one_minus;
    if !coeff.is_zero() {
        let base = int(2 * (n as i64 + 1) * (nn as i64 - n as i64 - 1)) / (&big_n - int(1))
            * hahn_series(n, &(x - int(1)), &half, &half, nn - 2);
        terms.push(Sq { coeff, base });
    }
    terms.push(Sq {
        coeff: Rational::one(),
        base: hahn_series(n + 1, x, &neg_half, &neg_half, nn),
    });
    terms
}

fn krawtchouk_terms_a(kp: &KrawtchoukParams, n: u32, x: &Rational) -> Vec<Sq> {
    let (p, q, nn) = (&kp.p, &kp.q, kp.n);
    let big_n = int(nn as i64);
    let one_minus = int(1) - x / &big_n;
    let mut terms = Vec::new();
    for l in 1..n {
        let coeff = rat(2 * l as i64, nn as i64) - int(1);
        if coeff.is_zero() {
            continue;
        }
        terms.push(Sq {
            coeff,
            base: scaled_krawtchouk(l, x, p, q, nn),
        });
    }
    terms.push(Sq {
        coeff: Rational::one(),
        base: rat(n as i64, nn as i64) * scaled_krawtchouk(n, x, p, q, nn),
    });
    let third = &one_minus * (q - p) / (q * q);
    for l in 0..n {
        if third.is_zero() {
            break;
        }
        terms.push(Sq {
            coeff: third.clone(),
            base: scaled_krawtchouk(l, x, p, q, nn - 1),
        });
    }
    let coeff = x / &big_n * &one_minus;
    if !coeff.is_zero() {
        // the right-hand square carries the *scaled* polynomial of the
        // twice-shifted family; the unscaled reading leaves a residual
        let base = scaled_krawtchouk(n - 1, &(x - int(1)), p, q, nn - 2) / q;
        terms.push(Sq { coeff, base });
    }
    terms
}

fn krawtchouk_terms_b(kp: &KrawtchoukParams, n: u32, x: &Rational) -> Vec<Sq> {
    let (p, q, nn) = (&kp.p, &kp.q, kp.n);
    let big_n = int(nn as i64);
    let mut terms = Vec::new();
    for l in 1..=n {
        let coeff = rat(2 * l as i64, nn as i64) - int(1);
        if coeff.is_zero() {
            continue;
        }
        let base = gen_binomial(&big_n, l) * krawtchouk_series(l, x, p, nn);
        terms.push(Sq { coeff, base });
    }
    let coeff = x / &big_n;
    if !coeff.is_zero() {
        let base =
            gen_binomial(&(&big_n - int(1)), n) * krawtchouk_series(n, &(x - int(1)), p, nn - 1);
        terms.push(Sq { coeff, base });
    }
    let third = (p - q) / (p * p) * x / &big_n;
    for l in 0..n {
        if third.is_zero() {
            break;
        }
        // first power inside the square; the doubled reading fails the test
        let base =
            gen_binomial(&(&big_n - int(1)), l) * krawtchouk_series(l, &(x - int(1)), p, nn - 1);
        terms.push(Sq {
            coeff: third.clone(),
            base,
        });
    }
    let coeff = int(1) - x / &big_n;
    if !coeff.is_zero() {
        let base = gen_binomial(&(&big_n - int(1)), n) * krawtchouk_series(n, x, p, nn - 1);
        terms.push(Sq { coeff, base });
    }
    terms
}

fn krawtchouk_terms_c(kp: &KrawtchoukParams, n: u32, x: &Rational) -> Vec<Sq> {
    let (p, q, nn) = (&kp.p, &kp.q, kp.n);
    let big_n = int(nn as i64);
    let one_minus = int(1) - x / &big_n;
    let mut terms = Vec::new();
    for l in 0..n {
        let coeff = x * &one_minus * int(nn as i64 - 2 * l as i64 - 2);
        if coeff.is_zero() {
            continue;
        }
        let base = p.pow(l as i32) / q.pow(l as i32 + 1)
            * krawtchouk_series(l, &(x - int(1)), p, nn - 2)
            / (&big_n - int(1));
        terms.push(Sq { coeff, base });
    }
    let coeff = x / &big_n * &one_minus;
    if !coeff.is_zero() {
        let base = int(nn as i64 - n as i64 - 1)
            * p.pow(n as i32)
            * krawtchouk_series(n, &(x - int(1)), p, nn - 2)
            / (q.pow(n as i32 + 1) * (&big_n - int(1)));
        terms.push(Sq { coeff, base });
    }
    let second = (q - p) / (q * q) * &one_minus;
    for l in 0..=n {
        if second.is_zero() {
            break;
        }
        let base = (p / q).pow(l as i32) * krawtchouk_series(l, x, p, nn - 1);
        terms.push(Sq {
            coeff: second.clone(),
            base,
        });
    }
    terms.push(Sq {
        coeff: Rational::one(),
        base: (p / q).pow(n as i32 + 1) * krawtchouk_series(n + 1, x, p, nn),
    });
    terms
}

fn krawtchouk_terms_d(kp: &KrawtchoukParams, n: u32, x: &Rational) -> Vec<Sq> {
    let (p, q, nn) = (&kp.p, &kp.q, kp.n);
    let big_n = int(nn as i64);
    let one_minus = int(1) - x / &big_n;
    let mut terms = Vec::new();
    for l in 1..=n {
        let coeff = rat(2 * l as i64, nn as i64) - int(1);
        if coeff.is_zero() {
            continue;
        }
        terms.push(Sq {
            coeff,
            base: scaled_krawtchouk(l, x, p, q, nn),
        });
    }
    let second = (q - p) / (q * q) * &one_minus;
    for l in 0..n {
        if second.is_zero() {
            break;
        }
        terms.push(Sq {
            coeff: second.clone(),
            base: scaled_krawtchouk(l, x, p, q, nn - 1),
        });
    }
    if !one_minus.is_zero() {
        terms.push(Sq {
            coeff: one_minus.clone(),
            base: scaled_krawtchouk(n, x, p, q, nn - 1),
        });
    }
    let coeff = x / &big_n;
    if !coeff.is_zero() {
        terms.push(Sq {
            coeff,
            base: scaled_krawtchouk(n, &(x - int(1)), p, q, nn - 1),
        });
    }
    terms
}

/// Residual of the generic sum-of-squares identity for an arbitrary discrete
/// measure on `[0, R]`, at degree `n >= 1`.
///
/// The squared orthonormal polynomials of the measure and of its `x`-,
/// `(R-x)`- and `x(R-x)`-modified companions are produced rationally as
/// squared bordered Hankel determinants over the two neighbouring plain
/// ones; top-order determinants that also appear as outer coefficients are
/// cancelled algebraically first, so boundary measures whose top determinant
/// vanishes (for example two atoms at the interval ends) evaluate cleanly.
pub fn generic_residual(
    measure: &DiscreteMeasure,
    n: u32,
    x: &Rational,
) -> Result<Rational, IdentityError> {
    if n == 0 {
        return Err(IdentityError::DegreeOutOfRange {
            tag: IdentityId::I24,
            degree: 0,
            lo: 1,
            hi: u32::MAX,
        });
    }
    let ms = moments_of(measure, 2 * n as usize + 2);
    let r_end = ms.interval_end().clone();
    let c: Vec<Rational> = (0..=2 * n as usize + 2)
        .map(|j| ms.moment(j).cloned())
        .collect::<Result<_, _>>()?;
    // moment slices of the modified measures
    let cq: Vec<Rational> = (0..=2 * n as usize)
        .map(|j| &r_end * &c[j + 1] - &c[j + 2])
        .collect();
    let cs: Vec<Rational> = (0..=2 * n as usize + 1)
        .map(|j| &r_end * &c[j] - &c[j + 1])
        .collect();
    let dl = |o: i64| hankel_lower(&ms, o);
    let du = |o: i64| hankel_upper(&ms, o);
    let n_i = n as i64;

    let mut acc = Rational::zero();
    for l in 1..n {
        let l_i = l as i64;
        let du_l = du(2 * l_i)?;
        let dl_l = dl(2 * l_i)?;
        let du_odd = du(2 * l_i - 1)?;
        if du_odd.is_zero() || dl_l.is_zero() || dl(2 * l_i - 2)?.is_zero() {
            return Err(IdentityError::Moment(MomentError::ZeroDivisor));
        }
        let bracket = du(2 * l_i - 2)? / dl(2 * l_i - 2)? - &du_l / &dl_l;
        let coeff = dl(2 * l_i - 1)? / du_odd * bracket;
        if coeff.is_zero() {
            continue;
        }
        let b = bordered_hankel(&c, l as usize, x);
        acc += coeff * &b * &b / (dl(2 * l_i - 2)? * dl_l);
    }
    // top term of the first family, with its own determinant cancelled
    let (lower_plus, _) = modified_dets(&ms, 2 * n)?;
    let du_odd_n = du(2 * n_i - 1)?;
    let dl_even_prev = dl(2 * n_i - 2)?;
    if du_odd_n.is_zero() || dl_even_prev.is_zero() || lower_plus.is_zero() {
        return Err(IdentityError::Moment(MomentError::ZeroDivisor));
    }
    let b = bordered_hankel(&c, n as usize, x);
    acc += dl(2 * n_i - 1)? * du(2 * n_i - 2)? * &b * &b
        / (&du_odd_n * &dl_even_prev * &dl_even_prev * &lower_plus);
    // second family, weighted by (R - x)
    for l in 0..n {
        let l_i = l as i64;
        let du_odd = du(2 * l_i + 1)?;
        let du_odd_prev = du(2 * l_i - 1)?;
        if du_odd.is_zero() || du_odd_prev.is_zero() || dl(2 * l_i)?.is_zero() {
            return Err(IdentityError::Moment(MomentError::ZeroDivisor));
        }
        let bracket = dl(2 * l_i - 1)? / du_odd_prev - dl(2 * l_i + 1)? / &du_odd;
        let coeff = (&r_end - x) * du(2 * l_i)? / dl(2 * l_i)? * bracket;
        if coeff.is_zero() {
            continue;
        }
        let b = bordered_hankel(&cs, l as usize, x);
        acc += coeff * &b * &b / (du(2 * l_i - 1)? * du_odd);
    }
    // right-hand square moved over; its top determinant cancels likewise
    let coeff = x * (&r_end - x) * dl(2 * n_i - 1)?;
    if !coeff.is_zero() {
        let b = bordered_hankel(&cq, n as usize - 1, x);
        let denom_prev = if n >= 2 {
            plain_hankel(&cq, n as i64 - 2)
        } else {
            Rational::one()
        };
        if denom_prev.is_zero() {
            return Err(IdentityError::Moment(MomentError::ZeroDivisor));
        }
        acc += coeff * &b * &b / (&du_odd_n * &lower_plus * denom_prev);
    }
    Ok(acc - int(1))
}

/// Residual of the dual sum-of-squares identity on the spectral interval
/// `[0, N(N+alpha+beta+1)]`, at degree `n <= N-1`.
///
/// The two bracket gaps and the squared top prefactor come from their closed
/// forms; the middle coefficient has no closed form and is computed from
/// brute-force Hankel determinants of the spectral measure (with the
/// top-order determinant cancelled against the squared orthonormal
/// polynomial's denominator, as in [`generic_residual`]).
pub fn dual_residual(p: &HahnParams, n: u32, x: &Rational) -> Result<Rational, IdentityError> {
    require_classical(p)?;
    let range = IdentityId::I314.degree_range(p.n);
    if !range.contains(&n) {
        return Err(IdentityError::DegreeOutOfRange {
            tag: IdentityId::I314,
            degree: n,
            lo: *range.start(),
            hi: *range.end(),
        });
    }
    let measure = dual_measure(p)?;
    let ms = moments_of(&measure, 2 * n as usize + 4);
    let m_end = ms.interval_end().clone();
    let c: Vec<Rational> = (0..=2 * n as usize + 4)
        .map(|j| ms.moment(j).cloned())
        .collect::<Result<_, _>>()?;
    let cq: Vec<Rational> = (0..=2 * n as usize + 2)
        .map(|j| &m_end * &c[j + 1] - &c[j + 2])
        .collect();
    let cs: Vec<Rational> = (0..=2 * n as usize + 3)
        .map(|j| &m_end * &c[j] - &c[j + 1])
        .collect();
    let dl = |o: i64| hankel_lower(&ms, o);
    let du = |o: i64| hankel_upper(&ms, o);
    let n_i = n as i64;
    let weight = x * (&m_end - x);

    let mut acc = Rational::zero();
    for l in 0..n {
        let l_i = l as i64;
        let du_odd = du(2 * l_i + 1)?;
        if du_odd.is_zero() {
            return Err(IdentityError::Moment(MomentError::ZeroDivisor));
        }
        let coeff = &weight * dl(2 * l_i + 1)? / du_odd * dual_even_ratio_gap(l, p)?;
        if coeff.is_zero() {
            continue;
        }
        let b = bordered_hankel(&cq, l as usize, x);
        let d_prev = if l >= 1 {
            plain_hankel(&cq, l as i64 - 1)
        } else {
            Rational::one()
        };
        let d_cur = plain_hankel(&cq, l as i64);
        if d_prev.is_zero() || d_cur.is_zero() {
            return Err(IdentityError::Moment(MomentError::ZeroDivisor));
        }
        acc += coeff * &b * &b / (d_prev * d_cur);
    }
    // middle term: brute-force determinant ratio; the top even determinant of
    // the x(M-x) companion cancels against the squared polynomial's denominator
    let (_, upper_minus) = modified_dets(&ms, 2 * n + 2)?;
    let du_even = du(2 * n_i)?;
    let du_odd = du(2 * n_i + 1)?;
    let d_prev = if n >= 1 {
        plain_hankel(&cq, n as i64 - 1)
    } else {
        Rational::one()
    };
    if du_even.is_zero() || du_odd.is_zero() || upper_minus.is_zero() || d_prev.is_zero() {
        return Err(IdentityError::Moment(MomentError::ZeroDivisor));
    }
    let b = bordered_hankel(&cq, n as usize, x);
    acc += &weight * dl(2 * n_i)? * dl(2 * n_i + 1)? * &b * &b
        / (&du_even * &du_odd * &upper_minus * d_prev);
    // third family, weighted by (M - x)
    for l in 0..=n {
        let l_i = l as i64;
        let du_even_l = du(2 * l_i)?;
        if du_even_l.is_zero() {
            return Err(IdentityError::Moment(MomentError::ZeroDivisor));
        }
        let coeff = (&m_end - x) * dl(2 * l_i)? / du_even_l * dual_odd_ratio_gap(l, p)?;
        if coeff.is_zero() {
            continue;
        }
        let b = bordered_hankel(&cs, l as usize, x);
        let d_prev = if l >= 1 {
            plain_hankel(&cs, l as i64 - 1)
        } else {
            Rational::one()
        };
        let d_cur = plain_hankel(&cs, l as i64);
        if d_prev.is_zero() || d_cur.is_zero() {
            return Err(IdentityError::Moment(MomentError::ZeroDivisor));
        }
        acc += coeff * &b * &b / (d_prev * d_cur);
    }
    // right-hand square via the closed-form prefactor and exact interpolation
    let top = dual_hahn_eval(n + 1, x, p)?;
    acc += dual_top_prefactor_sq(n, p)? * &top * &top;
    Ok(acc - int(1))
}

fn half_integer_points(n: u32) -> impl Iterator<Item = Rational> {
    (0..2 * n + 3).map(|j| rat(j as i64, 2))
}

fn verify_inner(
    id: IdentityId,
    params: &IdentityParams,
    degree: u32,
    shift: &Rational,
) -> Result<VerificationResult, IdentityError> {
    let mut points_checked = 0;
    for x in half_integer_points(degree) {
        let r = residual(id, params, degree, &x)? + shift;
        points_checked += 1;
        if !r.is_zero() {
            return Ok(VerificationResult {
                identity: id,
                degree,
                status: VerifyStatus::NonzeroResidual {
                    witness: x,
                    residual: r,
                },
                points_checked,
            });
        }
    }
    Ok(VerificationResult {
        identity: id,
        degree,
        status: VerifyStatus::ProvedZero,
        points_checked,
    })
}

/// Proves or refutes the identity at the given degree by evaluating the
/// residual at `2n + 3` half-integer points (one more than the degree bound
/// `2n + 2` of both sides).
pub fn verify(
    id: IdentityId,
    params: &IdentityParams,
    degree: u32,
) -> Result<VerificationResult, IdentityError> {
    verify_inner(id, params, degree, &Rational::zero())
}

/// Detector sanity check: verifies the identity with its right-hand constant
/// deliberately perturbed from 1 to 2, which must produce a nonzero residual
/// witness (at `x = 0` already).
pub fn verify_perturbed(
    id: IdentityId,
    params: &IdentityParams,
    degree: u32,
) -> Result<VerificationResult, IdentityError> {
    verify_inner(id, params, degree, &int(-1))
}

/// Float gap `|T_n(N(1-z)/2, N) - cos(n arccos z)|` between the discrete
/// Chebyshev polynomial and its continuous limit. The polynomial value is
/// computed exactly and only converted at the end. Diagnostic: decreasing in
/// `N` toward 0 for fixed `n`, `z`.
pub fn trig_limit_gap(degree: u32, z: f64, n: u32) -> f64 {
    assert!((-1.0..=1.0).contains(&z), "z must lie in [-1, 1]");
    let zr = Rational::from_float(z).expect("finite float");
    let x = int(n as i64) * (int(1) - zr) / int(2);
    let half = rat(-1, 2);
    let t = hahn_series(degree, &x, &half, &half, n);
    (to_f64(&t) - (degree as f64 * z.acos()).cos()).abs()
}

/// Float gap `|Q_n(x, pt, qt, N) - k_n(x, p, N)|` between the Hahn polynomial
/// at steep parameters and its Krawtchouk limit; decreasing in `t` like 1/t.
/// Both values are computed exactly and only the difference is floated.
pub fn krawtchouk_limit_gap(degree: u32, x: &Rational, params: &KrawtchoukParams, t: u32) -> f64 {
    let alpha = &params.p * int(t as i64);
    let beta = &params.q * int(t as i64);
    let steep = hahn_series(degree, x, &alpha, &beta, params.n);
    let limit = krawtchouk_series(degree, x, &params.p, params.n);
    to_f64(&(steep - limit).abs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn hahn(a: Rational, b: Rational, n: u32) -> IdentityParams {
        IdentityParams::Hahn(HahnParams::classical(a, b, n).unwrap())
    }

    fn kraw(p: Rational, n: u32) -> IdentityParams {
        IdentityParams::Krawtchouk(KrawtchoukParams::new(p, n).unwrap())
    }

    #[test]
    fn degree_ranges() {
        assert_eq!(IdentityId::T31a.degree_range(5), 1..=4);
        assert_eq!(IdentityId::T31b.degree_range(5), 0..=4);
        assert_eq!(IdentityId::T31c.degree_range(5), 0..=3);
        assert_eq!(IdentityId::C36a.degree_range(2), 0..=0);
        assert!(IdentityId::T31c.degree_range(1).is_empty());
    }

    #[test]
    fn tags_parse_round_trip() {
        for id in IdentityId::ALL {
            assert_eq!(id.as_str().parse::<IdentityId>().unwrap(), id);
        }
        assert_eq!("t31a".parse::<IdentityId>().unwrap(), IdentityId::T31a);
        assert!("T99x".parse::<IdentityId>().is_err());
    }

    #[test]
    fn residual_zero_spot_checks() {
        // reduced case: empty sums plus the two surviving squares
        let p = hahn(int(0), int(0), 4);
        assert_eq!(
            residual(IdentityId::T31c, &p, 0, &rat(1, 2)).unwrap(),
            int(0)
        );
        // endpoint kills the x-weighted terms and leaves 1 - T_1(0)^2 = 0
        assert_eq!(
            residual(
                IdentityId::C36a,
                &IdentityParams::Chebyshev { n: 6 },
                0,
                &int(0)
            )
            .unwrap(),
            int(0)
        );
        // all four terms of the symmetric Krawtchouk identity at a grid point
        assert_eq!(
            residual(IdentityId::T41d, &kraw(rat(1, 2), 2), 1, &int(1)).unwrap(),
            int(0)
        );
    }

    #[test]
    fn verify_representative_grid() {
        for (a, b) in [(int(0), rat(1, 2)), (rat(-1, 2), int(3)), (int(1), int(1))] {
            for n in [3u32, 5] {
                let p = hahn(a.clone(), b.clone(), n);
                for id in [
                    IdentityId::T31a,
                    IdentityId::T31b,
                    IdentityId::T31c,
                    IdentityId::T31d,
                ] {
                    for degree in id.degree_range(n) {
                        let r = verify(id, &p, degree).unwrap();
                        assert!(
                            r.status.is_proved(),
                            "{id} failed at degree {degree} for {p:?}: {:?}",
                            r.status
                        );
                        assert_eq!(r.points_checked, 2 * degree as usize + 3);
                    }
                }
            }
        }
        for p_val in [rat(1, 3), rat(1, 2), rat(2, 3)] {
            for n in [3u32, 6] {
                let kp = kraw(p_val.clone(), n);
                for id in [
                    IdentityId::T41a,
                    IdentityId::T41b,
                    IdentityId::T41c,
                    IdentityId::T41d,
                ] {
                    for degree in id.degree_range(n) {
                        assert!(
                            verify(id, &kp, degree).unwrap().status.is_proved(),
                            "{id} failed at degree {degree}, p={p_val}, N={n}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn chebyshev_path_matches_hahn_specialization() {
        for n in [3u32, 5, 7] {
            let spec = hahn(rat(-1, 2), rat(-1, 2), n);
            for degree in IdentityId::C36a.degree_range(n) {
                for x in half_integer_points(degree) {
                    let via_cheb = residual(
                        IdentityId::C36a,
                        &IdentityParams::Chebyshev { n },
                        degree,
                        &x,
                    )
                    .unwrap();
                    let via_hahn = residual(IdentityId::T31c, &spec, degree, &x).unwrap();
                    assert_eq!(via_cheb, via_hahn);
                    assert_eq!(via_cheb, int(0));
                }
            }
        }
    }

    #[test]
    fn perturbed_identity_is_detected() {
        let p = hahn(int(0), rat(1, 2), 5);
        let r = verify_perturbed(IdentityId::T31b, &p, 2).unwrap();
        match r.status {
            VerifyStatus::NonzeroResidual { witness, residual } => {
                assert_eq!(witness, int(0));
                assert_eq!(residual, int(-1));
            }
            VerifyStatus::ProvedZero => panic!("perturbation not detected"),
        }
    }

    #[test]
    fn out_of_range_degree_rejected() {
        let p = hahn(int(0), int(0), 4);
        assert!(matches!(
            residual(IdentityId::T31a, &p, 0, &int(0)),
            Err(IdentityError::DegreeOutOfRange { .. })
        ));
        assert!(matches!(
            residual(IdentityId::T31c, &p, 3, &int(0)),
            Err(IdentityError::DegreeOutOfRange { .. })
        ));
        assert!(matches!(
            residual(IdentityId::T31a, &kraw(rat(1, 2), 4), 1, &int(0)),
            Err(IdentityError::WrongParams { .. })
        ));
    }

    #[test]
    fn generic_identity_on_small_measures() {
        // smallest nondegenerate case: two atoms at the interval ends
        let two =
            DiscreteMeasure::new(vec![(int(0), rat(1, 2)), (int(3), rat(1, 2))], int(3)).unwrap();
        for x in half_integer_points(1) {
            assert_eq!(generic_residual(&two, 1, &x).unwrap(), int(0));
        }
        // four interior atoms placed like first-kind nodes
        let nodes = DiscreteMeasure::new(
            vec![
                (rat(1, 16), rat(1, 4)),
                (rat(5, 16), rat(1, 4)),
                (rat(11, 16), rat(1, 4)),
                (rat(15, 16), rat(1, 4)),
            ],
            int(1),
        )
        .unwrap();
        for degree in [1u32, 2] {
            for x in half_integer_points(degree) {
                assert_eq!(generic_residual(&nodes, degree, &x).unwrap(), int(0));
            }
        }
    }

    #[test]
    fn generic_identity_agrees_with_hahn_path() {
        let hp = HahnParams::classical(int(0), rat(1, 2), 4).unwrap();
        let measure = crate::moments::hahn_measure(&hp).unwrap();
        let params = IdentityParams::Hahn(hp);
        for degree in [1u32, 2, 3] {
            for x in half_integer_points(degree) {
                let via_measure = generic_residual(&measure, degree, &x).unwrap();
                let via_terms = residual(IdentityId::T31a, &params, degree, &x).unwrap();
                assert_eq!(via_measure, int(0));
                assert_eq!(via_terms, int(0));
            }
        }
    }

    #[test]
    fn dual_identity_small_grid() {
        for (a, b) in [(int(0), int(0)), (rat(1, 2), int(1)), (int(1), rat(1, 2))] {
            for n in [2u32, 4] {
                let p = HahnParams::classical(a.clone(), b.clone(), n).unwrap();
                for degree in 0..n {
                    let params = IdentityParams::Hahn(p.clone());
                    let r = verify(IdentityId::I314, &params, degree).unwrap();
                    assert!(r.status.is_proved(), "I314 failed: {:?}", r.status);
                }
            }
        }
    }

    #[test]
    fn trig_gap_shrinks_with_n() {
        // exact already at the middle of the interval for degree 1
        assert!(trig_limit_gap(1, 0.0, 500) < 1e-12);
        for degree in [2u32, 3, 5] {
            for z in [-0.5, 0.5] {
                let coarse = trig_limit_gap(degree, z, 500);
                let fine = trig_limit_gap(degree, z, 2000);
                assert!(fine <= coarse + 1e-12, "gap grew: {coarse} -> {fine}");
                assert!(
                    fine < 1e-2,
                    "gap too large at degree {degree}, z={z}: {fine}"
                );
            }
        }
        // endpoint is exact for every N
        assert!(trig_limit_gap(2, 1.0, 100) < 1e-12);
    }

    /// The Krawtchouk residual structure is the steep-parameter limit of the
    /// Hahn one: at alpha = pt, beta = qt the residuals agree within 1e-4 at
    /// t = 1e4 (both are exactly zero), and the individual squared terms
    /// drift together like 1/t.
    #[test]
    fn krawtchouk_residuals_are_limits_of_hahn_residuals() {
        let p_val = rat(1, 3);
        let q_val = rat(2, 3);
        let (nn, degree) = (5u32, 2u32);
        let x = rat(1, 3);
        let kp = KrawtchoukParams::new(p_val.clone(), nn).unwrap();
        let kraw_params = IdentityParams::Krawtchouk(kp.clone());

        let pairs: [(IdentityId, IdentityId); 4] = [
            (IdentityId::T41a, IdentityId::T31a),
            (IdentityId::T41b, IdentityId::T31b),
            (IdentityId::T41c, IdentityId::T31c),
            (IdentityId::T41d, IdentityId::T31d),
        ];
        let term_products = |terms: &[Sq]| -> Vec<f64> {
            terms
                .iter()
                .map(|t| to_f64(&(&t.coeff * &t.base * &t.base)))
                .collect()
        };
        for (kraw_id, hahn_id) in pairs {
            let mut max_gap_by_t = Vec::new();
            for t in [1_000i64, 10_000] {
                let steep = HahnParams::classical(&p_val * int(t), &q_val * int(t), nn).unwrap();
                let steep_params = IdentityParams::Hahn(steep.clone());
                // the residuals themselves agree (both exactly zero)
                let rk = to_f64(&residual(kraw_id, &kraw_params, degree, &x).unwrap());
                let rh = to_f64(&residual(hahn_id, &steep_params, degree, &x).unwrap());
                assert!((rk - rh).abs() <= 1e-4);
                // and the term tables converge entry by entry
                let steep_terms = match hahn_id {
                    IdentityId::T31a => hahn_terms_a(&steep, degree, &x).unwrap(),
                    IdentityId::T31b => hahn_terms_b(&steep, degree, &x).unwrap(),
                    IdentityId::T31c => hahn_terms_c(&steep, degree, &x).unwrap(),
                    _ => hahn_terms_d(&steep, degree, &x).unwrap(),
                };
                let kraw_terms = match kraw_id {
                    IdentityId::T41a => krawtchouk_terms_a(&kp, degree, &x),
                    IdentityId::T41b => krawtchouk_terms_b(&kp, degree, &x),
                    IdentityId::T41c => krawtchouk_terms_c(&kp, degree, &x),
                    _ => krawtchouk_terms_d(&kp, degree, &x),
                };
                let steep_products = term_products(&steep_terms);
                let kraw_products = term_products(&kraw_terms);
                assert_eq!(
                    steep_products.len(),
                    kraw_products.len(),
                    "{hahn_id} vs {kraw_id}"
                );
                let max_gap = steep_products
                    .iter()
                    .zip(&kraw_products)
                    .map(|(a, b)| (a - b).abs())
                    .fold(0.0f64, f64::max);
                max_gap_by_t.push(max_gap);
            }
            // empirical rate is ~1/t (a 10x drop); require at least 5x
            assert!(
                max_gap_by_t[1] < max_gap_by_t[0] / 5.0,
                "{kraw_id}: termwise gap not shrinking with t: {max_gap_by_t:?}"
            );
            assert!(
                max_gap_by_t[1] < 5e-2,
                "{kraw_id}: termwise gap too large at t = 1e4"
            );
        }
    }
}
