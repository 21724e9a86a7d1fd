//! Degree thresholds, sup-norm bound values, and interval scanning.
//!
//! The thresholds are quadratic surds `(a + b sqrt(r)) / 2`; they are kept in
//! that exact form and every comparison against a degree (or against another
//! threshold) is decided by sign analysis and squaring, never by floating
//! them, so boundary cases with perfect-square radicands come out exact.
//!
//! Scanning is a falsification check, not a proof over the continuum: the
//! bounds themselves are theorems, and a fine grid of exact evaluations is
//! what catches transcription errors and regime violations. Out-of-threshold
//! scans are allowed (the report carries `threshold_ok: false`) so that
//! known counterexamples are expressible.

use crate::exact::{int, pochhammer, rat, to_f64, Rational};
use crate::polys::{
    dual_hahn_eval, endpoint_bound, hahn_eval, krawtchouk_eval, ChebKind, HahnParams,
    KrawtchoukParams, PolyError, Regime,
};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundError {
    #[error("threshold requires alpha + beta > -1")]
    NeedsPositiveSum,
    #[error("bound requires alpha + beta <= -1")]
    NeedsNegativeSum,
    #[error("degree {degree} exceeds the guaranteed threshold {threshold}")]
    ThresholdExceeded { degree: u32, threshold: String },
    #[error("degree {degree} outside the family's valid range (max {max})")]
    DegreeOutOfRange { degree: u32, max: u32 },
    #[error("bound formula degenerates at these parameters: {0}")]
    FormulaDegenerate(String),
    #[error("wrong regime: {0}")]
    WrongRegime(&'static str),
    #[error("requires N+1+beta-alpha >= 0")]
    DualRangeViolated,
    #[error("grid step must be positive")]
    NonPositiveStep,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Sign of `a + b sqrt(r)` for rationals with `r >= 0`, decided exactly.
fn radical_sign(a: &Rational, b: &Rational, r: &Rational) -> i8 {
    debug_assert!(!r.is_negative());
    let sa = sign(a);
    if b.is_zero() || r.is_zero() {
        return sa;
    }
    let sb = sign(b);
    if sa == 0 {
        return sb;
    }
    if sa == sb {
        return sa;
    }
    // opposite signs: compare a^2 against b^2 r
    let cmp = sign(&(a * a - b * b * r));
    if cmp == 0 {
        0
    } else if sa > 0 {
        cmp
    } else {
        -cmp
    }
}

/// Sign of `d + v sqrt(rv) + w sqrt(rw)`, decided exactly.
fn two_radical_sign(d: &Rational, v: &Rational, rv: &Rational, w: &Rational, rw: &Rational) -> i8 {
    // collapse vanished radicals first
    let v = if rv.is_zero() {
        Rational::zero()
    } else {
        v.clone()
    };
    let w = if rw.is_zero() {
        Rational::zero()
    } else {
        w.clone()
    };
    if w.is_zero() {
        return radical_sign(d, &v, rv);
    }
    if v.is_zero() {
        return radical_sign(d, &w, rw);
    }
    // sign of t = v sqrt(rv) + w sqrt(rw)
    let t_sign = match (sign(&v), sign(&w)) {
        (1, 1) => 1,
        (-1, -1) => -1,
        _ => {
            let cmp = sign(&(&v * &v * rv - &w * &w * rw));
            if cmp == 0 {
                0
            } else if sign(&v) > 0 {
                cmp
            } else {
                -cmp
            }
        }
    };
    let d_sign = sign(d);
    if t_sign == 0 {
        return d_sign;
    }
    if d_sign == 0 || d_sign == t_sign {
        return t_sign;
    }
    // |d| versus |t|: d^2 - t^2 = (d^2 - v^2 rv - w^2 rw) - 2vw sqrt(rv rw)
    let lin = d * d - &v * &v * rv - &w * &w * rw;
    let cmp = radical_sign(&lin, &(-(int(2) * &v * &w)), &(rv * rw));
    if cmp > 0 {
        d_sign
    } else if cmp < 0 {
        t_sign
    } else {
        0
    }
}

fn sign(r: &Rational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// A degree threshold in exact radical form `(linear + radical_coeff * sqrt(radicand)) / 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeThreshold {
    pub linear: Rational,
    pub radical_coeff: Rational,
    pub radicand: Rational,
}

impl DegreeThreshold {
    /// Exact decision of `n <= threshold`.
    pub fn admits(&self, degree: u32) -> bool {
        // (linear - 2n) + radical_coeff sqrt(radicand) >= 0
        let shifted = &self.linear - int(2 * degree as i64);
        radical_sign(&shifted, &self.radical_coeff, &self.radicand) >= 0
    }

    /// Exact decision of `self <= other`.
    pub fn le(&self, other: &DegreeThreshold) -> bool {
        let d = &other.linear - &self.linear;
        two_radical_sign(
            &d,
            &other.radical_coeff,
            &other.radicand,
            &(-self.radical_coeff.clone()),
            &self.radicand,
        ) >= 0
    }

    /// Float view for reports.
    pub fn to_f64(&self) -> f64 {
        (to_f64(&self.linear) + to_f64(&self.radical_coeff) * to_f64(&self.radicand).sqrt()) / 2.0
    }
}

impl std::fmt::Display for DegreeThreshold {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let fr = crate::exact::format_rational;
        let coeff = self.radical_coeff.abs();
        let sign = if self.radical_coeff.is_negative() {
            '-'
        } else {
            '+'
        };
        if coeff.is_one() {
            write!(
                f,
                "({} {} sqrt({}))/2",
                fr(&self.linear),
                sign,
                fr(&self.radicand)
            )
        } else {
            write!(
                f,
                "({} {} {}*sqrt({}))/2",
                fr(&self.linear),
                sign,
                fr(&coeff),
                fr(&self.radicand)
            )
        }
    }
}

/// Largest degree (as an exact surd) up to which the classical Hahn
/// polynomial is bounded by its endpoint values:
/// `(1 - s + sqrt((s+1)(s+2N+1))) / 2` with `s = alpha + beta > -1`.
pub fn hahn_threshold(params: &HahnParams) -> Result<DegreeThreshold, BoundError> {
    if params.regime != Regime::Classical {
        return Err(BoundError::WrongRegime("classical parameters required"));
    }
    let s = params.s();
    if s <= int(-1) {
        return Err(BoundError::NeedsPositiveSum);
    }
    let radicand = (&s + int(1)) * (&s + int(2 * params.n as i64 + 1));
    Ok(DegreeThreshold {
        linear: int(1) - s,
        radical_coeff: int(1),
        radicand,
    })
}

/// Threshold for the steep-parameter regime (`alpha, beta < -N`,
/// `alpha + beta < -2N - 1`): `(1 - s - sqrt((s+1)(s+1+2N))) / 2`.
pub fn eberlein_threshold(params: &HahnParams) -> Result<DegreeThreshold, BoundError> {
    if params.regime != Regime::Eberlein {
        return Err(BoundError::WrongRegime("Eberlein parameters required"));
    }
    let s = params.s();
    if s >= int(-2 * params.n as i64 - 1) {
        return Err(BoundError::WrongRegime("requires alpha + beta < -2N - 1"));
    }
    // both factors negative, so the radicand is positive
    let radicand = (&s + int(1)) * (&s + int(2 * params.n as i64 + 1));
    debug_assert!(radicand.is_positive());
    Ok(DegreeThreshold {
        linear: int(1) - s,
        radical_coeff: int(-1),
        radicand,
    })
}

/// Dual Hahn degree threshold `min(N+2, N+1+beta-alpha) / 2` (a plain
/// rational) for `alpha, beta > -1` and `N+1+beta-alpha >= 0`.
pub fn dual_threshold(params: &HahnParams) -> Result<Rational, BoundError> {
    if params.regime != Regime::Classical {
        return Err(BoundError::WrongRegime("classical parameters required"));
    }
    let skew = int(params.n as i64 + 1) + &params.beta - &params.alpha;
    if skew.is_negative() {
        return Err(BoundError::DualRangeViolated);
    }
    Ok(skew.min(int(params.n as i64 + 2)) / int(2))
}

/// Endpoint bound `max{1, (beta+1)_n/(alpha+1)_n}` for classical parameters
/// with `alpha + beta > -1`, guaranteed only up to [`hahn_threshold`];
/// refuses beyond it (scan unguaranteed degrees via [`BoundSpec::hahn_raw`]).
pub fn bound_hahn_endpoint(degree: u32, params: &HahnParams) -> Result<Rational, BoundError> {
    let threshold = hahn_threshold(params)?;
    if !threshold.admits(degree) {
        return Err(BoundError::ThresholdExceeded {
            degree,
            threshold: threshold.to_string(),
        });
    }
    Ok(endpoint_bound(degree, params)?)
}

/// Degree-unrestricted bound for classical parameters with
/// `alpha + beta <= -1` and `n <= N - 1`:
/// `max{1, (beta+1)_n/(alpha+1)_n} * ((s+2+N)_(n-1)/(s+2)_(n-1)) * ((n-1)!/(N-n+1)_(n-1))`.
pub fn bound_hahn_unrestricted(degree: u32, params: &HahnParams) -> Result<Rational, BoundError> {
    if params.regime != Regime::Classical {
        return Err(BoundError::WrongRegime("classical parameters required"));
    }
    let s = params.s();
    if s > int(-1) {
        return Err(BoundError::NeedsNegativeSum);
    }
    if degree + 1 > params.n {
        return Err(BoundError::DegreeOutOfRange {
            degree,
            max: params.n - 1,
        });
    }
    if degree == 0 {
        return Ok(Rational::one());
    }
    let trailing_den = pochhammer(&(&s + int(2)), degree - 1);
    if trailing_den.is_zero() {
        // only reachable outside the classical regime, kept as a guard
        return Err(BoundError::FormulaDegenerate(format!(
            "(s+2)_{} = 0",
            degree - 1
        )));
    }
    let n = params.n as i64;
    Ok(
        endpoint_bound(degree, params)? * pochhammer(&(&s + int(2 + n)), degree - 1) / trailing_den
            * crate::exact::factorial(degree - 1)
            / pochhammer(&int(n - degree as i64 + 1), degree - 1),
    )
}

/// Endpoint bound for the steep-parameter regime, guaranteed up to
/// [`eberlein_threshold`].
pub fn bound_eberlein(degree: u32, params: &HahnParams) -> Result<Rational, BoundError> {
    let threshold = eberlein_threshold(params)?;
    if !threshold.admits(degree) {
        return Err(BoundError::ThresholdExceeded {
            degree,
            threshold: threshold.to_string(),
        });
    }
    Ok(endpoint_bound(degree, params)?)
}

/// Dual Hahn bound `(N+1+beta-n)_n / (alpha+1)_n`, the magnitude of the
/// polynomial at the right end of the spectral interval; guaranteed up to
/// [`dual_threshold`].
pub fn bound_dual(degree: u32, params: &HahnParams) -> Result<Rational, BoundError> {
    let threshold = dual_threshold(params)?;
    if int(degree as i64) > threshold {
        return Err(BoundError::ThresholdExceeded {
            degree,
            threshold: crate::exact::format_rational(&threshold),
        });
    }
    Ok(pochhammer(
        &(int(params.n as i64 + 1) + &params.beta - int(degree as i64)),
        degree,
    ) / pochhammer(&(&params.alpha + int(1)), degree))
}

/// Krawtchouk bound `max{1, (q/p)^n}`, guaranteed for `n <= N/2 + 1`.
pub fn bound_krawtchouk(degree: u32, params: &KrawtchoukParams) -> Result<Rational, BoundError> {
    if int(2 * degree as i64) > int(params.n as i64 + 2) {
        return Err(BoundError::ThresholdExceeded {
            degree,
            threshold: format!("{}/2 + 1", params.n),
        });
    }
    let ratio = (&params.q / &params.p).pow(degree as i32);
    Ok(ratio.max(Rational::one()))
}

/// Discrete Chebyshev bounds: first kind `prod_(j=1)^(n-1) (1 + n/(N-n+j))`
/// for `n <= N-1`; second kind 1 for `n^2 <= N+1` (exact integer comparison).
pub fn bound_chebyshev(kind: ChebKind, degree: u32, n: u32) -> Result<Rational, BoundError> {
    match kind {
        ChebKind::T => {
            if degree + 1 > n {
                return Err(BoundError::DegreeOutOfRange { degree, max: n - 1 });
            }
            let mut acc = Rational::one();
            for j in 1..degree {
                acc *= int(1) + rat(degree as i64, n as i64 - degree as i64 + j as i64);
            }
            Ok(acc)
        }
        ChebKind::U => {
            if degree as u64 * degree as u64 > n as u64 + 1 {
                return Err(BoundError::ThresholdExceeded {
                    degree,
                    threshold: format!("sqrt({} + 1)", n),
                });
            }
            Ok(Rational::one())
        }
    }
}

/// Admissibility of the classical integer-grid bound `|Q_n| <= 1`:
/// `alpha >= beta > -1`, `n(n+1) <= N`, and
/// `alpha^2 + beta^2 - alpha beta + alpha + beta >= 0`.
pub fn zaremba_admissible(degree: u32, params: &HahnParams) -> bool {
    if params.regime != Regime::Classical || params.alpha < params.beta {
        return false;
    }
    if degree as u64 * (degree as u64 + 1) > params.n as u64 {
        return false;
    }
    let (a, b) = (&params.alpha, &params.beta);
    !(a * a + b * b - a * b + a + b).is_negative()
}

/// Which bound a scan checks, with the parameters it needs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoundFamily {
    /// Endpoint bound within the classical threshold.
    Hahn32(HahnParams),
    /// Degree-unrestricted bound for `alpha + beta <= -1`.
    Hahn34(HahnParams),
    /// Endpoint bound with no threshold guarantee (counterexample scans).
    HahnRaw(HahnParams),
    /// Endpoint bound in the steep-parameter regime.
    Eberlein38(HahnParams),
    /// Dual Hahn bound on the spectral interval.
    Dual39(HahnParams),
    /// Krawtchouk endpoint bound.
    Krawtchouk42(KrawtchoukParams),
    /// First-kind discrete Chebyshev product bound.
    ChebT36b { n: u32 },
    /// Second-kind discrete Chebyshev unit bound.
    ChebU36c { n: u32 },
    /// Integer-grid unit bound under the admissibility conditions.
    Zaremba(HahnParams),
}

impl BoundFamily {
    pub fn name(&self) -> &'static str {
        match self {
            BoundFamily::Hahn32(_) => "hahn32",
            BoundFamily::Hahn34(_) => "hahn34",
            BoundFamily::HahnRaw(_) => "hahn-raw",
            BoundFamily::Eberlein38(_) => "eberlein38",
            BoundFamily::Dual39(_) => "dual39",
            BoundFamily::Krawtchouk42(_) => "krawtchouk42",
            BoundFamily::ChebT36b { .. } => "cheb-t36b",
            BoundFamily::ChebU36c { .. } => "cheb-u36c",
            BoundFamily::Zaremba(_) => "zaremba",
        }
    }
}

/// A fully pinned scan target: family, degree, bound value, whether the
/// family's degree condition holds, and the scan interval `[0, R]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundSpec {
    pub family: BoundFamily,
    pub degree: u32,
    pub bound_value: Rational,
    pub threshold_ok: bool,
    pub interval_end: Rational,
}

impl BoundSpec {
    pub fn hahn32(degree: u32, params: HahnParams) -> Result<Self, BoundError> {
        let bound_value = bound_hahn_endpoint(degree, &params)?;
        let interval_end = int(params.n as i64);
        Ok(Self {
            family: BoundFamily::Hahn32(params),
            degree,
            bound_value,
            threshold_ok: true,
            interval_end,
        })
    }

    pub fn hahn34(degree: u32, params: HahnParams) -> Result<Self, BoundError> {
        let bound_value = bound_hahn_unrestricted(degree, &params)?;
        let interval_end = int(params.n as i64);
        Ok(Self {
            family: BoundFamily::Hahn34(params),
            degree,
            bound_value,
            threshold_ok: true,
            interval_end,
        })
    }

    /// Endpoint bound scanned without any degree guarantee; used to exhibit
    /// counterexamples beyond the threshold.
    pub fn hahn_raw(degree: u32, params: HahnParams) -> Result<Self, BoundError> {
        if degree > params.n {
            return Err(BoundError::DegreeOutOfRange {
                degree,
                max: params.n,
            });
        }
        let bound_value = endpoint_bound(degree, &params)?;
        let threshold_ok = match hahn_threshold(&params) {
            Ok(t) => t.admits(degree),
            Err(_) => false,
        };
        let interval_end = int(params.n as i64);
        Ok(Self {
            family: BoundFamily::HahnRaw(params),
            degree,
            bound_value,
            threshold_ok,
            interval_end,
        })
    }

    pub fn eberlein38(degree: u32, params: HahnParams) -> Result<Self, BoundError> {
        let bound_value = bound_eberlein(degree, &params)?;
        let interval_end = int(params.n as i64);
        Ok(Self {
            family: BoundFamily::Eberlein38(params),
            degree,
            bound_value,
            threshold_ok: true,
            interval_end,
        })
    }

    pub fn dual39(degree: u32, params: HahnParams) -> Result<Self, BoundError> {
        let bound_value = bound_dual(degree, &params)?;
        let interval_end = int(params.n as i64) * (int(params.n as i64 + 1) + params.s());
        Ok(Self {
            family: BoundFamily::Dual39(params),
            degree,
            bound_value,
            threshold_ok: true,
            interval_end,
        })
    }

    pub fn krawtchouk42(degree: u32, params: KrawtchoukParams) -> Result<Self, BoundError> {
        let bound_value = bound_krawtchouk(degree, &params)?;
        let interval_end = int(params.n as i64);
        Ok(Self {
            family: BoundFamily::Krawtchouk42(params),
            degree,
            bound_value,
            threshold_ok: true,
            interval_end,
        })
    }

    pub fn cheb_t(degree: u32, n: u32) -> Result<Self, BoundError> {
        let bound_value = bound_chebyshev(ChebKind::T, degree, n)?;
        Ok(Self {
            family: BoundFamily::ChebT36b { n },
            degree,
            bound_value,
            threshold_ok: true,
            interval_end: int(n as i64),
        })
    }

    pub fn cheb_u(degree: u32, n: u32) -> Result<Self, BoundError> {
        let bound_value = bound_chebyshev(ChebKind::U, degree, n)?;
        Ok(Self {
            family: BoundFamily::ChebU36c { n },
            degree,
            bound_value,
            threshold_ok: true,
            interval_end: int(n as i64),
        })
    }

    pub fn zaremba(degree: u32, params: HahnParams) -> Result<Self, BoundError> {
        if degree > params.n {
            return Err(BoundError::DegreeOutOfRange {
                degree,
                max: params.n,
            });
        }
        let threshold_ok = zaremba_admissible(degree, &params);
        let interval_end = int(params.n as i64);
        Ok(Self {
            family: BoundFamily::Zaremba(params),
            degree,
            bound_value: Rational::one(),
            threshold_ok,
            interval_end,
        })
    }

    /// Human-readable degree threshold of the family, when one exists.
    pub fn threshold_text(&self) -> Option<String> {
        match &self.family {
            BoundFamily::Hahn32(p) | BoundFamily::HahnRaw(p) => {
                hahn_threshold(p).ok().map(|t| t.to_string())
            }
            BoundFamily::Hahn34(p) => Some(format!("N - 1 = {}", p.n - 1)),
            BoundFamily::Eberlein38(p) => eberlein_threshold(p).ok().map(|t| t.to_string()),
            BoundFamily::Dual39(p) => dual_threshold(p)
                .ok()
                .map(|t| crate::exact::format_rational(&t)),
            BoundFamily::Krawtchouk42(p) => Some(format!(
                "N/2 + 1 = {}",
                crate::exact::format_rational(&rat(p.n as i64 + 2, 2))
            )),
            BoundFamily::ChebT36b { n } => Some(format!("N - 1 = {}", n - 1)),
            BoundFamily::ChebU36c { n } => Some(format!("sqrt(N + 1) = sqrt({})", n + 1)),
            BoundFamily::Zaremba(p) => Some(format!("n(n+1) <= N = {}", p.n)),
        }
    }

    /// Exact polynomial evaluation at a scan point.
    fn evaluate(&self, x: &Rational) -> Result<Rational, BoundError> {
        match &self.family {
            BoundFamily::Hahn32(p)
            | BoundFamily::Hahn34(p)
            | BoundFamily::HahnRaw(p)
            | BoundFamily::Eberlein38(p)
            | BoundFamily::Zaremba(p) => Ok(hahn_eval(self.degree, x, p)?),
            BoundFamily::Dual39(p) => Ok(dual_hahn_eval(self.degree, x, p)?),
            BoundFamily::Krawtchouk42(p) => Ok(krawtchouk_eval(self.degree, x, p)?),
            BoundFamily::ChebT36b { n } => Ok(crate::polys::chebyshev_eval(
                ChebKind::T,
                self.degree,
                x,
                *n,
            )?),
            BoundFamily::ChebU36c { n } => Ok(crate::polys::chebyshev_eval(
                ChebKind::U,
                self.degree,
                x,
                *n,
            )?),
        }
    }
}

/// Outcome of a bound scan: worst |value|/bound ratio over the grid, and all
/// points where the ratio exceeds 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub spec: BoundSpec,
    pub grid_step: Rational,
    pub worst_point: Rational,
    pub worst_ratio: Rational,
    pub violations: Vec<(Rational, Rational)>,
}

impl BoundReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Scans `|polynomial(x)| / bound` over the grid `{j * step} ∪ {integers}`
/// in `[0, R]` (plus the interval endpoint, and the spectral nodes for the
/// dual family), all comparisons exact.
///
/// The integer-grid family scans integers only, whatever the step: its
/// bound is claimed on the integer support alone.
pub fn scan(spec: &BoundSpec, grid_step: &Rational) -> Result<BoundReport, BoundError> {
    if !grid_step.is_positive() {
        return Err(BoundError::NonPositiveStep);
    }
    let end = &spec.interval_end;
    let mut points: BTreeSet<Rational> = BTreeSet::new();
    let integer_only = matches!(spec.family, BoundFamily::Zaremba(_));
    if !integer_only {
        let mut x = Rational::zero();
        while &x <= end {
            points.insert(x.clone());
            x += grid_step;
        }
    }
    // every integer in [0, R], and R itself
    let floor_end = end.numer().div_floor(end.denom());
    let mut k = num_bigint::BigInt::from(0u8);
    while k <= floor_end {
        points.insert(Rational::from_integer(k.clone()));
        k += 1u8;
    }
    points.insert(end.clone());
    if let BoundFamily::Dual39(p) = &spec.family {
        points.extend(crate::polys::dual_nodes(p));
    }

    let mut worst_point = Rational::zero();
    let mut worst_ratio = Rational::zero();
    let mut violations = Vec::new();
    for x in points {
        let value = spec.evaluate(&x)?;
        let ratio = value.abs() / &spec.bound_value;
        if ratio > worst_ratio {
            worst_ratio = ratio.clone();
            worst_point = x.clone();
        }
        if ratio > Rational::one() {
            violations.push((x, value));
        }
    }
    Ok(BoundReport {
        spec: spec.clone(),
        grid_step: grid_step.clone(),
        worst_point,
        worst_ratio,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::format_rational;

    fn classical(a: Rational, b: Rational, n: u32) -> HahnParams {
        HahnParams::classical(a, b, n).unwrap()
    }

    #[test]
    fn threshold_perfect_square_radicand() {
        let p = classical(int(0), int(0), 4);
        let t = hahn_threshold(&p).unwrap();
        assert_eq!(t.radicand, int(9));
        // threshold is exactly 2: degree 2 admitted, 3 not
        assert!(t.admits(2));
        assert!(!t.admits(3));
    }

    #[test]
    fn threshold_requires_sum_above_minus_one() {
        let p = classical(rat(-1, 2), rat(-1, 2), 4);
        assert_eq!(hahn_threshold(&p), Err(BoundError::NeedsPositiveSum));
    }

    #[test]
    fn threshold_comparison_is_exact() {
        // (-1 + sqrt(4N+1))/2 <= hahn threshold whenever s >= 1, 3 <= N
        for s_num in [4i64, 6, 9, 14] {
            let s = rat(s_num, 4); // 1, 3/2, 9/4, 7/2
            for n in [3u32, 10, 37, 50] {
                let integer_grid_cap = DegreeThreshold {
                    linear: int(-1),
                    radical_coeff: int(1),
                    radicand: int(4 * n as i64 + 1),
                };
                let p = classical(s.clone() / int(2), s.clone() / int(2), n);
                let t = hahn_threshold(&p).unwrap();
                assert!(integer_grid_cap.le(&t), "failed at s={s}, N={n}");
            }
        }
        // and the comparison can go the other way (s = 0, large N)
        let p = classical(int(0), int(0), 16);
        let t = hahn_threshold(&p).unwrap();
        let cap = DegreeThreshold {
            linear: int(-1),
            radical_coeff: int(1),
            radicand: int(65),
        };
        assert!(!cap.le(&t));
        assert!(t.le(&cap));
    }

    #[test]
    fn radical_sign_cases() {
        // 3 - sqrt(8) > 0, 3 - sqrt(10) < 0, 3 - sqrt(9) = 0
        assert_eq!(radical_sign(&int(3), &int(-1), &int(8)), 1);
        assert_eq!(radical_sign(&int(3), &int(-1), &int(10)), -1);
        assert_eq!(radical_sign(&int(3), &int(-1), &int(9)), 0);
        // sqrt(2) + sqrt(3) - 3 > 0 exactly (and - 4 < 0)
        assert_eq!(
            two_radical_sign(&int(-3), &int(1), &int(2), &int(1), &int(3)),
            1
        );
        assert_eq!(
            two_radical_sign(&int(-4), &int(1), &int(2), &int(1), &int(3)),
            -1
        );
        // sqrt(8) - 2 sqrt(2) = 0
        assert_eq!(
            two_radical_sign(&int(0), &int(1), &int(8), &int(-2), &int(2)),
            0
        );
    }

    #[test]
    fn eberlein_threshold_example() {
        let p = HahnParams::eberlein(int(-4), int(-4), 3).unwrap();
        let t = eberlein_threshold(&p).unwrap();
        // (9 - sqrt(7))/2: admits 3, not 4
        assert_eq!(t.linear, int(9));
        assert_eq!(t.radicand, int(7));
        assert!(t.admits(3));
        assert!(!t.admits(4));
        assert_eq!(bound_eberlein(2, &p).unwrap(), int(1));
    }

    #[test]
    fn dual_threshold_examples() {
        let p = classical(int(0), int(0), 4);
        assert_eq!(dual_threshold(&p).unwrap(), rat(5, 2));
        // tie between the two branches at beta - alpha = 1
        let p = classical(int(0), int(1), 4);
        assert_eq!(dual_threshold(&p).unwrap(), int(3));
        assert_eq!(bound_dual(0, &p).unwrap(), int(1));
        let p = HahnParams::classical(int(4), int(0), 2).unwrap();
        assert!(matches!(
            dual_threshold(&p),
            Err(BoundError::DualRangeViolated)
        ));
    }

    #[test]
    fn endpoint_bound_values() {
        let p = classical(int(0), int(0), 4);
        assert_eq!(bound_hahn_endpoint(2, &p).unwrap(), int(1));
        assert!(matches!(
            bound_hahn_endpoint(3, &p),
            Err(BoundError::ThresholdExceeded { degree: 3, .. })
        ));
        let p = classical(rat(-1, 2), rat(1, 2), 40);
        assert_eq!(bound_hahn_endpoint(2, &p).unwrap(), int(5));
    }

    #[test]
    fn unrestricted_bound_values() {
        let p = classical(rat(-1, 2), rat(-1, 2), 4);
        assert_eq!(bound_hahn_unrestricted(1, &p).unwrap(), int(1));
        assert_eq!(bound_hahn_unrestricted(2, &p).unwrap(), rat(5, 3));
        assert!(bound_hahn_unrestricted(4, &p).is_err());
        let p = classical(int(0), int(0), 4);
        assert_eq!(
            bound_hahn_unrestricted(2, &p),
            Err(BoundError::NeedsNegativeSum)
        );
    }

    #[test]
    fn krawtchouk_bound_values() {
        let p = KrawtchoukParams::new(rat(1, 2), 8).unwrap();
        assert_eq!(bound_krawtchouk(3, &p).unwrap(), int(1));
        let p = KrawtchoukParams::new(rat(1, 3), 8).unwrap();
        assert_eq!(bound_krawtchouk(2, &p).unwrap(), int(4));
        assert_eq!(bound_krawtchouk(5, &p).unwrap(), int(32));
        assert!(bound_krawtchouk(6, &p).is_err());
    }

    #[test]
    fn chebyshev_bound_values() {
        assert_eq!(bound_chebyshev(ChebKind::T, 1, 5).unwrap(), int(1));
        assert_eq!(bound_chebyshev(ChebKind::T, 2, 4).unwrap(), rat(5, 3));
        assert_eq!(bound_chebyshev(ChebKind::U, 2, 3).unwrap(), int(1)); // 4 <= 4
        assert!(bound_chebyshev(ChebKind::U, 3, 3).is_err());
        assert!(bound_chebyshev(ChebKind::T, 5, 5).is_err());
    }

    #[test]
    fn zaremba_admissibility() {
        assert!(zaremba_admissible(2, &classical(int(0), int(0), 6)));
        assert!(!zaremba_admissible(2, &classical(int(0), int(0), 5))); // n(n+1) > N
        assert!(!zaremba_admissible(
            1,
            &classical(rat(-1, 2), rat(-1, 2), 9)
        )); // quadratic form < 0
        assert!(!zaremba_admissible(1, &classical(int(0), int(1), 9))); // needs alpha >= beta
    }

    #[test]
    fn scan_clean_family() {
        let spec = BoundSpec::hahn32(2, classical(int(0), int(0), 4)).unwrap();
        let report = scan(&spec, &rat(1, 8)).unwrap();
        assert!(report.passed());
        assert!(report.worst_ratio <= int(1));
    }

    #[test]
    fn scan_finds_the_counterexample() {
        let spec = BoundSpec::hahn_raw(2, classical(rat(-1, 2), rat(-1, 2), 4)).unwrap();
        assert!(!spec.threshold_ok);
        assert_eq!(spec.bound_value, int(1));
        let report = scan(&spec, &int(1)).unwrap();
        assert_eq!(report.violations.len(), 1);
        let (x, value) = &report.violations[0];
        assert_eq!(x, &int(2));
        assert_eq!(value, &rat(-5, 3));
        assert_eq!(report.worst_ratio, rat(5, 3));
    }

    #[test]
    fn scan_sharpness_of_unrestricted_bound() {
        let spec = BoundSpec::hahn34(2, classical(rat(-1, 2), rat(-1, 2), 4)).unwrap();
        assert_eq!(spec.bound_value, rat(5, 3));
        let report = scan(&spec, &rat(1, 8)).unwrap();
        assert!(report.passed());
        assert_eq!(report.worst_ratio, int(1));
        assert_eq!(report.worst_point, int(2));
    }

    /// Coarsening the grid can only shrink the worst ratio (subset of points).
    #[test]
    fn scan_monotone_in_step() {
        let specs = [
            BoundSpec::hahn32(2, classical(rat(1, 2), int(1), 6)).unwrap(),
            BoundSpec::krawtchouk42(3, KrawtchoukParams::new(rat(1, 3), 7).unwrap()).unwrap(),
            BoundSpec::cheb_t(3, 6).unwrap(),
        ];
        for spec in &specs {
            let fine = scan(spec, &rat(1, 8)).unwrap();
            for coarse_step in [rat(1, 4), rat(1, 2), int(1)] {
                let coarse = scan(spec, &coarse_step).unwrap();
                assert!(
                    coarse.worst_ratio <= fine.worst_ratio,
                    "coarse grid beat fine grid for {}",
                    spec.family.name()
                );
            }
        }
    }

    #[test]
    fn scan_dual_includes_spectral_nodes() {
        let params = classical(rat(1, 2), int(1), 4);
        let spec = BoundSpec::dual39(2, params).unwrap();
        // interval end is rational (N(N+s+1) = 4 * 13/2 = 26)
        assert_eq!(format_rational(&spec.interval_end), "26");
        let report = scan(&spec, &rat(1, 8)).unwrap();
        assert!(report.passed());
        // the bound is attained at the right endpoint
        assert_eq!(report.worst_ratio, int(1));
        assert_eq!(report.worst_point, spec.interval_end);
    }

    #[test]
    fn scan_rejects_bad_step() {
        let spec = BoundSpec::cheb_u(1, 5).unwrap();
        assert!(matches!(
            scan(&spec, &int(0)),
            Err(BoundError::NonPositiveStep)
        ));
    }
}
