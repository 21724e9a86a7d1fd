//! Exact evaluation of the discrete orthogonal polynomial families.
//!
//! All families live on the support `{0, ..., N}` and are evaluated as
//! terminating hypergeometric sums with an incremental term update, so each
//! value costs O(degree) exact operations. Parameters are restricted to
//! rationals: every identity checked by this crate holds as a rational
//! function of the parameters, so rational parameters lose no generality
//! while keeping every computation exact.

use crate::exact::{factorial, gen_binomial, int, pochhammer, Rational};
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Parameter regimes in which the Hahn weight is a positive probability mass.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    /// `alpha > -1` and `beta > -1`.
    Classical,
    /// `alpha < -N` and `beta < -N`.
    Eberlein,
}

/// Errors from family evaluation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("degree {degree} exceeds the family size (max {max})")]
    DegreeOutOfRange { degree: u32, max: u32 },
    #[error("support point {x} outside 0..={max}")]
    PointOutOfRange { x: i64, max: u32 },
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("operation requires the classical regime")]
    ClassicalOnly,
    #[error("interpolation nodes coincide")]
    CoincidentNodes,
}

/// Validated Hahn parameter bundle `(alpha, beta, N)` with its regime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HahnParams {
    pub alpha: Rational,
    pub beta: Rational,
    /// Right endpoint of the support `{0, ..., n}`; the family has `n + 1` members.
    pub n: u32,
    pub regime: Regime,
}

impl HahnParams {
    pub fn classical(alpha: Rational, beta: Rational, n: u32) -> Result<Self, PolyError> {
        if n == 0 {
            return Err(PolyError::InvalidParams("N must be positive".into()));
        }
        if alpha <= int(-1) || beta <= int(-1) {
            return Err(PolyError::InvalidParams(
                "classical regime requires alpha > -1 and beta > -1".into(),
            ));
        }
        Ok(Self {
            alpha,
            beta,
            n,
            regime: Regime::Classical,
        })
    }

    pub fn eberlein(alpha: Rational, beta: Rational, n: u32) -> Result<Self, PolyError> {
        if n == 0 {
            return Err(PolyError::InvalidParams("N must be positive".into()));
        }
        let bound = int(-(n as i64));
        if alpha >= bound || beta >= bound {
            return Err(PolyError::InvalidParams(
                "Eberlein regime requires alpha < -N and beta < -N".into(),
            ));
        }
        Ok(Self {
            alpha,
            beta,
            n,
            regime: Regime::Eberlein,
        })
    }

    /// Picks the regime from the parameter values, rejecting the gap between.
    pub fn infer(alpha: Rational, beta: Rational, n: u32) -> Result<Self, PolyError> {
        if alpha > int(-1) && beta > int(-1) {
            Self::classical(alpha, beta, n)
        } else if alpha < int(-(n as i64)) && beta < int(-(n as i64)) {
            Self::eberlein(alpha, beta, n)
        } else {
            Err(PolyError::InvalidParams(
                "parameters fit neither the classical (alpha, beta > -1) nor the Eberlein (alpha, beta < -N) regime".into(),
            ))
        }
    }

    /// `alpha + beta`.
    pub fn s(&self) -> Rational {
        &self.alpha + &self.beta
    }

    fn check_degree(&self, degree: u32) -> Result<(), PolyError> {
        if degree > self.n {
            Err(PolyError::DegreeOutOfRange {
                degree,
                max: self.n,
            })
        } else {
            Ok(())
        }
    }
}

/// Validated Krawtchouk parameter bundle `(p, N)` with `q = 1 - p` cached.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KrawtchoukParams {
    pub p: Rational,
    pub q: Rational,
    /// Right endpoint of the support `{0, ..., n}`.
    pub n: u32,
}

impl KrawtchoukParams {
    pub fn new(p: Rational, n: u32) -> Result<Self, PolyError> {
        if n == 0 {
            return Err(PolyError::InvalidParams("N must be positive".into()));
        }
        if p <= Rational::zero() || p >= Rational::one() {
            return Err(PolyError::InvalidParams("p must satisfy 0 < p < 1".into()));
        }
        let q = Rational::one() - &p;
        Ok(Self { p, q, n })
    }
}

/// Family tag attached to evaluated values.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Hahn,
    Krawtchouk,
    DualHahn,
    ChebyshevT,
    ChebyshevU,
}

/// A single exact evaluation, tagged with its origin.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyValue {
    pub family: Family,
    pub degree: u32,
    pub point: Rational,
    pub value: Rational,
}

/// Discrete Chebyshev kind: `T` is the Hahn family at `alpha = beta = -1/2`,
/// `U` at `alpha = beta = +1/2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChebKind {
    T,
    U,
}

/// Unchecked hypergeometric core shared by the public evaluators and the
/// identity engine (which needs shifted families, down to N = 0).
pub(crate) fn hahn_series(
    degree: u32,
    x: &Rational,
    alpha: &Rational,
    beta: &Rational,
    n: u32,
) -> Rational {
    debug_assert!(degree <= n);
    let mut sum = Rational::one();
    let mut term = Rational::one();
    for k in 0..degree {
        let kk = int(k as i64);
        term *= (int(-(degree as i64)) + &kk)
            * (int(degree as i64 + 1) + alpha + beta + &kk)
            * (&kk - x);
        term /= (int(k as i64 + 1)) * (alpha + int(1) + &kk) * (int(-(n as i64)) + &kk);
        sum += &term;
    }
    sum
}

pub(crate) fn krawtchouk_series(degree: u32, x: &Rational, p: &Rational, n: u32) -> Rational {
    debug_assert!(degree <= n);
    let mut sum = Rational::one();
    let mut term = Rational::one();
    for k in 0..degree {
        let kk = int(k as i64);
        term *= (int(-(degree as i64)) + &kk) * (&kk - x);
        term /= (int(k as i64 + 1)) * (int(-(n as i64)) + &kk) * p;
        sum += &term;
    }
    sum
}

/// Hahn polynomial of the given degree at `x`, as its terminating
/// hypergeometric sum. Exact for every rational `x`.
pub fn hahn_eval(degree: u32, x: &Rational, params: &HahnParams) -> Result<Rational, PolyError> {
    params.check_degree(degree)?;
    Ok(hahn_series(
        degree,
        x,
        &params.alpha,
        &params.beta,
        params.n,
    ))
}

/// Krawtchouk polynomial of the given degree at `x`.
pub fn krawtchouk_eval(
    degree: u32,
    x: &Rational,
    params: &KrawtchoukParams,
) -> Result<Rational, PolyError> {
    if degree > params.n {
        return Err(PolyError::DegreeOutOfRange {
            degree,
            max: params.n,
        });
    }
    Ok(krawtchouk_series(degree, x, &params.p, params.n))
}

/// The spectral nodes `lambda_x = x (x + alpha + beta + 1)` for `x = 0..=N`.
pub fn dual_nodes(params: &HahnParams) -> Vec<Rational> {
    (0..=params.n)
        .map(|x| int(x as i64) * (int(x as i64 + 1) + params.s()))
        .collect()
}

/// Dual Hahn polynomial of the given degree at the spectral point `lambda`.
///
/// The polynomial is pinned by duality: its value at the node `lambda_x` is
/// the degree-`x` Hahn polynomial evaluated at the integer `degree`. We build
/// it by exact Lagrange interpolation through the first `degree + 1` nodes;
/// it then agrees with the duality relation at all `N + 1` nodes.
pub fn dual_hahn_eval(
    degree: u32,
    lambda: &Rational,
    params: &HahnParams,
) -> Result<Rational, PolyError> {
    if params.regime != Regime::Classical {
        return Err(PolyError::ClassicalOnly);
    }
    params.check_degree(degree)?;
    let nodes: Vec<Rational> = (0..=degree)
        .map(|x| int(x as i64) * (int(x as i64 + 1) + params.s()))
        .collect();
    for i in 1..nodes.len() {
        // strictly increasing in the classical regime (spacing s + 2x + 2 > 0)
        if nodes[i] <= nodes[i - 1] {
            return Err(PolyError::CoincidentNodes);
        }
    }
    let point = int(degree as i64);
    let mut acc = Rational::zero();
    for i in 0..=degree as usize {
        let value = hahn_series(i as u32, &point, &params.alpha, &params.beta, params.n);
        if value.is_zero() {
            continue;
        }
        let mut basis = Rational::one();
        for j in 0..=degree as usize {
            if j != i {
                basis *= (lambda - &nodes[j]) / (&nodes[i] - &nodes[j]);
            }
        }
        acc += value * basis;
    }
    Ok(acc)
}

/// Discrete Chebyshev polynomial of the first (`T`) or second (`U`) kind.
pub fn chebyshev_eval(
    kind: ChebKind,
    degree: u32,
    x: &Rational,
    n: u32,
) -> Result<Rational, PolyError> {
    let half = match kind {
        ChebKind::T => crate::exact::rat(-1, 2),
        ChebKind::U => crate::exact::rat(1, 2),
    };
    let params = HahnParams::classical(half.clone(), half, n)?;
    hahn_eval(degree, x, &params)
}

/// Hahn probability mass at the integer support point `x`.
pub fn weight_hahn(x: u32, params: &HahnParams) -> Result<Rational, PolyError> {
    if x > params.n {
        return Err(PolyError::PointOutOfRange {
            x: x as i64,
            max: params.n,
        });
    }
    let top = gen_binomial(&(int(x as i64) + &params.alpha), x)
        * gen_binomial(&(int((params.n - x) as i64) + &params.beta), params.n - x);
    let bot = gen_binomial(&(int(params.n as i64 + 1) + params.s()), params.n);
    Ok(top / bot)
}

/// Binomial mass `C(N, x) p^x q^(N-x)` at the integer support point `x`.
pub fn weight_krawtchouk(x: u32, params: &KrawtchoukParams) -> Result<Rational, PolyError> {
    if x > params.n {
        return Err(PolyError::PointOutOfRange {
            x: x as i64,
            max: params.n,
        });
    }
    let mut acc = gen_binomial(&int(params.n as i64), x);
    for _ in 0..x {
        acc *= &params.p;
    }
    for _ in 0..(params.n - x) {
        acc *= &params.q;
    }
    Ok(acc)
}

/// Normalization constant: the squared norm of the degree-`n` Hahn polynomial
/// is `1 / norm_const_pi(n)` under the Hahn probability mass.
///
/// The textbook closed form contains the quotient `(s+1)_n / (s+1)` with
/// `s = alpha + beta`, which is formally 0/0 at `s = -1`; it cancels
/// algebraically to `(s+2)_(n-1)`, and that cancelled form is what we
/// evaluate, so `s = -1` needs no special casing.
pub fn norm_const_pi(degree: u32, params: &HahnParams) -> Result<Rational, PolyError> {
    params.check_degree(degree)?;
    if degree == 0 {
        return Ok(Rational::one());
    }
    let s = params.s();
    let n = params.n as i64;
    let sign = if degree % 2 == 0 {
        Rational::one()
    } else {
        int(-1)
    };
    let common =
        sign * pochhammer(&int(-n), degree) * pochhammer(&(&params.alpha + int(1)), degree)
            / (factorial(degree)
                * pochhammer(&(int(n + 2) + &s), degree)
                * pochhammer(&(&params.beta + int(1)), degree));
    Ok(common * (int(2 * degree as i64 + 1) + &s) * pochhammer(&(&s + int(2)), degree - 1))
}

/// Evaluates the degree-`n` Hahn polynomial through its reflection
/// `(-1)^n ((beta+1)_n / (alpha+1)_n) Q_n(N - x)` with `alpha` and `beta`
/// swapped; identical to [`hahn_eval`] as a polynomial in `x`.
pub fn hahn_reflect(degree: u32, x: &Rational, params: &HahnParams) -> Result<Rational, PolyError> {
    if params.regime != Regime::Classical {
        return Err(PolyError::ClassicalOnly);
    }
    params.check_degree(degree)?;
    let sign = if degree % 2 == 0 {
        Rational::one()
    } else {
        int(-1)
    };
    let ratio = pochhammer(&(&params.beta + int(1)), degree)
        / pochhammer(&(&params.alpha + int(1)), degree);
    let reflected = hahn_series(
        degree,
        &(int(params.n as i64) - x),
        &params.beta,
        &params.alpha,
        params.n,
    );
    Ok(sign * ratio * reflected)
}

/// Exact values of the degree-`n` Hahn polynomial at the two ends of the
/// support: `(Q_n(0), Q_n(N)) = (1, (-1)^n (beta+1)_n / (alpha+1)_n)`.
pub fn endpoint_values(
    degree: u32,
    params: &HahnParams,
) -> Result<(Rational, Rational), PolyError> {
    if params.regime != Regime::Classical {
        return Err(PolyError::ClassicalOnly);
    }
    params.check_degree(degree)?;
    let sign = if degree % 2 == 0 {
        Rational::one()
    } else {
        int(-1)
    };
    let ratio = pochhammer(&(&params.beta + int(1)), degree)
        / pochhammer(&(&params.alpha + int(1)), degree);
    Ok((Rational::one(), sign * ratio))
}

/// `max { |Q_n(0)|, |Q_n(N)| } = max { 1, (beta+1)_n / (alpha+1)_n }`, the
/// endpoint sup-norm candidate. Valid in both regimes (the pochhammer ratio
/// is positive in each).
pub fn endpoint_bound(degree: u32, params: &HahnParams) -> Result<Rational, PolyError> {
    params.check_degree(degree)?;
    let ratio = pochhammer(&(&params.beta + int(1)), degree)
        / pochhammer(&(&params.alpha + int(1)), degree);
    debug_assert!(ratio.is_positive() || degree == 0);
    Ok(ratio.max(Rational::one()))
}
