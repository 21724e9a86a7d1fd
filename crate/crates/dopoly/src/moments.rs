//! Hankel moment determinants, principal-representation endpoints, modified
//! determinants, and the closed-form determinant ratios of the Hahn and dual
//! Hahn moment sequences.
//!
//! A moment sequence always carries the right endpoint of its interval
//! `[0, R]`: the "upper" determinant family mixes moments with that endpoint,
//! and making it a field prevents silently scanning the wrong interval
//! (the dual Hahn measure lives on `[0, N(N+alpha+beta+1)]`, not `[0, N]`).

use crate::exact::{factorial, int, pochhammer, Rational, RationalMatrix};
use crate::polys::{
    weight_hahn, weight_krawtchouk, HahnParams, KrawtchoukParams, PolyError, Regime,
};
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MomentError {
    #[error("need moments up to order {needed}, have {have}")]
    InsufficientMoments { needed: usize, have: usize },
    #[error("moment sequence must start with c_0 = 1")]
    NotNormalized,
    #[error("determinant order {0} not defined (must be >= -1)")]
    OrderOutOfRange(i64),
    #[error("index out of the formula's valid range: {0}")]
    IndexOutOfRange(String),
    #[error("boundary moment point: a lower-order Hankel determinant vanishes")]
    BoundaryPoint,
    #[error("zero divisor determinant")]
    ZeroDivisor,
    #[error("invalid measure: {0}")]
    InvalidMeasure(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Truncated moment sequence `c_0 = 1, c_1, ..., c_L` of a measure on `[0, R]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MomentSequence {
    interval_end: Rational,
    c: Vec<Rational>,
}

impl MomentSequence {
    pub fn new(interval_end: Rational, c: Vec<Rational>) -> Result<Self, MomentError> {
        if c.is_empty() || !c[0].is_one() {
            return Err(MomentError::NotNormalized);
        }
        Ok(Self { interval_end, c })
    }

    pub fn interval_end(&self) -> &Rational {
        &self.interval_end
    }

    /// Highest available moment order.
    pub fn max_order(&self) -> usize {
        self.c.len() - 1
    }

    pub fn moment(&self, j: usize) -> Result<&Rational, MomentError> {
        self.c.get(j).ok_or(MomentError::InsufficientMoments {
            needed: j,
            have: self.max_order(),
        })
    }

    /// Copy with the moment of order `j` replaced (used to cross-check the
    /// modified determinants against direct recomputation).
    pub fn with_moment(&self, j: usize, value: Rational) -> Result<Self, MomentError> {
        let mut c = self.c.clone();
        *c.get_mut(j).ok_or(MomentError::InsufficientMoments {
            needed: j,
            have: self.max_order(),
        })? = value;
        Self::new(self.interval_end.clone(), c)
    }

    fn require(&self, order: usize) -> Result<(), MomentError> {
        if self.max_order() < order {
            Err(MomentError::InsufficientMoments {
                needed: order,
                have: self.max_order(),
            })
        } else {
            Ok(())
        }
    }
}

/// Finitely supported probability measure on `[0, R]` with rational atoms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscreteMeasure {
    support: Vec<Rational>,
    masses: Vec<Rational>,
    interval_end: Rational,
}

impl DiscreteMeasure {
    /// Atoms may come in any order; they are sorted by support point.
    /// Requires distinct points inside `[0, R]`, positive masses, total mass 1.
    pub fn new(
        atoms: Vec<(Rational, Rational)>,
        interval_end: Rational,
    ) -> Result<Self, MomentError> {
        if atoms.is_empty() {
            return Err(MomentError::InvalidMeasure("no atoms".into()));
        }
        let mut atoms = atoms;
        atoms.sort_by(|a, b| a.0.cmp(&b.0));
        let mut total = Rational::zero();
        for (point, mass) in &atoms {
            if point.is_negative() || *point > interval_end {
                return Err(MomentError::InvalidMeasure(format!(
                    "support point {point} outside [0, {interval_end}]"
                )));
            }
            if !mass.is_positive() {
                return Err(MomentError::InvalidMeasure(
                    "masses must be positive".into(),
                ));
            }
            total += mass;
        }
        for w in atoms.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(MomentError::InvalidMeasure(format!(
                    "repeated support point {}",
                    w[0].0
                )));
            }
        }
        if !total.is_one() {
            return Err(MomentError::InvalidMeasure(format!(
                "total mass {total} != 1"
            )));
        }
        let (support, masses) = atoms.into_iter().unzip();
        Ok(Self {
            support,
            masses,
            interval_end,
        })
    }

    pub fn support(&self) -> &[Rational] {
        &self.support
    }

    pub fn masses(&self) -> &[Rational] {
        &self.masses
    }

    pub fn interval_end(&self) -> &Rational {
        &self.interval_end
    }

    pub fn len(&self) -> usize {
        self.support.len()
    }

    pub fn is_empty(&self) -> bool {
        self.support.is_empty()
    }
}

/// Exact moments `c_j = sum_i mass_i point_i^j` for `j = 0..=up_to`.
pub fn moments_of(measure: &DiscreteMeasure, up_to: usize) -> MomentSequence {
    let mut c = Vec::with_capacity(up_to + 1);
    let mut powers: Vec<Rational> = vec![Rational::one(); measure.len()];
    for j in 0..=up_to {
        if j > 0 {
            for (pw, pt) in powers.iter_mut().zip(measure.support()) {
                *pw *= pt;
            }
        }
        c.push(
            powers
                .iter()
                .zip(measure.masses())
                .map(|(pw, m)| pw * m)
                .sum(),
        );
    }
    MomentSequence {
        interval_end: measure.interval_end.clone(),
        c,
    }
}

/// Plain Hankel determinant `|(m_{i+j})_{i,j=0..=order}|` of a raw moment
/// slice; `order = -1` gives 1. Shared with the identity engine, which feeds
/// it the moment slices of modified (non-probability) measures.
pub(crate) fn plain_hankel(m: &[Rational], order: i64) -> Rational {
    if order < 0 {
        return Rational::one();
    }
    let k = order as usize;
    RationalMatrix::from_fn(k + 1, k + 1, |i, j| m[i + j].clone())
        .determinant()
        .expect("square by construction")
}

/// Determinant of the Hankel matrix bordered with the row `(1, x, ..., x^order)`.
/// Its square over the two neighbouring plain Hankel determinants is the
/// squared orthonormal polynomial of the moment slice.
pub(crate) fn bordered_hankel(m: &[Rational], order: usize, x: &Rational) -> Rational {
    let k = order;
    let mut powers = Vec::with_capacity(k + 1);
    let mut pw = Rational::one();
    for _ in 0..=k {
        powers.push(pw.clone());
        pw *= x;
    }
    RationalMatrix::from_fn(k + 1, k + 1, |i, j| {
        if i < k {
            m[i + j].clone()
        } else {
            powers[j].clone()
        }
    })
    .determinant()
    .expect("square by construction")
}

/// Lower Hankel determinant of the given order; orders -1 and 0 are 1 by
/// convention. Even order `2l` uses `|(c_{i+j})|`, odd order `2l+1` uses
/// `|(c_{i+j+1})|`.
pub fn hankel_lower(ms: &MomentSequence, order: i64) -> Result<Rational, MomentError> {
    if order < -1 {
        return Err(MomentError::OrderOutOfRange(order));
    }
    if order <= 0 {
        return Ok(Rational::one());
    }
    ms.require(order as usize)?;
    let shift = if order % 2 == 0 { 0 } else { 1 };
    let l = ((order as usize) - shift) / 2;
    Ok(
        RationalMatrix::from_fn(l + 1, l + 1, |i, j| ms.c[i + j + shift].clone())
            .determinant()
            .expect("square by construction"),
    )
}

/// Upper Hankel determinant of the given order, mixing moments with the
/// interval endpoint `R`; orders -1 and 0 are 1 by convention. Even order
/// `2l` uses `|(R c_{i+j-1} - c_{i+j})_{i,j=1..l}|`, odd order `2l+1` uses
/// `|(R c_{i+j} - c_{i+j+1})_{i,j=0..l}|`.
pub fn hankel_upper(ms: &MomentSequence, order: i64) -> Result<Rational, MomentError> {
    if order < -1 {
        return Err(MomentError::OrderOutOfRange(order));
    }
    if order <= 0 {
        return Ok(Rational::one());
    }
    ms.require(order as usize)?;
    let r = &ms.interval_end;
    if order % 2 == 0 {
        let l = (order as usize) / 2;
        Ok(
            RationalMatrix::from_fn(l, l, |i, j| r * &ms.c[i + j + 1] - &ms.c[i + j + 2])
                .determinant()
                .expect("square by construction"),
        )
    } else {
        let l = ((order as usize) - 1) / 2;
        Ok(
            RationalMatrix::from_fn(l + 1, l + 1, |i, j| r * &ms.c[i + j] - &ms.c[i + j + 1])
                .determinant()
                .expect("square by construction"),
        )
    }
}

/// Extreme admissible values `(c_plus, c_minus)` of the order-`ell` moment
/// given the lower ones: `c+ = c + Dupper_ell / Dupper_(ell-2)` and
/// `c- = c - Dlower_ell / Dlower_(ell-2)`.
///
/// Interiority of `(c_1, ..., c_(ell-1))` is checked as strict positivity of
/// every lower-order Hankel determinant.
pub fn c_plus_minus(ms: &MomentSequence, ell: u32) -> Result<(Rational, Rational), MomentError> {
    if ell == 0 {
        return Err(MomentError::IndexOutOfRange("ell must be >= 1".into()));
    }
    for j in 1..ell as i64 {
        if !hankel_lower(ms, j)?.is_positive() || !hankel_upper(ms, j)?.is_positive() {
            return Err(MomentError::BoundaryPoint);
        }
    }
    let c = ms.moment(ell as usize)?.clone();
    let du2 = hankel_upper(ms, ell as i64 - 2)?;
    let dl2 = hankel_lower(ms, ell as i64 - 2)?;
    if du2.is_zero() || dl2.is_zero() {
        return Err(MomentError::ZeroDivisor);
    }
    let plus = &c + hankel_upper(ms, ell as i64)? / du2;
    let minus = &c - hankel_lower(ms, ell as i64)? / dl2;
    Ok((plus, minus))
}

/// Modified determinants `(Dlower_plus, Dupper_minus)` of order `j`: the
/// lower/upper Hankel determinants recomputed with the top moment replaced by
/// its extreme admissible value (`c+` in the lower family, `c-` in the upper).
///
/// Expanding that replacement along the corner entry gives
/// `Dlower_plus_j = Dlower_j + (Dlower_(j-2)/Dupper_(j-2)) Dupper_j` and
/// `Dupper_minus_j = Dupper_j + (Dupper_(j-2)/Dlower_(j-2)) Dlower_j`
/// (the corner carries the top moment with coefficient -1 in the upper
/// family, so both corrections enter with a plus sign).
pub fn modified_dets(ms: &MomentSequence, j: u32) -> Result<(Rational, Rational), MomentError> {
    if j == 0 {
        return Err(MomentError::IndexOutOfRange("j must be >= 1".into()));
    }
    let dl2 = hankel_lower(ms, j as i64 - 2)?;
    let du2 = hankel_upper(ms, j as i64 - 2)?;
    if dl2.is_zero() || du2.is_zero() {
        return Err(MomentError::ZeroDivisor);
    }
    let dl = hankel_lower(ms, j as i64)?;
    let du = hankel_upper(ms, j as i64)?;
    let lower_plus = &dl + (&dl2 / &du2) * &du;
    let upper_minus = &du + (&du2 / &dl2) * &dl;
    Ok((lower_plus, upper_minus))
}

/// The probability measure of the Hahn weight on `{0, ..., N} ⊂ [0, N]`.
pub fn hahn_measure(params: &HahnParams) -> Result<DiscreteMeasure, MomentError> {
    let atoms = (0..=params.n)
        .map(|x| Ok((int(x as i64), weight_hahn(x, params)?)))
        .collect::<Result<Vec<_>, PolyError>>()?;
    DiscreteMeasure::new(atoms, int(params.n as i64))
}

/// The binomial measure on `{0, ..., N} ⊂ [0, N]`.
pub fn krawtchouk_measure(params: &KrawtchoukParams) -> Result<DiscreteMeasure, MomentError> {
    let atoms = (0..=params.n)
        .map(|x| Ok((int(x as i64), weight_krawtchouk(x, params)?)))
        .collect::<Result<Vec<_>, PolyError>>()?;
    DiscreteMeasure::new(atoms, int(params.n as i64))
}

/// The spectral measure of the dual Hahn family: mass
/// `pi_x(alpha, beta, N) rho(0)` at the node `lambda_x = x(x+alpha+beta+1)`,
/// on the interval `[0, N(N+alpha+beta+1)]`.
pub fn dual_measure(params: &HahnParams) -> Result<DiscreteMeasure, MomentError> {
    if params.regime != Regime::Classical {
        return Err(MomentError::Poly(PolyError::ClassicalOnly));
    }
    let rho0 = weight_hahn(0, params)?;
    let atoms = (0..=params.n)
        .map(|x| {
            let node = int(x as i64) * (int(x as i64 + 1) + params.s());
            Ok((node, crate::polys::norm_const_pi(x, params)? * &rho0))
        })
        .collect::<Result<Vec<_>, PolyError>>()?;
    let end = int(params.n as i64) * (int(params.n as i64 + 1) + params.s());
    DiscreteMeasure::new(atoms, end)
}

/// The five closed-form determinant ratios of the Hahn moment sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HahnRatioKind {
    /// `Dupper_2n / Dlower_2n` in closed form; valid for `0 <= n <= N`.
    EvenUpperOverLower,
    /// One-step recursion factor for [`HahnRatioKind::EvenUpperOverLower`]
    /// (base value 1 at n = 0); valid for `1 <= n <= N`.
    EvenUpperOverLowerStep,
    /// `Dlower_(2n-1) / Dupper_(2n-1)`; valid for `0 <= n <= N`.
    OddLowerOverUpper,
    /// `Dlower_2n / Dlower_plus_2n`; valid for `1 <= n <= N`.
    EvenLowerOverModified,
    /// `Dupper_2n / Dlower_plus_2n`; valid for `1 <= n <= N`.
    EvenUpperOverModified,
}

/// Closed-form value of the requested determinant ratio for the Hahn measure.
pub fn hahn_det_ratio(
    kind: HahnRatioKind,
    n: u32,
    params: &HahnParams,
) -> Result<Rational, MomentError> {
    if params.regime != Regime::Classical {
        return Err(MomentError::Poly(PolyError::ClassicalOnly));
    }
    let big_n = params.n;
    let s = params.s();
    let nn = int(big_n as i64);
    let range = |lo: u32| -> Result<(), MomentError> {
        if n < lo || n > big_n {
            Err(MomentError::IndexOutOfRange(format!(
                "n={n} outside {lo}..={big_n}"
            )))
        } else {
            Ok(())
        }
    };
    match kind {
        HahnRatioKind::EvenUpperOverLower => {
            range(0)?;
            Ok(
                pochhammer(&(&nn - int(n as i64)), n) * pochhammer(&(&s + int(2)), n)
                    / (factorial(n) * pochhammer(&(&nn + &s + int(2)), n)),
            )
        }
        HahnRatioKind::EvenUpperOverLowerStep => {
            range(1)?;
            Ok((&nn - int(n as i64)) * (&s + int(n as i64 + 1))
                / (int(n as i64) * (&nn + &s + int(n as i64 + 1))))
        }
        HahnRatioKind::OddLowerOverUpper => {
            range(0)?;
            Ok(pochhammer(&(&params.alpha + int(1)), n) / pochhammer(&(&params.beta + int(1)), n))
        }
        HahnRatioKind::EvenLowerOverModified => {
            range(1)?;
            Ok(
                crate::exact::rat(n as i64, big_n as i64) * (&s + &nn + int(n as i64 + 1))
                    / (&s + int(2 * n as i64 + 1)),
            )
        }
        HahnRatioKind::EvenUpperOverModified => {
            range(1)?;
            Ok(
                pochhammer(&(&s + int(2)), n) * pochhammer(&(&nn - int(n as i64)), n)
                    / (factorial(n - 1)
                        * pochhammer(&(&nn + &s + int(2)), n - 1)
                        * (&s + int(2 * n as i64 + 1))
                        * nn),
            )
        }
    }
}

/// Closed-form gap between consecutive even determinant ratios of the dual
/// Hahn spectral measure:
/// `Dlower_2l/Dupper_2l - Dlower_(2l+2)/Dupper_(2l+2) = (l!/(N-l-1)_(l+1)) (N-2l-2)`.
pub fn dual_even_ratio_gap(l: u32, params: &HahnParams) -> Result<Rational, MomentError> {
    if params.regime != Regime::Classical {
        return Err(MomentError::Poly(PolyError::ClassicalOnly));
    }
    if l + 2 > params.n {
        return Err(MomentError::IndexOutOfRange(format!(
            "l={l} must satisfy l <= N-2"
        )));
    }
    let big_n = params.n as i64;
    Ok(
        factorial(l) / pochhammer(&int(big_n - l as i64 - 1), l + 1)
            * int(big_n - 2 * l as i64 - 2),
    )
}

/// Closed-form gap between consecutive odd determinant ratios of the dual
/// Hahn spectral measure:
/// `Dlower_(2l-1)/Dupper_(2l-1) - Dlower_(2l+1)/Dupper_(2l+1)
///  = ((alpha+1)_l/(N+beta-l)_(l+1)) (N-1+beta-alpha-2l)`.
pub fn dual_odd_ratio_gap(l: u32, params: &HahnParams) -> Result<Rational, MomentError> {
    if params.regime != Regime::Classical {
        return Err(MomentError::Poly(PolyError::ClassicalOnly));
    }
    if l + 1 > params.n {
        return Err(MomentError::IndexOutOfRange(format!(
            "l={l} must satisfy l <= N-1"
        )));
    }
    let big_n = params.n as i64;
    Ok(pochhammer(&(&params.alpha + int(1)), l)
        / pochhammer(&(int(big_n) + &params.beta - int(l as i64)), l + 1)
        * (int(big_n - 1 - 2 * l as i64) + &params.beta - &params.alpha))
}

/// Squared prefactor `((alpha+1)_(n+1)/(N+beta-n)_(n+1))^2` that multiplies
/// the squared top dual Hahn polynomial on the right side of the dual
/// sum-of-squares identity.
pub fn dual_top_prefactor_sq(n: u32, params: &HahnParams) -> Result<Rational, MomentError> {
    if params.regime != Regime::Classical {
        return Err(MomentError::Poly(PolyError::ClassicalOnly));
    }
    if n + 1 > params.n {
        return Err(MomentError::IndexOutOfRange(format!(
            "n={n} must satisfy n <= N-1"
        )));
    }
    let f = pochhammer(&(&params.alpha + int(1)), n + 1)
        / pochhammer(
            &(int(params.n as i64) + &params.beta - int(n as i64)),
            n + 1,
        );
    Ok(&f * &f)
}

/// The three dual-measure closed forms bundled: the even ratio gap at `l`,
/// the odd ratio gap at `l`, and the squared top prefactor at `n`.
/// Requires `l <= N-2` and `n <= N-1` so that all three are defined.
pub fn dual_ratio_formulas(
    l: u32,
    n: u32,
    params: &HahnParams,
) -> Result<(Rational, Rational, Rational), MomentError> {
    Ok((
        dual_even_ratio_gap(l, params)?,
        dual_odd_ratio_gap(l, params)?,
        dual_top_prefactor_sq(n, params)?,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn uniform3() -> DiscreteMeasure {
        DiscreteMeasure::new(
            vec![
                (int(0), rat(1, 3)),
                (int(1), rat(1, 3)),
                (int(2), rat(1, 3)),
            ],
            int(2),
        )
        .unwrap()
    }

    fn arcsine_moments(up_to: usize) -> MomentSequence {
        // c_j = C(2j, j) / 4^j on [0, 1]
        let c: Vec<Rational> = (0..=up_to as u32)
            .map(|j| crate::exact::gen_binomial(&int(2 * j as i64), j) * rat(1, 4).pow(j as i32))
            .collect();
        MomentSequence::new(int(1), c).unwrap()
    }

    #[test]
    fn moments_of_basics() {
        let point = DiscreteMeasure::new(vec![(int(0), int(1))], int(3)).unwrap();
        let ms = moments_of(&point, 4);
        assert_eq!(ms.c, vec![int(1), int(0), int(0), int(0), int(0)]);

        let ms = moments_of(&uniform3(), 2);
        assert_eq!(ms.moment(1).unwrap(), &int(1));
        assert_eq!(ms.moment(2).unwrap(), &rat(5, 3));

        let kp = KrawtchoukParams::new(rat(1, 2), 2).unwrap();
        let ms = moments_of(&krawtchouk_measure(&kp).unwrap(), 1);
        assert_eq!(ms.moment(1).unwrap(), &int(1)); // binomial mean Np
    }

    #[test]
    fn measure_validation() {
        assert!(DiscreteMeasure::new(vec![(int(0), rat(1, 2))], int(1)).is_err()); // mass != 1
        assert!(DiscreteMeasure::new(vec![(int(2), int(1))], int(1)).is_err()); // outside [0, 1]
        assert!(
            DiscreteMeasure::new(vec![(int(0), rat(1, 2)), (int(0), rat(1, 2))], int(1)).is_err()
        );
        // atoms in any order come out sorted
        let m =
            DiscreteMeasure::new(vec![(int(1), rat(1, 2)), (int(0), rat(1, 2))], int(1)).unwrap();
        assert_eq!(m.support(), &[int(0), int(1)]);
    }

    #[test]
    fn hankel_conventions() {
        let ms = moments_of(&uniform3(), 4);
        for order in [-1i64, 0] {
            assert_eq!(hankel_lower(&ms, order).unwrap(), int(1));
            assert_eq!(hankel_upper(&ms, order).unwrap(), int(1));
        }
        assert!(hankel_lower(&ms, -2).is_err());
        assert_eq!(hankel_lower(&ms, 2).unwrap(), rat(2, 3));
        assert_eq!(hankel_upper(&ms, 2).unwrap(), rat(1, 3));
        assert!(matches!(
            hankel_lower(&ms, 5),
            Err(MomentError::InsufficientMoments { needed: 5, have: 4 })
        ));
    }

    #[test]
    fn arcsine_anchor() {
        let ms = arcsine_moments(8);
        for l in 0..=3i64 {
            let even = rat(1, 2).pow((l * (2 * l + 1)) as i32);
            assert_eq!(hankel_lower(&ms, 2 * l).unwrap(), even);
            assert_eq!(hankel_upper(&ms, 2 * l).unwrap(), even);
            let odd = rat(1, 2).pow(((l + 1) * (2 * l + 1)) as i32);
            assert_eq!(hankel_lower(&ms, 2 * l + 1).unwrap(), odd);
            assert_eq!(hankel_upper(&ms, 2 * l + 1).unwrap(), odd);
        }
    }

    #[test]
    fn principal_representation_endpoints() {
        // first moment ranges over the full interval
        let ms = moments_of(&uniform3(), 2);
        let (plus, minus) = c_plus_minus(&ms, 1).unwrap();
        assert_eq!(plus, int(2));
        assert_eq!(minus, int(0));
        let (plus, minus) = c_plus_minus(&ms, 2).unwrap();
        assert_eq!(plus, int(2));
        assert_eq!(minus, int(1));

        let arc = arcsine_moments(4);
        let (_, minus) = c_plus_minus(&arc, 2).unwrap();
        assert_eq!(minus, rat(1, 4)); // c_1^2: lower representation is a point mass
    }

    #[test]
    fn boundary_measure_rejected() {
        // two-point measure: order-4 lower determinant vanishes
        let two =
            DiscreteMeasure::new(vec![(int(0), rat(1, 2)), (int(1), rat(1, 2))], int(1)).unwrap();
        let ms = moments_of(&two, 5);
        assert_eq!(hankel_lower(&ms, 4).unwrap(), int(0));
        assert!(matches!(
            c_plus_minus(&ms, 5),
            Err(MomentError::BoundaryPoint)
        ));
    }

    #[test]
    fn modified_determinant_values() {
        let arc = arcsine_moments(4);
        let (lower_plus, _) = modified_dets(&arc, 2).unwrap();
        assert_eq!(lower_plus, rat(1, 4));
        let ms = moments_of(&uniform3(), 2);
        let (lower_plus, upper_minus) = modified_dets(&ms, 2).unwrap();
        assert_eq!(lower_plus, int(1));
        assert_eq!(upper_minus, int(1));
    }

    /// The modified determinants must equal the plain determinants recomputed
    /// after actually substituting the extreme top moment.
    #[test]
    fn modified_dets_match_direct_recomputation() {
        let p = HahnParams::classical(rat(1, 2), int(1), 8).unwrap();
        let ms = moments_of(&hahn_measure(&p).unwrap(), 8);
        for j in 1u32..=8 {
            let (plus, minus) = c_plus_minus(&ms, j).unwrap();
            let (lower_plus, upper_minus) = modified_dets(&ms, j).unwrap();
            let with_plus = ms.with_moment(j as usize, plus).unwrap();
            let with_minus = ms.with_moment(j as usize, minus).unwrap();
            assert_eq!(
                hankel_lower(&with_plus, j as i64).unwrap(),
                lower_plus,
                "j={j}"
            );
            assert_eq!(
                hankel_upper(&with_minus, j as i64).unwrap(),
                upper_minus,
                "j={j}"
            );
        }
    }

    #[test]
    fn interior_determinants_positive_and_moment_strictly_inside() {
        let m = DiscreteMeasure::new(
            vec![
                (rat(1, 16), rat(1, 4)),
                (rat(5, 16), rat(1, 4)),
                (rat(11, 16), rat(1, 4)),
                (rat(15, 16), rat(1, 4)),
            ],
            int(1),
        )
        .unwrap();
        let ms = moments_of(&m, 6);
        for j in 1..=6i64 {
            assert!(hankel_lower(&ms, j).unwrap().is_positive(), "lower {j}");
            assert!(hankel_upper(&ms, j).unwrap().is_positive(), "upper {j}");
        }
        for ell in 1..=6u32 {
            let (plus, minus) = c_plus_minus(&ms, ell).unwrap();
            let c = ms.moment(ell as usize).unwrap();
            assert!(minus < *c && *c < plus, "ell={ell}");
        }
    }

    #[test]
    fn hahn_ratio_examples() {
        let p = HahnParams::classical(int(0), int(0), 2).unwrap();
        assert_eq!(
            hahn_det_ratio(HahnRatioKind::EvenUpperOverLower, 1, &p).unwrap(),
            rat(1, 2)
        );
        let p = HahnParams::classical(rat(3, 2), rat(3, 2), 5).unwrap();
        assert_eq!(
            hahn_det_ratio(HahnRatioKind::OddLowerOverUpper, 3, &p).unwrap(),
            int(1)
        );
        // n = 1 modified-ratio closed form: (1/N)(s+N+2)/(s+3)
        let p = HahnParams::classical(rat(1, 2), int(1), 4).unwrap();
        assert_eq!(
            hahn_det_ratio(HahnRatioKind::EvenLowerOverModified, 1, &p).unwrap(),
            rat(1, 4) * (p.s() + int(6)) / (p.s() + int(3))
        );
        assert!(hahn_det_ratio(HahnRatioKind::EvenUpperOverModified, 0, &p).is_err());
    }

    /// All five closed forms against brute-force determinants of the Hahn
    /// measure, and the step recursion against the ratio it generates.
    #[test]
    fn hahn_ratios_match_brute_force() {
        for (a, b) in [(rat(-1, 2), int(0)), (rat(1, 2), int(2)), (int(0), int(0))] {
            for big_n in [2u32, 4, 6] {
                let p = HahnParams::classical(a.clone(), b.clone(), big_n).unwrap();
                let ms = moments_of(&hahn_measure(&p).unwrap(), 2 * big_n as usize);
                let mut running = Rational::one();
                for n in 0..=big_n {
                    let lower = hankel_lower(&ms, 2 * n as i64).unwrap();
                    let upper = hankel_upper(&ms, 2 * n as i64).unwrap();
                    let ratio = hahn_det_ratio(HahnRatioKind::EvenUpperOverLower, n, &p).unwrap();
                    assert_eq!(&upper / &lower, ratio, "even ratio n={n}");
                    if n >= 1 {
                        running *=
                            hahn_det_ratio(HahnRatioKind::EvenUpperOverLowerStep, n, &p).unwrap();
                        assert_eq!(running, &upper / &lower, "step recursion n={n}");
                        let (lower_plus, _) = modified_dets(&ms, 2 * n).unwrap();
                        assert_eq!(
                            &lower / &lower_plus,
                            hahn_det_ratio(HahnRatioKind::EvenLowerOverModified, n, &p).unwrap(),
                            "lower/modified n={n}"
                        );
                        assert_eq!(
                            &upper / &lower_plus,
                            hahn_det_ratio(HahnRatioKind::EvenUpperOverModified, n, &p).unwrap(),
                            "upper/modified n={n}"
                        );
                    }
                    let lo = hankel_lower(&ms, 2 * n as i64 - 1).unwrap();
                    let uo = hankel_upper(&ms, 2 * n as i64 - 1).unwrap();
                    assert_eq!(
                        lo / uo,
                        hahn_det_ratio(HahnRatioKind::OddLowerOverUpper, n, &p).unwrap(),
                        "odd ratio n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn dual_measure_shape() {
        let p = HahnParams::classical(int(0), int(0), 2).unwrap();
        let m = dual_measure(&p).unwrap();
        assert_eq!(m.support(), &[int(0), int(2), int(6)]);
        assert_eq!(m.masses(), &[rat(1, 3), rat(1, 2), rat(1, 6)]);
        assert_eq!(m.interval_end(), &int(6));
        // first atom's mass is rho(0) itself (unit normalization constant)
        assert_eq!(m.masses()[0], weight_hahn(0, &p).unwrap());
    }

    #[test]
    fn dual_ratio_gap_edge_cases() {
        // even gap vanishes when N = 2l + 2
        let p = HahnParams::classical(rat(1, 2), rat(1, 2), 6).unwrap();
        assert_eq!(dual_even_ratio_gap(2, &p).unwrap(), int(0));
        // odd gap at l = 0 with alpha = beta: (N-1)/(N+beta)
        let p = HahnParams::classical(rat(1, 3), rat(1, 3), 5).unwrap();
        assert_eq!(
            dual_odd_ratio_gap(0, &p).unwrap(),
            int(4) / (int(5) + rat(1, 3))
        );
        assert!(dual_even_ratio_gap(5, &p).is_err());
    }

    /// The three dual closed forms against brute-force Hankel determinants of
    /// the spectral measure (small grid; the acceptance suite runs the full one).
    #[test]
    fn dual_ratios_match_brute_force() {
        for (a, b) in [(int(0), int(0)), (rat(1, 2), int(1))] {
            for big_n in [2u32, 4] {
                let p = HahnParams::classical(a.clone(), b.clone(), big_n).unwrap();
                let ms = moments_of(&dual_measure(&p).unwrap(), 2 * big_n as usize + 4);
                let ratio = |order: i64| {
                    hankel_lower(&ms, order).unwrap() / hankel_upper(&ms, order).unwrap()
                };
                for l in 0..=big_n - 2 {
                    assert_eq!(
                        ratio(2 * l as i64) - ratio(2 * l as i64 + 2),
                        dual_even_ratio_gap(l, &p).unwrap(),
                        "even gap l={l}"
                    );
                }
                for l in 0..=big_n - 1 {
                    assert_eq!(
                        ratio(2 * l as i64 - 1) - ratio(2 * l as i64 + 1),
                        dual_odd_ratio_gap(l, &p).unwrap(),
                        "odd gap l={l}"
                    );
                }
                for n in 0..=big_n - 2 {
                    let (_, upper_minus) = modified_dets(&ms, 2 * n + 2).unwrap();
                    let det_ratio = hankel_lower(&ms, 2 * n as i64 + 1).unwrap()
                        * hankel_lower(&ms, 2 * n as i64 + 2).unwrap()
                        / (hankel_upper(&ms, 2 * n as i64 + 1).unwrap() * upper_minus);
                    let mass_ratio = weight_hahn(n + 1, &p).unwrap() / weight_hahn(0, &p).unwrap();
                    assert_eq!(
                        det_ratio * mass_ratio,
                        dual_top_prefactor_sq(n, &p).unwrap(),
                        "top prefactor n={n}"
                    );
                }
            }
        }
    }
}
