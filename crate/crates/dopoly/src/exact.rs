//! Arbitrary-precision rational arithmetic kernel.
//!
//! Everything downstream works over [`Rational`] (a reduced big-integer
//! fraction with positive denominator), so no operation in this crate ever
//! rounds. This module adds the pieces the rest of the crate is built on:
//! rising factorials, generalized binomial coefficients, and exact
//! determinants of dense rational matrices via fraction-free (Bareiss)
//! elimination.
//!
//! The canonical text form of a rational is `"n"` for integers and `"-p/q"`
//! in lowest terms otherwise; [`parse_rational`] and [`format_rational`]
//! round-trip it.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Exact scalar used throughout the crate: a reduced `BigInt` fraction.
pub type Rational = num_rational::BigRational;

/// Errors from the arithmetic kernel.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("cannot parse `{0}` as a rational (expected `n` or `p/q`)")]
    Parse(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },
    #[error("matrix dimensions do not match data length")]
    DimensionMismatch,
}

/// Shorthand for an integer-valued `Rational`.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `n/d`. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses the canonical text form: `"n"` or `"p/q"` (optionally signed).
pub fn parse_rational(s: &str) -> Result<Rational, ExactError> {
    let s = s.trim();
    let bad = || ExactError::Parse(s.to_string());
    match s.split_once('/') {
        None => {
            let n: BigInt = s.parse().map_err(|_| bad())?;
            Ok(Rational::from_integer(n))
        }
        Some((num, den)) => {
            let n: BigInt = num.trim().parse().map_err(|_| bad())?;
            let d: BigInt = den.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(ExactError::ZeroDenominator(s.to_string()));
            }
            Ok(Rational::new(n, d))
        }
    }
}

/// Canonical text form: `"n"` for integers, `"-p/q"` in lowest terms otherwise.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// `k!` as a `Rational`.
pub fn factorial(k: u32) -> Rational {
    let mut acc = BigInt::one();
    for i in 2..=k {
        acc *= i;
    }
    Rational::from_integer(acc)
}

/// Rising factorial `(a)_k = a (a+1) ... (a+k-1)`, with `(a)_0 = 1`.
pub fn pochhammer(a: &Rational, k: u32) -> Rational {
    let mut acc = Rational::one();
    for i in 0..k {
        acc *= a + int(i as i64);
    }
    acc
}

/// Generalized binomial coefficient `C(a, k) = (a-k+1)_k / k!` for rational `a`.
pub fn gen_binomial(a: &Rational, k: u32) -> Rational {
    pochhammer(&(a - int(k as i64) + int(1)), k) / factorial(k)
}

/// Dense rectangular matrix of exact rationals, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RationalMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Rational>) -> Result<Self, ExactError> {
        if data.len() != rows * cols {
            return Err(ExactError::DimensionMismatch);
        }
        Ok(Self { rows, cols, data })
    }

    /// Builds a `rows x cols` matrix from an entry function.
    pub fn from_fn<F: FnMut(usize, usize) -> Rational>(rows: usize, cols: usize, mut f: F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| {
            if i == j {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn mul(&self, other: &Self) -> Result<Self, ExactError> {
        if self.cols != other.rows {
            return Err(ExactError::DimensionMismatch);
        }
        Ok(Self::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = Rational::zero();
            for k in 0..self.cols {
                acc += self.get(i, k) * other.get(k, j);
            }
            acc
        }))
    }

    /// Exact determinant. The 0x0 determinant is 1 (empty product convention).
    ///
    /// Rows are first scaled to integers (tracking the scale), then reduced
    /// by one-step Bareiss elimination, so all intermediate values stay
    /// integral instead of accumulating ever-larger fractions.
    pub fn determinant(&self) -> Result<Rational, ExactError> {
        if self.rows != self.cols {
            return Err(ExactError::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Rational::one());
        }
        // Clear denominators row by row.
        let mut scale = BigInt::one();
        let mut m: Vec<Vec<BigInt>> = Vec::with_capacity(n);
        for i in 0..n {
            let mut lcm = BigInt::one();
            for j in 0..n {
                lcm = lcm.lcm(self.get(i, j).denom());
            }
            m.push(
                (0..n)
                    .map(|j| {
                        let e = self.get(i, j);
                        e.numer() * (&lcm / e.denom())
                    })
                    .collect(),
            );
            scale *= lcm;
        }
        let det = bareiss(&mut m);
        Ok(Rational::new(det, scale))
    }
}

/// One-step Bareiss elimination over integers; consumes the matrix.
fn bareiss(m: &mut [Vec<BigInt>]) -> BigInt {
    let n = m.len();
    let mut sign = 1i8;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                // exact by the Bareiss identity
                m[i][j] = t / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Decimal rendering of an exact rational, correctly rounded (ties away from
/// zero) to `sig` significant digits. Positional notation for moderate
/// exponents, scientific beyond that.
pub fn decimal_string(r: &Rational, sig: u32) -> String {
    assert!(sig >= 1);
    if r.is_zero() {
        return "0".to_string();
    }
    let neg = r.is_negative();
    let a = r.numer().abs();
    let b = r.denom().clone();
    // decimal exponent: 10^e <= a/b < 10^(e+1)
    let mut e = a.to_string().len() as i64 - b.to_string().len() as i64;
    while !ge_pow10(&a, &b, e) {
        e -= 1;
    }
    while ge_pow10(&a, &b, e + 1) {
        e += 1;
    }
    // round a/b * 10^(sig-1-e) to the nearest integer, ties away from zero
    let k = sig as i64 - 1 - e;
    let (num, den) = if k >= 0 {
        (&a * pow10(k as u64), b)
    } else {
        (a, &b * pow10((-k) as u64))
    };
    let mut digits = ((num * 2u8 + &den) / (den * 2u8)).to_string();
    if digits.len() > sig as usize {
        // rounding carried into a new leading digit (e.g. 999.. -> 1000..)
        digits.truncate(sig as usize);
        e += 1;
    }
    let point = e + 1; // digits before the decimal point
    let body = if point > 24 || point < -23 {
        let mut s = digits;
        if sig > 1 {
            s.insert(1, '.');
        }
        format!("{s}e{e}")
    } else if point <= 0 {
        format!("0.{}{}", "0".repeat((-point) as usize), digits)
    } else if (point as usize) >= digits.len() {
        format!("{}{}", digits, "0".repeat(point as usize - digits.len()))
    } else {
        let (head, tail) = digits.split_at(point as usize);
        format!("{head}.{tail}")
    };
    if neg {
        format!("-{body}")
    } else {
        body
    }
}

fn pow10(e: u64) -> BigInt {
    BigInt::from(10u8).pow(e as u32)
}

/// `a/b >= 10^e` for positive `a`, `b`.
fn ge_pow10(a: &BigInt, b: &BigInt, e: i64) -> bool {
    if e >= 0 {
        *a >= b * pow10(e as u64)
    } else {
        a * pow10((-e) as u64) >= *b
    }
}

/// Best-effort f64 view of a rational, for diagnostics only.
pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // fall back through the 17-digit decimal rendering
        decimal_string(r, 17).parse().unwrap_or(f64::NAN)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Cofactor-expansion determinant; the independent oracle for Bareiss.
    pub(crate) fn det_cofactor(m: &RationalMatrix) -> Rational {
        let n = m.rows();
        if n == 0 {
            return Rational::one();
        }
        if n == 1 {
            return m.get(0, 0).clone();
        }
        let mut acc = Rational::zero();
        for j in 0..n {
            if m.get(0, j).is_zero() {
                continue;
            }
            let minor = RationalMatrix::from_fn(n - 1, n - 1, |r, c| {
                m.get(r + 1, if c < j { c } else { c + 1 }).clone()
            });
            let term = m.get(0, j) * det_cofactor(&minor);
            if j % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    #[test]
    fn pochhammer_basics() {
        assert_eq!(pochhammer(&rat(7, 3), 0), int(1));
        assert_eq!(pochhammer(&int(1), 3), int(6));
        assert_eq!(pochhammer(&rat(-1, 2), 2), rat(-1, 4));
    }

    #[test]
    fn gen_binomial_basics() {
        assert_eq!(gen_binomial(&int(4), 2), int(6));
        assert_eq!(gen_binomial(&rat(9, 7), 0), int(1));
        assert_eq!(gen_binomial(&rat(-1, 2), 1), rat(-1, 2));
    }

    #[test]
    fn determinant_small() {
        assert_eq!(
            RationalMatrix::new(0, 0, vec![])
                .unwrap()
                .determinant()
                .unwrap(),
            int(1)
        );
        assert_eq!(RationalMatrix::identity(2).determinant().unwrap(), int(1));
        let m = RationalMatrix::new(2, 2, vec![int(1), int(2), int(3), int(4)]).unwrap();
        assert_eq!(m.determinant().unwrap(), int(-2));
    }

    #[test]
    fn determinant_rejects_non_square() {
        let m = RationalMatrix::new(2, 3, vec![int(0); 6]).unwrap();
        assert_eq!(
            m.determinant(),
            Err(ExactError::NonSquare { rows: 2, cols: 3 })
        );
    }

    #[test]
    fn determinant_hankel_arcsine() {
        // 3x3 Hankel matrix of the arcsine moments 1, 1/2, 3/8, 5/16, 35/128.
        let c = [int(1), rat(1, 2), rat(3, 8), rat(5, 16), rat(35, 128)];
        let m = RationalMatrix::from_fn(3, 3, |i, j| c[i + j].clone());
        let oracle = det_cofactor(&m);
        assert_eq!(oracle, rat(1, 1024));
        assert_eq!(m.determinant().unwrap(), oracle);
    }

    #[test]
    fn determinant_with_zero_pivot() {
        let m = RationalMatrix::new(
            3,
            3,
            vec![
                int(0),
                int(1),
                int(2),
                int(1),
                int(0),
                int(3),
                int(4),
                int(5),
                int(0),
            ],
        )
        .unwrap();
        assert_eq!(m.determinant().unwrap(), det_cofactor(&m));
    }

    #[test]
    fn canonical_text_form() {
        assert_eq!(format_rational(&rat(-10, 15)), "-2/3");
        assert_eq!(format_rational(&int(42)), "42");
        assert_eq!(parse_rational("-2/3").unwrap(), rat(2, -3));
        assert_eq!(parse_rational(" 7 ").unwrap(), int(7));
        assert!(matches!(
            parse_rational("1/0"),
            Err(ExactError::ZeroDenominator(_))
        ));
        assert!(matches!(parse_rational("x"), Err(ExactError::Parse(_))));
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(decimal_string(&rat(-5, 3), 12), "-1.66666666667");
        assert_eq!(decimal_string(&int(1), 12), "1.00000000000");
        assert_eq!(decimal_string(&int(0), 12), "0");
        assert_eq!(decimal_string(&rat(1, 8), 3), "0.125");
        assert_eq!(decimal_string(&rat(999999, 1000), 3), "1000");
        assert_eq!(decimal_string(&rat(1, 1000000), 3), "0.00000100");
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-40i64..40, 1i64..12).prop_map(|(n, d)| rat(n, d))
    }

    proptest! {
        #[test]
        fn pochhammer_addition_law(a in small_rational(), j in 0u32..8, k in 0u32..8) {
            let lhs = pochhammer(&a, j + k);
            let rhs = pochhammer(&a, j) * pochhammer(&(&a + int(j as i64)), k);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn determinant_is_multiplicative(
            a in proptest::collection::vec(small_rational(), 9),
            b in proptest::collection::vec(small_rational(), 9),
        ) {
            let ma = RationalMatrix::new(3, 3, a).unwrap();
            let mb = RationalMatrix::new(3, 3, b).unwrap();
            let prod = ma.mul(&mb).unwrap();
            prop_assert_eq!(
                prod.determinant().unwrap(),
                ma.determinant().unwrap() * mb.determinant().unwrap()
            );
            // and Bareiss agrees with the cofactor oracle
            prop_assert_eq!(ma.determinant().unwrap(), det_cofactor(&ma));
        }

        #[test]
        fn rational_text_round_trip(r in small_rational()) {
            let s = format_rational(&r);
            prop_assert_eq!(parse_rational(&s).unwrap(), r);
        }
    }
}
