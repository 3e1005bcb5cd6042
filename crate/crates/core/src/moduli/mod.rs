//! Poincaré polynomials of `M_{0,n}`, `M_{0,n}^delta` and `Mbar_{0,n}`.
//!
//! Every public function takes the number of marked points `n` of the space
//! it describes, never the shifted index of a generating-series coefficient.
//! The generating series are
//!
//! ```text
//! f(x)       = x - sum_{n>=2} e(M_{0,n+1})(q) x^n
//! f_delta(x) = x + sum_{n>=2} e(M_{0,n+1}^delta)(q) x^n
//! ```
//!
//! and are mutually inverse under composition.

mod betti;
mod verify;

pub use betti::BettiTable;
pub use verify::{
    check_exponential_pair, check_ordinary_pair, compact_egf_numerators, open_egf_numerators,
    verify_inversion, IdentityCheck, InversionReport,
};

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};

use crate::combinatorics::{count_p, count_t, partitions, Partition};
use crate::error::{Error, Result};
use crate::polynomial::Polynomial;
use crate::ring::{sign, Ring};
use crate::series::TruncatedSeries;
use crate::{IntPoly, IntSeries};

/// How to compute `e(M_{0,n}^delta)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    /// Sum over dissection types of the polygon, weighted by `P(lambda)`.
    Stratification,
    /// Coefficient of the compositional inverse of `f`.
    Inversion,
    /// Quadratic/cubic recurrence from the differential equation of `f`.
    Recurrence,
}

impl Method {
    pub const ALL: [Method; 3] = [
        Method::Stratification,
        Method::Inversion,
        Method::Recurrence,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Stratification => "stratification",
            Method::Inversion => "inversion",
            Method::Recurrence => "recurrence",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| format!("unknown method {s:?}"))
    }
}

/// How to compute the middle Betti numbers `dim H^{n-3}(M_{0,n}^delta)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MiddleMethod {
    /// The `q = 0` specialization of the recurrence.
    Recurrence,
    /// `(-1)^(n-3) e(M_{0,n}^delta)(0)` from the stratification sum.
    QZero,
}

fn require_points(n: usize, min: usize) -> Result<()> {
    if n < min {
        return Err(Error::OutOfRange {
            what: "number of marked points",
            min,
            got: n,
        });
    }
    Ok(())
}

/// `e(M_{0,n})(q) = prod_{i=2}^{n-2} (q - i)`.
pub fn euler_open(n: usize) -> Result<IntPoly> {
    require_points(n, 3)?;
    Ok(Polynomial::from_root_range(2, n as i64 - 2))
}

/// `sum_{lambda |- n-2} weight(lambda) prod_i e(M_{0,i+2})^lambda_i`.
fn stratification_sum(n: usize, weight: impl Fn(&Partition) -> Result<BigInt>) -> Result<IntPoly> {
    require_points(n, 3)?;
    let open: Vec<IntPoly> = (0..=n)
        .map(|m| euler_open(m.max(3)))
        .collect::<Result<_>>()?;
    let mut total = IntPoly::zero();
    for lambda in partitions(n - 2) {
        let stratum = lambda
            .multiplicities()
            .into_iter()
            .fold(IntPoly::one(), |acc, (part, mult)| {
                (0..mult).fold(acc, |acc, _| acc * &open[part + 2])
            });
        total = total + stratum.scale(&weight(&lambda)?);
    }
    Ok(total)
}

/// The ordinary series `f(x) = x - sum_{m>=2} e(M_{0,m+1}) x^m` to `x^order`.
pub fn open_series(order: usize) -> Result<IntSeries> {
    TruncatedSeries::with_unit_linear_term(order, |m| -euler_open(m + 1).expect("m + 1 >= 3"))
}

/// `f_delta(x) = x + sum_{m>=2} e(M_{0,m+1}^delta) x^m` to `x^order`, using
/// the stratification sum for the coefficients.
pub fn delta_series(order: usize) -> Result<IntSeries> {
    let mut coeffs = vec![IntPoly::one()];
    for m in 2..=order {
        coeffs.push(euler_delta(m + 1, Method::Stratification)?);
    }
    TruncatedSeries::from_coefficients(coeffs)
}

/// `e(M_{0,n}^delta)(q)` by the chosen method.
pub fn euler_delta(n: usize, method: Method) -> Result<IntPoly> {
    require_points(n, 3)?;
    match method {
        Method::Stratification => stratification_sum(n, count_p),
        Method::Inversion => {
            let inverse = open_series(n - 1)?.revert()?;
            Ok(inverse.coeff(n - 1).clone())
        }
        Method::Recurrence => Ok(recurrence_values(n - 1).pop().expect("nonempty")),
    }
}

/// `e(M_{0,n}^delta)` for every `3 <= n <= n_max`, sharing work between
/// rows where the method allows it.
pub fn euler_delta_all(n_max: usize, method: Method) -> Result<Vec<IntPoly>> {
    require_points(n_max, 3)?;
    match method {
        Method::Stratification => (3..=n_max)
            .map(|n| stratification_sum(n, count_p))
            .collect(),
        Method::Inversion => {
            let inverse = open_series(n_max - 1)?.revert()?;
            Ok(inverse.coefficients()[1..].to_vec())
        }
        Method::Recurrence => Ok(recurrence_values(n_max - 1).split_off(2)),
    }
}

/// Solves the recurrence
///
/// ```text
/// a_m = -sum_{k+l=m+1, k,l>=2} k a_k a_l + sum_{k+l=m} (qk - 1) a_k a_l
///       - q sum_{k+l+j=m+1} k a_k a_l a_j
/// ```
///
/// with `a_0 = 0`, `a_1 = 1`, and returns `(-1)^(m+1) a_m` for `0 <= m <= m_max`;
/// the entry at `m` is then `e(M_{0,m+1}^delta)` for `m >= 2`.
fn recurrence_values(m_max: usize) -> Vec<IntPoly> {
    let q = IntPoly::q();
    let mut a = vec![IntPoly::zero(), IntPoly::one()];
    // squares[s] = sum_{l+j=s} a_l a_j
    let mut squares = vec![IntPoly::zero(), IntPoly::zero()];
    for m in 2..=m_max {
        squares.push(convolution(&a, m, |_| BigInt::one()));

        let mut value = -convolution_from(&a, m + 1, 2, BigInt::from);
        value = value + &q * &convolution(&a, m, BigInt::from) - squares[m].clone();

        let mut cubic = IntPoly::zero();
        for k in 1..m {
            if !a[k].is_zero() && !squares[m + 1 - k].is_zero() {
                cubic = cubic + (&a[k] * &squares[m + 1 - k]).scale(&BigInt::from(k));
            }
        }
        value = value - &q * &cubic;
        a.push(value);
    }
    a.into_iter()
        .enumerate()
        .map(|(m, v)| if m % 2 == 0 { -v } else { v })
        .collect()
}

/// `sum_{k+l=total, k,l>=1} weight(k) a_k a_l`.
fn convolution(a: &[IntPoly], total: usize, weight: impl Fn(usize) -> BigInt) -> IntPoly {
    convolution_from(a, total, 1, weight)
}

/// As [`convolution`] with both indices at least `min`.
fn convolution_from(
    a: &[IntPoly],
    total: usize,
    min: usize,
    weight: impl Fn(usize) -> BigInt,
) -> IntPoly {
    let mut acc = IntPoly::zero();
    for k in min..=total.saturating_sub(min) {
        let l = total - k;
        if !a[k].is_zero() && !a[l].is_zero() {
            acc = acc + (&a[k] * &a[l]).scale(&weight(k));
        }
    }
    acc
}

/// `e(Mbar_{0,n})(q)`: the stratification sum with `P(lambda)` replaced by the
/// dual-graph count `T(lambda)`.
pub fn euler_compact(n: usize) -> Result<IntPoly> {
    stratification_sum(n, count_t)
}

/// The Betti numbers `a_{n,i}`, `0 <= i <= n-3`, read off a Poincaré
/// polynomial of a pure space of dimension `n - 3`:
/// `a_{n,i} = (-1)^i [q^{n-3-i}] e`.
pub fn betti_row(n: usize, poly: &IntPoly) -> Result<Vec<BigInt>> {
    require_points(n, 3)?;
    let dim = n - 3;
    if poly.degree() != Some(dim) {
        return Err(Error::WrongDegree {
            n,
            degree: poly.degree(),
            expected: dim,
        });
    }
    (0..=dim)
        .map(|i| {
            let value = poly.coeff(dim - i) * sign::<BigInt>(i % 2 == 1);
            if value < BigInt::zero() {
                return Err(Error::NegativeBetti {
                    n,
                    i,
                    value: value.to_string(),
                });
            }
            Ok(value)
        })
        .collect()
}

/// Betti table of `M_{0,n}^delta` for `3 <= n <= n_max` from the
/// stratification sum.
pub fn betti_table(n_max: usize) -> Result<BettiTable> {
    betti_table_with(n_max, Method::Stratification)
}

pub fn betti_table_with(n_max: usize, method: Method) -> Result<BettiTable> {
    let polys = euler_delta_all(n_max, method)?;
    let mut table = BettiTable::default();
    for (n, poly) in (3..).zip(&polys) {
        table.insert_row(n, betti_row(n, poly)?)?;
    }
    Ok(table)
}

/// One row of [`closed_formula_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedFormulaRow {
    pub n: usize,
    pub a2: BigInt,
    pub expected_a2: BigInt,
    pub a3: BigInt,
    pub expected_a3: BigInt,
}

impl ClosedFormulaRow {
    pub fn passed(&self) -> bool {
        self.a2 == self.expected_a2 && self.a3 == self.expected_a3
    }
}

/// Compares `a_{n,2}` with `C(n-1, 4)` and `a_{n,3}` with `4 C(n, 6)` for
/// `5 <= n <= n_max`. Entries past the diagonal count as zero.
pub fn closed_formula_check(n_max: usize) -> Result<Vec<ClosedFormulaRow>> {
    require_points(n_max, 5)?;
    let table = betti_table(n_max)?;
    Ok((5..=n_max)
        .map(|n| {
            let entry = |i| table.get(n, i).cloned().unwrap_or_default();
            let big = |k: usize| BigInt::from(k);
            ClosedFormulaRow {
                n,
                a2: entry(2),
                expected_a2: binomial(big(n - 1), big(4)),
                a3: entry(3),
                expected_a3: binomial(big(n), big(6)) * 4,
            }
        })
        .collect())
}

/// `b_m` for `0 <= m <= m_max` from
/// `b_m = sum_{k+l=m+1, k,l>=2} k b_k b_l + sum_{k+l=m} b_k b_l`,
/// `b_0 = 0`, `b_1 = -1`. For `m >= 2`, `b_m = dim H^{m-2}(M_{0,m+1}^delta)`.
pub fn middle_recurrence(m_max: usize) -> Vec<BigInt> {
    let mut b = vec![BigInt::zero(), -BigInt::one()];
    for m in 2..=m_max {
        let mut value = BigInt::zero();
        for k in 2..m {
            value += BigInt::from(k) * &b[k] * &b[m + 1 - k];
        }
        for k in 1..m {
            value += &b[k] * &b[m - k];
        }
        b.push(value);
    }
    b.truncate(m_max + 1);
    b
}

fn middle_by(n_max: usize, method: MiddleMethod) -> Result<Vec<BigInt>> {
    match method {
        MiddleMethod::Recurrence => Ok(middle_recurrence(n_max - 1).split_off(3)),
        MiddleMethod::QZero => {
            let polys = euler_delta_all(n_max, Method::Stratification)?;
            Ok((3..=n_max)
                .zip(polys)
                .skip(1)
                .map(|(n, p)| p.eval(&BigInt::zero()) * sign::<BigInt>((n - 3) % 2 == 1))
                .collect())
        }
    }
}

/// `dim H^{n-3}(M_{0,n}^delta)` for `4 <= n <= n_max` by `method`, checked
/// against the other method.
pub fn middle_betti(n_max: usize, method: MiddleMethod) -> Result<Vec<BigInt>> {
    require_points(n_max, 4)?;
    let primary = middle_by(n_max, method)?;
    let other = match method {
        MiddleMethod::Recurrence => MiddleMethod::QZero,
        MiddleMethod::QZero => MiddleMethod::Recurrence,
    };
    let check = middle_by(n_max, other)?;
    if let Some((idx, (x, y))) = primary
        .iter()
        .zip(&check)
        .enumerate()
        .find(|(_, (x, y))| x != y)
    {
        return Err(Error::MethodDisagreement {
            n: idx + 4,
            detail: format!("{method:?} gives {x}, {other:?} gives {y}"),
        });
    }
    Ok(primary)
}

/// Computes `e(M_{0,n}^delta)` by every method for `3 <= n <= n_max` and
/// reports the first `n` where they differ.
pub fn cross_check_methods(n_max: usize) -> Result<()> {
    if n_max < 3 {
        return Ok(());
    }
    let [strat, inv, rec] = Method::ALL.map(|m| euler_delta_all(n_max, m));
    let (strat, inv, rec) = (strat?, inv?, rec?);
    for (idx, ((s, i), r)) in strat.iter().zip(&inv).zip(&rec).enumerate() {
        if s != i || s != r {
            return Err(Error::MethodDisagreement {
                n: idx + 3,
                detail: format!("stratification {s}, inversion {i}, recurrence {r}"),
            });
        }
    }
    Ok(())
}
