//! Truncated power series without constant term.
//!
//! A [`TruncatedSeries`] of order `N` stores the coefficients of `x^1`
//! through `x^N` over some coefficient [`Ring`]. The constant term is zero
//! by construction, so composition is always defined. Binary operations
//! require equal orders; nothing is truncated silently.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::combinatorics::{count_p, factorial, partitions};
use crate::error::{Error, Result};
use crate::ring::Ring;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncatedSeries<C> {
    // coeffs[k] is the coefficient of x^(k+1)
    coeffs: Vec<C>,
}

/// Which way [`TruncatedSeries::egf_scale`] converts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EgfDirection {
    /// Ordinary coefficients `c_n` to exponential numerators `n! c_n`.
    ToEgf,
    /// Exponential numerators `a_n` to ordinary coefficients `a_n / n!`.
    FromEgf,
}

impl<C: Ring> TruncatedSeries<C> {
    /// `coeffs[k]` becomes the coefficient of `x^(k+1)`; the order is the
    /// length of the list.
    pub fn from_coefficients(coeffs: Vec<C>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::EmptySeries);
        }
        Ok(Self { coeffs })
    }

    /// Builds `x + sum_{n>=2} tail(n) x^n` up to `x^order`.
    pub fn with_unit_linear_term(order: usize, mut tail: impl FnMut(usize) -> C) -> Result<Self> {
        if order == 0 {
            return Err(Error::EmptySeries);
        }
        let coeffs = (1..=order)
            .map(|n| if n == 1 { C::one() } else { tail(n) })
            .collect();
        Ok(Self { coeffs })
    }

    /// The series `x`.
    pub fn identity(order: usize) -> Result<Self> {
        Self::with_unit_linear_term(order, |_| C::zero())
    }

    pub fn zero(order: usize) -> Result<Self> {
        Self::from_coefficients(vec![C::zero(); order])
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    /// Coefficient of `x^n` for `1 <= n <= order`.
    ///
    /// # Panics
    /// If `n` is zero or exceeds the order.
    pub fn coeff(&self, n: usize) -> &C {
        assert!(
            n >= 1 && n <= self.order(),
            "x^{n} is outside 1..={}",
            self.order()
        );
        &self.coeffs[n - 1]
    }

    /// Coefficients of `x^1 ..= x^N`.
    pub fn coefficients(&self) -> &[C] {
        &self.coeffs
    }

    pub fn is_identity(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    pub fn map<D: Ring>(&self, f: impl FnMut(&C) -> D) -> TruncatedSeries<D> {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    /// Coefficient-wise difference.
    pub fn difference(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(Self {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        })
    }

    /// `self - x`, the residual of an identity that should equal `x`.
    pub fn residual_from_identity(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs[0] = coeffs[0].clone() - C::one();
        Self { coeffs }
    }

    /// `self(inner(x))` up to the common order.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        self.check_order(inner)?;
        let order = self.order();
        let mut result = vec![C::zero(); order];
        // power[m-1] holds the coefficient of x^m in inner^k
        let mut power = inner.coeffs.clone();
        for k in 1..=order {
            let outer_k = &self.coeffs[k - 1];
            if !outer_k.is_zero() {
                for m in k..=order {
                    if !power[m - 1].is_zero() {
                        result[m - 1] =
                            result[m - 1].clone() + outer_k.clone() * power[m - 1].clone();
                    }
                }
            }
            if k < order {
                power = truncated_product(&power, &inner.coeffs, k + 1);
            }
        }
        Ok(Self { coeffs: result })
    }

    /// Compositional inverse: the unique `t` with `self(t(x)) = t(self(x)) = x`.
    ///
    /// Solves for one coefficient at a time. Since `self` starts with `x`,
    /// the `x^n` coefficient of `self(t(x))` is `t_n` plus terms that only
    /// involve `t_1 .. t_(n-1)`.
    pub fn revert(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::NotNormalized);
        }
        let order = self.order();
        let mut t = vec![C::zero(); order];
        t[0] = C::one();
        // powers[k][m] = coefficient of x^m in t^k, filled column by column
        let mut powers = vec![vec![C::zero(); order + 1]; order + 1];
        powers[1][1] = C::one();
        for n in 2..=order {
            let mut rest = C::zero();
            for k in 2..=n {
                let mut acc = C::zero();
                for j in 1..=(n + 1 - k) {
                    let lower = &powers[k - 1][n - j];
                    if !t[j - 1].is_zero() && !lower.is_zero() {
                        acc = acc + t[j - 1].clone() * lower.clone();
                    }
                }
                let s_k = &self.coeffs[k - 1];
                if !s_k.is_zero() && !acc.is_zero() {
                    rest = rest + s_k.clone() * acc.clone();
                }
                powers[k][n] = acc;
            }
            t[n - 1] = -rest;
            powers[1][n] = t[n - 1].clone();
        }
        Ok(Self { coeffs: t })
    }

    /// Compositional inverse via the partition expansion of Lagrange's
    /// formula. Writing `self = x - sum u_i x^i`, the inverse is
    /// `x + sum v_n x^n` with
    /// `v_n = sum_{lambda |- n-1} P(lambda) prod_i u_(i+1)^(lambda_i)`,
    /// where `P(lambda)` counts dissections of an `(n+1)`-gon of type lambda.
    pub fn revert_lagrange(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::NotNormalized);
        }
        let order = self.order();
        let u: Vec<C> = self.coeffs.iter().map(|c| -c.clone()).collect();
        let mut v = vec![C::zero(); order];
        v[0] = C::one();
        for n in 2..=order {
            let mut total = C::zero();
            for lambda in partitions(n - 1) {
                let mut term = C::one();
                for (part, mult) in lambda.multiplicities() {
                    let u_next = &u[part];
                    for _ in 0..mult {
                        term = term * u_next.clone();
                    }
                }
                if !term.is_zero() {
                    total = total + term.scale(&count_p(&lambda)?);
                }
            }
            v[n - 1] = total;
        }
        Ok(Self { coeffs: v })
    }

    /// Converts between ordinary coefficients and exponential numerators.
    ///
    /// An exponential series `sum a_n x^n / n!` is stored as its numerator
    /// list `a_n`. `FromEgf` fails unless every `a_n` is divisible by `n!`.
    pub fn egf_scale(&self, direction: EgfDirection) -> Result<Self> {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| {
                let n_fact = factorial(k + 1);
                match direction {
                    EgfDirection::ToEgf => Ok(c.scale(&n_fact)),
                    EgfDirection::FromEgf => c
                        .div_exact(&n_fact)
                        .ok_or_else(|| Error::inexact(format!("x^{} / {}!", k + 1, k + 1))),
                }
            })
            .collect::<Result<_>>()?;
        Ok(Self { coeffs })
    }

    /// Composition of exponential series given by their numerator lists.
    ///
    /// With `outer = sum a_k x^k/k!` and `inner = sum b_n x^n/n!`, the
    /// numerator of `x^n/n!` in `outer(inner(x))` is
    /// `sum_k a_k [inner^k]_n / k!`, where `[inner^k]_n` is computed with the
    /// binomial convolution and stays integral. Each division by `k!` must be
    /// exact; a remainder is reported as an error.
    pub fn compose_egf(&self, inner: &Self) -> Result<Self> {
        self.check_order(inner)?;
        let order = self.order();
        let binom = binomial_table(order);
        let mut result = vec![C::zero(); order];
        let mut power = inner.coeffs.clone();
        for k in 1..=order {
            let k_fact = factorial(k);
            let outer_k = &self.coeffs[k - 1];
            for m in k..=order {
                let set_partition_sum = power[m - 1].div_exact(&k_fact).ok_or_else(|| {
                    Error::inexact(format!("exponential power {k} at x^{m} divided by {k}!"))
                })?;
                if !outer_k.is_zero() && !set_partition_sum.is_zero() {
                    result[m - 1] = result[m - 1].clone() + outer_k.clone() * set_partition_sum;
                }
            }
            if k < order {
                power = binomial_product(&power, &inner.coeffs, k + 1, &binom);
            }
        }
        Ok(Self { coeffs: result })
    }
}

/// Product of two coefficient lists (index m-1 holds x^m), keeping only
/// degrees `min_degree ..= order`; lower degrees are known to vanish.
fn truncated_product<C: Ring>(a: &[C], b: &[C], min_degree: usize) -> Vec<C> {
    let order = a.len();
    let mut out = vec![C::zero(); order];
    for m in min_degree..=order {
        let mut acc = C::zero();
        for i in 1..m {
            let (x, y) = (&a[i - 1], &b[m - i - 1]);
            if !x.is_zero() && !y.is_zero() {
                acc = acc + x.clone() * y.clone();
            }
        }
        out[m - 1] = acc;
    }
    out
}

/// Like [`truncated_product`] for exponential numerators:
/// `(a * b)_m = sum_i C(m, i) a_i b_(m-i)`.
fn binomial_product<C: Ring>(a: &[C], b: &[C], min_degree: usize, binom: &[Vec<BigInt>]) -> Vec<C> {
    let order = a.len();
    let mut out = vec![C::zero(); order];
    for m in min_degree..=order {
        let mut acc = C::zero();
        for i in 1..m {
            let (x, y) = (&a[i - 1], &b[m - i - 1]);
            if !x.is_zero() && !y.is_zero() {
                acc = acc + (x.clone() * y.clone()).scale(&binom[m][i]);
            }
        }
        out[m - 1] = acc;
    }
    out
}

fn binomial_table(n_max: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let mut row = vec![BigInt::one(); n + 1];
        for k in 1..n {
            row[k] = &rows[n - 1][k - 1] + &rows[n - 1][k];
        }
        rows.push(row);
    }
    rows
}

/// `x + (p_2)*x^2 + ... + O(x^(N+1))`, omitting zero terms.
impl<C: Ring + fmt::Display> fmt::Display for TruncatedSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote_term = false;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if wrote_term {
                f.write_str(" + ")?;
            }
            wrote_term = true;
            let n = k + 1;
            if !c.is_one() {
                write!(f, "({c})*")?;
            }
            f.write_str("x")?;
            if n > 1 {
                write!(f, "^{n}")?;
            }
        }
        if !wrote_term {
            f.write_str("0")?;
        }
        write!(f, " + O(x^{})", self.order() + 1)
    }
}
