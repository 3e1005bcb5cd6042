//! Checks of the two inversion identities.
//!
//! Ordinary: `f(f_delta(x)) = f_delta(f(x)) = x`.
//!
//! Exponential: with
//!
//! ```text
//! g(x)    = x - sum_{n>=2} e(M_{0,n+1})(q^2) x^n / n!
//! gbar(x) = x + sum_{n>=2} P(Mbar_{0,n+1})(q) x^n / n!
//! ```
//!
//! where `P(Mbar)(q) = sum_k dim H^k(Mbar) q^k` is graded by cohomological
//! degree, `gbar(g(x)) = g(gbar(x)) = x`. Since `Mbar_{0,n}` has only even
//! cohomology and `e(Mbar_{0,n})` is palindromic, `P(Mbar_{0,n})(q)` is
//! `e(Mbar_{0,n})(q^2)`. Both series are kept as integer numerator lists
//! and composed with [`TruncatedSeries::compose_egf`].

use std::fmt;

use num_traits::{One, Zero};

use super::{delta_series, euler_compact, euler_open, open_series};
use crate::error::Result;
use crate::series::TruncatedSeries;
use crate::{IntPoly, IntSeries};

/// Outcome of one identity `lhs(x) = x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: String,
    pub order: usize,
    /// `lhs(x) - x`, when it could be computed.
    pub residual: Option<IntSeries>,
    /// Why the composition itself failed (e.g. an inexact division).
    pub error: Option<String>,
}

impl IdentityCheck {
    fn from_result(name: &str, order: usize, composed: Result<IntSeries>) -> Self {
        match composed {
            Ok(series) => Self {
                name: name.to_owned(),
                order,
                residual: Some(series.residual_from_identity()),
                error: None,
            },
            Err(e) => Self {
                name: name.to_owned(),
                order,
                residual: None,
                error: Some(e.to_string()),
            },
        }
    }

    pub fn passed(&self) -> bool {
        self.error.is_none()
            && self
                .residual
                .as_ref()
                .is_some_and(|r| r.coefficients().iter().all(Zero::is_zero))
    }

    /// `(n, coefficient of x^n)` for every nonzero residual coefficient.
    pub fn nonzero_residuals(&self) -> Vec<(usize, IntPoly)> {
        self.residual
            .iter()
            .flat_map(|r| r.coefficients().iter().enumerate())
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k + 1, c.clone()))
            .collect()
    }
}

impl fmt::Display for IdentityCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{status} {} = x (order {})", self.name, self.order)?;
        if let Some(e) = &self.error {
            write!(f, ": {e}")?;
        }
        for (n, c) in self.nonzero_residuals() {
            write!(f, "\n    residual at x^{n}: {c}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct InversionReport {
    pub checks: Vec<IdentityCheck>,
}

impl InversionReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(IdentityCheck::passed)
    }
}

/// Numerators of `g`: `1` at `x^1`, then `-e(M_{0,n+1})(q^2)`.
pub fn open_egf_numerators(order: usize) -> Result<IntSeries> {
    let tail = (2..=order)
        .map(|n| euler_open(n + 1).map(|p| -p.substitute_power(2)))
        .collect::<Result<Vec<_>>>()?;
    TruncatedSeries::from_coefficients(std::iter::once(IntPoly::one()).chain(tail).collect())
}

/// Numerators of `gbar`: `1` at `x^1`, then `P(Mbar_{0,n+1})(q)`.
pub fn compact_egf_numerators(order: usize) -> Result<IntSeries> {
    let tail = (2..=order)
        .map(|n| euler_compact(n + 1).map(|p| p.substitute_power(2)))
        .collect::<Result<Vec<_>>>()?;
    TruncatedSeries::from_coefficients(std::iter::once(IntPoly::one()).chain(tail).collect())
}

/// Checks `f(f_delta(x)) = x` and `f_delta(f(x)) = x` for ordinary series.
pub fn check_ordinary_pair(f: &IntSeries, f_delta: &IntSeries) -> Vec<IdentityCheck> {
    let order = f.order();
    vec![
        IdentityCheck::from_result("f(f_delta(x))", order, f.compose(f_delta)),
        IdentityCheck::from_result("f_delta(f(x))", order, f_delta.compose(f)),
    ]
}

/// Checks `gbar(g(x)) = x` and `g(gbar(x)) = x` for exponential numerator
/// lists.
pub fn check_exponential_pair(g: &IntSeries, gbar: &IntSeries) -> Vec<IdentityCheck> {
    let order = g.order();
    vec![
        IdentityCheck::from_result("gbar(g(x))", order, gbar.compose_egf(g)),
        IdentityCheck::from_result("g(gbar(x))", order, g.compose_egf(gbar)),
    ]
}

/// Builds `f`, `f_delta`, `g` and `gbar` to `x^order` and checks both
/// inversion identities. Orders below 2 pass vacuously.
pub fn verify_inversion(order: usize) -> InversionReport {
    if order < 2 {
        return InversionReport::default();
    }
    let mut checks = Vec::with_capacity(4);
    match open_series(order).and_then(|f| Ok((f, delta_series(order)?))) {
        Ok((f, f_delta)) => checks.extend(check_ordinary_pair(&f, &f_delta)),
        Err(e) => checks.push(IdentityCheck::from_result("f(f_delta(x))", order, Err(e))),
    }
    match open_egf_numerators(order).and_then(|g| Ok((g, compact_egf_numerators(order)?))) {
        Ok((g, gbar)) => checks.extend(check_exponential_pair(&g, &gbar)),
        Err(e) => checks.push(IdentityCheck::from_result("gbar(g(x))", order, Err(e))),
    }
    InversionReport { checks }
}
