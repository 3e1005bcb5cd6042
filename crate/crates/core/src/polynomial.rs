//! Dense univariate polynomials in `q`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::ring::Ring;

/// A polynomial `c_0 + c_1 q + ... + c_d q^d` stored densely, lowest degree
/// first.
///
/// The coefficient list never ends in a zero; the zero polynomial is the
/// empty list. Derived equality is therefore equality of polynomials.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> Polynomial<R> {
    /// Builds a polynomial from coefficients ordered by increasing degree.
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn constant(c: R) -> Self {
        Self::new(vec![c])
    }

    /// `c * q^k`.
    pub fn monomial(c: R, k: usize) -> Self {
        let mut coeffs = vec![R::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::monomial(R::one(), 1)
    }

    /// `prod_{i=a}^{b} (q - i)`; the empty product (`b < a`) is `1`.
    pub fn from_root_range(a: i64, b: i64) -> Self {
        (a..=b).fold(Self::one(), |acc, i| {
            let root = R::from_integer(&BigInt::from(i));
            acc * Self::new(vec![-root, R::one()])
        })
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    /// Coefficient of `q^k`; zero beyond the degree.
    pub fn coeff(&self, k: usize) -> R {
        self.coeffs.get(k).cloned().unwrap_or_else(R::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coefficient(&self) -> Option<&R> {
        self.coeffs.last()
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &R) -> R {
        self.coeffs
            .iter()
            .rev()
            .fold(R::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    /// Replaces `q` by `q^k`.
    pub fn substitute_power(&self, k: usize) -> Self {
        assert!(k > 0, "substitute_power needs a positive exponent");
        let Some(deg) = self.degree() else {
            return Self::zero();
        };
        let mut coeffs = vec![R::zero(); deg * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        Self::new(coeffs)
    }

    /// Whether the coefficient list reads the same in both directions.
    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    fn zip_with(&self, other: &Self, op: impl Fn(R, R) -> R) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new(
            (0..len)
                .map(|k| op(self.coeff(k), other.coeff(k)))
                .collect(),
        )
    }
}

impl<R: Ring> Zero for Polynomial<R> {
    fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<R: Ring> One for Polynomial<R> {
    fn one() -> Self {
        Self::constant(R::one())
    }
}

impl<R: Ring> Add<&Polynomial<R>> for &Polynomial<R> {
    type Output = Polynomial<R>;

    fn add(self, rhs: &Polynomial<R>) -> Polynomial<R> {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl<R: Ring> Sub<&Polynomial<R>> for &Polynomial<R> {
    type Output = Polynomial<R>;

    fn sub(self, rhs: &Polynomial<R>) -> Polynomial<R> {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl<R: Ring> Mul<&Polynomial<R>> for &Polynomial<R> {
    type Output = Polynomial<R>;

    fn mul(self, rhs: &Polynomial<R>) -> Polynomial<R> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = std::mem::replace(&mut out[i + j], R::zero()) + a.clone() * b.clone();
            }
        }
        // Over a ring with zero divisors the top coefficient can vanish.
        Polynomial::new(out)
    }
}

impl<R: Ring> Neg for &Polynomial<R> {
    type Output = Polynomial<R>;

    fn neg(self) -> Polynomial<R> {
        Polynomial {
            coeffs: self.coeffs.iter().cloned().map(Neg::neg).collect(),
        }
    }
}

impl<R: Ring> Neg for Polynomial<R> {
    type Output = Polynomial<R>;

    fn neg(self) -> Polynomial<R> {
        -&self
    }
}

macro_rules! forward_owned_binop {
    ($($tr:ident :: $m:ident),*) => {$(
        impl<R: Ring> $tr<Polynomial<R>> for Polynomial<R> {
            type Output = Polynomial<R>;
            fn $m(self, rhs: Polynomial<R>) -> Polynomial<R> {
                (&self).$m(&rhs)
            }
        }

        impl<R: Ring> $tr<&Polynomial<R>> for Polynomial<R> {
            type Output = Polynomial<R>;
            fn $m(self, rhs: &Polynomial<R>) -> Polynomial<R> {
                (&self).$m(rhs)
            }
        }
    )*};
}

forward_owned_binop!(Add::add, Sub::sub, Mul::mul);

impl<R: Ring> Ring for Polynomial<R> {
    fn from_integer(n: &BigInt) -> Self {
        Self::constant(R::from_integer(n))
    }

    fn div_exact(&self, d: &BigInt) -> Option<Self> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.div_exact(d))
            .collect::<Option<Vec<_>>>()?;
        Some(Self::new(coeffs))
    }

    fn scale(&self, n: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.scale(n)).collect())
    }
}

/// Renders as `q^3 + 5*q - 4`: descending powers, unit coefficients and
/// `q^1` elided, subtraction written out.
impl<R: Ring + Signed + fmt::Display> fmt::Display for Polynomial<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            match k {
                0 => write!(f, "{magnitude}")?,
                _ => {
                    if !magnitude.is_one() {
                        write!(f, "{magnitude}*")?;
                    }
                    f.write_str("q")?;
                    if k > 1 {
                        write!(f, "^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse polynomial term {term:?}: {reason}")]
pub struct ParsePolynomialError {
    term: String,
    reason: &'static str,
}

impl ParsePolynomialError {
    fn new(term: &str, reason: &'static str) -> Self {
        Self {
            term: term.to_owned(),
            reason,
        }
    }
}

/// Accepts the rendering grammar with arbitrary whitespace. Terms may come
/// in any order; repeated powers are summed.
impl<R: Ring + FromStr> FromStr for Polynomial<R> {
    type Err = ParsePolynomialError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(ParsePolynomialError::new(s, "empty input"));
        }

        // Split into signed terms at every '+'/'-' that does not start the string.
        let mut terms = Vec::new();
        let mut start = 0;
        for (i, ch) in compact.char_indices() {
            if i > 0 && (ch == '+' || ch == '-') {
                terms.push(&compact[start..i]);
                start = i;
            }
        }
        terms.push(&compact[start..]);

        let mut acc = Polynomial::zero();
        for term in terms {
            let (negative, body) = match term.as_bytes()[0] {
                b'-' => (true, &term[1..]),
                b'+' => (false, &term[1..]),
                _ => (false, term),
            };
            if body.is_empty() {
                return Err(ParsePolynomialError::new(term, "dangling sign"));
            }
            let (coeff_text, power) = match body.find('q') {
                None => (body, 0),
                Some(pos) => {
                    let power = match &body[pos + 1..] {
                        "" => 1,
                        rest => rest
                            .strip_prefix('^')
                            .and_then(|e| e.parse::<usize>().ok())
                            .ok_or_else(|| ParsePolynomialError::new(term, "bad exponent"))?,
                    };
                    let coeff_text = match &body[..pos] {
                        "" => "1",
                        c => c.strip_suffix('*').ok_or_else(|| {
                            ParsePolynomialError::new(term, "expected '*' before q")
                        })?,
                    };
                    (coeff_text, power)
                }
            };
            let coeff: R = coeff_text
                .parse()
                .map_err(|_| ParsePolynomialError::new(term, "bad coefficient"))?;
            let coeff = if negative { -coeff } else { coeff };
            acc = acc + Polynomial::monomial(coeff, power);
        }
        Ok(acc)
    }
}
