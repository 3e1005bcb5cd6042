//! Exact Poincaré polynomials and Betti numbers of the moduli spaces
//! `M_{0,n}^delta`, sitting between `M_{0,n}` and its compactification
//! `Mbar_{0,n}`.
//!
//! The arithmetic layers ([`polynomial`], [`series`]) are generic over a
//! coefficient [`Ring`]; the moduli computations use arbitrary-precision
//! integers through the aliases below.
//!
//! ```
//! use dihedral_moduli::moduli::{euler_delta, Method};
//!
//! let e6 = euler_delta(6, Method::Stratification).unwrap();
//! assert_eq!(e6.to_string(), "q^3 + 5*q - 4");
//! ```

pub mod cli;
pub mod combinatorics;
pub mod error;
pub mod moduli;
pub mod polynomial;
pub mod ring;
pub mod series;

pub use error::{Error, Result};
pub use polynomial::Polynomial;
pub use ring::Ring;
pub use series::TruncatedSeries;

/// Polynomials in `q` over the integers.
pub type IntPoly = Polynomial<num_bigint::BigInt>;

/// Truncated series in `x` over [`IntPoly`].
pub type IntSeries = TruncatedSeries<IntPoly>;

/// Polynomials over the rationals, used for cross-checks.
pub type RatPoly = Polynomial<num_rational::BigRational>;
