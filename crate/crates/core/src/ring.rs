//! Coefficient rings.
//!
//! Every series and polynomial in this crate is generic over a commutative
//! ring with identity. The moduli computations instantiate it with
//! [`BigInt`] (and polynomials over it), while tests also use machine
//! integers and rationals where that is convenient.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

/// A commutative ring with identity, plus the integer embedding the
/// combinatorial formulas need.
pub trait Ring:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// Image of an integer under the canonical map Z -> R.
    ///
    /// Fixed-width rings panic when `n` does not fit.
    fn from_integer(n: &BigInt) -> Self;

    /// Exact division by a nonzero integer, or `None` when the quotient is
    /// not in the ring.
    fn div_exact(&self, d: &BigInt) -> Option<Self>;

    /// `self * n` for an integer `n`.
    fn scale(&self, n: &BigInt) -> Self {
        self.clone() * Self::from_integer(n)
    }
}

impl Ring for BigInt {
    fn from_integer(n: &BigInt) -> Self {
        n.clone()
    }

    fn div_exact(&self, d: &BigInt) -> Option<Self> {
        let (quot, rem) = self.div_rem(d);
        rem.is_zero().then_some(quot)
    }

    fn scale(&self, n: &BigInt) -> Self {
        self * n
    }
}

impl Ring for BigRational {
    fn from_integer(n: &BigInt) -> Self {
        BigRational::from_integer(n.clone())
    }

    fn div_exact(&self, d: &BigInt) -> Option<Self> {
        (!d.is_zero()).then(|| self / BigRational::from_integer(d.clone()))
    }
}

macro_rules! machine_ring {
    ($($t:ty => $conv:ident),*) => {$(
        impl Ring for $t {
            fn from_integer(n: &BigInt) -> Self {
                n.$conv().unwrap_or_else(|| panic!("{n} does not fit in {}", stringify!($t)))
            }

            fn div_exact(&self, d: &BigInt) -> Option<Self> {
                let d = d.$conv()?;
                if d == 0 || self % d != 0 {
                    return None;
                }
                self.checked_div(d)
            }
        }
    )*};
}

machine_ring!(i32 => to_i32, i64 => to_i64, i128 => to_i128);

/// `-1` when `negative`, else `1`.
pub(crate) fn sign<R: Ring>(negative: bool) -> R {
    if negative {
        -R::one()
    } else {
        R::one()
    }
}
