//! Exact coefficient arithmetic.
//!
//! Everything in this crate computes over one of three coefficient rings,
//! unified by the [`Ring`] trait:
//!
//! - [`BigInt`]: arbitrary-precision signed integers (re-exported from
//!   `num-bigint`),
//! - [`Ratio`]: arbitrary-precision rationals, always in lowest terms with a
//!   positive denominator (`num-rational`),
//! - [`IntPoly`]: dense univariate polynomials over [`BigInt`] in the
//!   parameter `r`.
//!
//! There is no floating point anywhere. Mixing coefficient rings is a type
//! error: all series and triangle operations are generic over a single `R`.

use std::fmt;

use num_traits::{One, Signed, Zero};

pub use num_bigint::BigInt;

/// Arbitrary-precision rational numbers, stored in lowest terms with a
/// positive denominator.
pub type Ratio = num_rational::BigRational;

mod poly;

pub use poly::Poly;

/// Dense polynomials over the integers in the parameter `r`.
pub type IntPoly = Poly<BigInt>;

/// An exact commutative ring with identity.
///
/// The trait is object-unsafe by design; it exists so series and triangles
/// can be generic over the coefficient ring while staying allocation-exact.
/// `Display` is required because errors and verification reports render
/// offending entries verbatim.
pub trait Ring: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(n: i64) -> Self;
    /// Embeds a [`BigInt`] (canonical map from the initial ring).
    fn from_bigint(n: &BigInt) -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn is_zero(&self) -> bool;
    /// True iff `self` has a multiplicative inverse in the ring.
    fn is_unit(&self) -> bool;
    /// The inverse of a unit, `None` otherwise.
    fn try_invert(&self) -> Option<Self>;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// `self^k` by repeated squaring.
    fn pow(&self, k: usize) -> Self {
        let mut base = self.clone();
        let mut k = k;
        let mut acc = Self::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

impl Ring for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        One::one()
    }

    fn from_int(n: i64) -> Self {
        BigInt::from(n)
    }

    fn from_bigint(n: &BigInt) -> Self {
        n.clone()
    }

    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn neg(&self) -> Self {
        -self
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn is_unit(&self) -> bool {
        One::is_one(&self.abs())
    }

    fn try_invert(&self) -> Option<Self> {
        // The only integer units are 1 and -1, each its own inverse.
        Ring::is_unit(self).then(|| self.clone())
    }
}

impl Ring for Ratio {
    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        One::one()
    }

    fn from_int(n: i64) -> Self {
        Ratio::from_integer(BigInt::from(n))
    }

    fn from_bigint(n: &BigInt) -> Self {
        Ratio::from_integer(n.clone())
    }

    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn neg(&self) -> Self {
        -self
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn is_unit(&self) -> bool {
        !Zero::is_zero(self)
    }

    fn try_invert(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }
}

/// `a / b` if `b` divides `a` exactly, `None` otherwise (or if `b = 0`).
pub fn checked_exact_div(a: &BigInt, b: &BigInt) -> Option<BigInt> {
    if Zero::is_zero(b) {
        return None;
    }
    if Zero::is_zero(&(a % b)) {
        Some(a / b)
    } else {
        None
    }
}

/// Exact integer division.
///
/// Panics when `b` does not divide `a`. The entry formulas for the Catalan
/// triangles contain rational prefactors like `(k+1)/(n+1)` that provably
/// produce integers; routing them through `exact_div` turns that integrality
/// claim into a continuously checked assertion.
pub fn exact_div(a: &BigInt, b: &BigInt) -> BigInt {
    checked_exact_div(a, b)
        .unwrap_or_else(|| panic!("exact division violated: {a} is not divisible by {b}"))
}

/// Binomial coefficient `C(n, k)` for any integer `n` and `k`.
///
/// Returns 0 for `k < 0` and for `0 <= n < k`; several triangle formulas rely
/// on out-of-range binomials vanishing. Computed by the multiplicative
/// formula with exact division at every step.
pub fn binom(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return Zero::zero();
    }
    let mut acc: BigInt = One::one();
    for j in 1..=k {
        acc *= BigInt::from(n - k + j);
        // Partial products are binomial coefficients themselves, so each
        // division is exact.
        acc = exact_div(&acc, &BigInt::from(j));
    }
    acc
}

/// Convenience constructor for `BigInt` values in tests and examples.
pub fn int(n: i64) -> BigInt {
    BigInt::from(n)
}

/// Convenience constructor for `Ratio` values: `rat(p, q) = p/q`.
///
/// Panics if `q = 0`.
pub fn rat(p: i64, q: i64) -> Ratio {
    Ratio::new(BigInt::from(p), BigInt::from(q))
}
