//! Polynomial sequences read off triangle rows.
//!
//! Row `n` of a lower-triangular array is the coefficient list of a
//! polynomial `p_n(x) = sum_k entry(n, k) x^k`; the array is precisely the
//! change-of-basis matrix from `(p_n)` to the monomials. Two consequences
//! are exercised throughout the crate:
//!
//! - the sequence of an array and the sequence of its inverse are mutually
//!   inverse bases: applying the array to `(p_k^inv(x))_k` returns the
//!   monomials,
//! - the sequence has the closed generating function `d / (1 - x h)`, and
//!   shifting the argument by `s` corresponds to multiplying the array by
//!   `pascal(s)` on the right.
//!
//! The inverse of the `shapiro` array yields Chebyshev polynomials of the
//! second kind with argument `(x - 2) / 2`; [`chebyshev_u`] and
//! [`chebyshev_u_shifted`] provide that route independently.

use crate::exact::{BigInt, IntPoly, Poly, Ratio, Ring};
use crate::riordan::{RiordanArray, Triangle};
use crate::series::Series;

/// The polynomial sequence carried by a triangle: one polynomial per row.
#[derive(Clone, PartialEq, Debug)]
pub struct ShefferSeq<R: Ring> {
    polys: Vec<Poly<R>>,
}

impl<R: Ring> ShefferSeq<R> {
    /// Reads `p_n(x) = sum_k entry(n, k) x^k` from each row.
    pub fn from_triangle(t: &Triangle<R>) -> Self {
        ShefferSeq {
            polys: t.rows().iter().map(|row| Poly::new(row.clone())).collect(),
        }
    }

    /// Number of polynomials, one per triangle row.
    pub fn count(&self) -> usize {
        self.polys.len()
    }

    pub fn poly(&self, n: usize) -> &Poly<R> {
        &self.polys[n]
    }

    pub fn polys(&self) -> &[Poly<R>] {
        &self.polys
    }

    /// `p_n(x)`.
    pub fn eval(&self, n: usize, x: &R) -> R {
        self.polys[n].eval(x)
    }

    /// `p_0(x), p_1(x), ..., p_depth(x)`.
    pub fn values(&self, x: &R) -> Vec<R> {
        self.polys.iter().map(|p| p.eval(x)).collect()
    }

    /// The sequence `p_n(x + s)`: every polynomial composed with `x + s`.
    pub fn shifted(&self, s: &R) -> Self {
        let x_plus_s = Poly::new(vec![s.clone(), R::one()]);
        ShefferSeq {
            polys: self.polys.iter().map(|p| p.compose(&x_plus_s)).collect(),
        }
    }
}

/// Generating function of an array's polynomial sequence at the point `x`:
/// `d / (1 - x h)`, whose `z^n` coefficient is `p_n(x)`.
///
/// The denominator has constant term 1, so this exists over every
/// coefficient ring.
pub fn sheffer_gf<R: Ring>(array: &RiordanArray<R>, x: &R) -> Series<R> {
    let order = array.order();
    let denominator = Series::one(order).sub(&array.h().scale(x));
    array
        .d()
        .div(&denominator)
        .expect("denominator has constant term 1")
}

/// Chebyshev polynomials of the second kind `U_0 ..= U_max`:
/// `U_0 = 1`, `U_1 = 2x`, `U_n = 2x U_(n-1) - U_(n-2)`.
pub fn chebyshev_u(max: usize) -> Vec<IntPoly> {
    let two_x = Poly::monomial(BigInt::from(2), 1);
    let mut us: Vec<IntPoly> = Vec::with_capacity(max + 1);
    us.push(IntPoly::one());
    if max >= 1 {
        us.push(two_x.clone());
    }
    for n in 2..=max {
        let next = two_x.mul(&us[n - 1]).sub(&us[n - 2]);
        us.push(next);
    }
    us
}

/// `U_0((x-2)/2) ..= U_max((x-2)/2)` with integer coefficients.
///
/// The substitution is carried out over rationals; the halves always cancel,
/// and the conversion back to integers asserts that.
pub fn chebyshev_u_shifted(max: usize) -> Vec<IntPoly> {
    let arg: Poly<Ratio> = Poly::new(vec![
        Ratio::from_int(-1),
        Ratio::new(BigInt::from(1), BigInt::from(2)),
    ]);
    chebyshev_u(max)
        .iter()
        .map(|u| {
            u.map(|c| Ratio::from_integer(c.clone()))
                .compose(&arg)
                .map(|c| {
                    assert!(
                        c.is_integer(),
                        "substitution left a non-integer coefficient {c}"
                    );
                    c.to_integer()
                })
        })
        .collect()
}
