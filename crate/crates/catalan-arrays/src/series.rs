//! Truncated formal power series.
//!
//! A [`Series`] stores the coefficients of `z^0 ..= z^order` exactly; nothing
//! past the truncation order is represented or fabricated. Binary operations
//! truncate to the smaller of the two orders, so a coefficient is only ever
//! produced when both inputs determine it.
//!
//! Ring-closed operations (`add`, `sub`, `mul`, `pow`, shifts) are plain
//! methods; the partial ones (`div`, `compose`, `revert`, `sqrt`) return
//! `Result` and report exactly which precondition failed.

use crate::error::{Error, Result};
use crate::exact::Ring;

/// A formal power series known exactly up to `z^order`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Series<R: Ring> {
    coeffs: Vec<R>,
}

impl<R: Ring> Series<R> {
    /// Wraps ascending coefficients `c[0] ..= c[order]`.
    ///
    /// Panics on an empty list: a series always knows at least its constant
    /// term.
    pub fn new(coeffs: Vec<R>) -> Self {
        assert!(!coeffs.is_empty(), "series needs at least a constant term");
        Series { coeffs }
    }

    /// Coefficients `f(0), f(1), ..., f(order)`.
    pub fn from_fn(order: usize, f: impl Fn(usize) -> R) -> Self {
        Series::new((0..=order).map(f).collect())
    }

    pub fn constant(c: R, order: usize) -> Self {
        Series::from_fn(order, |n| if n == 0 { c.clone() } else { R::zero() })
    }

    pub fn zero(order: usize) -> Self {
        Series::constant(R::zero(), order)
    }

    pub fn one(order: usize) -> Self {
        Series::constant(R::one(), order)
    }

    /// The identity series `z`.
    pub fn z(order: usize) -> Self {
        Series::from_fn(order, |n| if n == 1 { R::one() } else { R::zero() })
    }

    /// `1/(1 - a z) = 1 + a z + a^2 z^2 + ...`, built without division so it
    /// exists over every coefficient ring.
    pub fn geometric(a: &R, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut acc = R::one();
        for n in 0..=order {
            if n > 0 {
                acc = acc.mul(a);
            }
            coeffs.push(acc.clone());
        }
        Series::new(coeffs)
    }

    /// Truncation order: coefficients `0 ..= order` are known.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `z^n`.
    ///
    /// Panics past the truncation order; a truncated series has no opinion
    /// about those coefficients.
    pub fn coeff(&self, n: usize) -> &R {
        assert!(
            n < self.coeffs.len(),
            "coefficient index {n} beyond truncation order {}",
            self.order()
        );
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    /// Index of the lowest nonzero coefficient, `None` if the series is zero
    /// up to its truncation order.
    pub fn ord(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.ord().is_none()
    }

    /// Drops coefficients above `order`.
    ///
    /// Panics if asked to extend: that would invent unknown coefficients.
    pub fn truncated(&self, order: usize) -> Self {
        assert!(
            order <= self.order(),
            "cannot extend a series truncated at {} to order {order}",
            self.order()
        );
        Series::new(self.coeffs[..=order].to_vec())
    }

    /// Multiplies by `z^k`. The result keeps every known coefficient, so its
    /// order grows by `k`.
    pub fn shift_up(&self, k: usize) -> Self {
        let mut coeffs = vec![R::zero(); k];
        coeffs.extend_from_slice(&self.coeffs);
        Series::new(coeffs)
    }

    /// Divides by `z^k`, lowering the order by `k`.
    ///
    /// Panics unless the first `k` coefficients vanish and the order is at
    /// least `k + 1`... the quotient must still have a constant term.
    pub fn shift_down(&self, k: usize) -> Self {
        assert!(
            k < self.coeffs.len(),
            "cannot shift a series of order {} down by {k}",
            self.order()
        );
        for (n, c) in self.coeffs[..k].iter().enumerate() {
            assert!(
                c.is_zero(),
                "shift_down({k}) requires z^{n} coefficient to vanish, got {c}"
            );
        }
        Series::new(self.coeffs[k..].to_vec())
    }

    pub fn map<T: Ring>(&self, f: impl Fn(&R) -> T) -> Series<T> {
        Series::new(self.coeffs.iter().map(f).collect())
    }

    pub fn scale(&self, c: &R) -> Self {
        self.map(|a| a.mul(c))
    }

    pub fn neg(&self) -> Self {
        self.map(|a| a.neg())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        Series::from_fn(order, |n| self.coeffs[n].add(&rhs.coeffs[n]))
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        Series::from_fn(order, |n| self.coeffs[n].sub(&rhs.coeffs[n]))
    }

    /// Cauchy product, truncated to the smaller order.
    pub fn mul(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        let mut out = vec![R::zero(); order + 1];
        for (i, a) in self.coeffs.iter().take(order + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(order + 1 - i).enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Series::new(out)
    }

    /// `self^k` by repeated squaring, at this series' truncation order.
    pub fn pow(&self, k: usize) -> Self {
        let mut base = self.clone();
        let mut k = k;
        let mut acc = Series::one(self.order());
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

    /// Multiplicative inverse, defined when the constant term is a unit.
    pub fn invert(&self) -> Result<Self> {
        Series::one(self.order()).div(self)
    }

    /// `self / rhs` via the standard coefficient recurrence.
    ///
    /// Fails with [`Error::NotInvertible`] unless `rhs` has a unit constant
    /// term.
    pub fn div(&self, rhs: &Self) -> Result<Self> {
        let b0_inv = rhs.coeffs[0].try_invert().ok_or_else(|| {
            Error::NotInvertible(format!(
                "division needs a unit constant term, got {}",
                rhs.coeffs[0]
            ))
        })?;
        let order = self.order().min(rhs.order());
        let mut q: Vec<R> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = self.coeffs[n].clone();
            for j in 1..=n {
                acc = acc.sub(&rhs.coeffs[j].mul(&q[n - j]));
            }
            q.push(acc.mul(&b0_inv));
        }
        Ok(Series::new(q))
    }

    /// `self(inner)`, defined when `inner` has no constant term (otherwise
    /// every coefficient of the result would be an infinite sum).
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::CompositionUndefined(format!(
                "inner series must have zero constant term, got {}",
                inner.coeffs[0]
            )));
        }
        let order = self.order().min(inner.order());
        let inner = inner.truncated(order);
        let mut acc = Series::constant(self.coeffs[order].clone(), order);
        for n in (0..order).rev() {
            acc = acc
                .mul(&inner)
                .add(&Series::constant(self.coeffs[n].clone(), order));
        }
        Ok(acc)
    }

    /// Compositional inverse: the series `g` with `self(g) = g(self) = z`.
    ///
    /// Defined when the constant term vanishes and the linear coefficient is
    /// a unit; anything else yields [`Error::NotRevertible`]. Solves the
    /// triangular system `sum_k g_k [z^n] self^k = [n = 1]` ascending in `n`.
    pub fn revert(&self) -> Result<Self> {
        if self.order() < 1 || !self.coeffs[0].is_zero() {
            return Err(Error::NotRevertible);
        }
        let f1_inv = self.coeffs[1].try_invert().ok_or(Error::NotRevertible)?;
        let order = self.order();

        // powers[k - 1] = self^k, truncated at `order`.
        let mut powers: Vec<Series<R>> = Vec::with_capacity(order);
        let mut fpow = self.clone();
        for _ in 1..=order {
            powers.push(fpow.clone());
            fpow = fpow.mul(self);
        }

        let mut g = vec![R::zero(); order + 1];
        let mut diag_inv = R::one();
        for n in 1..=order {
            // [z^n] self^n = f1^n, so dividing stays exact for unit f1.
            diag_inv = diag_inv.mul(&f1_inv);
            let target = if n == 1 { R::one() } else { R::zero() };
            let mut acc = target;
            for k in 1..n {
                acc = acc.sub(&g[k].mul(powers[k - 1].coeff(n)));
            }
            g[n] = acc.mul(&diag_inv);
        }
        Ok(Series::new(g))
    }

    /// Square root with constant term 1.
    ///
    /// Fails with [`Error::SqrtUndefined`] if the constant term is not 1 or
    /// if 2 is not invertible in the coefficient ring; use a rational
    /// coefficient ring and check integrality afterwards when the root is
    /// known to be integral.
    pub fn sqrt(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::SqrtUndefined(format!(
                "square root needs constant term 1, got {}",
                self.coeffs[0]
            )));
        }
        let half = R::from_int(2).try_invert().ok_or_else(|| {
            Error::SqrtUndefined("2 is not invertible in the coefficient ring".into())
        })?;
        let order = self.order();
        let mut s: Vec<R> = Vec::with_capacity(order + 1);
        s.push(R::one());
        for n in 1..=order {
            let mut acc = self.coeffs[n].clone();
            for j in 1..n {
                acc = acc.sub(&s[j].mul(&s[n - j]));
            }
            s.push(acc.mul(&half));
        }
        Ok(Series::new(s))
    }
}
