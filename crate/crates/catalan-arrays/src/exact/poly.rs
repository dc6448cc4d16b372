//! Dense univariate polynomials in the parameter `r`.
//!
//! These are the coefficient ring for symbolic triangles: keeping the family
//! parameter as an indeterminate means one computation covers every value of
//! `r` at once, and specializing is just polynomial evaluation.

use std::fmt;

use super::Ring;

/// A polynomial over `R`, stored as ascending coefficients with no trailing
/// zeros. The zero polynomial is the empty coefficient list.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly<R: Ring> {
    coeffs: Vec<R>,
}

impl<R: Ring> Poly<R> {
    /// Builds a polynomial from ascending coefficients, trimming trailing
    /// zeros.
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: R) -> Self {
        Poly::new(vec![c])
    }

    /// The indeterminate `r`.
    pub fn var() -> Self {
        Poly::new(vec![R::zero(), R::one()])
    }

    /// `c * r^k`.
    pub fn monomial(c: R, k: usize) -> Self {
        let mut coeffs = vec![R::zero(); k];
        coeffs.push(c);
        Poly::new(coeffs)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `r^k`; zero beyond the degree.
    pub fn coeff(&self, k: usize) -> R {
        self.coeffs.get(k).cloned().unwrap_or_else(R::zero)
    }

    /// Ascending coefficients without trailing zeros.
    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Horner evaluation at a point of the coefficient ring.
    pub fn eval(&self, x: &R) -> R {
        let mut acc = R::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    /// Applies a ring morphism coefficient-wise.
    pub fn map<T: Ring>(&self, f: impl Fn(&R) -> T) -> Poly<T> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    /// Substitutes another polynomial for the indeterminate.
    pub fn compose(&self, inner: &Poly<R>) -> Poly<R> {
        let mut acc = Poly::new(vec![]);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(inner).add(&Poly::constant(c.clone()));
        }
        acc
    }

    pub fn scale(&self, c: &R) -> Poly<R> {
        Poly::new(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }
}

impl<R: Ring> Ring for Poly<R> {
    fn zero() -> Self {
        Poly { coeffs: vec![] }
    }

    fn one() -> Self {
        Poly::constant(R::one())
    }

    fn from_int(n: i64) -> Self {
        Poly::constant(R::from_int(n))
    }

    fn from_bigint(n: &super::BigInt) -> Self {
        Poly::constant(R::from_bigint(n))
    }

    fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k).add(&rhs.coeff(k))).collect())
    }

    fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k).sub(&rhs.coeff(k))).collect())
    }

    fn mul(&self, rhs: &Self) -> Self {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return Ring::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Poly::new(out)
    }

    fn neg(&self) -> Self {
        Poly::new(self.coeffs.iter().map(|c| c.neg()).collect())
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn is_unit(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_unit()
    }

    fn try_invert(&self) -> Option<Self> {
        if self.coeffs.len() != 1 {
            return None;
        }
        self.coeffs[0].try_invert().map(Poly::constant)
    }
}

impl<R: Ring> Poly<R> {
    /// Renders ascending with the given variable name, e.g. `2 + 2r + r^2`
    /// or `1 - x`.
    ///
    /// Sign placement inspects the rendered coefficient, so it works for any
    /// coefficient ring whose negative values print with a leading `-`.
    pub fn render(&self, var: &str) -> String {
        if self.coeffs.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let rendered = c.to_string();
            let (neg, mag) = match rendered.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, rendered),
            };
            if first {
                if neg {
                    out.push('-');
                }
                first = false;
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let unit_mag = mag == "1";
            match k {
                0 => out.push_str(&mag),
                1 if unit_mag => out.push_str(var),
                1 => out.push_str(&format!("{mag}{var}")),
                _ if unit_mag => out.push_str(&format!("{var}^{k}")),
                _ => out.push_str(&format!("{mag}{var}^{k}")),
            }
        }
        out
    }
}

impl<R: Ring> fmt::Display for Poly<R> {
    /// [`Poly::render`] with variable `r`, the crate's family parameter.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render("r"))
    }
}
