//! Riordan arrays and explicit lower-triangular matrices.
//!
//! A [`RiordanArray`] is a pair of series `(d, h)` with unit `d(0)`, zero
//! `h(0)` and unit `h'(0)`; entry `(n, k)` is the `z^n` coefficient of
//! `d * h^k`. Such pairs form a group:
//!
//! - product: `(d1, h1) * (d2, h2) = (d1 * d2(h1), h2(h1))`,
//! - identity: `(1, z)`,
//! - inverse: `(1 / d(hbar), hbar)` where `hbar` is the compositional
//!   inverse of `h`.
//!
//! Acting on a sequence through its generating function `g` gives
//! `d * g(h)`, which matches the matrix picture: coefficient `n` of the
//! image is `sum_k entry(n, k) * g_k`.
//!
//! [`Triangle`] is the expanded matrix form: concrete rows that can be
//! multiplied, inverted by forward substitution, and applied to vectors
//! without any series machinery. Keeping both representations lets every
//! group-level computation be cross-checked entry by entry.

use crate::error::{Error, Result};
use crate::exact::Ring;
use crate::series::Series;

/// A proper Riordan array `(d, h)`, truncated at a common series order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RiordanArray<R: Ring> {
    d: Series<R>,
    h: Series<R>,
}

impl<R: Ring> RiordanArray<R> {
    /// Validates the pair and aligns both series to the smaller order.
    ///
    /// Requirements for membership in the group: `d(0)` a unit, `h(0) = 0`,
    /// and the linear coefficient of `h` a unit.
    pub fn new(d: Series<R>, h: Series<R>) -> Result<Self> {
        if !d.coeff(0).is_unit() {
            return Err(Error::MalformedArray(format!(
                "d needs a unit constant term, got {}",
                d.coeff(0)
            )));
        }
        if h.order() < 1 {
            return Err(Error::MalformedArray(
                "h must be truncated at order 1 or higher".into(),
            ));
        }
        if !h.coeff(0).is_zero() {
            return Err(Error::MalformedArray(format!(
                "h must have zero constant term, got {}",
                h.coeff(0)
            )));
        }
        if !h.coeff(1).is_unit() {
            return Err(Error::MalformedArray(format!(
                "h needs a unit linear coefficient, got {}",
                h.coeff(1)
            )));
        }
        let order = d.order().min(h.order());
        Ok(RiordanArray {
            d: d.truncated(order),
            h: h.truncated(order),
        })
    }

    /// The group identity `(1, z)`.
    pub fn identity(order: usize) -> Self {
        RiordanArray {
            d: Series::one(order),
            h: Series::z(order),
        }
    }

    pub fn d(&self) -> &Series<R> {
        &self.d
    }

    pub fn h(&self) -> &Series<R> {
        &self.h
    }

    /// Common truncation order of both series; rows `0 ..= order` of the
    /// matrix are determined.
    pub fn order(&self) -> usize {
        self.d.order()
    }

    /// Entry `(n, k)`: the `z^n` coefficient of `d * h^k`.
    ///
    /// Zero for `k > n`. Panics for `n` past the truncation order.
    pub fn entry(&self, n: usize, k: usize) -> R {
        if k > n {
            return R::zero();
        }
        self.d.mul(&self.h.pow(k)).coeff(n).clone()
    }

    /// Expands rows `0 ..= order` into an explicit [`Triangle`], computing
    /// the column generating functions `d, d h, d h^2, ...` incrementally.
    pub fn to_triangle(&self, name: impl Into<String>) -> Triangle<R> {
        let order = self.order();
        let mut rows: Vec<Vec<R>> = (0..=order).map(|n| Vec::with_capacity(n + 1)).collect();
        let mut col = self.d.clone();
        for k in 0..=order {
            for (n, row) in rows.iter_mut().enumerate().skip(k) {
                row.push(col.coeff(n).clone());
            }
            if k < order {
                col = col.mul(&self.h);
            }
        }
        Triangle {
            name: name.into(),
            rows,
        }
    }

    /// Group product `(d1 * d2(h1), h2(h1))`.
    ///
    /// Matrix-wise this is ordinary row-times-column multiplication, with
    /// `self` on the left. Total on validated arrays: substituting `h1` is
    /// always defined because `h1(0) = 0`.
    pub fn mul(&self, rhs: &Self) -> Self {
        let d2_at_h1 = rhs
            .d
            .compose(&self.h)
            .expect("validated arrays keep h(0) = 0");
        let h2_at_h1 = rhs
            .h
            .compose(&self.h)
            .expect("validated arrays keep h(0) = 0");
        RiordanArray {
            d: self.d.mul(&d2_at_h1),
            h: h2_at_h1,
        }
    }

    /// Group inverse `(1 / d(hbar), hbar)` with `hbar` the compositional
    /// inverse of `h`.
    pub fn inv(&self) -> Result<Self> {
        let hbar = self.h.revert()?;
        let d_at_hbar = self.d.compose(&hbar)?;
        Ok(RiordanArray {
            d: d_at_hbar.invert()?,
            h: hbar,
        })
    }

    /// Action on a sequence via its generating function: `g -> d * g(h)`.
    ///
    /// Coefficient `n` of the result equals `sum_k entry(n, k) * g_k`.
    pub fn apply(&self, g: &Series<R>) -> Series<R> {
        let g_at_h = g.compose(&self.h).expect("validated arrays keep h(0) = 0");
        self.d.mul(&g_at_h)
    }

    pub fn map<T: Ring>(&self, f: impl Fn(&R) -> T) -> RiordanArray<T> {
        RiordanArray {
            d: self.d.map(&f),
            h: self.h.map(&f),
        }
    }
}

/// An explicit lower-triangular matrix: row `n` holds entries `(n, 0)`
/// through `(n, n)`.
///
/// Carries a display name for reports and tables; the name never takes part
/// in equality.
#[derive(Clone, Debug)]
pub struct Triangle<R: Ring> {
    name: String,
    rows: Vec<Vec<R>>,
}

impl<R: Ring> PartialEq for Triangle<R> {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows
    }
}

impl<R: Ring> Triangle<R> {
    /// Wraps explicit rows; row `n` must have exactly `n + 1` entries.
    pub fn new(name: impl Into<String>, rows: Vec<Vec<R>>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::MalformedArray("a triangle needs at least row 0".into()));
        }
        for (n, row) in rows.iter().enumerate() {
            if row.len() != n + 1 {
                return Err(Error::MalformedArray(format!(
                    "row {n} must have {} entries, got {}",
                    n + 1,
                    row.len()
                )));
            }
        }
        Ok(Triangle {
            name: name.into(),
            rows,
        })
    }

    /// Builds rows `0 ..= depth` from an entry formula.
    pub fn from_fn(name: impl Into<String>, depth: usize, f: impl Fn(usize, usize) -> R) -> Self {
        let rows = (0..=depth)
            .map(|n| (0..=n).map(|k| f(n, k)).collect())
            .collect();
        Triangle {
            name: name.into(),
            rows,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Largest row index.
    pub fn depth(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn row(&self, n: usize) -> &[R] {
        &self.rows[n]
    }

    pub fn rows(&self) -> &[Vec<R>] {
        &self.rows
    }

    /// Entry `(n, k)`, zero above the diagonal. Panics for `n` past the
    /// depth.
    pub fn get(&self, n: usize, k: usize) -> R {
        assert!(n < self.rows.len(), "row {n} beyond depth {}", self.depth());
        self.rows[n].get(k).cloned().unwrap_or_else(R::zero)
    }

    /// Entries `(k, k), (k+1, k), ...` down the triangle.
    pub fn column(&self, k: usize) -> Vec<R> {
        self.rows
            .iter()
            .skip(k)
            .map(|row| row[k].clone())
            .collect()
    }

    pub fn diagonal(&self) -> Vec<R> {
        self.rows.iter().enumerate().map(|(n, row)| row[n].clone()).collect()
    }

    pub fn row_sums(&self) -> Vec<R> {
        self.rows
            .iter()
            .map(|row| row.iter().fold(R::zero(), |acc, c| acc.add(c)))
            .collect()
    }

    /// Lower-triangular matrix product, truncated to the smaller depth.
    pub fn matmul(&self, rhs: &Self) -> Self {
        let depth = self.depth().min(rhs.depth());
        Triangle::from_fn(
            format!("{}*{}", self.name, rhs.name),
            depth,
            |n, k| {
                let mut acc = R::zero();
                for j in k..=n {
                    acc = acc.add(&self.rows[n][j].mul(&rhs.rows[j][k]));
                }
                acc
            },
        )
    }

    /// Matrix inverse by forward substitution.
    ///
    /// Fails with [`Error::NonUnitDiagonal`] at the first diagonal entry
    /// without a multiplicative inverse.
    pub fn invert(&self) -> Result<Self> {
        let depth = self.depth();
        let mut inv_diag = Vec::with_capacity(depth + 1);
        for n in 0..=depth {
            inv_diag.push(self.rows[n][n].try_invert().ok_or_else(|| {
                Error::NonUnitDiagonal {
                    n,
                    value: self.rows[n][n].to_string(),
                }
            })?);
        }
        let mut rows: Vec<Vec<R>> = Vec::with_capacity(depth + 1);
        for n in 0..=depth {
            let mut row = Vec::with_capacity(n + 1);
            for k in 0..=n {
                let mut acc = if n == k { R::one() } else { R::zero() };
                for j in k..n {
                    acc = acc.sub(&self.rows[n][j].mul(&rows[j][k]));
                }
                row.push(acc.mul(&inv_diag[n]));
            }
            rows.push(row);
        }
        Ok(Triangle {
            name: format!("{}^-1", self.name),
            rows,
        })
    }

    /// Matrix-vector product: component `n` is `sum_k entry(n, k) * v[k]`.
    ///
    /// The vector must supply at least `depth + 1` components.
    pub fn apply(&self, values: &[R]) -> Result<Vec<R>> {
        let need = self.depth() + 1;
        if values.len() < need {
            return Err(Error::VectorTooShort {
                need,
                got: values.len(),
            });
        }
        Ok(self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .zip(values)
                    .fold(R::zero(), |acc, (a, v)| acc.add(&a.mul(v)))
            })
            .collect())
    }

    pub fn map<T: Ring>(&self, f: impl Fn(&R) -> T) -> Triangle<T> {
        Triangle {
            name: self.name.clone(),
            rows: self
                .rows
                .iter()
                .map(|row| row.iter().map(&f).collect())
                .collect(),
        }
    }
}
