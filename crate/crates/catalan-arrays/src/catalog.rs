//! Named arrays and their closed forms.
//!
//! The cast:
//!
//! - `pascal(r)`: the generalized Pascal array `(1/(1-rz), z/(1-rz))` with
//!   entries `binom(n, k) r^(n-k)`,
//! - `catalan`: `(c, zc)` for the Catalan generating function `c`, with the
//!   ballot numbers as entries,
//! - `shapiro`: `(c^2, zc^2)`, the Catalan triangle with entries
//!   `((k+1)/(n+1)) binom(2n+2, n-k)`,
//! - `with_parameter(A, r) = A * pascal(r)`: the one-parameter family
//!   through any array; `r_catalan(r)` interpolates from `catalan` at
//!   `r = 0` to `shapiro` at `r = 1`.
//!
//! Every family member is available three ways: as a series pair, as an
//! explicit entry formula, and (for `r_catalan` and its inverse) as a closed
//! form in `z`. The redundancy is deliberate; the verification engine checks
//! the routes against each other.

use crate::exact::{binom, exact_div, BigInt, IntPoly, Poly, Ratio, Ring};
use crate::riordan::{RiordanArray, Triangle};
use crate::series::Series;
use crate::Result;

/// The generalized Pascal array `(1/(1-rz), z/(1-rz))`.
///
/// Built from geometric series, so it exists over every coefficient ring;
/// `pascal(0)` is the group identity.
pub fn pascal<R: Ring>(r: &R, order: usize) -> RiordanArray<R> {
    let d = Series::geometric(r, order);
    let h = d.shift_up(1).truncated(order);
    RiordanArray::new(d, h).expect("geometric pair is always a valid array")
}

/// Entry `(n, k)` of `pascal(r)`: `binom(n, k) r^(n-k)`.
pub fn pascal_entry<R: Ring>(r: &R, n: usize, k: usize) -> R {
    if k > n {
        return R::zero();
    }
    R::from_bigint(&binom(n as i64, k as i64)).mul(&r.pow(n - k))
}

/// Catalan numbers `1, 1, 2, 5, 14, ...` up to index `order`, by the
/// convolution recurrence.
pub fn catalan_numbers(order: usize) -> Vec<BigInt> {
    let mut c: Vec<BigInt> = Vec::with_capacity(order + 1);
    c.push(BigInt::from(1));
    for n in 1..=order {
        let mut acc = BigInt::from(0);
        for i in 0..n {
            acc += &c[i] * &c[n - 1 - i];
        }
        c.push(acc);
    }
    c
}

/// The Catalan generating function `c` with `c = 1 + z c^2`, coefficients
/// embedded into `R`.
pub fn catalan_gf<R: Ring>(order: usize) -> Series<R> {
    let numbers = catalan_numbers(order);
    Series::new(numbers.iter().map(R::from_bigint).collect())
}

/// The Catalan generating function computed from its radical closed form
/// `(1 - sqrt(1 - 4z)) / (2z)`.
///
/// Kept as an independent route: [`catalan_gf`] uses only the convolution
/// recurrence, this uses only the square root.
pub fn catalan_gf_sqrt(order: usize) -> Series<Ratio> {
    let one_minus_4z = Series::from_fn(order + 1, |n| match n {
        0 => Ratio::from_int(1),
        1 => Ratio::from_int(-4),
        _ => Ratio::from_int(0),
    });
    let root = one_minus_4z.sqrt().expect("constant term is 1");
    let numerator = Series::one(order + 1).sub(&root);
    numerator
        .shift_down(1)
        .scale(&Ratio::new(BigInt::from(1), BigInt::from(2)))
}

/// The Catalan array `(c, zc)`.
pub fn catalan<R: Ring>(order: usize) -> RiordanArray<R> {
    let c = catalan_gf::<R>(order);
    let h = c.shift_up(1).truncated(order);
    RiordanArray::new(c, h).expect("catalan pair is always a valid array")
}

/// The Catalan triangle `(c^2, zc^2)`.
pub fn shapiro<R: Ring>(order: usize) -> RiordanArray<R> {
    let c = catalan_gf::<R>(order);
    let c2 = c.mul(&c);
    let h = c2.shift_up(1).truncated(order);
    RiordanArray::new(c2, h).expect("shapiro pair is always a valid array")
}

/// The one-parameter family through `base`: `base * pascal(r)`.
pub fn with_parameter<R: Ring>(base: &RiordanArray<R>, r: &R) -> RiordanArray<R> {
    base.mul(&pascal(r, base.order()))
}

/// `catalan * pascal(r)`, the family interpolating `catalan` (`r = 0`) and
/// `shapiro` (`r = 1`).
pub fn r_catalan<R: Ring>(r: &R, order: usize) -> RiordanArray<R> {
    with_parameter(&catalan::<R>(order), r)
}

/// [`r_catalan`] with the parameter kept as an indeterminate.
pub fn r_catalan_symbolic(order: usize) -> RiordanArray<IntPoly> {
    r_catalan(&IntPoly::var(), order)
}

/// Ballot-number entry of `catalan`: `((k+1)/(n+1)) binom(2n-k, n)`.
///
/// The division is performed exactly and panics if integrality ever failed.
pub fn ballot_entry(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let (n, k) = (n as i64, k as i64);
    exact_div(
        &(BigInt::from(k + 1) * binom(2 * n - k, n)),
        &BigInt::from(n + 1),
    )
}

/// Entry of `shapiro`: `((k+1)/(n+1)) binom(2n+2, n-k)`.
pub fn shapiro_entry(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let (n, k) = (n as i64, k as i64);
    exact_div(
        &(BigInt::from(k + 1) * binom(2 * n + 2, n - k)),
        &BigInt::from(n + 1),
    )
}

/// Entry of the inverse of `shapiro`: `(-1)^(n-k) binom(n+k+1, n-k)`.
pub fn shapiro_inverse_entry(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let (n, k) = (n as i64, k as i64);
    let sign = if (n - k) % 2 == 0 { 1 } else { -1 };
    binom(n + k + 1, n - k) * BigInt::from(sign)
}

/// Entry of `r_catalan` as a polynomial in `r`:
/// `sum_i ((i+k+1)/(n+1)) binom(2n-i-k, n) binom(i+k, k) r^i`.
///
/// Each coefficient is an integer on its own; `exact_div` checks that per
/// term.
pub fn r_catalan_entry(n: usize, k: usize) -> IntPoly {
    if k > n {
        return IntPoly::zero();
    }
    let (n, k) = (n as i64, k as i64);
    let coeffs = (0..=(n - k))
        .map(|i| {
            exact_div(
                &(BigInt::from(i + k + 1) * binom(2 * n - i - k, n) * binom(i + k, k)),
                &BigInt::from(n + 1),
            )
        })
        .collect();
    Poly::new(coeffs)
}

/// Entry of the inverse of `r_catalan` as a polynomial in `r`:
/// `(-1)^(n-k) sum_i binom(n, i) binom(k+1, n-k-i) r^i`.
///
/// The sum is what the product of the inverse Pascal and inverse Catalan
/// matrices yields term by term; at `r = 1` it collapses by Vandermonde
/// convolution to `(-1)^(n-k) binom(n+k+1, n-k)`.
pub fn r_catalan_inverse_entry(n: usize, k: usize) -> IntPoly {
    if k > n {
        return IntPoly::zero();
    }
    let (n, k) = (n as i64, k as i64);
    let sign = BigInt::from(if (n - k) % 2 == 0 { 1 } else { -1 });
    let coeffs = (0..=(n - k))
        .map(|i| binom(n, i) * binom(k + 1, n - k - i) * &sign)
        .collect();
    Poly::new(coeffs)
}

/// Rows `0 ..= depth` of `r_catalan` with symbolic parameter, computed as an
/// explicit matrix product: the numeric `catalan` triangle times the
/// symbolic `pascal` triangle.
///
/// This route never touches series composition, so it cross-checks the
/// group-product construction.
pub fn r_catalan_triangle(depth: usize) -> Triangle<IntPoly> {
    let c = catalan::<IntPoly>(depth).to_triangle("C");
    let p = Triangle::from_fn("P(r)", depth, |n, k| {
        pascal_entry(&IntPoly::var(), n, k)
    });
    c.matmul(&p).with_name("C(r)")
}

/// `r_catalan(r)` from its radical closed form
/// `d = (1 - 2rz - sqrt(1 - 4z)) / (2z (1 - r + r^2 z))`, `h = z d`.
///
/// Numerator and denominator share a factor of `z` (two factors when
/// `r = 1`); the shared power is cancelled before dividing. Rational
/// coefficients are required by the square root.
pub fn r_catalan_closed_form(r: &Ratio, order: usize) -> Result<RiordanArray<Ratio>> {
    let work = order + 2;
    let root = Series::from_fn(work, |n| match n {
        0 => Ratio::from_int(1),
        1 => Ratio::from_int(-4),
        _ => Ratio::from_int(0),
    })
    .sqrt()?;
    // 1 - 2rz - sqrt(1 - 4z)
    let numerator = Series::from_fn(work, |n| match n {
        0 => Ratio::from_int(1),
        1 => Ratio::from_int(-2).mul(r),
        _ => Ratio::from_int(0),
    })
    .sub(&root);
    // 2z (1 - r + r^2 z)
    let denominator = Series::from_fn(work, |n| match n {
        1 => Ratio::from_int(2).mul(&Ratio::from_int(1).sub(r)),
        2 => Ratio::from_int(2).mul(&r.mul(r)),
        _ => Ratio::from_int(0),
    });

    let mut cancel = 0;
    while numerator.coeff(cancel).is_zero() && denominator.coeff(cancel).is_zero() {
        cancel += 1;
    }
    let d = numerator
        .shift_down(cancel)
        .div(&denominator.shift_down(cancel))?
        .truncated(order);
    let h = d.shift_up(1).truncated(order);
    RiordanArray::new(d, h)
}

/// The inverse of `r_catalan(r)` from its rational closed form
/// `((1 + (r-1)z) / (1 + rz)^2, (z + (r-1)z^2) / (1 + rz)^2)`.
///
/// Both denominators have constant term 1, so this exists over every
/// coefficient ring, including symbolic `r`.
pub fn r_catalan_inverse_closed_form<R: Ring>(r: &R, order: usize) -> RiordanArray<R> {
    let r2 = r.mul(r);
    // (1 + rz)^2 = 1 + 2rz + r^2 z^2
    let denominator = Series::from_fn(order, |n| match n {
        0 => R::one(),
        1 => R::from_int(2).mul(r),
        2 => r2.clone(),
        _ => R::zero(),
    });
    let r_minus_1 = r.sub(&R::one());
    let num_d = Series::from_fn(order, |n| match n {
        0 => R::one(),
        1 => r_minus_1.clone(),
        _ => R::zero(),
    });
    let num_h = num_d.shift_up(1).truncated(order);
    let d = num_d
        .div(&denominator)
        .expect("denominator has constant term 1");
    let h = num_h
        .div(&denominator)
        .expect("denominator has constant term 1");
    RiordanArray::new(d, h).expect("closed form is a valid array")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    fn golden_catalan_rows() -> Vec<Vec<i64>> {
        vec![
            vec![1],
            vec![1, 1],
            vec![2, 2, 1],
            vec![5, 5, 3, 1],
            vec![14, 14, 9, 4, 1],
            vec![42, 42, 28, 14, 5, 1],
            vec![132, 132, 90, 48, 20, 6, 1],
        ]
    }

    fn golden_shapiro_rows() -> Vec<Vec<i64>> {
        vec![
            vec![1],
            vec![2, 1],
            vec![5, 4, 1],
            vec![14, 14, 6, 1],
            vec![42, 48, 27, 8, 1],
            vec![132, 165, 110, 44, 10, 1],
            vec![429, 572, 429, 208, 65, 12, 1],
        ]
    }

    #[test]
    fn catalan_numbers_match_known_values() {
        assert_eq!(
            catalan_numbers(9),
            [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862].map(int)
        );
    }

    #[test]
    fn catalan_gf_satisfies_fixed_point() {
        let order = 12;
        let c = catalan_gf::<BigInt>(order);
        let rhs = Series::one(order).add(&c.mul(&c).shift_up(1).truncated(order));
        assert_eq!(c, rhs, "c = 1 + z c^2");
    }

    #[test]
    fn catalan_gf_radical_route_agrees() {
        let via_recurrence = catalan_gf::<Ratio>(16);
        assert_eq!(via_recurrence, catalan_gf_sqrt(16));
    }

    #[test]
    fn catalan_triangle_matches_golden_rows() {
        let t = catalan::<BigInt>(6).to_triangle("C");
        for (n, row) in golden_catalan_rows().iter().enumerate() {
            let expect: Vec<BigInt> = row.iter().map(|&v| int(v)).collect();
            assert_eq!(t.row(n), &expect[..], "row {n}");
        }
    }

    #[test]
    fn shapiro_triangle_matches_golden_rows() {
        let t = shapiro::<BigInt>(6).to_triangle("B");
        for (n, row) in golden_shapiro_rows().iter().enumerate() {
            let expect: Vec<BigInt> = row.iter().map(|&v| int(v)).collect();
            assert_eq!(t.row(n), &expect[..], "row {n}");
        }
    }

    #[test]
    fn ballot_formula_matches_series_route() {
        let c = catalan::<BigInt>(12);
        for n in 0..=12 {
            for k in 0..=n {
                assert_eq!(ballot_entry(n, k), c.entry(n, k), "entry ({n}, {k})");
            }
        }
    }

    #[test]
    fn shapiro_formula_matches_series_route() {
        let b = shapiro::<BigInt>(12);
        for n in 0..=12 {
            for k in 0..=n {
                assert_eq!(shapiro_entry(n, k), b.entry(n, k), "entry ({n}, {k})");
            }
        }
    }

    #[test]
    fn shapiro_inverse_formula_matches_group_inverse() {
        let inv = shapiro::<BigInt>(10).inv().unwrap();
        for n in 0..=10 {
            for k in 0..=n {
                assert_eq!(shapiro_inverse_entry(n, k), inv.entry(n, k), "entry ({n}, {k})");
            }
        }
    }

    #[test]
    fn shapiro_inverse_golden_rows() {
        let t = Triangle::from_fn("B^-1", 4, shapiro_inverse_entry);
        assert_eq!(t.row(1), &[int(-2), int(1)]);
        assert_eq!(t.row(2), &[int(3), int(-4), int(1)]);
        assert_eq!(t.row(3), &[int(-4), int(10), int(-6), int(1)]);
        assert_eq!(t.row(4), &[int(5), int(-20), int(21), int(-8), int(1)]);
    }

    #[test]
    fn pascal_entry_matches_series_route() {
        let r = int(3);
        let p = pascal(&r, 9);
        for n in 0..=9 {
            for k in 0..=n {
                assert_eq!(pascal_entry(&r, n, k), p.entry(n, k), "entry ({n}, {k})");
            }
        }
    }

    #[test]
    fn pascal_at_zero_is_identity() {
        assert_eq!(pascal(&int(0), 6), RiordanArray::identity(6));
    }

    #[test]
    fn symbolic_family_rows_match_golden_polynomials() {
        let t = r_catalan_symbolic(4).to_triangle("C(r)");
        let rendered: Vec<Vec<String>> = t
            .rows()
            .iter()
            .map(|row| row.iter().map(|p| p.to_string()).collect())
            .collect();
        assert_eq!(rendered[0], ["1"]);
        assert_eq!(rendered[1], ["1 + r", "1"]);
        assert_eq!(rendered[2], ["2 + 2r + r^2", "2 + 2r", "1"]);
        assert_eq!(
            rendered[3],
            ["5 + 5r + 3r^2 + r^3", "5 + 6r + 3r^2", "3 + 3r", "1"]
        );
        assert_eq!(
            rendered[4],
            [
                "14 + 14r + 9r^2 + 4r^3 + r^4",
                "14 + 18r + 12r^2 + 4r^3",
                "9 + 12r + 6r^2",
                "4 + 4r",
                "1"
            ]
        );
    }

    #[test]
    fn family_interpolates_catalan_and_shapiro() {
        assert_eq!(r_catalan(&int(0), 10), catalan::<BigInt>(10));
        assert_eq!(r_catalan(&int(1), 10), shapiro::<BigInt>(10));
    }

    #[test]
    fn symbolic_entry_formula_matches_group_product() {
        let a = r_catalan_symbolic(10);
        for n in 0..=10 {
            for k in 0..=n {
                assert_eq!(r_catalan_entry(n, k), a.entry(n, k), "entry ({n}, {k})");
            }
        }
    }

    #[test]
    fn entry_formula_integrality_deep() {
        // The per-term exact divisions must stay exact well past test depth.
        for n in (0..=40).step_by(8) {
            for k in 0..=n {
                let _ = r_catalan_entry(n, k);
            }
        }
    }

    #[test]
    fn matrix_product_route_matches_series_route() {
        let via_matrices = r_catalan_triangle(8);
        let via_series = r_catalan_symbolic(8).to_triangle("C(r)");
        assert_eq!(via_matrices, via_series);
    }

    #[test]
    fn symbolic_inverse_entry_matches_matrix_inverse() {
        let inv = r_catalan_triangle(8).invert().unwrap();
        for n in 0..=8 {
            for k in 0..=n {
                assert_eq!(r_catalan_inverse_entry(n, k), inv.get(n, k), "entry ({n}, {k})");
            }
        }
    }

    #[test]
    fn closed_form_matches_group_product() {
        for r in [rat(0, 1), rat(1, 1), rat(2, 1), rat(-1, 1), rat(1, 2), rat(-3, 4)] {
            let closed = r_catalan_closed_form(&r, 10).unwrap();
            let product = r_catalan(&r, 10);
            assert_eq!(closed, product, "r = {r}");
        }
    }

    #[test]
    fn inverse_closed_form_matches_group_inverse() {
        // Rational route.
        for r in [rat(0, 1), rat(1, 1), rat(5, 1), rat(-2, 3)] {
            let closed = r_catalan_inverse_closed_form(&r, 9);
            let inv = r_catalan(&r, 9).inv().unwrap();
            assert_eq!(closed, inv, "r = {r}");
        }
        // Symbolic route: compare triangles, inverting the matrix directly.
        let closed = r_catalan_inverse_closed_form(&IntPoly::var(), 8).to_triangle("inv");
        let via_matrix = r_catalan_triangle(8).invert().unwrap();
        assert_eq!(closed, via_matrix);
    }

    #[test]
    fn inverse_closed_form_golden_entry() {
        let e = r_catalan_inverse_entry(2, 0);
        assert_eq!(e.to_string(), "2r + r^2");
    }
}
