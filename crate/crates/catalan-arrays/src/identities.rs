//! The verification engine.
//!
//! Every closed form and summation identity the crate claims is encoded here
//! as a named, depth-parameterized check. A check recomputes both sides of
//! its identity through independent routes (entry formula vs. series
//! product, matrix inverse vs. radical closed form, polynomial recurrence
//! vs. row extraction) and compares exactly; the result is an
//! [`IdentityReport`] carrying the first counterexample if one exists.
//!
//! Conventions:
//!
//! - depth is inclusive: indices `0 ..= depth` are checked,
//! - comparisons are exact, never approximate,
//! - iteration is lexicographic in `(n, k)`, so a failing report always
//!   carries the smallest failing index,
//! - Fibonacci numbers are indexed `F_1 = F_2 = 1`.

use std::fmt;

use crate::catalog::{
    ballot_entry, catalan, catalan_gf, catalan_gf_sqrt, catalan_numbers, pascal, pascal_entry,
    r_catalan, r_catalan_closed_form, r_catalan_entry, r_catalan_inverse_closed_form,
    r_catalan_inverse_entry, r_catalan_symbolic, r_catalan_triangle, shapiro, shapiro_entry,
    shapiro_inverse_entry,
};
use crate::exact::{binom, BigInt, IntPoly, Ratio, Ring};
use crate::riordan::{RiordanArray, Triangle};
use crate::series::Series;
use crate::sheffer::{chebyshev_u_shifted, sheffer_gf, ShefferSeq};

/// Outcome of a single identity check.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Status {
    Pass,
    Fail,
}

/// The smallest index at which an identity failed, with both sides rendered.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Failure {
    pub n: usize,
    pub k: Option<usize>,
    pub lhs: String,
    pub rhs: String,
}

/// Result of one named check at one parameter setting.
#[derive(Clone, PartialEq, Debug)]
pub struct IdentityReport {
    pub name: String,
    pub depth: usize,
    pub params: Vec<(String, String)>,
    pub status: Status,
    pub first_failure: Option<Failure>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Accumulates comparisons for one report, keeping only the first mismatch.
struct Check {
    name: String,
    depth: usize,
    params: Vec<(String, String)>,
    failure: Option<Failure>,
}

impl Check {
    fn new(name: impl Into<String>, depth: usize) -> Self {
        Check {
            name: name.into(),
            depth,
            params: Vec::new(),
            failure: None,
        }
    }

    fn with_param(mut self, key: &str, value: impl fmt::Display) -> Self {
        self.params.push((key.into(), value.to_string()));
        self
    }

    /// True while no mismatch has been recorded; callers may break early.
    fn ok(&self) -> bool {
        self.failure.is_none()
    }

    fn compare<T: PartialEq + fmt::Display>(&mut self, n: usize, k: Option<usize>, lhs: &T, rhs: &T) {
        if self.failure.is_none() && lhs != rhs {
            self.failure = Some(Failure {
                n,
                k,
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
    }

    /// Comparison on pre-rendered text, for values whose `Display` is not
    /// the right notation (e.g. polynomials in `x`).
    fn compare_text(&mut self, n: usize, k: Option<usize>, lhs: &str, rhs: &str) {
        if self.failure.is_none() && lhs != rhs {
            self.failure = Some(Failure {
                n,
                k,
                lhs: lhs.into(),
                rhs: rhs.into(),
            });
        }
    }

    fn finish(self) -> IdentityReport {
        IdentityReport {
            name: self.name,
            depth: self.depth,
            params: self.params,
            status: if self.failure.is_none() {
                Status::Pass
            } else {
                Status::Fail
            },
            first_failure: self.failure,
        }
    }
}

/// Memoized Fibonacci numbers with `F_1 = F_2 = 1` (and `F_0 = 0`).
pub struct FibGen {
    memo: Vec<BigInt>,
}

impl FibGen {
    pub fn new() -> Self {
        FibGen {
            memo: vec![BigInt::from(0), BigInt::from(1)],
        }
    }

    pub fn get(&mut self, n: usize) -> BigInt {
        while self.memo.len() <= n {
            let next = &self.memo[self.memo.len() - 1] + &self.memo[self.memo.len() - 2];
            self.memo.push(next);
        }
        self.memo[n].clone()
    }
}

impl Default for FibGen {
    fn default() -> Self {
        FibGen::new()
    }
}

fn int(n: i64) -> BigInt {
    BigInt::from(n)
}

/// Symbolic work is capped independently of the requested depth: degrees and
/// coefficient sizes grow quadratically, and the formula-vs-product
/// equivalence is already conclusive well below numeric depths.
fn symbolic_depth(depth: usize) -> usize {
    depth.min(24)
}

/// The Catalan generating function is internally consistent: the
/// convolution recurrence, the radical closed form, and the fixed-point
/// equation `c = 1 + z c^2` all agree.
pub fn check_catalan_gf(depth: usize) -> IdentityReport {
    let mut c = Check::new("catalan-gf", depth);
    let recurrence = catalan_gf::<Ratio>(depth);
    let radical = catalan_gf_sqrt(depth);
    for n in 0..=depth {
        c.compare(n, None, recurrence.coeff(n), radical.coeff(n));
    }
    let cz = catalan_gf::<BigInt>(depth);
    let fixed_point = Series::one(depth).add(&cz.mul(&cz).shift_up(1).truncated(depth));
    for n in 0..=depth {
        c.compare(n, None, cz.coeff(n), fixed_point.coeff(n));
    }
    c.finish()
}

/// Closed entry formulas for the two Catalan triangles and the inverse of
/// the second: ballot numbers `((k+1)/(n+1)) binom(2n-k, n)`,
/// `((k+1)/(n+1)) binom(2n+2, n-k)`, and `(-1)^(n-k) binom(n+k+1, n-k)`,
/// each against the series-pair definition.
pub fn check_entry_formulas(depth: usize) -> IdentityReport {
    let mut c = Check::new("ballot", depth);
    let cat = catalan::<BigInt>(depth).to_triangle("C");
    let sha = shapiro::<BigInt>(depth).to_triangle("B");
    let sha_inv = sha.invert().expect("unit diagonal");
    for n in 0..=depth {
        for k in 0..=n {
            c.compare(n, Some(k), &ballot_entry(n, k), &cat.get(n, k));
            c.compare(n, Some(k), &shapiro_entry(n, k), &sha.get(n, k));
            c.compare(n, Some(k), &shapiro_inverse_entry(n, k), &sha_inv.get(n, k));
        }
        if !c.ok() {
            break;
        }
    }
    c.finish()
}

/// `binom(n+k+1, n-k) = sum_i binom(n, i) binom(k+1, n-k-i)` by direct
/// summation (the Vandermonde convolution behind the inverse entries).
pub fn check_binomial_sum(depth: usize) -> IdentityReport {
    let mut c = Check::new("binomial-sum", depth);
    for n in 0..=depth as i64 {
        for k in 0..=n {
            let mut sum = int(0);
            for i in 0..=(n - k) {
                sum += binom(n, i) * binom(k + 1, n - k - i);
            }
            c.compare(n as usize, Some(k as usize), &binom(n + k + 1, n - k), &sum);
        }
        if !c.ok() {
            break;
        }
    }
    c.finish()
}

/// The family interpolates the named triangles: parameter 0 gives the
/// Catalan array, parameter 1 the Shapiro array, and `pascal(0)` is the
/// group identity.
pub fn check_specialization(depth: usize) -> IdentityReport {
    let mut c = Check::new("specialization", depth);
    let at0 = r_catalan(&int(0), depth).to_triangle("C(0)");
    let at1 = r_catalan(&int(1), depth).to_triangle("C(1)");
    let cat = catalan::<BigInt>(depth).to_triangle("C");
    let sha = shapiro::<BigInt>(depth).to_triangle("B");
    let p0 = pascal(&int(0), depth).to_triangle("P(0)");
    let id = RiordanArray::<BigInt>::identity(depth).to_triangle("I");
    for n in 0..=depth {
        for k in 0..=n {
            c.compare(n, Some(k), &at0.get(n, k), &cat.get(n, k));
            c.compare(n, Some(k), &at1.get(n, k), &sha.get(n, k));
            c.compare(n, Some(k), &p0.get(n, k), &id.get(n, k));
        }
        if !c.ok() {
            break;
        }
    }
    c.finish()
}

/// The generalized Pascal arrays form a one-parameter subgroup:
/// `pascal(a) * pascal(b) = pascal(a+b)`, checked against the product
/// array and the entry formula `binom(n, k) (a+b)^(n-k)`.
pub fn check_pascal_additivity(depth: usize) -> IdentityReport {
    let samples: [(i64, i64); 4] = [(1, 1), (2, 3), (-1, 4), (0, 5)];
    let mut c = Check::new("pascal-additivity", depth);
    for (a, b) in samples {
        let product = pascal(&int(a), depth).mul(&pascal(&int(b), depth));
        let direct = pascal(&int(a + b), depth);
        let pt = product.to_triangle("P(a)P(b)");
        let dt = direct.to_triangle("P(a+b)");
        for n in 0..=depth {
            for k in 0..=n {
                c.compare(n, Some(k), &pt.get(n, k), &dt.get(n, k));
                c.compare(n, Some(k), &pt.get(n, k), &pascal_entry(&int(a + b), n, k));
            }
            if !c.ok() {
                break;
            }
        }
    }
    c.finish()
}

/// The explicit polynomial entry formula for the one-parameter family
/// matches the group product `catalan * pascal(r)`: symbolically (capped
/// depth), via the explicit matrix product, and numerically at several
/// integer parameters to full depth.
pub fn check_family_entries(depth: usize) -> IdentityReport {
    let sym = symbolic_depth(depth);
    let mut c = Check::new("family-entries", depth).with_param("symbolic-depth", sym);
    let series_route = r_catalan_symbolic(sym).to_triangle("C(r)");
    let matrix_route = r_catalan_triangle(sym);
    for n in 0..=sym {
        for k in 0..=n {
            let formula = r_catalan_entry(n, k);
            c.compare(n, Some(k), &formula, &series_route.get(n, k));
            c.compare(n, Some(k), &formula, &matrix_route.get(n, k));
        }
        if !c.ok() {
            break;
        }
    }
    for r in [2i64, -1, 5] {
        let rv = int(r);
        let t = r_catalan(&rv, depth).to_triangle("C(r)");
        for n in 0..=depth {
            for k in 0..=n {
                c.compare(n, Some(k), &r_catalan_entry(n, k).eval(&rv), &t.get(n, k));
            }
            if !c.ok() {
                break;
            }
        }
    }
    c.finish()
}

/// The polynomial entry formula for the family inverse matches triangular
/// inversion, and the two entry formulas multiply to the identity matrix.
pub fn check_family_inverse_entries(depth: usize) -> IdentityReport {
    let sym = symbolic_depth(depth);
    let mut c = Check::new("family-inverse-entries", depth).with_param("symbolic-depth", sym);
    let inverted = r_catalan_triangle(sym).invert().expect("unit diagonal");
    for n in 0..=sym {
        for k in 0..=n {
            c.compare(n, Some(k), &r_catalan_inverse_entry(n, k), &inverted.get(n, k));
        }
        if !c.ok() {
            break;
        }
    }
    let forward = Triangle::from_fn("C(r)", sym, r_catalan_entry);
    let backward = Triangle::from_fn("C(r)^-1", sym, r_catalan_inverse_entry);
    let product = forward.matmul(&backward);
    for n in 0..=sym {
        for k in 0..=n {
            let expect = if n == k { IntPoly::one() } else { IntPoly::zero() };
            c.compare(n, Some(k), &product.get(n, k), &expect);
        }
        if !c.ok() {
            break;
        }
    }
    for r in [1i64, -2, 4] {
        let rv = int(r);
        let inv = r_catalan(&rv, depth)
            .inv()
            .expect("family arrays are invertible")
            .to_triangle("C(r)^-1");
        for n in 0..=depth {
            for k in 0..=n {
                c.compare(n, Some(k), &r_catalan_inverse_entry(n, k).eval(&rv), &inv.get(n, k));
            }
            if !c.ok() {
                break;
            }
        }
    }
    c.finish()
}

/// The radical closed form of the family (numerator `1 - 2rz - sqrt(1-4z)`)
/// equals the group product, coefficient by coefficient, at rational
/// parameters including the degenerate cancellation at `r = 1`.
pub fn check_closed_form(depth: usize) -> IdentityReport {
    let samples = [
        Ratio::from_int(0),
        Ratio::from_int(1),
        Ratio::from_int(2),
        Ratio::from_int(-1),
        Ratio::new(int(1), int(2)),
        Ratio::new(int(-3), int(4)),
    ];
    let mut c = Check::new("closed-form", depth);
    for r in &samples {
        match r_catalan_closed_form(r, depth) {
            Ok(closed) => {
                let product = r_catalan(r, depth);
                for n in 0..=depth {
                    c.compare(n, None, closed.d().coeff(n), product.d().coeff(n));
                    c.compare(n, None, closed.h().coeff(n), product.h().coeff(n));
                }
            }
            Err(e) => c.compare_text(0, None, &format!("error: {e}"), "a valid array"),
        }
    }
    c.finish()
}

/// The rational closed form of the family inverse equals the group inverse:
/// symbolically over polynomial coefficients and numerically to full depth.
pub fn check_inverse_closed_form(depth: usize) -> IdentityReport {
    let sym = symbolic_depth(depth);
    let mut c = Check::new("inverse-closed-form", depth).with_param("symbolic-depth", sym);
    let closed = r_catalan_inverse_closed_form(&IntPoly::var(), sym);
    let group = r_catalan_symbolic(sym)
        .inv()
        .expect("family arrays are invertible");
    for n in 0..=sym {
        c.compare(n, None, closed.d().coeff(n), group.d().coeff(n));
        c.compare(n, None, closed.h().coeff(n), group.h().coeff(n));
    }
    for r in [0i64, 1, 5, -2] {
        let rv = int(r);
        let closed = r_catalan_inverse_closed_form(&rv, depth);
        let group = r_catalan(&rv, depth)
            .inv()
            .expect("family arrays are invertible");
        for n in 0..=depth {
            c.compare(n, None, closed.d().coeff(n), group.d().coeff(n));
            c.compare(n, None, closed.h().coeff(n), group.h().coeff(n));
        }
    }
    c.finish()
}

/// Column 0 of the family: starts `1, 3, 10, 35, 126` at parameter 2 and
/// `1, 4, 17, 74, 326` at parameter 3; at parameter 1 it is the shifted
/// Catalan sequence; the constant coefficient of the column polynomial is
/// the Catalan number itself.
pub fn check_column_zero(depth: usize) -> IdentityReport {
    let mut c = Check::new("column-zero", depth);
    let catalans = catalan_numbers(depth + 1);
    let prefix2: [i64; 5] = [1, 3, 10, 35, 126];
    let prefix3: [i64; 5] = [1, 4, 17, 74, 326];
    for n in 0..=depth {
        let poly = r_catalan_entry(n, 0);
        if n < 5 {
            c.compare(n, None, &poly.eval(&int(2)), &int(prefix2[n]));
            c.compare(n, None, &poly.eval(&int(3)), &int(prefix3[n]));
        }
        c.compare(n, None, &poly.eval(&int(1)), &catalans[n + 1]);
        c.compare(n, None, &poly.coeff(0), &catalans[n]);
    }
    c.finish()
}

/// Row sums at parameter `r` equal column 0 at parameter `r + 1`, in both
/// the scalar form (entry polynomials evaluated and summed) and the matrix
/// form (triangle row sums against the shifted triangle's first column).
pub fn check_row_sums(r: &BigInt, depth: usize) -> IdentityReport {
    let mut c = Check::new("row-sums", depth).with_param("r", r);
    let r_plus_1 = r.clone() + 1;
    for n in 0..=depth {
        let mut sum = int(0);
        for k in 0..=n {
            sum += r_catalan_entry(n, k).eval(r);
        }
        c.compare(n, None, &sum, &r_catalan_entry(n, 0).eval(&r_plus_1));
    }
    let sums = r_catalan(r, depth).to_triangle("C(r)").row_sums();
    let column = r_catalan(&r_plus_1, depth).to_triangle("C(r+1)").column(0);
    for n in 0..=depth {
        c.compare(n, None, &sums[n], &column[n]);
    }
    c.finish()
}

/// Two Fibonacci summations: `sum_k binom(k+1, n-k) = F_(n+2)` and
/// `sum_k ((k+1)/(n+1)) binom(2n-k, n) (-1)^(n-k) F_(k+2) = 1`.
pub fn check_fibonacci_pair(depth: usize) -> IdentityReport {
    let mut c = Check::new("fibonacci-pair", depth);
    let mut fib = FibGen::new();
    for n in 0..=depth {
        let mut first = int(0);
        let mut second = int(0);
        for k in 0..=n {
            first += binom(k as i64 + 1, (n - k) as i64);
            let sign = if (n - k) % 2 == 0 { 1 } else { -1 };
            second += ballot_entry(n, k) * int(sign) * fib.get(k + 2);
        }
        c.compare(n, None, &first, &fib.get(n + 2));
        c.compare(n, None, &second, &int(1));
    }
    c.finish()
}

/// Applying the Shapiro triangle to the value vector of its inverse
/// sequence at `x` yields the powers of `x`. For `x` in `{2, 3, 4}` the
/// input vector itself is checked against its known shape (period four
/// `1, 0, -1, 0`; period six `1, 1, 0, -1, -1, 0`; the natural numbers),
/// and at `x = 4` the scalar form
/// `sum_k ((k+1)^2/(n+1)) binom(2n+2, n-k) = 4^n` is recomputed directly.
pub fn check_power_sequences(x: &BigInt, depth: usize) -> IdentityReport {
    let mut c = Check::new("power", depth).with_param("x", x);
    let b = shapiro::<BigInt>(depth).to_triangle("B");
    let values = ShefferSeq::from_triangle(&b.invert().expect("unit diagonal")).values(x);

    if *x == int(2) {
        let period = [1i64, 0, -1, 0];
        for (n, v) in values.iter().enumerate() {
            c.compare(n, None, v, &int(period[n % 4]));
        }
    } else if *x == int(3) {
        let period = [1i64, 1, 0, -1, -1, 0];
        for (n, v) in values.iter().enumerate() {
            c.compare(n, None, v, &int(period[n % 6]));
        }
    } else if *x == int(4) {
        for (n, v) in values.iter().enumerate() {
            c.compare(n, None, v, &int(n as i64 + 1));
        }
        for n in 0..=depth {
            let mut sum = int(0);
            for k in 0..=n {
                sum += shapiro_entry(n, k) * int(k as i64 + 1);
            }
            c.compare(n, None, &sum, &Ring::pow(&int(4), n));
        }
    }

    let image = b.apply(&values).expect("vector spans all rows");
    for (n, v) in image.iter().enumerate() {
        c.compare(n, None, v, &Ring::pow(x, n));
    }
    c.finish()
}

/// `sum_k ((k+1)/(n+1)) binom(2n+2, n-k) F_(2k+2) = 5^n`.
pub fn check_fib_power(depth: usize) -> IdentityReport {
    let mut c = Check::new("fib-power", depth);
    let mut fib = FibGen::new();
    for n in 0..=depth {
        let mut sum = int(0);
        for k in 0..=n {
            sum += shapiro_entry(n, k) * fib.get(2 * k + 2);
        }
        c.compare(n, None, &sum, &Ring::pow(&int(5), n));
    }
    c.finish()
}

/// Closed forms for even- and odd-indexed Fibonacci numbers:
/// `F_(2n+2) = (-1)^n sum_k (binom(n+k+2, n-k) - binom(n+k+1, n-k-1)) (-5)^k`
/// and
/// `F_(2n+1) = (-1)^n sum_k (binom(n+k+2, n-k) - binom(n+k, n-k-2)) (-5)^k`,
/// against the memoized recurrence. Out-of-range binomials vanish.
pub fn check_fib_closed_forms(depth: usize) -> IdentityReport {
    let mut c = Check::new("fib-closed-forms", depth);
    let mut fib = FibGen::new();
    for n in 0..=depth {
        let ni = n as i64;
        let sign = if n % 2 == 0 { 1 } else { -1 };
        let mut even = int(0);
        let mut odd = int(0);
        for k in 0..=ni {
            let weight = Ring::pow(&int(-5), k as usize);
            even += (binom(ni + k + 2, ni - k) - binom(ni + k + 1, ni - k - 1)) * &weight;
            odd += (binom(ni + k + 2, ni - k) - binom(ni + k, ni - k - 2)) * &weight;
        }
        c.compare(n, None, &(even * int(sign)), &fib.get(2 * n + 2));
        c.compare(n, None, &(odd * int(sign)), &fib.get(2 * n + 1));
    }
    c.finish()
}

/// The Shapiro triangle satisfies
/// `B(n, k) = B(n-1, k-1) + 2 B(n-1, k) + B(n-1, k+1)` with out-of-triangle
/// entries read as zero, including the `k = 0` boundary.
pub fn check_shapiro_recurrence(depth: usize) -> IdentityReport {
    let mut c = Check::new("shapiro-recurrence", depth);
    let b = shapiro::<BigInt>(depth).to_triangle("B");
    for n in 1..=depth {
        for k in 0..=n {
            let left = if k > 0 { b.get(n - 1, k - 1) } else { int(0) };
            let expect = left + int(2) * b.get(n - 1, k) + b.get(n - 1, k + 1);
            c.compare(n, Some(k), &b.get(n, k), &expect);
        }
        if !c.ok() {
            break;
        }
    }
    c.finish()
}

/// Mutually inverse bases: for each catalog triangle, applying it to the
/// value vector of its inverse's polynomial sequence returns the monomial
/// values `(1, x, x^2, ...)`, for every integer `x` in `-3 ..= 5`.
pub fn check_basis(depth: usize) -> IdentityReport {
    let mut c = Check::new("basis", depth);
    let triangles = [
        catalan::<BigInt>(depth).to_triangle("C"),
        shapiro::<BigInt>(depth).to_triangle("B"),
        r_catalan(&int(2), depth).to_triangle("C(2)"),
        r_catalan(&int(-1), depth).to_triangle("C(-1)"),
    ];
    for t in &triangles {
        let inv_seq = ShefferSeq::from_triangle(&t.invert().expect("unit diagonal"));
        for x in -3i64..=5 {
            let xv = int(x);
            let image = t.apply(&inv_seq.values(&xv)).expect("vector spans all rows");
            for (n, v) in image.iter().enumerate() {
                c.compare(n, None, v, &Ring::pow(&xv, n));
            }
            if !c.ok() {
                break;
            }
        }
    }
    c.finish()
}

/// The inverse-Shapiro polynomial sequence is the Chebyshev-U sequence with
/// argument `(x-2)/2`, and satisfies the three-term recursion
/// `p_n = (x-2) p_(n-1) - p_(n-2)` with `p_0 = 1`, `p_1 = x - 2`.
pub fn check_chebyshev(depth: usize) -> IdentityReport {
    let mut c = Check::new("chebyshev", depth);
    let rows = Triangle::from_fn("B^-1", depth, shapiro_inverse_entry);
    let seq = ShefferSeq::from_triangle(&rows);
    let shifted = chebyshev_u_shifted(depth);
    for n in 0..=depth {
        c.compare_text(n, None, &seq.poly(n).render("x"), &shifted[n].render("x"));
    }
    c.compare_text(0, None, &seq.poly(0).render("x"), "1");
    if depth >= 1 {
        c.compare_text(1, None, &seq.poly(1).render("x"), "-2 + x");
    }
    let x_minus_2 = IntPoly::new(vec![int(-2), int(1)]);
    for n in 2..=depth {
        let recursed = x_minus_2.mul(seq.poly(n - 1)).sub(seq.poly(n - 2));
        c.compare_text(n, None, &seq.poly(n).render("x"), &recursed.render("x"));
    }
    c.finish()
}

/// Generating functions of the polynomial sequences: for parameters in
/// `{0, 1, 2, -1}` and rational `x` in `{-2, -1, 0, 1/2, 2, 3, 4, 5}`, row
/// evaluations agree with `d/(1-xh)`, with the closed form
/// `c/(1-(x+r)zc)`, and on the inverse side with
/// `(1+(r-1)z) / (1 + (2r-x)z + (r^2-(r-1)x)z^2)`; at parameter 1 also with
/// `1/(1-(x-2)z+z^2)`.
pub fn check_gf(depth: usize) -> IdentityReport {
    let mut c = Check::new("gf", depth);
    let xs: Vec<Ratio> = [-2i64, -1, 0, 2, 3, 4, 5]
        .iter()
        .map(|&v| Ratio::from_int(v))
        .chain([Ratio::new(int(1), int(2))])
        .collect();
    let cz = catalan_gf::<Ratio>(depth);
    let zc = cz.shift_up(1).truncated(depth);
    for r in [0i64, 1, 2, -1] {
        let rv = Ratio::from_int(r);
        let family = r_catalan(&rv, depth);
        let seq = ShefferSeq::from_triangle(&family.to_triangle("C(r)"));
        let inverse = family.inv().expect("family arrays are invertible");
        let inv_seq = ShefferSeq::from_triangle(&inverse.to_triangle("C(r)^-1"));
        for x in &xs {
            let values = seq.values(x);
            let direct = sheffer_gf(&family, x);
            let closed = cz
                .div(&Series::one(depth).sub(&zc.scale(&(x + &rv))))
                .expect("unit constant term");
            for n in 0..=depth {
                c.compare(n, None, direct.coeff(n), &values[n]);
                c.compare(n, None, closed.coeff(n), &values[n]);
            }

            let inv_values = inv_seq.values(x);
            let inv_direct = sheffer_gf(&inverse, x);
            let two_r_minus_x = Ratio::from_int(2) * &rv - x;
            let quad = &rv * &rv - (&rv - Ratio::from_int(1)) * x;
            let numerator = Series::from_fn(depth, |n| match n {
                0 => Ratio::from_int(1),
                1 => &rv - Ratio::from_int(1),
                _ => Ratio::from_int(0),
            });
            let denominator = Series::from_fn(depth, |n| match n {
                0 => Ratio::from_int(1),
                1 => two_r_minus_x.clone(),
                2 => quad.clone(),
                _ => Ratio::from_int(0),
            });
            let inv_closed = numerator.div(&denominator).expect("unit constant term");
            for n in 0..=depth {
                c.compare(n, None, inv_direct.coeff(n), &inv_values[n]);
                c.compare(n, None, inv_closed.coeff(n), &inv_values[n]);
            }

            if r == 1 {
                let chebyshev_den = Series::from_fn(depth, |n| match n {
                    0 => Ratio::from_int(1),
                    1 => Ratio::from_int(2) - x,
                    2 => Ratio::from_int(1),
                    _ => Ratio::from_int(0),
                });
                let bridge = Series::one(depth)
                    .div(&chebyshev_den)
                    .expect("unit constant term");
                for n in 0..=depth {
                    c.compare(n, None, bridge.coeff(n), &inv_values[n]);
                }
            }
            if !c.ok() {
                break;
            }
        }
    }
    c.finish()
}

/// Shifting the polynomial argument by `r` equals multiplying the array by
/// `pascal(r)`: `p_n` of the family at `(x)` equals `p_n` of the base at
/// `(x + r)`, for both catalog base arrays.
pub fn check_shift(r: &Ratio, x: &Ratio, depth: usize) -> IdentityReport {
    let mut c = Check::new("shift", depth).with_param("r", r).with_param("x", x);
    let bases = [catalan::<Ratio>(depth), shapiro::<Ratio>(depth)];
    let shifted_x = x + r;
    for base in &bases {
        let family = base.mul(&pascal(r, depth));
        let lhs = ShefferSeq::from_triangle(&family.to_triangle("R(r)")).values(x);
        let rhs = ShefferSeq::from_triangle(&base.to_triangle("R")).values(&shifted_x);
        for n in 0..=depth {
            c.compare(n, None, &lhs[n], &rhs[n]);
        }
    }
    c.finish()
}

/// Shape of every catalog polynomial sequence: `p_n` has degree `n`, is
/// monic, and `p_n(0)` is the column-0 entry.
pub fn check_sheffer_shape(depth: usize) -> IdentityReport {
    let mut c = Check::new("sheffer-shape", depth);
    let cat = catalan::<BigInt>(depth).to_triangle("C");
    let sha = shapiro::<BigInt>(depth).to_triangle("B");
    let triangles = [
        cat.clone(),
        sha.clone(),
        r_catalan(&int(2), depth).to_triangle("C(2)"),
        r_catalan(&int(-1), depth).to_triangle("C(-1)"),
        cat.invert().expect("unit diagonal"),
        sha.invert().expect("unit diagonal"),
    ];
    for t in &triangles {
        let seq = ShefferSeq::from_triangle(t);
        for n in 0..=depth {
            let p = seq.poly(n);
            c.compare_text(n, None, &format!("degree {:?}", p.degree()), &format!("degree {:?}", Some(n)));
            c.compare(n, None, &p.coeff(n), &int(1));
            c.compare(n, None, &p.eval(&int(0)), &t.get(n, 0));
        }
    }
    c.finish()
}

/// Runs the complete catalog of checks at one depth, in declaration order,
/// with the parameter sets used throughout the crate's tests.
pub fn run_all(depth: usize) -> Vec<IdentityReport> {
    let mut reports = vec![
        check_catalan_gf(depth),
        check_entry_formulas(depth),
        check_binomial_sum(depth),
        check_specialization(depth),
        check_pascal_additivity(depth),
        check_family_entries(depth),
        check_family_inverse_entries(depth),
        check_closed_form(depth),
        check_inverse_closed_form(depth),
        check_column_zero(depth),
    ];
    for r in -2i64..=3 {
        reports.push(check_row_sums(&int(r), depth));
    }
    reports.push(check_fibonacci_pair(depth));
    for x in [2i64, 3, 4] {
        reports.push(check_power_sequences(&int(x), depth));
    }
    reports.push(check_fib_power(depth));
    reports.push(check_fib_closed_forms(depth));
    reports.push(check_shapiro_recurrence(depth));
    reports.push(check_basis(depth));
    reports.push(check_chebyshev(depth));
    reports.push(check_gf(depth));
    reports.push(check_sheffer_shape(depth));
    for (r, x) in [(1i64, 0i64), (0, 0), (2, -1)] {
        reports.push(check_shift(&Ratio::from_int(r), &Ratio::from_int(x), depth));
    }
    reports
}

pub fn all_passed(reports: &[IdentityReport]) -> bool {
    reports.iter().all(IdentityReport::passed)
}
