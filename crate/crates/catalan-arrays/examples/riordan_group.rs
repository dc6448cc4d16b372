//! Group structure on Riordan arrays: multiplication, inversion, and the
//! action on sequences.
//!
//! An array is a pair of truncated power series (d, h) with d(0) a unit,
//! h(0) = 0, and h'(0) a unit. The product is
//! (d1, h1)(d2, h2) = (d1 * d2(h1), h2(h1)), and the matrix it describes
//! is the usual matrix product.

use catalan_arrays::catalog::{catalan, pascal, shapiro};
use catalan_arrays::exact::int;
use catalan_arrays::{BigInt, RiordanArray, Series};

fn main() {
    let depth = 10;
    let c = catalan::<BigInt>(depth);
    let p = pascal(&int(1), depth);

    // multiplying the Aigner array by the Pascal array gives the Shapiro
    // array; this is the r = 1 member of the one-parameter family
    let product = c.mul(&p);
    assert_eq!(product, shapiro::<BigInt>(depth));
    println!("C * P(1) = B holds to depth {depth}");

    // inverse of C, computed through series reversion
    let c_inv = c.inv().expect("leading coefficients are units");
    println!("C^-1 has d = {:?}", heads(c_inv.d(), 4));
    println!("        h = {:?}", heads(c_inv.h(), 4));
    let id = RiordanArray::identity(depth);
    assert_eq!(c.mul(&c_inv), id);
    assert_eq!(c_inv.mul(&c), id);

    // the matrix action on a sequence equals the series action d * g(h);
    // applying C to the geometric vector 2^k sums weighted ballot numbers
    let powers_of_two = Series::geometric(&int(2), depth);
    let by_series = c.apply(&powers_of_two);
    let by_matrix = c.to_triangle("C").apply(powers_of_two.coeffs()).unwrap();
    assert_eq!(by_series.coeffs(), &by_matrix[..]);
    println!("C applied to (2^k): {:?}", heads(&by_series, 6));
}

fn heads(s: &Series<BigInt>, n: usize) -> Vec<String> {
    s.coeffs().iter().take(n).map(BigInt::to_string).collect()
}
