//! The one-parameter family C(r) = C * P(r): symbolic entries, integer and
//! rational specializations, closed forms, and the row-sum shift.

use catalan_arrays::catalog::{
    catalan, r_catalan, r_catalan_closed_form, r_catalan_inverse_closed_form, r_catalan_symbolic,
    shapiro,
};
use catalan_arrays::exact::{int, rat};
use catalan_arrays::{BigInt, RiordanArray};

fn main() {
    let depth = 8;

    // every entry is a polynomial in the parameter with nonnegative
    // integer coefficients
    let symbolic = r_catalan_symbolic(depth).to_triangle("C(r)");
    println!("row 4 of C(r):");
    for k in 0..=4 {
        println!("  ({}, {k})  {}", 4, symbolic.get(4, k).render("r"));
    }

    // r = 0 and r = 1 are the two classical triangles
    assert_eq!(r_catalan(&int(0), depth), catalan(depth));
    assert_eq!(r_catalan(&int(1), depth), shapiro(depth));
    println!("C(0) = C and C(1) = B");

    // substituting a value into the symbolic entries agrees with building
    // the array at that value
    let at_three = symbolic.map(|p| p.eval(&int(3)));
    assert_eq!(at_three, r_catalan(&int(3), depth).to_triangle("C(3)"));
    println!("C(r) at r = 3 matches C * P(3)");

    // the defining pair (d, h) has a radical closed form over the rationals
    let closed = r_catalan_closed_form(&rat(1, 2), depth).expect("defined at 1/2");
    assert_eq!(closed, r_catalan(&rat(1, 2), depth));
    println!("closed form agrees with the product at r = 1/2");

    // the inverse has a rational closed form with no division at all, so it
    // works over the integers directly
    let a = r_catalan(&int(2), depth);
    let a_inv = r_catalan_inverse_closed_form(&int(2), depth);
    assert_eq!(a.mul(&a_inv), RiordanArray::identity(depth));
    println!("closed-form inverse of C(2) verified against the identity");

    // summing row n of C(r) lands on entry (n, 0) of C(r + 1)
    let sums = a.to_triangle("C(2)").row_sums();
    assert_eq!(sums, r_catalan(&int(3), depth).to_triangle("C(3)").column(0));
    let rendered: Vec<String> = sums.iter().map(BigInt::to_string).collect();
    println!("row sums of C(2): {}", rendered.join(" "));
}
