//! Polynomial sequences read off triangle rows, the argument shift that
//! moves along the parameter family, and the change-of-basis identity.

use catalan_arrays::catalog::{catalan, r_catalan};
use catalan_arrays::exact::int;
use catalan_arrays::sheffer::ShefferSeq;
use catalan_arrays::{BigInt, Ring};

fn main() {
    let depth = 10;
    let c = catalan::<BigInt>(depth).to_triangle("C");
    let seq = ShefferSeq::from_triangle(&c);

    println!("first polynomials attached to C:");
    for n in 0..4 {
        println!("  p_{n}(x) = {}", seq.poly(n).render("x"));
    }

    // row n carries a monic polynomial of degree exactly n
    for (n, p) in seq.polys().iter().enumerate() {
        assert_eq!(p.degree(), Some(n));
        assert!(p.coeff(n).is_one());
    }

    // the sequence for C(r) is the sequence for C with the argument moved
    // by r, checked both valuewise and on coefficients
    let r = int(3);
    let shifted_seq = ShefferSeq::from_triangle(&r_catalan(&r, depth).to_triangle("C(3)"));
    let x = int(2);
    assert_eq!(shifted_seq.values(&x), seq.values(&(x.clone() + &r)));
    assert_eq!(shifted_seq.polys(), seq.shifted(&r).polys());
    println!("sequence for C(3) = sequence for C shifted by 3");

    // the polynomials form a basis: pushing their values at x through the
    // inverted triangle recovers the powers of x
    let inverse = c.invert().expect("unit diagonal");
    let image = inverse.apply(&seq.values(&x)).expect("rows are full");
    for (n, v) in image.iter().enumerate() {
        assert_eq!(*v, Ring::pow(&x, n));
    }
    println!("values p_n(2) map back to 2^n under the inverse of C");
}
