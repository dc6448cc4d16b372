//! The inverse of the Shapiro triangle carries Chebyshev polynomials of the
//! second kind with a shifted argument.

use catalan_arrays::catalog::shapiro;
use catalan_arrays::exact::int;
use catalan_arrays::sheffer::{chebyshev_u_shifted, ShefferSeq};
use catalan_arrays::{BigInt, IntPoly, Ring};

fn main() {
    let depth = 12;
    let b_inv = shapiro::<BigInt>(depth)
        .to_triangle("B")
        .invert()
        .expect("unit diagonal");
    let seq = ShefferSeq::from_triangle(&b_inv);

    // row n of B^-1 holds the coefficients of U_n((x - 2) / 2)
    let shifted = chebyshev_u_shifted(depth);
    for n in 0..=depth {
        assert_eq!(seq.poly(n), &shifted[n]);
    }
    println!("rows of B^-1 encode U_n((x - 2)/2) up to n = {depth}");
    println!("p_3(x) = {}", seq.poly(3).render("x"));

    // same three-term recurrence as U_n: p_n = (x - 2) p_{n-1} - p_{n-2}
    let x_minus_2 = IntPoly::new(vec![int(-2), int(1)]);
    for n in 2..=depth {
        let expected = seq.poly(n - 1).mul(&x_minus_2).sub(seq.poly(n - 2));
        assert_eq!(*seq.poly(n), expected);
    }
    println!("three-term recurrence confirmed");

    // evaluations inherit the classical behaviour of U_n
    let at_two: Vec<BigInt> = seq.values(&int(2)); // U_n(0), period 4
    assert_eq!(&at_two[..6], [int(1), int(0), int(-1), int(0), int(1), int(0)]);
    let at_four: Vec<BigInt> = seq.values(&int(4)); // U_n(1) = n + 1
    for (n, v) in at_four.iter().enumerate() {
        assert_eq!(*v, int(n as i64 + 1));
    }
    println!("p_n(2) cycles with period 4, p_n(4) counts n + 1");
}
