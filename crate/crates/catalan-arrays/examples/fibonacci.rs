//! Fibonacci and pure power sequences hiding inside the triangles.

use catalan_arrays::catalog::{catalan, shapiro};
use catalan_arrays::exact::{binom, int};
use catalan_arrays::{BigInt, Ring};

fn fib(n: usize) -> BigInt {
    let (mut a, mut b) = (int(0), int(1));
    for _ in 0..n {
        let next = &a + &b;
        a = b;
        b = next;
    }
    a
}

fn main() {
    let depth = 15;

    // shallow diagonal sums of binomials produce Fibonacci numbers
    for n in 0..=depth {
        let sum: BigInt = (0..=n).map(|k| binom(k as i64 + 1, (n - k) as i64)).sum();
        assert_eq!(sum, fib(n + 2));
    }
    println!("sum_k binom(k+1, n-k) = F(n+2) up to n = {depth}");

    // the ballot triangle collapses alternating-sign Fibonacci numbers to
    // a bare sign: sum_k (-1)^(n-k) C(n,k) F(k+2) = 1
    let c = catalan::<BigInt>(depth).to_triangle("C");
    let signed_fibs: Vec<BigInt> = (0..=depth)
        .map(|k| if k % 2 == 0 { fib(k + 2) } else { -fib(k + 2) })
        .collect();
    for (n, v) in c.apply(&signed_fibs).unwrap().iter().enumerate() {
        assert_eq!(*v, int(if n % 2 == 0 { 1 } else { -1 }));
    }
    println!("sum_k (-1)^(n-k) C(n,k) F(k+2) = 1");

    // B turns the natural numbers into powers of 4 and the even-indexed
    // Fibonacci numbers into powers of 5
    let b = shapiro::<BigInt>(depth).to_triangle("B");
    let naturals: Vec<BigInt> = (0..=depth).map(|k| int(k as i64 + 1)).collect();
    let even_fibs: Vec<BigInt> = (0..=depth).map(|k| fib(2 * k + 2)).collect();
    let fours = b.apply(&naturals).unwrap();
    let fives = b.apply(&even_fibs).unwrap();
    for n in 0..=depth {
        assert_eq!(fours[n], Ring::pow(&int(4), n));
        assert_eq!(fives[n], Ring::pow(&int(5), n));
    }
    println!("B * (k+1) = 4^n and B * F(2k+2) = 5^n");
}
