//! The two Catalan triangles and their entry formulas.

use catalan_arrays::catalog::{ballot_entry, catalan, shapiro, shapiro_entry};
use catalan_arrays::cli::output::triangle_text;
use catalan_arrays::BigInt;

fn main() {
    let c = catalan::<BigInt>(6).to_triangle("C");
    println!("Aigner array C = (c, zc), the ballot numbers:");
    print!("{}", triangle_text(&c));

    let b = shapiro::<BigInt>(6).to_triangle("B");
    println!("\nShapiro array B = (c^2, zc^2):");
    print!("{}", triangle_text(&b));

    // both triangles have one-line entry formulas
    assert_eq!(c.get(6, 2), ballot_entry(6, 2));
    assert_eq!(b.get(6, 2), shapiro_entry(6, 2));
    println!("\nC(6,2) = {}   B(6,2) = {}", ballot_entry(6, 2), shapiro_entry(6, 2));

    // column 0 of C holds the Catalan numbers; column 0 of B is the same
    // sequence shifted by one
    let catalans: Vec<BigInt> = c.column(0);
    assert_eq!(b.column(0)[..6], catalans[1..]);
    println!("Catalan numbers: {:?}", catalans.iter().map(BigInt::to_string).collect::<Vec<_>>());
}
