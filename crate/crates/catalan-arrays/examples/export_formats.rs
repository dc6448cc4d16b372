//! Rendering triangles and sequences as aligned text, CSV, JSON, and
//! b-file rows without going through the command line.

use catalan_arrays::catalog::{r_catalan, r_catalan_symbolic, shapiro};
use catalan_arrays::cli::output::{
    sequence_json, triangle_bfile, triangle_csv, triangle_json, triangle_text,
};
use catalan_arrays::exact::int;
use catalan_arrays::BigInt;

fn main() {
    let t = shapiro::<BigInt>(4).to_triangle("shapiro");

    println!("text:");
    print!("{}", triangle_text(&t));

    println!("\ncsv:");
    print!("{}", triangle_csv(&t));

    println!("\njson:");
    print!("{}", triangle_json("shapiro", &t));

    // b-files flatten the triangle row by row with a running index
    println!("\nb-file (offset 1):");
    print!("{}", triangle_bfile(&t, 1).expect("integer entries"));

    // symbolic triangles serialize each entry as its coefficient list
    let symbolic = r_catalan_symbolic(3).to_triangle("catalan[r]");
    println!("\nsymbolic json:");
    print!("{}", triangle_json("catalan[r]", &symbolic));

    // sequences carry the transform that produced them
    let column = r_catalan(&int(2), 4).to_triangle("catalan[2]").column(0);
    println!("\ncolumn 0 of C(2) as json:");
    print!("{}", sequence_json("catalan[2]", "column 0", 4, &column));
}
