//! Decompose a table into a superposition of unary functions and check the
//! formula reproduces it. Run with:
//! `cargo run -p superpose-core --example decompose_table`

use superpose_core::{trivial_decompose, Alphabet, DiscreteFunction, MultiValue};

fn main() -> Result<(), superpose_core::Error> {
    let alpha = Alphabet::ternary();
    let f =
        DiscreteFunction::parse_table("dfun N=3 M=2\n-1: 1 -1 0\n0: 0 1 -1\n1: -1 0 1\n", &alpha)?;
    let formula = trivial_decompose(&f)?.formula();
    println!("{}", formula.to_text());

    // the formula reproduces the table at every point
    let m1 = alpha.element("-1").unwrap();
    let args = [MultiValue::singleton(m1), MultiValue::singleton(m1)];
    assert_eq!(formula.eval(&args, &alpha)?, f.evaluate(&[m1, m1])?);
    Ok(())
}
