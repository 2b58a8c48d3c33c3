//! Reads a system in the text format, reports errors with positions and
//! prints it back in normalized form.

use borderbasis::coeff::{FieldConfig, PrimeField, Rationals};
use borderbasis::poly::{format_system, SystemSource};

fn main() {
    let text = "
# two circles
ring x y over qq
x^2 + y^2 - 1
(x - 1)^2 + y^2 - 1
";
    let src = SystemSource::parse(text).unwrap();
    if let Err(e) = src.polynomials(&Rationals) {
        println!("error: {e}");
    }

    let text = "ring x y over qq\nx^2 + y^2 - 1\nx^2 - 2*x + y^2\n3/4*x*y - 1/3\n";
    let src = SystemSource::parse(text).unwrap();
    assert_eq!(src.field, FieldConfig::Rational);
    let polys = src.polynomials(&Rationals).unwrap();
    print!("{}", format_system(&src.vars, &polys));

    let k = PrimeField::new(101).unwrap();
    print!("{}", format_system(&src.vars, &src.polynomials(&k).unwrap()));
}
