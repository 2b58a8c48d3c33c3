//! Normal forms and ideal membership in the quotient algebra.

use borderbasis::border::compute_border_basis;
use borderbasis::choice::ChoiceKind;
use borderbasis::coeff::PrimeField;
use borderbasis::poly::{parse_polynomial, SystemSource};
use borderbasis::quotient::MultiplicationSystem;

fn main() {
    let src = SystemSource::parse("ring x y z over fp:65537\nx^2 - y\ny^2 - z\nz^2 - x - 1\n").unwrap();
    let k = PrimeField::new(65537).unwrap();
    let polys = src.polynomials(&k).unwrap();
    let bb = compute_border_basis(&polys, &ChoiceKind::Drvl.into()).unwrap();
    let ms = MultiplicationSystem::build(&bb.family).unwrap();
    println!("quotient dimension {}", ms.dimension());

    for text in ["x^5", "x*y*z", "x^8 - x - 1", "(x^2 - y)"] {
        match parse_polynomial(text, &src.vars, &k) {
            Ok(p) => println!(
                "NF({}) = {}    member: {}",
                text,
                ms.normal_form(&p).format_with(&src.vars),
                ms.ideal_member(&p)
            ),
            Err(e) => println!("{text}: {e}"),
        }
    }
}
