//! Computes a border basis of a small system over the rationals and prints
//! the rules and the commutation check.

use borderbasis::border::compute_border_basis;
use borderbasis::choice::{ChoiceFunction, ChoiceKind};
use borderbasis::coeff::Rationals;
use borderbasis::poly::SystemSource;
use borderbasis::quotient::MultiplicationSystem;

const SYSTEM: &str = "
ring x y over qq
x^2 + y^2 - 5
x*y - 2
";

fn main() {
    let src = SystemSource::parse(SYSTEM).unwrap();
    let polys = src.polynomials(&Rationals).unwrap();
    let bb = compute_border_basis(&polys, &ChoiceFunction::new(ChoiceKind::Mac)).unwrap();

    let names = &src.vars;
    println!("dimension {} after {} loops", bb.dimension(), bb.loops);
    println!("B = {{{}}}", bb.basis().iter().map(|m| m.format_with(names)).collect::<Vec<_>>().join(", "));
    for (lead, tail) in bb.family.rules() {
        println!("  {} -> {}", lead.format_with(names), tail.format_with(names));
    }
    let ms = MultiplicationSystem::build(&bb.family).unwrap();
    println!("commutes: {}", ms.check_commutation().commutes);
}
