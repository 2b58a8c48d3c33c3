//! A hand-written rewriting family on B = {1, x0, x1, x0*x1}: it reduces
//! everything up to degree 3, yet it is not a border basis.

use borderbasis::border::RewritingFamily;
use borderbasis::coeff::Rationals;
use borderbasis::poly::{default_names, parse_polynomial, MonomialSet, Polynomial};
use borderbasis::quotient::MultiplicationSystem;

fn main() {
    let names = default_names(2);
    let q = |s: &str| parse_polynomial(s, &names, &Rationals).unwrap();
    let m = |s: &str| q(s).monomials().next().unwrap().clone();

    let basis: MonomialSet = ["1", "x0", "x1", "x0*x1"].iter().map(|s| m(s)).collect();
    println!("border: {:?}", basis.border().iter().map(|b| b.format_with(&names)).collect::<Vec<_>>());

    let rules = [("x0^2", "1"), ("x1^2", "x1"), ("x0^2*x1", "x1"), ("x0*x1^2", "x1")];
    let family = RewritingFamily::with_rules(&Rationals, 2, basis, rules.iter().map(|(l, t)| (m(l), q(t)))).unwrap();

    for lambda in 0..=4 {
        println!("reducing family of degree {lambda}: {}", family.check_reducing_family(lambda));
    }
    let p: Polynomial<Rationals> = q("x0^2*x1^2 + 3*x0^3");
    println!("extended projection of {}: {}", p.format_with(&names), family.extended_project_poly(&p).unwrap().format_with(&names));

    match family.c_polynomial_witness() {
        Some((a, b, r)) => println!(
            "C({}, {}) reduces to {} != 0, so this is not a border basis",
            a.format_with(&names),
            b.format_with(&names),
            r.format_with(&names)
        ),
        None => println!("all C-polynomials reduce to 0"),
    }
    let ms = MultiplicationSystem::build(&family).unwrap();
    println!("multiplication matrices commute: {}", ms.check_commutation().commutes);
}
