//! Chosen monomials of one polynomial under each choice function.

use borderbasis::choice::{ChoiceFunction, ChoiceKind};
use borderbasis::coeff::Rationals;
use borderbasis::poly::{default_names, parse_polynomial};

fn main() {
    let names = default_names(3);
    let p = parse_polynomial("123456789*x0*x1 + x1^2 + 1/2*x0*x2 - x2^2 + x0 + 7", &names, &Rationals).unwrap();
    println!("p = {}", p.format_with(&names));
    for spec in ["drvl", "dlex", "mac", "minsz", "mix:1", "mix:2"] {
        let kind: ChoiceKind = spec.parse().unwrap();
        let mut chooser = ChoiceFunction::new(kind).chooser();
        let picks: Vec<String> = (0..3).map(|_| chooser.gamma(&p).unwrap().format_with(&names)).collect();
        println!("{spec:>6}: {}", picks.join(" "));
    }
}
