//! Lists the commutation relations of a border basis and rewrites a
//! Koszul syzygy in terms of them.

use borderbasis::border::compute_border_basis;
use borderbasis::choice::ChoiceKind;
use borderbasis::coeff::Rationals;
use borderbasis::poly::{default_names, parse_polynomial, Monomial};
use borderbasis::syzygy::{generate_syzygies, reduce_syzygy, SyzygyVector};

fn main() {
    let names = default_names(2);
    let q = |s: &str| parse_polynomial(s, &names, &Rationals).unwrap();
    let bb = compute_border_basis(&[q("x0^2 - 1"), q("x1^2 - x1")], &ChoiceKind::Mac.into()).unwrap();
    let fam = &bb.family;

    let rels = generate_syzygies(fam).unwrap();
    for r in &rels {
        let (m, i, j) = &r.origin;
        println!("{} at ({}; {}, {}):", r.kind, m.format_with(&names), names[*i], names[*j]);
        for (omega, h) in r.vector.format_with(&names) {
            println!("    ({h}) * f[{omega}]");
        }
    }

    // f[x1^2] * f[x0^2] - f[x0^2] * f[x1^2] = 0
    let a = Monomial::from_exponents(vec![2, 0]);
    let b = Monomial::from_exponents(vec![0, 2]);
    let mut koszul = SyzygyVector::zero(&Rationals, 2);
    koszul.add_polynomial(&a, &fam.rule_polynomial(&b).unwrap());
    koszul.add_polynomial(&b, &fam.rule_polynomial(&a).unwrap().neg());
    let red = reduce_syzygy(&koszul, fam).unwrap();
    println!("Koszul syzygy: {} rewriting steps, residual zero: {}", red.steps, red.residual.is_zero());
    for ((m, i, j), h) in &red.multipliers {
        println!("    ({}) * rel({}; {}, {})", h.format_with(&names), m.format_with(&names), names[*i], names[*j]);
    }
}
