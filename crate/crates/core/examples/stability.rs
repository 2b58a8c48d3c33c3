//! The basis chosen by a support-only choice function does not move under
//! small perturbations when the ε-threshold hides them.

use borderbasis::border::compute_border_basis;
use borderbasis::choice::{ChoiceFunction, ChoiceKind};
use borderbasis::cli::{conic_family, conic_vars};
use borderbasis::coeff::FloatField;

fn main() {
    let names = conic_vars();
    let k = FloatField::new(1e-6).unwrap();
    for eps in [0.0, 1e-8, 1e-4, 1e-1] {
        let (sys, _) = conic_family(&k, [&1.0, &1.0, &1.0, &-1.0, &eps, &eps]);
        for cf in [ChoiceFunction::new(ChoiceKind::Mac), ChoiceFunction::with_eps(ChoiceKind::Mac, 1e-6)] {
            let bb = compute_border_basis(&sys, &cf).unwrap();
            let b: Vec<String> = bb.basis().iter().map(|m| m.format_with(&names)).collect();
            println!("eps {eps:<6e} threshold {:<6}: B = {{{}}}", format!("{:?}", cf.eps), b.join(", "));
        }
    }
}
