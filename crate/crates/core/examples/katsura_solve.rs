//! Roots of Katsura(n) in floating point, with the maximal normalized
//! absolute residual.

use borderbasis::border::compute_border_basis;
use borderbasis::choice::{ChoiceFunction, ChoiceKind};
use borderbasis::cli::{katsura, katsura_vars};
use borderbasis::coeff::FloatField;
use borderbasis::solve::solve;

fn main() {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(4);
    let k = FloatField::new(1e-10).unwrap();
    let sys = katsura(&k, n).unwrap();
    let bb = compute_border_basis(&sys, &ChoiceFunction::new(ChoiceKind::Mac)).unwrap();
    let rs = solve(&bb.family, &sys, 0).unwrap();

    let vars = katsura_vars(n);
    println!("katsura({n}): {} roots, mnacr {:.3e}", rs.roots.len(), rs.mnacr);
    for r in rs.roots.iter().filter(|r| r.iter().all(|z| z.im.abs() < 1e-9)) {
        let coords: Vec<String> = vars.iter().zip(r).map(|(v, z)| format!("{v}={:.6}", z.re)).collect();
        println!("  {}", coords.join(" "));
    }
}
