//! JSON renderings of the computed objects.

use serde_json::{json, Map, Value};

use crate::border::{BorderBasis, RewritingFamily};
use crate::coeff::Field;
use crate::poly::Polynomial;
use crate::quotient::MultiplicationSystem;
use crate::solve::RootSet;
use crate::syzygy::SyzygyRelation;

/// `{"monomial": "coefficient", ...}`.
pub fn polynomial_json<K: Field>(p: &Polynomial<K>, names: &[String]) -> Value {
    let k = p.field();
    let mut map = Map::new();
    for (m, c) in p.terms().rev() {
        map.insert(m.format_with(names), Value::String(k.format(c)));
    }
    Value::Object(map)
}

pub fn family_json<K: Field>(fam: &RewritingFamily<K>, names: &[String]) -> (Value, Value) {
    let basis: Vec<Value> = fam.basis().iter().map(|m| Value::String(m.format_with(names))).collect();
    let rules: Vec<Value> = fam
        .rules()
        .map(|(lead, tail)| json!({ "lead": lead.format_with(names), "tail": polynomial_json(tail, names) }))
        .collect();
    (Value::Array(basis), Value::Array(rules))
}

/// `{"vars", "field", "basis", "rules", "loops", ...}`.
pub fn border_basis_json<K: Field>(bb: &BorderBasis<K>, names: &[String]) -> Map<String, Value> {
    let (basis, rules) = family_json(&bb.family, names);
    let mut out = Map::new();
    out.insert("vars".into(), json!(names));
    out.insert("field".into(), json!(bb.family.field().config().to_string()));
    out.insert("basis".into(), basis);
    out.insert("rules".into(), rules);
    out.insert("loops".into(), json!(bb.loops));
    out.insert("dimension".into(), json!(bb.dimension()));
    out.insert("inconsistent".into(), json!(bb.is_inconsistent()));
    out
}

/// Row-major matrices per variable together with the ordered basis.
pub fn matrices_json<K: Field>(ms: &MultiplicationSystem<K>, names: &[String]) -> Value {
    let k = ms.field();
    let basis: Vec<String> = ms.basis().iter().map(|m| m.format_with(names)).collect();
    let mut mats = Map::new();
    for (i, name) in names.iter().enumerate().take(ms.nvars()) {
        let rows: Vec<Vec<String>> =
            ms.row_major(i).iter().map(|r| r.iter().map(|c| k.format(c)).collect()).collect();
        mats.insert(name.clone(), json!(rows));
    }
    json!({ "basis": basis, "matrices": mats })
}

pub fn syzygy_json<K: Field>(rel: &SyzygyRelation<K>, names: &[String]) -> Value {
    let (m, i, j) = &rel.origin;
    json!({
        "kind": rel.kind.to_string(),
        "origin": { "m": m.format_with(names), "i1": names[*i], "i2": names[*j] },
        "coeffs": rel.vector.format_with(names),
    })
}

/// `{"roots": [[[re, im], ...], ...], "mnacr": r, "seed": s}`; one inner list
/// of coordinates per root.
pub fn roots_json(rs: &RootSet) -> Value {
    let roots: Vec<Vec<[f64; 2]>> = rs.roots.iter().map(|r| r.iter().map(|z| [z.re, z.im]).collect()).collect();
    json!({ "roots": roots, "mnacr": rs.mnacr, "seed": rs.seed, "clustered": rs.clustered })
}
