//! Benchmark systems.

use crate::coeff::{Field, FieldError};
use crate::poly::{Monomial, Polynomial};

/// Variable names `u0 … un` of Katsura(n).
pub fn katsura_vars(n: usize) -> Vec<String> {
    (0..=n).map(|i| format!("u{i}")).collect()
}

/// Katsura(n) in `n + 1` unknowns:
///
/// ```text
/// u0 + 2 Σ_{k=1..n} u_k = 1
/// Σ_{k=-n..n} u_|k| u_|m-k| = u_m        (m = 0 … n-1, terms with |m-k| ≤ n)
/// ```
pub fn katsura<K: Field>(field: &K, n: usize) -> Result<Vec<Polynomial<K>>, FieldError> {
    if n < 1 {
        return Err(FieldError::BadSpec("katsura needs n >= 1".into()));
    }
    let nv = n + 1;
    let var = |i: usize| Monomial::var(nv, i);
    let mut out = Vec::with_capacity(nv);
    let mut lin = Polynomial::constant(field, nv, field.from_i64(-1));
    lin.add_term(var(0), &field.one());
    for k in 1..=n {
        lin.add_term(var(k), &field.from_i64(2));
    }
    out.push(lin);
    let ni = n as i64;
    for m in 0..ni {
        let mut p = Polynomial::zero(field, nv);
        for k in -ni..=ni {
            let j = (m - k).unsigned_abs() as usize;
            if j <= n {
                p.add_term(var(k.unsigned_abs() as usize).mul(&var(j)), &field.one());
            }
        }
        p.add_term(var(m as usize), &field.from_i64(-1));
        out.push(p);
    }
    Ok(out)
}

/// Variable names `x1 x2` of the two-conic family.
pub fn conic_vars() -> Vec<String> {
    vec!["x1".into(), "x2".into()]
}

/// `{a x1² + b x2² + ε1 x1 x2, c x1² + d x2² + ε2 x1 x2}`. The second value
/// is `false` when `ad − bc = 0`, in which case the system is in general not
/// zero-dimensional.
pub fn conic_family<K: Field>(field: &K, coeffs: [&K::Elem; 6]) -> (Vec<Polynomial<K>>, bool) {
    let [a, b, c, d, e1, e2] = coeffs;
    let x1sq = Monomial::from_exponents(vec![2, 0]);
    let x2sq = Monomial::from_exponents(vec![0, 2]);
    let x1x2 = Monomial::from_exponents(vec![1, 1]);
    let make = |p: &K::Elem, q: &K::Elem, e: &K::Elem| {
        Polynomial::from_terms(field, 2, [(x1sq.clone(), p.clone()), (x2sq.clone(), q.clone()), (x1x2.clone(), e.clone())])
    };
    let det = field.sub(&field.mul(a, d), &field.mul(b, c));
    (vec![make(a, b, e1), make(c, d, e2)], !field.is_zero(&det))
}
