use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;

use super::{default_names, Monomial, MonomialSet};
use crate::coeff::Field;

/// A sparse polynomial over `K`. No stored coefficient is zero in the
/// field's sense (for the float field: no stored coefficient is below the
/// threshold).
#[derive(Clone)]
pub struct Polynomial<K: Field> {
    field: K,
    nvars: usize,
    terms: BTreeMap<Monomial, K::Elem>,
}

impl<K: Field> PartialEq for Polynomial<K> {
    fn eq(&self, other: &Self) -> bool {
        self.nvars == other.nvars && self.terms == other.terms
    }
}

impl<K: Field> Polynomial<K> {
    pub fn zero(field: &K, nvars: usize) -> Self {
        Polynomial { field: field.clone(), nvars, terms: BTreeMap::new() }
    }

    pub fn constant(field: &K, nvars: usize, c: K::Elem) -> Self {
        Self::term(field, Monomial::one(nvars), c)
    }

    pub fn one(field: &K, nvars: usize) -> Self {
        Self::constant(field, nvars, field.one())
    }

    pub fn monomial(field: &K, m: Monomial) -> Self {
        Self::term(field, m, field.one())
    }

    pub fn var(field: &K, nvars: usize, i: usize) -> Self {
        Self::monomial(field, Monomial::var(nvars, i))
    }

    pub fn term(field: &K, m: Monomial, c: K::Elem) -> Self {
        let nvars = m.nvars();
        let mut p = Self::zero(field, nvars);
        if !field.is_zero(&c) {
            p.terms.insert(m, c);
        }
        p
    }

    /// Builds a polynomial from (monomial, coefficient) pairs, summing
    /// repeated monomials.
    pub fn from_terms(field: &K, nvars: usize, terms: impl IntoIterator<Item = (Monomial, K::Elem)>) -> Self {
        let mut p = Self::zero(field, nvars);
        for (m, c) in terms {
            p.add_term(m, &c);
        }
        p
    }

    pub fn field(&self) -> &K {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical ascending order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &K::Elem)> + '_ {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<Monomial, K::Elem> {
        self.terms
    }

    pub fn support(&self) -> MonomialSet {
        self.terms.keys().cloned().collect()
    }

    pub fn monomials(&self) -> impl DoubleEndedIterator<Item = &Monomial> + '_ {
        self.terms.keys()
    }

    pub fn coeff(&self, m: &Monomial) -> K::Elem {
        self.terms.get(m).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn get(&self, m: &Monomial) -> Option<&K::Elem> {
        self.terms.get(m)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.terms.contains_key(m)
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// `self += c * m`.
    pub fn add_term(&mut self, m: Monomial, c: &K::Elem) {
        if self.field.is_zero(c) {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                let s = self.field.add(v, c);
                if self.field.is_zero(&s) {
                    self.terms.remove(&m);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    pub fn remove_term(&mut self, m: &Monomial) -> Option<K::Elem> {
        self.terms.remove(m)
    }

    /// `self += c * mult * other`.
    pub fn add_scaled(&mut self, c: &K::Elem, mult: &Monomial, other: &Polynomial<K>) {
        if self.field.is_zero(c) {
            return;
        }
        for (m, v) in &other.terms {
            let prod = self.field.mul(c, v);
            self.add_term(m.mul(mult), &prod);
        }
    }

    pub fn add(&self, other: &Polynomial<K>) -> Polynomial<K> {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &Polynomial<K>) -> Polynomial<K> {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), &self.field.neg(c));
        }
        out
    }

    pub fn neg(&self) -> Polynomial<K> {
        self.map_coeffs(|c| self.field.neg(c))
    }

    pub fn scale(&self, c: &K::Elem) -> Polynomial<K> {
        self.map_coeffs(|v| self.field.mul(c, v))
    }

    pub fn mul(&self, other: &Polynomial<K>) -> Polynomial<K> {
        let mut out = Polynomial::zero(&self.field, self.nvars);
        for (m, c) in &other.terms {
            out.add_scaled(c, m, self);
        }
        out
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial<K> {
        Polynomial {
            field: self.field.clone(),
            nvars: self.nvars,
            terms: self.terms.iter().map(|(k, v)| (k.mul(m), v.clone())).collect(),
        }
    }

    pub fn mul_var(&self, i: usize) -> Polynomial<K> {
        Polynomial {
            field: self.field.clone(),
            nvars: self.nvars,
            terms: self.terms.iter().map(|(k, v)| (k.mul_var(i), v.clone())).collect(),
        }
    }

    fn map_coeffs(&self, f: impl Fn(&K::Elem) -> K::Elem) -> Polynomial<K> {
        let mut out = Polynomial::zero(&self.field, self.nvars);
        for (m, c) in &self.terms {
            let v = f(c);
            if !self.field.is_zero(&v) {
                out.terms.insert(m.clone(), v);
            }
        }
        out
    }

    /// Keeps only the terms satisfying `keep`.
    pub fn filter(&self, keep: impl Fn(&Monomial, &K::Elem) -> bool) -> Polynomial<K> {
        Polynomial {
            field: self.field.clone(),
            nvars: self.nvars,
            terms: self.terms.iter().filter(|(m, c)| keep(m, c)).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    /// Largest coefficient magnitude (0 for the zero polynomial).
    pub fn max_magnitude(&self) -> f64 {
        self.terms.values().map(|c| self.field.magnitude(c)).fold(0.0, f64::max)
    }

    /// Evaluates at a complex point. `None` when the field has no embedding
    /// into the reals (prime fields).
    pub fn eval_complex(&self, point: &[Complex64]) -> Option<Complex64> {
        let mut acc = Complex64::new(0.0, 0.0);
        for (m, c) in &self.terms {
            let mut t = Complex64::new(self.field.to_f64(c)?, 0.0);
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    t *= point[i].powu(e as u32);
                }
            }
            acc += t;
        }
        Some(acc)
    }

    /// Re-expresses the coefficients in another field.
    pub fn convert<L: Field>(&self, target: &L, f: impl Fn(&K::Elem) -> L::Elem) -> Polynomial<L> {
        Polynomial::from_terms(target, self.nvars, self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }

    pub fn display<'a>(&'a self, names: &'a [String]) -> PolyDisplay<'a, K> {
        PolyDisplay { poly: self, names }
    }

    /// Renders with the given variable names: terms by decreasing degree,
    /// then decreasing lexicographic order.
    pub fn format_with(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let one = self.field.format(&self.field.one());
        let mut out = String::new();
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let s = self.field.format(c);
            let (neg, abs) = match s.strip_prefix('-') {
                Some(a) => (true, a.to_string()),
                None => (false, s),
            };
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if m.is_one() {
                out.push_str(&abs);
            } else if abs == one {
                out.push_str(&m.format_with(names));
            } else {
                out.push_str(&abs);
                out.push('*');
                out.push_str(&m.format_with(names));
            }
        }
        out
    }
}

pub struct PolyDisplay<'a, K: Field> {
    poly: &'a Polynomial<K>,
    names: &'a [String],
}

impl<K: Field> fmt::Display for PolyDisplay<'_, K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.poly.format_with(self.names))
    }
}

impl<K: Field> fmt::Display for Polynomial<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_with(&default_names(self.nvars)))
    }
}

impl<K: Field> fmt::Debug for Polynomial<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{FloatField, PrimeField, Rationals};
    use proptest::prelude::*;

    fn arb_poly() -> impl Strategy<Value = Polynomial<PrimeField>> {
        let k = PrimeField::new(101).unwrap();
        proptest::collection::vec((proptest::collection::vec(0u16..3, 2), 0u64..101), 0..6).prop_map(move |ts| {
            Polynomial::from_terms(&k, 2, ts.into_iter().map(|(e, c)| (Monomial::from_exponents(e), c)))
        })
    }

    proptest! {
        #[test]
        fn ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(a.add(&b), b.add(&a));
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert!(a.sub(&a).is_zero());
        }
    }

    #[test]
    fn no_zero_coefficients_are_stored() {
        let k = FloatField::new(1e-10).unwrap();
        let p = Polynomial::from_terms(&k, 1, [(Monomial::var(1, 0), 1.0), (Monomial::one(1), 1e-12)]);
        assert_eq!(p.len(), 1);
        let q = Polynomial::from_terms(&k, 1, [(Monomial::var(1, 0), -1.0 + 1e-13)]);
        assert!(p.add(&q).is_zero());
    }

    #[test]
    fn evaluation() {
        let k = Rationals;
        let x = Polynomial::var(&k, 1, 0);
        let p = x.mul(&x).sub(&Polynomial::one(&k, 1));
        let v = p.eval_complex(&[Complex64::new(2.0, 0.0)]).unwrap();
        assert_eq!(v, Complex64::new(3.0, 0.0));
        let kp = PrimeField::new(7).unwrap();
        assert!(Polynomial::one(&kp, 1).eval_complex(&[Complex64::new(0.0, 0.0)]).is_none());
    }
}
