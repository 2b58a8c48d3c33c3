use std::collections::{BTreeMap, HashMap};

use log::debug;

use crate::choice::{ChoiceFunction, Chooser};
use crate::coeff::Field;
use crate::poly::{Monomial, MonomialSet, Polynomial};

use super::{interreduce, BorderError, RewritingFamily};

/// Result of [`compute_border_basis`].
#[derive(Debug, Clone, PartialEq)]
pub struct BorderBasis<K: Field> {
    pub family: RewritingFamily<K>,
    /// Number of degree passes, restarts included.
    pub loops: usize,
    /// Set when `1` lies in the ideal; the basis is then empty.
    pub inconsistency_witness: Option<Polynomial<K>>,
}

impl<K: Field> BorderBasis<K> {
    pub fn basis(&self) -> &MonomialSet {
        self.family.basis()
    }

    pub fn is_inconsistent(&self) -> bool {
        self.inconsistency_witness.is_some()
    }

    pub fn dimension(&self) -> usize {
        self.family.basis().len()
    }
}

/// Computes a border basis of the ideal generated by `inputs`.
///
/// The basis is grown one degree at a time. At degree `d` the candidate
/// monomials are `L_d = x·B_{d-1}`; the rows are the inputs of degree `d` and
/// the prolongations `x_i f` of the rules of degree `d-1` along every
/// variable (their pairwise differences are the C-polynomials). Each row is
/// first rewritten so that its degree-`d` part lies in `L_d` and its lower
/// part in `⟨B⟩`, then the rows are interreduced with pivots in `L_d`.
/// A row that reduces to a nonzero element of `⟨B⟩` is a degree drop: it is
/// added to the inputs and the construction restarts from its degree.
pub fn compute_border_basis<K: Field>(
    inputs: &[Polynomial<K>],
    cf: &ChoiceFunction,
) -> Result<BorderBasis<K>, BorderError> {
    let first = inputs.first().ok_or(BorderError::EmptyInput)?;
    let field = first.field().clone();
    let n = first.nvars();
    let bound = inputs.iter().filter_map(|f| f.degree()).sum::<u32>() + n as u32 + 10;
    let mut st = State {
        field: field.clone(),
        n,
        chooser: cf.chooser(),
        inputs: inputs.iter().filter(|f| !f.is_zero()).cloned().collect(),
        layers: Vec::new(),
        basis: MonomialSet::new(),
        rules: BTreeMap::new(),
        nf: HashMap::new(),
    };
    let mut loops = 0usize;
    let mut d: u32 = 0;
    loop {
        loops += 1;
        if d > bound {
            return Err(BorderError::NotZeroDimensional { degree: d, bound });
        }
        let layer = st.layer(d);
        let rows = st.rows(d, &layer)?;
        let red = interreduce(&rows, &st.basis, &mut st.chooser)?;
        if !red.witnesses.is_empty() {
            let dw = red.witnesses.iter().filter_map(|w| w.degree()).min().unwrap();
            debug!("degree {d}: {} degree drops, restarting at {dw}", red.witnesses.len());
            st.truncate(dw);
            st.inputs.extend(red.witnesses);
            d = dw;
            continue;
        }
        let mut layer_set: MonomialSet = layer.iter().cloned().collect();
        for (lead, _) in &red.rules {
            layer_set.remove(lead);
        }
        debug!("degree {d}: |L| = {}, |B_d| = {}, rules = {}", layer.len(), layer_set.len(), red.rules.len());
        for m in layer_set.iter() {
            st.basis.insert(m.clone());
        }
        st.layers.push(layer_set.to_vec());
        for (lead, tail) in red.rules {
            st.rules.insert(lead, tail);
        }
        if d == 0 && st.layers[0].is_empty() {
            let family = RewritingFamily::new(&field, n, MonomialSet::new());
            return Ok(BorderBasis { family, loops, inconsistency_witness: Some(Polynomial::one(&field, n)) });
        }
        let max_input = st.inputs.iter().filter_map(|f| f.degree()).max().unwrap_or(0);
        if layer.is_empty() && d >= max_input {
            break;
        }
        d += 1;
    }
    let family = RewritingFamily::with_rules(&field, n, st.basis, st.rules)?;
    if !family.covers_border() {
        let missing = family.border().iter().find(|m| family.tail(m).is_none()).unwrap().clone();
        return Err(BorderError::MissingRule(missing));
    }
    Ok(BorderBasis { family, loops, inconsistency_witness: None })
}

struct State<K: Field> {
    field: K,
    n: usize,
    chooser: Chooser,
    inputs: Vec<Polynomial<K>>,
    /// `layers[d] = B_d` for the processed degrees.
    layers: Vec<Vec<Monomial>>,
    basis: MonomialSet,
    rules: BTreeMap<Monomial, Polynomial<K>>,
    /// Normal forms of monomials below the current degree.
    nf: HashMap<Monomial, Polynomial<K>>,
}

impl<K: Field> State<K> {
    fn layer(&self, d: u32) -> Vec<Monomial> {
        if d == 0 {
            return vec![Monomial::one(self.n)];
        }
        let mut out = MonomialSet::new();
        for b in &self.layers[d as usize - 1] {
            for i in 0..self.n {
                out.insert(b.mul_var(i));
            }
        }
        out.to_vec()
    }

    fn truncate(&mut self, d: u32) {
        self.layers.truncate(d as usize);
        self.basis = self.layers.iter().flatten().cloned().collect();
        self.rules.retain(|m, _| m.degree() < d);
        self.nf.retain(|m, _| m.degree() < d);
    }

    /// Normal form of a monomial of degree below the current one.
    fn normal_form(&mut self, m: &Monomial) -> Polynomial<K> {
        if self.basis.contains(m) {
            return Polynomial::monomial(&self.field, m.clone());
        }
        if let Some(t) = self.rules.get(m) {
            return t.clone();
        }
        if let Some(p) = self.nf.get(m) {
            return p.clone();
        }
        let i = m.support_vars().last().expect("1 is in the basis or has a rule");
        let inner = self.normal_form(&m.div_var(i).unwrap());
        let mut out = Polynomial::zero(&self.field, self.n);
        let one = Monomial::one(self.n);
        for (b, c) in inner.terms() {
            let nb = self.normal_form(&b.mul_var(i));
            out.add_scaled(c, &one, &nb);
        }
        self.nf.insert(m.clone(), out.clone());
        out
    }

    /// Rewrites `p` (of degree at most `d`) onto `L_d ∪ B_{<d}`.
    fn prepare(&mut self, p: &Polynomial<K>, d: u32, layer: &MonomialSet) -> Polynomial<K> {
        let one = Monomial::one(self.n);
        let mut out = Polynomial::zero(&self.field, self.n);
        for (m, c) in p.terms() {
            if m.degree() == d {
                if layer.contains(m) {
                    out.add_term(m.clone(), c);
                    continue;
                }
                let j = m.support_vars().next().unwrap();
                let inner = self.normal_form(&m.div_var(j).unwrap());
                for (b, cb) in inner.terms() {
                    let xb = b.mul_var(j);
                    let coef = self.field.mul(c, cb);
                    if xb.degree() == d {
                        out.add_term(xb, &coef);
                    } else {
                        let nf = self.normal_form(&xb);
                        out.add_scaled(&coef, &one, &nf);
                    }
                }
            } else {
                let nf = self.normal_form(m);
                out.add_scaled(c, &one, &nf);
            }
        }
        out
    }

    fn rows(&mut self, d: u32, layer: &[Monomial]) -> Result<Vec<Polynomial<K>>, BorderError> {
        let layer: MonomialSet = layer.iter().cloned().collect();
        let mut raw = Vec::new();
        for g in &self.inputs {
            if g.degree() == Some(d) {
                raw.push(g.clone());
            }
        }
        if d > 0 {
            for (lead, tail) in self.rules.iter().filter(|(m, _)| m.degree() == d - 1) {
                let f = Polynomial::monomial(&self.field, lead.clone()).sub(tail);
                for i in 0..self.n {
                    raw.push(f.mul_var(i));
                }
            }
        }
        let mut rows = Vec::with_capacity(raw.len());
        for r in &raw {
            let p = self.prepare(r, d, &layer);
            if !p.is_zero() {
                rows.push(p);
            }
        }
        Ok(rows)
    }
}
