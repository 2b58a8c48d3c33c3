use std::collections::{BTreeMap, HashMap};

use crate::coeff::Field;
use crate::poly::{Monomial, MonomialSet, Polynomial};

use super::BorderError;

/// A monomial set `B` with rewriting rules `ω → ρ_ω` for border monomials.
///
/// Each rule stands for the monic polynomial `f_ω = ω - ρ_ω` with
/// `supp(ρ_ω) ⊆ B`.
#[derive(Clone, PartialEq)]
pub struct RewritingFamily<K: Field> {
    field: K,
    nvars: usize,
    basis: MonomialSet,
    border: MonomialSet,
    rules: BTreeMap<Monomial, Polynomial<K>>,
}

impl<K: Field> std::fmt::Debug for RewritingFamily<K> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("RewritingFamily").field("basis", &self.basis).field("rules", &self.rules).finish()
    }
}

impl<K: Field> RewritingFamily<K> {
    pub fn new(field: &K, nvars: usize, basis: MonomialSet) -> Self {
        let border = basis.border();
        RewritingFamily { field: field.clone(), nvars, basis, border, rules: BTreeMap::new() }
    }

    /// Builds a family from `(lead, tail)` pairs, checking the rule shape.
    pub fn with_rules(
        field: &K,
        nvars: usize,
        basis: MonomialSet,
        rules: impl IntoIterator<Item = (Monomial, Polynomial<K>)>,
    ) -> Result<Self, BorderError> {
        let mut fam = Self::new(field, nvars, basis);
        for (lead, tail) in rules {
            fam.insert_rule(lead, tail)?;
        }
        Ok(fam)
    }

    /// Adds the rule `lead → tail`; `lead` must be a border monomial and the
    /// tail must live in `⟨B⟩`.
    pub fn insert_rule(&mut self, lead: Monomial, tail: Polynomial<K>) -> Result<(), BorderError> {
        if !self.border.contains(&lead) {
            return Err(BorderError::InvalidRule(format!("{lead} is not a border monomial")));
        }
        if let Some(m) = tail.monomials().find(|m| !self.basis.contains(m)) {
            return Err(BorderError::InvalidRule(format!("tail of {lead} contains {m} outside the basis")));
        }
        if self.rules.contains_key(&lead) {
            return Err(BorderError::InvalidRule(format!("duplicate rule for {lead}")));
        }
        self.rules.insert(lead, tail);
        Ok(())
    }

    pub fn remove_rule(&mut self, lead: &Monomial) -> Option<Polynomial<K>> {
        self.rules.remove(lead)
    }

    pub fn field(&self) -> &K {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn basis(&self) -> &MonomialSet {
        &self.basis
    }

    pub fn border(&self) -> &MonomialSet {
        &self.border
    }

    /// Rules as `(lead, tail)`, in monomial order.
    pub fn rules(&self) -> impl Iterator<Item = (&Monomial, &Polynomial<K>)> + '_ {
        self.rules.iter()
    }

    pub fn tail(&self, lead: &Monomial) -> Option<&Polynomial<K>> {
        self.rules.get(lead)
    }

    pub fn num_rules(&self) -> usize {
        self.rules.len()
    }

    /// `f_ω = ω - ρ_ω`.
    pub fn rule_polynomial(&self, lead: &Monomial) -> Option<Polynomial<K>> {
        let tail = self.rules.get(lead)?;
        Some(Polynomial::monomial(&self.field, lead.clone()).sub(tail))
    }

    /// All `f_ω`, in monomial order of the leads.
    pub fn polynomials(&self) -> Vec<Polynomial<K>> {
        self.rules.keys().map(|m| self.rule_polynomial(m).unwrap()).collect()
    }

    /// Whether every border monomial of degree at most `lambda` has a rule.
    pub fn check_reducing_family(&self, lambda: u32) -> bool {
        self.border.iter().filter(|m| m.degree() <= lambda).all(|m| self.rules.contains_key(m))
    }

    /// Whether every border monomial has a rule.
    pub fn covers_border(&self) -> bool {
        self.border.iter().all(|m| self.rules.contains_key(m))
    }

    /// One-step projection `π_F` on `⟨B⁺⟩`.
    pub fn reduce(&self, p: &Polynomial<K>) -> Result<Polynomial<K>, BorderError> {
        let mut out = Polynomial::zero(&self.field, self.nvars);
        for (m, c) in p.terms() {
            if self.basis.contains(m) {
                out.add_term(m.clone(), c);
            } else if let Some(tail) = self.rules.get(m) {
                out.add_scaled(c, &Monomial::one(self.nvars), tail);
            } else {
                return Err(BorderError::NotReducible(m.clone()));
            }
        }
        Ok(out)
    }

    /// Extended projection `π^e_F(m)`, peeling the highest-index variable
    /// first: `π^e(x_i m') = π_F(x_i π^e(m'))`.
    pub fn extended_project(&self, m: &Monomial) -> Result<Polynomial<K>, BorderError> {
        ExtendedProjector::new(self).project_monomial(m)
    }

    /// `π^e_F` extended linearly to polynomials.
    pub fn extended_project_poly(&self, p: &Polynomial<K>) -> Result<Polynomial<K>, BorderError> {
        ExtendedProjector::new(self).project(p)
    }

    /// The C-polynomial of two rules, on the lcm of their leads.
    pub fn rule_c_polynomial(&self, a: &Monomial, b: &Monomial) -> Option<Polynomial<K>> {
        let fa = self.rule_polynomial(a)?;
        let fb = self.rule_polynomial(b)?;
        let l = a.lcm(b);
        let ma = l.div(a).ok()?;
        let mb = l.div(b).ok()?;
        Some(fa.mul_monomial(&ma).sub(&fb.mul_monomial(&mb)))
    }

    /// Checks the C-polynomial criterion on every pair of rules whose
    /// C-polynomial lies in `⟨B⁺⟩`; returns the first pair with a nonzero
    /// projection together with that projection. Pairs are `(a, b)` with
    /// `a` after `b` in the canonical order.
    pub fn c_polynomial_witness(&self) -> Option<(Monomial, Monomial, Polynomial<K>)> {
        let leads: Vec<&Monomial> = self.rules.keys().collect();
        for (i, b) in leads.iter().enumerate() {
            for a in &leads[i + 1..] {
                let c = self.rule_c_polynomial(a, b).unwrap();
                if let Ok(r) = self.reduce(&c) {
                    if !r.is_zero() {
                        return Some(((*a).clone(), (*b).clone(), r));
                    }
                }
            }
        }
        None
    }
}

/// Memoized evaluation of `π^e_F` over one family.
pub struct ExtendedProjector<'a, K: Field> {
    family: &'a RewritingFamily<K>,
    memo: HashMap<Monomial, Polynomial<K>>,
}

impl<'a, K: Field> ExtendedProjector<'a, K> {
    pub fn new(family: &'a RewritingFamily<K>) -> Self {
        ExtendedProjector { family, memo: HashMap::new() }
    }

    pub fn project_monomial(&mut self, m: &Monomial) -> Result<Polynomial<K>, BorderError> {
        if let Some(p) = self.memo.get(m) {
            return Ok(p.clone());
        }
        let fam = self.family;
        let result = if fam.basis.contains(m) {
            Polynomial::monomial(&fam.field, m.clone())
        } else if let Some(tail) = fam.rules.get(m) {
            tail.clone()
        } else if m.is_one() {
            // 1 outside B: only happens for the empty basis.
            return Err(BorderError::MissingRule(m.clone()));
        } else {
            let i = m.support_vars().last().unwrap();
            let inner = self.project_monomial(&m.div_var(i).unwrap())?;
            fam.reduce(&inner.mul_var(i)).map_err(|e| match e {
                BorderError::NotReducible(w) => BorderError::MissingRule(w),
                other => other,
            })?
        };
        self.memo.insert(m.clone(), result.clone());
        Ok(result)
    }

    pub fn project(&mut self, p: &Polynomial<K>) -> Result<Polynomial<K>, BorderError> {
        let fam = self.family;
        let mut out = Polynomial::zero(&fam.field, fam.nvars);
        for (m, c) in p.terms() {
            let nf = self.project_monomial(m)?;
            out.add_scaled(c, &Monomial::one(fam.nvars), &nf);
        }
        Ok(out)
    }
}
