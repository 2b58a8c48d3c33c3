use std::collections::BTreeSet;

use super::Monomial;

/// A finite set of monomials, iterated in canonical (degree, then lex) order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MonomialSet {
    elems: BTreeSet<Monomial>,
}

impl MonomialSet {
    pub fn new() -> Self {
        MonomialSet { elems: BTreeSet::new() }
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.elems.contains(m)
    }

    pub fn insert(&mut self, m: Monomial) -> bool {
        self.elems.insert(m)
    }

    pub fn remove(&mut self, m: &Monomial) -> bool {
        self.elems.remove(m)
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = &Monomial> + '_ {
        self.elems.iter()
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.elems.iter().next_back().map(Monomial::degree)
    }

    pub fn of_degree(&self, d: u32) -> impl Iterator<Item = &Monomial> + '_ {
        self.elems.iter().filter(move |m| m.degree() == d)
    }

    /// `S⁺ = S ∪ x_1 S ∪ ... ∪ x_n S`.
    pub fn prolong(&self) -> MonomialSet {
        let mut out = self.clone();
        for m in &self.elems {
            for i in 0..m.nvars() {
                out.insert(m.mul_var(i));
            }
        }
        out
    }

    /// `∂S = S⁺ \ S`.
    pub fn border(&self) -> MonomialSet {
        let mut out = MonomialSet::new();
        for m in &self.elems {
            for i in 0..m.nvars() {
                let xm = m.mul_var(i);
                if !self.contains(&xm) {
                    out.insert(xm);
                }
            }
        }
        out
    }

    /// The B-index of `m`: the least `k` with `m ∈ B^[k]`. Since
    /// `B^[k] = { x^a b : |a| ≤ k, b ∈ B }`, this is `|m|` minus the largest
    /// size of an element of `B` dividing `m`. Returns `None` when no
    /// element of the set divides `m` (impossible when `1 ∈ B`).
    pub fn b_index(&self, m: &Monomial) -> Option<u32> {
        self.elems
            .iter()
            .filter(|b| b.divides(m))
            .map(Monomial::degree)
            .max()
            .map(|d| m.degree() - d)
    }

    /// Every element is reachable from `1` by multiplying one variable at a
    /// time without leaving the set.
    pub fn connected_to_one(&self) -> bool {
        let Some(first) = self.elems.iter().next() else {
            return true;
        };
        if !first.is_one() {
            return false;
        }
        // canonical order is by degree, so predecessors are checked first
        self.elems
            .iter()
            .all(|m| m.is_one() || m.support_vars().any(|i| self.contains(&m.div_var(i).unwrap())))
    }

    /// Every divisor `m / x_i` of an element is in the set.
    pub fn stable_by_division(&self) -> bool {
        self.elems
            .iter()
            .all(|m| m.support_vars().all(|i| self.contains(&m.div_var(i).unwrap())))
    }

    /// A variable path from `1` to `m` inside the set, outermost variable
    /// first: `m = x_{s0} * x_{s1} * ... ` with every suffix product in the
    /// set. Picks the smallest variable index at each step.
    pub fn path_from_one(&self, m: &Monomial) -> Option<Vec<usize>> {
        if !self.contains(m) {
            return None;
        }
        let mut seq = Vec::new();
        let mut cur = m.clone();
        while !cur.is_one() {
            let i = cur.support_vars().find(|&i| self.contains(&cur.div_var(i).unwrap()))?;
            seq.push(i);
            cur = cur.div_var(i).unwrap();
        }
        Some(seq)
    }

    pub fn to_vec(&self) -> Vec<Monomial> {
        self.elems.iter().cloned().collect()
    }
}

impl FromIterator<Monomial> for MonomialSet {
    fn from_iter<T: IntoIterator<Item = Monomial>>(iter: T) -> Self {
        MonomialSet { elems: iter.into_iter().collect() }
    }
}

impl<'a> IntoIterator for &'a MonomialSet {
    type Item = &'a Monomial;
    type IntoIter = std::collections::btree_set::Iter<'a, Monomial>;
    fn into_iter(self) -> Self::IntoIter {
        self.elems.iter()
    }
}
