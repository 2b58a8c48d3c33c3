//! Syzygies of a border basis: the commutation relations between the rules
//! (next-door, non-stair, across-the-street), their verification, and the
//! reduction of arbitrary syzygies modulo them.
//!
//! A module element `Σ h_ω e_ω` is a [`SyzygyVector`]; it is a syzygy when
//! `Σ h_ω f_ω = 0` with `f_ω = ω - ρ_ω`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use thiserror::Error;

use crate::border::{BorderError, RewritingFamily};
use crate::coeff::Field;
use crate::poly::{Monomial, Polynomial};
use crate::quotient::MultiplicationSystem;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SyzygyError {
    #[error("not a syzygy: the combination of the rules is nonzero")]
    NotASyzygy,
    #[error("generated relation for ({m}; {i}, {j}) does not vanish: the rules are not a border basis")]
    BrokenRelation { m: Monomial, i: usize, j: usize },
    #[error("{0} is not a border monomial")]
    NotInBorder(Monomial),
    #[error(transparent)]
    Border(#[from] BorderError),
}

/// An element `Σ h_ω e_ω` of the free module indexed by the border.
#[derive(Clone, PartialEq)]
pub struct SyzygyVector<K: Field> {
    field: K,
    nvars: usize,
    coeffs: BTreeMap<Monomial, Polynomial<K>>,
}

impl<K: Field> fmt::Debug for SyzygyVector<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.coeffs.iter()).finish()
    }
}

impl<K: Field> SyzygyVector<K> {
    pub fn zero(field: &K, nvars: usize) -> Self {
        SyzygyVector { field: field.clone(), nvars, coeffs: BTreeMap::new() }
    }

    /// `h · e_ω`.
    pub fn unit(omega: Monomial, h: Polynomial<K>) -> Self {
        let mut v = SyzygyVector::zero(h.field(), h.nvars());
        v.add_polynomial(&omega, &h);
        v
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, omega: &Monomial) -> Option<&Polynomial<K>> {
        self.coeffs.get(omega)
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (&Monomial, &Polynomial<K>)> + '_ {
        self.coeffs.iter()
    }

    /// All terms `(ω, m, c)` meaning `c·m·e_ω`.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Monomial, &K::Elem)> + '_ {
        self.coeffs.iter().flat_map(|(w, h)| h.terms().map(move |(m, c)| (w, m, c)))
    }

    /// `self += c · m · e_ω`.
    pub fn add_term(&mut self, omega: &Monomial, m: Monomial, c: &K::Elem) {
        let entry = self.coeffs.entry(omega.clone()).or_insert_with(|| Polynomial::zero(&self.field, self.nvars));
        entry.add_term(m, c);
        if entry.is_zero() {
            self.coeffs.remove(omega);
        }
    }

    pub fn add_polynomial(&mut self, omega: &Monomial, h: &Polynomial<K>) {
        for (m, c) in h.terms() {
            self.add_term(omega, m.clone(), c);
        }
    }

    /// `self += c · mult · other`.
    pub fn add_scaled(&mut self, c: &K::Elem, mult: &Monomial, other: &SyzygyVector<K>) {
        if self.field.is_zero(c) {
            return;
        }
        for (w, m, v) in other.terms() {
            self.add_term(w, m.mul(mult), &self.field.mul(c, v));
        }
    }

    pub fn neg(&self) -> Self {
        let mut out = SyzygyVector::zero(&self.field, self.nvars);
        out.add_scaled(&self.field.from_i64(-1), &Monomial::one(self.nvars), self);
        out
    }

    /// `Σ h_ω f_ω`.
    pub fn combine(&self, family: &RewritingFamily<K>) -> Result<Polynomial<K>, SyzygyError> {
        let mut out = Polynomial::zero(&self.field, self.nvars);
        for (w, h) in &self.coeffs {
            let f = family.rule_polynomial(w).ok_or_else(|| SyzygyError::NotInBorder(w.clone()))?;
            out = out.add(&h.mul(&f));
        }
        Ok(out)
    }

    pub fn format_with(&self, names: &[String]) -> BTreeMap<String, String> {
        self.coeffs.iter().map(|(w, h)| (w.format_with(names), h.format_with(names))).collect()
    }
}

/// `Σ h_ω f_ω = 0`, coefficientwise up to the field threshold.
pub fn verify_syzygy<K: Field>(s: &SyzygyVector<K>, family: &RewritingFamily<K>) -> bool {
    s.combine(family).map(|p| p.is_zero()).unwrap_or(false)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SyzygyKind {
    NextDoor,
    NonStair,
    AcrossStreet,
}

impl fmt::Display for SyzygyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SyzygyKind::NextDoor => "next_door",
            SyzygyKind::NonStair => "non_stair",
            SyzygyKind::AcrossStreet => "across_street",
        })
    }
}

/// The commutation relation of `b ∈ B` and the variables `i < j`.
#[derive(Debug, Clone, PartialEq)]
pub struct SyzygyRelation<K: Field> {
    pub kind: SyzygyKind,
    pub origin: (Monomial, usize, usize),
    pub vector: SyzygyVector<K>,
}

/// Classifies `(m, i, j)` by where `x_i m`, `x_j m` and `x_i x_j m` fall;
/// `None` when both `x_i m` and `x_j m` are in `B`.
pub fn classify<K: Field>(family: &RewritingFamily<K>, m: &Monomial, i: usize, j: usize) -> Option<SyzygyKind> {
    let b = family.basis();
    let (ii, jj) = (b.contains(&m.mul_var(i)), b.contains(&m.mul_var(j)));
    match (ii, jj) {
        (true, true) => None,
        (false, false) => Some(SyzygyKind::AcrossStreet),
        _ if b.contains(&m.mul_var(i).mul_var(j)) => Some(SyzygyKind::NonStair),
        _ => Some(SyzygyKind::NextDoor),
    }
}

/// `μ^i(b)` for `b ∈ B`: the border monomial `x_i b`, if it is one.
#[derive(Debug, Clone, PartialEq)]
pub struct MuTable {
    basis: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    /// `entries[i][k]` for the `k`-th basis monomial.
    entries: Vec<Vec<Option<Monomial>>>,
}

impl MuTable {
    pub fn new<K: Field>(family: &RewritingFamily<K>) -> Self {
        let basis = family.basis().to_vec();
        let index = basis.iter().cloned().enumerate().map(|(k, m)| (m, k)).collect();
        let entries = (0..family.nvars())
            .map(|i| {
                basis
                    .iter()
                    .map(|b| {
                        let xb = b.mul_var(i);
                        family.border().contains(&xb).then_some(xb)
                    })
                    .collect()
            })
            .collect();
        MuTable { basis, index, entries }
    }

    pub fn get(&self, i: usize, b: &Monomial) -> Option<&Monomial> {
        self.entries[i][*self.index.get(b)?].as_ref()
    }

    /// `μ^i(p)` for `p ∈ ⟨B⟩`, as a vector with constant coefficients.
    pub fn apply<K: Field>(&self, i: usize, p: &Polynomial<K>) -> SyzygyVector<K> {
        let mut out = SyzygyVector::zero(p.field(), p.nvars());
        let one = Monomial::one(p.nvars());
        for (b, c) in p.terms() {
            if let Some(w) = self.index.get(b).and_then(|&k| self.entries[i][k].as_ref()) {
                out.add_term(w, one.clone(), c);
            }
        }
        out
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }
}

pub fn mu_table<K: Field>(family: &RewritingFamily<K>) -> MuTable {
    MuTable::new(family)
}

/// Precomputed data for generating and reducing syzygies of one border basis.
pub struct SyzygyContext<'a, K: Field> {
    family: &'a RewritingFamily<K>,
    ms: MultiplicationSystem<K>,
    mu: MuTable,
    gens: HashMap<(Monomial, usize, usize), SyzygyVector<K>>,
    nf: HashMap<Monomial, Polynomial<K>>,
}

/// Outcome of [`SyzygyContext::reduce`]: `input = Σ multiplier·relation + residual`.
#[derive(Debug, Clone, PartialEq)]
pub struct Reduction<K: Field> {
    pub residual: SyzygyVector<K>,
    /// Polynomial multipliers of the relations, keyed by origin `(b, i, j)` with `i < j`.
    pub multipliers: BTreeMap<(Monomial, usize, usize), Polynomial<K>>,
    pub steps: usize,
}

impl<'a, K: Field> SyzygyContext<'a, K> {
    pub fn new(family: &'a RewritingFamily<K>) -> Result<Self, SyzygyError> {
        Ok(SyzygyContext {
            family,
            ms: MultiplicationSystem::build(family)?,
            mu: MuTable::new(family),
            gens: HashMap::new(),
            nf: HashMap::new(),
        })
    }

    pub fn family(&self) -> &RewritingFamily<K> {
        self.family
    }

    pub fn mu(&self) -> &MuTable {
        &self.mu
    }

    fn field(&self) -> &K {
        self.family.field()
    }

    fn nvars(&self) -> usize {
        self.family.nvars()
    }

    /// `π_F(x_i b)` for `b ∈ B`.
    fn step(&self, i: usize, b: &Monomial) -> Polynomial<K> {
        let xb = b.mul_var(i);
        match self.family.tail(&xb) {
            Some(t) => t.clone(),
            None => Polynomial::monomial(self.field(), xb),
        }
    }

    /// The relation of `b ∈ B` and the variables `a`, `c`:
    /// `x_a μ^c(b) + μ^a(π(x_c b)) − x_c μ^a(b) − μ^c(π(x_a b))`.
    pub fn relation(&mut self, b: &Monomial, a: usize, c: usize) -> SyzygyVector<K> {
        if a == c {
            return SyzygyVector::zero(self.field(), self.nvars());
        }
        if a > c {
            return self.relation(b, c, a).neg();
        }
        let key = (b.clone(), a, c);
        if let Some(v) = self.gens.get(&key) {
            return v.clone();
        }
        let k = self.field().clone();
        let n = self.nvars();
        let one = k.one();
        let minus = k.from_i64(-1);
        let bp = Polynomial::monomial(&k, b.clone());
        let mut v = SyzygyVector::zero(&k, n);
        v.add_scaled(&one, &Monomial::var(n, a), &self.mu.apply(c, &bp));
        v.add_scaled(&one, &Monomial::one(n), &self.mu.apply(a, &self.step(c, b)));
        v.add_scaled(&minus, &Monomial::var(n, c), &self.mu.apply(a, &bp));
        v.add_scaled(&minus, &Monomial::one(n), &self.mu.apply(c, &self.step(a, b)));
        self.gens.insert(key, v.clone());
        v
    }

    /// The relations for all `b ∈ B`, `i < j`, except the trivial pattern
    /// where both `x_i b` and `x_j b` lie in `B`. Each one is checked to
    /// vanish on the rules.
    pub fn generate(&mut self) -> Result<Vec<SyzygyRelation<K>>, SyzygyError> {
        let mut out = Vec::new();
        let basis = self.mu.basis().to_vec();
        for b in &basis {
            for i in 0..self.nvars() {
                for j in i + 1..self.nvars() {
                    let Some(kind) = classify(self.family, b, i, j) else { continue };
                    let vector = self.relation(b, i, j);
                    if !verify_syzygy(&vector, self.family) {
                        return Err(SyzygyError::BrokenRelation { m: b.clone(), i, j });
                    }
                    out.push(SyzygyRelation { kind, origin: (b.clone(), i, j), vector });
                }
            }
        }
        Ok(out)
    }

    fn normal_form(&mut self, m: &Monomial) -> Polynomial<K> {
        if let Some(p) = self.nf.get(m) {
            return p.clone();
        }
        let p = self.ms.normal_form(&Polynomial::monomial(self.field(), m.clone()));
        self.nf.insert(m.clone(), p.clone());
        p
    }

    /// `Ξ_s` for the variable sequence `s` (outermost first):
    /// `Σ_l x_{s_0}⋯x_{s_{l-1}} μ^{s_l}(NF(x_{s_{l+1}}⋯))`.
    pub fn xi(&mut self, seq: &[usize]) -> SyzygyVector<K> {
        let n = self.nvars();
        let k = self.field().clone();
        let mut out = SyzygyVector::zero(&k, n);
        for l in 0..seq.len() {
            let prefix = Monomial::from_var_sequence(n, &seq[..l]);
            let suffix = Monomial::from_var_sequence(n, &seq[l + 1..]);
            let nf = self.normal_form(&suffix);
            out.add_scaled(&k.one(), &prefix, &self.mu.apply(seq[l], &nf));
        }
        out
    }

    /// `Ξ_s − Ξ_t` for two orderings of the same monomial, written as a sum
    /// of relations obtained by adjacent transpositions. Each transposition
    /// at `(a, c)` between `m1` and `m2` contributes `m1 · relation(NF(m2); a, c)`.
    fn permutation_difference(
        &mut self,
        s: &[usize],
        t: &[usize],
        scale: &K::Elem,
        acc: &mut SyzygyVector<K>,
        multipliers: &mut BTreeMap<(Monomial, usize, usize), Polynomial<K>>,
    ) {
        let n = self.nvars();
        let k = self.field().clone();
        let mut cur = s.to_vec();
        for p in 0..t.len() {
            let q = (p..cur.len()).find(|&q| cur[q] == t[p]).expect("same multiset");
            for l in (p..q).rev() {
                let (a, c) = (cur[l], cur[l + 1]);
                if a != c {
                    let m1 = Monomial::from_var_sequence(n, &cur[..l]);
                    let m2 = Monomial::from_var_sequence(n, &cur[l + 2..]);
                    let nf = self.normal_form(&m2);
                    for (b, cb) in nf.terms() {
                        let coef = k.mul(scale, cb);
                        let rel = self.relation(b, a, c);
                        acc.add_scaled(&coef, &m1, &rel);
                        let (key, sign) = if a < c { ((b.clone(), a, c), k.one()) } else { ((b.clone(), c, a), k.from_i64(-1)) };
                        let entry = multipliers.entry(key).or_insert_with(|| Polynomial::zero(&k, n));
                        entry.add_term(m1.clone(), &k.mul(&coef, &sign));
                    }
                }
                cur.swap(l, l + 1);
            }
        }
    }

    /// The variable sequence `vars(m), k, path(b)` with `θ = x_k b`.
    fn full_sequence(&self, m: &Monomial, theta: &Monomial) -> Vec<usize> {
        let basis = self.family.basis();
        let kv = theta.support_vars().find(|&k| basis.contains(&theta.div_var(k).unwrap())).expect("border monomial");
        let b = theta.div_var(kv).unwrap();
        let mut seq = m.var_sequence();
        seq.push(kv);
        seq.extend(basis.path_from_one(&b).expect("basis is connected to 1"));
        seq
    }

    /// The decomposition `M = m'θ'` with `θ'` in the border and `|m'|`
    /// minimal: `θ' = x_k b` where `b` is a largest basis divisor of `M`.
    /// `None` when `M` itself lies in `B` (possible if `B` is not stable by
    /// division).
    pub fn canonical_split(&self, big: &Monomial) -> Option<(Monomial, Monomial)> {
        let basis = self.family.basis();
        if basis.contains(big) {
            return None;
        }
        let b = basis
            .iter()
            .filter(|b| b.divides(big))
            .min_by(|x, y| y.degree().cmp(&x.degree()).then(x.cmp(y)))
            .expect("1 is in the basis");
        let rest = big.div(b).unwrap();
        let kv = rest.support_vars().next().unwrap();
        let theta = b.mul_var(kv);
        Some((rest.div_var(kv).unwrap(), theta))
    }

    /// Rewrites `s` modulo the generated relations. Always rewrites a term
    /// `c·m·e_θ` of largest `|m|` into the canonical split of `mθ` (or
    /// removes it when `mθ ∈ B`); when all
    /// such terms are canonical the remaining vector is returned as residual
    /// (it is zero when the relations generate the syzygy module).
    pub fn reduce(&mut self, s: &SyzygyVector<K>) -> Result<Reduction<K>, SyzygyError> {
        if !verify_syzygy(s, self.family) {
            return Err(SyzygyError::NotASyzygy);
        }
        let k = self.field().clone();
        let mut sigma = s.clone();
        let mut multipliers = BTreeMap::new();
        let mut steps = 0;
        while let Some(top) = sigma.terms().map(|(_, m, _)| m.degree()).max() {
            let target = sigma
                .terms()
                .filter(|(_, m, _)| m.degree() == top)
                .map(|(w, m, c)| (w.clone(), m.clone(), c.clone()))
                .find(|(w, m, _)| self.canonical_split(&m.mul(w)) != Some((m.clone(), w.clone())));
            let Some((w, m, c)) = target else { break };
            let s1 = self.full_sequence(&m, &w);
            // For `mθ ∈ B` the target is a path inside `B`, where `Ξ` vanishes.
            let s2 = match self.canonical_split(&m.mul(&w)) {
                Some((m2, w2)) => self.full_sequence(&m2, &w2),
                None => self.family.basis().path_from_one(&m.mul(&w)).unwrap(),
            };
            let mut delta = SyzygyVector::zero(&k, self.nvars());
            self.permutation_difference(&s1, &s2, &c, &mut delta, &mut multipliers);
            sigma.add_scaled(&k.from_i64(-1), &Monomial::one(self.nvars()), &delta);
            steps += 1;
        }
        multipliers.retain(|_, p: &mut Polynomial<K>| !p.is_zero());
        Ok(Reduction { residual: sigma, multipliers, steps })
    }
}

/// Generates the commutation relations of a border basis.
pub fn generate_syzygies<K: Field>(family: &RewritingFamily<K>) -> Result<Vec<SyzygyRelation<K>>, SyzygyError> {
    SyzygyContext::new(family)?.generate()
}

/// Reduces one syzygy modulo the generated relations.
pub fn reduce_syzygy<K: Field>(
    s: &SyzygyVector<K>,
    family: &RewritingFamily<K>,
) -> Result<Reduction<K>, SyzygyError> {
    SyzygyContext::new(family)?.reduce(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::border::compute_border_basis;
    use crate::choice::{ChoiceFunction, ChoiceKind};
    use crate::coeff::{PrimeField, Rationals};
    use crate::poly::{default_names, parse_polynomial};

    fn qq(text: &str, n: usize) -> Polynomial<Rationals> {
        parse_polynomial(text, &default_names(n), &Rationals).unwrap()
    }

    fn mono(text: &str, n: usize) -> Monomial {
        qq(text, n).monomials().next().unwrap().clone()
    }

    fn decoupled() -> RewritingFamily<Rationals> {
        compute_border_basis(&[qq("x0^2 - 1", 2), qq("x1^2 - x1", 2)], &ChoiceFunction::new(ChoiceKind::Mac))
            .unwrap()
            .family
    }

    /// Sum of the multipliers times the relations they refer to.
    fn recombine<K: Field>(ctx: &mut SyzygyContext<K>, red: &Reduction<K>) -> SyzygyVector<K> {
        let mut out = red.residual.clone();
        for ((b, i, j), h) in &red.multipliers {
            let rel = ctx.relation(b, *i, *j);
            for (m, c) in h.terms() {
                out.add_scaled(c, m, &rel);
            }
        }
        out
    }

    #[test]
    fn mu_entries() {
        let fam = decoupled();
        let mu = MuTable::new(&fam);
        assert_eq!(mu.get(0, &mono("x0", 2)), Some(&mono("x0^2", 2)));
        assert_eq!(mu.get(0, &mono("1", 2)), None);
        let half = Rationals.from_ratio(&1.into(), &2.into()).unwrap();
        let p = qq("x0 + x1", 2).scale(&half);
        let v = mu.apply(0, &p);
        assert_eq!(v.coeff(&mono("x0^2", 2)), Some(&Polynomial::constant(&Rationals, 2, half.clone())));
        assert_eq!(v.coeff(&mono("x0*x1", 2)), None);
        assert!(mu.apply(1, &qq("1 + x0", 2)).is_zero());
    }

    #[test]
    fn decoupled_relations() {
        let fam = decoupled();
        let rels = generate_syzygies(&fam).unwrap();
        let find = |m: &str| rels.iter().find(|r| r.origin.0 == mono(m, 2)).unwrap();
        let nd = find("x1");
        assert_eq!(nd.kind, SyzygyKind::NextDoor);
        // x0*f_{x1^2} - f_{x0*x1^2}
        let mut expect = SyzygyVector::zero(&Rationals, 2);
        expect.add_term(&mono("x1^2", 2), mono("x0", 2), &Rationals.one());
        expect.add_term(&mono("x0*x1^2", 2), mono("1", 2), &Rationals.from_i64(-1));
        assert_eq!(nd.vector, expect);
        assert_eq!(find("x0*x1").kind, SyzygyKind::AcrossStreet);
        assert!(rels.iter().all(|r| r.kind != SyzygyKind::NonStair));
        assert!(rels.iter().all(|r| verify_syzygy(&r.vector, &fam)));
    }

    #[test]
    fn verification() {
        let fam = decoupled();
        assert!(verify_syzygy(&SyzygyVector::zero(&Rationals, 2), &fam));
        let rels = generate_syzygies(&fam).unwrap();
        let mut broken = rels[0].vector.clone();
        broken.add_term(&mono("x0^2", 2), mono("1", 2), &Rationals.one());
        assert!(!verify_syzygy(&broken, &fam));
        assert_eq!(reduce_syzygy(&broken, &fam), Err(SyzygyError::NotASyzygy));
    }

    #[test]
    fn koszul_syzygy_reduces() {
        let fam = decoupled();
        let a = mono("x0^2", 2);
        let b = mono("x1^2", 2);
        let mut s = SyzygyVector::unit(a.clone(), fam.rule_polynomial(&b).unwrap());
        s.add_polynomial(&b, &fam.rule_polynomial(&a).unwrap().neg());
        let mut ctx = SyzygyContext::new(&fam).unwrap();
        let red = ctx.reduce(&s).unwrap();
        assert!(red.residual.is_zero());
        assert_eq!(recombine(&mut ctx, &red), s);
    }

    #[test]
    fn relations_reduce_to_zero() {
        let fam = decoupled();
        let mut ctx = SyzygyContext::new(&fam).unwrap();
        for r in ctx.generate().unwrap() {
            let red = ctx.reduce(&r.vector).unwrap();
            assert!(red.residual.is_zero());
        }
    }

    /// Border basis of the points (1,0), (-1,0), (2,1) on B = {1, x0, x0*x1},
    /// which is connected to 1 but not stable by division.
    fn unstable_family() -> RewritingFamily<Rationals> {
        let k = Rationals;
        let pts = [(1i64, 0i64), (-1, 0), (2, 1)];
        let basis: Vec<Monomial> = ["1", "x0", "x0*x1"].iter().map(|s| mono(s, 2)).collect();
        let eval = |m: &Monomial, (x, y): (i64, i64)| x.pow(m.exponent(0) as u32) * y.pow(m.exponent(1) as u32);
        let set: crate::poly::MonomialSet = basis.iter().cloned().collect();
        let mut rules = Vec::new();
        for w in set.border().iter() {
            // Solve V c = w(points) by Cramer's rule on the 3x3 system.
            let v: Vec<Vec<i64>> = pts.iter().map(|&p| basis.iter().map(|b| eval(b, p)).collect()).collect();
            let rhs: Vec<i64> = pts.iter().map(|&p| eval(w, p)).collect();
            let det = |m: &Vec<Vec<i64>>| {
                m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                    + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
            };
            let d = det(&v);
            let mut tail = Polynomial::zero(&k, 2);
            for (col, b) in basis.iter().enumerate() {
                let mut mc = v.clone();
                for r in 0..3 {
                    mc[r][col] = rhs[r];
                }
                tail.add_term(b.clone(), &k.from_ratio(&det(&mc).into(), &d.into()).unwrap());
            }
            rules.push((w.clone(), tail));
        }
        RewritingFamily::with_rules(&k, 2, set, rules).unwrap()
    }

    #[test]
    fn non_stair_relations_on_an_unstable_basis() {
        let fam = unstable_family();
        assert!(fam.basis().connected_to_one() && !fam.basis().stable_by_division());
        assert!(crate::quotient::MultiplicationSystem::build(&fam).unwrap().check_commutation().commutes);
        let rels = generate_syzygies(&fam).unwrap();
        let ns: Vec<_> = rels.iter().filter(|r| r.kind == SyzygyKind::NonStair).collect();
        assert_eq!(ns.len(), 1);
        assert_eq!(ns[0].origin, (mono("1", 2), 0, 1));
        let mut ctx = SyzygyContext::new(&fam).unwrap();
        let a = mono("x1", 2);
        let b = mono("x0^2", 2);
        let mut koszul = SyzygyVector::unit(a.clone(), fam.rule_polynomial(&b).unwrap());
        koszul.add_polynomial(&b, &fam.rule_polynomial(&a).unwrap().neg());
        let red = ctx.reduce(&koszul).unwrap();
        assert!(red.residual.is_zero());
        assert_eq!(recombine(&mut ctx, &red), koszul);
    }

    #[test]
    fn stable_bases_have_no_non_stair_relations() {
        let k = PrimeField::new(101).unwrap();
        let sys: Vec<_> = ["x0^2 - x1 + 4", "x1^2 - x0*x1 - 1"]
            .iter()
            .map(|s| parse_polynomial(s, &default_names(2), &k).unwrap())
            .collect();
        for kind in [ChoiceKind::Drvl, ChoiceKind::Dlex] {
            let fam = compute_border_basis(&sys, &ChoiceFunction::new(kind)).unwrap().family;
            assert!(fam.basis().stable_by_division());
            let rels = generate_syzygies(&fam).unwrap();
            assert!(rels.iter().all(|r| r.kind != SyzygyKind::NonStair));
        }
    }

    #[test]
    fn permutation_consistency() {
        let k = PrimeField::new(10007).unwrap();
        let sys: Vec<_> = ["x0^2 + 2*x0*x1 - x1 + 3", "x1^2 - x0*x1 + 5*x0 - 1"]
            .iter()
            .map(|s| parse_polynomial(s, &default_names(2), &k).unwrap())
            .collect();
        let fam = compute_border_basis(&sys, &ChoiceFunction::new(ChoiceKind::Drvl)).unwrap().family;
        let mut ctx = SyzygyContext::new(&fam).unwrap();
        for (s, t) in [(vec![0, 0, 1, 1], vec![1, 0, 1, 0]), (vec![0, 1, 1], vec![1, 1, 0]), (vec![1, 0, 0, 0, 1], vec![0, 1, 0, 1, 0])] {
            let mut diff = ctx.xi(&s);
            diff.add_scaled(&k.from_i64(-1), &Monomial::one(2), &ctx.xi(&t));
            let mut acc = SyzygyVector::zero(&k, 2);
            ctx.permutation_difference(&s, &t, &k.one(), &mut acc, &mut BTreeMap::new());
            assert_eq!(diff, acc);
            assert!(verify_syzygy(&diff, &fam));
            assert!(ctx.reduce(&diff).unwrap().residual.is_zero());
        }
    }
}
