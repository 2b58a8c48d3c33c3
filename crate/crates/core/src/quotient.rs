//! Multiplication operators on `⟨B⟩`, their commutation check, and normal
//! forms in the quotient algebra.

use std::collections::HashMap;

use crate::border::{BorderError, RewritingFamily};
use crate::coeff::Field;
use crate::poly::{Monomial, Polynomial};

/// The operators `M_i: b ↦ π_F(x_i b)` on `⟨B⟩`, stored column-major:
/// column `j` of `M_i` holds the coordinates of `π_F(x_i B[j])`.
#[derive(Debug, Clone, PartialEq)]
pub struct MultiplicationSystem<K: Field> {
    field: K,
    nvars: usize,
    basis: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    /// `matrices[i][col][row]`.
    matrices: Vec<Vec<Vec<K::Elem>>>,
}

/// Outcome of [`MultiplicationSystem::check_commutation`].
#[derive(Debug, Clone, PartialEq)]
pub struct Commutation {
    pub commutes: bool,
    /// First `(i, j, column)` where `M_i M_j` and `M_j M_i` differ.
    pub violation: Option<(usize, usize, usize)>,
}

impl<K: Field> MultiplicationSystem<K> {
    pub fn build(family: &RewritingFamily<K>) -> Result<Self, BorderError> {
        let field = family.field().clone();
        let basis = family.basis().to_vec();
        let index: HashMap<Monomial, usize> = basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let dim = basis.len();
        let mut matrices = Vec::with_capacity(family.nvars());
        for i in 0..family.nvars() {
            let mut cols = Vec::with_capacity(dim);
            for b in &basis {
                let xb = b.mul_var(i);
                let img = if family.basis().contains(&xb) {
                    Polynomial::monomial(&field, xb)
                } else {
                    family.tail(&xb).cloned().ok_or(BorderError::MissingRule(xb))?
                };
                let mut col = vec![field.zero(); dim];
                for (m, c) in img.terms() {
                    col[index[m]] = c.clone();
                }
                cols.push(col);
            }
            matrices.push(cols);
        }
        Ok(MultiplicationSystem { field, nvars: family.nvars(), basis, index, matrices })
    }

    pub fn field(&self) -> &K {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn position(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Entry `(row, col)` of `M_i`.
    pub fn entry(&self, i: usize, row: usize, col: usize) -> &K::Elem {
        &self.matrices[i][col][row]
    }

    /// `M_i` as a list of rows.
    pub fn row_major(&self, i: usize) -> Vec<Vec<K::Elem>> {
        let d = self.dimension();
        (0..d).map(|r| (0..d).map(|c| self.matrices[i][c][r].clone()).collect()).collect()
    }

    /// `M_i v`.
    pub fn apply(&self, i: usize, v: &[K::Elem]) -> Vec<K::Elem> {
        let k = &self.field;
        let mut out = vec![k.zero(); self.dimension()];
        for (col, x) in self.matrices[i].iter().zip(v) {
            if k.is_zero(x) {
                continue;
            }
            for (o, a) in out.iter_mut().zip(col) {
                if !k.is_zero(a) {
                    *o = k.add(o, &k.mul(a, x));
                }
            }
        }
        out
    }

    fn frobenius(&self, i: usize) -> f64 {
        self.matrices[i].iter().flatten().map(|a| self.field.magnitude(a).powi(2)).sum::<f64>().sqrt()
    }

    /// Checks `M_i M_j = M_j M_i` for all pairs. Exact fields compare
    /// exactly; the float field allows `max(eps, 1e-10·‖M_i‖·‖M_j‖)` per
    /// entry, where `eps` is the field threshold.
    pub fn check_commutation(&self) -> Commutation {
        let k = &self.field;
        let eps = match k.config() {
            crate::coeff::FieldConfig::Float(e) => e,
            _ => 0.0,
        };
        for i in 0..self.nvars {
            for j in i + 1..self.nvars {
                let tol = eps.max(1e-10 * self.frobenius(i) * self.frobenius(j));
                for (col, cj) in self.matrices[j].iter().enumerate() {
                    let a = self.apply(i, cj);
                    let b = self.apply(j, &self.matrices[i][col]);
                    let differs = a.iter().zip(&b).any(|(x, y)| {
                        let d = k.sub(x, y);
                        if k.is_exact() {
                            !k.is_zero(&d)
                        } else {
                            k.magnitude(&d) > tol
                        }
                    });
                    if differs {
                        return Commutation { commutes: false, violation: Some((i, j, col)) };
                    }
                }
            }
        }
        Commutation { commutes: true, violation: None }
    }

    /// Coordinates of `p ∈ ⟨B⟩`; `None` if `p` has a monomial outside `B`.
    pub fn coordinates(&self, p: &Polynomial<K>) -> Option<Vec<K::Elem>> {
        let mut v = vec![self.field.zero(); self.dimension()];
        for (m, c) in p.terms() {
            v[*self.index.get(m)?] = c.clone();
        }
        Some(v)
    }

    pub fn from_coordinates(&self, v: &[K::Elem]) -> Polynomial<K> {
        Polynomial::from_terms(&self.field, self.nvars, self.basis.iter().cloned().zip(v.iter().cloned()))
    }

    /// Coordinates of the normal form of `p`, computed by applying the
    /// operators to the coordinates of `1`, highest-index variable outermost.
    pub fn normal_form_coordinates(&self, p: &Polynomial<K>) -> Vec<K::Elem> {
        let k = &self.field;
        let mut memo: HashMap<Monomial, Vec<K::Elem>> = HashMap::new();
        let mut out = vec![k.zero(); self.dimension()];
        for (m, c) in p.terms() {
            let v = self.monomial_coordinates(m, &mut memo);
            for (o, x) in out.iter_mut().zip(&v) {
                *o = k.add(o, &k.mul(c, x));
            }
        }
        for o in out.iter_mut() {
            if k.is_zero(o) {
                *o = k.zero();
            }
        }
        out
    }

    fn monomial_coordinates(&self, m: &Monomial, memo: &mut HashMap<Monomial, Vec<K::Elem>>) -> Vec<K::Elem> {
        if let Some(v) = memo.get(m) {
            return v.clone();
        }
        let v = if let Some(&pos) = self.index.get(m) {
            let mut e = vec![self.field.zero(); self.dimension()];
            e[pos] = self.field.one();
            e
        } else if m.is_one() {
            // Only for the empty basis.
            Vec::new()
        } else {
            let i = m.support_vars().last().unwrap();
            let inner = self.monomial_coordinates(&m.div_var(i).unwrap(), memo);
            self.apply(i, &inner)
        };
        memo.insert(m.clone(), v.clone());
        v
    }

    /// The normal form of `p` in `⟨B⟩`. Linear, with the ideal as kernel
    /// once the operators commute.
    pub fn normal_form(&self, p: &Polynomial<K>) -> Polynomial<K> {
        self.from_coordinates(&self.normal_form_coordinates(p))
    }

    pub fn ideal_member(&self, p: &Polynomial<K>) -> bool {
        self.normal_form_coordinates(p).iter().all(|c| self.field.is_zero(c))
    }
}

/// Shorthand for [`MultiplicationSystem::build`].
pub fn build_mult_system<K: Field>(family: &RewritingFamily<K>) -> Result<MultiplicationSystem<K>, BorderError> {
    MultiplicationSystem::build(family)
}
