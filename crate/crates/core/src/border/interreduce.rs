use crate::choice::Chooser;
use crate::coeff::Field;
use crate::poly::{Monomial, MonomialSet, Polynomial};

use super::BorderError;

/// Output of [`interreduce`].
#[derive(Debug, Clone, PartialEq)]
pub struct Interreduced<K: Field> {
    /// Monic rules `lead → tail`. Tails contain only basis monomials and
    /// monomials outside the basis that never became a pivot.
    pub rules: Vec<(Monomial, Polynomial<K>)>,
    /// Nonzero combinations with support in the basis (degree drops),
    /// linearly independent.
    pub witnesses: Vec<Polynomial<K>>,
}

impl<K: Field> Interreduced<K> {
    pub fn leads(&self) -> impl Iterator<Item = &Monomial> + '_ {
        self.rules.iter().map(|(m, _)| m)
    }
}

/// Gauss-Jordan elimination of `rows`, pivoting only on monomials outside
/// `basis`.
///
/// Support-only choice functions pivot column by column in decreasing
/// choice order, so the leads are the choice-maximal monomials of the row
/// space. Exact fields take the first row with a nonzero entry in the pivot
/// column, the float field the row of largest magnitude. Coefficient
/// dependent choices (`minsz`, `mix`) pivot row by row on the choice of the
/// partially reduced row.
pub fn interreduce<K: Field>(
    rows: &[Polynomial<K>],
    basis: &MonomialSet,
    chooser: &mut Chooser,
) -> Result<Interreduced<K>, BorderError> {
    let Some(first) = rows.first() else {
        return Ok(Interreduced { rules: Vec::new(), witnesses: Vec::new() });
    };
    let field = first.field().clone();
    let nvars = first.nvars();

    let mut pivotable: Vec<Monomial> = Vec::new();
    let mut fixed: Vec<Monomial> = Vec::new();
    {
        let mut seen = std::collections::BTreeSet::new();
        for r in rows {
            for m in r.monomials() {
                if seen.insert(m.clone()) {
                    if basis.contains(m) {
                        fixed.push(m.clone());
                    } else {
                        pivotable.push(m.clone());
                    }
                }
            }
        }
    }
    let order = chooser.function().kind.monomial_order();
    if let Some(cmp) = order {
        pivotable.sort_by(|a, b| cmp(b, a));
    }
    let npiv = pivotable.len();
    let columns: Vec<Monomial> = pivotable.iter().chain(fixed.iter()).cloned().collect();
    let index: std::collections::HashMap<&Monomial, usize> =
        columns.iter().enumerate().map(|(i, m)| (m, i)).collect();

    let mut mat = Matrix::new(&field, columns.len());
    for r in rows {
        let mut dense = vec![field.zero(); columns.len()];
        for (m, c) in r.terms() {
            dense[index[m]] = c.clone();
        }
        mat.rows.push(dense);
    }

    // (row, column) of each pivot in creation order.
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut is_pivot_row = vec![false; mat.rows.len()];

    if order.is_some() {
        for col in 0..npiv {
            let cand = (0..mat.rows.len()).filter(|&r| !is_pivot_row[r] && !field.is_zero(&mat.rows[r][col]));
            let chosen = if field.is_exact() {
                cand.into_iter().next()
            } else {
                cand.max_by(|&a, &b| {
                    field
                        .magnitude(&mat.rows[a][col])
                        .total_cmp(&field.magnitude(&mat.rows[b][col]))
                        .then(b.cmp(&a))
                })
            };
            if let Some(r) = chosen {
                mat.pivot(r, col)?;
                is_pivot_row[r] = true;
                pivots.push((r, col));
            }
        }
    } else {
        for r in 0..mat.rows.len() {
            for &(pr, pc) in &pivots {
                mat.eliminate_from(r, pr, pc);
            }
            let cands: Vec<(&Monomial, &K::Elem)> = (0..npiv)
                .filter(|&c| !field.is_zero(&mat.rows[r][c]))
                .map(|c| (&columns[c], &mat.rows[r][c]))
                .collect();
            if cands.is_empty() {
                continue;
            }
            let lead = chooser.choose_from(&field, cands).map_err(|_| BorderError::DegeneratePivot)?;
            let col = index[&lead];
            mat.pivot(r, col)?;
            is_pivot_row[r] = true;
            pivots.push((r, col));
        }
    }

    let mut rules = Vec::with_capacity(pivots.len());
    for &(r, col) in &pivots {
        let mut tail = Polynomial::zero(&field, nvars);
        for (c, v) in mat.rows[r].iter().enumerate() {
            if c != col && !field.is_zero(v) {
                tail.add_term(columns[c].clone(), &field.neg(v));
            }
        }
        rules.push((columns[col].clone(), tail));
    }

    // Remaining rows vanish on the pivot columns; their basis parts are the
    // degree drops. Make them independent before returning.
    let mut rest = Matrix::new(&field, columns.len());
    for r in 0..mat.rows.len() {
        if !is_pivot_row[r] && mat.rows[r][npiv..].iter().any(|v| !field.is_zero(v)) {
            rest.rows.push(std::mem::take(&mut mat.rows[r]));
        }
    }
    let mut used = vec![false; rest.rows.len()];
    for col in npiv..columns.len() {
        let cand = (0..rest.rows.len()).filter(|&r| !used[r] && !field.is_zero(&rest.rows[r][col]));
        let chosen = if field.is_exact() {
            cand.into_iter().next()
        } else {
            cand.max_by(|&a, &b| {
                field.magnitude(&rest.rows[a][col]).total_cmp(&field.magnitude(&rest.rows[b][col])).then(b.cmp(&a))
            })
        };
        if let Some(r) = chosen {
            rest.pivot(r, col)?;
            used[r] = true;
        }
    }
    let mut witnesses = Vec::new();
    for (r, _) in used.iter().enumerate().filter(|(_, u)| **u) {
        let mut w = Polynomial::zero(&field, nvars);
        for (c, v) in rest.rows[r].iter().enumerate().skip(npiv) {
            w.add_term(columns[c].clone(), v);
        }
        if !w.is_zero() {
            witnesses.push(w);
        }
    }
    Ok(Interreduced { rules, witnesses })
}

struct Matrix<K: Field> {
    field: K,
    ncols: usize,
    rows: Vec<Vec<K::Elem>>,
}

impl<K: Field> Matrix<K> {
    fn new(field: &K, ncols: usize) -> Self {
        Matrix { field: field.clone(), ncols, rows: Vec::new() }
    }

    /// Normalizes row `r` at `col` and clears `col` in every other row.
    fn pivot(&mut self, r: usize, col: usize) -> Result<(), BorderError> {
        let k = &self.field;
        let inv = k.inv(&self.rows[r][col]).map_err(|_| BorderError::DegeneratePivot)?;
        for v in self.rows[r].iter_mut() {
            if !k.is_zero(v) {
                *v = k.mul(v, &inv);
            } else {
                *v = k.zero();
            }
        }
        self.rows[r][col] = k.one();
        for other in 0..self.rows.len() {
            if other != r {
                self.eliminate_from(other, r, col);
            }
        }
        Ok(())
    }

    /// `row[target] -= row[target][col] * row[pivot]`, assuming the pivot
    /// row is normalized at `col`.
    fn eliminate_from(&mut self, target: usize, pivot: usize, col: usize) {
        let k = &self.field;
        let factor = self.rows[target][col].clone();
        if k.is_zero(&factor) {
            return;
        }
        let (t, p) = if target < pivot {
            let (a, b) = self.rows.split_at_mut(pivot);
            (&mut a[target], &b[0])
        } else {
            let (a, b) = self.rows.split_at_mut(target);
            (&mut b[0], &a[pivot])
        };
        for c in 0..self.ncols {
            if k.is_zero(&p[c]) {
                continue;
            }
            let v = k.sub(&t[c], &k.mul(&factor, &p[c]));
            t[c] = if k.is_zero(&v) { k.zero() } else { v };
        }
        t[col] = k.zero();
    }
}
