use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{divisor} does not divide {dividend}")]
pub struct NotDivisible {
    pub dividend: Monomial,
    pub divisor: Monomial,
}

/// A monomial `x0^e0 * x1^e1 * ...` stored as its exponent vector.
///
/// The derived order is the canonical iteration order used everywhere in the
/// crate: total degree first, then lexicographic on the exponent vector
/// (so `x0` comes after `x1` and `x0^2` after `x0*x1`).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Box<[u16]>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial { exps: vec![0; nvars].into_boxed_slice() }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial { exps: e.into_boxed_slice() }
    }

    pub fn from_exponents(exps: impl Into<Vec<u16>>) -> Self {
        Monomial { exps: exps.into().into_boxed_slice() }
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> u16 {
        self.exps[i]
    }

    /// The size `|m|`, i.e. the total degree.
    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        let exps = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
            .collect();
        Monomial { exps }
    }

    pub fn mul_var(&self, i: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps[i] = exps[i].checked_add(1).expect("exponent overflow");
        Monomial { exps }
    }

    /// `self / x_i`, if `x_i` divides `self`.
    pub fn div_var(&self, i: usize) -> Option<Monomial> {
        if self.exps[i] == 0 {
            return None;
        }
        let mut exps = self.exps.clone();
        exps[i] -= 1;
        Some(Monomial { exps })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps = self.exps.iter().zip(other.exps.iter()).map(|(a, b)| *a.max(b)).collect();
        Monomial { exps }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let exps = self.exps.iter().zip(other.exps.iter()).map(|(a, b)| *a.min(b)).collect();
        Monomial { exps }
    }

    /// Whether `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `self / divisor`.
    pub fn div(&self, divisor: &Monomial) -> Result<Monomial, NotDivisible> {
        if !divisor.divides(self) {
            return Err(NotDivisible { dividend: self.clone(), divisor: divisor.clone() });
        }
        let exps = self.exps.iter().zip(divisor.exps.iter()).map(|(a, b)| a - b).collect();
        Ok(Monomial { exps })
    }

    /// Indices of the variables dividing `self`, ascending.
    pub fn support_vars(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }

    /// Variables of `self` with repetition, ascending: `x0^2*x2` → `[0, 0, 2]`.
    pub fn var_sequence(&self) -> Vec<usize> {
        let mut seq = Vec::with_capacity(self.degree() as usize);
        for (i, &e) in self.exps.iter().enumerate() {
            seq.extend(std::iter::repeat_n(i, e as usize));
        }
        seq
    }

    pub fn from_var_sequence(nvars: usize, seq: &[usize]) -> Monomial {
        let mut e = vec![0u16; nvars];
        for &i in seq {
            e[i] += 1;
        }
        Monomial::from_exponents(e)
    }

    /// Renders with the given variable names, `1` for the identity.
    pub fn format_with(&self, names: &[String]) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for (i, &e) in self.exps.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(names[i].clone()),
                _ => parts.push(format!("{}^{}", names[i], e)),
            }
        }
        parts.join("*")
    }

    /// All monomials in `nvars` variables of total degree exactly `d`, in
    /// canonical order.
    pub fn all_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
        fn rec(i: usize, left: u32, cur: &mut Vec<u16>, out: &mut Vec<Monomial>) {
            if i + 1 == cur.len() {
                cur[i] = left as u16;
                out.push(Monomial::from_exponents(cur.clone()));
                return;
            }
            for e in 0..=left {
                cur[i] = e as u16;
                rec(i + 1, left - e, cur, out);
            }
        }
        if nvars == 0 {
            return if d == 0 { vec![Monomial::one(0)] } else { vec![] };
        }
        let mut out = Vec::new();
        rec(0, d, &mut vec![0; nvars], &mut out);
        out.sort();
        out
    }

    /// All monomials of total degree at most `d`, in canonical order.
    pub fn all_up_to_degree(nvars: usize, d: u32) -> Vec<Monomial> {
        (0..=d).flat_map(|k| Monomial::all_of_degree(nvars, k)).collect()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = default_names(self.nvars());
        write!(f, "{}", self.format_with(&names))
    }
}

/// `x0, x1, ...`
pub fn default_names(nvars: usize) -> Vec<String> {
    (0..nvars).map(|i| format!("x{i}")).collect()
}

/// A grading of the polynomial ring. Only the total degree is provided;
/// any implementation must be reducing (a strict divisor has strictly
/// smaller degree) and compatible with multiplication.
pub trait Grading {
    type Degree: Ord + Copy + fmt::Debug;
    fn degree(&self, m: &Monomial) -> Self::Degree;
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct TotalDegree;

impl Grading for TotalDegree {
    type Degree = u32;
    fn degree(&self, m: &Monomial) -> u32 {
        m.degree()
    }
}
