//! Choice functions: pick the "leading" monomial of a polynomial among the
//! support monomials of maximal degree.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::coeff::Field;
use crate::poly::{Monomial, Polynomial};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ChoiceError {
    #[error("no choosable monomial (polynomial is zero or all coefficients are below the threshold)")]
    NoChoosableMonomial,
    #[error("unknown choice function `{0}` (expected drvl, dlex, mac, minsz or mix:<seed>)")]
    Unknown(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ChoiceKind {
    /// Degree, then reverse lexicographic.
    Drvl,
    /// Degree, then lexicographic with `x0 > x1 > ...`.
    Dlex,
    /// Degree, then largest single exponent, then lexicographic.
    Mac,
    /// Degree, then smallest coefficient bit size, then `drvl`.
    Minsz,
    /// Per call, `drvl` or `minsz` drawn from a seeded generator.
    Mix(u64),
}

impl ChoiceKind {
    /// Whether the choice only looks at the support of a polynomial.
    pub fn is_support_only(self) -> bool {
        matches!(self, ChoiceKind::Drvl | ChoiceKind::Dlex | ChoiceKind::Mac)
    }

    /// Monomial comparison for the support-only kinds (`None` otherwise).
    pub fn monomial_order(self) -> Option<fn(&Monomial, &Monomial) -> Ordering> {
        match self {
            ChoiceKind::Drvl => Some(cmp_drvl),
            ChoiceKind::Dlex => Some(cmp_dlex),
            ChoiceKind::Mac => Some(cmp_mac),
            _ => None,
        }
    }
}

impl fmt::Display for ChoiceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChoiceKind::Drvl => write!(f, "drvl"),
            ChoiceKind::Dlex => write!(f, "dlex"),
            ChoiceKind::Mac => write!(f, "mac"),
            ChoiceKind::Minsz => write!(f, "minsz"),
            ChoiceKind::Mix(s) => write!(f, "mix:{s}"),
        }
    }
}

impl FromStr for ChoiceKind {
    type Err = ChoiceError;

    fn from_str(s: &str) -> Result<Self, ChoiceError> {
        match s.trim() {
            "drvl" => Ok(ChoiceKind::Drvl),
            "dlex" => Ok(ChoiceKind::Dlex),
            "mac" => Ok(ChoiceKind::Mac),
            "minsz" => Ok(ChoiceKind::Minsz),
            "mix" => Ok(ChoiceKind::Mix(0)),
            other => other
                .strip_prefix("mix:")
                .and_then(|seed| seed.parse().ok())
                .map(ChoiceKind::Mix)
                .ok_or_else(|| ChoiceError::Unknown(s.to_string())),
        }
    }
}

pub fn cmp_dlex(a: &Monomial, b: &Monomial) -> Ordering {
    a.degree().cmp(&b.degree()).then_with(|| a.exponents().cmp(b.exponents()))
}

pub fn cmp_drvl(a: &Monomial, b: &Monomial) -> Ordering {
    a.degree().cmp(&b.degree()).then_with(|| {
        for (x, y) in a.exponents().iter().zip(b.exponents()).rev() {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

pub fn cmp_mac(a: &Monomial, b: &Monomial) -> Ordering {
    let top = |m: &Monomial| m.exponents().iter().copied().max().unwrap_or(0);
    a.degree()
        .cmp(&b.degree())
        .then_with(|| top(a).cmp(&top(b)))
        .then_with(|| a.exponents().cmp(b.exponents()))
}

/// A choice function with an optional magnitude filter (`γ_ε`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChoiceFunction {
    pub kind: ChoiceKind,
    pub eps: Option<f64>,
}

impl ChoiceFunction {
    pub fn new(kind: ChoiceKind) -> Self {
        ChoiceFunction { kind, eps: None }
    }

    pub fn with_eps(kind: ChoiceKind, eps: f64) -> Self {
        ChoiceFunction { kind, eps: Some(eps) }
    }

    /// A fresh chooser; `mix` restarts its generator from the seed.
    pub fn chooser(&self) -> Chooser {
        let rng = match self.kind {
            ChoiceKind::Mix(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
            _ => None,
        };
        Chooser { cf: *self, rng }
    }
}

impl From<ChoiceKind> for ChoiceFunction {
    fn from(kind: ChoiceKind) -> Self {
        ChoiceFunction::new(kind)
    }
}

/// Stateful evaluator of a [`ChoiceFunction`]. Only `mix` carries state.
#[derive(Debug, Clone)]
pub struct Chooser {
    cf: ChoiceFunction,
    rng: Option<ChaCha8Rng>,
}

impl Chooser {
    pub fn function(&self) -> ChoiceFunction {
        self.cf
    }

    /// The kind actually used for the next call (resolves `mix`).
    fn next_kind(&mut self) -> ChoiceKind {
        match (self.cf.kind, self.rng.as_mut()) {
            (ChoiceKind::Mix(_), Some(rng)) => {
                if rng.random_bool(0.5) {
                    ChoiceKind::Drvl
                } else {
                    ChoiceKind::Minsz
                }
            }
            (kind, _) => kind,
        }
    }

    /// Chooses among `(monomial, coefficient)` candidates.
    pub fn choose_from<'a, K: Field>(
        &mut self,
        field: &K,
        cands: impl IntoIterator<Item = (&'a Monomial, &'a K::Elem)>,
    ) -> Result<Monomial, ChoiceError> {
        let eps = self.cf.eps;
        let cands: Vec<(&Monomial, &K::Elem)> = cands
            .into_iter()
            .filter(|(_, c)| !field.is_zero(c) && eps.is_none_or(|e| field.magnitude(c) >= e))
            .collect();
        let top = cands.iter().map(|(m, _)| m.degree()).max().ok_or(ChoiceError::NoChoosableMonomial)?;
        let kind = self.next_kind();
        let best = cands.iter().filter(|(m, _)| m.degree() == top).max_by(|(a, ca), (b, cb)| match kind {
            ChoiceKind::Drvl => cmp_drvl(a, b),
            ChoiceKind::Dlex => cmp_dlex(a, b),
            ChoiceKind::Mac => cmp_mac(a, b),
            ChoiceKind::Minsz | ChoiceKind::Mix(_) => {
                field.bit_size(cb).cmp(&field.bit_size(ca)).then_with(|| cmp_drvl(a, b))
            }
        });
        Ok(best.map(|(m, _)| (*m).clone()).expect("nonempty"))
    }

    pub fn gamma<K: Field>(&mut self, p: &Polynomial<K>) -> Result<Monomial, ChoiceError> {
        self.choose_from(p.field(), p.terms())
    }

    /// `(γ(p), κ(p))`.
    pub fn lead<K: Field>(&mut self, p: &Polynomial<K>) -> Result<(Monomial, K::Elem), ChoiceError> {
        let m = self.gamma(p)?;
        let c = p.coeff(&m);
        Ok((m, c))
    }
}

/// `γ(p)` with a fresh chooser.
pub fn gamma<K: Field>(p: &Polynomial<K>, cf: &ChoiceFunction) -> Result<Monomial, ChoiceError> {
    cf.chooser().gamma(p)
}

/// `κ(p)`, the coefficient of `γ(p)`.
pub fn kappa<K: Field>(p: &Polynomial<K>, cf: &ChoiceFunction) -> Result<K::Elem, ChoiceError> {
    Ok(cf.chooser().lead(p)?.1)
}

/// `γ_ε(p)`: the choice restricted to coefficients of magnitude at least `eps`.
pub fn gamma_eps<K: Field>(p: &Polynomial<K>, cf: &ChoiceFunction, eps: f64) -> Result<Monomial, ChoiceError> {
    ChoiceFunction { eps: Some(eps), ..*cf }.chooser().gamma(p)
}
