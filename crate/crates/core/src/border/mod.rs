//! Rewriting families, the projections `π_F` and `π^e_F`, C-polynomials and
//! the border basis construction.

mod algorithm;
mod family;
mod interreduce;

pub use algorithm::{compute_border_basis, BorderBasis};
pub use family::{ExtendedProjector, RewritingFamily};
pub use interreduce::{interreduce, Interreduced};

use thiserror::Error;

use crate::choice::{ChoiceError, Chooser};
use crate::coeff::Field;
use crate::poly::{Monomial, Polynomial};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BorderError {
    #[error("monomial {0} is neither in the basis nor the lead of a rule")]
    NotReducible(Monomial),
    #[error("extension of the projection needs a rule for {0}")]
    MissingRule(Monomial),
    #[error("invalid rule: {0}")]
    InvalidRule(String),
    #[error("degree {degree} exceeds the bound {bound}: the system is possibly not zero-dimensional")]
    NotZeroDimensional { degree: u32, bound: u32 },
    #[error("no usable pivot: all candidates are zero for the field threshold")]
    DegeneratePivot,
    #[error("empty input system")]
    EmptyInput,
    #[error(transparent)]
    Choice(#[from] ChoiceError),
}

/// `C(f, g) = lcm/(κ(f)γ(f))·f − lcm/(κ(g)γ(g))·g` with `lcm = lcm(γ(f), γ(g))`.
pub fn c_polynomial<K: Field>(
    f: &Polynomial<K>,
    g: &Polynomial<K>,
    chooser: &mut Chooser,
) -> Result<Polynomial<K>, BorderError> {
    let k = f.field();
    let (mf, cf) = chooser.lead(f)?;
    let (mg, cg) = chooser.lead(g)?;
    let l = mf.lcm(&mg);
    let inv_f = k.inv(&cf).map_err(|_| BorderError::DegeneratePivot)?;
    let inv_g = k.inv(&cg).map_err(|_| BorderError::DegeneratePivot)?;
    let a = f.mul_monomial(&l.div(&mf).unwrap()).scale(&inv_f);
    let b = g.mul_monomial(&l.div(&mg).unwrap()).scale(&inv_g);
    Ok(a.sub(&b))
}

/// Degree of the lcm of the chosen monomials of `f` and `g`.
pub fn c_degree<K: Field>(f: &Polynomial<K>, g: &Polynomial<K>, chooser: &mut Chooser) -> Result<u32, BorderError> {
    Ok(chooser.gamma(f)?.lcm(&chooser.gamma(g)?).degree())
}
