//! Monomials, monomial sets, sparse polynomials and their text format.

mod monomial;
mod monoset;
mod parse;
mod polynomial;

pub use monomial::{default_names, Grading, Monomial, NotDivisible, TotalDegree};
pub use monoset::MonomialSet;
pub use parse::{format_system, parse_polynomial, ParseError, ParseErrorKind, SystemSource};
pub use polynomial::{PolyDisplay, Polynomial};
