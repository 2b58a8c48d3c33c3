//! Coefficient fields.
//!
//! Every algebraic routine in the crate is generic over [`Field`]. Three
//! concrete fields are provided: exact rationals ([`Rationals`]), a prime
//! field ([`PrimeField`]) and 64-bit floats with a magnitude threshold
//! ([`FloatField`]). In the float field a value is treated as zero when its
//! absolute value is below the field's `eps`; this is the only place where
//! the thresholded ("ε-algorithm") behaviour lives, so the rest of the crate
//! just asks the field.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Threshold used by the float field when none is given.
pub const DEFAULT_EPS: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FieldError {
    #[error("division by zero in {0}")]
    DivisionByZero(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("invalid threshold {0}: must be a finite nonnegative number")]
    InvalidEps(f64),
    #[error("coefficient {value} is not representable in {field}")]
    NotRepresentable { value: String, field: String },
    #[error("unknown field specification `{0}` (expected qq, fp:<p> or f64:<eps>)")]
    BadSpec(String),
}

/// A coefficient field. Implementors are small `Copy`-like handles carrying
/// the runtime parameters (modulus, threshold); elements are plain values.
pub trait Field: Clone + fmt::Debug + PartialEq + Send + Sync + 'static {
    type Elem: Clone + fmt::Debug + PartialEq + Send + Sync + 'static;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    /// Maps the exact rational `num/den` into the field.
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Self::Elem, FieldError>;
    /// Maps a decimal literal (e.g. `2.5e-3`) into the field.
    fn from_decimal(&self, text: &str) -> Result<Self::Elem, FieldError>;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem, FieldError>;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, FieldError> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    /// Additive identity test. For the float field this is `|a| < eps`.
    fn is_zero(&self, a: &Self::Elem) -> bool;

    /// Magnitude used for pivoting and thresholding. Exact fields return a
    /// float approximation (prime fields return the residue).
    fn magnitude(&self, a: &Self::Elem) -> f64;

    /// Storage size in bits, used by the size-minimizing choice function.
    fn bit_size(&self, a: &Self::Elem) -> u64;

    /// Conversion to a float; `None` when the field has no embedding into R.
    fn to_f64(&self, a: &Self::Elem) -> Option<f64>;

    fn format(&self, a: &Self::Elem) -> String;

    /// Whether arithmetic is exact (no thresholding).
    fn is_exact(&self) -> bool;

    fn config(&self) -> FieldConfig;
}

/// Runtime description of a field, as accepted on the command line:
/// `qq`, `fp:<p>` or `f64:<eps>`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FieldConfig {
    Rational,
    Prime(u64),
    Float(f64),
}

impl fmt::Display for FieldConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldConfig::Rational => write!(f, "qq"),
            FieldConfig::Prime(p) => write!(f, "fp:{p}"),
            FieldConfig::Float(eps) => write!(f, "f64:{eps:e}"),
        }
    }
}

impl FromStr for FieldConfig {
    type Err = FieldError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "qq" {
            return Ok(FieldConfig::Rational);
        }
        if let Some(p) = s.strip_prefix("fp:") {
            let p: u64 = p.parse().map_err(|_| FieldError::BadSpec(s.to_string()))?;
            PrimeField::new(p)?;
            return Ok(FieldConfig::Prime(p));
        }
        if s == "f64" {
            return Ok(FieldConfig::Float(DEFAULT_EPS));
        }
        if let Some(eps) = s.strip_prefix("f64:") {
            let eps: f64 = eps.parse().map_err(|_| FieldError::BadSpec(s.to_string()))?;
            FloatField::new(eps)?;
            return Ok(FieldConfig::Float(eps));
        }
        Err(FieldError::BadSpec(s.to_string()))
    }
}

/// Parses a decimal literal into an exact rational: `1.25e-3` → `1/800`.
pub fn parse_decimal_exact(text: &str) -> Option<BigRational> {
    let t = text.trim();
    let (mantissa, exp) = match t.find(['e', 'E']) {
        Some(i) => (&t[..i], t[i + 1..].parse::<i64>().ok()?),
        None => (t, 0),
    };
    let (neg, mantissa) = match mantissa.strip_prefix('-') {
        Some(m) => (true, m),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = match mantissa.find('.') {
        Some(i) => (&mantissa[..i], &mantissa[i + 1..]),
        None => (mantissa, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let digits = format!("{int_part}{frac_part}");
    let mut num: BigInt = if digits.is_empty() { BigInt::zero() } else { digits.parse().ok()? };
    if neg {
        num = -num;
    }
    let scale = exp - frac_part.len() as i64;
    let ten = BigInt::from(10u32);
    let r = if scale >= 0 {
        BigRational::from_integer(num * num_traits::pow(ten, scale as usize))
    } else {
        BigRational::new(num, num_traits::pow(ten, (-scale) as usize))
    };
    Some(r)
}

// ---------------------------------------------------------------------------

/// The field of rational numbers, arbitrary precision. `BigRational` keeps
/// values in lowest terms with a positive denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<BigRational, FieldError> {
        if den.is_zero() {
            return Err(FieldError::DivisionByZero("qq".into()));
        }
        Ok(BigRational::new(num.clone(), den.clone()))
    }
    fn from_decimal(&self, text: &str) -> Result<BigRational, FieldError> {
        parse_decimal_exact(text).ok_or_else(|| FieldError::NotRepresentable {
            value: text.to_string(),
            field: "qq".into(),
        })
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> Result<BigRational, FieldError> {
        if a.is_zero() {
            return Err(FieldError::DivisionByZero("qq".into()));
        }
        Ok(a.recip())
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn magnitude(&self, a: &BigRational) -> f64 {
        a.abs().to_f64().unwrap_or(f64::INFINITY)
    }
    fn bit_size(&self, a: &BigRational) -> u64 {
        a.numer().bits() + a.denom().bits()
    }
    fn to_f64(&self, a: &BigRational) -> Option<f64> {
        a.to_f64()
    }
    fn format(&self, a: &BigRational) -> String {
        if a.is_integer() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }
    fn is_exact(&self) -> bool {
        true
    }
    fn config(&self) -> FieldConfig {
        FieldConfig::Rational
    }
}

// ---------------------------------------------------------------------------

/// Integers modulo a prime `p`, stored as least nonnegative residues.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    /// Primality is verified for `p < 2^31`; larger moduli are trusted.
    pub fn new(p: u64) -> Result<Self, FieldError> {
        if p < 2 || (p < (1 << 31) && !is_prime_small(p)) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn reduce_big(&self, v: &BigInt) -> u64 {
        let p = BigInt::from(self.p);
        let r = v.mod_floor(&p);
        r.to_u64().expect("residue fits in u64")
    }
}

fn is_prime_small(p: u64) -> bool {
    if p < 4 {
        return p >= 2;
    }
    if p.is_multiple_of(2) {
        return false;
    }
    let mut d = 3;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Inverse of `a` modulo `p` by the extended Euclidean algorithm.
fn inv_mod(a: u64, p: u64) -> Option<u64> {
    let (mut old_r, mut r) = (a as i128, p as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(p as i128) as u64)
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn from_i64(&self, v: i64) -> u64 {
        (v as i128).rem_euclid(self.p as i128) as u64
    }
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<u64, FieldError> {
        let d = self.reduce_big(den);
        let n = self.reduce_big(num);
        let dinv = inv_mod(d, self.p).ok_or_else(|| FieldError::NotRepresentable {
            value: format!("{num}/{den}"),
            field: format!("fp:{}", self.p),
        })?;
        Ok(self.mul(&n, &dinv))
    }
    fn from_decimal(&self, text: &str) -> Result<u64, FieldError> {
        let r = parse_decimal_exact(text).ok_or_else(|| FieldError::NotRepresentable {
            value: text.to_string(),
            field: format!("fp:{}", self.p),
        })?;
        self.from_ratio(r.numer(), r.denom())
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.p as u128) as u64
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + self.p as u128 - *b as u128) % self.p as u128) as u64
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn inv(&self, a: &u64) -> Result<u64, FieldError> {
        inv_mod(*a, self.p).ok_or_else(|| FieldError::DivisionByZero(format!("fp:{}", self.p)))
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn magnitude(&self, a: &u64) -> f64 {
        *a as f64
    }
    fn bit_size(&self, a: &u64) -> u64 {
        64 - a.leading_zeros() as u64
    }
    fn to_f64(&self, _a: &u64) -> Option<f64> {
        None
    }
    fn format(&self, a: &u64) -> String {
        a.to_string()
    }
    fn is_exact(&self) -> bool {
        true
    }
    fn config(&self) -> FieldConfig {
        FieldConfig::Prime(self.p)
    }
}

// ---------------------------------------------------------------------------

/// 64-bit floats where every value of magnitude below `eps` counts as zero.
/// `eps = 0` gives exact float comparison.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FloatField {
    eps: f64,
}

impl FloatField {
    pub fn new(eps: f64) -> Result<Self, FieldError> {
        if !eps.is_finite() || eps < 0.0 {
            return Err(FieldError::InvalidEps(eps));
        }
        Ok(FloatField { eps })
    }

    pub fn eps(&self) -> f64 {
        self.eps
    }
}

impl Default for FloatField {
    fn default() -> Self {
        FloatField { eps: DEFAULT_EPS }
    }
}

impl Field for FloatField {
    type Elem = f64;

    fn zero(&self) -> f64 {
        0.0
    }
    fn one(&self) -> f64 {
        1.0
    }
    fn from_i64(&self, v: i64) -> f64 {
        v as f64
    }
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<f64, FieldError> {
        if den.is_zero() {
            return Err(FieldError::DivisionByZero(self.config().to_string()));
        }
        BigRational::new(num.clone(), den.clone())
            .to_f64()
            .ok_or_else(|| FieldError::NotRepresentable {
                value: format!("{num}/{den}"),
                field: self.config().to_string(),
            })
    }
    fn from_decimal(&self, text: &str) -> Result<f64, FieldError> {
        text.trim().parse::<f64>().map_err(|_| FieldError::NotRepresentable {
            value: text.to_string(),
            field: self.config().to_string(),
        })
    }
    fn add(&self, a: &f64, b: &f64) -> f64 {
        a + b
    }
    fn sub(&self, a: &f64, b: &f64) -> f64 {
        a - b
    }
    fn mul(&self, a: &f64, b: &f64) -> f64 {
        a * b
    }
    fn neg(&self, a: &f64) -> f64 {
        -a
    }
    fn inv(&self, a: &f64) -> Result<f64, FieldError> {
        if self.is_zero(a) || *a == 0.0 {
            return Err(FieldError::DivisionByZero(self.config().to_string()));
        }
        Ok(1.0 / a)
    }
    fn is_zero(&self, a: &f64) -> bool {
        if self.eps == 0.0 {
            *a == 0.0
        } else {
            a.abs() < self.eps
        }
    }
    fn magnitude(&self, a: &f64) -> f64 {
        a.abs()
    }
    fn bit_size(&self, _a: &f64) -> u64 {
        64
    }
    fn to_f64(&self, a: &f64) -> Option<f64> {
        Some(*a)
    }
    fn format(&self, a: &f64) -> String {
        format!("{a:?}")
    }
    fn is_exact(&self) -> bool {
        false
    }
    fn config(&self) -> FieldConfig {
        FieldConfig::Float(self.eps)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn rational_sum() {
        let k = Rationals;
        assert_eq!(k.add(&q(1, 3), &q(1, 6)), q(1, 2));
        assert_eq!(k.format(&q(2, -4)), "-1/2");
    }

    #[test]
    fn prime_product() {
        let k = PrimeField::new(7).unwrap();
        assert_eq!(k.mul(&3, &5), 1);
        assert_eq!(k.inv(&3).unwrap(), 5);
        assert!(k.inv(&0).is_err());
        assert_eq!(k.from_i64(-1), 6);
    }

    #[test]
    fn composite_modulus_rejected() {
        assert_eq!(PrimeField::new(65535), Err(FieldError::NotPrime(65535)));
        assert!(PrimeField::new(65537).is_ok());
        assert!(PrimeField::new(1_000_003).is_ok());
    }

    #[test]
    fn float_threshold() {
        let k = FloatField::new(1e-10).unwrap();
        assert!(k.div(&1.0, &1e-12).is_err());
        assert!(k.is_zero(&5e-11));
        assert!(!k.is_zero(&2e-10));
        assert!(FloatField::new(-1.0).is_err());
        let exact = FloatField::new(0.0).unwrap();
        assert!(!exact.is_zero(&1e-300));
        assert!(exact.is_zero(&0.0));
    }

    #[test]
    fn rational_zero() {
        assert!(Rationals.is_zero(&q(0, 1)));
    }

    #[test]
    fn field_specs() {
        assert_eq!("qq".parse::<FieldConfig>().unwrap(), FieldConfig::Rational);
        assert_eq!("fp:7".parse::<FieldConfig>().unwrap(), FieldConfig::Prime(7));
        assert_eq!("f64:1e-10".parse::<FieldConfig>().unwrap(), FieldConfig::Float(1e-10));
        assert!("fp:8".parse::<FieldConfig>().is_err());
        assert!("gf:7".parse::<FieldConfig>().is_err());
        for spec in ["qq", "fp:65537", "f64:1e-10"] {
            let c: FieldConfig = spec.parse().unwrap();
            assert_eq!(c.to_string().parse::<FieldConfig>().unwrap(), c);
        }
    }

    #[test]
    fn decimals() {
        assert_eq!(parse_decimal_exact("1.25e-3").unwrap(), q(1, 800));
        assert_eq!(parse_decimal_exact("-2.5").unwrap(), q(-5, 2));
        assert_eq!(parse_decimal_exact("3e2").unwrap(), q(300, 1));
        assert!(parse_decimal_exact("1.2.3").is_none());
        let k = PrimeField::new(7).unwrap();
        assert_eq!(k.from_decimal("0.5").unwrap(), 4);
        assert_eq!(k.from_decimal("0.7").unwrap(), 0);
        // 1/10 needs 10 invertible mod 5
        let k5 = PrimeField::new(5).unwrap();
        assert!(k5.from_decimal("0.1").is_err());
    }

    proptest! {
        #[test]
        fn prime_field_axioms(a in 0u64..65537, b in 1u64..65537) {
            let k = PrimeField::new(65537).unwrap();
            let ab = k.mul(&a, &b);
            prop_assert_eq!(k.div(&ab, &b).unwrap(), a);
            prop_assert!(k.is_zero(&k.sub(&a, &a)));
            if a != 0 {
                prop_assert!(!k.is_zero(&ab));
            }
        }

        #[test]
        fn rational_axioms(an in -1000i64..1000, ad in 1i64..1000, bn in 1i64..1000, bd in 1i64..1000) {
            let k = Rationals;
            let a = q(an, ad);
            let b = q(bn, bd);
            prop_assert_eq!(k.div(&k.mul(&a, &b), &b).unwrap(), a.clone());
            prop_assert!(k.is_zero(&k.sub(&a, &a)));
            prop_assert!(a.denom() > &BigInt::zero());
        }

        #[test]
        fn float_zero_test_is_monotone(a in -1e-6f64..1e-6, e1 in 0f64..1e-6, extra in 0f64..1e-6) {
            let small = FloatField::new(e1).unwrap();
            let large = FloatField::new(e1 + extra).unwrap();
            if small.is_zero(&a) {
                prop_assert!(large.is_zero(&a));
            }
        }
    }
}
