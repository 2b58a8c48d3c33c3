//! Numerical roots from the multiplication operators and the residual
//! metric `mnacr`.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::border::RewritingFamily;
use crate::coeff::Field;
use crate::poly::Polynomial;
use crate::quotient::MultiplicationSystem;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SolveError {
    #[error("field {0} has no embedding into the complex numbers")]
    NotNumeric(String),
    #[error("Schur decomposition did not converge")]
    NoConvergence,
}

/// Approximate roots with multiplicity, and their residual.
#[derive(Debug, Clone, PartialEq)]
pub struct RootSet {
    pub roots: Vec<Vec<Complex64>>,
    /// `max_i max_ζ |f_i(ζ)|`.
    pub mnacr: f64,
    pub seed: u64,
    /// Number of eigenvalues of the random combination lying in a cluster
    /// of size at least two (multiple or nearly multiple roots).
    pub clustered: usize,
}

fn to_complex<K: Field>(ms: &MultiplicationSystem<K>, i: usize) -> Result<DMatrix<Complex64>, SolveError> {
    let d = ms.dimension();
    let k = ms.field();
    let mut out = DMatrix::zeros(d, d);
    for r in 0..d {
        for c in 0..d {
            let v = k.to_f64(ms.entry(i, r, c)).ok_or_else(|| SolveError::NotNumeric(k.config().to_string()))?;
            out[(r, c)] = Complex64::new(v, 0.0);
        }
    }
    Ok(out)
}

/// Random combination coefficients on the unit circle.
fn combination(n: usize, seed: u64) -> Vec<Complex64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| Complex64::from_polar(1.0, rng.random_range(0.0..std::f64::consts::TAU))).collect()
}

/// Roots of the quotient described by `ms`.
///
/// Takes the Schur form `Q* M Q` of a random combination `M = Σ t_i M_i`;
/// since the operators commute, `Q* M_i Q` is triangular too and its
/// diagonal lists the `i`-th coordinates of the roots in a consistent order.
pub fn eigen_roots<K: Field>(ms: &MultiplicationSystem<K>, seed: u64) -> Result<(Vec<Vec<Complex64>>, usize), SolveError> {
    let d = ms.dimension();
    let n = ms.nvars();
    if ms.field().to_f64(&ms.field().one()).is_none() {
        return Err(SolveError::NotNumeric(ms.field().config().to_string()));
    }
    if d == 0 {
        return Ok((Vec::new(), 0));
    }
    let mats: Vec<DMatrix<Complex64>> = (0..n).map(|i| to_complex(ms, i)).collect::<Result<_, _>>()?;
    let t = combination(n, seed);
    let mut m = DMatrix::<Complex64>::zeros(d, d);
    for (mi, ti) in mats.iter().zip(&t) {
        m += mi * *ti;
    }
    let schur = nalgebra::linalg::Schur::try_new(m, f64::EPSILON, 10_000).ok_or(SolveError::NoConvergence)?;
    let (q, tri) = schur.unpack();
    let qh = q.adjoint();
    let coords: Vec<Vec<Complex64>> = mats
        .iter()
        .map(|mi| {
            let r = &qh * mi * &q;
            (0..d).map(|k| r[(k, k)]).collect()
        })
        .collect();
    let roots: Vec<Vec<Complex64>> = (0..d).map(|k| (0..n).map(|i| coords[i][k]).collect()).collect();

    let eig: Vec<Complex64> = (0..d).map(|k| tri[(k, k)]).collect();
    let scale = eig.iter().map(|z| z.norm()).fold(1.0, f64::max);
    let tol = 1e-6 * scale;
    let clustered = (0..d).filter(|&a| (0..d).any(|b| b != a && (eig[a] - eig[b]).norm() < tol)).count();
    if clustered > 0 {
        log::warn!("{clustered} of {d} eigenvalues are clustered within {tol:e}; roots may be inaccurate");
    }
    Ok((roots, clustered))
}

/// `max_i max_ζ |f_i(ζ)|`; zero for an empty root set.
pub fn mnacr<K: Field>(roots: &[Vec<Complex64>], polys: &[Polynomial<K>]) -> f64 {
    let mut worst = 0.0f64;
    for z in roots {
        for f in polys {
            let v = f.eval_complex(z).map(|c| c.norm()).unwrap_or(f64::NAN);
            worst = worst.max(v);
        }
    }
    worst
}

/// Roots of `family`'s quotient with their residual on `inputs`.
pub fn solve<K: Field>(family: &RewritingFamily<K>, inputs: &[Polynomial<K>], seed: u64) -> Result<RootSet, SolveError> {
    let ms = MultiplicationSystem::build(family).map_err(|_| SolveError::NoConvergence)?;
    let (roots, clustered) = eigen_roots(&ms, seed)?;
    let mnacr = mnacr(&roots, inputs);
    Ok(RootSet { roots, mnacr, seed, clustered })
}

/// Largest `|ω(ζ) − ρ_ω(ζ)|` over the rules and roots.
pub fn rule_residual<K: Field>(family: &RewritingFamily<K>, roots: &[Vec<Complex64>]) -> f64 {
    let polys = family.polynomials();
    mnacr(roots, &polys)
}
