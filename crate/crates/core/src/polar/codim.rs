//! Probabilistic codimension of the germ `F^{-1}(S_r)` at the origin.
//!
//! A generic linear section through the origin of dimension `c` meets the
//! germ only at the origin iff `c <= codim`. Sections of growing dimension
//! are tested by local colength finiteness of the restricted minors.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::PolarError;
use crate::basis::{colength_local, Colength, Limits};
use crate::linalg::RatMatrix;
use crate::matrix::{expected_codim, minors, IdealSpec, SymPolyMatrix};
use crate::poly::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CodimSample {
    pub n: usize,
    pub q: usize,
    pub r: usize,
    pub expected: usize,
    /// `None` when the origin is not on the locus.
    pub sampled: Option<usize>,
    pub origin_in_locus: bool,
    /// Rank of `F` at a random rational point.
    pub generic_rank: usize,
    pub seed: u64,
    pub pass: bool,
}

pub fn sample_codim(f: &SymPolyMatrix, r: usize, seed: u64, limits: Limits) -> Result<CodimSample, PolarError> {
    let (n, q) = (f.n(), f.q());
    let expected = expected_codim(n, r)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let point: Vec<Rational> = (0..q).map(|_| Rational::from_integer(rand::Rng::gen_range(&mut rng, -50..=50))).collect();
    let generic_rank = f.matrix().eval(&point).rank();
    let origin = vec![Rational::from_integer(0); q];
    let origin_in_locus = f.matrix().eval(&origin).rank() <= r;

    let sampled = if !origin_in_locus {
        None
    } else if r >= n {
        Some(0)
    } else {
        let gens = minors(f.matrix(), r + 1)?;
        let section = RatMatrix::random_integer(&mut rng, q, q, 5);
        let mut codim = q;
        for c in 1..=q {
            let mut a = RatMatrix::zeros(q, c);
            for row in 0..q {
                for col in 0..c {
                    a.set(row, col, section.get(row, col).clone());
                }
            }
            let restricted = gens.iter().map(|g| g.substitute_matrix(&a)).collect::<Result<Vec<_>, _>>()?;
            let names: Vec<String> = (1..=c).map(|k| format!("y{k}")).collect();
            let ideal = IdealSpec::new(restricted, names, format!("section of dim {c}"))?;
            if colength_local(&ideal, limits)?.value == Colength::Infinite {
                codim = c - 1;
                break;
            }
        }
        Some(codim)
    };
    let pass = sampled == Some(expected);
    Ok(CodimSample { n, q, r, expected, sampled, origin_in_locus, generic_rank, seed, pass })
}
