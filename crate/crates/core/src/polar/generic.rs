//! Generic coordinates by random congruence transforms.
//!
//! Colength is upper-semicontinuous, so the generic value is the minimum
//! over finite trials; disagreeing finite values are reported, not hidden.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{GenericityOptions, PolarError};
use crate::linalg::RatMatrix;

/// Entries of random congruence matrices lie in `[-BOUND, BOUND]`.
pub const CONGRUENCE_ENTRY_BOUND: i64 = 5;

/// The identity followed by `trials` random invertible integer matrices.
pub fn random_congruences(n: usize, trials: usize, seed: u64) -> Vec<RatMatrix> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = vec![RatMatrix::identity(n)];
    out.extend((0..trials).map(|_| RatMatrix::random_invertible(&mut rng, n, CONGRUENCE_ENTRY_BOUND)));
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TrialOutcome {
    pub transform_index: usize,
    pub value: Option<u64>,
    pub diagnostic: Option<String>,
}

#[derive(Clone, Debug)]
pub struct Stabilized<T> {
    pub value: T,
    /// Index into `transforms` of the first trial attaining the minimum.
    pub attained_by: usize,
    pub transforms: Vec<RatMatrix>,
    pub outcomes: Vec<TrialOutcome>,
    /// Trials whose finite value differs from the minimum.
    pub disagreements: Vec<usize>,
}

/// Evaluates `compute` on the identity and on `opts.trials` random
/// congruences (in parallel) and keeps the smallest finite value by `key`.
pub fn genericity_stabilize<T, F, K>(n: usize, opts: &GenericityOptions, compute: F, key: K) -> Result<Stabilized<T>, PolarError>
where
    T: Send,
    F: Fn(&RatMatrix) -> Result<T, PolarError> + Sync,
    K: Fn(&T) -> u64,
{
    opts.validate()?;
    let transforms = random_congruences(n, opts.trials, opts.seed);
    let results: Vec<Result<T, PolarError>> = transforms.par_iter().map(&compute).collect();

    let mut outcomes = Vec::with_capacity(results.len());
    let mut values: Vec<Option<T>> = Vec::with_capacity(results.len());
    for (k, r) in results.into_iter().enumerate() {
        match r {
            Ok(v) => {
                outcomes.push(TrialOutcome { transform_index: k, value: Some(key(&v)), diagnostic: None });
                values.push(Some(v));
            }
            Err(e) if e.is_not_finite() => {
                outcomes.push(TrialOutcome { transform_index: k, value: None, diagnostic: Some(e.to_string()) });
                values.push(None);
            }
            Err(e) => return Err(e),
        }
    }
    let best = outcomes
        .iter()
        .filter_map(|o| o.value.map(|v| (v, o.transform_index)))
        .min();
    let Some((min, attained_by)) = best else {
        let diagnostics = outcomes.iter().filter_map(|o| o.diagnostic.clone()).collect();
        return Err(PolarError::AllTrialsNotFinite { diagnostics });
    };
    let disagreements: Vec<usize> =
        outcomes.iter().filter(|o| o.value.is_some_and(|v| v != min)).map(|o| o.transform_index).collect();
    if !disagreements.is_empty() {
        log::warn!("genericity trials disagree: minimum {min}, differing trials {disagreements:?}");
    }
    let value = values.swap_remove(attained_by).expect("finite");
    Ok(Stabilized { value, attained_by, transforms, outcomes, disagreements })
}
