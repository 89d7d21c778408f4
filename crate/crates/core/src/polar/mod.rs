//! Polar multiplicities of symmetric determinantal singularities.
//!
//! Mixed polar degrees are alternating sums of local colengths of the ideals
//! `I_{A_l}`; the corank-two polar curve combines them binomially and halves
//! the result, the corank-one case scales one kernel-locus colength by
//! `2^(q-1)`.

mod codim;
mod generic;
mod mixed;
mod total;

pub use codim::{sample_codim, CodimSample};
pub use generic::{genericity_stabilize, random_congruences, Stabilized, TrialOutcome};
pub use mixed::{mixed_polar_degree, LevelColength, MixedCase, MixedPolarReport};
pub use total::{polar_degree_hypersurface, total_polar_degree_corank2, BinomialTerm, HypersurfaceDetail, PolarDegreeReport, TargetRank};
pub use generic::CONGRUENCE_ENTRY_BOUND;

use serde::Serialize;
use thiserror::Error;

use crate::basis::{colength_local, BasisError, ColengthResult, Limits};
use crate::matrix::{IdealSpec, MatrixError};
use crate::poly::{FieldTag, PolyError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolarError {
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Basis(#[from] BasisError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("ideal {label} (l={l}) is not zero-dimensional at the origin")]
    NotFinite { label: String, l: usize },
    #[error("no trial produced a finite value: {}", diagnostics.join("; "))]
    AllTrialsNotFinite { diagnostics: Vec<String> },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("pre-halving binomial sum {0} is odd")]
    OddSum(u64),
    #[error("alternating sum for ({i},{j}) is negative: {value}")]
    NegativeDegree { i: usize, j: usize, value: i64 },
    #[error("invalid options: {0}")]
    InvalidOptions(String),
}

impl PolarError {
    /// Failures that a different generic choice might avoid.
    pub fn is_not_finite(&self) -> bool {
        matches!(self, PolarError::NotFinite { .. } | PolarError::AllTrialsNotFinite { .. })
    }
}

/// How generic coordinates are sought and how colengths are computed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GenericityOptions {
    /// Random transforms tried in addition to the identity.
    pub trials: usize,
    pub seed: u64,
    pub field: FieldTag,
    pub limits: Limits,
    /// Sample the codimension of the target locus before computing.
    pub check_target: bool,
    /// Keep standard-monomial witnesses in reports.
    pub keep_witness: bool,
}

impl Default for GenericityOptions {
    fn default() -> Self {
        GenericityOptions {
            trials: 2,
            seed: 0x5eed,
            field: FieldTag::Rationals,
            limits: Limits::default(),
            check_target: true,
            keep_witness: false,
        }
    }
}

impl GenericityOptions {
    pub fn validate(&self) -> Result<(), PolarError> {
        if self.trials < 1 {
            return Err(PolarError::InvalidOptions("trials must be >= 1".into()));
        }
        if self.limits.step_cap == 0 || self.limits.degree_cap == 0 {
            return Err(PolarError::InvalidOptions("caps must be positive".into()));
        }
        if let FieldTag::PrimeField(p) = self.field {
            FieldTag::prime(p)?;
        }
        Ok(())
    }
}

/// Colength over the requested field; ideals are always built over `Q`.
pub fn colength_in_field(ideal: &IdealSpec, field: FieldTag, limits: Limits) -> Result<ColengthResult, PolarError> {
    Ok(match field {
        FieldTag::Rationals => colength_local(ideal, limits)?,
        FieldTag::PrimeField(p) => colength_local(&ideal.reduce_mod(p)?, limits)?,
    })
}

/// Outcome of comparing a colength over `Q` with its value over `F_p`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimeCrossCheck {
    pub prime: u64,
    pub rational: crate::basis::Colength,
    pub modular: crate::basis::Colength,
    pub agree: bool,
}

/// Recomputes the colength modulo `p` and logs a warning on mismatch. The
/// rational value stays authoritative.
pub fn prime_field_cross_check(ideal: &IdealSpec, p: u64, limits: Limits) -> Result<PrimeCrossCheck, PolarError> {
    FieldTag::prime(p)?;
    let rational = colength_local(ideal, limits)?.value;
    let modular = colength_local(&ideal.reduce_mod(p)?, limits)?.value;
    let agree = rational == modular;
    if !agree {
        log::warn!("colength of {} is {} over Q but {} modulo {}", ideal.label(), rational, modular, p);
    }
    Ok(PrimeCrossCheck { prime: p, rational, modular, agree })
}

/// True iff the polar variety of dimension `l` of the rank-`<= r` locus is
/// empty, i.e. `l <= r(r+1)/2 - 1`.
pub fn polar_is_empty(n: usize, r: usize, l: usize) -> Result<bool, PolarError> {
    if r > n {
        return Err(PolarError::Precondition(format!("rank bound r={r} exceeds n={n}")));
    }
    let bound = (r * (r + 1) / 2) as i64 - 1;
    Ok((l as i64) <= bound)
}
