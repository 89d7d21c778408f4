//! Mixed polar degrees `deg Γ_{i,j}` as alternating sums of colengths.

use std::sync::atomic::{AtomicUsize, Ordering};

use serde::Serialize;

use super::{colength_in_field, genericity_stabilize, sample_codim, CodimSample, GenericityOptions, PolarError, TrialOutcome};
use crate::basis::Colength;
use crate::linalg::RatMatrix;
use crate::matrix::{a_l_ideal, SymPolyMatrix};
use crate::poly::FieldTag;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum MixedCase {
    /// `j = 0`: the class vanishes.
    IZero,
    /// `i >= n`: `h^i = 0` on `P^{n-1}`.
    OutOfRange,
    /// `n - i <= j`: sum over `l = 1..n-i`.
    RowBound,
    /// `j < n - i`, `j` odd: sum over `l = 1..j+1`.
    ColBoundOdd,
    /// `j < n - i`, `j` even: the odd-case sum minus `colength(A_{j+1})`.
    ColBoundEven,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LevelColength {
    pub l: usize,
    pub label: String,
    pub colength: u64,
    pub sign: i8,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MixedPolarReport {
    pub n: usize,
    pub q: usize,
    /// Indices as requested.
    pub i: usize,
    pub j: usize,
    /// Indices after ordering so that `j <= i`.
    pub canonical: (usize, usize),
    pub case: MixedCase,
    pub per_level: Vec<LevelColength>,
    /// Extra term subtracted in the even column-bound case.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub correction: Option<LevelColength>,
    pub degree: u64,
    /// `None` when the given coordinates were used unchanged.
    pub generic_transform: Option<RatMatrix>,
    pub trials: Vec<TrialOutcome>,
    pub disagreements: Vec<usize>,
    pub seed: u64,
    pub field: FieldTag,
    /// True when colengths were computed over a prime field.
    pub probabilistic: bool,
    pub colength_evaluations: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub target_check: Option<CodimSample>,
    pub notes: Vec<String>,
}

struct Evaluation {
    per_level: Vec<LevelColength>,
    correction: Option<LevelColength>,
    degree: u64,
}

fn classify(n: usize, i: usize, j: usize) -> MixedCase {
    if j == 0 {
        MixedCase::IZero
    } else if i >= n {
        MixedCase::OutOfRange
    } else if n - i <= j {
        MixedCase::RowBound
    } else if j % 2 == 1 {
        MixedCase::ColBoundOdd
    } else {
        MixedCase::ColBoundEven
    }
}

fn level(f: &SymPolyMatrix, i: usize, j: usize, l: usize, sign: i8, opts: &GenericityOptions, evals: &AtomicUsize) -> Result<LevelColength, PolarError> {
    let ideal = a_l_ideal(f, i, j, l)?;
    evals.fetch_add(1, Ordering::Relaxed);
    let r = colength_in_field(&ideal, opts.field, opts.limits)?;
    match r.value {
        Colength::Infinite => Err(PolarError::NotFinite { label: ideal.label().to_string(), l }),
        Colength::Finite(c) => Ok(LevelColength {
            l,
            label: ideal.label().to_string(),
            colength: c,
            sign,
            witness: opts.keep_witness.then(|| r.witness_strings(f.vars())),
        }),
    }
}

fn evaluate(f: &SymPolyMatrix, i: usize, j: usize, case: MixedCase, opts: &GenericityOptions, evals: &AtomicUsize) -> Result<Evaluation, PolarError> {
    let n = f.n();
    let top = match case {
        MixedCase::RowBound => n - i,
        _ => j + 1,
    };
    let per_level = (1..=top)
        .map(|l| level(f, i, j, l, if l % 2 == 1 { 1 } else { -1 }, opts, evals))
        .collect::<Result<Vec<_>, _>>()?;
    let correction = match case {
        MixedCase::ColBoundEven => Some(level(f, i, j, j + 1, -1, opts, evals)?),
        _ => None,
    };
    let total: i64 = per_level.iter().chain(correction.iter()).map(|c| c.sign as i64 * c.colength as i64).sum();
    if total < 0 {
        return Err(PolarError::NegativeDegree { i, j, value: total });
    }
    Ok(Evaluation { per_level, correction, degree: total as u64 })
}

/// `deg Γ_{i,j}` for `F` with `i + j = q - 1`.
///
/// The indices are symmetric, `j = 0` and `i >= n` give 0 without
/// computation. Otherwise the alternating colength sum is evaluated in the
/// given coordinates and after random congruences; the minimum is kept.
pub fn mixed_polar_degree(f: &SymPolyMatrix, i: usize, j: usize, opts: &GenericityOptions) -> Result<MixedPolarReport, PolarError> {
    opts.validate()?;
    let (n, q) = (f.n(), f.q());
    let (ci, cj) = if j <= i { (i, j) } else { (j, i) };
    let case = classify(n, ci, cj);
    let mut report = MixedPolarReport {
        n,
        q,
        i,
        j,
        canonical: (ci, cj),
        case,
        per_level: Vec::new(),
        correction: None,
        degree: 0,
        generic_transform: None,
        trials: Vec::new(),
        disagreements: Vec::new(),
        seed: opts.seed,
        field: opts.field,
        probabilistic: opts.field != FieldTag::Rationals,
        colength_evaluations: 0,
        target_check: None,
        notes: Vec::new(),
    };
    if matches!(case, MixedCase::IZero | MixedCase::OutOfRange) {
        return Ok(report);
    }
    if ci + cj + 1 != q {
        return Err(PolarError::Precondition(format!("need i + j = q - 1 = {}, got i={i}, j={j}", q as i64 - 1)));
    }
    if opts.check_target {
        let sample = sample_codim(f, n.saturating_sub(2), opts.seed, opts.limits)?;
        if !sample.pass {
            return Err(PolarError::Precondition(format!(
                "target locus has sampled codimension {:?}, expected {} (origin on locus: {})",
                sample.sampled, sample.expected, sample.origin_in_locus
            )));
        }
        report.target_check = Some(sample);
    }
    if case == MixedCase::ColBoundEven {
        report.notes.push(format!(
            "even j: the correction term repeats level l={} with a minus sign, so that level cancels",
            cj + 1
        ));
    }

    let evals = AtomicUsize::new(0);
    let stable = genericity_stabilize(
        n,
        opts,
        |m| {
            let g = if m.is_identity() { f.clone() } else { f.congruence(m)? };
            evaluate(&g, ci, cj, case, opts, &evals)
        },
        |e| e.degree,
    )?;
    report.colength_evaluations = evals.into_inner();
    report.per_level = stable.value.per_level;
    report.correction = stable.value.correction;
    report.degree = stable.value.degree;
    let chosen = &stable.transforms[stable.attained_by];
    report.generic_transform = (!chosen.is_identity()).then(|| chosen.clone());
    report.trials = stable.outcomes;
    report.disagreements = stable.disagreements;
    Ok(report)
}
