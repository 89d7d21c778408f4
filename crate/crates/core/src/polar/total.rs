//! Polar-curve multiplicities for corank two and corank one targets.

use std::collections::BTreeMap;

use num_integer::binomial;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{colength_in_field, mixed_polar_degree, sample_codim, CodimSample, GenericityOptions, MixedPolarReport, PolarError};
use crate::basis::Colength;
use crate::linalg::RatMatrix;
use crate::matrix::{determinant, kernel_locus_ideal, SymPolyMatrix};
use crate::poly::FieldTag;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum TargetRank {
    /// Hypersurface `det = 0`, rank `<= n-1`.
    Corank1,
    /// Rank `<= n-2`.
    Corank2,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BinomialTerm {
    pub i: usize,
    pub j: usize,
    pub binomial: u64,
    pub mixed_degree: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HypersurfaceDetail {
    pub w: RatMatrix,
    pub colength: u64,
    pub factor: u64,
    pub attempts: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PolarDegreeReport {
    pub target: TargetRank,
    pub n: usize,
    pub q: usize,
    /// Dimension of the singularity `X`.
    pub dim: usize,
    pub degree: u64,
    pub terms: Vec<BinomialTerm>,
    /// One report per unordered pair `{i, j}` that needed computation.
    pub mixed: Vec<MixedPolarReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pre_halving_sum: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hypersurface: Option<HypersurfaceDetail>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub target_check: Option<CodimSample>,
    pub seed: u64,
    pub field: FieldTag,
    pub probabilistic: bool,
}

/// `deg P_1 = (1/2) sum_i C(d+2, i) deg Γ_{i, d+2-i}` with `d = q - 3`.
pub fn total_polar_degree_corank2(f: &SymPolyMatrix, opts: &GenericityOptions) -> Result<PolarDegreeReport, PolarError> {
    opts.validate()?;
    let (n, q) = (f.n(), f.q());
    if q < 3 {
        return Err(PolarError::Precondition(format!("corank-two target needs q >= 3, got q={q}")));
    }
    let d = q - 3;
    let target_check = if opts.check_target {
        let s = sample_codim(f, n.saturating_sub(2), opts.seed, opts.limits)?;
        if !s.pass {
            return Err(PolarError::Precondition(format!("target locus has sampled codimension {:?}, expected {}", s.sampled, s.expected)));
        }
        Some(s)
    } else {
        None
    };
    let inner = GenericityOptions { check_target: false, ..opts.clone() };

    let pairs: Vec<(usize, usize)> = {
        let mut v: Vec<(usize, usize)> = (0..=d + 2).map(|i| (i.max(d + 2 - i), i.min(d + 2 - i))).collect();
        v.sort();
        v.dedup();
        v
    };
    let computed: Vec<MixedPolarReport> =
        pairs.par_iter().map(|&(i, j)| mixed_polar_degree(f, i, j, &inner)).collect::<Result<_, _>>()?;
    let by_pair: BTreeMap<(usize, usize), u64> = computed.iter().map(|r| (r.canonical, r.degree)).collect();

    let terms: Vec<BinomialTerm> = (0..=d + 2)
        .map(|i| {
            let j = d + 2 - i;
            BinomialTerm { i, j, binomial: binomial(d as u64 + 2, i as u64), mixed_degree: by_pair[&(i.max(j), i.min(j))] }
        })
        .collect();
    let sum: u64 = terms.iter().map(|t| t.binomial * t.mixed_degree).sum();
    if !sum.is_multiple_of(2) {
        return Err(PolarError::OddSum(sum));
    }
    Ok(PolarDegreeReport {
        target: TargetRank::Corank2,
        n,
        q,
        dim: d,
        degree: sum / 2,
        terms,
        mixed: computed,
        pre_halving_sum: Some(sum),
        hypersurface: None,
        target_check,
        seed: opts.seed,
        field: opts.field,
        probabilistic: opts.field != FieldTag::Rationals,
    })
}

/// Corank-one case: `2^(q-1)` times the colength of the locus where
/// `ker F(x)` meets a generic `(n-q+1)`-dimensional subspace; 0 when `q > n`.
pub fn polar_degree_hypersurface(f: &SymPolyMatrix, opts: &GenericityOptions) -> Result<PolarDegreeReport, PolarError> {
    opts.validate()?;
    let (n, q) = (f.n(), f.q());
    let det = determinant(f.matrix());
    if det.is_zero() {
        return Err(PolarError::Precondition("det F vanishes identically".into()));
    }
    if det.terms().iter().any(|t| t.mono.is_one()) {
        return Err(PolarError::Precondition("det F(0) != 0, origin is not on X".into()));
    }
    let mut report = PolarDegreeReport {
        target: TargetRank::Corank1,
        n,
        q,
        dim: q.saturating_sub(1),
        degree: 0,
        terms: Vec::new(),
        mixed: Vec::new(),
        pre_halving_sum: None,
        hypersurface: None,
        target_check: None,
        seed: opts.seed,
        field: opts.field,
        probabilistic: opts.field != FieldTag::Rationals,
    };
    if q > n {
        return Ok(report);
    }
    let width = n - q + 1;
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut diagnostics = Vec::new();
    for attempt in 1..=opts.trials {
        let w = loop {
            let w = RatMatrix::random_integer(&mut rng, n, width, 5);
            if w.rank() == width {
                break w;
            }
        };
        let ideal = kernel_locus_ideal(f, &w)?;
        match colength_in_field(&ideal, opts.field, opts.limits)?.value {
            Colength::Finite(c) => {
                let factor = 1u64 << (q - 1);
                report.degree = factor * c;
                report.hypersurface = Some(HypersurfaceDetail { w, colength: c, factor, attempts: attempt });
                return Ok(report);
            }
            Colength::Infinite => diagnostics.push(format!("attempt {attempt}: {} is not zero-dimensional", ideal.label())),
        }
    }
    Err(PolarError::AllTrialsNotFinite { diagnostics })
}
