//! Gröbner bases for the global order, Mora standard bases for the local
//! order, and two independent ways of computing local colengths.

mod buchberger;
mod colength;
mod mora;
mod oracle;
mod pairs;

pub use buchberger::{buchberger, reduce_full, spoly};
pub use colength::{colength_local, colength_with_basis, is_zero_dimensional_local, standard_monomials, Colength, ColengthMethod, ColengthResult};
pub use mora::{mora_normal_form, standard_basis_local};
pub use oracle::colength_truncated_oracle;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::poly::{Coefficient, Monomial, MonomialOrder, Polynomial};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BasisError {
    #[error("reduction step cap of {cap} exceeded")]
    ResourceExhausted { cap: u64 },
    #[error("no stabilization up to degree cap {cap} (last quotient dimension {last_dimension})")]
    DegreeCapExceeded { cap: u32, last_dimension: u64 },
    #[error("{operation} needs a {expected} order, got {found}")]
    WrongOrder { operation: &'static str, expected: &'static str, found: MonomialOrder },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

/// Algorithmic resource caps; counted in reduction steps, never wall time.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    pub step_cap: u64,
    pub degree_cap: u32,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { step_cap: 1_000_000, degree_cap: 50 }
    }
}

/// Counts elementary reduction steps against the cap.
#[derive(Debug)]
pub(crate) struct StepCounter {
    used: u64,
    cap: u64,
}

impl StepCounter {
    pub(crate) fn new(cap: u64) -> Self {
        StepCounter { used: 0, cap }
    }

    #[inline]
    pub(crate) fn tick(&mut self) -> Result<(), BasisError> {
        self.used += 1;
        if self.used > self.cap {
            Err(BasisError::ResourceExhausted { cap: self.cap })
        } else {
            Ok(())
        }
    }

    pub(crate) fn used(&self) -> u64 {
        self.used
    }
}

/// A basis together with its order and minimal leading monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardBasis<C: Coefficient> {
    basis: Vec<Polynomial<C>>,
    order: MonomialOrder,
    leading_monomials: Vec<Monomial>,
    num_vars: usize,
    steps: u64,
}

impl<C: Coefficient> StandardBasis<C> {
    /// Keeps only elements whose leading monomial is not divisible by another
    /// element's leading monomial (the first of equal ones survives).
    pub(crate) fn minimal(elements: Vec<Polynomial<C>>, order: MonomialOrder, num_vars: usize, steps: u64) -> Self {
        let elements: Vec<Polynomial<C>> = elements.into_iter().filter(|p| !p.is_zero()).collect();
        let mut keep = vec![true; elements.len()];
        for a in 0..elements.len() {
            let la = elements[a].leading_monomial().unwrap();
            for b in 0..elements.len() {
                if a == b || !keep[b] {
                    continue;
                }
                let lb = elements[b].leading_monomial().unwrap();
                if lb.divides(la) && (lb != la || b < a) {
                    keep[a] = false;
                    break;
                }
            }
        }
        let basis: Vec<Polynomial<C>> = elements.into_iter().zip(keep).filter_map(|(p, k)| k.then_some(p)).collect();
        let leading_monomials = basis.iter().map(|p| p.leading_monomial().unwrap().clone()).collect();
        StandardBasis { basis, order, leading_monomials, num_vars, steps }
    }

    pub fn basis(&self) -> &[Polynomial<C>] {
        &self.basis
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn leading_monomials(&self) -> &[Monomial] {
        &self.leading_monomials
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    /// Reduction steps spent computing this basis.
    pub fn steps(&self) -> u64 {
        self.steps
    }

    /// True if the leading ideal is the whole ring.
    pub fn is_unit_ideal(&self) -> bool {
        self.leading_monomials.iter().any(Monomial::is_one)
    }
}

/// Brings generators into the requested order and makes them monic.
pub(crate) fn prepare<C: Coefficient>(gens: &[Polynomial<C>], order: MonomialOrder) -> Vec<Polynomial<C>> {
    gens.iter().filter(|g| !g.is_zero()).map(|g| g.with_order(order).make_monic()).collect()
}
