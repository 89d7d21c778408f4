//! Exponent vectors and the two monomial orders used here.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use super::PolyError;

pub type Exponents = SmallVec<[u32; 8]>;

/// A power product `x_1^{e_1} ... x_q^{e_q}` with cached total degree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Exponents,
    degree: u32,
}

impl Monomial {
    pub fn one(num_vars: usize) -> Self {
        Monomial { exps: SmallVec::from_elem(0, num_vars), degree: 0 }
    }

    pub fn var(index: usize, num_vars: usize) -> Self {
        let mut m = Monomial::one(num_vars);
        m.exps[index] = 1;
        m.degree = 1;
        m
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        let degree = exps.iter().sum();
        Monomial { exps: SmallVec::from_slice(exps), degree }
    }

    pub fn num_vars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    /// Product, failing on exponent overflow.
    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial, PolyError> {
        debug_assert_eq!(self.num_vars(), other.num_vars());
        let mut exps = Exponents::with_capacity(self.exps.len());
        for (a, b) in self.exps.iter().zip(&other.exps) {
            exps.push(a.checked_add(*b).ok_or(PolyError::ExponentOverflow)?);
        }
        let degree = self
            .degree
            .checked_add(other.degree)
            .ok_or(PolyError::ExponentOverflow)?;
        Ok(Monomial { exps, degree })
    }

    /// Product; panics on overflow, which cannot happen at the degrees of this domain.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.checked_mul(other).expect("exponent overflow")
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let exps: Exponents = other.exps.iter().zip(&self.exps).map(|(b, a)| b - a).collect();
        Some(Monomial { exps, degree: other.degree - self.degree })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: Exponents = self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect();
        let degree = exps.iter().sum();
        Monomial { exps, degree }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// `Some(k)` if this is a pure power `x_k^m` with `m >= 1`.
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut found = None;
        for (k, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(k);
            }
        }
        found
    }

    /// Renders the monomial with the given variable names, `1` for the unit.
    pub fn display_with(&self, vars: &[String]) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for (k, &e) in self.exps.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(vars[k].clone()),
                _ => parts.push(format!("{}^{}", vars[k], e)),
            }
        }
        parts.join("*")
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps.as_slice())
    }
}

/// Graded orders with degrevlex tie-break.
///
/// `DegRevLex` is a well-order (global). `NegDegRevLex` ranks lower total
/// degree higher, so `1` is the largest monomial (local).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub enum MonomialOrder {
    #[default]
    DegRevLex,
    NegDegRevLex,
}

impl MonomialOrder {
    pub fn is_global(&self) -> bool {
        matches!(self, MonomialOrder::DegRevLex)
    }

    pub fn is_local(&self) -> bool {
        !self.is_global()
    }

    /// Compares two monomials of equal length.
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.num_vars(), b.num_vars());
        let by_degree = match self {
            MonomialOrder::DegRevLex => a.degree.cmp(&b.degree),
            MonomialOrder::NegDegRevLex => b.degree.cmp(&a.degree),
        };
        by_degree.then_with(|| revlex_tiebreak(a, b))
    }

    /// Checked comparison for callers that cannot guarantee equal lengths.
    pub fn try_cmp(&self, a: &Monomial, b: &Monomial) -> Result<Ordering, PolyError> {
        if a.num_vars() != b.num_vars() {
            return Err(PolyError::ArityMismatch(a.num_vars(), b.num_vars()));
        }
        Ok(self.cmp(a, b))
    }

    pub fn name(&self) -> &'static str {
        match self {
            MonomialOrder::DegRevLex => "degrevlex",
            MonomialOrder::NegDegRevLex => "negdegrevlex",
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Within one degree: the monomial with the smaller exponent in the last
/// differing variable is larger.
#[inline]
fn revlex_tiebreak(a: &Monomial, b: &Monomial) -> Ordering {
    for (x, y) in a.exps.iter().rev().zip(b.exps.iter().rev()) {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}
