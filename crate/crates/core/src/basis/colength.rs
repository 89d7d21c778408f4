use std::fmt;

use serde::{Serialize, Serializer};

use super::mora::standard_basis_local;
use super::{BasisError, Limits, StandardBasis};
use crate::matrix::IdealSpec;
use crate::poly::{Coefficient, Monomial, MonomialOrder};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Colength {
    Finite(u64),
    Infinite,
}

impl Colength {
    pub fn finite(&self) -> Option<u64> {
        match self {
            Colength::Finite(v) => Some(*v),
            Colength::Infinite => None,
        }
    }
}

impl fmt::Display for Colength {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Colength::Finite(v) => write!(f, "{v}"),
            Colength::Infinite => f.write_str("infinite"),
        }
    }
}

impl Serialize for Colength {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Colength::Finite(v) => serializer.serialize_u64(*v),
            Colength::Infinite => serializer.serialize_str("infinite"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ColengthMethod {
    MoraStaircase,
    TruncatedLinearAlgebra,
}

/// `dim O_q / I` with the standard monomials as witness when finite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColengthResult {
    pub value: Colength,
    pub method: ColengthMethod,
    pub witness: Vec<Monomial>,
}

impl ColengthResult {
    pub fn witness_strings(&self, vars: &[String]) -> Vec<String> {
        self.witness.iter().map(|m| m.display_with(vars)).collect()
    }
}

/// True iff every variable has a pure power among the leading monomials
/// (or the leading ideal is the unit ideal).
pub fn is_zero_dimensional_local<C: Coefficient>(b: &StandardBasis<C>) -> bool {
    if b.num_vars() == 0 || b.is_unit_ideal() {
        return true;
    }
    let mut seen = vec![false; b.num_vars()];
    for m in b.leading_monomials() {
        if let Some(k) = m.pure_power_var() {
            seen[k] = true;
        }
    }
    seen.into_iter().all(|s| s)
}

/// Monomials outside the leading ideal, sorted from `1` downward in the local
/// order. `None` if there are infinitely many.
pub fn standard_monomials(leading: &[Monomial], num_vars: usize) -> Option<Vec<Monomial>> {
    if leading.iter().any(Monomial::is_one) {
        return Some(Vec::new());
    }
    let mut bounds = vec![u32::MAX; num_vars];
    for m in leading {
        if let Some(k) = m.pure_power_var() {
            bounds[k] = bounds[k].min(m.exponents()[k]);
        }
    }
    if bounds.contains(&u32::MAX) {
        return None;
    }
    let mut out = Vec::new();
    let mut exps = vec![0u32; num_vars];
    collect(leading, &bounds, 0, &mut exps, &mut out);
    let order = MonomialOrder::NegDegRevLex;
    out.sort_by(|a, b| order.cmp(b, a));
    Some(out)
}

fn collect(leading: &[Monomial], bounds: &[u32], k: usize, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
    if k == exps.len() {
        out.push(Monomial::from_exponents(exps));
        return;
    }
    for e in 0..bounds[k] {
        exps[k] = e;
        // the remaining exponents are 0, so divisibility here rules out every completion
        let m = Monomial::from_exponents(exps);
        if leading.iter().any(|l| l.divides(&m)) {
            break;
        }
        collect(leading, bounds, k + 1, exps, out);
    }
    exps[k] = 0;
}

/// Colength from an already computed local standard basis.
pub fn colength_with_basis<C: Coefficient>(b: &StandardBasis<C>) -> ColengthResult {
    let method = ColengthMethod::MoraStaircase;
    if !is_zero_dimensional_local(b) {
        return ColengthResult { value: Colength::Infinite, method, witness: Vec::new() };
    }
    let witness = standard_monomials(b.leading_monomials(), b.num_vars()).expect("zero-dimensional");
    ColengthResult { value: Colength::Finite(witness.len() as u64), method, witness }
}

/// Local colength `dim O_q / I` via a Mora standard basis.
pub fn colength_local<C: Coefficient>(ideal: &IdealSpec<C>, limits: Limits) -> Result<ColengthResult, BasisError> {
    let b = standard_basis_local(ideal, limits)?;
    Ok(colength_with_basis(&b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::tests::{poly, vars};
    use proptest::prelude::*;

    fn ideal(gens: &[&str], n: usize) -> IdealSpec {
        IdealSpec::new(gens.iter().map(|s| poly(s, n)).collect(), vars(n), "test").unwrap()
    }

    fn colength(gens: &[&str], n: usize) -> Colength {
        colength_local(&ideal(gens, n), Limits::default()).unwrap().value
    }

    #[test]
    fn maximal_ideal_has_colength_one() {
        assert_eq!(colength(&["x1", "x2", "x3", "x4", "x5"], 5), Colength::Finite(1));
    }

    #[test]
    fn unit_ideal_has_colength_zero() {
        assert_eq!(colength(&["1 + x1", "x2"], 2), Colength::Finite(0));
    }

    #[test]
    fn local_units_are_invisible() {
        // (x(1 - x)) = (x) locally
        assert_eq!(colength(&["x1 - x1^2"], 1), Colength::Finite(1));
        // x^2 (1+y), y^3 (1+x)
        assert_eq!(colength(&["x1^2 + x1^2*x2", "x2^3 + x1*x2^3"], 2), Colength::Finite(6));
    }

    #[test]
    fn positive_dimensional_is_infinite() {
        assert_eq!(colength(&["x1"], 2), Colength::Infinite);
        assert_eq!(colength(&["x1*x2"], 2), Colength::Infinite);
    }

    #[test]
    fn witness_for_monomial_staircase() {
        let r = colength_local(&ideal(&["x1^2", "x1*x2", "x2^2"], 2), Limits::default()).unwrap();
        assert_eq!(r.value, Colength::Finite(3));
        assert_eq!(r.witness_strings(&vars(2)), vec!["1", "x1", "x2"]);
    }

    #[test]
    fn zero_dimensionality_predicate() {
        let b = standard_basis_local(&ideal(&["x1", "x2", "x3", "x4", "x5^3"], 5), Limits::default()).unwrap();
        assert!(is_zero_dimensional_local(&b));
        let b = standard_basis_local(&ideal(&["x1*x2"], 2), Limits::default()).unwrap();
        assert!(!is_zero_dimensional_local(&b));
        let empty = standard_basis_local(&IdealSpec::<crate::poly::Rational>::new(vec![], vars(2), "e").unwrap(), Limits::default()).unwrap();
        assert!(!is_zero_dimensional_local(&empty));
        let none = standard_basis_local(&IdealSpec::<crate::poly::Rational>::new(vec![], vec![], "e").unwrap(), Limits::default()).unwrap();
        assert!(is_zero_dimensional_local(&none));
        assert_eq!(colength_with_basis(&none).value, Colength::Finite(1));
    }

    /// Brute-force lattice-point count under a monomial staircase.
    fn brute_force_count(gens: &[Vec<u32>], n: usize, box_size: u32) -> u64 {
        let mut count = 0;
        let total = (box_size as u64).pow(n as u32);
        for code in 0..total {
            let mut c = code;
            let e: Vec<u32> = (0..n)
                .map(|_| {
                    let d = (c % box_size as u64) as u32;
                    c /= box_size as u64;
                    d
                })
                .collect();
            if !gens.iter().any(|g| g.iter().zip(&e).all(|(a, b)| a <= b)) {
                count += 1;
            }
        }
        count
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(50))]

        #[test]
        fn monomial_ideals_match_lattice_count(
            n in 1usize..4,
            powers in proptest::collection::vec(1u32..5, 3),
            extra in proptest::collection::vec(proptest::collection::vec(0u32..4, 3), 0..4),
        ) {
            let mut gens: Vec<Vec<u32>> = (0..n).map(|k| {
                let mut e = vec![0; n];
                e[k] = powers[k];
                e
            }).collect();
            gens.extend(extra.iter().map(|e| e[..n].to_vec()));
            let polys = gens.iter().map(|e| {
                crate::poly::Polynomial::term(Monomial::from_exponents(e), crate::poly::Rational::from_integer(1), MonomialOrder::DegRevLex)
            }).collect();
            let spec = IdealSpec::new(polys, vars(n), "monomial").unwrap();
            let got = colength_local(&spec, Limits::default()).unwrap().value;
            prop_assert_eq!(got, Colength::Finite(brute_force_count(&gens, n, 5)));
        }
    }
}
