//! Colength by truncated linear algebra, independent of any standard basis.
//!
//! At truncation degree `N` the quotient `O_q / (I + m^N)` is spanned by the
//! monomials of degree `< N` modulo the span of all `x^a g` truncated below
//! `N`. Its dimension `d_N` is reported once `d_N = d_{N+1}` and every
//! monomial of degree `N` lies in the row space at level `N+1`; by Nakayama
//! this gives `m^N ⊂ I` and `d_N` is the colength.

use std::collections::HashMap;

use super::{BasisError, Colength, ColengthMethod, ColengthResult};
use crate::matrix::IdealSpec;
use crate::poly::{Coefficient, Monomial, MonomialOrder, Polynomial};

type SparseRow<C> = Vec<(usize, C)>;

/// Row echelon form keyed by pivot column; pivot entries are 1.
struct Echelon<C> {
    pivots: HashMap<usize, SparseRow<C>>,
}

impl<C: Coefficient> Echelon<C> {
    fn new() -> Self {
        Echelon { pivots: HashMap::new() }
    }

    /// Eliminates every pivot column from `row`. The smallest pivot column
    /// still present strictly increases, so this terminates.
    fn reduce(&self, mut row: SparseRow<C>) -> SparseRow<C> {
        loop {
            let hit = row.iter().find_map(|(k, c)| self.pivots.get(k).map(|p| (c.clone(), p)));
            match hit {
                None => return row,
                Some((c, p)) => row = axpy(&row, &c, p),
            }
        }
    }

    /// Inserts a row, returning whether the rank grew.
    fn insert(&mut self, row: SparseRow<C>) -> bool {
        let reduced = self.reduce(row);
        let Some((col, lead)) = reduced.first().cloned() else {
            return false;
        };
        let inv = lead.inv().expect("nonzero");
        let normalized = reduced.into_iter().map(|(k, v)| (k, v.mul_ref(&inv))).collect();
        self.pivots.insert(col, normalized);
        true
    }

    fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// `row - c * pivot` where both are sorted by column.
fn axpy<C: Coefficient>(row: &SparseRow<C>, c: &C, pivot: &SparseRow<C>) -> SparseRow<C> {
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut a, mut b) = (0, 0);
    while a < row.len() || b < pivot.len() {
        let ka = row.get(a).map(|e| e.0);
        let kb = pivot.get(b).map(|e| e.0);
        match (ka, kb) {
            (Some(x), Some(y)) if x == y => {
                let v = row[a].1.sub_ref(&c.mul_ref(&pivot[b].1));
                if !v.is_zero() {
                    out.push((x, v));
                }
                a += 1;
                b += 1;
            }
            (Some(x), Some(y)) if x < y => {
                out.push(row[a].clone());
                a += 1;
            }
            (Some(_), None) => {
                out.push(row[a].clone());
                a += 1;
            }
            (_, Some(y)) => {
                out.push((y, c.mul_ref(&pivot[b].1).neg_ref()));
                b += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

/// All monomials in `nvars` variables of total degree exactly `d`.
fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    fn rec(k: usize, left: u32, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if k + 1 == exps.len() {
            exps[k] = left;
            out.push(Monomial::from_exponents(exps));
            return;
        }
        for e in (0..=left).rev() {
            exps[k] = e;
            rec(k + 1, left - e, exps, out);
        }
    }
    if nvars == 0 {
        return if d == 0 { vec![Monomial::one(0)] } else { Vec::new() };
    }
    let mut out = Vec::new();
    rec(0, d, &mut vec![0; nvars], &mut out);
    out
}

struct Level<C> {
    echelon: Echelon<C>,
    columns: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl<C: Coefficient> Level<C> {
    fn dimension(&self) -> u64 {
        (self.columns.len() - self.echelon.rank()) as u64
    }
}

/// Builds the truncated Macaulay matrix below degree `bound`. Columns run
/// from `1` downward in the local order so pivots are local leading terms.
fn build_level<C: Coefficient>(gens: &[Polynomial<C>], nvars: usize, bound: u32) -> Level<C> {
    let order = MonomialOrder::NegDegRevLex;
    let mut columns: Vec<Monomial> = (0..bound).flat_map(|d| monomials_of_degree(nvars, d)).collect();
    columns.sort_by(|a, b| order.cmp(b, a));
    let index: HashMap<Monomial, usize> = columns.iter().cloned().enumerate().map(|(k, m)| (m, k)).collect();
    let mut echelon = Echelon::new();
    for g in gens {
        let Some(ord) = g.min_degree() else { continue };
        if ord >= bound {
            continue;
        }
        for d in 0..bound - ord {
            for m in monomials_of_degree(nvars, d) {
                let mut row: SparseRow<C> = g
                    .terms()
                    .iter()
                    .filter(|t| t.mono.degree() + d < bound)
                    .map(|t| (index[&t.mono.mul(&m)], t.coeff.clone()))
                    .collect();
                row.sort_by_key(|e| e.0);
                echelon.insert(row);
            }
        }
    }
    Level { echelon, columns, index }
}

/// Truncated linear-algebra colength; `DegreeCapExceeded` when no
/// stabilization happens up to `degree_cap` (never a proof of infinity).
pub fn colength_truncated_oracle<C: Coefficient>(ideal: &IdealSpec<C>, degree_cap: u32) -> Result<ColengthResult, BasisError> {
    if degree_cap < 2 {
        return Err(BasisError::InvalidArgument(format!("degree_cap must be >= 2, got {degree_cap}")));
    }
    let nvars = ideal.num_vars();
    let gens = ideal.generators();
    let mut current = build_level(gens, nvars, 1);
    for n in 1..degree_cap {
        let next = build_level(gens, nvars, n + 1);
        let stable = current.dimension() == next.dimension();
        let covered = stable
            && monomials_of_degree(nvars, n).into_iter().all(|m| {
                let one = C::one(gens.first().map_or(crate::poly::FieldTag::Rationals, |g| g.field()));
                next.echelon.reduce(vec![(next.index[&m], one)]).is_empty()
            });
        if stable && covered {
            let witness: Vec<Monomial> = current
                .columns
                .iter()
                .enumerate()
                .filter(|(k, _)| !current.echelon.pivots.contains_key(k))
                .map(|(_, m)| m.clone())
                .collect();
            return Ok(ColengthResult {
                value: Colength::Finite(witness.len() as u64),
                method: ColengthMethod::TruncatedLinearAlgebra,
                witness,
            });
        }
        current = next;
    }
    Err(BasisError::DegreeCapExceeded { cap: degree_cap, last_dimension: current.dimension() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::tests::{poly, vars};

    fn ideal(gens: &[&str], n: usize) -> IdealSpec {
        IdealSpec::new(gens.iter().map(|s| poly(s, n)).collect(), vars(n), "test").unwrap()
    }

    #[test]
    fn monomial_staircase() {
        let r = colength_truncated_oracle(&ideal(&["x1^2", "x1*x2", "x2^2"], 2), 10).unwrap();
        assert_eq!(r.value, Colength::Finite(3));
        assert_eq!(r.witness_strings(&vars(2)), vec!["1", "x1", "x2"]);
    }

    #[test]
    fn three_one_example() {
        let i = ideal(&["x1", "x2", "x3", "x4", "2*x2*x3*x5 - x3*x1^2 + 2*x1*x4*x5 - 2*x2*x4^2 - x5^3"], 5);
        assert_eq!(colength_truncated_oracle(&i, 10).unwrap().value, Colength::Finite(3));
    }

    #[test]
    fn positive_dimensional_never_stabilizes() {
        let r = colength_truncated_oracle(&ideal(&["x1"], 2), 12);
        assert!(matches!(r, Err(BasisError::DegreeCapExceeded { cap: 12, .. })));
    }

    #[test]
    fn local_units_are_handled() {
        assert_eq!(colength_truncated_oracle(&ideal(&["x1 - x1^2"], 1), 10).unwrap().value, Colength::Finite(1));
        assert_eq!(colength_truncated_oracle(&ideal(&["1 + x1"], 1), 10).unwrap().value, Colength::Finite(0));
    }

    #[test]
    fn tiny_cap_is_rejected() {
        assert!(matches!(colength_truncated_oracle(&ideal(&["x1"], 1), 1), Err(BasisError::InvalidArgument(_))));
    }

    #[test]
    fn degree_enumeration() {
        assert_eq!(monomials_of_degree(3, 2).len(), 6);
        assert_eq!(monomials_of_degree(5, 3).len(), 35);
        assert_eq!(monomials_of_degree(0, 0).len(), 1);
    }
}
