//! Mora's tangent cone algorithm for the local order.
//!
//! The weak normal form picks, among reducers whose leading monomial divides
//! the current leading monomial, one of minimal écart; whenever that écart
//! exceeds the écart of the current polynomial, the current polynomial joins
//! the reducer set first. The result `r` satisfies `u f = sum a_i g_i + r`
//! for some unit `u`, with `LM(r)` not divisible by any `LM(g_i)`.

use super::buchberger::spoly;
use super::pairs::PairSet;
use super::{prepare, BasisError, Limits, StandardBasis, StepCounter};
use crate::matrix::IdealSpec;
use crate::poly::{Coefficient, Monomial, MonomialOrder, Polynomial};

/// Mora weak normal form of `f` with respect to `reducers` (local order).
pub fn mora_normal_form<C: Coefficient>(
    f: &Polynomial<C>,
    reducers: &[Polynomial<C>],
    order: MonomialOrder,
    limits: Limits,
) -> Result<Polynomial<C>, BasisError> {
    if !order.is_local() {
        return Err(BasisError::WrongOrder { operation: "mora_normal_form", expected: "local", found: order });
    }
    let reducers = prepare(reducers, order);
    let ecarts: Vec<u32> = reducers.iter().map(Polynomial::ecart).collect();
    let mut counter = StepCounter::new(limits.step_cap);
    weak_normal_form(&f.with_order(order), &reducers, &ecarts, &mut counter)
}

pub(crate) fn weak_normal_form<C: Coefficient>(
    f: &Polynomial<C>,
    reducers: &[Polynomial<C>],
    ecarts: &[u32],
    counter: &mut StepCounter,
) -> Result<Polynomial<C>, BasisError> {
    let mut h = f.clone();
    // polynomials that joined the reducer set during this reduction
    let mut extra: Vec<(Polynomial<C>, u32)> = Vec::new();
    loop {
        let Some(lm) = h.leading_monomial() else {
            return Ok(h);
        };
        let mut best: Option<(&Polynomial<C>, u32)> = None;
        for (g, &e) in reducers.iter().zip(ecarts).chain(extra.iter().map(|(g, e)| (g, e))) {
            if g.leading_monomial().unwrap().divides(lm) && best.is_none_or(|(_, be)| e < be) {
                best = Some((g, e));
                if e == 0 {
                    break;
                }
            }
        }
        let Some((g, g_ecart)) = best else {
            return Ok(h);
        };
        let h_ecart = h.ecart();
        let g = g.clone();
        if g_ecart > h_ecart {
            extra.push((h.clone(), h_ecart));
        }
        h = spoly(&h, &g);
        counter.tick()?;
    }
}

/// Standard basis of `ideal` under the local order `NegDegRevLex`.
pub fn standard_basis_local<C: Coefficient>(ideal: &IdealSpec<C>, limits: Limits) -> Result<StandardBasis<C>, BasisError> {
    let order = MonomialOrder::NegDegRevLex;
    let q = ideal.num_vars();
    let mut counter = StepCounter::new(limits.step_cap);
    let mut basis: Vec<Polynomial<C>> = Vec::new();
    let mut ecarts: Vec<u32> = Vec::new();
    let mut lms: Vec<Monomial> = Vec::new();
    let mut pairs = PairSet::new();

    let gens = prepare(ideal.generators(), order);
    if let Some(unit) = gens.iter().find(|g| g.leading_monomial().is_some_and(Monomial::is_one)) {
        return Ok(StandardBasis::minimal(vec![unit.clone()], order, q, 0));
    }
    for g in gens {
        ecarts.push(g.ecart());
        lms.push(g.leading_monomial().unwrap().clone());
        basis.push(g);
        pairs.update(&lms, lms.len() - 1);
    }
    while let Some(pair) = pairs.pop() {
        let s = spoly(&basis[pair.i], &basis[pair.j]);
        let h = weak_normal_form(&s, &basis, &ecarts, &mut counter)?;
        if h.is_zero() {
            continue;
        }
        let h = h.make_monic();
        if h.leading_monomial().unwrap().is_one() {
            return Ok(StandardBasis::minimal(vec![h], order, q, counter.used()));
        }
        ecarts.push(h.ecart());
        lms.push(h.leading_monomial().unwrap().clone());
        basis.push(h);
        pairs.update(&lms, lms.len() - 1);
    }
    Ok(StandardBasis::minimal(basis, order, q, counter.used()))
}
