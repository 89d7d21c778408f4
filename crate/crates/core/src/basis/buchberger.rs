use super::pairs::PairSet;
use super::{prepare, BasisError, Limits, StandardBasis, StepCounter};
use crate::matrix::IdealSpec;
use crate::poly::{Coefficient, Monomial, MonomialOrder, Polynomial, Term};

/// `(lcm / LT f) f - (lcm / LT g) g`.
pub fn spoly<C: Coefficient>(f: &Polynomial<C>, g: &Polynomial<C>) -> Polynomial<C> {
    let (Some(tf), Some(tg)) = (f.leading_term(), g.leading_term()) else {
        return Polynomial::zero(f.num_vars(), f.field(), f.order());
    };
    let lcm = tf.mono.lcm(&tg.mono);
    let mf = tf.mono.quotient_of(&lcm).unwrap();
    let mg = tg.mono.quotient_of(&lcm).unwrap();
    let cf = tf.coeff.inv().unwrap();
    let cg = tg.coeff.inv().unwrap();
    &f.mul_term(&mf, &cf) - &g.mul_term(&mg, &cg)
}

fn find_divisor<'a, C: Coefficient>(m: &Monomial, reducers: &'a [Polynomial<C>]) -> Option<&'a Polynomial<C>> {
    reducers.iter().find(|g| g.leading_monomial().is_some_and(|lm| lm.divides(m)))
}

/// Full division remainder under a global order: no term of the result is
/// divisible by a leading monomial of `reducers`.
pub fn reduce_full<C: Coefficient>(f: &Polynomial<C>, reducers: &[Polynomial<C>]) -> Polynomial<C> {
    let mut counter = StepCounter::new(u64::MAX);
    reduce_full_counted(f, reducers, &mut counter).expect("uncapped")
}

pub(crate) fn reduce_full_counted<C: Coefficient>(
    f: &Polynomial<C>,
    reducers: &[Polynomial<C>],
    counter: &mut StepCounter,
) -> Result<Polynomial<C>, BasisError> {
    let order = f.order();
    let mut h = f.clone();
    let mut remainder: Vec<Term<C>> = Vec::new();
    while let Some(t) = h.leading_term().cloned() {
        match find_divisor(&t.mono, reducers) {
            Some(g) => {
                let lt = g.leading_term().unwrap();
                let m = lt.mono.quotient_of(&t.mono).unwrap();
                let c = t.coeff.div_ref(&lt.coeff);
                h = h.sub_scaled(&c, &m, g);
                counter.tick()?;
            }
            None => {
                remainder.push(t);
                h = Polynomial::from_terms(h.num_vars(), h.field(), order, h.terms()[1..].to_vec());
            }
        }
    }
    Ok(Polynomial::from_terms(f.num_vars(), f.field(), order, remainder))
}

/// Reduced Gröbner basis under the (global) degrevlex order.
pub fn buchberger<C: Coefficient>(
    ideal: &IdealSpec<C>,
    order: MonomialOrder,
    limits: Limits,
) -> Result<StandardBasis<C>, BasisError> {
    if !order.is_global() {
        return Err(BasisError::WrongOrder { operation: "buchberger", expected: "global", found: order });
    }
    let q = ideal.num_vars();
    let mut counter = StepCounter::new(limits.step_cap);
    let mut basis: Vec<Polynomial<C>> = Vec::new();
    let mut lms: Vec<Monomial> = Vec::new();
    let mut pairs = PairSet::new();

    let push = |h: Polynomial<C>, basis: &mut Vec<Polynomial<C>>, lms: &mut Vec<Monomial>, pairs: &mut PairSet| {
        lms.push(h.leading_monomial().unwrap().clone());
        basis.push(h);
        pairs.update(lms, lms.len() - 1);
    };

    for g in prepare(ideal.generators(), order) {
        let h = reduce_full_counted(&g, &basis, &mut counter)?;
        if !h.is_zero() {
            push(h.make_monic(), &mut basis, &mut lms, &mut pairs);
        }
    }
    while let Some(pair) = pairs.pop() {
        let s = spoly(&basis[pair.i], &basis[pair.j]);
        let h = reduce_full_counted(&s, &basis, &mut counter)?;
        if !h.is_zero() {
            push(h.make_monic(), &mut basis, &mut lms, &mut pairs);
        }
    }

    let steps = counter.used();
    let minimal = StandardBasis::minimal(basis, order, q, steps);
    // interreduce tails
    let elems = minimal.basis().to_vec();
    let mut reduced = Vec::with_capacity(elems.len());
    for (k, g) in elems.iter().enumerate() {
        let others: Vec<Polynomial<C>> = elems.iter().enumerate().filter(|(o, _)| *o != k).map(|(_, p)| p.clone()).collect();
        let lt = g.leading_term().unwrap().clone();
        let tail = Polynomial::from_terms(q, g.field(), order, g.terms()[1..].to_vec());
        let tail = reduce_full_counted(&tail, &others, &mut counter)?;
        let lead = Polynomial::term(lt.mono, lt.coeff, order);
        reduced.push((&lead + &tail).make_monic());
    }
    reduced.sort_by(|a, b| order.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    Ok(StandardBasis::minimal(reduced, order, q, counter.used()))
}
