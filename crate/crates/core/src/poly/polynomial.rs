//! Sparse distributed polynomials.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::coeff::{Coefficient, FieldTag, Fp, Rational};
use super::monomial::{Monomial, MonomialOrder};
use super::PolyError;
use crate::linalg::RatMatrix;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Term<C> {
    pub mono: Monomial,
    pub coeff: C,
}

/// Polynomial in `num_vars` variables as a term list sorted strictly
/// decreasing under `order`, with no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<C = Rational> {
    num_vars: usize,
    field: FieldTag,
    order: MonomialOrder,
    terms: Vec<Term<C>>,
}

impl<C: Coefficient> Polynomial<C> {
    pub fn zero(num_vars: usize, field: FieldTag, order: MonomialOrder) -> Self {
        Polynomial { num_vars, field, order, terms: Vec::new() }
    }

    pub fn constant(c: C, num_vars: usize, order: MonomialOrder) -> Self {
        let field = c.field();
        Self::from_terms(num_vars, field, order, vec![Term { mono: Monomial::one(num_vars), coeff: c }])
    }

    pub fn one(num_vars: usize, field: FieldTag, order: MonomialOrder) -> Self {
        Self::constant(C::one(field), num_vars, order)
    }

    pub fn var(index: usize, num_vars: usize, field: FieldTag, order: MonomialOrder) -> Self {
        Self::term(Monomial::var(index, num_vars), C::one(field), order)
    }

    pub fn term(mono: Monomial, coeff: C, order: MonomialOrder) -> Self {
        let num_vars = mono.num_vars();
        let field = coeff.field();
        Self::from_terms(num_vars, field, order, vec![Term { mono, coeff }])
    }

    /// Builds a normalized polynomial from arbitrary terms: sorts, merges
    /// duplicate monomials and drops zeros.
    pub fn from_terms(
        num_vars: usize,
        field: FieldTag,
        order: MonomialOrder,
        mut terms: Vec<Term<C>>,
    ) -> Self {
        terms.sort_by(|a, b| order.cmp(&b.mono, &a.mono));
        let mut out: Vec<Term<C>> = Vec::with_capacity(terms.len());
        for t in terms {
            debug_assert_eq!(t.mono.num_vars(), num_vars);
            match out.last_mut() {
                Some(last) if last.mono == t.mono => {
                    last.coeff = last.coeff.add_ref(&t.coeff);
                    if last.coeff.is_zero() {
                        out.pop();
                    }
                }
                _ => {
                    if !t.coeff.is_zero() {
                        out.push(t);
                    }
                }
            }
        }
        Polynomial { num_vars, field, order, terms: out }
    }

    /// Wraps terms that are already sorted, merged and nonzero.
    fn from_sorted_unchecked(num_vars: usize, field: FieldTag, order: MonomialOrder, terms: Vec<Term<C>>) -> Self {
        Polynomial { num_vars, field, order, terms }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn field(&self) -> FieldTag {
        self.field
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn terms(&self) -> &[Term<C>] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero constant, i.e. a unit of the polynomial ring.
    pub fn is_nonzero_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].mono.is_one()
    }

    pub fn leading_term(&self) -> Option<&Term<C>> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.mono)
    }

    pub fn leading_coeff(&self) -> Option<&C> {
        self.terms.first().map(|t| &t.coeff)
    }

    /// Largest total degree of a term; 0 for the zero polynomial.
    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|t| t.mono.degree()).max().unwrap_or(0)
    }

    /// Smallest total degree of a term (order of vanishing at the origin).
    pub fn min_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.mono.degree()).min()
    }

    /// Total degree minus the degree of the leading monomial.
    pub fn ecart(&self) -> u32 {
        match self.leading_monomial() {
            Some(lm) => self.total_degree() - lm.degree(),
            None => 0,
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some(t) => self.terms.iter().all(|s| s.mono.degree() == t.mono.degree()),
        }
    }

    /// Same polynomial re-sorted under another order.
    pub fn with_order(&self, order: MonomialOrder) -> Self {
        if order == self.order {
            return self.clone();
        }
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| order.cmp(&b.mono, &a.mono));
        Self::from_sorted_unchecked(self.num_vars, self.field, order, terms)
    }

    fn check_compatible(&self, other: &Self) -> Result<(), PolyError> {
        if self.num_vars != other.num_vars {
            return Err(PolyError::ArityMismatch(self.num_vars, other.num_vars));
        }
        if self.field != other.field {
            return Err(PolyError::FieldMismatch(self.field, other.field));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_compatible(other)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_compatible(other)?;
        Ok(self.merge(other, true))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_compatible(other)?;
        let other = other.with_order(self.order);
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for a in &self.terms {
            for b in &other.terms {
                terms.push(Term { mono: a.mono.checked_mul(&b.mono)?, coeff: a.coeff.mul_ref(&b.coeff) });
            }
        }
        Ok(Self::from_terms(self.num_vars, self.field, self.order, terms))
    }

    /// Merge of two sorted term lists; `subtract` negates `other`.
    fn merge(&self, other: &Self, subtract: bool) -> Self {
        let other = if other.order == self.order { std::borrow::Cow::Borrowed(other) } else { std::borrow::Cow::Owned(other.with_order(self.order)) };
        let order = self.order;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match order.cmp(&a[i].mono, &b[j].mono) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let coeff = if subtract { b[j].coeff.neg_ref() } else { b[j].coeff.clone() };
                    out.push(Term { mono: b[j].mono.clone(), coeff });
                    j += 1;
                }
                Ordering::Equal => {
                    let coeff = if subtract { a[i].coeff.sub_ref(&b[j].coeff) } else { a[i].coeff.add_ref(&b[j].coeff) };
                    if !coeff.is_zero() {
                        out.push(Term { mono: a[i].mono.clone(), coeff });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        for t in &b[j..] {
            let coeff = if subtract { t.coeff.neg_ref() } else { t.coeff.clone() };
            out.push(Term { mono: t.mono.clone(), coeff });
        }
        Self::from_sorted_unchecked(self.num_vars, self.field, order, out)
    }

    /// `self * coeff * mono`; order is preserved term by term.
    pub fn mul_term(&self, mono: &Monomial, coeff: &C) -> Self {
        if coeff.is_zero() {
            return Self::zero(self.num_vars, self.field, self.order);
        }
        let terms = self
            .terms
            .iter()
            .map(|t| Term { mono: t.mono.mul(mono), coeff: t.coeff.mul_ref(coeff) })
            .collect();
        Self::from_sorted_unchecked(self.num_vars, self.field, self.order, terms)
    }

    pub fn scale(&self, coeff: &C) -> Self {
        self.mul_term(&Monomial::one(self.num_vars), coeff)
    }

    /// `self - coeff * mono * other`, the elementary reduction step.
    pub fn sub_scaled(&self, coeff: &C, mono: &Monomial, other: &Self) -> Self {
        self.merge(&other.mul_term(mono, coeff), true)
    }

    /// Divides by the leading coefficient.
    pub fn make_monic(&self) -> Self {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.scale(&lc.inv().expect("nonzero leading coefficient")),
        }
    }

    /// Drops every term of total degree `>= bound`.
    pub fn truncate_below(&self, bound: u32) -> Self {
        let terms = self.terms.iter().filter(|t| t.mono.degree() < bound).cloned().collect();
        Self::from_sorted_unchecked(self.num_vars, self.field, self.order, terms)
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one(self.num_vars, self.field, self.order);
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Replaces `x_k` by `images[k]`. All images must share arity and field.
    pub fn compose(&self, images: &[Polynomial<C>]) -> Result<Self, PolyError> {
        if images.len() != self.num_vars {
            return Err(PolyError::ArityMismatch(self.num_vars, images.len()));
        }
        let (target_vars, order) = match images.first() {
            Some(p) => (p.num_vars, self.order),
            None => (0, self.order),
        };
        let mut powers: Vec<Vec<Polynomial<C>>> = images
            .iter()
            .map(|p| vec![Polynomial::one(target_vars, self.field, order), p.with_order(order)])
            .collect();
        let mut acc = Polynomial::zero(target_vars, self.field, order);
        for t in &self.terms {
            let mut prod = Polynomial::constant(t.coeff.clone(), target_vars, order);
            for (k, &e) in t.mono.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[k].len() <= e as usize {
                    let next = &powers[k][powers[k].len() - 1] * &powers[k][1];
                    powers[k].push(next);
                }
                prod = prod.checked_mul(&powers[k][e as usize])?;
            }
            acc = acc.checked_add(&prod)?;
        }
        Ok(acc)
    }

    pub fn eval(&self, point: &[C]) -> C {
        assert_eq!(point.len(), self.num_vars);
        let mut acc = C::zero(self.field);
        for t in &self.terms {
            let mut v = t.coeff.clone();
            for (k, &e) in t.mono.exponents().iter().enumerate() {
                for _ in 0..e {
                    v = v.mul_ref(&point[k]);
                }
            }
            acc = acc.add_ref(&v);
        }
        acc
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves a
    /// remainder. Works under any order since it only uses leading terms of a
    /// global order.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        let order = MonomialOrder::DegRevLex;
        let d = divisor.with_order(order);
        let mut rem = self.with_order(order);
        let lt = d.leading_term().cloned()?;
        let lc_inv = lt.coeff.inv()?;
        let mut quotient = Vec::new();
        while let Some(t) = rem.leading_term().cloned() {
            let m = lt.mono.quotient_of(&t.mono)?;
            let c = t.coeff.mul_ref(&lc_inv);
            rem = rem.sub_scaled(&c, &m, &d);
            quotient.push(Term { mono: m, coeff: c });
        }
        Some(Self::from_terms(self.num_vars, self.field, self.order, quotient))
    }

    /// Canonical text: terms in decreasing degrevlex order.
    pub fn display_with(&self, vars: &[String]) -> String {
        let canon = self.with_order(MonomialOrder::DegRevLex);
        if canon.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, t) in canon.terms.iter().enumerate() {
            let negative = t.coeff.is_negative();
            let magnitude = if negative { t.coeff.neg_ref() } else { t.coeff.clone() };
            if idx == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            if t.mono.is_one() {
                out.push_str(&magnitude.to_string());
            } else {
                if !magnitude.is_one() {
                    out.push_str(&magnitude.to_string());
                    out.push('*');
                }
                out.push_str(&t.mono.display_with(vars));
            }
        }
        out
    }
}

impl Polynomial<Rational> {
    /// Image in `F_p`, failing if some denominator is divisible by `p`.
    pub fn reduce_mod(&self, p: u64) -> Result<Polynomial<Fp>, PolyError> {
        let field = FieldTag::PrimeField(p);
        let terms = self
            .terms
            .iter()
            .map(|t| Ok(Term { mono: t.mono.clone(), coeff: Fp::from_rational(t.coeff.as_big(), field)? }))
            .collect::<Result<Vec<_>, PolyError>>()?;
        Ok(Polynomial::from_terms(self.num_vars, field, self.order, terms))
    }

    /// `p(A x)` for an invertible square rational matrix `A`.
    pub fn substitute_linear(&self, a: &RatMatrix) -> Result<Self, PolyError> {
        let q = self.num_vars;
        if a.rows() != q || a.cols() != q {
            return Err(PolyError::ArityMismatch(q, a.rows()));
        }
        if a.determinant().is_zero() {
            return Err(PolyError::SingularSubstitution);
        }
        self.substitute_matrix(a)
    }

    /// `p(A y)` for any `q x c` matrix: `x_k -> sum_j A[k][j] y_j`.
    pub fn substitute_matrix(&self, a: &RatMatrix) -> Result<Self, PolyError> {
        if a.rows() != self.num_vars {
            return Err(PolyError::ArityMismatch(self.num_vars, a.rows()));
        }
        let c = a.cols();
        let images: Vec<Self> = (0..a.rows())
            .map(|k| {
                let terms = (0..c)
                    .map(|j| Term { mono: Monomial::var(j, c), coeff: a.get(k, j).clone() })
                    .collect();
                Polynomial::from_terms(c, FieldTag::Rationals, self.order, terms)
            })
            .collect();
        if images.is_empty() {
            // zero variables: p is a constant
            let constant = self
                .terms
                .iter()
                .find(|t| t.mono.is_one())
                .map(|t| t.coeff.clone())
                .unwrap_or_else(|| Rational::zero(FieldTag::Rationals));
            return Ok(Polynomial::constant(constant, c, self.order));
        }
        self.compose(&images)
    }
}

impl<C: Coefficient> fmt::Debug for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vars: Vec<String> = (1..=self.num_vars).map(|k| format!("x{k}")).collect();
        write!(f, "{}", self.display_with(&vars))
    }
}

impl<C: Coefficient> Add for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn add(self, rhs: Self) -> Polynomial<C> {
        self.checked_add(rhs).expect("incompatible polynomials")
    }
}

impl<C: Coefficient> Sub for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn sub(self, rhs: Self) -> Polynomial<C> {
        self.checked_sub(rhs).expect("incompatible polynomials")
    }
}

impl<C: Coefficient> Mul for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn mul(self, rhs: Self) -> Polynomial<C> {
        self.checked_mul(rhs).expect("incompatible polynomials")
    }
}

impl<C: Coefficient> Neg for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn neg(self) -> Polynomial<C> {
        let terms = self.terms.iter().map(|t| Term { mono: t.mono.clone(), coeff: t.coeff.neg_ref() }).collect();
        Polynomial::from_sorted_unchecked(self.num_vars, self.field, self.order, terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse::parse_polynomial;
    use proptest::prelude::*;

    fn vars(n: usize) -> Vec<String> {
        (1..=n).map(|k| format!("x{k}")).collect()
    }

    fn p(s: &str, n: usize) -> Polynomial {
        parse_polynomial(s, &vars(n)).unwrap()
    }

    #[test]
    fn addition_examples() {
        assert!((&p("x1", 1) + &p("-x1", 1)).is_zero());
        assert_eq!(&p("x1^2", 1) + &p("x1^2", 1), p("2*x1^2", 1));
        assert_eq!(&p("x1*x3 - x2^2", 3) + &p("x2^2", 3), p("x1*x3", 3));
    }

    #[test]
    fn multiplication_examples() {
        let a = p("x1 + x2", 2);
        let b = p("x1 - x2", 2);
        assert_eq!(&a * &b, p("x1^2 - x2^2", 2));
        let one = Polynomial::one(2, FieldTag::Rationals, MonomialOrder::DegRevLex);
        assert_eq!(&a * &one, a);
        let zero = Polynomial::zero(2, FieldTag::Rationals, MonomialOrder::DegRevLex);
        assert!((&a * &zero).is_zero());
    }

    #[test]
    fn mismatches_are_errors() {
        let a = p("x1", 1);
        let b = p("x1", 2);
        assert!(matches!(a.checked_add(&b), Err(PolyError::ArityMismatch(1, 2))));
        let c = p("x1", 1).reduce_mod(7).unwrap();
        let d = p("x1", 1).reduce_mod(11).unwrap();
        assert!(matches!(c.checked_mul(&d), Err(PolyError::FieldMismatch(..))));
    }

    #[test]
    fn linear_substitution_examples() {
        let f = p("x1^3 - 2*x1*x2 + 5", 2);
        assert_eq!(f.substitute_linear(&RatMatrix::identity(2)).unwrap(), f);
        let swap = RatMatrix::from_i64(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(p("x1", 2).substitute_linear(&swap).unwrap(), p("x2", 2));
        let diag = RatMatrix::from_i64(&[vec![2, 0], vec![0, 1]]);
        assert_eq!(p("x1^2", 2).substitute_linear(&diag).unwrap(), p("4*x1^2", 2));
        let singular = RatMatrix::from_i64(&[vec![1, 1], vec![1, 1]]);
        assert!(matches!(f.substitute_linear(&singular), Err(PolyError::SingularSubstitution)));
    }

    #[test]
    fn exact_division() {
        let a = p("x1^2 - x2^2", 2);
        let b = p("x1 + x2", 2);
        assert_eq!(a.div_exact(&b).unwrap(), p("x1 - x2", 2));
        assert!(p("x1^2 + 1", 2).div_exact(&b).is_none());
    }

    #[test]
    fn local_order_leading_term_is_lowest_degree() {
        let f = p("x1 - x1^2", 1).with_order(MonomialOrder::NegDegRevLex);
        assert_eq!(f.leading_monomial().unwrap().exponents(), &[1]);
        assert_eq!(f.ecart(), 1);
    }

    #[test]
    fn canonical_printing() {
        assert_eq!(p("2*x2*x5 - x1^2", 5).display_with(&vars(5)), "-x1^2 + 2*x2*x5");
        assert_eq!(p("x1 - x1 + 3/2", 1).display_with(&vars(1)), "3/2");
        assert_eq!(p("0", 3).display_with(&vars(3)), "0");
    }

    /// Random sparse polynomial in three variables with small integer coefficients.
    pub(crate) fn arb_poly() -> impl Strategy<Value = Polynomial> {
        proptest::collection::vec(((0u32..3, 0u32..3, 0u32..3), -4i64..=4), 0..6).prop_map(|ts| {
            let terms = ts
                .into_iter()
                .map(|((a, b, c), k)| Term { mono: Monomial::from_exponents(&[a, b, c]), coeff: Rational::from_integer(k) })
                .collect();
            Polynomial::from_terms(3, FieldTag::Rationals, MonomialOrder::DegRevLex, terms)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }
    }

    proptest! {
        #[test]
        fn degree_is_additive(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!a.is_zero() && !b.is_zero());
            prop_assert_eq!((&a * &b).total_degree(), a.total_degree() + b.total_degree());
        }

        #[test]
        fn reduction_mod_p_is_a_homomorphism(a in arb_poly(), b in arb_poly()) {
            let p = crate::poly::DEFAULT_PRIME;
            let (ap, bp) = (a.reduce_mod(p).unwrap(), b.reduce_mod(p).unwrap());
            prop_assert_eq!((&a + &b).reduce_mod(p).unwrap(), &ap + &bp);
            prop_assert_eq!((&a * &b).reduce_mod(p).unwrap(), &ap * &bp);
        }

        #[test]
        fn print_then_parse_is_identity(a in arb_poly()) {
            let text = a.display_with(&vars(3));
            prop_assert_eq!(parse_polynomial(&text, &vars(3)).unwrap(), a);
        }

        #[test]
        fn terms_stay_sorted_under_local_order(a in arb_poly(), b in arb_poly()) {
            let order = MonomialOrder::NegDegRevLex;
            let prod = &a.with_order(order) * &b.with_order(order);
            for w in prod.terms().windows(2) {
                prop_assert_eq!(order.cmp(&w[0].mono, &w[1].mono), Ordering::Greater);
            }
        }
    }
}
