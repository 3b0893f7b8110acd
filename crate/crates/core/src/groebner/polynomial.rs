use std::cmp::Ordering;
use std::fmt;

use super::monomial::{Monomial, MonomialOrder};
use crate::field::Field;

/// A multivariate polynomial with terms kept strictly descending in `order`.
///
/// Coefficients are never zero and exponent vectors never repeat.
#[derive(Clone)]
pub struct Polynomial<F: Field> {
    field: F,
    nvars: usize,
    order: MonomialOrder,
    terms: Vec<(Monomial, F::Elem)>,
}

impl<F: Field> PartialEq for Polynomial<F> {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.nvars == other.nvars && self.terms == other.terms
    }
}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} [{}; {}]", self.field.spec(), self.order)
    }
}

impl<F: Field> Polynomial<F> {
    pub fn zero(field: F, nvars: usize, order: MonomialOrder) -> Self {
        Polynomial {
            field,
            nvars,
            order,
            terms: Vec::new(),
        }
    }

    /// Collects terms, merging repeated monomials and dropping zero coefficients.
    pub fn from_terms<I>(field: F, nvars: usize, order: MonomialOrder, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, F::Elem)>,
    {
        let mut raw: Vec<(Monomial, F::Elem)> = terms.into_iter().collect();
        for (m, _) in &raw {
            assert_eq!(m.nvars(), nvars, "monomial in wrong number of variables");
        }
        raw.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let mut merged: Vec<(Monomial, F::Elem)> = Vec::with_capacity(raw.len());
        for (m, c) in raw {
            match merged.last_mut() {
                Some((last, acc)) if *last == m => *acc = field.add(acc, &c),
                _ => merged.push((m, c)),
            }
        }
        merged.retain(|(_, c)| !field.is_zero(c));
        Polynomial {
            field,
            nvars,
            order,
            terms: merged,
        }
    }

    pub fn term(field: F, order: MonomialOrder, monomial: Monomial, coeff: F::Elem) -> Self {
        let nvars = monomial.nvars();
        Self::from_terms(field, nvars, order, [(monomial, coeff)])
    }

    pub fn field(&self) -> F {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn terms(&self) -> &[(Monomial, F::Elem)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn leading_term(&self) -> Option<&(Monomial, F::Elem)> {
        self.terms.first()
    }

    pub(crate) fn pop_leading(&mut self) -> Option<(Monomial, F::Elem)> {
        if self.terms.is_empty() {
            None
        } else {
            Some(self.terms.remove(0))
        }
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn leading_coefficient(&self) -> Option<&F::Elem> {
        self.terms.first().map(|(_, c)| c)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => self.terms.iter().all(|(t, _)| t.degree() == m.degree()),
        }
    }

    /// The same polynomial with terms re-sorted for `order`.
    pub fn with_order(&self, order: MonomialOrder) -> Self {
        if order == self.order {
            return self.clone();
        }
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Polynomial {
            order,
            terms,
            ..self.clone()
        }
    }

    pub fn same_ambient(&self, other: &Self) -> bool {
        self.field == other.field && self.nvars == other.nvars
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        if self.field.is_zero(c) {
            return Self::zero(self.field, self.nvars, self.order);
        }
        let f = self.field;
        Polynomial {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), f.mul(a, c))).collect(),
            ..self.clone()
        }
    }

    pub fn monic(&self) -> Self {
        match self.leading_coefficient() {
            None => self.clone(),
            Some(lc) => self.scale(&self.field.inv(lc)),
        }
    }

    /// `self * c * m`.
    pub fn mul_term(&self, m: &Monomial, c: &F::Elem) -> Self {
        if self.field.is_zero(c) {
            return Self::zero(self.field, self.nvars, self.order);
        }
        let f = self.field;
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(t, a)| (t.mul(m), f.mul(a, c)))
                .collect(),
            ..self.clone()
        }
    }

    /// `self - c * m * other`, the reduction step, in one merge pass.
    pub fn sub_scaled(&self, c: &F::Elem, m: &Monomial, other: &Self) -> Self {
        let f = self.field;
        let ord = self.order;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other
            .terms
            .iter()
            .map(|(t, x)| (t.mul(m), f.mul(x, c)))
            .peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(_)) => {
                    let (t, x) = b.next().unwrap();
                    out.push((t, f.neg(&x)));
                }
                (Some((ta, _)), Some((tb, _))) => match ord.cmp(ta, tb) {
                    Ordering::Greater => out.push(a.next().unwrap().clone()),
                    Ordering::Less => {
                        let (t, x) = b.next().unwrap();
                        out.push((t, f.neg(&x)));
                    }
                    Ordering::Equal => {
                        let (t, xa) = a.next().unwrap().clone();
                        let (_, xb) = b.next().unwrap();
                        let s = f.sub(&xa, &xb);
                        if !f.is_zero(&s) {
                            out.push((t, s));
                        }
                    }
                },
            }
        }
        Polynomial {
            terms: out,
            ..self.clone()
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let f = self.field;
        self.sub_scaled(&f.neg(&f.one()), &Monomial::one(self.nvars), other)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.sub_scaled(&self.field.one(), &Monomial::one(self.nvars), other)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let f = self.field;
        let mut acc = Self::zero(f, self.nvars, self.order);
        for (m, c) in &other.terms {
            acc = acc.sub_scaled(&f.neg(c), m, self);
        }
        acc
    }

    /// Coefficientwise image in another field sharing the same variables.
    pub fn map_coefficients<G: Field>(
        &self,
        target: G,
        mut map: impl FnMut(&F::Elem) -> G::Elem,
    ) -> Polynomial<G> {
        Polynomial::from_terms(
            target,
            self.nvars,
            self.order,
            self.terms.iter().map(|(m, c)| (m.clone(), map(c))),
        )
    }
}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let field = self.field;
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let (negative, magnitude) = field.split_sign(c);
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let unit = field.is_one(&magnitude);
            if m.is_one() {
                write!(f, "{magnitude}")?;
            } else if unit {
                write!(f, "{m}")?;
            } else {
                write!(f, "{magnitude}*{m}")?;
            }
        }
        Ok(())
    }
}
