//! Multivariate division and Buchberger completion with the normal selection
//! strategy and the product and chain criteria.

use std::cmp::Ordering;

use super::ideal::{Ideal, MonomialIdeal};
use super::monomial::{Monomial, MonomialOrder};
use super::polynomial::Polynomial;
use super::GroebnerError;
use crate::field::Field;

/// Full reduction of `f` by `divisors`.
///
/// The leading term of the running remainder is rewritten first, trying
/// divisors in list order; terms no leading monomial divides move to the
/// remainder. The result is expressed in `order`.
pub fn normal_form<F: Field>(
    f: &Polynomial<F>,
    divisors: &[Polynomial<F>],
    order: MonomialOrder,
) -> Result<Polynomial<F>, GroebnerError> {
    if divisors.iter().any(|g| !g.same_ambient(f)) {
        return Err(GroebnerError::AmbientMismatch);
    }
    let divisors: Vec<Polynomial<F>> = divisors
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.with_order(order))
        .collect();
    Ok(reduce(&f.with_order(order), &divisors))
}

/// Division with divisors already in the working order.
fn reduce<F: Field>(f: &Polynomial<F>, divisors: &[Polynomial<F>]) -> Polynomial<F> {
    let field = f.field();
    let mut remainder_terms = Vec::new();
    let mut p = f.clone();
    while let Some((lm, lc)) = p.leading_term() {
        let hit = divisors.iter().find_map(|g| {
            let (glm, glc) = g.leading_term().expect("nonzero divisor");
            lm.div(glm).map(|q| (g, q, field.div(lc, glc)))
        });
        match hit {
            Some((g, q, c)) => p = p.sub_scaled(&c, &q, g),
            None => remainder_terms.push(p.pop_leading().expect("nonzero")),
        }
    }
    Polynomial::from_terms(field, f.nvars(), f.order(), remainder_terms)
}

/// `S(f, g) = (L / lt(f)) f - (L / lt(g)) g` for `L = lcm(lm f, lm g)`.
pub fn s_polynomial<F: Field>(f: &Polynomial<F>, g: &Polynomial<F>) -> Polynomial<F> {
    let field = f.field();
    let (fm, fc) = f.leading_term().expect("nonzero");
    let (gm, gc) = g.leading_term().expect("nonzero");
    let l = fm.lcm(gm);
    let left = f.mul_term(&l.div(fm).unwrap(), &field.inv(fc));
    left.sub_scaled(&field.inv(gc), &l.div(gm).unwrap(), g)
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Reduced Groebner basis of `ideal` for `order`.
///
/// The output is monic, inter-reduced and sorted descending by leading monomial.
pub fn buchberger<F: Field>(
    ideal: &Ideal<F>,
    order: MonomialOrder,
) -> Result<Vec<Polynomial<F>>, GroebnerError> {
    let mut basis: Vec<Polynomial<F>> = ideal
        .generators()
        .iter()
        .map(|g| g.with_order(order).monic())
        .collect();
    if basis.is_empty() {
        return Ok(basis);
    }
    let mut pairs: Vec<Pair> = Vec::new();
    for j in 1..basis.len() {
        for i in 0..j {
            pairs.push(new_pair(&basis, i, j));
        }
    }

    while !pairs.is_empty() {
        let next = select_normal(&pairs, order);
        let pair = pairs.swap_remove(next);
        let (lm_i, lm_j) = (
            basis[pair.i].leading_monomial().unwrap(),
            basis[pair.j].leading_monomial().unwrap(),
        );
        if lm_i.is_coprime(lm_j) {
            continue;
        }
        if chain_criterion(&basis, &pairs, &pair) {
            continue;
        }
        let s = s_polynomial(&basis[pair.i], &basis[pair.j]);
        let r = reduce(&s, &basis);
        if r.is_zero() {
            continue;
        }
        basis.push(r.monic());
        let k = basis.len() - 1;
        for i in 0..k {
            pairs.push(new_pair(&basis, i, k));
        }
    }

    Ok(reduce_basis(basis, order))
}

fn new_pair<F: Field>(basis: &[Polynomial<F>], i: usize, j: usize) -> Pair {
    let lcm = basis[i]
        .leading_monomial()
        .unwrap()
        .lcm(basis[j].leading_monomial().unwrap());
    Pair { i, j, lcm }
}

/// Index of the pending pair with the smallest lcm; ties go to the oldest pair.
fn select_normal(pairs: &[Pair], order: MonomialOrder) -> usize {
    let mut best = 0;
    for (k, p) in pairs.iter().enumerate().skip(1) {
        let b = &pairs[best];
        let cmp = order
            .cmp(&p.lcm, &b.lcm)
            .then_with(|| (p.j, p.i).cmp(&(b.j, b.i)));
        if cmp == Ordering::Less {
            best = k;
        }
    }
    best
}

/// Buchberger's second criterion: some `k` has `lm(g_k) | lcm(i, j)` and the
/// pairs `(i, k)` and `(j, k)` are no longer pending.
fn chain_criterion<F: Field>(basis: &[Polynomial<F>], pending: &[Pair], pair: &Pair) -> bool {
    let is_pending = |a: usize, b: usize| {
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        pending.iter().any(|p| p.i == lo && p.j == hi)
    };
    (0..basis.len()).any(|k| {
        k != pair.i
            && k != pair.j
            && basis[k].leading_monomial().unwrap().divides(&pair.lcm)
            && !is_pending(pair.i, k)
            && !is_pending(pair.j, k)
    })
}

/// Drops redundant elements, inter-reduces, normalizes and sorts.
fn reduce_basis<F: Field>(basis: Vec<Polynomial<F>>, order: MonomialOrder) -> Vec<Polynomial<F>> {
    let mut minimal: Vec<Polynomial<F>> = Vec::new();
    for (k, g) in basis.iter().enumerate() {
        let lm = g.leading_monomial().unwrap();
        let redundant = basis.iter().enumerate().any(|(l, h)| {
            let hm = h.leading_monomial().unwrap();
            // among equal leading monomials keep the first
            l != k && hm.divides(lm) && (hm != lm || l < k)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<Polynomial<F>> = minimal
            .iter()
            .enumerate()
            .filter(|(l, _)| *l != k)
            .map(|(_, h)| h.clone())
            .collect();
        reduced.push(reduce(&minimal[k], &others).monic());
    }
    reduced.sort_by(|a, b| {
        order.cmp(
            b.leading_monomial().unwrap(),
            a.leading_monomial().unwrap(),
        )
    });
    reduced
}

/// Checks the Groebner property by reducing every S-polynomial.
pub fn is_groebner_basis<F: Field>(basis: &[Polynomial<F>], order: MonomialOrder) -> bool {
    let basis: Vec<Polynomial<F>> = basis.iter().map(|g| g.with_order(order)).collect();
    for j in 0..basis.len() {
        for i in 0..j {
            if !reduce(&s_polynomial(&basis[i], &basis[j]), &basis).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Checks that `basis` is a reduced Groebner basis: Groebner, monic, and no
/// term of any element divisible by the leading monomial of another.
pub fn is_reduced_groebner_basis<F: Field>(basis: &[Polynomial<F>], order: MonomialOrder) -> bool {
    let field = match basis.first() {
        Some(g) => g.field(),
        None => return true,
    };
    let basis: Vec<Polynomial<F>> = basis.iter().map(|g| g.with_order(order)).collect();
    let monic = basis
        .iter()
        .all(|g| g.leading_coefficient().is_some_and(|c| field.is_one(c)));
    let inter_reduced = basis.iter().enumerate().all(|(k, g)| {
        basis.iter().enumerate().all(|(l, h)| {
            let hm = h.leading_monomial().unwrap();
            l == k || g.terms().iter().all(|(t, _)| !hm.divides(t))
        })
    });
    monic && inter_reduced && is_groebner_basis(&basis, order)
}

/// Minimal generators of the ideal of leading monomials of `ideal`.
pub fn initial_ideal<F: Field>(
    ideal: &Ideal<F>,
    order: MonomialOrder,
) -> Result<MonomialIdeal, GroebnerError> {
    let basis = buchberger(ideal, order)?;
    Ok(MonomialIdeal::new(
        ideal.nvars(),
        basis
            .iter()
            .map(|g| g.leading_monomial().unwrap().clone())
            .collect(),
    ))
}
