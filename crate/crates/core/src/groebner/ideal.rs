use std::cmp::Ordering;
use std::fmt;

use super::monomial::{Monomial, MonomialOrder};
use super::polynomial::Polynomial;
use super::GroebnerError;
use crate::field::Field;

/// An ideal given by nonzero generators in a common ring `F[x1..xn]`.
#[derive(Clone, Debug, PartialEq)]
pub struct Ideal<F: Field> {
    field: F,
    nvars: usize,
    generators: Vec<Polynomial<F>>,
}

impl<F: Field> Ideal<F> {
    /// Zero generators are dropped; mixed ambients are rejected.
    pub fn new(
        field: F,
        nvars: usize,
        generators: Vec<Polynomial<F>>,
    ) -> Result<Self, GroebnerError> {
        for g in &generators {
            if g.field() != field || g.nvars() != nvars {
                return Err(GroebnerError::AmbientMismatch);
            }
        }
        Ok(Ideal {
            field,
            nvars,
            generators: generators.into_iter().filter(|g| !g.is_zero()).collect(),
        })
    }

    pub fn field(&self) -> F {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Polynomial<F>] {
        &self.generators
    }

    /// All generators are single terms.
    pub fn is_monomial(&self) -> bool {
        self.generators.iter().all(|g| g.is_monomial())
    }

    /// The monomial ideal spanned by the generators, when all of them are terms.
    pub fn as_monomial_ideal(&self) -> Option<MonomialIdeal> {
        if !self.is_monomial() {
            return None;
        }
        Some(MonomialIdeal::new(
            self.nvars,
            self.generators
                .iter()
                .map(|g| g.leading_monomial().expect("nonzero").clone())
                .collect(),
        ))
    }
}

impl<F: Field> fmt::Display for Ideal<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", gens.join(", "))
    }
}

/// A monomial ideal stored by its unique minimal generators.
///
/// Generators are sorted by degree, then lexicographically with `x1` largest,
/// so equal ideals have identical representations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    nvars: usize,
    generators: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Minimalizes `generators`. An empty list is the zero ideal.
    pub fn new(nvars: usize, generators: Vec<Monomial>) -> Self {
        for g in &generators {
            assert_eq!(g.nvars(), nvars, "generator in wrong number of variables");
        }
        let mut gens = generators;
        gens.sort_by(canonical_cmp);
        gens.dedup();
        let mut minimal: Vec<Monomial> = Vec::with_capacity(gens.len());
        for g in gens {
            // divisors of g have degree <= deg g, so they were inserted already
            if !minimal.iter().any(|m| m.divides(&g)) {
                minimal.push(g);
            }
        }
        MonomialIdeal {
            nvars,
            generators: minimal,
        }
    }

    pub fn zero(nvars: usize) -> Self {
        MonomialIdeal {
            nvars,
            generators: Vec::new(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }

    /// Radical iff every minimal generator is squarefree.
    pub fn is_radical(&self) -> bool {
        self.generators.iter().all(Monomial::is_squarefree)
    }

    /// First minimal generator that is not squarefree.
    pub fn first_non_squarefree(&self) -> Option<&Monomial> {
        self.generators.iter().find(|g| !g.is_squarefree())
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.generators.iter().map(|g| g.to_string()).collect()
    }

    /// The ideal as polynomials over `field`.
    pub fn to_ideal<F: Field>(&self, field: F, order: MonomialOrder) -> Ideal<F> {
        Ideal::new(
            field,
            self.nvars,
            self.generators
                .iter()
                .map(|g| Polynomial::term(field, order, g.clone(), field.one()))
                .collect(),
        )
        .expect("generators share the ambient")
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_strings().join(", "))
    }
}

fn canonical_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    a.degree()
        .cmp(&b.degree())
        .then_with(|| b.exponents().cmp(a.exponents()))
}

/// Radicality test for monomial ideals.
pub fn is_radical_monomial(ideal: &MonomialIdeal) -> bool {
    ideal.is_radical()
}
