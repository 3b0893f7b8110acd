//! Polynomial arithmetic, monomial orders, Groebner bases and monomial ideals.

mod buchberger;
mod ideal;
mod modp;
mod monomial;
mod parse;
mod polynomial;

use thiserror::Error;

use crate::field::FieldError;

pub use buchberger::{
    buchberger, initial_ideal, is_groebner_basis, is_reduced_groebner_basis, normal_form,
    s_polynomial,
};
pub use ideal::{is_radical_monomial, Ideal, MonomialIdeal};
pub use modp::{
    initial_ideal_stability, reduce_mod_p, specialize, PrimeOutcome, PrimeVerdict,
    StabilityReport,
};
pub use monomial::{compare, Monomial, MonomialOrder};
pub use parse::{parse_ideal, parse_polynomial, IdealFile};
pub use polynomial::Polynomial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroebnerError {
    #[error("exponent vectors of different lengths ({left} vs {right})")]
    LengthMismatch { left: usize, right: usize },
    #[error("polynomials live in different rings")]
    AmbientMismatch,
    #[error("generator {generator} has a denominator divisible by {p}")]
    DenominatorDivisible { generator: usize, p: u32 },
    #[error("generator {generator} vanishes modulo {p}")]
    VanishingGenerator { generator: usize, p: u32 },
    #[error(transparent)]
    Field(#[from] FieldError),
}
