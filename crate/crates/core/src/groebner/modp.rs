use serde::Serialize;

use super::buchberger::initial_ideal;
use super::ideal::{Ideal, MonomialIdeal};
use super::monomial::MonomialOrder;
use super::polynomial::Polynomial;
use super::GroebnerError;
use crate::field::{Field, PrimeField, Rationals};

/// Coefficientwise image of a rational ideal in `F_p[x1..xn]`.
///
/// Fails when `p` divides a coefficient denominator or when a generator maps to zero.
pub fn reduce_mod_p(ideal: &Ideal<Rationals>, p: u32) -> Result<Ideal<PrimeField>, GroebnerError> {
    let fp = PrimeField::new(p).map_err(GroebnerError::Field)?;
    let mut gens = Vec::with_capacity(ideal.generators().len());
    for (index, g) in ideal.generators().iter().enumerate() {
        let mut failed = false;
        let image: Polynomial<PrimeField> = g.map_coefficients(fp, |c| {
            fp.from_ratio(c.numer(), c.denom()).unwrap_or_else(|| {
                failed = true;
                0
            })
        });
        if failed {
            return Err(GroebnerError::DenominatorDivisible { generator: index, p });
        }
        if image.is_zero() {
            return Err(GroebnerError::VanishingGenerator { generator: index, p });
        }
        gens.push(image);
    }
    Ideal::new(fp, ideal.nvars(), gens)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "lowercase")]
pub enum PrimeVerdict {
    Agree,
    Disagree { initial_ideal: Vec<String> },
    Error { message: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimeOutcome {
    pub p: u32,
    #[serde(flatten)]
    pub verdict: PrimeVerdict,
}

/// Comparison of `in(I_p)` with `in(I)` over a list of primes. Agreement is
/// observed, not certified.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilityReport {
    pub reference: MonomialIdeal,
    pub outcomes: Vec<PrimeOutcome>,
}

impl StabilityReport {
    pub fn agreeing(&self) -> Vec<u32> {
        self.outcomes
            .iter()
            .filter(|o| o.verdict == PrimeVerdict::Agree)
            .map(|o| o.p)
            .collect()
    }

    pub fn disagreeing(&self) -> Vec<u32> {
        self.outcomes
            .iter()
            .filter(|o| matches!(o.verdict, PrimeVerdict::Disagree { .. }))
            .map(|o| o.p)
            .collect()
    }

    pub fn errored(&self) -> Vec<u32> {
        self.outcomes
            .iter()
            .filter(|o| matches!(o.verdict, PrimeVerdict::Error { .. }))
            .map(|o| o.p)
            .collect()
    }

    pub fn all_agree(&self) -> bool {
        self.outcomes.iter().all(|o| o.verdict == PrimeVerdict::Agree)
    }
}

/// Initial ideal of `ideal` over the rationals compared against each reduction mod `p`.
/// Per-prime failures are recorded in the report.
pub fn initial_ideal_stability(
    ideal: &Ideal<Rationals>,
    order: MonomialOrder,
    primes: &[u32],
) -> Result<StabilityReport, GroebnerError> {
    let reference = initial_ideal(ideal, order)?;
    let outcomes = primes
        .iter()
        .map(|&p| {
            let verdict = match reduce_mod_p(ideal, p).and_then(|ip| initial_ideal(&ip, order)) {
                Ok(j) if j == reference => PrimeVerdict::Agree,
                Ok(j) => PrimeVerdict::Disagree {
                    initial_ideal: j.to_strings(),
                },
                Err(e) => PrimeVerdict::Error {
                    message: e.to_string(),
                },
            };
            PrimeOutcome { p, verdict }
        })
        .collect();
    Ok(StabilityReport { reference, outcomes })
}

/// Embeds an integer-coefficient ideal read as rationals into `field`.
/// Used when an input file fixes a characteristic.
pub fn specialize<F: Field>(ideal: &Ideal<Rationals>, field: F) -> Result<Ideal<F>, GroebnerError> {
    let spec = field.spec();
    if spec.is_rationals() {
        let gens = ideal
            .generators()
            .iter()
            .map(|g| g.map_coefficients(field, |c| field.div(&field.from_integer(c.numer()), &field.from_integer(c.denom()))))
            .collect();
        return Ideal::new(field, ideal.nvars(), gens);
    }
    let reduced = reduce_mod_p(ideal, spec.characteristic())?;
    let gens = reduced
        .generators()
        .iter()
        .map(|g| g.map_coefficients(field, |c| field.from_i64(*c as i64)))
        .collect();
    Ideal::new(field, ideal.nvars(), gens)
}
