//! Random and symbolic parameter bindings for the local families.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{FamilyId, FamilyParams, RepError};
use crate::scalar::{rat, vars, RatFunc, Rational};

/// Deterministic source of small rationals `p/q` with `|p| <= 9`, `1 <= q <= 5`.
#[derive(Clone, Debug)]
pub struct ParamSampler {
    rng: ChaCha8Rng,
}

impl ParamSampler {
    pub fn new(seed: u64) -> Self {
        ParamSampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn rational(&mut self) -> Rational {
        rat(self.rng.gen_range(-9..=9), self.rng.gen_range(1..=5))
    }

    pub fn nonzero_rational(&mut self) -> Rational {
        loop {
            let q = self.rational();
            if q != rat(0, 1) {
                return q;
            }
        }
    }

    pub fn range(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.gen_range(lo..=hi)
    }

    /// Draws the parameters not fixed by `fixed` until the family's domain
    /// conditions hold.
    pub fn params(
        &mut self,
        family: FamilyId,
        n: usize,
        fixed: &BTreeMap<String, Rational>,
    ) -> Result<FamilyParams<Rational>, RepError> {
        const ATTEMPTS: usize = 10_000;
        for _ in 0..ATTEMPTS {
            let bindings: BTreeMap<String, Rational> = family
                .param_names()
                .iter()
                .map(|&p| {
                    (
                        p.to_string(),
                        fixed.get(p).cloned().unwrap_or_else(|| self.rational()),
                    )
                })
                .collect();
            match FamilyParams::new(family, n, bindings, ()) {
                Err(RepError::Constraint { .. }) => continue,
                other => return other,
            }
        }
        Err(RepError::InvalidParams(format!(
            "{family}: no admissible parameters found in {ATTEMPTS} draws"
        )))
    }
}

/// Random admissible rational parameters for `family`.
pub fn sample_params(
    family: FamilyId,
    n: usize,
    seed: u64,
) -> Result<FamilyParams<Rational>, RepError> {
    ParamSampler::new(seed).params(family, n, &BTreeMap::new())
}

/// Parameters bound to free variables of the same names, over the field of
/// rational functions in those variables.
pub fn symbolic_params(family: FamilyId, n: usize) -> Result<FamilyParams<RatFunc>, RepError> {
    let names = family.param_names();
    let vs = vars(names);
    let bindings = names
        .iter()
        .map(|&p| (p.to_string(), RatFunc::var(&vs, p)))
        .collect();
    FamilyParams::new(family, n, bindings, vs)
}
