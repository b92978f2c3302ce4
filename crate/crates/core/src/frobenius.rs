//! Frobenius-specific ideal operators: bracket powers J^[p^e], p^e-th
//! Frobenius roots, and the multiplier ideals I^[p^e] : I that present the
//! degree-e piece of Hom_R(F_*^e R, R) for R = S/I.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::cartier::PresentedRing;
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::polyring::{checked_q, FpScalar, Monomial, Polynomial};

/// A positive Frobenius level e with q = p^e.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FrobeniusLevel {
    e: u32,
}

impl FrobeniusLevel {
    /// Contractions and roots act at levels e >= 1.
    pub fn new(e: u32) -> Result<FrobeniusLevel> {
        if e == 0 {
            return Err(Error::InvalidLevel(0));
        }
        Ok(FrobeniusLevel { e })
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn q(&self, p: u64) -> Result<u64> {
        checked_q(p, self.e)
    }
}

/// The bracket power: the ideal generated by g^(p^e) over the generators.
/// Over the regular ambient ring this is independent of the generating set.
pub fn bracket_power(ideal: &Ideal, level: FrobeniusLevel) -> Result<Ideal> {
    let gens = ideal
        .generators()
        .iter()
        .map(|g| g.frobenius_pow(level.e()))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(ideal.ring(), gens)
}

/// The p^e-th Frobenius root: the smallest ideal L with K inside L^[p^e].
///
/// Each generator g is written as a sum over remainder exponent vectors
/// a in [0, q)^n of h_a^q * x^a; the h_a generate the root. Scalar q-th
/// roots are the identity because the coefficients live in F_p, which is
/// the one place the prime-field restriction is load-bearing.
pub fn frobenius_root(ideal: &Ideal, level: FrobeniusLevel) -> Result<Ideal> {
    let ring = ideal.ring();
    let q = level.q(ring.prime())?;
    let mut gens: Vec<Polynomial> = Vec::new();
    for g in ideal.generators() {
        let mut buckets: BTreeMap<Monomial, Vec<(Monomial, FpScalar)>> = BTreeMap::new();
        for (m, c) in g.terms() {
            let (quo, rem) = m.split_mod(q);
            buckets.entry(rem).or_default().push((quo, *c));
        }
        for (_, raw) in buckets {
            let h = Polynomial::from_terms(ring, raw)?;
            if !h.is_zero() {
                gens.push(h);
            }
        }
    }
    Ideal::new(ring, gens)
}

/// The multiplier ideal I^[p^e] : I of the presentation, cached per level.
/// For I = 0 the ambient ring is regular and every map is allowed, so the
/// multiplier is the unit ideal.
pub fn fedder_multiplier(ring: &PresentedRing, level: FrobeniusLevel) -> Result<Ideal> {
    ring.fedder_multiplier(level)
}

pub(crate) fn compute_fedder_multiplier(defining: &Ideal, level: FrobeniusLevel) -> Result<Ideal> {
    if defining.is_zero_ideal() {
        return Ok(Ideal::unit(defining.ring()));
    }
    bracket_power(defining, level)?.colon(defining)
}
