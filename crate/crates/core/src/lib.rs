//! Exact Frobenius-splitting computations for quotients R = S/I of
//! polynomial rings S = F_p[x_1..x_n] over prime fields.
//!
//! The crate computes, with exact integer arithmetic throughout:
//!
//! - canonical multivariate polynomial arithmetic over F_p ([`polyring`]);
//! - reduced Groebner bases, ideal membership, colon, intersection,
//!   saturation, and combinatorics of monomial ideals ([`ideal`]);
//! - bracket powers J^[p^e], Frobenius roots, and the multiplier ideals
//!   I^[p^e] : I that present Hom_R(F_*^e R, R) ([`frobenius`]);
//! - Cartier contractions and cores, splitting primes, F-purity and strong
//!   F-regularity classifiers, and (R, a^t) pair variants ([`cartier`]);
//! - simplicial complexes, the closed form for cores of monomial primes in
//!   Stanley-Reisner rings, and the finite core-map atlas ([`stanley_reisner`]);
//! - homogenization, variable adjunction, and minimal-prime restriction
//!   transforms with their commutation checks ([`transforms`]).
//!
//! All values are immutable after construction; caches (Groebner bases,
//! multiplier ideals) are compute-once and safe under concurrent readers.
//! The crate is `no_std` with `alloc`.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod cartier;
pub mod error;
pub mod frobenius;
pub mod ideal;
pub mod polyring;
pub mod stanley_reisner;
pub mod transforms;

pub use cartier::{
    cartier_contraction, cartier_core, f_pure_locus, is_compatible, is_f_pure, is_f_pure_along,
    is_strongly_f_regular, multiplier_compose, pair_contraction, pair_core, splitting_prime,
    CartierPair, Certification, CoreReport, MultiplierMap, PresentedRing, SfRegularity,
};
pub use error::{Error, Result};
pub use frobenius::{bracket_power, fedder_multiplier, frobenius_root, FrobeniusLevel};
pub use ideal::{GroebnerBasis, Ideal, MonomialFlag};
pub use polyring::{
    checked_q, FpScalar, Monomial, PolyRing, Polynomial, RingHandle, TermOrder, DEFAULT_DEGREE_CAP,
};
pub use stanley_reisner::{
    core_closed_form, core_map_atlas, core_map_property_checks, enumerate_monomial_primes,
    sums_of_minimal_primes, AtlasGraph, AtlasNode, MonomialPrime, PropertyCheck, SimplicialComplex,
};
pub use transforms::{
    adjoin_variable, adjoin_variable_core_check, contract_last_variable, dehomogenize_ideal,
    extend_ideal, homogenization_context, homogenization_core_check, homogenize_ideal,
    homogenize_polynomial, homogenize_presented, restrict_to_contained_minimal_primes,
    HomogenizationContext,
};
