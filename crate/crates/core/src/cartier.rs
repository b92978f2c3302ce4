//! Cartier contractions and cores, multiplier maps and their composition,
//! F-purity and strong F-regularity classifiers, splitting primes, and the
//! (R, a^t) pair variants.
//!
//! Every ideal of R = S/I is manipulated as a lift containing I; inputs are
//! normalized by J := J + I. The central formula computes the lifted level-e
//! contraction as J^[p^e] :_S (I^[p^e] :_S I).

use alloc::boxed::Box;
use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use once_cell::race::OnceBox;

use crate::error::{Error, Result};
use crate::frobenius::{bracket_power, compute_fedder_multiplier, frobenius_root, FrobeniusLevel};
use crate::ideal::{monomial_minimal_primes, GroebnerBasis, Ideal};
use crate::polyring::{PolyRing, Polynomial, RingHandle};
use crate::stanley_reisner::{core_closed_form, MonomialPrime};

const FEDDER_CACHE_LEVELS: usize = 16;

/// A presentation R = S/I of the ring under study: the ambient polynomial
/// ring, the defining ideal, and derived structure flags.
pub struct PresentedRing {
    ambient: Arc<PolyRing>,
    defining: Ideal,
    graded: bool,
    stanley_reisner: bool,
    fedder: [OnceBox<Ideal>; FEDDER_CACHE_LEVELS],
}

impl core::fmt::Debug for PresentedRing {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(
            f,
            "PresentedRing(p={}, vars={:?}, I={:?})",
            self.ambient.prime(),
            self.ambient.variables(),
            self.defining
        )
    }
}

impl PresentedRing {
    /// Builds the presentation and eagerly reduces the defining ideal; the
    /// defining ideal must be proper or zero.
    pub fn new(ambient: &Arc<PolyRing>, defining_gens: Vec<Polynomial>) -> Result<Arc<Self>> {
        let defining = Ideal::new(ambient, defining_gens)?;
        let basis = defining.groebner_basis()?;
        if basis
            .elements()
            .iter()
            .any(|g| g.is_constant() && !g.is_zero())
        {
            return Err(Error::InvalidArgument(
                "defining ideal is the unit ideal".into(),
            ));
        }
        let graded = basis.elements().iter().all(|g| g.is_homogeneous());
        let stanley_reisner = defining.is_zero_ideal()
            || (basis.is_monomial()
                && basis
                    .elements()
                    .iter()
                    .all(|g| g.leading_monomial().unwrap().is_squarefree()));
        Ok(Arc::new(PresentedRing {
            ambient: ambient.clone(),
            defining,
            graded,
            stanley_reisner,
            fedder: core::array::from_fn(|_| OnceBox::new()),
        }))
    }

    pub fn ambient(&self) -> &Arc<PolyRing> {
        &self.ambient
    }

    pub fn prime(&self) -> u64 {
        self.ambient.prime()
    }

    pub fn defining_ideal(&self) -> &Ideal {
        &self.defining
    }

    /// Whether the defining ideal is homogeneous.
    pub fn is_graded(&self) -> bool {
        self.graded
    }

    /// Whether the defining ideal is zero or squarefree monomial.
    pub fn is_stanley_reisner(&self) -> bool {
        self.stanley_reisner
    }

    /// The ideal generated by all variables.
    pub fn irrelevant_maximal_ideal(&self) -> Ideal {
        let gens = (0..self.ambient.nvars())
            .map(|i| self.ambient.var_poly(i))
            .collect();
        Ideal::new(&self.ambient, gens).expect("variables are valid generators")
    }

    /// J + I, the lift convention for ideals of the quotient.
    pub fn normalize_lift(&self, j: &Ideal) -> Result<Ideal> {
        j.sum(&self.defining)
    }

    pub fn parse(&self, text: &str) -> Result<Polynomial> {
        self.ambient.parse(text)
    }

    /// Same ambient data and the same defining ideal (by reduced basis).
    pub fn same_presentation(&self, other: &PresentedRing) -> bool {
        if !self.ambient.compatible(&other.ambient) {
            return false;
        }
        match (
            self.defining.groebner_basis(),
            other.defining.groebner_basis(),
        ) {
            (Ok(a), Ok(b)) => a == b,
            _ => false,
        }
    }

    /// I^[p^e] : I, cached per level. The unit ideal when I = 0.
    pub fn fedder_multiplier(&self, level: FrobeniusLevel) -> Result<Ideal> {
        let e = level.e() as usize;
        if (1..=FEDDER_CACHE_LEVELS).contains(&e) {
            let slot = &self.fedder[e - 1];
            let cached = slot.get_or_try_init(|| {
                compute_fedder_multiplier(&self.defining, level).map(Box::new)
            })?;
            return Ok(cached.clone());
        }
        compute_fedder_multiplier(&self.defining, level)
    }

    /// Minimal primes of a monomial defining ideal, as variable subsets.
    pub fn monomial_minimal_primes(&self) -> Result<Vec<MonomialPrime>> {
        match self.defining.monomial_generators() {
            Some(mons) => monomial_minimal_primes(&self.ambient, &mons),
            None => Err(Error::MinimalPrimesUnavailable),
        }
    }
}

/// How a reported core is certified.
///
/// `ClosedFormExact` means the combinatorial closed form applied and agreed
/// with the contraction data at every computed level. `CompatibleToE(E)`
/// means the partial intersections stabilized and the candidate is
/// compatible at every level up to E; the extension beyond E is recorded,
/// not assumed. `Heuristic` carries no exactness claim.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Certification {
    ClosedFormExact,
    CompatibleToE(u32),
    Heuristic,
}

impl core::fmt::Display for Certification {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Certification::ClosedFormExact => write!(f, "closed_form_exact"),
            Certification::CompatibleToE(e) => write!(f, "compatible_to_{e}"),
            Certification::Heuristic => write!(f, "heuristic"),
        }
    }
}

/// The result of a core computation: the core (as a lift containing I),
/// the per-level contractions, stabilization data, certification, and the
/// F-purity of the ambient pair.
#[derive(Debug, Clone)]
pub struct CoreReport {
    pub core: Ideal,
    pub contractions: Vec<(u32, Ideal)>,
    pub stabilized_at: Option<u32>,
    pub certification: Certification,
    pub f_pure: bool,
    pub warnings: Vec<String>,
}

impl CoreReport {
    pub fn levels_computed(&self) -> u32 {
        self.contractions.last().map(|(e, _)| *e).unwrap_or(0)
    }
}

/// The lifted level-e contraction J^[p^e] :_S (I^[p^e] :_S I).
pub fn cartier_contraction(pr: &PresentedRing, j: &Ideal, level: FrobeniusLevel) -> Result<Ideal> {
    let jn = pr.normalize_lift(j)?;
    contraction_normalized(pr, &jn, level)
}

fn contraction_normalized(pr: &PresentedRing, jn: &Ideal, level: FrobeniusLevel) -> Result<Ideal> {
    bracket_power(jn, level)?.colon(&pr.fedder_multiplier(level)?)
}

/// Variable subset when the reduced basis is generated by single variables;
/// the empty basis (zero ideal) yields the empty subset.
fn variable_subset_basis(basis: &GroebnerBasis) -> Option<BTreeSet<usize>> {
    let mut vars = BTreeSet::new();
    for g in basis.elements() {
        let terms = g.terms();
        if terms.len() != 1 {
            return None;
        }
        let m = &terms[0].0;
        let support: Vec<usize> = m.support().collect();
        if support.len() != 1 || m.exponents()[support[0]] != 1 {
            return None;
        }
        vars.insert(support[0]);
    }
    Some(vars)
}

struct CoreLoop {
    contractions: Vec<(u32, Ideal)>,
    partial: Ideal,
    stabilized_at: Option<u32>,
}

fn run_core_loop(
    e_max: u32,
    window: u32,
    mut contract: impl FnMut(u32) -> Result<Ideal>,
) -> Result<CoreLoop> {
    if e_max < 2 {
        return Err(Error::InvalidArgument("e_max must be at least 2".into()));
    }
    if window < 1 {
        return Err(Error::InvalidArgument("window must be at least 1".into()));
    }
    let mut contractions: Vec<(u32, Ideal)> = Vec::new();
    let mut partial: Option<Ideal> = None;
    let mut run = 0u32;
    let mut stabilized_at = None;
    for e in 1..=e_max {
        let a = contract(e)?;
        let next = match &partial {
            None => a.clone(),
            Some(b) => b.intersect(&a)?,
        };
        if let Some(b) = &partial {
            if next.equals(b)? {
                run += 1;
            } else {
                run = 0;
            }
        }
        contractions.push((e, a));
        partial = Some(next);
        if run >= window {
            stabilized_at = Some(e - window);
            break;
        }
    }
    Ok(CoreLoop {
        contractions,
        partial: partial.expect("at least two levels computed"),
        stabilized_at,
    })
}

/// The core of J: partial intersections of the contractions with a
/// stabilization stop, certified on the ladder closed-form > compatible > heuristic.
///
/// For a monomial prime of a Stanley-Reisner presentation the closed form
/// (sum of the minimal primes inside J) supplies the exact core; it is
/// cross-checked against every computed contraction through the identity
/// A_e(Q) = Q^[p^e] + core before being certified.
pub fn cartier_core(pr: &PresentedRing, j: &Ideal, e_max: u32, window: u32) -> Result<CoreReport> {
    let jn = pr.normalize_lift(j)?;
    let looped = run_core_loop(e_max, window, |e| {
        contraction_normalized(pr, &jn, FrobeniusLevel::new(e)?)
    })?;
    let f_pure = is_f_pure(pr)?;
    let mut warnings: Vec<String> = Vec::new();

    if pr.is_stanley_reisner() {
        if let Some(vars) = variable_subset_basis(jn.groebner_basis()?) {
            let q_prime = MonomialPrime::new(pr.ambient(), vars);
            let closed = core_closed_form(pr, &q_prime)?;
            let mut exact = closed.leq(&looped.partial)?;
            if exact {
                for (e, a) in &looped.contractions {
                    let level = FrobeniusLevel::new(*e)?;
                    let expected = bracket_power(&jn, level)?.sum(&closed)?;
                    if !a.equals(&expected)? {
                        exact = false;
                        break;
                    }
                }
            }
            if exact {
                return Ok(CoreReport {
                    core: closed,
                    contractions: looped.contractions,
                    stabilized_at: looped.stabilized_at,
                    certification: Certification::ClosedFormExact,
                    f_pure,
                    warnings,
                });
            }
            warnings.push("closed-form cross-check disagreed with contraction data".into());
        }
    }

    let certification = certify_by_compatibility(
        pr,
        &looped.partial,
        looped.stabilized_at,
        e_max,
        &mut warnings,
        is_compatible,
    )?;
    Ok(CoreReport {
        core: looped.partial,
        contractions: looped.contractions,
        stabilized_at: looped.stabilized_at,
        certification,
        f_pure,
        warnings,
    })
}

fn certify_by_compatibility(
    pr: &PresentedRing,
    candidate: &Ideal,
    stabilized_at: Option<u32>,
    e_max: u32,
    warnings: &mut Vec<String>,
    mut compatible_at: impl FnMut(&PresentedRing, &Ideal, FrobeniusLevel) -> Result<bool>,
) -> Result<Certification> {
    if stabilized_at.is_none() {
        warnings.push(format!(
            "partial intersections did not stabilize within {e_max} levels"
        ));
        return Ok(Certification::Heuristic);
    }
    for e in 1..=e_max {
        if !compatible_at(pr, candidate, FrobeniusLevel::new(e)?)? {
            warnings.push(format!("stabilized value is not compatible at level {e}"));
            return Ok(Certification::Heuristic);
        }
    }
    Ok(Certification::CompatibleToE(e_max))
}

/// Whether K is fixed under the level-e contraction: K inside A_e(K),
/// equivalently (I^[p^e] : I) * K inside K^[p^e].
pub fn is_compatible(pr: &PresentedRing, k: &Ideal, level: FrobeniusLevel) -> Result<bool> {
    let kn = pr.normalize_lift(k)?;
    kn.leq(&contraction_normalized(pr, &kn, level)?)
}

fn non_f_pure_locus(pr: &PresentedRing) -> Result<Ideal> {
    let level = FrobeniusLevel::new(1)?;
    let mult = pr.fedder_multiplier(level)?;
    let root = frobenius_root(&mult, level)?;
    root.sum(pr.defining_ideal())
}

/// Global F-purity: the non-F-pure locus is empty, i.e. the level-one root
/// of the multiplier ideal together with I generates the unit ideal. Level
/// one suffices for the full algebra: a degree-e splitting restricts to a
/// degree-one splitting.
pub fn is_f_pure(pr: &PresentedRing) -> Result<bool> {
    non_f_pure_locus(pr)?.is_unit_ideal()
}

/// The defining ideal (up to radical) of the closed non-F-pure locus.
pub fn f_pure_locus(pr: &PresentedRing) -> Result<Ideal> {
    non_f_pure_locus(pr)
}

/// Splitting test along c at the irrelevant maximal ideal: true when some
/// level e <= e_max has c outside m^[p^e] : (I^[p^e] : I). A false answer
/// is only valid up to e_max.
pub fn is_f_pure_along(pr: &PresentedRing, c: &Polynomial, e_max: u32) -> Result<bool> {
    if !pr.is_graded() {
        return Err(Error::NotGraded);
    }
    let m = pr.irrelevant_maximal_ideal();
    for e in 1..=e_max {
        let level = FrobeniusLevel::new(e)?;
        let denom = bracket_power(&m, level)?.colon(&pr.fedder_multiplier(level)?)?;
        if !denom.contains(c)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// The core of the irrelevant maximal ideal.
pub fn splitting_prime(pr: &PresentedRing, e_max: u32, window: u32) -> Result<CoreReport> {
    if !pr.is_graded() {
        return Err(Error::NotGraded);
    }
    cartier_core(pr, &pr.irrelevant_maximal_ideal(), e_max, window)
}

/// Three-valued strong F-regularity verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SfRegularity {
    Yes,
    No,
    Unknown,
}

impl core::fmt::Display for SfRegularity {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            SfRegularity::Yes => write!(f, "yes"),
            SfRegularity::No => write!(f, "no"),
            SfRegularity::Unknown => write!(f, "unknown"),
        }
    }
}

/// Strong F-regularity of the graded presentation: yes when the certified
/// splitting prime is contained in a minimal prime, no when it is not
/// contained in any, unknown when the splitting prime is only heuristic.
pub fn is_strongly_f_regular(
    pr: &PresentedRing,
    e_max: u32,
    window: u32,
) -> Result<(SfRegularity, CoreReport)> {
    let report = splitting_prime(pr, e_max, window)?;
    if report.certification == Certification::Heuristic {
        return Ok((SfRegularity::Unknown, report));
    }
    // core equal to I is the zero ideal of R: contained in every minimal prime
    if report.core.equals(pr.defining_ideal())? {
        return Ok((SfRegularity::Yes, report));
    }
    if report.core.is_unit_ideal()? {
        return Ok((SfRegularity::No, report));
    }
    let primes = pr.monomial_minimal_primes()?;
    for p in &primes {
        if report.core.leq(&p.to_ideal()?)? {
            return Ok((SfRegularity::Yes, report));
        }
    }
    Ok((SfRegularity::No, report))
}

/// A map in Hom_R(F_*^e R, R) represented by its multiplier: the pair
/// (s, e) with s in I^[p^e] : I stands for the composite of the generator
/// projection with premultiplication by s.
#[derive(Debug, Clone)]
pub struct MultiplierMap {
    ring: Arc<PresentedRing>,
    multiplier: Polynomial,
    level: u32,
}

impl MultiplierMap {
    /// Membership in I^[p^e] : I is checked at construction. Level zero is
    /// the degree-zero piece R, where every multiplier is allowed.
    pub fn new(ring: &Arc<PresentedRing>, multiplier: Polynomial, level: u32) -> Result<Self> {
        if !multiplier.ring().compatible(ring.ambient()) {
            return Err(Error::RingMismatch);
        }
        if level >= 1 {
            let ideal = ring.fedder_multiplier(FrobeniusLevel::new(level)?)?;
            if !ideal.contains(&multiplier)? {
                return Err(Error::InvalidArgument(format!(
                    "{multiplier} does not lie in the level-{level} multiplier ideal"
                )));
            }
        }
        Ok(MultiplierMap {
            ring: ring.clone(),
            multiplier,
            level,
        })
    }

    pub fn multiplier(&self) -> &Polynomial {
        &self.multiplier
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn compose(&self, other: &MultiplierMap) -> Result<MultiplierMap> {
        multiplier_compose(self, other)
    }
}

/// Composition of multiplier maps: (s, e) * (t, d) = (s^(p^d) * t, e + d).
/// The composite always lies in the level-(e+d) multiplier ideal; a failed
/// membership check therefore indicates an engine bug and is a hard error.
pub fn multiplier_compose(f: &MultiplierMap, g: &MultiplierMap) -> Result<MultiplierMap> {
    if !f.ring.same_presentation(&g.ring) {
        return Err(Error::RingMismatch);
    }
    let s = f.multiplier.frobenius_pow(g.level)?.mul(&g.multiplier)?;
    let level = f.level + g.level;
    if level >= 1 {
        let ideal = f.ring.fedder_multiplier(FrobeniusLevel::new(level)?)?;
        if !ideal.contains(&s)? {
            return Err(Error::Internal(format!(
                "composed multiplier {s} left the level-{level} multiplier ideal"
            )));
        }
    }
    Ok(MultiplierMap {
        ring: f.ring.clone(),
        multiplier: s,
        level,
    })
}

/// The pair datum (a, t): a nonzero coefficient ideal (as a lift) and a
/// positive rational formal exponent, kept exact as a fraction.
#[derive(Debug, Clone)]
pub struct CartierPair {
    ideal: Ideal,
    t_num: u64,
    t_den: u64,
}

impl CartierPair {
    pub fn new(pr: &PresentedRing, ideal: Ideal, t_num: u64, t_den: u64) -> Result<Self> {
        if t_num == 0 || t_den == 0 {
            return Err(Error::InvalidArgument(
                "formal exponent t must be a positive rational".into(),
            ));
        }
        if ideal.is_zero_ideal() {
            return Err(Error::InvalidArgument("pair ideal must be nonzero".into()));
        }
        if !ideal.ring().compatible(pr.ambient()) {
            return Err(Error::RingMismatch);
        }
        if !ideal.is_unit_ideal()? && ideal.leq(pr.defining_ideal())? {
            return Err(Error::InvalidArgument(
                "pair ideal is contained in the defining ideal".into(),
            ));
        }
        Ok(CartierPair {
            ideal,
            t_num,
            t_den,
        })
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn exponent(&self) -> (u64, u64) {
        (self.t_num, self.t_den)
    }

    /// ceil(t * (q - 1)), exact integer arithmetic.
    pub fn scaling_exponent(&self, q: u64) -> u64 {
        let num = self.t_num as u128 * (q as u128 - 1);
        num.div_ceil(self.t_den as u128) as u64
    }
}

/// Level-e contraction for the pair subalgebra: the full contraction
/// coloned by a^ceil(t(q-1)).
pub fn pair_contraction(
    pr: &PresentedRing,
    j: &Ideal,
    pair: &CartierPair,
    level: FrobeniusLevel,
) -> Result<Ideal> {
    let base = cartier_contraction(pr, j, level)?;
    let n = pair.scaling_exponent(level.q(pr.prime())?);
    if n == 0 {
        return Ok(base);
    }
    base.colon(&pair.ideal.power(n)?)
}

fn pair_is_f_pure_up_to(pr: &PresentedRing, pair: &CartierPair, e_max: u32) -> Result<bool> {
    for e in 1..=e_max {
        let level = FrobeniusLevel::new(e)?;
        let n = pair.scaling_exponent(level.q(pr.prime())?);
        let mut mult = pr.fedder_multiplier(level)?;
        if n > 0 {
            mult = mult.multiply(&pair.ideal.power(n)?)?;
        }
        let locus = frobenius_root(&mult, level)?.sum(pr.defining_ideal())?;
        if locus.is_unit_ideal()? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Pair-variant core with the same stabilization machinery; certification
/// is limited to compatible/heuristic and the report records that the
/// containment core(J) inside J needs the pair to be F-pure.
pub fn pair_core(
    pr: &PresentedRing,
    j: &Ideal,
    pair: &CartierPair,
    e_max: u32,
    window: u32,
) -> Result<CoreReport> {
    let jn = pr.normalize_lift(j)?;
    let looped = run_core_loop(e_max, window, |e| {
        pair_contraction(pr, &jn, pair, FrobeniusLevel::new(e)?)
    })?;
    let f_pure = pair_is_f_pure_up_to(pr, pair, e_max)?;
    let mut warnings: Vec<String> = Vec::new();
    if !f_pure {
        warnings.push(format!(
            "pair is not F-pure up to level {e_max}; core(J) inside J is not guaranteed"
        ));
    }
    let certification = certify_by_compatibility(
        pr,
        &looped.partial,
        looped.stabilized_at,
        e_max,
        &mut warnings,
        |pr, b, e| {
            let bn = pr.normalize_lift(b)?;
            bn.leq(&pair_contraction(pr, &bn, pair, e)?)
        },
    )?;
    Ok(CoreReport {
        core: looped.partial,
        contractions: looped.contractions,
        stabilized_at: looped.stabilized_at,
        certification,
        f_pure,
        warnings,
    })
}
