//! Ideal arithmetic in the ambient polynomial ring: reduced Groebner bases
//! via Buchberger's algorithm, membership and containment, colon,
//! intersection, saturation, and combinatorial fast paths for monomial
//! ideals.
//!
//! Ideals are immutable; the reduced basis is a compute-once cache that is
//! safe under concurrent readers (either absent or the unique reduced basis).

use alloc::boxed::Box;
use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use alloc::{format, vec};
use core::fmt;

use once_cell::race::OnceBox;

use crate::error::{Error, Result};
use crate::polyring::{FpScalar, Monomial, PolyRing, Polynomial, RingHandle, TermOrder};
use crate::stanley_reisner::MonomialPrime;

/// Whether an ideal is known to be generated by monomials.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonomialFlag {
    Monomial,
    NotMonomial,
    Unknown,
}

/// A reduced Groebner basis: monic, auto-reduced, sorted by descending
/// leading monomial. Unique for a given ideal and term order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    elements: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn is_monomial(&self) -> bool {
        self.elements.iter().all(|g| g.is_monomial())
    }
}

/// An ideal of the ambient ring, held by a generator list.
pub struct Ideal {
    ring: Arc<PolyRing>,
    gens: Vec<Polynomial>,
    basis: OnceBox<GroebnerBasis>,
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        let basis = OnceBox::new();
        if let Some(b) = self.basis.get() {
            let _ = basis.set(Box::new(b.clone()));
        }
        Ideal {
            ring: self.ring.clone(),
            gens: self.gens.clone(),
            basis,
        }
    }
}

impl Ideal {
    /// Builds an ideal from generators, dropping zeros and exact duplicates.
    pub fn new(ring: &Arc<PolyRing>, gens: Vec<Polynomial>) -> Result<Ideal> {
        let mut kept: Vec<Polynomial> = Vec::new();
        for g in gens {
            if !g.ring().compatible(ring) {
                return Err(Error::RingMismatch);
            }
            if g.is_zero() || kept.contains(&g) {
                continue;
            }
            kept.push(g);
        }
        Ok(Ideal {
            ring: ring.clone(),
            gens: kept,
            basis: OnceBox::new(),
        })
    }

    pub fn zero(ring: &Arc<PolyRing>) -> Ideal {
        Ideal {
            ring: ring.clone(),
            gens: Vec::new(),
            basis: OnceBox::new(),
        }
    }

    pub fn unit(ring: &Arc<PolyRing>) -> Ideal {
        Ideal {
            ring: ring.clone(),
            gens: vec![ring.one_poly()],
            basis: OnceBox::new(),
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
    }

    /// True when the ideal is visibly generated by single terms, possibly
    /// after the reduced basis has been computed.
    pub fn monomial_flag(&self) -> MonomialFlag {
        if self.gens.iter().all(|g| g.is_monomial()) {
            return MonomialFlag::Monomial;
        }
        match self.basis.get() {
            Some(b) if b.is_monomial() => MonomialFlag::Monomial,
            Some(_) => MonomialFlag::NotMonomial,
            None => MonomialFlag::Unknown,
        }
    }

    /// Minimal monomial generators when the ideal is known monomial.
    pub fn monomial_generators(&self) -> Option<Vec<Monomial>> {
        let source: Vec<Monomial> = if self.gens.iter().all(|g| g.is_monomial()) {
            self.gens
                .iter()
                .map(|g| g.leading_monomial().unwrap().clone())
                .collect()
        } else {
            match self.basis.get() {
                Some(b) if b.is_monomial() => b
                    .elements
                    .iter()
                    .map(|g| g.leading_monomial().unwrap().clone())
                    .collect(),
                _ => return None,
            }
        };
        Some(minimal_monomials(source))
    }

    /// The reduced Groebner basis under the ring's term order, cached.
    pub fn groebner_basis(&self) -> Result<&GroebnerBasis> {
        self.basis
            .get_or_try_init(|| compute_reduced_basis(&self.ring, &self.gens).map(Box::new))
    }

    /// The unique remainder of `f` modulo the reduced basis; zero iff `f`
    /// lies in the ideal.
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        if !f.ring().compatible(&self.ring) {
            return Err(Error::RingMismatch);
        }
        if let Some(mons) = self.monomial_generators() {
            return monomial_normal_form(f, &mons);
        }
        let basis = self.groebner_basis()?;
        reduce_full(f, &basis.elements)
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        if !f.ring().compatible(&self.ring) {
            return Err(Error::RingMismatch);
        }
        if let Some(mons) = self.monomial_generators() {
            return Ok(f
                .terms()
                .iter()
                .all(|(m, _)| mons.iter().any(|g| g.divides(m))));
        }
        Ok(self.normal_form(f)?.is_zero())
    }

    /// self as a subset of other.
    pub fn leq(&self, other: &Ideal) -> Result<bool> {
        for g in &self.gens {
            if !other.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Mutual containment of generators; never a basis comparison.
    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        Ok(self.leq(other)? && other.leq(self)?)
    }

    pub fn is_unit_ideal(&self) -> Result<bool> {
        if self.gens.iter().any(|g| g.is_constant() && !g.is_zero()) {
            return Ok(true);
        }
        if let Some(mons) = self.monomial_generators() {
            return Ok(mons.iter().any(|m| m.is_one()));
        }
        Ok(self
            .groebner_basis()?
            .elements
            .iter()
            .any(|g| g.is_constant()))
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        if !self.ring.compatible(&other.ring) {
            return Err(Error::RingMismatch);
        }
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn multiply(&self, other: &Ideal) -> Result<Ideal> {
        if !self.ring.compatible(&other.ring) {
            return Err(Error::RingMismatch);
        }
        let mut gens = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.mul(b)?);
            }
        }
        let ideal = Ideal::new(&self.ring, gens)?;
        Ok(ideal.minimalized_if_monomial())
    }

    pub fn power(&self, n: u64) -> Result<Ideal> {
        if n == 0 {
            return Ok(Ideal::unit(&self.ring));
        }
        let mut acc = self.clone();
        for _ in 1..n {
            acc = acc.multiply(self)?;
        }
        Ok(acc)
    }

    fn minimalized_if_monomial(self) -> Ideal {
        match self.monomial_generators() {
            Some(mons) => Ideal {
                ring: self.ring.clone(),
                gens: mons
                    .into_iter()
                    .map(|m| monomial_poly(&self.ring, m))
                    .collect(),
                basis: OnceBox::new(),
            },
            None => self,
        }
    }

    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        if !self.ring.compatible(&other.ring) {
            return Err(Error::RingMismatch);
        }
        if self.is_zero_ideal() || other.is_zero_ideal() {
            return Ok(Ideal::zero(&self.ring));
        }
        if let (Some(a), Some(b)) = (self.monomial_generators(), other.monomial_generators()) {
            let mut lcms = Vec::with_capacity(a.len() * b.len());
            for ma in &a {
                for mb in &b {
                    lcms.push(ma.lcm(mb));
                }
            }
            let gens = minimal_monomials(lcms)
                .into_iter()
                .map(|m| monomial_poly(&self.ring, m))
                .collect();
            return Ideal::new(&self.ring, gens);
        }
        intersect_by_elimination(self, other)
    }

    /// self : other, the ideal of elements multiplying other into self.
    pub fn colon(&self, other: &Ideal) -> Result<Ideal> {
        if !self.ring.compatible(&other.ring) {
            return Err(Error::RingMismatch);
        }
        if other.is_zero_ideal() {
            return Err(Error::ColonByZeroIdeal);
        }
        if self.is_zero_ideal() {
            return Ok(Ideal::zero(&self.ring));
        }
        if let (Some(a), Some(b)) = (self.monomial_generators(), other.monomial_generators()) {
            let mut acc: Option<Vec<Monomial>> = None;
            for mb in &b {
                let quotients: Vec<Monomial> = a.iter().map(|ma| ma.colon(mb)).collect();
                let quotients = minimal_monomials(quotients);
                acc = Some(match acc {
                    None => quotients,
                    Some(prev) => {
                        let mut lcms = Vec::with_capacity(prev.len() * quotients.len());
                        for x in &prev {
                            for y in &quotients {
                                lcms.push(x.lcm(y));
                            }
                        }
                        minimal_monomials(lcms)
                    }
                });
            }
            let gens = acc
                .unwrap_or_default()
                .into_iter()
                .map(|m| monomial_poly(&self.ring, m))
                .collect();
            return Ideal::new(&self.ring, gens);
        }
        let mut acc: Option<Ideal> = None;
        for g in &other.gens {
            let single = Ideal::new(&self.ring, vec![g.clone()])?;
            let meet = self.intersect(&single)?;
            let mut quotient_gens = Vec::with_capacity(meet.gens.len());
            for h in &meet.gens {
                quotient_gens.push(exact_div(h, g)?);
            }
            let colon_g = Ideal::new(&self.ring, quotient_gens)?;
            acc = Some(match acc {
                None => colon_g,
                Some(prev) => prev.intersect(&colon_g)?,
            });
        }
        Ok(acc.expect("nonzero ideal has generators"))
    }

    /// self : f^infinity via iterated colon until stabilization.
    pub fn saturate(&self, f: &Polynomial) -> Result<Ideal> {
        if f.is_zero() {
            return Err(Error::InvalidArgument("saturation by zero".into()));
        }
        let divisor = Ideal::new(&self.ring, vec![f.clone()])?;
        let mut current = self.clone();
        loop {
            let next = current.colon(&divisor)?;
            if next.leq(&current)? {
                return Ok(current);
            }
            current = next;
        }
    }

    /// Minimal primes of a squarefree monomial ideal, as minimal vertex
    /// covers of the hypergraph of generator supports. Each returned prime
    /// is generated by a subset of the variables.
    pub fn minimal_primes_squarefree(&self) -> Result<Vec<MonomialPrime>> {
        let mons = match self.monomial_generators() {
            Some(m) => m,
            None => return Err(Error::NotMonomial),
        };
        if mons.iter().any(|m| !m.is_squarefree()) {
            return Err(Error::NotSquarefree);
        }
        monomial_minimal_primes(&self.ring, &mons)
    }

    /// The reduced basis printed as sorted strings; the canonical text form.
    pub fn printed_basis(&self) -> Result<Vec<String>> {
        let basis = self.groebner_basis()?;
        Ok(basis.elements.iter().map(|g| format!("{g}")).collect())
    }
}

pub(crate) fn monomial_poly(ring: &Arc<PolyRing>, m: Monomial) -> Polynomial {
    Polynomial::from_terms(ring, vec![(m, FpScalar::one(ring.prime()))])
        .expect("monomial within cap")
}

/// Keep only divisibility-minimal monomials, deduplicated, sorted.
pub(crate) fn minimal_monomials(mut mons: Vec<Monomial>) -> Vec<Monomial> {
    mons.sort();
    mons.dedup();
    let mut kept: Vec<Monomial> = Vec::new();
    'outer: for m in mons {
        for k in &kept {
            if k.divides(&m) {
                continue 'outer;
            }
        }
        kept.retain(|k| !m.divides(k));
        kept.push(m);
    }
    kept.sort();
    kept
}

/// Cover-enumeration bound: minimal primes of a monomial ideal touch at
/// most this many distinct variables.
const COVER_ENUMERATION_BOUND: usize = 24;

/// Minimal primes of an arbitrary monomial ideal via minimal covers of the
/// generator supports. Also used by the strong F-regularity classifier.
pub(crate) fn monomial_minimal_primes(
    ring: &Arc<PolyRing>,
    mons: &[Monomial],
) -> Result<Vec<MonomialPrime>> {
    if mons.iter().any(|m| m.is_one()) {
        return Ok(Vec::new()); // unit ideal: no primes contain it
    }
    let supports: Vec<BTreeSet<usize>> = mons.iter().map(|m| m.support().collect()).collect();
    if supports.is_empty() {
        return Ok(vec![MonomialPrime::new(ring, BTreeSet::new())]); // zero ideal
    }
    let used: Vec<usize> = {
        let mut u: BTreeSet<usize> = BTreeSet::new();
        for s in &supports {
            u.extend(s.iter().copied());
        }
        u.into_iter().collect()
    };
    let k = used.len();
    if k > COVER_ENUMERATION_BOUND {
        return Err(Error::VariableBoundExceeded {
            nvars: k,
            bound: COVER_ENUMERATION_BOUND,
        });
    }
    let mut covers: Vec<BTreeSet<usize>> = Vec::new();
    let mut masks: Vec<u64> = Vec::new();
    // by ascending popcount so kept covers are exactly the minimal ones
    let mut by_size: Vec<u64> = (0u64..(1 << k)).collect();
    by_size.sort_by_key(|m| (m.count_ones(), *m));
    'outer: for mask in by_size {
        for (s_i, s) in supports.iter().enumerate() {
            let _ = s_i;
            let hit = s.iter().any(|v| {
                let pos = used.iter().position(|u| u == v).unwrap();
                mask & (1 << pos) != 0
            });
            if !hit {
                continue 'outer;
            }
        }
        if masks.iter().any(|prev| prev & mask == *prev) {
            continue; // contains a smaller cover
        }
        masks.push(mask);
        let vars: BTreeSet<usize> = used
            .iter()
            .enumerate()
            .filter(|(pos, _)| mask & (1 << pos) != 0)
            .map(|(_, v)| *v)
            .collect();
        covers.push(vars);
    }
    covers.sort();
    Ok(covers
        .into_iter()
        .map(|vars| MonomialPrime::new(ring, vars))
        .collect())
}

/// Normal form with respect to a monomial generating set: drop every term
/// divisible by a generator.
fn monomial_normal_form(f: &Polynomial, mons: &[Monomial]) -> Result<Polynomial> {
    let raw: Vec<(Monomial, FpScalar)> = f
        .terms()
        .iter()
        .filter(|(m, _)| !mons.iter().any(|g| g.divides(m)))
        .cloned()
        .collect();
    Polynomial::from_terms(f.ring(), raw)
}

fn strip_leading(p: &Polynomial) -> Polynomial {
    Polynomial::from_terms(p.ring(), p.terms()[1..].to_vec()).expect("subset of canonical terms")
}

/// Full multivariate division: the remainder has no term divisible by any
/// basis leading monomial. Deterministic: divisors are tried in stored order.
fn reduce_full(f: &Polynomial, basis: &[Polynomial]) -> Result<Polynomial> {
    let ring = f.ring().clone();
    let mut work = f.clone();
    let mut remainder: Vec<(Monomial, FpScalar)> = Vec::new();
    'outer: while !work.is_zero() {
        let (lm, lc) = work.leading().unwrap().clone();
        for g in basis {
            if g.is_zero() {
                continue;
            }
            let (gm, gc) = g.leading().unwrap();
            if gm.divides(&lm) {
                let qm = gm.quotient_into(&lm);
                let qc = lc.mul(&gc.inv());
                work = work.sub(&g.mul_term(&qm, &qc)?)?;
                continue 'outer;
            }
        }
        remainder.push((lm, lc));
        work = strip_leading(&work);
    }
    Polynomial::from_terms(&ring, remainder)
}

/// Division by a single divisor tracking the quotient; errors if inexact.
fn exact_div(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    if g.is_zero() {
        return Err(Error::InvalidArgument("division by zero polynomial".into()));
    }
    let ring = f.ring().clone();
    let (gm, gc) = g.leading().unwrap().clone();
    let mut work = f.clone();
    let mut quotient: Vec<(Monomial, FpScalar)> = Vec::new();
    while !work.is_zero() {
        let (lm, lc) = work.leading().unwrap().clone();
        if !gm.divides(&lm) {
            return Err(Error::Internal(format!("inexact division of {f} by {g}")));
        }
        let qm = gm.quotient_into(&lm);
        let qc = lc.mul(&gc.inv());
        work = work.sub(&g.mul_term(&qm, &qc)?)?;
        quotient.push((qm, qc));
    }
    Polynomial::from_terms(&ring, quotient)
}

/// Buchberger's algorithm with the product and chain pair criteria, followed
/// by minimalization and full interreduction.
fn compute_reduced_basis(ring: &Arc<PolyRing>, gens: &[Polynomial]) -> Result<GroebnerBasis> {
    // monomial ideals short-circuit to their minimal monomial generators
    if gens.iter().all(|g| g.is_monomial()) {
        let mons = minimal_monomials(
            gens.iter()
                .map(|g| g.leading_monomial().unwrap().clone())
                .collect(),
        );
        let mut elements: Vec<Polynomial> =
            mons.into_iter().map(|m| monomial_poly(ring, m)).collect();
        elements.sort_by(|a, b| {
            ring.cmp_monomials(b.leading_monomial().unwrap(), a.leading_monomial().unwrap())
        });
        return Ok(GroebnerBasis { elements });
    }

    let mut basis: Vec<Polynomial> = Vec::new();
    for g in gens {
        let m = g.monic();
        if !basis.contains(&m) {
            basis.push(m);
        }
    }

    let mut pending: BTreeSet<(usize, usize)> = BTreeSet::new();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            pending.insert((i, j));
        }
    }

    while !pending.is_empty() {
        // normal selection: smallest lcm degree, then lcm, then indices
        let &(i, j) = pending
            .iter()
            .min_by(|&&(a, b), &&(c, d)| {
                let lab = basis[a]
                    .leading_monomial()
                    .unwrap()
                    .lcm(basis[b].leading_monomial().unwrap());
                let lcd = basis[c]
                    .leading_monomial()
                    .unwrap()
                    .lcm(basis[d].leading_monomial().unwrap());
                lab.degree()
                    .cmp(&lcd.degree())
                    .then_with(|| ring.cmp_monomials(&lab, &lcd))
                    .then_with(|| (a, b).cmp(&(c, d)))
            })
            .unwrap();
        pending.remove(&(i, j));

        let lm_i = basis[i].leading_monomial().unwrap().clone();
        let lm_j = basis[j].leading_monomial().unwrap().clone();
        if lm_i.coprime(&lm_j) {
            continue; // product criterion
        }
        let lcm = lm_i.lcm(&lm_j);
        // chain criterion: a third element divides the lcm and both side
        // pairs have already been treated
        let skip = basis.iter().enumerate().any(|(k, g)| {
            if k == i || k == j {
                return false;
            }
            let p1 = (i.min(k), i.max(k));
            let p2 = (j.min(k), j.max(k));
            g.leading_monomial().unwrap().divides(&lcm)
                && !pending.contains(&p1)
                && !pending.contains(&p2)
        });
        if skip {
            continue;
        }

        let one = FpScalar::one(ring.prime());
        let s_i = basis[i].mul_term(&lm_i.quotient_into(&lcm), &one)?;
        let s_j = basis[j].mul_term(&lm_j.quotient_into(&lcm), &one)?;
        let s = s_i.sub(&s_j)?;
        let r = reduce_full(&s, &basis)?;
        if !r.is_zero() {
            let new_index = basis.len();
            basis.push(r.monic());
            for t in 0..new_index {
                pending.insert((t, new_index));
            }
        }
    }

    // minimalize: keep only elements with divisibility-minimal leading terms
    basis.sort_by(|a, b| {
        ring.cmp_monomials(a.leading_monomial().unwrap(), b.leading_monomial().unwrap())
    });
    let mut minimal: Vec<Polynomial> = Vec::new();
    for g in basis {
        let lm = g.leading_monomial().unwrap();
        if !minimal
            .iter()
            .any(|h| h.leading_monomial().unwrap().divides(lm))
        {
            minimal.push(g);
        }
    }

    // interreduce to the unique reduced basis
    loop {
        let mut changed = false;
        for idx in 0..minimal.len() {
            let others: Vec<Polynomial> = minimal
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != idx)
                .map(|(_, h)| h.clone())
                .collect();
            let reduced = reduce_full(&minimal[idx], &others)?.monic();
            if reduced != minimal[idx] {
                minimal[idx] = reduced;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    minimal.retain(|g| !g.is_zero());
    minimal.sort_by(|a, b| {
        ring.cmp_monomials(b.leading_monomial().unwrap(), a.leading_monomial().unwrap())
    });
    Ok(GroebnerBasis { elements: minimal })
}

/// I cap J as the elimination of an auxiliary variable t from
/// t*I + (1-t)*J under a block order with t leading.
fn intersect_by_elimination(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    let ring = a.ring();
    let ext = extend_ring_front(ring)?;
    let t = ext.var_poly(0);
    let one_minus_t = ext.one_poly().sub(&t)?;
    let mut gens = Vec::new();
    for g in a.generators() {
        gens.push(t.mul(&lift_front(&ext, g)?)?);
    }
    for h in b.generators() {
        gens.push(one_minus_t.mul(&lift_front(&ext, h)?)?);
    }
    let ext_ideal = Ideal::new(&ext, gens)?;
    let basis = ext_ideal.groebner_basis()?;
    let mut result = Vec::new();
    for g in basis.elements() {
        if g.terms().iter().all(|(m, _)| m.exponents()[0] == 0) {
            result.push(drop_front(ring, g)?);
        }
    }
    Ideal::new(ring, result)
}

/// Ambient ring with one auxiliary variable prepended and a block order
/// eliminating it. Internal names cannot collide with parsed variables.
pub(crate) fn extend_ring_front(ring: &Arc<PolyRing>) -> Result<Arc<PolyRing>> {
    let mut vars: Vec<String> = Vec::with_capacity(ring.nvars() + 1);
    vars.push(String::from("#t"));
    vars.extend(ring.variables().iter().cloned());
    let refs: Vec<&str> = vars.iter().map(|s| s.as_str()).collect();
    PolyRing::new_internal(
        ring.prime(),
        &refs,
        TermOrder::Block { first: 1 },
        ring.degree_cap().saturating_mul(2).saturating_add(2),
    )
}

pub(crate) fn lift_front(ext: &Arc<PolyRing>, f: &Polynomial) -> Result<Polynomial> {
    let raw = f
        .terms()
        .iter()
        .map(|(m, c)| {
            let mut exps = Vec::with_capacity(m.exponents().len() + 1);
            exps.push(0);
            exps.extend_from_slice(m.exponents());
            (Monomial::new(exps), *c)
        })
        .collect();
    Polynomial::from_terms(ext, raw)
}

pub(crate) fn drop_front(ring: &Arc<PolyRing>, f: &Polynomial) -> Result<Polynomial> {
    let raw = f
        .terms()
        .iter()
        .map(|(m, c)| (Monomial::new(m.exponents()[1..].to_vec()), *c))
        .collect();
    Polynomial::from_terms(ring, raw)
}
