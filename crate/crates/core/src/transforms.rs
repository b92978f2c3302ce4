//! Structure-compatibility transforms: homogenization and dehomogenization,
//! adjoining a variable, and restriction to the minimal primes contained in
//! a monomial prime. Each carries its commutation law as a checkable
//! contract against the contraction engine.

use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use alloc::{format, vec};

use crate::cartier::{cartier_core, PresentedRing};
use crate::error::{Error, Result};
use crate::frobenius::FrobeniusLevel;
use crate::ideal::Ideal;
use crate::polyring::{FpScalar, Monomial, PolyRing, Polynomial, RingHandle, TermOrder};

/// Source ring S and target `S[t]` with the homogenizing variable appended
/// last; standard grading with every variable in degree one.
#[derive(Debug, Clone)]
pub struct HomogenizationContext {
    source: Arc<PolyRing>,
    target: Arc<PolyRing>,
}

fn fresh_name(taken: &[String], stem: &str) -> String {
    if !taken.iter().any(|v| v == stem) {
        return stem.to_string();
    }
    let mut i = 0usize;
    loop {
        let name = format!("{stem}{i}");
        if !taken.iter().any(|v| v == &name) {
            return name;
        }
        i += 1;
    }
}

/// Builds the homogenization target by appending a fresh degree variable.
/// The source must carry the graded reverse-lex order so that homogenizing
/// a reduced basis generates the homogenized ideal.
pub fn homogenization_context(source: &Arc<PolyRing>) -> Result<HomogenizationContext> {
    if source.order() != TermOrder::GrevLex {
        return Err(Error::InvalidArgument(
            "homogenization needs a graded term order".into(),
        ));
    }
    let hname = fresh_name(source.variables(), "t");
    let mut names: Vec<&str> = source.variables().iter().map(|s| s.as_str()).collect();
    let owned = hname.clone();
    names.push(owned.as_str());
    let target = PolyRing::new(
        source.prime(),
        &names,
        TermOrder::GrevLex,
        source.degree_cap(),
    )?;
    Ok(HomogenizationContext {
        source: source.clone(),
        target,
    })
}

impl HomogenizationContext {
    pub fn source(&self) -> &Arc<PolyRing> {
        &self.source
    }

    pub fn target(&self) -> &Arc<PolyRing> {
        &self.target
    }
}

/// f^h = t^(deg f) f(x/t): pad each term with the degree defect.
pub fn homogenize_polynomial(ctx: &HomogenizationContext, f: &Polynomial) -> Result<Polynomial> {
    if !f.ring().compatible(&ctx.source) {
        return Err(Error::RingMismatch);
    }
    let deg = match f.total_degree() {
        None => return Polynomial::from_terms(&ctx.target, vec![]),
        Some(d) => d,
    };
    let raw = f
        .terms()
        .iter()
        .map(|(m, c)| {
            let mut exps = m.exponents().to_vec();
            exps.push((deg - m.degree()) as u32);
            (Monomial::new(exps), *c)
        })
        .collect();
    Polynomial::from_terms(&ctx.target, raw)
}

/// J^h generated by homogenizing a reduced basis; homogenizing an arbitrary
/// generating set can fail to generate the full homogenization.
pub fn homogenize_ideal(ctx: &HomogenizationContext, j: &Ideal) -> Result<Ideal> {
    if !j.ring().compatible(&ctx.source) {
        return Err(Error::RingMismatch);
    }
    let basis = j.groebner_basis()?;
    let gens = basis
        .elements()
        .iter()
        .map(|g| homogenize_polynomial(ctx, g))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(&ctx.target, gens)
}

/// The dehomogenization t -> 1.
pub fn dehomogenize_ideal(ctx: &HomogenizationContext, k: &Ideal) -> Result<Ideal> {
    if !k.ring().compatible(&ctx.target) {
        return Err(Error::RingMismatch);
    }
    let n = ctx.source.nvars();
    let gens = k
        .generators()
        .iter()
        .map(|g| {
            let raw: Vec<(Monomial, FpScalar)> = g
                .terms()
                .iter()
                .map(|(m, c)| (Monomial::new(m.exponents()[..n].to_vec()), *c))
                .collect();
            Polynomial::from_terms(&ctx.source, raw)
        })
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(&ctx.source, gens)
}

/// The presentation `S[t]/I^h`. A homogeneous defining ideal extends as is.
pub fn homogenize_presented(
    ctx: &HomogenizationContext,
    pr: &PresentedRing,
) -> Result<Arc<PresentedRing>> {
    if !pr.ambient().compatible(&ctx.source) {
        return Err(Error::RingMismatch);
    }
    let gens = if pr.is_graded() {
        pr.defining_ideal()
            .generators()
            .iter()
            .map(|g| extend_polynomial(&ctx.target, g))
            .collect::<Result<Vec<_>>>()?
    } else {
        homogenize_ideal(ctx, pr.defining_ideal())?
            .generators()
            .to_vec()
    };
    PresentedRing::new(&ctx.target, gens)
}

/// Levelwise commutation of the contraction with homogenization:
/// (A_e(J))^h = A_e(J^h) for every e up to e_max, together with the
/// dehomogenization round trip. Exact at every level; no stabilization is
/// involved.
pub fn homogenization_core_check(pr: &PresentedRing, j: &Ideal, e_max: u32) -> Result<bool> {
    let ctx = homogenization_context(pr.ambient())?;
    let ext = homogenize_presented(&ctx, pr)?;
    let jn = pr.normalize_lift(j)?;
    let jh = homogenize_ideal(&ctx, &jn)?;

    if !dehomogenize_ideal(&ctx, &jh)?.equals(&jn)? {
        return Ok(false);
    }

    let mut partial_src: Option<Ideal> = None;
    let mut partial_tgt: Option<Ideal> = None;
    for e in 1..=e_max {
        let level = FrobeniusLevel::new(e)?;
        let a_src = crate::cartier::cartier_contraction(pr, &jn, level)?;
        let a_tgt = crate::cartier::cartier_contraction(&ext, &jh, level)?;
        if !homogenize_ideal(&ctx, &a_src)?.equals(&a_tgt)? {
            return Ok(false);
        }
        partial_src = Some(match partial_src {
            None => a_src.clone(),
            Some(p) => p.intersect(&a_src)?,
        });
        partial_tgt = Some(match partial_tgt {
            None => a_tgt.clone(),
            Some(p) => p.intersect(&a_tgt)?,
        });
    }
    let bs = partial_src.expect("e_max >= 1");
    let bt = partial_tgt.expect("e_max >= 1");
    homogenize_ideal(&ctx, &bs)?.equals(&bt)
}

fn extend_polynomial(target: &Arc<PolyRing>, f: &Polynomial) -> Result<Polynomial> {
    let extra = target.nvars() - f.ring().nvars();
    let raw = f
        .terms()
        .iter()
        .map(|(m, c)| {
            let mut exps = m.exponents().to_vec();
            exps.extend(core::iter::repeat_n(0, extra));
            (Monomial::new(exps), *c)
        })
        .collect();
    Polynomial::from_terms(target, raw)
}

/// The presentation `R[x] = S[x]/IS[x]` with a fresh variable appended.
pub fn adjoin_variable(pr: &PresentedRing, name: &str) -> Result<Arc<PresentedRing>> {
    let source = pr.ambient();
    if source.variable_index(name).is_some() {
        return Err(Error::InvalidArgument(format!(
            "variable `{name}` already declared"
        )));
    }
    let mut names: Vec<&str> = source.variables().iter().map(|s| s.as_str()).collect();
    names.push(name);
    let target = PolyRing::new(source.prime(), &names, source.order(), source.degree_cap())?;
    let gens = pr
        .defining_ideal()
        .generators()
        .iter()
        .map(|g| extend_polynomial(&target, g))
        .collect::<Result<Vec<_>>>()?;
    PresentedRing::new(&target, gens)
}

/// Extension of an ideal along an appended-variables ring map.
pub fn extend_ideal(j: &Ideal, target: &Arc<PolyRing>) -> Result<Ideal> {
    let source = j.ring();
    if target.nvars() < source.nvars()
        || target.variables()[..source.nvars()] != *source.variables()
        || target.prime() != source.prime()
    {
        return Err(Error::RingMismatch);
    }
    let gens = j
        .generators()
        .iter()
        .map(|g| extend_polynomial(target, g))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(target, gens)
}

/// Contract an ideal of `S[x]` back to S by eliminating the last variable.
pub fn contract_last_variable(k: &Ideal, source: &Arc<PolyRing>) -> Result<Ideal> {
    let ext = k.ring();
    let n = ext.nvars();
    if source.nvars() + 1 != n || ext.variables()[..n - 1] != *source.variables() {
        return Err(Error::RingMismatch);
    }
    // rotate the last variable to the front and eliminate it with a block order
    let mut names: Vec<&str> = Vec::with_capacity(n);
    names.push(ext.variables()[n - 1].as_str());
    for v in &ext.variables()[..n - 1] {
        names.push(v.as_str());
    }
    let elim = PolyRing::new_internal(
        ext.prime(),
        &names,
        TermOrder::Block { first: 1 },
        ext.degree_cap().saturating_mul(2).saturating_add(2),
    )?;
    let rotated = k
        .generators()
        .iter()
        .map(|g| {
            let raw: Vec<(Monomial, FpScalar)> = g
                .terms()
                .iter()
                .map(|(m, c)| {
                    let e = m.exponents();
                    let mut exps = Vec::with_capacity(n);
                    exps.push(e[n - 1]);
                    exps.extend_from_slice(&e[..n - 1]);
                    (Monomial::new(exps), *c)
                })
                .collect();
            Polynomial::from_terms(&elim, raw)
        })
        .collect::<Result<Vec<_>>>()?;
    let elim_ideal = Ideal::new(&elim, rotated)?;
    let basis = elim_ideal.groebner_basis()?;
    let mut gens = Vec::new();
    for g in basis.elements() {
        if g.terms().iter().all(|(m, _)| m.exponents()[0] == 0) {
            let raw: Vec<(Monomial, FpScalar)> = g
                .terms()
                .iter()
                .map(|(m, c)| (Monomial::new(m.exponents()[1..].to_vec()), *c))
                .collect();
            gens.push(Polynomial::from_terms(source, raw)?);
        }
    }
    Ideal::new(source, gens)
}

/// Verifies the two adjoin-a-variable identities for a sandwiched ideal
/// `JR[x] <= J' <= JR[x] + <x>`: the extension of core(J) equals core(J') and
/// core(J') contracts back to core(J). Cores come from the certified core
/// engine, so the check is exact whenever both reports are certified.
pub fn adjoin_variable_core_check(
    pr: &PresentedRing,
    j: &Ideal,
    ext_pr: &PresentedRing,
    j_ext: &Ideal,
    e_max: u32,
    window: u32,
) -> Result<bool> {
    let source = pr.ambient();
    let target = ext_pr.ambient();
    if target.nvars() != source.nvars() + 1
        || target.variables()[..source.nvars()] != *source.variables()
    {
        return Err(Error::RingMismatch);
    }
    let jn = pr.normalize_lift(j)?;
    let low = ext_pr.normalize_lift(&extend_ideal(&jn, target)?)?;
    let x_last = target.var_poly(target.nvars() - 1);
    let high = low.sum(&Ideal::new(target, vec![x_last])?)?;
    let mid = ext_pr.normalize_lift(j_ext)?;
    if !low.leq(&mid)? || !mid.leq(&high)? {
        return Err(Error::InvalidArgument(
            "ideal violates the JR[x] <= J' <= JR[x] + <x> sandwich".into(),
        ));
    }

    let rep = cartier_core(pr, &jn, e_max, window)?;
    let rep_ext = cartier_core(ext_pr, &mid, e_max, window)?;
    let extended = ext_pr.normalize_lift(&extend_ideal(&rep.core, target)?)?;
    if !extended.equals(&rep_ext.core)? {
        return Ok(false);
    }
    let contracted = contract_last_variable(&rep_ext.core, source)?;
    contracted.equals(&rep.core)
}

/// Replaces the defining ideal by the intersection of its minimal primes
/// contained in Q. The lifted cores of Q over the two presentations agree.
pub fn restrict_to_contained_minimal_primes(
    pr: &PresentedRing,
    q: &crate::stanley_reisner::MonomialPrime,
) -> Result<Arc<PresentedRing>> {
    if !pr.is_stanley_reisner() {
        return Err(Error::NotSquarefree);
    }
    let q_ideal = q.to_ideal()?;
    if !pr.defining_ideal().leq(&q_ideal)? {
        return Err(Error::InvalidArgument(
            "prime does not contain the defining ideal".into(),
        ));
    }
    let minimal = pr.monomial_minimal_primes()?;
    let contained: Vec<_> = minimal.iter().filter(|p| p.is_subset(q)).collect();
    // a prime over the defining ideal always contains a minimal prime
    debug_assert!(!contained.is_empty() || minimal.is_empty());
    let mut meet: Option<Ideal> = None;
    for p in contained {
        let pi = p.to_ideal()?;
        meet = Some(match meet {
            None => pi,
            Some(m) => m.intersect(&pi)?,
        });
    }
    let restricted = meet.unwrap_or_else(|| Ideal::zero(pr.ambient()));
    PresentedRing::new(pr.ambient(), restricted.generators().to_vec())
}
