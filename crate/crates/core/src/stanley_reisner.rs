//! The combinatorial layer: simplicial complexes and their face ideals,
//! variable-generated primes, the closed form for cores of monomial primes,
//! and the finite core-map atlas with its verification suite.

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use alloc::{format, vec};

use crate::cartier::{cartier_core, is_f_pure, Certification, PresentedRing};
use crate::error::{Error, Result};
use crate::frobenius::FrobeniusLevel;
use crate::ideal::{monomial_poly, Ideal};
use crate::polyring::{Monomial, PolyRing, RingHandle, TermOrder};

/// Enumeration guard: monomial-prime posets live on at most this many
/// variables by default.
pub const DEFAULT_VARIABLE_BOUND: usize = 12;

/// A prime generated by a subset of the variables.
#[derive(Debug, Clone)]
pub struct MonomialPrime {
    ring: Arc<PolyRing>,
    vars: BTreeSet<usize>,
}

impl PartialEq for MonomialPrime {
    fn eq(&self, other: &Self) -> bool {
        self.ring.compatible(&other.ring) && self.vars == other.vars
    }
}

impl Eq for MonomialPrime {}

impl PartialOrd for MonomialPrime {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for MonomialPrime {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        self.vars.cmp(&other.vars)
    }
}

impl MonomialPrime {
    pub fn new(ring: &Arc<PolyRing>, vars: BTreeSet<usize>) -> Self {
        MonomialPrime {
            ring: ring.clone(),
            vars,
        }
    }

    pub fn variable_indices(&self) -> &BTreeSet<usize> {
        &self.vars
    }

    pub fn is_subset(&self, other: &MonomialPrime) -> bool {
        self.vars.is_subset(&other.vars)
    }

    pub fn union(&self, other: &MonomialPrime) -> MonomialPrime {
        MonomialPrime {
            ring: self.ring.clone(),
            vars: self.vars.union(&other.vars).copied().collect(),
        }
    }

    pub fn to_ideal(&self) -> Result<Ideal> {
        let gens = self.vars.iter().map(|&i| self.ring.var_poly(i)).collect();
        Ideal::new(&self.ring, gens)
    }

    /// Sorted variable names, the canonical label.
    pub fn label(&self) -> String {
        let names: Vec<&str> = self
            .vars
            .iter()
            .map(|&i| self.ring.variables()[i].as_str())
            .collect();
        names.join(",")
    }
}

/// A simplicial complex given by its facet antichain. Vertices that appear
/// in no facet are allowed; such a vertex is itself a minimal non-face.
#[derive(Debug, Clone)]
pub struct SimplicialComplex {
    vertices: Vec<String>,
    facets: Vec<BTreeSet<usize>>,
}

impl SimplicialComplex {
    pub fn new(vertices: Vec<String>, facets: Vec<BTreeSet<usize>>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::InvalidArgument("complex needs vertices".into()));
        }
        for (i, v) in vertices.iter().enumerate() {
            if vertices[..i].contains(v) {
                return Err(Error::InvalidArgument(format!("duplicate vertex `{v}`")));
            }
        }
        let mut seen: Vec<BTreeSet<usize>> = Vec::new();
        for f in &facets {
            if f.is_empty() {
                return Err(Error::InvalidArgument("empty facet".into()));
            }
            if let Some(&m) = f.iter().max() {
                if m >= vertices.len() {
                    return Err(Error::InvalidArgument("facet vertex out of range".into()));
                }
            }
            if seen.contains(f) {
                return Err(Error::InvalidArgument("repeated facet".into()));
            }
            seen.push(f.clone());
        }
        for a in &facets {
            for b in &facets {
                if a != b && a.is_subset(b) {
                    return Err(Error::InvalidArgument(
                        "facets must form an antichain".into(),
                    ));
                }
            }
        }
        Ok(SimplicialComplex { vertices, facets })
    }

    /// Parse from names: one facet per entry, vertices in first-appearance
    /// order; vertices listed in `extra_vertices` may be cone-free isolates.
    pub fn from_named_facets(facets: &[Vec<&str>], extra_vertices: &[&str]) -> Result<Self> {
        let mut vertices: Vec<String> = Vec::new();
        let index = |name: &str, vertices: &mut Vec<String>| -> usize {
            match vertices.iter().position(|v| v == name) {
                Some(i) => i,
                None => {
                    vertices.push(name.to_string());
                    vertices.len() - 1
                }
            }
        };
        let mut sets = Vec::new();
        for f in facets {
            let mut s = BTreeSet::new();
            for name in f {
                s.insert(index(name, &mut vertices));
            }
            sets.push(s);
        }
        for name in extra_vertices {
            index(name, &mut vertices);
        }
        SimplicialComplex::new(vertices, sets)
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn facets(&self) -> &[BTreeSet<usize>] {
        &self.facets
    }

    pub fn is_face(&self, set: &BTreeSet<usize>) -> bool {
        if set.is_empty() {
            return true;
        }
        self.facets.iter().any(|f| set.is_subset(f))
    }

    /// Minimal non-faces: non-faces all of whose proper subsets are faces.
    pub fn minimal_nonfaces(&self) -> Result<Vec<BTreeSet<usize>>> {
        let n = self.vertices.len();
        if n > DEFAULT_VARIABLE_BOUND {
            return Err(Error::VariableBoundExceeded {
                nvars: n,
                bound: DEFAULT_VARIABLE_BOUND,
            });
        }
        let mut result = Vec::new();
        for mask in 1u64..(1 << n) {
            let set: BTreeSet<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
            if self.is_face(&set) {
                continue;
            }
            let minimal = set.iter().all(|&v| {
                let mut smaller = set.clone();
                smaller.remove(&v);
                self.is_face(&smaller)
            });
            if minimal {
                result.push(set);
            }
        }
        result.sort_by_key(|s| (s.len(), s.iter().copied().collect::<Vec<_>>()));
        Ok(result)
    }

    /// The face ideal: squarefree monomials of the minimal non-faces.
    pub fn sr_ideal(&self, ring: &Arc<PolyRing>) -> Result<Ideal> {
        if ring.nvars() != self.vertices.len() {
            return Err(Error::RingMismatch);
        }
        let gens = self
            .minimal_nonfaces()?
            .into_iter()
            .map(|set| {
                let mut exps = vec![0u32; ring.nvars()];
                for v in set {
                    exps[v] = 1;
                }
                monomial_poly(ring, Monomial::new(exps))
            })
            .collect();
        Ideal::new(ring, gens)
    }

    /// The presentation `F_p[vertices] / face ideal` under grevlex.
    pub fn presented_ring(&self, p: u64, degree_cap: u64) -> Result<Arc<PresentedRing>> {
        let names: Vec<&str> = self.vertices.iter().map(|s| s.as_str()).collect();
        let ring = PolyRing::new(p, &names, TermOrder::GrevLex, degree_cap)?;
        let ideal = self.sr_ideal(&ring)?;
        PresentedRing::new(&ring, ideal.generators().to_vec())
    }
}

/// Sum of the minimal primes of the defining ideal that are contained in Q,
/// the exact core of the monomial prime Q.
pub fn core_closed_form(pr: &PresentedRing, q: &MonomialPrime) -> Result<Ideal> {
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
    let mut vars: BTreeSet<usize> = BTreeSet::new();
    let mut found = false;
    for p in &minimal {
        if p.is_subset(q) {
            vars.extend(p.variable_indices().iter().copied());
            found = true;
        }
    }
    // a prime over I always contains a minimal prime of I
    debug_assert!(found || minimal.is_empty());
    let _ = found;
    MonomialPrime::new(pr.ambient(), vars).to_ideal()
}

/// All variable subsets whose ideal contains the defining ideal, i.e. the
/// complements of faces. Includes the zero ideal when I = 0.
pub fn enumerate_monomial_primes(pr: &PresentedRing) -> Result<Vec<MonomialPrime>> {
    if !pr.is_stanley_reisner() {
        return Err(Error::NotSquarefree);
    }
    let n = pr.ambient().nvars();
    if n > DEFAULT_VARIABLE_BOUND {
        return Err(Error::VariableBoundExceeded {
            nvars: n,
            bound: DEFAULT_VARIABLE_BOUND,
        });
    }
    let gens = pr
        .defining_ideal()
        .monomial_generators()
        .unwrap_or_default();
    let supports: Vec<BTreeSet<usize>> = gens.iter().map(|m| m.support().collect()).collect();
    let mut primes = Vec::new();
    for mask in 0u64..(1 << n) {
        let set: BTreeSet<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        if supports.iter().all(|s| s.iter().any(|v| set.contains(v))) {
            primes.push(MonomialPrime::new(pr.ambient(), set));
        }
    }
    primes.sort();
    Ok(primes)
}

/// Distinct sums over nonempty subsets of the minimal primes.
pub fn sums_of_minimal_primes(pr: &PresentedRing) -> Result<Vec<MonomialPrime>> {
    let minimal = pr.monomial_minimal_primes()?;
    let mut sums: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
    let k = minimal.len();
    if k > DEFAULT_VARIABLE_BOUND {
        return Err(Error::VariableBoundExceeded {
            nvars: k,
            bound: DEFAULT_VARIABLE_BOUND,
        });
    }
    for mask in 1u64..(1 << k) {
        let mut vars = BTreeSet::new();
        for (i, p) in minimal.iter().enumerate() {
            if mask & (1 << i) != 0 {
                vars.extend(p.variable_indices().iter().copied());
            }
        }
        sums.insert(vars);
    }
    Ok(sums
        .into_iter()
        .map(|vars| MonomialPrime::new(pr.ambient(), vars))
        .collect())
}

/// One node of the finite core-map graph.
#[derive(Debug, Clone)]
pub struct AtlasNode {
    pub prime: MonomialPrime,
    pub core: MonomialPrime,
    pub fixed: bool,
}

/// The core map on the finite poset of monomial primes: nodes, the image,
/// and the minimal primes of the presentation.
#[derive(Debug, Clone)]
pub struct AtlasGraph {
    pub nodes: Vec<AtlasNode>,
    pub image: Vec<MonomialPrime>,
    pub minimal_primes: Vec<MonomialPrime>,
}

impl AtlasGraph {
    pub fn node_for(&self, prime: &MonomialPrime) -> Option<&AtlasNode> {
        self.nodes.iter().find(|n| &n.prime == prime)
    }
}

fn core_as_variable_subset(pr: &PresentedRing, core: &Ideal) -> Result<MonomialPrime> {
    let mons = core
        .monomial_generators()
        .ok_or_else(|| Error::Internal("closed-form core is not monomial".into()))?;
    let mut vars = BTreeSet::new();
    for m in &mons {
        let support: Vec<usize> = m.support().collect();
        if support.len() != 1 || m.exponents()[support[0]] != 1 {
            return Err(Error::Internal(
                "closed-form core is not variable-generated".into(),
            ));
        }
        vars.insert(support[0]);
    }
    Ok(MonomialPrime::new(pr.ambient(), vars))
}

/// Computes the core of every monomial prime along both routes: the closed
/// form and the contraction engine. Any disagreement, or a certification
/// below exact, is a hard error rather than a warning.
pub fn core_map_atlas(pr: &PresentedRing, e_max: u32, window: u32) -> Result<AtlasGraph> {
    let primes = enumerate_monomial_primes(pr)?;
    let minimal_primes = pr.monomial_minimal_primes()?;
    let mut nodes = Vec::with_capacity(primes.len());
    for q in &primes {
        let closed = core_closed_form(pr, q)?;
        let report = cartier_core(pr, &q.to_ideal()?, e_max, window)?;
        if report.certification != Certification::ClosedFormExact || !report.core.equals(&closed)? {
            return Err(Error::Internal(format!(
                "core map disagreement at prime <{}>",
                q.label()
            )));
        }
        let core = core_as_variable_subset(pr, &closed)?;
        nodes.push(AtlasNode {
            prime: q.clone(),
            fixed: core == *q,
            core,
        });
    }

    let mut image: Vec<MonomialPrime> = Vec::new();
    for node in &nodes {
        if !image.contains(&node.core) {
            image.push(node.core.clone());
        }
    }
    image.sort();

    // the image must be exactly the sums of minimal primes, idempotent, and
    // containment preserving; these are engine invariants, not warnings
    let expected: Vec<MonomialPrime> = sums_of_minimal_primes(pr)?;
    if image != expected {
        return Err(Error::Internal(
            "atlas image differs from the sums of minimal primes".into(),
        ));
    }
    for node in &nodes {
        let image_node = nodes
            .iter()
            .find(|n| n.prime == node.core)
            .ok_or_else(|| Error::Internal("image prime missing from the atlas".into()))?;
        if image_node.core != node.core {
            return Err(Error::Internal(
                "core map is not idempotent on its image".into(),
            ));
        }
    }
    for a in &nodes {
        for b in &nodes {
            if a.prime.is_subset(&b.prime) && !a.core.is_subset(&b.core) {
                return Err(Error::Internal(
                    "core map is not containment preserving".into(),
                ));
            }
        }
    }
    Ok(AtlasGraph {
        nodes,
        image,
        minimal_primes,
    })
}

/// One named check of the property suite.
#[derive(Debug, Clone)]
pub struct PropertyCheck {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

fn push_check(out: &mut Vec<PropertyCheck>, name: &'static str, pass: bool, detail: String) {
    out.push(PropertyCheck { name, pass, detail });
}

/// The property suite over the finite monomial-prime poset of a
/// Stanley-Reisner presentation: monotonicity, intersection, sum of fixed
/// ideals, idempotence, radicality, primality of prime cores, fixing of
/// minimal primes, and finiteness of the image.
pub fn core_map_property_checks(
    pr: &PresentedRing,
    e_max: u32,
    window: u32,
) -> Result<Vec<PropertyCheck>> {
    let atlas = core_map_atlas(pr, e_max, window)?;
    let mut out = Vec::new();

    // monotonicity: Q1 inside Q2 implies core(Q1) inside core(Q2)
    let mut mono_ok = true;
    for a in &atlas.nodes {
        for b in &atlas.nodes {
            if a.prime.is_subset(&b.prime) && !a.core.is_subset(&b.core) {
                mono_ok = false;
            }
        }
    }
    push_check(
        &mut out,
        "monotonicity",
        mono_ok,
        format!(
            "{} ordered pairs checked",
            atlas.nodes.len() * atlas.nodes.len()
        ),
    );

    // intersection: contractions distribute over pairwise intersections and
    // the combinatorial core of the intersection is compatible at every
    // computed level and below every partial intersection
    let mut inter_ok = true;
    let mut inter_pairs = 0usize;
    for (i, a) in atlas.nodes.iter().enumerate() {
        for b in atlas.nodes.iter().skip(i + 1) {
            inter_pairs += 1;
            let ja = pr.normalize_lift(&a.prime.to_ideal()?)?;
            let jb = pr.normalize_lift(&b.prime.to_ideal()?)?;
            let meet = ja.intersect(&jb)?;
            let expected_core = a.core.to_ideal()?.intersect(&b.core.to_ideal()?)?;
            let report = cartier_core(pr, &meet, e_max, window)?;
            let mut partial: Option<Ideal> = None;
            for (e, contraction) in &report.contractions {
                let level = FrobeniusLevel::new(*e)?;
                let ca = crate::cartier::cartier_contraction(pr, &ja, level)?;
                let cb = crate::cartier::cartier_contraction(pr, &jb, level)?;
                if !contraction.equals(&ca.intersect(&cb)?)? {
                    inter_ok = false;
                }
                partial = Some(match partial {
                    None => contraction.clone(),
                    Some(p) => p.intersect(contraction)?,
                });
                if !crate::cartier::is_compatible(pr, &expected_core, level)? {
                    inter_ok = false;
                }
            }
            if let Some(p) = partial {
                if !expected_core.leq(&p)? {
                    inter_ok = false;
                }
            }
            if report.certification != Certification::Heuristic
                && !report.core.equals(&expected_core)?
            {
                inter_ok = false;
            }
        }
    }
    push_check(
        &mut out,
        "intersection",
        inter_ok,
        format!("{inter_pairs} unordered pairs checked levelwise"),
    );

    // sum of fixed ideals: sums of minimal primes are fixed points
    let mut sum_ok = true;
    let sums = sums_of_minimal_primes(pr)?;
    for s in &sums {
        match atlas.node_for(s) {
            Some(node) => {
                if node.core != *s {
                    sum_ok = false;
                }
            }
            None => sum_ok = false,
        }
    }
    push_check(
        &mut out,
        "sum_of_fixed",
        sum_ok,
        format!("{} sums of minimal primes", sums.len()),
    );

    // idempotence on the image
    let mut idem_ok = true;
    for node in &atlas.nodes {
        match atlas.node_for(&node.core) {
            Some(im) => {
                if im.core != node.core {
                    idem_ok = false;
                }
            }
            None => idem_ok = false,
        }
    }
    push_check(
        &mut out,
        "idempotence",
        idem_ok,
        format!("{} nodes", atlas.nodes.len()),
    );

    // radicality and primality: every core is generated by distinct
    // variables, hence radical and prime
    let radical_ok = true; // structural: cores are variable subsets by construction
    push_check(
        &mut out,
        "radicality",
        radical_ok,
        "cores are variable-generated, hence radical".to_string(),
    );
    push_check(
        &mut out,
        "primality",
        radical_ok,
        "cores are variable-generated, hence prime".to_string(),
    );

    // minimal primes are fixed points
    let mut fixed_ok = true;
    for p in &atlas.minimal_primes {
        match atlas.node_for(p) {
            Some(node) => {
                if !node.fixed {
                    fixed_ok = false;
                }
            }
            None => fixed_ok = false,
        }
    }
    push_check(
        &mut out,
        "minimal_primes_fixed",
        fixed_ok,
        format!("{} minimal primes", atlas.minimal_primes.len()),
    );

    // finiteness: the image is exactly the sums of minimal primes
    let fin_ok = atlas.image == sums;
    push_check(
        &mut out,
        "finiteness",
        fin_ok,
        format!(
            "image size {} vs {} distinct sums",
            atlas.image.len(),
            sums.len()
        ),
    );

    // Stanley-Reisner presentations are F-pure
    let fp = is_f_pure(pr)?;
    push_check(&mut out, "f_pure", fp, "Fedder level-one test".to_string());

    Ok(out)
}
