//! Shared fixtures: ring builders, an independent brute-force membership
//! oracle over F_p, and corpus generators for complexes and hypersurfaces.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use fsplit_core::{
    FpScalar, Ideal, Monomial, PolyRing, Polynomial, PresentedRing, RingHandle, TermOrder,
};
use rand::Rng;

pub fn ring(p: u64, vars: &[&str], cap: u64) -> Arc<PolyRing> {
    PolyRing::new(p, vars, TermOrder::GrevLex, cap).unwrap()
}

pub fn presented(p: u64, vars: &[&str], gens: &[&str], cap: u64) -> Arc<PresentedRing> {
    let r = ring(p, vars, cap);
    let polys = gens.iter().map(|s| r.parse(s).unwrap()).collect();
    PresentedRing::new(&r, polys).unwrap()
}

pub fn ideal_in(r: &Arc<PolyRing>, gens: &[&str]) -> Ideal {
    Ideal::new(r, gens.iter().map(|s| r.parse(s).unwrap()).collect()).unwrap()
}

// ------------------------------------------------------------------
// Brute-force membership oracle: solve sum h_i g_i = f over F_p with
// deg h_i bounded, by Gaussian elimination on the coefficient matrix.
// Independent of the division/Groebner path it checks.
// ------------------------------------------------------------------

fn monomials_up_to(nvars: usize, max_deg: u64) -> Vec<Vec<u32>> {
    let mut out = vec![vec![0u32; nvars]];
    for _ in 0..max_deg {
        let mut next = BTreeSet::new();
        for m in &out {
            for v in 0..nvars {
                let mut m2 = m.clone();
                m2[v] += 1;
                next.insert(m2);
            }
        }
        out.extend(next);
    }
    let set: BTreeSet<Vec<u32>> = out.into_iter().collect();
    set.into_iter()
        .filter(|m| m.iter().map(|&e| e as u64).sum::<u64>() <= max_deg)
        .collect()
}

#[allow(clippy::needless_range_loop, clippy::manual_is_multiple_of)]
fn gauss_solvable(p: u64, mut rows: Vec<Vec<u64>>) -> bool {
    if rows.is_empty() {
        return true;
    }
    let ncols = rows[0].len(); // last column augmented
    let mut pivot_row = 0usize;
    for col in 0..ncols - 1 {
        let mut sel = None;
        for r in pivot_row..rows.len() {
            if rows[r][col] % p != 0 {
                sel = Some(r);
                break;
            }
        }
        let Some(sel) = sel else { continue };
        rows.swap(pivot_row, sel);
        let inv = mod_inv(rows[pivot_row][col], p);
        for c in col..ncols {
            rows[pivot_row][c] = rows[pivot_row][c] * inv % p;
        }
        for r in 0..rows.len() {
            if r != pivot_row && rows[r][col] % p != 0 {
                let factor = rows[r][col] % p;
                for c in col..ncols {
                    let sub = factor * rows[pivot_row][c] % p;
                    rows[r][c] = (rows[r][c] + p - sub) % p;
                }
            }
        }
        pivot_row += 1;
        if pivot_row == rows.len() {
            break;
        }
    }
    // consistent iff no row reads 0 = nonzero
    for r in &rows {
        if r[..r.len() - 1].iter().all(|&x| x % p == 0) && r[r.len() - 1] % p != 0 {
            return false;
        }
    }
    true
}

fn mod_inv(a: u64, p: u64) -> u64 {
    // Fermat
    let mut base = a % p;
    let mut exp = p - 2;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Membership witness search with multiplier degree bounded by `h_bound`.
pub fn brute_force_member(f: &Polynomial, gens: &[Polynomial], h_bound: u64) -> bool {
    let r = f.ring();
    let p = r.prime();
    if f.is_zero() {
        return true;
    }
    if gens.is_empty() {
        return false;
    }
    let mults = monomials_up_to(r.nvars(), h_bound);
    // one column per (generator, multiplier monomial)
    let mut columns: Vec<BTreeMap<Vec<u32>, u64>> = Vec::new();
    for g in gens {
        for m in &mults {
            let shifted = g
                .mul_term(&Monomial::new(m.clone()), &FpScalar::one(p))
                .unwrap();
            let mut col = BTreeMap::new();
            for (mm, c) in shifted.terms() {
                col.insert(mm.exponents().to_vec(), c.value());
            }
            columns.push(col);
        }
    }
    let mut row_index: BTreeMap<Vec<u32>, usize> = BTreeMap::new();
    for col in &columns {
        for key in col.keys() {
            let next = row_index.len();
            row_index.entry(key.clone()).or_insert(next);
        }
    }
    for (m, _) in f.terms() {
        let next = row_index.len();
        row_index.entry(m.exponents().to_vec()).or_insert(next);
    }
    let nrows = row_index.len();
    let ncols = columns.len();
    let mut rows = vec![vec![0u64; ncols + 1]; nrows];
    for (j, col) in columns.iter().enumerate() {
        for (key, val) in col {
            rows[row_index[key]][j] = *val;
        }
    }
    for (m, c) in f.terms() {
        rows[row_index[&m.exponents().to_vec()]][ncols] = c.value();
    }
    gauss_solvable(p, rows)
}

// ------------------------------------------------------------------
// Random generators (seeded by callers for determinism)
// ------------------------------------------------------------------

pub fn random_poly<R: Rng>(
    rng: &mut R,
    r: &Arc<PolyRing>,
    max_deg: u32,
    terms: usize,
) -> Polynomial {
    let n = r.nvars();
    let p = r.prime();
    let mut raw = Vec::new();
    for _ in 0..terms {
        let mut exps = vec![0u32; n];
        let mut left = max_deg;
        for e in exps.iter_mut() {
            let d = rng.gen_range(0..=left);
            *e = d;
            left -= d;
        }
        let c = rng.gen_range(0..p) as i128;
        raw.push((Monomial::new(exps), FpScalar::new(c, p)));
    }
    Polynomial::from_terms(r, raw).unwrap()
}

pub fn random_monomial_ideal<R: Rng>(
    rng: &mut R,
    r: &Arc<PolyRing>,
    max_exp: u32,
    count: usize,
) -> Ideal {
    let n = r.nvars();
    let mut gens = Vec::new();
    for _ in 0..count {
        let exps: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=max_exp)).collect();
        if exps.iter().all(|&e| e == 0) {
            continue;
        }
        let m = Polynomial::from_terms(r, vec![(Monomial::new(exps), FpScalar::one(r.prime()))])
            .unwrap();
        gens.push(m);
    }
    Ideal::new(r, gens).unwrap()
}

pub fn random_ideal<R: Rng>(
    rng: &mut R,
    r: &Arc<PolyRing>,
    max_deg: u32,
    max_gens: usize,
) -> Ideal {
    let count = rng.gen_range(1..=max_gens);
    let gens = (0..count)
        .map(|_| {
            let terms = rng.gen_range(1..=3);
            random_poly(rng, r, max_deg, terms)
        })
        .collect();
    Ideal::new(r, gens).unwrap()
}

// ------------------------------------------------------------------
// Complex corpus
// ------------------------------------------------------------------

type Facets = Vec<BTreeSet<usize>>;

fn is_antichain(sets: &[u32]) -> bool {
    for (i, a) in sets.iter().enumerate() {
        for (j, b) in sets.iter().enumerate() {
            if i != j && a & b == *a {
                return false;
            }
        }
    }
    true
}

fn covers_all(sets: &[u32], n: usize) -> bool {
    let mut union = 0u32;
    for s in sets {
        union |= s;
    }
    union == (1 << n) - 1
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 1 {
        return vec![vec![0]];
    }
    let mut out = Vec::new();
    for perm in permutations(n - 1) {
        for pos in 0..n {
            let mut next: Vec<usize> = perm
                .iter()
                .map(|&v| if v >= pos { v + 1 } else { v })
                .collect();
            next.insert(0, pos);
            // rotate so insertion builds all arrangements of [0, n)
            out.push(next);
        }
    }
    out
}

fn apply_perm(mask: u32, perm: &[usize]) -> u32 {
    let mut out = 0u32;
    for (from, &to) in perm.iter().enumerate() {
        if mask & (1 << from) != 0 {
            out |= 1 << to;
        }
    }
    out
}

fn canonical(masks: &[u32], n: usize) -> Vec<u32> {
    let mut best: Option<Vec<u32>> = None;
    for perm in permutations(n) {
        let mut mapped: Vec<u32> = masks.iter().map(|&m| apply_perm(m, &perm)).collect();
        mapped.sort_unstable();
        if best.as_ref().is_none_or(|b| &mapped < b) {
            best = Some(mapped);
        }
    }
    best.unwrap()
}

/// Every simplicial complex on exactly n vertices (each vertex a face),
/// up to isomorphism, as facet lists.
pub fn complexes_up_to_iso(n: usize) -> Vec<Facets> {
    assert!(n <= 4, "exhaustive enumeration kept to four vertices");
    let nonempty: Vec<u32> = (1u32..(1 << n)).collect();
    let mut seen: BTreeSet<Vec<u32>> = BTreeSet::new();
    let mut out: Vec<Facets> = Vec::new();
    for family_mask in 1u64..(1 << nonempty.len()) {
        let sets: Vec<u32> = nonempty
            .iter()
            .enumerate()
            .filter(|(i, _)| family_mask & (1 << i) != 0)
            .map(|(_, &s)| s)
            .collect();
        if !is_antichain(&sets) || !covers_all(&sets, n) {
            continue;
        }
        let canon = canonical(&sets, n);
        if seen.insert(canon) {
            out.push(
                sets.iter()
                    .map(|&m| (0..n).filter(|i| m & (1 << i) != 0).collect())
                    .collect(),
            );
        }
    }
    out
}

/// A random facet antichain covering n vertices.
pub fn random_complex<R: Rng>(rng: &mut R, n: usize) -> Facets {
    let count = rng.gen_range(1..=n + 1);
    let mut masks: Vec<u32> = (0..count).map(|_| rng.gen_range(1u32..(1 << n))).collect();
    masks.sort_unstable();
    masks.dedup();
    // maximal members only, then cover leftover vertices with singletons
    let mut maximal: Vec<u32> = masks
        .iter()
        .copied()
        .filter(|&m| !masks.iter().any(|&o| o != m && m & o == m))
        .collect();
    let union: u32 = maximal.iter().fold(0, |acc, s| acc | s);
    for v in 0..n {
        if union & (1 << v) == 0 {
            maximal.push(1 << v);
        }
    }
    assert!(is_antichain(&maximal) && covers_all(&maximal, n));
    maximal
        .iter()
        .map(|&m| (0..n).filter(|i| m & (1 << i) != 0).collect())
        .collect()
}

pub fn complex_ring(p: u64, facets: &Facets, nvars: usize, cap: u64) -> Arc<PresentedRing> {
    let names: Vec<String> = (0..nvars).map(|i| format!("x{i}")).collect();
    let named: Vec<Vec<&str>> = facets
        .iter()
        .map(|f| f.iter().map(|&v| names[v].as_str()).collect())
        .collect();
    let extra: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let complex = fsplit_core::SimplicialComplex::from_named_facets(&named, &extra).unwrap();
    complex.presented_ring(p, cap).unwrap()
}

/// Exponent-counting oracle for the diagonal cubic x^3 + y^3 + z^3:
/// F-purity holds iff some split of p-1 = i+j+k keeps every exponent 3i,
/// 3j, 3k below p with multinomial coefficient (p-1)!/(i!j!k!) nonzero
/// mod p. Independent of the polynomial engine.
pub fn diagonal_cubic_f_pure_oracle(p: u64) -> bool {
    let n = (p - 1) as usize;
    let mut factorial = vec![1u128; n + 1];
    for i in 1..=n {
        factorial[i] = factorial[i - 1] * i as u128;
    }
    for i in 0..=n {
        for j in 0..=(n - i) {
            let k = n - i - j;
            if 3 * i as u64 >= p || 3 * j as u64 >= p || 3 * k as u64 >= p {
                continue;
            }
            let multinomial = factorial[n] / (factorial[i] * factorial[j] * factorial[k]);
            if !multinomial.is_multiple_of(p as u128) {
                return true;
            }
        }
    }
    false
}

/// Hypersurface corpus: small defining polynomials on up to three
/// variables at the corpus primes.
pub fn hypersurface_corpus() -> Vec<(u64, Vec<&'static str>, &'static str)> {
    vec![
        (2, vec!["x", "y"], "x*y"),
        (3, vec!["x", "y"], "x*y"),
        (5, vec!["x", "y"], "x*y"),
        (2, vec!["x"], "x^2"),
        (3, vec!["x"], "x^2"),
        (5, vec!["x"], "x^2"),
        (3, vec!["x", "y", "z"], "x*y - z^2"),
        (5, vec!["x", "y", "z"], "x*y - z^2"),
        (2, vec!["x", "y", "z"], "x^3 + y^3 + z^3"),
        (5, vec!["x", "y", "z"], "x^3 + y^3 + z^3"),
        (3, vec!["x", "y", "z"], "x*y*z"),
        (2, vec!["x", "y", "z"], "x*y + z^2"),
    ]
}
