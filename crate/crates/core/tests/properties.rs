//! Property suites: canonical-form round trips, Frobenius identities,
//! colon/intersection duality, bracket-power flatness, the root/power
//! adjunction, and the behavior of cores over the corpus presentations.

mod common;

use std::sync::Arc;

use common::*;
use fsplit_core::{
    bracket_power, cartier_contraction, cartier_core, frobenius_root, is_f_pure, Certification,
    FrobeniusLevel, Ideal, PolyRing, Polynomial, RingHandle,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn lv(e: u32) -> FrobeniusLevel {
    FrobeniusLevel::new(e).unwrap()
}

fn arb_poly(
    p: u64,
    nvars: usize,
    max_deg: u32,
) -> impl Strategy<Value = (Arc<PolyRing>, Polynomial)> {
    let names: Vec<&'static str> = ["x", "y", "z", "w"][..nvars].to_vec();
    let term = (proptest::collection::vec(0..=max_deg, nvars), 0..p);
    proptest::collection::vec(term, 0..5).prop_map(move |terms| {
        let r = ring(p, &names, 512);
        let raw = terms
            .into_iter()
            .filter(|(exps, _)| exps.iter().map(|&e| e as u64).sum::<u64>() <= max_deg as u64)
            .map(|(exps, c)| {
                (
                    fsplit_core::Monomial::new(exps),
                    fsplit_core::FpScalar::new(c as i128, p),
                )
            })
            .collect();
        let f = Polynomial::from_terms(&r, raw).unwrap();
        (r, f)
    })
}

proptest! {
    #[test]
    fn printed_form_reparses_exactly((r, f) in arb_poly(5, 3, 6)) {
        let printed = f.to_string();
        let back = r.parse(&printed).unwrap();
        prop_assert_eq!(f, back);
    }

    #[test]
    fn frobenius_is_additive((r, f) in arb_poly(3, 3, 5), (_r2, g) in arb_poly(3, 3, 5)) {
        let g = Polynomial::from_terms(&r, g.terms().to_vec()).unwrap();
        for e in 1..=2u32 {
            let lhs = f.add(&g).unwrap().frobenius_pow(e).unwrap();
            let rhs = f.frobenius_pow(e).unwrap().add(&g.frobenius_pow(e).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn frobenius_power_equals_repeated_multiplication() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for p in [2u64, 3, 5] {
        let r = ring(p, &["x", "y"], 2048);
        for _ in 0..10 {
            let f = random_poly(&mut rng, &r, 6, 4);
            for e in 1..=2u32 {
                let q = p.pow(e) as u32;
                assert_eq!(
                    f.frobenius_pow(e).unwrap(),
                    f.pow(q).unwrap(),
                    "p={p} e={e}"
                );
            }
        }
    }
}

#[test]
fn colon_and_intersection_duality() {
    let mut rng = ChaCha8Rng::seed_from_u64(37);
    for p in [2u64, 3] {
        let r = ring(p, &["x", "y", "z"], 512);
        for _ in 0..15 {
            let a = random_ideal(&mut rng, &r, 3, 2);
            let b = random_ideal(&mut rng, &r, 2, 2);
            if b.is_zero_ideal() {
                continue;
            }
            let meet = a.intersect(&b).unwrap();
            assert!(meet.leq(&a).unwrap());
            assert!(meet.leq(&b).unwrap());
            let colon = a.colon(&b).unwrap();
            assert!(colon.multiply(&b).unwrap().leq(&a).unwrap());
        }
    }
}

#[test]
fn monomial_fast_paths_agree_with_disguised_generators() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    let r = ring(3, &["x", "y", "z"], 512);
    for _ in 0..20 {
        let a = random_monomial_ideal(&mut rng, &r, 3, 3);
        let b = random_monomial_ideal(&mut rng, &r, 3, 2);
        if a.is_zero_ideal() || b.is_zero_ideal() {
            continue;
        }
        // disguise a by mixing generators so the generic route runs
        let mixed = {
            let gens = a.generators();
            let mut new_gens: Vec<Polynomial> = gens.to_vec();
            if gens.len() >= 2 {
                new_gens[0] = gens[0].add(&gens[1]).unwrap();
                new_gens.push(gens[0].clone());
            }
            Ideal::new(&r, new_gens).unwrap()
        };
        assert!(mixed.equals(&a).unwrap());
        assert!(a
            .intersect(&b)
            .unwrap()
            .equals(&mixed.intersect(&b).unwrap())
            .unwrap());
        assert!(a
            .colon(&b)
            .unwrap()
            .equals(&mixed.colon(&b).unwrap())
            .unwrap());
    }
}

#[test]
fn bracket_power_flatness_identities() {
    let mut rng = ChaCha8Rng::seed_from_u64(53);
    for p in [2u64, 3] {
        let r = ring(p, &["x", "y", "z"], 512);
        for round in 0..20 {
            let (a, b) = if round % 2 == 0 {
                (
                    random_monomial_ideal(&mut rng, &r, 4, 3),
                    random_monomial_ideal(&mut rng, &r, 4, 2),
                )
            } else {
                (
                    random_ideal(&mut rng, &r, 2, 2),
                    random_ideal(&mut rng, &r, 2, 2),
                )
            };
            if a.is_zero_ideal() || b.is_zero_ideal() {
                continue;
            }
            let level = lv(1);
            let meet = bracket_power(&a.intersect(&b).unwrap(), level).unwrap();
            let meet2 = bracket_power(&a, level)
                .unwrap()
                .intersect(&bracket_power(&b, level).unwrap())
                .unwrap();
            assert!(meet.equals(&meet2).unwrap());

            let colon = bracket_power(&a.colon(&b).unwrap(), level).unwrap();
            let colon2 = bracket_power(&a, level)
                .unwrap()
                .colon(&bracket_power(&b, level).unwrap())
                .unwrap();
            assert!(colon.equals(&colon2).unwrap());
        }
    }
}

#[test]
fn root_bracket_adjunction_randomized() {
    let mut rng = ChaCha8Rng::seed_from_u64(67);
    for (p, e) in [(2u64, 1u32), (3, 1), (2, 2)] {
        let r = ring(p, &["x", "y", "z"], 512);
        for _ in 0..25 {
            let k = random_monomial_ideal(&mut rng, &r, 6, 3);
            let l = random_monomial_ideal(&mut rng, &r, 6, 3);
            if k.is_zero_ideal() || l.is_zero_ideal() {
                continue;
            }
            let lhs = k.leq(&bracket_power(&l, lv(e)).unwrap()).unwrap();
            let rhs = frobenius_root(&k, lv(e)).unwrap().leq(&l).unwrap();
            assert_eq!(lhs, rhs);
            // section of the adjunction over the regular ambient ring
            let back = frobenius_root(&bracket_power(&k, lv(e)).unwrap(), lv(e)).unwrap();
            assert!(back.equals(&k).unwrap());
        }
    }
}

#[test]
fn quadric_contractions_satisfy_universal_property() {
    // the quadric cone's contractions drive the strong F-regularity
    // classification, so pin them independently: h lies in
    // m^[q] : f^(q-1) iff h*f^(q-1) lies in the monomial ideal m^[q],
    // whose membership is exact termwise divisibility
    let mut rng = ChaCha8Rng::seed_from_u64(139);
    let pr = presented(3, &["x", "y", "z"], &["x*y - z^2"], 4096);
    let f = pr.parse("x*y - z^2").unwrap();
    let m = pr.irrelevant_maximal_ideal();
    for e in 1..=2u32 {
        let level = lv(e);
        let q = 3u64.pow(e);
        let contraction = cartier_contraction(&pr, &m, level).unwrap();
        let bracket = bracket_power(&m, level).unwrap();
        let multiplier = f.pow((q - 1) as u32).unwrap();
        let mut samples: Vec<Polynomial> = contraction.generators().to_vec();
        for _ in 0..20 {
            samples.push(random_poly(&mut rng, pr.ambient(), 4, 3));
        }
        for h in samples {
            let lhs = contraction.contains(&h).unwrap();
            let rhs = bracket.contains(&h.mul(&multiplier).unwrap()).unwrap();
            assert_eq!(lhs, rhs, "e={e} h={h}");
        }
        // the defining polynomial is always compatible at every level
        assert!(contraction.contains(&f).unwrap());
    }
}

#[test]
fn reduced_bases_are_canonical_under_generator_shuffles() {
    use rand::seq::SliceRandom;
    let mut rng = ChaCha8Rng::seed_from_u64(149);
    for p in [2u64, 3] {
        let r = ring(p, &["x", "y", "z"], 512);
        for _ in 0..10 {
            let ideal = random_ideal(&mut rng, &r, 3, 3);
            let reference = ideal.printed_basis().unwrap();
            for _ in 0..3 {
                let mut gens = ideal.generators().to_vec();
                gens.shuffle(&mut rng);
                let shuffled = Ideal::new(&r, gens).unwrap();
                assert_eq!(shuffled.printed_basis().unwrap(), reference);
            }
        }
    }
}

#[test]
fn f_pure_contractions_stay_inside_the_ideal() {
    // over an F-pure presentation every level contraction of J sits inside J
    for (p, vars, f) in hypersurface_corpus() {
        let pr = presented(p, &vars, &[f], 4096);
        if !is_f_pure(&pr).unwrap() {
            continue;
        }
        let m = pr.irrelevant_maximal_ideal();
        let jn = pr.normalize_lift(&m).unwrap();
        for e in 1..=2u32 {
            let a = cartier_contraction(&pr, &jn, lv(e)).unwrap();
            assert!(a.leq(&jn).unwrap(), "p={p} f={f} e={e}");
        }
    }
}

#[test]
fn certified_cores_are_radical_on_sampled_elements() {
    let mut rng = ChaCha8Rng::seed_from_u64(71);
    for (p, vars, f) in hypersurface_corpus() {
        let pr = presented(p, &vars, &[f], 4096);
        // only monomial presentations certify their cores at finite level;
        // the rest would be discarded below after an expensive computation
        if !pr.is_stanley_reisner() || !is_f_pure(&pr).unwrap() {
            continue;
        }
        let m = pr.irrelevant_maximal_ideal();
        let report = cartier_core(&pr, &m, 3, 1).unwrap();
        if report.certification == Certification::Heuristic {
            continue;
        }
        // sampled radicality: g^p in the core forces g into the core
        for _ in 0..5 {
            let g = random_poly(&mut rng, pr.ambient(), 2, 2);
            let gp = match g.frobenius_pow(1) {
                Ok(v) => v,
                Err(_) => continue,
            };
            if report.core.contains(&gp).unwrap() {
                assert!(report.core.contains(&g).unwrap(), "p={p} f={f} g={g}");
            }
        }
    }
}

#[test]
fn stanley_reisner_rings_are_f_pure_and_atlases_verify() {
    let mut rng = ChaCha8Rng::seed_from_u64(83);
    for n in 1..=3usize {
        for facets in complexes_up_to_iso(n) {
            for p in [2u64, 3] {
                let pr = complex_ring(p, &facets, n, 4096);
                assert!(is_f_pure(&pr).unwrap());
                let atlas = fsplit_core::core_map_atlas(&pr, 3, 1).unwrap();
                assert_eq!(
                    atlas.image.len(),
                    fsplit_core::sums_of_minimal_primes(&pr).unwrap().len()
                );
            }
        }
    }
    // a few random complexes on four vertices
    for _ in 0..5 {
        let facets = random_complex(&mut rng, 4);
        let pr = complex_ring(3, &facets, 4, 4096);
        assert!(is_f_pure(&pr).unwrap());
        fsplit_core::core_map_atlas(&pr, 3, 1).unwrap();
    }
}

#[test]
fn colon_satisfies_its_universal_property() {
    // with A monomial, membership in A is exact termwise divisibility, so
    // sampling h against the definition h in (A : g) iff h*g in A validates
    // the elimination-based colon independently
    let mut rng = ChaCha8Rng::seed_from_u64(131);
    for p in [2u64, 3] {
        let r = ring(p, &["x", "y", "z"], 512);
        for _ in 0..10 {
            let a = random_monomial_ideal(&mut rng, &r, 4, 3);
            if a.is_zero_ideal() {
                continue;
            }
            let g = random_poly(&mut rng, &r, 3, 3);
            if g.is_zero() {
                continue;
            }
            let divisor = Ideal::new(&r, vec![g.clone()]).unwrap();
            let colon = a.colon(&divisor).unwrap();
            for _ in 0..12 {
                let h = random_poly(&mut rng, &r, 3, 3);
                let in_colon = colon.contains(&h).unwrap();
                let defining = a.contains(&h.mul(&g).unwrap()).unwrap();
                assert_eq!(in_colon, defining, "p={p} A={a:?} g={g} h={h}");
            }
        }
    }
}

#[test]
fn homogenization_interchange_laws() {
    let mut rng = ChaCha8Rng::seed_from_u64(97);
    for p in [2u64, 3] {
        let r = ring(p, &["x", "y"], 512);
        let ctx = fsplit_core::homogenization_context(&r).unwrap();
        for _ in 0..10 {
            let j = random_ideal(&mut rng, &r, 3, 2);
            if j.is_zero_ideal() {
                continue;
            }
            let jh = fsplit_core::homogenize_ideal(&ctx, &j).unwrap();
            // bracket power commutes with homogenization
            let lhs =
                fsplit_core::homogenize_ideal(&ctx, &bracket_power(&j, lv(1)).unwrap()).unwrap();
            let rhs = bracket_power(&jh, lv(1)).unwrap();
            assert!(lhs.equals(&rhs).unwrap());
            // membership interchange on sampled elements
            for _ in 0..5 {
                let f = random_poly(&mut rng, &r, 3, 2);
                if f.is_zero() {
                    continue;
                }
                let fh = fsplit_core::homogenize_polynomial(&ctx, &f).unwrap();
                assert_eq!(
                    j.contains(&f).unwrap(),
                    jh.contains(&fh).unwrap(),
                    "membership interchange for {f}"
                );
            }
        }
    }
}

#[test]
fn restriction_contract_over_corpus() {
    // the lifted cores of a monomial prime agree over S/I and over S/I'
    // where I' keeps only the minimal primes inside the prime
    for n in 2..=4usize {
        for facets in complexes_up_to_iso(n) {
            for p in [2u64, 3, 5] {
                let pr = complex_ring(p, &facets, n, 4096);
                for q in fsplit_core::enumerate_monomial_primes(&pr).unwrap() {
                    let restricted =
                        fsplit_core::restrict_to_contained_minimal_primes(&pr, &q).unwrap();
                    let closed_full = fsplit_core::core_closed_form(&pr, &q).unwrap();
                    let closed_restricted = fsplit_core::core_closed_form(&restricted, &q).unwrap();
                    assert!(closed_full.equals(&closed_restricted).unwrap());
                    // contraction data agrees levelwise as well
                    let qi = q.to_ideal().unwrap();
                    for e in 1..=2u32 {
                        let a = cartier_contraction(&pr, &qi, lv(e)).unwrap();
                        let b = cartier_contraction(&restricted, &qi, lv(e)).unwrap();
                        assert!(
                            a.equals(&b).unwrap(),
                            "p={p} facets {facets:?} prime <{}> level {e}",
                            q.label()
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn graded_preconditions_are_enforced() {
    let pr = presented(2, &["x", "y"], &["x^2 - y"], 512);
    assert!(!pr.is_graded());
    let one = pr.parse("1").unwrap();
    assert!(matches!(
        fsplit_core::is_f_pure_along(&pr, &one, 2),
        Err(fsplit_core::Error::NotGraded)
    ));
    assert!(matches!(
        fsplit_core::splitting_prime(&pr, 4, 2),
        Err(fsplit_core::Error::NotGraded)
    ));
}

#[test]
fn enumeration_bound_is_enforced() {
    let names: Vec<String> = (0..13).map(|i| format!("v{i}")).collect();
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let pr = presented(2, &refs, &[], 512);
    assert!(matches!(
        fsplit_core::enumerate_monomial_primes(&pr),
        Err(fsplit_core::Error::VariableBoundExceeded { .. })
    ));
}

#[test]
fn caches_are_shared_safely_between_threads() {
    // ideals and presentations are immutable; the basis and multiplier
    // caches are compute-once and may race benignly
    let pr = presented(3, &["x", "y", "z"], &["x*y", "x*z"], 512);
    let shared = ideal_in(pr.ambient(), &["x + y^2", "y*z"]);
    let handles: Vec<_> = (0..8)
        .map(|_| {
            let pr = pr.clone();
            let ideal = shared.clone();
            std::thread::spawn(move || {
                let basis: Vec<String> = ideal.printed_basis().unwrap();
                let mult = pr.fedder_multiplier(lv(1)).unwrap();
                (basis, mult.printed_basis().unwrap())
            })
        })
        .collect();
    let results: Vec<_> = handles.into_iter().map(|h| h.join().unwrap()).collect();
    for pair in results.windows(2) {
        assert_eq!(pair[0], pair[1]);
    }
}

#[test]
fn compatibility_matches_partial_intersections() {
    // K compatible at every level up to E iff K sits inside the partial
    // intersection of its own contractions
    let pr = presented(2, &["x", "y", "z"], &["x*y"], 512);
    let candidates = [
        vec!["x"],
        vec!["x", "y"],
        vec!["x + y"],
        vec!["x", "z"],
        vec!["z"],
    ];
    for gens in candidates {
        let k = ideal_in(pr.ambient(), &gens);
        let kn = pr.normalize_lift(&k).unwrap();
        let e_max = 3u32;
        let mut partial: Option<Ideal> = None;
        let mut all_compatible = true;
        for e in 1..=e_max {
            let a = cartier_contraction(&pr, &kn, lv(e)).unwrap();
            if !kn.leq(&a).unwrap() {
                all_compatible = false;
            }
            partial = Some(match partial {
                None => a,
                Some(b) => b.intersect(&a).unwrap(),
            });
        }
        let inside = kn.leq(&partial.unwrap()).unwrap();
        assert_eq!(all_compatible, inside, "candidate {gens:?}");
    }
}
