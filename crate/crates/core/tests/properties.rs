//! Randomised checks of sign-vector algebra and matroid constructions against oracles.

mod common;

use std::collections::BTreeSet;

use common::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tope_committee::graphs;
use tope_committee::matroid::validate_covector_axioms;
use tope_committee::{ElementSet, OrientedMatroid, Realization, Sign, SignVector};

fn sign_vector(m: usize) -> impl Strategy<Value = SignVector> {
    proptest::collection::vec(prop_oneof![Just(Sign::Minus), Just(Sign::Zero), Just(Sign::Plus)], m)
        .prop_map(|s| SignVector::from_signs(&s).unwrap())
}

fn triple() -> impl Strategy<Value = (SignVector, SignVector, SignVector)> {
    (1usize..=12).prop_flat_map(|m| (sign_vector(m), sign_vector(m), sign_vector(m)))
}

fn subset(m: usize) -> impl Strategy<Value = ElementSet> {
    proptest::collection::vec(any::<bool>(), m)
        .prop_map(|bits| ElementSet::from_elements(bits.iter().enumerate().filter(|(_, b)| **b).map(|(i, _)| i + 1)))
}

fn rows(rank: usize, max_m: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    proptest::collection::vec(proptest::collection::vec(-3i64..=3, rank), rank..=max_m)
}

fn realization(rows: &[Vec<i64>]) -> Option<Realization> {
    let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
    Realization::from_integers(&refs).ok()
}

/// Rank-2 flats of a rank-3 realization, each given as the set of rows it contains.
fn lines(r: &Realization) -> BTreeSet<ElementSet> {
    let m = r.m();
    let mut out = BTreeSet::new();
    for i in 1..=m {
        for j in i + 1..=m {
            let pair = ElementSet::from_elements([i, j]);
            if r.rank_of(pair) != 2 {
                continue;
            }
            let flat = ElementSet::from_elements(
                (1..=m).filter(|&e| r.rank_of(pair.union(ElementSet::singleton(e))) == 2),
            );
            out.insert(flat);
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn composition_is_associative((x, y, z) in triple()) {
        let left = x.compose(&y).unwrap().compose(&z).unwrap();
        let right = x.compose(&y.compose(&z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn composition_commutes_exactly_for_conformal_pairs((x, y, _) in triple()) {
        let commutes = x.compose(&y).unwrap() == y.compose(&x).unwrap();
        prop_assert_eq!(commutes, x.is_conformal(&y));
        prop_assert_eq!(x.is_conformal(&y), x.separation_set(&y).unwrap().is_empty());
    }

    #[test]
    fn separation_is_symmetric_and_negation_reverses_it((x, y, _) in triple()) {
        let s = x.separation_set(&y).unwrap();
        prop_assert_eq!(s, y.separation_set(&x).unwrap());
        let full = x.support().intersection(y.support());
        prop_assert_eq!(x.separation_set(&y.negate()).unwrap(), full.difference(s));
    }

    #[test]
    fn reorientation_is_an_involution(x in (1usize..=12).prop_flat_map(|m| (sign_vector(m), subset(m)))) {
        let (x, a) = x;
        let once = x.reorient(a).unwrap();
        prop_assert_eq!(once.reorient(a).unwrap(), x);
        prop_assert_eq!(once.support(), x.support());
        prop_assert_eq!(x.reorient(x.support()).unwrap(), x.negate());
    }

    #[test]
    fn composition_lies_above_its_first_argument((x, y, _) in triple()) {
        let xy = x.compose(&y).unwrap();
        prop_assert!(x.leq(&xy));
        prop_assert_eq!(xy.support(), x.support().union(y.support()));
    }

    #[test]
    fn rank_three_tope_count_matches_line_formula(rows in rows(3, 7)) {
        let Some(r) = realization(&rows) else { return Ok(()); };
        prop_assume!(r.rank() == 3);
        let om = OrientedMatroid::from_realization(&r).unwrap();
        prop_assume!(om.is_simple());
        let flats = lines(&r);
        let expected = 2 * (1 + flats.iter().map(|f| f.len() - 1).sum::<usize>());
        prop_assert_eq!(om.topes().len(), expected);
        prop_assert_eq!(om.cocircuits().unwrap().len(), 2 * flats.len());
    }

    #[test]
    fn rank_two_tope_count_is_twice_the_number_of_lines(rows in rows(2, 8)) {
        let Some(r) = realization(&rows) else { return Ok(()); };
        prop_assume!(r.rank() == 2);
        let om = OrientedMatroid::from_realization(&r).unwrap();
        prop_assume!(om.is_simple());
        prop_assert_eq!(om.topes().len(), 2 * om.m());
    }

    #[test]
    fn covectors_satisfy_the_axioms_and_round_trip(rows in rows(3, 6)) {
        let Some(r) = realization(&rows) else { return Ok(()); };
        let om = OrientedMatroid::from_realization(&r).unwrap();
        let l = om.covectors().unwrap();
        prop_assert!(validate_covector_axioms(l).ok());
        let rebuilt = OrientedMatroid::from_covectors(l).unwrap();
        prop_assert_eq!(rebuilt.topes(), om.topes());
    }

    #[test]
    fn realization_reorientation_matches_matroid_reorientation(
        (rows, bits) in rows(3, 6).prop_flat_map(|r| { let m = r.len(); (Just(r), subset(m)) })
    ) {
        let Some(r) = realization(&rows) else { return Ok(()); };
        let om = OrientedMatroid::from_realization(&r).unwrap();
        let direct = OrientedMatroid::from_realization(&r.reorient(bits)).unwrap();
        let reoriented = om.reorient(bits).unwrap();
        prop_assert_eq!(reoriented.topes(), direct.topes());
    }
}

#[test]
fn topes_agree_with_sampled_regions() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for om in random_matroids(&mut rng, 40, 6) {
        let r = om.realization().unwrap();
        let mut seen = BTreeSet::new();
        for x in -6i64..=6 {
            for y in -6i64..=6 {
                for z in -6i64..=6 {
                    let coords = [x, y, z];
                    let p: Vec<_> = coords[..r.dim()].iter().map(|v| tope_committee::linalg::int(*v)).collect();
                    let s = r.evaluate(&p);
                    if s.zero_set().is_empty() {
                        seen.insert(s);
                    }
                }
            }
        }
        assert!(seen.is_subset(om.topes()));
    }
}

#[test]
fn deletion_check_over_random_instances() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let (mut nontrivial, mut isomorphic) = (0, 0);
    for om in random_matroids(&mut rng, 600, 7) {
        if om.is_acyclic() {
            continue;
        }
        let report = graphs::deletion_isomorphism_check(&om).unwrap();
        assert!(report.face.is_nonnegative());
        if !report.deleted.is_empty() {
            nontrivial += 1;
            isomorphic += usize::from(report.isomorphic());
        }
    }
    println!("deletion check: {isomorphic} of {nontrivial} nontrivial instances isomorphic");
    assert!(nontrivial > 0);
}

#[test]
fn minimum_committee_parity_over_random_instances() {
    let mut rng = ChaCha8Rng::seed_from_u64(29);
    let limits = tope_committee::Limits::default();
    let (mut searched, mut even_below) = (0, 0);
    for om in random_matroids(&mut rng, 80, 6) {
        if om.topes().len() > 24 {
            continue;
        }
        let min = tope_committee::committees::minimum_committee(&om, &limits).unwrap();
        assert!(tope_committee::committees::is_committee(&om, min.committee.members()).unwrap());
        searched += 1;
        even_below += usize::from(min.smallest_even_below.is_some());
    }
    println!("minimum committees: {even_below} of {searched} instances had an even committee below the smallest odd one");
    assert!(searched > 0);
}

#[test]
fn maxplus_graph_biconnectivity_over_random_instances() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    let (mut seen, mut biconnected) = (0, 0);
    for om in random_matroids(&mut rng, 150, 8) {
        if om.is_acyclic() {
            continue;
        }
        let report = graphs::structure_report(&graphs::gamma_maxplus(&om).unwrap());
        assert_eq!(report.maxplus_guarantees, Some(true), "{report}");
        seen += 1;
        biconnected += usize::from(report.biconnected);
    }
    println!("maximal-positive-part graphs: {biconnected} of {seen} biconnected");
}

#[test]
fn tope_level_parallel_pairs_agree_with_covectors() {
    let mut rng = ChaCha8Rng::seed_from_u64(37);
    let mut compared = 0;
    for _ in 0..200 {
        let rank = rand::Rng::gen_range(&mut rng, 2..=3);
        let m = rand::Rng::gen_range(&mut rng, rank + 1..=7);
        let mut rows: Vec<Vec<i64>> = (0..m)
            .map(|_| (0..rank).map(|_| rand::Rng::gen_range(&mut rng, -2..=2)).collect())
            .collect();
        let (i, j) = (rand::Rng::gen_range(&mut rng, 0..m), rand::Rng::gen_range(&mut rng, 0..m));
        let factor = if rand::Rng::gen_bool(&mut rng, 0.5) { 2 } else { -1 };
        rows[j] = rows[i].iter().map(|x| x * factor).collect();
        let Some(r) = realization(&rows) else { continue };
        let Ok(full) = OrientedMatroid::from_realization(&r) else { continue };
        let Ok(tope_only) = OrientedMatroid::from_topes(full.topes(), true) else { continue };
        let a = full.structural_predicates();
        let b = tope_only.structural_predicates();
        assert_eq!(a.parallel_pairs, b.parallel_pairs);
        assert_eq!(a.antiparallel_pairs, b.antiparallel_pairs);
        compared += 1;
    }
    println!("parallel pairs: topes and covectors agreed on {compared} instances");
    assert!(compared > 100);
}
