//! One pass/fail line per acceptance criterion, each with its runtime budget.

mod common;

use std::collections::BTreeSet;
use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::*;
use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tope_committee::classify::{self, Lift, TrainingSet};
use tope_committee::committees::{self, Committee};
use tope_committee::format::ExtensionSpec;
use tope_committee::graphs::{self, covers};
use tope_committee::matroid::{validate_circuit_axioms, validate_covector_axioms, Axiom};
use tope_committee::topes::{self, SymmetricCycle};
use tope_committee::{linalg, sv, ElementSet, Limits, OrientedMatroid, Sign, SignSet, SignVector};

const PROPERTY_SEED: u64 = 0x7072_6f70;
const PROPERTY_INSTANCES: usize = 220;

fn criterion_1() {
    let t0 = matroid("n0.topes.om");
    let t2 = matroid("n2.topes.om");
    let reoriented = t0.reorient(ElementSet::from_elements([1, 2])).unwrap();
    assert_eq!(reoriented.topes(), t2.topes());
    assert_eq!(t0.topes().len(), 28);
}

fn criterion_2() {
    let n0 = matroid("n0.topes.om");
    let chain = n0_chain();
    assert_eq!(chain.labels(), &[3, 1, 4, 6, 2, 5]);
    for s in 1..=6 {
        let k = committees::alg3(&n0, &chain, s).unwrap();
        assert_eq!(k.members(), &sign_set(&format!("k{s}.committee")), "s = {s}");
    }
    let k6 = committees::alg3(&n0, &chain, 6).unwrap();
    assert_eq!(k6.members(), &[sv("++++++")].into_iter().collect::<SignSet>());
}

fn criterion_3() {
    let n3 = matroid("n0.topes.om")
        .reorient(ElementSet::interval(1, 3))
        .unwrap();
    let g = graphs::gamma(&n3).unwrap();
    let cycle = tope_committee::format::parse_sign_list(&fixture_text("n3-five-cycle")).unwrap();
    assert_eq!(cycle.len(), 5);
    for i in 0..5 {
        assert!(g.has_edge(&cycle[i], &cycle[(i + 1) % 5]), "missing edge {} {}", cycle[i], cycle[(i + 1) % 5]);
    }
    let members: SignSet = cycle.into_iter().collect();
    let c = committees::is_p_committee(&n3, &members, &committees::one_half()).unwrap();
    assert!(c.is_committee);
}

fn criterion_4() {
    let n2 = matroid("n2.topes.om");
    let b = sv("+--+++");
    assert_eq!(topes::filter_o(&n2, &b).unwrap(), sign_set("n2-filter"));
    assert_eq!(topes::antichain_g(&n2, &b).unwrap(), sign_set("n2-antichain"));
}

fn criterion_5() {
    let n2 = matroid("n2.topes.om");
    let g = graphs::gamma_maxplus(&n2).unwrap();
    assert_eq!(g.vertices(), sign_set("n2-maxplus"));
    let report = graphs::structure_report(&g);
    assert!(report.connected);
    assert!(report.min_degree >= 2);
    assert!(report.bridges.is_empty());
    assert!(!report.bipartite);
}

fn training(name: &str) -> (TrainingSet, Vec<linalg::Rational>) {
    let file = matroid_file(name);
    let om = file.to_matroid(&Limits::default()).unwrap();
    let Some(ExtensionSpec::Rational(g)) = file.extension.clone() else {
        panic!("{name} lacks a rational extension");
    };
    (TrainingSet::new(om, file.labels.clone().unwrap()).unwrap(), g)
}

fn criterion_6() {
    let committee = Committee::new(4, sign_set("training.committee")).unwrap();

    let (s, g) = training("training-c.om");
    let m = classify::reorient_training(&s).unwrap();
    assert!(committees::is_committee(&m, committee.members()).unwrap());
    let ext = classify::extend_by_row(&m, &g).unwrap();
    let Lift::Conformal(lifted) = classify::lift_committee(&s, &committee, &ext).unwrap() else {
        panic!("extension (c) should lift conformally");
    };
    let lifted: SignSet = lifted.into_iter().collect();
    assert_eq!(lifted, sign_set("training-c-lifted"));
    assert_eq!(classify::decide(&s, &committee, &ext, 5).unwrap(), Sign::Minus);

    let (s, g) = training("training-d.om");
    let m = classify::reorient_training(&s).unwrap();
    let ext = classify::extend_by_row(&m, &g).unwrap();
    assert!(matches!(
        classify::lift_committee(&s, &committee, &ext).unwrap(),
        Lift::NonConformal { .. }
    ));
    assert_eq!(classify::decide(&s, &committee, &ext, 5).unwrap(), Sign::Zero);
}

/// Tallies for the recorded (not asserted) observations of the property run.
#[derive(Default, Debug)]
struct Observations {
    instances: usize,
    rank_two: usize,
    alg1_alg3_compared: usize,
    alg1_alg3_equal: usize,
    layer_checks: usize,
    cover_filter_checks: usize,
    totally_cyclic_bases: usize,
    totally_cyclic_hull_gaps: usize,
    extensions: usize,
}

fn check_cycle_committee(om: &OrientedMatroid, r: &SymmetricCycle) {
    let k = committees::cycle_committee(om, r).unwrap();
    assert!(committees::is_committee(om, k.members()).unwrap());
    assert_eq!(k.len() % 2, 1, "even cycle committee {k}");
    assert!(k.is_balanced(), "unbalanced cycle committee {k}");
    let c = committees::classify_committee(om, k.members()).unwrap();
    assert_eq!(c.is_critical, Some(true), "cycle committee {k} is not critical");
}

fn check_chain_committees<R: Rng>(rng: &mut R, om: &OrientedMatroid, obs: &mut Observations) {
    let t = pick(rng, om.topes());
    let n0 = make_acyclic(om, &t);
    let m = n0.m();
    let chain = random_chain(rng, &n0, &n0.positive_tope());
    let s = rng.gen_range(1..=m);
    let k3 = committees::alg3(&n0, &chain, s).unwrap();
    let k4 = committees::alg4(&n0, &chain, s).unwrap();
    assert_eq!(k3, k4);
    let cycle = committees::reoriented_cycle(&chain, s).unwrap();
    assert_eq!(k3.members(), &committees::maxplus(&cycle.vertices()));
    let ns = n0.reorient(ElementSet::interval(1, s)).unwrap();
    assert!(committees::is_committee(&ns, k3.members()).unwrap());
    assert!(k3.is_balanced());
    assert_eq!(k3.len() % 2, 1);
    let bounds = committees::bound_check(&n0, &chain, s).unwrap();
    assert!(bounds.holds, "{bounds}");

    if committees::is_rank_two(&n0) {
        obs.rank_two += 1;
        let len = rng.gen_range(1..=m);
        let seq: Vec<usize> = (0..len).map(|_| rng.gen_range(1..=m)).collect();
        let flipped = seq
            .iter()
            .fold(ElementSet::empty(), |acc, &e| {
                let one = ElementSet::singleton(e);
                acc.union(one).difference(acc.intersection(one))
            });
        let k1 = committees::alg1_rank2(&n0, &seq).unwrap();
        let target = n0.reorient(flipped).unwrap();
        assert_eq!(k1.members(), &committees::maxplus(target.topes()), "seq {seq:?}");
        let prefix: Vec<usize> = (1..=s).collect();
        let a1 = committees::alg1_rank2(&n0, &prefix).unwrap();
        obs.alg1_alg3_compared += 1;
        obs.alg1_alg3_equal += usize::from(a1 == k3);
    }
}

fn check_layers<R: Rng>(rng: &mut R, om: &OrientedMatroid, obs: &mut Observations) {
    let topes: Vec<SignVector> = om.topes().iter().copied().collect();
    if topes.len() > 24 {
        return;
    }
    let limits = Limits::default();
    for k in 1..=4.min(topes.len()) {
        let layer: BTreeSet<SignSet> = committees::enumerate_committees(om, k, &limits)
            .unwrap()
            .into_iter()
            .collect();
        let brute: BTreeSet<SignSet> = topes
            .iter()
            .copied()
            .combinations(k)
            .map(|c| c.into_iter().collect::<SignSet>())
            .filter(|c| committees::is_committee(om, c).unwrap())
            .collect();
        assert_eq!(layer, brute, "layer {k}");
        obs.layer_checks += 1;
    }
    for _ in 0..10 {
        let size = rng.gen_range(1..=topes.len());
        let subset: SignSet = topes
            .iter()
            .copied()
            .filter(|_| rng.gen_bool(size as f64 / topes.len() as f64))
            .collect();
        assert_eq!(
            committees::in_layer(om, &subset).unwrap(),
            committees::is_committee(om, &subset).unwrap()
        );
    }
}

fn check_cover_filters<R: Rng>(rng: &mut R, om: &OrientedMatroid, obs: &mut Observations) {
    if om.is_acyclic() {
        return;
    }
    let top = committees::maxplus(om.topes());
    let b = pick(rng, &top);
    let chain = random_chain(rng, om, &b);
    let cover = topes::chain_cover_tope(om, &chain).unwrap();
    assert!(cover.rank as i64 >= cover.rank_bound);
    let sep_k = b.separation_set(&cover.tope).unwrap();
    for r in chain.topes() {
        let sep_r = b.separation_set(r).unwrap();
        assert_eq!(covers(om.m(), &b, r), sep_k.is_subset(sep_r));
    }
    for (x, y) in chain.topes()[1..].iter().tuple_combinations() {
        assert!(!covers(om.m(), x, y), "{x} and {y} cover the ground set");
    }
    let poset = topes::tope_poset(om, &b).unwrap();
    let o = topes::filter_o(om, &b).unwrap();
    let g = topes::antichain_g(om, &b).unwrap();
    assert!(poset.is_filter(&o));
    assert_eq!(poset.minimal(&o), g);
    let hull = topes::tconvex_hull(om, &g).unwrap();
    assert!(hull.is_subset(&o));
    if om.structural_predicates().totally_cyclic == Some(true) {
        obs.totally_cyclic_bases += 1;
        obs.totally_cyclic_hull_gaps += usize::from(hull != o);
    }
    let mut union = SignSet::new();
    let filters: Vec<(SignSet, SignSet)> = top
        .iter()
        .map(|x| (topes::filter_o(om, x).unwrap(), topes::antichain_g(om, x).unwrap()))
        .collect();
    for (o, _) in &filters {
        union.extend(o.iter().copied());
    }
    assert_eq!(&union, om.topes());
    for ((o1, g1), (o2, g2)) in filters.iter().tuple_combinations() {
        assert_eq!(o1.intersection(o2).next().is_some(), g1.intersection(g2).next().is_some());
    }
    obs.cover_filter_checks += 1;
}

fn check_extension<R: Rng>(rng: &mut R, om: &OrientedMatroid, obs: &mut Observations) {
    let r = om.realization().unwrap();
    let g: Vec<linalg::Rational> = (0..r.dim()).map(|_| linalg::int(rng.gen_range(-3..=3))).collect();
    let Ok(ext) = classify::extend_by_row(om, &g) else {
        return;
    };
    let extended = OrientedMatroid::from_realization(&r.with_row(g).unwrap()).unwrap();
    assert_eq!(&ext.extended_cocircuits, extended.cocircuits().unwrap());
    obs.extensions += 1;
}

fn criterion_7() {
    let mut rng = ChaCha8Rng::seed_from_u64(PROPERTY_SEED);
    let matroids = random_matroids(&mut rng, PROPERTY_INSTANCES, 8);
    let mut obs = Observations::default();
    for om in &matroids {
        obs.instances += 1;
        let base = pick(&mut rng, om.topes());
        let chain = random_chain(&mut rng, om, &base);
        check_cycle_committee(om, &topes::symmetric_cycle_from_chain(&chain).unwrap());
        check_chain_committees(&mut rng, om, &mut obs);
        check_layers(&mut rng, om, &mut obs);
        check_cover_filters(&mut rng, om, &mut obs);
        check_extension(&mut rng, om, &mut obs);
        for e in 1..=om.m() {
            assert_eq!(2 * om.positive_halfspace(e).unwrap().len(), om.topes().len());
        }
    }
    assert!(obs.instances >= 200);
    println!("  observations: {obs:?}");
}

fn criterion_8() {
    let n0 = n0();
    let covectors = n0.covectors().unwrap().clone();
    assert!(validate_covector_axioms(&covectors).ok());

    let (x, y) = (sv("++++++"), sv("+++-++"));
    let eliminator = sv("+++0++");
    assert!(covectors.contains(&eliminator));
    let mut mutated = covectors.clone();
    mutated.remove(&eliminator);
    let report = validate_covector_axioms(&mutated);
    assert!(report.cites(Axiom::L3, &[y, x], Some(4)), "{report}");

    let cocircuit = *n0.cocircuits().unwrap().iter().next().unwrap();
    let mut mutated = covectors.clone();
    mutated.remove(&cocircuit.negate());
    let report = validate_covector_axioms(&mutated);
    assert!(report.cites(Axiom::L1, &[cocircuit], None), "{report}");

    let mut circuits = n0.circuits().unwrap().clone();
    assert!(validate_circuit_axioms(&circuits).ok());
    let zero = SignVector::zero(6);
    circuits.insert(zero);
    let report = validate_circuit_axioms(&circuits);
    assert!(report.cites(Axiom::C0, &[zero], None), "{report}");
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn(), Duration); 8] = [
        ("reorientation golden", criterion_1, Duration::from_millis(100)),
        ("chain construction golden", criterion_2, Duration::from_millis(500)),
        ("five-cycle committee", criterion_3, Duration::from_millis(500)),
        ("covering filter and antichain", criterion_4, Duration::from_millis(500)),
        ("maximal-positive-part graph", criterion_5, Duration::from_millis(500)),
        ("classification scenario", criterion_6, Duration::from_millis(500)),
        ("property suite", criterion_7, Duration::from_secs(300)),
        ("axiom validator mutations", criterion_8, Duration::from_secs(1)),
    ];
    let mut failed = Vec::new();
    for (i, (name, check, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(check));
        let elapsed = start.elapsed();
        let verdict = match &outcome {
            Ok(()) if elapsed <= *budget => "PASS".to_string(),
            Ok(()) => format!("FAIL (over budget {budget:?})"),
            Err(_) => "FAIL".to_string(),
        };
        println!("criterion {}: {verdict} {name} [{:.3}s]", i + 1, elapsed.as_secs_f64());
        if verdict != "PASS" {
            failed.push(i + 1);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
