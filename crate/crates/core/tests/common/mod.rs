#![allow(dead_code)]

use std::path::PathBuf;

use tope_committee::format::{self, MatroidFile};
use tope_committee::topes::MaximalChain;
use tope_committee::{ElementSet, Limits, OrientedMatroid, SignSet};

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

pub fn fixture_text(name: &str) -> String {
    std::fs::read_to_string(fixture_path(name)).unwrap()
}

pub fn matroid_file(name: &str) -> MatroidFile {
    format::parse_matroid_file(&fixture_text(name)).unwrap()
}

pub fn matroid(name: &str) -> OrientedMatroid {
    matroid_file(name).to_matroid(&Limits::default()).unwrap()
}

pub fn sign_set(name: &str) -> SignSet {
    format::parse_committee(&fixture_text(name)).unwrap()
}

pub fn n0_chain() -> MaximalChain {
    format::parse_chain(&fixture_text("n0-chain")).unwrap()
}

/// N0 from its exact realization.
pub fn n0() -> OrientedMatroid {
    matroid("n0.realization.om")
}

/// N0 reoriented on {1,2}.
pub fn n2() -> OrientedMatroid {
    n0().reorient(ElementSet::from_elements([1, 2])).unwrap()
}

use rand::Rng;
use tope_committee::topes::{self};
use tope_committee::{Realization, SignVector};

/// Integer realization of the given rank with entries in `[-4, 4]`, or `None` when the
/// draw is rank deficient or not simple.
pub fn random_simple_matroid<R: Rng>(rng: &mut R, rank: usize, m: usize) -> Option<OrientedMatroid> {
    let rows: Vec<Vec<i64>> = (0..m)
        .map(|_| (0..rank).map(|_| rng.gen_range(-4..=4)).collect())
        .collect();
    let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
    let r = Realization::from_integers(&refs).ok()?;
    if r.rank() != rank {
        return None;
    }
    let om = OrientedMatroid::from_realization(&r).ok()?;
    om.is_simple().then_some(om)
}

/// Draws simple matroids of rank 2 or 3 on at most `max_m` elements until `count` are found.
pub fn random_matroids<R: Rng>(rng: &mut R, count: usize, max_m: usize) -> Vec<OrientedMatroid> {
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let rank = rng.gen_range(2..=3);
        let m = rng.gen_range(rank + 1..=max_m);
        if let Some(om) = random_simple_matroid(rng, rank, m) {
            out.push(om);
        }
    }
    out
}

/// A maximal chain from `base` with every step chosen uniformly among the options.
pub fn random_chain<R: Rng>(rng: &mut R, om: &OrientedMatroid, base: &SignVector) -> MaximalChain {
    topes::maximal_chain_by(om, base, |options| rng.gen_range(0..options.len())).unwrap()
}

/// A uniformly chosen member of a nonempty set.
pub fn pick<R: Rng>(rng: &mut R, set: &SignSet) -> SignVector {
    *set.iter().nth(rng.gen_range(0..set.len())).unwrap()
}

/// Reorientation of `om` that makes the tope `t` positive.
pub fn make_acyclic(om: &OrientedMatroid, t: &SignVector) -> OrientedMatroid {
    om.reorient(t.minus_set()).unwrap()
}
