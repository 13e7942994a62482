//! Tope graph, tope posets, maximal chains, symmetric cycles, T-convex hulls and
//! the order filters `O(B)` with their antichains `G(B)`.

use std::collections::BTreeSet;
use std::fmt::{self, Write as _};

use crate::committees::maxplus;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matroid::{OrientedMatroid, SignSet};
use crate::signvec::{ElementSet, SignVector};

pub type TopeGraph = Graph<SignVector>;

/// Tope graph of a simple matroid: topes are adjacent iff they differ in exactly one element.
///
/// For two topes separated by a single element `e`, covector elimination at `e`
/// yields a covector that vanishes only at `e` and agrees with both topes elsewhere:
/// the shared subtope. Conversely, topes covering a common subtope differ only on its
/// zero set, which is a single element when the matroid is simple.
pub fn tope_graph(om: &OrientedMatroid) -> Result<TopeGraph> {
    om.require_simple()?;
    Ok(one_flip_graph(om.topes()))
}

fn one_flip_graph(topes: &SignSet) -> TopeGraph {
    let mut edges = Vec::new();
    for t in topes {
        for e in t.support().iter() {
            let s = t.flip(ElementSet::singleton(e));
            if *t < s && topes.contains(&s) {
                edges.push((*t, s));
            }
        }
    }
    Graph::from_edges(topes.iter().copied(), edges)
}

/// Tope adjacency read off the covector lattice: pairs of topes lying above a covector
/// that has exactly two topes above it. `None` when covectors are unavailable.
pub fn lattice_adjacency(om: &OrientedMatroid) -> Option<BTreeSet<(SignVector, SignVector)>> {
    let l = om.covectors()?;
    let mut out = BTreeSet::new();
    for h in l {
        let above: Vec<&SignVector> = om.topes().iter().filter(|t| h.leq(t)).collect();
        if above.len() == 2 {
            out.insert((*above[0].min(above[1]), *above[0].max(above[1])));
        }
    }
    Some(out)
}

/// Topes ordered by inclusion of separation sets from a base tope.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TopePoset {
    base: SignVector,
    elements: Vec<SignVector>,
    separations: Vec<ElementSet>,
}

impl TopePoset {
    pub fn base(&self) -> SignVector {
        self.base
    }

    pub fn elements(&self) -> &[SignVector] {
        &self.elements
    }

    fn index(&self, t: &SignVector) -> Option<usize> {
        self.elements.binary_search(t).ok()
    }

    fn sep(&self, t: &SignVector) -> ElementSet {
        match self.index(t) {
            Some(i) => self.separations[i],
            None => panic!("{t} is not an element of the poset"),
        }
    }

    /// `a ≼ b` iff `S(B, a) ⊆ S(B, b)`.
    pub fn leq(&self, a: &SignVector, b: &SignVector) -> bool {
        self.sep(a).is_subset(self.sep(b))
    }

    /// Poset rank `|S(B, t)|`.
    pub fn rank(&self, t: &SignVector) -> usize {
        self.sep(t).len()
    }

    /// Covering pairs `(a, b)` with `a ⋖ b`, from the transitive reduction of the order.
    pub fn covering_pairs(&self) -> Vec<(SignVector, SignVector)> {
        let n = self.elements.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let (si, sj) = (self.separations[i], self.separations[j]);
                if i == j || !si.is_proper_subset(sj) {
                    continue;
                }
                let between = (0..n).any(|k| {
                    let sk = self.separations[k];
                    si.is_proper_subset(sk) && sk.is_proper_subset(sj)
                });
                if !between {
                    out.push((self.elements[i], self.elements[j]));
                }
            }
        }
        out.sort();
        out
    }

    /// Whether `set` is upward closed.
    pub fn is_filter(&self, set: &SignSet) -> bool {
        set.iter().all(|a| {
            self.elements
                .iter()
                .filter(|b| self.leq(a, b))
                .all(|b| set.contains(b))
        })
    }

    /// Minimal members of `set` in this order.
    pub fn minimal(&self, set: &SignSet) -> SignSet {
        set.iter()
            .filter(|a| !set.iter().any(|b| b != *a && self.leq(b, a)))
            .copied()
            .collect()
    }
}

pub fn tope_poset(om: &OrientedMatroid, base: &SignVector) -> Result<TopePoset> {
    om.require_simple()?;
    om.require_tope(base)?;
    let elements: Vec<SignVector> = om.topes().iter().copied().collect();
    let separations = elements.iter().map(|t| base.sep(t)).collect();
    Ok(TopePoset {
        base: *base,
        elements,
        separations,
    })
}

/// A maximal chain `R^0 = B ⋖ R^1 ⋖ ... ⋖ R^m = -B` with `labels[i-1]` the element
/// separating `R^{i-1}` from `R^i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaximalChain {
    topes: Vec<SignVector>,
    labels: Vec<usize>,
}

impl MaximalChain {
    /// Checks the chain shape: full-support topes, `m + 1` of them, each step flipping
    /// one element that has not been flipped before, ending at the opposite of the base.
    pub fn new(topes: Vec<SignVector>) -> Result<Self> {
        let invalid = |msg: String| Err(Error::precondition(format!("invalid maximal chain: {msg}")));
        let Some(base) = topes.first().copied() else {
            return invalid("empty sequence".into());
        };
        let m = base.len();
        if topes.len() != m + 1 {
            return invalid(format!("{} topes given, {} expected", topes.len(), m + 1));
        }
        if let Some(t) = topes.iter().find(|t| t.len() != m || t.support() != ElementSet::full(m)) {
            return invalid(format!("{t} is not a full-support vector of length {m}"));
        }
        if topes[m] != base.negate() {
            return invalid(format!("last tope {} is not the opposite of {base}", topes[m]));
        }
        let mut labels = Vec::with_capacity(m);
        let mut flipped = ElementSet::empty();
        for i in 1..=m {
            let s = topes[i - 1].sep(&topes[i]);
            if s.len() != 1 {
                return invalid(format!(
                    "steps {} and {i} differ in {} elements",
                    i - 1,
                    s.len()
                ));
            }
            let e = s.min_element().expect("one element");
            if flipped.contains(e) {
                return invalid(format!("element {e} flipped twice"));
            }
            flipped.insert(e);
            labels.push(e);
        }
        Ok(MaximalChain { topes, labels })
    }

    /// Checks the shape and that every member is a tope of `om`.
    pub fn validate(om: &OrientedMatroid, topes: Vec<SignVector>) -> Result<Self> {
        let chain = MaximalChain::new(topes)?;
        if chain.m() != om.m() {
            return Err(Error::precondition(format!(
                "chain has length {} but the matroid has {} elements",
                chain.m(),
                om.m()
            )));
        }
        for t in &chain.topes {
            om.require_tope(t)?;
        }
        Ok(chain)
    }

    pub fn m(&self) -> usize {
        self.labels.len()
    }

    pub fn base(&self) -> SignVector {
        self.topes[0]
    }

    pub fn topes(&self) -> &[SignVector] {
        &self.topes
    }

    /// `R^i`.
    pub fn tope(&self, i: usize) -> SignVector {
        self.topes[i]
    }

    /// Labels `l_1, ..., l_m`.
    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    /// Index `k` with `l_k = e`.
    pub fn position_of(&self, e: usize) -> Option<usize> {
        self.labels.iter().position(|&l| l == e).map(|i| i + 1)
    }

    /// The chain after reorienting every tope on `a`.
    pub fn reorient(&self, a: ElementSet) -> Self {
        MaximalChain {
            topes: self.topes.iter().map(|t| t.flip(a)).collect(),
            labels: self.labels.clone(),
        }
    }

    /// The chain after moving element `e` to `perm[e - 1]`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        MaximalChain {
            topes: self.topes.iter().map(|t| t.permute(perm)).collect(),
            labels: self.labels.iter().map(|&e| perm[e - 1]).collect(),
        }
    }

    /// One tope per line; every tope after the first carries its label.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.topes[0]);
        for (t, l) in self.topes[1..].iter().zip(&self.labels) {
            let _ = writeln!(out, "{t} {l}");
        }
        out
    }
}

impl fmt::Display for MaximalChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Greedy maximal chain from `base`: each step flips the smallest element that raises the rank.
pub fn maximal_chain(om: &OrientedMatroid, base: &SignVector) -> Result<MaximalChain> {
    maximal_chain_by(om, base, |_| 0)
}

/// Maximal chain where `choose` picks among the rank-raising elements (given in increasing order).
pub fn maximal_chain_by<F>(om: &OrientedMatroid, base: &SignVector, mut choose: F) -> Result<MaximalChain>
where
    F: FnMut(&[usize]) -> usize,
{
    om.require_simple()?;
    om.require_tope(base)?;
    let m = om.m();
    let mut current = *base;
    let mut topes = vec![current];
    for step in 1..=m {
        let options: Vec<usize> = (1..=m)
            .filter(|&e| current.get(e) == base.get(e))
            .filter(|&e| om.is_tope(&current.flip(ElementSet::singleton(e))))
            .collect();
        if options.is_empty() {
            return Err(Error::precondition(format!(
                "no rank-raising neighbour of {current} at step {step}; the tope set is not a simple oriented matroid"
            )));
        }
        let k = choose(&options).min(options.len() - 1);
        current = current.flip(ElementSet::singleton(options[k]));
        topes.push(current);
    }
    MaximalChain::new(topes)
}

/// A cycle `(T^0, ..., T^{2m-1})` in the tope graph with `T^{k+m} = -T^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricCycle {
    topes: Vec<SignVector>,
}

impl SymmetricCycle {
    /// Checks antipodal symmetry and one-element steps around the cycle.
    pub fn new(topes: Vec<SignVector>) -> Result<Self> {
        let invalid = |msg: String| Err(Error::precondition(format!("invalid symmetric cycle: {msg}")));
        let n = topes.len();
        if n == 0 || n % 2 == 1 {
            return invalid(format!("length {n} is not a positive even number"));
        }
        let m = n / 2;
        if let Some(t) = topes.iter().find(|t| t.len() != m || t.support() != ElementSet::full(m)) {
            return invalid(format!("{t} is not a full-support vector of length {m}"));
        }
        for k in 0..m {
            if topes[k + m] != topes[k].negate() {
                return invalid(format!("T^{} is not the opposite of T^{k}", k + m));
            }
        }
        for k in 0..n {
            if topes[k].sep(&topes[(k + 1) % n]).len() != 1 {
                return invalid(format!("T^{k} and its successor are not adjacent"));
            }
        }
        Ok(SymmetricCycle { topes })
    }

    /// Checks the cycle and that its vertices are topes of `om`.
    pub fn validate(om: &OrientedMatroid, topes: Vec<SignVector>) -> Result<Self> {
        let r = SymmetricCycle::new(topes)?;
        if r.m() != om.m() {
            return Err(Error::precondition("cycle length does not match the ground set"));
        }
        for t in &r.topes {
            om.require_tope(t)?;
        }
        Ok(r)
    }

    pub fn m(&self) -> usize {
        self.topes.len() / 2
    }

    pub fn topes(&self) -> &[SignVector] {
        &self.topes
    }

    /// Vertex set `V(R)`.
    pub fn vertices(&self) -> SignSet {
        self.topes.iter().copied().collect()
    }

    /// Same cycle started at position `k`.
    pub fn rotate(&self, k: usize) -> Self {
        let mut topes = self.topes.clone();
        topes.rotate_left(k % self.topes.len());
        SymmetricCycle { topes }
    }

    /// The cycle after reorienting every vertex on `a`.
    pub fn reorient(&self, a: ElementSet) -> Self {
        SymmetricCycle {
            topes: self.topes.iter().map(|t| t.flip(a)).collect(),
        }
    }

    /// Element flipped between `T^k` and `T^{k+1}`.
    pub fn flip_at(&self, k: usize) -> usize {
        let n = self.topes.len();
        self.topes[k % n]
            .sep(&self.topes[(k + 1) % n])
            .min_element()
            .expect("adjacent topes")
    }
}

/// `(R^0, ..., R^m, -R^1, ..., -R^{m-1})`.
pub fn symmetric_cycle_from_chain(c: &MaximalChain) -> Result<SymmetricCycle> {
    let chain = MaximalChain::new(c.topes().to_vec())?;
    let m = chain.m();
    let mut topes = chain.topes().to_vec();
    topes.extend(chain.topes()[1..m].iter().map(|t| t.negate()));
    SymmetricCycle::new(topes)
}

/// The `m` vertices positive at `e`, in cycle order.
pub fn positive_path(r: &SymmetricCycle, e: usize) -> Result<Vec<SignVector>> {
    let m = r.m();
    if e == 0 || e > m {
        return Err(Error::domain(format!("element {e} outside ground set [1,{m}]")));
    }
    let n = r.topes.len();
    let positive = |k: usize| r.topes[k % n].get(e) == crate::signvec::Sign::Plus;
    let start = (0..n)
        .find(|&k| positive(k) && !positive(k + n - 1))
        .expect("antipodal cycles switch sign at every element");
    let path: Vec<SignVector> = (0..m).map(|i| r.topes[(start + i) % n]).collect();
    debug_assert!((m..n).all(|i| !positive(start + i)));
    Ok(path)
}

/// Intersection of all halfspaces `T_e^s` containing `q`.
pub fn tconvex_hull(om: &OrientedMatroid, q: &SignSet) -> Result<SignSet> {
    for t in q {
        om.require_tope(t)?;
    }
    let Some(first) = q.iter().next() else {
        return Ok(SignSet::new());
    };
    let mut common_plus = first.plus_set();
    let mut common_minus = first.minus_set();
    for t in q {
        common_plus = common_plus.intersection(t.plus_set());
        common_minus = common_minus.intersection(t.minus_set());
    }
    Ok(om
        .topes()
        .iter()
        .filter(|t| common_plus.is_subset(t.plus_set()) && common_minus.is_subset(t.minus_set()))
        .copied()
        .collect())
}

fn require_cover_setting(om: &OrientedMatroid, base: &SignVector) -> Result<()> {
    om.require_simple()?;
    if om.is_acyclic() {
        return Err(Error::precondition("the matroid is acyclic"));
    }
    om.require_tope(base)?;
    if !maxplus(om.topes()).contains(base) {
        return Err(Error::precondition(format!(
            "{base} does not have an inclusion-maximal positive part"
        )));
    }
    Ok(())
}

/// `O(B) = {T : B^+ ∪ T^+ = E}`.
pub fn filter_o(om: &OrientedMatroid, base: &SignVector) -> Result<SignSet> {
    require_cover_setting(om, base)?;
    let e = om.ground_set();
    Ok(om
        .topes()
        .iter()
        .filter(|t| base.plus_set().union(t.plus_set()) == e)
        .copied()
        .collect())
}

/// `G(B)`: members of `O(B)` with inclusion-maximal positive parts.
pub fn antichain_g(om: &OrientedMatroid, base: &SignVector) -> Result<SignSet> {
    let o = filter_o(om, base)?;
    let top = maxplus(om.topes());
    Ok(o.intersection(&top).copied().collect())
}

/// The tope `K` of a chain singled out by the covering condition, with its rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainCover {
    pub tope: SignVector,
    pub rank: usize,
    /// The lower bound `2m - max|T^+| - |B^+|` on `rank`.
    pub rank_bound: i64,
}

/// Finds the unique `K ∈ max^+(chain)` with `B^+ ∪ K^+ = E`.
pub fn chain_cover_tope(om: &OrientedMatroid, c: &MaximalChain) -> Result<ChainCover> {
    let base = c.base();
    require_cover_setting(om, &base)?;
    let chain = MaximalChain::validate(om, c.topes().to_vec())?;
    let e = om.ground_set();
    let members: SignSet = chain.topes().iter().copied().collect();
    let candidates: Vec<SignVector> = maxplus(&members)
        .into_iter()
        .filter(|k| base.plus_set().union(k.plus_set()) == e)
        .collect();
    if candidates.len() != 1 {
        return Err(Error::precondition(format!(
            "expected one covering tope in the chain, found {}",
            candidates.len()
        )));
    }
    let k = candidates[0];
    let m = om.m() as i64;
    let c_max = om.topes().iter().map(|t| t.plus_set().len()).max().unwrap_or(0) as i64;
    Ok(ChainCover {
        tope: k,
        rank: base.sep(&k).len(),
        rank_bound: 2 * m - c_max - base.plus_set().len() as i64,
    })
}
