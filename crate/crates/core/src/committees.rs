//! Tope committees: predicates, constructions by reorientation and symmetric
//! cycles, minimality and criticality, and exhaustive enumeration.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num::{BigInt, Signed};

use crate::config::Limits;
use crate::error::{Error, Result};
use crate::linalg::Rational;
use crate::matroid::{OrientedMatroid, SignSet};
use crate::signvec::{ElementSet, Sign, SignVector};
use crate::topes::{symmetric_cycle_from_chain, MaximalChain, SymmetricCycle};

/// A set of topes together with its per-element positive counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Committee {
    m: usize,
    members: SignSet,
    counts: Vec<usize>,
}

impl Committee {
    pub fn new(m: usize, members: SignSet) -> Result<Self> {
        if let Some(x) = members.iter().find(|x| x.len() != m) {
            return Err(Error::domain(format!(
                "committee member {x} has length {} instead of {m}",
                x.len()
            )));
        }
        let counts = (1..=m)
            .map(|e| members.iter().filter(|k| k.get(e) == Sign::Plus).count())
            .collect();
        Ok(Committee { m, members, counts })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn members(&self) -> &SignSet {
        &self.members
    }

    pub fn into_members(self) -> SignSet {
        self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// `|{K : K(e) = +}|` for `e = 1..=m`.
    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn count(&self, e: usize) -> usize {
        self.counts[e - 1]
    }

    /// True when every element is positive on exactly `ceil(|K|/2)` members.
    pub fn is_balanced(&self) -> bool {
        let target = self.len().div_ceil(2);
        self.counts.iter().all(|&c| c == target)
    }

    pub fn contains_opposites(&self) -> bool {
        self.members.iter().any(|k| self.members.contains(&k.negate()))
    }

    pub fn to_text(&self) -> String {
        crate::format::write_committee(&self.members)
    }
}

impl fmt::Display for Committee {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Outcome of a committee check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommitteeClassification {
    pub is_committee: bool,
    pub is_minimal: Option<bool>,
    pub is_critical: Option<bool>,
    /// Element to how many more positive members it would need.
    pub deficiency: BTreeMap<usize, usize>,
    pub size: usize,
}

impl fmt::Display for CommitteeClassification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let opt = |b: Option<bool>| b.map_or("unknown".to_string(), |b| b.to_string());
        writeln!(f, "is_committee={}", self.is_committee)?;
        writeln!(f, "size={}", self.size)?;
        writeln!(f, "is_minimal={}", opt(self.is_minimal))?;
        writeln!(f, "is_critical={}", opt(self.is_critical))?;
        let d: Vec<String> = self.deficiency.iter().map(|(e, c)| format!("{e}:{c}")).collect();
        writeln!(f, "deficiency={}", d.join(","))
    }
}

/// The default committee threshold `1/2`.
pub fn one_half() -> Rational {
    Rational::new(BigInt::from(1), BigInt::from(2))
}

/// Checks `|{K : K(e) = +}| > p |K*|` for every element, exactly.
pub fn is_p_committee(om: &OrientedMatroid, k: &SignSet, p: &Rational) -> Result<CommitteeClassification> {
    if p.is_negative() || *p >= Rational::from_integer(BigInt::from(1)) {
        return Err(Error::domain(format!("threshold {p} outside [0,1)")));
    }
    for x in k {
        if !om.is_tope(x) {
            return Err(Error::Membership {
                vector: x.to_string(),
                family: "the tope set".into(),
            });
        }
    }
    let committee = Committee::new(om.m(), k.clone())?;
    let n = BigInt::from(k.len());
    // count * denom > numer * n  <=>  count >= floor(numer * n / denom) + 1
    let needed = (p.numer() * &n) / p.denom() + BigInt::from(1);
    let mut deficiency = BTreeMap::new();
    for e in 1..=om.m() {
        let count = BigInt::from(committee.count(e));
        if count.clone() * p.denom() <= p.numer() * &n {
            let short: BigInt = &needed - &count;
            deficiency.insert(e, usize::try_from(short).unwrap_or(usize::MAX));
        }
    }
    let is_committee = !k.is_empty() && deficiency.is_empty();
    Ok(CommitteeClassification {
        is_committee,
        is_minimal: None,
        is_critical: None,
        deficiency,
        size: k.len(),
    })
}

/// Tope committee at the default threshold `1/2`.
pub fn is_committee(om: &OrientedMatroid, k: &SignSet) -> Result<bool> {
    Ok(is_p_committee(om, k, &one_half())?.is_committee)
}

/// Fast majority test on bare vectors: strictly more than half positive at every element.
fn majority_holds(m: usize, members: &[SignVector]) -> bool {
    if members.is_empty() {
        return false;
    }
    let half = members.len();
    (1..=m).all(|e| 2 * members.iter().filter(|k| k.get(e) == Sign::Plus).count() > half)
}

/// Members of `p` whose positive parts are inclusion-maximal.
pub fn maxplus(p: &SignSet) -> SignSet {
    let parts: BTreeSet<ElementSet> = p.iter().map(|x| x.plus_set()).collect();
    p.iter()
        .filter(|x| {
            let s = x.plus_set();
            !parts.iter().any(|t| s.is_proper_subset(*t))
        })
        .copied()
        .collect()
}

/// Members of `p` whose positive parts are inclusion-minimal.
pub fn minplus(p: &SignSet) -> SignSet {
    let parts: BTreeSet<ElementSet> = p.iter().map(|x| x.plus_set()).collect();
    p.iter()
        .filter(|x| {
            let s = x.plus_set();
            !parts.iter().any(|t| t.is_proper_subset(s))
        })
        .copied()
        .collect()
}

/// `max^+(V(R))` for a symmetric cycle `R` of a simple matroid.
pub fn cycle_committee(om: &OrientedMatroid, r: &SymmetricCycle) -> Result<Committee> {
    om.require_simple()?;
    let r = SymmetricCycle::validate(om, r.topes().to_vec())?;
    Committee::new(om.m(), maxplus(&r.vertices()))
}

/// Whether the matroid has rank 2. Tope-only input is decided by the tope graph
/// being a single cycle, which for simple matroids happens exactly in rank 2.
pub fn is_rank_two(om: &OrientedMatroid) -> bool {
    match om.rank() {
        Some(r) => r == 2,
        None => {
            let topes = om.topes();
            topes.len() == 2 * om.m()
                && om.m() >= 2
                && topes.iter().all(|t| {
                    (1..=om.m())
                        .filter(|&e| topes.contains(&t.flip(ElementSet::singleton(e))))
                        .count()
                        == 2
                })
        }
    }
}

fn require_acyclic_simple(n0: &OrientedMatroid) -> Result<()> {
    n0.require_simple()?;
    if !n0.is_acyclic() {
        return Err(Error::precondition("the starting matroid must be acyclic"));
    }
    Ok(())
}

/// Committee for `₋{j_1} ... ₋{j_s} N0`, built step by step from `{T^(+)}`.
///
/// The working committee is scanned in canonical order at each step. When no member
/// meets the reorientation condition, the unique pair of topes of the previous
/// reorientation that is negative on `j_i` and swapped by flipping `j_i` is added.
pub fn alg1_rank2(n0: &OrientedMatroid, seq: &[usize]) -> Result<Committee> {
    require_acyclic_simple(n0)?;
    if !is_rank_two(n0) {
        return Err(Error::precondition("the matroid does not have rank 2"));
    }
    if seq.is_empty() {
        return Err(Error::domain("the reorientation sequence is empty"));
    }
    let m = n0.m();
    if let Some(&j) = seq.iter().find(|&&j| j == 0 || j > m) {
        return Err(Error::domain(format!("element {j} outside ground set [1,{m}]")));
    }
    let mut topes: SignSet = n0.topes().clone();
    let mut previous: SignSet = [SignVector::all_plus(m)].into_iter().collect();
    for &j in seq {
        let flip_j = ElementSet::singleton(j);
        let mut current: Vec<SignVector> = Vec::new();
        let mut found = false;
        while let Some(k) = previous.iter().next().copied() {
            let cond = k.get(j) == Sign::Plus && topes.contains(&k.negate().flip(flip_j));
            if cond {
                found = true;
                let partner = previous
                    .iter()
                    .copied()
                    .find(|s| s.get(j) == Sign::Plus && s.flip(flip_j) == k.negate());
                match partner {
                    Some(s) => {
                        previous.remove(&s);
                    }
                    None => current.push(k),
                }
            } else {
                current.push(k.flip(flip_j));
            }
            previous.remove(&k);
        }
        if !found {
            let mut pairs: BTreeSet<(SignVector, SignVector)> = BTreeSet::new();
            for t in topes.iter().filter(|t| t.get(j) == Sign::Minus) {
                let u = t.flip(flip_j).negate();
                if u != *t && topes.contains(&u) {
                    pairs.insert((*t.min(&u), *t.max(&u)));
                }
            }
            if pairs.len() != 1 {
                return Err(Error::precondition(format!(
                    "expected a unique tope pair negative on {j}, found {}",
                    pairs.len()
                )));
            }
            let (a, b) = pairs.into_iter().next().expect("one pair");
            current.push(a.flip(flip_j));
            current.push(b.flip(flip_j));
        }
        let next: SignSet = current.iter().copied().collect();
        if next.len() != current.len() {
            return Err(Error::precondition("the construction produced a repeated tope"));
        }
        previous = next;
        topes = topes.iter().map(|t| t.flip(flip_j)).collect();
    }
    Committee::new(m, previous)
}

/// Result of the chain-based construction for a general reorientation sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReorientationCommittee {
    pub committee: Committee,
    /// `relabel[e - 1]` is the position element `e` received internally.
    pub relabel: Vec<usize>,
}

fn strip_opposites(members: &mut Vec<SignVector>) {
    loop {
        let hit = (0..members.len()).find_map(|i| {
            let neg = members[i].negate();
            members[i + 1..]
                .iter()
                .position(|t| *t == neg)
                .map(|d| (i, i + 1 + d))
        });
        match hit {
            Some((i, j)) => {
                members.remove(j);
                members.remove(i);
            }
            None => break,
        }
    }
}

fn chain_committee_core(chain: &MaximalChain, s: usize, eager: bool) -> Result<Vec<SignVector>> {
    let m = chain.m();
    let mut k: Vec<SignVector> = vec![SignVector::all_plus(m)];
    for i in 1..=s {
        k = k.iter().map(|x| x.flip(ElementSet::singleton(i))).collect();
        let pos = chain
            .position_of(i)
            .ok_or_else(|| Error::precondition(format!("label {i} missing from the chain")))?;
        let r = chain.tope(pos);
        k.push(r.flip(ElementSet::interval(1, i)));
        k.push(r.flip(ElementSet::interval(i, m)));
        if eager {
            strip_opposites(&mut k);
        }
    }
    strip_opposites(&mut k);
    Ok(k)
}

fn chain_committee(n0: &OrientedMatroid, chain: &MaximalChain, seq: &[usize], eager: bool) -> Result<ReorientationCommittee> {
    require_acyclic_simple(n0)?;
    let m = n0.m();
    let chain = MaximalChain::validate(n0, chain.topes().to_vec())?;
    if chain.base() != SignVector::all_plus(m) {
        return Err(Error::precondition("the chain must start at the positive tope"));
    }
    let s = seq.len();
    if s == 0 || s > m {
        return Err(Error::domain(format!("number of reorientations {s} outside [1,{m}]")));
    }
    let mut relabel = vec![0usize; m];
    for (pos, &e) in seq.iter().enumerate() {
        if e == 0 || e > m {
            return Err(Error::domain(format!("element {e} outside ground set [1,{m}]")));
        }
        if relabel[e - 1] != 0 {
            return Err(Error::domain(format!("element {e} repeated in the sequence")));
        }
        relabel[e - 1] = pos + 1;
    }
    let mut next = s;
    for slot in relabel.iter_mut() {
        if *slot == 0 {
            next += 1;
            *slot = next;
        }
    }
    let mut inverse = vec![0usize; m];
    for (e, &p) in relabel.iter().enumerate() {
        inverse[p - 1] = e + 1;
    }
    let relabelled = chain.permute(&relabel);
    let members = chain_committee_core(&relabelled, s, eager)?;
    let set: SignSet = members.iter().map(|x| x.permute(&inverse)).collect();
    if set.len() != members.len() {
        return Err(Error::precondition("the construction produced a repeated tope"));
    }
    Ok(ReorientationCommittee {
        committee: Committee::new(m, set)?,
        relabel,
    })
}

/// Committee for `₋[1,s] N0` from a maximal chain at `T^(+)`, stripping opposite
/// pairs after every step.
pub fn alg3(n0: &OrientedMatroid, chain: &MaximalChain, s: usize) -> Result<Committee> {
    let m = n0.m();
    if s == 0 || s > m {
        return Err(Error::domain(format!("s = {s} outside [1,{m}]")));
    }
    let seq: Vec<usize> = (1..=s).collect();
    Ok(chain_committee(n0, chain, &seq, true)?.committee)
}

/// As [`alg3`], stripping opposite pairs only once at the end.
pub fn alg4(n0: &OrientedMatroid, chain: &MaximalChain, s: usize) -> Result<Committee> {
    let m = n0.m();
    if s == 0 || s > m {
        return Err(Error::domain(format!("s = {s} outside [1,{m}]")));
    }
    let seq: Vec<usize> = (1..=s).collect();
    Ok(chain_committee(n0, chain, &seq, false)?.committee)
}

/// Committee for `₋{seq} N0` for any sequence of distinct elements. Elements are
/// relabelled internally so that `seq` becomes `1, 2, ..., s`.
pub fn alg3_sequence(n0: &OrientedMatroid, chain: &MaximalChain, seq: &[usize]) -> Result<ReorientationCommittee> {
    chain_committee(n0, chain, seq, true)
}

/// Checks minimality by scanning every proper subset, and criticality by the
/// positive-part-shrinking swaps.
pub fn classify_committee(om: &OrientedMatroid, k: &SignSet) -> Result<CommitteeClassification> {
    classify_committee_with(om, k, &Limits::default())
}

pub fn classify_committee_with(om: &OrientedMatroid, k: &SignSet, limits: &Limits) -> Result<CommitteeClassification> {
    let mut c = is_p_committee(om, k, &one_half())?;
    if !c.is_committee {
        return Ok(c);
    }
    if k.len() > limits.max_subset_members {
        return Err(Error::resource(format!(
            "{} members exceed the exhaustive subset cap of {}",
            k.len(),
            limits.max_subset_members
        )));
    }
    let members: Vec<SignVector> = k.iter().copied().collect();
    let n = members.len();
    let m = om.m();
    let full: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut minimal = true;
    let mut subset: Vec<SignVector> = Vec::with_capacity(n);
    for mask in 1..full {
        subset.clear();
        subset.extend((0..n).filter(|i| mask & (1 << i) != 0).map(|i| members[i]));
        if majority_holds(m, &subset) {
            minimal = false;
            break;
        }
    }
    c.is_minimal = Some(minimal);
    if !minimal {
        c.is_critical = Some(false);
        return Ok(c);
    }
    let mut critical = true;
    'outer: for (i, x) in members.iter().enumerate() {
        for t in om.topes() {
            if !t.plus_set().is_proper_subset(x.plus_set()) {
                continue;
            }
            let mut swapped: SignSet = members
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, y)| *y)
                .collect();
            swapped.insert(*t);
            let list: Vec<SignVector> = swapped.into_iter().collect();
            if majority_holds(m, &list) {
                critical = false;
                break 'outer;
            }
        }
    }
    c.is_critical = Some(critical);
    Ok(c)
}

/// Layer test: `|K ∩ T_e^+| >= ceil((k+1)/2)` for every element, with `k = |K|`.
pub fn in_layer(om: &OrientedMatroid, k: &SignSet) -> Result<bool> {
    if k.is_empty() {
        return Ok(false);
    }
    let need = (k.len() + 2) / 2;
    for e in 1..=om.m() {
        let half = om.positive_halfspace(e)?;
        if k.intersection(&half).count() < need {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Backtracking over `k`-subsets of the topes (in canonical order) satisfying the
/// layer condition.
struct LayerSearch<'a> {
    topes: &'a [SignVector],
    negation: Vec<usize>,
    k: usize,
    max_negative: usize,
    no_opposites: bool,
    budget: u64,
    nodes: u64,
    first_only: bool,
    chosen: Vec<usize>,
    taken: Vec<bool>,
    negatives: Vec<usize>,
    out: Vec<Vec<usize>>,
    skip_supersets_of: &'a [Vec<usize>],
}

impl LayerSearch<'_> {
    fn run(&mut self, start: usize) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::resource(format!(
                "committee search exceeded {} nodes at size {}",
                self.budget, self.k
            )));
        }
        if self.chosen.len() == self.k {
            if !self.skip_supersets_of.iter().any(|f| is_sorted_subset(f, &self.chosen)) {
                self.out.push(self.chosen.clone());
            }
            return Ok(());
        }
        let remaining = self.k - self.chosen.len();
        for i in start..self.topes.len() {
            if self.topes.len() - i < remaining {
                break;
            }
            if self.no_opposites && self.taken[self.negation[i]] {
                continue;
            }
            let t = self.topes[i];
            let minus = t.minus_set();
            if minus.iter().any(|e| self.negatives[e - 1] + 1 > self.max_negative) {
                continue;
            }
            for e in minus.iter() {
                self.negatives[e - 1] += 1;
            }
            self.chosen.push(i);
            self.taken[i] = true;
            let r = self.run(i + 1);
            self.taken[i] = false;
            self.chosen.pop();
            for e in minus.iter() {
                self.negatives[e - 1] -= 1;
            }
            r?;
            if self.first_only && !self.out.is_empty() {
                return Ok(());
            }
        }
        Ok(())
    }
}

fn is_sorted_subset(small: &[usize], big: &[usize]) -> bool {
    let mut it = big.iter();
    small.iter().all(|x| it.any(|y| y == x))
}

fn search_layer(
    om: &OrientedMatroid,
    k: usize,
    limits: &Limits,
    no_opposites: bool,
    first_only: bool,
    skip_supersets_of: &[Vec<usize>],
) -> Result<Vec<Vec<usize>>> {
    let topes: Vec<SignVector> = om.topes().iter().copied().collect();
    if topes.len() > limits.max_topes {
        return Err(Error::resource(format!(
            "{} topes exceed the enumeration cap of {}",
            topes.len(),
            limits.max_topes
        )));
    }
    if k == 0 || k > topes.len() {
        return Ok(Vec::new());
    }
    let negation = topes
        .iter()
        .map(|t| topes.binary_search(&t.negate()).unwrap_or(usize::MAX))
        .map(|i| if i == usize::MAX { topes.len() } else { i })
        .collect();
    let need = (k + 2) / 2;
    // The extra slot stands for a missing negation.
    let taken = vec![false; topes.len() + 1];
    let mut search = LayerSearch {
        topes: &topes,
        negation,
        k,
        max_negative: k - need,
        no_opposites,
        budget: limits.search_nodes,
        nodes: 0,
        first_only,
        chosen: Vec::with_capacity(k),
        taken,
        negatives: vec![0; om.m()],
        out: Vec::new(),
        skip_supersets_of,
    };
    search.run(0)?;
    Ok(search.out)
}

fn indices_to_set(om: &OrientedMatroid, idx: &[usize]) -> SignSet {
    let topes: Vec<&SignVector> = om.topes().iter().collect();
    idx.iter().map(|&i| *topes[i]).collect()
}

/// All `k`-subsets of topes that are committees.
pub fn enumerate_committees(om: &OrientedMatroid, k: usize, limits: &Limits) -> Result<Vec<SignSet>> {
    let found = search_layer(om, k, limits, false, false, &[])?;
    Ok(found.iter().map(|idx| indices_to_set(om, idx)).collect())
}

/// Inclusion-minimal committees of every size.
///
/// Minimal committees never contain two opposite topes, since removing such a pair
/// keeps every strict majority, so sizes above `|T|/2` need not be searched.
pub fn minimal_committees(om: &OrientedMatroid, limits: &Limits) -> Result<Vec<SignSet>> {
    let mut found: Vec<Vec<usize>> = Vec::new();
    for k in 1..=om.topes().len() / 2 {
        let layer = search_layer(om, k, limits, true, false, &found)?;
        found.extend(layer);
    }
    let mut out: Vec<SignSet> = found.iter().map(|idx| indices_to_set(om, idx)).collect();
    out.sort();
    Ok(out)
}

/// Result of the minimum-committee search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimumCommittee {
    pub committee: Committee,
    /// Smallest odd size with a committee, if one exists within `|T|/2`.
    pub smallest_odd: Option<usize>,
    /// Smallest even size with a committee below `smallest_odd`, if any.
    pub smallest_even_below: Option<usize>,
}

/// A committee of smallest size, searching odd sizes first and then the even sizes below.
pub fn minimum_committee(om: &OrientedMatroid, limits: &Limits) -> Result<MinimumCommittee> {
    om.require_simple()?;
    let half = om.topes().len() / 2;
    let mut best: Option<(usize, Vec<usize>)> = None;
    for k in (1..=half).step_by(2) {
        if let Some(idx) = search_layer(om, k, limits, true, true, &[])?.into_iter().next() {
            best = Some((k, idx));
            break;
        }
    }
    let smallest_odd = best.as_ref().map(|(k, _)| *k);
    let even_limit = smallest_odd.unwrap_or(half + 1);
    let mut smallest_even_below = None;
    for k in (2..even_limit).step_by(2) {
        if let Some(idx) = search_layer(om, k, limits, true, true, &[])?.into_iter().next() {
            smallest_even_below = Some(k);
            best = Some((k, idx));
            break;
        }
    }
    let (_, idx) = best.ok_or_else(|| Error::precondition("the matroid has no tope committee"))?;
    Ok(MinimumCommittee {
        committee: Committee::new(om.m(), indices_to_set(om, &idx))?,
        smallest_odd,
        smallest_even_below,
    })
}

/// Size bounds for the chain-based construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub m: usize,
    pub s: usize,
    pub size: usize,
    /// `m` for odd `m`, `m - 1` for even `m`.
    pub parity_bound: usize,
    /// `1 + 2s`, applicable when `s <= floor(m/2)`.
    pub small_s_bound: Option<usize>,
    pub holds: bool,
}

impl fmt::Display for BoundReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "m={}", self.m)?;
        writeln!(f, "s={}", self.s)?;
        writeln!(f, "size={}", self.size)?;
        writeln!(f, "parity_bound={}", self.parity_bound)?;
        match self.small_s_bound {
            Some(b) => writeln!(f, "small_s_bound={b}")?,
            None => writeln!(f, "small_s_bound=none")?,
        }
        writeln!(f, "holds={}", self.holds)
    }
}

/// Checks the size bounds for the committee of `₋[1,s] N0` built from `chain`.
pub fn bound_check(n0: &OrientedMatroid, chain: &MaximalChain, s: usize) -> Result<BoundReport> {
    let k = alg3(n0, chain, s)?;
    let m = n0.m();
    let parity_bound = if m % 2 == 1 { m } else { m - 1 };
    let small_s_bound = (s <= m / 2).then_some(1 + 2 * s);
    let size = k.len();
    let holds = size <= parity_bound && small_s_bound.is_none_or(|b| size <= b);
    Ok(BoundReport {
        m,
        s,
        size,
        parity_bound,
        small_s_bound,
        holds,
    })
}

/// The symmetric cycle of `chain` reoriented on `[1, s]`.
pub fn reoriented_cycle(chain: &MaximalChain, s: usize) -> Result<SymmetricCycle> {
    Ok(symmetric_cycle_from_chain(chain)?.reorient(ElementSet::interval(1, s)))
}
