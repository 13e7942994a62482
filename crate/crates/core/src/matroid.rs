//! Oriented matroids given by topes, covectors or an exact rational realization.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use itertools::Itertools;
use num::Zero;

use crate::config::Limits;
use crate::error::{Error, Result};
use crate::linalg::{self, Rational};
use crate::signvec::{ElementSet, Sign, SignVector};

/// Sign vectors kept in canonical order.
pub type SignSet = BTreeSet<SignVector>;

/// Row vectors of a central hyperplane arrangement: row `e` is the normal of hyperplane `e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Realization {
    rows: Vec<Vec<Rational>>,
    dim: usize,
}

impl Realization {
    pub fn new(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let dim = rows.first().map(Vec::len).unwrap_or(0);
        if dim == 0 {
            return Err(Error::domain("a realization needs at least one row of positive dimension"));
        }
        if let Some(i) = rows.iter().position(|r| r.len() != dim) {
            return Err(Error::domain(format!(
                "row {} has dimension {} instead of {dim}",
                i + 1,
                rows[i].len()
            )));
        }
        Ok(Realization { rows, dim })
    }

    pub fn from_integers(rows: &[&[i64]]) -> Result<Self> {
        Realization::new(rows.iter().map(|r| linalg::int_vec(r)).collect())
    }

    /// Number of elements (rows).
    pub fn m(&self) -> usize {
        self.rows.len()
    }

    /// Ambient dimension.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    /// Row of element `e` (1-based).
    pub fn row(&self, e: usize) -> &[Rational] {
        &self.rows[e - 1]
    }

    pub fn rank(&self) -> usize {
        linalg::rank(&self.rows, self.dim)
    }

    /// Rank of the rows indexed by `a`.
    pub fn rank_of(&self, a: ElementSet) -> usize {
        let sub: Vec<Vec<Rational>> = a.iter().map(|e| self.rows[e - 1].clone()).collect();
        linalg::rank(&sub, self.dim)
    }

    /// Negates the rows indexed by `a`.
    pub fn reorient(&self, a: ElementSet) -> Self {
        let rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, r)| {
                if a.contains(i + 1) {
                    r.iter().map(|x| -x.clone()).collect()
                } else {
                    r.clone()
                }
            })
            .collect();
        Realization { rows, dim: self.dim }
    }

    /// Drops the rows indexed by `a`.
    pub fn delete(&self, a: ElementSet) -> Self {
        let rows = self
            .rows
            .iter()
            .enumerate()
            .filter(|(i, _)| !a.contains(i + 1))
            .map(|(_, r)| r.clone())
            .collect();
        Realization { rows, dim: self.dim }
    }

    /// Appends one more row.
    pub fn with_row(&self, row: Vec<Rational>) -> Result<Self> {
        if row.len() != self.dim {
            return Err(Error::domain(format!(
                "row has dimension {} instead of {}",
                row.len(),
                self.dim
            )));
        }
        let mut rows = self.rows.clone();
        rows.push(row);
        Ok(Realization { rows, dim: self.dim })
    }

    /// Sign vector `(sign <x, row_e>)_e`.
    pub fn evaluate(&self, x: &[Rational]) -> SignVector {
        let signs: Vec<Sign> = self
            .rows
            .iter()
            .map(|r| linalg::sign_of(&linalg::dot(r, x)))
            .collect();
        SignVector::from_signs(&signs).expect("row count checked at construction")
    }

    /// Gale dual: the rows of a basis of the linear dependencies among the rows.
    pub fn gale_dual(&self) -> Result<Self> {
        let deps = linalg::nullspace(&linalg::transpose(&self.rows, self.dim), self.m());
        if deps.is_empty() {
            return Err(Error::precondition(
                "rows are linearly independent; the dual has rank 0",
            ));
        }
        let rows = (0..self.m())
            .map(|e| deps.iter().map(|d| d[e].clone()).collect())
            .collect();
        Realization::new(rows)
    }
}

/// Axioms and structural conditions a validation can cite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axiom {
    L0,
    L1,
    L2,
    L3,
    C0,
    C1,
    C2,
    C3,
    UniformLength,
    NonEmpty,
    NegationClosure,
    UniformSupport,
    Localization,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::L0 => "L0",
            Axiom::L1 => "L1",
            Axiom::L2 => "L2",
            Axiom::L3 => "L3",
            Axiom::C0 => "C0",
            Axiom::C1 => "C1",
            Axiom::C2 => "C2",
            Axiom::C3 => "C3",
            Axiom::UniformLength => "uniform-length",
            Axiom::NonEmpty => "non-empty",
            Axiom::NegationClosure => "negation-closure",
            Axiom::UniformSupport => "uniform-support",
            Axiom::Localization => "localization",
        };
        f.write_str(s)
    }
}

/// One failed axiom instance with the sign vectors that witness it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub axiom: Axiom,
    pub witnesses: Vec<SignVector>,
    pub element: Option<usize>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "violation={}", self.axiom)?;
        if !self.witnesses.is_empty() {
            write!(f, " witnesses={}", self.witnesses.iter().join(","))?;
        }
        if let Some(e) = self.element {
            write!(f, " element={e}")?;
        }
        Ok(())
    }
}

/// Outcome of an axiom check. `ok()` holds exactly when no violation was found.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
    /// Set when more violations existed than were recorded.
    pub truncated: bool,
}

const MAX_RECORDED_VIOLATIONS: usize = 256;

impl ValidationReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub(crate) fn push(&mut self, axiom: Axiom, witnesses: Vec<SignVector>, element: Option<usize>) {
        if self.violations.len() >= MAX_RECORDED_VIOLATIONS {
            self.truncated = true;
        } else {
            self.violations.push(Violation {
                axiom,
                witnesses,
                element,
            });
        }
    }

    /// True when some recorded violation cites `axiom` with exactly these witnesses and element.
    pub fn cites(&self, axiom: Axiom, witnesses: &[SignVector], element: Option<usize>) -> bool {
        self.violations.iter().any(|v| {
            v.axiom == axiom && v.witnesses.as_slice() == witnesses && v.element == element
        })
    }

    pub fn into_result(self) -> Result<()> {
        if self.ok() {
            Ok(())
        } else {
            Err(Error::Validation(self))
        }
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ok={}", self.ok())?;
        writeln!(f, "violations={}", self.violations.len())?;
        for v in &self.violations {
            writeln!(f, "{v}")?;
        }
        if self.truncated {
            writeln!(f, "truncated=true")?;
        }
        Ok(())
    }
}

fn check_uniform_length<'a>(
    family: impl IntoIterator<Item = &'a SignVector>,
    report: &mut ValidationReport,
) -> Option<usize> {
    let mut it = family.into_iter();
    let first = it.next()?;
    let mut ok = true;
    for x in it {
        if x.len() != first.len() {
            report.push(Axiom::UniformLength, vec![*first, *x], None);
            ok = false;
        }
    }
    ok.then_some(first.len())
}

/// Checks covector axioms L0 to L3 by direct iteration over `l`.
pub fn validate_covector_axioms(l: &SignSet) -> ValidationReport {
    let mut report = ValidationReport::default();
    let Some(m) = check_uniform_length(l, &mut report) else {
        if l.is_empty() {
            report.push(Axiom::L0, vec![], None);
        }
        return report;
    };
    let zero = SignVector::zero(m);
    if !l.contains(&zero) {
        report.push(Axiom::L0, vec![zero], None);
    }
    for x in l {
        if !l.contains(&x.negate()) {
            report.push(Axiom::L1, vec![*x], None);
        }
    }
    let members: Vec<SignVector> = l.iter().copied().collect();
    for x in &members {
        for y in &members {
            if !l.contains(&x.comp(y)) {
                report.push(Axiom::L2, vec![*x, *y], None);
            }
        }
    }
    let full = ElementSet::full(m).bits();
    for (i, x) in members.iter().enumerate() {
        for y in &members[i + 1..] {
            let s = x.sep(y);
            if s.is_empty() {
                continue;
            }
            let xy = x.comp(y);
            let off = full & !s.bits();
            let mut covered = ElementSet::empty();
            for z in &members {
                let agrees = (z.plus_set().bits() ^ xy.plus_set().bits()) & off == 0
                    && (z.minus_set().bits() ^ xy.minus_set().bits()) & off == 0;
                if agrees {
                    covered = covered.union(z.zero_set().intersection(s));
                    if covered == s {
                        break;
                    }
                }
            }
            for e in s.difference(covered).iter() {
                report.push(Axiom::L3, vec![*x, *y], Some(e));
            }
        }
    }
    report
}

/// Checks circuit axioms C0 to C3. Cocircuit families have the same axioms.
pub fn validate_circuit_axioms(c: &SignSet) -> ValidationReport {
    let mut report = ValidationReport::default();
    let Some(_) = check_uniform_length(c, &mut report) else {
        return report;
    };
    for x in c {
        if x.is_zero() {
            report.push(Axiom::C0, vec![*x], None);
        }
        if !c.contains(&x.negate()) {
            report.push(Axiom::C1, vec![*x], None);
        }
    }
    let members: Vec<SignVector> = c.iter().copied().collect();
    for x in &members {
        for y in &members {
            if x != y
                && *x != y.negate()
                && !x.is_zero()
                && x.support().is_subset(y.support())
            {
                report.push(Axiom::C2, vec![*x, *y], None);
            }
        }
    }
    for x in &members {
        for y in &members {
            if *x == y.negate() {
                continue;
            }
            let candidates = x.plus_set().intersection(y.minus_set());
            if candidates.is_empty() {
                continue;
            }
            let plus = x.plus_set().union(y.plus_set());
            let minus = x.minus_set().union(y.minus_set());
            for e in candidates.iter() {
                let allowed_plus = plus.difference(ElementSet::singleton(e));
                let allowed_minus = minus.difference(ElementSet::singleton(e));
                let found = members.iter().any(|z| {
                    z.plus_set().is_subset(allowed_plus) && z.minus_set().is_subset(allowed_minus)
                });
                if !found {
                    report.push(Axiom::C3, vec![*x, *y], Some(e));
                }
            }
        }
    }
    report
}

/// Members whose support is inclusion-maximal among all supports.
fn maximal_supports(family: &SignSet) -> SignSet {
    let supports: HashSet<ElementSet> = family.iter().map(|x| x.support()).collect();
    family
        .iter()
        .filter(|x| {
            let s = x.support();
            !supports.iter().any(|t| s.is_proper_subset(*t))
        })
        .copied()
        .collect()
}

/// Nonzero members whose support is inclusion-minimal among nonzero supports.
fn minimal_nonzero_supports(family: &SignSet) -> SignSet {
    let supports: HashSet<ElementSet> = family
        .iter()
        .filter(|x| !x.is_zero())
        .map(|x| x.support())
        .collect();
    family
        .iter()
        .filter(|x| {
            let s = x.support();
            !x.is_zero() && !supports.iter().any(|t| t.is_proper_subset(s))
        })
        .copied()
        .collect()
}

/// Length of a longest chain `0 < ... < x` inside `family`.
fn longest_chain_rank(family: &SignSet, x: &SignVector) -> usize {
    let mut below: Vec<SignVector> = family.iter().filter(|y| y.leq(x)).copied().collect();
    below.sort_by_key(|y| y.support().len());
    let mut rank: HashMap<SignVector, usize> = HashMap::with_capacity(below.len());
    for (i, y) in below.iter().enumerate() {
        let r = below[..i]
            .iter()
            .filter(|z| z.leq(y) && *z != y)
            .map(|z| rank[z] + 1)
            .max()
            .unwrap_or(0);
        rank.insert(*y, r);
    }
    rank.get(x).copied().unwrap_or(0)
}

/// Compose-closure of `generators ∪ {0}`.
fn compose_closure(generators: &SignSet, m: usize, cap: usize) -> Result<SignSet> {
    let gens: Vec<SignVector> = generators.iter().copied().collect();
    let mut all: HashSet<SignVector> = HashSet::new();
    all.insert(SignVector::zero(m));
    let mut frontier: Vec<SignVector> = Vec::new();
    for g in &gens {
        if all.insert(*g) {
            frontier.push(*g);
        }
    }
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for x in &frontier {
            for y in &gens {
                let z = x.comp(y);
                if all.insert(z) {
                    if all.len() > cap {
                        return Err(Error::resource(format!(
                            "covector closure exceeds {cap} vectors"
                        )));
                    }
                    next.push(z);
                }
            }
        }
        frontier = next;
    }
    Ok(all.into_iter().collect())
}

/// Where parallel / antiparallel pairs were detected.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    Covectors,
    Topes,
    Circuits,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::Covectors => "covectors",
            Provenance::Topes => "topes",
            Provenance::Circuits => "circuits",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructuralPredicates {
    pub acyclic: bool,
    /// `None` when neither circuits nor covectors are available.
    pub totally_cyclic: Option<bool>,
    pub totally_cyclic_provenance: Option<Provenance>,
    pub simple: bool,
    pub loops: ElementSet,
    pub parallel_pairs: Vec<(usize, usize)>,
    pub antiparallel_pairs: Vec<(usize, usize)>,
    pub pair_provenance: Provenance,
}

impl fmt::Display for StructuralPredicates {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pairs = |p: &[(usize, usize)]| p.iter().map(|(a, b)| format!("{a}:{b}")).join(",");
        writeln!(f, "acyclic={}", self.acyclic)?;
        match self.totally_cyclic {
            Some(b) => writeln!(f, "totally_cyclic={b}")?,
            None => writeln!(f, "totally_cyclic=unknown")?,
        }
        if let Some(p) = self.totally_cyclic_provenance {
            writeln!(f, "totally_cyclic_source={p}")?;
        }
        writeln!(f, "simple={}", self.simple)?;
        writeln!(f, "loops={}", self.loops.to_list())?;
        writeln!(f, "parallel_pairs={}", pairs(&self.parallel_pairs))?;
        writeln!(f, "antiparallel_pairs={}", pairs(&self.antiparallel_pairs))?;
        writeln!(f, "pair_source={}", self.pair_provenance)
    }
}

/// An oriented matroid on `E = [1, m]`, stored through its topes plus whatever
/// further data the constructor had access to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientedMatroid {
    m: usize,
    topes: SignSet,
    covectors: Option<SignSet>,
    cocircuits: Option<SignSet>,
    circuits: Option<SignSet>,
    realization: Option<Realization>,
    rank: Option<usize>,
}

impl OrientedMatroid {
    /// Builds the oriented matroid of a rational realization with default limits.
    pub fn from_realization(r: &Realization) -> Result<Self> {
        Self::from_realization_with(r, &Limits::default())
    }

    pub fn from_realization_with(r: &Realization, limits: &Limits) -> Result<Self> {
        let rank = r.rank();
        if rank < 2 {
            return Err(Error::precondition(format!(
                "realization has rank {rank}; rank at least 2 is required"
            )));
        }
        Self::realize(r, limits)
    }

    /// Realization without the rank-2 scope check (used for deletions and duals).
    pub(crate) fn realize(r: &Realization, limits: &Limits) -> Result<Self> {
        let m = r.m();
        if m > limits.max_elements {
            return Err(Error::resource(format!(
                "{m} elements exceed the cap of {}",
                limits.max_elements
            )));
        }
        let rank = r.rank();
        let cocircuits = realization_cocircuits(r, rank);
        let covectors = compose_closure(&cocircuits, m, limits.max_covectors)?;
        let topes = maximal_supports(&covectors);
        let circuits = realization_circuits(r, rank);
        Ok(OrientedMatroid {
            m,
            topes,
            covectors: Some(covectors),
            cocircuits: Some(cocircuits),
            circuits: Some(circuits),
            realization: Some(r.clone()),
            rank: Some(rank),
        })
    }

    /// Validates L0 to L3 and builds the matroid. Rank below 2 is rejected.
    pub fn from_covectors(l: &SignSet) -> Result<Self> {
        let om = Self::from_covectors_any_rank(l)?;
        let rank = om.rank.unwrap_or(0);
        if rank < 2 {
            return Err(Error::precondition(format!(
                "covector set has rank {rank}; rank at least 2 is required"
            )));
        }
        Ok(om)
    }

    pub(crate) fn from_covectors_any_rank(l: &SignSet) -> Result<Self> {
        validate_covector_axioms(l).into_result()?;
        Ok(Self::from_valid_covectors(l.clone(), None, None))
    }

    fn from_valid_covectors(
        covectors: SignSet,
        circuits: Option<SignSet>,
        realization: Option<Realization>,
    ) -> Self {
        let m = covectors.iter().next().map(|x| x.len()).unwrap_or(0);
        let topes = maximal_supports(&covectors);
        let cocircuits = minimal_nonzero_supports(&covectors);
        let rank = match &realization {
            Some(r) => r.rank(),
            None => topes
                .iter()
                .next()
                .map(|t| longest_chain_rank(&covectors, t))
                .unwrap_or(0),
        };
        OrientedMatroid {
            m,
            topes,
            covectors: Some(covectors),
            cocircuits: Some(cocircuits),
            circuits,
            realization,
            rank: Some(rank),
        }
    }

    /// Accepts a tope set after checking negation closure and uniform support.
    ///
    /// Untrusted tope lists are refused: deciding whether a bare tope set comes from an
    /// oriented matroid needs covectors or a realization.
    pub fn from_topes(t: &SignSet, trusted: bool) -> Result<Self> {
        let mut report = ValidationReport::default();
        if t.is_empty() {
            report.push(Axiom::NonEmpty, vec![], None);
            return Err(Error::Validation(report));
        }
        let Some(m) = check_uniform_length(t, &mut report) else {
            return Err(Error::Validation(report));
        };
        for x in t {
            if !t.contains(&x.negate()) {
                report.push(Axiom::NegationClosure, vec![*x], None);
            }
        }
        let first = *t.iter().next().expect("non-empty");
        for x in t {
            if x.support() != first.support() {
                report.push(Axiom::UniformSupport, vec![first, *x], None);
            }
        }
        report.into_result()?;
        if !trusted {
            return Err(Error::capability(
                "untrusted tope lists need an accompanying covector set or realization",
            ));
        }
        Ok(OrientedMatroid {
            m,
            topes: t.clone(),
            covectors: None,
            cocircuits: None,
            circuits: None,
            realization: None,
            rank: None,
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn ground_set(&self) -> ElementSet {
        ElementSet::full(self.m)
    }

    pub fn topes(&self) -> &SignSet {
        &self.topes
    }

    pub fn covectors(&self) -> Option<&SignSet> {
        self.covectors.as_ref()
    }

    pub fn cocircuits(&self) -> Option<&SignSet> {
        self.cocircuits.as_ref()
    }

    pub fn circuits(&self) -> Option<&SignSet> {
        self.circuits.as_ref()
    }

    pub fn realization(&self) -> Option<&Realization> {
        self.realization.as_ref()
    }

    /// Rank, when known. Tope-only input leaves it open.
    pub fn rank(&self) -> Option<usize> {
        self.rank
    }

    pub fn require_covectors(&self) -> Result<&SignSet> {
        self.covectors
            .as_ref()
            .ok_or_else(|| Error::capability("operation needs the covector set"))
    }

    pub fn require_cocircuits(&self) -> Result<&SignSet> {
        self.cocircuits
            .as_ref()
            .ok_or_else(|| Error::capability("operation needs the cocircuit set"))
    }

    pub fn require_circuits(&self) -> Result<&SignSet> {
        self.circuits
            .as_ref()
            .ok_or_else(|| Error::capability("operation needs the circuit set"))
    }

    pub fn require_realization(&self) -> Result<&Realization> {
        self.realization
            .as_ref()
            .ok_or_else(|| Error::capability("operation needs a realization"))
    }

    pub fn is_tope(&self, t: &SignVector) -> bool {
        self.topes.contains(t)
    }

    pub fn require_tope(&self, t: &SignVector) -> Result<()> {
        if self.is_tope(t) {
            Ok(())
        } else {
            Err(Error::Membership {
                vector: t.to_string(),
                family: "the tope set".into(),
            })
        }
    }

    /// `T^(+)` of this ground set.
    pub fn positive_tope(&self) -> SignVector {
        SignVector::all_plus(self.m)
    }

    pub fn is_acyclic(&self) -> bool {
        self.topes.contains(&self.positive_tope())
    }

    /// `₋A M`.
    pub fn reorient(&self, a: ElementSet) -> Result<Self> {
        a.check_within(self.m)?;
        let map = |s: &SignSet| -> SignSet { s.iter().map(|x| x.flip(a)).collect() };
        Ok(OrientedMatroid {
            m: self.m,
            topes: map(&self.topes),
            covectors: self.covectors.as_ref().map(map),
            cocircuits: self.cocircuits.as_ref().map(map),
            circuits: self.circuits.as_ref().map(map),
            realization: self.realization.as_ref().map(|r| r.reorient(a)),
            rank: self.rank,
        })
    }

    /// Deletion `M \ A`: covectors restricted to `E - A`.
    pub fn delete(&self, a: ElementSet) -> Result<Self> {
        a.check_within(self.m)?;
        let covectors = self.require_covectors()?;
        let keep = self.ground_set().difference(a);
        let restricted: SignSet = covectors
            .iter()
            .map(|x| x.restrict(keep).expect("keep lies inside the ground set"))
            .collect();
        let circuits = self.circuits.as_ref().map(|c| {
            c.iter()
                .filter(|x| x.support().is_disjoint(a))
                .map(|x| x.restrict(keep).expect("keep lies inside the ground set"))
                .collect()
        });
        let realization = self.realization.as_ref().map(|r| r.delete(a));
        Ok(Self::from_valid_covectors(restricted, circuits, realization))
    }

    /// Dual matroid, available for realizable input through the Gale transform.
    pub fn dual(&self) -> Result<Self> {
        let r = self.require_realization()?;
        Self::realize(&r.gale_dual()?, &Limits::default())
    }

    /// Loops: the zero set shared by all topes.
    pub fn loops(&self) -> ElementSet {
        self.topes
            .iter()
            .next()
            .map(|t| t.zero_set())
            .unwrap_or_default()
    }

    pub fn structural_predicates(&self) -> StructuralPredicates {
        let loops = self.loops();
        let (family, pair_provenance) = match &self.covectors {
            Some(l) => (l, Provenance::Covectors),
            None => (&self.topes, Provenance::Topes),
        };
        let mut parallel_pairs = Vec::new();
        let mut antiparallel_pairs = Vec::new();
        let live: Vec<usize> = self.ground_set().difference(loops).iter().collect();
        for (i, &e) in live.iter().enumerate() {
            for &f in &live[i + 1..] {
                if family.iter().all(|x| x.get(e) == x.get(f)) {
                    parallel_pairs.push((e, f));
                }
                if family.iter().all(|x| x.get(e) == -x.get(f)) {
                    antiparallel_pairs.push((e, f));
                }
            }
        }
        let (totally_cyclic, totally_cyclic_provenance) = if let Some(c) = &self.circuits {
            let covered = c
                .iter()
                .filter(|x| x.is_nonnegative())
                .fold(ElementSet::empty(), |acc, x| acc.union(x.support()));
            (Some(covered == self.ground_set()), Some(Provenance::Circuits))
        } else if let Some(l) = &self.covectors {
            let none = !l.iter().any(|x| x.is_nonnegative() && !x.is_zero());
            (Some(none), Some(Provenance::Covectors))
        } else {
            (None, None)
        };
        StructuralPredicates {
            acyclic: self.is_acyclic(),
            totally_cyclic,
            totally_cyclic_provenance,
            simple: loops.is_empty() && parallel_pairs.is_empty() && antiparallel_pairs.is_empty(),
            loops,
            parallel_pairs,
            antiparallel_pairs,
            pair_provenance,
        }
    }

    pub fn is_simple(&self) -> bool {
        self.structural_predicates().simple
    }

    /// Refuses non-simple matroids, naming a violating element or pair.
    pub fn require_simple(&self) -> Result<()> {
        let p = self.structural_predicates();
        if let Some(e) = p.loops.min_element() {
            return Err(Error::precondition(format!(
                "matroid is not simple: element {e} is a loop"
            )));
        }
        if let Some((e, f)) = p.parallel_pairs.first() {
            return Err(Error::precondition(format!(
                "matroid is not simple: elements {e} and {f} are parallel ({})",
                p.pair_provenance
            )));
        }
        if let Some((e, f)) = p.antiparallel_pairs.first() {
            return Err(Error::precondition(format!(
                "matroid is not simple: elements {e} and {f} are antiparallel ({})",
                p.pair_provenance
            )));
        }
        Ok(())
    }

    /// Positive halfspace `T_e^+`.
    pub fn positive_halfspace(&self, e: usize) -> Result<SignSet> {
        self.halfspace(e, Sign::Plus)
    }

    pub fn negative_halfspace(&self, e: usize) -> Result<SignSet> {
        self.halfspace(e, Sign::Minus)
    }

    fn halfspace(&self, e: usize, s: Sign) -> Result<SignSet> {
        if e == 0 || e > self.m {
            return Err(Error::domain(format!(
                "element {e} outside ground set [1,{}]",
                self.m
            )));
        }
        Ok(self.topes.iter().filter(|t| t.get(e) == s).copied().collect())
    }

    /// Poset rank of a covector in the big face lattice.
    pub fn face_rank(&self, x: &SignVector) -> Result<usize> {
        let l = self.require_covectors()?;
        if !l.contains(x) {
            return Err(Error::Membership {
                vector: x.to_string(),
                family: "the covector set".into(),
            });
        }
        let rank = longest_chain_rank(l, x);
        if let Some(r) = &self.realization {
            debug_assert_eq!(rank, r.rank() - r.rank_of(x.zero_set()));
        }
        Ok(rank)
    }

    /// Face ranks of all covectors at once.
    pub fn face_ranks(&self) -> Result<HashMap<SignVector, usize>> {
        let l = self.require_covectors()?;
        let mut order: Vec<SignVector> = l.iter().copied().collect();
        order.sort_by_key(|y| y.support().len());
        let mut rank: HashMap<SignVector, usize> = HashMap::with_capacity(order.len());
        for (i, y) in order.iter().enumerate() {
            let r = order[..i]
                .iter()
                .filter(|z| z.leq(y) && *z != y)
                .map(|z| rank[z] + 1)
                .max()
                .unwrap_or(0);
            rank.insert(*y, r);
        }
        Ok(rank)
    }

    /// Maximal vectors: maximal supports of the compose-closure of the circuits.
    pub fn maximal_vectors(&self) -> Result<SignSet> {
        let c = self.require_circuits()?;
        if c.is_empty() {
            return Ok(SignSet::new());
        }
        let closure = compose_closure(c, self.m, Limits::default().max_covectors)?;
        Ok(maximal_supports(&closure)
            .into_iter()
            .filter(|x| !x.is_zero())
            .collect())
    }
}

fn realization_cocircuits(r: &Realization, rank: usize) -> SignSet {
    let mut out = SignSet::new();
    if rank == 0 {
        return out;
    }
    for subset in (0..r.m()).combinations(rank - 1) {
        let rows: Vec<Vec<Rational>> = subset.iter().map(|&i| r.rows()[i].clone()).collect();
        if linalg::rank(&rows, r.dim()) != rank - 1 {
            continue;
        }
        for x in linalg::nullspace(&rows, r.dim()) {
            let y = r.evaluate(&x);
            if !y.is_zero() {
                out.insert(y);
                out.insert(y.negate());
                break;
            }
        }
    }
    out
}

fn realization_circuits(r: &Realization, rank: usize) -> SignSet {
    let m = r.m();
    let mut out = SignSet::new();
    for k in 1..=(rank + 1).min(m) {
        for subset in (0..m).combinations(k) {
            let cols: Vec<Vec<Rational>> = subset.iter().map(|&i| r.rows()[i].clone()).collect();
            let a = linalg::transpose(&cols, r.dim());
            let ns = linalg::nullspace(&a, k);
            if ns.len() != 1 || ns[0].iter().any(|c| c.is_zero()) {
                continue;
            }
            let mut signs = vec![Sign::Zero; m];
            for (j, &i) in subset.iter().enumerate() {
                signs[i] = linalg::sign_of(&ns[0][j]);
            }
            let c = SignVector::from_signs(&signs).expect("length checked");
            out.insert(c);
            out.insert(c.negate());
        }
    }
    out
}
