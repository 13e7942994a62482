//! Graphs whose odd cycles carry committees: the covering graph on topes, its
//! restrictions to symmetric cycles and to maximal positive parts, the covering
//! hypergraph, Kneser graphs and neighbourhood complexes.

use std::collections::BTreeSet;
use std::fmt;

use crate::committees::{is_committee, maxplus, Committee};
use crate::config::Limits;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matroid::{OrientedMatroid, SignSet};
use crate::signvec::{ElementSet, SignVector};
use crate::topes::{antichain_g, SymmetricCycle};

/// Which vertex set a covering graph lives on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoverKind {
    /// All topes.
    Gamma,
    /// The vertices of one symmetric cycle.
    CycleRestricted,
    /// Topes with inclusion-maximal positive parts.
    MaxplusRestricted,
}

impl fmt::Display for CoverKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CoverKind::Gamma => "gamma",
            CoverKind::CycleRestricted => "cycle_restricted",
            CoverKind::MaxplusRestricted => "maxplus_restricted",
        })
    }
}

/// Graph where `{T', T''}` is an edge iff `T'^+ ∪ T''^+ = E`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverGraph {
    pub kind: CoverKind,
    pub m: usize,
    pub graph: Graph<SignVector>,
    /// Set when the graph collapses to the single positive tope.
    pub degenerate: bool,
}

impl CoverGraph {
    pub fn vertices(&self) -> SignSet {
        self.graph.vertices().iter().copied().collect()
    }

    pub fn has_edge(&self, a: &SignVector, b: &SignVector) -> bool {
        self.graph.has_edge(a, b)
    }
}

/// The covering relation on positive parts.
pub fn covers(m: usize, a: &SignVector, b: &SignVector) -> bool {
    a.plus_set().union(b.plus_set()) == ElementSet::full(m)
}

fn cover_graph(m: usize, vertices: &SignSet, kind: CoverKind) -> CoverGraph {
    let graph = Graph::from_predicate(vertices.iter().copied(), |a, b| covers(m, a, b));
    CoverGraph {
        kind,
        m,
        graph,
        degenerate: false,
    }
}

/// Covering graph on all topes.
pub fn gamma(om: &OrientedMatroid) -> Result<CoverGraph> {
    om.require_simple()?;
    Ok(cover_graph(om.m(), om.topes(), CoverKind::Gamma))
}

/// Kneser graph of a set family: edges join disjoint members.
pub fn kneser(family: &BTreeSet<ElementSet>) -> Graph<ElementSet> {
    Graph::from_predicate(family.iter().copied(), |a, b| a.is_disjoint(*b))
}

/// Whether `T ↦ T^-` carries the covering graph onto the Kneser graph of negative parts.
pub fn gamma_is_kneser_of_negative_parts(g: &CoverGraph) -> bool {
    let family: BTreeSet<ElementSet> = g.graph.vertices().iter().map(|t| t.minus_set()).collect();
    if family.len() != g.graph.len() {
        return false;
    }
    let k = kneser(&family);
    let image: BTreeSet<(ElementSet, ElementSet)> = g
        .graph
        .edge_pairs()
        .into_iter()
        .map(|(a, b)| {
            let (x, y) = (a.minus_set(), b.minus_set());
            (x.min(y), x.max(y))
        })
        .collect();
    let kneser_edges: BTreeSet<(ElementSet, ElementSet)> = k.edge_pairs().into_iter().collect();
    image == kneser_edges
}

/// Vertex set of an odd cycle of `g`, checked to be a committee; `None` when `g` is bipartite.
pub fn odd_cycle_committee(om: &OrientedMatroid, g: &CoverGraph) -> Result<Option<Committee>> {
    let Some(cycle) = g.graph.odd_cycle() else {
        return Ok(None);
    };
    let members: SignSet = cycle.iter().map(|&i| *g.graph.vertex(i)).collect();
    if !is_committee(om, &members)? {
        return Err(Error::precondition(
            "odd cycle vertex set is not a committee; the graph was not built from this matroid",
        ));
    }
    Ok(Some(Committee::new(om.m(), members)?))
}

/// Covering graph on the vertices of a symmetric cycle.
pub fn cycle_graph_g(om: &OrientedMatroid, r: &SymmetricCycle) -> Result<CoverGraph> {
    om.require_simple()?;
    let r = SymmetricCycle::validate(om, r.topes().to_vec())?;
    let mut g = cover_graph(om.m(), &r.vertices(), CoverKind::CycleRestricted);
    g.degenerate = r.vertices().contains(&om.positive_tope());
    Ok(g)
}

/// The odd cycle through `max^+(V(R))` built from the cycle order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaxplusOddCycle {
    /// Vertices in cycle order, starting at the first maximal vertex of `R`.
    pub cycle: Vec<SignVector>,
    /// The edge family predicted from the positions of the maximal vertices on `R`.
    pub expected_edges: BTreeSet<(SignVector, SignVector)>,
    /// Whether the covering edges among the maximal vertices are exactly the predicted ones.
    pub edges_match: bool,
    /// Set when `R` passes through the positive tope and the cycle is a single vertex.
    pub degenerate: bool,
}

fn ordered(a: SignVector, b: SignVector) -> (SignVector, SignVector) {
    (a.min(b), a.max(b))
}

/// Builds the odd cycle on `max^+(V(R))`.
///
/// With `R` rotated so that `T^0` is maximal and the other maximal vertices at
/// positions `k_1 < ... < k_{2d}`, the edges are `{T^0, T^{k_d}}`, `{T^0, T^{k_{d+1}}}`,
/// `{T^{k_i}, T^{k_{d+i}}}` and `{T^{k_i}, T^{k_{d+i+1}}}` for `1 <= i < d`, and
/// `{T^{k_d}, T^{k_{2d}}}`.
pub fn odd_cycle_on_maxplus(r: &SymmetricCycle) -> MaxplusOddCycle {
    let m = r.m();
    let top = SignVector::all_plus(m);
    if r.topes().contains(&top) {
        return MaxplusOddCycle {
            cycle: vec![top],
            expected_edges: BTreeSet::new(),
            edges_match: true,
            degenerate: true,
        };
    }
    let best = maxplus(&r.vertices());
    let start = r
        .topes()
        .iter()
        .position(|t| best.contains(t))
        .expect("a finite set has maximal elements");
    let rotated = r.rotate(start);
    let t = rotated.topes();
    let ks: Vec<usize> = (0..t.len()).filter(|&k| best.contains(&t[k])).collect();
    let mut expected = BTreeSet::new();
    let mut cycle = Vec::new();
    let n = ks.len();
    if n % 2 == 1 && n >= 3 {
        let d = (n - 1) / 2;
        let v = |i: usize| t[ks[i]];
        expected.insert(ordered(v(0), v(d)));
        expected.insert(ordered(v(0), v(d + 1)));
        for i in 1..d {
            expected.insert(ordered(v(i), v(d + i)));
            expected.insert(ordered(v(i), v(d + i + 1)));
        }
        expected.insert(ordered(v(d), v(2 * d)));
        // Walk order: T^0, T^{k_{d+1}}, T^{k_1}, T^{k_{d+2}}, ..., T^{k_{2d}}, T^{k_d}.
        cycle.push(v(0));
        for i in 1..=d {
            cycle.push(v(d + i));
            cycle.push(v(i));
        }
    } else {
        cycle = ks.iter().map(|&k| t[k]).collect();
    }
    let actual: BTreeSet<(SignVector, SignVector)> = cover_graph(m, &best, CoverKind::CycleRestricted)
        .graph
        .edge_pairs()
        .into_iter()
        .collect();
    let edges_match = n % 2 == 1 && actual == expected;
    MaxplusOddCycle {
        cycle,
        expected_edges: expected,
        edges_match,
        degenerate: false,
    }
}

/// Covering graph on `max^+(T)`. For acyclic input this is the single positive tope,
/// flagged as degenerate.
pub fn gamma_maxplus(om: &OrientedMatroid) -> Result<CoverGraph> {
    om.require_simple()?;
    let mut g = cover_graph(om.m(), &maxplus(om.topes()), CoverKind::MaxplusRestricted);
    g.degenerate = om.is_acyclic();
    Ok(g)
}

/// Connectivity, biconnectivity and parity data of a covering graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureReport {
    pub kind: CoverKind,
    pub vertices: usize,
    pub edges: usize,
    pub connected: bool,
    pub min_degree: usize,
    pub bridges: Vec<(SignVector, SignVector)>,
    pub cutvertices: Vec<SignVector>,
    pub biconnected: bool,
    pub bipartite: bool,
    pub odd_girth: Option<usize>,
    /// Whether every vertex lies on some odd cycle.
    pub every_vertex_on_odd_cycle: bool,
    /// For a non-degenerate maximal-positive-part graph: connected, minimum degree at
    /// least two, no bridges and not bipartite.
    pub maxplus_guarantees: Option<bool>,
    pub degenerate: bool,
}

/// Analyses a covering graph.
pub fn structure_report(g: &CoverGraph) -> StructureReport {
    let graph = &g.graph;
    let low = graph.low_link();
    let min_degree = (0..graph.len()).map(|i| graph.degree(i)).min().unwrap_or(0);
    let connected = graph.is_connected();
    let bipartite = graph.is_bipartite();
    let bridges: Vec<(SignVector, SignVector)> = low
        .bridges
        .iter()
        .map(|&(a, b)| (*graph.vertex(a), *graph.vertex(b)))
        .collect();
    let cutvertices: Vec<SignVector> = low.cutvertices.iter().map(|&i| *graph.vertex(i)).collect();
    let maxplus_guarantees = (g.kind == CoverKind::MaxplusRestricted && !g.degenerate)
        .then_some(connected && min_degree >= 2 && bridges.is_empty() && !bipartite);
    StructureReport {
        kind: g.kind,
        vertices: graph.len(),
        edges: graph.edge_count(),
        connected,
        min_degree,
        biconnected: connected && graph.len() >= 3 && cutvertices.is_empty(),
        bridges,
        cutvertices,
        bipartite,
        odd_girth: graph.odd_girth(),
        every_vertex_on_odd_cycle: graph.odd_cycle_membership().iter().all(|&b| b),
        maxplus_guarantees,
        degenerate: g.degenerate,
    }
}

impl fmt::Display for StructureReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: &[String]| if v.is_empty() { "none".to_string() } else { v.join(",") };
        writeln!(f, "kind={}", self.kind)?;
        writeln!(f, "vertices={}", self.vertices)?;
        writeln!(f, "edges={}", self.edges)?;
        writeln!(f, "connected={}", self.connected)?;
        writeln!(f, "min_degree={}", self.min_degree)?;
        let bridges: Vec<String> = self.bridges.iter().map(|(a, b)| format!("{a}-{b}")).collect();
        writeln!(f, "bridges={}", list(&bridges))?;
        let cuts: Vec<String> = self.cutvertices.iter().map(|v| v.to_string()).collect();
        writeln!(f, "cutvertices={}", list(&cuts))?;
        writeln!(f, "biconnected={}", self.biconnected)?;
        writeln!(f, "bipartite={}", self.bipartite)?;
        match self.odd_girth {
            Some(g) => writeln!(f, "odd_girth={g}")?,
            None => writeln!(f, "odd_girth=none")?,
        }
        writeln!(f, "every_vertex_on_odd_cycle={}", self.every_vertex_on_odd_cycle)?;
        if let Some(ok) = self.maxplus_guarantees {
            writeln!(f, "maxplus_guarantees={ok}")?;
        }
        writeln!(f, "degenerate={}", self.degenerate)
    }
}

/// Facets of the neighbourhood complex: the inclusion-maximal vertex neighbourhoods.
pub fn neighborhood_complex<V: Ord + Clone>(g: &Graph<V>) -> Vec<BTreeSet<V>> {
    let hoods: BTreeSet<BTreeSet<V>> = g
        .vertices()
        .iter()
        .map(|v| g.neighborhood(v))
        .filter(|n| !n.is_empty())
        .collect();
    hoods
        .iter()
        .filter(|n| !hoods.iter().any(|o| o != *n && n.is_subset(o)))
        .cloned()
        .collect()
}

/// Inclusion-minimal subsets of `max^+(T)` whose positive parts cover the ground set.
pub fn xi_maxplus(om: &OrientedMatroid, limits: &Limits) -> Result<Vec<SignSet>> {
    om.require_simple()?;
    if om.is_acyclic() {
        return Err(Error::precondition("the matroid is acyclic"));
    }
    let vertices: Vec<SignVector> = maxplus(om.topes()).into_iter().collect();
    let n = vertices.len();
    if n > limits.max_subset_members {
        return Err(Error::resource(format!(
            "{n} maximal topes exceed the exhaustive subset cap of {}",
            limits.max_subset_members
        )));
    }
    let full = om.ground_set();
    let union_of = |mask: u64| {
        (0..n)
            .filter(|i| mask & (1 << i) != 0)
            .fold(ElementSet::empty(), |acc, i| acc.union(vertices[i].plus_set()))
    };
    let covering: Vec<u64> = (1u64..(1u64 << n)).filter(|&mask| union_of(mask) == full).collect();
    let covering_set: BTreeSet<u64> = covering.iter().copied().collect();
    let mut out: Vec<SignSet> = covering
        .iter()
        .filter(|&&mask| {
            (0..n)
                .filter(|i| mask & (1 << i) != 0)
                .all(|i| !covering_set.contains(&(mask & !(1 << i))))
        })
        .map(|&mask| {
            (0..n)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| vertices[i])
                .collect()
        })
        .collect();
    out.sort();
    Ok(out)
}

/// Whether the witnesses `R'`, `S'` of the cutvertex criterion exist for a 2-path `(R, B, S)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutvertexHypothesis {
    pub witnesses: Option<(SignVector, SignVector)>,
}

/// Searches topes `R', S' != -B` with `R'^+ ⊆ R^+`, `S'^+ ⊆ S^+`,
/// `B^+ ∪ R'^+ = B^+ ∪ S'^+ = E` and `R'^+ ∩ B^+ ∩ S'^+ = ∅`.
pub fn cutvertex_hypothesis(
    om: &OrientedMatroid,
    path: (&SignVector, &SignVector, &SignVector),
) -> Result<CutvertexHypothesis> {
    let (r, b, s) = path;
    let g = gamma_maxplus(om)?;
    if !(g.has_edge(r, b) && g.has_edge(b, s)) || r == s {
        return Err(Error::precondition(format!(
            "({r}, {b}, {s}) is not a 2-path of the maximal-positive-part graph"
        )));
    }
    let full = om.ground_set();
    let opposite = b.negate();
    let candidates = |x: &SignVector| -> Vec<SignVector> {
        om.topes()
            .iter()
            .filter(|t| **t != opposite)
            .filter(|t| t.plus_set().is_subset(x.plus_set()))
            .filter(|t| b.plus_set().union(t.plus_set()) == full)
            .copied()
            .collect()
    };
    let rs = candidates(r);
    let ss = candidates(s);
    let witnesses = rs.iter().find_map(|rp| {
        ss.iter()
            .find(|sp| rp.plus_set().intersection(b.plus_set()).intersection(sp.plus_set()).is_empty())
            .map(|sp| (*rp, *sp))
    });
    Ok(CutvertexHypothesis { witnesses })
}

/// How the isomorphism between the graph of a matroid and of its deletion was found.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IsomorphismWitness {
    /// Restricting every maximal tope to the remaining elements.
    Restriction,
    /// General isomorphism search.
    Search,
    None,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeletionReport {
    /// The nonnegative covector with the largest positive part.
    pub face: SignVector,
    pub face_unique: bool,
    pub deleted: ElementSet,
    pub original_vertices: usize,
    pub deleted_vertices: usize,
    pub witness: IsomorphismWitness,
}

impl DeletionReport {
    pub fn isomorphic(&self) -> bool {
        self.witness != IsomorphismWitness::None
    }
}

/// Compares the maximal-positive-part graph with that of the deletion of the
/// positive part of the largest nonnegative covector.
pub fn deletion_isomorphism_check(om: &OrientedMatroid) -> Result<DeletionReport> {
    om.require_simple()?;
    if om.is_acyclic() {
        return Err(Error::precondition("the matroid is acyclic"));
    }
    let covectors = om.require_covectors()?;
    let nonnegative: Vec<&SignVector> = covectors.iter().filter(|x| x.is_nonnegative()).collect();
    let union = nonnegative
        .iter()
        .fold(ElementSet::empty(), |acc, x| acc.union(x.plus_set()));
    let tops: Vec<&&SignVector> = nonnegative.iter().filter(|x| x.plus_set() == union).collect();
    let face = ***tops
        .first()
        .ok_or_else(|| Error::precondition("no nonnegative covector attains the union of positive parts"))?;
    let face_unique = tops.len() == 1
        && nonnegative
            .iter()
            .all(|x| x.plus_set().is_subset(face.plus_set()));
    let deleted = face.plus_set();
    let original = gamma_maxplus(om)?;
    if deleted.is_empty() {
        return Ok(DeletionReport {
            face,
            face_unique,
            deleted,
            original_vertices: original.graph.len(),
            deleted_vertices: original.graph.len(),
            witness: IsomorphismWitness::Restriction,
        });
    }
    let minor = om.delete(deleted)?;
    let target = gamma_maxplus(&minor)?;
    let keep = om.ground_set().difference(deleted);
    let restricted = original
        .graph
        .map_vertices(|t| t.restrict(keep).expect("keep lies inside the ground set"));
    let witness = if restricted.len() == original.graph.len() && restricted == target.graph {
        IsomorphismWitness::Restriction
    } else if petgraph::algo::is_isomorphic(&original.graph.to_petgraph(), &target.graph.to_petgraph()) {
        IsomorphismWitness::Search
    } else {
        IsomorphismWitness::None
    };
    Ok(DeletionReport {
        face,
        face_unique,
        deleted,
        original_vertices: original.graph.len(),
        deleted_vertices: target.graph.len(),
        witness,
    })
}

/// Checks that the neighbourhood of every vertex of the maximal-positive-part graph is
/// the antichain of minimal topes of its covering filter.
pub fn neighborhoods_match_antichains(om: &OrientedMatroid) -> Result<bool> {
    let g = gamma_maxplus(om)?;
    for b in g.graph.vertices() {
        if g.graph.neighborhood(b) != antichain_g(om, b)? {
            return Ok(false);
        }
    }
    Ok(true)
}
