//! A small undirected simple graph over ordered vertex labels, with the
//! connectivity and odd-cycle analyses used by the committee graphs.

use std::collections::{BTreeSet, VecDeque};
use std::fmt::{Display, Write as _};

use petgraph::graph::UnGraph;

/// Undirected simple graph. Vertices are kept sorted; adjacency lists are sorted indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph<V: Ord + Clone> {
    vertices: Vec<V>,
    adj: Vec<Vec<usize>>,
}

impl<V: Ord + Clone> Graph<V> {
    /// Graph on `vertices` (deduplicated) with an edge wherever `adjacent` holds.
    pub fn from_predicate<I, F>(vertices: I, mut adjacent: F) -> Self
    where
        I: IntoIterator<Item = V>,
        F: FnMut(&V, &V) -> bool,
    {
        let vertices: Vec<V> = vertices.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        let n = vertices.len();
        let mut adj = vec![Vec::new(); n];
        for i in 0..n {
            for j in i + 1..n {
                if adjacent(&vertices[i], &vertices[j]) {
                    adj[i].push(j);
                    adj[j].push(i);
                }
            }
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { vertices, adj }
    }

    /// Graph from an explicit edge list. Panics if an edge endpoint is not a vertex.
    pub fn from_edges<I, E>(vertices: I, edges: E) -> Self
    where
        I: IntoIterator<Item = V>,
        E: IntoIterator<Item = (V, V)>,
    {
        let vertices: Vec<V> = vertices.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        let mut sets = vec![BTreeSet::new(); vertices.len()];
        for (a, b) in edges {
            let i = vertices.binary_search(&a).expect("edge endpoint is not a vertex");
            let j = vertices.binary_search(&b).expect("edge endpoint is not a vertex");
            if i != j {
                sets[i].insert(j);
                sets[j].insert(i);
            }
        }
        let adj = sets.into_iter().map(|s| s.into_iter().collect()).collect();
        Graph { vertices, adj }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[V] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> &V {
        &self.vertices[i]
    }

    pub fn index_of(&self, v: &V) -> Option<usize> {
        self.vertices.binary_search(v).ok()
    }

    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adj[i]
    }

    /// Neighborhood of a vertex as labels.
    pub fn neighborhood(&self, v: &V) -> BTreeSet<V> {
        match self.index_of(v) {
            Some(i) => self.adj[i].iter().map(|&j| self.vertices[j].clone()).collect(),
            None => BTreeSet::new(),
        }
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adj[i].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, list) in self.adj.iter().enumerate() {
            for &j in list {
                if i < j {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Edges as label pairs, smaller label first, in canonical order.
    pub fn edge_pairs(&self) -> Vec<(V, V)> {
        self.edges()
            .into_iter()
            .map(|(i, j)| (self.vertices[i].clone(), self.vertices[j].clone()))
            .collect()
    }

    pub fn has_edge(&self, a: &V, b: &V) -> bool {
        match (self.index_of(a), self.index_of(b)) {
            (Some(i), Some(j)) => self.adj[i].binary_search(&j).is_ok(),
            _ => false,
        }
    }

    /// Induced subgraph on the given labels (labels outside the graph are ignored).
    pub fn induced(&self, keep: &BTreeSet<V>) -> Graph<V> {
        let vertices: Vec<V> = self.vertices.iter().filter(|v| keep.contains(v)).cloned().collect();
        let edges: Vec<(V, V)> = self
            .edge_pairs()
            .into_iter()
            .filter(|(a, b)| keep.contains(a) && keep.contains(b))
            .collect();
        Graph::from_edges(vertices, edges)
    }

    /// Relabels vertices through an injective map.
    pub fn map_vertices<W: Ord + Clone>(&self, f: impl Fn(&V) -> W) -> Graph<W> {
        let vertices: Vec<W> = self.vertices.iter().map(&f).collect();
        let edges: Vec<(W, W)> = self.edge_pairs().iter().map(|(a, b)| (f(a), f(b))).collect();
        Graph::from_edges(vertices, edges)
    }

    pub fn to_petgraph(&self) -> UnGraph<V, ()> {
        let mut g = UnGraph::new_undirected();
        let nodes: Vec<_> = self.vertices.iter().map(|v| g.add_node(v.clone())).collect();
        for (i, j) in self.edges() {
            g.add_edge(nodes[i], nodes[j], ());
        }
        g
    }

    /// Connected components as sorted index lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Odd cycle found by breadth-first 2-colouring, or `None` when bipartite.
    ///
    /// Each component is searched from its smallest vertex; edges are scanned in
    /// lexicographic order and the first edge joining equal colours closes the
    /// cycle with the two tree paths to their lowest common ancestor.
    pub fn odd_cycle(&self) -> Option<Vec<usize>> {
        let n = self.len();
        let mut depth = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        for s in 0..n {
            if depth[s] != usize::MAX {
                continue;
            }
            depth[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if depth[w] == usize::MAX {
                        depth[w] = depth[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    }
                }
            }
        }
        let (u, w) = self
            .edges()
            .into_iter()
            .find(|&(u, w)| depth[u] % 2 == depth[w] % 2)?;
        let mut left = vec![u];
        let mut right = vec![w];
        let (mut a, mut b) = (u, w);
        while a != b {
            if depth[a] >= depth[b] {
                a = parent[a];
                left.push(a);
            } else {
                b = parent[b];
                right.push(b);
            }
        }
        right.pop();
        right.reverse();
        left.extend(right);
        Some(left)
    }

    pub fn is_bipartite(&self) -> bool {
        self.odd_cycle().is_none()
    }

    /// Length of a shortest odd cycle, if any.
    pub fn odd_girth(&self) -> Option<usize> {
        let n = self.len();
        let mut best: Option<usize> = None;
        for s in 0..n {
            let mut dist = vec![usize::MAX; n];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        queue.push_back(w);
                    }
                }
            }
            for (u, w) in self.edges() {
                if dist[u] != usize::MAX && dist[u] == dist[w] {
                    let len = 2 * dist[u] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
        best
    }

    /// Bridges, cut vertices and edge-blocks from one depth-first pass.
    pub fn low_link(&self) -> LowLink {
        let n = self.len();
        let mut state = LowLinkState {
            disc: vec![usize::MAX; n],
            low: vec![0; n],
            timer: 0,
            bridges: Vec::new(),
            cut: vec![false; n],
            edge_stack: Vec::new(),
            blocks: Vec::new(),
        };
        for s in 0..n {
            if state.disc[s] == usize::MAX {
                self.dfs(s, usize::MAX, &mut state);
                if self.adj[s].is_empty() {
                    state.blocks.push(vec![s]);
                }
            }
        }
        let mut bridges: Vec<(usize, usize)> = state
            .bridges
            .into_iter()
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        bridges.sort_unstable();
        let mut blocks: Vec<Vec<usize>> = state
            .blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b.dedup();
                b
            })
            .collect();
        blocks.sort();
        LowLink {
            bridges,
            cutvertices: (0..n).filter(|&i| state.cut[i]).collect(),
            blocks,
        }
    }

    fn dfs(&self, u: usize, parent: usize, st: &mut LowLinkState) {
        st.disc[u] = st.timer;
        st.low[u] = st.timer;
        st.timer += 1;
        let mut children = 0;
        for &w in &self.adj[u] {
            if st.disc[w] == usize::MAX {
                children += 1;
                st.edge_stack.push((u, w));
                self.dfs(w, u, st);
                st.low[u] = st.low[u].min(st.low[w]);
                if st.low[w] > st.disc[u] {
                    st.bridges.push((u, w));
                }
                if st.low[w] >= st.disc[u] {
                    if parent != usize::MAX {
                        st.cut[u] = true;
                    }
                    let mut block = Vec::new();
                    while let Some((a, b)) = st.edge_stack.pop() {
                        block.push(a);
                        block.push(b);
                        if (a, b) == (u, w) {
                            break;
                        }
                    }
                    st.blocks.push(block);
                }
            } else if w != parent && st.disc[w] < st.disc[u] {
                st.edge_stack.push((u, w));
                st.low[u] = st.low[u].min(st.disc[w]);
            }
        }
        if parent == usize::MAX && children > 1 {
            st.cut[u] = true;
        }
    }

    /// For each vertex, whether it lies on some odd cycle.
    ///
    /// Every cycle lies inside one block, and in a non-bipartite 2-connected graph
    /// every vertex lies on an odd cycle, so membership reduces to the blocks.
    pub fn odd_cycle_membership(&self) -> Vec<bool> {
        let mut on_odd = vec![false; self.len()];
        for block in self.low_link().blocks {
            if block.len() < 3 {
                continue;
            }
            // Any edge between two vertices of a block belongs to that block.
            let keep: BTreeSet<V> = block.iter().map(|&i| self.vertices[i].clone()).collect();
            if !self.induced(&keep).is_bipartite() {
                for &i in &block {
                    on_odd[i] = true;
                }
            }
        }
        on_odd
    }
}

struct LowLinkState {
    disc: Vec<usize>,
    low: Vec<usize>,
    timer: usize,
    bridges: Vec<(usize, usize)>,
    cut: Vec<bool>,
    edge_stack: Vec<(usize, usize)>,
    blocks: Vec<Vec<usize>>,
}

/// Result of the depth-first low-link pass.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LowLink {
    pub bridges: Vec<(usize, usize)>,
    pub cutvertices: Vec<usize>,
    /// Vertex sets of the biconnected components (isolated vertices form their own block).
    pub blocks: Vec<Vec<usize>>,
}

impl<V: Ord + Clone + Display> Graph<V> {
    /// `<u> <v>` per line, canonical order.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for (a, b) in self.edge_pairs() {
            let _ = writeln!(out, "{a} {b}");
        }
        out
    }

    /// Graphviz DOT text.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = format!("graph {name} {{\n");
        for v in &self.vertices {
            let _ = writeln!(out, "  \"{v}\";");
        }
        for (a, b) in self.edge_pairs() {
            let _ = writeln!(out, "  \"{a}\" -- \"{b}\";");
        }
        out.push_str("}\n");
        out
    }
}
