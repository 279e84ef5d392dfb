//! Graph and digraph representations plus the structural searches the
//! coloring routines rely on: components, shortest (hence induced) cycles,
//! diamonds, fixed-size cliques and cross-edge counts.
//!
//! Vertices are always the contiguous ids `0..n`. Induced subgraphs are
//! relabeled and carry an explicit `to_parent` map.

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// Default cap on the number of cliques [`enumerate_cliques`] may return.
pub const DEFAULT_CLIQUE_CAP: usize = 100_000;

/// A simple undirected graph with sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    /// Builds the simple graph on `n` vertices with the given edges.
    ///
    /// Repeated mentions of an edge, in either direction, collapse to one
    /// edge. Self-loops and out-of-range ids are rejected.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut twice = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            twice += list.len();
        }
        Ok(Graph {
            adj,
            edge_count: twice / 2,
        })
    }

    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Sorted neighbors of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && v < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn is_regular(&self) -> bool {
        self.max_degree() == self.min_degree()
    }

    /// True when every pair of distinct vertices is adjacent.
    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.adj.iter().all(|l| l.len() + 1 == n)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            let start = list.partition_point(|&w| w <= u);
            list[start..].iter().map(move |&v| (u, v))
        })
    }

    /// A copy of this graph with the edge `uv` added (no-op if present).
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        Graph::new(self.n(), self.edges().chain(std::iter::once((u, v))))
    }

    /// True when no two members of `set` are adjacent.
    pub fn is_independent(&self, set: &VertexSet) -> bool {
        set.iter()
            .all(|v| self.neighbors(v).iter().all(|&w| !set.contains(w)))
    }
}

/// A digraph without self-loops or parallel arcs; opposite arc pairs are
/// allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    out: Vec<Vec<usize>>,
}

impl Digraph {
    pub fn new<I>(n: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut out = vec![Vec::new(); n];
        for (u, v) in arcs {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            out[u].push(v);
        }
        for list in &mut out {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Digraph { out })
    }

    pub fn n(&self) -> usize {
        self.out.len()
    }

    /// Sorted heads of arcs leaving `v`.
    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out[v].len()
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.out[u].binary_search(&v).is_ok()
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(Vec::len).sum()
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, l)| l.iter().map(move |&v| (u, v)))
    }

    /// The simple graph obtained by forgetting directions.
    pub fn underlying(&self) -> Graph {
        Graph::new(self.n(), self.arcs()).expect("arcs are already validated")
    }
}

/// A sorted, deduplicated set of vertex ids below `ambient_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    members: Vec<usize>,
    ambient_n: usize,
}

impl VertexSet {
    pub fn new<I>(ambient_n: usize, members: I) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut members: Vec<usize> = members.into_iter().collect();
        if let Some(&bad) = members.iter().find(|&&v| v >= ambient_n) {
            return Err(Error::VertexOutOfRange {
                vertex: bad,
                n: ambient_n,
            });
        }
        members.sort_unstable();
        members.dedup();
        Ok(VertexSet { members, ambient_n })
    }

    pub fn empty(ambient_n: usize) -> Self {
        VertexSet {
            members: Vec::new(),
            ambient_n,
        }
    }

    pub fn full(ambient_n: usize) -> Self {
        VertexSet {
            members: (0..ambient_n).collect(),
            ambient_n,
        }
    }

    pub(crate) fn from_mask(mask: &[bool]) -> Self {
        VertexSet {
            members: (0..mask.len()).filter(|&v| mask[v]).collect(),
            ambient_n: mask.len(),
        }
    }

    pub fn ambient_n(&self) -> usize {
        self.ambient_n
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn complement(&self) -> VertexSet {
        let mask = self.mask();
        VertexSet {
            members: (0..self.ambient_n).filter(|&v| !mask[v]).collect(),
            ambient_n: self.ambient_n,
        }
    }

    pub fn mask(&self) -> Vec<bool> {
        let mut mask = vec![false; self.ambient_n];
        for &v in &self.members {
            mask[v] = true;
        }
        mask
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.members.iter().all(|&v| !other.contains(v))
    }
}

/// An induced subgraph relabeled to `0..|S|`, with the map back to the
/// parent's ids (ascending).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedSubgraphView {
    pub graph: Graph,
    pub to_parent: Vec<usize>,
}

impl InducedSubgraphView {
    /// Local id of a parent vertex, if it belongs to the view.
    pub fn local_of(&self, parent: usize) -> Option<usize> {
        self.to_parent.binary_search(&parent).ok()
    }

    /// The view's vertex set in the parent's id space.
    pub fn parent_set(&self, parent_n: usize) -> VertexSet {
        VertexSet {
            members: self.to_parent.clone(),
            ambient_n: parent_n,
        }
    }
}

/// Restricts `g` to `set`, relabeling vertices in ascending order.
pub fn induced_subgraph(g: &Graph, set: &VertexSet) -> InducedSubgraphView {
    let mut local = vec![usize::MAX; g.n()];
    for (i, v) in set.iter().enumerate() {
        local[v] = i;
    }
    let adj: Vec<Vec<usize>> = set
        .iter()
        .map(|v| {
            g.neighbors(v)
                .iter()
                .filter_map(|&w| (local[w] != usize::MAX).then_some(local[w]))
                .collect()
        })
        .collect();
    let edge_count = adj.iter().map(Vec::len).sum::<usize>() / 2;
    InducedSubgraphView {
        graph: Graph { adj, edge_count },
        to_parent: set.members.clone(),
    }
}

/// `g` minus the vertices in `removed`.
pub fn remove_vertices(g: &Graph, removed: &VertexSet) -> InducedSubgraphView {
    induced_subgraph(g, &removed.complement())
}

/// Connected components, each sorted, ordered by smallest member.
pub fn components(g: &Graph) -> Vec<VertexSet> {
    let n = g.n();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        queue.push_back(root);
        let mut comp = vec![root];
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                    queue.push_back(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(VertexSet {
            members: comp,
            ambient_n: n,
        });
    }
    out
}

/// A shortest cycle, as a cyclic vertex sequence, or `None` for forests.
///
/// BFS from every root in ascending order; the first strictly shorter cycle
/// found wins. A shortest cycle has no chord, so the result is an induced
/// cycle.
pub fn find_shortest_cycle(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    let mut best_len = usize::MAX;
    let mut best: Option<Vec<usize>> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut touched = Vec::new();
    let mut queue = VecDeque::new();

    for root in 0..n {
        for &v in &touched {
            dist[v] = usize::MAX;
            parent[v] = usize::MAX;
        }
        touched.clear();
        queue.clear();
        dist[root] = 0;
        touched.push(root);
        queue.push_back(root);
        'bfs: while let Some(u) = queue.pop_front() {
            // A cycle closed at depth d has length at least 2d.
            if best_len != usize::MAX && 2 * dist[u] >= best_len {
                break;
            }
            for &w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    touched.push(w);
                    queue.push_back(w);
                } else if w != parent[u] {
                    let len = dist[u] + dist[w] + 1;
                    if len < best_len {
                        best_len = len;
                        best = Some(trace_cycle(&parent, root, u, w));
                        if best_len == 3 {
                            break 'bfs;
                        }
                    }
                }
            }
        }
        if best_len == 3 {
            break;
        }
    }
    if let Some(cycle) = &best {
        debug_assert!(is_chordless_cycle(g, cycle));
    }
    best
}

fn trace_cycle(parent: &[usize], root: usize, u: usize, w: usize) -> Vec<usize> {
    let path_to_root = |mut x: usize| {
        let mut p = vec![x];
        while x != root {
            x = parent[x];
            p.push(x);
        }
        p
    };
    // root .. u, then w .. (child of root)
    let mut left = path_to_root(u);
    left.reverse();
    let mut right = path_to_root(w);
    right.pop();
    left.extend(right);
    left
}

/// True when consecutive vertices (cyclically) are adjacent, all vertices are
/// distinct, and no other pair is adjacent.
pub fn is_chordless_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let k = cycle.len();
    if k < 3 {
        return false;
    }
    let mut sorted = cycle.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != k {
        return false;
    }
    for i in 0..k {
        for j in i + 1..k {
            let consecutive = j == i + 1 || (i == 0 && j == k - 1);
            if g.has_edge(cycle[i], cycle[j]) != consecutive {
                return false;
            }
        }
    }
    true
}

/// Four vertices inducing `K_4` minus the edge `ab`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Diamond {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub d: usize,
}

impl Diamond {
    pub fn vertices(&self) -> [usize; 4] {
        [self.a, self.b, self.c, self.d]
    }
}

/// Lexicographically first diamond: edges `cd` in order, then pairs of
/// non-adjacent common neighbors `a < b`.
pub fn find_diamond(g: &Graph) -> Option<Diamond> {
    for (c, d) in g.edges() {
        let common = sorted_intersection(g.neighbors(c), g.neighbors(d));
        for (i, &a) in common.iter().enumerate() {
            for &b in &common[i + 1..] {
                if !g.has_edge(a, b) {
                    return Some(Diamond { a, b, c, d });
                }
            }
        }
    }
    None
}

pub(crate) fn sorted_intersection(x: &[usize], y: &[usize]) -> Vec<usize> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < x.len() && j < y.len() {
        match x[i].cmp(&y[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(x[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// All `t`-cliques in lexicographic order, by backtracking over vertices of
/// degree at least `t - 1`. Fails once more than `cap` cliques are found.
pub fn enumerate_cliques(g: &Graph, t: usize, cap: usize) -> Result<Vec<Vec<usize>>> {
    if t == 0 || cap == 0 {
        return Err(Error::InvalidInput(
            "clique size and cap must be positive".into(),
        ));
    }
    let eligible: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) + 1 >= t).collect();
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(t);
    extend_clique(g, t, cap, &eligible, &mut current, &mut out)?;
    Ok(out)
}

fn extend_clique(
    g: &Graph,
    t: usize,
    cap: usize,
    candidates: &[usize],
    current: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) -> Result<()> {
    if current.len() == t {
        if out.len() == cap {
            return Err(Error::ResourceLimit(format!(
                "more than {cap} cliques of size {t}"
            )));
        }
        out.push(current.clone());
        return Ok(());
    }
    let need = t - current.len();
    for (i, &v) in candidates.iter().enumerate() {
        if candidates.len() - i < need {
            break;
        }
        let next: Vec<usize> = candidates[i + 1..]
            .iter()
            .copied()
            .filter(|&w| g.has_edge(v, w))
            .collect();
        current.push(v);
        extend_clique(g, t, cap, &next, current, out)?;
        current.pop();
    }
    Ok(())
}

/// Every edge with one end in `s` and the other in `t`, as `(s_end, t_end)`,
/// ordered by the `s` endpoint.
pub fn edges_between(g: &Graph, s: &VertexSet, t: &VertexSet) -> Result<Vec<(usize, usize)>> {
    if !s.is_disjoint(t) {
        return Err(Error::InvalidInput("vertex sets overlap".into()));
    }
    let t_mask = t.mask();
    Ok(s.iter()
        .flat_map(|u| {
            g.neighbors(u)
                .iter()
                .filter(|&&w| t_mask.get(w).copied().unwrap_or(false))
                .map(move |&w| (u, w))
        })
        .collect())
}
