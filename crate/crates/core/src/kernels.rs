//! AB digraphs, their kernels, and list coloring by repeated kernels.
//!
//! An AB digraph comes from a graph and an independent set `A`: every edge
//! inside `B = V - A` becomes a pair of opposite arcs and every `A`–`B` edge
//! gets one direction. Every induced subdigraph of such a digraph has a
//! kernel, found by [`find_kernel_ab`]: if the `A` part absorbs every `B`
//! vertex it is a kernel; otherwise some `v ∈ B` has no arc into `A`, and `v`
//! plus a kernel of the part outside `N[v]` is one.

use std::collections::BTreeMap;

use crate::coloring::{Coloring, ListAssignment};
use crate::error::{Error, Result};
use crate::graph::{Digraph, Graph, VertexSet};

/// A digraph in the AB shape, with its underlying graph and the partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbDigraph {
    digraph: Digraph,
    graph: Graph,
    a: VertexSet,
    b: VertexSet,
}

impl AbDigraph {
    /// Validates an existing digraph against the AB shape for partition side
    /// `a`.
    pub fn from_digraph(digraph: Digraph, a: VertexSet) -> Result<Self> {
        let n = digraph.n();
        if a.ambient_n() != n {
            return Err(Error::InvalidInput("partition does not match the digraph".into()));
        }
        for (u, v) in digraph.arcs() {
            let (ua, va) = (a.contains(u), a.contains(v));
            if ua && va {
                return Err(Error::Precondition(format!("arc {u}->{v} lies inside A")));
            }
            let reverse = digraph.has_arc(v, u);
            if !ua && !va && !reverse {
                return Err(Error::Precondition(format!(
                    "edge {u}-{v} inside B is not bidirected"
                )));
            }
            if (ua || va) && reverse {
                return Err(Error::Precondition(format!(
                    "cross edge {u}-{v} is oriented both ways"
                )));
            }
        }
        let graph = digraph.underlying();
        let b = a.complement();
        Ok(AbDigraph { digraph, graph, a, b })
    }

    pub fn digraph(&self) -> &Digraph {
        &self.digraph
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn a(&self) -> &VertexSet {
        &self.a
    }

    pub fn b(&self) -> &VertexSet {
        &self.b
    }

    pub fn n(&self) -> usize {
        self.digraph.n()
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.digraph.out_degree(v)
    }
}

/// Builds the AB digraph of `g`: edges inside `B` bidirected, each `A`–`B`
/// edge `{u, v}` (keyed with `u < v`) pointing at `cross_heads[&(u, v)]`.
pub fn build_ab_digraph(
    g: &Graph,
    a: &VertexSet,
    cross_heads: &BTreeMap<(usize, usize), usize>,
) -> Result<AbDigraph> {
    if a.ambient_n() != g.n() {
        return Err(Error::InvalidInput("partition does not match the graph".into()));
    }
    if !g.is_independent(a) {
        return Err(Error::Precondition("A is not independent".into()));
    }
    let mut arcs = Vec::with_capacity(2 * g.edge_count());
    let mut used = 0;
    for (u, v) in g.edges() {
        if a.contains(u) || a.contains(v) {
            let head = *cross_heads.get(&(u, v)).ok_or_else(|| {
                Error::Precondition(format!("cross edge {u}-{v} has no head"))
            })?;
            used += 1;
            if head == v {
                arcs.push((u, v));
            } else if head == u {
                arcs.push((v, u));
            } else {
                return Err(Error::Precondition(format!(
                    "head {head} is not an endpoint of {u}-{v}"
                )));
            }
        } else {
            arcs.push((u, v));
            arcs.push((v, u));
        }
    }
    if used != cross_heads.len() {
        return Err(Error::Precondition(
            "cross_heads names pairs that are not cross edges".into(),
        ));
    }
    AbDigraph::from_digraph(Digraph::new(g.n(), arcs)?, a.clone())
}

/// Heads for every cross edge of `g` pointing into `a`.
pub fn heads_toward_a(g: &Graph, a: &VertexSet) -> BTreeMap<(usize, usize), usize> {
    g.edges()
        .filter_map(|(u, v)| match (a.contains(u), a.contains(v)) {
            (true, false) => Some(((u, v), u)),
            (false, true) => Some(((u, v), v)),
            _ => None,
        })
        .collect()
}

/// A kernel of the subdigraph induced by `within` (or the whole digraph).
pub fn find_kernel_ab(d: &AbDigraph, within: Option<&VertexSet>) -> Result<VertexSet> {
    let n = d.n();
    let mut alive = match within {
        Some(s) if s.ambient_n() != n => {
            return Err(Error::InvalidInput("vertex subset does not match the digraph".into()))
        }
        Some(s) => s.mask(),
        None => vec![true; n],
    };
    Ok(VertexSet::from_mask(&kernel_in_mask(d, &mut alive)))
}

/// Kernel of `D[alive]`; consumes `alive`.
fn kernel_in_mask(d: &AbDigraph, alive: &mut [bool]) -> Vec<bool> {
    let n = d.n();
    let mut kernel = vec![false; n];
    loop {
        let absorbed = |v: usize, alive: &[bool]| {
            d.digraph
                .out_neighbors(v)
                .iter()
                .any(|&w| alive[w] && d.a.contains(w))
        };
        let witness = d.b.iter().find(|&v| alive[v] && !absorbed(v, alive));
        match witness {
            None => {
                for v in d.a.iter() {
                    if alive[v] {
                        kernel[v] = true;
                    }
                }
                return kernel;
            }
            Some(v) => {
                kernel[v] = true;
                alive[v] = false;
                for &w in d.graph.neighbors(v) {
                    alive[w] = false;
                }
            }
        }
    }
}

/// True when `set` is a kernel of `D[within]`: independent in the underlying
/// graph, and every other vertex of `within` has an arc into it.
pub fn is_kernel(d: &Digraph, within: &VertexSet, set: &VertexSet) -> bool {
    let inside = set.mask();
    let scope = within.mask();
    if set.iter().any(|v| !scope[v]) {
        return false;
    }
    let independent = set.iter().all(|v| {
        d.out_neighbors(v).iter().all(|&w| !inside[w])
    });
    independent
        && within
            .iter()
            .filter(|&v| !inside[v])
            .all(|v| d.out_neighbors(v).iter().any(|&w| inside[w]))
}

/// Colors every vertex from its list using repeated kernels, provided
/// `|L(v)| ≥ d⁺(v) + 1` everywhere.
///
/// Each round takes the smallest color `c` left in any list, finds a kernel
/// `I` of the uncolored vertices whose lists contain `c`, colors `I` with
/// `c`, and deletes `c` from every list. Vertices that lose `c` without being
/// colored have an arc into `I`, so they lose an out-neighbor too and the
/// list-size condition is preserved.
pub fn kernel_lemma_color(d: &AbDigraph, lists: &ListAssignment) -> Result<Coloring> {
    let n = d.n();
    lists.check_len(n)?;
    for v in 0..n {
        let required = d.out_degree(v) + 1;
        if lists.list(v).len() < required {
            return Err(Error::ListTooSmall {
                vertex: v,
                size: lists.list(v).len(),
                required,
            });
        }
    }
    let mut remaining: Vec<Vec<usize>> = lists.lists().to_vec();
    let mut uncolored = vec![true; n];
    let mut coloring = Coloring::uncolored(n);
    let mut left = n;
    while left > 0 {
        for v in (0..n).filter(|&v| uncolored[v]) {
            let out = d
                .digraph
                .out_neighbors(v)
                .iter()
                .filter(|&&w| uncolored[w])
                .count();
            if remaining[v].len() < out + 1 {
                return Err(Error::invariant(
                    "kernel lemma",
                    format!("vertex {v} has {} colors for {out} out-neighbors", remaining[v].len()),
                ));
            }
        }
        let c = (0..n)
            .filter(|&v| uncolored[v])
            .filter_map(|v| remaining[v].first().copied())
            .min()
            .ok_or_else(|| Error::invariant("kernel lemma", "uncolored vertex with empty list"))?;
        let mut holders: Vec<bool> = (0..n)
            .map(|v| uncolored[v] && remaining[v].binary_search(&c).is_ok())
            .collect();
        let kernel = kernel_in_mask(d, &mut holders);
        for v in 0..n {
            if kernel[v] {
                coloring.set(v, c);
                uncolored[v] = false;
                left -= 1;
            }
            if let Ok(pos) = remaining[v].binary_search(&c) {
                remaining[v].remove(pos);
            }
        }
    }
    if !coloring.is_proper_on(&d.graph) {
        return Err(Error::invariant("kernel lemma", "coloring is not proper"));
    }
    Ok(coloring)
}

/// Painter's reply to Lister revealing `revealed`: a kernel of the revealed
/// subdigraph, which is independent and absorbs every other revealed vertex.
pub fn painter_move(d: &AbDigraph, revealed: &VertexSet) -> Result<VertexSet> {
    if revealed.is_empty() {
        return Err(Error::InvalidInput("Lister must reveal at least one vertex".into()));
    }
    find_kernel_ab(d, Some(revealed))
}
