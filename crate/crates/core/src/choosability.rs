//! List-coloring Brooks and the general choosability witness.
//!
//! For a `Δ`-regular component that is not complete (`Δ ≥ 3`), take an
//! independent set `A` with `|A| ≥ |X|/Δ` from a Brooks coloring. There are
//! `Δ|A| ≥ |X|` edges between `A` and `B = V − A`. Shrinking the vertex set
//! one vertex at a time while `cross(H) ≥ |H|` stays true ends in an `H`
//! where every vertex meets exactly two cross edges, so the cross edges form
//! disjoint even cycles. Orienting those cycles and bidirecting `H[B]` gives
//! an AB digraph with `d⁺(v) = d_H(v) − 1`, and the kernel colorer finishes
//! `H` after the rest of the graph is colored from its lists.
//!
//! Why single-vertex minimality is enough: if no `v` can be removed then
//! `d_v ≥ cross − |H| + 2` for all `v`. Summing, `2·cross ≥ |H|(cross − |H| + 2)`,
//! so with `s = cross − |H| ≥ 0` we get `s(|H| − 2) ≤ 0`. Two vertices carry at
//! most one cross edge, so `|H| > 2`, hence `s = 0` and every `d_v = 2`.

use crate::brooks::{brooks_color, component_bound, expand_to_maximal_independent, peel_order};
use crate::coloring::{Coloring, ListAssignment};
use crate::error::{Error, Result};
use crate::graph::{
    components, edges_between, induced_subgraph, Digraph, Graph, InducedSubgraphView, VertexSet,
};
use crate::kernels::{kernel_lemma_color, AbDigraph};
use crate::orientations::{solve_min_indegree_orientation, OrientationOutcome};

/// An induced subgraph whose `A`–`B` edges form vertex-disjoint cycles
/// covering it. `a_part`, `b_part` and `cycles` use the view's local ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossSubgraph {
    pub view: InducedSubgraphView,
    pub a_part: VertexSet,
    pub b_part: VertexSet,
    pub cycles: Vec<Vec<usize>>,
}

impl CrossSubgraph {
    pub fn len(&self) -> usize {
        self.view.graph.n()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Number of `A`–`B` edges inside the view.
    pub fn cross_count(&self) -> usize {
        cross_degrees(&self.view.graph, &self.a_part).iter().sum::<usize>() / 2
    }
}

/// An induced subgraph `H`, an AB digraph `Q` on it, and demands `f_H` with
/// `d⁺_Q(v) ≤ f_H(v) − 1`; `H` is then `f_H`-choosable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChoosabilityWitness {
    pub view: InducedSubgraphView,
    pub q: AbDigraph,
    pub f_h: Vec<usize>,
    /// Violator-removal rounds before the orientation was found.
    pub rounds: usize,
}

fn cross_degrees(g: &Graph, a: &VertexSet) -> Vec<usize> {
    (0..g.n())
        .map(|v| {
            let va = a.contains(v);
            g.neighbors(v).iter().filter(|&&w| a.contains(w) != va).count()
        })
        .collect()
}

/// An independent set of size at least `⌈|G|/Δ⌉`: the largest class of a
/// Brooks coloring, grown to a maximal independent set.
///
/// Requires the Brooks coloring to use at most `Δ` colors, which holds when
/// `Δ ≥ 3` and no component is `K_{Δ+1}`.
pub fn large_independent_set(g: &Graph) -> Result<VertexSet> {
    let delta = g.max_degree();
    if delta == 0 {
        return Err(Error::Precondition("graph has no edges".into()));
    }
    let coloring = brooks_color(g)?;
    let k = coloring.num_colors();
    if k > delta {
        return Err(Error::Precondition(format!(
            "Brooks coloring needs {k} > Δ = {delta} colors"
        )));
    }
    let mut sizes = vec![0usize; k];
    for c in coloring.as_slice().iter().flatten() {
        sizes[*c] += 1;
    }
    let best = (0..k).max_by_key(|&c| (sizes[c], std::cmp::Reverse(c))).unwrap_or(0);
    let class = VertexSet::new(g.n(), (0..g.n()).filter(|&v| coloring.get(v) == Some(best)))?;
    expand_to_maximal_independent(g, &class)
}

/// Shrinks `G` to an induced subgraph whose cross edges (between `A` and the
/// rest) form disjoint cycles through every vertex.
///
/// Repeatedly removes the smallest-id vertex whose removal keeps
/// `cross(H) ≥ |H|`. Requires `cross(G) ≥ |G|` initially.
pub fn find_critical_cross_subgraph(g: &Graph, a: &VertexSet) -> Result<CrossSubgraph> {
    let n = g.n();
    if a.ambient_n() != n {
        return Err(Error::InvalidInput("A does not match the graph".into()));
    }
    if !g.is_independent(a) {
        return Err(Error::Precondition("A is not independent".into()));
    }
    let mut cross = edges_between(g, a, &a.complement())?.len();
    if n == 0 || cross < n {
        return Err(Error::Precondition(format!(
            "only {cross} cross edges for {n} vertices"
        )));
    }
    let mut degree = cross_degrees(g, a);
    let mut alive = vec![true; n];
    let mut size = n;
    'shrink: loop {
        for v in (0..n).filter(|&v| alive[v]) {
            if cross - degree[v] + 1 >= size {
                alive[v] = false;
                size -= 1;
                cross -= degree[v];
                let va = a.contains(v);
                for &w in g.neighbors(v) {
                    if alive[w] && a.contains(w) != va {
                        degree[w] -= 1;
                    }
                }
                continue 'shrink;
            }
        }
        break;
    }

    let keep = VertexSet::from_mask(&alive);
    let view = induced_subgraph(g, &keep);
    let h = &view.graph;
    let a_part = VertexSet::new(h.n(), (0..h.n()).filter(|&i| a.contains(view.to_parent[i])))?;
    let b_part = a_part.complement();
    let local_degree = cross_degrees(h, &a_part);
    if local_degree.iter().sum::<usize>() != 2 * h.n() || local_degree.iter().any(|&d| d != 2) {
        return Err(Error::invariant(
            "critical cross subgraph",
            format!("cross degrees {local_degree:?} are not all 2"),
        ));
    }
    let cycles = trace_cross_cycles(h, &a_part);
    Ok(CrossSubgraph {
        view,
        a_part,
        b_part,
        cycles,
    })
}

/// Splits a 2-regular cross-edge set into cycles; each starts at its
/// smallest vertex and continues to that vertex's smaller cross neighbor.
fn trace_cross_cycles(h: &Graph, a: &VertexSet) -> Vec<Vec<usize>> {
    let cross_nbrs = |v: usize| -> Vec<usize> {
        let va = a.contains(v);
        h.neighbors(v).iter().copied().filter(|&w| a.contains(w) != va).collect()
    };
    let mut seen = vec![false; h.n()];
    let mut cycles = Vec::new();
    for start in 0..h.n() {
        if seen[start] {
            continue;
        }
        let mut cycle = vec![start];
        seen[start] = true;
        let mut prev = start;
        let mut cur = cross_nbrs(start)[0];
        while cur != start {
            seen[cur] = true;
            cycle.push(cur);
            let next = cross_nbrs(cur).into_iter().find(|&w| w != prev).expect("2-regular");
            prev = cur;
            cur = next;
        }
        cycles.push(cycle);
    }
    cycles
}

/// Orients each cross cycle cyclically (in the order stored in the cycle)
/// and bidirects the edges inside `B`.
pub fn build_cycle_orientation(x: &CrossSubgraph) -> Result<AbDigraph> {
    let h = &x.view.graph;
    let n = h.n();
    if x.a_part.ambient_n() != n || x.b_part != x.a_part.complement() {
        return Err(Error::InvalidInput("partition does not match the subgraph".into()));
    }
    let mut covered = vec![false; n];
    let mut arcs = Vec::new();
    let mut cycle_edges = 0;
    for cycle in &x.cycles {
        let k = cycle.len();
        for i in 0..k {
            let (u, w) = (cycle[i], cycle[(i + 1) % k]);
            if u >= n || w >= n || covered[u] {
                return Err(Error::Precondition("cycles do not partition the vertices".into()));
            }
            covered[u] = true;
            if !h.has_edge(u, w) || x.a_part.contains(u) == x.a_part.contains(w) {
                return Err(Error::Precondition(format!("{u}-{w} is not a cross edge")));
            }
            arcs.push((u, w));
            cycle_edges += 1;
        }
    }
    let cross_total = cross_degrees(h, &x.a_part).iter().sum::<usize>() / 2;
    if covered.iter().any(|&c| !c) || cycle_edges != cross_total {
        return Err(Error::Precondition(
            "cycles do not cover exactly the cross edges".into(),
        ));
    }
    for (u, w) in h.edges() {
        if x.b_part.contains(u) && x.b_part.contains(w) {
            arcs.push((u, w));
            arcs.push((w, u));
        }
    }
    AbDigraph::from_digraph(Digraph::new(n, arcs)?, x.a_part.clone())
}

/// Per-call record of what [`list_brooks_color_with_stats`] did.
#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct ListBrooksStats {
    pub greedy: usize,
    pub peel: usize,
    /// `(|H|, cross(H))` for every critical subgraph used.
    pub critical: Vec<(usize, usize)>,
}

/// Colors `g` from `lists` when every list is at least as long as its
/// component's Brooks bound.
pub fn list_brooks_color(g: &Graph, lists: &ListAssignment) -> Result<Coloring> {
    list_brooks_color_with_stats(g, lists).map(|(c, _)| c)
}

pub fn list_brooks_color_with_stats(
    g: &Graph,
    lists: &ListAssignment,
) -> Result<(Coloring, ListBrooksStats)> {
    lists.check_len(g.n())?;
    for comp in components(g) {
        let bound = component_bound(&induced_subgraph(g, &comp).graph);
        for v in comp.iter() {
            let size = lists.list(v).len();
            if size < bound {
                return Err(Error::ListTooSmall {
                    vertex: v,
                    size,
                    required: bound,
                });
            }
        }
    }
    let mut stats = ListBrooksStats::default();
    let colors = color_from_lists(g, lists, &mut stats)?;
    let coloring = Coloring::from_total(colors);
    let on_lists = (0..g.n()).all(|v| lists.contains(v, coloring.get(v).expect("total")));
    if !coloring.is_proper_on(g) || !on_lists {
        return Err(Error::invariant("list brooks", "result is not a proper list coloring"));
    }
    Ok((coloring, stats))
}

fn restrict_lists(lists: &ListAssignment, to_parent: &[usize]) -> ListAssignment {
    ListAssignment::new(to_parent.iter().map(|&p| lists.list(p).to_vec()).collect())
}

/// Recursion depth stays at most two: the graph left after removing a
/// critical subgraph from a connected regular component has no regular
/// component, so it only peels.
fn color_from_lists(
    g: &Graph,
    lists: &ListAssignment,
    stats: &mut ListBrooksStats,
) -> Result<Vec<usize>> {
    let mut colors = vec![usize::MAX; g.n()];
    for comp in components(g) {
        let view = induced_subgraph(g, &comp);
        let sub_lists = restrict_lists(lists, &view.to_parent);
        let sub = color_component(&view.graph, &sub_lists, stats)?;
        for (i, &p) in view.to_parent.iter().enumerate() {
            colors[p] = sub[i];
        }
    }
    Ok(colors)
}

fn greedy_in_order(
    x: &Graph,
    lists: &ListAssignment,
    order: impl Iterator<Item = usize>,
) -> Result<Vec<usize>> {
    let mut colors: Vec<Option<usize>> = vec![None; x.n()];
    for v in order {
        let taken: Vec<usize> = x.neighbors(v).iter().filter_map(|&w| colors[w]).collect();
        let c = lists
            .list(v)
            .iter()
            .copied()
            .find(|c| !taken.contains(c))
            .ok_or_else(|| Error::invariant("list greedy", format!("vertex {v} ran out of colors")))?;
        colors[v] = Some(c);
    }
    Ok(colors.into_iter().map(|c| c.expect("all colored")).collect())
}

fn color_component(
    x: &Graph,
    lists: &ListAssignment,
    stats: &mut ListBrooksStats,
) -> Result<Vec<usize>> {
    let delta = x.max_degree();
    if delta <= 2 || x.is_complete() {
        // Every list is longer than the degree here.
        stats.greedy += 1;
        return greedy_in_order(x, lists, 0..x.n());
    }
    if !x.is_regular() {
        stats.peel += 1;
        let order = peel_order(x, delta.max(3))
            .ok_or_else(|| Error::invariant("list peel", "non-regular component did not peel"))?;
        return greedy_in_order(x, lists, order.into_iter().rev());
    }

    let a = large_independent_set(x)?;
    let critical = find_critical_cross_subgraph(x, &a)?;
    stats.critical.push((critical.len(), critical.cross_count()));
    let n = x.n();
    let inside = critical.view.parent_set(n);
    let outside = inside.complement();

    let mut colors = vec![usize::MAX; n];
    if !outside.is_empty() {
        let rest = induced_subgraph(x, &outside);
        let rest_colors = color_from_lists(&rest.graph, &restrict_lists(lists, &rest.to_parent), stats)?;
        for (i, &p) in rest.to_parent.iter().enumerate() {
            colors[p] = rest_colors[i];
        }
    }

    let h = &critical.view;
    let residual: Vec<Vec<usize>> = h
        .to_parent
        .iter()
        .enumerate()
        .map(|(i, &p)| {
            let taken: Vec<usize> = x
                .neighbors(p)
                .iter()
                .filter(|&&w| !inside.contains(w))
                .map(|&w| colors[w])
                .collect();
            let left: Vec<usize> = lists.list(p).iter().copied().filter(|c| !taken.contains(c)).collect();
            debug_assert!(left.len() >= h.graph.degree(i));
            left
        })
        .collect();
    let q = build_cycle_orientation(&critical)?;
    let inner = kernel_lemma_color(&q, &ListAssignment::new(residual)).map_err(|e| match e {
        Error::ListTooSmall { vertex, .. } => Error::invariant(
            "list brooks",
            format!("residual list too short at critical vertex {}", h.to_parent[vertex]),
        ),
        other => other,
    })?;
    for (i, &p) in h.to_parent.iter().enumerate() {
        colors[p] = inner.get(i).expect("kernel coloring is total");
    }
    Ok(colors)
}

/// Finds an induced subgraph `H` and AB digraph `Q` on it certifying that `H`
/// is `f_H`-choosable, where `f_H(v) = f(v) + d_H(v) − d_G(v)`.
///
/// Requires `A` independent, `f(v) ≤ d(v) + 1`, and
/// `cross(A, G−A) ≥ Σ (d(v) + 1 − f(v))`. Each round asks for an orientation
/// of the cross edges of `H` with cross in-degree at least `d_G(v) + 1 − f(v)`;
/// a violator is removed from `H` and the round repeats. Removing a violator
/// keeps `cross(H) ≥ Σ_H g`, so `H` never empties.
pub fn general_tool_witness(g: &Graph, a: &VertexSet, f: &[usize]) -> Result<ChoosabilityWitness> {
    let n = g.n();
    if f.len() != n || a.ambient_n() != n {
        return Err(Error::InvalidInput("f or A does not match the graph".into()));
    }
    if n == 0 {
        return Err(Error::Precondition("graph is empty".into()));
    }
    if !g.is_independent(a) {
        return Err(Error::Precondition("A is not independent".into()));
    }
    if let Some(v) = (0..n).find(|&v| f[v] > g.degree(v) + 1) {
        return Err(Error::Precondition(format!("f({v}) exceeds d({v}) + 1")));
    }
    let demand: Vec<usize> = (0..n).map(|v| g.degree(v) + 1 - f[v]).collect();
    let need: usize = demand.iter().sum();
    let have = edges_between(g, a, &a.complement())?.len();
    if have < need {
        return Err(Error::Precondition(format!(
            "cross edges {have} < required {need}"
        )));
    }

    let mut alive = vec![true; n];
    for round in 0..=n {
        let view = induced_subgraph(g, &VertexSet::from_mask(&alive));
        let h = &view.graph;
        let m = h.n();
        let a_local = VertexSet::new(m, (0..m).filter(|&i| a.contains(view.to_parent[i])))?;
        let cross_edges: Vec<(usize, usize)> = h
            .edges()
            .filter(|&(u, w)| a_local.contains(u) != a_local.contains(w))
            .collect();
        let local_demand: Vec<usize> = view.to_parent.iter().map(|&p| demand[p]).collect();
        if cross_edges.len() < local_demand.iter().sum::<usize>() || m == 0 {
            return Err(Error::invariant(
                "general tool",
                "cross edges fell below demand after removing a violator",
            ));
        }
        let cross_graph = Graph::new(m, cross_edges.iter().copied())?;
        match solve_min_indegree_orientation(&cross_graph, &local_demand)? {
            OrientationOutcome::Feasible(orientation) => {
                let mut arcs: Vec<(usize, usize)> = orientation.arcs().collect();
                for (u, w) in h.edges() {
                    if !a_local.contains(u) && !a_local.contains(w) {
                        arcs.push((u, w));
                        arcs.push((w, u));
                    }
                }
                let q = AbDigraph::from_digraph(Digraph::new(m, arcs)?, a_local)?;
                let mut f_h = Vec::with_capacity(m);
                for (i, &p) in view.to_parent.iter().enumerate() {
                    let value = (f[p] + h.degree(i)).checked_sub(g.degree(p));
                    match value {
                        Some(value) if q.out_degree(i) < value => f_h.push(value),
                        _ => {
                            return Err(Error::invariant(
                                "general tool",
                                format!("out-degree exceeds f_H - 1 at vertex {p}"),
                            ))
                        }
                    }
                }
                return Ok(ChoosabilityWitness {
                    view,
                    q,
                    f_h,
                    rounds: round,
                });
            }
            OrientationOutcome::Violator(bad) => {
                for i in bad.iter() {
                    alive[view.to_parent[i]] = false;
                }
            }
        }
    }
    Err(Error::invariant("general tool", "violator loop did not terminate"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{complete, complete_bipartite, cube, cycle, petersen};

    fn set(n: usize, m: &[usize]) -> VertexSet {
        VertexSet::new(n, m.iter().copied()).unwrap()
    }

    #[test]
    fn large_independent_examples() {
        let p = large_independent_set(&petersen()).unwrap();
        assert!(p.len() >= 4 && petersen().is_independent(&p));
        let q = large_independent_set(&cube()).unwrap();
        assert!(q.len() >= 3 && cube().is_independent(&q));
        let k33 = complete_bipartite(3, 3);
        assert_eq!(large_independent_set(&k33).unwrap().len(), 3);
        assert!(large_independent_set(&complete(4)).is_err());
        assert!(large_independent_set(&Graph::empty(3)).is_err());
    }

    #[test]
    fn critical_cycle_examples() {
        let c6 = find_critical_cross_subgraph(&cycle(6), &set(6, &[0, 2, 4])).unwrap();
        assert_eq!(c6.len(), 6);
        assert_eq!(c6.cycles, vec![vec![0, 1, 2, 3, 4, 5]]);
        let c4 = find_critical_cross_subgraph(&cycle(4), &set(4, &[0, 2])).unwrap();
        assert_eq!(c4.cycles, vec![vec![0, 1, 2, 3]]);
        assert!(find_critical_cross_subgraph(&cycle(5), &set(5, &[0, 2])).is_err());
    }

    #[test]
    fn critical_on_cube() {
        let q = cube();
        // Even-weight words form one side of the bipartition.
        let a = set(8, &[0, 3, 5, 6]);
        let x = find_critical_cross_subgraph(&q, &a).unwrap();
        assert_eq!(x.cross_count(), x.len());
        let orient = build_cycle_orientation(&x).unwrap();
        for v in 0..x.len() {
            assert_eq!(orient.out_degree(v) + 1, x.view.graph.degree(v));
        }
        for v in x.a_part.iter() {
            assert_eq!(orient.out_degree(v), 1);
            assert_eq!(x.view.graph.degree(v), 2);
        }
    }

    #[test]
    fn cycle_orientation_on_even_cycles() {
        for (n, a) in [(4, vec![0, 2]), (6, vec![0, 2, 4])] {
            let x = find_critical_cross_subgraph(&cycle(n), &set(n, &a)).unwrap();
            let q = build_cycle_orientation(&x).unwrap();
            assert!((0..n).all(|v| q.out_degree(v) == 1));
        }
    }

    #[test]
    fn list_brooks_examples() {
        let p = petersen();
        let c = list_brooks_color(&p, &ListAssignment::uniform(10, 3)).unwrap();
        assert!(c.is_proper_on(&p));
        let k4 = complete(4);
        let lists = ListAssignment::new(vec![vec![0, 1, 2, 3], vec![1, 2, 3, 4], vec![0, 2, 4, 6], vec![3, 4, 5, 6]]);
        let c = list_brooks_color(&k4, &lists).unwrap();
        assert!(c.is_proper_on(&k4) && (0..4).all(|v| lists.contains(v, c.get(v).unwrap())));
        let short = ListAssignment::new(vec![vec![0, 1, 2]; 4]);
        assert!(matches!(list_brooks_color(&k4, &short), Err(Error::ListTooSmall { .. })));
    }

    #[test]
    fn witness_examples() {
        let c5 = cycle(5);
        assert!(matches!(
            general_tool_witness(&c5, &set(5, &[0, 2]), &[2; 5]),
            Err(Error::Precondition(_))
        ));
        let c4 = cycle(4);
        let w = general_tool_witness(&c4, &set(4, &[0, 2]), &[2; 4]).unwrap();
        assert_eq!(w.view.graph.n(), 4);
        assert_eq!(w.f_h, vec![2; 4]);
        assert!((0..4).all(|v| w.q.out_degree(v) == 1));

        let diamond = Graph::new(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
        let w = general_tool_witness(&diamond, &set(4, &[0, 3]), &[2, 3, 3, 2]).unwrap();
        assert!(!w.view.to_parent.is_empty());
        for v in 0..w.q.n() {
            assert!(w.q.out_degree(v) < w.f_h[v]);
        }
    }
}
