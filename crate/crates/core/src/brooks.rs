//! Constructive Brooks coloring: every graph gets a proper coloring with at
//! most `max{3, ω, Δ}` colors.
//!
//! Each connected component `X` is dispatched to one of five branches:
//!
//! 1. `Δ(X) ≤ 2`: a path or cycle, colored directly.
//! 2. `X` complete: one color per vertex.
//! 3. `X` not regular: vertices are peeled while some remaining vertex has
//!    fewer than `max{3, Δ}` remaining neighbors, then colored greedily in
//!    reverse peel order.
//! 4. `X` is `Δ`-regular with `Δ ≥ 4`: color `X - v`, pick a color class that
//!    meets every `K_Δ` of `X`, grow it to a maximal independent set `M`,
//!    color `X - M` (which has smaller maximum degree and no `K_Δ`) and give
//!    `M` a fresh color.
//! 5. `X` is cubic and `K_4`-free: remove a diamond and extend, or else
//!    remove a shortest cycle `C`, join two attachments `x, y` of `C` by an
//!    edge, color the rest and extend around `C` from 2-lists.
//!
//! Subproblems are driven by an explicit task stack, so deep reductions never
//! touch the call stack.

use crate::coloring::{Coloring, ListAssignment};
use crate::error::{Error, Result};
use crate::graph::{
    components, enumerate_cliques, find_diamond, find_shortest_cycle, induced_subgraph,
    remove_vertices, Diamond, Graph, VertexSet, DEFAULT_CLIQUE_CAP,
};

/// How often each branch fired during one [`brooks_color_with_stats`] call.
#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct BranchStats {
    pub path_or_cycle: usize,
    pub complete: usize,
    pub peel: usize,
    pub hitting_class: usize,
    pub diamond: usize,
    pub cycle_surgery: usize,
}

impl std::ops::AddAssign for BranchStats {
    fn add_assign(&mut self, o: Self) {
        self.path_or_cycle += o.path_or_cycle;
        self.complete += o.complete;
        self.peel += o.peel;
        self.hitting_class += o.hitting_class;
        self.diamond += o.diamond;
        self.cycle_surgery += o.cycle_surgery;
    }
}

/// The color bound for a connected graph: `Δ + 1` for complete graphs,
/// otherwise `max{3, Δ}`. For a one-vertex graph this is 1.
pub fn component_bound(x: &Graph) -> usize {
    let delta = x.max_degree();
    if x.is_complete() {
        delta + 1
    } else {
        delta.max(3)
    }
}

/// Largest [`component_bound`] over the components of `g`.
pub fn color_bound(g: &Graph) -> usize {
    components(g)
        .iter()
        .map(|c| component_bound(&induced_subgraph(g, c).graph))
        .max()
        .unwrap_or(0)
}

pub fn brooks_color(g: &Graph) -> Result<Coloring> {
    brooks_color_with_stats(g).map(|(c, _)| c)
}

/// [`brooks_color`] plus per-branch counters.
pub fn brooks_color_with_stats(g: &Graph) -> Result<(Coloring, BranchStats)> {
    let mut engine = Engine::default();
    engine.tasks.push(Task::Solve(g.clone()));
    while let Some(task) = engine.tasks.pop() {
        match task {
            Task::Solve(x) => engine.solve(x)?,
            Task::Finish(step) => engine.finish(step)?,
        }
    }
    let colors = engine
        .results
        .pop()
        .ok_or_else(|| Error::invariant("brooks", "no result produced"))?;
    let mut coloring = Coloring::from_total(colors);
    coloring.compact();
    if !coloring.is_proper_on(g) {
        return Err(Error::invariant("brooks", "final coloring is not proper"));
    }
    Ok((coloring, engine.stats))
}

enum Task {
    Solve(Graph),
    Finish(Step),
}

enum Step {
    /// Pops one result per part.
    Join { n: usize, parts: Vec<Vec<usize>> },
    /// Pops the coloring of `graph - v` (vertices above `v` shifted down).
    HittingClass { graph: Graph, v: usize },
    /// Pops the coloring of `graph - class`.
    AddClass {
        graph: Graph,
        class: VertexSet,
        rest: Vec<usize>,
    },
    Diamond {
        graph: Graph,
        diamond: Diamond,
        rest: Vec<usize>,
    },
    CycleSurgery {
        graph: Graph,
        cycle: Vec<usize>,
        rest: Vec<usize>,
        x: usize,
        y: usize,
    },
}

#[derive(Default)]
struct Engine {
    tasks: Vec<Task>,
    results: Vec<Vec<usize>>,
    stats: BranchStats,
}

impl Engine {
    fn solve(&mut self, x: Graph) -> Result<()> {
        let n = x.n();
        if n == 0 {
            self.results.push(Vec::new());
            return Ok(());
        }
        let comps = components(&x);
        if comps.len() > 1 {
            let parts: Vec<Vec<usize>> = comps.iter().map(|c| c.members().to_vec()).collect();
            let subs: Vec<Graph> = comps.iter().map(|c| induced_subgraph(&x, c).graph).collect();
            self.tasks.push(Task::Finish(Step::Join { n, parts }));
            for sub in subs.into_iter().rev() {
                self.tasks.push(Task::Solve(sub));
            }
            return Ok(());
        }

        let delta = x.max_degree();
        if delta <= 2 {
            self.stats.path_or_cycle += 1;
            self.results.push(color_path_or_cycle(&x));
        } else if x.is_complete() {
            self.stats.complete += 1;
            self.results.push((0..n).collect());
        } else if !x.is_regular() {
            self.stats.peel += 1;
            self.results.push(peel_color(&x, delta.max(3))?);
        } else if delta >= 4 {
            self.stats.hitting_class += 1;
            let v = 0;
            let rest = remove_vertices(&x, &VertexSet::new(n, [v])?);
            self.tasks
                .push(Task::Finish(Step::HittingClass { graph: x, v }));
            self.tasks.push(Task::Solve(rest.graph));
        } else if let Some(diamond) = find_diamond(&x) {
            self.stats.diamond += 1;
            let rest = remove_vertices(&x, &VertexSet::new(n, diamond.vertices())?);
            self.tasks.push(Task::Finish(Step::Diamond {
                graph: x,
                diamond,
                rest: rest.to_parent,
            }));
            self.tasks.push(Task::Solve(rest.graph));
        } else {
            self.stats.cycle_surgery += 1;
            self.start_cycle_surgery(x)?;
        }
        Ok(())
    }

    fn start_cycle_surgery(&mut self, x: Graph) -> Result<()> {
        let n = x.n();
        let cycle = find_shortest_cycle(&x)
            .ok_or_else(|| Error::invariant("cycle surgery", "cubic graph without a cycle"))?;
        let on_cycle = VertexSet::new(n, cycle.iter().copied())?;
        let mut attachments: Vec<usize> = cycle
            .iter()
            .flat_map(|&u| x.neighbors(u).iter().copied())
            .filter(|&w| !on_cycle.contains(w))
            .collect();
        attachments.sort_unstable();
        attachments.dedup();
        if attachments.len() < 2 {
            return Err(Error::invariant(
                "cycle surgery",
                format!("cycle {cycle:?} has fewer than two attachments"),
            ));
        }
        let (x_att, y_att) = (attachments[0], attachments[1]);
        let rest = remove_vertices(&x, &on_cycle);
        let lx = rest.local_of(x_att).expect("attachment lies off the cycle");
        let ly = rest.local_of(y_att).expect("attachment lies off the cycle");
        let reduced = rest.graph.with_edge(lx, ly)?;
        if reduced.max_degree() > 3 {
            return Err(Error::invariant("cycle surgery", "reduced graph has Δ > 3"));
        }
        self.tasks.push(Task::Finish(Step::CycleSurgery {
            graph: x,
            cycle,
            rest: rest.to_parent,
            x: x_att,
            y: y_att,
        }));
        self.tasks.push(Task::Solve(reduced));
        Ok(())
    }

    fn pop_result(&mut self) -> Result<Vec<usize>> {
        self.results
            .pop()
            .ok_or_else(|| Error::invariant("brooks", "missing subresult"))
    }

    fn finish(&mut self, step: Step) -> Result<()> {
        match step {
            Step::Join { n, parts } => {
                let split = self
                    .results
                    .len()
                    .checked_sub(parts.len())
                    .ok_or_else(|| Error::invariant("brooks", "missing component results"))?;
                let subs = self.results.split_off(split);
                let mut colors = vec![0; n];
                for (part, sub) in parts.iter().zip(subs) {
                    for (i, &v) in part.iter().enumerate() {
                        colors[v] = sub[i];
                    }
                }
                self.results.push(colors);
            }
            Step::HittingClass { graph, v } => {
                let sub = self.pop_result()?;
                self.finish_hitting_class(graph, v, sub)?;
            }
            Step::AddClass { graph, class, rest } => {
                let sub = self.pop_result()?;
                let fresh = sub.iter().max().map_or(0, |&c| c + 1);
                let mut colors = vec![fresh; graph.n()];
                for (i, &p) in rest.iter().enumerate() {
                    colors[p] = sub[i];
                }
                debug_assert!(class.iter().all(|m| colors[m] == fresh));
                self.push_checked("hitting class", &graph, colors, graph.max_degree())?;
            }
            Step::Diamond {
                graph,
                diamond,
                rest,
            } => {
                let sub = self.pop_result()?;
                let partial = lift(graph.n(), &rest, &sub);
                let full = extend_diamond_coloring(&graph, diamond, &partial)?;
                let colors = full.to_total().expect("extension is total");
                self.push_checked("diamond", &graph, colors, 3)?;
            }
            Step::CycleSurgery {
                graph,
                cycle,
                rest,
                x,
                y,
            } => {
                let sub = self.pop_result()?;
                let partial = lift(graph.n(), &rest, &sub);
                if partial.get(x) == partial.get(y) {
                    return Err(Error::invariant(
                        "cycle surgery",
                        "attachments received the same color",
                    ));
                }
                if sub.iter().any(|&c| c >= 3) {
                    return Err(Error::invariant(
                        "cycle surgery",
                        "reduced graph needed more than 3 colors",
                    ));
                }
                let on_cycle = VertexSet::new(graph.n(), cycle.iter().copied())?;
                let mut lists = vec![Vec::new(); graph.n()];
                for &u in &cycle {
                    let taken: Vec<usize> = graph
                        .neighbors(u)
                        .iter()
                        .filter(|&&w| !on_cycle.contains(w))
                        .filter_map(|&w| partial.get(w))
                        .collect();
                    lists[u] = (0..3).filter(|c| !taken.contains(c)).collect();
                }
                let around = extend_cycle_coloring(&cycle, &ListAssignment::new(lists))?;
                let colors = (0..graph.n())
                    .map(|v| {
                        partial
                            .get(v)
                            .or_else(|| around.get(v))
                            .ok_or_else(|| Error::invariant("cycle surgery", "vertex left uncolored"))
                    })
                    .collect::<Result<Vec<_>>>()?;
                self.push_checked("cycle surgery", &graph, colors, 3)?;
            }
        }
        Ok(())
    }

    fn finish_hitting_class(&mut self, graph: Graph, v: usize, sub: Vec<usize>) -> Result<()> {
        let n = graph.n();
        let delta = graph.max_degree();
        let rest: Vec<usize> = (0..n).filter(|&u| u != v).collect();
        let partial = lift(n, &rest, &sub);
        if partial.num_colors() > delta {
            return Err(Error::invariant(
                "hitting class",
                format!("X - v used {} > Δ = {delta} colors", partial.num_colors()),
            ));
        }
        let hit = find_hitting_color(&graph, v, &partial)?;
        let class = VertexSet::new(n, (0..n).filter(|&u| partial.get(u) == Some(hit)))?;
        let maximal = expand_to_maximal_independent(&graph, &class)?;
        let reduced = remove_vertices(&graph, &maximal);
        if reduced.graph.max_degree() >= delta {
            return Err(Error::invariant(
                "hitting class",
                "removing the maximal independent set kept Δ",
            ));
        }
        if !enumerate_cliques(&reduced.graph, delta, DEFAULT_CLIQUE_CAP)?.is_empty() {
            return Err(Error::invariant(
                "hitting class",
                "a K_Δ survived removal of the hitting class",
            ));
        }
        self.tasks.push(Task::Finish(Step::AddClass {
            graph,
            class: maximal,
            rest: reduced.to_parent,
        }));
        self.tasks.push(Task::Solve(reduced.graph));
        Ok(())
    }

    fn push_checked(
        &mut self,
        step: &'static str,
        graph: &Graph,
        colors: Vec<usize>,
        bound: usize,
    ) -> Result<()> {
        let mut coloring = Coloring::from_total(colors);
        coloring.compact();
        if !coloring.is_proper_on(graph) {
            return Err(Error::invariant(step, "extended coloring is not proper"));
        }
        if coloring.num_colors() > bound {
            return Err(Error::invariant(
                step,
                format!("used {} colors, bound {bound}", coloring.num_colors()),
            ));
        }
        self.results.push(coloring.to_total().expect("total"));
        Ok(())
    }
}

fn lift(n: usize, to_parent: &[usize], sub: &[usize]) -> Coloring {
    let mut c = Coloring::uncolored(n);
    for (i, &p) in to_parent.iter().enumerate() {
        c.set(p, sub[i]);
    }
    c
}

/// Colors a connected graph with `Δ ≤ 2`: alternate along the walk, and give
/// the last vertex of an odd cycle color 2.
fn color_path_or_cycle(x: &Graph) -> Vec<usize> {
    let n = x.n();
    let start = (0..n).find(|&v| x.degree(v) <= 1).unwrap_or(0);
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    let mut cur = Some(start);
    while let Some(u) = cur {
        seen[u] = true;
        order.push(u);
        cur = x.neighbors(u).iter().copied().find(|&w| !seen[w]);
    }
    let mut colors = vec![0; n];
    for (i, &u) in order.iter().enumerate() {
        colors[u] = i % 2;
    }
    let is_cycle = n >= 3 && x.min_degree() == 2;
    if is_cycle && n % 2 == 1 {
        colors[order[n - 1]] = 2;
    }
    colors
}

/// Repeatedly removes the smallest-id vertex with fewer than `k` remaining
/// neighbors. Returns the removal order, or `None` if some vertices never
/// drop below `k`.
pub(crate) fn peel_order(x: &Graph, k: usize) -> Option<Vec<usize>> {
    let n = x.n();
    let mut deg: Vec<usize> = (0..n).map(|v| x.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut ready: std::collections::BTreeSet<usize> = (0..n).filter(|&v| deg[v] < k).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(v) = ready.pop_first() {
        removed[v] = true;
        order.push(v);
        for &w in x.neighbors(v) {
            if !removed[w] {
                deg[w] -= 1;
                if deg[w] < k {
                    ready.insert(w);
                }
            }
        }
    }
    (order.len() == n).then_some(order)
}

/// Greedy coloring in reverse peel order; each vertex sees fewer than `k`
/// colored neighbors, so colors stay below `k`.
fn peel_color(x: &Graph, k: usize) -> Result<Vec<usize>> {
    let order = peel_order(x, k)
        .ok_or_else(|| Error::invariant("peel", "non-regular component did not peel"))?;
    let mut colors: Vec<Option<usize>> = vec![None; x.n()];
    for &v in order.iter().rev() {
        let taken: Vec<usize> = x.neighbors(v).iter().filter_map(|&w| colors[w]).collect();
        let c = (0..k)
            .find(|c| !taken.contains(c))
            .ok_or_else(|| Error::invariant("peel", format!("no free color at vertex {v}")))?;
        colors[v] = Some(c);
    }
    Ok(colors.into_iter().map(|c| c.expect("all colored")).collect())
}

/// The smallest color that appears on every `K_Δ` of `x`.
///
/// `x` must be `Δ`-regular with `Δ ≥ 4` and `K_{Δ+1}`-free, and `partial` a
/// proper coloring of `x - v` leaving only `v` uncolored.
pub fn find_hitting_color(x: &Graph, v: usize, partial: &Coloring) -> Result<usize> {
    let delta = x.max_degree();
    if !x.is_regular() || delta < 4 {
        return Err(Error::Precondition(
            "hitting color needs a Δ-regular graph with Δ ≥ 4".into(),
        ));
    }
    if partial.n() != x.n() || !partial.is_proper_on(x) {
        return Err(Error::Precondition("partial coloring is not proper".into()));
    }
    if partial.get(v).is_some() || (0..x.n()).any(|u| u != v && partial.get(u).is_none()) {
        return Err(Error::Precondition(
            "partial coloring must color exactly V - v".into(),
        ));
    }
    let cliques = enumerate_cliques(x, delta, DEFAULT_CLIQUE_CAP)?;
    let palette = partial.colors_used();
    let limit = palette.last().map_or(0, |&c| c + 1);
    (0..limit.max(1))
        .find(|&c| {
            cliques
                .iter()
                .all(|k| k.iter().any(|&u| partial.get(u) == Some(c)))
        })
        .ok_or_else(|| Error::invariant("hitting class", "no color meets every K_Δ"))
}

/// Greedily extends the independent set `s` (ascending ids) until maximal.
pub fn expand_to_maximal_independent(g: &Graph, s: &VertexSet) -> Result<VertexSet> {
    if s.ambient_n() != g.n() {
        return Err(Error::InvalidInput("vertex set ambient size mismatch".into()));
    }
    if !g.is_independent(s) {
        return Err(Error::Precondition("set is not independent".into()));
    }
    let mut inside = s.mask();
    let mut blocked = vec![false; g.n()];
    for v in s.iter() {
        for &w in g.neighbors(v) {
            blocked[w] = true;
        }
    }
    for v in 0..g.n() {
        if !inside[v] && !blocked[v] {
            inside[v] = true;
            for &w in g.neighbors(v) {
                blocked[w] = true;
            }
        }
    }
    Ok(VertexSet::from_mask(&inside))
}

/// Extends a proper 3-coloring of `g - D` to the diamond `D`: `a` and `b` share
/// a color avoiding their outside neighbors, then `c` and `d` take what is
/// left.
///
/// `c` and `d` must have no neighbors outside `D`, and `a`, `b` at most one
/// each (as in a cubic graph).
pub fn extend_diamond_coloring(g: &Graph, d: Diamond, partial: &Coloring) -> Result<Coloring> {
    let n = g.n();
    let verts = d.vertices();
    let in_d = |v: usize| verts.contains(&v);
    if verts.iter().any(|&v| v >= n) || partial.n() != n {
        return Err(Error::InvalidInput("diamond or coloring does not fit the graph".into()));
    }
    let shape_ok = !g.has_edge(d.a, d.b)
        && [(d.a, d.c), (d.a, d.d), (d.b, d.c), (d.b, d.d), (d.c, d.d)]
            .iter()
            .all(|&(u, v)| g.has_edge(u, v));
    if !shape_ok {
        return Err(Error::Precondition("vertices do not induce a diamond".into()));
    }
    let outside = |v: usize| -> Vec<usize> {
        g.neighbors(v).iter().copied().filter(|&w| !in_d(w)).collect()
    };
    if !outside(d.c).is_empty() || !outside(d.d).is_empty() {
        return Err(Error::Precondition("c and d must have no outside neighbors".into()));
    }
    let (out_a, out_b) = (outside(d.a), outside(d.b));
    if out_a.len() > 1 || out_b.len() > 1 {
        return Err(Error::Precondition(
            "a and b may have at most one outside neighbor each".into(),
        ));
    }
    for v in 0..n {
        let expected = !in_d(v);
        if partial.get(v).is_some() != expected {
            return Err(Error::Precondition(
                "partial coloring must color exactly G - D".into(),
            ));
        }
        if partial.get(v).is_some_and(|c| c >= 3) {
            return Err(Error::Precondition("partial coloring uses more than 3 colors".into()));
        }
    }
    if !partial.is_proper_on(g) {
        return Err(Error::Precondition("partial coloring is not proper".into()));
    }

    let taken: Vec<usize> = out_a
        .iter()
        .chain(&out_b)
        .filter_map(|&w| partial.get(w))
        .collect();
    let shared = (0..3)
        .find(|c| !taken.contains(c))
        .ok_or_else(|| Error::invariant("diamond", "no common color for a and b"))?;
    let mut full = partial.clone();
    full.set(d.a, shared);
    full.set(d.b, shared);
    let c_color = (0..3).find(|&c| c != shared).expect("3 colors");
    full.set(d.c, c_color);
    let d_color = (0..3)
        .find(|&c| c != shared && c != c_color)
        .expect("3 colors");
    full.set(d.d, d_color);
    if !full.is_proper_on(g) {
        return Err(Error::invariant("diamond", "extension is not proper"));
    }
    Ok(full)
}

/// Colors a cycle from 2-lists that are not all equal.
///
/// Finds consecutive `u, w` with `L(u) ≠ L(w)`, gives `u` a color outside
/// `L(w)`, walks away from `w` giving each vertex its smallest color unequal
/// to its predecessor's, and colors `w` last.
pub fn extend_cycle_coloring(cycle: &[usize], lists: &ListAssignment) -> Result<Coloring> {
    let k = cycle.len();
    if k < 3 {
        return Err(Error::InvalidInput("a cycle needs at least 3 vertices".into()));
    }
    if let Some(&v) = cycle.iter().find(|&&v| v >= lists.n()) {
        return Err(Error::VertexOutOfRange { vertex: v, n: lists.n() });
    }
    if let Some(&v) = cycle.iter().find(|&&v| lists.list(v).len() != 2) {
        return Err(Error::Precondition(format!(
            "vertex {v} has {} available colors, expected 2",
            lists.list(v).len()
        )));
    }
    let i = (0..k)
        .find(|&i| lists.list(cycle[i]) != lists.list(cycle[(i + 1) % k]))
        .ok_or_else(|| Error::Precondition("all cycle lists are identical".into()))?;
    let u = cycle[i];
    let w = cycle[(i + 1) % k];
    let mut coloring = Coloring::uncolored(lists.n());
    let first = lists
        .list(u)
        .iter()
        .copied()
        .find(|&c| !lists.contains(w, c))
        .expect("distinct 2-lists differ in some color");
    coloring.set(u, first);
    let mut prev = first;
    // cycle[i-1], cycle[i-2], ..., cycle[i+1] = w
    for step in 1..k {
        let v = cycle[(i + k - step) % k];
        let mut options = lists.list(v).iter().copied().filter(|&c| c != prev);
        let c = if v == w {
            options.find(|&c| c != first)
        } else {
            options.next()
        }
        .ok_or_else(|| Error::invariant("cycle extension", format!("vertex {v} has no color left")))?;
        coloring.set(v, c);
        prev = c;
    }
    Ok(coloring)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{complete, complete_bipartite, cycle, petersen};

    #[test]
    fn small_examples() {
        let k4 = brooks_color(&complete(4)).unwrap();
        assert!(k4.is_proper_on(&complete(4)));
        assert_eq!(k4.num_colors(), 4);

        let p = petersen();
        let (c, stats) = brooks_color_with_stats(&p).unwrap();
        assert!(c.is_proper_on(&p) && c.is_total());
        assert!(c.num_colors() <= 3);
        assert_eq!(stats.cycle_surgery, 1);

        let c5 = brooks_color(&cycle(5)).unwrap();
        assert_eq!(c5.num_colors(), 3);
        assert!(c5.is_proper_on(&cycle(5)));
    }

    #[test]
    fn bounds() {
        assert_eq!(component_bound(&complete(4)), 4);
        assert_eq!(component_bound(&cycle(5)), 3);
        assert_eq!(component_bound(&Graph::empty(1)), 1);
        assert_eq!(color_bound(&Graph::empty(0)), 0);
        assert_eq!(color_bound(&complete_bipartite(4, 4)), 4);
    }

    #[test]
    fn hitting_color_vacuous_on_k44() {
        let g = complete_bipartite(4, 4);
        let mut partial = Coloring::uncolored(8);
        for v in 1..8 {
            partial.set(v, usize::from(v >= 4));
        }
        assert_eq!(find_hitting_color(&g, 0, &partial).unwrap(), 0);
    }

    #[test]
    fn hitting_color_two_k4s_with_matching() {
        // K4 on 0..4, K4 on 4..8, matching i -- i+4.
        let mut edges = Vec::new();
        for base in [0, 4] {
            for u in 0..4 {
                for v in u + 1..4 {
                    edges.push((base + u, base + v));
                }
            }
        }
        edges.extend((0..4).map(|i| (i, i + 4)));
        let g = Graph::new(8, edges).unwrap();
        assert!(g.is_regular() && g.max_degree() == 4);
        let mut partial = Coloring::uncolored(8);
        for (v, c) in [(1, 0), (2, 1), (3, 2), (4, 1), (5, 2), (6, 3), (7, 0)] {
            partial.set(v, c);
        }
        assert!(partial.is_proper_on(&g));
        let c = find_hitting_color(&g, 0, &partial).unwrap();
        let cliques = enumerate_cliques(&g, 4, 100).unwrap();
        assert_eq!(cliques.len(), 2);
        assert!(cliques.iter().all(|k| k.iter().any(|&u| partial.get(u) == Some(c))));
        // Colors 0, 1, 2 each meet both cliques; the smallest wins.
        assert_eq!(c, 0);
    }

    #[test]
    fn maximal_independent_examples() {
        let c4 = cycle(4);
        let s = expand_to_maximal_independent(&c4, &VertexSet::new(4, [0]).unwrap()).unwrap();
        assert_eq!(s.members(), &[0, 2]);
        let k4 = complete(4);
        let s = expand_to_maximal_independent(&k4, &VertexSet::new(4, [1]).unwrap()).unwrap();
        assert_eq!(s.members(), &[1]);
        let p = petersen();
        let s = expand_to_maximal_independent(&p, &VertexSet::new(10, [0]).unwrap()).unwrap();
        assert!(s.contains(0) && s.len() >= 3 && p.is_independent(&s));
        assert!((0..10).all(|v| s.contains(v) || p.neighbors(v).iter().any(|&w| s.contains(w))));
        assert!(expand_to_maximal_independent(&c4, &VertexSet::new(4, [0, 1]).unwrap()).is_err());
    }

    fn diamond_fragment() -> (Graph, Diamond) {
        // a=0, b=1, c=2, d=3, x=4 ~ a, y=5 ~ b, x ~ y.
        let g = Graph::new(
            6,
            [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (4, 0), (5, 1), (4, 5)],
        )
        .unwrap();
        (g, Diamond { a: 0, b: 1, c: 2, d: 3 })
    }

    #[test]
    fn diamond_extension_examples() {
        let (g, d) = diamond_fragment();
        let mut partial = Coloring::uncolored(6);
        partial.set(4, 0);
        partial.set(5, 1);
        let full = extend_diamond_coloring(&g, d, &partial).unwrap();
        assert_eq!((full.get(0), full.get(1)), (Some(2), Some(2)));
        assert!(full.is_proper_on(&g) && full.is_total());
        let cd = [full.get(2).unwrap(), full.get(3).unwrap()];
        assert!(cd.iter().all(|&c| c < 2));

        // Externals sharing a color: a and b still get a common color.
        let g2 = Graph::new(5, [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (4, 0), (4, 1)]).unwrap();
        let mut partial = Coloring::uncolored(5);
        partial.set(4, 0);
        let full = extend_diamond_coloring(&g2, d, &partial).unwrap();
        assert_eq!(full.get(0), full.get(1));
        assert!(matches!(full.get(0), Some(1) | Some(2)));
        assert!(full.is_proper_on(&g2));

        let mut not_total = Coloring::uncolored(6);
        not_total.set(4, 0);
        assert!(matches!(
            extend_diamond_coloring(&g, d, &not_total),
            Err(Error::Precondition(_))
        ));
    }

    fn brute_force_cycle_colorable(cycle: &[usize], lists: &ListAssignment) -> bool {
        let k = cycle.len();
        (0..1usize << k).any(|mask| {
            let pick = |i: usize| lists.list(cycle[i])[(mask >> i) & 1];
            (0..k).all(|i| pick(i) != pick((i + 1) % k))
        })
    }

    #[test]
    fn cycle_extension_examples() {
        let lists = ListAssignment::new(vec![vec![0, 1], vec![0, 1], vec![1, 2]]);
        assert!(brute_force_cycle_colorable(&[0, 1, 2], &lists));
        let c = extend_cycle_coloring(&[0, 1, 2], &lists).unwrap();
        assert!(c.is_proper_on(&cycle(3)));
        assert!((0..3).all(|v| lists.contains(v, c.get(v).unwrap())));
        assert_eq!(c.get(2), Some(2));

        let lists = ListAssignment::new(vec![vec![0, 1], vec![0, 1], vec![0, 1], vec![0, 2]]);
        assert!(brute_force_cycle_colorable(&[0, 1, 2, 3], &lists));
        let c = extend_cycle_coloring(&[0, 1, 2, 3], &lists).unwrap();
        assert!(c.is_proper_on(&cycle(4)));
        assert!((0..4).all(|v| lists.contains(v, c.get(v).unwrap())));

        let same = ListAssignment::new(vec![vec![0, 1]; 4]);
        assert!(matches!(
            extend_cycle_coloring(&[0, 1, 2, 3], &same),
            Err(Error::Precondition(_))
        ));
        let wrong_size = ListAssignment::new(vec![vec![0, 1, 2], vec![0, 1], vec![1, 2]]);
        assert!(extend_cycle_coloring(&[0, 1, 2], &wrong_size).is_err());
    }

    #[test]
    fn deterministic() {
        let g = crate::generate::random_regular(16, 3, 5).unwrap();
        assert_eq!(brooks_color(&g).unwrap(), brooks_color(&g).unwrap());
    }
}
