//! Orientations with prescribed minimum in-degrees.
//!
//! `G` has an orientation with `d⁻(v) ≥ g(v)` for all `v` exactly when every
//! vertex set `H` satisfies `‖H‖ + ‖H, G−H‖ ≥ Σ_{v∈H} g(v)`, i.e. the edges
//! touching `H` can pay for `H`'s demand. We decide it with a max-flow on
//!
//! ```text
//! source --1--> edge e --1--> each endpoint v --g(v)--> sink
//! ```
//!
//! A full flow orients each edge toward the endpoint it feeds. A short flow
//! leaves a min cut; the vertices not reachable from the source in the
//! residual network form a set `H` whose touching edges number fewer than
//! its demand.

use std::collections::{BTreeMap, VecDeque};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// An orientation, as the head of every edge `(u, v)` with `u < v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orientation {
    pub heads: BTreeMap<(usize, usize), usize>,
}

impl Orientation {
    /// Arcs `(tail, head)` in edge order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.heads
            .iter()
            .map(|(&(u, v), &h)| if h == v { (u, v) } else { (v, u) })
    }

    pub fn in_degrees(&self, n: usize) -> Vec<usize> {
        let mut d = vec![0; n];
        for &h in self.heads.values() {
            d[h] += 1;
        }
        d
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrientationOutcome {
    Feasible(Orientation),
    /// A vertex set whose touching edges cannot meet its total demand.
    Violator(VertexSet),
}

impl OrientationOutcome {
    pub fn is_feasible(&self) -> bool {
        matches!(self, OrientationOutcome::Feasible(_))
    }
}

/// Solves the in-degree orientation problem for demands `g`.
pub fn solve_min_indegree_orientation(g: &Graph, demand: &[usize]) -> Result<OrientationOutcome> {
    Ok(solve_with_flow(g, demand)?.0)
}

/// Like [`solve_min_indegree_orientation`], also returning the max-flow value.
pub fn solve_with_flow(g: &Graph, demand: &[usize]) -> Result<(OrientationOutcome, usize)> {
    let n = g.n();
    if demand.len() != n {
        return Err(Error::InvalidInput(format!(
            "demand covers {} vertices, graph has {n}",
            demand.len()
        )));
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let m = edges.len();
    let source = 0;
    let sink = 1;
    let edge_node = |i: usize| 2 + i;
    let vertex_node = |v: usize| 2 + m + v;

    let mut net = FlowNetwork::new(2 + m + n);
    let mut to_endpoint = Vec::with_capacity(m);
    for (i, &(u, v)) in edges.iter().enumerate() {
        net.add_arc(source, edge_node(i), 1);
        let au = net.add_arc(edge_node(i), vertex_node(u), 1);
        let av = net.add_arc(edge_node(i), vertex_node(v), 1);
        to_endpoint.push((au, av));
    }
    for (v, &dv) in demand.iter().enumerate() {
        if dv > 0 {
            net.add_arc(vertex_node(v), sink, dv);
        }
    }
    let total: usize = demand.iter().sum();
    let flow = net.max_flow(source, sink);

    if flow == total {
        let heads = edges
            .iter()
            .zip(&to_endpoint)
            .map(|(&(u, v), &(au, av))| {
                let head = if net.flow_on(av) > 0 {
                    v
                } else if net.flow_on(au) > 0 {
                    u
                } else {
                    u.min(v)
                };
                ((u, v), head)
            })
            .collect();
        Ok((OrientationOutcome::Feasible(Orientation { heads }), flow))
    } else {
        let reach = net.residual_reachable(source);
        let violator = VertexSet::new(n, (0..n).filter(|&v| !reach[vertex_node(v)]))?;
        if violator.is_empty() {
            return Err(Error::invariant("orientation", "short flow with empty cut side"));
        }
        Ok((OrientationOutcome::Violator(violator), flow))
    }
}

/// True when every vertex's in-degree under `orientation` meets its demand.
/// Rejects orientations that do not cover exactly the edges of `g`.
pub fn verify_orientation_demands(
    orientation: &Orientation,
    g: &Graph,
    demand: &[usize],
) -> Result<bool> {
    if demand.len() != g.n() {
        return Err(Error::InvalidInput("demand length differs from n".into()));
    }
    if orientation.heads.len() != g.edge_count() {
        return Err(Error::InvalidInput(
            "orientation does not cover the edge set".into(),
        ));
    }
    for (u, v) in g.edges() {
        match orientation.heads.get(&(u, v)) {
            Some(&h) if h == u || h == v => {}
            Some(&h) => {
                return Err(Error::InvalidInput(format!(
                    "head {h} is not an endpoint of {u}-{v}"
                )))
            }
            None => {
                return Err(Error::InvalidInput(format!("edge {u}-{v} is not oriented")));
            }
        }
    }
    let indeg = orientation.in_degrees(g.n());
    Ok((0..g.n()).all(|v| indeg[v] >= demand[v]))
}

/// True when the edges touching `h` are strictly fewer than `h`'s demand.
pub fn verify_violator(g: &Graph, demand: &[usize], h: &VertexSet) -> Result<bool> {
    if h.is_empty() {
        return Err(Error::InvalidInput("violator must be nonempty".into()));
    }
    if demand.len() != g.n() || h.ambient_n() != g.n() {
        return Err(Error::InvalidInput("size mismatch".into()));
    }
    Ok(edges_touching(g, h) < h.iter().map(|v| demand[v]).sum::<usize>())
}

/// `‖H‖ + ‖H, G−H‖`.
pub fn edges_touching(g: &Graph, h: &VertexSet) -> usize {
    let inside = h.mask();
    g.edges().filter(|&(u, v)| inside[u] || inside[v]).count()
}

/// Dinic's algorithm on a residual graph stored as paired arcs.
struct FlowNetwork {
    head: Vec<usize>,
    cap: Vec<usize>,
    original: Vec<usize>,
    out: Vec<Vec<usize>>,
}

impl FlowNetwork {
    fn new(nodes: usize) -> Self {
        FlowNetwork {
            head: Vec::new(),
            cap: Vec::new(),
            original: Vec::new(),
            out: vec![Vec::new(); nodes],
        }
    }

    /// Returns the id of the forward arc; its residual twin is `id ^ 1`.
    fn add_arc(&mut self, from: usize, to: usize, cap: usize) -> usize {
        let id = self.head.len();
        self.head.push(to);
        self.cap.push(cap);
        self.original.push(cap);
        self.out[from].push(id);
        self.head.push(from);
        self.cap.push(0);
        self.original.push(0);
        self.out[to].push(id + 1);
        id
    }

    fn flow_on(&self, arc: usize) -> usize {
        self.original[arc] - self.cap[arc]
    }

    fn levels(&self, s: usize) -> Vec<usize> {
        let mut level = vec![usize::MAX; self.out.len()];
        level[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &id in &self.out[u] {
                let w = self.head[id];
                if self.cap[id] > 0 && level[w] == usize::MAX {
                    level[w] = level[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        level
    }

    fn residual_reachable(&self, s: usize) -> Vec<bool> {
        self.levels(s).iter().map(|&l| l != usize::MAX).collect()
    }

    fn max_flow(&mut self, s: usize, t: usize) -> usize {
        let mut total = 0;
        loop {
            let level = self.levels(s);
            if level[t] == usize::MAX {
                return total;
            }
            let mut next = vec![0; self.out.len()];
            loop {
                let pushed = self.augment(s, t, usize::MAX, &level, &mut next);
                if pushed == 0 {
                    break;
                }
                total += pushed;
            }
        }
    }

    /// One blocking-flow augmentation along level-increasing arcs, using an
    /// explicit stack of arc choices.
    fn augment(&mut self, s: usize, t: usize, limit: usize, level: &[usize], next: &mut [usize]) -> usize {
        let mut path: Vec<usize> = Vec::new();
        let mut u = s;
        loop {
            if u == t {
                let bottleneck = path
                    .iter()
                    .map(|&id| self.cap[id])
                    .min()
                    .unwrap_or(limit)
                    .min(limit);
                for &id in &path {
                    self.cap[id] -= bottleneck;
                    self.cap[id ^ 1] += bottleneck;
                }
                return bottleneck;
            }
            let mut advanced = false;
            while next[u] < self.out[u].len() {
                let id = self.out[u][next[u]];
                let w = self.head[id];
                if self.cap[id] > 0 && level[w] == level[u] + 1 {
                    path.push(id);
                    u = w;
                    advanced = true;
                    break;
                }
                next[u] += 1;
            }
            if !advanced {
                if u == s {
                    return 0;
                }
                // Dead end: retreat and skip the arc that led here.
                let id = path.pop().expect("non-source node has an incoming path arc");
                u = self.head[id ^ 1];
                next[u] += 1;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{complete, complete_bipartite, cycle, path};

    #[test]
    fn c4_unit_demand_is_feasible() {
        let g = cycle(4);
        let out = solve_min_indegree_orientation(&g, &[1; 4]).unwrap();
        let OrientationOutcome::Feasible(o) = out else {
            panic!("expected feasible")
        };
        assert_eq!(o.in_degrees(4), vec![1; 4]);
        assert!(verify_orientation_demands(&o, &g, &[1; 4]).unwrap());
    }

    #[test]
    fn star_demand_has_full_violator() {
        let g = complete_bipartite(1, 3);
        let demand = [2, 1, 1, 1];
        let (out, flow) = solve_with_flow(&g, &demand).unwrap();
        assert_eq!(out, OrientationOutcome::Violator(VertexSet::full(4)));
        assert_eq!(flow, 3);
        assert!(verify_violator(&g, &demand, &VertexSet::full(4)).unwrap());
    }

    #[test]
    fn k4_unit_demand_is_feasible() {
        let out = solve_min_indegree_orientation(&complete(4), &[1; 4]).unwrap();
        assert!(out.is_feasible());
    }

    #[test]
    fn verify_examples() {
        let c3 = cycle(3);
        let cyclic = Orientation {
            heads: [((0, 1), 1), ((1, 2), 2), ((0, 2), 0)].into_iter().collect(),
        };
        assert!(verify_orientation_demands(&cyclic, &c3, &[1; 3]).unwrap());
        let p3 = path(3);
        let straight = Orientation {
            heads: [((0, 1), 1), ((1, 2), 2)].into_iter().collect(),
        };
        assert!(!verify_orientation_demands(&straight, &p3, &[1; 3]).unwrap());
        let partial = Orientation {
            heads: [((0, 1), 1)].into_iter().collect(),
        };
        assert!(verify_orientation_demands(&partial, &p3, &[1; 3]).is_err());

        assert!(!verify_violator(&cycle(4), &[1; 4], &VertexSet::full(4)).unwrap());
        assert!(verify_violator(&cycle(4), &[1; 4], &VertexSet::empty(4)).is_err());
    }

    #[test]
    fn zero_demand_uses_default_orientation() {
        let g = cycle(5);
        let OrientationOutcome::Feasible(o) = solve_min_indegree_orientation(&g, &[0; 5]).unwrap()
        else {
            panic!("zero demand is always feasible")
        };
        assert!(o.heads.iter().all(|(&(u, v), &h)| h == u.min(v)));
    }
}
