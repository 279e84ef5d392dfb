use std::collections::BTreeMap;
use std::time::Instant;

use serde_json::{json, Map, Value};

use brooks_core::brooks::{brooks_color_with_stats, color_bound, expand_to_maximal_independent};
use brooks_core::choosability::{general_tool_witness, large_independent_set, list_brooks_color_with_stats};
use brooks_core::generate::{random_lists, random_regular};
use brooks_core::io::{encode_graph6, Partition};
use brooks_core::kernels::{
    build_ab_digraph, find_kernel_ab, heads_toward_a, is_kernel, kernel_lemma_color, painter_move, AbDigraph,
};
use brooks_core::oracles::{
    chromatic_number, clique_number, find_bad_list_assignment, is_f_choosable, paint_game_solve,
    verify_coloring, PainterStrategy, Winner,
};
use brooks_core::orientations::{
    edges_touching, solve_min_indegree_orientation, verify_orientation_demands, verify_violator,
    OrientationOutcome,
};
use brooks_core::{Coloring, Error, Graph, ListAssignment, Result, VertexSet};

/// What a command produced, before it is wrapped into a report.
pub struct Outcome {
    pub result: Value,
    /// Certificate checks. Any `false` here is a broken contract.
    pub checks: Map<String, Value>,
    /// A well-formed "no" answer (exit 1).
    pub negative: bool,
    pub summary: String,
}

impl Outcome {
    fn new(result: Value, summary: String) -> Self {
        Outcome {
            result,
            checks: Map::new(),
            negative: false,
            summary,
        }
    }

    fn check(mut self, name: &str, ok: bool) -> Self {
        self.checks.insert(name.into(), Value::Bool(ok));
        self
    }
}

pub struct Ctx {
    pub one_based: bool,
    pub inject_fault: bool,
}

impl Ctx {
    fn colors(&self, c: &Coloring) -> Value {
        let shift = usize::from(self.one_based);
        c.as_slice()
            .iter()
            .map(|x| x.map_or(Value::Null, |c| json!(c + shift)))
            .collect()
    }

    /// Makes the first edge monochromatic when fault injection is on, so the
    /// self-check path can be exercised end to end.
    fn maybe_corrupt(&self, g: &Graph, c: &mut Coloring) {
        if self.inject_fault {
            if let Some((u, v)) = g.edges().next() {
                if let Some(color) = c.get(u) {
                    c.set(v, color);
                }
            }
        }
    }
}

pub fn color(ctx: &Ctx, g: &Graph) -> Result<Outcome> {
    let (mut c, stats) = brooks_color_with_stats(g)?;
    ctx.maybe_corrupt(g, &mut c);
    let bound = color_bound(g);
    let verified = verify_coloring(g, &c, None);
    let used = c.num_colors();
    Ok(Outcome::new(
        json!({
            "colors": ctx.colors(&c),
            "num_colors": used,
            "bound": bound,
            "branches": {
                "path_or_cycle": stats.path_or_cycle,
                "complete": stats.complete,
                "peel": stats.peel,
                "hitting_class": stats.hitting_class,
                "diamond": stats.diamond,
                "cycle_surgery": stats.cycle_surgery,
            },
        }),
        format!("{used} colors (bound {bound}), verified={verified}"),
    )
    .check("verified", verified)
    .check("within_bound", used <= bound))
}

pub fn list_color(ctx: &Ctx, g: &Graph, lists: &ListAssignment) -> Result<Outcome> {
    let (mut c, stats) = list_brooks_color_with_stats(g, lists)?;
    ctx.maybe_corrupt(g, &mut c);
    let verified = verify_coloring(g, &c, Some(lists));
    let critical: Vec<Value> = stats
        .critical
        .iter()
        .map(|&(size, cross)| json!({"size": size, "cross": cross}))
        .collect();
    let critical_ok = stats.critical.iter().all(|&(size, cross)| size == cross);
    Ok(Outcome::new(
        json!({
            "colors": ctx.colors(&c),
            "greedy": stats.greedy,
            "peel": stats.peel,
            "critical": critical,
        }),
        format!("colored from lists, verified={verified}"),
    )
    .check("verified", verified)
    .check("critical_cross_equals_size", critical_ok))
}

pub fn orient(g: &Graph, demand: &[usize]) -> Result<Outcome> {
    match solve_min_indegree_orientation(g, demand)? {
        OrientationOutcome::Feasible(o) => {
            let verified = verify_orientation_demands(&o, g, demand)?;
            let arcs: Vec<[usize; 2]> = o.arcs().map(|(t, h)| [t, h]).collect();
            Ok(Outcome::new(
                json!({"feasible": true, "arcs": arcs, "in_degrees": o.in_degrees(g.n())}),
                format!("orientation found, verified={verified}"),
            )
            .check("verified", verified))
        }
        OrientationOutcome::Violator(h) => {
            let verified = verify_violator(g, demand, &h)?;
            let need: usize = h.iter().map(|v| demand[v]).sum();
            let mut out = Outcome::new(
                json!({
                    "feasible": false,
                    "violator": h.members(),
                    "touching_edges": edges_touching(g, &h),
                    "demand": need,
                }),
                format!("infeasible: violator of size {}", h.len()),
            )
            .check("violator_verified", verified);
            out.negative = true;
            Ok(out)
        }
    }
}

fn ab_from_partition(g: &Graph, p: &Partition) -> Result<AbDigraph> {
    let heads = p.heads.clone().unwrap_or_else(|| heads_toward_a(g, &p.a));
    build_ab_digraph(g, &p.a, &heads)
}

pub fn kernel(ctx: &Ctx, g: &Graph, p: &Partition, lists: Option<&ListAssignment>) -> Result<Outcome> {
    let d = ab_from_partition(g, p)?;
    let k = find_kernel_ab(&d, None)?;
    let is_k = is_kernel(d.digraph(), &VertexSet::full(g.n()), &k);
    let mut result = json!({
        "kernel": k.members(),
        "out_degrees": (0..g.n()).map(|v| d.out_degree(v)).collect::<Vec<_>>(),
    });
    let mut out_checks = vec![("kernel_verified", is_k)];
    if let Some(lists) = lists {
        let mut c = kernel_lemma_color(&d, lists)?;
        ctx.maybe_corrupt(g, &mut c);
        let verified = verify_coloring(g, &c, Some(lists));
        result["colors"] = ctx.colors(&c);
        out_checks.push(("verified", verified));
    }
    let mut out = Outcome::new(result, format!("kernel of size {}, verified={is_k}", k.len()));
    for (name, ok) in out_checks {
        out = out.check(name, ok);
    }
    Ok(out)
}

/// `A` for commands that need one and were not given it: a large independent
/// set when that applies, otherwise a greedy maximal one.
fn auto_independent(g: &Graph) -> Result<VertexSet> {
    match large_independent_set(g) {
        Ok(a) => Ok(a),
        Err(e) if e.is_input_error() => expand_to_maximal_independent(g, &VertexSet::empty(g.n())),
        Err(e) => Err(e),
    }
}

pub fn witness(g: &Graph, f: &[usize], a: Option<VertexSet>) -> Result<Outcome> {
    let a = match a {
        Some(a) => a,
        None => auto_independent(g)?,
    };
    let w = general_tool_witness(g, &a, f)?;
    let h = &w.view.graph;
    let degrees_ok = (0..h.n()).all(|i| w.q.out_degree(i) < w.f_h[i]);
    let arcs: Vec<[usize; 2]> = w
        .q
        .digraph()
        .arcs()
        .map(|(t, hd)| [w.view.to_parent[t], w.view.to_parent[hd]])
        .collect();
    let choosable = match is_f_choosable(h, &w.f_h) {
        Ok(b) => json!(b),
        Err(Error::ResourceLimit(_)) => json!("skipped"),
        Err(e) => return Err(e),
    };
    let mut out = Outcome::new(
        json!({
            "A": a.members(),
            "H": w.view.to_parent,
            "f_H": w.f_h,
            "arcs": arcs,
            "rounds": w.rounds,
        }),
        format!("witness H of size {} after {} rounds", h.n(), w.rounds),
    )
    .check("out_degree_below_f_h", degrees_ok);
    if choosable != json!("skipped") {
        out = out.check("h_f_choosable", choosable == json!(true));
    } else {
        out.checks.insert("h_f_choosable".into(), choosable);
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum PainterKind {
    Kernel,
    Minimax,
}

pub fn paint(g: &Graph, tokens: &[usize], painter: PainterKind, p: Option<&Partition>) -> Result<Outcome> {
    let (winner, extra) = match painter {
        PainterKind::Minimax => (paint_game_solve(g, tokens, None)?, Value::Null),
        PainterKind::Kernel => {
            let d = match p {
                Some(p) => ab_from_partition(g, p)?,
                None => {
                    let a = auto_independent(g)?;
                    build_ab_digraph(g, &a, &budget_heads(g, &a, tokens)?)?
                }
            };
            let mut strategy = |s: &VertexSet| painter_move(&d, s);
            let strategy: &mut PainterStrategy<'_> = &mut strategy;
            let w = paint_game_solve(g, tokens, Some(strategy))?;
            (w, json!({"A": d.a().members()}))
        }
    };
    let name = match winner {
        Winner::Painter => "painter",
        Winner::Lister => "lister",
    };
    let mut out = Outcome::new(
        json!({"winner": name, "painter": format!("{painter:?}").to_lowercase(), "digraph": extra}),
        format!("{name} wins"),
    );
    out.negative = winner == Winner::Lister;
    Ok(out)
}

/// Cross-edge heads keeping `d⁺(v) ≤ tokens(v) − 1` where the demand solver
/// can manage it, and pointing into `a` otherwise.
fn budget_heads(g: &Graph, a: &VertexSet, tokens: &[usize]) -> Result<BTreeMap<(usize, usize), usize>> {
    let cross = Graph::new(g.n(), g.edges().filter(|&(u, v)| a.contains(u) != a.contains(v)))?;
    let demand: Vec<usize> = (0..g.n())
        .map(|v| (g.degree(v) + 1).saturating_sub(tokens[v]))
        .collect();
    Ok(match solve_min_indegree_orientation(&cross, &demand)? {
        OrientationOutcome::Feasible(o) => o.heads,
        OrientationOutcome::Violator(_) => heads_toward_a(g, a),
    })
}

pub fn oracle_chi(g: &Graph) -> Result<Outcome> {
    let chi = chromatic_number(g)?;
    Ok(Outcome::new(json!({"chi": chi}), format!("chromatic number {chi}")))
}

pub fn oracle_omega(g: &Graph) -> Result<Outcome> {
    let omega = clique_number(g)?;
    Ok(Outcome::new(json!({"omega": omega}), format!("clique number {omega}")))
}

pub fn oracle_choosable(g: &Graph, f: &[usize]) -> Result<Outcome> {
    let ok = is_f_choosable(g, f)?;
    let mut result = json!({"choosable": ok});
    if !ok {
        // The reduced search only runs on the core; rerun the full search
        // when it is small enough to name a bad assignment.
        if let Ok(Some(bad)) = find_bad_list_assignment(g, f) {
            result["bad_lists"] = json!(bad.lists());
        }
    }
    let mut out = Outcome::new(result, format!("f-choosable: {ok}"));
    out.negative = !ok;
    Ok(out)
}

pub fn verify(ctx: &Ctx, g: &Graph, colors: &[usize], lists: Option<&ListAssignment>) -> Result<Outcome> {
    let shift = usize::from(ctx.one_based);
    let zero_based: Vec<usize> = colors
        .iter()
        .map(|&c| {
            c.checked_sub(shift)
                .ok_or_else(|| Error::InvalidInput("color 0 in a one-based coloring".into()))
        })
        .collect::<Result<_>>()?;
    let c = Coloring::from_total(zero_based);
    let valid = verify_coloring(g, &c, lists);
    let mut out = Outcome::new(
        json!({"valid": valid, "num_colors": c.num_colors()}),
        format!("coloring valid: {valid}"),
    );
    out.negative = !valid;
    Ok(out)
}

pub fn bench(sizes: &[usize], degrees: &[usize], seeds: u64) -> Result<Outcome> {
    let tasks: Vec<(usize, usize)> = sizes
        .iter()
        .flat_map(|&n| degrees.iter().map(move |&d| (n, d)))
        .filter(|&(n, d)| n > d && (n * d) % 2 == 0)
        .collect();
    let rows: Vec<Result<(Value, bool)>> = std::thread::scope(|scope| {
        let handles: Vec<_> = tasks
            .iter()
            .map(|&(n, d)| scope.spawn(move || bench_row(n, d, seeds)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("bench worker panicked"))
            .collect()
    });
    let mut table = Vec::new();
    let mut all_ok = true;
    for row in rows {
        let (value, ok) = row?;
        all_ok &= ok;
        table.push(value);
    }
    Ok(Outcome::new(
        json!({"rows": table}),
        format!("{} configurations benchmarked", tasks.len()),
    )
    .check("all_verified", all_ok))
}

fn bench_row(n: usize, d: usize, seeds: u64) -> Result<(Value, bool)> {
    let mut ok = true;
    let mut color_s = 0.0;
    let mut list_s = 0.0;
    for seed in 0..seeds {
        let g = random_regular(n, d, seed)?;
        let t = Instant::now();
        let c = brooks_core::brooks::brooks_color(&g)?;
        color_s += t.elapsed().as_secs_f64();
        ok &= verify_coloring(&g, &c, None);
        let lists = random_lists(n, d.max(3), 2 * d.max(3), seed)?;
        let t = Instant::now();
        let c = brooks_core::choosability::list_brooks_color(&g, &lists)?;
        list_s += t.elapsed().as_secs_f64();
        ok &= verify_coloring(&g, &c, Some(&lists));
    }
    let rate = |s: f64| if s > 0.0 { seeds as f64 / s } else { f64::INFINITY };
    Ok((
        json!({
            "n": n,
            "d": d,
            "graphs": seeds,
            "color_per_sec": rate(color_s),
            "list_color_per_sec": rate(list_s),
        }),
        ok,
    ))
}

pub fn gen(g: &Graph) -> Result<Outcome> {
    let g6 = encode_graph6(g)?;
    Ok(Outcome::new(
        json!({"graph6": g6, "edges": g.edges().map(|(u, v)| [u, v]).collect::<Vec<_>>()}),
        format!("generated graph with {} vertices, {} edges", g.n(), g.edge_count()),
    ))
}
