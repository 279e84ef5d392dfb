//! Acceptance gate: nine suites, one PASS/FAIL line each. Runs without the
//! libtest harness so the lines always reach the terminal.

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use brooks_core::brooks::{brooks_color, brooks_color_with_stats, BranchStats};
use brooks_core::choosability::{general_tool_witness, list_brooks_color_with_stats};
use brooks_core::generate::{complete, complete_bipartite, cube, cycle, erdos_renyi, petersen, random_lists, random_regular};
use brooks_core::graph::{components, induced_subgraph};
use brooks_core::io::{encode_graph6, parse_dimacs, parse_graph6};
use brooks_core::kernels::{build_ab_digraph, find_kernel_ab, is_kernel, kernel_lemma_color, painter_move, AbDigraph};
use brooks_core::oracles::{
    chromatic_number, clique_number, is_f_choosable, is_kernel_perfect, paint_game_solve, verify_coloring,
    PainterStrategy, Winner,
};
use brooks_core::orientations::{
    solve_min_indegree_orientation, verify_orientation_demands, verify_violator, OrientationOutcome,
};
use brooks_core::{Error, Graph, ListAssignment, VertexSet};

type Check = Result<String, String>;
type Suite = (&'static str, fn() -> Check, Duration);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Every labeled graph on `n` vertices, by edge bitmask over pairs `i < j`.
fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|&(k, _)| mask & (1 << k) != 0)
            .map(|(_, &e)| e);
        Graph::new(n, edges).unwrap()
    })
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Smallest edge list over all relabelings; equal exactly for isomorphic
/// graphs.
fn canonical(g: &Graph, perms: &[Vec<usize>]) -> Vec<(usize, usize)> {
    perms
        .iter()
        .map(|p| {
            let mut e: Vec<(usize, usize)> = g
                .edges()
                .map(|(u, v)| (p[u].min(p[v]), p[u].max(p[v])))
                .collect();
            e.sort();
            e
        })
        .min()
        .unwrap()
}

/// One graph per isomorphism class on `n` vertices.
fn graph_classes(n: usize) -> Vec<Graph> {
    let perms = permutations(n);
    let mut seen = BTreeSet::new();
    all_graphs(n).filter(|g| seen.insert(canonical(g, &perms))).collect()
}

fn is_connected(g: &Graph) -> bool {
    components(g).len() == 1
}

fn brooks_bound(g: &Graph) -> usize {
    3.max(clique_number(g).unwrap()).max(g.max_degree())
}

fn criterion_1() -> Check {
    let mut checked = 0;
    let mut classes = 0;
    for n in 1..=5 {
        classes += graph_classes(n).iter().filter(|g| is_connected(g)).count();
        for g in all_graphs(n).filter(is_connected) {
            let c = brooks_color(&g).map_err(|e| format!("{e} on {:?}", encode_graph6(&g)))?;
            ensure(verify_coloring(&g, &c, None), || format!("improper on {:?}", encode_graph6(&g)))?;
            ensure(c.num_colors() <= brooks_bound(&g), || format!("too many colors on {:?}", encode_graph6(&g)))?;
            checked += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for seed in 0..500 {
        let n = rng.random_range(1..=8);
        let p = rng.random_range(0.1..0.9);
        let g = erdos_renyi(n, p, seed).unwrap();
        let c = brooks_color(&g).map_err(|e| format!("{e} on seed {seed}"))?;
        ensure(verify_coloring(&g, &c, None), || format!("improper on seed {seed}"))?;
        ensure(c.num_colors() <= brooks_bound(&g), || format!("too many colors on seed {seed}"))?;
    }
    Ok(format!(
        "{checked} labeled connected graphs ({classes} isomorphism classes) + 500 random"
    ))
}

fn criterion_2() -> Check {
    let mut total = BranchStats::default();
    for seed in 0..200u64 {
        let n = 8 + 2 * (seed as usize % 7);
        let g = random_regular(n, 3, seed).unwrap();
        let (c, stats) = brooks_color_with_stats(&g).map_err(|e| format!("{e} on seed {seed}"))?;
        total += stats;
        ensure(verify_coloring(&g, &c, None), || format!("improper on seed {seed}"))?;
        let has_k4 = components(&g)
            .iter()
            .any(|comp| induced_subgraph(&g, comp).graph.is_complete() && comp.len() == 4);
        ensure(c.num_colors() <= 3 || has_k4, || format!("{} colors on seed {seed}", c.num_colors()))?;
    }
    ensure(total.diamond > 0, || "diamond branch never used".into())?;
    ensure(total.cycle_surgery > 0, || "cycle-surgery branch never used".into())?;
    Ok(format!(
        "200 cubic graphs; diamond {} / cycle surgery {} / hitting {} / peel {}",
        total.diamond, total.cycle_surgery, total.hitting_class, total.peel
    ))
}

fn brute_orientable(g: &Graph, demand: &[usize]) -> bool {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    (0u32..1 << edges.len()).any(|mask| {
        let mut indeg = [0usize; 8];
        for (i, &(u, v)) in edges.iter().enumerate() {
            indeg[if mask & (1 << i) != 0 { v } else { u }] += 1;
        }
        (0..g.n()).all(|v| indeg[v] >= demand[v])
    })
}

fn check_orientation(g: &Graph, demand: &[usize]) -> Result<(), String> {
    let out = solve_min_indegree_orientation(g, demand).map_err(|e| e.to_string())?;
    let tag = || format!("{:?} with g = {demand:?}", encode_graph6(g).unwrap());
    ensure(out.is_feasible() == brute_orientable(g, demand), || format!("feasibility mismatch on {}", tag()))?;
    match out {
        OrientationOutcome::Feasible(o) => ensure(
            verify_orientation_demands(&o, g, demand).map_err(|e| e.to_string())?,
            || format!("bad orientation on {}", tag()),
        ),
        OrientationOutcome::Violator(h) => ensure(
            verify_violator(g, demand, &h).map_err(|e| e.to_string())?,
            || format!("bad violator on {}", tag()),
        ),
    }
}

fn criterion_3() -> Check {
    const CAP: usize = 100_000;
    let mut pairs = 0;
    for n in 1..=4usize {
        for g in all_graphs(n) {
            for code in 0..4usize.pow(n as u32) {
                let demand: Vec<usize> = (0..n).map(|i| code / 4usize.pow(i as u32) % 4).collect();
                check_orientation(&g, &demand)?;
                pairs += 1;
            }
        }
    }
    let five: Vec<Graph> = all_graphs(5).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let sampled = CAP - pairs;
    for _ in 0..sampled {
        let g = &five[rng.random_range(0..five.len())];
        let demand: Vec<usize> = (0..5).map(|_| rng.random_range(0..=3)).collect();
        check_orientation(g, &demand)?;
    }
    Ok(format!("{pairs} exhaustive pairs (n ≤ 4) + {sampled} sampled on n = 5"))
}

/// A random AB digraph: random graph, random maximal-ish independent `A`,
/// random direction on every cross edge.
fn random_ab(rng: &mut ChaCha8Rng, n: usize) -> AbDigraph {
    let p = rng.random_range(0.2..0.8);
    let g = erdos_renyi(n, p, rng.random()).unwrap();
    let mut in_a = vec![false; n];
    for v in 0..n {
        if rng.random_bool(0.6) && g.neighbors(v).iter().all(|&w| !in_a[w]) {
            in_a[v] = true;
        }
    }
    let a = VertexSet::new(n, (0..n).filter(|&v| in_a[v])).unwrap();
    let heads: BTreeMap<(usize, usize), usize> = g
        .edges()
        .filter(|&(u, v)| in_a[u] != in_a[v])
        .map(|(u, v)| ((u, v), if rng.random_bool(0.5) { u } else { v }))
        .collect();
    build_ab_digraph(&g, &a, &heads).unwrap()
}

fn criterion_4() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut perfect_checked = 0;
    for i in 0..500 {
        let n = rng.random_range(1..=10);
        let d = random_ab(&mut rng, n);
        let k = find_kernel_ab(&d, None).map_err(|e| e.to_string())?;
        ensure(is_kernel(d.digraph(), &VertexSet::full(n), &k), || format!("instance {i}: not a kernel"))?;
        for _ in 0..20 {
            let s = VertexSet::new(n, (0..n).filter(|_| rng.random_bool(0.5))).unwrap();
            let ks = find_kernel_ab(&d, Some(&s)).map_err(|e| e.to_string())?;
            ensure(is_kernel(d.digraph(), &s, &ks), || format!("instance {i}: subset kernel fails"))?;
        }
        if n <= 5 {
            ensure(is_kernel_perfect(d.digraph()).unwrap(), || format!("instance {i}: not kernel-perfect"))?;
            perfect_checked += 1;
        }
    }
    for i in 0..500 {
        let n = rng.random_range(1..=10);
        let d = random_ab(&mut rng, n);
        let pool = 2 * n;
        let lists: Vec<Vec<usize>> = (0..n)
            .map(|v| {
                let want = d.out_degree(v) + 1;
                let mut l = BTreeSet::new();
                while l.len() < want {
                    l.insert(rng.random_range(0..pool));
                }
                l.into_iter().collect()
            })
            .collect();
        let lists = ListAssignment::new(lists);
        let c = kernel_lemma_color(&d, &lists).map_err(|e| format!("instance {i}: {e}"))?;
        ensure(verify_coloring(d.graph(), &c, Some(&lists)), || format!("instance {i}: bad list coloring"))?;
    }
    Ok(format!("500 kernel instances ({perfect_checked} kernel-perfect checks) + 500 list instances"))
}

fn list_color_checked(g: &Graph, lists: &ListAssignment, tag: &str) -> Result<usize, String> {
    let (c, stats) = list_brooks_color_with_stats(g, lists).map_err(|e| format!("{tag}: {e}"))?;
    ensure(verify_coloring(g, &c, Some(lists)), || format!("{tag}: bad coloring"))?;
    for &(size, cross) in &stats.critical {
        ensure(size == cross, || format!("{tag}: critical |H| = {size}, cross = {cross}"))?;
    }
    Ok(stats.critical.len())
}

fn criterion_5() -> Check {
    let mut critical = 0;
    for (name, g, seed) in [("Petersen", petersen(), 1), ("Q3", cube(), 2), ("K33", complete_bipartite(3, 3), 3)] {
        let d = g.max_degree();
        let lists = random_lists(g.n(), d.max(3), 2 * d, seed).unwrap();
        critical += list_color_checked(&g, &lists, name)?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut done = 0;
    let mut seed = 0u64;
    let mut skipped = 0;
    while done < 300 {
        seed += 1;
        let d: usize = [3, 4, 5][done % 3];
        let n = 2 * rng.random_range((d + 2).div_ceil(2)..=12);
        let g = random_regular(n, d, seed).unwrap();
        if components(&g)
            .iter()
            .any(|comp| induced_subgraph(&g, comp).graph.is_complete())
        {
            // K_{d+1} needs lists of size d + 1; outside the suite.
            skipped += 1;
            continue;
        }
        let lists = random_lists(n, d.max(3), 2 * d, seed).unwrap();
        critical += list_color_checked(&g, &lists, &format!("seed {seed} (n={n}, d={d})"))?;
        done += 1;
    }
    Ok(format!(
        "3 named + 300 random regular graphs, {critical} critical subgraphs, {skipped} complete components skipped"
    ))
}

fn criterion_6() -> Check {
    let c4 = cycle(4);
    let a = VertexSet::new(4, [0, 2]).unwrap();
    let w = general_tool_witness(&c4, &a, &[2; 4]).map_err(|e| format!("C4: {e}"))?;
    ensure(w.view.graph.n() == 4, || "C4: H is not all of C4".into())?;
    ensure(w.f_h == [2; 4], || format!("C4: f_H = {:?}", w.f_h))?;
    ensure((0..4).all(|v| w.q.out_degree(v) == 1), || "C4: out-degrees differ from 1".into())?;
    ensure(is_f_choosable(&w.view.graph, &w.f_h).unwrap(), || "C4: H not f_H-choosable".into())?;

    let diamond = Graph::new(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
    let a = VertexSet::new(4, [0, 3]).unwrap();
    let w = general_tool_witness(&diamond, &a, &[2, 3, 3, 2]).map_err(|e| format!("diamond: {e}"))?;
    ensure(w.view.graph.n() > 0, || "diamond: empty H".into())?;
    ensure(is_f_choosable(&w.view.graph, &w.f_h).unwrap(), || "diamond: H not f_H-choosable".into())?;

    for (name, g) in [("C5", cycle(5)), ("K4", complete(4))] {
        let n = g.n();
        let f: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
        for mask in 0u32..1 << n {
            let a = VertexSet::new(n, (0..n).filter(|&v| mask & (1 << v) != 0)).unwrap();
            if !g.is_independent(&a) {
                continue;
            }
            match general_tool_witness(&g, &a, &f) {
                Err(Error::Precondition(_)) => {}
                other => return Err(format!("{name}, A = {:?}: expected rejection, got {other:?}", a.members())),
            }
        }
    }
    Ok("C4 and diamond witnesses certified; C5 and K4 rejected for every independent A".into())
}

fn criterion_7() -> Check {
    let mut games = 0;
    for n in 1..=5 {
        for g in graph_classes(n) {
            let edges: Vec<(usize, usize)> = g.edges().collect();
            for amask in 0u32..1 << n {
                let a = VertexSet::new(n, (0..n).filter(|&v| amask & (1 << v) != 0)).unwrap();
                if !g.is_independent(&a) {
                    continue;
                }
                let cross: Vec<(usize, usize)> = edges
                    .iter()
                    .copied()
                    .filter(|&(u, v)| a.contains(u) != a.contains(v))
                    .collect();
                for dir in 0u32..1 << cross.len() {
                    let heads: BTreeMap<(usize, usize), usize> = cross
                        .iter()
                        .enumerate()
                        .map(|(i, &(u, v))| ((u, v), if dir & (1 << i) != 0 { v } else { u }))
                        .collect();
                    let d = build_ab_digraph(&g, &a, &heads).unwrap();
                    let tokens: Vec<usize> = (0..n).map(|v| d.out_degree(v) + 1).collect();
                    let mut strategy = |s: &VertexSet| painter_move(&d, s);
                    let strategy: &mut PainterStrategy<'_> = &mut strategy;
                    let w = paint_game_solve(&g, &tokens, Some(strategy)).map_err(|e| e.to_string())?;
                    ensure(w == Winner::Painter, || {
                        format!("Painter lost on {:?}, A = {:?}", encode_graph6(&g).unwrap(), a.members())
                    })?;
                    games += 1;
                }
            }
        }
    }
    let expect = [
        ("K2", complete(2), 1, Winner::Lister),
        ("C4", cycle(4), 2, Winner::Painter),
        ("C5", cycle(5), 2, Winner::Lister),
    ];
    for (name, g, t, want) in expect {
        let got = paint_game_solve(&g, &vec![t; g.n()], None).map_err(|e| e.to_string())?;
        ensure(got == want, || format!("{name}: expected {want:?}, got {got:?}"))?;
    }
    Ok(format!("{games} kernel-strategy games won by Painter; minimax examples reproduced"))
}

fn criterion_8() -> Check {
    let mut checked = 0;
    for n in 1..=5 {
        for g in all_graphs(n) {
            let bound = brooks_bound(&g);
            let chi = chromatic_number(&g).unwrap();
            ensure(chi <= bound, || format!("χ = {chi} > {bound} on {:?}", encode_graph6(&g)))?;
            let ok = is_f_choosable(&g, &vec![bound; n]).map_err(|e| e.to_string())?;
            ensure(ok, || format!("not {bound}-choosable: {:?}", encode_graph6(&g)))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} labeled graphs on ≤ 5 vertices"))
}

fn run_cli(args: &[&str]) -> Result<(i32, serde_json::Value), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_brooks"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    let code = out.status.code().ok_or("killed by signal")?;
    let report: serde_json::Value =
        serde_json::from_slice(&out.stdout).map_err(|e| format!("bad report: {e}"))?;
    Ok((code, report))
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

fn criterion_9() -> Check {
    // graph6
    ensure(parse_graph6("A_").unwrap() == complete(2), || "A_ is not K2".into())?;
    let d = parse_graph6("D??").unwrap();
    ensure(d == Graph::empty(5), || "D?? is not the empty 5-vertex graph".into())?;
    ensure(encode_graph6(&d).unwrap() == "D??", || "D?? does not re-encode".into())?;
    let corpus = include_str!("data/graph6_corpus.txt");
    let mut lines = 0;
    for line in corpus.lines().filter(|l| !l.is_empty()) {
        let g = parse_graph6(line).map_err(|e| format!("{line}: {e}"))?;
        ensure(encode_graph6(&g).unwrap() == line, || format!("{line} does not round-trip"))?;
        lines += 1;
    }
    ensure(parse_graph6("IheA@GUAo").unwrap() == petersen(), || "Petersen string mismatch".into())?;
    for n in 0..=64 {
        let g = erdos_renyi(n, 0.3, n as u64).unwrap();
        ensure(parse_graph6(&encode_graph6(&g).unwrap()).unwrap() == g, || format!("n = {n} fails"))?;
    }

    // DIMACS
    let (k3, w) = parse_dimacs("p edge 3 3\ne 1 2\ne 2 3\ne 1 3").unwrap();
    ensure(k3 == complete(3) && w.is_empty(), || "K3 DIMACS parse".into())?;
    let (k2, w) = parse_dimacs("p edge 2 1\ne 1 2\ne 2 1").unwrap();
    ensure(k2 == complete(2) && !w.is_empty(), || "duplicate edge not warned".into())?;
    ensure(
        matches!(parse_dimacs("p edge 2 1\ne 1 3"), Err(Error::Parse { line: 2, .. })),
        || "out-of-range id not rejected".into(),
    )?;

    // Exit codes
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let dir = dir.path();
    let pet = write(dir, "petersen.g6", "IheA@GUAo\n");
    let star = write(dir, "star.col", "p edge 4 3\ne 1 2\ne 1 3\ne 1 4\n");
    let demands = write(dir, "g.json", r#"{"0":2,"1":1,"2":1,"3":1}"#);
    let short = write(dir, "lists.json", r#"{"0":[0,1],"1":[0,1],"2":[0,1],"3":[0,1]}"#);

    let (code, r) = run_cli(&["color", "--in", &pet, "--format", "graph6"])?;
    ensure(code == 0, || format!("color exit {code}"))?;
    ensure(r["result"]["num_colors"] == 3 && r["checks"]["verified"] == true, || format!("color report {r}"))?;

    let (code, r) = run_cli(&["orient", "--in", &star, "--demands", &demands])?;
    ensure(code == 1, || format!("orient exit {code}"))?;
    ensure(r["result"]["violator"].as_array().map(Vec::len) == Some(4), || format!("orient report {r}"))?;

    let (code, r) = run_cli(&["list-color", "--in", &star, "--lists", &short])?;
    ensure(code == 2, || format!("list-color exit {code}"))?;
    ensure(
        r["error"]["message"].as_str().is_some_and(|m| m.contains("vertex 0")),
        || format!("list-color report {r}"),
    )?;

    let (code, r) = run_cli(&["--inject-fault", "color", "--in", &pet])?;
    ensure(code == 3, || format!("fault exit {code}"))?;
    ensure(r["error"]["instance_graph6"] == "IheA@GUAo", || format!("fault report {r}"))?;

    Ok(format!("{lines} corpus lines, 65 generated round-trips, DIMACS examples, exit codes 0/1/2/3"))
}

fn main() {
    let suites: [Suite; 9] = [
        ("1 Brooks exhaustive", criterion_1, Duration::from_secs(10)),
        ("2 Brooks cubic path", criterion_2, Duration::from_secs(30)),
        ("3 orientation exactness", criterion_3, Duration::from_secs(60)),
        ("4 kernels and kernel coloring", criterion_4, Duration::from_secs(60)),
        ("5 list-coloring Brooks", criterion_5, Duration::from_secs(60)),
        ("6 choosability witness", criterion_6, Duration::from_secs(30)),
        ("7 online game", criterion_7, Duration::from_secs(60)),
        ("8 headline inequality", criterion_8, Duration::from_secs(120)),
        ("9 I/O and exit codes", criterion_9, Duration::from_secs(60)),
    ];
    let mut failed = 0;
    for (name, run, limit) in suites {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let line = match outcome {
            Ok(detail) if took <= limit => format!("PASS  {name}: {detail} ({:.2}s)", took.as_secs_f64()),
            Ok(detail) => {
                failed += 1;
                format!("FAIL  {name}: {detail}, but took {:.2}s > {}s", took.as_secs_f64(), limit.as_secs())
            }
            Err(why) => {
                failed += 1;
                format!("FAIL  {name}: {why} ({:.2}s)", took.as_secs_f64())
            }
        };
        println!("{line}");
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all 9 acceptance criteria passed");
}
