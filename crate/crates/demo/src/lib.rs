//! WebAssembly bindings for the browser demo in `www/`. Each export takes
//! plain numbers and returns a JSON string; errors come back as
//! `{"error": "..."}` rather than exceptions.

use serde::Serialize;
use wasm_bindgen::prelude::wasm_bindgen;

use brooks_core::brooks::brooks_color_with_stats;
use brooks_core::choosability::{
    build_cycle_orientation, find_critical_cross_subgraph, large_independent_set, list_brooks_color,
};
use brooks_core::generate::{erdos_renyi, random_lists, random_regular};
use brooks_core::oracles::verify_coloring;
use brooks_core::orientations::{solve_min_indegree_orientation, OrientationOutcome};
use brooks_core::{Graph, Result};

#[derive(Serialize)]
struct Colored {
    n: usize,
    edges: Vec<[usize; 2]>,
    colors: Vec<usize>,
    num_colors: usize,
    bound: usize,
    branches: Vec<(&'static str, usize)>,
    verified: bool,
}

#[derive(Serialize)]
struct ListColored {
    n: usize,
    edges: Vec<[usize; 2]>,
    lists: Vec<Vec<usize>>,
    colors: Vec<usize>,
    verified: bool,
    /// The critical subgraph for the whole graph, in original ids.
    a: Vec<usize>,
    h: Vec<usize>,
    arcs: Vec<[usize; 2]>,
}

#[derive(Serialize)]
struct Oriented {
    n: usize,
    edges: Vec<[usize; 2]>,
    demand: usize,
    feasible: bool,
    arcs: Vec<[usize; 2]>,
    violator: Vec<usize>,
}

fn edges(g: &Graph) -> Vec<[usize; 2]> {
    g.edges().map(|(u, v)| [u, v]).collect()
}

fn to_json<T: Serialize>(r: Result<T>) -> String {
    match r {
        Ok(v) => serde_json::to_string(&v).expect("demo payloads serialize"),
        Err(e) => serde_json::json!({ "error": e.to_string() }).to_string(),
    }
}

/// Brooks coloring of a seeded random `d`-regular graph.
#[wasm_bindgen]
pub fn color_regular(n: usize, d: usize, seed: u64) -> String {
    to_json((|| {
        let g = random_regular(n, d, seed)?;
        let (c, s) = brooks_color_with_stats(&g)?;
        Ok(Colored {
            n,
            edges: edges(&g),
            colors: c.to_total().unwrap_or_default(),
            num_colors: c.num_colors(),
            bound: brooks_core::brooks::color_bound(&g),
            branches: vec![
                ("path or cycle", s.path_or_cycle),
                ("complete", s.complete),
                ("peel", s.peel),
                ("hitting class", s.hitting_class),
                ("diamond", s.diamond),
                ("cycle surgery", s.cycle_surgery),
            ],
            verified: verify_coloring(&g, &c, None),
        })
    })())
}

/// List coloring of a seeded random `d`-regular graph from random lists of
/// size `max(3, d)` out of `2d` colors, with the critical subgraph and its
/// cycle orientation.
#[wasm_bindgen]
pub fn list_color_regular(n: usize, d: usize, seed: u64) -> String {
    to_json((|| {
        let g = random_regular(n, d, seed)?;
        let k = d.max(3);
        let lists = random_lists(n, k, 2 * k, seed)?;
        let c = list_brooks_color(&g, &lists)?;
        let a = large_independent_set(&g)?;
        let x = find_critical_cross_subgraph(&g, &a)?;
        let q = build_cycle_orientation(&x)?;
        let up = |i: usize| x.view.to_parent[i];
        Ok(ListColored {
            n,
            edges: edges(&g),
            lists: lists.lists().to_vec(),
            colors: c.to_total().unwrap_or_default(),
            verified: verify_coloring(&g, &c, Some(&lists)),
            a: a.members().to_vec(),
            h: x.view.to_parent.clone(),
            arcs: q.digraph().arcs().map(|(t, h)| [up(t), up(h)]).collect(),
        })
    })())
}

/// Orientation of a seeded `G(n, p)` with in-degree at least `demand` at
/// every vertex, or a vertex set proving none exists.
#[wasm_bindgen]
pub fn orient_random(n: usize, p: f64, demand: usize, seed: u64) -> String {
    to_json((|| {
        let g = erdos_renyi(n, p, seed)?;
        let out = solve_min_indegree_orientation(&g, &vec![demand; n])?;
        let (feasible, arcs, violator) = match out {
            OrientationOutcome::Feasible(o) => (true, o.arcs().map(|(t, h)| [t, h]).collect(), vec![]),
            OrientationOutcome::Violator(h) => (false, vec![], h.members().to_vec()),
        };
        Ok(Oriented {
            n,
            edges: edges(&g),
            demand,
            feasible,
            arcs,
            violator,
        })
    })())
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::Value;

    fn parse(s: String) -> Value {
        serde_json::from_str(&s).unwrap()
    }

    #[test]
    fn color_regular_reports_a_verified_coloring() {
        let v = parse(color_regular(20, 3, 1));
        assert_eq!(v["verified"], true);
        assert!(v["num_colors"].as_u64().unwrap() <= 3);
        assert_eq!(v["colors"].as_array().unwrap().len(), 20);
    }

    #[test]
    fn list_color_regular_shows_a_critical_subgraph() {
        let v = parse(list_color_regular(16, 4, 3));
        assert_eq!(v["verified"], true);
        let h = v["h"].as_array().unwrap().len();
        assert!(h > 0);
        assert!(v["arcs"].as_array().unwrap().len() >= h);
    }

    #[test]
    fn orient_random_handles_both_outcomes() {
        assert_eq!(parse(orient_random(10, 0.6, 1, 2))["feasible"], true);
        let v = parse(orient_random(6, 0.2, 3, 2));
        assert_eq!(v["feasible"], false);
        assert!(!v["violator"].as_array().unwrap().is_empty());
    }

    #[test]
    fn errors_come_back_as_json() {
        assert!(parse(color_regular(5, 3, 0))["error"].is_string());
    }
}
