//! Named graph families and seeded random generators.

use std::collections::HashSet;

use rand::seq::{IndexedRandom, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coloring::ListAssignment;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Pairings tried by [`random_regular`] before giving up.
pub const PAIRING_RETRY_CAP: usize = 100_000;

/// The graph families the generator understands.
#[derive(Debug, Clone, PartialEq)]
pub enum GraphKind {
    Cycle(usize),
    Path(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    Petersen,
    Cube,
    RandomRegular { n: usize, d: usize },
    ErdosRenyi { n: usize, p: f64 },
}

/// Builds a graph of the given kind; random kinds are a pure function of
/// `seed`.
pub fn generate(kind: &GraphKind, seed: u64) -> Result<Graph> {
    match *kind {
        GraphKind::Cycle(n) if n < 3 => Err(Error::InvalidInput(format!(
            "a cycle needs at least 3 vertices, got {n}"
        ))),
        GraphKind::Cycle(n) => Ok(cycle(n)),
        GraphKind::Path(n) => Ok(path(n)),
        GraphKind::Complete(n) => Ok(complete(n)),
        GraphKind::CompleteBipartite(a, b) => Ok(complete_bipartite(a, b)),
        GraphKind::Petersen => Ok(petersen()),
        GraphKind::Cube => Ok(cube()),
        GraphKind::RandomRegular { n, d } => random_regular(n, d, seed),
        GraphKind::ErdosRenyi { n, p } => erdos_renyi(n, p, seed),
    }
}

/// `C_n`. Panics for `n < 3`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs n >= 3");
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

pub fn path(n: usize) -> Graph {
    Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
}

pub fn complete(n: usize) -> Graph {
    Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
}

/// `K_{a,b}` with sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    Graph::new(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)))).unwrap()
}

/// Outer 5-cycle `0..5`, spokes `i - (i+5)`, inner pentagram on `5..10`.
pub fn petersen() -> Graph {
    let edges = (0..5).flat_map(|i| {
        [
            (i, (i + 1) % 5),
            (i, i + 5),
            (5 + i, 5 + (i + 2) % 5),
        ]
    });
    Graph::new(10, edges).unwrap()
}

/// The 3-cube `Q_3`; vertices are 3-bit words, adjacent when they differ in
/// one bit.
pub fn cube() -> Graph {
    let edges = (0..8usize).flat_map(|u| (0..3).map(move |b| (u, u ^ (1 << b))));
    Graph::new(8, edges).unwrap()
}

/// A uniformly paired random `d`-regular simple graph (pairing model with
/// rejection of loops and multi-edges).
pub fn random_regular(n: usize, d: usize, seed: u64) -> Result<Graph> {
    if (n * d) % 2 == 1 {
        return Err(Error::InvalidInput(format!("n*d = {} is odd", n * d)));
    }
    if d > 0 && d >= n {
        return Err(Error::InvalidInput(format!(
            "degree {d} impossible on {n} vertices"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, d)).collect();
    'attempt: for _ in 0..PAIRING_RETRY_CAP {
        points.shuffle(&mut rng);
        let mut seen = HashSet::with_capacity(points.len() / 2);
        for pair in points.chunks_exact(2) {
            let (u, v) = (pair[0].min(pair[1]), pair[0].max(pair[1]));
            if u == v || !seen.insert((u, v)) {
                continue 'attempt;
            }
        }
        return Graph::new(n, seen);
    }
    Err(Error::ResourceLimit(format!(
        "no simple {d}-regular pairing on {n} vertices after {PAIRING_RETRY_CAP} tries"
    )))
}

/// `G(n, p)`.
pub fn erdos_renyi(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidInput(format!("edge probability {p} not in [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges)
}

/// Lists of `size` distinct colors per vertex, drawn uniformly from
/// `0..pool`.
pub fn random_lists(n: usize, size: usize, pool: usize, seed: u64) -> Result<ListAssignment> {
    if size > pool {
        return Err(Error::InvalidInput(format!(
            "cannot draw {size} distinct colors from a pool of {pool}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let colors: Vec<usize> = (0..pool).collect();
    let lists = (0..n)
        .map(|_| colors.choose_multiple(&mut rng, size).copied().collect())
        .collect();
    Ok(ListAssignment::new(lists))
}
