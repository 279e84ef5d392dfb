//! Exhaustive ground truth for small instances.
//!
//! Every oracle has a hard size limit and returns [`Error::ResourceLimit`]
//! beyond it; none of them ever answers approximately.

use std::collections::HashMap;

use crate::coloring::{Coloring, ListAssignment};
use crate::error::{Error, Result};
use crate::graph::{Digraph, Graph, VertexSet};

/// Vertex limit for [`chromatic_number`], [`clique_number`] and
/// [`is_list_colorable`].
pub const DEFAULT_LIMIT: usize = 12;
/// Limits for [`is_f_choosable`], checked after low-demand vertices are
/// removed.
pub const CHOOSABLE_MAX_N: usize = 6;
pub const CHOOSABLE_MAX_SUM: usize = 18;
pub const KERNEL_MAX_N: usize = 15;
pub const KERNEL_PERFECT_MAX_N: usize = 12;
/// Vertex limit for full minimax in [`paint_game_solve`].
pub const GAME_MINIMAX_MAX_N: usize = 5;
/// Vertex limit when Painter plays a fixed strategy.
pub const GAME_STRATEGY_MAX_N: usize = 8;

fn check_limit(what: &str, n: usize, limit: usize) -> Result<()> {
    if n > limit {
        return Err(Error::ResourceLimit(format!(
            "{what} is limited to {limit} vertices, got {n}"
        )));
    }
    Ok(())
}

/// True when `c` is total, proper, and (if given) takes each color from the
/// vertex's list.
pub fn verify_coloring(g: &Graph, c: &Coloring, lists: Option<&ListAssignment>) -> bool {
    if c.n() != g.n() || !c.is_total() || !c.is_proper_on(g) {
        return false;
    }
    match lists {
        None => true,
        Some(l) => {
            l.n() == g.n() && (0..g.n()).all(|v| l.contains(v, c.get(v).expect("total")))
        }
    }
}

/// Exact chromatic number by backtracking; a vertex may only open the next
/// unused color, which removes color permutations.
pub fn chromatic_number(g: &Graph) -> Result<usize> {
    check_limit("chromatic_number", g.n(), DEFAULT_LIMIT)?;
    if g.n() == 0 {
        return Ok(0);
    }
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    (1..=g.n())
        .find(|&k| {
            let mut colors = vec![usize::MAX; g.n()];
            k_colorable(g, &order, 0, k, 0, &mut colors)
        })
        .ok_or_else(|| Error::invariant("chromatic_number", "n colors always suffice"))
}

fn k_colorable(
    g: &Graph,
    order: &[usize],
    i: usize,
    k: usize,
    used: usize,
    colors: &mut [usize],
) -> bool {
    if i == order.len() {
        return true;
    }
    let v = order[i];
    for c in 0..k.min(used + 1) {
        if g.neighbors(v).iter().all(|&w| colors[w] != c) {
            colors[v] = c;
            if k_colorable(g, order, i + 1, k, used.max(c + 1), colors) {
                return true;
            }
            colors[v] = usize::MAX;
        }
    }
    false
}

/// Exact clique number by backtracking over common neighborhoods.
pub fn clique_number(g: &Graph) -> Result<usize> {
    check_limit("clique_number", g.n(), DEFAULT_LIMIT)?;
    fn grow(g: &Graph, size: usize, candidates: &[usize], best: &mut usize) {
        *best = (*best).max(size);
        for (i, &v) in candidates.iter().enumerate() {
            if size + candidates.len() - i <= *best {
                return;
            }
            let next: Vec<usize> = candidates[i + 1..]
                .iter()
                .copied()
                .filter(|&w| g.has_edge(v, w))
                .collect();
            grow(g, size + 1, &next, best);
        }
    }
    let mut best = 0;
    let all: Vec<usize> = (0..g.n()).collect();
    grow(g, 0, &all, &mut best);
    Ok(best)
}

/// A coloring of `g` from `lists`, if one exists.
pub fn is_list_colorable(g: &Graph, lists: &ListAssignment) -> Result<Option<Coloring>> {
    check_limit("is_list_colorable", g.n(), DEFAULT_LIMIT)?;
    lists.check_len(g.n())?;
    Ok(list_color_search(g, lists, g.n()))
}

/// Backtracking list coloring of the first `prefix` vertices.
fn list_color_search(g: &Graph, lists: &ListAssignment, prefix: usize) -> Option<Coloring> {
    fn go(g: &Graph, lists: &ListAssignment, v: usize, prefix: usize, colors: &mut [Option<usize>]) -> bool {
        if v == prefix {
            return true;
        }
        for &c in lists.list(v) {
            if g.neighbors(v).iter().all(|&w| colors[w] != Some(c)) {
                colors[v] = Some(c);
                if go(g, lists, v + 1, prefix, colors) {
                    return true;
                }
            }
        }
        colors[v] = None;
        false
    }
    let mut colors = vec![None; g.n()];
    go(g, lists, 0, prefix, &mut colors).then(|| Coloring::from_partial(colors))
}

/// True when `g` can be colored from every list assignment with
/// `|L(v)| = f(v)`.
///
/// A vertex with `f(v) > d(v)` can always be colored last, so such vertices
/// are deleted first (repeatedly, as degrees drop). The rest is decided by
/// [`find_bad_list_assignment`], whose size limits apply to the reduced
/// instance.
pub fn is_f_choosable(g: &Graph, f: &[usize]) -> Result<bool> {
    if f.len() != g.n() {
        return Err(Error::InvalidInput("f does not match the graph".into()));
    }
    let n = g.n();
    let mut alive = vec![true; n];
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut changed = true;
    while changed {
        changed = false;
        for v in 0..n {
            if alive[v] && f[v] > deg[v] {
                alive[v] = false;
                changed = true;
                for &w in g.neighbors(v) {
                    deg[w] -= 1;
                }
            }
        }
    }
    let keep = VertexSet::from_mask(&alive);
    let core = crate::graph::induced_subgraph(g, &keep);
    let core_f: Vec<usize> = core.to_parent.iter().map(|&p| f[p]).collect();
    Ok(find_bad_list_assignment(&core.graph, &core_f)?.is_none())
}

/// Exhaustive search for a list assignment with `|L(v)| = f(v)` that admits
/// no coloring.
///
/// Colors come from a pool of `Σ f` and assignments are generated up to
/// renaming of colors: each list picks some already-used colors plus the
/// next few unused ones. A prefix that is already uncolorable is completed
/// with fresh colors and returned at once.
pub fn find_bad_list_assignment(g: &Graph, f: &[usize]) -> Result<Option<ListAssignment>> {
    let n = g.n();
    if f.len() != n {
        return Err(Error::InvalidInput("f does not match the graph".into()));
    }
    check_limit("is_f_choosable", n, CHOOSABLE_MAX_N)?;
    let total: usize = f.iter().sum();
    if total > CHOOSABLE_MAX_SUM {
        return Err(Error::ResourceLimit(format!(
            "is_f_choosable is limited to Σf ≤ {CHOOSABLE_MAX_SUM}, got {total}"
        )));
    }
    if let Some(v) = (0..n).find(|&v| f[v] == 0) {
        // An empty list can never be colored.
        let mut lists = vec![Vec::new(); n];
        let mut next = 0;
        for (u, list) in lists.iter_mut().enumerate() {
            if u != v {
                *list = (next..next + f[u]).collect();
                next += f[u];
            }
        }
        return Ok(Some(ListAssignment::new(lists)));
    }
    let mut lists: Vec<Vec<usize>> = vec![Vec::new(); n];
    Ok(assign_lists(g, f, 0, 0, &mut lists))
}

fn assign_lists(
    g: &Graph,
    f: &[usize],
    v: usize,
    used: usize,
    lists: &mut Vec<Vec<usize>>,
) -> Option<ListAssignment> {
    let n = g.n();
    if v > 0 {
        let prefix = ListAssignment::new(lists.clone());
        if list_color_search(g, &prefix, v).is_none() {
            let mut full = lists.clone();
            let mut next = used;
            for (u, list) in full.iter_mut().enumerate().skip(v) {
                *list = (next..next + f[u]).collect();
                next += f[u];
            }
            return Some(ListAssignment::new(full));
        }
    }
    if v == n {
        return None;
    }
    let size = f[v];
    for old in 0..=size.min(used) {
        let fresh = size - old;
        for subset in combinations(used, old) {
            let mut list = subset;
            list.extend(used..used + fresh);
            lists[v] = list;
            if let Some(bad) = assign_lists(g, f, v + 1, used + fresh, lists) {
                return Some(bad);
            }
        }
    }
    lists[v].clear();
    None
}

/// All `k`-subsets of `0..n` in lexicographic order.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            if n - x < k - cur.len() {
                break;
            }
            cur.push(x);
            go(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::with_capacity(k), &mut out);
    out
}

fn out_masks(d: &Digraph) -> Vec<u32> {
    (0..d.n())
        .map(|v| d.out_neighbors(v).iter().fold(0u32, |m, &w| m | (1 << w)))
        .collect()
}

fn mask_is_kernel(out: &[u32], scope: u32, k: u32) -> bool {
    (0..out.len()).all(|v| {
        let bit = 1u32 << v;
        if scope & bit == 0 {
            true
        } else if k & bit != 0 {
            out[v] & k == 0
        } else {
            out[v] & k != 0
        }
    })
}

fn mask_to_set(n: usize, mask: u32) -> VertexSet {
    VertexSet::new(n, (0..n).filter(|&v| mask & (1 << v) != 0)).expect("bits below n")
}

/// Some kernel of `d` (the one with the smallest bitmask), if any.
pub fn brute_kernel(d: &Digraph) -> Result<Option<VertexSet>> {
    check_limit("brute_kernel", d.n(), KERNEL_MAX_N)?;
    let out = out_masks(d);
    let scope = ((1u64 << d.n()) - 1) as u32;
    Ok((0..=scope)
        .find(|&k| mask_is_kernel(&out, scope, k))
        .map(|k| mask_to_set(d.n(), k)))
}

/// True when every induced subdigraph of `d` has a kernel.
pub fn is_kernel_perfect(d: &Digraph) -> Result<bool> {
    check_limit("is_kernel_perfect", d.n(), KERNEL_PERFECT_MAX_N)?;
    let out = out_masks(d);
    let full = ((1u64 << d.n()) - 1) as u32;
    Ok((1..=full).all(|scope| {
        let mut sub = scope;
        loop {
            if mask_is_kernel(&out, scope, sub) {
                return true;
            }
            if sub == 0 {
                return false;
            }
            sub = (sub - 1) & scope;
        }
    }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Winner {
    Painter,
    Lister,
}

/// A fixed Painter strategy: given the uncolored vertices just revealed,
/// return the independent subset to color.
pub type PainterStrategy<'a> = dyn FnMut(&VertexSet) -> Result<VertexSet> + 'a;

/// Solves the Lister/Painter game on `g` with the given token budgets.
///
/// Each round Lister reveals a nonempty set `S` of uncolored vertices; every
/// vertex of `S` spends a token, and Painter colors an independent subset of
/// `S`. Lister wins once an uncolored vertex has no tokens left; Painter wins
/// when everything is colored. Without a strategy this is full minimax;
/// with one, Painter's replies are fixed and only Lister searches.
pub fn paint_game_solve(
    g: &Graph,
    tokens: &[usize],
    painter: Option<&mut PainterStrategy<'_>>,
) -> Result<Winner> {
    paint_game_solve_ordered(g, tokens, painter, false)
}

/// [`paint_game_solve`] with Lister's moves tried in descending bitmask order
/// when `descending` is set.
pub fn paint_game_solve_ordered(
    g: &Graph,
    tokens: &[usize],
    painter: Option<&mut PainterStrategy<'_>>,
    descending: bool,
) -> Result<Winner> {
    let n = g.n();
    if tokens.len() != n {
        return Err(Error::InvalidInput("tokens do not match the graph".into()));
    }
    let limit = if painter.is_some() {
        GAME_STRATEGY_MAX_N
    } else {
        GAME_MINIMAX_MAX_N
    };
    check_limit("paint_game_solve", n, limit)?;
    let nbr: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | (1 << w)))
        .collect();
    let mut game = Game {
        n,
        nbr,
        memo: HashMap::new(),
        painter,
        descending,
    };
    let start: Vec<u8> = tokens.iter().map(|&t| t.min(u8::MAX as usize) as u8).collect();
    Ok(if game.painter_wins(0, start)? {
        Winner::Painter
    } else {
        Winner::Lister
    })
}

struct Game<'p, 'a> {
    n: usize,
    nbr: Vec<u32>,
    memo: HashMap<(u32, Vec<u8>), bool>,
    painter: Option<&'p mut PainterStrategy<'a>>,
    descending: bool,
}

impl Game<'_, '_> {
    fn independent(&self, set: u32) -> bool {
        (0..self.n).all(|v| set & (1 << v) == 0 || self.nbr[v] & set == 0)
    }

    fn painter_wins(&mut self, colored: u32, tokens: Vec<u8>) -> Result<bool> {
        let full = ((1u64 << self.n) - 1) as u32;
        if colored == full {
            return Ok(true);
        }
        if (0..self.n).any(|v| colored & (1 << v) == 0 && tokens[v] == 0) {
            return Ok(false);
        }
        let key = (colored, tokens);
        if let Some(&known) = self.memo.get(&key) {
            return Ok(known);
        }
        let (colored, tokens) = key;
        let open = full & !colored;
        let mut moves: Vec<u32> = Vec::new();
        let mut s = open;
        while s != 0 {
            moves.push(s);
            s = (s - 1) & open;
        }
        if !self.descending {
            moves.reverse();
        }
        let mut result = true;
        for reveal in moves {
            let mut after = tokens.clone();
            for (v, t) in after.iter_mut().enumerate() {
                if reveal & (1 << v) != 0 {
                    *t -= 1;
                }
            }
            let survives = match self.painter.as_mut() {
                Some(strategy) => {
                    let revealed = mask_to_set(self.n, reveal);
                    let reply = strategy(&revealed)?;
                    let pick = reply.iter().fold(0u32, |m, v| m | (1 << v));
                    if reply.ambient_n() != self.n || pick & !reveal != 0 || !self.independent(pick) {
                        return Err(Error::InvalidInput(
                            "painter strategy returned an illegal move".into(),
                        ));
                    }
                    self.painter_wins(colored | pick, normalized(&after, colored | pick))?
                }
                None => {
                    let mut found = false;
                    let mut pick = reveal;
                    loop {
                        if self.independent(pick)
                            && self.painter_wins(colored | pick, normalized(&after, colored | pick))?
                        {
                            found = true;
                            break;
                        }
                        if pick == 0 {
                            break;
                        }
                        pick = (pick - 1) & reveal;
                    }
                    found
                }
            };
            if !survives {
                result = false;
                break;
            }
        }
        self.memo.insert((colored, tokens), result);
        Ok(result)
    }
}

/// Colored vertices no longer need tokens; zero them so equal positions
/// share a memo entry.
fn normalized(tokens: &[u8], colored: u32) -> Vec<u8> {
    tokens
        .iter()
        .enumerate()
        .map(|(v, &t)| if colored & (1 << v) != 0 { 0 } else { t })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{complete, cycle, petersen};

    #[test]
    fn chromatic_examples() {
        assert_eq!(chromatic_number(&cycle(5)).unwrap(), 3);
        assert_eq!(chromatic_number(&petersen()).unwrap(), 3);
        assert_eq!(chromatic_number(&complete(4)).unwrap(), 4);
        assert!(matches!(
            chromatic_number(&Graph::empty(13)),
            Err(Error::ResourceLimit(_))
        ));
    }

    #[test]
    fn clique_examples() {
        assert_eq!(clique_number(&petersen()).unwrap(), 2);
        let diamond = Graph::new(4, [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(clique_number(&diamond).unwrap(), 3);
        assert_eq!(clique_number(&Graph::empty(3)).unwrap(), 1);
    }

    #[test]
    fn list_colorable_examples() {
        assert!(is_list_colorable(&cycle(4), &ListAssignment::uniform(4, 2)).unwrap().is_some());
        assert!(is_list_colorable(&cycle(3), &ListAssignment::uniform(3, 2)).unwrap().is_none());
        let mixed = ListAssignment::new(vec![vec![0, 1], vec![1, 2], vec![0, 1], vec![1, 2]]);
        let c = is_list_colorable(&cycle(4), &mixed).unwrap().unwrap();
        assert!(verify_coloring(&cycle(4), &c, Some(&mixed)));
    }

    #[test]
    fn choosable_examples() {
        assert!(is_f_choosable(&cycle(4), &[2; 4]).unwrap());
        assert!(!is_f_choosable(&cycle(5), &[2; 5]).unwrap());
        let k2 = complete(2);
        assert!(!is_f_choosable(&k2, &[1, 1]).unwrap());
        let bad = find_bad_list_assignment(&cycle(5), &[2; 5]).unwrap().unwrap();
        assert!(is_list_colorable(&cycle(5), &bad).unwrap().is_none());
    }

    #[test]
    fn kernel_examples() {
        let tri = Digraph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(brute_kernel(&tri).unwrap(), None);
        assert!(!is_kernel_perfect(&tri).unwrap());
        let p3 = Digraph::new(3, [(0, 1), (1, 0), (1, 2), (2, 1)]).unwrap();
        let k = brute_kernel(&p3).unwrap().unwrap();
        assert!(k.members() == [1] || k.members() == [0, 2]);
        assert!(is_kernel_perfect(&p3).unwrap());
    }

    #[test]
    fn game_examples() {
        assert_eq!(paint_game_solve(&complete(2), &[1, 1], None).unwrap(), Winner::Lister);
        assert_eq!(paint_game_solve(&cycle(4), &[2; 4], None).unwrap(), Winner::Painter);
        assert_eq!(paint_game_solve(&cycle(5), &[2; 5], None).unwrap(), Winner::Lister);
    }

    #[test]
    fn verify_coloring_examples() {
        let p = petersen();
        let c = crate::brooks::brooks_color(&p).unwrap();
        assert!(verify_coloring(&p, &c, None));
        let mono = Coloring::from_total(vec![0, 0, 1]);
        assert!(!verify_coloring(&crate::generate::path(3), &mono, None));
        let off = Coloring::from_total(vec![0, 1]);
        let lists = ListAssignment::new(vec![vec![0], vec![2]]);
        assert!(!verify_coloring(&complete(2), &off, Some(&lists)));
    }
}
