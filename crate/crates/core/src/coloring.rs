use crate::error::{Error, Result};
use crate::graph::Graph;

/// A partial vertex coloring with 0-based colors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    colors: Vec<Option<usize>>,
}

impl Coloring {
    /// All `n` vertices uncolored.
    pub fn uncolored(n: usize) -> Self {
        Coloring {
            colors: vec![None; n],
        }
    }

    pub fn from_total(colors: Vec<usize>) -> Self {
        Coloring {
            colors: colors.into_iter().map(Some).collect(),
        }
    }

    pub fn from_partial(colors: Vec<Option<usize>>) -> Self {
        Coloring { colors }
    }

    pub fn n(&self) -> usize {
        self.colors.len()
    }

    pub fn get(&self, v: usize) -> Option<usize> {
        self.colors[v]
    }

    pub fn set(&mut self, v: usize, color: usize) {
        self.colors[v] = Some(color);
    }

    pub fn clear(&mut self, v: usize) {
        self.colors[v] = None;
    }

    pub fn as_slice(&self) -> &[Option<usize>] {
        &self.colors
    }

    pub fn is_total(&self) -> bool {
        self.colors.iter().all(Option::is_some)
    }

    /// The colors of a total coloring; `None` if some vertex is uncolored.
    pub fn to_total(&self) -> Option<Vec<usize>> {
        self.colors.iter().copied().collect()
    }

    /// Distinct colors in use, ascending.
    pub fn colors_used(&self) -> Vec<usize> {
        let mut used: Vec<usize> = self.colors.iter().flatten().copied().collect();
        used.sort_unstable();
        used.dedup();
        used
    }

    pub fn num_colors(&self) -> usize {
        self.colors_used().len()
    }

    /// Distinct colors used on `vertices`.
    pub fn num_colors_on(&self, vertices: &[usize]) -> usize {
        let mut used: Vec<usize> = vertices.iter().filter_map(|&v| self.colors[v]).collect();
        used.sort_unstable();
        used.dedup();
        used.len()
    }

    /// No edge has two colored endpoints of the same color.
    pub fn is_proper_on(&self, g: &Graph) -> bool {
        self.n() == g.n()
            && g.edges().all(|(u, v)| match (self.colors[u], self.colors[v]) {
                (Some(a), Some(b)) => a != b,
                _ => true,
            })
    }

    /// Renames colors to `0..k` in order of first appearance by vertex id.
    pub fn compact(&mut self) {
        let mut rename = std::collections::HashMap::new();
        for c in self.colors.iter_mut().flatten() {
            let next = rename.len();
            *c = *rename.entry(*c).or_insert(next);
        }
    }
}

/// Per-vertex color lists, each sorted and deduplicated.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ListAssignment {
    lists: Vec<Vec<usize>>,
}

impl ListAssignment {
    pub fn new(lists: Vec<Vec<usize>>) -> Self {
        let lists = lists
            .into_iter()
            .map(|mut l| {
                l.sort_unstable();
                l.dedup();
                l
            })
            .collect();
        ListAssignment { lists }
    }

    /// Every vertex gets the list `0..k`.
    pub fn uniform(n: usize, k: usize) -> Self {
        ListAssignment {
            lists: vec![(0..k).collect(); n],
        }
    }

    pub fn n(&self) -> usize {
        self.lists.len()
    }

    pub fn list(&self, v: usize) -> &[usize] {
        &self.lists[v]
    }

    pub fn contains(&self, v: usize, color: usize) -> bool {
        self.lists[v].binary_search(&color).is_ok()
    }

    pub fn lists(&self) -> &[Vec<usize>] {
        &self.lists
    }

    pub(crate) fn check_len(&self, n: usize) -> Result<()> {
        if self.n() != n {
            return Err(Error::InvalidInput(format!(
                "list assignment covers {} vertices, graph has {n}",
                self.n()
            )));
        }
        Ok(())
    }
}
