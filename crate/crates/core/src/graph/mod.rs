//! Graph data model: plain simple graphs, edge-coloured graphs and the
//! reduced multigraph in which a pair may carry one edge per colour.

mod components;
pub mod io;
mod stable;

use std::ops::Deref;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use components::{component_union, monochromatic_components, spanning_component_pair, MonoComponent};
pub use stable::{independence_number, is_stable, maximum_stable_set, stable_sets, StableSets};

/// Palette index: 0 = red, 1 = blue, 2 = green.
pub type Colour = u8;
pub const RED: Colour = 0;
pub const BLUE: Colour = 1;
pub const GREEN: Colour = 2;
pub const MAX_COLOURS: usize = 8;

const DEFAULT_NAMES: [&str; 3] = ["red", "blue", "green"];

#[must_use]
pub fn default_palette(colours: usize) -> Vec<String> {
    (0..colours.max(2))
        .map(|c| DEFAULT_NAMES.get(c).map_or_else(|| format!("colour{c}"), |s| (*s).to_string()))
        .collect()
}

/// Undirected simple graph on `0..n` with sorted adjacency lists.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimpleGraph {
    adj: Vec<Vec<usize>>,
}

impl SimpleGraph {
    #[must_use]
    pub fn empty(n: usize) -> Self {
        Self { adj: vec![Vec::new(); n] }
    }

    /// Builds a graph from an edge list; duplicate edges are merged.
    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(n: usize, edges: I) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!("edge ({u},{v}) out of range for n={n}")));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Self { adj })
    }

    #[must_use]
    pub fn complete(n: usize) -> Self {
        let adj = (0..n).map(|v| (0..n).filter(|&u| u != v).collect()).collect();
        Self { adj }
    }

    #[must_use]
    pub fn cycle(n: usize) -> Self {
        Self::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)).filter(|&(a, b)| a != b)).expect("valid cycle")
    }

    #[must_use]
    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("valid path")
    }

    /// `K_{a,b}` with classes `0..a` and `a..a+b`.
    #[must_use]
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        Self::from_edges(a + b, (0..a).flat_map(|x| (a..a + b).map(move |y| (x, y)))).expect("valid")
    }

    #[must_use]
    pub fn petersen() -> Self {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        Self::from_edges(10, outer.chain(spokes).chain(inner)).expect("valid")
    }

    #[must_use]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[must_use]
    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[must_use]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[must_use]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    #[must_use]
    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    #[must_use]
    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    #[must_use]
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        d.sort_unstable();
        d
    }

    /// Subgraph induced by `vertices`, relabelled so that `vertices[i]`
    /// becomes `i`.
    #[must_use]
    pub fn induced(&self, vertices: &[usize]) -> SimpleGraph {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let adj = vertices
            .iter()
            .map(|&v| {
                let mut l: Vec<usize> = self.adj[v].iter().map(|&u| index[u]).filter(|&u| u != usize::MAX).collect();
                l.sort_unstable();
                l
            })
            .collect();
        SimpleGraph { adj }
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    #[must_use]
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                i += 1;
                for &u in &self.adj[v] {
                    if !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// True for the empty graph and for graphs with a single component.
    #[must_use]
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// N(S): vertices adjacent to some vertex of `set`, sorted.
    #[must_use]
    pub fn set_neighbourhood(&self, set: &[usize]) -> Vec<usize> {
        let mut mark = vec![false; self.n()];
        for &v in set {
            for &u in &self.adj[v] {
                mark[u] = true;
            }
        }
        (0..self.n()).filter(|&v| mark[v]).collect()
    }

    /// Adjacency rows as `u128` masks; `None` when n > 128.
    #[must_use]
    pub fn masks128(&self) -> Option<Vec<u128>> {
        if self.n() > 128 {
            return None;
        }
        Some(self.adj.iter().map(|l| l.iter().fold(0u128, |m, &u| m | (1u128 << u))).collect())
    }

    /// Adjacency rows as `u32` masks; `None` when n > 32.
    #[must_use]
    pub fn masks32(&self) -> Option<Vec<u32>> {
        if self.n() > 32 {
            return None;
        }
        Some(self.adj.iter().map(|l| l.iter().fold(0u32, |m, &u| m | (1u32 << u))).collect())
    }

    #[must_use]
    pub fn bit_rows(&self) -> Vec<FixedBitSet> {
        let n = self.n();
        self.adj
            .iter()
            .map(|l| {
                let mut b = FixedBitSet::with_capacity(n);
                for &u in l {
                    b.insert(u);
                }
                b
            })
            .collect()
    }

    /// Two-colours the graph; returns side labels (0/1) or `None` if an
    /// odd cycle exists.
    #[must_use]
    pub fn two_colouring(&self) -> Option<Vec<u8>> {
        let n = self.n();
        let mut side = vec![u8::MAX; n];
        for s in 0..n {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            let mut queue = vec![s];
            let mut i = 0;
            while i < queue.len() {
                let v = queue[i];
                i += 1;
                for &u in &self.adj[v] {
                    if side[u] == u8::MAX {
                        side[u] = 1 - side[v];
                        queue.push(u);
                    } else if side[u] == side[v] {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }

    /// Union with the edges of `other` (same vertex count).
    #[must_use]
    pub fn union(&self, other: &SimpleGraph) -> SimpleGraph {
        assert_eq!(self.n(), other.n());
        SimpleGraph::from_edges(self.n(), self.edges().chain(other.edges())).expect("same vertex set")
    }
}

/// Storage shared by [`ColouredGraph`] and [`ColouredMultiGraph`]: every
/// vertex pair carries a bitmask of the colours present on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeColouring {
    n: usize,
    palette: Vec<String>,
    pair: Vec<u8>,
    colour_adj: Vec<Vec<Vec<usize>>>,
    adj: Vec<Vec<usize>>,
}

impl EdgeColouring {
    fn build(n: usize, palette: Vec<String>, edges: &[(usize, usize, Colour)], multi: bool) -> Result<Self> {
        let k = palette.len();
        if k == 0 || k > MAX_COLOURS {
            return Err(Error::InvalidGraph(format!("palette size {k} not in 1..={MAX_COLOURS}")));
        }
        let cells = n.checked_mul(n).ok_or_else(|| Error::InvalidGraph("too many vertices".into()))?;
        let mut pair = vec![0u8; cells];
        for &(u, v, c) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!("edge ({u},{v}) out of range for n={n}")));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at {u}")));
            }
            if usize::from(c) >= k {
                return Err(Error::InvalidGraph(format!("colour {c} outside palette of size {k}")));
            }
            let bit = 1u8 << c;
            let cell = pair[u * n + v];
            if cell & bit != 0 {
                return Err(Error::InvalidGraph(format!("repeated edge ({u},{v}) in colour {c}")));
            }
            if !multi && cell != 0 {
                return Err(Error::InvalidGraph(format!("pair ({u},{v}) carries more than one edge")));
            }
            pair[u * n + v] |= bit;
            pair[v * n + u] |= bit;
        }
        let mut colour_adj = vec![vec![Vec::new(); n]; k];
        let mut adj = vec![Vec::new(); n];
        for u in 0..n {
            for v in 0..n {
                let m = pair[u * n + v];
                if m == 0 {
                    continue;
                }
                adj[u].push(v);
                for (c, lists) in colour_adj.iter_mut().enumerate() {
                    if m & (1 << c) != 0 {
                        lists[u].push(v);
                    }
                }
            }
        }
        Ok(Self { n, palette, pair, colour_adj, adj })
    }

    #[must_use]
    pub fn n(&self) -> usize {
        self.n
    }

    #[must_use]
    pub fn palette(&self) -> &[String] {
        &self.palette
    }

    #[must_use]
    pub fn colour_count(&self) -> usize {
        self.palette.len()
    }

    /// Bitmask of colours on the pair `{u, v}`.
    #[must_use]
    pub fn pair_colours(&self, u: usize, v: usize) -> u8 {
        self.pair[u * self.n + v]
    }

    #[must_use]
    pub fn has_edge(&self, u: usize, v: usize, c: Colour) -> bool {
        usize::from(c) < self.palette.len() && self.pair[u * self.n + v] & (1 << c) != 0
    }

    #[must_use]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.pair[u * self.n + v] != 0
    }

    #[must_use]
    pub fn colour_neighbours(&self, v: usize, c: Colour) -> &[usize] {
        &self.colour_adj[usize::from(c)][v]
    }

    /// Neighbours in the underlying simple graph.
    #[must_use]
    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[must_use]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[must_use]
    pub fn colour_degree(&self, v: usize, c: Colour) -> usize {
        self.colour_adj[usize::from(c)][v].len()
    }

    /// δ of the underlying simple graph (0 for the empty graph).
    #[must_use]
    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// All coloured edges `(u, v, c)` with `u < v`, sorted.
    #[must_use]
    pub fn coloured_edges(&self) -> Vec<(usize, usize, Colour)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if v <= u {
                    continue;
                }
                let m = self.pair_colours(u, v);
                for c in 0..self.palette.len() {
                    if m & (1 << c) != 0 {
                        out.push((u, v, c as Colour));
                    }
                }
            }
        }
        out
    }

    #[must_use]
    pub fn edge_count(&self) -> usize {
        self.coloured_edges().len()
    }

    /// The spanning subgraph of colour `c`.
    #[must_use]
    pub fn colour_graph(&self, c: Colour) -> SimpleGraph {
        SimpleGraph { adj: self.colour_adj[usize::from(c)].clone() }
    }

    #[must_use]
    pub fn underlying(&self) -> SimpleGraph {
        SimpleGraph { adj: self.adj.clone() }
    }

    /// Colour-`c` adjacency as `u32` masks (n ≤ 32).
    #[must_use]
    pub fn colour_masks32(&self, c: Colour) -> Option<Vec<u32>> {
        self.colour_graph(c).masks32()
    }
}

/// Simple graph with exactly one colour per edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColouredGraph(EdgeColouring);

impl ColouredGraph {
    pub fn new(n: usize, palette: Vec<String>, edges: &[(usize, usize, Colour)]) -> Result<Self> {
        EdgeColouring::build(n, palette, edges, false).map(Self)
    }

    /// Red/blue graph with the default palette.
    pub fn two_coloured(n: usize, edges: &[(usize, usize, Colour)]) -> Result<Self> {
        Self::new(n, default_palette(2), edges)
    }

    /// Every pair of `0..n` coloured by `colour(u, v)` (called with u < v).
    pub fn complete_with<F: FnMut(usize, usize) -> Colour>(n: usize, colours: usize, mut colour: F) -> Result<Self> {
        let mut edges = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v, colour(u, v)));
            }
        }
        Self::new(n, default_palette(colours), &edges)
    }

    #[must_use]
    pub fn to_multigraph(&self) -> ColouredMultiGraph {
        ColouredMultiGraph(self.0.clone())
    }

    /// The colour of the edge `{u, v}`, if present.
    #[must_use]
    pub fn colour_of(&self, u: usize, v: usize) -> Option<Colour> {
        let m = self.pair_colours(u, v);
        (m != 0).then(|| m.trailing_zeros() as Colour)
    }

    #[must_use]
    pub fn colouring(&self) -> &EdgeColouring {
        &self.0
    }
}

impl Deref for ColouredGraph {
    type Target = EdgeColouring;
    fn deref(&self) -> &EdgeColouring {
        &self.0
    }
}

/// Reduced multigraph: at most one edge of each colour per pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColouredMultiGraph(EdgeColouring);

impl ColouredMultiGraph {
    pub fn new(m: usize, palette: Vec<String>, edges: &[(usize, usize, Colour)]) -> Result<Self> {
        EdgeColouring::build(m, palette, edges, true).map(Self)
    }

    pub fn two_coloured(m: usize, edges: &[(usize, usize, Colour)]) -> Result<Self> {
        Self::new(m, default_palette(2), edges)
    }

    /// Converts to a simple coloured graph when no pair carries two colours.
    pub fn to_simple(&self) -> Result<ColouredGraph> {
        ColouredGraph::new(self.n(), self.palette().to_vec(), &self.coloured_edges())
    }

    #[must_use]
    pub fn colouring(&self) -> &EdgeColouring {
        &self.0
    }
}

impl Deref for ColouredMultiGraph {
    type Target = EdgeColouring;
    fn deref(&self) -> &EdgeColouring {
        &self.0
    }
}

/// Sorted vertex list to a membership vector of length `n`.
#[must_use]
pub fn membership(n: usize, vertices: &[usize]) -> Vec<bool> {
    let mut m = vec![false; n];
    for &v in vertices {
        m[v] = true;
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simple_graph_basics() {
        let g = SimpleGraph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0), (1, 0)]).unwrap();
        assert_eq!(g.edge_count(), 4);
        assert!(g.has_edge(3, 0));
        assert!(!g.has_edge(0, 2));
        assert_eq!(g.degree_sequence(), vec![2, 2, 2, 2]);
        assert!(g.is_connected());
        assert!(g.two_colouring().is_some());
        assert!(SimpleGraph::cycle(5).two_colouring().is_none());
        assert_eq!(g.set_neighbourhood(&[0, 2]), vec![1, 3]);
    }

    #[test]
    fn rejects_loops_and_range() {
        assert!(SimpleGraph::from_edges(3, [(1, 1)]).is_err());
        assert!(SimpleGraph::from_edges(3, [(0, 3)]).is_err());
        assert!(ColouredGraph::two_coloured(3, &[(0, 1, 0), (1, 0, 1)]).is_err());
        assert!(ColouredGraph::two_coloured(3, &[(0, 1, 2)]).is_err());
    }

    #[test]
    fn multigraph_allows_one_edge_per_colour() {
        let r = ColouredMultiGraph::two_coloured(3, &[(0, 1, 0), (0, 1, 1), (1, 2, 1)]).unwrap();
        assert_eq!(r.pair_colours(1, 0), 0b11);
        assert_eq!(r.degree(1), 2);
        assert_eq!(r.min_degree(), 1);
        assert!(r.to_simple().is_err());
        assert!(ColouredMultiGraph::two_coloured(3, &[(0, 1, 0), (1, 0, 0)]).is_err());
    }

    #[test]
    fn induced_relabels() {
        let g = SimpleGraph::cycle(6);
        let h = g.induced(&[5, 0, 1]);
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn petersen_shape() {
        let p = SimpleGraph::petersen();
        assert_eq!(p.edge_count(), 15);
        assert_eq!(p.degree_sequence(), vec![3; 10]);
    }
}
