use serde::{Deserialize, Serialize};

use super::{Colour, EdgeColouring, SimpleGraph};
use crate::two_matching::bipartite::hopcroft_karp;

/// A monochromatic component. Singletons (colour-isolated vertices) and
/// the empty component are ordinary values.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonoComponent {
    pub colour: Colour,
    /// Sorted vertex list.
    pub vertices: Vec<usize>,
    pub has_odd_cycle: bool,
    pub bipartition: Option<(Vec<usize>, Vec<usize>)>,
}

impl MonoComponent {
    #[must_use]
    pub fn empty(colour: Colour) -> Self {
        Self { colour, vertices: Vec::new(), has_odd_cycle: false, bipartition: Some((Vec::new(), Vec::new())) }
    }

    #[must_use]
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    #[must_use]
    pub fn contains(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    #[must_use]
    pub fn is_bipartite(&self) -> bool {
        !self.has_odd_cycle
    }

    #[must_use]
    pub fn spans(&self, n: usize) -> bool {
        self.vertices.len() == n
    }

    #[must_use]
    pub fn min_vertex(&self) -> Option<usize> {
        self.vertices.first().copied()
    }
}

/// Components of colour `colour`, ordered by smallest vertex; they
/// partition the vertex set.
#[must_use]
pub fn monochromatic_components(g: &EdgeColouring, colour: Colour) -> Vec<MonoComponent> {
    let n = g.n();
    let mut side = vec![u8::MAX; n];
    let mut out = Vec::new();
    for s in 0..n {
        if side[s] != u8::MAX {
            continue;
        }
        side[s] = 0;
        let mut comp = vec![s];
        let mut odd = false;
        let mut i = 0;
        while i < comp.len() {
            let v = comp[i];
            i += 1;
            for &u in g.colour_neighbours(v, colour) {
                if side[u] == u8::MAX {
                    side[u] = 1 - side[v];
                    comp.push(u);
                } else if side[u] == side[v] {
                    odd = true;
                }
            }
        }
        comp.sort_unstable();
        let bipartition = (!odd).then(|| {
            let (a, b): (Vec<usize>, Vec<usize>) = comp.iter().partition(|&&v| side[v] == 0);
            (a, b)
        });
        out.push(MonoComponent { colour, vertices: comp, has_odd_cycle: odd, bipartition });
    }
    out
}

/// Two monochromatic components (red or blue) whose vertex sets together
/// cover V, found through a minimum vertex cover of the bipartite graph
/// whose sides are the red and the blue components, two being adjacent
/// when they share a vertex. When one component spans on its own it is
/// returned twice.
#[must_use]
pub fn spanning_component_pair(g: &EdgeColouring) -> Option<(MonoComponent, MonoComponent)> {
    let n = g.n();
    if n == 0 {
        return Some((MonoComponent::empty(0), MonoComponent::empty(1)));
    }
    let red = monochromatic_components(g, 0);
    let blue = monochromatic_components(g, 1);
    let mut red_of = vec![0usize; n];
    let mut blue_of = vec![0usize; n];
    for (i, c) in red.iter().enumerate() {
        for &v in &c.vertices {
            red_of[v] = i;
        }
    }
    for (j, c) in blue.iter().enumerate() {
        for &v in &c.vertices {
            blue_of[v] = j;
        }
    }
    let mut adj = vec![Vec::new(); red.len()];
    for v in 0..n {
        adj[red_of[v]].push(blue_of[v]);
    }
    for l in &mut adj {
        l.sort_unstable();
        l.dedup();
    }
    let matching = hopcroft_karp(red.len(), blue.len(), &adj);
    if matching.size() > 2 {
        return None;
    }
    let (left_reach, right_reach) = matching.alternating_reach(&adj);
    let mut cover: Vec<MonoComponent> = Vec::new();
    for (i, c) in red.iter().enumerate() {
        if !left_reach[i] {
            cover.push(c.clone());
        }
    }
    for (j, c) in blue.iter().enumerate() {
        if right_reach[j] {
            cover.push(c.clone());
        }
    }
    match cover.len() {
        1 => {
            let c = cover.pop().expect("one");
            Some((c.clone(), c))
        }
        2 => {
            let b = cover.pop().expect("two");
            let a = cover.pop().expect("two");
            Some((a, b))
        }
        _ => None,
    }
}

/// The graph C = ∪ C_i: for each component, its colour's edges inside its
/// vertex set.
#[must_use]
pub fn component_union(g: &EdgeColouring, comps: &[&MonoComponent]) -> SimpleGraph {
    let n = g.n();
    let mut edges = Vec::new();
    for comp in comps {
        for &v in &comp.vertices {
            for &u in g.colour_neighbours(v, comp.colour) {
                if u > v {
                    edges.push((v, u));
                }
            }
        }
    }
    SimpleGraph::from_edges(n, edges).expect("edges of g")
}
