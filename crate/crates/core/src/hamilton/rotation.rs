//! Rotation-extension search for long paths with a fixed start.
//!
//! The free end is extended greedily (fewest unvisited neighbours first);
//! when it is stuck, a Pósa rotation at a random pivot changes the end
//! vertex while keeping the vertex set.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::SimpleGraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EndGoal {
    /// Any Hamilton path from the start.
    Any,
    /// The path must end at this vertex.
    Vertex(usize),
    /// The end must be adjacent to the start (closing a cycle).
    AdjacentToStart,
}

#[derive(Clone, Debug)]
pub struct RotationConfig {
    pub restarts: u32,
    /// Rotations allowed per restart, as a multiple of n.
    pub rotations_per_vertex: u64,
    pub seed: u64,
}

impl Default for RotationConfig {
    fn default() -> Self {
        Self { restarts: 30, rotations_per_vertex: 60, seed: 0x5eed }
    }
}

struct State<'g> {
    g: &'g SimpleGraph,
    path: Vec<usize>,
    pos: Vec<usize>,
    /// Unvisited neighbours of each vertex.
    free_deg: Vec<usize>,
}

const OFF: usize = usize::MAX;

impl<'g> State<'g> {
    fn new(g: &'g SimpleGraph, s: usize) -> Self {
        let n = g.n();
        let mut st = Self { g, path: Vec::with_capacity(n), pos: vec![OFF; n], free_deg: (0..n).map(|v| g.degree(v)).collect() };
        st.push(s);
        st
    }

    fn push(&mut self, v: usize) {
        self.pos[v] = self.path.len();
        self.path.push(v);
        for &u in self.g.neighbours(v) {
            self.free_deg[u] -= 1;
        }
    }

    fn end(&self) -> usize {
        *self.path.last().expect("non-empty")
    }

    /// With the end adjacent to path[i], reverse path[i+1..].
    fn rotate(&mut self, i: usize) {
        self.path[i + 1..].reverse();
        for j in i + 1..self.path.len() {
            self.pos[self.path[j]] = j;
        }
    }
}

fn goal_met(st: &State, s: usize, goal: EndGoal) -> bool {
    match goal {
        EndGoal::Any => true,
        EndGoal::Vertex(t) => st.end() == t,
        EndGoal::AdjacentToStart => st.g.has_edge(st.end(), s),
    }
}

/// One rotation turning a Hamilton path into one meeting the goal, if any.
fn finishing_rotation(st: &State, s: usize, goal: EndGoal) -> Option<usize> {
    let end = st.end();
    let last = st.path.len() - 1;
    match goal {
        EndGoal::Any => None,
        EndGoal::Vertex(t) => {
            let j = st.pos[t];
            (j >= 1 && j < last && st.g.has_edge(end, st.path[j - 1])).then(|| j - 1)
        }
        EndGoal::AdjacentToStart => st
            .g
            .neighbours(end)
            .iter()
            .map(|&y| st.pos[y])
            .find(|&i| i + 1 < last && st.g.has_edge(st.path[i + 1], s)),
    }
}

/// A Hamilton path of `g` starting at `s` and meeting `goal`, or `None`
/// when the search budget runs out. Deterministic for a fixed config.
#[must_use]
pub fn rotation_path(g: &SimpleGraph, s: usize, goal: EndGoal, cfg: &RotationConfig) -> Option<Vec<usize>> {
    let n = g.n();
    if s >= n {
        return None;
    }
    if n == 1 {
        return matches!(goal, EndGoal::Any | EndGoal::Vertex(0)).then(|| vec![0]);
    }
    let hold = match goal {
        EndGoal::Vertex(t) if t == s || t >= n => return None,
        EndGoal::Vertex(t) => Some(t),
        _ => None,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for _ in 0..cfg.restarts {
        let mut st = State::new(g, s);
        let mut rotations = 0u64;
        let limit = cfg.rotations_per_vertex * n as u64;
        loop {
            let end = st.end();
            let held = |u: usize| Some(u) == hold && st.path.len() + 1 < n;
            let mut best: Option<((usize, u32), usize)> = None;
            for &u in g.neighbours(end) {
                if st.pos[u] == OFF && !held(u) {
                    let key = (st.free_deg[u], rng.gen::<u32>());
                    if best.map_or(true, |(k, _)| key < k) {
                        best = Some((key, u));
                    }
                }
            }
            if let Some((_, u)) = best {
                st.push(u);
                continue;
            }
            if st.path.len() == n {
                if goal_met(&st, s, goal) {
                    return Some(st.path);
                }
                if let Some(i) = finishing_rotation(&st, s, goal) {
                    st.rotate(i);
                    debug_assert!(goal_met(&st, s, goal));
                    return Some(st.path);
                }
            }
            rotations += 1;
            if rotations > limit {
                break;
            }
            let last = st.path.len() - 1;
            let pivots: Vec<usize> =
                g.neighbours(end).iter().map(|&y| st.pos[y]).filter(|&i| i != OFF && i + 1 < last).collect();
            let Some(&i) = pivots.choose(&mut rng) else { break };
            st.rotate(i);
        }
    }
    None
}

/// A Hamilton cycle of `g` (n ≥ 3) found by rotation-extension.
#[must_use]
pub fn rotation_cycle(g: &SimpleGraph, cfg: &RotationConfig) -> Option<Vec<usize>> {
    if g.n() < 3 {
        return None;
    }
    rotation_path(g, 0, EndGoal::AdjacentToStart, cfg)
}
