//! Perfect 2-matchings, the Tutte condition and its robust strengthening.

pub mod bipartite;

use serde::{Deserialize, Serialize};

use crate::budget;
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::rational::{ceil_times, Rational};
use bipartite::{hopcroft_karp, BipartiteMatching};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TwoMatchingPart {
    /// A single edge, weight 2.
    Edge(usize, usize),
    /// A cycle of length at least 3, weight 1 per edge.
    Cycle(Vec<usize>),
}

impl TwoMatchingPart {
    #[must_use]
    pub fn vertices(&self) -> Vec<usize> {
        match self {
            TwoMatchingPart::Edge(u, v) => vec![*u, *v],
            TwoMatchingPart::Cycle(c) => c.clone(),
        }
    }
}

/// Spanning disjoint union of single edges and cycles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoMatching {
    pub parts: Vec<TwoMatchingPart>,
}

#[derive(Serialize, Deserialize)]
struct TwoMatchingJson {
    edges: Vec<(usize, usize)>,
    cycles: Vec<Vec<usize>>,
}

impl TwoMatching {
    /// Edges with their weights ω ∈ {1, 2}, as `(u, v, ω)` with `u < v`.
    #[must_use]
    pub fn weighted_edges(&self) -> Vec<(usize, usize, u8)> {
        let mut out = Vec::new();
        for part in &self.parts {
            match part {
                TwoMatchingPart::Edge(u, v) => out.push(((*u).min(*v), (*u).max(*v), 2)),
                TwoMatchingPart::Cycle(c) => {
                    for i in 0..c.len() {
                        let (a, b) = (c[i], c[(i + 1) % c.len()]);
                        out.push((a.min(b), a.max(b), 1));
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// ω(uv), 0 when the edge is unused.
    #[must_use]
    pub fn omega(&self, u: usize, v: usize) -> u8 {
        let key = (u.min(v), u.max(v));
        self.weighted_edges().into_iter().find(|&(a, b, _)| (a, b) == key).map_or(0, |e| e.2)
    }

    /// Checks the definition against `g`: disjoint spanning parts, real
    /// edges, and weight 2 at every vertex.
    pub fn check(&self, g: &SimpleGraph) -> std::result::Result<(), String> {
        let n = g.n();
        let mut seen = vec![false; n];
        for part in &self.parts {
            let vs = part.vertices();
            if let TwoMatchingPart::Cycle(c) = part {
                if c.len() < 3 {
                    return Err(format!("cycle part {c:?} shorter than 3"));
                }
            }
            for v in vs {
                if v >= n || seen[v] {
                    return Err(format!("vertex {v} repeated or out of range"));
                }
                seen[v] = true;
            }
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(format!("vertex {v} uncovered"));
        }
        let mut weight = vec![0u32; n];
        for (u, v, w) in self.weighted_edges() {
            if !g.has_edge(u, v) {
                return Err(format!("({u},{v}) is not an edge"));
            }
            weight[u] += u32::from(w);
            weight[v] += u32::from(w);
        }
        match weight.iter().position(|&w| w != 2) {
            Some(v) => Err(format!("vertex {v} has weight {}", weight[v])),
            None => Ok(()),
        }
    }

    #[must_use]
    pub fn to_json(&self) -> String {
        let mut j = TwoMatchingJson { edges: Vec::new(), cycles: Vec::new() };
        for p in &self.parts {
            match p {
                TwoMatchingPart::Edge(u, v) => j.edges.push((*u, *v)),
                TwoMatchingPart::Cycle(c) => j.cycles.push(c.clone()),
            }
        }
        serde_json::to_string(&j).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let j: TwoMatchingJson = serde_json::from_str(text)?;
        let mut parts: Vec<TwoMatchingPart> = j.edges.into_iter().map(|(u, v)| TwoMatchingPart::Edge(u, v)).collect();
        parts.extend(j.cycles.into_iter().map(TwoMatchingPart::Cycle));
        Ok(Self { parts })
    }
}

/// A stable set violating the (robust) Tutte condition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TutteWitness {
    pub stable_set: Vec<usize>,
    pub neighbourhood: Vec<usize>,
    /// The additive slack ⌈γn⌉ (0 for the plain condition).
    pub slack: usize,
    /// |S| + slack − |N(S)|, always positive.
    pub deficiency: i64,
}

impl TutteWitness {
    fn new(g: &SimpleGraph, stable_set: Vec<usize>, slack: usize) -> Self {
        let neighbourhood = g.set_neighbourhood(&stable_set);
        let deficiency = stable_set.len() as i64 + slack as i64 - neighbourhood.len() as i64;
        Self { stable_set, neighbourhood, slack, deficiency }
    }

    /// Re-derives every field from `g`.
    pub fn check(&self, g: &SimpleGraph) -> std::result::Result<(), String> {
        if self.stable_set.is_empty() {
            return Err("empty stable set".into());
        }
        if !crate::graph::is_stable(g, &self.stable_set) {
            return Err("witness set is not stable".into());
        }
        if g.set_neighbourhood(&self.stable_set) != self.neighbourhood {
            return Err("neighbourhood mismatch".into());
        }
        let d = self.stable_set.len() as i64 + self.slack as i64 - self.neighbourhood.len() as i64;
        if d != self.deficiency || d <= 0 {
            return Err(format!("deficiency {} (recomputed {d})", self.deficiency));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TutteVerdict {
    Holds,
    Violated(TutteWitness),
}

impl TutteVerdict {
    #[must_use]
    pub fn holds(&self) -> bool {
        matches!(self, TutteVerdict::Holds)
    }

    #[must_use]
    pub fn witness(&self) -> Option<&TutteWitness> {
        match self {
            TutteVerdict::Holds => None,
            TutteVerdict::Violated(w) => Some(w),
        }
    }
}

/// Maximum matching of the bipartite double cover: left copy `u` joined
/// to right copy `v` for every edge `uv`.
#[must_use]
pub fn double_cover_matching(g: &SimpleGraph) -> BipartiteMatching {
    hopcroft_karp(g.n(), g.n(), &adjacency(g))
}

fn adjacency(g: &SimpleGraph) -> Vec<Vec<usize>> {
    (0..g.n()).map(|v| g.neighbours(v).to_vec()).collect()
}

/// Every stable set S has |N(S)| ≥ |S|, decided through the double cover.
///
/// A minimum vertex cover of the double cover gives each vertex weight
/// 0, ½ or 1 (how many of its copies are covered); the weight-0 vertices
/// form a stable set whose neighbours all have weight 1, and a total
/// weight below n/2 makes that set a violator.
#[must_use]
pub fn tutte_condition(g: &SimpleGraph) -> TutteVerdict {
    let adj = adjacency(g);
    let m = hopcroft_karp(g.n(), g.n(), &adj);
    if m.is_left_perfect() {
        return TutteVerdict::Holds;
    }
    let (left, right) = m.alternating_reach(&adj);
    let s: Vec<usize> = (0..g.n()).filter(|&v| left[v] && !right[v]).collect();
    let w = TutteWitness::new(g, s, 0);
    assert!(w.deficiency > 0 && !w.stable_set.is_empty(), "cover-derived witness must violate the condition");
    TutteVerdict::Violated(w)
}

/// A perfect 2-matching, read off a perfect matching of the double cover
/// as a permutation and split into its cycles.
#[must_use]
pub fn perfect_2_matching(g: &SimpleGraph) -> Option<TwoMatching> {
    let m = double_cover_matching(g);
    if !m.is_left_perfect() {
        return None;
    }
    let succ: Vec<usize> = m.mate_left.iter().map(|x| x.expect("perfect")).collect();
    let mut seen = vec![false; g.n()];
    let mut parts = Vec::new();
    for s in 0..g.n() {
        if seen[s] {
            continue;
        }
        let mut cyc = Vec::new();
        let mut v = s;
        while !seen[v] {
            seen[v] = true;
            cyc.push(v);
            v = succ[v];
        }
        if cyc.len() == 2 {
            parts.push(TwoMatchingPart::Edge(cyc[0], cyc[1]));
        } else {
            parts.push(TwoMatchingPart::Cycle(cyc));
        }
    }
    Some(TwoMatching { parts })
}

/// γ-robust Tutte: every non-empty stable S has |N(S)| ≥ |S| + ⌈γn⌉.
/// Returns the maximum-deficiency violator otherwise.
pub fn robust_tutte(g: &SimpleGraph, gamma: &Rational) -> Result<TutteVerdict> {
    robust_tutte_with_budget(g, gamma, budget::node_budget())
}

pub fn robust_tutte_with_budget(g: &SimpleGraph, gamma: &Rational, node_budget: u64) -> Result<TutteVerdict> {
    if *gamma < Rational::from_integer(0) || *gamma > Rational::from_integer(1) {
        return Err(Error::PreconditionViolated(format!("gamma {gamma} outside [0, 1]")));
    }
    let n = g.n();
    let rows = g.masks128().ok_or(Error::InstanceTooLarge { what: "vertex count", size: n as u64, limit: 128 })?;
    let slack = ceil_times(gamma, n) as usize;
    let mut search = RobustSearch { rows: &rows, slack: slack as i64, best: 0, best_set: 0, nodes: 0, budget: node_budget };
    let all = if n == 128 { u128::MAX } else { (1u128 << n) - 1 };
    search.run(0, 0, all)?;
    if search.best <= 0 {
        return Ok(TutteVerdict::Holds);
    }
    let set: Vec<usize> = (0..n).filter(|&v| search.best_set >> v & 1 == 1).collect();
    Ok(TutteVerdict::Violated(TutteWitness::new(g, set, slack)))
}

struct RobustSearch<'a> {
    rows: &'a [u128],
    slack: i64,
    best: i64,
    best_set: u128,
    nodes: u64,
    budget: u64,
}

impl RobustSearch<'_> {
    /// `set` is stable, `nbhd` = N(set), `cand` = vertices that may still
    /// be added (not in set ∪ N(set), above the last chosen vertex).
    fn run(&mut self, set: u128, nbhd: u128, cand: u128) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::InstanceTooLarge { what: "robust Tutte search nodes", size: self.nodes, limit: self.budget });
        }
        let size = i64::from(set.count_ones());
        let nsize = i64::from(nbhd.count_ones());
        if set != 0 {
            let d = size + self.slack - nsize;
            if d > self.best {
                self.best = d;
                self.best_set = set;
            }
        }
        if size + i64::from(cand.count_ones()) + self.slack - nsize <= self.best {
            return Ok(());
        }
        let mut rest = cand;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            let bit = 1u128 << v;
            rest &= !bit;
            if size + 1 + i64::from(rest.count_ones()) + self.slack - nsize <= self.best {
                break;
            }
            self.run(set | bit, nbhd | self.rows[v], rest & !self.rows[v])?;
        }
        Ok(())
    }
}
