//! Exact minimum monochromatic cycle partition by subset DP, plus the
//! certificate format and its verifier.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::budget::node_budget;
use crate::error::{Error, Result};
use crate::graph::{Colour, EdgeColouring};

/// One part of a partition. Parts with at most one vertex carry a nominal
/// colour that the verifier ignores; a two-vertex part is an edge of its
/// colour.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclePart {
    pub colour: Colour,
    pub cycle: Vec<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclePartitionCertificate {
    pub parts: Vec<CyclePart>,
}

impl CyclePartitionCertificate {
    /// Number of non-empty parts.
    #[must_use]
    pub fn len(&self) -> usize {
        self.parts.iter().filter(|p| !p.cycle.is_empty()).count()
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    #[must_use]
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ViolationKind {
    /// A vertex id not in 0..n.
    Range,
    /// A vertex used twice.
    Disjointness,
    /// A vertex not covered by any part.
    Coverage,
    /// A consecutive pair that is not an edge of the part's colour.
    Colour,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub kind: ViolationKind,
    /// Index of the failing part; `None` for coverage failures.
    pub part: Option<usize>,
    pub message: String,
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.part {
            Some(p) => write!(f, "{:?} violation in part {p}: {}", self.kind, self.message),
            None => write!(f, "{:?} violation: {}", self.kind, self.message),
        }
    }
}

pub fn verify_certificate(g: &EdgeColouring, cert: &CyclePartitionCertificate) -> std::result::Result<(), Violation> {
    let n = g.n();
    let mut used = vec![false; n];
    for (i, part) in cert.parts.iter().enumerate() {
        let fail = |kind, message: String| Err(Violation { kind, part: Some(i), message });
        for &v in &part.cycle {
            if v >= n {
                return fail(ViolationKind::Range, format!("vertex {v} out of range"));
            }
            if used[v] {
                return fail(ViolationKind::Disjointness, format!("vertex {v} already covered"));
            }
            used[v] = true;
        }
        let len = part.cycle.len();
        if len >= 2 {
            if usize::from(part.colour) >= g.colour_count() {
                return fail(ViolationKind::Colour, format!("colour {} not in palette", part.colour));
            }
            let pairs = if len == 2 { 1 } else { len };
            for j in 0..pairs {
                let (a, b) = (part.cycle[j], part.cycle[(j + 1) % len]);
                if !g.has_edge(a, b, part.colour) {
                    return fail(ViolationKind::Colour, format!("{a}-{b} is not an edge of colour {}", part.colour));
                }
            }
        }
    }
    if let Some(v) = used.iter().position(|&u| !u) {
        return Err(Violation { kind: ViolationKind::Coverage, part: None, message: format!("vertex {v} not covered") });
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PartitionResult {
    Sat { k_star: usize, certificate: CyclePartitionCertificate },
    Unsat { k_max: usize },
}

pub const DEFAULT_MAX_N: usize = 18;
pub const HARD_MAX_N: usize = 24;

/// ends[mask]: endpoints v of colour-c Hamilton paths of `mask` starting at
/// its lowest vertex.
fn path_ends(adj: &[u32], n: usize) -> Vec<u32> {
    let mut ends = vec![0u32; 1usize << n];
    for v in 0..n {
        ends[1 << v] = 1 << v;
    }
    for mask in 1usize..(1 << n) {
        let e = ends[mask];
        if e == 0 {
            continue;
        }
        let low = mask.trailing_zeros();
        // Extensions must stay above the lowest vertex.
        let allowed = !(mask as u32) & !((1u32 << (low + 1)) - 1) & ((1u64 << n) - 1) as u32;
        let mut it = e;
        while it != 0 {
            let v = it.trailing_zeros() as usize;
            it &= it - 1;
            let mut ext = adj[v] & allowed;
            while ext != 0 {
                let u = ext.trailing_zeros();
                ext &= ext - 1;
                ends[mask | (1 << u)] |= 1 << u;
            }
        }
    }
    ends
}

struct Tables {
    n: usize,
    adj: Vec<Vec<u32>>,
    ends: Vec<Vec<u32>>,
    /// Bit c set iff the mask is spanned by a colour-c cycle.
    cyc: Vec<u8>,
}

impl Tables {
    fn build(g: &EdgeColouring) -> Self {
        let n = g.n();
        let colours = g.colour_count();
        let adj: Vec<Vec<u32>> = (0..colours).map(|c| g.colour_masks32(c as Colour).expect("n ≤ 32")).collect();
        let ends: Vec<Vec<u32>> = adj.par_iter().map(|a| path_ends(a, n)).collect();
        let mut cyc = vec![0u8; 1usize << n];
        for (mask, slot) in cyc.iter_mut().enumerate().skip(1) {
            let low = mask.trailing_zeros() as usize;
            if mask.count_ones() == 1 {
                *slot = 1;
                continue;
            }
            for c in 0..colours {
                if ends[c][mask] & adj[c][low] != 0 {
                    *slot |= 1 << c;
                }
            }
        }
        Self { n, adj, ends, cyc }
    }

    fn cycle_of(&self, mask: usize) -> CyclePart {
        if mask.count_ones() == 1 {
            return CyclePart { colour: 0, cycle: vec![mask.trailing_zeros() as usize] };
        }
        let c = self.cyc[mask].trailing_zeros() as usize;
        let low = mask.trailing_zeros() as usize;
        let (adj, ends) = (&self.adj[c], &self.ends[c]);
        let mut v = (ends[mask] & adj[low]).trailing_zeros() as usize;
        let mut m = mask;
        let mut rev = vec![v];
        while m.count_ones() > 1 {
            let rest = m & !(1 << v);
            let prev = (ends[rest] & adj[v]).trailing_zeros() as usize;
            debug_assert!(prev < self.n);
            rev.push(prev);
            m = rest;
            v = prev;
        }
        rev.reverse();
        CyclePart { colour: c as Colour, cycle: rev }
    }
}

struct Cover<'a> {
    t: &'a Tables,
    /// Largest k known to fail for the mask.
    fail: Vec<u8>,
    nodes: u64,
    budget: u64,
}

impl Cover<'_> {
    fn solve(&mut self, rem: usize, k: u8, out: &mut Vec<usize>) -> Result<bool> {
        if rem == 0 {
            return Ok(true);
        }
        if k == 0 || self.fail[rem] >= k {
            return Ok(false);
        }
        let low = rem & rem.wrapping_neg();
        let rest = rem ^ low;
        let mut sub = rest;
        loop {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::InstanceTooLarge { what: "cover search nodes", size: self.nodes, limit: self.budget });
            }
            let part = sub | low;
            if self.t.cyc[part] != 0 && self.solve(rem ^ part, k - 1, out)? {
                out.push(part);
                return Ok(true);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
        self.fail[rem] = k;
        Ok(false)
    }
}

pub fn min_mono_cycle_partition(g: &EdgeColouring, k_max: usize) -> Result<PartitionResult> {
    min_mono_cycle_partition_with(g, k_max, DEFAULT_MAX_N)
}

/// As [`min_mono_cycle_partition`] with a custom vertex limit (at most 24).
pub fn min_mono_cycle_partition_with(g: &EdgeColouring, k_max: usize, max_n: usize) -> Result<PartitionResult> {
    let n = g.n();
    let limit = max_n.min(HARD_MAX_N);
    if n > limit {
        return Err(Error::InstanceTooLarge { what: "vertices", size: n as u64, limit: limit as u64 });
    }
    if n == 0 {
        return Ok(PartitionResult::Sat { k_star: 0, certificate: CyclePartitionCertificate::default() });
    }
    let tables = Tables::build(g);
    let mut cover = Cover { t: &tables, fail: vec![0; 1 << n], nodes: 0, budget: node_budget() };
    let full = (1usize << n) - 1;
    for k in 1..=k_max.min(n) {
        let mut parts = Vec::new();
        if cover.solve(full, k as u8, &mut parts)? {
            parts.reverse();
            let certificate = CyclePartitionCertificate { parts: parts.iter().map(|&m| tables.cycle_of(m)).collect() };
            if let Err(v) = verify_certificate(g, &certificate) {
                return Err(Error::InternalContradiction(format!("exact solver produced an invalid certificate: {v}")));
            }
            return Ok(PartitionResult::Sat { k_star: k, certificate });
        }
    }
    Ok(PartitionResult::Unsat { k_max })
}

#[cfg(test)]
pub(crate) mod oracle {
    //! Naive backtracking over explicit cycles, sharing nothing with the DP.
    use crate::graph::EdgeColouring;

    fn extend(g: &EdgeColouring, used: &mut Vec<bool>, parts_left: usize) -> bool {
        let Some(start) = used.iter().position(|&u| !u) else { return true };
        if parts_left == 0 {
            return false;
        }
        used[start] = true;
        if extend(g, used, parts_left - 1) {
            return true;
        }
        for c in 0..g.colour_count() as u8 {
            let mut path = vec![start];
            if grow(g, c, used, &mut path, parts_left) {
                return true;
            }
        }
        used[start] = false;
        false
    }

    fn grow(g: &EdgeColouring, c: u8, used: &mut Vec<bool>, path: &mut Vec<usize>, parts_left: usize) -> bool {
        let last = *path.last().expect("non-empty");
        for &u in g.colour_neighbours(last, c) {
            if used[u] || u < path[0] {
                continue;
            }
            used[u] = true;
            path.push(u);
            let closes = path.len() == 2 || g.has_edge(u, path[0], c);
            if closes && extend(g, used, parts_left - 1) {
                return true;
            }
            if grow(g, c, used, path, parts_left) {
                return true;
            }
            path.pop();
            used[u] = false;
        }
        false
    }

    /// Smallest k ≤ k_max admitting a partition.
    pub fn min_parts(g: &EdgeColouring, k_max: usize) -> Option<usize> {
        (0..=k_max).find(|&k| extend(g, &mut vec![false; g.n()], k))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{ColouredGraph, BLUE, RED};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn k_star(g: &EdgeColouring, k: usize) -> Option<usize> {
        match min_mono_cycle_partition(g, k).unwrap() {
            PartitionResult::Sat { k_star, certificate } => {
                verify_certificate(g, &certificate).unwrap();
                assert_eq!(certificate.len(), k_star);
                Some(k_star)
            }
            PartitionResult::Unsat { .. } => None,
        }
    }

    #[test]
    fn red_triangle() {
        let g = ColouredGraph::complete_with(3, 2, |_, _| RED).unwrap();
        let PartitionResult::Sat { k_star, certificate } = min_mono_cycle_partition(&g, 3).unwrap() else { panic!() };
        assert_eq!(k_star, 1);
        assert_eq!(certificate.parts.len(), 1);
        let mut vs = certificate.parts[0].cycle.clone();
        vs.sort_unstable();
        assert_eq!((certificate.parts[0].colour, vs), (RED, vec![0, 1, 2]));
    }

    #[test]
    fn empty_and_edgeless() {
        let g = ColouredGraph::two_coloured(0, &[]).unwrap();
        assert_eq!(k_star(&g, 3), Some(0));
        let g = ColouredGraph::two_coloured(4, &[]).unwrap();
        assert_eq!(k_star(&g, 3), None);
        assert_eq!(k_star(&g, 4), Some(4));
    }

    #[test]
    fn single_edge_part() {
        let g = ColouredGraph::two_coloured(3, &[(0, 1, BLUE), (1, 2, RED)]).unwrap();
        assert_eq!(k_star(&g, 3), Some(2));
    }

    #[test]
    fn verifier_reports_clauses() {
        let g = ColouredGraph::complete_with(4, 2, |u, v| if (u, v) == (0, 3) { BLUE } else { RED }).unwrap();
        let ok = CyclePartitionCertificate { parts: vec![CyclePart { colour: RED, cycle: vec![0, 1, 3, 2] }] };
        assert!(verify_certificate(&g, &ok).is_ok());
        let wrong = CyclePartitionCertificate { parts: vec![CyclePart { colour: RED, cycle: vec![0, 1, 2, 3] }] };
        assert_eq!(verify_certificate(&g, &wrong).unwrap_err().kind, ViolationKind::Colour);
        let missing = CyclePartitionCertificate { parts: vec![CyclePart { colour: RED, cycle: vec![0, 1, 2] }] };
        assert_eq!(verify_certificate(&g, &missing).unwrap_err().kind, ViolationKind::Coverage);
        let dup = CyclePartitionCertificate {
            parts: vec![CyclePart { colour: RED, cycle: vec![0, 1, 2] }, CyclePart { colour: RED, cycle: vec![2, 3] }],
        };
        assert_eq!(verify_certificate(&g, &dup).unwrap_err().kind, ViolationKind::Disjointness);
        let range = CyclePartitionCertificate { parts: vec![CyclePart { colour: RED, cycle: vec![7] }] };
        assert_eq!(verify_certificate(&g, &range).unwrap_err().kind, ViolationKind::Range);
        let degenerate = CyclePartitionCertificate {
            parts: vec![
                CyclePart { colour: 5, cycle: vec![0] },
                CyclePart { colour: 0, cycle: vec![] },
                CyclePart { colour: RED, cycle: vec![1, 2, 3] },
            ],
        };
        assert!(verify_certificate(&g, &degenerate).is_ok());
        assert_eq!(degenerate.len(), 2);
    }

    #[test]
    fn certificate_json_round_trip() {
        let c = CyclePartitionCertificate { parts: vec![CyclePart { colour: BLUE, cycle: vec![3, 1, 2] }] };
        assert_eq!(CyclePartitionCertificate::from_json(&c.to_json()).unwrap(), c);
    }

    #[test]
    fn too_large() {
        let g = ColouredGraph::two_coloured(19, &[]).unwrap();
        assert!(matches!(min_mono_cycle_partition(&g, 3), Err(Error::InstanceTooLarge { .. })));
    }

    #[test]
    fn agrees_with_backtracking() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..300 {
            let n = rng.gen_range(1..=9);
            let p = rng.gen_range(0.2..0.95);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(p) {
                        edges.push((u, v, rng.gen_range(0..2u8)));
                    }
                }
            }
            let g = ColouredGraph::two_coloured(n, &edges).unwrap();
            assert_eq!(k_star(&g, n), oracle::min_parts(&g, n), "{edges:?}");
        }
    }

    #[test]
    fn complete_two_coloured_splits_into_two() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for n in 1..=10 {
            for _ in 0..20 {
                let g = ColouredGraph::complete_with(n, 2, |_, _| rng.gen_range(0..2)).unwrap();
                assert!(k_star(&g, 2).is_some());
            }
        }
    }

    #[test]
    fn monotone_in_k() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for _ in 0..50 {
            let n = 8;
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.5) {
                        edges.push((u, v, rng.gen_range(0..2u8)));
                    }
                }
            }
            let g = ColouredGraph::two_coloured(n, &edges).unwrap();
            let best = k_star(&g, n).unwrap();
            for k in 0..=n {
                assert_eq!(k_star(&g, k).is_some(), k >= best);
            }
        }
    }
}
