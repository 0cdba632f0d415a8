//! Hamiltonicity: Chvátal-type degree conditions, exact subset DP,
//! a rotation-extension engine, and the constructions built on them.

mod exact;
mod posa;
mod rotation;
mod two_set;

pub use exact::{hamilton_cycle_exact, hamilton_cycle_exact_coloured, hamilton_path_exact, DEFAULT_EXACT_MAX_N};
pub use posa::posa_cycle_cover;
pub use rotation::{rotation_cycle, rotation_path, EndGoal, RotationConfig};
pub use two_set::{two_set_hamilton_path, LemmaMode, TwoSetInstance};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

/// Sorted degree sequence d_1 ≤ … ≤ d_n.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeSequence {
    values: Vec<usize>,
}

impl DegreeSequence {
    #[must_use]
    pub fn new(mut values: Vec<usize>) -> Self {
        values.sort_unstable();
        Self { values }
    }

    #[must_use]
    pub fn of(g: &SimpleGraph) -> Self {
        Self::new(g.degree_sequence())
    }

    /// Degrees of `side` vertices in `g`.
    #[must_use]
    pub fn of_side(g: &SimpleGraph, side: &[usize]) -> Self {
        Self::new(side.iter().map(|&v| g.degree(v)).collect())
    }

    #[must_use]
    pub fn values(&self) -> &[usize] {
        &self.values
    }

    #[must_use]
    pub fn len(&self) -> usize {
        self.values.len()
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// d_i, 1-indexed.
    fn d(&self, i: usize) -> usize {
        self.values[i - 1]
    }
}

/// For every 1 ≤ i < n/2: d_i ≥ i+1 or d_{n−i} ≥ n−i.
#[must_use]
pub fn chvatal_check(d: &DegreeSequence) -> bool {
    let n = d.len();
    (1..).take_while(|&i| 2 * i < n).all(|i| d.d(i) > i || d.d(n - i) >= n - i)
}

/// For every i ∈ [n−1]: x_i ≥ i+1 or y_{n−i} ≥ n−i+1.
#[must_use]
pub fn bipartite_chvatal_check(x: &DegreeSequence, y: &DegreeSequence) -> bool {
    let n = x.len();
    if y.len() != n {
        return false;
    }
    (1..n).all(|i| x.d(i) > i || y.d(n - i) > n - i)
}

/// True iff `cycle` visits every vertex of `g` once and consecutive
/// vertices (cyclically) are adjacent. One vertex, or an edge, counts.
#[must_use]
pub fn is_hamilton_cycle(g: &SimpleGraph, cycle: &[usize]) -> bool {
    if !covers_once(g.n(), cycle) {
        return false;
    }
    match cycle.len() {
        0 | 1 => true,
        2 => g.has_edge(cycle[0], cycle[1]),
        k => (0..k).all(|i| g.has_edge(cycle[i], cycle[(i + 1) % k])),
    }
}

/// True iff `path` is a Hamilton path of `g` from `from` to `to`.
#[must_use]
pub fn is_hamilton_path(g: &SimpleGraph, path: &[usize], from: usize, to: usize) -> bool {
    covers_once(g.n(), path)
        && path.first() == Some(&from)
        && path.last() == Some(&to)
        && path.windows(2).all(|w| g.has_edge(w[0], w[1]))
}

fn covers_once(n: usize, seq: &[usize]) -> bool {
    if seq.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    seq.iter().all(|&v| v < n && !std::mem::replace(&mut seen[v], true))
}

/// Balanced bipartition (X, Y) with `w ∈ X`, `w' ∈ Y`, if `g` is bipartite
/// and connected enough to fix the sides of `w` and `w'`.
fn balanced_sides(g: &SimpleGraph, w: usize, w2: usize) -> Option<(Vec<usize>, Vec<usize>)> {
    let side = g.two_colouring()?;
    if side[w] == side[w2] {
        return None;
    }
    let x: Vec<usize> = (0..g.n()).filter(|&v| side[v] == side[w]).collect();
    let y: Vec<usize> = (0..g.n()).filter(|&v| side[v] == side[w2]).collect();
    (x.len() == y.len()).then_some((x, y))
}

/// Hypothesis of the bipartite path corollary: balanced classes of size k
/// with every degree at least k/2 + 1.
#[must_use]
pub fn bipartite_path_hypothesis(g: &SimpleGraph, w: usize, w2: usize) -> bool {
    let Some((x, _)) = balanced_sides(g, w, w2) else { return false };
    let k = x.len();
    (0..g.n()).all(|v| 2 * g.degree(v) >= k + 2)
}

/// Hamilton w,w'-path. Under the bipartite degree hypothesis it is built
/// by adding v ∈ X, v' ∈ Y with edges wv', v'v, vw' and finding a Hamilton
/// v,v'-path of the augmented graph; otherwise by exact DP.
/// `Ok(None)` means the path provably does not exist.
pub fn hamilton_path_between(g: &SimpleGraph, w: usize, w2: usize) -> Result<Option<Vec<usize>>> {
    let n = g.n();
    if w >= n || w2 >= n || w == w2 {
        return Err(Error::PreconditionViolated("endpoints must be distinct vertices".into()));
    }
    if bipartite_path_hypothesis(g, w, w2) {
        let (v, v2) = (n, n + 1);
        let mut edges: Vec<(usize, usize)> = g.edges().collect();
        edges.extend([(w, v2), (v2, v), (v, w2)]);
        let aug = SimpleGraph::from_edges(n + 2, edges)?;
        let cfg = RotationConfig::default();
        if let Some(p) = rotation_path(&aug, v, EndGoal::Vertex(v2), &cfg) {
            // p = v, w', …, w, v'
            let mut inner: Vec<usize> = p[1..p.len() - 1].to_vec();
            inner.reverse();
            debug_assert!(is_hamilton_path(g, &inner, w, w2));
            return Ok(Some(inner));
        }
        if n > DEFAULT_EXACT_MAX_N {
            return Err(Error::ConstructionFailed(format!(
                "rotation search found no Hamilton path on {n} vertices under the degree hypothesis"
            )));
        }
    }
    hamilton_path_exact(g, w, w2)
}


#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn ds(v: &[usize]) -> DegreeSequence {
        DegreeSequence::new(v.to_vec())
    }

    #[test]
    fn chvatal_examples() {
        assert!(chvatal_check(&ds(&[3, 3, 3, 3])));
        assert!(!chvatal_check(&ds(&[1, 1, 1, 3])));
        assert!(!chvatal_check(&ds(&[2, 2, 2, 2, 2])));
    }

    #[test]
    fn bipartite_chvatal_examples() {
        assert!(bipartite_chvatal_check(&ds(&[3, 3, 3]), &ds(&[3, 3, 3])));
        assert!(bipartite_chvatal_check(&ds(&[2, 2, 2]), &ds(&[2, 2, 2])));
        assert!(!bipartite_chvatal_check(&ds(&[1, 1, 1]), &ds(&[1, 1, 1])));
    }

    #[test]
    fn path_between_examples() {
        let k33 = SimpleGraph::complete_bipartite(3, 3);
        let p = hamilton_path_between(&k33, 0, 4).unwrap().unwrap();
        assert!(is_hamilton_path(&k33, &p, 0, 4));
        let e = SimpleGraph::path(2);
        assert_eq!(hamilton_path_between(&e, 0, 1).unwrap(), Some(vec![0, 1]));
        assert_eq!(hamilton_path_between(&SimpleGraph::empty(2), 0, 1).unwrap(), None);
    }

    #[test]
    fn path_between_large_dense_bipartite() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let k = 200;
        let mut edges = Vec::new();
        for a in 0..k {
            for b in 0..k {
                if rng.gen_bool(0.8) {
                    edges.push((a, k + b));
                }
            }
        }
        let g = SimpleGraph::from_edges(2 * k, edges).unwrap();
        assert!(bipartite_path_hypothesis(&g, 3, k + 7));
        let p = hamilton_path_between(&g, 3, k + 7).unwrap().unwrap();
        assert!(is_hamilton_path(&g, &p, 3, k + 7));
    }

    #[test]
    fn chvatal_sound_on_random_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(33);
        let mut hits = 0;
        for _ in 0..10_000 {
            let n = rng.gen_range(3..=9);
            let p = rng.gen_range(0.3..1.0);
            let mut e = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(p) {
                        e.push((u, v));
                    }
                }
            }
            let g = SimpleGraph::from_edges(n, e).unwrap();
            if chvatal_check(&DegreeSequence::of(&g)) {
                hits += 1;
                let c = hamilton_cycle_exact(&g).unwrap().expect("Chvátal graph without Hamilton cycle");
                assert!(is_hamilton_cycle(&g, &c));
            }
        }
        assert!(hits > 1000);
    }

    #[test]
    fn bipartite_chvatal_sound_on_random_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(34);
        let mut hits = 0;
        for _ in 0..5_000 {
            let k = rng.gen_range(2..=7);
            let p = rng.gen_range(0.4..1.0);
            let mut e = Vec::new();
            for a in 0..k {
                for b in 0..k {
                    if rng.gen_bool(p) {
                        e.push((a, k + b));
                    }
                }
            }
            let g = SimpleGraph::from_edges(2 * k, e).unwrap();
            let x = DegreeSequence::of_side(&g, &(0..k).collect::<Vec<_>>());
            let y = DegreeSequence::of_side(&g, &(k..2 * k).collect::<Vec<_>>());
            if bipartite_chvatal_check(&x, &y) {
                hits += 1;
                assert!(hamilton_cycle_exact(&g).unwrap().is_some());
            }
        }
        assert!(hits > 500);
    }

    #[test]
    fn checkers_reject_bad_sequences() {
        let c4 = SimpleGraph::cycle(4);
        assert!(is_hamilton_cycle(&c4, &[0, 1, 2, 3]));
        assert!(!is_hamilton_cycle(&c4, &[0, 2, 1, 3]));
        assert!(!is_hamilton_cycle(&c4, &[0, 1, 2]));
        assert!(!is_hamilton_cycle(&c4, &[0, 1, 1, 3]));
        assert!(is_hamilton_path(&c4, &[0, 1, 2, 3], 0, 3));
        assert!(!is_hamilton_path(&c4, &[0, 1, 2, 3], 0, 2));
    }
}
