//! Deterministic constructions: the sharpness example, the three-colour
//! lower bound, the two extremal colourings and random dense instances.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{default_palette, Colour, ColouredGraph, ColouredMultiGraph, BLUE, GREEN, RED};
use crate::rational::{ceil_times, format_rational, Rational};

/// Vertex ranges of the sharpness graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SharpnessLayout {
    pub k: std::ops::Range<usize>,
    pub k1: std::ops::Range<usize>,
    pub k2: std::ops::Range<usize>,
    pub a: usize,
    pub b: usize,
}

impl SharpnessLayout {
    #[must_use]
    pub fn new(m: usize) -> Self {
        let k = 0..m + 2;
        let k1 = k.end..k.end + m + 2;
        let k2 = k1.end..k1.end + m;
        let a = k2.end;
        SharpnessLayout { k, k1, k2, a, b: a + 1 }
    }

    #[must_use]
    pub fn n(&self) -> usize {
        self.b + 1
    }
}

fn clique(edges: &mut Vec<(usize, usize, Colour)>, r: std::ops::Range<usize>, c: Colour) {
    for u in r.clone() {
        for v in u + 1..r.end {
            edges.push((u, v, c));
        }
    }
}

fn join(edges: &mut Vec<(usize, usize, Colour)>, x: std::ops::Range<usize>, y: std::ops::Range<usize>, c: Colour) {
    for u in x {
        for v in y.clone() {
            edges.push((u, v, c));
        }
    }
}

/// Three disjoint cliques K (red), K' (blue), K'' (`inner`) of sizes
/// m+2, m+2, m plus two vertices a and b. K–K'' is blue, K'–K'' red, a is
/// blue to K ∪ K'' and b red to K' ∪ K''.
pub fn gen_sharpness(m: usize, inner: Colour) -> Result<ColouredGraph> {
    if m == 0 {
        return Err(Error::InfeasibleParameters("sharpness construction needs m >= 1".into()));
    }
    if inner > BLUE {
        return Err(Error::InfeasibleParameters("K'' colour must be red or blue".into()));
    }
    let l = SharpnessLayout::new(m);
    let mut e = Vec::new();
    clique(&mut e, l.k.clone(), RED);
    clique(&mut e, l.k1.clone(), BLUE);
    clique(&mut e, l.k2.clone(), inner);
    join(&mut e, l.k.clone(), l.k2.clone(), BLUE);
    join(&mut e, l.k1.clone(), l.k2.clone(), RED);
    join(&mut e, l.a..l.a + 1, l.k.clone(), BLUE);
    join(&mut e, l.a..l.a + 1, l.k2.clone(), BLUE);
    join(&mut e, l.b..l.b + 1, l.k1.clone(), RED);
    join(&mut e, l.b..l.b + 1, l.k2.clone(), RED);
    ColouredGraph::two_coloured(l.n(), &e)
}

/// Sets A, B, C, D of sizes m+2, m, m+2, m+1 in that vertex order.
pub fn gen_three_colour(m: usize) -> Result<ColouredGraph> {
    if m == 0 {
        return Err(Error::InfeasibleParameters("three-colour construction needs m >= 1".into()));
    }
    let a = 0..m + 2;
    let b = a.end..a.end + m;
    let c = b.end..b.end + m + 2;
    let d = c.end..c.end + m + 1;
    let n = d.end;
    let mut e = Vec::new();
    clique(&mut e, a.clone(), RED);
    clique(&mut e, c.clone(), RED);
    join(&mut e, b.clone(), d.clone(), RED);
    join(&mut e, a.clone(), b.clone(), GREEN);
    join(&mut e, c.clone(), d.clone(), GREEN);
    join(&mut e, a, d, BLUE);
    join(&mut e, b, c, BLUE);
    ColouredGraph::new(n, default_palette(3), &e)
}

/// A connected random bipartite graph between `x` and `y`: a spanning
/// double star plus each remaining pair with probability 1/2.
fn random_connected_bipartite(rng: &mut ChaCha8Rng, x: &[usize], y: &[usize], c: Colour, out: &mut Vec<(usize, usize, Colour)>) {
    if x.is_empty() || y.is_empty() {
        return;
    }
    for (i, &u) in x.iter().enumerate() {
        for (j, &v) in y.iter().enumerate() {
            if i == 0 || j == 0 || rng.gen_bool(0.5) {
                out.push((u.min(v), u.max(v), c));
            }
        }
    }
}

/// A spanning bipartite red component with near-equal classes and two
/// bipartite blue components, one per class.
pub fn gen_extremal_a(m: usize, gamma: &Rational, seed: u64) -> Result<ColouredMultiGraph> {
    if m < 2 {
        return Err(Error::InfeasibleParameters("extremal (a) needs m >= 2".into()));
    }
    if Rational::from_integer((m % 2) as i64) > *gamma * Rational::from_integer(m as i64) {
        return Err(Error::InfeasibleParameters(format!(
            "classes of sizes {} and {} differ by more than {}m",
            m.div_ceil(2),
            m / 2,
            format_rational(gamma)
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..m).collect();
    order.shuffle(&mut rng);
    let (x1, x2) = order.split_at(m.div_ceil(2));
    let mut e = Vec::new();
    random_connected_bipartite(&mut rng, x1, x2, RED, &mut e);
    for class in [x1, x2] {
        let (p, q) = class.split_at(class.len().div_ceil(2));
        random_connected_bipartite(&mut rng, p, q, BLUE, &mut e);
    }
    ColouredMultiGraph::two_coloured(m, &e)
}

/// Block sizes for the four-cycle colouring: near-equal, larger first.
fn block_sizes(m: usize) -> [usize; 4] {
    [0, 1, 2, 3].map(|i| m / 4 + usize::from(i < m % 4))
}

/// Two red components I11 ∪ I12, I21 ∪ I22 and two blue components
/// I11 ∪ I21, I12 ∪ I22, with diagonal blocks blue inside and the others
/// red inside, plus a few planted wrong-colour edges per block.
pub fn gen_extremal_b(m: usize, gamma: &Rational, seed: u64) -> Result<ColouredMultiGraph> {
    if m < 4 {
        return Err(Error::InfeasibleParameters("extremal (b) needs m >= 4".into()));
    }
    let sizes = block_sizes(m);
    let cap = (Rational::new(1, 4) + *gamma) * Rational::from_integer(m as i64);
    if Rational::from_integer(sizes[0] as i64) > cap {
        return Err(Error::InfeasibleParameters(format!("block of size {} exceeds (1/4+{})m", sizes[0], format_rational(gamma))));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..m).collect();
    order.shuffle(&mut rng);
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut at = 0;
    for s in sizes {
        let mut b = order[at..at + s].to_vec();
        b.sort_unstable();
        blocks.push(b);
        at += s;
    }
    // blocks[2i + j] = I_{i+1, j+1}
    let block = |i: usize, j: usize| &blocks[2 * i + j];
    let mut e = Vec::new();
    let inside = |e: &mut Vec<(usize, usize, Colour)>, b: &[usize], c: Colour| {
        for (x, &u) in b.iter().enumerate() {
            for &v in &b[x + 1..] {
                e.push((u, v, c));
            }
        }
    };
    let across = |e: &mut Vec<(usize, usize, Colour)>, p: &[usize], q: &[usize], c: Colour| {
        for &u in p {
            for &v in q {
                e.push((u.min(v), u.max(v), c));
            }
        }
    };
    for i in 0..2 {
        for j in 0..2 {
            inside(&mut e, block(i, j), if i == j { BLUE } else { RED });
        }
        across(&mut e, block(i, 0), block(i, 1), RED);
        across(&mut e, block(0, i), block(1, i), BLUE);
    }
    let wrong = (*gamma * Rational::from_integer((m * m) as i64) / 8).floor().to_integer().max(0) as usize;
    for i in 0..2 {
        for j in 0..2 {
            let b = block(i, j);
            let mut pairs: Vec<(usize, usize)> =
                b.iter().enumerate().flat_map(|(x, &u)| b[x + 1..].iter().map(move |&v| (u, v))).collect();
            pairs.shuffle(&mut rng);
            let c = if i == j { RED } else { BLUE };
            for &(u, v) in pairs.iter().take(rng.gen_range(0..=wrong.min(pairs.len()))) {
                e.push((u, v, c));
            }
        }
    }
    ColouredMultiGraph::two_coloured(m, &e)
}

/// Random graph with δ ≥ ⌈δ_frac·n⌉; each edge red with probability
/// `red_bias`.
pub fn gen_random_min_degree(n: usize, delta_fraction: &Rational, red_bias: f64, seed: u64) -> Result<ColouredGraph> {
    let zero = Rational::from_integer(0);
    let one = Rational::from_integer(1);
    if *delta_fraction <= zero || *delta_fraction >= one {
        return Err(Error::InfeasibleParameters("delta fraction must lie strictly between 0 and 1".into()));
    }
    if !(0.0..=1.0).contains(&red_bias) {
        return Err(Error::InfeasibleParameters("colour bias must lie in [0, 1]".into()));
    }
    let need = ceil_times(delta_fraction, n).max(0) as usize;
    if n > 0 && need > n - 1 {
        return Err(Error::InfeasibleParameters(format!("minimum degree {need} impossible on {n} vertices")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = crate::rational::to_f64(&((one + *delta_fraction) / 2));
    let mut adj = vec![vec![false; n]; n];
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                adj[u][v] = true;
                adj[v][u] = true;
            }
        }
    }
    let degree = |adj: &Vec<Vec<bool>>, v: usize| adj[v].iter().filter(|&&b| b).count();
    loop {
        let Some(v) = (0..n).filter(|&v| degree(&adj, v) < need).min_by_key(|&v| (degree(&adj, v), v)) else { break };
        let free: Vec<usize> = (0..n).filter(|&u| u != v && !adj[v][u]).collect();
        let &u = free.choose(&mut rng).expect("need <= n-1 leaves a non-neighbour");
        adj[u][v] = true;
        adj[v][u] = true;
    }
    let mut e = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if adj[u][v] {
                e.push((u, v, if rng.gen_bool(red_bias) { RED } else { BLUE }));
            }
        }
    }
    ColouredGraph::two_coloured(n, &e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_partition::oracle::min_parts;
    use crate::graph::monochromatic_components;
    use crate::rational::rat;
    use crate::structure::{check_extremal_report, detect_extremal, ExtremalKind};

    /// Degrees by scanning the raw edge list.
    fn degrees(n: usize, edges: &[(usize, usize, Colour)]) -> Vec<usize> {
        let mut d = vec![0; n];
        let mut seen = std::collections::HashSet::new();
        for &(u, v, _) in edges {
            if seen.insert((u.min(v), u.max(v))) {
                d[u] += 1;
                d[v] += 1;
            }
        }
        d
    }

    #[test]
    fn sharpness_degree_audit() {
        for m in 1..=6 {
            for inner in [RED, BLUE] {
                let g = gen_sharpness(m, inner).unwrap();
                let l = SharpnessLayout::new(m);
                assert_eq!(g.n(), 3 * m + 6);
                let d = degrees(g.n(), &g.coloured_edges());
                for v in l.k.clone().chain(l.k1.clone()) {
                    assert_eq!(d[v], 2 * m + 2);
                }
                for v in l.k2.clone() {
                    assert_eq!(d[v], 3 * m + 5);
                }
                assert_eq!(d[l.a], 2 * m + 2);
                assert_eq!(d[l.b], 2 * m + 2);
                assert_eq!(g.min_degree(), 2 * m + 2);
                assert_eq!(3 * g.min_degree(), 2 * g.n() - 6);
                assert!(!g.adjacent(l.a, l.b));
            }
        }
    }

    #[test]
    fn sharpness_red_components() {
        let g = gen_sharpness(1, RED).unwrap();
        let l = SharpnessLayout::new(1);
        let comps: Vec<Vec<usize>> = monochromatic_components(&g, RED).into_iter().map(|c| c.vertices).collect();
        let mut rest: Vec<usize> = l.k1.clone().chain(l.k2.clone()).chain([l.b]).collect();
        rest.sort_unstable();
        assert_eq!(comps.len(), 3);
        assert!(comps.contains(&l.k.clone().collect()));
        assert!(comps.contains(&rest));
        assert!(comps.contains(&vec![l.a]));
    }

    #[test]
    fn sharpness_m1_needs_four() {
        let g = gen_sharpness(1, RED).unwrap();
        assert_eq!(min_parts(&g, 4), Some(4));
    }

    #[test]
    fn three_colour_degree_audit() {
        for m in 1..=6 {
            let g = gen_three_colour(m).unwrap();
            assert_eq!(g.n(), 4 * m + 5);
            assert_eq!(g.colour_count(), 3);
            let d = degrees(g.n(), &g.coloured_edges());
            assert_eq!(*d.iter().min().unwrap(), 3 * m + 2);
            assert_eq!(g.min_degree(), 3 * g.n() / 4 - 1);
        }
        assert!(gen_three_colour(0).is_err());
    }

    #[test]
    fn three_colour_m1_splits_into_three() {
        // A = 0..3, B = {3}, C = 4..7, D = {7, 8}; an edge counts as a cycle.
        use crate::exact_partition::{verify_certificate, CyclePart, CyclePartitionCertificate};
        let g = gen_three_colour(1).unwrap();
        let cert = CyclePartitionCertificate {
            parts: vec![
                CyclePart { colour: BLUE, cycle: vec![0, 7, 1, 8] },
                CyclePart { colour: GREEN, cycle: vec![2, 3] },
                CyclePart { colour: RED, cycle: vec![4, 5, 6] },
            ],
        };
        assert_eq!(verify_certificate(&g, &cert), Ok(()));
        assert_eq!(min_parts(&g, 4), Some(3));
    }

    #[test]
    fn three_colour_m2_needs_four() {
        assert_eq!(min_parts(&gen_three_colour(2).unwrap(), 4), Some(4));
    }

    #[test]
    fn extremal_a_round_trip() {
        for seed in 0..20 {
            for m in [12, 13, 20] {
                let g = gen_extremal_a(m, &rat(1, 10), seed).unwrap();
                let r = detect_extremal(&g, &rat(1, 10));
                assert_eq!(r.kind, ExtremalKind::BipartiteLike, "m={m} seed={seed}");
                assert_eq!(check_extremal_report(&g, &r), Ok(()));
            }
        }
        assert!(matches!(gen_extremal_a(13, &rat(0, 1), 0), Err(Error::InfeasibleParameters(_))));
        assert!(gen_extremal_a(12, &rat(0, 1), 0).is_ok());
    }

    #[test]
    fn extremal_b_round_trip() {
        for seed in 0..20 {
            for m in [16, 17, 30] {
                let g = gen_extremal_b(m, &rat(1, 10), seed).unwrap();
                let r = detect_extremal(&g, &rat(1, 10));
                assert_eq!(r.kind, ExtremalKind::FourCycleLike, "m={m} seed={seed}");
                assert_eq!(check_extremal_report(&g, &r), Ok(()));
            }
        }
        assert!(gen_extremal_b(5, &rat(0, 1), 0).is_err());
    }

    #[test]
    fn random_min_degree_postcondition_and_determinism() {
        for seed in 0..30 {
            let g = gen_random_min_degree(12, &rat(3, 4), 0.5, seed).unwrap();
            assert!(g.min_degree() >= 9);
            assert_eq!(g, gen_random_min_degree(12, &rat(3, 4), 0.5, seed).unwrap());
        }
        assert!(gen_random_min_degree(3, &rat(9, 10), 0.5, 0).is_err());
        let all_red = gen_random_min_degree(10, &rat(1, 2), 1.0, 1).unwrap();
        assert!(all_red.coloured_edges().iter().all(|e| e.2 == RED));
    }
}
