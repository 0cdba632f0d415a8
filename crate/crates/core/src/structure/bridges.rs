//! Bridges between two monochromatic subgraphs of a cluster graph.

use serde::{Deserialize, Serialize};

use crate::graph::{Colour, EdgeColouring};
use crate::rational::{serde_str, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BridgeWitness {
    pub u: usize,
    pub u2: usize,
    /// Clusters reached by u (in h1, then h2) and by u' (likewise).
    pub i: usize,
    pub j: usize,
    pub i2: usize,
    pub j2: usize,
    pub colour: Colour,
    #[serde(with = "serde_str")]
    pub d: Rational,
}

/// deg_colour(v, V_c) ≥ d·|V_c|.
fn dense_into(g: &EdgeColouring, v: usize, cluster: &[usize], colour: Colour, d: &Rational) -> bool {
    let k = cluster.iter().filter(|&&x| g.has_edge(v, x, colour)).count();
    Rational::from_integer(k as i64) >= *d * Rational::from_integer(cluster.len() as i64)
}

/// Two distinct vertices each dense in `colour` into some cluster indexed
/// by `h1` and some cluster indexed by `h2`. The smallest such pair is
/// returned, each with its first good clusters.
#[must_use]
pub fn admits_bridges(
    g: &EdgeColouring,
    clusters: &[Vec<usize>],
    h1: &[usize],
    h2: &[usize],
    colour: Colour,
    d: &Rational,
) -> Option<BridgeWitness> {
    let good = |v: usize, side: &[usize]| side.iter().copied().find(|&c| dense_into(g, v, &clusters[c], colour, d));
    let mut found = Vec::new();
    for v in 0..g.n() {
        if let (Some(i), Some(j)) = (good(v, h1), good(v, h2)) {
            found.push((v, i, j));
            if found.len() == 2 {
                let [(u, i, j), (u2, i2, j2)] = [found[0], found[1]];
                return Some(BridgeWitness { u, u2, i, j, i2, j2, colour, d: *d });
            }
        }
    }
    None
}

/// Re-checks the four density inequalities of a witness.
#[must_use]
pub fn check_bridge(g: &EdgeColouring, clusters: &[Vec<usize>], h1: &[usize], h2: &[usize], w: &BridgeWitness) -> bool {
    w.u != w.u2
        && h1.contains(&w.i)
        && h1.contains(&w.i2)
        && h2.contains(&w.j)
        && h2.contains(&w.j2)
        && [(w.u, w.i), (w.u, w.j), (w.u2, w.i2), (w.u2, w.j2)]
            .iter()
            .all(|&(v, c)| dense_into(g, v, &clusters[c], w.colour, &w.d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{ColouredGraph, BLUE, RED};
    use crate::rational::rat;

    #[test]
    fn connected_pair_with_itself() {
        // Two clusters {0,1}, {2,3} joined completely in red.
        let g = ColouredGraph::two_coloured(4, &[(0, 2, RED), (0, 3, RED), (1, 2, RED), (1, 3, RED)]).unwrap();
        let clusters = vec![vec![0, 1], vec![2, 3]];
        let h = [0, 1];
        let w = admits_bridges(&g, &clusters, &h, &h, RED, &rat(1, 2)).unwrap();
        assert!(check_bridge(&g, &clusters, &h, &h, &w));
    }

    #[test]
    fn no_edges_of_colour() {
        let g = ColouredGraph::two_coloured(4, &[(0, 2, RED), (1, 3, RED)]).unwrap();
        let clusters = vec![vec![0, 1], vec![2, 3]];
        assert!(admits_bridges(&g, &clusters, &[0], &[1], BLUE, &rat(1, 2)).is_none());
    }

    #[test]
    fn single_planted_vertex_is_not_enough() {
        // Vertex 4 sees both clusters in blue; nobody else does.
        let g = ColouredGraph::two_coloured(5, &[(4, 0, BLUE), (4, 1, BLUE), (4, 2, BLUE), (4, 3, BLUE)]).unwrap();
        let clusters = vec![vec![0, 1], vec![2, 3]];
        assert!(admits_bridges(&g, &clusters, &[0], &[1], BLUE, &rat(1, 2)).is_none());
        let g = ColouredGraph::two_coloured(
            6,
            &[(4, 0, BLUE), (4, 1, BLUE), (4, 2, BLUE), (4, 3, BLUE), (5, 0, BLUE), (5, 3, BLUE)],
        )
        .unwrap();
        let w = admits_bridges(&g, &clusters, &[0], &[1], BLUE, &rat(1, 2)).unwrap();
        assert_eq!((w.u, w.u2), (4, 5));
    }
}
