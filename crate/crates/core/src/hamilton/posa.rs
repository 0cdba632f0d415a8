//! Covering a graph with at most α(g) vertex-disjoint cycles.
//!
//! Repeatedly build a path whose end x has all its neighbours on the path,
//! cut off the cycle from x's earliest neighbour to x, and delete it. Any
//! stable set of what is left extends by x, so each cut lowers α by one.

use crate::exact_partition::{min_mono_cycle_partition, PartitionResult};
use crate::graph::{ColouredGraph, SimpleGraph, RED};

const EXACT_RESIDUAL: usize = 10;

/// Vertex-disjoint cycles covering V(g), at most α(g) of them; single
/// vertices and edges count as cycles.
#[must_use]
pub fn posa_cycle_cover(g: &SimpleGraph) -> Vec<Vec<usize>> {
    let mut alive: Vec<usize> = (0..g.n()).collect();
    let mut cover = Vec::new();
    while !alive.is_empty() {
        let sub = g.induced(&alive);
        if sub.n() <= EXACT_RESIDUAL {
            for c in exact_cover(&sub) {
                cover.push(c.into_iter().map(|v| alive[v]).collect());
            }
            break;
        }
        let cycle = cut_cycle(&sub);
        let mut gone = vec![false; sub.n()];
        for &v in &cycle {
            gone[v] = true;
        }
        cover.push(cycle.iter().map(|&v| alive[v]).collect());
        alive = alive.iter().enumerate().filter(|(i, _)| !gone[*i]).map(|(_, &v)| v).collect();
    }
    cover
}

fn exact_cover(g: &SimpleGraph) -> Vec<Vec<usize>> {
    let edges: Vec<_> = g.edges().map(|(u, v)| (u, v, RED)).collect();
    let cg = ColouredGraph::new(g.n(), crate::graph::default_palette(1), &edges).expect("valid");
    match min_mono_cycle_partition(&cg, g.n()).expect("small residual") {
        PartitionResult::Sat { certificate, .. } => certificate.parts.into_iter().map(|p| p.cycle).collect(),
        PartitionResult::Unsat { .. } => unreachable!("singletons always cover"),
    }
}

/// A cycle containing some vertex x together with all of N(x).
fn cut_cycle(g: &SimpleGraph) -> Vec<usize> {
    const OFF: usize = usize::MAX;
    let n = g.n();
    let mut path = vec![0usize];
    let mut pos = vec![OFF; n];
    pos[0] = 0;
    let mut rotations = 0usize;
    loop {
        let end = *path.last().expect("non-empty");
        if let Some(&u) = g.neighbours(end).iter().find(|&&u| pos[u] == OFF) {
            pos[u] = path.len();
            path.push(u);
            continue;
        }
        // Stuck: look for a rotation whose new end can extend.
        let last = path.len() - 1;
        let pivot = (rotations < n)
            .then(|| {
                g.neighbours(end)
                    .iter()
                    .map(|&y| pos[y])
                    .filter(|&i| i + 1 < last)
                    .find(|&i| g.neighbours(path[i + 1]).iter().any(|&u| pos[u] == OFF))
            })
            .flatten();
        if let Some(i) = pivot {
            rotations += 1;
            path[i + 1..].reverse();
            for (j, &v) in path.iter().enumerate().skip(i + 1) {
                pos[v] = j;
            }
            continue;
        }
        // Every rotated end also has all neighbours on the path; keep the
        // longest resulting cycle.
        let span = |x: usize, path: &[usize], pos: &[usize]| -> usize {
            let first = g.neighbours(x).iter().map(|&y| pos[y]).min().unwrap_or(path.len() - 1);
            path.len() - first
        };
        let mut best = (span(end, &path, &pos), None);
        for &y in g.neighbours(end) {
            let i = pos[y];
            if i + 1 < last {
                let mut alt = path.clone();
                alt[i + 1..].reverse();
                let mut apos = pos.clone();
                for (j, &v) in alt.iter().enumerate().skip(i + 1) {
                    apos[v] = j;
                }
                let len = span(*alt.last().expect("non-empty"), &alt, &apos);
                if len > best.0 {
                    best = (len, Some(i));
                }
            }
        }
        if let (_, Some(i)) = best {
            path[i + 1..].reverse();
        }
        let keep = best.0;
        return path[path.len() - keep..].to_vec();
    }
}
