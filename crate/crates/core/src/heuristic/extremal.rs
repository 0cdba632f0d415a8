//! Direct three-cycle constructions for the two extremal colourings, with
//! each vertex its own cluster.

use super::paths::cycle_of_order;
use super::{hamiltonise, CycleSearch};
use crate::error::Result;
use crate::exact_partition::{CyclePart, CyclePartitionCertificate};
use crate::graph::{membership, Colour, EdgeColouring, BLUE, RED};
use crate::hamilton::{two_set_hamilton_path, LemmaMode, TwoSetInstance};
use crate::rational::Rational;
use crate::structure::{BipartiteWitness, FourCycleWitness};

fn other(c: Colour) -> Colour {
    if c == RED {
        BLUE
    } else {
        RED
    }
}

fn minus(set: &[usize], drop: &[usize]) -> Vec<usize> {
    set.iter().copied().filter(|v| !drop.contains(v)).collect()
}

/// Candidate cycles of order `k` inside `set`, one per start vertex, in the
/// order given by `starts`.
fn cycles_of_order(
    g: &EdgeColouring,
    c: Colour,
    set: &[usize],
    k: usize,
    starts: &[usize],
    limit: usize,
    steps: &mut u64,
) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out: Vec<Vec<usize>> = Vec::new();
    for &s in starts {
        if out.len() >= limit || *steps == 0 {
            break;
        }
        if let Some(mut cyc) = cycle_of_order(g, c, set, k, Some(s), steps) {
            let mut key = cyc.clone();
            key.sort_unstable();
            if !out.iter().any(|o| {
                let mut ok = o.clone();
                ok.sort_unstable();
                ok == key
            }) {
                out.push(std::mem::take(&mut cyc));
            }
        }
    }
    out
}

/// Spanning bipartite component of colour c with classes X ⊇ Y in size.
/// A short other-colour cycle C2 inside X of order 2⌊(|X|−|Y|)/2⌋, a
/// single vertex C3 for odd difference, and a Hamilton cycle C1 of colour
/// c on the balanced rest.
pub(crate) fn bipartite_case(g: &EdgeColouring, w: &BipartiteWitness, search: &mut CycleSearch) -> Result<Option<CyclePartitionCertificate>> {
    let c = w.spanning_colour;
    let oc = other(c);
    let (big, small) = if w.x1.len() >= w.x2.len() { (&w.x1, &w.x2) } else { (&w.x2, &w.x1) };
    let d = big.len() - small.len();
    let k = 2 * (d / 2);
    // Vertices with few colour-c neighbours in Y are the ones to take out.
    let in_small = membership(g.n(), small);
    let mut order = big.clone();
    order.sort_by_key(|&v| (g.colour_neighbours(v, c).iter().filter(|&&u| in_small[u]).count(), v));
    let c2s = cycles_of_order(g, oc, big, k, &order, 12, &mut search.steps);
    for c2 in c2s {
        let rest = minus(big, &c2);
        let singles: Vec<Option<usize>> =
            if d % 2 == 1 { order.iter().copied().filter(|v| rest.contains(v)).take(6).map(Some).collect() } else { vec![None] };
        for single in singles {
            let rest_big = match single {
                Some(v) => minus(&rest, &[v]),
                None => rest.clone(),
            };
            let mut h: Vec<usize> = rest_big.iter().chain(small.iter()).copied().collect();
            h.sort_unstable();
            if let Some(c1) = hamiltonise(g, c, &h, search)? {
                return Ok(Some(CyclePartitionCertificate {
                    parts: vec![
                        CyclePart { colour: c, cycle: c1 },
                        CyclePart { colour: oc, cycle: c2.clone() },
                        CyclePart { colour: oc, cycle: single.into_iter().collect() },
                    ],
                }));
            }
            if search.steps == 0 {
                return Ok(None);
            }
        }
    }
    Ok(None)
}

/// A Hamilton cycle of colour c on `a ∪ b`, where `a` is dense inside and
/// `b` mostly attaches to `a`: rotation search first, then a two-set path
/// closed by an edge inside `a`.
fn two_part_cycle(g: &EdgeColouring, c: Colour, a: &[usize], b: &[usize], search: &mut CycleSearch) -> Result<Option<Vec<usize>>> {
    let mut all: Vec<usize> = a.iter().chain(b).copied().collect();
    all.sort_unstable();
    if let Some(cyc) = hamiltonise(g, c, &all, search)? {
        return Ok(Some(cyc));
    }
    if a.len() < b.len() + 1 || a.len() < 2 {
        return Ok(None);
    }
    let h = g.colour_graph(c).induced(&all);
    let local = |v: usize| all.binary_search(&v).expect("member");
    let la: Vec<usize> = a.iter().map(|&v| local(v)).collect();
    let lb: Vec<usize> = b.iter().map(|&v| local(v)).collect();
    let in_la = membership(h.n(), &la);
    let inner = |v: usize| h.neighbours(v).iter().filter(|&&u| in_la[u]).count();
    let a_prime: Vec<usize> = la.iter().copied().filter(|&v| 4 * inner(v) < la.len()).collect();
    for &u in &la {
        if a_prime.contains(&u) {
            continue;
        }
        for &u2 in h.neighbours(u) {
            if u2 <= u || !in_la[u2] || a_prime.contains(&u2) {
                continue;
            }
            let inst = TwoSetInstance { h: &h, a: &la, b: &lb, a_prime: &a_prime, u, u2, mu: Rational::new(1, 20) };
            if let Ok(path) = two_set_hamilton_path(&inst, LemmaMode::Relaxed) {
                return Ok(Some(path.into_iter().map(|v| all[v]).collect()));
            }
            search.spend(all.len() as u64);
            if search.steps == 0 {
                return Ok(None);
            }
        }
    }
    Ok(None)
}

/// Blocks I_ij with diagonal blocks dense in the diagonal colour dc. The
/// dc-component on I_jj ∪ I_{1−j,j} needs |I_jj| ≥ |I_{1−j,j}|; an excess
/// in I_{1−j,j} is removed by one other-colour cycle inside that block.
pub(crate) fn four_cycle_case(g: &EdgeColouring, w: &FourCycleWitness, search: &mut CycleSearch) -> Result<Option<CyclePartitionCertificate>> {
    let dc = w.diagonal_colour;
    let oc = other(dc);
    let blk = &w.blocks;
    let excess = |j: usize| blk[1 - j][j].len() as i64 - blk[j][j].len() as i64;
    let (e0, e1) = (excess(0), excess(1));
    // Which off-diagonal block hosts the other-colour cycle, and its
    // smallest admissible order.
    let plans: Vec<(usize, usize)> = match (e0 > 0, e1 > 0) {
        (false, false) => vec![(0, 0), (1, 0)],
        (true, false) => vec![(0, e0 as usize)],
        (false, true) => vec![(1, e1 as usize)],
        (true, true) => return Ok(None),
    };
    for (j, need) in plans {
        let host = &blk[1 - j][j];
        // Prefer removing vertices with few dc-neighbours in I_jj.
        let in_diag = membership(g.n(), &blk[j][j]);
        let mut order = host.clone();
        order.sort_by_key(|&v| (g.colour_neighbours(v, dc).iter().filter(|&&u| in_diag[u]).count(), v));
        for k in need..=host.len().min(need + 3) {
            for cr in cycles_of_order(g, oc, host, k, &order, 6, &mut search.steps) {
                let mut blues = Vec::new();
                for jj in 0..2 {
                    let a = minus(&blk[jj][jj], &cr);
                    let b = minus(&blk[1 - jj][jj], &cr);
                    match two_part_cycle(g, dc, &a, &b, search)? {
                        Some(cyc) => blues.push(cyc),
                        None => break,
                    }
                }
                if blues.len() == 2 {
                    let mut parts = vec![CyclePart { colour: oc, cycle: cr }];
                    parts.extend(blues.into_iter().map(|cycle| CyclePart { colour: dc, cycle }));
                    return Ok(Some(CyclePartitionCertificate { parts }));
                }
                if search.steps == 0 {
                    return Ok(None);
                }
            }
        }
    }
    Ok(None)
}
