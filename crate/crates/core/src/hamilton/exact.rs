//! Bitmask DP over (subset, endpoint) states.

use crate::error::{Error, Result};
use crate::graph::{Colour, EdgeColouring, SimpleGraph};

pub const DEFAULT_EXACT_MAX_N: usize = 20;

fn guard(n: usize) -> Result<()> {
    if n > DEFAULT_EXACT_MAX_N {
        return Err(Error::InstanceTooLarge { what: "vertices for exact Hamilton DP", size: n as u64, limit: DEFAULT_EXACT_MAX_N as u64 });
    }
    Ok(())
}

/// reach[mask]: vertices v such that some path from `s` visits exactly
/// `mask` and ends at v.
fn reach_table(adj: &[u32], n: usize, s: usize, avoid_last: Option<usize>) -> Vec<u32> {
    let full = (1usize << n) - 1;
    let mut reach = vec![0u32; 1 << n];
    reach[1 << s] = 1 << s;
    for mask in 0..=full {
        let r = reach[mask];
        if r == 0 {
            continue;
        }
        let mut it = r;
        while it != 0 {
            let v = it.trailing_zeros() as usize;
            it &= it - 1;
            let mut ext = adj[v] & !(mask as u32);
            if let Some(t) = avoid_last {
                if mask | (1 << t) != full {
                    ext &= !(1u32 << t);
                }
            }
            while ext != 0 {
                let u = ext.trailing_zeros();
                ext &= ext - 1;
                reach[mask | (1 << u)] |= 1 << u;
            }
        }
    }
    reach
}

fn unwind(reach: &[u32], adj: &[u32], mut mask: usize, mut v: usize) -> Vec<usize> {
    let mut rev = vec![v];
    while mask.count_ones() > 1 {
        let rest = mask & !(1 << v);
        let u = (reach[rest] & adj[v]).trailing_zeros() as usize;
        rev.push(u);
        mask = rest;
        v = u;
    }
    rev.reverse();
    rev
}

/// A Hamilton cycle, or `None` if there is none. One vertex or a single
/// edge counts as a cycle; the empty graph has the empty cycle.
pub fn hamilton_cycle_exact(g: &SimpleGraph) -> Result<Option<Vec<usize>>> {
    let n = g.n();
    guard(n)?;
    match n {
        0 => return Ok(Some(vec![])),
        1 => return Ok(Some(vec![0])),
        2 => return Ok(g.has_edge(0, 1).then(|| vec![0, 1])),
        _ => {}
    }
    let adj = g.masks32().expect("n ≤ 20");
    let reach = reach_table(&adj, n, 0, None);
    let full = (1usize << n) - 1;
    let ends = reach[full] & adj[0];
    if ends == 0 {
        return Ok(None);
    }
    Ok(Some(unwind(&reach, &adj, full, ends.trailing_zeros() as usize)))
}

/// Hamilton cycle in the colour-`c` subgraph, or in the underlying graph.
pub fn hamilton_cycle_exact_coloured(g: &EdgeColouring, colour: Option<Colour>) -> Result<Option<Vec<usize>>> {
    match colour {
        Some(c) => hamilton_cycle_exact(&g.colour_graph(c)),
        None => hamilton_cycle_exact(&g.underlying()),
    }
}

/// Hamilton s,t-path, or `None` if there is none.
pub fn hamilton_path_exact(g: &SimpleGraph, s: usize, t: usize) -> Result<Option<Vec<usize>>> {
    let n = g.n();
    guard(n)?;
    if s >= n || t >= n {
        return Err(Error::PreconditionViolated("endpoint out of range".into()));
    }
    if s == t {
        return Ok((n == 1).then(|| vec![s]));
    }
    let adj = g.masks32().expect("n ≤ 20");
    let reach = reach_table(&adj, n, s, Some(t));
    let full = (1usize << n) - 1;
    if reach[full] >> t & 1 == 0 {
        return Ok(None);
    }
    Ok(Some(unwind(&reach, &adj, full, t)))
}
