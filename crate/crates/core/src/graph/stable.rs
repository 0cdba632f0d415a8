use fixedbitset::FixedBitSet;

use super::SimpleGraph;

#[must_use]
pub fn is_stable(g: &SimpleGraph, set: &[usize]) -> bool {
    set.iter().enumerate().all(|(i, &u)| set[i + 1..].iter().all(|&v| !g.has_edge(u, v)))
}

/// Enumerates every stable set of size at most `max_size`, starting with
/// the empty set, in depth-first lexicographic order.
#[must_use]
pub fn stable_sets(g: &SimpleGraph, max_size: usize) -> StableSets {
    let n = g.n();
    let mut all = FixedBitSet::with_capacity(n);
    all.insert_range(..);
    StableSets { rows: g.bit_rows(), max_size, stack: vec![(Vec::new(), all, 0)], pending_root: true }
}

pub struct StableSets {
    rows: Vec<FixedBitSet>,
    max_size: usize,
    /// (chosen set, candidates, next candidate index to try)
    stack: Vec<(Vec<usize>, FixedBitSet, usize)>,
    pending_root: bool,
}

impl Iterator for StableSets {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.pending_root {
            self.pending_root = false;
            return Some(Vec::new());
        }
        loop {
            let (chosen, cand, cursor) = self.stack.last_mut()?;
            if chosen.len() >= self.max_size {
                self.stack.pop();
                continue;
            }
            let Some(v) = cand.ones().find(|&v| v >= *cursor) else {
                self.stack.pop();
                continue;
            };
            *cursor = v + 1;
            let mut next_cand = cand.clone();
            next_cand.set_range(..v + 1, false);
            next_cand.difference_with(&self.rows[v]);
            let mut next = chosen.clone();
            next.push(v);
            self.stack.push((next.clone(), next_cand, 0));
            return Some(next);
        }
    }
}

/// A maximum stable set, by branch and bound on candidate counts.
#[must_use]
pub fn maximum_stable_set(g: &SimpleGraph) -> Vec<usize> {
    fn go(rows: &[FixedBitSet], chosen: &mut Vec<usize>, cand: FixedBitSet, best: &mut Vec<usize>) {
        if chosen.len() > best.len() {
            *best = chosen.clone();
        }
        if chosen.len() + cand.count_ones(..) <= best.len() {
            return;
        }
        let mut cand = cand;
        while let Some(v) = cand.ones().next() {
            if chosen.len() + cand.count_ones(..) <= best.len() {
                return;
            }
            cand.set(v, false);
            let mut next = cand.clone();
            next.difference_with(&rows[v]);
            chosen.push(v);
            go(rows, chosen, next, best);
            chosen.pop();
        }
    }
    let n = g.n();
    let rows = g.bit_rows();
    let mut all = FixedBitSet::with_capacity(n);
    all.insert_range(..);
    let mut best = Vec::new();
    go(&rows, &mut Vec::new(), all, &mut best);
    best
}

#[must_use]
pub fn independence_number(g: &SimpleGraph) -> usize {
    maximum_stable_set(g).len()
}
