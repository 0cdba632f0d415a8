//! Contracting sets: stable sets S of a spanning subgraph h with
//! |N_h(S)| < |S| + γn.

use crate::budget::node_budget;
use crate::error::{Error, Result};
use crate::graph::{is_stable, SimpleGraph};
use crate::rational::Rational;

#[must_use]
pub fn is_contracting(h: &SimpleGraph, set: &[usize], gamma: &Rational) -> bool {
    !set.is_empty()
        && is_stable(h, set)
        && Rational::from_integer(h.set_neighbourhood(set).len() as i64 - set.len() as i64)
            < *gamma * Rational::from_integer(h.n() as i64)
}

struct Enum<'a> {
    rows: &'a [u128],
    n: usize,
    gn: Rational,
    out: Vec<Vec<usize>>,
    min_only: Option<usize>,
    nodes: u64,
    budget: u64,
}

impl Enum<'_> {
    fn hopeless(&self, size: usize, nb: u128, cand: u128) -> bool {
        let reach = size + cand.count_ones() as usize;
        Rational::from_integer(nb.count_ones() as i64 - reach as i64) >= self.gn
    }

    fn run(&mut self, set: &mut Vec<usize>, nb: u128, cand: u128) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::InstanceTooLarge { what: "contracting-set search nodes", size: self.nodes, limit: self.budget });
        }
        if self.hopeless(set.len(), nb, cand) {
            return Ok(());
        }
        let full = self.min_only.map_or(false, |k| set.len() == k);
        if !set.is_empty() && (self.min_only.is_none() || full) {
            let deficit = Rational::from_integer(nb.count_ones() as i64 - set.len() as i64);
            if deficit < self.gn {
                self.out.push(set.clone());
            }
        }
        if full {
            return Ok(());
        }
        let mut rest = cand;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            set.push(v);
            let higher = if v + 1 >= 128 { 0 } else { !((1u128 << (v + 1)) - 1) };
            self.run(set, nb | self.rows[v], cand & higher & !self.rows[v])?;
            set.pop();
        }
        Ok(())
    }
}

fn rows(h: &SimpleGraph) -> Result<Vec<u128>> {
    h.masks128().ok_or(Error::InstanceTooLarge { what: "vertex count", size: h.n() as u64, limit: 128 })
}

/// All contracting sets, each as a sorted vertex list, in lexicographic
/// DFS order. Branches that cannot reach a contracting set are cut.
pub fn contracting_sets(h: &SimpleGraph, gamma: &Rational) -> Result<Vec<Vec<usize>>> {
    let rows = rows(h)?;
    let n = h.n();
    let all = if n == 128 { u128::MAX } else { (1u128 << n) - 1 };
    let mut e = Enum { rows: &rows, n, gn: *gamma * Rational::from_integer(n as i64), out: Vec::new(), min_only: None, nodes: 0, budget: node_budget() };
    e.run(&mut Vec::new(), 0, all)?;
    debug_assert!(e.n == n);
    Ok(e.out)
}

/// Contracting sets ordered by size, then lexicographically.
pub fn contracting_sets_by_size(h: &SimpleGraph, gamma: &Rational) -> Result<Vec<Vec<usize>>> {
    let mut v = contracting_sets(h, gamma)?;
    v.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(v)
}

/// The lexicographically first contracting set of minimum size, searched
/// size by size.
pub fn minimum_contracting_set(h: &SimpleGraph, gamma: &Rational) -> Result<Option<Vec<usize>>> {
    let rows = rows(h)?;
    let n = h.n();
    let all = if n == 128 { u128::MAX } else { (1u128 << n) - 1 };
    let gn = *gamma * Rational::from_integer(n as i64);
    let mut nodes = 0;
    for k in 1..=n {
        let mut e = Enum { rows: &rows, n, gn, out: Vec::new(), min_only: Some(k), nodes, budget: node_budget() };
        e.run(&mut Vec::new(), 0, all)?;
        nodes = e.nodes;
        if let Some(first) = e.out.into_iter().next() {
            return Ok(Some(first));
        }
    }
    Ok(None)
}
