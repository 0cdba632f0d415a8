//! Short monochromatic paths and cycles of prescribed order.

use crate::budget::step_budget;
use crate::graph::{membership, Colour, EdgeColouring};

/// A colour-`colour` path on exactly `ell` vertices from X to Y avoiding
/// `avoid`, by depth-bounded search. `None` also when the step budget runs
/// out.
#[must_use]
pub fn connect_short_path(
    g: &EdgeColouring,
    colour: Colour,
    x: &[usize],
    y: &[usize],
    avoid: &[usize],
    ell: usize,
) -> Option<Vec<usize>> {
    let mut steps = step_budget();
    connect_short_path_budgeted(g, colour, x, y, avoid, ell, &mut steps)
}

pub(crate) fn connect_short_path_budgeted(
    g: &EdgeColouring,
    colour: Colour,
    x: &[usize],
    y: &[usize],
    avoid: &[usize],
    ell: usize,
    steps: &mut u64,
) -> Option<Vec<usize>> {
    let n = g.n();
    if ell == 0 {
        return None;
    }
    let in_range = |s: &[usize]| s.iter().copied().filter(|&v| v < n).collect::<Vec<_>>();
    let blocked = membership(n, &in_range(avoid));
    let target = membership(n, &in_range(y));
    let mut starts = in_range(x);
    starts.sort_unstable();
    starts.dedup();
    let mut on = vec![false; n];
    let mut path = Vec::with_capacity(ell);
    for s in starts {
        if blocked[s] {
            continue;
        }
        path.push(s);
        on[s] = true;
        if extend(g, colour, &target, &blocked, &mut on, &mut path, ell, steps) {
            return Some(path);
        }
        on[s] = false;
        path.pop();
    }
    None
}

#[allow(clippy::too_many_arguments)]
fn extend(
    g: &EdgeColouring,
    c: Colour,
    target: &[bool],
    blocked: &[bool],
    on: &mut [bool],
    path: &mut Vec<usize>,
    ell: usize,
    steps: &mut u64,
) -> bool {
    let last = *path.last().expect("non-empty");
    if path.len() == ell {
        return target[last];
    }
    if *steps == 0 {
        return false;
    }
    *steps -= 1;
    for &u in g.colour_neighbours(last, c) {
        if on[u] || blocked[u] || (path.len() + 1 == ell && !target[u]) {
            continue;
        }
        on[u] = true;
        path.push(u);
        if extend(g, c, target, blocked, on, path, ell, steps) {
            return true;
        }
        path.pop();
        on[u] = false;
    }
    false
}

/// A colour-`c` cycle on exactly `k` vertices of `set` through `start`
/// (any start when `None`). Orders 1 and 2 give a vertex and an edge.
pub(crate) fn cycle_of_order(
    g: &EdgeColouring,
    c: Colour,
    set: &[usize],
    k: usize,
    start: Option<usize>,
    steps: &mut u64,
) -> Option<Vec<usize>> {
    let n = g.n();
    let inside = membership(n, set);
    let outside: Vec<usize> = (0..n).filter(|&v| !inside[v]).collect();
    let starts: Vec<usize> = match start {
        Some(s) if inside[s] => vec![s],
        Some(_) => return None,
        None => set.to_vec(),
    };
    if k == 0 {
        return Some(Vec::new());
    }
    if k > set.len() {
        return None;
    }
    for s in starts {
        match k {
            1 => return Some(vec![s]),
            2 => {
                if let Some(&u) = g.colour_neighbours(s, c).iter().find(|&&u| inside[u]) {
                    return Some(vec![s, u]);
                }
            }
            _ => {
                let ends: Vec<usize> = g.colour_neighbours(s, c).iter().copied().filter(|&u| inside[u]).collect();
                if ends.len() < 2 {
                    continue;
                }
                if let Some(p) = connect_short_path_budgeted(g, c, &[s], &ends, &outside, k, steps) {
                    return Some(p);
                }
            }
        }
        if *steps == 0 {
            break;
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{ColouredGraph, BLUE, RED};

    #[test]
    fn single_vertex_path() {
        let g = ColouredGraph::complete_with(4, 2, |_, _| RED).unwrap();
        assert_eq!(connect_short_path(&g, RED, &[2], &[2], &[], 1), Some(vec![2]));
        assert_eq!(connect_short_path(&g, RED, &[2], &[3], &[], 1), None);
    }

    #[test]
    fn complete_red_any_order() {
        let n = 7;
        let g = ColouredGraph::complete_with(n, 2, |_, _| RED).unwrap();
        for ell in 2..=n {
            let p = connect_short_path(&g, RED, &[0], &[1], &[], ell).unwrap();
            assert_eq!(p.len(), ell);
            assert_eq!((p[0], p[ell - 1]), (0, 1));
            assert!(p.windows(2).all(|w| g.has_edge(w[0], w[1], RED)));
        }
        assert_eq!(connect_short_path(&g, BLUE, &[0], &[1], &[], 2), None);
        assert_eq!(connect_short_path(&g, RED, &[0], &[1], &[2, 3, 4, 5, 6], 3), None);
    }

    #[test]
    fn cycle_orders_in_red_clique() {
        let g = ColouredGraph::complete_with(6, 2, |u, v| if u < 4 && v < 4 { RED } else { BLUE }).unwrap();
        let mut steps = 10_000;
        let set = [0, 1, 2, 3];
        for k in 0..=4 {
            let c = cycle_of_order(&g, RED, &set, k, None, &mut steps).unwrap();
            assert_eq!(c.len(), k);
            if k >= 3 {
                assert!(g.has_edge(c[0], c[k - 1], RED));
            }
        }
        assert_eq!(cycle_of_order(&g, RED, &set, 5, None, &mut steps), None);
    }
}
