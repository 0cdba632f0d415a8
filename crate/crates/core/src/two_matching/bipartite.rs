//! Hopcroft–Karp maximum matching and König reachability.

const INF: usize = usize::MAX;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteMatching {
    pub mate_left: Vec<Option<usize>>,
    pub mate_right: Vec<Option<usize>>,
}

impl BipartiteMatching {
    #[must_use]
    pub fn size(&self) -> usize {
        self.mate_left.iter().filter(|m| m.is_some()).count()
    }

    #[must_use]
    pub fn is_left_perfect(&self) -> bool {
        self.mate_left.iter().all(Option::is_some)
    }

    /// Vertices reachable from unmatched left vertices by alternating
    /// paths. `(L \ Z) ∪ (R ∩ Z)` is then a minimum vertex cover.
    #[must_use]
    pub fn alternating_reach(&self, adj: &[Vec<usize>]) -> (Vec<bool>, Vec<bool>) {
        let mut left = vec![false; self.mate_left.len()];
        let mut right = vec![false; self.mate_right.len()];
        let mut queue: Vec<usize> = (0..left.len()).filter(|&u| self.mate_left[u].is_none()).collect();
        for &u in &queue {
            left[u] = true;
        }
        let mut i = 0;
        while i < queue.len() {
            let u = queue[i];
            i += 1;
            for &v in &adj[u] {
                if right[v] {
                    continue;
                }
                right[v] = true;
                if let Some(w) = self.mate_right[v] {
                    if !left[w] {
                        left[w] = true;
                        queue.push(w);
                    }
                }
            }
        }
        (left, right)
    }
}

/// Maximum matching of the bipartite graph with `adj[u]` listing the right
/// neighbours of left vertex `u`.
#[must_use]
pub fn hopcroft_karp(n_left: usize, n_right: usize, adj: &[Vec<usize>]) -> BipartiteMatching {
    let mut mate_left = vec![None; n_left];
    let mut mate_right: Vec<Option<usize>> = vec![None; n_right];
    let mut dist = vec![INF; n_left];
    let mut it = vec![0usize; n_left];
    loop {
        // BFS layering from the free left vertices.
        let mut queue = Vec::new();
        for u in 0..n_left {
            if mate_left[u].is_none() {
                dist[u] = 0;
                queue.push(u);
            } else {
                dist[u] = INF;
            }
        }
        let mut free_layer = INF;
        let mut i = 0;
        while i < queue.len() {
            let u = queue[i];
            i += 1;
            if dist[u] >= free_layer {
                continue;
            }
            for &v in &adj[u] {
                match mate_right[v] {
                    None => free_layer = free_layer.min(dist[u] + 1),
                    Some(w) if dist[w] == INF => {
                        dist[w] = dist[u] + 1;
                        queue.push(w);
                    }
                    Some(_) => {}
                }
            }
        }
        if free_layer == INF {
            break;
        }
        it.iter_mut().for_each(|x| *x = 0);
        let mut augmented = false;
        for root in 0..n_left {
            if mate_left[root].is_some() || dist[root] != 0 {
                continue;
            }
            let mut stack = vec![root];
            while let Some(&u) = stack.last() {
                if it[u] == adj[u].len() {
                    dist[u] = INF;
                    stack.pop();
                    continue;
                }
                let v = adj[u][it[u]];
                match mate_right[v] {
                    None if free_layer == dist[u] + 1 => {
                        for &x in &stack {
                            let y = adj[x][it[x]];
                            mate_left[x] = Some(y);
                            mate_right[y] = Some(x);
                        }
                        augmented = true;
                        break;
                    }
                    Some(w) if dist[w] != INF && dist[w] == dist[u] + 1 => stack.push(w),
                    _ => it[u] += 1,
                }
            }
        }
        if !augmented {
            break;
        }
    }
    BipartiteMatching { mate_left, mate_right }
}
