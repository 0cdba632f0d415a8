//! Balancing: non-negative integer edge values t_e on a host graph with
//! prescribed vertex sums t_i, built through a spanning-tree parity layer
//! and a perfect 2-matching of a blown-up host.

use petgraph::graph::UnGraph;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::rational::{format_rational, Rational};
use crate::two_matching::{perfect_2_matching, robust_tutte, tutte_condition, TutteVerdict, TwoMatchingPart};

#[derive(Clone, Debug)]
pub struct BalancingInstance {
    pub host: SimpleGraph,
    pub gamma: Rational,
    pub targets: Vec<u64>,
    /// Reference scale t; the average target when absent.
    pub t: Option<Rational>,
}

impl BalancingInstance {
    #[must_use]
    pub fn new(host: SimpleGraph, gamma: Rational, targets: Vec<u64>) -> Self {
        Self { host, gamma, targets, t: None }
    }

    #[must_use]
    pub fn reference_scale(&self) -> Rational {
        self.t.unwrap_or_else(|| {
            let m = self.targets.len().max(1) as i64;
            Rational::new(self.targets.iter().sum::<u64>() as i64, m)
        })
    }
}

/// Output of the parity step: a DFS tree, the parity layer π and the
/// blow-up sizes n_i = (t_i − Σ_{e∋i} π_e) / 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParityAdjustment {
    pub root: usize,
    /// Tree edges as `(child, parent)`.
    pub tree_edges: Vec<(usize, usize)>,
    /// Host edges `(u, v)`, `u < v`, in the order used by `parity`.
    pub edges: Vec<(usize, usize)>,
    pub parity: Vec<u8>,
    /// n_i; negative when the parity layer overshoots a small target.
    pub shortfall: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BalancingSolution {
    pub edges: Vec<(usize, usize)>,
    pub edge_values: Vec<u64>,
    pub parity_layer: Vec<u8>,
    pub blowup_sizes: Vec<u64>,
    /// Spanning tree carrying the parity layer, as `(child, parent)`.
    pub tree_edges: Vec<(usize, usize)>,
    /// False when the DFS tree from vertex 0 did not work and another
    /// spanning tree was found by the non-strict search.
    pub from_default_tree: bool,
}

#[derive(Serialize, Deserialize)]
struct SolutionJson {
    edge_values: Vec<(usize, usize, u64)>,
    parity_layer: Vec<(usize, usize, u8)>,
    blowup_sizes: Vec<u64>,
    tree_edges: Vec<(usize, usize)>,
    from_default_tree: bool,
}

impl BalancingSolution {
    /// Σ_{e∋i} t_e for every vertex.
    #[must_use]
    pub fn vertex_sums(&self, m: usize) -> Vec<u64> {
        let mut s = vec![0u64; m];
        for (&(u, v), &x) in self.edges.iter().zip(&self.edge_values) {
            s[u] += x;
            s[v] += x;
        }
        s
    }

    #[must_use]
    pub fn to_json_value(&self) -> serde_json::Value {
        let zip3 = |vals: Vec<u64>| -> Vec<(usize, usize, u64)> {
            self.edges.iter().zip(vals).map(|(&(u, v), x)| (u, v, x)).collect()
        };
        let j = SolutionJson {
            edge_values: zip3(self.edge_values.clone()),
            parity_layer: self.edges.iter().zip(&self.parity_layer).map(|(&(u, v), &p)| (u, v, p)).collect(),
            blowup_sizes: self.blowup_sizes.clone(),
            tree_edges: self.tree_edges.clone(),
            from_default_tree: self.from_default_tree,
        };
        serde_json::to_value(j).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let j: SolutionJson = serde_json::from_str(text)?;
        Ok(Self {
            edges: j.edge_values.iter().map(|&(u, v, _)| (u, v)).collect(),
            edge_values: j.edge_values.iter().map(|e| e.2).collect(),
            parity_layer: j.parity_layer.iter().map(|e| e.2).collect(),
            blowup_sizes: j.blowup_sizes,
            tree_edges: j.tree_edges,
            from_default_tree: j.from_default_tree,
        })
    }
}

/// Violating set lifted from the blow-up to the host: a stable host set
/// S whose blow-up weight exceeds that of N(S).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiftedWitness {
    pub stable_set: Vec<usize>,
    pub neighbourhood: Vec<usize>,
    /// Σ_{i∈S} n_i − Σ_{j∈N(S)} n_j.
    pub weight_deficiency: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum Infeasibility {
    /// The parity layer exceeds the target at this vertex.
    ParityOvershoot { vertex: usize },
    /// The blow-up has no perfect 2-matching.
    NoTwoMatching { witness: LiftedWitness },
}

/// Why no spanning tree can work.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "proof", rename_all = "snake_case")]
pub enum InfeasibilityProof {
    /// Every parity layer π_T ⊕ c, c in the cycle space, was tried.
    ExhaustiveParitySearch { layers: u64 },
    /// Removing `set` leaves components K with
    /// t(set) + Σ_K ⌊t(K)/2⌋ < Σ t_i / 2, isolated vertices counting zero;
    /// every solution has at most that many edge units.
    Barrier { set: Vec<usize>, bound: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InfeasibilityReport {
    /// How the DFS tree from vertex 0 failed.
    pub default_tree: Infeasibility,
    pub proof: InfeasibilityProof,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BalanceOutcome {
    Balanced(BalancingSolution),
    Infeasible(InfeasibilityReport),
}

#[derive(Clone, Debug)]
pub struct BalanceOptions {
    pub blowup_vertex_cap: u64,
    pub blowup_edge_cap: u64,
    /// Largest cycle rank for which the non-strict search enumerates all
    /// alternative parity layers.
    pub parity_search_rank: u32,
    /// Random spanning trees tried when the cycle rank is larger.
    pub random_trees: u32,
    /// Largest host for the exhaustive barrier search.
    pub barrier_search_vertices: usize,
}

impl Default for BalanceOptions {
    fn default() -> Self {
        Self {
            blowup_vertex_cap: 100_000,
            blowup_edge_cap: 50_000_000,
            parity_search_rank: 12,
            random_trees: 2_000,
            barrier_search_vertices: 16,
        }
    }
}

fn edge_index(edges: &[(usize, usize)], u: usize, v: usize) -> usize {
    edges.binary_search(&(u.min(v), u.max(v))).expect("host edge")
}

/// DFS spanning tree from `root`, neighbours visited in increasing order.
fn dfs_tree(host: &SimpleGraph, root: usize) -> Result<(Vec<usize>, Vec<Option<usize>>)> {
    dfs_tree_in(host, root, |v| host.neighbours(v).to_vec())
}

fn dfs_tree_in<F: FnMut(usize) -> Vec<usize>>(
    host: &SimpleGraph,
    root: usize,
    mut order_of: F,
) -> Result<(Vec<usize>, Vec<Option<usize>>)> {
    let m = host.n();
    let mut parent = vec![None; m];
    let mut seen = vec![false; m];
    let mut order = Vec::with_capacity(m);
    let mut stack = vec![(root, order_of(root), 0usize)];
    seen[root] = true;
    order.push(root);
    while let Some((v, nbrs, i)) = stack.last_mut() {
        let v = *v;
        while *i < nbrs.len() && seen[nbrs[*i]] {
            *i += 1;
        }
        if *i < nbrs.len() {
            let u = nbrs[*i];
            seen[u] = true;
            parent[u] = Some(v);
            order.push(u);
            let next = order_of(u);
            stack.push((u, next, 0));
        } else {
            stack.pop();
        }
    }
    if order.len() != m {
        return Err(Error::NotConnected);
    }
    Ok((order, parent))
}

fn shortfall(m: usize, edges: &[(usize, usize)], parity: &[u8], targets: &[u64]) -> Vec<i64> {
    let mut deg = vec![0i64; m];
    for (&(u, v), &p) in edges.iter().zip(parity) {
        deg[u] += i64::from(p);
        deg[v] += i64::from(p);
    }
    (0..m)
        .map(|i| {
            let d = targets[i] as i64 - deg[i];
            assert!(d % 2 == 0, "parity layer leaves an odd remainder at vertex {i}");
            d / 2
        })
        .collect()
}

/// π_e = (Σ_{j∈X(e)} t_j) mod 2 on the tree edge e whose lower side is X(e);
/// zero off the tree.
pub fn parity_adjust(host: &SimpleGraph, targets: &[u64], root: usize) -> Result<ParityAdjustment> {
    let m = host.n();
    if targets.len() != m {
        return Err(Error::PreconditionViolated(format!("{} targets for {m} vertices", targets.len())));
    }
    if targets.iter().sum::<u64>() % 2 == 1 {
        return Err(Error::PreconditionViolated("target sum is odd".into()));
    }
    let edges: Vec<(usize, usize)> = host.edges().collect();
    if m == 0 {
        return Ok(ParityAdjustment { root, tree_edges: vec![], edges, parity: vec![], shortfall: vec![] });
    }
    if root >= m {
        return Err(Error::PreconditionViolated(format!("root {root} out of range")));
    }
    let (order, parent) = dfs_tree(host, root)?;
    let (tree_edges, parity) = tree_parity(&edges, &order, &parent, targets);
    let shortfall = shortfall(m, &edges, &parity, targets);
    Ok(ParityAdjustment { root, tree_edges, edges, parity, shortfall })
}

fn tree_parity(
    edges: &[(usize, usize)],
    order: &[usize],
    parent: &[Option<usize>],
    targets: &[u64],
) -> (Vec<(usize, usize)>, Vec<u8>) {
    let m = order.len();
    let mut subtree: Vec<u64> = targets.to_vec();
    for &v in order.iter().rev() {
        if let Some(p) = parent[v] {
            subtree[p] += subtree[v];
        }
    }
    let mut parity = vec![0u8; edges.len()];
    let mut tree_edges = Vec::with_capacity(m - 1);
    for &v in &order[1..] {
        let p = parent[v].expect("non-root");
        tree_edges.push((v, p));
        parity[edge_index(edges, v, p)] = (subtree[v] % 2) as u8;
    }
    (tree_edges, parity)
}

fn check_strict(inst: &BalancingInstance) -> Result<()> {
    let m = inst.host.n();
    let g = inst.gamma;
    let zero = Rational::from_integer(0);
    let mut problems = Vec::new();
    if g <= zero || g > Rational::new(1, 2) {
        problems.push(format!("gamma {} not in (0, 1/2]", format_rational(&g)));
    }
    let t = inst.reference_scale();
    if g > zero && t < Rational::from_integer(5 * m as i64) / g {
        problems.push(format!("t = {} below 5m/gamma", format_rational(&t)));
    }
    let lo = t * (Rational::from_integer(1) - g / 5);
    let hi = t * (Rational::from_integer(1) + g / 5);
    for (i, &ti) in inst.targets.iter().enumerate() {
        let x = Rational::from_integer(ti as i64);
        if x < lo || x > hi {
            problems.push(format!("target t_{i} = {ti} outside (1 ± gamma/5)t"));
        }
    }
    if problems.is_empty() && g > zero {
        if let TutteVerdict::Violated(w) = robust_tutte(&inst.host, &g)? {
            problems.push(format!("host is not gamma-robust Tutte: S = {:?}", w.stable_set));
        }
    }
    if problems.is_empty() {
        Ok(())
    } else {
        Err(Error::PreconditionViolated(problems.join("; ")))
    }
}

enum Attempt {
    Done(BalancingSolution),
    Overshoot(usize),
    NoMatching(LiftedWitness),
}

fn attempt(inst: &BalancingInstance, edges: &[(usize, usize)], parity: &[u8], opts: &BalanceOptions) -> Result<Attempt> {
    let m = inst.host.n();
    let n = shortfall(m, edges, parity, &inst.targets);
    if let Some(i) = n.iter().position(|&x| x < 0) {
        return Ok(Attempt::Overshoot(i));
    }
    let sizes: Vec<u64> = n.iter().map(|&x| x as u64).collect();
    let total: u64 = sizes.iter().sum();
    if total > opts.blowup_vertex_cap {
        return Err(Error::BlowupTooLarge { what: "vertices", size: total, cap: opts.blowup_vertex_cap });
    }
    let blow_edges: u64 = edges.iter().map(|&(u, v)| sizes[u] * sizes[v]).sum();
    if blow_edges > opts.blowup_edge_cap {
        return Err(Error::BlowupTooLarge { what: "edges", size: blow_edges, cap: opts.blowup_edge_cap });
    }
    let mut offset = vec![0usize; m + 1];
    for i in 0..m {
        offset[i + 1] = offset[i] + sizes[i] as usize;
    }
    let mut owner = vec![0usize; offset[m]];
    for i in 0..m {
        owner[offset[i]..offset[i + 1]].iter_mut().for_each(|o| *o = i);
    }
    let mut bedges = Vec::with_capacity(blow_edges as usize);
    for &(u, v) in edges {
        for a in offset[u]..offset[u + 1] {
            for b in offset[v]..offset[v + 1] {
                bedges.push((a, b));
            }
        }
    }
    let blown = SimpleGraph::from_edges(offset[m], bedges)?;
    let Some(matching) = perfect_2_matching(&blown) else {
        let TutteVerdict::Violated(w) = tutte_condition(&blown) else {
            return Err(Error::InternalContradiction("matching absent but Tutte condition holds".into()));
        };
        let mut set: Vec<usize> = w.stable_set.iter().map(|&x| owner[x]).collect();
        set.dedup();
        let nb = inst.host.set_neighbourhood(&set);
        let weight = |s: &[usize]| s.iter().map(|&i| sizes[i] as i64).sum::<i64>();
        return Ok(Attempt::NoMatching(LiftedWitness {
            weight_deficiency: weight(&set) - weight(&nb),
            stable_set: set,
            neighbourhood: nb,
        }));
    };
    let mut values: Vec<u64> = parity.iter().map(|&p| u64::from(p)).collect();
    let mut add = |a: usize, b: usize, w: u64| values[edge_index(edges, owner[a], owner[b])] += w;
    for part in &matching.parts {
        match part {
            TwoMatchingPart::Edge(a, b) => add(*a, *b, 2),
            TwoMatchingPart::Cycle(c) => {
                for i in 0..c.len() {
                    add(c[i], c[(i + 1) % c.len()], 1);
                }
            }
        }
    }
    let sol = BalancingSolution {
        edges: edges.to_vec(),
        edge_values: values,
        parity_layer: parity.to_vec(),
        blowup_sizes: sizes,
        tree_edges: Vec::new(),
        from_default_tree: true,
    };
    if sol.vertex_sums(m) != inst.targets {
        return Err(Error::InternalContradiction("vertex sums differ from targets".into()));
    }
    Ok(Attempt::Done(sol))
}

pub fn balance(inst: &BalancingInstance, strict: bool) -> Result<BalanceOutcome> {
    balance_with(inst, strict, &BalanceOptions::default())
}

pub fn balance_with(inst: &BalancingInstance, strict: bool, opts: &BalanceOptions) -> Result<BalanceOutcome> {
    let m = inst.host.n();
    if inst.targets.len() != m {
        return Err(Error::PreconditionViolated(format!("{} targets for {m} vertices", inst.targets.len())));
    }
    if inst.targets.iter().sum::<u64>() % 2 == 1 {
        return Err(Error::PreconditionViolated("target sum is odd".into()));
    }
    if !inst.host.is_connected() {
        return Err(Error::NotConnected);
    }
    if strict {
        check_strict(inst)?;
    }
    let pa = parity_adjust(&inst.host, &inst.targets, 0)?;
    let first = attempt(inst, &pa.edges, &pa.parity, opts)?;
    let failure = match first {
        Attempt::Done(mut sol) => {
            sol.tree_edges = pa.tree_edges;
            return Ok(BalanceOutcome::Balanced(sol));
        }
        Attempt::Overshoot(i) => Infeasibility::ParityOvershoot { vertex: i },
        Attempt::NoMatching(w) => Infeasibility::NoTwoMatching { witness: w },
    };
    if strict {
        return Err(Error::InternalContradiction(format!("strict instance failed to balance: {failure:?}")));
    }
    if let Some(proof) = barrier(inst, opts) {
        return Ok(BalanceOutcome::Infeasible(InfeasibilityReport { default_tree: failure, proof }));
    }
    match search_other_trees(inst, &pa, opts)? {
        Search::Found(sol) => Ok(BalanceOutcome::Balanced(sol)),
        Search::Exhausted(layers) => Ok(BalanceOutcome::Infeasible(InfeasibilityReport {
            default_tree: failure,
            proof: InfeasibilityProof::ExhaustiveParitySearch { layers },
        })),
        Search::GaveUp => Err(Error::ConstructionFailed(format!(
            "no spanning tree found for the parity layer and no infeasibility proof ({failure:?})"
        ))),
    }
}

/// Exhaustive search for a set U whose edge-unit bound
/// t(U) + Σ_K ⌊t(K)/2⌋ over the non-singleton components K of H − U falls
/// below half the target sum.
fn barrier(inst: &BalancingInstance, opts: &BalanceOptions) -> Option<InfeasibilityProof> {
    let m = inst.host.n();
    if m > opts.barrier_search_vertices {
        return None;
    }
    let adj = inst.host.masks32()?;
    let t = &inst.targets;
    let half: u64 = t.iter().sum::<u64>() / 2;
    for u in 0u32..(1 << m) {
        let mut bound: u64 = (0..m).filter(|&i| u >> i & 1 == 1).map(|i| t[i]).sum();
        let mut left = !u & ((1u64 << m) - 1) as u32;
        while left != 0 && bound < half {
            let s = left.trailing_zeros() as usize;
            let mut comp = 1u32 << s;
            let mut frontier = comp;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let new = adj[v] & !u & !comp;
                comp |= new;
                frontier |= new;
            }
            left &= !comp;
            if comp.count_ones() > 1 {
                bound += (0..m).filter(|&i| comp >> i & 1 == 1).map(|i| t[i]).sum::<u64>() / 2;
            }
        }
        if bound < half {
            let set = (0..m).filter(|&i| u >> i & 1 == 1).collect();
            return Some(InfeasibilityProof::Barrier { set, bound });
        }
    }
    None
}

enum Search {
    Found(BalancingSolution),
    Exhausted(u64),
    GaveUp,
}

fn finish(inst: &BalancingInstance, edges: &[(usize, usize)], parity: &[u8], opts: &BalanceOptions) -> Result<Option<BalancingSolution>> {
    let m = inst.host.n();
    let forest = strip_cycles(m, edges, parity);
    if let Attempt::Done(mut sol) = attempt(inst, edges, &forest, opts)? {
        sol.tree_edges = extend_to_tree(m, edges, &forest);
        sol.from_default_tree = false;
        return Ok(Some(sol));
    }
    Ok(None)
}

/// Any solution's odd edges form a T-join (T = odd-target vertices); once
/// its cycles are pushed into the 2-matching part, what remains is a forest
/// and hence the parity layer of some spanning tree. So feasibility is
/// decided by the T-joins π_T ⊕ c, c ranging over the cycle space.
fn search_other_trees(inst: &BalancingInstance, pa: &ParityAdjustment, opts: &BalanceOptions) -> Result<Search> {
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    let m = inst.host.n();
    let edges = &pa.edges;
    for root in 1..m {
        let other = parity_adjust(&inst.host, &inst.targets, root)?;
        if let Some(sol) = finish(inst, edges, &other.parity, opts)? {
            return Ok(Search::Found(sol));
        }
    }
    let mut parent = vec![None; m];
    for &(c, p) in &pa.tree_edges {
        parent[c] = Some(p);
    }
    let mut depth = vec![0usize; m];
    for &(c, _) in &pa.tree_edges {
        let mut d = 0;
        let mut x = c;
        while let Some(p) = parent[x] {
            d += 1;
            x = p;
        }
        depth[c] = d;
    }
    let in_tree: Vec<bool> = {
        let mut t = vec![false; edges.len()];
        for &(c, p) in &pa.tree_edges {
            t[edge_index(edges, c, p)] = true;
        }
        t
    };
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    for (e, &(u, v)) in edges.iter().enumerate() {
        if in_tree[e] {
            continue;
        }
        let mut cyc = vec![e];
        let (mut a, mut b) = (u, v);
        while a != b {
            if depth[a] >= depth[b] {
                let p = parent[a].expect("non-root");
                cyc.push(edge_index(edges, a, p));
                a = p;
            } else {
                let p = parent[b].expect("non-root");
                cyc.push(edge_index(edges, b, p));
                b = p;
            }
        }
        cycles.push(cyc);
    }
    let rank = cycles.len() as u32;
    if rank <= opts.parity_search_rank {
        let mut parity = pa.parity.clone();
        let mut tried = std::collections::HashSet::new();
        for step in 1u64..(1u64 << rank) {
            for &e in &cycles[step.trailing_zeros() as usize] {
                parity[e] ^= 1;
            }
            let forest = strip_cycles(m, edges, &parity);
            if tried.insert(forest.clone()) {
                if let Some(sol) = finish(inst, edges, &forest, opts)? {
                    return Ok(Search::Found(sol));
                }
            }
        }
        return Ok(Search::Exhausted(1u64 << rank));
    }
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x7ee5);
    for _ in 0..opts.random_trees {
        let root = rand::Rng::gen_range(&mut rng, 0..m);
        let (order, parent) = dfs_tree_in(&inst.host, root, |v| {
            let mut nb = inst.host.neighbours(v).to_vec();
            nb.shuffle(&mut rng);
            nb
        })?;
        let (_, parity) = tree_parity(edges, &order, &parent, &inst.targets);
        if let Some(sol) = finish(inst, edges, &parity, opts)? {
            return Ok(Search::Found(sol));
        }
    }
    Ok(Search::GaveUp)
}

/// Removes cycles from the edge set {e : parity[e] = 1} until it is a
/// forest; the parities at each vertex are unchanged.
fn strip_cycles(m: usize, edges: &[(usize, usize)], parity: &[u8]) -> Vec<u8> {
    let mut p = parity.to_vec();
    loop {
        let sub = SimpleGraph::from_edges(m, edges.iter().zip(&p).filter(|x| *x.1 == 1).map(|x| *x.0)).expect("host");
        let Some(cycle) = find_cycle(&sub) else { return p };
        for i in 0..cycle.len() {
            p[edge_index(edges, cycle[i], cycle[(i + 1) % cycle.len()])] = 0;
        }
    }
}

fn find_cycle(g: &SimpleGraph) -> Option<Vec<usize>> {
    let n = g.n();
    let mut parent = vec![usize::MAX; n];
    let mut state = vec![0u8; n];
    for s in 0..n {
        if state[s] != 0 {
            continue;
        }
        let mut stack = vec![(s, usize::MAX, 0usize)];
        state[s] = 1;
        while let Some(&mut (v, from, ref mut i)) = stack.last_mut() {
            if *i == g.degree(v) {
                state[v] = 2;
                stack.pop();
                continue;
            }
            let u = g.neighbours(v)[*i];
            *i += 1;
            if u == from {
                continue;
            }
            if state[u] == 1 {
                let mut cyc = vec![v];
                let mut x = v;
                while x != u {
                    x = parent[x];
                    cyc.push(x);
                }
                return Some(cyc);
            }
            if state[u] == 0 {
                state[u] = 1;
                parent[u] = v;
                stack.push((u, v, 0));
            }
        }
    }
    None
}

/// A spanning tree containing the forest, as `(child, parent)` from root 0.
fn extend_to_tree(m: usize, edges: &[(usize, usize)], forest: &[u8]) -> Vec<(usize, usize)> {
    let mut uf: Vec<usize> = (0..m).collect();
    fn find(uf: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while uf[r] != r {
            r = uf[r];
        }
        let mut y = x;
        while uf[y] != r {
            let nx = uf[y];
            uf[y] = r;
            y = nx;
        }
        r
    }
    let mut chosen = Vec::new();
    let order = edges.iter().zip(forest).filter(|x| *x.1 == 1).chain(edges.iter().zip(forest).filter(|x| *x.1 == 0));
    for (&(u, v), _) in order {
        let (a, b) = (find(&mut uf, u), find(&mut uf, v));
        if a != b {
            uf[a] = b;
            chosen.push((u, v));
        }
    }
    let tree = SimpleGraph::from_edges(m, chosen).expect("host edges");
    let (order, parent) = dfs_tree(&tree, 0).expect("spanning");
    order[1..].iter().map(|&v| (v, parent[v].expect("non-root"))).collect()
}

/// Independent feasibility check: a perfect b-matching of the host with
/// b = targets exists iff the graph with t_i copies of each vertex i, and
/// all copy pairs of every host edge joined, has a perfect matching
/// (decided with a blossom algorithm).
#[must_use]
pub fn balance_oracle(inst: &BalancingInstance) -> bool {
    let total: u64 = inst.targets.iter().sum();
    if total % 2 == 1 {
        return false;
    }
    let m = inst.host.n();
    let mut offset = vec![0usize; m + 1];
    for i in 0..m {
        offset[i + 1] = offset[i] + inst.targets[i] as usize;
    }
    let mut g = UnGraph::<(), ()>::with_capacity(offset[m], 0);
    let nodes: Vec<_> = (0..offset[m]).map(|_| g.add_node(())).collect();
    for (u, v) in inst.host.edges() {
        for a in offset[u]..offset[u + 1] {
            for b in offset[v]..offset[v + 1] {
                g.add_edge(nodes[a], nodes[b], ());
            }
        }
    }
    petgraph::algo::maximum_matching(&g).is_perfect()
}
