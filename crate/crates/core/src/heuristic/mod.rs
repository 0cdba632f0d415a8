//! A solver for dense 2-coloured graphs beyond the exact solver's range,
//! following the proof pipeline with each vertex its own cluster: extremal
//! constructions, or component selection, a perfect 2-matching guided
//! assignment, Hamilton completion and absorption of leftovers. Every
//! certificate is verified before it is returned.

mod extremal;
mod paths;

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

pub use paths::connect_short_path;

use crate::budget::step_budget;
use crate::error::{Error, Result};
use crate::exact_partition::{verify_certificate, CyclePart, CyclePartitionCertificate};
use crate::graph::{component_union, Colour, EdgeColouring, MonoComponent};
use crate::hamilton::{hamilton_cycle_exact, rotation_cycle, RotationConfig, DEFAULT_EXACT_MAX_N};
use crate::rational::Rational;
use crate::structure::{detect_extremal, select_components, ExtremalKind};
use crate::two_matching::perfect_2_matching;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HeuristicRoute {
    ExtremalBipartite,
    ExtremalFourCycle,
    Components,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FailureStage {
    ComponentSelection,
    TwoMatching,
    HamiltonCompletion,
    Absorption,
    Verification,
}

impl FailureStage {
    #[must_use]
    pub fn name(self) -> &'static str {
        match self {
            FailureStage::ComponentSelection => "component_selection",
            FailureStage::TwoMatching => "two_matching",
            FailureStage::HamiltonCompletion => "hamilton_completion",
            FailureStage::Absorption => "absorption",
            FailureStage::Verification => "verification",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum HeuristicOutcome {
    Certificate { certificate: CyclePartitionCertificate, route: HeuristicRoute },
    Failure { stage: FailureStage, reason: String },
}

impl HeuristicOutcome {
    #[must_use]
    pub fn certificate(&self) -> Option<&CyclePartitionCertificate> {
        match self {
            HeuristicOutcome::Certificate { certificate, .. } => Some(certificate),
            HeuristicOutcome::Failure { .. } => None,
        }
    }
}

/// Step budget shared by every search in one call.
pub(crate) struct CycleSearch {
    pub steps: u64,
    seed: u64,
}

impl CycleSearch {
    pub fn spend(&mut self, k: u64) {
        self.steps = self.steps.saturating_sub(k);
    }
}

/// A colour-c Hamilton cycle on `set` (sorted), in original vertex ids.
pub(crate) fn hamiltonise(g: &EdgeColouring, c: Colour, set: &[usize], search: &mut CycleSearch) -> Result<Option<Vec<usize>>> {
    match set {
        [] => return Ok(Some(Vec::new())),
        [v] => return Ok(Some(vec![*v])),
        [u, v] => return Ok(g.has_edge(*u, *v, c).then(|| vec![*u, *v])),
        _ => {}
    }
    if search.steps == 0 {
        return Ok(None);
    }
    let h = g.colour_graph(c).induced(set);
    if h.min_degree() < 2 {
        return Ok(None);
    }
    let k = set.len() as u64;
    let cfg = RotationConfig { restarts: 6, rotations_per_vertex: 40, seed: search.seed };
    search.seed = search.seed.wrapping_add(1);
    search.spend(k * k);
    if let Some(cyc) = rotation_cycle(&h, &cfg) {
        return Ok(Some(cyc.into_iter().map(|v| set[v]).collect()));
    }
    if set.len() <= DEFAULT_EXACT_MAX_N {
        search.spend(k << k.min(40));
        return Ok(hamilton_cycle_exact(&h)?.map(|cyc| cyc.into_iter().map(|v| set[v]).collect()));
    }
    Ok(None)
}

fn finish(g: &EdgeColouring, certificate: CyclePartitionCertificate, route: HeuristicRoute) -> HeuristicOutcome {
    match verify_certificate(g, &certificate) {
        Ok(()) => HeuristicOutcome::Certificate { certificate, route },
        Err(v) => HeuristicOutcome::Failure { stage: FailureStage::Verification, reason: v.to_string() },
    }
}

fn failure(stage: FailureStage, reason: impl Into<String>) -> HeuristicOutcome {
    HeuristicOutcome::Failure { stage, reason: reason.into() }
}

/// At most three monochromatic cycles covering `g`, or the stage at which
/// the construction stopped. Never returns an unverified certificate.
pub fn heuristic_partition(g: &EdgeColouring, gamma: &Rational) -> Result<HeuristicOutcome> {
    if g.colour_count() != 2 {
        return Err(Error::PreconditionViolated("the heuristic needs a 2-coloured graph".into()));
    }
    let mut search = CycleSearch { steps: step_budget(), seed: 0x5eed };
    let report = detect_extremal(g, &(*gamma * 4));
    let direct = match report.kind {
        ExtremalKind::BipartiteLike => {
            let w = report.bipartite.as_ref().expect("witness");
            extremal::bipartite_case(g, w, &mut search)?.map(|c| (c, HeuristicRoute::ExtremalBipartite))
        }
        ExtremalKind::FourCycleLike => {
            let w = report.four_cycle.as_ref().expect("witness");
            extremal::four_cycle_case(g, w, &mut search)?.map(|c| (c, HeuristicRoute::ExtremalFourCycle))
        }
        ExtremalKind::None => None,
    };
    if let Some((cert, route)) = direct {
        return Ok(finish(g, cert, route));
    }
    let Some(selection) = select_components(g, gamma)? else {
        return Ok(failure(FailureStage::ComponentSelection, "no admissible choice of three monochromatic components"));
    };
    let comps: Vec<&MonoComponent> = selection.components.iter().filter(|c| !c.is_empty()).collect();
    components_route(g, &comps, &mut search)
}

fn components_route(g: &EdgeColouring, comps: &[&MonoComponent], search: &mut CycleSearch) -> Result<HeuristicOutcome> {
    let n = g.n();
    let union = component_union(g, comps);
    let Some(m2) = perfect_2_matching(&union) else {
        return Ok(failure(FailureStage::TwoMatching, "the union of the selected components has no perfect 2-matching"));
    };
    // Matching edges vote for the components that contain them.
    let mut votes = vec![vec![0u32; comps.len()]; n];
    for (u, w, omega) in m2.weighted_edges() {
        for (i, c) in comps.iter().enumerate() {
            if c.contains(u) && c.contains(w) && g.has_edge(u, w, c.colour) {
                votes[u][i] += u32::from(omega);
                votes[w][i] += u32::from(omega);
            }
        }
    }
    let inner_degree = |v: usize, i: usize, assign: &[usize]| {
        g.colour_neighbours(v, comps[i].colour).iter().filter(|&&u| assign[u] == i).count()
    };
    let homes: Vec<Vec<usize>> = (0..n).map(|v| (0..comps.len()).filter(|&i| comps[i].contains(v)).collect()).collect();
    let mut assign: Vec<usize> = (0..n)
        .map(|v| {
            *homes[v]
                .iter()
                .max_by_key(|&&i| (votes[v][i], g.colour_neighbours(v, comps[i].colour).len(), std::cmp::Reverse(i)))
                .expect("selection spans")
        })
        .collect();
    let sets = |assign: &[usize]| -> Vec<Vec<usize>> { (0..comps.len()).map(|i| (0..n).filter(|&v| assign[v] == i).collect()).collect() };

    // Repair: move the weakest vertex of a failing part to another home.
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut moved = vec![0u32; n];
    let mut cycles: Vec<Option<Vec<usize>>>;
    loop {
        let parts = sets(&assign);
        cycles = Vec::with_capacity(parts.len());
        for (i, s) in parts.iter().enumerate() {
            cycles.push(hamiltonise(g, comps[i].colour, s, search)?);
        }
        let Some(bad) = cycles.iter().position(Option::is_none) else { break };
        if search.steps == 0 || !seen.insert(assign.clone()) {
            break;
        }
        let movable = parts[bad]
            .iter()
            .copied()
            .filter(|&v| homes[v].len() > 1)
            .min_by_key(|&v| (moved[v], inner_degree(v, bad, &assign), v));
        let Some(v) = movable else { break };
        let to = homes[v].iter().copied().filter(|&j| j != bad).max_by_key(|&j| (inner_degree(v, j, &assign), std::cmp::Reverse(j)));
        assign[v] = to.expect("another home");
        moved[v] += 1;
    }

    // Shrink failing parts until they close, collecting leftovers.
    let parts = sets(&assign);
    let mut leftovers = Vec::new();
    for (i, cyc) in cycles.iter_mut().enumerate() {
        if cyc.is_some() {
            continue;
        }
        let c = comps[i].colour;
        let mut s = parts[i].clone();
        loop {
            if let Some(found) = hamiltonise(g, c, &s, search)? {
                *cyc = Some(found);
                break;
            }
            let weakest = *s
                .iter()
                .min_by_key(|&&v| (g.colour_neighbours(v, c).iter().filter(|u| s.binary_search(u).is_ok()).count(), v))
                .expect("a set of three or more vertices");
            s.retain(|&v| v != weakest);
            leftovers.push(weakest);
        }
    }
    let mut cert = CyclePartitionCertificate {
        parts: cycles
            .into_iter()
            .enumerate()
            .map(|(i, cyc)| CyclePart { colour: comps[i].colour, cycle: cyc.expect("closed") })
            .collect(),
    };
    while cert.parts.len() < 3 {
        cert.parts.push(CyclePart { colour: comps[0].colour, cycle: Vec::new() });
    }
    if !leftovers.is_empty() && !absorb(g, &mut cert, leftovers, search) {
        return Ok(failure(FailureStage::Absorption, "leftover vertices could not be absorbed into three cycles"));
    }
    Ok(finish(g, cert, HeuristicRoute::Components))
}

/// Inserts leftovers, hardest first, by splicing short monochromatic paths
/// through them into existing parts or by filling empty parts.
fn absorb(g: &EdgeColouring, cert: &mut CyclePartitionCertificate, mut left: Vec<usize>, search: &mut CycleSearch) -> bool {
    let n = g.n();
    let hardness = |v: usize| (0..g.colour_count() as Colour).map(|c| g.colour_degree(v, c)).max().unwrap_or(0);
    left.sort_by_key(|&v| (hardness(v), v));
    while let Some(&x) = left.first() {
        if absorb_one(g, cert, x, &left, n, search) {
            let covered: HashSet<usize> = cert.parts.iter().flat_map(|p| p.cycle.iter().copied()).collect();
            left.retain(|v| !covered.contains(v));
        } else {
            return false;
        }
    }
    true
}

fn absorb_one(g: &EdgeColouring, cert: &mut CyclePartitionCertificate, x: usize, left: &[usize], n: usize, search: &mut CycleSearch) -> bool {
    if let Some(p) = cert.parts.iter_mut().find(|p| p.cycle.is_empty()) {
        p.cycle = vec![x];
        return true;
    }
    for p in cert.parts.iter_mut() {
        if let [u] = p.cycle[..] {
            if let Some(c) = (0..g.colour_count() as Colour).find(|&c| g.has_edge(u, x, c)) {
                *p = CyclePart { colour: c, cycle: vec![u, x] };
                return true;
            }
        }
    }
    // Splice a path u, (leftovers through x), w between consecutive u, w.
    let others: Vec<usize> = left.iter().copied().filter(|&v| v != x).collect();
    for ell in 3..=5 {
        for p in cert.parts.iter_mut() {
            let len = p.cycle.len();
            if len < 2 {
                continue;
            }
            let gaps = if len == 2 { 1 } else { len };
            for k in 0..gaps {
                let (u, w) = (p.cycle[k], p.cycle[(k + 1) % len]);
                let mut interior = vec![x];
                if ell > 3 {
                    interior.extend(&others);
                }
                let allowed: HashSet<usize> = interior.iter().copied().chain([u, w]).collect();
                let avoid: Vec<usize> = (0..n).filter(|v| !allowed.contains(v)).collect();
                let Some(path) = paths::connect_short_path_budgeted(g, p.colour, &[u], &[w], &avoid, ell, &mut search.steps) else {
                    continue;
                };
                if !path.contains(&x) {
                    continue;
                }
                let mut cycle = p.cycle[..=k].to_vec();
                cycle.extend(&path[1..ell - 1]);
                cycle.extend(&p.cycle[k + 1..]);
                p.cycle = cycle;
                return true;
            }
        }
    }
    false
}
