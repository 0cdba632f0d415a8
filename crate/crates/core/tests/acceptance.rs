//! One test per acceptance criterion. Each prints a single line
//! `ACCEPTANCE <n> <name>: PASS|FAIL (<details>)` and then asserts.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use monochrome::balancing::{balance, BalanceOutcome, BalancingInstance};
use monochrome::cli::{run_survey, survey_csv, SurveyConfig};
use monochrome::exact_partition::{min_mono_cycle_partition, verify_certificate, PartitionResult};
use monochrome::generators::{gen_sharpness, gen_three_colour};
use monochrome::graph::{ColouredGraph, ColouredMultiGraph, EdgeColouring, SimpleGraph, BLUE, RED};
use monochrome::hamilton::{bipartite_chvatal_check, chvatal_check, hamilton_cycle_exact, is_hamilton_cycle, DegreeSequence};
use monochrome::rational::{ceil_times, rat, Rational};
use monochrome::structure::{check_extremal_report, check_selection, find_components, ComponentsOutcome};
use monochrome::two_matching::{perfect_2_matching, robust_tutte};
use monochrome::Error;

fn report(id: u32, name: &str, pass: bool, details: String) {
    println!("ACCEPTANCE {id} {name}: {} ({details})", if pass { "PASS" } else { "FAIL" });
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> SimpleGraph {
    let mut e = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                e.push((u, v));
            }
        }
    }
    SimpleGraph::from_edges(n, e).unwrap()
}

/// Every stable set S has |N(S)| ≥ |S|, by enumerating all subsets.
fn brute_tutte(g: &SimpleGraph) -> bool {
    let n = g.n();
    let adj: Vec<u32> = (0..n).map(|v| g.neighbours(v).iter().fold(0u32, |m, &u| m | 1 << u)).collect();
    (1u32..1 << n).all(|s| {
        let mut nb = 0u32;
        for v in 0..n {
            if s >> v & 1 == 1 {
                if adj[v] & s != 0 {
                    return true;
                }
                nb |= adj[v];
            }
        }
        nb.count_ones() >= s.count_ones()
    })
}

#[test]
fn criterion_1_tutte_equivalence() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let (mut graphs, mut disagreements, mut with) = (0u32, 0u32, 0u32);
    while graphs < 10_000 {
        let n = rng.gen_range(1..=10);
        let p = rng.gen_range(0.05..0.9);
        let g = random_graph(&mut rng, n, p);
        let found = perfect_2_matching(&g);
        if let Some(m) = &found {
            with += 1;
            if m.check(&g).is_err() {
                disagreements += 1;
            }
        }
        if found.is_some() != brute_tutte(&g) {
            disagreements += 1;
        }
        graphs += 1;
    }
    let elapsed = start.elapsed();
    let pass = disagreements == 0 && elapsed < Duration::from_secs(60);
    report(1, "tutte_equivalence", pass, format!("{graphs} graphs, {with} with a 2-matching, {disagreements} disagreements, {elapsed:.2?} of 60s"));
    assert!(pass);
}

fn random_connected(rng: &mut ChaCha8Rng, m: usize, p: f64) -> SimpleGraph {
    loop {
        let g = random_graph(rng, m, p);
        if g.is_connected() {
            return g;
        }
    }
}

#[test]
fn criterion_2_balancing() {
    let start = Instant::now();
    let gamma = rat(1, 2);
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut hosts: Vec<SimpleGraph> = Vec::new();
    // Every labelled graph on m ≤ 5 vertices, random ones for m = 6..8.
    for m in 1..=5usize {
        let pairs: Vec<(usize, usize)> = (0..m).flat_map(|u| (u + 1..m).map(move |v| (u, v))).collect();
        for mask in 0u32..1 << pairs.len() {
            let g = SimpleGraph::from_edges(m, pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e)).unwrap();
            if g.is_connected() && robust_tutte(&g, &gamma).unwrap().holds() {
                hosts.push(g);
            }
        }
    }
    for m in 6..=8usize {
        let mut found = 0;
        while found < 40 {
            let p = rng.gen_range(0.75..1.0);
            let g = random_connected(&mut rng, m, p);
            if robust_tutte(&g, &gamma).unwrap().holds() {
                hosts.push(g);
                found += 1;
            }
        }
    }
    let (mut runs, mut failures) = (0u32, 0u32);
    for host in &hosts {
        let m = host.n();
        let t = 10 * m as i64;
        let lo = ceil_times(&((Rational::from_integer(1) - gamma / 5) * t), 1) as u64;
        let hi = ((Rational::from_integer(1) + gamma / 5) * t).floor().to_integer() as u64;
        for _ in 0..100 {
            let mut targets: Vec<u64> = (0..m).map(|_| rng.gen_range(lo..=hi)).collect();
            if targets.iter().sum::<u64>() % 2 == 1 {
                let i = (0..m).find(|&i| targets[i] < hi).or_else(|| (0..m).find(|&i| targets[i] > lo)).unwrap();
                if targets[i] < hi {
                    targets[i] += 1;
                } else {
                    targets[i] -= 1;
                }
            }
            let mut inst = BalancingInstance::new(host.clone(), gamma, targets.clone());
            inst.t = Some(Rational::from_integer(t));
            runs += 1;
            let outcome = balance(&inst, true);
            if failures == 0 && !matches!(outcome, Ok(BalanceOutcome::Balanced(_))) {
                println!("first failure: host {:?}, targets {targets:?}: {outcome:?}", host.edges().collect::<Vec<_>>());
            }
            match outcome {
                Ok(BalanceOutcome::Balanced(s)) if s.vertex_sums(m) == targets => {
                    if !s.edges.iter().all(|&(u, v)| host.has_edge(u, v)) {
                        failures += 1;
                    }
                }
                _ => failures += 1,
            }
        }
    }
    let elapsed = start.elapsed();
    let pass = failures == 0 && elapsed < Duration::from_secs(120);
    report(2, "balancing", pass, format!("{} hosts, {runs} instances, {failures} failures, {elapsed:.2?} of 120s", hosts.len()));
    assert!(pass);
}

#[test]
fn criterion_3_sharpness() {
    let mut ok = true;
    let mut details = Vec::new();
    for m in 1..=3usize {
        let g = gen_sharpness(m, RED).unwrap();
        let n = g.n();
        let degree_ok = g.min_degree() == 2 * m + 2 && 3 * (2 * m + 2) == 2 * n - 6;
        ok &= degree_ok;
        details.push(format!("m={m}: n={n}, delta={}", g.min_degree()));
        if m <= 2 {
            let start = Instant::now();
            let unsat = matches!(min_mono_cycle_partition(&g, 3).unwrap(), PartitionResult::Unsat { .. });
            let elapsed = start.elapsed();
            ok &= unsat && elapsed < Duration::from_secs(30);
            details.push(format!("k=3 {} in {elapsed:.2?} of 30s", if unsat { "unsat" } else { "sat" }));
        }
    }
    report(3, "sharpness", ok, details.join(", "));
    assert!(ok);
}

#[test]
fn criterion_4_three_colour_tightness() {
    let start = Instant::now();
    let g = gen_three_colour(1).unwrap();
    let at3 = min_mono_cycle_partition(&g, 3).unwrap();
    let at4 = min_mono_cycle_partition(&g, 4).unwrap();
    let elapsed = start.elapsed();
    let unsat3 = matches!(at3, PartitionResult::Unsat { .. });
    let sat4 = match &at4 {
        PartitionResult::Sat { certificate, .. } => verify_certificate(&g, certificate).is_ok(),
        PartitionResult::Unsat { .. } => false,
    };
    let pass = unsat3 && sat4 && elapsed < Duration::from_secs(60);
    let witness = match &at3 {
        PartitionResult::Sat { certificate, .. } => format!(", 3-part certificate {}", certificate.to_json()),
        PartitionResult::Unsat { .. } => String::new(),
    };
    report(4, "three_colour_tightness", pass, format!("n={}, k=3 unsat: {unsat3}, k=4 sat: {sat4}, {elapsed:.2?} of 60s{witness}", g.n()));
    assert!(pass);
}

#[test]
fn criterion_5_two_cycles_in_complete_graphs() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let (mut runs, mut counterexamples) = (0u32, 0u32);
    for n in 5..=10usize {
        for _ in 0..500 {
            let g = ColouredGraph::complete_with(n, 2, |_, _| if rng.gen_bool(0.5) { RED } else { BLUE }).unwrap();
            runs += 1;
            match min_mono_cycle_partition(&g, 2).unwrap() {
                PartitionResult::Sat { certificate, .. } if verify_certificate(&g, &certificate).is_ok() => {}
                _ => counterexamples += 1,
            }
        }
    }
    let elapsed = start.elapsed();
    let pass = counterexamples == 0 && elapsed < Duration::from_secs(60);
    report(5, "two_cycles_in_complete_graphs", pass, format!("{runs} colourings, {counterexamples} counterexamples, {elapsed:.2?} of 60s"));
    assert!(pass);
}

#[test]
fn criterion_6_chvatal_soundness() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let (mut general, mut bipartite, mut true_general, mut true_bip, mut bad) = (0u32, 0u32, 0u32, 0u32, 0u32);
    let check = |g: &SimpleGraph, bad: &mut u32| match hamilton_cycle_exact(g).unwrap() {
        Some(c) if is_hamilton_cycle(g, &c) => {}
        _ => *bad += 1,
    };
    while general < 10_000 {
        let n = rng.gen_range(3..=9);
        let p = rng.gen_range(0.3..1.0);
        let g = random_graph(&mut rng, n, p);
        general += 1;
        if chvatal_check(&DegreeSequence::of(&g)) {
            true_general += 1;
            check(&g, &mut bad);
        }
    }
    while bipartite < 10_000 {
        let k = rng.gen_range(2..=7);
        let p = rng.gen_range(0.4..1.0);
        let mut e = Vec::new();
        for x in 0..k {
            for y in 0..k {
                if rng.gen_bool(p) {
                    e.push((x, k + y));
                }
            }
        }
        let g = SimpleGraph::from_edges(2 * k, e).unwrap();
        let xs: Vec<usize> = (0..k).collect();
        let ys: Vec<usize> = (k..2 * k).collect();
        bipartite += 1;
        if bipartite_chvatal_check(&DegreeSequence::of_side(&g, &xs), &DegreeSequence::of_side(&g, &ys)) {
            true_bip += 1;
            check(&g, &mut bad);
        }
    }
    let elapsed = start.elapsed();
    let pass = bad == 0 && true_general > 0 && true_bip > 0 && elapsed < Duration::from_secs(120);
    report(
        6,
        "chvatal_soundness",
        pass,
        format!("{general} general ({true_general} condition-true), {bipartite} bipartite ({true_bip} condition-true), {bad} non-Hamiltonian, {elapsed:.2?} of 120s"),
    );
    assert!(pass);
}

fn random_reduced(rng: &mut ChaCha8Rng, m: usize, need: i64) -> ColouredMultiGraph {
    loop {
        let p_edge = rng.gen_range(0.85..1.0);
        let p_red = rng.gen_range(0.1..0.9);
        let p_both = rng.gen_range(0.0..0.3);
        let mut e = Vec::new();
        for u in 0..m {
            for v in u + 1..m {
                if !rng.gen_bool(p_edge) {
                    continue;
                }
                if rng.gen_bool(p_both) {
                    e.push((u, v, RED));
                    e.push((u, v, BLUE));
                } else {
                    e.push((u, v, if rng.gen_bool(p_red) { RED } else { BLUE }));
                }
            }
        }
        let g = ColouredMultiGraph::two_coloured(m, &e).unwrap();
        if g.min_degree() as i64 >= need {
            return g;
        }
    }
}

#[test]
fn criterion_7_component_selection() {
    let start = Instant::now();
    let gamma = rat(1, 48);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let (mut extremal, mut selections, mut contradictions, mut contradictions_large, mut unverified) = (0u32, 0u32, 0u32, 0u32, 0u32);
    for i in 0..200usize {
        let m = 12 + i % 7;
        let need = ceil_times(&((rat(2, 3) + gamma * 8) * Rational::from_integer(1)), m);
        let g = random_reduced(&mut rng, m, need);
        let gc: &EdgeColouring = &g;
        match find_components(gc, &gamma) {
            Ok(ComponentsOutcome::Extremal(r)) => {
                extremal += 1;
                if r.gamma != gamma * 4 || check_extremal_report(gc, &r).is_err() {
                    unverified += 1;
                }
            }
            Ok(ComponentsOutcome::Selection(s)) => {
                selections += 1;
                if !check_selection(gc, &s.components, &gamma).unwrap().all_hold() {
                    unverified += 1;
                }
            }
            Err(Error::InternalContradiction(_)) => {
                contradictions += 1;
                if m >= 15 {
                    contradictions_large += 1;
                }
            }
            Err(e) => panic!("unexpected error {e}"),
        }
    }
    let elapsed = start.elapsed();
    let pass = unverified == 0 && contradictions_large == 0 && elapsed < Duration::from_secs(300);
    report(
        7,
        "component_selection",
        pass,
        format!(
            "200 multigraphs: {selections} selections, {extremal} extremal, {unverified} unverified, internal contradiction rate {}/200 ({contradictions_large} with m >= 15), {elapsed:.2?} of 300s",
            contradictions
        ),
    );
    assert!(pass);
}

fn survey_config(n_min: usize, n_max: usize, samples: usize, delta: Rational, seed: u64) -> SurveyConfig {
    SurveyConfig {
        n_min,
        n_max,
        samples,
        delta,
        bias: 0.5,
        gamma: rat(1, 48),
        seed,
        k_max: 4,
        max_exact_n: 16,
        heuristic: true,
        timing: false,
    }
}

#[test]
fn criterion_8_heuristic_soundness() {
    let configs = [
        survey_config(9, 14, 20, rat(3, 4), 81),
        survey_config(9, 14, 20, rat(2, 3), 82),
        survey_config(12, 16, 10, rat(43, 60), 83),
        survey_config(20, 60, 1, rat(3, 4), 84),
    ];
    let (mut emitted, mut invalid, mut contradicting, mut overlapping, mut rows) = (0u32, 0u32, 0u32, 0u32, 0u32);
    for cfg in &configs {
        for r in run_survey(cfg).unwrap() {
            rows += 1;
            let h = r.heuristic.expect("heuristic columns");
            let Some(parts) = h.parts else { continue };
            emitted += 1;
            if h.valid != Some(true) {
                invalid += 1;
            }
            if r.solver == "exact" {
                overlapping += 1;
                // An exact unsat at `parts` parts would mean k* > parts.
                if r.k_star.map_or(true, |k| k > parts) {
                    contradicting += 1;
                }
            }
        }
    }
    let pass = invalid == 0 && contradicting == 0 && emitted > 0;
    report(
        8,
        "heuristic_soundness",
        pass,
        format!("{rows} survey rows, {emitted} certificates emitted, {invalid} invalid, {overlapping} checked against the exact solver, {contradicting} contradictions"),
    );
    assert!(pass);
}

#[test]
fn criterion_9_survey_determinism() {
    let cfg = survey_config(9, 13, 8, rat(3, 4), 9);
    let a = survey_csv(&run_survey(&cfg).unwrap(), true);
    let b = survey_csv(&run_survey(&cfg).unwrap(), true);
    let pass = a == b && a.lines().count() == 41;
    report(9, "survey_determinism", pass, format!("{} bytes, identical: {}", a.len(), a == b));
    assert!(pass);
}
