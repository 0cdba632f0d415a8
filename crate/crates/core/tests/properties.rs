use proptest::prelude::*;

use monochrome::exact_partition::{min_mono_cycle_partition, verify_certificate, PartitionResult};
use monochrome::generators::gen_random_min_degree;
use monochrome::graph::io::{graph_from_json, graph_to_json};
use monochrome::graph::{ColouredGraph, SimpleGraph};
use monochrome::hamilton::{chvatal_check, hamilton_cycle_exact, is_hamilton_cycle, DegreeSequence};
use monochrome::heuristic::heuristic_partition;
use monochrome::rational::rat;
use monochrome::two_matching::{perfect_2_matching, tutte_condition, TutteVerdict};
use monochrome::CyclePartitionCertificate;

fn simple_graph(max_n: usize) -> impl Strategy<Value = SimpleGraph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut it = bits.into_iter();
            let mut e = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if it.next().unwrap() {
                        e.push((u, v));
                    }
                }
            }
            SimpleGraph::from_edges(n, e).unwrap()
        })
    })
}

fn coloured_graph(max_n: usize) -> impl Strategy<Value = ColouredGraph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(0u8..3, n * (n - 1) / 2).prop_map(move |codes| {
            let mut it = codes.into_iter();
            let mut e = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    // 0 leaves the pair empty, 1 and 2 pick red or blue.
                    let c = it.next().unwrap();
                    if c > 0 {
                        e.push((u, v, c - 1));
                    }
                }
            }
            ColouredGraph::two_coloured(n, &e).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn two_matching_agrees_with_tutte(g in simple_graph(12)) {
        let found = perfect_2_matching(&g);
        match tutte_condition(&g) {
            TutteVerdict::Holds => {
                let m = found.expect("Tutte holds but no 2-matching");
                prop_assert!(m.check(&g).is_ok());
            }
            TutteVerdict::Violated(w) => {
                prop_assert!(found.is_none());
                prop_assert!(w.check(&g).is_ok());
            }
        }
    }

    #[test]
    fn exact_optimum_is_certified_and_tight(g in coloured_graph(8)) {
        match min_mono_cycle_partition(&g, 8).unwrap() {
            PartitionResult::Sat { k_star, certificate } => {
                prop_assert!(verify_certificate(&g, &certificate).is_ok());
                prop_assert_eq!(certificate.len(), k_star);
                if k_star > 1 {
                    let below = min_mono_cycle_partition(&g, k_star - 1).unwrap();
                    prop_assert!(matches!(below, PartitionResult::Unsat { .. }), "optimum is not tight");
                }
            }
            PartitionResult::Unsat { .. } => prop_assert!(false, "every graph splits into n degenerate cycles"),
        }
    }

    #[test]
    fn certificate_json_round_trip(g in coloured_graph(7)) {
        if let PartitionResult::Sat { certificate, .. } = min_mono_cycle_partition(&g, 7).unwrap() {
            let back = CyclePartitionCertificate::from_json(&certificate.to_json()).unwrap();
            prop_assert_eq!(back, certificate);
        }
    }

    #[test]
    fn graph_json_round_trip(g in coloured_graph(10)) {
        let back = graph_from_json(&graph_to_json(g.colouring())).unwrap();
        prop_assert_eq!(back, g);
    }

    #[test]
    fn chvatal_implies_hamiltonian(g in simple_graph(9)) {
        if g.n() >= 3 && chvatal_check(&DegreeSequence::of(&g)) {
            let c = hamilton_cycle_exact(&g).unwrap();
            prop_assert!(c.is_some_and(|c| is_hamilton_cycle(&g, &c)));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn random_generator_is_deterministic(n in 6usize..30, seed in any::<u64>()) {
        let a = gen_random_min_degree(n, &rat(3, 4), 0.5, seed).unwrap();
        let b = gen_random_min_degree(n, &rat(3, 4), 0.5, seed).unwrap();
        prop_assert!(4 * a.min_degree() >= 3 * (n - 1));
        prop_assert_eq!(a, b);
    }

    #[test]
    fn heuristic_certificates_verify(n in 9usize..24, seed in any::<u64>(), bias in 0.2f64..0.8) {
        let g = gen_random_min_degree(n, &rat(3, 4), bias, seed).unwrap();
        if let Some(cert) = heuristic_partition(g.colouring(), &rat(1, 48)).unwrap().certificate() {
            prop_assert!(verify_certificate(&g, cert).is_ok());
            prop_assert!(cert.len() <= 3);
        }
    }
}
