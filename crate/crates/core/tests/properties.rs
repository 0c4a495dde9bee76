mod common;

use common::*;
use gruler_core::analysis::{
    condition2_check, cycle_vertices, entry_paths, enumerate_cycles, find_sinks, is_acyclic,
    is_no_exit, residues_at, sink_paths,
};
use gruler_core::oracle::Oracle;
use gruler_core::rep::build_rep_with_bases;
use gruler_core::shifts::{
    canonicalize_block, component_support, k_block_graded_ur, laurent_block_graded_ur,
    relevant_degrees, reps_graded_isomorphic, support_has_invertible, UrVerdict,
};
use gruler_core::{build_rep, parse_graph, BlockKind, Graph, GraphFormat, ShiftBlock};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn arb_graph() -> impl Strategy<Value = Graph> {
    (1usize..6).prop_flat_map(|n| {
        proptest::collection::vec((0..n, 0..n), 0..8)
            .prop_map(move |edges| Graph::new((0..n).map(|i| format!("n{i}")), edges).unwrap())
    })
}

fn arb_no_exit_graph() -> impl Strategy<Value = Graph> {
    any::<u64>().prop_map(|seed| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        random_no_exit_graph(&mut rng, 5, 2)
    })
}

fn arb_block() -> impl Strategy<Value = ShiftBlock> {
    let kind = prop_oneof![
        Just(BlockKind::GroundField),
        (1u32..5).prop_map(BlockKind::Laurent)
    ];
    (kind, proptest::collection::vec(-6i64..7, 1..6))
        .prop_map(|(kind, shifts)| ShiftBlock::new(kind, shifts).unwrap())
}

proptest! {
    #[test]
    fn graph_round_trips(g in arb_graph()) {
        prop_assert_eq!(&parse_graph(&g.to_json(), GraphFormat::Json).unwrap(), &g);
        prop_assert_eq!(&parse_graph(&g.to_edgelist(), GraphFormat::Edgelist).unwrap(), &g);
    }

    #[test]
    fn incidence_partitions_edges(g in arb_graph()) {
        let outs: usize = (0..g.vertex_count()).map(|v| g.out_edges(v).unwrap().len()).sum();
        let ins: usize = (0..g.vertex_count()).map(|v| g.in_edges(v).unwrap().len()).sum();
        prop_assert_eq!(outs, g.edge_count());
        prop_assert_eq!(ins, g.edge_count());
    }

    #[test]
    fn predicate_implications(g in arb_graph()) {
        if is_acyclic(&g) {
            prop_assert!(is_no_exit(&g));
        }
        if condition2_check(&g).0 {
            prop_assert!(is_no_exit(&g));
        }
    }

    #[test]
    fn entry_paths_match_brute_force(g in arb_no_exit_graph()) {
        prop_assume!(g.edge_count() <= 6);
        for v in cycle_vertices(&g) {
            prop_assert_eq!(entry_paths(&g, v).unwrap(), naive_entry_lengths(&g, v));
        }
        for s in find_sinks(&g) {
            prop_assert_eq!(sink_paths(&g, s).unwrap(), naive_entry_lengths(&g, s));
        }
    }

    #[test]
    fn every_residue_is_realized(g in arb_no_exit_graph()) {
        for c in enumerate_cycles(&g).unwrap() {
            for &v in &c.vertices {
                let r = residues_at(&g, &c, v).unwrap();
                prop_assert!(r.counts.iter().all(|&k| k >= 1));
                prop_assert_eq!(r.total(), entry_paths(&g, v).unwrap().len());
            }
        }
    }

    #[test]
    fn rep_accounts_for_every_path(g in arb_no_exit_graph()) {
        let rep = build_rep(&g).unwrap();
        let cycles = enumerate_cycles(&g).unwrap();
        prop_assert_eq!(rep.blocks.len(), find_sinks(&g).len() + cycles.len());
        let paths: usize = find_sinks(&g).iter().map(|&s| sink_paths(&g, s).unwrap().len()).sum::<usize>()
            + cycles.iter().map(|c| entry_paths(&g, c.base).unwrap().len()).sum::<usize>();
        prop_assert_eq!(rep.total_size(), paths);
        for b in &rep.blocks {
            prop_assert!(b.shifts.contains(&0));
            prop_assert!(b.shifts.windows(2).all(|w| w[0] <= w[1]));
            if let BlockKind::Laurent(_) = b.kind {
                prop_assert!(laurent_block_graded_ur(b).unwrap().all_residues_present);
            }
        }
        if is_acyclic(&g) {
            prop_assert!(rep.blocks.iter().all(|b| b.kind == BlockKind::GroundField));
        }
        if find_sinks(&g).is_empty() {
            prop_assert!(rep.blocks.iter().all(|b| b.kind != BlockKind::GroundField));
        }
    }

    #[test]
    fn rep_is_base_independent(g in arb_no_exit_graph(), pick in any::<usize>()) {
        let canonical = build_rep(&g).unwrap();
        let other = build_rep_with_bases(&g, |c| c.vertices[pick % c.vertices.len()]).unwrap();
        prop_assert!(reps_graded_isomorphic(&canonical, &other));
    }

    #[test]
    fn canonicalize_is_idempotent(b in arb_block()) {
        let c = canonicalize_block(&b);
        prop_assert_eq!(canonicalize_block(&c.as_block()), c);
    }

    #[test]
    fn ground_criterion_matches_canonical_form(b in arb_block()) {
        prop_assume!(b.kind == BlockKind::GroundField);
        let c = canonicalize_block(&b);
        prop_assert_eq!(
            k_block_graded_ur(&b).unwrap(),
            b.n() == 1 || c.shifts.iter().all(|&s| s == 0)
        );
    }

    #[test]
    fn support_depends_on_degree_mod_period(b in arb_block(), d in -8i64..8) {
        if let Some(m) = b.kind.period() {
            let a = component_support(&b, d);
            let c = component_support(&b, d + m);
            prop_assert_eq!(&a.positions, &c.positions);
            for e in a.exponents.unwrap() {
                prop_assert_eq!(e.rem_euclid(m), 0);
            }
        }
    }

    #[test]
    fn matching_failure_means_not_unit_regular(b in arb_block()) {
        let blocked = relevant_degrees(&b).into_iter().any(|d| {
            let s = component_support(&b, d);
            !s.is_empty() && !support_has_invertible(&s, b.n())
        });
        if blocked {
            match b.kind {
                BlockKind::GroundField => prop_assert!(!k_block_graded_ur(&b).unwrap()),
                BlockKind::Laurent(_) => prop_assert_eq!(
                    laurent_block_graded_ur(&b).unwrap().verdict,
                    UrVerdict::False
                ),
            }
        }
    }
}

/// Oracle unit-regularity ⇒ every nonzero component has an invertible
/// element ⇒ the support admits a permutation.
#[test]
fn oracle_ur_implies_invertible_in_every_component() {
    let oracle = Oracle::new(2).unwrap();
    let mut blocks: Vec<ShiftBlock> = Vec::new();
    for n in 1..=3 {
        blocks.extend(all_shift_lists(n, 3).into_iter().map(ShiftBlock::ground));
        blocks.extend(
            all_shift_lists(n, 3)
                .into_iter()
                .map(|s| ShiftBlock::laurent(3, s)),
        );
    }
    for b in blocks {
        if !oracle.check_graded_unit_regular(&b).unwrap().holds {
            continue;
        }
        for d in relevant_degrees(&b) {
            let support = component_support(&b, d);
            if support.is_empty() {
                continue;
            }
            let has_unit = oracle
                .enumerate_component(&b, d)
                .unwrap()
                .any(|x| oracle.is_invertible_hom(&x));
            assert!(has_unit, "{b} degree {d}");
            assert!(support_has_invertible(&support, b.n()), "{b} degree {d}");
        }
    }
}

#[test]
fn laurent_verdicts_agree_across_fields() {
    let (f2, f3) = (Oracle::new(2).unwrap(), Oracle::new(3).unwrap());
    for m in [2u32, 3] {
        for n in 1..=3 {
            for s in all_shift_lists(n, m as i64) {
                let b = ShiftBlock::laurent(m, s);
                assert_eq!(
                    f2.check_graded_unit_regular(&b).unwrap().holds,
                    f3.check_graded_unit_regular(&b).unwrap().holds,
                    "{b}"
                );
            }
        }
    }
}

#[test]
fn directly_finite_everywhere_on_small_grid() {
    for q in [2u8, 3] {
        let oracle = Oracle::new(q).unwrap();
        for n in 1..=3 {
            for s in all_shift_lists(n, 3) {
                let b = ShiftBlock::ground(s.clone());
                assert!(
                    oracle.check_graded_directly_finite(&b).unwrap().holds,
                    "{b}"
                );
                if q == 2 {
                    let l = ShiftBlock::laurent(2, s.iter().map(|x| x % 2).collect::<Vec<_>>());
                    assert!(
                        oracle.check_graded_directly_finite(&l).unwrap().holds,
                        "{l}"
                    );
                }
            }
        }
    }
}

#[test]
fn graphs_with_exits_are_refused() {
    let g = rose();
    assert!(enumerate_cycles(&g).is_err());
    assert!(build_rep(&g).is_err());
}
