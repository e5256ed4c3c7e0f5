use std::collections::HashSet;

use domgray::generators::{all_labeled_trees, complete, cycle, tree_from_prufer};
use domgray::lifting::{compute_j, lift_op1, LiftContextOpI, LiftContextOpII, OpIClass};
use domgray::oracle::count_dominating_sets;
use domgray::{
    brute_force_hamilton_path, build_dominating_graph, enumerate_dominating_sets, find_reduction,
    hamilton_path_auto, hamilton_path_tree, is_dominating, lift_op2, reduce_tree_to_base,
    verify_hamilton_path, Budget, Graph, Reduction, SearchOptions, SearchOutcome, VertexSet,
};
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        let k = pairs.len();
        proptest::collection::vec(any::<bool>(), k).prop_map(move |keep| {
            let edges: Vec<_> = pairs
                .iter()
                .zip(&keep)
                .filter(|(_, &b)| b)
                .map(|(&e, _)| e)
                .collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn arb_tree(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n).prop_flat_map(|n| {
        if n <= 2 {
            Just(domgray::generators::path(n)).boxed()
        } else {
            proptest::collection::vec(0..n, n - 2)
                .prop_map(|seq| tree_from_prufer(&seq).unwrap())
                .boxed()
        }
    })
}

/// Every Operation I and II triple valid in `g`.
fn all_valid_reductions(g: &Graph) -> Vec<Reduction> {
    let act: Vec<usize> = g.active().iter().collect();
    let mut out = Vec::new();
    for &a in &act {
        for &b in &act {
            for &c in &act {
                for r in [
                    Reduction::OpI { u: a, v: b, x: c },
                    Reduction::OpII { u: a, v: b, w: c },
                ] {
                    if r.validate(g).is_ok() {
                        out.push(r);
                    }
                }
            }
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn dominating_set_count_is_odd(g in arb_graph(12)) {
        prop_assert_eq!(enumerate_dominating_sets(&g).unwrap().len() % 2, 1);
    }

    #[test]
    fn full_set_dominates_and_empty_set_does_not(g in arb_graph(10)) {
        prop_assert!(is_dominating(&g, g.active()).unwrap());
        prop_assert_eq!(
            is_dominating(&g, VertexSet::EMPTY).unwrap(),
            g.active().is_empty()
        );
    }

    #[test]
    fn supersets_of_dominating_sets_dominate(g in arb_graph(9), extra in any::<u32>()) {
        for s in enumerate_dominating_sets(&g).unwrap() {
            let bigger = s.union(VertexSet::from_bits(extra).intersection(g.active()));
            prop_assert!(is_dominating(&g, bigger).unwrap());
        }
    }

    #[test]
    fn parity_classes_differ(g in arb_graph(10)) {
        let dg = build_dominating_graph(&g).unwrap();
        let (even, odd) = dg.parity_classes();
        prop_assert_ne!(even, odd);
        for (i, j) in dg.edges() {
            prop_assert_ne!(dg.nodes()[i].len() % 2, dg.nodes()[j].len() % 2);
        }
    }

    #[test]
    fn enumeration_matches_definition_count(g in arb_graph(11)) {
        prop_assert_eq!(
            enumerate_dominating_sets(&g).unwrap().len(),
            count_dominating_sets(&g).unwrap()
        );
    }

    #[test]
    fn found_reductions_are_valid_and_keep_trees(t in arb_tree(3, 12)) {
        let r = find_reduction(&t).unwrap();
        r.validate(&t).unwrap();
        let smaller = r.apply(&t).unwrap();
        prop_assert!(smaller.is_tree());
        let expected_drop = match r { Reduction::OpI { .. } => 1, Reduction::OpII { .. } => 2 };
        prop_assert_eq!(t.active_count() - smaller.active_count(), expected_drop);
    }

    #[test]
    fn tree_trace_terminates_at_small_base(t in arb_tree(1, 14)) {
        let trace = reduce_tree_to_base(&t).unwrap();
        prop_assert!(trace.base().active_count() <= 2);
        prop_assert!(trace.steps().len() < t.active_count().max(1));
    }

    #[test]
    fn tree_paths_verify(t in arb_tree(1, 16)) {
        let p = hamilton_path_tree(&t).unwrap();
        let report = verify_hamilton_path(&t, &p);
        prop_assert!(report.passed(), "{:?}", report);
        prop_assert_eq!(p.len() % 2, 1);
        prop_assert_eq!(hamilton_path_tree(&t).unwrap(), p);
    }

    #[test]
    fn op1_lift_preserves_class_orderings(t in arb_tree(3, 10), pick in any::<prop::sample::Index>()) {
        let ops: Vec<_> = all_valid_reductions(&t)
            .into_iter()
            .filter(|r| matches!(r, Reduction::OpI { .. }))
            .collect();
        prop_assume!(!ops.is_empty());
        let r = ops[pick.index(ops.len())];
        let Reduction::OpI { u, v, .. } = r else { unreachable!() };
        let ctx = LiftContextOpI::new(&t, r).unwrap();
        let base = hamilton_path_tree(ctx.reduced()).unwrap();
        let lifted = lift_op1(&base, &ctx).unwrap();
        prop_assert!(verify_hamilton_path(&t, &lifted).passed());

        // Order of X' in the input path, and the orders in which its images under
        // adding u, v and {u, v} occur in the output.
        let x_prime: Vec<VertexSet> = base
            .iter()
            .filter(|&f| ctx.classify(f).unwrap() == OpIClass::XOnly)
            .collect();
        let members: HashSet<VertexSet> = x_prime.iter().copied().collect();
        let order_of = |add: VertexSet| -> Vec<VertexSet> {
            lifted
                .iter()
                .filter(|s| s.intersection(VertexSet::from_iter([u, v])) == add)
                .map(|s| s.difference(add))
                .filter(|s| members.contains(s))
                .collect()
        };
        // X', B' and X are traversed in the order of X'.
        for add in [VertexSet::EMPTY, VertexSet::singleton(u), VertexSet::singleton(v)] {
            prop_assert_eq!(&order_of(add), &x_prime);
        }
        // B keeps the positions its members had in the input path.
        let b: HashSet<VertexSet> = order_of(VertexSet::from_iter([u, v])).into_iter().collect();
        prop_assert_eq!(&b, &members);
    }

    #[test]
    fn op2_count_law_and_j_injectivity(t in arb_tree(3, 11), pick in any::<prop::sample::Index>()) {
        let ops: Vec<_> = all_valid_reductions(&t)
            .into_iter()
            .filter(|r| matches!(r, Reduction::OpII { .. }))
            .collect();
        prop_assume!(!ops.is_empty());
        let r = ops[pick.index(ops.len())];
        let Reduction::OpII { u, .. } = r else { unreachable!() };
        let ctx = LiftContextOpII::new(&t, r).unwrap();
        let hprime = ctx.reduced().clone();
        let j = compute_j(&hprime, u).unwrap();
        prop_assert_eq!(
            count_dominating_sets(&t).unwrap(),
            3 * count_dominating_sets(&hprime).unwrap() + 2 * j.len()
        );
        let images: HashSet<VertexSet> = j.iter().map(|s| s.with(u)).collect();
        prop_assert_eq!(images.len(), j.len());
        for s in &images {
            prop_assert!(is_dominating(&hprime, *s).unwrap());
        }
        let base = hamilton_path_tree(&hprime).unwrap();
        prop_assert!(verify_hamilton_path(&t, &lift_op2(&base, &ctx).unwrap()).passed());
    }

    #[test]
    fn auto_paths_always_verify(g in arb_graph(6)) {
        let out = hamilton_path_auto(&g, Budget::default()).unwrap();
        if let Some(p) = out.path() {
            prop_assert!(verify_hamilton_path(&g, p).passed());
        }
    }
}

#[test]
fn find_reduction_on_every_tree_up_to_eight_vertices() {
    for n in 3..=8 {
        for t in all_labeled_trees(n) {
            let r = find_reduction(&t).unwrap();
            r.validate(&t).unwrap();
            assert!(r.apply(&t).unwrap().is_tree());
        }
    }
}

/// Every graph on `n` labeled vertices, one per edge subset of `K_n`.
fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let k = pairs.len();
    (0u32..(1 << k)).map(move |mask| {
        let edges: Vec<_> = (0..k)
            .filter(|b| mask & (1 << b) != 0)
            .map(|b| pairs[b])
            .collect();
        Graph::from_edges(n, &edges).unwrap()
    })
}

#[test]
fn pruning_never_loses_a_path() {
    let plain = SearchOptions::plain(u64::MAX);
    for n in 1..=4 {
        for g in all_graphs(n) {
            let dg = build_dominating_graph(&g).unwrap();
            let pruned = brute_force_hamilton_path(&dg, SearchOptions::default());
            let unpruned = brute_force_hamilton_path(&dg, plain);
            assert_eq!(
                matches!(pruned, SearchOutcome::Found { .. }),
                matches!(unpruned, SearchOutcome::Found { .. }),
                "disagreement on {:?}",
                g.to_document()
            );
            assert!(!matches!(pruned, SearchOutcome::BudgetExceeded { .. }));
            if let SearchOutcome::Found { path, .. } = pruned {
                assert!(verify_hamilton_path(&g, &path).passed());
            }
        }
    }
}

#[test]
fn search_finds_paths_for_all_small_trees() {
    for n in 1..=6 {
        for t in all_labeled_trees(n) {
            let dg = build_dominating_graph(&t).unwrap();
            match brute_force_hamilton_path(&dg, SearchOptions::default()) {
                SearchOutcome::Found { path, .. } => {
                    assert!(verify_hamilton_path(&t, &path).passed())
                }
                other => panic!("no path for {:?}: {other:?}", t.to_document()),
            }
        }
    }
}

#[test]
fn complete_graphs_through_auto() {
    for n in 1..=5 {
        let g = complete(n);
        let out = hamilton_path_auto(&g, Budget::default()).unwrap();
        assert!(verify_hamilton_path(&g, out.path().expect("K_n has a path")).passed());
    }
}

#[test]
fn cycle_dominating_sets_are_complemented_lucas_strings() {
    for n in 3..=12 {
        let doms: HashSet<VertexSet> = enumerate_dominating_sets(&cycle(n))
            .unwrap()
            .into_iter()
            .collect();
        for s in domgray::brgc(n).unwrap() {
            assert_eq!(
                doms.contains(&s.set()),
                s.complement().avoids_circular_ones(3),
                "n={n} s={s}"
            );
        }
    }
}
