use std::collections::BTreeSet;

use logflc_core::trees::TreeGraph;
use logflc_core::{enumerate_all_trees, enumerate_trees, Permutation, StableTree};
use proptest::prelude::*;

fn tree_strategy() -> impl Strategy<Value = StableTree> {
    (2usize..=6).prop_flat_map(|n| {
        let trees = enumerate_all_trees(n);
        (0..trees.len()).prop_map(move |k| trees[k].clone())
    })
}

/// Renumbers internal vertices by `order` and flips every edge.
fn scramble(g: &TreeGraph, order: &[usize]) -> TreeGraph {
    TreeGraph {
        num_vertices: g.num_vertices,
        edges: g.edges.iter().map(|&(a, b)| (order[b], order[a])).collect(),
        labels: g.labels.iter().map(|&v| order[v]).collect(),
    }
}

proptest! {
    #[test]
    fn canonical_form_ignores_vertex_numbering(t in tree_strategy(), seed in any::<u64>()) {
        let g = t.graph();
        let mut order: Vec<usize> = (0..g.num_vertices).collect();
        let mut s = seed;
        for k in (1..order.len()).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            order.swap(k, (s >> 33) as usize % (k + 1));
        }
        prop_assert_eq!(StableTree::from_graph(&scramble(&g, &order)).unwrap(), t);
    }

    #[test]
    fn relabeling_is_invertible(t in tree_strategy(), k in 0usize..720) {
        let perms = Permutation::all_of_inputs(t.arity());
        let p = &perms[k % perms.len()];
        let moved = t.act(p).unwrap();
        prop_assert_eq!(moved.codim(), t.codim());
        prop_assert_eq!(moved.act(&p.inverse()).unwrap(), t);
    }

    #[test]
    fn edge_sets_rebuild_the_tree(t in tree_strategy()) {
        prop_assert_eq!(StableTree::from_edge_sets(t.arity(), &t.edge_sets()).unwrap(), t);
    }

    #[test]
    fn serde_roundtrip(t in tree_strategy()) {
        let json = serde_json::to_string(&t).unwrap();
        prop_assert_eq!(serde_json::from_str::<StableTree>(&json).unwrap(), t);
    }
}

/// Closure of the corollas under grafting and relabeling.
fn by_grafting(n: usize) -> BTreeSet<Vec<Vec<usize>>> {
    let mut out = BTreeSet::new();
    out.insert(StableTree::corolla(n).unwrap().edge_sets());
    for a in 2..n {
        let m = n + 1 - a;
        for outer in enumerate_all_trees(a) {
            for inner in enumerate_all_trees(m) {
                for slot in 1..=a {
                    let t = outer.graft(&inner, slot).unwrap();
                    for p in Permutation::all_of_inputs(n) {
                        out.insert(t.act(&p).unwrap().edge_sets());
                    }
                }
            }
        }
    }
    out
}

#[test]
fn enumeration_matches_grafting_closure() {
    for n in 2..=5 {
        let enumerated: BTreeSet<_> = enumerate_all_trees(n).iter().map(|t| t.edge_sets()).collect();
        assert_eq!(enumerated, by_grafting(n), "arity {n}");
    }
}

#[test]
fn codimension_counts() {
    // arity n is Mbar_{0,n+1}; boundary divisors are 2^n - n - 2
    for n in 3..=6 {
        assert_eq!(enumerate_trees(n, 1).len(), (1 << n) - n - 2);
    }
    // points of Mbar_{0,n+1} are binary trees: (2n-3)!!
    let double_fact = [3, 15, 105, 945];
    for (k, n) in (3..=6).enumerate() {
        assert_eq!(enumerate_trees(n, n - 2).len(), double_fact[k]);
    }
}
