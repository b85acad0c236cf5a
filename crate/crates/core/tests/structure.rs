use pairdom_core::canonical::{rank, swap_check, SwapOutcome};
use pairdom_core::corpus::cubic_corpus;
use pairdom_core::pds::{all_perfect_matchings, verify_pds};
use pairdom_core::solver::enumerate_min_pds;
use pairdom_core::{canonical_pds, petersen, Graph, PairedDomSet, VertexSet};
use proptest::prelude::*;

/// Brute-force isomorphism test by trying every bijection that respects
/// degrees, with pruning on already-placed edges.
fn isomorphic(g: &Graph, h: &Graph) -> bool {
    fn extend(g: &Graph, h: &Graph, map: &mut Vec<usize>, used: VertexSet) -> bool {
        let v = map.len();
        if v == g.n() {
            return true;
        }
        for w in h.vertices().difference(used) {
            if g.degree(v) != h.degree(w) {
                continue;
            }
            if (0..v).all(|u| g.has_edge(u, v) == h.has_edge(map[u], w)) {
                map.push(w);
                if extend(g, h, map, used.with(w)) {
                    return true;
                }
                map.pop();
            }
        }
        false
    }
    g.n() == h.n()
        && g.edge_count() == h.edge_count()
        && extend(g, h, &mut Vec::new(), VertexSet::EMPTY)
}

#[test]
fn is_petersen_matches_isomorphism_oracle() {
    let p = petersen();
    let graphs = cubic_corpus(10).unwrap();
    let flagged: Vec<_> = graphs.iter().filter(|g| g.is_petersen()).collect();
    assert_eq!(flagged.len(), 1);
    for g in &graphs {
        assert_eq!(g.is_petersen(), isomorphic(g, &p));
    }
}

#[test]
fn corpus_graphs_are_pairwise_non_isomorphic() {
    for n in [4, 6, 8, 10] {
        let graphs = cubic_corpus(n).unwrap();
        for (i, g) in graphs.iter().enumerate() {
            for h in &graphs[i + 1..] {
                assert!(!isomorphic(g, h));
            }
        }
    }
}

fn arb_permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn relabelled_petersen_is_recognised(perm in arb_permutation(10)) {
        let g = petersen().relabel(&perm);
        prop_assert!(g.is_petersen());
        prop_assert_eq!(pairdom_core::gamma_pr(&g).unwrap().value, 6);
    }

    #[test]
    fn gamma_pr_is_label_invariant(idx in 0usize..19, perm in arb_permutation(10)) {
        let g = &cubic_corpus(10).unwrap()[idx];
        let h = g.relabel(&perm);
        prop_assert_eq!(pairdom_core::gamma_pr(g).unwrap().value, pairdom_core::gamma_pr(&h).unwrap().value);
        prop_assert_eq!(canonical_pds(g).unwrap().len(), canonical_pds(&h).unwrap().len());
    }
}

fn subsets_up_to(set: VertexSet, k: usize) -> Vec<VertexSet> {
    let items = set.to_vec();
    (0u64..1 << items.len())
        .map(|mask| {
            items
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &v)| v)
                .collect::<VertexSet>()
        })
        .filter(|s| s.len() <= k)
        .collect()
}

#[test]
fn swap_never_shrinks_a_minimum_petersen_set() {
    let g = petersen();
    let mut witnesses = 0;
    for c in canonical_pds(&g).unwrap() {
        let outside = g.vertices().difference(c.pds.s);
        for x in subsets_up_to(c.pds.s, 4) {
            for y in subsets_up_to(outside, 4) {
                match swap_check(&g, &c.pds, x, y) {
                    SwapOutcome::Counterexample(p) => panic!("smaller set {:?}", p.s),
                    SwapOutcome::Witness(w) => {
                        assert!(!c.pds.s.contains(w) && !y.contains(w));
                        witnesses += 1;
                    }
                    SwapOutcome::NotApplicable => {}
                }
            }
        }
    }
    assert!(witnesses > 0);
}

#[test]
fn swap_on_every_minimum_set_of_small_corpora() {
    for n in [4, 6, 8] {
        for g in cubic_corpus(n).unwrap() {
            for c in canonical_pds(&g).unwrap() {
                let outside = g.vertices().difference(c.pds.s);
                for x in subsets_up_to(c.pds.s, 4) {
                    for y in subsets_up_to(outside, 3) {
                        let out = swap_check(&g, &c.pds, x, y);
                        assert!(!matches!(out, SwapOutcome::Counterexample(_)));
                    }
                }
            }
        }
    }
}

#[test]
fn non_canonical_minimum_sets_rank_strictly_worse() {
    // Canonical choices are exactly the minimum-rank ones, and at n = 8 some
    // minimum sets are not canonical.
    let mut strict = 0;
    for g in cubic_corpus(8).unwrap() {
        let ties = canonical_pds(&g).unwrap();
        let best = ties[0].rank();
        let (_, sets) = enumerate_min_pds(&g).unwrap();
        for e in sets {
            for m in all_perfect_matchings(&g, e.s) {
                let p = PairedDomSet::new(e.s, m);
                assert_eq!(verify_pds(&g, &p), Ok(()));
                let r = rank(&g, &p);
                assert!(r >= best);
                let canonical = ties.iter().any(|t| t.pds == p);
                assert_eq!(canonical, r == best);
                if r > best {
                    strict += 1;
                }
            }
        }
    }
    assert!(strict > 0);
}
