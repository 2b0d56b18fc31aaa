use std::collections::HashSet;

use proptest::prelude::*;

use tangle_decider::oracle::{brute_force_separations, count_law_check};
use tangle_decider::sepsys::{enumerate_separations, generators, GroundSystem, Mode, Separation};

fn small_ground() -> impl Strategy<Value = GroundSystem> {
    (1usize..=6, prop::collection::vec(any::<u8>(), 0..10), 0u8..3).prop_map(|(n, raw, kind)| {
        let names = generators::vertex_names(n);
        match kind {
            0 => GroundSystem::new(Mode::Setsep, names, Vec::<Vec<String>>::new()).unwrap(),
            1 => {
                let edges: Vec<Vec<String>> = raw
                    .iter()
                    .filter_map(|&b| {
                        let (u, v) = (b as usize % n, (b as usize / 7) % n);
                        (u != v).then(|| vec![names[u].clone(), names[v].clone()])
                    })
                    .collect();
                GroundSystem::new(Mode::Graph, names, edges).unwrap()
            }
            _ => {
                let edges: Vec<Vec<String>> = raw
                    .iter()
                    .filter_map(|&b| {
                        let members: Vec<String> =
                            (0..n).filter(|i| b >> i & 1 == 1).map(|i| names[i].clone()).collect();
                        (members.len() >= 2).then_some(members)
                    })
                    .collect();
                GroundSystem::new(Mode::Hypergraph, names, edges).unwrap()
            }
        }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn enumeration_matches_brute_force(g in small_ground(), k in 0usize..4) {
        let seps = enumerate_separations(&g, k).unwrap();
        prop_assert_eq!(&seps, &brute_force_separations(&g, k));
        prop_assert!(count_law_check(&g, k).unwrap().ok);
    }

    #[test]
    fn emitted_separations_are_valid_unique_and_inverse_closed(g in small_ground(), k in 0usize..4) {
        let seps = enumerate_separations(&g, k).unwrap();
        let set: HashSet<Separation> = seps.iter().copied().collect();
        prop_assert_eq!(set.len(), seps.len());
        for s in &seps {
            prop_assert!(g.is_separation_sets(s.small(), s.big()));
            prop_assert!(s.order() < k);
            prop_assert!(set.contains(&s.inverse()));
        }
    }

    #[test]
    fn leq_is_a_partial_order(g in small_ground()) {
        let seps = enumerate_separations(&g, 2).unwrap();
        for s in &seps {
            prop_assert!(s.leq(s));
            for t in &seps {
                prop_assert_eq!(s.leq(t), t.inverse().leq(&s.inverse()));
                if s.leq(t) && t.leq(s) {
                    prop_assert_eq!(s, t);
                }
                for u in &seps {
                    if s.leq(t) && t.leq(u) {
                        prop_assert!(s.leq(u));
                    }
                }
            }
        }
    }
}

#[test]
fn count_law_on_named_families() {
    for g in [
        generators::path(4),
        generators::cycle(5),
        generators::complete(5),
        generators::grid(2, 3),
        generators::edgeless(4),
    ] {
        for k in 0..=4 {
            assert!(count_law_check(&g, k).unwrap().ok, "{g:?} k={k}");
        }
    }
}

#[test]
fn path_a_b_c_counts_per_separator() {
    // Σ_{|C|<2} 2^{#components(G−C)} = 2 (C=∅) + 2 + 4 + 2
    let g = generators::path(3);
    let seps = enumerate_separations(&g, 2).unwrap();
    let by_separator = |c: usize| seps.iter().filter(|s| s.separator().bits() == c as u64).count();
    assert_eq!(by_separator(0b000), 2);
    assert_eq!(by_separator(0b001), 2);
    assert_eq!(by_separator(0b010), 4);
    assert_eq!(by_separator(0b100), 2);
}
