use std::collections::BTreeSet;

use proptest::prelude::*;

use tangle_decider::decider::WeightFunction;
use tangle_decider::sepsys::{enumerate_separations, generators, GroundSystem, Mode, Separation, VertexSet};
use tangle_decider::tangles::{
    enumerate_tangles, induce_from_set, induce_from_weights, is_profile, is_tangle, maximal_elements, Orientation,
};

/// Direct reading of the axiom: no three chosen small sides, repetition
/// allowed, whose induced subgraphs together give the whole ground system.
fn naive_is_tangle(g: &GroundSystem, chosen: &[Separation]) -> bool {
    let covers = |a: VertexSet, b: VertexSet, c: VertexSet| {
        (a | b | c) == g.vertices()
            && g.edges().iter().all(|&e| e.is_subset(a) || e.is_subset(b) || e.is_subset(c))
    };
    !chosen.iter().any(|x| {
        chosen
            .iter()
            .any(|y| chosen.iter().any(|z| covers(x.small(), y.small(), z.small())))
    })
}

fn brute_force_tangles(g: &GroundSystem, k: usize) -> BTreeSet<Vec<Separation>> {
    let seps = enumerate_separations(g, k).unwrap();
    let pairs: Vec<Separation> = seps.iter().copied().filter(|s| s.canonical() == *s).collect();
    assert!(pairs.len() <= 12, "brute force limited to 12 pairs");
    (0u32..1 << pairs.len())
        .map(|mask| {
            let mut chosen: Vec<Separation> = pairs
                .iter()
                .enumerate()
                .map(|(i, p)| if mask >> i & 1 == 1 { p.inverse() } else { *p })
                .collect();
            chosen.sort();
            chosen.dedup();
            chosen
        })
        .filter(|chosen| naive_is_tangle(g, chosen))
        .collect()
}

fn small_instances() -> Vec<(GroundSystem, usize)> {
    let mut out = Vec::new();
    let candidates = [
        generators::edgeless(1),
        generators::edgeless(2),
        generators::edgeless(3),
        generators::path(2),
        generators::path(3),
        generators::path(4),
        generators::cycle(4),
        generators::complete(3),
        generators::complete(4),
        generators::complete(5),
        GroundSystem::new(Mode::Hypergraph, ["a", "b", "c", "d"], [vec!["a", "b", "c"], vec!["c", "d"]]).unwrap(),
        GroundSystem::setsep(&["a", "b", "c"]).unwrap(),
    ];
    for g in candidates {
        for k in 0..=3 {
            let pairs = enumerate_separations(&g, k).unwrap().len().div_ceil(2);
            if pairs <= 12 {
                out.push((g.clone(), k));
            }
        }
    }
    out
}

#[test]
fn backtracking_matches_brute_force() {
    let instances = small_instances();
    assert!(instances.len() > 15);
    for (g, k) in instances {
        let found: BTreeSet<Vec<Separation>> = enumerate_tangles(&g, k, None)
            .unwrap()
            .into_iter()
            .map(|t| t.iter().copied().collect())
            .collect();
        let brute = brute_force_tangles(&g, k);
        assert_eq!(found, brute, "{g:?} k={k}");
    }
}

#[test]
fn k4_k2_tangle_count() {
    // 5 pairs: (∅,V) must point at V, each ({v},V) may point either way
    // as long as no three small sides cover K4.
    let g = generators::complete(4);
    let ts = enumerate_tangles(&g, 2, None).unwrap();
    assert_eq!(ts.len(), brute_force_tangles(&g, 2).len());
    assert!(ts.iter().all(|t| is_tangle(&g, t).verdict));
}

fn corpus_tangles() -> Vec<(GroundSystem, Orientation)> {
    let mut out = Vec::new();
    for g in [
        generators::path(4),
        generators::cycle(5),
        generators::complete(4),
        generators::complete(5),
        generators::grid(3, 3),
        generators::random_graph(7, 0.4, 11),
        generators::random_graph(7, 0.6, 12),
    ] {
        for k in 1..=3 {
            for t in enumerate_tangles(&g, k, Some(50)).unwrap() {
                out.push((g.clone(), t));
            }
        }
    }
    out
}

#[test]
fn tangle_structure() {
    let corpus = corpus_tangles();
    assert!(!corpus.is_empty());
    for (g, t) in &corpus {
        let universe = enumerate_separations(g, t.k()).unwrap();
        let maximal = maximal_elements(t);
        for s in t.iter() {
            // big sides are never contained in small sides
            assert!(!(s.big() - s.small()).is_empty());
            // downward closed
            for c in universe.iter().filter(|c| c.leq(s)) {
                assert!(t.contains(c), "{} below {} missing", g.display(c), g.display(s));
            }
            assert!(maximal.iter().any(|m| s.leq(m)));
        }
        // tangles are regular profiles
        assert!(is_profile(g, t).verdict, "{g:?}");
        assert_eq!(&Orientation::downward_closure(g, t.k(), &maximal).unwrap(), t);
    }
}

#[test]
fn certificates_reproduce() {
    let g = generators::cycle(5);
    let universe = enumerate_separations(&g, 2).unwrap();
    let pairs: Vec<Separation> = universe.iter().copied().filter(|s| s.canonical() == *s).collect();
    // a handful of arbitrary orientations, most of which are not tangles
    for mask in [0u64, 1, 0b1011, u64::MAX, 0x5555_5555] {
        let chosen = pairs
            .iter()
            .enumerate()
            .map(|(i, p)| if mask >> (i % 64) & 1 == 1 { p.inverse() } else { *p });
        let o = Orientation::from_chosen(&g, 2, chosen).unwrap();
        for cert in [is_tangle(&g, &o), is_profile(&g, &o)] {
            assert_eq!(cert.verdict, cert.witness.is_none());
            assert!(cert.witness_reproduces(&g, &o));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn set_and_indicator_weights_agree(n in 2usize..7, edges in prop::collection::vec((0usize..7, 0usize..7), 0..12), xbits in any::<u8>(), k in 1usize..3) {
        let names = generators::vertex_names(n);
        let edges: Vec<Vec<String>> = edges
            .into_iter()
            .filter(|(u, v)| u < &n && v < &n && u != v)
            .map(|(u, v)| vec![names[u].clone(), names[v].clone()])
            .collect();
        let g = GroundSystem::new(Mode::Graph, names, edges).unwrap();
        let x = VertexSet::from_bits(u64::from(xbits)) & g.vertices();
        prop_assert_eq!(
            induce_from_set(&g, k, x).unwrap(),
            induce_from_weights(&g, k, &WeightFunction::indicator(&g, x)).unwrap()
        );
    }
}
