use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tangle_decider::decider::{
    check_cross_counting, cross_matrix, monotone_extension_check, rational_weight, split_symmetric,
    synthesize_weights, synthesize_weights_as, Axioms, Branch, Synthesis,
};
use tangle_decider::oracle::verify_decider;
use tangle_decider::ratlp::{int, Rational};
use tangle_decider::sepsys::{enumerate_separations, generators, GroundSystem, Mode, Separation, VertexSet};
use tangle_decider::tangles::{enumerate_tangles, induce_from_set, is_profile, Induced, Orientation};
use tangle_decider::Error;

fn graphs() -> Vec<GroundSystem> {
    vec![
        generators::path(5),
        generators::cycle(6),
        generators::complete(4),
        generators::complete(5),
        generators::grid(3, 3),
        generators::random_graph(8, 0.5, 3),
        generators::random_graph(8, 0.3, 4),
    ]
}

fn hypergraphs() -> Vec<GroundSystem> {
    vec![
        GroundSystem::new(
            Mode::Hypergraph,
            ["a", "b", "c", "d", "e"],
            [vec!["a", "b", "c"], vec!["c", "d", "e"], vec!["a", "e"]],
        )
        .unwrap(),
        GroundSystem::new(
            Mode::Hypergraph,
            ["p", "q", "r", "s", "t", "u"],
            [vec!["p", "q", "r", "s"], vec!["r", "s", "t"], vec!["t", "u"], vec!["u", "p"]],
        )
        .unwrap(),
    ]
}

fn tangles_of(gs: &[GroundSystem]) -> Vec<(GroundSystem, Orientation)> {
    let mut out = Vec::new();
    for g in gs {
        for k in 1..=3 {
            for t in enumerate_tangles(g, k, Some(20)).unwrap() {
                out.push((g.clone(), t));
            }
        }
    }
    out
}

fn check_synthesis(g: &GroundSystem, o: &Orientation, syn: &Synthesis, rng: &mut ChaCha8Rng) {
    let p = &syn.provenance;
    assert!(verify_decider(g, o, &syn.weights).unwrap().ok, "{g:?}");
    assert!(monotone_extension_check(o, &syn.weights).is_ok());
    if p.maximals.is_empty() {
        assert_eq!(p.branch, Branch::Empty);
        return;
    }
    assert!(check_cross_counting(&p.maximals, o.k()).is_ok());
    let m = cross_matrix(&p.maximals).to_rational();
    let (sym, skew) = split_symmetric(&m).unwrap();
    assert!(skew.is_skew_symmetric());
    assert_eq!(sym, sym.transpose());
    assert_eq!(sym.add(&skew).unwrap(), m);
    assert!(p.x.iter().all(|xi| !xi.is_negative()));

    // w(Y) = Σ xᵢ |Y ∩ Sᵢ| for arbitrary Y
    for _ in 0..16 {
        let y = VertexSet::from_bits(rng.gen::<u64>()) & g.vertices();
        let expected = p
            .maximals
            .iter()
            .zip(&p.x)
            .fold(Rational::zero(), |acc, (s, xi)| acc + xi * int((y & s.separator()).len() as i64));
        assert_eq!(rational_weight(&p.unbumped, y), expected);
    }

    assert_eq!(m.mul_vec(&p.x).unwrap(), p.margins);
    assert!(p.margins.iter().all(|v| !v.is_negative()));
    let zeros = p.margins.iter().filter(|v| v.is_zero()).count();
    match p.branch {
        Branch::Positive => {
            assert_eq!(zeros, 0);
            assert!(p.bumped_vertex.is_none() && p.epsilon.is_none());
            assert_eq!(p.rational_weights, p.unbumped);
        }
        Branch::EpsilonBump => {
            assert_eq!(zeros, 1);
            let i = p.margins.iter().position(Zero::is_zero).unwrap();
            let v = p.bumped_vertex.unwrap();
            let eps = p.epsilon.clone().unwrap();
            assert!(eps.is_positive());
            assert!(p.maximals[i].big().contains(v) && !p.maximals[i].small().contains(v));
            for (j, s) in p.maximals.iter().enumerate() {
                let margin = rational_weight(&p.rational_weights, s.big()) - rational_weight(&p.rational_weights, s.small());
                assert!(margin.is_positive(), "maximal {j} undecided after bump");
                if j != i {
                    // the bump can cost at most ε, which is at most half the slack
                    assert!(&eps * int(2) <= p.margins[j]);
                }
            }
        }
        Branch::Empty => panic!("nonempty maximals reported as empty"),
    }
}

#[test]
fn graph_tangles_synthesize_and_verify() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let cases = tangles_of(&graphs());
    assert!(cases.len() > 20);
    let mut branches = [0usize; 3];
    for (g, o) in &cases {
        let syn = synthesize_weights(g, o).unwrap();
        branches[syn.provenance.branch as usize] += 1;
        check_synthesis(g, o, &syn, &mut rng);
    }
    assert!(branches[Branch::Positive as usize] > 0);
}

#[test]
fn hypergraph_tangles_synthesize_and_verify() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let cases = tangles_of(&hypergraphs());
    assert!(!cases.is_empty());
    for (g, o) in &cases {
        check_synthesis(g, o, &synthesize_weights(g, o).unwrap(), &mut rng);
    }
}

#[test]
fn graph_tangles_under_profile_axioms() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for (g, o) in tangles_of(&graphs()[..4]) {
        assert!(is_profile(&g, &o).verdict);
        check_synthesis(&g, &o, &synthesize_weights_as(&g, &o, Axioms::Profile).unwrap(), &mut rng);
    }
}

#[test]
fn set_universe_point_profiles() {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for n in 1..=5 {
        let names = generators::vertex_names(n);
        let g = GroundSystem::setsep(&names).unwrap();
        for v in 0..n {
            let Induced::Decided(o) = induce_from_set(&g, 1, VertexSet::singleton(v)).unwrap() else {
                panic!("point profile has ties");
            };
            assert!(is_profile(&g, &o).verdict);
            let syn = synthesize_weights(&g, &o).unwrap();
            check_synthesis(&g, &o, &syn, &mut rng);
        }
    }
}

#[test]
fn non_tangles_are_rejected() {
    let g = generators::complete(4);
    let pairs: Vec<Separation> = enumerate_separations(&g, 2)
        .unwrap()
        .into_iter()
        .filter(|s| s.canonical() == *s)
        .collect();
    // every pair reversed from its canonical form
    let o = Orientation::from_chosen(&g, 2, pairs.iter().map(Separation::inverse)).unwrap();
    assert!(matches!(synthesize_weights(&g, &o), Err(Error::AxiomViolation(_))));
}

#[test]
fn synthesis_is_deterministic() {
    for (g, o) in tangles_of(&graphs()[4..]) {
        assert_eq!(synthesize_weights(&g, &o).unwrap(), synthesize_weights(&g, &o).unwrap());
    }
}
