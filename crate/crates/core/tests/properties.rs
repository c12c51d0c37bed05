//! Cross-module invariants: the algebraic laws tying the graph layer, the
//! logic layer, and the game solver together.

use efdepth_core::cert::{certify_lower, certify_upper};
use efdepth_core::game::{solve, Winner};
use efdepth_core::graph::{
    canonicalize, contains_induced, enumerate_all_up_to, enumerate_up_to_iso, gen_instance,
    is_isomorphic, subset_induced_oracle, Graph, NamedInstance,
};
use efdepth_core::logic::{
    complement_transform, evaluate, parse, print, sample::random_sentence, synth_thm11,
    synth_trivial, Assignment,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn labeled_graph(n: usize, code: u64) -> Graph {
    let mut edges = Vec::new();
    let mut t = 0;
    for u in 0..n {
        for v in (u + 1)..n {
            if code & (1 << t) != 0 {
                edges.push((u, v));
            }
            t += 1;
        }
    }
    Graph::build(n, &edges).unwrap()
}

#[test]
fn complement_is_an_involution_up_to_6_vertices() {
    for n in 0..=6usize {
        let bits = n * n.saturating_sub(1) / 2;
        for code in 0u64..(1 << bits) {
            let g = labeled_graph(n, code);
            assert_eq!(g.complement().complement(), g);
        }
    }
}

#[test]
fn induced_search_matches_subset_oracle_at_full_scale() {
    // every representative host up to 7 vertices against every
    // representative pattern up to 5 vertices
    let hosts = enumerate_all_up_to(7).unwrap();
    let patterns = enumerate_all_up_to(5).unwrap();
    for host in &hosts {
        for pattern in &patterns {
            assert_eq!(
                contains_induced(host, pattern).is_some(),
                subset_induced_oracle(host, pattern),
                "host={host:?} pattern={pattern:?}"
            );
        }
    }
}

#[test]
fn canonical_equality_is_isomorphism_on_all_5_vertex_pairs() {
    let reps = enumerate_up_to_iso(5).unwrap();
    // distinct representatives must disagree in canonical form and fail the
    // independent isomorphism search; shuffled copies must match their rep
    for (i, a) in reps.iter().enumerate() {
        for (j, b) in reps.iter().enumerate() {
            assert_eq!(
                canonicalize(a).unwrap() == canonicalize(b).unwrap(),
                is_isomorphic(a, b),
                "reps {i} vs {j}"
            );
        }
        let shuffled = a.relabel(&[4, 1, 3, 0, 2]);
        assert!(is_isomorphic(a, &shuffled));
        assert_eq!(canonicalize(a).unwrap(), canonicalize(&shuffled).unwrap());
    }
}

#[test]
fn trivial_sentence_agrees_with_brute_force() {
    // evaluate(synth_trivial(F), G) == contains_induced(G, F) for every
    // host representative up to 6 vertices and pattern up to 4
    let hosts = enumerate_all_up_to(6).unwrap();
    let patterns = enumerate_all_up_to(4).unwrap();
    for pattern in &patterns {
        let sentence = synth_trivial(pattern);
        for host in &hosts {
            assert_eq!(
                evaluate(&sentence, host, &Assignment::new()).unwrap(),
                contains_induced(host, pattern).is_some(),
                "pattern={pattern:?} host={host:?}"
            );
        }
    }
}

#[test]
fn complement_law_on_200_random_formula_graph_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(2202);
    for _ in 0..200 {
        let depth = rng.random_range(1..=3);
        let f = random_sentence(&mut rng, depth);
        let n = rng.random_range(0..=6);
        let g = Graph::random(n, rng.random_range(0.2..0.8), &mut rng).unwrap();
        let lhs = evaluate(&complement_transform(&f), &g, &Assignment::new()).unwrap();
        let rhs = evaluate(&f, &g.complement(), &Assignment::new()).unwrap();
        assert_eq!(lhs, rhs, "formula={} graph={g:?}", print(&f));
        assert_eq!(complement_transform(&f).quantifier_depth(), f.quantifier_depth());
    }
}

#[test]
fn game_value_is_monotone_in_rounds() {
    // all pairs of representatives up to 4 vertices, rounds up to 4: once
    // the Spoiler wins, more rounds never hurt him
    let reps = enumerate_all_up_to(4).unwrap();
    for a in &reps {
        for b in &reps {
            let mut spoiler_won = false;
            for r in 0..=4 {
                let w = solve(a, b, r).unwrap().winner;
                if spoiler_won {
                    assert_eq!(w, Winner::Spoiler, "a={a:?} b={b:?} r={r}");
                }
                spoiler_won = w == Winner::Spoiler;
            }
        }
    }
}

#[test]
fn isomorphic_inputs_always_go_to_the_duplicator() {
    for n in 0..=5usize {
        let identity: Vec<usize> = (0..n).collect();
        let reversal: Vec<usize> = (0..n).rev().collect();
        let rotation: Vec<usize> = (0..n).map(|i| (i + 1) % n.max(1)).collect();
        for g in enumerate_up_to_iso(n).unwrap() {
            for perm in [&identity, &reversal, &rotation] {
                let relabeled = g.relabel(perm);
                for r in 0..=n + 1 {
                    assert_eq!(
                        solve(&g, &relabeled, r).unwrap().winner,
                        Winner::Duplicator,
                        "g={g:?} perm={perm:?} r={r}"
                    );
                }
            }
        }
    }
}

#[test]
fn trivial_upper_certificates_for_all_small_patterns() {
    for n in 1..=4usize {
        for pattern in enumerate_up_to_iso(n).unwrap() {
            let (cert, cex) = certify_upper(&pattern, &synth_trivial(&pattern), 6).unwrap();
            assert!(cert.verified, "pattern={pattern:?} cex={cex:?}");
            assert_eq!(cert.depth, Some(n));
        }
    }
}

#[test]
fn sandwich_bounds_pin_down_the_exceptional_4_vertex_pattern() {
    // lower certificate at r=2 and a verified depth-3 sentence together give
    // D[P3 + K1] = 3 at desk scale
    let bundle = gen_instance(&NamedInstance::Thm1_2 { m: 1 }).unwrap();
    let lower = certify_lower(&bundle.pattern, &bundle.positive, &bundle.negative, 2).unwrap();
    assert_eq!(lower.claimed_bound, Some(3));
    let sentence = synth_thm11(&Graph::empty(0).unwrap());
    assert_eq!(sentence.quantifier_depth(), 3);
    let (upper, _) = certify_upper(&bundle.pattern, &sentence, 6).unwrap();
    assert!(upper.verified);
}

proptest! {
    /// Printing then parsing gives back the same AST, and a second print is
    /// a fixed point.
    #[test]
    fn print_parse_round_trip(seed in any::<u64>(), depth in 1usize..=4) {
        let f = random_sentence(&mut ChaCha8Rng::seed_from_u64(seed), depth);
        let text = print(&f);
        let reparsed = parse(&text).expect("printed sentences parse");
        prop_assert_eq!(&reparsed, &f);
        prop_assert_eq!(print(&reparsed), text);
    }

    /// Sentence depth never exceeds its budget and sentences stay closed.
    #[test]
    fn random_sentences_are_sentences(seed in any::<u64>(), depth in 1usize..=4) {
        let f = random_sentence(&mut ChaCha8Rng::seed_from_u64(seed), depth);
        prop_assert!(f.check_sentence().is_ok());
        prop_assert!(f.quantifier_depth() <= depth);
    }

    /// The Spoiler may open in either graph, so sides are symmetric.
    #[test]
    fn solve_is_side_symmetric(
        n1 in 1usize..=4, c1 in any::<u64>(),
        n2 in 1usize..=4, c2 in any::<u64>(),
        r in 0usize..=3,
    ) {
        let g = labeled_graph(n1, c1 & ((1 << (n1 * (n1 - 1) / 2)) - 1));
        let h = labeled_graph(n2, c2 & ((1 << (n2 * (n2 - 1) / 2)) - 1));
        let a = solve(&g, &h, r).unwrap().winner;
        let b = solve(&h, &g, r).unwrap().winner;
        prop_assert_eq!(a, b);
    }

    /// Complementing both boards never changes the winner.
    #[test]
    fn solve_is_complement_invariant(
        n1 in 1usize..=5, c1 in any::<u64>(),
        n2 in 1usize..=5, c2 in any::<u64>(),
        r in 0usize..=3,
    ) {
        let g = labeled_graph(n1, c1 & ((1 << (n1 * (n1 - 1) / 2)) - 1));
        let h = labeled_graph(n2, c2 & ((1 << (n2 * (n2 - 1) / 2)) - 1));
        let plain = solve(&g, &h, r).unwrap().winner;
        let complemented = solve(&g.complement(), &h.complement(), r).unwrap().winner;
        prop_assert_eq!(plain, complemented);
    }

    /// graph6 and edge-list encodings both decode back exactly.
    #[test]
    fn codecs_round_trip(n in 0usize..=7, code in any::<u64>()) {
        use efdepth_core::graph::{decode, encode, GraphFormat};
        let bits = n * n.saturating_sub(1) / 2;
        let g = labeled_graph(n, code & ((1u64 << bits) - 1));
        for format in [GraphFormat::Graph6, GraphFormat::EdgeList] {
            let bytes = encode(&g, format).unwrap();
            prop_assert_eq!(&decode(&bytes, format).unwrap(), &g);
        }
    }
}
