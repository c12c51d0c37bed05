//! Turns a Spoiler win into a separating sentence, the constructive
//! direction of the game/logic correspondence: a winning pick in one graph
//! becomes an existential over that pick's atomic type, responses branch
//! into the conjunction, and a pick in the other graph flips polarity.

use super::solve::{oriented, Engine};
use super::{GameError, Move, Side, DEFAULT_NODE_BUDGET};
use crate::graph::Graph;
use crate::logic::Formula;

/// Builds a sentence of quantifier depth at most `rounds` that is true on
/// `left` and false on `right`. Errors with [`GameError::NoSpoilerWin`] if
/// the Duplicator wins the `rounds`-round game.
pub fn extract_distinguishing(
    left: &Graph,
    right: &Graph,
    rounds: usize,
) -> Result<Formula, GameError> {
    let mut engine = Engine::new(left, right, DEFAULT_NODE_BUDGET);
    if !engine.spoiler_wins(rounds)? {
        return Err(GameError::NoSpoilerWin);
    }
    build(&mut engine, rounds, Side::Left)
}

/// Invariant: the Spoiler wins from the engine's configuration within
/// `rounds_left` rounds. Returns a formula over the variables `z1..zt`
/// (t = pairs picked so far, variable `zi` standing for the i-th pair) that
/// is true on the `anchor` side under its picks and false on the other side
/// under the other picks.
fn build(engine: &mut Engine, rounds_left: usize, anchor: Side) -> Result<Formula, GameError> {
    let mv = engine
        .winning_move(rounds_left)?
        .expect("caller guarantees a Spoiler win");
    if mv.side != anchor {
        // a winning pick in the opposite graph separates with the roles
        // swapped; negation swaps them back
        return Ok(Formula::not(existential(engine, rounds_left, mv)?));
    }
    existential(engine, rounds_left, mv)
}

/// The anchored case: `mv.side == anchor`. Quantifies a fresh variable over
/// the picked vertex's atomic type relative to the earlier picks, and
/// conjoins the recursive formula for every response that keeps the partial
/// isomorphism alive.
fn existential(engine: &mut Engine, rounds_left: usize, mv: Move) -> Result<Formula, GameError> {
    let t = engine.cfg.rounds_played();
    let fresh = zvar(t + 1);
    let own_graph = match mv.side {
        Side::Left => engine.cfg.left(),
        Side::Right => engine.cfg.right(),
    };

    let mut parts = Vec::new();
    for (i, &(xi, yi)) in engine.cfg.pairs().iter().enumerate() {
        let prior = match mv.side {
            Side::Left => xi,
            Side::Right => yi,
        };
        let adj = Formula::adj(fresh.clone(), zvar(i + 1));
        parts.push(if own_graph.has_edge(mv.vertex, prior) {
            adj
        } else {
            Formula::not(adj)
        });
        parts.push(Formula::not(Formula::eq(fresh.clone(), zvar(i + 1))));
    }

    for w in engine.duplicator_candidates(mv) {
        let (x, y) = oriented(mv, w);
        engine.cfg.push_unchecked(x, y);
        let sub = build(engine, rounds_left - 1, mv.side);
        engine.cfg.pop();
        parts.push(sub?);
    }

    if parts.is_empty() {
        // first move with the other graph empty: existence alone separates
        parts.push(Formula::eq(fresh.clone(), fresh.clone()));
    }
    Ok(Formula::exists(fresh, Formula::and(parts)))
}

fn zvar(i: usize) -> String {
    format!("z{i}")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::{solve, Winner};
    use crate::graph::{gen_instance, generate, FamilySpec, NamedInstance};
    use crate::logic::{evaluate, Assignment};

    fn check_separates(left: &Graph, right: &Graph, rounds: usize) {
        let f = extract_distinguishing(left, right, rounds).unwrap();
        assert!(f.quantifier_depth() <= rounds, "depth within rounds");
        assert!(f.check_sentence().is_ok());
        assert!(evaluate(&f, left, &Assignment::new()).unwrap(), "true on left");
        assert!(!evaluate(&f, right, &Assignment::new()).unwrap(), "false on right");
    }

    #[test]
    fn separates_edge_from_non_edge() {
        let k2 = generate(&FamilySpec::Complete(2)).unwrap();
        let e2 = Graph::empty(2).unwrap();
        check_separates(&k2, &e2, 2);
        check_separates(&e2, &k2, 2);
    }

    #[test]
    fn separates_thm1_2_hosts_at_three_rounds() {
        let b = gen_instance(&NamedInstance::Thm1_2 { m: 1 }).unwrap();
        assert_eq!(
            solve(&b.positive, &b.negative, 3).unwrap().winner,
            Winner::Spoiler
        );
        check_separates(&b.positive, &b.negative, 3);
    }

    #[test]
    fn no_spoiler_win_on_identical_graphs() {
        let c5 = generate(&FamilySpec::Cycle(5)).unwrap();
        assert_eq!(
            extract_distinguishing(&c5, &c5, 4),
            Err(GameError::NoSpoilerWin)
        );
    }

    #[test]
    fn separates_vertex_from_nothing() {
        let k1 = Graph::empty(1).unwrap();
        let none = Graph::empty(0).unwrap();
        check_separates(&k1, &none, 1);
        check_separates(&none, &k1, 1);
    }

    #[test]
    fn exhaustive_small_pairs_agree_with_the_solver() {
        use crate::graph::enumerate_up_to_iso;
        let reps3 = enumerate_up_to_iso(3).unwrap();
        for a in &reps3 {
            for b in &reps3 {
                for r in 1..=3 {
                    match solve(a, b, r).unwrap().winner {
                        Winner::Spoiler => check_separates(a, b, r),
                        Winner::Duplicator => {
                            assert_eq!(
                                extract_distinguishing(a, b, r),
                                Err(GameError::NoSpoilerWin)
                            );
                        }
                    }
                }
            }
        }
    }
}
