//! Seeded random sentences, used by consistency batteries.

use super::Formula;
use rand::Rng;

/// Draws a closed formula whose quantifier depth is at most `max_depth`
/// (`max_depth >= 1`; a sentence in this signature needs at least one
/// quantifier before it can mention a variable). `fuel` bounds the node
/// count so formulas stay small.
pub fn random_sentence<R: Rng>(rng: &mut R, max_depth: usize) -> Formula {
    assert!(max_depth >= 1, "sentences need at least depth 1");
    let mut counter = 0;
    let mut fuel = 40usize;
    gen(rng, max_depth, &mut Vec::new(), &mut counter, &mut fuel)
}

fn gen<R: Rng>(
    rng: &mut R,
    depth_left: usize,
    scope: &mut Vec<String>,
    counter: &mut usize,
    fuel: &mut usize,
) -> Formula {
    *fuel = fuel.saturating_sub(1);
    let can_quantify = depth_left > 0;
    let can_atom = !scope.is_empty();

    // out of fuel: emit the smallest thing available
    if *fuel == 0 && can_atom {
        return atom(rng, scope);
    }

    let choice = if !can_atom {
        0 // must open a quantifier to get a variable in scope
    } else if !can_quantify {
        rng.random_range(1..=4)
    } else {
        rng.random_range(0..=4)
    };
    match choice {
        0 => {
            *counter += 1;
            let var = format!("v{counter}");
            scope.push(var.clone());
            let body = gen(rng, depth_left - 1, scope, counter, fuel);
            scope.pop();
            if rng.random_bool(0.5) {
                Formula::exists(var, body)
            } else {
                Formula::forall(var, body)
            }
        }
        1 => atom(rng, scope),
        2 => Formula::not(gen(rng, depth_left, scope, counter, fuel)),
        3 => {
            let a = gen(rng, depth_left, scope, counter, fuel);
            let b = gen(rng, depth_left, scope, counter, fuel);
            if rng.random_bool(0.5) {
                Formula::and(vec![a, b])
            } else {
                Formula::or(vec![a, b])
            }
        }
        _ => {
            let a = gen(rng, depth_left, scope, counter, fuel);
            let b = gen(rng, depth_left, scope, counter, fuel);
            Formula::implies(a, b)
        }
    }
}

fn atom<R: Rng>(rng: &mut R, scope: &[String]) -> Formula {
    let u = scope[rng.random_range(0..scope.len())].clone();
    let v = scope[rng.random_range(0..scope.len())].clone();
    if rng.random_bool(0.5) {
        Formula::adj(u, v)
    } else {
        Formula::eq(u, v)
    }
}
