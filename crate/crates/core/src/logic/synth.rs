//! Formula synthesizers for induced-subgraph properties.

use super::{Formula, LogicError};
use crate::graph::Graph;

/// Quantifier-free predicate over `vars` that holds on an assignment iff
/// `vars[i] -> vertex i of pattern` is an induced-subgraph isomorphism:
/// `(x_i ~ x_j)` for every pattern edge and `(x_i !~ x_j & x_i != x_j)` for
/// every non-edge, pairs taken in lexicographic order. Adjacent pairs need no
/// distinctness literal since adjacency is irreflexive. For the one-vertex
/// pattern (no pairs at all) the tautology `x = x` stands in.
pub fn synth_pattern_predicate(pattern: &Graph, vars: &[String]) -> Result<Formula, LogicError> {
    if pattern.n() == 0 {
        return Err(LogicError::EmptyPattern);
    }
    if vars.len() != pattern.n() {
        return Err(LogicError::Arity {
            expected: pattern.n(),
            got: vars.len(),
        });
    }
    for (i, v) in vars.iter().enumerate() {
        if vars[..i].contains(v) {
            return Err(LogicError::DuplicateVariable(v.clone()));
        }
    }
    let mut edge_lits = Vec::new();
    let mut nonedge_lits = Vec::new();
    for i in 0..pattern.n() {
        for j in (i + 1)..pattern.n() {
            if pattern.has_edge(i, j) {
                edge_lits.push(Formula::adj(&*vars[i], &*vars[j]));
            } else {
                nonedge_lits.push(Formula::not(Formula::adj(&*vars[i], &*vars[j])));
                nonedge_lits.push(Formula::not(Formula::eq(&*vars[i], &*vars[j])));
            }
        }
    }
    edge_lits.extend(nonedge_lits);
    if edge_lits.is_empty() {
        return Ok(Formula::eq(&*vars[0], &*vars[0]));
    }
    Ok(Formula::and(edge_lits))
}

/// The obvious sentence for "contains an induced copy of `pattern`":
/// existentially quantify one variable per pattern vertex over the pattern
/// predicate. Depth equals the number of pattern vertices.
///
/// The zero-vertex pattern holds on every graph; since the AST has no
/// nullary truth constant this one case returns the depth-1 tautology
/// `Ax_1.(x_1 = x_1)` instead of a depth-0 sentence.
pub fn synth_trivial(pattern: &Graph) -> Formula {
    let n = pattern.n();
    if n == 0 {
        return Formula::forall("x_1", Formula::eq("x_1", "x_1"));
    }
    let vars: Vec<String> = (1..=n).map(var).collect();
    let body = synth_pattern_predicate(pattern, &vars).expect("arity matches by construction");
    vars.into_iter()
        .rev()
        .fold(body, |acc, v| Formula::exists(v, acc))
}

/// Sentence of depth `v(H) + 3` expressing "contains an induced copy of
/// `P3 + K1 + H`" — two quantifiers below the obvious bound for that
/// pattern. See [`thm11_formula`] for the exact shape.
pub fn synth_thm11(extension: &Graph) -> Formula {
    thm11_formula(extension, false)
}

/// Deliberately broken variant of [`synth_thm11`]: the first non-adjacency
/// literal of the independence block is dropped. Exists so the verification
/// pipeline can demonstrate it catches a single missing literal.
pub fn synth_thm11_weakened(extension: &Graph) -> Formula {
    thm11_formula(extension, true)
}

fn var(i: usize) -> String {
    format!("x_{i}")
}

/// With `m = v(H)` and variables `x_1 .. x_{m+4}`:
///
/// ```text
/// phi = E x_5 ... E x_{m+4} E x_1 (
///         [E x_3 E x_4  P0(x_1, x_3, x_4, x_5..x_{m+4})]
///       & [E x_2 ( [E x_4  P1(x_1, x_2, x_4, x_5..x_{m+4})]
///                & [E x_3  P2(x_1, x_2, x_3, x_5..x_{m+4})] )] )
/// ```
///
/// where, over formal slots `1..=m+3` (slots `4..` carry the copy of H):
/// - `P0`: H-predicate on the tail; slots 1..3 pairwise distinct,
///   non-adjacent, and fully detached from the tail;
/// - `P1`: like `P0` except slots 1,2 are adjacent;
/// - `P2`: H-predicate on the tail; slots 1-2-3 form an induced path,
///   detached from the tail.
///
/// Correctness does not need the three picked vertices of `P0`/`P1` to
/// coincide with those of `P2`; the case analysis over how the witnesses
/// overlap is what buys the two saved quantifiers.
fn thm11_formula(extension: &Graph, weaken_p0: bool) -> Formula {
    let m = extension.n();

    // literals of the H-predicate over actual variable indices `hv`
    let p_h = |hv: &dyn Fn(usize) -> usize| -> Vec<Formula> {
        let mut edge_lits = Vec::new();
        let mut nonedge_lits = Vec::new();
        for i in 0..m {
            for j in (i + 1)..m {
                let (a, b) = (var(hv(i)), var(hv(j)));
                if extension.has_edge(i, j) {
                    edge_lits.push(Formula::adj(a, b));
                } else {
                    nonedge_lits.push(Formula::not(Formula::adj(a.clone(), b.clone())));
                    nonedge_lits.push(Formula::not(Formula::eq(a, b)));
                }
            }
        }
        edge_lits.extend(nonedge_lits);
        edge_lits
    };

    // `x_i != x_j & x_i !~ x_j` over actual indices
    let detach = |i: usize, j: usize, out: &mut Vec<Formula>| {
        out.push(Formula::not(Formula::eq(var(i), var(j))));
        out.push(Formula::not(Formula::adj(var(i), var(j))));
    };

    // formal slot -> actual variable index; slots 4..=m+3 always map to
    // actual x_5..x_{m+4}
    let actual = |head: [usize; 3]| {
        move |slot: usize| -> usize {
            match slot {
                1..=3 => head[slot - 1],
                s => s + 1,
            }
        }
    };

    // P0(head): everything among slots 1..3 and tail pairwise detached
    let p0 = {
        let a = actual([1, 3, 4]);
        let mut lits = p_h(&|t| a(t + 4));
        let mut first_pair = true;
        for i in 1..=3usize {
            for j in (i + 1)..=(m + 3) {
                lits.push(Formula::not(Formula::eq(var(a(i)), var(a(j)))));
                if !(weaken_p0 && first_pair) {
                    lits.push(Formula::not(Formula::adj(var(a(i)), var(a(j)))));
                }
                first_pair = false;
            }
        }
        Formula::and(lits)
    };

    // P1(head): slots 1,2 adjacent, everything else detached
    let p1 = {
        let a = actual([1, 2, 4]);
        let mut lits = p_h(&|t| a(t + 4));
        lits.push(Formula::adj(var(a(1)), var(a(2))));
        for j in 3..=(m + 3) {
            detach(a(1), a(j), &mut lits);
        }
        for i in 2..=3usize {
            for j in (i + 1)..=(m + 3) {
                detach(a(i), a(j), &mut lits);
            }
        }
        Formula::and(lits)
    };

    // P2(head): slots 1-2-3 an induced path, detached from the tail
    let p2 = {
        let a = actual([1, 2, 3]);
        let mut lits = p_h(&|t| a(t + 4));
        lits.push(Formula::adj(var(a(1)), var(a(2))));
        lits.push(Formula::adj(var(a(2)), var(a(3))));
        lits.push(Formula::not(Formula::eq(var(a(1)), var(a(3)))));
        lits.push(Formula::not(Formula::adj(var(a(1)), var(a(3)))));
        for i in 1..=3usize {
            for j in 4..=(m + 3) {
                detach(a(i), a(j), &mut lits);
            }
        }
        Formula::and(lits)
    };

    let branch0 = Formula::exists(var(3), Formula::exists(var(4), p0));
    let branch1 = Formula::exists(var(4), p1);
    let branch2 = Formula::exists(var(3), p2);
    let branch12 = Formula::exists(var(2), Formula::and(vec![branch1, branch2]));

    let mut out = Formula::exists(var(1), Formula::and(vec![branch0, branch12]));
    for i in (5..=(m + 4)).rev() {
        out = Formula::exists(var(i), out);
    }
    out
}

/// Rewrites each adjacency atom `u ~ v` as `!(u~v) & !(u=v)`, leaving
/// equality atoms alone, so that for every graph `G`:
/// `evaluate(complement_transform(f), G) == evaluate(f, complement(G))`.
/// Quantifier depth is unchanged.
pub fn complement_transform(f: &Formula) -> Formula {
    match f {
        Formula::Exists(v, b) => Formula::exists(v.clone(), complement_transform(b)),
        Formula::Forall(v, b) => Formula::forall(v.clone(), complement_transform(b)),
        Formula::Not(inner) => Formula::not(complement_transform(inner)),
        Formula::And(items) => Formula::And(items.iter().map(complement_transform).collect()),
        Formula::Or(items) => Formula::Or(items.iter().map(complement_transform).collect()),
        Formula::Implies(a, b) => {
            Formula::implies(complement_transform(a), complement_transform(b))
        }
        Formula::Adj(u, v) => Formula::and(vec![
            Formula::not(Formula::adj(u.clone(), v.clone())),
            Formula::not(Formula::eq(u.clone(), v.clone())),
        ]),
        Formula::Eq(u, v) => Formula::eq(u.clone(), v.clone()),
    }
}
