//! First-order formulas over the graph signature `{~, =}`: AST, quantifier
//! depth, Tarskian evaluation, a textual grammar, and formula synthesizers.

mod eval;
pub mod sample;
mod synth;
mod text;

pub use eval::{evaluate, Assignment};
pub use synth::{
    complement_transform, synth_pattern_predicate, synth_thm11, synth_thm11_weakened,
    synth_trivial,
};
pub use text::{parse, print};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LogicError {
    #[error("parse error at {line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("unbound variable `{0}`")]
    Unbound(String),
    #[error("quantifier shadows in-scope variable `{0}`")]
    Shadowed(String),
    #[error("expected {expected} variables, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("duplicate variable `{0}`")]
    DuplicateVariable(String),
    #[error("pattern predicate needs at least one vertex")]
    EmptyPattern,
    #[error("variable `{var}` assigned vertex {vertex}, but the graph has {n} vertices")]
    AssignmentOutOfRange { var: String, vertex: usize, n: usize },
}

/// A first-order formula. Atoms are adjacency `u ~ v` and equality `u = v`
/// between variables; `And`/`Or` are n-ary with at least two children (use
/// [`Formula::and`] / [`Formula::or`] to build them safely).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    Exists(String, Box<Formula>),
    Forall(String, Box<Formula>),
    Not(Box<Formula>),
    And(Vec<Formula>),
    Or(Vec<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Adj(String, String),
    Eq(String, String),
}

impl Formula {
    pub fn exists(var: impl Into<String>, body: Formula) -> Formula {
        Formula::Exists(var.into(), Box::new(body))
    }

    pub fn forall(var: impl Into<String>, body: Formula) -> Formula {
        Formula::Forall(var.into(), Box::new(body))
    }

    #[allow(clippy::should_implement_trait)] // constructor, not an operator
    pub fn not(f: Formula) -> Formula {
        Formula::Not(Box::new(f))
    }

    pub fn implies(lhs: Formula, rhs: Formula) -> Formula {
        Formula::Implies(Box::new(lhs), Box::new(rhs))
    }

    pub fn adj(u: impl Into<String>, v: impl Into<String>) -> Formula {
        Formula::Adj(u.into(), v.into())
    }

    pub fn eq(u: impl Into<String>, v: impl Into<String>) -> Formula {
        Formula::Eq(u.into(), v.into())
    }

    /// Conjunction; a single item collapses to itself.
    ///
    /// # Panics
    /// On an empty list — the AST has no nullary truth constant.
    pub fn and(mut items: Vec<Formula>) -> Formula {
        match items.len() {
            0 => panic!("empty conjunction"),
            1 => items.pop().unwrap(),
            _ => Formula::And(items),
        }
    }

    /// Disjunction; a single item collapses to itself.
    ///
    /// # Panics
    /// On an empty list.
    pub fn or(mut items: Vec<Formula>) -> Formula {
        match items.len() {
            0 => panic!("empty disjunction"),
            1 => items.pop().unwrap(),
            _ => Formula::Or(items),
        }
    }

    /// Longest chain of nested quantifiers along any root-to-leaf path.
    pub fn quantifier_depth(&self) -> usize {
        match self {
            Formula::Exists(_, b) | Formula::Forall(_, b) => 1 + b.quantifier_depth(),
            Formula::Not(f) => f.quantifier_depth(),
            Formula::And(items) | Formula::Or(items) => items
                .iter()
                .map(Formula::quantifier_depth)
                .max()
                .unwrap_or(0),
            Formula::Implies(a, b) => a.quantifier_depth().max(b.quantifier_depth()),
            Formula::Adj(..) | Formula::Eq(..) => 0,
        }
    }

    /// Checks the sentence invariants: every atom variable is bound by an
    /// enclosing quantifier and no quantifier shadows an in-scope variable.
    pub fn check_sentence(&self) -> Result<(), LogicError> {
        fn walk(f: &Formula, scope: &mut Vec<String>) -> Result<(), LogicError> {
            match f {
                Formula::Exists(v, b) | Formula::Forall(v, b) => {
                    if scope.contains(v) {
                        return Err(LogicError::Shadowed(v.clone()));
                    }
                    scope.push(v.clone());
                    walk(b, scope)?;
                    scope.pop();
                    Ok(())
                }
                Formula::Not(inner) => walk(inner, scope),
                Formula::And(items) | Formula::Or(items) => {
                    items.iter().try_for_each(|i| walk(i, scope))
                }
                Formula::Implies(a, b) => {
                    walk(a, scope)?;
                    walk(b, scope)
                }
                Formula::Adj(u, v) | Formula::Eq(u, v) => {
                    for x in [u, v] {
                        if !scope.contains(x) {
                            return Err(LogicError::Unbound(x.clone()));
                        }
                    }
                    Ok(())
                }
            }
        }
        walk(self, &mut Vec::new())
    }
}

/// Convenience alias matching the operation vocabulary.
pub fn quantifier_depth(f: &Formula) -> usize {
    f.quantifier_depth()
}
