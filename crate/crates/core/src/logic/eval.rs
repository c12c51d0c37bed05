//! Tarskian evaluation of formulas on a fixed graph.

use super::{Formula, LogicError};
use crate::graph::Graph;

/// Partial map from variable names to vertices, for evaluating formulas with
/// free variables. Sentences take the empty assignment.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Assignment {
    binds: Vec<(String, usize)>,
}

impl Assignment {
    pub fn new() -> Self {
        Assignment::default()
    }

    pub fn bind(mut self, var: impl Into<String>, vertex: usize) -> Self {
        self.binds.push((var.into(), vertex));
        self
    }

    pub fn entries(&self) -> &[(String, usize)] {
        &self.binds
    }
}

/// Standard semantics with short-circuiting; an existential over the empty
/// universe is false, a universal is true. Free variables must be covered by
/// `env`. Worst case `O(n^depth * |formula|)`.
pub fn evaluate(f: &Formula, g: &Graph, env: &Assignment) -> Result<bool, LogicError> {
    for (var, vertex) in &env.binds {
        if *vertex >= g.n() {
            return Err(LogicError::AssignmentOutOfRange {
                var: var.clone(),
                vertex: *vertex,
                n: g.n(),
            });
        }
    }
    let mut scope: Vec<(&str, usize)> = env
        .binds
        .iter()
        .map(|(v, x)| (v.as_str(), *x))
        .collect();
    eval(f, g, &mut scope)
}

fn eval<'a>(f: &'a Formula, g: &Graph, scope: &mut Vec<(&'a str, usize)>) -> Result<bool, LogicError> {
    match f {
        Formula::Exists(var, body) => {
            for x in g.vertices() {
                scope.push((var, x));
                let hit = eval(body, g, scope)?;
                scope.pop();
                if hit {
                    return Ok(true);
                }
            }
            Ok(false)
        }
        Formula::Forall(var, body) => {
            for x in g.vertices() {
                scope.push((var, x));
                let hit = eval(body, g, scope)?;
                scope.pop();
                if !hit {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        Formula::Not(inner) => Ok(!eval(inner, g, scope)?),
        Formula::And(items) => {
            for item in items {
                if !eval(item, g, scope)? {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        Formula::Or(items) => {
            for item in items {
                if eval(item, g, scope)? {
                    return Ok(true);
                }
            }
            Ok(false)
        }
        Formula::Implies(a, b) => {
            if !eval(a, g, scope)? {
                Ok(true)
            } else {
                eval(b, g, scope)
            }
        }
        Formula::Adj(u, v) => Ok(g.has_edge(lookup(u, scope)?, lookup(v, scope)?)),
        Formula::Eq(u, v) => Ok(lookup(u, scope)? == lookup(v, scope)?),
    }
}

fn lookup(var: &str, scope: &[(&str, usize)]) -> Result<usize, LogicError> {
    scope
        .iter()
        .rev()
        .find(|(name, _)| *name == var)
        .map(|(_, x)| *x)
        .ok_or_else(|| LogicError::Unbound(var.to_string()))
}
