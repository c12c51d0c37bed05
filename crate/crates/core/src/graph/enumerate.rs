//! Enumeration of small graphs up to isomorphism.

use super::canon::{canon_key, graph_from_key};
use super::{Graph, GraphError};
use std::collections::BTreeSet;

const ENUM_MAX_VERTICES: usize = 7;

/// One canonically labeled representative per isomorphism class of graphs on
/// exactly `n` vertices, sorted by canonical form. Built by extending the
/// `(n-1)`-vertex representatives with every neighborhood of a new vertex
/// and deduplicating by canonical form.
pub fn enumerate_up_to_iso(n: usize) -> Result<Vec<Graph>, GraphError> {
    if n > ENUM_MAX_VERTICES {
        return Err(GraphError::SizeLimit(format!(
            "enumeration supports up to {ENUM_MAX_VERTICES} vertices, got {n}"
        )));
    }
    let mut keys: BTreeSet<u64> = BTreeSet::new();
    keys.insert(0); // the graph on 0 vertices
    for k in 0..n {
        let mut next = BTreeSet::new();
        for &key in &keys {
            let g = graph_from_key(k, key);
            // new vertex k adjacent to each subset of the old vertices
            for hood in 0u64..(1 << k) {
                let mut edges = g.edges();
                for v in 0..k {
                    if hood & (1 << v) != 0 {
                        edges.push((v, k));
                    }
                }
                let ext = Graph::build(k + 1, &edges)?;
                next.insert(canon_key(&ext));
            }
        }
        keys = next;
    }
    Ok(keys.into_iter().map(|key| graph_from_key(n, key)).collect())
}

/// Every representative with at most `n` vertices, smallest sizes first.
pub fn enumerate_all_up_to(n: usize) -> Result<Vec<Graph>, GraphError> {
    let mut out = Vec::new();
    for k in 0..=n {
        out.extend(enumerate_up_to_iso(k)?);
    }
    Ok(out)
}
