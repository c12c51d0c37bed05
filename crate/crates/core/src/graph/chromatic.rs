//! Exact chromatic number by backtracking.

use super::{Graph, GraphError};

const CHROMATIC_MAX_VERTICES: usize = 16;

/// Smallest number of colors admitting a proper coloring; 0 for the graph on
/// no vertices. Exact backtracking, limited to 16 vertices.
pub fn chromatic_number(g: &Graph) -> Result<usize, GraphError> {
    if g.n() > CHROMATIC_MAX_VERTICES {
        return Err(GraphError::SizeLimit(format!(
            "chromatic number supports up to {CHROMATIC_MAX_VERTICES} vertices, got {}",
            g.n()
        )));
    }
    if g.n() == 0 {
        return Ok(0);
    }
    let mut order: Vec<usize> = g.vertices().collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    for k in 1..=g.n() {
        let mut colors = vec![usize::MAX; g.n()];
        if colorable(g, &order, 0, k, 0, &mut colors) {
            return Ok(k);
        }
    }
    unreachable!("n colors always suffice")
}

fn colorable(
    g: &Graph,
    order: &[usize],
    step: usize,
    k: usize,
    max_used: usize,
    colors: &mut [usize],
) -> bool {
    if step == order.len() {
        return true;
    }
    let v = order[step];
    // allowing only one brand-new color breaks color-permutation symmetry
    for c in 0..k.min(max_used + 1) {
        let clash = order[..step]
            .iter()
            .any(|&u| colors[u] == c && g.has_edge(u, v));
        if clash {
            continue;
        }
        colors[v] = c;
        if colorable(g, order, step + 1, k, max_used.max(c + 1), colors) {
            return true;
        }
        colors[v] = usize::MAX;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, FamilySpec};

    #[test]
    fn complete_graphs() {
        for l in 1..=6 {
            let k = generate(&FamilySpec::Complete(l)).unwrap();
            assert_eq!(chromatic_number(&k).unwrap(), l);
        }
    }

    #[test]
    fn odd_cycle_needs_three() {
        let c5 = generate(&FamilySpec::Cycle(5)).unwrap();
        assert_eq!(chromatic_number(&c5).unwrap(), 3);
    }

    #[test]
    fn bipartite_needs_two() {
        let k22 = generate(&FamilySpec::CompleteMultipartite(vec![2, 2])).unwrap();
        assert_eq!(chromatic_number(&k22).unwrap(), 2);
    }

    #[test]
    fn degenerate_cases() {
        assert_eq!(chromatic_number(&Graph::empty(0).unwrap()).unwrap(), 0);
        assert_eq!(chromatic_number(&Graph::empty(5).unwrap()).unwrap(), 1);
        assert!(chromatic_number(&Graph::empty(17).unwrap()).is_err());
    }
}
