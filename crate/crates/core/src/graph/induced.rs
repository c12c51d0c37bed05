//! Induced-subgraph embedding search.

use super::Graph;

/// Searches for an injective map from `pattern` into `host` that preserves
/// adjacency and non-adjacency. Returns the witness map (`witness[i]` is the
/// host vertex carrying pattern vertex `i`) if one exists.
///
/// The empty pattern embeds into every host, including the empty one.
pub fn contains_induced(host: &Graph, pattern: &Graph) -> Option<Vec<usize>> {
    if pattern.n() == 0 {
        return Some(Vec::new());
    }
    if pattern.n() > host.n() {
        return None;
    }
    // Assign high-degree pattern vertices first: they constrain the most.
    let mut order: Vec<usize> = pattern.vertices().collect();
    order.sort_by_key(|&v| std::cmp::Reverse(pattern.degree(v)));

    let mut map = vec![usize::MAX; pattern.n()];
    if embed(host, pattern, &order, 0, 0, &mut map) {
        Some(map)
    } else {
        None
    }
}

fn embed(
    host: &Graph,
    pattern: &Graph,
    order: &[usize],
    step: usize,
    used: u64,
    map: &mut [usize],
) -> bool {
    if step == order.len() {
        return true;
    }
    let p = order[step];
    let pdeg = pattern.degree(p);
    let p_nondeg = pattern.n() - 1 - pdeg;
    for v in host.vertices() {
        if used & (1 << v) != 0 {
            continue;
        }
        let vdeg = host.degree(v);
        if vdeg < pdeg || host.n() - 1 - vdeg < p_nondeg {
            continue;
        }
        let consistent = order[..step]
            .iter()
            .all(|&q| pattern.has_edge(p, q) == host.has_edge(v, map[q]));
        if !consistent {
            continue;
        }
        map[p] = v;
        if embed(host, pattern, order, step + 1, used | (1 << v), map) {
            return true;
        }
        map[p] = usize::MAX;
    }
    false
}

/// Slow reference check: enumerates every `v(pattern)`-subset of the host and
/// every bijection onto it. Used to cross-check `contains_induced`; shares no
/// code with the backtracking path.
pub fn subset_induced_oracle(host: &Graph, pattern: &Graph) -> bool {
    let k = pattern.n();
    if k == 0 {
        return true;
    }
    if k > host.n() {
        return false;
    }
    let mut subset = Vec::with_capacity(k);
    subsets(host.n(), k, 0, &mut subset, &mut |s| {
        let mut perm: Vec<usize> = (0..k).collect();
        permutations(&mut perm, 0, &mut |p| {
            // pattern vertex i sits on host vertex s[p[i]]
            (0..k).all(|i| {
                (i + 1..k).all(|j| pattern.has_edge(i, j) == host.has_edge(s[p[i]], s[p[j]]))
            })
        })
    })
}

fn subsets(
    n: usize,
    k: usize,
    from: usize,
    acc: &mut Vec<usize>,
    found: &mut impl FnMut(&[usize]) -> bool,
) -> bool {
    if acc.len() == k {
        return found(acc);
    }
    for v in from..n {
        if n - v < k - acc.len() {
            break;
        }
        acc.push(v);
        if subsets(n, k, v + 1, acc, found) {
            acc.pop();
            return true;
        }
        acc.pop();
    }
    false
}

fn permutations(perm: &mut Vec<usize>, step: usize, check: &mut impl FnMut(&[usize]) -> bool) -> bool {
    if step == perm.len() {
        return check(perm);
    }
    for i in step..perm.len() {
        perm.swap(step, i);
        if permutations(perm, step + 1, check) {
            perm.swap(step, i);
            return true;
        }
        perm.swap(step, i);
    }
    false
}

#[cfg(test)]
mod tests {
    use super::super::tests::graph_from_code;
    use super::*;
    use crate::graph::{generate, FamilySpec};

    fn path(n: usize) -> Graph {
        generate(&FamilySpec::Path(n)).unwrap()
    }

    #[test]
    fn p3_inside_p4() {
        let w = contains_induced(&path(4), &path(3)).unwrap();
        // verify the witness really is an induced embedding
        let p3 = path(3);
        let p4 = path(4);
        for i in 0..3 {
            for j in (i + 1)..3 {
                assert_eq!(p3.has_edge(i, j), p4.has_edge(w[i], w[j]));
            }
        }
    }

    #[test]
    fn p3_plus_k1_not_inside_p4() {
        let p3k1 = path(3).union(&Graph::empty(1).unwrap()).unwrap();
        assert!(contains_induced(&path(4), &p3k1).is_none());
        assert!(!subset_induced_oracle(&path(4), &p3k1));
    }

    #[test]
    fn k22_inside_almost_multipartite() {
        let g = generate(&FamilySpec::AlmostMultipartite {
            classes: 4,
            parts: 2,
            components: 1,
        })
        .unwrap();
        let k22 = generate(&FamilySpec::CompleteMultipartite(vec![2, 2])).unwrap();
        assert!(contains_induced(&g, &k22).is_some());
    }

    #[test]
    fn empty_pattern_always_embeds() {
        let none = Graph::empty(0).unwrap();
        assert_eq!(contains_induced(&path(3), &none), Some(vec![]));
        assert_eq!(contains_induced(&none, &none), Some(vec![]));
        assert!(contains_induced(&none, &path(1)).is_none());
    }

    #[test]
    fn agrees_with_subset_oracle_exhaustively() {
        // all host graphs on 5 vertices x all patterns on up to 3 vertices;
        // wider sweeps run in the acceptance suite
        for host_code in 0u64..(1 << 10) {
            let host = graph_from_code(5, host_code);
            for pn in 0..=3usize {
                let bits = pn * pn.saturating_sub(1) / 2;
                for pat_code in 0u64..(1 << bits) {
                    let pat = graph_from_code(pn, pat_code);
                    assert_eq!(
                        contains_induced(&host, &pat).is_some(),
                        subset_induced_oracle(&host, &pat),
                        "host={host:?} pattern={pat:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn witness_is_always_valid() {
        for host_code in 0u64..(1 << 10) {
            let host = graph_from_code(5, host_code);
            for pat_code in 0u64..(1 << 6) {
                let pat = graph_from_code(4, pat_code);
                if let Some(w) = contains_induced(&host, &pat) {
                    let mut seen = 0u64;
                    for &v in &w {
                        assert_eq!(seen & (1 << v), 0, "witness not injective");
                        seen |= 1 << v;
                    }
                    for i in 0..4 {
                        for j in (i + 1)..4 {
                            assert_eq!(pat.has_edge(i, j), host.has_edge(w[i], w[j]));
                        }
                    }
                }
            }
        }
    }
}
