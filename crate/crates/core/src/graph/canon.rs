//! Canonical forms, isomorphism, and automorphism orbits by pruned
//! brute-force search. Adequate for the small graphs this crate works with;
//! not a general-purpose canonical labeler.

use super::codec::{encode, GraphFormat};
use super::induced::contains_induced;
use super::{Graph, GraphError};

/// Canonical forms are limited to this many vertices (45 triangle bits fit a
/// single word and the permutation search stays tractable).
pub const CANON_MAX_VERTICES: usize = 10;

const ORBIT_NODE_BUDGET: u64 = 20_000_000;

/// Packs the upper-triangle adjacency of `g` under `perm` into a word,
/// column order (0,1),(0,2),(1,2),(0,3),... with the first pair in the most
/// significant position, so integer order is lexicographic bit order.
fn pack_key(g: &Graph, perm: &[usize]) -> u64 {
    let n = g.n();
    let mut key = 0u64;
    for j in 1..n {
        for i in 0..j {
            key <<= 1;
            if g.has_edge(perm[i], perm[j]) {
                key |= 1;
            }
        }
    }
    key
}

/// Minimum packed key over all vertex permutations.
pub(crate) fn canon_key(g: &Graph) -> u64 {
    let n = g.n();
    if n < 2 {
        return 0;
    }
    // Regular extremes (edgeless, complete) have a constant key; skip the
    // factorial walk that pruning cannot help there.
    if g.vertices().all(|v| g.degree(v) == 0) {
        return 0;
    }
    if g.vertices().all(|v| g.degree(v) == n - 1) {
        return pack_key(g, &(0..n).collect::<Vec<_>>());
    }

    let total_bits = n * (n - 1) / 2;
    let mut best = pack_key(g, &(0..n).collect::<Vec<_>>());
    let mut perm = vec![0usize; n];
    let mut used = 0u64;
    search(g, 1, &mut perm, &mut used, 0, 0, total_bits, &mut best);
    best
}

/// Depth-first over positions: `slot` vertices are placed; `prefix` holds the
/// `bits` already-determined triangle bits. Prunes any branch whose prefix
/// exceeds the best complete key found so far.
#[allow(clippy::too_many_arguments)]
fn search(
    g: &Graph,
    slot: usize,
    perm: &mut [usize],
    used: &mut u64,
    prefix: u64,
    bits: usize,
    total_bits: usize,
    best: &mut u64,
) {
    let n = g.n();
    if slot > n {
        if prefix < *best {
            *best = prefix;
        }
        return;
    }
    // `slot` counts placed vertices; on entry with slot == 1 we still need to
    // pick perm[0] (which contributes no bits of its own).
    let pos = slot - 1;
    for v in 0..n {
        if *used & (1 << v) != 0 {
            continue;
        }
        let mut col = 0u64;
        for &placed in &perm[..pos] {
            col <<= 1;
            if g.has_edge(placed, v) {
                col |= 1;
            }
        }
        let new_bits = bits + pos;
        let new_prefix = (prefix << pos) | col;
        if new_prefix > *best >> (total_bits - new_bits) {
            continue;
        }
        perm[pos] = v;
        *used |= 1 << v;
        search(g, slot + 1, perm, used, new_prefix, new_bits, total_bits, best);
        *used &= !(1 << v);
    }
}

/// Rebuilds the graph whose packed key is `key`.
pub(crate) fn graph_from_key(n: usize, key: u64) -> Graph {
    let total_bits = n.saturating_mul(n.saturating_sub(1)) / 2;
    let mut edges = Vec::new();
    let mut t = 0;
    for j in 1..n {
        for i in 0..j {
            if key & (1 << (total_bits - 1 - t)) != 0 {
                edges.push((i, j));
            }
            t += 1;
        }
    }
    Graph::build(n, &edges).unwrap()
}

/// Canonical byte form: the graph6 encoding of the canonically relabeled
/// graph. Two graphs get equal forms iff they are isomorphic.
pub fn canonicalize(g: &Graph) -> Result<Vec<u8>, GraphError> {
    if g.n() > CANON_MAX_VERTICES {
        return Err(GraphError::SizeLimit(format!(
            "canonical form supports up to {CANON_MAX_VERTICES} vertices, got {}",
            g.n()
        )));
    }
    encode(&graph_from_key(g.n(), canon_key(g)), GraphFormat::Graph6)
}

/// Isomorphism test by direct embedding search (independent of the canonical
/// form machinery, which is cross-checked against it in tests).
pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    if a.degree_sequence() != b.degree_sequence() {
        return false;
    }
    // equal sizes: an induced embedding is a full isomorphism
    contains_induced(b, a).is_some()
}

/// Partitions vertices into automorphism orbits: two vertices share a cell
/// iff some automorphism maps one to the other. Exact; if the search budget
/// is exhausted the discrete partition is returned, which is always sound
/// (it just disables symmetry reduction downstream).
pub fn automorphism_orbits(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut parent: Vec<usize> = (0..n).collect();
    let mut budget = ORBIT_NODE_BUDGET;

    fn find(parent: &mut Vec<usize>, v: usize) -> usize {
        if parent[v] != v {
            let root = find(parent, parent[v]);
            parent[v] = root;
        }
        parent[v]
    }

    for u in 0..n {
        for v in (u + 1)..n {
            if g.degree(u) != g.degree(v) {
                continue;
            }
            if find(&mut parent, u) == find(&mut parent, v) {
                continue;
            }
            match automorphism_mapping(g, u, v, &mut budget) {
                Some(sigma) => {
                    for (x, &y) in sigma.iter().enumerate() {
                        let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
                        if rx != ry {
                            parent[rx] = ry;
                        }
                    }
                }
                None => continue,
                // budget exhausted: sound fallback, no reduction
            }
            if budget == 0 {
                return (0..n).map(|v| vec![v]).collect();
            }
        }
    }

    let mut cells: Vec<Vec<usize>> = vec![Vec::new(); n];
    for v in 0..n {
        let r = find(&mut parent, v);
        cells[r].push(v);
    }
    cells.retain(|c| !c.is_empty());
    cells.sort_by_key(|c| c[0]);
    cells
}

/// Searches for an automorphism of `g` sending `u` to `v`.
fn automorphism_mapping(g: &Graph, u: usize, v: usize, budget: &mut u64) -> Option<Vec<usize>> {
    let n = g.n();
    let mut map = vec![usize::MAX; n];
    let mut used = 0u64;
    map[u] = v;
    used |= 1 << v;
    let order: Vec<usize> = (0..n).filter(|&x| x != u).collect();
    if extend_automorphism(g, &order, 0, &mut map, &mut used, budget) {
        Some(map)
    } else {
        None
    }
}

fn extend_automorphism(
    g: &Graph,
    order: &[usize],
    step: usize,
    map: &mut [usize],
    used: &mut u64,
    budget: &mut u64,
) -> bool {
    if *budget == 0 {
        return false;
    }
    *budget -= 1;
    if step == order.len() {
        return true;
    }
    let x = order[step];
    for w in 0..g.n() {
        if *used & (1 << w) != 0 || g.degree(w) != g.degree(x) {
            continue;
        }
        let ok = (0..g.n()).all(|y| map[y] == usize::MAX || g.has_edge(x, y) == g.has_edge(w, map[y]));
        if !ok {
            continue;
        }
        map[x] = w;
        *used |= 1 << w;
        if extend_automorphism(g, order, step + 1, map, used, budget) {
            return true;
        }
        map[x] = usize::MAX;
        *used &= !(1 << w);
    }
    false
}
