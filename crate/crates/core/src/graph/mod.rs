//! Finite simple undirected graphs on at most 64 vertices.
//!
//! Vertices are `0..n`. Adjacency is stored as one `u64` neighbor bitset per
//! vertex; graphs are immutable after construction, so they can be shared and
//! copied into solver states cheaply.

mod canon;
mod chromatic;
mod codec;
mod enumerate;
mod family;
mod induced;
mod instances;

pub use canon::{automorphism_orbits, canonicalize, is_isomorphic};
pub use chromatic::chromatic_number;
pub use codec::{decode, encode, GraphFormat};
pub use enumerate::{enumerate_all_up_to, enumerate_up_to_iso};
pub use family::{generate, FamilySpec};
pub use induced::{contains_induced, subset_induced_oracle};
pub use instances::{gen_instance, GenTarget, InstanceBundle, NamedInstance};

use rand::Rng;
use thiserror::Error;

/// Hard cap on the number of vertices: one machine word of adjacency per
/// vertex covers every construction and solver instance this crate handles.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph has {0} vertices, limit is {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),
    #[error("instance construction failed: {0}")]
    Instance(String),
    #[error("size limit exceeded: {0}")]
    SizeLimit(String),
    #[error("{0}")]
    Codec(#[from] codec::CodecError),
}

/// A finite simple undirected graph with 0-indexed vertices.
///
/// Invariants enforced by every constructor: no self-loops, symmetric
/// adjacency, `n <= MAX_VERTICES`. `n` may be 0 (the empty universe).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph {
            n,
            adj: vec![0; n],
        })
    }

    /// Builds a graph from an explicit edge set. Edges are unordered pairs;
    /// duplicates collapse. Rejects out-of-range endpoints and self-loops.
    pub fn build(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.adj[u] |= 1 << v;
            g.adj[v] |= 1 << u;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.n && v < self.n);
        self.adj[u] & (1 << v) != 0
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Neighbor bitset of `v`.
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// All edges as pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            let mut m = self.adj[u] >> (u + 1) << (u + 1);
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                out.push((u, v));
                m &= m - 1;
            }
        }
        out
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    /// Disjoint union; vertices of `other` are relabeled to follow `self`'s.
    pub fn union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let mut adj = Vec::with_capacity(n);
        adj.extend_from_slice(&self.adj);
        adj.extend(other.adj.iter().map(|m| m << self.n));
        Ok(Graph { n, adj })
    }

    /// Disjoint union of `m` relabeled copies of `self`. `m = 0` yields the
    /// graph on zero vertices.
    pub fn copies(&self, m: usize) -> Result<Graph, GraphError> {
        let n = self.n.saturating_mul(m);
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let mut adj = Vec::with_capacity(n);
        for c in 0..m {
            adj.extend(self.adj.iter().map(|mask| mask << (c * self.n)));
        }
        Ok(Graph { n, adj })
    }

    /// Edge complement: distinct vertices adjacent iff they were not.
    pub fn complement(&self) -> Graph {
        let full = if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        };
        let adj = (0..self.n)
            .map(|v| !self.adj[v] & full & !(1 << v))
            .collect();
        Graph { n: self.n, adj }
    }

    /// Subgraph induced on `verts`; vertex `i` of the result is `verts[i]`.
    /// `verts` must be distinct and in range.
    pub fn induced(&self, verts: &[usize]) -> Graph {
        let n = verts.len();
        let mut adj = vec![0u64; n];
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                debug_assert_ne!(u, v);
                if self.has_edge(u, v) {
                    adj[i] |= 1 << j;
                    adj[j] |= 1 << i;
                }
            }
        }
        Graph { n, adj }
    }

    /// Relabels vertices: vertex `v` of the result is `perm[v]` of `self`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        self.induced(perm)
    }

    /// Erdos-Renyi sample G(n, p).
    pub fn random<R: Rng>(n: usize, p: f64, rng: &mut R) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n)?;
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.random_bool(p) {
                    g.adj[u] |= 1 << v;
                    g.adj[v] |= 1 << u;
                }
            }
        }
        Ok(g)
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}
