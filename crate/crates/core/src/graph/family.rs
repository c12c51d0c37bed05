//! Parameterized graph families with fixed, documented vertex numbering so
//! that generated graphs (and everything derived from them) are reproducible
//! byte for byte.

use super::{Graph, GraphError};

/// A named family plus its integer parameters.
///
/// Numbering conventions:
/// - `Path(l)` / `Cycle(l)`: vertices `0..l` in path/cycle order.
/// - `CompleteMultipartite(parts)`: part sizes are kept sorted ascending;
///   vertices are grouped part by part; edges join distinct parts.
/// - `AlmostMultipartite { classes: l, parts: k, components: m }`: vertices
///   are triples `(i, j, h)` with class `i in 1..=l`, part `j in 1..=k`,
///   component `h in 1..=m`, numbered lexicographically by `(h, j, i)`.
///   Two vertices are adjacent iff they share a component but differ in both
///   class and part, or share a class and differ in component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Empty(usize),
    CompleteMultipartite(Vec<usize>),
    AlmostMultipartite {
        classes: usize,
        parts: usize,
        components: usize,
    },
}

impl FamilySpec {
    /// Normalizing constructor: part sizes are sorted ascending.
    pub fn complete_multipartite(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable();
        FamilySpec::CompleteMultipartite(parts)
    }
}

pub fn generate(spec: &FamilySpec) -> Result<Graph, GraphError> {
    match *spec {
        FamilySpec::Path(l) => {
            require(l >= 1, "path needs at least 1 vertex")?;
            let edges: Vec<_> = (0..l.saturating_sub(1)).map(|i| (i, i + 1)).collect();
            Graph::build(l, &edges)
        }
        FamilySpec::Cycle(l) => {
            require(l >= 3, "cycle needs at least 3 vertices")?;
            let edges: Vec<_> = (0..l).map(|i| (i, (i + 1) % l)).collect();
            Graph::build(l, &edges)
        }
        FamilySpec::Complete(l) => {
            require(l >= 1, "complete graph needs at least 1 vertex")?;
            let mut edges = Vec::new();
            for u in 0..l {
                for v in (u + 1)..l {
                    edges.push((u, v));
                }
            }
            Graph::build(l, &edges)
        }
        FamilySpec::Empty(l) => Graph::empty(l),
        FamilySpec::CompleteMultipartite(ref parts) => {
            require(!parts.is_empty(), "needs at least one part")?;
            require(parts.iter().all(|&p| p >= 1), "part sizes must be >= 1")?;
            let mut parts = parts.clone();
            parts.sort_unstable();
            let n: usize = parts.iter().sum();
            let part_of = |v: usize| {
                let mut acc = 0;
                for (idx, &p) in parts.iter().enumerate() {
                    acc += p;
                    if v < acc {
                        return idx;
                    }
                }
                unreachable!()
            };
            let mut edges = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    if part_of(u) != part_of(v) {
                        edges.push((u, v));
                    }
                }
            }
            Graph::build(n, &edges)
        }
        FamilySpec::AlmostMultipartite {
            classes,
            parts,
            components,
        } => {
            require(
                classes >= 1 && parts >= 1 && components >= 1,
                "all parameters must be >= 1",
            )?;
            let n = classes
                .checked_mul(parts)
                .and_then(|x| x.checked_mul(components))
                .ok_or(GraphError::TooManyVertices(usize::MAX))?;
            // index(i, j, h), all 1-based, lexicographic by (h, j, i)
            let coords = |v: usize| {
                let i = v % classes + 1;
                let j = v / classes % parts + 1;
                let h = v / (classes * parts) + 1;
                (i, j, h)
            };
            let mut edges = Vec::new();
            for u in 0..n {
                let (i1, j1, h1) = coords(u);
                for v in (u + 1)..n {
                    let (i2, j2, h2) = coords(v);
                    let same_component = h1 == h2 && i1 != i2 && j1 != j2;
                    let same_class = i1 == i2 && h1 != h2;
                    if same_component || same_class {
                        edges.push((u, v));
                    }
                }
            }
            Graph::build(n, &edges)
        }
    }
}

fn require(cond: bool, msg: &str) -> Result<(), GraphError> {
    if cond {
        Ok(())
    } else {
        Err(GraphError::InvalidFamily(msg.into()))
    }
}

impl std::fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FamilySpec::Path(l) => write!(f, "path({l})"),
            FamilySpec::Cycle(l) => write!(f, "cycle({l})"),
            FamilySpec::Complete(l) => write!(f, "complete({l})"),
            FamilySpec::Empty(l) => write!(f, "empty({l})"),
            FamilySpec::CompleteMultipartite(parts) => {
                let s: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                write!(f, "complete_multipartite({})", s.join(","))
            }
            FamilySpec::AlmostMultipartite {
                classes,
                parts,
                components,
            } => write!(f, "almost_multipartite({classes},{parts},{components})"),
        }
    }
}
