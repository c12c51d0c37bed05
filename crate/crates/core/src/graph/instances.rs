//! Registry of named (pattern, host pair, round count) instances.
//!
//! Each instance packages a pattern `F` together with a pair of hosts
//! `(G, H)` such that `G` contains an induced copy of `F`, `H` does not, and
//! the Duplicator is expected to win the `rounds`-round game on `(G, H)` —
//! the raw material for a lower-bound certificate `D[F] >= rounds + 1`.

use super::family::{generate, FamilySpec};
use super::induced::contains_induced;
use super::{Graph, GraphError};

/// Identifier plus parameters for one registry entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NamedInstance {
    /// `F = P3 + m*K1`, hosts `P4 + m*P2` vs `P4 + (m-1)*P2`, `rounds = m+1`.
    Thm1_2 { m: usize },
    /// `F = m` copies of the complete multipartite graph with the given part
    /// sizes; hosts are almost multipartite graphs with `l` resp. `l-1`
    /// classes where `l = v(F)`; `rounds = l-1`. Requires at least two parts
    /// and a largest part of size at least 2.
    Thm2 { m: usize, parts: Vec<usize> },
    /// `F = C5`, hosts `C5 + C6` vs `C6 + C6`, 3 rounds.
    Thm3C5,
    /// `F = C4` with one pendant; hosts are the C4 and C5 suns, 3 rounds.
    Thm3G41,
    /// `F = K1 + diamond`; hosts are doubled almost multipartite graphs,
    /// 3 rounds.
    Thm3Diamond,
    /// `F =` triangle with two disjoint pendants; hosts are apexed doubles
    /// of a matched K4-C4 gadget vs the triangular prism, 3 rounds.
    Thm3G311,
}

/// A constructed instance. The constructor verifies `pattern` embeds in
/// `positive` and not in `negative`.
#[derive(Debug, Clone)]
pub struct InstanceBundle {
    pub name: String,
    pub pattern: Graph,
    pub positive: Graph,
    pub negative: Graph,
    pub rounds: usize,
}

pub fn gen_instance(inst: &NamedInstance) -> Result<InstanceBundle, GraphError> {
    let (pattern, positive, negative, rounds) = match inst {
        NamedInstance::Thm1_2 { m } => {
            let m = *m;
            if m < 1 {
                return Err(GraphError::InvalidFamily("thm1_2 requires m >= 1".into()));
            }
            let p3 = generate(&FamilySpec::Path(3))?;
            let p4 = generate(&FamilySpec::Path(4))?;
            let k2 = generate(&FamilySpec::Complete(2))?;
            let pattern = p3.union(&Graph::empty(m)?)?;
            let positive = p4.union(&k2.copies(m)?)?;
            let negative = p4.union(&k2.copies(m - 1)?)?;
            (pattern, positive, negative, m + 1)
        }
        NamedInstance::Thm2 { m, parts } => {
            let m = *m;
            if m < 1 {
                return Err(GraphError::InvalidFamily("thm2 requires m >= 1".into()));
            }
            if parts.len() < 2 || *parts.last().unwrap_or(&0) < 2 {
                return Err(GraphError::InvalidFamily(
                    "thm2 requires at least 2 parts with the largest of size >= 2".into(),
                ));
            }
            let k = parts.len();
            let block = generate(&FamilySpec::complete_multipartite(parts.clone()))?;
            let pattern = block.copies(m)?;
            let classes = pattern.n();
            let positive = generate(&FamilySpec::AlmostMultipartite {
                classes,
                parts: k,
                components: m,
            })?;
            let negative = generate(&FamilySpec::AlmostMultipartite {
                classes: classes - 1,
                parts: k,
                components: m,
            })?;
            (pattern, positive, negative, classes - 1)
        }
        NamedInstance::Thm3C5 => {
            let c5 = generate(&FamilySpec::Cycle(5))?;
            let c6 = generate(&FamilySpec::Cycle(6))?;
            (c5.clone(), c5.union(&c6)?, c6.copies(2)?, 3)
        }
        NamedInstance::Thm3G41 => {
            let pattern = Graph::build(5, &[(0, 1), (1, 2), (2, 3), (0, 3), (0, 4)])?;
            (pattern, sun(4)?, sun(5)?, 3)
        }
        NamedInstance::Thm3Diamond => {
            let diamond = generate(&FamilySpec::CompleteMultipartite(vec![1, 1, 2]))?;
            let pattern = Graph::empty(1)?.union(&diamond)?;
            let inner_pos = generate(&FamilySpec::AlmostMultipartite {
                classes: 4,
                parts: 3,
                components: 1,
            })?;
            let inner_neg = generate(&FamilySpec::AlmostMultipartite {
                classes: 3,
                parts: 3,
                components: 1,
            })?;
            (pattern, inner_pos.copies(2)?, inner_neg.copies(2)?, 3)
        }
        NamedInstance::Thm3G311 => {
            // triangle 0-1-2 with pendants 3 on 0 and 4 on 1
            let pattern = Graph::build(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 4)])?;
            let positive = apex(&matched_k4_c4()?.copies(2)?)?;
            let negative = apex(&prism()?.copies(2)?)?;
            (pattern, positive, negative, 3)
        }
    };

    if contains_induced(&positive, &pattern).is_none() {
        return Err(GraphError::Instance(format!(
            "{inst}: pattern does not embed in the positive host"
        )));
    }
    if contains_induced(&negative, &pattern).is_some() {
        return Err(GraphError::Instance(format!(
            "{inst}: pattern embeds in the negative host"
        )));
    }
    Ok(InstanceBundle {
        name: inst.to_string(),
        pattern,
        positive,
        negative,
        rounds,
    })
}

/// Cycle of length `c` (vertices `0..c`) with pendant `c+i` hung on cycle
/// vertex `i`.
fn sun(c: usize) -> Result<Graph, GraphError> {
    let mut edges: Vec<_> = (0..c).map(|i| (i, (i + 1) % c)).collect();
    edges.extend((0..c).map(|i| (i, c + i)));
    Graph::build(2 * c, &edges)
}

/// K4 on `0..4`, C4 on `4..8` (4-5-6-7-4), plus the perfect matching
/// `i ~ i+4`. Any other choice of matching gives an isomorphic graph since
/// K4 is complete; a test pins that down.
fn matched_k4_c4() -> Result<Graph, GraphError> {
    let mut edges = vec![(4, 5), (5, 6), (6, 7), (4, 7)];
    for u in 0..4 {
        for v in (u + 1)..4 {
            edges.push((u, v));
        }
        edges.push((u, u + 4));
    }
    Graph::build(8, &edges)
}

/// Triangular prism: K3 on `0..3`, K3 on `3..6`, matching `i ~ i+3`.
fn prism() -> Result<Graph, GraphError> {
    Graph::build(
        6,
        &[
            (0, 1),
            (0, 2),
            (1, 2),
            (3, 4),
            (3, 5),
            (4, 5),
            (0, 3),
            (1, 4),
            (2, 5),
        ],
    )
}

/// Adds one new vertex adjacent to every existing vertex.
fn apex(g: &Graph) -> Result<Graph, GraphError> {
    let n = g.n();
    let mut edges = g.edges();
    edges.extend((0..n).map(|v| (v, n)));
    Graph::build(n + 1, &edges)
}

impl std::fmt::Display for NamedInstance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            NamedInstance::Thm1_2 { m } => write!(f, "thm1_2({m})"),
            NamedInstance::Thm2 { m, parts } => {
                let s: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                write!(f, "thm2({m},{},({}))", parts.len(), s.join(","))
            }
            NamedInstance::Thm3C5 => write!(f, "thm3_c5"),
            NamedInstance::Thm3G41 => write!(f, "thm3_g41"),
            NamedInstance::Thm3Diamond => write!(f, "thm3_diamond"),
            NamedInstance::Thm3G311 => write!(f, "thm3_g311"),
        }
    }
}

/// Anything the `gen` entry point can produce: a family or a registry
/// instance. Parsed from strings like `path(4)`, `thm2(1,2,(2,2))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GenTarget {
    Family(FamilySpec),
    Instance(NamedInstance),
}

impl std::str::FromStr for GenTarget {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let (name, args) = split_name_args(s)?;
        let ints = |args: &[String]| -> Result<Vec<usize>, String> {
            args.iter()
                .map(|a| a.parse::<usize>().map_err(|_| format!("bad integer `{a}`")))
                .collect()
        };
        match name.as_str() {
            "path" | "cycle" | "complete" | "empty" => {
                let v = ints(&args)?;
                if v.len() != 1 {
                    return Err(format!("{name} takes exactly one parameter"));
                }
                let spec = match name.as_str() {
                    "path" => FamilySpec::Path(v[0]),
                    "cycle" => FamilySpec::Cycle(v[0]),
                    "complete" => FamilySpec::Complete(v[0]),
                    _ => FamilySpec::Empty(v[0]),
                };
                Ok(GenTarget::Family(spec))
            }
            "complete_multipartite" => {
                let v = ints(&args)?;
                if v.is_empty() {
                    return Err("complete_multipartite needs part sizes".into());
                }
                Ok(GenTarget::Family(FamilySpec::complete_multipartite(v)))
            }
            "almost_multipartite" => {
                let v = ints(&args)?;
                if v.len() != 3 {
                    return Err("almost_multipartite takes (classes,parts,components)".into());
                }
                Ok(GenTarget::Family(FamilySpec::AlmostMultipartite {
                    classes: v[0],
                    parts: v[1],
                    components: v[2],
                }))
            }
            "thm1_2" => {
                let v = ints(&args)?;
                if v.len() != 1 {
                    return Err("thm1_2 takes (m)".into());
                }
                Ok(GenTarget::Instance(NamedInstance::Thm1_2 { m: v[0] }))
            }
            "thm2" => {
                if args.len() != 3 {
                    return Err("thm2 takes (m,k,(n1,...,nk))".into());
                }
                let m: usize = args[0].parse().map_err(|_| "bad m".to_string())?;
                let k: usize = args[1].parse().map_err(|_| "bad k".to_string())?;
                let inner = args[2]
                    .strip_prefix('(')
                    .and_then(|t| t.strip_suffix(')'))
                    .ok_or("part sizes must be parenthesized")?;
                let parts: Vec<usize> = inner
                    .split(',')
                    .map(|t| t.trim().parse().map_err(|_| format!("bad part size `{t}`")))
                    .collect::<Result<_, _>>()?;
                if parts.len() != k {
                    return Err(format!("k={k} but {} part sizes given", parts.len()));
                }
                let mut parts = parts;
                parts.sort_unstable();
                Ok(GenTarget::Instance(NamedInstance::Thm2 { m, parts }))
            }
            "thm3_c5" => Ok(GenTarget::Instance(NamedInstance::Thm3C5)),
            "thm3_g41" => Ok(GenTarget::Instance(NamedInstance::Thm3G41)),
            "thm3_diamond" => Ok(GenTarget::Instance(NamedInstance::Thm3Diamond)),
            "thm3_g311" => Ok(GenTarget::Instance(NamedInstance::Thm3G311)),
            other => Err(format!("unknown family or instance `{other}`")),
        }
    }
}

/// Splits `name(arg,arg,(nested,args))` into the name and top-level args.
fn split_name_args(s: &str) -> Result<(String, Vec<String>), String> {
    match s.find('(') {
        None => {
            if s.is_empty() {
                Err("empty spec".into())
            } else {
                Ok((s.to_string(), Vec::new()))
            }
        }
        Some(open) => {
            if !s.ends_with(')') {
                return Err(format!("unbalanced parentheses in `{s}`"));
            }
            let name = s[..open].to_string();
            let body = &s[open + 1..s.len() - 1];
            let mut args = Vec::new();
            let mut depth = 0usize;
            let mut cur = String::new();
            for ch in body.chars() {
                match ch {
                    '(' => {
                        depth += 1;
                        cur.push(ch);
                    }
                    ')' => {
                        depth = depth.checked_sub(1).ok_or("unbalanced parentheses")?;
                        cur.push(ch);
                    }
                    ',' if depth == 0 => {
                        args.push(cur.trim().to_string());
                        cur.clear();
                    }
                    _ => cur.push(ch),
                }
            }
            if depth != 0 {
                return Err(format!("unbalanced parentheses in `{s}`"));
            }
            if !cur.trim().is_empty() {
                args.push(cur.trim().to_string());
            }
            Ok((name, args))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_isomorphic;

    #[test]
    fn thm1_2_m1_shapes() {
        let b = gen_instance(&NamedInstance::Thm1_2 { m: 1 }).unwrap();
        assert_eq!(b.pattern.n(), 4);
        assert_eq!(b.positive.n(), 6);
        assert_eq!(b.negative.n(), 4);
        assert_eq!(b.rounds, 2);
    }

    #[test]
    fn thm2_1_2_22_shapes() {
        let b = gen_instance(&NamedInstance::Thm2 {
            m: 1,
            parts: vec![2, 2],
        })
        .unwrap();
        assert_eq!(b.pattern.n(), 4);
        assert_eq!(b.positive.n(), 8);
        assert_eq!(b.negative.n(), 6);
        assert_eq!(b.rounds, 3);
    }

    #[test]
    fn thm2_rejects_out_of_regime_parameters() {
        assert!(gen_instance(&NamedInstance::Thm2 {
            m: 1,
            parts: vec![1, 1],
        })
        .is_err());
        assert!(gen_instance(&NamedInstance::Thm2 {
            m: 1,
            parts: vec![3],
        })
        .is_err());
    }

    #[test]
    fn thm3_vertex_counts() {
        let c5 = gen_instance(&NamedInstance::Thm3C5).unwrap();
        assert_eq!((c5.positive.n(), c5.negative.n()), (11, 12));
        let g41 = gen_instance(&NamedInstance::Thm3G41).unwrap();
        assert_eq!((g41.positive.n(), g41.negative.n()), (8, 10));
        let dia = gen_instance(&NamedInstance::Thm3Diamond).unwrap();
        assert_eq!((dia.positive.n(), dia.negative.n()), (24, 18));
        let g311 = gen_instance(&NamedInstance::Thm3G311).unwrap();
        assert_eq!((g311.positive.n(), g311.negative.n()), (17, 13));
    }

    #[test]
    fn matching_choice_is_irrelevant_for_the_k4_c4_gadget() {
        let canonical = matched_k4_c4().unwrap();
        // same K4 and C4, matching twisted by a rotation and a swap
        for matching in [[5, 6, 7, 4], [4, 5, 7, 6], [6, 4, 5, 7]] {
            let mut edges = vec![(4, 5), (5, 6), (6, 7), (4, 7)];
            for (u, &partner) in matching.iter().enumerate() {
                for v in (u + 1)..4 {
                    edges.push((u, v));
                }
                edges.push((u, partner));
            }
            let variant = Graph::build(8, &edges).unwrap();
            assert!(is_isomorphic(&canonical, &variant));
        }
    }

    #[test]
    fn gen_target_parsing() {
        use std::str::FromStr;
        assert_eq!(
            GenTarget::from_str("path(4)").unwrap(),
            GenTarget::Family(FamilySpec::Path(4))
        );
        assert_eq!(
            GenTarget::from_str("thm2(1,2,(2,2))").unwrap(),
            GenTarget::Instance(NamedInstance::Thm2 {
                m: 1,
                parts: vec![2, 2]
            })
        );
        assert_eq!(
            GenTarget::from_str("thm3_g311").unwrap(),
            GenTarget::Instance(NamedInstance::Thm3G311)
        );
        assert!(GenTarget::from_str("thm2(1,3,(2,2))").is_err());
        assert!(GenTarget::from_str("nonsense(1)").is_err());
    }
}
