//! Scripted Duplicator policies for the registry instances, plus an
//! exhaustive adversarial verifier that tries every legal Spoiler line
//! against a policy.
//!
//! Policies are deterministic response rules; the state they need (class
//! maps, block matchings) is reconstructed from the configuration on every
//! call, which keeps them trivially safe under the verifier's backtracking.

use super::{Configuration, GameError, Move, Side, Winner};
use crate::graph::{Graph, NamedInstance};

pub trait DuplicatorPolicy {
    fn name(&self) -> &str;

    /// The response vertex in the graph opposite to `mv.side`. Must satisfy
    /// the no-repeat rule or report an error; the verifier checks the rest.
    fn respond(&self, cfg: &Configuration, mv: Move) -> Result<usize, GameError>;
}

/// Builds the scripted policy matching a registry instance. Only the
/// parameterized instances have scripted strategies; the solver re-derives
/// the outcomes of everything else.
pub fn scripted_policy(inst: &NamedInstance) -> Result<Box<dyn DuplicatorPolicy>, GameError> {
    match inst {
        NamedInstance::Thm1_2 { m } => Ok(Box::new(Thm12Policy { m: *m })),
        NamedInstance::Thm2 { m, parts } => Ok(Box::new(Thm2Policy {
            classes: *m * parts.iter().sum::<usize>(),
            parts: parts.len(),
            components: *m,
        })),
        other => Err(GameError::UnknownPolicy(other.to_string())),
    }
}

/// Plays every legal Spoiler move sequence of length `rounds` against the
/// policy. Returns true iff the policy's replies keep the configuration a
/// partial isomorphism on every branch; otherwise the offending transcript
/// comes back.
pub fn verify_policy(
    left: &Graph,
    right: &Graph,
    rounds: usize,
    policy: &dyn DuplicatorPolicy,
) -> (bool, Option<Transcript>) {
    let mut cfg = Configuration::new(left, right);
    let mut history = Vec::new();
    match adversary(&mut cfg, &mut history, 1, rounds, policy) {
        None => (true, None),
        Some(t) => (false, Some(t)),
    }
}

fn adversary(
    cfg: &mut Configuration,
    history: &mut Vec<TranscriptRound>,
    round: usize,
    rounds: usize,
    policy: &dyn DuplicatorPolicy,
) -> Option<Transcript> {
    if round > rounds {
        return None;
    }
    for side in [Side::Left, Side::Right] {
        let picks: Vec<usize> = cfg.unchosen(side).collect();
        for v in picks {
            let mv = Move { side, vertex: v };
            let failed = |history: &[TranscriptRound], note: String| {
                Some(Transcript {
                    rounds: history.to_vec(),
                    failure: Some(format!("round {round}: S {side} {v}; {note}")),
                    winner: Winner::Spoiler,
                })
            };
            let w = match policy.respond(cfg, mv) {
                Ok(w) => w,
                Err(e) => return failed(history, e.to_string()),
            };
            let other = side.other();
            if cfg.is_chosen(other, w) || w >= graph_of(cfg, other).n() {
                return failed(history, format!("illegal response D {other} {w}"));
            }
            let (x, y) = super::solve::oriented(mv, w);
            if !cfg.pair_extends_iso(x, y) {
                return failed(
                    history,
                    format!("response D {other} {w} breaks the partial isomorphism"),
                );
            }
            cfg.push_unchecked(x, y);
            history.push(TranscriptRound {
                round,
                spoiler: mv,
                duplicator: Move {
                    side: other,
                    vertex: w,
                },
            });
            let result = adversary(cfg, history, round + 1, rounds, policy);
            history.pop();
            cfg.pop();
            if result.is_some() {
                return result;
            }
        }
    }
    None
}

fn graph_of<'a>(cfg: &Configuration<'a>, side: Side) -> &'a Graph {
    match side {
        Side::Left => cfg.left(),
        Side::Right => cfg.right(),
    }
}

/// One finished or aborted game, printable in the line format
/// `round <t>: S <side> <v> | D <side> <w>` with a trailing winner line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transcript {
    pub rounds: Vec<TranscriptRound>,
    pub failure: Option<String>,
    pub winner: Winner,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TranscriptRound {
    pub round: usize,
    pub spoiler: Move,
    pub duplicator: Move,
}

impl std::fmt::Display for Transcript {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for r in &self.rounds {
            writeln!(
                f,
                "round {}: S {} {} | D {} {}",
                r.round, r.spoiler.side, r.spoiler.vertex, r.duplicator.side, r.duplicator.vertex
            )?;
        }
        if let Some(note) = &self.failure {
            writeln!(f, "{note}")?;
        }
        write!(f, "winner: {}", self.winner)
    }
}

/// Policy for the pair `(almost multipartite with l classes, same with l-1
/// classes)`: replies copy the picked vertex's part and component verbatim
/// and translate its class through a partial bijection grown as play goes —
/// a fresh class is answered by the smallest class unused on the other side.
#[derive(Debug, Clone)]
pub struct Thm2Policy {
    pub classes: usize,
    pub parts: usize,
    pub components: usize,
}

impl Thm2Policy {
    fn coords(&self, classes: usize, v: usize) -> (usize, usize, usize) {
        let i = v % classes + 1;
        let j = v / classes % self.parts + 1;
        let h = v / (classes * self.parts) + 1;
        (i, j, h)
    }

    fn index(&self, classes: usize, (i, j, h): (usize, usize, usize)) -> usize {
        (h - 1) * self.parts * classes + (j - 1) * classes + (i - 1)
    }

    fn side_classes(&self, side: Side) -> usize {
        match side {
            Side::Left => self.classes,
            Side::Right => self.classes - 1,
        }
    }
}

impl DuplicatorPolicy for Thm2Policy {
    fn name(&self) -> &str {
        "thm2"
    }

    fn respond(&self, cfg: &Configuration, mv: Move) -> Result<usize, GameError> {
        let round = cfg.rounds_played() + 1;
        let expect_left = self.classes * self.parts * self.components;
        let expect_right = (self.classes - 1) * self.parts * self.components;
        if cfg.left().n() != expect_left || cfg.right().n() != expect_right {
            return Err(GameError::PolicyMismatch(format!(
                "thm2 policy expects hosts on {expect_left}/{expect_right} vertices, got {}/{}",
                cfg.left().n(),
                cfg.right().n()
            )));
        }

        let own = self.side_classes(mv.side);
        let other = self.side_classes(mv.side.other());
        let (i, j, h) = self.coords(own, mv.vertex);

        // class translation recorded so far, oriented from mv.side out
        let mut mapped_class: Option<usize> = None;
        let mut used_other_classes = 0u64;
        for &(x, y) in cfg.pairs() {
            let (from, to) = match mv.side {
                Side::Left => (x, y),
                Side::Right => (y, x),
            };
            let (ci, ..) = self.coords(own, from);
            let (ci_to, ..) = self.coords(other, to);
            if ci == i {
                mapped_class = Some(ci_to);
            }
            used_other_classes |= 1 << ci_to;
        }

        let target_class = match mapped_class {
            Some(c) => c,
            None => (1..=other)
                .find(|c| used_other_classes & (1 << c) == 0)
                .ok_or_else(|| GameError::PolicyStuck {
                    round,
                    reason: "no unused class left".into(),
                })?,
        };
        Ok(self.index(other, (target_class, j, h)))
    }
}

/// Policy for the pair `(P4 + m*P2, P4 + (m-1)*P2)` in `m + 1` rounds.
///
/// Vertices `0..4` form the path (set `B`); vertices `4 + 2s, 5 + 2s` form
/// matching block `s`. Before the final round: picks inside `B` are answered
/// by the identical vertex, picks in a block already co-chosen with a
/// partner block are answered inside that partner, and picks in a fresh
/// block are answered in the lowest fresh block of the other graph — with
/// one scripted exception: if the other graph has no fresh block (only
/// possible when the smaller graph ran out), the answer is a path vertex
/// detached from everything chosen. The final round just takes the lowest
/// response that keeps the partial isomorphism.
#[derive(Debug, Clone)]
pub struct Thm12Policy {
    pub m: usize,
}

impl Thm12Policy {
    fn block_of(v: usize) -> Option<usize> {
        if v < 4 {
            None
        } else {
            Some((v - 4) / 2)
        }
    }

    fn block_count(&self, side: Side) -> usize {
        match side {
            Side::Left => self.m,
            Side::Right => self.m - 1,
        }
    }
}

impl DuplicatorPolicy for Thm12Policy {
    fn name(&self) -> &str {
        "thm1_2"
    }

    fn respond(&self, cfg: &Configuration, mv: Move) -> Result<usize, GameError> {
        let round = cfg.rounds_played() + 1;
        let total_rounds = self.m + 1;
        if cfg.left().n() != 2 * self.m + 4 || cfg.right().n() != 2 * self.m + 2 {
            return Err(GameError::PolicyMismatch(format!(
                "thm1_2 policy expects hosts on {}/{} vertices, got {}/{}",
                2 * self.m + 4,
                2 * self.m + 2,
                cfg.left().n(),
                cfg.right().n()
            )));
        }
        let other = mv.side.other();
        let stuck = |reason: &str| GameError::PolicyStuck {
            round,
            reason: reason.into(),
        };

        if round >= total_rounds {
            // last round: any repetition-free reply preserving the partial
            // isomorphism wins on the spot
            return cfg
                .unchosen(other)
                .find(|&w| {
                    let (x, y) = super::solve::oriented(mv, w);
                    cfg.pair_extends_iso(x, y)
                })
                .ok_or_else(|| stuck("no isomorphism-preserving reply"));
        }

        let v = mv.vertex;
        let Some(s) = Self::block_of(v) else {
            // path vertex: mirror it verbatim
            if cfg.is_chosen(other, v) {
                return Err(stuck("mirror path vertex already chosen"));
            }
            return Ok(v);
        };

        // block matching induced by earlier pairs
        let mut partner: Option<usize> = None;
        let mut touched_other = 0u64;
        for &(x, y) in cfg.pairs() {
            let (own_v, other_v) = match mv.side {
                Side::Left => (x, y),
                Side::Right => (y, x),
            };
            match (Self::block_of(own_v), Self::block_of(other_v)) {
                (Some(bs), Some(bt)) => {
                    if bs == s {
                        partner = Some(bt);
                    }
                    touched_other |= 1 << bt;
                }
                (None, None) => {}
                _ => return Err(stuck("path/block pairing out of sync")),
            }
        }

        if let Some(t) = partner {
            // answer inside the matched block, mirroring the offset if free
            let base = 4 + 2 * t;
            let offset = (v - 4) % 2;
            for w in [base + offset, base + 1 - offset] {
                if !cfg.is_chosen(other, w) {
                    return Ok(w);
                }
            }
            return Err(stuck("matched block exhausted"));
        }

        let fresh = (0..self.block_count(other)).find(|b| touched_other & (1 << b) == 0);
        if let Some(b) = fresh {
            return Ok(4 + 2 * b + (v - 4) % 2);
        }

        // no fresh block on the other side: detached path vertex
        let other_graph = graph_of(cfg, other);
        (0..4)
            .find(|&w| {
                !cfg.is_chosen(other, w)
                    && (0..other_graph.n())
                        .filter(|&u| cfg.is_chosen(other, u))
                        .all(|u| !other_graph.has_edge(w, u))
            })
            .ok_or_else(|| stuck("no detached path vertex available"))
    }
}
