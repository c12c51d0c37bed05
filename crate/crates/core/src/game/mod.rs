//! The Ehrenfeucht-Fraisse game on a pair of graphs, played by the exact
//! rules this crate certifies against:
//!
//! - each round the Spoiler picks one vertex in either graph, distinct from
//!   the vertices already chosen in that graph (if no graph has an unchosen
//!   vertex left, the game ends early);
//! - the Duplicator must answer with an unchosen vertex of the *other*
//!   graph and loses immediately if it cannot;
//! - after the last round the Duplicator wins iff the pairing
//!   `x_i -> y_i` is an isomorphism between the induced subgraphs on the
//!   chosen vertices.
//!
//! A pairing that stops being a partial isomorphism can never recover, so
//! the engine scores it as an immediate Spoiler win.

mod extract;
mod interactive;
mod policy;
mod solve;

pub use extract::extract_distinguishing;
pub use interactive::{play_interactive, Role};
pub use policy::{
    scripted_policy, verify_policy, DuplicatorPolicy, Thm12Policy, Thm2Policy, Transcript,
    TranscriptRound,
};
pub use solve::{
    solve, solve_with_budget, solve_with_strategy, GameOutcome, StrategyTable,
    DEFAULT_NODE_BUDGET,
};

use crate::graph::Graph;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Side::Left => write!(f, "left"),
            Side::Right => write!(f, "right"),
        }
    }
}

/// A Spoiler pick: one vertex on one side.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Move {
    pub side: Side,
    pub vertex: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Winner {
    Spoiler,
    Duplicator,
}

impl std::fmt::Display for Winner {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Winner::Spoiler => write!(f, "spoiler"),
            Winner::Duplicator => write!(f, "duplicator"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GameError {
    #[error("vertex {vertex} already chosen on the {side} side")]
    RepeatedVertex { side: Side, vertex: usize },
    #[error("solver budget exceeded after {visited} states; result undecided")]
    BudgetExceeded { visited: u64 },
    #[error("Duplicator wins; no distinguishing sentence within the given rounds")]
    NoSpoilerWin,
    #[error("policy mismatch: {0}")]
    PolicyMismatch(String),
    #[error("policy has no legal response in round {round}: {reason}")]
    PolicyStuck { round: usize, reason: String },
    #[error("unknown policy `{0}`")]
    UnknownPolicy(String),
    #[error("input stream closed mid-game")]
    InputClosed,
    #[error("i/o error: {0}")]
    Io(String),
}

/// An EF game in progress: the pair of boards plus the ordered pick pairs.
/// Enforces the no-repeat rule on both sides.
#[derive(Debug, Clone)]
pub struct Configuration<'a> {
    left: &'a Graph,
    right: &'a Graph,
    pairs: Vec<(usize, usize)>,
    left_used: u64,
    right_used: u64,
}

impl<'a> Configuration<'a> {
    pub fn new(left: &'a Graph, right: &'a Graph) -> Self {
        Configuration {
            left,
            right,
            pairs: Vec::new(),
            left_used: 0,
            right_used: 0,
        }
    }

    pub fn left(&self) -> &'a Graph {
        self.left
    }

    pub fn right(&self) -> &'a Graph {
        self.right
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn rounds_played(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_chosen(&self, side: Side, v: usize) -> bool {
        let mask = match side {
            Side::Left => self.left_used,
            Side::Right => self.right_used,
        };
        mask & (1 << v) != 0
    }

    pub fn unchosen(&self, side: Side) -> impl Iterator<Item = usize> + '_ {
        let (g, mask) = match side {
            Side::Left => (self.left, self.left_used),
            Side::Right => (self.right, self.right_used),
        };
        g.vertices().filter(move |v| mask & (1 << v) == 0)
    }

    pub fn push(&mut self, x: usize, y: usize) -> Result<(), GameError> {
        if self.is_chosen(Side::Left, x) {
            return Err(GameError::RepeatedVertex {
                side: Side::Left,
                vertex: x,
            });
        }
        if self.is_chosen(Side::Right, y) {
            return Err(GameError::RepeatedVertex {
                side: Side::Right,
                vertex: y,
            });
        }
        self.push_unchecked(x, y);
        Ok(())
    }

    pub(crate) fn push_unchecked(&mut self, x: usize, y: usize) {
        self.pairs.push((x, y));
        self.left_used |= 1 << x;
        self.right_used |= 1 << y;
    }

    pub(crate) fn pop(&mut self) {
        if let Some((x, y)) = self.pairs.pop() {
            self.left_used &= !(1 << x);
            self.right_used &= !(1 << y);
        }
    }

    /// Would appending the pair keep the configuration a partial
    /// isomorphism? (`x` on the left, `y` on the right.)
    pub fn pair_extends_iso(&self, x: usize, y: usize) -> bool {
        self.pairs
            .iter()
            .all(|&(xi, yi)| self.left.has_edge(x, xi) == self.right.has_edge(y, yi))
    }
}

/// True iff the pairing preserves adjacency and non-adjacency in both
/// directions. Distinctness within each side is already guaranteed by the
/// configuration's no-repeat invariant.
pub fn partial_iso_check(cfg: &Configuration) -> bool {
    let pairs = cfg.pairs();
    for (a, &(xi, yi)) in pairs.iter().enumerate() {
        for &(xj, yj) in &pairs[a + 1..] {
            if cfg.left().has_edge(xi, xj) != cfg.right().has_edge(yi, yj) {
                return false;
            }
        }
    }
    true
}
