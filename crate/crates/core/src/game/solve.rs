//! Exact game solver: AND-OR search over all play, memoized on the
//! configuration viewed as an unordered set of pairs (pair order never
//! affects the game value). First-round Spoiler moves are reduced to
//! automorphism-orbit representatives of each whole graph.

use super::{Configuration, GameError, Move, Side, Winner};
use crate::graph::{automorphism_orbits, Graph};
use serde::Serialize;
use std::collections::{BTreeMap, HashMap};

/// Default cap on visited solver states. Exceeding the budget is an explicit
/// error, never a guessed verdict.
pub const DEFAULT_NODE_BUDGET: u64 = 1_000_000_000;

#[derive(Debug, Clone, Copy)]
pub struct GameOutcome {
    pub winner: Winner,
    pub nodes_visited: u64,
}

/// Recommended moves for the winning side, keyed by configuration strings.
/// Spoiler entries are keyed by `pairs=..;rl=k` and map to a pick like `L3`;
/// Duplicator entries additionally carry the pending pick (`;pick=L3`) and
/// map to the response vertex in the opposite graph.
#[derive(Debug, Clone, Serialize)]
pub struct StrategyTable {
    pub winner: String,
    pub moves: BTreeMap<String, String>,
}

pub fn solve(left: &Graph, right: &Graph, rounds: usize) -> Result<GameOutcome, GameError> {
    solve_with_budget(left, right, rounds, DEFAULT_NODE_BUDGET)
}

pub fn solve_with_budget(
    left: &Graph,
    right: &Graph,
    rounds: usize,
    budget: u64,
) -> Result<GameOutcome, GameError> {
    let mut engine = Engine::new(left, right, budget);
    let spoiler = engine.spoiler_wins(rounds)?;
    Ok(GameOutcome {
        winner: if spoiler {
            Winner::Spoiler
        } else {
            Winner::Duplicator
        },
        nodes_visited: engine.visited,
    })
}

/// Solves and additionally walks the winning side's strategy into a table.
pub fn solve_with_strategy(
    left: &Graph,
    right: &Graph,
    rounds: usize,
    budget: u64,
) -> Result<(GameOutcome, StrategyTable), GameError> {
    let mut engine = Engine::new(left, right, budget);
    let spoiler = engine.spoiler_wins(rounds)?;
    let winner = if spoiler {
        Winner::Spoiler
    } else {
        Winner::Duplicator
    };
    let mut moves = BTreeMap::new();
    engine.walk_strategy(rounds, winner, &mut moves)?;
    Ok((
        GameOutcome {
            winner,
            nodes_visited: engine.visited,
        },
        StrategyTable {
            winner: winner.to_string(),
            moves,
        },
    ))
}

pub(crate) struct Engine<'a> {
    pub(crate) cfg: Configuration<'a>,
    memo: HashMap<u128, bool>,
    budget: u64,
    visited: u64,
    left_root_moves: Vec<usize>,
    right_root_moves: Vec<usize>,
}

impl<'a> Engine<'a> {
    pub(crate) fn new(left: &'a Graph, right: &'a Graph, budget: u64) -> Self {
        let reps = |g: &Graph| -> Vec<usize> {
            automorphism_orbits(g).iter().map(|cell| cell[0]).collect()
        };
        Engine {
            cfg: Configuration::new(left, right),
            memo: HashMap::new(),
            budget,
            visited: 0,
            left_root_moves: reps(left),
            right_root_moves: reps(right),
        }
    }

    /// Pairs sorted by left vertex pack into a word; configurations deeper
    /// than 8 pairs simply go unmemoized.
    fn memo_key(&self) -> Option<u128> {
        let pairs = self.cfg.pairs();
        if pairs.len() > 8 {
            return None;
        }
        let mut sorted: Vec<(usize, usize)> = pairs.to_vec();
        sorted.sort_unstable();
        let mut key: u128 = pairs.len() as u128 + 1;
        for (x, y) in sorted {
            key = key << 14 | (x as u128) << 7 | y as u128;
        }
        Some(key)
    }

    /// Does the Spoiler win from the current configuration with
    /// `rounds_left` rounds to play? The configuration must currently be a
    /// partial isomorphism.
    pub(crate) fn spoiler_wins(&mut self, rounds_left: usize) -> Result<bool, GameError> {
        if rounds_left == 0 {
            return Ok(false);
        }
        self.visited += 1;
        if self.visited > self.budget {
            return Err(GameError::BudgetExceeded {
                visited: self.visited,
            });
        }
        let key = self.memo_key();
        if let Some(k) = key {
            if let Some(&v) = self.memo.get(&k) {
                return Ok(v);
            }
        }
        let mut result = false;
        'sides: for side in [Side::Left, Side::Right] {
            for v in self.spoiler_moves(side) {
                if !self.duplicator_survives(Move { side, vertex: v }, rounds_left)? {
                    result = true;
                    break 'sides;
                }
            }
        }
        // no move at all means both graphs are exhausted: the game ends now
        // and the (intact) partial isomorphism hands the Duplicator the win,
        // which the `false` default already covers
        if let Some(k) = key {
            self.memo.insert(k, result);
        }
        Ok(result)
    }

    /// Legal Spoiler picks on `side`; orbit representatives in round one.
    pub(crate) fn spoiler_moves(&self, side: Side) -> Vec<usize> {
        if self.cfg.rounds_played() == 0 {
            match side {
                Side::Left => self.left_root_moves.clone(),
                Side::Right => self.right_root_moves.clone(),
            }
        } else {
            self.cfg.unchosen(side).collect()
        }
    }

    /// Can the Duplicator answer `mv` and still win the remaining game?
    /// Responses that break the partial isomorphism lose on the spot and are
    /// skipped; an empty other side means no response exists.
    fn duplicator_survives(&mut self, mv: Move, rounds_left: usize) -> Result<bool, GameError> {
        for w in self.duplicator_candidates(mv) {
            let (x, y) = oriented(mv, w);
            self.cfg.push_unchecked(x, y);
            let lost = self.spoiler_wins(rounds_left - 1);
            self.cfg.pop();
            if !lost? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Iso-preserving responses to `mv`, cheapest-looking first: prefer
    /// degree-matched vertices (ordering affects speed only).
    pub(crate) fn duplicator_candidates(&self, mv: Move) -> Vec<usize> {
        let other = mv.side.other();
        let (own_graph, other_graph) = match mv.side {
            Side::Left => (self.cfg.left(), self.cfg.right()),
            Side::Right => (self.cfg.right(), self.cfg.left()),
        };
        let vdeg = own_graph.degree(mv.vertex);
        let mut cands: Vec<usize> = self
            .cfg
            .unchosen(other)
            .filter(|&w| {
                let (x, y) = oriented(mv, w);
                self.cfg.pair_extends_iso(x, y)
            })
            .collect();
        cands.sort_by_key(|&w| (other_graph.degree(w).abs_diff(vdeg), w));
        cands
    }

    /// First winning Spoiler move from the current configuration, if any.
    pub(crate) fn winning_move(&mut self, rounds_left: usize) -> Result<Option<Move>, GameError> {
        if rounds_left == 0 {
            return Ok(None);
        }
        for side in [Side::Left, Side::Right] {
            for v in self.spoiler_moves(side) {
                let mv = Move { side, vertex: v };
                if !self.duplicator_survives(mv, rounds_left)? {
                    return Ok(Some(mv));
                }
            }
        }
        Ok(None)
    }

    /// First response to `mv` that keeps the Duplicator winning, if any.
    pub(crate) fn surviving_response(
        &mut self,
        mv: Move,
        rounds_left: usize,
    ) -> Result<Option<usize>, GameError> {
        for w in self.duplicator_candidates(mv) {
            let (x, y) = oriented(mv, w);
            self.cfg.push_unchecked(x, y);
            let lost = self.spoiler_wins(rounds_left - 1);
            self.cfg.pop();
            if !lost? {
                return Ok(Some(w));
            }
        }
        Ok(None)
    }

    fn state_key(&self, rounds_left: usize) -> String {
        let mut sorted: Vec<(usize, usize)> = self.cfg.pairs().to_vec();
        sorted.sort_unstable();
        let pairs: Vec<String> = sorted.iter().map(|(x, y)| format!("{x}:{y}")).collect();
        format!("pairs={};rl={rounds_left}", pairs.join(","))
    }

    /// Records the winning side's recommended move for every configuration
    /// reachable while it follows the recommendation and the opponent plays
    /// anything legal.
    fn walk_strategy(
        &mut self,
        rounds_left: usize,
        winner: Winner,
        out: &mut BTreeMap<String, String>,
    ) -> Result<(), GameError> {
        if rounds_left == 0 {
            return Ok(());
        }
        let key = self.state_key(rounds_left);
        if out.contains_key(&key) {
            return Ok(());
        }
        match winner {
            Winner::Spoiler => {
                let Some(mv) = self.winning_move(rounds_left)? else {
                    return Ok(());
                };
                let side_tag = side_tag(mv.side);
                out.insert(key, format!("{side_tag}{}", mv.vertex));
                for w in self.duplicator_candidates(mv) {
                    let (x, y) = oriented(mv, w);
                    self.cfg.push_unchecked(x, y);
                    self.walk_strategy(rounds_left - 1, winner, out)?;
                    self.cfg.pop();
                }
            }
            Winner::Duplicator => {
                for side in [Side::Left, Side::Right] {
                    // opponent branches must be exhaustive here: orbit
                    // reduction would leave first-round picks unanswered
                    for v in self.cfg.unchosen(side).collect::<Vec<_>>() {
                        let mv = Move { side, vertex: v };
                        let Some(w) = self.surviving_response(mv, rounds_left)? else {
                            continue; // unreachable under a true Duplicator win
                        };
                        let dkey = format!(
                            "{};pick={}{v}",
                            self.state_key(rounds_left),
                            side_tag(side)
                        );
                        out.insert(dkey, format!("{}{w}", side_tag(side.other())));
                        let (x, y) = oriented(mv, w);
                        self.cfg.push_unchecked(x, y);
                        self.walk_strategy(rounds_left - 1, winner, out)?;
                        self.cfg.pop();
                    }
                }
            }
        }
        Ok(())
    }
}

fn side_tag(side: Side) -> &'static str {
    match side {
        Side::Left => "L",
        Side::Right => "R",
    }
}

/// Orders a Spoiler pick and the Duplicator's response as a (left, right)
/// pair.
pub(crate) fn oriented(mv: Move, response: usize) -> (usize, usize) {
    match mv.side {
        Side::Left => (mv.vertex, response),
        Side::Right => (response, mv.vertex),
    }
}
