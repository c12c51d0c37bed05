//! Turn-based game loop against the solver, over arbitrary read/write
//! streams so it is drivable from tests.

use super::policy::{Transcript, TranscriptRound};
use super::solve::{oriented, Engine};
use super::{GameError, Move, Side, Winner, DEFAULT_NODE_BUDGET};
use crate::graph::Graph;
use std::io::{BufRead, Write};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Role {
    Spoiler,
    Duplicator,
}

/// Plays the `rounds`-round game with the human on `human` side and the
/// engine playing the solved game optimally. Illegal inputs re-prompt
/// without consuming a round; a closed input stream aborts.
pub fn play_interactive<R: BufRead, W: Write>(
    left: &Graph,
    right: &Graph,
    rounds: usize,
    human: Role,
    mut input: R,
    mut out: W,
) -> Result<Transcript, GameError> {
    let io = |e: std::io::Error| GameError::Io(e.to_string());
    let mut engine = Engine::new(left, right, DEFAULT_NODE_BUDGET);

    writeln!(out, "left graph: {left:?}").map_err(io)?;
    writeln!(out, "right graph: {right:?}").map_err(io)?;
    writeln!(
        out,
        "{rounds} rounds; you play {}",
        match human {
            Role::Spoiler => "Spoiler (pick like L3 or R0)",
            Role::Duplicator => "Duplicator (reply with a vertex number)",
        }
    )
    .map_err(io)?;

    let mut transcript = Vec::new();
    let mut winner = Winner::Duplicator;

    for round in 1..=rounds {
        let rl = rounds - round + 1;
        let any_left = engine.cfg.unchosen(Side::Left).next().is_some();
        let any_right = engine.cfg.unchosen(Side::Right).next().is_some();
        if !any_left && !any_right {
            writeln!(out, "both graphs exhausted; game ends early").map_err(io)?;
            break;
        }

        let mv = match human {
            Role::Spoiler => prompt_spoiler(&engine, round, &mut input, &mut out)?,
            Role::Duplicator => {
                let mv = engine_spoiler_move(&mut engine, rl)?;
                writeln!(out, "round {round}: engine S {} {}", mv.side, mv.vertex).map_err(io)?;
                mv
            }
        };

        let other = mv.side.other();
        if engine.cfg.unchosen(other).next().is_none() {
            writeln!(out, "Duplicator has no vertex left to answer with").map_err(io)?;
            winner = Winner::Spoiler;
            transcript.push(TranscriptRound {
                round,
                spoiler: mv,
                duplicator: Move {
                    side: other,
                    vertex: usize::MAX,
                },
            });
            let t = Transcript {
                rounds: transcript,
                failure: Some(format!("round {round}: Duplicator cannot respond")),
                winner,
            };
            writeln!(out, "{t}").map_err(io)?;
            return Ok(t);
        }

        let w = match human {
            Role::Duplicator => prompt_duplicator(&engine, mv, round, &mut input, &mut out)?,
            Role::Spoiler => {
                let w = engine_duplicator_response(&mut engine, mv, rl)?;
                writeln!(out, "round {round}: engine D {} {w}", other).map_err(io)?;
                w
            }
        };

        let (x, y) = oriented(mv, w);
        let intact = engine.cfg.pair_extends_iso(x, y);
        engine.cfg.push_unchecked(x, y);
        transcript.push(TranscriptRound {
            round,
            spoiler: mv,
            duplicator: Move {
                side: other,
                vertex: w,
            },
        });
        if !intact {
            writeln!(out, "the pairing is no longer a partial isomorphism").map_err(io)?;
            winner = Winner::Spoiler;
            break;
        }
    }

    let t = Transcript {
        rounds: transcript,
        failure: None,
        winner,
    };
    writeln!(out, "{t}").map_err(io)?;
    Ok(t)
}

/// Optimal pick when winning, lowest legal pick otherwise.
fn engine_spoiler_move(engine: &mut Engine, rounds_left: usize) -> Result<Move, GameError> {
    if let Some(mv) = engine.winning_move(rounds_left)? {
        return Ok(mv);
    }
    for side in [Side::Left, Side::Right] {
        if let Some(v) = engine.cfg.unchosen(side).next() {
            return Ok(Move { side, vertex: v });
        }
    }
    unreachable!("caller checked that a legal pick exists")
}

/// A winning reply when one exists, otherwise the best-effort reply: keep
/// the isomorphism if possible, else the lowest legal vertex.
fn engine_duplicator_response(
    engine: &mut Engine,
    mv: Move,
    rounds_left: usize,
) -> Result<usize, GameError> {
    if let Some(w) = engine.surviving_response(mv, rounds_left)? {
        return Ok(w);
    }
    if let Some(w) = engine.duplicator_candidates(mv).first() {
        return Ok(*w);
    }
    Ok(engine
        .cfg
        .unchosen(mv.side.other())
        .next()
        .expect("caller checked the other side is nonempty"))
}

fn prompt_spoiler<R: BufRead, W: Write>(
    engine: &Engine,
    round: usize,
    input: &mut R,
    out: &mut W,
) -> Result<Move, GameError> {
    let io = |e: std::io::Error| GameError::Io(e.to_string());
    loop {
        write!(out, "round {round}, your Spoiler pick (L<v> or R<v>): ").map_err(io)?;
        out.flush().map_err(io)?;
        let line = read_line(input)?;
        let parsed = parse_move(&line);
        match parsed {
            Some(mv) => {
                let n = match mv.side {
                    Side::Left => engine.cfg.left().n(),
                    Side::Right => engine.cfg.right().n(),
                };
                if mv.vertex >= n {
                    writeln!(out, "vertex {} out of range, try again", mv.vertex).map_err(io)?;
                } else if engine.cfg.is_chosen(mv.side, mv.vertex) {
                    writeln!(out, "vertex already chosen, try again").map_err(io)?;
                } else {
                    return Ok(mv);
                }
            }
            None => writeln!(out, "could not read a move, try again").map_err(io)?,
        }
    }
}

fn prompt_duplicator<R: BufRead, W: Write>(
    engine: &Engine,
    mv: Move,
    round: usize,
    input: &mut R,
    out: &mut W,
) -> Result<usize, GameError> {
    let io = |e: std::io::Error| GameError::Io(e.to_string());
    let other = mv.side.other();
    loop {
        write!(out, "round {round}, your reply in the {other} graph: ").map_err(io)?;
        out.flush().map_err(io)?;
        let line = read_line(input)?;
        let token = line.trim().trim_start_matches(['L', 'R', 'l', 'r']);
        match token.parse::<usize>() {
            Ok(w) => {
                let n = match other {
                    Side::Left => engine.cfg.left().n(),
                    Side::Right => engine.cfg.right().n(),
                };
                if w >= n {
                    writeln!(out, "vertex {w} out of range, try again").map_err(io)?;
                } else if engine.cfg.is_chosen(other, w) {
                    writeln!(out, "vertex already chosen, try again").map_err(io)?;
                } else {
                    return Ok(w);
                }
            }
            Err(_) => writeln!(out, "could not read a vertex, try again").map_err(io)?,
        }
    }
}

fn read_line<R: BufRead>(input: &mut R) -> Result<String, GameError> {
    let mut line = String::new();
    let n = input
        .read_line(&mut line)
        .map_err(|e| GameError::Io(e.to_string()))?;
    if n == 0 {
        return Err(GameError::InputClosed);
    }
    Ok(line)
}

fn parse_move(line: &str) -> Option<Move> {
    let t = line.trim();
    let (side, rest) = match t.chars().next()? {
        'L' | 'l' => (Side::Left, &t[1..]),
        'R' | 'r' => (Side::Right, &t[1..]),
        _ => return None,
    };
    rest.trim().parse::<usize>().ok().map(|vertex| Move { side, vertex })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, FamilySpec};
    use std::io::Cursor;

    #[test]
    fn engine_duplicator_mirrors_on_identical_graphs() {
        let k2 = generate(&FamilySpec::Complete(2)).unwrap();
        let input = Cursor::new("L0\nR1\n");
        let mut out = Vec::new();
        let t = play_interactive(&k2, &k2, 2, Role::Spoiler, input, &mut out).unwrap();
        assert_eq!(t.winner, Winner::Duplicator);
        assert_eq!(t.rounds.len(), 2);
    }

    #[test]
    fn engine_spoiler_beats_any_human_on_k2_vs_2k1() {
        let k2 = generate(&FamilySpec::Complete(2)).unwrap();
        let e2 = Graph::empty(2).unwrap();
        // both possible human reply lines lose
        for replies in ["0\n1\n", "1\n0\n"] {
            let input = Cursor::new(replies);
            let mut out = Vec::new();
            let t = play_interactive(&k2, &e2, 2, Role::Duplicator, input, &mut out).unwrap();
            assert_eq!(t.winner, Winner::Spoiler, "replies={replies:?}");
        }
    }

    #[test]
    fn illegal_input_reprompts_without_consuming_the_round() {
        let k2 = generate(&FamilySpec::Complete(2)).unwrap();
        let input = Cursor::new("99\nfoo\nL99\nL0\nR1\n");
        let mut out = Vec::new();
        let t = play_interactive(&k2, &k2, 2, Role::Spoiler, input, &mut out).unwrap();
        assert_eq!(t.rounds.len(), 2);
        let text = String::from_utf8(out).unwrap();
        assert!(text.contains("try again"));
        assert!(text.contains("winner: duplicator"));
    }

    #[test]
    fn closed_input_aborts() {
        let k2 = generate(&FamilySpec::Complete(2)).unwrap();
        let input = Cursor::new("");
        let mut out = Vec::new();
        assert_eq!(
            play_interactive(&k2, &k2, 1, Role::Spoiler, input, &mut out),
            Err(GameError::InputClosed)
        );
    }

    #[test]
    fn transcript_format_matches_the_contract() {
        let k2 = generate(&FamilySpec::Complete(2)).unwrap();
        let input = Cursor::new("L0\n");
        let mut out = Vec::new();
        play_interactive(&k2, &k2, 1, Role::Spoiler, input, &mut out).unwrap();
        let text = String::from_utf8(out).unwrap();
        assert!(text.contains("round 1: S left 0 | D right"), "{text}");
        assert!(text.trim_end().ends_with("winner: duplicator"), "{text}");
    }
}
