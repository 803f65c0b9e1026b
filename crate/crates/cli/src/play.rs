//! Interactive perfect-play loop. The human moves first.

use std::io::{self, BufRead, Write};

use amalgam_nim::formula::classify;
use amalgam_nim::position::apply_move;
use amalgam_nim::{legal_moves, Move, Outcome, Position, Ruleset, Solver};

/// Decides outcomes for the engine: the closed form where it applies, the
/// oracle otherwise.
pub struct Engine {
    rules: Ruleset,
    solver: Solver,
}

impl Engine {
    pub fn new(rules: Ruleset) -> Self {
        Engine {
            rules,
            solver: Solver::new(rules),
        }
    }

    pub fn outcome(&mut self, p: &Position) -> Outcome {
        if self.rules.is_formula_ruleset() {
            if let Ok(o) = classify(p) {
                return o;
            }
        }
        self.solver.outcome(p)
    }

    /// The engine's reply from `piles` (display order). Moves to the
    /// lexicographically smallest canonical P-successor if there is one,
    /// otherwise takes one stone from the largest pile.
    pub fn choose(&mut self, piles: &[u32]) -> Option<Move> {
        let here = Position::new(piles.iter().copied());
        let target = legal_moves(&here, &self.rules)
            .into_iter()
            .find(|q| self.outcome(q) == Outcome::P);
        match target {
            Some(target) => display_moves(piles, &self.rules).into_iter().find(|&mv| {
                apply_move(piles, mv, &self.rules).map(Position::new).as_ref() == Some(&target)
            }),
            None => {
                let (pile, &size) = piles
                    .iter()
                    .enumerate()
                    .rev()
                    .max_by_key(|&(_, &s)| s)?;
                (size > 0).then_some(Move::Take { pile, to: size - 1 })
            }
        }
    }
}

/// Every legal move on piles in display order: takes by pile, then merges
/// by pair.
pub fn display_moves(piles: &[u32], rules: &Ruleset) -> Vec<Move> {
    let mut out = Vec::new();
    for (pile, &x) in piles.iter().enumerate() {
        out.extend((0..x).map(|to| Move::Take { pile, to }));
    }
    for first in 0..piles.len() {
        for second in first + 1..piles.len() {
            if rules.can_merge(piles[first], piles[second]) {
                out.push(Move::Merge { first, second });
            }
        }
    }
    out
}

#[derive(Debug, PartialEq, Eq)]
pub enum Command {
    Move(Move),
    Quit,
}

/// Parses `take <k> from <pile>`, `merge <i> <j>` or `quit`, with 1-based
/// pile numbers.
pub fn parse_command(line: &str, piles: &[u32]) -> Result<Command, String> {
    let words: Vec<&str> = line.split_whitespace().collect();
    let pile_index = |s: &str| -> Result<usize, String> {
        let n: usize = s.parse().map_err(|_| format!("{s:?} is not a pile number"))?;
        if n == 0 || n > piles.len() {
            return Err(format!("pile {n} does not exist (piles are 1..={})", piles.len()));
        }
        Ok(n - 1)
    };
    match words.as_slice() {
        ["quit"] | ["resign"] => Ok(Command::Quit),
        ["take", k, "from", pile] => {
            let k: u32 = k.parse().map_err(|_| format!("{k:?} is not a stone count"))?;
            let pile = pile_index(pile)?;
            if k == 0 || k > piles[pile] {
                return Err(format!("pile {} has {} stones; take 1..={}", pile + 1, piles[pile], piles[pile]));
            }
            Ok(Command::Move(Move::Take { pile, to: piles[pile] - k }))
        }
        ["merge", i, j] => Ok(Command::Move(Move::Merge {
            first: pile_index(i)?,
            second: pile_index(j)?,
        })),
        _ => Err("expected `take <k> from <pile>`, `merge <i> <j>` or `quit`".into()),
    }
}

pub fn describe(mv: Move, piles: &[u32]) -> String {
    match mv {
        Move::Take { pile, to } => format!("take {} from pile {}", piles[pile] - to, pile + 1),
        Move::Merge { first, second } => format!("merge piles {} and {}", first + 1, second + 1),
    }
}

fn show(piles: &[u32]) -> String {
    piles.iter().map(u32::to_string).collect::<Vec<_>>().join(" ")
}

/// Runs a game to completion. Returns once someone wins or the human quits
/// or input ends.
pub fn run(
    mut piles: Vec<u32>,
    rules: Ruleset,
    input: &mut impl BufRead,
    out: &mut impl Write,
) -> io::Result<()> {
    let mut engine = Engine::new(rules);
    writeln!(out, "rules: {rules}; you move first. Commands: take <k> from <pile>, merge <i> <j>, quit")?;
    loop {
        writeln!(out, "piles: {}", show(&piles))?;
        if piles.iter().all(|&p| p == 0) {
            writeln!(out, "no moves left: the engine made the last move and wins")?;
            return Ok(());
        }
        let mv = loop {
            write!(out, "> ")?;
            out.flush()?;
            let mut line = String::new();
            if input.read_line(&mut line)? == 0 {
                writeln!(out, "\nend of input: you resign, the engine wins")?;
                return Ok(());
            }
            match parse_command(&line, &piles) {
                Ok(Command::Quit) => {
                    writeln!(out, "you resign, the engine wins")?;
                    return Ok(());
                }
                Ok(Command::Move(mv)) => {
                    if apply_move(&piles, mv, &rules).is_some() {
                        break mv;
                    }
                    writeln!(out, "illegal move under {rules}")?;
                }
                Err(e) => writeln!(out, "{e}")?,
            }
        };
        piles = apply_move(&piles, mv, &rules).expect("validated");
        if piles.iter().all(|&p| p == 0) {
            writeln!(out, "piles: {}", show(&piles))?;
            writeln!(out, "you made the last move and win")?;
            return Ok(());
        }
        let reply = engine.choose(&piles).expect("non-terminal position has a move");
        writeln!(out, "engine: {}", describe(reply, &piles))?;
        piles = apply_move(&piles, reply, &rules).expect("engine plays legal moves");
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn play(piles: &[u32], rules: Ruleset, script: &str) -> String {
        let mut out = Vec::new();
        run(piles.to_vec(), rules, &mut script.as_bytes(), &mut out).unwrap();
        String::from_utf8(out).unwrap()
    }

    #[test]
    fn human_takes_last_stone() {
        let log = play(&[0, 0, 1], Ruleset::RESTRICTED, "take 1 from 3\n");
        assert!(log.contains("you made the last move and win"), "{log}");
    }

    #[test]
    fn eof_resigns() {
        let log = play(&[3, 5, 7], Ruleset::RESTRICTED, "");
        assert!(log.contains("you resign"), "{log}");
    }

    #[test]
    fn merge_allowed_at_threshold() {
        assert_eq!(
            parse_command("merge 1 2", &[2, 2]),
            Ok(Command::Move(Move::Merge { first: 0, second: 1 }))
        );
        assert!(apply_move(&[2, 2], Move::Merge { first: 0, second: 1 }, &Ruleset::RESTRICTED).is_some());
        let log = play(&[2, 2], Ruleset::RESTRICTED, "merge 1 2\n");
        assert!(log.contains("engine: take 4 from pile 1"), "{log}");
    }

    #[test]
    fn illegal_moves_reprompt() {
        let log = play(&[1, 2], Ruleset::RESTRICTED, "merge 1 2\ntake 9 from 1\nfoo\nquit\n");
        assert!(log.contains("illegal move"), "{log}");
        assert!(log.contains("pile 1 has 1 stones"), "{log}");
        assert!(log.contains("expected `take"), "{log}");
        assert!(log.contains("you resign"), "{log}");
    }

    #[test]
    fn parse_errors() {
        assert!(parse_command("take 1 from 4", &[1, 2, 3]).is_err());
        assert!(parse_command("take 0 from 1", &[1, 2, 3]).is_err());
        assert!(parse_command("merge 0 1", &[1, 2, 3]).is_err());
        assert_eq!(parse_command("  quit ", &[1]), Ok(Command::Quit));
    }

    #[test]
    fn engine_answers_n_positions_with_p_positions() {
        for rules in [Ruleset::RESTRICTED, Ruleset::AMALGAMATION, Ruleset::restricted(3)] {
            let mut engine = Engine::new(rules);
            let mut oracle = Solver::new(rules);
            for a in 0..9 {
                for b in 0..9 {
                    for c in 0..9 {
                        let piles = [c, a, b];
                        let here = Position::new(piles);
                        if oracle.outcome(&here) != Outcome::N {
                            continue;
                        }
                        let mv = engine.choose(&piles).unwrap();
                        let next = Position::new(apply_move(&piles, mv, &rules).unwrap());
                        assert_eq!(oracle.outcome(&next), Outcome::P, "{rules} {piles:?} -> {next}");
                    }
                }
            }
        }
    }

    #[test]
    fn engine_prefers_smallest_p_successor() {
        let mut engine = Engine::new(Ruleset::RESTRICTED);
        let piles = [4, 1, 2];
        let here = Position::new(piles);
        let want = legal_moves(&here, &Ruleset::RESTRICTED)
            .into_iter()
            .find(|q| classify(q) == Ok(Outcome::P))
            .unwrap();
        let mv = engine.choose(&piles).unwrap();
        assert_eq!(Position::new(apply_move(&piles, mv, &Ruleset::RESTRICTED).unwrap()), want);
    }
}
