//! Positions, rulesets and move generation for classic Nim, Amalgamation
//! Nim and its restricted variant.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;
use thiserror::Error;

/// Pile storage. Three piles is the common case and stays inline.
pub type Piles = SmallVec<[u32; 4]>;

/// A position as a multiset of pile sizes, kept sorted non-decreasing.
///
/// Sorting quotients out the permutation symmetry of the game, so two
/// positions compare equal exactly when they are the same multiset.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Position {
    piles: Piles,
}

impl Position {
    /// Builds the canonical position for the given piles, in any order.
    pub fn new(piles: impl IntoIterator<Item = u32>) -> Self {
        let mut piles: Piles = piles.into_iter().collect();
        piles.sort_unstable();
        Position { piles }
    }

    pub(crate) fn from_sorted(piles: Piles) -> Self {
        debug_assert!(piles.windows(2).all(|w| w[0] <= w[1]));
        Position { piles }
    }

    pub fn piles(&self) -> &[u32] {
        &self.piles
    }

    pub fn pile_count(&self) -> usize {
        self.piles.len()
    }

    pub fn total(&self) -> u64 {
        self.piles.iter().map(|&p| u64::from(p)).sum()
    }

    pub fn nim_sum(&self) -> u64 {
        self.piles.iter().fold(0, |acc, &p| acc ^ u64::from(p))
    }

    /// Number of piles holding at least one stone.
    pub fn nonempty(&self) -> usize {
        self.piles.iter().filter(|&&p| p > 0).count()
    }

    pub fn is_terminal(&self) -> bool {
        self.piles.iter().all(|&p| p == 0)
    }

    /// Well-founded measure: every legal move strictly decreases it.
    pub fn measure(&self) -> (u64, usize) {
        (self.total(), self.nonempty())
    }

    /// The three piles of a three-pile position.
    pub fn as_triple(&self) -> Option<[u32; 3]> {
        match *self.piles.as_slice() {
            [a, b, c] => Some([a, b, c]),
            _ => None,
        }
    }
}

/// Sorts piles non-decreasing. Idempotent.
pub fn canonicalize(p: &Position) -> Position {
    Position::new(p.piles.iter().copied())
}

impl fmt::Debug for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Tuple notation, e.g. `(3,5,7)`.
impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        write_csv(f, &self.piles)?;
        f.write_str(")")
    }
}

pub(crate) fn write_csv(f: &mut impl fmt::Write, piles: &[u32]) -> fmt::Result {
    for (i, p) in piles.iter().enumerate() {
        if i > 0 {
            f.write_char(',')?;
        }
        write!(f, "{p}")?;
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParsePilesError {
    #[error("empty position")]
    Empty,
    #[error("invalid pile size {token:?}: expected a non-negative integer below 2^32")]
    InvalidPile { token: String },
}

/// Parses the comma-separated text form (`"3, 5,7"`), keeping the given
/// order. Whitespace is ignored.
pub fn parse_piles(s: &str) -> Result<Vec<u32>, ParsePilesError> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(ParsePilesError::Empty);
    }
    compact
        .split(',')
        .map(|tok| {
            tok.parse::<u32>().map_err(|_| ParsePilesError::InvalidPile {
                token: tok.to_string(),
            })
        })
        .collect()
}

impl FromStr for Position {
    type Err = ParsePilesError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_piles(s).map(Position::new)
    }
}

/// Outcome class under normal play.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Outcome {
    /// The previous player wins.
    P,
    /// The next player wins.
    N,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::P => "P",
            Outcome::N => "N",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RulesetKind {
    Classic,
    Amalgamation,
    Restricted,
}

impl RulesetKind {
    pub fn as_str(self) -> &'static str {
        match self {
            RulesetKind::Classic => "classic",
            RulesetKind::Amalgamation => "amalgamation",
            RulesetKind::Restricted => "restricted",
        }
    }
}

impl fmt::Display for RulesetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown ruleset {0:?} (expected classic, amalgamation or restricted)")]
pub struct UnknownRuleset(pub String);

impl FromStr for RulesetKind {
    type Err = UnknownRuleset;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "classic" => Ok(RulesetKind::Classic),
            "amalgamation" => Ok(RulesetKind::Amalgamation),
            "restricted" => Ok(RulesetKind::Restricted),
            other => Err(UnknownRuleset(other.to_string())),
        }
    }
}

pub const DEFAULT_MERGE_THRESHOLD: u32 = 2;

/// Which moves are legal.
///
/// Every ruleset allows removing any positive number of stones from one
/// pile. They differ in when two piles may be merged into one:
/// `Classic` never, `Amalgamation` whenever both piles are non-empty,
/// `Restricted` only when both piles hold at least `merge_threshold` stones.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Ruleset {
    pub kind: RulesetKind,
    pub merge_threshold: u32,
}

impl Ruleset {
    pub const CLASSIC: Ruleset = Ruleset {
        kind: RulesetKind::Classic,
        merge_threshold: DEFAULT_MERGE_THRESHOLD,
    };
    pub const AMALGAMATION: Ruleset = Ruleset {
        kind: RulesetKind::Amalgamation,
        merge_threshold: DEFAULT_MERGE_THRESHOLD,
    };
    /// The restricted game with threshold 2.
    pub const RESTRICTED: Ruleset = Ruleset {
        kind: RulesetKind::Restricted,
        merge_threshold: DEFAULT_MERGE_THRESHOLD,
    };

    /// Builds a ruleset. A zero threshold is clamped to 1: a merge always
    /// needs two non-empty piles.
    pub fn new(kind: RulesetKind, merge_threshold: u32) -> Self {
        Ruleset {
            kind,
            merge_threshold: merge_threshold.max(1),
        }
    }

    pub fn restricted(merge_threshold: u32) -> Self {
        Ruleset::new(RulesetKind::Restricted, merge_threshold)
    }

    pub fn can_merge(&self, a: u32, b: u32) -> bool {
        match self.kind {
            RulesetKind::Classic => false,
            RulesetKind::Amalgamation => a > 0 && b > 0,
            RulesetKind::Restricted => a >= self.merge_threshold && b >= self.merge_threshold,
        }
    }

    /// True for the restricted game with threshold 2, the only ruleset the
    /// closed-form classifier covers.
    pub fn is_formula_ruleset(&self) -> bool {
        *self == Ruleset::RESTRICTED
    }
}

impl fmt::Display for Ruleset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            RulesetKind::Restricted => write!(f, "restricted(threshold={})", self.merge_threshold),
            kind => write!(f, "{kind}"),
        }
    }
}

/// A single move, indexed against the piles of the position it is played
/// from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Move {
    /// Reduce pile `pile` to `to` stones (`to` is strictly smaller).
    Take { pile: usize, to: u32 },
    /// Replace piles `first` and `second` by one pile in slot `first`,
    /// leaving slot `second` empty.
    Merge { first: usize, second: usize },
}

impl Move {
    pub fn is_merge(&self) -> bool {
        matches!(self, Move::Merge { .. })
    }
}

/// Applies a move to a pile vector in its given order. Returns `None` if
/// the move is not legal there.
pub fn apply_move(piles: &[u32], mv: Move, rules: &Ruleset) -> Option<Vec<u32>> {
    let mut out = piles.to_vec();
    match mv {
        Move::Take { pile, to } => {
            let cur = *piles.get(pile)?;
            if to >= cur {
                return None;
            }
            out[pile] = to;
        }
        Move::Merge { first, second } => {
            if first == second {
                return None;
            }
            let (a, b) = (*piles.get(first)?, *piles.get(second)?);
            if !rules.can_merge(a, b) {
                return None;
            }
            out[first] = a.checked_add(b)?;
            out[second] = 0;
        }
    }
    Some(out)
}

/// Every move from `p` paired with its canonical result, before
/// deduplication. Takes come first in pile order, then merges in pair
/// order.
pub fn tagged_moves(p: &Position, rules: &Ruleset) -> Vec<(Move, Position)> {
    let piles = p.piles();
    let mut out = Vec::with_capacity(p.total() as usize + 3);
    for (i, &x) in piles.iter().enumerate() {
        for to in 0..x {
            let mut next = p.piles.clone();
            next[i] = to;
            out.push((Move::Take { pile: i, to }, Position::new(next)));
        }
    }
    for i in 0..piles.len() {
        for j in i + 1..piles.len() {
            if rules.can_merge(piles[i], piles[j]) {
                let mut next = p.piles.clone();
                next[i] = piles[i].saturating_add(piles[j]);
                next[j] = 0;
                out.push((Move::Merge { first: i, second: j }, Position::new(next)));
            }
        }
    }
    out
}

/// Canonical, deduplicated positions reachable from `p` in one move,
/// sorted lexicographically. Terminal positions have none.
pub fn legal_moves(p: &Position, rules: &Ruleset) -> Vec<Position> {
    let mut out = Vec::with_capacity(p.total() as usize + 3);
    successors_into(p, rules, &mut out);
    out
}

/// Writes the deduplicated successors of `p` into `out` (cleared first).
pub(crate) fn successors_into(p: &Position, rules: &Ruleset, out: &mut Vec<Position>) {
    out.clear();
    let piles = p.piles();
    for (i, &x) in piles.iter().enumerate() {
        // Equal piles produce identical reductions; emit them once.
        if i > 0 && piles[i - 1] == x {
            continue;
        }
        for to in 0..x {
            out.push(Position::from_sorted(reduce_sorted(piles, i, to)));
        }
    }
    for i in 0..piles.len() {
        for j in i + 1..piles.len() {
            if rules.can_merge(piles[i], piles[j]) {
                let mut next: Piles = piles.into();
                next[i] = piles[i].saturating_add(piles[j]);
                next[j] = 0;
                next.sort_unstable();
                out.push(Position::from_sorted(next));
            }
        }
    }
    out.sort_unstable();
    out.dedup();
}

/// Replaces `piles[i]` by a smaller value and restores sorted order by
/// shifting it left.
fn reduce_sorted(piles: &[u32], i: usize, to: u32) -> Piles {
    let mut next: Piles = piles.into();
    let mut k = i;
    while k > 0 && next[k - 1] > to {
        next[k] = next[k - 1];
        k -= 1;
    }
    next[k] = to;
    next
}
