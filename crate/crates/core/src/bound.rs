//! Enumeration bounds for sweeps and tables.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::position::Position;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundMode {
    /// Every pile at most `limit`. Not closed under merges.
    MaxPile,
    /// At most `limit` stones in total. Closed under every move.
    TotalStones,
}

impl BoundMode {
    pub fn as_str(self) -> &'static str {
        match self {
            BoundMode::MaxPile => "max_pile",
            BoundMode::TotalStones => "total_stones",
        }
    }
}

impl fmt::Display for BoundMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown bound mode {0:?} (expected max_pile or total_stones)")]
pub struct UnknownBoundMode(pub String);

impl FromStr for BoundMode {
    type Err = UnknownBoundMode;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "max_pile" => Ok(BoundMode::MaxPile),
            "total_stones" => Ok(BoundMode::TotalStones),
            other => Err(UnknownBoundMode(other.to_string())),
        }
    }
}

/// A finite set of canonical positions with a fixed pile count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BoundSpec {
    pub mode: BoundMode,
    pub limit: u32,
    #[serde(rename = "piles")]
    pub pile_count: usize,
}

impl BoundSpec {
    pub fn total_stones(limit: u32, pile_count: usize) -> Self {
        BoundSpec { mode: BoundMode::TotalStones, limit, pile_count }
    }

    pub fn max_pile(limit: u32, pile_count: usize) -> Self {
        BoundSpec { mode: BoundMode::MaxPile, limit, pile_count }
    }

    pub fn is_move_closed(&self) -> bool {
        self.mode == BoundMode::TotalStones
    }

    pub fn contains(&self, p: &Position) -> bool {
        p.pile_count() == self.pile_count
            && match self.mode {
                BoundMode::MaxPile => p.piles().iter().all(|&x| x <= self.limit),
                BoundMode::TotalStones => p.total() <= u64::from(self.limit),
            }
    }

    /// Number of canonical positions in the bound, saturating at
    /// `u128::MAX`.
    pub fn cardinality(&self) -> u128 {
        let k = self.pile_count;
        let n = u128::from(self.limit);
        match self.mode {
            // Multisets of size k drawn from {0..=limit}: C(limit + k, k).
            BoundMode::MaxPile => binomial(n + k as u128, k as u128),
            BoundMode::TotalStones => partitions_up_to(self.limit, k),
        }
    }

    /// Canonical positions in lexicographic order.
    pub fn positions(&self) -> Vec<Position> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(self.pile_count);
        self.enumerate(&mut cur, 0, 0, &mut out);
        out
    }

    fn enumerate(&self, cur: &mut Vec<u32>, min: u32, used: u64, out: &mut Vec<Position>) {
        if cur.len() == self.pile_count {
            out.push(Position::new(cur.iter().copied()));
            return;
        }
        let remaining = (self.pile_count - cur.len()) as u64;
        let max = match self.mode {
            BoundMode::MaxPile => self.limit,
            // The rest of the piles are at least this one, so it can take
            // at most an equal share of what is left.
            BoundMode::TotalStones => ((u64::from(self.limit) - used) / remaining) as u32,
        };
        for v in min..=max {
            cur.push(v);
            self.enumerate(cur, v, used + u64::from(v), out);
            cur.pop();
        }
    }
}

impl fmt::Display for BoundSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.mode, self.limit)
    }
}

fn binomial(n: u128, k: u128) -> u128 {
    let k = k.min(n.saturating_sub(k));
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = match acc.checked_mul(n - i) {
            Some(v) => v / (i + 1),
            None => return u128::MAX,
        };
    }
    acc
}

/// Partitions of every n <= limit into at most k parts.
fn partitions_up_to(limit: u32, k: usize) -> u128 {
    let limit = limit as usize;
    // ways[n] = partitions of n into parts of size <= j, for growing j;
    // conjugation makes that the count with at most j parts.
    let mut ways = vec![0u128; limit + 1];
    ways[0] = 1;
    for part in 1..=k.min(limit.max(1)) {
        for n in part..=limit {
            ways[n] = ways[n].saturating_add(ways[n - part]);
        }
    }
    ways.iter().fold(0u128, |a, &b| a.saturating_add(b))
}
