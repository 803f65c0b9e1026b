//! Brute-force Sprague-Grundy oracle.
//!
//! Two independent routes are provided: memoized recursion ([`Solver`]) and
//! a layered retrograde fill ([`retrograde_fill`]). Both rely on the measure
//! `(total stones, non-empty piles)` strictly decreasing along every move,
//! so no cycle detection is needed.

use std::collections::{BTreeMap, HashMap, HashSet};

use rayon::prelude::*;
use thiserror::Error;

use crate::bound::BoundSpec;
use crate::position::{legal_moves, successors_into, Outcome, Position, Ruleset};

/// Default ceiling on positions a fill may hold in memory.
pub const DEFAULT_ENTRY_CEILING: u64 = 100_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("resource limit: {required} positions needed, ceiling is {ceiling}")]
    ResourceLimit { required: u128, ceiling: u64 },
}

/// Least non-negative integer missing from `values`.
pub fn mex(values: &[u32]) -> u32 {
    let mut seen = vec![false; values.len() + 1];
    mex_with(values, &mut seen)
}

/// The mex of a set is at most its size, so a bitmap of `len + 1` slots
/// suffices.
fn mex_with(values: &[u32], seen: &mut Vec<bool>) -> u32 {
    seen.clear();
    seen.resize(values.len() + 1, false);
    for &v in values {
        if let Some(slot) = seen.get_mut(v as usize) {
            *slot = true;
        }
    }
    seen.iter().position(|&s| !s).unwrap_or(values.len()) as u32
}

/// Memoized recursive solver for one ruleset.
///
/// Outcomes and Grundy values are cached separately and computed by
/// separate recursions: outcomes stop at the first P-successor, Grundy
/// values always take the full mex.
#[derive(Debug, Clone)]
pub struct Solver {
    rules: Ruleset,
    grundy: HashMap<Position, u32>,
    outcome: HashMap<Position, Outcome>,
}

impl Solver {
    pub fn new(rules: Ruleset) -> Self {
        Solver {
            rules,
            grundy: HashMap::new(),
            outcome: HashMap::new(),
        }
    }

    pub fn ruleset(&self) -> &Ruleset {
        &self.rules
    }

    pub fn grundy(&mut self, p: &Position) -> u32 {
        if let Some(&g) = self.grundy.get(p) {
            return g;
        }
        let succ = legal_moves(p, &self.rules);
        let values: Vec<u32> = succ.iter().map(|q| self.grundy(q)).collect();
        let g = mex(&values);
        self.grundy.insert(p.clone(), g);
        g
    }

    /// P iff every successor is N. Terminal positions are P.
    pub fn outcome(&mut self, p: &Position) -> Outcome {
        if let Some(&o) = self.outcome.get(p) {
            return o;
        }
        let succ = legal_moves(p, &self.rules);
        let mut result = Outcome::P;
        for q in &succ {
            if self.outcome(q) == Outcome::P {
                result = Outcome::N;
                break;
            }
        }
        self.outcome.insert(p.clone(), result);
        result
    }

    pub fn cached_grundy(&self) -> usize {
        self.grundy.len()
    }
}

/// Grundy value by plain recursion with no cache. Exponential; meant for
/// re-checking individual small positions.
pub fn grundy_uncached(p: &Position, rules: &Ruleset) -> u32 {
    let values: Vec<u32> = legal_moves(p, rules)
        .iter()
        .map(|q| grundy_uncached(q, rules))
        .collect();
    mex(&values)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FillOptions {
    pub entry_ceiling: u64,
}

impl Default for FillOptions {
    fn default() -> Self {
        FillOptions {
            entry_ceiling: DEFAULT_ENTRY_CEILING,
        }
    }
}

/// Grundy values for every position of a bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrundyTable {
    pub ruleset: Ruleset,
    pub bound: BoundSpec,
    /// Keyed by canonical position; iteration is lexicographic.
    pub entries: BTreeMap<Position, u32>,
}

impl GrundyTable {
    pub fn get(&self, p: &Position) -> Option<u32> {
        self.entries.get(p).copied()
    }

    pub fn outcome(&self, p: &Position) -> Option<Outcome> {
        self.get(p).map(|g| if g == 0 { Outcome::P } else { Outcome::N })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Builds the Grundy table for `bound` by retrograde analysis.
///
/// Positions are solved in increasing `(total, non-empty)` layers; a layer
/// is solved in parallel once every earlier layer is final, so the result
/// does not depend on the thread count. Max-pile bounds are not closed
/// under merges: their successors outside the bound are solved too, then
/// dropped from the returned table.
pub fn retrograde_fill(
    bound: &BoundSpec,
    rules: &Ruleset,
    opts: &FillOptions,
) -> Result<GrundyTable, SolverError> {
    check_ceiling(bound.cardinality(), opts)?;
    let roots = bound.positions();
    let values = if bound.is_move_closed() {
        layered_grundy(roots.clone(), rules)
    } else {
        layered_grundy(move_closure(&roots, rules, opts)?, rules)
    };
    let entries = roots
        .into_iter()
        .map(|p| {
            let g = values[&p];
            (p, g)
        })
        .collect();
    Ok(GrundyTable {
        ruleset: *rules,
        bound: *bound,
        entries,
    })
}

fn check_ceiling(required: u128, opts: &FillOptions) -> Result<(), SolverError> {
    if required > u128::from(opts.entry_ceiling) {
        Err(SolverError::ResourceLimit {
            required,
            ceiling: opts.entry_ceiling,
        })
    } else {
        Ok(())
    }
}

/// All positions reachable from `roots` (inclusive) by any sequence of
/// moves.
pub fn move_closure(
    roots: &[Position],
    rules: &Ruleset,
    opts: &FillOptions,
) -> Result<Vec<Position>, SolverError> {
    let mut seen: HashSet<Position> = roots.iter().cloned().collect();
    let mut stack: Vec<Position> = roots.to_vec();
    let mut buf = Vec::new();
    while let Some(p) = stack.pop() {
        successors_into(&p, rules, &mut buf);
        for q in buf.drain(..) {
            if !seen.contains(&q) {
                seen.insert(q.clone());
                stack.push(q);
            }
        }
        check_ceiling(seen.len() as u128, opts)?;
    }
    Ok(seen.into_iter().collect())
}

/// Grundy values of a move-closed set of positions.
fn layered_grundy(mut positions: Vec<Position>, rules: &Ruleset) -> HashMap<Position, u32> {
    positions.sort_unstable_by(|a, b| a.measure().cmp(&b.measure()).then_with(|| a.cmp(b)));
    let mut values: HashMap<Position, u32> = HashMap::with_capacity(positions.len());
    for layer in positions.chunk_by(|a, b| a.measure() == b.measure()) {
        let solved: Vec<u32> = layer
            .par_iter()
            .map_init(
                || (Vec::new(), Vec::new(), Vec::new()),
                |(succ, vals, seen), p| {
                    successors_into(p, rules, succ);
                    vals.clear();
                    vals.extend(succ.iter().map(|q| {
                        *values
                            .get(q)
                            .unwrap_or_else(|| panic!("successor {q} of {p} missing from closure"))
                    }));
                    mex_with(vals, seen)
                },
            )
            .collect();
        values.extend(layer.iter().cloned().zip(solved));
    }
    values
}
