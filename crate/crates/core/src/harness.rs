//! Sweeps that check the closed-form classifier, its supporting lemmas and
//! the Grundy/nim-sum conjecture against the brute-force oracle.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use thiserror::Error;

use crate::bound::BoundSpec;
use crate::formula::{self, classify, digit_relation, membership, DigitRelation, Subset};
use crate::position::{tagged_moves, Move, Outcome, Position, Ruleset};
use crate::report::{Claim, Counterexample, VerificationReport};
use crate::solver::{mex, retrograde_fill, FillOptions, Solver, SolverError};

pub const DEFAULT_COUNTEREXAMPLE_CAP: usize = 100;

pub const DEFAULT_THEOREM_TOTAL: u32 = 150;
pub const DEFAULT_LEMMA_TOTAL: u32 = 120;
pub const DEFAULT_STRUCTURE_MAX_PILE: u32 = 128;
pub const DEFAULT_DIGIT_MAX_PILE: u32 = 512;
pub const DEFAULT_CONJECTURE_MAX_PILE: u32 = 48;
pub const DEFAULT_TWO_PILE_MAX: u32 = 256;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HarnessOptions {
    pub counterexample_cap: usize,
    pub fill: FillOptions,
}

impl Default for HarnessOptions {
    fn default() -> Self {
        HarnessOptions {
            counterexample_cap: DEFAULT_COUNTEREXAMPLE_CAP,
            fill: FillOptions::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HarnessError {
    #[error("this check needs 3-pile positions, bound has {0}")]
    PileCount(usize),
    #[error("this check quantifies over moves and needs a move-closed total_stones bound")]
    NotMoveClosed,
    #[error(transparent)]
    Solver(#[from] SolverError),
}

fn require_three_piles(bound: &BoundSpec) -> Result<(), HarnessError> {
    if bound.pile_count == 3 {
        Ok(())
    } else {
        Err(HarnessError::PileCount(bound.pile_count))
    }
}

fn check_size(bound: &BoundSpec, opts: &HarnessOptions) -> Result<(), HarnessError> {
    let required = bound.cardinality();
    if required > u128::from(opts.fill.entry_ceiling) {
        return Err(SolverError::ResourceLimit {
            required,
            ceiling: opts.fill.entry_ceiling,
        }
        .into());
    }
    Ok(())
}

fn elapsed_ms(start: Instant) -> u64 {
    start.elapsed().as_millis() as u64
}

fn bump(tallies: &mut BTreeMap<String, u64>, key: impl Into<String>) {
    *tallies.entry(key.into()).or_insert(0) += 1;
}

fn triple_of(p: &Position) -> [u32; 3] {
    p.as_triple().expect("bound has 3 piles")
}

fn label(m: Option<formula::Membership>) -> String {
    m.map_or_else(|| "none".to_string(), |m| m.to_string())
}

/// Classifier against the memoized oracle on every position of `bound`.
pub fn verify_main_theorem(bound: &BoundSpec, opts: &HarnessOptions) -> Result<VerificationReport, HarnessError> {
    require_three_piles(bound)?;
    check_size(bound, opts)?;
    let start = Instant::now();
    let rules = Ruleset::RESTRICTED;
    let positions = bound.positions();
    let mut oracle = Solver::new(rules);
    let mut violations = Vec::new();
    let mut tallies = BTreeMap::new();
    for p in &positions {
        let solved = oracle.outcome(p);
        let m = membership(p).expect("3 piles");
        let formula = classify(p).expect("3 piles");
        bump(&mut tallies, format!("oracle_{solved}"));
        bump(&mut tallies, m.map_or("set_none", |m| subset_key(m.subset)));
        if formula != solved {
            violations.push(Counterexample::new(
                p.piles(),
                formula.to_string(),
                solved.to_string(),
                format!("formula membership {}; oracle says {solved}", label(m)),
            ));
        }
    }
    Ok(VerificationReport::build(
        "theorem",
        &rules,
        bound,
        positions.len() as u64,
        Claim::Proven,
        violations,
        opts.counterexample_cap,
        elapsed_ms(start),
        tallies,
    ))
}

fn subset_key(s: Subset) -> &'static str {
    match s {
        Subset::P01 => "set_P01",
        Subset::P02 => "set_P02",
        Subset::P11 => "set_P11",
        Subset::P12 => "set_P12",
        Subset::N01 => "set_N01",
        Subset::N02 => "set_N02",
    }
}

/// Two-pile amalgamation: P exactly on equal piles.
pub fn verify_two_pile(max_pile: u32, opts: &HarnessOptions) -> Result<VerificationReport, HarnessError> {
    let bound = BoundSpec::max_pile(max_pile, 2);
    check_size(&bound, opts)?;
    let start = Instant::now();
    let rules = Ruleset::AMALGAMATION;
    let positions = bound.positions();
    let mut oracle = Solver::new(rules);
    let mut violations = Vec::new();
    let mut tallies = BTreeMap::new();
    for p in &positions {
        let [x, y] = [p.piles()[0], p.piles()[1]];
        let claimed = if x == y { Outcome::P } else { Outcome::N };
        let solved = oracle.outcome(p);
        bump(&mut tallies, format!("oracle_{solved}"));
        if claimed != solved {
            violations.push(Counterexample::new(
                p.piles(),
                claimed.to_string(),
                solved.to_string(),
                "two-pile amalgamation: P iff piles are equal",
            ));
        }
    }
    Ok(VerificationReport::build(
        "two-pile",
        &rules,
        &bound,
        positions.len() as u64,
        Claim::Proven,
        violations,
        opts.counterexample_cap,
        elapsed_ms(start),
        tallies,
    ))
}

/// Checks one nim-sum-zero triple's digit relation against integer
/// arithmetic. Returns a description of the mismatch, if any.
fn digit_mismatch(x: u64, y: u64, z: u64) -> Option<(String, String)> {
    let rel = digit_relation(x, y, z);
    let sum = x + y;
    let expected = if sum == z {
        "x+y=z"
    } else if sum == z + 2 {
        "x+y=z+2"
    } else if sum > z + 2 {
        "x+y>z+2"
    } else {
        "x+y<z"
    };
    let agrees = match rel {
        DigitRelation::EqualSum => sum == z,
        DigitRelation::SumPlusTwo => sum == z + 2,
        DigitRelation::SumExceedsTwo { witness_bit: j } => {
            let bit = |v: u64| (v >> j) & 1;
            sum > z + 2 && j >= 1 && bit(x) == 1 && bit(y) == 1 && bit(z) == 0
        }
        DigitRelation::NotApplicable => false,
    };
    (!agrees).then(|| (expected.to_string(), format!("{rel:?}")))
}

/// Sweeps every ordered nim-sum-zero triple with all piles `<= max_pile`,
/// in parallel over `x`.
fn digit_sweep(max_pile: u32) -> (u64, Vec<Counterexample>) {
    let b = u64::from(max_pile);
    let per_x: Vec<(u64, Vec<Counterexample>)> = (0..=b)
        .into_par_iter()
        .map(|x| {
            let mut n = 0;
            let mut bad = Vec::new();
            for y in 0..=b {
                let z = x ^ y;
                if z > b {
                    continue;
                }
                n += 1;
                if let Some((expected, actual)) = digit_mismatch(x, y, z) {
                    bad.push(Counterexample::new(
                        [x as u32, y as u32, z as u32],
                        expected,
                        actual,
                        "digit relation disagrees with integer arithmetic",
                    ));
                }
            }
            (n, bad)
        })
        .collect();
    per_x.into_iter().fold((0, Vec::new()), |(n, mut all), (k, bad)| {
        all.extend(bad);
        (n + k, all)
    })
}

/// Bitwise sum relation against integer arithmetic for every ordered
/// nim-sum-zero triple with piles `<= max_pile`. `checked` counts those
/// triples.
pub fn verify_digit_relation(max_pile: u32, opts: &HarnessOptions) -> Result<VerificationReport, HarnessError> {
    let start = Instant::now();
    let (checked, violations) = digit_sweep(max_pile);
    Ok(VerificationReport::build(
        "digit-relation",
        &Ruleset::RESTRICTED,
        &BoundSpec::max_pile(max_pile, 3),
        checked,
        Claim::Proven,
        violations,
        opts.counterexample_cap,
        elapsed_ms(start),
        BTreeMap::new(),
    ))
}

/// Structural facts every member of a set must satisfy. Returns the first
/// failing clause.
pub fn structure_violation(subset: Subset, [x, y, z]: [u64; 3]) -> Option<&'static str> {
    let sum = x + y;
    let even_total = (x + y + z) % 2 == 0;
    let checks: &[(bool, &'static str)] = match subset {
        Subset::N01 => &[
            (x >= 2 && y >= 2, "x,y >= 2"),
            (z >= 4, "z >= 4"),
            (z >= x + 2 && z >= y + 2, "z >= x+2, y+2"),
            (sum == z, "x+y = z"),
        ],
        Subset::N02 => &[
            (x >= 3 && y >= 3, "x,y >= 3"),
            (x % 2 == 1 && y % 2 == 1, "x,y odd"),
            (z % 2 == 0, "z even"),
            (z > x && z > y, "z >= x+1, y+1"),
            (sum == z + 2, "x+y = z+2"),
        ],
        Subset::P11 => &[
            (x >= 2 && y >= 2, "x,y >= 2"),
            (z >= 3, "z >= 3"),
            (z > x && z > y, "z >= x+1, y+1"),
            (sum == z + 1 || sum + 1 == z, "x+y = z+1 or z-1"),
        ],
        Subset::P12 => &[
            (x >= 3 && y >= 3 && z >= 3, "x,y,z >= 3"),
            (z >= x + 2 && z >= y + 2, "z >= x+2, y+2"),
            (sum == z + 1, "x+y = z+1"),
        ],
        Subset::P01 => &[
            (
                (x >= 1 && y >= 1 && z >= 1) || (x == 0 && y == z) || (y == 0 && x == z),
                "x,y,z >= 1 or of the form (0,k,k)/(k,0,k)",
            ),
            (even_total, "x+y+z even"),
        ],
        Subset::P02 => &[
            (x >= 1 && y >= 1 && z >= 1, "x,y,z >= 1"),
            (even_total, "x+y+z even"),
        ],
    };
    checks.iter().find(|(ok, _)| !ok).map(|&(_, clause)| clause)
}

/// Distinct orderings of a triple.
fn permutations([a, b, c]: [u32; 3]) -> Vec<[u32; 3]> {
    let mut v = vec![[a, b, c], [a, c, b], [b, a, c], [b, c, a], [c, a, b], [c, b, a]];
    v.sort_unstable();
    v.dedup();
    v
}

#[derive(Default)]
struct StructureTally {
    members: [u64; 6],
    violations: Vec<Counterexample>,
}

impl StructureTally {
    fn merge(mut self, other: StructureTally) -> StructureTally {
        for (a, b) in self.members.iter_mut().zip(other.members) {
            *a += b;
        }
        self.violations.extend(other.violations);
        self
    }
}

/// Digit-relation sweep plus the per-set structure clauses, over every
/// ordering of every canonical triple in a max-pile bound. Also checks the
/// six sets are pairwise disjoint and that every `(0,k,k)` is in `P01`.
pub fn verify_lemma_structure(bound: &BoundSpec, opts: &HarnessOptions) -> Result<VerificationReport, HarnessError> {
    require_three_piles(bound)?;
    check_size(bound, opts)?;
    let start = Instant::now();
    // Under either mode no pile exceeds the limit.
    let max_pile = bound.limit;
    let (digit_checked, mut violations) = digit_sweep(max_pile);

    let positions = bound.positions();
    let tally = positions
        .par_iter()
        .fold(StructureTally::default, |mut acc, p| {
            let t = triple_of(p);
            for o in permutations(t) {
                let xyz = o.map(u64::from);
                let mut hits = Vec::new();
                for (i, s) in Subset::ALL.iter().enumerate() {
                    if !s.contains(xyz[0], xyz[1], xyz[2]) {
                        continue;
                    }
                    acc.members[i] += 1;
                    hits.push(s.label());
                    if let Some(clause) = structure_violation(*s, xyz) {
                        acc.violations.push(Counterexample::new(o, clause, s.label(), "structure clause fails"));
                    }
                }
                if hits.len() > 1 {
                    acc.violations.push(Counterexample::new(
                        o,
                        "at most one set",
                        hits.join("+"),
                        "ordered sets overlap",
                    ));
                }
            }
            acc
        })
        .reduce(StructureTally::default, StructureTally::merge);
    violations.extend(tally.violations);

    for k in 0..=max_pile {
        if bound.contains(&Position::new([0, k, k])) && !formula::in_p01(0, u64::from(k), u64::from(k)) {
            violations.push(Counterexample::new([0, k, k], "P_{0,1}", "not P_{0,1}", "(0,k,k) family"));
        }
    }

    let mut tallies = BTreeMap::new();
    tallies.insert("digit_relation_triples".to_string(), digit_checked);
    for (s, n) in Subset::ALL.iter().zip(tally.members) {
        tallies.insert(format!("members_{}", &subset_key(*s)[4..]), n);
    }
    Ok(VerificationReport::build(
        "lemma-structure",
        &Ruleset::RESTRICTED,
        bound,
        positions.len() as u64,
        Claim::Proven,
        violations,
        opts.counterexample_cap,
        elapsed_ms(start),
        tallies,
    ))
}

#[derive(Default)]
struct TransitionTally {
    p_positions: u64,
    non_p_positions: u64,
    p0_p1_steps: u64,
    merge_escapes: u64,
    violations: Vec<Counterexample>,
}

impl TransitionTally {
    fn merge(mut self, o: TransitionTally) -> TransitionTally {
        self.p_positions += o.p_positions;
        self.non_p_positions += o.non_p_positions;
        self.p0_p1_steps += o.p0_p1_steps;
        self.merge_escapes += o.merge_escapes;
        self.violations.extend(o.violations);
        self
    }
}

fn subset_of(p: &Position) -> Option<Subset> {
    membership(p).expect("3 piles").map(|m| m.subset)
}

/// Move-level facts behind the theorem, using only the classifier:
/// (a) no P-member has a P-member successor; (b) every other position has
/// one; (c) any single-pile move between `P0` and `P1` members lowers one
/// pile by exactly one, from an odd value.
pub fn verify_lemma_transitions(bound: &BoundSpec, opts: &HarnessOptions) -> Result<VerificationReport, HarnessError> {
    require_three_piles(bound)?;
    if !bound.is_move_closed() {
        return Err(HarnessError::NotMoveClosed);
    }
    check_size(bound, opts)?;
    let start = Instant::now();
    let rules = Ruleset::RESTRICTED;
    let positions = bound.positions();
    let tally = positions
        .par_iter()
        .fold(TransitionTally::default, |mut acc, p| {
            let from = subset_of(p);
            let from_p = from.is_some_and(Subset::is_p);
            let mut reaches_p = false;
            for (mv, q) in tagged_moves(p, &rules) {
                let to = subset_of(&q);
                let to_p = to.is_some_and(Subset::is_p);
                reaches_p |= to_p;
                if from_p && to_p {
                    acc.violations.push(Counterexample::new(
                        p.piles(),
                        "no P successor",
                        format!("{q} in {}", label(membership(&q).unwrap())),
                        format!("{} has a move into P", label(membership(p).unwrap())),
                    ));
                }
                if !from_p && to_p && mv.is_merge() {
                    acc.merge_escapes += 1;
                }
                if let (Some(a), Some(b), Move::Take { pile, to }) = (from, to, mv) {
                    if (a.is_p0() && b.is_p1()) || (a.is_p1() && b.is_p0()) {
                        acc.p0_p1_steps += 1;
                        let before = p.piles()[pile];
                        if before - to != 1 || before % 2 == 0 {
                            acc.violations.push(Counterexample::new(
                                p.piles(),
                                "one pile lowered by 1 from an odd size",
                                format!("pile {before} -> {to}"),
                                format!("{a} -> {b} move to {q}"),
                            ));
                        }
                    }
                }
            }
            if from_p {
                acc.p_positions += 1;
            } else {
                acc.non_p_positions += 1;
                if !reaches_p {
                    acc.violations.push(Counterexample::new(
                        p.piles(),
                        "some P successor",
                        "none",
                        format!("{} cannot reach P", label(membership(p).unwrap())),
                    ));
                }
            }
            acc
        })
        .reduce(TransitionTally::default, TransitionTally::merge);

    let mut tallies = BTreeMap::new();
    tallies.insert("p_positions".to_string(), tally.p_positions);
    tallies.insert("non_p_positions".to_string(), tally.non_p_positions);
    tallies.insert("p0_p1_single_steps".to_string(), tally.p0_p1_steps);
    tallies.insert("merge_moves_into_p".to_string(), tally.merge_escapes);
    Ok(VerificationReport::build(
        "lemma-transitions",
        &rules,
        bound,
        positions.len() as u64,
        Claim::Proven,
        tally.violations,
        opts.counterexample_cap,
        elapsed_ms(start),
        tallies,
    ))
}

/// `floor(g / 2) == floor(s / 2)` for Grundy value `g` and nim-sum `s`.
pub fn conjecture_holds(grundy: u64, nim_sum: u64) -> bool {
    grundy / 2 == nim_sum / 2
}

/// Grundy value recomputed outside the table: one mex over successors
/// whose values come from a fresh memoized recursion.
pub fn recheck_grundy(p: &Position, rules: &Ruleset) -> u32 {
    let mut fresh = Solver::new(*rules);
    let values: Vec<u32> = crate::position::legal_moves(p, rules)
        .iter()
        .map(|q| fresh.grundy(q))
        .collect();
    mex(&values)
}

/// Grundy value vs nim-sum pairing on the restricted game. Counterexamples
/// are only reported once an independent recomputation confirms the
/// Grundy value; a disagreement between the two routes is reported as an
/// oracle failure.
pub fn check_conjecture(bound: &BoundSpec, opts: &HarnessOptions) -> Result<VerificationReport, HarnessError> {
    require_three_piles(bound)?;
    let start = Instant::now();
    let rules = Ruleset::RESTRICTED;
    let table = retrograde_fill(bound, &rules, &opts.fill)?;
    let suspects: Vec<(&Position, u32)> = table
        .entries
        .iter()
        .filter(|(p, &g)| !conjecture_holds(u64::from(g), p.nim_sum()))
        .map(|(p, &g)| (p, g))
        .collect();
    let violations: Vec<Counterexample> = suspects
        .par_iter()
        .map(|&(p, g)| {
            let s = p.nim_sum();
            let again = recheck_grundy(p, &rules);
            if again == g {
                Counterexample::new(
                    p.piles(),
                    format!("nim-sum in {{{}, {}}}", g / 2 * 2, g / 2 * 2 + 1),
                    format!("grundy={g} nim_sum={s}"),
                    "confirmed by independent recomputation",
                )
            } else {
                Counterexample::new(
                    p.piles(),
                    format!("grundy={g}"),
                    format!("grundy={again}"),
                    "oracle routes disagree",
                )
            }
        })
        .collect();

    let mut tallies = BTreeMap::new();
    let equal = table
        .entries
        .iter()
        .filter(|(p, &g)| u64::from(g) == p.nim_sum())
        .count();
    tallies.insert("grundy_equals_nim_sum".to_string(), equal as u64);
    tallies.insert(
        "grundy_differs_in_bit0".to_string(),
        (table.len() - equal - suspects.len()) as u64,
    );
    Ok(VerificationReport::build(
        "conjecture",
        &rules,
        bound,
        table.len() as u64,
        Claim::Conjecture,
        violations,
        opts.counterexample_cap,
        elapsed_ms(start),
        tallies,
    ))
}

/// P-positions of unrestricted three-pile amalgamation with smallest pile
/// `<= small_heap_max` and largest pile `<= other_max`, in lexicographic
/// order.
pub fn emit_unrestricted_table(
    small_heap_max: u32,
    other_max: u32,
    opts: &HarnessOptions,
) -> Result<Vec<[u32; 3]>, HarnessError> {
    let bound = BoundSpec::max_pile(other_max, 3);
    let table = retrograde_fill(&bound, &Ruleset::AMALGAMATION, &opts.fill)?;
    Ok(table
        .entries
        .iter()
        .filter(|(p, &g)| g == 0 && p.piles()[0] <= small_heap_max)
        .map(|(p, _)| triple_of(p))
        .collect())
}

pub fn unrestricted_table_text(small_heap_max: u32, other_max: u32, rows: &[[u32; 3]]) -> String {
    let mut out = format!(
        "# amalgam-nim ppositions v1; ruleset=amalgamation; piles=3; small_max={small_heap_max}; max={other_max}\n"
    );
    for [a, b, c] in rows {
        out.push_str(&format!("{a},{b},{c}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Verdict;

    fn opts() -> HarnessOptions {
        HarnessOptions::default()
    }

    #[test]
    fn theorem_trivial_bound() {
        let r = verify_main_theorem(&BoundSpec::total_stones(0, 3), &opts()).unwrap();
        assert_eq!(r.checked, 1);
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!(r.tally("oracle_P"), 1);
    }

    #[test]
    fn theorem_small_bound() {
        let b = BoundSpec::total_stones(18, 3);
        let r = verify_main_theorem(&b, &opts()).unwrap();
        assert_eq!(r.verdict, Verdict::Pass, "{}", r.to_text());
        assert_eq!(r.checked as u128, b.cardinality());
    }

    #[test]
    fn theorem_rejects_two_piles() {
        assert_eq!(
            verify_main_theorem(&BoundSpec::total_stones(5, 2), &opts()),
            Err(HarnessError::PileCount(2))
        );
    }

    #[test]
    fn two_pile_small() {
        let r = verify_two_pile(20, &opts()).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!(r.checked, 231);
        assert_eq!(r.tally("oracle_P"), 21);
    }

    #[test]
    fn digit_mismatch_detects_wrong_relation() {
        assert_eq!(digit_mismatch(2, 4, 6), None);
        assert_eq!(digit_mismatch(3, 5, 6), None);
        assert_eq!(digit_mismatch(6, 10, 12), None);
    }

    #[test]
    fn structure_clauses_reject_non_members() {
        assert_eq!(structure_violation(Subset::N02, [3, 5, 6]), None);
        assert_eq!(structure_violation(Subset::N02, [3, 5, 7]), Some("z even"));
        assert_eq!(structure_violation(Subset::P01, [0, 3, 3]), None);
        assert_eq!(structure_violation(Subset::P01, [0, 3, 4]), Some("x,y,z >= 1 or of the form (0,k,k)/(k,0,k)"));
        assert_eq!(structure_violation(Subset::P12, [3, 5, 7]), None);
    }

    #[test]
    fn n02_members_up_to_eight() {
        let mut found = Vec::new();
        for x in 0..=8u64 {
            for y in 0..=8 {
                for z in 0..=8 {
                    if formula::in_n02(x, y, z) {
                        found.push([x, y, z]);
                    }
                }
            }
        }
        assert_eq!(found, vec![[3, 5, 6], [5, 3, 6]]);
    }

    #[test]
    fn structure_small_bound() {
        let r = verify_lemma_structure(&BoundSpec::max_pile(16, 3), &opts()).unwrap();
        assert_eq!(r.verdict, Verdict::Pass, "{}", r.to_text());
        assert_eq!(r.checked, 969);
    }

    #[test]
    fn transitions_need_move_closed_bound() {
        assert_eq!(
            verify_lemma_transitions(&BoundSpec::max_pile(10, 3), &opts()),
            Err(HarnessError::NotMoveClosed)
        );
    }

    #[test]
    fn transitions_small_bound() {
        let r = verify_lemma_transitions(&BoundSpec::total_stones(30, 3), &opts()).unwrap();
        assert_eq!(r.verdict, Verdict::Pass, "{}", r.to_text());
        assert!(r.tally("merge_moves_into_p") > 0);
    }

    #[test]
    fn n01_merges_into_p01() {
        let p = Position::new([2, 4, 6]);
        assert_eq!(subset_of(&p), Some(Subset::N01));
        let merged = tagged_moves(&p, &Ruleset::RESTRICTED)
            .into_iter()
            .find(|(m, q)| m.is_merge() && q.piles() == [0, 6, 6])
            .map(|(_, q)| q)
            .unwrap();
        assert_eq!(subset_of(&merged), Some(Subset::P01));
    }

    #[test]
    fn conjecture_points() {
        assert!(conjecture_holds(5, 5));
        assert!(conjecture_holds(1, 1));
        assert!(conjecture_holds(4, 5));
        assert!(!conjecture_holds(2, 1));
        let r = check_conjecture(&BoundSpec::max_pile(8, 3), &opts()).unwrap();
        assert_ne!(r.verdict, Verdict::Pass);
        assert_eq!(r.checked, 165);
    }

    #[test]
    fn unrestricted_small_table() {
        let rows = emit_unrestricted_table(7, 12, &opts()).unwrap();
        for k in 0..=12 {
            assert!(rows.contains(&[0, k, k]));
        }
        assert!(!rows.contains(&[0, 1, 2]));
        assert!(rows.windows(2).all(|w| w[0] < w[1]));
        assert!(rows.iter().all(|r| r[0] <= 7 && r[2] <= 12));
    }
}
