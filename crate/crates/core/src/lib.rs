//! Restricted Amalgamation Nim.
//!
//! Players alternately either remove stones from one pile or merge two
//! piles into one; in the restricted game a merge needs both piles to hold
//! at least two stones. The last player to move wins.
//!
//! This crate provides:
//!
//! * [`position`]: positions, rulesets and move generation for classic
//!   Nim, unrestricted amalgamation and the restricted game;
//! * [`formula`]: a constant-time P/N classifier for three-pile restricted
//!   positions;
//! * [`solver`] and [`table`]: a brute-force Sprague-Grundy oracle with
//!   retrograde table fill and a text table format;
//! * [`harness`] and [`report`]: sweeps comparing the classifier and its
//!   structural lemmas against the oracle, with JSON/text reports.

pub mod bound;
pub mod formula;
pub mod harness;
pub mod position;
pub mod report;
pub mod solver;
pub mod table;

pub use bound::{BoundMode, BoundSpec};
pub use formula::{classify, digit_relation, membership, DigitRelation, Membership, Subset};
pub use position::{canonicalize, legal_moves, Move, Outcome, Position, Ruleset, RulesetKind};
pub use report::{ReportFormat, Verdict, VerificationReport};
pub use solver::{mex, retrograde_fill, FillOptions, GrundyTable, Solver, SolverError};
