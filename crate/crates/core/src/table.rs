//! Text format for Grundy tables.
//!
//! ```text
//! # amalgam-nim grundy v1; ruleset=restricted; threshold=2; piles=3; bound=total_stones:2
//! 0,0,0,0
//! 0,0,1,1
//! 0,0,2,2
//! 0,1,1,0
//! ```
//!
//! Rows are `x1,...,xk,grundy` for canonical positions in lexicographic
//! order, each newline-terminated.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::io;
use std::path::Path;

use thiserror::Error;

use crate::bound::{BoundMode, BoundSpec};
use crate::position::{write_csv, Position, Ruleset, RulesetKind};
use crate::solver::GrundyTable;

const MAGIC: &str = "# amalgam-nim grundy v1";

#[derive(Debug, Error)]
pub enum TableError {
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
    #[error("line {line}: malformed table: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("line {line}: ruleset mismatch: file has {found}, expected {expected}")]
    RulesetMismatch {
        line: usize,
        expected: Ruleset,
        found: Ruleset,
    },
    #[error("line {line}: truncated table: {reason}")]
    Truncated { line: usize, reason: String },
}

fn malformed(line: usize, reason: impl Into<String>) -> TableError {
    TableError::Malformed {
        line,
        reason: reason.into(),
    }
}

pub fn header_line(ruleset: &Ruleset, bound: &BoundSpec) -> String {
    format!(
        "{MAGIC}; ruleset={}; threshold={}; piles={}; bound={}:{}",
        ruleset.kind, ruleset.merge_threshold, bound.pile_count, bound.mode, bound.limit
    )
}

pub fn to_text(t: &GrundyTable) -> String {
    let mut out = header_line(&t.ruleset, &t.bound);
    out.push('\n');
    for (p, g) in &t.entries {
        write_csv(&mut out, p.piles()).expect("writing to a String");
        writeln!(out, ",{g}").expect("writing to a String");
    }
    out
}

pub fn save_table(t: &GrundyTable, path: impl AsRef<Path>) -> Result<(), TableError> {
    fs::write(path, to_text(t))?;
    Ok(())
}

pub fn load_table(path: impl AsRef<Path>) -> Result<GrundyTable, TableError> {
    parse_table(&fs::read_to_string(path)?)
}

/// Loads a table and rejects it unless it was built for `expected`.
pub fn load_table_for(path: impl AsRef<Path>, expected: &Ruleset) -> Result<GrundyTable, TableError> {
    let t = load_table(path)?;
    if t.ruleset != *expected {
        return Err(TableError::RulesetMismatch {
            line: 1,
            expected: *expected,
            found: t.ruleset,
        });
    }
    Ok(t)
}

fn parse_header(line: &str) -> Result<(Ruleset, BoundSpec), TableError> {
    let rest = line
        .strip_prefix(MAGIC)
        .ok_or_else(|| malformed(1, format!("expected header starting with {MAGIC:?}")))?;
    let mut fields: BTreeMap<&str, &str> = BTreeMap::new();
    for part in rest.split(';').map(str::trim).filter(|s| !s.is_empty()) {
        let (k, v) = part
            .split_once('=')
            .ok_or_else(|| malformed(1, format!("header field {part:?} is not key=value")))?;
        fields.insert(k.trim(), v.trim());
    }
    let field = |k: &str| {
        fields
            .get(k)
            .copied()
            .ok_or_else(|| malformed(1, format!("header is missing {k}")))
    };
    let kind: RulesetKind = field("ruleset")?.parse().map_err(|e| malformed(1, format!("{e}")))?;
    let threshold: u32 = field("threshold")?
        .parse()
        .map_err(|_| malformed(1, "threshold is not an integer"))?;
    let piles: usize = field("piles")?
        .parse()
        .map_err(|_| malformed(1, "piles is not an integer"))?;
    if piles == 0 {
        return Err(malformed(1, "piles must be positive"));
    }
    let (mode, limit) = field("bound")?
        .split_once(':')
        .ok_or_else(|| malformed(1, "bound is not mode:limit"))?;
    let mode: BoundMode = mode.parse().map_err(|e| malformed(1, format!("{e}")))?;
    let limit: u32 = limit.parse().map_err(|_| malformed(1, "bound limit is not an integer"))?;
    Ok((
        Ruleset::new(kind, threshold),
        BoundSpec {
            mode,
            limit,
            pile_count: piles,
        },
    ))
}

pub fn parse_table(text: &str) -> Result<GrundyTable, TableError> {
    let mut lines = text.split_inclusive('\n').enumerate().map(|(i, l)| (i + 1, l));
    let (_, header) = lines.next().ok_or_else(|| malformed(1, "empty file"))?;
    let (ruleset, bound) = parse_header(header.trim_end_matches('\n'))?;

    let mut entries = BTreeMap::new();
    let mut last: Option<Position> = None;
    let mut last_line = 1;
    for (no, raw) in lines {
        last_line = no;
        let Some(line) = raw.strip_suffix('\n') else {
            return Err(TableError::Truncated {
                line: no,
                reason: "last row is not newline-terminated".into(),
            });
        };
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != bound.pile_count + 1 {
            return Err(malformed(
                no,
                format!("expected {} fields, found {}", bound.pile_count + 1, fields.len()),
            ));
        }
        let nums = fields
            .iter()
            .map(|f| f.trim().parse::<u32>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| malformed(no, "non-integer field"))?;
        let (piles, g) = nums.split_at(bound.pile_count);
        if piles.windows(2).any(|w| w[0] > w[1]) {
            return Err(malformed(no, "position is not in canonical (sorted) form"));
        }
        let p = Position::new(piles.iter().copied());
        if !bound.contains(&p) {
            return Err(malformed(no, format!("position {p} lies outside bound {bound}")));
        }
        if last.as_ref().is_some_and(|prev| prev >= &p) {
            return Err(malformed(no, "rows are not in strictly increasing order"));
        }
        last = Some(p.clone());
        entries.insert(p, g[0]);
    }

    let expected = bound.cardinality();
    if (entries.len() as u128) < expected {
        return Err(TableError::Truncated {
            line: last_line + 1,
            reason: format!("{} rows present, bound {bound} has {expected}", entries.len()),
        });
    }
    Ok(GrundyTable {
        ruleset,
        bound,
        entries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::{retrograde_fill, FillOptions};

    fn tiny() -> GrundyTable {
        retrograde_fill(&BoundSpec::total_stones(2, 3), &Ruleset::RESTRICTED, &FillOptions::default()).unwrap()
    }

    #[test]
    fn text_form() {
        assert_eq!(
            to_text(&tiny()),
            "# amalgam-nim grundy v1; ruleset=restricted; threshold=2; piles=3; bound=total_stones:2\n\
             0,0,0,0\n0,0,1,1\n0,0,2,2\n0,1,1,0\n"
        );
    }

    #[test]
    fn round_trip_through_file() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("t.csv");
        let t = tiny();
        save_table(&t, &path).unwrap();
        assert_eq!(load_table(&path).unwrap(), t);
        assert_eq!(load_table_for(&path, &Ruleset::RESTRICTED).unwrap(), t);
    }

    #[test]
    fn ruleset_mismatch() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.csv");
        let t = retrograde_fill(&BoundSpec::total_stones(2, 3), &Ruleset::CLASSIC, &FillOptions::default()).unwrap();
        save_table(&t, &path).unwrap();
        let err = load_table_for(&path, &Ruleset::RESTRICTED).unwrap_err();
        assert!(matches!(err, TableError::RulesetMismatch { line: 1, .. }), "{err}");
    }

    #[test]
    fn empty_file_is_malformed() {
        assert!(matches!(parse_table(""), Err(TableError::Malformed { line: 1, .. })));
    }

    #[test]
    fn truncation_is_detected() {
        let text = to_text(&tiny());
        let cut = &text[..text.len() - 3];
        assert!(matches!(parse_table(cut), Err(TableError::Truncated { line: 5, .. })));
        let missing_row: String = text.lines().take(4).map(|l| format!("{l}\n")).collect();
        assert!(matches!(parse_table(&missing_row), Err(TableError::Truncated { line: 5, .. })));
    }

    #[test]
    fn bad_rows_report_line_numbers() {
        let h = header_line(&Ruleset::RESTRICTED, &BoundSpec::total_stones(2, 3));
        let cases = [
            (format!("{h}\n0,0,0\n"), 2),
            (format!("{h}\n0,0,0,0\n0,1,0,1\n"), 3),
            (format!("{h}\n0,0,0,0\n0,0,x,1\n"), 3),
            (format!("{h}\n0,0,1,1\n0,0,0,0\n"), 3),
            (format!("{h}\n0,0,3,3\n"), 2),
            ("# something else\n".to_string(), 1),
        ];
        for (text, line) in cases {
            match parse_table(&text) {
                Err(TableError::Malformed { line: l, .. }) => assert_eq!(l, line, "{text}"),
                other => panic!("expected malformed at {line}, got {other:?}"),
            }
        }
    }
}
