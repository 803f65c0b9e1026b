//! `amalgam-nim`: classify, solve and verify restricted Amalgamation Nim
//! positions.
//!
//! Exit codes: 0 success (or a passing / open verification), 1 failed
//! verification or resource limit, 2 usage error.

mod play;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use amalgam_nim::harness::{
    self, check_conjecture, emit_unrestricted_table, unrestricted_table_text, verify_lemma_structure,
    verify_lemma_transitions, verify_main_theorem, verify_two_pile, HarnessError, HarnessOptions,
};
use amalgam_nim::position::parse_piles;
use amalgam_nim::report::render_reports;
use amalgam_nim::table::to_text;
use amalgam_nim::{
    membership, retrograde_fill, BoundSpec, FillOptions, Outcome, Position, ReportFormat, Ruleset, RulesetKind,
    Solver, SolverError, VerificationReport,
};
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "amalgam-nim", version, about = "Restricted Amalgamation Nim solver and verifier")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Closed-form P/N classification of a 3-pile restricted position.
    Classify {
        #[arg(long, value_parser = parse_pos)]
        pos: Piles,
    },
    /// Outcome (P or N) by exhaustive search.
    Solve {
        #[arg(long, value_parser = parse_pos)]
        pos: Piles,
        #[command(flatten)]
        rules: RulesArgs,
    },
    /// Grundy value by exhaustive search.
    Grundy {
        #[arg(long, value_parser = parse_pos)]
        pos: Piles,
        #[command(flatten)]
        rules: RulesArgs,
    },
    /// Run a verification sweep and write its report.
    Verify(VerifyArgs),
    /// Write a Grundy table, or the unrestricted P-position list.
    Table(TableArgs),
    /// Play against the engine from a position.
    Play {
        #[arg(long, value_parser = parse_pos)]
        pos: Piles,
        #[command(flatten)]
        rules: RulesArgs,
    },
}

#[derive(Args, Debug, Clone, Copy)]
struct RulesArgs {
    #[arg(long, value_enum, default_value = "restricted")]
    rules: Rules,
    /// Minimum size of both piles for a restricted merge.
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(1..))]
    threshold: u32,
}

impl RulesArgs {
    fn ruleset(&self) -> Ruleset {
        Ruleset::new(self.rules.into(), self.threshold)
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Rules {
    Classic,
    Amalgamation,
    Restricted,
}

impl From<Rules> for RulesetKind {
    fn from(r: Rules) -> Self {
        match r {
            Rules::Classic => RulesetKind::Classic,
            Rules::Amalgamation => RulesetKind::Amalgamation,
            Rules::Restricted => RulesetKind::Restricted,
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Check {
    Theorem,
    Lemmas,
    LemmaStructure,
    LemmaTransitions,
    TwoPile,
    Conjecture,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Json,
    Text,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(value_enum)]
    check: Check,
    #[arg(long)]
    max_total: Option<u32>,
    #[arg(long)]
    max_pile: Option<u32>,
    /// Largest pile for `two-pile`.
    #[arg(long)]
    max: Option<u32>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long, default_value_t = harness::DEFAULT_COUNTEREXAMPLE_CAP)]
    max_counterexamples: usize,
}

#[derive(Args, Debug)]
struct TableArgs {
    #[command(flatten)]
    rules: RulesArgs,
    #[arg(long)]
    max_total: Option<u32>,
    #[arg(long)]
    max_pile: Option<u32>,
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(1..))]
    piles: u64,
    /// Output file; standard output when absent.
    #[arg(long)]
    csv: Option<PathBuf>,
    /// List unrestricted amalgamation P-positions instead of a Grundy table.
    #[arg(long)]
    ppositions: bool,
    /// Largest smallest-pile for `--ppositions`.
    #[arg(long, default_value_t = 7)]
    small_max: u32,
    /// Largest pile for `--ppositions`.
    #[arg(long)]
    max: Option<u32>,
    #[arg(long, default_value_t = amalgam_nim::solver::DEFAULT_ENTRY_CEILING)]
    ceiling: u64,
}

/// Piles in the order given on the command line.
#[derive(Debug, Clone)]
struct Piles(Vec<u32>);

fn parse_pos(s: &str) -> Result<Piles, String> {
    parse_piles(s).map(Piles).map_err(|e| e.to_string())
}

/// Failures mapped onto the exit-code contract.
enum Failure {
    Usage(String),
    Resource(String),
    Verification,
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<SolverError> for Failure {
    fn from(e: SolverError) -> Self {
        Failure::Resource(e.to_string())
    }
}

impl From<HarnessError> for Failure {
    fn from(e: HarnessError) -> Self {
        match e {
            HarnessError::Solver(s) => s.into(),
            other => Failure::Usage(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Resource(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(cmd: Command) -> Result<(), Failure> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match cmd {
        Command::Classify { pos: Piles(pos) } => {
            if pos.len() != 3 {
                return Err(Failure::Usage(format!(
                    "classify needs exactly 3 piles, got {}",
                    pos.len()
                )));
            }
            let p = Position::new(pos);
            let m = membership(&p).expect("3 piles");
            match m {
                Some(m) => {
                    let outcome = if m.subset.is_p() { Outcome::P } else { Outcome::N };
                    writeln!(out, "{outcome} ({m})")?;
                    let [x, y, z] = m.ordered;
                    writeln!(out, "orientation: (x,y,z) = ({x},{y},{z})")?;
                }
                None => writeln!(out, "N (no set)")?,
            }
        }
        Command::Solve { pos: Piles(pos), rules } => {
            let mut s = Solver::new(rules.ruleset());
            writeln!(out, "{}", s.outcome(&Position::new(pos)))?;
        }
        Command::Grundy { pos: Piles(pos), rules } => {
            let mut s = Solver::new(rules.ruleset());
            writeln!(out, "{}", s.grundy(&Position::new(pos)))?;
        }
        Command::Verify(args) => verify(args, &mut out)?,
        Command::Table(args) => table(args, &mut out)?,
        Command::Play { pos: Piles(pos), rules } => {
            let stdin = io::stdin();
            play::run(pos, rules.ruleset(), &mut stdin.lock(), &mut out)?;
        }
    }
    Ok(())
}

fn usage<T>(msg: &str) -> Result<T, Failure> {
    Err(Failure::Usage(msg.to_string()))
}

fn verify(args: VerifyArgs, out: &mut impl Write) -> Result<(), Failure> {
    let opts = HarnessOptions {
        counterexample_cap: args.max_counterexamples,
        ..HarnessOptions::default()
    };
    let total_or_pile = |default_total: Option<u32>, default_pile: Option<u32>| {
        match (args.max_total, args.max_pile) {
            (Some(_), Some(_)) => usage("give at most one of --max-total and --max-pile"),
            (Some(t), None) => Ok(BoundSpec::total_stones(t, 3)),
            (None, Some(m)) => Ok(BoundSpec::max_pile(m, 3)),
            (None, None) => match (default_total, default_pile) {
                (Some(t), _) => Ok(BoundSpec::total_stones(t, 3)),
                (None, Some(m)) => Ok(BoundSpec::max_pile(m, 3)),
                (None, None) => unreachable!(),
            },
        }
    };
    if args.max.is_some() && args.check != Check::TwoPile {
        return usage("--max only applies to two-pile");
    }
    let structure_bound = || BoundSpec::max_pile(args.max_pile.unwrap_or(harness::DEFAULT_STRUCTURE_MAX_PILE), 3);
    let transition_bound = || BoundSpec::total_stones(args.max_total.unwrap_or(harness::DEFAULT_LEMMA_TOTAL), 3);

    let reports: Vec<VerificationReport> = match args.check {
        Check::Theorem => {
            vec![verify_main_theorem(&total_or_pile(Some(harness::DEFAULT_THEOREM_TOTAL), None)?, &opts)?]
        }
        Check::Conjecture => {
            vec![check_conjecture(&total_or_pile(None, Some(harness::DEFAULT_CONJECTURE_MAX_PILE))?, &opts)?]
        }
        Check::TwoPile => {
            if args.max_total.is_some() || args.max_pile.is_some() {
                return usage("two-pile takes --max");
            }
            vec![verify_two_pile(args.max.unwrap_or(harness::DEFAULT_TWO_PILE_MAX), &opts)?]
        }
        Check::LemmaStructure => {
            if args.max_total.is_some() {
                return usage("lemma-structure takes --max-pile");
            }
            vec![verify_lemma_structure(&structure_bound(), &opts)?]
        }
        Check::LemmaTransitions => {
            if args.max_pile.is_some() {
                return usage("lemma-transitions needs a move-closed bound; use --max-total");
            }
            vec![verify_lemma_transitions(&transition_bound(), &opts)?]
        }
        Check::Lemmas => vec![
            verify_lemma_structure(&structure_bound(), &opts)?,
            verify_lemma_transitions(&transition_bound(), &opts)?,
        ],
    };

    for r in &reports {
        eprintln!("{}: elapsed {} ms", r.check, r.elapsed_ms);
    }
    let format = match args.format {
        Format::Json => ReportFormat::Json,
        Format::Text => ReportFormat::Text,
    };
    match &args.out {
        Some(path) => {
            fs::write(path, render_reports(&reports, format))?;
            for r in &reports {
                writeln!(out, "{}", r.summary_line())?;
            }
        }
        None => out.write_all(render_reports(&reports, format).as_bytes())?,
    }
    if reports.iter().all(VerificationReport::passed) {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn table(args: TableArgs, out: &mut impl Write) -> Result<(), Failure> {
    let opts = HarnessOptions {
        fill: FillOptions {
            entry_ceiling: args.ceiling,
        },
        ..HarnessOptions::default()
    };
    let text = if args.ppositions {
        if args.rules.rules != Rules::Amalgamation {
            return Err(Failure::Usage("--ppositions lists unrestricted amalgamation positions; pass --rules amalgamation".into()));
        }
        if args.max_total.is_some() || args.max_pile.is_some() || args.piles != 3 {
            return Err(Failure::Usage("--ppositions takes --small-max and --max only".into()));
        }
        let max = args
            .max
            .ok_or_else(|| Failure::Usage("--ppositions needs --max".into()))?;
        let rows = emit_unrestricted_table(args.small_max, max, &opts)?;
        unrestricted_table_text(args.small_max, max, &rows)
    } else {
        if args.max.is_some() {
            return Err(Failure::Usage("--max only applies with --ppositions".into()));
        }
        let piles = args.piles as usize;
        let bound = match (args.max_total, args.max_pile) {
            (Some(t), None) => BoundSpec::total_stones(t, piles),
            (None, Some(m)) => BoundSpec::max_pile(m, piles),
            _ => return Err(Failure::Usage("give exactly one of --max-total and --max-pile".into())),
        };
        let table = retrograde_fill(&bound, &args.rules.ruleset(), &opts.fill)?;
        to_text(&table)
    };
    match args.csv {
        Some(path) => fs::write(path, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}
