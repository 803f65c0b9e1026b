//! Acceptance gate. Each test covers one criterion and prints a single
//! `PASS`/`FAIL` line; run with `--nocapture` to see them.

use std::time::{Duration, Instant};

use amalgam_nim::formula::{in_n02, in_p02, in_p12};
use amalgam_nim::harness::{
    check_conjecture, verify_digit_relation, verify_lemma_structure, verify_lemma_transitions,
    verify_main_theorem, verify_two_pile, HarnessOptions,
};
use amalgam_nim::table::{load_table, save_table, to_text};
use amalgam_nim::{retrograde_fill, BoundSpec, FillOptions, Ruleset, Solver, Verdict, VerificationReport};

fn report_line(criterion: u32, name: &str, ok: bool, detail: impl AsRef<str>) {
    println!(
        "[acceptance] {criterion}. {name}: {} ({})",
        if ok { "PASS" } else { "FAIL" },
        detail.as_ref()
    );
}

fn summary(r: &VerificationReport) -> String {
    format!("{} checked, verdict {}, {} ms", r.checked, r.verdict.as_str(), r.elapsed_ms)
}

#[test]
fn c1_main_theorem_total_150() {
    let start = Instant::now();
    let bound = BoundSpec::total_stones(150, 3);
    let r = verify_main_theorem(&bound, &HarnessOptions::default()).unwrap();
    let took = start.elapsed();
    let ok = r.verdict == Verdict::Pass && r.counterexamples.is_empty() && took < Duration::from_secs(60);
    report_line(1, "main theorem, total <= 150", ok, format!("{}, wall {:?}", summary(&r), took));
    assert_eq!(r.checked as u128, bound.cardinality());
    assert!(r.counterexamples.is_empty(), "{}", r.to_text());
    assert_eq!(r.verdict, Verdict::Pass);
    assert!(took < Duration::from_secs(60), "took {took:?}");
}

#[test]
fn c2_two_pile_theorem_256() {
    let r = verify_two_pile(256, &HarnessOptions::default()).unwrap();
    let ok = r.verdict == Verdict::Pass && r.checked == 257 * 258 / 2 && r.tally("oracle_P") == 257;
    report_line(2, "two-pile amalgamation, max pile 256", ok, summary(&r));
    assert!(ok, "{}", r.to_text());
}

#[test]
fn c3_digit_relation_512() {
    let r = verify_digit_relation(512, &HarnessOptions::default()).unwrap();
    let ok = r.verdict == Verdict::Pass && r.checked > 0;
    report_line(3, "digit relation vs arithmetic, max pile 512", ok, summary(&r));
    assert!(ok, "{}", r.to_text());
}

#[test]
fn c4_lemma_structure_128() {
    let r = verify_lemma_structure(&BoundSpec::max_pile(128, 3), &HarnessOptions::default()).unwrap();
    let sets = ["P01", "P02", "P11", "P12", "N01", "N02"];
    let empty: Vec<_> = sets.iter().filter(|s| r.tally(&format!("members_{s}")) == 0).collect();
    let named = in_n02(3, 5, 6) && in_p12(3, 5, 7) && in_p02(6, 10, 12);
    let ok = r.verdict == Verdict::Pass && empty.is_empty() && named;
    let counts: Vec<String> = sets
        .iter()
        .map(|s| format!("{s}={}", r.tally(&format!("members_{s}"))))
        .collect();
    report_line(4, "structure suites, max pile 128", ok, format!("{}; {}", summary(&r), counts.join(" ")));
    assert!(r.counterexamples.is_empty(), "{}", r.to_text());
    assert!(empty.is_empty(), "empty sets: {empty:?}");
    assert!(named);
}

#[test]
fn c5_lemma_transitions_120() {
    let r = verify_lemma_transitions(&BoundSpec::total_stones(120, 3), &HarnessOptions::default()).unwrap();
    let ok = r.verdict == Verdict::Pass && r.tally("p_positions") > 0 && r.tally("non_p_positions") > 0;
    report_line(
        5,
        "transition suite, total <= 120",
        ok,
        format!(
            "{}; P={} non-P={} P0<->P1 single steps={}",
            summary(&r),
            r.tally("p_positions"),
            r.tally("non_p_positions"),
            r.tally("p0_p1_single_steps")
        ),
    );
    assert!(ok, "{}", r.to_text());
}

#[test]
fn c6_classic_nim_calibration_60() {
    let bound = BoundSpec::total_stones(60, 3);
    let table = retrograde_fill(&bound, &Ruleset::CLASSIC, &FillOptions::default()).unwrap();
    let mut memo = Solver::new(Ruleset::CLASSIC);
    let mismatches: Vec<_> = table
        .entries
        .iter()
        .filter(|(p, &g)| u64::from(g) != p.nim_sum() || u64::from(memo.grundy(p)) != p.nim_sum())
        .map(|(p, _)| p.clone())
        .collect();
    let ok = mismatches.is_empty() && table.len() as u128 == bound.cardinality();
    report_line(6, "classic grundy = nim-sum, total <= 60", ok, format!("{} positions", table.len()));
    assert!(mismatches.is_empty(), "{mismatches:?}");
}

#[test]
fn c7_conjecture_48() {
    let r = check_conjecture(&BoundSpec::max_pile(48, 3), &HarnessOptions::default()).unwrap();
    let ok = r.verdict == Verdict::Open;
    report_line(
        7,
        "grundy/nim-sum conjecture, max pile 48",
        ok,
        format!("{}; {} confirmed counterexamples", summary(&r), r.tally("violations")),
    );
    assert_eq!(r.checked, 51 * 50 * 49 / 6);
    assert_eq!(r.verdict, Verdict::Open, "{}", r.to_text());
}

fn without_timing(mut r: VerificationReport) -> String {
    r.elapsed_ms = 0;
    r.to_json()
}

fn in_pool<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> T {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .unwrap()
        .install(f)
}

#[test]
fn c8_determinism_and_persistence() {
    let bound = BoundSpec::total_stones(40, 3);
    let rules = Ruleset::RESTRICTED;
    let opts = FillOptions::default();

    let table = retrograde_fill(&bound, &rules, &opts).unwrap();
    let mut memo = Solver::new(rules);
    let fill_vs_memo = table.entries.iter().all(|(p, &g)| memo.grundy(p) == g)
        && table.len() as u128 == bound.cardinality();

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("restricted-40.csv");
    save_table(&table, &path).unwrap();
    let loaded = load_table(&path).unwrap();
    let bytes = std::fs::read(&path).unwrap();
    let round_trip = loaded == table && to_text(&loaded).into_bytes() == bytes;

    let single = in_pool(1, || retrograde_fill(&bound, &rules, &opts).unwrap());
    let many = in_pool(4, || retrograde_fill(&bound, &rules, &opts).unwrap());
    let fill_deterministic = to_text(&single) == to_text(&many) && single == table;

    let h = HarnessOptions::default();
    let sweeps = |threads| {
        in_pool(threads, || {
            [
                without_timing(verify_lemma_transitions(&bound, &h).unwrap()),
                without_timing(verify_lemma_structure(&BoundSpec::max_pile(24, 3), &h).unwrap()),
                without_timing(check_conjecture(&BoundSpec::max_pile(16, 3), &h).unwrap()),
                without_timing(verify_main_theorem(&bound, &h).unwrap()),
            ]
        })
    };
    let sweeps_deterministic = sweeps(1) == sweeps(4);

    let ok = fill_vs_memo && round_trip && fill_deterministic && sweeps_deterministic;
    report_line(
        8,
        "determinism and persistence, total <= 40",
        ok,
        format!(
            "fill=memo {fill_vs_memo}, round trip {round_trip}, fill 1 vs 4 threads {fill_deterministic}, sweeps 1 vs 4 threads {sweeps_deterministic}"
        ),
    );
    assert!(ok);
}
