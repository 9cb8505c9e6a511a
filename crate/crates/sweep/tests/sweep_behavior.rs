//! Harness-level behavior: determinism across worker counts, checkpoint
//! integrity, filter soundness, and root-enumeration completeness.

use std::fs;
use std::path::Path;

use cuboid_core::cuboidpoly::{cuboid_poly, ParamTriple};
use cuboid_core::exactalg::{Integer, Rational};
use cuboid_core::zirred::rational_roots;
use cuboid_sweep::{run, OutputFormat, Params, SweepConfig, SweepError, Task};

fn config(task: Task, max: u64, dir: &Path, name: &str) -> SweepConfig {
    let mut c = SweepConfig::new(task, max);
    c.out = Some(dir.join(format!("{name}.jsonl")));
    c.checkpoint = Some(dir.join(format!("{name}.ck")));
    c
}

/// Record lines with volatile timing fields zeroed.
fn normalized_lines(path: &Path) -> Vec<String> {
    fs::read_to_string(path)
        .unwrap()
        .lines()
        .map(|line| {
            let mut v: serde_json::Value = serde_json::from_str(line).unwrap();
            if let Some(obj) = v.as_object_mut() {
                if let Some(s) = obj.get_mut("summary") {
                    s["wall_millis"] = 0.into();
                } else {
                    obj.insert("millis".into(), 0.into());
                }
            }
            serde_json::to_string(&v).unwrap()
        })
        .collect()
}

#[test]
fn records_identical_across_worker_counts() {
    let dir = tempfile::tempdir().unwrap();
    let mut one = config(Task::Conjecture3, 6, dir.path(), "w1");
    one.workers = 1;
    let mut four = config(Task::Conjecture3, 6, dir.path(), "w4");
    four.workers = 4;

    let s1 = run(&one).unwrap().summary;
    let s4 = run(&four).unwrap().summary;
    assert_eq!(s1.enumerated, s4.enumerated);
    assert_eq!(s1.status_totals, s4.status_totals);
    assert_eq!(
        normalized_lines(&one.out.unwrap()),
        normalized_lines(&four.out.unwrap())
    );
}

#[test]
fn resume_may_change_worker_count() {
    let dir = tempfile::tempdir().unwrap();
    let full = config(Task::Conjecture1, 8, dir.path(), "full");
    run(&full).unwrap();

    let mut halted = config(Task::Conjecture1, 8, dir.path(), "part");
    halted.halt_after = Some(10);
    assert!(run(&halted).unwrap().halted);
    let mut resumed = config(Task::Conjecture1, 8, dir.path(), "part");
    resumed.resume = true;
    resumed.workers = 3;
    assert!(!run(&resumed).unwrap().halted);

    assert_eq!(
        normalized_lines(&dir.path().join("full.jsonl")),
        normalized_lines(&dir.path().join("part.jsonl"))
    );
}

#[test]
fn checkpoint_refuses_mismatched_config() {
    let dir = tempfile::tempdir().unwrap();
    let mut halted = config(Task::Conjecture1, 8, dir.path(), "run");
    halted.halt_after = Some(5);
    run(&halted).unwrap();

    let mut wrong = config(Task::Conjecture1, 9, dir.path(), "run");
    wrong.resume = true;
    match run(&wrong) {
        Err(SweepError::CheckpointMismatch) => {}
        other => panic!("expected mismatch, got {other:?}"),
    }
}

#[test]
fn resume_of_complete_run_is_refused() {
    let dir = tempfile::tempdir().unwrap();
    let done = config(Task::Conjecture1, 4, dir.path(), "done");
    run(&done).unwrap();
    let mut again = config(Task::Conjecture1, 4, dir.path(), "done");
    again.resume = true;
    match run(&again) {
        Err(SweepError::AlreadyComplete) => {}
        other => panic!("expected already-complete, got {other:?}"),
    }
}

#[test]
fn filters_are_sound_and_totals_add_up() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = config(Task::Conjecture1, 12, dir.path(), "f");
    let summary = run(&cfg).unwrap().summary;

    // independent recount of the grid
    let gcd = |mut a: u64, mut b: u64| {
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a
    };
    let mut expect_eq = 0u64;
    let mut expect_nc = 0u64;
    let mut expect_ok = 0u64;
    for a in 1..=12u64 {
        for u in 1..=12u64 {
            if a == u {
                expect_eq += 1;
            } else if gcd(a, u) != 1 {
                expect_nc += 1;
            } else {
                expect_ok += 1;
            }
        }
    }
    assert_eq!(summary.grid, 144);
    assert_eq!(summary.enumerated, expect_ok);
    assert_eq!(summary.skipped.get("a_eq_u"), Some(&expect_eq));
    assert_eq!(summary.skipped.get("not_coprime"), Some(&expect_nc));
    assert_eq!(
        summary.enumerated + summary.skipped.values().sum::<u64>(),
        summary.grid
    );
    assert_eq!(
        summary.status_totals.values().sum::<u64>(),
        summary.enumerated
    );

    // every emitted record satisfies the filters
    let body = fs::read_to_string(cfg.out.unwrap()).unwrap();
    for line in body.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        if v.get("summary").is_some() {
            continue;
        }
        let rec: cuboid_sweep::SweepRecord = serde_json::from_str(line).unwrap();
        match rec.parameters {
            Params::Pair { a, u } => {
                assert_ne!(a, u);
                assert_eq!(gcd(a, u), 1);
            }
            other => panic!("unexpected parameters {other:?}"),
        }
    }
}

#[test]
fn rational_root_enumeration_is_complete() {
    // oracle: evaluate at every integer divisor of the constant term, found
    // by exhaustive trial division
    let mut state = 0xfeed_5eed_0123_4567u64;
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    for _ in 0..100 {
        let (a, b, u) = (next() % 6 + 1, next() % 6 + 1, next() % 6 + 1);
        let f = cuboid_poly(&ParamTriple::from_u64(a, b, u).unwrap());
        let c0: u64 = (u * u * u * u) * (a * a * a * a) * (b * b * b * b);
        let mut divisors: Vec<u64> = Vec::new();
        let mut d = 1u64;
        while d * d <= c0 {
            if c0.is_multiple_of(d) {
                divisors.push(d);
                if d != c0 / d {
                    divisors.push(c0 / d);
                }
            }
            d += 1;
        }
        let mut oracle_roots: Vec<Rational> = Vec::new();
        for d in divisors {
            for signed in [d as i64, -(d as i64)] {
                let x = Rational::from_integer(Integer::from(signed));
                if f.eval(&x) == Rational::from_integer(Integer::from(0)) {
                    oracle_roots.push(x);
                }
            }
        }
        oracle_roots.sort();
        assert_eq!(
            rational_roots(&f),
            oracle_roots,
            "divisor enumeration mismatch at ({a},{b},{u})"
        );
    }
}

#[test]
fn csv_report_has_stable_schema() {
    let dir = tempfile::tempdir().unwrap();
    let mut cfg = config(Task::Conjecture1, 4, dir.path(), "csv");
    cfg.format = OutputFormat::Csv;
    cfg.out = Some(dir.path().join("csv.csv"));
    run(&cfg).unwrap();
    let body = fs::read_to_string(dir.path().join("csv.csv")).unwrap();
    let mut lines = body.lines();
    assert_eq!(
        lines.next().unwrap(),
        "parameters,case,status,certificate,roots,millis,seed"
    );
    let last = body.lines().last().unwrap();
    assert!(last.starts_with("# summary {"));
}
