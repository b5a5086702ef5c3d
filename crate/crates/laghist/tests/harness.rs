//! Cross-cutting exercises of the verification runner: every check at a
//! moderate scale, sharded and unsharded, must agree case for case.

use laghist::verify::{run_check, Check};

#[test]
fn every_check_passes_at_n5() {
    for check in Check::SINGLE {
        let report = run_check(check, 5, 1);
        assert!(
            report.passed,
            "{} failed; first: {:?}",
            report.check_name,
            report.failures.first()
        );
        assert_eq!(report.n_range, [0, 5]);
        assert!(report.failures.is_empty());
    }
}

#[test]
fn worker_count_does_not_change_any_verdict() {
    for check in Check::SINGLE {
        let lone = run_check(check, 4, 1);
        let sharded = run_check(check, 4, 3);
        assert_eq!(lone.check_name, sharded.check_name);
        assert_eq!(lone.cases_run, sharded.cases_run, "{}", lone.check_name);
        assert_eq!(lone.failures, sharded.failures, "{}", lone.check_name);
        assert_eq!(lone.passed, sharded.passed);
    }
}

#[test]
fn aggregate_check_totals_every_single_check() {
    let all = run_check(Check::All, 5, 2);
    assert!(all.passed);
    // six permutation-indexed checks at 154 = 0! + ... + 5! cases each,
    // plus two moment checks at one case per degree 0..=5
    assert_eq!(all.cases_run, 6 * 154 + 2 * 6);
    assert_eq!(all.check_name, "all");
}

#[test]
fn zero_workers_is_treated_as_one() {
    let report = run_check(Check::Roundtrip, 3, 0);
    assert!(report.passed);
    assert_eq!(report.cases_run, 10);
}
