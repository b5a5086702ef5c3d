//! Exhaustive verification of every identity the library implements, over
//! all permutations and histories up to a length bound, with a
//! machine-readable report per check. Checks can fan out over worker
//! threads; sharding is by round-robin striding and the merged report is
//! byte-identical for any worker count.

use std::collections::HashMap;
use std::time::Instant;

use serde::Serialize;

use crate::bijections::{phi, phi_cap, rho1, rho1_inv, rho2};
use crate::contfrac::{
    brute_force_jacobi, brute_force_mu, jacobi_moments, stieltjes_moments, CountingStatistic,
    JSchedule, SSchedule,
};
use crate::laguerre::{self, history_profile, LaguerreHistory};
use crate::perm::Permutation;
use crate::theta::{decode, encode};

/// The verification suites the harness knows how to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Check {
    /// decode∘encode = id on permutations and encode∘decode = id on
    /// histories.
    Roundtrip,
    /// The history-side statistic sets equal the permutation-side ones.
    Transport,
    /// phi transports (antirecords → cycle maxima) and preserves the rest;
    /// plus the induced multiset equality of sextuple profiles.
    Theorem1,
    /// phi_cap swaps cycle maxima with antirecords, preserves the rest, and
    /// squares to the identity; plus the quintuple multiset equality.
    Theorem2,
    /// rho1 and rho1_inv compose to the identity both ways.
    Rho1Bijection,
    /// rho2 squares to the identity.
    Rho2Involution,
    /// Staircase-fraction moments equal both brute-force sums.
    CfStieltjes,
    /// Three-term-fraction moments equal the brute-force sum, which is
    /// x/y-symmetric.
    CfJacobi,
    /// Every check above, merged into one report.
    All,
}

impl Check {
    /// The individual suites, in report order.
    pub const SINGLE: [Check; 8] = [
        Check::Roundtrip,
        Check::Transport,
        Check::Theorem1,
        Check::Theorem2,
        Check::Rho1Bijection,
        Check::Rho2Involution,
        Check::CfStieltjes,
        Check::CfJacobi,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Roundtrip => "roundtrip",
            Check::Transport => "transport",
            Check::Theorem1 => "theorem1",
            Check::Theorem2 => "theorem2",
            Check::Rho1Bijection => "rho1-bijection",
            Check::Rho2Involution => "rho2-involution",
            Check::CfStieltjes => "cf-stieltjes",
            Check::CfJacobi => "cf-jacobi",
            Check::All => "all",
        }
    }

    pub fn parse(name: &str) -> Option<Check> {
        match name {
            "roundtrip" => Some(Check::Roundtrip),
            "transport" => Some(Check::Transport),
            "theorem1" => Some(Check::Theorem1),
            "theorem2" => Some(Check::Theorem2),
            "rho1-bijection" => Some(Check::Rho1Bijection),
            "rho2-involution" => Some(Check::Rho2Involution),
            "cf-stieltjes" => Some(Check::CfStieltjes),
            "cf-jacobi" => Some(Check::CfJacobi),
            "all" => Some(Check::All),
            _ => None,
        }
    }
}

/// One disagreement found by a check.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Failure {
    pub input: String,
    pub expected: String,
    pub actual: String,
}

/// The outcome of one check run. `passed` is true exactly when `failures`
/// is empty.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub check_name: String,
    pub n_range: [usize; 2],
    pub cases_run: u64,
    pub failures: Vec<Failure>,
    pub elapsed_ms: u64,
    pub passed: bool,
}

/// Runs one check over n = 0..=n_max with the given worker count and
/// returns its report. The report is independent of the worker count
/// except for the elapsed time.
pub fn run_check(check: Check, n_max: usize, workers: usize) -> VerificationReport {
    let workers = workers.max(1);
    let start = Instant::now();
    let (cases_run, mut failures) = match check {
        Check::Roundtrip => check_roundtrip(n_max, workers),
        Check::Transport => check_transport(n_max, workers),
        Check::Theorem1 => check_theorem1(n_max, workers),
        Check::Theorem2 => check_theorem2(n_max, workers),
        Check::Rho1Bijection => check_rho1_bijection(n_max, workers),
        Check::Rho2Involution => check_rho2_involution(n_max, workers),
        Check::CfStieltjes => check_cf_stieltjes(n_max),
        Check::CfJacobi => check_cf_jacobi(n_max),
        Check::All => {
            let mut cases = 0u64;
            let mut failures = Vec::new();
            for sub in Check::SINGLE {
                let report = run_check(sub, n_max, workers);
                cases += report.cases_run;
                for f in report.failures {
                    failures.push(Failure {
                        input: format!("{}: {}", sub.name(), f.input),
                        ..f
                    });
                }
            }
            (cases, failures)
        }
    };
    failures.sort();
    let passed = failures.is_empty();
    VerificationReport {
        check_name: check.name().to_string(),
        n_range: [0, n_max],
        cases_run,
        failures,
        elapsed_ms: start.elapsed().as_millis() as u64,
        passed,
    }
}

/// Accumulator a worker fills while scanning its shard.
#[derive(Default)]
struct ShardOutcome {
    cases: u64,
    failures: Vec<Failure>,
    /// Signed tallies for multiset comparisons: one side increments, the
    /// other decrements; a balanced multiset leaves every count at zero.
    tallies: HashMap<String, i64>,
}

impl ShardOutcome {
    fn merge(mut self, other: ShardOutcome) -> ShardOutcome {
        self.cases += other.cases;
        self.failures.extend(other.failures);
        for (key, count) in other.tallies {
            *self.tallies.entry(key).or_insert(0) += count;
        }
        self
    }
}

/// Runs `per_item` over every permutation of [n], striding by worker.
fn scan_permutations<F>(n: usize, workers: usize, per_item: &F) -> ShardOutcome
where
    F: Fn(&Permutation, &mut ShardOutcome) + Sync,
{
    let worker_body = |worker: usize| {
        let mut local = ShardOutcome::default();
        for (idx, p) in Permutation::all(n).enumerate() {
            if idx % workers == worker {
                local.cases += 1;
                per_item(&p, &mut local);
            }
        }
        local
    };
    if workers == 1 {
        return worker_body(0);
    }
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| scope.spawn(move || worker_body(w)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("verification worker panicked"))
            .fold(ShardOutcome::default(), ShardOutcome::merge)
    })
}

/// Runs `per_item` over every history of length n, striding by step word.
fn scan_histories<F>(n: usize, workers: usize, per_item: &F) -> ShardOutcome
where
    F: Fn(&LaguerreHistory, &mut ShardOutcome) + Sync,
{
    let worker_body = |worker: usize| {
        let mut local = ShardOutcome::default();
        for (idx, word) in laguerre::step_words(n).into_iter().enumerate() {
            if idx % workers == worker {
                laguerre::for_each_labeling(&word, |h| {
                    local.cases += 1;
                    per_item(h, &mut local);
                });
            }
        }
        local
    };
    if workers == 1 {
        return worker_body(0);
    }
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| scope.spawn(move || worker_body(w)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("verification worker panicked"))
            .fold(ShardOutcome::default(), ShardOutcome::merge)
    })
}

fn fmt_set(set: &[usize]) -> String {
    let items: Vec<String> = set.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", items.join(","))
}

fn fmt_named_sets(named: &[(&str, &[usize])]) -> String {
    let parts: Vec<String> = named
        .iter()
        .map(|(name, set)| format!("{name}={}", fmt_set(set)))
        .collect();
    parts.join(" ")
}

/// Positional serialization used as a multiset element, where the two sides
/// of an equidistribution pair tuples with different leading statistics.
fn tuple_key(sets: &[&[usize]]) -> String {
    let parts: Vec<String> = sets.iter().map(|s| fmt_set(s)).collect();
    parts.join("|")
}

fn check_roundtrip(n_max: usize, workers: usize) -> (u64, Vec<Failure>) {
    let mut cases = 0u64;
    let mut failures = Vec::new();
    for n in 0..=n_max {
        // one case per permutation–history pair; the history side revisits
        // the same n! objects from the other direction
        let perm_side = scan_permutations(n, workers, &|p, out| {
            let decoded = decode(&encode(p));
            if decoded != *p {
                out.failures.push(Failure {
                    input: p.to_string(),
                    expected: p.to_string(),
                    actual: decoded.to_string(),
                });
            }
        });
        let history_side = scan_histories(n, workers, &|h, out| {
            let reencoded = encode(&decode(h));
            if reencoded != *h {
                out.failures.push(Failure {
                    input: h.to_string(),
                    expected: h.to_string(),
                    actual: reencoded.to_string(),
                });
            }
        });
        cases += perm_side.cases;
        failures.extend(perm_side.failures);
        failures.extend(history_side.failures);
    }
    (cases, failures)
}

fn check_transport(n_max: usize, workers: usize) -> (u64, Vec<Failure>) {
    let mut cases = 0u64;
    let mut failures = Vec::new();
    for n in 0..=n_max {
        let outcome = scan_permutations(n, workers, &|p, out| {
            let perm_profile = p.profile();
            let hist_profile = history_profile(&encode(p));
            let expected = fmt_named_sets(&[
                ("arecp", &perm_profile.arecp),
                ("erecl", &perm_profile.erecl),
                ("erecp", &perm_profile.erecp),
                ("excp", &perm_profile.excp),
                ("excl", &perm_profile.excl),
                ("rar", &perm_profile.rar),
                ("cyc", &perm_profile.cyc),
            ]);
            let actual = fmt_named_sets(&[
                ("arecp", &hist_profile.arecp),
                ("erecl", &hist_profile.erecl),
                ("erecp", &hist_profile.erecp),
                ("excp", &hist_profile.excp),
                ("excl", &hist_profile.excl),
                ("rar", &hist_profile.rar),
                ("cyc", &hist_profile.cyc),
            ]);
            if expected != actual {
                out.failures.push(Failure { input: p.to_string(), expected, actual });
            }
        });
        cases += outcome.cases;
        failures.extend(outcome.failures);
    }
    (cases, failures)
}

fn check_theorem1(n_max: usize, workers: usize) -> (u64, Vec<Failure>) {
    let mut cases = 0u64;
    let mut failures = Vec::new();
    for n in 0..=n_max {
        let outcome = scan_permutations(n, workers, &|p, out| {
            let source = p.profile();
            let image = phi(p);
            let target = image.profile();
            let expected = fmt_named_sets(&[
                ("cyc", &source.arecp),
                ("erecp", &source.erecp),
                ("erecl", &source.erecl),
                ("excp", &source.excp),
                ("excl", &source.excl),
                ("rar", &source.rar),
            ]);
            let actual = fmt_named_sets(&[
                ("cyc", &target.cyc),
                ("erecp", &target.erecp),
                ("erecl", &target.erecl),
                ("excp", &target.excp),
                ("excl", &target.excl),
                ("rar", &target.rar),
            ]);
            if expected != actual {
                out.failures.push(Failure { input: p.to_string(), expected, actual });
            }
            // multiset side: antirecord-led sextuples vs cycle-led sextuples
            let lhs = tuple_key(&[
                &source.arecp,
                &source.erecp,
                &source.erecl,
                &source.excp,
                &source.excl,
                &source.rar,
            ]);
            let rhs = tuple_key(&[
                &source.cyc,
                &source.erecp,
                &source.erecl,
                &source.excp,
                &source.excl,
                &source.rar,
            ]);
            *out.tallies.entry(lhs).or_insert(0) += 1;
            *out.tallies.entry(rhs).or_insert(0) -= 1;
        });
        cases += outcome.cases;
        failures.extend(outcome.failures);
        failures.extend(tally_failures(n, "sextuple", outcome.tallies));
    }
    (cases, failures)
}

fn check_theorem2(n_max: usize, workers: usize) -> (u64, Vec<Failure>) {
    let mut cases = 0u64;
    let mut failures = Vec::new();
    for n in 0..=n_max {
        let outcome = scan_permutations(n, workers, &|p, out| {
            let source = p.profile();
            let image = phi_cap(p);
            let target = image.profile();
            let expected = fmt_named_sets(&[
                ("cyc", &source.arecp),
                ("arecp", &source.cyc),
                ("excp", &source.excp),
                ("excl", &source.excl),
                ("rar", &source.rar),
            ]);
            let actual = fmt_named_sets(&[
                ("cyc", &target.cyc),
                ("arecp", &target.arecp),
                ("excp", &target.excp),
                ("excl", &target.excl),
                ("rar", &target.rar),
            ]);
            if expected != actual {
                out.failures.push(Failure { input: p.to_string(), expected, actual });
            }
            let back = phi_cap(&image);
            if back != *p {
                out.failures.push(Failure {
                    input: p.to_string(),
                    expected: format!("involution returns {p}"),
                    actual: back.to_string(),
                });
            }
            let lhs = tuple_key(&[
                &source.arecp,
                &source.cyc,
                &source.excp,
                &source.excl,
                &source.rar,
            ]);
            let rhs = tuple_key(&[
                &source.cyc,
                &source.arecp,
                &source.excp,
                &source.excl,
                &source.rar,
            ]);
            *out.tallies.entry(lhs).or_insert(0) += 1;
            *out.tallies.entry(rhs).or_insert(0) -= 1;
        });
        cases += outcome.cases;
        failures.extend(outcome.failures);
        failures.extend(tally_failures(n, "quintuple", outcome.tallies));
    }
    (cases, failures)
}

/// Converts any nonzero multiset tallies into failures, smallest key first.
fn tally_failures(n: usize, shape: &str, tallies: HashMap<String, i64>) -> Vec<Failure> {
    let mut unbalanced: Vec<(String, i64)> =
        tallies.into_iter().filter(|(_, count)| *count != 0).collect();
    unbalanced.sort();
    unbalanced
        .into_iter()
        .map(|(key, count)| Failure {
            input: format!("n={n} {shape} multiset"),
            expected: format!("{key} balanced"),
            actual: format!("surplus {count}"),
        })
        .collect()
}

fn check_rho1_bijection(n_max: usize, workers: usize) -> (u64, Vec<Failure>) {
    let mut cases = 0u64;
    let mut failures = Vec::new();
    for n in 0..=n_max {
        let outcome = scan_histories(n, workers, &|h, out| {
            let there_and_back = rho1_inv(&rho1(h));
            if there_and_back != *h {
                out.failures.push(Failure {
                    input: h.to_string(),
                    expected: h.to_string(),
                    actual: there_and_back.to_string(),
                });
            }
            let back_and_there = rho1(&rho1_inv(h));
            if back_and_there != *h {
                out.failures.push(Failure {
                    input: h.to_string(),
                    expected: "inverse-first composite returns the input".to_string(),
                    actual: back_and_there.to_string(),
                });
            }
        });
        cases += outcome.cases;
        failures.extend(outcome.failures);
    }
    (cases, failures)
}

fn check_rho2_involution(n_max: usize, workers: usize) -> (u64, Vec<Failure>) {
    let mut cases = 0u64;
    let mut failures = Vec::new();
    for n in 0..=n_max {
        let outcome = scan_histories(n, workers, &|h, out| {
            let twice = rho2(&rho2(h));
            if twice != *h {
                out.failures.push(Failure {
                    input: h.to_string(),
                    expected: h.to_string(),
                    actual: twice.to_string(),
                });
            }
        });
        cases += outcome.cases;
        failures.extend(outcome.failures);
    }
    (cases, failures)
}

fn check_cf_stieltjes(n_max: usize) -> (u64, Vec<Failure>) {
    let mut failures = Vec::new();
    let moments = stieltjes_moments(&SSchedule::xyuv(), n_max);
    for (n, moment) in moments.iter().enumerate() {
        let by_arec = brute_force_mu(n, CountingStatistic::Arec);
        let by_cyc = brute_force_mu(n, CountingStatistic::Cyc);
        if *moment != by_arec {
            failures.push(Failure {
                input: format!("n={n} antirecord sum"),
                expected: by_arec.to_string(),
                actual: moment.to_string(),
            });
        }
        if *moment != by_cyc {
            failures.push(Failure {
                input: format!("n={n} cycle sum"),
                expected: by_cyc.to_string(),
                actual: moment.to_string(),
            });
        }
    }
    ((n_max + 1) as u64, failures)
}

fn check_cf_jacobi(n_max: usize) -> (u64, Vec<Failure>) {
    let mut failures = Vec::new();
    let moments = jacobi_moments(&JSchedule::xyzw0(), n_max);
    for (n, moment) in moments.iter().enumerate() {
        let brute = brute_force_jacobi(n);
        if *moment != brute {
            failures.push(Failure {
                input: format!("n={n} brute-force sum"),
                expected: brute.to_string(),
                actual: moment.to_string(),
            });
        }
        let swapped = brute.swap_xy();
        if swapped != brute {
            failures.push(Failure {
                input: format!("n={n} x/y symmetry"),
                expected: brute.to_string(),
                actual: swapped.to_string(),
            });
        }
    }
    ((n_max + 1) as u64, failures)
}
