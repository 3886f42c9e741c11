//! Acceptance run: one PASS/FAIL line per criterion, with its runtime budget.
//!
//! The process exits nonzero when a criterion's outcome differs from the
//! expected one. Criterion 5 is expected to FAIL on two rows of the observed
//! table; the values actually generated there are pinned below.

use std::io::Write;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use addseq_core::analysis::{
    check_initial_segment_v2n, conjectured_v_evens, default_even_bound, density_profile, detect_regularity,
    max_ap_length, quasiperiod_scan, scan_fourth_even_term, scan_v_even_list, verify_even_theorem, EvenVerdict,
    DEFAULT_BINS,
};
use addseq_core::gf2::{
    check_pq_duality, check_sierpinski, is_power_of_two, p2kn_closed_form, pascal_mod2_dump, r_rows,
    second_rep_witness, table_dump,
};
use addseq_core::lattice::{check_v_even_count, check_w_modified, check_w_ulam, freiman_box_check, Family};
use addseq_core::seq::oracle_replay;
use addseq_core::{generate, Rule};
use num_integer::gcd;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

type Check = Result<(bool, String), String>;
/// Law, initials, limit, scan range, expected lambda, tolerance.
type ScanCase = (&'static [u64], &'static [u64], u64, (f64, f64), f64, f64);

const DENSITY_TOL: f64 = 0.005;
const DUALITY_STEPS: u64 = 300;
const ORACLE_CASES: u32 = 200;

/// Observed `(w, N, D)` rows for `Z(1,1,1)(1,2,w)`.
const OBSERVED: [(u64, usize, u64); 11] = [
    (3, 3, 25),
    (9, 86, 572),
    (12, 112, 760),
    (15, 16, 106),
    (18, 206, 1394),
    (21, 52, 442),
    (24, 665, 3581),
    (27, 47, 378),
    (33, 80, 694),
    (39, 40, 274),
    (45, 46, 316),
];

/// Rows where generation disagrees with the table, with the generated `(N, D)`.
const KNOWN_TABLE_MISMATCHES: [(u64, (usize, u64)); 2] = [(24, (665, 4553)), (27, (66, 568))];

struct Criterion {
    id: u32,
    title: &'static str,
    budget: Duration,
    expect_pass: bool,
    body: fn() -> Check,
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

fn coprime(a: u64, b: u64) -> bool {
    gcd(a, b) == 1
}

fn odd_ns(hi: u64) -> impl Iterator<Item = u64> {
    (5..=hi).step_by(2)
}

fn e<T: std::fmt::Display>(err: T) -> String {
    err.to_string()
}

fn fixtures() -> Check {
    let cases: [(&str, Rule, [u64; 2], Vec<u64>); 4] = [
        ("V(1,2)", Rule::v(), [1, 2], vec![1, 2, 3, 5, 7, 9, 11, 13, 15, 17, 19, 21, 23, 25, 27]),
        ("V(2,3)", Rule::v(), [2, 3], vec![2, 3, 4, 5, 9, 10, 11, 16, 22, 24, 28, 29, 30, 37, 42]),
        ("U(1,2)", Rule::ulam(), [1, 2], vec![1, 2, 3, 4, 6, 8, 11, 13, 16, 18, 26]),
        (
            "Z(2,1)(1,3)",
            Rule::weighted(&[2, 1]).map_err(e)?,
            [1, 3],
            vec![1, 3, 5, 13, 15, 17, 21, 25, 29, 33, 37, 41, 45],
        ),
    ];
    let mut bad = Vec::new();
    for (name, rule, init, want) in &cases {
        let run = generate(rule, init, 200).map_err(e)?;
        let got = &run.terms()[..want.len().min(run.len())];
        if got != want.as_slice() {
            bad.push(format!("{name} gave {got:?}"));
        }
    }
    Ok((bad.is_empty(), if bad.is_empty() { "4 listings exact".into() } else { bad.join("; ") }))
}

fn even_theorem() -> Check {
    let mut bad = Vec::new();
    let mut count = 0;
    for n in odd_ns(99) {
        let third = 2 * n * n + 2;
        let ok = match verify_even_theorem(n, default_even_bound(n)).map_err(e)? {
            EvenVerdict::TwoEvens { .. } => !is_power_of_two((n - 1) as usize),
            EvenVerdict::ThreeEvensAtLeast { evens } => is_power_of_two((n - 1) as usize) && evens.contains(&third),
            EvenVerdict::Violation { .. } => false,
        };
        count += 1;
        if !ok {
            bad.push(n);
        }
    }
    Ok((bad.is_empty(), format!("{count} odd n in [5,99], failing n: {bad:?}")))
}

fn initial_segments() -> Check {
    let mut bad = Vec::new();
    for n in odd_ns(99) {
        if !check_initial_segment_v2n(n).map_err(e)? {
            bad.push(n);
        }
    }
    Ok((bad.is_empty(), format!("V(2,n) on [2,5n+2] for odd n in [5,99], failing n: {bad:?}")))
}

fn gf2_calculus() -> Check {
    let mut bad = Vec::new();
    let mut checks = 0;
    for n in (5..=257usize).step_by(2) {
        let mut note = |label: &str, r: Result<(), String>| {
            checks += 1;
            if let Err(w) = r {
                bad.push(format!("n={n} {label}: {w}"));
            }
        };
        note("sierpinski", check_sierpinski(n).map_err(e));
        note("duality", check_pq_duality(n, DUALITY_STEPS).map(|_| ()).map_err(e));
        if !is_power_of_two(n - 1) {
            note("closed form", p2kn_closed_form(n).map(|_| ()).map_err(e));
            note("witness", second_rep_witness(n).map(|_| ()).map_err(e));
        }
    }
    let table = table_dump(&r_rows(17, 16).map_err(e)?);
    if table != pascal_mod2_dump(16, 17) {
        bad.push(format!("n=17 R table:\n{table}"));
    }
    Ok((bad.is_empty(), format!("{checks} identity checks over odd n in [5,257] plus the n=17 table; {bad:?}")))
}

fn regularity_expectations() -> Vec<(u64, u64, usize, u64)> {
    let mut rows: Vec<_> = OBSERVED.iter().map(|&(w, n, d)| (2, w, n, d)).collect();
    for w in 46..=99 {
        if w % 6 == 3 {
            rows.push((2, w, ((7 * w + 9) / 3) as usize, 21 * w + 1));
        }
    }
    for w in 25..=99 {
        if w % 6 == 0 {
            rows.push((2, w, (w + 1) as usize, 7 * w + 1));
        }
    }
    for w in 23..=99 {
        if w % 2 == 0 {
            rows.push((3, w, (w + 1) as usize, 7 * (w + 1)));
        }
    }
    for w in 18..=99 {
        if w % 4 == 1 {
            rows.push((3, w, w.div_ceil(4) as usize, 5 * w + 9));
        }
    }
    rows
}

fn regularity() -> Check {
    let rule = Rule::weighted(&[1, 1, 1]).map_err(e)?;
    let rows = regularity_expectations();
    let mut mismatches = Vec::new();
    let mut unexpected = Vec::new();
    for &(second, w, n, d) in &rows {
        let run = generate(&rule, &[1, second, w], 2000 * w.max(10)).map_err(e)?;
        let rep = detect_regularity(&run, 3).map_err(e)?;
        let got = rep.as_ref().map(|r| (r.period, r.fundamental_difference));
        if (second, w) == (2, 3) && !rep.as_ref().is_some_and(|r| r.pattern_matches(&[1, 2, 22])) {
            unexpected.push("w=3 pattern is not (1,2,22)".to_string());
        }
        if got == Some((n, d)) {
            continue;
        }
        let line = format!("(1,{second},{w}) expected N={n} D={d}, generated {got:?}");
        let known = second == 2 && KNOWN_TABLE_MISMATCHES.iter().any(|&(kw, kv)| kw == w && got == Some(kv));
        if known {
            mismatches.push(line);
        } else {
            unexpected.push(line);
        }
    }
    if !unexpected.is_empty() {
        return Err(format!("unexpected regularity results: {}", unexpected.join("; ")));
    }
    let detail = format!("{} rows, {} match; mismatches: {}", rows.len(), rows.len() - mismatches.len(), mismatches.join("; "));
    Ok((mismatches.is_empty(), detail))
}

fn density() -> Check {
    let rule = Rule::weighted(&[2, 1]).map_err(e)?;
    let mut ok = true;
    let mut parts = Vec::new();
    for (init, lower, upper) in [([1, 9], 0.107, 0.123), ([3, 7], 0.106, 0.122)] {
        let run = generate(&rule, &init, 45_000).map_err(e)?;
        let p = density_profile(&run, 0.5).map_err(e)?;
        ok &= (p.lower - lower).abs() <= DENSITY_TOL && (p.upper - upper).abs() <= DENSITY_TOL;
        parts.push(format!("{init:?}: lower {:.4}, upper {:.4}", p.lower, p.upper));
    }
    Ok((ok, parts.join("; ")))
}

fn quasiperiods() -> Check {
    let mut ok = true;
    let mut parts = Vec::new();

    let run = generate(&Rule::ulam(), &[1, 2], 1_400_000).map_err(e)?;
    let q = quasiperiod_scan(&run, 2.0, 3.0, 0.01, DEFAULT_BINS).map_err(e)?;
    let sharp = q.score > 3.0 * q.scan_median;
    ok &= run.len() >= 100_000 && (2.35..=2.50).contains(&q.lambda) && sharp;
    parts.push(format!("U(1,2) {} terms: lambda {:.5}, score {:.3}, median {:.4}", run.len(), q.lambda, q.score, q.scan_median));

    let cases: [ScanCase; 2] = [
        (&[1, 1, 1], &[1, 2, 6], 300_000, (20.0, 25.0), 22.9, 0.2),
        (&[2, 1], &[1, 10], 1_000_000, (90.0, 100.0), 96.6, 0.5),
    ];
    for (law, init, limit, (lo, hi), target, tol) in cases {
        let run = generate(&Rule::weighted(law).map_err(e)?, init, limit).map_err(e)?;
        let q = quasiperiod_scan(&run, lo, hi, 0.05, DEFAULT_BINS).map_err(e)?;
        ok &= (q.lambda - target).abs() <= tol;
        parts.push(format!("Z{law:?}{init:?}: lambda {:.4}", q.lambda));
    }
    Ok((ok, parts.join("; ")))
}

fn ap_theorems() -> Check {
    let mut bad = Vec::new();
    let mut pairs = 0;
    for b in 2..=12 {
        for a in (1..b).filter(|&a| coprime(a, b)) {
            pairs += 1;
            let run = generate(&Rule::ulam(), &[a, b], 4000.max(40 * a * b)).map_err(e)?;
            let r = max_ap_length(&run, a, (b + 1) * a);
            if r.length > b as usize + 1 {
                bad.push(format!("U({a},{b}) difference {a}: {r:?}"));
            }
            let r = max_ap_length(&run, b, (a + 1) * b);
            if r.length > a as usize + 1 {
                bad.push(format!("U({a},{b}) difference {b}: {r:?}"));
            }
            if a >= 3 {
                let r = max_ap_length(&run, a + b, 0);
                if r.length > 3 {
                    bad.push(format!("U({a},{b}) difference {}: {r:?}", a + b));
                }
            }
        }
    }
    Ok((bad.is_empty(), format!("{pairs} coprime pairs with b <= 12; {bad:?}")))
}

fn lattice() -> Check {
    let mut bad = Vec::new();
    if !check_w_modified(40).map_err(e)? {
        bad.push("modified set".to_string());
    }
    if !check_w_ulam(40).map_err(e)? {
        bad.push("Ulam set".to_string());
    }
    let mut boxes = 0;
    for a in [4u64, 6, 8, 10] {
        for b in (2 * a + 1..=2 * a + 40).filter(|&b| b % 2 == 1 && coprime(a, b)) {
            boxes += 1;
            if !freiman_box_check(a, b, Family::V).map_err(e)?.holds() {
                bad.push(format!("V({a},{b}) box"));
            }
            if !check_v_even_count(a, b).map_err(e)? {
                bad.push(format!("V({a},{b}) even count"));
            }
        }
    }
    for b in 2..=20 {
        for a in (1..b).filter(|&a| coprime(a, b)) {
            boxes += 1;
            if !freiman_box_check(a, b, Family::Ulam).map_err(e)?.holds() {
                bad.push(format!("U({a},{b}) box"));
            }
        }
    }
    Ok((bad.is_empty(), format!("both planar sets to L1 norm 40, {boxes} boxes; failing: {bad:?}")))
}

fn rule_for(family: u8, law: usize) -> Rule {
    const ASYMMETRIC: [[u64; 2]; 4] = [[2, 1], [1, 2], [3, 1], [3, 2]];
    match family {
        0 => Rule::ulam(),
        1 => Rule::v(),
        2 => Rule::weighted(&ASYMMETRIC[law]).expect("positive coefficients"),
        _ => Rule::weighted(&[1, 1, 1]).expect("positive coefficients"),
    }
}

fn oracle_equivalence() -> Check {
    let config = Config { cases: ORACLE_CASES, failure_persistence: None, ..Config::default() };
    let mut runner = TestRunner::new(config);
    let strategy = (0u8..4, 0usize..4, proptest::sample::subsequence((1u64..=24).collect::<Vec<_>>(), 3), 30u64..=3000);
    let outcome = runner.run(&strategy, |(family, law, pool, limit)| {
        let rule = rule_for(family, law);
        let initials = if family == 3 { &pool[..] } else { &pool[..2] };
        let fast = generate(&rule, initials, limit).map_err(|err| TestCaseError::fail(err.to_string()))?;
        let slow = oracle_replay(&rule, initials, limit).map_err(|err| TestCaseError::fail(err.to_string()))?;
        prop_assert_eq!(fast.terms(), slow.as_slice(), "{:?} from {:?} to {}", rule, initials, limit);
        Ok(())
    });
    match outcome {
        Ok(()) => Ok((true, format!("{ORACLE_CASES} random configurations agree"))),
        Err(err) => Ok((false, err.to_string())),
    }
}

fn conjecture_scans() -> Check {
    let mut lines = Vec::new();
    let mut ok = true;
    for n in odd_ns(65).filter(|&n| is_power_of_two((n - 1) as usize)) {
        let r = scan_fourth_even_term(n, 8 * n * n).map_err(e)?;
        ok &= !r.counterexample_found();
        lines.push(r.summary());
    }
    let mut scanned = 0;
    for a in (4..=16).step_by(2).filter(|&a| conjectured_v_evens(a).is_some()) {
        for b in (2 * a + 1..=3 * a + 40).filter(|&b| b % 2 == 1 && coprime(a, b)) {
            let r = scan_v_even_list(a, b, 30 * b).map_err(e)?;
            scanned += 1;
            if r.counterexample_found() {
                ok = false;
                lines.push(r.summary());
            }
        }
    }
    if ok {
        lines.push(format!("V(a,b) even lists: no counterexample in {scanned} pairs up to 30b"));
    }
    Ok((ok && lines.iter().all(|l| l.contains("no counterexample")), lines.join("; ")))
}

fn main() -> ExitCode {
    let criteria = [
        Criterion { id: 1, title: "fixture sequences", budget: secs(1), expect_pass: true, body: fixtures },
        Criterion { id: 2, title: "even terms of V(2,n)", budget: secs(120), expect_pass: true, body: even_theorem },
        Criterion { id: 3, title: "V(2,n) initial segments", budget: secs(5), expect_pass: true, body: initial_segments },
        Criterion { id: 4, title: "GF(2) calculus", budget: secs(10), expect_pass: true, body: gf2_calculus },
        Criterion { id: 5, title: "regularity tables", budget: secs(300), expect_pass: false, body: regularity },
        Criterion { id: 6, title: "densities of (2,1)-sequences", budget: secs(60), expect_pass: true, body: density },
        Criterion { id: 7, title: "quasiperiods", budget: secs(300), expect_pass: true, body: quasiperiods },
        Criterion { id: 8, title: "progressions in U(a,b)", budget: secs(120), expect_pass: true, body: ap_theorems },
        Criterion { id: 9, title: "lattice sets and boxes", budget: secs(180), expect_pass: true, body: lattice },
        Criterion { id: 10, title: "engine against oracle", budget: secs(60), expect_pass: true, body: oracle_equivalence },
        Criterion { id: 11, title: "conjecture scans", budget: secs(600), expect_pass: true, body: conjecture_scans },
    ];
    let mut out = std::io::stdout().lock();
    let mut surprises = Vec::new();
    let mut passed = 0;
    for c in &criteria {
        let start = Instant::now();
        let result = (c.body)();
        let elapsed = start.elapsed();
        let errored = result.is_err();
        let (ok, detail) = match result {
            Ok((ok, detail)) => (ok && elapsed <= c.budget, detail),
            Err(err) => (false, format!("error: {err}")),
        };
        let verdict = if ok { "PASS" } else { "FAIL" };
        let _ = writeln!(
            out,
            "{verdict} criterion {}: {} [{:.2}s of {}s] {detail}",
            c.id,
            c.title,
            elapsed.as_secs_f64(),
            c.budget.as_secs()
        );
        passed += usize::from(ok);
        if errored || ok != c.expect_pass {
            surprises.push(c.id);
        }
    }
    let _ = writeln!(out, "acceptance: {passed} of {} criteria pass", criteria.len());
    if surprises.is_empty() {
        ExitCode::SUCCESS
    } else {
        let _ = writeln!(out, "acceptance: unexpected outcome for criteria {surprises:?}");
        ExitCode::FAILURE
    }
}
