use addseq_core::analysis::{
    check_initial_segment_v2n, check_pattern_2_1_mod16, conjectured_v_evens, default_even_bound, detect_regularity,
    max_ap_length, scan_fourth_even_term, scan_v_even_list, verify_even_theorem, EvenVerdict,
};
use addseq_core::gf2::{
    check_pq_duality, check_q_r_link, check_r_basic, check_s_family, check_sierpinski, check_third_even_term,
    is_power_of_two, p2kn_closed_form, pascal_mod2_dump, r_rows, second_rep_witness, table_dump,
};
use addseq_core::lattice::{
    check_no_multiples, check_u_box_interior, check_u_even_prediction, check_v_even_count, check_v_initial,
    check_w_modified, check_w_ulam, freiman_box_check, Family,
};
use addseq_core::{generate, Rule};
use clap::{Args, Subcommand};
use num_integer::gcd;

use crate::failure::{CliResult, Failure};

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[command(subcommand)]
    pub suite: Suite,
    /// Print every passing check, not only failures.
    #[arg(long, global = true)]
    pub verbose: bool,
}

#[derive(Subcommand, Debug)]
pub enum Suite {
    /// Even terms of V(2,n) for odd n in a range.
    EvenTheorem {
        #[arg(long, default_value_t = 5)]
        n_min: u64,
        #[arg(long, default_value_t = 99)]
        n_max: u64,
    },
    /// Polynomial identities over GF(2)[t]/(t^n+t+1).
    Gf2 {
        /// A single odd n; overrides the range.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 257)]
        n_max: usize,
        #[arg(long, default_value_t = 300)]
        steps: u64,
    },
    /// Lattice against sequence on the Freiman box.
    Box {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        /// A single first generator; by default a sweep.
        #[arg(long)]
        a: Option<u64>,
        #[arg(long)]
        b_max: Option<u64>,
    },
    /// Arithmetic progression bounds in U(a,b).
    Ap {
        #[arg(long, default_value_t = 12)]
        b_max: u64,
    },
    /// Explicit initial segments of V(2,n), V(a,b) and the mod-16 pattern.
    InitialSegment {
        #[arg(long, default_value_t = 99)]
        n_max: u64,
    },
    /// Two-dimensional sets and their consequences for U(a,b).
    Lattice {
        #[arg(long, default_value_t = 40)]
        bound: u64,
        #[arg(long, default_value_t = 15)]
        b_max: u64,
    },
    /// Period and fundamental difference tables of (1,1,1)-sequences.
    Regularity {
        #[arg(long, default_value_t = 99)]
        w_max: u64,
    },
    /// Bounded searches for counterexamples to open conjectures.
    Conjectures {
        #[arg(long, default_value_t = 65)]
        n_max: u64,
        /// V(2,n) is scanned to this multiple of n^2.
        #[arg(long, default_value_t = 8)]
        n_factor: u64,
        /// V(a,b) is scanned for b up to 3a plus this.
        #[arg(long, default_value_t = 40)]
        b_span: u64,
        /// V(a,b) is scanned to this multiple of b.
        #[arg(long, default_value_t = 30)]
        b_factor: u64,
    },
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: addseq_core::Error| e.to_string())
}

fn coprime(a: u64, b: u64) -> bool {
    gcd(a, b) == 1
}

/// Collects check outcomes and prints them.
struct Tally {
    suite: &'static str,
    verbose: bool,
    passed: usize,
    failures: Vec<String>,
}

impl Tally {
    fn new(suite: &'static str, verbose: bool) -> Self {
        Self { suite, verbose, passed: 0, failures: Vec::new() }
    }

    fn record(&mut self, label: impl Into<String>, outcome: Result<(), String>) {
        let label = label.into();
        match outcome {
            Ok(()) => {
                self.passed += 1;
                if self.verbose {
                    println!("ok   {label}");
                }
            }
            Err(witness) => {
                println!("FAIL {label}: {witness}");
                self.failures.push(label);
            }
        }
    }

    fn check(&mut self, label: impl Into<String>, ok: bool, witness: impl FnOnce() -> String) {
        self.record(label, if ok { Ok(()) } else { Err(witness()) });
    }

    fn finish(self) -> CliResult {
        println!("{}: {} passed, {} failed", self.suite, self.passed, self.failures.len());
        if self.failures.is_empty() {
            Ok(())
        } else {
            Err(Failure::Verification(format!("{} failing checks in {}", self.failures.len(), self.suite)))
        }
    }
}

fn odd_range(lo: u64, hi: u64) -> impl Iterator<Item = u64> {
    (lo.max(5) | 1..=hi).step_by(2)
}

pub fn run(args: VerifyArgs) -> CliResult {
    let v = args.verbose;
    match args.suite {
        Suite::EvenTheorem { n_min, n_max } => even_theorem(v, n_min, n_max),
        Suite::Gf2 { n, n_max, steps } => gf2(v, n, n_max, steps),
        Suite::Box { family, a, b_max } => box_suite(v, family, a, b_max),
        Suite::Ap { b_max } => ap(v, b_max),
        Suite::InitialSegment { n_max } => initial_segment(v, n_max),
        Suite::Lattice { bound, b_max } => lattice(v, bound, b_max),
        Suite::Regularity { w_max } => regularity(v, w_max),
        Suite::Conjectures { n_max, n_factor, b_span, b_factor } => conjectures(v, n_max, n_factor, b_span, b_factor),
    }
}

fn even_theorem(verbose: bool, n_min: u64, n_max: u64) -> CliResult {
    let mut t = Tally::new("even-theorem", verbose);
    for n in odd_range(n_min, n_max) {
        let verdict = verify_even_theorem(n, default_even_bound(n))?;
        let expected_three = is_power_of_two((n - 1) as usize);
        let ok = match &verdict {
            EvenVerdict::TwoEvens { .. } => !expected_three,
            EvenVerdict::ThreeEvensAtLeast { .. } => expected_three,
            EvenVerdict::Violation { .. } => false,
        };
        t.check(format!("V(2,{n}) evens {:?}", verdict.evens()), ok, || format!("{verdict:?}"));
    }
    t.finish()
}

fn gf2(verbose: bool, single: Option<usize>, n_max: usize, steps: u64) -> CliResult {
    let mut t = Tally::new("gf2", verbose);
    let ns: Vec<usize> = match single {
        Some(n) => vec![n],
        None => (5..=n_max).step_by(2).collect(),
    };
    for n in ns {
        let identity = |r: Result<(), addseq_core::gf2::IdentityFailure>| r.map_err(|f| f.to_string());
        t.record(format!("n={n} sierpinski"), identity(check_sierpinski(n)));
        t.record(format!("n={n} r-basic"), identity(check_r_basic(n)));
        t.record(format!("n={n} q-r link"), identity(check_q_r_link(n)));
        t.record(format!("n={n} pq duality ({steps} steps)"), check_pq_duality(n, steps).map(|_| ()).map_err(|f| f.to_string()));
        if is_power_of_two(n - 1) {
            t.record(format!("n={n} third even term"), identity(check_third_even_term(n)));
        } else {
            t.record(format!("n={n} s family"), identity(check_s_family(n)));
            t.record(format!("n={n} closed form of P_(2^k n)"), p2kn_closed_form(n).map(|_| ()).map_err(|e| e.to_string()));
            t.record(format!("n={n} second representation witness"), second_rep_witness(n).map(|_| ()).map_err(|e| e.to_string()));
        }
        let rows = n - 1;
        let dump = table_dump(&r_rows(n, rows)?);
        t.check(format!("n={n} R table is Pascal mod 2"), dump == pascal_mod2_dump(rows, n), || dump.clone());
        if single.is_some() {
            print!("{dump}");
        }
    }
    t.finish()
}

fn v_sweep(a: Option<u64>, b_max: Option<u64>) -> Vec<(u64, u64)> {
    let aa: Vec<u64> = a.map_or_else(|| vec![4, 6, 8, 10], |a| vec![a]);
    let mut out = Vec::new();
    for a in aa {
        let hi = b_max.unwrap_or(2 * a + 40);
        out.extend((2 * a + 1..=hi).filter(|&b| b % 2 == 1 && coprime(a, b)).map(|b| (a, b)));
    }
    out
}

fn box_suite(verbose: bool, family: Family, a: Option<u64>, b_max: Option<u64>) -> CliResult {
    let mut t = Tally::new("box", verbose);
    let pairs: Vec<(u64, u64)> = match family {
        Family::V => v_sweep(a, b_max),
        Family::Ulam => {
            let hi = b_max.unwrap_or(20);
            (2..=hi)
                .flat_map(|b| (1..b).map(move |a| (a, b)))
                .filter(|&(x, b)| coprime(x, b) && a.is_none_or(|a| a == x))
                .collect()
        }
    };
    if pairs.is_empty() {
        return Err(Failure::Usage("no coprime pairs in the requested range".into()));
    }
    for (a, b) in pairs {
        let report = freiman_box_check(a, b, family)?;
        t.check(format!("{family}({a},{b}) box, {} points", report.compared), report.holds(), || {
            format!("{:?}", report.mismatches)
        });
        if family == Family::V {
            t.check(format!("V({a},{b}) initial segment"), check_v_initial(a, b)?, String::new);
            t.check(format!("V({a},{b}) at least {} even terms", 2 + a / 4), check_v_even_count(a, b)?, String::new);
        }
    }
    t.finish()
}

fn ap(verbose: bool, b_max: u64) -> CliResult {
    let mut t = Tally::new("ap", verbose);
    for b in 2..=b_max {
        for a in (1..b).filter(|&a| coprime(a, b)) {
            let run = generate(&Rule::ulam(), &[a, b], 4000.max(40 * a * b))?;
            let r = max_ap_length(&run, a, (b + 1) * a);
            t.check(format!("U({a},{b}) difference {a}: {} <= {}", r.length, b + 1), r.length <= b as usize + 1, || {
                format!("{r:?}")
            });
            let r = max_ap_length(&run, b, (a + 1) * b);
            t.check(format!("U({a},{b}) difference {b}: {} <= {}", r.length, a + 1), r.length <= a as usize + 1, || {
                format!("{r:?}")
            });
            if a >= 3 {
                let r = max_ap_length(&run, a + b, 0);
                t.check(format!("U({a},{b}) difference {}: {} <= 3", a + b, r.length), r.length <= 3, || format!("{r:?}"));
            }
        }
    }
    t.finish()
}

fn initial_segment(verbose: bool, n_max: u64) -> CliResult {
    let mut t = Tally::new("initial-segment", verbose);
    for n in odd_range(5, n_max) {
        t.check(format!("V(2,{n}) on [2,{}]", 5 * n + 2), check_initial_segment_v2n(n)?, String::new);
    }
    for (a, b) in v_sweep(None, None) {
        t.check(format!("V({a},{b}) on [0,{}]", a * b), check_v_initial(a, b)?, String::new);
    }
    for b in (35..=n_max.max(35)).step_by(16) {
        t.check(format!("Z(2,1)(1,{b}) mod-16 pattern"), check_pattern_2_1_mod16(b)?, String::new);
    }
    t.finish()
}

fn lattice(verbose: bool, bound: u64, b_max: u64) -> CliResult {
    let mut t = Tally::new("lattice", verbose);
    t.check(format!("modified set to L1 norm {bound}"), check_w_modified(bound)?, String::new);
    t.check(format!("Ulam set to L1 norm {bound}"), check_w_ulam(bound)?, String::new);
    for b in 2..=b_max {
        for a in (1..b).filter(|&a| coprime(a, b)) {
            t.check(format!("U({a},{b}) box interior"), check_u_box_interior(a, b)?, String::new);
            if a > 1 {
                t.check(format!("U({a},{b}) has no multiples of a, b"), check_no_multiples(a, b)?, String::new);
            }
            if (a + b) % 2 == 1 {
                t.check(format!("U({a},{b}) even terms"), check_u_even_prediction(a, b)?, String::new);
            }
        }
    }
    t.finish()
}

/// `(w, N, D)` rows for `Z(1,1,1)(1,2,w)` with `w` in the observed range.
pub const OBSERVED_TABLE: [(u64, usize, u64); 11] = [
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

/// Expected `(second initial, w, N, D)` for the proved families up to `w_max`.
pub fn regular_families(w_max: u64) -> Vec<(u64, u64, usize, u64)> {
    let mut out = Vec::new();
    for w in 46..=w_max {
        if w % 6 == 3 {
            out.push((2, w, ((7 * w + 9) / 3) as usize, 21 * w + 1));
        }
    }
    for w in 25..=w_max {
        if w % 6 == 0 {
            out.push((2, w, (w + 1) as usize, 7 * w + 1));
        }
    }
    for w in 23..=w_max {
        if w % 2 == 0 {
            out.push((3, w, (w + 1) as usize, 7 * (w + 1)));
        }
    }
    for w in 18..=w_max {
        if w % 4 == 1 {
            out.push((3, w, w.div_ceil(4) as usize, 5 * w + 9));
        }
    }
    out
}

fn regularity(verbose: bool, w_max: u64) -> CliResult {
    let mut t = Tally::new("regularity", verbose);
    let rule = Rule::weighted(&[1, 1, 1])?;
    let observed = OBSERVED_TABLE.iter().map(|&(w, n, d)| (2, w, n, d));
    for (second, w, n, d) in observed.chain(regular_families(w_max)) {
        let run = generate(&rule, &[1, second, w], 2000 * w.max(10))?;
        let rep = detect_regularity(&run, 3)?;
        let got = rep.as_ref().map(|r| (r.period, r.fundamental_difference));
        t.check(format!("Z(1,1,1)(1,{second},{w}): N={n}, D={d}"), got == Some((n, d)), || format!("detected {got:?}"));
        if w == 3 && second == 2 {
            let ok = rep.as_ref().is_some_and(|r| r.pattern_matches(&[1, 2, 22]));
            t.check("Z(1,1,1)(1,2,3) pattern (1,2,22)", ok, || format!("{rep:?}"));
        }
    }
    t.finish()
}

fn conjectures(verbose: bool, n_max: u64, n_factor: u64, b_span: u64, b_factor: u64) -> CliResult {
    let mut t = Tally::new("conjectures", verbose);
    for n in odd_range(5, n_max).filter(|&n| is_power_of_two((n - 1) as usize)) {
        let r = scan_fourth_even_term(n, n_factor * n * n)?;
        println!("{}", r.summary());
        t.check(format!("V(2,{n}) fourth even term"), !r.counterexample_found(), || r.summary());
    }
    for a in (4..=16).step_by(2).filter(|&a| conjectured_v_evens(a).is_some()) {
        for b in (2 * a + 1..=3 * a + b_span).filter(|&b| b % 2 == 1 && coprime(a, b)) {
            let r = scan_v_even_list(a, b, b_factor * b)?;
            if verbose || r.counterexample_found() {
                println!("{}", r.summary());
            }
            t.check(format!("V({a},{b}) even list"), !r.counterexample_found(), || r.summary());
        }
    }
    t.finish()
}
