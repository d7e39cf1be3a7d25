//! One line per acceptance criterion, each backed by named reproduction targets.
//!
//! Failing criteria are printed as FAIL with the failing checks below them. The process exits
//! nonzero only when `ACCEPTANCE_STRICT` is set, so the regular test run stays green while the
//! report stays honest.

use realgrass::verifier::{reproduce, Bundle, Outcome};
use std::time::{Duration, Instant};

struct Criterion {
    id: u32,
    title: &'static str,
    targets: &'static [&'static str],
    limit: Duration,
}

const fn mins(m: u64) -> Duration {
    Duration::from_secs(60 * m)
}

const CRITERIA: [Criterion; 9] = [
    Criterion { id: 1, title: "intersection numbers", targets: &["d-numbers"], limit: mins(2) },
    Criterion { id: 2, title: "Gr(2,4) symbolic lex basis", targets: &["m2p2-symbolic"], limit: Duration::from_secs(10) },
    Criterion { id: 3, title: "universal quintic for Gr(2,5)", targets: &["m2p3-universal"], limit: mins(10) },
    Criterion {
        id: 4,
        title: "Schubert problems beyond hypersurfaces",
        targets: &["m4p2-j2", "m3p3-j2j1", "m3p3-135-j1", "m4p3-135", "factor-check"],
        limit: mins(10),
    },
    Criterion { id: 5, title: "desk-scale sweep at s_i = i", targets: &["desk-sweep"], limit: mins(30) },
    Criterion { id: 6, title: "flag manifold counterexample", targets: &["flag-counterexample"], limit: mins(1) },
    Criterion { id: 7, title: "total positivity", targets: &["tp-m2p2"], limit: mins(5) },
    Criterion { id: 8, title: "P_m recursion and interlacing", targets: &["pm-interlace"], limit: mins(2) },
    Criterion { id: 9, title: "always-on property suites", targets: &["self-checks"], limit: mins(5) },
];

/// Longest single desk-sweep case allowed; the (2,5) instance is the slow one.
const DESK_CASE_LIMIT: Duration = mins(20);

fn slowest_case_ms(b: &Bundle) -> Option<u128> {
    b.checks
        .iter()
        .filter_map(|c| {
            let words: Vec<&str> = c.detail.split_whitespace().collect();
            words.windows(2).find(|w| w[1] == "ms").and_then(|w| w[0].parse::<u128>().ok())
        })
        .max()
}

fn main() {
    let mut failed = 0;
    for c in &CRITERIA {
        let start = Instant::now();
        let mut problems: Vec<String> = Vec::new();
        let mut bundles = Vec::new();
        for t in c.targets {
            match reproduce(t) {
                Ok(b) => bundles.push(b),
                Err(e) => problems.push(format!("{}: {}", t, e)),
            }
        }
        let elapsed = start.elapsed();
        for b in &bundles {
            for chk in b.checks.iter().filter(|k| k.outcome == Outcome::Fail) {
                problems.push(format!("{}: {} ({})", b.target, chk.name, chk.detail));
            }
        }
        if elapsed > c.limit {
            problems.push(format!("took {:.1} s, limit {} s", elapsed.as_secs_f64(), c.limit.as_secs()));
        }
        if c.id == 5 {
            if let Some(ms) = bundles.first().and_then(slowest_case_ms) {
                if ms > DESK_CASE_LIMIT.as_millis() {
                    problems.push(format!("slowest case took {} ms, limit {} s", ms, DESK_CASE_LIMIT.as_secs()));
                }
            }
        }
        let checks: usize = bundles.iter().map(|b| b.checks.len()).sum();
        let verdict = if problems.is_empty() { "PASS" } else { "FAIL" };
        println!(
            "criterion {}: {} | {} | {} checks in {:.1} s (limit {} s)",
            c.id,
            verdict,
            c.title,
            checks,
            elapsed.as_secs_f64(),
            c.limit.as_secs()
        );
        for p in &problems {
            println!("    {}", p);
        }
        if !problems.is_empty() {
            failed += 1;
        }
    }
    println!("{} of {} criteria pass", CRITERIA.len() - failed, CRITERIA.len());
    if failed > 0 && std::env::var_os("ACCEPTANCE_STRICT").is_some() {
        std::process::exit(1);
    }
}
