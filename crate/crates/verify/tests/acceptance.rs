//! One line per acceptance criterion; exits non-zero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use vpro_verify::oracles::kreweras_count;
use vpro_verify::{orbit_report, run_suite, SuiteConfig, VerificationReport};

fn grid(ell: usize, q: usize, sum: Option<usize>) -> SuiteConfig {
    SuiteConfig {
        ell_max: Some(ell),
        q_max: Some(q),
        sum_max: sum,
        ..SuiteConfig::default()
    }
}

fn suite(name: &str, config: &SuiteConfig) -> VerificationReport {
    run_suite(name, config).unwrap_or_else(|e| panic!("suite {name}: {e}"))
}

/// Passes iff every claim whose id starts with one of `prefixes` passes,
/// and at least one such claim exists.
fn claims_pass(r: &VerificationReport, prefixes: &[&str]) -> (bool, String) {
    let selected: Vec<_> = r
        .claims
        .iter()
        .filter(|c| prefixes.iter().any(|p| c.id.starts_with(p)))
        .collect();
    let failed: Vec<_> = selected.iter().filter(|c| !c.pass).collect();
    let detail = match failed.first() {
        Some(c) => format!("{} {} failed: {:?}", c.id, c.params, c.counterexample),
        None => format!("{} claims", selected.len()),
    };
    (!selected.is_empty() && failed.is_empty(), detail)
}

fn classical() -> (bool, String) {
    let start = Instant::now();
    let mut ok = true;
    let mut parts = Vec::new();
    for n in 1..=3 {
        let r = orbit_report("pro-linext", n, 0).expect("orbit report");
        let count_ok = r.count as u128 == kreweras_count(n as u32) && r.count == [2, 16, 192][n - 1];
        // V x [1] has two extensions, so its order is 2 (a divisor of 6).
        let order_ok = if n == 1 { r.order == 2 } else { r.order == 6 * n as u64 };
        ok &= count_ok && order_ok && (6 * n as u64).is_multiple_of(r.order);
        parts.push(format!("n={n}: |e|={} order={}", r.count, r.order));
    }
    let (suite_ok, _) = claims_pass(&suite("classical", &grid(3, 0, None)), &["classical."]);
    let elapsed = start.elapsed();
    ok &= suite_ok && elapsed < Duration::from_secs(5);
    (ok, format!("{} ({elapsed:.2?})", parts.join(", ")))
}

fn timed(limit: Duration, f: impl FnOnce() -> (bool, String)) -> (bool, String) {
    let start = Instant::now();
    let (ok, detail) = f();
    let elapsed = start.elapsed();
    (ok && elapsed < limit, format!("{detail} ({elapsed:.2?})"))
}

fn determinism() -> (bool, String) {
    let (props, detail) = claims_pass(&suite("properties", &SuiteConfig::default()), &["properties."]);
    let config = SuiteConfig::default();
    let a = suite("all", &config);
    let b = suite("all", &config);
    let same = serde_json::to_string(&a.claims).unwrap() == serde_json::to_string(&b.claims).unwrap();
    (
        props && same,
        format!("{detail}; two runs of all suites identical: {same}"),
    )
}

type Criterion = (&'static str, Box<dyn FnOnce() -> (bool, String)>);

fn main() -> ExitCode {
    let two_min = Duration::from_secs(120);
    let small = grid(2, 6, None);
    let criteria: Vec<Criterion> = vec![
        ("classical promotion order on e(V x [n]), n <= 3", Box::new(classical)),
        (
            "P-strict promotion: order divides 2q and Pro^q swaps B/C, l <= 3, q <= 7, l + q <= 10",
            Box::new(move || timed(two_min, || claims_pass(&suite("main", &grid(3, 7, Some(10))), &["main."]))),
        ),
        (
            "figure reproduction",
            Box::new(|| claims_pass(&suite("figures", &SuiteConfig::default()), &["figures."])),
        ),
        (
            "content rotation, l <= 2, q <= 6",
            Box::new(move || claims_pass(&suite("layers", &small), &["layers."])),
        ),
        (
            "double-arc count, endpoint map and deletion, l <= 2, q <= 6",
            Box::new(move || claims_pass(&suite("doublearcs", &small), &["doublearcs."])),
        ),
        (
            "standardization law, l <= 2, q <= 6",
            Box::new(move || claims_pass(&suite("standardization", &small), &["standardization."])),
        ),
        (
            "rowmotion order divides 2(k+2) (exact at l = 1) and row^q = Flip",
            Box::new(move || {
                timed(two_min, || {
                    let (a, da) = claims_pass(&suite("rowmotion", &grid(3, 5, None)), &["rowmotion.order"]);
                    let (b, db) = claims_pass(&suite("rowmotion", &grid(2, 6, None)), &["rowmotion.row_q_is_flip"]);
                    (a && b, format!("order: {da}; flip: {db}"))
                })
            }),
        ),
        (
            "orbit multisets of Pro, TogPro and row coincide, l <= 2, q <= 6",
            Box::new(move || claims_pass(&suite("equivariance", &small), &["equivariance."])),
        ),
        ("property suites and determinism", Box::new(determinism)),
    ];
    let mut all = true;
    for (i, (name, check)) in criteria.into_iter().enumerate() {
        let (ok, detail) = check();
        all &= ok;
        println!("criterion {}: {} - {name}: {detail}", i + 1, if ok { "PASS" } else { "FAIL" });
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
