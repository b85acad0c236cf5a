//! Acceptance suite: one line per criterion, non-zero exit if any fails.
//!
//! Run with `cargo test -p pairdom-cli --test acceptance`.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use pairdom_core::canonical::{check_structural_properties, Property};
use pairdom_core::corpus::{cubic_corpus, CUBIC_ORDERS};
use pairdom_core::generate::{random_connected, random_cubic};
use pairdom_core::named::{cycle, path, subdivided_star};
use pairdom_core::solver::brute_force_oracle;
use pairdom_core::weight::{assign_weights, check_assignment};
use pairdom_core::{
    canonical_pds, certify_bound, gamma_pr, parse_graph6, petersen, write_graph6, Graph,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t < limit, || format!("took {t:?}, limit {limit:?}"))
}

fn g6(g: &Graph) -> String {
    write_graph6(g).expect("small graph")
}

fn gamma(g: &Graph) -> usize {
    gamma_pr(g).expect("no isolated vertex").value
}

fn corpora(max_n: usize) -> impl Iterator<Item = (usize, Graph)> {
    CUBIC_ORDERS
        .into_iter()
        .filter(move |&n| n <= max_n)
        .flat_map(|n| cubic_corpus(n).unwrap().into_iter().map(move |g| (n, g)))
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let value = gamma(&petersen());
    ensure(value == 6, || format!("gamma_pr(Petersen) = {value}"))?;
    ensure(7 * value > 4 * 10, || "7 * 6 <= 40".into())?;
    within(start, Duration::from_secs(1))?;
    let status = Command::new(env!("CARGO_BIN_EXE_pairdom"))
        .args(["certify", "--name", "petersen"])
        .output()
        .map_err(|e| e.to_string())?
        .status;
    ensure(status.code() == Some(4), || {
        format!("certify exited with {status}")
    })?;
    Ok("gamma_pr = 6, 42 > 40, certify exits 4".into())
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let expected = [(4, 1), (6, 2), (8, 5), (10, 19), (12, 85)];
    let mut violators = Vec::new();
    let mut total = 0;
    for (n, count) in expected {
        let graphs = cubic_corpus(n).unwrap();
        ensure(graphs.len() == count, || {
            format!("n = {n}: {} graphs, expected {count}", graphs.len())
        })?;
        for g in graphs {
            total += 1;
            if 7 * gamma(&g) > 4 * n {
                violators.push(g);
            }
        }
    }
    ensure(violators.len() == 1 && violators[0].is_petersen(), || {
        let codes: Vec<_> = violators.iter().map(g6).collect();
        format!("violators {codes:?}")
    })?;
    within(start, Duration::from_secs(60))?;
    Ok(format!(
        "{total} graphs, sole violation is Petersen, {:?}",
        start.elapsed()
    ))
}

fn criterion_3() -> Outcome {
    let mut at_bound = Vec::new();
    for (n, g) in corpora(12) {
        let value = gamma(&g);
        ensure(5 * value <= 3 * n, || {
            format!("{} has gamma_pr {value} > 3n/5", g6(&g))
        })?;
        if 5 * value == 3 * n {
            at_bound.push(g);
        }
    }
    ensure(at_bound.len() == 1 && at_bound[0].is_petersen(), || {
        format!("3n/5 attained by {} graphs", at_bound.len())
    })?;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0003);
    for _ in 0..200 {
        let n = rng.gen_range(6..=10);
        let p = rng.gen_range(0.25..0.7);
        let g = random_connected(n, p, 2, &mut rng).map_err(|e| e.to_string())?;
        let value = gamma(&g);
        ensure(3 * value <= 2 * n, || {
            format!("{} has gamma_pr {value} > 2n/3", g6(&g))
        })?;
    }
    Ok("3n/5 on cubic corpora (equality only at Petersen), 2n/3 on 200 random graphs".into())
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let fixtures = [
        ("C3", cycle(3).unwrap(), 2),
        ("C5", cycle(5).unwrap(), 4),
        ("P5", path(5).unwrap(), 4),
    ];
    for (name, g, want) in &fixtures {
        let value = gamma(g);
        ensure(value == *want && value == g.n() - 1, || {
            format!("{name}: gamma_pr = {value}")
        })?;
    }
    for t in 2..=4 {
        let g = subdivided_star(t).unwrap();
        let value = gamma(&g);
        ensure(value == g.n() - 1, || {
            format!("subdivided star {t}: gamma_pr = {value}")
        })?;
    }
    within(start, Duration::from_secs(1))?;
    Ok("C3 = 2, C5 = 4, P5 = 4, subdivided stars t = 2..4 all n - 1".into())
}

fn criterion_5() -> Outcome {
    let mut checked = 0;
    for (_, g) in corpora(10) {
        let (fast, slow) = (
            gamma(&g),
            brute_force_oracle(&g).map_err(|e| e.to_string())?,
        );
        ensure(fast == slow, || {
            format!("{}: solver {fast}, oracle {slow}", g6(&g))
        })?;
        checked += 1;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0005);
    for _ in 0..100 {
        let n = rng.gen_range(2..=9);
        let p = rng.gen_range(0.2..0.8);
        let g = random_connected(n, p, 1, &mut rng).map_err(|e| e.to_string())?;
        let (fast, slow) = (
            gamma(&g),
            brute_force_oracle(&g).map_err(|e| e.to_string())?,
        );
        ensure(fast == slow, || {
            format!("{}: solver {fast}, oracle {slow}", g6(&g))
        })?;
        checked += 1;
    }
    Ok(format!(
        "{checked} graphs agree with the brute-force oracle"
    ))
}

fn criterion_6() -> Outcome {
    let mut ties = 0;
    let mut edges = 0;
    for (_, g) in corpora(10) {
        for c in canonical_pds(&g).map_err(|e| e.to_string())? {
            let w = assign_weights(&g, &c).map_err(|e| e.to_string())?;
            let report = check_assignment(&g, &c, &w);
            ensure(report.passed(), || {
                format!("{}: {:?}", g6(&g), report.failures)
            })?;
            ties += 1;
            edges += w.len();
        }
    }
    Ok(format!(
        "{ties} ties, {edges} boundary edges, all weight checks exact"
    ))
}

fn criterion_7() -> Outcome {
    let mut certified = 0;
    for (_, g) in corpora(10) {
        let ties = canonical_pds(&g).map_err(|e| e.to_string())?;
        let cert = certify_bound(&g, &ties)
            .map_err(|e| e.to_string())?
            .with_id(g6(&g));
        if g.is_petersen() {
            ensure(!cert.verdict, || "Petersen certified".into())?;
            continue;
        }
        ensure(cert.verdict && cert.chain_consistent, || {
            serde_json::to_string_pretty(&cert).expect("plain data")
        })?;
        certified += 1;
    }
    Ok(format!("{certified} non-Petersen graphs certified"))
}

fn criterion_8() -> Outcome {
    let mut graphs = 0;
    for (_, g) in corpora(usize::MAX) {
        let ties = canonical_pds(&g).map_err(|e| e.to_string())?;
        let reports: Vec<_> = ties
            .iter()
            .map(|c| check_structural_properties(&g, c))
            .collect();
        for p in Property::ALL {
            ensure(reports.iter().any(|r| r.outcome(p).passed()), || {
                format!("property ({}) fails on every tie of {}", p.letter(), g6(&g))
            })?;
        }
        graphs += 1;
    }
    Ok(format!(
        "properties (a)-(e) hold on a tie of each of {graphs} graphs"
    ))
}

fn criterion_9() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0009);
    for i in 0..10_000 {
        let n = 2 * rng.gen_range(2..=31);
        let mut g = random_cubic(n, rng.gen()).map_err(|e| e.to_string())?;
        if i % 2 == 1 {
            let edges: Vec<_> = g.edges().collect();
            let keep = rng.gen_range(0.0..1.0);
            let mut h = Graph::empty(n).unwrap();
            for (u, v) in edges {
                if rng.gen_bool(keep) {
                    h.add_edge(u, v).unwrap();
                }
            }
            g = h;
        }
        let text = g6(&g);
        let back = parse_graph6(&text).map_err(|e| format!("{text}: {e}"))?;
        ensure(back == g && g6(&back) == text, || {
            format!("round trip changed {text}")
        })?;
    }
    Ok("10000 graphs round-trip byte-identically".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("Petersen exception", criterion_1),
        ("4n/7 on cubic corpora n <= 12", criterion_2),
        ("3n/5 and 2n/3 regression", criterion_3),
        ("n - 1 extremal fixtures", criterion_4),
        ("solver matches brute-force oracle", criterion_5),
        ("weight-function invariants", criterion_6),
        ("certificate completeness", criterion_7),
        ("structural properties", criterion_8),
        ("graph6 round-trip fuzz", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {} PASS {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {} FAIL {name}: {detail}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
