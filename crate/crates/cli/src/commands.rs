use std::io::Write;

use pairdom_core::canonical::{check_structural_properties, rank, Property};
use pairdom_core::generate::random_cubic;
use pairdom_core::pds::verify_pds;
use pairdom_core::solver::{brute_force_oracle, ORACLE_MAX_N};
use pairdom_core::weight::{assign_weights, check_assignment};
use pairdom_core::{canonical_pds, certify_bound, gamma_pr, write_graph6, Graph, PairedDomSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::input::Loaded;
use crate::CliError;

/// Seeds tried per requested graph before the line is reported as failed.
pub const GENERATE_RETRIES: usize = 3;

#[derive(Serialize)]
struct SolveReport<'a> {
    id: &'a str,
    n: usize,
    gamma_pr: usize,
    s: Vec<usize>,
    m: &'a [(usize, usize)],
}

pub fn solve(input: &Loaded, json: bool, out: &mut dyn Write) -> Result<(), CliError> {
    let g = &input.graph;
    let res = gamma_pr(g)?;
    if json {
        let report = SolveReport {
            id: &input.id,
            n: g.n(),
            gamma_pr: res.value,
            s: res.witness.s.to_vec(),
            m: res.witness.m.edges(),
        };
        writeln!(
            out,
            "{}",
            serde_json::to_string(&report).expect("plain data")
        )?;
    } else {
        writeln!(out, "n={}", g.n())?;
        writeln!(out, "gamma_pr={}", res.value)?;
        writeln!(out, "S={}", res.witness.s)?;
        writeln!(out, "M={}", res.witness.m)?;
    }
    Ok(())
}

#[derive(Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub ok: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &str, ok: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.to_string(),
            ok,
            detail: detail.into(),
        }
    }
}

fn verify_given(g: &Graph, p: &PairedDomSet) -> Result<Vec<Check>, CliError> {
    let mut checks = Vec::new();
    match verify_pds(g, p) {
        Ok(()) => checks.push(Check::new(
            "paired_dominating",
            true,
            format!("size {}", p.size()),
        )),
        Err(vs) => {
            let detail = vs
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join("; ");
            checks.push(Check::new("paired_dominating", false, detail));
            return Ok(checks);
        }
    }
    let best = canonical_pds(g)?;
    let gamma = best[0].pds.size();
    // Minimality is informational: a valid but larger set is not an error.
    checks.push(Check::new(
        "minimum",
        true,
        if p.size() == gamma {
            "yes".to_string()
        } else {
            format!("no, gamma_pr = {gamma}")
        },
    ));
    let r = rank(g, p);
    checks.push(Check::new(
        "canonical",
        true,
        if r == best[0].rank() {
            "yes".to_string()
        } else {
            format!(
                "no, rank (size {}, lambda {}, |A∪B| {}) vs best ({}, {}, {})",
                r.size, r.lambda, r.ab_size, gamma, best[0].lambda_value, best[0].ab_size
            )
        },
    ));
    Ok(checks)
}

fn verify_suite(g: &Graph) -> Result<Vec<Check>, CliError> {
    let mut checks = Vec::new();
    let res = gamma_pr(g)?;
    checks.push(Check::new(
        "witness",
        verify_pds(g, &res.witness).is_ok() && res.witness.size() == res.value,
        format!("gamma_pr = {}", res.value),
    ));
    if g.n() <= ORACLE_MAX_N {
        let oracle = brute_force_oracle(g)?;
        checks.push(Check::new(
            "oracle",
            oracle == res.value,
            format!("brute force = {oracle}"),
        ));
    }
    let ties = canonical_pds(g)?;
    checks.push(Check::new(
        "canonical_ties",
        ties.iter().all(|c| c.pds.size() == res.value),
        format!("{} ties", ties.len()),
    ));
    for p in Property::ALL {
        let passing = ties
            .iter()
            .filter(|c| check_structural_properties(g, c).outcome(p).passed())
            .count();
        checks.push(Check::new(
            &format!("property_{}", p.letter()),
            passing > 0,
            format!("{passing}/{} ties", ties.len()),
        ));
    }
    if g.is_cubic() && g.is_connected() {
        let mut failing = 0;
        for c in &ties {
            let w = assign_weights(g, c)?;
            if !check_assignment(g, c, &w).passed() {
                failing += 1;
            }
        }
        checks.push(Check::new(
            "weights",
            failing == 0,
            format!("{failing}/{} ties fail", ties.len()),
        ));
        let cert = certify_bound(g, &ties)?;
        checks.push(Check::new(
            "certificate",
            cert.verdict != g.is_petersen() && cert.chain_consistent,
            format!(
                "verdict {}, petersen {}, slack {}",
                cert.verdict,
                g.is_petersen(),
                cert.slack
            ),
        ));
    }
    Ok(checks)
}

/// Checks a given `(S, M)` if `pds` is set, otherwise runs every internal
/// consistency check on the graph. Fails if any check fails.
pub fn verify(
    input: &Loaded,
    pds: Option<&PairedDomSet>,
    json: bool,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let g = &input.graph;
    let checks = match pds {
        Some(p) => verify_given(g, p)?,
        None => verify_suite(g)?,
    };
    if json {
        let v = serde_json::json!({ "id": input.id, "n": g.n(), "checks": checks });
        writeln!(out, "{v}")?;
    } else {
        for c in &checks {
            let tag = if c.ok { "ok  " } else { "FAIL" };
            writeln!(out, "{tag} {:<18} {}", c.name, c.detail)?;
        }
    }
    match checks.iter().find(|c| !c.ok) {
        Some(c) => Err(CliError::Failed(format!(
            "check {} failed: {}",
            c.name, c.detail
        ))),
        None => Ok(()),
    }
}

/// Prints the certificate as JSON; a false verdict is an error after the
/// report has been written.
pub fn certify(input: &Loaded, out: &mut dyn Write) -> Result<(), CliError> {
    let g = &input.graph;
    if !g.is_cubic() {
        return Err(CliError::NotCubic(format!("{} is not 3-regular", input.id)));
    }
    if !g.is_connected() {
        return Err(CliError::NotCubic(format!("{} is not connected", input.id)));
    }
    let ties = canonical_pds(g)?;
    let cert = certify_bound(g, &ties)?.with_id(input.id.clone());
    writeln!(
        out,
        "{}",
        serde_json::to_string_pretty(&cert).expect("plain data")
    )?;
    if cert.verdict {
        Ok(())
    } else {
        Err(CliError::NotCertified)
    }
}

/// Writes `count` random connected cubic graphs on `n` vertices. Per-graph
/// seeds are drawn from a ChaCha8 stream keyed by `seed`.
pub fn generate(
    n: usize,
    count: usize,
    seed: u64,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<(), CliError> {
    if n < 4 || n % 2 == 1 {
        return Err(CliError::Usage(format!(
            "--n must be even and at least 4, got {n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut produced = 0;
    for i in 0..count {
        let mut last = None;
        for _ in 0..GENERATE_RETRIES {
            match random_cubic(n, rng.gen()) {
                Ok(g) => {
                    writeln!(
                        out,
                        "{}",
                        write_graph6(&g).map_err(|e| CliError::Usage(e.to_string()))?
                    )?;
                    produced += 1;
                    last = None;
                    break;
                }
                Err(e) => last = Some(e),
            }
        }
        if let Some(e) = last {
            writeln!(err, "graph {i}: {e}")?;
        }
    }
    if produced == 0 && count > 0 {
        return Err(CliError::Failed("no graph could be generated".into()));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::input::GraphSource;

    fn named(name: &str) -> Loaded {
        GraphSource {
            name: Some(name.into()),
            ..Default::default()
        }
        .load()
        .unwrap()
    }

    #[test]
    fn solve_text_output() {
        let mut buf = Vec::new();
        solve(&named("k4"), false, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.contains("gamma_pr=2\n"));
    }

    #[test]
    fn verify_suite_passes_on_petersen() {
        let mut buf = Vec::new();
        verify(&named("petersen"), None, false, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(!text.contains("FAIL"), "{text}");
    }

    #[test]
    fn verify_rejects_non_dominating_set() {
        let p = crate::input::parse_pds("0-1").unwrap();
        let mut buf = Vec::new();
        let err = verify(&named("cycle6"), Some(&p), false, &mut buf).unwrap_err();
        assert_eq!(err.exit_code(), 1);
    }

    #[test]
    fn certify_exit_codes() {
        let mut buf = Vec::new();
        assert!(certify(&named("k4"), &mut buf).is_ok());
        assert_eq!(
            certify(&named("petersen"), &mut buf)
                .unwrap_err()
                .exit_code(),
            4
        );
        assert_eq!(
            certify(&named("cycle5"), &mut buf).unwrap_err().exit_code(),
            5
        );
    }

    #[test]
    fn generate_rejects_odd_order() {
        let err = generate(7, 1, 0, &mut Vec::new(), &mut Vec::new()).unwrap_err();
        assert_eq!(err.exit_code(), 2);
    }
}
