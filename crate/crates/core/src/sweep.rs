//! Runs every structural check on every minuscule `(G, lambda_i)` of a sweep.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::poly::Poly;
use crate::rootsys::{Family, LieType, RootSystem};
use crate::weylorbit::{expected_orbit_size, Orbit};
use crate::{minrep, qchev};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepConfig {
    pub max_rank: BTreeMap<Family, usize>,
    pub include_exceptional: bool,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            max_rank: [(Family::A, 6), (Family::B, 5), (Family::C, 5), (Family::D, 6)]
                .into_iter()
                .collect(),
            include_exceptional: true,
        }
    }
}

impl SweepConfig {
    /// Parses `key = value` lines: `max_rank_A` .. `max_rank_D` and
    /// `include_exceptional`. `#` starts a comment.
    pub fn parse(text: &str) -> std::result::Result<Self, String> {
        let mut cfg = SweepConfig::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| format!("line {}: expected key=value", lineno + 1))?;
            let (key, value) = (key.trim(), value.trim());
            if key == "include_exceptional" {
                cfg.include_exceptional = value
                    .parse()
                    .map_err(|_| format!("line {}: expected true or false", lineno + 1))?;
            } else if let Some(fam) = key.strip_prefix("max_rank_") {
                let family: Family = fam.parse().map_err(|e| format!("line {}: {e}", lineno + 1))?;
                let rank = value
                    .parse()
                    .map_err(|_| format!("line {}: bad rank `{value}`", lineno + 1))?;
                cfg.set_max_rank(family, rank)?;
            } else {
                return Err(format!("line {}: unknown key `{key}`", lineno + 1));
            }
        }
        Ok(cfg)
    }

    pub fn set_max_rank(&mut self, family: Family, rank: usize) -> std::result::Result<(), String> {
        if !matches!(family, Family::A | Family::B | Family::C | Family::D) {
            return Err(format!("family {family} has no rank sweep"));
        }
        if rank < family.min_rank() {
            return Err(format!(
                "max rank {rank} for {family} is below the minimal rank {}",
                family.min_rank()
            ));
        }
        self.max_rank.insert(family, rank);
        Ok(())
    }

    pub fn types(&self) -> Vec<LieType> {
        let mut out = Vec::new();
        for (&family, &max) in &self.max_rank {
            for rank in family.min_rank()..=max {
                out.push(LieType { family, rank });
            }
        }
        if self.include_exceptional {
            out.push(LieType {
                family: Family::E,
                rank: 6,
            });
            out.push(LieType {
                family: Family::E,
                rank: 7,
            });
        }
        out
    }

    /// All minuscule `(type, i)` pairs of the sweep.
    pub fn cases(&self) -> Result<Vec<(LieType, usize)>> {
        let mut out = Vec::new();
        for t in self.types() {
            let rs = RootSystem::build(t)?;
            for i in rs.minuscule_weights() {
                out.push((t, i));
            }
        }
        Ok(out)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseReport {
    pub lie_type: LieType,
    pub weight_index: usize,
    pub orbit_size: usize,
    pub coxeter_number: i64,
    pub checks: Vec<Check>,
}

impl CaseReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

fn check(name: &'static str, passed: bool, detail: Option<String>) -> Check {
    Check {
        name,
        passed,
        detail,
    }
}

/// With `corrupt`, the first edge of `A(q)` is deleted before the operator
/// checks run; every such run must fail.
pub fn verify_case(t: LieType, i: usize, corrupt: bool) -> Result<CaseReport> {
    let rs = RootSystem::build(t)?;
    let orb = Orbit::new(&rs, i)?;
    let s = rs.coxeter_number;
    let mut checks = Vec::new();

    let expected = expected_orbit_size(t, i);
    checks.push(check(
        "orbit_size",
        expected == Some(orb.len()),
        Some(format!("{} (expected {expected:?})", orb.len())),
    ));

    let rel = minrep::verify_rep_relations(&orb)?;
    checks.push(check(
        "rep_relations",
        rel.passed(),
        rel.failure.map(|f| format!("{} at j={} k={:?}", f.relation, f.j, f.k)),
    ));

    let mut a = minrep::quantum_operator(&orb)?;
    if corrupt {
        let first = a.nonzero().map(|(r, c, _)| (r, c)).next();
        if let Some((r, c)) = first {
            a.set(r, c, Poly::zero());
        }
    }
    let main = qchev::verify_against(&orb, &a)?;
    checks.push(check(
        "main_theorem",
        main.discrepancy.is_none(),
        main.discrepancy.map(|d| {
            format!(
                "{} vs {} at source {} target {}: {} != {}",
                d.left_route, d.right_route, d.source, d.target, d.left, d.right
            )
        }),
    ));
    checks.push(check(
        "oracle_assertions",
        main.oracle_violations.is_empty(),
        main.oracle_violations.first().cloned(),
    ));

    checks.push(check("frobenius", qchev::frobenius_holds(&orb, &a)?, None));
    checks.push(check("grading", qchev::grading_holds(&orb, &a)?, None));

    let mut bad_n = None;
    for alpha in rs.roots_outside_levi(i) {
        let n = qchev::n_alpha(&rs, i, &alpha)?;
        if n != s {
            bad_n = Some(format!("n_alpha({alpha:?}) = {n}, s = {s}"));
            break;
        }
    }
    checks.push(check("n_alpha", bad_n.is_none(), bad_n));

    let tri = qchev::lemma_trichotomy(&orb)?;
    checks.push(check("trichotomy", tri.is_empty(), tri.first().cloned()));

    checks.push(check(
        "minuscule_pairings",
        qchev::pairings_are_minuscule(&orb)?,
        None,
    ));

    let mut duality = true;
    for e in orb.elements() {
        let d = orb.poincare_dual(&e.weight)?;
        duality &= orb.length(&d)? + e.length == orb.dim_complex();
    }
    checks.push(check("poincare_duality", duality, None));

    Ok(CaseReport {
        lie_type: t,
        weight_index: i,
        orbit_size: orb.len(),
        coxeter_number: s,
        checks,
    })
}

/// Cases run in parallel; reports come back in case order.
pub fn run_sweep(config: &SweepConfig, corrupt: bool) -> Result<Vec<CaseReport>> {
    config
        .cases()?
        .into_par_iter()
        .map(|(t, i)| verify_case(t, i, corrupt))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_cases() {
        let cases = SweepConfig::default().cases().unwrap();
        // A1..A6: 21, B2..B5: 4, C2..C5: 4, D3..D6: 12, E6: 2, E7: 1
        assert_eq!(cases.len(), 44);
    }

    #[test]
    fn config_parsing() {
        let cfg = SweepConfig::parse("max_rank_A = 3\n# comment\ninclude_exceptional=false\n").unwrap();
        assert_eq!(cfg.max_rank[&Family::A], 3);
        assert!(!cfg.include_exceptional);
        assert!(SweepConfig::parse("max_rank_Q = 3").is_err());
        assert!(SweepConfig::parse("max_rank_D = 2").is_err());
        assert!(SweepConfig::parse("max_rank_E = 7").is_err());
        assert!(SweepConfig::parse("nonsense").is_err());
    }

    #[test]
    fn corrupted_case_fails() {
        let t = "A3".parse().unwrap();
        assert!(verify_case(t, 2, false).unwrap().passed());
        let bad = verify_case(t, 2, true).unwrap();
        assert!(!bad.passed());
        assert!(!bad.check("main_theorem").unwrap().passed);
    }
}
