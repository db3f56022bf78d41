//! Quantum multiplication by the Schubert divisor `sigma_{s_{alpha_i}}` on
//! `QH^*(G/P_i)` for minuscule `lambda_i`.
//!
//! Three routes produce the same operator:
//! - the representation-theoretic `A(q)` from [`crate::minrep`],
//! - the closed minuscule form of the quantum Chevalley rule ([`chevalley_closed`]),
//! - the general Fulton-Woodward sum over `alpha in Delta+ \ Delta_P+`, with
//!   lengths read off from weights ([`chevalley_fw_oracle`]).
//!
//! Schubert classes are indexed by orbit weights via `sigma_u <-> u(lambda_i)`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::minrep;
use crate::poly::{Poly, PolyMatrix};
use crate::rootsys::{RootSystem, RootVec, Weight};
use crate::weylorbit::{apply_word, Orbit};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SchubertClass(pub Weight);

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QProductTerm {
    pub target: Weight,
    pub q_power: u32,
    pub coefficient: i64,
}

/// `sigma_{s_{alpha_i}} o sigma_u = sum_{(u lambda_i, alpha_j^vee) = 1} sigma_{s_j u}
/// + q sigma_{s_psi u}`, the last term present iff `(u lambda_i, psi^vee) = -1`.
pub fn chevalley_closed(orb: &Orbit, u: &Weight) -> Result<Vec<QProductTerm>> {
    let rs = orb.root_system();
    orb.position(u)?;
    let mut out = Vec::new();
    for j in 1..=rs.rank() {
        if u.0[j - 1] == 1 {
            out.push(QProductTerm {
                target: rs.simple_reflect_weight(u, j),
                q_power: 0,
                coefficient: 1,
            });
        }
    }
    if rs.pair(u, &rs.highest_root)? == -1 {
        out.push(QProductTerm {
            target: u + &rs.highest_root_weight(),
            q_power: 1,
            coefficient: 1,
        });
    }
    Ok(out)
}

/// Everything the Fulton-Woodward evaluation saw for one class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FwTrace {
    pub terms: Vec<QProductTerm>,
    /// Roots `alpha` considered (all of `Delta+ \ Delta_P+`).
    pub candidates: usize,
    /// Roots whose length jump matched neither rule.
    pub discarded: usize,
    /// Surviving terms where `u(alpha)` was not a simple root (classical) or
    /// `-u(alpha)` was not `psi` (quantum).
    pub violations: Vec<String>,
}

pub fn chevalley_fw_oracle(orb: &Orbit, u: &Weight) -> Result<FwTrace> {
    let rs = orb.root_system();
    let i = orb.weight_index();
    let elem = orb.element(u)?;
    let len_u = elem.length as i64;
    let s = rs.coxeter_number;
    let lambda = rs.fundamental_weight(i);

    let mut acc: BTreeMap<(u32, usize), i64> = BTreeMap::new();
    let mut candidates = 0;
    let mut discarded = 0;
    let mut violations = Vec::new();
    for alpha in rs.roots_outside_levi(i) {
        candidates += 1;
        let coefficient = rs.pair(&lambda, &alpha)?;
        if coefficient != 1 {
            return Err(Error::Internal(format!(
                "(lambda_{i}, {alpha:?}^vee) = {coefficient}, expected 1"
            )));
        }
        let beta = apply_word(rs, &elem.word, &alpha);
        // u s_alpha (lambda_i) = u(lambda_i) - u(alpha)
        let target = u - &rs.root_to_weight(&beta);
        let pos = orb.index_of(&target).ok_or_else(|| {
            Error::Internal(format!("u s_alpha lambda_{i} = {target} left the orbit"))
        })?;
        let len_t = orb.length(&target)? as i64;
        let q_power = if len_t == len_u + 1 {
            if !(beta.is_positive() && beta.height() == 1) {
                violations.push(format!(
                    "classical term {u} -> {target}: u(alpha) = {beta:?} is not simple"
                ));
            }
            0
        } else if len_t == len_u - s + 1 {
            if -&beta != rs.highest_root {
                violations.push(format!(
                    "quantum term {u} -> {target}: -u(alpha) = {:?} is not psi",
                    -&beta
                ));
            }
            1
        } else {
            discarded += 1;
            continue;
        };
        *acc.entry((q_power, pos)).or_insert(0) += coefficient;
    }
    let terms = acc
        .into_iter()
        .map(|((q_power, pos), coefficient)| QProductTerm {
            target: orb.elements()[pos].weight.clone(),
            q_power,
            coefficient,
        })
        .collect();
    Ok(FwTrace {
        terms,
        candidates,
        discarded,
        violations,
    })
}

/// `n_alpha = (sum of Delta+ \ Delta_P+, alpha^vee)`.
pub fn n_alpha(rs: &RootSystem, i: usize, alpha: &RootVec) -> Result<i64> {
    rs.check_index(i)?;
    let outside = rs.roots_outside_levi(i);
    if !outside.contains(alpha) {
        return Err(if rs.is_root(alpha) {
            Error::InParabolic(alpha.clone())
        } else {
            Error::NotARoot(alpha.clone())
        });
    }
    let total = outside
        .iter()
        .fold(RootVec(vec![0; rs.rank()]), |acc, g| &acc + g);
    rs.pair_roots(&total, alpha)
}

fn matrix_from_columns(
    orb: &Orbit,
    mut column: impl FnMut(&Weight) -> Result<Vec<QProductTerm>>,
) -> Result<PolyMatrix> {
    let mut m = PolyMatrix::zero(orb.len());
    for (src, e) in orb.elements().iter().enumerate() {
        for t in column(&e.weight)? {
            let dst = orb.position(&t.target)?;
            let mut entry = m.get(dst, src).clone();
            entry += &Poly::monomial(t.coefficient, t.q_power);
            m.set(dst, src, entry);
        }
    }
    Ok(m)
}

/// Matrix of `sigma_{s_{alpha_i}} o -` in the Schubert basis, from the closed form.
pub fn quantum_product_matrix(orb: &Orbit) -> Result<PolyMatrix> {
    matrix_from_columns(orb, |u| chevalley_closed(orb, u))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FwOracleRun {
    pub matrix: PolyMatrix,
    pub surviving_terms: usize,
    pub discarded: usize,
    pub violations: Vec<String>,
}

pub fn fw_oracle_matrix(orb: &Orbit) -> Result<FwOracleRun> {
    let mut surviving_terms = 0;
    let mut discarded = 0;
    let mut violations = Vec::new();
    let matrix = matrix_from_columns(orb, |u| {
        let trace = chevalley_fw_oracle(orb, u)?;
        surviving_terms += trace.terms.len();
        discarded += trace.discarded;
        violations.extend(trace.violations);
        Ok(trace.terms)
    })?;
    Ok(FwOracleRun {
        matrix,
        surviving_terms,
        discarded,
        violations,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    pub left_route: String,
    pub right_route: String,
    pub source: Weight,
    pub target: Weight,
    pub left: String,
    pub right: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MainTheoremReport {
    pub dimension: usize,
    pub discrepancy: Option<Discrepancy>,
    pub oracle_violations: Vec<String>,
}

impl MainTheoremReport {
    pub fn passed(&self) -> bool {
        self.discrepancy.is_none() && self.oracle_violations.is_empty()
    }
}

pub fn first_discrepancy(
    orb: &Orbit,
    (left_route, left): (&str, &PolyMatrix),
    (right_route, right): (&str, &PolyMatrix),
) -> Option<Discrepancy> {
    let n = orb.len();
    for c in 0..n {
        for r in 0..n {
            if left.get(r, c) != right.get(r, c) {
                return Some(Discrepancy {
                    left_route: left_route.to_string(),
                    right_route: right_route.to_string(),
                    source: orb.elements()[c].weight.clone(),
                    target: orb.elements()[r].weight.clone(),
                    left: left.get(r, c).to_string(),
                    right: right.get(r, c).to_string(),
                });
            }
        }
    }
    None
}

/// Entrywise comparison of the three routes to the quantum product operator.
pub fn verify_main_theorem(orb: &Orbit) -> Result<MainTheoremReport> {
    let rep = minrep::quantum_operator(orb)?;
    verify_against(orb, &rep)
}

/// Same as [`verify_main_theorem`], with the representation-side operator
/// supplied by the caller.
pub fn verify_against(orb: &Orbit, rep: &PolyMatrix) -> Result<MainTheoremReport> {
    let closed = quantum_product_matrix(orb)?;
    let fw = fw_oracle_matrix(orb)?;
    let discrepancy = first_discrepancy(orb, ("representation", rep), ("closed form", &closed))
        .or_else(|| first_discrepancy(orb, ("closed form", &closed), ("fulton-woodward", &fw.matrix)));
    Ok(MainTheoremReport {
        dimension: orb.len(),
        discrepancy,
        oracle_violations: fw.violations,
    })
}

/// 0/1 matrix with `G[mu][nu] = 1` iff `nu` is the Poincare dual of `mu`.
pub fn pairing_matrix(orb: &Orbit) -> Result<PolyMatrix> {
    let mut g = PolyMatrix::zero(orb.len());
    for (k, e) in orb.elements().iter().enumerate() {
        let d = orb.position(&orb.poincare_dual(&e.weight)?)?;
        g.set(k, d, Poly::one());
    }
    Ok(g)
}

pub fn frobenius_holds(orb: &Orbit, a: &PolyMatrix) -> Result<bool> {
    let g = pairing_matrix(orb)?;
    Ok(&a.transpose() * &g == &g * a)
}

pub fn frobenius_check(orb: &Orbit) -> Result<bool> {
    frobenius_holds(orb, &minrep::quantum_operator(orb)?)
}

/// Every nonzero entry `c q^p` at `(target, source)` must satisfy
/// `len(target) = len(source) + 1 - p s`.
pub fn grading_holds(orb: &Orbit, a: &PolyMatrix) -> Result<bool> {
    let s = orb.root_system().coxeter_number;
    let lens: Vec<i64> = orb
        .elements()
        .iter()
        .map(|e| orb.length(&e.weight).map(|l| l as i64))
        .collect::<Result<_>>()?;
    for (r, c, p) in a.nonzero() {
        for (exp, _) in p.terms() {
            if lens[r] != lens[c] + 1 - exp as i64 * s {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub fn grading_check(orb: &Orbit) -> Result<bool> {
    grading_holds(orb, &minrep::quantum_operator(orb)?)
}

/// Exhaustive check that each `(mu, alpha_j)` falls in exactly one of
/// `(mu, alpha_j^vee) = 1` with `len(s_j mu) = len(mu) + 1`,
/// `= 0` with `s_j mu = mu`, or `= -1` with `len(s_j mu) = len(mu) - 1`.
/// Returns the violations.
pub fn lemma_trichotomy(orb: &Orbit) -> Result<Vec<String>> {
    let rs = orb.root_system();
    let mut bad = Vec::new();
    for e in orb.elements() {
        let len = orb.length(&e.weight)? as i64;
        for j in 1..=rs.rank() {
            let p = e.weight.0[j - 1];
            let image = rs.simple_reflect_weight(&e.weight, j);
            let ok = match p {
                1 | -1 => orb.contains(&image) && orb.length(&image)? as i64 == len + p,
                0 => image == e.weight,
                _ => false,
            };
            if !ok {
                bad.push(format!("{} with alpha_{j}: pairing {p}", e.weight));
            }
        }
    }
    Ok(bad)
}

/// Pairings of every orbit weight with every positive coroot lie in {-1, 0, 1}.
pub fn pairings_are_minuscule(orb: &Orbit) -> Result<bool> {
    let rs = orb.root_system();
    for e in orb.elements() {
        for a in &rs.positive_roots {
            if rs.pair(&e.weight, a)?.abs() > 1 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn orb(t: &str, i: usize) -> Orbit {
        Orbit::new(&RootSystem::build(t.parse().unwrap()).unwrap(), i).unwrap()
    }

    #[test]
    fn cp2_top_class() {
        let o = orb("A2", 1);
        let top = o.lowest().weight.clone();
        let expected = vec![QProductTerm {
            target: o.highest().weight.clone(),
            q_power: 1,
            coefficient: 1,
        }];
        assert_eq!(chevalley_closed(&o, &top).unwrap(), expected);
        let trace = chevalley_fw_oracle(&o, &top).unwrap();
        assert_eq!(trace.terms, expected);
        assert!(trace.violations.is_empty());
    }

    #[test]
    fn gr24_divisor_squared() {
        let o = orb("A3", 2);
        let sigma1 = o.elements()[1].weight.clone();
        let terms = chevalley_closed(&o, &sigma1).unwrap();
        assert_eq!(terms.len(), 2);
        assert!(terms.iter().all(|t| t.q_power == 0));
        let lens: Vec<usize> = terms.iter().map(|t| o.length(&t.target).unwrap()).collect();
        assert_eq!(lens, vec![2, 2]);
        assert_eq!(chevalley_fw_oracle(&o, &sigma1).unwrap().terms.len(), 2);
    }

    #[test]
    fn identity_class_gives_divisor() {
        for (t, i) in [("A4", 2), ("D5", 5), ("E6", 1), ("C3", 1)] {
            let o = orb(t, i);
            let lam = o.highest().weight.clone();
            let terms = chevalley_closed(&o, &lam).unwrap();
            let rs = o.root_system();
            assert_eq!(
                terms,
                vec![QProductTerm {
                    target: rs.simple_reflect_weight(&lam, i),
                    q_power: 0,
                    coefficient: 1
                }]
            );
        }
    }

    #[test]
    fn e6_identity_discards() {
        let o = orb("E6", 1);
        let trace = chevalley_fw_oracle(&o, &o.highest().weight).unwrap();
        assert_eq!(trace.candidates, 16);
        assert_eq!(trace.discarded, 15);
        assert_eq!(trace.terms.len(), 1);
    }

    #[test]
    fn n_alpha_examples() {
        let a2 = RootSystem::build("A2".parse().unwrap()).unwrap();
        assert_eq!(n_alpha(&a2, 1, &a2.highest_root).unwrap(), 3);
        assert!(matches!(
            n_alpha(&a2, 1, &a2.simple_root(2)),
            Err(Error::InParabolic(_))
        ));
        let d4 = RootSystem::build("D4".parse().unwrap()).unwrap();
        for a in d4.roots_outside_levi(1) {
            assert_eq!(n_alpha(&d4, 1, &a).unwrap(), 6);
        }
        let e6 = RootSystem::build("E6".parse().unwrap()).unwrap();
        for a in e6.roots_outside_levi(1) {
            assert_eq!(n_alpha(&e6, 1, &a).unwrap(), 12);
        }
    }

    #[test]
    fn a1_matrices() {
        let o = orb("A1", 1);
        let expected = PolyMatrix::from_rows(vec![
            vec![Poly::zero(), Poly::q()],
            vec![Poly::one(), Poly::zero()],
        ]);
        assert_eq!(quantum_product_matrix(&o).unwrap(), expected);
        assert!(verify_main_theorem(&o).unwrap().passed());
        assert!(frobenius_check(&o).unwrap());
        assert!(grading_check(&o).unwrap());
    }

    #[test]
    fn gr24_full_table() {
        let o = orb("A3", 2);
        let fw = fw_oracle_matrix(&o).unwrap();
        assert_eq!(fw.matrix, quantum_product_matrix(&o).unwrap());
        assert!(fw.violations.is_empty());
    }

    #[test]
    fn mutations_are_detected() {
        let o = orb("D5", 1);
        let a = minrep::quantum_operator(&o).unwrap();
        let (r, c) = a
            .nonzero()
            .find(|(_, _, p)| *p == &Poly::one())
            .map(|(r, c, _)| (r, c))
            .unwrap();
        let mut deleted = a.clone();
        deleted.set(r, c, Poly::zero());
        assert!(!frobenius_holds(&o, &deleted).unwrap());
        let report = verify_against(&o, &deleted).unwrap();
        let d = report.discrepancy.expect("deleted edge must be reported");
        assert_eq!(d.left, "0");
        assert_eq!(d.right, "1");

        let mut misgraded = a.clone();
        misgraded.set(r, c, Poly::q());
        assert!(!grading_holds(&o, &misgraded).unwrap());
    }

    #[test]
    fn trichotomy_small() {
        assert!(lemma_trichotomy(&orb("B3", 3)).unwrap().is_empty());
        assert!(pairings_are_minuscule(&orb("D4", 4)).unwrap());
    }
}
