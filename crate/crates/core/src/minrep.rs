//! Generators of `g` acting on the minuscule representation `V_{lambda_i}` in the
//! canonical weight basis `{v_mu : mu in W lambda_i}`.
//!
//! Every weight space is one-dimensional and all structure constants are 1:
//! `e_{-alpha_j} v_mu = v_{mu - alpha_j}` when `(mu, alpha_j^vee) = 1`,
//! `e_{alpha_j} v_mu = v_{mu + alpha_j}` when `(mu, alpha_j^vee) = -1`, and
//! `e_psi v_mu = v_{mu + psi}` when `(mu, psi^vee) = -1`. Matrix entries are
//! indexed `(target, source)` in the orbit's canonical order.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{Poly, PolyMatrix};
use crate::weylorbit::Orbit;

pub fn lowering_matrix(orb: &Orbit, j: usize) -> Result<PolyMatrix> {
    orb.root_system().check_index(j)?;
    Ok(simple_root_matrix(orb, j, 1))
}

pub fn raising_matrix(orb: &Orbit, j: usize) -> Result<PolyMatrix> {
    orb.root_system().check_index(j)?;
    Ok(simple_root_matrix(orb, j, -1))
}

/// `sign = 1` builds `e_{-alpha_j}`, `sign = -1` builds `e_{alpha_j}`.
fn simple_root_matrix(orb: &Orbit, j: usize, sign: i64) -> PolyMatrix {
    let rs = orb.root_system();
    let mut m = PolyMatrix::zero(orb.len());
    for (src, e) in orb.elements().iter().enumerate() {
        if e.weight.0[j - 1] != sign {
            continue;
        }
        let target = rs.simple_reflect_weight(&e.weight, j);
        let dst = orb
            .index_of(&target)
            .expect("simple reflection preserves the orbit");
        m.set(dst, src, Poly::one());
    }
    m
}

/// Diagonal matrix of `H_{alpha_j}`: the pairings `(mu, alpha_j^vee)`.
pub fn cartan_action(orb: &Orbit, j: usize) -> Result<PolyMatrix> {
    orb.root_system().check_index(j)?;
    let mut m = PolyMatrix::zero(orb.len());
    for (k, e) in orb.elements().iter().enumerate() {
        m.set(k, k, Poly::constant(e.weight.0[j - 1]));
    }
    Ok(m)
}

pub fn psi_raising_matrix(orb: &Orbit) -> Result<PolyMatrix> {
    let rs = orb.root_system();
    let psi = &rs.highest_root;
    let psi_w = rs.highest_root_weight();
    let mut m = PolyMatrix::zero(orb.len());
    for (src, e) in orb.elements().iter().enumerate() {
        if rs.pair(&e.weight, psi)? != -1 {
            continue;
        }
        let target = &e.weight + &psi_w;
        let dst = orb.index_of(&target).ok_or_else(|| {
            Error::Internal(format!("{} + psi = {target} is not in the orbit", e.weight))
        })?;
        m.set(dst, src, Poly::one());
    }
    Ok(m)
}

/// `A(q) = sum_j e_{-alpha_j} + q e_psi`.
pub fn quantum_operator(orb: &Orbit) -> Result<PolyMatrix> {
    let mut a = PolyMatrix::zero(orb.len());
    for j in 1..=orb.root_system().rank() {
        a = &a + &lowering_matrix(orb, j)?;
    }
    Ok(&a + &psi_raising_matrix(orb)?.scale(&Poly::q()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationFailure {
    pub relation: String,
    pub j: usize,
    pub k: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationReport {
    pub checked: usize,
    pub failure: Option<RelationFailure>,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Checks the Chevalley-Serre bracket relations that involve the generators
/// above. Stops at the first failure.
pub fn verify_rep_relations(orb: &Orbit) -> Result<RelationReport> {
    let rs = orb.root_system();
    let l = rs.rank();
    let lower: Vec<PolyMatrix> = (1..=l).map(|j| lowering_matrix(orb, j)).collect::<Result<_>>()?;
    let raise: Vec<PolyMatrix> = (1..=l).map(|j| raising_matrix(orb, j)).collect::<Result<_>>()?;
    let cartan: Vec<PolyMatrix> = (1..=l).map(|j| cartan_action(orb, j)).collect::<Result<_>>()?;
    let psi = psi_raising_matrix(orb)?;
    let a = rs.cartan();
    let zero = PolyMatrix::zero(orb.len());

    let mut checked = 0;
    let fail = |checked, relation: &str, j, k| RelationReport {
        checked,
        failure: Some(RelationFailure {
            relation: relation.to_string(),
            j,
            k,
        }),
    };

    for j in 0..l {
        checked += 1;
        if raise[j].commutator(&lower[j]) != cartan[j] {
            return Ok(fail(checked, "[E+(j), E-(j)] = H(j)", j + 1, None));
        }
        checked += 1;
        if raise[j].commutator(&psi) != zero {
            return Ok(fail(checked, "[E+(j), E_psi] = 0", j + 1, None));
        }
        for k in 0..l {
            if j != k {
                checked += 1;
                if raise[j].commutator(&lower[k]) != zero {
                    return Ok(fail(checked, "[E+(j), E-(k)] = 0", j + 1, Some(k + 1)));
                }
            }
            let c = Poly::constant(a[j][k]);
            checked += 1;
            if cartan[j].commutator(&lower[k]) != lower[k].scale(&-&c) {
                return Ok(fail(checked, "[H(j), E-(k)] = -a_jk E-(k)", j + 1, Some(k + 1)));
            }
            checked += 1;
            if cartan[j].commutator(&raise[k]) != raise[k].scale(&c) {
                return Ok(fail(checked, "[H(j), E+(k)] = a_jk E+(k)", j + 1, Some(k + 1)));
            }
        }
    }
    Ok(RelationReport {
        checked,
        failure: None,
    })
}
