//! Dictionary between asymptotic data of tt*-Toda solutions, points of the
//! fundamental Weyl alcove, and the exponents of the DPW holomorphic data
//! `omega = (1/lambda)(sum_j z^{k_j} e_{-alpha_j} + z^{k_0} e_psi) dz`.
//!
//! Asymptotic data `m` is recorded by its simple-root values `alpha_j(m)`.
//! The extra root is `alpha_0 = -psi`, so `alpha_0(m) = -sum_j q_j alpha_j(m)`
//! with `psi = sum_j q_j alpha_j`. The alcove map is
//! `m -> (2 pi sqrt(-1) / s)(m + h_0)`; the factor `2 pi sqrt(-1)` is left
//! implicit and alcove points are stored by their rational coordinates
//! `alpha_j(x) = (alpha_j(m) + 1) / s`.

use num_rational::Rational64;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::minrep;
use crate::poly::PolyMatrix;
use crate::rootsys::{LieType, RootSystem};
use crate::weylorbit::Orbit;

/// `(alpha_1(m), ..., alpha_l(m))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AsymptoticData {
    pub values: Vec<Rational64>,
}

impl AsymptoticData {
    pub fn new(values: Vec<Rational64>) -> Self {
        AsymptoticData { values }
    }

    /// `m = -h_0`: every simple root takes the value -1.
    pub fn minus_h0(rank: usize) -> Self {
        AsymptoticData {
            values: vec![-Rational64::one(); rank],
        }
    }

    pub fn zero(rank: usize) -> Self {
        AsymptoticData {
            values: vec![Rational64::zero(); rank],
        }
    }
}

/// `(alpha_1(x), ..., alpha_l(x))` for `x` in the fundamental alcove.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlcovePoint {
    pub coords: Vec<Rational64>,
}

/// `(k_0, k_1, ..., k_l)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DpwExponents {
    pub k: Vec<Rational64>,
}

fn psi_value(rs: &RootSystem, values: &[Rational64]) -> Rational64 {
    rs.highest_root
        .0
        .iter()
        .zip(values)
        .map(|(q, v)| Rational64::from_integer(*q) * v)
        .sum()
}

fn check_len(rs: &RootSystem, len: usize) -> Result<()> {
    if len != rs.rank() {
        Err(Error::DimensionMismatch(len, rs.rank()))
    } else {
        Ok(())
    }
}

/// `alpha_j(m) >= -1` for `j = 0, ..., l`.
pub fn in_asymptotic_set(rs: &RootSystem, m: &AsymptoticData) -> bool {
    let minus_one = -Rational64::one();
    m.values.len() == rs.rank()
        && m.values.iter().all(|v| *v >= minus_one)
        && -psi_value(rs, &m.values) >= minus_one
}

pub fn in_alcove(rs: &RootSystem, x: &AlcovePoint) -> bool {
    x.coords.len() == rs.rank()
        && x.coords.iter().all(|c| *c >= Rational64::zero())
        && psi_value(rs, &x.coords) <= Rational64::one()
}

pub fn asymptotic_to_alcove(rs: &RootSystem, m: &AsymptoticData) -> Result<AlcovePoint> {
    check_len(rs, m.values.len())?;
    if !in_asymptotic_set(rs, m) {
        return Err(Error::OutsideAsymptoticSet);
    }
    let s = Rational64::from_integer(rs.coxeter_number);
    Ok(AlcovePoint {
        coords: m.values.iter().map(|v| (v + 1) / s).collect(),
    })
}

pub fn alcove_to_asymptotic(rs: &RootSystem, x: &AlcovePoint) -> Result<AsymptoticData> {
    check_len(rs, x.coords.len())?;
    if !in_alcove(rs, x) {
        return Err(Error::OutsideAlcove);
    }
    let s = Rational64::from_integer(rs.coxeter_number);
    Ok(AsymptoticData {
        values: x.coords.iter().map(|c| c * s - 1).collect(),
    })
}

/// `alpha_j(m) = s(k_j + 1) - 1` for `j = 0, ..., l`.
pub fn dpw_exponents(rs: &RootSystem, m: &AsymptoticData) -> Result<DpwExponents> {
    check_len(rs, m.values.len())?;
    if !in_asymptotic_set(rs, m) {
        return Err(Error::OutsideAsymptoticSet);
    }
    let s = Rational64::from_integer(rs.coxeter_number);
    let alpha0 = -psi_value(rs, &m.values);
    let k = std::iter::once(alpha0)
        .chain(m.values.iter().copied())
        .map(|v| (v + 1) / s - 1)
        .collect();
    Ok(DpwExponents { k })
}

/// Whether `m` is fixed by the diagram involution (trivial except for
/// `A_n`, `D_{odd}` and `E_6`).
pub fn sigma_fixed(rs: &RootSystem, values: &[Rational64]) -> bool {
    let perm = rs.diagram_involution();
    (0..values.len()).all(|j| values[perm[j] - 1] == values[j])
}

#[derive(Debug, Clone)]
pub struct DistinguishedSolution {
    pub lie_type: LieType,
    pub weight_index: usize,
    pub coxeter_number: i64,
    pub asymptotic: AsymptoticData,
    pub alcove: AlcovePoint,
    pub dpw: DpwExponents,
    pub a_matrix: PolyMatrix,
}

/// The solution with `m = -h_0` and its holomorphic data on `V_{lambda_i}`.
pub fn distinguished_solution(rs: &RootSystem, i: usize) -> Result<DistinguishedSolution> {
    let orb = Orbit::new(rs, i)?;
    let m = AsymptoticData::minus_h0(rs.rank());
    if !sigma_fixed(rs, &m.values) {
        return Err(Error::Internal("-h0 is not sigma-fixed".into()));
    }
    Ok(DistinguishedSolution {
        lie_type: rs.lie_type,
        weight_index: i,
        coxeter_number: rs.coxeter_number,
        alcove: asymptotic_to_alcove(rs, &m)?,
        dpw: dpw_exponents(rs, &m)?,
        asymptotic: m,
        a_matrix: minrep::quantum_operator(&orb)?,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct DubrovinForm {
    #[serde(skip)]
    pub a_matrix: PolyMatrix,
    pub coxeter_number: i64,
    pub connection: String,
    pub variable_change: String,
}

/// Metadata of the Dubrovin connection `d + (1/lambda) A(q) dq/q`; the
/// spectral parameter `lambda` stays symbolic.
pub fn dubrovin_form(orb: &Orbit) -> Result<DubrovinForm> {
    let s = orb.root_system().coxeter_number;
    Ok(DubrovinForm {
        a_matrix: minrep::quantum_operator(orb)?,
        coxeter_number: s,
        connection: "omega = (1/lambda) A(q) dq/q".to_string(),
        variable_change: format!("t = {s} z^(1/{s}), q = z"),
    })
}
