//! Simple root systems of types A through G.
//!
//! Roots live in simple-root coordinates ([`RootVec`]), weights in coroot-pairing
//! coordinates ([`Weight`]). The Cartan matrix is the only bridge between the
//! two. The invariant form is normalized so that long roots have squared
//! length 2; only normalization-independent integers are exposed.
//!
//! Node labels are 1-based. Types A–D, E6, E8, F4 and G2 follow Bourbaki. E7 is
//! labelled along its long arm, so the chain is 1-2-3-4-5-6 with node 7 attached
//! to node 4 and the minuscule node is 1.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E,
        Family::F,
        Family::G,
    ];

    /// Smallest rank accepted for this family.
    pub fn min_rank(self) -> usize {
        match self {
            Family::A => 1,
            Family::B | Family::C => 2,
            Family::D => 3,
            Family::E => 6,
            Family::F => 4,
            Family::G => 2,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        };
        write!(f, "{c}")
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "E" => Ok(Family::E),
            "F" => Ok(Family::F),
            "G" => Ok(Family::G),
            _ => Err(Error::UnknownType(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LieType {
    pub family: Family,
    pub rank: usize,
}

impl LieType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(LieType { family, rank })
        } else {
            Err(Error::InvalidRank { family, rank })
        }
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// Parses `E6`, `e_6`, `A3` and similar.
impl FromStr for LieType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let head = chars.next().ok_or_else(|| Error::UnknownType(s.to_string()))?;
        let family: Family = head.to_string().parse()?;
        let rest = chars.as_str().trim_start_matches('_');
        let rank = rest
            .parse::<usize>()
            .map_err(|_| Error::UnknownType(s.to_string()))?;
        LieType::new(family, rank)
    }
}

/// A root in simple-root coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RootVec(pub Vec<i64>);

impl RootVec {
    pub fn simple(rank: usize, j: usize) -> Self {
        let mut c = vec![0; rank];
        c[j - 1] = 1;
        RootVec(c)
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }
}

impl Neg for &RootVec {
    type Output = RootVec;
    fn neg(self) -> RootVec {
        RootVec(self.0.iter().map(|c| -c).collect())
    }
}

impl Add for &RootVec {
    type Output = RootVec;
    fn add(self, rhs: &RootVec) -> RootVec {
        RootVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

/// A weight given by its pairings `(mu, alpha_j^vee)` with the simple coroots.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut m = vec![0; rank];
        m[i - 1] = 1;
        Weight(m)
    }

    pub fn pairings(&self) -> &[i64] {
        &self.0
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&m| m >= 0)
    }

    pub fn scaled(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|m| k * m).collect())
    }

    /// Relabels nodes by a permutation given as `perm[j-1] = image of j`.
    pub fn permuted(&self, perm: &[usize]) -> Weight {
        let mut out = vec![0; self.0.len()];
        for (j, &m) in self.0.iter().enumerate() {
            out[perm[j] - 1] = m;
        }
        Weight(out)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, m) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, ")")
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|m| -m).collect())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanData {
    /// `cartan[k][j] = (alpha_j, alpha_k^vee)`.
    pub cartan: Vec<Vec<i64>>,
    /// `d_j = (alpha_j, alpha_j) / 2`; long roots have `d = 1`.
    pub symmetrizers: Vec<Rational64>,
}

impl CartanData {
    fn from_gram(gram: &[Vec<Rational64>]) -> Self {
        let l = gram.len();
        let symmetrizers: Vec<Rational64> = (0..l).map(|j| gram[j][j] / 2).collect();
        let cartan = (0..l)
            .map(|k| {
                (0..l)
                    .map(|j| {
                        let a = gram[j][k] / symmetrizers[k];
                        assert!(a.is_integer(), "non-integral Cartan entry");
                        a.to_integer()
                    })
                    .collect()
            })
            .collect();
        CartanData {
            cartan,
            symmetrizers,
        }
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    /// `(alpha_j, alpha_k)` recovered from the symmetrization.
    pub fn inner(&self, j: usize, k: usize) -> Rational64 {
        self.symmetrizers[k] * Rational64::from_integer(self.cartan[k][j])
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    pub lie_type: LieType,
    pub cartan_data: CartanData,
    pub positive_roots: Vec<RootVec>,
    pub highest_root: RootVec,
    pub coxeter_number: i64,
}

fn gram_matrix(t: LieType) -> Vec<Vec<Rational64>> {
    let l = t.rank;
    let r = |n: i64, d: i64| Rational64::new(n, d);
    let mut g = vec![vec![Rational64::zero(); l]; l];
    let mut norm = vec![r(2, 1); l];
    // (node, node, inner product), 1-based
    let mut bonds: Vec<(usize, usize, Rational64)> = Vec::new();
    let chain = |bonds: &mut Vec<(usize, usize, Rational64)>, from: usize, to: usize| {
        for j in from..to {
            bonds.push((j, j + 1, r(-1, 1)));
        }
    };
    match t.family {
        Family::A => chain(&mut bonds, 1, l),
        Family::B => {
            chain(&mut bonds, 1, l);
            norm[l - 1] = r(1, 1);
        }
        Family::C => {
            for j in 1..l - 1 {
                bonds.push((j, j + 1, r(-1, 2)));
            }
            bonds.push((l - 1, l, r(-1, 1)));
            for nj in norm.iter_mut().take(l - 1) {
                *nj = r(1, 1);
            }
        }
        Family::D => {
            chain(&mut bonds, 1, l - 1);
            bonds.push((l - 2, l, r(-1, 1)));
        }
        Family::E if l == 7 => {
            chain(&mut bonds, 1, 6);
            bonds.push((4, 7, r(-1, 1)));
        }
        Family::E => {
            bonds.push((1, 3, r(-1, 1)));
            chain(&mut bonds, 3, l);
            bonds.push((2, 4, r(-1, 1)));
        }
        Family::F => {
            bonds.push((1, 2, r(-1, 1)));
            bonds.push((2, 3, r(-1, 1)));
            bonds.push((3, 4, r(-1, 2)));
            norm[2] = r(1, 1);
            norm[3] = r(1, 1);
        }
        Family::G => {
            bonds.push((1, 2, r(-1, 1)));
            norm[0] = r(2, 3);
        }
    }
    for (j, n) in norm.into_iter().enumerate() {
        g[j][j] = n;
    }
    for (a, b, v) in bonds {
        g[a - 1][b - 1] = v;
        g[b - 1][a - 1] = v;
    }
    g
}

impl RootSystem {
    pub fn build(t: LieType) -> Result<Self> {
        let t = LieType::new(t.family, t.rank)?;
        let cartan_data = CartanData::from_gram(&gram_matrix(t));
        let l = t.rank;

        let mut positive_roots: Vec<RootVec> = (1..=l).map(|j| RootVec::simple(l, j)).collect();
        let mut seen: HashSet<RootVec> = positive_roots.iter().cloned().collect();
        let mut queue: VecDeque<usize> = (0..l).collect();
        while let Some(idx) = queue.pop_front() {
            let beta = positive_roots[idx].clone();
            for j in 1..=l {
                if beta == RootVec::simple(l, j) {
                    continue;
                }
                let gamma = simple_reflection_root(&cartan_data, &beta, j);
                if !gamma.is_positive() {
                    return Err(Error::Internal(format!(
                        "s_{j} sent positive root {beta:?} to {gamma:?}"
                    )));
                }
                if seen.insert(gamma.clone()) {
                    positive_roots.push(gamma);
                    queue.push_back(positive_roots.len() - 1);
                }
            }
        }
        positive_roots.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| b.0.cmp(&a.0)));

        let max_height = positive_roots.iter().map(RootVec::height).max().unwrap_or(0);
        let tops: Vec<&RootVec> = positive_roots
            .iter()
            .filter(|r| r.height() == max_height)
            .collect();
        if tops.len() != 1 {
            return Err(Error::Internal("highest root is not unique".into()));
        }
        let highest_root = tops[0].clone();

        Ok(RootSystem {
            lie_type: t,
            cartan_data,
            positive_roots,
            coxeter_number: 1 + highest_root.height(),
            highest_root,
        })
    }

    pub fn rank(&self) -> usize {
        self.lie_type.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan_data.cartan
    }

    fn check_node(&self, j: usize) -> Result<()> {
        if j == 0 || j > self.rank() {
            Err(Error::NodeOutOfRange {
                index: j,
                rank: self.rank(),
            })
        } else {
            Ok(())
        }
    }

    pub fn simple_root(&self, j: usize) -> RootVec {
        RootVec::simple(self.rank(), j)
    }

    pub fn fundamental_weight(&self, i: usize) -> Weight {
        Weight::fundamental(self.rank(), i)
    }

    pub fn is_root(&self, alpha: &RootVec) -> bool {
        if alpha.0.len() != self.rank() {
            return false;
        }
        if alpha.is_positive() {
            self.positive_roots.contains(alpha)
        } else {
            self.positive_roots.contains(&-alpha)
        }
    }

    /// Converts a root to coroot-pairing coordinates: `m_k = sum_j a_kj c_j`.
    pub fn root_to_weight(&self, alpha: &RootVec) -> Weight {
        let a = self.cartan();
        Weight(
            (0..self.rank())
                .map(|k| (0..self.rank()).map(|j| a[k][j] * alpha.0[j]).sum())
                .collect(),
        )
    }

    /// Solves `mu = sum_j c_j alpha_j` for rational `c`.
    pub fn weight_to_root_coords(&self, mu: &Weight) -> Vec<Rational64> {
        let l = self.rank();
        let a = self.cartan();
        let mut m: Vec<Vec<Rational64>> = (0..l)
            .map(|k| {
                let mut row: Vec<Rational64> =
                    (0..l).map(|j| Rational64::from_integer(a[k][j])).collect();
                row.push(Rational64::from_integer(mu.0[k]));
                row
            })
            .collect();
        for col in 0..l {
            let pivot = (col..l)
                .find(|&r| !m[r][col].is_zero())
                .expect("Cartan matrix is nonsingular");
            m.swap(col, pivot);
            let p = m[col][col];
            for x in m[col].iter_mut() {
                *x /= p;
            }
            for r in 0..l {
                if r != col && !m[r][col].is_zero() {
                    let f = m[r][col];
                    for c in col..=l {
                        let v = m[col][c];
                        m[r][c] -= f * v;
                    }
                }
            }
        }
        m.into_iter().map(|row| row[l]).collect()
    }

    /// `(alpha, alpha) / 2`.
    pub fn half_norm(&self, alpha: &RootVec) -> Rational64 {
        let l = self.rank();
        let mut acc = Rational64::zero();
        for j in 0..l {
            if alpha.0[j] == 0 {
                continue;
            }
            for k in 0..l {
                acc += Rational64::from_integer(alpha.0[j] * alpha.0[k]) * self.cartan_data.inner(j, k);
            }
        }
        acc / 2
    }

    fn inner_roots(&self, beta: &RootVec, alpha: &RootVec) -> Rational64 {
        let l = self.rank();
        let mut acc = Rational64::zero();
        for j in 0..l {
            for k in 0..l {
                acc += Rational64::from_integer(beta.0[j] * alpha.0[k]) * self.cartan_data.inner(j, k);
            }
        }
        acc
    }

    /// `(mu, alpha^vee)`.
    pub fn pair(&self, mu: &Weight, alpha: &RootVec) -> Result<i64> {
        if !self.is_root(alpha) {
            return Err(Error::NotARoot(alpha.clone()));
        }
        let d = &self.cartan_data.symmetrizers;
        let num: Rational64 = (0..self.rank())
            .map(|j| Rational64::from_integer(alpha.0[j] * mu.0[j]) * d[j])
            .sum();
        let v = num / self.half_norm(alpha);
        assert!(v.is_integer(), "coroot pairing is not integral");
        Ok(v.to_integer())
    }

    /// `(beta, alpha^vee)` for roots `beta`, `alpha`.
    pub fn pair_roots(&self, beta: &RootVec, alpha: &RootVec) -> Result<i64> {
        if !self.is_root(alpha) {
            return Err(Error::NotARoot(alpha.clone()));
        }
        let v = self.inner_roots(beta, alpha) / self.half_norm(alpha);
        assert!(v.is_integer(), "coroot pairing is not integral");
        Ok(v.to_integer())
    }

    /// `s_alpha(mu) = mu - (mu, alpha^vee) alpha`.
    pub fn reflect(&self, mu: &Weight, alpha: &RootVec) -> Result<Weight> {
        let p = self.pair(mu, alpha)?;
        Ok(mu - &self.root_to_weight(alpha).scaled(p))
    }

    pub fn reflect_root(&self, beta: &RootVec, alpha: &RootVec) -> Result<RootVec> {
        let p = self.pair_roots(beta, alpha)?;
        Ok(RootVec(
            beta.0.iter().zip(&alpha.0).map(|(b, a)| b - p * a).collect(),
        ))
    }

    pub fn simple_reflect_root(&self, beta: &RootVec, j: usize) -> RootVec {
        simple_reflection_root(&self.cartan_data, beta, j)
    }

    pub fn simple_reflect_weight(&self, mu: &Weight, j: usize) -> Weight {
        let m = mu.0[j - 1];
        let a = self.cartan();
        Weight(
            (0..self.rank())
                .map(|k| mu.0[k] - m * a[k][j - 1])
                .collect(),
        )
    }

    /// Indices `i` of the minuscule fundamental weights.
    pub fn minuscule_weights(&self) -> Vec<usize> {
        (1..=self.rank())
            .filter(|&i| {
                let lam = self.fundamental_weight(i);
                self.positive_roots
                    .iter()
                    .map(|a| self.pair(&lam, a).expect("positive root"))
                    .max()
                    == Some(1)
            })
            .collect()
    }

    pub fn is_minuscule(&self, i: usize) -> bool {
        self.check_node(i).is_ok() && self.minuscule_weights().contains(&i)
    }

    /// The diagram symmetry `theta` with `-w_0 = theta` on weights, as
    /// `perm[j-1] = theta(j)`.
    pub fn diagram_involution(&self) -> Vec<usize> {
        let l = self.rank();
        let mut perm: Vec<usize> = (1..=l).collect();
        match self.lie_type.family {
            Family::A => {
                for (j, p) in perm.iter_mut().enumerate() {
                    *p = l - j;
                }
            }
            Family::D if l % 2 == 1 => perm.swap(l - 2, l - 1),
            Family::E if l == 6 => perm = vec![6, 2, 5, 4, 3, 1],
            _ => {}
        }
        perm
    }

    /// Positive roots outside the Levi of the parabolic attached to node `i`:
    /// those whose `alpha_i` coefficient is positive.
    pub fn roots_outside_levi(&self, i: usize) -> Vec<RootVec> {
        self.positive_roots
            .iter()
            .filter(|a| a.0[i - 1] > 0)
            .cloned()
            .collect()
    }

    /// `(psi, alpha_j^vee)` as a weight.
    pub fn highest_root_weight(&self) -> Weight {
        self.root_to_weight(&self.highest_root)
    }

    pub(crate) fn check_index(&self, j: usize) -> Result<()> {
        self.check_node(j)
    }
}

fn simple_reflection_root(cd: &CartanData, beta: &RootVec, j: usize) -> RootVec {
    let row = &cd.cartan[j - 1];
    let p: i64 = row.iter().zip(&beta.0).map(|(a, c)| a * c).sum();
    let mut out = beta.0.clone();
    out[j - 1] -= p;
    RootVec(out)
}

/// Number of positive roots, from the classical closed forms.
pub fn expected_positive_root_count(t: LieType) -> usize {
    let n = t.rank;
    match t.family {
        Family::A => n * (n + 1) / 2,
        Family::B | Family::C => n * n,
        Family::D => n * (n - 1),
        Family::E => match n {
            6 => 36,
            7 => 63,
            _ => 120,
        },
        Family::F => 24,
        Family::G => 6,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn rs(s: &str) -> RootSystem {
        RootSystem::build(s.parse().unwrap()).unwrap()
    }

    fn all_types() -> Vec<LieType> {
        let mut v = Vec::new();
        for n in 1..=8 {
            v.push(LieType::new(Family::A, n).unwrap());
        }
        for n in 2..=8 {
            v.push(LieType::new(Family::B, n).unwrap());
            v.push(LieType::new(Family::C, n).unwrap());
        }
        for n in 3..=8 {
            v.push(LieType::new(Family::D, n).unwrap());
        }
        for n in 6..=8 {
            v.push(LieType::new(Family::E, n).unwrap());
        }
        v.push(LieType::new(Family::F, 4).unwrap());
        v.push(LieType::new(Family::G, 2).unwrap());
        v
    }

    #[test]
    fn rank_constraints() {
        assert!(LieType::new(Family::B, 1).is_err());
        assert!(LieType::new(Family::D, 2).is_err());
        assert!(LieType::new(Family::E, 5).is_err());
        assert!(LieType::new(Family::E, 9).is_err());
        assert!(LieType::new(Family::F, 3).is_err());
        assert!(LieType::new(Family::G, 3).is_err());
        assert!(LieType::new(Family::A, 0).is_err());
        assert_eq!("e_7".parse::<LieType>().unwrap(), LieType::new(Family::E, 7).unwrap());
        assert!("X3".parse::<LieType>().is_err());
    }

    #[test]
    fn small_cases() {
        let a1 = rs("A1");
        assert_eq!(a1.positive_roots, vec![RootVec(vec![1])]);
        assert_eq!(a1.highest_root, RootVec(vec![1]));
        assert_eq!(a1.coxeter_number, 2);

        let a2 = rs("A2");
        assert_eq!(a2.positive_roots.len(), 3);
        assert_eq!(a2.highest_root, RootVec(vec![1, 1]));
        assert_eq!(a2.coxeter_number, 3);

        let e7 = rs("E7");
        assert_eq!(e7.coxeter_number, 18);
        assert_eq!(e7.positive_roots.len(), 63);
    }

    #[test]
    fn root_counts_and_coxeter_numbers() {
        for t in all_types() {
            let r = RootSystem::build(t).unwrap();
            assert_eq!(r.positive_roots.len(), expected_positive_root_count(t), "{t}");
            assert_eq!(
                2 * r.positive_roots.len() as i64,
                t.rank as i64 * r.coxeter_number,
                "{t}"
            );
        }
    }

    #[test]
    fn cartan_structure() {
        for t in all_types() {
            let r = RootSystem::build(t).unwrap();
            let a = r.cartan();
            let d = &r.cartan_data.symmetrizers;
            for k in 0..t.rank {
                assert_eq!(a[k][k], 2);
                for j in 0..t.rank {
                    assert!([2, 0, -1, -2, -3].contains(&a[k][j]));
                    if j != k {
                        assert!(a[k][j] <= 0);
                    }
                    assert_eq!(
                        d[k] * Rational64::from_integer(a[k][j]),
                        d[j] * Rational64::from_integer(a[j][k])
                    );
                }
            }
            assert!(d.iter().any(|x| *x == Rational64::one()));
        }
    }

    #[test]
    fn highest_root_is_dominant_and_roots_closed() {
        for t in all_types() {
            let r = RootSystem::build(t).unwrap();
            assert!(r.highest_root_weight().is_dominant(), "{t}");
            for beta in &r.positive_roots {
                for j in 1..=t.rank {
                    let g = r.simple_reflect_root(beta, j);
                    assert!(r.is_root(&g), "{t}: s_{j}{beta:?}");
                }
            }
        }
    }

    #[test]
    fn pairing_examples() {
        let a2 = rs("A2");
        for i in 1..=2 {
            for j in 1..=2 {
                let v = a2.pair(&a2.fundamental_weight(i), &a2.simple_root(j)).unwrap();
                assert_eq!(v, (i == j) as i64);
            }
        }
        assert_eq!(a2.pair(&a2.fundamental_weight(1), &a2.highest_root).unwrap(), 1);
        let mu = a2.fundamental_weight(1);
        let mu = a2.reflect(&mu, &a2.simple_root(1)).unwrap();
        assert_eq!(mu, Weight(vec![-1, 1]));
        let mu = a2.reflect(&mu, &a2.simple_root(2)).unwrap();
        assert_eq!(mu, Weight(vec![0, -1]));
        assert_eq!(a2.pair(&mu, &a2.simple_root(1)).unwrap(), 0);
        assert_eq!(a2.pair(&mu, &a2.simple_root(2)).unwrap(), -1);
        assert!(a2.pair(&mu, &RootVec(vec![2, 1])).is_err());
    }

    #[test]
    fn pairing_nonsimply_laced() {
        // B2: alpha_2 short. psi = alpha_1 + 2 alpha_2 is long, so psi^vee = alpha_1^vee + alpha_2^vee.
        let b2 = rs("B2");
        assert_eq!(b2.highest_root, RootVec(vec![1, 2]));
        assert_eq!(b2.pair(&Weight(vec![1, 0]), &b2.highest_root).unwrap(), 1);
        assert_eq!(b2.pair(&Weight(vec![0, 1]), &b2.highest_root).unwrap(), 1);
        // alpha_1 + alpha_2 is short: coroot = 2 alpha_1^vee + alpha_2^vee
        assert_eq!(b2.pair(&Weight(vec![0, 1]), &RootVec(vec![1, 1])).unwrap(), 1);
        assert_eq!(b2.pair(&Weight(vec![1, 0]), &RootVec(vec![1, 1])).unwrap(), 2);
        let g2 = rs("G2");
        assert_eq!(g2.cartan()[0][1], -3);
        assert_eq!(g2.cartan()[1][0], -1);
        assert_eq!(g2.highest_root, RootVec(vec![3, 2]));
    }

    #[test]
    fn reflection_examples() {
        let a2 = rs("A2");
        let l1 = a2.fundamental_weight(1);
        assert_eq!(a2.reflect(&l1, &a2.simple_root(2)).unwrap(), l1);
        assert_eq!(a2.reflect(&l1, &a2.simple_root(1)).unwrap(), Weight(vec![-1, 1]));
    }

    #[test]
    fn minuscule_tables() {
        assert_eq!(rs("A4").minuscule_weights(), vec![1, 2, 3, 4]);
        assert_eq!(rs("B4").minuscule_weights(), vec![4]);
        assert_eq!(rs("C4").minuscule_weights(), vec![1]);
        assert_eq!(rs("D5").minuscule_weights(), vec![1, 4, 5]);
        assert_eq!(rs("E6").minuscule_weights(), vec![1, 6]);
        assert_eq!(rs("E7").minuscule_weights(), vec![1]);
        assert!(rs("E8").minuscule_weights().is_empty());
        assert!(rs("F4").minuscule_weights().is_empty());
        assert!(rs("G2").minuscule_weights().is_empty());
    }

    #[test]
    fn diagram_involutions() {
        assert_eq!(rs("A3").diagram_involution(), vec![3, 2, 1]);
        assert_eq!(rs("D4").diagram_involution(), vec![1, 2, 3, 4]);
        assert_eq!(rs("D5").diagram_involution(), vec![1, 2, 3, 5, 4]);
        assert_eq!(rs("B3").diagram_involution(), vec![1, 2, 3]);
        assert_eq!(rs("E7").diagram_involution(), (1..=7).collect::<Vec<_>>());
        for t in all_types() {
            let r = RootSystem::build(t).unwrap();
            let p = r.diagram_involution();
            let a = r.cartan();
            for k in 0..t.rank {
                assert_eq!(p[p[k] - 1], k + 1);
                for j in 0..t.rank {
                    assert_eq!(a[p[k] - 1][p[j] - 1], a[k][j], "{t}");
                }
            }
        }
    }

    #[test]
    fn root_weight_round_trip() {
        for t in all_types() {
            let r = RootSystem::build(t).unwrap();
            for alpha in &r.positive_roots {
                let c = r.weight_to_root_coords(&r.root_to_weight(alpha));
                let back: Vec<i64> = c.iter().map(|x| x.to_integer()).collect();
                assert!(c.iter().all(|x| x.is_integer()));
                assert_eq!(&back, &alpha.0);
            }
        }
    }
}
