//! Operator-level checks of the quantum Satake correspondence.
//!
//! Type A compares the derivation action of `A(q)` for `CP^n` on `wedge^k C^{n+1}`
//! with `A(q)` for `Gr(k, n+1)` up to a diagonal change of basis signs. Type D is
//! checked through the dimension identities behind
//! `wedge^half_± QH^*(Q_{2n-2}) = End(QH^*(S_±))`.

use std::collections::VecDeque;

use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;
use thiserror::Error;

use crate::error::{Error, Result};
use crate::minrep;
use crate::poly::PolyMatrix;
use crate::rootsys::{Family, LieType, RootSystem, Weight};
use crate::weylorbit::Orbit;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SignDiagonal {
    pub signs: Vec<i8>,
}

impl SignDiagonal {
    /// `D M D`.
    pub fn conjugate(&self, m: &PolyMatrix) -> PolyMatrix {
        let n = m.dim();
        let mut out = PolyMatrix::zero(n);
        for (r, c, p) in m.nonzero() {
            let s = self.signs[r] * self.signs[c];
            out.set(r, c, if s > 0 { p.clone() } else { -p });
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize)]
pub enum SimilarityFailure {
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("entries at ({row}, {col}) differ by more than a sign")]
    SupportMismatch { row: usize, col: usize },
    #[error("sign constraints are inconsistent around the cycle {cycle:?}")]
    InconsistentCycle { cycle: Vec<usize> },
}

/// Lexicographically ordered `k`-subsets of `0..n`.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            cur.push(x);
            rec(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Derivation action of `m` on `wedge^k`, in the basis `e_S` for ascending
/// `k`-subsets `S` ordered lexicographically.
pub fn wedge_matrix(m: &PolyMatrix, k: usize) -> Result<PolyMatrix> {
    let dim = m.dim();
    if k == 0 || k >= dim {
        return Err(Error::WedgeDegree {
            k,
            max: dim.saturating_sub(1),
        });
    }
    let basis = subsets(dim, k);
    let index = |s: &[usize]| basis.binary_search_by(|b| b.as_slice().cmp(s)).ok();
    let mut out = PolyMatrix::zero(basis.len());
    for (col, set) in basis.iter().enumerate() {
        for (slot, &src) in set.iter().enumerate() {
            for dst in 0..dim {
                let entry = m.get(dst, src);
                if entry.is_zero() || (dst != src && set.contains(&dst)) {
                    continue;
                }
                let mut image = set.clone();
                image[slot] = dst;
                // transpositions needed to sort the single displaced element
                let inversions = image
                    .iter()
                    .enumerate()
                    .filter(|&(p, &x)| (p < slot && x > dst) || (p > slot && x < dst))
                    .count();
                image.sort_unstable();
                let row = index(&image).expect("sorted subset is a basis element");
                let term = if inversions % 2 == 0 { entry.clone() } else { -entry };
                let mut v = out.get(row, col).clone();
                v += &term;
                out.set(row, col, v);
            }
        }
    }
    Ok(out)
}

/// Finds `D = diag(d)`, `d in {±1}^n`, with `D a D = b`.
pub fn sign_similarity(
    a: &PolyMatrix,
    b: &PolyMatrix,
) -> std::result::Result<SignDiagonal, SimilarityFailure> {
    let n = a.dim();
    if n != b.dim() {
        return Err(SimilarityFailure::DimensionMismatch(n, b.dim()));
    }
    let mut adj: Vec<Vec<(usize, i8)>> = vec![Vec::new(); n];
    for r in 0..n {
        for c in 0..n {
            let (x, y) = (a.get(r, c), b.get(r, c));
            if x.is_zero() && y.is_zero() {
                continue;
            }
            let ratio = x
                .sign_ratio(y)
                .ok_or(SimilarityFailure::SupportMismatch { row: r, col: c })?;
            if r == c {
                if ratio < 0 {
                    return Err(SimilarityFailure::InconsistentCycle { cycle: vec![r] });
                }
                continue;
            }
            adj[r].push((c, ratio));
            adj[c].push((r, ratio));
        }
    }

    let mut sign = vec![0i8; n];
    let mut parent: Vec<Option<usize>> = vec![None; n];
    for root in 0..n {
        if sign[root] != 0 {
            continue;
        }
        sign[root] = 1;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &(v, ratio) in &adj[u] {
                if sign[v] == 0 {
                    sign[v] = sign[u] * ratio;
                    parent[v] = Some(u);
                    queue.push_back(v);
                } else if sign[u] * sign[v] != ratio {
                    return Err(SimilarityFailure::InconsistentCycle {
                        cycle: cycle_witness(&parent, u, v),
                    });
                }
            }
        }
    }
    let d = SignDiagonal { signs: sign };
    if d.conjugate(a) != *b {
        return Err(SimilarityFailure::InconsistentCycle { cycle: Vec::new() });
    }
    Ok(d)
}

/// Closes the tree paths from `u` and `v` to their common ancestor with the
/// edge `u - v`.
fn cycle_witness(parent: &[Option<usize>], u: usize, v: usize) -> Vec<usize> {
    let path = |mut x: usize| {
        let mut p = vec![x];
        while let Some(y) = parent[x] {
            p.push(y);
            x = y;
        }
        p
    };
    let pu = path(u);
    let pv = path(v);
    let mut common = 0;
    while common < pu.len().min(pv.len())
        && pu[pu.len() - 1 - common] == pv[pv.len() - 1 - common]
    {
        common += 1;
    }
    let mut cycle: Vec<usize> = pu[..=pu.len() - common].to_vec();
    cycle.extend(pv[..pv.len() - common].iter().rev());
    cycle
}

/// `(eps_r, alpha_j^vee) = delta_{r,j} - delta_{r,j+1}` for `sl_{n+1}`, 0-based `r`.
fn epsilon_weight(n: usize, set: &[usize]) -> Weight {
    let mut m = vec![0i64; n];
    for &r in set {
        if r < n {
            m[r] += 1;
        }
        if r >= 1 {
            m[r - 1] -= 1;
        }
    }
    Weight(m)
}

#[derive(Debug, Clone, Serialize)]
pub struct SatakeReport {
    pub n: usize,
    pub k: usize,
    pub dimension: usize,
    /// Index subsets (0-based) of the wedge basis, listed in the Grassmannian's
    /// canonical order.
    pub basis: Vec<Vec<usize>>,
    pub similarity: std::result::Result<SignDiagonal, SimilarityFailure>,
    /// Similarity against the Grassmannian operator with `q -> (-1)^(k-1) q`.
    pub twisted_similarity: std::result::Result<SignDiagonal, SimilarityFailure>,
}

impl SatakeReport {
    pub fn passed(&self) -> bool {
        self.similarity.is_ok()
    }
}

pub struct SatakeMatrices {
    pub wedge: PolyMatrix,
    pub grassmannian: PolyMatrix,
    pub basis: Vec<Vec<usize>>,
}

/// `wedge^k A_{CP^n}(q)` and `A_{Gr(k,n+1)}(q)`, both in the Grassmannian
/// orbit's canonical basis.
pub fn type_a_matrices(n: usize, k: usize) -> Result<SatakeMatrices> {
    if k == 0 || k > n {
        return Err(Error::WedgeDegree { k, max: n });
    }
    let rs = RootSystem::build(LieType::new(Family::A, n)?)?;
    let line = Orbit::new(&rs, 1)?;
    let by_eps: Vec<usize> = (0..=n)
        .map(|r| line.position(&epsilon_weight(n, &[r])))
        .collect::<Result<_>>()?;
    let a_eps = minrep::quantum_operator(&line)?.permuted(&by_eps);
    let wedge = wedge_matrix(&a_eps, k)?;

    let gr = Orbit::new(&rs, k)?;
    let lex = subsets(n + 1, k);
    let mut perm = vec![usize::MAX; lex.len()];
    for (t, set) in lex.iter().enumerate() {
        perm[gr.position(&epsilon_weight(n, set))?] = t;
    }
    let basis = perm.iter().map(|&t| lex[t].clone()).collect();
    Ok(SatakeMatrices {
        wedge: wedge.permuted(&perm),
        grassmannian: minrep::quantum_operator(&gr)?,
        basis,
    })
}

pub fn satake_type_a(n: usize, k: usize) -> Result<SatakeReport> {
    let m = type_a_matrices(n, k)?;
    let twist = if k % 2 == 1 { 1 } else { -1 };
    let twisted = m.grassmannian.map_entries(|p| p.substitute_scaled_q(twist));
    Ok(SatakeReport {
        n,
        k,
        dimension: m.wedge.dim(),
        similarity: sign_similarity(&m.wedge, &m.grassmannian),
        twisted_similarity: sign_similarity(&m.wedge, &twisted),
        basis: m.basis,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HalfWedgeReport {
    pub n: usize,
    pub quadric_cohomology_dim: usize,
    pub spinor_cohomology_dim: usize,
    /// Terms `dim wedge^{2i}` (the middle one halved when `n` is even).
    pub terms: Vec<String>,
    pub half_wedge_dim: String,
    pub endomorphism_dim: String,
}

impl HalfWedgeReport {
    pub fn passed(&self) -> bool {
        self.half_wedge_dim == self.endomorphism_dim
    }
}

fn binom(n: usize, k: usize) -> BigUint {
    (0..k).fold(BigUint::one(), |acc, t| acc * (n - t) / (t + 1))
}

pub fn half_wedge_dims(n: usize) -> Result<HalfWedgeReport> {
    let rs = RootSystem::build(LieType::new(Family::D, n)?)?;
    let quadric = Orbit::new(&rs, 1)?.len();
    let spinor = Orbit::new(&rs, n)?.len();
    let m = n / 2;
    let mut terms: Vec<BigUint> = Vec::new();
    if n % 2 == 1 {
        for i in 0..=m {
            terms.push(binom(quadric, 2 * i));
        }
    } else {
        for i in 0..m {
            terms.push(binom(quadric, 2 * i));
        }
        terms.push(binom(quadric, 2 * m) / 2u32);
    }
    let total: BigUint = terms.iter().sum();
    let end = BigUint::from(spinor) * BigUint::from(spinor);
    Ok(HalfWedgeReport {
        n,
        quadric_cohomology_dim: quadric,
        spinor_cohomology_dim: spinor,
        terms: terms.iter().map(|t| t.to_string()).collect(),
        half_wedge_dim: total.to_string(),
        endomorphism_dim: end.to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Poly;

    fn cp_operator(n: usize) -> PolyMatrix {
        let rs = RootSystem::build(LieType::new(Family::A, n).unwrap()).unwrap();
        minrep::quantum_operator(&Orbit::new(&rs, 1).unwrap()).unwrap()
    }

    #[test]
    fn wedge_degree_one_is_identity_map() {
        let a = cp_operator(3);
        assert_eq!(wedge_matrix(&a, 1).unwrap(), a);
        assert!(wedge_matrix(&a, 4).is_err());
        assert!(wedge_matrix(&a, 0).is_err());
    }

    #[test]
    fn wedge_entries_for_gr24() {
        let w = wedge_matrix(&cp_operator(3), 2).unwrap();
        assert_eq!(w.dim(), 6);
        let allowed = [Poly::one(), -&Poly::one(), Poly::q(), -&Poly::q()];
        for (_, _, p) in w.nonzero() {
            assert!(allowed.contains(p), "{p}");
        }
    }

    #[test]
    fn wedge_is_a_lie_homomorphism() {
        let rs = RootSystem::build(LieType::new(Family::A, 3).unwrap()).unwrap();
        let o = Orbit::new(&rs, 1).unwrap();
        for j in 1..=3 {
            let e = minrep::raising_matrix(&o, j).unwrap();
            let f = minrep::lowering_matrix(&o, j).unwrap();
            let lhs = wedge_matrix(&e.commutator(&f), 2).unwrap();
            let rhs = wedge_matrix(&e, 2).unwrap().commutator(&wedge_matrix(&f, 2).unwrap());
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn similarity_identity() {
        let a = cp_operator(4);
        assert_eq!(sign_similarity(&a, &a).unwrap().signs, vec![1; 5]);
    }

    #[test]
    fn similarity_recovers_planted_signs() {
        let a = cp_operator(4);
        let d = SignDiagonal {
            signs: vec![1, -1, -1, 1, -1],
        };
        let b = d.conjugate(&a);
        let found = sign_similarity(&a, &b).unwrap();
        assert_eq!(found.conjugate(&a), b);
    }

    #[test]
    fn similarity_failures() {
        let a = cp_operator(2);
        // flip one entry of the 3-cycle
        let mut b = a.clone();
        b.set(1, 0, -a.get(1, 0));
        match sign_similarity(&a, &b) {
            Err(SimilarityFailure::InconsistentCycle { cycle }) => {
                let mut c = cycle.clone();
                c.sort_unstable();
                assert_eq!(c, vec![0, 1, 2]);
            }
            other => panic!("{other:?}"),
        }
        let mut c = a.clone();
        c.set(1, 0, Poly::q());
        assert_eq!(
            sign_similarity(&a, &c),
            Err(SimilarityFailure::SupportMismatch { row: 1, col: 0 })
        );
        assert!(matches!(
            sign_similarity(&a, &cp_operator(3)),
            Err(SimilarityFailure::DimensionMismatch(3, 4))
        ));
    }

    #[test]
    fn half_wedge_examples() {
        let r = half_wedge_dims(3).unwrap();
        assert_eq!(r.terms, vec!["1", "15"]);
        assert_eq!(r.half_wedge_dim, "16");
        assert!(r.passed());
        let r = half_wedge_dims(4).unwrap();
        assert_eq!(r.terms, vec!["1", "28", "35"]);
        assert_eq!(r.endomorphism_dim, "64");
        assert!(r.passed());
        assert_eq!(half_wedge_dims(5).unwrap().half_wedge_dim, "256");
        assert!(half_wedge_dims(2).is_err());
    }
}
