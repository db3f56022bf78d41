//! Weyl orbits of minuscule weights.
//!
//! For a minuscule `lambda_i` the orbit `W lambda_i` is in bijection with the
//! minimal coset representatives `W^P`, and the length of `u` equals the height
//! of `lambda_i - u(lambda_i)` in the simple-root basis. Elements are produced by
//! a breadth-first search along the lowering edges `mu -> mu - alpha_j`, which
//! exist exactly when `(mu, alpha_j^vee) = 1`.

use std::collections::{HashMap, VecDeque};

use num_traits::Signed;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rootsys::{Family, LieType, RootSystem, RootVec, Weight};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitElement {
    pub weight: Weight,
    /// Simple reflections in the order they are applied to `lambda_i`.
    pub word: Vec<usize>,
    pub length: usize,
}

/// A lowering edge `source -> source - alpha_label` of the crystal graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrystalEdge {
    pub source: Weight,
    pub label: usize,
    pub target: Weight,
}

#[derive(Debug, Clone)]
pub struct Orbit {
    rs: RootSystem,
    weight_index: usize,
    elements: Vec<OrbitElement>,
    index_of: HashMap<Weight, usize>,
    dim_complex: usize,
}

pub fn orbit(rs: &RootSystem, i: usize) -> Result<Orbit> {
    Orbit::new(rs, i)
}

impl Orbit {
    pub fn new(rs: &RootSystem, i: usize) -> Result<Self> {
        let order: Vec<usize> = (1..=rs.rank()).collect();
        Self::with_simple_order(rs, i, &order)
    }

    /// Same orbit, but the search tries simple roots in `order`. Only the stored
    /// words depend on the order.
    pub fn with_simple_order(rs: &RootSystem, i: usize, order: &[usize]) -> Result<Self> {
        rs.check_index(i)?;
        if !rs.is_minuscule(i) {
            return Err(Error::NotMinuscule(i));
        }
        let start = rs.fundamental_weight(i);
        let mut found: HashMap<Weight, usize> = HashMap::new();
        let mut elements = vec![OrbitElement {
            weight: start.clone(),
            word: Vec::new(),
            length: 0,
        }];
        found.insert(start, 0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(idx) = queue.pop_front() {
            let here = elements[idx].clone();
            for &j in order {
                if here.weight.0[j - 1] != 1 {
                    continue;
                }
                let next = rs.simple_reflect_weight(&here.weight, j);
                if let Some(&seen) = found.get(&next) {
                    if elements[seen].length != here.length + 1 {
                        return Err(Error::Internal(format!(
                            "lowering edge {} -> {} does not raise length by one",
                            here.weight, next
                        )));
                    }
                    continue;
                }
                let mut word = here.word.clone();
                word.push(j);
                found.insert(next.clone(), elements.len());
                elements.push(OrbitElement {
                    weight: next,
                    word,
                    length: here.length + 1,
                });
                queue.push_back(elements.len() - 1);
            }
        }

        elements.sort_by(|a, b| a.length.cmp(&b.length).then_with(|| a.weight.cmp(&b.weight)));
        let index_of = elements
            .iter()
            .enumerate()
            .map(|(k, e)| (e.weight.clone(), k))
            .collect();
        let dim_complex = elements.last().map(|e| e.length).unwrap_or(0);
        Ok(Orbit {
            rs: rs.clone(),
            weight_index: i,
            elements,
            index_of,
            dim_complex,
        })
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn weight_index(&self) -> usize {
        self.weight_index
    }

    pub fn elements(&self) -> &[OrbitElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Complex dimension of `G/P_i`: the largest length in the orbit.
    pub fn dim_complex(&self) -> usize {
        self.dim_complex
    }

    pub fn highest(&self) -> &OrbitElement {
        &self.elements[0]
    }

    pub fn lowest(&self) -> &OrbitElement {
        self.elements.last().expect("orbit is nonempty")
    }

    pub fn index_of(&self, mu: &Weight) -> Option<usize> {
        self.index_of.get(mu).copied()
    }

    pub fn position(&self, mu: &Weight) -> Result<usize> {
        self.index_of(mu).ok_or_else(|| Error::NotInOrbit(mu.clone()))
    }

    pub fn contains(&self, mu: &Weight) -> bool {
        self.index_of.contains_key(mu)
    }

    pub fn element(&self, mu: &Weight) -> Result<&OrbitElement> {
        Ok(&self.elements[self.position(mu)?])
    }

    /// Length of the coset representative of `mu`, computed from scratch as the
    /// height of `lambda_i - mu` in the simple-root basis.
    pub fn length(&self, mu: &Weight) -> Result<usize> {
        if !self.contains(mu) {
            return Err(Error::NotInOrbit(mu.clone()));
        }
        height_deficiency(&self.rs, self.weight_index, mu)
    }

    pub fn crystal_edges(&self) -> Vec<CrystalEdge> {
        let mut out = Vec::new();
        for e in &self.elements {
            for j in 1..=self.rs.rank() {
                if e.weight.0[j - 1] == 1 {
                    out.push(CrystalEdge {
                        source: e.weight.clone(),
                        label: j,
                        target: self.rs.simple_reflect_weight(&e.weight, j),
                    });
                }
            }
        }
        out
    }

    /// `w_0 mu`, realized as `-theta(mu)`.
    pub fn poincare_dual(&self, mu: &Weight) -> Result<Weight> {
        if !self.contains(mu) {
            return Err(Error::NotInOrbit(mu.clone()));
        }
        let dual = -&mu.permuted(&self.rs.diagram_involution());
        if !self.contains(&dual) {
            return Err(Error::Internal(format!("dual of {mu} left the orbit")));
        }
        Ok(dual)
    }
}

/// `sum_j n_j` where `lambda_i - mu = sum_j n_j alpha_j`; fails unless every
/// `n_j` is a nonnegative integer.
pub fn height_deficiency(rs: &RootSystem, i: usize, mu: &Weight) -> Result<usize> {
    let diff = &rs.fundamental_weight(i) - mu;
    let coords = rs.weight_to_root_coords(&diff);
    let mut total = 0i64;
    for c in coords {
        if !c.is_integer() || c.is_negative() {
            return Err(Error::Internal(format!(
                "lambda_{i} - {mu} is not a nonnegative integral root combination"
            )));
        }
        total += c.to_integer();
    }
    Ok(total as usize)
}

/// Applies the reflections of `word` to `alpha`, first letter first.
pub fn apply_word(rs: &RootSystem, word: &[usize], alpha: &RootVec) -> RootVec {
    word.iter()
        .fold(alpha.clone(), |acc, &j| rs.simple_reflect_root(&acc, j))
}

pub fn apply_word_to_weight(rs: &RootSystem, word: &[usize], mu: &Weight) -> Weight {
    word.iter()
        .fold(mu.clone(), |acc, &j| rs.simple_reflect_weight(&acc, j))
}

fn binomial(n: u64, k: u64) -> u64 {
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, t| acc * (n - t) / (t + 1))
}

/// Orbit sizes of the minuscule representations from the Weyl group order
/// quotients; `None` when `lambda_i` is not minuscule.
pub fn expected_orbit_size(t: LieType, i: usize) -> Option<usize> {
    let n = t.rank as u64;
    let i64_ = i as u64;
    let v = match t.family {
        Family::A if (1..=n).contains(&i64_) => binomial(n + 1, i64_),
        Family::B if i64_ == n => 1 << n,
        Family::C if i64_ == 1 => 2 * n,
        Family::D if i64_ == 1 => 2 * n,
        Family::D if i64_ == n - 1 || i64_ == n => 1 << (n - 1),
        Family::E if n == 6 && (i64_ == 1 || i64_ == 6) => 27,
        Family::E if n == 7 && i64_ == 1 => 56,
        _ => return None,
    };
    Some(v as usize)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn orb(t: &str, i: usize) -> Orbit {
        Orbit::new(&RootSystem::build(t.parse().unwrap()).unwrap(), i).unwrap()
    }

    #[test]
    fn a1_orbit() {
        let o = orb("A1", 1);
        assert_eq!(o.len(), 2);
        assert_eq!(o.elements()[0].weight, Weight(vec![1]));
        assert_eq!(o.elements()[1].weight, Weight(vec![-1]));
        assert_eq!(o.elements()[1].length, 1);
        assert_eq!(
            o.crystal_edges(),
            vec![CrystalEdge {
                source: Weight(vec![1]),
                label: 1,
                target: Weight(vec![-1])
            }]
        );
        assert_eq!(o.poincare_dual(&Weight(vec![1])).unwrap(), Weight(vec![-1]));
    }

    #[test]
    fn a2_chain() {
        let o = orb("A2", 1);
        let ws: Vec<_> = o.elements().iter().map(|e| e.weight.clone()).collect();
        assert_eq!(ws, vec![Weight(vec![1, 0]), Weight(vec![-1, 1]), Weight(vec![0, -1])]);
        let labels: Vec<usize> = o.crystal_edges().iter().map(|e| e.label).collect();
        assert_eq!(labels, vec![1, 2]);
        assert_eq!(o.length(&Weight(vec![0, -1])).unwrap(), 2);
        assert_eq!(o.poincare_dual(&ws[0]).unwrap(), ws[2]);
        assert_eq!(o.poincare_dual(&ws[1]).unwrap(), ws[1]);
    }

    #[test]
    fn sizes_and_edges() {
        assert_eq!(orb("A3", 2).len(), 6);
        // Young's lattice in a 2x2 box
        assert_eq!(orb("A3", 2).crystal_edges().len(), 6);
        assert_eq!(orb("E7", 1).len(), 56);
        assert_eq!(orb("E6", 1).length(&orb("E6", 1).lowest().weight).unwrap(), 16);
    }

    #[test]
    fn rejects_bad_input() {
        let rs = RootSystem::build("B3".parse().unwrap()).unwrap();
        assert_eq!(Orbit::new(&rs, 1).unwrap_err(), Error::NotMinuscule(1));
        assert!(Orbit::new(&rs, 4).is_err());
        let o = Orbit::new(&rs, 3).unwrap();
        assert!(o.length(&Weight(vec![0, 0, 0])).is_err());
        assert!(o.poincare_dual(&Weight(vec![5, 0, 0])).is_err());
    }

    #[test]
    fn apply_word_examples() {
        let rs = RootSystem::build("A2".parse().unwrap()).unwrap();
        let a1 = rs.simple_root(1);
        let a2 = rs.simple_root(2);
        assert_eq!(apply_word(&rs, &[], &a1), a1);
        assert_eq!(apply_word(&rs, &[1], &a1), RootVec(vec![-1, 0]));
        assert_eq!(apply_word(&rs, &[1], &a2), RootVec(vec![1, 1]));
    }

    #[test]
    fn words_reproduce_weights() {
        let o = orb("E6", 6);
        let rs = o.root_system();
        let lam = rs.fundamental_weight(6);
        for e in o.elements() {
            assert_eq!(e.word.len(), e.length);
            assert_eq!(apply_word_to_weight(rs, &e.word, &lam), e.weight);
            assert_eq!(o.length(&e.weight).unwrap(), e.length);
        }
    }

    #[test]
    fn e6_length_complementarity() {
        let o = orb("E6", 1);
        assert_eq!(o.len(), 27);
        for e in o.elements() {
            let d = o.poincare_dual(&e.weight).unwrap();
            assert_eq!(o.length(&d).unwrap() + e.length, o.dim_complex());
            assert_eq!(o.poincare_dual(&d).unwrap(), e.weight);
        }
    }

    #[test]
    fn expected_sizes() {
        let t = |s: &str| s.parse::<LieType>().unwrap();
        assert_eq!(expected_orbit_size(t("A5"), 3), Some(20));
        assert_eq!(expected_orbit_size(t("B4"), 4), Some(16));
        assert_eq!(expected_orbit_size(t("D5"), 4), Some(16));
        assert_eq!(expected_orbit_size(t("E7"), 1), Some(56));
        assert_eq!(expected_orbit_size(t("E8"), 1), None);
    }
}
