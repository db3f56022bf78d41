//! Integer polynomials in one formal variable `q` and square matrices over them.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Sparse polynomial in `q` with arbitrary-precision integer coefficients.
/// No zero coefficients are stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    terms: BTreeMap<u32, BigInt>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Poly::monomial(c, 0)
    }

    /// `q`.
    pub fn q() -> Self {
        Poly::monomial(1, 1)
    }

    pub fn monomial(c: impl Into<BigInt>, exp: u32) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Poly { terms }
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (u32, C)>,
        C: Into<BigInt>,
    {
        let mut p = Poly::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().copied()
    }

    pub fn coeff(&self, exp: u32) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    /// `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn add_term(&mut self, exp: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn scale(&self, k: &BigInt) -> Poly {
        if k.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect(),
        }
    }

    /// Exact division of every coefficient by `k`; `None` if some coefficient
    /// is not divisible.
    pub fn div_exact(&self, k: &BigInt) -> Option<Poly> {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            if !(c % k).is_zero() {
                return None;
            }
            terms.insert(*e, c / k);
        }
        Some(Poly { terms })
    }

    /// `p(c q)`.
    pub fn substitute_scaled_q(&self, c: i64) -> Poly {
        let c = BigInt::from(c);
        Poly::from_terms(
            self.terms
                .iter()
                .map(|(e, k)| (*e, k * num_traits::pow(c.clone(), *e as usize))),
        )
    }

    pub fn eval(&self, q: &BigInt) -> BigInt {
        self.terms
            .iter()
            .map(|(e, c)| c * num_traits::pow(q.clone(), *e as usize))
            .sum()
    }

    /// `Some(+1)` if `self == other`, `Some(-1)` if `self == -other`.
    pub fn sign_ratio(&self, other: &Poly) -> Option<i8> {
        if self == other {
            Some(1)
        } else if *self == -other {
            Some(-1)
        } else {
            None
        }
    }

    pub fn is_monomial_with_unit_coeff(&self) -> bool {
        self.terms.len() == 1 && self.terms.values().all(|c| c.abs().is_one())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            match (*e, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{a}q")?,
                (_, true) => write!(f, "q^{e}")?,
                (_, false) => write!(f, "{a}q^{e}")?,
            }
        }
        Ok(())
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c);
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

/// Dense square matrix of [`Poly`], row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    n: usize,
    entries: Vec<Poly>,
}

impl PolyMatrix {
    pub fn zero(n: usize) -> Self {
        PolyMatrix {
            n,
            entries: vec![Poly::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for k in 0..n {
            m.set(k, k, Poly::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Poly>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        PolyMatrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&c| Poly::constant(c)).collect())
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, row: usize, col: usize) -> &Poly {
        &self.entries[row * self.n + col]
    }

    pub fn set(&mut self, row: usize, col: usize, p: Poly) {
        self.entries[row * self.n + col] = p;
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Poly]> {
        self.entries.chunks(self.n.max(1))
    }

    /// Nonzero entries as `(row, col, entry)`, row-major.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, usize, &Poly)> {
        let n = self.n;
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, p)| !p.is_zero())
            .map(move |(k, p)| (k / n, k % n, p))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Poly::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zero(self.n);
        for (r, c, p) in self.nonzero() {
            t.set(c, r, p.clone());
        }
        t
    }

    pub fn scale(&self, p: &Poly) -> Self {
        PolyMatrix {
            n: self.n,
            entries: self.entries.iter().map(|e| e * p).collect(),
        }
    }

    pub fn map_entries(&self, f: impl Fn(&Poly) -> Poly) -> Self {
        PolyMatrix {
            n: self.n,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn trace(&self) -> Poly {
        let mut t = Poly::zero();
        for k in 0..self.n {
            t += self.get(k, k);
        }
        t
    }

    /// `self * other - other * self`.
    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    /// `P^T M P` for the permutation with `perm[new] = old`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let mut out = Self::zero(self.n);
        for (r_new, &r_old) in perm.iter().enumerate() {
            for (c_new, &c_old) in perm.iter().enumerate() {
                out.set(r_new, c_new, self.get(r_old, c_old).clone());
            }
        }
        out
    }

    /// Coefficients `c_0, ..., c_n` of `det(x I - self) = sum_k c_k x^k`, by
    /// the Faddeev-LeVerrier recursion with exact integer division.
    pub fn charpoly(&self) -> Vec<Poly> {
        let n = self.n;
        let mut coeffs = vec![Poly::zero(); n + 1];
        coeffs[n] = Poly::one();
        let mut m = Self::zero(n);
        for k in 1..=n {
            let mut next = self * &m;
            for d in 0..n {
                let v = next.get(d, d) + &coeffs[n - k + 1];
                next.set(d, d, v);
            }
            let am = self * &next;
            let c = (-&am.trace())
                .div_exact(&BigInt::from(k as i64))
                .expect("characteristic polynomial has integer coefficients");
            coeffs[n - k] = c;
            m = next;
        }
        coeffs
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(|p| p.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

impl Add for &PolyMatrix {
    type Output = PolyMatrix;
    fn add(self, rhs: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.n, rhs.n);
        PolyMatrix {
            n: self.n,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &PolyMatrix {
    type Output = PolyMatrix;
    fn sub(self, rhs: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.n, rhs.n);
        PolyMatrix {
            n: self.n,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Mul for &PolyMatrix {
    type Output = PolyMatrix;
    fn mul(self, rhs: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.n, rhs.n);
        let n = self.n;
        let mut out = PolyMatrix::zero(n);
        // Row-sparse product: generators here have very few nonzero entries.
        let rhs_rows: Vec<Vec<(usize, &Poly)>> = (0..n)
            .map(|k| {
                (0..n)
                    .filter_map(|c| {
                        let p = rhs.get(k, c);
                        (!p.is_zero()).then_some((c, p))
                    })
                    .collect()
            })
            .collect();
        for r in 0..n {
            for k in 0..n {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for &(c, b) in &rhs_rows[k] {
                    out.entries[r * n + c] += &(a * b);
                }
            }
        }
        out
    }
}
