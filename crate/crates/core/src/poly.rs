//! Sparse multivariate polynomials with exact integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::descent::{revlex_cmp, WeakComposition};

/// A polynomial in `x_1, …, x_n` keyed by exponent vector.
///
/// Every stored key has length `nvars` and no coefficient is zero.
/// Comparison pads both sides with trailing zero exponents, so polynomials
/// with different variable counts compare by their terms alone.
#[derive(Clone, Default)]
pub struct IntPolynomial {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, i64>,
}

impl IntPolynomial {
    pub fn zero(nvars: usize) -> IntPolynomial {
        IntPolynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> IntPolynomial {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], 1);
        p
    }

    /// `coeff · x^exps`, in `exps.len()` variables.
    pub fn monomial(exps: Vec<u32>, coeff: i64) -> IntPolynomial {
        let mut p = Self::zero(exps.len());
        p.add_term(exps, coeff);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of `x^exps` (zero-padded).
    pub fn coeff(&self, exps: &[u32]) -> i64 {
        if exps.iter().skip(self.nvars).any(|&e| e != 0) {
            return 0;
        }
        let key: Vec<u32> = (0..self.nvars).map(|k| exps.get(k).copied().unwrap_or(0)).collect();
        self.terms.get(&key).copied().unwrap_or(0)
    }

    /// Adds `coeff · x^exps`, widening the variable count if needed.
    pub fn add_term(&mut self, mut exps: Vec<u32>, coeff: i64) {
        if coeff == 0 {
            return;
        }
        if exps.len() > self.nvars {
            self.widen(exps.len());
        }
        exps.resize(self.nvars, 0);
        let entry = self.terms.entry(exps);
        match entry {
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if *o.get() == 0 {
                    o.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
        }
    }

    /// Re-keys every term to `n ≥ nvars` variables.
    pub fn widen(&mut self, n: usize) {
        if n <= self.nvars {
            return;
        }
        let old = std::mem::take(&mut self.terms);
        self.terms = old
            .into_iter()
            .map(|(mut k, c)| {
                k.resize(n, 0);
                (k, c)
            })
            .collect();
        self.nvars = n;
    }

    /// Terms in descending reverse-lexicographic order of exponents.
    pub fn terms(&self) -> Vec<(&[u32], i64)> {
        let mut v: Vec<_> = self.terms.iter().map(|(k, &c)| (k.as_slice(), c)).collect();
        v.sort_by(|a, b| revlex_cmp(b.0, a.0));
        v
    }

    /// Iterates the terms in storage order.
    pub fn iter(&self) -> impl Iterator<Item = (&[u32], i64)> {
        self.terms.iter().map(|(k, &c)| (k.as_slice(), c))
    }

    /// Sum of all coefficients.
    pub fn coefficient_sum(&self) -> i64 {
        self.terms.values().sum()
    }

    /// Total degrees present, ascending.
    pub fn degrees(&self) -> Vec<u32> {
        let mut d: Vec<u32> = self.terms.keys().map(|k| k.iter().sum()).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    pub fn is_homogeneous(&self) -> bool {
        self.degrees().len() <= 1
    }

    /// The degree-`d` part.
    pub fn homogeneous_component(&self, d: u32) -> IntPolynomial {
        IntPolynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| k.iter().sum::<u32>() == d)
                .map(|(k, &c)| (k.clone(), c))
                .collect(),
        }
    }

    /// Exchanges `x_i` and `x_j` (1-based).
    pub fn swap_variables(&self, i: usize, j: usize) -> IntPolynomial {
        let n = self.nvars.max(i).max(j);
        let mut out = IntPolynomial::zero(n);
        for (k, &c) in &self.terms {
            let mut k = k.clone();
            k.resize(n, 0);
            k.swap(i - 1, j - 1);
            out.add_term(k, c);
        }
        out
    }

    /// Sets `x_{m+1}, x_{m+2}, …` to zero and keeps `m` variables.
    pub fn truncate_variables(&self, m: usize) -> IntPolynomial {
        let mut out = IntPolynomial::zero(m);
        for (k, &c) in &self.terms {
            if k.iter().skip(m).all(|&e| e == 0) {
                let mut k = k.clone();
                k.resize(m, 0);
                out.add_term(k, c);
            }
        }
        out
    }

    /// Support element that is smallest in reverse lexicographic order;
    /// nothing else in the support is dominated by it.
    pub fn revlex_min(&self) -> Option<(WeakComposition, i64)> {
        self.terms
            .iter()
            .min_by(|a, b| revlex_cmp(a.0, b.0))
            .map(|(k, &c)| (WeakComposition::new(k.clone()), c))
    }

    pub fn scale(&self, c: i64) -> IntPolynomial {
        let mut out = IntPolynomial::zero(self.nvars);
        for (k, &v) in &self.terms {
            out.add_term(k.clone(), v * c);
        }
        out
    }

    fn padded_terms(&self) -> Vec<(Vec<u32>, i64)> {
        self.terms
            .iter()
            .map(|(k, &c)| {
                let len = k.iter().rposition(|&e| e != 0).map_or(0, |p| p + 1);
                (k[..len].to_vec(), c)
            })
            .collect::<BTreeMap<_, _>>()
            .into_iter()
            .collect()
    }
}

impl PartialEq for IntPolynomial {
    fn eq(&self, other: &Self) -> bool {
        self.padded_terms() == other.padded_terms()
    }
}

impl Eq for IntPolynomial {}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial[{}]({})", self.nvars, self)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (k, c)) in self.terms().into_iter().enumerate() {
            if n > 0 {
                write!(f, " {} ", if c < 0 { '-' } else { '+' })?;
            } else if c < 0 {
                write!(f, "-")?;
            }
            let mono: Vec<String> = k
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        format!("x{}", i + 1)
                    } else {
                        format!("x{}^{}", i + 1, e)
                    }
                })
                .collect();
            let a = c.abs();
            match (a, mono.is_empty()) {
                (_, true) => write!(f, "{a}")?,
                (1, false) => write!(f, "{}", mono.join("*"))?,
                _ => write!(f, "{a}*{}", mono.join("*"))?,
            }
        }
        Ok(())
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let mut out = self.clone();
        out.widen(rhs.nvars);
        for (k, &c) in &rhs.terms {
            out.add_term(k.clone(), c);
        }
        out
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        self.scale(-1)
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        self + &(-rhs)
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.nvars.max(rhs.nvars);
        let mut out = IntPolynomial::zero(n);
        for (a, &ca) in &self.terms {
            for (b, &cb) in &rhs.terms {
                let k: Vec<u32> = (0..n)
                    .map(|i| a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0))
                    .collect();
                out.add_term(k, ca * cb);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cancellation_removes_terms() {
        let mut p = IntPolynomial::zero(2);
        p.add_term(vec![1, 0], 3);
        p.add_term(vec![1, 0], -3);
        assert!(p.is_zero());
        assert_eq!(p.to_string(), "0");
    }

    #[test]
    fn equality_pads_variables() {
        let a = IntPolynomial::monomial(vec![2, 1], 1);
        let b = IntPolynomial::monomial(vec![2, 1, 0, 0], 1);
        assert_eq!(a, b);
        assert_ne!(a, IntPolynomial::monomial(vec![2, 0, 1], 1));
    }

    #[test]
    fn product_and_display() {
        let x1 = IntPolynomial::monomial(vec![1], 1);
        let x2 = IntPolynomial::monomial(vec![0, 1], 1);
        let s = &x1 + &x2;
        let sq = &s * &s;
        assert_eq!(sq.coeff(&[1, 1]), 2);
        assert_eq!(sq.to_string(), "x1^2 + 2*x1*x2 + x2^2");
        assert_eq!((&sq - &sq), IntPolynomial::zero(0));
        assert!(sq.is_homogeneous());
        assert_eq!(sq.swap_variables(1, 2), sq);
    }

    #[test]
    fn truncation_drops_high_variables() {
        let mut p = IntPolynomial::zero(3);
        p.add_term(vec![1, 0, 1], 1);
        p.add_term(vec![2, 0, 0], 5);
        let t = p.truncate_variables(2);
        assert_eq!(t, IntPolynomial::monomial(vec![2], 5));
    }

    #[test]
    fn revlex_min_is_rightmost_mass() {
        let mut p = IntPolynomial::zero(3);
        p.add_term(vec![2, 0, 0], 1);
        p.add_term(vec![0, 1, 1], 4);
        p.add_term(vec![1, 0, 1], 2);
        let (k, c) = p.revlex_min().unwrap();
        assert_eq!(k.parts(), &[0, 1, 1]);
        assert_eq!(c, 4);
    }
}
