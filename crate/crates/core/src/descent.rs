//! Weak and strong compositions, refinement and dominance, and the descent
//! compositions of linear orders with and without a restriction.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::poset::LinearOrder;
use crate::restrict::{rho_max_linear, RestrictionMap};

/// A finite sequence of non-negative integers.
///
/// Equality, hashing and ordering ignore trailing zeros, so `(1,0,2)` and
/// `(1,0,2,0,0)` are the same key. The order is reverse lexicographic: the
/// larger vector is the one that is *smaller* at the last position where the
/// two differ. It is a total order extending dominance.
#[derive(Debug, Clone, Default)]
pub struct WeakComposition(Vec<u32>);

impl WeakComposition {
    pub fn new(parts: Vec<u32>) -> WeakComposition {
        WeakComposition(parts)
    }

    pub fn zeros(n: usize) -> WeakComposition {
        WeakComposition(vec![0; n])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.0
    }

    /// Stored length, trailing zeros included.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Length once trailing zeros are dropped.
    pub fn support_len(&self) -> usize {
        self.0.iter().rposition(|&x| x != 0).map_or(0, |k| k + 1)
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Entry `k` (0-based); zero beyond the stored length.
    pub fn get(&self, k: usize) -> u32 {
        self.0.get(k).copied().unwrap_or(0)
    }

    pub fn trimmed(&self) -> WeakComposition {
        WeakComposition(self.0[..self.support_len()].to_vec())
    }

    /// Pads with trailing zeros (or trims zeros) to length `n`.
    pub fn padded(&self, n: usize) -> Result<WeakComposition> {
        if self.support_len() > n {
            return Err(Error::LengthError {
                len: self.support_len(),
                nvars: n,
            });
        }
        Ok(WeakComposition((0..n).map(|k| self.get(k)).collect()))
    }

    /// `0^m × a`.
    pub fn prepend_zeros(&self, m: usize) -> WeakComposition {
        let mut parts = vec![0; m];
        parts.extend_from_slice(&self.0);
        WeakComposition(parts)
    }

    /// True when every nonzero entry is followed only by nonzero entries.
    pub fn is_right_justified(&self) -> bool {
        let t = &self.0[..self.support_len()];
        match t.iter().position(|&x| x != 0) {
            Some(first) => t[first..].iter().all(|&x| x != 0),
            None => true,
        }
    }
}

impl PartialEq for WeakComposition {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for WeakComposition {}

impl Hash for WeakComposition {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0[..self.support_len()].hash(state);
    }
}

impl Ord for WeakComposition {
    fn cmp(&self, other: &Self) -> Ordering {
        revlex_cmp(&self.0, &other.0)
    }
}

impl PartialOrd for WeakComposition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<Vec<u32>> for WeakComposition {
    fn from(parts: Vec<u32>) -> Self {
        WeakComposition(parts)
    }
}

impl fmt::Display for WeakComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

/// Reverse lexicographic comparison of zero-padded vectors.
pub fn revlex_cmp(a: &[u32], b: &[u32]) -> Ordering {
    let n = a.len().max(b.len());
    for k in (0..n).rev() {
        let x = a.get(k).copied().unwrap_or(0);
        let y = b.get(k).copied().unwrap_or(0);
        if x != y {
            return y.cmp(&x);
        }
    }
    Ordering::Equal
}

/// A finite sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct StrongComposition(Vec<u32>);

impl StrongComposition {
    pub fn new(parts: Vec<u32>) -> Result<StrongComposition> {
        if parts.contains(&0) {
            return Err(Error::InvalidComposition(parts));
        }
        Ok(StrongComposition(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    /// The weak composition with the same parts.
    pub fn to_weak(&self) -> WeakComposition {
        WeakComposition(self.0.clone())
    }
}

impl fmt::Display for StrongComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

fn write_tuple(f: &mut fmt::Formatter<'_>, parts: &[u32]) -> fmt::Result {
    let s: Vec<String> = parts.iter().map(|x| x.to_string()).collect();
    write!(f, "({})", s.join(","))
}

/// Removes the zero entries.
pub fn flatten(a: &WeakComposition) -> StrongComposition {
    StrongComposition(a.0.iter().copied().filter(|&x| x != 0).collect())
}

/// `beta` refines `alpha`: equal totals and every partial sum of `alpha` is
/// a partial sum of `beta`.
pub fn refines(beta: &StrongComposition, alpha: &StrongComposition) -> bool {
    if beta.total() != alpha.total() {
        return false;
    }
    let mut beta_sums = beta.0.iter().scan(0, |s, &x| {
        *s += x;
        Some(*s)
    });
    let mut acc = 0;
    'outer: for &x in &alpha.0 {
        acc += x;
        for s in beta_sums.by_ref() {
            match s.cmp(&acc) {
                Ordering::Less => continue,
                Ordering::Equal => continue 'outer,
                Ordering::Greater => return false,
            }
        }
        return false;
    }
    true
}

/// `b ⊵ a`: every prefix sum of `b` is at least that of `a`.
pub fn dominates(b: &WeakComposition, a: &WeakComposition) -> bool {
    let n = b.len().max(a.len());
    let (mut sb, mut sa) = (0u64, 0u64);
    for k in 0..n {
        sb += u64::from(b.get(k));
        sa += u64::from(a.get(k));
        if sb < sa {
            return false;
        }
    }
    true
}

/// Run lengths of the maximal ascending runs of `order`.
pub fn strong_descent(order: &LinearOrder) -> StrongComposition {
    let seq = order.seq();
    if seq.is_empty() {
        return StrongComposition(Vec::new());
    }
    let mut parts = vec![1];
    for w in seq.windows(2) {
        if w[0] > w[1] {
            parts.push(1);
        } else {
            *parts.last_mut().unwrap() += 1;
        }
    }
    StrongComposition(parts)
}

/// Chains `C_1, …, C_r` (bottom to top) and their anchors `ρ̄(min C_s)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainDecomposition {
    pub chains: Vec<Vec<usize>>,
    pub anchors: Vec<i64>,
}

impl ChainDecomposition {
    fn split<F>(order: &LinearOrder, rho: &RestrictionMap, breaks: F) -> Result<Self>
    where
        F: Fn(usize, usize, &RestrictionMap) -> bool,
    {
        let bar = rho_max_linear(order, rho)?;
        if bar.bounds().iter().any(|&v| v < 1) {
            return Err(Error::Infeasible);
        }
        let mut chains: Vec<Vec<usize>> = Vec::new();
        for (k, &x) in order.seq().iter().enumerate() {
            if k == 0 || breaks(order.seq()[k - 1], x, &bar) {
                chains.push(vec![x]);
            } else {
                chains.last_mut().unwrap().push(x);
            }
        }
        let anchors = chains.iter().map(|c| bar.get(c[0])).collect();
        Ok(ChainDecomposition { chains, anchors })
    }

    /// Chains broken at the descents of `order`.
    pub fn reduced(order: &LinearOrder, rho: &RestrictionMap) -> Result<Self> {
        Self::split(order, rho, |u, v, _| u > v)
    }

    /// Chains broken wherever `ρ̄` strictly increases.
    pub fn weak(order: &LinearOrder, rho: &RestrictionMap) -> Result<Self> {
        Self::split(order, rho, |u, v, bar| bar.get(u) < bar.get(v))
    }

    /// Places `|C_s|` at position `c_s`.
    pub fn composition(&self) -> WeakComposition {
        let n = self.anchors.iter().copied().max().unwrap_or(0) as usize;
        let mut parts = vec![0u32; n];
        for (c, &anchor) in self.chains.iter().zip(&self.anchors) {
            let slot = &mut parts[anchor as usize - 1];
            debug_assert_eq!(*slot, 0, "anchors strictly increase");
            *slot += c.len() as u32;
        }
        WeakComposition(parts)
    }
}

/// Reduced weak descent composition `rdes(L, ρ)`.
pub fn rdes(order: &LinearOrder, rho: &RestrictionMap) -> Result<WeakComposition> {
    Ok(ChainDecomposition::reduced(order, rho)?.composition())
}

/// Weak descent composition `des(L, ρ)`.
pub fn wdes(order: &LinearOrder, rho: &RestrictionMap) -> Result<WeakComposition> {
    Ok(ChainDecomposition::weak(order, rho)?.composition())
}
