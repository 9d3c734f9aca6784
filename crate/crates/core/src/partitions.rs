//! Enumeration of restricted poset partitions and their generating
//! polynomials.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::descent::WeakComposition;
use crate::error::{Error, Result};
use crate::poly::IntPolynomial;
use crate::poset::Poset;
use crate::restrict::{rho_max, RestrictionMap};

/// A map `f : [p] → ℤ_{>0}`, stored by natural label.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PPartition {
    values: Vec<u32>,
}

impl PPartition {
    pub fn new(values: Vec<u32>) -> PPartition {
        PPartition { values }
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    /// `f(label)`.
    pub fn get(&self, label: usize) -> u32 {
        self.values[label - 1]
    }

    /// True iff `f` satisfies every condition imposed by `(poset, rho)`.
    pub fn is_valid(&self, poset: &Poset, rho: &RestrictionMap) -> bool {
        if self.values.len() != poset.len() || rho.len() != poset.len() {
            return false;
        }
        let bounded = (1..=poset.len()).all(|i| {
            let v = self.get(i);
            v >= 1 && i64::from(v) <= rho.get(i)
        });
        bounded
            && poset.covers().iter().all(|&(i, j)| {
                if i < j {
                    self.get(i) <= self.get(j)
                } else {
                    self.get(i) < self.get(j)
                }
            })
    }
}

/// Calls `visit` once per `(poset, rho)`-partition, in no particular order.
///
/// Values are assigned along a topological order; each element ranges from
/// the least value its lower covers allow up to `ρ̄`, so dead branches are
/// cut as soon as they appear.
pub fn for_each_partition<F: FnMut(&[u32])>(
    poset: &Poset,
    rho: &RestrictionMap,
    mut visit: F,
) -> Result<()> {
    let bar = rho_max(poset, rho)?;
    if bar.bounds().iter().any(|&v| v < 1) {
        return Ok(());
    }
    let order = poset.topological_order();
    let lower: Vec<Vec<usize>> = (0..=poset.len())
        .map(|x| if x == 0 { Vec::new() } else { poset.lower_covers(x).collect() })
        .collect();
    let mut values = vec![0u32; poset.len()];
    fill(&order, 0, &lower, &bar, &mut values, &mut visit);
    Ok(())
}

fn fill<F: FnMut(&[u32])>(
    order: &[usize],
    k: usize,
    lower: &[Vec<usize>],
    bar: &RestrictionMap,
    values: &mut [u32],
    visit: &mut F,
) {
    let Some(&x) = order.get(k) else {
        visit(values);
        return;
    };
    let lo = lower[x]
        .iter()
        .map(|&y| values[y - 1] + u32::from(y > x))
        .max()
        .unwrap_or(1)
        .max(1);
    let hi = bar.get(x) as u32;
    for v in lo..=hi {
        values[x - 1] = v;
        fill(order, k + 1, lower, bar, values, visit);
    }
    values[x - 1] = 0;
}

/// `A_ρ(P)`, sorted lexicographically by value vector.
pub fn enumerate_partitions(poset: &Poset, rho: &RestrictionMap) -> Result<Vec<PPartition>> {
    let mut out = Vec::new();
    for_each_partition(poset, rho, |v| out.push(PPartition::new(v.to_vec())))?;
    out.sort();
    Ok(out)
}

/// The weight composition: entry `r` counts elements with `f(i) = r`.
pub fn comp(f: &PPartition, nvars: usize) -> Result<WeakComposition> {
    weight(f.values(), nvars).map(WeakComposition::new)
}

fn weight(values: &[u32], nvars: usize) -> Result<Vec<u32>> {
    let mut c = vec![0u32; nvars];
    for &v in values {
        if v == 0 || v as usize > nvars {
            return Err(Error::ValueOutOfRange { value: v, nvars });
        }
        c[v as usize - 1] += 1;
    }
    Ok(c)
}

/// `Σ_f x_{f(1)} ⋯ x_{f(p)}` in `max(1, max ρ̄)` variables.
pub fn generating_polynomial(poset: &Poset, rho: &RestrictionMap) -> Result<IntPolynomial> {
    let bar = rho_max(poset, rho)?;
    let nvars = bar.max_value().unwrap_or(1).max(1) as usize;
    let mut poly = IntPolynomial::zero(nvars);
    for_each_partition(poset, rho, |v| {
        let c = weight(v, nvars).expect("values are bounded by the maximal restriction");
        poly.add_term(c, 1);
    })?;
    Ok(poly)
}

/// Checks that every partition of `(poset, rho)` is a partition of exactly
/// one linear extension, and that the extensions contribute nothing else.
pub fn check_fundamental_decomposition(poset: &Poset, rho: &RestrictionMap) -> Result<()> {
    let mut hits: HashMap<Vec<u32>, usize> = HashMap::new();
    for_each_partition(poset, rho, |v| {
        hits.insert(v.to_vec(), 0);
    })?;
    let mut stray: Option<Vec<u32>> = None;
    for l in poset.linear_extensions() {
        for_each_partition(&l.to_poset(), rho, |v| match hits.get_mut(v) {
            Some(n) => *n += 1,
            None => {
                stray.get_or_insert_with(|| v.to_vec());
            }
        })?;
    }
    if let Some(witness) = stray {
        return Err(Error::DecompositionFailure { witness, count: 0 });
    }
    let mut bad: Vec<_> = hits.into_iter().filter(|&(_, n)| n != 1).collect();
    bad.sort();
    match bad.into_iter().next() {
        Some((witness, count)) => Err(Error::DecompositionFailure { witness, count }),
        None => Ok(()),
    }
}
