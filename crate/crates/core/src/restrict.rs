//! Restriction maps `ρ`, the maximal restriction `ρ̄`, and the flag /
//! well-labelled conditions.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poset::{LinearOrder, Poset, Relabeling};

/// An integer upper bound per element, indexed by natural label.
///
/// Entries may be zero or negative, in which case no partition exists.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RestrictionMap {
    bounds: Vec<i64>,
}

impl RestrictionMap {
    pub fn new(bounds: Vec<i64>) -> RestrictionMap {
        RestrictionMap { bounds }
    }

    pub fn constant(p: usize, value: i64) -> RestrictionMap {
        RestrictionMap {
            bounds: vec![value; p],
        }
    }

    /// Builds a map from values listed in the order of `order` (bottom to
    /// top) rather than by natural label.
    pub fn from_order_list(order: &LinearOrder, values: &[i64]) -> Result<RestrictionMap> {
        if values.len() != order.len() {
            return Err(Error::LengthMismatch {
                expected: order.len(),
                found: values.len(),
            });
        }
        let mut bounds = vec![0; values.len()];
        for (&x, &v) in order.seq().iter().zip(values) {
            bounds[x - 1] = v;
        }
        Ok(RestrictionMap { bounds })
    }

    /// Values listed bottom to top along `order`.
    pub fn to_order_list(&self, order: &LinearOrder) -> Vec<i64> {
        order.seq().iter().map(|&x| self.get(x)).collect()
    }

    /// `ρ(label)`.
    pub fn get(&self, label: usize) -> i64 {
        self.bounds[label - 1]
    }

    pub fn bounds(&self) -> &[i64] {
        &self.bounds
    }

    pub fn len(&self) -> usize {
        self.bounds.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bounds.is_empty()
    }

    pub fn max_value(&self) -> Option<i64> {
        self.bounds.iter().copied().max()
    }

    /// `ρ ∘ π`.
    pub fn compose(&self, pi: &Relabeling) -> Result<RestrictionMap> {
        if pi.len() != self.len() {
            return Err(Error::SizeMismatch {
                expected: self.len(),
                found: pi.len(),
            });
        }
        Ok(RestrictionMap {
            bounds: (1..=self.len()).map(|i| self.get(pi.apply(i))).collect(),
        })
    }

    /// Concatenation `α ⊕ β`, matching [`Poset::disjoint_union`] labels.
    pub fn concat(&self, other: &RestrictionMap) -> RestrictionMap {
        let mut bounds = self.bounds.clone();
        bounds.extend_from_slice(&other.bounds);
        RestrictionMap { bounds }
    }
}

impl fmt::Display for RestrictionMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.bounds.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

fn check_len(poset: &Poset, rho: &RestrictionMap) -> Result<()> {
    if poset.len() != rho.len() {
        Err(Error::LengthMismatch {
            expected: poset.len(),
            found: rho.len(),
        })
    } else {
        Ok(())
    }
}

/// Maximum number of descents (steps `u ≺ v` with `u > v`) over chains from
/// `i` up to `j`.
///
/// Refining a chain never loses a descent, so the maximum is attained on a
/// saturated chain and a longest-path pass over the covers suffices.
pub fn descent_distance(poset: &Poset, i: usize, j: usize) -> Result<u32> {
    poset.check_label(i)?;
    poset.check_label(j)?;
    if !poset.leq(i, j) {
        return Err(Error::NotComparable(i, j));
    }
    let mut best: Vec<Option<u32>> = vec![None; poset.len() + 1];
    best[i] = Some(0);
    for x in poset.topological_order() {
        let Some(d) = best[x] else { continue };
        for y in poset.upper_covers(x) {
            if !poset.leq(y, j) {
                continue;
            }
            let cand = d + u32::from(x > y);
            if best[y].is_none_or(|b| cand > b) {
                best[y] = Some(cand);
            }
        }
    }
    Ok(best[j].expect("j is reachable from i"))
}

/// The maximal restriction `ρ̄(i) = min { ρ(x) − δ(i,x) : i ⪯ x }`.
///
/// Evaluated top-down through the covers as
/// `ρ̄(i) = min(ρ(i), min_{i⋖j} ρ̄(j) − [i > j])`.
pub fn rho_max(poset: &Poset, rho: &RestrictionMap) -> Result<RestrictionMap> {
    check_len(poset, rho)?;
    let mut bar = rho.bounds.clone();
    let order = poset.topological_order();
    for &i in order.iter().rev() {
        let mut v = rho.get(i);
        for j in poset.upper_covers(i) {
            v = v.min(bar[j - 1] - i64::from(i > j));
        }
        bar[i - 1] = v;
    }
    Ok(RestrictionMap { bounds: bar })
}

/// `ρ̄` for a linear order, by a single scan from the top.
pub fn rho_max_linear(order: &LinearOrder, rho: &RestrictionMap) -> Result<RestrictionMap> {
    if order.len() != rho.len() {
        return Err(Error::LengthMismatch {
            expected: order.len(),
            found: rho.len(),
        });
    }
    let seq = order.seq();
    let mut bar = rho.bounds.clone();
    for k in (0..seq.len()).rev() {
        let x = seq[k];
        let mut v = rho.get(x);
        if let Some(&y) = seq.get(k + 1) {
            v = v.min(bar[y - 1] - i64::from(x > y));
        }
        bar[x - 1] = v;
    }
    Ok(RestrictionMap { bounds: bar })
}

/// True iff `(poset, rho)` admits at least one partition.
pub fn is_feasible(poset: &Poset, rho: &RestrictionMap) -> bool {
    match rho_max(poset, rho) {
        Ok(bar) => bar.bounds.iter().all(|&v| v >= 1),
        Err(_) => false,
    }
}

/// Positive, constant on ascending covers, weakly increasing on descending
/// covers. A restriction of the wrong length is not a flag.
pub fn is_p_flag(poset: &Poset, rho: &RestrictionMap) -> bool {
    if check_len(poset, rho).is_err() || rho.bounds.iter().any(|&v| v <= 0) {
        return false;
    }
    poset.covers().iter().all(|&(i, j)| {
        if i < j {
            rho.get(i) == rho.get(j)
        } else {
            rho.get(i) <= rho.get(j)
        }
    })
}

pub fn is_well_labelled(poset: &Poset, rho: &RestrictionMap) -> bool {
    if check_len(poset, rho).is_err() {
        return false;
    }
    let covers_ok = poset.covers().iter().all(|&(i, j)| {
        if i < j {
            rho.get(i) >= rho.get(j)
        } else {
            rho.get(i) <= rho.get(j)
        }
    });
    covers_ok
        && (1..=poset.len()).all(|i| {
            ((i + 1)..=poset.len())
                .all(|j| poset.comparable(i, j) || rho.get(i) >= rho.get(j))
        })
}

/// Components of the ascending-cover graph, indexed so that values are
/// weakly decreasing and the reversed sequence is a linear extension of the
/// induced order on components.
///
/// The induced relation need not be a partial order: with covers
/// `1⋖6, 2⋖1, 3⋖4, 4⋖2, 4⋖5, 5⋖6` the component `{1,3,4,5,6}` lies both
/// above and below `{2}`. Such inputs give [`Error::CyclicComponents`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentDecomposition {
    pub components: Vec<Vec<usize>>,
    pub values: Vec<i64>,
}

impl ComponentDecomposition {
    /// Greedy top-down indexing: among components with nothing remaining
    /// above them, take the largest value, then the smallest minimum label.
    pub fn new(poset: &Poset, rho: &RestrictionMap) -> Result<ComponentDecomposition> {
        if !is_p_flag(poset, rho) {
            return Err(Error::NotAFlag);
        }
        let p = poset.len();
        let mut parent: Vec<usize> = (0..=p).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while parent[r] != r {
                r = parent[r];
            }
            let mut y = x;
            while parent[y] != r {
                let next = parent[y];
                parent[y] = r;
                y = next;
            }
            r
        }
        for &(i, j) in poset.covers() {
            if i < j {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut comps: Vec<Vec<usize>> = Vec::new();
        let mut root_index = vec![usize::MAX; p + 1];
        for x in 1..=p {
            let r = find(&mut parent, x);
            if root_index[r] == usize::MAX {
                root_index[r] = comps.len();
                comps.push(Vec::new());
            }
            comps[root_index[r]].push(x);
        }
        let n = comps.len();
        let above = |a: usize, b: usize| -> bool {
            // component b lies strictly above component a
            a != b && comps[a].iter().any(|&x| comps[b].iter().any(|&y| poset.lt(x, y)))
        };
        let mut remaining: Vec<usize> = (0..n).collect();
        let mut components = Vec::with_capacity(n);
        let mut values = Vec::with_capacity(n);
        while !remaining.is_empty() {
            let pick = remaining
                .iter()
                .copied()
                .filter(|&c| !remaining.iter().any(|&d| above(c, d)))
                .max_by(|&a, &b| {
                    rho.get(comps[a][0])
                        .cmp(&rho.get(comps[b][0]))
                        .then(comps[b][0].cmp(&comps[a][0]))
                })
                .ok_or(Error::CyclicComponents)?;
            remaining.retain(|&c| c != pick);
            values.push(rho.get(comps[pick][0]));
            components.push(comps[pick].clone());
        }
        Ok(ComponentDecomposition { components, values })
    }

    /// `π` sending consecutive position blocks increasingly onto the
    /// components in index order.
    pub fn permutation(&self) -> Relabeling {
        let one_line: Vec<usize> = self.components.iter().flatten().copied().collect();
        Relabeling::new(one_line).expect("components partition the labels")
    }
}

/// A permutation `π` such that `(relabel(P, π), ρ∘π)` is a well-labelled
/// flag with the same partitions.
///
/// New labels are handed out one at a time. An element is eligible once
/// everything that must receive a smaller label has one: the lower end of
/// an ascending cover and the upper end of a descending cover. Among
/// eligible elements the largest `ρ` wins, then an element sharing an
/// ascending component with the previous pick, then the smallest label.
/// Along every such constraint `ρ` weakly decreases, so an incomparable
/// element with larger `ρ` is never left waiting behind a smaller one.
/// When the components are partially ordered this reproduces
/// [`ComponentDecomposition::permutation`].
pub fn well_label_permutation(poset: &Poset, rho: &RestrictionMap) -> Result<Relabeling> {
    if !is_p_flag(poset, rho) {
        return Err(Error::NotAFlag);
    }
    let p = poset.len();
    let mut pending = vec![0usize; p + 1];
    let mut after: Vec<Vec<usize>> = vec![Vec::new(); p + 1];
    let mut same = vec![Vec::new(); p + 1];
    for &(i, j) in poset.covers() {
        let (first, second) = if i < j { (i, j) } else { (j, i) };
        after[first].push(second);
        pending[second] += 1;
        if i < j {
            same[i].push(j);
            same[j].push(i);
        }
    }
    let component = {
        let mut comp: Vec<usize> = (0..=p).collect();
        for x in 1..=p {
            if comp[x] != x {
                continue;
            }
            let mut stack = vec![x];
            while let Some(y) = stack.pop() {
                for &z in &same[y] {
                    if comp[z] == z && z != x {
                        comp[z] = x;
                        stack.push(z);
                    }
                }
            }
        }
        comp
    };
    let mut placed = vec![false; p + 1];
    let mut one_line = Vec::with_capacity(p);
    let mut last: Option<usize> = None;
    while one_line.len() < p {
        let pick = (1..=p)
            .filter(|&x| !placed[x] && pending[x] == 0)
            .max_by_key(|&x| {
                let near = last.is_some_and(|l| component[l] == component[x]);
                (rho.get(x), near, std::cmp::Reverse(x))
            })
            .expect("constraints follow the original labels, so they are acyclic");
        placed[pick] = true;
        for &y in &after[pick] {
            pending[y] -= 1;
        }
        one_line.push(pick);
        last = Some(pick);
    }
    Relabeling::new(one_line)
}
