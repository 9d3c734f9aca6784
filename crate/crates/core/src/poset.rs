//! Finite posets on the labels `1..=p`.
//!
//! Labels carry meaning beyond identity: a cover `i ⋖ j` with `i > j` is a
//! *descent*, and every statistic downstream (strictness of partitions,
//! descent compositions, flags) compares labels under the natural integer
//! order. The order relation is kept as a dense `p × p` matrix; the cover
//! list is always recomputed from it, never taken from input.

use std::fmt;

use crate::error::{Error, Result};

/// A partial order on `1..=p`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poset {
    p: usize,
    // row-major, 0-based: leq[i * p + j] == (i+1 ⪯ j+1)
    leq: Vec<bool>,
    covers: Vec<(usize, usize)>,
}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Poset")
            .field("p", &self.p)
            .field("covers", &self.covers)
            .finish()
    }
}

impl Poset {
    /// Builds the transitive closure of `relations` on `1..=p`.
    ///
    /// The pairs need not be covers; redundant pairs are dropped when the
    /// canonical cover list is recomputed.
    pub fn from_covers(p: usize, relations: &[(usize, usize)]) -> Result<Poset> {
        let mut leq = vec![false; p * p];
        for i in 0..p {
            leq[i * p + i] = true;
        }
        for &(i, j) in relations {
            for label in [i, j] {
                if label == 0 || label > p {
                    return Err(Error::OutOfRange { label, p });
                }
            }
            if i == j {
                return Err(Error::Cycle(i));
            }
            leq[(i - 1) * p + (j - 1)] = true;
        }
        Self::from_closure_candidate(p, leq)
    }

    fn from_closure_candidate(p: usize, mut leq: Vec<bool>) -> Result<Poset> {
        // Warshall
        for k in 0..p {
            for i in 0..p {
                if !leq[i * p + k] {
                    continue;
                }
                for j in 0..p {
                    if leq[k * p + j] {
                        leq[i * p + j] = true;
                    }
                }
            }
        }
        for i in 0..p {
            for j in (i + 1)..p {
                if leq[i * p + j] && leq[j * p + i] {
                    return Err(Error::Cycle(i + 1));
                }
            }
        }
        let covers = reduction(p, &leq);
        Ok(Poset { p, leq, covers })
    }

    /// The chain `1 ≺ 2 ≺ … ≺ p`.
    pub fn chain(p: usize) -> Poset {
        let rel: Vec<_> = (1..p).map(|i| (i, i + 1)).collect();
        Poset::from_covers(p, &rel).expect("chain is acyclic")
    }

    pub fn antichain(p: usize) -> Poset {
        Poset::from_covers(p, &[]).expect("empty relation")
    }

    /// Number of elements.
    pub fn len(&self) -> usize {
        self.p
    }

    pub fn is_empty(&self) -> bool {
        self.p == 0
    }

    /// `i ⪯ j`.
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[(i - 1) * self.p + (j - 1)]
    }

    /// `i ≺ j`.
    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq(i, j)
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.leq(i, j) || self.leq(j, i)
    }

    /// Cover relations `(i, j)` meaning `i ⋖ j`, sorted lexicographically.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn is_cover(&self, i: usize, j: usize) -> bool {
        self.covers.binary_search(&(i, j)).is_ok()
    }

    /// Elements covering `i`.
    pub fn upper_covers(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.covers.iter().filter(move |c| c.0 == i).map(|c| c.1)
    }

    /// Elements covered by `i`.
    pub fn lower_covers(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.covers.iter().filter(move |c| c.1 == i).map(|c| c.0)
    }

    /// True when every pair of elements is comparable.
    pub fn is_chain(&self) -> bool {
        self.incomparable_pair().is_none()
    }

    /// Lexicographically smallest incomparable pair `(i, j)` with `i < j`.
    pub fn incomparable_pair(&self) -> Option<(usize, usize)> {
        for i in 1..=self.p {
            for j in (i + 1)..=self.p {
                if !self.comparable(i, j) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// Transitive closure of `self ∪ {i ≺ j}` for an incomparable pair.
    pub fn add_relation(&self, i: usize, j: usize) -> Result<Poset> {
        self.check_label(i)?;
        self.check_label(j)?;
        if self.comparable(i, j) {
            return Err(Error::Comparable(i, j));
        }
        let mut leq = self.leq.clone();
        leq[(i - 1) * self.p + (j - 1)] = true;
        Self::from_closure_candidate(self.p, leq)
    }

    /// Disjoint union on `1..=|A|+|B|`; the labels of `other` are shifted
    /// up by `self.len()`.
    pub fn disjoint_union(&self, other: &Poset) -> Poset {
        let p = self.p + other.p;
        let shift = self.p;
        let rel: Vec<_> = self
            .covers
            .iter()
            .copied()
            .chain(other.covers.iter().map(|&(i, j)| (i + shift, j + shift)))
            .collect();
        Poset::from_covers(p, &rel).expect("union of posets is acyclic")
    }

    /// The poset `Q` with `i ≺_Q j` iff `π(i) ≺_P π(j)`.
    ///
    /// Element carrying label `x` in `self` carries label `π⁻¹(x)` in the
    /// result.
    pub fn relabel(&self, pi: &Relabeling) -> Result<Poset> {
        if pi.len() != self.p {
            return Err(Error::SizeMismatch {
                expected: self.p,
                found: pi.len(),
            });
        }
        let p = self.p;
        let mut leq = vec![false; p * p];
        for i in 1..=p {
            for j in 1..=p {
                leq[(i - 1) * p + (j - 1)] = self.leq(pi.apply(i), pi.apply(j));
            }
        }
        let covers = reduction(p, &leq);
        Ok(Poset { p, leq, covers })
    }

    /// All linear extensions in lexicographic order of their sequences.
    pub fn linear_extensions(&self) -> Vec<LinearOrder> {
        let mut out = Vec::new();
        self.for_each_linear_extension(|seq| {
            out.push(LinearOrder {
                seq: seq.to_vec(),
            })
        });
        out
    }

    pub fn count_linear_extensions(&self) -> usize {
        let mut n = 0;
        self.for_each_linear_extension(|_| n += 1);
        n
    }

    /// Visits every linear extension (bottom to top) in lexicographic order.
    ///
    /// Backtracks over the minimal elements of the not-yet-placed sub-poset,
    /// trying candidates in increasing label order.
    pub fn for_each_linear_extension<F: FnMut(&[usize])>(&self, mut visit: F) {
        let p = self.p;
        let mut below = vec![0usize; p + 1];
        for &(_, j) in &self.covers {
            below[j] += 1;
        }
        let mut placed = vec![false; p + 1];
        let mut seq = Vec::with_capacity(p);
        self.extend_rec(&mut below, &mut placed, &mut seq, &mut visit);
    }

    fn extend_rec<F: FnMut(&[usize])>(
        &self,
        below: &mut [usize],
        placed: &mut [bool],
        seq: &mut Vec<usize>,
        visit: &mut F,
    ) {
        if seq.len() == self.p {
            visit(seq);
            return;
        }
        for x in 1..=self.p {
            if placed[x] || below[x] != 0 {
                continue;
            }
            placed[x] = true;
            seq.push(x);
            for &(i, j) in &self.covers {
                if i == x {
                    below[j] -= 1;
                }
            }
            self.extend_rec(below, placed, seq, visit);
            for &(i, j) in &self.covers {
                if i == x {
                    below[j] += 1;
                }
            }
            seq.pop();
            placed[x] = false;
        }
    }

    /// Some linear extension, the lexicographically smallest one.
    pub fn topological_order(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (1..=self.p).collect();
        // number of strictly smaller elements is a valid sort key for a poset
        order.sort_by_key(|&x| (1..=self.p).filter(|&y| self.lt(y, x)).count());
        order
    }

    pub(crate) fn check_label(&self, label: usize) -> Result<()> {
        if label == 0 || label > self.p {
            Err(Error::OutOfRange { label, p: self.p })
        } else {
            Ok(())
        }
    }
}

fn reduction(p: usize, leq: &[bool]) -> Vec<(usize, usize)> {
    let lt = |i: usize, j: usize| i != j && leq[i * p + j];
    let mut covers = Vec::new();
    for i in 0..p {
        for j in 0..p {
            if lt(i, j) && !(0..p).any(|k| lt(i, k) && lt(k, j)) {
                covers.push((i + 1, j + 1));
            }
        }
    }
    covers
}

/// A total order on `1..=p`, listed from bottom to top.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearOrder {
    seq: Vec<usize>,
}

impl LinearOrder {
    pub fn new(seq: Vec<usize>) -> Result<LinearOrder> {
        check_permutation(&seq)?;
        Ok(LinearOrder { seq })
    }

    pub fn identity(p: usize) -> LinearOrder {
        LinearOrder {
            seq: (1..=p).collect(),
        }
    }

    pub fn seq(&self) -> &[usize] {
        &self.seq
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    pub fn to_poset(&self) -> Poset {
        let rel: Vec<_> = self.seq.windows(2).map(|w| (w[0], w[1])).collect();
        Poset::from_covers(self.seq.len(), &rel).expect("a sequence is acyclic")
    }

    /// True when `poset` relations all agree with this order.
    pub fn extends(&self, poset: &Poset) -> bool {
        if poset.len() != self.len() {
            return false;
        }
        let mut pos = vec![0; self.len() + 1];
        for (k, &x) in self.seq.iter().enumerate() {
            pos[x] = k;
        }
        poset.covers().iter().all(|&(i, j)| pos[i] < pos[j])
    }
}

impl fmt::Display for LinearOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.seq.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", parts.join("≺"))
    }
}

/// A permutation `π` of `1..=p` with its inverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relabeling {
    perm: Vec<usize>,
    inverse: Vec<usize>,
}

impl Relabeling {
    /// From one-line notation `(π(1), …, π(p))`.
    pub fn new(one_line: Vec<usize>) -> Result<Relabeling> {
        check_permutation(&one_line)?;
        let mut inverse = vec![0; one_line.len()];
        for (i, &x) in one_line.iter().enumerate() {
            inverse[x - 1] = i + 1;
        }
        Ok(Relabeling {
            perm: one_line,
            inverse,
        })
    }

    pub fn identity(p: usize) -> Relabeling {
        let perm: Vec<usize> = (1..=p).collect();
        Relabeling {
            inverse: perm.clone(),
            perm,
        }
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    pub fn one_line(&self) -> &[usize] {
        &self.perm
    }

    /// `π(i)`.
    pub fn apply(&self, i: usize) -> usize {
        self.perm[i - 1]
    }

    /// `π⁻¹(i)`.
    pub fn apply_inverse(&self, i: usize) -> usize {
        self.inverse[i - 1]
    }

    pub fn inverse(&self) -> Relabeling {
        Relabeling {
            perm: self.inverse.clone(),
            inverse: self.perm.clone(),
        }
    }
}

fn check_permutation(seq: &[usize]) -> Result<()> {
    let p = seq.len();
    let mut seen = vec![false; p + 1];
    for &x in seq {
        if x == 0 || x > p || seen[x] {
            return Err(Error::NotAPermutation(p));
        }
        seen[x] = true;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn seven_poset() -> Poset {
        Poset::from_covers(7, &[(1, 5), (1, 2), (3, 4), (4, 6), (6, 2), (7, 1), (7, 4)]).unwrap()
    }

    // Floyd–Warshall-style closure computed on a plain boolean matrix,
    // independent of the Poset internals.
    fn closure_oracle(p: usize, rel: &[(usize, usize)]) -> Vec<Vec<bool>> {
        let mut m = vec![vec![false; p + 1]; p + 1];
        for (i, row) in m.iter_mut().enumerate().skip(1) {
            row[i] = true;
        }
        for &(i, j) in rel {
            m[i][j] = true;
        }
        for k in 1..=p {
            for i in 1..=p {
                for j in 1..=p {
                    if m[i][k] && m[k][j] {
                        m[i][j] = true;
                    }
                }
            }
        }
        m
    }

    #[test]
    fn antichain_has_identity_order() {
        let a = Poset::from_covers(3, &[]).unwrap();
        for i in 1..=3 {
            for j in 1..=3 {
                assert_eq!(a.leq(i, j), i == j);
            }
        }
        assert!(a.covers().is_empty());
    }

    #[test]
    fn seven_poset_covers_are_canonical() {
        let p = seven_poset();
        assert_eq!(
            p.covers(),
            &[(1, 2), (1, 5), (3, 4), (4, 6), (6, 2), (7, 1), (7, 4)]
        );
        assert!(p.lt(7, 2));
        assert!(p.lt(3, 2));
        assert!(!p.comparable(5, 2));
    }

    #[test]
    fn two_cycle_is_rejected() {
        assert_eq!(Poset::from_covers(2, &[(1, 2), (2, 1)]), Err(Error::Cycle(1)));
        assert!(matches!(
            Poset::from_covers(3, &[(1, 2), (2, 3), (3, 1)]),
            Err(Error::Cycle(_))
        ));
    }

    #[test]
    fn out_of_range_label() {
        assert_eq!(
            Poset::from_covers(2, &[(1, 3)]),
            Err(Error::OutOfRange { label: 3, p: 2 })
        );
    }

    #[test]
    fn redundant_relations_are_reduced() {
        let p = Poset::from_covers(3, &[(1, 2), (2, 3), (1, 3)]).unwrap();
        assert_eq!(p.covers(), &[(1, 2), (2, 3)]);
        let q = Poset::from_covers(3, p.covers()).unwrap();
        assert_eq!(p, q);
    }

    fn permutation_filter_count(p: &Poset) -> usize {
        fn rec(p: &Poset, seq: &mut Vec<usize>, used: &mut [bool]) -> usize {
            if seq.len() == p.len() {
                let ok = (0..seq.len())
                    .all(|a| (a + 1..seq.len()).all(|b| !p.lt(seq[b], seq[a])));
                return usize::from(ok);
            }
            let mut n = 0;
            for x in 1..=p.len() {
                if !used[x] {
                    used[x] = true;
                    seq.push(x);
                    n += rec(p, seq, used);
                    seq.pop();
                    used[x] = false;
                }
            }
            n
        }
        rec(p, &mut Vec::new(), &mut vec![false; p.len() + 1])
    }

    #[test]
    fn extension_counts() {
        assert_eq!(Poset::chain(3).linear_extensions(), vec![LinearOrder::identity(3)]);
        assert_eq!(Poset::antichain(3).count_linear_extensions(), 6);
        assert_eq!(seven_poset().count_linear_extensions(), permutation_filter_count(&seven_poset()));
        assert_eq!(seven_poset().count_linear_extensions(), 23);
        assert_eq!(Poset::antichain(0).count_linear_extensions(), 1);
    }

    #[test]
    fn extensions_are_lexicographic_and_respect_order() {
        let p = seven_poset();
        let exts = p.linear_extensions();
        let mut sorted = exts.clone();
        sorted.sort();
        assert_eq!(exts, sorted);
        for l in &exts {
            assert!(l.extends(&p));
        }
        // a known extension
        let known = LinearOrder::new(vec![7, 1, 3, 5, 4, 6, 2]).unwrap();
        assert!(exts.contains(&known));
    }

    #[test]
    fn incomparable_pairs() {
        assert_eq!(Poset::chain(3).incomparable_pair(), None);
        assert_eq!(Poset::antichain(2).incomparable_pair(), Some((1, 2)));
        let three_poset = Poset::from_covers(3, &[(3, 1)]).unwrap();
        assert_eq!(three_poset.incomparable_pair(), Some((1, 2)));
    }

    #[test]
    fn add_relation_closes_transitively() {
        let a = Poset::antichain(2).add_relation(1, 2).unwrap();
        assert_eq!(a, Poset::chain(2));

        let p = Poset::from_covers(3, &[(1, 3)]).unwrap();
        let q = p.add_relation(3, 2).unwrap();
        let oracle = closure_oracle(3, &[(1, 3), (3, 2)]);
        for (i, row) in oracle.iter().enumerate().skip(1) {
            for (j, &want) in row.iter().enumerate().skip(1) {
                assert_eq!(q.leq(i, j), want);
            }
        }
        assert!(q.leq(1, 2));
        assert!(q.is_cover(3, 2));
        assert_eq!(p.add_relation(1, 3), Err(Error::Comparable(1, 3)));
    }

    #[test]
    fn add_relation_split() {
        let p = Poset::from_covers(3, &[(3, 1)]).unwrap();
        let p1 = p.add_relation(1, 2).unwrap();
        let p2 = p.add_relation(2, 1).unwrap();
        assert_eq!(p1.covers(), &[(1, 2), (3, 1)]);
        assert_eq!(p2.covers(), &[(2, 1), (3, 1)]);
        assert_eq!(p1.count_linear_extensions() + p2.count_linear_extensions(), 3);
    }

    #[test]
    fn disjoint_union_shifts_labels() {
        let u = Poset::chain(2).disjoint_union(&Poset::chain(2));
        assert_eq!(u.len(), 4);
        assert_eq!(u.covers(), &[(1, 2), (3, 4)]);
        assert_eq!(Poset::chain(1).disjoint_union(&Poset::chain(1)), Poset::antichain(2));
    }

    #[test]
    fn relabel_seven_elements() {
        let left =
            Poset::from_covers(7, &[(1, 5), (1, 2), (4, 3), (3, 6), (6, 2), (7, 1), (7, 3)]).unwrap();
        let pi = Relabeling::new(vec![1, 2, 5, 3, 6, 4, 7]).unwrap();
        let right = left.relabel(&pi).unwrap();
        // node labelled x on the left is labelled π⁻¹(x) on the right
        let expected =
            Poset::from_covers(7, &[(1, 3), (1, 2), (6, 4), (4, 5), (5, 2), (7, 1), (7, 4)]).unwrap();
        assert_eq!(right, expected);
        assert_eq!(right.relabel(&pi.inverse()).unwrap(), left);
        assert_eq!(left.relabel(&Relabeling::identity(7)).unwrap(), left);
        assert_eq!(
            left.relabel(&Relabeling::identity(3)),
            Err(Error::SizeMismatch { expected: 7, found: 3 })
        );
    }

    #[test]
    fn relabeling_validation() {
        assert!(Relabeling::new(vec![1, 1]).is_err());
        assert!(LinearOrder::new(vec![2, 3]).is_err());
        let pi = Relabeling::new(vec![3, 1, 2]).unwrap();
        for i in 1..=3 {
            assert_eq!(pi.apply_inverse(pi.apply(i)), i);
        }
    }
}
