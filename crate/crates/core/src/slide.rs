//! Slide polynomials, fundamental quasisymmetric polynomials, and slide
//! expansions of restricted partition generating polynomials.

use std::collections::BTreeMap;
use std::fmt;

use crate::descent::{dominates, flatten, rdes, refines, StrongComposition, WeakComposition};
use crate::error::{Error, Result};
use crate::poly::IntPolynomial;
use crate::poset::{LinearOrder, Poset};
use crate::restrict::{well_label_permutation, RestrictionMap};

/// A finite integer combination of slide polynomials `Σ c_a 𝔉_a`.
///
/// Keys are stored trimmed, so `𝔉_(0,1)` and `𝔉_(0,1,0)` are one term.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SlideExpansion {
    terms: BTreeMap<WeakComposition, i64>,
}

impl SlideExpansion {
    pub fn new() -> SlideExpansion {
        SlideExpansion::default()
    }

    /// The single term `𝔉_a`.
    pub fn basis(a: WeakComposition) -> SlideExpansion {
        let mut e = SlideExpansion::new();
        e.add(a, 1);
        e
    }

    pub fn add(&mut self, a: WeakComposition, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let key = a.trimmed();
        let slot = self.terms.entry(key.clone()).or_insert(0);
        *slot += coeff;
        if *slot == 0 {
            self.terms.remove(&key);
        }
    }

    pub fn add_all(&mut self, other: &SlideExpansion) {
        for (a, &c) in &other.terms {
            self.add(a.clone(), c);
        }
    }

    pub fn coeff(&self, a: &WeakComposition) -> i64 {
        self.terms.get(a).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending reverse-lexicographic order of their indices.
    pub fn iter(&self) -> impl Iterator<Item = (&WeakComposition, i64)> {
        self.terms.iter().rev().map(|(a, &c)| (a, c))
    }

    pub fn is_positive(&self) -> bool {
        self.terms.values().all(|&c| c > 0)
    }

    /// Longest index among the terms.
    pub fn max_len(&self) -> usize {
        self.terms.keys().map(|a| a.len()).max().unwrap_or(0)
    }

    /// The monomial expansion in `nvars` variables.
    pub fn to_polynomial(&self, nvars: usize) -> Result<IntPolynomial> {
        let mut out = IntPolynomial::zero(nvars);
        for (a, &c) in &self.terms {
            out = &out + &slide_monomials(a, nvars)?.scale(c);
        }
        Ok(out)
    }

    /// Sends every index `a` to `flat(a)`, summing coefficients.
    pub fn flattened(&self) -> BTreeMap<StrongComposition, i64> {
        let mut out = BTreeMap::new();
        for (a, &c) in &self.terms {
            *out.entry(flatten(a)).or_insert(0) += c;
        }
        out.retain(|_, c| *c != 0);
        out
    }
}

impl fmt::Display for SlideExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (a, c)) in self.iter().enumerate() {
            let sign = if c < 0 { "-" } else { "+" };
            if n > 0 {
                write!(f, " {sign} ")?;
            } else if c < 0 {
                write!(f, "-")?;
            }
            if c.abs() != 1 {
                write!(f, "{}*", c.abs())?;
            }
            write!(f, "F{a}")?;
        }
        Ok(())
    }
}

// Weak compositions of `total` with `n` parts whose prefix sums stay at or
// above `floor`'s, in lexicographic order.
fn for_each_dominating<F: FnMut(&[u32])>(total: u32, n: usize, floor: &[u32], visit: &mut F) {
    fn rec<F: FnMut(&[u32])>(
        left: u32,
        n: usize,
        floor_prefix: &[u32],
        acc: u32,
        buf: &mut Vec<u32>,
        visit: &mut F,
    ) {
        let k = buf.len();
        if k == n {
            if left == 0 {
                visit(buf);
            }
            return;
        }
        if k + 1 == n {
            buf.push(left);
            if acc + left >= floor_prefix[k] {
                visit(buf);
            }
            buf.pop();
            return;
        }
        for x in 0..=left {
            if acc + x < floor_prefix[k] {
                continue;
            }
            buf.push(x);
            rec(left - x, n, floor_prefix, acc + x, buf, visit);
            buf.pop();
        }
    }
    let floor_prefix: Vec<u32> = (0..n)
        .scan(0, |s, k| {
            *s += floor.get(k).copied().unwrap_or(0);
            Some(*s)
        })
        .collect();
    if n == 0 {
        if total == 0 {
            visit(&[]);
        }
        return;
    }
    rec(total, n, &floor_prefix, 0, &mut Vec::with_capacity(n), visit);
}

/// `𝔉_a(x_1, …, x_n) = Σ x^b` over `b ⊵ a` with `flat(b)` refining `flat(a)`.
pub fn slide_monomials(a: &WeakComposition, n: usize) -> Result<IntPolynomial> {
    let a = a.padded(n)?;
    let alpha = flatten(&a);
    let mut out = IntPolynomial::zero(n);
    for_each_dominating(a.total(), n, a.parts(), &mut |b| {
        let wb = WeakComposition::new(b.to_vec());
        if refines(&flatten(&wb), &alpha) && dominates(&wb, &a) {
            out.add_term(b.to_vec(), 1);
        }
    });
    Ok(out)
}

/// `F_α(x_1, …, x_n)`.
pub fn fundamental_qsym(alpha: &StrongComposition, n: usize) -> IntPolynomial {
    let mut out = IntPolynomial::zero(n);
    for_each_dominating(alpha.total(), n, &[], &mut |b| {
        if refines(&flatten(&WeakComposition::new(b.to_vec())), alpha) {
            out.add_term(b.to_vec(), 1);
        }
    });
    out
}

/// Positive slide expansion of `𝔉_(P,ρ)` for a flag `ρ`.
///
/// The pair is first relabelled into a well-labelled flag, then each linear
/// extension contributes `𝔉_rdes(L,ρ)`, or nothing when it is infeasible.
pub fn expand_flagged(poset: &Poset, rho: &RestrictionMap) -> Result<SlideExpansion> {
    let pi = well_label_permutation(poset, rho)?;
    let q = poset.relabel(&pi)?;
    let sigma = rho.compose(&pi)?;
    let mut out = SlideExpansion::new();
    let mut failure = None;
    q.for_each_linear_extension(|seq| {
        let l = LinearOrder::new(seq.to_vec()).expect("extensions are permutations");
        match rdes(&l, &sigma) {
            Ok(c) => out.add(c, 1),
            Err(Error::Infeasible) => {}
            Err(e) => {
                failure.get_or_insert(e);
            }
        }
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(out),
    }
}

/// Signed slide expansion of an arbitrary polynomial.
///
/// Repeatedly peels off the reverse-lexicographically smallest support
/// element; every monomial of `𝔉_c` other than `x^c` strictly dominates `c`,
/// so the pivot never reappears.
pub fn expand_general(poly: &IntPolynomial) -> SlideExpansion {
    let n = poly.nvars();
    let mut out = SlideExpansion::new();
    for d in poly.degrees() {
        let mut rest = poly.homogeneous_component(d);
        while let Some((c, k)) = rest.revlex_min() {
            let slide = slide_monomials(&c, n).expect("pivot fits in the ambient variables");
            rest = &rest - &slide.scale(k);
            out.add(c, k);
        }
    }
    out
}

/// A linear order and a well-labelled flag whose generating polynomial is
/// `𝔉_a`.
///
/// The `j`-th nonzero part `a_r` becomes a block of consecutive ascending
/// labels bounded by `r`; earlier blocks take higher labels, so consecutive
/// blocks meet in a descent.
pub fn realize_slide(a: &WeakComposition) -> (LinearOrder, RestrictionMap) {
    let p = a.total() as usize;
    let mut seq = Vec::with_capacity(p);
    let mut rho = vec![0i64; p];
    let mut top = p;
    for (r, &part) in a.parts().iter().enumerate() {
        if part == 0 {
            continue;
        }
        let lo = top - part as usize + 1;
        for x in lo..=top {
            seq.push(x);
            rho[x - 1] = r as i64 + 1;
        }
        top = lo - 1;
    }
    let order = LinearOrder::new(seq).expect("blocks partition the labels");
    (order, RestrictionMap::new(rho))
}

/// `𝔉_a · 𝔉_b` via the disjoint union of two realizing chains.
pub fn slide_product_poset(a: &WeakComposition, b: &WeakComposition) -> Result<SlideExpansion> {
    let (la, ra) = realize_slide(a);
    let (lb, rb) = realize_slide(b);
    let poset = la.to_poset().disjoint_union(&lb.to_poset());
    expand_flagged(&poset, &ra.concat(&rb))
}

/// A shuffle of the words encoding two weak compositions, remembering which
/// word each letter came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShuffleWord {
    pub letters: Vec<u32>,
    pub from_a: Vec<bool>,
}

impl ShuffleWord {
    /// Ranges of the maximal weakly increasing runs.
    pub fn runs(&self) -> Vec<std::ops::Range<usize>> {
        let mut out = Vec::new();
        let mut start = 0;
        for k in 1..=self.letters.len() {
            if k == self.letters.len() || self.letters[k] < self.letters[k - 1] {
                out.push(start..k);
                start = k;
            }
        }
        out
    }

    /// `(Des(D), Des_A(D), Des_B(D))` for the word `D` obtained by putting
    /// the `s`-th run in slot `slots[s]` of `n` and leaving other slots
    /// empty.
    fn placed(&self, runs: &[std::ops::Range<usize>], slots: &[usize], n: usize) -> [Vec<u32>; 3] {
        let mut des = vec![0u32; n];
        let mut des_a = vec![0u32; n];
        let mut des_b = vec![0u32; n];
        for (run, &s) in runs.iter().zip(slots) {
            for k in run.clone() {
                des[s] += 1;
                if self.from_a[k] {
                    des_a[s] += 1;
                } else {
                    des_b[s] += 1;
                }
            }
        }
        [des, des_a, des_b]
    }
}

fn encode(c: &WeakComposition, n: usize, offset: u32) -> Vec<u32> {
    let mut w = Vec::new();
    for i in 0..n {
        let letter = 2 * (n - 1 - i) as u32 + offset;
        w.extend(std::iter::repeat_n(letter, c.get(i) as usize));
    }
    w
}

fn for_each_subset<F: FnMut(&[usize])>(n: usize, k: usize, visit: &mut F) {
    fn rec<F: FnMut(&[usize])>(start: usize, n: usize, k: usize, buf: &mut Vec<usize>, visit: &mut F) {
        if buf.len() == k {
            visit(buf);
            return;
        }
        for x in start..=(n - (k - buf.len())) {
            buf.push(x);
            rec(x + 1, n, k, buf, visit);
            buf.pop();
        }
    }
    if k <= n {
        rec(0, n, k, &mut Vec::with_capacity(k), visit);
    }
}

/// `𝔉_a · 𝔉_b` by the shuffle-and-bump rule on encoded words.
pub fn slide_product_bump(a: &WeakComposition, b: &WeakComposition) -> Result<SlideExpansion> {
    let n = a.support_len().max(b.support_len());
    let wa = encode(a, n, 1);
    let wb = encode(b, n, 2);
    let total = wa.len() + wb.len();
    let (a_pad, b_pad) = (a.padded(n)?, b.padded(n)?);
    let mut out = SlideExpansion::new();
    let mut failure = None;
    for_each_subset(total, wa.len(), &mut |pos| {
        if failure.is_some() {
            return;
        }
        let mut letters = Vec::with_capacity(total);
        let mut from_a = Vec::with_capacity(total);
        let (mut ia, mut ib) = (0, 0);
        for k in 0..total {
            if pos.get(ia) == Some(&k) {
                letters.push(wa[ia]);
                from_a.push(true);
                ia += 1;
            } else {
                letters.push(wb[ib]);
                from_a.push(false);
                ib += 1;
            }
        }
        let word = ShuffleWord { letters, from_a };
        match bump(&word, &a_pad, &b_pad, n) {
            Ok(Some(c)) => out.add(c, 1),
            Ok(None) => {}
            Err(e) => failure = Some(e),
        }
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(out),
    }
}

// Des of the dominance-least valid placement, or None when no placement of
// the runs is valid (the shuffle is outside the shuffle set).
fn bump(
    word: &ShuffleWord,
    a: &WeakComposition,
    b: &WeakComposition,
    n: usize,
) -> Result<Option<WeakComposition>> {
    let runs = word.runs();
    if runs.len() > n {
        return Ok(None);
    }
    let mut valid: Vec<WeakComposition> = Vec::new();
    for_each_subset(n, runs.len(), &mut |slots| {
        let [des, des_a, des_b] = word.placed(&runs, slots, n);
        if dominates(&WeakComposition::new(des_a), a) && dominates(&WeakComposition::new(des_b), b) {
            valid.push(WeakComposition::new(des));
        }
    });
    if valid.is_empty() {
        return Ok(None);
    }
    let minimal: Vec<&WeakComposition> = valid
        .iter()
        .filter(|c| !valid.iter().any(|d| d != *c && dominates(c, d)))
        .collect();
    let least = minimal[0];
    if minimal.len() != 1 || !valid.iter().all(|d| dominates(d, least)) {
        return Err(Error::BumpNotUnique {
            word: word.letters.clone(),
            candidates: minimal.len(),
        });
    }
    Ok(Some(least.clone()))
}

/// Compares `𝔉_{0^m × a}` with `x_{m+1}, x_{m+2}, …` set to zero against
/// `F_flat(a)(x_1, …, x_m)`.
pub fn check_stable_limit(a: &WeakComposition, m: usize) -> Result<bool> {
    let shifted = a.prepend_zeros(m);
    let n = m + a.support_len();
    let lhs = slide_monomials(&shifted, n)?.truncate_variables(m);
    let rhs = fundamental_qsym(&flatten(a), m);
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wc(v: &[u32]) -> WeakComposition {
        WeakComposition::new(v.to_vec())
    }

    fn poly(n: usize, terms: &[&[u32]]) -> IntPolynomial {
        let mut p = IntPolynomial::zero(n);
        for t in terms {
            p.add_term(t.to_vec(), 1);
        }
        p
    }

    #[test]
    fn slide_three_zero_two() {
        let got = slide_monomials(&wc(&[3, 0, 2]), 3).unwrap();
        assert_eq!(got, poly(3, &[&[3, 0, 2], &[3, 2, 0], &[3, 1, 1]]));
    }

    #[test]
    fn slide_needs_room() {
        assert_eq!(
            slide_monomials(&wc(&[0, 0, 1]), 2),
            Err(Error::LengthError { len: 3, nvars: 2 })
        );
        assert_eq!(slide_monomials(&wc(&[4]), 1).unwrap(), poly(1, &[&[4]]));
    }

    #[test]
    fn fundamental_three_two() {
        let alpha = StrongComposition::new(vec![3, 2]).unwrap();
        let want = poly(
            3,
            &[&[0, 3, 2], &[3, 0, 2], &[3, 2, 0], &[3, 1, 1], &[1, 2, 2], &[2, 1, 2]],
        );
        assert_eq!(fundamental_qsym(&alpha, 3), want);
    }

    #[test]
    fn realization_matches_slide() {
        for a in [vec![0, 0, 2], vec![2, 1], vec![1, 0, 2, 1], vec![0, 3]] {
            let a = wc(&a);
            let (l, rho) = realize_slide(&a);
            let g = crate::partitions::generating_polynomial(&l.to_poset(), &rho).unwrap();
            assert_eq!(g, slide_monomials(&a, a.len()).unwrap(), "{a}");
        }
    }

    #[test]
    fn round_trip_single_slide() {
        let a = wc(&[1, 0, 2, 1]);
        let e = expand_general(&slide_monomials(&a, 5).unwrap());
        assert_eq!(e, SlideExpansion::basis(a));
    }

    #[test]
    fn product_with_empty_factor() {
        let a = wc(&[0, 2, 1]);
        let one = wc(&[]);
        assert_eq!(slide_product_poset(&a, &one).unwrap(), SlideExpansion::basis(a.clone()));
        assert_eq!(slide_product_bump(&one, &a).unwrap(), SlideExpansion::basis(a));
    }

    #[test]
    fn small_bump_product() {
        let got = slide_product_bump(&wc(&[1]), &wc(&[0, 1])).unwrap();
        let mut want = SlideExpansion::new();
        want.add(wc(&[2]), 1);
        want.add(wc(&[1, 1]), 1);
        assert_eq!(got, want);
    }

    #[test]
    fn display_orders_terms() {
        let mut e = SlideExpansion::new();
        e.add(wc(&[1, 1, 0, 1]), -1);
        e.add(wc(&[0, 2, 0, 1]), 1);
        e.add(wc(&[0, 1, 1, 1]), 2);
        assert_eq!(e.to_string(), "-F(1,1,0,1) + F(0,2,0,1) + 2*F(0,1,1,1)");
    }

    #[test]
    fn stable_limit_small() {
        assert!(check_stable_limit(&wc(&[3, 2]), 5).unwrap());
        assert!(check_stable_limit(&wc(&[1]), 1).unwrap());
    }
}
