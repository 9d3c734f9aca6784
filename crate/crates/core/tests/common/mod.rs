//! Brute-force oracles shared by the integration tests. None of these call
//! into the enumeration, restriction or expansion code under test; they
//! only read the order relation of a `Poset`.

#![allow(dead_code)]

use std::collections::BTreeMap;

use flagpart::{IntPolynomial, Poset};

/// Every permutation of `1..=p` that lists smaller elements first.
pub fn extensions_by_filter(poset: &Poset) -> Vec<Vec<usize>> {
    let p = poset.len();
    let mut out = Vec::new();
    let mut seq = Vec::new();
    let mut used = vec![false; p + 1];
    permute(p, &mut seq, &mut used, &mut |s| {
        let ok = (0..p).all(|a| (a + 1..p).all(|b| !poset.lt(s[b], s[a])));
        if ok {
            out.push(s.to_vec());
        }
    });
    out
}

pub fn permute<F: FnMut(&[usize])>(p: usize, seq: &mut Vec<usize>, used: &mut [bool], visit: &mut F) {
    if seq.len() == p {
        visit(seq);
        return;
    }
    for x in 1..=p {
        if !used[x] {
            used[x] = true;
            seq.push(x);
            permute(p, seq, used, visit);
            seq.pop();
            used[x] = false;
        }
    }
}

/// All partitions, found by assigning labels `1, 2, …` in turn with values
/// up to `ρ(i)` and checking every comparable pair once both ends are set.
pub fn brute_partitions(poset: &Poset, rho: &[i64]) -> Vec<Vec<u32>> {
    let p = poset.len();
    let mut out = Vec::new();
    let mut f = vec![0u32; p + 1];
    fn ok(poset: &Poset, f: &[u32], k: usize) -> bool {
        // j < k, so j ≺ k is weak and k ≺ j is strict
        (1..k).all(|j| {
            if poset.lt(j, k) {
                f[j] <= f[k]
            } else if poset.lt(k, j) {
                f[k] < f[j]
            } else {
                true
            }
        })
    }
    fn rec(poset: &Poset, rho: &[i64], k: usize, f: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        let p = poset.len();
        if k > p {
            out.push(f[1..].to_vec());
            return;
        }
        let hi = rho[k - 1];
        let mut v = 1;
        while i64::from(v) <= hi {
            f[k] = v;
            if ok(poset, f, k) {
                rec(poset, rho, k + 1, f, out);
            }
            v += 1;
        }
        f[k] = 0;
    }
    rec(poset, rho, 1, &mut f, &mut out);
    out.sort();
    out
}

/// Exponent map of `Σ_f x_{f(1)} ⋯ x_{f(p)}`, trailing zeros trimmed.
pub fn brute_polynomial(poset: &Poset, rho: &[i64]) -> BTreeMap<Vec<u32>, i64> {
    let mut out = BTreeMap::new();
    for f in brute_partitions(poset, rho) {
        let n = f.iter().copied().max().unwrap_or(0) as usize;
        let mut e = vec![0u32; n];
        for v in f {
            e[v as usize - 1] += 1;
        }
        *out.entry(e).or_insert(0) += 1;
    }
    out
}

/// Trimmed exponent map of a library polynomial, for comparison with the
/// oracles above.
pub fn as_map(poly: &IntPolynomial) -> BTreeMap<Vec<u32>, i64> {
    poly.iter()
        .map(|(e, c)| {
            let len = e.iter().rposition(|&x| x != 0).map_or(0, |k| k + 1);
            (e[..len].to_vec(), c)
        })
        .collect()
}

/// All weak compositions of `total` with exactly `n` parts.
pub fn weak_compositions(total: u32, n: usize) -> Vec<Vec<u32>> {
    if n == 0 {
        return if total == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in weak_compositions(total - first, n - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn partial_sums(v: &[u32]) -> Vec<u32> {
    v.iter()
        .scan(0, |s, &x| {
            *s += x;
            Some(*s)
        })
        .collect()
}

/// Set-of-partial-sums refinement on the nonzero parts.
pub fn refines_oracle(beta: &[u32], alpha: &[u32]) -> bool {
    let b: Vec<u32> = beta.iter().copied().filter(|&x| x > 0).collect();
    let a: Vec<u32> = alpha.iter().copied().filter(|&x| x > 0).collect();
    let sb = partial_sums(&b);
    let sa = partial_sums(&a);
    sb.last() == sa.last() && sa.iter().all(|s| sb.contains(s))
}

pub fn dominates_oracle(b: &[u32], a: &[u32]) -> bool {
    let n = a.len().max(b.len());
    let get = |v: &[u32], k: usize| v.get(k).copied().unwrap_or(0);
    let mut sb = 0;
    let mut sa = 0;
    (0..n).all(|k| {
        sb += get(b, k);
        sa += get(a, k);
        sb >= sa
    })
}

pub fn trim(v: &[u32]) -> Vec<u32> {
    let len = v.iter().rposition(|&x| x != 0).map_or(0, |k| k + 1);
    v[..len].to_vec()
}

/// `𝔉_a` in `n` variables straight from its definition.
pub fn brute_slide(a: &[u32], n: usize) -> BTreeMap<Vec<u32>, i64> {
    let total = a.iter().sum();
    weak_compositions(total, n)
        .into_iter()
        .filter(|b| dominates_oracle(b, a) && refines_oracle(b, a))
        .map(|b| (trim(&b), 1))
        .collect()
}

/// `F_α` in `n` variables straight from its definition.
pub fn brute_fundamental(alpha: &[u32], n: usize) -> BTreeMap<Vec<u32>, i64> {
    let total = alpha.iter().sum();
    weak_compositions(total, n)
        .into_iter()
        .filter(|b| refines_oracle(b, alpha))
        .map(|b| (trim(&b), 1))
        .collect()
}

/// Adds `c · m` into `acc`, dropping zero coefficients.
pub fn accumulate(acc: &mut BTreeMap<Vec<u32>, i64>, m: &BTreeMap<Vec<u32>, i64>, c: i64) {
    for (k, &v) in m {
        let e = acc.entry(k.clone()).or_insert(0);
        *e += c * v;
        if *e == 0 {
            acc.remove(k);
        }
    }
}

/// Monomial expansion of `Σ c_a 𝔉_a` using the brute slide oracle.
pub fn expand_slides<'a, I>(terms: I, n: usize) -> BTreeMap<Vec<u32>, i64>
where
    I: IntoIterator<Item = (&'a [u32], i64)>,
{
    let mut acc = BTreeMap::new();
    for (a, c) in terms {
        accumulate(&mut acc, &brute_slide(a, n), c);
    }
    acc
}

/// Semistandard fillings of `shape` with row `i` bounded by `bounds[i]`,
/// filled in reading order and rejected as soon as a cell breaks the row or
/// column condition against its left or upper neighbour.
pub fn brute_ssyt(shape: &[u32], bounds: &[u32]) -> Vec<Vec<Vec<u32>>> {
    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len as usize).map(move |c| (r, c)))
        .collect();
    let mut out = Vec::new();
    let mut t: Vec<Vec<u32>> = shape.iter().map(|&l| vec![0; l as usize]).collect();
    fn rec(
        k: usize,
        cells: &[(usize, usize)],
        bounds: &[u32],
        t: &mut Vec<Vec<u32>>,
        out: &mut Vec<Vec<Vec<u32>>>,
    ) {
        if k == cells.len() {
            out.push(t.clone());
            return;
        }
        let (r, c) = cells[k];
        for v in 1..=bounds[r] {
            if c > 0 && t[r][c - 1] > v {
                continue;
            }
            if r > 0 && t[r - 1][c] >= v {
                continue;
            }
            t[r][c] = v;
            rec(k + 1, cells, bounds, t, out);
        }
    }
    rec(0, &cells, bounds, &mut t, &mut out);
    out
}

pub fn ssyt_polynomial(shape: &[u32], bounds: &[u32]) -> BTreeMap<Vec<u32>, i64> {
    let mut out = BTreeMap::new();
    for t in brute_ssyt(shape, bounds) {
        let n = bounds.iter().copied().max().unwrap_or(0) as usize;
        let mut e = vec![0u32; n];
        for v in t.iter().flatten() {
            e[*v as usize - 1] += 1;
        }
        *out.entry(trim(&e)).or_insert(0) += 1;
    }
    out
}
