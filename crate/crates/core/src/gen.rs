//! Exhaustive and seeded random generation of posets, restrictions and
//! flags.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::poset::Poset;
use crate::restrict::RestrictionMap;

/// Every partial order on `1..=p` (labelled, not up to isomorphism).
///
/// Each unordered pair of labels is unrelated, or related one way or the
/// other; a choice is kept when the resulting strict relation is
/// transitive.
pub fn all_posets(p: usize) -> Vec<Poset> {
    let pairs: Vec<(usize, usize)> = (1..=p)
        .flat_map(|i| ((i + 1)..=p).map(move |j| (i, j)))
        .collect();
    let mut out = Vec::new();
    let mut state = vec![0u8; pairs.len()];
    let mut lt = vec![false; (p + 1) * (p + 1)];
    loop {
        lt.iter_mut().for_each(|x| *x = false);
        let mut rel = Vec::new();
        for (&(i, j), &s) in pairs.iter().zip(&state) {
            match s {
                1 => {
                    lt[i * (p + 1) + j] = true;
                    rel.push((i, j));
                }
                2 => {
                    lt[j * (p + 1) + i] = true;
                    rel.push((j, i));
                }
                _ => {}
            }
        }
        let transitive = (1..=p).all(|a| {
            (1..=p).all(|b| {
                !lt[a * (p + 1) + b] || (1..=p).all(|c| !lt[b * (p + 1) + c] || lt[a * (p + 1) + c])
            })
        });
        if transitive {
            out.push(Poset::from_covers(p, &rel).expect("transitive and antisymmetric"));
        }
        // ternary odometer
        let mut k = 0;
        while k < state.len() && state[k] == 2 {
            state[k] = 0;
            k += 1;
        }
        if k == state.len() {
            break;
        }
        state[k] += 1;
    }
    out
}

/// A random poset: relations `σ(i) ≺ σ(j)` for `i < j` drawn independently
/// with probability `density` along a random permutation `σ`.
pub fn random_poset<R: Rng>(rng: &mut R, p: usize, density: f64) -> Poset {
    let mut sigma: Vec<usize> = (1..=p).collect();
    sigma.shuffle(rng);
    let mut rel = Vec::new();
    for i in 0..p {
        for j in (i + 1)..p {
            if rng.gen_bool(density) {
                rel.push((sigma[i], sigma[j]));
            }
        }
    }
    Poset::from_covers(p, &rel).expect("relations follow a linear order")
}

/// Independent uniform bounds in `lo..=hi`.
pub fn random_restriction<R: Rng>(rng: &mut R, p: usize, lo: i64, hi: i64) -> RestrictionMap {
    RestrictionMap::new((0..p).map(|_| rng.gen_range(lo..=hi)).collect())
}

/// A random flag on `poset` with values in `1..=max`.
///
/// Each component of the ascending-cover graph draws a value; values are
/// then raised along descending covers until every descending cover is
/// weakly increasing.
pub fn random_flag<R: Rng>(rng: &mut R, poset: &Poset, max: i64) -> RestrictionMap {
    let p = poset.len();
    let mut comp: Vec<usize> = (0..=p).collect();
    // ascending covers merge; repeat until stable (at most p passes)
    let mut changed = true;
    while changed {
        changed = false;
        for &(i, j) in poset.covers() {
            if i < j && comp[i] != comp[j] {
                let m = comp[i].min(comp[j]);
                let (a, b) = (comp[i], comp[j]);
                for c in comp.iter_mut() {
                    if *c == a || *c == b {
                        *c = m;
                    }
                }
                changed = true;
            }
        }
    }
    let mut value = vec![0i64; p + 1];
    for x in 1..=p {
        if comp[x] == x {
            value[x] = rng.gen_range(1..=max);
        }
    }
    let mut changed = true;
    while changed {
        changed = false;
        for &(i, j) in poset.covers() {
            if i > j && value[comp[i]] > value[comp[j]] {
                value[comp[j]] = value[comp[i]];
                changed = true;
            }
        }
    }
    RestrictionMap::new((1..=p).map(|x| value[comp[x]]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::restrict::is_p_flag;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn labelled_poset_counts() {
        let counts: Vec<usize> = (0..=4).map(|p| all_posets(p).len()).collect();
        assert_eq!(counts, vec![1, 1, 3, 19, 219]);
    }

    #[test]
    fn random_flags_are_flags() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let p = rng.gen_range(0..=6);
            let poset = random_poset(&mut rng, p, 0.4);
            let rho = random_flag(&mut rng, &poset, 5);
            assert!(is_p_flag(&poset, &rho));
        }
    }
}
