//! Partition posets, tableaux, and flagged Schur polynomials.

use std::fmt;

use crate::descent::rdes;
use crate::error::{Error, Result};
use crate::partitions::generating_polynomial;
use crate::poly::IntPolynomial;
use crate::poset::{LinearOrder, Poset};
use crate::restrict::RestrictionMap;
use crate::slide::SlideExpansion;

/// An integer partition `λ_1 ≥ … ≥ λ_ℓ > 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartitionShape(Vec<u32>);

impl PartitionShape {
    pub fn new(rows: Vec<u32>) -> Result<PartitionShape> {
        if rows.contains(&0) || rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidShape(rows));
        }
        Ok(PartitionShape(rows))
    }

    pub fn rows(&self) -> &[u32] {
        &self.0
    }

    /// Number of rows `ℓ(λ)`.
    pub fn num_rows(&self) -> usize {
        self.0.len()
    }

    /// Number of cells `|λ|`.
    pub fn size(&self) -> usize {
        self.0.iter().map(|&r| r as usize).sum()
    }

    /// Label of the cell in row `r`, column `c` (both 1-based).
    ///
    /// Rows are numbered from the bottom row up: the last row takes labels
    /// `1..=λ_ℓ` left to right, the row above it continues from there, and
    /// the first row takes the largest labels.
    pub fn cell_label(&self, r: usize, c: usize) -> usize {
        let below: usize = self.0[r..].iter().map(|&x| x as usize).sum();
        below + c
    }

    /// Every partition of `n`, in reverse lexicographic order.
    pub fn all_of_size(n: u32) -> Vec<PartitionShape> {
        fn rec(left: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<PartitionShape>) {
            if left == 0 {
                out.push(PartitionShape(cur.clone()));
                return;
            }
            for x in (1..=left.min(max)).rev() {
                cur.push(x);
                rec(left - x, x, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for PartitionShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// Row bounds `b_1 ≤ … ≤ b_ℓ`, all positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Flag(Vec<u32>);

impl Flag {
    pub fn new(bounds: Vec<u32>) -> Result<Flag> {
        if bounds.contains(&0) || bounds.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidFlag(bounds.iter().map(|&b| b as i64).collect()));
        }
        Ok(Flag(bounds))
    }

    /// `(n, …, n)` with `len` entries.
    pub fn constant(len: usize, n: u32) -> Flag {
        Flag(vec![n; len])
    }

    pub fn bounds(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// A filling of a partition shape, rows listed top to bottom.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    pub rows: Vec<Vec<u32>>,
}

impl Tableau {
    pub fn shape(&self) -> Vec<u32> {
        self.rows.iter().map(|r| r.len() as u32).collect()
    }

    fn columns_strict(&self) -> bool {
        self.rows
            .windows(2)
            .all(|w| w[1].iter().zip(&w[0]).all(|(lo, hi)| lo > hi))
    }

    pub fn is_semistandard(&self) -> bool {
        self.rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1])) && self.columns_strict()
    }

    pub fn is_standard(&self) -> bool {
        let mut all: Vec<u32> = self.rows.iter().flatten().copied().collect();
        all.sort_unstable();
        all.iter().enumerate().all(|(k, &v)| v as usize == k + 1)
            && self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]))
            && self.columns_strict()
    }

    /// Entry counts `(#1, #2, …)` in `nvars` slots.
    pub fn weight(&self, nvars: usize) -> Vec<u32> {
        let mut w = vec![0; nvars];
        for &v in self.rows.iter().flatten() {
            w[v as usize - 1] += 1;
        }
        w
    }

    /// For a standard tableau, the cell labels listed by increasing entry.
    pub fn linear_extension(&self, shape: &PartitionShape) -> Result<LinearOrder> {
        let mut cells: Vec<(u32, usize)> = Vec::with_capacity(shape.size());
        for (r, row) in self.rows.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                cells.push((v, shape.cell_label(r + 1, c + 1)));
            }
        }
        cells.sort_unstable();
        LinearOrder::new(cells.into_iter().map(|(_, x)| x).collect())
    }
}

/// The labelled poset of `λ`: each cell is covered by its right neighbour
/// (an ascent) and by the cell directly below it (a descent).
pub fn partition_poset(shape: &PartitionShape) -> Poset {
    let rows = shape.rows();
    let mut covers = Vec::new();
    for (r, &len) in rows.iter().enumerate() {
        for c in 1..=len as usize {
            let here = shape.cell_label(r + 1, c);
            if c < len as usize {
                covers.push((here, shape.cell_label(r + 1, c + 1)));
            }
            if r + 1 < rows.len() && c <= rows[r + 1] as usize {
                covers.push((here, shape.cell_label(r + 2, c)));
            }
        }
    }
    Poset::from_covers(shape.size(), &covers).expect("cell relations are acyclic")
}

/// `ρ_b`: every cell of row `i` is bounded by `b_i`.
pub fn flag_restriction(shape: &PartitionShape, flag: &Flag) -> Result<RestrictionMap> {
    if flag.len() != shape.num_rows() {
        return Err(Error::LengthMismatch {
            expected: shape.num_rows(),
            found: flag.len(),
        });
    }
    let mut bounds = vec![0i64; shape.size()];
    for (r, &len) in shape.rows().iter().enumerate() {
        for c in 1..=len as usize {
            bounds[shape.cell_label(r + 1, c) - 1] = i64::from(flag.bounds()[r]);
        }
    }
    Ok(RestrictionMap::new(bounds))
}

/// The flagged Schur polynomial `s_{λ,b}` as a restricted partition
/// generating polynomial.
pub fn flagged_schur(shape: &PartitionShape, flag: &Flag) -> Result<IntPolynomial> {
    let rho = flag_restriction(shape, flag)?;
    generating_polynomial(&partition_poset(shape), &rho)
}

/// Semistandard tableaux of shape `λ` with row `i` bounded by `b_i`, built
/// cell by cell without reference to any poset.
pub fn semistandard_tableaux(shape: &PartitionShape, flag: &Flag) -> Result<Vec<Tableau>> {
    if flag.len() != shape.num_rows() {
        return Err(Error::LengthMismatch {
            expected: shape.num_rows(),
            found: flag.len(),
        });
    }
    let mut rows: Vec<Vec<u32>> = shape.rows().iter().map(|&l| Vec::with_capacity(l as usize)).collect();
    let mut out = Vec::new();
    fill_ssyt(shape.rows(), flag.bounds(), 0, &mut rows, &mut out);
    Ok(out)
}

fn fill_ssyt(shape: &[u32], bounds: &[u32], r: usize, rows: &mut Vec<Vec<u32>>, out: &mut Vec<Tableau>) {
    if r == shape.len() {
        out.push(Tableau { rows: rows.clone() });
        return;
    }
    let c = rows[r].len();
    if c == shape[r] as usize {
        fill_ssyt(shape, bounds, r + 1, rows, out);
        return;
    }
    let left = rows[r].last().copied().unwrap_or(1);
    let above = if r > 0 { rows[r - 1][c] + 1 } else { 1 };
    for v in left.max(above)..=bounds[r] {
        rows[r].push(v);
        fill_ssyt(shape, bounds, r, rows, out);
        rows[r].pop();
    }
}

/// All standard Young tableaux of shape `λ`, in lexicographic order of rows.
pub fn standard_tableaux(shape: &PartitionShape) -> Vec<Tableau> {
    let n = shape.size() as u32;
    let mut rows: Vec<Vec<u32>> = vec![Vec::new(); shape.num_rows()];
    let mut out = Vec::new();
    place_syt(shape.rows(), 1, n, &mut rows, &mut out);
    out.sort();
    out
}

fn place_syt(shape: &[u32], next: u32, n: u32, rows: &mut Vec<Vec<u32>>, out: &mut Vec<Tableau>) {
    if next > n {
        out.push(Tableau { rows: rows.clone() });
        return;
    }
    for r in 0..shape.len() {
        let c = rows[r].len();
        let room = c < shape[r] as usize;
        let supported = r == 0 || rows[r - 1].len() > c;
        if room && supported {
            rows[r].push(next);
            place_syt(shape, next + 1, n, rows, out);
            rows[r].pop();
        }
    }
}

/// Positive slide expansion of `s_{λ,b}` indexed by standard tableaux.
pub fn flagged_schur_slide_expansion(shape: &PartitionShape, flag: &Flag) -> Result<SlideExpansion> {
    let rho = flag_restriction(shape, flag)?;
    let mut out = SlideExpansion::new();
    for t in standard_tableaux(shape) {
        let l = t.linear_extension(shape)?;
        match rdes(&l, &rho) {
            Ok(c) => out.add(c, 1),
            Err(Error::Infeasible) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}
