//! Property suites over exhaustive and seeded random inputs.
//!
//! Each suite returns a [`Report`] counting the cases it examined and
//! describing every violation found.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::descent::{dominates, flatten, rdes, refines, wdes, WeakComposition};
use crate::error::{Error, Result};
use crate::gen::{all_posets, random_flag, random_poset, random_restriction};
use crate::partitions::{
    check_fundamental_decomposition, comp, enumerate_partitions, generating_polynomial, PPartition,
};
use crate::poly::IntPolynomial;
use crate::poset::{LinearOrder, Poset};
use crate::restrict::{is_feasible, rho_max_linear};
use crate::schur::{
    flagged_schur, flagged_schur_slide_expansion, semistandard_tableaux, Flag, PartitionShape,
};
use crate::slide::{
    expand_flagged, expand_general, slide_monomials, slide_product_bump, slide_product_poset,
};

const MAX_REPORTED: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Fundamental,
    Positivity,
    Product,
    Schur,
    Lemmas,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::Fundamental,
        Suite::Positivity,
        Suite::Product,
        Suite::Schur,
        Suite::Lemmas,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Fundamental => "fundamental",
            Suite::Positivity => "positivity",
            Suite::Product => "product",
            Suite::Schur => "schur",
            Suite::Lemmas => "lemmas",
        }
    }

    /// Size bound used when none is given.
    pub fn default_size(self) -> usize {
        match self {
            Suite::Fundamental => 5,
            _ => 6,
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite `{s}`")))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub suite: Suite,
    pub checked: usize,
    pub violation_count: usize,
    /// The first few violations, in the order found.
    pub violations: Vec<String>,
}

impl Report {
    fn new(suite: Suite) -> Report {
        Report {
            suite,
            checked: 0,
            violation_count: 0,
            violations: Vec::new(),
        }
    }

    fn fail(&mut self, msg: String) {
        self.violation_count += 1;
        if self.violations.len() < MAX_REPORTED {
            self.violations.push(msg);
        }
    }

    fn expect(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.fail(msg());
        }
    }

    pub fn passed(&self) -> bool {
        self.violation_count == 0
    }
}

/// Runs `suite` with inputs bounded by `size` and random choices drawn from
/// `seed`.
pub fn run(suite: Suite, size: usize, seed: u64) -> Report {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match suite {
        Suite::Fundamental => fundamental(size, &mut rng),
        Suite::Positivity => positivity(size, &mut rng),
        Suite::Product => product(size),
        Suite::Schur => schur(size),
        Suite::Lemmas => lemmas(size, &mut rng),
    }
}

fn describe(poset: &Poset, rho: &[i64]) -> String {
    format!("covers {:?} rho {:?}", poset.covers(), rho)
}

fn fundamental(size: usize, rng: &mut ChaCha8Rng) -> Report {
    let mut report = Report::new(Suite::Fundamental);
    for p in 0..=size {
        for poset in all_posets(p) {
            for _ in 0..3 {
                let rho = random_restriction(rng, p, 1, p as i64 + 2);
                let split = check_fundamental_decomposition(&poset, &rho);
                report.expect(split.is_ok(), || {
                    format!("{}: {:?}", describe(&poset, rho.bounds()), split.unwrap_err())
                });
                let whole = generating_polynomial(&poset, &rho).expect("lengths agree");
                let mut sum = IntPolynomial::zero(1);
                for l in poset.linear_extensions() {
                    let part = generating_polynomial(&l.to_poset(), &rho).expect("lengths agree");
                    sum = &sum + &part;
                }
                report.expect(whole == sum, || {
                    format!("{}: sum over extensions differs", describe(&poset, rho.bounds()))
                });
            }
        }
    }
    report
}

fn positivity(size: usize, rng: &mut ChaCha8Rng) -> Report {
    let mut report = Report::new(Suite::Positivity);
    for _ in 0..600 {
        let p = rng.gen_range(1..=size.max(1));
        let density = rng.gen_range(0.15..0.7);
        let poset = random_poset(rng, p, density);
        let rho = random_flag(rng, &poset, size as i64 + 1);
        let what = || describe(&poset, rho.bounds());
        match expand_flagged(&poset, &rho) {
            Ok(e) => {
                report.expect(e.is_positive(), || format!("{}: non-positive {e}", what()));
                let g = generating_polynomial(&poset, &rho).expect("lengths agree");
                let n = g.nvars().max(e.max_len());
                let m = e.to_polynomial(n).expect("indices fit");
                report.expect(m == g, || format!("{}: expansion {e} differs from oracle", what()));
            }
            Err(err) => report.expect(false, || format!("{}: {err}", what())),
        }
    }
    report
}

/// Weak compositions of length `len` with total at most `max_total`.
pub fn compositions_up_to(len: usize, max_total: u32) -> Vec<WeakComposition> {
    fn rec(len: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<WeakComposition>) {
        if cur.len() == len {
            out.push(WeakComposition::new(cur.clone()));
            return;
        }
        for x in 0..=left {
            cur.push(x);
            rec(len, left - x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(len, max_total, &mut Vec::new(), &mut out);
    out
}

fn product(size: usize) -> Report {
    let mut report = Report::new(Suite::Product);
    let comps = compositions_up_to(3, size as u32);
    for a in &comps {
        for b in &comps {
            if a.total() + b.total() > size as u32 {
                continue;
            }
            let n = a.support_len().max(b.support_len());
            let poset = slide_product_poset(a, b);
            let bump = slide_product_bump(a, b);
            let direct = expand_general(
                &(&slide_monomials(a, n).expect("fits") * &slide_monomials(b, n).expect("fits")),
            );
            match (poset, bump) {
                (Ok(x), Ok(y)) => {
                    report.expect(x == y && y == direct, || {
                        format!("{a}·{b}: poset {x}, bump {y}, direct {direct}")
                    });
                }
                (x, y) => report.expect(false, || format!("{a}·{b}: {x:?} / {y:?}")),
            }
        }
    }
    report
}

fn ssyt_polynomial(shape: &PartitionShape, flag: &Flag, nvars: usize) -> IntPolynomial {
    let mut out = IntPolynomial::zero(nvars);
    for t in semistandard_tableaux(shape, flag).expect("flag length matches") {
        out.add_term(t.weight(nvars), 1);
    }
    out
}

/// Weakly increasing sequences of length `len` with entries in `1..=max`.
pub fn flags_up_to(len: usize, max: u32) -> Vec<Flag> {
    fn rec(len: usize, lo: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Flag>) {
        if cur.len() == len {
            out.push(Flag::new(cur.clone()).expect("weakly increasing"));
            return;
        }
        for x in lo..=max {
            cur.push(x);
            rec(len, x, max, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(len, 1, max, &mut Vec::new(), &mut out);
    out
}

fn schur(size: usize) -> Report {
    let mut report = Report::new(Suite::Schur);
    for total in 0..=size as u32 {
        for shape in PartitionShape::all_of_size(total) {
            for n in 1..=4usize {
                let flag = Flag::constant(shape.num_rows(), n as u32);
                let g = flagged_schur(&shape, &flag).expect("flag length matches");
                let oracle = ssyt_polynomial(&shape, &flag, n);
                report.expect(g == oracle, || format!("{shape} in {n} variables differs from tableaux"));
                let mut g = g;
                g.widen(n);
                for i in 1..n {
                    report.expect(g.swap_variables(i, i + 1) == g, || {
                        format!("{shape} in {n} variables not symmetric in x{i}, x{}", i + 1)
                    });
                }
            }
            for flag in flags_up_to(shape.num_rows(), size as u32) {
                let g = flagged_schur(&shape, &flag).expect("flag length matches");
                let e = flagged_schur_slide_expansion(&shape, &flag).expect("flag length matches");
                let n = g.nvars().max(e.max_len());
                let ok = e.is_positive() && e.to_polynomial(n).expect("fits") == g;
                report.expect(ok, || format!("{shape} flag {:?}: expansion {e}", flag.bounds()));
            }
        }
    }
    report
}

fn lemmas(size: usize, rng: &mut ChaCha8Rng) -> Report {
    let mut report = Report::new(Suite::Lemmas);
    for p in 0..=size {
        let mut orders = Vec::new();
        Poset::antichain(p).for_each_linear_extension(|s| orders.push(s.to_vec()));
        for seq in orders {
            let l = LinearOrder::new(seq).expect("permutation");
            let poset = l.to_poset();
            for _ in 0..2 {
                let rho = random_restriction(rng, p, 1, p as i64 + 2);
                check_linear(&mut report, &l, &poset, &rho);
            }
        }
    }
    report
}

fn check_linear(
    report: &mut Report,
    l: &LinearOrder,
    poset: &Poset,
    rho: &crate::restrict::RestrictionMap,
) {
    let what = || format!("L={l} rho={rho}");
    let bar = rho_max_linear(l, rho).expect("lengths agree");
    let parts = enumerate_partitions(poset, rho).expect("lengths agree");
    let feasible = bar.bounds().iter().all(|&v| v >= 1);
    report.expect(feasible == !parts.is_empty() && feasible == is_feasible(poset, rho), || {
        format!("{}: feasibility mismatch", what())
    });
    if !feasible {
        return;
    }
    let g = generating_polynomial(poset, rho).expect("lengths agree");
    report.expect(g == generating_polynomial(poset, &bar).expect("lengths agree"), || {
        format!("{}: polynomial changes under the maximal restriction", what())
    });
    let top = PPartition::new(bar.bounds().iter().map(|&v| v as u32).collect());
    report.expect(top.is_valid(poset, rho), || format!("{}: maximal restriction is not a partition", what()));
    let floor = comp(&top, g.nvars()).expect("bounded");
    report.expect(
        g.iter().all(|(e, _)| dominates(&WeakComposition::new(e.to_vec()), &floor)),
        || format!("{}: support below comp of the maximal restriction", what()),
    );

    let r = rdes(l, rho).expect("feasible");
    let d = wdes(l, rho).expect("feasible");
    report.expect(refines(&flatten(&d), &flatten(&r)) && dominates(&r, &d), || {
        format!("{}: des {d} against rdes {r}", what())
    });
    let seq = l.seq();
    let flat_ascents = seq
        .windows(2)
        .all(|w| w[0] > w[1] || bar.get(w[0]) == bar.get(w[1]));
    report.expect((r == d) == flat_ascents, || {
        format!("{}: rdes {r}, des {d}, equal-ascent condition {flat_ascents}", what())
    });
    if flat_ascents {
        let s = slide_monomials(&r, g.nvars().max(r.len())).expect("fits");
        report.expect(s == g, || format!("{}: polynomial is not the slide of {r}", what()));
    }
}
