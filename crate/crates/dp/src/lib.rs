//! Recurrence-based big-integer counting for the twelve constrained path
//! classes, producing count triangles indexed by horizontal length `n` and
//! end height `m`.
//!
//! Every builder transcribes its class's recurrence term by term, boundary
//! rows included; nothing is derived from a generic stencil, so each
//! function is independently checkable against the enumeration oracle.

pub mod plain;

use num_bigint::BigUint;
use num_traits::Zero;
use vcpath_core::{Family, Leading, PathClass, Region};

/// A computed count triangle: rows `0..=n_max`, stored dense over each
/// row's reachable height interval, zero outside.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CountTable {
    class: PathClass,
    n_max: i64,
    rows: Vec<Row>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
struct Row {
    m_min: i64,
    vals: Vec<BigUint>,
}

impl Row {
    fn zeros(m_min: i64, m_max: i64) -> Row {
        let width = usize::try_from(m_max - m_min + 1).unwrap();
        Row {
            m_min,
            vals: vec![BigUint::zero(); width],
        }
    }

    fn get(&self, m: i64) -> &BigUint {
        static ZERO: std::sync::OnceLock<BigUint> = std::sync::OnceLock::new();
        let i = m - self.m_min;
        if i < 0 || i >= self.vals.len() as i64 {
            ZERO.get_or_init(BigUint::zero)
        } else {
            &self.vals[i as usize]
        }
    }

    fn set(&mut self, m: i64, v: BigUint) {
        let i = usize::try_from(m - self.m_min).unwrap();
        self.vals[i] = v;
    }
}

impl CountTable {
    pub fn class(&self) -> PathClass {
        self.class
    }

    pub fn n_max(&self) -> i64 {
        self.n_max
    }

    /// Count of paths ending at `(n, m)`; zero outside the reachable cone.
    /// Panics if `n` is outside the computed range.
    pub fn get(&self, n: i64, m: i64) -> &BigUint {
        assert!(
            (0..=self.n_max).contains(&n),
            "row {n} not computed (n_max = {})",
            self.n_max
        );
        self.rows[n as usize].get(m)
    }

    /// Inclusive height interval stored for row `n`.
    pub fn row_support(&self, n: i64) -> (i64, i64) {
        assert!((0..=self.n_max).contains(&n));
        let row = &self.rows[n as usize];
        (row.m_min, row.m_min + row.vals.len() as i64 - 1)
    }

    /// The fixed-height column `[count(0, m), ..., count(n_max, m)]`.
    pub fn column(&self, m: i64) -> Vec<BigUint> {
        (0..=self.n_max).map(|n| self.get(n, m).clone()).collect()
    }
}

/// Height interval for row `n` of `class`: symmetric about 0 in the half
/// plane, nonnegative in the quarter plane.
fn support(class: PathClass, n: i64) -> (i64, i64) {
    let h = class.max_height(n);
    match class.region {
        Region::Half => (-h, h),
        Region::Quarter => (0, h),
    }
}

fn seed_row(class: PathClass) -> Row {
    let (lo, hi) = support(class, 0);
    let mut row = Row::zeros(lo, hi);
    let seeds: &[i64] = match (class.family, class.region, class.leading) {
        // A length-0 path is a single optional vertical step.
        (_, _, Leading::Restricted) => &[0],
        (Family::MotzkinW | Family::DyckW, Region::Half, _) => &[-1, 0, 1],
        (Family::MotzkinW | Family::DyckW, Region::Quarter, _) => &[0, 1],
        (Family::SchroderW, Region::Half, _) => &[-2, 0, 2],
        (Family::SchroderW, Region::Quarter, _) => &[0, 2],
    };
    for &m in seeds {
        row.set(m, BigUint::from(1u32));
    }
    row
}

fn build(class: PathClass, n_max: i64, step: impl Fn(&[Row], i64, i64) -> BigUint) -> CountTable {
    assert!(n_max >= 0, "n_max must be nonnegative");
    let mut rows = Vec::with_capacity(usize::try_from(n_max).unwrap() + 1);
    rows.push(seed_row(class));
    for n in 1..=n_max {
        let (lo, hi) = support(class, n);
        let mut row = Row::zeros(lo, hi);
        for m in lo..=hi {
            row.set(m, step(&rows, n, m));
        }
        rows.push(row);
    }
    CountTable {
        class,
        n_max,
        rows,
    }
}

/// Rows 0..=n−1 plus the convention that any row with negative index is
/// identically zero (needed by the two-column Schröder lookback).
fn prev(rows: &[Row], n: i64, back: i64) -> Option<&Row> {
    let i = n - back;
    (i >= 0).then(|| &rows[i as usize])
}

fn sum(terms: &[(&BigUint, u32)]) -> BigUint {
    let mut acc = BigUint::zero();
    for (v, c) in terms {
        acc += *v * *c;
    }
    acc
}

/// Half-plane MotzkinW triangle: 5-term stencil with coefficients
/// (1, 2, 3, 2, 1) over heights m+2 .. m−2.
pub fn count_motzkinw_half(n_max: i64, leading: Leading) -> CountTable {
    let class = PathClass::new(Family::MotzkinW, Region::Half, leading);
    build(class, n_max, |rows, n, m| {
        let p = prev(rows, n, 1).unwrap();
        sum(&[
            (p.get(m + 2), 1),
            (p.get(m + 1), 2),
            (p.get(m), 3),
            (p.get(m - 1), 2),
            (p.get(m - 2), 1),
        ])
    })
}

/// Quarter-plane MotzkinW triangle: the half-plane stencil in the
/// interior, with the printed boundary rows at m = 0 and m = 1.
pub fn count_motzkinw_quarter(n_max: i64, leading: Leading) -> CountTable {
    let class = PathClass::new(Family::MotzkinW, Region::Quarter, leading);
    build(class, n_max, |rows, n, m| {
        let p = prev(rows, n, 1).unwrap();
        match m {
            0 => sum(&[(p.get(2), 1), (p.get(1), 2), (p.get(0), 2)]),
            1 => sum(&[(p.get(3), 1), (p.get(2), 2), (p.get(1), 3), (p.get(0), 2)]),
            _ => sum(&[
                (p.get(m + 2), 1),
                (p.get(m + 1), 2),
                (p.get(m), 3),
                (p.get(m - 1), 2),
                (p.get(m - 2), 1),
            ]),
        }
    })
}

/// Half-plane DyckW triangle: 5-term stencil with coefficients
/// (1, 1, 2, 1, 1) over heights m+2 .. m−2.
pub fn count_dyckw_half(n_max: i64, leading: Leading) -> CountTable {
    let class = PathClass::new(Family::DyckW, Region::Half, leading);
    build(class, n_max, |rows, n, m| {
        let p = prev(rows, n, 1).unwrap();
        sum(&[
            (p.get(m + 2), 1),
            (p.get(m + 1), 1),
            (p.get(m), 2),
            (p.get(m - 1), 1),
            (p.get(m - 2), 1),
        ])
    })
}

/// Quarter-plane DyckW triangle with the printed boundary rows.
pub fn count_dyckw_quarter(n_max: i64, leading: Leading) -> CountTable {
    let class = PathClass::new(Family::DyckW, Region::Quarter, leading);
    build(class, n_max, |rows, n, m| {
        let p = prev(rows, n, 1).unwrap();
        match m {
            0 => sum(&[(p.get(2), 1), (p.get(1), 1), (p.get(0), 1)]),
            1 => sum(&[(p.get(3), 1), (p.get(2), 1), (p.get(1), 2), (p.get(0), 1)]),
            _ => sum(&[
                (p.get(m + 2), 1),
                (p.get(m + 1), 1),
                (p.get(m), 2),
                (p.get(m - 1), 1),
                (p.get(m - 2), 1),
            ]),
        }
    })
}

/// Half-plane SchroderW triangle: 7-term stencil over the two previous
/// columns, coefficients (1, 1, 2, 1, 2, 1, 1) over
/// (n−1, m+3), (n−2, m+2), (n−1, m+1), (n−2, m), (n−1, m−1), (n−2, m−2),
/// (n−1, m−3); rows with negative index count as zero.
pub fn count_schroderw_half(n_max: i64, leading: Leading) -> CountTable {
    let class = PathClass::new(Family::SchroderW, Region::Half, leading);
    let zero = BigUint::zero();
    build(class, n_max, move |rows, n, m| {
        let p1 = prev(rows, n, 1).unwrap();
        let g2 = |m: i64| prev(rows, n, 2).map_or(&zero, |r| r.get(m));
        sum(&[
            (p1.get(m + 3), 1),
            (g2(m + 2), 1),
            (p1.get(m + 1), 2),
            (g2(m), 1),
            (p1.get(m - 1), 2),
            (g2(m - 2), 1),
            (p1.get(m - 3), 1),
        ])
    })
}

/// Quarter-plane SchroderW triangle with the printed boundary rows at
/// m = 0, 1, 2 and the same two-column lookback.
pub fn count_schroderw_quarter(n_max: i64, leading: Leading) -> CountTable {
    let class = PathClass::new(Family::SchroderW, Region::Quarter, leading);
    let zero = BigUint::zero();
    build(class, n_max, move |rows, n, m| {
        let p1 = prev(rows, n, 1).unwrap();
        let g2 = |m: i64| prev(rows, n, 2).map_or(&zero, |r| r.get(m));
        match m {
            0 => sum(&[
                (p1.get(3), 1),
                (g2(2), 1),
                (p1.get(1), 2),
                (g2(0), 1),
            ]),
            1 => sum(&[
                (p1.get(4), 1),
                (g2(3), 1),
                (p1.get(2), 2),
                (g2(1), 1),
                (p1.get(0), 1),
            ]),
            2 => sum(&[
                (p1.get(5), 1),
                (g2(4), 1),
                (p1.get(3), 2),
                (g2(2), 1),
                (p1.get(1), 2),
                (g2(0), 1),
            ]),
            _ => sum(&[
                (p1.get(m + 3), 1),
                (g2(m + 2), 1),
                (p1.get(m + 1), 2),
                (g2(m), 1),
                (p1.get(m - 1), 2),
                (g2(m - 2), 1),
                (p1.get(m - 3), 1),
            ]),
        }
    })
}

/// Build the triangle for any of the twelve classes.
pub fn count_table(class: PathClass, n_max: i64) -> CountTable {
    match (class.family, class.region) {
        (Family::MotzkinW, Region::Half) => count_motzkinw_half(n_max, class.leading),
        (Family::MotzkinW, Region::Quarter) => count_motzkinw_quarter(n_max, class.leading),
        (Family::DyckW, Region::Half) => count_dyckw_half(n_max, class.leading),
        (Family::DyckW, Region::Quarter) => count_dyckw_quarter(n_max, class.leading),
        (Family::SchroderW, Region::Half) => count_schroderw_half(n_max, class.leading),
        (Family::SchroderW, Region::Quarter) => count_schroderw_quarter(n_max, class.leading),
    }
}

/// The fixed-height column of a class's triangle, `n = 0..=n_max`.
pub fn sequence(class: PathClass, m: i64, n_max: i64) -> Vec<BigUint> {
    count_table(class, n_max).column(m)
}
