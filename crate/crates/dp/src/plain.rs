//! Dynamic programming over the plain (fully directed) families. These
//! counts are computed from the step sets alone, independently of the
//! constrained-class recurrences, so the two sides of every bisection or
//! filter identity come from different code paths.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::Zero;
use vcpath_core::{PlainFamily, Region, StepFilter};

use crate::Row;

/// Counts of plain paths by (horizontal length, end height).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PlainTable {
    family: PlainFamily,
    len_max: i64,
    rows: Vec<Row>,
}

impl PlainTable {
    pub fn family(&self) -> PlainFamily {
        self.family
    }

    pub fn len_max(&self) -> i64 {
        self.len_max
    }

    pub fn get(&self, len: i64, m: i64) -> &BigUint {
        assert!((0..=self.len_max).contains(&len));
        self.rows[len as usize].get(m)
    }

    pub fn column(&self, m: i64) -> Vec<BigUint> {
        (0..=self.len_max).map(|n| self.get(n, m).clone()).collect()
    }

    pub fn row(&self, len: i64) -> BTreeMap<i64, BigUint> {
        assert!((0..=self.len_max).contains(&len));
        let row = &self.rows[len as usize];
        (0..row.vals.len() as i64)
            .map(|i| (row.m_min + i, row.vals[i as usize].clone()))
            .filter(|(_, v)| !v.is_zero())
            .collect()
    }
}

fn row_bounds(region: Region, len: i64) -> (i64, i64) {
    match region {
        Region::Half => (-len, len),
        Region::Quarter => (0, len),
    }
}

/// Unfiltered counts of plain paths of each horizontal length up to
/// `len_max`. Steps with `dx = 2` pull from two columns back.
pub fn triangle(family: PlainFamily, len_max: i64) -> PlainTable {
    assert!(len_max >= 0);
    let region = family.region();
    let schroder = matches!(family, PlainFamily::Schroder | PlainFamily::Delannoy);
    let mut rows: Vec<Row> = Vec::new();
    for x in 0..=len_max {
        let (lo, hi) = row_bounds(region, x);
        let mut row = Row::zeros(lo, hi);
        if x == 0 {
            row.set(0, BigUint::from(1u32));
        } else {
            for m in lo..=hi {
                let p1 = &rows[(x - 1) as usize];
                let mut v = p1.get(m - 1) + p1.get(m + 1);
                if schroder {
                    if x >= 2 {
                        v += rows[(x - 2) as usize].get(m);
                    }
                } else {
                    v += p1.get(m);
                }
                row.set(m, v);
            }
        }
        rows.push(row);
    }
    PlainTable {
        family,
        len_max,
        rows,
    }
}

/// Counts of (Grand) Motzkin paths passing a flat-position filter, by
/// (length, end height). The filter fixes, per 1-based step index, whether
/// the flat step is available; up and down steps always are.
///
/// Panics if called with the smooth filter, which is about Schröder-type
/// columns rather than Motzkin-type indices.
pub fn filtered_motzkin(region: Region, filter: StepFilter, len_max: i64) -> PlainTable {
    assert!(len_max >= 0);
    let flat_allowed = |i: i64| -> bool {
        match filter {
            StepFilter::NoFlatAtOdd => i % 2 == 0,
            StepFilter::NoFlatAtEven => i % 2 == 1,
            StepFilter::SmoothAtColumns { .. } => {
                panic!("smooth filter does not apply to Motzkin steps")
            }
        }
    };
    let family = match region {
        Region::Half => PlainFamily::GrandMotzkin,
        Region::Quarter => PlainFamily::Motzkin,
    };
    let mut rows: Vec<Row> = Vec::new();
    for x in 0..=len_max {
        let (lo, hi) = row_bounds(region, x);
        let mut row = Row::zeros(lo, hi);
        if x == 0 {
            row.set(0, BigUint::from(1u32));
        } else {
            let p1 = &rows[(x - 1) as usize];
            for m in lo..=hi {
                let mut v = p1.get(m - 1) + p1.get(m + 1);
                if flat_allowed(x) {
                    v += p1.get(m);
                }
                row.set(m, v);
            }
        }
        rows.push(row);
    }
    PlainTable {
        family,
        len_max,
        rows,
    }
}

/// End-height counts of plain Schröder/Delannoy paths of exactly the given
/// width that do not change direction at any interior column
/// `x ≡ residue (mod 3)`.
///
/// The width is part of the filter (the final column is exempt), so this is
/// a per-width computation rather than a triangle. State tracks the last
/// arriving step because smoothness compares it with the departing one;
/// columns strictly inside a `(2, 0)` step are never step boundaries.
pub fn schroder_smooth_row(region: Region, residue: u8, width: i64) -> BTreeMap<i64, BigUint> {
    assert!(width >= 0);
    assert!(residue == 1 || residue == 2);
    // Step encoding: 0 = (1,1), 1 = (1,-1), 2 = (2,0); 3 = path start.
    const STEPS: [(i64, i64); 3] = [(1, 1), (1, -1), (2, 0)];
    let required =
        |x: i64| x >= 1 && x < width && x.rem_euclid(3) == i64::from(residue);
    let mut states: BTreeMap<(i64, i64, u8), BigUint> = BTreeMap::new();
    states.insert((0, 0, 3), BigUint::from(1u32));
    let mut done: BTreeMap<i64, BigUint> = BTreeMap::new();
    while let Some((&(x, y, last), _)) = states.iter().next() {
        let count = states.remove(&(x, y, last)).unwrap();
        if x == width {
            *done.entry(y).or_default() += count;
            continue;
        }
        for (s, &(dx, dy)) in STEPS.iter().enumerate() {
            let s = s as u8;
            if required(x) && s != last {
                continue;
            }
            let (nx, ny) = (x + dx, y + dy);
            if nx > width || (region == Region::Quarter && ny < 0) {
                continue;
            }
            *states.entry((nx, ny, s)).or_default() += &count;
        }
    }
    done
}
