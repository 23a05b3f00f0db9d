//! Functional-equation checks: each quarter-plane class satisfies a
//! kernel equation `K(x,y)·F(x,y) = N(x,y)` whose right side involves only
//! the kernel polynomial and a few low-height column series. Both sides
//! are built from independently computed tables, so a match validates the
//! recurrences, the tables, and the equation shape at once.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use vcpath_core::{Family, PathClass, Region};
use vcpath_dp::count_table;

use crate::bivariate::BivariateSeries;
use crate::kernel::KernelId;
use crate::laurent::LaurentPoly;
use crate::series::TruncatedSeries;

type U = TruncatedSeries<BigRational>;

/// The kernel polynomial associated with a step family.
pub fn kernel_for_family(family: Family) -> KernelId {
    match family {
        Family::MotzkinW => KernelId::MotzkinW,
        Family::DyckW => KernelId::DyckW,
        Family::SchroderW => KernelId::SchroderW,
    }
}

/// The bivariate counting series of a class, truncated so that all
/// x-powers below `order` are present, with exact table values.
pub fn class_series_from_counts(class: PathClass, order: i64) -> BivariateSeries {
    let mut out = BivariateSeries::zero(1, order);
    if order <= 0 {
        return out;
    }
    let table = count_table(class, order - 1);
    for n in 0..order {
        let (lo, hi) = table.row_support(n);
        let mut row = LaurentPoly::new();
        for m in lo..=hi {
            let v = table.get(n, m);
            if !v.is_zero() {
                row.set_coeff(m, BigRational::from_integer(BigInt::from(v.clone())));
            }
        }
        out.set_coeff(n, row);
    }
    out
}

/// A fixed-height column of a class table as a univariate series: the
/// auxiliary unknowns appearing in the kernel equations.
#[derive(Clone, Debug)]
pub struct SectionSeries {
    pub class: PathClass,
    pub height: i64,
    pub series: U,
}

pub fn section_series(class: PathClass, height: i64, order: i64) -> SectionSeries {
    let mut series = U::zero(1, order);
    if order > 0 {
        let table = count_table(class, order - 1);
        for (n, v) in table.column(height).iter().enumerate() {
            if !v.is_zero() {
                series.set_coeff(n as i64, BigRational::from_integer(BigInt::from(v.clone())));
            }
        }
    }
    SectionSeries {
        class,
        height,
        series,
    }
}

/// Outcome of checking one class' kernel equation to a given x-order.
#[derive(Clone, Debug)]
pub struct KernelEquationReport {
    pub class: PathClass,
    /// X-order up to which the residual was verified to vanish.
    pub checked_order: i64,
    /// Lowest offending `(n, m)` if the residual is nonzero.
    pub first_failure: Option<(i64, i64)>,
}

impl KernelEquationReport {
    pub fn is_ok(&self) -> bool {
        self.first_failure.is_none()
    }
}

/// Verifies `K·F = N` for a quarter-plane class, where `F` and the column
/// series in `N` come from the counting tables. `order` is the exclusive
/// x-order to check.
pub fn verify_kernel_equation(class: PathClass, order: i64) -> KernelEquationReport {
    assert_eq!(
        class.region,
        Region::Quarter,
        "kernel equations are stated for quarter-plane classes"
    );
    let work = order + 2;
    let gf = class_series_from_counts(class, order);
    let kernel = BivariateSeries::from_int_terms(
        1,
        work,
        kernel_for_family(class.family).terms(),
    );
    let lhs = kernel.mul(&gf);

    let poly = |terms: &[(i64, i64, i64)]| BivariateSeries::from_int_terms(1, work, terms);
    let col = |height: i64| {
        BivariateSeries::lift_univariate(&section_series(class, height, order + 1).series, 0)
    };
    // Head term, multiplier of the ground column, and per-column
    // multipliers for the higher sections.
    let (head, ground_mult, sections): (_, _, Vec<(i64, BivariateSeries)>) = match class.id() {
        "mwr" => (
            poly(&[(0, 2, 1)]),
            poly(&[(1, 0, 1), (1, 1, 2), (1, 2, 1)]),
            vec![(1, poly(&[(1, 1, 1)]))],
        ),
        "mw" => (
            poly(&[(0, 2, 1), (0, 3, 1)]),
            poly(&[(1, 0, 1), (1, 1, 2), (1, 2, 1)]),
            vec![(1, poly(&[(1, 1, 1)]))],
        ),
        "dwr" => (
            poly(&[(0, 2, 1)]),
            poly(&[(1, 0, 1), (1, 1, 1), (1, 2, 1)]),
            vec![(1, poly(&[(1, 1, 1)]))],
        ),
        "dw" => (
            poly(&[(0, 2, 1), (0, 3, 1)]),
            poly(&[(1, 0, 1), (1, 1, 1), (1, 2, 1)]),
            vec![(1, poly(&[(1, 1, 1)]))],
        ),
        "cwr" => (
            poly(&[(0, 3, 1)]),
            poly(&[(1, 0, 1), (2, 1, 1), (1, 2, 2), (1, 4, 1)]),
            vec![
                (1, poly(&[(1, 1, 1), (2, 2, 1)])),
                (2, poly(&[(1, 2, 1)])),
            ],
        ),
        "cw" => (
            poly(&[(0, 3, 1), (0, 5, 1)]),
            poly(&[(1, 0, 1), (2, 1, 1), (1, 2, 2), (1, 4, 1)]),
            vec![
                (1, poly(&[(1, 1, 1), (2, 2, 1)])),
                (2, poly(&[(1, 2, 1)])),
            ],
        ),
        other => panic!("no kernel equation catalogued for class {other}"),
    };
    let mut rhs = head.sub(&ground_mult.mul(&col(0)));
    for (height, mult) in sections {
        rhs = rhs.sub(&mult.mul(&col(height)));
    }

    let residual = lhs.sub(&rhs);
    let checked_order = residual.order();
    let first_failure = residual
        .terms()
        .flat_map(|(n, row)| row.min_power().map(|m| (n, m)))
        .next();
    KernelEquationReport {
        class,
        checked_order,
        first_failure,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use vcpath_core::Leading;

    #[test]
    fn all_six_quarter_classes_satisfy_their_equations() {
        for id in ["mwr", "mw", "dwr", "dw", "cwr", "cw"] {
            let class = PathClass::from_id(id).unwrap();
            let report = verify_kernel_equation(class, 8);
            assert!(
                report.is_ok(),
                "{id}: first failure {:?}",
                report.first_failure
            );
            assert!(report.checked_order >= 8);
        }
    }

    #[test]
    fn a_perturbed_equation_is_caught() {
        // Dropping the column corrections must leave a nonzero residual;
        // the equation is not satisfied by the kernel product alone.
        let class = PathClass::new(Family::DyckW, Region::Quarter, Leading::Restricted);
        let gf = class_series_from_counts(class, 6);
        let kernel = BivariateSeries::from_int_terms(1, 8, KernelId::DyckW.terms());
        let lhs = kernel.mul(&gf);
        let wrong_head = BivariateSeries::from_int_terms(1, 8, &[(0, 2, 1), (0, 3, 1)]);
        let residual = lhs.sub(&wrong_head);
        assert!(!residual.is_zero());
    }

    #[test]
    fn section_series_match_ground_truth_columns() {
        let class = PathClass::from_id("dwr").unwrap();
        let s = section_series(class, 0, 6);
        for (n, v) in [1i64, 1, 3, 11, 46, 207].iter().enumerate() {
            assert_eq!(
                s.series.x_coeff(n as i64),
                BigRational::from_integer(BigInt::from(*v)),
            );
        }
    }
}
