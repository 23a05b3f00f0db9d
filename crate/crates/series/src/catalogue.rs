//! Named generating functions for the vertically constrained path
//! families, expandable to any order.
//!
//! Naming scheme: the leading letter picks the weighted step set
//! (`a` = MotzkinW, `b` = DyckW, `c` = SchroderW), `mO`/`dO` are the
//! flat-filtered Motzkin and smooth-filtered Delannoy combinations, `H`
//! marks a half-plane (grand) series and `Q` a quarter-plane one, the `R`
//! suffix marks the restricted-leading variant, and a trailing `0`
//! specialises the height variable to ground level.
//!
//! Quarter-plane closed forms are built from the kernel's vanishing
//! branches (computed by fixed-point iteration), never from printed
//! radical signs, so sign conventions in any external source are checked
//! by tests rather than trusted.

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

use crate::bivariate::BivariateSeries;
use crate::coeff::Coeff;
use crate::kernel::{solve_kernel_roots, symmetric_functions_small_roots, KernelId};
use crate::laurent::LaurentPoly;
use crate::residue::residue_extract_constant_term;
use crate::series::{SeriesError, TruncatedSeries};

type U = TruncatedSeries<BigRational>;

#[derive(Debug, Error)]
pub enum CatalogueError {
    #[error("unknown generating function name `{name}`")]
    UnknownName { name: String },
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// A univariate (`x` only) or bivariate (`x` and height `y`) expansion.
#[derive(Clone, Debug)]
pub enum GfExpansion {
    Univariate(TruncatedSeries<BigRational>),
    Bivariate(BivariateSeries),
}

/// Every name accepted by [`expand_named_gf`].
pub const CATALOGUE_NAMES: [&str; 29] = [
    "aHR", "aH", "aHR0", "aH0", "aQR", "aQ", "aQR0", "aQ0", "bHR", "bH", "bHR0", "bH0", "bQR",
    "bQ", "bQR0", "bQ0", "mOH", "mOH0", "mOQ", "mOQ0", "cHR", "cH", "cHR0", "cH0", "cQR", "cQ",
    "cQR0", "cQ0", "dOH0",
];

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Polynomial in whole powers of `x` at ram 1.
fn upoly(order: i64, coeffs: &[i64]) -> U {
    let c: Vec<BigRational> = coeffs.iter().map(|&v| rat(v, 1)).collect();
    U::from_x_coeffs(1, order, &c)
}

/// Polynomial in the uniformizer `t` (for ramified intermediates).
fn tpoly(ram: u32, order_t: i64, terms: &[(i64, i64)]) -> U {
    let mut s = U::zero(ram, order_t);
    for &(e, c) in terms {
        s.set_coeff(e, rat(c, 1));
    }
    s
}

/// `P = sqrt(1 − 10x + 9x²)`, the discriminant shared by the MotzkinW
/// ground-level forms.
pub fn discriminant_p(order: i64) -> Result<U, SeriesError> {
    upoly(order, &[1, -10, 9]).sqrt()
}

/// `Q = sqrt(1 − 2√x − 3x)` and `R = sqrt(1 + 2√x − 3x)` as series in
/// `t = √x`.
pub fn motzkin_q_r(order_t: i64) -> Result<(U, U), SeriesError> {
    let q = tpoly(2, order_t, &[(0, 1), (1, -2), (2, -3)]).sqrt()?;
    let r = tpoly(2, order_t, &[(0, 1), (1, 2), (2, -3)]).sqrt()?;
    Ok((q, r))
}

fn half(order: i64, sign_plus: bool) -> Result<U, SeriesError> {
    // sqrt((1 − 3x ± P)/2) and its companion sqrt((1 − 3x − P)/(2x)).
    let p = discriminant_p(order)?;
    let base = upoly(order, &[1, -3]);
    if sign_plus {
        base.add(&p).scale(&rat(1, 2)).sqrt()
    } else {
        base.sub(&p).shift(-1, &rat(1, 2)).sqrt()
    }
}

fn motzkin_ground(order: i64, restricted: bool) -> Result<U, SeriesError> {
    let p = discriminant_p(order)?;
    if restricted {
        half(order, true)?.div(&p)
    } else {
        half(order, false)?.div(&p)
    }
}

fn motzkin_quarter_ground(order: i64, restricted: bool) -> Result<U, SeriesError> {
    let one = U::one(1, order);
    if restricted {
        Ok(one.sub(&half(order, true)?).shift(-1, &rat(1, 2)))
    } else {
        Ok(half(order, false)?.sub(&one).shift(-1, &rat(1, 2)))
    }
}

fn dyck_ground(order: i64, restricted: bool) -> Result<U, SeriesError> {
    let inner = upoly(order, &[1, -8, 12]).sqrt()?;
    let den = upoly(order, &[4, -31, 40, 12]);
    if restricted {
        upoly(order, &[2, -7])
            .add(&inner.scale(&rat(2, 1)))
            .div(&den)?
            .sqrt()
    } else {
        upoly(order, &[2, -4, -3])
            .sub(&inner.scale(&rat(2, 1)))
            .div(&den.shift(1, &rat(1, 1)))?
            .sqrt()
    }
}

fn flat_filtered_ground(order: i64) -> Result<U, SeriesError> {
    let inner = upoly(order, &[1, 0, -8, 0, 12]).sqrt()?;
    upoly(order, &[4, 6, -11, -6, -3])
        .add(&inner.shift(1, &rat(2, 1)))
        .div(&upoly(order, &[4, 0, -31, 0, 40, 0, 12]))?
        .sqrt()
}

fn smooth_filtered_ground(order: i64) -> Result<U, SeriesError> {
    let order_t = 3 * (order + 2);
    let roots = solve_kernel_roots(KernelId::SchroderW, order_t);
    // Numerator of the combined series c_R + x·c over the SchroderW
    // kernel: y³ + xy(1 + y² + y⁴).
    let num = [(0, 3, 1), (1, 1, 1), (1, 3, 1), (1, 5, 1)];
    residue_extract_constant_term(
        &num,
        KernelId::SchroderW.terms(),
        &roots.small_roots,
        3,
        order_t,
    )
}

fn dyck_quarter_ground(order: i64, restricted: bool) -> Result<U, SeriesError> {
    let es = symmetric_functions_small_roots(KernelId::DyckW, order + 2);
    let one = U::one(1, es[1].order());
    let den = one.sub(&es[1]).shift(1, &rat(1, 1));
    if restricted {
        es[1].neg().div(&den)
    } else {
        es[0].div(&den)
    }
}

fn schroder_quarter_ground(order: i64, restricted: bool) -> Result<U, SeriesError> {
    let es = symmetric_functions_small_roots(KernelId::SchroderW, order + 2);
    let one = U::one(1, es[0].order());
    let den = one.add(&es[2].mul(&es[0])).shift(1, &rat(1, 1));
    if restricted {
        es[2].div(&den)
    } else {
        // e₃(1 + e₁² − e₂)/(x(1 + e₃e₁))
        let weight = one.add(&es[0].mul(&es[0])).sub(&es[1]);
        es[2].mul(&weight).div(&den)
    }
}

fn flat_filtered_quarter_ground(order: i64) -> Result<U, SeriesError> {
    let roots = solve_kernel_roots(KernelId::DyckWXSquared, 2 * (order + 4));
    let es = roots
        .elementary_symmetric()
        .expect("conjugate branch pair has rational symmetric functions");
    let (e1, e2) = (&es[0], &es[1]);
    let one = U::one(1, e1.order());
    let num = e1.shift(1, &rat(1, 1)).sub(e2);
    let den = one.sub(e2).shift(2, &rat(1, 1));
    num.div(&den)
}

fn one_plus_2y(order: i64) -> BivariateSeries {
    BivariateSeries::from_int_terms(2, order, &[(0, 0, 1), (0, 1, 2)])
}

fn motzkin_quarter_bivariate(order: i64, restricted: bool) -> Result<BivariateSeries, SeriesError> {
    let order_t = 2 * (order + 3);
    let (q, r) = motzkin_q_r(order_t)?;
    let q = BivariateSeries::lift_univariate(&q, 0);
    let r = BivariateSeries::lift_univariate(&r, 0);
    let one = BivariateSeries::one(2, order_t);
    let two = one.add(&one);
    // √x(1 + 2y) as a ram-2 bivariate monomial.
    let a = one_plus_2y(order_t).shift(1, &LaurentPoly::one());
    let den1 = one.add(&q).sub(&a);
    let den2 = one.add(&r).add(&a);
    let result = if restricted {
        r.add(&q).add(&two).div(&den1.mul(&den2))?
    } else {
        let num = r.sub(&q).add(&a.scale(&LaurentPoly::from_i64(2)));
        let den = den1.mul(&den2).shift(1, &LaurentPoly::one());
        num.div(&den)?
    };
    // The odd-in-√x part must cancel identically for these quarter-plane
    // series; compress_ram enforces that.
    result.compress_ram(2)
}

fn dyck_quarter_bivariate(order: i64, restricted: bool) -> Result<BivariateSeries, SeriesError> {
    let work = order + 2;
    let es = symmetric_functions_small_roots(KernelId::DyckW, work);
    let (e1, e2) = (&es[0], &es[1]);
    let one = BivariateSeries::one(1, work);
    let kernel = BivariateSeries::from_int_terms(1, work, KernelId::DyckW.terms());
    let one_minus_e2 = one.sub(&BivariateSeries::lift_univariate(e2, 0));
    if restricted {
        // (y² − e₁y + e₂) / ((1 − e₂)K)
        let num = BivariateSeries::from_int_terms(1, work, &[(0, 2, 1)])
            .sub(&BivariateSeries::lift_univariate(e1, 1))
            .add(&BivariateSeries::lift_univariate(e2, 0));
        num.div(&one_minus_e2.mul(&kernel))
    } else {
        // (e₂y − (1 + y + y²)·x·(e₁ − y(1 − e₂))) / (x(1 − e₂)K)
        let growth = BivariateSeries::from_int_terms(1, work, &[(0, 0, 1), (0, 1, 1), (0, 2, 1)]);
        let inner = BivariateSeries::lift_univariate(e1, 0).sub(
            &one_minus_e2.mul(&BivariateSeries::from_int_terms(1, work, &[(0, 1, 1)])),
        );
        let num = BivariateSeries::lift_univariate(e2, 1)
            .sub(&growth.mul(&inner).shift(1, &LaurentPoly::one()));
        let den = one_minus_e2.mul(&kernel).shift(1, &LaurentPoly::one());
        num.div(&den)
    }
}

fn schroder_quarter_bivariate(order: i64, restricted: bool) -> Result<BivariateSeries, SeriesError> {
    let work = order + 2;
    let es = symmetric_functions_small_roots(KernelId::SchroderW, work);
    let lift = |u: &U, p: i64| BivariateSeries::lift_univariate(&u.clone().truncate_x(work), p);
    let one = BivariateSeries::one(1, work);
    let kernel = BivariateSeries::from_int_terms(1, work, KernelId::SchroderW.terms());
    let e3e1 = es[2].mul(&es[0]);
    // C(y) = (y − s₁)(y − s₂)(y − s₃) = y³ − e₁y² + e₂y − e₃
    let c_poly = BivariateSeries::from_int_terms(1, work, &[(0, 3, 1)])
        .sub(&lift(&es[0], 2))
        .add(&lift(&es[1], 1))
        .sub(&lift(&es[2], 0));
    let den = one.add(&lift(&e3e1, 0)).mul(&kernel);
    if restricted {
        // C(y)(1 − e₃y) / ((1 + e₃e₁)K)
        let num = c_poly.mul(&one.sub(&lift(&es[2], 1)));
        num.div(&den)
    } else {
        // C(y)(1 + e₁² − e₂ + (e₁ + e₃(e₂ − 1))y + (1 + e₃e₁)y²) / ((1 + e₃e₁)K)
        let w0 = U::one(1, work).add(&es[0].mul(&es[0])).sub(&es[1]);
        let w1 = es[0].add(&es[2].mul(&es[1].sub(&U::one(1, work))));
        let w2 = U::one(1, work).add(&e3e1);
        let weight = lift(&w0, 0).add(&lift(&w1, 1)).add(&lift(&w2, 2));
        c_poly.mul(&weight).div(&den)
    }
}

fn flat_filtered_quarter_bivariate(order: i64) -> Result<BivariateSeries, SeriesError> {
    let work = order + 3;
    let roots = solve_kernel_roots(KernelId::DyckWXSquared, 2 * work);
    let es = roots
        .elementary_symmetric()
        .expect("conjugate branch pair has rational symmetric functions");
    let lift = |u: &U, p: i64| BivariateSeries::lift_univariate(&u.clone().truncate_x(work), p);
    let one = BivariateSeries::one(1, work);
    let y = BivariateSeries::from_int_terms(1, work, &[(0, 1, 1)]);
    let kernel = BivariateSeries::from_int_terms(1, work, KernelId::DyckWXSquared.terms());
    let growth = BivariateSeries::from_int_terms(1, work, &[(0, 0, 1), (0, 1, 1), (0, 2, 1)]);
    // x(y² − e₁y + e₂) + e₂y − x²(e₁ − y + e₂y)(1 + y + y²)
    let quad = BivariateSeries::from_int_terms(1, work, &[(0, 2, 1)])
        .sub(&lift(&es[0], 1))
        .add(&lift(&es[1], 0));
    let tail = lift(&es[0], 0).sub(&y).add(&lift(&es[1], 1));
    let num = quad
        .shift(1, &LaurentPoly::one())
        .add(&lift(&es[1], 1))
        .sub(&growth.mul(&tail).shift(2, &LaurentPoly::one()));
    let den = one
        .sub(&lift(&es[1], 0))
        .mul(&kernel)
        .shift(1, &LaurentPoly::one());
    num.div(&den)
}

/// Expands a catalogue entry so that all x-coefficients below `order` are
/// exact.
pub fn expand_named_gf(name: &str, order: i64) -> Result<GfExpansion, CatalogueError> {
    use GfExpansion::{Bivariate, Univariate};
    let o = order;
    let result = match name {
        // Half-plane bivariate forms: plain rational functions of the
        // kernel.
        "aHR" => Bivariate(BivariateSeries::rational_bivariate(
            &[(0, 2, 1)],
            KernelId::MotzkinW.terms(),
            o,
        )?),
        "aH" => Bivariate(BivariateSeries::rational_bivariate(
            &[(0, 1, 1), (0, 2, 1), (0, 3, 1)],
            KernelId::MotzkinW.terms(),
            o,
        )?),
        "bHR" => Bivariate(BivariateSeries::rational_bivariate(
            &[(0, 2, 1)],
            KernelId::DyckW.terms(),
            o,
        )?),
        "bH" => Bivariate(BivariateSeries::rational_bivariate(
            &[(0, 1, 1), (0, 2, 1), (0, 3, 1)],
            KernelId::DyckW.terms(),
            o,
        )?),
        "cHR" => Bivariate(BivariateSeries::rational_bivariate(
            &[(0, 3, 1)],
            KernelId::SchroderW.terms(),
            o,
        )?),
        "cH" => Bivariate(BivariateSeries::rational_bivariate(
            &[(0, 1, 1), (0, 3, 1), (0, 5, 1)],
            KernelId::SchroderW.terms(),
            o,
        )?),
        "mOH" => Bivariate(BivariateSeries::rational_bivariate(
            &[(0, 2, 1), (1, 1, 1), (1, 2, 1), (1, 3, 1)],
            KernelId::DyckWXSquared.terms(),
            o,
        )?),
        // Ground-level closed forms.
        "aHR0" => Univariate(motzkin_ground(o + 2, true)?),
        "aH0" => Univariate(motzkin_ground(o + 2, false)?),
        "aQR0" => Univariate(motzkin_quarter_ground(o + 2, true)?),
        "aQ0" => Univariate(motzkin_quarter_ground(o + 2, false)?),
        "bHR0" => Univariate(dyck_ground(o + 2, true)?),
        "bH0" => Univariate(dyck_ground(o + 2, false)?),
        "bQR0" => Univariate(dyck_quarter_ground(o, true)?),
        "bQ0" => Univariate(dyck_quarter_ground(o, false)?),
        "mOH0" => Univariate(flat_filtered_ground(o + 2)?),
        "mOQ0" => Univariate(flat_filtered_quarter_ground(o)?),
        "cHR0" => Univariate(smooth_filtered_ground(o)?.even_part()),
        "cH0" => Univariate(smooth_filtered_ground(o + 1)?.odd_part().shift(-1, &rat(1, 1))),
        "cQR0" => Univariate(schroder_quarter_ground(o, true)?),
        "cQ0" => Univariate(schroder_quarter_ground(o, false)?),
        "dOH0" => Univariate(smooth_filtered_ground(o)?),
        // Quarter-plane bivariate forms.
        "aQR" => Bivariate(motzkin_quarter_bivariate(o, true)?),
        "aQ" => Bivariate(motzkin_quarter_bivariate(o, false)?),
        "bQR" => Bivariate(dyck_quarter_bivariate(o, true)?),
        "bQ" => Bivariate(dyck_quarter_bivariate(o, false)?),
        "cQR" => Bivariate(schroder_quarter_bivariate(o, true)?),
        "cQ" => Bivariate(schroder_quarter_bivariate(o, false)?),
        "mOQ" => Bivariate(flat_filtered_quarter_bivariate(o)?),
        other => {
            return Err(CatalogueError::UnknownName {
                name: other.to_string(),
            })
        }
    };
    let result = match result {
        Univariate(u) => {
            assert!(u.x_order() >= order, "{name}: trusted to {} < {order}", u.x_order());
            Univariate(u.truncate_x(order))
        }
        Bivariate(b) => {
            assert!(b.x_order() >= order, "{name}: trusted to {} < {order}", b.x_order());
            Bivariate(b.truncate_x(order))
        }
    };
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn univariate(name: &str, order: i64) -> U {
        match expand_named_gf(name, order).unwrap() {
            GfExpansion::Univariate(u) => u,
            GfExpansion::Bivariate(_) => panic!("{name} should be univariate"),
        }
    }

    fn assert_ints(series: &U, expected: &[i64]) {
        for (n, &v) in expected.iter().enumerate() {
            assert_eq!(series.x_coeff(n as i64), rat(v, 1), "x^{n}");
        }
    }

    #[test]
    fn ground_series_open_with_known_counts() {
        assert_ints(&univariate("aHR0", 5), &[1, 3, 19, 141, 1107]);
        assert_ints(&univariate("aH0", 5), &[1, 7, 51, 393, 3139]);
        assert_ints(&univariate("aQR0", 6), &[1, 2, 9, 51, 323, 2188]);
        assert_ints(&univariate("aQ0", 5), &[1, 4, 21, 127, 835]);
        assert_ints(&univariate("bHR0", 5), &[1, 2, 8, 38, 196]);
        assert_ints(&univariate("bH0", 5), &[1, 4, 20, 104, 556]);
        assert_ints(&univariate("bQR0", 6), &[1, 1, 3, 11, 46, 207]);
        assert_ints(&univariate("bQ0", 5), &[1, 2, 7, 28, 122]);
    }

    #[test]
    fn schroder_ground_series_interleave_parity_zeros() {
        assert_ints(&univariate("cQR0", 5), &[1, 0, 4, 0, 70]);
        assert_ints(&univariate("cQ0", 5), &[1, 0, 11, 0, 221]);
        assert_ints(&univariate("cHR0", 5), &[1, 0, 11, 0, 343]);
        assert_ints(&univariate("cH0", 5), &[1, 0, 29, 0, 943]);
        assert_ints(&univariate("dOH0", 6), &[1, 1, 11, 29, 343, 943]);
    }

    #[test]
    fn filtered_motzkin_ground_series_interleave() {
        assert_ints(&univariate("mOH0", 9), &[1, 1, 2, 4, 8, 20, 38, 104, 196]);
        assert_ints(&univariate("mOQ0", 9), &[1, 1, 1, 2, 3, 7, 11, 28, 46]);
    }

    #[test]
    fn unknown_names_are_rejected() {
        assert!(matches!(
            expand_named_gf("zz0", 4),
            Err(CatalogueError::UnknownName { .. })
        ));
    }

    #[test]
    fn catalogue_names_all_expand() {
        for name in CATALOGUE_NAMES {
            let e = expand_named_gf(name, 4).unwrap();
            match e {
                GfExpansion::Univariate(u) => assert!(u.x_order() >= 4),
                GfExpansion::Bivariate(b) => assert!(b.x_order() >= 4),
            }
        }
    }
}
