//! Constant-term extraction in the height variable.
//!
//! For a rational function `F = num/den` in `x` and `y` whose Laurent
//! expansion converges in an annulus separating the small roots of `den`
//! from the large ones, the coefficient of `y⁰` is a contour integral of
//! `F/y`. It picks up the pole at `y = 0` plus one simple-pole residue per
//! small root `s`:
//!
//! `[y⁰]F = num(x,0)/den(x,0) + Σ_s num(x,s) / (s · ∂den/∂y (x,s))`.
//!
//! All arithmetic is over exact cyclotomic rationals; the result must come
//! out ω-free with integral x-exponents, which is enforced rather than
//! assumed.

use num_rational::BigRational;

use crate::coeff::{Coeff, CycRational};
use crate::kernel::{evaluate_kernel, kernel_dy, rationalize};
use crate::series::{SeriesError, TruncatedSeries};

/// Builds the `y = 0` part of a polynomial as a series in `t` (`x = t^ram`).
fn x_only_part(
    terms: &[(i64, i64, i64)],
    ram: u32,
    order_t: i64,
) -> TruncatedSeries<CycRational> {
    let mut out = TruncatedSeries::<CycRational>::zero(ram, order_t);
    for &(a, b, c) in terms {
        if b == 0 {
            let e = a * ram as i64;
            out.set_coeff(e, out.coeff(e).add(&Coeff::from_i64(c)));
        }
    }
    out
}

/// Extracts `[y⁰] num/den` given the small roots of `den`. An empty root
/// list is valid (a denominator with no small roots, such as `1 − xy`).
/// `ram` and `order_t` describe the uniformizer shared by the roots.
pub fn residue_extract_constant_term(
    num: &[(i64, i64, i64)],
    den: &[(i64, i64, i64)],
    small_roots: &[TruncatedSeries<CycRational>],
    ram: u32,
    order_t: i64,
) -> Result<TruncatedSeries<BigRational>, SeriesError> {
    let mut total = TruncatedSeries::<CycRational>::zero(ram, order_t);
    let num0 = x_only_part(num, ram, order_t);
    if !num0.is_zero() {
        let den0 = x_only_part(den, ram, order_t);
        total = total.add(&num0.div(&den0)?);
    }
    let dy = kernel_dy(den);
    for root in small_roots {
        let n = evaluate_kernel(num, root);
        let d = evaluate_kernel(&dy, root).mul(root);
        total = total.add(&n.div(&d)?);
    }
    rationalize(&total.truncate(order_t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{solve_kernel_roots, KernelId};
    use num_bigint::BigInt;

    fn assert_prefix(series: &TruncatedSeries<BigRational>, expected: &[i64]) {
        for (n, &v) in expected.iter().enumerate() {
            assert_eq!(
                series.x_coeff(n as i64),
                BigRational::from_integer(BigInt::from(v)),
                "x^{n}"
            );
        }
    }

    #[test]
    fn rational_function_without_small_roots_keeps_its_y0_row() {
        // 1/(1−xy): the only contribution is the pole at y = 0, and the
        // constant row in y is identically 1.
        let num = [(0, 0, 1)];
        let den = [(0, 0, 1), (1, 1, -1)];
        let s = residue_extract_constant_term(&num, &den, &[], 1, 9).unwrap();
        assert_prefix(&s, &[1, 0, 0, 0, 0, 0, 0, 0]);
    }

    #[test]
    fn geometric_series_in_x_survives_extraction() {
        // (1+y)/((1−x)(1+y)) = 1/(1−x) after trivial cancellation; keeping
        // the factor exercises the y = 0 path with a nonconstant row.
        let num = [(0, 0, 1), (0, 1, 1)];
        let den = [(0, 0, 1), (1, 0, -1), (0, 1, 1), (1, 1, -1)];
        let s = residue_extract_constant_term(&num, &den, &[], 1, 8).unwrap();
        assert_prefix(&s, &[1, 1, 1, 1, 1, 1, 1]);
    }

    #[test]
    fn dyck_kernel_residues_recover_ground_level_counts() {
        // [y⁰] y²/K for the DyckW kernel: the y = 0 part vanishes and the
        // two branch residues sum to the ground-level half-plane counts.
        let roots = solve_kernel_roots(KernelId::DyckW, 30);
        let num = [(0, 2, 1)];
        let s = residue_extract_constant_term(
            &num,
            KernelId::DyckW.terms(),
            &roots.small_roots,
            2,
            30,
        )
        .unwrap();
        assert_prefix(&s, &[1, 2, 8, 38, 196]);
    }
}
