//! Interleaving two bisection halves back into a single sequence.
//!
//! A pair of counting series split by parity can be recombined in two
//! ways: `Stretched` substitutes `x → x²` into both halves first
//! (`r(x²) + x·f(x²)`), which is the right move when each half indexes by
//! its own step count; `Direct` leaves the halves alone (`r + x·f`), for
//! operands that are already supported on alternating powers.

use crate::coeff::Coeff;
use crate::series::{SeriesError, TruncatedSeries};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CombineMode {
    Stretched,
    Direct,
}

pub fn bisection_combine<C: Coeff>(
    restricted: &TruncatedSeries<C>,
    free: &TruncatedSeries<C>,
    mode: CombineMode,
) -> TruncatedSeries<C> {
    assert_eq!(restricted.ram(), 1, "combine operates on plain x-series");
    assert_eq!(free.ram(), 1, "combine operates on plain x-series");
    match mode {
        CombineMode::Stretched => restricted
            .compose_x_power(2)
            .add(&free.compose_x_power(2).shift(1, &C::one())),
        CombineMode::Direct => restricted.add(&free.shift(1, &C::one())),
    }
}

/// Inverse of [`bisection_combine`]: recovers `(restricted, free)`.
pub fn bisection_split<C: Coeff>(
    combined: &TruncatedSeries<C>,
    mode: CombineMode,
) -> Result<(TruncatedSeries<C>, TruncatedSeries<C>), SeriesError> {
    let even = combined.even_part();
    let odd = combined.odd_part().shift(-1, &C::one());
    match mode {
        CombineMode::Stretched => Ok((even.contract_exponents(2)?, odd.contract_exponents(2)?)),
        CombineMode::Direct => Ok((even, odd)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    type S = TruncatedSeries<BigRational>;

    fn series(vals: &[i64]) -> S {
        let coeffs: Vec<BigRational> = vals
            .iter()
            .map(|&v| BigRational::from_integer(BigInt::from(v)))
            .collect();
        S::from_x_coeffs(1, vals.len() as i64, &coeffs)
    }

    #[test]
    fn stretched_combine_interleaves_and_splits_back() {
        let r = series(&[1, 3, 19]);
        let f = series(&[1, 4, 21]);
        let c = bisection_combine(&r, &f, CombineMode::Stretched);
        for (k, v) in [1, 1, 3, 4, 19, 21].iter().enumerate() {
            assert_eq!(c.x_coeff(k as i64), BigRational::from_integer((*v).into()));
        }
        let (r2, f2) = bisection_split(&c, CombineMode::Stretched).unwrap();
        assert_eq!(r2.truncate_x(3), r);
        assert_eq!(f2.truncate_x(3), f);
    }

    #[test]
    fn direct_combine_sums_sparse_halves() {
        let r = series(&[1, 0, 4, 0, 70]);
        let f = series(&[1, 0, 11, 0, 221]);
        let c = bisection_combine(&r, &f, CombineMode::Direct);
        // The trusted window is the shorter operand's: index 5 would need
        // r's x⁵ term, so the combined series stops at x⁴.
        assert_eq!(c.order(), 5);
        for (k, v) in [1, 1, 4, 11, 70].iter().enumerate() {
            assert_eq!(c.x_coeff(k as i64), BigRational::from_integer((*v).into()));
        }
        let (r2, f2) = bisection_split(&c, CombineMode::Direct).unwrap();
        assert_eq!(r2.truncate_x(5), r.truncate_x(5));
        assert_eq!(f2.truncate_x(4), f.truncate_x(4));
    }
}
