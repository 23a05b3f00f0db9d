//! Bivariate series: a truncated series in `x` whose coefficients are
//! Laurent polynomials in the height variable `y`.

use num_rational::BigRational;

use crate::laurent::LaurentPoly;
use crate::series::{SeriesError, TruncatedSeries};

pub type BivariateSeries = TruncatedSeries<LaurentPoly>;

impl TruncatedSeries<LaurentPoly> {
    /// Coefficient of `x^n y^m`.
    pub fn xy_coeff(&self, n: i64, m: i64) -> BigRational {
        self.x_coeff(n).coeff(m)
    }

    /// Builds a polynomial from `(x power, y power, coefficient)` triples;
    /// x powers are whole powers of `x` regardless of `ram`.
    pub fn from_int_terms(ram: u32, order_t: i64, terms: &[(i64, i64, i64)]) -> Self {
        let mut out = Self::zero(ram, order_t);
        for &(a, b, c) in terms {
            let e = a * ram as i64;
            let mut row = out.coeff(e);
            row.set_coeff(b, row.coeff(b) + BigRational::from_integer(c.into()));
            out.set_coeff(e, row);
        }
        out
    }

    /// Expands `num/den` as a series in `x` (ram 1). The denominator's
    /// lowest x-row must be an invertible (monomial) Laurent polynomial.
    pub fn rational_bivariate(
        num: &[(i64, i64, i64)],
        den: &[(i64, i64, i64)],
        order_x: i64,
    ) -> Result<Self, SeriesError> {
        let n = Self::from_int_terms(1, order_x, num);
        let d = Self::from_int_terms(1, order_x, den);
        n.div(&d)
    }

    /// Lifts a univariate series to a bivariate one, tagging every
    /// coefficient with `y^power`.
    pub fn lift_univariate(u: &TruncatedSeries<BigRational>, power: i64) -> Self {
        u.map(|c| LaurentPoly::monomial(power, c.clone()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn rational_expansion_matches_ballot_counts() {
        // y/(y − x(1+y²)) = Σ xⁿ(y + 1/y)ⁿ counts unconstrained ±1 walks
        // by endpoint: [xⁿyᵐ] = C(n, (n+m)/2).
        let f = BivariateSeries::rational_bivariate(
            &[(0, 1, 1)],
            &[(0, 1, 1), (1, 0, -1), (1, 2, -1)],
            5,
        )
        .unwrap();
        assert_eq!(f.xy_coeff(0, 0), rat(1));
        assert_eq!(f.xy_coeff(1, -1), rat(1));
        assert_eq!(f.xy_coeff(1, 1), rat(1));
        assert_eq!(f.xy_coeff(2, 0), rat(2));
        assert_eq!(f.xy_coeff(2, -2), rat(1));
        assert_eq!(f.xy_coeff(2, 2), rat(1));
    }

    #[test]
    fn lifting_places_series_on_a_height() {
        let u = TruncatedSeries::from_x_coeffs(1, 3, &[rat(5), rat(7)]);
        let b = BivariateSeries::lift_univariate(&u, -2);
        assert_eq!(b.xy_coeff(0, -2), rat(5));
        assert_eq!(b.xy_coeff(1, -2), rat(7));
        assert_eq!(b.xy_coeff(0, 0), rat(0));
    }
}
