//! Laurent polynomials in the height variable `y` with exact rational
//! coefficients. Used as the coefficient ring of bivariate series: a series
//! in `x` whose coefficients are Laurent polynomials in `y`.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;

use crate::coeff::Coeff;

/// A finite sum of `c · y^m` terms, `m` possibly negative. Zero
/// coefficients are never stored.
#[derive(Clone, PartialEq, Debug, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigRational>,
}

impl LaurentPoly {
    pub fn new() -> Self {
        LaurentPoly::default()
    }

    pub fn monomial(power: i64, coeff: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !num_traits::Zero::is_zero(&coeff) {
            terms.insert(power, coeff);
        }
        LaurentPoly { terms }
    }

    pub fn constant(coeff: BigRational) -> Self {
        Self::monomial(0, coeff)
    }

    /// The coefficient of `y^power` (zero when absent).
    pub fn coeff(&self, power: i64) -> BigRational {
        self.terms.get(&power).cloned().unwrap_or_else(Zero::zero)
    }

    pub fn set_coeff(&mut self, power: i64, coeff: BigRational) {
        if num_traits::Zero::is_zero(&coeff) {
            self.terms.remove(&power);
        } else {
            self.terms.insert(power, coeff);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigRational)> {
        self.terms.iter().map(|(&p, c)| (p, c))
    }

    pub fn min_power(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_power(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Keeps only terms with `|power| <= bound`; used to discard heights
    /// that exceed the support of a truncated bivariate expansion.
    pub fn truncate_powers(&self, bound: i64) -> Self {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .filter(|(&p, _)| p.abs() <= bound)
                .map(|(&p, c)| (p, c.clone()))
                .collect(),
        }
    }
}

impl Coeff for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::new()
    }
    fn one() -> Self {
        LaurentPoly::constant(Coeff::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (&p, c) in &rhs.terms {
            out.set_coeff(p, out.coeff(p) + c);
        }
        out
    }
    fn sub(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (&p, c) in &rhs.terms {
            out.set_coeff(p, out.coeff(p) - c);
        }
        out
    }
    fn mul(&self, rhs: &Self) -> Self {
        let mut out = LaurentPoly::new();
        for (&pa, ca) in &self.terms {
            for (&pb, cb) in &rhs.terms {
                let p = pa + pb;
                out.set_coeff(p, out.coeff(p) + ca * cb);
            }
        }
        out
    }
    fn neg(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(&p, c)| (p, -c.clone())).collect(),
        }
    }
    fn from_i64(v: i64) -> Self {
        LaurentPoly::constant(Coeff::from_i64(v))
    }
    fn try_inv(&self) -> Option<Self> {
        // Only monomials are invertible in the Laurent polynomial ring.
        if self.terms.len() != 1 {
            return None;
        }
        let (&p, c) = self.terms.iter().next().unwrap();
        Some(LaurentPoly::monomial(-p, c.recip()))
    }
    fn try_sqrt(&self) -> Option<Self> {
        None
    }
}
