//! Truncated power series with exact coefficients.
//!
//! A series is stored in a uniformizing variable `t` with `x = t^ram`, so
//! Puiseux expansions in `x^(1/2)` or `x^(1/3)` are ordinary series in `t`
//! (`ram` = 2 or 3). Plain series use `ram` = 1. Exponents may be negative
//! (Laurent tails appear transiently when dividing), `order` is the
//! exclusive truncation bound in `t`-units, and every operation tracks how
//! far the result is actually trusted rather than assuming a global
//! precision.

use std::collections::BTreeMap;

use num_rational::BigRational;
use thiserror::Error;

use crate::coeff::Coeff;

#[derive(Debug, Error, PartialEq)]
pub enum SeriesError {
    #[error("division by a series with no known nonzero term")]
    DivisionByZeroSeries,
    #[error("leading coefficient is not invertible in the coefficient ring")]
    NonInvertibleLeading,
    #[error("leading coefficient has no square root in the coefficient ring")]
    NonSquareLeading,
    #[error("square root of a series with odd valuation {valuation}")]
    OddValuation { valuation: i64 },
    #[error("n-th root requires a unit series with leading coefficient one")]
    NotUnitSeries,
    #[error("exponent {exponent} is not a multiple of {divisor}")]
    FractionalExponent { exponent: i64, divisor: i64 },
    #[error("coefficient at t^{exponent} lies outside the base field")]
    NonRationalCoefficient { exponent: i64 },
}

#[derive(Clone, PartialEq, Debug)]
pub struct TruncatedSeries<C: Coeff> {
    ram: u32,
    order: i64,
    coeffs: BTreeMap<i64, C>,
}

impl<C: Coeff> TruncatedSeries<C> {
    pub fn zero(ram: u32, order: i64) -> Self {
        assert!(ram >= 1);
        TruncatedSeries {
            ram,
            order,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(ram: u32, order: i64) -> Self {
        Self::monomial(ram, order, 0, C::one())
    }

    pub fn monomial(ram: u32, order: i64, exponent: i64, coeff: C) -> Self {
        let mut s = Self::zero(ram, order);
        s.set_coeff(exponent, coeff);
        s
    }

    /// The series for `x^k = t^(k·ram)`.
    pub fn x_power(ram: u32, order: i64, k: i64) -> Self {
        Self::monomial(ram, order, k * ram as i64, C::one())
    }

    /// Builds `sum coeffs[k] · x^k` for integer x-exponents starting at 0.
    pub fn from_x_coeffs(ram: u32, order: i64, coeffs: &[C]) -> Self {
        let mut s = Self::zero(ram, order);
        for (k, c) in coeffs.iter().enumerate() {
            s.set_coeff(k as i64 * ram as i64, c.clone());
        }
        s
    }

    pub fn ram(&self) -> u32 {
        self.ram
    }

    /// Exclusive truncation bound in `t`-units.
    pub fn order(&self) -> i64 {
        self.order
    }

    /// Exclusive truncation bound in whole powers of `x`: the largest `n`
    /// such that every x-exponent `< n` is fully determined.
    pub fn x_order(&self) -> i64 {
        self.order.div_euclid(self.ram as i64)
    }

    pub fn coeff(&self, exponent: i64) -> C {
        self.coeffs.get(&exponent).cloned().unwrap_or_else(C::zero)
    }

    /// Coefficient of `x^n`.
    pub fn x_coeff(&self, n: i64) -> C {
        self.coeff(n * self.ram as i64)
    }

    pub fn set_coeff(&mut self, exponent: i64, coeff: C) {
        if coeff.is_zero() || exponent >= self.order {
            self.coeffs.remove(&exponent);
        } else {
            self.coeffs.insert(exponent, coeff);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &C)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn valuation(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    fn valuation_or_order(&self) -> i64 {
        self.valuation().unwrap_or(self.order)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Reduces the truncation bound (never extends knowledge).
    pub fn truncate(mut self, order: i64) -> Self {
        if order < self.order {
            self.order = order;
            self.coeffs.retain(|&e, _| e < order);
        }
        self
    }

    pub fn truncate_x(self, n: i64) -> Self {
        let t = n * self.ram as i64;
        self.truncate(t)
    }

    fn assert_compatible(&self, rhs: &Self) {
        assert_eq!(
            self.ram, rhs.ram,
            "series over different uniformizers cannot be combined"
        );
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.assert_compatible(rhs);
        let order = self.order.min(rhs.order);
        let mut out = Self::zero(self.ram, order);
        for (&e, c) in &self.coeffs {
            out.set_coeff(e, c.clone());
        }
        for (&e, c) in &rhs.coeffs {
            out.set_coeff(e, out.coeff(e).add(c));
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        TruncatedSeries {
            ram: self.ram,
            order: self.order,
            coeffs: self.coeffs.iter().map(|(&e, c)| (e, c.neg())).collect(),
        }
    }

    pub fn scale(&self, factor: &C) -> Self {
        let mut out = Self::zero(self.ram, self.order);
        for (&e, c) in &self.coeffs {
            out.set_coeff(e, c.mul(factor));
        }
        out
    }

    /// Multiplies by `c · t^exponent` exactly (order shifts with the
    /// exponent; no information is lost).
    pub fn shift(&self, exponent: i64, factor: &C) -> Self {
        let mut out = Self::zero(self.ram, self.order + exponent);
        for (&e, c) in &self.coeffs {
            out.set_coeff(e + exponent, c.mul(factor));
        }
        out
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        self.assert_compatible(rhs);
        let order = (self.order + rhs.valuation_or_order())
            .min(rhs.order + self.valuation_or_order());
        let mut out = Self::zero(self.ram, order);
        for (&ea, ca) in &self.coeffs {
            for (&eb, cb) in &rhs.coeffs {
                let e = ea + eb;
                if e < order {
                    out.set_coeff(e, out.coeff(e).add(&ca.mul(cb)));
                }
            }
        }
        out
    }

    pub fn div(&self, rhs: &Self) -> Result<Self, SeriesError> {
        self.assert_compatible(rhs);
        let vb = rhs.valuation().ok_or(SeriesError::DivisionByZeroSeries)?;
        let lead_inv = rhs
            .coeff(vb)
            .try_inv()
            .ok_or(SeriesError::NonInvertibleLeading)?;
        // a/b is trusted to min(order(a), val(a) + order(b) − val(b)) − val(b).
        let va = self.valuation_or_order();
        let order = (self.order.min(va + rhs.order - vb)) - vb;
        let mut quotient = Self::zero(self.ram, order);
        let mut rem = self.clone();
        while let Some(er) = rem.valuation() {
            let eq = er - vb;
            if eq >= order {
                break;
            }
            let qc = rem.coeff(er).mul(&lead_inv);
            // Subtract qc·t^eq·rhs from the remainder, clearing its lowest term.
            for (&eb, cb) in &rhs.coeffs {
                let e = eq + eb;
                rem.set_coeff(e, rem.coeff(e).sub(&qc.mul(cb)));
            }
            debug_assert!(rem.coeff(er).is_zero());
            rem.coeffs.remove(&er);
            quotient.set_coeff(eq, qc);
        }
        Ok(quotient)
    }

    pub fn sqrt(&self) -> Result<Self, SeriesError> {
        let Some(va) = self.valuation() else {
            // sqrt(0) = 0 at the appropriate trust level.
            return Ok(Self::zero(self.ram, self.order / 2));
        };
        if va.rem_euclid(2) != 0 {
            return Err(SeriesError::OddValuation { valuation: va });
        }
        let lead_root = self
            .coeff(va)
            .try_sqrt()
            .ok_or(SeriesError::NonSquareLeading)?;
        let two_lead_inv = lead_root
            .add(&lead_root)
            .try_inv()
            .ok_or(SeriesError::NonSquareLeading)?;
        let v = va / 2;
        let order = self.order - v;
        let mut root = Self::zero(self.ram, order);
        root.set_coeff(v, lead_root);
        // Coefficient recurrence from matching root·root = self at each
        // exponent w: the only terms involving the new coefficient s_{w−v}
        // are 2·s_v·s_{w−v}.
        for w in (va + 1)..(order + v) {
            let mut acc = self.coeff(w);
            for (e, c) in root.coeffs.range((v + 1)..(w - v)) {
                let other = w - e;
                if other < *e {
                    break;
                }
                let prod = c.mul(&root.coeff(other));
                let prod = if other == *e { prod } else { prod.add(&prod) };
                acc = acc.sub(&prod);
            }
            let new = acc.mul(&two_lead_inv);
            root.set_coeff(w - v, new);
        }
        Ok(root)
    }

    /// `n`-th root of a unit series with constant term one, via Newton
    /// iteration on `z^n = self`.
    pub fn nth_root(&self, n: u32) -> Result<Self, SeriesError> {
        assert!(n >= 1);
        if self.valuation() != Some(0) || self.coeff(0) != C::one() {
            return Err(SeriesError::NotUnitSeries);
        }
        if n == 1 {
            return Ok(self.clone());
        }
        let mut z = Self::one(self.ram, self.order);
        // Correct terms double each step from one initial correct term.
        let mut steps = 1;
        let mut known: i64 = 1;
        while known < self.order {
            known *= 2;
            steps += 1;
        }
        for _ in 0..steps {
            // z ← z − (z^n − a)/(n·z^(n−1))
            let mut zn1 = Self::one(self.ram, self.order);
            for _ in 0..(n - 1) {
                zn1 = zn1.mul(&z);
            }
            let zn = zn1.mul(&z);
            let delta = zn.sub(self).div(&zn1.scale(&C::from_i64(n as i64)))?;
            z = z.sub(&delta);
            // Division by the full-order unit zn1 preserves order; restore
            // the target bound explicitly for clarity.
            z.order = self.order;
        }
        Ok(z)
    }

    /// Keeps exponents with `t`-parity 0 (coefficients unchanged).
    pub fn even_part(&self) -> Self {
        self.parity_part(0)
    }

    /// Keeps exponents with `t`-parity 1 (coefficients unchanged).
    pub fn odd_part(&self) -> Self {
        self.parity_part(1)
    }

    fn parity_part(&self, parity: i64) -> Self {
        let mut out = Self::zero(self.ram, self.order);
        for (&e, c) in &self.coeffs {
            if e.rem_euclid(2) == parity {
                out.set_coeff(e, c.clone());
            }
        }
        out
    }

    /// Substitutes `t → t^k`, turning a series in `x` into one in `x^k`
    /// when `ram` is 1.
    pub fn compose_x_power(&self, k: u32) -> Self {
        assert!(k >= 1);
        let k = k as i64;
        let mut out = Self::zero(self.ram, self.order * k);
        for (&e, c) in &self.coeffs {
            out.set_coeff(e * k, c.clone());
        }
        out
    }

    /// Substitutes `t → −t` (for `ram` 1 this is `x → −x`).
    pub fn subst_neg(&self) -> Self {
        let mut out = Self::zero(self.ram, self.order);
        for (&e, c) in &self.coeffs {
            let v = if e.rem_euclid(2) == 1 { c.neg() } else { c.clone() };
            out.set_coeff(e, v);
        }
        out
    }

    /// Divides every exponent by `k` (erroring on any exponent that is not
    /// a multiple), keeping the uniformizer label; inverse of
    /// [`Self::compose_x_power`].
    pub fn contract_exponents(&self, k: u32) -> Result<Self, SeriesError> {
        assert!(k >= 1);
        let kd = k as i64;
        let mut out = Self::zero(self.ram, (self.order + kd - 1).div_euclid(kd));
        for (&e, c) in &self.coeffs {
            if e.rem_euclid(kd) != 0 {
                return Err(SeriesError::FractionalExponent {
                    exponent: e,
                    divisor: kd,
                });
            }
            out.set_coeff(e.div_euclid(kd), c.clone());
        }
        Ok(out)
    }

    /// Reinterprets a series whose exponents are all multiples of `k` as a
    /// series in the coarser uniformizer `t^k` (e.g. an even series in
    /// `t = x^(1/2)` is an honest series in `x`).
    pub fn compress_ram(&self, k: u32) -> Result<Self, SeriesError> {
        assert!(k >= 1 && self.ram % k == 0);
        let mut out = self.contract_exponents(k)?;
        out.ram = self.ram / k;
        Ok(out)
    }

    /// Reinterprets a series in `x` as one in a finer uniformizer
    /// `t = x^(1/k)` by stretching every exponent.
    pub fn stretch_ram(&self, k: u32) -> Self {
        assert!(k >= 1);
        let kd = k as i64;
        let mut out = Self::zero(self.ram * k, self.order * kd);
        for (&e, c) in &self.coeffs {
            out.set_coeff(e * kd, c.clone());
        }
        out
    }

    pub fn map<D: Coeff>(&self, mut f: impl FnMut(&C) -> D) -> TruncatedSeries<D> {
        let mut out = TruncatedSeries::zero(self.ram, self.order);
        for (&e, c) in &self.coeffs {
            out.set_coeff(e, f(c));
        }
        out
    }
}

impl TruncatedSeries<BigRational> {
    /// The x-coefficients `[x^0, x^1, …]` up to the trusted x-order,
    /// provided the series is an honest power series in `x`.
    pub fn x_coeffs(&self) -> Result<Vec<BigRational>, SeriesError> {
        let r = self.ram as i64;
        for (&e, _) in &self.coeffs {
            if e.rem_euclid(r) != 0 || e < 0 {
                return Err(SeriesError::FractionalExponent {
                    exponent: e,
                    divisor: r,
                });
            }
        }
        Ok((0..self.x_order()).map(|n| self.x_coeff(n)).collect())
    }
}
