//! Coefficient rings for truncated series: exact rationals, rationals with
//! a primitive cube root of unity adjoined (for twisting between the three
//! branches of a cubic kernel), and Laurent polynomials in a second
//! variable (for bivariate series).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Ring operations needed by [`crate::series::TruncatedSeries`]. All
/// implementations are exact; there is no floating point anywhere.
pub trait Coeff: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn from_i64(v: i64) -> Self;
    /// Multiplicative inverse where the ring admits one for this element.
    fn try_inv(&self) -> Option<Self>;
    /// Exact square root where one exists in the ring.
    fn try_sqrt(&self) -> Option<Self>;
}

fn rational_sqrt(v: &BigRational) -> Option<BigRational> {
    if v.is_negative() {
        return None;
    }
    let num = v.numer().sqrt();
    let den = v.denom().sqrt();
    if &(&num * &num) == v.numer() && &(&den * &den) == v.denom() {
        Some(BigRational::new(num, den))
    } else {
        None
    }
}

impl Coeff for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn try_inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn try_sqrt(&self) -> Option<Self> {
        rational_sqrt(self)
    }
}

/// An element `re + im·ω` of Q(ω), where ω is a primitive cube root of
/// unity (ω² = −1 − ω). Closed under the ring operations; inverses exist
/// for all nonzero elements since the norm `re² − re·im + im²` is positive
/// definite.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CycRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl CycRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        CycRational { re, im }
    }

    pub fn from_rational(re: BigRational) -> Self {
        CycRational {
            re,
            im: Zero::zero(),
        }
    }

    /// The root of unity ω itself.
    pub fn omega() -> Self {
        CycRational {
            re: Zero::zero(),
            im: One::one(),
        }
    }

    pub fn is_rational(&self) -> bool {
        Zero::is_zero(&self.im)
    }

    fn norm(&self) -> BigRational {
        &self.re * &self.re - &self.re * &self.im + &self.im * &self.im
    }
}

impl Coeff for CycRational {
    fn zero() -> Self {
        CycRational::from_rational(Zero::zero())
    }
    fn one() -> Self {
        CycRational::from_rational(One::one())
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.re) && Zero::is_zero(&self.im)
    }
    fn add(&self, rhs: &Self) -> Self {
        CycRational {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
    fn sub(&self, rhs: &Self) -> Self {
        CycRational {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
    fn mul(&self, rhs: &Self) -> Self {
        // (a + bω)(c + dω) = ac + (ad + bc)ω + bdω², ω² = −1 − ω.
        let bd = &self.im * &rhs.im;
        CycRational {
            re: &self.re * &rhs.re - &bd,
            im: &self.re * &rhs.im + &self.im * &rhs.re - &bd,
        }
    }
    fn neg(&self) -> Self {
        CycRational {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }
    fn from_i64(v: i64) -> Self {
        CycRational::from_rational(Coeff::from_i64(v))
    }
    fn try_inv(&self) -> Option<Self> {
        if Coeff::is_zero(self) {
            return None;
        }
        // 1/(a + bω) = (a + bω²)/norm = ((a − b) − bω)/norm.
        let norm = self.norm();
        Some(CycRational {
            re: (&self.re - &self.im) / &norm,
            im: -(&self.im / &norm),
        })
    }
    fn try_sqrt(&self) -> Option<Self> {
        if self.is_rational() {
            rational_sqrt(&self.re).map(CycRational::from_rational)
        } else {
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn omega_is_a_primitive_cube_root() {
        let w = CycRational::omega();
        let w2 = w.mul(&w);
        let w3 = w2.mul(&w);
        assert_eq!(w3, Coeff::one());
        assert!(w2 != Coeff::one());
        // 1 + ω + ω² = 0
        let one: CycRational = Coeff::one();
        assert!(one.add(&w).add(&w2).is_zero());
    }

    #[test]
    fn cyc_inverse_round_trips() {
        let v = CycRational::new(rat(3, 4), rat(-5, 7));
        let inv = v.try_inv().unwrap();
        assert_eq!(v.mul(&inv), Coeff::one());
    }

    #[test]
    fn rational_sqrt_detects_squares() {
        assert_eq!(rat(9, 4).try_sqrt(), Some(rat(3, 2)));
        assert_eq!(rat(2, 1).try_sqrt(), None);
        assert_eq!(rat(-4, 1).try_sqrt(), None);
    }
}
