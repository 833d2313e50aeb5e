//! Gaussian rationals `a + b i` with exact components.

use crate::rational::{self, QRat};
use num::{One, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaussRat {
    pub re: QRat,
    pub im: QRat,
}

impl GaussRat {
    pub fn new(re: QRat, im: QRat) -> Self {
        GaussRat { re, im }
    }

    pub fn from_rat(re: QRat) -> Self {
        GaussRat {
            re,
            im: QRat::zero(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rat(rational::rat_int(n))
    }

    pub fn zero() -> Self {
        Self::from_rat(QRat::zero())
    }

    pub fn one() -> Self {
        Self::from_rat(QRat::one())
    }

    pub fn i() -> Self {
        GaussRat {
            re: QRat::zero(),
            im: QRat::one(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussRat {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    pub fn norm_sq(&self) -> QRat {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Self {
        let n = self.norm_sq();
        assert!(!n.is_zero(), "division by zero gaussian rational");
        GaussRat {
            re: &self.re / &n,
            im: -&self.im / &n,
        }
    }
}

impl fmt::Display for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", rational::fmt_rat(&self.re))
        } else if self.re.is_zero() {
            write!(f, "{}*i", rational::fmt_rat(&self.im))
        } else {
            write!(
                f,
                "{}{}{}*i",
                rational::fmt_rat(&self.re),
                if self.im < QRat::zero() { "" } else { "+" },
                rational::fmt_rat(&self.im)
            )
        }
    }
}

impl Add for &GaussRat {
    type Output = GaussRat;
    fn add(self, rhs: &GaussRat) -> GaussRat {
        GaussRat {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl Sub for &GaussRat {
    type Output = GaussRat;
    fn sub(self, rhs: &GaussRat) -> GaussRat {
        GaussRat {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl Mul for &GaussRat {
    type Output = GaussRat;
    fn mul(self, rhs: &GaussRat) -> GaussRat {
        GaussRat {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Div for &GaussRat {
    type Output = GaussRat;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &GaussRat) -> GaussRat {
        self * &rhs.inv()
    }
}

impl Neg for &GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn field_operations() {
        let z = GaussRat::new(rat(1, 2), rat(-3, 4));
        let w = GaussRat::new(rat(2, 1), rat(1, 3));
        let prod = &z * &w;
        // (1/2 - 3/4 i)(2 + 1/3 i) = 1 + 1/4 + (1/6 - 3/2) i
        assert_eq!(prod.re, rat(5, 4));
        assert_eq!(prod.im, rat(-4, 3));
        let back = &prod / &w;
        assert_eq!(back, z);
        assert_eq!((&z - &z), GaussRat::zero());
        assert_eq!(&GaussRat::i() * &GaussRat::i(), GaussRat::from_int(-1));
    }

    #[test]
    fn display_forms() {
        assert_eq!(GaussRat::from_rat(rat(3, 4)).to_string(), "3/4");
        assert_eq!(GaussRat::new(rat(1, 2), rat(-1, 3)).to_string(), "1/2-1/3*i");
        assert_eq!(GaussRat::i().to_string(), "1*i");
    }
}
