//! Gaussian-integer arithmetic: unit entries for adjacency matrices and
//! arbitrary-precision Gaussian integers for exact elimination.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// An element of {0, 1, -1, i, -i}.
///
/// These are the only values a Hermitian adjacency entry, a switching
/// function, or a cycle value can take.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GaussianUnit {
    Zero,
    One,
    MinusOne,
    I,
    MinusI,
}

impl GaussianUnit {
    pub fn is_zero(self) -> bool {
        self == GaussianUnit::Zero
    }

    /// Complex conjugate.
    pub fn conj(self) -> Self {
        match self {
            GaussianUnit::I => GaussianUnit::MinusI,
            GaussianUnit::MinusI => GaussianUnit::I,
            other => other,
        }
    }

    /// Exponent k with self = i^k, for nonzero values.
    pub fn exponent(self) -> Option<u8> {
        match self {
            GaussianUnit::One => Some(0),
            GaussianUnit::I => Some(1),
            GaussianUnit::MinusOne => Some(2),
            GaussianUnit::MinusI => Some(3),
            GaussianUnit::Zero => None,
        }
    }

    /// i^k.
    pub fn from_exponent(k: u8) -> Self {
        match k % 4 {
            0 => GaussianUnit::One,
            1 => GaussianUnit::I,
            2 => GaussianUnit::MinusOne,
            _ => GaussianUnit::MinusI,
        }
    }

    pub fn inverse(self) -> Option<Self> {
        self.exponent().map(|k| Self::from_exponent((4 - k) % 4))
    }

    pub fn is_real(self) -> bool {
        matches!(
            self,
            GaussianUnit::Zero | GaussianUnit::One | GaussianUnit::MinusOne
        )
    }

    /// (re, im) components as machine integers.
    pub fn parts(self) -> (i8, i8) {
        match self {
            GaussianUnit::Zero => (0, 0),
            GaussianUnit::One => (1, 0),
            GaussianUnit::MinusOne => (-1, 0),
            GaussianUnit::I => (0, 1),
            GaussianUnit::MinusI => (0, -1),
        }
    }

    pub fn from_parts(re: i8, im: i8) -> Option<Self> {
        match (re, im) {
            (0, 0) => Some(GaussianUnit::Zero),
            (1, 0) => Some(GaussianUnit::One),
            (-1, 0) => Some(GaussianUnit::MinusOne),
            (0, 1) => Some(GaussianUnit::I),
            (0, -1) => Some(GaussianUnit::MinusI),
            _ => None,
        }
    }

    /// Text form used by the switching-function JSON encoding.
    pub fn label(self) -> &'static str {
        match self {
            GaussianUnit::Zero => "0",
            GaussianUnit::One => "1",
            GaussianUnit::MinusOne => "-1",
            GaussianUnit::I => "i",
            GaussianUnit::MinusI => "-i",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "0" => Some(GaussianUnit::Zero),
            "1" | "+1" => Some(GaussianUnit::One),
            "-1" => Some(GaussianUnit::MinusOne),
            "i" | "+i" => Some(GaussianUnit::I),
            "-i" => Some(GaussianUnit::MinusI),
            _ => None,
        }
    }

    /// The four nonzero units, in exponent order.
    pub const UNITS: [GaussianUnit; 4] = [
        GaussianUnit::One,
        GaussianUnit::I,
        GaussianUnit::MinusOne,
        GaussianUnit::MinusI,
    ];
}

impl Mul for GaussianUnit {
    type Output = GaussianUnit;
    fn mul(self, rhs: GaussianUnit) -> GaussianUnit {
        match (self.exponent(), rhs.exponent()) {
            (Some(a), Some(b)) => GaussianUnit::from_exponent((a + b) % 4),
            _ => GaussianUnit::Zero,
        }
    }
}

impl Neg for GaussianUnit {
    type Output = GaussianUnit;
    fn neg(self) -> GaussianUnit {
        self * GaussianUnit::MinusOne
    }
}

impl fmt::Display for GaussianUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Arbitrary-precision Gaussian integer re + im*i.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaussInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussInt {
    pub fn new(re: BigInt, im: BigInt) -> Self {
        GaussInt { re, im }
    }

    pub fn zero() -> Self {
        GaussInt::new(BigInt::zero(), BigInt::zero())
    }

    pub fn one() -> Self {
        GaussInt::new(BigInt::one(), BigInt::zero())
    }

    pub fn from_int(v: i64) -> Self {
        GaussInt::new(BigInt::from(v), BigInt::zero())
    }

    pub fn from_unit(u: GaussianUnit) -> Self {
        let (re, im) = u.parts();
        GaussInt::new(BigInt::from(re), BigInt::from(im))
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussInt::new(self.re.clone(), -self.im.clone())
    }

    /// Exact quotient self / rhs. Panics if rhs is zero or does not divide
    /// exactly; callers rely on this to catch elimination bugs loudly.
    pub fn div_exact(&self, rhs: &GaussInt) -> GaussInt {
        assert!(!rhs.is_zero(), "division by zero Gaussian integer");
        // (a+bi)/(c+di) = (a+bi)(c-di) / (c^2+d^2)
        let norm = &rhs.re * &rhs.re + &rhs.im * &rhs.im;
        let num = self * &rhs.conj();
        let (qr, rr) = num_integer_div_rem(&num.re, &norm);
        let (qi, ri) = num_integer_div_rem(&num.im, &norm);
        assert!(
            rr.is_zero() && ri.is_zero(),
            "inexact Gaussian division: ({}+{}i)/({}+{}i)",
            self.re,
            self.im,
            rhs.re,
            rhs.im
        );
        GaussInt::new(qr, qi)
    }
}

fn num_integer_div_rem(a: &BigInt, b: &BigInt) -> (BigInt, BigInt) {
    let q = a / b;
    let r = a - &q * b;
    (q, r)
}

impl Add for &GaussInt {
    type Output = GaussInt;
    fn add(self, rhs: &GaussInt) -> GaussInt {
        GaussInt::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &GaussInt {
    type Output = GaussInt;
    fn sub(self, rhs: &GaussInt) -> GaussInt {
        GaussInt::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for &GaussInt {
    type Output = GaussInt;
    fn mul(self, rhs: &GaussInt) -> GaussInt {
        GaussInt::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Neg for GaussInt {
    type Output = GaussInt;
    fn neg(self) -> GaussInt {
        GaussInt::new(-self.re, -self.im)
    }
}

impl fmt::Display for GaussInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.im.is_positive() {
            write!(f, "{}+{}i", self.re, self.im)
        } else {
            write!(f, "{}{}i", self.re, self.im)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_multiplication_table() {
        use GaussianUnit::*;
        assert_eq!(I * I, MinusOne);
        assert_eq!(I * MinusI, One);
        assert_eq!(MinusOne * MinusOne, One);
        assert_eq!(I * Zero, Zero);
        assert_eq!(MinusI * MinusI, MinusOne);
    }

    #[test]
    fn unit_conjugation() {
        for u in GaussianUnit::UNITS {
            assert_eq!(u.conj().conj(), u);
            assert_eq!(u * u.conj(), GaussianUnit::One);
        }
    }

    #[test]
    fn exact_division_roundtrip() {
        let a = GaussInt::new(BigInt::from(7), BigInt::from(-3));
        let b = GaussInt::new(BigInt::from(2), BigInt::from(5));
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&b), a);
        assert_eq!(prod.div_exact(&a), b);
    }

    #[test]
    #[should_panic(expected = "inexact")]
    fn inexact_division_panics() {
        let a = GaussInt::from_int(3);
        let b = GaussInt::from_int(2);
        let _ = a.div_exact(&b);
    }
}
