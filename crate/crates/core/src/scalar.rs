//! Exact scalars in the cyclotomic field Q(zeta) with zeta^2 = -1 - zeta.
//!
//! Every quantity in the engine is a rational combination `a + b*zeta`
//! where `zeta` is a primitive cube root of unity. Rationals are
//! arbitrary precision, so all downstream identities are exact.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use crate::error::EngineError;

/// Element `a + b*zeta` of Q(zeta_3).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycScalar {
    pub a: BigRational,
    pub b: BigRational,
}

pub fn big(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

impl CycScalar {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        CycScalar { a, b }
    }

    pub fn zero() -> Self {
        CycScalar::new(BigRational::zero(), BigRational::zero())
    }

    pub fn one() -> Self {
        CycScalar::new(BigRational::one(), BigRational::zero())
    }

    pub fn zeta() -> Self {
        CycScalar::new(BigRational::zero(), BigRational::one())
    }

    /// zeta^k for any integer k.
    pub fn zeta_pow(k: i64) -> Self {
        match k.rem_euclid(3) {
            0 => CycScalar::one(),
            1 => CycScalar::zeta(),
            // zeta^2 = -1 - zeta
            _ => CycScalar::new(-BigRational::one(), -BigRational::one()),
        }
    }

    pub fn from_int(n: i64) -> Self {
        CycScalar::new(big(n), BigRational::zero())
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        CycScalar::new(ratio(num, den), BigRational::zero())
    }

    pub fn from_rational(r: BigRational) -> Self {
        CycScalar::new(r, BigRational::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// True when the zeta-part vanishes.
    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    /// Galois conjugate: zeta -> zeta^2.
    pub fn conj(&self) -> Self {
        // a + b*zeta^2 = (a - b) - b*zeta
        CycScalar::new(&self.a - &self.b, -self.b.clone())
    }

    /// Field norm (a + b zeta)(a + b zeta^2) = a^2 - ab + b^2 >= 0.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - &self.a * &self.b + &self.b * &self.b
    }

    pub fn inv(&self) -> Result<Self, EngineError> {
        if self.is_zero() {
            return Err(EngineError::DivisionByZero);
        }
        let n = self.norm();
        let c = self.conj();
        Ok(CycScalar::new(c.a / &n, c.b / &n))
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut acc = CycScalar::one();
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        acc
    }
}

impl fmt::Debug for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else if self.a.is_zero() {
            write!(f, "{}*z3", self.b)
        } else if self.b.is_negative() {
            write!(f, "{}{}*z3", self.a, self.b)
        } else {
            write!(f, "{}+{}*z3", self.a, self.b)
        }
    }
}

impl<'a, 'b> Add<&'b CycScalar> for &'a CycScalar {
    type Output = CycScalar;
    fn add(self, rhs: &'b CycScalar) -> CycScalar {
        CycScalar::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl<'a, 'b> Sub<&'b CycScalar> for &'a CycScalar {
    type Output = CycScalar;
    fn sub(self, rhs: &'b CycScalar) -> CycScalar {
        CycScalar::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl<'a, 'b> Mul<&'b CycScalar> for &'a CycScalar {
    type Output = CycScalar;
    fn mul(self, rhs: &'b CycScalar) -> CycScalar {
        // (a1 + b1 z)(a2 + b2 z) with z^2 = -1 - z
        let bb = &self.b * &rhs.b;
        CycScalar::new(
            &self.a * &rhs.a - &bb,
            &self.a * &rhs.b + &self.b * &rhs.a - &bb,
        )
    }
}

impl<'a> Neg for &'a CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        CycScalar::new(-self.a.clone(), -self.b.clone())
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<CycScalar> for CycScalar {
            type Output = CycScalar;
            fn $method(self, rhs: CycScalar) -> CycScalar {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $trait<&'a CycScalar> for CycScalar {
            type Output = CycScalar;
            fn $method(self, rhs: &'a CycScalar) -> CycScalar {
                (&self).$method(rhs)
            }
        }
        impl<'a> $trait<CycScalar> for &'a CycScalar {
            type Output = CycScalar;
            fn $method(self, rhs: CycScalar) -> CycScalar {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        -&self
    }
}

impl Div for CycScalar {
    type Output = CycScalar;
    fn div(self, rhs: CycScalar) -> CycScalar {
        &self * rhs.inv().expect("division by zero in CycScalar")
    }
}

impl AddAssign<&CycScalar> for CycScalar {
    fn add_assign(&mut self, rhs: &CycScalar) {
        self.a += &rhs.a;
        self.b += &rhs.b;
    }
}

impl SubAssign<&CycScalar> for CycScalar {
    fn sub_assign(&mut self, rhs: &CycScalar) {
        self.a -= &rhs.a;
        self.b -= &rhs.b;
    }
}

impl MulAssign<&CycScalar> for CycScalar {
    fn mul_assign(&mut self, rhs: &CycScalar) {
        let r = &*self * rhs;
        *self = r;
    }
}

/// Element `re + im*i` of Q(zeta_3)[i]. Only the transition-matrix
/// surface for local P^2 needs the imaginary unit; the graph-sum
/// engine itself stays inside Q(zeta_3).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GaussCyc {
    pub re: CycScalar,
    pub im: CycScalar,
}

impl GaussCyc {
    pub fn new(re: CycScalar, im: CycScalar) -> Self {
        GaussCyc { re, im }
    }

    pub fn real(re: CycScalar) -> Self {
        GaussCyc::new(re, CycScalar::zero())
    }

    pub fn i() -> Self {
        GaussCyc::new(CycScalar::zero(), CycScalar::one())
    }

    pub fn mul(&self, rhs: &GaussCyc) -> GaussCyc {
        GaussCyc::new(
            &(&self.re * &rhs.re) - &(&self.im * &rhs.im),
            &(&self.re * &rhs.im) + &(&self.im * &rhs.re),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zeta_cubes_to_one() {
        let z = CycScalar::zeta();
        assert_eq!(z.pow(3), CycScalar::one());
        // 1 + z + z^2 = 0
        let s = CycScalar::one() + &z + z.pow(2);
        assert!(s.is_zero());
    }

    #[test]
    fn zeta_times_zeta_sq() {
        let z = CycScalar::zeta();
        assert_eq!(&z * &z.pow(2), CycScalar::one());
    }

    #[test]
    fn one_minus_zeta_product() {
        let z = CycScalar::zeta();
        let u = CycScalar::one() - &z;
        let v = CycScalar::one() - z.pow(2);
        assert_eq!(&u * &v, CycScalar::from_int(3));
    }

    #[test]
    fn inverse_of_one_minus_zeta() {
        let z = CycScalar::zeta();
        let u = CycScalar::one() - &z;
        // (1 - zeta)^{-1} = (2 + zeta)/3
        let expect = CycScalar::new(ratio(2, 3), ratio(1, 3));
        assert_eq!(u.inv().unwrap(), expect);
        assert!(CycScalar::zero().inv().is_err());
    }

    #[test]
    fn rational_predicate() {
        assert!(CycScalar::from_ratio(7, 3).is_rational());
        assert!(!CycScalar::zeta().is_rational());
    }
}
