use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::LinalgError;

/// Exact element of the cyclotomic field ℚ(ζ), ζ a primitive 8th root of unity.
///
/// Stored as `(c₀ + c₁ζ + c₂ζ² + c₃ζ³) / den` modulo `ζ⁴ + 1`, with a single
/// positive common denominator. After every operation the numerators and the
/// denominator share no common factor, so structural equality is field equality.
///
/// `i = ζ²` and `√2 = ζ − ζ³` are both representable, which is what the
/// orthonormalizing change of basis for the skew⊗skew form needs.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycScalar {
    num: [BigInt; 4],
    den: BigInt,
}

impl CycScalar {
    fn from_parts(num: [BigInt; 4], den: BigInt) -> Self {
        let mut s = CycScalar { num, den };
        s.normalize();
        s
    }

    fn normalize(&mut self) {
        if self.num.iter().all(Zero::is_zero) {
            self.den = BigInt::one();
            return;
        }
        if self.den.is_negative() {
            self.den = -&self.den;
            for c in self.num.iter_mut() {
                *c = -&*c;
            }
        }
        if self.den.is_one() {
            return;
        }
        let mut g = self.den.clone();
        for c in &self.num {
            if g.is_one() {
                return;
            }
            g = g.gcd(c);
        }
        if !g.is_one() {
            for c in self.num.iter_mut() {
                *c = &*c / &g;
            }
            self.den = &self.den / &g;
        }
    }

    pub fn zero() -> Self {
        CycScalar {
            num: [BigInt::zero(), BigInt::zero(), BigInt::zero(), BigInt::zero()],
            den: BigInt::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(v: i64) -> Self {
        Self::from_bigint(BigInt::from(v))
    }

    pub fn from_bigint(v: BigInt) -> Self {
        CycScalar {
            num: [v, BigInt::zero(), BigInt::zero(), BigInt::zero()],
            den: BigInt::one(),
        }
    }

    pub fn from_rational(q: &BigRational) -> Self {
        Self::from_parts(
            [q.numer().clone(), BigInt::zero(), BigInt::zero(), BigInt::zero()],
            q.denom().clone(),
        )
    }

    /// Builds `a₀ + a₁ζ + a₂ζ² + a₃ζ³` from rational coefficients.
    pub fn from_coeffs(coeffs: [BigRational; 4]) -> Self {
        let den = coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num = coeffs.map(|c| c.numer() * (&den / c.denom()));
        Self::from_parts(num, den)
    }

    /// Integer coefficients, no denominator.
    pub fn from_int_coeffs(c: [i64; 4]) -> Self {
        CycScalar {
            num: c.map(BigInt::from),
            den: BigInt::one(),
        }
    }

    /// Gaussian integer `re + im·i`.
    pub fn gaussian(re: i64, im: i64) -> Self {
        Self::from_int_coeffs([re, 0, im, 0])
    }

    pub fn zeta() -> Self {
        Self::from_int_coeffs([0, 1, 0, 0])
    }

    /// `i = ζ²`
    pub fn i() -> Self {
        Self::from_int_coeffs([0, 0, 1, 0])
    }

    /// `√2 = ζ − ζ³`
    pub fn sqrt2() -> Self {
        Self::from_int_coeffs([0, 1, 0, -1])
    }

    /// `1/√2 = (ζ − ζ³)/2`
    pub fn inv_sqrt2() -> Self {
        Self::from_parts(
            [BigInt::zero(), BigInt::one(), BigInt::zero(), -BigInt::one()],
            BigInt::from(2),
        )
    }

    /// Coefficient of `ζᵏ` as a reduced fraction.
    pub fn coeff(&self, k: usize) -> BigRational {
        BigRational::new(self.num[k].clone(), self.den.clone())
    }

    pub fn coeffs(&self) -> [BigRational; 4] {
        [self.coeff(0), self.coeff(1), self.coeff(2), self.coeff(3)]
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one()
            && self.num[0].is_one()
            && self.num[1..].iter().all(Zero::is_zero)
    }

    /// `Some(q)` when the element lies in ℚ.
    pub fn to_rational(&self) -> Option<BigRational> {
        if self.num[1..].iter().all(Zero::is_zero) {
            Some(self.coeff(0))
        } else {
            None
        }
    }

    /// Galois automorphism `ζ ↦ ζᵏ` for odd `k`.
    pub fn galois(&self, k: usize) -> Self {
        assert!(k % 2 == 1, "galois exponent must be odd");
        let mut out = [BigInt::zero(), BigInt::zero(), BigInt::zero(), BigInt::zero()];
        for (j, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = (j * k) % 8;
            if e < 4 {
                out[e] += c;
            } else {
                out[e - 4] -= c;
            }
        }
        CycScalar {
            num: out,
            den: self.den.clone(),
        }
    }

    /// Field norm down to ℚ: the product of all four Galois conjugates.
    pub fn norm(&self) -> BigRational {
        let prod = self * &(&self.galois(3) * &(&self.galois(5) * &self.galois(7)));
        prod.to_rational()
            .expect("product over the Galois group is rational")
    }

    pub fn inv(&self) -> Result<Self, LinalgError> {
        if self.is_zero() {
            return Err(LinalgError::DivisionByZero);
        }
        let cofactor = &self.galois(3) * &(&self.galois(5) * &self.galois(7));
        let n = (self * &cofactor)
            .to_rational()
            .expect("product over the Galois group is rational");
        Ok(cofactor.scale(&n.recip()))
    }

    pub fn div(&self, other: &Self) -> Result<Self, LinalgError> {
        Ok(self * &other.inv()?)
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        Self::from_parts(
            self.num.clone().map(|c| c * q.numer()),
            &self.den * q.denom(),
        )
    }

    pub fn scale_int(&self, k: &BigInt) -> Self {
        Self::from_parts(self.num.clone().map(|c| c * k), self.den.clone())
    }
}

impl Default for CycScalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for CycScalar {
    fn from(v: i64) -> Self {
        Self::from_int(v)
    }
}

impl<'a> Add<&'a CycScalar> for &'a CycScalar {
    type Output = CycScalar;
    fn add(self, rhs: &CycScalar) -> CycScalar {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        if self.den == rhs.den {
            let num = [0, 1, 2, 3].map(|k| &self.num[k] + &rhs.num[k]);
            return CycScalar::from_parts(num, self.den.clone());
        }
        let num = [0, 1, 2, 3].map(|k| &self.num[k] * &rhs.den + &rhs.num[k] * &self.den);
        CycScalar::from_parts(num, &self.den * &rhs.den)
    }
}

impl<'a> Sub<&'a CycScalar> for &'a CycScalar {
    type Output = CycScalar;
    fn sub(self, rhs: &CycScalar) -> CycScalar {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a CycScalar> for &'a CycScalar {
    type Output = CycScalar;
    fn mul(self, rhs: &CycScalar) -> CycScalar {
        if self.is_zero() || rhs.is_zero() {
            return CycScalar::zero();
        }
        let mut out = [BigInt::zero(), BigInt::zero(), BigInt::zero(), BigInt::zero()];
        for (j, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (k, b) in rhs.num.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let p = a * b;
                // ζ⁴ = −1
                if j + k < 4 {
                    out[j + k] += p;
                } else {
                    out[j + k - 4] -= p;
                }
            }
        }
        CycScalar::from_parts(out, &self.den * &rhs.den)
    }
}

impl Neg for &CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        CycScalar {
            num: self.num.clone().map(|c| -c),
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<CycScalar> for CycScalar {
            type Output = CycScalar;
            fn $method(self, rhs: CycScalar) -> CycScalar {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a CycScalar> for CycScalar {
            type Output = CycScalar;
            fn $method(self, rhs: &CycScalar) -> CycScalar {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        -&self
    }
}

impl fmt::Display for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, q) in self.coeffs().iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            let mag = q.abs();
            let sign = if q.is_negative() { "-" } else { "+" };
            if first {
                if q.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if k == 1 {
                        write!(f, "z")?;
                    } else {
                        write!(f, "z^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycScalar({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn i_squared_is_minus_one() {
        assert_eq!(CycScalar::i() * CycScalar::i(), CycScalar::from_int(-1));
    }

    #[test]
    fn sqrt2_squared_is_two() {
        assert_eq!(CycScalar::sqrt2() * CycScalar::sqrt2(), CycScalar::from_int(2));
        assert_eq!(
            CycScalar::inv_sqrt2() * CycScalar::inv_sqrt2(),
            CycScalar::from_rational(&q(1, 2))
        );
    }

    #[test]
    fn inverse_of_sqrt2() {
        let inv = CycScalar::sqrt2().inv().unwrap();
        // (ζ − ζ³)/2, checked by multiplying back
        let expected = CycScalar::from_coeffs([q(0, 1), q(1, 2), q(0, 1), q(-1, 2)]);
        assert_eq!(inv, expected);
        assert!((&inv * &CycScalar::sqrt2()).is_one());
    }

    #[test]
    fn zeta_has_order_eight() {
        let z = CycScalar::zeta();
        let mut p = CycScalar::one();
        for k in 1..=8 {
            p = &p * &z;
            assert_eq!(p.is_one(), k == 8, "ζ^{k}");
        }
    }

    #[test]
    fn inverse_of_zero_fails() {
        assert_eq!(CycScalar::zero().inv(), Err(LinalgError::DivisionByZero));
    }

    #[test]
    fn reduction_is_canonical() {
        let a = CycScalar::from_coeffs([q(2, 4), q(3, 6), q(0, 1), q(-4, 8)]);
        let b = CycScalar::from_coeffs([q(1, 2), q(1, 2), q(0, 1), q(-1, 2)]);
        assert_eq!(a, b);
        assert_eq!(a.den, BigInt::from(2));
    }

    #[test]
    fn norm_of_one_plus_zeta() {
        // N(1+ζ) = Φ₈(−1) = 2
        let a = CycScalar::from_int_coeffs([1, 1, 0, 0]);
        assert_eq!(a.norm(), q(2, 1));
    }

    #[test]
    fn display_formats_terms() {
        assert_eq!(CycScalar::inv_sqrt2().to_string(), "1/2*z - 1/2*z^3");
        assert_eq!(CycScalar::from_int(-3).to_string(), "-3");
    }

    fn arb_scalar() -> impl Strategy<Value = CycScalar> {
        (prop::array::uniform4(-6i64..=6), 1i64..=5).prop_map(|(c, d)| {
            CycScalar::from_coeffs(c.map(|n| q(n, d)))
        })
    }

    proptest! {
        #[test]
        fn field_axioms(a in arb_scalar(), b in arb_scalar(), c in arb_scalar()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert!((&a - &a).is_zero());
            if !a.is_zero() {
                prop_assert!((&a * &a.inv().unwrap()).is_one());
            }
        }

        #[test]
        fn galois_is_multiplicative(a in arb_scalar(), b in arb_scalar(), k in prop::sample::select(vec![1usize, 3, 5, 7])) {
            prop_assert_eq!((&a * &b).galois(k), &a.galois(k) * &b.galois(k));
        }
    }
}
