//! Exact dyadic numbers `mantissa * 2^exponent`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// A dyadic rational `mantissa * 2^exponent`.
///
/// Values are kept normalized: the mantissa is odd, or the mantissa is zero
/// and the exponent is zero. Two equal values therefore have identical
/// representations, so derived equality and hashing are exact.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Dyadic {
    mantissa: BigInt,
    exponent: i64,
}

impl Dyadic {
    pub fn new(mantissa: impl Into<BigInt>, exponent: i64) -> Self {
        let mut mantissa = mantissa.into();
        if mantissa.is_zero() {
            return Dyadic {
                mantissa,
                exponent: 0,
            };
        }
        let tz = mantissa.trailing_zeros().unwrap_or(0);
        let mut exponent = exponent;
        if tz > 0 {
            mantissa >>= tz as usize;
            exponent += tz as i64;
        }
        Dyadic { mantissa, exponent }
    }

    pub fn zero() -> Self {
        Dyadic {
            mantissa: BigInt::zero(),
            exponent: 0,
        }
    }

    pub fn one() -> Self {
        Dyadic {
            mantissa: BigInt::one(),
            exponent: 0,
        }
    }

    pub fn from_int(value: impl Into<BigInt>) -> Self {
        Dyadic::new(value.into(), 0)
    }

    /// `2^k`.
    pub fn pow2(k: i64) -> Self {
        Dyadic {
            mantissa: BigInt::one(),
            exponent: k,
        }
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mantissa
    }

    pub fn exponent(&self) -> i64 {
        self.exponent
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    /// -1, 0 or 1.
    pub fn signum(&self) -> i32 {
        match self.mantissa.sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    pub fn is_negative(&self) -> bool {
        self.mantissa.is_negative()
    }

    pub fn abs(&self) -> Self {
        Dyadic {
            mantissa: self.mantissa.abs(),
            exponent: self.exponent,
        }
    }

    /// Multiplies by `2^k`.
    pub fn mul_pow2(&self, k: i64) -> Self {
        if self.is_zero() {
            return Dyadic::zero();
        }
        Dyadic {
            mantissa: self.mantissa.clone(),
            exponent: self.exponent + k,
        }
    }

    pub fn half(&self) -> Self {
        self.mul_pow2(-1)
    }

    pub fn midpoint(a: &Dyadic, b: &Dyadic) -> Dyadic {
        (a + b).half()
    }

    pub fn pow(&self, n: u32) -> Self {
        if n == 0 {
            return Dyadic::one();
        }
        Dyadic::new(
            num_traits::pow(self.mantissa.clone(), n as usize),
            self.exponent * n as i64,
        )
    }

    pub fn to_rational(&self) -> BigRational {
        if self.exponent >= 0 {
            BigRational::from_integer(&self.mantissa << self.exponent as usize)
        } else {
            BigRational::new(
                self.mantissa.clone(),
                BigInt::one() << (-self.exponent) as usize,
            )
        }
    }

    pub fn to_f64(&self) -> f64 {
        let bits = self.mantissa.bits() as i64;
        // keep the leading 60 bits so the conversion cannot overflow
        let shift = (bits - 60).max(0);
        let m = (&self.mantissa >> shift as usize).to_f64().unwrap_or(0.0);
        let e = self.exponent + shift;
        m * 2f64.powi(e.clamp(i32::MIN as i64, i32::MAX as i64) as i32)
    }

    /// Writes the value as `numerator * 2^k` with a common exponent `k`
    /// (the minimum of both exponents) and returns the two numerators.
    pub fn align(a: &Dyadic, b: &Dyadic) -> (BigInt, BigInt, i64) {
        let e = a.exponent.min(b.exponent);
        let ma = &a.mantissa << (a.exponent - e) as usize;
        let mb = &b.mantissa << (b.exponent - e) as usize;
        (ma, mb, e)
    }

    /// Largest multiple of `2^-precision` that is `<= q`.
    pub fn floor_rational(q: &BigRational, precision: u32) -> Dyadic {
        let scaled = q * BigRational::from_integer(BigInt::one() << precision as usize);
        Dyadic::new(scaled.floor().to_integer(), -(precision as i64))
    }

    /// Smallest multiple of `2^-precision` that is `>= q`.
    pub fn ceil_rational(q: &BigRational, precision: u32) -> Dyadic {
        let scaled = q * BigRational::from_integer(BigInt::one() << precision as usize);
        Dyadic::new(scaled.ceil().to_integer(), -(precision as i64))
    }

    /// A certified upper bound on `sqrt(self)` for `self >= 0`, exact when the
    /// square root is itself a short dyadic. The result carries at least 64
    /// significant bits.
    pub fn sqrt_upper(&self) -> Dyadic {
        assert!(!self.is_negative(), "square root of a negative dyadic");
        if self.is_zero() {
            return Dyadic::zero();
        }
        let mut m = self.mantissa.clone();
        let mut e = self.exponent;
        if e.is_odd() {
            m <<= 1;
            e -= 1;
        }
        let bits = m.bits() as i64;
        let p = if bits < 128 { (128 - bits) / 2 + 1 } else { 0 };
        m <<= (2 * p) as usize;
        e -= 2 * p;
        let mut s = m.sqrt();
        if &s * &s < m {
            s += 1;
        }
        Dyadic::new(s, e / 2)
    }

    /// Decimal rendering truncated toward zero after `digits` fractional digits.
    pub fn to_decimal(&self, digits: usize) -> String {
        let q = self.to_rational();
        let scale = num_traits::pow(BigInt::from(10), digits);
        let scaled = (q.abs() * BigRational::from_integer(scale.clone())).floor().to_integer();
        let (int_part, frac_part) = scaled.div_rem(&scale);
        let sign = if self.is_negative() { "-" } else { "" };
        if digits == 0 {
            return format!("{sign}{int_part}");
        }
        format!("{sign}{int_part}.{:0>width$}", frac_part.to_string(), width = digits)
    }
}

impl Default for Dyadic {
    fn default() -> Self {
        Dyadic::zero()
    }
}

impl From<i64> for Dyadic {
    fn from(v: i64) -> Self {
        Dyadic::from_int(v)
    }
}

impl From<BigInt> for Dyadic {
    fn from(v: BigInt) -> Self {
        Dyadic::from_int(v)
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let (sa, sb) = (self.signum(), other.signum());
        if sa != sb {
            return sa.cmp(&sb);
        }
        if sa == 0 {
            return Ordering::Equal;
        }
        let (a, b, _) = Dyadic::align(self, other);
        a.cmp(&b)
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*2^{}", self.mantissa, self.exponent)
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponent >= 0 {
            write!(f, "{}", &self.mantissa << self.exponent as usize)
        } else {
            // terminating expansion: exactly -exponent fractional digits
            f.write_str(&self.to_decimal((-self.exponent) as usize))
        }
    }
}

impl<'a> Add<&'a Dyadic> for &'a Dyadic {
    type Output = Dyadic;
    fn add(self, rhs: &'a Dyadic) -> Dyadic {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let (a, b, e) = Dyadic::align(self, rhs);
        Dyadic::new(a + b, e)
    }
}

impl<'a> Sub<&'a Dyadic> for &'a Dyadic {
    type Output = Dyadic;
    fn sub(self, rhs: &'a Dyadic) -> Dyadic {
        if rhs.is_zero() {
            return self.clone();
        }
        let (a, b, e) = Dyadic::align(self, rhs);
        Dyadic::new(a - b, e)
    }
}

impl<'a> Mul<&'a Dyadic> for &'a Dyadic {
    type Output = Dyadic;
    fn mul(self, rhs: &'a Dyadic) -> Dyadic {
        if self.is_zero() || rhs.is_zero() {
            return Dyadic::zero();
        }
        // product of odd mantissas is odd: already normalized
        Dyadic {
            mantissa: &self.mantissa * &rhs.mantissa,
            exponent: self.exponent + rhs.exponent,
        }
    }
}

impl Neg for &Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        Dyadic {
            mantissa: -&self.mantissa,
            exponent: self.exponent,
        }
    }
}

impl Neg for Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        Dyadic {
            mantissa: -self.mantissa,
            exponent: self.exponent,
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Dyadic> for Dyadic {
            type Output = Dyadic;
            fn $m(self, rhs: Dyadic) -> Dyadic { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a Dyadic> for Dyadic {
            type Output = Dyadic;
            fn $m(self, rhs: &'a Dyadic) -> Dyadic { (&self).$m(rhs) }
        }
        impl<'a> $tr<Dyadic> for &'a Dyadic {
            type Output = Dyadic;
            fn $m(self, rhs: Dyadic) -> Dyadic { self.$m(&rhs) }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl std::iter::Sum for Dyadic {
    fn sum<I: Iterator<Item = Dyadic>>(iter: I) -> Dyadic {
        iter.fold(Dyadic::zero(), |acc, x| acc + x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(m: i64, e: i64) -> Dyadic {
        Dyadic::new(m, e)
    }

    #[test]
    fn normalizes() {
        assert_eq!(d(12, 0), d(3, 2));
        assert_eq!(d(0, 7), Dyadic::zero());
        assert_eq!(d(8, -3), Dyadic::one());
        assert_eq!(d(-6, -1), d(-3, 0));
    }

    #[test]
    fn ring_ops() {
        assert_eq!(d(3, -1) + d(1, -2), d(7, -2));
        assert_eq!(d(3, -1) - d(3, -1), Dyadic::zero());
        assert_eq!(d(3, -1) * d(3, -1), d(9, -2));
        assert_eq!(d(5, 0).half(), d(5, -1));
    }

    #[test]
    fn ordering() {
        assert!(d(-1, 10) < d(1, -10));
        assert!(d(3, -2) < d(1, 0));
        assert!(d(-3, -2) > d(-1, 0));
        assert_eq!(d(4, 0).cmp(&d(1, 2)), Ordering::Equal);
    }

    #[test]
    fn sqrt_upper_is_upper_and_exact_on_squares() {
        assert_eq!(d(25, 0).sqrt_upper(), d(5, 0));
        assert_eq!(d(1, -2).sqrt_upper(), d(1, -1));
        let s = d(2, 0).sqrt_upper();
        assert!(&s * &s >= d(2, 0));
        assert!(s.to_rational() < num_rational::BigRational::new(1_414_214.into(), 1_000_000.into()));
        let s = d(3, -7).sqrt_upper();
        assert!(&s * &s >= d(3, -7));
    }

    #[test]
    fn rational_rounding() {
        let third = BigRational::new(1.into(), 3.into());
        let lo = Dyadic::floor_rational(&third, 4);
        let hi = Dyadic::ceil_rational(&third, 4);
        assert_eq!(lo, d(5, -4));
        assert_eq!(hi, d(6, -4));
        let two = BigRational::from_integer(2.into());
        assert_eq!(Dyadic::floor_rational(&two, 10), d(2, 0));
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(d(3, -1).to_string(), "1.5");
        assert_eq!(d(-1, -2).to_string(), "-0.25");
        assert_eq!(d(5, 3).to_string(), "40");
        assert_eq!(d(1, -1).to_decimal(3), "0.500");
    }
}
