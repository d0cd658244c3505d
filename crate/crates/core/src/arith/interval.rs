use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;

use super::Dyadic;

/// Closed real interval `[lo, hi]` with exact dyadic endpoints.
///
/// All operations are exact hulls; no outward rounding is needed since dyadic
/// numbers are closed under `+`, `-` and `*`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RealInterval {
    lo: Dyadic,
    hi: Dyadic,
}

impl RealInterval {
    /// Panics if `lo > hi`.
    pub fn new(lo: Dyadic, hi: Dyadic) -> Self {
        assert!(lo <= hi, "inverted interval [{lo:?}, {hi:?}]");
        RealInterval { lo, hi }
    }

    pub fn point(value: Dyadic) -> Self {
        RealInterval {
            lo: value.clone(),
            hi: value,
        }
    }

    pub fn lo(&self) -> &Dyadic {
        &self.lo
    }

    pub fn hi(&self) -> &Dyadic {
        &self.hi
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> Dyadic {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Dyadic {
        Dyadic::midpoint(&self.lo, &self.hi)
    }

    /// Half the width.
    pub fn radius(&self) -> Dyadic {
        self.width().half()
    }

    pub fn contains(&self, x: &Dyadic) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_rational(&self, q: &BigRational) -> bool {
        &self.lo.to_rational() <= q && q <= &self.hi.to_rational()
    }

    pub fn contains_zero(&self) -> bool {
        self.lo.signum() <= 0 && self.hi.signum() >= 0
    }

    /// `[lo, hi]` lies inside `other`.
    pub fn is_subset_of(&self, other: &RealInterval) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }

    pub fn intersects(&self, other: &RealInterval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    /// `max(|lo|, |hi|)`, the largest modulus attained on the interval.
    pub fn magnitude(&self) -> Dyadic {
        self.lo.abs().max(self.hi.abs())
    }

    /// Smallest modulus attained on the interval.
    pub fn mignitude(&self) -> Dyadic {
        if self.contains_zero() {
            Dyadic::zero()
        } else {
            self.lo.abs().min(self.hi.abs())
        }
    }

    /// Image of `t -> t^n`; tighter than repeated multiplication for even `n`.
    pub fn pow(&self, n: u32) -> RealInterval {
        if n == 0 {
            return RealInterval::point(Dyadic::one());
        }
        let a = self.lo.pow(n);
        let b = self.hi.pow(n);
        if n % 2 == 1 {
            return RealInterval::new(a, b);
        }
        let hi = a.clone().max(b.clone());
        let lo = if self.contains_zero() {
            Dyadic::zero()
        } else {
            a.min(b)
        };
        RealInterval::new(lo, hi)
    }

    pub fn scale(&self, c: &Dyadic) -> RealInterval {
        let a = &self.lo * c;
        let b = &self.hi * c;
        if a <= b {
            RealInterval::new(a, b)
        } else {
            RealInterval::new(b, a)
        }
    }
}

impl fmt::Debug for RealInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

pub fn interval_add(a: &RealInterval, b: &RealInterval) -> RealInterval {
    RealInterval::new(&a.lo + &b.lo, &a.hi + &b.hi)
}

pub fn interval_sub(a: &RealInterval, b: &RealInterval) -> RealInterval {
    RealInterval::new(&a.lo - &b.hi, &a.hi - &b.lo)
}

pub fn interval_mul(a: &RealInterval, b: &RealInterval) -> RealInterval {
    let products = [
        &a.lo * &b.lo,
        &a.lo * &b.hi,
        &a.hi * &b.lo,
        &a.hi * &b.hi,
    ];
    let lo = products.iter().min().expect("four products");
    let hi = products.iter().max().expect("four products");
    RealInterval::new(lo.clone(), hi.clone())
}

impl<'a> Add<&'a RealInterval> for &'a RealInterval {
    type Output = RealInterval;
    fn add(self, rhs: &'a RealInterval) -> RealInterval {
        interval_add(self, rhs)
    }
}

impl<'a> Sub<&'a RealInterval> for &'a RealInterval {
    type Output = RealInterval;
    fn sub(self, rhs: &'a RealInterval) -> RealInterval {
        interval_sub(self, rhs)
    }
}

impl<'a> Mul<&'a RealInterval> for &'a RealInterval {
    type Output = RealInterval;
    fn mul(self, rhs: &'a RealInterval) -> RealInterval {
        interval_mul(self, rhs)
    }
}

impl Neg for &RealInterval {
    type Output = RealInterval;
    fn neg(self) -> RealInterval {
        RealInterval::new(-&self.hi, -&self.lo)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(lo: i64, hi: i64) -> RealInterval {
        RealInterval::new(lo.into(), hi.into())
    }

    #[test]
    fn examples() {
        assert_eq!(&iv(1, 2) + &iv(3, 4), iv(4, 6));
        assert_eq!(&iv(-1, 1) * &iv(-1, 1), iv(-1, 1));
        assert_eq!(&iv(0, 0) * &iv(5, 7), iv(0, 0));
        assert_eq!(&iv(1, 2) - &iv(3, 4), iv(-3, -1));
    }

    #[test]
    fn even_powers_are_nonnegative() {
        assert_eq!(iv(-1, 1).pow(2), iv(0, 1));
        assert_eq!(iv(-3, -2).pow(2), iv(4, 9));
        assert_eq!(iv(-3, -2).pow(3), iv(-27, -8));
    }

    #[test]
    #[should_panic]
    fn rejects_inverted() {
        iv(2, 1);
    }
}
