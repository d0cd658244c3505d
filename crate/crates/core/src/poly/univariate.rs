use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arith::{ComplexBox, Dyadic, RealInterval};

/// Dense polynomial with integer coefficients; `coeffs[k]` multiplies `t^k`.
///
/// The coefficient vector never ends in a zero, so the zero polynomial is the
/// empty vector and `degree() == len - 1` otherwise.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UnivariatePolynomial {
    coeffs: Vec<BigInt>,
}

impl UnivariatePolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UnivariatePolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        UnivariatePolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c * t^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// `t - a`.
    pub fn linear_root(a: BigInt) -> Self {
        Self::new(vec![-a, BigInt::one()])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `t^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the convention `deg 0 = 0`.
    pub fn degree_or_zero(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, n: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }

    pub fn nth_derivative(&self, k: usize) -> Self {
        (0..k).fold(self.clone(), |p, _| p.derivative())
    }

    /// Gcd of the coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.leading().is_some_and(|l| l.is_negative()) {
            c = -c;
        }
        Self::new(self.coeffs.iter().map(|a| a / &c).collect())
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| {
            acc * x + BigRational::from_integer(c.clone())
        })
    }

    /// Exact value at a dyadic point.
    pub fn eval_dyadic(&self, x: &Dyadic) -> Dyadic {
        let Some(d) = self.degree() else {
            return Dyadic::zero();
        };
        if x.exponent() >= 0 {
            let xi = x.mantissa() << x.exponent() as usize;
            return Dyadic::from_int(self.eval_int(&xi));
        }
        // 2^(s*d) p(M / 2^s) = sum c_k M^k 2^(s(d-k)), by Horner
        let s = (-x.exponent()) as usize;
        let m = x.mantissa();
        let mut acc = self.coeffs[d].clone();
        for k in (0..d).rev() {
            acc = acc * m + (&self.coeffs[k] << (s * (d - k)));
        }
        Dyadic::new(acc, -((s * d) as i64))
    }

    /// Sign of the value at a dyadic point.
    pub fn sign_at(&self, x: &Dyadic) -> i32 {
        self.eval_dyadic(x).signum()
    }

    /// Interval Horner evaluation; encloses the image of `x`.
    pub fn eval_interval(&self, x: &RealInterval) -> RealInterval {
        let mut acc = RealInterval::point(Dyadic::zero());
        for c in self.coeffs.iter().rev() {
            let prod = &acc * x;
            let cst = RealInterval::point(Dyadic::from_int(c.clone()));
            acc = &prod + &cst;
        }
        acc
    }

    /// `p(t + a)`.
    pub fn taylor_shift_int(&self, a: &BigInt) -> Self {
        if a.is_zero() || self.is_constant() {
            return self.clone();
        }
        let mut c = self.coeffs.clone();
        let n = c.len();
        let unit = a.is_one();
        for i in 0..n - 1 {
            for j in (i..n - 1).rev() {
                let add = if unit { c[j + 1].clone() } else { &c[j + 1] * a };
                c[j] += add;
            }
        }
        Self::new(c)
    }

    /// `p(w * t)`.
    pub fn scale_var(&self, w: &BigInt) -> Self {
        let mut pw = BigInt::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(c * &pw);
            pw *= w;
        }
        Self::new(out)
    }

    /// `t^d p(1/t)` with `d = deg p`.
    pub fn reverse(&self) -> Self {
        let mut c = self.coeffs.clone();
        c.reverse();
        Self::new(c)
    }

    /// Number of sign changes in the coefficient sequence, zeros skipped.
    pub fn sign_variations(&self) -> usize {
        let mut count = 0;
        let mut last = 0;
        for c in &self.coeffs {
            let s = if c.is_positive() {
                1
            } else if c.is_negative() {
                -1
            } else {
                continue;
            };
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// All Taylor coefficients `p^(k)(m) / k!` at a dyadic center, `k = 0..=deg`.
    pub fn taylor_coeffs(&self, m: &Dyadic) -> Vec<Dyadic> {
        let Some(d) = self.degree() else {
            return Vec::new();
        };
        // m = M / 2^s; P(z) = 2^(s d) p(z / 2^s) has integer coefficients and
        // p(m + t) = 2^(-s d) P(M + 2^s t).
        let s = (-m.exponent()).max(0) as usize;
        let big_m = if m.exponent() >= 0 {
            m.mantissa() << m.exponent() as usize
        } else {
            m.mantissa().clone()
        };
        let scaled = Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| c << (s * (d - k)))
                .collect(),
        );
        let shifted = scaled.taylor_shift_int(&big_m);
        (0..=d)
            .map(|k| Dyadic::new(shifted.coeff(k), s as i64 * k as i64 - (s * d) as i64))
            .collect()
    }

    /// `p^(k)(m) / k!`.
    pub fn taylor_coeff(&self, m: &Dyadic, k: usize) -> Dyadic {
        self.taylor_coeffs(m)
            .get(k)
            .cloned()
            .unwrap_or_else(Dyadic::zero)
    }

    /// Upper bound for `sup |p(z)|` over a complex box.
    ///
    /// For a box symmetric about the real axis the polynomial is expanded at
    /// the center `m` and bounded as `sum_k |p^(k)(m)/k!| R^k`, with `R` an
    /// upper bound on `|z - m|`; otherwise `sum_k |c_k| M^k` with `M >= |z|`.
    pub fn magnitude_ub(&self, b: &ComplexBox) -> Dyadic {
        if self.is_zero() {
            return Dyadic::zero();
        }
        let (coeffs, radius) = if b.is_real_centered() {
            let center = b.re.midpoint();
            let r = b.re.radius();
            let i = b.im.magnitude();
            (self.taylor_coeffs(&center), (&r * &r + &i * &i).sqrt_upper())
        } else {
            let coeffs = self.coeffs.iter().map(|c| Dyadic::from_int(c.clone())).collect();
            (coeffs, b.magnitude_ub())
        };
        let mut power = Dyadic::one();
        let mut sum = Dyadic::zero();
        for (k, c) in coeffs.iter().enumerate() {
            if k > 0 {
                power = &power * &radius;
                if power.is_zero() {
                    break;
                }
            }
            sum = sum + &c.abs() * &power;
        }
        sum
    }

    /// `lc(b)^(deg a - deg b + 1) * a mod b`. Panics if `b` is zero.
    pub fn pseudo_rem(&self, b: &Self) -> Self {
        let db = b.degree().expect("pseudo-division by zero polynomial");
        let lb = b.coeffs[db].clone();
        let mut r = self.clone();
        let Some(da) = r.degree() else {
            return r;
        };
        if da < db {
            return r;
        }
        let mut e = da - db + 1;
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let lr = r.coeffs[dr].clone();
            let shift = dr - db;
            let mut c: Vec<BigInt> = r.coeffs.iter().map(|x| x * &lb).collect();
            for (k, bk) in b.coeffs.iter().enumerate() {
                c[k + shift] -= &lr * bk;
            }
            r = Self::new(c);
            e -= 1;
        }
        if e > 0 {
            r = r.scale(&num_traits::pow(lb, e));
        }
        r
    }

    /// Quotient `self / b` when `b` divides `self` in `Z[t]`, `None` otherwise.
    pub fn div_exact(&self, b: &Self) -> Option<Self> {
        let db = b.degree()?;
        let lb = &b.coeffs[db];
        let mut r = self.coeffs.clone();
        let Some(da) = self.degree() else {
            return Some(Self::zero());
        };
        if da < db {
            return None;
        }
        let mut q = vec![BigInt::zero(); da - db + 1];
        for k in (0..=da - db).rev() {
            let lead = &r[k + db];
            if lead.is_zero() {
                continue;
            }
            let (qk, rem) = lead.div_rem(lb);
            if !rem.is_zero() {
                return None;
            }
            for (j, bj) in b.coeffs.iter().enumerate() {
                r[k + j] -= &qk * bj;
            }
            q[k] = qk;
        }
        if r.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::new(q))
    }

    /// Primitive gcd with positive leading coefficient (primitive remainder
    /// sequence). `gcd(0, 0) = 0`.
    pub fn gcd(a: &Self, b: &Self) -> Self {
        if a.is_zero() {
            return b.primitive();
        }
        if b.is_zero() {
            return a.primitive();
        }
        let (mut a, mut b) = if a.degree() >= b.degree() {
            (a.primitive(), b.primitive())
        } else {
            (b.primitive(), a.primitive())
        };
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive();
            a = b;
            b = r;
        }
        a.primitive()
    }

    /// Smallest `L >= 0` with `2^L >= 1 + max_k |c_k| / |c_lead|`, so every
    /// complex root lies strictly inside the disc of radius `2^L`.
    pub fn root_bound_log2(&self) -> u64 {
        let Some(d) = self.degree() else {
            return 0;
        };
        let lead = self.coeffs[d].abs();
        let max = self.coeffs[..d]
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_default();
        // 1 + max/lead <= 2^L  <=>  lead + max <= lead * 2^L
        let bound = &lead + &max;
        let mut l = 0u64;
        while (&lead << l as usize) < bound {
            l += 1;
        }
        l
    }

    /// Renders the polynomial in the variable `var`, e.g. `2*x^2 - 1`.
    pub fn to_expr(&self, var: &str) -> String {
        let terms: Vec<(BigInt, Vec<(&str, usize)>)> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (c.clone(), vec![(var, k)]))
            .collect();
        super::render_terms(&terms)
    }
}

impl fmt::Debug for UnivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_expr("t"))
    }
}

impl fmt::Display for UnivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_expr("t"))
    }
}

impl<'a> Add<&'a UnivariatePolynomial> for &'a UnivariatePolynomial {
    type Output = UnivariatePolynomial;
    fn add(self, rhs: &'a UnivariatePolynomial) -> UnivariatePolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UnivariatePolynomial::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<'a> Sub<&'a UnivariatePolynomial> for &'a UnivariatePolynomial {
    type Output = UnivariatePolynomial;
    fn sub(self, rhs: &'a UnivariatePolynomial) -> UnivariatePolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UnivariatePolynomial::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<'a> Mul<&'a UnivariatePolynomial> for &'a UnivariatePolynomial {
    type Output = UnivariatePolynomial;
    fn mul(self, rhs: &'a UnivariatePolynomial) -> UnivariatePolynomial {
        if self.is_zero() || rhs.is_zero() {
            return UnivariatePolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UnivariatePolynomial::new(out)
    }
}

impl Neg for &UnivariatePolynomial {
    type Output = UnivariatePolynomial;
    fn neg(self) -> UnivariatePolynomial {
        UnivariatePolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> UnivariatePolynomial {
        UnivariatePolynomial::from_i64(c)
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(p(&[-2, 0, 1]).derivative(), p(&[0, 2]));
        assert_eq!(p(&[5]).derivative(), UnivariatePolynomial::zero());
        assert_eq!(p(&[1, 1, 1, 1]).nth_derivative(2), p(&[2, 6]));
    }

    #[test]
    fn taylor_coeff_examples() {
        let q = p(&[-2, 0, 1]);
        assert_eq!(q.taylor_coeff(&Dyadic::zero(), 2), Dyadic::one());
        assert_eq!(q.taylor_coeff(&Dyadic::new(3, -1), 0), Dyadic::new(1, -2));
        assert_eq!(q.taylor_coeff(&Dyadic::new(3, -1), 1), Dyadic::from_int(3));
        assert_eq!(q.taylor_coeff(&Dyadic::from_int(4), 1), Dyadic::from_int(8));
    }

    #[test]
    fn dyadic_evaluation() {
        let q = p(&[-2, 0, 1]);
        assert_eq!(q.eval_dyadic(&Dyadic::new(5, -2)), Dyadic::new(-7, -4));
        assert_eq!(q.eval_dyadic(&Dyadic::from_int(2)), Dyadic::from_int(2));
        assert_eq!(q.eval_dyadic(&Dyadic::from_int(-3).mul_pow2(1)), Dyadic::from_int(34));
    }

    #[test]
    fn shifts_and_reversal() {
        assert_eq!(p(&[0, 0, 1]).taylor_shift_int(&BigInt::from(1)), p(&[1, 2, 1]));
        assert_eq!(p(&[0, 0, 1]).taylor_shift_int(&BigInt::from(-3)), p(&[9, -6, 1]));
        assert_eq!(p(&[1, 2, 3]).reverse(), p(&[3, 2, 1]));
        assert_eq!(p(&[1, -1, -1, 1]).sign_variations(), 2);
        assert_eq!(p(&[1, 0, 0, -1]).sign_variations(), 1);
    }

    #[test]
    fn division_and_gcd() {
        let a = p(&[-1, 0, 1]);
        let b = p(&[1, 1]);
        assert_eq!(a.div_exact(&b), Some(p(&[-1, 1])));
        assert_eq!(a.div_exact(&p(&[0, 2])), None);
        let g = UnivariatePolynomial::gcd(&(&a * &p(&[3, 1])), &(&b.scale(&6.into()) * &p(&[5, 1])));
        assert_eq!(g, b);
        assert_eq!(UnivariatePolynomial::gcd(&p(&[1, 1]), &p(&[2, 1])), p(&[1]));
        assert_eq!(p(&[6, 4]).primitive(), p(&[3, 2]));
        assert_eq!(p(&[6, -4]).primitive(), p(&[-3, 2]));
    }

    #[test]
    fn pseudo_remainder_matches_definition() {
        let a = p(&[1, 2, 3, 4]);
        let b = p(&[1, 0, 2]);
        // 2^2 * a = (4t + 6) * b + (-4t - 2)... check via identity
        let r = a.pseudo_rem(&b);
        assert!(r.degree().unwrap_or(0) < 2);
        let lhs = &a.scale(&4.into()) - &r;
        assert!(lhs.div_exact(&b).is_some());
    }

    #[test]
    fn complex_box_bounds() {
        use crate::arith::disc_to_complex_box;
        let b = disc_to_complex_box(&Dyadic::zero(), &Dyadic::one());
        let ub = p(&[0, 1]).magnitude_ub(&b);
        assert!(&ub * &ub >= Dyadic::from_int(2) && ub <= Dyadic::new(3, -1));
        assert_eq!(p(&[5]).magnitude_ub(&b), Dyadic::from_int(5));
        let pt = disc_to_complex_box(&Dyadic::from_int(2), &Dyadic::zero());
        assert_eq!(p(&[-1, 0, 1]).magnitude_ub(&pt), Dyadic::from_int(3));
    }

    #[test]
    fn root_bound() {
        assert_eq!(p(&[-2, 0, 1]).root_bound_log2(), 2);
        assert_eq!(p(&[-1, 1]).root_bound_log2(), 1);
        assert_eq!(p(&[1, 0, 1]).root_bound_log2(), 1);
    }
}
