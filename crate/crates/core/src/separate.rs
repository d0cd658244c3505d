//! Separation of each real projected root from all other complex roots of
//! its resultant, and the lower bound for `|R|` on its isolating disc.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::arith::{Dyadic, RealInterval};
use crate::elim::Disc;
use crate::poly::{UnivariatePolynomial, Var};
use crate::uniroot::{qir_step, IsolatingInterval, SquareFreeFactorization};

/// A real root `alpha` of a resultant `R`, certified to be the only root of
/// `R` in the closed disc of radius `8r` around `center`.
#[derive(Clone, Debug)]
pub struct IsolatedRoot {
    axis: Var,
    interval: IsolatingInterval,
    multiplicity: usize,
    separation_center: Dyadic,
    separation_radius: Dyadic,
    disc: Disc,
    lower_bound: Dyadic,
}

impl IsolatedRoot {
    /// The coordinate axis the root lives on: `X` for roots of `res(f, g, y)`.
    pub fn axis(&self) -> Var {
        self.axis
    }

    /// The isolating interval at the time of separation.
    pub fn interval(&self) -> &IsolatingInterval {
        &self.interval
    }

    /// Multiplicity `i0` of the root as a root of `R`.
    pub fn multiplicity(&self) -> usize {
        self.multiplicity
    }

    /// Center `m` and radius `r` for which the `8r` tests passed. For an
    /// interval root these are its midpoint and half-width; for an exact
    /// dyadic root the center is the root itself.
    pub fn separation(&self) -> (&Dyadic, &Dyadic) {
        (&self.separation_center, &self.separation_radius)
    }

    /// The isolating disc `Delta(alpha)` of radius `2r`.
    pub fn disc(&self) -> &Disc {
        &self.disc
    }

    /// `LB(alpha)`, a lower bound for `|R|` on the boundary of the disc.
    pub fn lower_bound(&self) -> &Dyadic {
        &self.lower_bound
    }
}

/// `|p(m)| - K sum_{k>=1} |p^(k)(m)/k!| r^k > 0`, decided exactly.
pub fn t_test(p: &UnivariatePolynomial, m: &Dyadic, r: &Dyadic, k: &BigRational) -> bool {
    assert!(!r.is_negative() && k.is_positive());
    let t = p.taylor_coeffs(m);
    let head = t.first().map(Dyadic::abs).unwrap_or_else(Dyadic::zero);
    if head.is_zero() {
        return false;
    }
    let mut rk = Dyadic::one();
    let mut sum = Dyadic::zero();
    for c in t.iter().skip(1) {
        rk = &rk * r;
        sum = sum + &c.abs() * &rk;
    }
    // K = n/d: d |p(m)| > n sum
    let n = Dyadic::from_int(k.numer().clone());
    let d = Dyadic::from_int(k.denom().clone());
    &d * &head > &n * &sum
}

fn k_derivative() -> BigRational {
    BigRational::new(BigInt::from(3), BigInt::from(2))
}

/// Passes the derivative test for `r_{i0}` and the root-free test for every
/// other factor on the disc of radius `8 r` around `m`.
fn disc_isolates(
    own: &UnivariatePolynomial,
    own_mult: usize,
    fac: &SquareFreeFactorization,
    m: &Dyadic,
    r: &Dyadic,
) -> bool {
    let r8 = r.mul_pow2(3);
    if !t_test(&own.derivative(), m, &r8, &k_derivative()) {
        return false;
    }
    let one = BigRational::one();
    fac.factors
        .iter()
        .filter(|(i, _)| *i != own_mult)
        .all(|(_, p)| t_test(p, m, &r8, &one))
}

/// `2^(-i0-deg R) |R(m - 2r)|`.
pub fn lower_bound(r_full: &UnivariatePolynomial, multiplicity: usize, m: &Dyadic, r: &Dyadic) -> Dyadic {
    let at = m - &r.mul_pow2(1);
    let value = r_full.eval_dyadic(&at).abs();
    assert!(!value.is_zero(), "resultant vanishes next to a separated root");
    let shift = (multiplicity + r_full.degree_or_zero()) as i64;
    value.mul_pow2(-shift)
}

/// Refines `iv` by QIR until the disc of radius `8 r_I` around its midpoint
/// is certified to contain no root of `R = fac.original` other than the
/// isolated one, then derives the disc `Delta(alpha)` and `LB(alpha)`.
///
/// An exact dyadic root keeps its point interval and uses a disc centered
/// at the root whose radius is halved from 1 until the same tests pass.
pub fn separate_root(mut iv: IsolatingInterval, fac: &SquareFreeFactorization, axis: Var) -> IsolatedRoot {
    let own = iv.poly_arc().clone();
    let mult = iv.multiplicity();
    let (m, r) = loop {
        if iv.is_exact() {
            let m = iv.lo().clone();
            let mut r = Dyadic::one();
            while !disc_isolates(&own, mult, fac, &m, &r) {
                r = r.half();
            }
            break (m, r);
        }
        let m = iv.interval().midpoint();
        let r = iv.interval().radius();
        if disc_isolates(&own, mult, fac, &m, &r) {
            break (m, r);
        }
        qir_step(&mut iv);
    };
    let lb = lower_bound(&fac.original, mult, &m, &r);
    IsolatedRoot {
        axis,
        interval: iv,
        multiplicity: mult,
        disc: Disc::new(m.clone(), r.mul_pow2(1)),
        separation_center: m,
        separation_radius: r,
        lower_bound: lb,
    }
}

/// The interval lies on the real diameter of the disc.
pub fn interval_in_disc(iv: &RealInterval, disc: &Disc) -> bool {
    let lo = &disc.center - &disc.radius;
    let hi = &disc.center + &disc.radius;
    &lo <= iv.lo() && iv.hi() <= &hi
}
