//! Univariate layer: square-free factorization, Descartes isolation, quadratic
//! interval refinement and a Sturm-sequence oracle.

mod descartes;
mod qir;
mod sturm;
mod yun;

use std::fmt;
use std::sync::Arc;

use crate::arith::{Dyadic, RealInterval};
use crate::poly::UnivariatePolynomial;

pub use descartes::{descartes_count, descartes_isolate, descartes_isolate_in};
pub use qir::{qir_refine, qir_step};
pub use sturm::{sturm_count_oracle, sturm_sequence};
pub use yun::{yun_squarefree, SquareFreeFactorization};

/// Initial QIR granularity `N = 2^2`.
const INITIAL_LOG2_N: u32 = 2;

/// An interval isolating one real root of a square-free polynomial `r`.
///
/// Either the interval is a point `[a, a]` with `r(a) = 0`, or `r` has
/// exactly one root in the open interval `(lo, hi)` and `r(lo) r(hi) < 0`.
#[derive(Clone)]
pub struct IsolatingInterval {
    interval: RealInterval,
    poly: Arc<UnivariatePolynomial>,
    multiplicity: usize,
    sign_lo: i32,
    log2_n: u32,
}

impl IsolatingInterval {
    /// Panics if the isolation invariant does not hold at the endpoints.
    pub fn new(interval: RealInterval, poly: Arc<UnivariatePolynomial>, multiplicity: usize) -> Self {
        let sign_lo = poly.sign_at(interval.lo());
        if interval.is_point() {
            assert_eq!(sign_lo, 0, "point interval is not a root");
        } else {
            let sign_hi = poly.sign_at(interval.hi());
            assert!(
                sign_lo * sign_hi < 0,
                "no sign change on {interval:?} for {poly:?}"
            );
        }
        IsolatingInterval {
            interval,
            poly,
            multiplicity,
            sign_lo,
            log2_n: INITIAL_LOG2_N,
        }
    }

    pub(crate) fn from_parts_unchecked(
        interval: RealInterval,
        poly: Arc<UnivariatePolynomial>,
        multiplicity: usize,
        sign_lo: i32,
    ) -> Self {
        IsolatingInterval {
            interval,
            poly,
            multiplicity,
            sign_lo,
            log2_n: INITIAL_LOG2_N,
        }
    }

    pub fn interval(&self) -> &RealInterval {
        &self.interval
    }

    pub fn lo(&self) -> &Dyadic {
        self.interval.lo()
    }

    pub fn hi(&self) -> &Dyadic {
        self.interval.hi()
    }

    pub fn width(&self) -> Dyadic {
        self.interval.width()
    }

    /// Square-free polynomial whose root is isolated.
    pub fn poly(&self) -> &UnivariatePolynomial {
        &self.poly
    }

    pub fn poly_arc(&self) -> &Arc<UnivariatePolynomial> {
        &self.poly
    }

    /// Multiplicity of the root as a root of the full polynomial whose
    /// square-free factor `poly` is.
    pub fn multiplicity(&self) -> usize {
        self.multiplicity
    }

    /// Sign of `poly` at `lo`; zero exactly for point intervals.
    pub fn sign_lo(&self) -> i32 {
        self.sign_lo
    }

    /// The root is known exactly.
    pub fn is_exact(&self) -> bool {
        self.interval.is_point()
    }

    pub fn log2_granularity(&self) -> u32 {
        self.log2_n
    }

    pub(crate) fn set_interval(&mut self, interval: RealInterval, sign_lo: i32) {
        self.interval = interval;
        self.sign_lo = sign_lo;
    }

    pub(crate) fn set_log2_granularity(&mut self, log2_n: u32) {
        self.log2_n = log2_n;
    }

    /// Re-derives the isolation invariant by exact evaluation.
    pub fn verify(&self) -> bool {
        let lo = self.poly.sign_at(self.interval.lo());
        if self.interval.is_point() {
            return lo == 0;
        }
        lo == self.sign_lo && lo * self.poly.sign_at(self.interval.hi()) < 0
    }
}

impl fmt::Debug for IsolatingInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} (mult {})", self.interval, self.multiplicity)
    }
}

/// Isolates the real roots of every factor and refines until the intervals
/// of distinct roots are pairwise disjoint. Sorted by position.
pub fn isolate_factorization(fac: &SquareFreeFactorization) -> Vec<IsolatingInterval> {
    let mut all = Vec::new();
    for (i, r) in &fac.factors {
        let r = Arc::new(r.clone());
        all.extend(descartes_isolate(&r).into_iter().map(|mut iv| {
            iv.multiplicity = *i;
            iv
        }));
    }
    make_disjoint(all)
}

/// As [`isolate_factorization`], restricted to roots in the closed interval
/// `[lo, hi]`.
pub fn isolate_factorization_in(
    fac: &SquareFreeFactorization,
    lo: &Dyadic,
    hi: &Dyadic,
) -> Vec<IsolatingInterval> {
    let mut all = Vec::new();
    for (i, r) in &fac.factors {
        let r = Arc::new(r.clone());
        all.extend(descartes_isolate_in(&r, lo, hi).into_iter().map(|mut iv| {
            iv.multiplicity = *i;
            iv
        }));
    }
    make_disjoint(all)
}

/// Refines overlapping intervals of roots of distinct coprime factors until
/// the closed intervals are pairwise disjoint, and sorts them.
pub fn make_disjoint(mut roots: Vec<IsolatingInterval>) -> Vec<IsolatingInterval> {
    loop {
        roots.sort_by(|a, b| a.lo().cmp(b.lo()).then(a.hi().cmp(b.hi())));
        let mut overlap = false;
        for k in 1..roots.len() {
            let (left, right) = roots.split_at_mut(k);
            let a = &mut left[k - 1];
            let b = &mut right[0];
            if a.interval.intersects(&b.interval) {
                overlap = true;
                // refine the wider one; both never are points at a shared root
                if a.width() >= b.width() {
                    qir_step(a);
                } else {
                    qir_step(b);
                }
            }
        }
        if !overlap {
            return roots;
        }
    }
}
