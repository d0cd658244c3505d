use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::IsolatingInterval;
use crate::arith::{Dyadic, RealInterval};

const MIN_LOG2_N: u32 = 2;

/// One step of quadratic interval refinement.
///
/// The secant through the endpoint values predicts which of `N` equal
/// subintervals holds the root. If the prediction is confirmed by two sign
/// evaluations the interval shrinks by the factor `N` and `N` is squared;
/// otherwise the step falls back to bisection and `N` drops to `sqrt(N)`.
/// Returns `true` when the secant prediction succeeded.
pub fn qir_step(iv: &mut IsolatingInterval) -> bool {
    if iv.is_exact() {
        return false;
    }
    let a = iv.lo().clone();
    let b = iv.hi().clone();
    let sa = iv.sign_lo();
    let g = iv.log2_granularity();
    let fa = iv.poly().eval_dyadic(&a);
    let fb = iv.poly().eval_dyadic(&b);
    let n = BigInt::from(1u8) << g as usize;
    let lambda = fa.to_rational() / (fa.to_rational() - fb.to_rational());
    let j = (lambda * BigRational::from_integer(n.clone()))
        .round()
        .to_integer()
        .clamp(BigInt::zero(), n.clone());
    let step = iv.width().mul_pow2(-(g as i64));
    let at = |k: &BigInt| &a + &(&Dyadic::from_int(k.clone()) * &step);
    let sign_at = |x: &Dyadic| iv.poly().sign_at(x);

    let m = at(&j);
    let sm = if j.is_zero() {
        sa
    } else if j == n {
        -sa
    } else {
        sign_at(&m)
    };
    if sm == 0 {
        iv.set_interval(RealInterval::point(m), 0);
        return true;
    }
    let candidate = if sm == sa {
        if j == n {
            None
        } else {
            let right = at(&(&j + 1));
            let sr = if &j + 1 == n { -sa } else { sign_at(&right) };
            match sr {
                0 => {
                    iv.set_interval(RealInterval::point(right), 0);
                    return true;
                }
                s if s != sa => Some((m, right)),
                _ => None,
            }
        }
    } else if j.is_zero() {
        None
    } else {
        let left = at(&(&j - 1));
        let sl = if &j - 1 == BigInt::zero() { sa } else { sign_at(&left) };
        match sl {
            0 => {
                iv.set_interval(RealInterval::point(left), 0);
                return true;
            }
            s if s == sa => Some((left, m)),
            _ => None,
        }
    };

    match candidate {
        Some((lo, hi)) => {
            iv.set_interval(RealInterval::new(lo, hi), sa);
            iv.set_log2_granularity(g.saturating_mul(2).min(1 << 20));
            true
        }
        None => {
            bisect(iv, sa);
            iv.set_log2_granularity((g / 2).max(MIN_LOG2_N));
            false
        }
    }
}

fn bisect(iv: &mut IsolatingInterval, sa: i32) {
    let mid = iv.interval().midpoint();
    let sm = iv.poly().sign_at(&mid);
    let (lo, hi) = (iv.lo().clone(), iv.hi().clone());
    match sm {
        0 => iv.set_interval(RealInterval::point(mid), 0),
        s if s == sa => iv.set_interval(RealInterval::new(mid, hi), sa),
        _ => iv.set_interval(RealInterval::new(lo, mid), sa),
    }
}

/// Refines until the width is strictly below `target` or the root is exact.
pub fn qir_refine(iv: &mut IsolatingInterval, target: &Dyadic) {
    while !iv.is_exact() && &iv.width() >= target {
        qir_step(iv);
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::poly::UnivariatePolynomial;
    use crate::uniroot::descartes_isolate;

    #[test]
    fn refines_sqrt_two_to_64_bits() {
        let q = Arc::new(UnivariatePolynomial::from_i64(&[-2, 0, 1]));
        let mut iv = descartes_isolate(&q).pop().unwrap();
        let target = Dyadic::pow2(-64);
        let mut successes = 0;
        while !iv.is_exact() && iv.width() >= target {
            if qir_step(&mut iv) {
                successes += 1;
            }
            assert!(iv.verify());
        }
        assert!(iv.width() < target);
        assert!(successes > 0);
        // lo^2 < 2 < hi^2
        let two = Dyadic::from_int(2);
        assert!(iv.lo().pow(2) < two && two < iv.hi().pow(2));
    }

    #[test]
    fn finds_exact_dyadic_roots() {
        // (8x - 3)(x + 5)
        let q = Arc::new(UnivariatePolynomial::from_i64(&[-15, 37, 8]));
        let roots = descartes_isolate(&q);
        let mut iv = roots.into_iter().find(|r| r.hi() > &Dyadic::zero()).unwrap();
        qir_refine(&mut iv, &Dyadic::pow2(-100));
        assert!(iv.is_exact());
        assert_eq!(iv.lo(), &Dyadic::new(3, -3));
    }

    #[test]
    fn granularity_adapts() {
        let q = Arc::new(UnivariatePolynomial::from_i64(&[-3, 0, 1]));
        let mut iv = descartes_isolate(&q).pop().unwrap();
        for _ in 0..20 {
            qir_step(&mut iv);
            assert!(iv.log2_granularity() >= MIN_LOG2_N);
        }
        assert!(iv.width() < Dyadic::pow2(-30));
    }
}
