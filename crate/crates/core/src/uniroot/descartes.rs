use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::IsolatingInterval;
use crate::arith::{Dyadic, RealInterval};
use crate::poly::UnivariatePolynomial;

/// A positive integer multiple of `p(lo + w z)`.
fn to_unit(p: &UnivariatePolynomial, lo: &Dyadic, w: &Dyadic) -> UnivariatePolynomial {
    let (a, wi, e) = Dyadic::align(lo, w);
    let q = if e >= 0 {
        p.scale_var(&(BigInt::one() << e as usize))
    } else {
        // 2^(s d) p(t / 2^s)
        let s = (-e) as usize;
        let d = p.degree_or_zero();
        let c = p
            .coeffs()
            .iter()
            .enumerate()
            .map(|(k, c)| c << (s * (d - k)))
            .collect();
        UnivariatePolynomial::new(c)
    };
    q.taylor_shift_int(&a).scale_var(&wi).primitive()
}

/// Descartes bound for roots of `q` in the open unit interval `(0, 1)`.
fn unit_variations(q: &UnivariatePolynomial) -> usize {
    let c = q.coeffs();
    if c.iter().all(|c| !c.is_negative()) || c.iter().all(|c| !c.is_positive()) {
        return 0;
    }
    q.reverse().taylor_shift_int(&BigInt::one()).sign_variations()
}

/// Sign variations of `p` on the open interval `(lo, hi)`: an upper bound on
/// the number of real roots there, with the same parity, and exact when it is
/// 0 or 1. Computed from scratch; endpoint roots are never counted.
pub fn descartes_count(p: &UnivariatePolynomial, lo: &Dyadic, hi: &Dyadic) -> usize {
    assert!(lo < hi, "empty interval");
    if p.is_constant() {
        return 0;
    }
    unit_variations(&to_unit(p, lo, &(hi - lo)))
}

/// `2^d q(z / 2)`, the left half of the unit interval.
fn halve(q: &UnivariatePolynomial) -> UnivariatePolynomial {
    let d = q.degree_or_zero();
    let c = q
        .coeffs()
        .iter()
        .enumerate()
        .map(|(k, c)| c << (d - k))
        .collect();
    UnivariatePolynomial::new(c)
}

/// `q / z`, assuming `q(0) = 0`.
fn drop_zero_root(q: &UnivariatePolynomial) -> UnivariatePolynomial {
    debug_assert!(q.coeff(0).is_zero());
    UnivariatePolynomial::new(q.coeffs()[1..].to_vec())
}

/// `q / (z - 1)`, assuming `q(1) = 0`.
fn drop_unit_root(q: &UnivariatePolynomial) -> UnivariatePolynomial {
    let shifted = q.taylor_shift_int(&BigInt::one());
    drop_zero_root(&shifted).taylor_shift_int(&-BigInt::one())
}

/// Real roots of the square-free `r`, sorted, as pairwise disjoint isolating
/// intervals inside `(-2^L, 2^L)` for the Cauchy-type bound `L`.
pub fn descartes_isolate(r: &Arc<UnivariatePolynomial>) -> Vec<IsolatingInterval> {
    if r.is_constant() {
        return Vec::new();
    }
    let l = r.root_bound_log2() as i64;
    descartes_isolate_in(r, &-Dyadic::pow2(l), &Dyadic::pow2(l))
}

/// Real roots of the square-free `r` in the closed interval `[lo, hi]`.
/// Roots at `lo` or `hi` are reported as point intervals.
pub fn descartes_isolate_in(
    r: &Arc<UnivariatePolynomial>,
    lo: &Dyadic,
    hi: &Dyadic,
) -> Vec<IsolatingInterval> {
    assert!(lo <= hi, "empty interval");
    let mut out = Vec::new();
    if r.is_constant() {
        return out;
    }
    let point = |x: &Dyadic| {
        IsolatingInterval::from_parts_unchecked(RealInterval::point(x.clone()), r.clone(), 1, 0)
    };
    if r.sign_at(lo) == 0 {
        out.push(point(lo));
    }
    if lo == hi {
        return out;
    }
    if r.sign_at(hi) == 0 {
        out.push(point(hi));
    }

    let mut q = to_unit(r, lo, &(hi - lo));
    if q.coeff(0).is_zero() {
        q = drop_zero_root(&q);
    }
    if q.coeffs().iter().sum::<BigInt>().is_zero() {
        q = drop_unit_root(&q);
    }

    let mut stack = vec![(q, lo.clone(), hi - lo)];
    while let Some((q, a, w)) = stack.pop() {
        match unit_variations(&q) {
            0 => {}
            1 => out.push(finalize(r, a.clone(), &a + &w)),
            _ => {
                let half = w.half();
                let mid = &a + &half;
                let mut left = halve(&q);
                let mut right = left.taylor_shift_int(&BigInt::one());
                if right.coeff(0).is_zero() {
                    out.push(point(&mid));
                    right = drop_zero_root(&right);
                    left = right.taylor_shift_int(&-BigInt::one());
                }
                stack.push((right.primitive(), mid.clone(), half.clone()));
                stack.push((left.primitive(), a, half));
            }
        }
    }
    out.sort_by(|a, b| a.lo().cmp(b.lo()));
    out
}

/// Shrinks `(lo, hi)`, known to hold exactly one root of `r`, until neither
/// endpoint is a root.
fn finalize(r: &Arc<UnivariatePolynomial>, mut lo: Dyadic, mut hi: Dyadic) -> IsolatingInterval {
    loop {
        let s_lo = r.sign_at(&lo);
        let s_hi = r.sign_at(&hi);
        if s_lo != 0 && s_hi != 0 {
            debug_assert!(s_lo * s_hi < 0);
            return IsolatingInterval::from_parts_unchecked(
                RealInterval::new(lo, hi),
                r.clone(),
                1,
                s_lo,
            );
        }
        let mid = Dyadic::midpoint(&lo, &hi);
        if r.sign_at(&mid) == 0 {
            return IsolatingInterval::from_parts_unchecked(RealInterval::point(mid), r.clone(), 1, 0);
        }
        if descartes_count(r, &lo, &mid) >= 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::uniroot::sturm_count_oracle;

    fn p(c: &[i64]) -> Arc<UnivariatePolynomial> {
        Arc::new(UnivariatePolynomial::from_i64(c))
    }

    fn d(m: i64, e: i64) -> Dyadic {
        Dyadic::new(m, e)
    }

    #[test]
    fn counts() {
        // (x - 1)(x - 2)(x - 3)
        let q = p(&[-6, 11, -6, 1]);
        assert_eq!(descartes_count(&q, &d(0, 0), &d(4, 0)), 3);
        assert_eq!(descartes_count(&q, &d(3, -1), &d(5, -1)), 1);
        // endpoint roots are excluded
        assert_eq!(descartes_count(&q, &d(1, 0), &d(2, 0)), 0);
        assert_eq!(descartes_count(&q, &d(1, 0), &d(3, 0)), 1);
    }

    #[test]
    fn isolates_sqrt_two() {
        let q = p(&[-2, 0, 1]);
        let roots = descartes_isolate(&q);
        assert_eq!(roots.len(), 2);
        for iv in &roots {
            assert!(iv.verify());
            assert!(!iv.is_exact());
        }
        assert!(roots[0].hi() <= &Dyadic::zero());
        assert!(roots[1].lo() >= &Dyadic::zero());
    }

    #[test]
    fn dyadic_roots_become_points() {
        // (x)(2x - 1)(x + 3)(4x - 3)
        let q = &(&UnivariatePolynomial::from_i64(&[0, 1]) * &UnivariatePolynomial::from_i64(&[-1, 2]))
            * &(&UnivariatePolynomial::from_i64(&[3, 1]) * &UnivariatePolynomial::from_i64(&[-3, 4]));
        let roots = descartes_isolate(&Arc::new(q));
        let pts: Vec<_> = roots.iter().filter(|r| r.is_exact()).map(|r| r.lo().clone()).collect();
        assert_eq!(roots.len(), 4);
        assert!(roots.iter().all(|r| r.verify()));
        assert!(pts.contains(&d(0, 0)));
        for w in roots.windows(2) {
            assert!(w[0].hi() < w[1].lo());
        }
    }

    #[test]
    fn local_window_with_endpoint_roots() {
        // roots 1, 2, 3
        let q = p(&[-6, 11, -6, 1]);
        let roots = descartes_isolate_in(&q, &d(1, 0), &d(2, 0));
        assert_eq!(roots.len(), 2);
        assert!(roots.iter().all(|r| r.is_exact()));
        let roots = descartes_isolate_in(&q, &d(3, -1), &d(7, -1));
        assert_eq!(roots.len(), 2);
        assert!(roots.iter().all(|r| r.verify()));
    }

    #[test]
    fn agrees_with_sturm_on_clustered_roots() {
        // roots 1/1000, 2/1000, ..., 6/1000
        let mut q = UnivariatePolynomial::one();
        for k in 1..=6 {
            q = &q * &UnivariatePolynomial::from_i64(&[-k, 1000]);
        }
        let q = Arc::new(q);
        let roots = descartes_isolate(&q);
        assert_eq!(roots.len(), 6);
        for iv in &roots {
            assert_eq!(sturm_count_oracle(&q, iv.lo(), iv.hi()), 1);
        }
    }
}
