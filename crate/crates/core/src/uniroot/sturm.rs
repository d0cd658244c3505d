use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::arith::Dyadic;
use crate::poly::UnivariatePolynomial;

/// Sturm sequence `p, p', -rem(p, p'), ...`, each term scaled by a positive
/// rational factor to stay in `Z[t]`.
pub fn sturm_sequence(p: &UnivariatePolynomial) -> Vec<UnivariatePolynomial> {
    let mut seq = vec![p.clone()];
    if p.is_constant() {
        return seq;
    }
    seq.push(p.derivative());
    loop {
        let n = seq.len();
        let (a, b) = (&seq[n - 2], &seq[n - 1]);
        if b.is_constant() {
            return seq;
        }
        // prem = lc(b)^(delta+1) rem
        let delta = a.degree_or_zero() - b.degree_or_zero();
        let prem = a.pseudo_rem(b);
        if prem.is_zero() {
            return seq;
        }
        let flip = b.leading().unwrap().is_negative() && delta % 2 == 0;
        let c = prem.content();
        let next = UnivariatePolynomial::new(prem.coeffs().iter().map(|x| x / &c).collect());
        let next = if flip { next } else { -&next };
        seq.push(next);
    }
}

fn variations_at(seq: &[UnivariatePolynomial], x: &Dyadic) -> usize {
    let mut count = 0;
    let mut last = 0;
    for q in seq {
        let s = q.sign_at(x);
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// `(2^s t - M)` for the dyadic `M 2^-s`, or `t - x` for integers.
fn linear_factor(x: &Dyadic) -> UnivariatePolynomial {
    if x.exponent() >= 0 {
        let v = x.mantissa() << x.exponent() as usize;
        UnivariatePolynomial::new(vec![-v, BigInt::one()])
    } else {
        let s = (-x.exponent()) as usize;
        UnivariatePolynomial::new(vec![-x.mantissa().clone(), BigInt::one() << s])
    }
}

/// Number of distinct real roots of `p` in the closed interval `[lo, hi]`.
///
/// Endpoint roots are counted directly and divided out, so the Sturm count
/// only runs between non-roots.
pub fn sturm_count_oracle(p: &UnivariatePolynomial, lo: &Dyadic, hi: &Dyadic) -> usize {
    assert!(lo <= hi, "empty interval");
    assert!(!p.is_zero(), "zero polynomial");
    let mut q = p.clone();
    let mut count = 0;
    let ends: &[&Dyadic] = if lo == hi { &[lo] } else { &[lo, hi] };
    for x in ends {
        if q.sign_at(x) == 0 {
            count += 1;
            let l = linear_factor(x);
            while q.sign_at(x) == 0 {
                q = q.div_exact(&l).expect("exact linear division");
            }
        }
    }
    if lo == hi {
        return count;
    }
    let seq = sturm_sequence(&q);
    count + variations_at(&seq, lo) - variations_at(&seq, hi)
}
