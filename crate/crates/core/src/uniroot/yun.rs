use crate::error::{Error, Result};
use crate::poly::UnivariatePolynomial;

/// `original = c * prod_i r_i^i` for a nonzero integer `c`, with every `r_i`
/// square-free, primitive with positive leading coefficient, and the `r_i`
/// pairwise coprime. Trivial factors `r_i = 1` are omitted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareFreeFactorization {
    /// `(multiplicity, r_i)`, increasing multiplicity.
    pub factors: Vec<(usize, UnivariatePolynomial)>,
    pub original: UnivariatePolynomial,
}

impl SquareFreeFactorization {
    /// `prod_i r_i^i`, the primitive part of `original` up to sign.
    pub fn reconstruct(&self) -> UnivariatePolynomial {
        self.factors
            .iter()
            .fold(UnivariatePolynomial::one(), |acc, (i, r)| &acc * &r.pow(*i))
    }

    pub fn factor(&self, multiplicity: usize) -> Option<&UnivariatePolynomial> {
        self.factors
            .iter()
            .find(|(i, _)| *i == multiplicity)
            .map(|(_, r)| r)
    }
}

/// Yun's square-free factorization over the integers.
///
/// With `p` primitive, every division below is by a primitive divisor, so by
/// Gauss' lemma all quotients stay in `Z[t]` and the recurrence
/// `b_{i+1} = b_i / a_i`, `c_{i+1} = d_i / a_i`, `d = c - b'` runs exactly.
pub fn yun_squarefree(p: &UnivariatePolynomial) -> Result<SquareFreeFactorization> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut factors = Vec::new();
    if p.is_constant() {
        return Ok(SquareFreeFactorization {
            factors,
            original: p.clone(),
        });
    }
    let prim = p.primitive();
    let dp = prim.derivative();
    let a0 = UnivariatePolynomial::gcd(&prim, &dp);
    let mut b = div(&prim, &a0);
    let mut c = div(&dp, &a0);
    let mut d = &c - &b.derivative();
    let mut i = 1;
    while !b.is_constant() {
        let a = UnivariatePolynomial::gcd(&b, &d);
        if !a.is_constant() {
            factors.push((i, a.clone()));
        }
        b = div(&b, &a);
        c = div(&d, &a);
        d = &c - &b.derivative();
        i += 1;
    }
    Ok(SquareFreeFactorization {
        factors,
        original: p.clone(),
    })
}

fn div(a: &UnivariatePolynomial, b: &UnivariatePolynomial) -> UnivariatePolynomial {
    a.div_exact(b)
        .expect("division by a primitive gcd factor is exact")
}
