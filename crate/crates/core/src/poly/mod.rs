//! Exact univariate and bivariate polynomials over the integers.

mod bivariate;
mod univariate;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};

pub use bivariate::BivariatePolynomial;
pub use univariate::UnivariatePolynomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X,
    Y,
}

impl Var {
    pub fn other(self) -> Var {
        match self {
            Var::X => Var::Y,
            Var::Y => Var::X,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::X => "x",
            Var::Y => "y",
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Renders a list of `(coefficient, [(variable, power)])` terms in the input
/// grammar, highest term first as given.
pub(crate) fn render_terms(terms: &[(BigInt, Vec<(&str, usize)>)]) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, (c, powers)) in terms.iter().enumerate() {
        let neg = c.is_negative();
        if idx == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let monomial: Vec<String> = powers
            .iter()
            .filter(|(_, k)| *k > 0)
            .map(|(v, k)| if *k == 1 { v.to_string() } else { format!("{v}^{k}") })
            .collect();
        let abs = c.abs();
        if monomial.is_empty() {
            out.push_str(&abs.to_string());
        } else if abs.is_one() {
            out.push_str(&monomial.join("*"));
        } else {
            out.push_str(&format!("{abs}*{}", monomial.join("*")));
        }
    }
    out
}

/// Upper bound on `|p(z)|` for `z` in the box; see
/// [`UnivariatePolynomial::magnitude_ub`].
pub fn eval_complex_box_ub(p: &UnivariatePolynomial, b: &crate::arith::ComplexBox) -> crate::arith::Dyadic {
    p.magnitude_ub(b)
}
