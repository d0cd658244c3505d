use thiserror::Error;

use crate::poly::Var;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,

    #[error("both polynomials have degree 0 in {var}; nothing to eliminate")]
    DegenerateElimination { var: Var },

    #[error(
        "system is not zero-dimensional: res(f, g, {var}) vanishes identically{}",
        gcd_hint(*.gcd_degree)
    )]
    NotZeroDimensional {
        var: Var,
        /// Total degree of gcd(f, g), when it has been computed.
        gcd_degree: Option<usize>,
    },

    #[error("candidate undecided after {rounds} refinement rounds (box width {width})")]
    BudgetExceeded { rounds: usize, width: String },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

fn gcd_hint(degree: Option<usize>) -> String {
    match degree {
        Some(d) => format!(" (gcd(f, g) has total degree {d})"),
        None => String::new(),
    }
}

pub type Result<T> = std::result::Result<T, Error>;
