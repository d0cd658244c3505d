use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{render_terms, UnivariatePolynomial, Var};
use crate::arith::{Dyadic, RealInterval};
use crate::error::{Error, Result};

/// Dense bivariate integer polynomial; `grid[i][j]` multiplies `x^i y^j`.
///
/// The grid is rectangular with no trailing zero row or column, so
/// `deg_x = rows - 1` and `deg_y = columns - 1`. The zero polynomial has an
/// empty grid.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BivariatePolynomial {
    grid: Vec<Vec<BigInt>>,
    total_degree: usize,
}

impl BivariatePolynomial {
    pub fn from_grid(mut grid: Vec<Vec<BigInt>>) -> Self {
        let cols = grid.iter().map(Vec::len).max().unwrap_or(0);
        for row in &mut grid {
            row.resize(cols, BigInt::zero());
        }
        while grid.last().is_some_and(|r| r.iter().all(Zero::is_zero)) {
            grid.pop();
        }
        let mut cols = grid.first().map_or(0, Vec::len);
        while cols > 0 && grid.iter().all(|r| r[cols - 1].is_zero()) {
            cols -= 1;
        }
        for row in &mut grid {
            row.truncate(cols);
        }
        if cols == 0 {
            grid.clear();
        }
        let total_degree = grid
            .iter()
            .enumerate()
            .flat_map(|(i, r)| {
                r.iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(move |(j, _)| i + j)
            })
            .max()
            .unwrap_or(0);
        BivariatePolynomial { grid, total_degree }
    }

    /// Sums the given `(i, j, c)` terms for `c * x^i * y^j`; repeats accumulate.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, BigInt)>,
    {
        let mut grid: Vec<Vec<BigInt>> = Vec::new();
        for (i, j, c) in terms {
            if grid.len() <= i {
                grid.resize(i + 1, Vec::new());
            }
            if grid[i].len() <= j {
                grid[i].resize(j + 1, BigInt::zero());
            }
            grid[i][j] += c;
        }
        Self::from_grid(grid)
    }

    pub fn from_i64_terms(terms: &[(usize, usize, i64)]) -> Self {
        Self::from_terms(terms.iter().map(|&(i, j, c)| (i, j, BigInt::from(c))))
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_grid(vec![vec![c]])
    }

    pub fn x() -> Self {
        Self::from_i64_terms(&[(1, 0, 1)])
    }

    pub fn y() -> Self {
        Self::from_i64_terms(&[(0, 1, 1)])
    }

    /// Embeds a univariate polynomial as a polynomial in `var`.
    pub fn from_univariate(p: &UnivariatePolynomial, var: Var) -> Self {
        Self::from_terms(p.coeffs().iter().enumerate().map(|(k, c)| match var {
            Var::X => (k, 0, c.clone()),
            Var::Y => (0, k, c.clone()),
        }))
    }

    pub fn is_zero(&self) -> bool {
        self.grid.is_empty()
    }

    pub fn coeff(&self, i: usize, j: usize) -> BigInt {
        self.grid
            .get(i)
            .and_then(|r| r.get(j))
            .cloned()
            .unwrap_or_default()
    }

    pub fn deg_x(&self) -> usize {
        self.grid.len().saturating_sub(1)
    }

    pub fn deg_y(&self) -> usize {
        self.grid.first().map_or(0, Vec::len).saturating_sub(1)
    }

    pub fn degree_in(&self, var: Var) -> usize {
        match var {
            Var::X => self.deg_x(),
            Var::Y => self.deg_y(),
        }
    }

    pub fn total_degree(&self) -> usize {
        self.total_degree
    }

    /// Nonzero terms `(i, j, c)` in increasing `(i, j)` order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> + '_ {
        self.grid.iter().enumerate().flat_map(|(i, r)| {
            r.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(move |(j, c)| (i, j, c))
        })
    }

    /// Coefficients `p_k` of `p = sum_k p_k var^k`, listed from the highest
    /// power of `var` down to `var^0`; each `p_k` is a polynomial in the other
    /// variable.
    pub fn coeffs_wrt(&self, var: Var) -> Result<Vec<UnivariatePolynomial>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut out = self.coeffs_ascending(var);
        out.reverse();
        Ok(out)
    }

    /// Same as [`coeffs_wrt`](Self::coeffs_wrt) but lowest power first; empty
    /// for the zero polynomial.
    pub fn coeffs_ascending(&self, var: Var) -> Vec<UnivariatePolynomial> {
        if self.is_zero() {
            return Vec::new();
        }
        match var {
            Var::Y => (0..=self.deg_y())
                .map(|j| UnivariatePolynomial::new(self.grid.iter().map(|r| r[j].clone()).collect()))
                .collect(),
            Var::X => self
                .grid
                .iter()
                .map(|r| UnivariatePolynomial::new(r.clone()))
                .collect(),
        }
    }

    /// Inverse of [`coeffs_ascending`](Self::coeffs_ascending).
    pub fn from_coeffs_ascending(var: Var, coeffs: &[UnivariatePolynomial]) -> Self {
        Self::from_terms(coeffs.iter().enumerate().flat_map(|(k, p)| {
            p.coeffs()
                .iter()
                .enumerate()
                .map(move |(l, c)| match var {
                    Var::Y => (l, k, c.clone()),
                    Var::X => (k, l, c.clone()),
                })
        }))
    }

    /// Substitutes an integer for `var`, leaving a polynomial in the other
    /// variable.
    pub fn specialize(&self, var: Var, value: &BigInt) -> UnivariatePolynomial {
        let coeffs = self.coeffs_ascending(var.other());
        UnivariatePolynomial::new(coeffs.iter().map(|p| p.eval_int(value)).collect())
    }

    pub fn swap_vars(&self) -> Self {
        Self::from_terms(self.terms().map(|(i, j, c)| (j, i, c.clone())))
    }

    pub fn eval_exact(&self, x0: &BigRational, y0: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for row in self.grid.iter().rev() {
            let inner = row.iter().rev().fold(BigRational::zero(), |a, c| {
                a * y0 + BigRational::from_integer(c.clone())
            });
            acc = acc * x0 + inner;
        }
        acc
    }

    pub fn eval_dyadic(&self, x0: &Dyadic, y0: &Dyadic) -> Dyadic {
        self.coeffs_ascending(Var::Y)
            .iter()
            .rev()
            .fold(Dyadic::zero(), |acc, p| acc * y0 + p.eval_dyadic(x0))
    }

    /// Interval enclosure of the image of `bx * by` (Horner in `y`, inner
    /// Horner in `x`).
    pub fn eval_box(&self, bx: &RealInterval, by: &RealInterval) -> RealInterval {
        let mut acc = RealInterval::point(Dyadic::zero());
        for p in self.coeffs_ascending(Var::Y).iter().rev() {
            let prod = &acc * by;
            acc = &prod + &p.eval_interval(bx);
        }
        acc
    }

    pub fn pow(&self, n: usize) -> Self {
        let mut acc = Self::constant(BigInt::one());
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Renders the polynomial in the input grammar, highest total degree first.
    pub fn to_expr(&self) -> String {
        let mut terms: Vec<(usize, usize, &BigInt)> = self.terms().collect();
        terms.sort_by_key(|t| std::cmp::Reverse((t.0 + t.1, t.0)));
        let rendered: Vec<(BigInt, Vec<(&str, usize)>)> = terms
            .into_iter()
            .map(|(i, j, c)| (c.clone(), vec![("x", i), ("y", j)]))
            .collect();
        render_terms(&rendered)
    }
}

impl fmt::Debug for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_expr())
    }
}

impl fmt::Display for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_expr())
    }
}

impl<'a> Add<&'a BivariatePolynomial> for &'a BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn add(self, rhs: &'a BivariatePolynomial) -> BivariatePolynomial {
        BivariatePolynomial::from_terms(
            self.terms()
                .chain(rhs.terms())
                .map(|(i, j, c)| (i, j, c.clone())),
        )
    }
}

impl<'a> Sub<&'a BivariatePolynomial> for &'a BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn sub(self, rhs: &'a BivariatePolynomial) -> BivariatePolynomial {
        BivariatePolynomial::from_terms(
            self.terms()
                .map(|(i, j, c)| (i, j, c.clone()))
                .chain(rhs.terms().map(|(i, j, c)| (i, j, -c))),
        )
    }
}

impl<'a> Mul<&'a BivariatePolynomial> for &'a BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn mul(self, rhs: &'a BivariatePolynomial) -> BivariatePolynomial {
        let mut terms = Vec::new();
        for (i, j, a) in self.terms() {
            for (k, l, b) in rhs.terms() {
                terms.push((i + k, j + l, a * b));
            }
        }
        BivariatePolynomial::from_terms(terms)
    }
}

impl Neg for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn neg(self) -> BivariatePolynomial {
        BivariatePolynomial::from_terms(self.terms().map(|(i, j, c)| (i, j, -c)))
    }
}
