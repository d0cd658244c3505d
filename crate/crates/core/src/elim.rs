//! Elimination: Sylvester matrices, resultants and Hadamard-type bounds for
//! the cofactors `u`, `v` in `R = u f + v g`.
//!
//! For a pair `f`, `g` viewed as polynomials in the eliminated variable `v`
//! with coefficients in `Z[w]` (`w` the remaining variable), the resultant is
//! computed by the subresultant remainder sequence over `Z[w]`. The Bareiss
//! determinant of the polynomial Sylvester matrix and the specialization
//! oracle are independent routes used for cross-checking.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{ComplexBox, Dyadic};
use crate::error::{Error, Result};
use crate::poly::{BivariatePolynomial, UnivariatePolynomial, Var};

type Upoly = UnivariatePolynomial;

/// Sylvester matrix of `f` and `g` with respect to an eliminated variable.
///
/// Rows `0..n` hold the shifted coefficient rows of `f` (from the highest
/// power down), rows `n..n+m` those of `g`, where `m`, `n` are the degrees of
/// `f`, `g` in the eliminated variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SylvesterMatrix {
    eliminated: Var,
    /// Coefficients of `f` in the eliminated variable, highest power first.
    f_coeffs: Vec<Upoly>,
    g_coeffs: Vec<Upoly>,
}

impl SylvesterMatrix {
    pub fn eliminated(&self) -> Var {
        self.eliminated
    }

    /// Degree `m_v` of `f` in the eliminated variable.
    pub fn deg_f(&self) -> usize {
        self.f_coeffs.len() - 1
    }

    /// Degree `n_v` of `g` in the eliminated variable.
    pub fn deg_g(&self) -> usize {
        self.g_coeffs.len() - 1
    }

    pub fn dim(&self) -> usize {
        self.deg_f() + self.deg_g()
    }

    /// Entry `(row, col)`, a polynomial in the non-eliminated variable.
    pub fn entry(&self, row: usize, col: usize) -> Upoly {
        match self.entry_ref(row, col) {
            Some(p) => p.clone(),
            None => Upoly::zero(),
        }
    }

    fn entry_ref(&self, row: usize, col: usize) -> Option<&Upoly> {
        let n = self.deg_g();
        let (coeffs, shift) = if row < n {
            (&self.f_coeffs, row)
        } else {
            (&self.g_coeffs, row - n)
        };
        col.checked_sub(shift).and_then(|k| coeffs.get(k))
    }

    pub fn entries(&self) -> Vec<Vec<Upoly>> {
        let d = self.dim();
        (0..d)
            .map(|r| (0..d).map(|c| self.entry(r, c)).collect())
            .collect()
    }

    /// Determinant by fraction-free (Bareiss) elimination over `Z[w]`.
    pub fn determinant_bareiss(&self) -> Upoly {
        bareiss_determinant(self.entries())
    }

    /// Power of the eliminated variable placed in the last column of the
    /// cofactor matrix `U` or `V` at `row`; `None` for a zero entry.
    pub fn replacement_power(&self, kind: CofactorKind, row: usize) -> Option<usize> {
        let n = self.deg_g();
        let m = self.deg_f();
        match kind {
            CofactorKind::U if row < n => Some(n - 1 - row),
            CofactorKind::V if row >= n => Some(m - 1 - (row - n)),
            _ => None,
        }
    }
}

/// Which cofactor of `R = u f + v g` a bound refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CofactorKind {
    /// Last column replaced by `(v^(n-1), ..., 1, 0, ..., 0)^T`; determinant `u`.
    U,
    /// Last column replaced by `(0, ..., 0, v^(m-1), ..., 1)^T`; determinant `v`.
    V,
}

/// Selects the cofactor matrix obtained from a Sylvester matrix by replacing
/// its last column.
#[derive(Clone, Copy, Debug)]
pub struct CofactorBoundSpec<'a> {
    pub matrix: &'a SylvesterMatrix,
    pub kind: CofactorKind,
}

/// A closed disc in the complex plane with real center.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Disc {
    pub center: Dyadic,
    pub radius: Dyadic,
}

impl Disc {
    pub fn new(center: Dyadic, radius: Dyadic) -> Self {
        Disc { center, radius }
    }

    pub fn to_box(&self) -> ComplexBox {
        ComplexBox::from_disc(&self.center, &self.radius)
    }
}

pub fn sylvester(
    f: &BivariatePolynomial,
    g: &BivariatePolynomial,
    var: Var,
) -> Result<SylvesterMatrix> {
    let f_coeffs = f.coeffs_wrt(var)?;
    let g_coeffs = g.coeffs_wrt(var)?;
    if f_coeffs.len() == 1 && g_coeffs.len() == 1 {
        return Err(Error::DegenerateElimination { var });
    }
    Ok(SylvesterMatrix {
        eliminated: var,
        f_coeffs,
        g_coeffs,
    })
}

/// `res(f, g, var)` as a polynomial in the other variable.
///
/// If one polynomial has degree 0 in `var` (a polynomial `c` in the other
/// variable) the result is `c^d` with `d` the degree of the other one in
/// `var`; if both have degree 0 the result is 1.
pub fn resultant(
    f: &BivariatePolynomial,
    g: &BivariatePolynomial,
    var: Var,
) -> Result<UnivariatePolynomial> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let a = f.coeffs_ascending(var);
    let b = g.coeffs_ascending(var);
    let r = match (a.len() - 1, b.len() - 1) {
        (0, 0) => Upoly::one(),
        (0, n) => a[0].pow(n),
        (m, 0) => b[0].pow(m),
        _ => subresultant(a, b),
    };
    if r.is_zero() {
        return Err(Error::NotZeroDimensional {
            var,
            gcd_degree: None,
        });
    }
    Ok(r)
}

/// Resultant of two polynomials over `Z[w]` (coefficient lists, lowest power
/// first, both of degree at least 1) by the subresultant PRS.
fn subresultant(mut a: Vec<Upoly>, mut b: Vec<Upoly>) -> Upoly {
    let mut sign_negative = false;
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
        if (a.len() - 1) % 2 == 1 && (b.len() - 1) % 2 == 1 {
            sign_negative = !sign_negative;
        }
    }
    let mut g = Upoly::one();
    let mut h = Upoly::one();
    loop {
        let da = a.len() - 1;
        let db = b.len() - 1;
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            sign_negative = !sign_negative;
        }
        let r = zx_pseudo_rem(&a, &b);
        a = b;
        let divisor = &g * &h.pow(delta);
        b = r
            .iter()
            .map(|c| c.div_exact(&divisor).expect("subresultant division is exact"))
            .collect();
        g = a.last().cloned().expect("nonzero");
        if delta > 0 {
            h = g
                .pow(delta)
                .div_exact(&h.pow(delta - 1))
                .expect("subresultant division is exact");
        }
        if b.is_empty() {
            return Upoly::zero();
        }
        if b.len() == 1 {
            break;
        }
    }
    let da = a.len() - 1;
    let lb = &b[0];
    let res = lb
        .pow(da)
        .div_exact(&h.pow(da - 1))
        .expect("subresultant division is exact");
    if sign_negative {
        -&res
    } else {
        res
    }
}

fn zx_trim(mut p: Vec<Upoly>) -> Vec<Upoly> {
    while p.last().is_some_and(Upoly::is_zero) {
        p.pop();
    }
    p
}

/// `lc(b)^(deg a - deg b + 1) a mod b` in `Z[w][v]`.
fn zx_pseudo_rem(a: &[Upoly], b: &[Upoly]) -> Vec<Upoly> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.to_vec();
    if r.len() <= db {
        return r;
    }
    let mut e = r.len() - 1 - db + 1;
    while r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - db;
        let mut next: Vec<Upoly> = r.iter().map(|c| c * lb).collect();
        for (k, bk) in b.iter().enumerate() {
            next[k + shift] = &next[k + shift] - &(&lr * bk);
        }
        next.pop();
        r = zx_trim(next);
        e -= 1;
    }
    if e > 0 {
        let f = lb.pow(e);
        r = r.iter().map(|c| c * &f).collect();
    }
    r
}

/// Minimal ring interface needed by fraction-free elimination.
trait ExactRing: Clone {
    fn ring_zero() -> Self;
    fn ring_one() -> Self;
    fn is_zero(&self) -> bool;
    fn mul(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn div_exact(&self, other: &Self) -> Self;
}

impl ExactRing for BigInt {
    fn ring_zero() -> Self {
        Zero::zero()
    }
    fn ring_one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, other: &Self) -> Self {
        debug_assert!(Zero::is_zero(&(self % other)));
        self / other
    }
}

impl ExactRing for Upoly {
    fn ring_zero() -> Self {
        Upoly::zero()
    }
    fn ring_one() -> Self {
        Upoly::one()
    }
    fn is_zero(&self) -> bool {
        Upoly::is_zero(self)
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, other: &Self) -> Self {
        Upoly::div_exact(self, other).expect("Bareiss division is exact")
    }
}

fn bareiss<T: ExactRing>(mut m: Vec<Vec<T>>) -> T {
    let n = m.len();
    if n == 0 {
        return T::ring_one();
    }
    let mut negate = false;
    let mut prev = T::ring_one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return T::ring_zero();
            };
            m.swap(k, p);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = m[i][j].mul(&m[k][k]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = t.div_exact(&prev);
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        d.neg()
    } else {
        d
    }
}

/// Determinant of a square matrix of integer polynomials.
pub fn bareiss_determinant(m: Vec<Vec<Upoly>>) -> Upoly {
    bareiss(m)
}

/// Determinant of a square integer matrix.
pub fn integer_determinant(m: Vec<Vec<BigInt>>) -> BigInt {
    bareiss(m)
}

/// Independent check of `resultant(f, g, var)` at integer points: for each
/// point `a` of the remaining variable, the integer Sylvester determinant of
/// the specialized univariate pair. Points where a leading coefficient in
/// `var` vanishes are skipped (`None`).
pub fn resultant_oracle(
    f: &BivariatePolynomial,
    g: &BivariatePolynomial,
    var: Var,
    sample_points: &[BigInt],
) -> Vec<(BigInt, Option<BigInt>)> {
    let m = f.degree_in(var);
    let n = g.degree_in(var);
    sample_points
        .iter()
        .map(|a| {
            let fa = f.specialize(var.other(), a);
            let ga = g.specialize(var.other(), a);
            let value = if fa.degree() != Some(m) || ga.degree() != Some(n) {
                None
            } else {
                Some(univariate_sylvester_determinant(&fa, &ga))
            };
            (a.clone(), value)
        })
        .collect()
}

fn univariate_sylvester_determinant(f: &Upoly, g: &Upoly) -> BigInt {
    let m = f.degree_or_zero();
    let n = g.degree_or_zero();
    let d = m + n;
    if d == 0 {
        return BigInt::one();
    }
    let mut rows = Vec::with_capacity(d);
    for (count, p, deg) in [(n, f, m), (m, g, n)] {
        for shift in 0..count {
            let mut row = vec![BigInt::zero(); d];
            for k in 0..=deg {
                row[shift + k] = p.coeff(deg - k);
            }
            rows.push(row);
        }
    }
    integer_determinant(rows)
}

/// Upper bound for `sup |w(x, y)|` over the polydisc `disc_x * disc_y`, where
/// `w` is the cofactor `u` or `v` selected by `spec`.
///
/// Each entry modulus is bounded on a complex box containing the relevant
/// disc (polynomial entries on the disc of the remaining variable, the
/// replaced last column on the disc of the eliminated variable). By
/// Hadamard's inequality the product of the column 2-norm bounds bounds the
/// determinant. The cofactor polynomial itself is never formed.
pub fn cofactor_upper_bounds(spec: CofactorBoundSpec<'_>, disc_x: &Disc, disc_y: &Disc) -> Dyadic {
    let s = spec.matrix;
    let (coeff_disc, elim_disc) = match s.eliminated {
        Var::Y => (disc_x, disc_y),
        Var::X => (disc_y, disc_x),
    };
    let d = s.dim();
    let coeff_box = coeff_disc.to_box();
    let f_bounds: Vec<Dyadic> = s.f_coeffs.iter().map(|p| p.magnitude_ub(&coeff_box)).collect();
    let g_bounds: Vec<Dyadic> = s.g_coeffs.iter().map(|p| p.magnitude_ub(&coeff_box)).collect();
    let n = s.deg_g();
    let entry_bound = |row: usize, col: usize| -> Dyadic {
        let (bounds, shift) = if row < n { (&f_bounds, row) } else { (&g_bounds, row - n) };
        col.checked_sub(shift)
            .and_then(|k| bounds.get(k))
            .cloned()
            .unwrap_or_else(Dyadic::zero)
    };
    let elim_box = elim_disc.to_box();
    let elim_mag = elim_box.magnitude_ub();

    let mut product = Dyadic::one();
    for col in 0..d {
        let sum_sq: Dyadic = if col + 1 == d {
            (0..d)
                .filter_map(|row| s.replacement_power(spec.kind, row))
                .map(|k| elim_mag.pow(2 * k as u32))
                .sum()
        } else {
            (0..d)
                .map(|row| {
                    let b = entry_bound(row, col);
                    &b * &b
                })
                .sum()
        };
        product = product * sum_sq.sqrt_upper();
        if product.is_zero() {
            break;
        }
    }
    product
}

/// The cofactor `u` or `v` as an explicit bivariate polynomial, by expansion
/// of the cofactor matrix along its last column. Exponentially more
/// expensive than [`cofactor_upper_bounds`]; meant for diagnostics and tests.
pub fn cofactor_polynomial(matrix: &SylvesterMatrix, kind: CofactorKind) -> BivariatePolynomial {
    let d = matrix.dim();
    let entries = matrix.entries();
    let mut acc = BivariatePolynomial::zero();
    for row in 0..d {
        let Some(k) = matrix.replacement_power(kind, row) else {
            continue;
        };
        let minor: Vec<Vec<Upoly>> = (0..d)
            .filter(|&r| r != row)
            .map(|r| entries[r][..d - 1].to_vec())
            .collect();
        let mut det = bareiss_determinant(minor);
        if (row + d - 1) % 2 == 1 {
            det = -&det;
        }
        let rest = matrix.eliminated.other();
        let minor_poly = BivariatePolynomial::from_univariate(&det, rest);
        let power = BivariatePolynomial::from_univariate(
            &Upoly::monomial(BigInt::one(), k),
            matrix.eliminated,
        );
        acc = &acc + &(&minor_poly * &power);
    }
    acc
}

/// `gcd(f, g)` up to an integer constant, by a primitive remainder sequence
/// in `Z[x][y]`.
pub fn bivariate_gcd(f: &BivariatePolynomial, g: &BivariatePolynomial) -> BivariatePolynomial {
    if f.is_zero() {
        return g.clone();
    }
    if g.is_zero() {
        return f.clone();
    }
    let fa = f.coeffs_ascending(Var::Y);
    let ga = g.coeffs_ascending(Var::Y);
    let (cf, pf) = zx_content_split(&fa);
    let (cg, pg) = zx_content_split(&ga);
    let content = Upoly::gcd(&cf, &cg);
    let (mut a, mut b) = if pf.len() >= pg.len() { (pf, pg) } else { (pg, pf) };
    while !b.is_empty() {
        let r = zx_pseudo_rem(&a, &b);
        a = b;
        b = if r.is_empty() { r } else { zx_content_split(&r).1 };
    }
    let prim = BivariatePolynomial::from_coeffs_ascending(Var::Y, &a);
    &prim * &BivariatePolynomial::from_univariate(&content, Var::X)
}

/// Splits off the content in `Z[x]` (primitive, positive leading coefficient)
/// of a polynomial in `Z[x][y]`.
fn zx_content_split(p: &[Upoly]) -> (Upoly, Vec<Upoly>) {
    let content = p.iter().fold(Upoly::zero(), |acc, c| Upoly::gcd(&acc, c));
    let prim = p
        .iter()
        .map(|c| c.div_exact(&content).expect("content divides every coefficient"))
        .collect();
    (content, prim)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bp(terms: &[(usize, usize, i64)]) -> BivariatePolynomial {
        BivariatePolynomial::from_i64_terms(terms)
    }

    fn up(c: &[i64]) -> Upoly {
        Upoly::from_i64(c)
    }

    fn circle() -> BivariatePolynomial {
        bp(&[(2, 0, 1), (0, 2, 1), (0, 0, -1)])
    }

    fn diagonal() -> BivariatePolynomial {
        bp(&[(1, 0, 1), (0, 1, -1)])
    }

    fn hyperbola() -> BivariatePolynomial {
        bp(&[(1, 1, 1), (0, 0, -1)])
    }

    #[test]
    fn sylvester_layouts() {
        let s = sylvester(&circle(), &diagonal(), Var::Y).unwrap();
        assert_eq!(
            s.entries(),
            vec![
                vec![up(&[1]), up(&[]), up(&[-1, 0, 1])],
                vec![up(&[-1]), up(&[0, 1]), up(&[])],
                vec![up(&[]), up(&[-1]), up(&[0, 1])],
            ]
        );
        let s = sylvester(&hyperbola(), &diagonal(), Var::Y).unwrap();
        assert_eq!(
            s.entries(),
            vec![vec![up(&[0, 1]), up(&[-1])], vec![up(&[-1]), up(&[0, 1])]]
        );
        let s = sylvester(&bp(&[(0, 1, 1)]), &bp(&[(0, 1, 1), (0, 0, -1)]), Var::Y).unwrap();
        assert_eq!(s.entries(), vec![vec![up(&[1]), up(&[])], vec![up(&[1]), up(&[-1])]]);
    }

    #[test]
    fn sylvester_rejects_constants() {
        let f = bp(&[(1, 0, 1), (0, 0, -1)]);
        let g = bp(&[(2, 0, 1)]);
        assert_eq!(
            sylvester(&f, &g, Var::Y),
            Err(Error::DegenerateElimination { var: Var::Y })
        );
    }

    #[test]
    fn resultant_examples() {
        assert_eq!(resultant(&circle(), &diagonal(), Var::Y).unwrap(), up(&[-1, 0, 2]));
        assert_eq!(resultant(&hyperbola(), &diagonal(), Var::Y).unwrap(), up(&[-1, 0, 1]));
        let f = bp(&[(2, 0, 1), (0, 2, 1), (0, 0, -2)]);
        let g = bp(&[(0, 2, 1), (0, 0, -1)]);
        assert_eq!(resultant(&f, &g, Var::Y).unwrap(), up(&[-1, 0, 1]).pow(2));
    }

    #[test]
    fn degree_zero_convention() {
        let f = bp(&[(2, 0, 1), (0, 2, 1), (0, 0, -2)]);
        let g = bp(&[(0, 2, 1), (0, 0, -1)]);
        // g has degree 0 in x: res = g^2
        assert_eq!(resultant(&f, &g, Var::X).unwrap(), up(&[-1, 0, 1]).pow(2));
        let a = bp(&[(1, 0, 1), (0, 0, -1)]);
        let b = bp(&[(1, 0, 1), (0, 0, -2)]);
        assert_eq!(resultant(&a, &b, Var::Y).unwrap(), Upoly::one());
    }

    #[test]
    fn vanishing_resultant_is_an_error() {
        let common = bp(&[(1, 0, 1), (0, 1, 1)]);
        let f = &common * &bp(&[(1, 0, 1), (0, 0, 3)]);
        let g = &common * &bp(&[(0, 1, 1), (0, 0, -2)]);
        assert!(matches!(
            resultant(&f, &g, Var::Y),
            Err(Error::NotZeroDimensional { var: Var::Y, .. })
        ));
        let gcd = bivariate_gcd(&f, &g);
        assert_eq!(gcd.total_degree(), 1);
        assert!(gcd == common || gcd == -&common);
    }

    #[test]
    fn bareiss_agrees_with_prs() {
        let f = bp(&[(2, 1, 3), (0, 2, 1), (1, 0, -4), (0, 0, 7)]);
        let g = bp(&[(1, 2, -1), (0, 1, 5), (2, 0, 1)]);
        for var in [Var::X, Var::Y] {
            let s = sylvester(&f, &g, var).unwrap();
            assert_eq!(s.determinant_bareiss(), resultant(&f, &g, var).unwrap());
        }
    }

    #[test]
    fn oracle_examples() {
        let pts: Vec<BigInt> = [2, 1, 3].iter().map(|&v| BigInt::from(v)).collect();
        let r = resultant_oracle(&circle(), &diagonal(), Var::Y, &pts[..1]);
        assert_eq!(r[0].1, Some(BigInt::from(7)));
        let r = resultant_oracle(&hyperbola(), &diagonal(), Var::Y, &pts[1..]);
        assert_eq!(r[0].1, Some(BigInt::from(0)));
        assert_eq!(r[1].1, Some(BigInt::from(8)));
        // leading coefficient x of xy - 1 vanishes at x = 0
        let r = resultant_oracle(&hyperbola(), &diagonal(), Var::Y, &[BigInt::zero()]);
        assert_eq!(r[0].1, None);
    }

    #[test]
    fn cofactor_identity_and_bounds_on_hyperbola() {
        let (f, g) = (hyperbola(), diagonal());
        let s = sylvester(&f, &g, Var::Y).unwrap();
        let u = cofactor_polynomial(&s, CofactorKind::U);
        let v = cofactor_polynomial(&s, CofactorKind::V);
        assert_eq!(u, BivariatePolynomial::constant(BigInt::one()));
        assert_eq!(v, BivariatePolynomial::x());
        let r = BivariatePolynomial::from_univariate(&resultant(&f, &g, Var::Y).unwrap(), Var::X);
        assert_eq!(&(&u * &f) + &(&v * &g), r);

        let disc = Disc::new(Dyadic::one(), Dyadic::new(1, -2));
        let ub_u = cofactor_upper_bounds(CofactorBoundSpec { matrix: &s, kind: CofactorKind::U }, &disc, &disc);
        assert!(ub_u >= Dyadic::one());
        assert!(ub_u.to_f64() < 1.81, "{}", ub_u.to_f64());
        let ub_v = cofactor_upper_bounds(CofactorBoundSpec { matrix: &s, kind: CofactorKind::V }, &disc, &disc);
        assert!(ub_v >= Dyadic::new(5, -2));
    }

    #[test]
    fn cofactor_of_linear_pair() {
        let f = bp(&[(0, 1, 1), (0, 0, -1)]);
        let g = bp(&[(0, 1, 1), (0, 0, 1)]);
        let s = sylvester(&f, &g, Var::Y).unwrap();
        let u = cofactor_polynomial(&s, CofactorKind::U);
        let v = cofactor_polynomial(&s, CofactorKind::V);
        assert_eq!(u, BivariatePolynomial::constant(BigInt::from(-1)));
        assert_eq!(v, BivariatePolynomial::constant(BigInt::one()));
        let disc = Disc::new(Dyadic::zero(), Dyadic::one());
        let ub = cofactor_upper_bounds(CofactorBoundSpec { matrix: &s, kind: CofactorKind::U }, &disc, &disc);
        assert!(ub >= Dyadic::one());
    }

    #[test]
    fn symmetry_sign() {
        let f = bp(&[(2, 1, 3), (0, 3, 1), (1, 0, -4), (0, 0, 7)]);
        let g = bp(&[(1, 2, -1), (0, 1, 5), (2, 0, 1)]);
        let fg = resultant(&f, &g, Var::Y).unwrap();
        let gf = resultant(&g, &f, Var::Y).unwrap();
        // (-1)^(3*2) = 1
        assert_eq!(fg, gf);
        let fx = resultant(&f, &g, Var::X).unwrap();
        let gx = resultant(&g, &f, Var::X).unwrap();
        // (-1)^(2*2) = 1
        assert_eq!(fx, gx);
        let h = bp(&[(0, 1, 1), (1, 0, 2)]);
        assert_eq!(resultant(&f, &h, Var::Y).unwrap(), -&resultant(&h, &f, Var::Y).unwrap());
    }
}
