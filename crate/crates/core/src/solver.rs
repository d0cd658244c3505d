//! End-to-end solving: project onto both axes, separate the projected
//! roots, then validate every candidate pair.

use std::time::{Duration, Instant};

use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;

use crate::arith::Dyadic;
use crate::elim::{bivariate_gcd, resultant, sylvester};
use crate::error::{Error, Result};
use crate::poly::{BivariatePolynomial, UnivariatePolynomial, Var};
use crate::separate::{separate_root, IsolatedRoot};
use crate::uniroot::{
    isolate_factorization, isolate_factorization_in, qir_step, yun_squarefree, IsolatingInterval,
    SquareFreeFactorization,
};
use crate::validate::{
    build_candidates, decide, refine_solution, QueryBox, SolutionBox, Status, ValidationContext,
    DEFAULT_BUDGET,
};

/// Finest grid used for the enclosure of a degenerate query side.
const WINDOW_MIN_LOG2: i64 = -16;

/// A system `f = g = 0`, an optional query box and the output box width.
#[derive(Clone, Debug)]
pub struct SystemSpec {
    pub f: BivariatePolynomial,
    pub g: BivariatePolynomial,
    pub query: Option<QueryBox>,
    /// Every returned box is narrower than this on both axes.
    pub target_width: Dyadic,
}

impl SystemSpec {
    pub fn new(f: BivariatePolynomial, g: BivariatePolynomial) -> Self {
        SystemSpec {
            f,
            g,
            query: None,
            target_width: Dyadic::pow2(-32),
        }
    }

    pub fn with_query(mut self, query: QueryBox) -> Self {
        self.query = Some(query);
        self
    }

    pub fn with_target_width(mut self, width: Dyadic) -> Self {
        self.target_width = width;
        self
    }
}

#[derive(Clone, Debug)]
pub struct SolveOptions {
    /// Worker threads; `None` uses the global pool.
    pub threads: Option<usize>,
    /// Refinement rounds allowed per candidate.
    pub budget: usize,
    /// Record wall-clock time per phase.
    pub timings: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            threads: None,
            budget: DEFAULT_BUDGET,
            timings: false,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PhaseTimings {
    pub project: Duration,
    pub separate: Duration,
    pub validate: Duration,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Diagnostics {
    pub x_roots: usize,
    pub y_roots: usize,
    pub candidates: usize,
    pub excluded: usize,
    pub certified: usize,
    /// Total refinement rounds spent in validation.
    pub refinement_rounds: usize,
    pub timings: Option<PhaseTimings>,
}

/// One projection: the resultant, its square-free factorization and the
/// separated real roots (restricted to the query side if one was given).
#[derive(Clone, Debug)]
pub struct Projection {
    pub resultant: UnivariatePolynomial,
    pub factorization: SquareFreeFactorization,
    pub roots: Vec<IsolatedRoot>,
    /// Per root: it equals a side of the query interval exactly.
    pub on_boundary: Vec<bool>,
}

#[derive(Clone, Debug)]
pub struct SolveResult {
    /// Sorted by lower corner, `x` first.
    pub solutions: Vec<SolutionBox>,
    /// Roots of `res(f, g, y)`, the `x`-coordinates.
    pub x: Projection,
    /// Roots of `res(f, g, x)`, the `y`-coordinates.
    pub y: Projection,
    pub diagnostics: Diagnostics,
}

/// Solves the system; see the crate documentation for the pipeline.
pub fn solve(spec: &SystemSpec, opts: &SolveOptions) -> Result<SolveResult> {
    match opts.threads {
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .expect("thread pool");
            pool.install(|| run(spec, opts))
        }
        None => run(spec, opts),
    }
}

fn run(spec: &SystemSpec, opts: &SolveOptions) -> Result<SolveResult> {
    let (f, g) = (&spec.f, &spec.g);
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let t0 = Instant::now();
    let window_x = spec.query.as_ref().map(|q| &q.x);
    let window_y = spec.query.as_ref().map(|q| &q.y);
    let (rx, fx, ivx) = project(f, g, Var::Y, window_x)?;
    let (ry, fy, ivy) = project(f, g, Var::X, window_y)?;
    let t_project = t0.elapsed();

    let t1 = Instant::now();
    let separate_all = |ivs: &[(IsolatingInterval, bool)], fac: &SquareFreeFactorization, axis| {
        ivs.par_iter()
            .map(|(iv, _)| separate_root(iv.clone(), fac, axis))
            .collect::<Vec<_>>()
    };
    let xroots = separate_all(&ivx, &fx, Var::X);
    let yroots = separate_all(&ivy, &fy, Var::Y);
    let t_separate = t1.elapsed();

    let t2 = Instant::now();
    let ctx = ValidationContext {
        sylvester_y: sylvester(f, g, Var::Y)?,
        sylvester_x: sylvester(f, g, Var::X)?,
        f: f.clone(),
        g: g.clone(),
    };
    let cands = build_candidates(&xroots, &yroots, spec.query.as_ref(), &ctx);
    let n_cands = cands.len();
    let decided = cands
        .into_par_iter()
        .map(|mut c| decide(&mut c, &ctx, opts.budget).map(|_| c))
        .collect::<Result<Vec<_>>>()?;
    let rounds = decided.iter().map(|c| c.rounds()).sum();
    let excluded = decided.iter().filter(|c| c.status() == Status::Excluded).count();

    let mut solutions = decided
        .into_par_iter()
        .filter(|c| c.status() == Status::Certified)
        .map(|c| {
            let (i, j) = c.indices();
            let boundary = ivx[i].1 || ivy[j].1;
            let mut s = SolutionBox::from_candidate(c);
            s.set_on_boundary(boundary);
            refine_solution(&mut s, &spec.target_width);
            s
        })
        .collect::<Vec<_>>();
    solutions.sort_by(|a, b| {
        a.x_interval()
            .lo()
            .cmp(b.x_interval().lo())
            .then_with(|| a.y_interval().lo().cmp(b.y_interval().lo()))
    });
    let t_validate = t2.elapsed();

    let diagnostics = Diagnostics {
        x_roots: xroots.len(),
        y_roots: yroots.len(),
        candidates: n_cands,
        excluded,
        certified: solutions.len(),
        refinement_rounds: rounds,
        timings: opts.timings.then_some(PhaseTimings {
            project: t_project,
            separate: t_separate,
            validate: t_validate,
        }),
    };
    Ok(SolveResult {
        solutions,
        x: Projection {
            resultant: rx,
            factorization: fx,
            roots: xroots,
            on_boundary: ivx.iter().map(|(_, b)| *b).collect(),
        },
        y: Projection {
            resultant: ry,
            factorization: fy,
            roots: yroots,
            on_boundary: ivy.iter().map(|(_, b)| *b).collect(),
        },
        diagnostics,
    })
}

type Projected = (UnivariatePolynomial, SquareFreeFactorization, Vec<(IsolatingInterval, bool)>);

/// Resultant eliminating `elim`, its factorization and the isolated real
/// roots, restricted to `window` when given.
fn project(
    f: &BivariatePolynomial,
    g: &BivariatePolynomial,
    elim: Var,
    window: Option<&(BigRational, BigRational)>,
) -> Result<Projected> {
    let r = resultant(f, g, elim).map_err(|e| match e {
        Error::NotZeroDimensional { var, .. } => Error::NotZeroDimensional {
            var,
            gcd_degree: Some(bivariate_gcd(f, g).total_degree()),
        },
        other => other,
    })?;
    let fac = yun_squarefree(&r)?;
    let ivs = match window {
        None => isolate_factorization(&fac)
            .into_iter()
            .map(|iv| (iv, false))
            .collect(),
        Some((a, b)) => {
            let (lo, hi) = aligned_enclosure(a, b);
            isolate_factorization_in(&fac, &lo, &hi)
                .into_iter()
                .filter_map(|iv| restrict(iv, a, b))
                .collect()
        }
    };
    Ok((r, fac, ivs))
}

/// A dyadic interval `[j 2^k, (j + 2) 2^k]` containing `[a, b]` with
/// `2^k >= b - a`. Its bisection points form a coarse dyadic grid, so short
/// dyadic roots are hit exactly, as in the global search.
fn aligned_enclosure(a: &BigRational, b: &BigRational) -> (Dyadic, Dyadic) {
    let width = b - a;
    let mut k = WINDOW_MIN_LOG2;
    while Dyadic::pow2(k).to_rational() < width {
        k += 1;
    }
    let step = Dyadic::pow2(k).to_rational();
    let j = (a / &step).floor().to_integer();
    let lo = Dyadic::new(j, k);
    let hi = &lo + &Dyadic::pow2(k + 1);
    (lo, hi)
}

/// Refines until the root is known to lie in `[a, b]` or outside it. The
/// flag reports a root equal to `a` or `b`.
fn restrict(mut iv: IsolatingInterval, a: &BigRational, b: &BigRational) -> Option<(IsolatingInterval, bool)> {
    loop {
        let lo = iv.lo().to_rational();
        let hi = iv.hi().to_rational();
        if iv.is_exact() {
            return (a <= &lo && &lo <= b).then(|| (iv, &lo == a || &lo == b));
        }
        // the root lies in the open interval (lo, hi)
        if &hi <= a || &lo >= b {
            return None;
        }
        if &lo >= a && &hi <= b {
            return Some((iv, false));
        }
        for side in [a, b] {
            if &lo < side && side < &hi && iv.poly().eval_rational(side).is_zero() {
                return Some((iv, true));
            }
        }
        qir_step(&mut iv);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(terms: &[(usize, usize, i64)]) -> BivariatePolynomial {
        BivariatePolynomial::from_i64_terms(terms)
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn circle() -> BivariatePolynomial {
        poly(&[(2, 0, 1), (0, 2, 1), (0, 0, -1)])
    }

    #[test]
    fn circle_line() {
        let spec = SystemSpec::new(circle(), poly(&[(1, 0, 1), (0, 1, -1)]));
        let res = solve(&spec, &SolveOptions::default()).unwrap();
        assert_eq!(res.solutions.len(), 2);
        assert_eq!(res.diagnostics.candidates, 4);
        assert_eq!(res.diagnostics.excluded, 2);
        assert!(res.solutions[0].x_interval().hi() < &Dyadic::zero());
        for s in &res.solutions {
            assert!(s.width() < spec.target_width);
        }
    }

    #[test]
    fn local_box() {
        let f = poly(&[(2, 0, 1), (0, 2, 1), (0, 0, -2)]);
        let g = poly(&[(0, 2, 1), (0, 0, -1)]);
        let spec = SystemSpec::new(f, g).with_query(QueryBox::new(q(0, 1), q(2, 1), q(0, 1), q(2, 1)));
        let res = solve(&spec, &SolveOptions::default()).unwrap();
        assert_eq!(res.diagnostics.candidates, 1);
        assert_eq!(res.solutions.len(), 1);
        assert_eq!(res.solutions[0].x_interval().lo(), &Dyadic::one());
        assert!(!res.solutions[0].on_boundary());
    }

    #[test]
    fn boundary_root_is_flagged() {
        // solutions (+-1, +-1); the box side x = 1 goes through two of them
        let f = poly(&[(2, 0, 1), (0, 2, 1), (0, 0, -2)]);
        let g = poly(&[(0, 2, 1), (0, 0, -1)]);
        let spec = SystemSpec::new(f, g).with_query(QueryBox::new(q(-1, 2), q(1, 1), q(-3, 1), q(3, 1)));
        let res = solve(&spec, &SolveOptions::default()).unwrap();
        assert_eq!(res.solutions.len(), 2);
        assert!(res.solutions.iter().all(|s| s.on_boundary()));
    }

    #[test]
    fn rational_boundary_root() {
        // x = 1/3 exactly on the query side
        let f = poly(&[(1, 0, 3), (0, 0, -1)]);
        let g = poly(&[(0, 1, 1)]);
        let spec = SystemSpec::new(f, g).with_query(QueryBox::new(q(1, 3), q(1, 1), q(-1, 1), q(1, 1)));
        let res = solve(&spec, &SolveOptions::default()).unwrap();
        assert_eq!(res.solutions.len(), 1);
        assert!(res.solutions[0].on_boundary());
        let spec = SystemSpec::new(poly(&[(1, 0, 3), (0, 0, -1)]), poly(&[(0, 1, 1)]))
            .with_query(QueryBox::new(q(1, 2), q(1, 1), q(-1, 1), q(1, 1)));
        assert!(solve(&spec, &SolveOptions::default()).unwrap().solutions.is_empty());
    }

    #[test]
    fn enclosure_is_aligned() {
        let (lo, hi) = aligned_enclosure(&q(-2, 1), &q(-1, 2));
        assert_eq!((lo, hi), (Dyadic::from_int(-2), Dyadic::from_int(2)));
        let (lo, hi) = aligned_enclosure(&q(1, 3), &q(1, 3));
        assert!(lo.to_rational() <= q(1, 3) && q(1, 3) <= hi.to_rational());
        assert_eq!(&hi - &lo, Dyadic::pow2(WINDOW_MIN_LOG2 + 1));
    }

    #[test]
    fn common_factor_reports_gcd_degree() {
        // (x - y)(x + 1) and (x - y)(y - 2)
        let l = poly(&[(1, 0, 1), (0, 1, -1)]);
        let f = &l * &poly(&[(1, 0, 1), (0, 0, 1)]);
        let g = &l * &poly(&[(0, 1, 1), (0, 0, -2)]);
        let err = solve(&SystemSpec::new(f, g), &SolveOptions::default()).unwrap_err();
        assert!(matches!(err, Error::NotZeroDimensional { gcd_degree: Some(1), .. }));
    }

    #[test]
    fn no_real_solutions() {
        let f = poly(&[(2, 0, 1), (0, 2, 1), (0, 0, 1)]);
        let g = poly(&[(1, 0, 1), (0, 1, -1)]);
        let res = solve(&SystemSpec::new(f, g), &SolveOptions::default()).unwrap();
        assert!(res.solutions.is_empty());
        assert_eq!(res.diagnostics.x_roots, 0);
    }

    #[test]
    fn degenerate_and_zero() {
        let f = poly(&[(1, 0, 1), (0, 0, -1)]);
        let g = poly(&[(1, 0, 1), (0, 0, -2)]);
        assert!(matches!(
            solve(&SystemSpec::new(f.clone(), g), &SolveOptions::default()),
            Err(Error::DegenerateElimination { .. })
        ));
        assert_eq!(
            solve(&SystemSpec::new(f, BivariatePolynomial::zero()), &SolveOptions::default()).unwrap_err(),
            Error::ZeroPolynomial
        );
    }
}
