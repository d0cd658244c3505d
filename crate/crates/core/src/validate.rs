//! Candidate boxes and the exclusion / inclusion predicates that decide them.

use num_rational::BigRational;

use crate::arith::{Dyadic, RealInterval};
use crate::elim::{cofactor_upper_bounds, CofactorBoundSpec, CofactorKind, Disc, SylvesterMatrix};
use crate::error::{Error, Result};
use crate::poly::BivariatePolynomial;
use crate::separate::IsolatedRoot;
use crate::uniroot::{qir_refine, qir_step, IsolatingInterval};

/// Default cap on refinement rounds per candidate.
pub const DEFAULT_BUDGET: usize = 2000;

/// The system together with both Sylvester matrices.
#[derive(Clone, Debug)]
pub struct ValidationContext {
    pub f: BivariatePolynomial,
    pub g: BivariatePolynomial,
    /// Eliminates `y`; its determinant is `R^(y)(x)`.
    pub sylvester_y: SylvesterMatrix,
    /// Eliminates `x`; its determinant is `R^(x)(y)`.
    pub sylvester_x: SylvesterMatrix,
}

/// An axis-parallel query rectangle `[A, B] x [C, D]` with rational corners.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QueryBox {
    pub x: (BigRational, BigRational),
    pub y: (BigRational, BigRational),
}

impl QueryBox {
    /// Panics if a side is empty.
    pub fn new(a: BigRational, b: BigRational, c: BigRational, d: BigRational) -> Self {
        assert!(a <= b && c <= d, "empty query box");
        QueryBox { x: (a, b), y: (c, d) }
    }
}

fn meets(iv: &RealInterval, side: &(BigRational, BigRational)) -> bool {
    iv.lo().to_rational() <= side.1 && side.0 <= iv.hi().to_rational()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Undecided,
    Excluded,
    Certified,
}

/// The four cofactor bounds on a frozen polydisc.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CofactorBounds {
    pub u_y: Dyadic,
    pub v_y: Dyadic,
    pub u_x: Dyadic,
    pub v_x: Dyadic,
}

/// A pair of projected roots `(alpha, beta)` with its shrinking box
/// `I(alpha) x I(beta)` and its polydisc, which is fixed at creation.
#[derive(Clone, Debug)]
pub struct CandidateBox {
    x: IsolatingInterval,
    y: IsolatingInterval,
    x_index: usize,
    y_index: usize,
    disc_x: Disc,
    disc_y: Disc,
    lb_x: Dyadic,
    lb_y: Dyadic,
    bounds: CofactorBounds,
    status: Status,
    rounds: usize,
}

impl CandidateBox {
    pub fn new(alpha: &IsolatedRoot, beta: &IsolatedRoot, ctx: &ValidationContext) -> Self {
        Self::with_indices(alpha, beta, 0, 0, ctx)
    }

    fn with_indices(
        alpha: &IsolatedRoot,
        beta: &IsolatedRoot,
        x_index: usize,
        y_index: usize,
        ctx: &ValidationContext,
    ) -> Self {
        let disc_x = alpha.disc().clone();
        let disc_y = beta.disc().clone();
        let ub = |matrix: &SylvesterMatrix, kind| {
            cofactor_upper_bounds(CofactorBoundSpec { matrix, kind }, &disc_x, &disc_y)
        };
        let bounds = CofactorBounds {
            u_y: ub(&ctx.sylvester_y, CofactorKind::U),
            v_y: ub(&ctx.sylvester_y, CofactorKind::V),
            u_x: ub(&ctx.sylvester_x, CofactorKind::U),
            v_x: ub(&ctx.sylvester_x, CofactorKind::V),
        };
        CandidateBox {
            x: alpha.interval().clone(),
            y: beta.interval().clone(),
            x_index,
            y_index,
            lb_x: alpha.lower_bound().clone(),
            lb_y: beta.lower_bound().clone(),
            disc_x,
            disc_y,
            bounds,
            status: Status::Undecided,
            rounds: 0,
        }
    }

    pub fn x(&self) -> &IsolatingInterval {
        &self.x
    }

    pub fn y(&self) -> &IsolatingInterval {
        &self.y
    }

    /// Positions of `alpha` and `beta` in the root lists the box was built from.
    pub fn indices(&self) -> (usize, usize) {
        (self.x_index, self.y_index)
    }

    pub fn polydisc(&self) -> (&Disc, &Disc) {
        (&self.disc_x, &self.disc_y)
    }

    pub fn lower_bounds(&self) -> (&Dyadic, &Dyadic) {
        (&self.lb_x, &self.lb_y)
    }

    pub fn cofactor_bounds(&self) -> &CofactorBounds {
        &self.bounds
    }

    pub fn status(&self) -> Status {
        self.status
    }

    /// Refinement rounds spent so far.
    pub fn rounds(&self) -> usize {
        self.rounds
    }

    /// The sample point `(x0, y0)`, the box center.
    pub fn sample(&self) -> (Dyadic, Dyadic) {
        (self.x.interval().midpoint(), self.y.interval().midpoint())
    }

    fn refine(&mut self) {
        qir_step(&mut self.x);
        qir_step(&mut self.y);
        self.rounds += 1;
    }
}

/// One candidate per pair of roots, keeping only pairs whose box meets the
/// query box when one is given.
pub fn build_candidates(
    xroots: &[IsolatedRoot],
    yroots: &[IsolatedRoot],
    query: Option<&QueryBox>,
    ctx: &ValidationContext,
) -> Vec<CandidateBox> {
    let mut out = Vec::new();
    for (i, a) in xroots.iter().enumerate() {
        if query.is_some_and(|q| !meets(a.interval().interval(), &q.x)) {
            continue;
        }
        for (j, b) in yroots.iter().enumerate() {
            if query.is_some_and(|q| !meets(b.interval().interval(), &q.y)) {
                continue;
            }
            out.push(CandidateBox::with_indices(a, b, i, j, ctx));
        }
    }
    out
}

/// `0` is outside the interval image of `f` or `g` over the box.
pub fn try_exclude(c: &mut CandidateBox, f: &BivariatePolynomial, g: &BivariatePolynomial) -> bool {
    let (bx, by) = (c.x.interval(), c.y.interval());
    if !f.eval_box(bx, by).contains_zero() || !g.eval_box(bx, by).contains_zero() {
        c.status = Status::Excluded;
        return true;
    }
    false
}

/// Both inequalities
/// `UB(u^(y)) |f(x0,y0)| + UB(v^(y)) |g(x0,y0)| < LB(alpha)` and
/// `UB(u^(x)) |f(x0,y0)| + UB(v^(x)) |g(x0,y0)| < LB(beta)`
/// at the box center.
pub fn try_include(c: &mut CandidateBox, f: &BivariatePolynomial, g: &BivariatePolynomial) -> bool {
    let (x0, y0) = c.sample();
    let fv = f.eval_dyadic(&x0, &y0).abs();
    let gv = g.eval_dyadic(&x0, &y0).abs();
    let b = &c.bounds;
    let lhs_x = &(&b.u_y * &fv) + &(&b.v_y * &gv);
    let lhs_y = &(&b.u_x * &fv) + &(&b.v_x * &gv);
    if lhs_x < c.lb_x && lhs_y < c.lb_y {
        c.status = Status::Certified;
        return true;
    }
    false
}

/// Alternates exclusion, inclusion and one QIR step on both axes until the
/// candidate is decided.
pub fn decide(c: &mut CandidateBox, ctx: &ValidationContext, budget: usize) -> Result<Status> {
    while c.status == Status::Undecided {
        if try_exclude(c, &ctx.f, &ctx.g) || try_include(c, &ctx.f, &ctx.g) {
            break;
        }
        if c.rounds >= budget {
            let w = c.x.width().max(c.y.width());
            return Err(Error::BudgetExceeded {
                rounds: c.rounds,
                width: w.to_string(),
            });
        }
        c.refine();
    }
    Ok(c.status)
}

/// A certified isolating box of a real solution.
#[derive(Clone, Debug)]
pub struct SolutionBox {
    x: IsolatingInterval,
    y: IsolatingInterval,
    on_boundary: bool,
}

impl SolutionBox {
    /// Panics unless the candidate is certified.
    pub fn from_candidate(c: CandidateBox) -> Self {
        assert_eq!(c.status, Status::Certified, "candidate not certified");
        SolutionBox {
            x: c.x,
            y: c.y,
            on_boundary: false,
        }
    }

    pub fn x(&self) -> &IsolatingInterval {
        &self.x
    }

    pub fn y(&self) -> &IsolatingInterval {
        &self.y
    }

    pub fn x_interval(&self) -> &RealInterval {
        self.x.interval()
    }

    pub fn y_interval(&self) -> &RealInterval {
        self.y.interval()
    }

    /// Multiplicities of the coordinates as roots of `R^(y)` and `R^(x)`.
    pub fn multiplicities(&self) -> (usize, usize) {
        (self.x.multiplicity(), self.y.multiplicity())
    }

    /// A coordinate equals a side of the query box exactly.
    pub fn on_boundary(&self) -> bool {
        self.on_boundary
    }

    pub(crate) fn set_on_boundary(&mut self, v: bool) {
        self.on_boundary = v;
    }

    pub fn width(&self) -> Dyadic {
        self.x.width().max(self.y.width())
    }
}

/// Refines both coordinates below `target` width.
pub fn refine_solution(s: &mut SolutionBox, target: &Dyadic) {
    qir_refine(&mut s.x, target);
    qir_refine(&mut s.y, target);
}
