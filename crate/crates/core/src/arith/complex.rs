use super::{Dyadic, RealInterval};

/// Axis-aligned box `re + i*im` in the complex plane.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexBox {
    pub re: RealInterval,
    pub im: RealInterval,
}

impl ComplexBox {
    pub fn new(re: RealInterval, im: RealInterval) -> Self {
        ComplexBox { re, im }
    }

    /// Smallest box containing the closed disc of `radius` around the real
    /// point `center`.
    pub fn from_disc(center: &Dyadic, radius: &Dyadic) -> Self {
        disc_to_complex_box(center, radius)
    }

    pub fn magnitude_ub(&self) -> Dyadic {
        complex_box_magnitude_ub(self)
    }

    /// `true` if the box is symmetric about the real axis.
    pub fn is_real_centered(&self) -> bool {
        self.im.midpoint().is_zero()
    }
}

pub fn disc_to_complex_box(center: &Dyadic, radius: &Dyadic) -> ComplexBox {
    assert!(!radius.is_negative(), "negative disc radius");
    ComplexBox {
        re: RealInterval::new(center - radius, center + radius),
        im: RealInterval::new(-radius, radius.clone()),
    }
}

/// Upper bound on `|z|` over the box: `sqrt(max|re|^2 + max|im|^2)` rounded up.
pub fn complex_box_magnitude_ub(b: &ComplexBox) -> Dyadic {
    let r = b.re.magnitude();
    let i = b.im.magnitude();
    (&r * &r + &i * &i).sqrt_upper()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(m: i64, e: i64) -> Dyadic {
        Dyadic::new(m, e)
    }

    #[test]
    fn magnitude_examples() {
        let zero = ComplexBox::new(RealInterval::point(d(0, 0)), RealInterval::point(d(0, 0)));
        assert_eq!(complex_box_magnitude_ub(&zero), Dyadic::zero());

        let p = ComplexBox::new(RealInterval::point(d(3, 0)), RealInterval::point(d(4, 0)));
        assert_eq!(complex_box_magnitude_ub(&p), d(5, 0));

        let unit = disc_to_complex_box(&d(0, 0), &d(1, 0));
        let m = complex_box_magnitude_ub(&unit);
        assert!(&m * &m >= d(2, 0));
        assert!(m <= d(3, -1));
    }

    #[test]
    fn disc_boxes() {
        let b = disc_to_complex_box(&d(0, 0), &d(1, 0));
        assert_eq!(b.re, RealInterval::new(d(-1, 0), d(1, 0)));
        assert_eq!(b.im, RealInterval::new(d(-1, 0), d(1, 0)));

        let b = disc_to_complex_box(&d(2, 0), &Dyadic::zero());
        assert!(b.re.is_point() && b.im.is_point());
        assert_eq!(b.re.lo(), &d(2, 0));

        let b = disc_to_complex_box(&d(3, -1), &d(1, -2));
        assert_eq!(b.re, RealInterval::new(d(5, -2), d(7, -2)));
        assert_eq!(b.im, RealInterval::new(d(-1, -2), d(1, -2)));
    }
}
