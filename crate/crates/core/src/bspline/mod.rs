//! Cardinal B-splines `B_d` (order `d`, degree `d - 1`, support `[0, d]`).
//!
//! Three independent evaluation routes are provided: the truncated-power
//! formula, the two-term order recurrence, and the exact piecewise polynomial
//! obtained by repeated convolution of the unit box. Derivatives follow the
//! difference rule `B_d' (x) = B_{d-1}(x) - B_{d-1}(x - 1)`.

mod bridge;
mod fourier;

pub use bridge::{
    bridge_descent, bridge_eulerian, bridge_refined_coeff, derivative_sum_binomial_weights,
    lambda_polynomial, refined_via_derivative_sum, LambdaPolynomial,
};
pub use fourier::{fourier_check, fourier_transform, sinc};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{domain, Result};
use crate::numeric::{
    binomial_row, factorial, int_pow, rat, ExactInteger, ExactRational, PiecewisePolynomial,
    Polynomial,
};

/// Which one-sided value to take where a function jumps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Side {
    /// Right-continuous, the convention of `B_1 = 1_[0,1)`.
    #[default]
    Right,
    /// Left limit.
    Left,
}

/// `sum_{i=0}^{d} (-1)^i C(d, i) (x - i)_+^m`.
///
/// For `m = 0` the truncated power is the step `1_{t >= 0}` (right) or
/// `1_{t > 0}` (left). Evaluated over the common denominator of `x`.
fn truncated_power_sum(d: u32, m: u32, x: &ExactRational, side: Side) -> ExactRational {
    let p = x.numer();
    let q = x.denom();
    let row = binomial_row(d as u64);
    let mut acc = ExactInteger::zero();
    for (i, c) in row.iter().enumerate() {
        let shifted: ExactInteger = p - q * BigInt::from(i);
        let active = match (m, side) {
            (0, Side::Left) => shifted > ExactInteger::zero(),
            _ => shifted >= ExactInteger::zero(),
        };
        if !active {
            // arguments only decrease with i
            break;
        }
        let term = c * int_pow(&shifted, m);
        if i % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    ExactRational::new(acc, int_pow(q, m))
}

fn check_order(d: u32) -> Result<()> {
    if d == 0 {
        return domain("B-spline order must be >= 1");
    }
    Ok(())
}

/// `B_d(x) = 1/(d-1)! sum_{i=0}^{d} (-1)^i C(d, i) (x - i)_+^{d-1}`.
pub fn bspline_eval_explicit(d: u32, x: &ExactRational) -> Result<ExactRational> {
    check_order(d)?;
    Ok(eval_explicit_sided(d, x, Side::Right))
}

fn eval_explicit_sided(d: u32, x: &ExactRational, side: Side) -> ExactRational {
    let outside = match side {
        Side::Right => *x < ExactRational::zero() || *x >= rat(d as i64, 1),
        Side::Left => *x <= ExactRational::zero() || *x > rat(d as i64, 1),
    };
    if outside {
        return ExactRational::zero();
    }
    truncated_power_sum(d, d - 1, x, side) / ExactRational::from_integer(factorial(d as u64 - 1))
}

/// `B_d(x) = x/(d-1) B_{d-1}(x) + (d-x)/(d-1) B_{d-1}(x-1)` from the unit box.
///
/// The recursion tree collapses to `B_m(x - s)` for `m <= d` and shifts
/// `s <= d - m`, so the evaluation is quadratic in `d`.
pub fn bspline_eval_recurrence(d: u32, x: &ExactRational) -> Result<ExactRational> {
    check_order(d)?;
    let one = ExactRational::one();
    let mut vals: Vec<ExactRational> = (0..d as i64)
        .map(|s| {
            let t = x - rat(s, 1);
            if t >= ExactRational::zero() && t < one {
                one.clone()
            } else {
                ExactRational::zero()
            }
        })
        .collect();
    for m in 2..=d as i64 {
        let denom = rat(m - 1, 1);
        vals = (0..=(d as i64 - m))
            .map(|s| {
                let t = x - rat(s, 1);
                let lead = &t / &denom * &vals[s as usize];
                let lag = (rat(m, 1) - &t) / &denom * &vals[s as usize + 1];
                lead + lag
            })
            .collect();
    }
    Ok(vals.swap_remove(0))
}

/// `r`-th derivative by the difference rule,
/// `B_d^(r)(x) = sum_{m=0}^{r} (-1)^m C(r, m) B_{d-r}(x - m)`.
///
/// Only classical derivatives are served: `r < d`, and at an integer knot the
/// order must stay below `d - 1` because `B_d^(d-1)` jumps there.
pub fn bspline_derivative_eval(d: u32, r: u32, x: &ExactRational) -> Result<ExactRational> {
    check_order(d)?;
    if r >= d {
        return domain(format!("derivative order {r} exceeds degree of B_{d}"));
    }
    let at_knot = x.is_integer() && *x >= ExactRational::zero() && *x <= rat(d as i64, 1);
    if r + 1 >= d && at_knot {
        return domain(format!("B_{d}^({r}) is discontinuous at the knot {x}"));
    }
    Ok(derivative_sided(d, r, x, Side::Right))
}

/// One-sided `r`-th derivative, defined everywhere for `r < d`.
pub fn bspline_derivative_sided(
    d: u32,
    r: u32,
    x: &ExactRational,
    side: Side,
) -> Result<ExactRational> {
    check_order(d)?;
    if r >= d {
        return domain(format!("derivative order {r} exceeds degree of B_{d}"));
    }
    Ok(derivative_sided(d, r, x, side))
}

fn derivative_sided(d: u32, r: u32, x: &ExactRational, side: Side) -> ExactRational {
    let row = binomial_row(r as u64);
    let base = d - r;
    row.iter()
        .enumerate()
        .map(|(m, c)| {
            let v = eval_explicit_sided(base, &(x - rat(m as i64, 1)), side)
                * ExactRational::from_integer(c.clone());
            if m % 2 == 0 {
                v
            } else {
                -v
            }
        })
        .sum()
}

/// Cardinal B-spline held as an exact piecewise polynomial on knots `0..=d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BSpline {
    order: u32,
    repr: PiecewisePolynomial,
}

impl BSpline {
    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn piecewise(&self) -> &PiecewisePolynomial {
        &self.repr
    }

    pub fn eval(&self, x: &ExactRational) -> ExactRational {
        self.repr.eval(x)
    }

    /// `r`-th derivative from differentiating each piece, right-continuous.
    pub fn derivative_eval(&self, r: u32, x: &ExactRational) -> ExactRational {
        let mut f = self.repr.clone();
        for _ in 0..r {
            f = f.derivative();
        }
        f.eval(x)
    }

    pub fn integral(&self) -> ExactRational {
        self.repr.integral()
    }

    /// Highest `s` such that value and first `s` derivatives are continuous
    /// at every knot, counting the zero extension outside `[0, d]`; `None`
    /// when the values already jump.
    pub fn smoothness(&self) -> Option<u32> {
        let mut pieces = vec![Polynomial::zero()];
        pieces.extend(self.repr.pieces().iter().cloned());
        pieces.push(Polynomial::zero());
        let knots = self.repr.breakpoints();
        let mut best: Option<u32> = None;
        for s in 0..self.order {
            let ok = pieces.windows(2).zip(knots).all(|(w, t)| {
                w[0].nth_derivative(s as usize).eval(t) == w[1].nth_derivative(s as usize).eval(t)
            });
            if !ok {
                break;
            }
            best = Some(s);
        }
        best
    }
}

/// `B_d` as the `(d-1)`-fold convolution of the unit box with itself.
pub fn bspline_build(d: u32) -> Result<BSpline> {
    check_order(d)?;
    let mut repr = PiecewisePolynomial::indicator(rat(0, 1), rat(1, 1), rat(1, 1))?;
    for _ in 1..d {
        repr = repr.convolve_unit_box();
    }
    Ok(BSpline { order: d, repr })
}
