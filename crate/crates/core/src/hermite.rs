//! Probabilists' Hermite polynomials `He_n`, monic and orthogonal for the
//! weight `exp(-x^2 / 2)`, so that `(-1)^n D^n exp(-x^2/2) = He_n(x) exp(-x^2/2)`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{domain, verification, Result};
use crate::numeric::{
    binomial_row, factorial, int_pow, rat, rational_to_f64, ExactRational, Polynomial,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HermiteSequence {
    polys: Vec<Polynomial>,
}

impl HermiteSequence {
    /// Highest degree held.
    pub fn max_degree(&self) -> usize {
        self.polys.len() - 1
    }

    pub fn poly(&self, i: usize) -> Option<&Polynomial> {
        self.polys.get(i)
    }

    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    /// `He_i(x)` by Horner's rule in `f64`.
    pub fn eval(&self, i: usize, x: f64) -> Result<f64> {
        match self.polys.get(i) {
            Some(p) => Ok(p.eval_f64(x)),
            None => domain(format!(
                "Hermite degree {i} exceeds the sequence maximum {}",
                self.max_degree()
            )),
        }
    }
}

/// `He_0..=He_max` from `He_{n+1} = x He_n - n He_{n-1}`.
fn by_recurrence(max: usize) -> Vec<Polynomial> {
    let mut polys = vec![Polynomial::one()];
    if max >= 1 {
        polys.push(Polynomial::x());
    }
    for n in 1..max {
        let next = &(&Polynomial::x() * &polys[n]) - &polys[n - 1].scale(&rat(n as i64, 1));
        polys.push(next);
    }
    polys
}

/// `He_0..=He_max` from `q_{n+1} = x q_n - q_n'`, which is what differentiating
/// `q_n(x) exp(-x^2/2)` once more produces.
fn by_rodrigues(max: usize) -> Vec<Polynomial> {
    let mut polys = vec![Polynomial::one()];
    for n in 0..max {
        let q = &polys[n];
        polys.push(&(&Polynomial::x() * q) - &q.derivative());
    }
    polys
}

/// Builds `He_0..=He_max` by the three-term recurrence and checks every
/// polynomial against the Rodrigues route.
pub fn hermite_prob(max: usize) -> Result<HermiteSequence> {
    let polys = by_recurrence(max);
    for (n, (a, b)) in polys.iter().zip(by_rodrigues(max)).enumerate() {
        if *a != b {
            return verification(format!(
                "He_{n}: recurrence gives {a}, Rodrigues route gives {b}"
            ));
        }
    }
    Ok(HermiteSequence { polys })
}

/// Physicists' `H_n(x) = sum_k (-1)^k n! (2x)^(n-2k) / (k! (n-2k)!)`.
pub fn hermite_phys(n: usize) -> Polynomial {
    let mut coeffs = vec![ExactRational::from_integer(BigInt::from(0)); n + 1];
    let n_fact = factorial(n as u64);
    for k in 0..=n / 2 {
        let m = n - 2 * k;
        let c = &n_fact * int_pow(&BigInt::from(2), m as u32)
            / (factorial(k as u64) * factorial(m as u64));
        let c = ExactRational::from_integer(if k % 2 == 0 { c } else { -c });
        coeffs[m] = c;
    }
    Polynomial::new(coeffs)
}

/// `2^(n/2) He_n(x sqrt 2)` expanded exactly. Parity keeps every power of
/// `sqrt 2` even, so the result has rational (in fact integer) coefficients.
pub fn rescaled_prob(he: &Polynomial, n: usize) -> Polynomial {
    let coeffs = he
        .coeffs()
        .iter()
        .enumerate()
        .map(|(m, c)| {
            debug_assert!(
                c == &ExactRational::from_integer(BigInt::from(0)) || (n + m).is_multiple_of(2)
            );
            let two_pow = int_pow(&BigInt::from(2), ((n + m) / 2) as u32);
            c * ExactRational::from_integer(two_pow)
        })
        .collect();
    Polynomial::new(coeffs)
}

/// Parity `He_i(-x) = (-1)^i He_i(x)`, degree `i` and leading coefficient 1.
pub fn check_structure(seq: &HermiteSequence) -> Result<()> {
    for (i, p) in seq.polys().iter().enumerate() {
        if p.degree() != Some(i) || !p.leading_coeff().is_some_and(One::is_one) {
            return verification(format!("He_{i} = {p} is not monic of degree {i}"));
        }
        let reflected = p.reflect();
        let expected = if i % 2 == 0 { p.clone() } else { -p };
        if reflected != expected {
            return verification(format!("He_{i} = {p} has the wrong parity"));
        }
    }
    Ok(())
}

/// Worst case of the finite-difference check of `(-1)^i D^i exp(-x^2/2)`
/// against `He_i(x) exp(-x^2/2)`.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussianDerivativeCheck {
    pub order: usize,
    pub x: f64,
    pub finite_difference: f64,
    pub hermite_value: f64,
    /// `|fd - exact|` over the largest `|exact|` seen on the grid for this order.
    pub relative_error: f64,
}

const FIXED_BITS: u32 = 256;

/// `exp(-y) * 2^FIXED_BITS` for rational `y >= 0`, by the Taylor series in
/// fixed point. Truncation error is a few units in the last place.
fn exp_neg_fixed(y: &ExactRational) -> BigInt {
    let a = y.numer();
    let b = y.denom();
    let mut term = BigInt::one() << FIXED_BITS;
    let mut acc = term.clone();
    let mut m = 1u64;
    while !term.is_zero() {
        term = term * a / (b * BigInt::from(m));
        if m % 2 == 1 {
            acc -= &term;
        } else {
            acc += &term;
        }
        m += 1;
    }
    acc
}

/// Central differences of order `i <= max_order` with step `step` applied to
/// `exp(-x^2/2)` at each grid point, evaluated in 256-bit fixed point so only
/// the `O(step^2)` truncation error remains. Returns the worst point per order.
pub fn gaussian_derivative_fd_check(
    seq: &HermiteSequence,
    max_order: usize,
    grid: &[ExactRational],
    step: &ExactRational,
) -> Result<Vec<GaussianDerivativeCheck>> {
    if max_order > seq.max_degree() {
        return domain(format!(
            "order {max_order} exceeds the Hermite sequence maximum {}",
            seq.max_degree()
        ));
    }
    let half = step / rat(2, 1);
    let scale = ExactRational::from_integer(BigInt::one() << FIXED_BITS);
    let mut worst = Vec::with_capacity(max_order + 1);
    for order in 0..=max_order {
        let rows: Vec<(f64, f64, f64)> = grid
            .iter()
            .map(|x| {
                let mut acc = BigInt::zero();
                for (m, c) in binomial_row(order as u64).iter().enumerate() {
                    let offset = order as i64 - 2 * m as i64;
                    let t = x + &half * rat(offset, 1);
                    let f = exp_neg_fixed(&(&t * &t / rat(2, 1)));
                    if m % 2 == 0 {
                        acc += c * f;
                    } else {
                        acc -= c * f;
                    }
                }
                let deriv = ExactRational::from_integer(acc)
                    / (&scale * num_traits::pow(step.clone(), order));
                let fd = if order % 2 == 0 {
                    rational_to_f64(&deriv)
                } else {
                    -rational_to_f64(&deriv)
                };
                let xf = rational_to_f64(x);
                let exact = seq.polys[order].eval_f64(xf) * (-xf * xf / 2.0).exp();
                (xf, fd, exact)
            })
            .collect();
        let norm = rows.iter().map(|r| r.2.abs()).fold(0.0, f64::max);
        let (x, fd, exact) = rows
            .iter()
            .copied()
            .max_by(|a, b| (a.1 - a.2).abs().total_cmp(&(b.1 - b.2).abs()))
            .unwrap_or((0.0, 0.0, 0.0));
        worst.push(GaussianDerivativeCheck {
            order,
            x,
            finite_difference: fd,
            hermite_value: exact,
            relative_error: if norm > 0.0 {
                (fd - exact).abs() / norm
            } else {
                0.0
            },
        });
    }
    Ok(worst)
}
