//! Identities that read the combinatorial numbers off B-spline values.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{bspline_derivative_sided, eval_explicit_sided, Side};
use crate::error::{domain, verification, Result};
use crate::numeric::{
    binomial, binomial_row, factorial, int_pow, is_integer, rat, ExactInteger, ExactRational,
    Polynomial,
};

fn to_integer(x: ExactRational, what: impl FnOnce() -> String) -> Result<ExactInteger> {
    if is_integer(&x) {
        Ok(x.to_integer())
    } else {
        verification(format!("{} = {x} is not an integer", what()))
    }
}

/// `A(d, k) = d! B_{d+1}(k)`.
pub fn bridge_eulerian(d: u32, k: u32) -> Result<ExactInteger> {
    if k > d {
        return domain(format!("eulerian index k = {k} exceeds d = {d}"));
    }
    let v = eval_explicit_sided(d + 1, &rat(k as i64, 1), Side::Right)
        * ExactRational::from_integer(factorial(d as u64));
    to_integer(v, || format!("{d}! B_{}({k})", d + 1))
}

/// `D(d, n, k) = d! n^d B_{d+1}(k + 1/n)`.
///
/// The argument lies in `(k, k + 1]`, so the spline is read as a left limit;
/// this only matters for `d = 0, n = 1`, where `B_1` jumps at `k + 1`.
pub fn bridge_descent(d: u32, n: u32, k: u32) -> Result<ExactInteger> {
    if n == 0 {
        return domain("descent modulus n must be >= 1");
    }
    if k > d {
        return domain(format!("descent index k = {k} exceeds d = {d}"));
    }
    let x = rat(k as i64 * n as i64 + 1, n as i64);
    let scale = factorial(d as u64) * int_pow(&BigInt::from(n), d);
    let v = eval_explicit_sided(d + 1, &x, Side::Left) * ExactRational::from_integer(scale);
    to_integer(v, || format!("{d}! {n}^{d} B_{}({x})", d + 1))
}

/// Exact expansion of `(l + 1)^d B_{d+1}(k + 1/(l + 1))` in powers of `l`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaPolynomial {
    pub d: u32,
    pub k: u32,
    pub poly: Polynomial,
}

impl LambdaPolynomial {
    /// Coefficient of `l^j`, which equals `C(d, j) A(d+1, k, d-j+1) / d!`.
    pub fn coeff(&self, j: usize) -> ExactRational {
        self.poly.coeff(j)
    }
}

/// For `l >= 0` the spline argument `k + 1/(l + 1)` lies in `(k, k + 1]`, so
/// exactly the truncated powers `i = 0..=k` are active and each becomes
/// `((k - i)(l + 1) + 1)^d / d!`.
pub fn lambda_polynomial(d: u32, k: u32) -> Result<LambdaPolynomial> {
    if k > d {
        return domain(format!("index k = {k} exceeds d = {d}"));
    }
    let row = binomial_row(d as u64 + 1);
    let mut in_y = Polynomial::zero();
    for i in 0..=k {
        let slope = ExactRational::from_integer(BigInt::from(k - i));
        let term = Polynomial::linear(slope, ExactRational::one())
            .pow(d)
            .scale(&ExactRational::from_integer(row[i as usize].clone()));
        in_y = if i % 2 == 0 {
            &in_y + &term
        } else {
            &in_y - &term
        };
    }
    // y = l + 1
    let poly = in_y
        .compose_shift(&ExactRational::one())
        .scale(&ExactRational::new(BigInt::one(), factorial(d as u64)));
    Ok(LambdaPolynomial { d, k, poly })
}

/// `A(d+1, k, d-j+1)` for `j = 0..=d`, read from the lambda expansion:
/// `d! [l^j] / C(d, j)`.
pub fn bridge_refined_coeff(d: u32, k: u32) -> Result<Vec<ExactInteger>> {
    let lp = lambda_polynomial(d, k)?;
    let d_fact = ExactRational::from_integer(factorial(d as u64));
    (0..=d)
        .map(|j| {
            let c = ExactRational::from_integer(binomial(d as u64, j as i64));
            let v = lp.coeff(j as usize) * &d_fact / c;
            to_integer(v, || format!("{d}! [l^{j}] p / C({d}, {j}) at k = {k}"))
        })
        .collect()
}

/// `A(d+1, k, d-j+1)` from the derivatives of `B_{d+1}` at `k + 1`:
///
/// `A(d+1, k, d-j+1) = d!/C(d, j) sum_{i=0}^{j} (-1)^i C(d-i, j-i)/i! B_{d+1}^(i)(k+1)`.
///
/// `B_{d+1}` is a single polynomial on `[k, k+1]`, so expanding it about
/// `k + 1` and substituting `1/(l+1) - 1 = -l/(l+1)` gives the coefficients
/// of the lambda polynomial exactly. Derivatives are left limits at `k + 1`.
pub fn refined_via_derivative_sum(d: u32, k: u32, j: u32) -> Result<ExactInteger> {
    check_derivative_sum_domain(d, k, j)?;
    let x = rat(k as i64 + 1, 1);
    let mut acc = ExactRational::zero();
    for i in 0..=j {
        let deriv = bspline_derivative_sided(d + 1, i, &x, Side::Left)?;
        let w = ExactRational::new(
            binomial((d - i) as u64, (j - i) as i64),
            factorial(i as u64),
        );
        let term = deriv * w;
        if i % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    let v = acc * ExactRational::new(factorial(d as u64), binomial(d as u64, j as i64));
    to_integer(v, || {
        format!("derivative sum at (d, k, j) = ({d}, {k}, {j})")
    })
}

/// `d! sum_{i=0}^{j} (-1)^i B_{d+1}^(i)(k+1) / C(d-j+i, i)`, the same
/// derivative sum with the weights obtained by differentiating
/// `B_{d+1}(k + 1/(l+1))` without the chain rule. It agrees with the refined
/// numbers for `j <= 1` only, and is kept to document that.
pub fn derivative_sum_binomial_weights(d: u32, k: u32, j: u32) -> Result<ExactRational> {
    check_derivative_sum_domain(d, k, j)?;
    let x = rat(k as i64 + 1, 1);
    let mut acc = ExactRational::zero();
    for i in 0..=j {
        let deriv = bspline_derivative_sided(d + 1, i, &x, Side::Left)?;
        let c = ExactRational::from_integer(binomial((d - j + i) as u64, i as i64));
        let term = deriv / c;
        if i % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    Ok(acc * ExactRational::from_integer(factorial(d as u64)))
}

fn check_derivative_sum_domain(d: u32, k: u32, j: u32) -> Result<()> {
    if k > d || j > d {
        return domain(format!(
            "(d, k, j) = ({d}, {k}, {j}) outside 0 <= k, j <= d"
        ));
    }
    Ok(())
}
