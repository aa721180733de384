use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Arbitrary-precision signed integer.
pub type ExactInteger = BigInt;

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator.
pub type ExactRational = BigRational;

/// Shorthand for the rational `num / den`.
pub fn rat(num: i64, den: i64) -> ExactRational {
    BigRational::new(num.into(), den.into())
}

/// `C(n, k)`, zero when `k < 0` or `k > n`.
pub fn binomial(n: u64, k: i64) -> ExactInteger {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// The full row `C(n, 0), ..., C(n, n)`.
pub fn binomial_row(n: u64) -> Vec<ExactInteger> {
    let mut row = Vec::with_capacity(n as usize + 1);
    let mut c = BigInt::one();
    row.push(c.clone());
    for i in 0..n {
        c = c * (n - i) / (i + 1);
        row.push(c.clone());
    }
    row
}

pub fn factorial(n: u64) -> ExactInteger {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// `base^exp` with `0^0 = 1`.
pub fn int_pow(base: &ExactInteger, exp: u32) -> ExactInteger {
    num_traits::pow(base.clone(), exp as usize)
}

pub fn is_integer(x: &ExactRational) -> bool {
    x.denom().is_one()
}

/// Nearest `f64` to an exact rational.
///
/// Magnitudes far outside the `f64` range saturate to `±inf` or `±0`.
pub fn rational_to_f64(x: &ExactRational) -> f64 {
    match x.to_f64() {
        Some(v) => v,
        None if x.is_negative() => f64::NEG_INFINITY,
        None => f64::INFINITY,
    }
}
