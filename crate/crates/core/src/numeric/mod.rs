//! Exact arithmetic substrate: big integers and rationals, dense rational
//! polynomials, and piecewise polynomials with rational breakpoints.

mod exact;
mod piecewise;
mod poly;

pub use exact::{
    binomial, binomial_row, factorial, int_pow, is_integer, rat, rational_to_f64, ExactInteger,
    ExactRational,
};
pub use piecewise::PiecewisePolynomial;
pub use poly::Polynomial;
