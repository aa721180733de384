//! Exact Eulerian, refined Eulerian and descent numbers computed by explicit
//! formulas, recurrences and cardinal B-spline identities, together with
//! their Gaussian and Hermite-series asymptotics.
//!
//! ```
//! use eulerspline_core::{bridge_eulerian, eulerian_explicit};
//!
//! assert_eq!(bridge_eulerian(4, 2).unwrap(), eulerian_explicit(4, 2).unwrap());
//! ```

pub mod asymptotics;
pub mod bspline;
pub mod combinat;
pub mod error;
pub mod hermite;
pub mod numeric;
pub mod oracle;
pub mod verify;

pub use asymptotics::{
    error_scan, fit_convergence_order, sinc_bound_check, ErrorScan, GridSpec, Offset, ScanFamily,
    ScanMode, SincBoundReport, SlopeBand, SlopeFit,
};
pub use bspline::{
    bridge_descent, bridge_eulerian, bridge_refined_coeff, bspline_build, bspline_derivative_eval,
    bspline_eval_explicit, bspline_eval_recurrence, fourier_check, refined_via_derivative_sum,
    BSpline, LambdaPolynomial,
};
pub use combinat::{
    descent_explicit, descent_recurrence_table, eulerian_explicit, eulerian_recurrence_table,
    refined_explicit, refined_recurrence_table, DescentTable, EulerianTable, RefinedTable,
};
pub use error::{Error, Result};
pub use hermite::{hermite_prob, HermiteSequence};
pub use numeric::{ExactInteger, ExactRational, PiecewisePolynomial, Polynomial};
pub use oracle::{enumerate_descents, DescentHistogram};
