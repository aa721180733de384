//! Gaussian and Hermite-series approximations of the standardized Eulerian,
//! descent and refined Eulerian numbers and of B-spline derivatives, with
//! error scans against the exact values and log-log order fits.
//!
//! Throughout, `sigma = sqrt((d + 1) / 12)` and `mu = (d + 1) / 2` map the
//! standardized coordinate `x` to the index `x_d = sigma x + mu`.

mod fit;
mod scan;
mod sinc;

pub use fit::{fit_convergence_order, SlopeBand, SlopeFit};
pub use scan::{
    descent_profile_peak, error_scan, DescentPeak, ErrorScan, GridSpec, ScanFamily, ScanMode,
    ScanSample, FLOOR_STEP,
};
pub use sinc::{
    sinc_bound_check, sinc_envelope_constant, EnvelopeConstant, SincBoundReport, SincViolation,
};

use std::f64::consts::PI;

use crate::error::{domain, Result};
use crate::hermite::HermiteSequence;
use crate::numeric::{binomial, rational_to_f64, ExactRational};

/// Default `d` list for the Eulerian, descent and refined scans.
pub const DEFAULT_D_LIST: [u32; 7] = [32, 45, 64, 91, 128, 181, 256];

/// Default `d` list for the B-spline derivative scans.
pub const DEFAULT_BSPLINE_D_LIST: [u32; 6] = [16, 32, 64, 128, 256, 512];

/// Where the `1/n` (descent) or `1` (refined) offset enters the Gaussian.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Offset {
    /// As written: `x + 1/n` for descents, `x_d = sigma (x - 1) + mu` for
    /// refined numbers, i.e. the offset is in standardized units.
    #[default]
    Literal,
    /// Offset in index units: `x + 1/(n sigma)` for descents and
    /// `x = (k + 1 - mu) / sigma` for refined numbers.
    Rescaled,
}

pub(crate) fn sigma(d: u32) -> f64 {
    ((d as f64 + 1.0) / 12.0).sqrt()
}

pub(crate) fn mu(d: u32) -> f64 {
    (d as f64 + 1.0) / 2.0
}

/// Standard normal density.
pub fn gaussian_phi(x: f64) -> f64 {
    (-x * x / 2.0).exp() / (2.0 * PI).sqrt()
}

fn amplitude(d: u32) -> f64 {
    (6.0 / (PI * (d as f64 + 1.0))).sqrt()
}

/// `sqrt(6 / (pi (d + 1))) exp(-x^2 / 2)`, approximating `A(d, [x_d]) / d!`.
pub fn eulerian_approx(d: u32, x: f64) -> f64 {
    amplitude(d) * (-x * x / 2.0).exp()
}

/// `sqrt(6 / (pi (d + 1))) exp(-(x + 1/n)^2 / 2)`, approximating
/// `D(d, n, [x_d]) / (d! n^d)`.
pub fn descent_approx(d: u32, n: u32, x: f64) -> f64 {
    descent_approx_with(d, n, x, Offset::Literal)
}

pub fn descent_approx_with(d: u32, n: u32, x: f64, offset: Offset) -> f64 {
    let shift = match offset {
        Offset::Literal => 1.0 / n as f64,
        Offset::Rescaled => 1.0 / (n as f64 * sigma(d)),
    };
    eulerian_approx(d, x + shift)
}

/// Hermite-corrected Gaussian
/// `sqrt(6/(pi(d+1))) e^{-x^2/2} sum_{i<=j} ((d+1)/12)^{-i/2} He_i(x) / C(d-j+i, i)`,
/// approximating `A(d+1, [x_d], d-j+1) / d!`.
pub fn refined_approx(d: u32, j: u32, x: f64, herm: &HermiteSequence) -> Result<f64> {
    if j > d {
        return domain(format!("index j = {j} exceeds d = {d}"));
    }
    let inv_sigma = 1.0 / sigma(d);
    let mut series = 0.0;
    for i in 0..=j {
        let c = rational_to_f64(&ExactRational::from_integer(binomial(
            (d - j + i) as u64,
            i as i64,
        )));
        series += inv_sigma.powi(i as i32) * herm.eval(i as usize, x)? / c;
    }
    Ok(eulerian_approx(d, x) * series)
}

/// `(-1)^r He_r(x) phi(x)`, the limit of
/// `(d/12)^{(r+1)/2} B_d^(r)(sqrt(d/12) x + d/2)`.
pub fn bspline_gaussian_approx(d: u32, r: u32, x: f64, herm: &HermiteSequence) -> Result<f64> {
    if d <= r + 2 {
        return domain(format!(
            "B_{d} has no classical derivative limit of order {r}"
        ));
    }
    let sign = if r.is_multiple_of(2) { 1.0 } else { -1.0 };
    Ok(sign * herm.eval(r as usize, x)? * gaussian_phi(x))
}

/// Riemann sum of [`eulerian_approx`] over all lattice points `x_k`,
/// `k = 0..=d+1`; tends to 1.
pub fn eulerian_lattice_mass(d: u32) -> f64 {
    let (s, m) = (sigma(d), mu(d));
    (0..=d + 1)
        .map(|k| eulerian_approx(d, (k as f64 - m) / s))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hermite::hermite_prob;
    use proptest::prelude::*;

    #[test]
    fn phi_examples() {
        assert!((gaussian_phi(0.0) - 0.398_942_280_401_432_7).abs() < 1e-15);
        assert!((gaussian_phi(1.0) / gaussian_phi(0.0) - (-0.5f64).exp()).abs() < 1e-15);
    }

    #[test]
    fn eulerian_approx_at_center() {
        let v = eulerian_approx(3, 0.0);
        assert!((v - (6.0 / (4.0 * PI)).sqrt()).abs() < 1e-15);
        assert!((v - 0.6910).abs() < 1e-4);
        assert!((v - 2.0 / 3.0 - 0.024).abs() < 1e-3);
    }

    #[test]
    fn descent_approx_examples() {
        assert_eq!(descent_approx(10, 1, 0.3), eulerian_approx(10, 1.3));
        let peak = descent_approx(20, 3, -1.0 / 3.0);
        assert!(peak >= descent_approx(20, 3, -0.3) && peak >= descent_approx(20, 3, -0.35));
        assert!((descent_approx(20, 1_000_000, 0.7) - eulerian_approx(20, 0.7)).abs() < 1e-6);
        let r = descent_approx_with(47, 2, 0.0, Offset::Rescaled);
        assert!((r - eulerian_approx(47, 0.25)).abs() < 1e-15);
    }

    #[test]
    fn refined_approx_examples() {
        let h = hermite_prob(3).unwrap();
        for x in [-1.5, 0.0, 0.4] {
            assert_eq!(
                refined_approx(20, 0, x, &h).unwrap(),
                eulerian_approx(20, x)
            );
        }
        assert!((refined_approx(20, 1, 0.0, &h).unwrap() - amplitude(20)).abs() < 1e-15);
        assert!(refined_approx(2, 3, 0.0, &h).is_err());
    }

    #[test]
    fn bspline_gaussian_examples() {
        let h = hermite_prob(2).unwrap();
        let inv = 1.0 / (2.0 * PI).sqrt();
        assert!((bspline_gaussian_approx(10, 0, 0.0, &h).unwrap() - inv).abs() < 1e-15);
        assert_eq!(bspline_gaussian_approx(10, 1, 0.0, &h).unwrap(), 0.0);
        assert!((bspline_gaussian_approx(10, 2, 0.0, &h).unwrap() + inv).abs() < 1e-15);
        assert!(bspline_gaussian_approx(4, 2, 0.0, &h).is_err());
    }

    #[test]
    fn lattice_mass_is_one() {
        for d in [64, 100, 256, 512] {
            assert!((eulerian_lattice_mass(d) - 1.0).abs() < 1e-3, "d = {d}");
        }
    }

    proptest! {
        #[test]
        fn eulerian_approx_is_even(d in 1u32..500, x in -6.0f64..6.0) {
            prop_assert_eq!(eulerian_approx(d, x), eulerian_approx(d, -x));
            prop_assert_eq!(gaussian_phi(x), gaussian_phi(-x));
        }

        #[test]
        fn lattice_mass_property(d in 64u32..400) {
            prop_assert!((eulerian_lattice_mass(d) - 1.0).abs() < 1e-3);
        }
    }
}
