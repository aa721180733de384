use gauss_quad::GaussLegendre;

use super::bspline_build;
use crate::error::Result;
use crate::numeric::{rat, rational_to_f64};

/// Gauss-Legendre nodes per unit knot interval.
const NODES_PER_INTERVAL: usize = 20;

/// `sin(t) / t`, with `sinc(0) = 1`.
pub fn sinc(t: f64) -> f64 {
    if t == 0.0 {
        1.0
    } else {
        t.sin() / t
    }
}

/// `int B_d(t) e^{-i w (t - c)} dt` by composite Gauss-Legendre quadrature,
/// returned as `(re, im)`.
///
/// Each piece is re-expanded around its left knot so the `f64` coefficients
/// stay small.
fn transform_about(d: u32, omega: f64, center: f64) -> Result<(f64, f64)> {
    let b = bspline_build(d)?;
    let rule = GaussLegendre::new(NODES_PER_INTERVAL).expect("positive Gauss-Legendre degree");
    let mut re = 0.0;
    let mut im = 0.0;
    for (i, piece) in b.piecewise().pieces().iter().enumerate() {
        let local = piece.compose_shift(&rat(i as i64, 1));
        let coeffs: Vec<f64> = local.coeffs().iter().map(rational_to_f64).collect();
        let value = |u: f64| coeffs.iter().rev().fold(0.0, |acc, c| acc * u + c);
        let phase = |u: f64| omega * (i as f64 + u - center);
        re += rule.integrate(0.0, 1.0, |u| value(u) * phase(u).cos());
        im -= rule.integrate(0.0, 1.0, |u| value(u) * phase(u).sin());
    }
    Ok((re, im))
}

/// Fourier transform `int_0^d B_d(t) e^{-i w t} dt` as `(re, im)`.
pub fn fourier_transform(d: u32, omega: f64) -> Result<(f64, f64)> {
    transform_about(d, omega, 0.0)
}

/// `|int B_d(t) e^{-i w (t - d/2)} dt - sinc^d(w/2)|`.
///
/// The transform is taken about the center `d/2`, where it is real; the
/// uncentered transform carries the extra phase `e^{-i w d/2}`.
pub fn fourier_check(d: u32, omega: f64) -> Result<f64> {
    let (re, im) = transform_about(d, omega, d as f64 / 2.0)?;
    let target = sinc(omega / 2.0).powi(d as i32);
    Ok((re - target).hypot(im))
}
