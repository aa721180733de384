use std::f64::consts::PI;

use crate::bspline::sinc;
use crate::error::{domain, Result};

/// Consecutive decreases of `d^{(k+2)/2} / pi^{d-k-2}` after which the
/// search for its maximum stops.
const DECREASE_RUN: u32 = 50;

/// `c_k = max_{d >= k+2} d^{(k+2)/2} / pi^{d-k-2}` with its certificate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnvelopeConstant {
    pub k: u32,
    pub c_k: f64,
    /// `d` attaining the maximum.
    pub argmax_d: u32,
    /// Last `d` examined.
    pub scanned_to: u32,
}

pub fn sinc_envelope_constant(k: u32) -> EnvelopeConstant {
    let log_term =
        |d: u32| (k as f64 + 2.0) / 2.0 * (d as f64).ln() - (d as f64 - k as f64 - 2.0) * PI.ln();
    let mut d = k + 2;
    let mut best = (log_term(d), d);
    let mut prev = best.0;
    let mut run = 0;
    while run < DECREASE_RUN {
        d += 1;
        let t = log_term(d);
        run = if t < prev { run + 1 } else { 0 };
        if t > best.0 {
            best = (t, d);
        }
        prev = t;
    }
    EnvelopeConstant {
        k,
        c_k: best.0.exp(),
        argmax_d: best.1,
        scanned_to: d,
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SincViolation {
    pub d: u32,
    pub x: f64,
    pub lhs: f64,
    pub bound: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SincBoundReport {
    pub constant: EnvelopeConstant,
    pub samples_checked: usize,
    pub violations: Vec<SincViolation>,
}

impl SincBoundReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// `G_k(x) = 1_{|x| > 1} c_k / (pi^2 x^2) + (pi |x|)^k exp(-x^2)`.
fn envelope(k: u32, c_k: f64, x: f64) -> f64 {
    let tail = if x.abs() > 1.0 {
        c_k / (PI * PI * x * x)
    } else {
        0.0
    };
    tail + (PI * x.abs()).powi(k as i32) * (-x * x).exp()
}

/// Checks `(pi |x|)^k |sinc(pi x / sqrt d)|^d <= G_k(x)` at every `(d, x)`.
/// A relative slack of `1e-12` absorbs rounding where both sides meet, as at
/// `x = 0, k = 0`.
pub fn sinc_bound_check(k: u32, d_list: &[u32], xs: &[f64]) -> Result<SincBoundReport> {
    if let Some(d) = d_list.iter().find(|&&d| d < k + 2) {
        return domain(format!("d = {d} is below k + 2 = {}", k + 2));
    }
    let constant = sinc_envelope_constant(k);
    let mut violations = Vec::new();
    for &d in d_list {
        let root = (d as f64).sqrt();
        for &x in xs {
            let lhs = (PI * x.abs()).powi(k as i32) * sinc(PI * x / root).abs().powi(d as i32);
            let bound = envelope(k, constant.c_k, x);
            if lhs > bound * (1.0 + 1e-12) {
                violations.push(SincViolation { d, x, lhs, bound });
            }
        }
    }
    Ok(SincBoundReport {
        constant,
        samples_checked: d_list.len() * xs.len(),
        violations,
    })
}
