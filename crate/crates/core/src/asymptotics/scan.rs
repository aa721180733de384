use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use super::{
    bspline_gaussian_approx, descent_approx_with, eulerian_approx, mu, refined_approx, sigma,
    Offset,
};
use crate::bspline::{bspline_derivative_sided, Side};
use crate::combinat::{descent_recurrence_table, eulerian_recurrence_table, refined_explicit};
use crate::error::{domain, Result};
use crate::hermite::{hermite_prob, HermiteSequence};
use crate::numeric::{factorial, int_pow, rat, rational_to_f64, ExactInteger, ExactRational};

/// Spacing of the uniform `x` grid in [`ScanMode::Floor`].
pub const FLOOR_STEP: f64 = 0.01;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ScanMode {
    /// Only the `x` whose index `x_d` is an exact lattice point.
    #[default]
    Lattice,
    /// `x` on the multiples of [`FLOOR_STEP`], exact side read at the floor `[x_d]`.
    Floor,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub x_lo: f64,
    pub x_hi: f64,
    pub mode: ScanMode,
}

impl GridSpec {
    pub fn new(x_lo: f64, x_hi: f64, mode: ScanMode) -> Result<Self> {
        if x_lo.is_nan() || x_hi.is_nan() || x_lo >= x_hi {
            return domain(format!("empty window [{x_lo}, {x_hi}]"));
        }
        Ok(Self { x_lo, x_hi, mode })
    }

    /// Symmetric window `|x| <= w`.
    pub fn window(w: f64, mode: ScanMode) -> Result<Self> {
        Self::new(-w, w, mode)
    }

    fn contains(&self, x: f64) -> bool {
        self.x_lo <= x && x <= self.x_hi
    }
}

impl Default for GridSpec {
    fn default() -> Self {
        Self {
            x_lo: -3.0,
            x_hi: 3.0,
            mode: ScanMode::Lattice,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScanFamily {
    /// `A(d, k) / d!` against [`eulerian_approx`].
    Eulerian,
    /// `D(d, n, k) / (d! n^d)` against [`descent_approx_with`].
    Descent { n: u32, offset: Offset },
    /// `A(d+1, k, d-j+1) / d!` against [`refined_approx`].
    Refined { j: u32, offset: Offset },
    /// `(d/12)^{(r+1)/2} B_d^(r)(d/2 + m/4)` against
    /// [`bspline_gaussian_approx`]; the lattice is the quarter integers.
    BSplineDerivative { r: u32 },
}

impl ScanFamily {
    pub fn name(&self) -> &'static str {
        match self {
            Self::Eulerian => "eulerian",
            Self::Descent { .. } => "descent",
            Self::Refined { .. } => "refined",
            Self::BSplineDerivative { .. } => "bspline",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanSample {
    pub d: u32,
    pub sup_error: f64,
    /// Standardized coordinate where the sup is attained.
    pub argmax_x: f64,
    pub points: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ErrorScan {
    pub family: ScanFamily,
    pub grid: GridSpec,
    pub samples: Vec<ScanSample>,
}

/// Standardized profile of one family at one `d`: lattice index `k` sits at
/// `x = (k - center) / scale`, and `exact(k) * out_scale` is compared with
/// `approx(x) * out_scale`.
struct Profile<'a> {
    center: f64,
    scale: f64,
    out_scale: f64,
    exact: Box<dyn Fn(i64) -> Result<ExactRational> + Sync + 'a>,
    approx: Box<dyn Fn(f64) -> Result<f64> + Sync + 'a>,
}

impl Profile<'_> {
    fn x_of(&self, k: i64) -> f64 {
        (k as f64 - self.center) / self.scale
    }

    fn floor_index(&self, x: f64) -> i64 {
        (self.center + self.scale * x).floor() as i64
    }
}

fn ratio(num: &ExactInteger, den: &ExactInteger) -> ExactRational {
    ExactRational::new(num.clone(), den.clone())
}

fn profile<'a>(family: ScanFamily, d: u32, herm: &'a HermiteSequence) -> Result<Profile<'a>> {
    let (s, m) = (sigma(d), mu(d));
    Ok(match family {
        ScanFamily::Eulerian => {
            let table = eulerian_recurrence_table(d);
            let total = factorial(d as u64);
            Profile {
                center: m,
                scale: s,
                out_scale: 1.0,
                exact: Box::new(move |k| Ok(ratio(&table.get(k), &total))),
                approx: Box::new(move |x| Ok(eulerian_approx(d, x))),
            }
        }
        ScanFamily::Descent { n, offset } => {
            if n == 0 {
                return domain("descent modulus n must be >= 1");
            }
            let table = descent_recurrence_table(d, n)?;
            let total = factorial(d as u64) * int_pow(&BigInt::from(n), d);
            Profile {
                center: m,
                scale: s,
                out_scale: 1.0,
                exact: Box::new(move |k| Ok(ratio(&table.get(k), &total))),
                approx: Box::new(move |x| Ok(descent_approx_with(d, n, x, offset))),
            }
        }
        ScanFamily::Refined { j, offset } => {
            if j > d {
                return domain(format!("index j = {j} exceeds d = {d}"));
            }
            let values = (0..=d)
                .into_par_iter()
                .map(|k| refined_explicit(d + 1, k, d - j + 1))
                .collect::<Result<Vec<_>>>()?;
            let total = factorial(d as u64);
            let center = match offset {
                Offset::Literal => m - s,
                Offset::Rescaled => m - 1.0,
            };
            Profile {
                center,
                scale: s,
                out_scale: 1.0,
                exact: Box::new(move |k| {
                    let v = usize::try_from(k)
                        .ok()
                        .and_then(|k| values.get(k))
                        .cloned()
                        .unwrap_or_else(Zero::zero);
                    Ok(ratio(&v, &total))
                }),
                approx: Box::new(move |x| refined_approx(d, j, x, herm)),
            }
        }
        ScanFamily::BSplineDerivative { r } => {
            let sd = (d as f64 / 12.0).sqrt();
            let out_scale = sd.powi(r as i32 + 1);
            // probe the domain once so errors surface before the scan
            bspline_gaussian_approx(d, r, 0.0, herm)?;
            Profile {
                center: 0.0,
                scale: 4.0 * sd,
                out_scale,
                exact: Box::new(move |k| {
                    let t = rat(2 * d as i64 + k, 4);
                    bspline_derivative_sided(d, r, &t, Side::Right)
                }),
                approx: Box::new(move |x| Ok(bspline_gaussian_approx(d, r, x, herm)? / out_scale)),
            }
        }
    })
}

/// `(x, k)` pairs to compare at.
fn sample_points(p: &Profile<'_>, grid: &GridSpec) -> Vec<(f64, i64)> {
    match grid.mode {
        ScanMode::Lattice => {
            let lo = p.floor_index(grid.x_lo) - 1;
            let hi = p.floor_index(grid.x_hi) + 1;
            (lo..=hi)
                .map(|k| (p.x_of(k), k))
                .filter(|&(x, _)| grid.contains(x))
                .collect()
        }
        ScanMode::Floor => {
            // multiples of the step, so nested windows give nested grids
            let lo = (grid.x_lo / FLOOR_STEP - 1e-9).ceil() as i64;
            let hi = (grid.x_hi / FLOOR_STEP + 1e-9).floor() as i64;
            (lo..=hi)
                .map(|i| {
                    let x = i as f64 * FLOOR_STEP;
                    (x, p.floor_index(x))
                })
                .collect()
        }
    }
}

fn scan_one(
    family: ScanFamily,
    d: u32,
    grid: &GridSpec,
    herm: &HermiteSequence,
) -> Result<ScanSample> {
    let p = profile(family, d, herm)?;
    let points = sample_points(&p, grid);
    if points.is_empty() {
        return domain(format!(
            "no lattice point of d = {d} lies in [{}, {}]",
            grid.x_lo, grid.x_hi
        ));
    }
    let errors = points
        .par_iter()
        .map(|&(x, k)| {
            let exact = (p.exact)(k)?;
            let approx = (p.approx)(x)?;
            let approx = ExactRational::from_float(approx).ok_or_else(|| {
                crate::error::Error::Domain(format!("approximation {approx} at x = {x}"))
            })?;
            let diff = rational_to_f64(&(exact - approx)).abs() * p.out_scale;
            Ok((x, diff))
        })
        .collect::<Result<Vec<_>>>()?;
    let (argmax_x, sup_error) =
        errors
            .iter()
            .copied()
            .fold((errors[0].0, f64::NEG_INFINITY), |best, e| {
                if e.1 > best.1 {
                    e
                } else {
                    best
                }
            });
    Ok(ScanSample {
        d,
        sup_error,
        argmax_x,
        points: errors.len(),
    })
}

/// Sup-norm error of the approximation for each `d` in `d_list` (strictly
/// increasing). Values of `d` are scanned concurrently; samples come back in
/// `d` order.
pub fn error_scan(family: ScanFamily, d_list: &[u32], grid: &GridSpec) -> Result<ErrorScan> {
    if d_list.is_empty() {
        return domain("empty d list");
    }
    if d_list.windows(2).any(|w| w[0] >= w[1]) {
        return domain("d list must be strictly increasing");
    }
    if d_list[0] == 0 {
        return domain("d must be >= 1");
    }
    let degree = match family {
        ScanFamily::Refined { j, .. } => j,
        ScanFamily::BSplineDerivative { r } => r,
        _ => 0,
    };
    let herm = hermite_prob(degree as usize)?;
    let samples = d_list
        .par_iter()
        .map(|&d| scan_one(family, d, grid, &herm))
        .collect::<Result<Vec<_>>>()?;
    Ok(ErrorScan {
        family,
        grid: *grid,
        samples,
    })
}

/// Location of the largest `D(d, n, k)` in standardized units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DescentPeak {
    pub d: u32,
    pub n: u32,
    pub k: u32,
    /// `(k - mu) / sigma`.
    pub x: f64,
    /// Lattice spacing `1 / sigma`.
    pub step: f64,
}

impl DescentPeak {
    /// Distance from `x = -1/n` in lattice steps.
    pub fn steps_from(&self, target: f64) -> f64 {
        (self.x - target).abs() / self.step
    }
}

pub fn descent_profile_peak(d: u32, n: u32) -> Result<DescentPeak> {
    if n == 0 {
        return domain("descent modulus n must be >= 1");
    }
    let table = descent_recurrence_table(d, n)?;
    let mut k = 0;
    for (i, v) in table.values.iter().enumerate() {
        if *v > table.values[k] {
            k = i;
        }
    }
    let s = sigma(d);
    Ok(DescentPeak {
        d,
        n,
        k: k as u32,
        x: (k as f64 - mu(d)) / s,
        step: 1.0 / s,
    })
}
