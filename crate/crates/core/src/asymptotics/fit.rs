use super::scan::{ErrorScan, ScanFamily};
use crate::error::{domain, Result};

/// Least-squares line through `(ln d, ln sup_error)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SlopeFit {
    pub slope: f64,
    pub intercept: f64,
    pub r_squared: f64,
    pub d_min: u32,
    pub d_max: u32,
}

/// Acceptable slopes `lo..=hi` (either end may be open) and minimum `r^2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SlopeBand {
    pub lo: Option<f64>,
    pub hi: Option<f64>,
    pub min_r_squared: Option<f64>,
}

impl SlopeBand {
    /// Band matching the claimed order of each family: `d^{-3/2}` for the
    /// combinatorial families, `1/d` for B-spline derivatives.
    pub fn for_family(family: &ScanFamily) -> Self {
        match family {
            ScanFamily::Eulerian | ScanFamily::Descent { .. } => Self {
                lo: Some(-1.7),
                hi: Some(-1.3),
                min_r_squared: Some(0.98),
            },
            ScanFamily::Refined { .. } => Self {
                lo: None,
                hi: Some(-1.3),
                min_r_squared: Some(0.95),
            },
            ScanFamily::BSplineDerivative { .. } => Self {
                lo: Some(-1.15),
                hi: Some(-0.85),
                min_r_squared: None,
            },
        }
    }

    pub fn contains(&self, fit: &SlopeFit) -> bool {
        self.lo.is_none_or(|lo| fit.slope >= lo)
            && self.hi.is_none_or(|hi| fit.slope <= hi)
            && self.min_r_squared.is_none_or(|r2| fit.r_squared >= r2)
    }
}

pub fn fit_convergence_order(scan: &ErrorScan) -> Result<SlopeFit> {
    let pts: Vec<(u32, f64)> = scan.samples.iter().map(|s| (s.d, s.sup_error)).collect();
    fit_points(&pts)
}

pub(crate) fn fit_points(pts: &[(u32, f64)]) -> Result<SlopeFit> {
    if pts.len() < 3 {
        return domain(format!(
            "a slope fit needs at least 3 samples, got {}",
            pts.len()
        ));
    }
    if let Some(&(d, e)) = pts.iter().find(|p| !(p.1 > 0.0 && p.1.is_finite())) {
        return domain(format!("sup error {e} at d = {d} has no logarithm"));
    }
    let xs: Vec<f64> = pts.iter().map(|p| (p.0 as f64).ln()).collect();
    let ys: Vec<f64> = pts.iter().map(|p| p.1.ln()).collect();
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    if sxx == 0.0 {
        return domain("all samples share one d");
    }
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let ss_res: f64 = xs
        .iter()
        .zip(&ys)
        .map(|(x, y)| (y - intercept - slope * x).powi(2))
        .sum();
    let ss_tot: f64 = ys.iter().map(|y| (y - my).powi(2)).sum();
    let r_squared = if ss_tot == 0.0 {
        1.0
    } else {
        (1.0 - ss_res / ss_tot).clamp(0.0, 1.0)
    };
    Ok(SlopeFit {
        slope,
        intercept,
        r_squared,
        d_min: pts.iter().map(|p| p.0).min().unwrap_or(0),
        d_max: pts.iter().map(|p| p.0).max().unwrap_or(0),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const DS: [u32; 5] = [10, 20, 40, 80, 160];

    #[test]
    fn exact_power_laws() {
        let pts: Vec<_> = DS
            .iter()
            .map(|&d| (d, 7.0 * (d as f64).powf(-1.5)))
            .collect();
        let f = fit_points(&pts).unwrap();
        assert!((f.slope + 1.5).abs() < 1e-12);
        assert!((f.intercept - 7f64.ln()).abs() < 1e-10);
        assert!((f.r_squared - 1.0).abs() < 1e-12);
        assert_eq!((f.d_min, f.d_max), (10, 160));

        let pts: Vec<_> = DS.iter().map(|&d| (d, 2.0 / d as f64)).collect();
        assert!((fit_points(&pts).unwrap().slope + 1.0).abs() < 1e-12);

        let pts: Vec<_> = DS.iter().map(|&d| (d, 0.25)).collect();
        let f = fit_points(&pts).unwrap();
        assert_eq!(f.slope, 0.0);
        assert_eq!(f.r_squared, 1.0);
    }

    #[test]
    fn rejects_degenerate_input() {
        assert!(fit_points(&[(1, 1.0), (2, 0.5)]).is_err());
        assert!(fit_points(&[(1, 1.0), (2, 0.0), (3, 0.1)]).is_err());
        assert!(fit_points(&[(4, 1.0), (4, 0.5), (4, 0.1)]).is_err());
    }

    #[test]
    fn bands() {
        let fit = |slope, r_squared| SlopeFit {
            slope,
            intercept: 0.0,
            r_squared,
            d_min: 1,
            d_max: 2,
        };
        let b = SlopeBand::for_family(&ScanFamily::Eulerian);
        assert!(b.contains(&fit(-1.5, 0.99)));
        assert!(!b.contains(&fit(-1.5, 0.97)));
        assert!(!b.contains(&fit(-1.2, 0.99)));
        let b = SlopeBand::for_family(&ScanFamily::BSplineDerivative { r: 1 });
        assert!(b.contains(&fit(-1.0, 0.1)));
        assert!(!b.contains(&fit(-1.2, 1.0)));
    }
}
