//! Named invariant suites. Each reports how many checks ran and the first
//! failing row, if any.

use std::fmt::{self, Display};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::asymptotics::sinc_bound_check;
use crate::bspline::{
    bridge_descent, bridge_eulerian, bridge_refined_coeff, refined_via_derivative_sum,
};
use crate::combinat::{
    descent_explicit, descent_recurrence_table, eulerian_explicit, eulerian_recurrence_table,
    expected_descent_total, refined_explicit, refined_recurrence_table, EulerianTable,
};
use crate::error::{domain, Error, Result};
use crate::hermite::{
    check_structure, gaussian_derivative_fd_check, hermite_phys, hermite_prob, rescaled_prob,
};
use crate::numeric::{factorial, rat, ExactInteger};
use crate::oracle::{audit_remark_relation, enumerate_descents, ORACLE_MAX_D};

/// Moduli used wherever descent numbers are checked.
pub const DESCENT_MODULI: [u32; 4] = [1, 2, 3, 5];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Bridges,
    Oracle,
    Recurrences,
    Hermite,
    SincBound,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::Bridges,
        Suite::Oracle,
        Suite::Recurrences,
        Suite::Hermite,
        Suite::SincBound,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Bridges => "bridges",
            Suite::Oracle => "oracle",
            Suite::Recurrences => "recurrences",
            Suite::Hermite => "hermite",
            Suite::SincBound => "sincbound",
        }
    }

    /// Largest accepted `d_max`; `None` where `d_max` does not apply.
    pub fn cap(self) -> Option<u32> {
        match self {
            Suite::Bridges | Suite::Recurrences => Some(25),
            Suite::Oracle => Some(ORACLE_MAX_D),
            Suite::Hermite | Suite::SincBound => None,
        }
    }

    pub fn default_d_max(self) -> Option<u32> {
        match self {
            Suite::Oracle => Some(8),
            other => other.cap(),
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Domain(format!("unknown suite {s:?}")))
    }
}

impl Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Coordinates of a checked entry; unused ones are `None`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Index {
    pub d: Option<u32>,
    pub n: Option<u32>,
    pub k: Option<i64>,
    pub j: Option<i64>,
}

impl Index {
    fn d(d: u32) -> Self {
        Self {
            d: Some(d),
            ..Self::default()
        }
    }

    fn dk(d: u32, k: impl Into<i64>) -> Self {
        Self {
            k: Some(k.into()),
            ..Self::d(d)
        }
    }

    fn dkj(d: u32, k: impl Into<i64>, j: impl Into<i64>) -> Self {
        Self {
            j: Some(j.into()),
            ..Self::dk(d, k)
        }
    }

    fn dnk(d: u32, n: u32, k: impl Into<i64>) -> Self {
        Self {
            n: Some(n),
            ..Self::dk(d, k)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FailureRow {
    pub check: String,
    pub index: Index,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteOutcome {
    pub suite: Suite,
    pub d_max: Option<u32>,
    pub checks: u64,
    pub failure: Option<FailureRow>,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Test hook that corrupts one exact table before the comparisons run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Fault {
    #[default]
    None,
    /// Adds one to `A(d, 1)` in the recurrence row of every `d >= 2`.
    EulerianRecurrence,
}

struct Stop;

type Step = std::result::Result<(), Stop>;

struct Checker {
    checks: u64,
    failure: Option<FailureRow>,
    fault: Fault,
}

impl Checker {
    fn fail(&mut self, check: &str, index: Index, expected: String, actual: String) -> Step {
        self.failure = Some(FailureRow {
            check: check.to_string(),
            index,
            expected,
            actual,
        });
        Err(Stop)
    }

    /// Compares `actual` with `expected`; an error from the route under test
    /// counts as a failure with the error text as its value.
    fn equal<T: PartialEq + Display>(
        &mut self,
        check: &str,
        index: Index,
        expected: &T,
        actual: Result<T>,
    ) -> Step {
        self.checks += 1;
        match actual {
            Ok(v) if v == *expected => Ok(()),
            Ok(v) => self.fail(check, index, expected.to_string(), v.to_string()),
            Err(e) => self.fail(check, index, expected.to_string(), e.to_string()),
        }
    }

    fn holds(
        &mut self,
        check: &str,
        index: Index,
        ok: bool,
        expected: String,
        actual: String,
    ) -> Step {
        self.checks += 1;
        if ok {
            Ok(())
        } else {
            self.fail(check, index, expected, actual)
        }
    }

    /// Unwraps a value every later check depends on.
    fn need<T>(
        &mut self,
        check: &str,
        index: Index,
        value: Result<T>,
    ) -> std::result::Result<T, Stop> {
        match value {
            Ok(v) => Ok(v),
            Err(e) => {
                self.checks += 1;
                self.fail(check, index, "ok".into(), e.to_string())?;
                unreachable!()
            }
        }
    }

    fn eulerian_row(&self, d: u32) -> EulerianTable {
        let mut t = eulerian_recurrence_table(d);
        if self.fault == Fault::EulerianRecurrence && d >= 2 {
            t.values[1] += BigInt::one();
        }
        t
    }
}

fn bridges(c: &mut Checker, d_max: u32) -> Step {
    for d in 0..=d_max {
        let eul = c.eulerian_row(d);
        let hist = eul.descent_histogram();
        c.equal(
            "eulerian row sum",
            Index::d(d),
            &factorial(d as u64),
            Ok(eul.sum()),
        )?;
        for k in 0..=d {
            let v = eul.get(k as i64);
            c.equal(
                "eulerian explicit = recurrence",
                Index::dk(d, k),
                &v,
                eulerian_explicit(d, k),
            )?;
            c.equal(
                "eulerian bridge d! B_{d+1}(k)",
                Index::dk(d, k),
                &v,
                bridge_eulerian(d, k),
            )?;
            if k >= 1 {
                c.equal(
                    "eulerian symmetry",
                    Index::dk(d, k),
                    &v,
                    Ok(eul.get((d + 1 - k) as i64)),
                )?;
            }
        }
        for n in DESCENT_MODULI {
            let table = c.need(
                "descent table",
                Index::dnk(d, n, 0),
                descent_recurrence_table(d, n),
            )?;
            c.equal(
                "descent row sum",
                Index::dnk(d, n, 0),
                &expected_descent_total(d, n),
                Ok(table.sum()),
            )?;
            for k in 0..=d {
                let v = table.get(k as i64);
                let idx = Index::dnk(d, n, k);
                c.equal(
                    "descent explicit = recurrence",
                    idx,
                    &v,
                    descent_explicit(d, n, k),
                )?;
                c.equal(
                    "descent bridge d! n^d B_{d+1}(k + 1/n)",
                    idx,
                    &v,
                    bridge_descent(d, n, k),
                )?;
                if n == 1 {
                    // descent counts, so d = 0 gives the empty permutation
                    c.equal(
                        "descent n = 1 reduction",
                        idx,
                        &v,
                        Ok(hist.get(k as usize).cloned().unwrap_or_default()),
                    )?;
                }
            }
        }
        if d == 0 {
            continue;
        }
        let refined = c.need("refined table", Index::d(d), refined_recurrence_table(d))?;
        c.equal(
            "refined total",
            Index::d(d),
            &factorial(d as u64),
            Ok(refined.sum()),
        )?;
        for k in 0..d {
            // bridges of order d - 1 read A(d, k, j) at j = d - i
            let coeffs = c.need(
                "lambda expansion",
                Index::dk(d, k),
                bridge_refined_coeff(d - 1, k),
            )?;
            for j in 1..=d {
                let v = refined.get(k as i64, j as i64);
                let idx = Index::dkj(d, k, j);
                c.equal(
                    "refined explicit = recurrence",
                    idx,
                    &v,
                    refined_explicit(d, k, j),
                )?;
                c.equal(
                    "refined lambda bridge",
                    idx,
                    &v,
                    Ok(coeffs[(d - j) as usize].clone()),
                )?;
                c.equal(
                    "refined derivative sum",
                    idx,
                    &v,
                    refined_via_derivative_sum(d - 1, k, d - j),
                )?;
            }
            c.equal(
                "refined aggregation sum_j A(d,k,j) = A(d,k+1)",
                Index::dk(d, k),
                &eul.get(k as i64 + 1),
                Ok(refined.row_sum(k as usize)),
            )?;
        }
    }
    Ok(())
}

fn recurrences(c: &mut Checker, d_max: u32) -> Step {
    for d in 0..=d_max {
        let eul = c.eulerian_row(d);
        for k in 0..=d {
            c.equal(
                "eulerian recurrence = explicit",
                Index::dk(d, k),
                &eul.get(k as i64),
                eulerian_explicit(d, k),
            )?;
        }
        for n in DESCENT_MODULI {
            let table = c.need(
                "descent table",
                Index::dnk(d, n, 0),
                descent_recurrence_table(d, n),
            )?;
            for k in 0..=d {
                c.equal(
                    "descent recurrence = explicit",
                    Index::dnk(d, n, k),
                    &table.get(k as i64),
                    descent_explicit(d, n, k),
                )?;
            }
        }
        if d >= 1 {
            // both refined recurrences are compared inside the table build
            let refined = c.need(
                "both refined recurrences",
                Index::d(d),
                refined_recurrence_table(d),
            )?;
            for k in 0..d {
                for j in 1..=d {
                    c.equal(
                        "refined recurrence = explicit",
                        Index::dkj(d, k, j),
                        &refined.get(k as i64, j as i64),
                        refined_explicit(d, k, j),
                    )?;
                }
            }
        }
    }
    Ok(())
}

fn oracle(c: &mut Checker, d_max: u32) -> Step {
    for d in 1..=d_max {
        let hist = c.need("enumeration", Index::d(d), enumerate_descents(d))?;
        let eul = c.eulerian_row(d);
        let refined = c.need("refined table", Index::d(d), refined_recurrence_table(d))?;
        for k in 0..=d {
            let v = ExactInteger::from(hist.eulerian(k));
            let idx = Index::dk(d, k);
            c.equal(
                "enumeration = eulerian recurrence",
                idx,
                &v,
                Ok(eul.get(k as i64)),
            )?;
            c.equal(
                "enumeration = eulerian explicit",
                idx,
                &v,
                eulerian_explicit(d, k),
            )?;
            c.equal(
                "enumeration = eulerian bridge",
                idx,
                &v,
                bridge_eulerian(d, k),
            )?;
        }
        for k in 0..d {
            let coeffs = c.need(
                "lambda expansion",
                Index::dk(d, k),
                bridge_refined_coeff(d - 1, k),
            )?;
            for j in 1..=d {
                let v = ExactInteger::from(hist.refined(k, j));
                let idx = Index::dkj(d, k, j);
                c.equal(
                    "enumeration = refined recurrence",
                    idx,
                    &v,
                    Ok(refined.get(k as i64, j as i64)),
                )?;
                c.equal(
                    "enumeration = refined explicit",
                    idx,
                    &v,
                    refined_explicit(d, k, j),
                )?;
                c.equal(
                    "enumeration = refined lambda bridge",
                    idx,
                    &v,
                    Ok(coeffs[(d - j) as usize].clone()),
                )?;
                c.equal(
                    "enumeration = refined derivative sum",
                    idx,
                    &v,
                    refined_via_derivative_sum(d - 1, k, d - j),
                )?;
            }
        }
    }
    let audit_max = d_max.min(ORACLE_MAX_D - 1);
    if audit_max >= 1 {
        let audit = c.need(
            "remark audit",
            Index::d(audit_max),
            audit_remark_relation(audit_max),
        )?;
        for row in &audit.rows {
            c.equal(
                "A(d+1,k,d+1) = A(d,k+1)",
                Index::dkj(row.d + 1, row.k, row.d + 1),
                &row.shifted,
                Ok(row.refined),
            )?;
        }
    }
    Ok(())
}

/// Degree of the Hermite route comparison.
pub const HERMITE_DEGREE: usize = 12;
/// Highest derivative in the finite-difference check.
pub const FD_MAX_ORDER: usize = 6;
pub const FD_TOLERANCE: f64 = 1e-5;

fn hermite(c: &mut Checker) -> Step {
    let seq = c.need(
        "recurrence = Rodrigues",
        Index::d(HERMITE_DEGREE as u32),
        hermite_prob(HERMITE_DEGREE),
    )?;
    c.checks += HERMITE_DEGREE as u64;
    let structure = check_structure(&seq).map(|_| "ok".to_string());
    c.equal(
        "monic, degree, parity",
        Index::d(HERMITE_DEGREE as u32),
        &"ok".to_string(),
        structure,
    )?;
    for (i, he) in seq.polys().iter().enumerate() {
        c.equal(
            "physicists' sum = rescaled He_n",
            Index::d(i as u32),
            &hermite_phys(i),
            Ok(rescaled_prob(he, i)),
        )?;
    }
    let grid: Vec<_> = (-12..=12).map(|m| rat(m, 4)).collect();
    let report = c.need(
        "finite differences",
        Index::d(FD_MAX_ORDER as u32),
        gaussian_derivative_fd_check(&seq, FD_MAX_ORDER, &grid, &rat(1, 1000)),
    )?;
    for r in report {
        c.holds(
            "finite-difference Gaussian derivative",
            Index::d(r.order as u32),
            r.relative_error <= FD_TOLERANCE,
            format!("relative error <= {FD_TOLERANCE:e}"),
            format!("{:e} at x = {}", r.relative_error, r.x),
        )?;
    }
    Ok(())
}

pub const SINC_MAX_D: u32 = 200;

pub fn sinc_grid() -> Vec<f64> {
    (-500..=500).map(|i| i as f64 / 10.0).collect()
}

fn sincbound(c: &mut Checker) -> Step {
    let xs = sinc_grid();
    for k in 0..=2u32 {
        let ds: Vec<u32> = (k + 2..=SINC_MAX_D).collect();
        let report = c.need(
            "sinc envelope",
            Index::dk(k + 2, k),
            sinc_bound_check(k, &ds, &xs),
        )?;
        c.checks += report.samples_checked as u64 - 1;
        if let Some(v) = report.violations.first() {
            c.checks += 1;
            return c.fail(
                "sinc envelope",
                Index::dk(v.d, k),
                format!("<= {:e} at x = {}", v.bound, v.x),
                format!("{:e}", v.lhs),
            );
        }
        c.checks += 1;
    }
    Ok(())
}

/// Runs one suite. `d_max = None` takes the suite default; a value above the
/// suite cap is a domain error.
pub fn run_suite(suite: Suite, d_max: Option<u32>, fault: Fault) -> Result<SuiteOutcome> {
    let d_max = match (suite.cap(), d_max) {
        (None, _) => None,
        (Some(cap), Some(d)) if d > cap => {
            return domain(format!("{suite} accepts d_max <= {cap}, got {d}"));
        }
        (Some(_), Some(d)) => Some(d),
        (Some(_), None) => suite.default_d_max(),
    };
    let mut c = Checker {
        checks: 0,
        failure: None,
        fault,
    };
    let _ = match suite {
        Suite::Bridges => bridges(&mut c, d_max.unwrap_or(0)),
        Suite::Oracle => oracle(&mut c, d_max.unwrap_or(0)),
        Suite::Recurrences => recurrences(&mut c, d_max.unwrap_or(0)),
        Suite::Hermite => hermite(&mut c),
        Suite::SincBound => sincbound(&mut c),
    };
    Ok(SuiteOutcome {
        suite,
        d_max,
        checks: c.checks,
        failure: c.failure,
    })
}

/// Every suite, with `d_max` clamped to each suite's cap.
pub fn run_all(d_max: Option<u32>, fault: Fault) -> Result<Vec<SuiteOutcome>> {
    Suite::ALL
        .into_iter()
        .map(|s| run_suite(s, d_max.map(|d| s.cap().map_or(d, |cap| d.min(cap))), fault))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_pass_at_small_size() {
        for suite in [Suite::Bridges, Suite::Recurrences, Suite::Oracle] {
            let out = run_suite(suite, Some(6), Fault::None).unwrap();
            assert!(out.passed(), "{suite}: {:?}", out.failure);
            assert!(out.checks > 0);
        }
        let out = run_suite(Suite::Hermite, None, Fault::None).unwrap();
        assert!(out.passed(), "{:?}", out.failure);
    }

    #[test]
    fn caps_and_names() {
        assert!(run_suite(Suite::Oracle, Some(10), Fault::None).is_err());
        assert!(run_suite(Suite::Bridges, Some(26), Fault::None).is_err());
        assert_eq!("sincbound".parse::<Suite>().unwrap(), Suite::SincBound);
        assert!("everything".parse::<Suite>().is_err());
    }

    #[test]
    fn injected_fault_is_reported() {
        let out = run_suite(Suite::Bridges, Some(5), Fault::EulerianRecurrence).unwrap();
        let f = out.failure.unwrap();
        assert_eq!(f.index, Index::d(2));
        assert_eq!(f.check, "eulerian row sum");
        assert_eq!((f.expected.as_str(), f.actual.as_str()), ("2", "3"));
        let out = run_suite(Suite::Recurrences, Some(5), Fault::EulerianRecurrence).unwrap();
        assert_eq!(out.failure.unwrap().index, Index::dk(2, 1));
    }
}
