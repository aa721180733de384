use eulerspline_core::asymptotics::{DEFAULT_BSPLINE_D_LIST, DEFAULT_D_LIST};
use eulerspline_core::verify::{run_all, run_suite, Fault, Suite, SuiteOutcome};
use eulerspline_core::{
    descent_recurrence_table, error_scan, eulerian_recurrence_table, fit_convergence_order,
    refined_recurrence_table, GridSpec, Offset, ScanFamily, ScanMode, SlopeBand,
};

use crate::report::{Cell, Kind, ReportDocument};
use crate::{Failure, ModeArg, OffsetArg, ScanFamilyArg, SuiteArg, TableFamily};

fn usage<T>(msg: impl Into<String>) -> Result<T, Failure> {
    Err(Failure::Usage(msg.into()))
}

pub fn table(family: TableFamily, d: u32, n: Option<u32>) -> Result<ReportDocument, Failure> {
    if n.is_some() && family != TableFamily::Descent {
        return usage("--n applies only to descent tables");
    }
    let doc = match family {
        TableFamily::Eulerian => {
            let t = eulerian_recurrence_table(d);
            let mut doc = ReportDocument::new(Kind::Table, "table", vec!["d", "k", "value"]);
            doc.param("family", Cell::text("eulerian"));
            doc.param("d", Cell::int(d));
            // A(d, 0) = 0 for d > 0 carries no permutations
            let first = if d == 0 { 0 } else { 1 };
            for k in first..=d {
                doc.push(vec![Cell::int(d), Cell::int(k), Cell::int(t.get(k as i64))]);
            }
            doc
        }
        TableFamily::Refined => {
            if d == 0 {
                return usage("refined tables need --d >= 1");
            }
            let t = refined_recurrence_table(d)?;
            let mut doc = ReportDocument::new(Kind::Table, "table", vec!["d", "k", "j", "value"]);
            doc.param("family", Cell::text("refined"));
            doc.param("d", Cell::int(d));
            for k in 0..d {
                for j in 1..=d {
                    doc.push(vec![
                        Cell::int(d),
                        Cell::int(k),
                        Cell::int(j),
                        Cell::int(t.get(k as i64, j as i64)),
                    ]);
                }
            }
            doc
        }
        TableFamily::Descent => {
            let Some(n) = n else {
                return usage("descent tables need --n");
            };
            let t = descent_recurrence_table(d, n)?;
            let mut doc = ReportDocument::new(Kind::Table, "table", vec!["d", "n", "k", "value"]);
            doc.param("family", Cell::text("descent"));
            doc.param("d", Cell::int(d));
            doc.param("n", Cell::int(n));
            for k in 0..=d {
                doc.push(vec![
                    Cell::int(d),
                    Cell::int(n),
                    Cell::int(k),
                    Cell::int(t.get(k as i64)),
                ]);
            }
            doc
        }
    };
    Ok(doc)
}

fn suite_row(o: &SuiteOutcome) -> Vec<Cell> {
    let f = o.failure.as_ref();
    let idx = f.map(|f| f.index).unwrap_or_default();
    vec![
        Cell::text(o.suite.name()),
        Cell::opt_int(o.d_max),
        Cell::int(o.checks),
        Cell::text(if o.passed() { "pass" } else { "fail" }),
        f.map_or(Cell::Empty, |f| Cell::text(f.check.clone())),
        Cell::opt_int(idx.d),
        Cell::opt_int(idx.n),
        Cell::opt_int(idx.k),
        Cell::opt_int(idx.j),
        f.map_or(Cell::Empty, |f| Cell::text(f.expected.clone())),
        f.map_or(Cell::Empty, |f| Cell::text(f.actual.clone())),
    ]
}

pub fn verify(
    suite: SuiteArg,
    d_max: Option<u32>,
    inject_fault: bool,
) -> Result<(ReportDocument, bool), Failure> {
    let fault = if inject_fault {
        Fault::EulerianRecurrence
    } else {
        Fault::None
    };
    let single = match suite {
        SuiteArg::Bridges => Some(Suite::Bridges),
        SuiteArg::Oracle => Some(Suite::Oracle),
        SuiteArg::Recurrences => Some(Suite::Recurrences),
        SuiteArg::Hermite => Some(Suite::Hermite),
        SuiteArg::Sincbound => Some(Suite::SincBound),
        SuiteArg::All => None,
    };
    let outcomes = match single {
        Some(s) => vec![run_suite(s, d_max, fault)?],
        None => run_all(d_max, fault)?,
    };
    let mut doc = ReportDocument::new(
        Kind::Verification,
        "verify",
        vec![
            "suite", "d_max", "checks", "status", "check", "d", "n", "k", "j", "expected", "actual",
        ],
    );
    doc.param("suite", Cell::text(single.map_or("all", Suite::name)));
    doc.param("d_max", Cell::opt_int(d_max));
    for o in &outcomes {
        doc.push(suite_row(o));
        if let Some(f) = &o.failure {
            let i = f.index;
            eprintln!(
                "{} failed: {} at d={} n={} k={} j={}: expected {}, got {}",
                o.suite,
                f.check,
                opt(i.d),
                opt(i.n),
                opt(i.k),
                opt(i.j),
                f.expected,
                f.actual
            );
        }
    }
    Ok((doc, outcomes.iter().all(SuiteOutcome::passed)))
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(|| "-".into(), |v| v.to_string())
}

pub struct ScanParams {
    pub family: ScanFamilyArg,
    pub d_list: Option<Vec<u32>>,
    pub n: Option<u32>,
    pub j: Option<u32>,
    pub deriv: u32,
    pub window: f64,
    pub mode: ModeArg,
    pub offset: OffsetArg,
}

fn scan_family(p: &ScanParams) -> Result<ScanFamily, Failure> {
    let offset = match p.offset {
        OffsetArg::Literal => Offset::Literal,
        OffsetArg::Rescaled => Offset::Rescaled,
    };
    if p.n.is_some() && p.family != ScanFamilyArg::Descent {
        return usage("--n applies only to the descent family");
    }
    if p.j.is_some() && p.family != ScanFamilyArg::Refined {
        return usage("--j applies only to the refined family");
    }
    if p.deriv != 0 && p.family != ScanFamilyArg::Bspline {
        return usage("--deriv applies only to the bspline family");
    }
    if p.offset != OffsetArg::Literal
        && !matches!(p.family, ScanFamilyArg::Descent | ScanFamilyArg::Refined)
    {
        return usage("--offset applies only to the descent and refined families");
    }
    Ok(match p.family {
        ScanFamilyArg::Eulerian => ScanFamily::Eulerian,
        ScanFamilyArg::Descent => match p.n {
            Some(n) => ScanFamily::Descent { n, offset },
            None => return usage("the descent family needs --n"),
        },
        ScanFamilyArg::Refined => match p.j {
            Some(j) => ScanFamily::Refined { j, offset },
            None => return usage("the refined family needs --j"),
        },
        ScanFamilyArg::Bspline => ScanFamily::BSplineDerivative { r: p.deriv },
    })
}

pub fn scan(p: &ScanParams) -> Result<(ReportDocument, bool), Failure> {
    let family = scan_family(p)?;
    let d_list = p.d_list.clone().unwrap_or_else(|| match family {
        ScanFamily::BSplineDerivative { .. } => DEFAULT_BSPLINE_D_LIST.to_vec(),
        _ => DEFAULT_D_LIST.to_vec(),
    });
    if !(p.window > 0.0 && p.window.is_finite()) {
        return usage(format!("--window must be positive, got {}", p.window));
    }
    let mode = match p.mode {
        ModeArg::Lattice => ScanMode::Lattice,
        ModeArg::Floor => ScanMode::Floor,
    };
    let grid = GridSpec::window(p.window, mode)?;
    let scan = error_scan(family, &d_list, &grid)?;

    let mut doc = ReportDocument::new(Kind::Scan, "scan", vec!["d", "sup_error"]);
    doc.param("family", Cell::text(family.name()));
    match family {
        ScanFamily::Descent { n, offset } => {
            doc.param("n", Cell::int(n));
            doc.param("offset", Cell::text(offset_name(offset)));
        }
        ScanFamily::Refined { j, offset } => {
            doc.param("j", Cell::int(j));
            doc.param("offset", Cell::text(offset_name(offset)));
        }
        ScanFamily::BSplineDerivative { r } => doc.param("deriv", Cell::int(r)),
        ScanFamily::Eulerian => {}
    }
    doc.param("d_list", Cell::text(join(&d_list)));
    doc.param("window", Cell::Float(p.window));
    doc.param(
        "mode",
        Cell::text(match mode {
            ScanMode::Lattice => "lattice",
            ScanMode::Floor => "floor",
        }),
    );
    for s in &scan.samples {
        doc.push(vec![Cell::int(s.d), Cell::Float(s.sup_error)]);
    }

    for (k, v) in doc.parameters.clone() {
        doc.summarize(&k, v);
    }
    let band = SlopeBand::for_family(&family);
    let in_band = match fit_convergence_order(&scan) {
        Ok(fit) => {
            doc.summarize("slope", Cell::Float(fit.slope));
            doc.summarize("intercept", Cell::Float(fit.intercept));
            doc.summarize("r_squared", Cell::Float(fit.r_squared));
            doc.summarize("band_lo", band.lo.map_or(Cell::Empty, Cell::Float));
            doc.summarize("band_hi", band.hi.map_or(Cell::Empty, Cell::Float));
            doc.summarize(
                "min_r_squared",
                band.min_r_squared.map_or(Cell::Empty, Cell::Float),
            );
            let ok = band.contains(&fit);
            let status = if mode == ScanMode::Floor {
                "informational"
            } else if ok {
                "pass"
            } else {
                "fail"
            };
            doc.summarize("status", Cell::text(status));
            ok || mode == ScanMode::Floor
        }
        Err(e) => {
            doc.summarize("status", Cell::text(format!("no-fit ({e})")));
            false
        }
    };
    Ok((doc, in_band))
}

fn offset_name(o: Offset) -> &'static str {
    match o {
        Offset::Literal => "literal",
        Offset::Rescaled => "rescaled",
    }
}

fn join(ds: &[u32]) -> String {
    ds.iter().map(u32::to_string).collect::<Vec<_>>().join(" ")
}
