use phi_stieltjes::analysis::{
    check_cm, check_cm_via_representation, check_lcm, default_y_sequence, pick_sample,
    remark_corpus, stieltjes_invert, MonotonicityReport, PickRegion, PickReport, Verdict,
    MAX_FD_ORDER,
};
use phi_stieltjes::densities::{h_density, phi_density};
use phi_stieltjes::phi::{
    log_gamma_identity_check, phi_complex, phi_direct, phi_series, phi_stieltjes, stieltjes_phi,
};
use phi_stieltjes::specfun::CutPlanePoint;
use serde::Serialize;

use crate::table::{versioned, Cell, Table};
use crate::{EvalMethod, Failure, GridArgs, Outcome, Output, Suite, Which};

/// Grids larger than this are rejected.
const MAX_POINTS: usize = 1_000_000;
/// Grid of the monotonicity suites.
const CM_GRID: [f64; 6] = [0.25, 0.5, 1.0, 2.0, 5.0, 10.0];
/// Relative accuracy of `phi_direct`, for the finite-difference noise floors.
const PHI_PRECISION: f64 = 4.0 * f64::EPSILON;
/// Pass threshold of the identity suite.
const IDENTITY_TOLERANCE: f64 = 1e-10;
const IDENTITY_POINTS: usize = 81;

fn config(msg: impl Into<String>) -> Failure {
    Failure::Config(msg.into())
}

/// from, from + step, …, up to `to`; values within rounding of an integer are
/// snapped to it.
fn arithmetic(from: f64, to: f64, step: f64) -> Result<Vec<f64>, Failure> {
    if !from.is_finite() || !to.is_finite() || to < from {
        return Err(config(format!("invalid range [{from}, {to}]")));
    }
    if from == to {
        return Ok(vec![from]);
    }
    if !(step > 0.0) || !step.is_finite() {
        return Err(config(format!("step must be positive, got {step}")));
    }
    let n = ((to - from) / step + 1e-9).floor();
    if n >= MAX_POINTS as f64 {
        return Err(config(format!("range has more than {MAX_POINTS} points")));
    }
    Ok((0..=n as usize)
        .map(|i| {
            let p = from + i as f64 * step;
            let r = p.round();
            if (p - r).abs() <= 1e-12 * r.abs().max(1.0) {
                r
            } else {
                p
            }
        })
        .collect())
}

fn sorted(mut points: Vec<f64>) -> Vec<f64> {
    points.sort_by(f64::total_cmp);
    points.dedup();
    points
}

fn grid_points(grid: &GridArgs) -> Result<Vec<f64>, Failure> {
    let range = (grid.from, grid.to);
    let points = match (grid.x.is_empty(), range) {
        (false, (None, None)) => grid.x.clone(),
        (true, (Some(a), Some(b))) => arithmetic(a, b, grid.step.unwrap_or(f64::NAN))?,
        (true, (None, None)) => return Err(config("no grid: give --x or --from/--to/--step")),
        _ => {
            return Err(config(
                "give either --x or a complete --from/--to range, not both",
            ))
        }
    };
    if let Some(bad) = points.iter().find(|v| v.is_nan()) {
        return Err(config(format!("invalid grid point {bad}")));
    }
    Ok(sorted(points))
}

pub fn eval(grid: &GridArgs, method: EvalMethod, tol: f64) -> Result<Outcome, Failure> {
    let xs = grid_points(grid)?;
    let mut budget_met = true;
    let mut table = match method {
        EvalMethod::Stieltjes => Table::new("eval", vec!["x", "phi", "log_phi", "error_bound"]),
        EvalMethod::All => Table::new(
            "eval",
            vec![
                "x",
                "phi_direct",
                "log_phi_direct",
                "phi_series",
                "log_phi_series",
                "phi_stieltjes",
                "log_phi_stieltjes",
                "error_bound",
                "residual_series",
                "residual_stieltjes",
            ],
        ),
        _ => Table::new("eval", vec!["x", "phi", "log_phi"]),
    };
    for &x in &xs {
        let row: Vec<Cell> = match method {
            EvalMethod::Direct => {
                let v = phi_direct(x)?;
                vec![x.into(), v.phi.into(), v.log_phi.into()]
            }
            EvalMethod::Series => {
                let v = phi_series(x)?;
                vec![x.into(), v.phi.into(), v.log_phi.into()]
            }
            EvalMethod::Stieltjes => {
                let (v, q) = phi_stieltjes(x, tol)?;
                budget_met &= q.budget_met;
                vec![
                    x.into(),
                    v.phi.into(),
                    v.log_phi.into(),
                    q.total_error().into(),
                ]
            }
            EvalMethod::All => {
                let d = phi_direct(x)?;
                let s = phi_series(x)?;
                let (q, est) = phi_stieltjes(x, tol)?;
                budget_met &= est.budget_met;
                vec![
                    x.into(),
                    d.phi.into(),
                    d.log_phi.into(),
                    s.phi.into(),
                    s.log_phi.into(),
                    q.phi.into(),
                    q.log_phi.into(),
                    est.total_error().into(),
                    (s.log_phi - d.log_phi).abs().into(),
                    (q.phi - d.phi).abs().into(),
                ]
            }
        };
        table.push(row);
    }
    Ok(Outcome {
        output: Output::Table(table),
        passed: true,
        budget_met,
    })
}

pub fn density(which: Which, from: f64, to: f64, step: f64) -> Result<Outcome, Failure> {
    if from < 0.0 {
        return Err(config(format!(
            "density range must lie in [0, inf), got from = {from}"
        )));
    }
    let mut points = arithmetic(from, to, step)?;
    let mut n = from.ceil();
    while n <= to {
        points.push(n);
        n += 1.0;
    }
    let points = sorted(points);
    let mut table = match which {
        Which::Phi => Table::new("density", vec!["s", "value"]),
        Which::H => Table::new("density", vec!["s", "value", "log_value"]),
    };
    for s in points {
        let row = match which {
            Which::Phi => vec![s.into(), phi_density(s)?.into()],
            Which::H => {
                let p = h_density(s)?;
                vec![s.into(), p.value.into(), p.log_value.into()]
            }
        };
        table.push(row);
    }
    Ok(Outcome {
        output: Output::Table(table),
        passed: true,
        budget_met: true,
    })
}

/// One line of a verification report.
#[derive(Serialize)]
struct Check {
    name: String,
    verdict: Verdict,
    pass: usize,
    fail: usize,
    inconclusive: usize,
    /// Suite-specific figure: max residual, max Im f, or first failing order.
    metric: Option<f64>,
}

impl Check {
    fn from_monotone(name: &str, r: &MonotonicityReport) -> Self {
        let fail = r.count(Verdict::Fail);
        Check {
            name: name.into(),
            verdict: if fail == 0 {
                Verdict::Pass
            } else {
                Verdict::Fail
            },
            pass: r.count(Verdict::Pass),
            fail,
            inconclusive: r.count(Verdict::Inconclusive),
            metric: r.first_failing_order().map(f64::from),
        }
    }

    fn from_pick(name: &str, r: &PickReport) -> Self {
        let fail = r.violations.len() + r.axis_violations.len();
        Check {
            name: name.into(),
            verdict: if fail == 0 {
                Verdict::Pass
            } else {
                Verdict::Fail
            },
            pass: r.count + 64 - fail,
            fail,
            inconclusive: 0,
            metric: Some(r.max_im),
        }
    }
}

#[derive(Serialize)]
struct VerifyReport {
    suite: Suite,
    seed: u64,
    count: usize,
    passed: bool,
    checks: Vec<Check>,
}

impl Serialize for Suite {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let name = match self {
            Suite::Cm => "cm",
            Suite::Lcm => "lcm",
            Suite::Pick => "pick",
            Suite::Identity => "identity",
            Suite::Corpus => "corpus",
            Suite::All => "all",
        };
        s.serialize_str(name)
    }
}

fn phi_real(x: f64) -> f64 {
    phi_direct(x).map_or(f64::NAN, |v| v.phi)
}

pub fn verify(
    suite: Suite,
    xmax: f64,
    count: usize,
    seed: u64,
    order: Option<u32>,
) -> Result<Outcome, Failure> {
    if let Some(k) = order {
        if k > MAX_FD_ORDER {
            return Err(config(format!(
                "--order {k} exceeds the finite-difference cap {MAX_FD_ORDER}"
            )));
        }
    }
    if !(xmax >= 0.0) || !xmax.is_finite() {
        return Err(config(format!(
            "--xmax must be finite and >= 0, got {xmax}"
        )));
    }
    let runs = |s: Suite| suite == s || suite == Suite::All;
    let region = PickRegion::default();
    let mut checks = Vec::new();

    if runs(Suite::Identity) {
        let mut worst: f64 = 0.0;
        for i in 0..IDENTITY_POINTS {
            let x = xmax * i as f64 / (IDENTITY_POINTS - 1) as f64;
            worst = worst.max(log_gamma_identity_check(x)?.residual.abs());
        }
        let ok = worst <= IDENTITY_TOLERANCE;
        checks.push(Check {
            name: "identity".into(),
            verdict: if ok { Verdict::Pass } else { Verdict::Fail },
            pass: if ok { IDENTITY_POINTS } else { 0 },
            fail: if ok { 0 } else { IDENTITY_POINTS },
            inconclusive: 0,
            metric: Some(worst),
        });
    }
    if runs(Suite::Cm) {
        let k = order.unwrap_or(6);
        let fd = check_cm(&phi_real, &CM_GRID, k, PHI_PRECISION)?;
        checks.push(Check::from_monotone("cm-finite-difference", &fd));
        let rep = check_cm_via_representation(&stieltjes_phi(), &CM_GRID, k)?;
        checks.push(Check::from_monotone("cm-representation", &rep));
    }
    if runs(Suite::Lcm) {
        let k = order.unwrap_or(5);
        let r = check_lcm(&phi_real, &CM_GRID, k, PHI_PRECISION)?;
        checks.push(Check::from_monotone("lcm", &r));
    }
    if runs(Suite::Pick) {
        let r = pick_sample(&|z: CutPlanePoint| phi_complex(z).phi, count, region, seed);
        checks.push(Check::from_pick("pick-phi", &r));
        let r = pick_sample(
            &|z: CutPlanePoint| phi_complex(z).log_phi,
            count,
            region,
            seed,
        );
        checks.push(Check::from_pick("pick-log-phi", &r));
    }
    if runs(Suite::Corpus) {
        for m in remark_corpus() {
            let r = pick_sample(&|z| m.value(z), count, region, seed);
            checks.push(Check::from_pick(&format!("corpus-{}", m.name), &r));
        }
    }

    let passed = checks.iter().all(|c| c.verdict != Verdict::Fail);
    let mut csv = Table::new(
        "verify",
        vec!["check", "verdict", "pass", "fail", "inconclusive", "metric"],
    );
    for c in &checks {
        let verdict = match c.verdict {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Inconclusive => "inconclusive",
        };
        csv.push(vec![
            c.name.as_str().into(),
            verdict.into(),
            c.pass.into(),
            c.fail.into(),
            c.inconclusive.into(),
            c.metric.map_or(Cell::Text(String::new()), Cell::Num),
        ]);
    }
    let report = VerifyReport {
        suite,
        seed,
        count,
        passed,
        checks,
    };
    let json = versioned("verify", &report);
    Ok(Outcome {
        output: Output::Report { json, csv },
        passed,
        budget_met: true,
    })
}

pub fn invert(grid: &GridArgs, y: &[f64], strict: bool) -> Result<Outcome, Failure> {
    let xs = grid_points(grid)?;
    let ys = if y.is_empty() {
        default_y_sequence()
    } else {
        y.to_vec()
    };
    let mut table = Table::new(
        "invert",
        vec![
            "x",
            "extrapolated",
            "closed_form_h",
            "abs_diff",
            "error_estimate",
            "unstable",
        ],
    );
    let mut stable = true;
    let f = |z: CutPlanePoint| phi_complex(z).phi;
    for &x in &xs {
        let r = stieltjes_invert(&f, x, &ys)?;
        let h = h_density(x)?.value;
        stable &= !r.unstable;
        table.push(vec![
            x.into(),
            r.extrapolated.into(),
            h.into(),
            (r.extrapolated - h).abs().into(),
            r.error_estimate.into(),
            r.unstable.into(),
        ]);
    }
    Ok(Outcome {
        output: Output::Table(table),
        passed: stable || !strict,
        budget_met: true,
    })
}
