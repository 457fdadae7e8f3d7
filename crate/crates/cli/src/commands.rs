//! Subcommand implementations. Each returns the records to print plus any
//! per-point warnings; printing happens in the caller.

use std::f64::consts::PI;

use coulphase::phase_shifts::power_series_terms;
use coulphase::{
    deflection_classical, deflection_quantum, eikonal_exponential, eikonal_gaussian, eikonal_sharp,
    eikonal_sharp_limit, find_sigma0_zero, order1_accuracy, sigma0_exact, sigma0_large_eta,
    sigma0_power_series, sigma_l_exact, sigma_l_gudermann, sigma_l_log_approx, sigma_l_order0,
    sigma_l_order1, sigma_l_stirling, wkb_phase, EvalConfig64, PhaseError, PhaseQuery64,
};
use rayon::prelude::*;

use crate::args::{Method, Mode, ScanArgs, ScanVar};
use crate::record::Record;
use crate::CliError;

/// Rows plus warnings for points that could not be evaluated.
#[derive(Debug, Default)]
pub struct Output {
    pub records: Vec<Record>,
    pub warnings: Vec<String>,
}

/// Where a method is evaluated.
#[derive(Debug, Clone, Copy)]
enum Point {
    Partial { l: u32, eta: f64 },
    Lambda { lambda: f64, eta: f64 },
    Screen { b: f64, a: f64, eta: f64 },
}

struct Value {
    sigma: f64,
    bound: Option<f64>,
}

fn unsupported(method: Method, point: &str) -> PhaseError {
    PhaseError::Domain(format!(
        "method `{}` does not apply to {point}",
        method.key()
    ))
}

fn partial(method: Method, l: u32, eta: f64, cfg: &EvalConfig64) -> Result<Value, PhaseError> {
    let q = PhaseQuery64::new(l, eta)?;
    let r = match method {
        Method::Exact => sigma_l_exact(q, cfg)?,
        Method::Gudermann => sigma_l_gudermann(q, cfg)?,
        Method::Order0 => sigma_l_order0(q)?,
        Method::Order1 => sigma_l_order1(q)?,
        Method::Stirling => sigma_l_stirling(q, cfg)?,
        Method::LogApprox => sigma_l_log_approx(q)?,
        Method::PowerSeries | Method::LargeEta if l != 0 => {
            return Err(PhaseError::Domain(format!(
                "`{}` is a σ₀ form; needs l = 0",
                method.key()
            )))
        }
        Method::PowerSeries => {
            let k = power_series_terms(eta, cfg.series_rel_tol, cfg.max_terms)?;
            sigma0_power_series(eta, k)?
        }
        Method::LargeEta => sigma0_large_eta(eta)?,
        Method::Wkb => {
            return Ok(Value {
                sigma: wkb_phase(f64::from(l) + 0.5, eta)?,
                bound: None,
            })
        }
        other => return Err(unsupported(other, "a partial wave")),
    };
    Ok(Value {
        sigma: r.sigma,
        bound: r.error_bound,
    })
}

fn evaluate(method: Method, at: Point, cfg: &EvalConfig64) -> Result<Value, PhaseError> {
    let plain = |sigma| Ok(Value { sigma, bound: None });
    match (at, method) {
        (Point::Partial { l, eta }, m) => partial(m, l, eta, cfg),
        (Point::Lambda { lambda, eta }, Method::Wkb) => plain(wkb_phase(lambda, eta)?),
        (Point::Lambda { lambda, eta }, Method::Deflection) => {
            plain(deflection_classical(lambda, eta)?)
        }
        (Point::Screen { b, a, eta }, Method::Sharp) => plain(eikonal_sharp(b, a, eta)?),
        (Point::Screen { b, a, eta }, Method::SharpLimit) => plain(eikonal_sharp_limit(b, a, eta)?),
        (Point::Screen { b, a, eta }, Method::Exponential) => {
            plain(eikonal_exponential(b, a, eta)?)
        }
        (Point::Screen { b, a, eta }, Method::Gaussian) => plain(eikonal_gaussian(b, a, eta)?),
        (Point::Lambda { .. }, m) => Err(unsupported(m, "a continuous λ")),
        (Point::Screen { .. }, m) => Err(unsupported(m, "a screened eikonal point")),
    }
}

/// Appends the columns of `method` at `at`; on failure the cells are null
/// and the error is returned for the caller to report.
fn method_columns(
    rec: &mut Record,
    method: Method,
    at: Point,
    cfg: &EvalConfig64,
) -> Option<PhaseError> {
    let key = method.key();
    let (value, err) = match evaluate(method, at, cfg) {
        Ok(v) => (Some(v), None),
        Err(e) => (None, Some(e)),
    };
    let sigma = value.as_ref().map(|v| v.sigma);
    if method == Method::Deflection {
        *rec = std::mem::take(rec)
            .num("theta_classical", sigma)
            .num("theta_classical_deg", sigma.map(f64::to_degrees));
        return err;
    }
    *rec = std::mem::take(rec)
        .num(format!("sigma_{key}"), sigma)
        .num(format!("sigma_{key}_over_pi"), sigma.map(|s| s / PI));
    if method.has_bound() {
        *rec = std::mem::take(rec).num(format!("error_bound_{key}"), value.and_then(|v| v.bound));
    }
    err
}

fn describe(at: Point) -> String {
    match at {
        Point::Partial { l, eta } => format!("l={l} eta={eta}"),
        Point::Lambda { lambda, eta } => format!("lambda={lambda} eta={eta}"),
        Point::Screen { b, a, eta } => format!("b={b} a={a} eta={eta}"),
    }
}

/// Fills the method columns of one row, collecting warnings.
fn fill(
    mut rec: Record,
    methods: &[Method],
    at: Point,
    cfg: &EvalConfig64,
) -> (Record, Vec<(String, PhaseError)>) {
    let mut errors = Vec::new();
    for &m in methods {
        if let Some(e) = method_columns(&mut rec, m, at, cfg) {
            errors.push((format!("{}: {}: {e}", describe(at), m.key()), e));
        }
    }
    (rec, errors)
}

/// Single-point commands fail outright when every requested method fails;
/// otherwise failures become null cells plus warnings.
fn single(
    rec: Record,
    methods: &[Method],
    at: Point,
    cfg: &EvalConfig64,
) -> Result<Output, CliError> {
    let (rec, mut errors) = fill(rec, methods, at, cfg);
    if errors.len() == methods.len() && !errors.is_empty() {
        return Err(errors.swap_remove(0).1.into());
    }
    Ok(Output {
        records: vec![rec],
        warnings: errors.into_iter().map(|(w, _)| w).collect(),
    })
}

pub fn phase(l: u32, eta: f64, method: Method, cfg: &EvalConfig64) -> Result<Output, CliError> {
    if !Method::PARTIAL_WAVE.contains(&method) {
        return Err(CliError::Usage(format!(
            "`phase` does not support method `{}`",
            method.key()
        )));
    }
    let rec = Record::new().int("l", i64::from(l)).num("eta", Some(eta));
    single(rec, &[method], Point::Partial { l, eta }, cfg)
}

/// One row of the comparison table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TableRow {
    pub eta: f64,
    pub l: u32,
    pub order0_over_pi: f64,
    pub order1_over_pi: f64,
    pub exact_over_pi: f64,
}

pub const TABLE_ETAS: [f64; 2] = [0.1, 1.0];
pub const TABLE_LS: [u32; 3] = [0, 1, 2];

pub fn table_rows(cfg: &EvalConfig64) -> Result<Vec<TableRow>, PhaseError> {
    let mut rows = Vec::new();
    for eta in TABLE_ETAS {
        for l in TABLE_LS {
            let q = PhaseQuery64::new(l, eta)?;
            rows.push(TableRow {
                eta,
                l,
                order0_over_pi: sigma_l_order0(q)?.over_pi(),
                order1_over_pi: sigma_l_order1(q)?.over_pi(),
                exact_over_pi: sigma_l_exact(q, cfg)?.over_pi(),
            });
        }
    }
    Ok(rows)
}

pub fn table(cfg: &EvalConfig64) -> Result<Output, CliError> {
    let records = table_rows(cfg)?
        .into_iter()
        .map(|r| {
            Record::new()
                .num("eta", Some(r.eta))
                .int("l", i64::from(r.l))
                .num("sigma_order0_over_pi", Some(r.order0_over_pi))
                .num("sigma_order1_over_pi", Some(r.order1_over_pi))
                .num("sigma_exact_over_pi", Some(r.exact_over_pi))
        })
        .collect();
    Ok(Output {
        records,
        warnings: Vec::new(),
    })
}

/// `steps` equally spaced points from `start` to `stop` inclusive.
pub fn grid(start: f64, stop: f64, steps: usize) -> Result<Vec<f64>, CliError> {
    if !(start.is_finite() && stop.is_finite()) || start >= stop {
        return Err(CliError::Usage(format!(
            "need start < stop, got {start} and {stop}"
        )));
    }
    if steps < 2 {
        return Err(CliError::Usage(format!(
            "need at least 2 steps, got {steps}"
        )));
    }
    let last = (steps - 1) as f64;
    Ok((0..steps)
        .map(|i| {
            if i + 1 == steps {
                stop
            } else {
                start + (stop - start) * (i as f64 / last)
            }
        })
        .collect())
}

fn scan_methods(var: ScanVar, methods: &[Method]) -> Result<(), CliError> {
    let allowed: &[Method] = match var {
        ScanVar::Eta | ScanVar::L => &Method::PARTIAL_WAVE,
        ScanVar::Lambda => &Method::SEMICLASSICAL,
        ScanVar::BOverA => &Method::SCREENING,
    };
    match methods.iter().find(|m| !allowed.contains(m)) {
        Some(m) => Err(CliError::Usage(format!(
            "method `{}` is not available when scanning {var:?}",
            m.key()
        ))),
        None if methods.is_empty() => Err(CliError::Usage("no methods requested".into())),
        None => Ok(()),
    }
}

fn require_eta(eta: Option<f64>, var: &str) -> Result<f64, CliError> {
    eta.ok_or_else(|| CliError::Usage(format!("scanning {var} needs --eta")))
}

pub fn scan(plan: &ScanArgs, cfg: &EvalConfig64) -> Result<Output, CliError> {
    scan_methods(plan.var, &plan.method)?;
    let steps = match (plan.steps, plan.var) {
        (Some(n), _) => n,
        (None, ScanVar::L) if plan.stop > plan.start => {
            (plan.stop - plan.start).round() as usize + 1
        }
        (None, _) => 101,
    };
    let xs = grid(plan.start, plan.stop, steps)?;

    let points: Vec<(Record, Point)> = match plan.var {
        ScanVar::Eta => {
            let l = plan.l.unwrap_or(0);
            xs.iter()
                .map(|&eta| {
                    (
                        Record::new().num("eta", Some(eta)).int("l", i64::from(l)),
                        Point::Partial { l, eta },
                    )
                })
                .collect()
        }
        ScanVar::L => {
            let eta = require_eta(plan.eta, "l")?;
            let mut pts = Vec::with_capacity(xs.len());
            for &x in &xs {
                let l = x.round();
                if x < 0.0 || (x - l).abs() > 1e-9 || l > f64::from(u32::MAX) {
                    return Err(CliError::Usage(format!(
                        "l grid point {x} is not a non-negative integer; adjust --steps"
                    )));
                }
                let l = l as u32;
                pts.push((
                    Record::new().int("l", i64::from(l)).num("eta", Some(eta)),
                    Point::Partial { l, eta },
                ));
            }
            pts
        }
        ScanVar::Lambda => {
            let eta = require_eta(plan.eta, "lambda")?;
            xs.iter()
                .map(|&lambda| {
                    (
                        Record::new()
                            .num("lambda", Some(lambda))
                            .num("eta", Some(eta)),
                        Point::Lambda { lambda, eta },
                    )
                })
                .collect()
        }
        ScanVar::BOverA => {
            let eta = require_eta(plan.eta, "b_over_a")?;
            let a = plan.a;
            xs.iter()
                .map(|&ratio| {
                    let rec = Record::new()
                        .num("b_over_a", Some(ratio))
                        .num("a", Some(a))
                        .num("eta", Some(eta));
                    (
                        rec,
                        Point::Screen {
                            b: ratio * a,
                            a,
                            eta,
                        },
                    )
                })
                .collect()
        }
    };

    let rows: Vec<(Record, Vec<(String, PhaseError)>)> = points
        .into_par_iter()
        .map(|(rec, at)| fill(rec, &plan.method, at, cfg))
        .collect();
    let mut out = Output::default();
    for (rec, errs) in rows {
        out.records.push(rec);
        out.warnings.extend(errs.into_iter().map(|(w, _)| w));
    }
    Ok(out)
}

/// η window around the zero of σ₀ where relative error is ill-conditioned.
pub const ILL_CONDITIONED: (f64, f64) = (1.7, 1.95);

pub fn relerr(start: f64, stop: f64, steps: usize, cfg: &EvalConfig64) -> Result<Output, CliError> {
    if start <= 0.0 {
        return Err(CliError::Usage(format!(
            "relerr needs start > 0, got {start}"
        )));
    }
    let xs = grid(start, stop, steps)?;
    let rows: Vec<Result<Record, String>> = xs
        .into_par_iter()
        .map(|eta| {
            let acc = order1_accuracy(eta, cfg).map_err(|e| format!("eta={eta}: {e}"))?;
            let flagged = acc.near_zero() || (eta > ILL_CONDITIONED.0 && eta < ILL_CONDITIONED.1);
            Ok(Record::new()
                .num("eta", Some(eta))
                .num("sigma_exact", Some(acc.exact))
                .num("sigma_order1", Some(acc.approx))
                .num("abs_err", Some(acc.abs_err))
                .num("rel_err", acc.rel_err)
                .text(
                    "status",
                    if flagged {
                        "near-zero-denominator"
                    } else {
                        "ok"
                    },
                ))
        })
        .collect();
    let mut out = Output::default();
    for (row, eta) in rows.into_iter().zip(grid(start, stop, steps)?) {
        match row {
            Ok(r) => out.records.push(r),
            Err(w) => {
                out.warnings.push(w);
                out.records.push(
                    Record::new()
                        .num("eta", Some(eta))
                        .num("sigma_exact", None)
                        .num("sigma_order1", None)
                        .num("abs_err", None)
                        .num("rel_err", None)
                        .text("status", "error"),
                );
            }
        }
    }
    Ok(out)
}

pub fn zero(cfg: &EvalConfig64) -> Result<Output, CliError> {
    let root = find_sigma0_zero(cfg)?;
    let residual = sigma0_exact(root, cfg)?.sigma;
    let rec = Record::new()
        .num("eta_star", Some(root))
        .num("sigma0_at_eta_star", Some(residual));
    Ok(Output {
        records: vec![rec],
        warnings: Vec::new(),
    })
}

pub fn deflection(
    mode: Mode,
    l: Option<u32>,
    lambda: Option<f64>,
    eta: f64,
    cfg: &EvalConfig64,
) -> Result<Output, CliError> {
    let (rec, theta) = match mode {
        Mode::Classical => {
            let lambda = match (lambda, l) {
                (Some(x), _) => x,
                (None, Some(l)) => f64::from(l),
                (None, None) => {
                    return Err(CliError::Usage(
                        "classical mode needs --lambda or --l".into(),
                    ))
                }
            };
            let rec = Record::new()
                .text("mode", "classical")
                .num("lambda", Some(lambda));
            (rec, deflection_classical(lambda, eta)?)
        }
        Mode::Quantum => {
            if lambda.is_some() {
                return Err(CliError::Usage(
                    "quantum mode takes an integer --l, not --lambda".into(),
                ));
            }
            let l = l.ok_or_else(|| CliError::Usage("quantum mode needs --l".into()))?;
            if l == 0 {
                return Err(CliError::Usage("quantum deflection needs l >= 1".into()));
            }
            let rec = Record::new().text("mode", "quantum").int("l", i64::from(l));
            (rec, deflection_quantum(l, eta, cfg)?)
        }
    };
    let rec = rec
        .num("eta", Some(eta))
        .num("theta", Some(theta))
        .num("theta_deg", Some(theta.to_degrees()));
    Ok(Output {
        records: vec![rec],
        warnings: Vec::new(),
    })
}

pub fn eikonal(
    b: f64,
    a: f64,
    eta: f64,
    methods: &[Method],
    cfg: &EvalConfig64,
) -> Result<Output, CliError> {
    let methods = if methods.is_empty() {
        Method::SCREENING.to_vec()
    } else {
        methods.to_vec()
    };
    scan_methods(ScanVar::BOverA, &methods)?;
    let rec = Record::new()
        .num("b", Some(b))
        .num("a", Some(a))
        .num("eta", Some(eta));
    single(rec, &methods, Point::Screen { b, a, eta }, cfg)
}

pub fn wkb(
    lambda: Option<f64>,
    l: Option<u32>,
    eta: f64,
    cfg: &EvalConfig64,
) -> Result<Output, CliError> {
    match (lambda, l) {
        (Some(lambda), _) => {
            let rec = Record::new()
                .num("lambda", Some(lambda))
                .num("eta", Some(eta));
            single(rec, &[Method::Wkb], Point::Lambda { lambda, eta }, cfg)
        }
        (None, Some(l)) => {
            let lambda = f64::from(l) + 0.5;
            let rec = Record::new()
                .int("l", i64::from(l))
                .num("lambda", Some(lambda))
                .num("eta", Some(eta));
            let w = wkb_phase(lambda, eta)?;
            let exact = sigma_l_exact(PhaseQuery64::new(l, eta)?, cfg)?.sigma;
            let rec = rec
                .num("sigma_wkb", Some(w))
                .num("sigma_wkb_over_pi", Some(w / PI))
                .num("sigma_exact", Some(exact))
                .num("sigma_exact_over_pi", Some(exact / PI))
                .num("wkb_minus_exact", Some(w - exact));
            Ok(Output {
                records: vec![rec],
                warnings: Vec::new(),
            })
        }
        (None, None) => Err(CliError::Usage("wkb needs --lambda or --l".into())),
    }
}
