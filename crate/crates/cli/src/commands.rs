use std::f64::consts::PI;

use serde_json::{json, Map, Value};

use hpl_core::bounds::{coeff_bound, fs_bound, hankel22_bound, Target};
use hpl_core::classes::{
    boundary_point, k_extremal, phi_extremal, point_in_domain, q_series, ClassKind, ClassParams,
    MIN_ORDER,
};
use hpl_core::search::{run_campaign, CampaignConfig, CampaignFunctional};
use hpl_core::{Complex64, Error};

use crate::args::{BoundArgs, Command, DomainArgs, FunctionalArg, OutputArgs, SeriesArgs, SeriesFn, VerifyArgs};
use crate::grid::{parse_grid, parse_index_grid};
use crate::output::{num, OutputRecord};
use crate::{CliError, Result, EXIT_VIOLATION};

fn object(v: Value) -> Map<String, Value> {
    match v {
        Value::Object(m) => m,
        _ => unreachable!("json! object literal"),
    }
}

/// Runs a subcommand, returning its record, its output flags and the exit status.
pub fn dispatch(command: &Command) -> Result<(OutputRecord, &OutputArgs, u8)> {
    Ok(match command {
        Command::Series(a) => (cmd_series(a)?, &a.output, 0),
        Command::Bound(a) => (cmd_bound(a)?, &a.output, 0),
        Command::Verify(a) => {
            let record = cmd_verify(a)?;
            let status = verify_status(&record);
            (record, &a.output, status)
        }
        Command::Domain(a) => (cmd_domain(a)?, &a.output, 0),
    })
}

/// [`EXIT_VIOLATION`] if any row of a `verify` record is flagged, else 0.
pub fn verify_status(record: &OutputRecord) -> u8 {
    if record.rows.iter().any(|r| r.get("violated") == Some(&Value::Bool(true))) {
        EXIT_VIOLATION
    } else {
        0
    }
}

pub fn cmd_series(a: &SeriesArgs) -> Result<OutputRecord> {
    let name = match a.function {
        SeriesFn::Q => "q",
        SeriesFn::Phi => "phi",
        SeriesFn::K => "k",
    };
    let mut record = OutputRecord::new(
        "series",
        object(json!({"fn": name, "s": num(a.s), "n_index": a.n_index, "order": a.order})),
    );
    let (coeffs, first) = match a.function {
        SeriesFn::Q => (q_series(a.s, a.order)?.into_coeffs(), 0),
        SeriesFn::Phi | SeriesFn::K => {
            let params = ClassParams::new(a.s, a.n_index, a.order.max(MIN_ORDER))?;
            let m = if a.function == SeriesFn::Phi {
                phi_extremal(&params)?
            } else {
                k_extremal(&params)?
            };
            (m.f.into_coeffs(), 1)
        }
    };
    if a.order < first {
        return Err(CliError::Usage("--order must be at least 1".into()));
    }
    for (k, c) in coeffs.iter().enumerate().take(a.order + 1).skip(first) {
        record.rows.push(object(json!({"index": k, "re": num(c.re), "im": num(c.im)})));
    }
    Ok(record)
}

pub fn cmd_bound(a: &BoundArgs) -> Result<OutputRecord> {
    let kind = ClassKind::from(a.kind);
    let target = Target::from(a.target);
    let functional = CampaignFunctional::from(a.functional);
    let mut record = OutputRecord::new(
        "bound",
        object(json!({
            "functional": functional.as_str(),
            "kind": kind.as_str(),
            "target": target.as_str(),
            "s": num(a.s),
            "lambda": a.lambda.map(num),
            "n": a.n,
        })),
    );
    let (bound, lambda, n) = match a.functional {
        FunctionalArg::Coeff => {
            let n = a.n.ok_or_else(|| CliError::Usage("--n is required for coeff".into()))?;
            (coeff_bound(kind, a.s, n)?, None, Some(n))
        }
        FunctionalArg::Fs => {
            let l = a.lambda.ok_or_else(|| CliError::Usage("--lambda is required for fs".into()))?;
            (fs_bound(kind, target, a.s, l)?, Some(l), None)
        }
        FunctionalArg::Hankel22 => (hankel22_bound(kind, a.s)?, None, None),
    };
    record.rows.push(object(json!({
        "s": num(a.s),
        "lambda": lambda.map(num),
        "n": n,
        "value": num(bound.value),
        "regime": bound.regime.as_str(),
        "sharp": bound.sharp,
    })));
    Ok(record)
}

pub fn cmd_verify(a: &VerifyArgs) -> Result<OutputRecord> {
    let mut cfg = CampaignConfig::new(a.functional.into(), a.kind.into(), parse_grid(&a.s_grid)?);
    cfg.target = a.target.into();
    cfg.lambda_grid = a.lambda_grid.as_deref().map(parse_grid).transpose()?;
    cfg.n_grid = a.n_grid.as_deref().map(parse_index_grid).transpose()?;
    cfg.samples = a.samples;
    cfg.seed = a.seed;
    cfg.tol_attain = a.tol_attain;
    cfg.tol_violate = a.tol_violate;
    cfg.refine_steps = a.refine_steps;
    if cfg.functional == CampaignFunctional::FeketeSzego && cfg.lambda_grid.is_none() {
        return Err(CliError::Usage("--lambda-grid is required for fs".into()));
    }
    let report = run_campaign(&cfg)?;

    let mut record = OutputRecord::new(
        "verify",
        object(json!({
            "functional": cfg.functional.as_str(),
            "kind": cfg.kind.as_str(),
            "target": cfg.target.as_str(),
            "s_grid": a.s_grid,
            "lambda_grid": a.lambda_grid,
            "n_grid": a.n_grid,
            "samples": cfg.samples,
            "refine_steps": cfg.refine_steps,
            "tol_attain": num(cfg.tol_attain),
            "tol_violate": num(cfg.tol_violate),
        })),
    );
    record.seed = Some(cfg.seed);
    record.rows = report
        .records
        .iter()
        .map(|r| {
            object(json!({
                "s": num(r.s),
                "lambda": r.lambda.map(num),
                "n": r.n,
                "bound": num(r.bound.value),
                "sup_found": num(r.sup_found),
                "candidate_sup": num(r.candidate_sup),
                "gap": num(r.gap),
                "violated": r.violated,
                "attained": r.attained,
                "sharp": r.bound.sharp,
                "argmax_source": r.argmax_source,
            }))
        })
        .collect();
    Ok(record)
}

fn parse_point(spec: &str) -> Result<Complex64> {
    let bad = || CliError::Usage(format!("--probe `{spec}` is not of the form re,im"));
    let (re, im) = spec.split_once(',').ok_or_else(bad)?;
    let re: f64 = re.trim().parse().map_err(|_| bad())?;
    let im: f64 = im.trim().parse().map_err(|_| bad())?;
    Ok(Complex64::new(re, im))
}

pub fn cmd_domain(a: &DomainArgs) -> Result<OutputRecord> {
    if a.boundary {
        let count = a.count.unwrap_or(0);
        if count == 0 {
            return Err(CliError::Usage("--count must be at least 1".into()));
        }
        let mut record = OutputRecord::new(
            "domain",
            object(json!({"s": num(a.s), "mode": "boundary", "count": count})),
        );
        for k in 0..count {
            let phi = -PI * a.s / 2.0 + (k + 1) as f64 * PI * a.s / (count + 1) as f64;
            let p = boundary_point(a.s, phi)?;
            record.rows.push(object(json!({
                "phi": num(p.phi),
                "rho": num(p.rho),
                "re": num(p.w.re),
                "im": num(p.w.im),
            })));
        }
        return Ok(record);
    }
    let spec = a.probe.as_deref().expect("clap requires --probe without --boundary");
    let w = parse_point(spec)?;
    let mut record = OutputRecord::new(
        "domain",
        object(json!({"s": num(a.s), "mode": "probe", "probe": spec})),
    );
    let (inside, warning) = match point_in_domain(w, a.s) {
        Ok(inside) => (inside, Value::Null),
        Err(Error::BranchCut) => {
            eprintln!("hpl: warning: {w} lies on the branch cut of w^(1/s); reported as outside");
            (false, Value::from("branch cut"))
        }
        Err(e) => return Err(e.into()),
    };
    record.rows.push(object(json!({
        "re": num(w.re),
        "im": num(w.im),
        "inside": inside,
        "warning": warning,
    })));
    Ok(record)
}
