use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::families::{family_prefix, schwarz_from_prefix, RotationFamily, MAX_BLASCHKE_ZEROS};
use super::golden::refine;
use super::{blaschke_member, prefix_functional, FunctionalSpec, SchwarzPrefix};
use crate::bounds::{coeff_bound, fs_bound, hankel22_bound, BoundResult, Target};
use crate::classes::{check_s, member_from_schwarz, ClassKind, MIN_ORDER};
use crate::error::{Error, Result};

/// Phases at which every named candidate is rotated.
pub const CANDIDATE_PHASES: usize = 32;
/// Grid points for the one-parameter families, `x = k/32`.
pub const FAMILY_GRID: usize = 33;
/// Largest coefficient index a campaign accepts.
pub const MAX_CAMPAIGN_INDEX: usize = 64;
/// Upper limit on the modulus of random Blaschke zeros.
const ZERO_RADIUS: f64 = 1.0 - 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CampaignFunctional {
    #[serde(rename = "coeff")]
    Coefficient,
    #[serde(rename = "fs")]
    FeketeSzego,
    #[serde(rename = "hankel22")]
    Hankel22,
}

impl CampaignFunctional {
    pub fn as_str(self) -> &'static str {
        match self {
            CampaignFunctional::Coefficient => "coeff",
            CampaignFunctional::FeketeSzego => "fs",
            CampaignFunctional::Hankel22 => "hankel22",
        }
    }
}

impl fmt::Display for CampaignFunctional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CampaignFunctional {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "coeff" => Ok(CampaignFunctional::Coefficient),
            "fs" => Ok(CampaignFunctional::FeketeSzego),
            "hankel22" => Ok(CampaignFunctional::Hankel22),
            other => Err(Error::ConfigInvalid(format!("unknown functional `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CampaignConfig {
    pub functional: CampaignFunctional,
    pub kind: ClassKind,
    /// Only read by Fekete-Szegő campaigns.
    pub target: Target,
    pub s_grid: Vec<f64>,
    /// Required for Fekete-Szegő campaigns.
    pub lambda_grid: Option<Vec<f64>>,
    /// Coefficient indices; defaults to `2..=10` for coefficient campaigns.
    pub n_grid: Option<Vec<usize>>,
    pub samples: usize,
    pub refine_steps: usize,
    pub seed: u64,
    pub tol_attain: f64,
    pub tol_violate: f64,
}

impl CampaignConfig {
    pub const DEFAULT_TOL_ATTAIN: f64 = 1e-3;
    pub const DEFAULT_TOL_VIOLATE: f64 = 1e-9;
    pub const DEFAULT_REFINE_STEPS: usize = 4;

    pub fn new(functional: CampaignFunctional, kind: ClassKind, s_grid: Vec<f64>) -> Self {
        Self {
            functional,
            kind,
            target: Target::F,
            s_grid,
            lambda_grid: None,
            n_grid: None,
            samples: 1000,
            refine_steps: Self::DEFAULT_REFINE_STEPS,
            seed: 0,
            tol_attain: Self::DEFAULT_TOL_ATTAIN,
            tol_violate: Self::DEFAULT_TOL_VIOLATE,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::ConfigInvalid(msg));
        if self.samples < 1 {
            return bad("samples must be at least 1".into());
        }
        if self.s_grid.is_empty() {
            return bad("s-grid is empty".into());
        }
        for &s in &self.s_grid {
            check_s(s)?;
        }
        for (name, tol) in [("tol_attain", self.tol_attain), ("tol_violate", self.tol_violate)] {
            if !(tol > 0.0 && tol.is_finite()) {
                return bad(format!("{name} must be positive, got {tol}"));
            }
        }
        if self.functional == CampaignFunctional::FeketeSzego {
            match &self.lambda_grid {
                None => return bad("a λ-grid is required for fs campaigns".into()),
                Some(g) if g.is_empty() => return bad("λ-grid is empty".into()),
                Some(g) => {
                    if let Some(l) = g.iter().find(|l| !l.is_finite()) {
                        return bad(format!("non-finite λ {l}"));
                    }
                }
            }
        }
        if self.functional == CampaignFunctional::Coefficient {
            if let Some(g) = &self.n_grid {
                if g.is_empty() {
                    return bad("n-grid is empty".into());
                }
                if let Some(&n) = g.iter().find(|&&n| !(2..=MAX_CAMPAIGN_INDEX).contains(&n)) {
                    return Err(Error::BadIndex(n));
                }
            }
        }
        Ok(())
    }

    fn grid(&self) -> Vec<(f64, Option<f64>, Option<usize>)> {
        let mut out = Vec::new();
        for &s in &self.s_grid {
            match self.functional {
                CampaignFunctional::FeketeSzego => {
                    for &l in self.lambda_grid.as_deref().unwrap_or(&[]) {
                        out.push((s, Some(l), None));
                    }
                }
                CampaignFunctional::Coefficient => {
                    let default: Vec<usize> = (2..=10).collect();
                    for &n in self.n_grid.as_deref().unwrap_or(&default) {
                        out.push((s, None, Some(n)));
                    }
                }
                CampaignFunctional::Hankel22 => out.push((s, None, None)),
            }
        }
        out
    }
}

/// Parameters of the function attaining `sup_found`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum Argmax {
    Prefix(SchwarzPrefix<f64>),
    Blaschke { c: Complex64, zeros: Vec<Complex64> },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridPointRecord {
    pub s: f64,
    pub lambda: Option<f64>,
    pub n: Option<usize>,
    /// RNG stream of this grid point (its index in the grid).
    pub stream: u64,
    pub bound: BoundResult<f64>,
    pub sup_found: f64,
    /// Best value over the named candidates alone.
    pub candidate_sup: f64,
    pub gap: f64,
    pub violated: bool,
    pub attained: bool,
    pub argmax: Argmax,
    pub argmax_source: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CampaignReport {
    pub config: CampaignConfig,
    pub records: Vec<GridPointRecord>,
    #[serde(skip)]
    pub wall_time: Duration,
}

impl CampaignReport {
    pub fn violations(&self) -> usize {
        self.records.iter().filter(|r| r.violated).count()
    }
}

pub fn run_campaign(cfg: &CampaignConfig) -> Result<CampaignReport> {
    cfg.validate()?;
    let start = Instant::now();
    let records = cfg
        .grid()
        .into_par_iter()
        .enumerate()
        .map(|(i, (s, lambda, n))| run_point(cfg, i as u64, s, lambda, n))
        .collect::<Result<Vec<_>>>()?;
    Ok(CampaignReport {
        config: cfg.clone(),
        records,
        wall_time: start.elapsed(),
    })
}

struct Best {
    value: f64,
    argmax: Argmax,
    source: String,
}

impl Best {
    fn offer(&mut self, value: f64, argmax: impl FnOnce() -> Argmax, source: impl FnOnce() -> String) {
        if value > self.value {
            self.value = value;
            self.argmax = argmax();
            self.source = source();
        }
    }
}

fn disk_point(rng: &mut ChaCha8Rng, radius: f64) -> Complex64 {
    let r = rng.random::<f64>().sqrt() * radius;
    let t = rng.random_range(-PI..PI);
    Complex64::from_polar(r, t)
}

fn polar_coords(values: &[Complex64]) -> Vec<f64> {
    values.iter().flat_map(|v| [v.norm(), v.arg()]).collect()
}

fn from_polar_coords(x: &[f64]) -> Vec<Complex64> {
    x.chunks(2).map(|p| Complex64::from_polar(p[0], p[1])).collect()
}

fn prefix_from_coords(x: &[f64]) -> Option<SchwarzPrefix<f64>> {
    let v = from_polar_coords(x);
    SchwarzPrefix::new(v[0], v[1], v[2]).ok()
}

/// The named candidates, as Schwarz prefixes, with a label each.
fn candidates(kind: ClassKind) -> Vec<(SchwarzPrefix<f64>, String)> {
    let zero = Complex64::new(0.0, 0.0);
    let one = Complex64::new(1.0, 0.0);
    let extremal = match kind {
        ClassKind::Starlike => "Phi",
        ClassKind::Convex => "K",
    };
    let mut base = vec![
        (SchwarzPrefix { w1: one, xi: zero, zeta: zero }, format!("{extremal}_(s,1)")),
        (SchwarzPrefix { w1: zero, xi: one, zeta: zero }, format!("{extremal}_(s,2)")),
    ];
    for minus in [true, false] {
        let name = RotationFamily::of(kind, minus).name();
        for k in 0..FAMILY_GRID {
            let x = k as f64 / (FAMILY_GRID - 1) as f64;
            let p = family_prefix(minus, x).expect("x in [0, 1]");
            base.push((p, format!("{name} x={x}")));
        }
    }
    let mut out = Vec::with_capacity(base.len() * CANDIDATE_PHASES);
    for j in 0..CANDIDATE_PHASES {
        let mu = Complex64::from_polar(1.0, 2.0 * PI * j as f64 / CANDIDATE_PHASES as f64);
        for (p, name) in &base {
            out.push((p.rotate(mu), format!("candidate {name} phase={j}/{CANDIDATE_PHASES}")));
        }
    }
    out
}

fn run_point(
    cfg: &CampaignConfig,
    stream: u64,
    s: f64,
    lambda: Option<f64>,
    n: Option<usize>,
) -> Result<GridPointRecord> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(stream);
    let kind = cfg.kind;

    let (bound, spec) = match cfg.functional {
        CampaignFunctional::Coefficient => {
            let n = n.expect("coefficient grid carries n");
            (coeff_bound(kind, s, n)?, FunctionalSpec::Coefficient(n))
        }
        CampaignFunctional::FeketeSzego => {
            let lambda = lambda.expect("fs grid carries λ");
            (
                fs_bound(kind, cfg.target, s, lambda)?,
                FunctionalSpec::FeketeSzego { target: cfg.target, lambda },
            )
        }
        CampaignFunctional::Hankel22 => (hankel22_bound(kind, s)?, FunctionalSpec::Hankel22),
    };

    let mut best = Best {
        value: f64::NEG_INFINITY,
        argmax: Argmax::Prefix(SchwarzPrefix {
            w1: Complex64::new(0.0, 0.0),
            xi: Complex64::new(0.0, 0.0),
            zeta: Complex64::new(0.0, 0.0),
        }),
        source: String::new(),
    };

    let candidate_sup = match n {
        Some(n) => {
            let order = n.max(MIN_ORDER);
            let eval = |p: &SchwarzPrefix<f64>| -> Result<f64> {
                let omega = schwarz_from_prefix(p, order)?;
                Ok(member_from_schwarz(kind, s, &omega, order)?.f.coeff(n).norm())
            };
            for (p, name) in candidates(kind) {
                let v = eval(&p)?;
                best.offer(v, || Argmax::Prefix(p), || name);
            }
            let candidate_sup = best.value;
            coefficient_search(cfg, kind, s, n, &mut rng, &mut best)?;
            candidate_sup
        }
        None => {
            for (p, name) in candidates(kind) {
                let v = prefix_functional(kind, s, &p, &spec)?;
                best.offer(v, || Argmax::Prefix(p), || name);
            }
            let candidate_sup = best.value;
            prefix_search(cfg, kind, s, &spec, &mut rng, &mut best)?;
            candidate_sup
        }
    };

    let gap = bound.value - best.value;
    Ok(GridPointRecord {
        s,
        lambda,
        n,
        stream,
        violated: best.value > bound.value + cfg.tol_violate,
        attained: gap <= cfg.tol_attain,
        bound,
        sup_found: best.value,
        candidate_sup,
        gap,
        argmax: best.argmax,
        argmax_source: best.source,
    })
}

fn prefix_search(
    cfg: &CampaignConfig,
    kind: ClassKind,
    s: f64,
    spec: &FunctionalSpec<f64>,
    rng: &mut ChaCha8Rng,
    best: &mut Best,
) -> Result<()> {
    for _ in 0..cfg.samples {
        let p = SchwarzPrefix::new(disk_point(rng, 1.0), disk_point(rng, 1.0), disk_point(rng, 1.0))?;
        let v = prefix_functional(kind, s, &p, spec)?;
        best.offer(v, || Argmax::Prefix(p), || "random".into());
    }
    if cfg.refine_steps == 0 {
        return Ok(());
    }
    let Argmax::Prefix(start) = best.argmax else {
        unreachable!("prefix campaigns only record prefixes")
    };
    let objective = |x: &[f64]| {
        prefix_from_coords(x)
            .and_then(|p| prefix_functional(kind, s, &p, spec).ok())
            .unwrap_or(f64::NEG_INFINITY)
    };
    let bounds = [(0.0, 1.0), (-PI, PI)].repeat(3);
    let (x, v) = refine(&objective, &polar_coords(&[start.w1, start.xi, start.zeta]), &bounds, cfg.refine_steps);
    if let Some(p) = prefix_from_coords(&x) {
        best.offer(v, || Argmax::Prefix(p), || "refined".into());
    }
    Ok(())
}

fn coefficient_search(
    cfg: &CampaignConfig,
    kind: ClassKind,
    s: f64,
    n: usize,
    rng: &mut ChaCha8Rng,
    best: &mut Best,
) -> Result<()> {
    let order = n.max(MIN_ORDER);
    let eval = |c: Complex64, zeros: &[Complex64]| -> Result<f64> {
        Ok(blaschke_member(kind, s, c, zeros, order)?.f.coeff(n).norm())
    };
    let mut incumbent: Option<(f64, Complex64, Vec<Complex64>)> = None;
    for _ in 0..cfg.samples {
        let k = rng.random_range(0..=MAX_BLASCHKE_ZEROS);
        let c = disk_point(rng, 1.0);
        let zeros: Vec<Complex64> = (0..k).map(|_| disk_point(rng, ZERO_RADIUS)).collect();
        let v = eval(c, &zeros)?;
        if incumbent.as_ref().is_none_or(|(b, _, _)| v > *b) {
            incumbent = Some((v, c, zeros));
        }
    }
    let (v, c, zeros) = incumbent.expect("samples ≥ 1");
    best.offer(v, || Argmax::Blaschke { c, zeros: zeros.clone() }, || "random".into());
    if cfg.refine_steps == 0 {
        return Ok(());
    }
    let mut start = vec![c];
    start.extend(&zeros);
    let objective = |x: &[f64]| {
        let v = from_polar_coords(x);
        eval(v[0], &v[1..]).unwrap_or(f64::NEG_INFINITY)
    };
    let mut bounds = vec![(0.0, 1.0), (-PI, PI)];
    for _ in &zeros {
        bounds.extend([(0.0, ZERO_RADIUS), (-PI, PI)]);
    }
    let (x, v) = refine(&objective, &polar_coords(&start), &bounds, cfg.refine_steps);
    let p = from_polar_coords(&x);
    best.offer(v, || Argmax::Blaschke { c: p[0], zeros: p[1..].to_vec() }, || "refined".into());
    Ok(())
}
