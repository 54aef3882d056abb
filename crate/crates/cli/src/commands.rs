use std::fmt::Write as _;
use std::path::Path;

use polyball::analysis::{InradiusReport, Series};
use polyball::hull::{Membership, Polytope, SignedPermutation};
use polyball::oracle::{brute_facets, chebyshev_center, containment_oracle, min_facet_distance};
use polyball::{facet_normal, inradius};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::Serialize;
use thiserror::Error;

use crate::format::sig15;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot write {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{0}")]
    Json(#[from] serde_json::Error),
    #[error("verification failed at m = {0}")]
    VerificationFailed(usize),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

impl From<polyball::Error> for CliError {
    fn from(e: polyball::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

pub type CliResult<T> = Result<T, CliError>;

/// Output of a command: what goes to stdout, and whether it counts as a pass.
pub struct Output {
    pub text: String,
    pub failure: Option<CliError>,
}

impl From<String> for Output {
    fn from(text: String) -> Self {
        Self { text, failure: None }
    }
}

pub fn inradius_cmd(m: usize, json: bool) -> CliResult<String> {
    let report = inradius(m)?;
    Ok(if json { serde_json::to_string_pretty(&report)? + "\n" } else { format!("{}\n", sig15(report.s)) })
}

#[derive(Debug, Clone, Serialize)]
pub struct TableRow {
    pub m: usize,
    pub s_m: f64,
    pub s_inv_sq: f64,
    pub lower: f64,
    pub upper: f64,
    pub asymptote: f64,
    pub ratio: f64,
}

impl TableRow {
    fn from_report(r: &InradiusReport) -> Option<Self> {
        Some(Self {
            m: r.m,
            s_m: r.s,
            s_inv_sq: r.s_inv_sq,
            lower: r.lower?,
            upper: r.upper?,
            asymptote: r.asymptote?,
            ratio: r.ratio()?,
        })
    }

    fn csv_line(&self) -> String {
        let fields = [self.s_m, self.s_inv_sq, self.lower, self.upper, self.asymptote, self.ratio].map(sig15);
        format!("{},{}\n", self.m, fields.join(","))
    }
}

pub const CSV_HEADER: &str = "m,s_m,s_inv_sq,lower,upper,asymptote,ratio";

/// Which dimensions `table` reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Step {
    PowersOfTwo,
    Every(usize),
}

impl std::str::FromStr for Step {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "pow2" => Ok(Step::PowersOfTwo),
            "all" => Ok(Step::Every(1)),
            n => match n.parse::<usize>() {
                Ok(k) if k > 0 => Ok(Step::Every(k)),
                _ => Err(format!("invalid step '{s}': expected pow2, all or a positive integer")),
            },
        }
    }
}

impl Step {
    fn selects(self, m: usize) -> bool {
        match self {
            Step::PowersOfTwo => m.is_power_of_two(),
            Step::Every(k) => (m - 2).is_multiple_of(k),
        }
    }
}

pub fn table_rows(max: usize, step: Step) -> CliResult<Vec<TableRow>> {
    if max < 2 {
        return Err(CliError::Usage(format!("--max must be ≥ 2, got {max}")));
    }
    if max > polyball::analysis::MAX_INRADIUS_DIM {
        return Err(polyball::Error::DimensionTooLarge { max: polyball::analysis::MAX_INRADIUS_DIM, got: max }.into());
    }
    Ok(Series::new()
        .skip(1)
        .take(max - 1)
        .filter(|p| step.selects(p.m))
        .filter_map(|p| TableRow::from_report(&p.into()))
        .collect())
}

pub fn table_cmd(max: usize, step: Step, json: bool, out: Option<&Path>) -> CliResult<String> {
    let rows = table_rows(max, step)?;
    let body = if json {
        serde_json::to_string_pretty(&rows)? + "\n"
    } else {
        let mut s = format!("{CSV_HEADER}\n");
        rows.iter().for_each(|r| s.push_str(&r.csv_line()));
        s
    };
    match out {
        Some(path) => {
            std::fs::write(path, &body).map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
            Ok(String::new())
        }
        None => Ok(body),
    }
}

pub fn parse_point(list: &str) -> CliResult<Vec<f64>> {
    let point = list
        .split(',')
        .map(|tok| {
            let tok = tok.trim();
            tok.parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .ok_or_else(|| CliError::Usage(format!("invalid coordinate '{tok}'")))
        })
        .collect::<CliResult<Vec<_>>>()?;
    Ok(point)
}

#[derive(Serialize)]
struct GaugeReport {
    point: Vec<f64>,
    gauge: f64,
    tol: f64,
    membership: Membership,
}

pub fn gauge_cmd(list: &str, tol: f64, json: bool) -> CliResult<String> {
    let point = parse_point(list)?;
    let poly = Polytope::new(point.len())?;
    let gauge = poly.gauge(&point)?;
    let membership = poly.membership(&point, tol)?;
    Ok(if json {
        serde_json::to_string_pretty(&GaugeReport { point, gauge, tol, membership })? + "\n"
    } else {
        format!("gauge: {}\nmembership: {membership}\n", sig15(gauge))
    })
}

/// Random points per dimension in the membership check of `verify`.
const VERIFY_POINTS: usize = 1000;
const VERIFY_SEED: u64 = 0x00c0_ffee;
/// Points this close to the boundary are not compared.
const MEMBERSHIP_BAND: f64 = 1e-8;

pub fn verify_cmd(m: usize, tol: f64) -> CliResult<Output> {
    if tol.is_nan() || tol < 0.0 {
        return Err(CliError::Usage(format!("--tol must be nonnegative, got {tol}")));
    }
    let facets = brute_facets(m)?;
    let formula = inradius(m)?.s;
    let mut text = String::new();
    let mut passed = 0;
    let mut check = |ok: bool, line: String| {
        passed += usize::from(ok);
        let _ = writeln!(text, "[{}] {line}", if ok { "PASS" } else { "FAIL" });
    };

    let expected = SignedPermutation::group_order(m) as usize;
    check(facets.len() == expected, format!("facet count: facets={} (expected 2^m·m! = {expected})", facets.len()));

    let u = facet_normal(m)?;
    let deviation = facets
        .iter()
        .map(|p| {
            let mut n: Vec<f64> = p.normal.iter().map(|v| (v / p.offset).abs()).collect();
            n.sort_by(|a, b| b.total_cmp(a));
            n.iter().zip(u.coords()).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max)
        })
        .fold(0.0, f64::max);
    check(deviation <= tol, format!("facet normals canonicalize to u: max deviation {deviation:.3e}"));

    let ds = (min_facet_distance(&facets) - formula).abs();
    check(ds <= tol, format!("oracle inradius vs formula: |Δs| = {ds:.3e}"));

    match chebyshev_center(&facets) {
        Ok(r) => {
            let off = r.center.iter().map(|c| c.abs()).fold(0.0, f64::max);
            let dr = (r.radius - formula).abs();
            check(off <= tol && dr <= tol, format!("Chebyshev center: |c| = {off:.3e}, |Δr| = {dr:.3e}"));
        }
        Err(e) => check(false, format!("Chebyshev center: {e}")),
    }

    let poly = Polytope::new(m)?;
    let mut rng = ChaCha8Rng::seed_from_u64(VERIFY_SEED);
    let mut disagreements = 0;
    for _ in 0..VERIFY_POINTS {
        let dir: Vec<f64> = (0..m).map(|_| rng.sample(StandardNormal)).collect();
        let len = dir.iter().map(|v| v * v).sum::<f64>().sqrt();
        let r = 1.5 * rng.random::<f64>().powf(1.0 / m as f64);
        let x: Vec<f64> = dir.iter().map(|v| v * r / len).collect();
        if (poly.gauge(&x)? - 1.0).abs() <= MEMBERSHIP_BAND {
            continue;
        }
        if poly.membership(&x, MEMBERSHIP_BAND)? != containment_oracle(&x, &facets) {
            disagreements += 1;
        }
    }
    check(
        disagreements == 0,
        format!("membership agreement: {VERIFY_POINTS} random points, {disagreements} disagreements"),
    );

    let _ = writeln!(text, "verify m={m}: {passed}/5 checks passed");
    let failure = (passed != 5).then_some(CliError::VerificationFailed(m));
    Ok(Output { text, failure })
}

pub fn facets_cmd(m: usize, count_only: bool) -> CliResult<String> {
    let orbit = Polytope::new(m)?.facet_orbit()?;
    let mut text = format!("{}\n", orbit.len());
    if m > polyball::oracle::ORACLE_MAX_DIM {
        text.push_str("# count from the free orbit of u; not checked by the brute-force oracle (m > 4)\n");
    }
    if !count_only {
        for n in &orbit {
            let coords: Vec<String> = n.coords().iter().map(|&c| sig15(c)).collect();
            text.push_str(&coords.join(","));
            text.push('\n');
        }
    }
    Ok(text)
}
