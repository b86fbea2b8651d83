//! Command-line front end.
//!
//! [`run`] does all the work on an already parsed [`CliRequest`] and returns
//! the exit code together with the text to emit, so it can be driven from
//! tests without a process boundary.

use std::fmt::Write as _;
use std::io::Read;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::Rational64;
use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::assumptions::{full_assumption_report_with, AssumptionReport, CheckerConfig, DEFAULT_QD_BUDGET};
use crate::fan::WeightedFan;
use crate::lattice::{convex_hull, LatticePoint, LatticePolygon};
use crate::oracle::{implicitize_dual, inflection_oracle, vertical_tangent_oracle, OracleConfig, OracleError};
use crate::plucker::{
    dual_area_closed, dual_fan, dual_polygon, inflection_count, plucker_report, vertical_tangent_count,
    PluckerError, PluckerReport,
};
use crate::svg;

pub const EXIT_OK: i32 = 0;
pub const EXIT_OTHER: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;
pub const EXIT_DEGENERATE: i32 = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Plücker-type invariants of the polygon
    Report,
    /// Dual fan and dual polygon
    Dual,
    /// Verdicts on the genericity assumptions, with evidence
    Assumptions,
    /// Formula counts against counts on a random curve
    Verify,
    /// Numerically recovered dual curve equation
    Implicitize,
    /// SVG picture of the polygon, dual fan and dual polygon
    Render,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Text,
    Svg,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolygonSource {
    Inline(String),
    File(PathBuf),
    Stdin,
}

impl PolygonSource {
    /// `-` is standard input, text starting with `[` or `{` is inline JSON,
    /// anything else a file path.
    pub fn from_arg(arg: &str) -> Self {
        let t = arg.trim_start();
        if arg == "-" {
            PolygonSource::Stdin
        } else if t.starts_with('[') || t.starts_with('{') {
            PolygonSource::Inline(arg.to_string())
        } else {
            PolygonSource::File(arg.into())
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CliRequest {
    pub command: Command,
    pub polygon: PolygonSource,
    pub oracle: OracleConfig,
    pub qd_budget: u64,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub advisory: bool,
}

impl CliRequest {
    pub fn new(command: Command, polygon: PolygonSource) -> Self {
        CliRequest {
            command,
            polygon,
            oracle: OracleConfig::default(),
            qd_budget: DEFAULT_QD_BUDGET,
            format: Format::Json,
            out: None,
            advisory: false,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "plucker", version, about = "Inflection and bitangent counts of generic plane curves from their Newton polygon")]
pub struct Args {
    #[command(subcommand)]
    pub command: Command,
    /// Polygon as a JSON point list, a file holding one, or `-` for stdin
    #[arg(long, global = true, default_value = "-")]
    pub polygon: String,
    /// Seed of the random curve used by the oracle
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Oracle coefficients are drawn from [-n, n]
    #[arg(long, global = true, default_value_t = 1000)]
    pub coeff_bound: u64,
    /// Defaults to svg for `render` and json otherwise
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write here instead of standard output
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Run the oracle even when the assumptions are not all verified
    #[arg(long, global = true)]
    pub advisory: bool,
    /// Partial subsets visited per Q_d search
    #[arg(long, global = true, env = "PLUCKER_BUDGET", default_value_t = DEFAULT_QD_BUDGET, hide = true)]
    pub budget: u64,
}

impl Args {
    pub fn into_request(self) -> CliRequest {
        let default_format = if self.command == Command::Render { Format::Svg } else { Format::Json };
        CliRequest {
            command: self.command,
            polygon: PolygonSource::from_arg(&self.polygon),
            oracle: OracleConfig { seed: self.seed, coeff_bound: self.coeff_bound, ..OracleConfig::default() },
            qd_budget: self.budget,
            format: self.format.unwrap_or(default_format),
            out: self.out,
            advisory: self.advisory,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliOutput {
    pub code: i32,
    pub body: String,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Formula(#[from] PluckerError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("{0}")]
    Other(String),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::Usage(_) => EXIT_PARSE,
            CliError::Oracle(e) if e.is_sample_failure() || matches!(e, OracleError::RetriesExhausted { .. }) => {
                EXIT_DEGENERATE
            }
            _ => EXIT_OTHER,
        }
    }
}

fn read_source(src: &PolygonSource) -> Result<String, CliError> {
    match src {
        PolygonSource::Inline(s) => Ok(s.clone()),
        PolygonSource::File(path) => std::fs::read_to_string(path)
            .map_err(|e| CliError::Parse(format!("cannot read {}: {e}", path.display()))),
        PolygonSource::Stdin => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| CliError::Parse(format!("cannot read standard input: {e}")))?;
            Ok(s)
        }
    }
}

fn point_from_json(v: &Value) -> Option<LatticePoint> {
    match v {
        Value::Array(xy) if xy.len() == 2 => Some(LatticePoint::new(xy[0].as_i64()?, xy[1].as_i64()?)),
        Value::Object(_) => serde_json::from_value(v.clone()).ok(),
        _ => None,
    }
}

/// Accepts `[[x, y], ...]`, `[{"x": .., "y": ..}, ...]`, or any object with
/// such a list under `"polygon"` (so emitted reports parse back). The
/// polygon is the convex hull of the points.
pub fn parse_polygon(text: &str) -> Result<LatticePolygon, String> {
    let v: Value = serde_json::from_str(text).map_err(|e| format!("invalid JSON: {e}"))?;
    let list = match &v {
        Value::Object(m) => m.get("polygon").ok_or("object has no \"polygon\" field")?,
        other => other,
    };
    let items = list.as_array().ok_or("expected a list of points")?;
    let points = items
        .iter()
        .map(|p| point_from_json(p).ok_or_else(|| format!("not a lattice point: {p}")))
        .collect::<Result<Vec<_>, _>>()?;
    convex_hull(&points).map_err(|e| e.to_string())
}

fn rational(r: Rational64) -> Value {
    Value::String(format!("{}/{}", r.numer(), r.denom()))
}

/// An integer when integral, `"p/q"` otherwise.
fn count(r: Rational64) -> Value {
    if r.is_integer() {
        json!(r.to_integer())
    } else {
        rational(r)
    }
}

fn vertices(p: &LatticePolygon) -> Value {
    Value::Array(p.vertices().iter().map(|v| json!([v.x, v.y])).collect())
}

fn fan_json(fan: &WeightedFan) -> Value {
    let mut m = Map::new();
    for (d, w) in fan.rays() {
        m.insert(format!("({},{})", d.u(), d.v()), json!(w));
    }
    Value::Object(m)
}

fn fan_text(fan: &WeightedFan) -> String {
    let rays: Vec<String> = fan.rays().iter().map(|(d, w)| format!("(({d}), {w})")).collect();
    format!("{{{}}}", rays.join(", "))
}

fn report_json(r: &PluckerReport) -> Value {
    json!({
        "polygon": vertices(&r.polygon),
        "vol": rational(r.vol),
        "inflections": r.inflections,
        "bitangents": count(r.bitangents),
        "dual_fan": fan_json(&r.dual_fan),
        "dual_polygon": vertices(&r.dual_polygon),
        "dual_vol": rational(r.dual_vol),
        "euler_char": r.euler_char,
        "genus": r.genus,
        "vertical_tangents": r.vertical_tangents,
        "warnings": r.warnings,
    })
}

fn report_text(r: &PluckerReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "polygon            {}", r.polygon);
    let _ = writeln!(s, "vol                {}", r.vol);
    let _ = writeln!(s, "inflections        {}", r.inflections);
    let _ = writeln!(s, "bitangents         {}", r.bitangents);
    let _ = writeln!(s, "dual fan           {}", fan_text(&r.dual_fan));
    let _ = writeln!(s, "dual polygon       {}", r.dual_polygon);
    let _ = writeln!(s, "dual vol           {}", r.dual_vol);
    let _ = writeln!(s, "euler char         {}", r.euler_char);
    let _ = writeln!(s, "genus              {}", r.genus);
    let _ = writeln!(s, "vertical tangents  {}", r.vertical_tangents);
    for w in &r.warnings {
        let _ = writeln!(s, "warning: {w}");
    }
    s
}

fn assumptions_json(p: &LatticePolygon, a: &AssumptionReport) -> Value {
    let witness = a.thin_witness.map(|w| {
        json!({ "k": w.k, "translation": [w.translation.x, w.translation.y], "rotation_power": w.rotation_power })
    });
    let evidence: Vec<Value> = a
        .evidence
        .iter()
        .map(|e| json!({ "check": e.check, "rotation": e.rotation, "held": e.held, "detail": e.detail }))
        .collect();
    json!({
        "polygon": vertices(p),
        "a1": a.a1.to_string(),
        "a2": a.a2.to_string(),
        "a3": a.a3.to_string(),
        "all_verified": a.all_verified(),
        "thin_witness": witness,
        "evidence": evidence,
    })
}

fn assumptions_text(p: &LatticePolygon, a: &AssumptionReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "polygon  {p}");
    let _ = writeln!(s, "a1       {}", a.a1);
    let _ = writeln!(s, "a2       {}", a.a2);
    let _ = writeln!(s, "a3       {}", a.a3);
    if let Some(w) = a.thin_witness {
        let _ = writeln!(s, "thin     k = {}, rotation power {}, translation {}", w.k, w.rotation_power, w.translation);
    }
    for e in &a.evidence {
        let _ = writeln!(s, "  {e}");
    }
    s
}

struct Check {
    name: &'static str,
    formula: i64,
    oracle: u64,
}

impl Check {
    fn pass(&self) -> bool {
        self.formula >= 0 && self.formula as u64 == self.oracle
    }
}

fn dispatch(req: &CliRequest, p: &LatticePolygon) -> Result<(i32, String), CliError> {
    let checker = CheckerConfig { qd_budget: req.qd_budget, ..CheckerConfig::default() };
    let text = req.format == Format::Text;
    let body = match req.command {
        Command::Report => {
            let r = plucker_report(p)?;
            if text { report_text(&r) } else { to_line(&report_json(&r)) }
        }
        Command::Dual => {
            let fan = dual_fan(p)?;
            let dual = dual_polygon(p)?;
            let vol = dual_area_closed(p)?;
            if text {
                format!("polygon       {p}\ndual fan      {}\ndual polygon  {dual}\ndual vol      {vol}\n", fan_text(&fan))
            } else {
                to_line(&json!({
                    "polygon": vertices(p),
                    "dual_fan": fan_json(&fan),
                    "dual_polygon": vertices(&dual),
                    "dual_vol": rational(vol),
                }))
            }
        }
        Command::Assumptions => {
            let a = full_assumption_report_with(p, &checker);
            if text { assumptions_text(p, &a) } else { to_line(&assumptions_json(p, &a)) }
        }
        Command::Verify => return verify(req, p, &checker),
        Command::Implicitize => {
            let eq = implicitize_dual(p, &req.oracle)?;
            if text {
                let mut s = format!("predicted  {}\nobserved   {}\nkernel gap {:.3e}\n", eq.predicted, eq.observed, eq.kernel_gap);
                for (e, c) in eq.coefficients.iter().rev() {
                    let _ = writeln!(s, "  a^{} b^{}  {c:+.9}", e.x, e.y);
                }
                s
            } else {
                let mut coeffs = Map::new();
                for (e, c) in eq.coefficients.iter().rev() {
                    coeffs.insert(format!("({},{})", e.x, e.y), json!(c));
                }
                to_line(&json!({
                    "polygon": vertices(p),
                    "seed": req.oracle.seed,
                    "predicted": vertices(&eq.predicted),
                    "observed": vertices(&eq.observed),
                    "coefficients": coeffs,
                    "kernel_gap": eq.kernel_gap,
                }))
            }
        }
        Command::Render => svg::render(p)?,
    };
    Ok((EXIT_OK, body))
}

fn verify(req: &CliRequest, p: &LatticePolygon, checker: &CheckerConfig) -> Result<(i32, String), CliError> {
    let a = full_assumption_report_with(p, checker);
    let verified = a.all_verified();
    if !verified && !req.advisory {
        return Err(CliError::Other(format!(
            "assumptions not all verified (a1 {}, a2 {}, a3 {}); pass --advisory to run the oracle anyway",
            a.a1, a.a2, a.a3
        )));
    }
    let checks = [
        Check { name: "inflections", formula: inflection_count(p)?, oracle: inflection_oracle(p, &req.oracle)? },
        Check {
            name: "vertical_tangents",
            formula: vertical_tangent_count(p)?,
            oracle: vertical_tangent_oracle(p, &req.oracle)?,
        },
    ];
    let pass = checks.iter().all(Check::pass);
    let code = if pass { EXIT_OK } else { EXIT_MISMATCH };
    let body = if req.format == Format::Text {
        let mut s = format!("polygon {p}\nseed {}\n", req.oracle.seed);
        if !verified {
            s.push_str("advisory: assumptions not all verified\n");
        }
        for c in &checks {
            let mark = if c.pass() { "PASS" } else { "FAIL" };
            let _ = writeln!(s, "{mark} {}: formula {} oracle {}", c.name, c.formula, c.oracle);
        }
        s
    } else {
        let list: Vec<Value> = checks
            .iter()
            .map(|c| json!({ "name": c.name, "formula": c.formula, "oracle": c.oracle, "pass": c.pass() }))
            .collect();
        to_line(&json!({
            "polygon": vertices(p),
            "seed": req.oracle.seed,
            "assumptions_verified": verified,
            "advisory": !verified,
            "checks": list,
            "pass": pass,
        }))
    };
    Ok((code, body))
}

fn to_line(v: &Value) -> String {
    let mut s = serde_json::to_string(v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn check_flags(req: &CliRequest) -> Result<(), CliError> {
    match (req.command, req.format) {
        (Command::Render, Format::Svg) => Ok(()),
        (Command::Render, f) => Err(CliError::Usage(format!("render only produces svg, not {}", format!("{f:?}").to_lowercase()))),
        (c, Format::Svg) => Err(CliError::Usage(format!("svg output is only available for render, not {}", format!("{c:?}").to_lowercase()))),
        _ => Ok(()),
    }
}

/// Execute one request. Errors become `{"error": ...}` in JSON mode and an
/// `error:` line otherwise.
pub fn run(req: &CliRequest) -> CliOutput {
    let result = check_flags(req)
        .and_then(|_| read_source(&req.polygon))
        .and_then(|text| parse_polygon(&text).map_err(CliError::Parse))
        .and_then(|p| dispatch(req, &p));
    match result {
        Ok((code, body)) => CliOutput { code, body },
        Err(e) => {
            let body = match req.format {
                Format::Json => to_line(&json!({ "error": e.to_string() })),
                _ => format!("error: {e}\n"),
            };
            CliOutput { code: e.code(), body }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn req(command: Command, polygon: &str) -> CliRequest {
        CliRequest::new(command, PolygonSource::Inline(polygon.into()))
    }

    fn json_of(out: &CliOutput) -> Value {
        serde_json::from_str(&out.body).unwrap()
    }

    #[test]
    fn polygon_sources() {
        assert_eq!(PolygonSource::from_arg("-"), PolygonSource::Stdin);
        assert_eq!(PolygonSource::from_arg(" [[0,0]]"), PolygonSource::Inline(" [[0,0]]".into()));
        assert_eq!(PolygonSource::from_arg("p.json"), PolygonSource::File("p.json".into()));
        let p = parse_polygon(r#"{"polygon": [[0,0],[2,0],[1,0],[0,2]]}"#).unwrap();
        assert_eq!(p, LatticePolygon::standard_triangle(2));
        let q = parse_polygon(r#"[{"x":0,"y":0},{"x":2,"y":0},{"x":0,"y":2}]"#).unwrap();
        assert_eq!(p, q);
        assert!(parse_polygon("[[0,0],[1]]").is_err());
        assert!(parse_polygon("[]").is_err());
    }

    #[test]
    fn report_on_quintic() {
        let out = run(&req(Command::Report, "[[0,0],[5,0],[0,5]]"));
        assert_eq!(out.code, EXIT_OK);
        let v = json_of(&out);
        assert_eq!(v["inflections"], 45);
        assert_eq!(v["bitangents"], 120);
        assert_eq!(v["vol"], "25/2");
    }

    #[test]
    fn error_codes() {
        let out = run(&req(Command::Report, "[[0,0],"));
        assert_eq!(out.code, EXIT_PARSE);
        assert!(json_of(&out)["error"].as_str().unwrap().contains("invalid JSON"));
        let mut r = req(Command::Report, "[[0,0],[1,0],[0,1]]");
        r.format = Format::Svg;
        assert_eq!(run(&r).code, EXIT_PARSE);
        let seg = run(&req(Command::Report, "[[0,0],[3,0]]"));
        assert_eq!(seg.code, EXIT_OTHER);
        let mut r = req(Command::Dual, "[[0,0],[3,0]]");
        r.format = Format::Text;
        assert!(run(&r).body.starts_with("error: "));
    }
}
