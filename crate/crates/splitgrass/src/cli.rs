//! Command-line front end.
//!
//! Three subcommands: `secant` samples secant-variety dimensions (optionally
//! surveying ranges of parameters), `identify` converts a polynomial to its
//! Pluecker vector or back, and `verify` runs the scenario battery from
//! [`crate::checks`]. Reports render as text, JSON, or (for secant surveys)
//! CSV. Exit codes: 0 for success or an all-pass verification, 1 for a
//! verification failure (witnesses included in the output), 2 for usage or
//! parse errors.
//!
//! There is no environment-variable configuration. A JSON file passed via
//! `--config` supplies defaults for any flag; explicit flags win. For a
//! fixed command, configuration, and seed the JSON output is byte-identical
//! except for its `timestamp` field.

use std::fs;
use std::path::PathBuf;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::checks::{
    check_binary_forms, check_codim_grid, check_ehrenborg_cases, check_five_lines,
    check_osculating_membership, check_secancy_correspondence, check_secant_locus,
    check_tangent_pencils, check_triple_tangent_planes, standard_suite, ScenarioResult,
};
use crate::error::{Error, Result};
use crate::exactla::{FieldSpec, DEFAULT_PRIME};
use crate::grassmann::parse_pluecker;
use crate::polyalg::parse_poly;
use crate::terracini::{
    secant_dimension, secant_dimension_confirmed, SecantOptions, SecantReport, VarietySpec,
};
use crate::verograss::Identification;

const DEFAULT_TRIALS: u32 = 20;
const RATIONAL_CONFIRM_TRIALS: u32 = 3;
const DEFAULT_BOUND: i64 = 50;
const DEFAULT_LAMBDAS: [i64; 2] = [2, 3];

/// Exact secant-variety dimensions, the banded-minor identification between
/// degree-d forms and Pluecker vectors, and a verification suite.
#[derive(Debug, Parser)]
#[command(name = "splitgrass", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sample the dimension of the s-th secant variety of a split,
    /// Veronese, or Grassmann variety.
    Secant(SecantArgs),
    /// Convert a polynomial to its Pluecker vector, or a Pluecker vector
    /// (plain `[a, b, ...]` or labeled `[p_{012}=a, ...]`) to a polynomial.
    Identify(IdentifyArgs),
    /// Run consistency scenarios; exits 0 only when every scenario passes.
    Verify(VerifyArgs),
}

/// Output rendering.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
}

impl OutputFormat {
    fn label(self) -> &'static str {
        match self {
            OutputFormat::Text => "text",
            OutputFormat::Json => "json",
            OutputFormat::Csv => "csv",
        }
    }
}

#[derive(Debug, Args, Default)]
pub struct SecantArgs {
    /// Variety family: split, veronese, or grassmann.
    #[arg(long)]
    pub variety: Option<String>,
    /// Projective source dimension n (split/veronese). Accepts `a..b`.
    #[arg(long)]
    pub n: Option<String>,
    /// Degree d (split/veronese). Accepts `a..b`.
    #[arg(long)]
    pub d: Option<String>,
    /// Plane dimension k (grassmann). Accepts `a..b`.
    #[arg(long)]
    pub k: Option<String>,
    /// Ambient projective dimension N (grassmann). Accepts `a..b`.
    #[arg(long = "N")]
    pub ambient: Option<String>,
    /// Number of secant points s. Accepts `a..b`.
    #[arg(long)]
    pub s: Option<String>,
    /// Sampling trials per computation (default 20).
    #[arg(long)]
    pub trials: Option<u32>,
    /// RNG seed (default 0).
    #[arg(long)]
    pub seed: Option<u64>,
    /// Coordinate bound for random samples (default 50).
    #[arg(long)]
    pub bound: Option<i64>,
    /// `q` for rational arithmetic, `p:PRIME` for a prime field. Default:
    /// prime field plus a rational confirmation pass.
    #[arg(long)]
    pub field: Option<String>,
    /// Output format (default text). CSV is available for secant surveys.
    #[arg(long, value_enum)]
    pub format: Option<OutputFormat>,
    /// Write the report to this path instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// JSON file supplying defaults for any flag of this subcommand.
    #[arg(long)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Args, Default)]
pub struct IdentifyArgs {
    /// The polynomial (`x0^3 - 2*x0*x1*x2`) or Pluecker vector (`[...]`).
    pub input: Option<String>,
    /// Projective source dimension n.
    #[arg(long)]
    pub n: Option<String>,
    /// Degree d.
    #[arg(long)]
    pub d: Option<String>,
    /// Arithmetic field; only `q` is supported here.
    #[arg(long)]
    pub field: Option<String>,
    /// Output format (default text).
    #[arg(long, value_enum)]
    pub format: Option<OutputFormat>,
    /// Write the report to this path instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// JSON file supplying defaults for any flag of this subcommand.
    #[arg(long)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Args, Default)]
pub struct VerifyArgs {
    /// Scenario id, or `all`. Known ids: secant-locus, tangent-triples,
    /// five-lines, tangent-pencils, osculating-membership, secancy,
    /// binary-forms, ehrenborg, codim-formula.
    pub scenario: Option<String>,
    /// Restrict to one n (scenario-dependent; n_max for codim-formula).
    #[arg(long)]
    pub n: Option<String>,
    /// Restrict to one d (tangent-pencils only).
    #[arg(long)]
    pub d: Option<String>,
    /// Sampling trials for dimension scenarios (default 20).
    #[arg(long)]
    pub trials: Option<u32>,
    /// RNG seed (default 0).
    #[arg(long)]
    pub seed: Option<u64>,
    /// Output format (default text).
    #[arg(long, value_enum)]
    pub format: Option<OutputFormat>,
    /// Write the report to this path instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// JSON file supplying defaults for any flag of this subcommand.
    #[arg(long)]
    pub config: Option<PathBuf>,
}

/// A finished run: rendered report, exit code, optional output path.
#[derive(Debug)]
pub struct Outcome {
    pub rendered: String,
    pub exit_code: i32,
    pub out_path: Option<PathBuf>,
}

/// Parses `std::env::args`, executes, delivers output. Returns the process
/// exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(&cli) {
        Ok(outcome) => {
            if let Some(path) = &outcome.out_path {
                if let Err(e) = fs::write(path, &outcome.rendered) {
                    eprintln!("error: {e}");
                    return 2;
                }
            } else {
                print!("{}", outcome.rendered);
            }
            outcome.exit_code
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

/// Runs one parsed invocation without touching stdout.
pub fn execute(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Secant(args) => exec_secant(args),
        Command::Identify(args) => exec_identify(args),
        Command::Verify(args) => exec_verify(args),
    }
}

// ---------------------------------------------------------------------------
// config-file defaults
// ---------------------------------------------------------------------------

fn load_config(path: &Option<PathBuf>) -> Result<Value> {
    match path {
        None => Ok(Value::Null),
        Some(p) => {
            let text = fs::read_to_string(p)?;
            let value: Value = serde_json::from_str(&text)
                .map_err(|e| Error::Parse(format!("config file: {e}")))?;
            if !value.is_object() {
                return Err(Error::Parse("config file must hold a JSON object".into()));
            }
            Ok(value)
        }
    }
}

fn cfg_string(cfg: &Value, key: &str) -> Option<String> {
    match cfg.get(key) {
        Some(Value::String(s)) => Some(s.clone()),
        Some(Value::Number(n)) => Some(n.to_string()),
        Some(Value::Bool(b)) => Some(b.to_string()),
        _ => None,
    }
}

fn resolve(flag: &Option<String>, cfg: &Value, key: &str) -> Option<String> {
    flag.clone().or_else(|| cfg_string(cfg, key))
}

fn resolve_u32(flag: Option<u32>, cfg: &Value, key: &str, default: u32) -> Result<u32> {
    match flag {
        Some(v) => Ok(v),
        None => match cfg_string(cfg, key) {
            Some(text) => text
                .parse()
                .map_err(|_| Error::Parse(format!("config key `{key}`: expected an integer"))),
            None => Ok(default),
        },
    }
}

fn resolve_u64(flag: Option<u64>, cfg: &Value, key: &str, default: u64) -> Result<u64> {
    match flag {
        Some(v) => Ok(v),
        None => match cfg_string(cfg, key) {
            Some(text) => text
                .parse()
                .map_err(|_| Error::Parse(format!("config key `{key}`: expected an integer"))),
            None => Ok(default),
        },
    }
}

fn resolve_i64(flag: Option<i64>, cfg: &Value, key: &str, default: i64) -> Result<i64> {
    match flag {
        Some(v) => Ok(v),
        None => match cfg_string(cfg, key) {
            Some(text) => text
                .parse()
                .map_err(|_| Error::Parse(format!("config key `{key}`: expected an integer"))),
            None => Ok(default),
        },
    }
}

fn resolve_format(flag: Option<OutputFormat>, cfg: &Value, key: &str) -> Result<OutputFormat> {
    match flag {
        Some(f) => Ok(f),
        None => match cfg_string(cfg, key).as_deref() {
            Some("text") => Ok(OutputFormat::Text),
            Some("json") => Ok(OutputFormat::Json),
            Some("csv") => Ok(OutputFormat::Csv),
            Some(other) => Err(Error::Parse(format!("config key `{key}`: unknown format `{other}`"))),
            None => Ok(OutputFormat::Text),
        },
    }
}

fn cfg_i64_array(cfg: &Value, key: &str) -> Option<Vec<i64>> {
    cfg.get(key)?.as_array().map(|items| {
        items.iter().filter_map(|v| v.as_i64()).collect()
    })
}

// ---------------------------------------------------------------------------
// value parsing
// ---------------------------------------------------------------------------

/// Parses `"7"` into `[7]` and `"2..5"` into `[2, 3, 4, 5]` (both ends
/// inclusive).
fn parse_range(text: &str, what: &str) -> Result<Vec<usize>> {
    let parse_one = |part: &str| -> Result<usize> {
        part.trim()
            .parse()
            .map_err(|_| Error::Parse(format!("{what}: expected an integer, got `{part}`")))
    };
    match text.split_once("..") {
        Some((a, b)) => {
            let start = parse_one(a)?;
            let end = parse_one(b)?;
            if end < start {
                return Err(Error::Parse(format!("{what}: empty range `{text}`")));
            }
            Ok((start..=end).collect())
        }
        None => Ok(vec![parse_one(text)?]),
    }
}

fn parse_single(text: &str, what: &str) -> Result<usize> {
    let vals = parse_range(text, what)?;
    if vals.len() != 1 {
        return Err(Error::Parse(format!("{what}: a single value is required here")));
    }
    Ok(vals[0])
}

/// Which field(s) a secant computation runs in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum FieldMode {
    /// Prime-field sampling plus a rational confirmation pass.
    Confirmed,
    RationalOnly,
    PrimeOnly(u64),
}

impl FieldMode {
    fn label(self) -> String {
        match self {
            FieldMode::Confirmed => format!("prime:{DEFAULT_PRIME}+rational"),
            FieldMode::RationalOnly => "rational".into(),
            FieldMode::PrimeOnly(p) => format!("prime:{p}"),
        }
    }
}

fn parse_field_mode(text: Option<&str>) -> Result<FieldMode> {
    match text {
        None => Ok(FieldMode::Confirmed),
        Some("q") => Ok(FieldMode::RationalOnly),
        Some(other) => match other.strip_prefix("p:") {
            Some(num) => {
                let p: u64 = num
                    .parse()
                    .map_err(|_| Error::Parse(format!("--field: bad prime `{num}`")))?;
                FieldSpec::Prime(p).validate()?;
                Ok(FieldMode::PrimeOnly(p))
            }
            None => Err(Error::Parse(format!(
                "--field: expected `q` or `p:PRIME`, got `{other}`"
            ))),
        },
    }
}

// ---------------------------------------------------------------------------
// secant
// ---------------------------------------------------------------------------

fn run_one_secant(
    variety: VarietySpec,
    s: usize,
    mode: FieldMode,
    trials: u32,
    seed: u64,
    bound: i64,
) -> Result<SecantReport> {
    match mode {
        FieldMode::Confirmed => {
            let opts = SecantOptions {
                trials,
                field: FieldSpec::Prime(DEFAULT_PRIME),
                seed,
                bound,
            };
            secant_dimension_confirmed(variety, s, &opts, RATIONAL_CONFIRM_TRIALS)
        }
        FieldMode::RationalOnly => {
            let opts = SecantOptions { trials, field: FieldSpec::Rational, seed, bound };
            secant_dimension(variety, s, &opts)
        }
        FieldMode::PrimeOnly(p) => {
            let opts = SecantOptions { trials, field: FieldSpec::Prime(p), seed, bound };
            secant_dimension(variety, s, &opts)
        }
    }
}

fn exec_secant(args: &SecantArgs) -> Result<Outcome> {
    let cfg = load_config(&args.config)?;
    let variety = resolve(&args.variety, &cfg, "variety")
        .ok_or_else(|| Error::Parse("--variety is required".into()))?;
    let s_text =
        resolve(&args.s, &cfg, "s").ok_or_else(|| Error::Parse("--s is required".into()))?;
    let s_vals = parse_range(&s_text, "--s")?;
    let trials = resolve_u32(args.trials, &cfg, "trials", DEFAULT_TRIALS)?;
    let seed = resolve_u64(args.seed, &cfg, "seed", 0)?;
    let bound = resolve_i64(args.bound, &cfg, "bound", DEFAULT_BOUND)?;
    let mode = parse_field_mode(resolve(&args.field, &cfg, "field").as_deref())?;
    let format = resolve_format(args.format, &cfg, "format")?;

    let mut config = Map::new();
    config.insert("variety".into(), json!(variety));
    config.insert("s".into(), json!(s_vals));
    config.insert("trials".into(), json!(trials));
    if mode == FieldMode::Confirmed {
        config.insert("rational_trials".into(), json!(RATIONAL_CONFIRM_TRIALS));
    }
    config.insert("seed".into(), json!(seed));
    config.insert("bound".into(), json!(bound));
    config.insert("field".into(), json!(mode.label()));
    config.insert("format".into(), json!(format.label()));

    let mut varieties: Vec<VarietySpec> = Vec::new();
    match variety.as_str() {
        "split" | "veronese" => {
            let n_text = resolve(&args.n, &cfg, "n")
                .ok_or_else(|| Error::Parse("--n is required for this variety".into()))?;
            let d_text = resolve(&args.d, &cfg, "d")
                .ok_or_else(|| Error::Parse("--d is required for this variety".into()))?;
            let n_vals = parse_range(&n_text, "--n")?;
            let d_vals = parse_range(&d_text, "--d")?;
            config.insert("n".into(), json!(n_vals));
            config.insert("d".into(), json!(d_vals));
            for &n in &n_vals {
                for &d in &d_vals {
                    varieties.push(if variety == "split" {
                        VarietySpec::Split { n, d }
                    } else {
                        VarietySpec::Veronese { n, d }
                    });
                }
            }
        }
        "grassmann" => {
            let k_text = resolve(&args.k, &cfg, "k")
                .ok_or_else(|| Error::Parse("--k is required for grassmann".into()))?;
            let cap_text = resolve(&args.ambient, &cfg, "N")
                .ok_or_else(|| Error::Parse("--N is required for grassmann".into()))?;
            let k_vals = parse_range(&k_text, "--k")?;
            let cap_vals = parse_range(&cap_text, "--N")?;
            config.insert("k".into(), json!(k_vals));
            config.insert("N".into(), json!(cap_vals));
            for &k in &k_vals {
                for &cap in &cap_vals {
                    varieties.push(VarietySpec::Grassmann { k, n: cap });
                }
            }
        }
        other => {
            return Err(Error::Parse(format!(
                "unknown variety `{other}` (expected split, veronese, or grassmann)"
            )))
        }
    }
    for v in &varieties {
        v.validate()?;
    }
    if s_vals.iter().any(|&s| s == 0) {
        return Err(Error::Parse("--s must be at least 1".into()));
    }

    let mut reports: Vec<SecantReport> = Vec::new();
    for &v in &varieties {
        for &s in &s_vals {
            reports.push(run_one_secant(v, s, mode, trials, seed, bound)?);
        }
    }
    reports.sort_by_key(|r| (r.variety.to_string(), r.s));

    let rendered = match format {
        OutputFormat::Json => {
            let results: Vec<Value> = reports
                .iter()
                .map(|r| serde_json::to_value(r).expect("report serializes"))
                .collect();
            render_json("secant", Value::Object(config), results)
        }
        OutputFormat::Csv => secant_csv(&reports),
        OutputFormat::Text => secant_text(&reports),
    };
    Ok(Outcome { rendered, exit_code: 0, out_path: args.out.clone() })
}

fn secant_csv(reports: &[SecantReport]) -> String {
    let mut out = String::from(
        "variety,s,ambient_proj_dim,variety_proj_dim,expected_proj_dim,computed_proj_dim,defect_observed,defective_observed,trials,field,seed,rational_confirmed\n",
    );
    for r in reports {
        let confirmed = match r.rational_confirmed {
            Some(true) => "true",
            Some(false) => "false",
            None => "",
        };
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{},{},{}\n",
            r.variety,
            r.s,
            r.ambient_proj_dim,
            r.variety_proj_dim,
            r.expected_proj_dim,
            r.computed_proj_dim,
            r.defect_observed,
            r.defective_observed,
            r.trials,
            r.field,
            r.seed,
            confirmed,
        ));
    }
    out
}

fn secant_text(reports: &[SecantReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let status = if r.computed_proj_dim == r.ambient_proj_dim {
            "fills the ambient space".to_string()
        } else if r.defective_observed {
            format!("defect {} observed", r.defect_observed)
        } else {
            "reaches the expected dimension".to_string()
        };
        let confirmed = match r.rational_confirmed {
            Some(true) => ", confirmed over the rationals",
            Some(false) => ", NOT confirmed over the rationals",
            None => "",
        };
        out.push_str(&format!(
            "{} s={}: computed {} of expected {} (ambient {}), {}{} [trials {}, field {}, seed {}]\n",
            r.variety,
            r.s,
            r.computed_proj_dim,
            r.expected_proj_dim,
            r.ambient_proj_dim,
            status,
            confirmed,
            r.trials,
            r.field,
            r.seed,
        ));
    }
    out
}

// ---------------------------------------------------------------------------
// identify
// ---------------------------------------------------------------------------

fn exec_identify(args: &IdentifyArgs) -> Result<Outcome> {
    let cfg = load_config(&args.config)?;
    let input = resolve(&args.input, &cfg, "input")
        .ok_or_else(|| Error::Parse("an input polynomial or Pluecker vector is required".into()))?;
    let n_text =
        resolve(&args.n, &cfg, "n").ok_or_else(|| Error::Parse("--n is required".into()))?;
    let d_text =
        resolve(&args.d, &cfg, "d").ok_or_else(|| Error::Parse("--d is required".into()))?;
    let n = parse_single(&n_text, "--n")?;
    let d = parse_single(&d_text, "--d")?;
    if let Some(field) = resolve(&args.field, &cfg, "field") {
        if field != "q" {
            return Err(Error::Parse(
                "identify runs over the rationals; only `--field q` is accepted".into(),
            ));
        }
    }
    let format = resolve_format(args.format, &cfg, "format")?;
    if format == OutputFormat::Csv {
        return Err(Error::Parse("csv output is only available for secant surveys".into()));
    }
    let field = FieldSpec::Rational;
    let ident = Identification::get(n, d, field)?;

    let trimmed = input.trim().to_string();
    let (direction, output, decomposable, round_trip) = if trimmed.starts_with('[') {
        let pv = parse_pluecker(&trimmed, n + d, d)?;
        let poly = ident.polynomial_of(&pv)?;
        let back = ident.pluecker_of(&poly)?;
        let round_trip = back.coords() == pv.coords();
        ("pluecker-to-polynomial", poly.to_string(), pv.is_decomposable(), round_trip)
    } else {
        let poly = parse_poly(&trimmed, n + 1)?;
        if poly.degree() != d as u32 {
            return Err(Error::Parse(format!(
                "polynomial has degree {}, expected {d}",
                poly.degree()
            )));
        }
        let pv = ident.pluecker_of(&poly)?;
        let back = ident.polynomial_of(&pv)?;
        let round_trip = back == poly;
        let rendered_pv =
            if n + d <= 10 { pv.to_labeled_string()? } else { pv.to_string() };
        ("polynomial-to-pluecker", rendered_pv, pv.is_decomposable(), round_trip)
    };

    let mut config = Map::new();
    config.insert("n".into(), json!(n));
    config.insert("d".into(), json!(d));
    config.insert("field".into(), json!("rational"));
    config.insert("format".into(), json!(format.label()));
    config.insert("input".into(), json!(trimmed));

    let result = json!({
        "direction": direction,
        "input": trimmed,
        "output": output,
        "decomposable": decomposable,
        "round_trip": round_trip,
    });

    let rendered = match format {
        OutputFormat::Json => render_json("identify", Value::Object(config), vec![result]),
        OutputFormat::Csv => unreachable!("rejected above"),
        OutputFormat::Text => {
            let note = if decomposable { "decomposable" } else { "not decomposable" };
            format!("{output}\n({note}; round trip exact: {round_trip})\n")
        }
    };
    Ok(Outcome { rendered, exit_code: 0, out_path: args.out.clone() })
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

fn exec_verify(args: &VerifyArgs) -> Result<Outcome> {
    let cfg = load_config(&args.config)?;
    let scenario = resolve(&args.scenario, &cfg, "scenario")
        .ok_or_else(|| Error::Parse("a scenario id (or `all`) is required".into()))?;
    let n_over = match resolve(&args.n, &cfg, "n") {
        Some(text) => Some(parse_single(&text, "--n")?),
        None => None,
    };
    let d_over = match resolve(&args.d, &cfg, "d") {
        Some(text) => Some(parse_single(&text, "--d")?),
        None => None,
    };
    let trials = resolve_u32(args.trials, &cfg, "trials", DEFAULT_TRIALS)?;
    let seed = resolve_u64(args.seed, &cfg, "seed", 0)?;
    let lambdas = cfg_i64_array(&cfg, "lambdas").unwrap_or_else(|| DEFAULT_LAMBDAS.to_vec());
    let format = resolve_format(args.format, &cfg, "format")?;
    if format == OutputFormat::Csv {
        return Err(Error::Parse("csv output is only available for secant surveys".into()));
    }

    let results = run_scenarios(&scenario, n_over, d_over, trials, seed, &lambdas)?;
    let all_pass = results.iter().all(|r| r.passed);

    let mut config = Map::new();
    config.insert("scenario".into(), json!(scenario));
    if let Some(n) = n_over {
        config.insert("n".into(), json!(n));
    }
    if let Some(d) = d_over {
        config.insert("d".into(), json!(d));
    }
    config.insert("trials".into(), json!(trials));
    config.insert("seed".into(), json!(seed));
    config.insert("lambdas".into(), json!(lambdas));
    config.insert("format".into(), json!(format.label()));

    let rendered = match format {
        OutputFormat::Json => {
            let values: Vec<Value> = results
                .iter()
                .map(|r| serde_json::to_value(r).expect("scenario result serializes"))
                .collect();
            render_json("verify", Value::Object(config), values)
        }
        OutputFormat::Csv => unreachable!("rejected above"),
        OutputFormat::Text => verify_text(&results),
    };
    Ok(Outcome {
        rendered,
        exit_code: if all_pass { 0 } else { 1 },
        out_path: args.out.clone(),
    })
}

fn ns_or(default: &[usize], n_over: Option<usize>) -> Vec<usize> {
    match n_over {
        Some(n) => vec![n],
        None => default.to_vec(),
    }
}

fn run_scenarios(
    id: &str,
    n_over: Option<usize>,
    d_over: Option<usize>,
    trials: u32,
    seed: u64,
    lambdas: &[i64],
) -> Result<Vec<ScenarioResult>> {
    let mut results: Vec<ScenarioResult> = Vec::new();
    match id {
        "secant-locus" => {
            for n in ns_or(&[2, 3], n_over) {
                results.push(check_secant_locus(n, 50, seed)?);
            }
        }
        "tangent-triples" => {
            for n in ns_or(&[2, 3, 4], n_over) {
                results.push(check_triple_tangent_planes(n, 8, seed)?);
            }
        }
        "five-lines" => results.push(check_five_lines(lambdas)?),
        "tangent-pencils" => {
            for n in ns_or(&[2, 3], n_over) {
                for d in ns_or(&[2, 3], d_over) {
                    results.push(check_tangent_pencils(n, d, 4, seed)?);
                }
            }
        }
        "osculating-membership" => {
            for n in ns_or(&[2, 3], n_over) {
                results.push(check_osculating_membership(n, 4, seed)?);
            }
        }
        "secancy" => {
            for n in ns_or(&[2, 3, 4, 5], n_over) {
                results.push(check_secancy_correspondence(n, 100, seed)?);
            }
        }
        "binary-forms" => {
            for n in ns_or(&[2, 3], n_over) {
                results.push(check_binary_forms(n, 12, seed)?);
            }
        }
        "ehrenborg" => {
            results.push(check_ehrenborg_cases(trials, RATIONAL_CONFIRM_TRIALS, seed)?)
        }
        "codim-formula" => results.push(check_codim_grid(
            n_over.unwrap_or(6),
            trials,
            RATIONAL_CONFIRM_TRIALS,
            6,
            seed,
        )?),
        "all" => {
            results = standard_suite(seed)?;
            results.push(check_ehrenborg_cases(trials, RATIONAL_CONFIRM_TRIALS, seed)?);
            results.push(check_codim_grid(6, trials, RATIONAL_CONFIRM_TRIALS, 6, seed)?);
        }
        other => {
            return Err(Error::Parse(format!(
                "unknown scenario `{other}`; see `verify --help` for the list"
            )))
        }
    }
    results.sort_by(|a, b| {
        (a.scenario.as_str(), a.params.to_string())
            .cmp(&(b.scenario.as_str(), b.params.to_string()))
    });
    Ok(results)
}

fn verify_text(results: &[ScenarioResult]) -> String {
    let mut out = String::new();
    let mut passed = 0;
    for r in results {
        if r.passed {
            passed += 1;
        }
        out.push_str(&format!(
            "{} {} {}\n",
            if r.passed { "PASS" } else { "FAIL" },
            r.scenario,
            r.params
        ));
        for w in &r.witnesses {
            out.push_str(&format!("    witness: {w}\n"));
        }
    }
    out.push_str(&format!("{passed}/{} scenarios passed\n", results.len()));
    out
}

// ---------------------------------------------------------------------------
// rendering
// ---------------------------------------------------------------------------

fn render_json(command: &str, config: Value, results: Vec<Value>) -> String {
    let timestamp = SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0);
    let doc = json!({
        "command": command,
        "config": config,
        "results": results,
        "timestamp": timestamp,
    });
    let mut text = serde_json::to_string_pretty(&doc).expect("report serializes");
    text.push('\n');
    text
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Cli {
        Cli::try_parse_from(args).expect("argument parse")
    }

    fn strip_timestamp(text: &str) -> String {
        text.lines().filter(|l| !l.contains("\"timestamp\"")).collect::<Vec<_>>().join("\n")
    }

    #[test]
    fn range_syntax_parses_inclusively() {
        assert_eq!(parse_range("7", "x").unwrap(), vec![7]);
        assert_eq!(parse_range("2..5", "x").unwrap(), vec![2, 3, 4, 5]);
        assert!(parse_range("5..2", "x").is_err());
        assert!(parse_range("a", "x").is_err());
        assert!(parse_single("2..5", "x").is_err());
    }

    #[test]
    fn field_flag_parses_modes() {
        assert_eq!(parse_field_mode(None).unwrap(), FieldMode::Confirmed);
        assert_eq!(parse_field_mode(Some("q")).unwrap(), FieldMode::RationalOnly);
        assert_eq!(
            parse_field_mode(Some("p:15485863")).unwrap(),
            FieldMode::PrimeOnly(15485863)
        );
        // below the minimum modulus, or not prime at all
        assert!(parse_field_mode(Some("p:101")).is_err());
        assert!(parse_field_mode(Some("p:10")).is_err());
        assert!(parse_field_mode(Some("florp")).is_err());
    }

    #[test]
    fn secant_reports_the_defective_grassmann_case() {
        let cli = parse(&[
            "splitgrass", "secant", "--variety", "grassmann", "--k", "2", "--N", "6", "--s",
            "3", "--trials", "3", "--format", "json",
        ]);
        let outcome = execute(&cli).unwrap();
        assert_eq!(outcome.exit_code, 0);
        let doc: Value = serde_json::from_str(&outcome.rendered).unwrap();
        assert_eq!(doc["command"], "secant");
        let result = &doc["results"][0];
        assert_eq!(result["computed_proj_dim"], 33);
        assert_eq!(result["expected_proj_dim"], 34);
        assert_eq!(result["defective_observed"], true);
        assert_eq!(result["rational_confirmed"], true);
    }

    #[test]
    fn secant_survey_renders_csv_rows() {
        let cli = parse(&[
            "splitgrass", "secant", "--variety", "split", "--n", "3", "--d", "2", "--s",
            "1..2", "--trials", "2", "--field", "p:2147483647", "--format", "csv",
        ]);
        let outcome = execute(&cli).unwrap();
        assert_eq!(outcome.exit_code, 0);
        let lines: Vec<&str> = outcome.rendered.lines().collect();
        assert_eq!(lines.len(), 3);
        assert!(lines[0].starts_with("variety,s,"));
        assert!(lines[1].starts_with("split(n=3,d=2),1,"));
        assert!(lines[2].starts_with("split(n=3,d=2),2,"));
    }

    #[test]
    fn json_output_is_deterministic_modulo_timestamp() {
        let args = [
            "splitgrass", "secant", "--variety", "split", "--n", "2", "--d", "3", "--s", "2",
            "--trials", "2", "--field", "p:2147483647", "--format", "json",
        ];
        let a = execute(&parse(&args)).unwrap();
        let b = execute(&parse(&args)).unwrap();
        assert_eq!(strip_timestamp(&a.rendered), strip_timestamp(&b.rendered));
    }

    #[test]
    fn identify_converts_the_frozen_line_vector() {
        let cli = parse(&[
            "splitgrass", "identify", "--n", "2", "--d", "3", "--format", "json",
            "[0, 0, 0, 2, -1, 0, -4, 2, 0, 0]",
        ]);
        let outcome = execute(&cli).unwrap();
        assert_eq!(outcome.exit_code, 0);
        let doc: Value = serde_json::from_str(&outcome.rendered).unwrap();
        let result = &doc["results"][0];
        assert_eq!(result["direction"], "pluecker-to-polynomial");
        assert_eq!(result["decomposable"], true);
        assert_eq!(result["round_trip"], true);
        let output = result["output"].as_str().unwrap();
        let got = parse_poly(output, 3).unwrap();
        let want = parse_poly("x0*x1^2 - x0*x1*x2 - x1^3 + x1^2*x2", 3).unwrap();
        assert!(crate::checks::proportional_polys(&got, &want));
    }

    #[test]
    fn identify_converts_a_cube_to_a_coordinate_vector() {
        let cli = parse(&[
            "splitgrass", "identify", "--n", "2", "--d", "3", "x0^3",
        ]);
        let outcome = execute(&cli).unwrap();
        assert_eq!(outcome.exit_code, 0);
        assert!(outcome.rendered.contains("p_{012}=1"), "got: {}", outcome.rendered);
        assert!(outcome.rendered.contains("p_{234}=0"));
        assert!(outcome.rendered.contains("decomposable"));
    }

    #[test]
    fn identify_rejects_wrong_degree_and_prime_fields() {
        let cli = parse(&["splitgrass", "identify", "--n", "2", "--d", "3", "x0^2"]);
        assert!(execute(&cli).is_err());
        let cli = parse(&[
            "splitgrass", "identify", "--n", "2", "--d", "3", "--field", "p:7", "x0^3",
        ]);
        assert!(execute(&cli).is_err());
    }

    #[test]
    fn verify_five_lines_passes_and_renders_a_table() {
        let cli = parse(&["splitgrass", "verify", "five-lines"]);
        let outcome = execute(&cli).unwrap();
        assert_eq!(outcome.exit_code, 0);
        assert!(outcome.rendered.contains("PASS five-lines"));
        assert!(outcome.rendered.ends_with("1/1 scenarios passed\n"));
    }

    #[test]
    fn verify_rejects_unknown_ids_and_csv() {
        let cli = parse(&["splitgrass", "verify", "no-such-scenario"]);
        assert!(execute(&cli).is_err());
        let cli = parse(&["splitgrass", "verify", "five-lines", "--format", "csv"]);
        assert!(execute(&cli).is_err());
    }

    #[test]
    fn config_file_supplies_defaults_and_flags_override() {
        let dir = std::env::temp_dir();
        let path = dir.join("splitgrass_cli_test_config.json");
        fs::write(
            &path,
            r#"{"variety": "split", "n": 2, "d": 3, "s": "1", "trials": 2, "field": "p:2147483647"}"#,
        )
        .unwrap();
        let path_str = path.to_str().unwrap();
        let cli = parse(&["splitgrass", "secant", "--config", path_str, "--format", "json"]);
        let outcome = execute(&cli).unwrap();
        assert_eq!(outcome.exit_code, 0);
        let doc: Value = serde_json::from_str(&outcome.rendered).unwrap();
        assert_eq!(doc["results"][0]["computed_proj_dim"], 6);
        // explicit flag wins over the config value
        let cli = parse(&[
            "splitgrass", "secant", "--config", path_str, "--s", "2", "--format", "json",
        ]);
        let outcome = execute(&cli).unwrap();
        let doc: Value = serde_json::from_str(&outcome.rendered).unwrap();
        assert_eq!(doc["config"]["s"], json!([2]));
        let _ = fs::remove_file(&path);
    }
}
