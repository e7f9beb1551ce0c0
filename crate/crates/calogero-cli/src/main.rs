use std::fs;
use std::io::{self, BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use calogero::construct::{construct_monic, pieri_normalize, Normalization, SCHEMA_VERSION};
use calogero::harmonics::decompose_harmonic;
use calogero::operators::Wavefunction;
use calogero::scalars::{parse_rational, Family, Params};
use calogero::sympoly::Partition;
use calogero::verify::{run_suite, summarize, CaseRecord, Suite, SuiteConfig};
use calogero::Error;
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

/// Exact multivariable Hermite and Laguerre polynomials of the confined Calogero system.
#[derive(Parser)]
#[command(name = "calogero", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build p_λ (monic) or P_λ (Pieri normalization) and print it as JSON.
    Construct {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, default_value = "monic")]
        normalization: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a verification suite over a grid of parameters.
    Verify(VerifyArgs),
    /// Evaluate p_λ and ψ_λ at floating-point points.
    Eval(EvalArgs),
    /// Split p_λ into radial parts times generalized spherical harmonics.
    Decompose {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct ParamArgs {
    #[arg(long, default_value = "A")]
    family: String,
    /// Number of variables; defaults to the length of λ.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, default_value = "0")]
    g0: String,
    #[arg(long, default_value = "0")]
    g1: String,
    #[arg(long, default_value = "1")]
    omega: String,
    /// Comma-separated parts, e.g. 2,1,0.
    #[arg(long, default_value = "0")]
    lambda: String,
}

impl ParamArgs {
    fn resolve(&self) -> calogero::Result<(Params, Partition)> {
        let family: Family = self.family.parse()?;
        let count = self
            .lambda
            .split(',')
            .filter(|t| !t.trim().is_empty())
            .count()
            .max(1);
        let n = self.n.unwrap_or(count);
        let params = Params::new(
            family,
            n,
            parse_rational(&self.g0)?,
            parse_rational(&self.g1)?,
            parse_rational(&self.omega)?,
        )?;
        let lambda = Partition::parse(&self.lambda, n)?;
        Ok((params, lambda))
    }
}

#[derive(Args)]
struct VerifyArgs {
    /// orthogonality, norms, pieri, diffeq, difference-limit, harmonics, mehta, normalization or weights-limit.
    suite: String,
    #[arg(long)]
    family: Option<String>,
    /// Comma-separated values override the default grid.
    #[arg(long)]
    n: Option<String>,
    #[arg(long)]
    g0: Option<String>,
    #[arg(long)]
    g1: Option<String>,
    #[arg(long)]
    omega: Option<String>,
    #[arg(long)]
    lambda: Option<String>,
    #[arg(long)]
    max_weight: Option<u32>,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Relative tolerance for the floating-point limit checks.
    #[arg(long)]
    tol: Option<f64>,
    /// Extend the grid to |λ| ≤ 4, n = 4 and the n = 3 difference limits.
    #[arg(long)]
    deep: bool,
    /// Write the JSON-lines report here.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Print JSON lines instead of a table.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct EvalArgs {
    #[command(flatten)]
    params: ParamArgs,
    /// A point, comma-separated; may be repeated.
    #[arg(long = "point", allow_hyphen_values = true)]
    point: Vec<String>,
    /// File with one point per line ("-" for stdin).
    #[arg(long)]
    points: Option<PathBuf>,
    /// Add the finite-difference residual |H₁ψ − E₁ψ|.
    #[arg(long)]
    residual: bool,
    #[arg(long, default_value_t = 1e-3)]
    h: f64,
    /// Fail (exit 1) when a residual exceeds this.
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long)]
    json: bool,
}

enum Failure {
    Cases,
    Invalid(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Internal(_) | Error::Quadrature(_) => Failure::Internal(e.to_string()),
            _ => Failure::Invalid(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Internal(e.to_string())
    }
}

type CmdResult = Result<(), Failure>;

fn emit(out: Option<&Path>, text: &str) -> io::Result<()> {
    match out {
        Some(path) => fs::write(path, text),
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()
        }
    }
}

fn to_line(v: &impl serde::Serialize) -> Result<String, Failure> {
    serde_json::to_string(v).map_err(|e| Failure::Internal(e.to_string()))
}

fn construct(params: &ParamArgs, normalization: &str, out: Option<&Path>) -> CmdResult {
    let (params, lambda) = params.resolve()?;
    let normalization: Normalization = normalization.parse()?;
    let monic = construct_monic(&lambda, &params)?;
    let poly = match normalization {
        Normalization::Monic => monic,
        Normalization::Pieri => pieri_normalize(&monic)?,
    };
    emit(out, &(to_line(&poly.to_json())? + "\n"))?;
    Ok(())
}

fn decompose(params: &ParamArgs, out: Option<&Path>) -> CmdResult {
    let (params, lambda) = params.resolve()?;
    let dec = decompose_harmonic(&lambda, &params)?;
    emit(out, &(to_line(&dec.to_json())? + "\n"))?;
    Ok(())
}

fn split_list<T>(s: &str, parse: impl Fn(&str) -> calogero::Result<T>) -> calogero::Result<Vec<T>> {
    s.split(',').map(|t| parse(t.trim())).collect()
}

fn suite_config(args: &VerifyArgs) -> calogero::Result<SuiteConfig> {
    let mut cfg = SuiteConfig::default();
    if args.deep {
        cfg.deepen();
    }
    if let Some(f) = &args.family {
        cfg.families = vec![f.parse()?];
    }
    if let Some(ns) = &args.n {
        cfg.ns = split_list(ns, |t| {
            t.parse()
                .map_err(|_| Error::InvalidParams(format!("bad n {t:?}")))
        })?;
    }
    if let Some(v) = &args.g0 {
        cfg.g0s = split_list(v, parse_rational)?;
    }
    if let Some(v) = &args.g1 {
        cfg.g1s = split_list(v, parse_rational)?;
    }
    if let Some(v) = &args.omega {
        cfg.omegas = split_list(v, parse_rational)?;
    }
    if let Some(l) = &args.lambda {
        cfg.lambda = Some(Partition::parse(l, l.split(',').count())?.parts().to_vec());
    }
    if let Some(w) = args.max_weight {
        cfg.max_weight = w;
    }
    cfg.r = args.r;
    cfg.seed = args.seed;
    cfg.tol = args.tol;
    Ok(cfg)
}

fn table_row(r: &CaseRecord) -> String {
    let lambda = r
        .lambda
        .as_ref()
        .map(|l| {
            format!(
                "({})",
                l.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
            )
        })
        .unwrap_or_else(|| "-".into());
    let r_text = r.r.map(|r| r.to_string()).unwrap_or_else(|| "-".into());
    let status = serde_json::to_value(r.status).unwrap_or(Value::Null);
    let mut line = format!(
        "{:<12} {} n={} g0={} g1={} omega={} lambda={} r={}",
        status.as_str().unwrap_or("?"),
        r.family,
        r.n,
        r.couplings.g0,
        r.couplings.g1,
        r.couplings.omega,
        lambda,
        r_text
    );
    if let Some(Value::String(check)) = r.extra.get("check") {
        line.push_str(&format!(" check={check}"));
        if let Some(b) = r.extra.get("beta") {
            line.push_str(&format!(" beta={b}"));
        }
    }
    if let Some(d) = &r.detail {
        line.push_str(&format!("  [{d}]"));
    }
    line
}

fn verify(args: &VerifyArgs) -> CmdResult {
    let suite: Suite = args.suite.parse()?;
    let cfg = suite_config(args)?;
    let records = run_suite(suite, &cfg)?;
    if records.is_empty() {
        return Err(Failure::Invalid(format!(
            "the grid has no admissible cases for suite {suite}"
        )));
    }
    let summary = summarize(&records);
    let summary_line = to_line(&json!({
        "schemaVersion": SCHEMA_VERSION,
        "suite": suite.name(),
        "summary": summary,
    }))?;
    let mut lines = String::new();
    for r in &records {
        lines.push_str(&to_line(r)?);
        lines.push('\n');
    }
    if let Some(path) = &args.out {
        fs::write(path, format!("{lines}{summary_line}\n"))?;
    }
    let shown = if args.json {
        format!("{lines}{summary_line}\n")
    } else {
        let mut text: String = records.iter().map(|r| table_row(r) + "\n").collect();
        text.push_str(&format!(
            "{suite}: {} cases, {} passed, {} failed, {} non-generic\n",
            summary.total, summary.passed, summary.failed, summary.non_generic
        ));
        text
    };
    emit(None, &shown)?;
    if summary.failed > 0 {
        Err(Failure::Cases)
    } else {
        Ok(())
    }
}

fn parse_point(line: &str) -> Result<Vec<f64>, Failure> {
    line.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<f64>()
                .map_err(|_| Failure::Invalid(format!("bad coordinate {t:?}")))
        })
        .collect()
}

fn read_points(args: &EvalArgs) -> Result<Vec<Vec<f64>>, Failure> {
    let mut points = Vec::new();
    for p in &args.point {
        points.push(parse_point(p)?);
    }
    if let Some(path) = &args.points {
        let reader: Box<dyn BufRead> = if path.as_os_str() == "-" {
            Box::new(BufReader::new(io::stdin()))
        } else {
            Box::new(BufReader::new(
                fs::File::open(path).map_err(|e| Failure::Invalid(e.to_string()))?,
            ))
        };
        for line in reader.lines() {
            let line = line?;
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            points.push(parse_point(trimmed)?);
        }
    }
    if points.is_empty() {
        return Err(Failure::Invalid("no evaluation points given".into()));
    }
    Ok(points)
}

fn eval(args: &EvalArgs) -> CmdResult {
    let (params, lambda) = args.params.resolve()?;
    let points = read_points(args)?;
    let wave = Wavefunction::new(&lambda, &params)?;
    let mut any_bad = false;
    let mut text = String::new();
    for x in &points {
        let mut row = json!({ "x": x });
        if x.len() != params.n() {
            row["error"] = json!(format!("expected {} coordinates", params.n()));
            any_bad = true;
        } else {
            row["p"] = json!(wave.polynomial(x));
            row["psi"] = json!(wave.eval(x));
            if args.residual {
                match wave.residual(x, args.h) {
                    Ok(res) => {
                        row["residual"] = json!(res);
                        if let Some(tol) = args.tol {
                            let ok = res <= tol;
                            row["residualOk"] = json!(ok);
                            any_bad |= !ok;
                        }
                    }
                    Err(e) => row["error"] = json!(e.to_string()),
                }
            }
        }
        if args.json {
            text.push_str(&to_line(&row)?);
        } else {
            let field = |k: &str| {
                row.get(k)
                    .map(Value::to_string)
                    .unwrap_or_else(|| "-".into())
            };
            text.push_str(&format!(
                "{}\t{}\t{}\t{}",
                x.iter().map(f64::to_string).collect::<Vec<_>>().join(","),
                field("p"),
                field("psi"),
                row.get("error")
                    .map(Value::to_string)
                    .unwrap_or_else(|| field("residual"))
            ));
        }
        text.push('\n');
    }
    emit(None, &text)?;
    if any_bad {
        Err(Failure::Cases)
    } else {
        Ok(())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Construct {
            params,
            normalization,
            out,
        } => construct(params, normalization, out.as_deref()),
        Command::Verify(args) => verify(args),
        Command::Eval(args) => eval(args),
        Command::Decompose { params, out } => decompose(params, out.as_deref()),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Cases) => ExitCode::from(1),
        Err(Failure::Invalid(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(3)
        }
    }
}
