//! `chow3`: scenario runner and direct subcommands for the exact
//! intersection-theory engine.
//!
//! Exit status: 0 on success, 1 when a scenario expectation fails,
//! 2 on any parse or engine error.

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use chow3::ci::{self, CiSpec};
use chow3::property_a::{remark2_check, Remark2Input};
use chow3::rat::{self, Rat};
use chow3::scenario;
use chow3::theorem3;

#[derive(Parser)]
#[command(
    name = "chow3",
    version,
    about = "Exact intersection theory on threefold blowups"
)]
struct Cli {
    /// Output format for reports.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and execute a scenario file.
    Run { file: PathBuf },
    /// Decide forced vanishing for the n-point/all-lines configuration.
    #[command(name = "theorem3")]
    Theorem3 {
        #[arg(long)]
        n: usize,
        /// Also emit the raw per-6-tuple constraints (6 <= n <= 9).
        #[arg(long)]
        raw_constraints: bool,
    },
    /// Chern coefficients and the c2 certificate for one complete
    /// intersection in P^n.
    Ci {
        #[arg(long)]
        n: u32,
        /// Hypersurface degrees, comma separated: 2,2
        #[arg(long, value_delimiter = ',')]
        degrees: Vec<u32>,
    },
    /// Exhaustive certificate/direct agreement sweep.
    #[command(name = "ci-sweep")]
    CiSweep {
        #[arg(long, default_value_t = 8)]
        n_max: u32,
        #[arg(long, default_value_t = 6)]
        d_max: u32,
    },
    /// Incidence-bound check from a JSON configuration.
    Remark2 {
        #[arg(long)]
        config: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(failures) if failures > 0 => ExitCode::from(1),
        Ok(_) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

/// Returns the number of failed scenario expectations.
fn dispatch(cli: &Cli) -> Result<usize> {
    match &cli.command {
        Command::Run { file } => {
            let text = std::fs::read_to_string(file)
                .with_context(|| format!("cannot read {}", file.display()))?;
            let parsed = scenario::parse_scenario(&text)?;
            let report = scenario::run_scenario(&parsed)?;
            match cli.format {
                Format::Text => print!("{}", report.to_text()),
                Format::Structured => println!("{:#}", report.to_json()),
            }
            Ok(report.failures())
        }
        Command::Theorem3 { n, raw_constraints } => {
            let decision = theorem3::decide_deg_zero(*n)?;
            let mut constraints: Vec<String> = decision
                .system
                .constraints()
                .iter()
                .map(|c| c.to_string())
                .collect();
            if *raw_constraints {
                let (_, raw) = theorem3::case_constraints(*n, true);
                constraints.extend(raw.iter().skip(1).map(|c| c.to_string()));
            }
            match cli.format {
                Format::Text => {
                    println!("n = {}", decision.n);
                    println!("system:");
                    for c in &constraints {
                        println!("  {c}");
                    }
                    print!("{}", decision.trace);
                    println!("case: {}", decision.case.as_str());
                    println!("forced: {}", decision.forced);
                }
                Format::Structured => {
                    println!(
                        "{:#}",
                        serde_json::json!({
                            "n": decision.n,
                            "case": decision.case.as_str(),
                            "forced": decision.forced,
                            "constraints": constraints,
                            "trace": decision.trace.to_json(),
                        })
                    );
                }
            }
            Ok(0)
        }
        Command::Ci { n, degrees } => {
            let spec = CiSpec::new(*n, degrees.clone())?;
            let chern = ci::chern_classes_ci(&spec);
            let cert = ci::c2_certificate(&spec)?;
            match cli.format {
                Format::Text => {
                    println!("c1 = {}*h", chern.c1_coeff);
                    println!("c2 = {}*h^2", chern.c2_coeff);
                    println!("first bracket = {}", cert.first_bracket);
                    println!("g(sum d) = {}", cert.g_at_sum);
                    println!("bracket sum matches: {}", cert.bracket_sum_matches);
                    println!("certificate positive: {}", cert.certificate_positive);
                    println!("c2 positive: {}", cert.direct_positive);
                }
                Format::Structured => {
                    println!(
                        "{:#}",
                        serde_json::json!({
                            "n": spec.n,
                            "degrees": spec.degrees,
                            "c1_coeff": chern.c1_coeff.to_string(),
                            "c2_coeff": chern.c2_coeff.to_string(),
                            "first_bracket": rat::json(&cert.first_bracket),
                            "g_at_sum": rat::json(&cert.g_at_sum),
                            "bracket_sum_matches": cert.bracket_sum_matches,
                            "certificate_positive": cert.certificate_positive,
                            "direct_positive": cert.direct_positive,
                        })
                    );
                }
            }
            Ok(0)
        }
        Command::CiSweep { n_max, d_max } => {
            let out = ci::verify_c2_positive(*n_max, *d_max)?;
            match cli.format {
                Format::Text => {
                    println!("checked {} degree tuples", out.checked);
                    match &out.counterexample {
                        None => println!("all positive: certificate and direct check agree"),
                        Some((spec, reason)) => {
                            println!(
                                "counterexample: n = {}, degrees = {:?}",
                                spec.n, spec.degrees
                            );
                            println!("  {reason}");
                        }
                    }
                }
                Format::Structured => {
                    println!(
                        "{:#}",
                        serde_json::json!({
                            "checked": out.checked,
                            "all_positive": out.all_positive(),
                            "counterexample": out.counterexample.as_ref().map(|(spec, reason)| {
                                serde_json::json!({
                                    "n": spec.n,
                                    "degrees": spec.degrees,
                                    "reason": reason,
                                })
                            }),
                        })
                    );
                }
            }
            Ok(0)
        }
        Command::Remark2 { config } => {
            let text = std::fs::read_to_string(config)
                .with_context(|| format!("cannot read {}", config.display()))?;
            let input = parse_remark2_config(&text)?;
            let out = remark2_check(&input)?;
            match cli.format {
                Format::Text => {
                    print!("{}", out.trace);
                    println!("passed: {}", out.passed);
                }
                Format::Structured => {
                    println!(
                        "{:#}",
                        serde_json::json!({
                            "passed": out.passed,
                            "gamma": out.gamma,
                            "row_sums_ok": out.row_sums_ok,
                            "ratio_ok": out.ratio_ok,
                            "genus_ok": out.genus_ok,
                            "trace": out.trace.to_json(),
                        })
                    );
                }
            }
            Ok(0)
        }
    }
}

/// Config format:
/// {
///   "lambda": "9",                       // integer or "p/q" string
///   "curves": [{"degree":1,"genus":0,"c1_degree":0}, ...],
///   "incidence": [[1,0,...], ...]        // one row per exceptional divisor
/// }
fn parse_remark2_config(text: &str) -> Result<Remark2Input> {
    let value: serde_json::Value = serde_json::from_str(text).context("invalid JSON")?;
    let lambda = parse_json_rat(
        value
            .get("lambda")
            .ok_or_else(|| anyhow!("config needs `lambda`"))?,
    )?;
    let curves = value
        .get("curves")
        .and_then(|v| v.as_array())
        .ok_or_else(|| anyhow!("config needs a `curves` array"))?;
    let mut degrees = Vec::new();
    let mut genera = Vec::new();
    let mut c1_degrees = Vec::new();
    for (i, curve) in curves.iter().enumerate() {
        let field = |name: &str| {
            curve
                .get(name)
                .and_then(|v| v.as_i64())
                .ok_or_else(|| anyhow!("curve {} needs integer `{name}`", i + 1))
        };
        degrees.push(u32::try_from(field("degree")?).context("degree must be >= 0")?);
        genera.push(u32::try_from(field("genus")?).context("genus must be >= 0")?);
        c1_degrees.push(field("c1_degree")?);
    }
    let incidence_rows = value
        .get("incidence")
        .and_then(|v| v.as_array())
        .ok_or_else(|| anyhow!("config needs an `incidence` array of rows"))?;
    let mut incidence = Vec::new();
    for (l, row) in incidence_rows.iter().enumerate() {
        let row = row
            .as_array()
            .ok_or_else(|| anyhow!("incidence row {} must be an array", l + 1))?;
        let mut out = Vec::new();
        for entry in row {
            let n = entry
                .as_i64()
                .and_then(|v| u32::try_from(v).ok())
                .ok_or_else(|| anyhow!("incidence entries must be non-negative integers"))?;
            out.push(n);
        }
        incidence.push(out);
    }
    Ok(Remark2Input {
        incidence,
        degrees,
        genera,
        c1_degrees,
        lambda,
    })
}

fn parse_json_rat(value: &serde_json::Value) -> Result<Rat> {
    match value {
        serde_json::Value::Number(n) => n
            .as_i64()
            .map(rat::int)
            .ok_or_else(|| anyhow!("lambda must be an integer or a `p/q` string")),
        serde_json::Value::String(s) => rat::parse(s).map_err(|e| anyhow!(e)),
        _ => bail!("lambda must be an integer or a `p/q` string"),
    }
}
