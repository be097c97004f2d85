//! Command-line front end: Kostka polynomials by several routes, ring and
//! fusion reports, wedge and W-limit characters, and the verification suite.
//!
//! Exit status: 0 on success, 1 when a mathematical check fails, 2 on usage
//! errors.

use clap::{Parser, Subcommand, ValueEnum};
use kostka::gpring::rmu_decompose;
use kostka::kostka::{charge_kostka, kostka_hook, tilde_transform};
use kostka::partition::Partition;
use kostka::report::{self, canonical_json, KostkaComputation};
use kostka::verify::{self, Level, VerifyOptions};
use kostka::Error;
use serde_json::Value;
use std::process::ExitCode;
use std::str::FromStr;

#[derive(Parser)]
#[command(name = "kostka", version, about = "Exact Kostka polynomials, Garsia-Procesi rings, fusion products and wedge characters")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Hook,
    Charge,
    Ring,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VerifyLevel {
    Quick,
    Full,
}

#[derive(Subcommand)]
enum Cmd {
    /// Kostka polynomial K_{lambda,mu}(q) and its tilde transform.
    Kostka {
        /// Row label, e.g. "2,1".
        #[arg(long)]
        lambda: Option<String>,
        /// Column label (content), e.g. "1,1,1".
        #[arg(long)]
        mu: Option<String>,
        /// Shortcut for the hook formula: row label with mu = (1^N).
        #[arg(long)]
        mu_row: Option<String>,
        #[arg(long, value_enum, default_value_t = Method::Charge)]
        method: Method,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Garsia-Procesi ring R_mu: Hilbert series, Specht decomposition,
    /// filtered dimensions.
    Ring {
        #[arg(long)]
        mu: String,
        /// Evaluation points for the filtered route, e.g. "1,2".
        #[arg(long)]
        points: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Fusion product of symmetric-power evaluation modules.
    Fusion {
        /// Composition, one part per factor, e.g. "2,1".
        #[arg(long)]
        mu: String,
        /// Rank parameter of sl_n.
        #[arg(long)]
        n: usize,
        /// Evaluation points, one per part, e.g. "0,1".
        #[arg(long)]
        points: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Reduced wedge product decomposition by both routes.
    Wedge {
        /// Number of wedge factors.
        #[arg(long = "N")]
        n_boxes: u32,
        /// Rank parameter of sl_n.
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// W-algebra character and the stabilization of the normalized
    /// hook-formula sequence.
    Winf {
        /// The limit partition mu_bar; empty string for the vacuum.
        #[arg(long, default_value = "")]
        mu: String,
        #[arg(long)]
        n: usize,
        /// Residue i with N = n*m + i (defaults to |mu| mod n).
        #[arg(long)]
        i: Option<u32>,
        /// Truncation depth of the series and comparison window.
        #[arg(long, default_value_t = 5)]
        depth: i64,
        /// Largest m in the stabilization sweep.
        #[arg(long, default_value_t = 8)]
        mmax: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Hook-product factorization identity check.
    Hooks {
        #[arg(long)]
        mu: String,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run the bundled verification suite.
    Verify {
        #[arg(long, value_enum, default_value_t = VerifyLevel::Quick)]
        level: VerifyLevel,
        /// Negative-control hook: corrupt the generator set; criterion 1
        /// must then fail.
        #[arg(long, hide = true)]
        corrupt: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

/// Usage-shaped errors exit with 2, failed mathematical checks with 1.
fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::InvalidPartition(_)
        | Error::SizeMismatch(..)
        | Error::LengthExceedsRank { .. }
        | Error::IndexOutOfRange { .. }
        | Error::RepeatedPoints => 2,
        _ => 1,
    }
}

fn emit(format: Format, value: &Value, text: String) {
    match format {
        Format::Json => println!("{}", canonical_json(value)),
        Format::Text => print!("{text}"),
    }
}

fn checks_pass(value: &Value) -> bool {
    match value.get("checks") {
        Some(Value::Object(m)) => m.values().all(|v| v.as_bool().unwrap_or(true)),
        _ => true,
    }
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.cmd {
        Cmd::Kostka { lambda, mu, mu_row, method, format } => {
            let start = std::time::Instant::now();
            let (lambda, mu, method) = match (&mu_row, &lambda, &mu) {
                (Some(row), _, _) => {
                    let l = Partition::from_str(row)?;
                    (l.clone(), Partition::column(l.size()), Method::Hook)
                }
                (None, Some(l), Some(m)) => {
                    (Partition::from_str(l)?, Partition::from_str(m)?, method)
                }
                _ => {
                    return Err(Error::InvalidPartition(
                        "provide --lambda and --mu, or --mu-row".into(),
                    ))
                }
            };
            let is_column = mu == Partition::column(mu.size());
            let charge = charge_kostka(&lambda, &mu)?;
            let ring = if method == Method::Ring || method == Method::All {
                let d = rmu_decompose(&mu)?;
                Some(tilde_transform(&d.component(&lambda), &mu)?)
            } else {
                None
            };
            let k = match method {
                Method::Hook => {
                    if !is_column {
                        return Err(Error::InvalidPartition(format!(
                            "the hook formula needs mu = (1^N), got ({mu})"
                        )));
                    }
                    kostka_hook(&lambda)?
                }
                Method::Ring => ring.clone().expect("computed above"),
                Method::All | Method::Charge => charge.clone(),
            };
            let hook_matches =
                if is_column { Some(kostka_hook(&lambda)? == charge) } else { None };
            let ring_matches = ring.map(|r| r == charge);
            let ktilde = tilde_transform(&k, &mu)?;
            let comp = KostkaComputation {
                lambda: lambda.clone(),
                mu: mu.clone(),
                method: format!(
                    "{}",
                    match method {
                        Method::Hook => "hook",
                        Method::Charge => "charge",
                        Method::Ring => "ring",
                        Method::All => "all",
                    }
                ),
                k: k.clone(),
                ktilde: ktilde.clone(),
                hook_matches,
                ring_matches,
            };
            let v = report::kostka_report(&comp, start.elapsed().as_millis());
            let mut text = format!(
                "K_({lambda}),({mu})(q) = {k}\n~K_({lambda}),({mu})(q) = {ktilde}\n"
            );
            if let Some(b) = hook_matches {
                text += &format!("hook formula agrees: {b}\n");
            }
            if let Some(b) = ring_matches {
                text += &format!("ring route agrees: {b}\n");
            }
            emit(format, &v, text);
            Ok(if checks_pass(&v) { 0 } else { 1 })
        }
        Cmd::Ring { mu, points, format } => {
            let start = std::time::Instant::now();
            let mu = Partition::from_composition(report::parse_mu_composition(&mu)?);
            let pts = points.map(|s| report::parse_points(&s)).transpose()?;
            if let Some(p) = &pts {
                if p.len() != mu.len() {
                    return Err(Error::IndexOutOfRange {
                        index: p.len(),
                        range: format!("one point per part: {}", mu.len()),
                    });
                }
            }
            let v = report::ring_report(&mu, pts, start.elapsed().as_millis())?;
            let decomp = rmu_decompose(&mu)?;
            let mut text = format!("R_({mu}): Hilbert series {}\n", decomp.hilbert);
            for (lambda, c) in &decomp.components {
                text += &format!("  M_({lambda}),({mu}) = {c}\n");
            }
            text += &format!(
                "amu_dims = {:?}\nchecks: kostka_match={} fstar_match={}\n",
                v["amu_dims"], v["checks"]["kostka_match"], v["checks"]["fstar_match"]
            );
            emit(format, &v, text);
            Ok(if checks_pass(&v) { 0 } else { 1 })
        }
        Cmd::Fusion { mu, n, points, format } => {
            let start = std::time::Instant::now();
            let comp = report::parse_mu_composition(&mu)?;
            let pts = points.map(|s| report::parse_points(&s)).transpose()?;
            let v = report::fusion_report(&comp, n, pts, start.elapsed().as_millis())?;
            let mut text = format!(
                "F*_({mu}) at n={n}: total dim {}, graded dims {:?}\n",
                v["total_dim"], v["dims_per_degree"]
            );
            if let Value::Object(m) = &v["decomposition"] {
                for (lambda, c) in m {
                    text += &format!("  pi_({lambda}) multiplicity {}\n", Value::Object(
                        c.as_object().cloned().unwrap_or_default()
                    ));
                }
            }
            text += &format!(
                "checks: kostka_match={} z_independence={}\n",
                v["checks"]["kostka_match"], v["checks"]["z_independence"]
            );
            emit(format, &v, text);
            Ok(if checks_pass(&v) { 0 } else { 1 })
        }
        Cmd::Wedge { n_boxes, n, format } => {
            let start = std::time::Instant::now();
            let v = report::wedge_report(n_boxes, n, start.elapsed().as_millis())?;
            let mut text = format!("reduced wedge, N={n_boxes}, n={n} (exponents in q^-1)\n");
            if let Value::Object(m) = &v["character_route"] {
                for (mu, c) in m {
                    text += &format!("  pi_({mu}): {}\n", Value::Object(
                        c.as_object().cloned().unwrap_or_default()
                    ));
                }
            }
            text += &format!(
                "checks: routes_agree={} identity_ok={}\n",
                v["checks"]["routes_agree"], v["checks"]["identity_ok"]
            );
            emit(format, &v, text);
            Ok(if checks_pass(&v) { 0 } else { 1 })
        }
        Cmd::Winf { mu, n, i, depth, mmax, format } => {
            let start = std::time::Instant::now();
            let mu_bar = Partition::from_str(&mu)?;
            let v = report::winf_report(&mu_bar, n, i, depth, mmax, start.elapsed().as_millis())?;
            let series: Vec<String> = (0..=depth)
                .map(|e| v["series"][&e.to_string()].as_str().unwrap_or("0").to_string())
                .collect();
            let text = format!(
                "chi_({mu})(q) truncated at q^{depth}: coefficients {series:?}\nstabilized_from={} winf_match={}\n",
                v["stabilization"]["stabilized_from"], v["checks"]["winf_match"]
            );
            emit(format, &v, text);
            Ok(if checks_pass(&v) { 0 } else { 1 })
        }
        Cmd::Hooks { mu, n, format } => {
            let start = std::time::Instant::now();
            let mu = Partition::from_str(&mu)?;
            let v = report::hooks_report(&mu, n, start.elapsed().as_millis())?;
            let text = format!(
                "hook product for ({mu}) inside n={n} rows: corrected exponent ok={}, printed exponent ok={}\n",
                v["checks"]["corrected_ok"], v["checks"]["printed_ok"]
            );
            emit(format, &v, text);
            // printed_ok = false is the expected outcome, not a failure
            Ok(0)
        }
        Cmd::Verify { level, corrupt, format } => {
            let start = std::time::Instant::now();
            let level = match level {
                VerifyLevel::Quick => Level::Quick,
                VerifyLevel::Full => Level::Full,
            };
            let results =
                verify::run_all(level, VerifyOptions { corrupt_generators: corrupt });
            let pass = results.iter().all(|r| r.pass);
            let v = report::verify_report(level, &results, start.elapsed().as_millis());
            let mut text = String::new();
            for r in &results {
                text += &format!(
                    "criterion {}: {} [{}] {} ({} ms)\n",
                    r.id,
                    if r.pass { "PASS" } else { "FAIL" },
                    r.name,
                    r.detail,
                    r.elapsed_ms
                );
            }
            text += &format!("verify ({}): {}\n", level.name(), if pass { "PASS" } else { "FAIL" });
            emit(format, &v, text);
            Ok(if pass { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}
