//! Command-line front end. `dispatch` is pure apart from file access and the
//! environment, so it is exercised directly by tests.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::bounds::{
    bounds_report, exact_iq, field_threshold, remark_counterexample, support_threshold,
    BoundsReport, FieldThreshold, SupportBound,
};
use crate::code::{code_min_distance, Code, CodeKind, Metric};
use crate::cw_l1::{construct_l1, L1Params};
use crate::error::{Error, Result};
use crate::galois::Field;
use crate::lift::{lift, max_pairs_from_env};
use crate::metrics::{
    hamming_distance, insdel_distance, l1_distance, lcs_length, Composition, Word,
};
use crate::rs::{
    check_rs2_criterion, close_pair_witness, construct_rs2, rs_exhaustive_insdel, RsCode,
    MAX_MESSAGES,
};
use crate::selftest;

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_SCALE_CAP: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

#[derive(Debug, Parser)]
#[command(
    name = "insdel",
    version,
    about = "Insertion-deletion code constructions, checks and bounds"
)]
struct Cli {
    /// Worker threads for pairwise sweeps (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Print one JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone)]
struct List(Vec<u64>);

fn parse_list(s: &str) -> std::result::Result<List, String> {
    if s.trim().is_empty() {
        return Ok(List(Vec::new()));
    }
    s.split(',')
        .map(|t| t.trim().parse::<u64>().map_err(|e| format!("{t:?}: {e}")))
        .collect::<std::result::Result<_, _>>()
        .map(List)
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MetricArg {
    Insdel,
    Hamming,
    L1,
    Lcs,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Distance between two words (or two compositions for l1).
    Dist {
        #[arg(long)]
        q: u32,
        #[arg(long, value_parser = parse_list, allow_hyphen_values = true)]
        u: List,
        #[arg(long, value_parser = parse_list, allow_hyphen_values = true)]
        v: List,
        #[arg(long, value_enum, default_value = "insdel")]
        metric: MetricArg,
    },
    /// Minimum distance of a code file.
    CodeDistance {
        #[arg(long = "in")]
        input: PathBuf,
        /// Defaults to insdel for INSDEL files and l1 for CWL1 files.
        #[arg(long, value_enum)]
        metric: Option<MetricArg>,
    },
    /// Constant-weight L1 code by residue bucketing.
    ConstructL1(ConstructL1Args),
    /// Sorted-word lift of a CWL1 code.
    Lift {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Certify the insdel distance by a pairwise sweep.
        #[arg(long)]
        verify: bool,
    },
    /// Greedy evaluation vector for RS(n, 2) with distance 2n - 4.
    ConstructRs2 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: Option<u64>,
    },
    /// Affine criterion for RS(n, 2) on a given evaluation vector.
    VerifyRs2 {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_list)]
        alphas: List,
        /// Also sweep all codeword pairs.
        #[arg(long)]
        exhaustive: bool,
    },
    /// Codeword pair of RS(n, k), k >= 3, at insdel distance at most 2n - 4k + 4.
    WitnessRs {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        k: usize,
        #[arg(long, value_parser = parse_list)]
        alphas: List,
    },
    /// Exact maximum code size by clique search.
    ExactIq {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        max_seconds: Option<u64>,
    },
    /// Upper and lower bounds on code size.
    Bounds {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        d: u32,
        /// Dimension for the Singleton-optimal support bound (with --delta).
        #[arg(long, requires = "delta")]
        k: Option<u32>,
        #[arg(long, requires = "k")]
        delta: Option<u32>,
    },
    /// The q + 1 word code at distance 2n - 2.
    Counterexample {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run the built-in acceptance suite.
    Selftest {
        /// Run a single criterion.
        #[arg(long)]
        criterion: Option<u32>,
    },
}

#[derive(Debug, Args)]
struct ConstructL1Args {
    #[arg(long)]
    q: u32,
    #[arg(long)]
    n: u32,
    #[arg(long)]
    delta: u32,
    /// Field order (default: the smallest prime above q, or q with --modulus).
    #[arg(long)]
    r: Option<u64>,
    #[arg(long, default_value_t = 0)]
    alpha: u64,
    /// Irreducible modulus of degree delta - 1, coefficient codes low to high.
    #[arg(long, value_parser = parse_list)]
    modulus: Option<List>,
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Exit status and captured standard streams of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `argv` (program name first) and runs the command.
pub fn dispatch<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let mut text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                },
                kind => {
                    if matches!(
                        kind,
                        ErrorKind::InvalidSubcommand | ErrorKind::MissingSubcommand
                    ) {
                        text = format!("{text}\n{}", Cli::command().render_help());
                    }
                    Outcome {
                        code: EXIT_USAGE,
                        stdout: String::new(),
                        stderr: text,
                    }
                }
            };
        }
    };
    let run = || execute(&cli);
    let result = match cli.threads {
        Some(0) => Err(Error::invalid("--threads must be at least 1")),
        Some(t) => match rayon::ThreadPoolBuilder::new().num_threads(t).build() {
            Ok(pool) => pool.install(run),
            Err(e) => Err(Error::Internal(e.to_string())),
        },
        None => run(),
    };
    match result {
        Ok((code, stdout)) => Outcome {
            code,
            stdout,
            stderr: String::new(),
        },
        Err(e) => {
            let code = if e.is_scale_cap() {
                EXIT_SCALE_CAP
            } else {
                EXIT_DOMAIN
            };
            Outcome {
                code,
                stdout: String::new(),
                stderr: format!("error: {e}\n"),
            }
        }
    }
}

fn to_json<T: Serialize>(v: &T) -> Result<String> {
    serde_json::to_string_pretty(v)
        .map(|s| s + "\n")
        .map_err(|e| Error::Internal(e.to_string()))
}

fn to_u32(xs: &[u64]) -> Result<Vec<u32>> {
    xs.iter()
        .map(|&x| u32::try_from(x).map_err(|_| Error::invalid(format!("{x} is too large"))))
        .collect()
}

fn read_code(path: &PathBuf) -> Result<Code> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    Code::from_text(&text)
}

fn write_code(path: &PathBuf, code: &Code) -> Result<()> {
    std::fs::write(path, code.to_text()).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn check_pair_cap(m: usize) -> Result<()> {
    let pairs = m as u128 * (m as u128).saturating_sub(1) / 2;
    let cap = max_pairs_from_env()?;
    if pairs > cap {
        return Err(Error::ScaleCap {
            what: "pairwise comparisons",
            value: pairs,
            cap,
        });
    }
    Ok(())
}

fn metric_of(arg: MetricArg) -> Result<Metric> {
    match arg {
        MetricArg::Insdel => Ok(Metric::Insdel),
        MetricArg::Hamming => Ok(Metric::Hamming),
        MetricArg::L1 => Ok(Metric::L1),
        MetricArg::Lcs => Err(Error::invalid("lcs is not a code metric")),
    }
}

fn metric_name(arg: MetricArg) -> &'static str {
    match arg {
        MetricArg::Insdel => "insdel",
        MetricArg::Hamming => "hamming",
        MetricArg::L1 => "l1",
        MetricArg::Lcs => "lcs",
    }
}

#[derive(Serialize)]
struct BoundsOutput {
    #[serde(flatten)]
    report: BoundsReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    support_bound: Option<SupportBound>,
    #[serde(skip_serializing_if = "Option::is_none")]
    field_threshold: Option<FieldThreshold>,
}

fn execute(cli: &Cli) -> Result<(i32, String)> {
    let json = cli.json;
    let mut out = String::new();
    match &cli.command {
        Command::Dist { q, u, v, metric } => {
            let value = match metric {
                MetricArg::L1 => {
                    let (a, b) = (
                        Composition::new(to_u32(&u.0)?)?,
                        Composition::new(to_u32(&v.0)?)?,
                    );
                    if a.q() != *q || b.q() != *q {
                        return Err(Error::invalid(format!(
                            "compositions must have {q} entries"
                        )));
                    }
                    l1_distance(&a, &b)?
                }
                m => {
                    let (a, b) = (Word::new(*q, to_u32(&u.0)?)?, Word::new(*q, to_u32(&v.0)?)?);
                    (match m {
                        MetricArg::Insdel => insdel_distance(&a, &b)?,
                        MetricArg::Hamming => hamming_distance(&a, &b)?,
                        _ => lcs_length(&a, &b)?,
                    }) as u64
                }
            };
            if json {
                out = to_json(
                    &json!({"q": q, "u": u.0, "v": v.0, "metric": metric_name(*metric), "value": value}),
                )?;
            } else {
                writeln!(out, "{value}").ok();
            }
        }
        Command::CodeDistance { input, metric } => {
            let code = read_code(input)?;
            let arg = metric.unwrap_or(match code.kind() {
                CodeKind::Insdel => MetricArg::Insdel,
                CodeKind::Cwl1 => MetricArg::L1,
            });
            let m = metric_of(arg)?;
            check_pair_cap(code.len())?;
            let md = code_min_distance(&code, m)?;
            if json {
                out = to_json(&json!({
                    "kind": code.kind().tag(), "q": code.q(), "n": code.n(), "size": code.len(),
                    "metric": metric_name(arg), "distance": md.distance, "pair": [md.pair.0, md.pair.1],
                }))?;
            } else {
                writeln!(out, "{}", md.distance).ok();
                writeln!(
                    out,
                    "# rows {} and {} (0-based), {} members",
                    md.pair.0,
                    md.pair.1,
                    code.len()
                )
                .ok();
            }
        }
        Command::ConstructL1(a) => {
            let mut params = L1Params::new(a.q, a.n, a.delta).with_alpha(a.alpha);
            if let Some(r) = a.r {
                params = params.with_r(r);
            }
            if let Some(m) = &a.modulus {
                params = params.with_irreducible_modulus(m.0.clone());
            }
            let built = construct_l1(&params)?;
            if let Some(path) = &a.out {
                write_code(path, &built.code)?;
            }
            let r = &built.report;
            if json {
                out = to_json(&r)?;
            } else {
                writeln!(
                    out,
                    "# q={} n={} delta={} r={} modulus={:?}",
                    r.q, r.n, r.delta, r.r, r.modulus
                )
                .ok();
                writeln!(
                    out,
                    "# bucket unit {:?}, size {} of {} compositions",
                    r.bucket_unit, r.size, r.johnson_size
                )
                .ok();
                writeln!(out, "# guaranteed lower bound {}", r.guaranteed_lower_bound).ok();
                match r.verified_min_l1 {
                    Some(d) => writeln!(out, "# verified minimum L1 distance {d}").ok(),
                    None => writeln!(
                        out,
                        "# minimum L1 distance undefined (fewer than two members)"
                    )
                    .ok(),
                };
                if a.out.is_none() {
                    out.push_str(&built.code.to_text());
                }
            }
        }
        Command::Lift {
            input,
            out: path,
            verify,
        } => {
            let source = read_code(input)?;
            let cap = if *verify { max_pairs_from_env()? } else { 0 };
            let lifted = lift(&source, cap)?;
            write_code(path, &lifted.code)?;
            let r = &lifted.report;
            if json {
                out = to_json(&r)?;
            } else {
                writeln!(out, "size {}", r.size).ok();
                writeln!(
                    out,
                    "min_l1 {}",
                    r.min_l1.map_or("undefined".into(), |d| d.to_string())
                )
                .ok();
                writeln!(
                    out,
                    "min_insdel {}",
                    r.min_insdel.map_or("undefined".into(), |d| d.to_string())
                )
                .ok();
                writeln!(
                    out,
                    "status {}",
                    serde_json::to_value(r.status)
                        .ok()
                        .and_then(|v| v.as_str().map(String::from))
                        .unwrap_or_default()
                )
                .ok();
            }
        }
        Command::ConstructRs2 { n, q } => {
            let code = construct_rs2(*n, *q)?;
            let alphas: Vec<u32> = code.alphas().iter().map(|a| a.code()).collect();
            if json {
                let entries: Vec<_> = alphas
                    .iter()
                    .enumerate()
                    .map(|(i, a)| json!({"index": i + 1, "alpha": a}))
                    .collect();
                out = to_json(
                    &json!({"n": n, "q": code.field().order(), "alphas": alphas, "evaluation_vector": entries}),
                )?;
            } else {
                writeln!(out, "q {}", code.field().order()).ok();
                for (i, a) in alphas.iter().enumerate() {
                    writeln!(out, "alpha_{} {a}", i + 1).ok();
                }
            }
        }
        Command::VerifyRs2 {
            q,
            n,
            alphas,
            exhaustive,
        } => {
            if alphas.0.len() != *n {
                return Err(Error::invalid(format!(
                    "expected {n} evaluation points, got {}",
                    alphas.0.len()
                )));
            }
            let field = Field::of_order(*q)?;
            let code = RsCode::from_codes(&field, &alphas.0, 2)?;
            let verdict = check_rs2_criterion(&code)?;
            let sweep = if *exhaustive {
                Some(rs_exhaustive_insdel(&code, MAX_MESSAGES)?.distance)
            } else {
                None
            };
            let witness = verdict.witness.map(|w| {
                json!({
                    "i": w.i.map(|x| x + 1), "j": w.j.map(|x| x + 1),
                    "sigma": {"a": w.sigma.a().code(), "b": w.sigma.b().code()},
                })
            });
            if json {
                out = to_json(&json!({
                    "q": q, "n": n, "alphas": alphas.0, "holds": verdict.holds,
                    "target_distance": 2 * n - 4, "witness": witness, "exhaustive_distance": sweep,
                }))?;
            } else {
                writeln!(
                    out,
                    "criterion {}",
                    if verdict.holds { "holds" } else { "fails" }
                )
                .ok();
                if let Some(w) = verdict.witness {
                    writeln!(
                        out,
                        "witness i={:?} j={:?} a={} b={}",
                        w.i.map(|x| x + 1),
                        w.j.map(|x| x + 1),
                        w.sigma.a().code(),
                        w.sigma.b().code()
                    )
                    .ok();
                }
                if let Some(d) = sweep {
                    writeln!(
                        out,
                        "exhaustive min insdel distance {d} (target {})",
                        2 * n - 4
                    )
                    .ok();
                }
            }
            if sweep.is_some_and(|d| (d == 2 * *n as u64 - 4) != verdict.holds) {
                return Err(Error::Internal(
                    "criterion disagrees with the exhaustive sweep".into(),
                ));
            }
        }
        Command::WitnessRs { q, k, alphas } => {
            let field = Field::of_order(*q)?;
            let code = RsCode::from_codes(&field, &alphas.0, *k)?;
            let w = close_pair_witness(&code)?;
            let idx = w.indices.one_based();
            if json {
                out = to_json(&json!({
                    "q": q, "n": code.n(), "k": k, "f": w.f.codes(), "g": w.g.codes(),
                    "i": idx.i, "j": idx.j, "case": w.case, "lcs": w.lcs, "insdel": w.insdel, "bound": w.bound,
                }))?;
            } else {
                writeln!(out, "f {:?}", w.f.codes()).ok();
                writeln!(out, "g {:?}", w.g.codes()).ok();
                writeln!(out, "i {:?}", idx.i).ok();
                writeln!(out, "j {:?}", idx.j).ok();
                writeln!(out, "lcs {} (>= {})", w.lcs, 2 * k - 2).ok();
                writeln!(out, "insdel {} <= {}", w.insdel, w.bound).ok();
            }
        }
        Command::ExactIq {
            q,
            n,
            d,
            max_seconds,
        } => {
            let r = exact_iq(*q, *n, *d, *max_seconds)?.report(*d);
            if json {
                out = to_json(&r)?;
            } else {
                writeln!(out, "I_{q}({n},{d}) = {}", r.size).ok();
                for w in &r.code {
                    writeln!(
                        out,
                        "{}",
                        w.iter()
                            .map(|s| s.to_string())
                            .collect::<Vec<_>>()
                            .join(" ")
                    )
                    .ok();
                }
            }
        }
        Command::Bounds { q, n, d, k, delta } => {
            let report = bounds_report(*q, *n, *d)?;
            let (support_bound, field_threshold) = match (k, delta) {
                (Some(k), Some(delta)) => (
                    Some(support_threshold(*q, *n, *k, *delta)?),
                    Some(field_threshold(*n, *k, *delta)?),
                ),
                _ => (None, None),
            };
            let full = BoundsOutput {
                report,
                support_bound,
                field_threshold,
            };
            if json {
                out = to_json(&full)?;
            } else {
                let r = &full.report;
                writeln!(out, "singleton           {}", r.singleton).ok();
                writeln!(
                    out,
                    "sub_singleton               {} ({})",
                    r.sub_singleton,
                    r.sub_singleton_clause.label()
                )
                .ok();
                for (c, v) in &r.sub_singleton_clauses {
                    writeln!(out, "  clause {:<4}        {v}", c.label()).ok();
                }
                writeln!(
                    out,
                    "levenshtein         {} (floor {})",
                    r.levenshtein, r.levenshtein_floor
                )
                .ok();
                if let Some(c) = r.near_maximal_cap {
                    writeln!(out, "near_maximal_cap    {c}").ok();
                }
                if let Some(c) = r.alphabet_cap {
                    writeln!(out, "alphabet_cap        {c}").ok();
                }
                if let Some(g) = &r.lift_guarantee {
                    writeln!(out, "lift_guarantee      {g}").ok();
                }
                if let Some(s) = &full.support_bound {
                    let d_max = s.d_max.map_or("-".into(), |x| x.to_string());
                    writeln!(
                        out,
                        "support_bound       applies={} h={} rhs={} d_max={d_max}",
                        s.bound_applies, s.h, s.rhs
                    )
                    .ok();
                }
                if let Some(t) = &full.field_threshold {
                    writeln!(
                        out,
                        "field_threshold     ({})^(1/{}) ~ {:.4}, max_q={}",
                        t.base, t.root, t.approx, t.max_q
                    )
                    .ok();
                }
            }
        }
        Command::Counterexample { q, n, out: path } => {
            let c = remark_counterexample(*q, *n)?;
            write_code(path, &c.code)?;
            if json {
                out = to_json(
                    &json!({"q": q, "n": n, "size": c.code.len(), "distance": c.distance}),
                )?;
            } else {
                writeln!(out, "size {} distance {}", c.code.len(), c.distance).ok();
            }
        }
        Command::Selftest { criterion } => {
            let results = match criterion {
                Some(id) => vec![selftest::run(*id)?],
                None => selftest::run_all(),
            };
            let all = results.iter().all(|r| r.pass);
            if json {
                out = to_json(&json!({"pass": all, "criteria": results}))?;
            } else {
                for r in &results {
                    writeln!(out, "{}", r.line()).ok();
                }
            }
            return Ok((if all { EXIT_OK } else { EXIT_DOMAIN }, out));
        }
    }
    Ok((EXIT_OK, out))
}
