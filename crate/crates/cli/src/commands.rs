use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use twisted_lab_core::blocks::{default_schedule, growth_report};
use twisted_lab_core::cantor::{copies_report, walk_mean, EmbeddingSpec, SubcubeSpec};
use twisted_lab_core::centralizer::CentralizerConfig;
use twisted_lab_core::function::Vector;
use twisted_lab_core::io::{group_function_from_json, group_function_to_json};
use twisted_lab_core::riesz::{riesz_product, witness, RieszCase, RieszSpec, WitnessReport};
use twisted_lab_core::sampler::Sampler;
use twisted_lab_core::suite::run_suite;
use twisted_lab_core::twisted::{act, delta_lower, twisted_quasinorm, DeltaReport, TwistedPair};
use twisted_lab_core::{
    fourier_forward, fourier_inverse, oracle, FiniteAbelianGroup, LipschitzProfile,
};

use crate::output::{csv_table, fmt_f64, fmt_opt_bool, fmt_opt_f64, two_column_table, Sink};

const DEFAULT_BUDGET: usize = 1 << 24;

#[derive(Parser)]
#[command(
    name = "twisted-lab",
    version,
    about = "Experiments over convolution-algebra centralizers on finite abelian groups"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Seed for every sampled experiment
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,
    /// Largest group size a command may allocate (default 2^24; the
    /// TWISTED_LAB_BUDGET environment variable overrides the default)
    #[arg(long, global = true)]
    pub budget: Option<usize>,
}

#[derive(Copy, Clone, ValueEnum)]
pub enum CaseArg {
    Dagger,
    Ddagger,
}

impl From<CaseArg> for RieszCase {
    fn from(c: CaseArg) -> Self {
        match c {
            CaseArg::Dagger => RieszCase::Dagger,
            CaseArg::Ddagger => RieszCase::Ddagger,
        }
    }
}

#[derive(Copy, Clone, ValueEnum, PartialEq)]
pub enum FormatArg {
    Csv,
    Json,
}

#[derive(Copy, Clone, ValueEnum)]
pub enum PlotKind {
    Witness,
    Walk,
    Blocks,
}

#[derive(Args)]
pub struct ReportArgs {
    /// Output path (stdout when omitted)
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: FormatArg,
}

#[derive(Subcommand)]
pub enum Command {
    /// Compare the fast transforms against the literal double sums
    TransformCheck {
        /// Random functions per group
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Riesz-product non-triviality witness table
    Witness {
        #[arg(long, value_enum, default_value = "ddagger")]
        case: CaseArg,
        /// Profile: id, log1p or pow:<alpha>
        #[arg(long, default_value = "id")]
        phi: String,
        #[arg(long, default_value_t = 2.0)]
        alpha: f64,
        /// N values, e.g. 1..20 or 1,2,5
        #[arg(long, default_value = "1..20")]
        n: String,
        #[command(flatten)]
        report: ReportArgs,
    },
    /// Cantor-group experiments
    Cantor {
        #[command(subcommand)]
        cmd: CantorCmd,
    },
    /// Block-construction growth report
    Blocks {
        /// Only the built-in schedule is defined
        #[arg(long, default_value = "default")]
        schedule: String,
        #[arg(long, default_value = "id")]
        phi: String,
        #[arg(long, default_value_t = 2.0)]
        alpha: f64,
        #[command(flatten)]
        report: ReportArgs,
    },
    /// Sampled quasilinearity and centralizer defects against their bounds
    Defects {
        #[arg(long, default_value = "id")]
        phi: String,
        /// Sampled pairs per estimator
        #[arg(long, default_value_t = 2000)]
        trials: usize,
        /// Cantor dimension of the sampling group
        #[arg(long, default_value_t = 6)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Lower bound for the distance to linear maps over the witness family
    Delta {
        #[arg(long, default_value = "1..16")]
        n: String,
        #[arg(long, default_value = "id")]
        phi: String,
        #[arg(long, default_value_t = 2.0)]
        alpha: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Twisted-sum operations on JSON-encoded functions
    Twisted {
        #[command(subcommand)]
        cmd: TwistedCmd,
    },
    /// Run every module invariant and emit the manifest
    Suite {
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Project a JSON report onto two-column plot tables
    PlotData {
        #[arg(long)]
        report: PathBuf,
        #[arg(long, value_enum)]
        kind: PlotKind,
        #[arg(long)]
        out_dir: PathBuf,
    },
}

#[derive(Subcommand)]
pub enum CantorCmd {
    /// Exact random-walk means and their asymptotic ratios
    Walk {
        /// n values, e.g. 2,4,64,1024
        #[arg(long)]
        n: String,
        #[command(flatten)]
        report: ReportArgs,
    },
    /// Copies defect of the subcube embedding
    Copies {
        /// Cantor dimension N
        #[arg(long)]
        n: usize,
        /// Fixed coordinates (1-based), e.g. 1,3
        #[arg(long)]
        a: String,
        /// Signs on the fixed coordinates, e.g. +,-
        #[arg(long)]
        eps: String,
        #[arg(long, default_value = "id")]
        phi: String,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
pub enum TwistedCmd {
    /// Quasinorm of a pair (g, f)
    Quasinorm {
        #[arg(long)]
        g: PathBuf,
        #[arg(long)]
        f: PathBuf,
        #[arg(long, default_value = "id")]
        phi: String,
        #[arg(long, default_value_t = f64::INFINITY)]
        p: f64,
        #[arg(long, default_value_t = 1.0)]
        q: f64,
    },
    /// Convolution action a(g, f) = (a*g, a*f); writes the image pair
    Act {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        g: PathBuf,
        #[arg(long)]
        f: PathBuf,
        #[arg(long)]
        out_g: PathBuf,
        #[arg(long)]
        out_f: PathBuf,
    },
    /// Delta lower bound over explicit witness functions
    Delta {
        /// One or more JSON function files
        #[arg(long, required = true, num_args = 1..)]
        witness: Vec<PathBuf>,
        #[arg(long, default_value = "id")]
        phi: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Every command reports whether its asserted invariants held.
pub struct Outcome {
    pub failures: Vec<String>,
}

impl Outcome {
    pub fn ok() -> Self {
        Self { failures: vec![] }
    }

    pub fn exit_code(&self) -> i32 {
        if self.failures.is_empty() {
            0
        } else {
            2
        }
    }
}

fn resolve_budget(flag: Option<usize>) -> Result<usize> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match std::env::var("TWISTED_LAB_BUDGET") {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| anyhow!("TWISTED_LAB_BUDGET must be an integer, got {s:?}")),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

/// Parses "1..20", "2,4,64" or mixtures of both.
fn parse_n_list(text: &str) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for piece in text.split(',') {
        let piece = piece.trim();
        if piece.is_empty() {
            continue;
        }
        if let Some((lo, hi)) = piece.split_once("..") {
            let lo: usize = lo.trim().parse().context("range start")?;
            let hi: usize = hi.trim().parse().context("range end")?;
            if lo > hi {
                bail!("empty range {piece:?}");
            }
            out.extend(lo..=hi);
        } else {
            out.push(
                piece
                    .parse()
                    .with_context(|| format!("bad count {piece:?}"))?,
            );
        }
    }
    if out.is_empty() {
        bail!("no N values given");
    }
    Ok(out)
}

fn parse_coords_one_based(text: &str) -> Result<Vec<usize>> {
    text.split(',')
        .map(|p| {
            let k: usize = p
                .trim()
                .parse()
                .with_context(|| format!("bad coordinate {p:?}"))?;
            if k == 0 {
                bail!("coordinates are 1-based");
            }
            Ok(k - 1)
        })
        .collect()
}

fn parse_signs(text: &str) -> Result<Vec<i8>> {
    text.split(',')
        .map(|p| match p.trim() {
            "+" | "+1" | "1" => Ok(1),
            "-" | "-1" => Ok(-1),
            other => bail!("bad sign {other:?} (use + or -)"),
        })
        .collect()
}

pub fn run(cli: Cli) -> Result<Outcome> {
    let budget = resolve_budget(cli.budget)?;
    match cli.command {
        Command::TransformCheck { trials, out } => transform_check(trials, cli.seed, budget, out),
        Command::Witness {
            case,
            phi,
            alpha,
            n,
            report,
        } => witness_cmd(case.into(), &phi, alpha, &n, budget, report),
        Command::Cantor { cmd } => match cmd {
            CantorCmd::Walk { n, report } => walk_cmd(&n, report),
            CantorCmd::Copies {
                n,
                a,
                eps,
                phi,
                samples,
                out,
            } => copies_cmd(n, &a, &eps, &phi, samples, cli.seed, budget, out),
        },
        Command::Blocks {
            schedule,
            phi,
            alpha,
            report,
        } => blocks_cmd(&schedule, &phi, alpha, cli.seed, budget, report),
        Command::Defects {
            phi,
            trials,
            n,
            out,
        } => defects_cmd(&phi, trials, n, cli.seed, budget, out),
        Command::Delta { n, phi, alpha, out } => delta_cmd(&n, &phi, alpha, budget, out),
        Command::Twisted { cmd } => twisted_cmd(cmd),
        Command::Suite { out } => suite_cmd(cli.seed, budget, out),
        Command::PlotData {
            report,
            kind,
            out_dir,
        } => plot_data_cmd(&report, kind, &out_dir),
    }
}

fn transform_check(
    trials: usize,
    seed: u64,
    budget: usize,
    out: Option<PathBuf>,
) -> Result<Outcome> {
    let cases: Vec<Vec<u32>> = vec![vec![2; 10], vec![729], vec![4, 9, 5]];
    let mut rows = Vec::new();
    let mut failures = Vec::new();
    for orders in cases {
        let group = FiniteAbelianGroup::new(&orders)?;
        if group.size() > budget {
            bail!("group of size {} exceeds budget {budget}", group.size());
        }
        let mut sampler = Sampler::new(&group, seed);
        let mut max_forward = 0.0f64;
        let mut max_roundtrip = 0.0f64;
        for _ in 0..trials {
            let f = sampler.gaussian_function();
            let fast = fourier_forward(&f);
            let slow = oracle::naive_fourier_forward(&f);
            let scale = slow.norm(2.0)?.max(1e-300);
            let gap = fast
                .values()
                .iter()
                .zip(slow.values())
                .map(|(a, b)| (a - b).norm())
                .fold(0.0, f64::max);
            max_forward = max_forward.max(gap / scale);
            let back = fourier_inverse(&fast);
            max_roundtrip = max_roundtrip.max(back.sub(&f).norm(2.0)? / f.norm(2.0)?);
        }
        let pass = max_forward <= 1e-10 && max_roundtrip <= 1e-10;
        if !pass {
            failures.push(format!(
                "transform-check orders {orders:?}: forward {max_forward:.3e}, roundtrip {max_roundtrip:.3e}"
            ));
        }
        rows.push(json!({
            "orders": orders,
            "trials": trials,
            "max_forward_gap": max_forward,
            "max_roundtrip_gap": max_roundtrip,
            "pass": pass,
        }));
    }
    let doc = json!({"seed": seed, "groups": rows, "pass": failures.is_empty()});
    Sink::from_opt(out).write(&format!("{}\n", serde_json::to_string_pretty(&doc)?))?;
    for f in &failures {
        eprintln!("FAIL {f}");
    }
    Ok(Outcome { failures })
}

fn witness_cmd(
    case: RieszCase,
    phi: &str,
    alpha: f64,
    n_text: &str,
    budget: usize,
    report_args: ReportArgs,
) -> Result<Outcome> {
    let profile = LipschitzProfile::parse(phi)?;
    let n_list = parse_n_list(n_text)?;
    let report = witness(&profile, alpha, &n_list, case, budget)?;
    let text = match report_args.format {
        FormatArg::Json => format!("{}\n", serde_json::to_string_pretty(&report)?),
        FormatArg::Csv => witness_csv(&report),
    };
    Sink::from_opt(report_args.out).write(&text)?;
    let mut failures = Vec::new();
    for row in &report.rows {
        if !(row.pass_b1 && row.pass_b2.unwrap_or(true)) {
            failures.push(format!(
                "witness N={}: ||mho f||_1 = {} under bound (b1 {}, b2 {:?})",
                row.n, row.mho_l1, row.bound_b1, row.bound_b2
            ));
        }
    }
    for f in &failures {
        eprintln!("FAIL {f}");
    }
    Ok(Outcome { failures })
}

fn witness_csv(report: &WitnessReport) -> String {
    csv_table(
        "N,linf_norm,l2_norm,mho_l1,bound_b1,bound_b2,pass_b1,pass_b2,seconds",
        report.rows.iter().map(|r| {
            format!(
                "{},{},{},{},{},{},{},{},{:.3}",
                r.n,
                fmt_f64(r.linf_norm),
                fmt_f64(r.l2_norm),
                fmt_f64(r.mho_l1),
                fmt_f64(r.bound_b1),
                fmt_opt_f64(r.bound_b2),
                r.pass_b1,
                fmt_opt_bool(r.pass_b2),
                r.seconds
            )
        }),
    )
}

fn walk_cmd(n_text: &str, report_args: ReportArgs) -> Result<Outcome> {
    let n_list = parse_n_list(n_text)?;
    let rows: Vec<_> = n_list
        .iter()
        .map(|&n| walk_mean(n))
        .collect::<Result<_, _>>()?;
    let text = match report_args.format {
        FormatArg::Json => format!(
            "{}\n",
            serde_json::to_string_pretty(&json!({ "rows": rows }))?
        ),
        FormatArg::Csv => csv_table(
            "N,exact,ratio",
            rows.iter()
                .map(|w| format!("{},{},{}", w.n, fmt_f64(w.exact), fmt_f64(w.ratio))),
        ),
    };
    Sink::from_opt(report_args.out).write(&text)?;
    Ok(Outcome::ok())
}

#[allow(clippy::too_many_arguments)]
fn copies_cmd(
    n: usize,
    a_text: &str,
    eps_text: &str,
    phi: &str,
    samples: usize,
    seed: u64,
    budget: usize,
    out: Option<PathBuf>,
) -> Result<Outcome> {
    if (1usize << n) > budget {
        bail!("group of size 2^{n} exceeds budget {budget}");
    }
    let profile = LipschitzProfile::parse(phi)?;
    let group = FiniteAbelianGroup::cantor(n)?;
    let coords = parse_coords_one_based(a_text)?;
    let signs = parse_signs(eps_text)?;
    let spec = EmbeddingSpec::new(SubcubeSpec::new(&group, &coords, &signs)?);
    let report = copies_report(&spec, &profile, samples, seed)?;
    Sink::from_opt(out).write(&format!("{}\n", serde_json::to_string_pretty(&report)?))?;
    let failures = if report.pass {
        vec![]
    } else {
        let msg = format!(
            "copies defect {} exceeds bound {}",
            report.max_defect, report.bound
        );
        eprintln!("FAIL {msg}");
        vec![msg]
    };
    Ok(Outcome { failures })
}

fn blocks_cmd(
    schedule: &str,
    phi: &str,
    alpha: f64,
    seed: u64,
    budget: usize,
    report_args: ReportArgs,
) -> Result<Outcome> {
    if schedule != "default" {
        bail!("unknown schedule {schedule:?} (only \"default\" is defined)");
    }
    let profile = LipschitzProfile::parse(phi)?;
    let sched = default_schedule(&profile, 8, 24);
    let report = growth_report(&profile, alpha, &sched, seed, budget)?;
    let text = match report_args.format {
        FormatArg::Json => format!("{}\n", serde_json::to_string_pretty(&report)?),
        FormatArg::Csv => csv_table(
            "k,c_k,n_k,delta_lower_k,q_sampled",
            report.rows.iter().map(|r| {
                format!(
                    "{},{},{},{},{}",
                    r.k,
                    fmt_f64(r.c_k),
                    r.n_k.map(|n| n.to_string()).unwrap_or_default(),
                    fmt_opt_f64(r.delta_lower),
                    fmt_opt_f64(r.q_sampled)
                )
            }),
        ),
    };
    Sink::from_opt(report_args.out).write(&text)?;
    let failures = if report.pass {
        vec![]
    } else {
        let msg = format!(
            "blocks: nondecreasing {} q_sampled {} vs bound {}",
            report.nondecreasing, report.q_total_sampled, report.q_total_bound
        );
        eprintln!("FAIL {msg}");
        vec![msg]
    };
    Ok(Outcome { failures })
}

fn defects_cmd(
    phi: &str,
    trials: usize,
    n: usize,
    seed: u64,
    budget: usize,
    out: Option<PathBuf>,
) -> Result<Outcome> {
    use twisted_lab_core::centralizer::{
        centralizer_bound, kp_map, quasilinear_bound, sampled_centralizer_defect,
        sampled_pointwise_centralizer_defect, sampled_quasilinear_defect, DefectReport,
    };
    if (1usize << n) > budget {
        bail!("group of size 2^{n} exceeds budget {budget}");
    }
    let profile = LipschitzProfile::parse(phi)?;
    let group = FiniteAbelianGroup::cantor(n)?;

    let mut s = Sampler::new(&group, seed);
    let kp_defect = sampled_quasilinear_defect(
        |c| kp_map(&profile, 2.0, c).expect("valid exponent"),
        |c| c.norm(2.0).expect("p >= 1"),
        |c| c.norm(2.0).expect("p >= 1"),
        |_| (s.mixed_spectrum(), s.mixed_spectrum()),
        trials,
    )?;

    let config = CentralizerConfig::two_two(profile.clone());
    let mut s = Sampler::new(&group, seed ^ 1);
    let mho_defect =
        sampled_centralizer_defect(&config, |_| (s.l1_element(), s.mixed_function()), trials)?;

    let mut s = Sampler::new(&group, seed ^ 2);
    let pointwise_defect = sampled_pointwise_centralizer_defect(
        &profile,
        2.0,
        2.0,
        |_| (s.l1_element(), s.mixed_function()),
        trials,
    )?;

    let reports = vec![
        DefectReport::new(
            "kp_quasilinear",
            trials,
            kp_defect,
            quasilinear_bound(&profile),
        ),
        DefectReport::new(
            "mho_centralizer",
            trials,
            mho_defect,
            centralizer_bound(&profile),
        ),
        DefectReport::new(
            "pointwise_kp_centralizer",
            trials,
            pointwise_defect,
            centralizer_bound(&profile),
        ),
    ];
    Sink::from_opt(out).write(&format!("{}\n", serde_json::to_string_pretty(&reports)?))?;
    let failures: Vec<String> = reports
        .iter()
        .filter(|r| !r.pass)
        .map(|r| {
            format!(
                "{}: defect {} exceeds bound {}",
                r.map, r.max_defect, r.bound
            )
        })
        .collect();
    for f in &failures {
        eprintln!("FAIL {f}");
    }
    Ok(Outcome { failures })
}

fn delta_cmd(
    n_text: &str,
    phi: &str,
    alpha: f64,
    budget: usize,
    out: Option<PathBuf>,
) -> Result<Outcome> {
    let profile = LipschitzProfile::parse(phi)?;
    let config = CentralizerConfig::infinity_one(profile);
    let n_list = parse_n_list(n_text)?;
    let mut witnesses = Vec::new();
    for &n in &n_list {
        if (1usize << n) > budget {
            bail!("group of size 2^{n} exceeds budget {budget}");
        }
        witnesses.push(riesz_product(&RieszSpec::rademacher(n, alpha)?));
    }
    let lower = delta_lower(&config, &witnesses)?;
    let max_ratio = 2.0 * lower;
    let report = DeltaReport {
        witness_count: witnesses.len(),
        max_ratio,
        delta_lower: lower,
    };
    Sink::from_opt(out).write(&format!("{}\n", serde_json::to_string_pretty(&report)?))?;
    Ok(Outcome::ok())
}

fn twisted_cmd(cmd: TwistedCmd) -> Result<Outcome> {
    match cmd {
        TwistedCmd::Quasinorm { g, f, phi, p, q } => {
            let profile = LipschitzProfile::parse(&phi)?;
            let config = CentralizerConfig::new(profile, p, q)?;
            let g_fn = group_function_from_json(&std::fs::read_to_string(&g)?)?;
            let f_fn = group_function_from_json(&std::fs::read_to_string(&f)?)?;
            let pair = TwistedPair::new(g_fn, f_fn)?;
            let value = twisted_quasinorm(&config, &pair)?;
            println!("{}", fmt_f64(value));
            Ok(Outcome::ok())
        }
        TwistedCmd::Act {
            a,
            g,
            f,
            out_g,
            out_f,
        } => {
            let a_fn = group_function_from_json(&std::fs::read_to_string(&a)?)?;
            let g_fn = group_function_from_json(&std::fs::read_to_string(&g)?)?;
            let f_fn = group_function_from_json(&std::fs::read_to_string(&f)?)?;
            let pair = act(&a_fn, &TwistedPair::new(g_fn, f_fn)?)?;
            std::fs::write(&out_g, group_function_to_json(&pair.g))?;
            std::fs::write(&out_f, group_function_to_json(&pair.f))?;
            Ok(Outcome::ok())
        }
        TwistedCmd::Delta { witness, phi, out } => {
            let profile = LipschitzProfile::parse(&phi)?;
            let config = CentralizerConfig::infinity_one(profile);
            let witnesses: Vec<_> = witness
                .iter()
                .map(|p| -> Result<_> {
                    Ok(group_function_from_json(&std::fs::read_to_string(p)?)?)
                })
                .collect::<Result<_>>()?;
            let lower = delta_lower(&config, &witnesses)?;
            let report = DeltaReport {
                witness_count: witnesses.len(),
                max_ratio: 2.0 * lower,
                delta_lower: lower,
            };
            Sink::from_opt(out).write(&format!("{}\n", serde_json::to_string_pretty(&report)?))?;
            Ok(Outcome::ok())
        }
    }
}

fn suite_cmd(seed: u64, budget: usize, out: Option<PathBuf>) -> Result<Outcome> {
    let report = run_suite(seed, budget)?;
    for check in &report.checks {
        println!(
            "{} {} - {}",
            if check.pass { "PASS" } else { "FAIL" },
            check.name,
            check.detail
        );
    }
    if let Some(path) = out {
        Sink::File(path).write(&format!("{}\n", serde_json::to_string_pretty(&report)?))?;
    }
    let failures: Vec<String> = report
        .failing()
        .iter()
        .map(|c| format!("{}: {}", c.name, c.detail))
        .collect();
    for f in &failures {
        eprintln!("FAIL {f}");
    }
    Ok(Outcome { failures })
}

fn plot_data_cmd(report: &Path, kind: PlotKind, out_dir: &Path) -> Result<Outcome> {
    let text =
        std::fs::read_to_string(report).with_context(|| format!("reading {}", report.display()))?;
    match kind {
        PlotKind::Witness => {
            let report: WitnessReport = serde_json::from_str(&text)?;
            if report.rows.is_empty() {
                bail!("witness report has no rows");
            }
            let x = |n: usize| (n as f64).ln();
            two_column_table(
                out_dir,
                "witness_computed.csv",
                ("log_n", "mho_l1"),
                report.rows.iter().map(|r| (x(r.n), r.mho_l1)),
            )?;
            two_column_table(
                out_dir,
                "witness_bound_b1.csv",
                ("log_n", "bound_b1"),
                report.rows.iter().map(|r| (x(r.n), r.bound_b1)),
            )?;
            two_column_table(
                out_dir,
                "witness_bound_b2.csv",
                ("log_n", "bound_b2"),
                report
                    .rows
                    .iter()
                    .filter_map(|r| r.bound_b2.map(|b| (x(r.n), b))),
            )?;
        }
        PlotKind::Walk => {
            let doc: serde_json::Value = serde_json::from_str(&text)?;
            let rows = doc["rows"]
                .as_array()
                .ok_or_else(|| anyhow!("walk report missing rows"))?;
            if rows.is_empty() {
                bail!("walk report has no rows");
            }
            two_column_table(
                out_dir,
                "walk_ratio.csv",
                ("n", "ratio"),
                rows.iter().map(|r| {
                    (
                        r["n"].as_f64().unwrap_or_default(),
                        r["ratio"].as_f64().unwrap_or_default(),
                    )
                }),
            )?;
        }
        PlotKind::Blocks => {
            let doc: serde_json::Value = serde_json::from_str(&text)?;
            let rows = doc["rows"]
                .as_array()
                .ok_or_else(|| anyhow!("blocks report missing rows"))?;
            let feasible: Vec<(f64, f64)> = rows
                .iter()
                .filter_map(|r| {
                    let delta = r["delta_lower"].as_f64()?;
                    Some((r["k"].as_f64()?, delta))
                })
                .collect();
            if feasible.is_empty() {
                bail!("blocks report has no feasible rows");
            }
            two_column_table(out_dir, "blocks_delta.csv", ("k", "delta_lower"), feasible)?;
        }
    }
    Ok(Outcome::ok())
}
