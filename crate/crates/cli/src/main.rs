//! `dioexp`: diophantine exponents from the command line.
//!
//! Every run prints a `key = value` report that starts with the tool
//! version and an echo of the full configuration. Exit codes: 0 success,
//! 2 usage or parse error, 3 budget exceeded, 4 calibration mismatch,
//! 1 any other failure.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sha2::{Digest, Sha256};

use dioexp_core::dioph::{
    best_approx, fit_exponent, flow_trace, fmt_beta, trace_csv, MethodChoice, RealMatrix,
};
use dioexp_core::exactlin::{fmt_rational, RationalMatrix};
use dioexp_core::nilexp::{
    beta_closed, beta_via_pencils_seeded, cyclic_example, group_ball_check, FiniteActionInstance,
    GroupSpec,
};
use dioexp_core::pencil::{bounds, MatrixFamily};
use dioexp_core::report::Report;
use dioexp_core::Error;

#[derive(Parser, Debug)]
#[command(name = "dioexp", version, about = "Diophantine exponents of matrices, matrix families and nilpotent groups")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Common {
    /// Seed for every pseudorandom choice.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Working precision of real arithmetic, in bits.
    #[arg(long, global = true, default_value_t = 128, value_parser = clap::value_parser!(u32).range(64..=4096))]
    precision_bits: u32,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Best approximations of one real matrix and the fitted exponent.
    Estimate {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long)]
        max_norm: u64,
        #[arg(long, default_value = "auto", value_parser = parse_method)]
        method: MethodChoice,
        /// Smallest norm used by the fit.
        #[arg(long, default_value_t = 1)]
        window_min: u64,
    },
    /// Exponent bounds of a sampled family over rational pencils.
    Pencil {
        #[arg(long)]
        family: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        height: u32,
    },
    /// Exponent of a nilpotent group from its closed formula, optionally
    /// recomputed from word-map pencils.
    Nilpotent {
        /// `heisenberg:<dim>`, `two_step:<a>:<p>`, `ut:<n>` or `free:<m>:<s>`.
        #[arg(long)]
        group: String,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        via_pencils: bool,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
        height: u32,
    },
    /// Systoles along the diagonal flow, as CSV.
    Flow {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long)]
        t_max: f64,
        #[arg(long, default_value_t = 8)]
        steps: usize,
        /// CSV destination; appended to the report when omitted.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Exhaustive check of the submodular minimum over a finite field.
    CheckSubmodular {
        #[arg(long, conflicts_with = "builtin")]
        instance: Option<PathBuf>,
        #[arg(long, value_enum)]
        builtin: Option<Builtin>,
    },
    /// Product sets of unitriangular generators and the beta-diophantine test.
    Ball {
        /// Matrices separated by blank lines.
        #[arg(long, conflicts_with = "heisenberg")]
        generators: Option<PathBuf>,
        /// Use the integral Heisenberg generators.
        #[arg(long)]
        heisenberg: bool,
        #[arg(long, default_value_t = 12)]
        n_max: usize,
        #[arg(long, default_value_t = 1.0)]
        beta: f64,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Builtin {
    /// `F_2^4`, a 4-cycle, `phi(W) = dim((I + P) W)`.
    Cyclic,
    /// `F_2^4` with the non-submodular `phi(W) = (dim W)^2`.
    Planted,
}

fn parse_method(s: &str) -> Result<MethodChoice, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

enum Failure {
    Core(Error),
    Io(PathBuf, std::io::Error),
    Mismatch(Report),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

type Outcome = Result<Report, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Io(path.to_owned(), e))
}

fn sha256_hex(text: &str) -> String {
    Sha256::digest(text.as_bytes()).iter().map(|b| format!("{b:02x}")).collect()
}

fn header(cli: &Cli) -> Report {
    let mut r = Report::new();
    r.push("tool", "dioexp").push("version", env!("CARGO_PKG_VERSION"));
    r.push("config.seed", cli.common.seed);
    r.push("config.precision_bits", cli.common.precision_bits);
    match &cli.command {
        Command::Estimate { matrix, max_norm, method, window_min } => {
            r.push("config.command", "estimate").push("config.matrix", matrix.display());
            r.push("config.max_norm", max_norm).push("config.method", format!("{method:?}").to_lowercase());
            r.push("config.window_min", window_min);
        }
        Command::Pencil { family, height } => {
            r.push("config.command", "pencil").push("config.family", family.display());
            r.push("config.height", height);
        }
        Command::Nilpotent { group, k, via_pencils, height } => {
            r.push("config.command", "nilpotent").push("config.group", group).push("config.k", k);
            r.push("config.via_pencils", via_pencils).push("config.height", height);
        }
        Command::Flow { matrix, t_max, steps, .. } => {
            r.push("config.command", "flow").push("config.matrix", matrix.display());
            r.push("config.t_max", t_max).push("config.steps", steps);
        }
        Command::CheckSubmodular { instance, builtin } => {
            r.push("config.command", "check-submodular");
            match (instance, builtin) {
                (Some(p), _) => r.push("config.instance", p.display()),
                (None, b) => r.push("config.builtin", format!("{:?}", b.unwrap_or(Builtin::Cyclic)).to_lowercase()),
            };
        }
        Command::Ball { generators, heisenberg, n_max, beta } => {
            r.push("config.command", "ball");
            match generators {
                Some(p) if !heisenberg => r.push("config.generators", p.display()),
                _ => r.push("config.generators", "heisenberg"),
            };
            r.push("config.n_max", n_max).push("config.beta", beta);
        }
    }
    r
}

fn estimate(common: &Common, matrix: &Path, max_norm: u64, method: MethodChoice, window_min: u64) -> Outcome {
    let text = read(matrix)?;
    let mat = RealMatrix::parse(&text, common.precision_bits as usize)?;
    if max_norm < 1 {
        return Err(Error::Domain("max-norm must be at least 1".into()).into());
    }
    let records = best_approx(&mat, max_norm, method)?;
    let est = fit_exponent(&records, (window_min, max_norm))?;
    let mut r = Report::new();
    r.push("input_sha256", sha256_hex(&text));
    r.push("m", mat.m()).push("n", mat.n()).push("exact_input", mat.exact().is_some());
    for rec in &records {
        let q: Vec<String> = rec.q.iter().map(i64::to_string).collect();
        let quality = match &rec.exact_quality {
            Some(x) => fmt_rational(x),
            None => format!("{:.12e}", rec.quality_f64()),
        };
        r.push(
            format!("record.{}", rec.shell()),
            format!("q=[{}] norm={} quality={} method={}", q.join(" "), rec.norm, quality, rec.method),
        );
    }
    r.push("window", format!("{}..{}", est.window.0, est.window.1));
    r.push("records_used", est.records_used).push("hull_points", est.hull_points);
    r.push("residual", format!("{:.6e}", est.residual));
    r.push("beta_hat", fmt_beta(est.beta_hat)).push("infinite", est.is_infinite());
    r.push("dirichlet_floor", format!("{:.9}", mat.n() as f64 / mat.m() as f64));
    r.push("precision_bits", est.precision_bits);
    r.push("certified", format!("records exhaustive up to norm {max_norm}"));
    Ok(r)
}

fn pencil(family: &Path, height: u32) -> Outcome {
    let text = read(family)?;
    let fam = MatrixFamily::parse(&text)?;
    let mut r = Report::new();
    r.push("input_sha256", sha256_hex(&text));
    r.extend(&bounds(&fam, height)?.report());
    Ok(r)
}

fn nilpotent(common: &Common, group: &str, k: usize, via_pencils: bool, height: u32) -> Outcome {
    let g: GroupSpec = group.parse()?;
    g.check_k(k)?;
    if !via_pencils {
        let mut r = Report::new();
        r.push("group", g).push("k", k).push("class", g.class).push("top_dim", g.top_dim);
        r.push("threshold", g.threshold().1);
        r.push("beta_closed", fmt_rational(&beta_closed(&g, k)?));
        return Ok(r);
    }
    let cal = beta_via_pencils_seeded(&g, k, height, common.seed)?;
    let report = cal.report();
    match cal.calibrated() {
        Some(false) => Err(Failure::Mismatch(report)),
        _ => Ok(report),
    }
}

fn flow(common: &Common, matrix: &Path, t_max: f64, steps: usize, csv: Option<&Path>) -> Outcome {
    let text = read(matrix)?;
    let mat = RealMatrix::parse(&text, common.precision_bits as usize)?;
    let trace = flow_trace(&mat, t_max, steps)?;
    let body = trace_csv(&trace);
    let mut r = Report::new();
    r.push("input_sha256", sha256_hex(&text));
    r.push("points", trace.len());
    let logs: Vec<f64> = trace.iter().map(|p| p.log_systole()).collect();
    r.push("monotone_decreasing", logs.windows(2).all(|w| w[1] <= w[0]));
    if let Some(last) = trace.last() {
        r.push("final_log_systole", format!("{:.12e}", last.log_systole()));
        let w: Vec<String> = last.witness.iter().map(i64::to_string).collect();
        r.push("final_witness", format!("[{}]", w.join(" ")));
    }
    r.push("precision_bits", trace.iter().map(|p| p.precision_bits).max().unwrap_or(0));
    match csv {
        Some(path) => {
            fs::write(path, &body).map_err(|e| Failure::Io(path.to_owned(), e))?;
            r.push("csv", path.display());
        }
        None => {
            for (i, line) in body.lines().enumerate() {
                r.push(format!("csv.{i}"), line);
            }
        }
    }
    Ok(r)
}

fn check_submodular(instance: Option<&Path>, builtin: Option<Builtin>) -> Outcome {
    let mut r = Report::new();
    let inst = match (instance, builtin.unwrap_or(Builtin::Cyclic)) {
        (Some(path), _) => {
            let text = read(path)?;
            r.push("input_sha256", sha256_hex(&text));
            FiniteActionInstance::parse(&text)?
        }
        (None, Builtin::Cyclic) => cyclic_example(),
        (None, Builtin::Planted) => {
            FiniteActionInstance::tabulate(2, 4, Vec::new(), |w| w.dim() * w.dim())?
        }
    };
    r.extend(&inst.submodular_min_check()?.report());
    Ok(r)
}

fn heisenberg_generators() -> Vec<RationalMatrix> {
    vec![
        RationalMatrix::from_i64(&[&[1, 1, 0], &[0, 1, 0], &[0, 0, 1]]),
        RationalMatrix::from_i64(&[&[1, 0, 0], &[0, 1, 1], &[0, 0, 1]]),
    ]
}

fn parse_generators(text: &str) -> Result<Vec<RationalMatrix>, Failure> {
    let mut blocks: Vec<String> = vec![String::new()];
    for line in text.lines() {
        let content = line.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            if !blocks.last().is_some_and(String::is_empty) {
                blocks.push(String::new());
            }
        } else {
            let b = blocks.last_mut().expect("nonempty");
            b.push_str(content);
            b.push('\n');
        }
    }
    Ok(blocks
        .iter()
        .filter(|b| !b.is_empty())
        .map(|b| RationalMatrix::parse(b))
        .collect::<Result<_, _>>()?)
}

fn ball(generators: Option<&Path>, heisenberg: bool, n_max: usize, beta: f64) -> Outcome {
    let mut r = Report::new();
    let gens = match generators {
        Some(path) if !heisenberg => {
            let text = read(path)?;
            r.push("input_sha256", sha256_hex(&text));
            parse_generators(&text)?
        }
        _ => heisenberg_generators(),
    };
    r.extend(&group_ball_check(&gens, n_max, beta)?.report());
    Ok(r)
}

fn run(cli: &Cli) -> Outcome {
    let c = &cli.common;
    match &cli.command {
        Command::Estimate { matrix, max_norm, method, window_min } => {
            estimate(c, matrix, *max_norm, *method, *window_min)
        }
        Command::Pencil { family, height } => pencil(family, *height),
        Command::Nilpotent { group, k, via_pencils, height } => {
            nilpotent(c, group, *k, *via_pencils, *height)
        }
        Command::Flow { matrix, t_max, steps, csv } => flow(c, matrix, *t_max, *steps, csv.as_deref()),
        Command::CheckSubmodular { instance, builtin } => check_submodular(instance.as_deref(), *builtin),
        Command::Ball { generators, heisenberg, n_max, beta } => {
            ball(generators.as_deref(), *heisenberg, *n_max, *beta)
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Budget(_) => 3,
        Error::Parse { .. }
        | Error::Domain(_)
        | Error::Dimension(_)
        | Error::Threshold(_)
        | Error::Unsupported(_)
        | Error::Hypothesis(_) => 2,
        _ => 1,
    }
}

fn emit(cli: &Cli, report: &Report) -> Result<(), Failure> {
    let text = report.to_string();
    match &cli.common.out {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Io(path.clone(), e)),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut report = header(&cli);
    let (code, status) = match run(&cli) {
        Ok(body) => {
            report.extend(&body);
            (0, "ok".to_string())
        }
        Err(Failure::Mismatch(body)) => {
            report.extend(&body);
            (4, "calibration mismatch".to_string())
        }
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            (exit_code(&e), e.to_string())
        }
        Err(Failure::Io(path, e)) => {
            eprintln!("error: {}: {e}", path.display());
            (2, format!("cannot read {}", path.display()))
        }
    };
    report.push("status", status).push("exit_code", code);
    if let Err(Failure::Io(path, e)) = emit(&cli, &report) {
        eprintln!("error: {}: {e}", path.display());
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}
