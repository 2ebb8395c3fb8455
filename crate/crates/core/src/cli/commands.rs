use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use super::config::load_config;
use super::expr::{parse_expr, parse_point, parse_points, parse_profile, parse_segment};
use crate::criteria::casselman;
use crate::error::{Error, Result};
use crate::format;
use crate::hopf::{comult_iterate, cuspidal_jacquet, filter, mstar, FilterSpec};
use crate::model::{CuspWord, LineSet, Multisegment, RElem, Segment};
use crate::structure::{classify_square_integrable, decide_pair, tempered_product_class, SiClass};
use crate::verify::{run_suite, Check, InstanceWindow};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "jacquet", version, about = "Segments, Jacquet modules and the Hopf algebra R")]
struct Cli {
    /// Line declarations; overrides JACQUET_CONFIG.
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print m*(expr).
    Mstar {
        #[arg(required = true, num_args = 1.., allow_hyphen_values = true)]
        expr: Vec<String>,
    },
    /// Print a Jacquet module of expr.
    Jacquet {
        #[arg(long, value_enum, default_value_t = Level::Cuspidal)]
        level: Level,
        #[arg(required = true, num_args = 1.., allow_hyphen_values = true)]
        expr: Vec<String>,
    },
    /// Print a filtered part of the Jacquet module of expr.
    Filter {
        #[arg(long, value_enum)]
        kind: FilterKind,
        /// Basis label for `left` and `right`.
        #[arg(long)]
        label: Option<String>,
        /// Supports `points;points;...` for `supp`.
        #[arg(long, allow_hyphen_values = true)]
        profile: Option<String>,
        #[arg(required = true, num_args = 1.., allow_hyphen_values = true)]
        expr: Vec<String>,
    },
    /// Decide irreducibility of d(seg) x d(seg).
    Decide {
        #[arg(allow_hyphen_values = true)]
        first: String,
        #[arg(allow_hyphen_values = true)]
        second: String,
    },
    /// Classify square-integrable representations with the given support.
    #[command(name = "classify-si")]
    ClassifySi {
        #[arg(required = true, num_args = 1.., allow_hyphen_values = true)]
        points: Vec<String>,
    },
    /// Label of a product of unitary segments.
    Tempered {
        #[arg(required = true, num_args = 1.., allow_hyphen_values = true)]
        segments: Vec<String>,
    },
    /// Casselman test on a cuspidal word.
    Casselman {
        #[arg(required = true, num_args = 1.., allow_hyphen_values = true)]
        word: Vec<String>,
    },
    /// Run verification checks.
    Verify {
        /// Comma-separated check names, or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, allow_hyphen_values = true)]
        window: Option<String>,
        /// Append elapsed time to each report line.
        #[arg(long)]
        timings: bool,
    },
    /// List the labels of a window.
    Enumerate {
        #[arg(long, allow_hyphen_values = true)]
        window: Option<String>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Level {
    One,
    Cuspidal,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FilterKind {
    Bottom,
    Left,
    Right,
    Supp,
}

/// Text produced by a command and whether a verification check failed.
#[derive(Debug, Default)]
pub struct Outcome {
    pub lines: Vec<String>,
    pub failed: bool,
}

impl From<Vec<String>> for Outcome {
    fn from(lines: Vec<String>) -> Self {
        Outcome { lines, failed: false }
    }
}

fn or_zero(lines: Vec<String>) -> Vec<String> {
    if lines.is_empty() {
        vec!["0".to_string()]
    } else {
        lines
    }
}

pub fn mstar_lines(x: &RElem) -> Vec<String> {
    or_zero(format::tensor_lines(&mstar(x)))
}

pub fn jacquet_lines(x: &RElem) -> Vec<String> {
    or_zero(format::cusp_lines(&cuspidal_jacquet(x)))
}

pub fn filter_lines(x: &RElem, spec: &FilterSpec) -> Result<Vec<String>> {
    let arity = match spec {
        FilterSpec::SuppProfile(p) => p.len(),
        _ => 2,
    };
    Ok(or_zero(format::tensor_lines(&filter(&comult_iterate(x, arity)?, spec)?)))
}

pub fn decide_line(a: &Segment, b: &Segment) -> String {
    let d = decide_pair(a, b);
    match (&d.langlands_class, &d.other_summand) {
        (Some(l), Some(other)) => {
            format!("length-two: L = {}; other = {}", format::relem_inline(l), format::label(other))
        }
        _ => format!("irreducible: {}", format::label(&d.class_label)),
    }
}

pub fn classify_line(class: &SiClass) -> String {
    match class {
        SiClass::SquareIntegrable(s) => format!("square-integrable: {}", format::segment(s)),
        SiClass::EssentiallyOnly(s) => format!("none (essentially square-integrable only: {})", format::segment(s)),
        SiClass::None => "none".to_string(),
    }
}

pub fn casselman_lines(word: &CuspWord) -> Result<Vec<String>> {
    let v = casselman(word)?;
    let weights: Vec<String> = word.points().iter().map(|p| p.casselman_weight().to_string()).collect();
    Ok(vec![
        format!("word: {}", format::word(word, false)),
        format!("weights: {}", weights.join(",")),
        format!("raw sum: {}", v.raw_sum),
        format!("weighted sum: {}", v.weighted_sum),
        format!("sum_zero: {}", v.sum_zero),
        format!("partials_positive: {}", v.partials_positive),
        format!("square_integrable: {}", v.square_integrable),
        format!("essentially: {}", v.essentially),
    ])
}

pub fn verify_outcome(suite: &str, window: Option<&str>, lines: &LineSet, timings: bool) -> Result<Outcome> {
    let checks = Check::parse_list(suite)?;
    let w = match window {
        Some(spec) => InstanceWindow::parse(spec, lines)?,
        None => InstanceWindow::standard(lines),
    };
    let reports = run_suite(&checks, &w, lines)?;
    let mut out = vec![format!("window: {w}")];
    for r in &reports {
        let mut rendered = r.render();
        if timings {
            rendered[0].push_str(&format!(" ({:.3} s)", r.elapsed.as_secs_f64()));
        }
        out.extend(rendered);
    }
    let passed = reports.iter().filter(|r| r.passed()).count();
    out.push(format!("summary: {} checks, {} passed, {} failed", reports.len(), passed, reports.len() - passed));
    Ok(Outcome { lines: out, failed: passed != reports.len() })
}

fn split_list(args: &[String], sep: char) -> Vec<String> {
    args.iter().flat_map(|a| a.split(sep)).map(str::trim).filter(|s| !s.is_empty()).map(String::from).collect()
}

fn execute(command: Command, lines: &LineSet) -> Result<Outcome> {
    let expr_of = |parts: &[String]| parse_expr(&parts.join(" "), lines);
    Ok(match command {
        Command::Mstar { expr } => mstar_lines(&expr_of(&expr)?).into(),
        Command::Jacquet { level: Level::One, expr } => mstar_lines(&expr_of(&expr)?).into(),
        Command::Jacquet { level: Level::Cuspidal, expr } => jacquet_lines(&expr_of(&expr)?).into(),
        Command::Filter { kind, label, profile, expr } => {
            let basis_label = |text: Option<String>| -> Result<Multisegment> {
                let text = text.ok_or_else(|| Error::Precondition("--label is required for this kind".into()))?;
                let x = parse_expr(&text, lines)?;
                x.as_basis()
                    .cloned()
                    .ok_or_else(|| Error::Precondition(format!("--label `{text}` is not a basis label")))
            };
            let spec = match kind {
                FilterKind::Bottom => FilterSpec::Bottom,
                FilterKind::Left => FilterSpec::LeftEquals(basis_label(label)?),
                FilterKind::Right => FilterSpec::RightEquals(basis_label(label)?),
                FilterKind::Supp => {
                    let text = profile.ok_or_else(|| Error::Precondition("--profile is required for supp".into()))?;
                    FilterSpec::supp_profile(parse_profile(&text, lines)?)
                }
            };
            filter_lines(&expr_of(&expr)?, &spec)?.into()
        }
        Command::Decide { first, second } => {
            vec![decide_line(&parse_segment(&first, lines)?, &parse_segment(&second, lines)?)].into()
        }
        Command::ClassifySi { points } => {
            let pts = parse_points(&points.join(","), lines)?;
            vec![classify_line(&classify_square_integrable(&pts, lines)?)].into()
        }
        Command::Tempered { segments } => {
            let segs =
                split_list(&segments, ';').iter().map(|s| parse_segment(s, lines)).collect::<Result<Vec<_>>>()?;
            if segs.is_empty() {
                return Err(Error::Empty("tempered needs at least one segment"));
            }
            vec![format!("irreducible: {}", format::label(&tempered_product_class(&segs, lines)?))].into()
        }
        Command::Casselman { word } => {
            let letters = split_list(&word, ',');
            let w: CuspWord = letters.iter().map(|p| parse_point(p, lines)).collect::<Result<_>>()?;
            casselman_lines(&w)?.into()
        }
        Command::Verify { suite, window, timings } => verify_outcome(&suite, window.as_deref(), lines, timings)?,
        Command::Enumerate { window } => {
            let w = match window {
                Some(spec) => InstanceWindow::parse(&spec, lines)?,
                None => InstanceWindow::standard(lines),
            };
            w.labels().iter().map(format::label).collect::<Vec<_>>().into()
        }
    })
}

/// Runs the command line `args` (program name first), writing results to
/// `out` and diagnostics to `err`. Returns 0 on success, 1 when a
/// verification check fails and 2 on usage, parse or domain errors.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let result = load_config(cli.config.as_deref()).and_then(|lines| execute(cli.command, &lines));
    if let Ok(outcome) = &result {
        for line in &outcome.lines {
            if writeln!(out, "{line}").is_err() {
                return EXIT_USAGE;
            }
        }
    }
    if let Err(e) = &result {
        let _ = writeln!(err, "error: {e}");
    }
    exit_code(&result)
}

/// 0 for success, 1 for a failed check, 2 for any error.
pub fn exit_code(result: &Result<Outcome>) -> i32 {
    match result {
        Ok(Outcome { failed: false, .. }) => EXIT_OK,
        Ok(Outcome { failed: true, .. }) => EXIT_CHECK_FAILED,
        Err(_) => EXIT_USAGE,
    }
}
