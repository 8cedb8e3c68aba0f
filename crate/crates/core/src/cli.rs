//! Command-line surface. `run_cli` takes the full argument vector (program
//! name first) and returns the exit status with both output streams, so the
//! binary stays a thin wrapper.

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use serde_json::json;

use crate::error::{Error, Result};
use crate::export::{export_presentation, ExportFormat};
use crate::invariants::evaluate;
use crate::presentation::{a2, a_wall, tau_conjugate, tietze_simplify, Presentation};
use crate::rewrite::{RewriteSystem, SearchBudget, Verdict};
use crate::syntax::{format, parse};
use crate::word::SurfaceParams;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USER_ERROR: i32 = 1;
pub const EXIT_UNKNOWN: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "sbraid", about = "Singular braid monoids on closed orientable surfaces")]
struct Cli {
    /// Number of strands.
    #[arg(long, global = true)]
    n: Option<usize>,

    /// Genus of the surface.
    #[arg(long, global = true)]
    genus: Option<usize>,

    /// Maximum words visited per search side.
    #[arg(long = "budget-nodes", global = true)]
    budget_nodes: Option<usize>,

    /// Maximum word length during search.
    #[arg(long = "budget-len", global = true)]
    budget_len: Option<usize>,

    /// Output format: json or text.
    #[arg(long, global = true, default_value = "text")]
    format: ExportFormat,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Echo a word in canonical form.
    Parse { word: String },
    /// Print the invariant profile of a word as JSON.
    Invariants { word: String },
    /// Print the full presentation.
    Relations,
    /// Search for a derivation between two words.
    Equiv { left: String, right: String },
    /// Print a derived word.
    Derived {
        #[command(subcommand)]
        which: Derived,
    },
    /// Print the presentation with τ_2..τ_{n-1} eliminated.
    Simplify,
}

#[derive(Debug, Subcommand)]
enum Derived {
    /// a_{i,r}: strand i crossing wall r.
    Air { i: usize, r: usize },
    /// A_{2,r}.
    A2 { r: usize },
    /// A word for τ_j conjugated from τ_i.
    Tauconj { i: usize, j: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CliOutput {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CliOutput {
    fn ok(stdout: String) -> Self {
        Self {
            status: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn user_error(message: String) -> Self {
        Self {
            status: EXIT_USER_ERROR,
            stdout: String::new(),
            stderr: message,
        }
    }
}

fn surface(cli: &Cli) -> std::result::Result<SurfaceParams, String> {
    let n = cli.n.ok_or("missing required flag --n")?;
    let genus = cli.genus.ok_or("missing required flag --genus")?;
    SurfaceParams::new(n, genus).map_err(|e| e.to_string())
}

fn with_newline(mut s: String) -> String {
    s.push('\n');
    s
}

fn render_error(error: &Error, input: Option<&str>) -> String {
    let mut out = format!("error: {error}\n");
    if let (Some(text), Error::Syntax { position, .. }) = (input, error) {
        out.push_str(&format!("  {text}\n  {}^\n", " ".repeat(*position)));
    }
    out
}

fn equiv(cli: &Cli, params: SurfaceParams, left: &str, right: &str) -> Result<CliOutput> {
    let u = parse(left, &params)?;
    let v = parse(right, &params)?;
    let defaults = SearchBudget::default_for(&u, &v);
    let budget = SearchBudget::new(
        cli.budget_len.unwrap_or(defaults.max_word_length),
        cli.budget_nodes.unwrap_or(defaults.max_nodes),
    )?;
    let system = RewriteSystem::standard(params);
    let verdict = system.equiv_search(&u, &v, &budget)?;

    let status = match verdict {
        Verdict::Unknown => EXIT_UNKNOWN,
        _ => EXIT_OK,
    };
    let stdout = match (&verdict, cli.format) {
        (Verdict::Equivalent(trace), ExportFormat::Text) => {
            let words = trace.replay(&system)?;
            let mut out = String::from("equivalent\n");
            out.push_str(&format!("  start: {}\n", format(&trace.start)));
            for (k, step) in trace.steps.iter().enumerate() {
                out.push_str(&format!(
                    "  {}. {} -> {}\n",
                    k + 1,
                    system.describe(step),
                    format(&words[k + 1])
                ));
            }
            out
        }
        (Verdict::Equivalent(trace), ExportFormat::Json) => {
            let steps: Vec<String> = trace.steps.iter().map(|s| system.describe(s)).collect();
            with_newline(
                serde_json::to_string_pretty(&json!({
                    "verdict": "equivalent",
                    "start": format(&trace.start),
                    "end": format(&trace.end),
                    "steps": steps,
                }))
                .expect("json value"),
            )
        }
        (Verdict::DistinctByInvariant(component), ExportFormat::Text) => {
            format!("distinct by invariant: {component}\n")
        }
        (Verdict::DistinctByInvariant(component), ExportFormat::Json) => with_newline(
            serde_json::to_string_pretty(&json!({
                "verdict": "distinct",
                "witness": component.to_string(),
            }))
            .expect("json value"),
        ),
        (Verdict::Unknown, ExportFormat::Text) => "unknown\n".to_string(),
        (Verdict::Unknown, ExportFormat::Json) => {
            with_newline(serde_json::to_string_pretty(&json!({"verdict": "unknown"})).expect("json value"))
        }
    };
    Ok(CliOutput {
        status,
        stdout,
        stderr: String::new(),
    })
}

fn dispatch(cli: &Cli, params: SurfaceParams) -> Result<CliOutput> {
    let text = |bytes: Vec<u8>| String::from_utf8(bytes).expect("exports are utf-8");
    Ok(match &cli.command {
        Command::Parse { word } => CliOutput::ok(with_newline(format(&parse(word, &params)?))),
        Command::Invariants { word } => {
            let profile = evaluate(&parse(word, &params)?, &params)?;
            CliOutput::ok(with_newline(
                serde_json::to_string_pretty(&profile).expect("profile is serializable"),
            ))
        }
        Command::Relations => CliOutput::ok(text(export_presentation(
            &Presentation::standard(params),
            cli.format,
        ))),
        Command::Equiv { left, right } => equiv(cli, params, left, right)?,
        Command::Derived { which } => {
            let word = match *which {
                Derived::Air { i, r } => a_wall(i, r, &params)?,
                Derived::A2 { r } => a2(r, &params)?,
                Derived::Tauconj { i, j } => tau_conjugate(i, j, &params)?,
            };
            CliOutput::ok(with_newline(format(&word)))
        }
        Command::Simplify => CliOutput::ok(text(export_presentation(
            &tietze_simplify(&Presentation::standard(params)),
            cli.format,
        ))),
    })
}

/// Parses `args` and runs one subcommand. Exit status 0 on success, 1 on
/// user errors, 2 when `equiv` returns an unknown verdict.
pub fn run_cli<I, T>(args: I) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => CliOutput::ok(rendered),
                _ => CliOutput::user_error(rendered),
            };
        }
    };
    let params = match surface(&cli) {
        Ok(params) => params,
        Err(message) => return CliOutput::user_error(format!("error: {message}\n")),
    };
    let input = match &cli.command {
        Command::Parse { word } | Command::Invariants { word } => Some(word.as_str()),
        _ => None,
    };
    match dispatch(&cli, params) {
        Ok(out) => out,
        Err(e) => CliOutput::user_error(render_error(&e, input)),
    }
}
