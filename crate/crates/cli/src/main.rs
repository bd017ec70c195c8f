use std::path::PathBuf;
use std::process::ExitCode;

use blowup_cli::examples::render_table;
use blowup_cli::{cmd_analyze, cmd_paper_examples, from_json, render_text, to_json, CliError, Family, Mode, Overrides};
use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(name = "blowup", version, about = "Blowup-algebra diagnostics for m-primary ideals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Bounds {
    /// Monomial order for Gröbner work (grevlex, lex)
    #[arg(long)]
    order: Option<String>,
    /// exact (over the declared field) or modular (over GF(32003))
    #[arg(long)]
    mode: Option<String>,
    #[arg(long)]
    nmax_reduction: Option<u32>,
    #[arg(long)]
    nmax_vv: Option<u32>,
    #[arg(long)]
    nmax_joint: Option<u32>,
    #[arg(long)]
    nmax_colon: Option<u32>,
    #[arg(long)]
    nmax_fiber: Option<u32>,
    /// Per-Gröbner-call watchdog in seconds
    #[arg(long)]
    timeout: Option<f64>,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze the ideal in a spec file
    Analyze {
        spec: PathBuf,
        /// Print the machine-readable report
        #[arg(long)]
        json: bool,
        /// Record per-stage wall time (reports are then not reproducible)
        #[arg(long)]
        timing: bool,
        #[command(flatten)]
        bounds: Bounds,
    },
    /// Run an example family and compare with its closed forms
    PaperExamples {
        /// ex1 or ex2
        family: String,
        #[arg(long)]
        from: u32,
        #[arg(long)]
        to: Option<u32>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value = "exact")]
        mode: String,
    },
    /// Re-render the text report from a JSON report
    Render { report: PathBuf },
}

fn parse_mode(s: &str) -> Result<Mode, CliError> {
    Mode::parse(s).ok_or_else(|| CliError::Usage(format!("unknown mode `{s}`")))
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Analyze { spec, json, timing, bounds } => {
            let overrides = Overrides {
                order: bounds.order,
                mode: bounds.mode.as_deref().map(parse_mode).transpose()?,
                nmax_reduction: bounds.nmax_reduction,
                nmax_vv: bounds.nmax_vv,
                nmax_joint: bounds.nmax_joint,
                nmax_colon: bounds.nmax_colon,
                nmax_fiber: bounds.nmax_fiber,
                timeout: bounds.timeout,
            };
            let report = cmd_analyze(&spec, &overrides, timing)?;
            if json {
                println!("{}", to_json(&report));
            } else {
                print!("{}", render_text(&report));
            }
        }
        Command::PaperExamples { family, from, to, jobs, json, mode } => {
            let fam = Family::parse(&family).ok_or_else(|| CliError::Usage(format!("unknown family `{family}`")))?;
            let results = cmd_paper_examples(fam, from, to.unwrap_or(from), jobs, parse_mode(&mode)?)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&results).expect("results serialize"));
            } else {
                print!("{}", render_table(fam, &results));
            }
            let failed = results.iter().filter(|m| !m.passed()).count();
            if failed > 0 {
                return Err(CliError::Mismatch(failed));
            }
        }
        Command::Render { report } => {
            let text = std::fs::read_to_string(&report).map_err(|e| CliError::Io(format!("{}: {e}", report.display())))?;
            let parsed = from_json(&text).map_err(|e| CliError::Parse { line: e.line(), message: e.to_string() })?;
            print!("{}", render_text(&parsed));
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap would exit 2, which we reserve for failed preconditions
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
