use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use vpro_core::json::PPartitionJson;
use vpro_core::{enumerate_labelings, enumerate_ppartitions, linear_extensions, make_v, product_with_chain};
use vpro_verify::report::{export_report, Format};
use vpro_verify::{orbit_report, parse_input, render_diagram, run_suite, Error, RenderFormat, SuiteConfig};

#[derive(Parser)]
#[command(name = "vpro", version, about = "Promotion and rowmotion on V x [n]: enumeration, orbits, verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Object {
    Linext,
    Labelings,
    Words,
    Ppartitions,
}

#[derive(Clone, Copy, ValueEnum)]
enum Action {
    ProLinext,
    ProPstrict,
    ProKreweras,
    Row,
    Togpro,
}

impl Action {
    fn name(self) -> &'static str {
        match self {
            Action::ProLinext => "pro-linext",
            Action::ProPstrict => "pro-pstrict",
            Action::ProKreweras => "pro-kreweras",
            Action::Row => "row",
            Action::Togpro => "togpro",
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Main,
    Rowmotion,
    Layers,
    Doublearcs,
    Standardization,
    Classical,
    Equivariance,
    Figures,
    Properties,
    All,
}

impl Suite {
    fn name(self) -> String {
        self.to_possible_value().expect("no skipped variants").get_name().to_string()
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum DiagramFormat {
    Ascii,
    Svg,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Json,
    Csv,
}

#[derive(clap::Args)]
struct GridArgs {
    #[arg(long)]
    ell_max: Option<usize>,
    #[arg(long)]
    q_max: Option<usize>,
    /// Upper bound on ell + q.
    #[arg(long)]
    sum_max: Option<usize>,
    /// Largest number of elements enumerated per grid point.
    #[arg(long, default_value_t = vpro_verify::suites::DEFAULT_CEILING)]
    ceiling: usize,
}

impl GridArgs {
    fn config(&self) -> SuiteConfig {
        SuiteConfig {
            ell_max: self.ell_max,
            q_max: self.q_max,
            sum_max: self.sum_max,
            ceiling: self.ceiling,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// List every object of a family, one JSON value per line.
    Enumerate {
        #[arg(long, value_enum)]
        object: Object,
        /// Chain length for linext; bound for labelings, words and P-partitions.
        #[arg(long)]
        ell: usize,
        #[arg(long)]
        q: Option<usize>,
        /// Chain length for P-partitions (defaults to q - 2).
        #[arg(long)]
        k: Option<usize>,
    },
    /// Cycle structure of an action, as an orbit report.
    Orbits {
        #[arg(long, value_enum)]
        action: Action,
        #[arg(long)]
        ell: usize,
        #[arg(long, default_value_t = 0)]
        q: usize,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[command(flatten)]
        grid: GridArgs,
        /// Print every claim instead of only failures.
        #[arg(long)]
        verbose: bool,
    },
    /// Draw the bump diagram of a word read from a file.
    Render {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "ascii")]
        format: DiagramFormat,
    },
    /// Write a suite report or an orbit report to a file.
    Export {
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value = "json")]
        format: ReportFormat,
        #[arg(long, value_enum, conflicts_with = "action", required_unless_present = "action")]
        suite: Option<Suite>,
        #[arg(long, value_enum)]
        action: Option<Action>,
        #[arg(long, required_if_eq("action", "pro-linext"))]
        ell: Option<usize>,
        #[arg(long)]
        q: Option<usize>,
        #[command(flatten)]
        grid: GridArgs,
    },
}

/// Exit status 1: a claim or check failed. 2: bad usage or configuration.
enum Outcome {
    Pass,
    Fail,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Fail) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<Outcome, Error> {
    match command {
        Command::Enumerate { object, ell, q, k } => enumerate(object, ell, q, k),
        Command::Orbits { action, ell, q } => {
            let report = orbit_report(action.name(), ell, q)?;
            println!("{}", serde_json::to_string(&report).expect("serializable"));
            Ok(verdict(report.checks.values().all(|&b| b)))
        }
        Command::Verify { suite, grid, verbose } => {
            let report = run_suite(&suite.name(), &grid.config())?;
            for c in &report.claims {
                if verbose || !c.pass {
                    let status = if c.pass { "PASS" } else { "FAIL" };
                    println!("{status} {} {}", c.id, c.params);
                    if let Some(cx) = &c.counterexample {
                        println!("  counterexample: {cx}");
                    }
                }
            }
            let failed = report.failures().count();
            println!(
                "{}: {} claims, {} failed, {} ms",
                report.suite,
                report.claims.len(),
                failed,
                report.duration_ms
            );
            Ok(verdict(failed == 0))
        }
        Command::Render { input, format } => {
            let text = std::fs::read_to_string(&input)?;
            let diagram = parse_input(&text)?;
            let format = match format {
                DiagramFormat::Ascii => RenderFormat::Ascii,
                DiagramFormat::Svg => RenderFormat::Svg,
            };
            print!("{}", render_diagram(&diagram, format));
            Ok(Outcome::Pass)
        }
        Command::Export {
            out,
            format,
            suite,
            action,
            ell,
            q,
            grid,
        } => {
            let format = match format {
                ReportFormat::Json => Format::Json,
                ReportFormat::Csv => Format::Csv,
            };
            if let Some(action) = action {
                let ell = ell.ok_or_else(|| Error::InvalidParams("--ell is required with --action".into()))?;
                let report = orbit_report(action.name(), ell, q.unwrap_or(0))?;
                export_report(&report, &out, format)?;
                Ok(verdict(report.checks.values().all(|&b| b)))
            } else {
                let suite = suite.expect("clap requires --suite or --action");
                let report = run_suite(&suite.name(), &grid.config())?;
                export_report(&report, &out, format)?;
                Ok(verdict(report.passed()))
            }
        }
    }
}

fn verdict(pass: bool) -> Outcome {
    if pass {
        Outcome::Pass
    } else {
        Outcome::Fail
    }
}

fn enumerate(object: Object, ell: usize, q: Option<usize>, k: Option<usize>) -> Result<Outcome, Error> {
    let need_q = || q.ok_or_else(|| Error::InvalidParams("--q is required".into()));
    let mut count = 0usize;
    let mut emit = |line: String| {
        println!("{line}");
        count += 1;
    };
    match object {
        Object::Linext => {
            let poset = std::sync::Arc::new(product_with_chain(&make_v(), ell)?);
            for e in linear_extensions(&poset) {
                emit(json!(e.labels()).to_string());
            }
        }
        Object::Labelings => {
            for f in enumerate_labelings(ell, need_q()?)? {
                emit(serde_json::to_string(&f).expect("serializable"));
            }
        }
        Object::Words => {
            for f in enumerate_labelings(ell, need_q()?)? {
                emit(vpro_core::word_of_labeling(&f).to_string());
            }
        }
        Object::Ppartitions => {
            let k = match k {
                Some(k) => k,
                None => need_q()?
                    .checked_sub(2)
                    .filter(|&k| k >= 1)
                    .ok_or_else(|| Error::InvalidParams("--q must be at least 3 without --k".into()))?,
            };
            let poset = std::sync::Arc::new(product_with_chain(&make_v(), k)?);
            for f in enumerate_ppartitions(&poset, ell) {
                let j = PPartitionJson::from_ppartition(&f)?;
                emit(serde_json::to_string(&j).expect("serializable"));
            }
        }
    }
    eprintln!("count {count}");
    Ok(Outcome::Pass)
}
