use std::error::Error as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use credtopsis::io::fixture::{msw_problem, msw_scenarios};
use credtopsis::io::{
    emit_report, load_problem, load_scenarios, ranking_summary, run_sensitivity, scale_table, scenario_rank_table,
    AppError, LoadedProblem, ReportBundle, ReportOptions, ScenarioSet,
};
use credtopsis::{evaluate, Scale};

/// Group decision making with credibilistic TOPSIS.
#[derive(Parser)]
#[command(name = "credtopsis", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the bundled waste-treatment case study, including its weight scenarios.
    Demo {
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 3)]
        decimals: usize,
    },
    /// Rank the alternatives of a problem document.
    Evaluate {
        #[arg(long)]
        problem: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write the aggregated, normalized, mean and spread matrices.
        #[arg(long)]
        emit_intermediates: bool,
        #[arg(long, default_value_t = 3)]
        decimals: usize,
        /// Write an SVG bar chart of the closeness coefficients.
        #[arg(long)]
        chart: bool,
    },
    /// Re-rank a problem under each weight vector of a scenario document.
    Sensitivity {
        #[arg(long)]
        problem: PathBuf,
        #[arg(long)]
        scenarios: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 3)]
        decimals: usize,
    },
    /// Print the linguistic rating scale.
    Scale {
        #[arg(long)]
        show: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            let mut source = e.source();
            while let Some(s) = source {
                eprintln!("  caused by: {s}");
                source = s.source();
            }
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn run(command: Command) -> Result<(), AppError> {
    match command {
        Command::Demo { out, decimals } => {
            let options = ReportOptions {
                decimals,
                emit_chart: true,
                intermediates: true,
            };
            rank(&msw_problem(), Some(&msw_scenarios()), out.as_deref(), &options)
        }
        Command::Evaluate {
            problem,
            out,
            emit_intermediates,
            decimals,
            chart,
        } => {
            let options = ReportOptions {
                decimals,
                emit_chart: chart,
                intermediates: emit_intermediates,
            };
            rank(&load_problem(&problem)?, None, out.as_deref(), &options)
        }
        Command::Sensitivity {
            problem,
            scenarios,
            out,
            decimals,
        } => {
            let loaded = load_problem(&problem)?;
            let set = load_scenarios(&scenarios)?;
            let options = ReportOptions {
                decimals,
                emit_chart: false,
                intermediates: false,
            };
            rank(&loaded, Some(&set), out.as_deref(), &options)
        }
        Command::Scale { show: _ } => {
            print!("{}", scale_table(&Scale::seven_point()));
            Ok(())
        }
    }
}

fn rank(
    loaded: &LoadedProblem,
    scenarios: Option<&ScenarioSet>,
    out: Option<&Path>,
    options: &ReportOptions,
) -> Result<(), AppError> {
    let evaluation = evaluate(&loaded.problem, &loaded.scale)?;
    if let Some(w) = &evaluation.ranking.weight_warning {
        eprintln!("warning: {w}");
    }
    print!("{}", ranking_summary(&evaluation.ranking, options.decimals));

    let mut bundle = ReportBundle::new(evaluation);
    if let Some(set) = scenarios {
        let results = run_sensitivity(&loaded.problem, &loaded.scale, set)?;
        println!();
        print!("{}", scenario_rank_table(&results));
        bundle = bundle.with_scenarios(results);
    }
    if let Some(dir) = out {
        let files = emit_report(&bundle, dir, options)?;
        println!();
        for f in files {
            println!("wrote {}", f.display());
        }
    }
    Ok(())
}
