//! Problem and scenario documents, the bundled case study, sensitivity
//! runs and report emission.

mod document;
pub mod fixture;
mod report;
mod sensitivity;

use std::path::PathBuf;

use thiserror::Error;

pub use document::{
    load_problem, load_scenarios, parse_problem, parse_scenarios, AlternativeDoc, CriterionDoc, LoadedProblem,
    ProblemDocument, RatingDoc, Scenario, ScenarioSet,
};
pub use report::{
    emit_report, format_fixed, ranking_summary, scale_table, scenario_rank_table, ReportBundle, ReportOptions,
};
pub use sensitivity::{run_sensitivity, ScenarioRanking};

#[derive(Debug, Error)]
pub enum AppError {
    #[error("{source_name}: malformed document: {message}")]
    Parse { source_name: String, message: String },

    #[error("{field}: {message}")]
    Validation { field: String, message: String },

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Engine(#[from] crate::Error),
}

impl AppError {
    pub(crate) fn validation(field: impl Into<String>, message: impl Into<String>) -> Self {
        AppError::Validation {
            field: field.into(),
            message: message.into(),
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        AppError::Io {
            path: path.into(),
            source,
        }
    }

    /// Process exit code: 3 for I/O failures, 2 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            AppError::Io { .. } => 3,
            _ => 2,
        }
    }
}
