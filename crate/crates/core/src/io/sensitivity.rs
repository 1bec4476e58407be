use rayon::prelude::*;

use super::{AppError, ScenarioSet};
use crate::error::Error;
use crate::group::{DecisionProblem, LinguisticScale};
use crate::topsis::{evaluate, RankingResult};

#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioRanking {
    pub name: String,
    pub ranking: RankingResult<f64>,
}

/// Re-ranks the problem once per scenario weight vector. Output follows the
/// scenario order regardless of how the runs are scheduled.
pub fn run_sensitivity(
    problem: &DecisionProblem<f64>,
    scale: &LinguisticScale<f64>,
    scenarios: &ScenarioSet,
) -> Result<Vec<ScenarioRanking>, AppError> {
    let q = problem.criteria().len();
    if let Some(bad) = scenarios.scenarios.iter().find(|s| s.weights.len() != q) {
        return Err(Error::DimensionMismatch {
            what: "scenario weights",
            expected: q,
            found: bad.weights.len(),
        }
        .into());
    }
    scenarios
        .scenarios
        .par_iter()
        .map(|s| {
            let reweighted = problem.with_weights(&s.weights)?;
            Ok(ScenarioRanking {
                name: s.name.clone(),
                ranking: evaluate(&reweighted, scale)?.ranking,
            })
        })
        .collect()
}
