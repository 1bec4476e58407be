//! The bundled municipal solid waste disposal case study: four disposal
//! methods rated by three experts on ten criteria, plus six alternative
//! weight scenarios.

use super::{parse_problem, parse_scenarios, LoadedProblem, ScenarioSet};

pub const MSW_PROBLEM_JSON: &str = include_str!("../../fixtures/msw.json");
pub const MSW_SCENARIOS_JSON: &str = include_str!("../../fixtures/msw_scenarios.json");

pub fn msw_problem() -> LoadedProblem {
    parse_problem(MSW_PROBLEM_JSON, "msw.json").expect("bundled fixture is valid")
}

pub fn msw_scenarios() -> ScenarioSet {
    parse_scenarios(MSW_SCENARIOS_JSON, "msw_scenarios.json").expect("bundled scenarios are valid")
}
