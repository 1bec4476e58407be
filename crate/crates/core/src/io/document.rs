use std::collections::{BTreeMap, HashSet};
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::AppError;
use crate::fuzzy::TriangularFuzzyNumber;
use crate::group::{Alternative, Criterion, CriterionKind, DecisionProblem, LinguisticScale, Rating};

/// On-disk form of a decision problem.
///
/// `ratings` is indexed `[alternative][criterion][expert]`; each entry is a
/// scale term code such as `"MG"` or an explicit `[l, m, u]` triple.
/// `scale` entries override or extend the default seven-term scale.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemDocument {
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub scale: BTreeMap<String, [f64; 3]>,
    pub criteria: Vec<CriterionDoc>,
    pub alternatives: Vec<AlternativeDoc>,
    pub experts: Vec<String>,
    pub ratings: Vec<Vec<Vec<RatingDoc>>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CriterionDoc {
    pub id: String,
    #[serde(default)]
    pub name: String,
    pub kind: CriterionKind,
    pub weight: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AlternativeDoc {
    Id(String),
    Named(NamedAlternative),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NamedAlternative {
    pub id: String,
    #[serde(default)]
    pub name: String,
}

impl AlternativeDoc {
    fn id(&self) -> &str {
        match self {
            AlternativeDoc::Id(id) => id,
            AlternativeDoc::Named(n) => &n.id,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RatingDoc {
    Term(String),
    Triple([f64; 3]),
}

/// A validated problem together with the scale its terms resolve against.
#[derive(Debug, Clone, PartialEq)]
pub struct LoadedProblem {
    pub problem: DecisionProblem<f64>,
    pub scale: LinguisticScale<f64>,
}

fn unique_ids<'a>(section: &str, ids: impl Iterator<Item = &'a str>) -> Result<(), AppError> {
    let mut seen = HashSet::new();
    for (k, id) in ids.enumerate() {
        if id.is_empty() {
            return Err(AppError::validation(format!("{section}[{k}]"), "id must not be empty"));
        }
        if !seen.insert(id) {
            return Err(AppError::validation(
                format!("{section}[{k}]"),
                format!("duplicate id `{id}`"),
            ));
        }
    }
    Ok(())
}

fn triple(field: &str, v: [f64; 3]) -> Result<TriangularFuzzyNumber<f64>, AppError> {
    if v.iter().any(|x| !x.is_finite()) {
        return Err(AppError::validation(field, "components must be finite"));
    }
    TriangularFuzzyNumber::new(v[0], v[1], v[2]).map_err(|e| AppError::validation(field, e.to_string()))
}

impl ProblemDocument {
    /// Checks every invariant, reporting the path of the first offending field.
    pub fn validate(&self) -> Result<LoadedProblem, AppError> {
        let mut scale = LinguisticScale::seven_point();
        for (code, &v) in &self.scale {
            let value = triple(&format!("scale.{code}"), v)?;
            let name = scale
                .terms()
                .iter()
                .find(|t| &t.code == code)
                .map(|t| t.name.clone())
                .unwrap_or_else(|| code.clone());
            scale.insert(code.clone(), name, value);
        }

        let (p, q, k) = (self.alternatives.len(), self.criteria.len(), self.experts.len());
        if p < 2 {
            return Err(AppError::validation(
                "alternatives",
                format!("need at least 2 alternatives, got {p}"),
            ));
        }
        if q < 1 {
            return Err(AppError::validation("criteria", "need at least 1 criterion"));
        }
        if k < 1 {
            return Err(AppError::validation("experts", "need at least 1 expert"));
        }
        unique_ids("alternatives", self.alternatives.iter().map(AlternativeDoc::id))?;
        unique_ids("criteria", self.criteria.iter().map(|c| c.id.as_str()))?;
        unique_ids("experts", self.experts.iter().map(String::as_str))?;

        for (j, c) in self.criteria.iter().enumerate() {
            if !c.weight.is_finite() || c.weight < 0.0 {
                return Err(AppError::validation(
                    format!("criteria[{j}].weight"),
                    format!(
                        "criterion {} has weight {}, expected a finite value >= 0",
                        c.id, c.weight
                    ),
                ));
            }
        }
        if self.criteria.iter().all(|c| c.weight == 0.0) {
            return Err(AppError::validation("criteria", "at least one weight must be positive"));
        }

        if self.ratings.len() != p {
            return Err(AppError::validation(
                "ratings",
                format!("expected ratings for {p} alternatives, found {}", self.ratings.len()),
            ));
        }
        let mut ratings = Vec::with_capacity(p);
        for (i, per_alt) in self.ratings.iter().enumerate() {
            let alt = self.alternatives[i].id();
            if per_alt.len() != q {
                return Err(AppError::validation(
                    format!("ratings[{i}]"),
                    format!("alternative {alt} rates {} criteria, expected {q}", per_alt.len()),
                ));
            }
            let mut row = Vec::with_capacity(q);
            for (j, cell) in per_alt.iter().enumerate() {
                let crit = &self.criteria[j].id;
                if cell.len() < k {
                    let missing: Vec<&str> = self.experts[cell.len()..].iter().map(String::as_str).collect();
                    return Err(AppError::validation(
                        format!("ratings[{i}][{j}]"),
                        format!(
                            "missing rating for alternative {alt}, criterion {crit}, expert {}",
                            missing.join(", ")
                        ),
                    ));
                }
                if cell.len() > k {
                    return Err(AppError::validation(
                        format!("ratings[{i}][{j}]"),
                        format!(
                            "alternative {alt}, criterion {crit} has {} ratings for {k} experts",
                            cell.len()
                        ),
                    ));
                }
                let mut ratings_cell = Vec::with_capacity(k);
                for (e, r) in cell.iter().enumerate() {
                    let field = format!("ratings[{i}][{j}][{e}]");
                    ratings_cell.push(match r {
                        RatingDoc::Term(code) => {
                            if !scale.contains(code) {
                                return Err(AppError::validation(field, format!("unknown linguistic term `{code}`")));
                            }
                            Rating::Term(code.clone())
                        }
                        RatingDoc::Triple(v) => Rating::Fuzzy(triple(&field, *v)?),
                    });
                }
                row.push(ratings_cell);
            }
            ratings.push(row);
        }

        let alternatives = self
            .alternatives
            .iter()
            .map(|a| match a {
                AlternativeDoc::Id(id) => Alternative {
                    id: id.clone(),
                    name: id.clone(),
                },
                AlternativeDoc::Named(n) => Alternative {
                    id: n.id.clone(),
                    name: n.name.clone(),
                },
            })
            .collect();
        let criteria = self
            .criteria
            .iter()
            .map(|c| Criterion {
                id: c.id.clone(),
                name: c.name.clone(),
                kind: c.kind,
                weight: c.weight,
            })
            .collect();
        let problem = DecisionProblem::new(alternatives, criteria, self.experts.clone(), ratings)
            .map_err(|e| AppError::validation("problem", e.to_string()))?;
        Ok(LoadedProblem { problem, scale })
    }

    /// Document form of a problem; scale terms that differ from the default
    /// seven-term scale are written as overrides.
    pub fn from_problem(problem: &DecisionProblem<f64>, scale: &LinguisticScale<f64>) -> Self {
        let default = LinguisticScale::<f64>::seven_point();
        let overrides = scale
            .terms()
            .iter()
            .filter(|t| default.lookup(&t.code).ok() != Some(t.value))
            .map(|t| (t.code.clone(), t.value.to_array()))
            .collect();
        let (p, q) = (problem.alternatives().len(), problem.criteria().len());
        ProblemDocument {
            scale: overrides,
            criteria: problem
                .criteria()
                .iter()
                .map(|c| CriterionDoc {
                    id: c.id.clone(),
                    name: c.name.clone(),
                    kind: c.kind,
                    weight: c.weight,
                })
                .collect(),
            alternatives: problem
                .alternatives()
                .iter()
                .map(|a| {
                    AlternativeDoc::Named(NamedAlternative {
                        id: a.id.clone(),
                        name: a.name.clone(),
                    })
                })
                .collect(),
            experts: problem.experts().to_vec(),
            ratings: (0..p)
                .map(|i| {
                    (0..q)
                        .map(|j| {
                            problem
                                .ratings(i, j)
                                .iter()
                                .map(|r| match r {
                                    Rating::Term(code) => RatingDoc::Term(code.clone()),
                                    Rating::Fuzzy(x) => RatingDoc::Triple(x.to_array()),
                                })
                                .collect()
                        })
                        .collect()
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("problem document serializes")
    }
}

pub fn parse_problem(text: &str, source_name: &str) -> Result<LoadedProblem, AppError> {
    let doc: ProblemDocument = serde_json::from_str(text).map_err(|e| AppError::Parse {
        source_name: source_name.to_owned(),
        message: e.to_string(),
    })?;
    doc.validate()
}

pub fn load_problem(path: impl AsRef<Path>) -> Result<LoadedProblem, AppError> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| AppError::io(path, e))?;
    parse_problem(&text, &path.display().to_string())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    pub name: String,
    pub weights: Vec<f64>,
}

/// Named weight vectors for a sensitivity study.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioSet {
    pub scenarios: Vec<Scenario>,
}

impl ScenarioSet {
    pub fn validate(&self) -> Result<(), AppError> {
        if self.scenarios.is_empty() {
            return Err(AppError::validation("scenarios", "no scenarios given"));
        }
        unique_ids("scenarios", self.scenarios.iter().map(|s| s.name.as_str()))?;
        for (s, scenario) in self.scenarios.iter().enumerate() {
            for (j, &w) in scenario.weights.iter().enumerate() {
                if !w.is_finite() || w < 0.0 {
                    return Err(AppError::validation(
                        format!("scenarios[{s}].weights[{j}]"),
                        format!("weight {w} must be finite and >= 0"),
                    ));
                }
            }
            if !scenario.weights.iter().any(|&w| w > 0.0) {
                return Err(AppError::validation(
                    format!("scenarios[{s}].weights"),
                    "at least one weight must be positive",
                ));
            }
        }
        Ok(())
    }
}

pub fn parse_scenarios(text: &str, source_name: &str) -> Result<ScenarioSet, AppError> {
    let set: ScenarioSet = serde_json::from_str(text).map_err(|e| AppError::Parse {
        source_name: source_name.to_owned(),
        message: e.to_string(),
    })?;
    set.validate()?;
    Ok(set)
}

pub fn load_scenarios(path: impl AsRef<Path>) -> Result<ScenarioSet, AppError> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| AppError::io(path, e))?;
    parse_scenarios(&text, &path.display().to_string())
}
