//! Linguistic rating scale, decision-problem model and multi-expert
//! aggregation into a single fuzzy decision matrix.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fuzzy::TriangularFuzzyNumber;
use crate::matrix::FuzzyMatrix;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq)]
pub struct ScaleTerm<T> {
    pub code: String,
    pub name: String,
    pub value: TriangularFuzzyNumber<T>,
}

/// Ordered mapping from linguistic term codes to fuzzy numbers.
#[derive(Debug, Clone, PartialEq)]
pub struct LinguisticScale<T> {
    terms: Vec<ScaleTerm<T>>,
}

const SEVEN_POINT: [(&str, &str, [f64; 3]); 7] = [
    ("VP", "Very Poor", [1.0, 1.0, 1.0]),
    ("P", "Poor", [1.0, 1.0, 3.0]),
    ("MP", "Medium Poor", [1.0, 3.0, 5.0]),
    ("F", "Fair", [3.0, 5.0, 7.0]),
    ("MG", "Medium Good", [5.0, 7.0, 9.0]),
    ("G", "Good", [7.0, 9.0, 10.0]),
    ("VG", "Very Good", [9.0, 10.0, 10.0]),
];

impl<T: Scalar> LinguisticScale<T> {
    pub fn empty() -> Self {
        Self { terms: Vec::new() }
    }

    /// The seven-term scale from Very Poor `(1, 1, 1)` to Very Good `(9, 10, 10)`.
    pub fn seven_point() -> Self {
        let terms = SEVEN_POINT
            .iter()
            .map(|&(code, name, [l, m, u])| ScaleTerm {
                code: code.to_owned(),
                name: name.to_owned(),
                value: TriangularFuzzyNumber::from_ordered(T::lit(l), T::lit(m), T::lit(u)),
            })
            .collect();
        Self { terms }
    }

    /// Adds a term, replacing any existing term with the same code in place.
    pub fn insert(&mut self, code: impl Into<String>, name: impl Into<String>, value: TriangularFuzzyNumber<T>) {
        let term = ScaleTerm {
            code: code.into(),
            name: name.into(),
            value,
        };
        match self.terms.iter_mut().find(|t| t.code == term.code) {
            Some(slot) => *slot = term,
            None => self.terms.push(term),
        }
    }

    pub fn lookup(&self, code: &str) -> Result<TriangularFuzzyNumber<T>> {
        self.terms
            .iter()
            .find(|t| t.code == code)
            .map(|t| t.value)
            .ok_or_else(|| Error::UnknownTerm(code.to_owned()))
    }

    pub fn contains(&self, code: &str) -> bool {
        self.terms.iter().any(|t| t.code == code)
    }

    pub fn terms(&self) -> &[ScaleTerm<T>] {
        &self.terms
    }
}

impl<T: Scalar> Default for LinguisticScale<T> {
    fn default() -> Self {
        Self::seven_point()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CriterionKind {
    /// Larger is better.
    Benefit,
    /// Smaller is better.
    Cost,
}

impl fmt::Display for CriterionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CriterionKind::Benefit => "benefit",
            CriterionKind::Cost => "cost",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Criterion<T> {
    pub id: String,
    pub name: String,
    pub kind: CriterionKind,
    pub weight: T,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alternative {
    pub id: String,
    pub name: String,
}

/// One expert's rating of one alternative on one criterion.
#[derive(Debug, Clone, PartialEq)]
pub enum Rating<T> {
    Term(String),
    Fuzzy(TriangularFuzzyNumber<T>),
}

impl<T: Scalar> Rating<T> {
    pub fn resolve(&self, scale: &LinguisticScale<T>) -> Result<TriangularFuzzyNumber<T>> {
        match self {
            Rating::Term(code) => scale.lookup(code),
            Rating::Fuzzy(value) => Ok(*value),
        }
    }
}

impl<T> From<&str> for Rating<T> {
    fn from(code: &str) -> Self {
        Rating::Term(code.to_owned())
    }
}

/// Alternatives, criteria, experts and the full `p × q × K` rating tensor.
#[derive(Debug, Clone, PartialEq)]
pub struct DecisionProblem<T> {
    alternatives: Vec<Alternative>,
    criteria: Vec<Criterion<T>>,
    experts: Vec<String>,
    // indexed [alternative][criterion][expert]
    ratings: Vec<Vec<Vec<Rating<T>>>>,
}

fn check_unique<'a>(what: &str, ids: impl Iterator<Item = &'a str>) -> Result<()> {
    let mut seen = HashSet::new();
    for id in ids {
        if !seen.insert(id) {
            return Err(Error::InvalidProblem(format!("duplicate {what} id `{id}`")));
        }
    }
    Ok(())
}

impl<T: Scalar> DecisionProblem<T> {
    pub fn new(
        alternatives: Vec<Alternative>,
        criteria: Vec<Criterion<T>>,
        experts: Vec<String>,
        ratings: Vec<Vec<Vec<Rating<T>>>>,
    ) -> Result<Self> {
        let (p, q, k) = (alternatives.len(), criteria.len(), experts.len());
        if p < 2 {
            return Err(Error::InvalidProblem(format!("need at least 2 alternatives, got {p}")));
        }
        if q < 1 {
            return Err(Error::InvalidProblem("need at least 1 criterion".into()));
        }
        if k < 1 {
            return Err(Error::InvalidProblem("need at least 1 expert".into()));
        }
        check_unique("alternative", alternatives.iter().map(|a| a.id.as_str()))?;
        check_unique("criterion", criteria.iter().map(|c| c.id.as_str()))?;
        check_unique("expert", experts.iter().map(String::as_str))?;
        validate_weights(criteria.iter().map(|c| c.weight))?;

        if ratings.len() != p {
            return Err(Error::DimensionMismatch {
                what: "ratings (alternatives)",
                expected: p,
                found: ratings.len(),
            });
        }
        for (i, per_alt) in ratings.iter().enumerate() {
            if per_alt.len() != q {
                return Err(Error::InvalidProblem(format!(
                    "alternative {} has ratings for {} criteria, expected {q}",
                    alternatives[i].id,
                    per_alt.len()
                )));
            }
            for (j, cell) in per_alt.iter().enumerate() {
                if cell.len() != k {
                    return Err(Error::InvalidProblem(format!(
                        "cell ({}, {}) has {} expert ratings, expected {k}",
                        alternatives[i].id,
                        criteria[j].id,
                        cell.len()
                    )));
                }
            }
        }
        Ok(Self {
            alternatives,
            criteria,
            experts,
            ratings,
        })
    }

    pub fn alternatives(&self) -> &[Alternative] {
        &self.alternatives
    }

    pub fn criteria(&self) -> &[Criterion<T>] {
        &self.criteria
    }

    pub fn experts(&self) -> &[String] {
        &self.experts
    }

    /// Expert ratings for alternative `i` on criterion `j`.
    pub fn ratings(&self, i: usize, j: usize) -> &[Rating<T>] {
        &self.ratings[i][j]
    }

    pub fn weights(&self) -> Vec<T> {
        self.criteria.iter().map(|c| c.weight).collect()
    }

    /// Same problem with criterion weights replaced.
    pub fn with_weights(&self, weights: &[T]) -> Result<Self> {
        if weights.len() != self.criteria.len() {
            return Err(Error::DimensionMismatch {
                what: "weight vector",
                expected: self.criteria.len(),
                found: weights.len(),
            });
        }
        validate_weights(weights.iter().copied())?;
        let mut out = self.clone();
        for (c, &w) in out.criteria.iter_mut().zip(weights) {
            c.weight = w;
        }
        Ok(out)
    }
}

pub(crate) fn validate_weights<T: Scalar>(weights: impl Iterator<Item = T>) -> Result<()> {
    let mut any_positive = false;
    for (j, w) in weights.enumerate() {
        if !(w >= T::zero()) || !w.is_finite() {
            return Err(Error::InvalidProblem(format!(
                "weight {j} must be finite and >= 0, got {w}"
            )));
        }
        any_positive |= w > T::zero();
    }
    if !any_positive {
        return Err(Error::InvalidProblem("at least one weight must be positive".into()));
    }
    Ok(())
}

/// Combines expert ratings: minimum lower bound, geometric mean of modes,
/// maximum upper bound.
pub fn aggregate_ratings<T: Scalar>(ratings: &[TriangularFuzzyNumber<T>]) -> Result<TriangularFuzzyNumber<T>> {
    let first = ratings.first().ok_or(Error::EmptyRatings)?;
    if let Some(bad) = ratings.iter().find(|r| !(r.m() > T::zero())) {
        return Err(Error::NonPositiveMode(bad.m().as_f64()));
    }
    let lower = ratings.iter().map(|r| r.l()).fold(first.l(), T::min);
    let upper = ratings.iter().map(|r| r.u()).fold(first.u(), T::max);
    let min_mode = ratings.iter().map(|r| r.m()).fold(first.m(), T::min);
    let max_mode = ratings.iter().map(|r| r.m()).fold(first.m(), T::max);

    let mode = if min_mode == max_mode {
        min_mode
    } else {
        let k = T::lit(ratings.len() as f64);
        let product = ratings.iter().fold(T::one(), |acc, r| acc * r.m());
        // keep the rounded root inside the range it must lie in
        product.powf(T::one() / k).max(min_mode).min(max_mode)
    };
    Ok(TriangularFuzzyNumber::from_ordered(lower, mode, upper))
}

/// Aggregated `p × q` fuzzy decision matrix.
pub fn build_decision_matrix<T: Scalar>(
    problem: &DecisionProblem<T>,
    scale: &LinguisticScale<T>,
) -> Result<FuzzyMatrix<T>> {
    let rows = problem.alternatives.iter().map(|a| a.id.clone()).collect();
    let cols = problem.criteria.iter().map(|c| c.id.clone()).collect();
    FuzzyMatrix::try_from_fn(rows, cols, |i, j| {
        let cell = || -> Result<_> {
            let tfns = problem.ratings[i][j]
                .iter()
                .map(|r| r.resolve(scale))
                .collect::<Result<Vec<_>>>()?;
            aggregate_ratings(&tfns)
        };
        cell().map_err(|e| Error::AtCell {
            alternative: problem.alternatives[i].id.clone(),
            criterion: problem.criteria[j].id.clone(),
            source: Box::new(e),
        })
    })
}
