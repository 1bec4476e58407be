//! Credibilistic TOPSIS: normalization, credibilistic mean and spread
//! matrices, dual ideal solutions, weighted separations and the fused
//! closeness coefficient.

use std::cmp::Ordering;

use crate::credibility::{expected_value, std_dev};
use crate::error::{Error, Result};
use crate::fuzzy::TriangularFuzzyNumber;
use crate::group::{build_decision_matrix, Criterion, CriterionKind, DecisionProblem, LinguisticScale};
use crate::matrix::{CrispMatrix, FuzzyMatrix};
use crate::scalar::Scalar;

/// Weight sums further than this from 1 attach a warning to the result.
pub const WEIGHT_SUM_TOLERANCE: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdealSource {
    Mean,
    StdDev,
}

/// Per-criterion positive and negative ideal values.
#[derive(Debug, Clone, PartialEq)]
pub struct IdealVectors<T> {
    pub pis: Vec<T>,
    pub nis: Vec<T>,
    pub source: IdealSource,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Separation<T> {
    pub plus: T,
    pub minus: T,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AlternativeScore<T> {
    pub id: String,
    pub d_mean_plus: T,
    pub d_mean_minus: T,
    pub d_std_plus: T,
    pub d_std_minus: T,
    pub cc_mean: T,
    pub cc_std: T,
    pub cc_final: T,
    /// 1-based.
    pub rank: usize,
}

/// Scores in input order, plus a warning when weights do not sum to 1.
#[derive(Debug, Clone, PartialEq)]
pub struct RankingResult<T> {
    pub scores: Vec<AlternativeScore<T>>,
    pub weight_warning: Option<String>,
}

impl<T: Scalar> RankingResult<T> {
    pub fn ranks(&self) -> Vec<usize> {
        self.scores.iter().map(|s| s.rank).collect()
    }

    /// Scores sorted best first.
    pub fn in_rank_order(&self) -> Vec<&AlternativeScore<T>> {
        let mut v: Vec<_> = self.scores.iter().collect();
        v.sort_by_key(|s| s.rank);
        v
    }

    pub fn get(&self, id: &str) -> Option<&AlternativeScore<T>> {
        self.scores.iter().find(|s| s.id == id)
    }
}

/// Every intermediate of one evaluation.
#[derive(Debug, Clone, PartialEq)]
pub struct Evaluation<T> {
    pub aggregated: FuzzyMatrix<T>,
    pub normalized: FuzzyMatrix<T>,
    pub mean: CrispMatrix<T>,
    pub std_dev: CrispMatrix<T>,
    pub mean_ideals: IdealVectors<T>,
    pub std_ideals: IdealVectors<T>,
    pub ranking: RankingResult<T>,
}

/// Benefit columns are divided by the column's largest upper bound; cost
/// columns are inverted against the column's smallest lower bound.
pub fn normalize<T: Scalar>(x: &FuzzyMatrix<T>, criteria: &[Criterion<T>]) -> Result<FuzzyMatrix<T>> {
    if criteria.len() != x.ncols() {
        return Err(Error::DimensionMismatch {
            what: "criteria",
            expected: x.ncols(),
            found: criteria.len(),
        });
    }
    let mut factors = Vec::with_capacity(criteria.len());
    for (j, c) in criteria.iter().enumerate() {
        let zero_divisor = || Error::ZeroDivisor {
            criterion: c.id.clone(),
        };
        let factor = match c.kind {
            CriterionKind::Benefit => {
                let best = x.column(j).map(|t| t.u()).fold(T::neg_infinity(), T::max);
                if !(best > T::zero()) {
                    return Err(zero_divisor());
                }
                best
            }
            CriterionKind::Cost => {
                if x.column(j).any(|t| !(t.l() > T::zero())) {
                    return Err(zero_divisor());
                }
                x.column(j).map(|t| t.l()).fold(T::infinity(), T::min)
            }
        };
        factors.push(factor);
    }
    Ok(FuzzyMatrix::from_fn(
        x.row_labels().to_vec(),
        x.col_labels().to_vec(),
        |i, j| {
            let t = x.get(i, j);
            let f = factors[j];
            match criteria[j].kind {
                CriterionKind::Benefit => TriangularFuzzyNumber::from_ordered(t.l() / f, t.m() / f, t.u() / f),
                CriterionKind::Cost => TriangularFuzzyNumber::from_ordered(f / t.u(), f / t.m(), f / t.l()),
            }
        },
    ))
}

pub fn mean_matrix<T: Scalar>(n: &FuzzyMatrix<T>) -> CrispMatrix<T> {
    n.map(expected_value)
}

pub fn stddev_matrix<T: Scalar>(n: &FuzzyMatrix<T>) -> CrispMatrix<T> {
    n.map(std_dev)
}

fn column_extremes<T: Scalar>(m: &CrispMatrix<T>) -> (Vec<T>, Vec<T>) {
    (0..m.ncols())
        .map(|j| {
            m.column(j).fold((T::infinity(), T::neg_infinity()), |(lo, hi), &v| {
                (lo.min(v), hi.max(v))
            })
        })
        .unzip()
}

/// Columnwise maximum as PIS, minimum as NIS.
pub fn ideal_mean<T: Scalar>(e: &CrispMatrix<T>) -> IdealVectors<T> {
    let (min, max) = column_extremes(e);
    IdealVectors {
        pis: max,
        nis: min,
        source: IdealSource::Mean,
    }
}

/// The smallest spread is the PIS, the largest the NIS.
pub fn ideal_std<T: Scalar>(s: &CrispMatrix<T>) -> IdealVectors<T> {
    let (min, max) = column_extremes(s);
    IdealVectors {
        pis: min,
        nis: max,
        source: IdealSource::StdDev,
    }
}

fn weighted_distance<T: Scalar>(row: &[T], ideal: &[T], weights: &[T]) -> T {
    row.iter()
        .zip(ideal)
        .zip(weights)
        .map(|((&v, &target), &w)| {
            let d = (target - v) * w;
            d * d
        })
        .sum::<T>()
        .sqrt()
}

/// Weighted Euclidean distance of each row to the PIS and NIS, with the
/// weight applied inside the square.
pub fn separations<T: Scalar>(
    m: &CrispMatrix<T>,
    ideals: &IdealVectors<T>,
    weights: &[T],
) -> Result<Vec<Separation<T>>> {
    let q = m.ncols();
    for (what, len) in [
        ("weights", weights.len()),
        ("positive ideal", ideals.pis.len()),
        ("negative ideal", ideals.nis.len()),
    ] {
        if len != q {
            return Err(Error::DimensionMismatch {
                what,
                expected: q,
                found: len,
            });
        }
    }
    Ok(m.rows_iter()
        .map(|row| Separation {
            plus: weighted_distance(row, &ideals.pis, weights),
            minus: weighted_distance(row, &ideals.nis, weights),
        })
        .collect())
}

/// `d⁻ / (d⁺ + d⁻)`, or 0.5 when both distances vanish.
pub fn closeness<T: Scalar>(d_plus: T, d_minus: T) -> T {
    let total = d_plus + d_minus;
    if total == T::zero() {
        T::lit(0.5)
    } else {
        d_minus / total
    }
}

/// Geometric mean of the two facet coefficients.
pub fn final_cc<T: Scalar>(cc_mean: T, cc_std: T) -> T {
    (cc_mean * cc_std).sqrt()
}

/// 1-based ranks: larger `cc_final` first, then larger `cc_mean`, then input order.
pub fn rank<T: Scalar>(cc_final: &[T], cc_mean: &[T]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..cc_final.len()).collect();
    let desc = |a: T, b: T| b.partial_cmp(&a).unwrap_or(Ordering::Equal);
    order.sort_by(|&a, &b| {
        desc(cc_final[a], cc_final[b])
            .then_with(|| desc(cc_mean[a], cc_mean[b]))
            .then(a.cmp(&b))
    });
    let mut ranks = vec![0; order.len()];
    for (position, &i) in order.iter().enumerate() {
        ranks[i] = position + 1;
    }
    ranks
}

/// Runs the pipeline from an already aggregated decision matrix.
pub fn evaluate_matrix<T: Scalar>(aggregated: FuzzyMatrix<T>, criteria: &[Criterion<T>]) -> Result<Evaluation<T>> {
    let normalized = normalize(&aggregated, criteria).map_err(|e| e.at_stage("normalization"))?;
    let mean = mean_matrix(&normalized);
    let std_dev = stddev_matrix(&normalized);
    let mean_ideals = ideal_mean(&mean);
    let std_ideals = ideal_std(&std_dev);

    let weights: Vec<T> = criteria.iter().map(|c| c.weight).collect();
    crate::group::validate_weights(weights.iter().copied()).map_err(|e| e.at_stage("weights"))?;
    let d_mean = separations(&mean, &mean_ideals, &weights).map_err(|e| e.at_stage("mean separation"))?;
    let d_std = separations(&std_dev, &std_ideals, &weights).map_err(|e| e.at_stage("spread separation"))?;

    let cc_mean: Vec<T> = d_mean.iter().map(|d| closeness(d.plus, d.minus)).collect();
    let cc_std: Vec<T> = d_std.iter().map(|d| closeness(d.plus, d.minus)).collect();
    let cc: Vec<T> = cc_mean.iter().zip(&cc_std).map(|(&a, &b)| final_cc(a, b)).collect();
    let ranks = rank(&cc, &cc_mean);

    let scores = (0..aggregated.nrows())
        .map(|i| AlternativeScore {
            id: aggregated.row_labels()[i].clone(),
            d_mean_plus: d_mean[i].plus,
            d_mean_minus: d_mean[i].minus,
            d_std_plus: d_std[i].plus,
            d_std_minus: d_std[i].minus,
            cc_mean: cc_mean[i],
            cc_std: cc_std[i],
            cc_final: cc[i],
            rank: ranks[i],
        })
        .collect();

    let total: T = weights.iter().copied().sum();
    let weight_warning = ((total - T::one()).abs() > T::lit(WEIGHT_SUM_TOLERANCE))
        .then(|| format!("criteria weights sum to {total}, not 1"));

    Ok(Evaluation {
        aggregated,
        normalized,
        mean,
        std_dev,
        mean_ideals,
        std_ideals,
        ranking: RankingResult { scores, weight_warning },
    })
}

/// Aggregates the expert ratings and runs the full pipeline.
pub fn evaluate<T: Scalar>(problem: &DecisionProblem<T>, scale: &LinguisticScale<T>) -> Result<Evaluation<T>> {
    let aggregated = build_decision_matrix(problem, scale).map_err(|e| e.at_stage("aggregation"))?;
    evaluate_matrix(aggregated, problem.criteria())
}
