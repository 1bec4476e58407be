//! Credibilistic fuzzy TOPSIS for group multi-criteria decision making.
//!
//! Expert linguistic ratings are mapped to triangular fuzzy numbers,
//! aggregated across experts, normalized per criterion, and reduced to two
//! crisp matrices: the credibilistic mean and the credibilistic standard
//! deviation of every cell. Each matrix gets its own positive and negative
//! ideal solution and weighted separations, and the two resulting closeness
//! coefficients are fused by a geometric mean to rank the alternatives.
//!
//! The engine is generic over the scalar type ([`Scalar`], implemented for
//! `f32` and `f64`); the aliases below fix it to `f64`, which is what the
//! document and report layer in [`io`] uses.

// `!(x > 0)` is used on purpose so that NaN is rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod credibility;
pub mod error;
pub mod fuzzy;
pub mod group;
pub mod io;
pub mod matrix;
pub mod quadrature;
pub mod scalar;
pub mod topsis;

pub use credibility::{cr_geq, cr_leq, expected_value, expected_value_numeric, std_dev, variance, variance_numeric};
pub use error::{Error, Result};
pub use fuzzy::TriangularFuzzyNumber;
pub use group::{
    aggregate_ratings, build_decision_matrix, Alternative, Criterion, CriterionKind, DecisionProblem, LinguisticScale,
    Rating,
};
pub use matrix::{CrispMatrix, FuzzyMatrix, LabeledMatrix};
pub use scalar::Scalar;
pub use topsis::{
    closeness, evaluate, evaluate_matrix, final_cc, ideal_mean, ideal_std, mean_matrix, normalize, rank, separations,
    stddev_matrix, AlternativeScore, Evaluation, IdealSource, IdealVectors, RankingResult, Separation,
};

pub type Tfn = TriangularFuzzyNumber<f64>;
pub type Scale = LinguisticScale<f64>;
pub type Problem = DecisionProblem<f64>;
pub type Ranking = RankingResult<f64>;
pub type Tfn32 = TriangularFuzzyNumber<f32>;
