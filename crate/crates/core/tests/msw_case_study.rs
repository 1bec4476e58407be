//! End-to-end checks on the bundled waste-treatment case study.

use std::fs;

use credtopsis::io::fixture::{msw_problem, msw_scenarios};
use credtopsis::io::{
    emit_report, parse_problem, run_sensitivity, ProblemDocument, ReportBundle, ReportOptions, Scenario, ScenarioSet,
};
use credtopsis::{evaluate, Alternative, Criterion, DecisionProblem, LinguisticScale, Rating, TriangularFuzzyNumber};

const GOLDEN_AGGREGATED: &str = include_str!("../fixtures/msw_aggregated_golden.csv");

fn report(options: &ReportOptions) -> (tempfile::TempDir, Vec<std::path::PathBuf>) {
    let loaded = msw_problem();
    let ev = evaluate(&loaded.problem, &loaded.scale).unwrap();
    let dir = tempfile::tempdir().unwrap();
    let files = emit_report(&ReportBundle::new(ev), dir.path(), options).unwrap();
    (dir, files)
}

#[test]
fn aggregated_csv_matches_golden_file() {
    let (dir, _) = report(&ReportOptions::default());
    let written = fs::read_to_string(dir.path().join("aggregated_matrix.csv")).unwrap();
    assert_eq!(written, GOLDEN_AGGREGATED);
}

#[test]
fn mean_matrix_respects_decimals() {
    let cell = |decimals| {
        let (dir, _) = report(&ReportOptions {
            decimals,
            ..Default::default()
        });
        let text = fs::read_to_string(dir.path().join("mean_matrix.csv")).unwrap();
        let row = text.lines().nth(1).unwrap().to_owned();
        row.split(',').nth(1).unwrap().to_owned()
    };
    assert_eq!(cell(3), "0.254");
    assert_eq!(cell(6), "0.254004");
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let options = ReportOptions {
        emit_chart: true,
        ..Default::default()
    };
    let (a, files) = report(&options);
    let (b, _) = report(&options);
    for f in &files {
        let name = f.file_name().unwrap();
        assert_eq!(fs::read(f).unwrap(), fs::read(b.path().join(name)).unwrap(), "{name:?}");
    }
    assert!(a.path().join("closeness_chart.svg").exists());
    let svg = fs::read_to_string(a.path().join("closeness_chart.svg")).unwrap();
    assert!(svg.starts_with("<svg") && svg.contains("A3"));
}

#[test]
fn intermediates_can_be_suppressed() {
    let (dir, files) = report(&ReportOptions {
        intermediates: false,
        ..Default::default()
    });
    assert!(dir.path().join("closeness.csv").exists());
    assert!(!dir.path().join("aggregated_matrix.csv").exists());
    assert_eq!(files.len(), 3);
}

#[test]
fn empty_output_path_is_an_io_error() {
    let loaded = msw_problem();
    let ev = evaluate(&loaded.problem, &loaded.scale).unwrap();
    let err = emit_report(
        &ReportBundle::new(ev),
        std::path::Path::new(""),
        &ReportOptions::default(),
    )
    .unwrap_err();
    assert_eq!(err.exit_code(), 3);
}

#[test]
fn document_round_trip_preserves_results() {
    let loaded = msw_problem();
    let json = ProblemDocument::from_problem(&loaded.problem, &loaded.scale).to_json();
    let again = parse_problem(&json, "round-trip").unwrap();
    assert_eq!(again.problem, loaded.problem);
    let a = evaluate(&loaded.problem, &loaded.scale).unwrap();
    let b = evaluate(&again.problem, &again.scale).unwrap();
    assert_eq!(a.ranking, b.ranking);
}

#[test]
fn scenario_with_base_weights_reproduces_base_ranking() {
    let loaded = msw_problem();
    let set = ScenarioSet {
        scenarios: vec![Scenario {
            name: "base".into(),
            weights: loaded.problem.weights(),
        }],
    };
    let out = run_sensitivity(&loaded.problem, &loaded.scale, &set).unwrap();
    let base = evaluate(&loaded.problem, &loaded.scale).unwrap();
    assert_eq!(out[0].ranking, base.ranking);
    assert_eq!(out[0].ranking.ranks(), vec![3, 2, 1, 4]);
}

#[test]
fn equal_weights_golden() {
    let loaded = msw_problem();
    let problem = loaded.problem.with_weights(&[0.1; 10]).unwrap();
    let ranking = evaluate(&problem, &loaded.scale).unwrap().ranking;
    assert_eq!(ranking.ranks(), vec![2, 3, 1, 4]);
    let want = [0.48822, 0.43622, 0.67515, 0.39772];
    for (s, w) in ranking.scores.iter().zip(want) {
        assert!((s.cc_final - w).abs() < 1e-5, "{}: {} vs {w}", s.id, s.cc_final);
    }
}

#[test]
fn scenario_results_do_not_depend_on_order() {
    let loaded = msw_problem();
    let forward = msw_scenarios();
    let mut backward = forward.clone();
    backward.scenarios.reverse();
    let a = run_sensitivity(&loaded.problem, &loaded.scale, &forward).unwrap();
    let mut b = run_sensitivity(&loaded.problem, &loaded.scale, &backward).unwrap();
    b.reverse();
    assert_eq!(a, b);
    assert_eq!(a.iter().map(|s| s.name.as_str()).collect::<Vec<_>>()[0], "Scenario 1");
}

#[test]
fn single_precision_agrees_with_double() {
    let loaded = msw_problem();
    let p = &loaded.problem;
    let criteria: Vec<Criterion<f32>> = p
        .criteria()
        .iter()
        .map(|c| Criterion {
            id: c.id.clone(),
            name: c.name.clone(),
            kind: c.kind,
            weight: c.weight as f32,
        })
        .collect();
    let alternatives: Vec<Alternative> = p.alternatives().to_vec();
    let ratings: Vec<Vec<Vec<Rating<f32>>>> = (0..alternatives.len())
        .map(|i| {
            (0..criteria.len())
                .map(|j| {
                    p.ratings(i, j)
                        .iter()
                        .map(|r| match r {
                            Rating::Term(t) => Rating::Term(t.clone()),
                            Rating::Fuzzy(x) => Rating::Fuzzy(
                                TriangularFuzzyNumber::new(x.l() as f32, x.m() as f32, x.u() as f32).unwrap(),
                            ),
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    let single = DecisionProblem::new(alternatives, criteria, p.experts().to_vec(), ratings).unwrap();
    let r32 = evaluate(&single, &LinguisticScale::<f32>::seven_point())
        .unwrap()
        .ranking;
    let r64 = evaluate(p, &loaded.scale).unwrap().ranking;
    assert_eq!(r32.ranks(), r64.ranks());
    for (a, b) in r32.scores.iter().zip(&r64.scores) {
        assert!((a.cc_final as f64 - b.cc_final).abs() < 1e-4);
    }
}
