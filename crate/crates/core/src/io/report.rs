use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use serde_json::json;

use super::{AppError, ScenarioRanking};
use crate::group::LinguisticScale;
use crate::matrix::{CrispMatrix, FuzzyMatrix};
use crate::topsis::{Evaluation, IdealVectors, RankingResult};

/// Everything a report is rendered from.
#[derive(Debug, Clone, PartialEq)]
pub struct ReportBundle {
    pub evaluation: Evaluation<f64>,
    /// Empty unless a sensitivity study was run.
    pub scenarios: Vec<ScenarioRanking>,
}

impl ReportBundle {
    pub fn new(evaluation: Evaluation<f64>) -> Self {
        Self {
            evaluation,
            scenarios: Vec::new(),
        }
    }

    pub fn with_scenarios(mut self, scenarios: Vec<ScenarioRanking>) -> Self {
        self.scenarios = scenarios;
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReportOptions {
    pub decimals: usize,
    pub emit_chart: bool,
    /// Write the aggregated, normalized, mean and spread matrices, the
    /// ideals and the separations in addition to the closeness table.
    pub intermediates: bool,
}

impl Default for ReportOptions {
    fn default() -> Self {
        Self {
            decimals: 3,
            emit_chart: false,
            intermediates: true,
        }
    }
}

/// Fixed-point formatting with ties rounded away from zero.
pub fn format_fixed(x: f64, decimals: usize) -> String {
    let factor = 10f64.powi(decimals as i32);
    let mut rounded = (x * factor).round() / factor;
    if rounded == 0.0 {
        rounded = 0.0; // drop the sign of -0
    }
    format!("{rounded:.decimals$}")
}

fn csv_bytes(header: Vec<String>, rows: Vec<Vec<String>>) -> Vec<u8> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(&header).expect("in-memory csv write");
    for row in rows {
        w.write_record(&row).expect("in-memory csv write");
    }
    w.into_inner().expect("in-memory csv flush")
}

fn fuzzy_csv(m: &FuzzyMatrix<f64>, d: usize) -> Vec<u8> {
    let header = std::iter::once("alternative".to_owned())
        .chain(m.col_labels().iter().cloned())
        .collect();
    let rows = m
        .rows_iter()
        .zip(m.row_labels())
        .map(|(row, label)| {
            std::iter::once(label.clone())
                .chain(row.iter().map(|t| {
                    format!(
                        "({}, {}, {})",
                        format_fixed(t.l(), d),
                        format_fixed(t.m(), d),
                        format_fixed(t.u(), d)
                    )
                }))
                .collect()
        })
        .collect();
    csv_bytes(header, rows)
}

fn crisp_csv(m: &CrispMatrix<f64>, d: usize) -> Vec<u8> {
    let header = std::iter::once("alternative".to_owned())
        .chain(m.col_labels().iter().cloned())
        .collect();
    let rows = m
        .rows_iter()
        .zip(m.row_labels())
        .map(|(row, label)| {
            std::iter::once(label.clone())
                .chain(row.iter().map(|&v| format_fixed(v, d)))
                .collect()
        })
        .collect();
    csv_bytes(header, rows)
}

fn ideals_csv(ideals: &IdealVectors<f64>, cols: &[String], d: usize) -> Vec<u8> {
    let header = std::iter::once("ideal".to_owned())
        .chain(cols.iter().cloned())
        .collect();
    let row = |name: &str, v: &[f64]| {
        std::iter::once(name.to_owned())
            .chain(v.iter().map(|&x| format_fixed(x, d)))
            .collect()
    };
    csv_bytes(header, vec![row("PIS", &ideals.pis), row("NIS", &ideals.nis)])
}

fn separations_csv(r: &RankingResult<f64>, d: usize) -> Vec<u8> {
    let header = [
        "alternative",
        "d_mean_plus",
        "d_mean_minus",
        "d_std_plus",
        "d_std_minus",
    ]
    .map(String::from)
    .to_vec();
    let rows = r
        .scores
        .iter()
        .map(|s| {
            vec![
                s.id.clone(),
                format_fixed(s.d_mean_plus, d),
                format_fixed(s.d_mean_minus, d),
                format_fixed(s.d_std_plus, d),
                format_fixed(s.d_std_minus, d),
            ]
        })
        .collect();
    csv_bytes(header, rows)
}

fn closeness_csv(r: &RankingResult<f64>, d: usize) -> Vec<u8> {
    let header = ["alternative", "cc_mean", "cc_std", "cc_final", "rank"]
        .map(String::from)
        .to_vec();
    let rows = r
        .scores
        .iter()
        .map(|s| {
            vec![
                s.id.clone(),
                format_fixed(s.cc_mean, d),
                format_fixed(s.cc_std, d),
                format_fixed(s.cc_final, d),
                s.rank.to_string(),
            ]
        })
        .collect();
    csv_bytes(header, rows)
}

fn scenario_csv(
    scenarios: &[ScenarioRanking],
    ids: &[String],
    cell: impl Fn(&ScenarioRanking, usize) -> String,
) -> Vec<u8> {
    let header = std::iter::once("alternative".to_owned())
        .chain(scenarios.iter().map(|s| s.name.clone()))
        .collect();
    let rows = ids
        .iter()
        .enumerate()
        .map(|(i, id)| {
            std::iter::once(id.clone())
                .chain(scenarios.iter().map(|s| cell(s, i)))
                .collect()
        })
        .collect();
    csv_bytes(header, rows)
}

/// Plain-text ranking, best alternative first.
pub fn ranking_summary(r: &RankingResult<f64>, decimals: usize) -> String {
    let mut out = String::new();
    let width = r
        .scores
        .iter()
        .map(|s| s.id.len())
        .max()
        .unwrap_or(0)
        .max("Alternative".len());
    let col = decimals + 3;
    let _ = writeln!(
        out,
        "{:>4}  {:<width$}  {:>col$}  {:>col$}  {:>col$}",
        "Rank", "Alternative", "CC_E", "CC_S", "CC"
    );
    for s in r.in_rank_order() {
        let _ = writeln!(
            out,
            "{:>4}  {:<width$}  {:>col$}  {:>col$}  {:>col$}",
            s.rank,
            s.id,
            format_fixed(s.cc_mean, decimals),
            format_fixed(s.cc_std, decimals),
            format_fixed(s.cc_final, decimals)
        );
    }
    let order: Vec<&str> = r.in_rank_order().iter().map(|s| s.id.as_str()).collect();
    let _ = writeln!(out, "Order: {}", order.join(" > "));
    if let Some(w) = &r.weight_warning {
        let _ = writeln!(out, "Warning: {w}");
    }
    out
}

/// Alternatives down, scenarios across, rank in each cell.
pub fn scenario_rank_table(scenarios: &[ScenarioRanking]) -> String {
    let mut out = String::new();
    let Some(first) = scenarios.first() else {
        return out;
    };
    let idw = first
        .ranking
        .scores
        .iter()
        .map(|s| s.id.len())
        .max()
        .unwrap_or(0)
        .max("Alternative".len());
    let _ = write!(out, "{:<idw$}", "Alternative");
    for s in scenarios {
        let _ = write!(out, "  {:>w$}", s.name, w = s.name.len().max(4));
    }
    out.push('\n');
    for (i, score) in first.ranking.scores.iter().enumerate() {
        let _ = write!(out, "{:<idw$}", score.id);
        for s in scenarios {
            let _ = write!(out, "  {:>w$}", s.ranking.scores[i].rank, w = s.name.len().max(4));
        }
        out.push('\n');
    }
    out
}

pub fn scale_table(scale: &LinguisticScale<f64>) -> String {
    let mut out = String::new();
    let w = scale
        .terms()
        .iter()
        .map(|t| t.name.len() + t.code.len() + 3)
        .max()
        .unwrap_or(0)
        .max(16);
    let _ = writeln!(out, "{:<w$}  Fuzzy score", "Linguistic term");
    for t in scale.terms() {
        let label = format!("{} ({})", t.name, t.code);
        let v = t.value;
        let _ = writeln!(out, "{label:<w$}  ({}, {}, {})", v.l(), v.m(), v.u());
    }
    out
}

fn full_precision_json(bundle: &ReportBundle) -> String {
    let ev = &bundle.evaluation;
    let fuzzy = |m: &FuzzyMatrix<f64>| {
        m.rows_iter()
            .map(|row| row.iter().map(|t| t.to_array().to_vec()).collect::<Vec<_>>())
            .collect::<Vec<_>>()
    };
    let crisp = |m: &CrispMatrix<f64>| m.rows_iter().map(|row| row.to_vec()).collect::<Vec<_>>();
    let scores = |r: &RankingResult<f64>| {
        r.scores
            .iter()
            .map(|s| {
                json!({
                    "id": s.id,
                    "d_mean_plus": s.d_mean_plus,
                    "d_mean_minus": s.d_mean_minus,
                    "d_std_plus": s.d_std_plus,
                    "d_std_minus": s.d_std_minus,
                    "cc_mean": s.cc_mean,
                    "cc_std": s.cc_std,
                    "cc_final": s.cc_final,
                    "rank": s.rank,
                })
            })
            .collect::<Vec<_>>()
    };
    let value = json!({
        "alternatives": ev.aggregated.row_labels(),
        "criteria": ev.aggregated.col_labels(),
        "aggregated": fuzzy(&ev.aggregated),
        "normalized": fuzzy(&ev.normalized),
        "mean": crisp(&ev.mean),
        "std_dev": crisp(&ev.std_dev),
        "mean_ideals": {"pis": ev.mean_ideals.pis, "nis": ev.mean_ideals.nis},
        "std_ideals": {"pis": ev.std_ideals.pis, "nis": ev.std_ideals.nis},
        "scores": scores(&ev.ranking),
        "weight_warning": ev.ranking.weight_warning,
        "scenarios": bundle.scenarios.iter().map(|s| json!({
            "name": s.name,
            "scores": scores(&s.ranking),
        })).collect::<Vec<_>>(),
    });
    let mut text = serde_json::to_string_pretty(&value).expect("report json serializes");
    text.push('\n');
    text
}

fn escape_xml(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

/// Grouped bar chart of the final closeness coefficient per alternative,
/// one bar per scenario (or a single series without scenarios).
fn chart_svg(bundle: &ReportBundle) -> String {
    const PALETTE: [&str; 8] = [
        "#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f", "#edc948", "#b07aa1", "#9c755f",
    ];
    let base = &bundle.evaluation.ranking;
    let mut series: Vec<(&str, &RankingResult<f64>)> = vec![("Base weights", base)];
    series.extend(bundle.scenarios.iter().map(|s| (s.name.as_str(), &s.ranking)));

    let (width, height) = (720.0, 400.0);
    let (left, right, top, bottom) = (50.0, 160.0, 20.0, 40.0);
    let plot_w = width - left - right;
    let plot_h = height - top - bottom;
    let groups = base.scores.len().max(1) as f64;
    let group_w = plot_w / groups;
    let bar_w = group_w * 0.8 / series.len() as f64;

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(svg, r#"<rect width="{width}" height="{height}" fill="white"/>"#);
    for tick in 0..=5 {
        let v = tick as f64 / 5.0;
        let y = top + plot_h * (1.0 - v);
        let _ = writeln!(
            svg,
            r##"<line x1="{left}" y1="{y:.1}" x2="{:.1}" y2="{y:.1}" stroke="#dddddd"/><text x="{:.1}" y="{:.1}" text-anchor="end">{v:.1}</text>"##,
            left + plot_w,
            left - 6.0,
            y + 4.0
        );
    }
    for (g, score) in base.scores.iter().enumerate() {
        let gx = left + group_w * g as f64 + group_w * 0.1;
        for (k, (_, ranking)) in series.iter().enumerate() {
            let v = ranking.scores[g].cc_final.clamp(0.0, 1.0);
            let h = plot_h * v;
            let _ = writeln!(
                svg,
                r#"<rect x="{:.1}" y="{:.1}" width="{:.1}" height="{h:.1}" fill="{}"><title>{}: {}</title></rect>"#,
                gx + bar_w * k as f64,
                top + plot_h - h,
                bar_w,
                PALETTE[k % PALETTE.len()],
                escape_xml(&score.id),
                format_fixed(v, 3)
            );
        }
        let _ = writeln!(
            svg,
            r#"<text x="{:.1}" y="{:.1}" text-anchor="middle">{}</text>"#,
            left + group_w * (g as f64 + 0.5),
            top + plot_h + 18.0,
            escape_xml(&score.id)
        );
    }
    for (k, (name, _)) in series.iter().enumerate() {
        let y = top + 16.0 * k as f64;
        let x = width - right + 12.0;
        let _ = writeln!(
            svg,
            r#"<rect x="{x:.1}" y="{y:.1}" width="10" height="10" fill="{}"/><text x="{:.1}" y="{:.1}">{}</text>"#,
            PALETTE[k % PALETTE.len()],
            x + 14.0,
            y + 9.0,
            escape_xml(name)
        );
    }
    let _ = writeln!(
        svg,
        r#"<text x="{:.1}" y="{:.1}" text-anchor="middle">Final closeness coefficient</text>"#,
        left + plot_w / 2.0,
        height - 6.0
    );
    svg.push_str("</svg>\n");
    svg
}

/// Writes the report files into `out_dir` (created if needed) and returns
/// their paths in write order.
pub fn emit_report(bundle: &ReportBundle, out_dir: &Path, options: &ReportOptions) -> Result<Vec<PathBuf>, AppError> {
    if out_dir.as_os_str().is_empty() {
        return Err(AppError::io(
            out_dir,
            std::io::Error::new(std::io::ErrorKind::InvalidInput, "empty output directory path"),
        ));
    }
    fs::create_dir_all(out_dir).map_err(|e| AppError::io(out_dir, e))?;

    let ev = &bundle.evaluation;
    let d = options.decimals;
    let cols = ev.aggregated.col_labels();
    let mut files: Vec<(&str, Vec<u8>)> = Vec::new();
    if options.intermediates {
        files.push(("aggregated_matrix.csv", fuzzy_csv(&ev.aggregated, d)));
        files.push(("normalized_matrix.csv", fuzzy_csv(&ev.normalized, d)));
        files.push(("mean_matrix.csv", crisp_csv(&ev.mean, d)));
        files.push(("stddev_matrix.csv", crisp_csv(&ev.std_dev, d)));
        files.push(("mean_ideals.csv", ideals_csv(&ev.mean_ideals, cols, d)));
        files.push(("stddev_ideals.csv", ideals_csv(&ev.std_ideals, cols, d)));
        files.push(("separations.csv", separations_csv(&ev.ranking, d)));
    }
    files.push(("closeness.csv", closeness_csv(&ev.ranking, d)));
    files.push(("ranking.txt", ranking_summary(&ev.ranking, d).into_bytes()));
    if !bundle.scenarios.is_empty() {
        let ids = ev.aggregated.row_labels();
        files.push((
            "scenario_ranks.csv",
            scenario_csv(&bundle.scenarios, ids, |s, i| s.ranking.scores[i].rank.to_string()),
        ));
        files.push((
            "scenario_closeness.csv",
            scenario_csv(&bundle.scenarios, ids, |s, i| {
                format_fixed(s.ranking.scores[i].cc_final, d)
            }),
        ));
    }
    files.push(("full_precision.json", full_precision_json(bundle).into_bytes()));
    if options.emit_chart {
        files.push(("closeness_chart.svg", chart_svg(bundle).into_bytes()));
    }

    let mut written = Vec::with_capacity(files.len());
    for (name, bytes) in files {
        let path = out_dir.join(name);
        fs::write(&path, bytes).map_err(|e| AppError::io(&path, e))?;
        written.push(path);
    }
    Ok(written)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounding_is_half_away_from_zero() {
        assert_eq!(format_fixed(0.2540041911525952, 3), "0.254");
        assert_eq!(format_fixed(0.2540041911525952, 6), "0.254004");
        assert_eq!(format_fixed(2.5, 0), "3");
        assert_eq!(format_fixed(-2.5, 0), "-3");
        assert_eq!(format_fixed(0.125, 2), "0.13");
        assert_eq!(format_fixed(-0.0001, 3), "0.000");
        assert_eq!(format_fixed(10.0, 3), "10.000");
    }
}
