//! Text and CSV rendering of experiment reports.
//!
//! Measure values print with 5 decimal places; undefined values carry their
//! reason. Output is a pure function of the report, so repeated runs are
//! byte-identical.

use demandcast::experiment::{
    check_axiom_measure, AxiomVerdict, BestCell, ExperimentReport, MeasureReport,
};
use demandcast::measures::Target;
use demandcast::{GeneratorSpec, MeasureValue, MethodKind, ObsolescenceProfile};
use std::fmt::Write as _;

/// Output format selected by `--out`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Csv,
}

pub fn value_string(value: &MeasureValue) -> String {
    match value {
        MeasureValue::Defined(x) => format!("{x:.5}"),
        MeasureValue::Undefined(reason) => format!("undefined:{reason}"),
    }
}

fn param_string(value: Option<f64>) -> String {
    match value {
        Some(x) => format!("{x}"),
        None => "-".to_string(),
    }
}

/// Ranking groups joined as `CR > SES = RW > ZF`.
pub fn ranking_string(ranking: &[Vec<MethodKind>]) -> String {
    ranking
        .iter()
        .map(|group| {
            group
                .iter()
                .map(|k| k.name().to_string())
                .collect::<Vec<_>>()
                .join(" = ")
        })
        .collect::<Vec<_>>()
        .join(" > ")
}

/// One human-readable line describing the generator.
pub fn describe_generator(spec: &GeneratorSpec) -> String {
    match spec {
        GeneratorSpec::BernoulliLogarithmic { p0, ell } => {
            format!("demand nonzero with p0 = {p0}, logarithmic sizes with ell = {ell}")
        }
        GeneratorSpec::BernoulliGeometricSize { p0, size_p } => {
            format!("demand nonzero with p0 = {p0}, geometric sizes with p = {size_p}")
        }
        GeneratorSpec::RegularIntermittent { period, size } => {
            format!("regular demand of size {size} every {period} periods")
        }
        GeneratorSpec::Markov2 { p01, p10 } => {
            format!("autocorrelated 0/1 demand with p01 = {p01}, p10 = {p10}")
        }
        GeneratorSpec::Obsolescence { p0, ell, profile } => {
            let decay = match profile {
                ObsolescenceProfile::LinearToZero { end } => {
                    format!("linearly to 0 at period {end}")
                }
                ObsolescenceProfile::AbruptToZero { change } => {
                    format!("abruptly to 0 at period {change}")
                }
            };
            format!("obsolescent demand from p0 = {p0} (logarithmic sizes, ell = {ell}), decaying {decay}")
        }
    }
}

fn best_value_string(cell: Option<&BestCell>) -> String {
    cell.map(|c| value_string(&c.value)).unwrap_or_default()
}

/// The canonical table layout: SES and CR with their grid-best parameters,
/// ZF, and the induced ranking. Requires reports that contain those three
/// forecasters.
pub fn render_canonical_table(title: &str, report: &ExperimentReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{title}");
    let _ = writeln!(
        out,
        "{:<8}{:>6}{:>12}{:>7}{:>6}{:>12}{:>13}    forecaster",
        "", "SES", "", "CR", "", "", "ZF"
    );
    let _ = writeln!(
        out,
        "{:<8}{:>6}{:>12}{:>7}{:>6}{:>12}{:>13}    ranking",
        "measure", "alpha", "error", "alpha", "beta", "error", "error"
    );
    let rule = "-".repeat(64);
    let _ = writeln!(out, "{rule}");
    let mut previous_target: Option<Target> = None;
    for m in &report.measures {
        if previous_target == Some(Target::Point) && m.measure.target == Target::Mean {
            let _ = writeln!(out, "{rule}");
        }
        previous_target = Some(m.measure.target);
        let ses = m.best_for(MethodKind::Ses);
        let cr = m.best_for(MethodKind::Croston);
        let zf = m.best_for(MethodKind::Zero);
        let _ = writeln!(
            out,
            "{:<8}{:>6}{:>12}{:>7}{:>6}{:>12}{:>13}    {}",
            m.measure.to_string(),
            param_string(ses.and_then(|c| c.params.alpha)),
            best_value_string(ses),
            param_string(cr.and_then(|c| c.params.alpha)),
            param_string(cr.and_then(|c| c.params.beta)),
            best_value_string(cr),
            best_value_string(zf),
            ranking_string(&m.ranking)
        );
    }
    out
}

/// Generic aligned listing: one row per measure and forecaster.
pub fn render_report_text(title: &str, report: &ExperimentReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{title}");
    let _ = writeln!(
        out,
        "{:<10}{:<12}{:>7}{:>7}{:>16}{:>6}",
        "measure", "forecaster", "alpha", "beta", "value", "rank"
    );
    let _ = writeln!(out, "{}", "-".repeat(58));
    for m in &report.measures {
        for best in &m.best {
            let rank = m
                .ranking
                .iter()
                .position(|group| group.contains(&best.method))
                .map(|i| (i + 1).to_string())
                .unwrap_or_default();
            let _ = writeln!(
                out,
                "{:<10}{:<12}{:>7}{:>7}{:>16}{:>6}",
                m.measure.to_string(),
                best.method.name(),
                param_string(best.params.alpha),
                param_string(best.params.beta),
                value_string(&best.value),
                rank
            );
        }
        let _ = writeln!(out, "{:<10}ranking: {}", "", ranking_string(&m.ranking));
    }
    out
}

/// CSV listing with header `measure,forecaster,alpha,beta,value,rank`.
pub fn render_report_csv(report: &ExperimentReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "measure,forecaster,alpha,beta,value,rank");
    for m in &report.measures {
        for best in &m.best {
            let rank = m
                .ranking
                .iter()
                .position(|group| group.contains(&best.method))
                .map(|i| (i + 1).to_string())
                .unwrap_or_default();
            let opt = |v: Option<f64>| v.map(|x| x.to_string()).unwrap_or_default();
            let _ = writeln!(
                out,
                "{},{},{},{},{},{}",
                m.measure,
                best.method.name(),
                opt(best.params.alpha),
                opt(best.params.beta),
                value_string(&best.value),
                rank
            );
        }
    }
    out
}

/// Ranking-stability section for replicated runs.
pub fn render_stability(
    verdict_counts: &[(String, [usize; 3])],
    replications: u64,
    format: OutputFormat,
) -> String {
    let mut out = String::new();
    match format {
        OutputFormat::Text => {
            let _ = writeln!(
                out,
                "\nCR > SES > ZF ranking stability over {replications} replications"
            );
            let _ = writeln!(
                out,
                "{:<10}{:>6}{:>6}{:>6}",
                "measure", "pass", "tie", "fail"
            );
            for (measure, [pass, tie, fail]) in verdict_counts {
                let _ = writeln!(out, "{measure:<10}{pass:>6}{tie:>6}{fail:>6}");
            }
        }
        OutputFormat::Csv => {
            let _ = writeln!(out, "stability,measure,pass,tie,fail,replications");
            for (measure, [pass, tie, fail]) in verdict_counts {
                let _ = writeln!(
                    out,
                    "stability,{measure},{pass},{tie},{fail},{replications}"
                );
            }
        }
    }
    out
}

/// Tally axiom verdicts per measure across replicated reports.
pub fn stability_counts(reports: &[ExperimentReport]) -> Vec<(String, [usize; 3])> {
    let mut counts: Vec<(String, [usize; 3])> = Vec::new();
    for report in reports {
        for m in &report.measures {
            let name = m.measure.to_string();
            let slot = match counts.iter_mut().find(|(n, _)| *n == name) {
                Some((_, c)) => c,
                None => {
                    counts.push((name, [0; 3]));
                    &mut counts.last_mut().expect("just pushed").1
                }
            };
            match check_axiom_measure(m) {
                Some(AxiomVerdict::Pass) => slot[0] += 1,
                Some(AxiomVerdict::Tie) => slot[1] += 1,
                Some(AxiomVerdict::Fail) | None => slot[2] += 1,
            }
        }
    }
    counts
}

/// Measures whose grid-best value is undefined for every forecaster.
pub fn all_undefined_measures(report: &ExperimentReport) -> Vec<&MeasureReport> {
    report
        .measures
        .iter()
        .filter(|m| m.best.iter().all(|b| !b.value.is_defined()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use demandcast::experiment::{run_experiment, table_spec};
    use demandcast::measures::{BaseMeasure, MeasureId};

    fn small_report() -> ExperimentReport {
        let mut spec = table_spec(1, 3).unwrap();
        spec.warmup_len = 100;
        spec.eval_len = 500;
        run_experiment(&spec).unwrap()
    }

    #[test]
    fn canonical_table_lists_all_measures_with_five_decimals() {
        let report = small_report();
        let text = render_canonical_table("Table 1: test", &report);
        assert!(text.contains("Table 1: test"));
        for m in &report.measures {
            assert!(text.contains(&m.measure.to_string()));
        }
        // ZF's mean MAPE renders as exactly 100.00000
        assert!(text.contains("100.00000"));
    }

    #[test]
    fn csv_rows_cover_every_cell() {
        let report = small_report();
        let csv = render_report_csv(&report);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "measure,forecaster,alpha,beta,value,rank");
        // 11 measures x 3 forecasters
        assert_eq!(lines.len(), 1 + 33);
        assert!(lines[1].starts_with("MAE,SES,"));
    }

    #[test]
    fn undefined_values_render_with_reason() {
        let mut spec = table_spec(1, 3).unwrap();
        spec.warmup_len = 100;
        spec.eval_len = 500;
        spec.measures = vec![MeasureId::point(BaseMeasure::Mape)];
        let report = run_experiment(&spec).unwrap();
        let csv = render_report_csv(&report);
        assert!(csv.contains("undefined:zero-denominator"));
        assert_eq!(all_undefined_measures(&report).len(), 1);
    }

    #[test]
    fn ranking_strings_show_ties() {
        use MethodKind::*;
        assert_eq!(
            ranking_string(&[vec![Croston], vec![Ses], vec![Zero]]),
            "CR > SES > ZF"
        );
        assert_eq!(
            ranking_string(&[vec![Croston, Ses], vec![Zero]]),
            "CR = SES > ZF"
        );
    }

    #[test]
    fn stability_counts_accumulate() {
        let reports = vec![small_report(), small_report()];
        let counts = stability_counts(&reports);
        assert_eq!(counts.len(), 11);
        for (_, [pass, tie, fail]) in &counts {
            assert_eq!(pass + tie + fail, 2);
        }
    }
}
