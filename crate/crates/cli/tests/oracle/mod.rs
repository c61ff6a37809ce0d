//! Independent direct-formula evaluator used by the acceptance suite.
//!
//! Every measure is recomputed here from its textbook definition with plain
//! loops, sharing nothing with the library's computation path beyond the
//! result type used for comparison.

use demandcast::measures::{MeasureValue, UndefinedReason};

pub struct Input<'a> {
    pub actuals: &'a [f64],
    pub forecasts: &'a [f64],
    pub baseline_forecasts: &'a [f64],
    pub insample: &'a [f64],
}

fn mean(values: &[f64]) -> f64 {
    let mut sum = 0.0;
    for v in values {
        sum += v;
    }
    sum / values.len() as f64
}

fn median(values: &[f64]) -> f64 {
    let mut sorted = values.to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).expect("finite"));
    let n = sorted.len();
    if n % 2 == 1 {
        sorted[n / 2]
    } else {
        (sorted[n / 2 - 1] + sorted[n / 2]) / 2.0
    }
}

fn errors(actuals: &[f64], forecasts: &[f64]) -> Vec<f64> {
    actuals.iter().zip(forecasts).map(|(a, f)| a - f).collect()
}

fn defined(x: f64) -> Option<MeasureValue> {
    Some(MeasureValue::Defined(x))
}

fn undefined(reason: UndefinedReason) -> Option<MeasureValue> {
    Some(MeasureValue::Undefined(reason))
}

/// Evaluate `name` directly from its definition. `None` marks a violated
/// precondition (too-short in-sample window), mirroring a structural error.
pub fn direct(name: &str, input: &Input) -> Option<MeasureValue> {
    let e = errors(input.actuals, input.forecasts);
    let be = errors(input.actuals, input.baseline_forecasts);
    let n = e.len();

    match name {
        "ME" => defined(mean(&e)),
        "MSE" => defined(mean(&e.iter().map(|x| x * x).collect::<Vec<_>>())),
        "RMSE" => defined(mean(&e.iter().map(|x| x * x).collect::<Vec<_>>()).sqrt()),
        "MAE" => defined(mean(&e.iter().map(|x| x.abs()).collect::<Vec<_>>())),
        "MdAE" => defined(median(&e.iter().map(|x| x.abs()).collect::<Vec<_>>())),

        "MAPE" | "MdAPE" | "RMSPE" | "RMdSPE" => {
            if input.actuals.contains(&0.0) {
                return undefined(UndefinedReason::ZeroDenominator);
            }
            let p: Vec<f64> = e
                .iter()
                .zip(input.actuals)
                .map(|(err, a)| 100.0 * (err / a))
                .collect();
            let abs: Vec<f64> = p.iter().map(|x| x.abs()).collect();
            let squared: Vec<f64> = p.iter().map(|x| x * x).collect();
            match name {
                "MAPE" => defined(mean(&abs)),
                "MdAPE" => defined(median(&abs)),
                "RMSPE" => defined(mean(&squared).sqrt()),
                _ => defined(median(&squared).sqrt()),
            }
        }

        "iMAPE" => {
            let mut included = Vec::new();
            for (a, f) in input.actuals.iter().zip(input.forecasts) {
                if *a != 0.0 {
                    included.push((100.0 * ((a - f) / a)).abs());
                }
            }
            if included.is_empty() {
                undefined(UndefinedReason::EmptyAfterExclusion)
            } else {
                defined(mean(&included))
            }
        }

        "sMAPE" | "sMdAPE" => {
            let mut terms = Vec::with_capacity(n);
            for (a, f) in input.actuals.iter().zip(input.forecasts) {
                if a + f == 0.0 {
                    return undefined(UndefinedReason::ZeroDenominator);
                }
                terms.push(200.0 * ((a - f).abs() / (a + f)));
            }
            if name == "sMAPE" {
                defined(mean(&terms))
            } else {
                defined(median(&terms))
            }
        }

        "MRAE" | "MdRAE" | "GMRAE" => {
            if be.contains(&0.0) {
                return undefined(UndefinedReason::ZeroDenominator);
            }
            let r: Vec<f64> = e.iter().zip(&be).map(|(x, b)| (x / b).abs()).collect();
            match name {
                "MRAE" => defined(mean(&r)),
                "MdRAE" => defined(median(&r)),
                _ => {
                    if r.contains(&0.0) {
                        undefined(UndefinedReason::ZeroRelativeError)
                    } else {
                        let logs: Vec<f64> = r.iter().map(|x| x.ln()).collect();
                        defined(mean(&logs).exp())
                    }
                }
            }
        }

        "RelMAE" | "RelMSE" | "RelRMSE" | "U2" | "LMR" => {
            let mae = |v: &[f64]| mean(&v.iter().map(|x| x.abs()).collect::<Vec<_>>());
            let mse = |v: &[f64]| mean(&v.iter().map(|x| x * x).collect::<Vec<_>>());
            match name {
                "RelMAE" => {
                    let denom = mae(&be);
                    if denom == 0.0 {
                        undefined(UndefinedReason::ZeroDenominator)
                    } else {
                        defined(mae(&e) / denom)
                    }
                }
                "RelMSE" => {
                    let denom = mse(&be);
                    if denom == 0.0 {
                        undefined(UndefinedReason::ZeroDenominator)
                    } else {
                        defined(mse(&e) / denom)
                    }
                }
                "RelRMSE" | "U2" => {
                    let denom = mse(&be).sqrt();
                    if denom == 0.0 {
                        undefined(UndefinedReason::ZeroDenominator)
                    } else {
                        defined(mse(&e).sqrt() / denom)
                    }
                }
                _ => {
                    let denom = mse(&be);
                    if denom == 0.0 {
                        return undefined(UndefinedReason::ZeroDenominator);
                    }
                    let ratio = mse(&e) / denom;
                    if ratio == 0.0 {
                        undefined(UndefinedReason::ZeroRelativeError)
                    } else {
                        defined(ratio.ln())
                    }
                }
            }
        }

        "PB" => {
            let mut wins = 0usize;
            for (x, b) in e.iter().zip(&be) {
                if x.abs() < b.abs() {
                    wins += 1;
                }
            }
            defined(100.0 * (wins as f64 / n as f64))
        }

        "MMR" => {
            let denom = mean(input.insample);
            if denom == 0.0 {
                undefined(UndefinedReason::ZeroDenominator)
            } else {
                defined(mean(&e.iter().map(|x| x.abs()).collect::<Vec<_>>()) / denom)
            }
        }

        "MASE" | "RMSSE" | "MdASE" => {
            if input.insample.len() < 2 {
                return None;
            }
            let mut diff_sum = 0.0;
            for w in input.insample.windows(2) {
                diff_sum += (w[1] - w[0]).abs();
            }
            let scale = diff_sum / (input.insample.len() - 1) as f64;
            if scale == 0.0 {
                return undefined(UndefinedReason::IdenticalInsample);
            }
            let q: Vec<f64> = e.iter().map(|x| x / scale).collect();
            match name {
                "MASE" => defined(mean(&q.iter().map(|x| x.abs()).collect::<Vec<_>>())),
                "RMSSE" => defined(mean(&q.iter().map(|x| x * x).collect::<Vec<_>>()).sqrt()),
                _ => defined(median(&q.iter().map(|x| x.abs()).collect::<Vec<_>>())),
            }
        }

        other => panic!("oracle does not know measure {other}"),
    }
}

/// Percent Best over exactly two methods: strict minimum wins, ties score
/// for neither.
pub fn percent_best_pair(actuals: &[f64], first: &[f64], second: &[f64]) -> [f64; 2] {
    let e1 = errors(actuals, first);
    let e2 = errors(actuals, second);
    let n = e1.len();
    let mut wins = [0usize; 2];
    for (a, b) in e1.iter().zip(&e2) {
        if a.abs() < b.abs() {
            wins[0] += 1;
        } else if b.abs() < a.abs() {
            wins[1] += 1;
        }
    }
    [
        100.0 * (wins[0] as f64 / n as f64),
        100.0 * (wins[1] as f64 / n as f64),
    ]
}

/// Equality for the comparison: same undefinedness reason, or defined values
/// within 12 significant digits.
pub fn agree_to_12_digits(a: &MeasureValue, b: &MeasureValue) -> bool {
    match (a, b) {
        (MeasureValue::Defined(x), MeasureValue::Defined(y)) => {
            x == y || (x - y).abs() <= 1e-12 * x.abs().max(y.abs())
        }
        (MeasureValue::Undefined(r), MeasureValue::Undefined(q)) => r == q,
        _ => false,
    }
}
