//! Forecast error measures with explicit undefinedness.
//!
//! The catalogue covers scale-dependent errors (ME, MSE, RMSE, MAE, MdAE),
//! percentage errors (MAPE and friends, plus the zero-excluding iMAPE),
//! relative errors against a baseline (MRAE, MdRAE, GMRAE), relative
//! measures (RelMAE, RelMSE, RelRMSE, U2, LMR), percent-better counting
//! (PB, PBt), and scaled errors (MMR, MASE, RMSSE, MdASE).
//!
//! Every measure also exists in a mean-based variant that scores forecasts
//! against the per-period mean of the demand process instead of the point
//! demand, written with an `m` prefix (`mMAE`, `mGMRAE`, ...). The variant
//! is obtained purely by swapping the actuals fed to the base formula, for
//! the baseline errors too; [`evaluate`] performs that dispatch.
//!
//! Division by zero, empty exclusion sets, and degenerate in-sample windows
//! never produce IEEE infinities or NaNs: they surface as tagged
//! [`MeasureValue::Undefined`] values instead.

use crate::math;
use alloc::vec::Vec;
use core::fmt;

/// Why a measure could not be computed on a sample.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UndefinedReason {
    /// A denominator in the defining formula is exactly zero.
    ZeroDenominator,
    /// Every period was excluded (iMAPE on an all-zero target).
    EmptyAfterExclusion,
    /// All in-sample demands are identical, so the scaling denominator
    /// vanishes.
    IdenticalInsample,
    /// A relative error of exactly zero makes the geometric mean or log
    /// ratio collapse.
    ZeroRelativeError,
}

impl UndefinedReason {
    pub fn as_str(&self) -> &'static str {
        match self {
            UndefinedReason::ZeroDenominator => "zero-denominator",
            UndefinedReason::EmptyAfterExclusion => "empty-after-exclusion",
            UndefinedReason::IdenticalInsample => "identical-insample",
            UndefinedReason::ZeroRelativeError => "zero-relative-error",
        }
    }
}

impl fmt::Display for UndefinedReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A finite measure result, or a tagged reason why none exists.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum MeasureValue {
    Defined(f64),
    Undefined(UndefinedReason),
}

impl MeasureValue {
    pub fn defined(&self) -> Option<f64> {
        match self {
            MeasureValue::Defined(x) => Some(*x),
            MeasureValue::Undefined(_) => None,
        }
    }

    pub fn is_defined(&self) -> bool {
        matches!(self, MeasureValue::Defined(_))
    }
}

#[inline]
fn defined(x: f64) -> MeasureValue {
    debug_assert!(x.is_finite(), "measure produced a non-finite value");
    MeasureValue::Defined(x)
}

#[inline]
fn undefined(reason: UndefinedReason) -> MeasureValue {
    MeasureValue::Undefined(reason)
}

/// Base measure identifiers, named as they appear in reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BaseMeasure {
    Me,
    Mse,
    Rmse,
    Mae,
    MdAe,
    Mape,
    IMape,
    MdApe,
    Rmspe,
    RmdSpe,
    SMape,
    SMdApe,
    Mrae,
    MdRae,
    Gmrae,
    RelMae,
    RelMse,
    RelRmse,
    U2,
    Lmr,
    Pb,
    Pbt,
    Mmr,
    Mase,
    Rmsse,
    MdAse,
}

const BASE_NAMES: [(BaseMeasure, &str); 26] = [
    (BaseMeasure::Me, "ME"),
    (BaseMeasure::Mse, "MSE"),
    (BaseMeasure::Rmse, "RMSE"),
    (BaseMeasure::Mae, "MAE"),
    (BaseMeasure::MdAe, "MdAE"),
    (BaseMeasure::Mape, "MAPE"),
    (BaseMeasure::IMape, "iMAPE"),
    (BaseMeasure::MdApe, "MdAPE"),
    (BaseMeasure::Rmspe, "RMSPE"),
    (BaseMeasure::RmdSpe, "RMdSPE"),
    (BaseMeasure::SMape, "sMAPE"),
    (BaseMeasure::SMdApe, "sMdAPE"),
    (BaseMeasure::Mrae, "MRAE"),
    (BaseMeasure::MdRae, "MdRAE"),
    (BaseMeasure::Gmrae, "GMRAE"),
    (BaseMeasure::RelMae, "RelMAE"),
    (BaseMeasure::RelMse, "RelMSE"),
    (BaseMeasure::RelRmse, "RelRMSE"),
    (BaseMeasure::U2, "U2"),
    (BaseMeasure::Lmr, "LMR"),
    (BaseMeasure::Pb, "PB"),
    (BaseMeasure::Pbt, "PBt"),
    (BaseMeasure::Mmr, "MMR"),
    (BaseMeasure::Mase, "MASE"),
    (BaseMeasure::Rmsse, "RMSSE"),
    (BaseMeasure::MdAse, "MdASE"),
];

impl BaseMeasure {
    pub const ALL: [BaseMeasure; 26] = {
        let mut all = [BaseMeasure::Me; 26];
        let mut i = 0;
        while i < 26 {
            all[i] = BASE_NAMES[i].0;
            i += 1;
        }
        all
    };

    pub fn name(&self) -> &'static str {
        BASE_NAMES
            .iter()
            .find(|(b, _)| b == self)
            .map(|(_, n)| *n)
            .expect("every base measure is named")
    }

    /// Measures that compare against a baseline forecaster.
    pub fn requires_baseline(&self) -> bool {
        matches!(
            self,
            BaseMeasure::Mrae
                | BaseMeasure::MdRae
                | BaseMeasure::Gmrae
                | BaseMeasure::RelMae
                | BaseMeasure::RelMse
                | BaseMeasure::RelRmse
                | BaseMeasure::U2
                | BaseMeasure::Lmr
                | BaseMeasure::Pb
                | BaseMeasure::Pbt
        )
    }

    /// Measures scaled by an in-sample demand window.
    pub fn requires_insample(&self) -> bool {
        matches!(
            self,
            BaseMeasure::Mmr | BaseMeasure::Mase | BaseMeasure::Rmsse | BaseMeasure::MdAse
        )
    }
}

/// What the forecasts are scored against.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Target {
    /// The observed demands.
    Point,
    /// The per-period mean of the demand process.
    Mean,
}

/// Whether smaller or larger values indicate a better forecaster.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    LowerBetter,
    HigherBetter,
}

/// A fully qualified measure: base formula plus scoring target.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MeasureId {
    pub base: BaseMeasure,
    pub target: Target,
}

impl MeasureId {
    pub fn point(base: BaseMeasure) -> Self {
        Self {
            base,
            target: Target::Point,
        }
    }

    pub fn mean(base: BaseMeasure) -> Self {
        Self {
            base,
            target: Target::Mean,
        }
    }

    /// Percent-better measures reward larger values; everything else is an
    /// error to be minimized.
    pub fn orientation(&self) -> Orientation {
        match self.base {
            BaseMeasure::Pb | BaseMeasure::Pbt => Orientation::HigherBetter,
            _ => Orientation::LowerBetter,
        }
    }
}

impl fmt::Display for MeasureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.target {
            Target::Point => f.write_str(self.base.name()),
            Target::Mean => write!(f, "m{}", self.base.name()),
        }
    }
}

impl core::str::FromStr for MeasureId {
    type Err = MeasureError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (target, name) = match s.strip_prefix('m') {
            // no base name starts with a lowercase 'm', so the prefix is
            // unambiguous
            Some(rest) => (Target::Mean, rest),
            None => (Target::Point, s),
        };
        BASE_NAMES
            .iter()
            .find(|(_, n)| *n == name)
            .map(|(base, _)| MeasureId {
                base: *base,
                target,
            })
            .ok_or(MeasureError::UnknownMeasure)
    }
}

/// Structural failures: the sample shape does not fit the requested measure.
/// Mathematical degeneracies are not errors; they come back as tagged
/// [`MeasureValue::Undefined`] values.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MeasureError {
    EmptySample,
    LengthMismatch,
    NonFiniteInput,
    MissingBaseline,
    MissingInsample,
    InsampleTooShort,
    MissingMeanPath,
    /// PBt compares several methods at once; use [`percent_best`].
    MultiMethod,
    UnknownMeasure,
}

impl fmt::Display for MeasureError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let msg = match self {
            MeasureError::EmptySample => "sample must contain at least one period",
            MeasureError::LengthMismatch => "actuals, forecasts, and baselines must align",
            MeasureError::NonFiniteInput => "inputs must be finite",
            MeasureError::MissingBaseline => "measure needs baseline forecasts",
            MeasureError::MissingInsample => "measure needs an in-sample demand window",
            MeasureError::InsampleTooShort => "scaled errors need at least two in-sample periods",
            MeasureError::MissingMeanPath => "mean-based measures need a mean path",
            MeasureError::MultiMethod => "PBt scores several methods jointly; use percent_best",
            MeasureError::UnknownMeasure => "unknown measure identifier",
        };
        f.write_str(msg)
    }
}

impl core::error::Error for MeasureError {}

/// Aligned actuals and forecasts, optionally with baseline forecasts and an
/// in-sample window for scaled measures.
#[derive(Clone, Copy, Debug)]
pub struct ErrorSample<'a> {
    actuals: &'a [f64],
    forecasts: &'a [f64],
    baseline_forecasts: Option<&'a [f64]>,
    insample: Option<&'a [f64]>,
}

fn all_finite(values: &[f64]) -> Result<(), MeasureError> {
    if values.iter().all(|v| v.is_finite()) {
        Ok(())
    } else {
        Err(MeasureError::NonFiniteInput)
    }
}

impl<'a> ErrorSample<'a> {
    pub fn new(actuals: &'a [f64], forecasts: &'a [f64]) -> Result<Self, MeasureError> {
        if actuals.is_empty() {
            return Err(MeasureError::EmptySample);
        }
        if actuals.len() != forecasts.len() {
            return Err(MeasureError::LengthMismatch);
        }
        all_finite(actuals)?;
        all_finite(forecasts)?;
        Ok(Self {
            actuals,
            forecasts,
            baseline_forecasts: None,
            insample: None,
        })
    }

    pub fn with_baseline(mut self, baseline: &'a [f64]) -> Result<Self, MeasureError> {
        if baseline.len() != self.actuals.len() {
            return Err(MeasureError::LengthMismatch);
        }
        all_finite(baseline)?;
        self.baseline_forecasts = Some(baseline);
        Ok(self)
    }

    pub fn with_insample(mut self, insample: &'a [f64]) -> Result<Self, MeasureError> {
        if insample.is_empty() {
            return Err(MeasureError::EmptySample);
        }
        all_finite(insample)?;
        self.insample = Some(insample);
        Ok(self)
    }

    pub fn len(&self) -> usize {
        self.actuals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.actuals.is_empty()
    }

    /// Elementwise errors `actual - forecast`.
    pub fn errors(&self) -> Vec<f64> {
        self.actuals
            .iter()
            .zip(self.forecasts)
            .map(|(a, f)| a - f)
            .collect()
    }

    /// Errors of the baseline forecaster against the same actuals.
    pub fn baseline_errors(&self) -> Option<Vec<f64>> {
        self.baseline_forecasts
            .map(|b| self.actuals.iter().zip(b).map(|(a, f)| a - f).collect())
    }
}

fn mean_of(values: impl Iterator<Item = f64>, n: usize) -> f64 {
    values.sum::<f64>() / n as f64
}

/// Median with the midpoint convention for even lengths.
fn median_of(mut values: Vec<f64>) -> f64 {
    debug_assert!(!values.is_empty());
    values.sort_unstable_by(f64::total_cmp);
    let n = values.len();
    if n % 2 == 1 {
        values[n / 2]
    } else {
        (values[n / 2 - 1] + values[n / 2]) / 2.0
    }
}

enum Deviation {
    Mean,
    Median,
    RootMean,
    RootMedian,
}

fn deviation(values: Vec<f64>, kind: Deviation) -> f64 {
    let n = values.len();
    match kind {
        Deviation::Mean => mean_of(values.into_iter(), n),
        Deviation::Median => median_of(values),
        Deviation::RootMean => math::sqrt(mean_of(values.into_iter(), n)),
        Deviation::RootMedian => math::sqrt(median_of(values)),
    }
}

/// Percentage terms `100 (a - f) / a`, or the zero-denominator tag.
///
/// The ratio is taken before scaling by 100 so that a zero forecast scores
/// exactly 100 against any positive target.
fn percentage_terms(sample: &ErrorSample) -> Result<Vec<f64>, UndefinedReason> {
    if sample.actuals.contains(&0.0) {
        return Err(UndefinedReason::ZeroDenominator);
    }
    Ok(sample
        .actuals
        .iter()
        .zip(sample.forecasts)
        .map(|(a, f)| 100.0 * ((a - f) / a))
        .collect())
}

fn symmetric_terms(sample: &ErrorSample) -> Result<Vec<f64>, UndefinedReason> {
    if sample
        .actuals
        .iter()
        .zip(sample.forecasts)
        .any(|(a, f)| a + f == 0.0)
    {
        return Err(UndefinedReason::ZeroDenominator);
    }
    Ok(sample
        .actuals
        .iter()
        .zip(sample.forecasts)
        .map(|(a, f)| 200.0 * (math::abs(a - f) / (a + f)))
        .collect())
}

/// Relative errors `e / e*`, or the zero-denominator tag.
fn relative_terms(errors: &[f64], baseline_errors: &[f64]) -> Result<Vec<f64>, UndefinedReason> {
    if baseline_errors.contains(&0.0) {
        return Err(UndefinedReason::ZeroDenominator);
    }
    Ok(errors
        .iter()
        .zip(baseline_errors)
        .map(|(e, b)| e / b)
        .collect())
}

fn mae_of(errors: &[f64]) -> f64 {
    mean_of(errors.iter().map(|e| math::abs(*e)), errors.len())
}

fn mse_of(errors: &[f64]) -> f64 {
    mean_of(errors.iter().map(|e| e * e), errors.len())
}

/// Ratio of a scale-dependent statistic between method and baseline.
fn relative_measure(
    stat: impl Fn(&[f64]) -> f64,
    errors: &[f64],
    baseline_errors: &[f64],
) -> MeasureValue {
    let denom = stat(baseline_errors);
    if denom == 0.0 {
        undefined(UndefinedReason::ZeroDenominator)
    } else {
        defined(stat(errors) / denom)
    }
}

/// Compute `base` on a prepared sample. The actuals are taken as given, so
/// the same code serves both point and mean targets.
pub fn compute_base(base: BaseMeasure, sample: &ErrorSample) -> Result<MeasureValue, MeasureError> {
    use BaseMeasure::*;

    let errors = sample.errors();
    let n = errors.len();

    let value = match base {
        Me => defined(mean_of(errors.iter().copied(), n)),
        Mse => defined(mse_of(&errors)),
        Rmse => defined(math::sqrt(mse_of(&errors))),
        Mae => defined(mae_of(&errors)),
        MdAe => defined(median_of(errors.iter().map(|e| math::abs(*e)).collect())),

        Mape | MdApe | Rmspe | RmdSpe => match percentage_terms(sample) {
            Err(reason) => undefined(reason),
            Ok(p) => {
                let values: Vec<f64> = match base {
                    Mape | MdApe => p.iter().map(|x| math::abs(*x)).collect(),
                    _ => p.iter().map(|x| x * x).collect(),
                };
                let kind = match base {
                    Mape => Deviation::Mean,
                    MdApe => Deviation::Median,
                    Rmspe => Deviation::RootMean,
                    _ => Deviation::RootMedian,
                };
                defined(deviation(values, kind))
            }
        },

        SMape | SMdApe => match symmetric_terms(sample) {
            Err(reason) => undefined(reason),
            Ok(terms) => {
                let kind = if base == SMape {
                    Deviation::Mean
                } else {
                    Deviation::Median
                };
                defined(deviation(terms, kind))
            }
        },

        IMape => {
            let included: Vec<f64> = sample
                .actuals
                .iter()
                .zip(sample.forecasts)
                .filter(|(a, _)| **a != 0.0)
                .map(|(a, f)| math::abs(100.0 * ((a - f) / a)))
                .collect();
            if included.is_empty() {
                undefined(UndefinedReason::EmptyAfterExclusion)
            } else {
                let n = included.len();
                defined(mean_of(included.into_iter(), n))
            }
        }

        Mrae | MdRae | Gmrae => {
            let baseline = sample
                .baseline_errors()
                .ok_or(MeasureError::MissingBaseline)?;
            match relative_terms(&errors, &baseline) {
                Err(reason) => undefined(reason),
                Ok(r) => {
                    let abs_r: Vec<f64> = r.iter().map(|x| math::abs(*x)).collect();
                    match base {
                        Mrae => defined(mean_of(abs_r.iter().copied(), n)),
                        MdRae => defined(median_of(abs_r)),
                        _ => {
                            if abs_r.contains(&0.0) {
                                undefined(UndefinedReason::ZeroRelativeError)
                            } else {
                                // geometric mean via logs to dodge overflow
                                defined(math::exp(mean_of(abs_r.iter().map(|x| math::ln(*x)), n)))
                            }
                        }
                    }
                }
            }
        }

        RelMae => {
            let baseline = sample
                .baseline_errors()
                .ok_or(MeasureError::MissingBaseline)?;
            relative_measure(mae_of, &errors, &baseline)
        }
        RelMse => {
            let baseline = sample
                .baseline_errors()
                .ok_or(MeasureError::MissingBaseline)?;
            relative_measure(mse_of, &errors, &baseline)
        }
        RelRmse | U2 => {
            let baseline = sample
                .baseline_errors()
                .ok_or(MeasureError::MissingBaseline)?;
            relative_measure(|e| math::sqrt(mse_of(e)), &errors, &baseline)
        }
        Lmr => {
            let baseline = sample
                .baseline_errors()
                .ok_or(MeasureError::MissingBaseline)?;
            let denom = mse_of(&baseline);
            if denom == 0.0 {
                undefined(UndefinedReason::ZeroDenominator)
            } else {
                let ratio = mse_of(&errors) / denom;
                if ratio == 0.0 {
                    // log of a zero ratio has no finite value
                    undefined(UndefinedReason::ZeroRelativeError)
                } else {
                    defined(math::ln(ratio))
                }
            }
        }

        Pb => {
            let baseline = sample
                .baseline_errors()
                .ok_or(MeasureError::MissingBaseline)?;
            let wins = errors
                .iter()
                .zip(&baseline)
                .filter(|(e, b)| math::abs(**e) < math::abs(**b))
                .count();
            defined(100.0 * (wins as f64 / n as f64))
        }

        Pbt => return Err(MeasureError::MultiMethod),

        Mmr => {
            let insample = sample.insample.ok_or(MeasureError::MissingInsample)?;
            let mean_demand = mean_of(insample.iter().copied(), insample.len());
            if mean_demand == 0.0 {
                undefined(UndefinedReason::ZeroDenominator)
            } else {
                defined(mae_of(&errors) / mean_demand)
            }
        }

        Mase | Rmsse | MdAse => {
            let insample = sample.insample.ok_or(MeasureError::MissingInsample)?;
            if insample.len() < 2 {
                return Err(MeasureError::InsampleTooShort);
            }
            let scale = mean_of(
                insample.windows(2).map(|w| math::abs(w[1] - w[0])),
                insample.len() - 1,
            );
            if scale == 0.0 {
                undefined(UndefinedReason::IdenticalInsample)
            } else {
                let q: Vec<f64> = errors.iter().map(|e| e / scale).collect();
                match base {
                    Mase => defined(mean_of(q.iter().map(|x| math::abs(*x)), n)),
                    Rmsse => defined(math::sqrt(mean_of(q.iter().map(|x| x * x), n))),
                    _ => defined(median_of(q.iter().map(|x| math::abs(*x)).collect())),
                }
            }
        }
    };

    Ok(value)
}

/// Percent Best over several methods: for each period the strictly smallest
/// absolute error scores; ties on the minimum score for no one.
pub fn percent_best(samples: &[ErrorSample]) -> Result<Vec<MeasureValue>, MeasureError> {
    let first = samples.first().ok_or(MeasureError::EmptySample)?;
    let n = first.len();
    if samples.iter().any(|s| s.len() != n) {
        return Err(MeasureError::LengthMismatch);
    }
    let abs_errors: Vec<Vec<f64>> = samples
        .iter()
        .map(|s| s.errors().iter().map(|e| math::abs(*e)).collect())
        .collect();
    let mut wins = alloc::vec![0usize; samples.len()];
    for t in 0..n {
        let mut best = usize::MAX;
        let mut best_err = f64::INFINITY;
        let mut tied = false;
        for (i, errs) in abs_errors.iter().enumerate() {
            if errs[t] < best_err {
                best_err = errs[t];
                best = i;
                tied = false;
            } else if errs[t] == best_err {
                tied = true;
            }
        }
        if !tied {
            wins[best] += 1;
        }
    }
    Ok(wins
        .into_iter()
        .map(|w| defined(100.0 * (w as f64 / n as f64)))
        .collect())
}

/// Everything a single evaluation may need. `demands` and `forecasts` are
/// mandatory; the rest feed mean-based, relative, and scaled measures.
#[derive(Clone, Copy, Debug)]
pub struct EvalContext<'a> {
    pub demands: &'a [f64],
    pub forecasts: &'a [f64],
    pub mean_path: Option<&'a [f64]>,
    pub baseline_forecasts: Option<&'a [f64]>,
    pub insample: Option<&'a [f64]>,
}

impl<'a> EvalContext<'a> {
    pub fn new(demands: &'a [f64], forecasts: &'a [f64]) -> Self {
        Self {
            demands,
            forecasts,
            mean_path: None,
            baseline_forecasts: None,
            insample: None,
        }
    }
}

/// Evaluate any measure, dispatching on its target: point measures score
/// against the demands, mean-based measures against the mean path, with
/// baseline errors lifted the same way. The in-sample window for scaled
/// measures always stays the raw demand history.
pub fn evaluate(id: MeasureId, ctx: &EvalContext) -> Result<MeasureValue, MeasureError> {
    let actuals = match id.target {
        Target::Point => ctx.demands,
        Target::Mean => {
            let path = ctx.mean_path.ok_or(MeasureError::MissingMeanPath)?;
            if path.len() != ctx.demands.len() {
                return Err(MeasureError::LengthMismatch);
            }
            path
        }
    };
    let mut sample = ErrorSample::new(actuals, ctx.forecasts)?;
    if let Some(baseline) = ctx.baseline_forecasts {
        sample = sample.with_baseline(baseline)?;
    }
    if let Some(insample) = ctx.insample {
        sample = sample.with_insample(insample)?;
    }
    compute_base(id.base, &sample)
}
