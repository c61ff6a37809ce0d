//! Estimators of the process-mean path for series whose generating process
//! is unknown.

use crate::demand::{DemandSeries, MeanPath, Provenance};
use alloc::vec::Vec;
use core::fmt;

/// Which estimate of the per-period process mean to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MeanEstimatorSpec {
    /// Constant path equal to the mean of all demands, zeros included.
    SeriesMean,
    /// Centered moving average of odd width `window`, truncated and
    /// renormalized at the boundaries.
    MovingWindow { window: usize },
    /// Ordinary least-squares line over `(t, demand)`, clamped below at 0.
    Regression,
    /// Pass-through of a generator-provided analytic path.
    Known,
}

impl MeanEstimatorSpec {
    pub fn validate(&self) -> Result<(), MeanEstimatorError> {
        if let MeanEstimatorSpec::MovingWindow { window } = self {
            if *window == 0 || window % 2 == 0 {
                return Err(MeanEstimatorError::WindowNotOdd);
            }
        }
        Ok(())
    }
}

impl fmt::Display for MeanEstimatorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MeanEstimatorSpec::SeriesMean => f.write_str("series-mean"),
            MeanEstimatorSpec::MovingWindow { window } => write!(f, "window:{window}"),
            MeanEstimatorSpec::Regression => f.write_str("regression"),
            MeanEstimatorSpec::Known => f.write_str("known"),
        }
    }
}

impl core::str::FromStr for MeanEstimatorSpec {
    type Err = MeanEstimatorError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let spec = match s {
            "series-mean" => MeanEstimatorSpec::SeriesMean,
            "regression" => MeanEstimatorSpec::Regression,
            "known" => MeanEstimatorSpec::Known,
            other => {
                let window = other
                    .strip_prefix("window:")
                    .and_then(|w| w.parse::<usize>().ok())
                    .ok_or(MeanEstimatorError::UnknownEstimator)?;
                MeanEstimatorSpec::MovingWindow { window }
            }
        };
        spec.validate()?;
        Ok(spec)
    }
}

/// Estimate the mean path of `series`. The `known` estimator just forwards
/// `analytic`, which must be present and aligned.
pub fn estimate_mean_path(
    spec: &MeanEstimatorSpec,
    series: &DemandSeries,
    analytic: Option<&MeanPath>,
) -> Result<MeanPath, MeanEstimatorError> {
    spec.validate()?;
    let values = series.values();
    let estimated = match *spec {
        MeanEstimatorSpec::SeriesMean => {
            alloc::vec![series.sample_mean(); values.len()]
        }
        MeanEstimatorSpec::MovingWindow { window } => {
            let half = window / 2;
            let n = values.len();
            let mut path = Vec::with_capacity(n);
            for t in 0..n {
                let lo = t.saturating_sub(half);
                let hi = (t + half + 1).min(n);
                let slice = &values[lo..hi];
                path.push(slice.iter().sum::<f64>() / slice.len() as f64);
            }
            path
        }
        MeanEstimatorSpec::Regression => {
            let n = values.len();
            if n < 2 {
                return Err(MeanEstimatorError::SeriesTooShort);
            }
            // OLS over (t, y) with t = 1..=n; fitted values clamped at 0
            // because a negative mean demand is meaningless.
            let nf = n as f64;
            let t_mean = (nf + 1.0) / 2.0;
            let y_mean = values.iter().sum::<f64>() / nf;
            let mut cov = 0.0;
            let mut var = 0.0;
            for (i, &y) in values.iter().enumerate() {
                let dt = (i + 1) as f64 - t_mean;
                cov += dt * (y - y_mean);
                var += dt * dt;
            }
            let slope = cov / var;
            let intercept = y_mean - slope * t_mean;
            (1..=n)
                .map(|t| (intercept + slope * t as f64).max(0.0))
                .collect()
        }
        MeanEstimatorSpec::Known => {
            let path = analytic.ok_or(MeanEstimatorError::MissingKnownPath)?;
            if path.len() != values.len() {
                return Err(MeanEstimatorError::LengthMismatch);
            }
            return Ok(path.clone());
        }
    };
    MeanPath::new(estimated, Provenance::SampleEstimated)
        .map_err(|_| MeanEstimatorError::SeriesTooShort)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MeanEstimatorError {
    WindowNotOdd,
    SeriesTooShort,
    MissingKnownPath,
    LengthMismatch,
    UnknownEstimator,
}

impl fmt::Display for MeanEstimatorError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let msg = match self {
            MeanEstimatorError::WindowNotOdd => "moving window width must be odd and positive",
            MeanEstimatorError::SeriesTooShort => "series too short for this estimator",
            MeanEstimatorError::MissingKnownPath => {
                "the known estimator needs a generator-provided mean path"
            }
            MeanEstimatorError::LengthMismatch => "mean path and series lengths differ",
            MeanEstimatorError::UnknownEstimator => {
                "unknown estimator (expected series-mean, window:K, regression, known)"
            }
        };
        f.write_str(msg)
    }
}

impl core::error::Error for MeanEstimatorError {}
