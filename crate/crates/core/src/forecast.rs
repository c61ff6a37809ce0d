//! Streaming one-step-ahead forecasters.
//!
//! Four methods: single exponential smoothing (SES), Croston's method with
//! the Syntetos-Boylan bias correction (CR), the random walk / naive
//! forecaster (RW), and the constant zero forecaster (ZF). Each is a small
//! state machine that emits the forecast for the next period and is then
//! updated with the observed demand; [`run_forecaster`] drives one over a
//! warm-up prefix followed by an evaluation window.

use alloc::vec::Vec;
use core::fmt;

/// Single exponential smoothing: `s <- alpha * y + (1 - alpha) * s`, where
/// the forecast for the next period is the current smoothed value.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SesState {
    alpha: f64,
    smoothed: f64,
}

impl SesState {
    pub fn new(alpha: f64, initial: f64) -> Result<Self, ForecastError> {
        if !(alpha > 0.0 && alpha < 1.0) {
            return Err(ForecastError::SmoothingOutOfRange);
        }
        if !initial.is_finite() {
            return Err(ForecastError::InvalidInitialState);
        }
        Ok(Self {
            alpha,
            smoothed: initial,
        })
    }

    pub fn update(&mut self, y: f64) {
        self.smoothed = self.alpha * y + (1.0 - self.alpha) * self.smoothed;
    }

    pub fn forecast(&self) -> f64 {
        self.smoothed
    }
}

/// Croston state: separate exponential smoothing of nonzero demand sizes
/// (factor `alpha`) and inter-demand intervals (factor `beta`). Updates only
/// happen at periods with nonzero demand.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CrostonState {
    alpha: f64,
    beta: f64,
    smoothed_size: f64,
    smoothed_interval: f64,
    periods_since_demand: u64,
}

impl CrostonState {
    /// State with the conventional unit initial values for size and interval.
    pub fn new(alpha: f64, beta: f64) -> Result<Self, ForecastError> {
        Self::with_initial(alpha, beta, 1.0, 1.0)
    }

    pub fn with_initial(
        alpha: f64,
        beta: f64,
        size: f64,
        interval: f64,
    ) -> Result<Self, ForecastError> {
        if !(alpha > 0.0 && alpha < 1.0 && beta > 0.0 && beta < 1.0) {
            return Err(ForecastError::SmoothingOutOfRange);
        }
        if !(size.is_finite() && size > 0.0 && interval.is_finite() && interval >= 1.0) {
            return Err(ForecastError::InvalidInitialState);
        }
        Ok(Self {
            alpha,
            beta,
            smoothed_size: size,
            smoothed_interval: interval,
            periods_since_demand: 0,
        })
    }

    pub fn update(&mut self, y: f64) {
        if y == 0.0 {
            self.periods_since_demand += 1;
        } else {
            let interval = (self.periods_since_demand + 1) as f64;
            self.smoothed_size = self.alpha * y + (1.0 - self.alpha) * self.smoothed_size;
            self.smoothed_interval =
                self.beta * interval + (1.0 - self.beta) * self.smoothed_interval;
            self.periods_since_demand = 0;
        }
    }

    /// Syntetos-Boylan corrected ratio `(1 - beta/2) * size / interval`.
    pub fn forecast(&self) -> f64 {
        (1.0 - self.beta / 2.0) * self.smoothed_size / self.smoothed_interval
    }

    pub fn smoothed_size(&self) -> f64 {
        self.smoothed_size
    }

    pub fn smoothed_interval(&self) -> f64 {
        self.smoothed_interval
    }
}

/// The naive forecast: the previous period's demand.
pub fn rw_forecast(previous_demand: f64) -> f64 {
    previous_demand
}

/// The constant zero forecast.
pub fn zf_forecast() -> f64 {
    0.0
}

/// Forecaster family, without parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MethodKind {
    Ses,
    Croston,
    RandomWalk,
    Zero,
}

impl MethodKind {
    pub const ALL: [MethodKind; 4] = [
        MethodKind::Ses,
        MethodKind::Croston,
        MethodKind::RandomWalk,
        MethodKind::Zero,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            MethodKind::Ses => "SES",
            MethodKind::Croston => "CR",
            MethodKind::RandomWalk => "RW",
            MethodKind::Zero => "ZF",
        }
    }
}

impl fmt::Display for MethodKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl core::str::FromStr for MethodKind {
    type Err = ForecastError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "SES" => Ok(MethodKind::Ses),
            "CR" => Ok(MethodKind::Croston),
            "RW" => Ok(MethodKind::RandomWalk),
            "ZF" => Ok(MethodKind::Zero),
            _ => Err(ForecastError::UnknownMethod),
        }
    }
}

/// A fully parameterized forecasting method.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Method {
    Ses { alpha: f64 },
    Croston { alpha: f64, beta: f64 },
    RandomWalk,
    Zero,
}

impl Method {
    pub fn kind(&self) -> MethodKind {
        match self {
            Method::Ses { .. } => MethodKind::Ses,
            Method::Croston { .. } => MethodKind::Croston,
            Method::RandomWalk => MethodKind::RandomWalk,
            Method::Zero => MethodKind::Zero,
        }
    }
}

/// One-step-ahead forecasts aligned with the series they predict:
/// `values()[t]` was produced strictly before demand `t` was observed.
#[derive(Clone, Debug, PartialEq)]
pub struct ForecastTrace {
    values: Vec<f64>,
}

impl ForecastTrace {
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

enum ForecasterState {
    Ses(SesState),
    Croston(CrostonState),
    Rw { last: f64 },
    Zero,
}

impl ForecasterState {
    fn forecast(&self) -> f64 {
        match self {
            ForecasterState::Ses(s) => s.forecast(),
            ForecasterState::Croston(s) => s.forecast(),
            ForecasterState::Rw { last } => rw_forecast(*last),
            ForecasterState::Zero => zf_forecast(),
        }
    }

    fn update(&mut self, y: f64) {
        match self {
            ForecasterState::Ses(s) => s.update(y),
            ForecasterState::Croston(s) => s.update(y),
            ForecasterState::Rw { last } => *last = y,
            ForecasterState::Zero => {}
        }
    }
}

/// Run a method over `warmup` (state updates only, nothing recorded), then
/// record the one-step-ahead forecast for each period of `series` before
/// updating on its observed demand.
///
/// SES and CR start from unit initial values; RW starts from 0, so with an
/// empty warm-up its first forecast is 0.
pub fn run_forecaster(
    method: Method,
    warmup: &[f64],
    series: &[f64],
) -> Result<ForecastTrace, ForecastError> {
    if series.is_empty() {
        return Err(ForecastError::EmptySeries);
    }
    if !warmup
        .iter()
        .chain(series)
        .all(|y| y.is_finite() && *y >= 0.0)
    {
        return Err(ForecastError::InvalidDemand);
    }
    let mut state = match method {
        Method::Ses { alpha } => ForecasterState::Ses(SesState::new(alpha, 1.0)?),
        Method::Croston { alpha, beta } => {
            ForecasterState::Croston(CrostonState::new(alpha, beta)?)
        }
        Method::RandomWalk => ForecasterState::Rw { last: 0.0 },
        Method::Zero => ForecasterState::Zero,
    };
    for &y in warmup {
        state.update(y);
    }
    let mut values = Vec::with_capacity(series.len());
    for &y in series {
        values.push(state.forecast());
        state.update(y);
    }
    Ok(ForecastTrace { values })
}

/// Forecaster construction and run failures.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ForecastError {
    SmoothingOutOfRange,
    InvalidInitialState,
    EmptySeries,
    InvalidDemand,
    UnknownMethod,
}

impl fmt::Display for ForecastError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ForecastError::SmoothingOutOfRange => {
                write!(f, "smoothing parameters must lie strictly inside (0, 1)")
            }
            ForecastError::InvalidInitialState => write!(
                f,
                "initial smoothed size must be positive and interval at least 1"
            ),
            ForecastError::EmptySeries => write!(f, "evaluation series must be nonempty"),
            ForecastError::InvalidDemand => {
                write!(f, "demands must be finite and non-negative")
            }
            ForecastError::UnknownMethod => write!(f, "unknown method (expected SES, CR, RW, ZF)"),
        }
    }
}

impl core::error::Error for ForecastError {}
