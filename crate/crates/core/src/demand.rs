//! Artificial intermittent-demand generators, paired with the true
//! per-period mean of the generating process.
//!
//! Every generator returns both the demand series and the analytic mean
//! path, so forecasts can later be scored against either the point demands
//! or the process mean.

use crate::rng::{self, LogarithmicParams, RandomStream};
use alloc::vec::Vec;
use core::fmt;

/// Ordered non-negative demand observations, indexed `t = 1..=n`.
#[derive(Clone, Debug, PartialEq)]
pub struct DemandSeries {
    values: Vec<f64>,
}

impl DemandSeries {
    pub fn new(values: Vec<f64>) -> Result<Self, GeneratorError> {
        if values.is_empty() {
            return Err(GeneratorError::EmptySeries);
        }
        if values.iter().any(|v| !v.is_finite() || *v < 0.0) {
            return Err(GeneratorError::NegativeDemand);
        }
        Ok(Self { values })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Mean over all periods, zeros included.
    pub fn sample_mean(&self) -> f64 {
        self.values.iter().sum::<f64>() / self.values.len() as f64
    }
}

/// Where a mean path came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// Closed form of the generating process.
    Analytic,
    /// Estimated from the observed series.
    SampleEstimated,
}

/// The per-period mean of the demand process, aligned with a series.
#[derive(Clone, Debug, PartialEq)]
pub struct MeanPath {
    values: Vec<f64>,
    provenance: Provenance,
}

impl MeanPath {
    pub fn new(values: Vec<f64>, provenance: Provenance) -> Result<Self, GeneratorError> {
        if values.is_empty() {
            return Err(GeneratorError::EmptySeries);
        }
        if values.iter().any(|v| !v.is_finite() || *v < 0.0) {
            return Err(GeneratorError::NegativeMean);
        }
        Ok(Self { values, provenance })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    /// The path restricted to `range`, keeping the provenance tag.
    pub fn slice(&self, start: usize, end: usize) -> Result<Self, GeneratorError> {
        let values = self
            .values
            .get(start..end)
            .ok_or(GeneratorError::EmptySeries)?
            .to_vec();
        Self::new(values, self.provenance)
    }
}

/// How the non-zero-demand probability of an obsolescence process decays.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ObsolescenceProfile {
    /// Probability falls linearly from its initial value to 0, reaching 0 at
    /// period `end`.
    LinearToZero { end: usize },
    /// Probability is constant, then 0 from period `change` onward.
    AbruptToZero { change: usize },
}

/// A demand-generating process.
#[derive(Clone, Debug, PartialEq)]
pub enum GeneratorSpec {
    /// Each period is independently nonzero with probability `p0`; nonzero
    /// sizes follow the logarithmic distribution with shape `ell`.
    BernoulliLogarithmic { p0: f64, ell: f64 },
    /// As above with geometric(`size_p`) sizes.
    BernoulliGeometricSize { p0: f64, size_p: f64 },
    /// Deterministic demand of `size` every `period` periods.
    RegularIntermittent { period: usize, size: f64 },
    /// 0/1 demand following a 2-state Markov chain started from its
    /// stationary distribution; `p01` and `p10` are the transition
    /// probabilities out of 0 and 1.
    Markov2 { p01: f64, p10: f64 },
    /// Bernoulli-logarithmic demand whose nonzero probability starts at `p0`
    /// and decays to zero along `profile`.
    Obsolescence {
        p0: f64,
        ell: f64,
        profile: ObsolescenceProfile,
    },
}

impl GeneratorSpec {
    pub fn validate(&self) -> Result<(), GeneratorError> {
        let prob_open = |p: f64| p > 0.0 && p < 1.0;
        let prob_half_open = |p: f64| p > 0.0 && p <= 1.0;
        match *self {
            GeneratorSpec::BernoulliLogarithmic { p0, ell } => {
                if !prob_half_open(p0) {
                    return Err(GeneratorError::InvalidParameter("p0 must lie in (0, 1]"));
                }
                if !prob_open(ell) {
                    return Err(GeneratorError::InvalidParameter("ell must lie in (0, 1)"));
                }
            }
            GeneratorSpec::BernoulliGeometricSize { p0, size_p } => {
                if !prob_half_open(p0) {
                    return Err(GeneratorError::InvalidParameter("p0 must lie in (0, 1]"));
                }
                if !prob_open(size_p) {
                    return Err(GeneratorError::InvalidParameter(
                        "size_p must lie in (0, 1)",
                    ));
                }
            }
            GeneratorSpec::RegularIntermittent { period, size } => {
                if period == 0 {
                    return Err(GeneratorError::InvalidParameter("period must be >= 1"));
                }
                if !(size.is_finite() && size > 0.0) {
                    return Err(GeneratorError::InvalidParameter("size must be positive"));
                }
            }
            GeneratorSpec::Markov2 { p01, p10 } => {
                if !prob_open(p01) || !prob_open(p10) {
                    return Err(GeneratorError::InvalidParameter(
                        "transition probabilities must lie in (0, 1)",
                    ));
                }
            }
            GeneratorSpec::Obsolescence { p0, ell, profile } => {
                if !prob_half_open(p0) {
                    return Err(GeneratorError::InvalidParameter("p0 must lie in (0, 1]"));
                }
                if !prob_open(ell) {
                    return Err(GeneratorError::InvalidParameter("ell must lie in (0, 1)"));
                }
                match profile {
                    ObsolescenceProfile::LinearToZero { end } if end < 2 => {
                        return Err(GeneratorError::InvalidParameter(
                            "linear profile needs end >= 2",
                        ));
                    }
                    ObsolescenceProfile::AbruptToZero { change } if change < 1 => {
                        return Err(GeneratorError::InvalidParameter(
                            "abrupt profile needs change >= 1",
                        ));
                    }
                    _ => {}
                }
            }
        }
        Ok(())
    }

    /// Closed-form process mean at 1-based period `t`; constant in `t` for
    /// the stationary kinds.
    pub fn analytic_mean(&self, t: usize) -> f64 {
        assert!(t >= 1, "periods are 1-based");
        match *self {
            GeneratorSpec::BernoulliLogarithmic { p0, ell } => {
                p0 * LogarithmicParams::new(ell).expect("validated").mean()
            }
            GeneratorSpec::BernoulliGeometricSize { p0, size_p } => p0 / size_p,
            GeneratorSpec::RegularIntermittent { period, size } => size / period as f64,
            GeneratorSpec::Markov2 { p01, p10 } => p01 / (p01 + p10),
            GeneratorSpec::Obsolescence { p0, ell, profile } => {
                let p_t = obsolescence_probability(p0, profile, t);
                p_t * LogarithmicParams::new(ell).expect("validated").mean()
            }
        }
    }
}

fn obsolescence_probability(p0: f64, profile: ObsolescenceProfile, t: usize) -> f64 {
    match profile {
        ObsolescenceProfile::LinearToZero { end } => {
            if t >= end {
                0.0
            } else {
                p0 * (end - t) as f64 / (end - 1) as f64
            }
        }
        ObsolescenceProfile::AbruptToZero { change } => {
            if t >= change {
                0.0
            } else {
                p0
            }
        }
    }
}

/// Generate `n` periods of demand together with the analytic mean path.
pub fn generate(
    spec: &GeneratorSpec,
    n: usize,
    stream: &mut RandomStream,
) -> Result<(DemandSeries, MeanPath), GeneratorError> {
    spec.validate()?;
    if n == 0 {
        return Err(GeneratorError::EmptySeries);
    }
    let mut demands = Vec::with_capacity(n);
    let mut means = Vec::with_capacity(n);

    match *spec {
        GeneratorSpec::BernoulliLogarithmic { p0, ell } => {
            let params = LogarithmicParams::new(ell).expect("validated");
            let mean = p0 * params.mean();
            for _ in 0..n {
                let d = if rng::sample_bernoulli(stream, p0) == 1 {
                    rng::sample_logarithmic(stream, params) as f64
                } else {
                    0.0
                };
                demands.push(d);
                means.push(mean);
            }
        }
        GeneratorSpec::BernoulliGeometricSize { p0, size_p } => {
            let mean = p0 / size_p;
            for _ in 0..n {
                let d = if rng::sample_bernoulli(stream, p0) == 1 {
                    rng::sample_geometric(stream, size_p) as f64
                } else {
                    0.0
                };
                demands.push(d);
                means.push(mean);
            }
        }
        GeneratorSpec::RegularIntermittent { period, size } => {
            let mean = size / period as f64;
            for t in 1..=n {
                demands.push(if t % period == 0 { size } else { 0.0 });
                means.push(mean);
            }
        }
        GeneratorSpec::Markov2 { p01, p10 } => {
            let stationary = p01 / (p01 + p10);
            let mut state = rng::sample_bernoulli(stream, stationary);
            for _ in 0..n {
                demands.push(state as f64);
                means.push(stationary);
                let flip = if state == 0 { p01 } else { p10 };
                if rng::sample_bernoulli(stream, flip) == 1 {
                    state = 1 - state;
                }
            }
        }
        GeneratorSpec::Obsolescence { p0, ell, profile } => {
            let params = LogarithmicParams::new(ell).expect("validated");
            let size_mean = params.mean();
            for t in 1..=n {
                let p_t = obsolescence_probability(p0, profile, t);
                let d = if p_t > 0.0 && rng::sample_bernoulli(stream, p_t) == 1 {
                    rng::sample_logarithmic(stream, params) as f64
                } else {
                    0.0
                };
                demands.push(d);
                means.push(p_t * size_mean);
            }
        }
    }

    Ok((
        DemandSeries::new(demands)?,
        MeanPath::new(means, Provenance::Analytic)?,
    ))
}

/// Generator and series construction failures.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GeneratorError {
    InvalidParameter(&'static str),
    EmptySeries,
    NegativeDemand,
    NegativeMean,
}

impl fmt::Display for GeneratorError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorError::InvalidParameter(what) => write!(f, "invalid generator spec: {what}"),
            GeneratorError::EmptySeries => write!(f, "series must contain at least one period"),
            GeneratorError::NegativeDemand => write!(f, "demands must be finite and non-negative"),
            GeneratorError::NegativeMean => {
                write!(f, "mean path entries must be finite and non-negative")
            }
        }
    }
}

impl core::error::Error for GeneratorError {}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::math;

    fn lag1_autocorrelation(values: &[f64]) -> f64 {
        let n = values.len();
        let mean = values.iter().sum::<f64>() / n as f64;
        let mut num = 0.0;
        let mut den = 0.0;
        for t in 0..n {
            let d = values[t] - mean;
            den += d * d;
            if t + 1 < n {
                num += d * (values[t + 1] - mean);
            }
        }
        num / den
    }

    fn log_mean(ell: f64) -> f64 {
        -ell / ((1.0 - ell) * math::ln(1.0 - ell))
    }

    #[test]
    fn bernoulli_logarithmic_sample_mean_tracks_analytic() {
        let spec = GeneratorSpec::BernoulliLogarithmic {
            p0: 0.2,
            ell: 0.001,
        };
        let mut stream = RandomStream::from_seed(101);
        let n = 100_000;
        let (series, path) = generate(&spec, n, &mut stream).unwrap();
        let analytic = 0.2 * log_mean(0.001);
        assert!((analytic - 0.2001).abs() < 1e-4);
        assert!(path.values().iter().all(|&m| m == analytic));

        // var(y) = p0 E[X^2] - mean^2 with E[X^2] = mu / (1 - ell)
        let var = 0.2 * log_mean(0.001) / 0.999 - analytic * analytic;
        let se = (var / n as f64).sqrt();
        assert!(
            (series.sample_mean() - analytic).abs() < 3.0 * se,
            "sample mean {}",
            series.sample_mean()
        );
    }

    #[test]
    fn geometric_size_sample_mean_tracks_analytic() {
        let spec = GeneratorSpec::BernoulliGeometricSize {
            p0: 0.4,
            size_p: 0.25,
        };
        let mut stream = RandomStream::from_seed(107);
        let n = 100_000;
        let (series, path) = generate(&spec, n, &mut stream).unwrap();
        let analytic = 0.4 / 0.25;
        assert!(path.values().iter().all(|&m| m == analytic));
        // var(y) = p0 E[X^2] - mean^2 with E[X^2] = (2 - p) / p^2
        let e_x2 = (2.0 - 0.25) / (0.25 * 0.25);
        let var = 0.4 * e_x2 - analytic * analytic;
        let se = (var / n as f64).sqrt();
        assert!(
            (series.sample_mean() - analytic).abs() < 4.0 * se,
            "sample mean {}",
            series.sample_mean()
        );
    }

    #[test]
    fn markov2_nonzero_fraction_near_stationary() {
        let spec = GeneratorSpec::Markov2 { p01: 0.3, p10: 0.3 };
        let mut stream = RandomStream::from_seed(102);
        let n = 100_000;
        let (series, path) = generate(&spec, n, &mut stream).unwrap();
        assert!(path.values().iter().all(|&m| m == 0.5));
        let frac = series.values().iter().filter(|&&v| v != 0.0).count() as f64 / n as f64;
        // The chain is positively autocorrelated; inflate the binomial
        // variance by (1 + rho) / (1 - rho) with rho = 1 - p01 - p10.
        let rho: f64 = 0.4;
        let se = (0.25 * (1.0 + rho) / (1.0 - rho) / n as f64).sqrt();
        assert!((frac - 0.5).abs() < 3.0 * se, "fraction {frac}");
    }

    #[test]
    fn markov2_autocorrelation_sign_follows_transition_sum() {
        let mut stream = RandomStream::from_seed(103);
        let streaky = GeneratorSpec::Markov2 { p01: 0.3, p10: 0.3 };
        let (series, _) = generate(&streaky, 100_000, &mut stream).unwrap();
        assert!(lag1_autocorrelation(series.values()) > 0.0);

        let alternating = GeneratorSpec::Markov2 { p01: 0.7, p10: 0.7 };
        let (series, _) = generate(&alternating, 100_000, &mut stream).unwrap();
        assert!(lag1_autocorrelation(series.values()) < 0.0);
    }

    #[test]
    fn regular_intermittent_is_exactly_periodic() {
        let spec = GeneratorSpec::RegularIntermittent {
            period: 4,
            size: 2.0,
        };
        let mut stream = RandomStream::from_seed(104);
        let (series, path) = generate(&spec, 12, &mut stream).unwrap();
        let expected = [0.0, 0.0, 0.0, 2.0, 0.0, 0.0, 0.0, 2.0, 0.0, 0.0, 0.0, 2.0];
        assert_eq!(series.values(), expected);
        assert!(path.values().iter().all(|&m| m == 0.5));
    }

    #[test]
    fn regular_period_one_is_constant() {
        let spec = GeneratorSpec::RegularIntermittent {
            period: 1,
            size: 1.0,
        };
        let mut stream = RandomStream::from_seed(105);
        let (series, path) = generate(&spec, 20, &mut stream).unwrap();
        assert!(series.values().iter().all(|&v| v == 1.0));
        assert!(path.values().iter().all(|&m| m == 1.0));
    }

    #[test]
    fn analytic_means() {
        let spec = GeneratorSpec::BernoulliLogarithmic { p0: 0.5, ell: 0.9 };
        assert!((spec.analytic_mean(1) - 1.9543).abs() < 1e-4);
        assert_eq!(spec.analytic_mean(1), spec.analytic_mean(999));

        let spec = GeneratorSpec::Markov2 { p01: 0.3, p10: 0.3 };
        assert_eq!(spec.analytic_mean(17), 0.5);

        let spec = GeneratorSpec::BernoulliGeometricSize {
            p0: 0.2,
            size_p: 0.4,
        };
        assert!((spec.analytic_mean(1) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn obsolescence_profiles_decay_to_zero() {
        let linear = GeneratorSpec::Obsolescence {
            p0: 0.4,
            ell: 0.5,
            profile: ObsolescenceProfile::LinearToZero { end: 11 },
        };
        assert!((linear.analytic_mean(1) - 0.4 * log_mean(0.5)).abs() < 1e-12);
        // halfway through the profile, half the initial probability
        assert!((linear.analytic_mean(6) - 0.2 * log_mean(0.5)).abs() < 1e-12);
        assert_eq!(linear.analytic_mean(11), 0.0);
        assert_eq!(linear.analytic_mean(50), 0.0);

        let mut stream = RandomStream::from_seed(108);
        let (series, path) = generate(&linear, 40, &mut stream).unwrap();
        assert!(series.values()[10..].iter().all(|&v| v == 0.0));
        assert!(path.values()[10..].iter().all(|&m| m == 0.0));
        for w in path.values()[..10].windows(2) {
            assert!(w[1] < w[0], "linear profile must decline");
        }

        let abrupt = GeneratorSpec::Obsolescence {
            p0: 0.4,
            ell: 0.5,
            profile: ObsolescenceProfile::AbruptToZero { change: 5 },
        };
        let mut stream = RandomStream::from_seed(106);
        let (series, path) = generate(&abrupt, 30, &mut stream).unwrap();
        assert!(series.values()[4..].iter().all(|&v| v == 0.0));
        assert!(path.values()[4..].iter().all(|&m| m == 0.0));
        assert!(path.values()[..4].iter().all(|&m| m > 0.0));
    }

    #[test]
    fn invalid_specs_rejected() {
        assert!(generate(
            &GeneratorSpec::BernoulliLogarithmic { p0: 0.0, ell: 0.5 },
            10,
            &mut RandomStream::from_seed(1),
        )
        .is_err());
        assert!(GeneratorSpec::Markov2 { p01: 1.0, p10: 0.3 }
            .validate()
            .is_err());
        assert!(GeneratorSpec::RegularIntermittent {
            period: 0,
            size: 1.0
        }
        .validate()
        .is_err());
        assert!(GeneratorSpec::Obsolescence {
            p0: 0.5,
            ell: 0.5,
            profile: ObsolescenceProfile::LinearToZero { end: 1 },
        }
        .validate()
        .is_err());
        let good = GeneratorSpec::BernoulliLogarithmic { p0: 0.2, ell: 0.5 };
        assert!(generate(&good, 0, &mut RandomStream::from_seed(1)).is_err());
    }

    #[test]
    fn demand_series_rejects_bad_values() {
        assert!(DemandSeries::new(alloc::vec![]).is_err());
        assert!(DemandSeries::new(alloc::vec![1.0, -0.5]).is_err());
        assert!(DemandSeries::new(alloc::vec![f64::NAN]).is_err());
        assert!(DemandSeries::new(alloc::vec![0.0, 2.0]).is_ok());
    }
}
