//! Flat key-value experiment configuration (TOML) and generator parameter
//! assembly shared between config files and command-line flags.

use anyhow::{bail, Context, Result};
use demandcast::experiment::{ExperimentSpec, DEFAULT_EVAL_LEN, DEFAULT_GRID, DEFAULT_WARMUP_LEN};
use demandcast::{GeneratorSpec, MeanEstimatorSpec, MeasureId, MethodKind, ObsolescenceProfile};
use serde::Deserialize;

/// Flat generator parameters; exactly the fields relevant to `kind` may be
/// set.
#[derive(Clone, Debug, Default, Deserialize)]
pub struct GeneratorParams {
    pub kind: String,
    pub p0: Option<f64>,
    pub ell: Option<f64>,
    pub size_p: Option<f64>,
    pub period: Option<usize>,
    pub size: Option<f64>,
    pub p01: Option<f64>,
    pub p10: Option<f64>,
    pub profile: Option<String>,
    pub profile_period: Option<usize>,
}

impl GeneratorParams {
    pub fn build(&self) -> Result<GeneratorSpec> {
        let need = |field: Option<f64>, name: &str| {
            field.with_context(|| format!("generator '{}' needs '{name}'", self.kind))
        };
        let spec = match self.kind.as_str() {
            "bernoulli-logarithmic" => GeneratorSpec::BernoulliLogarithmic {
                p0: need(self.p0, "p0")?,
                ell: need(self.ell, "ell")?,
            },
            "bernoulli-geometric-size" => GeneratorSpec::BernoulliGeometricSize {
                p0: need(self.p0, "p0")?,
                size_p: need(self.size_p, "size_p")?,
            },
            "regular-intermittent" => GeneratorSpec::RegularIntermittent {
                period: self
                    .period
                    .context("generator 'regular-intermittent' needs 'period'")?,
                size: self.size.unwrap_or(1.0),
            },
            "markov2" => GeneratorSpec::Markov2 {
                p01: need(self.p01, "p01")?,
                p10: need(self.p10, "p10")?,
            },
            "obsolescence" => {
                let period = self
                    .profile_period
                    .context("generator 'obsolescence' needs 'profile_period'")?;
                let profile = match self.profile.as_deref() {
                    Some("linear-to-zero") => ObsolescenceProfile::LinearToZero { end: period },
                    Some("abrupt-to-zero") => ObsolescenceProfile::AbruptToZero { change: period },
                    Some(other) => {
                        bail!("unknown profile '{other}' (want linear-to-zero or abrupt-to-zero)")
                    }
                    None => bail!("generator 'obsolescence' needs 'profile'"),
                };
                GeneratorSpec::Obsolescence {
                    p0: need(self.p0, "p0")?,
                    ell: need(self.ell, "ell")?,
                    profile,
                }
            }
            other => bail!(
                "unknown generator kind '{other}' (want bernoulli-logarithmic, \
                 bernoulli-geometric-size, regular-intermittent, markov2, obsolescence)"
            ),
        };
        spec.validate()?;
        Ok(spec)
    }
}

/// A flat config file mirroring the experiment spec.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    // generator fields
    pub kind: String,
    pub p0: Option<f64>,
    pub ell: Option<f64>,
    pub size_p: Option<f64>,
    pub period: Option<usize>,
    pub size: Option<f64>,
    pub p01: Option<f64>,
    pub p10: Option<f64>,
    pub profile: Option<String>,
    pub profile_period: Option<usize>,
    // protocol fields
    pub warmup_len: Option<usize>,
    pub eval_len: Option<usize>,
    pub grid: Option<Vec<f64>>,
    pub measures: Option<Vec<String>>,
    pub forecasters: Option<Vec<String>>,
    pub mean_est: Option<String>,
    pub seed: Option<u64>,
}

impl ConfigFile {
    fn generator_params(&self) -> GeneratorParams {
        GeneratorParams {
            kind: self.kind.clone(),
            p0: self.p0,
            ell: self.ell,
            size_p: self.size_p,
            period: self.period,
            size: self.size,
            p01: self.p01,
            p10: self.p10,
            profile: self.profile.clone(),
            profile_period: self.profile_period,
        }
    }
}

pub fn parse_measures(names: &[String]) -> Result<Vec<MeasureId>> {
    names
        .iter()
        .map(|name| {
            name.parse::<MeasureId>()
                .with_context(|| format!("unknown measure '{name}'"))
        })
        .collect()
}

pub fn parse_forecasters(names: &[String]) -> Result<Vec<MethodKind>> {
    names
        .iter()
        .map(|name| {
            name.parse::<MethodKind>()
                .with_context(|| format!("unknown forecaster '{name}'"))
        })
        .collect()
}

pub fn parse_mean_est(text: &str) -> Result<MeanEstimatorSpec> {
    text.parse::<MeanEstimatorSpec>()
        .with_context(|| format!("invalid mean estimator '{text}'"))
}

impl ConfigFile {
    pub fn from_toml(text: &str) -> Result<Self> {
        toml::from_str(text).context("cannot parse config file")
    }

    /// Assemble the experiment spec, applying command-line overrides.
    pub fn build(
        &self,
        seed_override: Option<u64>,
        mean_est_override: Option<MeanEstimatorSpec>,
        default_seed: u64,
    ) -> Result<ExperimentSpec> {
        let measures = match &self.measures {
            Some(names) => parse_measures(names)?,
            None => demandcast::experiment::table_measures(),
        };
        let forecasters = match &self.forecasters {
            Some(names) => parse_forecasters(names)?,
            None => vec![
                MethodKind::Ses,
                MethodKind::Croston,
                MethodKind::RandomWalk,
                MethodKind::Zero,
            ],
        };
        let mean_estimator = match (mean_est_override, &self.mean_est) {
            (Some(spec), _) => spec,
            (None, Some(text)) => parse_mean_est(text)?,
            (None, None) => MeanEstimatorSpec::SeriesMean,
        };
        let spec = ExperimentSpec {
            generator: self.generator_params().build()?,
            warmup_len: self.warmup_len.unwrap_or(DEFAULT_WARMUP_LEN),
            eval_len: self.eval_len.unwrap_or(DEFAULT_EVAL_LEN),
            grid: self.grid.clone().unwrap_or_else(|| DEFAULT_GRID.to_vec()),
            measures,
            forecasters,
            mean_estimator,
            master_seed: seed_override.or(self.seed).unwrap_or(default_seed),
        };
        spec.validate()?;
        Ok(spec)
    }
}
