//! Intermittent-demand forecasting toolkit.
//!
//! The crate bundles everything needed to compare forecasters on sparse
//! demand series: seeded samplers for the demand-size and interval
//! distributions ([`rng`]), artificial demand generators paired with their
//! true process mean ([`demand`]), streaming one-step-ahead forecasters
//! ([`forecast`]), the catalogue of forecast error measures together with
//! their mean-based variants ([`measures`]), process-mean estimators for
//! series with an unknown generator ([`mean_est`]), and a grid-search
//! experiment harness that ranks forecasters per measure ([`experiment`]).
//!
//! The crate is `no_std`-compatible (enable the `libm` feature and disable
//! `std`); all computation is pure and allocation only goes through `alloc`.
//!
//! ```
//! use demandcast::demand::{generate, GeneratorSpec};
//! use demandcast::forecast::{run_forecaster, Method};
//! use demandcast::measures::{evaluate, EvalContext, MeasureId};
//! use demandcast::RandomStream;
//!
//! # fn main() -> Result<(), Box<dyn std::error::Error>> {
//! let spec = GeneratorSpec::BernoulliLogarithmic { p0: 0.2, ell: 0.001 };
//! let mut stream = RandomStream::from_seed(7);
//! let (series, mean_path) = generate(&spec, 1_000, &mut stream)?;
//!
//! let trace = run_forecaster(
//!     Method::Croston { alpha: 0.1, beta: 0.1 },
//!     &[],
//!     series.values(),
//! )?;
//!
//! let mut ctx = EvalContext::new(series.values(), trace.values());
//! ctx.mean_path = Some(mean_path.values());
//! let mmae = evaluate("mMAE".parse::<MeasureId>()?, &ctx)?;
//! assert!(mmae.defined().is_some());
//! # Ok(())
//! # }
//! ```

#![cfg_attr(not(feature = "std"), no_std)]
#![forbid(unsafe_code)]

#[cfg(all(not(feature = "std"), not(feature = "libm")))]
compile_error!("demandcast needs either the `std` feature (default) or `libm`");

extern crate alloc;

pub mod demand;
pub mod experiment;
pub mod forecast;
mod math;
pub mod mean_est;
pub mod measures;
pub mod rng;

pub use demand::{DemandSeries, GeneratorSpec, MeanPath, ObsolescenceProfile, Provenance};
pub use experiment::{AxiomVerdict, ExperimentReport, ExperimentSpec, MeasureReport};
pub use forecast::{ForecastTrace, Method, MethodKind};
pub use mean_est::MeanEstimatorSpec;
pub use measures::{BaseMeasure, MeasureId, MeasureValue, Target, UndefinedReason};
pub use rng::RandomStream;
