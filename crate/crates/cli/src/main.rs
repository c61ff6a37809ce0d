use std::fs;
use std::io::{self, BufReader, Write};
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use demandcast::demand::{DemandSeries, MeanPath, Provenance};
use demandcast::experiment::{self, run_experiment, ExperimentReport, ExperimentSpec};
use demandcast::measures::{BaseMeasure, EvalContext};
use demandcast::{mean_est, MeanEstimatorSpec, RandomStream};
use demandcast_cli::render::{self, OutputFormat};
use demandcast_cli::{config, csvio, DEFAULT_SEED};

#[derive(Parser)]
#[command(
    name = "demandcast",
    version,
    about = "Intermittent-demand forecasting experiments: generate series, score forecasts, rank forecasters"
)]
struct Cli {
    /// Master seed for demand generation
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = OutFlag::Text)]
    out: OutFlag,

    /// Process-mean estimator: series-mean | window:K | regression | known
    #[arg(long = "mean-est", global = true)]
    mean_est: Option<String>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutFlag {
    Text,
    Csv,
}

impl From<OutFlag> for OutputFormat {
    fn from(flag: OutFlag) -> Self {
        match flag {
            OutFlag::Text => OutputFormat::Text,
            OutFlag::Csv => OutputFormat::Csv,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Emit a demand series as CSV (`t,demand[,mean]`)
    Generate(GenerateArgs),
    /// Score a forecast trace against a series
    Evaluate(EvaluateArgs),
    /// Run a full experiment described by a config file
    Rank(RankArgs),
    /// Regenerate one of the canonical result tables (1-5)
    Reproduce(ReproduceArgs),
}

#[derive(Args)]
struct GenerateArgs {
    /// Generator kind: bernoulli-logarithmic | bernoulli-geometric-size |
    /// regular-intermittent | markov2 | obsolescence
    #[arg(long)]
    kind: String,
    /// Nonzero-demand probability
    #[arg(long)]
    p0: Option<f64>,
    /// Logarithmic size parameter
    #[arg(long)]
    ell: Option<f64>,
    /// Geometric size parameter
    #[arg(long = "size-p")]
    size_p: Option<f64>,
    /// Spacing of regular demand
    #[arg(long)]
    period: Option<usize>,
    /// Size of regular demand (default 1)
    #[arg(long)]
    size: Option<f64>,
    /// Markov transition probability 0 -> 1
    #[arg(long)]
    p01: Option<f64>,
    /// Markov transition probability 1 -> 0
    #[arg(long)]
    p10: Option<f64>,
    /// Obsolescence profile: linear-to-zero | abrupt-to-zero
    #[arg(long)]
    profile: Option<String>,
    /// Period at which the obsolescence profile reaches zero
    #[arg(long = "profile-period")]
    profile_period: Option<usize>,
    /// Number of periods to generate
    #[arg(long)]
    len: usize,
    /// Include the analytic mean column
    #[arg(long)]
    with_mean: bool,
    /// Write to a file instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct EvaluateArgs {
    /// Demand series CSV (`t,demand[,mean]`)
    #[arg(long)]
    series: PathBuf,
    /// Forecast trace CSV (`t,forecast`)
    #[arg(long)]
    forecasts: PathBuf,
    /// Baseline forecast CSV; defaults to the random walk over the series
    #[arg(long)]
    baseline: Option<PathBuf>,
    /// Comma-separated measure names (MAE, mMAE, iMAPE, mGMRAE, ...)
    #[arg(long, value_delimiter = ',', required = true)]
    measures: Vec<String>,
}

#[derive(Args)]
struct RankArgs {
    /// Experiment config file (flat TOML)
    #[arg(long)]
    config: PathBuf,
}

#[derive(Args)]
struct ReproduceArgs {
    /// Table number, 1 through 5
    #[arg(long)]
    table: u8,
    /// Rerun with this many derived master seeds and report ranking stability
    #[arg(long)]
    replications: Option<u64>,
}

fn main() {
    match run() {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            std::process::exit(1);
        }
    }
}

fn run() -> Result<i32> {
    let cli = Cli::parse();
    let format = OutputFormat::from(cli.out);
    let mean_est_override = cli
        .mean_est
        .as_deref()
        .map(config::parse_mean_est)
        .transpose()?;
    match cli.command {
        Command::Generate(args) => generate(args, cli.seed),
        Command::Evaluate(args) => evaluate(args, mean_est_override, format),
        Command::Rank(args) => rank(args, cli.seed, mean_est_override, format),
        Command::Reproduce(args) => reproduce(args, cli.seed, mean_est_override, format),
    }
}

fn generate(args: GenerateArgs, seed: Option<u64>) -> Result<i32> {
    let params = config::GeneratorParams {
        kind: args.kind,
        p0: args.p0,
        ell: args.ell,
        size_p: args.size_p,
        period: args.period,
        size: args.size,
        p01: args.p01,
        p10: args.p10,
        profile: args.profile,
        profile_period: args.profile_period,
    };
    let spec = params.build()?;
    let mut stream = RandomStream::from_seed(seed.unwrap_or(DEFAULT_SEED));
    let (series, mean) = demandcast::demand::generate(&spec, args.len, &mut stream)?;
    let mean_column = args.with_mean.then(|| mean.values());
    match args.output {
        Some(path) => {
            let mut file = fs::File::create(&path)
                .with_context(|| format!("cannot create {}", path.display()))?;
            csvio::write_series(&mut file, series.values(), mean_column)?;
        }
        None => {
            let stdout = io::stdout();
            csvio::write_series(&mut stdout.lock(), series.values(), mean_column)?;
        }
    }
    Ok(0)
}

fn open(path: &PathBuf) -> Result<BufReader<fs::File>> {
    Ok(BufReader::new(fs::File::open(path).with_context(|| {
        format!("cannot open {}", path.display())
    })?))
}

fn evaluate(
    args: EvaluateArgs,
    mean_est_override: Option<MeanEstimatorSpec>,
    format: OutputFormat,
) -> Result<i32> {
    let measures = config::parse_measures(&args.measures)?;
    let (demands, file_means) = csvio::read_series(open(&args.series)?)?;
    let forecasts = csvio::read_trace(open(&args.forecasts)?)?;
    if forecasts.len() != demands.len() {
        bail!(
            "series has {} periods but forecasts have {}",
            demands.len(),
            forecasts.len()
        );
    }
    let baseline = match &args.baseline {
        Some(path) => {
            let b = csvio::read_trace(open(path)?)?;
            if b.len() != demands.len() {
                bail!("baseline forecasts must match the series length");
            }
            b
        }
        None => {
            // random walk over the series itself
            let mut rw = vec![0.0];
            rw.extend_from_slice(&demands[..demands.len() - 1]);
            rw
        }
    };

    let estimator = mean_est_override.unwrap_or(MeanEstimatorSpec::SeriesMean);
    let series = DemandSeries::new(demands.clone())?;
    let known = file_means
        .map(|m| MeanPath::new(m, Provenance::Analytic))
        .transpose()?;
    let needs_mean = measures
        .iter()
        .any(|m| m.target == demandcast::measures::Target::Mean);
    let mean_path = if needs_mean {
        if estimator == MeanEstimatorSpec::Known && known.is_none() {
            bail!("--mean-est known needs a series file with a mean column");
        }
        Some(mean_est::estimate_mean_path(
            &estimator,
            &series,
            known.as_ref(),
        )?)
    } else {
        None
    };

    let ctx = EvalContext {
        demands: &demands,
        forecasts: &forecasts,
        mean_path: mean_path.as_ref().map(|p| p.values()),
        baseline_forecasts: Some(&baseline),
        insample: Some(&demands),
    };

    let mut undefined = Vec::new();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    if format == OutputFormat::Csv {
        writeln!(out, "measure,value")?;
    }
    for &id in &measures {
        if id.base == BaseMeasure::Pbt {
            bail!("PBt scores several methods jointly; use the rank subcommand");
        }
        let value = demandcast::measures::evaluate(id, &ctx)?;
        if !value.is_defined() {
            undefined.push(id);
        }
        match format {
            OutputFormat::Text => writeln!(
                out,
                "{:<10}{:>22}",
                id.to_string(),
                render::value_string(&value)
            )?,
            OutputFormat::Csv => writeln!(out, "{},{}", id, render::value_string(&value))?,
        }
    }
    drop(out);

    if !undefined.is_empty() {
        let names: Vec<String> = undefined.iter().map(|m| m.to_string()).collect();
        eprintln!(
            "requested measure(s) undefined on this input: {}",
            names.join(", ")
        );
        return Ok(2);
    }
    Ok(0)
}

/// Print a report and flag measures that are undefined for every forecaster.
fn finish_report(
    spec: &ExperimentSpec,
    report: &ExperimentReport,
    rendered: String,
) -> Result<i32> {
    print!("{rendered}");
    let dead = render::all_undefined_measures(report);
    if dead.is_empty() {
        return Ok(0);
    }
    let names: Vec<String> = dead.iter().map(|m| m.measure.to_string()).collect();
    eprintln!(
        "measure(s) undefined for every forecaster on {}: {}",
        render::describe_generator(&spec.generator),
        names.join(", ")
    );
    Ok(2)
}

fn rank(
    args: RankArgs,
    seed: Option<u64>,
    mean_est_override: Option<MeanEstimatorSpec>,
    format: OutputFormat,
) -> Result<i32> {
    let text = fs::read_to_string(&args.config)
        .with_context(|| format!("cannot read {}", args.config.display()))?;
    let spec =
        config::ConfigFile::from_toml(&text)?.build(seed, mean_est_override, DEFAULT_SEED)?;
    let report = run_experiment(&spec)?;
    let rendered = match format {
        OutputFormat::Text => {
            let title = format!(
                "Experiment: {} (seed {})",
                render::describe_generator(&spec.generator),
                spec.master_seed
            );
            render::render_report_text(&title, &report)
        }
        OutputFormat::Csv => render::render_report_csv(&report),
    };
    finish_report(&spec, &report, rendered)
}

fn reproduce(
    args: ReproduceArgs,
    seed: Option<u64>,
    mean_est_override: Option<MeanEstimatorSpec>,
    format: OutputFormat,
) -> Result<i32> {
    let master_seed = seed.unwrap_or(DEFAULT_SEED);
    let mut spec = experiment::table_spec(args.table, master_seed)?;
    if let Some(estimator) = mean_est_override {
        spec.mean_estimator = estimator;
    }
    let report = run_experiment(&spec)?;
    let mut rendered = match format {
        OutputFormat::Text => {
            let title = format!(
                "Table {}: {} (seed {})",
                args.table,
                render::describe_generator(&spec.generator),
                master_seed
            );
            render::render_canonical_table(&title, &report)
        }
        OutputFormat::Csv => render::render_report_csv(&report),
    };

    if let Some(replications) = args.replications {
        if replications == 0 {
            bail!("--replications must be at least 1");
        }
        let mut reports = Vec::with_capacity(replications as usize);
        for r in 0..replications {
            let mut rep_spec = spec.clone();
            rep_spec.master_seed = experiment::replication_seed(master_seed, r);
            reports.push(run_experiment(&rep_spec)?);
        }
        let counts = render::stability_counts(&reports);
        rendered.push_str(&render::render_stability(&counts, replications, format));
    }

    finish_report(&spec, &report, rendered)
}
