//! CSV formats for demand series and forecast traces.
//!
//! Series files carry a `t,demand` header with an optional third `mean`
//! column; traces carry `t,forecast`. Periods are 1-based, values use a
//! decimal point and no thousands separators.

use anyhow::{bail, Context, Result};
use std::io::{BufRead, Write};

/// Write a series, optionally with its mean path.
pub fn write_series(out: &mut impl Write, demands: &[f64], mean: Option<&[f64]>) -> Result<()> {
    match mean {
        Some(path) => {
            writeln!(out, "t,demand,mean")?;
            for (t, (d, m)) in demands.iter().zip(path).enumerate() {
                writeln!(out, "{},{},{}", t + 1, d, m)?;
            }
        }
        None => {
            writeln!(out, "t,demand")?;
            for (t, d) in demands.iter().enumerate() {
                writeln!(out, "{},{}", t + 1, d)?;
            }
        }
    }
    Ok(())
}

/// Write a forecast trace.
pub fn write_trace(out: &mut impl Write, forecasts: &[f64]) -> Result<()> {
    writeln!(out, "t,forecast")?;
    for (t, f) in forecasts.iter().enumerate() {
        writeln!(out, "{},{}", t + 1, f)?;
    }
    Ok(())
}

fn parse_value(field: &str, line_no: usize) -> Result<f64> {
    let value = field
        .trim()
        .parse::<f64>()
        .with_context(|| format!("line {line_no}: cannot parse '{field}' as a number"))?;
    if !value.is_finite() {
        bail!("line {line_no}: '{field}' is not a finite number");
    }
    Ok(value)
}

/// Read a series file; the mean column comes back when present.
pub fn read_series(input: impl BufRead) -> Result<(Vec<f64>, Option<Vec<f64>>)> {
    let mut lines = input.lines();
    let header = lines
        .next()
        .context("empty series file")?
        .context("cannot read series header")?;
    let with_mean = match header.trim() {
        "t,demand" => false,
        "t,demand,mean" => true,
        other => bail!("unexpected series header '{other}' (want t,demand[,mean])"),
    };
    let mut demands = Vec::new();
    let mut means = Vec::new();
    for (i, line) in lines.enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let line_no = i + 2;
        let fields: Vec<&str> = line.split(',').collect();
        let expected = if with_mean { 3 } else { 2 };
        if fields.len() != expected {
            bail!(
                "line {line_no}: expected {expected} fields, found {}",
                fields.len()
            );
        }
        demands.push(parse_value(fields[1], line_no)?);
        if with_mean {
            means.push(parse_value(fields[2], line_no)?);
        }
    }
    if demands.is_empty() {
        bail!("series file contains no rows");
    }
    Ok((demands, with_mean.then_some(means)))
}

/// Read a forecast trace file.
pub fn read_trace(input: impl BufRead) -> Result<Vec<f64>> {
    let mut lines = input.lines();
    let header = lines
        .next()
        .context("empty trace file")?
        .context("cannot read trace header")?;
    if header.trim() != "t,forecast" {
        bail!(
            "unexpected trace header '{}' (want t,forecast)",
            header.trim()
        );
    }
    let mut forecasts = Vec::new();
    for (i, line) in lines.enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let line_no = i + 2;
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 2 {
            bail!("line {line_no}: expected 2 fields, found {}", fields.len());
        }
        forecasts.push(parse_value(fields[1], line_no)?);
    }
    if forecasts.is_empty() {
        bail!("trace file contains no rows");
    }
    Ok(forecasts)
}
