//! Command-line front end: tabulate Tracy-Widom distributions, run PNG and
//! matrix-ensemble Monte Carlo, follow Dyson trajectories, and compare
//! empirical output against reference tables.
//!
//! Exit codes: 0 success, 1 usage or validation error, 2 numeric failure.

use clap::{Parser, Subcommand};
use kpz_lab::pointfield::{sample_poisson, Region};
use kpz_lab::png::{droplet_height, flat_height, rescale_droplet, rescale_flat};
use kpz_lab::rmt::{top_eigenvalue_path, EnsembleKind, SpectrumSample};
use kpz_lab::seed::Seed;
use kpz_lab::stats::{ComparisonReport, EmpiricalDist};
use kpz_lab::tw::{DistTable, Method};
use kpz_lab::{rmt, Error};
use rayon::prelude::*;
use std::collections::HashMap;
use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser, Debug)]
#[command(name = "kpzlab", version, about = "growth-model and random-matrix laboratory")]
struct Cli {
    /// Flat key=value file supplying defaults; explicit flags win.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Base RNG seed; replicas use per-replica streams.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker thread count (0 = all cores). Output is thread-count independent.
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    /// Output path; standard output when omitted.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Tabulate a Tracy-Widom CDF on a uniform grid.
    Tw {
        #[arg(long)]
        beta: Option<u8>,
        #[arg(long, allow_hyphen_values = true)]
        smin: Option<f64>,
        #[arg(long, allow_hyphen_values = true)]
        smax: Option<f64>,
        #[arg(long)]
        step: Option<f64>,
        #[arg(long)]
        method: Option<String>,
    },
    /// Sample rescaled PNG surface heights.
    Png {
        /// droplet or flat
        #[arg(long)]
        geometry: Option<String>,
        /// growth time T
        #[arg(long)]
        time: Option<f64>,
        #[arg(long)]
        samples: Option<u64>,
    },
    /// Sample rescaled largest eigenvalues of a Gaussian ensemble.
    Rmt {
        /// gue or goe
        #[arg(long)]
        ensemble: Option<String>,
        /// matrix dimension N
        #[arg(long)]
        size: Option<usize>,
        #[arg(long)]
        samples: Option<u64>,
    },
    /// Follow the rescaled top eigenvalue along Dyson trajectories.
    Dyson {
        #[arg(long)]
        size: Option<usize>,
        /// comma-separated observation times tau
        #[arg(long, allow_hyphen_values = true)]
        taus: Option<String>,
        #[arg(long)]
        paths: Option<u64>,
        /// ensemble for the trajectory, gue or goe
        #[arg(long)]
        ensemble: Option<String>,
    },
    /// Compare an empirical sample file against a tabulated CDF.
    Compare {
        #[arg(long)]
        empirical: Option<PathBuf>,
        #[arg(long)]
        reference: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            // clap handles --help/--version with a zero-status "error"
            if e.use_stderr() {
                eprintln!("{e}");
                return ExitCode::from(1);
            }
            print!("{e}");
            return ExitCode::SUCCESS;
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("kpzlab: {e}");
            match e {
                Error::Numeric(_) | Error::Io(_) => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}

/// Flat key=value defaults; later flags take precedence via `pick`.
fn load_config(path: &Option<PathBuf>) -> kpz_lab::Result<HashMap<String, String>> {
    let mut map = HashMap::new();
    let Some(path) = path else { return Ok(map) };
    let text = fs::read_to_string(path)?;
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (k, v) = line.split_once('=').ok_or_else(|| {
            Error::InvalidInput(format!("config line {}: expected key=value", lineno + 1))
        })?;
        map.insert(k.trim().to_string(), v.trim().to_string());
    }
    Ok(map)
}

/// Flag value if given, else config value under `key`, else an error.
fn pick<T: std::str::FromStr>(
    flag: Option<T>,
    cfg: &mut HashMap<String, String>,
    key: &str,
) -> kpz_lab::Result<T> {
    if let Some(v) = flag {
        cfg.remove(key);
        return Ok(v);
    }
    let raw = cfg
        .remove(key)
        .ok_or_else(|| Error::InvalidParameter(format!("missing required parameter '{key}'")))?;
    raw.parse()
        .map_err(|_| Error::InvalidParameter(format!("bad value '{raw}' for '{key}'")))
}

fn reject_unknown(cfg: &HashMap<String, String>) -> kpz_lab::Result<()> {
    if let Some(k) = cfg.keys().next() {
        return Err(Error::InvalidParameter(format!("unknown config key '{k}'")));
    }
    Ok(())
}

fn provenance(seed: u64) -> String {
    let args: Vec<String> = std::env::args().skip(1).collect();
    format!(
        "# kpzlab {} | args: {} | seed: {}",
        env!("CARGO_PKG_VERSION"),
        args.join(" "),
        seed
    )
}

fn open_out(path: &Option<PathBuf>) -> kpz_lab::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(fs::File::create(p)?),
        None => Box::new(std::io::stdout().lock()),
    })
}

fn run(cli: Cli) -> kpz_lab::Result<()> {
    let mut cfg = load_config(&cli.config)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.threads)
        .build()
        .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))?;
    let head = provenance(cli.seed);
    let mut out = open_out(&cli.out)?;
    match cli.cmd {
        Cmd::Tw { beta, smin, smax, step, method } => {
            let beta = pick(beta, &mut cfg, "beta")?;
            let smin: f64 = pick(smin, &mut cfg, "smin")?;
            let smax: f64 = pick(smax, &mut cfg, "smax")?;
            let step: f64 = pick(step, &mut cfg, "step")?;
            let method: Method = pick(method, &mut cfg, "method")?.parse()?;
            reject_unknown(&cfg)?;
            if !(beta == 1 || beta == 2) {
                return Err(Error::InvalidParameter(format!("beta must be 1 or 2, got {beta}")));
            }
            let table = DistTable::build(beta, method, smin, smax, step)?;
            writeln!(out, "{head}")?;
            table.write_csv(&mut out)?;
        }
        Cmd::Png { geometry, time, samples } => {
            let geometry: String = pick(geometry, &mut cfg, "geometry")?;
            let t: f64 = pick(time, &mut cfg, "time")?;
            let samples: u64 = pick(samples, &mut cfg, "samples")?;
            reject_unknown(&cfg)?;
            if !(t > 0.0) || samples == 0 {
                return Err(Error::InvalidParameter(
                    "need time > 0 and samples >= 1".into(),
                ));
            }
            let flat = match geometry.as_str() {
                "droplet" => false,
                "flat" => true,
                other => {
                    return Err(Error::InvalidParameter(format!(
                        "unknown geometry '{other}', expected droplet or flat"
                    )))
                }
            };
            let rows: kpz_lab::Result<Vec<f64>> = pool.install(|| {
                (0..samples)
                    .into_par_iter()
                    .map(|i| {
                        let seed = Seed::new(cli.seed).with_stream(i);
                        if flat {
                            let field = sample_poisson(Region::Triangle { t }, 1.0, seed)?;
                            Ok(rescale_flat(flat_height(t, &field), t))
                        } else {
                            let field =
                                sample_poisson(Region::Rectangle { a: t, b: t }, 1.0, seed)?;
                            let h = droplet_height(t, 0.0, &field);
                            Ok(rescale_droplet(h, t, 0.0)?.1)
                        }
                    })
                    .collect()
            });
            writeln!(out, "{head}")?;
            writeln!(out, "seed,s")?;
            for (i, s) in rows?.iter().enumerate() {
                writeln!(out, "{},{:.16e}", i, s)?;
            }
        }
        Cmd::Rmt { ensemble, size, samples } => {
            let kind: EnsembleKind = pick(ensemble, &mut cfg, "ensemble")?.parse()?;
            let n: usize = pick(size, &mut cfg, "size")?;
            let samples: u64 = pick(samples, &mut cfg, "samples")?;
            reject_unknown(&cfg)?;
            if n == 0 || samples == 0 {
                return Err(Error::InvalidParameter("need size >= 1 and samples >= 1".into()));
            }
            let rows: kpz_lab::Result<Vec<f64>> = pool.install(|| {
                (0..samples)
                    .into_par_iter()
                    .map(|i| {
                        let seed = Seed::new(cli.seed).with_stream(i);
                        let m = rmt::sample_matrix(kind, n, seed);
                        Ok(SpectrumSample::from_matrix(&m)?.edge_value)
                    })
                    .collect()
            });
            writeln!(out, "{head}")?;
            writeln!(out, "seed,edge_value")?;
            for (i, v) in rows?.iter().enumerate() {
                writeln!(out, "{},{:.16e}", i, v)?;
            }
        }
        Cmd::Dyson { size, taus, paths, ensemble } => {
            let n: usize = pick(size, &mut cfg, "size")?;
            let taus_raw: String = pick(taus, &mut cfg, "taus")?;
            let paths: u64 = pick(paths, &mut cfg, "paths")?;
            let kind: EnsembleKind = match ensemble {
                Some(e) => e.parse()?,
                None => cfg
                    .remove("ensemble")
                    .map(|e| e.parse())
                    .transpose()?
                    .unwrap_or(EnsembleKind::Gue),
            };
            reject_unknown(&cfg)?;
            let taus: Vec<f64> = taus_raw
                .split(',')
                .map(|p| {
                    p.trim().parse().map_err(|_| {
                        Error::InvalidParameter(format!("bad tau value '{}'", p.trim()))
                    })
                })
                .collect::<kpz_lab::Result<_>>()?;
            if n == 0 || paths == 0 {
                return Err(Error::InvalidParameter("need size >= 1 and paths >= 1".into()));
            }
            let rows: kpz_lab::Result<Vec<Vec<f64>>> = pool.install(|| {
                (0..paths)
                    .into_par_iter()
                    .map(|p| {
                        let seed = Seed::new(cli.seed).with_stream(p);
                        Ok(top_eigenvalue_path(kind, n, &taus, seed)?.values)
                    })
                    .collect()
            });
            writeln!(out, "{head}")?;
            writeln!(out, "path_id,tau,edge_value")?;
            for (p, values) in rows?.iter().enumerate() {
                for (tau, v) in taus.iter().zip(values) {
                    writeln!(out, "{},{:.16e},{:.16e}", p, tau, v)?;
                }
            }
        }
        Cmd::Compare { empirical, reference } => {
            let emp_path: PathBuf = pick(empirical, &mut cfg, "empirical")?;
            let ref_path: PathBuf = pick(reference, &mut cfg, "reference")?;
            reject_unknown(&cfg)?;
            let emp = read_empirical(&emp_path)?;
            let (table, tag) = read_reference(&ref_path)?;
            let report = ComparisonReport::build(&emp, &table, tag)?;
            writeln!(out, "{head}")?;
            writeln!(out, "{}", report.to_json())?;
        }
    }
    Ok(())
}

/// Batch sample file: `#` comments, a `seed,<name>` header, numeric rows.
fn read_empirical(path: &PathBuf) -> kpz_lab::Result<EmpiricalDist> {
    let text = fs::read_to_string(path)?;
    let mut lines = text.lines().filter(|l| !l.trim_start().starts_with('#'));
    let header = lines
        .next()
        .ok_or_else(|| Error::InvalidInput(format!("{}: empty file", path.display())))?;
    let cols: Vec<&str> = header.split(',').collect();
    if cols.len() != 2 || cols[0] != "seed" {
        return Err(Error::InvalidInput(format!(
            "{}: expected header 'seed,<value>', found '{header}'",
            path.display()
        )));
    }
    let mut values = Vec::new();
    for line in lines {
        if line.trim().is_empty() {
            continue;
        }
        let v = line
            .split(',')
            .nth(1)
            .and_then(|f| f.parse::<f64>().ok())
            .ok_or_else(|| Error::InvalidInput(format!("{}: bad row '{line}'", path.display())))?;
        values.push(v);
    }
    EmpiricalDist::new(values, path.display().to_string())
}

/// Tabulated CDF file as written by the `tw` subcommand.
fn read_reference(path: &PathBuf) -> kpz_lab::Result<(DistTable, String)> {
    let text = fs::read_to_string(path)?;
    let mut tag = path.display().to_string();
    let mut beta = 0u8;
    let mut method = Method::Painleve;
    for line in text.lines().filter(|l| l.trim_start().starts_with('#')) {
        if let Some(rest) = line.trim_start().strip_prefix("# tracy-widom ") {
            tag = format!("tracy-widom {rest}");
            for part in rest.split_whitespace() {
                if let Some(b) = part.strip_prefix("beta=") {
                    beta = b.parse().unwrap_or(0);
                }
                if let Some(m) = part.strip_prefix("method=") {
                    method = m.parse().unwrap_or(Method::Painleve);
                }
            }
        }
    }
    let mut lines = text.lines().filter(|l| !l.trim_start().starts_with('#'));
    let header = lines
        .next()
        .ok_or_else(|| Error::InvalidInput(format!("{}: empty file", path.display())))?;
    if header != "s,F" {
        return Err(Error::InvalidInput(format!(
            "{}: expected header 's,F', found '{header}'",
            path.display()
        )));
    }
    let mut s = Vec::new();
    let mut f = Vec::new();
    for line in lines {
        if line.trim().is_empty() {
            continue;
        }
        let mut parts = line.split(',');
        let (a, b) = (parts.next(), parts.next());
        match (
            a.and_then(|x| x.parse::<f64>().ok()),
            b.and_then(|x| x.parse::<f64>().ok()),
        ) {
            (Some(a), Some(b)) => {
                s.push(a);
                f.push(b);
            }
            _ => {
                return Err(Error::InvalidInput(format!(
                    "{}: bad row '{line}'",
                    path.display()
                )))
            }
        }
    }
    if s.len() < 2 || s.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidInput(format!(
            "{}: need at least two strictly increasing grid points",
            path.display()
        )));
    }
    Ok((DistTable { beta, method, s, f }, tag))
}
