//! Command-line flags, the optional key=value config file, and the merged
//! command configuration.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use curvlab::catalog::{FamilyId, FamilySpec};
use curvlab::verify::Appendix;
use curvlab::{ConnectionSpec, MetricParams};

use crate::UsageError;

#[derive(Parser, Debug)]
#[command(
    name = "curvlab",
    version,
    about = "Exact curvature of Gauduchon connections on six-dimensional Lie algebras"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub opts: Flags,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Family catalog.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Dump every nonzero curvature component.
    Curvature,
    /// Kähler-like test with witnesses.
    CheckKl,
    /// Flatness test.
    CheckFlat,
    /// Kähler, balanced and pluriclosed flags of a metric.
    Classify,
    /// Exact verification suites.
    Verify {
        #[command(subcommand)]
        suite: VerifySuite,
    },
    /// Invariant Ricci flow.
    Flow {
        #[command(subcommand)]
        action: FlowAction,
    },
}

#[derive(Subcommand, Debug, Clone)]
pub enum CatalogAction {
    /// List families, parameters, Lie algebras and special-metric loci.
    List,
}

#[derive(Subcommand, Debug, Clone)]
pub enum VerifySuite {
    /// Closed-form component tables A, B and C.
    Appendix {
        /// One of A, B, C; all three when omitted.
        which: Option<String>,
    },
    /// Kähler-like scoreboard and conjecture sweep.
    Theorems,
}

#[derive(Subcommand, Debug, Clone)]
pub enum FlowAction {
    /// Integrate dg/dt = −Ric from the given metric.
    Run,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args, Debug, Default, Clone)]
pub struct Flags {
    /// Family id, e.g. Np, Ni, Si, sl2c.
    #[arg(long, global = true)]
    pub family: Option<String>,
    /// Structure parameters, e.g. rho=1,lambda=0,D=i.
    #[arg(long = "set", global = true)]
    pub set: Option<String>,
    /// Metric parameters, e.g. r2=1,s2=1,t2=1,u=1/2*i.
    #[arg(long, global = true)]
    pub metric: Option<String>,
    /// Connection: preset name or eps=a/b,rho=c/d.
    #[arg(long, global = true)]
    pub spec: Option<String>,
    #[arg(long, value_enum, global = true)]
    pub format: Option<Format>,
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Sampled points per case.
    #[arg(long, global = true)]
    pub points: Option<usize>,
    #[arg(long, short = 'o', global = true)]
    pub output: Option<PathBuf>,
    #[arg(long, global = true)]
    pub horizon: Option<f64>,
    #[arg(long, global = true)]
    pub step: Option<f64>,
    /// Flat key=value file; command-line flags take precedence.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
}

impl Flags {
    /// Fills unset flags from `key = value` lines.
    pub fn merge_file(&mut self, path: &Path) -> Result<(), UsageError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| UsageError(format!("cannot read config {}: {e}", path.display())))?;
        self.merge_str(&text)
    }

    pub fn merge_str(&mut self, text: &str) -> Result<(), UsageError> {
        for (n, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| UsageError(format!("config line {}: expected key = value, got `{line}`", n + 1)))?;
            let (k, v) = (k.trim(), v.trim().to_string());
            let num = |what: &str| UsageError(format!("config key `{k}`: invalid {what} `{v}`"));
            match k {
                "family" => fill(&mut self.family, v),
                "set" => fill(&mut self.set, v),
                "metric" => fill(&mut self.metric, v),
                "spec" => fill(&mut self.spec, v),
                "format" => {
                    let f = Format::from_str(&v, true).map_err(|_| num("format"))?;
                    fill(&mut self.format, f)
                }
                "seed" => fill(&mut self.seed, v.parse().map_err(|_| num("integer"))?),
                "points" => fill(&mut self.points, v.parse().map_err(|_| num("integer"))?),
                "output" => fill(&mut self.output, PathBuf::from(v)),
                "horizon" => fill(&mut self.horizon, v.parse().map_err(|_| num("number"))?),
                "step" => fill(&mut self.step, parse_step(&v).map_err(|_| num("number"))?),
                _ => return Err(UsageError(format!("unknown config key `{k}`"))),
            }
        }
        Ok(())
    }

    pub fn format(&self) -> Format {
        self.format.unwrap_or(Format::Text)
    }

    pub fn family(&self) -> Result<FamilySpec, UsageError> {
        let name = self.family.as_deref().ok_or_else(|| UsageError("--family is required".into()))?;
        let id: FamilyId = name.parse().map_err(|e| UsageError(format!("{e}")))?;
        FamilySpec::parse(id, self.set.as_deref().unwrap_or("")).map_err(|e| UsageError(e.to_string()))
    }

    pub fn metric(&self) -> Result<MetricParams, UsageError> {
        let text = self.metric.as_deref().unwrap_or("");
        let mut pairs = Vec::new();
        for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (k, v) = part
                .split_once('=')
                .ok_or_else(|| UsageError(format!("malformed metric assignment `{part}` (expected key=value)")))?;
            pairs.push((k.trim(), v.trim()));
        }
        let p = MetricParams::from_assignments(pairs).map_err(|e| UsageError(format!("--metric: {e}")))?;
        p.validate().map_err(|e| UsageError(e.to_string()))?;
        Ok(p)
    }

    pub fn spec(&self) -> Result<ConnectionSpec, UsageError> {
        let s = self.spec.as_deref().ok_or_else(|| UsageError("--spec is required".into()))?;
        s.parse().map_err(|e| UsageError(format!("--spec: {e}")))
    }

    pub fn appendix(which: &str) -> Result<Appendix, UsageError> {
        which.parse().map_err(|_| UsageError(format!("unknown appendix `{which}` (expected A, B or C)")))
    }
}

fn fill<T>(slot: &mut Option<T>, v: T) {
    if slot.is_none() {
        *slot = Some(v);
    }
}

/// Accepts decimals and fractions such as `1/100`.
pub fn parse_step(s: &str) -> Result<f64, ()> {
    match s.split_once('/') {
        Some((a, b)) => {
            let (a, b): (f64, f64) = (a.trim().parse().map_err(|_| ())?, b.trim().parse().map_err(|_| ())?);
            Ok(a / b)
        }
        None => s.trim().parse().map_err(|_| ()),
    }
}
