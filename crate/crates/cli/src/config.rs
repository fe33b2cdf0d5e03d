use std::path::{Path, PathBuf};

use anyhow::{bail, Context};
use serde::{Deserialize, Serialize};

use crate::UsageError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum AmbientKind {
    /// negative cluster category `C_{-w}(A_n)`
    Orbit,
    /// bounded derived category of `A_n`
    Derived,
}

/// A list written either as one space-separated string or as an array.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
enum ListField {
    One(String),
    Many(Vec<String>),
}

impl ListField {
    fn into_vec(self) -> Vec<String> {
        match self {
            ListField::One(s) => s.split_whitespace().map(str::to_owned).collect(),
            ListField::Many(v) => v,
        }
    }
}

/// Contents of a `--config` file. Every key is optional.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    ambient: Option<AmbientKind>,
    w: Option<usize>,
    n: Option<usize>,
    prime: Option<u32>,
    seed: Option<u64>,
    radius: Option<i32>,
    bound: Option<u32>,
    sms: Option<ListField>,
    fclass: Option<ListField>,
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Serialize)]
pub struct RunConfig {
    pub ambient: AmbientKind,
    pub w: usize,
    pub n: usize,
    pub prime: u32,
    pub seed: u64,
    /// derived ambient: shifts `-radius..=radius` are enumerated
    pub radius: i32,
    /// monoid ball degree
    pub bound: u32,
    pub sms: Option<Vec<String>>,
    pub fclass: Option<Vec<String>>,
    #[serde(skip)]
    pub out: PathBuf,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            ambient: AmbientKind::Orbit,
            w: 3,
            n: 4,
            prime: 2,
            seed: 0,
            radius: 2,
            bound: 4,
            sms: None,
            fclass: None,
            out: PathBuf::from("."),
        }
    }
}

/// Command-line values; `None` leaves the config file or default in place.
#[derive(Debug, Default)]
pub struct Overrides {
    pub ambient: Option<AmbientKind>,
    pub w: Option<usize>,
    pub n: Option<usize>,
    pub prime: Option<u32>,
    pub seed: Option<u64>,
    pub radius: Option<i32>,
    pub bound: Option<u32>,
    pub sms: Option<Vec<String>>,
    pub fclass: Option<Vec<String>>,
    pub out: Option<PathBuf>,
}

fn split_tokens(v: Vec<String>) -> Vec<String> {
    v.iter()
        .flat_map(|s| s.split_whitespace().map(str::to_owned))
        .collect()
}

impl RunConfig {
    pub fn load(path: Option<&Path>, cli: Overrides) -> anyhow::Result<Self> {
        let file: FileConfig = match path {
            Some(p) => {
                let text = std::fs::read_to_string(p)
                    .with_context(|| format!("reading config {}", p.display()))
                    .map_err(|e| UsageError(format!("{e:#}")))?;
                toml::from_str(&text)
                    .map_err(|e| UsageError(format!("config {}: {e}", p.display())))?
            }
            None => FileConfig::default(),
        };
        let d = RunConfig::default();
        let n_default = match cli.ambient.or(file.ambient).unwrap_or(d.ambient) {
            AmbientKind::Orbit => d.n,
            AmbientKind::Derived => 3,
        };
        let cfg = RunConfig {
            ambient: cli.ambient.or(file.ambient).unwrap_or(d.ambient),
            w: cli.w.or(file.w).unwrap_or(d.w),
            n: cli.n.or(file.n).unwrap_or(n_default),
            prime: cli.prime.or(file.prime).unwrap_or(d.prime),
            seed: cli.seed.or(file.seed).unwrap_or(d.seed),
            radius: cli.radius.or(file.radius).unwrap_or(d.radius),
            bound: cli.bound.or(file.bound).unwrap_or(d.bound),
            sms: cli
                .sms
                .map(split_tokens)
                .or(file.sms.map(ListField::into_vec)),
            fclass: cli
                .fclass
                .map(split_tokens)
                .or(file.fclass.map(ListField::into_vec)),
            out: cli.out.or(file.out).unwrap_or(d.out),
        };
        cfg.validate()?;
        Ok(cfg)
    }

    fn validate(&self) -> anyhow::Result<()> {
        if self.w == 0 || self.n == 0 {
            bail!(UsageError("w and n must be positive".into()));
        }
        if self.radius <= 0 || self.bound == 0 {
            bail!(UsageError("bounds must be positive".into()));
        }
        if !negcat_core::linalg::is_prime(self.prime) {
            bail!(UsageError(format!("{} is not a prime", self.prime)));
        }
        Ok(())
    }
}
