use std::fmt;
use std::path::PathBuf;

use identities::IdentityName;
use polygons::{Family, FlowPair};
use relations::RelationLabel;
use serde::{Deserialize, Serialize};

use crate::CliError;

pub const SCHEMA: u32 = 1;

/// Everything that determines a run. The file form is JSON.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunConfig {
    pub schema: u32,
    pub command: Command,
    pub n: NRange,
    pub flows: FlowBounds,
    /// Total tensor entries allowed per contraction.
    pub budget: usize,
    pub json: bool,
    pub output: Option<PathBuf>,
    /// Worker threads; `None` uses the rayon default. Never affects the report.
    pub jobs: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NRange {
    pub min: u32,
    pub max: u32,
}

impl NRange {
    pub fn single(n: u32) -> Self {
        Self { min: n, max: n }
    }

    pub fn iter(self) -> impl Iterator<Item = u32> {
        self.min..=self.max
    }
}

/// Either explicit flows or bounds for sweeping over canonical flows.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlowBounds {
    pub a: Option<Vec<i64>>,
    pub b: Option<Vec<i64>>,
    pub max_k: usize,
    pub max_entry: i64,
}

impl FlowBounds {
    pub fn sweep(max_k: usize, max_entry: i64) -> Self {
        Self {
            a: None,
            b: None,
            max_k,
            max_entry,
        }
    }

    /// The explicit flow pair, if one was given.
    pub fn explicit(&self) -> Result<Option<FlowPair>, CliError> {
        match (&self.a, &self.b) {
            (None, None) => Ok(None),
            (Some(a), Some(b)) => FlowPair::new(a.clone(), b.clone())
                .map(Some)
                .map_err(|e| CliError::Usage(e.to_string())),
            _ => Err(CliError::Usage("--a and --b must be given together".into())),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "subcommand", rename_all = "kebab-case")]
pub enum Command {
    Dgt { family: Family, l: i64 },
    Relations { space: Space },
    Verify { inductive: bool, space: Option<Space> },
    RepCheck { suite: Suite },
    Identities { name: Option<IdentityName> },
    Evaluate { what: Evaluation },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Dgt { .. } => "dgt",
            Command::Relations { .. } => "relations",
            Command::Verify { .. } => "verify",
            Command::RepCheck { .. } => "rep-check",
            Command::Identities { .. } => "identities",
            Command::Evaluate { .. } => "evaluate",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Space {
    Ss,
    #[value(name = "ssprime", alias = "ss-prime")]
    Ssprime,
    Apr,
    Aqr,
}

impl From<Space> for RelationLabel {
    fn from(s: Space) -> Self {
        match s {
            Space::Ss => RelationLabel::SS,
            Space::Ssprime => RelationLabel::SSPrime,
            Space::Apr => RelationLabel::APR,
            Space::Aqr => RelationLabel::AQR,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Kernel,
    Ih,
    Loops,
    Braid,
    Square,
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Kernel => "kernel",
            Suite::Ih => "ih",
            Suite::Loops => "loops",
            Suite::Braid => "braid",
            Suite::Square => "square",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Evaluation {
    Circle { l: u32 },
    Bigon { k: u32, l: u32 },
}

fn binom(n: u32, k: u32) -> u128 {
    (0..k).fold(1u128, |c, i| c * u128::from(n - i) / u128::from(i + 1))
}

impl RunConfig {
    pub fn new(command: Command, n: NRange, flows: FlowBounds) -> Self {
        Self {
            schema: SCHEMA,
            command,
            n,
            flows,
            budget: reporacle::DEFAULT_BUDGET,
            json: false,
            output: None,
            jobs: None,
        }
    }

    /// The part of the config that determines the report: output path and
    /// thread count are dropped.
    pub fn report_key(&self) -> RunConfig {
        RunConfig {
            output: None,
            jobs: None,
            ..self.clone()
        }
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if self.schema != SCHEMA {
            return Err(CliError::Usage(format!("unsupported schema {}, expected {SCHEMA}", self.schema)));
        }
        if self.n.min > self.n.max {
            return Err(CliError::Usage(format!("empty n range {}..={}", self.n.min, self.n.max)));
        }
        if self.jobs == Some(0) {
            return Err(CliError::Usage("--jobs must be positive".into()));
        }
        if self.flows.max_entry < 0 {
            return Err(CliError::Usage("--max-entry must be nonnegative".into()));
        }
        let explicit = self.flows.explicit()?;
        match &self.command {
            Command::Dgt { .. } if explicit.is_none() => {
                return Err(CliError::Usage("dgt needs --a and --b".into()));
            }
            Command::Relations { .. } if explicit.is_none() => {
                return Err(CliError::Usage("relations needs --a and --b".into()));
            }
            Command::Dgt { .. } | Command::Relations { .. } if self.n.min != self.n.max => {
                return Err(CliError::Usage(format!("{} needs a single --n", self.command.name())));
            }
            Command::Verify { inductive: false, .. } => {
                return Err(CliError::Usage("verify currently supports only --inductive".into()));
            }
            Command::Verify { space: Some(_), .. } if explicit.is_none() => {
                return Err(CliError::Usage("--space needs --a and --b".into()));
            }
            Command::Evaluate { what } => {
                let bad = match *what {
                    Evaluation::Circle { l } => l > self.n.max,
                    Evaluation::Bigon { k, l } => k > l || l > self.n.max,
                };
                if bad {
                    return Err(CliError::Usage(format!("labels out of range for n = {}", self.n.max)));
                }
            }
            _ => {}
        }
        if let Command::RepCheck { suite: Suite::Kernel | Suite::Square } = self.command {
            // worst boundary: 2k edges, each labelled at most max_entry
            let k = explicit.as_ref().map_or(self.flows.max_k, FlowPair::k);
            let n = self.n.max;
            let top = u32::try_from(self.flows.max_entry).unwrap_or(u32::MAX).min(n);
            let widest = (0..=top).map(|a| binom(n, a)).max().unwrap_or(1);
            let needed = widest.saturating_pow(2 * k as u32);
            if needed > self.budget as u128 {
                return Err(CliError::Budget {
                    needed: usize::try_from(needed).unwrap_or(usize::MAX),
                    budget: self.budget,
                });
            }
        }
        Ok(())
    }
}
