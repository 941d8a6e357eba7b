use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use identities::IdentityName;
use polygons::{parse_flow_vector, Family};

use crate::config::{Command, Evaluation, FlowBounds, NRange, RunConfig, Space, Suite};
use crate::CliError;

#[derive(Parser, Debug)]
#[command(name = "webcalc", version, about = "Polygon webs for U_q(sl_n): relations, branching and verification")]
pub struct Cli {
    #[command(subcommand)]
    command: Sub,
    /// Print the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Write the report here instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,
    /// Worker threads.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Tensor entries allowed per contraction.
    #[arg(long, global = true)]
    budget: Option<usize>,
    /// Print the resolved run config as JSON and exit.
    #[arg(long, global = true)]
    dump_config: bool,
}

#[derive(Subcommand, Debug)]
enum Sub {
    /// Branch a single polygon web to level n - 1.
    Dgt {
        #[command(flatten)]
        web: WebArgs,
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long, allow_hyphen_values = true)]
        l: i64,
    },
    /// Print a spanning set of a relation space.
    Relations {
        #[command(flatten)]
        web: WebArgs,
        #[arg(long, value_enum)]
        space: Space,
    },
    /// Check relation spaces by branching.
    Verify {
        /// Certify every dGT entry in the lower-level relation span.
        #[arg(long)]
        inductive: bool,
        #[command(flatten)]
        range: RangeArgs,
        #[command(flatten)]
        flows: SweepArgs,
        #[arg(long, value_enum)]
        space: Option<Space>,
    },
    /// Run a representation-theoretic check suite.
    RepCheck {
        #[arg(long, value_enum)]
        suite: Suite,
        #[command(flatten)]
        range: RangeArgs,
        #[command(flatten)]
        flows: SweepArgs,
    },
    /// Sweep the q-binomial identities.
    Identities {
        #[arg(long)]
        name: Option<IdentityName>,
        #[arg(long, default_value_t = 5)]
        max_n: u32,
        #[arg(long, default_value_t = 4)]
        max_entry: i64,
    },
    /// Evaluate closed webs.
    Evaluate {
        #[command(subcommand)]
        what: EvalSub,
    },
    /// Run a saved config file.
    Run { config: PathBuf },
}

#[derive(Subcommand, Debug)]
enum EvalSub {
    /// A loop labelled l.
    Circle {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        l: u32,
    },
    /// The bigon on V_k with total label l.
    Bigon {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        l: u32,
    },
}

#[derive(Args, Debug)]
struct WebArgs {
    #[arg(long)]
    n: u32,
    /// Comma-separated; empty for closed loops.
    #[arg(long, allow_hyphen_values = true)]
    a: String,
    #[arg(long, allow_hyphen_values = true)]
    b: String,
}

#[derive(Args, Debug)]
struct RangeArgs {
    /// A single level; overrides --min-n and --max-n.
    #[arg(long)]
    n: Option<u32>,
    #[arg(long, default_value_t = 1)]
    min_n: u32,
    #[arg(long)]
    max_n: Option<u32>,
}

#[derive(Args, Debug)]
struct SweepArgs {
    #[arg(long, allow_hyphen_values = true)]
    a: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    b: Option<String>,
    #[arg(long)]
    max_k: Option<usize>,
    #[arg(long)]
    max_entry: Option<i64>,
}

fn parse_family(s: &str) -> Result<Family, String> {
    match s {
        "P" | "p" => Ok(Family::P),
        "Q" | "q" => Ok(Family::Q),
        _ => Err(format!("expected P or Q, got {s:?}")),
    }
}

fn vector(s: &str) -> Result<Vec<i64>, CliError> {
    parse_flow_vector(s).map_err(|e| CliError::Usage(format!("bad flow vector {s:?}: {e}")))
}

impl RangeArgs {
    fn resolve(&self) -> Result<NRange, CliError> {
        match (self.n, self.max_n) {
            (Some(n), _) => Ok(NRange::single(n)),
            (None, Some(max)) => Ok(NRange { min: self.min_n, max }),
            (None, None) => Err(CliError::Usage("give --n or --max-n".into())),
        }
    }
}

impl SweepArgs {
    fn resolve(&self, max_k: usize, max_entry: i64) -> Result<FlowBounds, CliError> {
        let a = self.a.as_deref().map(vector).transpose()?;
        let b = self.b.as_deref().map(vector).transpose()?;
        Ok(FlowBounds {
            a,
            b,
            max_k: self.max_k.unwrap_or(max_k),
            max_entry: self.max_entry.unwrap_or(max_entry),
        })
    }
}

impl WebArgs {
    fn resolve(&self) -> Result<(NRange, FlowBounds), CliError> {
        let (a, b) = (vector(&self.a)?, vector(&self.b)?);
        let k = a.len();
        Ok((
            NRange::single(self.n),
            FlowBounds {
                a: Some(a),
                b: Some(b),
                max_k: k,
                max_entry: 0,
            },
        ))
    }
}

/// A parsed command line: the config to run, and whether to only print it.
#[derive(Debug)]
pub struct Invocation {
    pub config: RunConfig,
    pub dump_config: bool,
}

/// Parses a command line. Clap errors (including `--help`) come back as
/// `Err(Ok(e))`, config errors as `Err(Err(e))`.
pub fn parse_args<I, T>(args: I) -> Result<Invocation, Result<clap::Error, CliError>>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = Cli::try_parse_from(args).map_err(Ok)?;
    cli.into_invocation().map_err(Err)
}

impl Cli {
    fn into_invocation(self) -> Result<Invocation, CliError> {
        let (command, n, flows) = match self.command {
            Sub::Run { config } => {
                let bytes = std::fs::read(&config)?;
                let mut c: RunConfig = serde_json::from_slice(&bytes)
                    .map_err(|e| CliError::Usage(format!("{}: {e}", config.display())))?;
                if self.json {
                    c.json = true;
                }
                if self.output.is_some() {
                    c.output = self.output;
                }
                if self.jobs.is_some() {
                    c.jobs = self.jobs;
                }
                if let Some(b) = self.budget {
                    c.budget = b;
                }
                return Ok(Invocation {
                    config: c,
                    dump_config: self.dump_config,
                });
            }
            Sub::Dgt { web, family, l } => {
                let (n, f) = web.resolve()?;
                (Command::Dgt { family, l }, n, f)
            }
            Sub::Relations { web, space } => {
                let (n, f) = web.resolve()?;
                (Command::Relations { space }, n, f)
            }
            Sub::Verify {
                inductive,
                range,
                flows,
                space,
            } => (
                Command::Verify { inductive, space },
                range.resolve()?,
                flows.resolve(3, 2)?,
            ),
            Sub::RepCheck { suite, range, flows } => {
                (Command::RepCheck { suite }, range.resolve()?, flows.resolve(2, 2)?)
            }
            Sub::Identities { name, max_n, max_entry } => (
                Command::Identities { name },
                NRange { min: 1, max: max_n },
                FlowBounds::sweep(3, max_entry),
            ),
            Sub::Evaluate { what } => match what {
                EvalSub::Circle { n, l } => (
                    Command::Evaluate {
                        what: Evaluation::Circle { l },
                    },
                    NRange::single(n),
                    FlowBounds::sweep(0, 0),
                ),
                EvalSub::Bigon { n, k, l } => (
                    Command::Evaluate {
                        what: Evaluation::Bigon { k, l },
                    },
                    NRange::single(n),
                    FlowBounds::sweep(0, 0),
                ),
            },
        };
        let mut config = RunConfig::new(command, n, flows);
        config.json = self.json;
        config.output = self.output;
        config.jobs = self.jobs;
        if let Some(b) = self.budget {
            config.budget = b;
        }
        Ok(Invocation {
            config,
            dump_config: self.dump_config,
        })
    }
}
