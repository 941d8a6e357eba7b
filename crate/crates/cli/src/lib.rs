//! `webcalc`: batch front end for building polygon webs, branching them,
//! generating relation spaces and running the verification suites.
//!
//! A run is fully described by a [`RunConfig`]. Reports are JSON with a
//! `"schema": 1` field and depend only on the config, never on the number
//! of worker threads.

mod args;
mod cache;
mod commands;
mod config;
pub mod suites;
pub mod sweep;

use serde::Serialize;

pub use args::{parse_args, Cli, Invocation};
pub use config::{Command, Evaluation, FlowBounds, NRange, RunConfig, Space, Suite, SCHEMA};

/// Environment variable naming a directory for cached reports.
pub const CACHE_ENV: &str = "WEBCALC_CACHE_DIR";

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("refused: needs {needed} tensor entries, budget is {budget}")]
    Budget { needed: usize, budget: usize },
    #[error("{0}")]
    Failed(String),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Budget { .. } => 3,
            CliError::Failed(_) | CliError::Io(_) => 1,
        }
    }
}

impl From<reporacle::OracleError> for CliError {
    fn from(e: reporacle::OracleError) -> Self {
        match e {
            reporacle::OracleError::BudgetExceeded { needed, budget } => CliError::Budget { needed, budget },
            other => CliError::Failed(other.to_string()),
        }
    }
}

impl From<relations::RelationError> for CliError {
    fn from(e: relations::RelationError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<branching::BranchError> for CliError {
    fn from(e: branching::BranchError) -> Self {
        CliError::Usage(e.to_string())
    }
}

/// What a command produced before it is wrapped into a report.
#[derive(Debug, Default)]
pub struct Body {
    pub cases: usize,
    pub failures: usize,
    pub results: serde_json::Value,
    pub text: Vec<String>,
}

/// A finished run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, serde::Deserialize)]
pub struct Outcome {
    pub passed: bool,
    pub json: String,
    pub text: String,
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        if self.passed {
            0
        } else {
            1
        }
    }

    /// The report in the format the config asked for.
    pub fn rendered(&self, config: &RunConfig) -> &str {
        if config.json {
            &self.json
        } else {
            &self.text
        }
    }
}

#[derive(Serialize)]
struct Envelope<'a> {
    schema: u32,
    command: &'static str,
    config: &'a RunConfig,
    passed: bool,
    cases: usize,
    failures: usize,
    results: &'a serde_json::Value,
}

/// Runs `config`, reading and filling the report cache when `CACHE_ENV` is set.
pub fn run(config: &RunConfig) -> Result<Outcome, CliError> {
    config.validate()?;
    let dir = std::env::var_os(CACHE_ENV).map(std::path::PathBuf::from);
    let key = config.report_key();
    if let Some(dir) = &dir {
        if let Some(hit) = cache::load(dir, &key) {
            return Ok(hit);
        }
    }
    let body = match config.jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build()
            .map_err(|e| CliError::Failed(e.to_string()))?
            .install(|| commands::execute(config))?,
        None => commands::execute(config)?,
    };
    let passed = body.failures == 0;
    let env = Envelope {
        schema: SCHEMA,
        command: config.command.name(),
        config: &key,
        passed,
        cases: body.cases,
        failures: body.failures,
        results: &body.results,
    };
    let mut json = serde_json::to_string_pretty(&env).map_err(|e| CliError::Failed(e.to_string()))?;
    json.push('\n');
    let mut text = body.text.join("\n");
    text.push('\n');
    let out = Outcome { passed, json, text };
    if let Some(dir) = &dir {
        cache::store(dir, &key, &out)?;
    }
    Ok(out)
}
