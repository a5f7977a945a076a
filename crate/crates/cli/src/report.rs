//! JSON report envelope shared by every subcommand.

use std::path::Path;
use std::time::Instant;

use serde::Serialize;

use crate::{write_file, CliError};

pub const SCHEMA: u32 = 1;

#[derive(Debug, Serialize)]
pub struct Report<'a, T: Serialize> {
    pub schema: u32,
    pub command: &'a str,
    /// Input graph in the edge-list format.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph: Option<String>,
    #[serde(flatten)]
    pub body: T,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

impl<'a, T: Serialize> Report<'a, T> {
    pub fn new(command: &'a str, graph: Option<String>, body: T) -> Self {
        Report {
            schema: SCHEMA,
            command,
            graph,
            body,
            elapsed_ms: None,
        }
    }

    pub fn timed(mut self, timer: &Timer) -> Self {
        self.elapsed_ms = timer.ms();
        self
    }
}

pub fn to_json<T: Serialize>(value: &T) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

/// Writes the report when a path was given.
pub fn save<T: Serialize>(path: Option<&Path>, value: &T) -> Result<(), CliError> {
    match path {
        Some(p) => write_file(p, &to_json(value)?),
        None => Ok(()),
    }
}

/// Wall-clock timer that reports nothing unless enabled, so reports stay
/// byte-identical by default.
#[derive(Clone, Copy, Debug)]
pub struct Timer(Option<Instant>);

impl Timer {
    pub fn start(enabled: bool) -> Self {
        Timer(enabled.then(Instant::now))
    }

    pub fn ms(&self) -> Option<f64> {
        self.0.map(|t| t.elapsed().as_secs_f64() * 1e3)
    }
}
