//! Support code for the `pathpair` binary: graph family specs, argument
//! parsing helpers, JSON reports and the census runner.

pub mod census;
pub mod family;
pub mod report;

use std::path::{Path, PathBuf};

use num_rational::BigRational;
use pathpair_core::caps::CapExceeded;
use pathpair_core::constructions::ConstructionError;
use pathpair_core::graph::{GraphError, Vertex, VertexSet};
use pathpair_core::io::ParseError;
use pathpair_core::lemma::LemmaError;
use pathpair_core::router::RouteError;
use pathpair_core::solver::SolverError;
use pathpair_core::verifier::VerifyError;
use thiserror::Error;

/// Process exit status.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Exit {
    Ok = 0,
    Counterexample = 1,
    Usage = 2,
    Exceeded = 3,
}

impl Exit {
    /// Swaps `Ok` and `Counterexample`, for runs on negative fixtures.
    pub fn expecting_failure(self) -> Exit {
        match self {
            Exit::Ok => Exit::Counterexample,
            Exit::Counterexample => Exit::Ok,
            other => other,
        }
    }

    /// Combined status of several results: a counterexample outranks an
    /// exceeded budget, which outranks success.
    pub fn merge(self, other: Exit) -> Exit {
        match (self, other) {
            (Exit::Usage, _) | (_, Exit::Usage) => Exit::Usage,
            (Exit::Counterexample, _) | (_, Exit::Counterexample) => Exit::Counterexample,
            (Exit::Exceeded, _) | (_, Exit::Exceeded) => Exit::Exceeded,
            _ => Exit::Ok,
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: ParseError },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error(transparent)]
    Route(#[from] RouteError),
    #[error(transparent)]
    Solver(#[from] SolverError),
    #[error(transparent)]
    Verify(#[from] VerifyError),
    #[error(transparent)]
    Lemma(#[from] LemmaError),
    #[error(transparent)]
    Cap(#[from] CapExceeded),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("thread pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
}

impl CliError {
    pub fn exit(&self) -> Exit {
        match self {
            CliError::Cap(_)
            | CliError::Verify(VerifyError::Cap(_))
            | CliError::Lemma(LemmaError::Cap(_)) => Exit::Exceeded,
            _ => Exit::Usage,
        }
    }
}

pub fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn load<T>(path: &Path, parse: impl Fn(&str) -> Result<T, ParseError>) -> Result<T, CliError> {
    parse(&read_file(path)?).map_err(|source| CliError::Parse {
        path: path.to_path_buf(),
        source,
    })
}

/// `"0,3,5"`; the empty string is the empty list.
pub fn parse_vertex_list(s: &str) -> Result<Vec<Vertex>, CliError> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse()
                .map_err(|_| CliError::Usage(format!("bad vertex `{t}` in list `{s}`")))
        })
        .collect()
}

pub fn parse_vertex_set(n: usize, s: &str) -> Result<VertexSet, CliError> {
    Ok(VertexSet::within(n, parse_vertex_list(s)?)?)
}

/// `"1/16"`, `"3"`.
pub fn parse_ratio(s: &str) -> Result<BigRational, CliError> {
    s.trim()
        .parse()
        .map_err(|_| CliError::Usage(format!("bad rational `{s}`")))
}
