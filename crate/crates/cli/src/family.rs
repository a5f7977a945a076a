//! Named graph families and the `name:args` spec syntax used by `census`.
//!
//! Each argument is a number or an inclusive range `a..b`; a spec expands
//! to the product of its arguments, e.g. `complete-bipartite:2..3,3` gives
//! K_{2,3} and K_{3,3}.

use std::fmt;

use pathpair_core::constructions::{complete, complete_bipartite, k_t_q, star, triangle_hub};
use pathpair_core::graph::{SimpleGraph, Vertex};
use pathpair_core::lemma::random::{random_planar_graph, rng_from_seed};

use crate::CliError;

pub const NAMES: [&str; 7] = [
    "star",
    "complete",
    "complete-bipartite",
    "ktq",
    "triangle-hub",
    "cycle",
    "random-planar",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Star(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    Ktq(usize, usize),
    TriangleHub(usize),
    Cycle(usize),
    /// n vertices, each triangulation edge kept with probability 1/2.
    RandomPlanar(usize),
}

impl Family {
    pub fn from_parts(name: &str, args: &[usize]) -> Result<Family, CliError> {
        let f = match (name, args) {
            ("star", [m]) => Family::Star(*m),
            ("complete", [t]) => Family::Complete(*t),
            ("complete-bipartite", [m, n]) => Family::CompleteBipartite(*m, *n),
            ("ktq", [t, q]) => Family::Ktq(*t, *q),
            ("triangle-hub", [k]) => Family::TriangleHub(*k),
            ("cycle", [n]) => Family::Cycle(*n),
            ("random-planar", [n]) => Family::RandomPlanar(*n),
            _ if NAMES.contains(&name) => {
                return Err(CliError::Usage(format!(
                    "wrong number of parameters for `{name}`: {args:?}"
                )))
            }
            _ => {
                return Err(CliError::Usage(format!(
                    "unknown family `{name}` (known: {})",
                    NAMES.join(", ")
                )))
            }
        };
        Ok(f)
    }

    /// The graph and, for triangle-hub graphs, its role table.
    pub fn build(&self, seed: u64) -> Result<(SimpleGraph, Vec<(Vertex, String)>), CliError> {
        let g = match *self {
            Family::Star(m) => star(m)?,
            Family::Complete(t) => complete(t),
            Family::CompleteBipartite(m, n) => complete_bipartite(m, n),
            Family::Ktq(t, q) => k_t_q(t, q)?,
            Family::TriangleHub(k) => {
                let th = triangle_hub(k)?;
                return Ok((th.graph().clone(), th.role_table()));
            }
            Family::Cycle(n) => {
                if n < 3 {
                    return Err(CliError::Usage(format!(
                        "cycle needs at least 3 vertices, got {n}"
                    )));
                }
                SimpleGraph::new(n, (0..n).map(|i| (i, (i + 1) % n)))?
            }
            Family::RandomPlanar(n) => random_planar_graph(n, 0.5, &mut rng_from_seed(seed)),
        };
        Ok((g, Vec::new()))
    }

    pub fn is_random(&self) -> bool {
        matches!(self, Family::RandomPlanar(_))
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Star(m) => write!(f, "star:{m}"),
            Family::Complete(t) => write!(f, "complete:{t}"),
            Family::CompleteBipartite(m, n) => write!(f, "complete-bipartite:{m},{n}"),
            Family::Ktq(t, q) => write!(f, "ktq:{t},{q}"),
            Family::TriangleHub(k) => write!(f, "triangle-hub:{k}"),
            Family::Cycle(n) => write!(f, "cycle:{n}"),
            Family::RandomPlanar(n) => write!(f, "random-planar:{n}"),
        }
    }
}

fn parse_arg(tok: &str) -> Result<Vec<usize>, CliError> {
    let bad = || CliError::Usage(format!("bad family parameter `{tok}`"));
    match tok.split_once("..") {
        Some((a, b)) => {
            let a: usize = a.trim().parse().map_err(|_| bad())?;
            let b: usize = b.trim().parse().map_err(|_| bad())?;
            if a > b {
                return Err(bad());
            }
            Ok((a..=b).collect())
        }
        None => Ok(vec![tok.trim().parse().map_err(|_| bad())?]),
    }
}

/// Expands `name:args` into concrete family members, in lexicographic
/// order of the argument tuples.
pub fn expand(spec: &str) -> Result<Vec<Family>, CliError> {
    let (name, args) = spec.split_once(':').unwrap_or((spec, ""));
    let lists: Vec<Vec<usize>> = args
        .split(',')
        .filter(|t| !t.trim().is_empty())
        .map(parse_arg)
        .collect::<Result<_, _>>()?;
    let mut tuples: Vec<Vec<usize>> = vec![Vec::new()];
    for list in &lists {
        tuples = tuples
            .iter()
            .flat_map(|t| list.iter().map(move |&x| [t.clone(), vec![x]].concat()))
            .collect();
    }
    tuples
        .iter()
        .map(|t| Family::from_parts(name.trim(), t))
        .collect()
}
