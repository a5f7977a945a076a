//! Terminal pairings and the path systems that realize them.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{SimpleGraph, Vertex};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PairingError {
    #[error("pair ({0}, {0}) joins a vertex to itself")]
    DegeneratePair(Vertex),
    #[error("vertex {0} is a terminal of more than one pair")]
    RepeatedTerminal(Vertex),
    #[error("terminal {vertex} out of range (n = {n})")]
    TerminalOutOfRange { vertex: Vertex, n: usize },
    #[error("pairing covers {covered} of {n} vertices, not a full pairing")]
    NotFull { covered: usize, n: usize },
}

/// Disjoint terminal pairs. Pair order and orientation are kept as given so
/// that a [`PathSystem`] can be indexed against it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Pairing {
    pairs: Vec<(Vertex, Vertex)>,
}

impl Pairing {
    pub fn new(pairs: Vec<(Vertex, Vertex)>) -> Result<Self, PairingError> {
        let mut seen: Vec<Vertex> = Vec::with_capacity(pairs.len() * 2);
        for &(u, v) in &pairs {
            if u == v {
                return Err(PairingError::DegeneratePair(u));
            }
            seen.push(u);
            seen.push(v);
        }
        seen.sort_unstable();
        if let Some(w) = seen.windows(2).find(|w| w[0] == w[1]) {
            return Err(PairingError::RepeatedTerminal(w[0]));
        }
        Ok(Pairing { pairs })
    }

    pub fn pairs(&self) -> &[(Vertex, Vertex)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn terminals(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.pairs.iter().flat_map(|&(u, v)| [u, v])
    }

    /// Each pair as `(min, max)`, pairs sorted.
    pub fn canonical(&self) -> Pairing {
        let mut pairs: Vec<_> = self
            .pairs
            .iter()
            .map(|&(u, v)| (u.min(v), u.max(v)))
            .collect();
        pairs.sort_unstable();
        Pairing { pairs }
    }

    pub fn check_range(&self, n: usize) -> Result<(), PairingError> {
        match self.terminals().find(|&t| t >= n) {
            Some(t) => Err(PairingError::TerminalOutOfRange { vertex: t, n }),
            None => Ok(()),
        }
    }

    /// Full: every vertex covered when `n` is even, all but one when odd.
    pub fn is_full(&self, n: usize) -> bool {
        self.check_range(n).is_ok() && self.pairs.len() == n / 2
    }

    pub fn check_full(&self, n: usize) -> Result<(), PairingError> {
        self.check_range(n)?;
        if self.pairs.len() != n / 2 {
            return Err(PairingError::NotFull {
                covered: 2 * self.pairs.len(),
                n,
            });
        }
        Ok(())
    }

    /// Image under a vertex permutation, canonicalized.
    pub fn permuted(&self, perm: &[Vertex]) -> Pairing {
        Pairing {
            pairs: self
                .pairs
                .iter()
                .map(|&(u, v)| (perm[u], perm[v]))
                .collect(),
        }
        .canonical()
    }
}

impl fmt::Display for Pairing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.pairs.iter().map(|(u, v)| format!("{u}-{v}")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PathError {
    #[error("{paths} paths for {pairs} pairs")]
    CountMismatch { paths: usize, pairs: usize },
    #[error("path {index} does not join its pair ({expected_start}, {expected_end})")]
    WrongEndpoints {
        index: usize,
        expected_start: Vertex,
        expected_end: Vertex,
    },
    #[error("path {index} steps along non-edge {u} {v}")]
    NotAnEdge { index: usize, u: Vertex, v: Vertex },
    #[error("path {index} revisits vertex {vertex}")]
    RepeatedVertex { index: usize, vertex: Vertex },
    #[error("edge {u} {v} used by paths {first} and {second}")]
    SharedEdge {
        u: Vertex,
        v: Vertex,
        first: usize,
        second: usize,
    },
}

/// One vertex sequence per pair, same order as the pairing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct PathSystem {
    paths: Vec<Vec<Vertex>>,
}

impl PathSystem {
    pub fn new(paths: Vec<Vec<Vertex>>) -> Self {
        PathSystem { paths }
    }

    pub fn paths(&self) -> &[Vec<Vertex>] {
        &self.paths
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    /// Total number of edges used.
    pub fn total_length(&self) -> usize {
        self.paths.iter().map(|p| p.len().saturating_sub(1)).sum()
    }

    /// Checks every path invariant: endpoints, adjacency, simplicity and
    /// global edge-disjointness.
    pub fn verify(&self, g: &SimpleGraph, pairing: &Pairing) -> Result<(), PathError> {
        if self.paths.len() != pairing.len() {
            return Err(PathError::CountMismatch {
                paths: self.paths.len(),
                pairs: pairing.len(),
            });
        }
        let mut owner: Vec<Option<usize>> = vec![None; g.edge_count()];
        let mut seen = vec![usize::MAX; g.n()];
        for (index, (path, &(s, t))) in self.paths.iter().zip(pairing.pairs()).enumerate() {
            if path.first() != Some(&s) || path.last() != Some(&t) {
                return Err(PathError::WrongEndpoints {
                    index,
                    expected_start: s,
                    expected_end: t,
                });
            }
            for &v in path {
                if v >= g.n() {
                    return Err(PathError::NotAnEdge { index, u: v, v });
                }
                if seen[v] == index {
                    return Err(PathError::RepeatedVertex { index, vertex: v });
                }
                seen[v] = index;
            }
            for w in path.windows(2) {
                let (u, v) = (w[0], w[1]);
                let e = g
                    .edge_index(u, v)
                    .ok_or(PathError::NotAnEdge { index, u, v })?;
                if let Some(first) = owner[e] {
                    return Err(PathError::SharedEdge {
                        u: u.min(v),
                        v: u.max(v),
                        first,
                        second: index,
                    });
                }
                owner[e] = Some(index);
            }
        }
        Ok(())
    }
}

impl fmt::Display for PathSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for path in &self.paths {
            let parts: Vec<String> = path.iter().map(|v| v.to_string()).collect();
            writeln!(f, "{}", parts.join(" "))?;
        }
        Ok(())
    }
}
