//! Undirected multigraphs with loops, multiedge distances and matching
//! contraction.

use std::cmp::Ordering;
use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{SimpleGraph, Vertex};

pub type MultiedgeId = usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MultigraphError {
    #[error("vertex {vertex} out of range (n = {n})")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("multiedge id {0} used twice")]
    DuplicateId(MultiedgeId),
    #[error("unknown multiedge id {0}")]
    UnknownId(MultiedgeId),
    #[error("distance of multiedge {0} to itself requested")]
    SameMultiedge(MultiedgeId),
    #[error("multiedges {0} and {1} share an endpoint, not a matching")]
    NotAMatching(MultiedgeId, MultiedgeId),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Multiedge {
    pub id: MultiedgeId,
    /// Endpoints with `u <= v`; `u == v` is a loop.
    pub u: Vertex,
    pub v: Vertex,
}

impl Multiedge {
    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }

    pub fn shares_endpoint(&self, other: &Multiedge) -> bool {
        self.u == other.u || self.u == other.v || self.v == other.u || self.v == other.v
    }
}

/// Distance between two multiedges: the length of a shortest path joining an
/// endpoint of one to an endpoint of the other.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum EdgeDistance {
    Finite(usize),
    Unreachable,
}

impl EdgeDistance {
    pub fn is_incident(self) -> bool {
        self == EdgeDistance::Finite(0)
    }

    /// Distance greater than one, unreachable included.
    pub fn is_far(self) -> bool {
        !matches!(self, EdgeDistance::Finite(0) | EdgeDistance::Finite(1))
    }
}

impl Ord for EdgeDistance {
    fn cmp(&self, other: &Self) -> Ordering {
        use EdgeDistance::*;
        match (self, other) {
            (Finite(a), Finite(b)) => a.cmp(b),
            (Finite(_), Unreachable) => Ordering::Less,
            (Unreachable, Finite(_)) => Ordering::Greater,
            (Unreachable, Unreachable) => Ordering::Equal,
        }
    }
}

impl PartialOrd for EdgeDistance {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for EdgeDistance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EdgeDistance::Finite(d) => write!(f, "{d}"),
            EdgeDistance::Unreachable => f.write_str("unreachable"),
        }
    }
}

/// Multiedges are kept sorted by id.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Multigraph {
    n: usize,
    edges: Vec<Multiedge>,
}

impl Multigraph {
    pub fn new<I>(n: usize, edges: I) -> Result<Self, MultigraphError>
    where
        I: IntoIterator<Item = (MultiedgeId, Vertex, Vertex)>,
    {
        let mut list = Vec::new();
        for (id, u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(MultigraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            list.push(Multiedge {
                id,
                u: u.min(v),
                v: u.max(v),
            });
        }
        list.sort_unstable_by_key(|e| e.id);
        if let Some(w) = list.windows(2).find(|w| w[0].id == w[1].id) {
            return Err(MultigraphError::DuplicateId(w[0].id));
        }
        Ok(Multigraph { n, edges: list })
    }

    /// Multiedges numbered `0..` in the given order.
    pub fn from_pairs<I>(n: usize, pairs: I) -> Result<Self, MultigraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        Self::new(
            n,
            pairs.into_iter().enumerate().map(|(i, (u, v))| (i, u, v)),
        )
    }

    /// One multiedge per edge, ids following the canonical edge order.
    pub fn from_simple(g: &SimpleGraph) -> Self {
        Self::from_pairs(g.n(), g.edges().iter().copied()).expect("simple graph is valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// M, the number of multiedges.
    pub fn multiedge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn multiedges(&self) -> &[Multiedge] {
        &self.edges
    }

    pub fn ids(&self) -> impl Iterator<Item = MultiedgeId> + '_ {
        self.edges.iter().map(|e| e.id)
    }

    pub fn multiedge(&self, id: MultiedgeId) -> Result<Multiedge, MultigraphError> {
        self.edges
            .binary_search_by_key(&id, |e| e.id)
            .map(|i| self.edges[i])
            .map_err(|_| MultigraphError::UnknownId(id))
    }

    /// Simple graph on the same vertices: loops dropped, parallels merged.
    pub fn underlying_simple(&self) -> SimpleGraph {
        SimpleGraph::from_edges_lossy(self.n, self.edges.iter().map(|e| (e.u, e.v)))
            .expect("endpoints are in range")
    }

    /// Number of multiedges joining `u` and `v` (loops when `u == v`).
    pub fn multiplicity(&self, u: Vertex, v: Vertex) -> usize {
        let key = (u.min(v), u.max(v));
        self.edges.iter().filter(|e| (e.u, e.v) == key).count()
    }

    pub fn distance_table(&self) -> DistanceTable {
        DistanceTable::new(self)
    }
}

/// All-pairs vertex distances of a multigraph, used to answer many
/// multiedge-distance queries.
pub struct DistanceTable {
    n: usize,
    dist: Vec<Option<usize>>,
}

impl DistanceTable {
    pub fn new(mg: &Multigraph) -> Self {
        let n = mg.n();
        let mut adj = vec![Vec::new(); n];
        for e in mg.multiedges() {
            if !e.is_loop() {
                adj[e.u].push(e.v);
                adj[e.v].push(e.u);
            }
        }
        let mut dist = vec![None; n * n];
        for s in 0..n {
            dist[s * n + s] = Some(0);
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                let d = dist[s * n + v].unwrap();
                for &w in &adj[v] {
                    if dist[s * n + w].is_none() {
                        dist[s * n + w] = Some(d + 1);
                        queue.push_back(w);
                    }
                }
            }
        }
        DistanceTable { n, dist }
    }

    pub fn vertex_distance(&self, u: Vertex, v: Vertex) -> Option<usize> {
        self.dist[u * self.n + v]
    }

    pub fn edge_distance(&self, e: &Multiedge, f: &Multiedge) -> EdgeDistance {
        [(e.u, f.u), (e.u, f.v), (e.v, f.u), (e.v, f.v)]
            .into_iter()
            .filter_map(|(a, b)| self.vertex_distance(a, b))
            .min()
            .map_or(EdgeDistance::Unreachable, EdgeDistance::Finite)
    }
}

pub fn multiedge_distance(
    mg: &Multigraph,
    e: MultiedgeId,
    f: MultiedgeId,
) -> Result<EdgeDistance, MultigraphError> {
    let a = mg.multiedge(e)?;
    let b = mg.multiedge(f)?;
    if e == f {
        return Err(MultigraphError::SameMultiedge(e));
    }
    if a.shares_endpoint(&b) {
        return Ok(EdgeDistance::Finite(0));
    }
    Ok(DistanceTable::new(mg).edge_distance(&a, &b))
}

/// Merges the endpoints of every multiedge in `matching` into one vertex.
/// The matched multiedges disappear; every other multiedge survives with its
/// id, possibly becoming parallel or a loop. Merged classes are numbered by
/// their smallest original vertex.
pub fn contract_matching(
    mg: &Multigraph,
    matching: &[MultiedgeId],
) -> Result<Multigraph, MultigraphError> {
    let chosen: Vec<Multiedge> = matching
        .iter()
        .map(|&id| mg.multiedge(id))
        .collect::<Result<_, _>>()?;
    for (i, a) in chosen.iter().enumerate() {
        for b in &chosen[i + 1..] {
            if a.id == b.id {
                return Err(MultigraphError::DuplicateId(a.id));
            }
            if a.shares_endpoint(b) {
                return Err(MultigraphError::NotAMatching(a.id, b.id));
            }
        }
        if a.is_loop() {
            return Err(MultigraphError::NotAMatching(a.id, a.id));
        }
    }

    let mut rep: Vec<Vertex> = (0..mg.n()).collect();
    for e in &chosen {
        rep[e.v] = e.u;
    }
    let mut new_id = vec![usize::MAX; mg.n()];
    let mut next = 0;
    for v in 0..mg.n() {
        let r = rep[v];
        if new_id[r] == usize::MAX {
            new_id[r] = next;
            next += 1;
        }
        new_id[v] = new_id[r];
    }
    let removed: Vec<MultiedgeId> = chosen.iter().map(|e| e.id).collect();
    Multigraph::new(
        next,
        mg.multiedges()
            .iter()
            .filter(|e| !removed.contains(&e.id))
            .map(|e| (e.id, new_id[e.u], new_id[e.v])),
    )
}
