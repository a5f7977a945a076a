//! Finite simple undirected graphs on dense integer vertex ids.

use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

pub type Vertex = usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("loop at vertex {0}")]
    Loop(Vertex),
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(Vertex, Vertex),
    #[error("vertex {vertex} out of range (n = {n})")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("vertex {0} listed twice")]
    DuplicateVertex(Vertex),
}

/// A simple undirected graph. Edges are stored once as `(u, v)` with `u < v`,
/// sorted lexicographically; adjacency lists are sorted ascending.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    adj: Vec<Vec<Vertex>>,
}

impl SimpleGraph {
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut list = Vec::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        Ok(Self::from_canonical(n, list))
    }

    /// Builds a graph from any edge list, silently dropping loops and repeats.
    pub fn from_edges_lossy<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut list = Vec::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u != v {
                list.push((u.min(v), u.max(v)));
            }
        }
        list.sort_unstable();
        list.dedup();
        Ok(Self::from_canonical(n, list))
    }

    pub fn empty(n: usize) -> Self {
        Self::from_canonical(n, Vec::new())
    }

    fn from_canonical(n: usize, edges: Vec<(Vertex, Vertex)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        SimpleGraph { n, edges, adj }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Canonical edge list, sorted, each edge as `(min, max)`.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.edge_index(u, v).is_some()
    }

    /// Position of the edge in the canonical edge list.
    pub fn edge_index(&self, u: Vertex, v: Vertex) -> Option<usize> {
        if u >= self.n || v >= self.n || u == v {
            return None;
        }
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn with_edge(&self, u: Vertex, v: Vertex) -> Result<Self, GraphError> {
        SimpleGraph::new(self.n, self.edges.iter().copied().chain([(u, v)]))
    }

    pub fn without_edge(&self, u: Vertex, v: Vertex) -> Self {
        let key = (u.min(v), u.max(v));
        let edges = self.edges.iter().copied().filter(|&e| e != key).collect();
        Self::from_canonical(self.n, edges)
    }

    /// Subgraph induced by `vertices`, relabelled to `0..vertices.len()` in the
    /// given order. Returns the subgraph and the new-to-old id map.
    pub fn induced_subgraph(&self, vertices: &VertexSet) -> (SimpleGraph, Vec<Vertex>) {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| (index[u], index[v]));
        let sub = SimpleGraph::from_edges_lossy(vertices.len(), edges)
            .expect("relabelled ids are in range");
        (sub, vertices.members().to_vec())
    }

    /// Connected component label of each vertex; labels are assigned in
    /// order of the smallest vertex of each component.
    pub fn components(&self) -> Vec<usize> {
        let mut label = vec![usize::MAX; self.n];
        let mut next = 0;
        for s in 0..self.n {
            if label[s] != usize::MAX {
                continue;
            }
            label[s] = next;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adj[v] {
                    if label[w] == usize::MAX {
                        label[w] = next;
                        queue.push_back(w);
                    }
                }
            }
            next += 1;
        }
        label
    }

    pub fn component_count(&self) -> usize {
        self.components().into_iter().max().map_or(0, |m| m + 1)
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// Breadth-first distances from `source`; `None` for unreachable vertices.
    pub fn distances_from(&self, source: Vertex) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap();
            for &w in &self.adj[v] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Number of neighbours of `v` inside `set`.
    pub fn degree_into(&self, v: Vertex, set: &VertexSet) -> usize {
        self.adj[v].iter().filter(|&&w| set.contains(w)).count()
    }

    /// Neighbours of `v` inside `set`, ascending.
    pub fn neighbors_in(&self, v: Vertex, set: &VertexSet) -> Vec<Vertex> {
        self.adj[v]
            .iter()
            .copied()
            .filter(|&w| set.contains(w))
            .collect()
    }

    /// A proper 2-colouring if the graph is bipartite.
    pub fn two_coloring(&self) -> Option<Vec<bool>> {
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        for s in 0..self.n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                let c = color[v].unwrap();
                for &w in &self.adj[v] {
                    match color[w] {
                        None => {
                            color[w] = Some(!c);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == c => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(|c| c.unwrap()).collect())
    }

    pub fn complement_set(&self, x: &VertexSet) -> VertexSet {
        x.complement(self.n)
    }

    pub(crate) fn check_set(&self, x: &VertexSet) -> Result<(), GraphError> {
        match x.iter().find(|&&v| v >= self.n) {
            Some(&v) => Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n,
            }),
            None => Ok(()),
        }
    }
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimpleGraph(n={}, edges={:?})", self.n, self.edges)
    }
}

/// A set of vertex ids, stored sorted and duplicate-free.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct VertexSet {
    members: Vec<Vertex>,
}

impl VertexSet {
    /// Rejects duplicates; membership in a particular host graph is checked
    /// by the operations that take the set.
    pub fn new<I: IntoIterator<Item = Vertex>>(members: I) -> Result<Self, GraphError> {
        let mut members: Vec<Vertex> = members.into_iter().collect();
        members.sort_unstable();
        if let Some(w) = members.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateVertex(w[0]));
        }
        Ok(VertexSet { members })
    }

    /// Like [`VertexSet::new`] but also checks every member is `< n`.
    pub fn within<I: IntoIterator<Item = Vertex>>(
        n: usize,
        members: I,
    ) -> Result<Self, GraphError> {
        let set = Self::new(members)?;
        match set.members.last() {
            Some(&v) if v >= n => Err(GraphError::VertexOutOfRange { vertex: v, n }),
            _ => Ok(set),
        }
    }

    pub fn from_mask(mask: u64) -> Self {
        VertexSet {
            members: (0..64).filter(|&i| mask >> i & 1 == 1).collect(),
        }
    }

    pub fn all(n: usize) -> Self {
        VertexSet {
            members: (0..n).collect(),
        }
    }

    pub fn empty() -> Self {
        VertexSet::default()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[Vertex] {
        &self.members
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Vertex> {
        self.members.iter()
    }

    pub fn complement(&self, n: usize) -> VertexSet {
        VertexSet {
            members: (0..n).filter(|&v| !self.contains(v)).collect(),
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut members: Vec<Vertex> = self.members.iter().chain(&other.members).copied().collect();
        members.sort_unstable();
        members.dedup();
        VertexSet { members }
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet {
            members: self
                .members
                .iter()
                .copied()
                .filter(|&v| other.contains(v))
                .collect(),
        }
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet {
            members: self
                .members
                .iter()
                .copied()
                .filter(|&v| !other.contains(v))
                .collect(),
        }
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.members.iter().all(|&v| !other.contains(v))
    }

    /// Membership indicator over `0..n`.
    pub fn indicator(&self, n: usize) -> Vec<bool> {
        let mut ind = vec![false; n];
        for &v in &self.members {
            if v < n {
                ind[v] = true;
            }
        }
        ind
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = &'a Vertex;
    type IntoIter = std::slice::Iter<'a, Vertex>;
    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

/// Δ(G); zero for an edgeless or empty graph.
pub fn max_degree(g: &SimpleGraph) -> usize {
    g.max_degree()
}

/// Number of edges with exactly one endpoint in `x`.
pub fn edge_cut(g: &SimpleGraph, x: &VertexSet) -> Result<usize, GraphError> {
    g.check_set(x)?;
    let inside = x.indicator(g.n());
    Ok(g.edges()
        .iter()
        .filter(|&&(u, v)| inside[u] != inside[v])
        .count())
}

/// Number of edges with both endpoints in `x`.
pub fn induced_edge_count(g: &SimpleGraph, x: &VertexSet) -> Result<usize, GraphError> {
    g.check_set(x)?;
    let inside = x.indicator(g.n());
    Ok(g.edges()
        .iter()
        .filter(|&&(u, v)| inside[u] && inside[v])
        .count())
}

/// Number of edges joining `x` and `y` (each edge counted once).
pub fn edges_between(g: &SimpleGraph, x: &VertexSet, y: &VertexSet) -> Result<usize, GraphError> {
    g.check_set(x)?;
    g.check_set(y)?;
    let in_x = x.indicator(g.n());
    let in_y = y.indicator(g.n());
    Ok(g.edges()
        .iter()
        .filter(|&&(u, v)| (in_x[u] && in_y[v]) || (in_x[v] && in_y[u]))
        .count())
}
