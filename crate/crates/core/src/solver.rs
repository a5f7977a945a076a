//! Exact edge-disjoint paths by backtracking.
//!
//! The state is the set of used edges as a `u128` mask. At every search node
//! the pair with the fewest residual shortest paths is routed next (ties to
//! the lower pair index), and its candidate paths are grown depth-first,
//! trying neighbours nearest to the target first (ties by id). Each path extension step counts as one
//! node expansion against the budget. Only vertex-simple paths are tried;
//! any edge-disjoint realization can be shortcut to one, so nothing is lost.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{SimpleGraph, Vertex};
use crate::paths::{Pairing, PairingError, PathSystem};

pub const MAX_EDGES: usize = 128;
pub const DEFAULT_BUDGET: u64 = 50_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolverError {
    #[error(transparent)]
    Pairing(#[from] PairingError),
    #[error("graph has {0} edges, the solver handles at most {MAX_EDGES}")]
    TooManyEdges(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", content = "paths", rename_all = "snake_case")]
pub enum Routing {
    Feasible(PathSystem),
    Infeasible,
    BudgetExceeded,
}

impl Routing {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Routing::Feasible(_))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Solution {
    pub routing: Routing,
    pub expansions: u64,
}

struct OutOfBudget;

/// Residual view of a graph: adjacency with edge ids, and an edge mask.
struct Net {
    n: usize,
    adj: Vec<Vec<(Vertex, usize)>>,
}

impl Net {
    fn new(g: &SimpleGraph) -> Result<Self, SolverError> {
        if g.edge_count() > MAX_EDGES {
            return Err(SolverError::TooManyEdges(g.edge_count()));
        }
        let mut adj = vec![Vec::new(); g.n()];
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            adj[u].push((v, e));
            adj[v].push((u, e));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Net { n: g.n(), adj })
    }

    fn mask_of(&self, g: &SimpleGraph, paths: &[Vec<Vertex>]) -> u128 {
        let mut used = 0u128;
        for p in paths {
            for w in p.windows(2) {
                if let Some(e) = g.edge_index(w[0], w[1]) {
                    used |= 1u128 << e;
                }
            }
        }
        used
    }

    /// Component labels of the residual graph.
    fn components(&self, used: u128) -> Vec<usize> {
        let mut label = vec![usize::MAX; self.n];
        let mut stack = Vec::new();
        for s in 0..self.n {
            if label[s] != usize::MAX {
                continue;
            }
            label[s] = s;
            stack.push(s);
            while let Some(v) = stack.pop() {
                for &(w, e) in &self.adj[v] {
                    if used >> e & 1 == 0 && label[w] == usize::MAX {
                        label[w] = s;
                        stack.push(w);
                    }
                }
            }
        }
        label
    }

    /// Connectivity of every demand, and at most one demand across each
    /// residual bridge.
    fn prune_ok(&self, used: u128, demands: &[(Vertex, Vertex)]) -> bool {
        if demands.is_empty() {
            return true;
        }
        let label = self.components(used);
        if demands.iter().any(|&(s, t)| label[s] != label[t]) {
            return false;
        }
        // Bridges via DFS lowpoints; the subtree below a bridge is the
        // interval [tin[v], tout[v]).
        let n = self.n;
        let mut tin = vec![usize::MAX; n];
        let mut low = vec![0; n];
        let mut tout = vec![0; n];
        let mut bridges_below: Vec<Vertex> = Vec::new();
        let mut clock = 0;
        for root in 0..n {
            if tin[root] != usize::MAX {
                continue;
            }
            // (vertex, parent edge, next adjacency index)
            let mut stack: Vec<(Vertex, usize, usize)> = vec![(root, usize::MAX, 0)];
            tin[root] = clock;
            low[root] = clock;
            clock += 1;
            while let Some(top) = stack.last_mut() {
                let (v, pe, i) = *top;
                if i < self.adj[v].len() {
                    top.2 += 1;
                    let (w, e) = self.adj[v][i];
                    if e == pe || used >> e & 1 == 1 {
                        continue;
                    }
                    if tin[w] == usize::MAX {
                        tin[w] = clock;
                        low[w] = clock;
                        clock += 1;
                        stack.push((w, e, 0));
                    } else {
                        low[v] = low[v].min(tin[w]);
                    }
                } else {
                    tout[v] = clock;
                    stack.pop();
                    if let Some(&(p, _, _)) = stack.last() {
                        low[p] = low[p].min(low[v]);
                        if low[v] > tin[p] {
                            bridges_below.push(v);
                        }
                    }
                }
            }
        }
        for v in bridges_below {
            let inside = |x: Vertex| tin[v] <= tin[x] && tin[x] < tout[v];
            let crossing = demands
                .iter()
                .filter(|&&(s, t)| inside(s) != inside(t))
                .count();
            if crossing > 1 {
                return false;
            }
        }
        true
    }

    fn distances_to(&self, used: u128, t: Vertex) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        dist[t] = 0;
        let mut queue = std::collections::VecDeque::from([t]);
        while let Some(v) = queue.pop_front() {
            for &(w, e) in &self.adj[v] {
                if used >> e & 1 == 0 && dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Number of shortest s-t paths in the residual graph, saturating.
    fn shortest_path_count(&self, used: u128, s: Vertex, t: Vertex) -> u64 {
        let mut dist = vec![usize::MAX; self.n];
        let mut count = vec![0u64; self.n];
        dist[s] = 0;
        count[s] = 1;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            if v == t {
                break;
            }
            for &(w, e) in &self.adj[v] {
                if used >> e & 1 == 1 {
                    continue;
                }
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
                if dist[w] == dist[v] + 1 {
                    count[w] = count[w].saturating_add(count[v]);
                }
            }
        }
        count[t]
    }
}

/// Sound pruning test for a partial routing: `false` only if the demands
/// still open cannot all be routed in the graph minus the edges of
/// `routed`. Checks that every open pair is connected in the residual
/// graph and that no residual bridge separates more than one open pair.
pub fn residual_prune(
    g: &SimpleGraph,
    routed: &[Vec<Vertex>],
    remaining: &[(Vertex, Vertex)],
) -> bool {
    match Net::new(g) {
        Ok(net) => {
            if remaining.iter().any(|&(s, t)| s >= g.n() || t >= g.n()) {
                return false;
            }
            net.prune_ok(net.mask_of(g, routed), remaining)
        }
        // too large for the mask: no claim either way
        Err(_) => true,
    }
}

struct Search<'a> {
    net: &'a Net,
    pairs: &'a [(Vertex, Vertex)],
    budget: u64,
    expansions: u64,
    routed: Vec<Option<Vec<Vertex>>>,
}

impl Search<'_> {
    fn tick(&mut self) -> Result<(), OutOfBudget> {
        self.expansions += 1;
        if self.expansions > self.budget {
            Err(OutOfBudget)
        } else {
            Ok(())
        }
    }

    fn open_demands(&self, open: &[usize]) -> Vec<(Vertex, Vertex)> {
        open.iter().map(|&i| self.pairs[i]).collect()
    }

    fn solve(&mut self, used: u128, open: &mut Vec<usize>) -> Result<bool, OutOfBudget> {
        if open.is_empty() {
            return Ok(true);
        }
        let mut best: Option<(u64, usize, usize)> = None;
        for (slot, &i) in open.iter().enumerate() {
            let (s, t) = self.pairs[i];
            let c = self.net.shortest_path_count(used, s, t);
            if c == 0 {
                return Ok(false);
            }
            if best.is_none_or(|(bc, bi, _)| (c, i) < (bc, bi)) {
                best = Some((c, i, slot));
            }
        }
        let (_, _, slot) = best.unwrap();
        let idx = open.remove(slot);
        let (s, t) = self.pairs[idx];
        let mut visited = vec![false; self.net.n];
        visited[s] = true;
        let mut path = vec![s];
        let found = self.grow(idx, t, used, &mut path, &mut visited, open);
        open.insert(slot, idx);
        found
    }

    fn grow(
        &mut self,
        idx: usize,
        t: Vertex,
        used: u128,
        path: &mut Vec<Vertex>,
        visited: &mut [bool],
        open: &mut Vec<usize>,
    ) -> Result<bool, OutOfBudget> {
        self.tick()?;
        let v = *path.last().unwrap();
        if v == t {
            self.routed[idx] = Some(path.clone());
            if self.solve(used, open)? {
                return Ok(true);
            }
            self.routed[idx] = None;
            return Ok(false);
        }
        let mut demands = self.open_demands(open);
        demands.push((v, t));
        let head = demands.len() - 1;
        let dist = self.net.distances_to(used, t);
        let mut steps: Vec<(usize, Vertex, usize)> = self.net.adj[v]
            .iter()
            .filter(|&&(w, e)| used >> e & 1 == 0 && !visited[w])
            .map(|&(w, e)| (dist[w], w, e))
            .collect();
        steps.sort_unstable();
        for (_, w, e) in steps {
            let next = used | 1u128 << e;
            demands[head] = (w, t);
            if !self.net.prune_ok(next, &demands) {
                continue;
            }
            visited[w] = true;
            path.push(w);
            let done = self.grow(idx, t, next, path, visited, open)?;
            path.pop();
            visited[w] = false;
            if done {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// Decides whether the pairs of `p` can be joined by edge-disjoint paths,
/// spending at most `budget` node expansions.
pub fn find_disjoint_paths(
    g: &SimpleGraph,
    p: &Pairing,
    budget: u64,
) -> Result<Solution, SolverError> {
    p.check_range(g.n())?;
    let net = Net::new(g)?;
    let pairs = p.pairs();
    let mut search = Search {
        net: &net,
        pairs,
        budget,
        expansions: 0,
        routed: vec![None; pairs.len()],
    };
    let all: Vec<(Vertex, Vertex)> = pairs.to_vec();
    if !net.prune_ok(0, &all) {
        return Ok(Solution {
            routing: Routing::Infeasible,
            expansions: 0,
        });
    }
    let mut open: Vec<usize> = (0..pairs.len()).collect();
    let routing = match search.solve(0, &mut open) {
        Ok(true) => {
            let system = PathSystem::new(search.routed.into_iter().map(|p| p.unwrap()).collect());
            debug_assert_eq!(system.verify(g, p), Ok(()));
            Routing::Feasible(system)
        }
        Ok(false) => Routing::Infeasible,
        Err(OutOfBudget) => Routing::BudgetExceeded,
    };
    Ok(Solution {
        routing,
        expansions: search.expansions,
    })
}
