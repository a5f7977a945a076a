//! Maximum matching (Edmonds' blossom algorithm) and a greedy maximal
//! matching with its density bound.

use std::collections::VecDeque;

use super::LemmaError;
use crate::graph::{SimpleGraph, Vertex};

const NONE: usize = usize::MAX;

struct Blossom<'a> {
    g: &'a SimpleGraph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
}

impl<'a> Blossom<'a> {
    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.g.n()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Searches for an augmenting path from `root`; returns its free end.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.g.n();
        self.used.iter_mut().for_each(|x| *x = false);
        self.parent.iter_mut().for_each(|x| *x = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        let mut q = VecDeque::from([root]);
        while let Some(v) = q.pop_front() {
            for &to in self.g.neighbors(v) {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom = vec![false; n];
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                q.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let m = self.mate[to];
                    self.used[m] = true;
                    q.push_back(m);
                }
            }
        }
        None
    }
}

/// Edge list of a maximum matching, each pair (u, v) with u < v, sorted.
pub fn maximum_matching(h: &SimpleGraph) -> Vec<(Vertex, Vertex)> {
    let n = h.n();
    let mut bl = Blossom {
        g: h,
        mate: vec![NONE; n],
        parent: vec![NONE; n],
        base: (0..n).collect(),
        used: vec![false; n],
        in_blossom: vec![false; n],
    };
    // greedy start, then augment
    for &(u, v) in h.edges() {
        if bl.mate[u] == NONE && bl.mate[v] == NONE {
            bl.mate[u] = v;
            bl.mate[v] = u;
        }
    }
    for root in 0..n {
        if bl.mate[root] != NONE {
            continue;
        }
        if let Some(mut v) = bl.find_path(root) {
            while v != NONE {
                let pv = bl.parent[v];
                let ppv = bl.mate[pv];
                bl.mate[v] = pv;
                bl.mate[pv] = v;
                v = ppv;
            }
        }
    }
    (0..n)
        .filter(|&v| bl.mate[v] != NONE && v < bl.mate[v])
        .map(|v| (v, bl.mate[v]))
        .collect()
}

/// A maximum matching. When n is even and every degree is at least n/2
/// the matching must be perfect; anything else is reported as an error.
pub fn extract_matching(h: &SimpleGraph) -> Result<Vec<(Vertex, Vertex)>, LemmaError> {
    let m = maximum_matching(h);
    let n = h.n();
    if n > 0 && n.is_multiple_of(2) && 2 * h.min_degree() >= n && 2 * m.len() != n {
        return Err(LemmaError::CheckFailed(format!(
            "min degree {} >= n/2 but the matching covers {} of {n} vertices",
            h.min_degree(),
            2 * m.len()
        )));
    }
    Ok(m)
}

/// First-fit maximal matching in edge order, checked against
/// |M| >= density * n / 10, i.e. 10 |M| C(n, 2) >= e(h) n.
pub fn greedy_matching(h: &SimpleGraph) -> Result<Vec<(Vertex, Vertex)>, LemmaError> {
    let mut free = vec![true; h.n()];
    let mut m = Vec::new();
    for &(u, v) in h.edges() {
        if free[u] && free[v] {
            free[u] = false;
            free[v] = false;
            m.push((u, v));
        }
    }
    if !meets_density_bound(h, m.len()) {
        return Err(LemmaError::CheckFailed(format!(
            "greedy matching of size {} is below density * n / 10",
            m.len()
        )));
    }
    Ok(m)
}

pub fn meets_density_bound(h: &SimpleGraph, size: usize) -> bool {
    let n = h.n() as u128;
    10 * size as u128 * (n * n.saturating_sub(1) / 2) >= h.edge_count() as u128 * n
}
