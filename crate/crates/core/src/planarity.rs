//! Planarity testing with the left-right criterion.
//!
//! A planar graph comes back with a rotation system (combinatorial
//! embedding) that can be re-checked with Euler's formula; a non-planar
//! graph comes back with a Kuratowski subdivision extracted as a minimal
//! non-planar subgraph.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::graph::{SimpleGraph, Vertex};

type EdgeId = usize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Planarity {
    Planar(Embedding),
    NonPlanar(KuratowskiWitness),
}

impl Planarity {
    pub fn is_planar(&self) -> bool {
        matches!(self, Planarity::Planar(_))
    }
}

/// Clockwise neighbour order around every vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Embedding {
    rotation: Vec<Vec<Vertex>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum KuratowskiKind {
    K5,
    K33,
}

/// A subdivision of K5 or K3,3 contained in the host graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KuratowskiWitness {
    pub kind: KuratowskiKind,
    pub branch_vertices: Vec<Vertex>,
    pub edges: Vec<(Vertex, Vertex)>,
}

/// Decides planarity and returns the matching certificate.
pub fn is_planar(g: &SimpleGraph) -> Planarity {
    match LrPlanarity::new(g).run(true) {
        Some(rotation) => Planarity::Planar(Embedding { rotation }),
        None => Planarity::NonPlanar(extract_kuratowski(g)),
    }
}

/// Planarity verdict only, without certificates.
pub fn planar(g: &SimpleGraph) -> bool {
    LrPlanarity::new(g).run(false).is_some()
}

impl Embedding {
    pub fn rotation(&self, v: Vertex) -> &[Vertex] {
        &self.rotation[v]
    }

    /// Number of faces traced from the rotation system, counted over the
    /// non-trivial components.
    pub fn face_count(&self) -> usize {
        let n = self.rotation.len();
        let pos: Vec<BTreeMap<Vertex, usize>> = self
            .rotation
            .iter()
            .map(|r| r.iter().enumerate().map(|(i, &w)| (w, i)).collect())
            .collect();
        let mut visited: Vec<Vec<bool>> =
            self.rotation.iter().map(|r| vec![false; r.len()]).collect();
        let mut faces = 0;
        for v in 0..n {
            for i in 0..self.rotation[v].len() {
                if visited[v][i] {
                    continue;
                }
                faces += 1;
                let (mut a, mut idx) = (v, i);
                while !visited[a][idx] {
                    visited[a][idx] = true;
                    let b = self.rotation[a][idx];
                    // the half-edge after (a, b) leaves b from the successor of a
                    let back = pos[b][&a];
                    let next = (back + 1) % self.rotation[b].len();
                    a = b;
                    idx = next;
                }
            }
        }
        faces
    }

    /// Checks that the rotation system lists exactly the neighbours of each
    /// vertex and that it satisfies Euler's formula for the sphere on every
    /// component.
    pub fn verify(&self, g: &SimpleGraph) -> bool {
        if self.rotation.len() != g.n() {
            return false;
        }
        for v in g.vertices() {
            let mut r = self.rotation[v].clone();
            r.sort_unstable();
            if r != g.neighbors(v) {
                return false;
            }
        }
        let labels = g.components();
        let mut nontrivial = vec![false; g.n()];
        for v in g.vertices() {
            if g.degree(v) > 0 {
                nontrivial[labels[v]] = true;
            }
        }
        let components = nontrivial.iter().filter(|&&b| b).count();
        let vertices = g.vertices().filter(|&v| g.degree(v) > 0).count();
        self.face_count() + vertices == g.edge_count() + 2 * components
    }
}

impl KuratowskiWitness {
    /// Checks the witness is a subgraph of `g` and that suppressing its
    /// degree-2 vertices leaves exactly K5 or K3,3 on the branch vertices.
    pub fn verify(&self, g: &SimpleGraph) -> bool {
        if !self.edges.iter().all(|&(u, v)| g.has_edge(u, v)) {
            return false;
        }
        let Ok(sub) = SimpleGraph::new(g.n(), self.edges.iter().copied()) else {
            return false;
        };
        let mut branch = self.branch_vertices.clone();
        branch.sort_unstable();
        let is_branch = |v: Vertex| branch.binary_search(&v).is_ok();
        let want_degree = match self.kind {
            KuratowskiKind::K5 => 4,
            KuratowskiKind::K33 => 3,
        };
        for v in sub.vertices() {
            let d = sub.degree(v);
            let ok = if is_branch(v) {
                d == want_degree
            } else {
                d == 0 || d == 2
            };
            if !ok {
                return false;
            }
        }
        // follow each branch path through degree-2 vertices
        let mut reached: Vec<(Vertex, Vertex)> = Vec::new();
        let mut used_internal = vec![false; g.n()];
        for &b in &branch {
            for &first in sub.neighbors(b) {
                let (mut prev, mut cur) = (b, first);
                while !is_branch(cur) {
                    let next = sub
                        .neighbors(cur)
                        .iter()
                        .copied()
                        .find(|&w| w != prev)
                        .unwrap();
                    prev = cur;
                    cur = next;
                }
                if cur == b {
                    return false;
                }
                if b < cur {
                    reached.push((b, cur));
                }
            }
        }
        for &(u, v) in &self.edges {
            for w in [u, v] {
                if !is_branch(w) {
                    used_internal[w] = true;
                }
            }
        }
        reached.sort_unstable();
        let distinct = {
            let mut d = reached.clone();
            d.dedup();
            d
        };
        if distinct.len() != reached.len() {
            return false;
        }
        match self.kind {
            KuratowskiKind::K5 => branch.len() == 5 && reached.len() == 10,
            KuratowskiKind::K33 => {
                if branch.len() != 6 || reached.len() != 9 {
                    return false;
                }
                // the branch-level graph must be bipartite 3+3
                let h = SimpleGraph::new(
                    6,
                    reached.iter().map(|&(u, v)| {
                        (
                            branch.binary_search(&u).unwrap(),
                            branch.binary_search(&v).unwrap(),
                        )
                    }),
                )
                .unwrap();
                match h.two_coloring() {
                    Some(c) => c.iter().filter(|&&x| x).count() == 3,
                    None => false,
                }
            }
        }
    }
}

/// Deletes edges greedily while the graph stays non-planar; what remains is
/// an edge-minimal non-planar subgraph, i.e. a Kuratowski subdivision.
fn extract_kuratowski(g: &SimpleGraph) -> KuratowskiWitness {
    let mut kept: Vec<(Vertex, Vertex)> = g.edges().to_vec();
    let mut i = 0;
    while i < kept.len() {
        let trial: Vec<_> = kept
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, &e)| e)
            .collect();
        let h = SimpleGraph::new(g.n(), trial.iter().copied()).unwrap();
        if planar(&h) {
            i += 1;
        } else {
            kept = trial;
        }
    }
    let h = SimpleGraph::new(g.n(), kept.iter().copied()).unwrap();
    let branch_vertices: Vec<Vertex> = h.vertices().filter(|&v| h.degree(v) >= 3).collect();
    let kind = if branch_vertices.len() == 5 {
        KuratowskiKind::K5
    } else {
        KuratowskiKind::K33
    };
    KuratowskiWitness {
        kind,
        branch_vertices,
        edges: kept,
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
struct Interval {
    low: Option<EdgeId>,
    high: Option<EdgeId>,
}

impl Interval {
    fn is_empty(&self) -> bool {
        self.low.is_none() && self.high.is_none()
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
struct ConflictPair {
    left: Interval,
    right: Interval,
}

impl ConflictPair {
    fn swap(&mut self) {
        std::mem::swap(&mut self.left, &mut self.right);
    }
}

/// Rotation system under construction: per vertex, `nbr -> (cw, ccw)`.
struct RotationBuilder {
    links: Vec<BTreeMap<Vertex, (Vertex, Vertex)>>,
    first: Vec<Option<Vertex>>,
}

impl RotationBuilder {
    fn new(n: usize) -> Self {
        RotationBuilder {
            links: vec![BTreeMap::new(); n],
            first: vec![None; n],
        }
    }

    fn add_cw(&mut self, start: Vertex, end: Vertex, reference: Option<Vertex>) {
        let Some(reference) = reference else {
            self.links[start].insert(end, (end, end));
            self.first[start] = Some(end);
            return;
        };
        let links = &mut self.links[start];
        let cw_ref = links[&reference].0;
        links.get_mut(&reference).unwrap().0 = end;
        links.insert(end, (cw_ref, reference));
        links.get_mut(&cw_ref).unwrap().1 = end;
    }

    fn add_ccw(&mut self, start: Vertex, end: Vertex, reference: Option<Vertex>) {
        let Some(reference) = reference else {
            self.add_cw(start, end, None);
            return;
        };
        let ccw_ref = self.links[start][&reference].1;
        self.add_cw(start, end, Some(ccw_ref));
        if self.first[start] == Some(reference) {
            self.first[start] = Some(end);
        }
    }

    fn add_first(&mut self, start: Vertex, end: Vertex) {
        let reference = self.first[start];
        self.add_ccw(start, end, reference);
    }

    fn finish(self) -> Vec<Vec<Vertex>> {
        self.first
            .iter()
            .zip(&self.links)
            .map(|(first, links)| {
                let mut order = Vec::with_capacity(links.len());
                if let Some(f) = *first {
                    let mut cur = f;
                    loop {
                        order.push(cur);
                        cur = links[&cur].0;
                        if cur == f {
                            break;
                        }
                    }
                }
                order
            })
            .collect()
    }
}

struct LrPlanarity {
    n: usize,
    adj: Vec<Vec<(Vertex, EdgeId)>>,
    src: Vec<Vertex>,
    dst: Vec<Vertex>,
    oriented: Vec<bool>,
    height: Vec<Option<usize>>,
    parent_edge: Vec<Option<EdgeId>>,
    lowpt: Vec<usize>,
    lowpt2: Vec<usize>,
    nesting_depth: Vec<i64>,
    out: Vec<Vec<EdgeId>>,
    reference: Vec<Option<EdgeId>>,
    side: Vec<i64>,
    stack: Vec<ConflictPair>,
    stack_bottom: Vec<usize>,
    lowpt_edge: Vec<Option<EdgeId>>,
    left_ref: Vec<Vertex>,
    right_ref: Vec<Vertex>,
    roots: Vec<Vertex>,
}

impl LrPlanarity {
    fn new(g: &SimpleGraph) -> Self {
        let n = g.n();
        let m = g.edge_count();
        let mut adj = vec![Vec::new(); n];
        for (id, &(u, v)) in g.edges().iter().enumerate() {
            adj[u].push((v, id));
            adj[v].push((u, id));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        LrPlanarity {
            n,
            adj,
            src: vec![0; m],
            dst: vec![0; m],
            oriented: vec![false; m],
            height: vec![None; n],
            parent_edge: vec![None; n],
            lowpt: vec![0; m],
            lowpt2: vec![0; m],
            nesting_depth: vec![0; m],
            out: vec![Vec::new(); n],
            reference: vec![None; m],
            side: vec![1; m],
            stack: Vec::new(),
            stack_bottom: vec![0; m],
            lowpt_edge: vec![None; m],
            left_ref: vec![0; n],
            right_ref: vec![0; n],
            roots: Vec::new(),
        }
    }

    fn run(mut self, embed: bool) -> Option<Vec<Vec<Vertex>>> {
        let m = self.src.len();
        if self.n > 2 && m > 3 * self.n - 6 {
            return None;
        }
        for v in 0..self.n {
            if self.height[v].is_none() {
                self.height[v] = Some(0);
                self.roots.push(v);
                self.orient(v);
            }
        }
        for v in 0..self.n {
            let mut order = std::mem::take(&mut self.out[v]);
            order.sort_by_key(|&e| self.nesting_depth[e]);
            self.out[v] = order;
        }
        for r in self.roots.clone() {
            if !self.test(r) {
                return None;
            }
        }
        if !embed {
            return Some(Vec::new());
        }
        for e in 0..m {
            let s = self.sign(e);
            self.nesting_depth[e] *= s;
        }
        let mut rot = RotationBuilder::new(self.n);
        for v in 0..self.n {
            let mut order = std::mem::take(&mut self.out[v]);
            order.sort_by_key(|&e| self.nesting_depth[e]);
            let mut prev = None;
            for &e in &order {
                rot.add_cw(v, self.dst[e], prev);
                prev = Some(self.dst[e]);
            }
            self.out[v] = order;
        }
        for r in self.roots.clone() {
            self.embed(r, &mut rot);
        }
        Some(rot.finish())
    }

    fn orient(&mut self, v: Vertex) {
        let parent = self.parent_edge[v];
        let hv = self.height[v].unwrap();
        for i in 0..self.adj[v].len() {
            let (w, id) = self.adj[v][i];
            if self.oriented[id] {
                continue;
            }
            self.oriented[id] = true;
            self.src[id] = v;
            self.dst[id] = w;
            self.out[v].push(id);
            self.lowpt[id] = hv;
            self.lowpt2[id] = hv;
            match self.height[w] {
                None => {
                    self.parent_edge[w] = Some(id);
                    self.height[w] = Some(hv + 1);
                    self.orient(w);
                }
                Some(hw) => self.lowpt[id] = hw,
            }
            self.nesting_depth[id] = 2 * self.lowpt[id] as i64;
            if self.lowpt2[id] < hv {
                self.nesting_depth[id] += 1;
            }
            if let Some(e) = parent {
                if self.lowpt[id] < self.lowpt[e] {
                    self.lowpt2[e] = self.lowpt[e].min(self.lowpt2[id]);
                    self.lowpt[e] = self.lowpt[id];
                } else if self.lowpt[id] > self.lowpt[e] {
                    self.lowpt2[e] = self.lowpt2[e].min(self.lowpt[id]);
                } else {
                    self.lowpt2[e] = self.lowpt2[e].min(self.lowpt2[id]);
                }
            }
        }
    }

    fn conflicting(&self, interval: &Interval, b: EdgeId) -> bool {
        match interval.high {
            Some(h) => self.lowpt[h] > self.lowpt[b],
            None => false,
        }
    }

    fn lowest(&self, p: &ConflictPair) -> usize {
        match (p.left.low, p.right.low) {
            (None, Some(r)) => self.lowpt[r],
            (Some(l), None) => self.lowpt[l],
            (Some(l), Some(r)) => self.lowpt[l].min(self.lowpt[r]),
            (None, None) => usize::MAX,
        }
    }

    fn test(&mut self, v: Vertex) -> bool {
        let parent = self.parent_edge[v];
        let hv = self.height[v].unwrap();
        for i in 0..self.out[v].len() {
            let ei = self.out[v][i];
            let w = self.dst[ei];
            self.stack_bottom[ei] = self.stack.len();
            if self.parent_edge[w] == Some(ei) {
                if !self.test(w) {
                    return false;
                }
            } else {
                self.lowpt_edge[ei] = Some(ei);
                self.stack.push(ConflictPair {
                    left: Interval::default(),
                    right: Interval {
                        low: Some(ei),
                        high: Some(ei),
                    },
                });
            }
            if self.lowpt[ei] < hv {
                let e = parent.expect("only non-root vertices have return edges below them");
                if i == 0 {
                    self.lowpt_edge[e] = self.lowpt_edge[ei];
                } else if !self.add_constraints(ei, e) {
                    return false;
                }
            }
        }
        if let Some(e) = parent {
            self.remove_back_edges(e);
        }
        true
    }

    fn add_constraints(&mut self, ei: EdgeId, e: EdgeId) -> bool {
        let mut p = ConflictPair::default();
        while let Some(mut q) = self.stack.pop() {
            if !q.left.is_empty() {
                q.swap();
            }
            if !q.left.is_empty() {
                return false;
            }
            let qlow = q.right.low.expect("non-empty interval");
            if self.lowpt[qlow] > self.lowpt[e] {
                if p.right.is_empty() {
                    p.right = q.right;
                } else if let Some(l) = p.right.low {
                    self.reference[l] = q.right.high;
                }
                p.right.low = q.right.low;
            } else {
                self.reference[qlow] = self.lowpt_edge[e];
            }
            if self.stack.len() == self.stack_bottom[ei] {
                break;
            }
        }
        while let Some(top) = self.stack.last() {
            if !(self.conflicting(&top.left, ei) || self.conflicting(&top.right, ei)) {
                break;
            }
            let mut q = self.stack.pop().unwrap();
            if self.conflicting(&q.right, ei) {
                q.swap();
            }
            if self.conflicting(&q.right, ei) {
                return false;
            }
            if let Some(l) = p.right.low {
                self.reference[l] = q.right.high;
            }
            if q.right.low.is_some() {
                p.right.low = q.right.low;
            }
            if p.left.is_empty() {
                p.left = q.left;
            } else if let Some(l) = p.left.low {
                self.reference[l] = q.left.high;
            }
            p.left.low = q.left.low;
        }
        if !(p.left.is_empty() && p.right.is_empty()) {
            self.stack.push(p);
        }
        true
    }

    fn remove_back_edges(&mut self, e: EdgeId) {
        let u = self.src[e];
        let hu = self.height[u].unwrap();
        while let Some(top) = self.stack.last() {
            if self.lowest(top) != hu {
                break;
            }
            let p = self.stack.pop().unwrap();
            if let Some(l) = p.left.low {
                self.side[l] = -1;
            }
        }
        if let Some(mut p) = self.stack.pop() {
            while let Some(h) = p.left.high {
                if self.dst[h] != u {
                    break;
                }
                p.left.high = self.reference[h];
            }
            if p.left.high.is_none() {
                if let Some(l) = p.left.low {
                    self.reference[l] = p.right.low;
                    self.side[l] = -1;
                    p.left.low = None;
                }
            }
            while let Some(h) = p.right.high {
                if self.dst[h] != u {
                    break;
                }
                p.right.high = self.reference[h];
            }
            if p.right.high.is_none() {
                if let Some(r) = p.right.low {
                    self.reference[r] = p.left.low;
                    self.side[r] = -1;
                    p.right.low = None;
                }
            }
            self.stack.push(p);
        }
        if self.lowpt[e] < hu {
            let top = self
                .stack
                .last()
                .expect("a return edge leaves a conflict pair");
            let (hl, hr) = (top.left.high, top.right.high);
            self.reference[e] = match (hl, hr) {
                (Some(l), None) => Some(l),
                (Some(l), Some(r)) if self.lowpt[l] > self.lowpt[r] => Some(l),
                _ => hr,
            };
        }
    }

    fn sign(&mut self, e: EdgeId) -> i64 {
        // resolve the reference chain iteratively
        let mut chain = vec![e];
        let mut cur = e;
        while let Some(r) = self.reference[cur] {
            chain.push(r);
            cur = r;
        }
        for i in (0..chain.len() - 1).rev() {
            let (a, b) = (chain[i], chain[i + 1]);
            self.side[a] *= self.side[b];
            self.reference[a] = None;
        }
        self.side[e]
    }

    fn embed(&mut self, v: Vertex, rot: &mut RotationBuilder) {
        for i in 0..self.out[v].len() {
            let ei = self.out[v][i];
            let w = self.dst[ei];
            if self.parent_edge[w] == Some(ei) {
                rot.add_first(w, v);
                self.left_ref[v] = w;
                self.right_ref[v] = w;
                self.embed(w, rot);
            } else if self.side[ei] == 1 {
                rot.add_cw(w, v, Some(self.right_ref[w]));
            } else {
                rot.add_ccw(w, v, Some(self.left_ref[w]));
                self.left_ref[w] = v;
            }
        }
    }
}
