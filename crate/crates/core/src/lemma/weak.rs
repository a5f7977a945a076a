//! Weak paths (start and end in A, no edge inside B, at most two A-B
//! edges), the bounded ball around a vertex and the auxiliary pairing
//! graph.

use std::collections::VecDeque;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use super::LemmaError;
use crate::graph::{SimpleGraph, Vertex, VertexSet};

/// ceil(4 / eps).
pub fn radius_for(eps: &BigRational) -> Result<usize, LemmaError> {
    if *eps <= BigRational::zero() {
        return Err(LemmaError::EpsNotPositive(eps.to_string()));
    }
    let q = BigRational::from_integer(BigInt::from(4)) / eps;
    let c = q.ceil().to_integer();
    c.to_usize()
        .ok_or_else(|| LemmaError::CheckFailed(format!("radius {c} does not fit")))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeakReachability {
    pub a: VertexSet,
    pub b: VertexSet,
    pub x: Vertex,
    pub radius: usize,
    /// A vertices within distance `radius` of x in the whole graph.
    pub ball: VertexSet,
    /// A vertices joined to x by a weak path, x included.
    pub reachable: VertexSet,
    /// ball ∩ reachable.
    pub close: VertexSet,
    /// One weak path per member of `reachable`, in the same order.
    pub witnesses: Vec<Vec<Vertex>>,
}

impl WeakReachability {
    pub fn witness(&self, y: Vertex) -> Option<&[Vertex]> {
        self.reachable
            .iter()
            .position(|&v| v == y)
            .map(|i| self.witnesses[i].as_slice())
    }

    /// Re-checks every stored witness and the set identities.
    pub fn verify(&self, g: &SimpleGraph) -> bool {
        self.reachable.len() == self.witnesses.len()
            && self.reachable.iter().zip(&self.witnesses).all(|(&y, p)| {
                p.first() == Some(&self.x) && p.last() == Some(&y) && is_weak_path(g, &self.a, p)
            })
            && self.close == self.ball.intersection(&self.reachable)
    }
}

/// Simple path, ends in A, no edge inside B, at most two edges across.
pub fn is_weak_path(g: &SimpleGraph, a: &VertexSet, path: &[Vertex]) -> bool {
    let (Some(&s), Some(&t)) = (path.first(), path.last()) else {
        return false;
    };
    let in_a = |v: Vertex| a.contains(v);
    if !in_a(s) || !in_a(t) {
        return false;
    }
    let mut seen = vec![false; g.n()];
    for &v in path {
        if v >= g.n() || std::mem::replace(&mut seen[v], true) {
            return false;
        }
    }
    let mut cross = 0;
    for w in path.windows(2) {
        if !g.has_edge(w[0], w[1]) {
            return false;
        }
        match (in_a(w[0]), in_a(w[1])) {
            (false, false) => return false,
            (true, true) => {}
            _ => cross += 1,
        }
    }
    cross <= 2
}

fn check_sides(
    g: &SimpleGraph,
    a: &VertexSet,
    b: &VertexSet,
) -> Result<(VertexSet, VertexSet), LemmaError> {
    let a = VertexSet::within(g.n(), a.iter().copied())?;
    let b = VertexSet::within(g.n(), b.iter().copied())?;
    if !a.is_disjoint(&b) || a.len() + b.len() != g.n() {
        return Err(LemmaError::NotAPartition);
    }
    Ok((a, b))
}

pub fn weak_reachability(
    g: &SimpleGraph,
    a: &VertexSet,
    b: &VertexSet,
    x: Vertex,
    radius: usize,
) -> Result<WeakReachability, LemmaError> {
    let (a, b) = check_sides(g, a, b)?;
    if !a.contains(x) {
        return Err(LemmaError::NotInA(x));
    }
    let n = g.n();
    let in_a = a.indicator(n);
    // layer 0: no cut edge yet, 1: standing in B, 2: back in A after two
    let state = |v: Vertex, layer: usize| layer * n + v;
    let mut parent = vec![usize::MAX; 3 * n];
    let mut queue = VecDeque::new();
    parent[state(x, 0)] = state(x, 0);
    queue.push_back((x, 0));
    while let Some((v, layer)) = queue.pop_front() {
        for &w in g.neighbors(v) {
            let next = match (layer, in_a[w]) {
                (0, true) => 0,
                (0, false) => 1,
                (1, true) => 2,
                (2, true) => 2,
                _ => continue,
            };
            let s = state(w, next);
            if parent[s] == usize::MAX {
                parent[s] = state(v, layer);
                queue.push_back((w, next));
            }
        }
    }
    let mut reachable = Vec::new();
    let mut witnesses = Vec::new();
    for y in a.iter().copied() {
        let Some(layer) = [0, 2]
            .into_iter()
            .find(|&l| parent[state(y, l)] != usize::MAX)
        else {
            continue;
        };
        let mut walk = vec![y];
        let mut s = state(y, layer);
        while s != state(x, 0) {
            s = parent[s];
            walk.push(s % n);
        }
        walk.reverse();
        reachable.push(y);
        witnesses.push(shortcut(walk));
    }
    let dist = g.distances_from(x);
    let ball = VertexSet::new(
        a.iter()
            .copied()
            .filter(|&v| dist[v].is_some_and(|d| d <= radius)),
    )
    .unwrap();
    let reachable = VertexSet::new(reachable).unwrap();
    let close = ball.intersection(&reachable);
    Ok(WeakReachability {
        a,
        b,
        x,
        radius,
        ball,
        reachable,
        close,
        witnesses,
    })
}

/// Cuts out closed sub-walks, leaving a simple path on a subset of the
/// walk's edges.
fn shortcut(walk: Vec<Vertex>) -> Vec<Vertex> {
    let mut path: Vec<Vertex> = Vec::with_capacity(walk.len());
    for v in walk {
        if let Some(i) = path.iter().position(|&u| u == v) {
            path.truncate(i + 1);
        } else {
            path.push(v);
        }
    }
    path
}

/// Graph on `u` (vertex i is the i-th member) joining x and y when y is not
/// in the close set of x. Errors if the relation comes out asymmetric.
pub fn build_auxiliary_pairing_graph(
    g: &SimpleGraph,
    a: &VertexSet,
    u: &VertexSet,
    radius: usize,
) -> Result<SimpleGraph, LemmaError> {
    let a = VertexSet::within(g.n(), a.iter().copied())?;
    let u = VertexSet::within(g.n(), u.iter().copied())?;
    if let Some(&v) = u.iter().find(|&&v| !a.contains(v)) {
        return Err(LemmaError::NotInA(v));
    }
    let b = a.complement(g.n());
    let close: Vec<VertexSet> = u
        .iter()
        .map(|&x| weak_reachability(g, &a, &b, x, radius).map(|w| w.close))
        .collect::<Result<_, _>>()?;
    let members = u.members();
    let mut edges = Vec::new();
    for i in 0..members.len() {
        for j in i + 1..members.len() {
            let ij = !close[i].contains(members[j]);
            let ji = !close[j].contains(members[i]);
            if ij != ji {
                return Err(LemmaError::Asymmetric(members[i], members[j]));
            }
            if ij {
                edges.push((i, j));
            }
        }
    }
    Ok(SimpleGraph::new(members.len(), edges)?)
}
