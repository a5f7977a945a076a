//! Degree distribution of the A side of a bipartite planar graph.

use serde::Serialize;

use super::LemmaError;
use crate::graph::{SimpleGraph, VertexSet};
use crate::planarity::planar;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Lemma5Report {
    pub n: usize,
    pub a_size: usize,
    pub b_size: usize,
    pub e_ab: usize,
    /// A vertices of degree exactly two.
    pub degree_two: usize,
    /// A vertices of degree at least three.
    pub a_prime: VertexSet,
    pub e_a_prime_b: usize,
    /// e(A, B) - n - 3|B|, possibly negative.
    pub degree_two_bound: i64,
    pub degree_two_ok: bool,
    pub a_prime_ok: bool,
    pub e_a_prime_ok: bool,
}

impl Lemma5Report {
    pub fn all_hold(&self) -> bool {
        self.degree_two_ok && self.a_prime_ok && self.e_a_prime_ok
    }
}

/// Checks the three conclusions on a bipartite planar graph with sides `a`
/// and `b`. `b` must be non-empty: with no B vertices the strict bounds on
/// A' cannot hold.
pub fn lemma5_check(
    g: &SimpleGraph,
    a: &VertexSet,
    b: &VertexSet,
) -> Result<Lemma5Report, LemmaError> {
    let n = g.n();
    let a = VertexSet::within(n, a.iter().copied())?;
    let b = VertexSet::within(n, b.iter().copied())?;
    if !a.is_disjoint(&b) || a.len() + b.len() != n {
        return Err(LemmaError::NotAPartition);
    }
    if b.is_empty() {
        return Err(LemmaError::EmptyB);
    }
    let in_a = a.indicator(n);
    if let Some(&(u, v)) = g.edges().iter().find(|&&(u, v)| in_a[u] == in_a[v]) {
        return Err(LemmaError::NotBipartite(u, v));
    }
    if !planar(g) {
        return Err(LemmaError::NotPlanar);
    }
    // every edge crosses, so e(A, B) = e(G) and d(v) counts B neighbours
    let e_ab = g.edge_count();
    let degree_two = a.iter().filter(|&&v| g.degree(v) == 2).count();
    let a_prime = VertexSet::new(a.iter().copied().filter(|&v| g.degree(v) >= 3)).unwrap();
    let e_a_prime_b: usize = a_prime.iter().map(|&v| g.degree(v)).sum();
    let bound = e_ab as i64 - n as i64 - 3 * b.len() as i64;
    Ok(Lemma5Report {
        n,
        a_size: a.len(),
        b_size: b.len(),
        e_ab,
        degree_two,
        degree_two_ok: degree_two as i64 >= bound,
        a_prime_ok: a_prime.len() < 2 * b.len(),
        e_a_prime_ok: e_a_prime_b < 6 * b.len(),
        a_prime,
        e_a_prime_b,
        degree_two_bound: bound,
    })
}
