//! Clique-minor testing by exhaustive contraction.
//!
//! A graph has a K_t minor iff some sequence of edge contractions produces a
//! graph containing K_t as a subgraph. The search contracts edges one at a
//! time and remembers every contracted graph already refuted. Before
//! branching, for t >= 4, vertices of degree at most one are deleted and
//! vertices of degree two are suppressed; neither changes the answer.
//! Components are searched separately.

use std::collections::HashSet;

use crate::caps::{CapExceeded, Caps};
use crate::graph::SimpleGraph;

pub fn has_clique_minor(g: &SimpleGraph, t: usize) -> Result<bool, CapExceeded> {
    has_clique_minor_with(g, t, &Caps::from_env())
}

pub fn has_clique_minor_with(g: &SimpleGraph, t: usize, caps: &Caps) -> Result<bool, CapExceeded> {
    Caps::check(
        "vertex count",
        g.n() as u128,
        caps.minor_vertices.min(64) as u128,
    )?;
    let adj: Vec<u64> = (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
        .collect();
    let m = g.edge_count();
    Ok(match t {
        0 => true,
        1 => g.n() >= 1,
        2 => m >= 1,
        // a cycle exists
        3 => m + g.component_count() > g.n(),
        _ => {
            let mut refuted = HashSet::new();
            search(adj, t, &mut refuted)
        }
    })
}

fn edge_count(adj: &[u64]) -> usize {
    adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
}

/// Drops vertex `v`, shifting the higher ids down by one.
fn remove_vertex(adj: &mut Vec<u64>, v: usize) {
    adj.remove(v);
    let low = (1u64 << v) - 1;
    for m in adj.iter_mut() {
        *m = (*m & low) | (m.checked_shr(v as u32 + 1).unwrap_or(0) << v);
    }
}

fn reduce(adj: &mut Vec<u64>) {
    loop {
        let Some(v) = (0..adj.len()).find(|&v| adj[v].count_ones() <= 2) else {
            return;
        };
        let nb = adj[v];
        if nb.count_ones() == 2 {
            let a = nb.trailing_zeros() as usize;
            let b = 63 - nb.leading_zeros() as usize;
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        for row in adj.iter_mut() {
            *row &= !(1 << v);
        }
        remove_vertex(adj, v);
    }
}

fn components(adj: &[u64]) -> Vec<u64> {
    let n = adj.len();
    let mut left: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut out = Vec::new();
    while left != 0 {
        let s = left.trailing_zeros() as usize;
        let mut comp = 1u64 << s;
        let mut frontier = comp;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let new = adj[v] & !comp;
            comp |= new;
            frontier |= new;
        }
        left &= !comp;
        out.push(comp);
    }
    out
}

fn induced(adj: &[u64], keep: u64) -> Vec<u64> {
    let mut sub = adj.to_vec();
    for v in (0..adj.len()).rev() {
        if keep >> v & 1 == 0 {
            remove_vertex(&mut sub, v);
        }
    }
    sub
}

/// K_t as a subgraph, among vertices of degree >= t - 1.
fn has_clique(adj: &[u64], t: usize) -> bool {
    fn grow(adj: &[u64], cand: u64, need: usize) -> bool {
        if need == 0 {
            return true;
        }
        if (cand.count_ones() as usize) < need {
            return false;
        }
        let mut rest = cand;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if grow(adj, rest & adj[v], need - 1) {
                return true;
            }
        }
        false
    }
    let cand = (0..adj.len())
        .filter(|&v| adj[v].count_ones() as usize + 1 >= t)
        .fold(0u64, |m, v| m | 1 << v);
    grow(adj, cand, t)
}

fn search(mut adj: Vec<u64>, t: usize, refuted: &mut HashSet<Vec<u64>>) -> bool {
    reduce(&mut adj);
    let comps = components(&adj);
    if comps.len() > 1 {
        return comps
            .into_iter()
            .any(|c| search(induced(&adj, c), t, refuted));
    }
    let n = adj.len();
    if n < t || edge_count(&adj) < t * (t - 1) / 2 {
        return false;
    }
    if has_clique(&adj, t) {
        return true;
    }
    if !refuted.insert(adj.clone()) {
        return false;
    }
    for u in 0..n {
        let mut higher = adj[u] & u64::MAX.checked_shl(u as u32 + 1).unwrap_or(0);
        while higher != 0 {
            let v = higher.trailing_zeros() as usize;
            higher &= higher - 1;
            let mut next = adj.clone();
            next[u] |= next[v];
            for row in next.iter_mut() {
                if *row >> v & 1 == 1 {
                    *row = (*row & !(1 << v)) | 1 << u;
                }
            }
            next[u] &= !(1 << u);
            remove_vertex(&mut next, v);
            if search(next, t, refuted) {
                return true;
            }
        }
    }
    false
}
